"""Solving h = g * reciprocal(g) in GF(2)[z]/(z^n - 1).

Two regimes are covered.  For n a power of two the factorable targets form
the set H (symmetric, constant term 1, middle coefficient 0, odd-index
half-sum 0) and each has a unique factor g in the structured set G; that g
is recovered by solving a linear system over GF(2).  For odd n a target
factors iff it is symmetric, and then g_i = h_{2i mod n} gives a symmetric
square root (g * g^* = g^2 = h).
"""

from __future__ import annotations

from typing import Iterator

from .poly2 import CyclicPoly, cyclic_mul, is_symmetric, reciprocal


def _require_pow2(n: int):
    if n < 4 or n & (n - 1):
        raise ValueError(f"ring size must be a power of two >= 4, got {n}")


def _odd_half_sum(f: CyclicPoly) -> int:
    return sum(f.coeff(i) for i in range(1, f.n // 2, 2)) & 1


def in_H(h: CyclicPoly) -> bool:
    """Membership in the factorable set H (ring size a power of two >= 4)."""
    _require_pow2(h.n)
    return (
        h.coeff(0) == 1
        and h.coeff(h.n // 2) == 0
        and is_symmetric(h)
        and _odd_half_sum(h) == 0
    )


def in_G(g: CyclicPoly) -> bool:
    """Membership in the structured factor set G (ring size a power of two >= 4).

    G fixes b_0 = 1, b_{n-1} = 0, b_2 = b_{n-3} = 0 and mirrors
    b_i = b_{n-1-i} for i = 1, 3, 4, ..., n/2 - 1.
    """
    _require_pow2(g.n)
    n = g.n
    if g.coeff(0) != 1 or g.coeff(n - 1) != 0:
        return False
    if g.coeff(2) != 0 or g.coeff(n - 3) != 0:
        return False
    for i in range(1, n // 2):
        if i != 2 and g.coeff(i) != g.coeff(n - 1 - i):
            return False
    return True


def _free_indices(n: int) -> list[int]:
    # the n/2 - 2 free coefficients of a member of G; for n = 4 the
    # b_{n-3} = b_1 = 0 constraint pins the lone candidate, so G = {1}
    if n == 4:
        return []
    return [1] + list(range(3, n // 2))


def _g_from_assignment(n: int, free: list[int], values) -> CyclicPoly:
    bits = 1
    for idx, v in zip(free, values):
        if v:
            bits |= (1 << idx) | (1 << (n - 1 - idx))
    return CyclicPoly(n, bits)


def iter_G(n: int) -> Iterator[CyclicPoly]:
    """All members of G in ascending order of their free-coefficient encoding."""
    _require_pow2(n)
    free = _free_indices(n)
    for pattern in range(1 << len(free)):
        yield _g_from_assignment(n, free, [(pattern >> k) & 1 for k in range(len(free))])


def iter_H(n: int) -> Iterator[CyclicPoly]:
    """All members of H, enumerated over free symmetric patterns."""
    _require_pow2(n)
    half = n // 2
    for pattern in range(1 << (half - 1)):
        bits = 1
        for k in range(1, half):
            if (pattern >> (k - 1)) & 1:
                bits |= (1 << k) | (1 << (n - k))
        h = CyclicPoly(n, bits)
        if _odd_half_sum(h) == 0:
            yield h


def _solve_unique_gf2(rows: list[int], rhs: list[int], width: int) -> list[int]:
    """Solve a GF(2) system known to have exactly one solution.

    Rows are bit masks over `width` unknowns.  Raises RuntimeError if the
    system turns out rank-deficient or inconsistent, which would mean the
    caller fed it a target outside the guaranteed regime.
    """
    rows = list(rows)
    rhs = list(rhs)
    m = len(rows)
    pivot_row = {}
    r = 0
    for c in range(width):
        bit = 1 << c
        p = next((i for i in range(r, m) if rows[i] & bit), None)
        if p is None:
            raise RuntimeError("factorization system is rank-deficient (implementation bug)")
        rows[r], rows[p] = rows[p], rows[r]
        rhs[r], rhs[p] = rhs[p], rhs[r]
        for i in range(m):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
                rhs[i] ^= rhs[r]
        pivot_row[c] = r
        r += 1
    for i in range(r, m):
        if rhs[i]:
            raise RuntimeError("factorization system is inconsistent (implementation bug)")
    return [rhs[pivot_row[c]] for c in range(width)]


def factor_2power(h: CyclicPoly) -> CyclicPoly:
    """The unique g in G with g * reciprocal(g) = h, for h in H.

    For n >= 16 the product equations are linear over the free coefficients
    of G: with z_0 = 1 and z_2 = 0 fixed, coefficient j of the product is
    z_j + z_{j-1} for even j and z_j + z_{j-1} + z_{(n-1-j)/2} + z_{(j-1)/2}
    for odd j (1 <= j <= n/2 - 1; repeated indices cancel).  For n = 4, 8
    the handful of G members is searched directly.
    """
    if not in_H(h):
        raise ValueError(
            "no structured factorization: polynomial is outside the set H "
            "(needs constant term 1, middle coefficient 0, symmetry, odd-index half-sum 0)")
    n = h.n
    if n <= 8:
        matches = [g for g in iter_G(n) if verify_factorization(h, g)]
        if len(matches) != 1:
            raise RuntimeError(f"expected exactly one factor in G, found {len(matches)}")
        return matches[0]

    free = _free_indices(n)
    col = {idx: pos for pos, idx in enumerate(free)}
    rows, rhs = [], []
    for j in range(1, n // 2):
        if j % 2 == 0:
            terms = (j, j - 1)
        else:
            terms = (j, j - 1, (n - 1 - j) // 2, (j - 1) // 2)
        row = const = 0
        for z in terms:
            if z == 0:
                const ^= 1
            elif z != 2:
                row ^= 1 << col[z]
        rows.append(row)
        rhs.append(h.coeff(j) ^ const)
    solution = _solve_unique_gf2(rows, rhs, len(free))
    g = _g_from_assignment(n, free, solution)
    if not verify_factorization(h, g):
        raise RuntimeError("solved factor fails verification (implementation bug)")
    return g


def factor_odd(h: CyclicPoly) -> CyclicPoly:
    """The symmetric square root g (g_i = h_{2i mod n}) of a symmetric h, odd n."""
    if h.n % 2 == 0:
        raise ValueError(f"ring size must be odd, got {h.n}")
    if not is_symmetric(h):
        raise ValueError("no factorization: polynomial is not symmetric")
    bits = 0
    for i in range(h.n):
        if h.coeff((2 * i) % h.n):
            bits |= 1 << i
    return CyclicPoly(h.n, bits)


def verify_factorization(h: CyclicPoly, g: CyclicPoly) -> bool:
    """True iff g * reciprocal(g) = h in the cyclic ring."""
    if h.n != g.n:
        raise ValueError(f"ring size mismatch: {h.n} != {g.n}")
    return cyclic_mul(g, reciprocal(g)) == h
