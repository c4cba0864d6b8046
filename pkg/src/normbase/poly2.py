"""Arithmetic in GF(2)[x] and in the cyclic quotient ring GF(2)[x]/(x^n - 1).

Polynomials over GF(2) are plain Python integers: bit i holds the
coefficient of x^i.  The integer encoding is automatically canonical (no
stored leading zeros) and the zero polynomial is 0.  Addition is xor.

Elements of GF(2)[x]/(x^n - 1) keep their ring size explicitly and never
canonicalize: a CyclicPoly stores exactly n coefficient bits, so the usual
identification between length-n bit vectors and ring elements stays
positional and lossless.  Cyclic ring values double as coefficient vectors
throughout the package (trace vectors, basis-change coefficients).

Text formats: "x^16+x^5+x^3+x^2+1" (terms in any order, duplicates
rejected) or LSB-first hex "0x1002D".  Bit vectors render as "1,0,1,...".
"""

from __future__ import annotations

from dataclasses import dataclass


# ---------- GF(2)[x] on plain ints ----------

def degree(a: int) -> int | None:
    """Degree of polynomial a, or None for the zero polynomial."""
    return None if a == 0 else a.bit_length() - 1


def poly_add(a: int, b: int) -> int:
    """Add (equivalently subtract) polynomials a and b."""
    return a ^ b


def poly_mul(a: int, b: int) -> int:
    """Multiply polynomials a and b (carry-less schoolbook)."""
    if a < b:
        a, b = b, a
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    """Divide a by b with remainder; returns (q, r) with a = q*b + r."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: int, b: int) -> int:
    """Reduce a modulo b, for nonzero b."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def poly_gcd(a: int, b: int) -> int:
    """Greatest common divisor of a and b (not both zero)."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended GCD: returns (g, u, v) with u*a + v*b = g = gcd(a, b)."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    u, u1 = 1, 0
    v, v1 = 0, 1
    while b:
        q, r = poly_divmod(a, b)
        a, b = b, r
        u, u1 = u1, u ^ poly_mul(q, u1)
        v, v1 = v1, v ^ poly_mul(q, v1)
    return a, u, v


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: int) -> bool:
    """Test f for irreducibility over GF(2).

    Uses the standard criterion: x^(2^n) = x (mod f) and, for every prime
    p dividing n = deg f, gcd(x^(2^(n/p)) - x, f) = 1.  Constants are not
    irreducible.
    """
    n = degree(f)
    if n is None or n < 1:
        return False
    if n == 1:
        return True
    checkpoints = {n // p for p in _prime_factors(n)}
    h = 2  # the polynomial x
    for i in range(1, n + 1):
        h = poly_mod(poly_mul(h, h), f)
        if i in checkpoints and poly_gcd(h ^ 2, f) != 1:
            return False
    return h == 2


def find_irreducible(n: int) -> int:
    """Smallest (by integer encoding) irreducible polynomial of degree n."""
    if n < 1:
        raise ValueError("degree must be positive")
    for f in range(1 << n, 1 << (n + 1)):
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")


# ---------- text formats ----------

def poly_to_text(a: int) -> str:
    """Render a as a sum of powers of x, highest degree first."""
    if a == 0:
        return "0"
    terms = []
    for i in range(a.bit_length() - 1, -1, -1):
        if (a >> i) & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


def parse_poly(text: str) -> int:
    """Parse "x^5+x+1" / "0x23" / "0" into a polynomial."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial")
    if s.lower().startswith("0x"):
        try:
            return int(s, 16)
        except ValueError:
            raise ValueError(f"bad hex polynomial {text!r}") from None
    if s == "0":
        return 0
    a = 0
    for term in s.split("+"):
        if term == "1":
            t = 1
        elif term == "x":
            t = 2
        elif term.startswith("x^"):
            try:
                k = int(term[2:])
            except ValueError:
                raise ValueError(f"bad term {term!r} in polynomial {text!r}") from None
            if k < 0:
                raise ValueError(f"negative exponent in {text!r}")
            t = 1 << k
        else:
            raise ValueError(f"bad term {term!r} in polynomial {text!r}")
        if a & t:
            raise ValueError(f"duplicate term {term!r} in polynomial {text!r}")
        a ^= t
    return a


# ---------- the cyclic ring GF(2)[x]/(x^n - 1) ----------

@dataclass(frozen=True)
class CyclicPoly:
    """A polynomial in GF(2)[x]/(x^n - 1); equivalently a length-n bit vector."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ring size must be positive")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"coefficients do not fit ring size {self.n}")

    @classmethod
    def from_coeffs(cls, coeffs) -> "CyclicPoly":
        """Build from an iterable of 0/1 coefficients, index i = coeff of x^i."""
        coeffs = list(coeffs)
        bits = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError("coefficients must be 0 or 1")
            bits |= c << i
        return cls(len(coeffs), bits)

    @classmethod
    def from_support(cls, n: int, support) -> "CyclicPoly":
        """Build from the set of indices carrying coefficient 1."""
        bits = 0
        for i in support:
            if not 0 <= i < n:
                raise ValueError(f"support index {i} outside [0, {n})")
            bits |= 1 << i
        return cls(n, bits)

    def coeff(self, i: int) -> int:
        return (self.bits >> (i % self.n)) & 1

    def coeffs(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.n)]

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if (self.bits >> i) & 1)

    def weight(self) -> int:
        return self.bits.bit_count()

    def to_text(self) -> str:
        return poly_to_text(self.bits)

    def __str__(self):
        return ",".join(str(b) for b in self.coeffs())


def parse_vector(text: str) -> CyclicPoly:
    """Parse a comma-separated bit vector "1,0,1" into a CyclicPoly."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p not in ("0", "1") for p in parts):
        raise ValueError(f"bad bit vector {text!r}")
    return CyclicPoly.from_coeffs(int(p) for p in parts)


def ring_modulus(n: int) -> int:
    """The polynomial x^n - 1 (equals x^n + 1 over GF(2))."""
    return (1 << n) | 1


def _check_sizes(a: CyclicPoly, b: CyclicPoly):
    if a.n != b.n:
        raise ValueError(f"ring size mismatch: {a.n} != {b.n}")


def cyclic_mul(a: CyclicPoly, b: CyclicPoly) -> CyclicPoly:
    """Product in GF(2)[x]/(x^n - 1)."""
    _check_sizes(a, b)
    prod = poly_mul(a.bits, b.bits)
    # deg(prod) <= 2n-2, so folding the high words once suffices
    return CyclicPoly(a.n, (prod & ((1 << a.n) - 1)) ^ (prod >> a.n))


def cyclic_inv(f: CyclicPoly) -> CyclicPoly:
    """Inverse of f modulo x^n - 1, for f coprime to x^n - 1."""
    m = ring_modulus(f.n)
    g, u, _ = poly_ext_gcd(f.bits, m) if f.bits else (m, 0, 1)
    if g != 1:
        raise ZeroDivisionError(
            f"not invertible modulo x^{f.n}-1: shares factor {poly_to_text(g)}")
    return CyclicPoly(f.n, poly_mod(u, m))


def reciprocal(g: CyclicPoly) -> CyclicPoly:
    """Reciprocal polynomial: coefficient at i moves to n - i, index 0 fixed."""
    r = g.bits & 1
    for i in range(1, g.n):
        if (g.bits >> i) & 1:
            r |= 1 << (g.n - i)
    return CyclicPoly(g.n, r)


def is_symmetric(f: CyclicPoly) -> bool:
    """True iff f equals its reciprocal (coefficients satisfy a_i = a_{n-i})."""
    return f == reciprocal(f)


def is_unit_mod_cyclic(f: CyclicPoly) -> bool:
    """True iff gcd(f, x^n - 1) = 1, i.e. f is invertible in the cyclic ring."""
    return f.bits != 0 and poly_gcd(f.bits, ring_modulus(f.n)) == 1
