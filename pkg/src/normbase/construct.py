"""End-to-end constructions of normal elements with prescribed vectors.

validate_vector decides achievability per ring-size regime: full
characterizations exist for n a power of two (>= 4, plus the degenerate
n = 1, 2 cases) and for odd n; for other n only necessary conditions are
known, reported as NECESSARY_ONLY.  prescribe runs the construction
pipeline: pick a normal base element, invert its vector in the cyclic
ring, factor the quotient as g * reciprocal(g), and apply g as a basis
change.  compose multiplies prescriptions from the coprime 2-power and odd
subfields; weight3 specializes composition to the minimum-weight vector
available when 4 | n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .factor import _odd_half_sum, factor_2power, factor_odd
from .field import FieldSpec, elem_mul, elem_square, rel_trace
from .normal import (
    TraceVector,
    apply_basis_change,
    corresponding_vector,
    corresponding_vector_in_subfield,
    find_normal,
    is_normal,
)
from .poly2 import (
    CyclicPoly,
    cyclic_inv,
    cyclic_mul,
    is_symmetric,
    poly_gcd,
    poly_to_text,
    ring_modulus,
)


class Status(enum.Enum):
    VALID = "valid"
    INVALID = "invalid"
    NECESSARY_ONLY = "necessary-only"


@dataclass(frozen=True)
class Verdict:
    """Outcome of vector validation with one line per condition checked."""

    status: Status
    reasons: tuple[str, ...]


class InvalidVectorError(ValueError):
    """Raised when a prescribed vector is not achievable (or not known to be)."""

    def __init__(self, verdict: Verdict):
        self.verdict = verdict
        failures = reasons_failed(verdict)
        detail = "; ".join(failures if failures else verdict.reasons)
        super().__init__(f"There isn't such a normal element: {detail}")


def reasons_failed(verdict: Verdict) -> list[str]:
    return [r for r in verdict.reasons if r.startswith("FAIL")]


def _verdict(checks: list[tuple[str, bool]], ok_status: Status, notes: tuple[str, ...] = ()) -> Verdict:
    reasons = tuple(f"{'ok' if passed else 'FAIL'}: {desc}" for desc, passed in checks) + notes
    status = ok_status if all(p for _, p in checks) else Status.INVALID
    return Verdict(status, reasons)


def _is_pow2(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def pow2_odd_split(n: int) -> tuple[int, int]:
    """Decompose n = 2^s * m with m odd; returns (2^s, m)."""
    s2 = n & -n
    return s2, n // s2


def _gcd_check(a: CyclicPoly) -> tuple[bool, str]:
    if a.bits == 0:
        return False, "zero polynomial"
    g = poly_gcd(a.bits, ring_modulus(a.n))
    return g == 1, poly_to_text(g)


def _composite_checks(a: TraceVector, s2: int, m: int) -> list[tuple[str, bool]]:
    # necessary conditions obtained by tracing a normal element down to the
    # GF(2^(2^s)) and GF(2^m) subfields and applying their characterizations
    checks = [("symmetric (a[i] = a[n-i])", is_symmetric(a))]
    r0 = sum(a.coeff(i * s2) for i in range(m)) & 1
    checks.append((f"sum of a[i*{s2}] over i < {m} equals 1", r0 == 1))
    rh = sum(a.coeff(i * s2 + s2 // 2) for i in range(m)) & 1
    checks.append((f"sum of a[i*{s2}+{s2 // 2}] over i < {m} equals 0", rh == 0))
    if s2 >= 4:
        odd = sum(a.coeff(i * s2 + k) for k in range(1, s2 // 2, 2) for i in range(m)) & 1
        checks.append(
            (f"sum of a[i*{s2}+k] over odd k < {s2 // 2} equals 1", odd == 1))
    t = CyclicPoly.from_coeffs(
        sum(a.coeff(i * m + k) for i in range(s2)) & 1 for k in range(m))
    unit, factor_text = _gcd_check(t)
    checks.append(
        (f"odd-part column sums {t} coprime to x^{m}-1"
         + ("" if unit else f" (common factor {factor_text})"), unit))
    return checks


def validate_vector(n: int, a: TraceVector) -> Verdict:
    """Decide whether a length-n vector corresponds to some normal element.

    Returns VALID/INVALID where a full characterization exists (n a power
    of two or odd); for other n the known conditions are only necessary,
    so passing them yields NECESSARY_ONLY.
    """
    if a.n != n:
        raise ValueError(f"vector length mismatch: {a.n} != {n}")
    if n == 1:
        return _verdict([("a[0] = 1", a.coeff(0) == 1)], Status.VALID)
    if n == 2:
        return _verdict(
            [("a[0] = 1", a.coeff(0) == 1), ("a[1] = 0", a.coeff(1) == 0)],
            Status.VALID)
    if _is_pow2(n):
        checks = [
            ("a[0] = 1", a.coeff(0) == 1),
            (f"a[{n // 2}] = 0", a.coeff(n // 2) == 0),
            ("symmetric (a[i] = a[n-i])", is_symmetric(a)),
            (f"sum of a[i] over odd i < {n // 2} equals 1", _odd_half_sum(a) == 1),
        ]
        return _verdict(checks, Status.VALID)
    if n % 2 == 1:
        unit, factor_text = _gcd_check(a)
        checks = [
            ("symmetric (a[i] = a[n-i])", is_symmetric(a)),
            (f"coprime to x^{n}-1" + ("" if unit else f" (common factor {factor_text})"),
             unit),
        ]
        return _verdict(checks, Status.VALID)
    s2, m = pow2_odd_split(n)
    note = (f"conditions for n = {s2}*{m} are necessary only; "
            "sufficiency is open (see compose/weight3 for constructive cases)",)
    return _verdict(_composite_checks(a, s2, m), Status.NECESSARY_ONLY, note)


def necessary_conditions(n: int, a: TraceVector) -> Verdict:
    """Necessary conditions for composite n = 2^s * m with 2^s >= 4 and odd m > 1."""
    if a.n != n:
        raise ValueError(f"vector length mismatch: {a.n} != {n}")
    s2, m = pow2_odd_split(n)
    if s2 < 4 or m == 1:
        raise ValueError(
            f"necessary conditions apply to n = 2^s * m with 2^s >= 4 and odd m > 1, got n = {n}")
    return _verdict(_composite_checks(a, s2, m), Status.NECESSARY_ONLY)


@dataclass(frozen=True)
class Prescription:
    """All intermediate values of one prescription run."""

    spec: FieldSpec
    target: TraceVector
    base: int                       # the normal element the pipeline starts from
    base_vector: CyclicPoly
    base_vector_inverse: CyclicPoly
    quotient: CyclicPoly            # target * base_vector_inverse in the cyclic ring
    change: CyclicPoly              # basis-change coefficients (the factor g)
    element: int
    vector: TraceVector             # recomputed from element; equals target


def _require_valid(n: int, a: TraceVector) -> None:
    verdict = validate_vector(n, a)
    if verdict.status is not Status.VALID:
        raise InvalidVectorError(verdict)


def prescribe_steps(spec: FieldSpec, a: TraceVector, beta: int | None = None) -> Prescription:
    """Run the full prescription pipeline, keeping every intermediate value.

    beta pins the starting normal element (it must be normal);
    by default a deterministic scan picks it.
    """
    n = spec.n
    if not (_is_pow2(n) and n >= 4) and n % 2 == 0:
        raise ValueError(
            f"prescription requires n a power of two >= 4 or odd n, got {n} "
            "(use compose/weight3 for other composite sizes)")
    _require_valid(n, a)
    if beta is None:
        beta = find_normal(spec)
    elif not is_normal(spec, beta):
        raise ValueError("supplied base element is not normal")
    b = corresponding_vector(spec, beta)
    b_inv = cyclic_inv(b)
    h = cyclic_mul(a, b_inv)
    g = factor_2power(h) if n >= 4 and _is_pow2(n) else factor_odd(h)
    alpha = apply_basis_change(spec, beta, g)
    vec = corresponding_vector(spec, alpha)
    if vec != a:
        raise RuntimeError(
            f"prescribed vector mismatch (implementation bug): got {vec}, wanted {a}")
    return Prescription(spec, a, beta, b, b_inv, h, g, alpha, vec)


def prescribe(spec: FieldSpec, a: TraceVector, beta: int | None = None) -> int:
    """A normal element whose corresponding vector equals a (n = 2^s >= 4 or odd)."""
    return prescribe_steps(spec, a, beta).element


def prescribe_in_subfield(spec: FieldSpec, t: int, a: TraceVector) -> int:
    """A GF(2^t)-subfield element, normal there, with subfield vector a.

    Supports t = 2^s >= 4, t odd, and the degenerate t = 1, 2 (where the
    only achievable vectors are (1) and (1,0)).  The pipeline starts from
    the relative trace of an ambient normal element, which is itself
    normal in the subfield.
    """
    if t < 1 or spec.n % t:
        raise ValueError(f"{t} does not divide the extension degree {spec.n}")
    if a.n != t:
        raise ValueError(f"vector length mismatch: {a.n} != {t}")
    if t % 2 == 0 and t > 2 and not _is_pow2(t):
        raise ValueError(
            f"subfield prescription requires t a power of two, t = 2, or odd t, got {t}")
    _require_valid(t, a)
    delta = find_normal(spec)
    alpha0 = rel_trace(spec, delta, t)
    if t <= 2:
        alpha = alpha0  # every normal element of GF(2) / GF(4) has the valid vector
    else:
        b = corresponding_vector_in_subfield(spec, alpha0, t)
        b_inv = cyclic_inv(b)
        h = cyclic_mul(a, b_inv)
        g = factor_2power(h) if _is_pow2(t) else factor_odd(h)
        alpha = 0
        conj = alpha0
        for i in range(t):
            if (g.bits >> i) & 1:
                alpha ^= conj
            conj = elem_square(spec, conj)
    vec = corresponding_vector_in_subfield(spec, alpha, t)
    if vec != a:
        raise RuntimeError(
            f"subfield vector mismatch (implementation bug): got {vec}, wanted {a}")
    return alpha


def compose(spec: FieldSpec, a: TraceVector, b: TraceVector) -> tuple[int, TraceVector]:
    """Multiply prescriptions from the coprime 2-power and odd subfields.

    With n = 2^s * m (m odd), a prescribes the GF(2^(2^s)) part and b the
    GF(2^m) part; the product is normal and its vector is the coordinatewise
    product c_k = a_{k mod 2^s} * b_{k mod m}.  Returns (element, c).
    """
    s2, m = pow2_odd_split(spec.n)
    if a.n != s2:
        raise ValueError(f"2-power part vector must have length {s2}, got {a.n}")
    if b.n != m:
        raise ValueError(f"odd part vector must have length {m}, got {b.n}")
    alpha = prescribe_in_subfield(spec, s2, a)
    beta = prescribe_in_subfield(spec, m, b)
    gamma = elem_mul(spec, alpha, beta)
    bits = 0
    for k in range(spec.n):
        bits |= (a.coeff(k % s2) & b.coeff(k % m)) << k
    c = CyclicPoly(spec.n, bits)
    if corresponding_vector(spec, gamma) != c or not is_normal(spec, gamma):
        raise RuntimeError("composed element fails verification (implementation bug)")
    return gamma, c


def weight3(spec: FieldSpec, i0: int = 1) -> tuple[int, TraceVector]:
    """A normal element whose vector has Hamming weight exactly 3 (4 | n).

    The 2-power part vector puts ones at {0, i0, 2^s - i0} for odd i0; the
    odd part contributes (1, 0, ..., 0).  The product vector has support
    {0, j0*m, n - j0*m} where j0 solves m * j0 = i0 (mod 2^s).
    """
    if spec.n % 4:
        raise ValueError(f"weight-3 construction requires 4 | n, got {spec.n}")
    s2, m = pow2_odd_split(spec.n)
    if i0 % 2 == 0 or not 1 <= i0 <= s2 - 1:
        raise ValueError(f"i0 must be odd and in [1, {s2 - 1}], got {i0}")
    a = CyclicPoly.from_support(s2, {0, i0, s2 - i0})
    b = CyclicPoly(m, 1)
    gamma, c = compose(spec, a, b)
    j0 = (i0 * pow(m, -1, s2)) % s2
    expected = {0, j0 * m, spec.n - j0 * m}
    if c.weight() != 3 or set(c.support()) != expected:
        raise RuntimeError("weight-3 support mismatch (implementation bug)")
    return gamma, c
