"""Exact arithmetic in the field Q[sqrt(2)] and Sturm root counting.

The dominance analysis of the central band compares integer invariant gaps
against polynomial bounds whose coefficients live in Q[sqrt(2)].  The
decisive root lies within one unit of an integer, so every sign here is
decided exactly: sign(a + b*sqrt(2)) reduces to comparing a^2 with 2*b^2,
never to floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class QuadNumber:
    """The real number ``a + b*sqrt(2)`` with rational a, b."""

    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, a, b=0) -> "QuadNumber":
        return cls(Fraction(a), Fraction(b))

    def __add__(self, other):
        other = _coerce(other)
        return QuadNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        return QuadNumber(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadNumber":
        den = self.a * self.a - 2 * self.b * self.b
        if den == 0:
            raise ZeroDivisionError("division by zero in Q[sqrt(2)]")
        return QuadNumber(self.a / den, -self.b / den)

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def sign(self) -> int:
        """Exact sign, decided by comparing a^2 against 2 b^2."""
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        big_a = a * a > 2 * b * b  # |a| dominates |b*sqrt(2)|; never equal for a,b != 0
        if a > 0:
            return 1 if big_a else -1
        return -1 if big_a else 1

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __lt__(self, other):
        return (self - _coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - _coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - _coerce(other)).sign() >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 2**0.5

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt(2)"


def _coerce(x) -> QuadNumber:
    if isinstance(x, QuadNumber):
        return x
    return QuadNumber(Fraction(x), Fraction(0))


_ZERO = QuadNumber.of(0)


class QuadPolynomial:
    """Polynomial with QuadNumber coefficients, ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> QuadNumber:
        if self.is_zero():
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x) -> QuadNumber:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * _coerce(x) + c
        return acc

    def derivative(self) -> "QuadPolynomial":
        return QuadPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __sub__(self, other: "QuadPolynomial") -> "QuadPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(size):
            a = self.coeffs[i] if i < len(self.coeffs) else _ZERO
            b = other.coeffs[i] if i < len(other.coeffs) else _ZERO
            out.append(a - b)
        return QuadPolynomial(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __mod__(self, other: "QuadPolynomial") -> "QuadPolynomial":
        """Remainder of field division."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree()
        inv_lead = other.leading().inverse()
        while len(rem) - 1 >= d and rem:
            if rem[-1].is_zero():
                rem.pop()
                continue
            factor = rem[-1] * inv_lead
            shift = len(rem) - 1 - d
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
            rem.pop()
        return QuadPolynomial(rem)

    def __repr__(self) -> str:
        return f"QuadPolynomial({list(self.coeffs)!r})"


def sturm_sequence(f: QuadPolynomial) -> list:
    """The chain f, f', then successive negated remainders."""
    if f.is_zero():
        raise DomainError("Sturm sequence of the zero polynomial")
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        rem = chain[-2] % chain[-1]
        if rem.is_zero():
            break
        chain.append(QuadPolynomial([-c for c in rem.coeffs]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def sign_variations(chain, x) -> int:
    signs = [p(x).sign() for p in chain]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(f: QuadPolynomial, lo, hi) -> int:
    """Distinct real roots of f in the half-open interval (lo, hi].

    Requires ``f(lo) != 0``; a root exactly at ``hi`` is counted (the
    variation count is right-continuous at roots).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise DomainError("interval must satisfy lo < hi")
    if f(lo).sign() == 0:
        raise DomainError("f(lo) = 0: perturb the left endpoint")
    chain = sturm_sequence(f)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def refine_root(f: QuadPolynomial, lo, hi, width) -> tuple:
    """Shrink a bracket [lo, hi] with a sign change to the given width.

    Bisection in exact rationals; returns the final (lo, hi).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    width = Fraction(width)
    slo = f(lo).sign()
    if slo == 0 or slo == f(hi).sign():
        raise DomainError("bracket endpoints must have opposite nonzero signs")
    while hi - lo > width:
        mid = (lo + hi) / 2
        smid = f(mid).sign()
        if smid == 0:
            return (mid, mid)
        if smid == slo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


def _eighth(a, b=0) -> QuadNumber:
    return QuadNumber.of(Fraction(a, 8), Fraction(b, 8))


#: Lower bound, as a polynomial in n, for the gap between the
#: quasi-complete and quasi-star h-invariants inside the central band.
GAP_LOWER = QuadPolynomial(
    [_eighth(72), _eighth(-46, -226), _eighth(19, 76), _eighth(-20, -37), _eighth(3, -2)]
)

#: Upper bound for the spread among the three quasi-star variants.
SPREAD_UPPER = QuadPolynomial([_eighth(4), _eighth(0, -16), _eighth(-2), _eighth(0, 2)])

#: Dominance margin: gap bound minus spread bound.  Once this is positive,
#: the C-side family beats every S-side family.  Expanded coefficients are
#: written out and unit-tested against GAP_LOWER - SPREAD_UPPER.
MARGIN = QuadPolynomial(
    [_eighth(68), _eighth(-46, -210), _eighth(21, 76), _eighth(-20, -39), _eighth(3, -2)]
)


def eval_gap_lower(x) -> QuadNumber:
    return GAP_LOWER(Fraction(x))


def eval_spread_upper(x) -> QuadNumber:
    return SPREAD_UPPER(Fraction(x))


def eval_margin(x) -> QuadNumber:
    return MARGIN(Fraction(x))


@dataclass(frozen=True)
class BandBoundsReport:
    """Outcome of the two band inequalities at one (n, m) pair."""

    n: int
    m: int
    gap_ok: bool
    spread_ok: bool
    gap_margin: QuadNumber  # h(C1) - h(S1) - gap_lower(n) >= 0
    spread_margin: QuadNumber  # spread_upper(n) - max |h(Si) - h(Sj)| >= 0

    @property
    def ok(self) -> bool:
        return self.gap_ok and self.spread_ok


def band_bounds_check(n: int, m: int) -> BandBoundsReport:
    """Verify both polynomial bounds at a central-band pair, exactly."""
    from .classify import classify
    from .families import FamilyTag, family_exists
    from .invariants import family_h

    if not classify(n, m).in_J:
        raise DomainError(f"({n},{m}) lies outside the central band")
    h_c1 = family_h(n, m, FamilyTag.C1)
    h_s1 = family_h(n, m, FamilyTag.S1)
    gap_margin = QuadNumber.of(h_c1 - h_s1) - eval_gap_lower(n)
    s_tags = [t for t in (FamilyTag.S1, FamilyTag.S2, FamilyTag.S3) if family_exists(n, m, t)]
    h_vals = [family_h(n, m, t) for t in s_tags]
    spread = max(abs(x - y) for x in h_vals for y in h_vals)
    spread_margin = eval_spread_upper(n) - QuadNumber.of(spread)
    return BandBoundsReport(
        n=n,
        m=m,
        gap_ok=gap_margin.sign() >= 0,
        spread_ok=spread_margin.sign() >= 0,
        gap_margin=gap_margin,
        spread_margin=spread_margin,
    )
