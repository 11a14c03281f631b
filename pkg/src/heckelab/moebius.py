"""Exact arithmetic for GL2(Q)+ acting on the upper half-plane.

Matrices act as fractional-linear maps z -> (az+b)/(cz+d).  Points come in
two flavours: CMPoint (exact imaginary quadratic, x + y*sqrt(D) with D < 0
squarefree) and NumericPoint (arbitrary-precision floating point).  The
module also classifies elements (elliptic / parabolic / hyperbolic / scalar),
computes the unique fixed point of an elliptic element, and produces an
elliptic witness matrix fixing a given CM point.
"""

from __future__ import annotations

import enum
import re as _re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath

from .errors import NotElliptic, PrecisionInsufficient

_FRAC_RE = _re.compile(r"-?\d+(?:/\d+)?")


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = m^2 * d with d squarefree and m > 0; return (m, d).

    The sign of n goes into d.  Trial division; intended for desk-scale
    discriminants, not cryptographic sizes.
    """
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    m, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= n
    return m, sign * d


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def fraction_str(x: Fraction) -> str:
    """Serialize a rational: "p/q", with "/1" elided for integers."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    """2x2 rational matrix with positive determinant (an element of GL2(Q)+)."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _frac(getattr(self, name)))
        if self.det() <= 0:
            raise ValueError(f"determinant {self.det()} <= 0: not in GL2(Q)+")

    @classmethod
    def identity(cls) -> "RatMatrix":
        return cls(1, 0, 0, 1)

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Fraction:
        return self.a + self.d

    def disc(self) -> Fraction:
        """tr^2 - 4 det; sign decides the element class."""
        t = self.trace()
        return t * t - 4 * self.det()

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "RatMatrix":
        det = self.det()
        return RatMatrix(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def scale(self, lam) -> "RatMatrix":
        lam = _frac(lam)
        if lam <= 0:
            raise ValueError("only positive scaling preserves GL2(Q)+")
        return RatMatrix(self.a * lam, self.b * lam, self.c * lam, self.d * lam)

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_integral(self) -> bool:
        return all(e.denominator == 1 for e in self.entries())

    def in_sl2z(self) -> bool:
        return self.is_integral() and self.det() == 1

    def normalized(self) -> "RatMatrix":
        """Projective representative with coprime integer entries.

        Scales by a positive rational so entries are integers with gcd 1,
        then flips sign so the first nonzero entry is positive.  The Moebius
        action is invariant under this normalization.
        """
        lcm_den = 1
        for e in self.entries():
            lcm_den = lcm_den * e.denominator // gcd(lcm_den, e.denominator)
        ints = [int(e * lcm_den) for e in self.entries()]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        ints = [v // g for v in ints]
        for v in ints:
            if v != 0:
                if v < 0:
                    ints = [-w for w in ints]
                break
        return RatMatrix(*ints)

    def int_entries(self) -> tuple[int, int, int, int]:
        """Entries of the normalized representative as plain ints."""
        m = self.normalized()
        return tuple(int(e) for e in m.entries())

    def __str__(self) -> str:
        a, b, c, d = (fraction_str(e) for e in self.entries())
        return f"[[{a},{b}],[{c},{d}]]"


def parse_matrix(s: str) -> RatMatrix:
    """Parse "[[a,b],[c,d]]" with integer or p/q entries."""
    tokens = _FRAC_RE.findall(s)
    stripped = _re.sub(r"[\s\[\],]|" + _FRAC_RE.pattern, "", s)
    if len(tokens) != 4 or stripped:
        raise ValueError(f"not a 2x2 matrix literal: {s!r}")
    return RatMatrix(*(Fraction(t) for t in tokens))


@dataclass(frozen=True)
class CMPoint:
    """Exact point x + y*sqrt(D) of the upper half-plane, D < 0 squarefree."""

    D: int
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))
        if self.D >= 0:
            raise ValueError("D must be negative")
        m, d = squarefree_decompose(self.D)
        if m != 1:
            raise ValueError(f"D={self.D} is not squarefree")
        if self.y <= 0:
            raise ValueError("point must lie in the upper half-plane (y > 0)")

    def minimal_polynomial(self) -> tuple[Fraction, Fraction]:
        """(B, C) with tau^2 + B*tau + C = 0 the monic minimal polynomial."""
        return (-2 * self.x, self.x * self.x - self.y * self.y * self.D)

    def to_mpc(self, prec_bits: int = 64) -> mpmath.mpc:
        with mpmath.workprec(prec_bits + 10):
            re = mpmath.mpf(self.x.numerator) / self.x.denominator
            im = (mpmath.mpf(self.y.numerator) / self.y.denominator) * mpmath.sqrt(-self.D)
            return mpmath.mpc(re, im)

    def to_dict(self) -> dict:
        return {"D": self.D, "x": fraction_str(self.x), "y": fraction_str(self.y)}


@dataclass(frozen=True)
class NumericPoint:
    """Floating upper half-plane point with a working-precision tag in bits."""

    re: mpmath.mpf
    im: mpmath.mpf
    prec_bits: int = 64

    def __post_init__(self):
        if self.prec_bits < 64:
            raise ValueError("working precision below 64 bits")
        with mpmath.workprec(self.prec_bits):
            object.__setattr__(self, "re", mpmath.mpf(self.re))
            object.__setattr__(self, "im", mpmath.mpf(self.im))
        if self.im <= 0:
            raise ValueError("point must lie in the upper half-plane (im > 0)")

    def value(self) -> mpmath.mpc:
        return mpmath.mpc(self.re, self.im)


class ElementKind(enum.Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"
    SCALAR = "scalar"


@dataclass(frozen=True)
class ElementClass:
    kind: ElementKind
    disc: Fraction


def classify(g: RatMatrix) -> ElementClass:
    """Classify g by the sign of tr^2 - 4 det; scalars split off first."""
    disc = g.disc()
    if g.b == 0 and g.c == 0 and g.a == g.d:
        return ElementClass(ElementKind.SCALAR, disc)
    if disc < 0:
        return ElementClass(ElementKind.ELLIPTIC, disc)
    if disc == 0:
        return ElementClass(ElementKind.PARABOLIC, disc)
    return ElementClass(ElementKind.HYPERBOLIC, disc)


def act(g: RatMatrix, tau):
    """Apply z -> (az+b)/(cz+d); exact on CMPoint, floating on NumericPoint."""
    if isinstance(tau, CMPoint):
        # (p + q sqrt(D)) / (r + s sqrt(D)), multiplied by the conjugate.
        p = g.a * tau.x + g.b
        q = g.a * tau.y
        r = g.c * tau.x + g.d
        s = g.c * tau.y
        den = r * r - s * s * tau.D
        x1 = (p * r - q * s * tau.D) / den
        y1 = (q * r - p * s) / den
        return CMPoint(tau.D, x1, y1)
    if isinstance(tau, NumericPoint):
        prec = tau.prec_bits
        with mpmath.workprec(prec + 20):
            z = tau.value()
            num = _to_mpf(g.a, prec) * z + _to_mpf(g.b, prec)
            den = _to_mpf(g.c, prec) * z + _to_mpf(g.d, prec)
            w = num / den
        return NumericPoint(w.real, w.imag, prec)
    raise TypeError(f"cannot act on {type(tau).__name__}")


def _to_mpf(x: Fraction, prec_bits: int) -> mpmath.mpf:
    with mpmath.workprec(prec_bits + 20):
        return mpmath.mpf(x.numerator) / x.denominator


def fixed_point(g: RatMatrix) -> CMPoint:
    """The unique fixed point in the upper half-plane of an elliptic g.

    Solves c*z^2 + (d-a)*z - b = 0 exactly; the discriminant tr^2 - 4 det is
    negative, so the root pair is complex conjugate and exactly one root has
    positive imaginary part.
    """
    if classify(g).kind is not ElementKind.ELLIPTIC:
        raise NotElliptic(f"{g} has tr^2-4det = {g.disc()}, no unique fixed point in H")
    a, b, c, d = g.int_entries()
    disc = (a + d) ** 2 - 4 * (a * d - b * c)
    m, D = squarefree_decompose(disc)
    # elliptic forces c != 0: with c = 0 the discriminant is (a-d)^2 >= 0
    x = Fraction(a - d, 2 * c)
    y = Fraction(m, 2 * c)
    if y < 0:
        y = -y
    return CMPoint(D, x, y)


def special_witness(tau: CMPoint) -> RatMatrix:
    """An elliptic integer matrix whose unique fixed point is tau.

    Companion-style matrix [[0,-C],[1,B]] of the monic minimal polynomial
    z^2 + B z + C, cleared to coprime integer entries with the lower-left
    entry kept positive.  fixed_point(special_witness(t)) round-trips
    exactly.
    """
    B, C = tau.minimal_polynomial()
    lcm_den = B.denominator * C.denominator // gcd(B.denominator, C.denominator)
    ints = [0, int(-C * lcm_den), lcm_den, int(B * lcm_den)]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return RatMatrix(*(v // g for v in ints))


@dataclass(frozen=True)
class StabilizerEntry:
    matrix: RatMatrix
    scalar: bool
    displacement: float | None
    moved: bool | None


@dataclass(frozen=True)
class StabilizerReport:
    tol: float
    entries: tuple[StabilizerEntry, ...] = field(default_factory=tuple)

    @property
    def all_nonscalar_moved(self) -> bool:
        return all(e.moved for e in self.entries if not e.scalar)


def stabilizer_is_trivial(tau: NumericPoint, gs, tol: float = 1e-9) -> StabilizerReport:
    """Report, for each non-scalar g in gs, whether |g.tau - tau| > tol.

    Scalars are skipped (they fix everything).  Displacements inside
    [tol/10, tol] are refused with PrecisionInsufficient rather than being
    silently resolved either way.
    """
    entries = []
    with mpmath.workprec(tau.prec_bits + 20):
        z = tau.value()
        for g in gs:
            if classify(g).kind is ElementKind.SCALAR:
                entries.append(StabilizerEntry(g, True, None, None))
                continue
            delta = float(abs(act(g, tau).value() - z))
            if tol / 10 <= delta <= tol:
                raise PrecisionInsufficient(
                    f"|g.tau - tau| = {delta} inside the ambiguous band [{tol/10}, {tol}]"
                )
            entries.append(StabilizerEntry(g, False, delta, delta > tol))
    return StabilizerReport(tol, tuple(entries))
