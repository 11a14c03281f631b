"""Double-coset representatives and modular polynomials for the j-line.

The degree-n correspondence is carried by the upper-triangular matrices
(a,b;0,d) with ad = n, 0 <= b < d.  The modular polynomial Phi_n is
reconstructed by interpolation: expand j((a*tau+b)/d) as a series in
w = q^{1/n} with complex coefficients, form prod (Y - j o rep), and peel
the resulting coefficient series against exact integer powers of the
j-series until everything is recognized as an integer polynomial in X.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import gcd

import mpmath
import numpy

from .errors import IllConditioned, NotSquarefree, PrecisionExhausted
from .moebius import RatMatrix
from .qexp import j_coefficients, j_power_coefficients

RECOGNITION_TOL = 1e-3
RESIDUAL_TOL = 1e-6


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    return True


def psi(n: int) -> int:
    """n * prod_{p|n} (1 + 1/p), the coset count for squarefree n."""
    out, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            out = out // p * (p + 1)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out = out // m * (m + 1)
    return out


@dataclass(frozen=True)
class CosetDecomposition:
    n: int
    reps: tuple[RatMatrix, ...]
    notes: str = "standard upper-triangular representatives"


def double_coset_reps(n: int) -> CosetDecomposition:
    """Representatives (a,b;0,d), ad = n, 0 <= b < d, disjointness verified."""
    if not 1 <= n <= 50:
        raise ValueError("n out of the supported range 1..50")
    if not is_squarefree(n):
        raise NotSquarefree(f"n={n} has a square factor")
    reps = []
    for a in range(1, n + 1):
        if n % a:
            continue
        d = n // a
        for b in range(d):
            if gcd(gcd(a, b), d) == 1:
                reps.append(RatMatrix(a, b, 0, d))
    assert len(reps) == psi(n)
    assert verify_disjoint(reps)
    return CosetDecomposition(n, tuple(reps))


def verify_disjoint(reps) -> bool:
    """Cosets Gamma*h_i pairwise disjoint: h_i h_j^-1, cleared to coprime
    integers, has determinant != 1 for i != j (det 1 would put it in
    +-SL2(Z), merging the cosets)."""
    for i, hi in enumerate(reps):
        for hj in reps[i + 1 :]:
            if (hi * hj.inverse()).normalized().det() == 1:
                return False
    return True


# ---------------------------------------------------------------------------
# Laurent series in w = q^{1/n} with complex coefficients


class WSeries:
    """Dense coefficients for exponents lo .. hi inclusive."""

    __slots__ = ("lo", "hi", "coeffs")

    def __init__(self, lo: int, coeffs: list):
        self.lo = lo
        self.coeffs = coeffs
        self.hi = lo + len(coeffs) - 1

    @classmethod
    def constant(cls, value, hi: int):
        return cls(0, [value] + [mpmath.mpc(0)] * hi)

    def get(self, e: int):
        if self.lo <= e <= self.hi:
            return self.coeffs[e - self.lo]
        return mpmath.mpc(0)

    def mul(self, other: "WSeries", hi_cap: int) -> "WSeries":
        lo = self.lo + other.lo
        out = [mpmath.mpc(0)] * (hi_cap - lo + 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            ei = self.lo + i
            jmax = min(len(other.coeffs), hi_cap - ei - other.lo + 1)
            for jj in range(jmax):
                cj = other.coeffs[jj]
                if cj != 0:
                    out[ei + other.lo + jj - lo] += ci * cj
        return WSeries(lo, out)

    def sub(self, other: "WSeries") -> "WSeries":
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [
            self.get(e) - other.get(e) for e in range(lo, hi + 1)
        ]
        return WSeries(lo, out)

    def neg(self) -> "WSeries":
        return WSeries(self.lo, [-c for c in self.coeffs])


def _rep_series(a: int, b: int, d: int, n: int, terms: int, hi_cap: int) -> WSeries:
    """j((a*tau+b)/d) as a series in w = q^{1/n}: sum c_m zeta_d^{bm} w^{a^2 m}."""
    coeffs = j_coefficients(terms)
    stride = a * a
    zeta_pows = [mpmath.exp(2j * mpmath.pi * k / d) for k in range(d)]
    lo = -stride
    out = [mpmath.mpc(0)] * (hi_cap - lo + 1)
    for m in range(-1, terms):
        e = stride * m
        if e > hi_cap:
            break
        out[e - lo] = coeffs[m + 1] * zeta_pows[(b * m) % d]
    return WSeries(lo, out)


@dataclass(frozen=True)
class ModularPolynomial:
    n: int
    coeffs: dict = field(compare=False)
    degX: int = 0
    degY: int = 0

    @classmethod
    def from_map(cls, n: int, coeffs: dict) -> "ModularPolynomial":
        coeffs = {k: v for k, v in coeffs.items() if v}
        degX = max((i for i, _ in coeffs), default=0)
        degY = max((j for _, j in coeffs), default=0)
        return cls(n, coeffs, degX, degY)

    def coefficient(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)

    def is_symmetric(self) -> bool:
        return all(self.coefficient(j, i) == c for (i, j), c in self.coeffs.items())

    def evaluate(self, x, y):
        xs = [1]
        for _ in range(self.degX):
            xs.append(xs[-1] * x)
        ys = [1]
        for _ in range(self.degY):
            ys.append(ys[-1] * y)
        total = 0
        for (i, j), c in sorted(self.coeffs.items()):
            total += c * xs[i] * ys[j]
        return total

    def max_monomial(self, x, y) -> float:
        ax, ay = abs(x), abs(y)
        best = 0.0
        for (i, j), c in self.coeffs.items():
            m = abs(c) * ax ** i * ay ** j
            if m > best:
                best = float(m)
        return best

    def residual(self, x, y) -> float:
        """|Phi(x,y)| relative to the largest monomial at the point."""
        return float(abs(self.evaluate(x, y))) / (1.0 + self.max_monomial(x, y))

    def y_coefficients_at(self, x) -> list:
        """Coefficients of Phi(x, Y) by descending Y-power."""
        out = []
        for j in range(self.degY, -1, -1):
            c = 0
            for i in range(self.degX + 1):
                cij = self.coefficient(i, j)
                if cij:
                    c += cij * x ** i
            out.append(c)
        return out

    def to_text(self) -> str:
        lines = [f"MODPOLY {self.n} {self.degX} {self.degY}"]
        for (i, j) in sorted(self.coeffs):
            lines.append(f"{i} {j} {self.coeffs[(i, j)]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ModularPolynomial":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if head[0] != "MODPOLY":
            raise ValueError("missing MODPOLY header")
        n, degX, degY = int(head[1]), int(head[2]), int(head[3])
        coeffs = {}
        for ln in lines[1:]:
            i, j, c = ln.split()
            coeffs[(int(i), int(j))] = int(c)
        phi = cls.from_map(n, coeffs)
        if phi.degX != degX or phi.degY != degY:
            raise ValueError("degree header disagrees with coefficient lines")
        return phi


def _interpolate(n: int, terms: int, prec_bits: int) -> ModularPolynomial:
    reps = double_coset_reps(n).reps
    deg = len(reps)
    total_pole = sum(int(r.a) ** 2 for r in reps)
    hi_cap = terms - 1 + total_pole
    with mpmath.workprec(prec_bits):
        factors = [
            _rep_series(int(r.a), int(r.b), int(r.d), n, terms + total_pole, hi_cap)
            for r in reps
        ]
        # prod (Y - s_i): list index = Y-degree, entries are WSeries
        poly = [WSeries.constant(mpmath.mpc(1), hi_cap)]
        for s in factors:
            nxt = [s.neg().mul(poly[0], hi_cap)]
            for k in range(1, len(poly) + 1):
                term = poly[k - 1]
                if k < len(poly):
                    term = term.sub(s.mul(poly[k], hi_cap))
                nxt.append(term)
            poly = nxt
        # safe zone: coefficients of the product are exact up to terms-1
        tq = (terms - 1 - total_pole) // n
        coeff_map = {(0, deg): 1}
        max_seen = 1.0
        residual_max = 0.0
        for ydeg in range(deg):
            fq = _collapse_to_q(poly[ydeg], n, tq)
            pole = -min(fq)
            work = dict(fq)
            for M in range(pole, -1, -1):
                alpha_c = work.get(-M, mpmath.mpc(0))
                alpha = _recognize_int(alpha_c)
                if alpha is None:
                    raise PrecisionExhausted(
                        f"coefficient at X^{M} Y^{ydeg} not near an integer: {alpha_c}"
                    )
                if alpha:
                    jm = j_power_coefficients(M, tq + 1)
                    for t in range(-M, tq + 1):
                        work[t] = work.get(t, mpmath.mpc(0)) - alpha * jm[t + M]
                    coeff_map[(M, ydeg)] = alpha
                    max_seen = max(max_seen, abs(alpha))
            for t, v in work.items():
                if t <= tq:
                    residual_max = max(residual_max, float(abs(v)))
        if residual_max / (1.0 + max_seen) > RESIDUAL_TOL:
            raise PrecisionExhausted(
                f"post-rounding residual {residual_max:.3e} too large"
            )
    return ModularPolynomial.from_map(n, coeff_map)


def _collapse_to_q(ws: WSeries, n: int, tq: int) -> dict:
    """w-series to q-series; exponents not divisible by n must be negligible."""
    scale = 1.0 + max(float(abs(c)) for c in ws.coeffs)
    out = {}
    for e in range(ws.lo, min(ws.hi, tq * n) + 1):
        c = ws.get(e)
        if e % n:
            if float(abs(c)) / scale > RESIDUAL_TOL:
                raise PrecisionExhausted(
                    f"fractional q-exponent {e}/{n} carries weight {float(abs(c)):.3e}"
                )
        else:
            out[e // n] = c
    return out


def _recognize_int(value) -> int | None:
    """Round to the nearest integer within the recognition tolerance."""
    if abs(float(value.imag)) > RECOGNITION_TOL:
        return None
    nearest = int(mpmath.nint(value.real))
    if abs(value.real - nearest) > RECOGNITION_TOL:
        return None
    return nearest


def modular_polynomial(n: int, terms: int = 64, prec_bits: int = 256,
                       max_retries: int = 2) -> ModularPolynomial:
    """Phi_n with exact integer coefficients; n in {1,2,3} computed directly.

    On PrecisionExhausted the series depth and precision are doubled, up to
    max_retries times.
    """
    if n == 1:
        return ModularPolynomial.from_map(1, {(1, 0): 1, (0, 1): -1})
    if n not in (2, 3):
        raise ValueError("only n in {1,2,3} is computed here; load larger n from cache")
    attempt = 0
    while True:
        try:
            return _interpolate(n, terms, prec_bits)
        except PrecisionExhausted:
            if attempt >= max_retries:
                raise
            attempt += 1
            terms *= 2
            prec_bits *= 2


def save_modpoly(phi: ModularPolynomial, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(phi.to_text())


def load_modpoly(path: str) -> ModularPolynomial:
    with open(path) as fh:
        return ModularPolynomial.from_text(fh.read())


def cached_modular_polynomial(n: int, cache_dir: str | None = None,
                              **kwargs) -> ModularPolynomial:
    """Look up phi_n in the cache directory before computing it."""
    if cache_dir is None:
        cache_dir = os.environ.get("HECKE_LAB_CACHE", "")
    if cache_dir:
        path = os.path.join(cache_dir, f"modpoly_{n}.txt")
        if os.path.exists(path):
            return load_modpoly(path)
        phi = modular_polynomial(n, **kwargs)
        os.makedirs(cache_dir, exist_ok=True)
        save_modpoly(phi, path)
        return phi
    return modular_polynomial(n, **kwargs)


def correspondence_fiber(phi: ModularPolynomial, X0, prec_bits: int = 128,
                         tol: float = 1e-4) -> list:
    """Root multiset of Phi(X0, .) with certified residuals."""
    with mpmath.workprec(prec_bits):
        X0 = mpmath.mpc(X0)
        coeffs = phi.y_coefficients_at(X0)
        if phi.degY == 0:
            return []
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=80)
        except mpmath.libmp.libhyper.NoConvergence:
            # multiple roots stall the iteration; the companion-matrix route
            # degrades gracefully there, and the residual gate still applies
            np_roots = numpy.roots([complex(c) for c in coeffs])
            roots = [mpmath.mpc(r) for r in np_roots]
        for r in roots:
            rel = phi.residual(X0, r)
            if rel > tol:
                raise IllConditioned(
                    f"root {complex(r)} has relative residual {rel:.3e}"
                )
    return list(roots)
