"""Numeric j-function on the upper half-plane.

Evaluation reduces the argument to the standard fundamental domain
(|Re| <= 1/2, |tau| >= 1) and sums the integer q-expansion there, where
|q| <= e^{-pi*sqrt(3)} makes the tail geometric.  The reported error bound
uses |c_m| <= e^{4*pi*sqrt(m)}, which dominates the true coefficients.
Inversion is Newton's method seeded from a coarse grid over the domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

import mpmath

from .errors import NoConvergence, PrecisionExhausted
from .moebius import CMPoint, NumericPoint, RatMatrix, act
from .qexp import j_coefficients

S = RatMatrix(0, -1, 1, 0)


@dataclass(frozen=True)
class QSeriesContext:
    terms: int = 64
    prec_bits: int = 128

    def __post_init__(self):
        if self.terms < 16:
            raise ValueError("need at least 16 series terms")
        if self.prec_bits < 64:
            raise ValueError("need at least 64 bits")

    def refined(self) -> "QSeriesContext":
        return QSeriesContext(self.terms * 2, self.prec_bits * 2)


DEFAULT_CTX = QSeriesContext()


@dataclass(frozen=True)
class JResult:
    value: mpmath.mpc
    abs_err: float

    def to_dict(self) -> dict:
        return {
            "value": [float(self.value.real), float(self.value.imag)],
            "abs_err": self.abs_err,
        }


def reduce_fundamental(tau: NumericPoint):
    """(gamma, tau') with tau' = gamma.tau in the standard domain."""
    prec = tau.prec_bits
    with mpmath.workprec(prec + 20):
        z = tau.value()
        gamma = RatMatrix.identity()
        slack = mpmath.mpf(2) ** (-(prec - 10))
        for _ in range(10000):
            k = int(mpmath.nint(z.real))
            if k:
                z -= k
                gamma = RatMatrix(1, -k, 0, 1) * gamma
            if abs(z) ** 2 < 1 - slack:
                z = -1 / z
                gamma = S * gamma
            else:
                break
        else:
            raise NoConvergence("fundamental-domain reduction did not settle")
    return gamma, NumericPoint(z.real, z.imag, prec)


def reduce_fundamental_exact(tau: CMPoint):
    """Exact reduction of a CM point; comparisons in rational arithmetic."""
    gamma = RatMatrix.identity()
    while True:
        k = floor(tau.x + Fraction(1, 2))
        if k:
            shift = RatMatrix(1, -k, 0, 1)
            tau = act(shift, tau)
            gamma = shift * gamma
        if tau.x * tau.x - tau.y * tau.y * tau.D < 1:
            tau = act(S, tau)
            gamma = S * gamma
        else:
            return gamma, tau


def _series_eval(z: mpmath.mpc, ctx: QSeriesContext):
    """(value, tail bound) of the q-expansion at a reduced point."""
    K = ctx.terms
    coeffs = j_coefficients(K)
    q = mpmath.exp(2j * mpmath.pi * z)
    absq = abs(q)
    # geometric tail: |c_m| <= e^{4 pi sqrt(m)} and the term ratio beyond K
    # is at most rho = e^{2 pi / sqrt(K)} * |q|
    rho = mpmath.exp(2 * mpmath.pi / mpmath.sqrt(K)) * absq
    if rho >= 1:
        raise PrecisionExhausted(f"tail ratio {float(rho):.3f} >= 1 at {K} terms")
    head = mpmath.exp(4 * mpmath.pi * mpmath.sqrt(K)) * absq ** K
    tail = head / (1 - rho)
    value = mpmath.mpc(0)
    for m in range(K - 1, -1, -1):
        value = value * q + coeffs[m + 1]
    value = value + 1 / q
    # series evaluated at >= prec+40 guard bits; rounding well under the tail
    return value, float(tail + mpmath.mpf(2) ** (-ctx.prec_bits) * (1 + abs(value)))


def j(tau, ctx: QSeriesContext = DEFAULT_CTX) -> JResult:
    """j(tau) with an honest absolute error bound."""
    with mpmath.workprec(ctx.prec_bits + 40):
        if isinstance(tau, CMPoint):
            _, red = reduce_fundamental_exact(tau)
            z = red.to_mpc(ctx.prec_bits + 40)
        elif isinstance(tau, NumericPoint):
            lifted = NumericPoint(tau.re, tau.im, max(tau.prec_bits, ctx.prec_bits + 40))
            _, red = reduce_fundamental(lifted)
            z = red.value()
        else:
            raise TypeError(f"cannot evaluate j on {type(tau).__name__}")
        value, err = _series_eval(z, ctx)
    return JResult(value, err)


_GRID = None


def _start_grid():
    """40x40 float64 samples of j over the fundamental domain, cached."""
    global _GRID
    if _GRID is None:
        pts = []
        ctx = QSeriesContext(terms=32, prec_bits=64)
        with mpmath.workprec(80):
            for i in range(40):
                re = -0.5 + (i + 0.5) / 40
                for k in range(40):
                    im = 0.5 + 3.5 * (k + 0.5) / 40
                    z = mpmath.mpc(re, im)
                    if abs(z) < 1:
                        continue
                    val, _ = _series_eval(z, ctx)
                    pts.append((complex(val), complex(z)))
        _GRID = pts
    return _GRID


def invert_j(X0, ctx: QSeriesContext = DEFAULT_CTX) -> NumericPoint:
    """tau in the fundamental domain with j(tau) = X0.

    Newton on the q-expansion; converges linearly at the ramified values
    0 and 1728, which the step-size stopping rule tolerates.
    """
    prec = ctx.prec_bits
    with mpmath.workprec(prec + 40):
        X0 = mpmath.mpc(X0)
        if abs(X0) > 1e9:
            # j ~ 1/q for large values; start from the dominant term
            q0 = 1 / X0
            z = mpmath.log(q0) / (2j * mpmath.pi)
            z = mpmath.mpc(z.real - mpmath.nint(z.real), z.imag)
        else:
            z = min(_start_grid(), key=lambda p: abs(p[0] - X0))[1]
            z = mpmath.mpc(z)
        coeffs = j_coefficients(ctx.terms)

        def jval(zz):
            qq = mpmath.exp(2j * mpmath.pi * zz)
            v = mpmath.mpc(0)
            for m in range(ctx.terms - 1, -1, -1):
                v = v * qq + coeffs[m + 1]
            return v + 1 / qq

        def jprime(zz):
            qq = mpmath.exp(2j * mpmath.pi * zz)
            v = mpmath.mpc(0)
            for m in range(ctx.terms - 1, 0, -1):
                v = v * qq + m * coeffs[m + 1]
            v = v * qq  # d/dq applied, multiply back the chain q factor
            return (v - 1 / qq) * 2j * mpmath.pi

        for _ in range(400):
            fv = jval(z) - X0
            dv = jprime(z)
            if dv == 0:
                z += mpmath.mpc("1e-6", "1e-6")
                continue
            step = fv / dv
            z = z - step
            if z.imag <= 0.05:
                z = mpmath.mpc(z.real, 0.05)
            if abs(step) < mpmath.mpf(2) ** (-(prec // 2)) * max(1, abs(z)):
                break
        else:
            raise NoConvergence(f"Newton did not settle for X0 = {complex(X0)}")
        pt = NumericPoint(z.real, z.imag, prec)
        _, red = reduce_fundamental(pt)
        check = j(red, ctx)
        if abs(check.value - X0) / (1 + abs(X0)) > 1e-6:
            raise NoConvergence(
                f"residual {float(abs(check.value - X0)):.3e} too large for X0 = {complex(X0)}"
            )
    return red
