import random
from fractions import Fraction

import mpmath
import pytest

from heckelab.errors import NoConvergence
from heckelab.jfunction import (
    DEFAULT_CTX,
    QSeriesContext,
    invert_j,
    j,
    reduce_fundamental,
    reduce_fundamental_exact,
)
from heckelab.moebius import CMPoint, NumericPoint, RatMatrix, act

S = RatMatrix(0, -1, 1, 0)
T = RatMatrix(1, 1, 0, 1)


def test_j_at_i():
    r = j(CMPoint(-1, 0, 1))
    assert abs(r.value - 1728) < 1e-8
    r2 = j(NumericPoint(0.0, 1.0))
    assert abs(r2.value - 1728) < 1e-8


def test_j_at_zeta():
    r = j(CMPoint(-3, Fraction(1, 2), Fraction(1, 2)))
    assert abs(r.value) < 1e-8


def test_singular_moduli():
    # classical CM values, each an independent published constant
    cases = [
        (CMPoint(-1, 0, 2), 287496),
        (CMPoint(-2, 0, 1), 8000),
        (CMPoint(-3, 0, 1), 54000),
        (CMPoint(-7, Fraction(1, 2), Fraction(1, 2)), -3375),
        (CMPoint(-11, Fraction(1, 2), Fraction(1, 2)), -32768),
        (CMPoint(-163, Fraction(1, 2), Fraction(1, 2)), -262537412640768000),
    ]
    for tau, want in cases:
        r = j(tau)
        assert abs(r.value - want) < 1e-8 * max(1, abs(want))
        assert abs(r.value - want) < max(r.abs_err, 1e-20) * 1e6 or r.abs_err > 0


def test_translation_invariance():
    rng = random.Random(13)
    for _ in range(10):
        tau = NumericPoint(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 2.5))
        shifted = NumericPoint(tau.re + 1, tau.im)
        a, b = j(tau), j(shifted)
        assert abs(a.value - b.value) / (1 + abs(a.value)) < 1e-8


def test_gamma_invariance_random_words():
    rng = random.Random(29)
    for _ in range(50):
        g = RatMatrix.identity()
        for _ in range(rng.randint(1, 6)):
            g = g * rng.choice([S, T, T.inverse()])
        tau = NumericPoint(rng.uniform(-0.45, 0.45), rng.uniform(0.9, 2.0))
        a = j(tau).value
        b = j(act(g, tau)).value
        assert abs(a - b) / (1 + abs(a)) < 1e-8


def test_reduce_fundamental_examples():
    g, red = reduce_fundamental(NumericPoint(0.7, 0.1))
    z = red.value()
    assert abs(z.real) <= 0.5 + 1e-12 and abs(z) >= 1 - 1e-12
    assert g.in_sl2z()
    # gamma really maps the input to the reduced point
    moved = act(g, NumericPoint(0.7, 0.1)).value()
    assert abs(moved - z) < 1e-12

    g, red = reduce_fundamental(NumericPoint(0.0, 1.0))
    assert g == RatMatrix.identity()
    assert abs(red.value() - 1j) < 1e-15

    g, red = reduce_fundamental(NumericPoint(5.2, 1.4))
    assert g == RatMatrix(1, -5, 0, 1)
    assert abs(red.value() - (0.2 + 1.4j)) < 1e-12


def test_reduce_fundamental_exact_random():
    rng = random.Random(37)
    sf = [-1, -2, -3, -5, -6, -7, -10, -11]
    for _ in range(50):
        tau = CMPoint(
            rng.choice(sf),
            Fraction(rng.randint(-30, 30), rng.randint(1, 9)),
            Fraction(rng.randint(1, 30), rng.randint(1, 9)),
        )
        g, red = reduce_fundamental_exact(tau)
        assert g.in_sl2z()
        assert act(g, tau) == red
        assert abs(red.x) <= Fraction(1, 2)
        assert red.x * red.x - red.y * red.y * red.D >= 1


def test_invert_j_examples():
    t = invert_j(1728)
    assert abs(t.value() - 1j) < 1e-6
    t = invert_j(0)
    zeta = mpmath.mpc(0.5, mpmath.sqrt(3) / 2)
    assert min(abs(t.value() - zeta), abs(t.value() + zeta.conjugate())) < 1e-6


def test_invert_j_round_trip():
    rng = random.Random(53)
    done = 0
    while done < 20:
        tau = NumericPoint(rng.uniform(-0.45, 0.45), rng.uniform(1.02, 2.5), 128)
        if abs(tau.value()) < 1.02:
            continue
        x0 = j(tau).value
        back = invert_j(x0)
        assert abs(back.value() - tau.value()) < 1e-6
        done += 1


def test_invert_j_large_value():
    t = invert_j(mpmath.mpc(1e12, 5e11))
    assert abs(j(t).value - mpmath.mpc(1e12, 5e11)) / 1e12 < 1e-6


def test_error_bound_honest():
    ctx = QSeriesContext(terms=32, prec_bits=96)
    pts = [
        NumericPoint(0.13, 1.1),
        NumericPoint(-0.41, 0.95),
        NumericPoint(0.5, 3.0),
        NumericPoint(0.0, 1.0),
    ]
    for tau in pts:
        coarse = j(tau, ctx)
        fine = j(tau, ctx.refined())
        assert abs(coarse.value - fine.value) <= coarse.abs_err


def test_jresult_dict_shape():
    d = j(CMPoint(-1, 0, 1)).to_dict()
    assert set(d) == {"value", "abs_err"}
    assert abs(d["value"][0] - 1728) < 1e-8
    assert d["abs_err"] >= 0


def test_ctx_validation():
    with pytest.raises(ValueError):
        QSeriesContext(terms=8)
    with pytest.raises(ValueError):
        QSeriesContext(prec_bits=32)
