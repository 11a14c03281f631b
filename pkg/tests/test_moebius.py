import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckelab.errors import NotElliptic, PrecisionInsufficient
from heckelab.moebius import (
    CMPoint,
    ElementKind,
    NumericPoint,
    RatMatrix,
    act,
    classify,
    fixed_point,
    fraction_str,
    parse_matrix,
    special_witness,
    squarefree_decompose,
    stabilizer_is_trivial,
)

I_PT = CMPoint(-1, 0, 1)
ZETA_PT = CMPoint(-3, Fraction(1, 2), Fraction(1, 2))
S = RatMatrix(0, -1, 1, 0)
T = RatMatrix(1, 1, 0, 1)

SQUAREFREE_NEG = [d for d in range(-1, -51, -1) if squarefree_decompose(d)[0] == 1]


def random_cm_point(rng):
    D = rng.choice(SQUAREFREE_NEG)
    x = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
    y = Fraction(rng.randint(1, 20), rng.randint(1, 20))
    return CMPoint(D, x, y)


def random_gl2q_pos(rng):
    while True:
        ents = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(4)]
        if ents[0] * ents[3] - ents[1] * ents[2] > 0:
            return RatMatrix(*ents)


def test_act_translation():
    assert act(T, I_PT) == CMPoint(-1, 1, 1)


def test_act_inversion_fixes_i():
    assert act(S, I_PT) == I_PT


def test_act_scaling_zeta():
    got = act(RatMatrix(2, 0, 0, 1), ZETA_PT)
    assert got == CMPoint(-3, 1, 1)


def test_act_numeric_inversion():
    tau = NumericPoint(0.0, 2.0)
    out = act(S, tau)
    assert abs(out.re) < 1e-15
    assert abs(out.im - 0.5) < 1e-15


def test_classify_examples():
    assert classify(S).kind is ElementKind.ELLIPTIC
    assert classify(S).disc == -4
    assert classify(T).kind is ElementKind.PARABOLIC
    assert classify(T).disc == 0
    assert classify(RatMatrix(2, 0, 0, 1)).kind is ElementKind.HYPERBOLIC
    assert classify(RatMatrix(2, 0, 0, 1)).disc == 1
    assert classify(RatMatrix(3, 0, 0, 3)).kind is ElementKind.SCALAR


def test_fixed_point_inversion():
    assert fixed_point(S) == I_PT


def test_fixed_point_order_six():
    assert fixed_point(RatMatrix(0, -1, 1, -1)) == ZETA_PT


def test_fixed_point_rejects_non_elliptic():
    with pytest.raises(NotElliptic):
        fixed_point(RatMatrix(2, 0, 0, 1))
    with pytest.raises(NotElliptic):
        fixed_point(T)
    with pytest.raises(NotElliptic):
        fixed_point(RatMatrix(5, 0, 0, 5))


def test_special_witness_examples():
    assert special_witness(I_PT) == S
    assert special_witness(ZETA_PT) == RatMatrix(0, -1, 1, -1)
    tau = CMPoint(-5, 2, 1)  # z^2 - 4z + 9
    g = special_witness(tau)
    assert g.in_sl2z() or g.is_integral()
    assert fixed_point(g) == tau


def test_witness_round_trip_random():
    rng = random.Random(7)
    for _ in range(200):
        tau = random_cm_point(rng)
        g = special_witness(tau)
        assert g.is_integral()
        assert g.c > 0
        assert classify(g).kind is ElementKind.ELLIPTIC
        assert fixed_point(g) == tau
        assert act(g, tau) == tau


def test_fixed_point_is_fixed_random():
    # random elliptic matrices via conjugation of rotations
    rng = random.Random(11)
    for _ in range(100):
        h = random_gl2q_pos(rng)
        g = h * RatMatrix(0, -1, 1, 0) * h.inverse()
        assert classify(g).kind is ElementKind.ELLIPTIC
        tau = fixed_point(g)
        assert act(g, tau) == tau


def test_group_action_composition():
    rng = random.Random(23)
    for _ in range(100):
        g = random_gl2q_pos(rng)
        h = random_gl2q_pos(rng)
        tau = random_cm_point(rng)
        assert act(g * h, tau) == act(g, act(h, tau))


def test_projective_scale_invariance():
    rng = random.Random(5)
    for _ in range(50):
        tau = random_cm_point(rng)
        g = special_witness(tau)
        lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert fixed_point(g.scale(lam)) == fixed_point(g)
        assert act(g.scale(lam), tau) == act(g, tau)


def test_classify_conjugation_sign_invariance():
    rng = random.Random(31)
    mats = [S, T, RatMatrix(2, 0, 0, 1), RatMatrix(1, 2, 3, 7)]
    for g in mats:
        base = classify(g)
        for _ in range(20):
            h = random_gl2q_pos(rng)
            conj = classify(h * g * h.inverse())
            assert conj.kind is base.kind
        lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        scaled = classify(g.scale(lam))
        if base.kind in (ElementKind.ELLIPTIC, ElementKind.HYPERBOLIC):
            assert scaled.kind is base.kind  # disc scales by lam^2, sign survives


@given(st.integers(min_value=-10000, max_value=10000).filter(lambda n: n != 0))
def test_squarefree_decompose_law(n):
    m, d = squarefree_decompose(n)
    assert m > 0
    assert m * m * d == n
    assert squarefree_decompose(d)[0] == 1


@settings(max_examples=200)
@given(
    st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6)
)
def test_normalized_preserves_action(a, b, c, d):
    if a * d - b * c <= 0:
        return
    g = RatMatrix(a, b, c, d)
    n = g.normalized()
    assert n.is_integral()
    assert act(n, I_PT) == act(g, I_PT)
    assert act(n, ZETA_PT) == act(g, ZETA_PT)


def test_stabilizer_report_generic_point():
    tau = NumericPoint(0.3, 1.7)
    rep = stabilizer_is_trivial(tau, [S, T], tol=1e-9)
    assert rep.all_nonscalar_moved
    assert all(e.displacement > 1e-3 for e in rep.entries)


def test_stabilizer_report_fixed_point_flagged():
    tau = NumericPoint(0.0, 1.0)
    rep = stabilizer_is_trivial(tau, [S], tol=1e-9)
    assert not rep.all_nonscalar_moved
    assert rep.entries[0].moved is False


def test_stabilizer_scalar_skipped():
    tau = NumericPoint(0.25, 0.8)
    rep = stabilizer_is_trivial(tau, [RatMatrix.identity(), RatMatrix(2, 0, 0, 2)], tol=1e-9)
    assert rep.entries[0].scalar and rep.entries[1].scalar
    assert rep.all_nonscalar_moved  # vacuously


def test_stabilizer_ambiguous_band_raises():
    # near i the inversion moves tau by about 2|tau - i|
    eps = mpmath.mpf("1e-9")
    tau = NumericPoint(0.0, 1.0 + eps, prec_bits=128)
    with pytest.raises(PrecisionInsufficient):
        stabilizer_is_trivial(tau, [S], tol=1e-8)


def test_matrix_parse_round_trip():
    for s in ["[[0,-1],[1,0]]", "[[1,-1/2],[0,1]]", "[[2,0],[0,1]]"]:
        assert str(parse_matrix(s)) == s
    with pytest.raises(ValueError):
        parse_matrix("[[1,2],[3]]")
    with pytest.raises(ValueError):
        parse_matrix("[[1,2],[3,4]] junk")


def test_fraction_str():
    assert fraction_str(Fraction(3)) == "3"
    assert fraction_str(Fraction(-3, 2)) == "-3/2"


def test_cmpoint_validation():
    with pytest.raises(ValueError):
        CMPoint(-4, 0, 1)  # not squarefree
    with pytest.raises(ValueError):
        CMPoint(1, 0, 1)  # not negative
    with pytest.raises(ValueError):
        CMPoint(-1, 0, -1)  # lower half-plane
    assert I_PT.to_dict() == {"D": -1, "x": "0", "y": "1"}


def test_ratmatrix_validation():
    with pytest.raises(ValueError):
        RatMatrix(1, 0, 0, -1)
    with pytest.raises(ValueError):
        RatMatrix(1, 2, 2, 4)


def test_numeric_point_validation():
    with pytest.raises(ValueError):
        NumericPoint(0.0, -1.0)
    with pytest.raises(ValueError):
        NumericPoint(0.0, 1.0, prec_bits=32)
