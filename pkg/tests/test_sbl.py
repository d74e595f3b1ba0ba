import random
from fractions import Fraction

import pytest

from quadlaw import (
    Covector,
    NotRegular,
    SBL,
    SingularMap,
    act,
    prime_field,
    rationals,
    sigma,
)

from conftest import (
    all_vectors,
    det_qbar_closed_form,
    law,
    mat,
    random_invertible,
    random_law,
    vec,
)


def test_evaluate(gf5):
    F = law(gf5, 1, 0, 0, 0, 0, 1)
    v1, v2 = vec(gf5, 1, 0), vec(gf5, 0, 1)
    assert F.evaluate(v1, v1) == vec(gf5, 1, 0)
    assert F.evaluate(v1, v2) == vec(gf5, 0, 0)
    assert F.evaluate(v2, v2) == vec(gf5, 0, 1)
    zero = vec(gf5, 0, 0)
    assert F.evaluate(zero, v1) == zero
    rng = random.Random(3)
    for _ in range(50):
        G = random_law(gf5, rng)
        x, y = vec(gf5, rng.randrange(5), rng.randrange(5)), vec(
            gf5, rng.randrange(5), rng.randrange(5)
        )
        assert G.evaluate(x, y) == G.evaluate(y, x)


def test_endo(gf5):
    F = law(gf5, 1, 0, 0, 0, 0, 1)
    v1 = vec(gf5, 1, 0)
    m = F.endo(v1)
    assert m.apply(v1) == F.evaluate(v1, v1)
    zero = vec(gf5, 0, 0)
    z = F.endo(zero)
    assert all(e.is_zero() for e in (z.m11, z.m12, z.m21, z.m22))
    # linearity of x -> F_x
    rng = random.Random(4)
    for _ in range(30):
        G = random_law(gf5, rng)
        x = vec(gf5, rng.randrange(5), rng.randrange(5))
        y = vec(gf5, rng.randrange(5), rng.randrange(5))
        s = gf5.element(rng.randrange(5))
        lhs = G.endo(vec(gf5, (x.x1 + s * y.x1).value, (x.x2 + s * y.x2).value))
        for v in all_vectors(gf5):
            assert lhs.apply(v).x1 == (G.endo(x).apply(v).x1 + s * G.endo(y).apply(v).x1)
            assert lhs.apply(v).x2 == (G.endo(x).apply(v).x2 + s * G.endo(y).apply(v).x2)


def test_qform(gf5, gf7):
    F = law(gf5, 1, 0, 0, 0, 0, 1)
    q = F.qform()
    assert (q.q11.value, q.q12.value, q.q22.value) == (0, 3, 0)  # q12 = 1/2
    z = law(gf5, 0, 0, 0, 0, 0, 0).qform()
    assert z.q11.is_zero() and z.q12.is_zero() and z.q22.is_zero()
    # the attached form is the determinant of the endomorphism, pointwise
    rng = random.Random(5)
    for _ in range(50):
        G = random_law(gf7, rng)
        for x in all_vectors(gf7):
            assert G.qform().value(x) == G.endo(x).det()


def test_trace(gf5):
    assert law(gf5, 1, 0, 0, 0, 0, 1).trace() == Covector(gf5.element(1), gf5.element(1))
    assert law(gf5, 1, 0, 0, 0, 4, 0).trace() == Covector(gf5.element(0), gf5.element(0))


def test_action_axioms(gf5):
    rng = random.Random(6)
    for _ in range(30):
        F = random_law(gf5, rng)
        ident = mat(gf5, 1, 0, 0, 1)
        assert act(ident, F) == F
        u, w = random_invertible(gf5, rng), random_invertible(gf5, rng)
        assert act(u, act(w, F)) == act(u @ w, F)
    with pytest.raises(SingularMap):
        act(mat(gf5, 1, 2, 2, 4), random_law(gf5, rng))


def test_action_pointwise(gf5):
    # (u.F)(ux, uy) = u(F(x, y))
    rng = random.Random(7)
    u = mat(gf5, 1, 0, 0, 2)
    F = law(gf5, 1, 0, 0, 0, 0, 1)
    G = act(u, F)
    for x in all_vectors(gf5):
        for y in all_vectors(gf5):
            lhs = G.evaluate(u.apply(x), u.apply(y))
            rhs = u.apply(F.evaluate(x, y))
            assert lhs == rhs


def test_equivariance(gf5, gf7):
    rng = random.Random(8)
    for spec in (gf5, gf7):
        for _ in range(20):
            F = random_law(spec, rng)
            u = random_invertible(spec, rng)
            ui = u.inv()
            tF, tU = F.trace(), act(u, F).trace()
            assert tU == tF.compose(ui)
            qF, qU = F.qform(), act(u, F).qform()
            for x in all_vectors(spec):
                assert qU.value(x) == qF.value(ui.apply(x))


def test_sigma_section(gf7, QQ):
    s = sigma(Covector(QQ.element(3), QQ.element(0)), QQ)
    assert s.coeffs() == (Fraction(2), Fraction(0), Fraction(0), Fraction(0), Fraction(1), Fraction(0))
    z = sigma(Covector(QQ.element(0), QQ.element(0)), QQ)
    assert z.is_zero()
    rng = random.Random(9)
    for _ in range(50):
        v = Covector(gf7.element(rng.randrange(7)), gf7.element(rng.randrange(7)))
        assert sigma(v, gf7).trace() == v


def test_traceless_decomposition(gf7):
    rng = random.Random(10)
    for _ in range(50):
        F = random_law(gf7, rng)
        bar = F.traceless_part()
        t = bar.trace()
        assert t.l1.is_zero() and t.l2.is_zero()
        assert bar + sigma(F.trace(), gf7) == F
        v = Covector(gf7.element(rng.randrange(7)), gf7.element(rng.randrange(7)))
        assert sigma(v, gf7).traceless_part().is_zero()


def test_det_qbar(QQ, gf7):
    # traceless law with attached form x1*x2 has Gram (0,1/2;1/2,0)
    F = law(QQ, 1, 0, 0, 0, -1, 0)
    if not F.trace().l1.is_zero():
        F = law(QQ, 0, 0, 1, 1, 0, 0)
    q = F.traceless_part().qform()
    assert F.det_qbar() == q.gram_det()
    rng = random.Random(11)
    for _ in range(200):
        G = random_law(QQ, rng, span=9)
        assert G.det_qbar() == det_qbar_closed_form(G)
    for _ in range(200):
        G = random_law(gf7, rng)
        assert G.det_qbar() == det_qbar_closed_form(G)


def test_regularity(gf7, QQ):
    v = Covector(QQ.element(2), QQ.element(5))
    assert not sigma(v, QQ).is_regular()
    rng = random.Random(12)
    hits = 0
    for _ in range(40):
        F = random_law(gf7, rng)
        u = random_invertible(gf7, rng)
        assert F.is_regular() == act(u, F).is_regular()
        hits += F.is_regular()
    assert hits > 0


def test_invariants(gf7):
    rng = random.Random(13)
    checked = 0
    for _ in range(100):
        F = random_law(gf7, rng)
        if not F.is_regular():
            with pytest.raises(NotRegular):
                F.invariants()
            continue
        i1, i2 = F.invariants()
        u = random_invertible(gf7, rng)
        assert act(u, F).invariants() == (i1, i2)
        checked += 1
    assert checked > 20
    # fully traceless regular laws sit at the origin of the invariant plane
    for _ in range(200):
        F = random_law(gf7, rng).traceless_part()
        if F.is_regular():
            assert F.invariants() == (gf7.element(0), gf7.element(0))
            break
    else:
        pytest.fail("no regular traceless law sampled")
