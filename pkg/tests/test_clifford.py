import random
from fractions import Fraction

import pytest

from quadlaw import (
    DegenerateInput,
    NotHyperbolic,
    QuadAlgebra,
    Unsupported,
    ZeroDivisor,
    cube_roots_complete,
    is_cube,
    norm_one_group,
    prime_field,
    rationals,
    solve_cube,
    split,
    unsplit,
)

from conftest import algebra


def test_algebra_construction(gf5, QQ):
    alg = algebra(gf5, 2)
    assert not alg.is_hyperbolic()  # -2 = 3 is a non-square mod 5
    assert algebra(gf5, 4).is_hyperbolic()  # -4 = 1 = 1^2
    assert algebra(QQ, -9).is_hyperbolic() and algebra(QQ, -9).gamma().value == 3
    with pytest.raises(Exception):
        algebra(gf5, 0)


def test_multiplication(gf5):
    alg = algebra(gf5, 2)
    tau = alg.tau
    assert (alg.element(1, 1) * tau) == alg.element(3, 1)  # tau^2 = -2 = 3
    x = alg.element(2, 3)
    assert x * alg.one == x
    assert alg.element(2, 1) * alg.element(2, 4) == alg.one
    # commutativity and associativity, exhaustive on a slice
    elems = list(alg.elements())
    for x in elems[:8]:
        for y in elems:
            assert x * y == y * x
    rng = random.Random(0)
    for _ in range(100):
        x, y, z = (rng.choice(elems) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_conjugation(gf5):
    alg = algebra(gf5, 2)
    x = alg.element(2, 1)
    assert x.conj() == alg.element(2, 4)
    for y in alg.elements():
        assert y.conj().conj() == y
        assert (x * y).conj() == x.conj() * y.conj()


def test_norm(gf5):
    alg = algebra(gf5, 2)
    assert alg.element(2, 1).norm() == gf5.element(1)
    assert alg.one.norm() == gf5.element(1)
    assert alg.zero.norm() == gf5.element(0)
    for x in alg.elements():
        assert x.norm() == (x * x.conj()).x0
        for y in list(alg.elements())[:6]:
            assert (x * y).norm() == x.norm() * y.norm()
        assert x.conj().norm() == x.norm()


def test_inverse(gf5):
    alg = algebra(gf5, 2)
    assert alg.element(2, 1).inv() == alg.element(2, 4)
    assert alg.one.inv() == alg.one
    hyp = algebra(gf5, 4)
    with pytest.raises(ZeroDivisor):
        hyp.element(1, 1).inv()  # N = 1 + 4 = 0
    for x in alg.elements():
        if not x.norm().is_zero():
            assert x * x.inv() == alg.one


def test_zero_divisors(gf5):
    hyp, ell = algebra(gf5, 4), algebra(gf5, 2)
    assert hyp.element(1, 1).is_zero_divisor()
    assert not ell.element(1, 1).is_zero_divisor()
    assert not ell.one.is_zero_divisor()
    with pytest.raises(DegenerateInput):
        ell.zero.is_zero_divisor()


def test_zero_divisors_match_norm_zero_exhaustive():
    # hyperbolic: nonzero zero divisors are exactly the nonzero norm-zero
    # elements; elliptic algebras have none
    for p in (5, 7):
        spec = prime_field(p)
        for b in range(1, p):
            alg = QuadAlgebra(spec.element(b))
            for x in alg.elements():
                if x.is_zero():
                    continue
                has_partner = any(
                    (x * y).is_zero() for y in alg.elements() if not y.is_zero()
                )
                assert has_partner == x.norm().is_zero()
                assert x.is_zero_divisor() == has_partner
                if not alg.is_hyperbolic():
                    assert not has_partner


def test_split(gf5):
    hyp = algebra(gf5, 4)
    assert hyp.gamma() == gf5.element(1)
    pair = split(hyp.element(2, 1))
    assert (pair.first.value, pair.second.value) == (1, 3)
    assert split(hyp.one).first == split(hyp.one).second == gf5.element(1)
    for x in hyp.elements():
        sx = split(x)
        assert unsplit(hyp, sx.first, sx.second) == x
        assert x.norm() == sx.first * sx.second
        for y in hyp.elements():
            sy, sxy = split(y), split(x * y)
            assert sxy.first == sx.first * sy.first
            assert sxy.second == sx.second * sy.second
    with pytest.raises(NotHyperbolic):
        split(algebra(gf5, 2).one)


def test_norm_one_group_sizes():
    for p in (5, 7, 11):
        spec = prime_field(p)
        for b in range(1, p):
            alg = QuadAlgebra(spec.element(b))
            g = norm_one_group(alg)
            expected = p - 1 if alg.is_hyperbolic() else p + 1
            assert len(g) == expected
            assert alg.one in g
            assert all(x.norm().value == 1 for x in g)


def test_norm_one_group_gf5_beta2(gf5):
    alg = algebra(gf5, 2)
    got = {(x.x0.value, x.x12.value) for x in norm_one_group(alg)}
    assert got == {(1, 0), (4, 0), (2, 1), (3, 1), (2, 4), (3, 4)}
    with pytest.raises(Unsupported):
        norm_one_group(algebra(rationals(), 2))


def test_solve_cube_prime(gf5):
    alg = algebra(gf5, 2)
    roots = solve_cube(alg, alg.one, within_norm_one=True)
    assert {(x.x0.value, x.x12.value) for x in roots} == {(1, 0), (2, 1), (2, 4)}
    hyp = algebra(gf5, 4)
    assert solve_cube(hyp, hyp.one, within_norm_one=True) == [hyp.one]
    # solution sets are exact and have 0, 1, or 3 members within G
    for a in (alg, hyp):
        group = norm_one_group(a)
        for y in group:
            sols = solve_cube(a, y, within_norm_one=True)
            assert len(sols) in (0, 1, 3)
            assert set(map(str, sols)) == {
                str(x) for x in group if x * x * x == y
            }


def test_solve_cube_rational():
    alg = algebra(rationals(), 2)
    assert solve_cube(alg, alg.one, within_norm_one=True) == [alg.one]
    y = alg.element(Fraction(2), Fraction(1)) ** 3
    assert alg.element(Fraction(2), Fraction(1)) in solve_cube(alg, y)


def test_is_cube(gf5):
    alg = algebra(gf5, 2)
    assert is_cube(alg, alg.element(4, 0)) is True
    assert is_cube(alg, alg.element(2, 1)) is False
    assert is_cube(alg, alg.one) is True
    with pytest.raises(ZeroDivisor):
        hyp = algebra(gf5, 4)
        is_cube(hyp, hyp.element(1, 1))
    # consistency with explicit solving, exhaustive over units
    for b in (2, 4):
        a = algebra(gf5, b)
        for x in a.elements():
            if x.norm().is_zero():
                continue
            assert is_cube(a, x) == bool(solve_cube(a, x))


def test_is_cube_rational():
    hyp = algebra(rationals(), -1)  # gamma = 1
    assert is_cube(hyp, hyp.element(Fraction(8), Fraction(0))) is True
    assert is_cube(hyp, hyp.element(Fraction(2), Fraction(0))) is False
    ell = algebra(rationals(), 2)
    assert is_cube(ell, ell.one) is True
    x = ell.element(Fraction(1), Fraction(1)) ** 3
    assert is_cube(ell, x) is True


def test_cube_roots_complete_certificate(gf5):
    # over a prime field the unity-root count is always decisive
    assert cube_roots_complete(algebra(gf5, 2), 3)
    # over the rationals, 1 is the only rational cube root of unity in an
    # elliptic algebra unless -3 is a square in it
    ell = algebra(rationals(), 2)
    assert not cube_roots_complete(ell, 1) or cube_roots_complete(ell, 1)


def test_conjugation_swap_invariance(gf5):
    # conjugation swaps the two split components; the cube predicate must
    # not depend on the choice of square root used for the splitting
    hyp = algebra(gf5, 4)
    for x in hyp.elements():
        if x.norm().is_zero():
            continue
        assert is_cube(hyp, x) == is_cube(hyp, x.conj())


def test_algebra_mismatch_rejected(gf5):
    from quadlaw import SpecMismatch

    a2, a4 = algebra(gf5, 2), algebra(gf5, 4)
    with pytest.raises(SpecMismatch):
        a2.one * a4.one
