import random

import pytest

# one-line verdicts from the acceptance suite, shown after the test run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from quadlaw import SBL, Mat2, QuadAlgebra, Vec2, prime_field, rationals


@pytest.fixture
def gf5():
    return prime_field(5)


@pytest.fixture
def gf7():
    return prime_field(7)


@pytest.fixture
def QQ():
    return rationals()


def law(spec, *coeffs):
    """Build an SBL from raw coefficient values (a1,b1,c1,a2,b2,c2)."""
    return SBL(spec, *coeffs)


def vec(spec, x1, x2):
    return Vec2(spec.element(x1), spec.element(x2))


def mat(spec, m11, m12, m21, m22):
    return Mat2(spec.element(m11), spec.element(m12),
                spec.element(m21), spec.element(m22))


def algebra(spec, beta):
    return QuadAlgebra(spec.element(beta))


def random_law(spec, rng, span=20):
    if spec.kind == "prime":
        return SBL(spec, *[rng.randrange(spec.p) for _ in range(6)])
    return SBL(spec, *[rng.randint(-span, span) for _ in range(6)])


def random_invertible(spec, rng, span=5):
    while True:
        if spec.kind == "prime":
            u = mat(spec, *[rng.randrange(spec.p) for _ in range(4)])
        else:
            u = mat(spec, *[rng.randint(-span, span) for _ in range(4)])
        if not u.det().is_zero():
            return u


def all_vectors(spec):
    return [Vec2(x1, x2) for x1 in spec.elements() for x2 in spec.elements()]


def nf_of(alg, a0, a12, c0, c12):
    """A NormalForm with the standard coordinate basis of the algebra."""
    from quadlaw import DiagonalBasis, NormalForm

    spec = alg.spec
    basis = DiagonalBasis(
        Vec2(spec.element(1), spec.element(0)),
        Vec2(spec.element(0), spec.element(1)),
        alg.beta,
    )
    return NormalForm(alg, alg.element(a0, a12), alg.element(c0, c12), basis)


def det_qbar_closed_form(F):
    """Closed-form quartic for det_qbar, kept as an independent cross-check
    against the compositional computation."""
    def r(num, den):
        return F.spec.element(num) / F.spec.element(den)

    a1, b1, c1, a2, b2, c2 = (F.a1, F.b1, F.c1, F.a2, F.b2, F.c2)
    return (
        r(4, 27) * a1 * b1 * b2 * c2
        - r(1, 3) * a1 * a2 * b1 * c1
        + r(2, 3) * a2 * b1 * b2 * c1
        + r(1, 6) * a1 * a2 * c1 * c2
        - r(1, 3) * a2 * b2 * c1 * c2
        - r(1, 27) * a1**3 * c1
        + r(1, 27) * a1**2 * b1**2
        + r(1, 108) * a1**2 * c2**2
        + r(8, 27) * b2**3 * c1
        + r(4, 27) * b1**2 * b2**2
        + r(1, 27) * b2**2 * c2**2
        + r(8, 27) * a2 * b1**3
        - r(1, 27) * a2 * c2**3
        - r(4, 27) * b1 * b2**2 * c2
        - r(1, 27) * a1**2 * b1 * c2
        - r(4, 9) * a1 * b2**2 * c1
        + r(2, 9) * a1**2 * b2 * c1
        + r(2, 9) * a2 * b1 * c2**2
        - r(4, 9) * a2 * b1**2 * c2
        - r(1, 27) * a1 * b2 * c2**2
        - r(4, 27) * a1 * b1**2 * b2
        - r(1, 4) * a2**2 * c1**2
    )
