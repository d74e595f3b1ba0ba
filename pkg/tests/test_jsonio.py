from fractions import Fraction

import pytest

from quadlaw import SBL, normal_form, prime_field, rationals
from quadlaw.jsonio import (
    FormatError,
    mat2_from_json,
    mat2_to_json,
    normal_form_from_json,
    normal_form_to_json,
    sbl_from_json,
    sbl_to_json,
    spec_from_json,
    spec_to_json,
    value_from_json,
    value_to_json,
)

from conftest import law, mat


def test_spec_round_trip(gf5, QQ):
    assert spec_to_json(gf5) == {"type": "prime", "p": 5}
    assert spec_to_json(QQ) == {"type": "rational"}
    assert spec_from_json(spec_to_json(gf5)) == gf5
    assert spec_from_json(spec_to_json(QQ)) == QQ
    with pytest.raises(FormatError):
        spec_from_json({"type": "real"})


def test_value_round_trip(gf5, QQ):
    assert value_to_json(gf5.element(3)) == 3
    x = QQ.element(Fraction(-2, 3))
    assert value_to_json(x) == "-2/3"
    assert value_from_json(QQ, "-2/3") == x
    assert value_from_json(gf5, 8) == gf5.element(3)
    with pytest.raises(FormatError):
        value_from_json(QQ, "one half")


def test_sbl_round_trip(gf5, QQ):
    F = law(gf5, 1, 2, 3, 4, 0, 1)
    assert sbl_from_json(sbl_to_json(F)) == F
    G = law(QQ, Fraction(1, 2), -3, 0, 1, 0, Fraction(7, 4))
    assert sbl_from_json(sbl_to_json(G)) == G
    with pytest.raises(FormatError):
        sbl_from_json({"field": {"type": "prime", "p": 5}})


def test_sbl_canonical_bytes(gf5):
    # serialization is stable after a round trip
    import json

    F = law(gf5, 1, 2, 3, 4, 0, 1)
    once = json.dumps(sbl_to_json(F))
    twice = json.dumps(sbl_to_json(sbl_from_json(json.loads(once))))
    assert once == twice


def test_mat2_round_trip(gf5):
    u = mat(gf5, 1, 2, 3, 4)
    assert mat2_from_json(gf5, mat2_to_json(u)) == u


def test_normal_form_round_trip(gf5):
    F = law(gf5, 1, 0, 0, 0, 0, 1)
    nf = normal_form(F)
    d = normal_form_to_json(nf)
    back = normal_form_from_json(d)
    assert back.a == nf.a and back.c == nf.c
    assert back.algebra.beta == nf.algebra.beta
    assert normal_form_to_json(back) == d
