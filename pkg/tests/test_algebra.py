import copy
import json

import pytest
from hypothesis import given

from moritakit.algebra import (
    Idempotent,
    QuiverPresentation,
    build_algebra,
    corner_algebra,
    opposite_algebra,
    validate_algebra,
)
from moritakit.errors import CapNotNilpotent, NonAdmissible, ParseError, SchemaError
from moritakit.exactlin import GF, QQ
from moritakit.fixtures import FIXTURE_NAMES, fixture_text, parse_input, parse_text
from moritakit.modules import LEFT, RIGHT, projective_indecomposable

from conftest import fixture_algebra
from strategies import algebras, presentations


def test_single_vertex_is_the_field():
    a = build_algebra(QuiverPresentation(QQ, ["v"], [], [], 2))
    assert a.dim == 1 and a.labels == ["ev"]


def test_ex14_basis(ex14):
    assert ex14.dim == 5
    assert ex14.labels == ["e1", "e2", "e3", "a1", "a2"]


def test_ex15_dimension(ex15):
    assert ex15.dim == 9


def test_ex15_corner():
    a = fixture_algebra("ex15")
    c, inc = corner_algebra(a, Idempotent((0, 1)))
    assert c.dim == 6
    assert c.labels == ["e1", "e2", "alpha", "beta", "beta*alpha", "theta*gamma"]
    assert validate_algebra(c) == []
    assert inc.shape == (a.dim, 6)


def test_ex14_corner_at_vertex_one(ex14):
    c, _ = corner_algebra(ex14, Idempotent((0,)))
    assert c.dim == 1


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_full_corner_matches(name):
    a = fixture_algebra(name)
    c, _ = corner_algebra(a, Idempotent(tuple(range(len(a.idempotents)))))
    assert c.structure_equal(a)


def test_opposite_of_commutative_is_identical(dual_numbers):
    assert opposite_algebra(dual_numbers).mult == dual_numbers.mult


def test_opposite_involution(ex14):
    assert opposite_algebra(opposite_algebra(ex14)).structure_equal(ex14)


def test_opposite_ex14_reverses_arrows(ex14):
    op = opposite_algebra(ex14)
    assert op.dim == 5
    # in the opposite, a1 goes 2 -> 1: e1 * a1 = a1 and a1 * e2 = a1
    a1 = op.labels.index("a1")
    x = {a1: QQ(1)}
    assert op.mul(op.idempotents[0], x) == x
    assert op.mul(x, op.idempotents[1]) == x
    assert validate_algebra(op) == []


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixtures_validate(name):
    assert validate_algebra(fixture_algebra(name)) == []


def test_validate_catches_corruption(ex14):
    bad = copy.copy(ex14)
    bad.mult = copy.deepcopy(ex14.mult)
    bad.mult[3][0] = {}
    assert validate_algebra(bad)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_projective_dimensions_add_up(name):
    a = fixture_algebra(name)
    n = len(a.idempotents)
    assert sum(projective_indecomposable(a, i, LEFT).dim for i in range(n)) == a.dim
    assert sum(projective_indecomposable(a, i, RIGHT).dim for i in range(n)) == a.dim


def test_fixture_roundtrip():
    p = parse_input("ex15")
    assert parse_text(json.dumps(p.to_json())) == p


def test_bad_coefficient_located():
    text = fixture_text("ex14").replace('"coeff": "1"', '"coeff": "1/0"')
    with pytest.raises(ParseError) as err:
        parse_text(text)
    assert err.value.line is not None and err.value.column is not None


def test_malformed_json_located():
    with pytest.raises(ParseError) as err:
        parse_text('{"vertices": [\n  "1",\n  ]')
    assert err.value.line == 3


def test_unknown_arrow_in_relation():
    obj = json.loads(fixture_text("ex14"))
    obj["relations"][0][0]["path"] = ["a2", "zz"]
    with pytest.raises(SchemaError) as err:
        parse_text(json.dumps(obj))
    assert err.value.key == "relations"


@pytest.mark.parametrize("key", ["vertices", "arrows", "nilpotency_cap"])
def test_missing_key_named(key):
    obj = json.loads(fixture_text("ex14"))
    del obj[key]
    with pytest.raises(SchemaError) as err:
        parse_text(json.dumps(obj))
    assert err.value.key == key


def test_length_one_relation_rejected():
    obj = json.loads(fixture_text("ex14"))
    obj["relations"] = [[{"coeff": "1", "path": ["a1"]}]]
    with pytest.raises(NonAdmissible):
        parse_text(json.dumps(obj))


def test_cap_certificate():
    pres = QuiverPresentation(QQ, ["1"], [("x", "1", "1")], [], 3)
    with pytest.raises(CapNotNilpotent):
        build_algebra(pres)


def test_polynomial_relation():
    a = fixture_algebra("commsquare")
    assert validate_algebra(a) == []
    ba = a.labels.index("b*a") if "b*a" in a.labels else None
    dc = a.labels.index("d*c") if "d*c" in a.labels else None
    # b*a and d*c coincide, so only one of them survives as a basis label
    assert (ba is None) != (dc is None)


def test_prime_field_build():
    obj = json.loads(fixture_text("ex15"))
    obj["field"] = {"kind": "prime_field", "characteristic": 101}
    a = build_algebra(parse_text(json.dumps(obj)))
    assert a.dim == 9 and a.field == GF(101)
    assert validate_algebra(a) == []


# ---------------------------------------------------------------------------
# properties


def count_monomial_normal_forms(pres):
    """Independent enumeration: paths avoiding every monomial relation as a subword."""
    zero = {tuple(path) for rel in pres.relations for _, path in rel}
    amap = pres.arrow_map()
    count = len(pres.vertices)
    frontier = [(name,) for name, _, _ in pres.arrows]
    while frontier:
        nxt = []
        for path in frontier:
            # path is written left to right as composed: path[0] is applied last
            if any(path[i:j] in zero for i in range(len(path)) for j in range(i + 2, len(path) + 1)):
                continue
            count += 1
            for name, s, t in pres.arrows:
                if s == amap[path[0]][1]:
                    nxt.append((name,) + path)
        frontier = nxt
    return count


@given(presentations)
def test_monomial_dimension_matches_enumeration(pres):
    assert all(len(rel) == 1 for rel in pres.relations)
    assert build_algebra(pres).dim == count_monomial_normal_forms(pres)


@given(presentations)
def test_build_is_deterministic(pres):
    a, b = build_algebra(pres), build_algebra(pres)
    assert a.labels == b.labels and a.mult == b.mult


@given(algebras)
def test_generated_algebras_validate(a):
    assert validate_algebra(a) == []
    n = len(a.idempotents)
    assert sum(projective_indecomposable(a, i, LEFT).dim for i in range(n)) == a.dim
    assert sum(projective_indecomposable(a, i, RIGHT).dim for i in range(n)) == a.dim


@given(algebras)
def test_full_corner_is_identity(a):
    c, _ = corner_algebra(a, Idempotent(tuple(range(len(a.idempotents)))))
    assert c.structure_equal(a)
    assert opposite_algebra(opposite_algebra(a)).structure_equal(a)
