import pytest
from hypothesis import given

from moritakit.algebra import QuiverPresentation, build_algebra, validate_algebra
from moritakit.errors import SchemaError
from moritakit.exactlin import QQ, rank
from moritakit.fixtures import FIXTURE_NAMES
from moritakit.homological import is_projective
from moritakit.krullschmidt import is_isomorphic
from moritakit.modules import (
    LEFT,
    RIGHT,
    direct_sum,
    dual_bimodule_of_algebra,
    dual_module,
    end_algebra,
    hom_space,
    injective_indecomposable,
    is_faithful,
    module_from_spec,
    projective_indecomposable,
    regular_bimodule,
    regular_module,
    simple_module,
    sum_of,
    tensor_over,
    validate_module,
    zero_module,
)

from conftest import fixture_algebra
from strategies import algebras

FIELD = build_algebra(QuiverPresentation(QQ, ["1"], [], [], 2), "k")


def P(a, i):
    return projective_indecomposable(a, i - 1)


def I(a, i):
    return injective_indecomposable(a, i - 1)


def e_dim(m, i):
    return rank(m.idempotent_action(i))


def fixture_modules(a):
    n = len(a.idempotents)
    mods = [regular_module(a), dual_bimodule_of_algebra(a).left_module()]
    for i in range(n):
        mods += [projective_indecomposable(a, i), injective_indecomposable(a, i), simple_module(a, i)]
    return mods


def test_regular_of_field():
    m = regular_module(FIELD)
    assert m.dim == 1 and all(x.is_identity() for x in m.action)


def test_regular_dims(ex14, ex15):
    assert regular_module(ex14).dim == 5
    assert regular_module(ex15).dim == 9


def test_projective_dims(ex14, ex15):
    assert [P(ex14, i).dim for i in (1, 2, 3)] == [2, 2, 1]
    assert P(ex15, 2).dim == 4


def test_dual_of_simple(ex14):
    for i in range(3):
        d = dual_module(simple_module(ex14, i))
        assert d.side == RIGHT
        assert is_isomorphic(d, simple_module(ex14, i, RIGHT))


@pytest.mark.parametrize("name", ["ex14", "ex15"])
def test_double_dual(name):
    a = fixture_algebra(name)
    for m in fixture_modules(a):
        dd = dual_module(dual_module(m))
        assert dd.side == m.side and dd.action == m.action


def test_ex14_injectives(ex14):
    assert is_isomorphic(I(ex14, 2), P(ex14, 1))
    assert is_isomorphic(I(ex14, 3), P(ex14, 2))
    # e1 A = span{e1} when paths compose right to left
    assert projective_indecomposable(ex14, 0, RIGHT).dim == 1
    assert I(ex14, 1).dim == 1
    assert not is_projective(I(ex14, 1))


def test_direct_sums(ex14):
    z, inj, proj = direct_sum([], algebra=ex14)
    assert z.dim == 0 and inj == [] and proj == []
    m = P(ex14, 1)
    s = sum_of([m, zero_module(ex14)])
    assert is_isomorphic(s, m)
    p = sum_of([P(ex14, 1), P(ex14, 2)])
    assert p.dim == 4
    _, inj, proj = direct_sum([P(ex14, 1), P(ex14, 2)])
    for k in range(2):
        assert (proj[k].matrix @ inj[k].matrix).is_identity()
        assert inj[k].is_intertwiner() and proj[k].is_intertwiner()


def test_hom_examples(ex14):
    assert hom_space(regular_module(ex14), regular_module(ex14)).dim == 5
    assert hom_space(P(ex14, 1), P(ex14, 2)).dim == 0
    assert hom_space(P(ex14, 2), P(ex14, 1)).dim == 1


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_hom_from_projective_counts_weights(name):
    a = fixture_algebra(name)
    for m in fixture_modules(a):
        for i in range(len(a.idempotents)):
            assert hom_space(projective_indecomposable(a, i), m).dim == e_dim(m, i)


@pytest.mark.parametrize("name", ["ex14", "ex15", "auslander-x2"])
def test_homs_intertwine_and_dualise(name):
    a = fixture_algebra(name)
    mods = fixture_modules(a)
    for x in mods[:6]:
        for y in mods[:6]:
            hs = hom_space(x, y)
            assert all(h.is_intertwiner() for h in hs.homs())
            assert hs.dim == hom_space(dual_module(y), dual_module(x)).dim


def test_end_algebra_examples(ex14, ex15):
    b = end_algebra(regular_module(ex14))
    assert b.dim == 5 and validate_algebra(b) == []
    assert end_algebra(sum_of([P(ex14, 1), P(ex14, 2)])).dim == 3
    assert end_algebra(sum_of([P(ex15, 1), P(ex15, 2)])).dim == 6


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_end_algebras_validate(name):
    a = fixture_algebra(name)
    for m in fixture_modules(a)[:4]:
        assert validate_algebra(end_algebra(m)) == []


@pytest.mark.parametrize("name", ["ex14", "ex15", "selfinj-x2"])
def test_tensor_unit(name):
    a = fixture_algebra(name)
    for m in fixture_modules(a):
        t = tensor_over(regular_bimodule(a), m)
        assert t.dim == m.dim and is_isomorphic(t, m)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_nakayama_on_projectives(name):
    a = fixture_algebra(name)
    da = dual_bimodule_of_algebra(a)
    for i in range(len(a.idempotents)):
        nu = tensor_over(da, projective_indecomposable(a, i))
        assert is_isomorphic(nu, dual_module(projective_indecomposable(a, i, RIGHT)))


def test_faithfulness(ex14, ex15):
    assert is_faithful(regular_module(ex14))
    assert is_faithful(sum_of([P(ex14, 1), P(ex14, 2)]))
    assert not is_faithful(P(ex15, 1))


def test_dual_bimodule(ex14, dual_numbers):
    d = dual_bimodule_of_algebra(FIELD)
    assert d.dim == 1 and all(x.is_identity() for x in d.left_action + d.right_action)
    assert is_isomorphic(dual_bimodule_of_algebra(dual_numbers).left_module(), regular_module(dual_numbers))
    da = dual_bimodule_of_algebra(ex14).left_module()
    assert is_isomorphic(da, sum_of([I(ex14, 1), I(ex14, 2), I(ex14, 3)]))


def test_module_specs(ex14):
    assert module_from_spec(ex14, "P1+P2").dim == 4
    assert module_from_spec(ex14, "I3").dim == 2
    assert module_from_spec(ex14, "S2").dim == 1
    assert module_from_spec(ex14, "regular").dim == 5
    assert module_from_spec(ex14, "D(regular)").dim == 5
    for bad in ["", "P9", "Q1", "P1++P2"]:
        with pytest.raises(SchemaError):
            module_from_spec(ex14, bad)


@pytest.mark.parametrize("name", ["ex14", "ex15"])
def test_constructed_modules_validate(name):
    for m in fixture_modules(fixture_algebra(name)):
        assert validate_module(m, full=True) == []


@given(algebras)
def test_hom_adjunction_on_generated(a):
    n = len(a.idempotents)
    mods = [regular_module(a), dual_bimodule_of_algebra(a).left_module()] + \
        [injective_indecomposable(a, i) for i in range(n)]
    for m in mods:
        for i in range(n):
            assert hom_space(projective_indecomposable(a, i), m).dim == e_dim(m, i)


@given(algebras)
def test_nakayama_on_generated(a):
    da = dual_bimodule_of_algebra(a)
    for i in range(len(a.idempotents)):
        nu = tensor_over(da, projective_indecomposable(a, i))
        assert is_isomorphic(nu, injective_indecomposable(a, i))


@given(algebras)
def test_duality_on_generated(a):
    mods = [projective_indecomposable(a, i) for i in range(len(a.idempotents))] + \
        [simple_module(a, i) for i in range(len(a.idempotents))]
    for x in mods:
        for y in mods:
            hs = hom_space(x, y)
            assert all(h.is_intertwiner() for h in hs.homs())
            assert hs.dim == hom_space(dual_module(y), dual_module(x)).dim
