"""Container shapes: functor laws, capability round trips, family registry."""

import itertools

import pytest

from opticat.base import UNIT, Just, Left, Nothing, Right
from opticat.functors import (
    Comp,
    Id,
    UnsupportedShapeError,
    affine_match,
    affine_supported,
    any_functor,
    compose_shapes,
    cps_shape,
    id_only,
    id_shape,
    is_pointed_product,
    is_product,
    is_sum,
    maybe_pair_shape,
    maybe_shape,
    pair_shape,
    sum_shape,
)
from opticat.probes import all_functions

DOM = ("a0", "a1", "a2")


def enumerable_shapes():
    pair = pair_shape(("r0", "r1"))
    return [
        id_shape(),
        pair,
        maybe_pair_shape(("r0", "r1")),
        sum_shape(("r0", "r1")),
        maybe_shape(),
        compose_shapes(pair, pair_shape(("q0",))),
        compose_shapes(sum_shape(("r0",)), maybe_shape()),
        compose_shapes(pair, maybe_shape()),
        compose_shapes(id_shape(), id_shape()),
    ]


@pytest.mark.parametrize("shape", enumerable_shapes(), ids=lambda s: s.name)
def test_functor_identity(shape):
    for p in shape.payloads(list(DOM)):
        assert shape.map(lambda a: a, p) == p


@pytest.mark.parametrize("shape", enumerable_shapes(), ids=lambda s: s.name)
def test_functor_composition(shape):
    fns = all_functions(DOM, DOM)
    for f, g in itertools.product(fns[:9], fns[:9]):
        for p in shape.payloads(list(DOM)):
            assert shape.map(lambda a: f(g(a)), p) == shape.map(f, shape.map(g, p))


@pytest.mark.parametrize(
    "shape",
    [s for s in enumerable_shapes() if s.product],
    ids=lambda s: s.name,
)
def test_product_round_trip(shape):
    for p in shape.payloads(list(DOM)):
        unit_part, focus = shape.product.to_product(p)
        assert shape.product.from_product((unit_part, focus)) == p
        assert shape.product.to_product(shape.product.from_product((unit_part, focus))) == (
            unit_part,
            focus,
        )


@pytest.mark.parametrize(
    "shape",
    [s for s in enumerable_shapes() if s.sum],
    ids=lambda s: s.name,
)
def test_sum_round_trip(shape):
    for p in shape.payloads(list(DOM)):
        e = shape.sum.to_sum(p)
        assert shape.sum.from_sum(e) == p
        assert shape.sum.to_sum(shape.sum.from_sum(e)) == e


def test_pair_to_product_shape():
    shape = pair_shape(("r0",))
    assert shape.product.to_product(("r0", "a1")) == (("r0", UNIT), "a1")
    assert shape.product.from_product((("r0", UNIT), "a2")) == ("r0", "a2")


def test_compose_pair_pair_nested_unit():
    # the outer residual routes through the inner product: the unit part is
    # a nested pair of units around both residuals
    shape = compose_shapes(pair_shape(("x", "y")), pair_shape(("u", "v")))
    payload = Comp(("x", ("v", "a2")))
    unit_part, focus = shape.product.to_product(payload)
    assert focus == "a2"
    assert unit_part == Comp(("x", ("v", UNIT)))
    assert shape.product.from_product((unit_part, focus)) == payload
    for p in shape.payloads(list(DOM)):
        assert shape.product.from_product(shape.product.to_product(p)) == p


def test_compose_with_id_acts_like_inner():
    inner = pair_shape(("r0", "r1"))
    shape = compose_shapes(id_shape(), inner)
    bump = {"a0": "a1", "a1": "a2", "a2": "a0"}
    for p in inner.payloads(list(DOM)):
        wrapped = Comp(Id(p))
        assert shape.map(lambda a: bump[a], wrapped) == Comp(Id(inner.map(lambda a: bump[a], p)))


def test_maybe_pair_point():
    shape = maybe_pair_shape(("r0",))
    assert shape.point.unit == (Nothing(), UNIT)
    assert shape.product.from_product((shape.point.unit, "a0")) == (Nothing(), "a0")


def test_compose_point_is_nested_unit():
    shape = compose_shapes(maybe_pair_shape(("r0",)), maybe_pair_shape(("q0",)))
    assert shape.point.unit == Comp(((Nothing(), (Nothing(), UNIT))))
    assert shape.product.to_product(
        shape.product.from_product((shape.point.unit, "a1"))
    ) == (shape.point.unit, "a1")


def test_point_requires_product():
    from opticat.functors import ContainerShape, PointCap

    with pytest.raises(ValueError):
        ContainerShape(name="bad", map=lambda h, p: p, point=PointCap(unit=None))


def test_sum_shape_map_only_touches_hits():
    shape = sum_shape(("r0",))
    assert shape.map(lambda a: a.upper(), Left("r0")) == Left("r0")
    assert shape.map(lambda a: a.upper(), Right("a0")) == Right("A0")


def test_id_shape_sum_has_no_residual():
    with pytest.raises(ValueError):
        id_shape().sum.from_sum(Left("r"))


def test_cps_shape_functor_laws():
    shape = cps_shape()
    dom_b = ("b0", "b1")
    probes = all_functions(DOM, dom_b)

    def table_cont(result_by_fn):
        return lambda fn: result_by_fn[tuple(fn(a) for a in DOM)]

    results = {tuple(fn(a) for a in DOM): i for i, fn in enumerate(probes)}
    k = table_cont(results)
    assert all(shape.map(lambda a: a, k)(fn) == k(fn) for fn in probes)
    rot = {"a0": "a1", "a1": "a2", "a2": "a0"}
    swap = {"a0": "a2", "a1": "a1", "a2": "a0"}
    fused = shape.map(lambda a: rot[swap[a]], k)
    staged = shape.map(lambda a: rot[a], shape.map(lambda a: swap[a], k))
    assert all(fused(fn) == staged(fn) for fn in probes)


# Family registry ---------------------------------------------------------------

def test_registry_membership():
    assert is_product().member(pair_shape(("r0",)))
    assert not is_product().member(sum_shape(("r0",)))
    assert is_pointed_product().member(maybe_pair_shape(("r0",)))
    assert not is_pointed_product().member(pair_shape(("r0",)))
    assert is_sum().member(maybe_shape())
    assert not is_sum().member(pair_shape(("r0",)))
    assert id_only().member(id_shape())
    assert not id_only().member(pair_shape(("r0",)))
    assert any_functor().member(cps_shape())


def test_monoid_closure():
    pools = {
        any_functor(): [pair_shape(("r0",)), maybe_shape(), cps_shape()],
        is_product(): [pair_shape(("r0",)), maybe_pair_shape(("q0",))],
        is_sum(): [sum_shape(("r0",)), maybe_shape()],
        is_pointed_product(): [maybe_pair_shape(("r0",)), maybe_pair_shape(("q0",))],
        id_only(): [id_shape()],
    }
    for family, pool in pools.items():
        assert family.member(id_shape()), family.name
        for f, g in itertools.product(pool, pool):
            assert family.member(compose_shapes(f, g)), (family.name, f.name, g.name)


def test_affine_match_pair():
    shape = pair_shape(("r0",))
    assert affine_match(shape, ("r0", "a1")) == Right("a1")


def test_affine_match_sum():
    shape = sum_shape(("r0",))
    assert affine_match(shape, Left("r0")) == Left(Left("r0"))
    assert affine_match(shape, Right("a0")) == Right("a0")


def test_affine_match_compose_pair_maybe():
    shape = compose_shapes(pair_shape(("r0",)), maybe_shape())
    assert affine_match(shape, Comp(("r0", Just("a0")))) == Right("a0")
    assert affine_match(shape, Comp(("r0", Nothing()))) == Left(Comp(("r0", Nothing())))


def test_affine_unsupported_on_cps():
    assert not affine_supported(cps_shape())
    with pytest.raises(UnsupportedShapeError):
        affine_match(cps_shape(), lambda fn: None)
