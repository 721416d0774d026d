"""Profunctor optics via explicit capability passing.

A :class:`ProfOptic` is a transformation that, handed any lawful
:class:`ProfunctorCapability` for its functor family, turns a profunctor
value on the focus pair into one on the whole pair.  Rank-2 quantification
becomes a plain argument: the capability record carries ``dimap`` plus a
per-shape ``enhance``.
"""

from dataclasses import dataclass
from typing import Callable

from .base import Just, Left, Nothing, Right, identity
from .functors import (
    FunctorFamily,
    affine_match,
    affine_supported,
    is_product,
    is_sum,
    pair_shape,
    sum_shape,
)
from .iso import IsoOptic, enhance_iso, iso_compose, iso_dimap, iso_identity


class UnsupportedOperatorError(TypeError):
    """Raised when an operator's capability cannot handle a shape the optic
    zooms through (e.g. reading from a map-only family)."""


@dataclass(frozen=True)
class ProfunctorCapability:
    name: str
    dimap: Callable    # (f, g, p) -> p'
    enhance: Callable  # (shape, p) -> p'


@dataclass(frozen=True)
class ProfOptic:
    family: FunctorFamily
    run: Callable  # (capability, pab) -> pst

    def compose(self, inner):
        family = _merge_families(self.family, inner.family)
        return ProfOptic(
            family=family,
            run=lambda cap, p: self.run(cap, inner.run(cap, p)),
        )

    def map_optic(self, h):
        return prof_apply(self, FUNCTION_ARROW, h)


def prof_apply(optic: ProfOptic, cap: ProfunctorCapability, pab):
    return optic.run(cap, pab)


def prof_inj(fwd, bwd, family) -> ProfOptic:
    return ProfOptic(family=family, run=lambda cap, p: cap.dimap(fwd, bwd, p))


def prof_identity(family) -> ProfOptic:
    return prof_inj(identity, identity, family)


def prof_compose(outer: ProfOptic, inner: ProfOptic) -> ProfOptic:
    return outer.compose(inner)


def _merge_families(f1: FunctorFamily, f2: FunctorFamily) -> FunctorFamily:
    if f1.name == f2.name:
        return f1

    # Composing across families demands capabilities from both sides; the
    # merged family is generated by the union of the two shape pools.
    def member(shape):
        if f1.member(shape) or f2.member(shape):
            return True
        if shape.parts:
            return all(member(part) for part in shape.parts)
        return False

    return FunctorFamily(f"{f1.name}+{f2.name}", member)


# Operator profunctors -------------------------------------------------------

FUNCTION_ARROW = ProfunctorCapability(
    name="FunctionArrow",
    dimap=lambda f, g, h: (lambda x: g(h(f(x)))),
    enhance=lambda shape, h: (lambda p: shape.map(h, p)),
)


@dataclass(frozen=True)
class Getting:
    """Forgets the update side: carries only a reader to the focus."""

    run: Callable  # s -> a


def _getting_enhance(shape, p):
    if shape.product is None:
        raise UnsupportedOperatorError(
            f"get needs a product decomposition; shape {shape.name} has none"
        )
    return Getting(lambda payload: p.run(shape.product.to_product(payload)[1]))


GETTING = ProfunctorCapability(
    name="Getting",
    dimap=lambda f, g, p: Getting(lambda s: p.run(f(s))),
    enhance=_getting_enhance,
)


@dataclass(frozen=True)
class Matching:
    """Carries a partial reader: Right(focus) on a hit, Left(rest) on a miss."""

    run: Callable  # s -> Left(t) | Right(a)


def _matching_dimap(f, g, p):
    def run(s):
        e = p.run(f(s))
        if isinstance(e, Left):
            return Left(g(e.value))
        return e

    return Matching(run)


def _matching_enhance(shape, p):
    if not affine_supported(shape):
        raise UnsupportedOperatorError(
            f"match needs an affine decomposition; shape {shape.name} has none"
        )

    def run(payload):
        m = affine_match(shape, payload)
        if isinstance(m, Left):
            return m
        e = p.run(m.value)
        if isinstance(e, Left):
            t = e.value
            return Left(shape.map(lambda _: t, payload))
        return e

    return Matching(run)


MATCHING = ProfunctorCapability(
    name="Matching",
    dimap=_matching_dimap,
    enhance=_matching_enhance,
)


def get_operator(optic: ProfOptic):
    """Total reader of a profunctor optic over a product-capable family."""
    return optic.run(GETTING, Getting(identity)).run


def match_operator(optic: ProfOptic):
    """Partial reader: s -> Left(rest) | Right(focus)."""
    return optic.run(MATCHING, Matching(Right)).run


# Prebuilt profunctor optics -------------------------------------------------

def _swap(p):
    return (p[1], p[0])


def _maybe_to_sum(m):
    return Right(m.value) if isinstance(m, Just) else Left(())


def _sum_to_maybe(e):
    return Just(e.value) if isinstance(e, Right) else Nothing()


_PAIR = pair_shape()
_SUM = sum_shape()


def prof_second() -> ProfOptic:
    return ProfOptic(
        family=is_product(),
        run=lambda cap, p: cap.enhance(_PAIR, p),
    )


def prof_first() -> ProfOptic:
    return ProfOptic(
        family=is_product(),
        run=lambda cap, p: cap.dimap(_swap, _swap, cap.enhance(_PAIR, p)),
    )


def prof_right() -> ProfOptic:
    return ProfOptic(
        family=is_sum(),
        run=lambda cap, p: cap.enhance(_SUM, p),
    )


def prof_just() -> ProfOptic:
    return ProfOptic(
        family=is_sum(),
        run=lambda cap, p: cap.dimap(
            _maybe_to_sum, _sum_to_maybe, cap.enhance(_SUM, p)
        ),
    )


# Conversions to and from iso optics -----------------------------------------

def iso_to_prof(optic: IsoOptic) -> ProfOptic:
    """Enhance through the carried shape, then reparametrize by the arrows."""
    return ProfOptic(
        family=optic.family,
        run=lambda cap, p: cap.dimap(
            optic.forward, optic.backward, cap.enhance(optic.shape, p)
        ),
    )


def iso_capability(family: FunctorFamily) -> ProfunctorCapability:
    """Iso optics themselves form a capability record for their family."""
    return ProfunctorCapability(
        name="IsoOptic",
        dimap=lambda f, g, optic: iso_dimap(f, g, optic),
        enhance=lambda shape, optic: iso_compose(enhance_iso(shape, family), optic),
    )


def prof_to_iso(optic: ProfOptic) -> IsoOptic:
    """Instantiate at the iso-optic capability and apply to the identity."""
    return optic.run(iso_capability(optic.family), iso_identity(optic.family))
