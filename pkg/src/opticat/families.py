"""Concrete optic families and the operations every family shares.

Each family is a small record of total functions.  All families support the
same four operations: composition, identity, injection of a plain function
pair, and an action on functions (``map_optic``).  Composing two records of
different families raises; heterogeneous composition is done either through
the tag lattice (see :mod:`opticat.cli`) or through the profunctor encoding
(see :mod:`opticat.prof`).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .base import Just, Left, Nothing, Right, either, identity


class FamilyMismatchError(TypeError):
    """Raised when composing raw records from two different families."""


class FamilyTag(Enum):
    ADAPTER = "ADAPTER"
    LENS = "LENS"
    PRISM = "PRISM"
    OPTIONAL = "OPTIONAL"
    ACHLENS = "ACHLENS"
    SETTER = "SETTER"


# Upward-closed sets of the capability order.  ADAPTER sits at the bottom
# (most structure), SETTER at the top (only a map action survives).
_UPSETS = {
    FamilyTag.ADAPTER: frozenset(FamilyTag),
    FamilyTag.LENS: frozenset({FamilyTag.LENS, FamilyTag.OPTIONAL, FamilyTag.SETTER}),
    FamilyTag.PRISM: frozenset({FamilyTag.PRISM, FamilyTag.OPTIONAL, FamilyTag.SETTER}),
    FamilyTag.ACHLENS: frozenset({FamilyTag.ACHLENS, FamilyTag.SETTER}),
    FamilyTag.OPTIONAL: frozenset({FamilyTag.OPTIONAL, FamilyTag.SETTER}),
    FamilyTag.SETTER: frozenset({FamilyTag.SETTER}),
}


def family_le(a: FamilyTag, b: FamilyTag) -> bool:
    """True when every optic of family ``a`` embeds into family ``b``."""
    return b in _UPSETS[a]


def family_join(a: FamilyTag, b: FamilyTag) -> FamilyTag:
    """Least family both ``a`` and ``b`` embed into."""
    shared = _UPSETS[a] & _UPSETS[b]
    for c in shared:
        if all(d in _UPSETS[c] for d in shared):
            return c
    raise ValueError(f"no join for {a} and {b}")  # unreachable: SETTER is top


@dataclass(frozen=True)
class Lens:
    """Product-like access: total ``get`` plus ``put(b, s)``."""

    get: Callable
    put: Callable

    tag = FamilyTag.LENS

    @classmethod
    def inj(cls, fwd, bwd):
        # put discards the previous whole value: there is no structure on s
        # to push the new focus into.
        return cls(get=fwd, put=lambda b, _s: bwd(b))

    def compose(self, inner):
        _require_same_family(self, inner)
        outer = self

        def put(y, s):
            return outer.put(inner.put(y, outer.get(s)), s)

        return Lens(get=lambda s: inner.get(outer.get(s)), put=put)

    def map_optic(self, h):
        return lambda s: self.put(h(self.get(s)), s)


@dataclass(frozen=True)
class Prism:
    """Sum-like access: ``match`` splits off the focus, ``build`` re-injects.

    ``match`` returns ``Right(focus)`` on a hit and ``Left(rest)`` on a miss.
    """

    match: Callable
    build: Callable

    tag = FamilyTag.PRISM

    @classmethod
    def inj(cls, fwd, bwd):
        return cls(match=lambda s: Right(fwd(s)), build=bwd)

    def compose(self, inner):
        _require_same_family(self, inner)
        outer = self

        def match(s):
            e = outer.match(s)
            if isinstance(e, Left):
                return e
            e2 = inner.match(e.value)
            if isinstance(e2, Left):
                return Left(outer.build(e2.value))
            return e2

        return Prism(match=match, build=lambda y: outer.build(inner.build(y)))

    def map_optic(self, h):
        return lambda s: either(identity, lambda a: self.build(h(a)), self.match(s))


@dataclass(frozen=True)
class Adapter:
    """A pure conversion pair."""

    fwd: Callable
    bwd: Callable

    tag = FamilyTag.ADAPTER

    @classmethod
    def inj(cls, fwd, bwd):
        return cls(fwd=fwd, bwd=bwd)

    def compose(self, inner):
        _require_same_family(self, inner)
        return Adapter(
            fwd=lambda s: inner.fwd(self.fwd(s)),
            bwd=lambda y: self.bwd(inner.bwd(y)),
        )

    def map_optic(self, h):
        return lambda s: self.bwd(h(self.fwd(s)))


@dataclass(frozen=True)
class Setter:
    """Map-only access: ``over`` lifts a focus function to the whole."""

    over: Callable

    tag = FamilyTag.SETTER

    @classmethod
    def inj(cls, fwd, bwd):
        return cls(over=lambda h: (lambda s: bwd(h(fwd(s)))))

    def compose(self, inner):
        _require_same_family(self, inner)
        return Setter(over=lambda h: self.over(inner.over(h)))

    def map_optic(self, h):
        return self.over(h)


@dataclass(frozen=True)
class AchLens:
    """A lens with a constructor: ``create`` builds a whole from a focus."""

    get: Callable
    put: Callable
    create: Callable

    tag = FamilyTag.ACHLENS

    @classmethod
    def inj(cls, fwd, bwd):
        return cls(get=fwd, put=lambda b, _s: bwd(b), create=bwd)

    def compose(self, inner):
        _require_same_family(self, inner)
        outer = self

        def put(y, s):
            return outer.put(inner.put(y, outer.get(s)), s)

        return AchLens(
            get=lambda s: inner.get(outer.get(s)),
            put=put,
            create=lambda y: outer.create(inner.create(y)),
        )

    def map_optic(self, h):
        return lambda s: self.put(h(self.get(s)), s)


@dataclass(frozen=True)
class Optional:
    """Affine access: at most one focus.  ``match`` as for prisms, ``put``
    replaces the focus when present and returns the miss value otherwise."""

    match: Callable
    put: Callable

    tag = FamilyTag.OPTIONAL

    @classmethod
    def inj(cls, fwd, bwd):
        return cls(match=lambda s: Right(fwd(s)), put=lambda b, _s: bwd(b))

    def compose(self, inner):
        _require_same_family(self, inner)
        outer = self

        def match(s):
            e = outer.match(s)
            if isinstance(e, Left):
                return e
            e2 = inner.match(e.value)
            if isinstance(e2, Left):
                return Left(outer.put(e2.value, s))
            return e2

        def put(y, s):
            e = outer.match(s)
            if isinstance(e, Left):
                return e.value
            return outer.put(inner.put(y, e.value), s)

        return Optional(match=match, put=put)

    def map_optic(self, h):
        def run(s):
            e = self.match(s)
            if isinstance(e, Left):
                return e.value
            return self.put(h(e.value), s)

        return run


CONCRETE_FAMILIES = {
    FamilyTag.ADAPTER: Adapter,
    FamilyTag.LENS: Lens,
    FamilyTag.PRISM: Prism,
    FamilyTag.OPTIONAL: Optional,
    FamilyTag.ACHLENS: AchLens,
    FamilyTag.SETTER: Setter,
}


def compose(outer, inner):
    """Compose two optics of the same family, outer applied to the whole."""
    return outer.compose(inner)


def identity_optic(family):
    """The identity optic of a family (class or tag)."""
    cls = CONCRETE_FAMILIES.get(family, family)
    return cls.inj(identity, identity)


def inj_optic(family, fwd, bwd):
    """Embed a plain function pair into a family (class or tag)."""
    cls = CONCRETE_FAMILIES.get(family, family)
    return cls.inj(fwd, bwd)


def map_optic(optic, h):
    """Run an optic as a function transformer: ``(a -> b) -> (s -> t)``."""
    return optic.map_optic(h)


def multi_map_optic(fa, fb, fs, ft, optic):
    """Reparametrize all four type slots by plain functions."""
    cls = type(optic)
    return cls.inj(fs, ft).compose(optic).compose(cls.inj(fa, fb))


def dimap_optic(fs, ft, optic):
    """Reparametrize the whole-structure slots only."""
    return type(optic).inj(fs, ft).compose(optic)


def _require_same_family(outer, inner):
    if type(outer) is not type(inner):
        raise FamilyMismatchError(
            f"cannot compose {type(outer).__name__} with {type(inner).__name__}; "
            "promote through the family lattice or the profunctor encoding first"
        )


# Canonical optics -----------------------------------------------------------

def first():
    """Lens onto the left slot of a pair."""
    return Lens(get=lambda p: p[0], put=lambda b, p: (b, p[1]))


def second():
    """Lens onto the right slot of a pair."""
    return Lens(get=lambda p: p[1], put=lambda b, p: (p[0], b))


def just():
    """Prism onto the payload of an option value."""

    def match(m):
        if isinstance(m, Just):
            return Right(m.value)
        if isinstance(m, Nothing):
            return Left(m)
        raise TypeError(f"expected Just or Nothing, got {m!r}")

    return Prism(match=match, build=Just)


def each():
    """Setter over every element of a tuple."""
    return Setter(over=lambda h: (lambda xs: tuple(h(x) for x in xs)))
