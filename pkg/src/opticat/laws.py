"""Optic generators over finite domains and the executable law suite.

Checkers never assert; they return :class:`LawReport` values whose failures
carry the first counterexample in enumeration order.  Budgeted runs that hit
the evaluation cap come back INCONCLUSIVE, never silently passed.  The
module keeps a registry mapping every named law to exactly one checker so a
coverage guard can fail when a law goes untested.
"""

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .base import Just, Left, Nothing, Right, identity
from .families import (
    AchLens,
    Adapter,
    FamilyTag,
    Lens,
    Optional,
    Prism,
    Setter,
)
from .functors import (
    Comp,
    compose_shapes,
    id_shape,
    maybe_pair_shape,
    maybe_shape,
    pair_shape,
    sum_shape,
)
from .iso import IsoOptic, enhance_iso, iso_identity, iso_inj, observational_eq
from .probes import all_functions, maps_agree

MAX_EVALS_PER_LAW = 100_000

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class FiniteDomain:
    name: str
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValueError(f"domain {self.name} is empty")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"domain {self.name} has duplicate elements")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def labels(prefix: str, n: int) -> FiniteDomain:
    return FiniteDomain(prefix, tuple(f"{prefix}{i}" for i in range(n)))


def _elems(dom):
    return tuple(dom.elements) if isinstance(dom, FiniteDomain) else tuple(dom)


@dataclass
class LawReport:
    law: str
    cases: int = 0
    failures: list = field(default_factory=list)
    status: str = PASS

    @property
    def passed(self):
        return self.status == PASS and not self.failures


class _LawRun:
    """Collects cases for one law; keeps the first counterexample only."""

    def __init__(self, law, budget=MAX_EVALS_PER_LAW):
        self.report = LawReport(law=law)
        self.budget = budget

    def case(self, inputs, expected, actual):
        """Record one comparison; returns False when enumeration should stop."""
        if self.report.cases >= self.budget:
            self.report.status = INCONCLUSIVE
            return False
        self.report.cases += 1
        if expected != actual:
            self.report.failures.append(
                {"inputs": inputs, "expected": expected, "actual": actual}
            )
            self.report.status = FAIL
            return False
        return True

    def check(self, inputs, ok):
        return self.case(inputs, True, bool(ok))


def merge_reports(reports):
    """Deterministic merge: one report per law name, first failure kept."""
    by_law = {}
    for rep in reports:
        cur = by_law.get(rep.law)
        if cur is None:
            by_law[rep.law] = LawReport(
                rep.law, rep.cases, list(rep.failures[:1]), rep.status
            )
            continue
        cur.cases += rep.cases
        if not cur.failures:
            cur.failures = list(rep.failures[:1])
        order = {FAIL: 2, INCONCLUSIVE: 1, PASS: 0}
        if order[rep.status] > order[cur.status]:
            cur.status = rep.status
    return [by_law[name] for name in sorted(by_law)]


def report_lines(reports):
    """Machine-readable output: one JSON record per law."""
    for rep in merge_reports(reports):
        yield json.dumps(
            {
                "law": rep.law,
                "status": rep.status,
                "cases": rep.cases,
                "counterexample": _plain(rep.failures[0]) if rep.failures else None,
            },
            sort_keys=True,
        )


def write_report(reports, fp):
    for line in report_lines(reports):
        fp.write(line + "\n")


def _plain(value):
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return repr(value)


# Generators ------------------------------------------------------------------

def gen_lawful_lens(seed, dom_r, dom_a, dom_s=None) -> Lens:
    """A lawful simple lens from a seeded bijection between the whole domain
    and residual-focus pairs."""
    rs, As = _elems(dom_r), _elems(dom_a)
    pairs = [(r, a) for r in rs for a in As]
    ss = _elems(dom_s) if dom_s is not None else tuple(f"s{i}" for i in range(len(pairs)))
    if len(ss) != len(pairs):
        raise ValueError(f"|S|={len(ss)} but |R|*|A|={len(pairs)}")
    rng = random.Random(seed)
    to_pair = dict(zip(ss, rng.sample(pairs, len(pairs))))
    from_pair = {v: k for k, v in to_pair.items()}
    return Lens(
        get=lambda s: to_pair[s][1],
        put=lambda b, s: from_pair[(to_pair[s][0], b)],
    )


def gen_lawful_prism(seed, dom_r, dom_a, dom_s=None) -> Prism:
    """A lawful simple prism from a seeded bijection between the whole domain
    and a residual-plus-focus sum."""
    rs, As = _elems(dom_r), _elems(dom_a)
    cells = [Left(r) for r in rs] + [Right(a) for a in As]
    ss = _elems(dom_s) if dom_s is not None else tuple(f"s{i}" for i in range(len(cells)))
    if len(ss) != len(cells):
        raise ValueError(f"|S|={len(ss)} but |R|+|A|={len(cells)}")
    rng = random.Random(seed)
    split = dict(zip(ss, rng.sample(cells, len(cells))))
    unsplit = {v: k for k, v in split.items()}

    def match(s):
        e = split[s]
        return e if isinstance(e, Right) else Left(s)

    return Prism(match=match, build=lambda a: unsplit[Right(a)])


def gen_lawful_achlens(seed, dom_r, dom_a, dom_s=None) -> AchLens:
    """A lawful achromatic lens: a lens bijection whose residual has a
    seeded distinguished point used by ``create``."""
    rs, As = _elems(dom_r), _elems(dom_a)
    pairs = [(r, a) for r in rs for a in As]
    ss = _elems(dom_s) if dom_s is not None else tuple(f"s{i}" for i in range(len(pairs)))
    if len(ss) != len(pairs):
        raise ValueError(f"|S|={len(ss)} but |R|*|A|={len(pairs)}")
    rng = random.Random(seed)
    to_pair = dict(zip(ss, rng.sample(pairs, len(pairs))))
    from_pair = {v: k for k, v in to_pair.items()}
    point = rng.choice(rs)
    return AchLens(
        get=lambda s: to_pair[s][1],
        put=lambda b, s: from_pair[(to_pair[s][0], b)],
        create=lambda b: from_pair[(point, b)],
    )


def gen_lawful_adapter(seed, dom_a, dom_s=None) -> Adapter:
    As = _elems(dom_a)
    ss = _elems(dom_s) if dom_s is not None else tuple(f"s{i}" for i in range(len(As)))
    if len(ss) != len(As):
        raise ValueError(f"|S|={len(ss)} but |A|={len(As)}")
    rng = random.Random(seed)
    fwd = dict(zip(ss, rng.sample(As, len(As))))
    bwd = {v: k for k, v in fwd.items()}
    return Adapter(fwd=lambda s: fwd[s], bwd=lambda a: bwd[a])


def gen_setter(seed, shape) -> Setter:
    """The canonical lawful setter of a shape: its map action.  Seed is
    accepted for interface uniformity; the result is shape-determined."""
    del seed
    return Setter(over=lambda h: (lambda p: shape.map(h, p)))


def gen_lawful_optional(seed, dom_miss, dom_keep, dom_a, dom_s=None) -> Optional:
    """A lawful simple optional from a bijection S = miss + keep*focus."""
    ms, ks, As = _elems(dom_miss), _elems(dom_keep), _elems(dom_a)
    cells = [Left(m) for m in ms] + [Right((k, a)) for k in ks for a in As]
    ss = _elems(dom_s) if dom_s is not None else tuple(f"s{i}" for i in range(len(cells)))
    if len(ss) != len(cells):
        raise ValueError(f"|S|={len(ss)} but |miss|+|keep|*|A|={len(cells)}")
    rng = random.Random(seed)
    split = dict(zip(ss, rng.sample(cells, len(cells))))
    unsplit = {v: k for k, v in split.items()}

    def match(s):
        e = split[s]
        return Right(e.value[1]) if isinstance(e, Right) else Left(s)

    def put(b, s):
        e = split[s]
        if isinstance(e, Left):
            return s
        return unsplit[Right((e.value[0], b))]

    return Optional(match=match, put=put)


def gen_unlawful_lens(dom_a, dom_s) -> Lens:
    """Deliberately broken: put ignores the new focus, so GetPut fails."""
    As, ss = _elems(dom_a), _elems(dom_s)
    return Lens(get=lambda s: As[ss.index(s) % len(As)], put=lambda b, s: s)


# Random (not necessarily lawful) records for structural-law fixtures --------

def _rand_table(rng, dom_in, dom_out):
    return {x: rng.choice(list(dom_out)) for x in dom_in}


def gen_random_optic(tag: FamilyTag, seed, dom_a, dom_s):
    """An arbitrary total record of the family.  The shared-operation laws
    hold for any record, lawful or not, so these make strong fixtures."""
    rng = random.Random(f"{tag}:{seed}")
    As, ss = _elems(dom_a), _elems(dom_s)
    if tag == FamilyTag.LENS:
        get = _rand_table(rng, ss, As)
        put = {(b, s): rng.choice(ss) for b in As for s in ss}
        return Lens(get=lambda s: get[s], put=lambda b, s: put[(b, s)])
    if tag == FamilyTag.PRISM:
        cells = [Left(t) for t in ss] + [Right(a) for a in As]
        match = {s: rng.choice(cells) for s in ss}
        build = _rand_table(rng, As, ss)
        return Prism(match=lambda s: match[s], build=lambda a: build[a])
    if tag == FamilyTag.ADAPTER:
        fwd = _rand_table(rng, ss, As)
        bwd = _rand_table(rng, As, ss)
        return Adapter(fwd=lambda s: fwd[s], bwd=lambda a: bwd[a])
    if tag == FamilyTag.SETTER:
        e1 = _rand_table(rng, ss, As)
        e2 = _rand_table(rng, ss, As)
        combine = {(s, b1, b2): rng.choice(ss) for s in ss for b1 in As for b2 in As}
        return Setter(
            over=lambda h: (lambda s: combine[(s, h(e1[s]), h(e2[s]))])
        )
    if tag == FamilyTag.ACHLENS:
        get = _rand_table(rng, ss, As)
        put = {(b, s): rng.choice(ss) for b in As for s in ss}
        create = _rand_table(rng, As, ss)
        return AchLens(
            get=lambda s: get[s],
            put=lambda b, s: put[(b, s)],
            create=lambda b: create[b],
        )
    if tag == FamilyTag.OPTIONAL:
        cells = [Left(t) for t in ss] + [Right(a) for a in As]
        match = {s: rng.choice(cells) for s in ss}
        put = {(b, s): rng.choice(ss) for b in As for s in ss}
        return Optional(match=lambda s: match[s], put=lambda b, s: put[(b, s)])
    raise KeyError(tag)


def gen_iso_optic(seed, shape, family, dom_a, dom_b, dom_s, dom_t) -> IsoOptic:
    """An arbitrary iso optic: seeded forward/backward tables over the
    shape's enumerated payloads."""
    if shape.payloads is None:
        raise ValueError(f"shape {shape.name} has no payload enumeration")
    rng = random.Random(f"{shape.name}:{seed}")
    pa = shape.payloads(list(_elems(dom_a)))
    pb = shape.payloads(list(_elems(dom_b)))
    fwd = {s: rng.choice(pa) for s in _elems(dom_s)}
    bwd = {p: rng.choice(list(_elems(dom_t))) for p in pb}
    return IsoOptic(
        family=family,
        shape=shape,
        forward=lambda s: fwd[s],
        backward=lambda p: bwd[p],
    )


# Concrete-family law groups --------------------------------------------------

def check_lens_laws(lens, dom_a, dom_s, budget=MAX_EVALS_PER_LAW):
    As, ss = _elems(dom_a), _elems(dom_s)
    get_put = _LawRun("lens.get_put", budget)
    for b, s in itertools.product(As, ss):
        if not get_put.case({"b": b, "s": s}, b, lens.get(lens.put(b, s))):
            break
    put_get = _LawRun("lens.put_get", budget)
    for s in ss:
        if not put_get.case({"s": s}, s, lens.put(lens.get(s), s)):
            break
    put_put = _LawRun("lens.put_put", budget)
    for b, b2, s in itertools.product(As, As, ss):
        if not put_put.case(
            {"b": b, "b2": b2, "s": s},
            lens.put(b, s),
            lens.put(b, lens.put(b2, s)),
        ):
            break
    return [get_put.report, put_get.report, put_put.report]


def check_prism_laws(prism, dom_a, dom_s, budget=MAX_EVALS_PER_LAW):
    As, ss = _elems(dom_a), _elems(dom_s)
    match_build = _LawRun("prism.match_build", budget)
    for b in As:
        if not match_build.case({"b": b}, Right(b), prism.match(prism.build(b))):
            break
    build_match = _LawRun("prism.build_match", budget)
    for s in ss:
        e = prism.match(s)
        if isinstance(e, Right):
            if not build_match.case({"s": s}, s, prism.build(e.value)):
                break
    no_match = _LawRun("prism.no_match_identity", budget)
    for s in ss:
        e = prism.match(s)
        if isinstance(e, Left):
            if not no_match.case({"s": s}, s, e.value):
                break
    return [match_build.report, build_match.report, no_match.report]


def check_adapter_laws(adapter, dom_a, dom_s, budget=MAX_EVALS_PER_LAW):
    fwd_bwd = _LawRun("adapter.fwd_bwd", budget)
    for a in _elems(dom_a):
        if not fwd_bwd.case({"a": a}, a, adapter.fwd(adapter.bwd(a))):
            break
    bwd_fwd = _LawRun("adapter.bwd_fwd", budget)
    for s in _elems(dom_s):
        if not bwd_fwd.case({"s": s}, s, adapter.bwd(adapter.fwd(s))):
            break
    return [fwd_bwd.report, bwd_fwd.report]


def check_setter_laws(setter, dom_a, wholes, budget=MAX_EVALS_PER_LAW):
    As = _elems(dom_a)
    over_id = _LawRun("setter.over_identity", budget)
    run_id = setter.over(identity)
    for p in wholes:
        if not over_id.case({"p": p}, p, run_id(p)):
            break
    over_comp = _LawRun("setter.over_composition", budget)
    fns = all_functions(As, As)
    done = False
    for f, g in itertools.product(fns, fns):
        fused = setter.over(lambda a: f(g(a)))
        staged = setter.over(f)
        inner = setter.over(g)
        for p in wholes:
            if not over_comp.case(
                {"f": f, "g": g, "p": p}, fused(p), staged(inner(p))
            ):
                done = True
                break
        if done:
            break
    return [over_id.report, over_comp.report]


def check_achlens_laws(al, dom_a, dom_s, budget=MAX_EVALS_PER_LAW):
    reports = [
        LawReport(rep.law.replace("lens.", "achlens."), rep.cases, rep.failures, rep.status)
        for rep in check_lens_laws(al, dom_a, dom_s, budget)
    ]
    get_create = _LawRun("achlens.get_create", budget)
    for b in _elems(dom_a):
        if not get_create.case({"b": b}, b, al.get(al.create(b))):
            break
    return reports + [get_create.report]


def check_optional_laws(opt, dom_a, dom_s, budget=MAX_EVALS_PER_LAW):
    As, ss = _elems(dom_a), _elems(dom_s)
    hit_put = _LawRun("optional.hit_put_identity", budget)
    for s in ss:
        e = opt.match(s)
        if isinstance(e, Right):
            if not hit_put.case({"s": s}, s, opt.put(e.value, s)):
                break
    put_match = _LawRun("optional.put_then_match", budget)
    for b, s in itertools.product(As, ss):
        if isinstance(opt.match(s), Right):
            if not put_match.case({"b": b, "s": s}, Right(b), opt.match(opt.put(b, s))):
                break
    miss_put = _LawRun("optional.miss_put_residual", budget)
    for b, s in itertools.product(As, ss):
        e = opt.match(s)
        if isinstance(e, Left):
            if not miss_put.case({"b": b, "s": s}, e.value, opt.put(b, s)):
                break
    return [hit_put.report, put_match.report, miss_put.report]


def lens_is_lawful(lens, dom_a, dom_s):
    return all(r.passed for r in check_lens_laws(lens, dom_a, dom_s))


def prism_is_lawful(prism, dom_a, dom_s):
    return all(r.passed for r in check_prism_laws(prism, dom_a, dom_s))


# Shape law group -------------------------------------------------------------

def check_functor_laws(shape, dom_a, budget=MAX_EVALS_PER_LAW):
    As = _elems(dom_a)
    payloads = shape.payloads(list(As))
    fns = all_functions(As, As)

    map_id = _LawRun("functor.map_identity", budget)
    for p in payloads:
        if not map_id.case({"shape": shape.name, "p": p}, p, shape.map(identity, p)):
            break
    map_comp = _LawRun("functor.map_composition", budget)
    done = False
    for f, g in itertools.product(fns, fns):
        for p in payloads:
            if not map_comp.case(
                {"shape": shape.name, "f": f, "g": g, "p": p},
                shape.map(lambda a: f(g(a)), p),
                shape.map(f, shape.map(g, p)),
            ):
                done = True
                break
        if done:
            break

    reports = [map_id.report, map_comp.report]
    if shape.product:
        to_from = _LawRun("product.round_trip_from_to", budget)
        for p in payloads:
            pair = shape.product.to_product(p)
            if not to_from.case(
                {"shape": shape.name, "p": p}, p, shape.product.from_product(pair)
            ):
                break
        from_to = _LawRun("product.round_trip_to_from", budget)
        for p in payloads:
            pair = shape.product.to_product(p)
            if not from_to.case(
                {"shape": shape.name, "pair": pair},
                pair,
                shape.product.to_product(shape.product.from_product(pair)),
            ):
                break
        reports += [to_from.report, from_to.report]
    if shape.sum:
        s_to_from = _LawRun("sum.round_trip_from_to", budget)
        for p in payloads:
            e = shape.sum.to_sum(p)
            if not s_to_from.case(
                {"shape": shape.name, "p": p}, p, shape.sum.from_sum(e)
            ):
                break
        s_from_to = _LawRun("sum.round_trip_to_from", budget)
        for p in payloads:
            e = shape.sum.to_sum(p)
            if not s_from_to.case(
                {"shape": shape.name, "e": e},
                e,
                shape.sum.to_sum(shape.sum.from_sum(e)),
            ):
                break
        reports += [s_to_from.report, s_from_to.report]
    return reports


# Optic-family law group ------------------------------------------------------

@dataclass
class FamilyFixture:
    """Everything the shared-operation law checker needs for one family."""

    name: str
    identity: Callable     # () -> identity optic
    inj: Callable          # (fwd, bwd) -> optic
    triples: list          # [(o1, o2, o3)] composable, outermost first
    doms: dict             # keys: s, a1, a2, a3  (simple optics: b=a, t=s)
    inj_tables: list       # [(f, g, f2, g2)]  f: s->a1, g: a1->s, f2: a1->a3, g2: a3->a1


def check_optic_family_laws(fix, budget=MAX_EVALS_PER_LAW):
    if isinstance(fix, FamilyTag):
        fix = concrete_family_fixture(fix)
    ds, d1 = _elems(fix.doms["s"]), _elems(fix.doms["a1"])
    d2, d3 = _elems(fix.doms["a2"]), _elems(fix.doms["a3"])

    assoc = _LawRun("optic_family.compose_associative", budget)
    ident_l = _LawRun("optic_family.identity_left", budget)
    ident_r = _LawRun("optic_family.identity_right", budget)
    map_comp = _LawRun("optic_family.map_composition", budget)

    for i, (o1, o2, o3) in enumerate(fix.triples):
        lhs = o1.compose(o2.compose(o3))
        rhs = (o1.compose(o2)).compose(o3)
        assoc.check(
            {"fixture": fix.name, "triple": i},
            maps_agree(lhs, rhs, d3, d3, ds, max_evals=budget),
        )
        ident_l.check(
            {"fixture": fix.name, "triple": i},
            maps_agree(fix.identity().compose(o1), o1, d1, d1, ds, max_evals=budget),
        )
        ident_r.check(
            {"fixture": fix.name, "triple": i},
            maps_agree(o1.compose(fix.identity()), o1, d1, d1, ds, max_evals=budget),
        )
        pair_optic = o1.compose(o2)
        for h in all_functions(d2, d2):
            inner_run = o2.map_optic(h)
            staged = o1.map_optic(inner_run)
            fused = pair_optic.map_optic(h)
            ok = all(fused(s) == staged(s) for s in ds)
            if not map_comp.check({"fixture": fix.name, "triple": i, "h": h}, ok):
                break

    inj_id = _LawRun("optic_family.inj_identity", budget)
    inj_comp = _LawRun("optic_family.inj_composition", budget)
    map_inj = _LawRun("optic_family.map_inj", budget)
    for i, (f, g, f2, g2) in enumerate(fix.inj_tables):
        inj_id.check(
            {"fixture": fix.name, "table": i},
            maps_agree(
                fix.inj(identity, identity), fix.identity(), ds, ds, ds,
                max_evals=budget,
            ),
        )
        fused = fix.inj(lambda s: f2(f(s)), lambda y: g(g2(y)))
        staged = fix.inj(f, g).compose(fix.inj(f2, g2))
        inj_comp.check(
            {"fixture": fix.name, "table": i},
            maps_agree(fused, staged, d3, d3, ds, max_evals=budget),
        )
        optic = fix.inj(f, g)
        for h in all_functions(d1, d1):
            run = optic.map_optic(h)
            ok = all(run(s) == g(h(f(s))) for s in ds)
            if not map_inj.check({"fixture": fix.name, "table": i, "h": h}, ok):
                break

    return [
        assoc.report,
        ident_l.report,
        ident_r.report,
        inj_id.report,
        inj_comp.report,
        map_inj.report,
        map_comp.report,
    ]


def concrete_family_fixture(tag: FamilyTag, seed=0, n_triples=3) -> FamilyFixture:
    doms = {
        "s": labels("s", 4),
        "a1": labels("a", 3),
        "a2": labels("m", 3),
        "a3": labels("x", 2),
    }
    triples = [
        (
            gen_random_optic(tag, seed + 10 * k, doms["a1"], doms["s"]),
            gen_random_optic(tag, seed + 10 * k + 1, doms["a2"], doms["a1"]),
            gen_random_optic(tag, seed + 10 * k + 2, doms["a3"], doms["a2"]),
        )
        for k in range(n_triples)
    ]
    rng = random.Random(f"inj:{tag}:{seed}")
    inj_tables = []
    for _ in range(2):
        f = _rand_table(rng, doms["s"].elements, doms["a1"].elements)
        g = _rand_table(rng, doms["a1"].elements, doms["s"].elements)
        f2 = _rand_table(rng, doms["a1"].elements, doms["a3"].elements)
        g2 = _rand_table(rng, doms["a3"].elements, doms["a1"].elements)
        inj_tables.append(
            (
                lambda s, f=f: f[s],
                lambda b, g=g: g[b],
                lambda a, f2=f2: f2[a],
                lambda y, g2=g2: g2[y],
            )
        )
    cls = gen_random_optic(tag, seed, doms["a1"], doms["s"]).__class__
    return FamilyFixture(
        name=f"concrete.{tag.value}",
        identity=lambda: cls.inj(identity, identity),
        inj=cls.inj,
        triples=triples,
        doms=doms,
        inj_tables=inj_tables,
    )


def iso_family_fixture(family, shape_pool, seed=0, n_triples=3) -> FamilyFixture:
    doms = {
        "s": labels("s", 3),
        "a1": labels("a", 3),
        "a2": labels("m", 2),
        "a3": labels("x", 2),
    }
    rng = random.Random(f"{family.name}:{seed}")
    triples = []
    for k in range(n_triples):
        sh1, sh2, sh3 = (rng.choice(shape_pool) for _ in range(3))
        triples.append(
            (
                gen_iso_optic(seed + 10 * k, sh1, family, doms["a1"], doms["a1"], doms["s"], doms["s"]),
                gen_iso_optic(seed + 10 * k + 1, sh2, family, doms["a2"], doms["a2"], doms["a1"], doms["a1"]),
                gen_iso_optic(seed + 10 * k + 2, sh3, family, doms["a3"], doms["a3"], doms["a2"], doms["a2"]),
            )
        )
    inj_tables = []
    for _ in range(2):
        f = _rand_table(rng, doms["s"].elements, doms["a1"].elements)
        g = _rand_table(rng, doms["a1"].elements, doms["s"].elements)
        f2 = _rand_table(rng, doms["a1"].elements, doms["a3"].elements)
        g2 = _rand_table(rng, doms["a3"].elements, doms["a1"].elements)
        inj_tables.append(
            (
                lambda s, f=f: f[s],
                lambda b, g=g: g[b],
                lambda a, f2=f2: f2[a],
                lambda y, g2=g2: g2[y],
            )
        )
    return FamilyFixture(
        name=f"iso.{family.name}",
        identity=lambda: iso_identity(family),
        inj=lambda f, g: iso_inj(f, g, family),
        triples=triples,
        doms=doms,
        inj_tables=inj_tables,
    )


# Standard shapes and natural transformations ---------------------------------

def standard_shapes(residuals=("r0", "r1")) -> dict:
    pair = pair_shape(residuals, name="Pair")
    pair2 = pair_shape(("q0", "q1"), name="Pair2")
    mpair = maybe_pair_shape(residuals, name="MaybePair")
    summ = sum_shape(residuals, name="Sum")
    sum_unit = sum_shape(((),), name="SumUnit")
    mb = maybe_shape()
    return {
        "id": id_shape(),
        "pair": pair,
        "pair2": pair2,
        "maybe_pair": mpair,
        "sum": summ,
        "sum_unit": sum_unit,
        "maybe": mb,
        "compose_pp": compose_shapes(pair, pair2),
        "compose_sm": compose_shapes(summ, mb),
        "compose_pm": compose_shapes(pair, mb),
        "compose_ii": compose_shapes(id_shape(), id_shape()),
    }


@dataclass(frozen=True)
class Natural:
    """A registered natural transformation between two shapes."""

    name: str
    source: Any
    target: Any
    fn: Callable


def standard_naturals(shapes=None, residuals=("r0", "r1")) -> list:
    sh = shapes or standard_shapes(residuals)
    r0 = residuals[0]
    rot = {residuals[i]: residuals[(i + 1) % len(residuals)] for i in range(len(residuals))}
    from .functors import Id

    return [
        Natural("pair_drop", sh["pair"], sh["id"], lambda p: Id(p[1])),
        Natural("pair_tag", sh["pair"], sh["maybe_pair"], lambda p: (Just(p[0]), p[1])),
        Natural("id_point", sh["id"], sh["maybe_pair"], lambda p: (Nothing(), p.value)),
        Natural("id_const_pair", sh["id"], sh["pair"], lambda p: (r0, p.value)),
        Natural(
            "pair_rotate", sh["pair"], sh["pair"], lambda p: (rot[p[0]], p[1])
        ),
        Natural("id_hit", sh["id"], sh["sum"], lambda p: Right(p.value)),
        Natural("id_just", sh["id"], sh["maybe"], lambda p: Just(p.value)),
        Natural(
            "maybe_unit_sum",
            sh["maybe"],
            sh["sum_unit"],
            lambda m: Right(m.value) if isinstance(m, Just) else Left(()),
        ),
        Natural(
            "sum_squash",
            sh["sum"],
            sh["maybe"],
            lambda e: Just(e.value) if isinstance(e, Right) else Nothing(),
        ),
        Natural(
            "sum_rotate",
            sh["sum"],
            sh["sum"],
            lambda e: Left(rot[e.value]) if isinstance(e, Left) else e,
        ),
        Natural("id_nat", sh["id"], sh["id"], lambda p: p),
        Natural(
            "maybe_pair_default",
            sh["maybe_pair"],
            sh["pair"],
            lambda p: (p[0].value if isinstance(p[0], Just) else r0, p[1]),
        ),
    ]


def _natural_retraction_pairs(naturals):
    """(forward, retraction) pairs among the registered naturals: the two
    residual rotations are involutions, tagging a residual is undone by the
    defaulting projection, and the identity retracts itself."""
    by_name = {nat.name: nat for nat in naturals}
    pairs = []
    for fwd_name, bwd_name in (
        ("pair_rotate", "pair_rotate"),
        ("sum_rotate", "sum_rotate"),
        ("id_nat", "id_nat"),
        ("pair_tag", "maybe_pair_default"),
    ):
        if fwd_name in by_name and bwd_name in by_name:
            pairs.append((by_name[fwd_name], by_name[bwd_name]))
    return pairs


def naturals_within(family, naturals):
    return [
        nat
        for nat in naturals
        if family.member(nat.source) and family.member(nat.target)
    ]


# Enhancing law group ---------------------------------------------------------

@dataclass
class CapabilityFixture:
    """A capability record plus the machinery to enumerate and compare its
    profunctor values extensionally."""

    name: str
    cap: Any
    values: Callable  # (dom_in, dom_out) -> list of P values
    eq: Callable      # (p1, p2, dom_in) -> bool


def function_arrow_fixture():
    from .prof import FUNCTION_ARROW

    return CapabilityFixture(
        name="FunctionArrow",
        cap=FUNCTION_ARROW,
        values=lambda din, dout: all_functions(din, dout),
        eq=lambda p1, p2, din: all(p1(x) == p2(x) for x in din),
    )


def getting_fixture(focus_dom):
    from .prof import GETTING, Getting

    focus = _elems(focus_dom)
    return CapabilityFixture(
        name="Getting",
        cap=GETTING,
        values=lambda din, dout: [Getting(f) for f in all_functions(din, focus)],
        eq=lambda p1, p2, din: all(p1.run(x) == p2.run(x) for x in din),
    )


def matching_fixture(focus_dom):
    from .prof import MATCHING, Matching

    focus = _elems(focus_dom)

    def values(din, dout):
        cells = [Left(y) for y in dout] + [Right(a) for a in focus]
        return [Matching(f) for f in all_functions(din, cells)]

    return CapabilityFixture(
        name="Matching",
        cap=MATCHING,
        values=values,
        eq=lambda p1, p2, din: all(p1.run(x) == p2.run(x) for x in din),
    )


def iso_capability_fixture(family, shape_pool, focus_a, focus_b, seed=0, n=4):
    from .prof import iso_capability

    fa, fb = _elems(focus_a), _elems(focus_b)

    def values(din, dout):
        rng = random.Random(f"{family.name}:{seed}:{tuple(din)}:{tuple(dout)}")
        out = []
        for i in range(n):
            shape = rng.choice(shape_pool)
            out.append(gen_iso_optic(seed + i, shape, family, fa, fb, din, dout))
        return out

    return CapabilityFixture(
        name="IsoOptic",
        cap=iso_capability(family),
        values=values,
        eq=lambda p1, p2, din: maps_agree(p1, p2, fa, fb, din),
    )


def check_enhancing_laws(
    fix: CapabilityFixture,
    shapes,
    naturals,
    dom_a,
    dom_b,
    compose_pairs=None,
    budget=MAX_EVALS_PER_LAW,
):
    """The capability laws: dimap is functorial, enhance respects the
    identity shape, shape composition, registered naturals (wedge), and
    commutes with dimap through the shape's map."""
    As, Bs = _elems(dom_a), _elems(dom_b)
    cap = fix.cap
    values = fix.values(As, Bs)

    dimap_id = _LawRun("profunctor.dimap_identity", budget)
    for i, p in enumerate(values):
        if not dimap_id.check(
            {"cap": fix.name, "value": i},
            fix.eq(cap.dimap(identity, identity, p), p, As),
        ):
            break

    dimap_comp = _LawRun("profunctor.dimap_composition", budget)
    fns_a = all_functions(As, As)
    fns_b = all_functions(Bs, Bs)
    done = False
    for f, f2 in itertools.product(fns_a[:6], fns_a[:6]):
        for g, g2 in itertools.product(fns_b[:6], fns_b[:6]):
            for i, p in enumerate(values[:4]):
                fused = cap.dimap(lambda x: f2(f(x)), lambda y: g(g2(y)), p)
                staged = cap.dimap(f, g, cap.dimap(f2, g2, p))
                if not dimap_comp.check(
                    {"cap": fix.name, "value": i}, fix.eq(fused, staged, As)
                ):
                    done = True
                    break
            if done:
                break
        if done:
            break

    ident_shape = _LawRun("enhancing.identity_shape", budget)
    idsh = id_shape()
    id_payloads = idsh.payloads(list(As))
    for i, p in enumerate(values):
        lhs = cap.enhance(idsh, p)
        rhs = cap.dimap(idsh.ident.unwrap, idsh.ident.wrap, p)
        if not ident_shape.check(
            {"cap": fix.name, "value": i}, fix.eq(lhs, rhs, id_payloads)
        ):
            break

    comp_shape = _LawRun("enhancing.compose_shape", budget)
    pairs = compose_pairs or []
    for f_shape, g_shape in pairs:
        fg = compose_shapes(f_shape, g_shape)
        fg_payloads = fg.payloads(list(As))
        for i, p in enumerate(values[:4]):
            lhs = cap.enhance(fg, p)
            rhs = cap.dimap(
                lambda cp: cp.value, Comp, cap.enhance(f_shape, cap.enhance(g_shape, p))
            )
            if not comp_shape.check(
                {"cap": fix.name, "shapes": (f_shape.name, g_shape.name), "value": i},
                fix.eq(lhs, rhs, fg_payloads),
            ):
                break

    wedge = _LawRun("enhancing.wedge", budget)
    for nat in naturals:
        src_payloads = nat.source.payloads(list(As))
        for i, p in enumerate(values[:4]):
            lhs = cap.dimap(identity, nat.fn, cap.enhance(nat.source, p))
            rhs = cap.dimap(nat.fn, identity, cap.enhance(nat.target, p))
            if not wedge.check(
                {"cap": fix.name, "natural": nat.name, "value": i},
                fix.eq(lhs, rhs, src_payloads),
            ):
                break

    map_commute = _LawRun("enhancing.map_commute", budget)
    for shape in shapes:
        payloads = shape.payloads(list(As))
        for u in fns_a[:4]:
            for v in fns_b[:4]:
                for i, p in enumerate(values[:3]):
                    lhs = cap.enhance(shape, cap.dimap(u, v, p))
                    rhs = cap.dimap(
                        lambda pa: shape.map(u, pa),
                        lambda pb: shape.map(v, pb),
                        cap.enhance(shape, p),
                    )
                    if not map_commute.check(
                        {"cap": fix.name, "shape": shape.name, "value": i},
                        fix.eq(lhs, rhs, payloads),
                    ):
                        break

    return [
        dimap_id.report,
        dimap_comp.report,
        ident_shape.report,
        comp_shape.report,
        wedge.report,
        map_commute.report,
    ]


# Functorization law group ----------------------------------------------------

def check_functorization_laws(
    fz, shapes, naturals, dom_a, dom_b, compose_pairs=None, budget=MAX_EVALS_PER_LAW
):
    As, Bs = _elems(dom_a), _elems(dom_b)
    probe = all_functions(As, Bs)
    sample = fz.enhance_op(id_shape())
    cls = type(sample)

    map_is = _LawRun("functorization.map_is_shape_map", budget)
    for shape in shapes:
        optic = fz.enhance_op(shape)
        payloads = shape.payloads(list(As))
        done = False
        for h in probe:
            run = optic.map_optic(h)
            for p in payloads:
                if not map_is.case(
                    {"tag": fz.family_tag.value, "shape": shape.name, "p": p},
                    shape.map(h, p),
                    run(p),
                ):
                    done = True
                    break
            if done:
                break
        if done:
            break

    idsh = id_shape()
    ident_law = _LawRun("functorization.identity_shape", budget)
    ident_law.check(
        {"tag": fz.family_tag.value},
        maps_agree(
            fz.enhance_op(idsh),
            cls.inj(idsh.ident.unwrap, idsh.ident.wrap),
            As,
            Bs,
            idsh.payloads(list(As)),
            max_evals=budget,
        ),
    )

    comp_law = _LawRun("functorization.compose_shape", budget)
    for f_shape, g_shape in compose_pairs or []:
        fg = compose_shapes(f_shape, g_shape)
        lhs = fz.enhance_op(fg)
        rhs = cls.inj(lambda cp: cp.value, Comp).compose(
            fz.enhance_op(f_shape)
        ).compose(fz.enhance_op(g_shape))
        comp_law.check(
            {"tag": fz.family_tag.value, "shapes": (f_shape.name, g_shape.name)},
            maps_agree(lhs, rhs, As, Bs, fg.payloads(list(As)), max_evals=budget),
        )

    wedge = _LawRun("functorization.wedge", budget)
    for nat in naturals:
        lhs = cls.inj(identity, nat.fn).compose(fz.enhance_op(nat.source))
        rhs = cls.inj(nat.fn, identity).compose(fz.enhance_op(nat.target))
        wedge.check(
            {"tag": fz.family_tag.value, "natural": nat.name},
            maps_agree(
                lhs, rhs, As, Bs, nat.source.payloads(list(As)), max_evals=budget
            ),
        )

    inj_commute = _LawRun("functorization.inj_commute", budget)
    fns_a = all_functions(As, As)
    fns_b = all_functions(Bs, Bs)
    for shape in shapes:
        payloads = shape.payloads(list(As))
        done = False
        for u in fns_a[:4]:
            for v in fns_b[:4]:
                lhs = fz.enhance_op(shape).compose(cls.inj(u, v))
                rhs = cls.inj(
                    lambda p, u=u: shape.map(u, p), lambda p, v=v: shape.map(v, p)
                ).compose(fz.enhance_op(shape))
                if not inj_commute.check(
                    {"tag": fz.family_tag.value, "shape": shape.name},
                    maps_agree(lhs, rhs, As, Bs, payloads, max_evals=budget),
                ):
                    done = True
                    break
            if done:
                break
        if done:
            break

    return [
        map_is.report,
        ident_law.report,
        comp_law.report,
        wedge.report,
        inj_commute.report,
    ]


# Iso-specific law group ------------------------------------------------------

def check_iso_laws(family, shape_pool, naturals, seed=0, budget=MAX_EVALS_PER_LAW):
    dom_a = labels("a", 2)
    dom_s = labels("s", 3)
    As, ss = dom_a.elements, dom_s.elements

    normal = _LawRun("iso.normal_form", budget)
    retract = _LawRun("iso.retraction", budget)
    enh_comp = _LawRun("iso.enhance_composition", budget)
    endo = _LawRun("iso.endo_identity", budget)
    eq_nat = _LawRun("iso.equality_up_to_natural", budget)

    for i, shape in enumerate(shape_pool):
        optic = gen_iso_optic(seed + i, shape, family, dom_a, dom_a, dom_s, dom_s)
        rebuilt = iso_inj(optic.forward, optic.backward, family).compose(
            enhance_iso(shape, family)
        )
        normal.check(
            {"family": family.name, "shape": shape.name},
            observational_eq(optic, rebuilt, As, As, ss, max_evals=budget),
        )

        payloads = shape.payloads(list(As))
        enh = enhance_iso(shape, family)
        # equality with the pure zoom forces backward . forward = id; the
        # converse needs natural components (checked below), not raw tables
        same = gen_iso_optic(seed + 100 + i, shape, family, dom_a, dom_a, payloads, payloads)
        agrees = observational_eq(same, enh, As, As, payloads, max_evals=budget)
        section = all(same.backward(same.forward(p)) == p for p in payloads)
        retract.check(
            {"family": family.name, "shape": shape.name, "direction": "arbitrary"},
            (not agrees) or section,
        )

        # chasing an optic through inj/compose round trips must be identity
        chained = iso_identity(family).compose(optic).compose(iso_identity(family))
        endo.check(
            {"family": family.name, "shape": shape.name},
            observational_eq(optic, chained, As, As, ss, max_evals=budget),
        )

    for nat, nat_inv in _natural_retraction_pairs(naturals):
        if not (family.member(nat.source) and family.member(nat.target)):
            continue
        twisted = IsoOptic(family, nat.target, forward=nat.fn, backward=nat_inv.fn)
        payloads = nat.source.payloads(list(As))
        section = all(twisted.backward(twisted.forward(p)) == p for p in payloads)
        enh = enhance_iso(nat.source, family)
        retract.check(
            {"family": family.name, "natural": nat.name, "direction": "natural"},
            section
            and observational_eq(twisted, enh, As, As, payloads, max_evals=budget),
        )

    for f_shape, g_shape in itertools.combinations(shape_pool, 2):
        lhs = enhance_iso(f_shape, family).compose(enhance_iso(g_shape, family))
        fg = compose_shapes(f_shape, g_shape)
        rhs = iso_inj(Comp, lambda p: p.value, family).compose(enhance_iso(fg, family))
        dom_in = f_shape.payloads(g_shape.payloads(list(As)))
        enh_comp.check(
            {"family": family.name, "shapes": (f_shape.name, g_shape.name)},
            observational_eq(lhs, rhs, As, As, dom_in, max_evals=budget),
        )

    for nat in naturals:
        rng = random.Random(f"{nat.name}:{seed}")
        pa_src = nat.source.payloads(list(As))
        pb_tgt = nat.target.payloads(list(As))
        fwd = {s: rng.choice(pa_src) for s in ss}
        bwd = {p: rng.choice(list(ss)) for p in pb_tgt}
        with_fwd = IsoOptic(
            family,
            nat.target,
            forward=lambda s: nat.fn(fwd[s]),
            backward=lambda p: bwd[p],
        )
        with_bwd = IsoOptic(
            family,
            nat.source,
            forward=lambda s: fwd[s],
            backward=lambda p: bwd[nat.fn(p)],
        )
        eq_nat.check(
            {"family": family.name, "natural": nat.name},
            observational_eq(with_fwd, with_bwd, As, As, ss, max_evals=budget),
        )

    return [normal.report, retract.report, enh_comp.report, endo.report, eq_nat.report]


# Morphism law group ----------------------------------------------------------

@dataclass
class MorphismSpec:
    """A conversion between families plus composable sample pairs."""

    name: str
    theta: Callable       # source optic -> target optic
    inj_src: Callable     # (f, g) -> source optic
    inj_dst: Callable     # (f, g) -> target optic
    pairs: list           # [(o1, o2)] composable in the source family
    doms: dict            # keys: s, a1, a2


def check_morphism(spec: MorphismSpec, budget=MAX_EVALS_PER_LAW):
    ds, d1, d2 = (_elems(spec.doms[k]) for k in ("s", "a1", "a2"))

    pres_inj = _LawRun("morphism.preserves_inj", budget)
    rng = random.Random(spec.name)
    for i in range(3):
        f = _rand_table(rng, ds, d1)
        g = _rand_table(rng, d1, ds)
        lhs = spec.theta(spec.inj_src(lambda s, f=f: f[s], lambda b, g=g: g[b]))
        rhs = spec.inj_dst(lambda s, f=f: f[s], lambda b, g=g: g[b])
        pres_inj.check(
            {"conversion": spec.name, "sample": i},
            maps_agree(lhs, rhs, d1, d1, ds, max_evals=budget),
        )

    pres_comp = _LawRun("morphism.preserves_compose", budget)
    pres_map = _LawRun("morphism.preserves_map", budget)
    for i, (o1, o2) in enumerate(spec.pairs):
        lhs = spec.theta(o1.compose(o2))
        rhs = spec.theta(o1).compose(spec.theta(o2))
        pres_comp.check(
            {"conversion": spec.name, "pair": i},
            maps_agree(lhs, rhs, d2, d2, ds, max_evals=budget),
        )
        pres_map.check(
            {"conversion": spec.name, "pair": i},
            maps_agree(spec.theta(o1), o1, d1, d1, ds, max_evals=budget),
        )

    return [pres_inj.report, pres_comp.report, pres_map.report]


# Registry and full run -------------------------------------------------------

REQUIRED_LAWS = (
    "lens.get_put",
    "lens.put_get",
    "lens.put_put",
    "achlens.get_put",
    "achlens.put_get",
    "achlens.put_put",
    "achlens.get_create",
    "prism.match_build",
    "prism.build_match",
    "prism.no_match_identity",
    "adapter.fwd_bwd",
    "adapter.bwd_fwd",
    "setter.over_identity",
    "setter.over_composition",
    "optional.hit_put_identity",
    "optional.put_then_match",
    "optional.miss_put_residual",
    "functor.map_identity",
    "functor.map_composition",
    "product.round_trip_from_to",
    "product.round_trip_to_from",
    "sum.round_trip_from_to",
    "sum.round_trip_to_from",
    "profunctor.dimap_identity",
    "profunctor.dimap_composition",
    "optic_family.compose_associative",
    "optic_family.identity_left",
    "optic_family.identity_right",
    "optic_family.inj_identity",
    "optic_family.inj_composition",
    "optic_family.map_inj",
    "optic_family.map_composition",
    "morphism.preserves_inj",
    "morphism.preserves_compose",
    "morphism.preserves_map",
    "enhancing.identity_shape",
    "enhancing.compose_shape",
    "enhancing.wedge",
    "enhancing.map_commute",
    "iso.normal_form",
    "iso.retraction",
    "iso.enhance_composition",
    "iso.endo_identity",
    "iso.equality_up_to_natural",
    "functorization.map_is_shape_map",
    "functorization.identity_shape",
    "functorization.compose_shape",
    "functorization.wedge",
    "functorization.inj_commute",
)

LAW_CHECKERS = {
    "lens.get_put": check_lens_laws,
    "lens.put_get": check_lens_laws,
    "lens.put_put": check_lens_laws,
    "achlens.get_put": check_achlens_laws,
    "achlens.put_get": check_achlens_laws,
    "achlens.put_put": check_achlens_laws,
    "achlens.get_create": check_achlens_laws,
    "prism.match_build": check_prism_laws,
    "prism.build_match": check_prism_laws,
    "prism.no_match_identity": check_prism_laws,
    "adapter.fwd_bwd": check_adapter_laws,
    "adapter.bwd_fwd": check_adapter_laws,
    "setter.over_identity": check_setter_laws,
    "setter.over_composition": check_setter_laws,
    "optional.hit_put_identity": check_optional_laws,
    "optional.put_then_match": check_optional_laws,
    "optional.miss_put_residual": check_optional_laws,
    "functor.map_identity": check_functor_laws,
    "functor.map_composition": check_functor_laws,
    "product.round_trip_from_to": check_functor_laws,
    "product.round_trip_to_from": check_functor_laws,
    "sum.round_trip_from_to": check_functor_laws,
    "sum.round_trip_to_from": check_functor_laws,
    "profunctor.dimap_identity": check_enhancing_laws,
    "profunctor.dimap_composition": check_enhancing_laws,
    "optic_family.compose_associative": check_optic_family_laws,
    "optic_family.identity_left": check_optic_family_laws,
    "optic_family.identity_right": check_optic_family_laws,
    "optic_family.inj_identity": check_optic_family_laws,
    "optic_family.inj_composition": check_optic_family_laws,
    "optic_family.map_inj": check_optic_family_laws,
    "optic_family.map_composition": check_optic_family_laws,
    "morphism.preserves_inj": check_morphism,
    "morphism.preserves_compose": check_morphism,
    "morphism.preserves_map": check_morphism,
    "enhancing.identity_shape": check_enhancing_laws,
    "enhancing.compose_shape": check_enhancing_laws,
    "enhancing.wedge": check_enhancing_laws,
    "enhancing.map_commute": check_enhancing_laws,
    "iso.normal_form": check_iso_laws,
    "iso.retraction": check_iso_laws,
    "iso.enhance_composition": check_iso_laws,
    "iso.endo_identity": check_iso_laws,
    "iso.equality_up_to_natural": check_iso_laws,
    "functorization.map_is_shape_map": check_functorization_laws,
    "functorization.identity_shape": check_functorization_laws,
    "functorization.compose_shape": check_functorization_laws,
    "functorization.wedge": check_functorization_laws,
    "functorization.inj_commute": check_functorization_laws,
}


def unregistered_laws():
    """Coverage guard: required laws with no registered checker."""
    return tuple(name for name in REQUIRED_LAWS if name not in LAW_CHECKERS)


# Standard fixtures and the full suite ----------------------------------------

def shape_pools(shapes=None):
    """Member shape pools per registered functor family."""
    sh = shapes or standard_shapes()
    return {
        "Functor": [sh["pair"], sh["sum"], sh["maybe_pair"], sh["maybe"], sh["compose_pm"]],
        "IsProduct": [sh["id"], sh["pair"], sh["maybe_pair"], sh["compose_pp"]],
        "IsSum": [sh["id"], sh["sum"], sh["maybe"], sh["compose_sm"]],
        "IsPointedProduct": [sh["id"], sh["maybe_pair"]],
        "IdOnly": [sh["id"], sh["compose_ii"]],
        "IsAffine": [sh["id"], sh["pair"], sh["sum"], sh["maybe"], sh["compose_pm"]],
    }


def _iso_pairs(seed, pool, family, doms, n):
    out = []
    rng = random.Random(f"{family.name}:pairs:{seed}")
    for k in range(n):
        sh1, sh2 = rng.choice(pool), rng.choice(pool)
        out.append(
            (
                gen_iso_optic(seed + 2 * k, sh1, family, doms["a1"], doms["a1"], doms["s"], doms["s"]),
                gen_iso_optic(seed + 2 * k + 1, sh2, family, doms["a2"], doms["a2"], doms["a1"], doms["a1"]),
            )
        )
    return out


def _concrete_pairs(tag, seed, doms, n):
    return [
        (
            gen_random_optic(tag, seed + 2 * k, doms["a1"], doms["s"]),
            gen_random_optic(tag, seed + 2 * k + 1, doms["a2"], doms["a1"]),
        )
        for k in range(n)
    ]


def standard_morphism_specs(seed=0, n_pairs=3):
    """Morphism fixtures for every conversion the library ships."""
    from .encode import concrete_to_iso, functorize, prof_encoding, unfunctorize
    from .prof import iso_to_prof, prof_inj, prof_to_iso

    doms = {"s": labels("s", 3), "a1": labels("a", 3), "a2": labels("x", 2)}
    pools = shape_pools()
    tags = (
        FamilyTag.LENS,
        FamilyTag.PRISM,
        FamilyTag.ADAPTER,
        FamilyTag.SETTER,
        FamilyTag.ACHLENS,
    )
    specs = []
    for tag in tags:
        fz = functorize(tag)
        family = fz.functor_family
        pool = pools[family.name]
        cls = type(gen_random_optic(tag, seed, doms["a1"], doms["s"]))
        enc = prof_encoding(tag)
        specs.append(
            MorphismSpec(
                name=f"concrete_to_iso.{tag.value}",
                theta=concrete_to_iso,
                inj_src=cls.inj,
                inj_dst=lambda f, g, family=family: iso_inj(f, g, family),
                pairs=_concrete_pairs(tag, seed, doms, n_pairs),
                doms=doms,
            )
        )
        specs.append(
            MorphismSpec(
                name=f"unfunctorize.{tag.value}",
                theta=lambda optic, tag=tag: unfunctorize(optic, tag),
                inj_src=lambda f, g, family=family: iso_inj(f, g, family),
                inj_dst=cls.inj,
                pairs=_iso_pairs(seed, pool, family, doms, n_pairs),
                doms=doms,
            )
        )
        specs.append(
            MorphismSpec(
                name=f"iso_to_prof.{family.name}",
                theta=iso_to_prof,
                inj_src=lambda f, g, family=family: iso_inj(f, g, family),
                inj_dst=lambda f, g, family=family: prof_inj(f, g, family),
                pairs=_iso_pairs(seed + 1, pool, family, doms, n_pairs),
                doms=doms,
            )
        )
        specs.append(
            MorphismSpec(
                name=f"prof_to_iso.{family.name}",
                theta=prof_to_iso,
                inj_src=lambda f, g, family=family: prof_inj(f, g, family),
                inj_dst=lambda f, g, family=family: iso_inj(f, g, family),
                pairs=[
                    (iso_to_prof(l1), iso_to_prof(l2))
                    for l1, l2 in _iso_pairs(seed + 2, pool, family, doms, n_pairs)
                ],
                doms=doms,
            )
        )
        specs.append(
            MorphismSpec(
                name=f"encode.{tag.value}",
                theta=enc.encode,
                inj_src=cls.inj,
                inj_dst=lambda f, g, family=family: prof_inj(f, g, family),
                pairs=_concrete_pairs(tag, seed + 3, doms, n_pairs),
                doms=doms,
            )
        )
        specs.append(
            MorphismSpec(
                name=f"decode.{tag.value}",
                theta=enc.decode,
                inj_src=lambda f, g, family=family: prof_inj(f, g, family),
                inj_dst=cls.inj,
                pairs=[
                    (enc.encode(o1), enc.encode(o2))
                    for o1, o2 in _concrete_pairs(tag, seed + 4, doms, n_pairs)
                ],
                doms=doms,
            )
        )
    return specs


def run_all_law_checks(budget=MAX_EVALS_PER_LAW, seed=0, n_samples=2):
    """Run every registered checker over the standard fixtures and return
    the merged reports, sorted by law name."""
    from .encode import functorize
    from .functors import FAMILY_REGISTRY

    shapes = standard_shapes()
    naturals = standard_naturals(shapes)
    pools = shape_pools(shapes)
    dom_a = labels("a", 2)
    dom_b = dom_a
    dom_r = labels("r", 2)
    reports = []

    # concrete record laws on generated lawful optics
    dom_ls = labels("s", len(dom_r) * 3)
    big_a = labels("a", 3)
    for k in range(n_samples):
        lens = gen_lawful_lens(seed + k, dom_r, big_a, dom_ls)
        reports += check_lens_laws(lens, big_a, dom_ls, budget)
        dom_ps = labels("s", len(dom_r) + 3)
        prism = gen_lawful_prism(seed + k, dom_r, big_a, dom_ps)
        reports += check_prism_laws(prism, big_a, dom_ps, budget)
        al = gen_lawful_achlens(seed + k, dom_r, big_a, dom_ls)
        reports += check_achlens_laws(al, big_a, dom_ls, budget)
        ad = gen_lawful_adapter(seed + k, big_a, labels("s", 3))
        reports += check_adapter_laws(ad, big_a, labels("s", 3), budget)
        st = gen_setter(seed + k, shapes["pair"])
        reports += check_setter_laws(
            st, big_a, shapes["pair"].payloads(list(big_a)), budget
        )
        dom_os = labels("s", 2 + 1 * 3)
        opt = gen_lawful_optional(seed + k, labels("m", 2), labels("k", 1), big_a, dom_os)
        reports += check_optional_laws(opt, big_a, dom_os, budget)

    # shape laws
    for shape in shapes.values():
        reports += check_functor_laws(shape, labels("a", 3), budget)

    # shared optic-family laws: six concrete families, iso over each registry family
    for tag in FamilyTag:
        reports += check_optic_family_laws(concrete_family_fixture(tag, seed), budget)
    for fam_name, family in FAMILY_REGISTRY.items():
        fix = iso_family_fixture(family, pools[fam_name], seed)
        reports += check_optic_family_laws(fix, budget)

    # capability laws
    arrow_shapes = [shapes[k] for k in ("id", "pair", "sum", "maybe_pair", "maybe", "compose_pm")]
    compose_all = [
        (shapes["pair"], shapes["pair2"]),
        (shapes["sum"], shapes["maybe"]),
        (shapes["pair"], shapes["maybe"]),
    ]
    reports += check_enhancing_laws(
        function_arrow_fixture(), arrow_shapes, naturals, dom_a, dom_b,
        compose_pairs=compose_all, budget=budget,
    )
    product_shapes = [shapes[k] for k in ("id", "pair", "maybe_pair", "compose_pp")]
    product_nats = [
        n for n in naturals if n.source.product and n.target.product
    ]
    reports += check_enhancing_laws(
        getting_fixture(dom_a), product_shapes, product_nats, dom_a, dom_b,
        compose_pairs=[(shapes["pair"], shapes["pair2"])], budget=budget,
    )
    reports += check_enhancing_laws(
        matching_fixture(dom_a), arrow_shapes, naturals, dom_a, dom_b,
        compose_pairs=compose_all, budget=budget,
    )
    for fam_name, family in FAMILY_REGISTRY.items():
        fam_nats = naturals_within(family, naturals)
        pool = pools[fam_name]
        pairs = [(f, g) for f in pool for g in pool if f.payloads and g.payloads][:3]
        reports += check_enhancing_laws(
            iso_capability_fixture(family, pool, dom_a, dom_b, seed),
            pool,
            fam_nats,
            dom_a,
            dom_b,
            compose_pairs=pairs,
            budget=budget,
        )

    # iso-specific laws per registry family
    for fam_name, family in FAMILY_REGISTRY.items():
        reports += check_iso_laws(
            family, pools[fam_name], naturals_within(family, naturals), seed, budget
        )

    # functorizations for all six concrete families
    for tag in FamilyTag:
        fz = functorize(tag)
        pool = pools[fz.functor_family.name]
        fam_nats = naturals_within(fz.functor_family, naturals)
        pairs = [(f, g) for f in pool for g in pool][:3]
        reports += check_functorization_laws(
            fz, pool, fam_nats, dom_a, dom_b, compose_pairs=pairs, budget=budget
        )

    # conversions are morphisms
    for spec in standard_morphism_specs(seed, n_pairs=n_samples):
        reports += check_morphism(spec, budget)

    return merge_reports(reports)


def main(argv=None):
    """Emit the full law report as JSON lines; exit 1 on any failure."""
    import sys

    reports = run_all_law_checks()
    write_report(reports, sys.stdout)
    return 0 if all(rep.passed for rep in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
