"""Finite-function probes for observational equality.

Optic equality in this library is observational: two optics are equal when
their map actions agree on every probe function and input.  Over the finite
domains used in tests the probe set is exhaustive; otherwise a seeded sample
of function tables is used, never silently reported as exhaustive.
"""

import itertools
import random

DEFAULT_MAX_EVALS = 100_000
SAMPLE_SIZE = 64


class FiniteFn:
    """A total function given by an explicit table over a finite domain."""

    __slots__ = ("table",)

    def __init__(self, table):
        self.table = dict(table)

    def __call__(self, x):
        return self.table[x]

    def __repr__(self):
        items = ", ".join(f"{k!r}:{v!r}" for k, v in self.table.items())
        return f"FiniteFn({{{items}}})"


def all_functions(dom_a, dom_b):
    """Every total function from dom_a to dom_b, as FiniteFn tables."""
    dom_a = list(dom_a)
    return [
        FiniteFn(zip(dom_a, image))
        for image in itertools.product(list(dom_b), repeat=len(dom_a))
    ]


def sample_functions(dom_a, dom_b, n=SAMPLE_SIZE, seed=0):
    """A seeded sample of n function tables from dom_a to dom_b."""
    rng = random.Random(seed)
    dom_a, dom_b = list(dom_a), list(dom_b)
    return [
        FiniteFn((a, rng.choice(dom_b)) for a in dom_a)
        for _ in range(n)
    ]


def probe_functions(dom_a, dom_b, dom_s, max_evals=DEFAULT_MAX_EVALS, seed=0):
    """Probe set policy: exhaustive when the total evaluation count fits the
    budget, else a seeded sample.  Returns (functions, exhaustive_flag)."""
    count = len(list(dom_b)) ** len(list(dom_a)) * max(len(list(dom_s)), 1)
    if count <= max_evals:
        return all_functions(dom_a, dom_b), True
    return sample_functions(dom_a, dom_b, SAMPLE_SIZE, seed), False


def maps_agree(o1, o2, dom_a, dom_b, dom_s, max_evals=DEFAULT_MAX_EVALS, seed=0):
    """Observational equality of two optics via their map actions."""
    fns, _ = probe_functions(dom_a, dom_b, dom_s, max_evals, seed)
    for h in fns:
        run1, run2 = o1.map_optic(h), o2.map_optic(h)
        for s in dom_s:
            if run1(s) != run2(s):
                return False
    return True


def distinguishing_probe(o1, o2, dom_a, dom_b, dom_s):
    """Brute-force search for a probe separating two optics; None if all
    probes agree."""
    for h in all_functions(dom_a, dom_b):
        run1, run2 = o1.map_optic(h), o2.map_optic(h)
        for s in dom_s:
            r1, r2 = run1(s), run2(s)
            if r1 != r2:
                return {"h": h, "s": s, "lhs": r1, "rhs": r2}
    return None
