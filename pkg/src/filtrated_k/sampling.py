"""Random modules for property checks.

Modules are assembled from free modules by cokernels, reductions mod k,
direct sums and simple modules.  Cokernels of injective maps between free
modules are exact by the two-out-of-three property; that is the source of the
"known exact" samples.
"""

import random

from .constructions import simple_module
from .groups import Presented
from .module import cokernel, direct_sum, free_module, hom_from_free, is_injective, quotient_mod_k


def random_spec(ring, rng, lo=1, hi=3):
    return [(rng.choice(ring.objects), rng.randint(0, 1)) for _ in range(rng.randint(lo, hi))]


def random_free_map(F1, F0, rng, coeffs=(-2, -1, 0, 0, 1, 1, 2)):
    vecs = []
    for Y, s in F1.free_spec:
        n = F0.n(Y, s)
        vecs.append([rng.choice(coeffs) for _ in range(n)])
    return hom_from_free(F1, F0, vecs)


def random_cokernel(ring, rng, injective=False, tries=40):
    for _ in range(tries):
        F0 = free_module(ring, random_spec(ring, rng, 1, 3))
        F1 = free_module(ring, random_spec(ring, rng, 1, 2))
        h = random_free_map(F1, F0, rng)
        if h.is_zero():
            continue
        if injective and not is_injective(h):
            continue
        return cokernel(h, "coker")[0]
    return free_module(ring, random_spec(ring, rng))


def random_exact_module(ring, rng):
    """A module that is exact by construction."""
    kind = rng.choice(["free", "coker", "coker", "coker_mod", "sum"])
    if kind == "free":
        return free_module(ring, random_spec(ring, rng))
    if kind == "coker":
        return random_cokernel(ring, rng, injective=True)
    if kind == "coker_mod":
        base = rng.choice([random_cokernel(ring, rng, injective=True), free_module(ring, random_spec(ring, rng))])
        if not base.has_free_slots():
            base = free_module(ring, random_spec(ring, rng))
        return quotient_mod_k(base, rng.choice([2, 3, 4]))[0]
    return direct_sum(random_cokernel(ring, rng, injective=True), free_module(ring, random_spec(ring, rng, 1, 1)))[0]


def random_simple(ring, rng):
    group = rng.choice([Presented.free(1), Presented.free(2), Presented.cyclic([rng.choice([2, 3])])])
    return simple_module(ring, rng.choice(ring.objects), rng.randint(0, 1), group)


def random_module(ring, rng):
    """A mix of exact and non-exact, free and non-free modules."""
    kind = rng.choice(["free", "coker", "coker_inj", "mod", "simple", "sum"])
    if kind == "free":
        return free_module(ring, random_spec(ring, rng))
    if kind == "coker":
        return random_cokernel(ring, rng)
    if kind == "coker_inj":
        return random_cokernel(ring, rng, injective=True)
    if kind == "mod":
        return quotient_mod_k(random_module(ring, rng), rng.choice([2, 3]))[0]
    if kind == "simple":
        return random_simple(ring, rng)
    a = rng.choice([free_module(ring, random_spec(ring, rng, 1, 1)), random_simple(ring, rng)])
    return direct_sum(a, random_cokernel(ring, rng))[0]


def make_rng(seed):
    return random.Random(seed)
