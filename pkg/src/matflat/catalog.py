"""Named desk-scale instances used by the randomized identity checks and the bound survey."""

import random

from .geometry import build_ag, build_blokhuis, build_pg, build_pg_plus_free_point
from .matroid import UniformMatroid, contract, delete


def _small():
    return {
        "PG(1,2)": lambda: build_pg(2, 2),
        "PG(2,2)": lambda: build_pg(3, 2),
        "PG(3,2)": lambda: build_pg(4, 2),
        "PG(1,3)": lambda: build_pg(2, 3),
        "PG(2,3)": lambda: build_pg(3, 3),
        "PG(3,3)": lambda: build_pg(4, 3),
        "PG(2,4)": lambda: build_pg(3, 4),
        "PG(2,5)": lambda: build_pg(3, 5),
        "AG(2,2)": lambda: build_ag(3, 2),
        "AG(3,2)": lambda: build_ag(4, 2),
        "AG(4,2)": lambda: build_ag(5, 2),
        "AG(2,3)": lambda: build_ag(3, 3),
        "AG(3,3)": lambda: build_ag(4, 3),
        "AG(2,4)": lambda: build_ag(3, 4),
        "M(3)": lambda: build_blokhuis(3),
        "M(4)": lambda: build_blokhuis(4),
        "M(5)": lambda: build_blokhuis(5),
        "PG(2,2)+e": lambda: build_pg_plus_free_point(2),
        "PG(2,3)+e": lambda: build_pg_plus_free_point(3),
        "U(2,5)": lambda: UniformMatroid(2, 5),
        "U(3,5)": lambda: UniformMatroid(3, 5),
        "U(3,6)": lambda: UniformMatroid(3, 6),
        "U(4,7)": lambda: UniformMatroid(4, 7),
        "PG(3,2)/0": lambda: contract(build_pg(4, 2), 1),
        "PG(3,3)/0": lambda: contract(build_pg(4, 3), 1),
        "PG(3,2)\\012": lambda: delete(build_pg(4, 2), 0b111),
        "AG(3,3)/0": lambda: contract(build_ag(4, 3), 1),
        "M(4)\\0123": lambda: delete(build_blokhuis(4), 0b1111),
        "M(3)/0": lambda: contract(build_blokhuis(3), 1),
        "PG(2,3)+e/e": lambda: contract(build_pg_plus_free_point(3), 1 << 13),
    }


def sp_catalog():
    """Instances (all loopless, rank >= 2) for the randomized Whitney-identity checks."""
    return _small()


def rank4_catalog():
    """Instances of rank >= 4 for the bound survey."""
    return {
        "PG(3,2)": lambda: build_pg(4, 2),
        "PG(4,2)": lambda: build_pg(5, 2),
        "PG(3,3)": lambda: build_pg(4, 3),
        "PG(3,4)": lambda: build_pg(4, 4),
        "AG(3,2)": lambda: build_ag(4, 2),
        "AG(4,2)": lambda: build_ag(5, 2),
        "AG(3,3)": lambda: build_ag(4, 3),
        "AG(3,4)": lambda: build_ag(4, 4),
        "U(4,6)": lambda: UniformMatroid(4, 6),
        "U(4,8)": lambda: UniformMatroid(4, 8),
        "U(5,9)": lambda: UniformMatroid(5, 9),
        "PG(4,2)\\0..9": lambda: delete(build_pg(5, 2), (1 << 10) - 1),
        "PG(4,2)/0": lambda: contract(build_pg(5, 2), 1),
        "PG(3,3)\\0..12": lambda: delete(build_pg(4, 3), (1 << 13) - 1),
        "AG(4,2)/0": lambda: contract(build_ag(5, 2), 1),
    }


def random_sp_triples(count, seed=0):
    """Deterministic sample of (name, matroid, k, e) with 1 <= k < r and e a non-loop."""
    rng = random.Random(seed)
    builders = sp_catalog()
    names = sorted(builders)
    built = {}
    out = []
    for _ in range(count):
        name = rng.choice(names)
        if name not in built:
            built[name] = builders[name]()
        M = built[name]
        k = rng.randint(1, M.full_rank - 1)
        e = rng.choice(M.elements())
        out.append((name, M, k, e))
    return out
