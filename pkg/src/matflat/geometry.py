"""Constructors for projective and affine geometries and the derived rank-3 examples."""

from dataclasses import dataclass
from itertools import product

from .bits import MAX_ELEMENTS
from .errors import ResourceLimit, Unsupported
from .gf import build_field, is_prime_power
from .matroid import LinearMatroid, PointLineMatroid, UniformMatroid

FAMILIES = ("PG", "AG", "Blokhuis", "PGplusFreePoint")


@dataclass(frozen=True)
class GeometrySpec:
    family: str
    r: int
    q: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("Blokhuis", "PGplusFreePoint") and self.r != 3:
            raise ValueError(f"{self.family} has rank 3")
        if self.r < 1:
            raise ValueError("rank must be >= 1")

    def build(self):
        if self.family == "PG":
            return build_pg(self.r, self.q)
        if self.family == "AG":
            return build_ag(self.r, self.q)
        if self.family == "Blokhuis":
            return build_blokhuis(self.q)
        return build_pg_plus_free_point(self.q)


def pg_points(f, r):
    """Representatives of the 1-dimensional subspaces of GF(q)^r, first nonzero coordinate 1, in lex order."""
    pts = []
    for v in product(range(f.q), repeat=r):
        for x in v:
            if x:
                if x == 1:
                    pts.append(v)
                break
    return pts


def _check_size(n, what):
    if n > MAX_ELEMENTS:
        raise ResourceLimit(f"{what} has {n} points, more than the cap of {MAX_ELEMENTS}")


def build_pg(r, q):
    if r < 1:
        raise ValueError("rank must be >= 1")
    _check_size((q ** r - 1) // (q - 1), f"PG({r - 1},{q})")
    f = build_field(q)
    return LinearMatroid(f, pg_points(f, r), rows=r)


def build_ag(r, q):
    if r < 1:
        raise ValueError("rank must be >= 1")
    _check_size(q ** (r - 1), f"AG({r - 1},{q})")
    f = build_field(q)
    return LinearMatroid(f, [v + (1,) for v in product(range(q), repeat=r - 1)], rows=r)


def affine_plane_lines(q):
    """Lines of AG(2,q) on points (x, y) -> x*q + y, as lists; vertical lines last."""
    f = build_field(q)
    lines = []
    for m in range(q):
        for b in range(q):
            lines.append([x * q + f.add(f.mul(m, x), b) for x in range(q)])
    for c in range(q):
        lines.append([c * q + y for y in range(q)])
    return lines


def build_blokhuis(q):
    """AG(2,q) with the q vertical lines demoted to 2-point lines."""
    if not is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    if q < 3:
        raise Unsupported("the construction needs q >= 3 (AG(2,2) has no long lines)")
    _check_size(q * q, f"M({q})")
    kept = affine_plane_lines(q)[: q * q]
    return PointLineMatroid(q * q, kept)


def projective_plane_lines(q):
    f = build_field(q)
    pts = pg_points(f, 3)
    lines = []
    for u in pts:
        line = []
        for i, p in enumerate(pts):
            s = 0
            for a, b in zip(u, p):
                s = f.add(s, f.mul(a, b))
            if s == 0:
                line.append(i)
        lines.append(line)
    return lines


def build_pg_plus_free_point(q):
    """PG(2,q) plus one element on no long line; the new element is the last one."""
    if q not in (2, 3, 4, 5):
        raise Unsupported("free extension is supported for q in {2, 3, 4, 5}")
    n0 = q * q + q + 1
    return PointLineMatroid(n0 + 1, projective_plane_lines(q))


def build_uniform(r, n):
    return UniformMatroid(r, n)
