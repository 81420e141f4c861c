import random
from itertools import combinations

import pytest

from matflat.bits import bits, popcount, submasks, to_mask
from matflat.errors import ResourceLimit, Unsupported
from matflat.geometry import (
    build_ag,
    build_blokhuis,
    build_pg,
    build_pg_plus_free_point,
    projective_plane_lines,
)
from matflat.gf import build_field
from matflat.matroid import (
    LinearMatroid,
    MinorView,
    PointLineMatroid,
    UniformMatroid,
    closure,
    contract,
    delete,
    is_gfq_representable_rank_le3,
    is_simple,
    materialize,
    rank,
    restrict,
    simplify,
)


def assert_rank_axioms(M, pairs=None):
    E = M.ground
    assert M.rank(0) == 0
    if pairs is None:
        subs = list(submasks(E))
        r = {S: M.rank(S) for S in subs}
        for S in subs:
            assert 0 <= r[S] <= popcount(S)
            for e in bits(E & ~S):
                assert r[S] <= r[S | 1 << e] <= r[S] + 1
        for S in subs:
            for T in subs:
                assert r[S | T] + r[S & T] <= r[S] + r[T]
    else:
        for S, T in pairs:
            assert M.rank(S | T) + M.rank(S & T) <= M.rank(S) + M.rank(T)
            assert M.rank(S & T) <= M.rank(S) <= M.rank(S | T)


def test_rank_examples():
    assert rank(build_pg(3, 2), None) == 3
    U = UniformMatroid(2, 6)
    assert all(U.rank(c) == 2 for c in combinations(range(6), 4))
    # The three points of a demoted (vertical) line of M(3) are independent.
    M3 = build_blokhuis(3)
    assert M3.rank([0, 1, 2]) == 3
    # ... while a kept line of AG(2,3) is still a line.
    assert M3.rank([0, 3, 6]) == 2


def test_rank_axioms_exhaustive(small):
    for name, M in small.items():
        assert M.size <= 12
        if M.size <= 10:
            assert_rank_axioms(M)


def test_rank_axioms_sampled(catalog):
    rng = random.Random(7)
    for name in ("PG(3,2)", "M(5)", "PG(2,3)+e", "AG(3,3)/0", "PG(3,3)"):
        M = catalog[name]
        E = M.elements()
        pairs = []
        for _ in range(10_000 if M.size <= 30 else 2_000):
            S = to_mask(e for e in E if rng.random() < 0.4)
            T = to_mask(e for e in E if rng.random() < 0.4)
            pairs.append((S, T))
        assert_rank_axioms(M, pairs)


def test_closure_examples():
    fano = build_pg(3, 2)
    for a, b in combinations(range(7), 2):
        line = closure(fano, [a, b])
        brute = {e for e in range(7) if fano.rank([a, b, e]) == 2}
        assert set(bits(line)) == brute and len(brute) == 3
    assert closure(build_blokhuis(3), 0) == 0
    assert closure(UniformMatroid(2, 6), [0, 1]) == 0b111111


def test_closure_is_closure_operator(small):
    for name, M in small.items():
        E = M.ground
        for S in submasks(E):
            C = M.closure(S)
            assert C & S == S
            assert M.closure(C) == C
            assert M.rank(C) == M.rank(S)
            brute = S | to_mask(e for e in bits(E & ~S) if M.rank(S | 1 << e) == M.rank(S))
            assert C == brute, name
            for e in bits(E & ~S):
                assert M.closure(S | 1 << e) & C == C


def test_contract_delete_examples():
    fano = build_pg(3, 2)
    assert contract(fano, [0]).rank() == 2
    assert isinstance(contract(fano, 1), MinorView)
    D = delete(fano, 0)
    assert all(D.rank(S) == fano.rank(S) for S in submasks(fano.ground))
    with pytest.raises(ValueError):
        contract(fano, 1 << 9)


def test_contract_then_contract_equals_union(small):
    for name, M in small.items():
        if M.size > 8:
            continue
        E = M.elements()
        for a, b in combinations(E, 2):
            once = contract(M, [a, b])
            twice = contract(contract(M, [a]), [b])
            assert once.ground == twice.ground
            assert all(once.rank(S) == twice.rank(S) for S in submasks(once.ground))


def test_restrict_is_delete_of_complement():
    M = build_blokhuis(3)
    F = 0b111000111
    R, D = restrict(M, F), delete(M, M.ground & ~F)
    assert R.ground == D.ground == F
    assert all(R.rank(S) == D.rank(S) == M.rank(S) for S in submasks(F))


def test_minor_rank_rule():
    M = build_pg(4, 2)
    C, Dl = 0b11, 0b1100
    N = delete(contract(M, C), Dl)
    for S in submasks(N.ground & 0b111111110000):
        assert N.rank(S) == M.rank(S | C) - M.rank(C)


def test_linear_contraction_matches_projection(small):
    """View rank rule vs a matrix rebuilt by row-reducing on the contracted columns."""
    for name, M in small.items():
        base = M.base if isinstance(M, MinorView) else M
        if not isinstance(base, LinearMatroid) or M.size > 10:
            continue
        for C in [0] + [1 << e for e in M.elements()] + [M.ground & 0b101]:
            view = contract(M, C & M.ground)
            mat, labels = materialize(view)
            assert isinstance(mat, LinearMatroid) and mat.rows == view.full_rank
            for S in submasks(mat.ground):
                lifted = to_mask(labels[i] for i in bits(S))
                assert mat.rank(S) == view.rank(lifted)


def test_materialize_uniform_and_pointline():
    U = contract(delete(UniformMatroid(4, 7), 0b1), 0b110)
    mat, labels = materialize(U)
    assert (mat.r, mat.n) == (2, 4) and labels == [3, 4, 5, 6]
    M = delete(build_blokhuis(3), 0b1)
    mat, labels = materialize(M)
    for S in submasks(mat.ground):
        assert mat.rank(S) == M.rank(to_mask(labels[i] for i in bits(S)))
    with pytest.raises(Unsupported):
        materialize(contract(build_blokhuis(3), 1))


def test_simplify_examples():
    fano = build_pg(3, 2)
    si, parts = simplify(contract(fano, 1))
    assert sorted(len(p) for p in parts) == [2, 2, 2]
    assert si.size == 3 and si.rank() == 2 and is_simple(si)
    assert si.kind == "simplification_view"
    same, parts = simplify(fano)
    assert same is fano and parts == [[e] for e in range(7)]
    si3, parts3 = simplify(contract(build_blokhuis(3), 1 << 4))
    assert len(parts3) == 5  # 2q - 1 lines through the point


def test_simplify_is_simple(small):
    for name, M in small.items():
        si, parts = simplify(M)
        assert sorted(e for p in parts for e in p) == sorted(bits(M.ground & ~M.loops()))
        for a, b in combinations(si.elements(), 2):
            assert si.rank([a, b]) == 2
        assert si.rank() == M.rank()


def test_loops_in_linear_matroid():
    f = build_field(3)
    M = LinearMatroid(f, [(0, 0), (1, 0), (2, 0), (0, 1)])
    assert M.loops() == 0b1
    si, parts = simplify(M)
    assert parts == [[1, 2], [3]]
    assert si.elements() == [1, 3]


def test_pointline_validation():
    with pytest.raises(ValueError):
        PointLineMatroid(4, [[0, 1]])
    with pytest.raises(ValueError):
        PointLineMatroid(5, [[0, 1, 2], [0, 1, 3]])
    with pytest.raises(ValueError):
        PointLineMatroid(3, [[0, 1, 5]])


def test_width_cap():
    with pytest.raises(ResourceLimit):
        UniformMatroid(2, 300)


def test_representability_examples():
    for q in (2, 3):
        assert is_gfq_representable_rank_le3(build_pg(3, q), q)
    assert is_gfq_representable_rank_le3(build_ag(3, 3), 3)
    # Five points in rank 3 with no three collinear would need a 5-arc in PG(2,2).
    assert not is_gfq_representable_rank_le3(UniformMatroid(3, 5), 2)
    assert is_gfq_representable_rank_le3(UniformMatroid(3, 4), 2)
    assert is_gfq_representable_rank_le3(UniformMatroid(2, 4), 3)
    assert not is_gfq_representable_rank_le3(UniformMatroid(2, 5), 3)
    assert not is_gfq_representable_rank_le3(build_pg_plus_free_point(2), 2)
    with pytest.raises(Unsupported):
        is_gfq_representable_rank_le3(build_pg(4, 2), 2)
    with pytest.raises(ValueError):
        is_gfq_representable_rank_le3(contract(build_pg(4, 2), 1), 2)


def _arc_oracle(q, n):
    """Does PG(2,q) contain n points with no three collinear?  Plain search over point subsets."""
    lines = [set(L) for L in projective_plane_lines(q)]
    npts = q * q + q + 1

    def grow(chosen, start):
        if len(chosen) == n:
            return True
        for p in range(start, npts):
            if all(len(L & (chosen | {p})) <= 2 for L in lines):
                if grow(chosen | {p}, p + 1):
                    return True
        return False

    return grow(set(), 0)


@pytest.mark.parametrize("q,n", [(2, 4), (2, 5), (3, 4), (3, 5)])
def test_uniform_rank3_representability_matches_arc_search(q, n):
    assert is_gfq_representable_rank_le3(UniformMatroid(3, n), q) == _arc_oracle(q, n)


def test_blokhuis_3_not_ternary():
    """Every 9-subset of PG(2,3) either keeps a 4-point line or is AG(2,3) with 12 lines."""
    lines = [set(L) for L in projective_plane_lines(3)]
    profiles = set()
    for comp in combinations(range(13), 4):
        keep = set(range(13)) - set(comp)
        sizes = sorted(len(L & keep) for L in lines)
        profiles.add((sizes.count(4), sizes.count(3)))
    # M(3) has no 4-point line and exactly nine 3-point lines.
    assert (0, 9) not in profiles
    assert not is_gfq_representable_rank_le3(build_blokhuis(3), 3)
