"""Level-by-level enumeration of the lattice of flats and Whitney numbers of the second kind."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from .bits import bits, popcount
from .errors import LoopElement, ResourceLimit
from .matroid import LinearMatroid, MinorView, contract, restrict
from .qbinom import qbinom
from .report import PaperReport, timed

DEFAULT_CAP = 10 ** 7


@dataclass(frozen=True)
class Flat:
    members: int
    rank: int

    def elements(self):
        return list(bits(self.members))

    def __contains__(self, e):
        return bool(self.members >> e & 1)

    def __len__(self):
        return popcount(self.members)


@dataclass
class FlatLevels:
    """``levels[k]`` holds the rank-k flats as sorted bitmasks.

    ``up[k][i]`` lists indices into ``levels[k+1]`` of the flats covering
    ``levels[k][i]``.
    """

    levels: list
    up: list

    def counts(self):
        return [len(level) for level in self.levels]

    def flats(self, k):
        return [Flat(m, k) for m in self.levels[k]]

    @property
    def top(self):
        return len(self.levels) - 1


def covers(M, F):
    """Flats covering the flat F, one closure per cover."""
    fast = M._covers(F)
    if fast is not None:
        return fast
    out = []
    remaining = M.ground & ~F
    while remaining:
        e = remaining & -remaining
        G = M._closure(F | e)
        out.append(G)
        remaining &= ~G
    return out


def _covers_chunk(M, chunk):
    return [covers(M, F) for F in chunk]


def predicted_level_bound(M, k):
    """Upper bound on W_k before enumerating: C(W_1, k), tightened to [r,k]_q for GF(q)-linear matroids."""
    base = M.base if isinstance(M, MinorView) else M
    bound = comb(M.size, k)
    if isinstance(base, LinearMatroid):
        bound = min(bound, qbinom(base.field.q, M.full_rank, k))
    return bound


def enumerate_flats(M, up_to_rank=None, cap=DEFAULT_CAP, workers=1):
    r = M.full_rank
    if up_to_rank is None:
        up_to_rank = r
    if not 0 <= up_to_rank <= r:
        raise ValueError(f"up_to_rank must lie in 0..{r}")
    levels = [[M.loops()]]
    up = []
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for k in range(up_to_rank):
            frontier = levels[k]
            if pool is None or len(frontier) < 2 * workers:
                cover_lists = [covers(M, F) for F in frontier]
            else:
                size = -(-len(frontier) // (4 * workers))
                chunks = [frontier[i:i + size] for i in range(0, len(frontier), size)]
                cover_lists = [c for part in pool.map(_covers_chunk, [M] * len(chunks), chunks) for c in part]
            seen = set()
            for cl in cover_lists:
                seen.update(cl)
                if len(seen) > cap:
                    raise ResourceLimit(f"level {k + 1} exceeds the flat-count cap of {cap}")
            nxt = sorted(seen)
            index = {G: i for i, G in enumerate(nxt)}
            up.append([sorted(index[G] for G in cl) for cl in cover_lists])
            levels.append(nxt)
    finally:
        if pool is not None:
            pool.shutdown()
    return FlatLevels(levels, up)


def whitney(M, k, cap=DEFAULT_CAP):
    if not 0 <= k <= M.full_rank:
        raise ValueError(f"k must lie in 0..{M.full_rank}")
    return len(enumerate_flats(M, k, cap=cap).levels[k])


def whitney_numbers(M, cap=DEFAULT_CAP):
    return enumerate_flats(M, cap=cap).counts()


def _require_nonloop(M, e):
    if not M.ground >> e & 1:
        raise ValueError(f"element {e} is not in the ground set")
    if M.loops() >> e & 1:
        raise LoopElement(f"element {e} is a loop")


def flats_through(M, k, e, levels=None):
    _require_nonloop(M, e)
    if levels is None:
        levels = enumerate_flats(M, k)
    return [Flat(F, k) for F in levels.levels[k] if F >> e & 1]


def whitney_avoiding(M, k, e, levels=None):
    """W_k^e: the number of rank-k flats not containing e."""
    _require_nonloop(M, e)
    if levels is None:
        levels = enumerate_flats(M, k)
    return sum(1 for F in levels.levels[k] if not F >> e & 1)


def check_sp_identities(M, k, e, ell=None, levels=None):
    """Check the four Whitney-number facts at (M, k, e).

    sp1: W_k <= W_1^k
    sp2: W_k < ell^(k r)        (skipped when ell is None)
    sp3: |F_k(M; e)| = W_{k-1}(M / e)
    sp4: W_k = W_{k-1}(M / e) + sum over rank-(k+1) flats F through e of W_k^e(M | F)
    """
    with timed() as clock:
        r = M.full_rank
        if not 1 <= k < r:
            raise ValueError(f"need 1 <= k < r(M) = {r}")
        if M.loops():
            raise LoopElement("matroid has loops")
        _require_nonloop(M, e)
        if levels is None or levels.top < k + 1:
            levels = enumerate_flats(M, k + 1)
        wk = len(levels.levels[k])
        w1 = len(levels.levels[1])
        through_k = sum(1 for F in levels.levels[k] if F >> e & 1)
        Me = contract(M, 1 << e)
        w_contract = len(enumerate_flats(Me, k - 1).levels[k - 1])
        avoid_sum = 0
        for F in levels.levels[k + 1]:
            if F >> e & 1:
                avoid_sum += whitney_avoiding(restrict(M, F), k, e)
        details = {
            "sp1": wk <= w1 ** k,
            "sp2": None if ell is None else wk < ell ** (k * r),
            "sp3": through_k == w_contract,
            "sp4": wk == w_contract + avoid_sum,
        }
    failed = [name for name, ok in details.items() if ok is False]
    return PaperReport(
        claim_id="sp",
        status="fail" if failed else "pass",
        values={"k": k, "e": e, "ell": ell, "rank": r, "W_k": wk, "W_1": w1,
                "flats_through_e": through_k, "W_k-1(M/e)": w_contract,
                "avoiding_sum": avoid_sum, "checks": details},
        location="Whitney-number properties sp1-sp4",
        runtime=clock.elapsed,
    )
