"""Run every desk-checkable claim and collect the results as PaperReports."""

import logging

from .catalog import random_sp_triples, rank4_catalog
from .errors import ResourceLimit
from .flats import DEFAULT_CAP, check_sp_identities, enumerate_flats
from .geometry import build_ag, build_blokhuis, build_pg, build_pg_plus_free_point
from .matroid import contract, is_gfq_representable_rank_le3, restrict, simplify
from .minors import (
    blokhuis_line_count,
    check_kung,
    check_whitney_bound,
    corollary_check,
    max_line_length,
    smallest_ell,
)
from .qbinom import check_qb_properties, qbinom_product, qbinom_recursive
from .report import SCHEMA_VERSION, PaperReport, timed

log = logging.getLogger(__name__)

PROFILES = {
    "quick": {
        "pg_grid": [(2, 4), (3, 4)],
        "ag_grid": [(2, 4), (3, 4)],
        "blokhuis": [3],
        "free_point": [2, 3],
        "sp_triples": 50,
        "dichotomy_blokhuis": [4],
        "rank4_survey": ["PG(3,2)", "AG(3,2)", "U(4,6)", "PG(3,3)"],
        "corollary": [127],
    },
    "full": {
        "pg_grid": [(2, 5), (3, 5), (4, 5), (5, 5)],
        "ag_grid": [(2, 5), (3, 5)],
        "blokhuis": [3, 4, 5],
        "free_point": [2, 3, 4, 5],
        "sp_triples": 200,
        "dichotomy_blokhuis": [4, 5, 7, 8],
        "rank4_survey": None,
        "corollary": [127, 128, 131],
    },
}

QB_GRID_Q = (2, 3, 4, 5, 7, 8, 9)
QB_GRID_R = 12


def _report(claim_id, ok, location, clock, **values):
    return PaperReport(claim_id, "pass" if ok else "fail", values, location, clock.elapsed)


def _skipped(claim_id, location, reason, **values):
    values["reason"] = reason
    return PaperReport(claim_id, "skipped", values, location, 0.0)


def qbinom_claims():
    out = []
    with timed() as clock:
        bad = [(q, r, k) for q in QB_GRID_Q for r in range(QB_GRID_R + 1) for k in range(r + 1)
               if qbinom_recursive(q, r, k).value != qbinom_product(q, r, k).value]
    out.append(_report("qbinom-formulas", not bad, "recursive and product definitions agree", clock,
                       grid_q=list(QB_GRID_Q), max_r=QB_GRID_R, mismatches=bad))
    failures = {"qb1": [], "qb2": [], "qb3": []}
    checked = 0
    with timed() as clock:
        for q in QB_GRID_Q:
            for r in range(2, QB_GRID_R + 1):
                for k in range(1, r):
                    rep = check_qb_properties(q, r, k)
                    checked += 1
                    for name, ok in rep.values["checks"].items():
                        if not ok:
                            failures[name].append((q, r, k))
    for name, fails in failures.items():
        out.append(_report(name, not fails, f"q-binomial property {name}", clock,
                           cases=checked, failures=fails))
    return out


class _Levels:
    """Flat enumerations shared across claims, keyed by instance name."""

    def __init__(self, cap):
        self.cap = cap
        self._cache = {}

    def get(self, key, build):
        if key not in self._cache:
            M = build()
            self._cache[key] = (M, enumerate_flats(M, cap=self.cap))
        return self._cache[key]


def pg_claims(profile, cache):
    out = []
    for q, max_r in profile["pg_grid"]:
        for r in range(1, max_r + 1):
            name = f"PG({r - 1},{q})"
            n = (q ** r - 1) // (q - 1)
            try:
                with timed() as clock:
                    M, lv = cache.get(name, lambda: build_pg(r, q))
            except ResourceLimit as exc:
                out.append(_skipped("pg-whitney", "rank-k flats of PG(r-1,q)", str(exc), r=r, q=q, k="all", n=n))
                out.append(_skipped("kung-pg", "Kung's bound is tight on PG(r-1,q)", str(exc), r=r, q=q))
                out.append(_skipped("whitney-bound-pg", "the Whitney bound is tight on PG(r-1,q)",
                                    str(exc), r=r, q=q))
                continue
            for k in range(r + 1):
                w, b = len(lv.levels[k]), qbinom_product(q, r, k).value
                out.append(_report("pg-whitney", w == b, "rank-k flats of PG(r-1,q)", clock,
                                   r=r, q=q, k=k, computed=w, expected=b))
            rep = check_kung(M, q, lv)
            out.append(_report("kung-pg", rep.passed and rep.values["tight"],
                               "Kung's bound is tight on PG(r-1,q)", clock, r=r, q=q, **rep.values))
            tight = []
            for k in range(r + 1):
                rep = check_whitney_bound(M, q, k, lv)
                tight.append(rep.values["tight"])
            out.append(_report("whitney-bound-pg", all(tight), "the Whitney bound is tight on PG(r-1,q)",
                               clock, r=r, q=q, tight_by_k=tight))
    return out


def ag_claims(profile, cache):
    out = []
    for q, max_r in profile["ag_grid"]:
        for r in range(2, max_r + 1):
            with timed() as clock:
                _, ag = cache.get(f"AG({r - 1},{q})", lambda: build_ag(r, q))
                _, pg_low = cache.get(f"PG({r - 2},{q})", lambda: build_pg(r - 1, q))
                _, pg = cache.get(f"PG({r - 1},{q})", lambda: build_pg(r, q))
                rows = []
                # k = 0 is excluded: both sides count the empty flat.
                for k in range(1, r + 1):
                    a = len(ag.levels[k])
                    b = len(pg_low.levels[k]) if k <= r - 1 else 0
                    rows.append((k, a, b, len(pg.levels[k]), qbinom_product(q, r, k).value))
            ok = all(a + b == c == d for _, a, b, c, d in rows)
            out.append(_report("lemma8-ag-pg", ok, "W_k(AG(r-1,q)) + W_k(PG(r-2,q)) = W_k(PG(r-1,q))",
                               clock, r=r, q=q, rows=rows))
    return out


def blokhuis_claims(profile, cache):
    out = []
    for q in profile["blokhuis"]:
        with timed() as clock:
            M, lv = cache.get(f"M({q})", lambda: build_blokhuis(q))
            w2 = len(lv.levels[2])
            degrees = [sum(1 for L in lv.levels[2] if L >> e & 1) for e in M.elements()]
            mll = max_line_length(M, levels=lv)
        out.append(_report("lemma3-W2", w2 == blokhuis_line_count(q), "line count of M(q)", clock,
                           q=q, computed=w2, expected=blokhuis_line_count(q)))
        out.append(_report("lemma3-point-degree", set(degrees) == {2 * q - 1},
                           "every point of M(q) lies on 2q-1 lines", clock,
                           q=q, degrees=sorted(set(degrees)), expected=2 * q - 1))
        out.append(_report("lemma3-max-line", mll.max_line_length == 2 * q - 1,
                           "M(q) has no U_{2,2q}-minor", clock,
                           q=q, computed=mll.max_line_length, expected=2 * q - 1, **mll.to_dict()))
        rep = check_kung(M, 2 * q - 1, lv)
        out.append(_report("kung-blokhuis", rep.passed and rep.values["slack"] > 0,
                           "Kung's bound holds with slack on M(q)", clock, q=q, **rep.values))
    return out


def free_point_claims(profile):
    out = []
    for q in profile["free_point"]:
        with timed() as clock:
            M = build_pg_plus_free_point(q)
            e = M.n - 1
            Me = contract(M, 1 << e)
            lv = enumerate_flats(Me)
            w1 = len(lv.levels[1])
            rep = max_line_length(Me, early_exit_at=q * q + 1, levels=lv)
            F, G = rep.witness
            # Independent re-check of the witness: simplify (M/e)/F restricted to G.
            si, _ = simplify(restrict(contract(Me, F), G & ~F))
            witness_points = si.size
            representable = is_gfq_representable_rank_le3(M, q)
        ok = w1 >= q * q + 1 and rep.max_line_length >= q * q + 1 and witness_points >= q * q + 1
        out.append(_report("lemma6-free-point", ok, "a proper PG(2,q)-extension has a U_{2,q^2+1}-minor",
                           clock, q=q, W_1=w1, needed=q * q + 1, witness_points=witness_points,
                           **rep.to_dict()))
        out.append(_report("free-point-not-representable", not representable,
                           "PG(2,q) plus a free point is not GF(q)-representable", clock, q=q))
    with timed() as clock:
        pg_ok = all(is_gfq_representable_rank_le3(build_pg(3, q), q) for q in (2, 3))
        ag_ok = is_gfq_representable_rank_le3(build_ag(3, 3), 3)
    out.append(_report("gfq-representable", pg_ok and ag_ok, "PG(2,q) and AG(2,3) embed in PG(2,q)",
                       clock, pg=pg_ok, ag=ag_ok))
    return out


def sp_claims(profile):
    triples = random_sp_triples(profile["sp_triples"], seed=2013)
    failures = {f"sp{i}": [] for i in range(1, 5)}
    ells = {}
    with timed() as clock:
        levels = {}
        for name, M, k, e in triples:
            if name not in levels:
                levels[name] = enumerate_flats(M)
                ells[name] = smallest_ell(M, levels[name])
            rep = check_sp_identities(M, k, e, ell=ells[name], levels=levels[name])
            for key, ok in rep.values["checks"].items():
                if ok is False:
                    failures[key].append((name, k, e))
    return [_report(key, not fails, f"Whitney-number property {key}", clock,
                    triples=len(triples), failures=fails)
            for key, fails in failures.items()]


def dichotomy_claims(profile, cap=DEFAULT_CAP):
    out = []
    with timed() as clock:
        rows = []
        cat = rank4_catalog()
        names = profile["rank4_survey"] or sorted(cat)
        for name in names:
            M = cat[name]()
            lv = enumerate_flats(M, cap=cap)
            ell = smallest_ell(M, lv)
            violated = [k for k in range(M.full_rank + 1)
                        if not check_whitney_bound(M, ell, k, lv).passed]
            rows.append({"instance": name, "rank": M.full_rank, "ell": ell, "violated_k": violated})
    out.append(_report("dichotomy-rank4", all(not r["violated_k"] for r in rows),
                       "no rank >= 4 instance in U(l) beats [r,k]_q", clock, instances=rows))
    for q in profile["dichotomy_blokhuis"]:
        with timed() as clock:
            M = build_blokhuis(q)
            lv = enumerate_flats(M, cap=cap)
            ell = smallest_ell(M, lv)
            rep = check_whitney_bound(M, ell, 2, lv)
        out.append(_report("dichotomy-blokhuis", rep.status == "fail",
                           "rank-3 Blokhuis matroids beat [3,2]_q", clock, blokhuis_q=q, **rep.values))
    if 7 in profile["dichotomy_blokhuis"]:
        with timed() as clock:
            M = build_blokhuis(7)
            rep = check_whitney_bound(M, 13, 2)
        out.append(_report("conjecture-counterexample-q13", rep.status == "fail",
                           "M(7) has no U_{2,15}-minor and more than [3,2]_13 lines", clock, **rep.values))
    return out


def corollary_claims(profile):
    return [corollary_check(q) for q in profile["corollary"]]


def verify_paper(profile="quick", cap=DEFAULT_CAP):
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    prof = PROFILES[profile]
    cache = _Levels(cap)
    reports = []
    steps = [
        ("qbinom", qbinom_claims),
        ("pg", lambda: pg_claims(prof, cache)),
        ("ag", lambda: ag_claims(prof, cache)),
        ("blokhuis", lambda: blokhuis_claims(prof, cache)),
        ("free-point", lambda: free_point_claims(prof)),
        ("sp", lambda: sp_claims(prof)),
        ("dichotomy", lambda: dichotomy_claims(prof, cap)),
        ("corollary", lambda: corollary_claims(prof)),
    ]
    for name, step in steps:
        try:
            batch = step()
        except ResourceLimit as exc:
            batch = [_skipped(f"{name}-claims", f"{name} claims", str(exc), cap=cap)]
        for rep in batch:
            log.info("%s %s", rep.status.upper(), rep.claim_id)
        reports.extend(batch)
    return reports


def summarize(reports, profile):
    counts = {s: sum(1 for r in reports if r.status == s) for s in ("pass", "fail", "skipped")}
    return {
        "schema": SCHEMA_VERSION,
        "profile": profile,
        "summary": counts,
        "reports": [r.to_dict() for r in reports],
    }
