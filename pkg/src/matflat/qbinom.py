"""Gaussian binomial coefficients with exact integer arithmetic."""

from dataclasses import dataclass

from .errors import InternalError
from .report import PaperReport, timed


@dataclass(frozen=True)
class QBinom:
    q: int
    r: int
    k: int
    value: int

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value


def qbinom_recursive(q, r, k):
    """Evaluate via [r,k] = q^k [r-1,k] + [r-1,k-1], row by row."""
    if k < 0 or k > r:
        return QBinom(q, r, k, 0)
    row = [1]  # row for r = 0
    for n in range(1, r + 1):
        new = [1] * (n + 1)
        for j in range(1, n):
            new[j] = q ** j * row[j] + row[j - 1]
        row = new
    return QBinom(q, r, k, row[k])


def qbinom_product(q, r, k):
    """Evaluate via prod (q^(r-i) - 1) / (q^(i+1) - 1) over i < k, dividing once at the end."""
    if k < 0 or k > r:
        return QBinom(q, r, k, 0)
    num = den = 1
    for i in range(k):
        num *= q ** (r - i) - 1
        den *= q ** (i + 1) - 1
    value, rem = divmod(num, den)
    if rem:
        raise InternalError(f"inexact division computing [{r} {k}]_{q}")
    return QBinom(q, r, k, value)


def qbinom(q, r, k):
    return qbinom_product(q, r, k).value


def check_qb_properties(q, r, k):
    """Check the three elementary q-binomial properties at (q, r, k), 0 < k < r.

    qb1: [r,k] >= q^(ki) [r-i,k] for every i in 0..r
    qb2: q^(k(r-k)) <= [r,k] <= q^(rk)
    qb3: [r,k] = [r-1,k] + q^(r-k) [r-1,k-1]
    """
    with timed() as clock:
        if not 0 < k < r:
            raise ValueError(f"need 0 < k < r, got k={k}, r={r}")
        v = qbinom(q, r, k)
        qb1_fail = [i for i in range(r + 1) if v < q ** (k * i) * qbinom(q, r - i, k)]
        lo, hi = q ** (k * (r - k)), q ** (r * k)
        rhs3 = qbinom(q, r - 1, k) + q ** (r - k) * qbinom(q, r - 1, k - 1)
        details = {
            "qb1": not qb1_fail,
            "qb2": lo <= v <= hi,
            "qb3": v == rhs3,
        }
    return PaperReport(
        claim_id="qb",
        status="pass" if all(details.values()) else "fail",
        values={"q": q, "r": r, "k": k, "value": v, "qb1_failing_i": qb1_fail,
                "qb2_bounds": [lo, hi], "qb3_rhs": rhs3, "checks": details},
        location="q-binomial properties qb1-qb3",
        runtime=clock.elapsed,
    )
