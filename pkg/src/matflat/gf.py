"""Lookup-table arithmetic in GF(q) for prime powers q <= 128.

An element is an int in ``range(q)``; its base-p digits are the coefficients of
a polynomial over GF(p), least significant digit = constant term.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import DivideByZero, NotPrimePower, Unsupported

MAX_Q = 128


def prime_power_decomposition(n):
    """Return ``(p, d)`` with ``n == p**d`` and p prime, or ``None``."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return (n, 1)
    d = 0
    while n % p == 0:
        n //= p
        d += 1
    return (p, d) if n == 1 else None


def is_prime_power(n):
    return prime_power_decomposition(n) is not None


def largest_prime_power_leq(ell):
    if ell < 2:
        raise ValueError(f"need ell >= 2, got {ell}")
    q = ell
    while not is_prime_power(q):
        q -= 1
    return q


# --- polynomials over GF(p), coefficient lists low degree first ---------------

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _poly_trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _poly_trim(a)
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(poly, p):
    """Brute-force irreducibility test: no monic factor of degree 1..deg//2 divides ``poly``."""
    d = len(poly) - 1
    for fd in range(1, d // 2 + 1):
        for low in product(range(p), repeat=fd):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p, d):
    """Lexicographically least monic irreducible of degree d, comparing c0, c1, ... in turn."""
    for low in product(range(p), repeat=d):
        poly = list(low) + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {d} over GF({p})")


def _to_digits(n, p, d):
    out = []
    for _ in range(d):
        n, r = divmod(n, p)
        out.append(r)
    return out


def _from_digits(digits, p):
    n = 0
    for c in reversed(digits):
        n = n * p + c
    return n


@dataclass(frozen=True, eq=False)
class FieldTable:
    q: int
    p: int
    deg: int
    modulus: tuple
    add_table: tuple
    mul_table: tuple
    inv_table: tuple
    neg_table: tuple

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def inv(self, a):
        if a == 0:
            raise DivideByZero(f"0 has no inverse in GF({self.q})")
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul_table[a][self.inv(b)]

    def power(self, a, e):
        out = 1
        for _ in range(e):
            out = self.mul_table[out][a]
        return out

    def __repr__(self):
        return f"FieldTable(q={self.q}, modulus={self.modulus})"

    def __reduce__(self):
        return (build_field, (self.q, self.modulus))


@lru_cache(maxsize=None)
def build_field(q, modulus=None):
    """Build GF(q).  ``modulus`` (low-degree-first coefficients, monic) overrides the default choice."""
    if q > MAX_Q:
        raise Unsupported(f"q = {q} exceeds the supported maximum {MAX_Q}")
    pd = prime_power_decomposition(q)
    if pd is None:
        raise NotPrimePower(f"{q} is not a prime power")
    p, d = pd
    if modulus is None:
        modulus = smallest_irreducible(p, d) if d > 1 else (0, 1)
    else:
        modulus = tuple(modulus)
        if len(modulus) != d + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
            raise ValueError(f"modulus {modulus} is not a monic degree-{d} polynomial over GF({p})")
        if not is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")

    digits = [_to_digits(a, p, d) for a in range(q)]
    add = tuple(
        tuple(_from_digits([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
        for a in range(q)
    )
    if d == 1:
        mul = tuple(tuple(a * b % p for b in range(q)) for a in range(q))
    else:
        mod = list(modulus)
        rows = []
        for a in range(q):
            rows.append(tuple(
                _from_digits(_poly_mod(_poly_mul(digits[a], digits[b], p), mod, p) + [0] * d, p)
                if a and b else 0
                for b in range(q)
            ))
        mul = tuple(rows)
    inv = [0] * q
    for a in range(1, q):
        inv[a] = mul[a].index(1)
    neg = tuple(add[a].index(0) for a in range(q))
    return FieldTable(q, p, d, modulus, add, mul, tuple(inv), neg)


def add(f, a, b):
    return f.add(a, b)


def mul(f, a, b):
    return f.mul(a, b)


def inv(f, a):
    return f.inv(a)


def neg(f, a):
    return f.neg(a)


def format_poly(coeffs):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


def moduli_table():
    """Markdown table of the default modulus for every non-prime q <= MAX_Q."""
    lines = ["| q | p | degree | modulus |", "|---|---|---|---|"]
    for q in range(2, MAX_Q + 1):
        pd = prime_power_decomposition(q)
        if pd is None or pd[1] == 1:
            continue
        p, d = pd
        lines.append(f"| {q} | {p} | {d} | {format_poly(smallest_irreducible(p, d))} |")
    return "\n".join(lines) + "\n"
