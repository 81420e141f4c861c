import random
from itertools import product

import pytest

from matflat.errors import DivideByZero, NotPrimePower, Unsupported
from matflat.gf import (
    MAX_Q,
    add,
    build_field,
    inv,
    is_irreducible,
    is_prime_power,
    largest_prime_power_leq,
    moduli_table,
    mul,
    neg,
    prime_power_decomposition,
)

PRIME_POWERS = [q for q in range(2, MAX_Q + 1) if is_prime_power(q)]


def clmul_mod(a, b, modulus_bits):
    """Carry-less product over GF(2) reduced by a modulus given as an int bit pattern."""
    prod = 0
    while b:
        if b & 1:
            prod ^= a
        a <<= 1
        b >>= 1
    deg = modulus_bits.bit_length() - 1
    while prod.bit_length() - 1 >= deg:
        prod ^= modulus_bits << (prod.bit_length() - 1 - deg)
    return prod


def test_examples():
    assert build_field(2).add_table[1][1] == 0
    assert mul(build_field(5), 2, 3) == 1
    assert neg(build_field(3), 1) == 2


def test_gf4_table():
    f = build_field(4)
    assert f.modulus == (1, 1, 1)
    assert mul(f, 2, 2) == 3
    for a, b in product(range(4), repeat=2):
        assert mul(f, a, b) == clmul_mod(a, b, 0b111)


def test_gf8_with_explicit_modulus():
    f = build_field(8, modulus=(1, 1, 0, 1))  # x^3 + x + 1
    assert mul(f, 2, 4) == clmul_mod(2, 4, 0b1011) == 3
    for a, b in product(range(8), repeat=2):
        assert mul(f, a, b) == clmul_mod(a, b, 0b1011)


def test_gf8_default_modulus_is_lexicographically_least_low_degree_first():
    # (1,0,1,1) = x^3 + x^2 + 1 precedes (1,1,0,1) = x^3 + x + 1 when c0, c1, ... are compared in turn.
    f = build_field(8)
    assert f.modulus == (1, 0, 1, 1)
    assert mul(f, 2, 4) == clmul_mod(2, 4, 0b1101) == 5


def test_gf9_inverse_of_two():
    f = build_field(9)
    assert f.modulus == (1, 0, 1)  # x^2 + 1
    # 2 lies in the prime subfield, where 2 * 2 = 4 = 1 mod 3.
    assert inv(f, 2) == 2
    assert [v for v in range(9) if mul(f, 2, v) == 1] == [2]


def test_inverse_of_zero_raises():
    with pytest.raises(DivideByZero):
        inv(build_field(7), 0)
    with pytest.raises(ZeroDivisionError):
        build_field(4).inv(0)


@pytest.mark.parametrize("q", [0, 1, 6, 10, 12, 100])
def test_not_prime_power(q):
    with pytest.raises(NotPrimePower):
        build_field(q)


def test_too_large():
    with pytest.raises(Unsupported):
        build_field(131)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        build_field(4, modulus=(1, 0, 1))  # x^2 + 1 = (x + 1)^2 over GF(2)


def _check_axioms(f, triples):
    for a, b, c in triples:
        assert add(f, a, b) == add(f, b, a)
        assert mul(f, a, b) == mul(f, b, a)
        assert add(f, add(f, a, b), c) == add(f, a, add(f, b, c))
        assert mul(f, mul(f, a, b), c) == mul(f, a, mul(f, b, c))
        assert mul(f, a, add(f, b, c)) == add(f, mul(f, a, b), mul(f, a, c))


@pytest.mark.parametrize("q", [q for q in PRIME_POWERS if q <= 16])
def test_field_axioms_exhaustive(q):
    f = build_field(q)
    _check_axioms(f, product(range(q), repeat=3))
    for a in range(q):
        assert add(f, a, 0) == a and mul(f, a, 1) == a and mul(f, a, 0) == 0
        assert add(f, a, neg(f, a)) == 0
        if a:
            assert mul(f, a, inv(f, a)) == 1


@pytest.mark.parametrize("q", [q for q in PRIME_POWERS if q > 16])
def test_field_axioms_sampled(q):
    f = build_field(q)
    rng = random.Random(q)
    _check_axioms(f, ((rng.randrange(q), rng.randrange(q), rng.randrange(q)) for _ in range(100_000)))
    for a in range(1, q):
        assert mul(f, a, inv(f, a)) == 1


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_multiplicative_group_cyclic(q):
    f = build_field(q)
    orders = []
    for g in range(1, q):
        x, n = g, 1
        while x != 1:
            x, n = mul(f, x, g), n + 1
        orders.append(n)
    assert max(orders) == q - 1


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_frobenius_is_additive(q):
    f = build_field(q)
    for a, b in product(range(q), repeat=2):
        assert f.power(add(f, a, b), f.p) == add(f, f.power(a, f.p), f.power(b, f.p))


def _brute_irreducible(poly, p):
    """No roots, and no product of two lower-degree monic polynomials equals poly."""
    d = len(poly) - 1
    for x in range(p):
        if sum(c * x ** i for i, c in enumerate(poly)) % p == 0:
            return False
    for d1 in range(1, d):
        d2 = d - d1
        for a in product(range(p), repeat=d1):
            for b in product(range(p), repeat=d2):
                fa, fb = list(a) + [1], list(b) + [1]
                prod = [0] * (d + 1)
                for i, x in enumerate(fa):
                    for j, y in enumerate(fb):
                        prod[i + j] = (prod[i + j] + x * y) % p
                if prod == list(poly):
                    return False
    return True


@pytest.mark.parametrize("q", [q for q in PRIME_POWERS
                               if prime_power_decomposition(q)[1] in (2, 3, 4)
                               and prime_power_decomposition(q)[0] <= 11])
def test_default_modulus_irreducible_and_least(q):
    f = build_field(q)
    assert _brute_irreducible(f.modulus, f.p)
    for low in product(range(f.p), repeat=f.deg):
        cand = tuple(low) + (1,)
        if cand == f.modulus:
            break
        assert not _brute_irreducible(cand, f.p)


def test_is_irreducible_agrees_with_brute_force():
    for p, d in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        for low in product(range(p), repeat=d):
            poly = list(low) + [1]
            assert is_irreducible(poly, p) == _brute_irreducible(poly, p)


def test_largest_prime_power_leq():
    assert largest_prime_power_leq(2) == 2
    assert largest_prime_power_leq(6) == 5
    assert largest_prime_power_leq(127) == 127
    assert largest_prime_power_leq(126) == 125
    prev = 2
    for ell in range(2, 300):
        q = largest_prime_power_leq(ell)
        assert q <= ell and q >= prev
        assert all(not is_prime_power(m) for m in range(q + 1, ell + 1))
        assert largest_prime_power_leq(q) == q
        prev = q


def test_moduli_doc_is_current():
    from pathlib import Path

    doc = Path(__file__).resolve().parents[1] / "docs" / "moduli.md"
    assert moduli_table() in doc.read_text()
