"""Weight distribution tests.

The fast enumerator is checked against the naive message-product oracle, the
MacWilliams transform against actual enumeration of the Hermitian dual, and
Krawtchouk numbers against their generating function.
"""

import random

import pytest

from qcqec.errors import BudgetExceeded
from qcqec.gf import field_make
from qcqec import famat as fm
from qcqec import wdist

GF4 = field_make(2)
GF9 = field_make(3)
GF81 = field_make(9)


def rand_full_rank(rng, field, k, n):
    while True:
        m = fm.Mat(
            field, [[rng.randrange(field.Q) for _ in range(n)] for _ in range(k)]
        )
        if fm.rank(m) == k:
            return m


# --- packed arithmetic --------------------------------------------------------


@pytest.mark.parametrize("field", [GF4, GF9, GF81])
def test_packed_add_matches_field(field):
    pops = wdist.PackedOps(field)
    imported = pops.from_digit
    for a in field.digits:
        for b in field.digits:
            got = pops.add(imported[a : a + 1], imported[b : b + 1])[0]
            assert pops.digit_of(got) == field.add(a, b)


@pytest.mark.parametrize("field", [GF4, GF9, GF81])
def test_packed_zero_is_zero(field):
    pops = wdist.PackedOps(field)
    assert int(pops.from_digit[0]) == 0
    assert all(int(pops.from_digit[d]) != 0 for d in range(1, field.Q))


def test_scaled_packed_row():
    pops = wdist.PackedOps(GF9)
    row = (0, 1, 5, 8)
    for s in GF9.digits:
        packed = pops.scaled_packed_row(s, row)
        digits = [pops.digit_of(v) for v in packed]
        assert digits == [GF9.mul(s, d) for d in row]


# --- enumeration ----------------------------------------------------------------


def test_full_space_enumerator():
    enum = wdist.enumerate_code(fm.Mat.identity(GF4, 2))
    assert enum.counts == (1, 6, 9)


def test_zero_code():
    enum = wdist.enumerate_code(fm.Mat(GF4, [], ncols=5))
    assert enum.counts == (1, 0, 0, 0, 0, 0)
    assert enum.distance() is None


@pytest.mark.parametrize(
    "field,kmax,trials",
    [(GF4, 6, 25), (GF9, 4, 15), (GF81, 2, 6)],
)
def test_enumerate_matches_naive_oracle(field, kmax, trials):
    rng = random.Random(field.Q)
    for _ in range(trials):
        k = rng.randrange(1, kmax + 1)
        n = rng.randrange(k, k + 9)
        g = rand_full_rank(rng, field, k, n)
        fast = wdist.enumerate_code(g)
        slow = wdist.enumerate_code_naive(g)
        assert fast == slow


def test_enumerate_crosses_block_boundary():
    # force a code big enough that the inner table cannot hold everything
    rng = random.Random(99)
    g = rand_full_rank(rng, GF4, 10, 12)  # 4^10 > block target
    enum = wdist.enumerate_code(g)
    assert enum.total() == 4 ** 10
    dual = wdist.macwilliams(enum, 4)
    assert dual.counts[0] == 1  # checksum exercised


def test_enumerate_budget():
    g = fm.Mat.identity(GF4, 8)
    with pytest.raises(BudgetExceeded) as exc:
        wdist.enumerate_code(g, budget=4 ** 7)
    assert exc.value.required == 4 ** 8


def test_enumerate_rejects_rank_deficient():
    g = fm.Mat(GF4, [[1, 2, 0], [2, 3, 0]])
    with pytest.raises(ValueError):
        wdist.enumerate_code(g)


def test_enumerate_workers_agree():
    rng = random.Random(5)
    g = rand_full_rank(rng, GF4, 5, 9)
    one = wdist.enumerate_code(g, workers=1)
    many = wdist.enumerate_code(g, workers=3)
    assert one == many


def test_enumerator_counts_are_python_ints():
    enum = wdist.enumerate_code(fm.Mat.identity(GF4, 2))
    assert all(type(c) is int for c in enum.counts)


# --- Krawtchouk / MacWilliams -----------------------------------------------------


def oracle_krawtchouk_row(Q, n, i):
    """Coefficients of (1 + (Q-1)y)^(n-i) (1 - y)^i over the integers."""
    poly = [1]
    for _ in range(n - i):
        nxt = [0] * (len(poly) + 1)
        for t, c in enumerate(poly):
            nxt[t] += c
            nxt[t + 1] += (Q - 1) * c
        poly = nxt
    for _ in range(i):
        nxt = [0] * (len(poly) + 1)
        for t, c in enumerate(poly):
            nxt[t] += c
            nxt[t + 1] -= c
        poly = nxt
    return poly


@pytest.mark.parametrize("Q,n", [(4, 8), (9, 6), (81, 4)])
def test_krawtchouk_generating_function(Q, n):
    for i in range(n + 1):
        row = oracle_krawtchouk_row(Q, n, i)
        for j in range(n + 1):
            assert wdist.krawtchouk(Q, n, j, i) == row[j]


def test_krawtchouk_frozen_value():
    assert wdist.krawtchouk(4, 2, 1, 1) == 2


@pytest.mark.parametrize("field", [GF4, GF9])
def test_macwilliams_equals_actual_dual_enumerator(field):
    rng = random.Random(31 + field.Q)
    for _ in range(20):
        k = rng.randrange(1, 4)
        n = rng.randrange(k + 1, 8)
        g = rand_full_rank(rng, field, k, n)
        primal = wdist.enumerate_code(g)
        dual_mat = fm.hermitian_dual_basis(g)
        dual_direct = wdist.enumerate_code(dual_mat)
        assert wdist.macwilliams(primal, field.Q) == dual_direct


def test_macwilliams_involution_small():
    rng = random.Random(77)
    for _ in range(30):
        k = rng.randrange(1, 5)
        n = rng.randrange(k, 10)
        g = rand_full_rank(rng, GF4, k, n)
        enum = wdist.enumerate_code(g)
        back = wdist.macwilliams(wdist.macwilliams(enum, 4), 4)
        assert back == enum


def test_dual_distance_repetition_code():
    g = fm.Mat(GF4, [[1, 1, 1]])
    enum = wdist.enumerate_code(g)
    assert enum.counts == (1, 0, 0, 3)
    assert wdist.dual_distance(enum, 4) == 2


def test_impure_distance():
    # self-dual single row (1,1): dual equals primal, so no separating weight
    enum = wdist.enumerate_code(fm.Mat(GF4, [[1, 1]]))
    dual = wdist.macwilliams(enum, 4)
    assert wdist.impure_distance(enum, dual) is None
    # repetition [3,1]: dual has weight-2 words the code lacks
    enum3 = wdist.enumerate_code(fm.Mat(GF4, [[1, 1, 1]]))
    dual3 = wdist.macwilliams(enum3, 4)
    assert wdist.impure_distance(enum3, dual3) == 2


def test_json_map_round_trip():
    enum = wdist.enumerate_code(fm.Mat(GF4, [[1, 1, 1]]))
    assert enum.to_json_map() == {"0": "1", "3": "3"}
