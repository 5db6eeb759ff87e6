import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import sieve
from vdw.core import (
    APWitness,
    Coloring,
    Parameters,
    allowed_block_indices,
    block_tuple,
    concatenate_blocks,
    excluded_block_indices,
    is_prime,
    largest_prime_leq,
)
from vdw.errors import DomainError


@pytest.mark.parametrize("k, p", [(11, 11), (4, 3), (10, 7), (2, 2), (3, 3), (13, 13), (14, 13)])
def test_largest_prime_leq_examples(k, p):
    assert largest_prime_leq(k) == p


@pytest.mark.parametrize("k", [1, 0, -5])
def test_largest_prime_leq_rejects_small(k):
    with pytest.raises(DomainError):
        largest_prime_leq(k)


@pytest.mark.slow
def test_largest_prime_leq_matches_sieve_up_to_a_million():
    limit = 10**6
    is_p = sieve(limit)
    # running maximum of prime indices gives the sieve's answer for every k
    idx = np.where(is_p, np.arange(limit + 1), 0)
    expected = np.maximum.accumulate(idx)
    got = np.fromiter((largest_prime_leq(k) for k in range(2, limit + 1)), dtype=np.int64, count=limit - 1)
    mismatch = np.flatnonzero(got != expected[2:])
    assert mismatch.size == 0, f"first mismatch at k={mismatch[0] + 2}"


def test_is_prime_agrees_with_sieve_and_large_known_values():
    is_p = sieve(20000)
    assert [n for n in range(20001) if is_prime(n)] == list(np.flatnonzero(is_p))
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


@pytest.mark.parametrize(
    "i, r, k, entries",
    [
        (1, 5, 11, (1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 1)),
        (5, 5, 11, (5, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5)),
        (2, 4, 3, (2, 3, 4)),
        (2, 5, 11, (2, 3, 4, 5, 1, 2, 3, 4, 5, 1, 2)),
        (3, 5, 11, (3, 4, 5, 1, 2, 3, 4, 5, 1, 2, 3)),
        (4, 5, 11, (4, 5, 1, 2, 3, 4, 5, 1, 2, 3, 4)),
    ],
)
def test_block_tuple_examples(i, r, k, entries):
    b = block_tuple(i, r, k)
    assert b.entries == entries
    assert b.start_color == i
    assert len(b) == b.params.p


@pytest.mark.parametrize("i", [0, 6, -1])
def test_block_tuple_index_out_of_range(i):
    with pytest.raises(DomainError):
        block_tuple(i, 5, 11)


def test_only_first_block_has_color_i_at_position_congruent_to_i():
    hits = [
        i for i in range(1, 6)
        if any(c == i and j % 5 == i % 5 for j, c in enumerate(block_tuple(i, 5, 11).entries, start=1))
    ]
    assert hits == [1]


@pytest.mark.parametrize(
    "r, k, excluded",
    [(3, 3, {1}), (4, 3, {1, 4}), (7, 5, {1, 6}), (2, 3, {1}), (9, 3, {1, 4, 7}), (10, 3, {1, 4, 7, 10})],
)
def test_excluded_block_indices_examples(r, k, excluded):
    assert excluded_block_indices(r, k) == excluded


rk = st.tuples(st.integers(2, 40), st.integers(2, 30))


@given(rk)
def test_excluded_complement_size(params):
    r, k = params
    p = largest_prime_leq(k)
    assert len(allowed_block_indices(r, k)) == r - math.ceil(r / p)
    assert len(set(range(1, r + 1)) - excluded_block_indices(r, k)) == r - math.ceil(r / p)


@given(rk, st.data())
def test_block_positions_of_a_color_share_a_residue_mod_r(params, data):
    r, k = params
    i = data.draw(st.integers(1, r))
    b = block_tuple(i, r, k)
    for j, c in enumerate(b.entries, start=1):
        assert c == (i - 1 + j - 1) % r + 1
    for c in set(b.entries):
        assert len({q % r for q in b.index_positions(c)}) == 1


@given(st.integers(2, 30), st.data())
def test_each_color_visits_each_residue_once_across_blocks(k, data):
    p = largest_prime_leq(k)
    r = data.draw(st.integers(1, p))
    for c in range(1, r + 1):
        residues = [block_tuple(i, r, k).index_positions(c)[0] % r for i in range(1, r + 1)]
        assert sorted(residues) == list(range(r))


@given(st.integers(2, 40), st.integers(3, 20))
def test_allowed_blocks_leave_every_color_a_missing_index_mod_p(r, k):
    """The pigeonhole fact behind the divisibility property, checked mod p."""
    p = largest_prime_leq(k)
    for c in range(1, r + 1):
        residues = set()
        for i in allowed_block_indices(r, k):
            residues |= {q % p for q in block_tuple(i, r, k).index_positions(c)}
        assert len(residues) <= p - 1


def test_parameters_validation():
    assert Parameters.of(5, 11).p == 11
    assert Parameters.of(7, 5).reduced_colors == 5
    with pytest.raises(DomainError):
        Parameters(3, 5, 4)
    with pytest.raises(DomainError):
        Parameters(0, 5, 5)
    with pytest.raises(DomainError):
        Parameters.of(3, 1)


def test_coloring_validation_and_concatenation():
    empty = Coloring((), 3)
    c = Coloring([1, 2, 3], 3)
    assert isinstance(c.colors, tuple)
    assert len(empty) == 0
    assert empty + c == c
    assert c + empty == c
    assert c[1] == 1 and c[3] == 3
    with pytest.raises(IndexError):
        c[0]
    with pytest.raises(DomainError):
        Coloring((1, 4), 3)
    with pytest.raises(DomainError):
        Coloring((0, 1), 3)


def test_apwitness_recheck():
    c = Coloring((1, 2, 1, 2, 1), 2)
    assert APWitness(1, 2, 3, 1).holds_in(c)
    assert APWitness(1, 2, 3, 1).positions == (1, 3, 5)
    assert not APWitness(2, 2, 3, 2).holds_in(c)
    assert not APWitness(1, 0, 3, 1).holds_in(c)


def test_concatenate_blocks():
    t = concatenate_blocks([2, 3, 2, 3], 3, 3)
    assert t.colors == (2, 3, 1, 3, 1, 2, 2, 3, 1, 3, 1, 2)
