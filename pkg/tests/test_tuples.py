from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import literal_obstructions, trial_division_primes
from primedelta import KTuple, NotPrimeError, is_admissible, occupied_residues


def test_occupied_residues_examples():
    assert occupied_residues((0, 2), 2) == {0}
    assert occupied_residues((0, 2, 4), 3) == {0, 1, 2}
    assert occupied_residues((0, 4, 6), 3) == {0, 1}


def test_occupied_residues_rejects_composite_modulus():
    with pytest.raises(NotPrimeError):
        occupied_residues((0, 2), 4)
    with pytest.raises(NotPrimeError):
        occupied_residues((0, 2), 1)


def test_is_admissible_examples():
    assert is_admissible((0, 2)).admissible
    verdict = is_admissible((0, 1))
    assert not verdict.admissible and verdict.obstruction == 2
    verdict = is_admissible((0, 2, 4))
    assert not verdict.admissible and verdict.obstruction == 3
    assert is_admissible((0, 4, 6, 10, 12, 16)).admissible


def test_verdict_is_truthy_iff_admissible():
    assert bool(is_admissible((0, 2)))
    assert not bool(is_admissible((0, 1)))


def test_singletons_are_admissible():
    assert is_admissible((0,)).admissible
    assert is_admissible((97,)).admissible


def test_agrees_with_literal_definition_small():
    # exhaustive over k <= 3, elements <= 12; the full k <= 5 sweep runs in
    # the acceptance suite
    pool = trial_division_primes(12 + 3)
    for k in (1, 2, 3):
        for offsets in combinations(range(13), k):
            failing = literal_obstructions(offsets, pool)
            verdict = is_admissible(offsets)
            assert verdict.admissible == (not failing), offsets
            if failing:
                assert verdict.obstruction == min(failing), offsets
            assert all(p <= k for p in failing), offsets


def _ktuples(max_k=6, max_element=60):
    return st.lists(
        st.integers(min_value=0, max_value=max_element),
        min_size=1,
        max_size=max_k,
        unique=True,
    ).map(KTuple.from_values)


@given(_ktuples(), st.integers(min_value=0, max_value=10_000))
def test_admissibility_is_translation_invariant(tup, shift):
    shifted = KTuple(tuple(h + shift for h in tup))
    assert is_admissible(tup) == is_admissible(shifted)


@given(_ktuples())
def test_subtuples_of_admissible_tuples_are_admissible(tup):
    if not is_admissible(tup):
        return
    for k in range(1, len(tup)):
        for sub in combinations(tup, k):
            assert is_admissible(sub).admissible, sub


@given(_ktuples(max_k=8, max_element=40))
def test_obstruction_never_exceeds_k(tup):
    verdict = is_admissible(tup)
    if not verdict.admissible:
        assert 2 <= verdict.obstruction <= len(tup)


def test_ktuple_validation():
    with pytest.raises(ValueError):
        KTuple(())
    with pytest.raises(ValueError):
        KTuple((3, 3))
    with pytest.raises(ValueError):
        KTuple((5, 2))
    with pytest.raises(ValueError):
        KTuple((-1, 2))


def test_ktuple_from_values_sorts_and_rejects_duplicates():
    assert KTuple.from_values([6, 0, 4]).elements == (0, 4, 6)
    with pytest.raises(ValueError, match="duplicate element 4"):
        KTuple.from_values([0, 4, 4])


def test_ktuple_sequence_protocol():
    tup = KTuple((0, 2, 6))
    assert len(tup) == 3 and tup.k == 3
    assert list(tup) == [0, 2, 6]
    assert tup[1] == 2
