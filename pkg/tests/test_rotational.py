from __future__ import annotations

import time

import pytest

from opstar import catalog
from opstar.core import INF, CycleType, TwoFactor
from opstar.errors import BadModulus, BadStarter
from opstar.rotational import (
    BaseQDifference,
    StarterSet,
    all_base_q_differences,
    base_q_difference,
    catalog_lookup,
    catalog_types,
    expand_starters,
    parity_obstruction,
)
from opstar.verify import verify_decomposition

from .source_factors import SOURCE_TEXT, written_factors


def test_base_q_difference_examples():
    assert base_q_difference((2, 7), 10, 3) == BaseQDifference("d", 5, 2)
    assert base_q_difference((6, INF), 9, 1) == BaseQDifference("+inf", 0, 0)
    assert base_q_difference((INF, 4), 10, 3) == BaseQDifference("-inf", 0, 1)


def test_base_q_difference_bad_modulus():
    with pytest.raises(BadModulus):
        base_q_difference((0, 1), 10, 4)


@pytest.mark.parametrize("n, q", [(9, 1), (10, 3), (13, 4)])
def test_difference_count_matches_arc_orbits(n, q):
    # every base-q difference is carried by exactly (n-1)/q arcs of K*_n
    assert len(all_base_q_differences(n, q)) * ((n - 1) // q) == n * (n - 1)


def _raw_factors(key):
    if key in catalog.STARTERS:
        return catalog.STARTERS[key][1]
    return catalog.EXPLICIT[key]


@pytest.mark.skipif(not SOURCE_TEXT.exists(), reason="reference text not present")
def test_catalog_factors_appear_verbatim_in_source_text():
    written = written_factors()
    for ct in catalog_types():
        for f in _raw_factors(ct.lengths):
            assert TwoFactor(tuple(map(tuple, f))).canonical() in written, ct


@pytest.mark.parametrize("ct", catalog_types(), ids=str)
def test_catalog_entry_expands_and_verifies(ct):
    found = catalog_lookup(ct)
    dec = expand_starters(found) if isinstance(found, StarterSet) else found
    assert len(dec) == ct.n - 1
    assert verify_decomposition(dec, ct).ok


def test_catalog_examples():
    s = catalog_lookup(CycleType((2, 3, 4)))
    assert s.q == 1
    assert s.starters[0].canonical() == TwoFactor(((1, 7), (0, 4, INF), (2, 3, 6, 5))).canonical()
    assert len(catalog_lookup(CycleType((4, 8)))) == 11
    assert catalog_lookup(CycleType((7, 9))) is None


@pytest.mark.parametrize("ct, q, count", [((4, 5), 1, 8), ((4, 6), 3, 9), ((3, 3, 4), 3, 9)])
def test_expansion_counts(ct, q, count):
    s = catalog_lookup(CycleType(ct))
    assert s.q == q and len(expand_starters(s)) == count


def test_catalog_has_no_parity_blocked_single_starter():
    for ct in catalog_types():
        found = catalog_lookup(ct)
        if isinstance(found, StarterSet) and found.q == 1:
            assert not parity_obstruction(ct), ct


def test_parity_obstruction():
    assert parity_obstruction(CycleType((3, 5)))
    assert not parity_obstruction(CycleType((2, 3, 3)))
    assert not parity_obstruction(CycleType((4, 5)))


def test_bad_starter_names_the_offending_differences():
    # the (4,5) starter with one cycle reversed repeats and drops differences
    good = catalog_lookup(CycleType((4, 5))).starters[0]
    c0, c1 = good.cycles
    with pytest.raises(BadStarter) as info:
        StarterSet(9, 1, (TwoFactor((c0[::-1], c1)),), CycleType((4, 5)))
    assert info.value.duplicated and info.value.missing


def test_transcription_is_fast():
    t0 = time.perf_counter()
    for ct in catalog_types():
        found = catalog_lookup(ct)
        dec = expand_starters(found) if isinstance(found, StarterSet) else found
        verify_decomposition(dec, ct)
    assert time.perf_counter() - t0 < 10
