import itertools

import pytest

from signed_kostka.combinatorics import RhoShape
from signed_kostka.sylow import (
    SignedPerm,
    adjacent_transposition,
    enumerate_group,
    hyperoctahedral,
    symmetric,
    sylow_generators,
    sylow_of_symmetric,
    word_in_adjacent,
)
from signed_kostka.tabloids import perm_from_cycles, perm_mul


def test_example_q2():
    P = sylow_generators(RhoShape((3, 2), 3))
    want = {perm_from_cycles([(4, 5, 6)], 9), perm_from_cycles([(7, 8, 9)], 9)}
    assert set(P.generators) == want
    assert P.order == 9


def test_p9_and_s12():
    P9 = sylow_generators(RhoShape((0, 0, 1), 3))
    assert P9.generators == (
        perm_from_cycles([(1, 2, 3)], 9),
        perm_from_cycles([(1, 4, 7), (2, 5, 8), (3, 6, 9)], 9),
    )
    assert len(enumerate_group(P9)) == 81
    assert sylow_of_symmetric(12, 3).order == 243
    assert len(enumerate_group(sylow_of_symmetric(12, 3))) == 243


def test_enumeration_cap():
    with pytest.raises(Exception):
        enumerate_group(sylow_of_symmetric(27, 3), cap=100)


def test_word_in_adjacent():
    for g in itertools.permutations(range(1, 5)):
        out = tuple(range(1, 5))
        for i in word_in_adjacent(g):
            out = perm_mul(out, adjacent_transposition(i, 4))
        assert out == g


def test_signed_perm_group_laws():
    els = [SignedPerm(s, p) for s in itertools.product((1, -1), repeat=3) for p in itertools.permutations((1, 2, 3))]
    assert len(els) == 48
    e = SignedPerm.identity(3)
    for a in els[::5]:
        assert a * a.inverse() == e and a.inverse() * a == e
        for b in els[::7]:
            for c in els[::11]:
                assert (a * b) * c == a * (b * c)


def test_group_specs():
    assert len(symmetric(4).generators()) == 3
    gens = hyperoctahedral(3).generators()
    assert len(gens) == 3 and gens[-1].signs == (-1, 1, 1)
    with pytest.raises(ValueError):
        hyperoctahedral(-1)
