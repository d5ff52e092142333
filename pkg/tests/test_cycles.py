import itertools

import pytest
from hypothesis import given, strategies as st

from mayachain.cycles import (
    CycleSpec,
    build_cycle,
    count_cycles,
    cycle_spec_at,
    enumerate_cycles,
    parse_permutation,
    parse_spec,
    signatures,
    valid_shifts,
)
from mayachain.maya import blocks, flip, kblocks, translate, xi


def test_shifts_and_signatures_p5():
    assert valid_shifts(5) == [1, 3, 5]
    assert signatures(5, 3) == [(1, 1, 3), (1, 3, 1), (3, 1, 1)]
    assert signatures(5, 1) == [(5,)]
    assert signatures(5, 5) == [(1, 1, 1, 1, 1)]


def test_p1():
    assert valid_shifts(1) == [1]
    assert signatures(1, 1) == [(1,)]
    specs = list(enumerate_cycles(1, 0))
    assert len(specs) == 1
    s = specs[0]
    assert (s.k, s.signature, s.n_tuple, s.permutation) == (1, (1,), (), (0,))


def test_even_period_unsupported():
    with pytest.raises(NotImplementedError):
        valid_shifts(4)


def test_signature_classes_p5():
    classes = {(s.k, s.signature) for s in enumerate_cycles(5, 0)}
    assert len(classes) == 5


def _brute_count(p, max_n):
    """Independent count straight from the definitions."""
    total = 0
    for k in range(1, p + 1):
        if (p - k) % 2:
            continue
        comps = [c for c in itertools.product(range(1, p + 1, 2), repeat=k) if sum(c) == p]
        perms = [q for q in itertools.permutations(range(p)) if q[-1] == 0]
        total += len(comps) * (max_n + 1) ** (p - 1) * len(perms)
    return total


@pytest.mark.parametrize("p,max_n", [(1, 0), (3, 0), (3, 1), (3, 2), (5, 0)])
def test_counts(p, max_n):
    assert count_cycles(p, max_n) == _brute_count(p, max_n)
    assert len(list(enumerate_cycles(p, max_n))) == count_cycles(p, max_n)


def test_p3_count_is_16():
    assert count_cycles(3, 1) == 16


def test_random_access_matches_stream():
    specs = list(enumerate_cycles(3, 2))
    for i, s in enumerate(specs):
        assert cycle_spec_at(3, 2, i) == s
    with pytest.raises(IndexError):
        cycle_spec_at(3, 2, len(specs))


def test_enumeration_deterministic():
    assert list(enumerate_cycles(3, 1)) == list(enumerate_cycles(3, 1))


def test_example_k1():
    cyc = build_cycle(CycleSpec(5, 1, (5,), (2, 3, 1, 1), (3, 4, 2, 1, 0)))
    assert blocks(cyc.diagrams[0]) == (0, 2, 5, 6, 7)
    assert cyc.canonical == (0, 2, 5, 6, 7)
    assert cyc.flips == (6, 7, 5, 2, 0)
    assert cyc.diagrams[1] == xi((0, 2, 5, 7, 7))
    assert cyc.diagrams[5] == xi((1, 3, 6, 7, 8)) == translate(cyc.diagrams[0], 1)
    assert not cyc.degenerate
    assert cyc.check()


def test_example_k3():
    cyc = build_cycle(parse_spec("p=5 k=3 sig=1,1,3 n=3,1,1,2 perm=41230"))
    sig, coords = kblocks(cyc.diagrams[0], 3)
    assert sig == (1, 1, 3)
    assert coords == ((0,), (3,), (1, 2, 4))
    assert cyc.flips == (14, 10, 5, 8, 0)
    assert cyc.check()


def test_example_k5():
    cyc = build_cycle(parse_spec("sig=1,1,1,1,1 n=2,3,0,1 perm=32410"))
    assert cyc.canonical == (0, 11, 17, 3, 9)
    assert cyc.flips == (3, 17, 9, 11, 0)
    assert cyc.check()


def test_degenerate_example():
    cyc = build_cycle(parse_spec("sig=5 n=1,1,2,0 perm=42130"))
    assert cyc.degenerate
    assert cyc.canonical == (0, 1, 2, 4, 4)
    assert cyc.diagrams[0] == xi((0, 1, 2, 4, 4))
    assert cyc.flips == (4, 2, 1, 4, 0)
    assert cyc.check()


def test_spec_validation():
    with pytest.raises(ValueError):
        CycleSpec(5, 3, (1, 1, 3), (3, 1, 1, 2), (4, 1, 2, 0, 3))  # must end in 0
    with pytest.raises(ValueError):
        CycleSpec(5, 3, (1, 2, 2), (3, 1, 1, 2), (4, 1, 2, 3, 0))  # even part
    with pytest.raises(ValueError):
        CycleSpec(5, 1, (5,), (3, 1, 1), (4, 1, 2, 3, 0))  # wrong n length
    with pytest.raises(ValueError):
        CycleSpec(5, 1, (5,), (3, -1, 1, 1), (4, 1, 2, 3, 0))
    with pytest.raises(ValueError):
        parse_spec("sig=5 n=1,1,2,0")
    with pytest.raises(ValueError):
        parse_spec("sig=5 n=1,1,2,0 perm=42130 bogus=1")


def test_spec_text_roundtrip():
    s = parse_spec("p=5 k=3 sig=1,1,3 n=3,1,1,2 perm=41230")
    assert parse_spec(s.to_text()) == s
    assert CycleSpec.from_dict(s.to_dict()) == s
    assert parse_permutation("41230") == (4, 1, 2, 3, 0)


@given(st.data())
def test_random_cycles_close(data):
    p = data.draw(st.sampled_from([1, 3, 5, 7]))
    k = data.draw(st.sampled_from(valid_shifts(p)))
    sig = data.draw(st.sampled_from(signatures(p, k)))
    n = tuple(data.draw(st.lists(st.integers(0, 3), min_size=p - 1, max_size=p - 1)))
    perm = data.draw(st.permutations(range(1, p))) + [0]
    cyc = build_cycle(CycleSpec(p, k, sig, n, tuple(perm)))
    D = cyc.diagrams
    assert all(D[i + 1] == flip(D[i], cyc.flips[i]) for i in range(p))
    assert D[p] == translate(D[0], k)
    assert sorted(cyc.flips) == sorted(cyc.canonical)
    assert cyc.degenerate == (len(set(cyc.flips)) < p)
    assert cyc.canonical[0] == 0
