from dataclasses import replace
from itertools import combinations

import pytest

from fewdist.bounds import best_bounds
from fewdist.constructions import construct_constant_weight, construct_golay_blocks
from fewdist.core import Code, DistanceSet, ResourceLimitError, Word, distance_set_of
from fewdist.search import (SearchResult, candidate_words, color_sort, compatibility_graph,
                            max_code, verify_witness)

DS = DistanceSet.of


def brute_force_max(n, D):
    """Largest subset of {0,1}^n with distances in D: plain DFS over all words, no pruning."""
    allowed = set(D)
    words = range(1 << n)
    ok = [[(a ^ b).bit_count() in allowed for b in words] for a in words]
    best = 1

    def grow(size, last, members):
        nonlocal best
        best = max(best, size)
        for w in range(last + 1, 1 << n):
            if all(ok[w][m] for m in members):
                members.append(w)
                grow(size + 1, w, members)
                members.pop()

    grow(0, -1, [])
    return best


def small_cases():
    for n in range(1, 5):
        for s in range(1, n + 1):
            for ds in combinations(range(1, n + 1), s):
                yield n, ds
    for s in (1, 2):
        for ds in combinations(range(1, 6), s):
            yield 5, ds


@pytest.mark.parametrize("n, ds", list(small_cases()))
def test_matches_brute_force(n, ds):
    D = DistanceSet(ds)
    result = max_code(n, D)
    assert result.complete
    assert result.value == brute_force_max(n, D)
    assert verify_witness(result, n, D)


@pytest.mark.parametrize("n, ds, value", [(6, (2, 4), 16), (7, (2, 4), 22), (3, (3,), 2)])
def test_examples(n, ds, value):
    r = max_code(n, DistanceSet(ds))
    assert r.complete and r.value == value
    assert Word.zero(n) in r.witness


def test_candidates_ordered_by_weight_then_word():
    words = candidate_words(4, DS(1, 3))
    assert len(words) == 8
    assert words == sorted(words, key=lambda w: (w.bit_count(), w))
    assert [w.bit_count() for w in words] == [1] * 4 + [3] * 4


def test_compatibility_graph_symmetric():
    words = candidate_words(6, DS(2, 4))
    adj = compatibility_graph(6, words, DS(2, 4))
    for i, row in enumerate(adj):
        assert not row >> i & 1
        for j in range(len(words)):
            assert (row >> j & 1) == (adj[j] >> i & 1) == ((words[i] ^ words[j]).bit_count() in (2, 4))


def test_color_classes_are_independent():
    words = candidate_words(7, DS(3, 4))
    adj = compatibility_graph(7, words, DS(3, 4))
    order, colors = color_sort(adj, (1 << len(words)) - 1)
    assert sorted(order) == list(range(len(words)))
    assert colors == sorted(colors)
    for a, b in combinations(range(len(order)), 2):
        if colors[a] == colors[b]:
            assert not adj[order[a]] >> order[b] & 1


def test_soundness_small():
    for n in range(1, 8):
        for s in (1, 2):
            for ds in combinations(range(1, n + 1), s):
                D = DistanceSet(ds)
                r = max_code(n, D)
                assert r.complete and r.value <= best_bounds(n, D).minimum


@pytest.mark.parametrize("n, ds", [(6, (1, 3, 5)), (7, (2, 3, 5)), (7, (1, 2, 4))])
def test_soundness_three_distances(n, ds):
    D = DistanceSet(ds)
    assert max_code(n, D).value <= best_bounds(n, D).minimum


def test_achievability():
    for s in (1, 2, 3):
        for n in range(2 * s, 9):
            D = DistanceSet(tuple(range(2, 2 * s + 1, 2)))
            assert max_code(n, D).value >= len(construct_constant_weight(n, s, s % 2 == 0))


@pytest.mark.parametrize("n, ds", [(7, (2, 4)), (8, (3, 4)), (6, (2, 3, 5))])
def test_thread_count_does_not_change_value(n, ds):
    D = DistanceSet(ds)
    single = max_code(n, D, threads=1)
    again = max_code(n, D, threads=1)
    multi = max_code(n, D, threads=3)
    assert single.value == multi.value and single.complete and multi.complete
    assert single.witness == again.witness and single.nodes == again.nodes
    assert verify_witness(multi, n, D)


def test_time_limit():
    r = max_code(20, DS(2, 4), time_limit=0.01)
    assert not r.complete
    assert verify_witness(r, 20, DS(2, 4))


def test_time_limit_during_search():
    # Graph builds quickly; the clique search is what runs out of time.
    r = max_code(11, DS(3, 4, 7, 8), time_limit=0.3)
    assert not r.complete and r.nodes > 0
    assert verify_witness(r, 11, DS(3, 4, 7, 8))
    assert r.value >= 2


def test_length_limit():
    with pytest.raises(ResourceLimitError):
        max_code(21, DS(2))
    max_code(21, DS(21), max_length=21)


def test_verify_witness_fault_injection():
    r = max_code(6, DS(2, 4))
    assert verify_witness(r, 6, DS(2, 4))
    victim = r.witness.sorted()[5]
    flipped = Word(6, victim.bits ^ 1)
    bad_words = (r.witness.words - {victim}) | {flipped}
    bad = replace(r, witness=Code(6, frozenset(bad_words)))
    assert not verify_witness(bad, 6, DS(2, 4))
    assert not verify_witness(replace(r, value=17), 6, DS(2, 4))
    assert not verify_witness(r, 7, DS(2, 4))


def test_verify_witness_golay():
    golay = construct_golay_blocks()
    claimed = SearchResult(253, golay, True, 0, 0.0)
    assert verify_witness(claimed, 23, DS(8, 12))
    assert distance_set_of(golay) == DS(8, 12)


@pytest.mark.parametrize("n, ds, size", [(5, (2, 4), 16), (6, (2, 4, 6), 32),
                                         (7, (2, 4, 6), 64)])
def test_even_weight_codes_beat_constant_weight(n, ds, size):
    # All even-weight words: distances are the even numbers up to n.
    evens = Code(n, frozenset(Word(n, b) for b in range(1 << n) if b.bit_count() % 2 == 0))
    assert len(evens) == size and distance_set_of(evens).distances == ds
    assert max_code(n, DistanceSet(ds)).value == size


def test_antipodal_free_even_weight_length_8():
    # One word from each complementary pair of even-weight words avoids distance 8.
    words = [b for b in range(256) if b.bit_count() % 2 == 0 and b < (b ^ 0xFF)]
    code = Code(8, frozenset(Word(8, b) for b in words))
    assert len(code) == 64 and distance_set_of(code).distances == (2, 4, 6)
