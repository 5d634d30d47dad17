import heapq
import itertools

import pytest

from dissoc.tree import Tree, canonical_code, max_degree, path, serialize_tree
from dissoc.treegen import (
    GenConfig,
    GeneratorCeilingError,
    SplitMix64,
    enumerate_subcubic,
    enumerate_trees,
    random_subcubic,
    random_tree,
)


def prufer_decode(seq, n):
    deg = [1] * n
    for a in seq:
        deg[a] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        deg[a] -= 1
        if deg[a] == 1:
            heapq.heappush(leaves, a)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree.from_edges(n, edges)


def _partitions(total, parts, cap):
    """Non-increasing tuples of length ``parts`` with entries <= cap summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def prufer_classes(n, cap=None):
    """Isomorphism classes of trees via Prüfer sequences, deduplicated by canonical code.

    Every class has a labeling whose degrees are non-increasing in the label, and the
    degree of v is one more than its multiplicity in the sequence, so it suffices to
    decode the sequences whose label multiplicities are non-increasing.
    """
    if n <= 2:
        return {canonical_code(path(n))}
    mult_cap = n - 2 if cap is None else cap - 1
    found = set()
    for counts in _partitions(n - 2, n, mult_cap):
        multiset = [v for v, c in enumerate(counts) for _ in range(c)]
        for seq in set(itertools.permutations(multiset)):
            found.add(canonical_code(prufer_decode(seq, n)))
    return found


def test_prufer_decode_round_trip_small():
    # every labeled tree on 5 vertices appears exactly once: 5^3 of them
    seen = {prufer_decode(s, 5) for s in itertools.product(range(5), repeat=3)}
    assert len(seen) == 125


def test_reduced_prufer_matches_full_enumeration():
    for n in range(3, 8):
        full = {canonical_code(prufer_decode(s, n)) for s in itertools.product(range(n), repeat=n - 2)}
        assert prufer_classes(n) == full


@pytest.mark.parametrize("n", range(1, 10))
@pytest.mark.parametrize("cap", [3, None])
def test_generator_matches_prufer(n, cap):
    gen = [canonical_code(t) for t in enumerate_trees(n, cap)]
    assert len(gen) == len(set(gen))
    assert set(gen) == prufer_classes(n, cap)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 2), (6, 4)])
def test_subcubic_counts(n, expected):
    assert len(list(enumerate_subcubic(n))) == expected


def test_known_class_counts():
    assert [len(list(enumerate_subcubic(n))) for n in range(1, 15)] == [1, 1, 1, 2, 2, 4, 6, 11, 18, 37, 66, 135, 265, 552]
    assert [len(list(enumerate_trees(n, None))) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


def test_order_five_excludes_degree_four_star():
    codes = {canonical_code(t) for t in enumerate_subcubic(5)}
    assert codes == {canonical_code(path(5)), canonical_code(Tree.from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]))}


def test_enumeration_deterministic_and_valid():
    a = [serialize_tree(t) for t in enumerate_subcubic(10)]
    b = [serialize_tree(t) for t in enumerate_subcubic(10)]
    assert a == b
    for t in enumerate_subcubic(10):
        assert t.n == 10 and max_degree(t) <= 3


def test_ceiling():
    with pytest.raises(GeneratorCeilingError):
        list(enumerate_subcubic(19))
    with pytest.raises(GeneratorCeilingError):
        GenConfig(30)
    assert len(list(GenConfig(6).generate())) == 4
    assert len(list(GenConfig(30, mode="random", seed=1).generate())) == 1


def test_splitmix64_reference_vector():
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_random_examples():
    assert random_subcubic(1, 99) == path(1)
    assert random_subcubic(2, 99) == path(2)
    t = random_subcubic(30, 42)
    assert t.n == 30 and max_degree(t) <= 3


def test_random_reproducible():
    assert random_subcubic(40, 7) == random_subcubic(40, 7)
    assert random_subcubic(40, 7) != random_subcubic(40, 8)
    # frozen so that ports of the generator can be checked against it
    assert serialize_tree(random_subcubic(8, 42)) == FROZEN_8_42


FROZEN_8_42 = "8\n0 1\n0 3\n0 4\n1 2\n1 7\n3 5\n3 6\n"


def test_random_subcubic_many():
    for seed in range(300):
        t = random_subcubic(1 + seed % 50, seed)
        assert max_degree(t) <= 3


def test_random_tree_uncapped_can_exceed_three():
    assert any(max_degree(random_tree(20, s, None)) > 3 for s in range(20))
