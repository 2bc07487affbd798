"""Tests for subgroup graph folding, membership, rank, and confluence."""

import random

import pytest

from freegroups.stallings import SubgroupGraph, build_subgroup_graph
from freegroups.words import Word, parse_word


def words(*texts):
    return [parse_word(t) for t in texts]


def random_reduced(rng, rank, length):
    pool = [i for i in range(1, rank + 1)] + [-i for i in range(1, rank + 1)]
    letters = []
    while len(letters) < length:
        x = rng.choice(pool)
        if letters and x == -letters[-1]:
            continue
        letters.append(x)
    return Word(letters)


# --- basic shapes ---


def test_trivial_subgroup():
    g = build_subgroup_graph([], 2)
    assert g.num_vertices == 1
    assert g.num_edges == 0
    assert g.subgroup_rank() == 0
    assert g.contains(parse_word(""))
    assert not g.contains(parse_word("a"))
    assert not g.generates_whole_group()


def test_single_generator_loop():
    g = build_subgroup_graph(words("a"), 2)
    assert g.num_vertices == 1
    assert g.edges == ((0, 1, 0),)
    assert g.subgroup_rank() == 1
    assert not g.generates_whole_group()
    assert g.contains(parse_word("aaa"))
    assert g.contains(parse_word("A"))
    assert not g.contains(parse_word("b"))


def test_full_rose():
    g = build_subgroup_graph(words("a", "b"), 2)
    assert g.generates_whole_group()
    assert g.num_vertices == 1
    assert g.edges == ((0, 1, 0), (0, 2, 0))


def test_folding_collapses_to_rose():
    # a b and a generate everything
    g = build_subgroup_graph(words("ab", "a"), 2)
    assert g.generates_whole_group()


def test_square_and_letter():
    g = build_subgroup_graph(words("aa", "b"), 2)
    assert g.num_vertices == 2
    assert g.num_edges == 3
    assert g.subgroup_rank() == 2
    yes = ["", "aa", "b", "aab", "baa", "AA", "aabaa", "bAAb"]
    no = ["a", "A", "ab", "ba", "bab", "aba", "abA"]
    for t in yes:
        assert g.contains(parse_word(t)), t
    for t in no:
        assert not g.contains(parse_word(t)), t


def test_commutator_cycle():
    g = build_subgroup_graph(words("abAB"), 2)
    assert g.num_vertices == 4
    assert g.num_edges == 4
    assert g.subgroup_rank() == 1
    assert g.contains(parse_word("abAB"))
    assert g.contains(parse_word("abAB") ** 2)
    assert g.contains(parse_word("abAB") ** -1)
    assert not g.contains(parse_word("ab"))
    assert not g.contains(parse_word("baBA") * parse_word("ab"))


def test_conjugate_generator_keeps_hair():
    # the spur from the basepoint survives: reduced closed walks never
    # enter it except straight through the loop at its end
    g = build_subgroup_graph(words("abA"), 2)
    assert g.num_vertices == 2
    assert sorted(g.edges) == [(0, 1, 1), (1, 2, 1)]
    assert g.subgroup_rank() == 1
    assert g.contains(parse_word("abA"))
    assert g.contains(parse_word("abbA"))
    assert not g.contains(parse_word("b"))
    assert not g.contains(parse_word("a"))


def test_index_two_kernel():
    # even length words in rank 2: vertices split by parity
    g = build_subgroup_graph(words("aa", "bb", "ab"), 2)
    assert g.num_vertices == 2
    assert g.num_edges == 4
    assert g.subgroup_rank() == 3
    rng = random.Random(50)
    for _ in range(300):
        w = random_reduced(rng, 2, rng.randrange(0, 9))
        assert g.contains(w) == (len(w) % 2 == 0), w


def test_rank3_generators():
    g = build_subgroup_graph(words("ab", "c"), 3)
    assert g.subgroup_rank() == 2
    assert g.contains(parse_word("abc"))
    assert g.contains(parse_word("cab"))
    assert not g.contains(parse_word("a"))
    assert not g.generates_whole_group()
    assert build_subgroup_graph(words("ab", "b", "ca"), 3).generates_whole_group()


# --- membership closure under products ---


def test_contains_random_products():
    rng = random.Random(51)
    gen_sets = [
        words("aa", "b"),
        words("abAB"),
        words("ab", "ba"),
        words("aab", "bba", "c"),
    ]
    ranks = [2, 2, 2, 3]
    for gens, rank in zip(gen_sets, ranks):
        g = build_subgroup_graph(gens, rank)
        for _ in range(200):
            acc = Word([])
            for _ in range(rng.randrange(0, 6)):
                f = rng.choice(gens)
                acc = acc * (f if rng.random() < 0.5 else ~f)
            assert g.contains(acc), (gens, acc)


def test_membership_needs_closed_walk_at_base():
    # cyclic permutation of a member usually is not a member
    g = build_subgroup_graph(words("aab"), 2)
    assert g.contains(parse_word("aab"))
    assert not g.contains(parse_word("aba"))
    assert not g.contains(parse_word("baa"))


# --- confluence: merge order does not matter ---


def test_fold_order_confluence():
    rng = random.Random(52)
    for trial in range(60):
        rank = rng.choice([2, 3])
        gens = [
            random_reduced(rng, rank, rng.randrange(1, 8))
            for _ in range(rng.randrange(1, 5))
        ]
        reference = build_subgroup_graph(gens, rank)
        for seed in range(4):
            shuffled = build_subgroup_graph(gens, rank, rng=random.Random(seed))
            assert shuffled == reference, (gens, seed)
            assert hash(shuffled) == hash(reference)


def test_generator_order_irrelevant():
    a = build_subgroup_graph(words("aa", "bb", "ab"), 2)
    b = build_subgroup_graph(words("ab", "aa", "bb"), 2)
    assert a == b


def test_inverse_generators_same_graph():
    a = build_subgroup_graph(words("ab", "cb"), 3)
    b = build_subgroup_graph([~w for w in words("ab", "cb")], 3)
    assert a == b


# --- serialization ---


def test_dot_output():
    g = build_subgroup_graph(words("aa", "b"), 2)
    dot = g.to_dot()
    assert dot.startswith("digraph subgroup {")
    assert "0 [shape=doublecircle];" in dot
    assert '[label="e1"]' in dot
    assert '[label="e2"]' in dot
    assert dot.endswith("}\n")
    assert g.to_dot() == dot


def test_json_shape():
    g = build_subgroup_graph(words("aa", "b"), 2)
    d = g.to_json_dict()
    assert d["rank"] == 2
    assert d["num_vertices"] == 2
    assert d["subgroup_rank"] == 2
    assert sorted(d["edges"]) == [[0, 0, 2], [0, 1, 1], [1, 0, 1]]
    for u, v, label in d["edges"]:
        assert 0 <= u < 2 and 0 <= v < 2 and label in (1, 2)


# --- validation ---


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        build_subgroup_graph(words("abc"), 2)
    with pytest.raises(ValueError):
        build_subgroup_graph([], 0)
    with pytest.raises(TypeError):
        build_subgroup_graph(["ab"], 2)
    g = build_subgroup_graph(words("ab"), 2)
    with pytest.raises(ValueError):
        g.contains(parse_word("c"))
    with pytest.raises(ValueError):
        SubgroupGraph(2, 1, [(0, 3, 0)])
    with pytest.raises(ValueError):
        SubgroupGraph(2, 1, [(0, 1, 5)])


def test_empty_generators_skipped():
    g = build_subgroup_graph([Word([]), parse_word("a")], 2)
    assert g.edges == ((0, 1, 0),)
