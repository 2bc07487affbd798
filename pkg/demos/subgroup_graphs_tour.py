"""
Subgroup graphs by folding
==========================

Wedge a loop per generator at a basepoint, fold until no two equally
labeled edges share an endpoint in the same direction, and the resulting
graph answers membership questions by walking.
"""

import random

from freegroups import build_subgroup_graph, parse_word


def gens(*texts):
    return [parse_word(t) for t in texts]


# the subgroup generated by a^2 and b
g = build_subgroup_graph(gens("aa", "b"), 2)
print("subgroup <a^2, b> of rank 2:")
print("  vertices:", g.num_vertices, " edges:", g.num_edges)
print("  subgroup rank:", g.subgroup_rank())
for text in ("aa", "aab", "a", "abA"):
    print(f"  contains {text}:", g.contains(parse_word(text)))

# even length words form an index 2 subgroup; its graph has 2 vertices
kernel = build_subgroup_graph(gens("aa", "bb", "ab"), 2)
print("\n<a^2, b^2, ab>: rank", kernel.subgroup_rank(), "(Nielsen-Schreier: 1 + 2(2-1) = 3)")
print("  contains ba:", kernel.contains(parse_word("ba")))
print("  contains abA:", kernel.contains(parse_word("abA")))

# generating everything folds down to the rose
rose = build_subgroup_graph(gens("ab", "a"), 2)
print("\n<ab, a> generates the whole group:", rose.generates_whole_group())

# folding is confluent: any merge order gives the same canonical graph
reference = build_subgroup_graph(gens("aab", "bba"), 2)
same = all(
    build_subgroup_graph(gens("aab", "bba"), 2, rng=random.Random(seed)) == reference
    for seed in range(10)
)
print("ten random fold orders, one graph:", same)

# DOT export for drawing
print("\nDOT for <a^2, b>:")
print(g.to_dot())
