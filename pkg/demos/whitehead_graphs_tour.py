"""
Whitehead graphs and cut vertices
=================================

The graph on the 2n letters records which letters sit next to which in a
cyclic word, and its shape constrains primitivity: a cyclically reduced
primitive always has a separable graph.
"""

from freegroups import build_whitehead_graph, letter_name, parse_word

# one edge per position, including the wrap around pair
g = build_whitehead_graph(parse_word("abab"), 2)
print("word abab, rank 2")
print("edge count:", g.edge_count, "(equals the word length)")
for u, v in g.edges:
    print(" ", letter_name(u), "--", letter_name(v))

# degrees count loops twice
print("degrees:", {letter_name(x): g.degree(x) for x in g.vertices})

# ababa: connected with a cut vertex at e1
verdict = build_whitehead_graph(parse_word("ababa"), 2).find_cut_vertex()
print("\nababa verdict:", verdict)
print("separable:", verdict.separable, "cut vertex:", letter_name(verdict.cut_vertex))

# the commutator a b a^-1 b^-1 gives a 4-cycle: no cut vertex anywhere
verdict = build_whitehead_graph(parse_word("abAB"), 2).find_cut_vertex()
print("abAB verdict: connected =", verdict.connected, ", separable =", verdict.separable)

# a word that misses letters leaves isolated vertices, so: disconnected
verdict = build_whitehead_graph(parse_word("ab"), 3).find_cut_vertex()
print("ab at rank 3: connected =", verdict.connected)

# DOT export, loops and parallel edges included
print("\nDOT for a^2b^2:")
print(build_whitehead_graph(parse_word("aabb"), 2).to_dot())
