"""
Reduced word arithmetic
=======================

Parsing, reduction, products, inverses, conjugacy, and ball counts.
"""

from freegroups import (
    Word,
    are_conjugate,
    commutator,
    count_reduced_words,
    cyclically_reduce,
    format_word,
    iter_reduced_words,
    parse_word,
)

# two input syntaxes for the same word: letters (a..z, capitals for
# inverses, ^ for powers) and signed generator indices
u = parse_word("aab^-1")
v = parse_word("1 1 -2")
print("parsed:", format_word(u), "==", format_word(v), "->", u == v)

# multiplication reduces eagerly at the junction
w = parse_word("ab")
print("ab * b^-1a =", format_word(w * parse_word("Ba")))
print("ab * (ab)^-1 =", repr(format_word(w * ~w)), "(the empty word)")

# powers and inverses
print("(ab)^3 =", format_word(w**3))
print("(ab)^-2 =", format_word(w**-2))

# the commutator of the two generators
c = commutator(parse_word("a"), parse_word("b"))
print("[a, b] =", format_word(c))

# cyclic reduction peels conjugating letters off both ends
core, prefix = cyclically_reduce(parse_word("abaB"))
print("abaB has cyclic core", format_word(core.word), "and prefix", format_word(prefix))

# conjugacy is rotation of the cyclic core
print("ab ~ ba:", are_conjugate(parse_word("ab"), parse_word("ba")))
print("ab ~ ab^-1:", are_conjugate(parse_word("ab"), parse_word("aB")))

# balls in rank 2: 1 + sum of 4 * 3^(k-1)
for max_len in range(0, 9):
    assert count_reduced_words(2, max_len) == sum(
        1 for _ in iter_reduced_words(2, max_len)
    )
print("rank 2 ball sizes:", [count_reduced_words(2, k) for k in range(0, 9)])

# enumeration is deterministic: by length, then letter order
first = [format_word(w) for w in iter_reduced_words(2, 1)]
print("rank 2 ball of radius 1:", first)

# words are hashable values
assert len({Word([1, 2]), parse_word("ab"), parse_word("ba")}) == 2
print("Word('ab') and parse_word('ab') collapse in a set; ba stays separate")
