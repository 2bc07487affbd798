"""
Primitivity by length descent
=============================

A word is primitive when some automorphism maps it to a generator.  The
test minimizes the cyclic length with one shortening move at a time; the
word is primitive exactly when the descent reaches length 1.
"""

from freegroups import (
    format_word,
    is_basis_pair_f2,
    is_primitive,
    letter_name,
    parse_word,
    primitive_density,
    primitive_orbit_oracle,
    whitehead_minimize,
)

# the full descent for (ab)^2 a: 5 -> 3 -> 2 -> 1
trace = whitehead_minimize(parse_word("ababa"), 2)
print("minimizing ababa:")
for aut, length in trace.steps:
    members = ", ".join(letter_name(x) for x in sorted(aut.members, key=abs))
    print(f"  multiplier {letter_name(aut.multiplier)}, members {{{members}}} -> length {length}")
print("terminal word:", format_word(trace.final.word))
print("ababa primitive:", is_primitive(parse_word("ababa"), 2))

# squares and power blocks never shrink: zero step traces
for text in ("aa", "aabb", "aabbbcc"):
    rank = 3 if "c" in text else 2
    tr = whitehead_minimize(parse_word(text), rank)
    print(f"{text}: steps = {len(tr.steps)}, primitive = {is_primitive(parse_word(text), rank)}")

# rank 2 bases via the commutator conjugacy criterion
pairs = [("a", "b"), ("a", "ba"), ("ab", "ba"), ("aB", "b")]
for a, b in pairs:
    print(f"({a}, {b}) basis pair:", is_basis_pair_f2(parse_word(a), parse_word(b)))

# an independent oracle: close the generators under all Whitehead moves
oracle = primitive_orbit_oracle(2, 4)
print("\nprimitives of length <= 4 in rank 2:", len(oracle))
agree = all(
    is_primitive(w, 2) == (w in oracle)
    for w in oracle
)
print("minimizer agrees on all of them:", agree)

# primitives thin out as words grow
print("\nlength  primitives  total  ratio")
for length, prims, total, ratio in primitive_density(2, 6):
    print(f"{length:>6}  {prims:>10}  {total:>5}  {ratio:.4f}")
