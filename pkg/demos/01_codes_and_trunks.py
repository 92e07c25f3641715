"""Codes and their trunks.

A combinatorial code is a set of subsets ("codewords") of neurons 1..n.
The trunk of a subset sigma is the set of codewords containing sigma;
trunks are the basic open questions one can ask of a code ("which words
switch neuron 2 on together with everything in sigma?").
"""

from codecat import (all_trunks, format_code, irreducible_trunks, is_trunk,
                     parse_code, simple_trunks, trunk_of)

# Codes parse from a compact literal: digits are neurons, "0" is the empty
# word.  JSON lists work too, and are required once neurons pass 9.
c = parse_code("{12,23,1,3,0}")
print("the code:", format_code(c))
print("as JSON: ", format_code(c, "json"))
print("words:   ", sorted(sorted(w) for w in c.words))
print()

# The simple trunks ask about one neuron at a time.
for neuron, trunk in simple_trunks(c):
    print(f"words containing neuron {neuron}:",
          sorted(sorted(w) for w in trunk.members))
print()

# A trunk of a larger sigma.
t12 = trunk_of(c, [1, 2])
print("words containing both 1 and 2:", sorted(sorted(w) for w in t12.members))
print()

# Arbitrary subsets of the code usually are not trunks.
print("is {12, 23} a trunk?", is_trunk(c, [{1, 2}, {2, 3}]))
print("is {12, 3} a trunk? ", is_trunk(c, [{1, 2}, {3}]))
print()

# The full trunk family is closed under intersection; the irreducible
# trunks are the ones every other trunk is an intersection of.
family = all_trunks(c)
print(f"the code has {len(family)} trunks in all:")
for trunk in family:
    gen = "none" if trunk.generator is None else sorted(trunk.generator)
    print(f"  generator {gen}: {sorted(sorted(w) for w in trunk.members)}")
print()
print("irreducible trunk generators:",
      [sorted(t.generator) for t in irreducible_trunks(c)])
