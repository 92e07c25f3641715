"""Morphisms, their normal form, and code reduction.

A morphism between codes is any map under which preimages of trunks are
trunks.  Equivalently -- and this is the normal form the package leans on
everywhere -- pick an ordered tuple of trunks (T_1, ..., T_m) of the domain
and send each word c to {j : c lies in T_j}.
"""

from codecat import (ExplicitMap, Morphism, canonical_form, compose,
                     decompose, format_code, is_isomorphic, is_morphism,
                     minimum_neuron_number, parse_code, redundant_neurons,
                     reduce_code, trunk_of)

cw = parse_code("{12,23,1,2,0}")
print("domain:", format_code(cw))

# Four trunks define a morphism onto a code with four neurons.  The first
# trunk is Tk(emptyset) = the whole code, so neuron 1 is on in every image
# word.
m = Morphism(cw, tuple(trunk_of(cw, s) for s in ([], [2], [1], [1, 2])))
for w in sorted(cw.words, key=sorted):
    print(f"  {sorted(w) or 0} -> {sorted(m.apply(w)) or 0}")
print("image:", format_code(m.image()))
print()

# Maps given word-by-word can be checked and, when they pass, decomposed
# back into trunks.
c5, d5 = parse_code("{12,23,1,3,0}"), parse_code("{12,34,1,3,0}")
images = {frozenset({1, 2}): {1, 2}, frozenset({2, 3}): {3, 4},
          frozenset({1}): {1}, frozenset({3}): {3}, frozenset(): set()}
f = ExplicitMap.from_function(c5, d5, lambda w: images[w])
print("f: {12,23,1,3,0} -> {12,34,1,3,0} word by word")
print("is f a morphism?", is_morphism(f))
g = ExplicitMap.from_function(d5, c5, lambda w: next(
    k for k, v in images.items() if frozenset(v) == w))
print("is its inverse?  ", is_morphism(g), " (a bijection, but not an iso)")
print()

print("trunks recovered from f:")
for j, t in enumerate(decompose(f).trunks, start=1):
    print(f"  neuron {j} pulls back to generator",
          sorted(t.generator) if t.generator is not None else "none")
print()

# Reduction strips trivial neurons (never/always on) and redundant ones
# (same trunk as some other subset), leaving an isomorphic code on the
# fewest possible neurons.
r = parse_code("{123,1,2,0}")
print("code with a redundant neuron:", format_code(r))
print("redundancies:", [(n, sorted(s)) for n, s in redundant_neurons(r)])
res = reduce_code(r)
print("reduced:", format_code(res.reduced),
      "| minimum neurons:", minimum_neuron_number(r))
print()

# Canonical forms decide isomorphism outright.
a, b = parse_code("{12,23,1,3,0}"), parse_code("{13,23,2,1,0}")
print(format_code(a), "~", format_code(b), "?", is_isomorphic(a, b))
print("shared canonical form:", format_code(canonical_form(a).code))

# Morphisms compose (in trunk normal form again).
h = compose(m, decompose(ExplicitMap.from_function(
    cw, cw, lambda w: w)))  # identity then m
print()
print("composing with the identity leaves the image alone:",
      format_code(h.image()))
