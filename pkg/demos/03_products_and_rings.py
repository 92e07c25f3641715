"""Products, coproducts, intersection completeness, and the ring view.

The category of codes has products (pairwise unions on disjoint neuron
sets, taken over all pairs) and coproducts (disjoint unions tagged by an
extra neuron each).  Each code also carries a ring of GF(2)-valued
functions on its words, and morphisms act on those rings by pullback --
contravariantly.
"""

from codecat import (Morphism, compose, compose_monomial_maps, coproduct,
                     format_code, indicator, is_intersection_complete,
                     is_max_intersection_complete, morphism_to_monomial_map,
                     parse_code, product, trunk_of)

a, b = parse_code("{12,1,2,0}"), parse_code("{12,1,0}")
print("a =", format_code(a), "  b =", format_code(b))
print("a x b  =", format_code(product(a, b)))
print("a + b  =", format_code(coproduct(a, b, with_empty=True)))
print()

# Intersection-complete codes (closed under pairwise intersection of
# words) are exactly the ones whose every trunk has a unique minimal word.
c5, d5 = parse_code("{12,23,1,3,0}"), parse_code("{12,34,1,3,0}")
print(format_code(d5), "intersection complete?", is_intersection_complete(d5))
print(format_code(c5), "intersection complete?", is_intersection_complete(c5))

# The weaker test only intersects maximal words.
print(format_code(d5), "max-intersection complete?",
      is_max_intersection_complete(d5))
print()

# Ring side.  x_i is the i-th coordinate function; the indicator of a word
# is the product of coordinates and their complements.
cw = parse_code("{12,23,1,2,0}")
m = Morphism(cw, tuple(trunk_of(cw, s) for s in ([], [2], [1], [1, 2])))
phi = morphism_to_monomial_map(m)
print("the pullback sends coordinates of the image to monomials:")
for j, sigma in enumerate(phi.assignment, start=1):
    if sigma is None:
        print(f"  y_{j} -> 0")
    elif not sigma:
        print(f"  y_{j} -> 1")
    else:
        print(f"  y_{j} -> x_{''.join(map(str, sorted(sigma)))}")
print()

# Pulling back the indicator of f(c) gives a function supported on the
# fiber over f(c); in particular it is 1 at c.
c = frozenset({2, 3})
back = phi.indicator_image(m.apply(c))
print(f"pullback of 1_f({sorted(c)}) evaluated at {sorted(c)}:",
      back.value_at(c))
members = lambda mask: [i + 1 for i in range(cw.n) if mask >> i & 1]
print("its full support:", sorted(members(w) for w in back.support))
print()

# Contravariance: the pullback of a composite is the composite of
# pullbacks, in the opposite order.
img = m.image()
g = Morphism(img, tuple(trunk_of(img, s) for s in ([1], [1, 2])))
lhs = morphism_to_monomial_map(compose(g, m))
rhs = compose_monomial_maps(phi, morphism_to_monomial_map(g))
print("pullback(g after m) == pullback(m) after pullback(g)?", lhs == rhs)

# Indicators add up to the constant 1 on any code.
total = None
for w in cw.words:
    total = indicator(cw, w) if total is None else total + indicator(cw, w)
print("sum of all indicators has full support:", total.support == cw.mask_set)
