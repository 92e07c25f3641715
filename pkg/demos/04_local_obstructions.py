"""Local obstructions: when a code cannot be realized by convex sets.

Every code sits inside the simplicial complex generated by its words.  For
each face sigma of that complex that is missing from the code, look at the
link of sigma restricted to the faces above it: if that link is not
contractible, sigma is a local obstruction and no arrangement of open
convex sets can realize the code.  The report below runs that check for
every missing face, using collapsibility as the contractibility
certificate and GF(2) homology as the refutation.
"""

from codecat import (f2_reduced_homology, format_code, is_collapsible, link,
                     local_obstruction_report, parse_code, simplicial_complex)

# A ten-word code on six neurons whose every missing face passes.
c0 = parse_code("{3456,123,145,256,45,56,1,2,3,0}")
print("code:", format_code(c0))
rep = local_obstruction_report(c0)
print(f"missing faces checked: {len(rep.entries)}")
print("locally good?", rep.locally_good, "| locally great?", rep.locally_great)
for e in rep.entries[:5]:
    print(f"  sigma={sorted(e.sigma)}: {e.verdict}"
          f" (link facets: {sorted(sorted(f) for f in e.link_facets)})")
print("  ...")
print()

# The hollow triangle fails at sigma = emptyset: the link is the whole
# complex, a circle, and H_1 betrays it.
hollow = parse_code("{12,23,13}")
rep2 = local_obstruction_report(hollow)
for e in rep2.entries:
    print(f"sigma={sorted(e.sigma) or '{}'}: {e.verdict}, betti={dict(e.betti)}")
print("locally good?", rep2.locally_good)
print()

# The raw ingredients are available on their own.
k = simplicial_complex(hollow)
print("complex facets:", sorted(sorted(f) for f in
                                (frozenset(i + 1 for i in range(k.n)
                                           if f >> i & 1)
                                 for f in k.facets)))
print("collapsible?", is_collapsible(k))
print("GF(2) reduced betti numbers:", f2_reduced_homology(k))
print("link of vertex 1:", sorted(
    sorted(i + 1 for i in range(k.n) if f >> i & 1)
    for f in link(k, [1]).facets))
