"""
The 11+- orbit closure, end to end
==================================

One clan, followed from the combinatorics through the ideal, its
Groebner degeneration, and the graded invariants that tie back to the
polynomial family.
"""

from clanpoly.clans import parse_clan
from clanpoly import grobner, ideals, upsilon

g = parse_clan("11+-", 2, 2)
print("clan %s: length %d, dimension %d, non-crossing: %s"
      % (g, g.length(), g.dimension(), g.is_noncrossing()))

# the rank conditions produce 13 generators in the 4x4 matrix entries
pres = ideals.korbit_ideal(g)
print("\n%d generators:" % len(pres.generators))
for line in pres.generator_lines():
    print("  ", line)

# under the bespoke order the generators are already a Groebner basis
order = grobner.pq_lex_order(g.n, g.p)
print("\nalready a Groebner basis:",
      grobner.is_groebner_already(pres.generators, order))

init = grobner.initial_ideal(pres.generators, order, assume_groebner=True)
print("initial ideal:",
      ", ".join("*".join(t) for t in init.generator_names()))

# squarefree, so the degeneration splits into coordinate subspaces
print("\ncomponents (one per minimal vertex cover):")
for cover in init.minimal_primes():
    print("  ", ", ".join(cover))

# the multidegree of the degeneration equals the clan's polynomial
md = grobner.multidegree_report(init, g.n)["poly"]
print("\nmultidegree matches the cohomology flavor:",
      md == upsilon.specialize(g, "H_XY"))
print("K-polynomial matches the K flavor:",
      grobner.k_polynomial(init, g.n) == upsilon.specialize(g, "K_XY"))

# local data: the H-polynomial at each base point below the clan
from clanpoly.clans import enumerate_clans, closure_leq

print("\nH-polynomials at the points below %s:" % g)
for b in sorted(enumerate_clans(2, 2), key=str):
    if not closure_leq(b, g):
        continue
    h = grobner.h_polynomial(g, b)
    print("  at %s: H = %s  (multiplicity %d)"
          % (b, " + ".join("%sq^%d" % ("" if c == 1 else c, k)
                           for k, c in enumerate(h) if c)
             .replace("q^0", "1").replace("q^1", "q"), sum(h)))
