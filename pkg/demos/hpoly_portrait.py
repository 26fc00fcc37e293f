"""
Local singularity portraits from one base point
===============================================

Fix the closed orbit of -+++- and compute the H-polynomial of every
orbit closure through it.  H = 1 means the point is smooth (more
precisely: the tangent cone is a full linear space); H = 1 + q turns
out to happen, and only at crossing clans.
"""

from clanpoly.clans import enumerate_clans, parse_clan, closure_leq
from clanpoly import grobner

def render(h):
    names = ["1", "q"] + ["q^%d" % k for k in range(2, len(h))]
    return " + ".join(("%d*%s" % (c, m) if c > 1 else m)
                      for c, m in zip(h, names) if c) or "0"


base = parse_clan("-+++-", 3, 2)
rows = []
for g in sorted(enumerate_clans(3, 2), key=str):
    if not closure_leq(base, g):
        continue
    h = grobner.h_polynomial(g, base)
    rows.append((g.dimension(), str(g), g.is_noncrossing(), h))

print("orbit closures through the base point of %s:" % base)
for dim, s, nc, h in sorted(rows):
    shape = "non-crossing" if nc else "crossing    "
    print("  dim %2d  %-6s %s  H = %s" % (dim, s, shape, render(h)))

hits = [s for _, s, _, h in rows if h == [1, 1]]
print("\nclans with H = 1 + q at this point:", ", ".join(hits))
