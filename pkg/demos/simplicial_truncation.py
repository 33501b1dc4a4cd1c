# # Simplicial groups and their 1-truncation
#
# Cosk1 turns a crossed module into a 2-truncated simplicial group.  Its Moore
# complex recovers mu, and the analysed cochain complex has the same low
# degree cohomology as the crossed module.

from xmodcoh.cmcohom import cm_cohomology
from xmodcoh.crossed import homotopy
from xmodcoh.instances import coefficient_module, parse
from xmodcoh.simplicial import AnComplex, cosk1, homotopy01, moore, truncate1, unit_cocycle_maps, validate_tsg

V = parse("bundled:c4_example.json").crossed_modules["V"]
G = validate_tsg(cosk1(V))
print("level orders:", [lv.order for lv in G.levels])

md = moore(G)
print("Moore complex orders:", md.N0.order, md.N1.order, md.N2.order)
print("boundary N1 -> N0:", md.boundary1)

h = homotopy01(G)
print("pi_0 order", h.pi0.order, " pi_1 =", h.pi1)

T = truncate1(G)
print("truncation gives back mu:", list(T.mu) == list(V.mu))

# ## Analysed cohomology against the crossed-module complex

M = coefficient_module("Z/4", h.pi0)
an = AnComplex(G, M)
for n in range(3):
    print(f"H^{n}_an = {an.cohomology(n).H}")
print("H^2(V, Z/4) =", cm_cohomology(V, coefficient_module("Z/4", homotopy(V).pi0), 2).H)

u = unit_cocycle_maps(G, M)
print("unit maps bijective:", u.u1_bijective and u.u2_bijective, " cohomology isomorphic:", u.cohomology2)

# ## A bundled simplicial group that is not a coskeleton

N = parse("bundled:tsg_examples.json").tsg["nontrivial_n2"]
print("nontrivial_n2 Moore orders:", [x.order for x in (moore(N).N0, moore(N).N1, moore(N).N2)])
