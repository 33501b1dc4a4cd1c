# # Realising a 3-cocycle by a crossed module
#
# Given a componentwise pointed 3-cocycle z3 of pi_0 with values in pi_1, the
# standard extension is a crossed module built from free-group words whose
# Postnikov invariant is represented by z3 again.

from xmodcoh.instances import parse
from xmodcoh.stdext import StandardExtension, axiom_sample_check, schreier_decompose

data = parse("bundled:c2_cocycles.json")
z3 = data.cocycles3["nontrivial"]
print("input z3:", z3.nonzero_values())

E = StandardExtension(z3)

# Words are tuples of (letter, +-1); the kernel of the projection to pi_0 is
# free on the Schreier generators z2(q, p).

w = E.z2(1, 1)
print("z2(1, 1) =", w)
print("Schreier decomposition of z2(1,1)^2:", schreier_decompose(E, w + w))

# The generator s0(1) acts on Z2(1, 1) by the rule that encodes z3.

print("s0(1) . Z2(1, 1) =", E.act(E.s0(1), E.Z2(1, 1)))

# ## Recovery and axioms

rec = E.recover_z3()
print("recovered:", rec.z3.nonzero_values(), " equal:", rec.equal)

report = axiom_sample_check(E, seed=0, count=1000)
print(f"{report.checked} random samples, failures: {len(report.failures)}")
