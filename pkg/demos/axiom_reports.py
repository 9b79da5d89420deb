"""Symbolic verification of the defining identities of each algebra.

check_axioms adjoins fresh indeterminates to the coefficient ring and
verifies every identity as a polynomial equation, so a PASS is a proof
over the ring, not a spot check at sampled points.
"""

from skeinalg import check_axioms, make_algebra
from skeinalg.algebra import AffineOp, ConwayAlgebraSpec, OpKind
from skeinalg.laurent import LaurentPoly

for name, k in [("classic3", None), ("homflypt", None),
                ("gen-conway", None), ("gen-homflypt", None),
                ("nonlinear", 3)]:
    alg = make_algebra(name, k)
    report = check_axioms(alg)
    print(report.render())
    print()

# A deliberately damaged instance, to show what failure looks like.
# Shifting the constant part of the circle operation breaks the
# interplay between the two operations and the unit sequence.
gc = make_algebra("gen-conway")
ops = dict(gc.ops)
circ = ops[OpKind.CIRC]
ops[OpKind.CIRC] = AffineOp(circ.alpha, circ.beta,
                            circ.gamma + LaurentPoly.const(gc.table, 1))
mutant = ConwayAlgebraSpec("shifted-circle", gc.table, ops, gc._unit_step)

report = check_axioms(mutant)
print(report.render())
print()
print("all_pass =", report.all_pass)
failed = [c.label for c in report.checks if not c.passed]
print("failed identities:", ", ".join(failed))
