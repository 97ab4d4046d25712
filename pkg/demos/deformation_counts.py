"""
Counting first-order deformations
=================================

"""

from delpezzo5 import (Ideal, RingContext, build_model, graded_hom_dimension,
                       parse_polynomial, rnc_check, tangent_dimension)

# the tangent space to the Hilbert scheme at [C] is Hom(I_C, S/I_C) in
# degree zero; two textbook sanity checks first
P3 = RingContext(("x", "y", "z", "w"), weights=(1, 1, 1, 1))


def ideal(*strings):
    return Ideal(P3, [parse_polynomial(s, P3) for s in strings])


line = ideal("x", "y")
twisted_cubic = ideal("x*z - y^2", "y*w - z^2", "x*w - y*z")
print("line in 3-space:", tangent_dimension(line))
print("twisted cubic:", tangent_dimension(twisted_cubic))

# the relative count constrains deformations to stay inside a fixed
# hypersurface: a line moves in a 2-parameter family on a smooth quadric
quadric = ideal("x*w - y*z")
print("line inside the quadric:", tangent_dimension(line, within=quadric))

# twists shift the grading; Hom(I, (S/I)(k)) in degree 0 equals the
# degree-k piece of the normal module
for twist in (-1, 0, 1):
    dim = graded_hom_dimension(line, line, twist=twist)
    print(f"normal module of the line in degree {twist}:",
          dim)

# the same machinery drives the headline count: the rational normal
# quartic moves in an 8-dimensional family inside the threefold, even
# though its ambient deformation space is much bigger
model = build_model()
report = rnc_check(model)
print("rational normal quartic, ambient:", report["tangent_ambient"])
print("rational normal quartic, inside the threefold:",
      report["tangent_relative"])
