"""
Torus-fixed lines, conics, and twisted cubics
=============================================

"""

from delpezzo5 import (build_model, fixed_curves, format_ideal_text,
                       hilbert_polynomial, tangent_dimension)

model = build_model()

# degree 1: a brute search over coordinate pencils finds exactly three
# lines on the threefold, each a coordinate linear subspace
print("== fixed lines ==")
for rec in fixed_curves(model, 1):
    hp = hilbert_polynomial(rec.ideal)
    tangent = tangent_dimension(rec.ideal, within=model.threefold)
    print(f"{rec.label}: vertex weight {rec.details['vertex']},"
          f" HP = {hp}, tangent dimension {tangent}")
    print(format_ideal_text(model.orbit, rec.ideal.groebner().elements))

# degree 2: one conic per coordinate 4-space of the ambient 5-space,
# obtained by cutting and saturating
print("== fixed conics ==")
for rec in fixed_curves(model, 2):
    hp = hilbert_polynomial(rec.ideal)
    tangent = tangent_dimension(rec.ideal, within=model.threefold)
    print(f"omitting weight {rec.details['omitted_weight']:>2}:"
          f" HP = {hp}, tangent dimension {tangent}")

# degree 3: the locus of 2-planes meeting a fixed coordinate line is a
# Schubert cycle; cutting it by the three hyperplanes leaves a twisted
# cubic (an honest one or a degenerate configuration) per coordinate line
print("== fixed cubics ==")
for rec in fixed_curves(model, 3):
    hp = hilbert_polynomial(rec.ideal)
    tangent = tangent_dimension(rec.ideal, within=model.threefold)
    print(f"vertex pair {rec.details['vertex_pair']}: {rec.label:10s}"
          f" HP = {hp}, tangent dimension {tangent}")
