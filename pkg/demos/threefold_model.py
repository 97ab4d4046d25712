"""
The quintic del Pezzo threefold in two coordinate systems
=========================================================

"""

from delpezzo5 import (build_model, coordinate_change_check, format_ideal_text,
                       hilbert_function, hilbert_polynomial,
                       invariant_subspace_check)

# the model carries both presentations: the Grassmannian of 2-planes in a
# 5-space cut by three hyperplanes, and the orbit-coordinate quadrics in
# a ring whose seven variables carry the torus weights 6, 4, ..., -6
model = build_model()
print("orbit-coordinate presentation of the threefold:")
print(format_ideal_text(model.orbit, model.threefold.gens))

# the linear coordinate change must kill the three hyperplane forms and
# carry the five quadratic relations onto the five quadrics, one each
report = coordinate_change_check(model)
print("hyperplane forms map to zero:", report["hyperplanes_vanish"])
print("relations pair off with the quadrics:", report["bijective"])
for relation_index, quadric_index, factor in report["quadric_matches"]:
    print(f"    relation {relation_index} -> quadric {quadric_index}"
          f"  (scalar {factor})")
print("images generate the same ideal:", report["ideal_equal"])

# the three hyperplanes are not arbitrary: their common wedge 7-space is
# the span of the lowering-operator orbit of the lowest weight vector
chain = invariant_subspace_check(model)
print("lowering chain length:", chain["chain_length"],
      " span dimension:", chain["dimension"],
      " matches the pinned basis:", chain["matches"])

# global numerology: a degree-5 threefold whose hyperplane sections are
# anticanonical, with 7 independent coordinates in degree 1
hp = hilbert_polynomial(model.threefold)
print("Hilbert polynomial:", hp)
print("degree:", hp.variety_degree())
print("h^0 of O(1):", hilbert_function(model.threefold, 1))
