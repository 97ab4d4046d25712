"""Catalog of printed data for the quintic del Pezzo threefold census.

Defining ideals of the threefold in orbit and Pluecker coordinates, the
coordinate change between them, the lowering-operator action, and the
expected ideals of every torus-fixed curve of degree 1 through 4.  The
generator strings use the polyring text syntax and are parsed by the
scenario layer; nothing here is computed, these are the values the
computations must reproduce.
"""
from __future__ import annotations

# ---------------------------------------------------------------------------
# coordinate systems

# orbit coordinates: coefficients of a binary sextic, indexed by torus weight
ORBIT_VARIABLES = ("a6", "a4", "a2", "a0", "am2", "am4", "am6")
ORBIT_WEIGHTS = (6, 4, 2, 0, -2, -4, -6)

# ambient 5-space basis indexed by torus weight (a binary quartic's worth)
SPACE_WEIGHTS = (4, 2, 0, -2, -4)

def _pname(i: int, j: int) -> str:
    def half(k: int) -> str:
        return f"m{-k}" if k < 0 else str(k)
    return f"p{half(i)}{half(j)}"

# Pluecker coordinates p_ij, one per ordered pair i > j of SPACE_WEIGHTS
PLUCKER_PAIRS = tuple(
    (SPACE_WEIGHTS[s], SPACE_WEIGHTS[t])
    for s in range(len(SPACE_WEIGHTS))
    for t in range(s + 1, len(SPACE_WEIGHTS))
)
PLUCKER_VARIABLES = tuple(_pname(i, j) for i, j in PLUCKER_PAIRS)
PLUCKER_WEIGHTS = tuple(i + j for i, j in PLUCKER_PAIRS)

# the three hyperplanes cutting the threefold out of the Grassmannian
PLUCKER_LINEAR_FORMS = (
    "3*p20 - p4m2",
    "2*p2m2 - p4m4",
    "3*p0m2 - p2m4",
)

# linear substitution carrying Pluecker coordinates into orbit coordinates
COORDINATE_CHANGE = {
    "p42": "a6",
    "p40": "2*a4",
    "p20": "a2",
    "p4m2": "3*a2",
    "p2m2": "2*a0",
    "p4m4": "4*a0",
    "p0m2": "am2",
    "p2m4": "3*am2",
    "p0m4": "2*am4",
    "pm2m4": "am6",
}

# the five orbit-coordinate quadrics of the threefold
QUINTIC_THREEFOLD_GENS = (
    "a6*am2 - 4*a4*a0 + 3*a2^2",
    "a6*am4 - 3*a4*am2 + 2*a2*a0",
    "a6*am6 - 9*a2*am2 + 8*a0^2",
    "a4*am6 - 3*a2*am4 + 2*a0*am2",
    "a2*am6 - 4*a0*am4 + 3*am2^2",
)

# lowering operator on the weight-graded basis: e_k -> coeff * e_{k+2}
LOWERING_ACTION = {-4: (1, -2), -2: (2, 0), 0: (3, 2), 2: (4, 4)}

# the invariant 7-space inside the wedge square, one (pair -> coeff) map
# per basis vector, in decreasing weight order
INVARIANT_WEDGE_BASIS = (
    {(4, 2): 1},
    {(4, 0): 1},
    {(2, 0): 1, (4, -2): 3},
    {(2, -2): 1, (4, -4): 2},
    {(0, -2): 1, (2, -4): 3},
    {(0, -4): 1},
    {(-2, -4): 1},
)

# ---------------------------------------------------------------------------
# fixed curves, degree 1: the three lines, keyed by their usual names

LINE_GENS = {
    "l0": ("a6", "a2", "a0", "am2", "am6"),
    "l1": ("a2", "a0", "am2", "am4", "am6"),
    "l2": ("am2", "a0", "a2", "a4", "a6"),
}

# ---------------------------------------------------------------------------
# fixed conics: one per omitted weight, in decreasing-weight order

CONIC_ROWS = (
    (4, ("a6", "a4", "a2", "a0", "am2^2")),
    (2, ("a6", "a2", "a0", "am2", "a4*am6")),
    (0, ("a4", "a2", "8*a0^2 + a6*am6", "am2", "am4")),
    (-2, ("a6*am4", "a2", "a0", "am2", "am6")),
    (-4, ("a2^2", "a0", "am2", "am4", "am6")),
)

# ---------------------------------------------------------------------------
# fixed twisted cubics: vertex-line index pair, expected ideal, label

CUBIC_ROWS = (
    ((2, -2), ("am4", "a0", "a4", "3*am2^2 + a2*am6", "9*a2*am2 - a6*am6",
               "3*a2^2 + a6*am2"), "C3"),
    ((2, -4), ("am2", "a2", "a4", "a0*am4", "a6*am4", "8*a0^2 + a6*am6"),
     "l2+C2"),
    ((4, -2), ("am4", "am2", "a2", "a4*am6", "a4*a0", "8*a0^2 + a6*am6"),
     "l1+C2"),
    ((4, -4), ("am2", "a0", "a2", "a4*am6", "a6*am6", "a6*am4"),
     "l0+l1+l2"),
    ((0, -4), ("a0", "a2", "a6", "a4*am6", "a4*am2", "am2^2"), "l0+2l2"),
    ((4, 0), ("am6", "am2", "a0", "a2*am4", "a6*am4", "a2^2"), "l0+2l1"),
    ((0, -2), ("am2", "a0", "a6", "a2*am6", "a2^2", "3*a2*am4 - a4*am6"),
     "2l0+l2"),
    ((2, 0), ("am6", "a0", "a2", "am2^2", "a6*am2", "3*a4*am2 - a6*am4"),
     "2l0+l1"),
    ((-2, -4), ("a2", "a4", "a6", "a0*am2", "a0^2", "3*am2^2 - 4*a0*am4"),
     "3l2"),
    ((4, 2), ("am6", "am4", "am2", "a0^2", "a2*a0", "3*a2^2 - 4*a4*a0"),
     "3l1"),
)

# ---------------------------------------------------------------------------
# fixed reducible quartics: expected ideal and configuration label;
# one representative per mirror pair (the involution a_j <-> a_{-j}),
# except row 2 which is its own mirror

QUARTIC_ROWS = (
    (("a0", "a4", "am2*am4", "a2*am4", "a6*am4", "3*am2^2 + a2*am6",
      "9*a2*am2 - a6*am6", "3*a2^2 + a6*am2"), "l2+C3"),
    (("am2", "a2", "a4*am6", "a0*am4", "a4*am4", "a6*am4",
      "8*a0^2 + a6*am6", "a4*a0"), "l1+l2+C2"),
    (("am2", "a2", "a4*am6", "a0*am4", "a6*am4", "8*a0^2 + a6*am6",
      "a4*a0", "a6*a4"), "l0+l2+C2"),
    (("a2", "a4", "a0*am4", "a6*am4", "am2^2", "a0*am2", "a6*am2",
      "8*a0^2 + a6*am6"), "2l2+C2"),
    (("a0", "a2", "a4*am6", "a6*am6", "a6*am4", "am2^2", "a4*am2",
      "a6*am2"), "l0+l1+2l2"),
    (("a0", "a2", "am2*am6", "a4*am6", "a6*am6", "am2^2",
      "3*a4*am2 - a6*am4", "a6*am2"), "2l0+l1+l2"),
    (("am2", "a4", "am4^2", "4*a0*am4 - a2*am6", "a2*am4",
      "8*a0^2 + a6*am6", "2*a2*a0 + a6*am4", "a2^2"), "2C2"),
    (("am2", "a6", "4*a0*am4 - a2*am6", "3*a2*am4 - a4*am6", "a0^2",
      "a2*a0", "a4*a0", "a2^2"), "2l0+2l2"),
    (("a0", "a2", "a4*am6", "a6*am6", "am2^2", "3*a4*am2 - a6*am4",
      "a6*am2", "a6^2"), "2l0+2l2"),
    (("a0", "a6", "a2*am6", "3*a2*am4 - a4*am6", "am2^2", "a2*am2",
      "a4*am2", "a2^2"), "2l0+2l2"),
    (("am2", "a6", "a0*am6", "4*a0*am4 - a2*am6", "3*a2*am4 - a4*am6",
      "a0^2", "a2*a0", "3*a2^2 - 4*a4*a0"), "3l0+l2"),
    (("a2", "a6", "a4*am6", "3*am2^2 - 4*a0*am4", "a0*am2", "a4*am2",
      "a0^2", "a4*a0"), "l0+3l2"),
    (("a0", "a6", "3*a2*am4 - a4*am6", "3*am2^2 + a2*am6", "a2*am2",
      "a4*am2", "a2^2", "a4*a2"), "l0+3l2"),
    (("a4", "a6", "3*am2^2 - 4*a0*am4 + a2*am6", "2*a0*am2 - 3*a2*am4",
      "a2*am2", "a0^2", "a2*a0", "a2^2"), "4l2"),
    (("a2", "a6", "3*am2^2 - 4*a0*am4", "2*a0*am2 + a4*am6", "a4*am2",
      "a0^2", "a4*a0", "a4^2"), "4l2"),
)

SELF_MIRROR_QUARTIC_ROW = 2  # 1-based row index fixed by the involution

# ---------------------------------------------------------------------------
# the unique fixed rational normal quartic

RNC_GENS = (
    "am6", "a6", "3*am2^2 - 4*a0*am4", "2*a0*am2 - 3*a2*am4",
    "a2*am2 - 2*a4*am4", "4*a0^2 - 9*a4*am4", "2*a2*a0 - 3*a4*am2",
    "3*a2^2 - 4*a4*a0",
)

# its quadric part: 2x2 minors of a 2x4 catalecticant-style matrix
RNC_MATRIX = (
    ("27/16*a4", "9/8*a2", "a0", "am2"),
    ("9/8*a2", "a0", "am2", "4/3*am4"),
)
