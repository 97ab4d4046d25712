"""Graded Hom dimensions and Hilbert-scheme tangent spaces."""
import random
from fractions import Fraction

import pytest

from delpezzo5.hilbert import degree_monomials
from delpezzo5.homspaces import graded_hom_dimension, tangent_dimension
from delpezzo5.ideals import Ideal
from delpezzo5.polyring import Polynomial, RingContext, parse_polynomial

XY = RingContext(("x", "y"))
P3 = RingContext(("x", "y", "z", "w"))
P6 = RingContext(("a6", "a4", "a2", "a0", "am2", "am4", "am6"),
                 (6, 4, 2, 0, -2, -4, -6))


def ideal(ctx, *texts):
    return Ideal(ctx, [parse_polynomial(t, ctx) for t in texts])


class TestGradedHom:
    def test_principal_to_its_quotient(self):
        I = ideal(XY, "x")
        assert graded_hom_dimension(I, I) == 1

    def test_line_in_projective_six_space(self):
        # normal bundle O(1)^5 on P^1: 2 sections each
        L = ideal(P6, "a6", "a2", "a0", "am2", "am6")
        assert graded_hom_dimension(L, L) == 10

    def test_line_in_projective_three_space(self):
        L = ideal(P3, "x", "y")
        assert graded_hom_dimension(L, L) == 4

    def test_twists_shift_section_counts(self):
        # O(1)^2 on P^1 twisted by -1 and +1
        L = ideal(P3, "x", "y")
        assert graded_hom_dimension(L, L, twist=-1) == 2
        assert graded_hom_dimension(L, L, twist=1) == 6

    def test_unit_target_kills_everything(self):
        I = ideal(P3, "x", "y")
        J = Ideal(P3, [P3.one()])
        assert graded_hom_dimension(I, J) == 0

    def test_inhomogeneous_rejected(self):
        with pytest.raises(ValueError):
            graded_hom_dimension(ideal(XY, "x^2 - 1"), ideal(XY, "x"))


class TestTangent:
    def test_twisted_cubic(self):
        C = ideal(P3, "x*z - y^2", "x*w - y*z", "y*w - z^2")
        assert tangent_dimension(C) == 12

    def test_plane_quartic(self):
        ctx = RingContext(("x", "y", "z"))
        C = ideal(ctx, "x^4 + y^4 - z^4")
        assert tangent_dimension(C) == 14

    def test_line_on_smooth_quadric(self):
        L = ideal(P3, "x", "y")
        Q = ideal(P3, "x*w - y*z")
        assert tangent_dimension(L, within=Q) == 1

    def test_relative_needs_containment(self):
        L = ideal(P3, "x", "y")
        with pytest.raises(ValueError):
            tangent_dimension(L, within=ideal(P3, "z"))

    def test_relative_at_most_ambient(self):
        cases = [
            (ideal(P3, "x", "y"), ideal(P3, "x*w - y*z")),
            (ideal(P6, "a6", "a2", "a0", "am2", "am6"),
             ideal(P6,
                   "a6*am2 - 4*a4*a0 + 3*a2^2",
                   "a6*am4 - 3*a4*am2 + 2*a2*a0",
                   "a6*am6 - 9*a2*am2 + 8*a0^2",
                   "a4*am6 - 3*a2*am4 + 2*a0*am2",
                   "a2*am6 - 4*a0*am4 + 3*am2^2")),
        ]
        for curve, ambient in cases:
            assert tangent_dimension(curve, within=ambient) \
                <= tangent_dimension(curve)


class TestPresentationIndependence:
    def test_randomized_regeneration(self):
        rng = random.Random(107)
        for _ in range(8):
            source = self.random_ideal(rng)
            target = self.random_ideal(rng)
            gens = list(source.gens)
            rng.shuffle(gens)
            extra = gens[0] * self.random_form(rng, 1)
            alt = Ideal(P3, gens + [extra])
            for twist in (-1, 0, 1):
                assert graded_hom_dimension(source, target, twist) \
                    == graded_hom_dimension(alt, target, twist)

    def test_tangent_on_regenerated_table_entry(self):
        C = ideal(P3, "x*z - y^2", "x*w - y*z", "y*w - z^2")
        gens = list(C.gens)
        gens.append(gens[0] * P3.variable("w") - gens[1] * P3.variable("z"))
        gens.reverse()
        assert tangent_dimension(Ideal(P3, gens)) == 12

    def random_form(self, rng, d):
        pool = list(degree_monomials(4, d))
        picks = rng.sample(pool, k=rng.randint(1, 3))
        return Polynomial(P3, {m: Fraction(rng.choice((-2, -1, 1, 2)))
                               for m in picks})

    def random_ideal(self, rng):
        return Ideal(P3, [self.random_form(rng, rng.randint(1, 2))
                          for _ in range(rng.randint(1, 2))])
