"""
Quotients, saturations, intersections, elimination
==================================================

"""

from delpezzo5 import Ideal, RingContext, format_ideal_text, parse_polynomial

ctx = RingContext(("x", "y", "z"), weights=(1, 1, 1))


def poly(s):
    return parse_polynomial(s, ctx)


def show(title, ideal):
    # reduced Groebner generators make the printout canonical
    print(title)
    print(format_ideal_text(ideal.context, ideal.groebner().elements))


# I is x times the irrelevant maximal ideal; the quotient by (x)
# recovers that factor exactly
I = Ideal(ctx, [poly("x^2"), poly("x*y"), poly("x*z")])
J = Ideal(ctx, [poly("x")])
show("I : J", I.quotient(J))

# saturating by the irrelevant ideal removes whatever is supported at
# the origin only, leaving the honest plane x = 0
show("saturation of I", I.saturate_irrelevant())

# intersections glue: two coordinate lines meet in their union
line_z = Ideal(ctx, [poly("x"), poly("y")])
line_x = Ideal(ctx, [poly("y"), poly("z")])
union = line_z.intersect(line_x)
show("union of two coordinate lines", union)

# elimination projects: forgetting x maps the parameterized curve
# (t, t^2, t^3) onto a plane cuspidal cubic
curve = Ideal(ctx, [poly("y - x^2"), poly("z - x^3")])
show("projection to the (y, z) plane", curve.eliminate(("x",)))

# containment comparisons come back as one word
print("compare(union, line through z-axis):", union.compare(line_z))
