"""Buchberger engine with cofactor tracking and Schreyer syzygies.

Everything here is deterministic: pairs are selected by (lcm degree,
lcm order key, index pair), the reducer is always the first basis
element in list order whose lead divides the target term, and the
final basis is the unique reduced Groebner basis sorted by decreasing
lead monomial.
"""
from __future__ import annotations

from bisect import insort
from fractions import Fraction
from typing import Sequence

from .polyring import (
    GREVLEX,
    Exponents,
    MonomialOrder,
    Polynomial,
    RingContext,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


def normal_form(p: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
                with_quotients: bool = False):
    """Full remainder of p on division by the list of divisors.

    Reduces the largest reducible term by the first divisor in list
    order whose lead divides it, until no term is reducible.  With
    ``with_quotients`` returns ``(r, quotients)`` satisfying
    ``p == sum(q_i * divisors_i) + r`` exactly.
    """
    for d in divisors:
        if d.is_zero():
            raise ValueError("zero divisor in normal form")
        if d.context != p.context:
            raise ValueError("ring context mismatch")
    divs = [(d.lead_monomial(order), d.lead_coefficient(order), d.terms) for d in divisors]
    key = order.key
    work = dict(p.terms)
    remainder: dict[Exponents, Fraction] = {}
    quotients: list[dict[Exponents, Fraction]] | None = None
    if with_quotients:
        quotients = [{} for _ in divisors]

    agenda = sorted(work, key=key)  # ascending; pop() takes the largest
    while agenda:
        m = agenda.pop()
        c = work.get(m)
        if not c:
            continue
        hit = -1
        for j, (lm, _, _) in enumerate(divs):
            if mono_divides(lm, m):
                hit = j
                break
        if hit < 0:
            remainder[m] = c
            del work[m]
            continue
        lm, lc, dterms = divs[hit]
        shift = mono_div(m, lm)
        factor = c / lc
        if quotients is not None:
            q = quotients[hit]
            acc = q.get(shift, 0) + factor
            if acc:
                q[shift] = acc
            else:
                q.pop(shift, None)
        for e, ce in dterms.items():
            t = mono_mul(shift, e)
            acc = work.get(t, 0) - factor * ce
            if acc:
                if t not in work:
                    insort(agenda, t, key=key)
                work[t] = acc
            else:
                work.pop(t, None)

    r = Polynomial(p.context, remainder)
    if quotients is None:
        return r
    qpolys = [Polynomial(p.context, q) for q in quotients]
    return r, qpolys


class GroebnerBasis:
    """Reduced basis, its order, and optional cofactor bookkeeping.

    ``cofactors[i]`` expresses ``elements[i]`` as a combination of the
    input generators: ``elements[i] == sum(cofactors[i][k] * input_gens[k])``.
    """

    __slots__ = ("context", "order", "elements", "input_gens", "cofactors")

    def __init__(self, context: RingContext, order: MonomialOrder,
                 elements: Sequence[Polynomial], input_gens: Sequence[Polynomial],
                 cofactors=None):
        self.context = context
        self.order = order
        self.elements = tuple(elements)
        self.input_gens = tuple(input_gens)
        self.cofactors = None if cofactors is None else tuple(tuple(r) for r in cofactors)

    def normal_form(self, p: Polynomial, with_quotients: bool = False):
        return normal_form(p, self.elements, self.order, with_quotients)

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def lead_monomials(self) -> list[Exponents]:
        return [g.lead_monomial(self.order) for g in self.elements]

    def is_weight_homogeneous(self) -> bool:
        return all(g.is_weight_homogeneous() for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        inner = ", ".join(repr(g) for g in self.elements)
        return f"GroebnerBasis([{inner}], order={self.order!r})"


def _select_pair(pairs: set[tuple[int, int]], leads: list[Exponents], order: MonomialOrder):
    def pair_key(pair):
        i, j = pair
        lcm = mono_lcm(leads[i], leads[j])
        return (mono_degree(lcm), order.key(lcm), i, j)

    return min(pairs, key=pair_key)


def reduced_groebner_basis(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
                           track_cofactors: bool = False) -> GroebnerBasis:
    """Buchberger with the normal selection strategy and both of
    Buchberger's pair-elimination criteria; result fully interreduced
    with monic leads, sorted by decreasing lead monomial."""
    gens = list(gens)
    context = gens[0].context if gens else None
    for g in gens:
        if context is not None and g.context != context:
            raise ValueError("ring context mismatch")
    nonzero = [(k, g) for k, g in enumerate(gens) if not g.is_zero()]
    if context is None or not nonzero:
        if context is None:
            raise ValueError("cannot infer a ring context from an empty generator list")
        return GroebnerBasis(context, order, (), gens, () if track_cofactors else None)

    G: list[Polynomial] = []
    rows: list[list[Polynomial]] = []  # aligned with G when tracking
    zero = context.zero()

    def unit_row(k: int, scale: Fraction) -> list[Polynomial]:
        row = [zero] * len(gens)
        row[k] = context.constant(scale)
        return row

    for k, g in nonzero:
        lc = g.lead_coefficient(order)
        G.append(g / lc)
        if track_cofactors:
            rows.append(unit_row(k, Fraction(1) / lc))

    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    leads = [g.lead_monomial(order) for g in G]

    while pairs:
        i, j = _select_pair(pairs, leads, order)
        pairs.discard((i, j))
        lcm = mono_lcm(leads[i], leads[j])
        if lcm == mono_mul(leads[i], leads[j]):
            continue  # coprime leads reduce to zero
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(leads[k], lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        mi = mono_div(lcm, leads[i])
        mj = mono_div(lcm, leads[j])
        s = G[i].term_multiple(mi, Fraction(1)) - G[j].term_multiple(mj, Fraction(1))
        if track_cofactors:
            r, q = normal_form(s, G, order, with_quotients=True)
        else:
            r = normal_form(s, G, order)
            q = None
        if r.is_zero():
            continue
        lc = r.lead_coefficient(order)
        G.append(r / lc)
        if track_cofactors:
            row = [a.term_multiple(mi, Fraction(1)) - b.term_multiple(mj, Fraction(1))
                   for a, b in zip(rows[i], rows[j])]
            for t, qt in enumerate(q):
                if not qt.is_zero():
                    row = [a - qt * b for a, b in zip(row, rows[t])]
            rows.append([a / lc for a in row])
        new = len(G) - 1
        leads.append(r.lead_monomial(order))
        pairs.update((k, new) for k in range(new))

    # minimal generating set of the lead ideal
    by_lead = sorted(range(len(G)), key=lambda k: order.key(leads[k]))
    kept: list[int] = []
    for k in by_lead:
        if not any(mono_divides(leads[t], leads[k]) for t in kept):
            kept.append(k)

    # interreduce tails; leads are pairwise indivisible so they survive
    final = [G[k] for k in kept]
    final_rows = [list(rows[k]) for k in kept] if track_cofactors else None
    for idx in range(len(final)):
        others = final[:idx] + final[idx + 1:]
        if track_cofactors:
            r, q = normal_form(final[idx], others, order, with_quotients=True)
            row = final_rows[idx]
            other_rows = final_rows[:idx] + final_rows[idx + 1:]
            for qt, orow in zip(q, other_rows):
                if not qt.is_zero():
                    row = [a - qt * b for a, b in zip(row, orow)]
            final_rows[idx] = row
        else:
            r = normal_form(final[idx], others, order)
        final[idx] = r

    order_desc = sorted(range(len(final)),
                        key=lambda k: order.key(final[k].lead_monomial(order)), reverse=True)
    elements = [final[k] for k in order_desc]
    cof = [final_rows[k] for k in order_desc] if track_cofactors else None
    return GroebnerBasis(context, order, elements, gens, cof)


class SyzygyBasis:
    """Generating set for the module of relations among ``gens``.

    Each column c satisfies ``sum(c[k] * gens[k]) == 0``; by Schreyer's
    construction the columns generate every relation.
    """

    __slots__ = ("gens", "columns")

    def __init__(self, gens: Sequence[Polynomial], columns):
        self.gens = tuple(gens)
        self.columns = tuple(tuple(col) for col in columns)

    def __len__(self):
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)


def syzygy_columns(gb: GroebnerBasis) -> list[list[Polynomial]]:
    """Schreyer syzygies of ``gb.input_gens``, one relation per list entry.

    Lifts every S-pair reduction of the basis through the cofactor
    matrix, then adds the columns e_i - sum_j B[i][j] A[j] accounting
    for the generators' own reductions.  A zero input generator yields
    the trivial relation e_i, which any generating set of relations
    must contain.
    """
    if gb.cofactors is None:
        raise ValueError("syzygies need a basis computed with cofactor tracking")
    gens = gb.input_gens
    context = gb.context
    order = gb.order
    G = list(gb.elements)
    A = [list(row) for row in gb.cofactors]
    zero = context.zero()

    columns: list[list[Polynomial]] = []

    def push(col: list[Polynomial]) -> None:
        if any(not c.is_zero() for c in col):
            columns.append(col)

    leads = [g.lead_monomial(order) for g in G]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            lcm = mono_lcm(leads[i], leads[j])
            mi = mono_div(lcm, leads[i])
            mj = mono_div(lcm, leads[j])
            s = G[i].term_multiple(mi, Fraction(1)) - G[j].term_multiple(mj, Fraction(1))
            r, q = normal_form(s, G, order, with_quotients=True)
            if not r.is_zero():
                raise AssertionError("S-pair of a Groebner basis must reduce to zero")
            # tau = x^mi e_i - x^mj e_j - q, a syzygy of G; push tau * A
            col = [zero] * len(gens)
            for k in range(len(gens)):
                acc = A[i][k].term_multiple(mi, Fraction(1)) - A[j][k].term_multiple(mj, Fraction(1))
                for t, qt in enumerate(q):
                    if not qt.is_zero():
                        acc = acc - qt * A[t][k]
                col[k] = acc
            push(col)

    for i, g in enumerate(gens):
        if g.is_zero():
            col = [zero] * len(gens)
            col[i] = context.constant(1)
            push(col)
            continue
        r, b = normal_form(g, G, order, with_quotients=True)
        if not r.is_zero():
            raise AssertionError("generator must reduce to zero against its own basis")
        col = []
        for k in range(len(gens)):
            acc = context.constant(1) if k == i else zero
            for j, bj in enumerate(b):
                if not bj.is_zero():
                    acc = acc - bj * A[j][k]
            col.append(acc)
        push(col)

    return columns


def syzygy_basis(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> SyzygyBasis:
    """Generating relations among nonzero generators."""
    gens = list(gens)
    if not gens:
        raise ValueError("syzygies need at least one generator")
    for g in gens:
        if g.is_zero():
            raise ValueError("syzygies require nonzero generators")
    gb = reduced_groebner_basis(gens, order, track_cofactors=True)
    return SyzygyBasis(gens, syzygy_columns(gb))
