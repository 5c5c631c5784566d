"""Groebner bases for submodules of free modules over the ambient ring.

Vectors in S^s are sparse dicts mapping (component, exponent tuple) to a
nonzero field element.  The module order is position-over-term by default
(lower component index wins), refined by weighted grevlex on monomials.
Syzygies and division representations both come from one augmented-basis
construction: generators (g_i, eps_i) in S^(s+k) with the main block
dominating the tag block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .ring import (
    INFINITE,
    PolynomialRing,
    Polynomial,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

# A term symbol is (component, monomial); a vector maps terms to coeffs.
Term = Tuple[int, tuple]
Vector = Dict[Term, object]


@dataclass(frozen=True)
class ModuleOrder:
    """Total order on monomial-times-basis symbols.

    position_over_term: component dominates the base monomial order.
    Lower component index is larger either way (lower index wins).
    """

    position_over_term: bool = True


def term_key(ring: PolynomialRing, order: ModuleOrder, term: Term):
    comp, mono = term
    if order.position_over_term:
        return (-comp, ring.mono_key(mono))
    return (ring.mono_key(mono), -comp)


DEFAULT_ORDER = ModuleOrder()


# ---------------------------------------------------------------------------
# vector arithmetic


def vec_from_polys(polys: Sequence[Polynomial]) -> Vector:
    out: Vector = {}
    for comp, p in enumerate(polys):
        for m, c in p.coeffs.items():
            out[(comp, m)] = c
    return out


def vec_component(v: Vector, comp: int, ring: PolynomialRing) -> Polynomial:
    return Polynomial(ring, {m: c for (cc, m), c in v.items() if cc == comp})

def vec_lead(v: Vector, ring: PolynomialRing, order: ModuleOrder) -> Term:
    return max(v, key=lambda t: term_key(ring, order, t))


def vec_axpy(v: Vector, coeff, mono: tuple, w: Vector, field) -> Vector:
    """v + coeff * x^mono * w, in place; returns v."""
    for (comp, m), c in w.items():
        t = (comp, mono_mul(mono, m))
        s = field.add(v.get(t, field.zero), field.mul(coeff, c))
        if s == 0:
            v.pop(t, None)
        else:
            v[t] = s
    return v


def vec_scale(v: Vector, coeff, field) -> Vector:
    if coeff == field.zero:
        return {}
    return {t: field.mul(coeff, c) for t, c in v.items()}


def vec_monic(v: Vector, ring: PolynomialRing, order: ModuleOrder, field) -> Vector:
    if not v:
        return v
    lc = v[vec_lead(v, ring, order)]
    if lc == field.one:
        return v
    return vec_scale(v, field.inv(lc), field)


def freeze_vec(v: Vector) -> tuple:
    return tuple(sorted(v.items()))


def vec_shift_components(v: Vector, offset: int) -> Vector:
    return {(comp + offset, m): c for (comp, m), c in v.items()}


def vec_restrict(v: Vector, lo: int, hi: int, rebase: bool = True) -> Vector:
    """Entries with lo <= component < hi, components rebased to start at 0."""
    off = lo if rebase else 0
    return {(comp - off, m): c for (comp, m), c in v.items() if lo <= comp < hi}


# ---------------------------------------------------------------------------
# division


def normal_form_vec(
    v: Vector,
    basis: Sequence[Vector],
    ring: PolynomialRing,
    order: ModuleOrder = DEFAULT_ORDER,
) -> Vector:
    """Fully reduced remainder of v against basis (each basis element monic)."""
    field = ring.field
    lead_data = [(g, vec_lead(g, ring, order)) for g in basis if g]
    work = dict(v)
    remainder: Vector = {}
    while work:
        t = max(work, key=lambda s: term_key(ring, order, s))
        c = work[t]
        comp, mono = t
        hit = None
        for g, (gcomp, gmono) in lead_data:
            if gcomp == comp and mono_divides(gmono, mono):
                hit = (g, gmono)
                break
        if hit is None:
            remainder[t] = c
            del work[t]
        else:
            g, gmono = hit
            vec_axpy(work, field.neg(c), mono_div(mono, gmono), g, field)
    return remainder


# ---------------------------------------------------------------------------
# Buchberger


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis of a submodule of S^rank."""

    ring: PolynomialRing
    rank: int
    vectors: tuple
    order: ModuleOrder = dc_field(default=DEFAULT_ORDER)

    def lead_terms(self) -> List[Term]:
        return [vec_lead(dict(g), self.ring, self.order) for g in self.vectors]

    def as_dicts(self) -> List[Vector]:
        return [dict(g) for g in self.vectors]


_gb_cache: Dict[tuple, GroebnerBasis] = {}


def groebner_basis(
    generators: Sequence[Vector],
    ring: PolynomialRing,
    rank: int,
    order: ModuleOrder = DEFAULT_ORDER,
) -> GroebnerBasis:
    key = (id(ring), rank, order, tuple(freeze_vec(g) for g in generators))
    cached = _gb_cache.get(key)
    if cached is not None:
        return cached

    field = ring.field
    G: List[Vector] = []
    leads: List[Term] = []
    pending = set()

    def add_element(v: Vector):
        v = vec_monic(v, ring, order, field)
        j = len(G)
        G.append(v)
        lt = vec_lead(v, ring, order)
        leads.append(lt)
        for i in range(j):
            if leads[i][0] == lt[0]:
                pending.add((i, j))

    for g in generators:
        if g:
            add_element(dict(g))

    def lcm_of(i, j):
        return mono_lcm(leads[i][1], leads[j][1])

    while pending:
        i, j = min(
            pending,
            key=lambda p: (ring.mono_degree(lcm_of(*p)), p[0], p[1]),
        )
        pending.discard((i, j))
        L = lcm_of(i, j)
        # product criterion (valid for rank-1 ideals only)
        if rank == 1 and mono_coprime(leads[i][1], leads[j][1]):
            continue
        # chain criterion
        skip = False
        comp = leads[i][0]
        for k in range(len(G)):
            if k in (i, j) or leads[k][0] != comp:
                continue
            if mono_divides(leads[k][1], L):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        s: Vector = {}
        vec_axpy(s, field.one, mono_div(L, leads[i][1]), G[i], field)
        vec_axpy(s, field.neg(field.one), mono_div(L, leads[j][1]), G[j], field)
        r = normal_form_vec(s, G, ring, order)
        if r:
            add_element(r)

    # minimalize
    keep = []
    for i, g in enumerate(G):
        lt = leads[i]
        redundant = False
        for j, h in enumerate(G):
            if i == j:
                continue
            ltj = leads[j]
            if ltj[0] == lt[0] and mono_divides(ltj[1], lt[1]):
                if ltj[1] != lt[1] or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(g)
    # interreduce
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form_vec(g, others, ring, order)
        if r:
            reduced.append(vec_monic(r, ring, order, field))
    reduced.sort(key=lambda v: term_key(ring, order, vec_lead(v, ring, order)), reverse=True)
    result = GroebnerBasis(ring, rank, tuple(freeze_vec(v) for v in reduced), order)
    _gb_cache[key] = result
    return result


def normal_form(v: Vector, G: GroebnerBasis) -> Vector:
    return normal_form_vec(v, G.as_dicts(), G.ring, G.order)


def is_member(v: Vector, G: GroebnerBasis) -> bool:
    return not normal_form(v, G)


# ---------------------------------------------------------------------------
# syzygies and representations via the augmented basis


_aug_cache: Dict[tuple, GroebnerBasis] = {}


def _augmented_basis(
    generators: Sequence[Vector], ring: PolynomialRing, rank: int,
    order: ModuleOrder = DEFAULT_ORDER,
) -> GroebnerBasis:
    key = (id(ring), rank, order, tuple(freeze_vec(g) for g in generators))
    cached = _aug_cache.get(key)
    if cached is None:
        one = (0,) * ring.nvars
        aug = []
        for i, g in enumerate(generators):
            h = dict(g)
            h[(rank + i, one)] = ring.field.one
            aug.append(h)
        cached = groebner_basis(aug, ring, rank + len(generators), order)
        _aug_cache[key] = cached
    return cached


def syzygy_basis(
    generators: Sequence[Vector], ring: PolynomialRing, rank: int,
    order: ModuleOrder = DEFAULT_ORDER,
) -> List[Vector]:
    """Generators of {c in S^k : sum_i c_i g_i = 0} for the given k vectors."""
    k = len(generators)
    aug = _augmented_basis(generators, ring, rank, order)
    out = []
    for fv in aug.vectors:
        v = dict(fv)
        if all(comp >= rank for (comp, _m) in v):
            out.append(vec_restrict(v, rank, rank + k))
    return out


def reduce_with_representation(
    v: Vector, generators: Sequence[Vector], ring: PolynomialRing, rank: int,
    order: ModuleOrder = DEFAULT_ORDER,
) -> Tuple[Vector, List[Polynomial]]:
    """Return (r, [q_i]) with v = sum q_i g_i + r and r fully reduced."""
    k = len(generators)
    aug = _augmented_basis(generators, ring, rank, order)
    nf = normal_form(dict(v), aug)
    r = vec_restrict(nf, 0, rank)
    field = ring.field
    reps = []
    for i in range(k):
        coeffs = {m: field.neg(c) for (comp, m), c in nf.items() if comp == rank + i}
        reps.append(Polynomial(ring, coeffs))
    return r, reps


# ---------------------------------------------------------------------------
# staircases, Hilbert series, multiplicity


def _minimal_monomial_gens(monos: Sequence[tuple]) -> List[tuple]:
    uniq = sorted(set(monos))
    out = []
    for m in uniq:
        if not any(mono_divides(g, m) for g in uniq if g != m):
            out.append(m)
    return out


def lead_module(G: GroebnerBasis) -> Dict[int, List[tuple]]:
    """Minimal monomial generators of the lead-term module, per component."""
    by_comp: Dict[int, List[tuple]] = {c: [] for c in range(G.rank)}
    for comp, mono in G.lead_terms():
        by_comp[comp].append(mono)
    return {c: _minimal_monomial_gens(ms) for c, ms in by_comp.items()}


def staircase_count(G: GroebnerBasis):
    """Number of standard monomial symbols outside the lead module, or INFINITE."""
    n = G.ring.nvars
    total = 0
    for _comp, gens in lead_module(G).items():
        if any(g == (0,) * n for g in gens):
            continue  # component entirely in the lead module
        bounds = []
        for i in range(n):
            pure = [g[i] for g in gens if all(e == 0 for j, e in enumerate(g) if j != i)]
            if not pure:
                return INFINITE
            bounds.append(min(pure))
        for point in itertools.product(*(range(b) for b in bounds)):
            if not any(mono_divides(g, point) for g in gens):
                total += 1
    return total


# numerator polynomials in t are dicts degree -> int


def _tpoly_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for d, c in b.items():
        s = out.get(d, 0) - c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def _tpoly_shift(a: dict, k: int) -> dict:
    return {d + k: c for d, c in a.items()}


def _tpoly_eval1(a: dict) -> int:
    return sum(a.values())


def _tpoly_div_1mt(a: dict) -> dict:
    """Exact division by (1 - t); caller guarantees a(1) == 0."""
    if not a:
        return {}
    top = max(a)
    coeffs = [a.get(d, 0) for d in range(top + 1)]
    # (1-t) * (q_0 + q_1 t + ...) : q_0 = c_0, q_d = q_{d-1} + ... solve forward
    q = []
    carry = 0
    for d in range(top + 1):
        val = coeffs[d] + carry
        q.append(val)
        carry = val
    assert q and q[-1] == 0 or top == 0
    return {d: c for d, c in enumerate(q[:-1] if top > 0 else q) if c}


def _ideal_numerator(gens: tuple, weights: tuple, memo: dict) -> dict:
    """Hilbert numerator of S/(monomial ideal) over the weighted denominator."""
    if not gens:
        return {0: 1}
    zero = (0,) * len(weights)
    if zero in gens:
        return {}
    cached = memo.get(gens)
    if cached is not None:
        return cached
    head, last = gens[:-1], gens[-1]
    deg = sum(w * e for w, e in zip(weights, last))
    colon = tuple(
        _minimal_monomial_gens(
            [tuple(max(g[i] - last[i], 0) for i in range(len(last))) for g in head]
        )
    )
    result = _tpoly_sub(
        _ideal_numerator(head, weights, memo),
        _tpoly_shift(_ideal_numerator(colon, weights, memo), deg),
    )
    memo[gens] = result
    return result


def hilbert_numerator(G: GroebnerBasis, shifts: Optional[Sequence[int]] = None) -> dict:
    """Hilbert series numerator of S^rank/(lead module); denominator is
    prod_i (1 - t^(w_i)).  Optional generator degree shifts."""
    weights = G.ring.weights
    memo: dict = {}
    total: dict = {}
    comps = lead_module(G)
    for comp in range(G.rank):
        gens = tuple(comps.get(comp, []))
        num = _ideal_numerator(gens, weights, memo)
        shift = shifts[comp] if shifts else 0
        total = _tpoly_sub(total, _tpoly_shift({d: -c for d, c in num.items()}, shift))
    return total


def numerator_order_at_one(num: dict) -> Optional[int]:
    """Multiplicity of the root t=1; None for the zero numerator."""
    if not num:
        return None
    order = 0
    while _tpoly_eval1(num) == 0:
        num = _tpoly_div_1mt(num)
        order += 1
    return order


def quotient_dimension(G: GroebnerBasis, shifts: Optional[Sequence[int]] = None) -> int:
    """Krull dimension of S^rank/(lead module); -1 for the zero module."""
    order = numerator_order_at_one(hilbert_numerator(G, shifts))
    if order is None:
        return -1
    return G.ring.nvars - order


def multiplicity(G: GroebnerBasis) -> int:
    """Normalized leading coefficient of the Hilbert polynomial (weights 1)."""
    if any(w != 1 for w in G.ring.weights):
        raise ValueError("multiplicity requires all weights equal to 1")
    num = hilbert_numerator(G)
    order = numerator_order_at_one(num)
    if order is None:
        raise ValueError("multiplicity of the zero module is undefined")
    if order == G.ring.nvars:
        raise ValueError("zero-dimensional quotient: use staircase_count instead")
    while _tpoly_eval1(num) == 0:
        num = _tpoly_div_1mt(num)
    e = _tpoly_eval1(num)
    assert e > 0
    return e
