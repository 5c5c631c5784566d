"""Module presentations, minimal free resolutions, matrix factorizations,
syzygies, duals, Ext against the ring, and homology of tensored complexes.

Everything is computed over the ambient polynomial ring S; quotient-ring
kernels are obtained by appending f * e_j to the generator list and
projecting the syzygies back.  Matrix entries over R = S/(f) are stored as
their canonical normal forms modulo f.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import InhomogeneousError, NotStabilized
from .groebner import (
    GroebnerBasis,
    Vector,
    freeze_vec,
    groebner_basis,
    normal_form,
    normal_form_vec,
    quotient_dimension,
    reduce_with_representation,
    staircase_count,
    syzygy_basis,
    vec_restrict,
    vec_shift_components,
)
from .ring import (
    INFINITE,
    HypersurfaceRing,
    Polynomial,
    PolynomialRing,
    RingLike,
    ambient_of,
    modulus_of,
    mono_mul,
)

MatrixRows = Tuple[Tuple[Polynomial, ...], ...]


# ---------------------------------------------------------------------------
# polynomial / matrix helpers over R


def reduce_mod_f(p: Polynomial, ring: RingLike) -> Polynomial:
    f = modulus_of(ring)
    if f is None or p.is_zero():
        return p
    S = ambient_of(ring)
    v = {(0, m): c for m, c in p.coeffs.items()}
    r = normal_form_vec(v, [{(0, m): c for m, c in f.monic().coeffs.items()}], S)
    return Polynomial(S, {m: c for (_c, m), c in r.items()})


def reduce_vec_mod_f(v: Vector, ring: RingLike) -> Vector:
    f = modulus_of(ring)
    if f is None:
        return dict(v)
    S = ambient_of(ring)
    fv = {(0, m): c for m, c in f.monic().coeffs.items()}
    comps: Dict[int, Vector] = {}
    for (comp, m), c in v.items():
        comps.setdefault(comp, {})[(0, m)] = c
    out: Vector = {}
    for comp, poly_vec in comps.items():
        r = normal_form_vec(poly_vec, [fv], S)
        for (_z, m), c in r.items():
            out[(comp, m)] = c
    return out


def columns_as_vectors(rows: MatrixRows) -> List[Vector]:
    if not rows:
        return []
    ncols = len(rows[0])
    cols = []
    for c in range(ncols):
        v: Vector = {}
        for r, row in enumerate(rows):
            for m, coeff in row[c].coeffs.items():
                v[(r, m)] = coeff
        cols.append(v)
    return cols


def vectors_to_rows(vectors: Sequence[Vector], rank: int, ring: RingLike) -> MatrixRows:
    S = ambient_of(ring)
    rows = []
    for r in range(rank):
        row = []
        for v in vectors:
            row.append(Polynomial(S, {m: c for (comp, m), c in v.items() if comp == r}))
        rows.append(tuple(row))
    return tuple(rows)


def mat_transpose(rows: MatrixRows) -> MatrixRows:
    if not rows:
        return ()
    return tuple(zip(*rows))


def mat_mul(a: MatrixRows, b: MatrixRows, S: PolynomialRing) -> MatrixRows:
    if not a:
        return ()
    inner = len(a[0])
    bcols = len(b[0]) if b else 0
    out = []
    for row in a:
        new_row = []
        for c in range(bcols):
            acc = S.zero()
            for k in range(inner):
                acc = acc + row[k] * b[k][c]
            new_row.append(acc)
        out.append(tuple(new_row))
    return tuple(out)


def f_times_unit_vectors(ring: RingLike, rank: int) -> List[Vector]:
    f = modulus_of(ring)
    if f is None:
        return []
    return [{(j, m): c for m, c in f.coeffs.items()} for j in range(rank)]


def syzygies_over(ring: RingLike, vectors: Sequence[Vector], rank: int) -> List[Vector]:
    """Generators of the syzygy module of the given vectors over R (or S)."""
    S = ambient_of(ring)
    base = len(vectors)
    gens = list(vectors) + f_times_unit_vectors(ring, rank)
    raw = syzygy_basis(gens, S, rank)
    out = []
    seen = set()
    for s in raw:
        v = reduce_vec_mod_f(vec_restrict(s, 0, base), ring)
        if v:
            key = freeze_vec(v)
            if key not in seen:
                seen.add(key)
                out.append(v)
    return out


def lifted_basis(ring: RingLike, vectors: Sequence[Vector], rank: int) -> GroebnerBasis:
    """Groebner basis of the S-submodule generated by the vectors plus f*e_j."""
    S = ambient_of(ring)
    return groebner_basis(list(vectors) + f_times_unit_vectors(ring, rank), S, rank)


def membership_nf(ring: RingLike, v: Vector, gb: GroebnerBasis) -> Vector:
    return normal_form(dict(v), gb)


# ---------------------------------------------------------------------------
# module presentations


class ModulePresentation:
    """Finitely generated module coker(Q : R^t -> R^s) with graded bookkeeping."""

    def __init__(self, ring: RingLike, rows, gen_degrees=None):
        self.ring = ring
        S = ambient_of(ring)
        norm_rows = []
        for row in rows:
            norm_row = []
            for entry in row:
                if isinstance(entry, str):
                    entry = S.parse(entry)
                norm_row.append(reduce_mod_f(entry, ring))
            norm_rows.append(tuple(norm_row))
        # drop identically-zero relation columns
        if norm_rows:
            ncols = len(norm_rows[0])
            if any(len(r) != ncols for r in norm_rows):
                raise ValueError("ragged presentation matrix")
            keep = [c for c in range(ncols) if any(r[c].coeffs for r in norm_rows)]
            norm_rows = [tuple(r[c] for c in keep) for r in norm_rows]
        self.rows: MatrixRows = tuple(norm_rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if gen_degrees is None:
            gen_degrees = self._infer_degrees()
        self.gen_degrees = tuple(gen_degrees)
        self._cache: dict = {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def cyclic(cls, ring: RingLike, generators) -> "ModulePresentation":
        """A/(g_1..g_k): one generator, the given relations."""
        S = ambient_of(ring)
        polys = [S.parse(g) if isinstance(g, str) else g for g in generators]
        return cls(ring, [tuple(polys)])

    @classmethod
    def free(cls, ring: RingLike, rank: int = 1) -> "ModulePresentation":
        return cls(ring, [() for _ in range(rank)], gen_degrees=(0,) * rank)

    @classmethod
    def zero(cls, ring: RingLike) -> "ModulePresentation":
        return cls(ring, [], gen_degrees=())

    # -- bookkeeping -------------------------------------------------------

    def _infer_degrees(self) -> Tuple[int, ...]:
        s, t = self.nrows, self.ncols
        entry_deg = {}
        for r in range(s):
            for c in range(t):
                p = self.rows[r][c]
                if not p.is_zero():
                    entry_deg[(r, c)] = p.weighted_degree()
        degs: List[Optional[int]] = [None] * s
        col_deg: List[Optional[int]] = [None] * t
        for anchor in range(s):
            if degs[anchor] is not None:
                continue
            degs[anchor] = 0
            frontier = [anchor]
            while frontier:
                r = frontier.pop()
                for c in range(t):
                    if (r, c) not in entry_deg:
                        continue
                    d = degs[r] + entry_deg[(r, c)]
                    if col_deg[c] is None:
                        col_deg[c] = d
                    elif col_deg[c] != d:
                        raise InhomogeneousError(
                            f"column {c} is not homogeneous under any generator degrees"
                        )
                    else:
                        continue
                    for r2 in range(s):
                        if (r2, c) in entry_deg:
                            d2 = col_deg[c] - entry_deg[(r2, c)]
                            if degs[r2] is None:
                                degs[r2] = d2
                                frontier.append(r2)
                            elif degs[r2] != d2:
                                raise InhomogeneousError(
                                    f"column {c} is not homogeneous under any generator degrees"
                                )
        return tuple(d if d is not None else 0 for d in degs)

    def cache_key(self):
        return (id(self.ring), self.rows)

    def columns(self) -> List[Vector]:
        return columns_as_vectors(self.rows)

    def presentation_gb(self) -> GroebnerBasis:
        """GB of the lifted column submodule of S^s (adds f * e_j)."""
        gb = self._cache.get("gb")
        if gb is None:
            gb = lifted_basis(self.ring, self.columns(), self.nrows)
            self._cache["gb"] = gb
        return gb

    def is_zero(self) -> bool:
        if self.nrows == 0:
            return True
        gb = self.presentation_gb()
        one = (0,) * ambient_of(self.ring).nvars
        return all(not membership_nf(self.ring, {(j, one): self.ring.field.one}, gb)
                   for j in range(self.nrows))

    def __repr__(self):
        return f"<module {self.nrows} gens, {self.ncols} relations over {self.ring!r}>"

    # -- minimal presentation ---------------------------------------------

    def minimal_presentation(self) -> "ModulePresentation":
        cached = self._cache.get("minimal")
        if cached is not None:
            return cached
        field = self.ring.field
        rows = [list(r) for r in self.rows]
        degs = list(self.gen_degrees)
        changed = True
        while changed:
            changed = False
            s = len(rows)
            t = len(rows[0]) if rows else 0
            for r in range(s):
                for c in range(t):
                    p = rows[r][c]
                    if p.is_zero() or not p.is_constant():
                        continue
                    a_inv = field.inv(p.constant_coeff())
                    for c2 in range(t):
                        if c2 == c or rows[r][c2].is_zero():
                            continue
                        lam = rows[r][c2].scale(a_inv)
                        for r2 in range(s):
                            rows[r2][c2] = reduce_mod_f(
                                rows[r2][c2] - lam * rows[r2][c], self.ring
                            )
                    for r2 in range(s):
                        if r2 == r or rows[r2][c].is_zero():
                            continue
                        mu = rows[r2][c].scale(a_inv)
                        # row r is zero except column c, so only column c changes
                        rows[r2][c] = reduce_mod_f(
                            rows[r2][c] - mu * rows[r][c], self.ring
                        )
                    del degs[r]
                    rows = [row[:c] + row[c + 1:] for i, row in enumerate(rows) if i != r]
                    changed = True
                    break
                if changed:
                    break
        result = ModulePresentation(self.ring, rows, gen_degrees=tuple(degs))
        self._cache["minimal"] = result
        self._cache["minimal_of_minimal"] = result
        result._cache["minimal"] = result
        return result


def present_cyclic(ring: RingLike, generators) -> ModulePresentation:
    return ModulePresentation.cyclic(ring, generators)


def module_length(M: ModulePresentation):
    """Length of the module (standard-monomial count of the lifted columns)."""
    if M.nrows == 0:
        return 0
    return staircase_count(M.presentation_gb())


def module_dimension(M: ModulePresentation) -> int:
    """Krull dimension of the support; -1 for the zero module."""
    if M.nrows == 0:
        return -1
    return quotient_dimension(M.presentation_gb())


# ---------------------------------------------------------------------------
# minimal free resolutions


class Resolution:
    """Minimal graded free resolution of M over R, to homological degree L."""

    def __init__(self, module: ModulePresentation, length: int):
        self.module = module
        self.ring = module.ring
        self.length = length
        module._ensure_resolution(length)

    @property
    def betti(self) -> List[int]:
        b = self.module._cache["res_betti"]
        return list(b[: self.length + 1])

    def differential_columns(self, i: int) -> List[Vector]:
        """Columns of d_i (1-based), as vectors in R^(b_{i-1})."""
        if not 1 <= i <= self.length:
            raise IndexError(f"differential index {i} out of range 1..{self.length}")
        return self.module._cache["res_diffs"][i - 1]

    def matrix(self, i: int) -> MatrixRows:
        cols = self.differential_columns(i)
        rank = self.betti[i - 1]
        return vectors_to_rows(cols, rank, self.ring)

    def gen_degrees(self, i: int) -> List[int]:
        return list(self.module._cache["res_degs"][i])

    @property
    def stable_start(self) -> Optional[int]:
        """Smallest index from which the computed Betti tail is constant.

        Requires the tail to be constant for at least two consecutive steps
        past the ring dimension; None when not yet stabilized."""
        b = self.betti
        d = _dim_of(self.ring)
        L = self.length
        if L < d + 3:
            return None
        j = L
        while j >= 1 and b[j - 1] == b[L]:
            j -= 1
        start = j + 1
        if start > d + 1:
            return None
        # lead-term periodicity witness on the tail differentials
        if L >= start + 2:
            lead_a = _column_lead_multiset(self, max(start, 1))
            lead_b = _column_lead_multiset(self, max(start, 1) + 2)
            if lead_a != lead_b:
                return None
        return max(start, 1)

    @property
    def stable(self) -> bool:
        return self.stable_start is not None


def _dim_of(ring: RingLike) -> int:
    from .ring import ring_dimension

    return ring_dimension(ring)


def _column_lead_multiset(res: Resolution, i: int):
    if i > res.length or res.betti[i] == 0:
        return ()
    S = ambient_of(res.ring)
    from .groebner import DEFAULT_ORDER, vec_lead

    return tuple(sorted(vec_lead(v, S, DEFAULT_ORDER) for v in res.differential_columns(i)))


def _vector_degree(v: Vector, target_degs: Sequence[int], S: PolynomialRing) -> int:
    degs = set()
    for (comp, m), _c in v.items():
        degs.add(S.mono_degree(m) + target_degs[comp])
    if len(degs) != 1:
        raise InhomogeneousError("syzygy vector is not homogeneous")
    return degs.pop()


def _minimal_generating_subset(
    ring: RingLike, vectors: List[Vector], rank: int, target_degs: Sequence[int]
) -> List[Tuple[Vector, int]]:
    """Greedy graded Nakayama selection; returns (vector, degree) pairs."""
    S = ambient_of(ring)
    decorated = sorted(
        ((_vector_degree(v, target_degs, S), freeze_vec(v), v) for v in vectors),
        key=lambda t: (t[0], t[1]),
    )
    kept: List[Tuple[Vector, int]] = []
    for deg, _key, v in decorated:
        if kept:
            gb = lifted_basis(ring, [k for k, _d in kept], rank)
            if not membership_nf(ring, v, gb):
                continue
        elif not v:
            continue
        kept.append((v, deg))
    return kept


def _resolution_step(
    ring: RingLike, diff_cols: List[Vector], rank: int, target_degs: Sequence[int]
) -> List[Tuple[Vector, int]]:
    """Minimal generators of ker(d) for the map with the given columns."""
    syz = syzygies_over(ring, diff_cols, rank)
    return _minimal_generating_subset(ring, syz, len(diff_cols), target_degs)


def _ensure_resolution(self: ModulePresentation, length: int) -> None:
    cache = self._cache
    if "res_diffs" not in cache:
        minimal = self.minimal_presentation()
        cache["res_min"] = minimal
        cache["res_diffs"] = [minimal.columns()]
        cache["res_degs"] = [list(minimal.gen_degrees)]
        col_degs = []
        for c in range(minimal.ncols):
            v = minimal.columns()[c]
            col_degs.append(_vector_degree(v, minimal.gen_degrees, ambient_of(self.ring)))
        cache["res_degs"].append(col_degs)
        cache["res_betti"] = [minimal.nrows, minimal.ncols]
    diffs = cache["res_diffs"]
    degs = cache["res_degs"]
    betti = cache["res_betti"]
    while len(diffs) < length:
        i = len(diffs)  # computing d_{i+1}
        if betti[i] == 0:
            diffs.append([])
            degs.append([])
            betti.append(0)
            continue
        source_degs = degs[i]
        kernel = _resolution_step(self.ring, diffs[i - 1], betti[i - 1], source_degs)
        diffs.append([v for v, _d in kernel])
        degs.append([d for _v, d in kernel])
        betti.append(len(kernel))


ModulePresentation._ensure_resolution = _ensure_resolution


def minimal_resolution(M: ModulePresentation, length: int) -> Resolution:
    if length < 1:
        raise ValueError("resolution length must be >= 1")
    return Resolution(M, length)


def syzygy_of(M: ModulePresentation, l: int) -> ModulePresentation:
    """Omega^l(M): the l-th syzygy, presented by d_{l+1}."""
    if l < 0:
        raise ValueError("syzygy index must be >= 0")
    if l == 0:
        return M
    res = minimal_resolution(M, l + 1)
    b = res.betti
    if b[l] == 0:
        return ModulePresentation.zero(M.ring)
    rows = vectors_to_rows(res.differential_columns(l + 1), b[l], M.ring)
    return ModulePresentation(M.ring, rows, gen_degrees=tuple(res.gen_degrees(l)))


# ---------------------------------------------------------------------------
# matrix factorizations


class MatrixFactorization:
    """Pair (alpha, beta) of square matrices over S with alpha*beta = f*I."""

    def __init__(self, ring: HypersurfaceRing, alpha: MatrixRows, beta: MatrixRows,
                 source_index: int):
        self.ring = ring
        self.alpha = alpha
        self.beta = beta
        self.size = len(alpha)
        self.source_index = source_index  # alpha lifts d_{source_index}
        self._verify()

    def _verify(self):
        S = self.ring.ambient
        f = self.ring.f
        for prod in (mat_mul(self.alpha, self.beta, S), mat_mul(self.beta, self.alpha, S)):
            for r in range(self.size):
                for c in range(self.size):
                    expected = f if r == c else S.zero()
                    if prod[r][c] != expected:
                        raise NotStabilized(
                            "matrix factorization identity alpha*beta = f*I failed"
                        )


def extract_matrix_factorization(res: Resolution) -> MatrixFactorization:
    ring = res.ring
    if not isinstance(ring, HypersurfaceRing):
        raise ValueError("matrix factorizations require a hypersurface ring")
    d = ring.dimension
    if res.length < d + 3:
        res = minimal_resolution(res.module, d + 3)
    if not res.stable:
        raise NotStabilized(
            f"Betti numbers not constant by homological degree {d + 3}: {res.betti}"
        )
    b = res.betti
    L = res.length
    j = L
    while j >= 2 and b[j - 2] == b[L]:
        j -= 1
    S = ring.ambient
    f = ring.f
    last_error = None
    for jj in range(j, L + 1):
        r = b[jj]
        alpha = res.matrix(jj)
        cols = columns_as_vectors(alpha)
        beta_cols: List[List[Polynomial]] = []
        ok = True
        for k in range(r):
            target = {(k, m): c for m, c in f.coeffs.items()}
            remainder, reps = reduce_with_representation(target, cols, S, r)
            if remainder:
                ok = False
                last_error = f"f*e_{k} not in the column span of d_{jj}"
                break
            beta_cols.append(reps)
        if not ok:
            continue
        beta = tuple(
            tuple(beta_cols[c][row] for c in range(r)) for row in range(r)
        )
        return MatrixFactorization(ring, alpha, beta, jj)
    raise NotStabilized(last_error or "no stable square differential found")


# ---------------------------------------------------------------------------
# subquotients and homology


def subquotient_presentation(
    ring: RingLike,
    rank: int,
    numerator: Optional[List[Vector]],
    denominator: List[Vector],
) -> ModulePresentation:
    """Presentation of N/D for submodules D <= N <= R^rank.

    numerator None means N = R^rank."""
    if numerator is None:
        rows = vectors_to_rows(denominator, rank, ring)
        return ModulePresentation(ring, rows)
    numerator = [v for v in numerator if v]
    if not numerator:
        return ModulePresentation.zero(ring)
    combined = numerator + denominator
    syz = syzygies_over(ring, combined, rank)
    relations = []
    seen = set()
    for s in syz:
        rel = vec_restrict(s, 0, len(numerator))
        if rel:
            key = freeze_vec(rel)
            if key not in seen:
                seen.add(key)
                relations.append(rel)
    rows = vectors_to_rows(relations, len(numerator), ring)
    return ModulePresentation(ring, rows)


def _tensor_map_columns(d_cols: List[Vector], s: int) -> List[Vector]:
    """Columns of d (x) I_s, source coordinate (c, k) -> index c*s + k."""
    out = []
    for v in d_cols:
        for k in range(s):
            out.append({(comp * s + k, m): c for (comp, m), c in v.items()})
    return out


def _block_relations(Q_cols: List[Vector], s: int, blocks: int) -> List[Vector]:
    out = []
    for block in range(blocks):
        for v in Q_cols:
            out.append(vec_shift_components(v, block * s))
    return out


def complex_homology(
    ring: RingLike,
    diff_cols: List[List[Vector]],
    ranks: List[int],
    N: ModulePresentation,
    i: int,
) -> ModulePresentation:
    """H_i of (complex with the given differentials) tensored with N.

    diff_cols[k] holds the columns of d_{k+1}; ranks has length L+1."""
    L = len(diff_cols)
    if not 0 <= i <= L:
        raise IndexError(f"homology index {i} out of computed range 0..{L}")
    s = N.nrows
    if s == 0 or ranks[i] == 0:
        return ModulePresentation.zero(ring)
    Q_cols = N.columns()
    denominator = []
    if i < L:
        denominator += _tensor_map_columns(diff_cols[i], s)
    denominator += _block_relations(Q_cols, s, ranks[i])
    if i == 0 or ranks[i - 1] == 0:
        # no incoming map (or a zero target): the kernel is everything
        numerator = None
    else:
        map_cols = _tensor_map_columns(diff_cols[i - 1], s)
        modulo = _block_relations(Q_cols, s, ranks[i - 1])
        syz = syzygies_over(ring, map_cols + modulo, ranks[i - 1] * s)
        numerator = []
        seen = set()
        for sy in syz:
            v = vec_restrict(sy, 0, len(map_cols))
            if v:
                key = freeze_vec(v)
                if key not in seen:
                    seen.add(key)
                    numerator.append(v)
    return subquotient_presentation(ring, ranks[i] * s, numerator, denominator)


def homology_of_tensored(res: Resolution, N: ModulePresentation, i: int) -> ModulePresentation:
    """H_i of the resolution complex tensored with N, for 1 <= i <= length-1."""
    if not 1 <= i <= res.length - 1:
        raise IndexError(f"index {i} outside 1..{res.length - 1}")
    diff_cols = [res.differential_columns(k + 1) for k in range(i + 1)]
    ranks = res.betti[: i + 2]
    return complex_homology(res.ring, diff_cols, ranks, N, i)


_tor_cache: Dict[tuple, object] = {}


def tor_length(M: ModulePresentation, N: ModulePresentation, i: int):
    """Length of Tor_i^A(M, N) for i >= 1; INFINITE lengths raise."""
    from .errors import InfiniteLength

    if i < 1:
        raise IndexError("tor_length requires i >= 1")
    key = (M.cache_key(), N.cache_key(), i)
    if key in _tor_cache:
        result = _tor_cache[key]
    else:
        res = minimal_resolution(M, i + 1)
        H = homology_of_tensored(res, N, i)
        result = module_length(H)
        _tor_cache[key] = result
    if result is INFINITE:
        raise InfiniteLength(f"Tor_{i} has infinite length")
    return result


# ---------------------------------------------------------------------------
# duals and Ext against the ring


def _rows_as_vectors(rows: MatrixRows, ncols: int) -> List[Vector]:
    """Rows of a matrix as vectors indexed by column position."""
    out = []
    for row in rows:
        v: Vector = {}
        for c in range(ncols):
            for m, coeff in row[c].coeffs.items():
                v[(c, m)] = coeff
        out.append(v)
    return out


def ext_module(M: ModulePresentation, i: int) -> ModulePresentation:
    """Ext^i_A(M, A): homology of the dualized minimal resolution."""
    if i < 0:
        raise ValueError("ext index must be >= 0")
    res = minimal_resolution(M, i + 2)
    b = res.betti
    if b[i] == 0:
        return ModulePresentation.zero(M.ring)
    # kernel of transpose(d_{i+1}) : R^{b_i} -> R^{b_{i+1}}
    if b[i + 1] == 0:
        kernel: Optional[List[Vector]] = None
    else:
        d_next_rows = res.matrix(i + 1)  # b_i x b_{i+1}
        row_vectors = _rows_as_vectors(d_next_rows, b[i + 1])
        kernel = syzygies_over(M.ring, row_vectors, b[i + 1])
    if i == 0:
        image: List[Vector] = []
    else:
        d_rows = res.matrix(i)  # b_{i-1} x b_i
        image = _rows_as_vectors(d_rows, b[i])
    image = [reduce_vec_mod_f(v, M.ring) for v in image]
    image = [v for v in image if v]
    return subquotient_presentation(M.ring, b[i], kernel, image)


def dual_module(M: ModulePresentation) -> ModulePresentation:
    """Hom_A(M, A), computed as Ext^0 of the minimal resolution."""
    return ext_module(M, 0)


def direct_sum(M: ModulePresentation, N: ModulePresentation) -> ModulePresentation:
    if M.ring is not N.ring:
        raise ValueError("direct sum requires one ring")
    S = ambient_of(M.ring)
    zero = S.zero()
    rows = []
    for r in range(M.nrows):
        rows.append(tuple(M.rows[r]) + (zero,) * N.ncols)
    for r in range(N.nrows):
        rows.append((zero,) * M.ncols + tuple(N.rows[r]))
    return ModulePresentation(
        M.ring, rows, gen_degrees=M.gen_degrees + N.gen_degrees
    )
