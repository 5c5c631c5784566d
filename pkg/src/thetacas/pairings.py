"""Lengths, the stable Tor pairing theta, Euler characteristics of bounded
free complexes, local lengths at height-one primes, and the divisor-class
map on torsion modules."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    AlgebraError,
    DimensionMismatch,
    InfiniteLength,
    NonIsolatedSingularity,
    NotFiniteLength,
    NotFinitePd,
    PeriodicityViolation,
)
from .groebner import multiplicity as gb_multiplicity
from .homology import (
    MatrixRows,
    ModulePresentation,
    columns_as_vectors,
    complex_homology,
    mat_mul,
    minimal_resolution,
    module_dimension,
    module_length,
    reduce_mod_f,
    subquotient_presentation,
    tor_length,
)
from .ring import (
    INFINITE,
    Polynomial,
    RingLike,
    ambient_of,
    ring_dimension,
)


class MultiplicityAuditWarning(UserWarning):
    """The additivity audit sum(l_p * e(A/p)) = e(M) failed: a component of
    the support is probably missing from the supplied prime list."""


# ---------------------------------------------------------------------------
# formal classes


@dataclass(frozen=True)
class ClassExpression:
    """Formal integer combination of named modules (an element of G_0)."""

    terms: tuple  # sorted tuple of (name, nonzero coeff)

    @classmethod
    def of(cls, *named_coeffs) -> "ClassExpression":
        """Build from (name, coeff) pairs or a dict; merges and drops zeros."""
        acc: Dict[str, int] = {}
        for item in named_coeffs:
            if isinstance(item, dict):
                pairs = item.items()
            elif isinstance(item, str):
                pairs = [(item, 1)]
            else:
                pairs = [item]
            for name, coeff in pairs:
                acc[name] = acc.get(name, 0) + int(coeff)
        return cls(tuple(sorted((n, c) for n, c in acc.items() if c)))

    def items(self):
        return list(self.terms)

    def __add__(self, other):
        return ClassExpression.of(dict(self.terms), dict(other.terms))

    def __neg__(self):
        return ClassExpression(tuple((n, -c) for n, c in self.terms))


@dataclass(frozen=True)
class DivisorClass:
    """Formal integer combination of named height-one primes."""

    terms: tuple

    @classmethod
    def of(cls, coeffs: Dict[str, int]) -> "DivisorClass":
        return cls(tuple(sorted((n, c) for n, c in coeffs.items() if c)))

    def items(self):
        return list(self.terms)

    def is_zero(self) -> bool:
        return not self.terms


class FreeComplex:
    """Bounded complex of free modules ... -> R^{r_1} -> R^{r_0} given by the
    matrices of d_1, ..., d_L; consecutive composites must vanish over R."""

    def __init__(self, ring: RingLike, matrices: Sequence[MatrixRows]):
        self.ring = ring
        S = ambient_of(ring)
        mats = []
        for rows in matrices:
            mats.append(tuple(
                tuple(S.parse(e) if isinstance(e, str) else e for e in row)
                for row in rows
            ))
        self.matrices: List[MatrixRows] = mats
        ranks = []
        for k, rows in enumerate(mats):
            if not rows:
                raise ValueError(f"differential {k + 1} has no rows")
            if k == 0:
                ranks.append(len(rows))
            elif len(rows) != ranks[-1]:
                raise ValueError(
                    f"differential {k + 1} has {len(rows)} rows, expected {ranks[-1]}"
                )
            ranks.append(len(rows[0]))
        if not mats:
            raise ValueError("a complex needs at least one differential")
        self.ranks = ranks  # r_0 .. r_L
        self.length = len(mats)
        for k in range(self.length - 1):
            prod = mat_mul(mats[k], mats[k + 1], S)
            for row in prod:
                for entry in row:
                    if not reduce_mod_f(entry, ring).is_zero():
                        raise ValueError(
                            f"composite d_{k + 1} d_{k + 2} does not vanish"
                        )

    def shifted(self) -> "FreeComplex":
        """Homological shift by one: H_i of the result is H_{i-1} of self.

        The new bottom differential is the zero map F_0 -> 0, encoded as a
        matrix with no rows."""
        shifted = FreeComplex.__new__(FreeComplex)
        shifted.ring = self.ring
        shifted.matrices = [()] + list(self.matrices)
        shifted.ranks = [0] + list(self.ranks)
        shifted.length = self.length + 1
        return shifted

    def column_data(self) -> Tuple[List[List[dict]], List[int]]:
        cols = [columns_as_vectors(m) for m in self.matrices]
        return cols, list(self.ranks)


def koszul_complex(ring: RingLike, elements: Sequence[Polynomial]) -> FreeComplex:
    """Koszul complex on the given elements (used as a chi test complex)."""
    S = ambient_of(ring)
    elems = [S.parse(e) if isinstance(e, str) else e for e in elements]
    n = len(elems)
    subsets = [list(itertools.combinations(range(n), k)) for k in range(n + 1)]
    matrices = []
    for k in range(1, n + 1):
        rows = []
        for target in subsets[k - 1]:
            row = []
            for source in subsets[k]:
                entry = S.zero()
                for pos, idx in enumerate(source):
                    rest = tuple(x for x in source if x != idx)
                    if rest == target:
                        sign = -1 if pos % 2 else 1
                        entry = elems[idx].scale(sign)
                row.append(entry)
            rows.append(tuple(row))
        matrices.append(tuple(rows))
    return FreeComplex(ring, matrices)


# ---------------------------------------------------------------------------
# lengths and theta


def length(M: ModulePresentation):
    """Length of M (k-dimension), or INFINITE."""
    return module_length(M)


def theta(M: ModulePresentation, N: ModulePresentation) -> int:
    """Stable difference of high Tor lengths, with a periodicity witness."""
    if M.ring is not N.ring:
        raise ValueError("modules must share a ring")
    d = ring_dimension(M.ring)
    e = (d + 1) // 2  # least e with 2e >= d
    base = 2 * e
    lengths = {}
    for i in range(base + 1, base + 5):
        try:
            lengths[i] = tor_length(M, N, i)
        except InfiniteLength as exc:
            raise NonIsolatedSingularity(
                f"Tor_{i} has infinite length; the singularity is not isolated"
            ) from exc
    if lengths[base + 1] != lengths[base + 3] or lengths[base + 2] != lengths[base + 4]:
        raise PeriodicityViolation(
            f"Tor window not 2-periodic: {lengths}"
        )
    return lengths[base + 2] - lengths[base + 1]


def theta_class(
    alpha: ClassExpression, beta: ClassExpression,
    registry: Dict[str, ModulePresentation],
) -> int:
    """Bilinear extension of theta to formal combinations."""
    total = 0
    for name_a, ca in alpha.items():
        for name_b, cb in beta.items():
            total += ca * cb * theta(registry[name_a], registry[name_b])
    return total


# ---------------------------------------------------------------------------
# Euler characteristics


def chi_complex(
    F: FreeComplex, alpha: ClassExpression,
    registry: Dict[str, ModulePresentation],
) -> int:
    """Alternating sum of homology lengths of F tensored with alpha."""
    diff_cols, ranks = F.column_data()
    total = 0
    for name, coeff in alpha.items():
        M = registry[name]
        acc = 0
        for i in range(F.length + 1):
            H = complex_homology(F.ring, diff_cols, ranks, M, i)
            ell = module_length(H)
            if ell is INFINITE:
                raise InfiniteLength(
                    f"H_{i} of the complex tensored with {name} has infinite length"
                )
            acc += (-1) ** i * ell
        total += coeff * acc
    return total


def finite_pd(M: ModulePresentation) -> Optional[int]:
    """Projective dimension if finite (resolution probed to dim + 2), else None."""
    d = ring_dimension(M.ring)
    res = minimal_resolution(M, d + 2)
    b = res.betti
    for i, bi in enumerate(b):
        if bi == 0:
            return max(i - 1, 0)
    return None


def chi_modules(N0: ModulePresentation, M: ModulePresentation) -> int:
    """chi(N0, M) through the finite free resolution of N0."""
    if module_length(N0) is INFINITE:
        raise NotFiniteLength("first argument must have finite length")
    pd = finite_pd(N0)
    if pd is None:
        raise NotFinitePd("first argument must have finite projective dimension")
    res = minimal_resolution(N0, max(pd, 1))
    diff_cols = [res.differential_columns(i + 1) for i in range(pd)]
    ranks = res.betti[: pd + 1]
    total = 0
    for i in range(pd + 1):
        H = complex_homology(N0.ring, diff_cols, ranks, M, i)
        ell = module_length(H)
        if ell is INFINITE:
            raise InfiniteLength(f"Tor_{i} against the second argument is infinite")
        total += (-1) ** i * ell
    return total


# ---------------------------------------------------------------------------
# local lengths and divisor classes


def _power_products(S, gens: Sequence[Polynomial], power: int) -> List[Polynomial]:
    if power == 0:
        return [S.one()]
    out = []
    for combo in itertools.combinations_with_replacement(range(len(gens)), power):
        p = S.one()
        for idx in combo:
            p = p * gens[idx]
        out.append(p)
    return out


def local_length_at_prime(M: ModulePresentation, prime: Sequence[Polynomial]) -> int:
    """Length of M localized at a height-one graded prime, via the ranks of
    the graded pieces p^i M / p^(i+1) M over A/p."""
    ring = M.ring
    S = ambient_of(ring)
    if any(w != 1 for w in S.weights):
        raise ValueError("local lengths require all weights equal to 1")
    prime = [S.parse(p) if isinstance(p, str) else p for p in prime]
    d = ring_dimension(ring)
    Ap = ModulePresentation.cyclic(ring, prime)
    if module_dimension(Ap) != d - 1:
        raise DimensionMismatch(
            f"V(p) has dimension {module_dimension(Ap)}, expected {d - 1}"
        )
    e_p = gb_multiplicity(Ap.presentation_gb())
    if M.nrows == 0:
        return 0
    total = 0
    Q_cols = M.columns()
    for power in range(256):
        num = []
        for prod in _power_products(S, prime, power):
            prod = reduce_mod_f(prod, ring)
            for j in range(M.nrows):
                num.append({(j, m): c for m, c in prod.coeffs.items()})
        den = []
        for prod in _power_products(S, prime, power + 1):
            prod = reduce_mod_f(prod, ring)
            for j in range(M.nrows):
                den.append({(j, m): c for m, c in prod.coeffs.items()})
        den += Q_cols
        graded_piece = subquotient_presentation(ring, M.nrows, num, den)
        dim = module_dimension(graded_piece)
        if dim < d - 1:
            return total
        e_piece = gb_multiplicity(graded_piece.presentation_gb())
        rank, remainder = divmod(e_piece, e_p)
        if remainder:
            raise AlgebraError(
                "graded-piece multiplicity is not a multiple of e(A/p); "
                "the supplied ideal is probably not prime"
            )
        if rank == 0:
            return total
        total += rank
    raise AlgebraError("local length did not terminate; M_p may have infinite length")


def c1_torsion(
    M: ModulePresentation,
    candidate_primes: Sequence[Tuple[str, Sequence[Polynomial]]],
) -> DivisorClass:
    """Divisor class sum_p l_p(M) [p] over the supplied height-one primes.

    The caller guarantees the list covers every top-dimensional component of
    the support; an additivity audit warns when one is missing."""
    ring = M.ring
    d = ring_dimension(ring)
    dim_m = module_dimension(M)
    if dim_m >= d:
        raise AlgebraError("module is not torsion: support has full dimension")
    coeffs = {}
    for name, gens in candidate_primes:
        coeffs[name] = local_length_at_prime(M, gens)
    if dim_m == d - 1 and d - 1 >= 1:
        S = ambient_of(ring)
        e_m = gb_multiplicity(M.presentation_gb())
        audit = 0
        for name, gens in candidate_primes:
            if coeffs[name]:
                prime = [S.parse(p) if isinstance(p, str) else p for p in gens]
                Ap = ModulePresentation.cyclic(ring, prime)
                audit += coeffs[name] * gb_multiplicity(Ap.presentation_gb())
        if audit != e_m:
            warnings.warn(
                f"multiplicity audit failed: sum l_p e(A/p) = {audit} "
                f"but e(M) = {e_m}; a support component may be missing",
                MultiplicityAuditWarning,
            )
    return DivisorClass.of(coeffs)
