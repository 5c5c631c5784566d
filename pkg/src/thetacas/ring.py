"""Exact coefficient fields, weighted-graded polynomials, and ring contexts.

Coefficients live in Q (stored as ``fractions.Fraction``) or in a prime
field F_p (stored as least non-negative residues).  Monomials are exponent
tuples ordered by weighted graded reverse lexicographic order.  A
hypersurface ring is an ambient polynomial ring together with a nonzero
weighted-homogeneous defining polynomial f with f in m^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import CoefficientError, InhomogeneousError, ParseError


class _Infinite:
    """Sentinel for infinite lengths/counts."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means Q, p means F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or prime, got {p}")

    @property
    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    @property
    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def coerce(self, value: Union[int, Fraction]):
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise CoefficientError(
                    f"denominator {value.denominator} not invertible modulo {p}"
                )
            return value.numerator * pow(den, -1, p) % p
        return value % p

    def add(self, a, b):
        return (a + b) % self.characteristic if self.characteristic else a + b

    def sub(self, a, b):
        return (a - b) % self.characteristic if self.characteristic else a - b

    def mul(self, a, b):
        return (a * b) % self.characteristic if self.characteristic else a * b

    def neg(self, a):
        return (-a) % self.characteristic if self.characteristic else -a

    def inv(self, a):
        p = self.characteristic
        if p:
            if a % p == 0:
                raise CoefficientError(f"0 is not invertible modulo {p}")
            return pow(a, -1, p)
        if a == 0:
            raise CoefficientError("division by zero")
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))


Monomial = tuple  # exponent tuple, one entry per variable


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """Whether a divides b."""
    return all(x <= y for x, y in zip(a, b))

def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """b / a, assuming divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class PolynomialRing:
    """Ambient weighted-graded polynomial ring k[x_1..x_n]."""

    def __init__(self, field: FieldSpec, variables: Iterable[str], weights=None):
        self.field = field
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if not self.variables:
            raise ValueError("need at least one variable")
        if weights is None:
            weights = (1,) * len(self.variables)
        self.weights = tuple(int(w) for w in weights)
        if len(self.weights) != len(self.variables):
            raise ValueError("one weight per variable required")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        self.nvars = len(self.variables)
        self._var_index = {v: i for i, v in enumerate(self.variables)}
        self._one_mono = (0,) * self.nvars

    # -- monomial order: weighted graded reverse lexicographic ------------

    def mono_degree(self, m: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def mono_key(self, m: Monomial):
        """Sort key; larger key = larger monomial under weighted grevlex."""
        return (self.mono_degree(m), tuple(-e for e in reversed(m)))

    # -- polynomial constructors ------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {self._one_mono: c})

    def variable(self, name: str) -> "Polynomial":
        if name not in self._var_index:
            raise ParseError(f"unknown variable {name!r}")
        expo = [0] * self.nvars
        expo[self._var_index[name]] = 1
        return Polynomial(self, {tuple(expo): self.field.one})

    def monomial(self, m: Monomial, c=None) -> "Polynomial":
        c = self.field.one if c is None else self.field.coerce(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {tuple(m): c})

    def from_dict(self, coeffs) -> "Polynomial":
        clean = {}
        for m, c in coeffs.items():
            c = self.field.coerce(c)
            if c != 0:
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    # -- parsing / printing ------------------------------------------------

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def format(self, p: "Polynomial") -> str:
        if not p.coeffs:
            return "0"
        parts = []
        for m in sorted(p.coeffs, key=self.mono_key, reverse=True):
            c = p.coeffs[m]
            factors = []
            for name, e in zip(self.variables, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            neg = (isinstance(c, Fraction) and c < 0) or (
                self.field.characteristic == 0 and c < 0
            )
            mag = -c if neg else c
            if not body:
                coeff_txt = str(mag)
            elif mag == 1:
                coeff_txt = body
            else:
                coeff_txt = f"{mag}*{body}"
            if not parts:
                parts.append(f"-{coeff_txt}" if neg else coeff_txt)
            else:
                parts.append(f"- {coeff_txt}" if neg else f"+ {coeff_txt}")
        return " ".join(parts)

    def __repr__(self):
        p = self.field.characteristic
        base = "QQ" if p == 0 else f"GF({p})"
        return f"{base}[{', '.join(self.variables)}]"


class Polynomial:
    """Canonical-form sparse polynomial: exponent tuple -> nonzero coeff."""

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, ring: PolynomialRing, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs
        self._hash = None

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        """Terms sorted strictly descending in the monomial order."""
        key = self.ring.mono_key
        return [(m, self.coeffs[m]) for m in sorted(self.coeffs, key=key, reverse=True)]

    def lead_monomial(self) -> Monomial:
        if not self.coeffs:
            raise ValueError("zero polynomial has no lead term")
        return max(self.coeffs, key=self.ring.mono_key)

    def lead_coeff(self):
        return self.coeffs[self.lead_monomial()]

    def constant_coeff(self):
        return self.coeffs.get(self.ring._one_mono, self.ring.field.zero)

    def is_constant(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {self.ring._one_mono}

    def weighted_degree(self) -> int:
        """Common weighted degree of all terms; error if inhomogeneous."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        degs = {self.ring.mono_degree(m) for m in self.coeffs}
        if len(degs) != 1:
            raise InhomogeneousError(
                f"terms have weighted degrees {sorted(degs)}"
            )
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({self.ring.mono_degree(m) for m in self.coeffs}) <= 1

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        field = self.ring.field
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = field.add(out.get(m, field.zero), c)
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {m: field.neg(c) for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        field = self.ring.field
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = mono_mul(m1, m2)
                s = field.add(out.get(m, field.zero), field.mul(c1, c2))
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ring.field.coerce(c)
        if c == 0:
            return self.ring.zero()
        field = self.ring.field
        return Polynomial(self.ring, {m: field.mul(c, v) for m, v in self.coeffs.items()})

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring is other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.ring), frozenset(self.coeffs.items())))
        return self._hash

    def __str__(self):
        return self.ring.format(self)

    def __repr__(self):
        return f"<{self}>"


class _Parser:
    """Recursive-descent parser for the polynomial text grammar.

    Grammar: integers, variable names, ``+ - * / ^ ( )`` with usual
    precedence; ``/`` only by a nonzero integer.
    """

    def __init__(self, ring: PolynomialRing, text: str):
        self.ring = ring
        self.text = text
        self.pos = 0

    def parse(self) -> Polynomial:
        result = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected input at position {self.pos}: {self.text[self.pos:]!r}")
        return result

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expr(self) -> Polynomial:
        sign = 1
        ch = self._peek()
        if ch in "+-":
            self.pos += 1
            sign = -1 if ch == "-" else 1
        result = self._term()
        if sign < 0:
            result = -result
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                result = result + self._term()
            elif ch == "-":
                self.pos += 1
                result = result - self._term()
            else:
                return result

    def _term(self) -> Polynomial:
        result = self._power()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                result = result * self._power()
            elif ch == "/":
                self.pos += 1
                divisor = self._power()
                if not divisor.is_constant() or divisor.is_zero():
                    raise ParseError("division only by a nonzero integer")
                result = result.scale(self.ring.field.inv(divisor.constant_coeff()))
            else:
                return result

    def _power(self) -> Polynomial:
        base = self._atom()
        if self._peek() == "^":
            self.pos += 1
            exp = self._integer()
            if exp < 0:
                raise ParseError("negative exponent")
            result = self.ring.one()
            for _ in range(exp):
                result = result * base
            return result
        return base

    def _atom(self) -> Polynomial:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            inner = self._expr()
            if self._peek() != ")":
                raise ParseError("missing closing parenthesis")
            self.pos += 1
            return inner
        if ch == "-":
            self.pos += 1
            return -self._atom()
        if ch.isdigit():
            return self.ring.constant(self._integer())
        if ch.isalpha() or ch == "_":
            return self.ring.variable(self._name())
        raise ParseError(f"unexpected character {ch!r} at position {self.pos}")

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected integer at position {start}")
        return int(self.text[start:self.pos])

    def _name(self) -> str:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start:self.pos]


class HypersurfaceRing:
    """Graded hypersurface ring A = S/(f) of dimension n - 1.

    f must be nonzero, weighted-homogeneous, and lie in m^2 (every term of
    weighted degree >= 2 * min weight).
    """

    def __init__(self, ambient: PolynomialRing, f: Polynomial):
        if f.ring is not ambient:
            raise ValueError("f must live in the ambient ring")
        if f.is_zero():
            raise ValueError("f must be nonzero")
        deg = f.weighted_degree()  # raises InhomogeneousError if not graded
        if deg < 2 * min(ambient.weights):
            raise ValueError(
                f"f has weighted degree {deg} < 2*min(weights); not in m^2"
            )
        self.ambient = ambient
        self.f = f
        self.dimension = ambient.nvars - 1

    @property
    def field(self):
        return self.ambient.field

    @property
    def variables(self):
        return self.ambient.variables

    @property
    def weights(self):
        return self.ambient.weights

    def __repr__(self):
        return f"{self.ambient!r}/({self.f})"


RingLike = Union[PolynomialRing, HypersurfaceRing]


def ambient_of(ring: RingLike) -> PolynomialRing:
    return ring.ambient if isinstance(ring, HypersurfaceRing) else ring


def modulus_of(ring: RingLike):
    """The defining polynomial, or None for a plain polynomial ring."""
    return ring.f if isinstance(ring, HypersurfaceRing) else None


def ring_dimension(ring: RingLike) -> int:
    if isinstance(ring, HypersurfaceRing):
        return ring.dimension
    return ring.nvars


def parse_polynomial(text: str, ring: RingLike) -> Polynomial:
    return ambient_of(ring).parse(text)


def weighted_degree(p: Polynomial, ring: Optional[RingLike] = None) -> int:
    if ring is not None and ambient_of(ring) is not p.ring:
        raise ValueError("polynomial not over this ring")
    return p.weighted_degree()
