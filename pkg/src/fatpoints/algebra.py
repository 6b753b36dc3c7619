"""Exact coefficient fields, projective points, and homogeneous ternary forms.

Everything here is immutable and pure: scalars are ``fractions.Fraction``
over the rationals or plain residues over a prime field, points are
normalized coordinate triples, and polynomials are sorted term tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class AlgebraError(Exception):
    """Base class for algebraic precondition failures."""


class FieldMismatchError(AlgebraError):
    """Operands live over different coefficient fields."""


class CharacteristicTooSmallError(AlgebraError):
    """A derivative-based condition is unreliable at this characteristic."""


class ReductionError(AlgebraError):
    """A rational value has no image in the requested prime field."""


# ---------------------------------------------------------------------------
# primality (deterministic Miller-Rabin, valid for all 64-bit inputs)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime_31(rng) -> int:
    """Draw a random 31-bit prime from a seeded ``random.Random``."""
    while True:
        c = rng.randrange(1 << 30, 1 << 31) | 1
        if is_prime(c):
            return c


# ---------------------------------------------------------------------------
# coefficient fields

class RationalField:
    """The rationals; scalars are ``Fraction`` (always in lowest terms)."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, v) -> Fraction:
        if isinstance(v, str):
            return Fraction(v.strip())
        return Fraction(v)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return Fraction(a) / b

    def format(self, a) -> str:
        return str(Fraction(a))

    def parse(self, s: str) -> Fraction:
        return Fraction(s.strip())

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("fatpoints.QQ")


QQ = RationalField()


@dataclass(frozen=True)
class PrimeField:
    """The field with ``p`` elements; scalars are residues in ``[0, p)``."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def of(self, v) -> int:
        if isinstance(v, str):
            v = Fraction(v.strip())
        if isinstance(v, Fraction):
            den = v.denominator % self.p
            if den == 0:
                raise ReductionError(f"denominator of {v} vanishes mod {self.p}")
            return v.numerator * pow(den, -1, self.p) % self.p
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def format(self, a) -> str:
        return str(a % self.p)

    def parse(self, s: str) -> int:
        return self.of(s)

    def __repr__(self):
        return f"F_{self.p}"


def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_string(s: str):
    """Parse a field tag: ``"rational"`` or ``"prime:P"``."""
    s = s.strip()
    if s in ("rational", "QQ", "Q"):
        return QQ
    if s.startswith("prime:"):
        return PrimeField(int(s.split(":", 1)[1]))
    raise ValueError(f"unknown field tag {s!r}")


def field_to_string(field) -> str:
    if field == QQ:
        return "rational"
    return f"prime:{field.p}"


def check_same_field(a, b):
    if a != b:
        raise FieldMismatchError(f"field mismatch: {a!r} vs {b!r}")


# ---------------------------------------------------------------------------
# projective points

@dataclass(frozen=True)
class ProjectivePoint:
    """A point of P^2 stored by its canonical representative.

    The representative is scaled so that the last nonzero coordinate is 1,
    which makes equality and hashing coincide with projective equality.
    """

    field: object
    coords: tuple

    def __repr__(self):
        f = self.field
        return "(" + " : ".join(f.format(c) for c in self.coords) + ")"

    def integer_coords(self) -> tuple:
        """A primitive scaled representative with integer entries.

        Over the rationals the normalized coordinates are cleared of
        denominators and divided by their gcd; the last nonzero entry stays
        positive.  Over a prime field the residues are returned unchanged.
        """
        if self.field == QQ:
            den = math.lcm(*(c.denominator for c in self.coords))
            ints = [int(c * den) for c in self.coords]
            g = math.gcd(*ints)
            return tuple(v // g for v in ints)
        return tuple(int(c) for c in self.coords)


def point(field, a, b=None, c=None) -> ProjectivePoint:
    """Build a normalized projective point from three coordinates.

    Accepts ``point(field, (a, b, c))`` or ``point(field, a, b, c)``.
    """
    if b is None and c is None:
        a, b, c = a
    coords = (field.of(a), field.of(b), field.of(c))
    last = None
    for j in (2, 1, 0):
        if coords[j] != field.zero:
            last = j
            break
    if last is None:
        raise ValueError("(0 : 0 : 0) is not a projective point")
    inv = field.inv(coords[last])
    return ProjectivePoint(field, tuple(field.mul(x, inv) for x in coords))


# ---------------------------------------------------------------------------
# homogeneous polynomials in x, y, z

@lru_cache(maxsize=None)
def monomial_basis(d: int) -> tuple:
    """Exponent triples of degree ``d`` in graded lexicographic order, x > y > z.

    The list has C(d+2, 2) entries starting at ``(d, 0, 0)`` and ending at
    ``(0, 0, d)``; the order is fixed so kernels and reports are reproducible.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    return tuple(
        (a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)
    )


_VARS = ("x", "y", "z")


@dataclass(frozen=True)
class HomoPoly:
    """A homogeneous ternary form: sorted nonzero terms of one degree.

    The zero form is the empty term tuple (of whatever declared degree).
    """

    field: object
    degree: int
    terms: tuple  # ((a, b, c), coefficient), graded-lex sorted

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, mono):
        for m, c in self.terms:
            if m == mono:
                return c
        return self.field.zero

    def coeff_vector(self) -> list:
        """Coefficients against ``monomial_basis(degree)``, zeros included."""
        lookup = dict(self.terms)
        z = self.field.zero
        return [lookup.get(m, z) for m in monomial_basis(self.degree)]

    def __add__(self, other):
        check_same_field(self.field, other.field)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        acc = dict(self.terms)
        f = self.field
        for m, c in other.terms:
            acc[m] = f.add(acc.get(m, f.zero), c)
        return poly(self.field, self.degree, acc)

    def __mul__(self, other):
        check_same_field(self.field, other.field)
        f = self.field
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                acc[m] = f.add(acc.get(m, f.zero), f.mul(c1, c2))
        return poly(f, self.degree + other.degree, acc)

    def scaled(self, c) -> "HomoPoly":
        f = self.field
        c = f.of(c)
        return poly(f, self.degree, {m: f.mul(v, c) for m, v in self.terms})

    def power(self, n: int) -> "HomoPoly":
        if n < 0:
            raise ValueError("negative power")
        result = poly(self.field, 0, {(0, 0, 0): self.field.one})
        for _ in range(n):
            result = result * self
        return result

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for m, c in self.terms:
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(_VARS, m)
                if e
            )
            cs = self.field.format(c)
            if mono:
                parts.append(mono if cs == "1" else f"-{mono}" if cs == "-1" else f"{cs}*{mono}")
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")


def poly(field, degree: int, coeffs: dict) -> HomoPoly:
    """Build a form of the stated degree from an exponent-to-coefficient map."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    cleaned = {}
    for m, c in coeffs.items():
        m = tuple(int(e) for e in m)
        if len(m) != 3 or any(e < 0 for e in m) or sum(m) != degree:
            raise ValueError(f"exponent {m} does not have degree {degree}")
        c = field.of(c)
        if c != field.zero:
            cleaned[m] = c
    terms = tuple(sorted(cleaned.items(), key=lambda t: t[0], reverse=True))
    return HomoPoly(field, degree, terms)


def zero_poly(field, degree: int) -> HomoPoly:
    return HomoPoly(field, degree, ())


def linear_form(field, coeffs) -> HomoPoly:
    a, b, c = coeffs
    return poly(field, 1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})


def poly_from_vector(field, degree: int, vector) -> HomoPoly:
    """Inverse of ``coeff_vector``: a form from coefficients in basis order."""
    mons = monomial_basis(degree)
    if len(vector) != len(mons):
        raise ValueError("coefficient vector has wrong length")
    return poly(field, degree, dict(zip(mons, vector)))


def evaluate(f: HomoPoly, P: ProjectivePoint):
    """Evaluate ``f`` at the normalized representative of ``P``."""
    check_same_field(f.field, P.field)
    fld = f.field
    x, y, z = P.coords
    acc = fld.zero
    for (a, b, c), coef in f.terms:
        term = coef
        if a:
            term = fld.mul(term, _pow_scalar(fld, x, a))
        if b:
            term = fld.mul(term, _pow_scalar(fld, y, b))
        if c:
            term = fld.mul(term, _pow_scalar(fld, z, c))
        acc = fld.add(acc, term)
    return acc


def _pow_scalar(field, v, e):
    r = field.one
    for _ in range(e):
        r = field.mul(r, v)
    return r


def partial_derivative(f: HomoPoly, var: int) -> HomoPoly:
    """Formal partial derivative with respect to variable 0, 1 or 2.

    Over F_p coefficients pick up the exponent mod p, so terms can vanish;
    e.g. d/dx of x^3 is the zero form over F_3.
    """
    if f.degree < 1:
        raise ValueError("cannot differentiate a degree-0 form")
    if var not in (0, 1, 2):
        raise ValueError("variable index must be 0, 1 or 2")
    fld = f.field
    acc = {}
    for m, c in f.terms:
        e = m[var]
        if e == 0:
            continue
        new = list(m)
        new[var] = e - 1
        acc[tuple(new)] = fld.mul(c, fld.of(e))
    return poly(fld, f.degree - 1, acc)


# ---------------------------------------------------------------------------
# order of vanishing via a linear change of coordinates

def _coordinate_frame(P: ProjectivePoint):
    """Columns of an invertible matrix sending (1 : 0 : 0) to ``P``.

    The first column is the normalized representative of ``P``; the other
    two are the standard basis vectors away from its trailing 1, so the
    determinant is a unit.
    """
    fld = P.field
    last = max(j for j in range(3) if P.coords[j] != fld.zero)
    cols = [P.coords]
    for k in range(3):
        if k != last:
            cols.append(tuple(fld.one if i == k else fld.zero for i in range(3)))
    # rows of the substitution: x_i -> sum_k M[i][k] u_k
    return [tuple(cols[k][i] for k in range(3)) for i in range(3)]


@lru_cache(maxsize=4096)
def _monomial_expansions(P: ProjectivePoint, d: int) -> tuple:
    """Each degree-``d`` basis monomial rewritten in coordinates centered at ``P``.

    Entry i is the expansion of ``monomial_basis(d)[i]`` as a term tuple in
    the new variables, where ``P`` sits at (1 : 0 : 0).
    """
    fld = P.field
    rows = _coordinate_frame(P)
    forms = [linear_form(fld, r) for r in rows]
    unit = poly(fld, 0, {(0, 0, 0): fld.one})
    pows = []
    for fm in forms:
        cur = [unit]
        for _ in range(d):
            cur.append(cur[-1] * fm)
        pows.append(cur)
    out = []
    for (a, b, c) in monomial_basis(d):
        out.append((pows[0][a] * pows[1][b] * pows[2][c]).terms)
    return tuple(out)


def recentered_at(f: HomoPoly, P: ProjectivePoint) -> HomoPoly:
    """Rewrite ``f`` in coordinates where ``P`` is (1 : 0 : 0)."""
    check_same_field(f.field, P.field)
    fld = f.field
    expansions = _monomial_expansions(P, f.degree)
    mons = monomial_basis(f.degree)
    index = {m: i for i, m in enumerate(mons)}
    acc = {}
    for m, c in f.terms:
        for mono, coef in expansions[index[m]]:
            acc[mono] = fld.add(acc.get(mono, fld.zero), fld.mul(c, coef))
    return poly(fld, f.degree, acc)


def order_of_vanishing(f: HomoPoly, P: ProjectivePoint):
    """Multiplicity of ``f`` at ``P``; ``math.inf`` for the zero form.

    After moving ``P`` to (1 : 0 : 0) the local chart is u0 = 1, and the
    multiplicity is the least total degree in the remaining two variables
    among surviving terms.  This avoids iterated derivative tests and is
    valid in every characteristic.
    """
    if f.is_zero():
        return math.inf
    g = recentered_at(f, P)
    return min(b + c for (a, b, c), _ in g.terms)
