"""Linear systems of plane curves with assigned base multiplicities.

The dimension of the degree-d forms vanishing to order m_i at points P_i is
the corank of a condition matrix whose rows are derivative evaluations.
Ranks are computed either exactly (fraction-free elimination over cleared
integers) or modulo seeded 31-bit primes.  Modular ranks can only drop, so
a full-column-rank verdict modulo one prime already certifies emptiness of
the rational system; nonzero modular kernels are only certified after an
exact recomputation or a dimension count.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

import numpy as np

from .algebra import (
    QQ,
    AlgebraError,
    CharacteristicTooSmallError,
    HomoPoly,
    check_same_field,
    monomial_basis,
    order_of_vanishing,
    poly_from_vector,
    random_prime_31,
)


class CertificationError(AlgebraError):
    """An exact post-check of a computed kernel or rank failed."""


# ---------------------------------------------------------------------------
# schemes

@dataclass(frozen=True)
class FatPointScheme:
    """Distinct points with assigned vanishing multiplicities.

    Multiplicity 0 entries are allowed and impose no conditions; they
    naturally encode residual multiplicity vectors.
    """

    points: tuple
    multiplicities: tuple

    def __post_init__(self):
        pts = tuple(self.points)
        mults = tuple(int(m) for m in self.multiplicities)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "multiplicities", mults)
        if len(pts) != len(mults):
            raise ValueError("points and multiplicities differ in length")
        if not pts:
            raise ValueError("a scheme needs at least one point")
        fld = pts[0].field
        for p in pts[1:]:
            check_same_field(fld, p.field)
        if any(m < 0 for m in mults):
            raise ValueError("multiplicities must be non-negative")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")

    @property
    def field(self):
        return self.points[0].field

    @property
    def max_multiplicity(self) -> int:
        return max(self.multiplicities)

    @property
    def total_multiplicity(self) -> int:
        return sum(self.multiplicities)

    @classmethod
    def uniform(cls, points, k: int) -> "FatPointScheme":
        points = tuple(points)
        return cls(points, (k,) * len(points))


def expected_dim(scheme: FatPointScheme, d: int) -> int:
    """C(d+2, 2) minus the naive condition count; may be negative."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return comb(d + 2, 2) - sum(comb(m + 1, 2) for m in scheme.multiplicities)


def _check_characteristic(scheme: FatPointScheme, d: int):
    # Derivative rows need p > max(d, max m).  Simple points (all m <= 1)
    # impose plain evaluation conditions, valid in every characteristic.
    fld = scheme.field
    if fld == QQ:
        return
    if scheme.max_multiplicity <= 1:
        return
    bound = max(d, scheme.max_multiplicity)
    if fld.p <= bound:
        raise CharacteristicTooSmallError(
            f"F_{fld.p} is too small for degree {d} with multiplicities up to "
            f"{scheme.max_multiplicity}; need p > {bound}"
        )


# ---------------------------------------------------------------------------
# condition matrices

@dataclass(frozen=True)
class ConditionMatrix:
    """Rows of derivative conditions against the degree-d monomial basis.

    For each point with multiplicity m there is one row per derivative
    multi-index of order m-1, so C(m+1, 2) rows per point.  Over the
    rationals entries are integers (rows are evaluated at a primitive
    integer representative, which only rescales each row).
    """

    degree: int
    field: object
    row_labels: tuple  # (point index, derivative multi-index)
    rows: tuple

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return comb(self.degree + 2, 2)


def _falling(a: int, k: int) -> int:
    r = 1
    for i in range(k):
        r *= a - i
    return r


def build_condition_matrix(scheme: FatPointScheme, d: int) -> ConditionMatrix:
    """Exact condition matrix; entry = (beta-partial of monomial) at P_i."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    _check_characteristic(scheme, d)
    fld = scheme.field
    mons = monomial_basis(d)
    modulus = None if fld == QQ else fld.p
    rows = []
    labels = []
    for i, (P, m) in enumerate(zip(scheme.points, scheme.multiplicities)):
        if m == 0:
            continue
        coords = P.integer_coords()
        for beta in monomial_basis(m - 1):
            row = []
            for mu in mons:
                if mu[0] < beta[0] or mu[1] < beta[1] or mu[2] < beta[2]:
                    row.append(0)
                    continue
                v = (
                    _falling(mu[0], beta[0])
                    * _falling(mu[1], beta[1])
                    * _falling(mu[2], beta[2])
                    * coords[0] ** (mu[0] - beta[0])
                    * coords[1] ** (mu[1] - beta[1])
                    * coords[2] ** (mu[2] - beta[2])
                )
                row.append(v if modulus is None else v % modulus)
            rows.append(tuple(row))
            labels.append((i, beta))
    return ConditionMatrix(d, fld, tuple(labels), tuple(rows))


def condition_matrix_mod_p(scheme: FatPointScheme, d: int, p: int) -> np.ndarray:
    """The condition matrix reduced mod a 31-bit prime, built vectorized.

    For rational schemes this is the integer matrix mod p; reduction can
    only lower the rank, which keeps full-rank verdicts sound.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    _check_characteristic(scheme, d)
    mons = monomial_basis(d)
    A = np.array([m[0] for m in mons], dtype=np.int64)
    B = np.array([m[1] for m in mons], dtype=np.int64)
    C = np.array([m[2] for m in mons], dtype=np.int64)
    maxm = scheme.max_multiplicity
    # falling factorial table: fall[e, j] = e (e-1) ... (e-j+1) mod p
    fall = np.ones((d + 1, maxm + 1), dtype=np.int64)
    for j in range(1, maxm + 1):
        for e in range(d + 1):
            fall[e, j] = fall[e, j - 1] * ((e - j + 1) % p) % p
    rows = []
    for P, m in zip(scheme.points, scheme.multiplicities):
        if m == 0:
            continue
        coords = P.integer_coords()
        pows = []
        for c in coords:
            base = int(c) % p
            col = np.ones(d + 1, dtype=np.int64)
            for e in range(1, d + 1):
                col[e] = col[e - 1] * base % p
            pows.append(col)
        for beta in monomial_basis(m - 1):
            ea, eb, ec = A - beta[0], B - beta[1], C - beta[2]
            ok = (ea >= 0) & (eb >= 0) & (ec >= 0)
            row = fall[A, beta[0]] * fall[B, beta[1]] % p * fall[C, beta[2]] % p
            row = row * pows[0][np.where(ok, ea, 0)] % p
            row = row * pows[1][np.where(ok, eb, 0)] % p
            row = row * pows[2][np.where(ok, ec, 0)] % p
            rows.append(np.where(ok, row, 0))
    if not rows:
        return np.zeros((0, len(mons)), dtype=np.int64)
    return np.vstack(rows)


# ---------------------------------------------------------------------------
# elimination engines

def bareiss_echelon(rows):
    """Fraction-free row echelon form of an integer matrix.

    Returns (rank, pivot columns, echelon rows).  All intermediate values
    stay integral; each entry of the echelon form is a minor of the input,
    so bit growth is bounded and divisions are exact.
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    prev = 1
    rank = 0
    pivots = []
    for col in range(nc):
        piv = None
        for i in range(rank, nr):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pc = m[rank][col]
        for i in range(rank + 1, nr):
            row_i = m[i]
            row_r = m[rank]
            mic = row_i[col]
            if mic:
                for j in range(col + 1, nc):
                    row_i[j] = (pc * row_i[j] - mic * row_r[j]) // prev
            elif prev != 1 or pc != 1:
                for j in range(col + 1, nc):
                    row_i[j] = (pc * row_i[j]) // prev
            row_i[col] = 0
        prev = pc
        pivots.append(col)
        rank += 1
        if rank == nr:
            break
    return rank, pivots, m


def _primitive(vec) -> tuple:
    ints = [int(v) for v in vec]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(ints)


def rational_nullspace(rows, ncols: Optional[int] = None):
    """Primitive integer basis of the right kernel of an integer matrix.

    One basis vector per free column, back-substituted exactly through the
    Bareiss echelon form with Fraction arithmetic and then cleared of
    denominators.
    """
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        basis = []
        for f in range(ncols):
            v = [0] * ncols
            v[f] = 1
            basis.append(tuple(v))
        return basis
    rank, pivots, ech = bareiss_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            pc = pivots[i]
            s = Fraction(0)
            for j in range(pc + 1, ncols):
                if v[j]:
                    s += Fraction(ech[i][j]) * v[j]
            v[pc] = -s / ech[i][pc]
        den = math.lcm(*(x.denominator for x in v))
        basis.append(_primitive([x * den for x in v]))
    return basis


def modp_rref(A: np.ndarray, p: int):
    """Reduced row echelon form mod p; returns (rank, pivot cols, rref)."""
    A = A.copy() % p
    nr, nc = A.shape
    rank = 0
    pivots = []
    for col in range(nc):
        if rank >= nr:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        r = rank + int(nz[0])
        if r != rank:
            A[[rank, r]] = A[[r, rank]]
        inv = pow(int(A[rank, col]), -1, p)
        A[rank] = A[rank] * inv % p
        others = np.nonzero(A[:, col])[0]
        others = others[others != rank]
        if others.size:
            A[others] = (A[others] - A[others, col][:, None] * A[rank][None, :]) % p
        pivots.append(col)
        rank += 1
    return rank, pivots, A


def modp_nullspace(A: np.ndarray, p: int):
    """Kernel basis mod p, one vector per free column of the RREF."""
    nc = A.shape[1]
    rank, pivots, R = modp_rref(A, p)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * nc
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = int(-R[i, f]) % p
        basis.append(tuple(v))
    return basis


def rref_in_field(rows, fld):
    """Generic reduced row echelon form over any exact field.

    Used for the small geometric kernels (collinearity, common conics)
    where entries are field scalars rather than cleared integers.
    """
    m = [[fld.of(x) for x in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    pivots = []
    for col in range(nc):
        piv = None
        for i in range(rank, nr):
            if m[i][col] != fld.zero:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = fld.inv(m[rank][col])
        m[rank] = [fld.mul(x, inv) for x in m[rank]]
        for i in range(nr):
            if i != rank and m[i][col] != fld.zero:
                f = m[i][col]
                m[i] = [fld.sub(a, fld.mul(f, b)) for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == nr:
            break
    return rank, pivots, m


def nullspace_in_field(rows, fld, ncols: Optional[int] = None):
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        rank, pivots, rref = 0, [], []
    else:
        rank, pivots, rref = rref_in_field(rows, fld)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [fld.zero] * ncols
        v[f] = fld.one
        for i, pc in enumerate(pivots):
            v[pc] = fld.neg(rref[i][f])
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# rank strategies and certification levels

@dataclass(frozen=True)
class ExactRational:
    """Fraction-free elimination over cleared integers."""

    def label(self) -> str:
        return "EXACT_RATIONAL"


@dataclass(frozen=True)
class SinglePrime:
    """Elimination modulo one seeded random 31-bit prime."""

    seed: int = 0

    def label(self) -> str:
        return "SINGLE_PRIME"


@dataclass(frozen=True)
class MultiPrime:
    """Agreement of several distinct primes, escalating to exact on a split."""

    count: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("need at least one prime")

    def label(self) -> str:
        return f"MULTI_PRIME({self.count})"


DEFAULT_SEARCH_STRATEGY = MultiPrime(2)


def parse_strategy(s: str):
    s = s.strip().lower()
    if s == "exact":
        return ExactRational()
    if s == "prime":
        return SinglePrime()
    if s.startswith("multiprime:"):
        return MultiPrime(int(s.split(":", 1)[1]))
    if s == "multiprime":
        return MultiPrime()
    raise ValueError(f"unknown strategy {s!r}")


def strategy_primes(strategy) -> tuple:
    """The deterministic prime sequence a modular strategy will use."""
    if isinstance(strategy, SinglePrime):
        n, seed = 1, strategy.seed
    elif isinstance(strategy, MultiPrime):
        n, seed = strategy.count, strategy.seed
    else:
        return ()
    rng = random.Random(f"fatpoints.primes:{seed}")
    primes = []
    while len(primes) < n:
        q = random_prime_31(rng)
        if q not in primes:
            primes.append(q)
    return tuple(primes)


# ---------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class LinearSystemReport:
    """Outcome of one (scheme, degree) dimension computation.

    ``actual_dim`` is the vector-space dimension of the degree-d part of
    the ideal.  ``emptiness_certified`` is true whenever ``actual_dim`` is 0:
    a full column rank modulo any prime already bounds the exact rank from
    below.  ``existence_certified`` names the certificate for a nonzero
    dimension ("expected_dim", "kernel") or is None if only modular
    evidence exists.
    """

    degree: int
    expected_dim: int
    actual_dim: int
    superabundance: int
    certification: str
    rank: int
    nrows: int
    ncols: int
    primes: tuple = ()
    kernel: Optional[tuple] = None
    existence_certified: Optional[str] = None

    @property
    def emptiness_certified(self) -> bool:
        return self.actual_dim == 0

    def to_json_dict(self) -> dict:
        d = {
            "schema": "fatpoints/1",
            "kind": "linear_system_report",
            "degree": self.degree,
            "expected_dim": self.expected_dim,
            "actual_dim": self.actual_dim,
            "superabundance": self.superabundance,
            "certification": self.certification,
            "rank": self.rank,
            "nrows": self.nrows,
            "ncols": self.ncols,
            "primes": list(self.primes),
            "existence_certified": self.existence_certified,
        }
        if self.kernel is not None:
            d["kernel"] = [_poly_json(g) for g in self.kernel]
        return d


def _poly_json(g: HomoPoly) -> dict:
    return {
        "degree": g.degree,
        "terms": [[list(m), g.field.format(c)] for m, c in g.terms],
    }


@dataclass(frozen=True)
class AlphaReport:
    """Initial degrees of the uniform fat-point schemes kZ for k = 1..k_max."""

    alphas: tuple
    diffs: tuple
    entries: tuple  # one summary dict per k
    seed: Optional[int] = None

    def __post_init__(self):
        a = tuple(self.alphas)
        if any(y <= x for x, y in zip(a, a[1:])):
            raise ValueError(f"alpha sequence must be strictly increasing: {a}")

    def to_json_dict(self) -> dict:
        return {
            "schema": "fatpoints/1",
            "kind": "alpha_report",
            "alphas": list(self.alphas),
            "diffs": list(self.diffs),
            "seed": self.seed,
            "entries": [dict(e) for e in self.entries],
        }

    def to_csv(self) -> str:
        lines = ["k,alpha,diff"]
        for i, a in enumerate(self.alphas):
            diff = "" if i == 0 else str(self.diffs[i - 1])
            lines.append(f"{i + 1},{a},{diff}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# dimension computation

def _verify_kernel(scheme: FatPointScheme, polys) -> None:
    for g in polys:
        for P, m in zip(scheme.points, scheme.multiplicities):
            if m and order_of_vanishing(g, P) < m:
                raise CertificationError(
                    f"kernel element fails the multiplicity-{m} check at {P}"
                )


def _exact_report(scheme, d, want_kernel):
    mat = build_condition_matrix(scheme, d)
    ncols = mat.ncols
    fld = scheme.field
    if fld == QQ:
        rank, pivots, ech = bareiss_echelon(mat.rows)
        kernel = None
        if want_kernel:
            vectors = rational_nullspace(list(mat.rows), ncols)
            kernel = tuple(poly_from_vector(QQ, d, v) for v in vectors)
            _verify_kernel(scheme, kernel)
        certification = "EXACT_RATIONAL"
        primes = ()
    else:
        p = fld.p
        A = np.array([[x % p for x in r] for r in mat.rows], dtype=np.int64)
        if A.size == 0:
            A = A.reshape(0, ncols)
        rank, pivots, R = modp_rref(A, p)
        kernel = None
        if want_kernel:
            vectors = modp_nullspace(A, p)
            kernel = tuple(poly_from_vector(fld, d, v) for v in vectors)
            _verify_kernel(scheme, kernel)
        certification = "SINGLE_PRIME"
        primes = (p,)
    exp = expected_dim(scheme, d)
    actual = ncols - rank
    existence = None
    if actual > 0:
        existence = "expected_dim" if exp > 0 else "kernel" if want_kernel else "rank"
    return LinearSystemReport(
        degree=d,
        expected_dim=exp,
        actual_dim=actual,
        superabundance=actual - max(exp, 0),
        certification=certification,
        rank=rank,
        nrows=mat.nrows,
        ncols=ncols,
        primes=primes,
        kernel=kernel,
        existence_certified=existence,
    )


def _modular_report(scheme, d, strategy):
    primes = strategy_primes(strategy)
    ncols = comb(d + 2, 2)
    ranks = []
    for p in primes:
        A = condition_matrix_mod_p(scheme, d, p)
        rank, _, _ = modp_rref(A, p)
        ranks.append(rank)
        nrows = A.shape[0]
    if len(set(ranks)) > 1:
        # primes disagree: escalate to the exact computation
        return _exact_report(scheme, d, want_kernel=False)
    rank = ranks[0]
    exp = expected_dim(scheme, d)
    actual = ncols - rank
    existence = None
    if actual > 0 and exp > 0:
        existence = "expected_dim"
    return LinearSystemReport(
        degree=d,
        expected_dim=exp,
        actual_dim=actual,
        superabundance=actual - max(exp, 0),
        certification=strategy.label(),
        rank=rank,
        nrows=nrows,
        ncols=ncols,
        primes=primes,
        kernel=None,
        existence_certified=existence,
    )


def system_dim(
    scheme: FatPointScheme,
    d: int,
    strategy=DEFAULT_SEARCH_STRATEGY,
    want_kernel: bool = False,
    cache=None,
) -> LinearSystemReport:
    """Dimension report of the degree-``d`` part of the fat-point ideal.

    ``actual_dim`` = C(d+2, 2) - rank of the condition matrix, with the rank
    computed per the requested strategy.  Schemes over a prime field are
    always eliminated exactly over that field.
    """
    if cache is not None:
        hit = cache.get_report(scheme, d, strategy, want_kernel)
        if hit is not None:
            return hit
    if scheme.field != QQ or isinstance(strategy, ExactRational) or want_kernel:
        report = _exact_report(scheme, d, want_kernel)
    else:
        report = _modular_report(scheme, d, strategy)
    if cache is not None:
        cache.put_report(scheme, d, strategy, want_kernel, report)
    return report


def kernel_basis(scheme: FatPointScheme, d: int, strategy=ExactRational()):
    """Basis of the degree-``d`` part as polynomials, multiplicity-verified.

    The default is the exact rational computation.  Passing a SinglePrime
    strategy is an explicit acceptance of a basis over one prime field: a
    rational scheme is reduced mod that prime first, and the returned
    polynomials live over it.
    """
    if scheme.field == QQ and isinstance(strategy, SinglePrime):
        from .algebra import PrimeField, point as make_point

        p = strategy_primes(strategy)[0]
        fld = PrimeField(p)
        reduced = FatPointScheme(
            tuple(
                make_point(fld, *(c % p for c in P.integer_coords()))
                for P in scheme.points
            ),
            scheme.multiplicities,
        )
        report = system_dim(reduced, d, want_kernel=True)
        return list(report.kernel)
    if scheme.field == QQ and not isinstance(strategy, ExactRational):
        raise ValueError(
            "kernel bases over rational schemes need the exact strategy "
            "or the explicit single-prime acceptance"
        )
    report = system_dim(scheme, d, strategy=strategy, want_kernel=True)
    return list(report.kernel)


# ---------------------------------------------------------------------------
# initial degrees

@dataclass(frozen=True)
class AlphaValue:
    """An initial degree together with how each side was certified."""

    value: int
    existence: Optional[str]  # "expected_dim" | "kernel" | None
    certification: str
    reports: tuple  # (degree, LinearSystemReport) pairs seen by the search

    @property
    def fully_certified(self) -> bool:
        # Degrees below the value are always certified empty (full modular
        # column rank bounds the exact rank from below).
        return self.existence in ("expected_dim", "kernel", "rank")


def _alpha_search(
    scheme: FatPointScheme,
    strategy=DEFAULT_SEARCH_STRATEGY,
    certify_existence: bool = False,
    start: Optional[int] = None,
    cache=None,
) -> AlphaValue:
    if scheme.max_multiplicity == 0:
        raise ValueError("alpha needs at least one positive multiplicity")
    d = max(scheme.max_multiplicity, 1)
    if start is not None:
        d = max(d, start)
    bound = scheme.total_multiplicity
    trail = []
    while True:
        report = system_dim(scheme, d, strategy=strategy, cache=cache)
        trail.append((d, report))
        if report.actual_dim >= 1:
            if report.existence_certified is None and certify_existence:
                exact = system_dim(
                    scheme, d, strategy=ExactRational(), want_kernel=True, cache=cache
                )
                trail.append((d, exact))
                if exact.actual_dim >= 1:
                    return AlphaValue(d, exact.existence_certified,
                                      exact.certification, tuple(trail))
                # the modular ranks undercounted; keep climbing
            else:
                return AlphaValue(d, report.existence_certified,
                                  report.certification, tuple(trail))
        d += 1
        if d > bound:
            raise CertificationError(
                "alpha search exceeded the product-of-lines bound; "
                "this indicates an elimination bug"
            )


def alpha(
    scheme: FatPointScheme,
    strategy=DEFAULT_SEARCH_STRATEGY,
    certify_existence: bool = False,
    cache=None,
) -> int:
    """Least degree with a nonzero form in the fat-point ideal."""
    return _alpha_search(scheme, strategy, certify_existence, cache=cache).value


def alpha_certified(scheme: FatPointScheme, cache=None) -> AlphaValue:
    """Alpha with an exact certificate on the existence side.

    Degrees below the result are certified empty by full modular column
    rank; the result degree is certified nonzero either by a positive
    dimension count or by an exact kernel that passes the multiplicity
    post-check.
    """
    return _alpha_search(scheme, DEFAULT_SEARCH_STRATEGY, True, cache=cache)


def alpha_sequence(
    points,
    k_max: int,
    strategy=DEFAULT_SEARCH_STRATEGY,
    certify_existence: bool = False,
    seed: Optional[int] = None,
    cache=None,
) -> AlphaReport:
    """Initial degrees of kZ for k = 1..k_max with warm-started searches."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    points = tuple(points)
    alphas = []
    entries = []
    start = None
    for k in range(1, k_max + 1):
        scheme = FatPointScheme.uniform(points, k)
        av = _alpha_search(scheme, strategy, certify_existence, start=start, cache=cache)
        alphas.append(av.value)
        entries.append(
            {
                "k": k,
                "alpha": av.value,
                "existence_certified": av.existence,
                "certification": av.certification,
            }
        )
        start = av.value + 1
    diffs = tuple(b - a for a, b in zip(alphas, alphas[1:]))
    return AlphaReport(tuple(alphas), diffs, tuple(entries), seed=seed)


def _vector_alpha(points, vec, strategy, certify, cache) -> int:
    if all(m == 0 for m in vec):
        return 0
    scheme = FatPointScheme(tuple(points), tuple(vec))
    return alpha(scheme, strategy=strategy, certify_existence=certify, cache=cache)


def alpha_diff(
    points,
    m_vec,
    n_vec,
    strategy=DEFAULT_SEARCH_STRATEGY,
    certify_existence: bool = False,
    cache=None,
) -> int:
    """alpha(I(m Z)) - alpha(I(n Z)) for componentwise m >= n, m != n.

    Inhomogeneous vectors are supported; an all-zero lower vector
    contributes initial degree 0.
    """
    m_vec = tuple(int(v) for v in m_vec)
    n_vec = tuple(int(v) for v in n_vec)
    points = tuple(points)
    if len(m_vec) != len(points) or len(n_vec) != len(points):
        raise ValueError("multiplicity vectors must match the point count")
    if any(a < b for a, b in zip(m_vec, n_vec)) or m_vec == n_vec:
        raise ValueError("need m >= n componentwise with m != n")
    if any(v < 0 for v in n_vec):
        raise ValueError("multiplicities must be non-negative")
    hi = _vector_alpha(points, m_vec, strategy, certify_existence, cache)
    lo = _vector_alpha(points, n_vec, strategy, certify_existence, cache)
    return hi - lo


def report_to_json(report) -> str:
    return json.dumps(report.to_json_dict(), sort_keys=True, separators=(",", ":"))


def report_from_json_dict(d: dict, field) -> LinearSystemReport:
    from .algebra import poly  # deferred to keep module import light

    kernel = None
    if "kernel" in d:
        kernel = tuple(
            poly(field, g["degree"], {tuple(m): field.parse(c) for m, c in g["terms"]})
            for g in d["kernel"]
        )
    return LinearSystemReport(
        degree=d["degree"],
        expected_dim=d["expected_dim"],
        actual_dim=d["actual_dim"],
        superabundance=d["superabundance"],
        certification=d["certification"],
        rank=d["rank"],
        nrows=d["nrows"],
        ncols=d["ncols"],
        primes=tuple(d.get("primes", ())),
        kernel=kernel,
        existence_certified=d.get("existence_certified"),
    )
