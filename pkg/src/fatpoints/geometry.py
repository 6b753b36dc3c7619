"""Exact incidence predicates and configuration detectors.

Detectors work from the lines spanned by point pairs.  For a set of at
least two points, every line of an arrangement whose intersection points
are exactly that set carries at least two of the points, so the spanned
lines are a complete candidate pool; the only incompleteness is the greedy
fallback used when the pool is too large to search exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .algebra import (
    QQ,
    HomoPoly,
    ProjectivePoint,
    check_same_field,
    evaluate,
    linear_form,
    monomial_basis,
    partial_derivative,
    point,
    poly_from_vector,
)
from .linsys import nullspace_in_field

EXHAUSTIVE_CANDIDATE_LIMIT = 12


@dataclass(frozen=True)
class Line:
    """A projective line, stored by coefficients with leading entry 1."""

    field: object
    coeffs: tuple

    @classmethod
    def from_coeffs(cls, field, coeffs) -> "Line":
        v = tuple(field.of(c) for c in coeffs)
        lead = next((c for c in v if c != field.zero), None)
        if lead is None:
            raise ValueError("a line needs a nonzero coefficient triple")
        inv = field.inv(lead)
        return cls(field, tuple(field.mul(c, inv) for c in v))

    @classmethod
    def through(cls, P: ProjectivePoint, Q: ProjectivePoint) -> "Line":
        check_same_field(P.field, Q.field)
        if P == Q:
            raise ValueError("two distinct points are needed to span a line")
        return cls.from_coeffs(P.field, _cross(P.field, P.coords, Q.coords))

    def contains(self, P: ProjectivePoint) -> bool:
        f = self.field
        acc = f.zero
        for c, x in zip(self.coeffs, P.coords):
            acc = f.add(acc, f.mul(c, x))
        return acc == f.zero

    def intersect(self, other: "Line") -> ProjectivePoint:
        if self == other:
            raise ValueError("coincident lines have no unique intersection")
        return point(self.field, _cross(self.field, self.coeffs, other.coeffs))

    def as_poly(self) -> HomoPoly:
        return linear_form(self.field, self.coeffs)

    def __repr__(self):
        f = self.field
        return "Line(" + ", ".join(f.format(c) for c in self.coeffs) + ")"


def _cross(field, u, v):
    return (
        field.sub(field.mul(u[1], v[2]), field.mul(u[2], v[1])),
        field.sub(field.mul(u[2], v[0]), field.mul(u[0], v[2])),
        field.sub(field.mul(u[0], v[1]), field.mul(u[1], v[0])),
    )


@dataclass(frozen=True)
class ArrangementWitness:
    """Lines whose pairwise intersections are exactly the configuration.

    ``incidence[i]`` lists the indices of witness lines through point i.
    ``exhaustive`` records whether the subset search was complete or greedy.
    """

    lines: tuple
    incidence: tuple
    exhaustive: bool = True

    def to_json_dict(self) -> dict:
        f = self.lines[0].field if self.lines else QQ
        return {
            "lines": [[f.format(c) for c in L.coeffs] for L in self.lines],
            "incidence": [list(ix) for ix in self.incidence],
            "exhaustive": self.exhaustive,
            "convention": "pair-spanned-lines",
        }


# ---------------------------------------------------------------------------
# basic predicates

def are_collinear(points) -> Optional[Line]:
    """A common line through all the points, if one exists.

    A single point vacuously lies on a line; a deterministic one through it
    is returned so that checker pipelines stay total.
    """
    points = tuple(points)
    if not points:
        raise ValueError("need at least one point")
    fld = points[0].field
    rows = [list(P.coords) for P in points]
    basis = nullspace_in_field(rows, fld, 3)
    if not basis:
        return None
    return Line.from_coeffs(fld, basis[0])


def common_conic(points) -> Optional[HomoPoly]:
    """A conic (possibly degenerate) through all the points, if one exists."""
    points = tuple(points)
    if not points:
        raise ValueError("need at least one point")
    fld = points[0].field
    mons = monomial_basis(2)
    rows = []
    for P in points:
        x, y, z = P.coords
        coords = {0: x, 1: y, 2: z}
        row = []
        for (a, b, c) in mons:
            v = fld.one
            for axis, e in ((0, a), (1, b), (2, c)):
                for _ in range(e):
                    v = fld.mul(v, coords[axis])
            row.append(v)
        rows.append(row)
    basis = nullspace_in_field(rows, fld, 6)
    if not basis:
        return None
    lead = next(c for c in basis[0] if c != fld.zero)
    inv = fld.inv(lead)
    return poly_from_vector(fld, 2, [fld.mul(c, inv) for c in basis[0]])


# ---------------------------------------------------------------------------
# spanned-line machinery

def spanned_lines(points):
    """Distinct lines through point pairs, each with its incidence set."""
    points = tuple(points)
    seen = {}
    for i, j in itertools.combinations(range(len(points)), 2):
        L = Line.through(points[i], points[j])
        if L not in seen:
            seen[L] = frozenset(
                k for k, P in enumerate(points) if L.contains(P)
            )
    return list(seen.items())


def _witness_from(lines, masks, points):
    incidence = tuple(
        tuple(i for i, mask in enumerate(masks) if mask >> k & 1)
        for k in range(len(points))
    )
    return lines, incidence


def detect_line_arrangement(points) -> Optional[ArrangementWitness]:
    """Search for line arrangements whose intersection set equals the points.

    Candidates are the pair-spanned lines.  A subset is a witness when every
    point lies on at least two chosen lines and every pairwise intersection
    of chosen lines is a configuration point.  Up to 12 candidates every
    subset is tried (smallest first); past that a greedy pass adds lines by
    point richness while refusing any line that intersects a chosen one
    outside the configuration, and the witness is flagged non-exhaustive.
    """
    points = tuple(points)
    if len(points) < 2:
        raise ValueError("need at least two points")
    point_set = set(points)
    cands = spanned_lines(points)
    # deterministic order: richest lines first, then by coefficient string
    cands.sort(key=lambda lc: (-len(lc[1]), repr(lc[0])))
    lines = [L for L, _ in cands]
    n = len(lines)
    masks = [
        sum(1 << k for k, P in enumerate(points) if L.contains(P)) for L in lines
    ]
    meet_inside = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            inside = lines[i].intersect(lines[j]) in point_set
            meet_inside[i][j] = meet_inside[j][i] = inside
    full = (1 << len(points)) - 1
    if n <= EXHAUSTIVE_CANDIDATE_LIMIT:
        for size in range(2, n + 1):
            for combo in itertools.combinations(range(n), size):
                if any(
                    not meet_inside[i][j]
                    for a, i in enumerate(combo)
                    for j in combo[a + 1:]
                ):
                    continue
                once = twice = 0
                for i in combo:
                    twice |= once & masks[i]
                    once |= masks[i]
                if twice == full:
                    chosen = tuple(lines[i] for i in combo)
                    ws, incidence = _witness_from(chosen, [masks[i] for i in combo], points)
                    return ArrangementWitness(ws, incidence, True)
        return None
    chosen_idx = []
    for i in range(n):
        if all(meet_inside[i][j] for j in chosen_idx):
            chosen_idx.append(i)
    once = twice = 0
    for i in chosen_idx:
        twice |= once & masks[i]
        once |= masks[i]
    if len(chosen_idx) >= 2 and twice == full:
        chosen = tuple(lines[i] for i in chosen_idx)
        ws, incidence = _witness_from(chosen, [masks[i] for i in chosen_idx], points)
        return ArrangementWitness(ws, incidence, False)
    return None


def is_star_configuration(points) -> Optional[tuple]:
    """Detect the pairwise intersections of p lines in general position.

    Succeeds only when the point count is C(p, 2) for some p and there are
    p spanned lines, each through exactly p - 1 of the points, whose
    pairwise intersections are exactly the configuration.  Returns
    ``(p, lines)`` or None.
    """
    points = tuple(points)
    r = len(points)
    if r < 3:
        raise ValueError("need at least three points")
    p = 3
    while p * (p - 1) // 2 < r:
        p += 1
    if p * (p - 1) // 2 != r:
        return None
    rich = [L for L, inc in spanned_lines(points) if len(inc) == p - 1]
    if len(rich) < p:
        return None
    point_set = set(points)
    for combo in itertools.combinations(rich, p):
        pts = set()
        ok = True
        for L1, L2 in itertools.combinations(combo, 2):
            q = L1.intersect(L2)
            if q in pts or q not in point_set:
                ok = False
                break
            pts.add(q)
        if ok and pts == point_set:
            return p, tuple(combo)
    return None


def is_type9(points) -> bool:
    """Three general lines' vertices plus one extra point on each line.

    True exactly when there are six points, exactly three spanned lines
    carry three of them (none carries more), those lines form a triangle
    with vertices in the configuration, and the three leftover points sit
    one per line.
    """
    points = tuple(points)
    if len(points) != 6:
        return False
    by_count = {}
    for L, inc in spanned_lines(points):
        by_count.setdefault(len(inc), []).append((L, inc))
    if any(c >= 4 for c in by_count):
        return False
    rich = by_count.get(3, [])
    if len(rich) != 3:
        return False
    (L1, i1), (L2, i2), (L3, i3) = rich
    try:
        vertices = {L1.intersect(L2), L2.intersect(L3), L1.intersect(L3)}
    except ValueError:
        return False
    if len(vertices) != 3 or not vertices.issubset(set(points)):
        return False
    rest = [P for P in points if P not in vertices]
    if len(rest) != 3:
        return False
    for P in rest:
        if sum(1 for L in (L1, L2, L3) if L.contains(P)) != 1:
            return False
    # one extra point per line
    for L in (L1, L2, L3):
        if sum(1 for P in rest if L.contains(P)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# finite-field singular locus scan

def enumerate_projective_plane(field):
    """Canonical representatives of P^2(F_p), p^2 + p + 1 points."""
    p = field.p
    for a in range(p):
        for b in range(p):
            yield point(field, a, b, 1)
    for a in range(p):
        yield point(field, a, 1, 0)
    yield point(field, 1, 0, 0)


def singular_points_over_Fp(f: HomoPoly, p: Optional[int] = None):
    """All rational points where the three first partials vanish.

    Exhaustive scan; requires the field characteristic to exceed the
    degree so that the gradient detects singularities faithfully.
    """
    fld = f.field
    if fld == QQ:
        raise ValueError("the scan needs a prime-field polynomial")
    if p is not None and p != fld.p:
        raise ValueError(f"polynomial lives over F_{fld.p}, not F_{p}")
    if fld.p <= f.degree:
        raise ValueError(
            f"need p > degree for a faithful gradient scan (p={fld.p}, d={f.degree})"
        )
    grads = [partial_derivative(f, v) for v in range(3)]
    out = []
    for P in enumerate_projective_plane(fld):
        if all(g.is_zero() or evaluate(g, P) == 0 for g in grads):
            out.append(P)
    out.sort(key=lambda P: tuple(int(c) for c in P.coords))
    return out


def rational_points_on_curve(f: HomoPoly):
    """All F_p-rational points of the curve, canonically sorted."""
    fld = f.field
    if fld == QQ:
        raise ValueError("the scan needs a prime-field polynomial")
    out = [P for P in enumerate_projective_plane(fld) if evaluate(f, P) == 0]
    out.sort(key=lambda P: tuple(int(c) for c in P.coords))
    return out
