"""Deterministic seeded generators for the configuration families.

Every generator is a pure function of its parameters and seed.  "General"
position is realized by seeded integer coordinates with post-hoc exact
certification downstream; retry loops always walk a deterministic stream
derived from (seed, attempt).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from .algebra import (
    QQ,
    HomoPoly,
    monomial_basis,
    order_of_vanishing,
    point,
    poly_from_vector,
    prime_field,
)
from .geometry import (
    Line,
    enumerate_projective_plane,
    rational_points_on_curve,
    singular_points_over_Fp,
)
from .linsys import modp_nullspace

DEFAULT_HEIGHT = 10**4

FAMILIES = (
    "collinear",
    "on_conic",
    "general",
    "star",
    "star_minus_one",
    "dual_hesse",
    "type9",
    "nagata16",
    "nodal_curve_nodes",
    "two_nodal_union",
)


@dataclass(frozen=True)
class ConfigSpec:
    """A family tag plus the parameters needed to regenerate it."""

    family: str
    r: Optional[int] = None
    p: Optional[int] = None
    d: Optional[int] = None
    d1: Optional[int] = None
    d2: Optional[int] = None
    prime: Optional[int] = None
    seed: Optional[int] = None
    height: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def to_json_dict(self) -> dict:
        d = {"family": self.family}
        for key in ("r", "p", "d", "d1", "d2", "prime", "seed", "height"):
            v = getattr(self, key)
            if v is not None:
                d[key] = v
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "ConfigSpec":
        return cls(**{k: v for k, v in d.items() if k != "family"}, family=d["family"])


def generate(spec: ConfigSpec):
    """Dispatch a ConfigSpec to its generator; returns the point tuple."""
    fam = spec.family
    if fam == "collinear":
        return collinear(spec.r)
    if fam == "on_conic":
        return on_conic(spec.r)
    if fam == "general":
        return general(spec.r, spec.seed or 0, height=spec.height or DEFAULT_HEIGHT)
    if fam == "star":
        return star(spec.p, spec.seed or 0)[0]
    if fam == "star_minus_one":
        return star_minus_one(spec.d, spec.seed or 0)
    if fam == "dual_hesse":
        return dual_hesse(spec.prime)
    if fam == "type9":
        return type9(spec.seed)
    if fam == "nagata16":
        return general(16, spec.seed or 0, height=spec.height or DEFAULT_HEIGHT)
    if fam == "nodal_curve_nodes":
        result = rational_nodal_nodes(spec.d, spec.prime, spec.seed or 0)
        if result is None:
            raise RuntimeError("nodal generation failed; try another seed")
        return result[1]
    if fam == "two_nodal_union":
        result = two_nodal_union(spec.d1, spec.d2, spec.prime, spec.seed or 0)
        if result is None:
            raise RuntimeError("two-nodal generation failed; try another seed")
        return result
    raise ValueError(f"unknown family {fam!r}")


# ---------------------------------------------------------------------------
# elementary families

def collinear(r: int):
    """r distinct points (0 : i : 1) on the line x = 0."""
    if r < 1:
        raise ValueError("need r >= 1")
    return tuple(point(QQ, 0, i, 1) for i in range(r))


def on_conic(r: int):
    """r distinct points (1 : t : t^2) on the smooth conic y^2 = xz."""
    if r < 1:
        raise ValueError("need r >= 1")
    return tuple(point(QQ, 1, t, t * t) for t in range(r))


def _no_three_collinear(pts) -> bool:
    for a, b, c in itertools.combinations(pts, 3):
        m = [a.integer_coords(), b.integer_coords(), c.integer_coords()]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if det == 0:
            return False
    return True


def general(r: int, seed: int, height: int = DEFAULT_HEIGHT,
            ensure_general_position: bool = True):
    """Seeded random rational points with integer coordinates in [-H, H].

    Points are redrawn until pairwise distinct and, when requested, until
    no three are collinear.  Genericity beyond that is certified downstream
    by the exact rank computations themselves.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    rng = random.Random(f"fatpoints.general:{seed}:{r}:{height}")
    pts = []
    attempts = 0
    while len(pts) < r:
        attempts += 1
        if attempts > 10000:
            raise RuntimeError("rejection sampling failed; widen the height")
        c = (rng.randint(-height, height), rng.randint(-height, height), 1)
        q = point(QQ, *c)
        if q in pts:
            continue
        if ensure_general_position and len(pts) >= 2:
            if not _no_three_collinear(pts + [q]):
                continue
        pts.append(q)
    return tuple(pts)


def star(p: int, seed: int, height: int = 30):
    """p seeded general lines; returns their C(p, 2) intersections and the lines.

    Redraws until the lines are distinct, no three concurrent, and all
    pairwise intersections distinct.
    """
    if p < 3:
        raise ValueError("need at least three lines")
    for attempt in itertools.count():
        rng = random.Random(f"fatpoints.star:{seed}:{p}:{attempt}")
        lines = []
        ok = True
        for _ in range(p):
            c = [rng.randint(-height, height) for _ in range(3)]
            if not any(c):
                ok = False
                break
            L = Line.from_coeffs(QQ, c)
            if L in lines:
                ok = False
                break
            lines.append(L)
        if not ok:
            continue
        pts = []
        for L1, L2 in itertools.combinations(lines, 2):
            pts.append(L1.intersect(L2))
        if len(set(pts)) == comb(p, 2):
            return tuple(pts), tuple(lines)


def star_minus_one(d: int, seed: int):
    """The star of d lines with the intersection of the first two removed."""
    if d < 3:
        raise ValueError("need at least three lines")
    pts, lines = star(d, seed)
    removed = lines[0].intersect(lines[1])
    return tuple(P for P in pts if P != removed)


def dual_hesse(p: int):
    """The 12 triple points of nine lines over F_p, p = 1 mod 3.

    With w a primitive cube root of unity the lines are x - w^a y,
    y - w^b z and x - w^c z; exactly 12 points lie on three or more of
    them and the incidence structure is (12_3, 9_4).
    """
    if p % 3 != 1 or p <= 10:
        raise ValueError("need a prime p = 1 mod 3 with p > 10")
    F = prime_field(p)
    w = next(x for x in range(2, p) if pow(x, 3, p) == 1 and x != 1)
    lines = dual_hesse_lines(p, w)
    pts = []
    for P in enumerate_projective_plane(F):
        n = sum(1 for L in lines if L.contains(P))
        if n >= 3:
            pts.append(P)
    pts.sort(key=lambda P: tuple(int(c) for c in P.coords))
    if len(pts) != 12:
        raise RuntimeError("cube-root line construction degenerated")
    return tuple(pts)


def dual_hesse_lines(p: int, w: Optional[int] = None):
    F = prime_field(p)
    if w is None:
        w = next(x for x in range(2, p) if pow(x, 3, p) == 1 and x != 1)
    lines = []
    for a in range(3):
        lines.append(Line.from_coeffs(F, (1, -pow(w, a, p) % p, 0)))
    for b in range(3):
        lines.append(Line.from_coeffs(F, (0, 1, -pow(w, b, p) % p)))
    for c in range(3):
        lines.append(Line.from_coeffs(F, (1, 0, -pow(w, c, p) % p)))
    return tuple(lines)


_TYPE9_DEFAULT = ((0, 0, 1), (1, 0, 1), (0, 1, 1), (0, 2, 1), (2, 0, 1), (3, -2, 1))


def type9(seed: Optional[int] = None):
    """Vertices of three general lines plus one extra point on each line.

    The canonical instance uses the triangle x = 0, y = 0, x + y = z with
    vertices A(0:0:1), B(1:0:1), C(0:1:1) and extras D(0:2:1), E(2:0:1),
    F(3:-2:1).  A seed varies the extra points while keeping the shape.
    """
    from .geometry import is_type9  # local import avoids a cycle at import time

    if seed is None:
        return tuple(point(QQ, *c) for c in _TYPE9_DEFAULT)
    for attempt in itertools.count():
        rng = random.Random(f"fatpoints.type9:{seed}:{attempt}")
        d = rng.randint(2, 9)
        e = rng.randint(2, 9)
        s, t = rng.randint(1, 9), rng.randint(1, 9)
        pts = (
            point(QQ, 0, 0, 1),
            point(QQ, 1, 0, 1),
            point(QQ, 0, 1, 1),
            point(QQ, 0, d, 1),
            point(QQ, e, 0, 1),
            point(QQ, s, t, s + t),
        )
        if len(set(pts)) == 6 and is_type9(pts):
            return pts


# ---------------------------------------------------------------------------
# nodal rational curves over a prime field

def _binary_form_values(coeffs, s, u, p):
    # value of sum coeffs[i] s^(d-i) u^i
    d = len(coeffs) - 1
    acc = 0
    for i, c in enumerate(coeffs):
        acc = (acc + c * pow(s, d - i, p) * pow(u, i, p)) % p
    return acc


def _implicitize_parameterization(forms, d: int, p: int) -> Optional[HomoPoly]:
    """The unique degree-d curve through the image of a P^1 parameterization.

    Samples every parameter value, solves the linear system of degree-d
    forms vanishing on the image, and demands a one-dimensional kernel.
    """
    F = prime_field(p)
    mons = monomial_basis(d)
    images = set()
    for s, u in [(t, 1) for t in range(p)] + [(1, 0)]:
        c = tuple(_binary_form_values(f, s, u, p) for f in forms)
        if any(c):
            images.add(point(F, *c))
    if len(images) < len(mons):
        return None
    rows = []
    for P in images:
        x, y, z = (int(v) for v in P.coords)
        row = [
            pow(x, a, p) * pow(y, b, p) * pow(z, c, p) % p for (a, b, c) in mons
        ]
        rows.append(row)
    A = np.array(rows, dtype=np.int64)
    kernel = modp_nullspace(A, p)
    if len(kernel) != 1:
        return None
    return poly_from_vector(F, d, [int(v) for v in kernel[0]])


def rational_nodal_nodes(d: int, p: int, seed: int, max_retries: int = 60):
    """A degree-d rational curve with all C(d-1, 2) nodes rational, plus the nodes.

    Draws seeded random degree-d parameterizations, implicitizes by the
    kernel method, and accepts only when the singular scan finds exactly
    the maximal node count, every singularity of local order exactly 2.
    Returns (curve, nodes) or None after max_retries attempts.
    """
    if d < 2:
        raise ValueError("need degree >= 2")
    if p <= d * d:
        raise ValueError("need p > d^2")
    expected = comb(d - 1, 2)
    for attempt in range(max_retries):
        rng = random.Random(f"fatpoints.nodal:{seed}:{d}:{p}:{attempt}")
        forms = [[rng.randrange(p) for _ in range(d + 1)] for _ in range(3)]
        curve = _implicitize_parameterization(forms, d, p)
        if curve is None:
            continue
        sing = singular_points_over_Fp(curve)
        if len(sing) != expected:
            continue
        if all(order_of_vanishing(curve, P) == 2 for P in sing):
            return curve, tuple(sing)
    return None


def _random_curve_through(points, d: int, p: int, rng) -> Optional[HomoPoly]:
    """A seeded random member of the degree-d forms through the given points."""
    F = prime_field(p)
    mons = monomial_basis(d)
    rows = []
    for P in points:
        x, y, z = (int(v) for v in P.coords)
        rows.append(
            [pow(x, a, p) * pow(y, b, p) * pow(z, c, p) % p for (a, b, c) in mons]
        )
    A = np.array(rows, dtype=np.int64)
    kernel = modp_nullspace(A, p)
    if not kernel:
        return None
    vec = [0] * len(mons)
    for kv in kernel:
        c = rng.randrange(p)
        vec = [(a + c * b) % p for a, b in zip(vec, kv)]
    if not any(vec):
        return None
    return poly_from_vector(F, d, vec)


def two_nodal_union(d1: int, d2: int, p: int, seed: int, max_retries: int = 400):
    """Nodes of two transversal nodal curves plus all their intersections.

    The first curve comes from the nodal generator; the second is drawn
    through prescribed rational points of the first so the intersection
    points stay rational.  Transversality and nodality are verified by a
    singular scan of the product: it must consist of exactly
    C(d1-1,2) + C(d2-1,2) + d1 d2 points, each of local order exactly 2.
    Returns the sorted point tuple or None.
    """
    if d1 < 2 or d2 < 2:
        raise ValueError("need degrees >= 2")
    if p <= max(d1, d2) ** 2 or p <= d1 + d2:
        raise ValueError("need p > max(d1, d2)^2 and p > d1 + d2")
    first = rational_nodal_nodes(d1, p, seed)
    if first is None:
        return None
    c1, nodes1 = first
    expected2 = comb(d2 - 1, 2)
    want_total = comb(d1 - 1, 2) + expected2 + d1 * d2
    on_c1 = [P for P in rational_points_on_curve(c1) if P not in nodes1]
    prescribe = min(d1 * d2, comb(d2 + 2, 2) - 2)
    for attempt in range(max_retries):
        rng = random.Random(f"fatpoints.twonodal:{seed}:{d1}:{d2}:{p}:{attempt}")
        if len(on_c1) < prescribe:
            return None
        base = rng.sample(on_c1, prescribe)
        c2 = _random_curve_through(base, d2, p, rng)
        if c2 is None or c2.degree != d2:
            continue
        sing2 = singular_points_over_Fp(c2)
        if len(sing2) != expected2:
            continue
        if not all(order_of_vanishing(c2, P) == 2 for P in sing2):
            continue
        product = c1 * c2
        sing = singular_points_over_Fp(product)
        if len(sing) != want_total:
            continue
        if not all(order_of_vanishing(product, P) == 2 for P in sing):
            continue
        inter = [P for P in sing if P not in nodes1 and P not in sing2]
        if len(inter) != d1 * d2:
            continue
        pts = sorted(
            set(nodes1) | set(sing2) | set(inter),
            key=lambda P: tuple(int(c) for c in P.coords),
        )
        return tuple(pts)
    return None
