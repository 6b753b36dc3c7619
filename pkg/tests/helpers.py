"""Shared oracles for the test suite.

The enumeration oracle computes the dimension of a fat-point linear system
over a small prime field by brute force: it walks every coefficient vector
of the given degree and keeps those whose form vanishes to the required
order at every point.  Orders are read from the local expansion at each
point (the defining computation of order_of_vanishing), vectorized so that
q^N forms stay tractable; a random sample is always cross-checked against
literal order_of_vanishing calls.
"""

import random

import numpy as np

from fatpoints.algebra import (
    monomial_basis,
    order_of_vanishing,
    poly_from_vector,
    _monomial_expansions,
)


def local_level_functionals(P, d, max_level):
    """Rows expressing the local-expansion coefficients of levels < max_level.

    A degree-d form f vanishes to order >= m at P exactly when every
    coefficient of local level (total degree off the point) below m is zero;
    each such coefficient is a linear functional of the coefficients of f.
    """
    fld = P.field
    expansions = _monomial_expansions(P, d)
    levels = {}
    for i, terms in enumerate(expansions):
        for (a, b, c), coef in terms:
            lev = b + c
            if lev < max_level:
                levels.setdefault((a, b, c), [fld.zero] * len(expansions))
                levels[(a, b, c)][i] = fld.add(levels[(a, b, c)][i], coef)
    return [levels[k] for k in sorted(levels)]


def enumeration_dimension(points, mults, d, sample_checks=25, rng=None):
    """log_q of the number of degree-d forms meeting all multiplicities."""
    fld = points[0].field
    q = fld.p
    n = len(monomial_basis(d))
    rows = []
    for P, m in zip(points, mults):
        if m == 0:
            continue
        rows.extend(local_level_functionals(P, d, m))
    F = np.array([[int(x) % q for x in r] for r in rows], dtype=np.int64)
    total = q**n
    # mixed-radix enumeration of every coefficient vector
    idx = np.arange(total, dtype=np.int64)
    V = np.empty((total, n), dtype=np.int64)
    for j in range(n):
        V[:, j] = idx % q
        idx //= q
    if len(rows):
        mask = ((V @ F.T) % q == 0).all(axis=1)
    else:
        mask = np.ones(total, dtype=bool)
    count = int(mask.sum())
    dim = 0
    while q**dim < count:
        dim += 1
    assert q**dim == count, "vanishing forms must fill a linear space"
    # literal spot check against order_of_vanishing
    rng = rng or random.Random(997)
    for _ in range(sample_checks):
        i = rng.randrange(total)
        f = poly_from_vector(fld, d, [int(v) for v in V[i]])
        ok = all(
            f.is_zero() or order_of_vanishing(f, P) >= m
            for P, m in zip(points, mults)
            if m > 0
        )
        assert ok == bool(mask[i])
    return dim
