#!/usr/bin/env python3
"""
Freudenthal weight multiplicities for G2, used as an independent check on
the Weyl dimension formula. Weights are kept in fundamental-weight
coordinates; the engine under test is not imported here.
"""

from fractions import Fraction
from typing import Dict, Tuple

Weight = Tuple[int, int]

# (ωi, ωj) with α1 short of norm 2
OMEGA_GRAM = ((2, 3), (3, 6))

# Positive roots in fundamental-weight coordinates
ROOTS: Tuple[Weight, ...] = ((2, -1), (-3, 2), (-1, 1), (1, 0), (3, -1), (0, 1))
SIMPLE = {0: (2, -1), 1: (-3, 2)}
RHO: Weight = (1, 1)


def _inner(u: Weight, v: Weight) -> int:
    return sum(u[i] * OMEGA_GRAM[i][j] * v[j] for i in range(2) for j in range(2))


def _add(u: Weight, v: Weight, k: int = 1) -> Weight:
    return (u[0] + k * v[0], u[1] + k * v[1])


def _root_coords(w: Weight) -> Weight:
    """ω-coordinates to simple-root coordinates"""
    return (2 * w[0] + 3 * w[1], w[0] + 2 * w[1])


def _dominant(mu: Weight) -> Weight:
    while True:
        for i, alpha in SIMPLE.items():
            if mu[i] < 0:
                mu = _add(mu, alpha, -mu[i])
                break
        else:
            return mu


def _present(mu: Weight, highest: Weight) -> bool:
    gap = _root_coords(_add(highest, _dominant(mu), -1))
    return gap[0] >= 0 and gap[1] >= 0


def multiplicities(highest: Weight) -> Dict[Weight, int]:
    """All weights of the irreducible module with the given highest weight"""
    depth_a, depth_b = (2 * x for x in _root_coords(highest))
    top = _inner(_add(highest, RHO), _add(highest, RHO))
    mult: Dict[Weight, int] = {highest: 1}

    offsets = sorted(
        ((a, b) for a in range(depth_a + 1) for b in range(depth_b + 1) if (a, b) != (0, 0)),
        key=lambda ab: (ab[0] + ab[1], ab),
    )
    for a, b in offsets:
        mu = _add(_add(highest, SIMPLE[0], -a), SIMPLE[1], -b)
        if not _present(mu, highest):
            continue
        total = Fraction(0)
        for beta in ROOTS:
            k = 1
            while True:
                above = _add(mu, beta, k)
                gap = _root_coords(_add(highest, above, -1))
                if gap[0] < 0 or gap[1] < 0:
                    break
                total += mult.get(above, 0) * _inner(above, beta)
                k += 1
        shifted = _add(mu, RHO)
        value = 2 * total / (top - _inner(shifted, shifted))
        assert value.denominator == 1
        if value:
            mult[mu] = int(value)
    return mult


def dimension(n1: int, n2: int) -> int:
    """Dimension for labels (n1, n2) of Λ+ρ, i.e. highest weight (n1-1, n2-1)"""
    return sum(multiplicities((n1 - 1, n2 - 1)).values())
