#!/usr/bin/env python3
"""
WEIGHT LABELS AND SIGNATURES
Labels (n1, n2) of Λ+ρ, Harish-Chandra parameters, conformal weight and the
Knapp-Stein partner of a signature.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple

from .rational import RationalLike, checked, format_rational, is_natural
from .rootsys import Root, RootSystem, WeylElement, default_root_system

logger = logging.getLogger(__name__)

CONFORMAL_SHIFT = Fraction(3, 2)

# Product of the six Harish-Chandra parameters of ρ, i.e. of (1, 1)
WEYL_DIM_NORMALISER = 120


@dataclass(frozen=True)
class WeightLabels:
    """Labels (n1, n2) of Λ+ρ, both exact and within the 64-bit bound"""
    n1: Fraction
    n2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "n1", checked(self.n1))
        object.__setattr__(self, "n2", checked(self.n2))

    @classmethod
    def of(cls, n1: RationalLike, n2: RationalLike) -> "WeightLabels":
        return cls(Fraction(n1), Fraction(n2))

    def __iter__(self) -> Iterator[Fraction]:
        yield self.n1
        yield self.n2

    def as_tuple(self) -> Tuple[Fraction, Fraction]:
        return (self.n1, self.n2)

    def negated(self) -> "WeightLabels":
        return WeightLabels(-self.n1, -self.n2)

    def render(self) -> str:
        return f"{{{format_rational(self.n1)},{format_rational(self.n2)}}}"

    def to_dict(self) -> Dict[str, str]:
        return {"n1": format_rational(self.n1), "n2": format_rational(self.n2)}


@dataclass(frozen=True)
class HCParams:
    """m_β for β = α1..α6, read with 1-based root indices"""
    values: Tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]

    def __getitem__(self, index: int) -> Fraction:
        if not 1 <= index <= 6:
            raise IndexError(f"root index must be 1..6, got {index}")
        return self.values[index - 1]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def naturals(self) -> Dict[int, int]:
        """Roots whose parameter lies in ℕ, with that parameter"""
        return {i: int(m) for i, m in enumerate(self.values, start=1) if is_natural(m)}

    def to_dict(self) -> Dict[str, str]:
        return {f"m{i}": format_rational(m) for i, m in enumerate(self.values, start=1)}


@dataclass(frozen=True)
class Signature:
    labels: WeightLabels
    c: Fraction

    @property
    def d(self) -> Fraction:
        return conformal_weight(self.c)

    def render(self) -> str:
        return f"{{{format_rational(self.labels.n1)},{format_rational(self.labels.n2)}; {format_rational(self.c)}}}"


def hc_param(labels: WeightLabels, beta: Root, root_system: Optional[RootSystem] = None) -> Fraction:
    """m_β = (Λ+ρ, β∨), written through the coroot expansion"""
    rs = root_system or default_root_system()
    a, b = rs.coroot(beta)
    return checked(a * labels.n1 + b * labels.n2)


def hc_params(labels: WeightLabels, root_system: Optional[RootSystem] = None) -> HCParams:
    rs = root_system or default_root_system()
    return HCParams(tuple(hc_param(labels, beta, rs) for beta in rs.positive_roots()))


def shifted_action(w: WeylElement, labels: WeightLabels) -> WeightLabels:
    """w·Λ in labels of Λ+ρ, i.e. the linear action of w on (n1, n2)"""
    n1, n2 = w.apply(labels.as_tuple())
    return WeightLabels(Fraction(n1), Fraction(n2))


def subtract_root_multiple(
    labels: WeightLabels, k: RationalLike, beta: Root, root_system: Optional[RootSystem] = None
) -> WeightLabels:
    """Labels of Λ+ρ - kβ: each n_j drops by k·(β, αj∨)"""
    rs = root_system or default_root_system()
    r1, r2 = rs.pairing_row(beta)
    k = Fraction(k)
    return WeightLabels(labels.n1 - k * r1, labels.n2 - k * r2)


def c_param(labels: WeightLabels) -> Fraction:
    """c = -(n1 + 2·n2)/2"""
    return checked(-(labels.n1 + 2 * labels.n2) / 2)


def signature_of(labels: WeightLabels) -> Signature:
    return Signature(labels, c_param(labels))


def conformal_weight(c: RationalLike) -> Fraction:
    return checked(CONFORMAL_SHIFT + Fraction(c))


def ks_partner(signature: Signature) -> Signature:
    """Knapp-Stein partner: labels and c both change sign"""
    return Signature(signature.labels.negated(), -signature.c)


def weyl_dim(labels: WeightLabels, root_system: Optional[RootSystem] = None) -> Fraction:
    """Weyl dimension formula; integral and positive on dominant integral labels"""
    product = Fraction(1)
    for m in hc_params(labels, root_system):
        product = checked(product * m)
    return checked(product / WEYL_DIM_NORMALISER)
