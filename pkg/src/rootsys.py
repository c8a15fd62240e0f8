#!/usr/bin/env python3
"""
G2 ROOT SYSTEM - EXACT MODEL
Positive roots, bilinear form, coroots, reflections and the Weyl group.

All arithmetic is exact: integer/Fraction entries carried in numpy object
arrays so products never round. The Gram matrix is injectable so a
perturbed form can be fed through the fixture harness as a negative control.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .rational import as_int_if_integral

logger = logging.getLogger(__name__)

# Bilinear form on the simple roots: (α1,α1)=2, (α2,α2)=6, (α1,α2)=-3
G2_GRAM = ((2, -3), (-3, 6))

# Positive roots in the basis of simple roots, indexed 1..6
POSITIVE_ROOT_COORDS: Dict[int, Tuple[int, int]] = {
    1: (1, 0),
    2: (0, 1),
    3: (1, 1),
    4: (2, 1),
    5: (3, 1),
    6: (3, 2),
}

# Realisation in the plane x1 + x2 + x3 = 0 of R^3
SIMPLE_EPS_COORDS = {1: (1, -1, 0), 2: (-1, 2, -1)}

# Reduced words never need more letters than the Coxeter number of G2
MAX_WORD_LENGTH = 6

Vector = Tuple[Fraction, Fraction]


class RootLength(Enum):
    SHORT = "short"
    LONG = "long"


@dataclass(frozen=True)
class Root:
    """A root of G2; sign=-1 marks the negative of positive root `index`"""
    index: int
    simple_coords: Tuple[int, int]
    eps_coords: Tuple[int, int, int]
    length: RootLength
    sign: int = 1

    @property
    def name(self) -> str:
        return f"α{self.index}" if self.sign > 0 else f"-α{self.index}"

    @property
    def is_positive(self) -> bool:
        return self.sign > 0

    def negate(self) -> "Root":
        return Root(
            index=self.index,
            simple_coords=(-self.simple_coords[0], -self.simple_coords[1]),
            eps_coords=tuple(-x for x in self.eps_coords),
            length=self.length,
            sign=-self.sign,
        )


class RootSystem:
    """The six positive roots of G2 with their form, coroots and reflections"""

    def __init__(self, gram: Sequence[Sequence[int]] = G2_GRAM):
        self.gram = np.array([[Fraction(x) for x in row] for row in gram], dtype=object)
        self._roots: Dict[int, Root] = {}

        for index, (a, b) in POSITIVE_ROOT_COORDS.items():
            eps = tuple(
                a * SIMPLE_EPS_COORDS[1][k] + b * SIMPLE_EPS_COORDS[2][k] for k in range(3)
            )
            self._roots[index] = Root(index, (a, b), eps, RootLength.SHORT)

        # Lengths follow the form itself so a perturbed Gram matrix shows up here
        short_norm = min(self._norm_of(r.simple_coords) for r in self._roots.values())
        for index, root in list(self._roots.items()):
            length = RootLength.SHORT if self._norm_of(root.simple_coords) == short_norm else RootLength.LONG
            self._roots[index] = Root(index, root.simple_coords, root.eps_coords, length)

        self._by_coords = {r.simple_coords: r for r in self._roots.values()}
        logger.debug("🔧 Root system built with Gram %s", [list(row) for row in gram])

    # ------------------------------------------------------------------
    # Lookup

    def positive_roots(self) -> List[Root]:
        return [self._roots[i] for i in sorted(self._roots)]

    def negative_roots(self) -> List[Root]:
        return [root.negate() for root in self.positive_roots()]

    def root(self, index: int) -> Root:
        try:
            return self._roots[index]
        except KeyError:
            raise KeyError(f"no positive root with index {index}") from None

    def simple_roots(self) -> List[Root]:
        return [self._roots[1], self._roots[2]]

    def root_by_coords(self, coords: Sequence) -> Optional[Root]:
        """Root (of either sign) with the given simple-root coordinates"""
        key = tuple(as_int_if_integral(c) for c in coords)
        if any(isinstance(c, Fraction) for c in key):
            return None
        if key in self._by_coords:
            return self._by_coords[key]
        negated = (-key[0], -key[1])
        if negated in self._by_coords:
            return self._by_coords[negated].negate()
        return None

    def root_sum(self, beta: Root, gamma: Root) -> Optional[Root]:
        coords = (
            beta.simple_coords[0] + gamma.simple_coords[0],
            beta.simple_coords[1] + gamma.simple_coords[1],
        )
        return self.root_by_coords(coords)

    # ------------------------------------------------------------------
    # Form, coroots, pairings

    def _norm_of(self, coords: Sequence) -> Fraction:
        v = np.array(coords, dtype=object)
        return v @ self.gram @ v

    def inner(self, beta: Root, gamma: Root) -> Fraction:
        v = np.array(beta.simple_coords, dtype=object)
        u = np.array(gamma.simple_coords, dtype=object)
        return as_int_if_integral(v @ self.gram @ u)

    def norm_squared(self, beta: Root) -> Fraction:
        return self.inner(beta, beta)

    def coroot_scale(self, beta: Root) -> Fraction:
        """β∨ = scale·β, i.e. 2/(β,β): 1 for short roots, 1/3 for long ones"""
        return Fraction(2) / Fraction(self.norm_squared(beta))

    def coroot(self, beta: Root) -> Vector:
        """β∨ expanded over (α1∨, α2∨)"""
        a, b = beta.simple_coords
        n1 = Fraction(self.gram[0][0])
        n2 = Fraction(self.gram[1][1])
        norm = Fraction(self.norm_squared(beta))
        return (as_int_if_integral(a * n1 / norm), as_int_if_integral(b * n2 / norm))

    def pair_with_coroot(self, coords: Sequence, beta: Root) -> Fraction:
        """(v, β∨) for v given in simple-root coordinates"""
        v = np.array(coords, dtype=object)
        u = np.array(beta.simple_coords, dtype=object)
        return as_int_if_integral(2 * (v @ self.gram @ u) / Fraction(self.norm_squared(beta)))

    def pairing_row(self, beta: Root) -> Vector:
        """((β, α1∨), (β, α2∨)), the label shift of subtracting β once"""
        alpha1, alpha2 = self.simple_roots()
        return (
            self.pair_with_coroot(beta.simple_coords, alpha1),
            self.pair_with_coroot(beta.simple_coords, alpha2),
        )

    def cartan_matrix(self) -> np.ndarray:
        """A[i][j] = (αi, αj∨)"""
        simple = self.simple_roots()
        return np.array(
            [[self.pair_with_coroot(ai.simple_coords, aj) for aj in simple] for ai in simple],
            dtype=object,
        )

    # ------------------------------------------------------------------
    # Reflections

    def reflect(self, beta: Root, coords: Sequence) -> Vector:
        """s_β(v) = v - (v, β∨)β in simple-root coordinates"""
        k = self.pair_with_coroot(coords, beta)
        return (
            as_int_if_integral(coords[0] - k * beta.simple_coords[0]),
            as_int_if_integral(coords[1] - k * beta.simple_coords[1]),
        )

    def reflect_root(self, beta: Root, gamma: Root) -> Optional[Root]:
        return self.root_by_coords(self.reflect(beta, gamma.simple_coords))

    def simple_reflection_matrix(self, i: int) -> np.ndarray:
        """Action of s_i on the labels (n1, n2): n_j -> n_j - (αi, αj∨)·n_i"""
        cartan = self.cartan_matrix()
        matrix = np.array([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]], dtype=object)
        for j in range(2):
            matrix[j][i - 1] -= cartan[i - 1][j]
        return _normalise(matrix)


def _normalise(matrix: np.ndarray) -> np.ndarray:
    return np.array([[as_int_if_integral(x) for x in row] for row in matrix], dtype=object)


def _matrix_key(matrix: np.ndarray) -> Tuple[Tuple, Tuple]:
    return tuple(tuple(as_int_if_integral(x) for x in row) for row in matrix)


@dataclass(frozen=True)
class WeylElement:
    """An element of W(G2) keyed by its canonical reduced word.

    The word is read as a composition, so "21" means s2∘s1 and the
    matrix is the left-to-right product of the letter matrices.
    """
    word: str
    matrix: Tuple[Tuple, Tuple]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=object)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def determinant(self) -> int:
        (a, b), (c, d) = self.matrix
        return as_int_if_integral(a * d - b * c)

    @property
    def display_name(self) -> str:
        return self.word or "e"

    def apply(self, labels: Sequence) -> Vector:
        image = self.array @ np.array(list(labels), dtype=object)
        return tuple(as_int_if_integral(x) for x in image)

    def inverse_apply_root(self, beta: Root, root_system: "RootSystem") -> Optional[Root]:
        """w⁻¹(β): the letters act left to right as root reflections"""
        coords = beta.simple_coords
        for letter in self.word:
            coords = root_system.reflect(root_system.root(int(letter)), coords)
        return root_system.root_by_coords(coords)


class WeylGroup:
    """Closure of the two simple reflections, one entry per distinct matrix"""

    def __init__(self, root_system: RootSystem):
        self.root_system = root_system
        self._letters = {
            "1": root_system.simple_reflection_matrix(1),
            "2": root_system.simple_reflection_matrix(2),
        }
        self.elements: List[WeylElement] = []
        self._by_matrix: Dict[Tuple, WeylElement] = {}

        # Shortest words first, lexicographic within a length
        for length in range(MAX_WORD_LENGTH + 1):
            for letters in product("12", repeat=length):
                word = "".join(letters)
                key = _matrix_key(self.word_matrix(word))
                if key not in self._by_matrix:
                    element = WeylElement(word, key)
                    self._by_matrix[key] = element
                    self.elements.append(element)

        logger.debug("🔧 Weyl group closed with %d elements", len(self.elements))

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def word_matrix(self, word: str) -> np.ndarray:
        matrix = np.array([[1, 0], [0, 1]], dtype=object)
        for letter in word:
            matrix = matrix @ self._letters[letter]
        return _normalise(matrix)

    def element(self, word: str) -> WeylElement:
        """Canonical element represented by any word over {1, 2}"""
        if any(letter not in "12" for letter in word):
            raise ValueError(f"Weyl words use letters 1 and 2 only: {word!r}")
        key = _matrix_key(self.word_matrix(word))
        try:
            return self._by_matrix[key]
        except KeyError:
            raise ValueError(f"word {word!r} leaves the enumerated group") from None

    def compose(self, left: WeylElement, right: WeylElement) -> WeylElement:
        return self.element(left.word + right.word)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return max(self.elements, key=lambda e: (e.length, e.word))


def build_g2() -> RootSystem:
    """Six positive roots of G2 with the standard short-root normalisation"""
    return RootSystem(G2_GRAM)


@lru_cache(maxsize=1)
def default_root_system() -> RootSystem:
    return build_g2()


@lru_cache(maxsize=1)
def _default_weyl_group() -> WeylGroup:
    return WeylGroup(default_root_system())


def weyl_group(root_system: Optional[RootSystem] = None) -> WeylGroup:
    """W(G2) for the given root system; the canonical one is built once"""
    if root_system is None or root_system is default_root_system():
        return _default_weyl_group()
    return WeylGroup(root_system)


def positive_roots(root_system: Optional[RootSystem] = None) -> List[Root]:
    return (root_system or default_root_system()).positive_roots()


def negative_roots(root_system: Optional[RootSystem] = None) -> List[Root]:
    return (root_system or default_root_system()).negative_roots()


def inner(beta: Root, gamma: Root, root_system: Optional[RootSystem] = None) -> Fraction:
    return (root_system or default_root_system()).inner(beta, gamma)


def coroot(beta: Root, root_system: Optional[RootSystem] = None) -> Vector:
    return (root_system or default_root_system()).coroot(beta)


def pairing_row(beta: Root, root_system: Optional[RootSystem] = None) -> Vector:
    return (root_system or default_root_system()).pairing_row(beta)


def reflect_root(beta: Root, gamma: Root, root_system: Optional[RootSystem] = None) -> Optional[Root]:
    return (root_system or default_root_system()).reflect_root(beta, gamma)


def compact_cartan_roots(root_system: Optional[RootSystem] = None) -> Tuple[Root, Root]:
    """Roots of the compact Cartan used for the discrete-series count: α3 ⊥ α5"""
    rs = root_system or default_root_system()
    return rs.root(3), rs.root(5)


def discrete_series_count(root_system: Optional[RootSystem] = None) -> int:
    """|W| / |W(K)| where W(K) is generated by reflections in the compact roots"""
    rs = root_system or default_root_system()
    group = weyl_group(rs)
    compact = compact_cartan_roots(rs)

    # W(K) = {1, s_α3, s_α5, s_α3 s_α5} when the two roots are orthogonal
    if rs.inner(*compact) != 0:
        logger.warning("⚠️ Compact Cartan roots are not orthogonal under this form")
        return 0
    return len(group) // 4
