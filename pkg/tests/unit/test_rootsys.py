#!/usr/bin/env python3
"""
Unit tests for the G2 root system and Weyl group
"""

from fractions import Fraction

import numpy as np
import pytest

from src.rootsys import (
    RootLength,
    RootSystem,
    build_g2,
    compact_cartan_roots,
    discrete_series_count,
    weyl_group,
)


@pytest.mark.unit
class TestRoots:
    """🧪 Root coordinates, form and coroots"""

    def setup_method(self):
        self.rs = RootSystem()

    def test_eps_coordinates(self):
        """📐 Realisation of the six positive roots in the plane"""
        expected = {
            1: (1, -1, 0),
            2: (-1, 2, -1),
            3: (0, 1, -1),
            4: (1, 0, -1),
            5: (2, -1, -1),
            6: (1, 1, -2),
        }
        for index, eps in expected.items():
            root = self.rs.root(index)
            assert root.eps_coords == eps
            assert sum(root.eps_coords) == 0

    def test_gram_entries(self):
        a1, a2 = self.rs.simple_roots()
        assert self.rs.inner(a1, a1) == 2
        assert self.rs.inner(a2, a2) == 6
        assert self.rs.inner(a1, a2) == -3

    def test_lengths(self):
        short = [r.index for r in self.rs.positive_roots() if r.length is RootLength.SHORT]
        long_ = [r.index for r in self.rs.positive_roots() if r.length is RootLength.LONG]
        assert short == [1, 3, 4]
        assert long_ == [2, 5, 6]

    def test_coroot_expansions(self):
        """🔁 β∨ over the simple coroots"""
        expected = {1: (1, 0), 2: (0, 1), 3: (1, 3), 4: (2, 3), 5: (1, 1), 6: (1, 2)}
        for index, coords in expected.items():
            assert self.rs.coroot(self.rs.root(index)) == coords

    def test_coroot_scale(self):
        assert self.rs.coroot_scale(self.rs.root(1)) == 1
        assert self.rs.coroot_scale(self.rs.root(2)) == Fraction(1, 3)

    def test_pairing_rows(self):
        expected = {1: (2, -1), 2: (-3, 2), 3: (-1, 1), 4: (1, 0), 5: (3, -1), 6: (0, 1)}
        for index, row in expected.items():
            assert self.rs.pairing_row(self.rs.root(index)) == row

    def test_build_g2(self):
        rs = build_g2()
        assert len(rs.positive_roots()) == 6
        assert rs.root(6).eps_coords == (1, 1, -2)
        assert rs.inner(rs.root(1), rs.root(6)) == 0

    def test_root_sums(self):
        a = self.rs.root
        assert self.rs.root_sum(a(1), a(2)) == a(3)
        assert self.rs.root_sum(a(3), a(4)) == a(6)
        assert self.rs.root_sum(a(5), a(6)) is None

    def test_negative_roots(self):
        negatives = self.rs.negative_roots()
        assert len(negatives) == 6
        assert all(not r.is_positive for r in negatives)
        assert negatives[5].simple_coords == (-3, -2)
        assert negatives[0].name == "-α1"

    def test_reflect_root(self):
        a = self.rs.root
        assert self.rs.reflect_root(a(2), a(1)) == a(3)
        assert self.rs.reflect_root(a(1), a(2)) == a(5)
        assert self.rs.reflect_root(a(1), a(1)) == a(1).negate()

    def test_unknown_index(self):
        with pytest.raises(KeyError):
            self.rs.root(7)


@pytest.mark.unit
class TestWeylGroup:
    """🧪 Closure of the simple reflections"""

    def setup_method(self):
        self.group = weyl_group()

    def test_order_and_words(self):
        words = [e.word for e in self.group]
        assert words == [
            "", "1", "2", "12", "21", "121", "212", "1212", "2121", "12121", "21212", "121212"
        ]

    def test_simple_reflection_matrices(self):
        assert self.group.element("1").matrix == ((-1, 0), (1, 1))
        assert self.group.element("2").matrix == ((1, 3), (0, -1))

    def test_rotation_has_order_six(self):
        rotation = self.group.word_matrix("12")
        power = np.array([[1, 0], [0, 1]], dtype=object)
        orders = []
        for k in range(1, 7):
            power = power @ rotation
            if (power == np.array([[1, 0], [0, 1]], dtype=object)).all():
                orders.append(k)
        assert orders == [6]

    def test_longest_element_negates(self):
        longest = self.group.longest
        assert longest.word == "121212"
        assert longest.apply((Fraction(2), Fraction(5))) == (-2, -5)
        assert self.group.element("212121") == longest

    def test_determinants(self):
        for element in self.group:
            assert element.determinant == (-1) ** element.length

    def test_composition_reduces_words(self):
        s1 = self.group.element("1")
        assert self.group.compose(s1, s1) == self.group.identity
        assert self.group.element("1221").word == ""

    def test_inverse_apply_root(self):
        """🔁 w⁻¹(β) applies the letters left to right"""
        rs = self.group.root_system
        assert self.group.element("21").inverse_apply_root(rs.root(1), rs) == rs.root(4)
        assert self.group.element("").inverse_apply_root(rs.root(6), rs) == rs.root(6)

    def test_bad_letters(self):
        with pytest.raises(ValueError):
            self.group.element("13")


@pytest.mark.unit
def test_discrete_series_count():
    """🎯 Twelve Weyl elements over the four of the compact Weyl group"""
    alpha3, alpha5 = compact_cartan_roots()
    assert (alpha3.index, alpha5.index) == (3, 5)
    assert discrete_series_count() == 3


@pytest.mark.unit
def test_perturbed_form_breaks_the_group():
    """⚠️ A wrong Gram matrix no longer closes to twelve elements"""
    perturbed = RootSystem(((2, -2), (-2, 6)))
    assert perturbed.inner(perturbed.root(1), perturbed.root(2)) == -2
    assert len(weyl_group(perturbed)) != 12
