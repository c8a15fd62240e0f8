#!/usr/bin/env python3
"""
Unit tests for exact scalars, weight labels and signatures
"""

from fractions import Fraction

import pytest

from src.rational import (
    INT64_BOUND,
    RationalOverflowError,
    RationalParseError,
    format_rational,
    in_lattice,
    is_natural,
    parse_rational,
)
from src.rootsys import weyl_group
from src.weights import (
    WeightLabels,
    c_param,
    conformal_weight,
    hc_params,
    ks_partner,
    shifted_action,
    signature_of,
    subtract_root_multiple,
    weyl_dim,
)
from tests.freudenthal_oracle import dimension as freudenthal_dimension


@pytest.mark.unit
class TestRational:
    """🧪 p/q codec and lattice membership"""

    def test_parse_forms(self):
        assert parse_rational("7/2") == Fraction(7, 2)
        assert parse_rational("-3") == -3
        assert parse_rational("4/6") == Fraction(2, 3)

    @pytest.mark.parametrize("text", ["0.5", "1/0", "", "a/b", "1/-2", "1 / 2"])
    def test_rejects(self, text):
        with pytest.raises(RationalParseError):
            parse_rational(text)

    def test_overflow(self):
        with pytest.raises(RationalOverflowError):
            parse_rational(str(INT64_BOUND))
        with pytest.raises(RationalOverflowError):
            WeightLabels(Fraction(INT64_BOUND), Fraction(1))

    def test_format_canonical(self):
        assert format_rational(Fraction(-6, 4)) == "-3/2"
        assert format_rational(Fraction(8, 4)) == "2"
        assert format_rational(0) == "0"

    def test_lattices(self):
        assert is_natural(3) and not is_natural(0) and not is_natural(Fraction(1, 2))
        assert in_lattice(Fraction(7, 2), 2)
        assert in_lattice(Fraction(2, 3), 3)
        assert not in_lattice(Fraction(2, 3), 2)
        assert not in_lattice(Fraction(-1, 2), 2)


@pytest.mark.unit
class TestLabels:
    """🧪 Harish-Chandra parameters, c and the Knapp-Stein partner"""

    def test_hc_params(self):
        params = hc_params(WeightLabels.of(2, 5))
        assert list(params) == [2, 5, 17, 19, 7, 12]
        assert params[6] == 12
        with pytest.raises(IndexError):
            params[0]

    def test_naturals(self):
        params = hc_params(WeightLabels.of(Fraction(7, 2), 1))
        assert params.naturals() == {2: 1, 4: 10}

    def test_c_and_d(self):
        labels = WeightLabels.of(1, 1)
        assert c_param(labels) == Fraction(-3, 2)
        assert conformal_weight(c_param(labels)) == 0
        assert signature_of(WeightLabels.of(-1, -1)).d == 3

    def test_c_is_half_highest_root_parameter(self):
        labels = WeightLabels.of(Fraction(1, 3), 2)
        assert c_param(labels) == -hc_params(labels)[6] / 2

    def test_ks_partner_is_involution(self):
        sig = signature_of(WeightLabels.of(Fraction(5, 2), -1))
        partner = ks_partner(sig)
        assert partner.labels == WeightLabels.of(Fraction(-5, 2), 1)
        assert partner.c == -sig.c
        assert ks_partner(partner) == sig

    def test_render(self):
        assert signature_of(WeightLabels.of(1, 1)).render() == "{1,1; -3/2}"

    def test_subtract_root_multiple(self, g2):
        labels = subtract_root_multiple(WeightLabels.of(1, 1), 4, g2.root(3))
        assert labels == WeightLabels.of(5, -3)

    def test_shifted_action_matches_subtraction(self, g2):
        """🔁 s_β(Λ+ρ) = Λ+ρ - m_β·β for every positive root"""
        group = weyl_group()
        start = WeightLabels.of(2, 3)
        params = hc_params(start)
        reflections = {2: "2", 1: "1", 3: "212", 5: "121", 4: "12121", 6: "21212"}
        for index, word in reflections.items():
            image = shifted_action(group.element(word), start)
            assert image == subtract_root_multiple(start, params[index], g2.root(index))

    def test_weyl_group_preserves_parameter_multiset(self):
        """🎯 The six |m_β| are permuted by every Weyl element"""
        start = WeightLabels.of(Fraction(1, 3), 2)
        base = sorted(abs(m) for m in hc_params(start))
        for element in weyl_group():
            image = shifted_action(element, start)
            assert sorted(abs(m) for m in hc_params(image)) == base


@pytest.mark.unit
class TestWeylDimension:
    """🧪 Dimension formula against the Freudenthal oracle"""

    @pytest.mark.parametrize("labels,dim", [((1, 1), 1), ((2, 1), 7), ((1, 2), 14)])
    def test_known_values(self, labels, dim):
        assert weyl_dim(WeightLabels.of(*labels)) == dim

    @pytest.mark.slow
    def test_against_freudenthal(self):
        for m1 in range(1, 7):
            for m2 in range(1, 7):
                dim = weyl_dim(WeightLabels.of(m1, m2))
                assert dim.denominator == 1 and dim > 0
                if m1 + m2 <= 6:
                    assert dim == freudenthal_dimension(m1, m2)

    def test_overflow_is_reported(self):
        """⚠️ A product past the 64-bit range raises instead of growing"""
        with pytest.raises(RationalOverflowError):
            weyl_dim(WeightLabels.of(10 ** 6, 10 ** 6))
