#!/usr/bin/env python3
# coding: utf-8

"""
Tests for reps functions
"""

import json
from fractions import Fraction

import pytest

from herbrand_lab import ramification
from herbrand_lab import reps
from herbrand_lab.ramification import Filtration, TameLayer, TowerSpec
from herbrand_lab.reps import CarayolSpec, InducedSpec, Domain

from .datafiles import (INDUCED_3_2, CARAYOL_3_2, CARAYOL_GENERAL,
                        CARAYOL_R1)

# Autorship information
__author__ = "Herbrand Lab developers"
__copyright__ = "Copyright 2024, Herbrand Lab"
__credits__ = ["Herbrand Lab developers"]
__license__ = "GNU General Public License v2.0"
__maintainer__ = "Herbrand Lab developers"
__status__ = "Production"

FILT_3_2 = Filtration(3, [2, 11], [9, 3, 1])


def read_json(json_file):
    with open(json_file) as filin:
        return json.load(filin)


def test_induced_slope():
    """
    Slope and Swan conductor of Ind chi on wild, tame and mixed towers.
    """

    spec = InducedSpec.from_dict(read_json(INDUCED_3_2))
    assert spec.dim == 9
    assert spec.wild == FILT_3_2
    assert reps.swan_of_induced(spec) == 46
    assert reps.slope_of_induced(spec) == Fraction(46, 9)

    report = reps.slope_report(spec)
    assert report.to_dict() == {'dim': 9, 'swan': [46], 'slope': [46, 9],
                                'carayol': True, 'domain': None}
    assert reps.is_carayol(report)

    mixed = InducedSpec(TowerSpec([TameLayer(2), ramification.WildLayer(
        FILT_3_2)]), 12)
    assert reps.slope_report(mixed) == reps.SlopeReport(18, 46,
                                                        Fraction(23, 9))

    tame = InducedSpec(TowerSpec([TameLayer(3)]), 7)
    assert tame.wild is None
    assert reps.swan_of_induced(tame) == 7
    assert reps.slope_of_induced(tame) == Fraction(7, 3)

    with pytest.raises(ramification.InvalidSpec, match="reducible"):
        InducedSpec(FILT_3_2, 5)
    with pytest.raises(ramification.InvalidSpec):
        reps.CharacterData(-1)


def test_tame_slope_rules():
    """
    Tame induction divides the slope, restriction multiplies it back.
    """

    assert reps.induction_slope(7, 3) == Fraction(7, 3)
    assert reps.restriction_slope(Fraction(7, 3), 3) == 7

    tower = TowerSpec([TameLayer(2), TameLayer(3)])
    phi = ramification.compose_tower_phi(tower)
    assert phi.eval(7) == reps.induction_slope(7, 6)
    assert reps.restriction_slope(phi.eval(7), 6) == 7
    assert reps.slope_of_induced(InducedSpec(tower, 7)) == Fraction(7, 6)


def test_twist_slope():
    """
    Rule table of the twisted characters.
    """

    assert reps.twist_slope(12, 2, 3) == 10
    assert reps.twist_slope(12, 11, 3) == 1
    assert reps.twist_slope(12, 0, 3) == 12
    assert reps.twist_slope(2, 5, 3) == 0
    assert reps.twist_slope(5, 5, 3) == 0
    assert reps.twist_slope(5, 2, 3) is reps.INDETERMINATE
    assert repr(reps.INDETERMINATE) == 'Indeterminate'

    with pytest.raises(ValueError):
        reps.twist_slope(-1, 2, 3)


def test_adjoint_wild_induced():
    """
    Closed form and Mackey value of a character induced rho.
    """

    spec = CarayolSpec(FILT_3_2, 13)
    assert reps.slope_report(spec).slope == Fraction(47, 9)
    assert reps.adjoint_slope_closed(spec) == (5, Domain.WILD_INDUCED)
    assert reps.adjoint_slope_mackey(spec) == 5
    assert reps.adjoint_swan_mackey(spec) == 8 * 47
    assert reps.adjoint_sanity(spec) == (405, 376)


def test_adjoint_off_last_piece():
    """
    sigma - i_0 below the largest lower jump: both values are kept apart
    and the closed form is tagged out of scope.
    """

    spec = CarayolSpec.from_dict(read_json(CARAYOL_3_2))
    closed, domain = reps.adjoint_slope_closed(spec)

    assert closed == Fraction(44, 9)
    assert domain is Domain.OUT_OF_THEOREM_SCOPE
    assert reps.adjoint_slope_mackey(spec) == Fraction(14, 3)
    assert reps.adjoint_swan_mackey(spec) == 368


def test_adjoint_r_1():
    """
    Degree p wild core, the closed form and the Mackey value differ.
    """

    spec = CarayolSpec.from_dict(read_json(CARAYOL_R1))
    assert spec.r == 1
    assert spec.i_0 == 3
    assert reps.slope_report(spec).slope == Fraction(16, 5)
    assert reps.adjoint_slope_closed(spec) == \
        (Fraction(13, 5), Domain.OUT_OF_THEOREM_SCOPE)
    assert reps.adjoint_slope_mackey(spec) == 1


def test_adjoint_general_carayol():
    """
    Core tame step between two wild layers, epipelagic example.
    """

    spec = CarayolSpec.from_dict(read_json(CARAYOL_GENERAL))
    assert spec.dim == 9
    assert spec.i_0 == 1
    assert reps.slope_report(spec).swan == 1

    assert reps.adjoint_slope_closed(spec) == \
        (Fraction(2, 19), Domain.GENERAL_CARAYOL)
    assert reps.adjoint_slope_mackey(spec) == Fraction(2, 19)
    assert reps.epipelagic_adjoint(spec) == Fraction(2, 19)

    with pytest.raises(ramification.InvalidSpec, match="m=1"):
        reps.adjoint_swan_mackey(spec)

    small = CarayolSpec(Filtration(3, [1], [3, 1]), 2, core_tame=4)
    assert reps.adjoint_slope_closed(small) == \
        (Fraction(1, 4), Domain.OUT_OF_THEOREM_SCOPE)
    assert reps.adjoint_slope_mackey(small) == Fraction(1, 4)
    assert reps.epipelagic_adjoint(small) == Fraction(1, 4)


def test_adjoint_tame_top():
    """
    A tame top layer makes the adjoint slope equal to sl(rho).
    """

    spec = CarayolSpec(FILT_3_2, 13, tame_top=2)
    assert spec.dim == 18
    slope = Fraction(47, 18)
    assert reps.slope_report(spec).slope == slope
    assert reps.adjoint_slope_closed(spec) == (slope, Domain.M_GREATER_ONE)
    assert reps.adjoint_slope_mackey(spec) == slope

    trivial = Filtration.trivial(3)
    assert reps.epipelagic_adjoint(
        CarayolSpec(trivial, 1, tame_top=2)) == Fraction(1, 2)
    assert reps.adjoint_slope_mackey(
        CarayolSpec(trivial, 3, tame_top=2)) == Fraction(3, 2)
    assert reps.adjoint_slope_closed(CarayolSpec(trivial, 1)) == \
        (0, Domain.OUT_OF_THEOREM_SCOPE)

    with pytest.raises(ramification.InvalidSpec, match="coprime"):
        CarayolSpec(FILT_3_2, 13, tame_top=3)


def test_adjoint_errors():
    """
    Non Carayol, congruent and non epipelagic inputs.
    """

    with pytest.raises(ramification.InvalidSpec, match="Carayol"):
        reps.adjoint_slope_closed(CarayolSpec(FILT_3_2, 14))
    with pytest.raises(ramification.InvalidSpec, match="below"):
        CarayolSpec(FILT_3_2, 10)

    # The middle layer lifts to break 13 above the core break 1
    core = Filtration(3, [1], [3, 1])
    mid = Filtration(3, [5], [3, 1])
    assert ramification.wild_part(TowerSpec(
        [ramification.WildLayer(mid), ramification.WildLayer(core)])) == \
        Filtration(3, [1, 13], [9, 3, 1])
    with pytest.raises(ramification.InvalidSpec, match="below.*13"):
        CarayolSpec(core, 2, wild_mid=mid)
    assert CarayolSpec(core, 13, wild_mid=mid).dim == 9
    with pytest.raises(reps.IndeterminateTwist):
        reps.adjoint_slope_mackey(
            CarayolSpec(Filtration(3, [1, 2], [9, 3, 1]), 4))
    with pytest.raises(reps.NotEpipelagic, match="46"):
        reps.epipelagic_adjoint(CarayolSpec(FILT_3_2, 12))


def test_carayol_dict():
    """
    JSON schema of a Carayol spec.
    """

    data = read_json(CARAYOL_GENERAL)
    spec = CarayolSpec.from_dict(data)
    assert spec.to_dict() == {'tame_top': 1, 'core_tame': 19,
                              'core_wild': {'p': 3, 'breaks': [1, 4],
                                            'orders': [9, 3, 1],
                                            'abelian': False},
                              'character': {'slope': 5}}
    assert CarayolSpec.from_dict(spec.to_dict()).tower == spec.tower
