#!/usr/bin/env python3
# coding: utf-8

"""
Tests for ramification functions
"""

import json
from fractions import Fraction

import pytest

from herbrand_lab import plfun
from herbrand_lab import ramification
from herbrand_lab.ramification import (Filtration, CyclicWildSpec,
                                       TameLayer, WildLayer, TowerSpec,
                                       InvalidSpec)

from .datafiles import CYCLIC_3_2, TOWER_TAME_WILD

# Autorship information
__author__ = "Herbrand Lab developers"
__copyright__ = "Copyright 2024, Herbrand Lab"
__credits__ = ["Herbrand Lab developers"]
__license__ = "GNU General Public License v2.0"
__maintainer__ = "Herbrand Lab developers"
__status__ = "Production"

FILT_3_2 = Filtration(3, [2, 11], [9, 3, 1])


def test_filtration_validation():
    """
    Invalid filtrations raise InvalidSpec.
    """

    assert FILT_3_2.order == 9
    assert FILT_3_2.depth == 2
    assert Filtration.trivial(5).order == 1

    with pytest.raises(InvalidSpec, match="odd prime"):
        Filtration(2, [1], [2, 1])
    with pytest.raises(InvalidSpec, match="odd prime"):
        Filtration(9, [1], [9, 1])
    with pytest.raises(InvalidSpec, match="orders"):
        Filtration(3, [2, 11], [9, 1])
    with pytest.raises(InvalidSpec, match="strictly increasing"):
        Filtration(3, [11, 2], [9, 3, 1])
    with pytest.raises(InvalidSpec, match="positive"):
        Filtration(3, [0], [3, 1])
    with pytest.raises(InvalidSpec, match="strictly decreasing"):
        Filtration(3, [1, 2], [3, 3, 1])
    with pytest.raises(InvalidSpec, match="must be 1"):
        Filtration(3, [1], [9, 3])
    with pytest.raises(InvalidSpec, match="integer"):
        Filtration(3, [1.5], [3, 1])


def test_hasse_arf():
    """
    Abelian filtrations need integral upper jumps.
    """

    assert ramification.upper_jumps(Filtration(3, [1, 2], [9, 3, 1])) == \
        [1, Fraction(4, 3)]
    with pytest.raises(InvalidSpec, match="Hasse-Arf"):
        Filtration(3, [1, 2], [9, 3, 1], abelian=True)
    assert Filtration(3, [2, 11], [9, 3, 1], abelian=True) == FILT_3_2


def test_cyclic_spec():
    """
    Jumps, wild exponent and filtration of a cyclic spec.
    """

    with open(CYCLIC_3_2) as filin:
        spec = CyclicWildSpec.from_dict(json.load(filin))

    assert spec == CyclicWildSpec(3, 2, 3, [2, 3])
    assert spec.lower_jumps == (2, 11)
    assert spec.upper_jumps == (2, 5)
    assert spec.wild_exponent == 34
    assert ramification.partial_wild_exponent(spec, 1) == 4
    assert spec.to_filtration() == FILT_3_2
    assert spec.to_filtration().abelian
    assert spec.check() is spec

    assert ramification.cyclic_psi(spec) == ramification.psi_of(FILT_3_2)
    assert ramification.cyclic_phi(spec) == ramification.phi_of(FILT_3_2)

    with pytest.raises(InvalidSpec, match="fontaine_viennot_case_1"):
        CyclicWildSpec(3, 2, 3, [2, 2]).to_filtration()


def test_validate_cyclic():
    """
    Every admissibility constraint is named in the diagnostics.
    """

    def constraints(*args):
        return [v.constraint for v in
                ramification.validate_cyclic(CyclicWildSpec(*args))]

    assert constraints(3, 2, 3, [2, 3]) == []
    assert constraints(3, 2, 3, [1, 2]) == []
    assert constraints(3, 2, 3, [1, 3]) == []
    assert constraints(3, 2, 3, [1, 1]) == ['fontaine_viennot_case_2']
    assert constraints(3, 2, 3, [1, 4]) == ['fontaine_viennot_case_2']
    assert constraints(3, 2, 3, [2, 2]) == ['fontaine_viennot_case_1']
    assert constraints(3, 1, 3, [5]) == ['first_jump_bound']
    assert constraints(4, 1, 1, [1]) == ['odd_prime']
    assert constraints(3, 0, 1, []) == ['positive_r']
    assert constraints(3, 2, 1, [1]) == ['increment_count']
    assert constraints(3, 1, 0, [1]) == ['positive_e_F']
    assert constraints(3, 2, 1, [1, 0]) == ['positive_increments']

    violation = ramification.validate_cyclic(
        CyclicWildSpec(3, 2, 3, [2, 2]))[0]
    assert 'l_2=8' in violation.detail


def test_phi_psi():
    """
    phi and psi of a filtration, large x law of psi.
    """

    phi = ramification.phi_of(FILT_3_2)
    psi = ramification.psi_of(FILT_3_2)

    assert phi.jumps() == [2, 11]
    assert psi.jumps() == ramification.upper_jumps(FILT_3_2) == [2, 5]
    for x in (5, 6, Fraction(23, 2), 40):
        assert psi.eval(x) == 9 * x - 34

    assert ramification.phi_of(Filtration.trivial(3)).is_identity()
    assert ramification.wild_exponent(FILT_3_2) == 34


def test_element_classes():
    """
    Valuation classes with and without a tame top.
    """

    assert ramification.element_classes(FILT_3_2) == [(2, 6), (11, 2)]
    classes = ramification.element_classes(FILT_3_2, tame_order=4)
    assert classes[0] == (0, 27)
    assert sum(c.count for c in classes) == 9 * 4 - 1

    assert Filtration.from_classes(3, classes[1:]) == FILT_3_2

    with pytest.raises(InvalidSpec):
        ramification.element_classes(FILT_3_2, tame_order=0)
    with pytest.raises(InvalidSpec):
        Filtration.from_classes(3, [(0, 2)])


def test_tower():
    """
    Tower read from JSON, composed phi and degrees.
    """

    with open(TOWER_TAME_WILD) as filin:
        tower = ramification.extension_from_dict(json.load(filin))

    assert tower == TowerSpec([TameLayer(2), WildLayer(FILT_3_2)])
    assert tower.degree == 18
    assert tower.tame_degree == 2
    assert tower.wild_order == 9
    assert tower.p == 3

    phi = ramification.compose_tower_phi(tower)
    assert phi.jumps() == [2, 11]
    assert phi.eval(11) == Fraction(5, 2)
    assert phi.final_slope == Fraction(1, 18)
    assert ramification.compose_tower_psi(tower).jumps() == \
        [1, Fraction(5, 2)]

    tame = ramification.extension_from_dict({'tame': 3})
    assert ramification.compose_tower_phi(tame) == \
        plfun.PLFunction.linear(Fraction(1, 3))
    assert ramification.wild_part(tame) is None

    with pytest.raises(InvalidSpec, match="coprime"):
        TowerSpec([TameLayer(3), WildLayer(FILT_3_2)])
    with pytest.raises(InvalidSpec, match="different primes"):
        TowerSpec([WildLayer(Filtration(5, [1], [5, 1])),
                   WildLayer(FILT_3_2)])
    with pytest.raises(InvalidSpec, match="neither"):
        TowerSpec.from_dict({'layers': [{'unramified': 2}]})
    with pytest.raises(InvalidSpec):
        TameLayer(0)


def test_wild_part():
    """
    Tame layers below the wild group keep its jumps, above they scale them.
    """

    below = TowerSpec([TameLayer(2), WildLayer(FILT_3_2)])
    above = TowerSpec([WildLayer(FILT_3_2), TameLayer(2)])

    assert ramification.wild_part(below) == FILT_3_2
    assert ramification.wild_part(above) == \
        Filtration(3, [4, 22], [9, 3, 1])
    assert ramification.smallest_nonzero_jump(below) == 2
    assert ramification.smallest_nonzero_jump(above) == 4

    # Two wild layers: the lower one lifts through psi of the upper one
    stacked = TowerSpec([WildLayer(Filtration(3, [1], [3, 1])),
                         WildLayer(Filtration(3, [2], [3, 1]))])
    wild = ramification.wild_part(stacked)
    assert wild == Filtration(3, [1, 2], [9, 3, 1])
    assert ramification.compose_tower_phi(stacked) == \
        ramification.phi_of(wild)


def test_canonical_tower():
    """
    psi decomposition, canonical layers and the split at a level.
    """

    steps = ramification.decompose_psi(FILT_3_2)
    assert steps == [(2, 3, 4), (5, 3, 34)]

    layers = ramification.canonical_layers(FILT_3_2)
    assert layers == [Filtration(3, [2], [3, 1]), Filtration(3, [11], [3, 1])]

    sub, quotient = ramification.split_filtration(FILT_3_2, 1)
    assert sub == layers[1]
    assert quotient == layers[0]

    psi_quotient = ramification.psi_relative(ramification.psi_of(sub),
                                             ramification.psi_of(FILT_3_2))
    assert psi_quotient == ramification.psi_of(quotient)

    with pytest.raises(InvalidSpec, match="split level"):
        ramification.split_filtration(FILT_3_2, 2)

    # phi of the layers above brackets each canonical break
    above = ramification.phi_of(layers[1])
    assert above.eval(2) <= layers[0].breaks[0] <= above.eval(11)
    assert 2 <= layers[1].breaks[0] <= 11

    assert ramification.check_tower_lemmas(FILT_3_2) == []
    assert ramification.check_tower_lemmas(
        Filtration(5, [1, 3, 13], [125, 25, 5, 1])) == []
    assert ramification.check_tower_lemmas(Filtration.trivial(3)) == []
