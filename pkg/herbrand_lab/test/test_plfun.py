#!/usr/bin/env python3
# coding: utf-8

"""
Tests for plfun functions
"""

from fractions import Fraction

import numpy as np
import pytest

from herbrand_lab import plfun
from herbrand_lab import ramification
from herbrand_lab import enumeration
from herbrand_lab.plfun import PLFunction

# Autorship information
__author__ = "Herbrand Lab developers"
__copyright__ = "Copyright 2024, Herbrand Lab"
__credits__ = ["Herbrand Lab developers"]
__license__ = "GNU General Public License v2.0"
__maintainer__ = "Herbrand Lab developers"
__status__ = "Production"


def cyclic_phi_3_2():
    return PLFunction.from_slopes([2, 11],
                                  [1, Fraction(1, 3), Fraction(1, 9)])


def test_eval():
    """
    Evaluate phi of the (2, 11) filtration on each piece.
    """

    phi = cyclic_phi_3_2()

    assert phi.eval(0) == 0
    assert phi.eval(2) == 2
    assert phi(10) == Fraction(14, 3)
    assert phi.eval(11) == 5
    assert phi.eval(20) == 6
    assert phi.eval("7/2") == Fraction(5, 2)

    with pytest.raises(ValueError, match="negative"):
        phi.eval(Fraction(-1, 2))


def test_slopes_and_jumps():
    """
    Read slopes, jumps and jump ratios.
    """

    phi = cyclic_phi_3_2()
    psi = phi.invert()

    assert phi.jumps() == [2, 11]
    assert psi.jumps() == [2, 5]
    assert phi.slopes == [1, Fraction(1, 3), Fraction(1, 9)]
    assert psi.slopes == [1, 3, 9]

    assert phi.left_slope(2) == 1
    assert phi.right_slope(2) == Fraction(1, 3)
    assert psi.jump_ratio(2) == 3
    assert psi.jump_ratio(5) == 3
    assert psi.jump_ratio(4) == 1

    assert psi.last_piece() == (9, -34)

    with pytest.raises(ValueError):
        psi.jump_ratio(0)


def test_invert_compose():
    """
    phi o psi and psi o phi are the identity.
    """

    phi = cyclic_phi_3_2()
    psi = phi.invert()

    assert plfun.compose(phi, psi).is_identity()
    assert plfun.compose(psi, phi).is_identity()
    assert psi.invert() == phi

    outer = PLFunction.linear(Fraction(1, 2))
    inner = PLFunction.from_slopes([2], [1, Fraction(1, 3)])
    composed = plfun.compose(outer, inner)

    assert composed.breakpoints == [(0, 0), (2, 1)]
    assert composed.final_slope == Fraction(1, 6)
    assert composed.eval(8) == 2

    # Outer breaks are pulled back through inner
    composed = plfun.compose(inner, PLFunction.linear(Fraction(1, 4)))
    assert composed.jumps() == [8]


def test_canonical_form():
    """
    Collinear pieces are merged so equality is structural.
    """

    line = PLFunction([(0, 0), (1, 1), (2, 2)], 1)
    assert line == PLFunction.identity()
    assert line.is_identity()
    assert hash(line) == hash(PLFunction.identity())

    assert PLFunction([(0, 0), (2, 1)], Fraction(1, 2)) == \
        PLFunction.linear(Fraction(1, 2))
    assert PLFunction.linear(2) != PLFunction.linear(3)


def test_invalid_functions():
    """
    Constructor rejects non canonical inputs.
    """

    with pytest.raises(ValueError, match="origin"):
        PLFunction([(1, 1)], 1)
    with pytest.raises(ValueError, match="not positive"):
        PLFunction.linear(0)
    with pytest.raises(ValueError, match="strictly increasing"):
        PLFunction([(0, 0), (2, 1), (1, 3)], 1)
    with pytest.raises(ValueError, match="strictly increasing"):
        PLFunction([(0, 0), (2, 1), (3, 1)], 1)
    with pytest.raises(ValueError):
        PLFunction.from_slopes([2, 11], [1, 3])


def test_rationals():
    """
    Exact parsing and serialization of rationals.
    """

    assert plfun.to_rational([6, 4]) == Fraction(3, 2)
    assert plfun.to_rational("7/2") == Fraction(7, 2)
    assert plfun.to_rational(5) == 5
    assert plfun.to_rational([5]) == 5
    assert plfun.rational_to_pair(Fraction(-4, 6)) == [-2, 3]
    assert plfun.rational_to_str(3) == "3/1"

    with pytest.raises(ValueError, match="exact"):
        plfun.to_rational(0.5)
    with pytest.raises(ValueError):
        plfun.to_rational([1, 2, 3])


def test_dict_and_sample():
    """
    JSON schema of a function and exact sampling.
    """

    phi = cyclic_phi_3_2()
    data = phi.to_dict()

    assert data == {'breakpoints': [[[0, 1], [0, 1]], [[2, 1], [2, 1]],
                                    [[11, 1], [5, 1]]],
                    'final_slope': [1, 9]}
    assert PLFunction.from_dict(data) == phi

    samples = phi.sample(0, 12, 4)
    assert [x for x, _ in samples] == [0, 3, 6, 9, 12]
    assert [y for _, y in samples] == [0, Fraction(7, 3), Fraction(10, 3),
                                       Fraction(13, 3), Fraction(46, 9)]

    with pytest.raises(ValueError):
        phi.sample(0, 12, 0)
    with pytest.raises(ValueError):
        phi.sample(3, 1, 2)


def random_functions(seed=3):
    functions = [PLFunction.identity(), PLFunction.linear(Fraction(1, 2)),
                 PLFunction.linear(3)]
    for filt in enumeration.random_filtrations(20, [3, 5], seed=seed):
        functions.append(ramification.phi_of(filt))
        functions.append(ramification.psi_of(filt))
    return functions


def test_random_function_laws():
    """
    Associativity, jumps of a composition, jump ratios off the jumps and
    the inverse, on seeded Herbrand functions.
    """

    rng = np.random.default_rng(11)
    functions = random_functions()
    assert len(functions) == 43

    for f, g, h in zip(functions, functions[1:], functions[2:]):
        assert plfun.compose(plfun.compose(f, g), h) == \
            plfun.compose(f, plfun.compose(g, h))

    for f, g in zip(functions, functions[::-1]):
        g_inv = g.invert()
        allowed = set(g.jumps()) | {g_inv.eval(j) for j in f.jumps()}
        assert set(plfun.compose(f, g).jumps()) <= allowed

    for f in functions:
        f_inv = f.invert()
        jumps = f.jumps()
        for _ in range(5):
            x = Fraction(int(rng.integers(0, 400)), int(rng.integers(1, 8)))
            assert f_inv.eval(f.eval(x)) == x
            if x > 0 and x not in jumps:
                assert f.jump_ratio(x) == 1
        for jump in jumps:
            assert f.jump_ratio(jump) != 1
