#!/usr/bin/env python3
# coding: utf-8

"""
Slopes and Swan conductors of characters, induced representations and
Carayol representations, together with two computations of the slope of
the adjoint representation ``rho x rho^v``:

* the closed forms, :func:`adjoint_slope_closed`,
* a Mackey decomposition sum over valuation classes,
  :func:`adjoint_slope_mackey`, used as an independent oracle.
"""

#####################################
# #######       REPS       ##########
#####################################

# standard library
import math
from enum import Enum
from fractions import Fraction

# In case reps is launched as main, relative import will failed
try:
    from . import plfun
    from . import ramification
except ImportError:
    print("Relative import from . fails, use absolute import instead")
    import plfun
    import ramification

# Autorship information
__author__ = "Herbrand Lab developers"
__copyright__ = "Copyright 2024, Herbrand Lab"
__credits__ = ["Herbrand Lab developers"]
__license__ = "GNU General Public License v2.0"
__version__ = "0.3.0"
__maintainer__ = "Herbrand Lab developers"
__status__ = "Production"

# Logging
logger = plfun.logger

InvalidSpec = ramification.InvalidSpec


class IndeterminateTwist(ArithmeticError):
    """A twisted character fell in the case ``sigma > delta`` with
    ``sigma = delta mod p``, whose slope is not fixed by slope data."""


class NotEpipelagic(ValueError):
    """Swan conductor is not 1."""


class _Indeterminate:

    __slots__ = ()

    def __repr__(self):
        return 'Indeterminate'


INDETERMINATE = _Indeterminate()


class Domain(Enum):
    """ Which closed form covers a Carayol spec."""
    M_GREATER_ONE = 'MGreaterOne'
    WILD_INDUCED = 'WildInduced'
    GENERAL_CARAYOL = 'GeneralCarayol'
    OUT_OF_THEOREM_SCOPE = 'OutOfTheoremScope'


def _positive_int(value, name, minimum=1):
    value = ramification._as_int(value, name)
    if value < minimum:
        raise InvalidSpec('{}={} must be at least {}'.format(
            name, value, minimum))
    return value


class CharacterData:
    """ A character of the Weil group of the top field, known through its
    slope (its Swan conductor)."""

    __slots__ = ('_slope',)

    def __init__(self, slope):
        self._slope = _positive_int(slope, 'character slope', minimum=0)

    @property
    def slope(self):
        return self._slope

    @property
    def wild(self):
        return self._slope >= 1

    def to_dict(self):
        return {'slope': self._slope}

    def __eq__(self, other):
        return isinstance(other, CharacterData) and \
            self._slope == other._slope

    def __hash__(self):
        return hash(self._slope)

    def __repr__(self):
        return 'CharacterData({})'.format(self._slope)


class InducedSpec:
    """``Ind_{K/F} chi`` for a character ``chi`` of the top field ``K``.

    :param extension: ``K/F`` as a filtration, a cyclic spec or a tower
    :type extension: Filtration, CyclicWildSpec or TowerSpec

    :param character: the induced character
    :type character: CharacterData
    """

    __slots__ = ('_extension', '_tower', '_character', '_wild')

    def __init__(self, extension, character):
        if not isinstance(character, CharacterData):
            character = CharacterData(character)
        self._extension = extension
        self._tower = ramification.as_tower(extension)
        self._character = character
        self._wild = ramification.wild_part(self._tower)
        if self._wild is not None and self._wild.breaks and \
                character.slope < self._wild.breaks[-1]:
            raise InvalidSpec(
                'character slope {} is below the largest lower jump {}, '
                'the induced representation is reducible'.format(
                    character.slope, self._wild.breaks[-1]))

    @classmethod
    def from_dict(cls, data):
        return cls(ramification.extension_from_dict(data['extension']),
                   CharacterData(data['character']['slope']))

    def to_dict(self):
        return {'extension': self._extension.to_dict(),
                'character': self._character.to_dict()}

    @property
    def tower(self):
        return self._tower

    @property
    def character(self):
        return self._character

    @property
    def wild(self):
        """ Wild inertia filtration in the top numbering, or ``None``."""
        return self._wild

    @property
    def dim(self):
        return self._tower.degree


class CarayolSpec:
    """Carayol representation ``rho`` described by its tower
    ``F c F' c E c T c K``: ``F'/F`` tame of degree ``m``, ``E/F'`` wild,
    ``T/E`` tame of degree ``t`` and ``K/T`` wild, with
    ``rho = Ind_{E/F} tau`` and ``tau|_T = Ind_{K/T} chi``.

    :param core_wild: ``K/T``
    :type core_wild: Filtration or CyclicWildSpec

    :param character: ``chi``
    :type character: CharacterData or int

    :param tame_top: ``m``
    :type tame_top: int

    :param wild_mid: ``E/F'``, optional
    :type wild_mid: Filtration or CyclicWildSpec

    :param core_tame: ``t``
    :type core_tame: int

    :Example:

    >>> spec = CarayolSpec(ramification.Filtration(3, [2, 11], [9, 3, 1]), 12)
    >>> spec.dim, spec.r
    (9, 2)
    """

    __slots__ = ('_core_wild', '_character', '_tame_top', '_wild_mid',
                 '_core_tame', '_tower', '_wild', '_cache')

    def __init__(self, core_wild, character, tame_top=1, wild_mid=None,
                 core_tame=1):
        if not isinstance(character, CharacterData):
            character = CharacterData(character)
        self._core_wild = core_wild
        self._character = character
        self._tame_top = _positive_int(tame_top, 'tame_top')
        self._wild_mid = wild_mid
        self._core_tame = _positive_int(core_tame, 'core_tame')

        core = ramification.as_filtration(core_wild)
        layers = []
        if self._tame_top > 1:
            layers.append(ramification.TameLayer(self._tame_top))
        if wild_mid is not None:
            layers.append(ramification.WildLayer(wild_mid))
        if self._core_tame > 1:
            layers.append(ramification.TameLayer(self._core_tame))
        layers.append(ramification.WildLayer(core))
        self._tower = ramification.TowerSpec(layers)
        self._wild = ramification.wild_part(self._tower)
        self._cache = {}

        if self._wild is not None and self._wild.breaks and \
                character.slope < self._wild.breaks[-1]:
            raise InvalidSpec(
                'character slope {} is below the largest lower jump {} of '
                'the wild part'.format(character.slope,
                                       self._wild.breaks[-1]))

    @classmethod
    def from_dict(cls, data):
        mid = data.get('wild_mid')
        return cls(ramification.wild_data_from_dict(data['core_wild']),
                   CharacterData(data['character']['slope']),
                   tame_top=data.get('tame_top', 1),
                   wild_mid=None if mid is None else
                   ramification.wild_data_from_dict(mid),
                   core_tame=data.get('core_tame', 1))

    def to_dict(self):
        data = {'tame_top': self._tame_top,
                'core_tame': self._core_tame,
                'core_wild': self._core_wild.to_dict(),
                'character': self._character.to_dict()}
        if self._wild_mid is not None:
            data['wild_mid'] = self._wild_mid.to_dict()
        return data

    @property
    def tame_top(self):
        return self._tame_top

    @property
    def core_tame(self):
        return self._core_tame

    @property
    def wild_mid(self):
        return self._wild_mid

    @property
    def core_wild(self):
        return self._core_wild

    @property
    def character(self):
        return self._character

    @property
    def tower(self):
        """ Full tower ``F c F' c E c T c K``, trivial layers omitted."""
        return self._tower

    @property
    def wild(self):
        """ Wild inertia filtration of ``K/F`` in the numbering of ``K``."""
        return self._wild

    @property
    def p(self):
        return self._tower.p

    @property
    def dim(self):
        """ ``m * |E/F'| * |K/T|``, the core tame step is a restriction."""
        return self._tame_top * self._wild.order

    @property
    def r(self):
        return ramification.power_exponent(self._wild.order, self.p)

    @property
    def phi(self):
        """ ``phi_{K/F}`` of the full tower."""
        if 'phi' not in self._cache:
            self._cache['phi'] = ramification.compose_tower_phi(self._tower)
        return self._cache['phi']

    @property
    def i_0(self):
        """ Smallest nonzero lower jump of ``G(K/F)``."""
        if 'i_0' not in self._cache:
            self._cache['i_0'] = ramification.smallest_nonzero_jump(
                self._tower)
        return self._cache['i_0']

    def __repr__(self):
        return ('CarayolSpec(tame_top={}, wild_mid={!r}, core_tame={}, '
                'core_wild={!r}, character={!r})'.format(
                    self._tame_top, self._wild_mid, self._core_tame,
                    self._core_wild, self._character))


class SlopeReport:
    """ Dimension, Swan conductor and slope of a representation."""

    __slots__ = ('dim', 'swan', 'slope', 'carayol', 'domain')

    def __init__(self, dim, swan, slope, carayol=None, domain=None):
        self.dim = int(dim)
        self.swan = int(swan)
        self.slope = Fraction(slope)
        self.carayol = math.gcd(self.swan, self.dim) == 1 \
            if carayol is None else bool(carayol)
        self.domain = domain

    def to_dict(self):
        domain = self.domain.value if isinstance(self.domain, Domain) \
            else self.domain
        return {'dim': self.dim, 'swan': [self.swan],
                'slope': plfun.rational_to_pair(self.slope),
                'carayol': self.carayol, 'domain': domain}

    def __eq__(self, other):
        if not isinstance(other, SlopeReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return 'SlopeReport(dim={}, swan={}, slope={}, carayol={})'.format(
            self.dim, self.swan, self.slope, self.carayol)


def induction_slope(slope, degree):
    """ Slope after induction through a tame layer of degree ``e``."""
    return Fraction(slope) / degree


def restriction_slope(slope, degree):
    """ Slope after restriction to a tame layer of degree ``e``.

    :Example:

    >>> print(restriction_slope(induction_slope(7, 4), 4))
    7
    """
    return Fraction(slope) * degree


def swan_of_induced(spec):
    """ ``Sw(Ind chi) = Sw(chi) + w``.

    :Example:

    >>> filt = ramification.Filtration(3, [2, 11], [9, 3, 1])
    >>> swan_of_induced(InducedSpec(filt, CharacterData(12)))
    46
    """
    wild = spec.wild
    w = 0 if wild is None else ramification.wild_exponent(wild)
    return spec.character.slope + w


def slope_of_induced(spec):
    """ ``sl(Ind chi) = phi_{K/F}(sl(chi))``, checked against
    ``Sw / dim``.

    :Example:

    >>> filt = ramification.Filtration(3, [1, 4], [9, 3, 1])
    >>> print(slope_of_induced(InducedSpec(filt, CharacterData(5))))
    19/9
    """
    phi = ramification.compose_tower_phi(spec.tower)
    slope = phi.eval(spec.character.slope)
    assert slope == Fraction(swan_of_induced(spec), spec.dim), \
        'slope {} differs from Sw/dim = {}/{}'.format(
            slope, swan_of_induced(spec), spec.dim)
    if spec.tower.p is None:
        assert slope == induction_slope(spec.character.slope,
                                        spec.tower.tame_degree), \
            'tame induction slope {} is not sigma/e'.format(slope)
        assert restriction_slope(slope, spec.tower.tame_degree) == \
            spec.character.slope, \
            'restriction of slope {} does not give back sigma'.format(slope)
    return slope


def is_carayol(report):
    """
    :Example:

    >>> is_carayol(SlopeReport(9, 46, Fraction(46, 9)))
    True
    >>> is_carayol(SlopeReport(9, 45, 5))
    False
    """
    return math.gcd(report.swan, report.dim) == 1


def slope_report(spec):
    """:class:`SlopeReport` of an induced or a Carayol spec.

    For a Carayol spec ``sl(rho) = phi_{K/F}(sigma)`` and
    ``Sw(rho) = dim * sl(rho)`` must be an integer.
    """
    if isinstance(spec, InducedSpec):
        slope = slope_of_induced(spec)
        return SlopeReport(spec.dim, swan_of_induced(spec), slope)

    slope = spec.phi.eval(spec.character.slope)
    swan = slope * spec.dim
    if swan.denominator != 1:
        raise InvalidSpec(
            'Swan conductor {} of {!r} is not an integer'.format(swan, spec))
    return SlopeReport(spec.dim, swan, slope)


def twist_slope(sigma, delta, p):
    """Slope of ``chi^{lambda - 1}`` for ``v(lambda) - 1 = delta``.

    :Example:

    >>> twist_slope(12, 2, 3), twist_slope(2, 5, 3), twist_slope(5, 2, 3)
    (Fraction(10, 1), Fraction(0, 1), Indeterminate)
    >>> twist_slope(7, 0, 3)
    Fraction(7, 1)
    """
    if sigma < 0 or delta < 0:
        raise ValueError('sigma={} and delta={} must be nonnegative'.format(
            sigma, delta))
    if delta == 0:
        return Fraction(sigma)
    if sigma <= delta:
        return Fraction(0)
    if (sigma - delta) % p:
        return Fraction(sigma - delta)
    return INDETERMINATE


def _require_carayol(spec):
    report = slope_report(spec)
    if not report.carayol:
        raise InvalidSpec(
            'Carayol condition fails: gcd(Sw={}, dim={}) != 1'.format(
                report.swan, report.dim))
    return report


def _max_twist(spec):
    sigma = spec.character.slope
    best = Fraction(0)
    for cls in ramification.element_classes(spec.wild, spec.tame_top):
        twist = twist_slope(sigma, cls.delta, spec.p)
        if twist is INDETERMINATE:
            raise IndeterminateTwist(
                'sigma={} and delta={} are congruent mod p={} in {!r}'.format(
                    sigma, cls.delta, spec.p, spec))
        best = max(best, twist)
    return best


def adjoint_slope_mackey(spec):
    """Adjoint slope through the Mackey decomposition: the largest twist
    slope over the valuation classes (identity giving 0), pushed down by
    ``phi_{K/F}``.

    Only the tame top layer contributes valuation 1 classes; the core tame
    step is a restriction and only enters through ``phi``.

    :Example:

    >>> filt = ramification.Filtration(3, [2, 11], [9, 3, 1])
    >>> print(adjoint_slope_mackey(CarayolSpec(filt, 13)))
    5
    >>> print(adjoint_slope_mackey(CarayolSpec(filt, 12)))
    14/3
    """
    _require_carayol(spec)
    best = _max_twist(spec)
    value = spec.phi.eval(best)
    logger.debug('Mackey adjoint slope of {!r}: phi({}) = {}'.format(
        spec, best, value))
    return value


def adjoint_slope_closed(spec):
    """Closed form of the adjoint slope and the domain it belongs to.

    * ``m > 1``: ``sl(rho)``,
    * ``m = 1``: ``sl(rho) - phi_{K/F}(i_0) / dim``. It holds when
      ``r >= 2`` and ``sigma - i_0`` lies on the last piece of
      ``phi_{K/F}``; otherwise the value is still returned, tagged
      ``OutOfTheoremScope``.

    :return: value and domain
    :rtype: tuple

    :Example:

    >>> filt = ramification.Filtration(3, [2, 11], [9, 3, 1])
    >>> value, domain = adjoint_slope_closed(CarayolSpec(filt, 13))
    >>> print(value, domain.value)
    5 WildInduced
    >>> value, domain = adjoint_slope_closed(CarayolSpec(filt, 12))
    >>> print(value, domain.value)
    44/9 OutOfTheoremScope
    """
    report = _require_carayol(spec)
    if spec.tame_top > 1:
        return report.slope, Domain.M_GREATER_ONE
    if spec.r == 0:
        # A character, its adjoint is trivial
        return Fraction(0), Domain.OUT_OF_THEOREM_SCOPE

    value = report.slope - spec.phi.eval(spec.i_0) / spec.dim
    breaks = spec.phi.jumps()
    on_last_piece = not breaks or \
        spec.character.slope - spec.i_0 >= breaks[-1]
    if spec.r == 1 or not on_last_piece:
        domain = Domain.OUT_OF_THEOREM_SCOPE
    elif spec.core_tame > 1:
        domain = Domain.GENERAL_CARAYOL
    else:
        domain = Domain.WILD_INDUCED
    return value, domain


def adjoint_swan_mackey(spec):
    """Swan conductor of the adjoint of a character induced
    representation, summing ``Sw(Ind chi^{lambda - 1}) = Sw(chi^{lambda-1})
    + w`` over the group.

    :Example:

    >>> filt = ramification.Filtration(3, [2, 11], [9, 3, 1])
    >>> adjoint_swan_mackey(CarayolSpec(filt, 12))
    368
    """
    if spec.tame_top != 1 or spec.core_tame != 1:
        raise InvalidSpec(
            'adjoint Swan sum needs m=1 and no core tame step, got m={} '
            't={}'.format(spec.tame_top, spec.core_tame))
    _require_carayol(spec)
    sigma, p = spec.character.slope, spec.p
    w = ramification.wild_exponent(spec.wild)
    total = spec.wild.order * w
    for cls in ramification.element_classes(spec.wild):
        twist = twist_slope(sigma, cls.delta, p)
        if twist is INDETERMINATE:
            raise IndeterminateTwist(
                'sigma={} and delta={} are congruent mod p={}'.format(
                    sigma, cls.delta, p))
        total += cls.count * int(twist)
    return total


def adjoint_sanity(spec):
    """Both sides of ``p^{2r} sl(ad) >= Sw(ad)``.

    :return: ``(p^{2r} * adjoint slope, adjoint Swan)``
    :rtype: tuple
    """
    scaled = spec.p ** (2 * spec.r) * adjoint_slope_mackey(spec)
    return scaled, adjoint_swan_mackey(spec)


def epipelagic_adjoint(spec):
    """Adjoint slope of an epipelagic representation (``Sw = 1``):
    ``1 / dim`` when ``m > 1``, ``(1 - phi_{K/F}(i_0)) / dim`` otherwise.

    :Example:

    >>> trivial = ramification.Filtration.trivial(3)
    >>> print(epipelagic_adjoint(CarayolSpec(trivial, 1, tame_top=2)))
    1/2
    """
    report = slope_report(spec)
    if report.swan != 1:
        raise NotEpipelagic('Swan conductor is {}, not 1'.format(
            report.swan))
    if spec.tame_top > 1:
        value = Fraction(1, spec.dim)
    elif spec.r == 0:
        value = Fraction(0)
    else:
        value = (1 - spec.phi.eval(spec.i_0)) / spec.dim
    closed, _ = adjoint_slope_closed(spec)
    assert closed == value, \
        'epipelagic value {} differs from closed form {}'.format(
            value, closed)
    return value


if __name__ == "__main__":

    import doctest

    print("-Test reps module:")
    print("reps:  \t", doctest.testmod())
