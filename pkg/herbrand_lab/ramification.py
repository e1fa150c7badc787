#!/usr/bin/env python3
# coding: utf-8

"""
Ramification data of totally ramified layers and towers: lower numbering
filtrations, cyclic wild ramification data, Herbrand functions ``phi`` and
``psi``, wild exponents and valuation classes of group elements.

Filtrations are abstract: a residue characteristic ``p``, the lower jumps
``l_1 < ... < l_n`` and the orders ``g_0 > ... > g_n = 1`` of the
ramification subgroups, ``|G_x| = g_k`` for ``l_k < x <= l_{k+1}``.
"""

#####################################
# #######   RAMIFICATION   ##########
#####################################

# standard library
from collections import Counter, namedtuple
from fractions import Fraction

# In case ramification is launched as main, relative import will failed
try:
    from . import plfun
except ImportError:
    print("Relative import from . fails, use absolute import instead")
    import plfun

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

PLFunction = plfun.PLFunction

ElementClass = namedtuple('ElementClass', ['delta', 'count'])
PsiStep = namedtuple('PsiStep', ['jump', 'degree', 'wild_exp'])
Violation = namedtuple('Violation', ['constraint', 'detail'])


class InvalidSpec(ValueError):
    """Ramification or representation data violating an invariant."""


def is_odd_prime(p):
    """
    :Example:

    >>> [n for n in range(12) if is_odd_prime(n)]
    [3, 5, 7, 11]
    """
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= p:
        if p % divisor == 0:
            return False
        divisor += 2
    return True


def power_exponent(n, p):
    """Return ``k`` with ``n == p**k``, ``None`` if ``n`` is not a power
    of ``p``.

    :Example:

    >>> power_exponent(27, 3), power_exponent(12, 3), power_exponent(1, 5)
    (3, None, 0)
    """
    if n < 1:
        return None
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k if n == 1 else None


def _as_int(value, name):
    if isinstance(value, bool) or int(value) != value:
        raise InvalidSpec('{} must be an integer, got {!r}'.format(
            name, value))
    return int(value)


class Filtration:
    """Lower numbering ramification filtration of a totally ramified
    Galois layer.

    :param p: residue characteristic, an odd prime
    :type p: int

    :param breaks: lower jumps, strictly increasing positive integers
    :type breaks: list

    :param orders: ``len(breaks) + 1`` group orders ``g_0 > ... > g_n = 1``
    :type orders: list

    :param abelian: when set, upper jumps must be integers (Hasse-Arf)
    :type abelian: bool

    :Example:

    >>> filt = Filtration(3, [2, 11], [9, 3, 1])
    >>> filt.order, filt.depth
    (9, 2)
    >>> Filtration(3, [2, 11], [9, 4, 1])
    Traceback (most recent call last):
    ...
    herbrand_lab.ramification.InvalidSpec: orders (9, 4, 1) are not powers \
of p=3
    """

    __slots__ = ('_p', '_breaks', '_orders', '_abelian')

    def __init__(self, p, breaks=(), orders=(1,), abelian=False):
        p = _as_int(p, 'p')
        if not is_odd_prime(p):
            raise InvalidSpec('p={} is not an odd prime'.format(p))
        breaks = tuple(_as_int(l, 'break') for l in breaks)
        orders = tuple(_as_int(g, 'order') for g in orders)

        if len(orders) != len(breaks) + 1:
            raise InvalidSpec(
                '{} breaks need {} orders, got orders {}'.format(
                    len(breaks), len(breaks) + 1, orders))
        if any(l <= 0 for l in breaks):
            raise InvalidSpec('breaks {} must be positive'.format(breaks))
        if any(l_1 <= l_0 for l_0, l_1 in zip(breaks, breaks[1:])):
            raise InvalidSpec(
                'breaks {} are not strictly increasing'.format(breaks))
        if any(power_exponent(g, p) is None for g in orders):
            raise InvalidSpec('orders {} are not powers of p={}'.format(
                orders, p))
        if orders[-1] != 1:
            raise InvalidSpec('last order of {} must be 1'.format(orders))
        if any(g_1 >= g_0 for g_0, g_1 in zip(orders, orders[1:])):
            raise InvalidSpec(
                'orders {} are not strictly decreasing'.format(orders))

        self._p = p
        self._breaks = breaks
        self._orders = orders
        self._abelian = bool(abelian)

        if self._abelian:
            fractional = [j for j in upper_jumps(self) if j.denominator != 1]
            if fractional:
                raise InvalidSpec(
                    'Hasse-Arf: abelian filtration {} has non integral upper '
                    'jumps {}'.format(breaks, [str(j) for j in fractional]))

    @classmethod
    def trivial(cls, p):
        """ Filtration of the trivial group, ``phi`` is the identity."""
        return cls(p)

    @classmethod
    def from_classes(cls, p, classes):
        """Build the filtration whose non identity elements fall into the
        given valuation classes.

        :param classes: ``(delta, count)`` pairs with ``delta >= 1``
        :type classes: list

        :Example:

        >>> Filtration.from_classes(3, [(2, 6), (11, 2)])
        Filtration(p=3, breaks=(2, 11), orders=(9, 3, 1))
        """
        counts = Counter()
        for delta, count in classes:
            if delta < 1:
                raise InvalidSpec(
                    'wild class delta must be positive, got {}'.format(delta))
            counts[int(delta)] += int(count)
        breaks = sorted(counts)
        orders = [1]
        for delta in reversed(breaks):
            orders.append(orders[-1] + counts[delta])
        return cls(p, breaks, reversed(orders))

    @classmethod
    def from_dict(cls, data):
        return cls(data['p'], data.get('breaks', ()),
                   data.get('orders', (1,)), data.get('abelian', False))

    def to_dict(self):
        return {'p': self._p, 'breaks': list(self._breaks),
                'orders': list(self._orders), 'abelian': self._abelian}

    @property
    def p(self):
        return self._p

    @property
    def breaks(self):
        return self._breaks

    @property
    def orders(self):
        return self._orders

    @property
    def abelian(self):
        return self._abelian

    @property
    def order(self):
        """ ``g_0``, the degree of the layer."""
        return self._orders[0]

    @property
    def depth(self):
        return len(self._breaks)

    def __eq__(self, other):
        if not isinstance(other, Filtration):
            return NotImplemented
        return (self._p, self._breaks, self._orders) == \
            (other._p, other._breaks, other._orders)

    def __hash__(self):
        return hash((self._p, self._breaks, self._orders))

    def __repr__(self):
        return 'Filtration(p={}, breaks={}, orders={})'.format(
            self._p, self._breaks, self._orders)


class CyclicWildSpec:
    """Totally ramified cyclic extension of degree ``p**r`` over a base of
    absolute ramification index ``e_F``, given by the increments
    ``i_0, ..., i_{r-1}`` of its jumps.

    The lower jumps are ``l_m = sum_{k<m} i_k p**k`` and the upper jumps the
    partial sums ``j_m = sum_{k<m} i_k``. Construction only checks the types;
    use :func:`validate_cyclic` or :meth:`check` for admissibility.

    :Example:

    >>> spec = CyclicWildSpec(3, 2, 3, [2, 3])
    >>> spec.lower_jumps, spec.upper_jumps
    ((2, 11), (2, 5))
    """

    __slots__ = ('_p', '_r', '_e_F', '_increments')

    def __init__(self, p, r, e_F, increments):
        self._p = _as_int(p, 'p')
        self._r = _as_int(r, 'r')
        self._e_F = _as_int(e_F, 'e_F')
        self._increments = tuple(_as_int(i, 'increment') for i in increments)

    @classmethod
    def from_dict(cls, data):
        increments = data['increments']
        return cls(data['p'], data.get('r', len(increments)), data['e_F'],
                   increments)

    def to_dict(self):
        return {'p': self._p, 'r': self._r, 'e_F': self._e_F,
                'increments': list(self._increments)}

    @property
    def p(self):
        return self._p

    @property
    def r(self):
        return self._r

    @property
    def e_F(self):
        return self._e_F

    @property
    def increments(self):
        return self._increments

    @property
    def lower_jumps(self):
        jumps, total = [], 0
        for k, i in enumerate(self._increments):
            total += i * self._p ** k
            jumps.append(total)
        return tuple(jumps)

    @property
    def upper_jumps(self):
        jumps, total = [], 0
        for i in self._increments:
            total += i
            jumps.append(total)
        return tuple(jumps)

    @property
    def wild_exponent(self):
        """ ``sum_k i_k (p**r - p**k)``, intercept of the last ``psi``
        piece."""
        return partial_wild_exponent(self, self._r)

    def check(self):
        """Raise :class:`InvalidSpec` naming every violated constraint."""
        violations = validate_cyclic(self)
        if violations:
            raise InvalidSpec('; '.join(
                '{}: {}'.format(v.constraint, v.detail) for v in violations))
        return self

    def to_filtration(self):
        """ Equivalent :class:`Filtration`, ``|G_x|`` drops by ``p`` at each
        lower jump."""
        self.check()
        orders = [self._p ** (self._r - k) for k in range(self._r + 1)]
        return Filtration(self._p, self.lower_jumps, orders, abelian=True)

    def __eq__(self, other):
        if not isinstance(other, CyclicWildSpec):
            return NotImplemented
        return (self._p, self._r, self._e_F, self._increments) == \
            (other._p, other._r, other._e_F, other._increments)

    def __hash__(self):
        return hash((self._p, self._r, self._e_F, self._increments))

    def __repr__(self):
        return 'CyclicWildSpec(p={}, r={}, e_F={}, increments={})'.format(
            self._p, self._r, self._e_F, self._increments)


class TameLayer:
    """ Totally tamely ramified layer of degree ``e`` (``phi = x/e``)."""

    __slots__ = ('_degree',)

    def __init__(self, degree):
        degree = _as_int(degree, 'tame degree')
        if degree < 1:
            raise InvalidSpec('tame degree {} must be positive'.format(
                degree))
        self._degree = degree

    @property
    def degree(self):
        return self._degree

    @property
    def p(self):
        return None

    def phi(self):
        return PLFunction.linear(Fraction(1, self._degree))

    def to_dict(self):
        return {'tame': self._degree}

    def __eq__(self, other):
        return isinstance(other, TameLayer) and \
            self._degree == other._degree

    def __hash__(self):
        return hash(('tame', self._degree))

    def __repr__(self):
        return 'TameLayer({})'.format(self._degree)


class WildLayer:
    """Totally wildly ramified Galois layer.

    :param data: the layer filtration, a cyclic spec is converted
    :type data: Filtration or CyclicWildSpec
    """

    __slots__ = ('_filtration', '_source')

    def __init__(self, data):
        self._source = data
        self._filtration = as_filtration(data)

    @property
    def filtration(self):
        return self._filtration

    @property
    def degree(self):
        return self._filtration.order

    @property
    def p(self):
        return self._filtration.p

    def phi(self):
        return phi_of(self._filtration)

    def to_dict(self):
        return {'wild': self._source.to_dict()}

    def __eq__(self, other):
        return isinstance(other, WildLayer) and \
            self._filtration == other._filtration

    def __hash__(self):
        return hash(('wild', self._filtration))

    def __repr__(self):
        return 'WildLayer({!r})'.format(self._filtration)


class TowerSpec:
    """Tower of totally ramified layers read from the base field upward.

    :Example:

    >>> tower = TowerSpec([TameLayer(2), WildLayer(Filtration(3, [2, 11],
    ...                                                       [9, 3, 1]))])
    >>> tower.degree, tower.tame_degree, tower.p
    (18, 2, 3)
    >>> TowerSpec([TameLayer(3), WildLayer(Filtration(3, [2], [3, 1]))])
    Traceback (most recent call last):
    ...
    herbrand_lab.ramification.InvalidSpec: tame degree 3 is not coprime to p=3
    """

    __slots__ = ('_layers', '_p')

    def __init__(self, layers=()):
        self._layers = tuple(layers)
        primes = {layer.p for layer in self._layers if layer.p is not None}
        if len(primes) > 1:
            raise InvalidSpec(
                'wild layers carry different primes {}'.format(
                    sorted(primes)))
        self._p = primes.pop() if primes else None
        for layer in self._layers:
            if not isinstance(layer, (TameLayer, WildLayer)):
                raise InvalidSpec('unknown layer {!r}'.format(layer))
            if isinstance(layer, TameLayer) and self._p is not None and \
                    layer.degree % self._p == 0:
                raise InvalidSpec(
                    'tame degree {} is not coprime to p={}'.format(
                        layer.degree, self._p))

    @classmethod
    def from_dict(cls, data):
        layers = []
        for layer in data['layers']:
            if 'tame' in layer:
                layers.append(TameLayer(layer['tame']))
            elif 'wild' in layer:
                layers.append(WildLayer(wild_data_from_dict(layer['wild'])))
            else:
                raise InvalidSpec(
                    'layer {} is neither tame nor wild'.format(layer))
        return cls(layers)

    def to_dict(self):
        return {'layers': [layer.to_dict() for layer in self._layers]}

    @property
    def layers(self):
        return self._layers

    @property
    def p(self):
        return self._p

    @property
    def degree(self):
        degree = 1
        for layer in self._layers:
            degree *= layer.degree
        return degree

    @property
    def tame_degree(self):
        degree = 1
        for layer in self._layers:
            if isinstance(layer, TameLayer):
                degree *= layer.degree
        return degree

    @property
    def wild_order(self):
        return self.degree // self.tame_degree

    def __eq__(self, other):
        return isinstance(other, TowerSpec) and self._layers == other._layers

    def __hash__(self):
        return hash(self._layers)

    def __repr__(self):
        return 'TowerSpec({!r})'.format(list(self._layers))


def wild_data_from_dict(data):
    """ ``{p, r, e_F, increments}`` gives a cyclic spec, anything else a
    :class:`Filtration`."""
    if 'increments' in data:
        return CyclicWildSpec.from_dict(data)
    return Filtration.from_dict(data)


def extension_from_dict(data):
    """Read any extension schema: a filtration, a cyclic spec, a tower
    ``{layers: [...]}`` or a single layer ``{tame: e}`` / ``{wild: {...}}``.
    """
    if 'layers' in data:
        return TowerSpec.from_dict(data)
    if 'tame' in data or 'wild' in data:
        return TowerSpec.from_dict({'layers': [data]})
    return wild_data_from_dict(data)


def as_filtration(data):
    if isinstance(data, Filtration):
        return data
    if isinstance(data, CyclicWildSpec):
        return data.to_filtration()
    raise InvalidSpec('{!r} is not a wild layer description'.format(data))


def as_tower(data):
    """ Wrap a filtration or a cyclic spec as a one layer tower."""
    if isinstance(data, TowerSpec):
        return data
    return TowerSpec([WildLayer(data)])


def phi_of(filt):
    """Herbrand function ``phi(t) = (1/g_0) int_0^t |G_x| dx``.

    :Example:

    >>> phi = phi_of(Filtration(3, [2, 11], [9, 3, 1]))
    >>> [str(s) for s in phi.slopes]
    ['1', '1/3', '1/9']
    >>> phi_of(Filtration.trivial(5)).is_identity()
    True
    """
    filt = as_filtration(filt)
    return PLFunction.from_slopes(
        filt.breaks, [Fraction(g, filt.order) for g in filt.orders])


def psi_of(filt):
    """ ``psi = phi^{-1}``, its breakpoints are the upper jumps."""
    return phi_of(filt).invert()


def partial_wild_exponent(spec, depth):
    """Wild exponent of the depth ``depth`` subextension of a cyclic spec,
    ``sum_{k<depth} i_k (p**depth - p**k)``.
    """
    p = spec.p
    return sum(i * (p ** depth - p ** k)
               for k, i in enumerate(spec.increments[:depth]))


def cyclic_psi(spec):
    """Closed form ``psi`` of a cyclic spec: on ``[j_k, j_{k+1}]``,
    ``psi(x) = p**k x - sum_{l<k} i_l (p**k - p**l)``.

    :Example:

    >>> psi = cyclic_psi(CyclicWildSpec(3, 1, 2, [2]))
    >>> psi.last_piece()
    (Fraction(3, 1), Fraction(-4, 1))
    """
    spec.check()
    points = [(0, 0)]
    for k, j_k in enumerate(spec.upper_jumps, start=1):
        points.append((j_k, spec.p ** k * j_k -
                       partial_wild_exponent(spec, k)))
    return PLFunction(points, spec.p ** spec.r)


def cyclic_phi(spec):
    """Closed form ``phi`` of a cyclic spec: ``(x + w_k) / p**k`` after the
    lower jump ``l_k``, with ``w_k`` the wild exponent of the depth ``k``
    subextension.
    """
    spec.check()
    points = [(0, 0)]
    for k, l_k in enumerate(spec.lower_jumps, start=1):
        points.append((l_k, Fraction(l_k + partial_wild_exponent(spec, k),
                                     spec.p ** k)))
    return PLFunction(points, Fraction(1, spec.p ** spec.r))


def element_classes(filt, tame_order=1):
    """Valuation classes of the non identity elements.

    A class ``(delta, count)`` gathers the ``count`` elements ``s`` with
    ``v(s) - 1 = delta``. When the wild group is wrapped by tame layers of
    total degree ``tame_order``, the valuation 1 elements form a class of
    delta 0.

    :Example:

    >>> filt = Filtration(3, [2, 11], [9, 3, 1])
    >>> element_classes(filt)
    [ElementClass(delta=2, count=6), ElementClass(delta=11, count=2)]
    >>> element_classes(filt, tame_order=2)[0]
    ElementClass(delta=0, count=9)
    """
    filt = as_filtration(filt)
    if tame_order < 1:
        raise InvalidSpec('tame order {} must be positive'.format(tame_order))
    classes = []
    if tame_order > 1:
        classes.append(ElementClass(0, filt.order * tame_order - filt.order))
    for k, l_k in enumerate(filt.breaks, start=1):
        classes.append(ElementClass(l_k, filt.orders[k - 1] -
                                    filt.orders[k]))
    return classes


def wild_exponent(filt):
    """Wild exponent ``w = sum_{s != 1} (v(s) - 1)``, also read off the
    last ``psi`` piece ``g_0 x - w``.

    :Example:

    >>> wild_exponent(Filtration(3, [2, 11], [9, 3, 1]))
    34
    >>> wild_exponent(Filtration(5, [3], [5, 1]))
    12
    """
    filt = as_filtration(filt)
    slope, intercept = psi_of(filt).last_piece()
    assert slope == filt.order, \
        'last psi slope {} differs from g_0={}'.format(slope, filt.order)
    from_classes = sum(c.delta * c.count for c in element_classes(filt))
    assert -intercept == from_classes, \
        'psi intercept {} disagrees with class sum {}'.format(
            -intercept, from_classes)
    return from_classes


def upper_jumps(filt):
    """ Images of the lower jumps under ``phi``."""
    filt = as_filtration(filt)
    phi = phi_of(filt)
    return [phi.eval(l_k) for l_k in filt.breaks]


def compose_tower_phi(tower):
    """``phi`` of a whole tower, the base layer applied last:
    ``phi_{K/F} = phi_1 o phi_2 o ... o phi_n``.

    :Example:

    >>> tower = TowerSpec([TameLayer(2), WildLayer(Filtration(3, [2, 11],
    ...                                                       [9, 3, 1]))])
    >>> print(compose_tower_phi(tower).eval(11))
    5/2
    """
    tower = as_tower(tower)
    phi = PLFunction.identity()
    for layer in tower.layers:
        phi = plfun.compose(phi, layer.phi())
    return phi


def compose_tower_psi(tower):
    return compose_tower_phi(tower).invert()


def psi_relative(psi_big_mid, psi_big_base):
    """``psi`` of an intermediate step ``E/F`` inside ``E_1/F``, Galois or
    not: ``psi_{E_1/E}^{-1} o psi_{E_1/F}``.
    """
    return plfun.compose(psi_big_mid.invert(), psi_big_base)


def validate_cyclic(spec):
    """Admissibility diagnostics of a cyclic spec, an empty list when the
    spec is admissible.

    :Example:

    >>> validate_cyclic(CyclicWildSpec(3, 2, 3, [2, 3]))
    []
    >>> bad = CyclicWildSpec(3, 2, 3, [2, 2])
    >>> [v.constraint for v in validate_cyclic(bad)]
    ['fontaine_viennot_case_1']
    >>> validate_cyclic(CyclicWildSpec(3, 1, 1, [100]))[0].constraint
    'first_jump_bound'
    """
    p, r, e_F = spec.p, spec.r, spec.e_F
    violations = []
    if not is_odd_prime(p):
        violations.append(Violation('odd_prime',
                                    'p={} is not an odd prime'.format(p)))
    if r < 1:
        violations.append(Violation('positive_r',
                                    'r={} must be positive'.format(r)))
    if e_F < 1:
        violations.append(Violation('positive_e_F',
                                    'e_F={} must be positive'.format(e_F)))
    if len(spec.increments) != r:
        violations.append(Violation(
            'increment_count', '{} increments given for r={}'.format(
                len(spec.increments), r)))
    if any(i < 1 for i in spec.increments):
        violations.append(Violation(
            'positive_increments',
            'increments {} must be positive'.format(spec.increments)))
    if violations:
        return violations

    lower = spec.lower_jumps
    if any((l_m - lower[0]) % p for l_m in lower):
        violations.append(Violation(
            'congruence',
            'lower jumps {} are not congruent mod p={}'.format(lower, p)))

    bound = Fraction(p * e_F, p - 1)
    if spec.increments[0] > bound:
        violations.append(Violation(
            'first_jump_bound',
            'i_0={} exceeds p*e_F/(p-1)={}'.format(spec.increments[0],
                                                   bound)))

    for k in range(2, r + 1):
        l_prev, l_k = lower[k - 2], lower[k - 1]
        threshold = Fraction(p ** (k - 2) * e_F, p - 1)
        if l_prev >= threshold:
            expected = l_prev + p ** (k - 1) * e_F
            if l_k != expected:
                violations.append(Violation(
                    'fontaine_viennot_case_1',
                    'l_{k1}={l_prev} >= {thr} forces l_{k}=l_{k1}+{p}^{k1}'
                    '*e_F={exp} (i_{k1}=e_F={e}), got l_{k}={l_k}'.format(
                        k=k, k1=k - 1, l_prev=l_prev, thr=threshold, p=p,
                        exp=expected, e=e_F, l_k=l_k)))
        else:
            low = (1 + p * (p - 1)) * l_prev
            high = Fraction(p ** k * e_F, p - 1) - (p - 1) * l_prev
            if not low <= l_k <= high:
                violations.append(Violation(
                    'fontaine_viennot_case_2',
                    'l_{k1}={l_prev} < {thr} requires {low} <= l_{k} <= '
                    '{high}, got l_{k}={l_k}'.format(
                        k=k, k1=k - 1, l_prev=l_prev, thr=threshold,
                        low=low, high=high, l_k=l_k)))
    return violations


def wild_part(tower):
    """Filtration of the wild inertia subgroup of a whole tower, in the
    lower numbering of the top field. ``None`` for a tower without wild
    layer.

    Layers are added from the top down. An element of a new wild layer with
    jump ``l`` lifts with best valuation ``D = psi_{top/layer}(l)``; its
    coset through the wild group above has the valuations ``min(D, delta)``.

    :Example:

    >>> tower = TowerSpec([WildLayer(Filtration(3, [2, 11], [9, 3, 1])),
    ...                    TameLayer(2)])
    >>> wild_part(tower)
    Filtration(p=3, breaks=(4, 22), orders=(9, 3, 1))
    """
    tower = as_tower(tower)
    if tower.p is None:
        return None
    classes = Counter()
    psi_top = PLFunction.identity()
    for layer in reversed(tower.layers):
        if isinstance(layer, TameLayer):
            psi_top = plfun.compose(psi_top,
                                    PLFunction.linear(layer.degree))
            continue
        lifted_classes = Counter(classes)
        for cls in element_classes(layer.filtration):
            lifted = psi_top.eval(cls.delta)
            if lifted.denominator != 1:
                raise InvalidSpec(
                    'jump {} of layer {!r} lifts to the non integral lower '
                    'jump {}'.format(cls.delta, layer.filtration, lifted))
            lifted = int(lifted)
            lifted_classes[lifted] += cls.count
            for delta, count in classes.items():
                lifted_classes[min(lifted, delta)] += cls.count * count
        classes = lifted_classes
        psi_top = plfun.compose(psi_top, psi_of(layer.filtration))
    logger.debug('Wild part classes of {!r}: {}'.format(
        tower, sorted(classes.items())))
    return Filtration.from_classes(tower.p, classes.items())


def smallest_nonzero_jump(tower):
    """Smallest nonzero lower jump ``i_0`` of the full tower group.

    Tame layers under a wild layer do not move it, so with a single wild
    layer it is the first break of that layer.

    :Example:

    >>> filt = Filtration(3, [2, 11], [9, 3, 1])
    >>> smallest_nonzero_jump(TowerSpec([TameLayer(4), WildLayer(filt)]))
    2
    >>> smallest_nonzero_jump(TowerSpec([TameLayer(4)]))
    Traceback (most recent call last):
    ...
    herbrand_lab.ramification.InvalidSpec: tower is tame
    """
    wild = wild_part(tower)
    if wild is None or not wild.breaks:
        raise InvalidSpec('tower is tame')
    return wild.breaks[0]


def decompose_psi(filt):
    """Canonical subfield tower read off ``psi``: one
    ``PsiStep(jump, degree, wild_exp)`` per upper jump, with the slope ratio
    at the jump and the wild exponent in the intercept of the piece that
    starts there.

    :Example:

    >>> decompose_psi(Filtration(3, [2, 11], [9, 3, 1]))
    [PsiStep(jump=2, degree=3, wild_exp=4), PsiStep(jump=5, degree=3, \
wild_exp=34)]
    """
    psi = psi_of(filt)
    steps = []
    for jump in psi.jumps():
        slope = psi.right_slope(jump)
        wild_exp = slope * jump - psi.eval(jump)
        steps.append(PsiStep(int(jump) if jump.denominator == 1 else jump,
                             int(psi.jump_ratio(jump)), int(wild_exp)))
    return steps


def canonical_layers(filt):
    """Single jump filtrations of the canonical tower, base layer first.
    Layer ``k`` has break ``psi(j_k) = l_k`` and degree ``w_{j_k}``.
    """
    filt = as_filtration(filt)
    psi = psi_of(filt)
    layers = []
    for step in decompose_psi(filt):
        layers.append(Filtration(filt.p, [int(psi.eval(step.jump))],
                                 [step.degree, 1]))
    return layers


def split_filtration(filt, level):
    """Split ``G`` at the canonical level ``level`` (``1 <= level < n``).

    Return ``(sub, quotient)``: the filtration of ``H = G_{l_{level+1}}``
    and, through Herbrand's quotient rule, the one of ``G/H``.

    :Example:

    >>> sub, quotient = split_filtration(Filtration(3, [2, 11], [9, 3, 1]), 1)
    >>> sub, quotient
    (Filtration(p=3, breaks=(11,), orders=(3, 1)), \
Filtration(p=3, breaks=(2,), orders=(3, 1)))
    """
    filt = as_filtration(filt)
    if not 1 <= level < filt.depth:
        raise InvalidSpec('split level {} outside 1..{}'.format(
            level, filt.depth - 1))
    sub = Filtration(filt.p, filt.breaks[level:], filt.orders[level:])
    quotient = Filtration(filt.p, filt.breaks[:level],
                          [g // filt.orders[level]
                           for g in filt.orders[:level + 1]])
    return sub, quotient


def check_tower_lemmas(filt):
    """Check, on the canonical decomposition of ``filt``:

    * the composition of the layer ``phi`` gives ``phi_of(filt)``,
    * at every split level ``i' >= i``, ``i'' >= phi_sub(i)`` and
      ``phi_quotient o phi_sub = phi``,
    * for every layer, with ``phi'`` the composition of the layers above,
      ``phi'(l_0') <= l_i' <= l_i <= phi'(l_0)``. Canonical layers have a
      single jump, ``l_i = l_i'``, so ``phi'(l_0 - l_0') >= l_i - l_i'`` is
      trivial and not checked.

    :return: violations, empty when every lemma holds
    :rtype: list
    """
    filt = as_filtration(filt)
    phi = phi_of(filt)
    violations = []
    if not filt.breaks:
        return violations

    layers = canonical_layers(filt)
    composed = PLFunction.identity()
    for layer in layers:
        composed = plfun.compose(composed, phi_of(layer))
    if composed != phi:
        violations.append(Violation(
            'canonical_composition',
            'layers {} do not recompose phi of {!r}'.format(layers, filt)))

    i_0 = filt.breaks[0]
    for level in range(1, filt.depth):
        sub, quotient = split_filtration(filt, level)
        phi_sub = phi_of(sub)
        if sub.breaks[0] < i_0:
            violations.append(Violation(
                'subgroup_jump', "level {}: i'={} < i={}".format(
                    level, sub.breaks[0], i_0)))
        if quotient.breaks[0] < phi_sub.eval(i_0):
            violations.append(Violation(
                'quotient_jump', "level {}: i''={} < phi(i)={}".format(
                    level, quotient.breaks[0], phi_sub.eval(i_0))))
        if plfun.compose(phi_of(quotient), phi_sub) != phi:
            violations.append(Violation(
                'quotient_composition',
                'level {}: phi_quotient o phi_sub != phi'.format(level)))

    l_top, l_bottom = filt.breaks[-1], filt.breaks[0]
    for k, layer in enumerate(layers):
        above = PLFunction.identity()
        for upper in layers[k + 1:]:
            above = plfun.compose(above, phi_of(upper))
        l_i = layer.breaks[0]
        if above.eval(l_bottom) > l_i or l_i > above.eval(l_top):
            violations.append(Violation(
                'tower_inequality',
                'layer {} with break {} against jumps ({}, {})'.format(
                    k + 1, l_i, l_bottom, l_top)))
    return violations


if __name__ == "__main__":

    import doctest

    print("-Test ramification module:")
    print("ramification:  \t", doctest.testmod())
