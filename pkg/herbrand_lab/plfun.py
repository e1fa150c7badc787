#!/usr/bin/env python3
# coding: utf-8

"""
Exact algebra of continuous, strictly increasing piecewise-linear functions
on ``[0, +inf)``. Every Herbrand function of the package (``phi`` and
``psi``) is a :class:`PLFunction`.

All values are :class:`fractions.Fraction`, no floating point is used.
"""

#####################################
# #######     PL FUNCTION    ########
#####################################

# standard library
import sys
import bisect
import logging
from fractions import Fraction

# Autorship information
__author__ = "Herbrand Lab developers"
__copyright__ = "Copyright 2024, Herbrand Lab"
__credits__ = ["Herbrand Lab developers"]
__license__ = "GNU General Public License v2.0"
__version__ = "0.3.0"
__maintainer__ = "Herbrand Lab developers"
__status__ = "Production"

# Logging
logger = logging.getLogger(__name__)


def show_log(level=logging.INFO, stream=None):
    """ To use only with Doctest or the command line.
    Redirect logger output to sys.stdout (or to ``stream``).
    """
    logger.handlers = []
    logger.setLevel(level)
    logger.addHandler(logging.StreamHandler(
        sys.stdout if stream is None else stream))


def to_rational(value):
    """Convert an int, a string ``"num/den"``, a ``[num, den]`` pair or a
    Fraction into a Fraction.

    :Example:

    >>> print(to_rational([6, 4]), to_rational("7/2"), to_rational(3))
    3/2 7/2 3
    """
    if isinstance(value, (list, tuple)):
        if len(value) == 1:
            return Fraction(int(value[0]))
        if len(value) != 2:
            raise ValueError(
                'Rational pair {} must have two integers'.format(value))
        return Fraction(int(value[0]), int(value[1]))
    if isinstance(value, float):
        raise ValueError('Float {} is not an exact rational'.format(value))
    return Fraction(value)


def rational_to_pair(value):
    """Serialize a rational as ``[num, den]`` in lowest terms.

    :Example:

    >>> rational_to_pair(Fraction(44, 9))
    [44, 9]
    >>> rational_to_pair(-2)
    [-2, 1]
    """
    value = Fraction(value)
    return [value.numerator, value.denominator]


def rational_to_str(value):
    """ CSV rendering, ``"num/den"`` (always with the denominator)."""
    value = Fraction(value)
    return '{}/{}'.format(value.numerator, value.denominator)


class PLFunction:
    """Continuous, strictly increasing piecewise-linear function with
    ``f(0) = 0``.

    The function is stored as its breakpoints ``(x, y)`` (origin first) and
    the slope of the unbounded last piece. The constructor canonicalizes:
    collinear adjacent pieces are merged, so two functions are equal iff
    their breakpoints and final slopes are equal.

    :param breakpoints: sequence of ``(x, y)`` pairs starting at ``(0, 0)``
    :type breakpoints: list

    :param final_slope: slope after the last breakpoint
    :type final_slope: Fraction

    :Example:

    >>> f = PLFunction.from_slopes(
    ...     [2, 11], [1, Fraction(1, 3), Fraction(1, 9)])
    >>> print(f.eval(10), f.eval(11))
    14/3 5
    >>> f.jumps()
    [Fraction(2, 1), Fraction(11, 1)]
    """

    __slots__ = ('_xs', '_ys', '_slopes', '_final_slope')

    def __init__(self, breakpoints=((0, 0),), final_slope=1):
        points = [(to_rational(x), to_rational(y)) for x, y in breakpoints]
        final_slope = to_rational(final_slope)

        if not points or points[0] != (0, 0):
            raise ValueError('First breakpoint must be the origin, '
                             'got {}'.format(points[:1]))
        if final_slope <= 0:
            raise ValueError(
                'Final slope {} is not positive'.format(final_slope))
        for (x_0, y_0), (x_1, y_1) in zip(points, points[1:]):
            if x_1 <= x_0 or y_1 <= y_0:
                raise ValueError('Breakpoints ({}, {}) and ({}, {}) are not '
                                 'strictly increasing'.format(
                                     x_0, y_0, x_1, y_1))

        slopes = [(y_1 - y_0) / (x_1 - x_0) for (x_0, y_0), (x_1, y_1)
                  in zip(points, points[1:])] + [final_slope]

        # Merge collinear pieces
        kept = [points[0]]
        for i in range(1, len(points)):
            if slopes[i - 1] != slopes[i]:
                kept.append(points[i])

        self._xs = tuple(x for x, _ in kept)
        self._ys = tuple(y for _, y in kept)
        self._final_slope = final_slope
        self._slopes = tuple(
            (self._ys[i + 1] - self._ys[i]) / (self._xs[i + 1] - self._xs[i])
            for i in range(len(self._xs) - 1)) + (final_slope,)

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def linear(cls, slope):
        """ ``x -> slope * x``, the Herbrand function of a tame layer is
        ``linear(1/e)``.
        """
        return cls(final_slope=slope)

    @classmethod
    def from_slopes(cls, breaks, slopes):
        """Build a function from its break abscissae and piece slopes.

        :param breaks: increasing positive abscissae
        :type breaks: list

        :param slopes: ``len(breaks) + 1`` positive slopes
        :type slopes: list
        """
        breaks = [to_rational(x) for x in breaks]
        slopes = [to_rational(s) for s in slopes]
        if len(slopes) != len(breaks) + 1:
            raise ValueError('Need {} slopes for {} breaks, got {}'.format(
                len(breaks) + 1, len(breaks), len(slopes)))
        points = [(Fraction(0), Fraction(0))]
        for x, slope in zip(breaks, slopes):
            x_0, y_0 = points[-1]
            points.append((x, y_0 + slope * (x - x_0)))
        return cls(points, slopes[-1])

    @classmethod
    def from_dict(cls, data):
        """Read the JSON object
        ``{breakpoints: [[[n, d], [n, d]], ...], final_slope: [n, d]}``.
        """
        return cls([(x, y) for x, y in data['breakpoints']],
                   data['final_slope'])

    def to_dict(self):
        return {'breakpoints': [[rational_to_pair(x), rational_to_pair(y)]
                                for x, y in self.breakpoints],
                'final_slope': rational_to_pair(self._final_slope)}

    @property
    def breakpoints(self):
        return list(zip(self._xs, self._ys))

    @property
    def final_slope(self):
        return self._final_slope

    @property
    def slopes(self):
        """Piece slopes, the last one being :attr:`final_slope`."""
        return list(self._slopes)

    def is_identity(self):
        return len(self._xs) == 1 and self._final_slope == 1

    def _piece_index(self, x):
        # Index of the piece [x_i, x_{i+1}) containing x
        return bisect.bisect_right(self._xs, x) - 1

    def eval(self, x):
        """Evaluate the function at ``x >= 0``.

        :Example:

        >>> print(PLFunction.linear(Fraction(1, 3)).eval(Fraction(7, 2)))
        7/6
        >>> PLFunction().eval(-1)
        Traceback (most recent call last):
        ...
        ValueError: Cannot evaluate at negative x = -1
        """
        x = to_rational(x)
        if x < 0:
            raise ValueError('Cannot evaluate at negative x = {}'.format(x))
        i = self._piece_index(x)
        return self._ys[i] + self._slopes[i] * (x - self._xs[i])

    __call__ = eval

    def right_slope(self, x):
        x = to_rational(x)
        if x < 0:
            raise ValueError('No slope at negative x = {}'.format(x))
        return self._slopes[self._piece_index(x)]

    def left_slope(self, x):
        x = to_rational(x)
        if x <= 0:
            raise ValueError('No left slope at x = {}'.format(x))
        return self._slopes[bisect.bisect_left(self._xs, x) - 1]

    def invert(self):
        """Inverse function: swapped breakpoints, reciprocal slopes.

        :Example:

        >>> psi = PLFunction.from_slopes([2, 5], [1, 3, 9])
        >>> phi = psi.invert()
        >>> phi == PLFunction.from_slopes(
        ...     [2, 11], [1, Fraction(1, 3), Fraction(1, 9)])
        True
        """
        return PLFunction(zip(self._ys, self._xs), 1 / self._final_slope)

    def jumps(self):
        """ Abscissae where the derivative is discontinuous."""
        return list(self._xs[1:])

    def jump_ratio(self, x):
        """Right slope over left slope at ``x > 0``, greater than 1 iff
        the slope increases at ``x``.

        :Example:

        >>> psi = PLFunction.from_slopes([2, 5], [1, 3, 9])
        >>> psi.jump_ratio(5), psi.jump_ratio(3)
        (Fraction(3, 1), Fraction(1, 1))
        """
        x = to_rational(x)
        if x <= 0:
            raise ValueError('Jump ratio is undefined at x = {}'.format(x))
        return self.right_slope(x) / self.left_slope(x)

    def last_piece(self):
        """ Return ``(slope, intercept)`` of the unbounded last piece."""
        return (self._final_slope,
                self._ys[-1] - self._final_slope * self._xs[-1])

    def sample(self, start, stop, num):
        """ ``num + 1`` exact points evenly spaced on ``[start, stop]``.

        :Example:

        >>> for x, y in PLFunction.linear(Fraction(1, 3)).sample(0, 3, 3):
        ...     print(x, y)
        0 0
        1 1/3
        2 2/3
        3 1
        """
        start, stop = to_rational(start), to_rational(stop)
        num = int(num)
        if num < 1:
            raise ValueError('Need at least one sampling step, '
                             'got {}'.format(num))
        if start < 0 or stop < start:
            raise ValueError('Invalid sampling range [{}, {}]'.format(
                start, stop))
        step = (stop - start) / num
        return [(start + k * step, self.eval(start + k * step))
                for k in range(num + 1)]

    def __eq__(self, other):
        if not isinstance(other, PLFunction):
            return NotImplemented
        return (self._xs == other._xs and self._ys == other._ys and
                self._final_slope == other._final_slope)

    def __hash__(self):
        return hash((self._xs, self._ys, self._final_slope))

    def __repr__(self):
        pieces = ', '.join('({}, {})'.format(x, y)
                           for x, y in zip(self._xs, self._ys))
        return 'PLFunction([{}], final_slope={})'.format(
            pieces, self._final_slope)


def compose(outer, inner):
    """Return ``outer o inner`` in canonical form.

    The breakpoints of the result are the breakpoints of ``inner`` and the
    preimages under ``inner`` of the breakpoints of ``outer``.

    :param outer: applied last
    :type outer: PLFunction

    :param inner: applied first
    :type inner: PLFunction

    :Example:

    >>> half = PLFunction.linear(Fraction(1, 2))
    >>> third = PLFunction.linear(Fraction(1, 3))
    >>> compose(half, third) == PLFunction.linear(Fraction(1, 6))
    True
    """
    inner_inverse = inner.invert()
    xs = set(inner.jumps())
    xs.update(inner_inverse.eval(x) for x in outer.jumps())
    points = [(Fraction(0), Fraction(0))]
    points += [(x, outer.eval(inner.eval(x))) for x in sorted(xs)]
    return PLFunction(points, outer.final_slope * inner.final_slope)


if __name__ == "__main__":

    import doctest

    print("-Test plfun module:")
    print("plfun:  \t", doctest.testmod())
