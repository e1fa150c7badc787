#!/usr/bin/env python3
# coding: utf-8

"""
Generation of admissible cyclic ramification data and Carayol slopes, and
the sweep that checks every identity of :mod:`herbrand_lab.ramification`
and :mod:`herbrand_lab.reps` on bounded search spaces.
"""

#####################################
# #######   ENUMERATION    ##########
#####################################

# standard library
import json
import math
import itertools
from fractions import Fraction
from multiprocessing import Pool

# 3rd party packages
import numpy as np
from os_command_py import os_command

# In case enumeration is launched as main, relative import will failed
try:
    from . import plfun
    from . import ramification
    from . import reps
except ImportError:
    print("Relative import from . fails, use absolute import instead")
    import plfun
    import ramification
    import reps

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

CyclicWildSpec = ramification.CyclicWildSpec

CHECKS = ('oracle', 'tame_invariance', 'jump_gap', 'herbrand',
          'swan_identity', 'sanity_bound', 'monotone_bound', 'enumerator',
          'tower_lemmas')

COUNT_KEYS = ('tested', 'passed', 'failed', 'out_of_scope')


class SweepConfig:
    """Bounds of a verification sweep.

    :Example:

    >>> config = SweepConfig.from_dict({'primes': [3], 'r_range': [2]})
    >>> config.l_max, config.tame_wrappers
    (60, (1, 2, 4))
    """

    DEFAULT = {'primes': (3, 5, 7),
               'r_range': (2, 3),
               'e_F_range': (1, 2, 3, 4),
               'l_max': 60,
               'sigma_max': 120,
               'tame_wrappers': (1, 2, 4),
               'checks': CHECKS,
               'random_filtrations': 200,
               'seed': 0}

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(self.DEFAULT)
        if unknown:
            raise ramification.InvalidSpec(
                'unknown sweep config keys {}'.format(sorted(unknown)))
        values = dict(self.DEFAULT, **kwargs)

        self.primes = tuple(sorted(set(int(p) for p in values['primes'])))
        self.r_range = tuple(sorted(set(int(r) for r in values['r_range'])))
        self.e_F_range = tuple(sorted(set(int(e)
                                          for e in values['e_F_range'])))
        self.tame_wrappers = tuple(sorted(set(
            int(m) for m in values['tame_wrappers'])))
        self.l_max = int(values['l_max'])
        self.sigma_max = int(values['sigma_max'])
        self.random_filtrations = int(values['random_filtrations'])
        self.seed = int(values['seed'])
        self.checks = tuple(check for check in CHECKS
                            if check in set(values['checks']))

        bad_checks = set(values['checks']) - set(CHECKS)
        if bad_checks:
            raise ramification.InvalidSpec(
                'unknown checks {}'.format(sorted(bad_checks)))
        bad_primes = [p for p in self.primes
                      if not ramification.is_odd_prime(p)]
        if bad_primes:
            raise ramification.InvalidSpec(
                'primes {} are not odd primes'.format(bad_primes))
        for name in ('r_range', 'e_F_range', 'tame_wrappers'):
            if any(value < 1 for value in getattr(self, name)):
                raise ramification.InvalidSpec(
                    '{} {} must be positive'.format(
                        name, getattr(self, name)))
        if self.l_max < 1 or self.sigma_max < 1:
            raise ramification.InvalidSpec(
                'bounds l_max={} and sigma_max={} must be positive'.format(
                    self.l_max, self.sigma_max))
        if self.random_filtrations < 0:
            raise ramification.InvalidSpec(
                'random_filtrations={} must be nonnegative'.format(
                    self.random_filtrations))

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    @classmethod
    def from_json(cls, json_file):
        with open(json_file) as filin:
            return cls.from_dict(json.load(filin))

    def to_dict(self):
        return {'primes': list(self.primes), 'r_range': list(self.r_range),
                'e_F_range': list(self.e_F_range), 'l_max': self.l_max,
                'sigma_max': self.sigma_max,
                'tame_wrappers': list(self.tame_wrappers),
                'checks': list(self.checks),
                'random_filtrations': self.random_filtrations,
                'seed': self.seed}

    def tasks(self):
        """ Independent ``(p, r, e_F)`` slices of the sweep, in order."""
        return list(itertools.product(self.primes, self.r_range,
                                      self.e_F_range))


class VerificationReport:
    """Counts per check and counterexample certificates.

    Certificates are sorted when dumped, equal sweeps give identical bytes
    whatever the merge order.
    """

    def __init__(self, checks=(), counts=None, failures=(),
                 out_of_scope=()):
        self.counts = {check: dict.fromkeys(COUNT_KEYS, 0)
                       for check in checks}
        for check, values in (counts or {}).items():
            self.counts[check] = {key: int(values.get(key, 0))
                                  for key in COUNT_KEYS}
        self.failures = list(failures)
        self.out_of_scope = list(out_of_scope)

    def _count(self, check):
        return self.counts.setdefault(check, dict.fromkeys(COUNT_KEYS, 0))

    def record(self, check, passed, certificate=None):
        count = self._count(check)
        count['tested'] += 1
        if passed:
            count['passed'] += 1
        else:
            count['failed'] += 1
            logger.debug('Check {} failed: {}'.format(check, certificate))
            self.failures.append(dict(certificate or {}, check=check))

    def record_out_of_scope(self, check, certificate=None):
        count = self._count(check)
        count['tested'] += 1
        count['out_of_scope'] += 1
        if certificate is not None:
            self.out_of_scope.append(dict(certificate, check=check))

    def merge(self, other):
        merged = VerificationReport(counts=self.counts)
        for check, values in other.counts.items():
            count = merged._count(check)
            for key in COUNT_KEYS:
                count[key] += values[key]
        merged.failures = self.failures + other.failures
        merged.out_of_scope = self.out_of_scope + other.out_of_scope
        return merged

    @property
    def failed(self):
        return sum(count['failed'] for count in self.counts.values())

    @property
    def ok(self):
        return self.failed == 0

    @staticmethod
    def _sorted(certificates):
        return sorted(certificates,
                      key=lambda cert: json.dumps(cert, sort_keys=True))

    def to_dict(self):
        return {'counts': {check: dict(self.counts[check])
                           for check in sorted(self.counts)},
                'failures': self._sorted(self.failures),
                'out_of_scope': self._sorted(self.out_of_scope),
                'failed': self.failed}

    @classmethod
    def from_dict(cls, data):
        return cls(counts=data.get('counts', {}),
                   failures=data.get('failures', ()),
                   out_of_scope=data.get('out_of_scope', ()))

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def write_report(report, out_file, check_file_out=True):
    """Write a report as JSON.

    :param check_file_out: flag to check or not if file has already been
        created. If the file is present then the command break.
    :type check_file_out: bool, optional, default=True
    """
    if check_file_out and os_command.check_file_and_create_path(out_file):
        logger.info("Report {} already exist, file not saved".format(
            out_file))
        return
    with open(out_file, 'w') as filout:
        filout.write(report.to_json() + '\n')
    logger.info("Succeed to save report {}".format(out_file))


def enum_cyclic(p, r, e_F, l_max):
    """Admissible cyclic specs with ``l_r <= l_max``, in lexicographic
    increment order.

    The generator propagates the first jump bound and the Fontaine-Viennot
    windows step by step instead of filtering.

    :Example:

    >>> [s.increments for s in enum_cyclic(3, 1, 1, 1)]
    [(1,)]
    >>> [s.lower_jumps for s in enum_cyclic(3, 2, 1, 4)]
    [(1, 4)]
    """
    if not ramification.is_odd_prime(p) or r < 1 or e_F < 1 or l_max < 1:
        return

    def extend(increments, l_prev, k):
        if k > r:
            yield CyclicWildSpec(p, r, e_F, increments)
            return
        step = p ** (k - 1)
        if l_prev >= Fraction(p ** (k - 2) * e_F, p - 1):
            candidates = [e_F] if l_prev + step * e_F <= l_max else []
        else:
            low = (1 + p * (p - 1)) * l_prev
            high = min(Fraction(p ** k * e_F, p - 1) - (p - 1) * l_prev,
                       l_max)
            candidates = range(max(1, math.ceil(Fraction(low - l_prev,
                                                         step))),
                               math.floor((high - l_prev) / step) + 1)
        for i in candidates:
            yield from extend(increments + (i,), l_prev + i * step, k + 1)

    for i_0 in range(1, min(p * e_F // (p - 1), l_max) + 1):
        yield from extend((i_0,), i_0, 2)


def enum_cyclic_bruteforce(p, r, e_F, l_max):
    """Generate every increment tuple with ``l_r <= l_max`` and keep the
    ones :func:`ramification.validate_cyclic` accepts."""
    if not ramification.is_odd_prime(p) or r < 1:
        return
    ranges = [range(1, l_max // p ** k + 1) for k in range(r)]
    for increments in itertools.product(*ranges):
        spec = CyclicWildSpec(p, r, e_F, increments)
        if spec.lower_jumps[-1] <= l_max and \
                not ramification.validate_cyclic(spec):
            yield spec


def enum_carayol_slopes(spec, sigma_max):
    """Character slopes ``l_r <= sigma <= sigma_max`` with
    ``p`` not dividing ``sigma + w``.

    :Example:

    >>> list(enum_carayol_slopes(CyclicWildSpec(3, 2, 3, [2, 3]), 16))
    [12, 13, 15, 16]
    """
    w = spec.wild_exponent
    for sigma in range(spec.lower_jumps[-1], sigma_max + 1):
        if (sigma + w) % spec.p:
            yield sigma


def random_filtrations(num, primes, seed=0, max_break=40, max_depth=3):
    """ Seeded random general filtrations, drops of ``p`` or ``p**2``.

    :Example:

    >>> filts = list(random_filtrations(5, [3, 5], seed=1))
    >>> len(filts), all(f.orders[-1] == 1 for f in filts)
    (5, True)
    """
    primes = sorted(primes)
    if not primes:
        return
    rng = np.random.default_rng(seed)
    for _ in range(num):
        p = int(rng.choice(primes))
        depth = int(rng.integers(1, max_depth + 1))
        breaks = sorted(int(l) for l in rng.choice(
            np.arange(1, max_break + 1), size=depth, replace=False))
        drops = [int(d) for d in rng.integers(1, 3, size=depth)]
        exponents = np.cumsum(drops[::-1])[::-1]
        orders = [p ** int(k) for k in exponents] + [1]
        yield ramification.Filtration(p, breaks, orders)


def _certificate(spec, sigma=None, tame_top=None, **values):
    cert = {'spec': spec.to_dict()}
    if sigma is not None:
        cert['sigma'] = sigma
    if tame_top is not None:
        cert['tame_top'] = tame_top
    if values:
        cert['values'] = {key: plfun.rational_to_pair(value)
                          for key, value in values.items()}
    return cert


def _herbrand_holds(filt, spec=None):
    phi = ramification.phi_of(filt)
    psi = ramification.psi_of(filt)
    uppers = ramification.upper_jumps(filt)
    slope, intercept = psi.last_piece()
    holds = (plfun.compose(phi, psi).is_identity() and
             plfun.compose(psi, phi).is_identity() and
             psi.jumps() == uppers and
             all(psi.jump_ratio(j) > 1 for j in uppers) and
             slope == filt.order and
             -intercept == ramification.wild_exponent(filt) and
             all(psi.jump_ratio(step.jump) == step.degree
                 for step in ramification.decompose_psi(filt)))
    if spec is not None:
        holds = holds and (
            ramification.cyclic_psi(spec) == psi and
            ramification.cyclic_phi(spec) == phi and
            uppers == list(spec.upper_jumps) and
            all(j.denominator == 1 for j in uppers) and
            all(psi.jump_ratio(j) == spec.p for j in uppers))
    return holds


def _check_slopes(spec, filt, sigma, config, report):
    checks = config.checks
    for m in config.tame_wrappers:
        if m % spec.p == 0:
            continue
        carayol = reps.CarayolSpec(filt, sigma, tame_top=m)
        rho = reps.slope_report(carayol)
        if not rho.carayol:
            continue
        try:
            mackey = reps.adjoint_slope_mackey(carayol)
        except reps.IndeterminateTwist:
            check = 'oracle' if m == 1 else 'tame_invariance'
            if check in checks:
                report.record(check, False,
                              _certificate(spec, sigma, m, sl=rho.slope))
            continue
        closed, domain = reps.adjoint_slope_closed(carayol)
        cert = _certificate(spec, sigma, m, closed=closed, mackey=mackey,
                            sl=rho.slope)

        in_scope = domain is not reps.Domain.OUT_OF_THEOREM_SCOPE
        if m == 1:
            if 'oracle' in checks:
                if in_scope:
                    report.record('oracle', closed == mackey, cert)
                else:
                    if closed != mackey:
                        logger.debug(
                            'Out of scope divergence {}: closed {} vs '
                            'Mackey {}'.format(spec, closed, mackey))
                    report.record_out_of_scope(
                        'oracle', cert if closed != mackey else None)
            if 'swan_identity' in checks or 'sanity_bound' in checks:
                scaled, ad_swan = reps.adjoint_sanity(carayol)
                if 'swan_identity' in checks:
                    expected = (spec.p ** spec.r - 1) * rho.swan
                    report.record('swan_identity', ad_swan == expected,
                                  dict(cert, ad_swan=ad_swan,
                                       expected=expected))
                if 'sanity_bound' in checks:
                    bound_cert = dict(cert, ad_swan=ad_swan,
                                      scaled=plfun.rational_to_pair(scaled))
                    if in_scope:
                        report.record('sanity_bound', scaled >= ad_swan,
                                      bound_cert)
                    else:
                        report.record_out_of_scope(
                            'sanity_bound',
                            bound_cert if scaled < ad_swan else None)
        elif 'tame_invariance' in checks:
            report.record('tame_invariance',
                          mackey == rho.slope and closed == rho.slope and
                          domain is reps.Domain.M_GREATER_ONE, cert)

        if 'monotone_bound' in checks:
            report.record('monotone_bound',
                          mackey <= rho.slope and
                          (mackey == rho.slope) == (m > 1), cert)


def _verify_slice(payload):
    """ Worker: every check on one ``(p, r, e_F)`` slice."""
    config_dict, p, r, e_F = payload
    config = SweepConfig.from_dict(config_dict)
    checks = config.checks
    report = VerificationReport(checks)

    specs = list(enum_cyclic(p, r, e_F, config.l_max))
    if 'enumerator' in checks:
        oracle = list(enum_cyclic_bruteforce(p, r, e_F, config.l_max))
        report.record('enumerator', specs == oracle,
                      {'p': p, 'r': r, 'e_F': e_F, 'l_max': config.l_max,
                       'generated': [list(s.increments) for s in specs],
                       'oracle': [list(s.increments) for s in oracle]})

    for spec in specs:
        filt = spec.to_filtration()
        if 'jump_gap' in checks and spec.r >= 2:
            l_1, l_r = spec.lower_jumps[0], spec.lower_jumps[-1]
            report.record('jump_gap', l_r - l_1 >= spec.upper_jumps[-1],
                          _certificate(spec))
        if 'herbrand' in checks:
            report.record('herbrand', _herbrand_holds(filt, spec),
                          _certificate(spec))
        if 'tower_lemmas' in checks:
            violations = ramification.check_tower_lemmas(filt)
            report.record('tower_lemmas', not violations,
                          dict(_certificate(spec),
                               violations=[list(v) for v in violations]))
        for sigma in enum_carayol_slopes(spec, config.sigma_max):
            _check_slopes(spec, filt, sigma, config, report)

    logger.debug('Slice p={} r={} e_F={}: {} specs'.format(
        p, r, e_F, len(specs)))
    return report


def _verify_random(config_dict):
    config = SweepConfig.from_dict(config_dict)
    report = VerificationReport(config.checks)
    for filt in random_filtrations(config.random_filtrations, config.primes,
                                   config.seed):
        report.record('herbrand', _herbrand_holds(filt),
                      {'spec': filt.to_dict()})
        if 'tower_lemmas' in config.checks:
            violations = ramification.check_tower_lemmas(filt)
            report.record('tower_lemmas', not violations,
                          {'spec': filt.to_dict(),
                           'violations': [list(v) for v in violations]})
    return report


def _run_payload(payload):
    if payload[0] == 'random':
        return _verify_random(payload[1])
    return _verify_slice(payload[1:])


def sweep_verify(config, workers=1):
    """Run every configured check over the enumerated specs, slopes and
    tame wrappers.

    :param config: sweep bounds
    :type config: SweepConfig

    :param workers: number of processes, slices are independent
    :type workers: int, optional, default=1

    :return: merged report, identical for any ``workers``
    :rtype: VerificationReport

    :Example:

    >>> config = SweepConfig(primes=[3], r_range=[2], e_F_range=[1],
    ...                      l_max=4, sigma_max=8, random_filtrations=0)
    >>> report = sweep_verify(config)
    >>> report.counts['oracle'], report.ok
    ({'tested': 3, 'passed': 3, 'failed': 0, 'out_of_scope': 0}, True)
    """
    config_dict = config.to_dict()
    payloads = [('slice', config_dict) + task for task in config.tasks()]
    if 'herbrand' in config.checks and config.random_filtrations and \
            config.primes:
        payloads.append(('random', config_dict))

    if workers > 1 and len(payloads) > 1:
        with Pool(processes=workers) as pool:
            reports = pool.map(_run_payload, payloads)
    else:
        reports = [_run_payload(payload) for payload in payloads]

    report = VerificationReport(config.checks)
    for partial in reports:
        report = report.merge(partial)
    logger.info('Succeed to verify {} slices, {} failures, {} out of scope '
                'divergences'.format(len(payloads), report.failed,
                                     len(report.out_of_scope)))
    return report


if __name__ == "__main__":

    import doctest

    print("-Test enumeration module:")
    print("enumeration:  \t", doctest.testmod())
