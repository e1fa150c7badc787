#!/usr/bin/env python3
# coding: utf-8

"""
Command line front end of herbrand_lab.

Every subcommand reads a JSON spec file or inline flags and writes JSON
(default) or CSV on stdout, diagnostics go to stderr. Rationals are
``[num, den]`` pairs in JSON and ``"num/den"`` strings in CSV.

Exit status: 0 on success, 1 on invalid input, 2 when ``verify`` finds a
failure inside the theorem scope.
"""

#####################################
# #######        CLI       ##########
#####################################

# standard library
import os
import io
import sys
import csv
import json
import argparse
from decimal import Decimal, localcontext

# 3rd party packages
from os_command_py import os_command

# In case cli is launched as main, relative import will failed
try:
    from . import plfun
    from . import ramification
    from . import reps
    from . import enumeration
except ImportError:
    print("Relative import from . fails, use absolute import instead")
    import plfun
    import ramification
    import reps
    import enumeration

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

THREADS_ENV = 'HERBRAND_LAB_THREADS'
DECIMAL_DIGITS = 20

INPUT_ERRORS = (ValueError, KeyError, TypeError, OSError,
                reps.IndeterminateTwist)


class _Parser(argparse.ArgumentParser):
    """ Usage errors are invalid input, exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, '{}: error: {}\n'.format(self.prog, message))


def decimal_str(value):
    """ Display only rendering with 20 significant digits.

    :Example:

    >>> from fractions import Fraction
    >>> decimal_str(Fraction(1, 3))
    '0.33333333333333333333'
    >>> decimal_str(Fraction(5))
    '5'
    """
    with localcontext() as ctx:
        ctx.prec = DECIMAL_DIGITS
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _read_json(path):
    with open(path) as filin:
        return json.load(filin)


def _wild_from_args(args):
    if args.increments:
        if args.p is None or args.e_f is None:
            raise ramification.InvalidSpec(
                '--increments needs --p and --e-f')
        return ramification.CyclicWildSpec(args.p, len(args.increments),
                                           args.e_f, args.increments)
    if args.breaks is not None or args.orders is not None:
        if args.p is None:
            raise ramification.InvalidSpec('--breaks/--orders need --p')
        return ramification.Filtration(args.p, args.breaks or (),
                                       args.orders or (1,))
    return None


def _extension_from_args(args):
    if args.input:
        return ramification.extension_from_dict(_read_json(args.input))
    wild = _wild_from_args(args)
    layers = []
    if args.tame:
        layers.append(ramification.TameLayer(args.tame))
    if wild is not None:
        if not layers:
            return wild
        layers.append(ramification.WildLayer(wild))
    if not layers:
        raise ramification.InvalidSpec(
            'no extension given, use a JSON file, --tame, --breaks or '
            '--increments')
    return ramification.TowerSpec(layers)


def _carayol_from_args(args):
    if args.input:
        return reps.CarayolSpec.from_dict(_read_json(args.input))
    core = _wild_from_args(args)
    if core is None or args.sigma is None:
        raise ramification.InvalidSpec(
            'a Carayol spec needs a wild core (--breaks or --increments) '
            'and --sigma')
    return reps.CarayolSpec(core, args.sigma, tame_top=args.m,
                            core_tame=args.t)


def _induced_from_args(args):
    if args.input:
        return reps.InducedSpec.from_dict(_read_json(args.input))
    if args.sigma is None:
        raise ramification.InvalidSpec('--sigma is required')
    return reps.InducedSpec(_extension_from_args(args), args.sigma)


def _function_output(function, args):
    payload = {'function': function.to_dict()}
    rows = [{'x': plfun.rational_to_str(x), 'y': plfun.rational_to_str(y),
             'slope_after': plfun.rational_to_str(slope)}
            for (x, y), slope in zip(function.breakpoints, function.slopes)]
    if args.sample:
        start, stop = (plfun.to_rational(v) for v in args.sample[:2])
        samples = function.sample(start, stop, int(args.sample[2]))
        payload['samples'] = [
            {'x': plfun.rational_to_pair(x), 'y': plfun.rational_to_pair(y),
             'y_decimal': decimal_str(y)} for x, y in samples]
        rows = [{'x': plfun.rational_to_str(x),
                 'y': plfun.rational_to_str(y),
                 'y_decimal': decimal_str(y)} for x, y in samples]
    return payload, rows


def run_phi(args):
    tower = ramification.as_tower(_extension_from_args(args))
    return _function_output(ramification.compose_tower_phi(tower), args)


def run_psi(args):
    tower = ramification.as_tower(_extension_from_args(args))
    return _function_output(ramification.compose_tower_psi(tower), args)


def run_jumps(args):
    tower = ramification.as_tower(_extension_from_args(args))
    phi = ramification.compose_tower_phi(tower)
    psi = phi.invert()
    uppers = psi.jumps()
    payload = {'lower_jumps': [plfun.rational_to_pair(l)
                               for l in phi.jumps()],
               'upper_jumps': [plfun.rational_to_pair(j) for j in uppers],
               'jump_ratios': [plfun.rational_to_pair(psi.jump_ratio(j))
                               for j in uppers]}
    rows = [{'lower_jump': plfun.rational_to_str(l),
             'upper_jump': plfun.rational_to_str(j),
             'jump_ratio': plfun.rational_to_str(psi.jump_ratio(j))}
            for l, j in zip(phi.jumps(), uppers)]
    if tower.p is not None and tower.tame_degree == 1:
        steps = ramification.decompose_psi(ramification.wild_part(tower))
        payload['psi_steps'] = [
            {'jump': plfun.rational_to_pair(s.jump), 'degree': s.degree,
             'wild_exp': s.wild_exp} for s in steps]
    return payload, rows


def run_slope(args):
    report = reps.slope_report(_induced_from_args(args))
    payload = report.to_dict()
    return payload, [{'dim': report.dim, 'swan': report.swan,
                      'slope': plfun.rational_to_str(report.slope),
                      'carayol': report.carayol}]


def run_swan(args):
    spec = _induced_from_args(args)
    swan = reps.swan_of_induced(spec)
    payload = {'swan': swan, 'dim': spec.dim,
               'sigma': spec.character.slope}
    return payload, [payload]


def run_adjoint(args):
    spec = _carayol_from_args(args)
    closed, domain = reps.adjoint_slope_closed(spec)
    mackey = reps.adjoint_slope_mackey(spec)
    if closed != mackey:
        logger.info('Closed form {} and Mackey value {} differ '
                    '({})'.format(closed, mackey, domain.value))
    payload = {'closed': plfun.rational_to_pair(closed),
               'mackey': plfun.rational_to_pair(mackey),
               'domain': domain.value}
    return payload, [{'closed': plfun.rational_to_str(closed),
                      'mackey': plfun.rational_to_str(mackey),
                      'domain': domain.value}]


def run_epipelagic(args):
    spec = _carayol_from_args(args)
    value = reps.epipelagic_adjoint(spec)
    payload = {'adjoint': plfun.rational_to_pair(value), 'dim': spec.dim}
    return payload, [{'adjoint': plfun.rational_to_str(value),
                      'dim': spec.dim}]


def run_validate(args):
    if args.input:
        spec = ramification.CyclicWildSpec.from_dict(_read_json(args.input))
    else:
        if args.p is None or args.e_f is None or not args.increments:
            raise ramification.InvalidSpec(
                'validate needs a JSON file or --p, --e-f and --increments')
        r = args.r if args.r is not None else len(args.increments)
        spec = ramification.CyclicWildSpec(args.p, r, args.e_f,
                                           args.increments)
    violations = ramification.validate_cyclic(spec)
    payload = {'spec': spec.to_dict(), 'admissible': not violations,
               'violations': [v._asdict() for v in violations]}
    rows = [v._asdict() for v in violations]
    return payload, rows, (1 if violations else 0)


def run_enum(args):
    rows, payload = [], []
    for spec in enumeration.enum_cyclic(args.p, args.r, args.e_f,
                                        args.l_max):
        item = dict(spec.to_dict(), lower_jumps=list(spec.lower_jumps),
                    upper_jumps=list(spec.upper_jumps),
                    wild_exponent=spec.wild_exponent)
        if args.sigma_max is not None:
            item['slopes'] = list(enumeration.enum_carayol_slopes(
                spec, args.sigma_max))
        payload.append(item)
        rows.append({key: ' '.join(str(v) for v in value)
                     if isinstance(value, list) else value
                     for key, value in item.items()})
    logger.info('Succeed to enumerate {} cyclic specs'.format(len(payload)))
    return payload, rows


def _workers():
    value = os.environ.get(THREADS_ENV, '1')
    try:
        return max(1, int(value))
    except ValueError:
        raise ramification.InvalidSpec(
            '{}={!r} is not an integer'.format(THREADS_ENV, value))


def run_verify(args):
    if args.input:
        config = enumeration.SweepConfig.from_json(args.input)
    else:
        config = enumeration.SweepConfig()
    report = enumeration.sweep_verify(config, workers=_workers())
    rows = [dict(check=check, **counts)
            for check, counts in sorted(report.counts.items())]
    return report.to_dict(), rows, (0 if report.ok else 2)


def _csv_header(args):
    """ CSV columns of a subcommand, written even when there is no row."""
    header = list(CSV_HEADERS[args.command])
    if args.command in ('phi', 'psi') and args.sample:
        header[-1] = 'y_decimal'
    if args.command == 'enum' and args.sigma_max is not None:
        header.append('slopes')
    return header


def _render(payload, rows, out_format, header=()):
    if out_format == 'json':
        return json.dumps(payload, indent=2, sort_keys=True) + '\n'
    buffer = io.StringIO()
    fieldnames = list(header)
    for row in rows:
        fieldnames += [key for key in row if key not in fieldnames]
    writer = csv.DictWriter(buffer, fieldnames=fieldnames,
                            lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _emit(text, args):
    if not args.output:
        sys.stdout.write(text)
        return
    if os_command.check_file_and_create_path(args.output) and \
            not args.force:
        logger.warning("File {} already exist, file not saved".format(
            args.output))
        return
    with open(args.output, 'w') as filout:
        filout.write(text)
    logger.info("Succeed to write {}".format(args.output))


COMMANDS = {'phi': run_phi, 'psi': run_psi, 'jumps': run_jumps,
            'slope': run_slope, 'swan': run_swan, 'adjoint': run_adjoint,
            'epipelagic': run_epipelagic, 'validate': run_validate,
            'enum': run_enum, 'verify': run_verify}

CSV_HEADERS = {'phi': ('x', 'y', 'slope_after'),
               'psi': ('x', 'y', 'slope_after'),
               'jumps': ('lower_jump', 'upper_jump', 'jump_ratio'),
               'slope': ('dim', 'swan', 'slope', 'carayol'),
               'swan': ('swan', 'dim', 'sigma'),
               'adjoint': ('closed', 'mackey', 'domain'),
               'epipelagic': ('adjoint', 'dim'),
               'validate': ('constraint', 'detail'),
               'enum': ('p', 'r', 'e_F', 'increments', 'lower_jumps',
                        'upper_jumps', 'wild_exponent'),
               'verify': ('check',) + enumeration.COUNT_KEYS}


def build_parser():
    """ Parser of the ``herbrand_lab`` command."""
    common = _Parser(add_help=False)
    common.add_argument('input', nargs='?', default=None,
                        help='JSON spec file')
    common.add_argument('--format', choices=('json', 'csv'), default='json',
                        help='output format (default: json)')
    common.add_argument('-o', '--output', default=None,
                        help='write to this file instead of stdout')
    common.add_argument('--force', action='store_true',
                        help='overwrite an existing output file')

    wild = _Parser(add_help=False)
    wild.add_argument('--p', type=int, help='residue characteristic')
    wild.add_argument('--breaks', type=int, nargs='*',
                      help='lower jumps of a wild filtration')
    wild.add_argument('--orders', type=int, nargs='+',
                      help='orders g_0 > ... > g_n = 1')
    wild.add_argument('--increments', type=int, nargs='+',
                      help='increments i_0 ... i_{r-1} of a cyclic spec')
    wild.add_argument('--e-f', dest='e_f', type=int,
                      help='absolute ramification index of the base')

    tame = _Parser(add_help=False)
    tame.add_argument('--tame', type=int, default=None,
                      help='tame layer of degree e under the wild layer')

    parser = _Parser(
        prog='herbrand_lab',
        description='Herbrand functions, Swan conductors and adjoint '
                    'slopes from abstract ramification data.')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='log progress on stderr')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    for name, help_text in (('phi', 'Herbrand function phi'),
                            ('psi', 'Herbrand function psi')):
        sub = subparsers.add_parser(name, parents=[common, wild, tame],
                                    help=help_text)
        sub.add_argument('--sample', nargs=3, metavar=('A', 'B', 'N'),
                         help='emit N+1 exact points on [A, B]')

    subparsers.add_parser('jumps', parents=[common, wild, tame],
                          help='lower and upper jumps, psi decomposition')

    for name, help_text in (('slope', 'slope report of Ind chi'),
                            ('swan', 'Swan conductor of Ind chi')):
        sub = subparsers.add_parser(name, parents=[common, wild, tame],
                                    help=help_text)
        sub.add_argument('--sigma', type=int, help='slope of chi')

    for name, help_text in (
            ('adjoint', 'closed form and Mackey adjoint slopes'),
            ('epipelagic', 'adjoint slope of an epipelagic rho')):
        sub = subparsers.add_parser(name, parents=[common, wild],
                                    help=help_text)
        sub.add_argument('--sigma', type=int, help='slope of chi')
        sub.add_argument('--m', type=int, default=1,
                         help='tame top degree (default: 1)')
        sub.add_argument('--t', type=int, default=1,
                         help='core tame degree (default: 1)')

    sub = subparsers.add_parser('validate', parents=[common, wild],
                                help='admissibility of a cyclic spec')
    sub.add_argument('--r', type=int, default=None)

    sub = subparsers.add_parser('enum', parents=[common],
                                help='enumerate admissible cyclic specs')
    sub.add_argument('--p', type=int, required=True)
    sub.add_argument('--r', type=int, required=True)
    sub.add_argument('--e-f', dest='e_f', type=int, required=True)
    sub.add_argument('--l-max', dest='l_max', type=int, required=True)
    sub.add_argument('--sigma-max', dest='sigma_max', type=int,
                     default=None, help='also list the Carayol slopes')

    subparsers.add_parser(
        'verify', parents=[common],
        help='sweep every check, the worker count is read from '
             '{}'.format(THREADS_ENV))
    return parser


def main(argv=None):
    """Run one subcommand and return the exit status."""
    args = build_parser().parse_args(argv)
    if args.verbose:
        plfun.show_log(stream=sys.stderr)

    try:
        result = COMMANDS[args.command](args)
    except INPUT_ERRORS as error:
        if isinstance(error, KeyError):
            error = 'missing key {}'.format(error)
        sys.stderr.write('herbrand_lab {}: error: {}\n'.format(
            args.command, error))
        return 1

    payload, rows = result[:2]
    status = result[2] if len(result) > 2 else 0
    if status == 1:
        for row in rows:
            sys.stderr.write('herbrand_lab {}: {}: {}\n'.format(
                args.command, row['constraint'], row['detail']))
    _emit(_render(payload, rows, args.format, _csv_header(args)), args)
    return status


if __name__ == "__main__":
    sys.exit(main())
