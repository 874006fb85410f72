#-------------------------------------------------------------------------
# The Character Code Convolutional Toolkit
#
# Copyright (c) The charconv authors. All rights reserved.
#
# The MIT License (MIT)
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the ""Software""), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED *AS IS*, WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
#
#--------------------------------------------------------------------------
"""
Command line interface: ``charconv <command> [options]``.

Exit codes: 0 every executed check passed, 1 a check failed, 2 usage or
precondition error, 3 malformed input file, 4 budget exhausted.
"""

import argparse
import collections
import csv
import io
import logging
import sys

from . import charcode
from . import convo
from . import distance
from . import gf
from . import polymat
from . import report
from . import table1
from . import utils
from .config import Configuration
from .exceptions import (
    BudgetExceededException,
    DimensionException,
    InvalidConfigException,
    MalformedFileException,
    ParameterException,
    PreconditionException,
    ProvenanceException)

LOG = logging.getLogger('charconv')

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3
EXIT_BUDGET = 4

PARAMS_COLUMNS = ['theorem', 'q', 'l', 'm', 'r', 'v', 'u', 'n', 'k',
                  'degree', 'memory', 'df_lower']


def _code_options(parser, theorem=True):
    parser.add_argument("--q", type=int, required=True,
                        help="Field size, an odd prime power")
    parser.add_argument("--l", type=int, default=2,
                        help="Group exponent (default 2)")
    parser.add_argument("--m", type=int, required=True, help="Group rank")
    parser.add_argument("--r", type=int, help="Code parameter r")
    if theorem:
        parser.add_argument("--u", type=int, help="Upper split weight u")
        parser.add_argument("--v", type=int, help="Middle split weight v")
        parser.add_argument("--cuts", type=utils.parse_cuts,
                            help="Descending split weights, e.g. 3,2,1")


def build_parser():
    """The argument parser with one sub-command per operation."""
    parser = argparse.ArgumentParser(
        prog="charconv",
        description="Convolutional codes from group character codes")
    parser.add_argument("--format", choices=report.FORMATS,
                        default=report.TEXT, help="Report format")
    parser.add_argument("--log-level", default=None,
                        help="debug, info, warning, error or critical")
    parser.add_argument("--data-path", default=None,
                        help="Directory holding CharConvData (config, log)")
    parser.add_argument("--strict-conditions", "--strict-paper-conditions",
                        dest="strict_conditions", action="store_true",
                        help="Also require the literal printed conditions")
    parser.add_argument("--workers", type=int, default=None,
                        help="Sweep worker processes (0 runs in-process)")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    construct = sub.add_parser("construct", help="Build and verify a code")
    construct.add_argument("theorem", choices=convo.THEOREMS)
    _code_options(construct)
    construct.add_argument("--save", help="Write the record document here")
    construct.add_argument("--no-certify", action="store_true",
                           help="Skip the distance certificate")

    table = sub.add_parser("table1", help="Reproduce the reference table")
    table.add_argument("--block", type=int, action="append",
                       help="Only this q block (repeatable)")
    table.add_argument("--verify", action="store_true",
                       help="Construct and check every resolved row")

    examples = sub.add_parser("examples",
                              help="Reproduce the printed example codes")
    examples.add_argument("--verify", action="store_true",
                          help="Construct and check every resolved example")

    verify = sub.add_parser("verify", help="Verify a saved record")
    verify.add_argument("path")
    verify.add_argument("--no-certify", action="store_true")

    encode = sub.add_parser("encode", help="Encode u(D) with a saved record")
    encode.add_argument("path")
    encode.add_argument("message",
                        help="k polynomials separated by ';', coefficients "
                             "lowest degree first separated by ','")

    mindist = sub.add_parser("mindist", help="Distance oracles")
    mindist.add_argument("--code", choices=("char", "dual", "record"),
                         default="char")
    mindist.add_argument("--q", type=int)
    mindist.add_argument("--l", type=int, default=2)
    mindist.add_argument("--m", type=int)
    mindist.add_argument("--r", type=int)
    mindist.add_argument("--record", help="Record document for --code record")
    mindist.add_argument("--method", default="all",
                         choices=("enum", "columns", "all", "free"))
    mindist.add_argument("--weight-cap", type=int, default=None)
    mindist.add_argument("--degree-cap", type=int, default=None)

    params = sub.add_parser("params",
                            help="CSV of valid parameters for a theorem")
    params.add_argument("theorem", choices=("t2", "cor1", "t3", "t4"))
    params.add_argument("--q", type=int, action="append",
                        help="Field size (repeatable, default 3)")
    params.add_argument("--l", type=int, default=2)
    params.add_argument("--m-min", type=int, default=3)
    params.add_argument("--m-max", type=int, default=8)
    params.add_argument("--verify", action="store_true",
                        help="Construct every tuple and run the checks")
    return parser


def _record_result(record, verification):
    result = collections.OrderedDict([
        ('label', record.label()),
        ('theorem', record.provenance['theorem']),
        ('bound_kind', record.bound_kind),
        ('df_lower', record.df_lower),
        ('df_upper', record.df_upper),
        ('designed', record.designed),
        ('slices', [collections.OrderedDict([
            ('index', s['index']), ('weights', s['weights']),
            ('rows', s['rows'])]) for s in record.slices]),
    ])
    if verification is not None:
        result['checks'] = [collections.OrderedDict(c._asdict())
                            for c in verification.checks]
        if verification.certificate is not None:
            cert = verification.certificate
            result['certificate'] = collections.OrderedDict([
                ('status', cert.status), ('designed', cert.designed),
                ('value', cert.value), ('detail', cert.detail)])
            if cert.chain:
                result['chain'] = cert.chain
            if cert.downscale:
                result['downscale'] = cert.downscale
    return result


def cmd_construct(args, cfg, run):
    budgets = cfg.budgets()
    record = convo.construct(args.theorem, args.q, args.l, args.m, args.r,
                             args.u, args.v, args.cuts,
                             strict=args.strict_conditions,
                             budgets=budgets)
    verification = convo.verify_record(record, budgets,
                                       certify=not args.no_certify)
    run.add_result(_record_result(record, verification),
                   passed=verification.passed)
    run.extend_annotations(record.annotations)
    if args.save:
        report.save_record(record, args.save, verification)
    return run


def _table_results(run, rows):
    for entry in rows:
        run.add_result(entry, passed=entry.get('verified', True))
        if entry['status'] == table1.MISMATCH:
            run.annotate("table block q={0}".format(entry['block']),
                         entry['printed'], entry['computed'],
                         "; ".join(entry['notes']))
    return run


def cmd_table1(args, cfg, run):
    rows = table1.reproduce(blocks=args.block, verify=args.verify,
                            budgets=cfg.budgets())
    run.parameters['prior_work'] = table1.PRIOR_WORK_SOURCE
    return _table_results(run, rows)


def cmd_examples(args, cfg, run):
    rows = table1.reproduce(rows=table1.REFERENCE_EXAMPLES,
                            verify=args.verify, budgets=cfg.budgets())
    for entry in rows:
        entry.pop('prior_work', None)
    return _table_results(run, rows)


def cmd_verify(args, cfg, run):
    record = report.load_record(args.path)
    verification = convo.verify_record(record, cfg.budgets(),
                                       certify=not args.no_certify)
    run.add_result(_record_result(record, verification),
                   passed=verification.passed)
    run.extend_annotations(record.annotations)
    return run


def parse_message(text):
    """``"1,2;0;1"`` into a list of coefficient tuples."""
    return [utils.parse_int_list(part) for part in text.split(";")]


def cmd_encode(args, cfg, run):
    record = report.load_record(args.path)
    if record.G is None:
        raise ProvenanceException("Record {0} has no generator "
                                  "matrix".format(record.label()))
    codeword = polymat.encode(parse_message(args.message), record.G)
    run.add_result(collections.OrderedDict([
        ('label', record.label()),
        ('message', args.message),
        ('codeword', [polymat.format_poly(p) for p in codeword]),
        ('weight', polymat.weight(codeword)),
    ]))
    return run


def _block_distance(args, budgets):
    spec = gf.field_of_order(args.q, max_size=budgets.field_size)
    code = charcode.build_char_code(spec, args.l, args.m, args.r,
                                    max_size=budgets.group_size)
    dual = args.code == "dual"
    designed = (code.designed_dual_distance if dual else code.designed[2])
    if args.method == "enum":
        if dual:
            found = [distance.dual_distance_enumeration(code.G,
                                                        budgets.codewords)]
        else:
            found = [distance.min_distance_enumeration(code.G,
                                                       budgets.codewords)]
    elif args.method == "columns":
        cap = args.weight_cap if args.weight_cap is not None else designed
        matrix = code.G if dual else code.H
        found = [distance.min_dependent_columns(matrix, cap,
                                                budgets.subsets)]
    elif args.method == "all":
        designed, found = distance.block_distance_routes(
            spec, args.l, args.m, args.r, dual, budgets)
    else:
        raise ParameterException("Method 'free' needs --code record")
    return code.label() + ("^perp" if dual else ""), designed, found


def cmd_mindist(args, cfg, run):
    budgets = cfg.budgets()
    if args.code == "record":
        if not args.record:
            raise ParameterException("--code record needs --record PATH")
        record = report.load_record(args.record)
        if record.G is None:
            raise ProvenanceException("Record {0} has no generator "
                                      "matrix".format(record.label()))
        result = distance.free_distance_search(record.G, args.weight_cap,
                                               args.degree_cap,
                                               budgets.search_nodes)
        passed = result.value is None or result.value >= record.df_lower
        out = collections.OrderedDict([('code', record.label()),
                                       ('designed', record.df_lower)])
        out.update(result.to_dict())
        run.add_result(out, passed=passed)
        return run

    if None in (args.q, args.m, args.r):
        raise ParameterException("--q, --m and --r are required")
    label, designed, found = _block_distance(args, budgets)
    for result in found:
        out = collections.OrderedDict([('code', label),
                                       ('designed', designed)])
        out.update(result.to_dict())
        passed = not result.exact or result.value == designed
        run.add_result(out, passed=passed)
    return run


def cmd_params(args, cfg, run, stream):
    q_values = args.q or [3]
    m_values = list(range(args.m_min, args.m_max + 1))
    l = args.l if args.theorem == "t4" else 2
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    if args.verify:
        workers = args.workers if args.workers is not None else cfg.workers()
        rows = convo.sweep(args.theorem, q_values, m_values, l=l,
                           workers=workers, budgets=cfg.budgets())
        writer.writerow(['theorem', 'q', 'l', 'm', 'r', 'v', 'u', 'label',
                         'passed', 'failed_checks'])
        for row in rows:
            writer.writerow([row['theorem'], row['q'], row['l'], row['m'],
                             row['r'], row['v'] or "", row['u'] or "",
                             row['label'] or "", row['passed'],
                             ";".join(row['checks'])])
            if not row['passed']:
                run.failed = True
    else:
        writer.writerow(PARAMS_COLUMNS)
        for q in q_values:
            if args.theorem == "t4" and (q - 1) % l:
                continue
            for params in convo.valid_parameters(args.theorem, m_values,
                                                 q=q, l=l):
                designed = convo.designed_tuple(
                    args.theorem, q, l, params['m'], params['r'],
                    params['u'], params.get('v'))
                writer.writerow(
                    [args.theorem, q, l, params['m'], params['r'],
                     params.get('v', ""), params['u']] +
                    ["μ" if v is None else v for v in designed])
    stream.write(buffer.getvalue())
    return run


COMMANDS = {
    'construct': cmd_construct,
    'table1': cmd_table1,
    'examples': cmd_examples,
    'verify': cmd_verify,
    'encode': cmd_encode,
    'mindist': cmd_mindist,
}


def run_command(args, cfg, argv, stream=None):
    """Execute a parsed command and write its report.

    :Returns:
        - The exit code (int).
    """
    stream = stream or sys.stdout
    run = report.RunReport(["charconv"] + list(argv), _echo(args))
    try:
        if args.command == "params":
            cmd_params(args, cfg, run, stream)
            return EXIT_CHECK_FAILED if run.failed else EXIT_OK
        COMMANDS[args.command](args, cfg, run)

    except MalformedFileException as exp:
        LOG.error("Malformed input: {0}".format(exp))
        return EXIT_MALFORMED
    except BudgetExceededException as exp:
        LOG.error("Budget exhausted: {0}".format(exp))
        return EXIT_BUDGET
    except (PreconditionException, ParameterException, DimensionException,
            ProvenanceException, InvalidConfigException) as exp:
        LOG.error("{0}".format(exp))
        stream.write("error: {0}\n".format(exp))
        return EXIT_USAGE

    stream.write(run.render(args.format))
    return EXIT_CHECK_FAILED if run.failed else EXIT_OK


def _echo(args):
    keys = ('theorem', 'q', 'l', 'm', 'r', 'v', 'u', 'cuts')
    echo = collections.OrderedDict()
    for key in keys:
        value = getattr(args, key, None)
        if value is not None:
            echo[key] = list(value) if isinstance(value, tuple) else value
    if getattr(args, 'strict_conditions', False):
        echo['strict'] = True
    return echo


def main(argv=None, stream=None):
    """Console entry point.

    :Kwargs:
        - argv (list): Arguments, default ``sys.argv[1:]``.
        - stream: Where the report is written, default stdout.

    :Returns:
        - The exit code (int).
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exp:
        return EXIT_USAGE if exp.code else EXIT_OK

    try:
        cfg = Configuration(data_path=args.data_path,
                            log_level=args.log_level)
    except InvalidConfigException:
        return EXIT_USAGE
    return run_command(args, cfg, argv, stream)


if __name__ == "__main__":
    sys.exit(main())
