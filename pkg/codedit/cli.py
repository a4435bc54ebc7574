"""Command-line front end.

Every command prints a report, as ``key: value`` lines or as a JSON
document with ``--json``. The exit status is 0 when the property holds
or the operation succeeded, 1 when the property fails, 2 on bad input
and 3 when a search limit is hit.
"""
import argparse
import hashlib
import json
import logging
import sys
import time
from logging import getLogger
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import pandas as pd

from codedit import stat_compilers as sc
from codedit.closure import enumerate_delta_closed_codes
from codedit.config import (
    MAX_ADMISSIBLE_WORDS, MAX_SEARCH_NODES, ORBIT_EXPAND_LIMIT, REPORT_SCHEMA,
)
from codedit.edit import EditRelation
from codedit.enums import EditKind
from codedit.errors import LanguageFileError, SearchGuardError
from codedit.langfile import read_language
from codedit.words import Alphabet

log = getLogger(__name__)

EXIT_OK, EXIT_FAILS, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _alphabet(text: str) -> Alphabet:
    """Reads ``ab``, ``a b`` or ``a,b`` as an alphabet."""
    return Alphabet([c for c in text if not c.isspace() and c != ','])


def _relation(text: str) -> EditRelation:
    try:
        return EditRelation.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(
            f"expected a positive integer, got {text!r}")
    return value


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


# Commands. Each returns (stats, holds), holds being None when the
# command has no verdict.

def cmd_check(args):
    X = read_language(args.file)
    prop = 'closed' if args.closed else 'independent'
    stats = sc.get_check_stats(X, args.relation, prop)
    return stats, stats['holds']


def cmd_code(args):
    stats = sc.get_code_stats(read_language(args.file))
    return stats, stats['holds']


def cmd_complete(args):
    stats = sc.get_completeness_stats(read_language(args.file))
    return stats, stats['holds']


def cmd_measure(args):
    X = read_language(args.file)
    dist = sc.parse_distribution(args.dist, X.alphabet)
    return sc.get_measure_stats(X, dist), None


def cmd_orbit(args):
    stats = sc.get_orbit_stats(
        args.word, args.k, args.alphabet, args.expand, ORBIT_EXPAND_LIMIT)
    return stats, None


def cmd_complete_closed(args):
    X = read_language(args.file)
    stats = sc.get_closed_completion_stats(
        X, args.relation, args.max_words, args.max_nodes)
    return stats, None


def cmd_er_complete(args):
    return sc.get_er_completion_stats(read_language(args.file)), None


def cmd_enumerate_closed(args):
    codes = enumerate_delta_closed_codes(
        args.alphabet, args.k, args.max_words, args.max_nodes)
    table = sc.get_enumeration_table(codes)
    return {'k': args.k, 'count': len(table), 'codes': table}, None


def cmd_embed_closed(args):
    X = read_language(args.file)
    relation = EditRelation(EditKind.delete, args.k)
    stats = sc.get_closed_completion_stats(
        X, relation, args.max_words, args.max_nodes)
    return stats, None


def cmd_margin(args):
    return sc.get_margin_stats(read_language(args.file)), None


def cmd_extend(args):
    X = read_language(args.file)
    return sc.get_extension_stats(X, args.relation, args.rounds), None


def cmd_no_closed(args):
    X = read_language(args.file)
    return sc.get_no_closed_stats(X, args.relation), None


def cmd_classify(args):
    X = read_language(args.file)
    stats = sc.get_classification_stats(X, args.relation)
    return stats, stats['shape'] != 'not_closed_code'


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--json', action='store_true', help='print the report as JSON')
    common.add_argument(
        '-d', '--debug', action='store_true', help='debug log level')
    common.add_argument(
        '--max-nodes', type=_positive, default=MAX_SEARCH_NODES,
        help='node limit for closed-code searches')
    common.add_argument(
        '--max-words', type=_positive, default=MAX_ADMISSIBLE_WORDS,
        help='candidate word limit for closed-code searches')

    parser = argparse.ArgumentParser(
        prog='codedit',
        description='Codes, completeness and edit relations on words.',
    )
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    def command(name, func, help_text, with_file=True):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        if with_file:
            sub.add_argument('file', type=Path, metavar='FILE',
                             help='language file')
        sub.set_defaults(func=func)
        return sub

    sub = command('check', cmd_check, 'independence or closedness')
    sub.add_argument('--relation', type=_relation, required=True,
                     metavar='KIND:K')
    group = sub.add_mutually_exclusive_group()
    group.add_argument('--independent', action='store_true', default=True)
    group.add_argument('--closed', action='store_true')

    command('code', cmd_code, 'unique decipherability')
    command('complete', cmd_complete, 'completeness')

    sub = command('measure', cmd_measure, 'Bernoulli measure')
    sub.add_argument('--dist', default='uniform',
                     help="'uniform' or weights such as 1/3,2/3")

    sub = command('orbit', cmd_orbit, 'σ_k orbit of a word', with_file=False)
    sub.add_argument('word')
    sub.add_argument('--alphabet', type=_alphabet, required=True)
    sub.add_argument('--k', type=_positive, required=True)
    sub.add_argument('--expand', action='store_true',
                     help='list the orbit members')

    sub = command('complete-closed', cmd_complete_closed,
                  'complete δ_k- or σ_k-closed codes containing FILE')
    sub.add_argument('--relation', type=_relation, required=True,
                     metavar='KIND:K')

    command('er-complete', cmd_er_complete, 'complete a regular code')

    sub = command('enumerate-closed', cmd_enumerate_closed,
                  'all δ_k-closed codes', with_file=False)
    sub.add_argument('--alphabet', type=_alphabet, required=True)
    sub.add_argument('--k', type=_positive, required=True)

    sub = command('embed-closed', cmd_embed_closed,
                  'complete δ_k-closed codes containing FILE')
    sub.add_argument('--k', type=_positive, required=True)

    command('margin', cmd_margin, 'error detection margin')

    sub = command('extend', cmd_extend, 'extend an independent code')
    sub.add_argument('--relation', type=_relation, required=True,
                     metavar='KIND:K')
    sub.add_argument('--rounds', type=_positive, default=1)

    sub = command('no-closed', cmd_no_closed,
                  'why no code is closed under ι_k, I_k or Δ_k')
    sub.add_argument('--relation', type=_relation, required=True,
                     metavar='KIND:K')

    sub = command('classify', cmd_classify,
                  'shape of a σ_k, Σ_k or Λ_k closed code')
    sub.add_argument('--relation', type=_relation, required=True,
                     metavar='KIND:K')

    return parser


def _jsonable(value: Any) -> Any:
    if isinstance(value, pd.DataFrame):
        return value.to_dict(orient='records')
    return value


def _json_default(value: Any) -> Any:
    """Unwraps numpy scalars left in report values."""
    if hasattr(value, 'item'):
        return value.item()
    raise TypeError(f"cannot serialize {type(value)}")


def _print_text(report: Dict[str, Any], out) -> None:
    for key, value in report['result'].items():
        if isinstance(value, pd.DataFrame):
            print(f"{key}:", file=out)
            print(value.to_string(index=False) if len(value) else '  (none)',
                  file=out)
        elif key == 'dot':
            print(value, file=out)
        else:
            print(f"{key}: {value}", file=out)


def main(argv: Optional[List[str]] = None, out=None) -> int:
    """Runs one command and returns the exit status."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )

    func: Callable = args.func
    log.debug("running %s", args.command)
    started = time.perf_counter()
    try:
        stats, holds = func(args)
    except LanguageFileError as e:
        print(f"codedit: {args.file}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SearchGuardError as e:
        print(f"codedit: search limit {e.bound}={e.limit} exceeded: {e}",
              file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError) as e:
        print(f"codedit: {e}", file=sys.stderr)
        return EXIT_USAGE

    report = {
        'schema': REPORT_SCHEMA,
        'command': args.command,
        'argv': list(argv) if argv is not None else sys.argv[1:],
        'input': None,
        'result': stats,
        'elapsed': round(time.perf_counter() - started, 6),
    }
    path = getattr(args, 'file', None)
    if path is not None:
        report['input'] = {'file': str(path), 'sha256': _digest(path)}

    if args.json:
        report['result'] = {k: _jsonable(v) for k, v in stats.items()}
        json.dump(
            report, out, ensure_ascii=False, indent=2, default=_json_default)
        out.write('\n')
    else:
        _print_text(report, out)

    return EXIT_FAILS if holds is False else EXIT_OK
