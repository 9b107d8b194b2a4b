"""
The ``cmkit`` command line.

    cmkit analyze gm:8
    cmkit verify group.json --vector "g0,g1,g1^-1*g0^-1" --relation relation.json
    cmkit batch analyze gm:6 gm:8 gm:10 --format table

Exit codes: 0 when the computation completed (whatever the verdict), 1 for input errors and 2 when
a configured bound was exceeded. Failures print one JSON line ``{"error": code, "message": text}``
on stderr.
"""

import argparse
import json
import logging
import sys
from contextlib import contextmanager
from typing import Dict, List, Optional, Sequence, Tuple

import cmkit.core.primitives as primitives
from cmkit.cli.command import AnalysisRequest, Commands, Context
from cmkit.cli.reports import render
from cmkit.core.errors import CMKitError, MalformedRequest, UnknownCommand
from cmkit.core.threading import parallel_map

logger = logging.getLogger(__name__)


@contextmanager
def overrides(max_order: Optional[int] = None, search_limit: Optional[int] = None, threads: Optional[int] = None):
    """
    Change control variables for the duration of a run.
    """
    saved = primitives.get_max_order(), primitives.get_search_limit(), primitives.get_max_threads()
    try:
        if max_order is not None:
            primitives.set_max_order(max_order)
        if search_limit is not None:
            primitives.set_search_limit(search_limit)
        if threads is not None:
            primitives.set_num_threads(threads)
        yield
    finally:
        primitives.set_max_order(saved[0])
        primitives.set_search_limit(saved[1])
        primitives.set_num_threads(saved[2])


def error_line(exc: CMKitError) -> str:
    return json.dumps({'error': exc.code, 'message': str(exc)}, sort_keys=True)


def run(request: AnalysisRequest) -> Tuple[Dict, int]:
    """
    Execute one request. Errors from the library propagate to the caller.
    """
    if request.command not in Commands.commands:
        raise UnknownCommand(f'unknown command {request.command!r}; expected one of {", ".join(sorted(Commands.commands))}')
    payload = Commands.commands[request.command].run(Context(request))
    return payload, 0


def run_isolated(request: AnalysisRequest) -> Dict:
    """
    Execute one request of a batch, turning its failure into a row instead of an exception.
    """
    try:
        payload, code = run(request)
    except CMKitError as exc:
        logger.debug('batch item %s failed: %s', request.source, exc)
        return {'source': request.source, 'exit_code': exc.exit_code, 'error': exc.code, 'message': str(exc),
                'summary': exc.code}
    summary = Commands.commands[request.command].summary(payload)
    return {'source': request.source, 'exit_code': code, 'report': payload, 'summary': summary}


def batch(requests: Sequence[AnalysisRequest]) -> Tuple[List[Dict], int]:
    """
    Run independent requests concurrently; rows come back in request order.
    """
    if not requests:
        raise MalformedRequest('batch needs at least one group source')
    rows = parallel_map(run_isolated, list(requests))
    return rows, max(row['exit_code'] for row in rows)


class ArgumentParser(argparse.ArgumentParser):

    """
    Report usage errors as cmkit errors so that they reach stderr as one JSON line.
    """

    def error(self, message: str):
        if message.startswith('argument command: invalid choice'):
            raise UnknownCommand(f'{self.prog}: {message}')
        raise MalformedRequest(f'{self.prog}: {message}')


def _common(parser: argparse.ArgumentParser):
    parser.add_argument('--format', choices=('json', 'table'), default='json', help='output format')
    parser.add_argument('--search-limit', type=int, default=None, help='candidate relations tried by the search')
    parser.add_argument('--max-order', type=int, default=None, help='largest group order accepted')
    parser.add_argument('--threads', type=int, default=None, help='worker threads')
    parser.add_argument('--vector', default=None, help='generating vector: comma-separated words or a JSON list')
    parser.add_argument('--verbose', action='store_true', help='debug logging on stderr')


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='cmkit', description='complex multiplication certificates for quasiplatonic surfaces')
    subparsers = parser.add_subparsers(dest='command', required=True)

    for name, command in sorted(Commands.commands.items()):
        sub = subparsers.add_parser(name, help=command.help)
        sub.add_argument('source', help='gm:<m> or a JSON group file')
        _common(sub)
        command.add_arguments(sub)

    sub = subparsers.add_parser('batch', help='run one command over several group sources')
    sub.add_argument('batch_command', help='the command to run')
    sub.add_argument('sources', nargs='*', help='gm:<m> or JSON group files')
    _common(sub)
    sub.add_argument('--no-streit', action='store_true', help='analyze: search for a relation instead of Streit\'s test')
    sub.add_argument('--relation', default=None, help='verify: relation as JSON text or file')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except CMKitError as exc:
        print(error_line(exc), file=sys.stderr)
        return exc.exit_code
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')

    try:
        with overrides(args.max_order, args.search_limit, args.threads):
            if args.command == 'batch':
                requests = [AnalysisRequest.from_args(args, source) for source in args.sources]
                if args.batch_command not in Commands.commands:
                    raise UnknownCommand(f'unknown command {args.batch_command!r}')
                rows, code = batch(requests)
                print(render(rows, args.format))
                for row in rows:
                    if 'error' in row:
                        print(json.dumps({'error': row['error'], 'message': row['message'], 'source': row['source']},
                                         sort_keys=True), file=sys.stderr)
                return code

            payload, code = run(AnalysisRequest.from_args(args))
            print(render(payload, args.format))
            return code
    except CMKitError as exc:
        print(error_line(exc), file=sys.stderr)
        return exc.exit_code


if __name__ == '__main__':
    raise SystemExit(main())
