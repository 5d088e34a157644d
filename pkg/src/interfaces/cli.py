#!/usr/bin/env python3
"""
cli.py - Command line interface of the tensor Kleene algebra toolkit

Every subcommand maps to one operation. Results go to stdout, diagnostics to
stderr. Exit status is 0 on success, 1 on domain errors (with the error as JSON
on stderr) and 2 on usage errors.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.braket.completeness import relative_completeness_check
from src.braket.omega_model import omega_model_eval, overflow_free_domain
from src.grammar.bridge import cfg_to_expr, expr_to_cfg
from src.grammar.cfg import Grammar, parse_grammar
from src.grammar.cyk import cyk_member
from src.grammar.generation import cfg_enumerate, word_strings
from src.interfaces.validation import command_validator, input_validator
from src.kleene.expressions import TensorExpr
from src.kleene.matrix import SPLIT_STRATEGIES
from src.kleene.parser import regex_parse, regex_print
from src.monitoring.logger import performance_logger
from src.monitoring.metrics import metrics_collector
from src.normal_forms.combinators import COMBINATORS, nf_combine, normal_form_of
from src.normal_forms.normal_form import first_normal_form, reduced_normal_form, project_centralizer
from src.normal_forms.split_automaton import compile_automaton
from src.rewriting.normal_form import nf_reduce
from src.rewriting.tokens import EMPTY_TEXT, parse_word
from src.serialization.json_serializer import JSONSerializer
from src.tensor.centralizer import centralizer_check_bounded
from src.tensor.enumeration import enumerate_nf_image
from src.tensor.equality import equal_bounded, EQUAL_UP_TO_BOUND
from src.tensor.recognizer import stack_recognize
from src.tensor.shape import outer_body
from src.utils.config import ToolkitConfig
from src.utils.errors import ToolkitError
from src.utils.helpers import GRAMMAR_STYLES, UtilityHelper

# Configure logging
logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
VOLATILE_KEYS = ('checked_at', 'timestamp')

Output = Any


def _boolean(value: bool) -> str:
    return "true" if value else "false"


def _stable(result: Dict[str, Any]) -> Dict[str, Any]:
    """Drop wall-clock fields so repeated runs print identical output"""
    return {k: v for k, v in result.items() if k not in VOLATILE_KEYS}


class CommandLineInterface:
    """
    Subcommand handlers; each returns text lines or a JSON document
    """

    def __init__(self, args: argparse.Namespace, config: ToolkitConfig):
        self.args = args
        self.config = config
        self.serializer = JSONSerializer()

    def expression(self, text: str) -> TensorExpr:
        return regex_parse(text, m=self.args.m, aliases=self.args.aliases)

    def grammar(self, path: str) -> Grammar:
        if path == '-':
            text = sys.stdin.read()
        else:
            with open(path, 'r', encoding='utf-8') as f:
                text = f.read()
        report = input_validator.validate_input({'grammar': text})
        if not report['valid']:
            raise UsageError(report['errors'])
        return parse_grammar(text)

    # polycyclic-rewrite and tensor-element

    def nf(self) -> Output:
        text = sys.stdin.read() if self.args.word == '-' else self.args.word
        results = [(line.strip(), str(nf_reduce(parse_word(line, m=self.args.m, aliases=self.args.aliases))))
                   for line in (text.splitlines() or [""])]
        if self.args.json:
            documents = [{'word': w, 'normal_form': n} for w, n in results]
            return documents[0] if len(documents) == 1 else {'results': documents}
        return [n for _, n in results]

    def enum(self) -> Output:
        image = enumerate_nf_image(self.expression(self.args.expr), self.config.bound, self.config.word_cap)
        if self.args.json:
            return {'bound': image.bound, 'count': len(image), 'words': image.lines()}
        return image.lines()

    def eq(self) -> Output:
        result = _stable(equal_bounded(self.expression(self.args.left), self.expression(self.args.right),
                                       self.config.bound, self.config))
        if self.args.json:
            return result
        if result['verdict'] == EQUAL_UP_TO_BOUND:
            return [f"{result['verdict']} {result['bound']}"]
        return [f"{result['verdict']} {result['bound']} {result['witness']} {result['side']}"]

    def member(self) -> Output:
        accepted = stack_recognize(self.expression(self.args.expr), self.args.word, self.config)
        return {'word': self.args.word, 'member': accepted} if self.args.json else [_boolean(accepted)]

    def centralizer(self) -> Output:
        passed = centralizer_check_bounded(self.expression(self.args.expr), self.config.bound,
                                           self.config.word_cap)
        return {'bound': self.config.bound, 'centralizer': passed} if self.args.json else [_boolean(passed)]

    # automaton-nf

    def compile(self) -> Output:
        automaton = compile_automaton(self.expression(self.args.expr), detect_pi=self.args.detect_pi,
                                      trim=self.args.trim)
        return automaton.to_dict()

    def nf1(self) -> Output:
        automaton = compile_automaton(self.expression(self.args.expr), trim=self.args.trim)
        form = first_normal_form(automaton, split=self.args.split, config=self.config)
        return self.serializer.normal_form_document(automaton, form)

    def nf_reduced(self) -> Output:
        automaton = compile_automaton(self.expression(self.args.expr), trim=self.args.trim)
        form = reduced_normal_form(automaton, self.config.bound, split=self.args.split, config=self.config)
        if form is None:
            return {'applicable': False, 'bound': self.config.bound}
        document = self.serializer.normal_form_document(automaton, form)
        document['applicable'] = True
        return document

    def nf2(self) -> Output:
        body = outer_body(self.expression(self.args.expr))
        automaton = compile_automaton(body, detect_pi=True, trim=True)
        form = project_centralizer(automaton, split=self.args.split, config=self.config)
        return self.serializer.normal_form_document(automaton, form)

    def combine(self) -> Output:
        left = normal_form_of(self.expression(self.args.left), self.config.m, config=self.config)
        right = None
        if self.args.right is not None:
            right = normal_form_of(self.expression(self.args.right), left.m, config=self.config)
        form = nf_combine(self.args.op, left, right, style=self.config.grammar_style)
        document = self.serializer.normal_form_document(normal_form=form, with_expressions=False)
        if self.args.image:
            document['image'] = enumerate_nf_image(form.to_expression(self.args.split), self.config.bound,
                                                   self.config.word_cap).lines()
        return document

    # braket-model

    def braket(self) -> Output:
        relation = omega_model_eval(self.expression(self.args.expr), self.config.m, self.config.trunc)
        if self.args.json:
            return {'m': self.config.m, 'trunc': self.config.trunc,
                    'pairs': [list(p) for p in relation.sorted_pairs()],
                    'overflow_free_domain': sorted(overflow_free_domain(self.config.m, self.config.trunc))}
        return [str(relation)]

    def relcomp(self) -> Output:
        result = _stable(relative_completeness_check(self.expression(self.args.phi), self.config.bound,
                                                     self.args.slot, self.args.m, self.config))
        if self.args.json:
            return result
        return [f"{result['verdict']} {result['bound']} centralizer={_boolean(result['centralizer'])}"]

    # cs-bridge

    def cfg2expr(self) -> Output:
        expr = cfg_to_expr(self.grammar(self.args.grammar), recode=not self.args.no_recode)
        return {'expression': regex_print(expr)} if self.args.json else [regex_print(expr)]

    def expr2cfg(self) -> Output:
        grammar = expr_to_cfg(self.expression(self.args.expr), self.config.grammar_style, self.config)
        if self.args.json:
            return {'start': grammar.start, 'productions': [str(p) for p in grammar.productions]}
        return grammar.to_text().splitlines()

    def cyk(self) -> Output:
        accepted = cyk_member(self.grammar(self.args.grammar), self.args.word)
        return {'word': self.args.word, 'member': accepted} if self.args.json else [_boolean(accepted)]

    def cfgenum(self) -> Output:
        words = cfg_enumerate(self.grammar(self.args.grammar), self.config.bound, self.config.word_cap)
        lines = [w if w else EMPTY_TEXT for w in word_strings(words)]
        return {'bound': self.config.bound, 'words': lines} if self.args.json else lines

    # seeded suites

    def check(self) -> Output:
        from src.tests.test_acceptance import run_tests

        results = run_tests(seed=self.config.seed, full=self.args.full, only=self.args.only)
        if not results.get('successful'):
            raise ToolkitError("Seeded suites failed", results)
        if self.args.json:
            return results
        return [f"passed {results['tests_run']} tests with seed {results['seed']}"]


class UsageError(Exception):
    """Invalid input text or flag values"""

    def __init__(self, errors: List[Dict[str, Any]]):
        super().__init__("; ".join(e['error'] for e in errors))
        self.errors = errors


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--m', type=int, default=None, help='bracket count')
    common.add_argument('--bound', type=int, default=None, help='source-length bound L_src')
    common.add_argument('--trunc', type=int, default=None, help='truncation T of the bracket model')
    common.add_argument('--seed', type=int, default=None, help='seed of randomized checks')
    common.add_argument('--aliases', action='store_true', help='read b, p, d, q as p0, p1, q0, q1')
    common.add_argument('--json', action='store_true', help='print a JSON document')
    common.add_argument('--verbose', action='store_true', help='log progress to stderr')
    common.add_argument('--stats', action='store_true', help='write timing and memory statistics to stderr')
    common.add_argument('--split', choices=SPLIT_STRATEGIES, default='first', help='matrix star split')
    common.add_argument('--grammar-style', choices=GRAMMAR_STYLES, default=None,
                        help='grammar style of centralizer matrices')
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per operation"""
    common = _common_flags()
    parser = argparse.ArgumentParser(prog='toolkit', description='Symbolic tensor Kleene algebra toolkit')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    def command(name: str, help_text: str, *positionals: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        for positional in positionals:
            sub.add_argument(positional)
        return sub

    command('nf', 'normal forms of token words, one per line (- reads stdin)', 'word')
    command('enum', 'bounded normal-form image of an expression', 'expr')
    command('eq', 'bounded equality of two expressions', 'left', 'right')
    command('member', 'stack recognition of a letter word', 'expr', 'word')
    command('centralizer', 'bounded centralizer test', 'expr')
    sub = command('compile', 'split automaton of an expression', 'expr')
    sub.add_argument('--detect-pi', action='store_true', help='turn q0 p0 into splice edges')
    sub.add_argument('--trim', action='store_true', help='remove useless states')
    for name, help_text in (('nf1', 'first normal form'), ('nf-reduced', 'reduced normal form')):
        sub = command(name, help_text, 'expr')
        sub.add_argument('--trim', action='store_true', help='remove useless states')
    command('nf2', 'second normal form of p0 r q0', 'expr')
    sub = command('combine', 'combine normal forms of expressions', 'op', 'left')
    sub.add_argument('right', nargs='?', default=None)
    sub.add_argument('--image', action='store_true', help='add the bounded image of the result')
    command('braket', 'relation of a bracket expression in the stack model', 'expr')
    sub = command('relcomp', 'relative completeness check of phi(x)', 'phi')
    sub.add_argument('--slot', default='x', help='slot letter')
    sub = command('cfg2expr', 'expression of a grammar file', 'grammar')
    sub.add_argument('--no-recode', action='store_true', help='keep one bracket pair per return item')
    command('expr2cfg', 'grammar of p0 r q0', 'expr')
    command('cyk', 'CYK membership of a word', 'grammar', 'word')
    command('cfgenum', 'bounded enumeration of a grammar', 'grammar')
    sub = command('check', 'seeded property suites')
    sub.add_argument('--full', action='store_true', help='run the full sample counts')
    sub.add_argument('--only', default=None, help='run only tests whose name contains this text')
    return parser


HANDLERS: Dict[str, Callable[[CommandLineInterface], Output]] = {
    'nf': CommandLineInterface.nf,
    'enum': CommandLineInterface.enum,
    'eq': CommandLineInterface.eq,
    'member': CommandLineInterface.member,
    'centralizer': CommandLineInterface.centralizer,
    'compile': CommandLineInterface.compile,
    'nf1': CommandLineInterface.nf1,
    'nf-reduced': CommandLineInterface.nf_reduced,
    'nf2': CommandLineInterface.nf2,
    'combine': CommandLineInterface.combine,
    'braket': CommandLineInterface.braket,
    'relcomp': CommandLineInterface.relcomp,
    'cfg2expr': CommandLineInterface.cfg2expr,
    'expr2cfg': CommandLineInterface.expr2cfg,
    'cyk': CommandLineInterface.cyk,
    'cfgenum': CommandLineInterface.cfgenum,
    'check': CommandLineInterface.check,
}


def _configure_logging(verbose: bool) -> None:
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING,
                        format=LOG_FORMAT, stream=sys.stderr)


def _emit(output: Output, stream) -> None:
    if isinstance(output, dict):
        stream.write(JSONSerializer().serialize(output) + "\n")
    else:
        for line in output:
            stream.write(line + "\n")


def _error_document(error: BaseException) -> str:
    if isinstance(error, ToolkitError):
        document = error.to_dict()
    else:
        document = {'error': str(error), 'type': type(error).__name__, 'details': {}}
    return json.dumps(document, sort_keys=True)


def dispatch(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    """
    Run one invocation

    Args:
        argv (Sequence[str]): arguments without the program name
        stdout: result stream, sys.stdout by default
        stderr: diagnostic stream, sys.stderr by default

    Returns:
        int: exit status 0, 1 or 2
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0

    _configure_logging(args.verbose)

    word = args.word if args.command == 'nf' and args.word != '-' else None
    report = command_validator().validate_input({'bound': args.bound, 'trunc': args.trunc, 'm': args.m,
                                                 'seed': args.seed, 'slot': getattr(args, 'slot', None),
                                                 'alias_word' if args.aliases else 'word': word})
    if args.command == 'combine' and args.op not in COMBINATORS:
        report['valid'] = False
        report['errors'].append({'field': 'op', 'type': 'choice',
                                 'error': f"Combinator must be one of {', '.join(COMBINATORS)}"})
    if not report['valid']:
        stderr.write(json.dumps({'error': 'invalid input', 'type': 'UsageError',
                                 'details': {'errors': report['errors']}}, sort_keys=True) + "\n")
        return 2

    try:
        config = ToolkitConfig.from_env().with_overrides(
            m=args.m, bound=args.bound, trunc=args.trunc, seed=args.seed, grammar_style=args.grammar_style)
        UtilityHelper.validate_config(config.to_dict())
        interface = CommandLineInterface(args, config)
        output = HANDLERS[args.command](interface)
        _emit(output, stdout)
        status = 0
    except UsageError as e:
        stderr.write(json.dumps({'error': str(e), 'type': 'UsageError', 'details': {'errors': e.errors}},
                                sort_keys=True) + "\n")
        status = 2
    except (ToolkitError, OSError, RecursionError) as e:
        logger.error(f"{args.command} failed: {str(e)}")
        stderr.write(_error_document(e) + "\n")
        status = 1

    if args.stats:
        metrics_collector.collect_process_metrics(args.command)
        stderr.write(json.dumps({'performance': performance_logger.get_metrics(),
                                 'process': metrics_collector.get_performance_stats()},
                                sort_keys=True, default=str) + "\n")
    return status


def main() -> None:
    """Main CLI entry point"""
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
