"""
CLC Tally
Command-line front end: tally ballots or a Llull matrix, check invariants,
generate seeded inputs and run the verification harness
"""
import argparse
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from config.config import Config
from src.profile.ballots import format_profile
from src.profile.llull_matrix import LlullMatrix, aggregate
from src.tally.formatters.formatter_factory import FormatterFactory
from src.tally.matrix_loader import format_matrix_tsv, load_matrix, load_profile
from src.tally.tally_engine import TallyEngine, TallyReport
from src.utils.errors import InputError, InvariantViolation
from src.utils.logger import logger
from src.utils.rationals import parse_rational
from src.verify.generators import (
    planted_clones,
    planted_dominance,
    planted_majority,
    random_gamma_matrix,
    random_profile,
)
from src.verify.harness import VerificationHarness

GENERATOR_KINDS = ('matrix', 'profile', 'dominance', 'majority', 'clones')


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_input_options(parser: argparse.ArgumentParser, allow_random: bool = False) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--ballots', metavar='FILE', help='ballot file (candidates line + WEIGHT: A > B = C lines)')
    group.add_argument('--matrix', metavar='FILE', help='TSV score matrix, entries decimal or p/q')
    if allow_random:
        group.add_argument('--random', metavar='N', type=int, help='seeded random Γ matrix with N candidates')
    parser.add_argument('--unlisted', choices=Config.UNLISTED_POLICIES, default=None,
                        help=f"incomplete ballots (default: {Config.UNLISTED_POLICY})")
    parser.add_argument('--total-weight', metavar='W', type=_rational, default=None,
                        help='matrix entries are absolute counts over W')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='clc-tally',
        description='Rank-like rates by the Continuous Llull Condorcet method',
    )
    commands = parser.add_subparsers(dest='command', required=True)

    tally = commands.add_parser('tally', help='compute rates and the social order')
    _add_input_options(tally)
    tally.add_argument('--detailed', action='store_true', help='print every stage of the procedure')
    tally.add_argument('--format', default='text', choices=FormatterFactory.get_available_formats())
    tally.add_argument('--digits', type=int, default=None,
                       help=f"decimal digits (default: {Config.DISPLAY_DIGITS})")
    tally.set_defaults(handler=cmd_tally)

    check = commands.add_parser('check', help='validate the input and every stage invariant')
    _add_input_options(check, allow_random=True)
    check.add_argument('--seed', type=int, default=None)
    check.set_defaults(handler=cmd_check)

    generate = commands.add_parser('generate', help='emit a seeded random matrix or profile')
    generate.add_argument('--kind', choices=GENERATOR_KINDS, default='matrix')
    generate.add_argument('--candidates', metavar='N', type=int, default=5)
    generate.add_argument('--seed', type=int, default=None)
    generate.set_defaults(handler=cmd_generate)

    verify = commands.add_parser('verify', help='run every property over seeded random inputs')
    verify.add_argument('--seed', type=int, default=None)
    verify.add_argument('--trials', type=int, default=None,
                        help=f"base trial count (default: {Config.PROPERTY_TRIALS})")
    verify.add_argument('--budget', type=int, default=None,
                        help=f"expected-failure search budget (default: {Config.SEARCH_BUDGET})")
    verify.set_defaults(handler=cmd_verify)

    return parser


def _seed(args) -> int:
    return Config.DEFAULT_SEED if args.seed is None else args.seed


def _load_input(args) -> Tuple[LlullMatrix, Optional[Fraction]]:
    """Matrix and the display scale for absolute counts"""
    if args.ballots:
        policy = args.unlisted or Config.UNLISTED_POLICY
        profile = load_profile(args.ballots, policy)
        if profile.total_weight <= 0:
            raise InputError("total ballot weight must be positive")
        scale = profile.total_weight if profile.has_integer_weights() else None
        return aggregate(profile), scale
    if getattr(args, 'random', None) is not None:
        if args.random < 1:
            raise ValueError("--random needs at least one candidate")
        return random_gamma_matrix(np.random.default_rng(_seed(args)), args.random), None
    if args.total_weight is not None and args.total_weight <= 0:
        raise InputError("--total-weight must be positive")
    return load_matrix(args.matrix, args.total_weight), args.total_weight


def cmd_tally(args) -> int:
    """Run the pipeline and print the report"""
    formatter = FormatterFactory.create(args.format, digits=args.digits, detailed=args.detailed)
    matrix, scale = _load_input(args)
    report: TallyReport = TallyEngine().run(matrix, scale=scale)
    sys.stdout.write(formatter.format(report))
    return 0


def cmd_check(args) -> int:
    """Print PASS/FAIL/SKIP per invariant; exit 1 on any FAIL"""
    matrix, _ = _load_input(args)
    results = TallyEngine().check(matrix)
    width = max(len(r.name) for r in results)
    for r in results:
        line = f"{r.status}  {r.name:<{width}}"
        if r.detail:
            line += f"  {r.detail}"
        print(line.rstrip())
    failed = sum(1 for r in results if r.passed is False)
    skipped = sum(1 for r in results if r.passed is None)
    print(f"\n{len(results)} checks: {len(results) - failed - skipped} passed, "
          f"{failed} failed, {skipped} skipped")
    return 1 if failed else 0


def cmd_generate(args) -> int:
    """Emit a Γ matrix as TSV or a profile in the ballot grammar"""
    n = args.candidates
    if n < 1:
        raise ValueError("--candidates must be at least 1")
    seed = _seed(args)
    rng = np.random.default_rng(seed)

    if args.kind == 'matrix':
        sys.stdout.write(format_matrix_tsv(random_gamma_matrix(rng, n)))
        return 0

    header = [f"# generated: kind={args.kind} candidates={n} seed={seed}"]
    if args.kind == 'profile':
        profile = random_profile(rng, n)
    elif args.kind == 'dominance':
        planted = planted_dominance(rng, n)
        profile = planted.profile
        header.append(f"# unanimous: X = {' '.join(planted.X)} over Y = {' '.join(planted.Y)}")
    elif args.kind == 'majority':
        planted = planted_majority(rng, n)
        profile = planted.profile
        header.append(f"# majority: X = {' '.join(planted.X)} over Y = {' '.join(planted.Y)}")
    else:
        planted = planted_clones(rng, n, size=min(2, max(1, n - 1)))
        profile = planted.profile
        header.append(f"# clone set: C = {' '.join(planted.C)}")
    sys.stdout.write("\n".join(header) + "\n" + format_profile(profile))
    return 0


def cmd_verify(args) -> int:
    """Run the harness; exit 1 when a property fails"""
    for flag in ('trials', 'budget'):
        value = getattr(args, flag)
        if value is not None and value < (1 if flag == 'trials' else 0):
            raise ValueError(f"--{flag} is out of range")
    harness = VerificationHarness(seed=_seed(args), trials=args.trials, search_budget=args.budget)
    summary = harness.run_all()
    return 1 if summary['failed'] else 0


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except InvariantViolation as e:
        logger.error(f"Invariant violation: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return 1
    except (InputError, ValueError) as e:
        logger.debug(f"Rejected input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
