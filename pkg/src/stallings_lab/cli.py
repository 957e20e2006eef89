"""
Command-line front end.

Data goes to standard output (or ``--out``); diagnostics and progress go to
standard error through a rich console.
"""

from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence
import argparse
import logging
import sys

from rich.console import Console

from .core.config import LabConfig, configure_logging, load_config
from .core.errors import ContractViolation, StallingsLabError
from .core.event_system import subscribe_to_event, unsubscribe_from_event
from .core.formats import dump_graph, dump_words, is_words_text, load_graph, load_words
from .core.subgroup import (
    INFINITE,
    Subgroup,
    basis,
    conjugate,
    index_in_F,
    intersect,
    join,
    relative_index,
)
from .core.words import parse_word
from .lab import (
    GUZMAN_NAMES,
    analyze_pair,
    example_guzman,
    example_iehnc,
    guzman_generators,
    iehnc_generators,
    run_experiment,
    rows_to_csv,
    search_counterexample,
)
from .lab.experiment import SEARCH_TARGETS
from .sampling import create_distribution, make_rng
from .sampling.distributions import BaseDistribution

logger = logging.getLogger(__name__)

console = Console(stderr=True)

DISTRIBUTIONS = ("graph", "word", "finite")
EXAMPLES = ("iehnc", "guzman")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ContractViolation(f"cannot read {path}: {e.strerror}") from e


def _subgroup_from_text(text: str) -> Subgroup:
    """Subgroup files are recognised by their ``rank`` header; anything else is a graph."""
    if is_words_text(text):
        rank, words = load_words(text)
        return Subgroup.from_words(rank, words)
    return Subgroup.from_graph(load_graph(text))


def _load_input(args: argparse.Namespace) -> Subgroup:
    if args.word:
        if args.rank is None:
            raise ContractViolation("--word needs --rank")
        words = [parse_word(w) for w in args.word]
        for w in words:
            w.check_alphabet(args.rank)
        return Subgroup.from_words(args.rank, words)
    if args.input is None:
        raise ContractViolation("give an input file or --word")
    return _subgroup_from_text(_read_text(args.input))


def _load_pair(args: argparse.Namespace):
    return (_subgroup_from_text(_read_text(args.left)),
            _subgroup_from_text(_read_text(args.right)))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
        logger.info("Wrote %s", out)
    else:
        sys.stdout.write(text)


def _format_index(value) -> str:
    return "inf" if value == INFINITE else str(value)


def _generator_counts(args: argparse.Namespace, config: LabConfig) -> List[int]:
    return args.generators or config.generator_counts


def _distribution(args: argparse.Namespace,
                  config: LabConfig,
                  generator_count: Optional[int] = None) -> BaseDistribution:
    if args.distribution == "word":
        k = generator_count if generator_count is not None else _generator_counts(args, config)[0]
        return create_distribution("word", generator_count=k)
    max_rejections = args.max_rejections or config.max_rejections
    return create_distribution(args.distribution, max_rejections=max_rejections)


def cmd_fold(args, config) -> int:
    _emit(dump_graph(_load_input(args).graph), args.out)
    return 0


def cmd_intersect(args, config) -> int:
    H, K = _load_pair(args)
    _emit(dump_graph(intersect(H, K).graph), args.out)
    return 0


def cmd_join(args, config) -> int:
    H, K = _load_pair(args)
    _emit(dump_graph(join(H, K).graph), args.out)
    return 0


def cmd_rank(args, config) -> int:
    H = _load_input(args)
    _emit(f"rank={H.rank}\nreduced_rank={H.reduced_rank}\n", args.out)
    return 0


def cmd_index(args, config) -> int:
    H = _load_input(args)
    if args.relative_to:
        sup = _subgroup_from_text(_read_text(args.relative_to))
        value = relative_index(H, sup)
    else:
        value = index_in_F(H)
    _emit(f"index={_format_index(value)}\n", args.out)
    return 0


def cmd_member(args, config) -> int:
    H = _load_input(args)
    lines = []
    for text in args.element:
        w = parse_word(text)
        w.check_alphabet(H.ambient_rank)
        lines.append(f"{text}: {str(H.contains(w)).lower()}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_basis(args, config) -> int:
    H = _load_input(args)
    _emit(dump_words(H.ambient_rank, basis(H)), args.out)
    return 0


def cmd_conjugate(args, config) -> int:
    H = _load_input(args)
    _emit(dump_graph(conjugate(H, parse_word(args.by)).graph), args.out)
    return 0


def _accepted(event) -> None:
    data = event.data
    console.print(f"{data['distribution']}: accepted on draw {data['attempts']} "
                  f"({data['vertex_count']} vertices)", markup=False)


def cmd_sample(args, config) -> int:
    seed = config.seed if args.seed is None else args.seed
    distribution = _distribution(args, config)
    subscribe_to_event("sample", _accepted)
    try:
        H = distribution.sample(args.rank, args.param, make_rng(seed))
    finally:
        unsubscribe_from_event("sample", _accepted)
    provenance = {"distribution": distribution.tag, "seed": seed, **H.provenance}
    _emit(dump_graph(H.graph, provenance), args.out)
    return 0


def cmd_analyze(args, config) -> int:
    H, K = _load_pair(args)
    _emit(analyze_pair(H, K).format(), args.out)
    return 0


def _parse_example_params(items: Sequence[str]) -> Dict[str, int]:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not value.lstrip("-").isdigit():
            raise ContractViolation(f"example parameters look like v=4 l=4, got {item!r}")
        params[key] = int(value)
    return params


def cmd_examples(args, config) -> int:
    params = _parse_example_params(args.params)
    if args.name == "iehnc":
        unknown = set(params) - {"v", "l"}
        if unknown:
            raise ContractViolation(f"unknown parameters for iehnc: {', '.join(sorted(unknown))}")
        v, l = params.get("v", 4), params.get("l", 4)
        example_iehnc(v, l)
        h_words, k_words = iehnc_generators(v, l)
        rank = l + 2
    else:
        if params:
            raise ContractViolation("guzman takes no parameters")
        example_guzman()
        h_words, k_words = guzman_generators()
        rank = len(GUZMAN_NAMES)
    h_text, k_text = dump_words(rank, h_words), dump_words(rank, k_words)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "H.txt").write_text(h_text)
        (out_dir / "K.txt").write_text(k_text)
        console.print(f"wrote {out_dir / 'H.txt'} and {out_dir / 'K.txt'}", markup=False)
    else:
        sys.stdout.write(f"# H\n{h_text}# K\n{k_text}")
    return 0


def _progress(event) -> None:
    data = event.data
    row = data["row"] or {}
    console.print(f"{data['distribution']} rank={data['rank']} param={data['param']}: "
                  f"{row.get('pct_counterexample', 0):.2f}% counterexamples, "
                  f"{row.get('pct_nontrivial_meet', 0):.2f}% nontrivial meets", markup=False)


def cmd_experiment(args, config) -> int:
    ranks = args.rank or config.ranks
    param_min = config.param_min if args.param_min is None else args.param_min
    param_max = config.param_max if args.param_max is None else args.param_max
    if param_min > param_max:
        raise ContractViolation(f"--param-min {param_min} exceeds --param-max {param_max}")
    if args.distribution == "word":
        distributions = [_distribution(args, config, k) for k in _generator_counts(args, config)]
    else:
        distributions = [_distribution(args, config)]
    rows = []
    subscribe_to_event("experiment", _progress)
    try:
        for distribution in distributions:
            rows.extend(run_experiment(
                distribution,
                range(param_min, param_max + 1),
                samples=config.samples if args.samples is None else args.samples,
                seed=config.seed if args.seed is None else args.seed,
                ranks=ranks,
                jobs=config.jobs if args.jobs is None else args.jobs,
            ))
    finally:
        unsubscribe_from_event("experiment", _progress)
    _emit(rows_to_csv(rows), args.out)
    return 0


def cmd_search(args, config) -> int:
    seed = config.seed if args.seed is None else args.seed
    result = search_counterexample(_distribution(args, config), args.rank, args.param,
                                   args.attempts, seed, args.target)
    if result is None:
        console.print(f"no {args.target} counterexample in {args.attempts} attempts", markup=False)
        return 0
    r = result.H.ambient_rank
    text = (f"attempt={result.attempt}\npair_seed={result.seed}\n{result.report.format()}"
            f"# H\n{dump_words(r, basis(result.H))}# K\n{dump_words(r, basis(result.K))}")
    _emit(text, args.out)
    return 0


def _add_single_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="subgroup file or graph file ('-' for stdin)")
    p.add_argument("--word", action="append", help="inline generator, e.g. '1 -2 1'")
    p.add_argument("--rank", type=int, help="ambient rank for --word")


def _add_pair_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("left", help="first subgroup or graph file")
    p.add_argument("right", help="second subgroup or graph file")


def _add_sampling(p: argparse.ArgumentParser, default: str = "graph") -> None:
    p.add_argument("--distribution", choices=DISTRIBUTIONS, default=default)
    p.add_argument("--generators", type=int, action="append",
                   help="generator count k for word-based sampling (repeatable; experiments default to the configured grid)")
    p.add_argument("--max-rejections", type=int, help="rejection budget for graph-based sampling")
    p.add_argument("--seed", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stallings-lab",
                                     description="Stallings graphs and subgroup intersections in free groups")
    parser.add_argument("--config", help="YAML configuration file")
    parser.add_argument("-v", "--verbose", action="store_true", help="log to the terminal")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", help="write output here instead of standard output")
        p.set_defaults(handler=handler)
        return p

    _add_single_input(add("fold", cmd_fold, "fold generators into a Stallings graph"))
    _add_pair_input(add("intersect", cmd_intersect, "graph of H ∩ K"))
    _add_pair_input(add("join", cmd_join, "graph of H ∨ K"))
    _add_single_input(add("rank", cmd_rank, "rank and reduced rank"))

    p = add("index", cmd_index, "index in F, or in a larger subgroup")
    _add_single_input(p)
    p.add_argument("--relative-to", help="subgroup file of a subgroup containing the input")

    p = add("member", cmd_member, "membership test")
    _add_single_input(p)
    p.add_argument("--element", action="append", required=True, help="word to test")

    _add_single_input(add("basis", cmd_basis, "free basis as a subgroup file"))

    p = add("conjugate", cmd_conjugate, "graph of w H w⁻¹")
    _add_single_input(p)
    p.add_argument("--by", required=True, help="conjugating word")

    p = add("sample", cmd_sample, "draw one random subgroup")
    _add_sampling(p)
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--param", type=int, required=True, help="vertex count, or max word length")

    _add_pair_input(add("analyze", cmd_analyze, "check HNC, SHNC, IEHNC and Guzman's conjecture"))

    p = add("examples", cmd_examples, "write a known counterexample pair")
    p.add_argument("name", choices=EXAMPLES)
    p.add_argument("params", nargs="*", help="key=value, e.g. v=4 l=4")

    p = add("experiment", cmd_experiment, "frequency experiment as CSV")
    _add_sampling(p)
    p.add_argument("--rank", type=int, action="append", help="ambient rank (repeatable)")
    p.add_argument("--param-min", type=int)
    p.add_argument("--param-max", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--jobs", type=int)

    p = add("search", cmd_search, "search for a counterexample")
    _add_sampling(p)
    p.add_argument("--rank", type=int, default=3)
    p.add_argument("--param", type=int, required=True)
    p.add_argument("--attempts", type=int, default=1000)
    p.add_argument("--target", choices=SEARCH_TARGETS, default="iehnc")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        configure_logging(config, args.verbose)
        return args.handler(args, config)
    except StallingsLabError as e:
        logger.error("%s failed: %s", args.command, e)
        console.print(f"error: {e}", markup=False)
        return 1
