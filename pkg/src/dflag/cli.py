"""Command-line entry point: count / homology / persistence runs.

Exit codes: 0 success, 1 input parse error, 2 configuration error,
3 resource limit hit. All numeric output is deterministic for a fixed
configuration, whatever the thread count.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from .complexes import count_cells
from .errors import ConfigError, GraphInputError, SizeLimitError
from .filtration import ALGORITHMS, FiltrationSpec
from .graph import load_edge_list, load_flag_file
from .oracle import oracle_barcode, oracle_betti, oracle_counts
from .reduction import compute_homology, compute_persistence

MODES = ("count", "homology", "persistence")
FORMATS = ("flag", "edge-list")


@dataclass
class RunConfig:
    input: str
    format: str = "flag"
    mode: str = "homology"
    undirected: bool = False
    filtration: str | None = None
    modulus: int = 2
    approximate: int | None = None
    min_dim: int = 0
    max_dim: int | None = None
    threads: int = 1
    in_memory: bool = False
    checkpoint: str | None = None
    skip_zero_bars: bool = True
    output: str | None = None

    def resolved_filtration(self) -> FiltrationSpec:
        if self.filtration is not None:
            return FiltrationSpec(self.filtration)
        if self.mode == "persistence":
            raise ConfigError(
                "persistence mode needs an explicit --filtration "
                "(a weight-bearing one, or zero on purpose)"
            )
        return FiltrationSpec("zero")

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}")
        if self.threads < 1:
            raise ConfigError("--threads must be >= 1")
        if self.approximate is not None and self.approximate < 1:
            raise ConfigError("--approximate must be a positive integer")
        if self.checkpoint and self.mode != "count":
            raise ConfigError("--checkpoint only applies to count mode")
        if self.min_dim < 0:
            raise ConfigError("--min-dim must be >= 0")
        if self.max_dim is not None and self.max_dim < self.min_dim:
            raise ConfigError("--max-dim must be >= --min-dim")


def _load_graph(config: RunConfig):
    with open(config.input, "r", encoding="utf-8") as fh:
        text = fh.read()
    directed = not config.undirected
    if config.format == "flag":
        return load_flag_file(text, directed=directed)
    return load_edge_list(text, directed=directed)


def _format_value(x: float) -> str:
    if x == math.inf:
        return "inf"
    return f"{x:g}"


def _count_lines(config: RunConfig, g) -> list[str]:
    report = count_cells(
        g, max_dim=config.max_dim, threads=config.threads, checkpoint=config.checkpoint
    )
    lines = [f"dim {d}: {c}" for d, c in enumerate(report.counts)]
    lines.append(f"euler: {report.euler_characteristic}")
    return lines


def _homology_lines(config: RunConfig, g, with_bars: bool) -> list[str]:
    compute = compute_persistence if with_bars else compute_homology
    report = compute(
        g,
        spec=config.resolved_filtration(),
        max_dim=config.max_dim,
        min_dim=config.min_dim,
        modulus=config.modulus,
        approx_limit=config.approximate,
        threads=config.threads,
        in_memory=config.in_memory,
    )
    lines = []
    for k in sorted(report.betti):
        lines.append(
            f"dim {k}: betti {report.betti[k]} "
            f"(skipped {report.skipped[k]}, error <= {report.error_bounds[k]})"
        )
        if with_bars:
            for bar in report.bars(dim=k, include_zero=not config.skip_zero_bars):
                lines.append(f"[{_format_value(bar.birth)}, {_format_value(bar.death)})")
    return lines


def run(config: RunConfig) -> list[str]:
    config.validate()
    g = _load_graph(config)
    if config.mode == "count":
        return _count_lines(config, g)
    return _homology_lines(config, g, with_bars=config.mode == "persistence")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dflag",
        description=(
            "Build the directed flag complex of a graph and compute cell "
            "counts, Betti numbers, or persistent homology over a prime field."
        ),
    )
    parser.add_argument("--input", required=True, help="path to the input graph")
    parser.add_argument("--format", choices=FORMATS, default="flag")
    parser.add_argument("--mode", choices=MODES, default="homology")
    parser.add_argument(
        "--undirected",
        action="store_true",
        help="treat edges as unordered pairs, oriented low id to high id",
    )
    parser.add_argument("--filtration", choices=ALGORITHMS, default=None)
    parser.add_argument("--modulus", type=int, default=2, help="prime field order")
    parser.add_argument(
        "--approximate",
        type=int,
        default=None,
        metavar="N",
        help="skip columns needing N or more reduction steps (default: exact)",
    )
    parser.add_argument("--min-dim", type=int, default=0)
    parser.add_argument("--max-dim", type=int, default=None)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument(
        "--in-memory",
        action="store_true",
        help="keep the whole complex in memory instead of streaming dimensions",
    )
    parser.add_argument(
        "--checkpoint",
        default=None,
        help="count mode: per-vertex partial counts file, resumable",
    )
    parser.add_argument(
        "--skip-zero-bars",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="drop bars that are born and die at the same value",
    )
    parser.add_argument("--output", default=None, help="write the report here instead of stdout")
    return parser


def build_oracle_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dflag oracle",
        description="Brute-force cross-checks on small graphs (dev aid).",
    )
    parser.add_argument("--input", required=True)
    parser.add_argument("--format", choices=FORMATS, default="flag")
    parser.add_argument("--what", choices=("counts", "betti", "barcode"), default="counts")
    parser.add_argument("--undirected", action="store_true")
    parser.add_argument("--filtration", choices=ALGORITHMS, default="zero")
    parser.add_argument("--modulus", type=int, default=2)
    parser.add_argument("--max-dim", type=int, default=None)
    return parser


def _run_oracle(args) -> list[str]:
    config = RunConfig(input=args.input, format=args.format, undirected=args.undirected)
    g = _load_graph(config)
    if args.what == "counts":
        counts = oracle_counts(g, args.max_dim)
        lines = [f"dim {d}: {c}" for d, c in enumerate(counts)]
        lines.append(
            f"euler: {sum(c if d % 2 == 0 else -c for d, c in enumerate(counts))}"
        )
        return lines
    if args.what == "betti":
        betti = oracle_betti(g, args.max_dim, q=args.modulus)
        return [f"dim {d}: betti {b}" for d, b in enumerate(betti)]
    spec = FiltrationSpec(args.filtration)
    bars = oracle_barcode(g, spec, args.max_dim, q=args.modulus)
    return [
        f"dim {d}: [{_format_value(b)}, {_format_value(e)})" for d, b, e in bars
    ]


def _emit(lines: list[str], output: str | None) -> None:
    text = "\n".join(lines) + "\n" if lines else ""
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and argv[0] == "oracle":
            args = build_oracle_parser().parse_args(argv[1:])
            _emit(_run_oracle(args), None)
            return 0
        args = build_parser().parse_args(argv)
        config = RunConfig(
            input=args.input,
            format=args.format,
            mode=args.mode,
            undirected=args.undirected,
            filtration=args.filtration,
            modulus=args.modulus,
            approximate=args.approximate,
            min_dim=args.min_dim,
            max_dim=args.max_dim,
            threads=args.threads,
            in_memory=args.in_memory,
            checkpoint=args.checkpoint,
            skip_zero_bars=args.skip_zero_bars,
            output=args.output,
        )
        _emit(run(config), config.output)
        return 0
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
