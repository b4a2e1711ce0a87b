"""Command-line surface: density exports, clustering runs, benchmarks, serving.

Machine-readable output goes to stdout, diagnostics and the human-readable
benchmark table to stderr. Exit codes: 0 success, 1 usage, 2 data error,
3 algorithm error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import run_benchmark
from .centers import select_by_jump, select_top_k
from .clustering import DEFAULT_MAX_ITER, DEFAULT_TOL, improved_kmeans, kmeans_baseline
from .dataset import NORMALIZE_METHODS, Dataset, detect_label_column, load_csv, normalize
from .density import DEFAULT_T, DENSITY_KERNELS, build_profile
from .distance import KernelSpec, pairwise_euclidean
from .errors import AlgorithmError, DataError
from .server import ServerState, create_app, default_static_dir

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_ALGORITHM = 3


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dataset_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("csv", help="input CSV file")
    parser.add_argument(
        "--label-col",
        default="auto",
        help="label column name/index, 'none', or 'auto' (header named class/label/target, "
        "else a trailing non-numeric column)",
    )
    parser.add_argument(
        "--exclude-cols",
        action="append",
        default=[],
        metavar="COLS",
        help="comma-separated feature columns (names or indices) to drop, e.g. identifiers",
    )
    parser.add_argument("--delimiter", default=",", help="CSV delimiter (default ',')")
    parser.add_argument(
        "--normalize",
        choices=NORMALIZE_METHODS,
        default=None,
        help="column rescaling before clustering (default none)",
    )
    parser.add_argument(
        "--config",
        type=Path,
        default=None,
        help="JSON file with per-dataset defaults for t, q, kernel, normalize",
    )


def _density_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--t", type=float, default=None, help="neighbor fraction for dc (default 0.02)")
    parser.add_argument(
        "--kernel", choices=DENSITY_KERNELS, default=None, help="local density kernel (default gaussian)"
    )


def _algorithm_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q", type=float, default=None, help="kernel distance exponent in (0, 2] (default 1.5)")
    parser.add_argument(
        "--mode",
        choices=("iterate", "single-pass"),
        default="iterate",
        help="improved algorithm iteration mode",
    )
    parser.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL)


def build_parser() -> _Parser:
    parser = _Parser(prog="dpkmeans", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_density = sub.add_parser("density", help="export the rho/delta/gamma profile")
    _dataset_options(p_density)
    _density_options(p_density)
    p_density.add_argument(
        "--out",
        choices=("json", "decision-graph"),
        default="json",
        help="JSON profile or the legacy two-column decision-graph text",
    )
    p_density.set_defaults(handler=cmd_density)

    p_cluster = sub.add_parser("cluster", help="run one clustering and emit its JSON result")
    _dataset_options(p_cluster)
    _density_options(p_cluster)
    _algorithm_options(p_cluster)
    group = p_cluster.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="number of clusters")
    group.add_argument("--auto-k", action="store_true", help="choose k via the gamma jump")
    p_cluster.add_argument(
        "--algorithm", choices=("improved", "baseline"), default="improved"
    )
    p_cluster.add_argument("--seed", type=int, default=0, help="baseline initialization seed")
    p_cluster.add_argument(
        "--point-mode",
        action="store_true",
        help="assign by ||x-c||^q against explicit centroids instead of the feature-space expansion",
    )
    p_cluster.add_argument(
        "--omit-timing", action="store_true", help="drop wall-time from the JSON for reproducible bytes"
    )
    p_cluster.set_defaults(handler=cmd_cluster)

    p_bench = sub.add_parser("bench", help="seeded baseline runs vs one improved run")
    _dataset_options(p_bench)
    _density_options(p_bench)
    _algorithm_options(p_bench)
    p_bench.add_argument("--k", type=int, required=True)
    p_bench.add_argument("--runs", type=int, default=20, help="number of seeded baseline runs")
    p_bench.add_argument("--seed-base", type=int, default=42, help="seeds are S, S+1, ..., S+runs-1")
    p_bench.add_argument(
        "--out",
        choices=("both", "json", "table"),
        default="both",
        help="both: JSON to stdout and table to stderr; json/table: that one to stdout",
    )
    p_bench.add_argument(
        "--omit-timing", action="store_true", help="drop wall-times from the JSON for reproducible bytes"
    )
    p_bench.set_defaults(handler=cmd_bench)

    p_serve = sub.add_parser("serve", help="serve the decision-graph explorer API and UI")
    _dataset_options(p_serve)
    _density_options(p_serve)
    p_serve.add_argument("--q", type=float, default=None, help="default kernel exponent for /api/select")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--ui-dir", type=Path, default=None, help="static UI bundle to serve at /")
    p_serve.set_defaults(handler=cmd_serve)

    return parser


def _dataset_config(args) -> dict:
    if args.config is None:
        return {}
    try:
        with open(args.config) as f:
            config = json.load(f)
    except OSError as exc:
        raise DataError(f"cannot read config {args.config}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DataError(f"config {args.config} is not valid JSON: {exc}") from exc
    entry = config.get(Path(args.csv).stem, {})
    if not isinstance(entry, dict):
        raise DataError(f"config entry for {Path(args.csv).stem!r} must be an object")
    return entry


def _load_dataset(args, config: dict) -> Dataset:
    auto = args.label_col == "auto"
    if auto:
        label = detect_label_column(args.csv, args.delimiter)
    elif args.label_col == "none":
        label = None
    else:
        label = args.label_col
    exclude = [c for chunk in args.exclude_cols for c in chunk.split(",") if c]
    try:
        data = load_csv(
            args.csv, label_column=label, delimiter=args.delimiter, exclude_columns=exclude
        )
    except DataError as exc:
        if auto and "listed in excluded columns" in str(exc):
            # an explicit exclusion overrides the auto-detected label column
            data = load_csv(
                args.csv, label_column=None, delimiter=args.delimiter, exclude_columns=exclude
            )
        else:
            raise
    method = args.normalize if args.normalize is not None else config.get("normalize", "none")
    return normalize(data, method)


def _density_params(args, config: dict) -> tuple[float, str]:
    t = args.t if args.t is not None else float(config.get("t", DEFAULT_T))
    kernel = args.kernel if args.kernel is not None else config.get("kernel", "gaussian")
    if kernel not in DENSITY_KERNELS:
        raise ValueError(f"unknown density kernel {kernel!r} in config")
    return t, kernel


def _kernel_spec(args, config: dict) -> KernelSpec:
    q = args.q if args.q is not None else float(config.get("q", 1.5))
    return KernelSpec(q)


def cmd_density(args) -> int:
    config = _dataset_config(args)
    data = _load_dataset(args, config)
    t, kernel = _density_params(args, config)
    profile = build_profile(pairwise_euclidean(data), t=t, kernel=kernel)
    if args.out == "decision-graph":
        sys.stdout.write(profile.decision_graph_text())
    else:
        print(profile.to_json())
    return EXIT_OK


def cmd_cluster(args) -> int:
    config = _dataset_config(args)
    data = _load_dataset(args, config)
    t, kernel = _density_params(args, config)
    mode = args.mode.replace("-", "_")

    if args.algorithm == "baseline":
        if args.auto_k:
            profile = build_profile(pairwise_euclidean(data), t=t, kernel=kernel)
            k = select_by_jump(profile).k
        else:
            k = args.k
        result = kmeans_baseline(data, k, seed=args.seed, max_iter=args.max_iter, tol=args.tol)
    else:
        profile = build_profile(pairwise_euclidean(data), t=t, kernel=kernel)
        centers = select_by_jump(profile) if args.auto_k else select_top_k(profile, args.k)
        result = improved_kmeans(
            data,
            centers,
            kernel=_kernel_spec(args, config),
            mode=mode,
            max_iter=args.max_iter,
            tol=args.tol,
            point_mode=args.point_mode,
        )

    payload = result.to_dict(include_timing=not args.omit_timing)
    payload["dataset"] = data.name
    if args.algorithm == "improved":
        payload["density"] = {"t": t, "kernel": kernel}
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def cmd_bench(args) -> int:
    config = _dataset_config(args)
    data = _load_dataset(args, config)
    t, kernel = _density_params(args, config)
    if args.runs < 1:
        raise ValueError("--runs must be >= 1")
    seeds = range(args.seed_base, args.seed_base + args.runs)
    report = run_benchmark(
        data,
        k=args.k,
        seeds=seeds,
        t=t,
        density_kernel=kernel,
        kernel=_kernel_spec(args, config),
        mode=args.mode.replace("-", "_"),
        max_iter=args.max_iter,
        tol=args.tol,
    )
    include_timing = not args.omit_timing
    if args.out == "table":
        sys.stdout.write(report.format_table())
    elif args.out == "json":
        print(report.to_json(include_timing))
    else:
        print(report.to_json(include_timing))
        sys.stderr.write(report.format_table())
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    config = _dataset_config(args)
    data = _load_dataset(args, config)
    t, kernel = _density_params(args, config)
    profile = build_profile(pairwise_euclidean(data), t=t, kernel=kernel)
    q = args.q if args.q is not None else float(config.get("q", 1.5))
    KernelSpec(q)  # validate before the server starts
    state = ServerState(dataset=data, profile=profile, default_q=q)
    static_dir = args.ui_dir if args.ui_dir is not None else default_static_dir()
    app = create_app(state, static_dir=static_dir)
    print(f"serving {data.name} (N={data.n}) on http://{args.host}:{args.port}", file=sys.stderr)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DataError as exc:
        print(f"dpkmeans: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except AlgorithmError as exc:
        print(f"dpkmeans: {exc}", file=sys.stderr)
        return EXIT_ALGORITHM
    except ValueError as exc:
        print(f"dpkmeans: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
