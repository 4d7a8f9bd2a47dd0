"""Command-line interface.

Subcommands: replicate, fit, compare, scaling-study, bench, profile.
Exit codes: 0 success, 1 I/O or parse failure, 2 usage error. All
randomness flows from --seed (default 42); with --threads 1 every output
except measured timings is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict
from pathlib import Path

from . import metrics, models, recon
from .bench import timed_suite
from .community import Partition, read_partition
from .errors import EdgeListParseError
from .graph import Graph, read_edge_list, write_edge_list
from .rng import DEFAULT_SEED, derive_seed

SCHEMA_VERSION = 1

REPLICATE_MODELS = ("recon",) + models.REPLICABLE_KINDS
FIT_MODELS = ("recon",) + models.REPLICABLE_KINDS + models.FIT_ONLY_KINDS

SCALING_CSV_FIELDS = (
    "model",
    "scale",
    "seed",
    "n",
    "m",
    "max_degree",
    "degree_gini",
    "avg_clustering",
    "diameter",
    "diameter_mode",
    "components",
    "communities",
    "nontrivial_communities",
)

BENCH_CSV_FIELDS = ("graph", "algorithm", "ms", "edges_per_second", "seed")


def _dump_json(obj, path: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _parse_initiator(value: str):
    if value in ("preset", "random"):
        return value
    parts = value.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            "initiator must be 'preset', 'random', or four comma-separated reals"
        )
    try:
        return tuple(float(x) for x in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad initiator {value!r}") from None


def _parse_scales(value: str) -> list[int]:
    try:
        scales = [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad scale list {value!r}") from None
    if not scales or any(x < 1 for x in scales):
        raise argparse.ArgumentTypeError("scales must be positive integers")
    return scales


def _load_graph(path: str) -> Graph:
    return read_edge_list(path)


def _fit_params(graph: Graph, args) -> object:
    return models.fit(
        graph,
        args.model,
        scale=args.scale,
        initiator=getattr(args, "initiator", None),
        seed=args.seed,
    )


def _generate_baseline(kind: str, params, seed: int | None) -> Graph:
    if kind == "er":
        return models.gen_er(params, seed)
    if kind == "ba":
        return models.gen_ba(params, seed)
    if kind == "cl":
        return models.gen_cl(params, seed)
    if kind == "esmc":
        return models.gen_esmc(params.degrees, seed)
    if kind == "rmat":
        return models.gen_rmat(params, seed)
    raise ValueError(f"no generator for {kind!r}")


def cmd_replicate(args) -> int:
    graph = _load_graph(args.input)
    out = args.out or f"{Path(args.input).stem}.{args.model}.x{args.scale}.el"

    meta: dict = {
        "schema_version": SCHEMA_VERSION,
        "command": "replicate",
        "input": args.input,
        "model": args.model,
        "scale": args.scale,
        "seed": args.seed,
        "threads": args.threads,
    }
    if args.model == "recon":
        partition = None
        if args.partition:
            assignment = read_partition(args.partition, n=graph.n)
            partition = Partition.from_assignment(graph, assignment)
        result = recon.replicate(
            graph,
            scale=args.scale,
            seed=args.seed,
            partition=partition,
            threads=args.threads,
        )
        replica = result.graph
        meta["recon"] = result.metadata()
    else:
        t0 = time.perf_counter()
        params = _fit_params(graph, args)
        t1 = time.perf_counter()
        replica = _generate_baseline(args.model, params, args.seed)
        t2 = time.perf_counter()
        meta["params"] = asdict(params)
        meta["timings_ms"] = {
            "fit": (t1 - t0) * 1000.0,
            "generate": (t2 - t1) * 1000.0,
        }
    meta["n"] = replica.n
    meta["m"] = replica.m

    write_edge_list(replica, out)
    _dump_json(meta, out + ".json")
    print(f"wrote {out} (n={replica.n}, m={replica.m}) and {out}.json")
    return 0


def cmd_fit(args) -> int:
    graph = _load_graph(args.input)
    if args.model == "recon":
        model = recon.fit_recon(graph, seed=args.seed)
        payload = {
            "k": model.k,
            "n": model.n,
            "community_sizes": list(model.community_sizes),
            "internal_edges": model.total_intra,
            "external_edges": len(model.inter_edges),
        }
    else:
        payload = asdict(_fit_params(graph, args))
    _dump_json(
        {
            "schema_version": SCHEMA_VERSION,
            "command": "fit",
            "input": args.input,
            "model": args.model,
            "scale": args.scale,
            "seed": args.seed,
            "params": payload,
        },
        args.out,
    )
    return 0


def cmd_compare(args) -> int:
    original = _load_graph(args.original)
    replica = _load_graph(args.replica)
    fv_orig = metrics.profile(original, seed=args.seed, diameter_mode=args.diameter_mode)
    fv_repl = metrics.profile(replica, seed=args.seed, diameter_mode=args.diameter_mode)
    cents_orig = metrics.centrality_distributions(
        original, seed=args.seed, threads=args.threads
    )
    cents_repl = metrics.centrality_distributions(
        replica, seed=args.seed, threads=args.threads
    )
    report = metrics.compare(fv_orig, fv_repl, cents_orig, cents_repl)

    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "compare",
        "original": args.original,
        "replica": args.replica,
        "seed": args.seed,
        "report": report.as_dict(),
    }
    _dump_json(payload, args.json)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["feature", "original", "replica", "ratio", "delta"])
            orig_d = fv_orig.as_dict()
            repl_d = fv_repl.as_dict()
            for field in metrics.FeatureVector.NUMERIC_FIELDS:
                ratio = report.ratios.get(field, "")
                delta = report.deltas.get(field, "")
                writer.writerow([field, orig_d[field], repl_d[field], ratio, delta])
    return 0


def cmd_scaling_study(args) -> int:
    graph = _load_graph(args.input)
    rows = []
    for scale in args.scales:
        for rep in range(args.seeds):
            seed = derive_seed(args.seed, scale, rep)
            if args.model == "recon":
                replica = recon.replicate(
                    graph, scale=scale, seed=seed, threads=args.threads
                ).graph
            else:
                ns = argparse.Namespace(
                    model=args.model, scale=scale, seed=seed, initiator=None
                )
                params = _fit_params(graph, ns)
                replica = _generate_baseline(args.model, params, seed)
            fv = metrics.profile(replica, seed=seed, diameter_mode=args.diameter_mode)
            row = {"model": args.model, "scale": scale, "seed": seed}
            row.update(fv.as_dict())
            rows.append(row)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=SCALING_CSV_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {args.out} ({len(rows)} rows)")
    return 0


def cmd_bench(args) -> int:
    rows = []
    for path in args.inputs:
        graph = _load_graph(path)
        results = timed_suite(graph, seed=args.seed, reps=args.reps)
        if not results:
            print(f"note: {path} has no edges, suite skipped", file=sys.stderr)
        for res in results:
            rows.append(
                {
                    "graph": path,
                    "algorithm": res.algorithm,
                    "ms": res.ms,
                    "edges_per_second": res.edges_per_second,
                    "seed": args.seed,
                }
            )
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=BENCH_CSV_FIELDS)
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {args.out} ({len(rows)} rows)")
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=BENCH_CSV_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
    return 0


def cmd_profile(args) -> int:
    graph = _load_graph(args.input)
    fv = metrics.profile(graph, seed=args.seed, diameter_mode=args.diameter_mode)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "profile",
        "input": args.input,
        "seed": args.seed,
        "features": fv.as_dict(),
    }
    _dump_json(payload, args.json)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["feature", "value"])
            for key, value in fv.as_dict().items():
                writer.writerow([key, value])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netreplica",
        description="Fit generative network models and produce scaled replicas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, seed=True):
        if seed:
            p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("replicate", help="fit a model and write a replica")
    p.add_argument("input")
    p.add_argument("--model", choices=REPLICATE_MODELS, default="recon")
    p.add_argument("--scale", type=int, default=1)
    p.add_argument("--partition", help="partition file (recon only)")
    p.add_argument("--initiator", type=_parse_initiator, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out")
    add_common(p)
    p.set_defaults(func=cmd_replicate)

    p = sub.add_parser("fit", help="print fitted model parameters")
    p.add_argument("input")
    p.add_argument("--model", choices=FIT_MODELS, required=True)
    p.add_argument("--scale", type=int, default=1)
    p.add_argument("--initiator", type=_parse_initiator, default=None)
    p.add_argument("--out")
    add_common(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("compare", help="compare an original with a replica")
    p.add_argument("original")
    p.add_argument("replica")
    p.add_argument("--diameter-mode", choices=("exact", "effective90"), default="exact")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", help="write the JSON report here instead of stdout")
    p.add_argument("--csv", help="also write a per-feature CSV here")
    add_common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("scaling-study", help="profile replicas across scales")
    p.add_argument("input")
    p.add_argument("--model", choices=REPLICATE_MODELS, default="recon")
    p.add_argument("--scales", type=_parse_scales, required=True)
    p.add_argument("--seeds", type=int, default=1, help="replicas per scale")
    p.add_argument("--diameter-mode", choices=("exact", "effective90"), default="exact")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", required=True)
    add_common(p)
    p.set_defaults(func=cmd_scaling_study)

    p = sub.add_parser("bench", help="time the algorithm suite on graphs")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--out")
    add_common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("profile", help="compute a graph's feature vector")
    p.add_argument("input")
    p.add_argument("--diameter-mode", choices=("exact", "effective90"), default="exact")
    p.add_argument("--json", help="write JSON here instead of stdout")
    p.add_argument("--csv", help="also write a feature,value CSV here")
    add_common(p)
    p.set_defaults(func=cmd_profile)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "partition", None) and args.model != "recon":
        parser.error("--partition applies to the recon model only")
    try:
        return args.func(args)
    except EdgeListParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
