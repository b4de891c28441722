"""Command-line front end.

Commands: info, pair, group, lc, det, walks, oracle.  Results go to stdout;
progress, warnings, and timings for the records format go to stderr.  The
records format is line-oriented ``record=... key=value ...`` and is
byte-identical across worker counts for the same inputs and flags.

Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
violation (a certificate that fails re-verification is never reported as
success).
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass

from . import __version__
from .formats import (
    CatalogError,
    CatalogRecord,
    DatasetError,
    Graph6Error,
    catalog_read,
    catalog_write,
    make_catalog_record,
    read_dataset,
    write_graph6,
)
from .graph import Graph, degree_sequence, local_complement, srg_parameters
from .invariants import default_m
from .isotest import (
    DEFAULT_ORACLE_CAP,
    CertificateError,
    OracleLimitError,
    _map_pool,
    brute_force_isomorphic,
    distinguish_pair,
    partition_group,
)
from .linalg import adjacency_matrix, determinant, mat_mul


class _UsageError(Exception):
    """Bad invocation or bad input; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; our contract reserves 2
    # for internal invariant violations, so route usage errors to exit 1.
    def error(self, message: str) -> None:
        raise _UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    format: str = "text"
    workers: int = 1
    oracle: bool = False
    oracle_cap: int = DEFAULT_ORACLE_CAP
    strict: bool = False
    catalog: str | None = None

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise _UsageError(f"--workers must be >= 1, got {self.workers}")
        if self.oracle_cap < 1:
            raise _UsageError(f"--oracle-cap must be >= 1, got {self.oracle_cap}")
        if self.format not in ("text", "records"):
            raise _UsageError(f"unknown format {self.format!r}")


def _config(args: argparse.Namespace) -> RunConfig:
    workers = getattr(args, "workers", None)
    oracle_cap = getattr(args, "oracle_cap", None)
    return RunConfig(
        format=getattr(args, "format", "text"),
        workers=_default_workers() if workers is None else workers,
        oracle=getattr(args, "oracle", False),
        oracle_cap=DEFAULT_ORACLE_CAP if oracle_cap is None else oracle_cap,
        strict=getattr(args, "strict", False),
        catalog=getattr(args, "catalog", None),
    )


def _default_workers() -> int:
    return os.cpu_count() or 1


def _read_graphs(paths, strict: bool) -> tuple[list[tuple[str, Graph]], bool]:
    entries: list[tuple[str, Graph]] = []
    failed = False
    for path in paths:
        part, failures = read_dataset(path, strict=strict)
        for failure in failures:
            print(f"parse error: {failure}", file=sys.stderr)
            failed = True
        entries.extend(part)
    return entries, failed


def _single_graph(path: str, strict: bool) -> Graph:
    entries, failures = read_dataset(path, strict=strict)
    if failures:
        raise _UsageError(f"{path}: {failures[0].message} (line {failures[0].lineno})")
    if len(entries) != 1:
        raise _UsageError(f"{path}: expected exactly one graph, found {len(entries)}")
    return entries[0][1]


def _degree_text(G: Graph) -> str:
    # run-length form, ascending: K4 minus an edge -> "2^2,3^2"
    seq = degree_sequence(G)
    runs = []
    i = 0
    while i < len(seq):
        j = i
        while j < len(seq) and seq[j] == seq[i]:
            j += 1
        runs.append(f"{seq[i]}^{j - i}")
        i = j
    return ",".join(runs)


def _srg_text(G: Graph) -> str:
    params = srg_parameters(G)
    if params is None:
        return "not SRG"
    return f"SRG({params.n},{params.d},{params.alpha},{params.beta})"


def _info_worker(G: Graph) -> tuple[int, int]:
    return determinant(adjacency_matrix(G)), default_m(G)


def cmd_info(args: argparse.Namespace) -> int:
    cfg = _config(args)
    entries, failed = _read_graphs(args.files, cfg.strict)
    numeric = _map_pool(_info_worker, [G for _, G in entries], cfg.workers)
    for (record_id, G), (det, m) in zip(entries, numeric):
        degrees = _degree_text(G)
        params = srg_parameters(G)
        if cfg.format == "text":
            print(
                f"{record_id}: n={G.n}, edges={G.edge_count()}, degrees={degrees}, "
                f"{_srg_text(G)}, det={det}, m={m}"
            )
        else:
            srg_field = "-" if params is None else f"{params.n},{params.d},{params.alpha},{params.beta}"
            print(
                f"record=info id={record_id} n={G.n} edges={G.edge_count()} "
                f"degrees={degrees} srg={srg_field} det={det} m={m}"
            )
    return 1 if failed else 0


def cmd_pair(args: argparse.Namespace) -> int:
    cfg = _config(args)
    G = _single_graph(args.file_a, cfg.strict)
    H = _single_graph(args.file_b, cfg.strict)
    verdict = distinguish_pair(G, H)

    if verdict.distinguished:
        if cfg.format == "text":
            print(f"Distinguished: {verdict.stage}")
        else:
            print(f"record=pair distinguished=true stage={verdict.stage}")
        return 0

    oracle_result = None  # None = not run, else (isomorphic, certificate|None)
    if cfg.oracle:
        if G.n <= cfg.oracle_cap:
            certificate = brute_force_isomorphic(G, H, limit=cfg.oracle_cap)
            oracle_result = (certificate is not None, certificate)
        else:
            print(f"oracle skipped: n={G.n} exceeds cap {cfg.oracle_cap}", file=sys.stderr)

    if cfg.format == "text":
        if oracle_result is None:
            print("NotDistinguished")
        elif oracle_result[0]:
            print("NotDistinguished; oracle: isomorphic, certificate printed")
            print("certificate: " + _certificate_text(oracle_result[1]))
        else:
            print("NotDistinguished; oracle: non-isomorphic")
    else:
        line = "record=pair distinguished=false"
        if oracle_result is not None:
            isomorphic, certificate = oracle_result
            line += f" oracle={'isomorphic' if isomorphic else 'non-isomorphic'}"
            if certificate is not None:
                line += " certificate=" + ",".join(str(w) for w in certificate)
        print(line)
    return 0


def _certificate_text(certificate: tuple[int, ...]) -> str:
    return " ".join(f"{u}->{w}" for u, w in enumerate(certificate))


def _record_worker(item: tuple[str, Graph]) -> CatalogRecord:
    return make_catalog_record(*item)


def cmd_group(args: argparse.Namespace) -> int:
    cfg = _config(args)
    entries, failed = _read_graphs(args.files, cfg.strict)
    if not entries:
        raise _UsageError("no graphs to partition")
    ids = [record_id for record_id, _ in entries]
    if len(set(ids)) != len(ids):
        raise _UsageError("duplicate graph ids across inputs")
    graphs = [G for _, G in entries]

    cache: dict[str, tuple[bytes | None, bytes | None]] = {}
    if cfg.catalog:
        known: dict[str, CatalogRecord] = {}
        if os.path.exists(cfg.catalog):
            for rec in catalog_read(cfg.catalog, with_blobs=True):
                known[rec.id] = rec
            print(f"catalog: {len(known)} cached records", file=sys.stderr)
        missing = [(record_id, G) for record_id, G in entries if record_id not in known]
        if missing:
            print(f"catalog: computing {len(missing)} new records", file=sys.stderr)
            for rec in _map_pool(_record_worker, missing, cfg.workers):
                known[rec.id] = rec
        catalog_write([known[k] for k in sorted(known)], cfg.catalog)
        for record_id in ids:
            rec = known[record_id]
            cache[record_id] = (rec.lc_profile_encoding, rec.lc_walk_encoding)

    t0 = time.perf_counter()
    report = partition_group(graphs, ids=ids, workers=cfg.workers, invariant_cache=cache)
    elapsed = time.perf_counter() - t0

    stats = report.stats()
    if cfg.format == "text":
        print(f"graphs: {stats['graphs']}")
        print(f"coarse: {stats['coarse_classes']} classes ({_hist_text(report.coarse_size_counts())})")
        final_line = f"final: {stats['final_classes']} classes ({_hist_text(report.final_size_counts())})"
        if report.all_singletons():
            final_line += "; all singletons"
        print(final_line)
        for members in report.multi_member_final():
            print("unresolved: " + ", ".join(members))
        print(f"timing: {_timing_text(report.timings)}, total {elapsed:.3f}s")
    else:
        print(
            f"record=group graphs={stats['graphs']} "
            f"coarse_classes={stats['coarse_classes']} "
            f"final_classes={stats['final_classes']} "
            f"all_singletons={'true' if report.all_singletons() else 'false'}"
        )
        for size in sorted(report.coarse_size_counts()):
            print(f"record=coarse-hist size={size} count={report.coarse_size_counts()[size]}")
        for size in sorted(report.final_size_counts()):
            print(f"record=final-hist size={size} count={report.final_size_counts()[size]}")
        for members in report.multi_member_final():
            print(f"record=class kind=final size={len(members)} members=" + ",".join(members))
        print(f"timing: {_timing_text(report.timings)}, total {elapsed:.3f}s", file=sys.stderr)
    return 1 if failed else 0


def _hist_text(counts: dict[int, int]) -> str:
    return ", ".join(f"{counts[size]} x{size}" for size in sorted(counts))


def _timing_text(timings) -> str:
    return ", ".join(f"{name} {seconds:.3f}s" for name, seconds in timings)


def cmd_lc(args: argparse.Namespace) -> int:
    cfg = _config(args)
    entries, failed = _read_graphs(args.files, cfg.strict)
    u = args.vertex
    for record_id, G in entries:
        if not 0 <= u < G.n:
            raise _UsageError(f"{record_id}: vertex {u} out of range for n={G.n}")
        g6 = write_graph6(local_complement(G, u))
        if cfg.format == "text":
            print(f"{record_id}: {g6}")
        else:
            print(f"record=lc id={record_id} u={u} g6={g6}")
    return 1 if failed else 0


def cmd_det(args: argparse.Namespace) -> int:
    cfg = _config(args)
    entries, failed = _read_graphs(args.files, cfg.strict)
    for record_id, G in entries:
        det = determinant(adjacency_matrix(G))
        if cfg.format == "text":
            print(f"{record_id}: det={det}")
        else:
            print(f"record=det id={record_id} det={det}")
    return 1 if failed else 0


def cmd_walks(args: argparse.Namespace) -> int:
    cfg = _config(args)
    entries, failed = _read_graphs(args.files, cfg.strict)
    u, v = args.u, args.v
    for record_id, G in entries:
        if not (0 <= u < G.n and 0 <= v < G.n):
            raise _UsageError(f"{record_id}: pair ({u},{v}) out of range for n={G.n}")
        m = default_m(G)
        A = adjacency_matrix(G)
        counts = []
        P = A
        for _ in range(m):
            counts.append(P.rows[u][v])
            P = mat_mul(P, A)
        if cfg.format == "text":
            print(f"{record_id}: m={m}, s({u},{v})=({', '.join(str(c) for c in counts)})")
        else:
            print(
                f"record=walks id={record_id} u={u} v={v} m={m} "
                f"s={','.join(str(c) for c in counts)}"
            )
    return 1 if failed else 0


def cmd_oracle(args: argparse.Namespace) -> int:
    cfg = _config(args)
    G = _single_graph(args.file_a, cfg.strict)
    H = _single_graph(args.file_b, cfg.strict)
    try:
        certificate = brute_force_isomorphic(G, H, limit=cfg.oracle_cap)
    except OracleLimitError as exc:
        raise _UsageError(f"{exc}; raise --oracle-cap to override") from exc
    if cfg.format == "text":
        if certificate is None:
            print("non-isomorphic")
        else:
            print("isomorphic")
            print("certificate: " + _certificate_text(certificate))
    else:
        line = f"record=oracle isomorphic={'true' if certificate is not None else 'false'}"
        if certificate is not None:
            line += " certificate=" + ",".join(str(w) for w in certificate)
        print(line)
    return 0


def _add_common(p: argparse.ArgumentParser, workers: bool = False) -> None:
    p.add_argument("--format", choices=("text", "records"), default="text",
                   help="output style (default: text)")
    p.add_argument("--strict", action="store_true",
                   help="abort on the first dataset parse error")
    if workers:
        p.add_argument("--workers", type=int, default=None, metavar="N",
                       help="worker processes (default: CPU count)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="walkgi",
                     description="Walk-count and local-complement graph invariants.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("info", help="per-graph summary: n, edges, degrees, SRG, det, m")
    p.add_argument("files", nargs="+", metavar="FILE")
    _add_common(p, workers=True)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("pair", help="staged distinguishing of two graphs")
    p.add_argument("file_a", metavar="FILE_A")
    p.add_argument("file_b", metavar="FILE_B")
    p.add_argument("--oracle", action="store_true",
                   help="on NotDistinguished, run the brute-force oracle (n <= cap)")
    p.add_argument("--oracle-cap", type=int, default=None, metavar="N",
                   help=f"oracle vertex cap (default: {DEFAULT_ORACLE_CAP})")
    _add_common(p)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("group", help="partition a dataset into invariant classes")
    p.add_argument("files", nargs="+", metavar="FILE")
    p.add_argument("--catalog", metavar="PATH",
                   help="reuse and update a catalog of per-graph invariants")
    _add_common(p, workers=True)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("lc", help="print local complements at a vertex as graph6")
    p.add_argument("files", nargs="+", metavar="FILE")
    p.add_argument("vertex", type=int, metavar="VERTEX")
    _add_common(p)
    p.set_defaults(func=cmd_lc)

    p = sub.add_parser("det", help="exact adjacency determinant per graph")
    p.add_argument("files", nargs="+", metavar="FILE")
    _add_common(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("walks", help="walk-count tuple s(u,v) for lengths 1..m")
    p.add_argument("files", nargs="+", metavar="FILE")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("oracle", help="brute-force isomorphism test of two graphs")
    p.add_argument("file_a", metavar="FILE_A")
    p.add_argument("file_b", metavar="FILE_B")
    p.add_argument("--oracle-cap", type=int, default=None, metavar="N",
                   help=f"oracle vertex cap (default: {DEFAULT_ORACLE_CAP})")
    _add_common(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (Graph6Error, DatasetError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CertificateError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
