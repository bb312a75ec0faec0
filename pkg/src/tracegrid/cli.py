"""Command-line front door: gen, render, stats, serve."""

from __future__ import annotations

import argparse
import sys

from .analytics import EventKind, SortKey, count_by, thread_profile, top_k
from .grid import Viewport, build_cells
from .model import EventLog, MalformedRow, emit_csv, parse_csv
from .svg import render_svg
from .workload import InvalidConfig, generate, parse_config

EXIT_USAGE = 2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def _load_log(path: str) -> EventLog:
    name = "<stdin>" if path == "-" else path
    return parse_csv(_read_text(path), source_name=name)


def _sort_key(name: str) -> SortKey:
    try:
        return SortKey(name)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"invalid sort key {name!r} (expected one of: "
            + ", ".join(k.value for k in SortKey) + ")"
        )


def cmd_gen(args) -> int:
    try:
        config = parse_config(_read_text(args.config))
        log = generate(config)
    except InvalidConfig as e:
        print(f"error: invalid config: {e}", file=sys.stderr)
        return EXIT_USAGE
    _write_text(args.out, emit_csv(log))
    return 0


def cmd_render(args) -> int:
    try:
        log = _load_log(args.log)
    except MalformedRow as e:
        print(f"error: {args.log}: {e}", file=sys.stderr)
        return EXIT_USAGE
    layout, cells = build_cells(log, args.sort, Viewport(args.width, args.height))
    _write_text(args.out, render_svg(layout, cells))
    return 0


def cmd_stats(args) -> int:
    try:
        log = _load_log(args.log)
    except MalformedRow as e:
        print(f"error: {args.log}: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.threads:
        rows = thread_profile(log).rows
        if rows:
            width = max(len(r[0]) for r in rows)
            print(f"{'thread':<{width}}  {'created':>8}  {'destroyed':>9}")
            for thread, created, destroyed in rows:
                print(f"{thread:<{width}}  {created:>8}  {destroyed:>9}")
        return 0
    if args.by is SortKey.NONE:
        print("error: --by must name an attribute (package, class, type, thread, method)", file=sys.stderr)
        return EXIT_USAGE
    table = count_by(log, args.by, EventKind.CREATED)
    ranked = top_k(table, args.top)
    if ranked:
        width = max(len(v) for v, _ in ranked)
        print(f"{args.by.value:<{width}}  {'created':>8}")
        for value, count in ranked:
            print(f"{value:<{width}}  {count:>8}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracegrid",
        description="Object-lifecycle trace analytics and grid visualization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a synthetic CSV log from a config file")
    p_gen.add_argument("config", help="key=value config file ('-' for stdin)")
    p_gen.add_argument("out", help="output CSV path ('-' for stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_render = sub.add_parser("render", help="render a log as an SVG grid")
    p_render.add_argument("log", help="CSV log path ('-' for stdin)")
    p_render.add_argument("out", help="output SVG path ('-' for stdout)")
    p_render.add_argument("--sort", type=_sort_key, default=SortKey.NONE)
    p_render.add_argument("--width", type=int, default=1024)
    p_render.add_argument("--height", type=int, default=768)
    p_render.set_defaults(func=cmd_render)

    p_stats = sub.add_parser("stats", help="print count tables for a log")
    p_stats.add_argument("log", help="CSV log path ('-' for stdin)")
    p_stats.add_argument("--by", type=_sort_key, default=SortKey.CLASS)
    p_stats.add_argument("--top", type=int, default=10)
    p_stats.add_argument("--threads", action="store_true", help="print the per-thread profile instead")
    p_stats.set_defaults(func=cmd_stats)

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=7070)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors already; normalize other codes
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
