"""Command line front end.

Eight verbs: map (3-permutations to configurations), invert
(configurations back to 3-permutations), verify (exhaustive
correspondence check at one size), enumerate (the class or the bases),
orbit (move-graph exploration), sample (an approximately uniform
basis), render (ASCII or SVG pictures) and serve (the HTTP session
service).

Data comes from stdin or a file argument, one item per line in the text
forms, or as a JSON document (auto-detected).  Exit status is 0 on
success, 1 for domain failures (bad input values, a failed
verification), and 2 for command line misuse.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import service as service_module
from .bijection import configuration_to_perm, perm_to_configuration
from .enumeration import (
    count_avoiders,
    count_bases,
    enumerate_avoiders,
    enumerate_bases,
    verify_bijection,
)
from .errors import DomainError, ParseError
from .grid import (
    Configuration,
    closure,
    configuration_from_json_dict,
    configuration_to_json_dict,
    format_configuration,
    line_cells,
    parse_configuration,
    render_ascii,
    render_svg,
)
from .perms import ThreePermutation, parse_three_permutation
from .solitaire import orbit, sample_basis


def _read_input(args) -> str:
    if getattr(args, "input", None) and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _looks_like_json(text: str) -> bool:
    stripped = text.lstrip()
    return stripped.startswith("{") or stripped.startswith("[")


def _parse_perms(text: str) -> list[ThreePermutation]:
    if _looks_like_json(text):
        data = json.loads(text)
        items = data if isinstance(data, list) else [data]
        return [ThreePermutation.from_json_dict(d) for d in items]
    perms = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            perms.append(parse_three_permutation(line, lineno))
    return perms


def _parse_configs(text: str) -> list[tuple[int, Configuration]]:
    if _looks_like_json(text):
        data = json.loads(text)
        items = data if isinstance(data, list) else [data]
        return [configuration_from_json_dict(d) for d in items]
    configs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            configs.append(parse_configuration(line, lineno))
    return configs


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _cmd_map(args) -> int:
    perms = _parse_perms(_read_input(args))
    if not perms:
        raise DomainError("no 3-permutations in the input")
    results = [(p.n, perm_to_configuration(p)) for p in perms]
    if args.format == "json":
        docs = [configuration_to_json_dict(conf, n) for n, conf in results]
        _emit_json(docs if len(docs) > 1 else docs[0])
    else:
        for n, conf in results:
            print(format_configuration(conf, n))
    return 0


def _cmd_invert(args) -> int:
    configs = _parse_configs(_read_input(args))
    if not configs:
        raise DomainError("no configurations in the input")
    perms = [configuration_to_perm(conf.cells, n) for n, conf in configs]
    if args.format == "json":
        docs = [p.to_json_dict() for p in perms]
        _emit_json(docs if len(docs) > 1 else docs[0])
    else:
        for p in perms:
            print(p.to_text())
    return 0


def _cmd_verify(args) -> int:
    report = verify_bijection(args.n, force=args.force)
    if args.format == "json":
        _emit_json(report)
    else:
        for key in (
            "n",
            "class_size",
            "basis_count",
            "injective",
            "image_equals_bases",
            "round_trip",
            "images_sparse",
            "bijective",
        ):
            print(f"{key}: {report[key]}")
    return 0 if report["bijective"] else 1


def _cmd_enumerate(args) -> int:
    if args.count:
        if args.kind == "bases":
            total = count_bases(args.n, force=args.force, jobs=args.jobs)
        else:
            patterns = "class" if args.kind == "avoiders" else "12_12"
            total = count_avoiders(
                args.n, patterns=patterns, force=args.force, jobs=args.jobs
            )
        if args.format == "json":
            _emit_json({"n": args.n, "kind": args.kind, "count": total})
        else:
            print(total)
        return 0
    if args.kind == "bases":
        items = enumerate_bases(args.n, force=args.force)
        if args.format == "json":
            _emit_json(
                [
                    {"n": args.n, "cells": [list(c) for c in sorted(cells)]}
                    for cells in items
                ]
            )
        else:
            for cells in items:
                print(format_configuration(cells, args.n))
    else:
        patterns = "class" if args.kind == "avoiders" else "12_12"
        perms = enumerate_avoiders(args.n, patterns=patterns, force=args.force)
        if args.format == "json":
            _emit_json([p.to_json_dict() for p in perms])
        else:
            for p in perms:
                print(p.to_text())
    return 0


def _cmd_orbit(args) -> int:
    if args.n is not None:
        start = line_cells(args.n)
        n = args.n
    else:
        text = _read_input(args)
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise DomainError("orbit needs --n or a start state on input")
        line = lines[0]
        try:
            start = parse_three_permutation(line)
            n = start.n
        except ParseError:
            n, conf = parse_configuration(line)
            start = conf if args.labeled else conf.cells
    report = orbit(
        start,
        n=n,
        within_triangle=not args.raw,
        max_states=args.max_states,
        keep_members=False,
    )
    doc = report.to_json_dict()
    if args.format == "json":
        _emit_json(doc)
    else:
        print(f"states: {doc['states']}")
        print(f"edges: {doc['edges']}")
        print(f"diameter: {doc['diameter']}")
        histogram = " ".join(
            f"{d}:{c}" for d, c in sorted(doc["degree_histogram"].items(), key=lambda kv: int(kv[0]))
        )
        print(f"degree_histogram: {histogram}")
        if doc["truncated"]:
            print("truncated: true")
    return 0


def _cmd_sample(args) -> int:
    cells = sample_basis(args.n, steps=args.steps, seed=args.seed)
    if args.format == "json":
        _emit_json({"n": args.n, "cells": [list(c) for c in sorted(cells)]})
    else:
        print(format_configuration(cells, args.n))
    return 0


def _cmd_render(args) -> int:
    text = _read_input(args)
    items: list[tuple[int, Configuration]] = []
    if _looks_like_json(text):
        items = _parse_configs(text)
    else:
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                p = parse_three_permutation(line, lineno)
                items.append((p.n, perm_to_configuration(p)))
            except ParseError:
                items.append(parse_configuration(line, lineno))
    if not items:
        raise DomainError("nothing to render")
    out = []
    for n, conf in items:
        if args.format == "svg":
            out.append(render_svg(conf, n, show_filling=args.filling))
        elif args.format == "json":
            doc = configuration_to_json_dict(conf, n)
            doc["closure"] = [list(c) for c in sorted(closure(conf.cells))]
            out.append(doc)
        else:
            out.append(render_ascii(conf, n, show_filling=args.filling))
    if args.format == "json":
        _emit_json(out if len(out) > 1 else out[0])
    else:
        print("\n\n".join(out))
    return 0


def _cmd_serve(args) -> int:
    service_module.run(port=args.port, host=args.host, ui_dir=args.ui_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisol",
        description="triangle bases, avoiding 3-permutations, and the game between them",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("map", help="3-permutations to labeled configurations")
    p.add_argument("input", nargs="?", help="file of inputs, defaults to stdin")
    add_format(p)
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("invert", help="basis configurations to 3-permutations")
    p.add_argument("input", nargs="?")
    add_format(p)
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser("verify", help="exhaustive correspondence check at one size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="list or count a whole size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--kind", choices=("bases", "avoiders", "12_12"), default="bases"
    )
    p.add_argument("--count", action="store_true", help="print only the count")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("orbit", help="explore the move graph from a state")
    p.add_argument("input", nargs="?")
    p.add_argument("--n", type=int, help="start from the bottom row of T_n")
    p.add_argument("--raw", action="store_true", help="drop the staircase wall")
    p.add_argument("--labeled", action="store_true", help="track labels on a configuration start")
    p.add_argument("--max-states", type=int, default=10_000_000)
    add_format(p)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("sample", help="an approximately uniform basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--steps", type=int)
    p.add_argument("--seed", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("render", help="picture a configuration or 3-permutation")
    p.add_argument("input", nargs="?")
    p.add_argument("--filling", action="store_true", help="shade deduced cells")
    add_format(p, choices=("text", "json", "svg"))
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument(
        "--port",
        type=int,
        default=None,
        help=f"default from ${service_module.PORT_ENV_VAR} or {service_module.DEFAULT_PORT}",
    )
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", help="also serve a static app from this directory")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: input is not valid JSON: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
