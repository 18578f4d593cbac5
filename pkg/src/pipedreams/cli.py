"""Command line interface.

Subcommands operate on permutations given as comma or space separated
one-line notation, and on diagrams given as JSON files ('-' reads stdin).
Output is JSON by default; --pretty switches to plain-text drawings.  Exit
codes: 0 success, 1 a verification reported a failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bijection import phi, phi_inverse
from .bumpless import BumplessPipeDream, bpd_insert, bpd_pop, enumerate_bpds
from .errors import InvalidDiagramError, InvalidSequenceError, MoveError
from .monk import bpd_m_move, bpd_x_insert, pd_m_move, pd_x_insert
from .perm import Permutation
from .pipedream import PipeDream, enumerate_pipe_dreams
from .poly import schubert_polynomial
from .render import render
from .verify import CHECK_GROUPS, run_checks

_DEFAULT_MAX_GROUP = 4


def _max_group() -> int:
    raw = os.environ.get("SCHUBERT_MAX_N", str(_DEFAULT_MAX_GROUP))
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"SCHUBERT_MAX_N is not an integer: {raw!r}") from exc


def _read_json(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _parse_diagram(data: dict):
    model = data.get("model")
    if model == "pd":
        return PipeDream.from_json(data)
    if model == "bpd":
        return BumplessPipeDream.from_json(data)
    raise ValueError(f"unknown diagram model {model!r}")


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _diagram_sort_key(d):
    return json.dumps(d.to_json(), sort_keys=True)


def _cmd_schubert(args) -> int:
    pi = Permutation.parse(args.perm)
    poly = schubert_polynomial(pi)
    if args.pretty:
        print(str(poly))
    else:
        _emit(
            {
                "perm": str(pi),
                "method": args.method,
                "polynomial": poly.to_json(),
                "display": str(poly),
            }
        )
    return 0


def _cmd_enum(args) -> int:
    pi = Permutation.parse(args.perm)
    if args.model == "pd":
        diagrams = sorted(enumerate_pipe_dreams(pi), key=_diagram_sort_key)
    else:
        diagrams = sorted(
            (d.trim() for d in enumerate_bpds(pi)), key=_diagram_sort_key
        )
    if args.pretty:
        print("\n\n".join(render(d, pretty=True) for d in diagrams))
    else:
        _emit(
            {
                "model": args.model,
                "perm": str(pi),
                "count": len(diagrams),
                "diagrams": [d.to_json() for d in diagrams],
            }
        )
    return 0


def _cmd_phi(args) -> int:
    data = _read_json(args.file)
    diagram = _parse_diagram(data)
    if args.inverse:
        if not isinstance(diagram, PipeDream):
            raise ValueError("the inverse map expects a pipe dream")
        out = phi_inverse(diagram)
        if args.pretty:
            print(render(out, pretty=True))
        else:
            _emit(out.to_json())
    else:
        if not isinstance(diagram, BumplessPipeDream):
            raise ValueError("the forward map expects a bumpless diagram")
        res = phi(diagram)
        pd = res.pipe_dream()
        if args.pretty:
            print(f"a: {','.join(map(str, res.sequence.a))}")
            print(f"r: {','.join(map(str, res.sequence.r))}")
            print(render(pd, pretty=True))
        else:
            _emit(
                {
                    "sequence": res.sequence.to_json(),
                    "pipe_dream": pd.to_json(),
                }
            )
    return 0


def _cmd_pop(args) -> int:
    diagram = _parse_diagram(_read_json(args.file))
    if isinstance(diagram, PipeDream):
        (a, r), rest = diagram.pop()
        payload = {"a": a, "r": r, "result": rest.to_json()}
    else:
        res = bpd_pop(diagram)
        payload = {
            "a": res.a,
            "r": res.r,
            "result": res.result.to_json(),
            "footprints": [list(p) for p in res.footprints],
        }
    if args.pretty:
        print(f"a={payload['a']} r={payload['r']}")
        print(render(_parse_diagram(payload["result"]), pretty=True))
    else:
        _emit(payload)
    return 0


def _cmd_insert(args) -> int:
    diagram = _parse_diagram(_read_json(args.file))
    if not isinstance(diagram, BumplessPipeDream):
        raise ValueError("insertion applies to bumpless diagrams")
    out = bpd_insert(diagram, args.a, args.r)
    if args.pretty:
        print(render(out, pretty=True) if out is not None else "no preimage")
    else:
        _emit({"result": out.to_json() if out is not None else None})
    return 0


def _cmd_monk(args) -> int:
    diagram = _parse_diagram(_read_json(args.file))
    if args.variant == "x":
        if args.alpha is None:
            raise ValueError("the x move needs --alpha")
        if isinstance(diagram, PipeDream):
            out, tr = pd_x_insert(diagram, args.alpha)
        else:
            out, tr = bpd_x_insert(diagram, args.alpha)
    else:
        if args.s is None or args.beta is None:
            raise ValueError("the m move needs --s and --beta")
        if isinstance(diagram, PipeDream):
            out, tr = pd_m_move(diagram, args.s, args.beta)
        else:
            out, tr = bpd_m_move(diagram, args.s, args.beta)
    if args.pretty:
        print(render(out, pretty=True))
        print(f"l={tr.result_l}")
    else:
        _emit(
            {
                "result": out.to_json(),
                "l": tr.result_l,
                "steps": [
                    [kind, [list(c) for c in coords]]
                    for kind, coords in tr.steps
                ],
                "footprints": [list(p) for p in tr.footprints],
                "complete_footprints": (
                    [list(p) for p in tr.complete_footprints]
                    if tr.complete_footprints is not None
                    else None
                ),
            }
        )
    return 0


def _cmd_verify(args) -> int:
    cap = _max_group()
    if args.group > cap:
        raise ValueError(
            f"group size {args.group} exceeds the cap {cap}; "
            "raise SCHUBERT_MAX_N to allow it"
        )
    if args.group < 1:
        raise ValueError("group size must be positive")
    results = run_checks(args.group, args.check, seed=args.seed)
    payload = {
        "group": args.group,
        "check": args.check,
        "results": {
            name: {"passed": ok, "detail": detail}
            for name, (ok, detail) in results.items()
        },
    }
    _emit(payload)
    return 0 if all(ok for ok, _ in results.values()) else 1


def _cmd_render(args) -> int:
    diagram = _parse_diagram(_read_json(args.file))
    print(render(diagram, pretty=args.pretty))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pipedreams",
        description="Schubert polynomials and pipe dream combinatorics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schubert", help="compute a Schubert polynomial")
    p.add_argument("perm")
    p.add_argument("--method", choices=["dd"], default="dd")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_schubert)

    p = sub.add_parser("enum", help="enumerate the diagrams of a permutation")
    p.add_argument("perm")
    p.add_argument("--model", choices=["pd", "bpd"], required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("phi", help="map between the two diagram models")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("pop", help="remove the first crossing or blank")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_pop)

    p = sub.add_parser("insert", help="invert a pop step on a bumpless diagram")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_insert)

    p = sub.add_parser("monk", help="apply an insertion move")
    p.add_argument("variant", choices=["x", "m"])
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--alpha", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_monk)

    p = sub.add_parser("verify", help="run exhaustive checks over S_n")
    p.add_argument("--group", type=int, required=True)
    p.add_argument(
        "--check",
        choices=sorted(CHECK_GROUPS) + ["all"],
        default="all",
    )
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="draw a diagram as text")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (
        ValueError,
        KeyError,
        TypeError,
        OSError,
        json.JSONDecodeError,
        InvalidDiagramError,
        InvalidSequenceError,
        MoveError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
