"""Command-line interface: quiver, fan, rep and check subcommands.

All JSON output follows the "mckay-moduli/1" schema: rationals are
"numerator/denominator" strings, matrices are row-major integer arrays, and
every list is canonically ordered so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from fractions import Fraction

from .checks import run_all
from .errors import (
    BadShape,
    BadTheta,
    GroupSpecError,
    ModuliError,
    NegativeW,
    NonGenerating,
    NotInM,
    OutsideSupport,
    TrivialGroup,
)
from .groups import build_group, build_quiver, incidence_matrices
from .moduli import (
    distinguished_rep,
    ghilb_parameter,
    moduli_fan,
    stability_parameter,
    theta_polyhedron,
)

_INT = re.compile(r"[+-]?\d+")

SCHEMA = "mckay-moduli/1"


def _int_tokens(text: str, offset: int, sep: str):
    items = []
    pos = offset
    for tok in text.split(sep):
        stripped = tok.strip()
        inner = pos + (len(tok) - len(tok.lstrip()))
        if not stripped or not _INT.fullmatch(stripped):
            raise GroupSpecError(f"expected an integer, got {stripped!r}", inner)
        items.append(int(stripped))
        pos += len(tok) + len(sep)
    return items


def parse_group_spec(spec: str):
    """Parse a group spec string into (orders, weight rows).

    Two grammars are accepted: the cyclic shorthand "1/r(a1,...,an)" and the
    general product form "r1x...xrk:a11,...,a1n;...;ak1,...,akn".  Errors
    carry the character position of the offending token.
    """
    s = spec.strip()
    base = len(spec) - len(spec.lstrip())
    if not s:
        raise GroupSpecError("empty group spec", 0)
    if s.startswith("1/"):
        i = 2
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        if j == i:
            raise GroupSpecError("expected the cyclic order after '1/'", base + i)
        r = int(s[i:j])
        if r < 1:
            raise GroupSpecError("cyclic order must be positive", base + i)
        if j >= len(s) or s[j] != "(":
            raise GroupSpecError("expected '(' after the cyclic order", base + j)
        if not s.endswith(")"):
            raise GroupSpecError("expected closing ')'", base + len(s) - 1)
        row = _int_tokens(s[j + 1 : -1], base + j + 1, ",")
        return (r,), (tuple(row),)
    if ":" in s:
        head, _, tail = s.partition(":")
        orders = []
        pos = base
        for tok in head.split("x"):
            stripped = tok.strip()
            inner = pos + (len(tok) - len(tok.lstrip()))
            if not stripped or not stripped.isdigit():
                raise GroupSpecError(
                    f"expected a positive cycle order, got {stripped!r}", inner
                )
            if int(stripped) < 1:
                raise GroupSpecError("cycle orders must be positive", inner)
            orders.append(int(stripped))
            pos += len(tok) + 1
        rows = []
        pos = base + len(head) + 1
        row_texts = tail.split(";")
        if len(row_texts) != len(orders):
            raise GroupSpecError(
                f"expected {len(orders)} weight rows, got {len(row_texts)}",
                pos,
            )
        for rt in row_texts:
            rows.append(tuple(_int_tokens(rt, pos, ",")))
            pos += len(rt) + 1
        return tuple(orders), tuple(rows)
    raise GroupSpecError(
        "unrecognized group spec; use '1/r(a1,...,an)' or 'r1x...xrk:row1;...;rowk'",
        base,
    )


def _rational_csv(text: str):
    out = []
    for tok in text.split(","):
        t = tok.strip()
        try:
            out.append(Fraction(t))
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"not a rational number: {t!r}") from None
    return tuple(out)


def _q(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _qvec(v):
    return [_q(x) for x in v]


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def _group_block(spec: str, group):
    return {
        "spec": spec.strip(),
        "orders": list(group.orders),
        "weights": [list(row) for row in group.weights],
    }


def _ptheta_block(tp):
    return {
        "vertices": [_qvec(v) for v in tp.v.vertices],
        "rays": [list(r) for r in tp.v.rays],
        "inequalities": [
            {"coeffs": [int(c) for c in coeffs], "rhs": int(rhs)}
            for coeffs, rhs in tp.h.inequalities
        ],
    }


def _fan_block(tf):
    fan = tf.fan
    block = {
        "rays": [list(r) for r in fan.rays],
        "maximal_cones": [sorted(c) for c in fan.maximal],
        "markers": [_qvec(v) for v in fan.vertices],
    }
    if tf.charts is not None:
        block["charts"] = [
            {
                "vertex": [int(x) for x in ch.vertex],
                "bound": ch.bound,
                "generators": [list(q) for q in ch.generators],
                "missing": [list(q) for q in ch.missing],
                "saturated_up_to_bound": ch.saturated_up_to_bound,
            }
            for ch in tf.charts
        ]
    return block


def _rep_block(rep):
    return {
        "w": _qvec(rep.w),
        "v": _qvec(rep.point),
        "value": _q(rep.value),
        "b": [int(x) for x in rep.b],
        "tight_set": sorted(rep.tight),
        "mode": rep.mode,
        "cone": {
            "ray_indices": list(rep.cone.indices),
            "rays": [list(r) for r in rep.cone.rays],
            "dim": rep.cone.dim,
        },
    }


_PALETTE = [
    "#c6dbef",
    "#fdd0a2",
    "#c7e9c0",
    "#dadaeb",
    "#fee0d2",
    "#d9f0d3",
    "#fde0ef",
    "#e5f5e0",
    "#deebf7",
    "#fff7bc",
    "#e0ecf4",
]


def render_fan_svg(tf, title: str) -> str:
    """Barycentric cross-section (the plane x+y+z = 1) of a fan in Q^3."""
    fan = tf.fan
    corners = ((60.0, 540.0), (580.0, 540.0), (320.0, 90.0))

    def bary(ray):
        s = float(sum(ray))
        wx = [float(x) / s for x in ray]
        return (
            sum(w * c[0] for w, c in zip(wx, corners)),
            sum(w * c[1] for w, c in zip(wx, corners)),
        )

    pts = [bary(r) for r in fan.rays]
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 640 620" '
        'font-family="monospace" font-size="11">',
        f'<title>{title}</title>',
        '<rect width="640" height="620" fill="white"/>',
    ]
    for idx, cone in enumerate(fan.maximal):
        cpts = [pts[i] for i in sorted(cone)]
        cx = sum(p[0] for p in cpts) / len(cpts)
        cy = sum(p[1] for p in cpts) / len(cpts)
        ordered = sorted(cpts, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
        path = " ".join(f"{p[0]:.2f},{p[1]:.2f}" for p in ordered)
        color = _PALETTE[idx % len(_PALETTE)]
        parts.append(
            f'<polygon points="{path}" fill="{color}" stroke="#555" stroke-width="0.8"/>'
        )
        marker = ",".join(str(int(x)) for x in fan.vertices[idx])
        parts.append(
            f'<text x="{cx:.2f}" y="{cy:.2f}" text-anchor="middle" fill="#333">'
            f"({marker})</text>"
        )
    for i, p in enumerate(pts):
        parts.append(
            f'<circle cx="{p[0]:.2f}" cy="{p[1]:.2f}" r="3" fill="#222"/>'
        )
        parts.append(
            f'<text x="{p[0] + 5:.2f}" y="{p[1] - 5:.2f}" fill="#111">{i}</text>'
        )
    parts.append('<text x="20" y="20" fill="#111">legend</text>')
    for i, ray in enumerate(fan.rays):
        coords = ",".join(str(x) for x in ray)
        parts.append(
            f'<text x="20" y="{34 + 14 * i}" fill="#111">{i}: ({coords})</text>'
        )
    parts.append(f'<text x="20" y="600" fill="#111">{title}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _quiver_text(group, quiver, inc) -> str:
    lines = [f"group: orders {group.orders}, {quiver.r} characters, {quiver.n} coordinates"]
    for i, v in enumerate(quiver.vertices):
        lines.append(f"vertex {i}: {v.residues}")
    for k, a in enumerate(quiver.arrows):
        lines.append(f"arrow {k}: {a.tail} -> {a.head} (label {a.label})")
    for name, mat in (("B", inc.b), ("C", inc.c), ("D", inc.d)):
        lines.append(f"{name}:")
        for row in mat:
            lines.append("  " + " ".join(f"{x:3d}" for x in row))
    return "\n".join(lines) + "\n"


def _fan_text(tf) -> str:
    fan = tf.fan
    lines = []
    for i, r in enumerate(fan.rays):
        lines.append(f"ray {i}: {tuple(r)}")
    for cone, vert in zip(fan.maximal, fan.vertices):
        lines.append(
            f"maximal cone {sorted(cone)} at vertex {tuple(int(x) for x in vert)}"
        )
    if tf.charts is not None:
        for ch in tf.charts:
            verdict = "saturated" if ch.saturated_up_to_bound else "NOT saturated"
            lines.append(
                f"chart at {ch.vertex}: {len(ch.generators)} generators, "
                f"{verdict} up to bound {ch.bound}"
            )
    return "\n".join(lines) + "\n"


def _rep_text(rep) -> str:
    lines = [
        "b = " + "".join(str(x) for x in rep.b),
        f"tight set: {sorted(rep.tight)}",
        f"optimal value: {rep.value}",
        f"cone rays: {[tuple(r) for r in rep.cone.rays]}",
    ]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mckay-moduli",
        description="Exact toric data of moduli of quiver representations "
        "for finite abelian group actions.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_common(sp):
        sp.add_argument("--group", required=True, help="group spec, e.g. '1/7(1,2)'")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--output", help="write the document to this file")

    sp = sub.add_parser("quiver", help="vertices, arrows and incidence matrices")
    add_common(sp)

    def add_theta(sp):
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument("--theta", type=_rational_csv, help="stability parameter")
        grp.add_argument(
            "--ghilb",
            action="store_true",
            help="use the orbit Hilbert scheme parameter (1-r, 1, ..., 1)",
        )

    sp = sub.add_parser("fan", help="type polyhedron and its inner-normal fan")
    add_common(sp)
    add_theta(sp)
    method = sp.add_mutually_exclusive_group()
    method.add_argument(
        "--oracle",
        action="store_true",
        help="certify facets with exact LPs (default)",
    )
    method.add_argument(
        "--lifted",
        action="store_true",
        help="enumerate the flow polyhedron and project (can be huge)",
    )
    sp.add_argument("--charts", type=int, metavar="BOUND", help="chart reports up to degree BOUND")
    sp.add_argument("--svg", help="write a barycentric cross-section (3 coordinates only)")

    sp = sub.add_parser("rep", help="distinguished representation for (theta, w)")
    add_common(sp)
    add_theta(sp)
    sp.add_argument("-w", "--w", required=True, type=_rational_csv,
                    help="nonnegative weights")
    sp.add_argument(
        "--single-optimizer",
        action="store_true",
        help="inspect one optimizer instead of the whole optimal face",
    )

    sp = sub.add_parser("check", help="run consistency checks on a group")
    sp.add_argument("--group", required=True)
    sp.add_argument("--bound", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=10)
    return p


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _merge_vector_flags(argv):
    """Join value flags with values that start with a minus sign.

    argparse mistakes "-2,1,1" for an option name, so "--theta -2,1,1" is
    rewritten to "--theta=-2,1,1" before parsing.
    """
    flags = ("--theta", "--w", "-w")
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in flags and i + 1 < len(argv):
            nxt = argv[i + 1]
            if nxt.startswith("-") and any(ch.isdigit() for ch in nxt):
                out.append(tok + "=" + nxt)
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = build_parser().parse_args(_merge_vector_flags(list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    threads = os.environ.get("MCKAY_THREADS")
    if threads is not None:
        if not threads.isdigit() or int(threads) < 1:
            print(f"error: MCKAY_THREADS must be a positive integer, got {threads!r}",
                  file=sys.stderr)
            return 2

    try:
        return _dispatch(args)
    except (
        GroupSpecError,
        BadTheta,
        BadShape,
        NegativeW,
        NonGenerating,
        NotInM,
        TrivialGroup,
        OutsideSupport,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ModuliError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    orders, weights = parse_group_spec(args.group)
    group = build_group(orders, weights)
    quiver = build_quiver(group)

    if args.cmd == "quiver":
        inc = incidence_matrices(quiver)
        if args.format == "text":
            _emit(args, _quiver_text(group, quiver, inc))
            return 0
        doc = {
            "schema": SCHEMA,
            "group": _group_block(args.group, group),
            "quiver": {
                "vertices": [list(v.residues) for v in quiver.vertices],
                "arrows": [
                    {"tail": a.tail, "head": a.head, "label": a.label}
                    for a in quiver.arrows
                ],
                "b": [list(r) for r in inc.b],
                "c": [list(r) for r in inc.c],
                "d": [list(r) for r in inc.d],
            },
        }
        _emit(args, _dump(doc))
        return 0

    if args.cmd == "check":
        results = run_all(quiver, bound=args.bound, seed=args.seed, trials=args.trials)
        ok = True
        for name, passed, detail in results:
            if passed:
                print(f"ok   {name}")
            else:
                ok = False
                print(f"FAIL {name}: {detail}")
        print(("all checks passed" if ok else "some checks FAILED"))
        return 0 if ok else 1

    param = ghilb_parameter(quiver) if args.ghilb else stability_parameter(quiver, args.theta)

    if args.cmd == "fan":
        method = "lifted" if args.lifted else "oracle"
        if args.charts is not None and args.charts < 0:
            raise BadTheta("chart bound must be nonnegative")
        tp = theta_polyhedron(quiver, param, method=method)
        tf = moduli_fan(tp, charts_bound=args.charts)
        if args.svg is not None:
            if quiver.n != 3:
                print(
                    "error: the SVG cross-section is only defined for 3 coordinates",
                    file=sys.stderr,
                )
                return 3
            title = f"{args.group.strip()} theta={','.join(_qvec(param.theta))}"
            with open(args.svg, "w") as fh:
                fh.write(render_fan_svg(tf, title))
        if args.format == "text":
            _emit(args, _fan_text(tf))
            return 0
        doc = {
            "schema": SCHEMA,
            "group": _group_block(args.group, group),
            "theta": _qvec(param.theta),
            "p_theta": _ptheta_block(tp),
            "fan": _fan_block(tf),
        }
        _emit(args, _dump(doc))
        return 0

    if args.cmd == "rep":
        tp = theta_polyhedron(quiver, param, method="oracle")
        tf = moduli_fan(tp)
        rep = distinguished_rep(
            quiver,
            param,
            args.w,
            single_optimizer=args.single_optimizer,
            fan=tf.fan,
        )
        if args.format == "text":
            _emit(args, _rep_text(rep))
            return 0
        doc = {
            "schema": SCHEMA,
            "group": _group_block(args.group, group),
            "theta": _qvec(param.theta),
            "rep": _rep_block(rep),
        }
        _emit(args, _dump(doc))
        return 0

    raise ModuliError(f"unknown command {args.cmd!r}")


if __name__ == "__main__":
    sys.exit(main())
