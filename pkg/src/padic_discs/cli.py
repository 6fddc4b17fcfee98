"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 precision exhausted.
Vectors are written x,y,z with rational entries; a leading minus sign is
accepted directly (``-18,5,11``), and ``--`` also works.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import classes, disc, geometry, oracle, padic, tree, triangle, verify
from .errors import DomainError, PrecisionExhausted

_NEG_ARG = re.compile(r"^-\d[\d/]*(,-?[\d/]+)*$")


def _common() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("-p", type=int, default=5, help="prime (default 5)")
    c.add_argument("--alpha", default=None, help="admissible class label, e.g. eps, p, eps*p, 1")
    c.add_argument("--precision", type=int, default=32, help="p-adic digits")
    c.add_argument("--depth", type=int, default=None, help="oracle sampling depth")
    c.add_argument("--format", choices=("plain", "json"), default="plain")
    c.add_argument("--seed", type=int, default=0)
    return c


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="padic-discs",
                                 description="Hilbert geometry of p-adic hyperbolic discs")
    sub = ap.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("classify", parents=[common], help="square class of a rational")
    s.add_argument("x")
    s = sub.add_parser("symbol", parents=[common], help="Hilbert symbol (a, b)_p")
    s.add_argument("a")
    s.add_argument("b")
    s = sub.add_parser("disc", parents=[common], help="disc membership and normal form")
    s.add_argument("v")
    s = sub.add_parser("distance", parents=[common], help="Hilbert distance of two disc points")
    s.add_argument("v")
    s.add_argument("w")
    s.add_argument("--oracle", action="store_true", help="use the definition-level oracle")

    t = sub.add_parser("tree", help="Bruhat-Tits tree")
    tsub = t.add_subparsers(dest="tcmd", required=True)
    s = tsub.add_parser("project", parents=[common])
    s.add_argument("v")
    s = tsub.add_parser("export-dot", parents=[common])
    s.add_argument("--center", default="0,0", help="vertex a,c (basis [[p^a, c], [0, 1]])")
    s.add_argument("--radius", type=int, default=2)
    s.add_argument("--out", default=None)
    s = tsub.add_parser("distance", parents=[common])
    s.add_argument("u")
    s.add_argument("w")

    t = sub.add_parser("triangle", help="the triangle for H = squares")
    tsub = t.add_subparsers(dest="tcmd", required=True)
    s = tsub.add_parser("distance", parents=[common])
    s.add_argument("v")
    s.add_argument("w")
    s = tsub.add_parser("hexmap", parents=[common])
    s.add_argument("--center", default="1,1,1")
    s.add_argument("--radius", type=int, default=2)
    s.add_argument("--out", default=None, help="write an SVG here instead of text")

    s = sub.add_parser("verify", parents=[common], help="run property suites")
    s.add_argument("--suite", default="all", choices=verify.SUITES + ("all",))
    s.add_argument("--cases", type=int, default=30)
    return ap


def _alpha(args) -> classes.AlphaClass:
    if args.alpha is None:
        raise DomainError("--alpha is required")
    return classes.AlphaClass.from_label(args.alpha, args.p)


def _vertex(s: str) -> tree.TreeVertex:
    a, c = s.split(",")
    return tree.TreeVertex(int(a), Fraction(c))


def _cmd_classify(args):
    c = padic.square_class(padic.parse_rational(args.x), args.p)
    return c.label, {"class": c.label, "valuation": padic.valuation(padic.parse_rational(args.x), args.p)}


def _cmd_symbol(args):
    h = padic.hilbert_symbol(padic.parse_rational(args.a), padic.parse_rational(args.b), args.p)
    return str(h), {"symbol": h}


def _cmd_disc(args):
    a = _alpha(args)
    v = geometry.parse_vec(args.v)
    inside = disc.in_disc(v, a, args.p)
    data = {"in_disc": inside}
    if inside:
        ctx = padic.PadicContext(args.p, args.precision)
        dp = disc.DiscPoint.of(v, a)
        nf = disc.reduce_to_normal_form(dp, ctx)
        label = disc.orbit_label(dp, ctx)
        data.update(alpha_prime=padic.format_rational(nf.alpha_prime),
                    shear=padic.format_rational(nf.g.b),
                    orbit=sorted(label))
    return ("in" if inside else "out"), data


def _cmd_distance(args, err):
    a = _alpha(args)
    v, w = geometry.parse_vec(args.v), geometry.parse_vec(args.w)
    for x in (v, w):
        if not disc.in_disc(x, a, args.p):
            raise disc.NotInDisc(f"{geometry.format_vec(x)} is not in the disc {a}")
    data = {}
    if args.oracle or args.p == 2:
        if args.p == 2 and not args.oracle:
            print("warning: no closed form for p = 2; using the oracle", file=err)
        if args.depth:
            o = oracle.oracle_distance(v, w, a, args.depth, args.p)
        else:
            o = oracle.oracle_distance_stable(v, w, a, args.p)
        d = o.value
        data.update(method="oracle", depth_used=o.depth_used, stable=o.stable)
    else:
        d = disc.hilbert_distance(v, w, args.p, a)
        data["method"] = "closed-form"
    if not geometry.proportional(v, w):
        kind = disc.classify_line(v, w, padic.PadicContext(args.p, args.precision))
        data["line"] = kind.tag
        if kind.is_long and args.p != 2:
            data["R"] = padic.format_rational(disc.mult_distance(v, w, args.p).R)
    if not a.even_valuation and data.get("line") == "short" and d < Fraction(1, 2):
        data["unverified_constant"] = True
    data["distance"] = padic.format_rational(d)
    return padic.format_rational(d), data


def _cmd_tree(args):
    if args.tcmd == "project":
        a = _alpha(args)
        u = tree.project(disc.DiscPoint.of(geometry.parse_vec(args.v), a), args.p)
        return u.label(), {"vertex": {"a": u.a, "c": padic.format_rational(u.c)},
                           "distance_to_base": tree.tree_distance(tree.base_vertex(), u, args.p)}
    if args.tcmd == "distance":
        d = tree.tree_distance(_vertex(args.u), _vertex(args.w), args.p)
        return str(d), {"distance": d}
    dot = tree.export_dot(_vertex(args.center), args.radius, args.p)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
        return f"wrote {args.out}", {"out": args.out}
    return dot.rstrip("\n"), {"dot": dot}


def _hex_svg(center, radius, marked) -> str:
    import math
    size, cells = 18.0, []
    for h in triangle.hex_ball(center, radius):
        a, b = h.m1 - center.m1, h.m2 - center.m2
        # m1 + m2 j with j = exp(2 i pi / 3)
        x = 200 + 2 * size * (a - b / 2)
        y = 200 - 2 * size * (b * math.sqrt(3) / 2)
        fill = "#444" if h in marked else "#ddd"
        pts = " ".join(f"{x + size * math.cos(math.pi / 6 + k * math.pi / 3):.2f},"
                       f"{y + size * math.sin(math.pi / 6 + k * math.pi / 3):.2f}"
                       for k in range(6))
        cells.append(f'<polygon points="{pts}" fill="{fill}" stroke="#000"/>')
    return ('<svg xmlns="http://www.w3.org/2000/svg" width="400" height="400">\n'
            + "\n".join(cells) + "\n</svg>\n")


def _cmd_triangle(args):
    p = args.p
    if args.tcmd == "distance":
        P1 = triangle.in_triangle(geometry.parse_vec(args.v), p)
        P2 = triangle.in_triangle(geometry.parse_vec(args.w), p)
        if P1 is None or P2 is None:
            raise DomainError("point not in the triangle")
        d = triangle.triangle_distance(P1, P2, p)
        hd = triangle.hex_distance(triangle.hex_project(P1), triangle.hex_project(P2))
        return padic.format_rational(d), {"distance": padic.format_rational(d), "hex_distance": hd}
    P = triangle.in_triangle(geometry.parse_vec(args.center), p)
    if P is None:
        raise DomainError("center not in the triangle")
    c = triangle.hex_project(P)
    r = args.radius
    # cells hit by the Hilbert ball of radius r: hex distance <= r - 1
    marked = set(triangle.hex_ball(c, max(r - 1, 0))) if r >= 1 else {c}
    grid = max(r, 1) + 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(_hex_svg(c, grid, marked))
        return f"wrote {args.out}", {"out": args.out, "cells": len(marked)}
    text = triangle.render_hexmap(c, grid, marked)
    return text.rstrip("\n"), {"cells": len(marked), "map": text}


def _cmd_verify(args):
    reports = verify.verify_suite(args.suite, args.seed, args.p, args.cases)
    lines, fails = [], 0
    for r in reports:
        for c in r.results:
            lines.append(f"{r.suite}: {c.line()}")
        fails += r.failures
    lines.append(f"seed={args.seed} p={args.p} failures={fails}")
    return "\n".join(lines), {"seed": args.seed, "p": args.p, "failures": fails,
                              "reports": [r.as_dict() for r in reports]}


def run(argv=None, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [" " + a if _NEG_ARG.match(a) else a for a in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if not padic.is_prime(args.p):
            parser.print_usage(err)
            print(f"error: {args.p} is not prime", file=err)
            return 2
        if args.cmd == "distance":
            text, data = _cmd_distance(args, err)
        else:
            text, data = globals()[f"_cmd_{args.cmd}"](args)
    except PrecisionExhausted as e:
        print(f"precision exhausted: {e}", file=err)
        return 3
    except (DomainError, ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=err)
        return 1
    if args.format == "json":
        payload = {"command": args.cmd, "p": args.p, "result": text.splitlines()[0] if text else ""}
        payload.update(data)
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print(text, file=out)
    if args.cmd == "verify" and data["failures"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
