"""Command-line front-end and REPL.

Exit codes: 0 on success, 1 on domain errors (e.g. applying map i to an
unbounded element), 2 on parse errors.  ``--json`` switches every
subcommand to a stable machine-readable rendering; the field order of each
payload is fixed, so identical inputs produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import re
import shlex
import sys
from fractions import Fraction
from typing import Optional

from . import fermat as fm
from . import henle as he
from . import hom
from . import hyperreal as hy
from .errors import DomainError, NotLittleOh, ParseError
from .hyperreal import HyperElem, Selector
from .fermat import FermatElem
from .henle import HenleElem
from .parser import format_seq, parse
from .seqrep import SeqRep, zero

_SYSTEMS = ("henle", "hyperreal", "fermat", "giordano")
_WITNESSES = ("zero-divisors", "reverse-map", "main-proposition")
_RESERVED = {
    "n", "per", "let", "quit", "exit", "help", "list",
    "classify", "cmp", "st", "decompose", "map", "witness", "repl",
    "i", "j", *_SYSTEMS,
}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="seqrings", description="Exact workbench for sequence-ring extensions of the rationals.")
    top.add_argument("--json", action="store_true", help="machine-readable output")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="boundedness, finiteness, infinitesimality, ideal membership")
    p.add_argument("expr")

    p = sub.add_parser("cmp", help="compare two elements in one of the systems")
    p.add_argument("system", choices=_SYSTEMS)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--selector", type=int, default=0, metavar="M")

    p = sub.add_parser("st", help="standard part in one of the systems")
    p.add_argument("system", choices=_SYSTEMS)
    p.add_argument("expr")
    p.add_argument("--selector", type=int, default=0, metavar="M")

    p = sub.add_parser("decompose", help="standard part, infinitesimal terms and discarded part")
    p.add_argument("expr")

    p = sub.add_parser("map", help="apply a canonical homomorphism and compare the image with 0")
    p.add_argument("name", choices=("i", "j"))
    p.add_argument("expr")
    p.add_argument("--selector", type=int, default=0, metavar="M")

    p = sub.add_parser("witness", help="named example pairs, re-verified at run time")
    p.add_argument("name", choices=_WITNESSES)

    p = sub.add_parser("repl", help="interactive loop over the same commands")
    p.add_argument("--script", metavar="FILE", help="batch file of REPL commands")

    return top


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload))
        return
    for key, value in payload.items():
        if key == "command":
            continue
        if isinstance(value, list):
            value = ", ".join(
                f"({v[0]}, {v[1]})" if isinstance(v, list) else str(v) for v in value
            )
        if value is None:
            value = "absent"
        print(f"{key}: {value}")


def _rat(q: Optional[Fraction]) -> Optional[str]:
    return None if q is None else str(q)


def _do_classify(expr: str) -> dict:
    rep = parse(expr)
    cls = he.classify(HenleElem(rep))
    payload = {
        "command": "classify",
        "expr": format_seq(rep),
        "bounded": rep.is_bounded(),
        "finite": cls.finite,
        "infinitesimal": cls.infinitesimal,
        "infinite": cls.infinite,
        "in_o": fm.in_ideal_o(rep),
    }
    if rep.is_bounded():
        elem = FermatElem(rep)
        payload["little_oh"] = fm.is_little_oh(elem)
        idx = fm.nilpotency_index(elem)
        payload["nilpotency_index"] = idx
    else:
        payload["little_oh"] = False
        payload["nilpotency_index"] = None
    return payload


def _do_cmp(system: str, lhs: str, rhs: str, selector: int) -> dict:
    x, y = parse(lhs), parse(rhs)
    payload = {"command": "cmp", "system": system, "lhs": format_seq(x), "rhs": format_seq(y)}
    if system == "henle":
        payload["result"] = he.cmp_f(HenleElem(x), HenleElem(y)).value
    elif system == "hyperreal":
        sel = Selector(selector)
        payload["result"] = hy.cmp_u(HyperElem(x), HyperElem(y), sel).value
        payload["selector"] = selector
        independent = hy.selector_independent(HyperElem(x), HyperElem(y))
        payload["notes"] = ["selector-independent" if independent else "selector-dependent"]
    else:
        ex, ey = FermatElem(x), FermatElem(y)
        if system == "giordano":
            for e in (ex, ey):
                if not fm.is_little_oh(e):
                    raise NotLittleOh("operands of the linearly ordered subring must be little-oh polynomials")
        payload["result"] = fm.cmp_o(ex, ey).value
    return payload


def _do_st(system: str, expr: str, selector: int) -> dict:
    rep = parse(expr)
    payload = {"command": "st", "system": system, "expr": format_seq(rep)}
    if system == "henle":
        payload["result"] = _rat(he.st_f(HenleElem(rep)))
    elif system == "hyperreal":
        payload["result"] = _rat(hy.st_u(HyperElem(rep), Selector(selector)))
        payload["selector"] = selector
    else:
        elem = FermatElem(rep)
        if system == "giordano" and not fm.is_little_oh(elem):
            raise NotLittleOh("standard part on the subring needs a little-oh polynomial")
        payload["result"] = _rat(fm.st_o(elem))
    return payload


def _do_decompose(expr: str) -> dict:
    rep = parse(expr)
    dec = fm.decompose(FermatElem(rep))
    return {
        "command": "decompose",
        "expr": format_seq(rep),
        "standard_part": str(dec.standard_part),
        "infinitesimal_terms": [[str(alpha), str(a)] for alpha, a in dec.infinitesimal_terms],
        "discarded": format_seq(dec.discarded),
    }


def _do_map(name: str, expr: str, selector: int) -> dict:
    rep = parse(expr)
    elem = HenleElem(rep)
    payload = {"command": "map", "map": name, "expr": format_seq(rep)}
    if name == "i":
        image = hom.map_i(elem)
        payload["codomain"] = "fermat"
        payload["image"] = format_seq(image.rep)
        payload["equals_zero"] = fm.eq_o(image, FermatElem(zero()))
    else:
        sel = Selector(selector)
        image = hom.map_j(elem)
        payload["codomain"] = "hyperreal"
        payload["image"] = format_seq(image.rep)
        payload["equals_zero"] = hy.eq_u(image, HyperElem(zero()), sel)
        payload["selector"] = selector
        independent = hy.selector_independent(image, HyperElem(zero()))
        payload["notes"] = ["selector-independent" if independent else "selector-dependent"]
    return payload


def _do_witness(name: str) -> dict:
    if name == "zero-divisors":
        a, b = he.zero_divisor_witness()
        product = a * b
        zero_elem = HenleElem(zero())
        return {
            "command": "witness",
            "name": name,
            "factors": [format_seq(a.rep), format_seq(b.rep)],
            "factors_nonzero": [not he.eq_f(a, zero_elem), not he.eq_f(b, zero_elem)],
            "product": format_seq(product.rep),
            "product_equals_zero": he.eq_f(product, zero_elem),
            "product_cmp_zero": he.cmp_f(product, zero_elem).value,
        }
    if name == "reverse-map":
        a, b = hom.reverse_map_witness()
        return {
            "command": "witness",
            "name": name,
            "pair": [format_seq(a.rep), format_seq(b.rep)],
            "eq_o": fm.eq_o(a, b),
            "eq_f": he.eq_f(HenleElem(a.rep), HenleElem(b.rep)),
            "st_o": [_rat(fm.st_o(a)), _rat(fm.st_o(b))],
        }
    r = HenleElem(parse("1/n^2"))
    i_image = hom.map_i(r)
    j_image = hom.map_j(r)
    zero_f, zero_h = FermatElem(zero()), HyperElem(zero())
    selectors = [Selector(m) for m in range(100)]
    return {
        "command": "witness",
        "name": name,
        "element": format_seq(r.rep),
        "i_image_equals_zero": fm.eq_o(i_image, zero_f),
        "j_image_nonzero_all_selectors": all(not hy.eq_u(j_image, zero_h, s) for s in selectors),
        "selectors_checked": len(selectors),
        "selector_independent": hy.selector_independent(j_image, zero_h),
    }


def _dispatch(ns: argparse.Namespace) -> dict:
    if ns.command == "classify":
        return _do_classify(ns.expr)
    if ns.command == "cmp":
        return _do_cmp(ns.system, ns.lhs, ns.rhs, ns.selector)
    if ns.command == "st":
        return _do_st(ns.system, ns.expr, ns.selector)
    if ns.command == "decompose":
        return _do_decompose(ns.expr)
    if ns.command == "map":
        return _do_map(ns.name, ns.expr, ns.selector)
    if ns.command == "witness":
        return _do_witness(ns.name)
    raise AssertionError(ns.command)


def _report_error(exc: Exception, as_json: bool) -> int:
    code = 2 if isinstance(exc, ParseError) else 1
    if as_json:
        print(json.dumps({"error": {"kind": type(exc).__name__, "message": str(exc)}}))
    else:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
    return code


_NAME = re.compile(r"(?<![\w])[A-Za-z_]\w*(?![\w])")


def _substitute(text: str, env: dict[str, SeqRep]) -> str:
    def swap(m: re.Match) -> str:
        word = m.group(0)
        if word in env:
            return f"({format_seq(env[word])})"
        return word

    return _NAME.sub(swap, text)


def _repl(json_mode: bool, script: Optional[str]) -> int:
    env: dict[str, SeqRep] = {}
    parser = _build_parser()
    if script is not None:
        with open(script, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        source = iter(lines)
    else:
        source = None
        print("seqrings repl; 'help' lists commands, 'quit' leaves")

    while True:
        if source is None:
            try:
                line = input("seq> ")
            except EOFError:
                print()
                return 0
        else:
            line = next(source, None)
            if line is None:
                return 0
            print(f"seq> {line}")
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("quit", "exit"):
            return 0
        if line == "help":
            parser.print_help()
            print("repl extras: let NAME = EXPR, list, quit")
            continue
        if line == "list":
            for name, rep in sorted(env.items()):
                print(f"{name} = {format_seq(rep)}")
            continue
        try:
            if line.startswith("let "):
                _do_let(line, env)
                continue
            tokens = shlex.split(line)
            tokens = [_substitute(t, env) for t in tokens]
            ns = parser.parse_args((["--json"] if json_mode else []) + tokens)
            if ns.command == "repl":
                print("already in the repl", file=sys.stderr)
                continue
            _emit(_dispatch(ns), json_mode)
        except SystemExit:
            continue
        except (ParseError, DomainError) as exc:
            _report_error(exc, json_mode)


def _do_let(line: str, env: dict[str, SeqRep]) -> None:
    m = re.fullmatch(r"let\s+([A-Za-z_]\w*)\s*=\s*(.+)", line)
    if m is None:
        print("usage: let NAME = EXPR", file=sys.stderr)
        return
    name, expr = m.group(1), m.group(2)
    if name in _RESERVED:
        print(f"{name!r} is reserved", file=sys.stderr)
        return
    env[name] = parse(_substitute(expr, env))
    print(f"{name} = {format_seq(env[name])}")


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if ns.command == "repl":
        return _repl(ns.json, ns.script)
    try:
        _emit(_dispatch(ns), ns.json)
        return 0
    except (ParseError, DomainError) as exc:
        return _report_error(exc, ns.json)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
