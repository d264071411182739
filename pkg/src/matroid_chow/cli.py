"""Command-line interface.

Matroids are given either as a family shorthand (``uniform:2,5``,
``snake:2,1,2,3``, ``minimal:2,6``, ``panhandle:3,4,7``,
``nested:(2,1),(4,2),(7,3);7``, ``lpm:U=NENNENEEE;L=EENNENEEN``), as inline
JSON ``{"n": .., "bases": [[..], ..]}``, or as ``@path/to/file.json``.

Exit codes: 1 for invalid input, 2 when the K-class oracle bound is
exceeded, 3 when an internal cross-check fails (a bug signal).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import chow, kclass, matroid as mt
from .shapes import SkewShape, ribbon_from_composition


class IdentityFailure(RuntimeError):
    pass


def _load_matroid(text: str) -> mt.Matroid:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    return mt.from_spec_string(text)


def _shape_of_spec(text: str) -> SkewShape:
    text = text.strip()
    head, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"{text!r} is not a lattice-path family spec")
    head = head.lower()
    if head == "uniform":
        k, n = (int(x) for x in rest.split(","))
        return SkewShape((n - k,) * k, ())
    if head == "snake":
        return ribbon_from_composition(tuple(int(x) for x in rest.split(",")))
    if head == "minimal":
        k, n = (int(x) for x in rest.split(","))
        return ribbon_from_composition((n - k,) + (1,) * (k - 1))
    if head == "panhandle":
        k, h, n = (int(x) for x in rest.split(","))
        return SkewShape((n - k,) + (h - k + 1,) * (k - 1), ())
    if head == "lpm":
        parts = dict(p.split("=", 1) for p in rest.split(";"))
        spec = mt.LatticePathSpec(parts["U"].strip(), parts["L"].strip())
        mu, lam = spec.row_bounds()
        return SkewShape(lam, mu)
    if head == "nested":
        pairs_text, sep2, n_text = rest.partition(";")
        if not sep2:
            raise ValueError("nested spec needs a trailing ;n")
        pairs = []
        for chunk in pairs_text.replace("(", " ").replace(")", " ").split():
            chunk = chunk.strip(",")
            if not chunk:
                continue
            h, r = (int(x) for x in chunk.split(","))
            pairs.append((h, r))
        n = int(n_text)
        data = mt.validate_chain(pairs, n)
        k = data[-1][1]
        upper = []
        prev_h, prev_r = 0, 0
        for h, r in data:
            upper.append("N" * (r - prev_r) + "E" * ((h - prev_h) - (r - prev_r)))
            prev_h, prev_r = h, r
        spec = mt.LatticePathSpec("".join(upper), "E" * (n - k) + "N" * k)
        mu, lam = spec.row_bounds()
        return SkewShape(lam, mu)
    raise ValueError(f"{text!r} is not a lattice-path family spec")


def _emit_class(c: chow.ChowClass, fmt: str) -> None:
    if fmt == "json":
        print(c.to_json())
        return
    print(f"k = {c.k}  n = {c.n}  degree m = {c.m}")
    print(f"Sc   = {c.render()}")
    print(f"Sc^c = {chow.poincare_dual(c).render()}")


def _cmd_chow(args: argparse.Namespace) -> int:
    m = _load_matroid(args.matroid)
    _emit_class(chow.sc_general(m), args.format)
    return 0


def _cmd_dual(args: argparse.Namespace) -> int:
    m = _load_matroid(args.matroid)
    c = chow.transform_dual_matroid(chow.sc_general(m))
    _emit_class(c, args.format)
    return 0


def _cmd_beta(args: argparse.Namespace) -> int:
    m = _load_matroid(args.matroid)
    value = chow.beta_from_chow(chow.sc_general(m))
    if m.n <= 16 and m.beta() != value:
        raise IdentityFailure(f"beta mismatch: rank-sum {m.beta()} vs Chow {value}")
    print(json.dumps({"beta": value}) if args.format == "json" else f"beta = {value}")
    return 0


def _cmd_volume(args: argparse.Namespace) -> int:
    m = _load_matroid(args.matroid)
    vol = chow.volume_from_chow(chow.sc_general(m))
    print(json.dumps({"volume": vol}) if args.format == "json" else f"volume = {vol}")
    return 0


def _cmd_support(args: argparse.Namespace) -> int:
    m = _load_matroid(args.matroid)
    supp = sorted(chow.support_of(chow.sc_general(m)), reverse=True)
    if args.format == "json":
        print(json.dumps([list(p) for p in supp]))
    else:
        for p in supp:
            print(f"[{','.join(str(x) for x in p)}]")
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    m = _load_matroid(args.matroid)
    core, num_loops, num_coloops = mt.core_strip(m)
    if num_loops or num_coloops:
        print(f"stripped {num_loops} loops and {num_coloops} coloops")
    if core is None:
        print("core is empty; class = 1*s[]")
        _emit_class(chow.sc_general(m), args.format)
        return 0
    rows = []
    for chain, weight in mt.hampe_coefficients(core):
        profile = chain.profile()
        cls = chow.sc_nested(profile, core.n)
        rows.append((chain, weight, profile, cls))
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "chain": [sorted(f) for f in chain.flats],
                        "weight": w,
                        "profile": [list(p) for p in profile],
                        "chow": json.loads(cls.to_json()),
                    }
                    for chain, w, profile, cls in rows
                ]
            )
        )
    else:
        grouped: dict[tuple, list] = {}
        for chain, w, profile, cls in rows:
            grouped.setdefault(profile, [0, cls])[0] += w
        for chain, w, profile, cls in rows:
            print(f"{w:+d}  {chain}")
        print("grouped by nested isomorphism type:")
        for profile, (w, cls) in sorted(grouped.items()):
            label = ",".join(f"({h},{r})" for h, r in profile)
            print(f"  {w:+d} * Sc(nested {label}) = {w:+d} * ({cls.render()})")
    _emit_class(chow.sc_general(m), args.format)
    return 0


def _cmd_snakes(args: argparse.Namespace) -> int:
    shape = _shape_of_spec(args.matroid)
    result = mt.snakes_in(shape)
    if args.format == "json":
        print(json.dumps([list(b) for b in result]))
    else:
        for b in result:
            print(",".join(str(x) for x in b))
    return 0


def _cmd_paving_check(args: argparse.Namespace) -> int:
    m = _load_matroid(args.matroid)
    if not m.is_paving() or not m.is_connected():
        print("input is not a connected paving matroid", file=sys.stderr)
        return 1
    cls = chow.sc_general(m)
    report = []
    ok = True
    for deg in range(0, m.rank - 1):
        value = chow.paving_schubert(m, deg)
        cross = cls.dual_coefficient(chow.eta_m_partition(m.rank, m.n, deg))
        agree = value == cross
        positive = value > 0
        ok = ok and agree and positive
        report.append({"m": deg, "value": value, "positive": positive, "agrees": agree})
    if args.format == "json":
        print(json.dumps(report))
    else:
        for r in report:
            print(
                f"m = {r['m']}: value = {r['value']}  "
                f"{'positive' if r['positive'] else 'NOT POSITIVE'}  "
                f"{'agrees with decomposition' if r['agrees'] else 'MISMATCH'}"
            )
    if not ok:
        raise IdentityFailure("paving positivity cross-check failed")
    return 0


def _cmd_conjecture_check(args: argparse.Namespace) -> int:
    m = _load_matroid(args.matroid)
    holds, equality = chow.check_beta_volume_conjecture(m)
    cls = chow.sc_general(m)
    beta = chow.beta_from_chow(cls)
    vol = chow.volume_from_chow(cls)
    lhs = beta * math.comb(m.n - 2, m.rank - 1)
    if args.format == "json":
        print(
            json.dumps(
                {"beta": beta, "volume": vol, "bound": lhs, "holds": holds, "equality": equality}
            )
        )
    else:
        rel = "=" if equality else ("<" if lhs < vol else ">")
        print(f"beta * binom(n-2, k-1) = {lhs} {rel} {vol} = volume")
        print("inequality holds" if holds else "INEQUALITY FAILS")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    failures = 0

    def report(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  {detail}" if detail else ""))
        if not ok:
            failures += 1

    # oracle vs combinatorial pipeline
    for n in range(2, args.max_n + 1):
        for k in range(1, n):
            m = mt.uniform(k, n)
            ok = kclass.chow_from_k(m).coeffs == chow.sc_uniform(k, n).coeffs
            report(f"oracle == pipeline for uniform:{k},{n}", ok)
    for n in range(2, args.max_n + 1):
        for b in _compositions(n - 1):
            m = mt.snake(b)
            ok = kclass.chow_from_k(m).coeffs == chow.sc_snake(b).coeffs
            report(f"oracle == pipeline for snake:{','.join(map(str, b))}", ok)

    # divided-difference identities on small fixtures
    for spec in ("uniform:1,2", "uniform:2,4", "snake:2,1"):
        m = mt.from_spec_string(spec)
        report(f"parallel-extension identity on {spec}", kclass.verify_parext(m))
        report(f"series-extension identity on {spec}", kclass.verify_serext(m))
        report(f"loop factorization on {spec}", kclass.verify_add_loop(m))
    for k, b in ((1, 1), (2, 1), (2, 2), (3, 2)):
        report(f"divided-difference chain k={k}, b={b}", kclass.verify_last_step(k, b))

    # ribbon triple agreement
    from .symfunc import jacobi_trudi_ribbon, ribbon_schur

    for size in range(1, args.max_size + 1):
        ok = True
        for b in _compositions(size):
            jt = jacobi_trudi_ribbon(b)
            rs = ribbon_schur(b)
            syt = chow.sc_snake(b, method="syt")
            ok = ok and jt == rs and dict(rs.coeffs) == syt.dual_coefficients()
        report(f"ribbon triple agreement at size {size}", ok)

    # strip identity on snakes
    ok = True
    for size in range(2, min(args.max_size, 7) + 1):
        for b in _compositions(size):
            if len(b) < 2:
                continue
            if not chow.check_main_identity(mt.snake(b[:-1]), b[-1]):
                ok = False
    report("series/parallel strip identity on snakes", ok)

    if failures:
        raise IdentityFailure(f"{failures} verification(s) failed")
    print("all verifications passed")
    return 0


def _compositions(total: int, parts: int | None = None):
    if total == 0:
        return
    if parts is None:
        for p in range(1, total + 1):
            yield from _compositions(total, p)
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroid-chow",
        description="Exact Schubert-coefficient computations for matroids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, needs_matroid: bool = True, help: str = "") -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if needs_matroid:
            p.add_argument("matroid", help="family shorthand, inline JSON, or @file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(fn=fn)
        return p

    add("chow", _cmd_chow, help="Chow class (Schubert expansion and its dual)")
    add("dual", _cmd_dual, help="Chow class of the dual matroid")
    add("beta", _cmd_beta, help="beta invariant (with rank-sum cross-check)")
    add("volume", _cmd_volume, help="normalized base-polytope volume")
    add("support", _cmd_support, help="support of the class (dual indexing)")
    add("decompose", _cmd_decompose, help="nested-matroid decomposition walkthrough")
    add("snakes", _cmd_snakes, help="snakes inside a lattice-path diagram")
    add("paving-check", _cmd_paving_check, help="positivity of paving coefficients")
    add("conjecture-check", _cmd_conjecture_check, help="beta-volume inequality")
    v = add("verify", _cmd_verify, needs_matroid=False, help="run the verification suites")
    v.add_argument("--max-n", type=int, default=6, help="oracle bound for the equivalence sweep")
    v.add_argument("--max-size", type=int, default=9, help="ribbon size bound for triple agreement")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except kclass.OracleBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IdentityFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
