"""Command-line front end.

Exit codes: 0 success / property holds, 1 a check ran and failed (or a
witness turned up where none was expected), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, looptab
from .affine import isomorphism_check, window_elements, zb_op
from .core import (
    CayleyTable,
    Permutation,
    RightLoopTable,
    TableStructureError,
    validate,
)
from .transversal import (
    FiniteGroup,
    Transversal,
    c_groupoid,
    dumps_cgroupoid,
    enumerate_nrts,
    induced_operation,
    right_cosets,
    subgroup_closure,
    theta_action_check,
)
from .twist import TwistSpec, translation_identities, twist


class UsageError(Exception):
    pass


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _err(line: str) -> None:
    sys.stderr.write(line + "\n")


def _load(path) -> tuple[CayleyTable, str]:
    try:
        return looptab.load(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    except TableStructureError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _right_loop(table: CayleyTable) -> RightLoopTable:
    try:
        return RightLoopTable(table)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _names(table: CayleyTable, spec: str) -> list[int]:
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(table.index(tok))
        except KeyError:
            raise UsageError(f"unknown element {tok!r}") from None
    return out


def _ints(spec: str) -> list[int]:
    try:
        return [int(t) for t in spec.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {spec!r}") from None


def parse_eta(table: CayleyTable, spec: str) -> Permutation:
    """``e,b,a,...`` (images in element order) or ``@file`` of ``name:image`` lines."""
    if spec.startswith("@"):
        images = list(range(table.order))
        try:
            text = Path(spec[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"{spec[1:]}: {exc.strerror}") from None
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            src, sep, dst = line.partition(":")
            if not sep:
                raise UsageError(f"bad eta line {line!r}, expected name:image")
            s, d = _names(table, src), _names(table, dst)
            if len(s) != 1 or len(d) != 1:
                raise UsageError(f"bad eta line {line!r}, expected name:image")
            images[s[0]] = d[0]
    else:
        images = _names(table, spec)
        if len(images) != table.order:
            raise UsageError(f"eta needs {table.order} images, got {len(images)}")
    try:
        return Permutation(tuple(images))
    except ValueError:
        raise UsageError("eta is not a bijection") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_validate(args) -> int:
    table, _ = _load(args.file)
    report = validate(table, 0, args.kind)
    for line in report.lines():
        _out(line)
    return 0 if report.valid else 1


def cmd_twist(args) -> int:
    table, _ = _load(args.file)
    U = _right_loop(table)
    B = frozenset(_names(table, args.b))
    eta = parse_eta(table, args.eta) if args.eta else Permutation.identity(table.order)
    try:
        spec = TwistSpec(B, eta)
        twisted = twist(U, spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(args.output, looptab.dumps(twisted.table))
    report = translation_identities(U, spec, twisted)
    out = _out if args.output not in (None, "-") else _err
    if report.ok:
        out(f"translation-identities holds columns={report.checked}")
        return 0
    out("translation-identities fails " + " ".join(table.names[y] for y in report.failures))
    return 1


def _group(path) -> FiniteGroup:
    table, _ = _load(path)
    try:
        return FiniteGroup(table)
    except ValueError as exc:
        raise UsageError(f"{path}: not a group: {exc}") from None


def _parse_choose(G: FiniteGroup, H, cosets, spec: str) -> Transversal:
    chosen = [c[0] for c in cosets]
    for item in spec.split(","):
        if not item.strip():
            continue
        idx, sep, name = item.partition(":")
        try:
            k = int(idx)
        except ValueError:
            raise UsageError(f"bad --choose item {item!r}, expected coset-index:name") from None
        if not sep or not 0 <= k < len(cosets):
            raise UsageError(f"bad --choose item {item!r}")
        x = _names(G.table, name)
        if len(x) != 1:
            raise UsageError(f"bad --choose item {item!r}")
        chosen[k] = x[0]
    try:
        return Transversal(G, H, tuple(chosen))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_nrt(args) -> int:
    G = _group(args.groupfile)
    H = subgroup_closure(G, _names(G.table, args.subgroup))
    nm = G.names
    cosets = right_cosets(G, H)
    _out(f"subgroup {' '.join(nm[h] for h in H.members)}")
    for k, c in enumerate(cosets):
        _out(f"coset {k}: {' '.join(nm[x] for x in c)}")
    if args.enumerate:
        if args.emit_loop or args.emit_cgroupoid:
            raise UsageError("--emit-loop/--emit-cgroupoid need --choose")
        status = 0
        count = 0
        for S in enumerate_nrts(G, H):
            L = induced_operation(S)
            ok = validate(L.table, 0, "right-loop").valid
            status |= not ok
            _out(f"nrt {count}: {' '.join(nm[x] for x in S.chosen)} right-loop {'holds' if ok else 'fails'}")
            count += 1
        _out(f"count {count}")
        return status
    S = _parse_choose(G, H, cosets, args.choose)
    L = induced_operation(S)
    _out(f"nrt: {' '.join(nm[x] for x in S.chosen)}")
    report = validate(L.table, 0, "right-loop")
    for line in report.lines():
        _out(line)
    if args.emit_loop:
        looptab.dump(args.emit_loop, L.table)
    if args.emit_cgroupoid:
        Path(args.emit_cgroupoid).write_text(dumps_cgroupoid(c_groupoid(S)), encoding="utf-8")
    return 0 if report.valid else 1


def cmd_cgroupoid(args) -> int:
    G = _group(args.groupfile)
    H = subgroup_closure(G, _names(G.table, args.subgroup))
    try:
        S = Transversal.from_elements(G, H, _names(G.table, args.transversal))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = c_groupoid(S)
    _write(args.output, dumps_cgroupoid(data))
    out = _out if args.output not in (None, "-") else _err
    bad = data.verify()
    action = theta_action_check(data)
    out("reconstruction " + ("holds" if not bad else "fails " + "; ".join(bad)))
    out("theta-action " + ("holds" if action.ok else f"fails {action.failures}"))
    return 0 if not bad and action.ok else 1


def _window_table(B, window: int) -> tuple[CayleyTable, int]:
    elems = window_elements(window)
    m = len(elems)
    pos = {v: k for k, v in enumerate(elems)}
    wrapped = 0

    def cell(r, c):
        nonlocal wrapped
        v = zb_op(B, elems[r], elems[c])
        if v not in pos:
            wrapped += 1
            v = (v + window) % m - window
        return pos[v]

    table = CayleyTable.from_function([str(v) for v in elems], cell)
    return table, wrapped


def cmd_dinf(args) -> int:
    B = _ints(args.b)
    if 0 in B:
        raise UsageError("0 may not lie in B")
    N = args.window
    if N <= 0:
        raise UsageError("--window must be positive")
    status = 0
    if args.check_iso:
        report = isomorphism_check(B, N)
        if report.ok:
            _out(f"isomorphism holds window={N} pairs={report.checked}")
        else:
            status = 1
            for i, k, a, b in report.mismatches:
                _out(f"isomorphism fails i={i} k={k} transversal={a} zb={b}")
    if args.emit_loop:
        table, wrapped = _window_table(B, N)
        looptab.dump(args.emit_loop, table, comments=[
            f"truncation of Z^B, B={{{','.join(map(str, sorted(B)))}}}, to the window [-{N},{N}]",
            f"NOT Z^B: {wrapped} out-of-window entries were reduced mod {2 * N + 1} (boundary columns are partial)",
        ])
    if not args.check_iso and not args.emit_loop:
        rng = range(-N, N + 1)
        _out(f"# Z^B B={{{','.join(map(str, sorted(B)))}}} window=[-{N},{N}]; row i, column k holds i o k")
        _out("k: " + " ".join(map(str, rng)))
        for i in rng:
            _out(f"{i}: " + " ".join(str(zb_op(B, i, k)) for k in rng))
    return status


PROP_ALIASES = {"loop": "loop", "commutative": "commutative", "ip": "inverse-property", "lemma1": "lemma1"}


def cmd_analyze(args) -> int:
    table, _ = _load(args.file)
    L = _right_loop(table)
    nm = table.names
    status = 0
    for tok in args.props.split(","):
        tok = tok.strip()
        if tok not in PROP_ALIASES:
            raise UsageError(f"unknown property {tok!r}")
        prop = PROP_ALIASES[tok]
        if prop == "lemma1":
            try:
                rep = analysis.lemma1_check(L)
            except analysis.PreconditionFailed:
                _out("lemma1 skipped (not an I.P. loop)")
                continue
            if rep.ok:
                _out("lemma1 holds")
            else:
                status = 1
                _out("lemma1 fails " + " ".join(nm[a] for a in rep.failures + rep.double_inverse_failures))
            continue
        rep = analysis.check_property(L, prop)
        if rep.holds:
            extra = ""
            if rep.inverse_map is not None:
                extra = " inverses=[" + " ".join(f"{nm[a]}:{nm[b]}" for a, b in enumerate(rep.inverse_map)) + "]"
            _out(f"{tok} holds{extra}")
        else:
            status = 1
            w = " ".join("(" + ",".join(nm[i] for i in t) + ")" for t in rep.witnesses[:10])
            _out(f"{tok} fails {w}")
    return status


def cmd_mulgroup(args) -> int:
    table, _ = _load(args.file)
    rep = analysis.right_mult_group(_right_loop(table), args.cap)
    _out(f"order={rep.order} generators={rep.generator_count} closed={'true' if rep.closed else 'false'}")
    return 0


def _perm_str(table: CayleyTable, p: Permutation) -> str:
    return " ".join(f"{table.names[i]}->{table.names[j]}" for i, j in enumerate(p.images))


def cmd_alpha(args) -> int:
    table, _ = _load(args.file)
    L = _right_loop(table)
    try:
        (a,), (b,) = _names(table, args.a), _names(table, args.b)
    except ValueError:
        raise UsageError("--a and --b each take one element name") from None
    eta = parse_eta(table, args.eta) if args.eta else None
    try:
        spec = analysis.alpha_twist_spec(L, a, b, eta)
        _, word = analysis.build_alpha(L, a, b, eta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    nm = table.names
    _out("B = {" + ",".join(nm[x] for x in sorted(spec.B)) + "}")
    _out(f"word = {word}")
    _out(f"alpha = {_perm_str(table, word.realized)}")
    sup = analysis.support(word.realized)
    _out(f"support={sup} moved=[{' '.join(nm[i] for i in sup.moved_points or ())}]")
    if args.check_identity:
        rep = analysis.alpha_identity_check(L, a, b, eta)
        if not rep.ok:
            _out("alpha-identity fails at " + " ".join(nm[t] for t in rep.mismatches))
            return 1
        _out("alpha-identity holds")
    return 0


def cmd_witness(args) -> int:
    if (args.file is None) == (args.dinf_b is None):
        raise UsageError("give exactly one of <file> or --dinf-b")
    if args.file is not None:
        table, _ = _load(args.file)
        L = _right_loop(table)
        gens = analysis.loop_right_generators(L)
        names = table.names
    else:
        B = _ints(args.dinf_b)
        if 0 in B:
            raise UsageError("0 may not lie in B")
        gens = analysis.zb_right_generators(B)
        names = None
    found = analysis.witness_search(gens, args.max_len, args.max_support)
    if not found:
        _out("no witness found")
        return 0
    for w in found:
        _out(w.line(names))
    # on Z^B every nonidentity word has infinite support, so a hit is unexpected
    return 1 if args.file is None else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rightloop", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("validate", help="check right-loop / loop / group axioms")
    s.add_argument("file")
    s.add_argument("--kind", choices=["right-loop", "loop", "group"], required=True)
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("twist", help="B-twist a loop")
    s.add_argument("file")
    s.add_argument("--b", required=True, help="comma-separated element names")
    s.add_argument("--eta", help="image list in element order, or @file of name:image lines")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_twist)

    s = sub.add_parser("nrt", help="normalized right transversals of a subgroup")
    s.add_argument("groupfile")
    s.add_argument("--subgroup", required=True, help="generators of H")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--enumerate", action="store_true")
    g.add_argument("--choose", help="coset-index:name,... (unlisted cosets use their first element)")
    s.add_argument("--emit-loop")
    s.add_argument("--emit-cgroupoid")
    s.set_defaults(func=cmd_nrt)

    s = sub.add_parser("cgroupoid", help="export f, sigma, theta of an NRT")
    s.add_argument("groupfile")
    s.add_argument("--subgroup", required=True)
    s.add_argument("--transversal", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_cgroupoid)

    s = sub.add_parser("dinf", help="the right loops Z^B inside D_inf")
    s.add_argument("--b", required=True, help="comma-separated nonzero integers")
    s.add_argument("--window", type=int, required=True)
    s.add_argument("--check-iso", action="store_true")
    s.add_argument("--emit-loop")
    s.set_defaults(func=cmd_dinf)

    s = sub.add_parser("analyze", help="loop / commutative / I.P. / lemma1 checks")
    s.add_argument("file")
    s.add_argument("--props", default="loop,commutative,ip,lemma1")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("mulgroup", help="order of the right multiplication group")
    s.add_argument("file")
    s.add_argument("--cap", type=int, default=100_000)
    s.set_defaults(func=cmd_mulgroup)

    s = sub.add_parser("alpha", help="build alpha = R'_b (R'_{1/a})^-1 R'_b (R'_{1/a})^-1")
    s.add_argument("file")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--eta")
    s.add_argument("--check-identity", action="store_true")
    s.set_defaults(func=cmd_alpha)

    s = sub.add_parser("witness", help="search words for finite-support elements")
    s.add_argument("file", nargs="?")
    s.add_argument("--dinf-b")
    s.add_argument("--max-len", type=int, required=True)
    s.add_argument("--max-support", type=int, required=True)
    s.set_defaults(func=cmd_witness)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _err(f"rightloop {args.verb}: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
