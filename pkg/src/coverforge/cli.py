"""
Command-line interface.

    coverforge [--format text|json] COMMAND FILE [options]

Exit codes: 0 success, 1 usage or input error, 2 validation failure.
Reports go to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import matrix as mx
from .characters import character_table, dihedral_h_range
from .datum import (collide_points, fiber_structure, quotient_datum, riemann_hurwitz_genus,
                    validate_datum)
from .dihedral import (classify_branch_inertia, dihedral_multiplicity_mu_h,
                       infinity_ramification_check)
from .errors import AssumptionViolated, CoverError, InvalidDatum, OrbitBudgetExceeded, ParseError
from .groups import subgroup_generated
from .hurwitz import DEFAULT_MAX_GROUP, DEFAULT_MAX_ORBIT, HurwitzTuple, hurwitz_orbit
from .io import datum_to_dict, load_json, parse_datum_file, parse_element, parse_group
from .localsystem import decompose_direct_image, format_blocks, monodromy_blocks, path_basis_report

__all__ = ["Report", "run_command", "main"]

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2


@dataclass
class Report:
    command: str
    inputs: dict
    result: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    text: str = ""
    format: str = "text"

    def to_dict(self):
        return {"command": self.command, "inputs": self.inputs,
                "result": self.result, "warnings": self.warnings}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="coverforge", description="Galois branched covers from branch data.")
    p.add_argument("--format", choices=["text", "json"], default="text")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("validate", "genus", "cw", "support", "dihedral-analyze"):
        sub.add_parser(name).add_argument("file")
    m = sub.add_parser("monodromy")
    m.add_argument("file")
    m.add_argument("--branch", help="branch label or 1-based index (default: all)")
    m.add_argument("--approx", action="store_true", help="append a complex-approximation column")
    q = sub.add_parser("quotient")
    q.add_argument("file")
    q.add_argument("--normal", required=True, help="comma-separated generators of N")
    c = sub.add_parser("collide")
    c.add_argument("file")
    c.add_argument("--merge", nargs=2, required=True, metavar=("I", "J"))
    h = sub.add_parser("hurwitz-orbits")
    h.add_argument("file")
    h.add_argument("--max-orbit", type=int, default=DEFAULT_MAX_ORBIT)
    h.add_argument("--max-group", type=int, default=DEFAULT_MAX_GROUP)
    t = sub.add_parser("char-table")
    t.add_argument("file")
    t.add_argument("--method", choices=["auto", "closed", "dixon"], default="auto")
    return p


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _branch_key(d, key):
    if key.isdigit():
        return int(key) - 1
    return d.branch_index(key)


def _validation(d, rep):
    v = validate_datum(d)
    rep.result["valid"] = v.ok
    rep.result["issues"] = [{"code": i.code, "index": i.index, "message": i.message} for i in v.issues]
    if not v.ok:
        rep.text = "INVALID\n" + "\n".join(f"  {i.code}: {i.message}" for i in v.issues)
        raise InvalidDatum("datum failed validation", v)


def cmd_validate(d, args, rep):
    _validation(d, rep)
    rep.result["genus"] = riemann_hurwitz_genus(d)
    lines = [f"ok  {d.describe()}", f"genus {rep.result['genus']}"]
    for i in range(d.r):
        fr = fiber_structure(d, i)
        lines.append(f"  {fr.label}: fiber size {fr.fiber_size}, inertia "
                     + "{" + ", ".join(d.group.label(g) for g in fr.inertia_generators) + "}")
    rep.text = "\n".join(lines)


def cmd_genus(d, args, rep):
    _validation(d, rep)
    g = riemann_hurwitz_genus(d)
    rep.result["genus"] = g
    rep.text = f"genus {g}"


def cmd_cw(d, args, rep):
    _validation(d, rep)
    dec = decompose_direct_image(d)
    rows = [{"irreducible": s.label, "degree": s.rank, "mu": s.mu, "type": list(s.hodge_type),
             "conjugate": s.conjugate, "support": list(s.support)} for s in dec]
    total = dec.weighted_mu_sum()
    rep.result.update(rows=rows, weighted_sum=total, genus=dec.genus, consistent=total == dec.genus)
    if total != dec.genus:
        raise InvalidDatum(f"sum d*mu = {total} differs from genus {dec.genus}")
    head = ["irrep", "deg", "mu", "type", "support"]
    body = [[s.label, str(s.rank), str(s.mu), f"({s.hodge_type[0]},{s.hodge_type[1]})",
             ",".join(s.support) or "-"] for s in dec]
    rep.text = _table([head, *body]) + f"\nsum d*mu = {total} = genus {dec.genus}"
    if d.base_genus == 0:
        for s in dec:
            pb = path_basis_report(d, s.label, dec.table)
            if not pb.consistent:
                rep.warnings.append(f"path basis for {s.label}: claimed {pb.claimed_dim}, "
                                    f"Chevalley-Weil {pb.cw_dim}")


def cmd_support(d, args, rep):
    _validation(d, rep)
    dec = decompose_direct_image(d)
    rep.result["support"] = {s.label: list(s.support) for s in dec}
    rep.text = _table([["irrep", "support"]] + [[s.label, ",".join(s.support) or "-"] for s in dec])


def cmd_monodromy(d, args, rep):
    _validation(d, rep)
    idxs = [_branch_key(d, args.branch)] if args.branch else range(d.r)
    out, chunks = {}, []
    for i in idxs:
        blocks = monodromy_blocks(d, i)
        lab = d.branches[i].label
        out[lab] = [{"irreducible": name, "rows": [[str(x) for x in row] for row in B]}
                    for name, B in blocks]
        chunks.append(f"branch {lab} ({d.group.label(d.branches[i].monodromy)})\n" + format_blocks(blocks))
        if args.approx:
            M = mx.block_diag([B for _, B in blocks])
            approx = mx.to_complex(M)
            chunks.append("approx:\n" + "\n".join(
                "  ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in row) for row in approx))
    rep.result["blocks"] = out
    rep.text = "\n\n".join(chunks)


def cmd_quotient(d, args, rep):
    _validation(d, rep)
    G = d.group
    gens = [parse_element(G, s) for s in args.normal.split(",") if s.strip()]
    N = subgroup_generated(G, gens)
    if not N.is_normal:
        raise UsageError(f"<{args.normal}> is not normal in {G.name()}")
    qd, desc = quotient_datum(d, N)
    rep.result.update(datum=datum_to_dict(qd), dropped=list(desc.dropped),
                      order_changes=[list(c) for c in desc.order_changes],
                      genus=riemann_hurwitz_genus(qd))
    rep.text = (json.dumps(datum_to_dict(qd), indent=2)
                + f"\n# quotient of order {desc.quotient_order}, genus {rep.result['genus']}"
                + f"\n# dropped: {', '.join(desc.dropped) or '-'}"
                + "".join(f"\n# {lab}: order {a} -> {b}" for lab, a, b in desc.order_changes))


def cmd_collide(d, args, rep):
    _validation(d, rep)
    i, j = (_branch_key(d, k) for k in args.merge)
    nd = collide_points(d, i, j)
    rep.result.update(datum=datum_to_dict(nd), genus=riemann_hurwitz_genus(nd))
    rep.text = json.dumps(datum_to_dict(nd), indent=2) + f"\n# genus {rep.result['genus']}"


def cmd_dihedral(d, args, rep):
    info = classify_branch_inertia(d)
    prof = info.profile
    rep.result["branches"] = [{"label": b.label, "kind": b.kind, "exponent": b.exponent}
                              for b in info.branches]
    rep.result["profile"] = {"n": prof.n, "l": prof.reflection_count,
                             "reflection_exponent": prof.reflection_exponent,
                             "rotation_exponents": list(prof.rotation_exponents),
                             "parity_class": prof.parity_class}
    lines = [f"D{prof.n}: l = {prof.reflection_count}, rotations {list(prof.rotation_exponents)}"]
    lines += [f"  {b.label}: {b.kind}({b.exponent})" for b in info.branches]
    try:
        verdict = infinity_ramification_check(prof)
        rep.result["unramified_at_infinity"] = verdict
        lines.append(f"infinity check: {'unramified' if verdict else 'ramified'}")
    except AssumptionViolated as exc:
        rep.result["unramified_at_infinity"] = None
        rep.warnings.append(str(exc))
        lines.append("infinity check: n/a (mixed reflection representatives)")
    _validation(d, rep)
    mus = {f"rho{h}": dihedral_multiplicity_mu_h(d, h) for h in dihedral_h_range(prof.n)}
    rep.result["mu_h"] = mus
    lines.append(_table([["h", "mu_h"]] + [[k[3:], str(v)] for k, v in mus.items()]))
    rep.text = "\n".join(lines)


def cmd_hurwitz(obj, args, rep):
    G = parse_group(obj["group"])
    if "entries" in obj:
        entries = tuple(parse_element(G, s) for s in obj["entries"])
    else:
        entries = tuple(parse_element(G, b["element"]) for b in obj.get("branches", []))
    t = HurwitzTuple(G, entries)
    try:
        census = hurwitz_orbit(t, max_orbit=args.max_orbit, max_group=args.max_group)
        complete = True
    except OrbitBudgetExceeded as exc:
        census, complete = exc.census, False
        rep.warnings.append(str(exc))
    classes, genus, mu = census.fingerprint
    rep.result.update(size=census.size, complete=complete,
                      fingerprint={"classes": list(classes), "genus": genus,
                                   "mu": list(mu) if mu is not None else None},
                      representative=[G.label(g) for g in census.representative],
                      members=[[G.label(g) for g in m] for m in census.members])
    rep.text = (f"orbit size {census.size}{'' if complete else ' (incomplete)'}\n"
                f"genus {genus}, mu {list(mu) if mu else None}\n"
                + "\n".join("  (" + ", ".join(G.label(g) for g in m) + ")" for m in census.members))


def cmd_char_table(obj, args, rep):
    G = parse_group(obj.get("group", obj))
    T = character_table(G, args.method)
    rep.result.update(T.records())
    rep.result["method"] = T.method
    rep.text = T.format()


COMMANDS = {
    "validate": cmd_validate, "genus": cmd_genus, "cw": cmd_cw, "support": cmd_support,
    "monodromy": cmd_monodromy, "quotient": cmd_quotient, "collide": cmd_collide,
    "dihedral-analyze": cmd_dihedral,
}
RAW_COMMANDS = {"hurwitz-orbits": cmd_hurwitz, "char-table": cmd_char_table}


def _table(rows):
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows)


def run_command(argv):
    """Returns (Report, exit code, diagnostic message or None)."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return Report("usage", {"argv": list(argv)}), EXIT_USAGE, str(exc)
    inputs = {k: v for k, v in vars(args).items() if k not in ("format",)}
    rep = Report(args.command, inputs, format=args.format)
    try:
        text = _read(args.file)
        if args.command in RAW_COMMANDS:
            RAW_COMMANDS[args.command](load_json(text), args, rep)
        else:
            COMMANDS[args.command](parse_datum_file(text), args, rep)
    except InvalidDatum as exc:
        rep.result.setdefault("valid", False)
        return rep, EXIT_INVALID, str(exc)
    except (UsageError, ParseError) as exc:
        return rep, EXIT_USAGE, str(exc)
    except (CoverError, IndexError, KeyError) as exc:
        return rep, EXIT_USAGE, f"{type(exc).__name__}: {exc}"
    return rep, EXIT_OK, None


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    rep, code, msg = run_command(argv)
    if msg:
        print(msg, file=sys.stderr)
    if rep.command != "usage":
        if rep.format == "json":
            print(json.dumps(rep.to_dict(), indent=2, sort_keys=True))
        elif rep.text:
            print(rep.text)
        for w in rep.warnings:
            print(f"warning: {w}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
