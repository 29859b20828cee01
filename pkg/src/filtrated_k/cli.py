"""Command-line front end.

Exit status is 0 when everything requested holds, 1 when a check fails and 2
on bad input.
"""

import argparse
import json
import sys

from .cohomology import graded_k_theory
from .errors import FiltratedKError
from .homological import (ext, free_resolution, is_exact, is_free, ss_groups, tor1_ss,
                          verify_resolution)
from .modfile import parse_module
from .module import generator_position
from .order_complex import relative_S
from .poset import (chain_poset, closure_ops, components, connected_lc_sets, d4_poset, format_poset,
                    is_locally_closed, min_open, open_sets, opposite, parse_label, parse_poset)
from .rings import ring_by_name
from .verify import TAGS, run_checks


class InputError(Exception):
    pass


def builtin_poset(name):
    if name.startswith("chain:"):
        try:
            return chain_poset(int(name[6:]))
        except ValueError:
            raise InputError(f"bad chain size in {name!r}")
    if name == "d4":
        return d4_poset()
    if name == "d4op":
        return opposite(d4_poset())
    raise InputError(f"unknown poset {name!r}; builtins are chain:<n>, d4, d4op")


def load_poset(args):
    if getattr(args, "poset", None):
        try:
            with open(args.poset) as fh:
                return parse_poset(fh.read())
        except OSError as e:
            raise InputError(str(e))
    if not args.space:
        raise InputError("give a builtin poset or --poset <file>")
    return builtin_poset(args.space)


def load_module(ring, path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(str(e))
    return parse_module(text, ring)


def _emit(args, text, data):
    if args.format == "machine":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


# poset commands -----------------------------------------------------------------

def cmd_space(args):
    P = load_poset(args)
    lc = connected_lc_sets(P)
    rows = []
    for Y in lc:
        c = closure_ops(P, Y.members)
        rows.append({"set": Y.label, "closure": c.cl.label, "closure_boundary": c.cl_boundary.label,
                     "up": c.up.label, "up_boundary": c.up_boundary.label})
    data = {
        "elements": list(P.elements),
        "covers": [list(p) for p in P.cover_pairs()],
        "open_sets": [U.label for U in open_sets(P)],
        "minimal_open": {x: min_open(P, x).label for x in P.elements},
        "connected_locally_closed": rows,
    }
    lines = [format_poset(P).rstrip(), "open sets: " + ", ".join(data["open_sets"]),
             "minimal open sets: " + ", ".join(f"U{x}={v}" for x, v in data["minimal_open"].items()),
             f"connected locally closed sets ({len(lc)}):"]
    for r in rows:
        lines.append(f"  {r['set']:<8} cl={r['closure']:<8} cl\\Y={r['closure_boundary']:<8} "
                     f"up={r['up']:<8} up\\Y={r['up_boundary']}")
    _emit(args, "\n".join(lines), data)
    return 0


def _hom_entry(P, Y, Z):
    total, flags = None, []
    for Yc in components(P, Y.members):
        for Zc in components(P, Z.members):
            r = graded_k_theory(relative_S(P, Yc.members, Zc.members))
            total = r.group if total is None else total + r.group
            flags.append(r.exactness)
    return total, "exact" if all(f == "exact" for f in flags) else "heuristic"


def cmd_homtable(args):
    P = load_poset(args)
    lc = connected_lc_sets(P)
    labels = [Y.label for Y in lc]
    table, flags = {}, {}
    for Y in lc:
        row_flag = "exact"
        for Z in lc:
            g, f = _hom_entry(P, Y, Z)
            table[(Y.label, Z.label)] = str(g)
            if f != "exact":
                row_flag = "heuristic"
        flags[Y.label] = row_flag
    width = max(len(s) for s in list(table.values()) + labels) + 1
    head = "Y\\Z".ljust(width) + "".join(z.ljust(width) for z in labels) + "flag"
    lines = [head]
    for y in labels:
        lines.append(y.ljust(width) + "".join(table[(y, z)].ljust(width) for z in labels) + flags[y])
    data = {"objects": labels, "rows": {y: {z: table[(y, z)] for z in labels} for y in labels},
            "flags": flags}
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_complex(args):
    P = load_poset(args)
    try:
        Y = parse_label(P, args.Y)
        Z = parse_label(P, args.Z)
    except FiltratedKError as e:
        raise InputError(str(e))
    for S in (Y, Z):
        if not S.members or not is_locally_closed(P, S.members):
            raise InputError(f"{S.label} is not a nonempty locally closed set")
    pair = relative_S(P, Y, Z)
    r = graded_k_theory(pair)
    fmt = lambda s: "(" + ",".join(s) + ")"
    total = [fmt(s) for s in pair.total.sorted()]
    sub = [fmt(s) for s in pair.sub.sorted()]
    rel = [fmt(s) for s in pair.relative_cells()]
    data = {"total": total, "sub": sub, "relative": rel, "cohomology": [str(h) for h in r.cohomology],
            "k_theory": str(r.group), "flag": r.exactness}
    lines = ["total: " + (" ".join(total) or "empty"), "sub:   " + (" ".join(sub) or "empty"),
             "relative cells: " + (" ".join(rel) or "none"),
             "cohomology: " + ", ".join(f"H^{q}={h}" for q, h in enumerate(r.cohomology)),
             f"K-theory: {r.group} ({r.exactness})"]
    _emit(args, "\n".join(lines), data)
    return 0


# module commands ----------------------------------------------------------------

def _spec_text(spec):
    return " + ".join(f"P{Y}" + ("[1]" if s else "") for Y, s in spec) or "0"


def cmd_module_check(args):
    ring = ring_by_name(args.ring)
    M = load_module(ring, args.module)
    ex = is_exact(M)
    fr = is_free(M)
    tor = tor1_ss(M)
    slots_free = M.has_free_slots()
    data = {"ring": ring.name, "slots": {o: str(g) for o, g in M.structures().items()},
            "exact": ex.exact, "exactness_failures": [list(f) for f in ex.failures],
            "free_slots": slots_free, "free": fr.is_free,
            "free_spec": [list(s) for s in fr.spec] if fr.is_free else None,
            "reason": fr.reason, "tor1_ss": str(tor),
            "ss": {o: str(g) for o, g in ss_groups(M).items()}}
    lines = [f"module over {ring.name}"]
    lines += [f"  {o}: {g}" for o, g in data["slots"].items()]
    lines.append(f"exact: {ex.exact} ({ex.checked} positions checked)")
    lines += [f"  fails at {pos} of triangle {t}, parity {p}" for t, pos, p in ex.failures]
    lines.append(f"free slots: {slots_free}")
    lines.append(f"Tor_1(ss, M): {tor}")
    lines.append(f"free: {fr.is_free}" + (f", M = {_spec_text(fr.spec)}" if fr.is_free else f" ({fr.reason})"))
    _emit(args, "\n".join(lines), data)
    return 0


def _generator_images(d):
    """Images of the generators of the source of a map of free modules."""
    F1, F0 = d.source, d.target
    R = F1.ring
    out = []
    for k in range(len(F1.free_spec)):
        (Y, s), j = generator_position(F1, k)
        col = [row[j] for row in d.at(Y, s)] if F0.n(Y, s + d.shift) else []
        terms = []
        for idx, c in enumerate(col):
            if c:
                k0, b = F0.gens[(Y, (s + d.shift) % 2)][idx]
                terms.append([c, R.basis[b].label, k0])
        out.append(terms)
    return out


def _format_image(terms):
    if not terms:
        return "0"
    parts = []
    for c, label, k0 in terms:
        coeff = "" if c == 1 else "-" if c == -1 else f"{c}*"
        parts.append(f"{coeff}{label}.g{k0}")
    return " + ".join(parts).replace("+ -", "- ")


def cmd_module_resolve(args):
    ring = ring_by_name(args.ring)
    M = load_module(ring, args.module)
    res = free_resolution(M, args.max_length)
    ok = res.complete and verify_resolution(res, M)
    data = {"ring": ring.name, "length": res.length, "complete": res.complete, "verified": ok,
            "modules": [[list(s) for s in spec] for spec in res.specs()],
            "maps": [_generator_images(d) for d in res.maps]}
    lines = []
    for i in range(res.length, -1, -1):
        lines.append(f"F{i} = {_spec_text(res.modules[i].free_spec)}")
        if i >= 1:
            for k, terms in enumerate(data["maps"][i - 1]):
                lines.append(f"  d{i}(g{k}) = {_format_image(terms)}")
    status = "complete" if res.complete else f"truncated at {args.max_length}"
    lines.append(f"length {res.length}, {status}, exactness verified: {ok}")
    _emit(args, "\n".join(lines), data)
    return 0 if ok else 1


def cmd_module_ext(args):
    ring = ring_by_name(args.ring)
    A = load_module(ring, args.a)
    B = load_module(ring, args.b)
    res = free_resolution(A, args.max_length)
    degrees = [args.degree] if args.degree is not None else list(range(res.length + 1))
    groups = {n: ext(A, B, n, args.max_length, res) for n in degrees}
    data = {"ring": ring.name, "ext": {str(n): str(g) for n, g in groups.items()}}
    if args.degree is not None:
        text = str(groups[args.degree])
    else:
        text = "\n".join(f"Ext^{n} = {g}" for n, g in groups.items())
    _emit(args, text, data)
    return 0


def cmd_verify(args):
    only = set(args.only) if args.only else None
    if only:
        unknown = [t for t in only if t not in TAGS and not t.isdigit()]
        if unknown:
            raise InputError(f"unknown tags {unknown}; choose from {', '.join(TAGS)}")
    checks = run_checks(only)
    ok = all(c.ok for c in checks)
    data = {"checks": [c.as_dict() for c in checks], "ok": ok}
    lines = []
    for c in checks:
        lines.append(c.line())
        lines += [f"    {d}" for d in c.details]
    lines.append(f"{sum(c.ok for c in checks)}/{len(checks)} passed")
    _emit(args, "\n".join(lines), data)
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="filtrated-k",
        description="Natural transformations of filtrated K-theory and their modules.",
        epilog="Poset files: 'cover a<b' puts a below b, meaning the closure of a lies inside the closure "
               "of b; open sets are the up-closed sets.  The four-point space d4 is "
               "'elements 1 2 3 4; cover 1<4, 2<4, 3<4', so {4} is its smallest open set.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "machine"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def poset_cmd(name, fn, help):
        p = sub.add_parser(name, parents=[fmt], help=help)
        p.add_argument("space", nargs="?", help="builtin poset: chain:<n>, d4, d4op")
        p.add_argument("--poset", help="poset file")
        p.set_defaults(fn=fn)
        return p

    poset_cmd("space", cmd_space, "open sets, locally closed sets and closures")
    poset_cmd("homtable", cmd_homtable, "table of natural transformation groups")
    p = poset_cmd("complex", cmd_complex, "relative pair of order complexes for (Y, Z)")
    p.add_argument("Y")
    p.add_argument("Z")

    p = sub.add_parser("module-check", parents=[fmt], help="exactness and freeness of a module")
    p.add_argument("ring")
    p.add_argument("module")
    p.set_defaults(fn=cmd_module_check)

    p = sub.add_parser("module-resolve", parents=[fmt], help="free resolution of a module")
    p.add_argument("ring")
    p.add_argument("module")
    p.add_argument("--max-length", type=int, default=8)
    p.set_defaults(fn=cmd_module_resolve)

    p = sub.add_parser("module-ext", parents=[fmt], help="Ext groups between two modules")
    p.add_argument("ring")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--degree", type=int)
    p.add_argument("--max-length", type=int, default=8)
    p.set_defaults(fn=cmd_module_ext)

    p = sub.add_parser("verify-paper", aliases=["verify"], parents=[fmt], help="run the reproduction checks")
    p.add_argument("--only", nargs="+", metavar="TAG", help=f"tags or numbers: {', '.join(TAGS)}")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, FiltratedKError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
