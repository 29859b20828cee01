"""Text format for modules.

::

    # comments start with '#'
    ring d4
    object 124
    even: Z gens a
    odd: 0
    object 1234
    even: Z^2 gens x y
    odd: 0
    action i(124,1234): [[1], [0]]

Each ``object`` block gives its even and odd groups as a sum of ``Z``, ``Z^n``
and ``Z/d`` terms followed by generator names: free generators first, then one
per torsion term in the order written.  Omitted objects are zero.  An action
matrix has one column per generator of the source (even then odd) and one row
per generator of the target (even then odd); blocks that would change parity
by something other than the morphism degree must vanish.  Omitted actions are
zero, except that over a ring presented by a quiver an omitted composite path
acts by the product of its arrows.
"""

import json
import re

from . import intmat
from .errors import ModuleValidationError, ParseError, SpecMismatch
from .groups import Presented
from .module import Module, PARITIES, simplify, validate_module
from .rings import ring_by_name

_GROUP_TERM = re.compile(r"^Z(?:\^(\d+)|/(\d+))?$")


def _parse_group(text, lineno):
    text = text.strip()
    names = []
    if " gens " in f" {text} ":
        text, _, rest = f" {text} ".partition(" gens ")
        names = rest.split()
        text = text.strip()
    if text in ("0", ""):
        free, tors = 0, []
    else:
        free, tors = 0, []
        for term in text.split("+"):
            m = _GROUP_TERM.match(term.strip())
            if not m:
                raise ParseError(f"cannot read group term {term.strip()!r}", lineno)
            power, order = m.groups()
            if order:
                if int(order) < 2:
                    raise ParseError("torsion orders must be at least 2", lineno)
                tors.append(int(order))
            else:
                free += int(power) if power else 1
    n = free + len(tors)
    if names and len(names) != n:
        raise ParseError(f"expected {n} generator names, got {len(names)}", lineno)
    return Presented.cyclic(tors, free), names or [f"g{i}" for i in range(n)]


def parse_module(text, ring=None):
    """Read a module; ``ring`` overrides the ``ring`` line when given."""
    ring_name = None
    slots, names = {}, {}
    pending = []
    current = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring "):
            ring_name = line[5:].strip()
        elif line.startswith("object "):
            current = line[7:].strip()
            if current in seen:
                raise ParseError(f"object {current} declared twice", lineno)
            seen.add(current)
        elif line.startswith("even:") or line.startswith("odd:"):
            if current is None:
                raise ParseError("group line outside an object block", lineno)
            p = 0 if line.startswith("even:") else 1
            slots[(current, p)], names[(current, p)] = _parse_group(line.split(":", 1)[1], lineno)
        elif line.startswith("action "):
            body = line[7:]
            cut = body.find(": [")
            if cut < 0:
                raise ParseError("action lines read 'action <label>: [[...]]'", lineno)
            label, mat = body[:cut].strip(), body[cut + 1:].strip()
            try:
                A = json.loads(mat)
            except ValueError:
                raise ParseError(f"bad matrix for {label}", lineno)
            if not isinstance(A, list) or not all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in A):
                raise ParseError(f"matrix for {label} must be a list of integer rows", lineno)
            pending.append((lineno, label, A))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if ring is None:
        if ring_name is None:
            raise ParseError("no ring given")
        ring = ring_by_name(ring_name)
    for (o, _) in slots:
        if o not in ring.objects:
            raise SpecMismatch(f"object {o!r} is not an object of {ring.name}")
    full = {(o, p): slots.get((o, p), Presented(0)) for o in ring.objects for p in PARITIES}
    actions = {}
    for lineno, label, A in pending:
        try:
            k = ring.index_of(label)
        except KeyError:
            raise ParseError(f"unknown basis morphism {label!r}", lineno)
        b = ring.basis[k]
        src = [full[(b.source, 0)].ngens, full[(b.source, 1)].ngens]
        tgt = [full[(b.target, 0)].ngens, full[(b.target, 1)].ngens]
        if len(A) != sum(tgt) or any(len(r) != sum(src) for r in A):
            if not (sum(tgt) == 0 and A == []):
                raise ParseError(f"matrix for {label} should be {sum(tgt)} x {sum(src)}", lineno)
        for p in PARITIES:
            q = (p + b.degree) % 2
            wrong = 1 - q
            r0 = 0 if wrong == 0 else tgt[0]
            c0 = 0 if p == 0 else src[0]
            for i in range(tgt[wrong]):
                for j in range(src[p]):
                    if A[r0 + i][c0 + j]:
                        raise ModuleValidationError(
                            f"line {lineno}: action of {label} changes parity by the wrong amount")
            r0 = 0 if q == 0 else tgt[0]
            block = [A[r0 + i][c0:c0 + src[p]] for i in range(tgt[q])]
            if k == ring.identities.get(b.source):
                G = full[(b.source, p)]
                for j, col in enumerate(intmat.transpose(block, G.ngens) if block else []):
                    e = [1 if t == j else 0 for t in range(G.ngens)]
                    if not G.is_trivial_element([x - y for x, y in zip(col, e)]):
                        raise ModuleValidationError(f"line {lineno}: identity must act as the identity")
                continue
            actions[(k, p)] = block
    given = {k for _, label, _ in pending for k in [ring.index_of(label)]}
    _derive_composites(ring, full, actions, given)
    M = Module(ring, full, actions)
    M.gen_names = {key: names.get(key, []) for key in full}
    validate_module(M)
    return M


def _derive_composites(ring, full, actions, given):
    paths = getattr(ring, "basis_paths", None)
    if paths is None:
        return
    index = {tuple(p): k for k, p in enumerate(paths)}
    for k, path in enumerate(paths):
        if len(path) < 2 or k in given:
            continue
        for p in PARITIES:
            obj, q = ring.basis[k].source, p
            A = intmat.identity(full[(obj, p)].ngens)
            for a in path:
                b = ring.basis[index[(a,)]]
                t = (q + b.degree) % 2
                n_in, n_out = full[(b.source, q)].ngens, full[(b.target, t)].ngens
                blk = actions.get((index[(a,)], q)) or intmat.zeros(n_out, n_in)
                A = intmat.mul(blk, A, n_out, n_in, full[(obj, p)].ngens)
                q = t
            actions[(k, p)] = A


def _format_group(G, names):
    free = sum(1 for r in range(G.ngens) if not any(rel[r] for rel in G.rels))
    tors = []
    for rel in G.rels:
        c = intmat.pivot_of(rel)
        tors.append(rel[c])
    parts = []
    if free == 1:
        parts.append("Z")
    elif free > 1:
        parts.append(f"Z^{free}")
    parts += [f"Z/{d}" for d in tors]
    text = " + ".join(parts) or "0"
    if G.ngens:
        text += " gens " + " ".join(names)
    return text


def format_module(M, ring_name=None):
    """Write M in the text format; slots are first brought to invariant-factor form."""
    N, _, _ = simplify(M)
    R = N.ring
    lines = [f"ring {ring_name or R.name}"]
    for o in R.objects:
        if N.n(o, 0) == 0 and N.n(o, 1) == 0:
            continue
        lines.append(f"object {o}")
        for p, word in ((0, "even"), (1, "odd")):
            G = N.slot(o, p)
            tag = f"{o}{'' if p == 0 else '_odd'}"
            names = [f"{tag}_{i}" for i in range(G.ngens)]
            lines.append(f"{word}: {_format_group(G, names)}")
    paths = getattr(R, "basis_paths", None)
    for k, b in enumerate(R.basis):
        if k == R.identities.get(b.source) or (paths is not None and len(paths[k]) > 1):
            continue
        src = [N.n(b.source, 0), N.n(b.source, 1)]
        tgt = [N.n(b.target, 0), N.n(b.target, 1)]
        if not sum(src) or not sum(tgt):
            continue
        A = intmat.zeros(sum(tgt), sum(src))
        nonzero = False
        for p in PARITIES:
            blk = N.actions.get((k, p))
            if not blk:
                continue
            q = (p + b.degree) % 2
            r0 = 0 if q == 0 else tgt[0]
            c0 = 0 if p == 0 else src[0]
            for i, row in enumerate(blk):
                for j, x in enumerate(row):
                    A[r0 + i][c0 + j] = x
                    nonzero = nonzero or bool(x)
        if nonzero:
            lines.append(f"action {b.label}: {json.dumps(A, separators=(', ', ': '))}")
    return "\n".join(lines) + "\n"
