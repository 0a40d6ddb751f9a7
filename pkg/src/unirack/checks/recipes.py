"""Executor for the catalog's witness recipes.

Each catalog row names a recipe; executing it literally certifies the row's
expected verdict.  Rows whose recipe is ``check(ID)`` or ``austere(ID)``
are certified by the dedicated check of that name and are skipped here.
"""

from collections import deque

from ..catalog import all_bindings, instantiate, load_catalog, q_admissible, audit
from ..chevalley import (
    alpha_beta_property,
    conj_by_reflection,
    conj_by_weyl,
    project_levi,
    structure_constants,
    word,
)
from ..matgrp import chev_to_matrix, jordan_partition
from ..twisted_d4 import twisted_d4
from .common import CheckFailure, CheckSpec, ConfigError, expect, expect_eq


def _split_args(part):
    # top-level commas only; bracketed root literals keep their comma
    out, buf, depth = [], [], 0
    for ch in part:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(buf).strip())
            buf = []
        else:
            buf.append(ch)
    if buf:
        out.append("".join(buf).strip())
    return tuple(out)


def _parse_recipe(text):
    name, _, rest = text.partition("(")
    if rest.endswith(")"):
        rest = rest[:-1]
    parts = [p for p in rest.split(";") if p] if rest else []
    return name, [_split_args(p) for p in parts]


def _parts_of(tokens):
    return tuple(sorted((int(t) for t in tokens), reverse=True))


def _a2_jordan(w, sub_pos):
    """Map a word supported on a rank-2 subsystem onto SL3 and take its
    Jordan partition; valid in even characteristic or for unit coefficients
    up to sign (the partition only sees the support pattern there)."""
    b1, b2 = sub_pos
    a2sc = structure_constants("A", 2)
    a2rs = a2sc.rs
    image = {b1: a2rs.simple(1), b2: a2rs.simple(2), b1 + b2: a2rs.simple(1) + a2rs.simple(2)}
    factors = []
    for r, c in w.factors:
        if r not in image:
            raise CheckFailure("support leaves the rank-2 subsystem")
        factors.append((image[r], c))
    f = w.field
    target = a2sc
    from ..chevalley import ChevWord

    w2 = ChevWord(target, f, factors)
    return jordan_partition(chev_to_matrix("A", w2))


def _weyl_word_to(rs, start, target):
    """Shortest positive-system-preserving reflection word moving start to
    target, or None."""
    seen = {start}
    dq = deque([(start, ())])
    while dq:
        cur, path = dq.popleft()
        if cur == target:
            return list(path)
        for i in range(1, rs.rank + 1):
            img = rs.reflect(i, cur)
            if rs.is_positive(img) and img not in seen:
                seen.add(img)
                dq.append((img, path + (i,)))
    return None


def _c3_jordan(w):
    """Project to the Levi on the last three nodes, transport to the rank-3
    symplectic system, and take the Jordan partition there."""
    rs = w.sc.rs
    z = project_levi(w, (2, 3, 4))
    c3sc = structure_constants("C", 3)
    c3rs = c3sc.rs
    factors = []
    for r, c in z.factors:
        c1, c2, c3, c4 = rs.simple_coords(r)
        if c1:
            raise CheckFailure("projection left a first-node component")
        factors.append((c3rs.from_simple_coords((c4, c3, c2)), c))
    from ..chevalley import ChevWord

    w2 = ChevWord(c3sc, w.field, factors)
    return jordan_partition(chev_to_matrix("C", w2))


def execute_recipe(d, w, q):
    """Run one recipe on an instantiated representative; raises CheckFailure
    on any mismatch, returns a short outcome tag."""
    rs = w.sc.rs if hasattr(w, "sc") else None
    name, args = _parse_recipe(d.recipe)

    if name in ("check", "austere"):
        return f"deferred:{args[0][0]}"

    if name == "regular":
        expect(q not in (2, 4), "regularity argument needs q outside {2, 4}")
        supp = w.support()
        expect(
            all(s in supp for s in rs.simple_roots),
            "representative is not regular (missing a simple-root letter)",
        )
        return "regular"

    if name == "upsilon":
        td = twisted_d4(q)
        coords = td.twisted_coords(w)
        expect(
            all(td.in_subfield(c) for c in coords.values()),
            "twisted coordinates leave the base field",
        )
        return "upsilon"

    if name == "sub-a2":
        b1, b2 = (rs.parse_root(t) for t in args[0])
        got = _a2_jordan(w, (b1, b2))
        expect_eq(got, _parts_of(args[1]), "rank-2 subsystem partition")
        return "sub-a2"

    if name == "root-a2":
        (target_t,) = args[0]
        b1, b2 = (rs.parse_root(t) for t in args[1])
        parts = _parts_of(args[2])
        (root, _c), = w.factors
        ww = _weyl_word_to(rs, root, rs.parse_root(target_t))
        expect(ww is not None, "no reflection word reaches the target root")
        w2 = conj_by_weyl(w, ww)
        got = _a2_jordan(w2, (b1, b2))
        expect_eq(got, parts, "rank-2 subsystem partition")
        return "root-a2"

    if name == "in-levi":
        pi = tuple(int(t) for t in args[0])
        expect(w.support() <= rs.phi_pi(pi), "support leaves the Levi subsystem")
        return "in-levi"

    if name == "weyl-into-levi":
        mirrors = [rs.parse_root(t) for t in args[0]]
        pi = tuple(int(t) for t in args[1])
        w2 = w
        # mirror list reads as a product acting on the left: rightmost first
        for mr in reversed(mirrors):
            w2 = conj_by_reflection(w2, mr)
        expect(w2.support() <= rs.phi_pi(pi), "conjugated support leaves the Levi subsystem")
        return "weyl-into-levi"

    if name == "alpha-beta":
        a, b = (rs.parse_root(t) for t in args[0])
        supp = w.support()
        if a not in supp or b not in supp:
            # degenerate binding: the element falls into a smaller class
            # certified by another row (its adjoint partition drops)
            return "skipped"
        expect(alpha_beta_property(w, a, b), "alpha-beta property fails")
        return "alpha-beta"

    if name == "levi-alpha-beta":
        pi = tuple(int(t) for t in args[0])
        a, b = (rs.parse_root(t) for t in args[1])
        y = project_levi(w, pi)
        expect(not y.is_identity(), "Levi projection is trivial")
        expect(alpha_beta_property(y, a, b), "alpha-beta property fails after projection")
        return "levi-alpha-beta"

    if name == "sub-alpha-beta":
        kind, rank = args[0][0], int(args[0][1])
        a_t, b_t = args[1]
        sub = structure_constants(kind, rank)
        subrs = sub.rs
        factors = []
        for r, c in w.factors:
            if not subrs.is_root(r):
                raise CheckFailure("support leaves the stated subsystem")
            factors.append((r, c))
        from ..chevalley import ChevWord

        w2 = ChevWord(sub, w.field, factors)
        a, b = subrs.parse_root(a_t), subrs.parse_root(b_t)
        expect(alpha_beta_property(w2, a, b), "alpha-beta property fails in the subsystem")
        return "sub-alpha-beta"

    if name == "c3-partition":
        expect_eq(_c3_jordan(w), _parts_of(args[0]), "symplectic Levi partition")
        return "c3-partition"

    if name == "weyl-c3":
        mirrors = [rs.parse_root(t) for t in args[0]]
        parts = _parts_of(args[1])
        w2 = w
        for mr in mirrors:
            w2 = conj_by_reflection(w2, mr)
        expect_eq(_c3_jordan(w2), parts, "symplectic Levi partition after conjugation")
        return "weyl-c3"

    raise ConfigError(f"unknown recipe {name!r}")


def run_locator(locator, q):
    """Execute every non-deferred catalog recipe carrying the given locator
    at field size q, over all admissible slot bindings."""
    ev = {}
    found = False
    for d in load_catalog():
        if d.locator != locator or not q_admissible(d.q_constraint, q):
            continue
        found = True
        name, _ = _parse_recipe(d.recipe)
        if name in ("check", "austere"):
            continue
        n = 0
        for b in all_bindings(d, q):
            w = instantiate(d, q, b)
            if execute_recipe(d, w, q) != "skipped":
                n += 1
        expect(n > 0, f"no usable binding for {d.ident}")
        ev[f"{d.group}.{d.name}"] = n
    if not found:
        raise ConfigError(f"no catalog rows carry locator {locator!r} at q={q}")
    return ev


def catalog_audit(q, seed=None):
    problems = audit()
    expect(not problems, "; ".join(problems) or "audit failed")
    return {"rows": len(load_catalog())}


def _locator_check(locator, summary, qs, budget):
    def fn(q, seed=None, _loc=locator):
        return run_locator(_loc, q)

    return CheckSpec(locator, summary, qs, budget, fn)


CHECKS = [
    _locator_check("f4.odd.reduce", "odd F4 small classes reduce to known subgroups", (5, 7, 9), 30),
    _locator_check("f4.odd.alphabeta", "odd F4 two-root classes are type D", (5, 7, 9), 60),
    _locator_check("f4.p3.alphabeta", "characteristic-3 extra F4 classes are type D", (3, 9), 30),
    _locator_check("f4.even.reduce", "even F4 root classes reduce to rank-2 subgroups", (2, 4), 10),
    _locator_check("f4.even.levi-c3", "even F4 classes with symplectic Levi partitions", (2, 4), 60),
    _locator_check("f4.even.b4", "even F4 classes certified inside the integral subsystem", (2, 4), 30),
    _locator_check("f4.even.levi-b3", "even F4 classes certified in the first-three-nodes Levi", (2, 4), 60),
    _locator_check("g2.odd.reduce", "odd rank-2 small classes reduce to a rank-2 subsystem", (5, 7), 10),
    _locator_check("g2.odd.alphabeta", "odd rank-2 two-root class is type D", (5, 7), 10),
    _locator_check("g2.odd.regular", "odd rank-2 regular class is regular", (5, 7), 10),
    _locator_check("g2.p3.reduce", "characteristic-3 rank-2 small classes reduce", (3, 9), 10),
    _locator_check("g2.p3.regular", "characteristic-3 rank-2 regular class is regular", (3, 9), 10),
    _locator_check("g2.even.reduce", "even rank-2 long-root class reduces", (2, 4, 8), 10),
    _locator_check("g2.even.regular", "large even rank-2 regular classes are regular", (8,), 10),
    _locator_check("g2.even.alphabeta", "large even rank-2 two-root classes are type F", (8,), 10),
    _locator_check("d4.odd.upsilon", "odd twisted classes inside the rank-2 fixed subgroup", (3, 5), 30),
    CheckSpec("catalog.audit", "catalog matches its checked-in manifest", (2,), 5, catalog_audit),
]
