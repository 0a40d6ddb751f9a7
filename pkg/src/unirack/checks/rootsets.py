"""Symbolic root-set checks: support-escape combinatorics in simply-laced
systems, the twisted E6 reflection chains, and the twisted D-series
radical-intersection identities."""

import random

from ..chevalley import escape_psi, structure_constants, word
from ..gf import fq_make
from ..roots import Root, build_root_system
from .common import CheckSpec, expect, expect_eq


def _eps(dim, i, j=None, minus=False):
    c = [0] * dim
    c[i - 1] = 1
    if j is not None:
        c[j - 1] = -1 if minus else 1
    return Root(c)


def _apply_word(rs, mirrors, v):
    # mirrors read as a product acting on the left: rightmost acts first
    for m in reversed(mirrors):
        v = rs.reflect(m, v)
    return v


def _f_stable(rs, th, mirrors):
    """The reflection word commutes with the diagram symmetry as a map."""
    return all(
        th(_apply_word(rs, mirrors, r)) == _apply_word(rs, mirrors, th(r))
        for r in rs.positive_roots
    )


# -- twisted E6 ---------------------------------------------------------------


def e6_chains(q, seed=None):
    rs = build_root_system("E", 6)
    th = rs.diagram_automorphism(2)
    a = [None] + [rs.simple(i) for i in range(1, 7)]
    beta = a[1] + a[2] + a[3] + a[4]
    gamma = beta + a[5] + a[6]
    expect_eq(th(beta), a[2] + a[4] + a[5] + a[6], "symmetry image of beta")

    psi1 = rs.psi_pi((1, 3, 4, 5, 6))
    psi2 = rs.psi_pi((2, 3, 4, 5))
    expect_eq(
        psi1,
        {r for r in rs.positive_roots if rs.simple_coords(r)[1] > 0},
        "first radical set",
    )
    expect_eq(
        psi2,
        {r for r in rs.positive_roots if rs.simple_coords(r)[0] > 0 or rs.simple_coords(r)[5] > 0},
        "second radical set",
    )

    b = [beta]
    for i in (5, 4, 3):
        b.append(rs.reflect(i, b[-1]))
    g = [gamma]
    g.append(rs.reflect(4, g[0]))
    g.append(rs.reflect(3, g[1]))
    g.append(rs.reflect(5, g[1]))
    g4 = rs.reflect(5, g[2])
    expect_eq(g4, rs.reflect(3, g[3]), "two descents to the fourth chain root")
    g.append(g4)
    g.append(rs.reflect(4, g[4]))
    g.append(rs.reflect(2, g[5]))

    sigma = set(b)
    expect_eq(len(sigma), 4, "chain roots distinct")
    expect_eq(set(g), rs.psi_of(gamma), "gamma chain fills its upward set")
    inter = psi1 & psi2
    expect_eq(inter, rs.psi_of(beta) | rs.psi_of(th(beta)), "intersection as two upward sets")
    expect_eq(inter, sigma | {th(r) for r in sigma} | set(g), "intersection as chains")

    words = {0: [2], 1: [2], 2: [2, 4], 3: [2, 4, 5, 3]}
    for j, ww in words.items():
        expect(_f_stable(rs, th, ww), "escape word is not symmetry-stable")
        for target in (b[j], th(b[j])):
            img = _apply_word(rs, ww, target)
            expect(rs.is_positive(img) and img not in psi1, "escape image stays in the radical")
        expect(
            all(rs.is_positive(_apply_word(rs, ww, r)) for r in inter),
            "escape word leaves the positive system",
        )

    expect(rs.is_positive(gamma - a[2]) and (gamma - a[2]) not in psi1, "base escape for gamma")
    omegas = {1: [4], 2: [1, 6], 3: [1, 6], 4: [3, 5], 5: [4], 6: [2]}
    gset = set(g)
    for j, ww in omegas.items():
        expect(_f_stable(rs, th, ww), "descent word is not symmetry-stable")
        img = _apply_word(rs, ww, g[j])
        expect(
            img in {g[l] for l in range(j)} or (rs.is_positive(img) and img not in gset),
            "descent image neither earlier in the chain nor outside",
        )
        allowed = gset - {g[l] for l in range(j)}
        expect(
            all(rs.is_positive(_apply_word(rs, ww, r)) for r in allowed),
            "descent word leaves the positive system",
        )
    return {"sigma": len(sigma), "gamma_chain": len(g)}


# -- twisted D series ---------------------------------------------------------


def dn_identities(q, seed=None):
    ev = {}
    for n in range(4, 8):
        rs = build_root_system("D", n)
        th = rs.diagram_automorphism(2)
        # on the basis: the symmetry fixes the early epsilon vectors and
        # negates the last one; stated on roots via linearity
        for j in range(1, n):
            expect_eq(th(_eps(n, j, n, minus=True)), _eps(n, j, n), "symmetry on the last column")
        for i in range(1, n - 1):
            for j in range(i + 1, n):
                expect_eq(th(_eps(n, i, j, minus=True)), _eps(n, i, j, minus=True), "symmetry fixes early roots")

        pi1 = tuple(range(1, n - 1))
        pi2 = (n - 2, n - 1, n)
        expect_eq(
            rs.phi_pi(pi1),
            {_eps(n, i, j, minus=True) for i in range(1, n - 1) for j in range(i + 1, n)},
            "first Levi subsystem",
        )
        expect_eq(
            rs.phi_pi(pi2),
            {
                _eps(n, i, j, minus=m)
                for i in range(n - 2, n + 1)
                for j in range(i + 1, n + 1)
                for m in (False, True)
            },
            "second Levi subsystem",
        )
        expect_eq(
            rs.psi_pi(pi1),
            {_eps(n, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
            | {_eps(n, k, n, minus=True) for k in range(1, n)},
            "first radical set",
        )
        expect_eq(
            rs.psi_pi(pi2),
            {
                _eps(n, i, j, minus=m)
                for i in range(1, n - 2)
                for j in range(i + 1, n + 1)
                for m in (False, True)
            },
            "second radical set",
        )
        inter = rs.psi_pi(pi1) & rs.psi_pi(pi2)
        expect_eq(
            inter,
            {_eps(n, i, j) for i in range(1, n - 2) for j in range(i + 1, n + 1)}
            | {_eps(n, i, n, minus=True) for i in range(1, n - 2)},
            "radical intersection",
        )

        # case moves from the escape argument, verified on the whole set
        for i in range(1, n - 2):
            mirror = _eps(n, i, n - 2, minus=True)
            expect(
                all(rs.is_positive(rs.reflect(mirror, r)) for r in inter),
                "first-case reflection leaves the positive system",
            )
            expect_eq(
                rs.reflect(mirror, _eps(n, i, n, minus=True)),
                _eps(n, n - 2, n, minus=True),
                "first-case image",
            )
        expect(_eps(n, n - 2, n, minus=True) in rs.phi_pi(pi2), "first-case image meets the Levi")

        # top column: swap the sign of the last coordinate inside the Levi
        ww = [_eps(n, n - 1, n, minus=True), _eps(n, n - 1, n)]
        for k in range(1, n - 2):
            expect_eq(
                _apply_word(rs, ww, _eps(n, k, n)),
                _eps(n, k, n, minus=True),
                "top-column image",
            )
        expect(
            all(rs.is_positive(_apply_word(rs, ww, r)) for r in inter),
            "top-column word leaves the positive system",
        )

        # next column lands inside the first Levi subsystem
        mirror = _eps(n, n - 2, n - 1)
        for k in range(1, n - 2):
            img = rs.reflect(mirror, _eps(n, k, n - 1))
            expect_eq(img, _eps(n, k, n - 2, minus=True), "second-column image")
            expect(img in rs.phi_pi(pi1), "second-column image meets the Levi")

        # lower columns shift upward
        for ell in range(2, n - 2):
            mirror = _eps(n, ell, n - 1, minus=True)
            for k in range(1, ell):
                expect_eq(
                    rs.reflect(mirror, _eps(n, k, ell)),
                    _eps(n, k, n - 1),
                    "column-shift image",
                )
            shifted = {rs.reflect(mirror, r) for r in inter if rs.simple_coords(r)}
            expect(
                all(rs.is_positive(r) for r in shifted),
                "column-shift leaves the positive system",
            )
        ev[f"D{n}"] = len(inter)
    return ev


# -- parabolic radical intersections ------------------------------------------


def psi_intersections(q, seed=None):
    ev = {}
    for n in range(4, 8):
        rs = build_root_system("D", n)
        beta = rs.simple(n - 2) + rs.simple(n - 1) + rs.simple(n)
        pis = [tuple(i for i in range(1, n + 1) if i != n - 1), tuple(range(1, n))]
        inter = set.intersection(*(rs.psi_pi(pi) for pi in pis))
        expect_eq(inter, rs.psi_of(beta), f"D{n} radical intersection")
        ev[f"D{n}"] = len(inter)
    for n, drop in ((6, (1, 6, 2)), (7, (1, 7, 2)), (8, (1, 8, 2))):
        rs = build_root_system("E", n)
        beta = rs.from_simple_coords([1] * n)
        pis = [tuple(i for i in range(1, n + 1) if i != d) for d in drop]
        inter = set.intersection(*(rs.psi_pi(pi) for pi in pis))
        expect_eq(inter, rs.psi_of(beta), f"E{n} radical intersection")
        ev[f"E{n}"] = len(inter)
    return ev


def escape_psi_random(q, seed=None):
    rng = random.Random(seed if seed is not None else 0)
    p = 2 if q % 2 == 0 else 3
    field = fq_make(p, 1) if q in (2, 3) else fq_make(p, 2)
    ev = {}
    for kind, rank in (("D", 4), ("E", 6)):
        sc = structure_constants(kind, rank)
        rs = sc.rs
        betas = [r for r in rs.positive_roots if r not in rs.simple_roots]
        units = [c for c in field.elements() if c]
        n = 0
        for _ in range(1000):
            beta = rng.choice(betas)
            psi = sorted(rs.psi_of(beta), key=rs._order_key)
            k = rng.randint(1, min(4, len(psi)))
            factors = [(r, rng.choice(units)) for r in rng.sample(psi, k)]
            w = word(sc, field, *factors)
            if w.is_identity():
                continue
            ww, out = escape_psi(w, beta)
            expect(not out.support() <= rs.psi_of(beta), "escape left support inside the set")
            n += 1
        ev[f"{kind}{rank}"] = n
    return ev


CHECKS = [
    CheckSpec("roots.2e6.chains", "twisted E6 reflection chains and radical intersection", (2, 3), 10, e6_chains),
    CheckSpec("roots.dn.identities", "twisted D-series radical identities and case moves", (2, 3), 10, dn_identities),
    CheckSpec("roots.psi-intersections", "parabolic radical intersections are upward sets", (2, 3), 10, psi_intersections),
    CheckSpec("roots.escape-psi", "support escape succeeds on random inputs", (2, 3), 60, escape_psi_random),
]
