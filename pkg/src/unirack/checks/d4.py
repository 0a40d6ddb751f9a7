"""Named checks for unipotent classes in the triality-twisted D4 groups.

Witness certificates here avoid large closures: class separation inside the
unipotent subgroup is certified by coefficient invariants (the low-letter
coordinates of a witness are unchanged by unipotent conjugation, which is
checked mechanically on every letter generator), and non-commutation by a
named twisted coordinate of the two products.
"""

from ..chevalley import conj_by_weyl
from ..matgrp import Mat
from ..rack import product_rack_type_d
from ..twisted_d4 import twisted_d4
from .common import CheckFailure, CheckSpec, expect, expect_eq
from .recipes import run_locator


def _letter_words(td, roots=None):
    out = []
    for r in roots if roots is not None else td.letters:
        fixed = td.theta(r) == r
        vals = td.subfield_elements() if fixed else td.field.elements()
        for c in vals:
            if c:
                out.append(td.x(r, c) if fixed else td.y(r, c))
    return out


def _coords(td, w):
    return td.twisted_coords(w)


def _prefix(td, w, roots):
    coords = _coords(td, w)
    return tuple(coords[r] for r in roots)


def _expect_prefix_stable(td, witnesses, roots, letters):
    """The named twisted coordinates are invariants of letter conjugation,
    hence of the whole unipotent subgroup the letters generate."""
    prefixes = []
    for w in witnesses:
        p = _prefix(td, w, roots)
        for g in letters:
            expect_eq(_prefix(td, g * w * g.inv(), roots), p, "conjugation-stable prefix")
        prefixes.append(p)
    expect(
        all(prefixes[i] != prefixes[j] for i in range(len(prefixes)) for j in range(i + 1, len(prefixes))),
        "witness prefixes are not pairwise distinct",
    )
    return prefixes


def _expect_pairwise_moved(witnesses):
    n = len(witnesses)
    for i in range(n):
        for j in range(n):
            if i != j:
                expect(witnesses[i] * witnesses[j] != witnesses[j] * witnesses[i], "witnesses commute")


# -- the commutation identities ---------------------------------------------


def d4_relations(q, seed=None):
    td = twisted_d4(q)
    f = td.field
    a1, a2 = td.alpha[0], td.alpha[1]
    g2r, g3r, g4r = td.gamma[2], td.gamma[3], td.gamma[4]
    delta = td.delta
    ext = [c for c in f.elements() if c]
    sub = [c for c in td.subfield_elements() if c]
    qq = q * q
    counts = {}
    y1 = {c.idx: td.y(a1, c) for c in ext}
    y2 = {c.idx: td.y(g2r, c) for c in ext}
    y3 = {c.idx: td.y(g3r, c) for c in ext}
    pw = {c.idx: (c**q, c**qq) for c in ext}

    n = 0
    for b in ext:
        bq, bqq = pw[b.idx]
        for c in ext:
            cq, cqq = pw[c.idx]
            lhs = y2[b.idx] * y1[c.idx]
            rhs = (
                y1[c.idx]
                * y2[b.idx]
                * td.y(g3r, b * cq + c * bq)
                * td.x(g4r, -(b * cqq * cq + bq * cqq * c + bqq * cq * c))
                * td.x(delta, -(c * bqq * bq + cq * bqq * b + cqq * bq * b))
            )
            if lhs != rhs:
                raise CheckFailure(f"two-letter relation fails at b={b}, c={c}")
            n += 1
    counts["g2-a1"] = n

    n = 0
    for b in ext:
        bq, bqq = pw[b.idx]
        for c in ext:
            cq, cqq = pw[c.idx]
            corr = cq * b + cqq * bq + c * bqq
            lhs = y1[b.idx] * y3[c.idx]
            rhs = y3[c.idx] * y1[b.idx] * td.x(g4r, corr)
            if lhs != rhs:
                raise CheckFailure(f"a1-g3 relation fails at b={b}, c={c}")
            lhs = y2[b.idx] * y3[c.idx]
            rhs = y3[c.idx] * y2[b.idx] * td.x(delta, corr)
            if lhs != rhs:
                raise CheckFailure(f"g2-g3 relation fails at b={b}, c={c}")
            n += 1
    counts["a1-g3"] = counts["g2-g3"] = n

    # the last two relations are characteristic-sensitive: in odd
    # characteristic the exact identities pick up a sign on the top letter
    # and one correction letter (the even-characteristic display is the
    # odd form with all signs collapsed and the cross term rewritten)
    odd = q % 2 == 1
    sd = -f.one if odd else f.one

    n = 0
    for d in sub:
        for e in sub:
            lhs = td.x(a2, d) * td.x(g4r, e)
            rhs = td.x(g4r, e) * td.x(a2, d) * td.x(delta, sd * d * e)
            if lhs != rhs:
                raise CheckFailure(f"a2-g4 relation fails at d={d}, e={e}")
            n += 1
    counts["a2-g4"] = n

    n = 0
    for b in ext:
        for d in sub:
            lhs = td.y(a1, b) * td.x(a2, d)
            rhs = (
                td.x(a2, d)
                * td.y(a1, b)
                * td.y(g2r, b * d)
                * td.y(g3r, d * b ** (q + 1))
                * td.x(g4r, sd * d * b ** (qq + q + 1))
            )
            if odd:
                rhs = rhs * td.x(delta, d * d * b ** (qq + q + 1))
            if lhs != rhs:
                raise CheckFailure(f"a1-a2 relation fails at b={b}, d={d}")
            n += 1
    counts["a1-a2"] = n
    counts["odd_form"] = int(odd)
    return counts


# -- odd q --------------------------------------------------------------------


def d4_odd_witness(q, seed=None):
    td = twisted_d4(q)
    f = td.field
    a1, g2r, g3r = td.alpha[0], td.gamma[2], td.gamma[3]
    a = next(c for c in f.elements() if not td.in_subfield(c))
    r = td.y(a1, f.one) * td.y(g2r, a)
    expect(td.is_f_invariant(r), "witness not F-invariant")
    xi = f.zeta
    eta = xi ** (q - 1)
    s = td.torus_conj(r, eta)
    expect_eq(s, td.y(a1, eta * eta) * td.y(g2r, a * eta * eta), "displayed torus conjugate")
    rs, sr = r * s, s * r
    e2 = eta * eta
    c_rs = _coords(td, rs)[g3r]
    c_sr = _coords(td, sr)[g3r]
    expect_eq(c_rs, a * eta ** (2 * q) + a**q * e2, "product coefficient")
    expect_eq(c_sr, a**q * eta ** (2 * q) + a * e2, "reversed product coefficient")
    expect((a**q - a) * (eta ** (2 * q) - e2) != f.zero, "coefficients coincide")
    expect(rs * rs != sr * sr, "(rs)^2 = (sr)^2")
    letters = _letter_words(td)
    _expect_prefix_stable(td, [r, s], (a1,), letters)
    return {"eta_sq": repr(e2), "coeff_gap": repr(c_rs - c_sr)}


def d4_odd_u_product(q, seed=None):
    td = twisted_d4(q)
    f = td.field
    squares = {c * c for c in f.units()}
    zeta = next(c for c in f.units() if c not in squares)
    u = td.x(td.alpha[1], f.one) * td.y(td.gamma[3], zeta)
    expect(td.is_f_invariant(u), "representative not F-invariant")
    # product-rack witnesses: a non-flat pair in the rank-1 group over the
    # base field, a commuting distinct pair in the one over the extension
    sub = td.subfield
    x1 = Mat.from_int_rows(sub, [[1, 1], [0, 1]])
    sigma = Mat.from_int_rows(sub, [[0, 1], [-1, 0]])
    x2 = sigma * x1 * sigma.inv()
    a = next(c for c in f.units() if c * c != f.one)
    y1 = Mat(f, [[f.one, f.one], [f.zero, f.one]])
    t = Mat(f, [[a, f.zero], [f.zero, a.inv()]])
    y2 = t * y1 * t.inv()
    expect_eq(y2, Mat(f, [[f.one, a * a], [f.zero, f.one]]), "commuting class member")
    expect(product_rack_type_d(x1, x2, y1, y2), "product-rack criterion fails")
    return {"zeta": repr(zeta), "a_sq": repr(a * a)}


# -- even q, the sixth family -------------------------------------------------


def d4_u7_typef(q, seed=None):
    td = twisted_d4(q)
    f = td.field
    a1, g2r, g3r = td.alpha[0], td.gamma[2], td.gamma[3]
    a = next(c for c in f.elements() if not td.in_subfield(c))
    u7 = td.y(a1, f.one) * td.y(g2r, a)
    xis = td.c_mod_d_representatives(4)
    rs = []
    for xi in xis:
        ri = td.torus_conj(u7, xi)
        expect_eq(ri, td.y(a1, xi * xi) * td.y(g2r, a * xi * xi), "displayed torus conjugate")
        rs.append(ri)
    letters = _letter_words(td)
    _expect_prefix_stable(td, rs, (a1,), letters)
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            ci = _coords(td, rs[i] * rs[j])[g3r]
            cj = _coords(td, rs[j] * rs[i])[g3r]
            expect(ci != cj, "named product coefficients coincide")
    return {"coset_reps": len(xis)}


# -- q = 2 class-by-class -----------------------------------------------------


def _u_checks_gt2(locator, q):
    return run_locator(locator, q)


def d4_u1(q, seed=None):
    if q > 2:
        return _u_checks_gt2("d4.q2.u1", q)
    td = twisted_d4(q)
    rs = td.rs
    a2, g4r, delta = td.alpha[1], td.gamma[4], td.delta
    # the element sits in a rank-2 subgroup of type A2 where it is a root
    # element, hence has partition (2,1) and is not regular
    expect(delta - a2 == g4r and rs.is_root(g4r), "rank-2 subsystem shape")
    expect(not rs.is_root(delta + a2) and not rs.is_root(delta + g4r), "subsystem not closed")
    from ..chevalley import structure_constants, word
    from ..matgrp import chev_to_matrix, jordan_partition

    a2sc = structure_constants("A", 2)
    wa = word(a2sc, td.subfield, (a2sc.rs.simple(1) + a2sc.rs.simple(2), td.subfield.one))
    part = jordan_partition(chev_to_matrix("A", wa))
    expect_eq(part, (2, 1), "rank-2 partition")
    return {"partition": part}


def _u2_xi(td):
    f = td.field
    xi = next(c for c in f.units() if c**3 == c + f.one)
    roots = {c for c in f.units() if c**4 + c**2 + c == f.zero}
    expect_eq(roots, {xi, xi**2, xi**4}, "quartic root set")
    return xi, roots


def d4_u2(q, seed=None):
    if q > 2:
        return _u_checks_gt2("d4.q2.u2", q)
    td = twisted_d4(q)
    f = td.field
    a1, g3r, g4r, delta = td.alpha[0], td.gamma[3], td.gamma[4], td.delta
    xi, roots = _u2_xi(td)
    r = td.y(a1, f.one) * td.y(g3r, f.one) * td.x(delta, f.one)
    witnesses = []
    for i in range(1, 5):
        ri = td.torus_conj(r, xi**i)
        expect_eq(
            ri,
            td.y(a1, xi ** (2 * i)) * td.y(g3r, xi ** (6 * i)) * td.x(delta, f.one),
            "displayed torus conjugate",
        )
        witnesses.append(ri)
    letters = _letter_words(td, td.radical_letters((1, 3, 4)))
    _expect_prefix_stable(td, witnesses, (a1,), letters)
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            cij = _coords(td, witnesses[i] * witnesses[j])[g4r]
            cji = _coords(td, witnesses[j] * witnesses[i])[g4r]
            d = xi ** (j - i)
            if d in roots:
                expect_eq((cij, cji), (f.zero, f.one), "coefficient trichotomy")
            else:
                expect_eq((cij, cji), (f.one, f.zero), "coefficient trichotomy")
            expect(witnesses[i] * witnesses[j] != witnesses[j] * witnesses[i], "witnesses commute")
    return {"xi": repr(xi)}


def d4_u3(q, seed=None):
    if q > 2:
        return _u_checks_gt2("d4.q2.u3", q)
    td = twisted_d4(q)
    f = td.field
    a1, a2, g2r, g3r, g4r = td.alpha[0], td.alpha[1], td.gamma[2], td.gamma[3], td.gamma[4]
    r1 = td.y(g3r, f.one)
    r2 = conj_by_weyl(r1, [1, 3, 4])
    expect_eq(r2, td.y(g2r, f.one), "reflection conjugate")
    r3 = conj_by_weyl(r2, [2])
    expect_eq(r3, td.y(a1, f.one), "reflection conjugate")
    g = td.x(a2, f.one)
    r4 = g * r3 * g.inv()
    expect_eq(
        r4,
        td.y(a1, f.one) * td.y(g2r, f.one) * td.y(g3r, f.one) * td.x(g4r, f.one),
        "displayed letter conjugate",
    )
    witnesses = [r1, r2, r3, r4]
    letters = _letter_words(td, td.radical_letters((2,)))
    _expect_prefix_stable(td, witnesses, (a1, g2r), letters)
    _expect_pairwise_moved(witnesses)
    return {"witnesses": 4}


def d4_u4(q, seed=None):
    if q > 2:
        return _u_checks_gt2("d4.q2.u4", q)
    td = twisted_d4(q)
    f = td.field
    a1, a2, g2r, g3r, g4r = td.alpha[0], td.alpha[1], td.gamma[2], td.gamma[3], td.gamma[4]
    xi, _ = _u2_xi(td)
    u4 = td.y(g2r, f.one) * td.y(g3r, f.one)
    r1 = td.torus_conj(u4, xi**3)
    expect_eq(r1, td.y(g2r, xi**6) * td.y(g3r, xi**4), "displayed torus conjugate")
    r2 = td.x(a2, f.one) * td.y(g3r, f.one) * td.x(g4r, f.one)
    r3 = td.y(a1, f.one) * td.y(g3r, f.one)
    r4 = td.torus_conj(r3, xi)
    expect_eq(r4, td.y(a1, xi**2) * td.y(g3r, xi**-1), "displayed torus conjugate")
    witnesses = [r1, r2, r3, r4]
    letters = _letter_words(td)
    _expect_prefix_stable(td, witnesses, (a1, a2), letters)
    _expect_pairwise_moved(witnesses)
    return {"witnesses": 4}


def d4_u56(q, seed=None):
    if q > 2:
        return _u_checks_gt2("d4.q2.u56", q)
    td = twisted_d4(q)
    f = td.field
    a1, a2, g2r, g3r = td.alpha[0], td.alpha[1], td.gamma[2], td.gamma[3]
    xis = td.cyclic_c_elements()[:4]
    ev = {}
    for eps in (f.zero, f.one):
        x = td.y(a1, f.one) * td.x(a2, f.one)
        if eps:
            x = x * td.y(g3r, eps)
        witnesses = []
        for xi in xis:
            ri = td.torus_conj(x, xi)
            want = td.y(a1, xi * xi) * td.x(a2, f.one)
            if eps:
                want = want * td.y(g3r, eps * xi ** (1 + q - q * q))
            expect_eq(ri, want, "displayed torus conjugate")
            witnesses.append(ri)
        letters = _letter_words(td)
        _expect_prefix_stable(td, witnesses, (a1, a2), letters)
        for i in range(4):
            for j in range(4):
                if i == j:
                    continue
                c = _coords(td, witnesses[i] * witnesses[j])[g2r]
                expect(c in (xis[i] ** 2, xis[j] ** 2), "named product coefficient")
                expect(
                    witnesses[i] * witnesses[j] != witnesses[j] * witnesses[i],
                    "witnesses commute",
                )
        ev[f"eps={eps}"] = 4
    return ev


CHECKS = [
    CheckSpec("d4.relations", "twisted commutation identities over the cubic extension", (2, 3, 4), 60, d4_relations),
    CheckSpec("d4.odd.witness", "odd-q torus witness pair for the two-letter class", (3, 5), 30, d4_odd_witness),
    CheckSpec("d4.odd.u-product", "odd-q product-rack witnesses for the mixed class", (3, 5), 30, d4_odd_u_product),
    CheckSpec("d4.even.u7.typef", "even-q coset-torus quadruple for the two-letter class", (2, 4), 60, d4_u7_typef),
    CheckSpec("d4.q2.u1", "central root element sits in a rank-2 subgroup, partition (2,1)", (2, 4), 30, d4_u1),
    CheckSpec("d4.q2.u2", "torus quadruple with the quartic coefficient trichotomy", (2, 4), 30, d4_u2),
    CheckSpec("d4.q2.u3", "reflection-and-letter quadruple for the orbit-letter class", (2, 4), 30, d4_u3),
    CheckSpec("d4.q2.u4", "mixed quadruple separated by the two lowest coordinates", (2, 4), 30, d4_u4),
    CheckSpec("d4.q2.u56", "torus quadruples for both mixed families", (2, 4), 60, d4_u56),
]
