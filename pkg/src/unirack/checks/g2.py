"""Verification checks for unipotent classes of the rank-2 exceptional group.

Roots are written in simple-root coordinates: a1 = [1,0] (short), a2 = [0,1]
(long); the positive roots are a1, a2, [1,1], [2,1], [3,1], [3,2].
"""

from ..chevalley import (
    TorusElem,
    conj_by_reflection,
    conj_by_torus,
    conj_by_weyl,
    structure_constants,
    word,
)
from ..gf import fq_make
from ..matgrp import Mat, chev_adjoint_matrix, weyl_rep_matrix
from ..rack import product_rack_type_d, type_c_orbit, type_c_pair, type_d_pair, type_f_quad
from .common import CheckSpec, ConfigError, expect, expect_eq, orbit_under


def _setup(q):
    sc = structure_constants("G", 2)
    p = 2 if q % 2 == 0 else (3 if q % 3 == 0 else q)
    m = 0
    n = 1
    while n < q:
        n *= p
        m += 1
    return sc, fq_make(p, m)


def _letter_conjugators(sc, f):
    return [word(sc, f, (r, c)) for r in sc.rs.positive_roots for c in f.units()]


# ---------------------------------------------------------------- q = 4


def regular_pair(q, seed=None):
    """The two regular classes at q = 4: torus-conjugate pairs with matching
    displayed squares, certified type C."""
    sc, f = _setup(q)
    z = f.zeta

    def w(*fs):
        return word(sc, f, *fs)

    t = TorusElem(sc.rs, [("a1", z)])
    cases = [
        (
            w(("a1", 1), ("a2", 1)),
            w(("a1", z * z), ("a2", 1)),
            w(("[3,1]", 1), ("[3,2]", 1), ("[2,1]", 1), ("[1,1]", 1)),
            w(("[3,1]", 1), ("[3,2]", 1), ("[2,1]", z), ("[1,1]", z * z)),
        ),
        (
            w(("a1", 1), ("a2", 1), ("[2,1]", z)),
            w(("a1", z * z), ("a2", 1), ("[2,1]", z * z)),
            w(("[3,1]", z * z), ("[3,2]", z * z), ("[2,1]", 1), ("[1,1]", 1)),
            w(("[3,1]", z * z), ("[3,2]", z * z), ("[2,1]", z), ("[1,1]", z * z)),
        ),
    ]
    ev = {}
    for k, (r, s, r2, s2) in enumerate(cases, 1):
        expect_eq(conj_by_torus(r, t), s, f"pair {k}: torus conjugate of r")
        expect_eq(r * r, r2, f"pair {k}: square of r")
        expect_eq(s * s, s2, f"pair {k}: square of s")
        ok, wit = type_c_pair(r, s)
        expect(ok, f"pair {k}: type C certificate failed")
        ev[f"pair{k}.subgroup"] = wit.subgroup_order
        ev[f"pair{k}.orbits"] = wit.evidence_dict()["orbit_sizes"]
    return ev


def comm_formula(q, seed=None):
    """The two-parameter commutation relations and the four-letter collection
    identity over GF(4), all tuples; the c = 0 branch is checked against the
    generic cubic coefficient."""
    sc, f = _setup(q)

    def w(*fs):
        return word(sc, f, *fs)

    a1, a2, g11, g21, g31, g32 = "a1", "a2", "[1,1]", "[2,1]", "[3,1]", "[3,2]"
    # pair relations x_r(a) x_s(b) = x_s(b) x_r(a) * tail
    rels = [
        (a1, a2, lambda a, b: [(g11, a * b), (g21, a * a * b), (g31, a**3 * b)]),
        (a1, g11, lambda a, b: [(g31, a * a * b), (g32, a * b * b)]),
        (a1, g21, lambda a, b: [(g31, a * b)]),
        (a2, g31, lambda a, b: [(g32, a * b)]),
        (g11, g21, lambda a, b: [(g32, a * b)]),
    ]
    for r, s, tail in rels:
        for a in f.elements():
            for b in f.elements():
                lhs = w((r, a), (s, b))
                rhs = w((s, b), (r, a), *tail(a, b))
                expect_eq(lhs, rhs, f"relation ({r},{s}) at a={f.fmt(a)}, b={f.fmt(b)}")
    checked = {"c_nonzero": 0, "c_zero": 0}
    for a in f.elements():
        for b in f.elements():
            for c in f.elements():
                for d in f.elements():
                    lhs = w((a1, a), (a2, b), (a1, c), (a2, d))
                    where = f"({f.fmt(a)},{f.fmt(b)},{f.fmt(c)},{f.fmt(d)})"
                    if c:
                        rhs = w(
                            (a1, a + c),
                            (a2, b + d),
                            (g31, b),
                            (g32, b * d),
                            (g21, c * c * b),
                            (g11, b * c),
                        )
                        # over GF(4) every unit is a cube root of one
                        expect_eq(c**3 * b, b, "cubic coefficient for c != 0")
                        expect_eq(lhs, rhs, f"collection identity at {where}")
                        checked["c_nonzero"] += 1
                    else:
                        # the c = 0 degeneration: both middle letters merge
                        expect_eq(lhs, w((a1, a), (a2, b + d)), f"degenerate case at {where}")
                        checked["c_zero"] += 1
    return checked


def q2_type_c(q, seed=None):
    """The short-root-plus class at q = 2 in the adjoint representation:
    the displayed conjugation identities and the orbit-level type C check."""
    sc, f = _setup(q)

    def A(*fs):
        return chev_adjoint_matrix(sc, f, fs)

    r = A(("[2,1]", 1))
    u = A(("a1", 1))
    n11 = weyl_rep_matrix(sc, f, "[1,1]")
    expect_eq(n11.conj(r), u, "reflection conjugate of r")
    s = A(("[-1,0]", 1)).conj(u)
    expect_eq(s, weyl_rep_matrix(sc, f, "a1"), "second witness as a reflection rep")
    z = A(("[1,1]", 1))
    expect(z != r, "z must differ from r")
    expect_eq(s.conj(r), z, "s conj r")
    expect_eq(z.conj(r), r * A(("[3,2]", 1)), "z conj r")
    expect_eq(r.conj(s), s * z * r, "r conj s")
    expect_eq(z.conj(s * z * r), s * A(("[3,2]", 1)), "z conj szr")
    ok, wit = type_c_orbit(r, s)
    expect(ok, "orbit-level type C certificate failed")
    return {
        "subgroup": wit.subgroup_order,
        "orbits": wit.evidence_dict()["orbit_sizes"],
    }


def _assert_orbit_in(sc, f, x, yset, label):
    orbit = orbit_under(x, _letter_conjugators(sc, f))
    expect(orbit <= yset, f"{label}: orbit leaves the displayed coset union")
    return orbit


def q4_type_f_family1(q, seed=None):
    """The q = 4 short-root-pair class: four torus conjugates with orbits
    inside the displayed coset unions, certified type F."""
    sc, f = _setup(q)
    z = f.zeta

    def w(*fs):
        return word(sc, f, *fs)

    x = w(("[1,1]", 1), ("[2,1]", 1))
    x1 = conj_by_reflection(x, 2)
    expect_eq(x1, w(("a1", 1), ("[2,1]", 1)), "first witness")
    tor = [
        TorusElem(sc.rs, [("a1", z), ("a2", z)]),
        TorusElem(sc.rs, [("a2", z)]),
        TorusElem(sc.rs, [("a1", z), ("a2", z * z)]),
    ]
    xs = [x1] + [conj_by_torus(x1, t) for t in tor]
    expect_eq(xs[1], w(("a1", z), ("[2,1]", z)), "second witness")
    expect_eq(xs[2], w(("a1", z * z), ("[2,1]", 1)), "third witness")
    expect_eq(xs[3], w(("a1", 1), ("[2,1]", z)), "fourth witness")

    one = f.one
    elems = f.elements()
    rs = sc.rs
    roots = {n: rs.parse_root(n) for n in ("a1", "[1,1]", "[2,1]", "[3,1]", "[3,2]")}

    # displayed coset unions, read off on the (a1, [1,1], [2,1]) prefix with
    # the central block U_{[3,1]} U_{[3,2]} left free
    def pref1(l):
        return (one, l, l + one)

    def pref2(l):
        return (z, l * z, l * z * z + z)

    def pref3(l):
        # the middle coefficient pairs linearly with the third one
        return (z * z, l * z * z, l * z + one)

    def pref4(l):
        return (one, l, l + z)

    prefs = [
        {p(l) for l in elems} for p in (pref1, pref2, pref3, pref4)
    ]
    for i in range(4):
        for j in range(i + 1, 4):
            expect(not (prefs[i] & prefs[j]), f"prefix sets {i + 1} and {j + 1} overlap")
    quad = [
        xs[0],
        w(("a1", z), ("[1,1]", z), ("[2,1]", 1)),
        w(("a1", z * z), ("[2,1]", 1)),
        w(("a1", 1), ("[1,1]", 1), ("[2,1]", z * z)),
    ]
    orbit_sizes = []
    gens = _letter_conjugators(sc, f)
    for i in range(4):
        orbit = orbit_under(xs[i], gens)
        for e in orbit:
            p = tuple(e.coefficient(roots[n]) for n in ("a1", "[1,1]", "[2,1]"))
            expect(p in prefs[i], f"witness {i + 1}: orbit element with prefix outside the displayed union")
            expect(
                e.support() <= set(roots.values()),
                f"witness {i + 1}: orbit element with unexpected support",
            )
        qp = tuple(quad[i].coefficient(roots[n]) for n in ("a1", "[1,1]", "[2,1]"))
        expect(qp in prefs[i], f"quadruple element {i + 1} outside the displayed union")
        orbit_sizes.append(len(orbit))
    ok, wit = type_f_quad(quad)
    expect(ok, "type F certificate failed")
    return {
        "orbit_sizes": tuple(orbit_sizes),
        "subgroup": wit.subgroup_order,
        "class_sizes": wit.evidence_dict()["orbit_sizes"],
    }


def q4_type_f_family2(q, seed=None):
    """The last q = 4 class: reflection and torus conjugates with orbits
    inside the displayed coset unions, certified type F."""
    sc, f = _setup(q)
    z = f.zeta
    z2 = z * z
    one = f.one

    def w(*fs):
        return word(sc, f, *fs)

    r1 = w(("a2", 1), ("[2,1]", 1), ("[3,1]", z))
    r2 = conj_by_reflection(r1, 1)
    expect_eq(
        r2,
        w(("a2", z), ("[1,1]", 1), ("[3,1]", 1), ("[3,2]", z)),
        "reflection conjugate",
    )
    t = TorusElem(sc.rs, [("a1", z), ("a2", z2)])
    x = conj_by_torus(r1, t)
    y = conj_by_torus(r2, t)
    expect_eq(x, w(("a2", z), ("[2,1]", z), ("[3,1]", z2)), "third base point")
    expect_eq(
        y,
        w(("a2", z2), ("[1,1]", z), ("[3,1]", z), ("[3,2]", 1)),
        "fourth base point",
    )
    elems = f.elements()

    def yset(pref):
        out = set()
        for l in elems:
            for g in elems:
                out.add(pref(l) * w(("[3,2]", g)))
        return out

    ys = [
        yset(lambda l: w(("a2", 1), ("[2,1]", one + l * l), ("[1,1]", l), ("[3,1]", z + l**3 + l))),
        yset(lambda l: w(("a2", z), ("[2,1]", l * l * z), ("[1,1]", one + l * z), ("[3,1]", l * l + l**3 * z + one))),
        yset(lambda l: w(("a2", z), ("[2,1]", z + l * l * z), ("[1,1]", l * z), ("[3,1]", l**3 * z + l * z + z2))),
        yset(lambda l: w(("a2", z2), ("[2,1]", l * l * z2), ("[1,1]", l * z2 + z), ("[3,1]", l**3 * z2 + l * l * z + z))),
    ]
    for i in range(4):
        for j in range(i + 1, 4):
            expect(not (ys[i] & ys[j]), f"coset unions {i + 1} and {j + 1} overlap")
    r3 = w(("a2", z), ("[2,1]", 1), ("[1,1]", 1))
    r4 = w(("a2", z2), ("[2,1]", z2), ("[1,1]", 1), ("[3,1]", z2))
    base = [r1, r2, x, y]
    quad = [r1, r2, r3, r4]
    orbit_sizes = []
    orbits = []
    for i in range(4):
        orbit = _assert_orbit_in(sc, f, base[i], ys[i], f"base point {i + 1}")
        orbits.append(orbit)
        orbit_sizes.append(len(orbit))
    expect(r3 in orbits[2], "third quadruple element outside its orbit")
    expect(r4 in orbits[3], "fourth quadruple element outside its orbit")
    ok, wit = type_f_quad(quad)
    expect(ok, "type F certificate failed")
    return {
        "orbit_sizes": tuple(orbit_sizes),
        "subgroup": wit.subgroup_order,
        "class_sizes": wit.evidence_dict()["orbit_sizes"],
    }


def q4_third_class(q, seed=None):
    """The q = 4 mixed class with a long-root tail: explicit conjugates grow a
    five-element inner orbit, certified type C at orbit level."""
    sc, f = _setup(q)
    z = f.zeta
    z1 = f.one + z

    def w(*fs):
        return word(sc, f, *fs)

    x = w(("[1,1]", 1), ("[2,1]", 1), ("[3,1]", z))
    s = conj_by_reflection(x, 1)
    expect_eq(
        s,
        w(("[1,1]", 1), ("[2,1]", 1), ("a2", z), ("[3,2]", 1)),
        "first conjugate",
    )
    r = conj_by_weyl(s, [1, 2])
    expect_eq(r, w(("a1", 1), ("[2,1]", 1), ("[3,2]", z)), "second conjugate")
    expect_eq(r * r, w(("[3,1]", 1)), "square of r")
    rs_ = r.conj(s)
    expect_eq(
        rs_,
        w(("[1,1]", z1), ("[2,1]", z1), ("a2", z), ("[3,1]", z)),
        "r conj s",
    )
    expect_eq((r * r).conj(s), s * w(("[3,2]", z)), "r^2 conj s")
    expect_eq(r.conj(r.conj(rs_)), rs_ * w(("[3,2]", z)), "r^3 conj s")
    ss = s.conj(rs_)
    expect_eq(
        ss,
        w(("[1,1]", z1), ("[2,1]", z1), ("a2", z), ("[3,1]", z), ("[3,2]", z1)),
        "s conj (r conj s)",
    )
    orbit_pts = [s, rs_, s * w(("[3,2]", z)), rs_ * w(("[3,2]", z)), ss]
    expect(len(set(orbit_pts)) == 5, "five inner-orbit points must be distinct")
    ok, wit = type_c_orbit(r, s)
    expect(ok, "orbit-level type C certificate failed")
    return {
        "subgroup": wit.subgroup_order,
        "orbits": wit.evidence_dict()["orbit_sizes"],
    }


# ---------------------------------------------------------------- q odd


def odd_typed_x4(q, seed=None):
    """The subregular short-plus-long class for p > 3: a reflection conjugate
    lands on the short simple root and the pair is type D."""
    sc, f = _setup(q)
    r = word(sc, f, ("[1,1]", 1))
    s = conj_by_reflection(r, 2)
    expect_eq(s.support(), {sc.rs.parse_root("a1")}, "reflection conjugate support")
    ok, wit = type_d_pair(r, s)
    expect(ok, "type D certificate failed")
    return {
        "subgroup": wit.subgroup_order,
        "orbits": wit.evidence_dict()["orbit_sizes"],
    }


def odd_product(q, seed=None):
    """The p > 3 class whose witness subgroup is a central product of two
    rank-one groups: the product-rack type D criterion on explicit 2x2
    witnesses."""
    if q in (2, 3, 4):
        raise ConfigError("check requires q > 4 or q = 5, 7, ... (odd, p > 3)")
    _sc, f = _setup(q)
    fld = f
    i = Mat.identity(fld, 2)
    x1 = Mat(fld, [[fld.one, fld.one], [fld.zero, fld.one]])
    sigma = Mat(fld, [[fld.zero, fld.one], [-fld.one, fld.zero]])
    x2 = sigma.conj(x1)
    a = next(c for c in fld.units() if c * c != fld.one and c * c != fld.zero)
    y2 = Mat(fld, [[fld.one, a * a], [fld.zero, fld.one]])
    expect(x1 != i and x2 != x1, "distinct first-factor witnesses")
    ok = product_rack_type_d(x1, x2, x1, y2)
    expect(ok, "product-rack type D certificate failed")
    return {"a_sq": fld.fmt(a * a)}


# ---------------------------------------------------------------- p = 3


def p3_typed_2(q, seed=None):
    """p = 3 class with a long tail: reflection conjugate off the line, type D."""
    sc, f = _setup(q)
    ev = {}
    rs = sc.rs
    want = {rs.parse_root("a1"), rs.parse_root("[3,2]")}
    for a in f.units():
        r = word(sc, f, ("[1,1]", 1), ("[3,1]", a))
        s = conj_by_reflection(r, 2)
        expect_eq(s.support(), want, "reflection conjugate support")
        ok, wit = type_d_pair(r, s)
        expect(ok, f"type D certificate failed at a={f.fmt(a)}")
        ev[f"a={f.fmt(a)}"] = wit.subgroup_order
    return ev


def p3_typed_3(q, seed=None):
    """p = 3 class needing a conjugator search: breadth-first search through
    letter, torus and reflection conjugates finds witnesses supported on
    {a1, [3,1]} and on {a2, [1,1]}, then type D."""
    sc, f = _setup(q)
    rs = sc.rs
    u = word(sc, f, ("[2,1]", 1), ("[3,2]", 1))
    conjs = []
    for g in _letter_conjugators(sc, f):
        conjs.append(("letter", g))
    tori = [
        TorusElem(rs, [("a1", t1), ("a2", t2)])
        for t1 in f.units()
        for t2 in f.units()
    ]
    want_r = {rs.parse_root("a1"), rs.parse_root("[3,1]")}
    want_s = {rs.parse_root("a2"), rs.parse_root("[1,1]")}
    seen = {u}
    frontier = [u]
    found_r = found_s = None
    while frontier and (found_r is None or found_s is None):
        nxt = []
        for x in frontier:
            images = []
            for _, g in conjs:
                images.append(g * x * g.inv())
            for t in tori:
                images.append(conj_by_torus(x, t))
            for i in (1, 2):
                try:
                    images.append(conj_by_reflection(x, i))
                except ValueError:
                    pass
            for y in images:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if found_r is None and y.support() == want_r:
                        found_r = y
                    if found_s is None and y.support() <= want_s and not y.is_identity():
                        found_s = y
        frontier = nxt
    expect(found_r is not None and found_s is not None, "conjugator search failed")
    ok, wit = type_d_pair(found_r, found_s)
    expect(ok, "type D certificate failed")
    return {
        "orbit_explored": len(seen),
        "subgroup": wit.subgroup_order,
        "orbits": wit.evidence_dict()["orbit_sizes"],
    }


def p3_typed_4(q, seed=None):
    """The p = 3 short-double root class: two reflection conjugates onto
    different root lines, type D."""
    sc, f = _setup(q)
    u = word(sc, f, ("[2,1]", 1))
    r = conj_by_reflection(u, 1)
    expect_eq(r.support(), {sc.rs.parse_root("[1,1]")}, "first conjugate support")
    s = conj_by_reflection(u, sc.rs.parse_root("[1,1]"))
    expect_eq(s.support(), {sc.rs.parse_root("a1")}, "second conjugate support")
    ok, wit = type_d_pair(r, s)
    expect(ok, "type D certificate failed")
    return {
        "subgroup": wit.subgroup_order,
        "orbits": wit.evidence_dict()["orbit_sizes"],
    }


CHECKS = [
    CheckSpec("g2.even.regular-pair", "regular pairs at q = 4 are type C", (4,), 5, regular_pair),
    CheckSpec("g2.even.comm-formula", "rank-2 collection identities over GF(4)", (4,), 5, comm_formula),
    CheckSpec("g2.q2.type-c", "q = 2 short-root-plus class is type C", (2,), 30, q2_type_c),
    CheckSpec("g2.q4.type-f.family1", "q = 4 short-pair class is type F", (4,), 30, q4_type_f_family1),
    CheckSpec("g2.q4.type-f.family2", "last q = 4 class is type F", (4,), 30, q4_type_f_family2),
    CheckSpec("g2.q4.third-class", "q = 4 mixed class is type C", (4,), 30, q4_third_class),
    CheckSpec("g2.odd.typed-x4", "p > 3 subregular class is type D", (5, 7), 10, odd_typed_x4),
    CheckSpec("g2.odd.product", "p > 3 product-rack class is type D", (5, 7), 5, odd_product),
    CheckSpec("g2.p3.typed-2", "p = 3 tailed class is type D", (3, 9), 10, p3_typed_2),
    CheckSpec("g2.p3.typed-3", "p = 3 searched class is type D", (3,), 60, p3_typed_3),
    CheckSpec("g2.p3.typed-4", "p = 3 short-double class is type D", (3, 9), 10, p3_typed_4),
]
