"""Named checks for unipotent classes in the special unitary groups.

Every witness below is a literal matrix (or a deterministic search over a
stated pool) whose membership, conjugation identities, and rack-theoretic
verdicts are verified end to end.
"""

from math import gcd

from ..gf import FqElem
from ..matgrp import (
    Mat,
    antidiag_ones,
    conj_class_in,
    group_closure,
    jordan_partition,
    su_spec,
    su_uf_elements,
    _su_uf_iter,
)
from ..rack import (
    austere_check,
    class_rack,
    type_c_pair,
    type_d_pair,
    type_f_quad,
)
from .common import CheckFailure, CheckSpec, expect, expect_eq, orbit_under


def _inv(c):
    return FqElem(c.field, c.field.inv_t[c.idx])


def _m(f, g, rows):
    """Matrix from a template: ints pass through ℤ → GF, strings are signed
    powers of the calibrated generator g."""
    out = []
    for row in rows:
        r = []
        for e in row:
            if isinstance(e, int):
                r.append(f.from_int(e))
                continue
            neg = e.startswith("-")
            if neg:
                e = e[1:]
            if e == "g":
                v = g
            else:
                k = int(e[2:])
                v = g**k if k >= 0 else _inv(g ** (-k))
            r.append(-v if neg else v)
        out.append(r)
    return Mat(f, out)


def _calibrate(spec, build):
    """Find the generator of the coefficient field matching the displayed
    matrices: all witnesses lie in the group and the stated conjugation
    holds verbatim."""
    f = spec.field
    n = f.q - 1
    for k in range(1, n + 1):
        if gcd(k, n) != 1:
            continue
        g = f.zeta**k
        got = build(g)
        if got is not None:
            return got
    raise CheckFailure("no field generator matches the displayed witnesses")


def _unit_elem(f, q):
    """First element of the quadratic extension with c^q = -c, c != 0."""
    for c in f.elements():
        if c != f.zero and c**q == -c:
            return c
    raise CheckFailure("no trace-reversing unit found")


def _subfield(f, q):
    return [c for c in f.elements() if c**q == c]


def _e1n(f, n, a):
    rows = [list(r) for r in Mat.identity(f, n).rows]
    rows[0][n - 1] = a.idx
    return Mat(f, rows)


def _en1(f, n, a):
    rows = [list(r) for r in Mat.identity(f, n).rows]
    rows[n - 1][0] = a.idx
    return Mat(f, rows)


def _expect_type_d(r, s, order, sizes):
    ok, wit = type_d_pair(r, s)
    expect(ok, "type D criterion fails on the witness pair")
    expect_eq(wit.subgroup_order, order, "witness subgroup order")
    expect_eq(wit.evidence_dict()["orbit_sizes"], sizes, "witness orbit sizes")
    return {"subgroup": wit.subgroup_order, "orbit_sizes": sizes}


# -- literal type D witnesses ------------------------------------------------

_TYPED_LITERALS = {
    "su.4.3.typed": (
        4,
        3,
        [[1, "g", "g", 1], [0, 1, 0, "-g^3"], [0, 0, 1, "-g^3"], [0, 0, 0, 1]],
        [[2, "g^6", "g^2", "g"], [2, "g^5", 0, 0], [0, "g^2", 2, "g^5"], [0, "g^6", 1, "g^7"]],
        [[0, 1, 0, 1], [2, 2, 1, 2], [0, 0, 0, 2], [0, 0, 1, 2]],
        720,
        (40, 40),
    ),
    "su.3.2.typed": (
        3,
        2,
        [[1, 1, "g"], [0, 1, 1], [0, 0, 1]],
        [[0, 0, 1], [0, 1, "g^2"], [1, "g", "g"]],
        [[1, 0, 0], [1, 1, 0], ["g^2", 1, 1]],
        108,
        (9, 9),
    ),
    "su.4.2.typed": (
        4,
        2,
        [[1, 1, "g", "g"], [0, 1, 0, "g^2"], [0, 0, 1, 1], [0, 0, 0, 1]],
        [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 1, 0]],
        [[1, 1, 0, 0], [0, 1, 0, 0], ["g^2", "g", 1, 1], [0, "g", 0, 1]],
        48,
        (6, 6),
    ),
    "su.4.4.typed": (
        4,
        4,
        [[1, 1, "g", "g"], [0, 1, 0, "g^4"], [0, 0, 1, 1], [0, 0, 0, 1]],
        [
            ["g^11", "g^2", "g^5", "g^14"],
            ["g^11", "g^2", "g^8", "g^2"],
            [0, "g^14", "g^9", "g^11"],
            [0, "g^14", "g^9", "g^6"],
        ],
        [[0, 1, 0, "g^12"], [1, 0, "g^3", "g^10"], [0, 0, 0, 1], [0, 0, 1, 0]],
        768,
        (24, 24),
    ),
}


def _typed_literal(ident):
    n, qfix, rt, tt, st, order, sizes = _TYPED_LITERALS[ident]

    def fn(q, seed=None):
        spec = su_spec(n, q)
        f = spec.field

        def build(g):
            r = _m(f, g, rt)
            t = _m(f, g, tt)
            s = _m(f, g, st)
            if spec.is_member(r) and spec.is_member(t) and t * r * t.inv() == s:
                return r, t, s
            return None

        r, t, s = _calibrate(spec, build)
        expect(spec.is_member(s), "conjugate left the group")
        return _expect_type_d(r, s, order, sizes)

    return fn


# -- odd q, partition (2,1...) type D ---------------------------------------


def su3_odd_typed(q, seed=None):
    spec = su_spec(3, q)
    f = spec.field
    a = _unit_elem(f, q)
    squares = {u * u for u in _subfield(f, q) if u != f.zero}
    two = f.from_int(2)
    xi = None
    for c in f.units():
        v = -(a * a) * c ** (q + 1)
        if v != f.zero and v**q == v and v != two and v not in squares:
            xi = c
            break
    expect(xi is not None, "no scalar with non-square -a^2 xi^(q+1) found")
    r = _e1n(f, 3, a)
    t = Mat(f, [[xi, f.zero, f.zero], [f.zero, xi ** (q - 1), f.zero], [f.zero, f.zero, _inv(xi**q)]])
    sigma = Mat.from_int_rows(f, [[0, 0, 1], [0, -1, 0], [1, 0, 0]])
    expect(spec.is_member(r) and spec.is_member(t) and spec.is_member(sigma), "witness not in the group")
    g = sigma * t
    s = g * r * g.inv()
    expect_eq(s, _en1(f, 3, a * xi ** (1 + q)), "displayed conjugate")
    order = q * (q * q - 1)
    half = (q * q - 1) // 2
    return _expect_type_d(r, s, order, (half, half))


def su4_odd_typed(q, seed=None):
    spec = su_spec(4, q)
    f = spec.field
    a = _unit_elem(f, q)
    squares = {u * u for u in _subfield(f, q) if u != f.zero}
    xi = None
    for c in f.units():
        v = -(a * a) * c ** (q + 1)
        if v != f.zero and v**q == v and v not in squares:
            xi = c
            break
    expect(xi is not None, "no scalar with non-square -a^2 xi^(q+1) found")
    zeta = a  # any solution of zeta^q = -zeta works
    r = _e1n(f, 4, a)
    z = f.zero
    t = Mat(f, [[xi, z, z, z], [z, _inv(xi), z, z], [z, z, xi**q, z], [z, z, z, _inv(xi**q)]])
    sigma = Mat(
        f,
        [[z, z, z, f.one], [z, zeta, z, z], [z, z, _inv(zeta**q), z], [f.one, z, z, z]],
    )
    expect(spec.is_member(r) and spec.is_member(t) and spec.is_member(sigma), "witness not in the group")
    g = sigma * t
    s = g * r * g.inv()
    expect_eq(s, _en1(f, 4, a * xi ** (1 + q)), "displayed conjugate")
    order = q * (q * q - 1)
    half = (q * q - 1) // 2
    return _expect_type_d(r, s, order, (half, half))


# -- q = 3, partition (2,2) --------------------------------------------------


def su_4_3_type22(q, seed=None):
    spec = su_spec(4, 3)
    f = spec.field

    def build(g):
        r = _m(f, g, [[1, "g", 0, 0], [0, 1, 0, 0], [0, 0, 1, "-g^3"], [0, 0, 0, 1]])
        sigma = _m(f, g, [["g^2", 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, "g^2"]])
        s = _m(f, g, [[1, 0, "g^3", 0], [0, 1, 0, "-g"], [0, 0, 1, 0], [0, 0, 0, 1]])
        if spec.is_member(r) and spec.is_member(sigma) and sigma * r * sigma.inv() == s:
            return r, sigma, s
        return None

    r, sigma, s = _calibrate(spec, build)
    rs, sr = r * s, s * r
    expect(rs * rs != sr * sr, "(rs)^2 = (sr)^2")
    uf = su_uf_elements(4, 3)
    R = orbit_under(r, uf)
    S = orbit_under(s, uf)
    expect(not (R & S), "upper-unitriangular orbits intersect")
    return {"uf_size": len(uf), "orbit_sizes": (len(R), len(S))}


# -- q = 3, partition (2,1,...) type C ---------------------------------------


def _typec(n):
    def fn(q, seed=None):
        spec = su_spec(n, q)
        f = spec.field

        def build(g):
            r = _e1n(f, n, g * g)
            s_want = _en1(f, n, _inv(g * g))
            z, one = f.zero, f.one
            if n % 2:
                k = (n - 3) // 2
                rows = [[z] * n for _ in range(n)]
                rows[0][n - 1] = g
                for i in range(k):
                    rows[1 + i][1 + i] = one
                    rows[n - 2 - i][n - 2 - i] = one
                rows[(n - 1) // 2][(n - 1) // 2] = -(g * g)
                rows[n - 1][0] = _inv(g**3)
            else:
                k = (n - 4) // 2
                rows = [[z] * n for _ in range(n)]
                rows[0][n - 1] = g
                for i in range(k):
                    rows[1 + i][1 + i] = one
                    rows[n - 2 - i][n - 2 - i] = one
                rows[n // 2 - 1][n // 2 - 1] = g
                rows[n // 2][n // 2] = _inv(g**3)
                rows[n - 1][0] = _inv(g**3)
            sigma = Mat(f, rows)
            if spec.is_member(r) and spec.is_member(sigma) and sigma * r * sigma.inv() == s_want:
                return r, sigma, s_want
            return None

        r, sigma, s = _calibrate(spec, build)
        expect(r * s != s * r, "witnesses commute")
        ok, wit = type_c_pair(r, s)
        expect(ok, "type C criterion fails on the witness pair")
        expect_eq(wit.subgroup_order, 24, "witness subgroup order")
        return {"subgroup": 24, "orbit_sizes": wit.evidence_dict()["orbit_sizes"]}

    return fn


# -- even q, partition (3,1,1,1) in SU6 --------------------------------------


def su6_even_typed(q, seed=None):
    spec = su_spec(6, q)
    f = spec.field
    x = next(c for c in f.elements() if c**q != c)
    xq = x**q
    z, one = f.zero, f.one
    r = Mat(
        f,
        [
            [one, x, z, z, one, x],
            [z, one, z, z, z, one],
            [z, z, one, z, z, z],
            [z, z, z, one, z, z],
            [z, z, z, z, one, xq],
            [z, z, z, z, z, one],
        ],
    )
    sigma = Mat.from_int_rows(
        f,
        [
            [0, 0, 1, 0, 0, 0],
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 1, 0, 0],
        ],
    )
    expect(spec.is_member(r) and spec.is_member(sigma), "witness not in the group")
    s = sigma * r * sigma.inv()
    s_want = Mat(
        f,
        [
            [one, z, z, z, z, z],
            [z, one, x, one, x, z],
            [z, z, one, z, one, z],
            [z, z, z, one, xq, z],
            [z, z, z, z, one, z],
            [z, z, z, z, z, one],
        ],
    )
    expect_eq(s, s_want, "displayed conjugate")
    expect((r * s) * (r * s) != (s * r) * (s * r), "(rs)^2 = (sr)^2")
    ok, wit = type_d_pair(r, s)
    expect(ok, "type D criterion fails on the witness pair")
    return {"subgroup": wit.subgroup_order, "orbit_sizes": wit.evidence_dict()["orbit_sizes"]}


# -- q > 4 even, partition (3,1) type F --------------------------------------


def _quad_matrix(f, q, x, y):
    z, one = f.zero, f.one
    yq, xq = y**q, x**q
    return Mat(f, [[one, x, y, x * yq], [z, one, z, yq], [z, z, one, xq], [z, z, z, one]])


def su_typef_q8(q, seed=None):
    spec = su_spec(4, q)
    f = spec.field
    x = next(c for c in f.elements() if c**q != c)
    y = f.one
    expect(x**q * y + y**q * x != f.zero, "degenerate (x, y) choice")
    r = _quad_matrix(f, q, x, y)
    expect(spec.is_member(r), "witness not in the group")
    subf = [c for c in _subfield(f, q) if c != f.zero]
    zetas = subf[:4]
    z, one = f.zero, f.one
    quad = []
    for zi in zetas:
        t = Mat(f, [[one, z, z, z], [z, zi, z, z], [z, z, _inv(zi), z], [z, z, z, one]])
        expect(spec.is_member(t), "torus element not in the group")
        ri = t * r * t.inv()
        want = Mat(
            f,
            [
                [one, x * _inv(zi), y * zi, x * y**q],
                [z, one, z, y**q * zi],
                [z, z, one, x**q * _inv(zi)],
                [z, z, z, one],
            ],
        )
        expect_eq(ri, want, "displayed torus conjugate")
        quad.append(ri)
    ok, wit = type_f_quad(quad)
    expect(ok, "type F criterion fails on the quadruple")
    expect_eq(wit.subgroup_order, 128, "witness subgroup order")
    return {"subgroup": 128, "orbit_sizes": wit.evidence_dict()["orbit_sizes"]}


def su_typef_q5(q, seed=None):
    # odd-q variant: deterministic search for a (3,1) representative whose
    # corner coefficients are in general position, then a torus quadruple
    spec = su_spec(4, q)
    f = spec.field
    r = None
    for m in _su_uf_iter(4, q):
        if jordan_partition(m) != (3, 1):
            continue
        x, y = m.entry(0, 1), m.entry(0, 2)
        if x * y**q != x**q * y:
            r = m
            break
    expect(r is not None, "no usable (3,1) representative found")
    toruses = []
    z = f.zero
    for a in f.units():
        for b in f.units():
            ab = a * b
            if ab**q != ab:
                continue
            t = Mat(f, [[a, z, z, z], [z, b, z, z], [z, z, _inv(b**q), z], [z, z, z, _inv(a**q)]])
            if spec.is_member(t):
                toruses.append(t)
    conjs = []
    for t in toruses:
        c = t * r * t.inv()
        if c not in conjs:
            conjs.append(c)
    from itertools import combinations

    for quad in combinations(conjs, 4):
        if any(
            quad[i] * quad[j] == quad[j] * quad[i]
            for i in range(4)
            for j in range(i + 1, 4)
        ):
            continue
        ok, wit = type_f_quad(quad)
        if ok:
            expect_eq(wit.subgroup_order, 3125, "witness subgroup order")
            expect_eq(wit.evidence_dict()["orbit_sizes"], (5, 5, 5, 5), "witness orbit sizes")
            return {
                "subgroup": 3125,
                "orbit_sizes": (5, 5, 5, 5),
                "torus_pool": len(toruses),
            }
    raise CheckFailure("no torus quadruple satisfies the type F criterion")


# -- austere classes ---------------------------------------------------------


def _austere(n, order):
    def fn(q, seed=None):
        spec = su_spec(n, q)
        f = spec.field
        G = group_closure(su_uf_elements(n, q) + [antidiag_ones(f, n)])
        expect_eq(len(G), order, "group order")
        a = next(c for c in f.units() if c**q == c)
        r = _e1n(f, n, a)
        rack = class_rack(G, r)
        verdict = austere_check(rack)
        expect_eq(verdict.outcome, "austere-verified", "austere verdict")
        return {"group": len(G), "class_size": len(rack)}

    return fn


CHECKS = [
    CheckSpec("su.4.3.typed", "partition (3,1) witness pair at q=3", (3,), 30, _typed_literal("su.4.3.typed")),
    CheckSpec("su.3.2.typed", "regular witness pair in the rank-2 unitary group at q=2", (2,), 10, _typed_literal("su.3.2.typed")),
    CheckSpec("su.4.2.typed", "partition (3,1) witness pair at q=2", (2,), 10, _typed_literal("su.4.2.typed")),
    CheckSpec("su.4.4.typed", "partition (3,1) witness pair at q=4", (4,), 30, _typed_literal("su.4.4.typed")),
    CheckSpec("su.3.odd.typed", "partition (2,1) witness pair at odd q>3", (5, 7), 30, su3_odd_typed),
    CheckSpec("su.4.odd.typed", "partition (2,1,1) witness pair at odd q>3", (5, 7), 30, su4_odd_typed),
    CheckSpec("su.4.3.type22", "partition (2,2) unitriangular witness pair at q=3", (3,), 60, su_4_3_type22),
    CheckSpec("su.typec.n3", "rank-2 type C witness at q=3", (3,), 10, _typec(3)),
    CheckSpec("su.typec.n4", "rank-3 type C witness at q=3", (3,), 10, _typec(4)),
    CheckSpec("su.typec.n5", "rank-4 type C witness at q=3", (3,), 10, _typec(5)),
    CheckSpec("su.6.even.typed", "partition (3,1,1,1) witness pair, even q", (2, 4), 60, su6_even_typed),
    CheckSpec("su.typef.q8", "partition (3,1) torus quadruple at q=8", (8,), 60, su_typef_q8),
    CheckSpec("su.typef.q5", "partition (3,1) torus quadruple at odd q=5", (5,), 120, su_typef_q5),
    CheckSpec("su.austere.3.2", "partition (2,1) full-class austere exhaustion", (2,), 60, _austere(3, 216)),
    CheckSpec("su.austere.4.2", "partition (2,1,1) full-class austere exhaustion", (2,), 300, _austere(4, 25920)),
]
