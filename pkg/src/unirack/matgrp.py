"""Matrix groups over small finite fields.

SL_n(q), the unitary groups SU_n(q) realized as fixed points of
F(X) = J (Fr_q X)^{-T} J with J the antidiagonal identity, and Sp_2n(q);
plus subgroup closure, conjugation orbits, Jordan partitions, and the
char-2 symplectic block labels W(m) / V(2k).

Matrices store their entries as index grids into a FieldSpec's tables,
which keeps products and hashing cheap during closures.
"""

from functools import cache
from itertools import product

import numpy as np

from .gf import FqElem, fq_make


class Mat:
    """Square matrix over a FieldSpec; immutable and hashable."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.n = len(rows)
        norm = []
        for row in rows:
            out = []
            for x in row:
                if isinstance(x, FqElem):
                    out.append(x.idx)
                else:
                    if not 0 <= x < field.q:
                        raise ValueError("integer entries must be field indices")
                    out.append(x)
            norm.append(tuple(out))
        self.rows = tuple(norm)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_int_rows(cls, field, rows):
        return cls(field, [[field.from_int(x) for x in row] for row in rows])

    def entry(self, i, j):
        return FqElem(self.field, self.rows[i][j])

    def elems(self):
        return [[FqElem(self.field, x) for x in row] for row in self.rows]

    def __mul__(self, other):
        f = self.field
        if other.field is not f or other.n != self.n:
            raise ValueError("matrix mismatch")
        mul_t, add_t = f.mul_t, f.add_t
        n = self.n
        ocols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            orow = []
            for col in ocols:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = add_t[acc][mul_t[a][b]]
                orow.append(acc)
            out.append(tuple(orow))
        m = Mat.__new__(Mat)
        m.field = f
        m.n = n
        m.rows = tuple(out)
        return m

    def inv(self):
        f, n = self.field, self.n
        mul_t, add_t, neg_t, inv_t = f.mul_t, f.add_t, f.neg_t, f.inv_t
        aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            pi = inv_t[aug[col][col]]
            aug[col] = [mul_t[x][pi] for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    fct = aug[r][col]
                    aug[r] = [
                        add_t[x][neg_t[mul_t[fct][y]]] for x, y in zip(aug[r], aug[col])
                    ]
        return Mat(f, [row[n:] for row in aug])

    def transpose(self):
        return Mat(self.field, list(zip(*self.rows)))

    def frobenius(self, q):
        """Entrywise a -> a^q."""
        f = self.field
        return Mat(f, [[(FqElem(f, x) ** q).idx for x in row] for row in self.rows])

    def conj(self, other):
        """self ▷ other = self · other · self^{-1}."""
        return self * other * self.inv()

    def det(self):
        f, n = self.field, self.n
        rows = [list(r) for r in self.rows]
        mul_t, add_t, neg_t, inv_t = f.mul_t, f.add_t, f.neg_t, f.inv_t
        d = 1
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col]), None)
            if piv is None:
                return f.zero
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                d = neg_t[d]
            d = mul_t[d][rows[col][col]]
            pi = inv_t[rows[col][col]]
            for r in range(col + 1, n):
                if rows[r][col]:
                    fct = mul_t[rows[r][col]][pi]
                    rows[r] = [
                        add_t[x][neg_t[mul_t[fct][y]]] for x, y in zip(rows[r], rows[col])
                    ]
        return FqElem(f, d)

    def rank(self):
        f, n = self.field, self.n
        rows = [list(r) for r in self.rows]
        mul_t, add_t, neg_t, inv_t = f.mul_t, f.add_t, f.neg_t, f.inv_t
        rk, col = 0, 0
        for col in range(n):
            piv = next((r for r in range(rk, n) if rows[r][col]), None)
            if piv is None:
                continue
            rows[rk], rows[piv] = rows[piv], rows[rk]
            pi = inv_t[rows[rk][col]]
            for r in range(rk + 1, n):
                if rows[r][col]:
                    fct = mul_t[rows[r][col]][pi]
                    rows[r] = [
                        add_t[x][neg_t[mul_t[fct][y]]] for x, y in zip(rows[r], rows[rk])
                    ]
            rk += 1
        return rk

    def is_identity(self):
        return all(x == (1 if i == j else 0) for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and other.field is self.field
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        f = self.field
        body = "; ".join(
            " ".join(f.fmt(FqElem(f, x)) for x in row) for row in self.rows
        )
        return f"Mat[{body}]"


def antidiag_ones(field, n):
    return Mat(field, [[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])


def symplectic_form(field, n2):
    """The form matrix matching the C-type defining representation: rows i
    and 2n+1-i pair with values 1 and -1."""
    n = n2 // 2
    rows = [[0] * n2 for _ in range(n2)]
    one = 1
    for i in range(n):
        rows[i][n2 - 1 - i] = one
        rows[n2 - 1 - i][i] = field.neg_t[one]
    return Mat(field, rows)


class GroupSpec:
    """One of the matrix families SL_n(q), SU_n(q), Sp_2n(q)."""

    def __init__(self, family, n, q):
        self.family = family
        self.n = n
        self.q = q
        p, m = _prime_power(q)
        if family == "SU":
            self.field = fq_make(p, 2 * m)
        else:
            self.field = fq_make(p, m)
        if family == "SU":
            self.J = antidiag_ones(self.field, n)
        elif family == "Sp":
            if n % 2:
                raise ValueError("Sp needs even dimension")
            self.J = symplectic_form(self.field, n)
        else:
            self.J = None

    def steinberg_f(self, M):
        """F(X) = J (Fr_q X)^{-T} J (unitary families)."""
        return self.J * M.frobenius(self.q).inv().transpose() * self.J

    def is_member(self, M):
        if M.field is not self.field or M.n != self.n:
            raise ValueError("dimension or field mismatch")
        if self.family == "SL":
            return M.det() == 1
        if self.family == "SU":
            return M.det() == 1 and self.steinberg_f(M) == M
        if self.family == "Sp":
            return M.transpose() * self.J * M == self.J
        raise ValueError(self.family)

    def __repr__(self):
        return f"{self.family}_{self.n}({self.q})"


def _prime_power(q):
    for p in (2, 3, 5, 7):
        m = 0
        n = 1
        while n < q:
            n *= p
            m += 1
        if n == q:
            return p, m
    raise ValueError(f"{q} is not a supported prime power")


class ClosureCapExceeded(Exception):
    pass


def group_closure(gens, cap=2_000_000):
    """BFS closure of a generator list under multiplication; deterministic
    insertion order (generators first, then products in discovery order)."""
    if not gens:
        return []
    ident = None
    first = gens[0]
    if isinstance(first, Mat):
        ident = Mat.identity(first.field, first.n)
    else:
        ident = first.identity_like()
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                e = h * g
                if e not in seen:
                    seen.add(e)
                    order.append(e)
                    nxt.append(e)
                    if len(order) > cap:
                        raise ClosureCapExceeded(f"closure exceeds cap {cap}")
        frontier = nxt
    return order


def conj_class_in(H, x):
    """{h x h^{-1} : h in H}."""
    return {h * x * h.inv() for h in H}


def jordan_partition(u):
    """Partition of the Jordan block sizes of a unipotent matrix."""
    n = u.n
    nil = _sub_identity(u)
    ranks = []
    power = Mat.identity(u.field, n)
    while True:
        r = power.rank()
        ranks.append(r)
        if r == 0:
            break
        if len(ranks) > n + 1:
            raise ValueError("matrix is not unipotent")
        power = power * nil
    while len(ranks) < n + 2:
        ranks.append(0)
    parts = []
    for k in range(1, n + 1):
        mult_ge_k = ranks[k - 1] - ranks[k]
        mult_ge_k1 = ranks[k] - ranks[k + 1]
        parts.extend([k] * (mult_ge_k - mult_ge_k1))
    return tuple(sorted(parts, reverse=True))


def _sub_identity(u):
    f = u.field
    rows = [list(r) for r in u.rows]
    for i in range(u.n):
        rows[i][i] = f.add_t[rows[i][i]][f.neg_t[1]]
    return Mat(f, rows)


def sp_label(u, spec):
    """Block label of a unipotent element of Sp_2n(q), q even.

    For each even Jordan part 2k, a V(2k) block is present iff some vector v
    has form value ((u-1)^{2k-1} v, v) != 0; V-multiplicity is at most 2.
    """
    if spec.family != "Sp" or spec.q % 2:
        raise ValueError("labels are defined for Sp in even characteristic")
    parts = jordan_partition(u)
    f = u.field
    nil = _sub_identity(u)
    label = []
    for size in sorted(set(parts), reverse=True):
        mult = parts.count(size)
        if size % 2:
            if mult % 2:
                raise AssertionError("odd part with odd multiplicity in Sp")
            label.append(("W", size, mult // 2))
            continue
        power = Mat.identity(f, u.n)
        for _ in range(size - 1):
            power = power * nil
        has_v = _exists_nonzero_form_value(power, spec.J)
        if has_v:
            b = 2 if mult % 2 == 0 else 1
        else:
            if mult % 2:
                raise AssertionError("forced V block not detected")
            b = 0
        if b:
            label.append(("V", size, b))
        if (mult - b) // 2:
            label.append(("W", size, (mult - b) // 2))
    return tuple(sorted(label, key=lambda t: (-t[1], t[0])))


def _exists_nonzero_form_value(power, J):
    f = power.field
    n = power.n
    for vec in product(range(f.q), repeat=n):
        if not any(vec):
            continue
        w = _matvec(power, vec)
        val = _form(f, w, _matvec(J, vec))
        if val:
            return True
    return False


def _matvec(M, vec):
    f = M.field
    out = []
    for row in M.rows:
        acc = 0
        for a, b in zip(row, vec):
            if a and b:
                acc = f.add_t[acc][f.mul_t[a][b]]
        out.append(acc)
    return out


def _form(f, w, jv):
    acc = 0
    for a, b in zip(w, jv):
        if a and b:
            acc = f.add_t[acc][f.mul_t[a][b]]
    return acc


def fmt_sp_label(label):
    return "+".join(
        f"{kind}({size})" + (f"^{cnt}" if cnt > 1 else "") for kind, size, cnt in label
    )


# ---------------------------------------------------------------------
# defining representations for types A and C


@cache
def _defining_rep(kind, rank):
    from .chevalley import structure_constants

    sc = structure_constants(kind, rank)
    rs = sc.rs
    if kind == "A":
        dim = rank + 1

        def E(i, j):
            m = np.zeros((dim, dim), dtype=np.int64)
            m[i - 1, j - 1] = 1
            return m

        rep = {rs.simple(i): E(i, i + 1) for i in range(1, rank + 1)}
    elif kind == "C":
        dim = 2 * rank

        def E(i, j):
            m = np.zeros((dim, dim), dtype=np.int64)
            m[i - 1, j - 1] = 1
            return m

        rep = {
            rs.simple(i): E(i, i + 1) - E(2 * rank - i, 2 * rank + 1 - i)
            for i in range(1, rank)
        }
        rep[rs.simple(rank)] = E(rank, rank + 1)
    else:
        raise ValueError("defining representation available for A and C only")
    order = {r: i for i, r in enumerate(rs.positive_roots)}
    for gamma in rs.positive_roots:
        if gamma in rep:
            continue
        a = next(
            a
            for a in rs.positive_roots
            if rs.is_positive(gamma - a) and order[a] < order[gamma - a]
        )
        b = gamma - a
        br = rep[a] @ rep[b] - rep[b] @ rep[a]
        nval = sc.N[(a, b)]
        assert (br % nval == 0).all()
        rep[gamma] = br // nval
    for gamma, m in rep.items():
        assert not (m @ m).any(), "defining rep root matrices must square to zero"
    # homomorphism check on all positive pairs
    for a in rs.positive_roots:
        for b in rs.positive_roots:
            br = rep[a] @ rep[b] - rep[b] @ rep[a]
            if rs.is_root(a + b) and rs.is_positive(a + b):
                assert (br == sc.N[(a, b)] * rep[a + b]).all()
            elif a != b and not rs.is_root(a + b):
                assert not br.any()
    return rep


def chev_to_matrix(kind, w):
    """Evaluate a type-A or type-C word in the defining representation."""
    rs = w.sc.rs
    if rs.kind != kind or kind not in ("A", "C"):
        raise ValueError("unsupported type for matrix realization")
    rep = _defining_rep(kind, rs.rank)
    field = w.field
    dim = rs.rank + 1 if kind == "A" else 2 * rs.rank
    acc = Mat.identity(field, dim)
    for r, c in w.factors:
        m = rep[r]
        rows = [
            [
                (field.one if i == j else field.zero)
                + c * field.from_int(int(m[i, j]))
                for j in range(dim)
            ]
            for i in range(dim)
        ]
        acc = acc * Mat(field, rows)
    return acc


def chev_adjoint_matrix(sc, field, factors):
    """Evaluate a product of root elements (roots of either sign) in the
    adjoint representation over the given field."""
    acc = Mat.identity(field, sc.dim)
    for r, c in factors:
        if isinstance(r, str):
            r = sc.rs.parse_root(r)
        if isinstance(c, int):
            c = field.from_int(c)
        elif isinstance(c, str):
            c = field.parse(c)
        acc = acc * Mat(field, sc.root_matrix(r, c))
    return acc


def word_adjoint_matrix(w):
    return chev_adjoint_matrix(w.sc, w.field, w.factors)


def weyl_rep_matrix(sc, field, mirror):
    """ṡ = x(1) x_{-}(-1) x(1) in the adjoint representation."""
    if isinstance(mirror, str):
        mirror = sc.rs.parse_root(mirror)
    one = field.one
    return chev_adjoint_matrix(
        sc, field, [(mirror, one), (-mirror, -one), (mirror, one)]
    )


def torus_adjoint_matrix(sc, field, pairs):
    """∏ γ∨(ξ) as a diagonal matrix in the adjoint representation."""
    rs = sc.rs
    n = sc.dim
    rows = [[field.zero] * n for _ in range(n)]
    for r, i in sc._ridx.items():
        val = field.one
        for g, xi in pairs:
            if isinstance(g, str):
                g = rs.parse_root(g)
            val = val * xi ** rs.pairing(r, g)
        rows[i][i] = val
    nr = len(rs.all_roots)
    for k in range(rs.rank):
        rows[nr + k][nr + k] = field.one
    return Mat(field, rows)


# ---------------------------------------------------------------------
# SU unipotent machinery


@cache
def su_spec(n, q):
    return GroupSpec("SU", n, q)


def su_uf_elements(n, q, cap=2_000_000):
    """All elements of the F-fixed upper unitriangular subgroup of SU_n(q),
    built from its twisted root subgroups (one per ϑ-orbit of positions)."""
    params = _su_orbit_subgroups(n, q)
    total = 1
    for elems in params:
        total *= len(elems)
        if total > cap:
            raise ClosureCapExceeded("U^F too large")
    spec = su_spec(n, q)
    ident = Mat.identity(spec.field, n)
    out = []
    for combo in product(*params):
        m = ident
        for g in combo:
            m = m * g
        out.append(m)
    return out


@cache
def _su_orbit_subgroups(n, q):
    """Per ϑ-orbit of upper-triangular positions, the list of F-fixed
    one-parameter subgroup elements."""
    spec = su_spec(n, q)
    f = spec.field
    ident = Mat.identity(f, n)

    def elem(entries):
        rows = [list(r) for r in ident.rows]
        for (i, j), c in entries:
            rows[i - 1][j - 1] = c.idx
        return Mat(f, rows)

    orbits = []
    done = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) in done:
                continue
            mi, mj = n + 1 - j, n + 1 - i
            done.add((i, j))
            done.add((mi, mj))
            group = []
            if (i, j) == (mi, mj):
                for c in f.elements():
                    if c and frobfix(c, q) == -c:
                        group.append(elem([((i, j), c)]))
            else:
                for c in f.elements():
                    if not c:
                        continue
                    base = [((i, j), c), ((mi, mj), -(frobfix(c, q)))]
                    found = None
                    for z in f.elements():
                        cand = elem(base + [((i, mj), z)])
                        if spec.steinberg_f(cand) == cand:
                            found = cand
                            break
                    assert found is not None, "no F-fixed correction"
                    group.append(found)
            orbits.append(group + [ident])
    return tuple(orbits)


def frobfix(c, q):
    return c**q


def su_class_rep(n, q, lam, cap=300_000):
    """An F-fixed unipotent of SU_n(q) with the given Jordan partition."""
    lam = tuple(sorted(lam, reverse=True))
    if sum(lam) != n:
        raise ValueError("partition does not sum to n")
    spec = su_spec(n, q)
    f = spec.field
    if lam == tuple([1] * n):
        return Mat.identity(f, n)
    if lam == tuple([2] + [1] * (n - 2)):
        for c in f.elements():
            if c and frobfix(c, q) == -c:
                rows = [list(r) for r in Mat.identity(f, n).rows]
                rows[0][n - 1] = c.idx
                return Mat(f, rows)
        raise AssertionError("no trace-reversing scalar found")
    count = 0
    for m in _su_uf_iter(n, q):
        count += 1
        if count > cap:
            raise ClosureCapExceeded("class representative search exhausted")
        if jordan_partition(m) == lam:
            return m
    raise ValueError(f"no class with partition {lam} found in U^F")


def _su_uf_iter(n, q):
    params = _su_orbit_subgroups(n, q)
    spec = su_spec(n, q)
    ident = Mat.identity(spec.field, n)
    for combo in product(*params):
        m = ident
        for g in combo:
            m = m * g
        yield m
