"""Exact arithmetic in small finite fields GF(p^m).

Elements are stored in the polynomial basis of a fixed monic irreducible
polynomial.  For each (p, m) the field is built once, with the
lexicographically least monic irreducible whose root is primitive; that
root is the distinguished generator zeta.  All arithmetic is table-driven
and exact.
"""

from functools import cache
from itertools import product


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a, b, irred, p):
    # irred is monic, coefficient list ascending degree
    m = len(irred) - 1
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for d in range(len(res) - 1, m - 1, -1):
        c = res[d]
        if c:
            for k in range(m + 1):
                res[d - m + k] = (res[d - m + k] - c * irred[k]) % p
    return _poly_trim(res)


def _poly_is_irreducible(f, p):
    """Trial division by all monic polynomials of degree 1..deg(f)//2."""
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            if _poly_trim(_poly_mod(f, g, p)) == []:
                return False
    return True


def _poly_mod(a, b, p):
    a = list(a)
    binv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and _poly_trim(a):
        a = _poly_trim(a)
        if len(a) - 1 < db:
            break
        c = (a[-1] * binv) % p
        shift = len(a) - 1 - db
        for k in range(len(b)):
            a[shift + k] = (a[shift + k] - c * b[k]) % p
        a = _poly_trim(a)
        if not a:
            break
    return a


class FqElem:
    """An element of a FieldSpec, identified by its base-p digit index."""

    __slots__ = ("field", "idx")

    def __init__(self, field, idx):
        self.field = field
        self.idx = idx

    @property
    def coeffs(self):
        return self.field.idx_to_coeffs(self.idx)

    def __add__(self, other):
        return FqElem(self.field, self.field.add_t[self.idx][self._ix(other)])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __neg__(self):
        return FqElem(self.field, self.field.neg_t[self.idx])

    def __mul__(self, other):
        return FqElem(self.field, self.field.mul_t[self.idx][self._ix(other)])

    def __truediv__(self, other):
        return self * self._wrap(other).inv()

    def __pow__(self, k):
        if self.idx == 0:
            if k < 0:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            return self.field.one if k == 0 else self
        # reduce through the known multiplicative order
        e = k % (self.field.q - 1)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self):
        if self.idx == 0:
            raise ZeroDivisionError("inversion of zero")
        return FqElem(self.field, self.field.inv_t[self.idx])

    def _ix(self, other):
        return self._wrap(other).idx

    def _wrap(self, other):
        if isinstance(other, FqElem):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        raise TypeError(f"cannot coerce {other!r}")

    __radd__ = __add__
    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return isinstance(other, FqElem) and other.field is self.field and other.idx == self.idx

    def __hash__(self):
        return hash((id(self.field), self.idx))

    def __bool__(self):
        return self.idx != 0

    def log(self):
        """Discrete log base zeta; raises on zero."""
        if self.idx == 0:
            raise ZeroDivisionError("log of zero")
        return self.field.dlog_t[self.idx]

    def __repr__(self):
        return f"{self.field.name}:{self.field.fmt(self)}"


class FieldSpec:
    """GF(p^m) with a fixed primitive irreducible polynomial and generator."""

    def __init__(self, p, m, irred):
        self.p = p
        self.m = m
        self.q = p**m
        self.irred = tuple(irred)
        self.name = f"GF({self.q})"
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        self._coeffs = [tuple((i // p**k) % p for k in range(m)) for i in range(q)]
        self.add_t = [
            [
                self.coeffs_to_idx([(a + b) % p for a, b in zip(self._coeffs[i], self._coeffs[j])])
                for j in range(q)
            ]
            for i in range(q)
        ]
        self.neg_t = [self.coeffs_to_idx([(-a) % p for a in self._coeffs[i]]) for i in range(q)]
        self.mul_t = []
        for i in range(q):
            row = []
            for j in range(q):
                prod_ = _poly_mulmod(
                    _poly_trim(self._coeffs[i]), _poly_trim(self._coeffs[j]), self.irred, p
                )
                row.append(self.coeffs_to_idx(prod_))
            self.mul_t.append(row)
        self.inv_t = [None] * q
        for i in range(1, q):
            for j in range(1, q):
                if self.mul_t[i][j] == 1:
                    self.inv_t[i] = j
                    break
        # zeta = the residue class of x itself (primitive by construction)
        zeta_idx = p if m > 1 else self._least_primitive_residue()
        self.zeta = FqElem(self, zeta_idx)
        self.dlog_t = [None] * q
        idx = 1
        for k in range(q - 1):
            self.dlog_t[idx] = k
            idx = self.mul_t[idx][zeta_idx]
        self.zero = FqElem(self, 0)
        self.one = FqElem(self, 1)

    def _least_primitive_residue(self):
        for g in range(2, self.p):
            if self._mult_order_idx(g) == self.p - 1:
                return g
        return 1  # GF(2): the only unit

    def _mult_order_idx(self, idx):
        k, cur = 1, idx
        while cur != 1:
            cur = self.mul_t[cur][idx]
            k += 1
        return k

    def idx_to_coeffs(self, idx):
        return self._coeffs[idx]

    def coeffs_to_idx(self, coeffs):
        return sum(c % self.p * self.p**k for k, c in enumerate(coeffs))

    def elem(self, coeffs):
        return FqElem(self, self.coeffs_to_idx(list(coeffs)))

    def from_int(self, n):
        """The image of the integer n under the ring map ℤ → GF(p^m)."""
        return FqElem(self, n % self.p)

    def elements(self):
        return [FqElem(self, i) for i in range(self.q)]

    def units(self):
        return [FqElem(self, i) for i in range(1, self.q)]

    def zeta_pow(self, k):
        return self.zeta**k

    def parse(self, text):
        """Parse "0", "1", "z", "z^k", or a plain integer, optionally
        prefixed with "-"."""
        text = text.strip()
        if text.startswith("-"):
            return -self.parse(text[1:])
        if text == "z":
            return self.zeta
        if text.startswith("z^"):
            return self.zeta ** int(text[2:])
        return self.from_int(int(text))

    def fmt(self, a):
        if a.idx == 0:
            return "0"
        k = self.dlog_t[a.idx]
        if k == 0:
            return "1"
        if k == 1:
            return "z"
        return f"z^{k}"

    def least_nonsquare(self):
        """The least power of zeta that is not a square (q odd only)."""
        if self.q % 2 == 0:
            raise ValueError("every element is a square in characteristic 2")
        squares = {(u * u).idx for u in self.units()}
        for i in range(1, self.q):
            if i not in squares:
                return FqElem(self, i)
        raise AssertionError("no non-square found")

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, irred={list(self.irred)})"


@cache
def fq_make(p, m):
    """Build GF(p^m) on the lexicographically least primitive irreducible.

    Candidates are monic polynomials x^m + a_{m-1}x^{m-1} + ... + a_0, ordered
    by the coefficient tuple (a_{m-1}, ..., a_0); the first irreducible one
    whose root generates the multiplicative group wins.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if not (1 <= m <= 6) or p**m > 1000:
        raise ValueError(f"degree out of range: p={p}, m={m}")
    if m == 1:
        return FieldSpec(p, 1, [0, 1])  # x, conventionally; zeta handled separately
    for lead in product(range(p), repeat=m):
        irred = list(reversed(lead)) + [1]
        if irred[0] == 0:
            continue  # x divides it
        if not _poly_is_irreducible(irred, p):
            continue
        field = FieldSpec(p, m, irred)
        # primitivity of the root x
        if field._mult_order_idx(p) == p**m - 1:
            return field
    raise AssertionError(f"no primitive irreducible of degree {m} over GF({p})")


def frobenius_q(a, q):
    """a ↦ a^q, the Frobenius relative to the subfield GF(q)."""
    field = a.field
    k, n = 0, 1
    while n < q:
        n *= field.p
        k += 1
    if n != q:
        raise ValueError(f"{q} is not a power of the characteristic {field.p}")
    return a**q


@cache
def _embed_generator_image(sub_key, big_key):
    sub, big = _FIELD_BY_KEY[sub_key], _FIELD_BY_KEY[big_key]
    if (big.q - 1) % (sub.q - 1) != 0:
        raise ValueError(f"{sub.name} does not embed in {big.name}")
    if sub.m == 1:
        return big.one
    # the image must be a root of sub.irred so the map is a ring homomorphism;
    # start from zeta^((Q-1)/(q-1)) and walk its powers of coprime exponent
    base = big.zeta ** ((big.q - 1) // (sub.q - 1))

    def is_root(w):
        acc, powv = big.zero, big.one
        for c in sub.irred:
            acc = acc + powv * c
            powv = powv * w
        return not acc

    from math import gcd

    for j in range(1, sub.q):
        if gcd(j, sub.q - 1) == 1 and is_root(base**j):
            return base**j
    raise AssertionError("no embedding image found")


_FIELD_BY_KEY = {}


def embed(a, big):
    """Embed a ∈ GF(q) into the extension field big = GF(q^k).

    Sends the subfield generator to a root of the subfield's irreducible in
    big (the least coprime power of zeta^((Q-1)/(q-1)) that is one), which
    makes the map a field homomorphism fixing prime-field integers.
    """
    sub = a.field
    if sub is big:
        return a
    _FIELD_BY_KEY[(sub.p, sub.m)] = sub
    _FIELD_BY_KEY[(big.p, big.m)] = big
    if sub.p != big.p:
        raise ValueError("different characteristic")
    w = _embed_generator_image((sub.p, sub.m), (big.p, big.m))
    acc, powv = big.zero, big.one
    for c in a.coeffs:
        acc = acc + powv * c
        powv = powv * w
    return acc
