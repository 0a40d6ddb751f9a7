"""Triality-twisted D4 groups over GF(q).

The Steinberg endomorphism is F = graph-automorphism ∘ Fr_q, with the
order-3 symmetry ϑ: α1 → α3 → α4 → α1.  Elements of the F-fixed unipotent
subgroup U^F are products of six twisted letters: x_β(ζ), ζ ∈ F_q, for the
ϑ-fixed roots β ∈ {α2, γ4, δ}, and y_α(ξ) = x_α(ξ)x_{ϑα}(ξ^q)x_{ϑ²α}(ξ^{q²}),
ξ ∈ F_{q³}, for representatives α ∈ {α1, γ2, γ3} of the length-3 orbits
(γ_j = α1 + ... + αj, δ = α1 + 2α2 + α3 + α4).

The engine works in the untwisted D4 collection calculus over GF(q³) with
the root-vector basis rescaled by fixed signs that make the structure
constants ϑ-equivariant; the rescaling is asserted on construction.
"""

from functools import cache

from .chevalley import ChevWord, TorusElem, conj_by_torus, structure_constants, word
from .gf import embed, fq_make
from .roots import build_root_system

# signs d_r (by simple-root coordinates) making N[a,b] d_a d_b d_{a+b}
# invariant under the triality permutation of roots
_TWIST_SIGNS = {
    (1, 0, 0, 0): 1,
    (0, 1, 0, 0): 1,
    (0, 0, 1, 0): 1,
    (0, 0, 0, 1): 1,
    (1, 1, 0, 0): -1,
    (0, 1, 1, 0): 1,
    (0, 1, 0, 1): 1,
    (1, 1, 1, 0): 1,
    (1, 1, 0, 1): 1,
    (0, 1, 1, 1): -1,
    (1, 1, 1, 1): 1,
    (1, 2, 1, 1): -1,
}


class TwistedD4:
    """The calculus of U^F in a triality-twisted D4 group over GF(q)."""

    def __init__(self, q):
        p = 2 if q % 2 == 0 else (3 if q % 3 == 0 else q)
        m = 0
        n = 1
        while n < q:
            n *= p
            m += 1
        if n != q:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p = p
        self.rs = build_root_system("D", 4)
        self.sc = structure_constants("D", 4)
        self.theta = self.rs.diagram_automorphism(3)
        self.field = fq_make(p, 3 * m)  # GF(q^3)
        self.subfield = fq_make(p, m)  # GF(q)
        self._sign = {}
        for coords, s in _TWIST_SIGNS.items():
            r = self.rs.from_simple_coords(coords)
            self._sign[r] = s
            self._sign[-r] = s
        self._check_equivariance()
        rs = self.rs
        self.alpha = [rs.simple(i) for i in range(1, 5)]
        self.gamma = {
            2: rs.parse_root("[1,1,0,0]"),
            3: rs.parse_root("[1,1,1,0]"),
            4: rs.parse_root("[1,1,1,1]"),
        }
        self.delta = rs.parse_root("[1,2,1,1]")
        self.fixed_letters = (self.alpha[1], self.gamma[4], self.delta)
        self.orbit_letters = (self.alpha[0], self.gamma[2], self.gamma[3])
        # twisted letters in canonical peel order (by height, then lex)
        self.letters = (
            self.alpha[1],
            self.alpha[0],
            self.gamma[2],
            self.gamma[3],
            self.gamma[4],
            self.delta,
        )

    def _check_equivariance(self):
        th, sc = self.theta, self.sc
        for (a, b), v in sc.N.items():
            lhs = v * self._sign[a] * self._sign[b] * self._sign[a + b]
            ta, tb = th(a), th(b)
            rhs = (
                sc.N[(ta, tb)] * self._sign[ta] * self._sign[tb] * self._sign[ta + tb]
            )
            if lhs != rhs:
                raise AssertionError("twist signs fail equivariance")

    # -- letters -------------------------------------------------------

    def in_subfield(self, c):
        return c ** self.q == c

    def x(self, root, c):
        """x_β(c) for a ϑ-fixed root β; c must lie in F_q."""
        if isinstance(root, str):
            root = self.rs.parse_root(root)
        if isinstance(c, str):
            c = self.field.parse(c)
        elif isinstance(c, int):
            c = self.field.from_int(c)
        elif c.field is self.subfield:
            c = embed(c, self.field)
        if self.theta(root) != root:
            raise ValueError("root is not fixed by the symmetry")
        if not self.in_subfield(c):
            raise ValueError("coefficient of a fixed letter must lie in F_q")
        return word(self.sc, self.field, (root, c * self._sign[root]))

    def y(self, root, xi):
        """y_α(ξ) for an orbit representative α; ξ ∈ F_{q³}."""
        if isinstance(root, str):
            root = self.rs.parse_root(root)
        if isinstance(xi, str):
            xi = self.field.parse(xi)
        elif isinstance(xi, int):
            xi = self.field.from_int(xi)
        elif xi.field is self.subfield:
            xi = embed(xi, self.field)
        th = self.theta
        if th(root) == root:
            raise ValueError("root is fixed; use x()")
        q = self.q
        parts = []
        r, c = root, xi
        for _ in range(3):
            parts.append((r, c * self._sign[r]))
            r, c = th(r), c**q
        return word(self.sc, self.field, *parts)

    def identity(self):
        return word(self.sc, self.field)

    # -- the Steinberg endomorphism ------------------------------------

    def frobenius(self, w):
        """F(w): x'_r(c) ↦ x'_{ϑr}(c^q) on the rescaled letters."""
        th, q = self.theta, self.q
        out = []
        for r, c in w.factors:
            tr = th(r)
            out.append((tr, c**q * (self._sign[r] * self._sign[tr])))
        return ChevWord(self.sc, self.field, out)

    def is_f_invariant(self, w):
        return self.frobenius(w) == w

    # -- twisted coordinates -------------------------------------------

    def coefficient(self, w, root):
        """Coefficient of the rescaled letter x'_root in the collected word."""
        if isinstance(root, str):
            root = self.rs.parse_root(root)
        return w.coefficient(root) * self._sign[root]

    def twisted_coords(self, w):
        """Peel an F-invariant word into its six twisted-letter coordinates.

        Returns {letter-root: coefficient}; raises if peeling does not
        exhaust the word (every U^F element peels uniquely).
        """
        coords = {}
        rest = w
        for r in self.letters:
            c = self.coefficient(rest, r)
            coords[r] = c
            if c:
                letter = self.x(r, c) if self.theta(r) == r else self.y(r, c)
                rest = letter.inv() * rest
        if not rest.is_identity():
            raise ValueError("word is not an F-invariant unipotent element")
        return coords

    def from_coords(self, coords):
        out = self.identity()
        for r in self.letters:
            c = coords.get(r, self.field.zero)
            if c:
                out = out * (self.x(r, c) if self.theta(r) == r else self.y(r, c))
        return out

    # -- torus and enumeration -----------------------------------------

    def torus_conj(self, w, xi):
        """Conjugate by α1∨(ξ) α3∨(ξ^q) α4∨(ξ^{q²})."""
        q = self.q
        t = TorusElem(
            self.rs,
            [(self.alpha[0], xi), (self.alpha[2], xi**q), (self.alpha[3], xi ** (q * q))],
        )
        return conj_by_torus(w, t)

    def subfield_elements(self):
        return [c for c in self.field.elements() if self.in_subfield(c)]

    def uf_elements(self, letters=None):
        """All of U^F (or of the subgroup on the given letters) as words."""
        if letters is None:
            letters = self.letters
        out = [self.identity()]
        for r in letters:
            fixed = self.theta(r) == r
            values = self.subfield_elements() if fixed else self.field.elements()
            nxt = []
            for w in out:
                for c in values:
                    if not c:
                        nxt.append(w)
                    else:
                        letter = self.x(r, c) if fixed else self.y(r, c)
                        nxt.append(w * letter)
            out = nxt
        return out

    def radical_letters(self, levi):
        """Letters of V_Π^F for an F-stable Levi subset (1-based indices)."""
        phi = self.rs.phi_pi(levi)
        return tuple(r for r in self.letters if r not in phi)

    def cyclic_c_elements(self):
        """The cyclic subgroup C of order q² + q + 1 in F_{q³}^×."""
        q = self.q
        k = (q**3 - 1) // (q * q + q + 1)
        g = self.field.zeta**k
        out = []
        cur = self.field.one
        for _ in range(q * q + q + 1):
            out.append(cur)
            cur = cur * g
        return out

    def c_mod_d_representatives(self, count):
        """Representatives of distinct cosets of D = C ∩ F_q^× in C."""
        c_elems = self.cyclic_c_elements()
        d_elems = [c for c in c_elems if self.in_subfield(c)]
        reps = []
        seen = set()
        for c in c_elems:
            coset = frozenset((c * d).idx for d in d_elems)
            if coset not in seen:
                seen.add(coset)
                reps.append(c)
                if len(reps) == count:
                    break
        if len(reps) < count:
            raise ValueError("not enough cosets")
        return reps


@cache
def twisted_d4(q):
    return TwistedD4(q)
