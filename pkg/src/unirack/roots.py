"""Root systems in Bourbaki epsilon-coordinates.

Supports types A-G up to rank 8, with Weyl reflections, the dominance
partial order, the upward-closed sets Psi(beta), Levi subsystems Phi_Pi,
their complements Psi_Pi, chains of simple-root additions between
comparable roots, and diagram automorphisms (including D4 triality).

Simple roots are numbered 1..rank as in Bourbaki.  Positive roots are kept
in a canonical ordering: by height, then lexicographically on simple-root
coordinates.
"""

from fractions import Fraction
from functools import cache
from itertools import product


class Root:
    """A root, stored in ambient epsilon-coordinates (rationals)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)

    def __add__(self, other):
        return Root(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        return Root(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Root(-a for a in self.coords)

    def __rmul__(self, k):
        return Root(k * a for a in self.coords)

    def dot(self, other):
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def __eq__(self, other):
        return isinstance(other, Root) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "Root(" + ",".join(str(c) for c in self.coords) + ")"


def _simple_roots(kind, rank):
    def eps(i, dim):
        return Root([1 if k == i else 0 for k in range(dim)])

    if kind == "A":
        dim = rank + 1
        return [eps(i, dim) - eps(i + 1, dim) for i in range(rank)]
    if kind == "B":
        return [eps(i, rank) - eps(i + 1, rank) for i in range(rank - 1)] + [eps(rank - 1, rank)]
    if kind == "C":
        return [eps(i, rank) - eps(i + 1, rank) for i in range(rank - 1)] + [
            2 * eps(rank - 1, rank)
        ]
    if kind == "D":
        return [eps(i, rank) - eps(i + 1, rank) for i in range(rank - 1)] + [
            eps(rank - 2, rank) + eps(rank - 1, rank)
        ]
    if kind == "E":
        half = Fraction(1, 2)
        a1 = Root([half, -half, -half, -half, -half, -half, -half, half])
        a2 = eps(0, 8) + eps(1, 8)
        rest = [eps(i + 1, 8) - eps(i, 8) for i in range(6)]  # a3..a8
        return ([a1, a2] + rest)[:rank]
    if kind == "F":
        half = Fraction(1, 2)
        return [
            eps(1, 4) - eps(2, 4),
            eps(2, 4) - eps(3, 4),
            eps(3, 4),
            Root([half, -half, -half, -half]),
        ]
    if kind == "G":
        return [
            eps(0, 3) - eps(1, 3),
            Root([-2, 1, 1]),
        ]
    raise ValueError(f"unsupported kind {kind!r}")


def _solve_rational(matrix, rhs):
    """Solve a small square rational linear system by Gaussian elimination."""
    n = len(matrix)
    aug = [list(row) + [r] for row, r in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1, 1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


class RootSystem:
    def __init__(self, kind, rank):
        valid = {
            "A": range(1, 9),
            "B": range(2, 9),
            "C": range(2, 9),
            "D": range(3, 9),
            "E": (6, 7, 8),
            "F": (4,),
            "G": (2,),
        }
        if kind not in valid or rank not in valid[kind]:
            raise ValueError(f"invalid Dynkin type {kind}{rank}")
        self.kind = kind
        self.rank = rank
        self.simple_roots = _simple_roots(kind, rank)
        self._generate()

    # -- construction -------------------------------------------------

    def _generate(self):
        simples = self.simple_roots
        roots = set(simples) | {-a for a in simples}
        frontier = list(roots)
        while frontier:
            nxt = []
            for a in frontier:
                for s in simples:
                    b = self._reflect_root(s, a)
                    if b not in roots:
                        roots.add(b)
                        nxt.append(b)
            frontier = nxt
        gram = [[a.dot(b) for b in simples] for a in simples]
        self._coords_cache = {}
        for r in roots:
            rhs = [r.dot(a) for a in simples]
            sol = _solve_rational(gram, rhs)
            assert all(c.denominator == 1 for c in sol)
            self._coords_cache[r] = tuple(int(c) for c in sol)
        self.all_roots = sorted(roots, key=lambda r: self._order_key(r))
        self.positive_roots = [r for r in self.all_roots if self.height(r) > 0]
        self.positive_roots.sort(key=self._order_key)
        self._posset = set(self.positive_roots)
        self._rootset = roots
        self.cartan = [[self.pairing(a, b) for b in simples] for a in simples]

    def _order_key(self, r):
        return (self.height(r), self.simple_coords(r))

    # -- basic queries ------------------------------------------------

    def simple(self, i):
        """The i-th simple root, 1-based."""
        return self.simple_roots[i - 1]

    def is_root(self, v):
        return v in self._rootset

    def is_positive(self, v):
        return v in self._posset

    def simple_coords(self, r):
        return self._coords_cache[r]

    def from_simple_coords(self, coords):
        v = Root([0] * len(self.simple_roots[0].coords))
        for c, a in zip(coords, self.simple_roots):
            v = v + c * a
        return v

    def height(self, r):
        return sum(self.simple_coords(r))

    def pairing(self, a, b):
        """⟨a, b∨⟩ = 2(a,b)/(b,b)."""
        val = Fraction(2) * a.dot(b) / b.dot(b)
        assert val.denominator == 1
        return int(val)

    def _reflect_root(self, mirror, v):
        return v - self.pairing_vec(v, mirror)

    def pairing_vec(self, v, mirror):
        k = Fraction(2) * v.dot(mirror) / mirror.dot(mirror)
        return k * mirror

    def reflect(self, mirror, v):
        """s_mirror(v); mirror may be a 1-based simple index or a Root in Φ."""
        if isinstance(mirror, int):
            mirror = self.simple(mirror)
        if mirror not in self._rootset:
            raise ValueError("reflection mirror is not a root")
        return self._reflect_root(mirror, v)

    def apply_weyl_word(self, word, v):
        """Apply s_{i_k}...s_{i_1} to v (rightmost reflection acts first)."""
        for mirror in word:
            v = self.reflect(mirror, v)
        return v

    # -- order, Psi sets, Levi sets ------------------------------------

    def leq(self, a, b):
        """Dominance order: a ⪯ b iff b − a is a nonnegative sum of simples."""
        ca, cb = self.simple_coords(a), self.simple_coords(b)
        return all(y - x >= 0 for x, y in zip(ca, cb))

    def psi_of(self, beta):
        if beta not in self._posset:
            raise ValueError("psi_of expects a positive root")
        return {g for g in self.positive_roots if self.leq(beta, g)}

    def phi_pi(self, pi):
        """Positive roots supported on the simple-index subset pi (1-based)."""
        pi = set(pi)
        out = set()
        for r in self.positive_roots:
            c = self.simple_coords(r)
            if all(c[i] == 0 for i in range(self.rank) if (i + 1) not in pi):
                out.add(r)
        return out

    def psi_pi(self, pi):
        return set(self.positive_roots) - self.phi_pi(pi)

    def sommers_chain(self, beta, gamma):
        """Simple indices i1..ik with each partial sum beta+a_{i1}+...+a_{ij} a
        positive root and the full sum gamma; empty when beta == gamma."""
        if not self.leq(beta, gamma):
            raise ValueError("beta is not below gamma")
        target = tuple(
            y - x for x, y in zip(self.simple_coords(beta), self.simple_coords(gamma))
        )
        # BFS over remaining simple-root multiset, staying inside Φ+
        from collections import deque

        start = (beta, target, ())
        seen = {(beta, target)}
        dq = deque([start])
        while dq:
            cur, remaining, chain = dq.popleft()
            if all(x == 0 for x in remaining):
                return list(chain)
            for i in range(self.rank):
                if remaining[i] > 0:
                    nxt = cur + self.simple(i + 1)
                    if nxt in self._posset:
                        rem2 = tuple(
                            x - (1 if k == i else 0) for k, x in enumerate(remaining)
                        )
                        if (nxt, rem2) not in seen:
                            seen.add((nxt, rem2))
                            dq.append((nxt, rem2, chain + (i + 1,)))
        raise AssertionError("no chain found; dominance chain should always exist")

    # -- diagram automorphisms ----------------------------------------

    def diagram_automorphism(self, order):
        """Return a function Root -> Root extending the diagram symmetry."""
        kind, n = self.kind, self.rank
        if order == 2 and kind == "A":
            perm = {i: n + 1 - i for i in range(1, n + 1)}
        elif order == 2 and kind == "D":
            perm = {i: i for i in range(1, n + 1)}
            perm[n - 1], perm[n] = n, n - 1
        elif order == 2 and kind == "E" and n == 6:
            perm = {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}
        elif order == 3 and kind == "D" and n == 4:
            perm = {1: 3, 3: 4, 4: 1, 2: 2}
        else:
            raise ValueError(f"no order-{order} diagram automorphism for {kind}{n}")

        def theta(v):
            c = self.simple_coords(v)
            out = [0] * self.rank
            for i in range(1, self.rank + 1):
                out[perm[i] - 1] = c[i - 1]
            return self.from_simple_coords(out)

        theta.perm = perm
        return theta

    # -- naming -------------------------------------------------------

    def parse_root(self, text):
        """Parse a root literal.

        Accepts simple-root coordinates "[1,2,1,1]", simple-root names "a1",
        and the epsilon shorthand used for B/C/D/F systems: "2-3" is
        eps2-eps3, "2" is eps2, and a four-index string like "1-2+3+4" is
        (eps1-eps2+eps3+eps4)/2 (F4 half-integral roots).
        """
        text = text.strip()
        if text.startswith("["):
            coords = [int(t) for t in text.strip("[]").split(",")]
            v = self.from_simple_coords(coords)
        elif text.startswith("a"):
            v = self.simple(int(text[1:]))
        else:
            v = self._parse_eps_shorthand(text)
        if v not in self._rootset:
            raise ValueError(f"{text!r} is not a root of {self.kind}{self.rank}")
        return v

    def _parse_eps_shorthand(self, text):
        terms = []
        sign = 1
        for tok in text:
            if tok == "+":
                sign = 1
            elif tok == "-":
                sign = -1
            else:
                terms.append((sign, int(tok)))
        dim = len(self.simple_roots[0].coords)
        coords = [Fraction(0)] * dim
        scale = Fraction(1, 2) if len(terms) == 4 and self.kind == "F" else Fraction(1)
        for s, i in terms:
            coords[i - 1] += s * scale
        return Root(coords)

    def fmt_root(self, r):
        """Simple-coordinate display, e.g. [1,2,1,1]."""
        return "[" + ",".join(str(c) for c in self.simple_coords(r)) + "]"


@cache
def build_root_system(kind, rank):
    return RootSystem(kind, rank)
