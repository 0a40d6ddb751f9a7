"""Finite racks and the type C / D / F detectors.

A rack is a set with a self-distributive operation x ▷ y whose left
translations are bijections; conjugacy classes are racks under
x ▷ y = x y x^{-1}.  The detectors take explicit witness elements from a
class, build the subgroup they generate, and certify the combinatorial
configuration that each criterion requires.  Every positive answer carries
a CriterionWitness whose inequalities can be re-verified from the stored
elements alone.
"""

from dataclasses import dataclass, field

from .matgrp import ClosureCapExceeded, conj_class_in, group_closure


def _conj(x, y):
    return x * y * x.inv()


def _conj_inv(x, y):
    xi = x.inv()
    return xi * y * x


@dataclass(frozen=True)
class CriterionWitness:
    kind: str  # "C", "C-orbit", "D", "F", "product-D"
    witnesses: tuple
    subgroup_order: int
    evidence: tuple  # (name, value) pairs

    def evidence_dict(self):
        return dict(self.evidence)


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "type-C", "type-D", "type-F", "austere-verified", "inconclusive"
    witness: object = None
    detail: tuple = ()


class FiniteRack:
    """A finite rack; group-backed (conjugation) or table-backed."""

    def __init__(self, elements, op, inv_op):
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate rack elements")
        self._op = op
        self._inv_op = inv_op

    @classmethod
    def conjugation(cls, elements):
        elems = []
        seen = set()
        for x in elements:
            if x not in seen:
                seen.add(x)
                elems.append(x)
        for x in elems:
            for y in elems:
                if _conj(x, y) not in seen:
                    raise ValueError("set is not closed under conjugation")
        return cls(elems, _conj, _conj_inv)

    @classmethod
    def from_table(cls, text):
        """Parse an operation table, one row of 0-based images per line."""
        rows = [
            [int(t) for t in line.split()]
            for line in text.strip().splitlines()
            if line.strip()
        ]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("table is not square")
        inv_rows = []
        for row in rows:
            if sorted(row) != list(range(n)):
                raise ValueError("row is not a permutation")
            inv = [0] * n
            for j, img in enumerate(row):
                inv[img] = j
            inv_rows.append(inv)
        op = lambda x, y: rows[x][y]
        inv_op = lambda x, y: inv_rows[x][y]
        return cls(range(n), op, inv_op)

    def op(self, x, y):
        return self._op(x, y)

    def inv_op(self, x, y):
        return self._inv_op(x, y)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._index

    def is_self_distributive(self):
        for x in self.elements:
            for y in self.elements:
                xy = self._op(x, y)
                for z in self.elements:
                    if self._op(x, self._op(y, z)) != self._op(xy, self._op(x, z)):
                        return False
        return True

    def subrack_gen(self, seeds):
        """Closure of the seeds under ▷ and its inverse."""
        seeds = list(seeds)
        for s in seeds:
            if s not in self._index:
                raise ValueError("seed outside the rack")
        seen = set(seeds)
        order = list(dict.fromkeys(seeds))
        frontier = list(order)
        while frontier:
            nxt = []
            for x in list(order):
                for y in frontier:
                    for z in (self._op(x, y), self._inv_op(x, y), self._op(y, x), self._inv_op(y, x)):
                        if z not in seen:
                            seen.add(z)
                            order.append(z)
                            nxt.append(z)
            frontier = nxt
        return FiniteRack(order, self._op, self._inv_op)

    def inn_orbits(self):
        """Orbits of the inner group generated by all left translations."""
        remaining = list(self.elements)
        out = []
        while remaining:
            seed = remaining[0]
            orbit = {seed}
            frontier = [seed]
            while frontier:
                nxt = []
                for y in frontier:
                    for x in self.elements:
                        for z in (self._op(x, y), self._inv_op(x, y)):
                            if z not in orbit:
                                orbit.add(z)
                                nxt.append(z)
                frontier = nxt
            out.append(orbit)
            remaining = [x for x in remaining if x not in orbit]
        return out

    def is_abelian(self):
        return all(
            self._op(x, y) == y for x in self.elements for y in self.elements
        )

    def is_indecomposable(self):
        return len(self.inn_orbits()) == 1


def class_rack(H, x):
    """The conjugation rack on the H-class of x."""
    return FiniteRack.conjugation(sorted_class(conj_class_in(H, x)))


def sorted_class(cls_set):
    return sorted(cls_set, key=repr)


def _pair_closure(r, s, cap):
    H = group_closure([r, s, r.inv(), s.inv()], cap=cap)
    R = conj_class_in(H, r)
    S = conj_class_in(H, s)
    return H, R, S


def type_d_pair(r, s, cap=2_000_000):
    """Type D from a witness pair: H = ⟨r,s⟩, O_r^H ∩ O_s^H = ∅ and
    (rs)² ≠ (sr)²."""
    H, R, S = _pair_closure(r, s, cap)
    disjoint = not (R & S)
    rs, sr = r * s, s * r
    ineq = rs * rs != sr * sr
    ok = disjoint and ineq
    wit = CriterionWitness(
        kind="D",
        witnesses=(r, s),
        subgroup_order=len(H),
        evidence=(
            ("classes_disjoint", disjoint),
            ("rs_sq_ne_sr_sq", ineq),
            ("orbit_sizes", (len(R), len(S))),
        ),
    )
    if ok:
        # decomposable subrack re-check at rack level
        Y = FiniteRack.conjugation(sorted_class(R) + sorted_class(S))
        assert Y.op(r, Y.op(s, Y.op(r, s))) != s
    return ok, wit


def type_c_pair(r, s, cap=2_000_000):
    """Type C from a witness pair: r²s ≠ sr², s²r ≠ rs², and the ⟨r,s⟩-classes
    of r and s differ."""
    H, R, S = _pair_closure(r, s, cap)
    c1 = r * r * s != s * r * r
    c2 = s * s * r != r * s * s
    c3 = R != S
    ok = c1 and c2 and c3
    wit = CriterionWitness(
        kind="C",
        witnesses=(r, s),
        subgroup_order=len(H),
        evidence=(
            ("r2s_ne_sr2", c1),
            ("s2r_ne_rs2", c2),
            ("classes_differ", c3),
            ("orbit_sizes", (len(R), len(S))),
        ),
    )
    if ok:
        assert len(R) > 2 and len(S) > 2, "witness orbits must exceed two elements"
    return ok, wit


def type_c_orbit(r, s, cap=2_000_000):
    """Type C at orbit level: disjoint ⟨r,s⟩-classes R ∋ r, S ∋ s with
    r ▷ s ≠ s and min(|R|,|S|) > 2 or max(|R|,|S|) > 4.

    Needed when r and s are involutions, where the pairwise inequalities of
    the two-element form cannot hold.
    """
    H, R, S = _pair_closure(r, s, cap)
    disjoint = not (R & S)
    moves = _conj(r, s) != s
    sizes = sorted((len(R), len(S)))
    size_ok = sizes[0] > 2 or sizes[1] > 4
    ok = disjoint and moves and size_ok
    wit = CriterionWitness(
        kind="C-orbit",
        witnesses=(r, s),
        subgroup_order=len(H),
        evidence=(
            ("classes_disjoint", disjoint),
            ("r_moves_s", moves),
            ("orbit_sizes", tuple(sizes)),
        ),
    )
    return ok, wit


def type_f_quad(quad, cap=2_000_000):
    """Type F from four witnesses: pairwise-disjoint ⟨r₁..r₄⟩-classes with
    r_i ▷ r_j ≠ r_j for i ≠ j."""
    quad = tuple(quad)
    if len(quad) != 4:
        raise ValueError("type F needs four witnesses")
    gens = list(quad) + [x.inv() for x in quad]
    H = group_closure(gens, cap=cap)
    classes = [conj_class_in(H, x) for x in quad]
    disjoint = all(
        not (classes[i] & classes[j]) for i in range(4) for j in range(i + 1, 4)
    )
    moved = all(
        _conj(quad[i], quad[j]) != quad[j]
        for i in range(4)
        for j in range(4)
        if i != j
    )
    ok = disjoint and moved
    wit = CriterionWitness(
        kind="F",
        witnesses=quad,
        subgroup_order=len(H),
        evidence=(
            ("classes_pairwise_disjoint", disjoint),
            ("witnesses_pairwise_moved", moved),
            ("orbit_sizes", tuple(len(c) for c in classes)),
        ),
    )
    return ok, wit


def product_rack_type_d(x1, x2, y1, y2):
    """Type D for a product rack X × Y: x₁▷(x₂▷(x₁▷x₂)) ≠ x₂ and y₁▷y₂ = y₂."""
    if x1 == x2 or y1 == y2:
        return False
    return _conj(x1, _conj(x2, _conj(x1, x2))) != x2 and _conj(y1, y2) == y2


def austere_check(rack, cap=10_000):
    """Verify every 2-generated subrack is abelian or indecomposable."""
    if len(rack) > cap:
        raise ClosureCapExceeded("rack too large for pairwise exhaustion")
    elems = rack.elements
    pairs = 0
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            sub = rack.subrack_gen([elems[i], elems[j]])
            if not (sub.is_abelian() or sub.is_indecomposable()):
                return Verdict(
                    outcome="inconclusive",
                    detail=(("violating_pair", (elems[i], elems[j])),),
                )
            pairs += 1
    return Verdict(outcome="austere-verified", detail=(("pairs_checked", pairs),))


def sober_check(rack):
    """Full-powerset soberness exhaustion; exploratory, tiny racks only."""
    if len(rack) > 16:
        raise ClosureCapExceeded("sober exhaustion limited to 16 elements")
    from itertools import combinations

    elems = rack.elements
    n = len(elems)
    checked = 0
    for size in range(2, n + 1):
        for combo in combinations(elems, size):
            s = set(combo)
            closed = all(
                rack.op(x, y) in s and rack.inv_op(x, y) in s
                for x in combo
                for y in combo
            )
            if not closed:
                continue
            sub = FiniteRack(combo, rack._op, rack._inv_op)
            if not (sub.is_abelian() or sub.is_indecomposable()):
                return Verdict(outcome="inconclusive", detail=(("subrack", combo),))
            checked += 1
    return Verdict(outcome="austere-verified", detail=(("subracks_checked", checked),))
