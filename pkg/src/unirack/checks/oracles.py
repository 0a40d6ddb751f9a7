"""Cross-validation checks: the word calculus against matrix arithmetic, the
symplectic block labels against an exhaustive class census, and trivial
sanity anchors."""

import random

from ..chevalley import structure_constants, word
from ..gf import fq_make
from ..matgrp import (
    GroupSpec,
    Mat,
    antidiag_ones,
    chev_to_matrix,
    conj_class_in,
    fmt_sp_label,
    group_closure,
    jordan_partition,
    sp_label,
)
from ..rack import FiniteRack, austere_check
from .common import CheckSpec, expect, expect_eq

_FIELDS = ((2, 1), (3, 1), (2, 2))
_TYPES = (("A", 2), ("A", 3), ("C", 2), ("C", 3))


def _random_word(sc, field, rng, max_len=4):
    roots = sc.rs.positive_roots
    units = [c for c in field.elements() if c]
    k = rng.randint(1, max_len)
    return word(sc, field, *((rng.choice(roots), rng.choice(units)) for _ in range(k)))


def collect_vs_matrix(q, seed=None):
    rng = random.Random(seed if seed is not None else 0)
    ev = {}
    for kind, rank in _TYPES:
        sc = structure_constants(kind, rank)
        for p, m in _FIELDS:
            field = fq_make(p, m)
            for _ in range(500):
                w1 = _random_word(sc, field, rng)
                w2 = _random_word(sc, field, rng)
                lhs = chev_to_matrix(kind, w1 * w2)
                rhs = chev_to_matrix(kind, w1) * chev_to_matrix(kind, w2)
                expect_eq(lhs, rhs, f"{kind}{rank}/GF({p**m}) collection vs matrices")
        ev[f"{kind}{rank}"] = 500 * len(_FIELDS)
    return ev


def sp4_label_census(q, seed=None):
    sc = structure_constants("C", 2)
    field = fq_make(2, 1)
    gens = [chev_to_matrix("C", word(sc, field, (r, field.one))) for r in sc.rs.positive_roots]
    # the reversal matrix is symplectic in even characteristic and swaps the
    # two opposite unipotent radicals, so it completes a generating set
    gens.append(antidiag_ones(field, 4))
    G = group_closure(gens)
    expect_eq(len(G), 720, "group order")
    spec = GroupSpec("Sp", 4, 2)
    expect(all(spec.is_member(g) for g in gens), "generators preserve the form")

    def unipotent(g):
        try:
            jordan_partition(g)
            return True
        except ValueError:
            return False

    unip = [g for g in G if unipotent(g)]
    classes = []
    seen = set()
    for u in unip:
        if u in seen:
            continue
        cls = conj_class_in(G, u)
        seen |= cls
        classes.append(cls)
    labels = {}
    for cls in classes:
        reps = {sp_label(u, spec) for u in cls}
        expect_eq(len(reps), 1, "label constant on a class")
        labels.setdefault(reps.pop(), []).append(len(cls))
    # the regular label V(4) names one class of the algebraic group that
    # splits in two inside the finite group; every other label is sharp
    regular = (("V", 4, 1),)
    for lab, sizes in labels.items():
        if lab == regular:
            expect_eq(sorted(sizes), [90, 90], "regular label splits in two")
        else:
            expect_eq(len(sizes), 1, "non-regular label names one class")
    expect_eq(
        {fmt_sp_label(lab) or "trivial": sorted(s) for lab, s in labels.items()},
        {
            "W(1)^2": [1],
            "V(2)+W(1)": [15],
            "W(2)": [15],
            "V(2)^2": [45],
            "V(4)": [90, 90],
        },
        "census table",
    )
    expect_eq(sum(sum(s) for s in labels.values()), len(unip), "census covers all unipotents")
    return {fmt_sp_label(lab) or "trivial": tuple(sorted(s)) for lab, s in sorted(labels.items())}


def jordan_invariance(q, seed=None):
    rng = random.Random(seed if seed is not None else 0)
    n = 0
    for kind, rank in _TYPES:
        sc = structure_constants(kind, rank)
        for p, m in _FIELDS:
            field = fq_make(p, m)
            for _ in range(84):
                u = chev_to_matrix(kind, _random_word(sc, field, rng))
                rev = antidiag_ones(field, u.n)
                g = chev_to_matrix(kind, _random_word(sc, field, rng))
                if rng.random() < 0.5:
                    g = g * rev * chev_to_matrix(kind, _random_word(sc, field, rng))
                expect_eq(
                    jordan_partition(g * u * g.inv()),
                    jordan_partition(u),
                    "partition changed under conjugation",
                )
                n += 1
                if n >= 1000:
                    return {"tests": n}
    return {"tests": n}


def identity_class(q, seed=None):
    field = fq_make(2, 1)
    e = Mat.identity(field, 2)
    rack = FiniteRack.conjugation([e])
    v = austere_check(rack)
    expect_eq(v.outcome, "austere-verified", "singleton rack")
    return {"size": 1}


CHECKS = [
    CheckSpec("oracle.collect-vs-matrix", "word collection matches matrix multiplication", (2,), 120, collect_vs_matrix),
    CheckSpec("sp.4.2.label-census", "block labels match the exhaustive class census", (2,), 60, sp4_label_census),
    CheckSpec("oracle.jordan-invariance", "Jordan partitions are conjugation invariants", (2,), 60, jordan_invariance),
    CheckSpec("noop.identity-class", "the singleton rack is austere", (2,), 5, identity_class),
]
