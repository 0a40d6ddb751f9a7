import pytest

from unirack.roots import build_root_system

COUNTS = {
    ("A", 2): 3,
    ("A", 3): 6,
    ("B", 3): 9,
    ("C", 2): 4,
    ("C", 3): 9,
    ("D", 4): 12,
    ("E", 6): 36,
    ("E", 7): 63,
    ("E", 8): 120,
    ("F", 4): 24,
    ("G", 2): 6,
}


@pytest.mark.parametrize("kind,rank", sorted(COUNTS))
def test_positive_root_counts(kind, rank):
    rs = build_root_system(kind, rank)
    assert len(rs.positive_roots) == COUNTS[(kind, rank)]


@pytest.mark.parametrize("kind,rank", [("A", 3), ("D", 4), ("F", 4), ("G", 2)])
def test_reflections_permute_roots(kind, rank):
    rs = build_root_system(kind, rank)
    allr = set(rs.all_roots)
    for i in range(1, rank + 1):
        imgs = {rs.reflect(i, r) for r in allr}
        assert imgs == allr
        for r in allr:
            assert rs.reflect(i, rs.reflect(i, r)) == r


def test_simple_coords_roundtrip():
    rs = build_root_system("E", 6)
    for r in rs.positive_roots:
        c = rs.simple_coords(r)
        assert rs.from_simple_coords(c) == r
        assert all(x >= 0 for x in c)


def test_psi_upward_closed():
    rs = build_root_system("D", 5)
    for beta in rs.positive_roots:
        psi = rs.psi_of(beta)
        for g in psi:
            for i in range(1, rs.rank + 1):
                up = g + rs.simple(i)
                if rs.is_root(up):
                    assert up in psi


def test_phi_pi_is_subsystem():
    rs = build_root_system("F", 4)
    phi = rs.phi_pi((2, 3, 4))
    for a in phi:
        for b in phi:
            s = a + b
            if rs.is_root(s) and rs.is_positive(s):
                assert s in phi
    assert rs.psi_pi((2, 3, 4)) == set(rs.positive_roots) - phi


def test_sommers_chain_partial_sums():
    rs = build_root_system("E", 6)
    beta = rs.simple(3)
    for gamma in rs.positive_roots:
        if not rs.leq(beta, gamma):
            continue
        chain = rs.sommers_chain(beta, gamma)
        cur = beta
        for i in chain:
            cur = cur + rs.simple(i)
            assert rs.is_root(cur) and rs.is_positive(cur)
        assert cur == gamma


@pytest.mark.parametrize(
    "kind,rank,order",
    [("A", 3, 2), ("D", 4, 2), ("D", 5, 2), ("E", 6, 2), ("D", 4, 3)],
)
def test_diagram_automorphism(kind, rank, order):
    rs = build_root_system(kind, rank)
    th = rs.diagram_automorphism(order)
    pos = set(rs.positive_roots)
    assert {th(r) for r in pos} == pos
    # automorphism preserves the root pairing structure
    for a in list(pos)[:10]:
        for b in list(pos)[:10]:
            s = a + b
            if rs.is_root(s):
                assert th(a) + th(b) == th(s)
    cur = dict.fromkeys(pos)
    w = {r: r for r in pos}
    for _ in range(order):
        w = {r: th(v) for r, v in w.items()}
    assert all(w[r] == r for r in pos)


def test_parse_root_forms():
    rs = build_root_system("D", 4)
    assert rs.parse_root("a2") == rs.simple(2)
    assert rs.parse_root("[1,1,1,0]") == rs.simple(1) + rs.simple(2) + rs.simple(3)
    assert rs.parse_root("1-2") == rs.simple(1)
