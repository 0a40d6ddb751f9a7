"""Catalog of unipotent class representatives with expected verdicts.

Each record describes one displayed class representative: the group it
lives in, the admissible field sizes, a representative template with named
scalar slots, the expected verdict kind with an opaque locator label, and a
witness recipe naming the construction that certifies the verdict.

The data lives in ``data/catalog.txt`` (line-oriented, human-diffable); a
checked-in manifest records its hash and per-group record counts, and
``audit`` diffs a fresh load against it.
"""

import hashlib
import re
from dataclasses import dataclass
from functools import cache
from importlib import resources

from .chevalley import structure_constants, word
from .gf import fq_make
from .matgrp import Mat, su_spec
from .twisted_d4 import twisted_d4

KNOWN_GROUPS = ("F4", "G2", "3D4", "SU3", "SU4", "SU5", "SU6")

VERDICT_KINDS = ("type-C", "type-D", "type-F", "austere", "not-kthulhu")


@dataclass(frozen=True)
class ClassDescriptor:
    group: str
    q_constraint: str
    name: str
    template: str
    slots: tuple  # ((slot-name, constraint), ...)
    expected: str  # verdict kind
    locator: str  # check id certifying the verdict
    recipe: str

    @property
    def ident(self):
        return f"{self.group}:{self.q_constraint}:{self.name}"


# ---------------------------------------------------------------------
# loading and the q-constraint mini-language


def _data_text(name):
    return resources.files("unirack.data").joinpath(name).read_text()


def _parse_line(line):
    parts = [p.strip() for p in line.split("|")]
    if len(parts) != 7:
        raise ValueError(f"malformed catalog line: {line!r}")
    group, qc, name, template, slots_txt, expected_txt, recipe = parts
    if group not in KNOWN_GROUPS:
        raise ValueError(f"unknown group {group!r}")
    slots = ()
    if slots_txt != "-":
        slots = tuple(tuple(s.split(":")) for s in slots_txt.split(","))
    kind, _, locator = expected_txt.partition("@")
    if kind not in VERDICT_KINDS:
        raise ValueError(f"unknown verdict kind {kind!r}")
    if not locator:
        raise ValueError(f"expected verdict needs a locator: {expected_txt!r}")
    return ClassDescriptor(group, qc, name, template, slots, kind, locator, recipe)


@cache
def load_catalog():
    out = []
    for line in _data_text("catalog.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(_parse_line(line))
    idents = [d.ident for d in out]
    if len(set(idents)) != len(idents):
        raise ValueError("duplicate catalog identifiers")
    return tuple(out)


def _char_of(q):
    for p in (2, 3, 5, 7, 11, 13):
        if q % p == 0:
            return p
    return q


def q_admissible(constraint, q):
    """Evaluate a '&'-joined conjunction of q conditions at a given q."""
    p = _char_of(q)
    for tok in constraint.split("&"):
        tok = tok.strip()
        if tok == "any":
            ok = True
        elif tok == "odd":
            ok = q % 2 == 1
        elif tok == "even":
            ok = q % 2 == 0
        elif tok.startswith("p="):
            ok = p == int(tok[2:])
        elif tok.startswith("p>"):
            ok = p > int(tok[2:])
        elif tok.startswith("p!="):
            ok = p != int(tok[3:])
        elif tok.startswith("q="):
            ok = q == int(tok[2:])
        elif tok.startswith("q>"):
            ok = q > int(tok[2:])
        elif tok.startswith("q<"):
            ok = q < int(tok[2:])
        else:
            raise ValueError(f"bad q-constraint token {tok!r}")
        if not ok:
            return False
    return True


def list_classes(group, q):
    """All catalog descriptors for a group that apply at field size q."""
    if group not in KNOWN_GROUPS:
        raise ValueError(f"unsupported group {group!r}")
    return [d for d in load_catalog() if d.group == group and q_admissible(d.q_constraint, q)]


def expected_verdict(d):
    return d.expected, d.locator


# ---------------------------------------------------------------------
# slot bindings


def slot_field(group, constraint, q):
    """The field a slot value lives in."""
    if group == "3D4":
        base = twisted_d4(q)
        if constraint in ("outside-subfield", "nonsquare-ext"):
            return base.field
        return base.subfield
    if group.startswith("SU"):
        return su_spec(int(group[2:]), q).field
    p = _char_of(q)
    m = 0
    n = 1
    while n < q:
        n *= p
        m += 1
    return fq_make(p, m)


def slot_candidates(group, constraint, q):
    """All admissible values for one slot, in a deterministic order."""
    field = slot_field(group, constraint, q)
    if constraint == "nonzero":
        return field.units()
    if constraint == "any":
        return field.elements()
    if constraint == "nonsquare":
        sq = {(u * u).idx for u in field.units()}
        return [u for u in field.units() if u.idx not in sq]
    if constraint == "nonsquare-ext":
        sq = {(u * u).idx for u in field.units()}
        return [u for u in field.units() if u.idx not in sq]
    if constraint == "outside-subfield":
        return [c for c in field.elements() if c**q != c]
    if constraint == "trace-rev":
        return [c for c in field.units() if c**q == -c]
    if constraint == "nonzero-subfield":
        return [c for c in field.units() if c**q == c]
    if constraint == "generator":
        order = field.q - 1
        out = []
        for k in range(1, order + 1):
            g = field.zeta**k
            if all(g**d != field.one for d in range(1, order) if order % d == 0):
                out.append(g)
        return out
    raise ValueError(f"unknown slot constraint {constraint!r}")


def default_bindings(d, q):
    out = {}
    for name, constraint in d.slots:
        cands = slot_candidates(d.group, constraint, q)
        if not cands:
            raise ValueError(f"no admissible value for slot {name}:{constraint} at q={q}")
        out[name] = cands[0]
    return out


def all_bindings(d, q):
    """Every admissible assignment of the descriptor's slots (cartesian)."""
    names = [s[0] for s in d.slots]
    pools = [slot_candidates(d.group, c, q) for _, c in d.slots]
    out = [{}]
    for name, pool in zip(names, pools):
        out = [{**b, name: v} for b in out for v in pool]
    return out


# ---------------------------------------------------------------------
# instantiation

_LETTER_RE = re.compile(r"([xy])\(([^:]+):([^)]+)\)")


def _coef(token, field, bindings):
    token = token.strip()
    if token.startswith("-"):
        return -_coef(token[1:], field, bindings)
    if token in bindings:
        return bindings[token]
    return field.parse(token)


def _mat_entry(token, field, q, bindings):
    token = token.strip()
    neg = token.startswith("-")
    if neg:
        token = token[1:]
    val = field.one
    for factor in token.split("*"):
        if "^" in factor:
            base, _, exp = factor.partition("^")
            if base in bindings:
                e = q if exp == "q" else int(exp)
                v = bindings[base] ** e
            else:
                v = field.parse(factor)
        elif factor in bindings:
            v = bindings[factor]
        else:
            v = field.parse(factor)
        val = val * v
    return -val if neg else val


def _validate_binding(d, q, bindings):
    for name, constraint in d.slots:
        if name not in bindings:
            raise ValueError(f"missing binding for slot {name!r}")
        cands = slot_candidates(d.group, constraint, q)
        if bindings[name] not in cands:
            raise ValueError(f"binding for {name!r} violates {constraint!r}")


def instantiate(d, q, bindings=None):
    """Build the concrete representative at field size q.

    Raises on inadmissible q, slot-constraint violations, and instances
    that are not fixed by the defining Steinberg endomorphism.
    """
    if not q_admissible(d.q_constraint, q):
        raise ValueError(f"q={q} violates constraint {d.q_constraint!r}")
    if bindings is None:
        bindings = default_bindings(d, q)
    _validate_binding(d, q, bindings)

    if d.template.startswith("mat"):
        return _instantiate_matrix(d, q, bindings)
    if d.group == "3D4":
        return _instantiate_twisted(d, q, bindings)
    return _instantiate_chevalley(d, q, bindings)


def _instantiate_chevalley(d, q, bindings):
    kind, rank = (("F", 4) if d.group == "F4" else ("G", 2))
    sc = structure_constants(kind, rank)
    field = slot_field(d.group, "nonzero", q)
    factors = []
    for tag, root, coef in _LETTER_RE.findall(d.template):
        if tag != "x":
            raise ValueError("y-letters only apply to twisted groups")
        factors.append((root, _coef(coef, field, bindings)))
    return word(sc, field, *factors)


def _instantiate_twisted(d, q, bindings):
    td = twisted_d4(q)
    out = td.identity()
    for tag, root, coef in _LETTER_RE.findall(d.template):
        c = _coef(coef, td.field, bindings)
        letter = td.x(root, c) if tag == "x" else td.y(root, c)
        out = out * letter
    if not td.is_f_invariant(out):
        raise ValueError("instance is not fixed by the twisted Frobenius")
    return out


def _su_generator_scan(spec, build):
    """First generator power of the ambient field making the built matrix a
    group member; the displayed matrices assume an unspecified generator."""
    field = spec.field
    order = field.q - 1
    for k in range(1, order):
        if _gcd(k, order) != 1:
            continue
        m = build(field.zeta**k)
        if spec.is_member(m):
            return m, field.zeta**k
    raise ValueError("no field generator makes the matrix a group member")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _instantiate_matrix(d, q, bindings):
    n = int(d.group[2:])
    spec = su_spec(n, q)
    field = spec.field
    body = d.template[len("mat"):].strip()
    rows_txt = re.findall(r"\[([^][]+)\]", body)
    if len(rows_txt) != n:
        raise ValueError("matrix row count does not match the group rank")

    def build(zeta):
        local = dict(bindings)
        rows = []
        for row in rows_txt:
            entries = []
            for tok in row.split(","):
                tok = tok.strip()
                val = _mat_entry_with_gen(tok, field, q, local, zeta)
                entries.append(val)
            rows.append(entries)
        return Mat(field, rows)

    if "z" in d.template:
        m, _ = _su_generator_scan(spec, build)
    else:
        m = build(field.zeta)
        if not spec.is_member(m):
            raise ValueError("matrix instance is not a group member")
    _assert_unipotent(m, spec)
    return m


def _mat_entry_with_gen(token, field, q, bindings, zeta):
    token = token.strip()
    neg = token.startswith("-")
    if neg:
        token = token[1:]
    val = field.one
    for factor in token.split("*"):
        if factor == "z":
            v = zeta
        elif factor.startswith("z^"):
            v = zeta ** int(factor[2:])
        elif "^" in factor:
            base, _, exp = factor.partition("^")
            e = q if exp == "q" else int(exp)
            v = bindings[base] ** e
        elif factor in bindings:
            v = bindings[factor]
        else:
            v = field.parse(factor)
        val = val * v
    return -val if neg else val


def _assert_unipotent(m, spec):
    n = spec.n
    field = m.field
    diff = Mat(field, [[m.entry(i, j) - (field.one if i == j else field.zero) for j in range(n)] for i in range(n)])
    power = diff
    for _ in range(n - 1):
        power = power * diff
    if any(e for row in power.elems() for e in row):
        raise ValueError("matrix instance is not unipotent")


# ---------------------------------------------------------------------
# audit


def catalog_digest():
    return hashlib.sha256(_data_text("catalog.txt").encode()).hexdigest()


def group_counts():
    counts = {}
    for d in load_catalog():
        counts[d.group] = counts.get(d.group, 0) + 1
    return counts


def audit():
    """Diff a fresh catalog load against the checked-in manifest.

    Returns a list of discrepancy strings; empty means the catalog matches.
    """
    problems = []
    manifest = {}
    for line in _data_text("manifest.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        manifest[key.strip()] = value.strip()
    digest = catalog_digest()
    if manifest.get("sha256") != digest:
        problems.append(f"sha256 mismatch: manifest {manifest.get('sha256')}, actual {digest}")
    counts = group_counts()
    for group in KNOWN_GROUPS:
        want = int(manifest.get(f"count.{group}", "0"))
        got = counts.get(group, 0)
        if want != got:
            problems.append(f"count mismatch for {group}: manifest {want}, actual {got}")
    total = int(manifest.get("count.total", "0"))
    if total != len(load_catalog()):
        problems.append(f"total count mismatch: manifest {total}, actual {len(load_catalog())}")
    return problems
