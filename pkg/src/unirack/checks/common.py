"""Shared plumbing for the named verification checks."""

from dataclasses import dataclass, field as dc_field

from ..gf import fq_make
from ..matgrp import ClosureCapExceeded


class CheckFailure(Exception):
    """A computed value disagrees with its expected golden value."""


class ConfigError(Exception):
    """Bad parameters for a check (unknown id, inadmissible q, ...)."""


BudgetExceeded = ClosureCapExceeded


@dataclass(frozen=True)
class CheckSpec:
    """A named, deterministic verification job.

    ``fn(q, seed)`` returns an evidence dict on success and raises
    CheckFailure on mismatch; ``qs`` lists the admissible field sizes, the
    first being the default; ``budget`` is an advisory wall-clock cap in
    seconds used to size the suite.
    """

    ident: str
    summary: str
    qs: tuple
    budget: float
    fn: object
    locator: str = dc_field(default="")

    def anchor(self):
        return self.locator or f"anchor:{self.ident}"


def base_field(q):
    p = 2 if q % 2 == 0 else (3 if q % 3 == 0 else q)
    m = 0
    n = 1
    while n < q:
        n *= p
        m += 1
    if n != q:
        raise ConfigError(f"{q} is not a prime power")
    return fq_make(p, m)


def expect(cond, what):
    if not cond:
        raise CheckFailure(what)


def expect_eq(got, want, what):
    if got != want:
        raise CheckFailure(f"{what}: got {got!r}, want {want!r}")


def orbit_under(x, conjugators):
    """Orbit of x under repeated conjugation by a fixed generator list."""
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for g in conjugators:
                z = g * y * g.inv()
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return seen
