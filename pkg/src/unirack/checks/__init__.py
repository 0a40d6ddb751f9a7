"""Registry of all named verification checks."""

from . import d4, g2, oracles, recipes, rootsets, su
from .common import BudgetExceeded, CheckFailure, CheckSpec, ConfigError

ALIASES = {
    "su.3.2.regular.typeD": "su.3.2.typed",
}

_MODULES = (recipes, g2, su, d4, rootsets, oracles)


def registry():
    out = {}
    for mod in _MODULES:
        for spec in mod.CHECKS:
            if spec.ident in out:
                raise ValueError(f"duplicate check id {spec.ident!r}")
            out[spec.ident] = spec
    return out


def resolve(ident):
    reg = registry()
    ident = ALIASES.get(ident, ident)
    if ident not in reg:
        raise ConfigError(f"unknown check id {ident!r}")
    return reg[ident]


def all_idents():
    return sorted(registry())
