"""Batch runner: executes named checks and emits deterministic reports.

A report is a line-oriented document with one record per (check, q) pair,
sorted by check id then q, so that output is bit-identical across runs and
parallelism levels.  Exit codes: 0 all pass, 1 any mismatch, 2 budget
exhaustion, 3 configuration error.
"""

import fnmatch
import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .checks import BudgetExceeded, CheckFailure, ConfigError, registry, resolve

_STATUS_CODE = {"pass": 0, "fail": 1, "budget": 2, "config": 3}


@dataclass(frozen=True)
class ReportEntry:
    ident: str
    q: int
    status: str
    digest: str
    locator: str
    detail: str

    def line(self):
        return f"{self.ident} | q={self.q} | {self.status} | {self.digest} | {self.locator} | {self.detail}"


def _canonical(evidence):
    if isinstance(evidence, dict):
        return "{" + ", ".join(f"{k!r}: {_canonical(v)}" for k, v in sorted(evidence.items())) + "}"
    return repr(evidence)


def run_check(ident, q=None, seed=None):
    """Execute one check; returns a ReportEntry (never raises for check
    outcomes; configuration problems raise ConfigError)."""
    spec = resolve(ident)
    if q is None:
        q = spec.qs[0]
    if q not in spec.qs:
        raise ConfigError(f"q={q} is not admissible for {spec.ident} (choose from {spec.qs})")
    seed = 0 if seed is None else seed
    try:
        evidence = spec.fn(q, seed=seed)
        status, detail = "pass", _canonical(evidence)
    except CheckFailure as e:
        status, detail = "fail", str(e)
    except BudgetExceeded as e:
        status, detail = "budget", str(e)
    payload = f"{spec.ident}|{q}|{seed}|{status}|{detail}"
    digest = hashlib.sha256(payload.encode()).hexdigest()[:16]
    return ReportEntry(spec.ident, q, status, digest, spec.anchor(), detail)


def _run_pair(args):
    ident, q, seed = args
    try:
        return run_check(ident, q=q, seed=seed)
    except ConfigError as e:
        return ReportEntry(ident, q or 0, "config", "-", "-", str(e))


def suite_jobs(pattern="*", seed=None):
    jobs = []
    for ident, spec in sorted(registry().items()):
        if not fnmatch.fnmatch(ident, pattern):
            continue
        for q in spec.qs:
            jobs.append((ident, q, seed))
    return jobs


def run_suite(pattern="*", jobs=1, seed=None):
    """Run every admissible (check, q) pair matching the glob; returns the
    sorted entry list."""
    work = suite_jobs(pattern, seed)
    if not work:
        raise ConfigError(f"no checks match {pattern!r}")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_run_pair, work))
    else:
        entries = [_run_pair(w) for w in work]
    return sorted(entries, key=lambda e: (e.ident, e.q))


def report_text(entries):
    lines = [e.line() for e in entries]
    counts = {}
    for e in entries:
        counts[e.status] = counts.get(e.status, 0) + 1
    summary = "summary: " + ", ".join(f"{k}={counts[k]}" for k in sorted(counts))
    return "\n".join(lines + [summary]) + "\n"


def exit_code(entries):
    codes = {_STATUS_CODE[e.status] for e in entries}
    for code in (1, 2, 3):
        if code in codes:
            return code
    return 0
