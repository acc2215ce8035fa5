"""Executable congruence check between a braid closure and the closure of
its p^k-th power.

The closure of beta^(p^k) is a p^k-periodic link whose quotient is the
closure of beta.  When every cycle length of the braid permutation is
coprime to p, both closures have the same number of components and the
cycles of the powered braid have the same member sets, so components align
by shared bottom basepoints.  The check sweeps boundary data (x, [h]) and
compares the class-level count for [h] on the quotient side with the count
for [h^(p^k)] on the periodic side, modulo p.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .arith import is_prime
from .braids import BraidWord, braid_power, components
from .dw import cen_class_rep, x_tuples
from .errors import (
    ComponentMismatch,
    GroupOrderDivisible,
    NotPrime,
    InputError,
)
from .groups import FiniteGroup
from .holonomy import enumerate_homs


@dataclass(frozen=True)
class CongruenceInstance:
    beta: BraidWord
    p: int
    k: int
    group: FiniteGroup


@dataclass
class Violation:
    x: tuple[int, ...]
    hclass: tuple[int, ...]
    lhs_count: int
    rhs_count: int


@dataclass
class CongruenceReport:
    instance: CongruenceInstance
    n: int
    cases_checked: int = 0
    violations: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_obj(self):
        G = self.instance.group
        return {
            "braid": str(self.instance.beta),
            "p": self.instance.p,
            "k": self.instance.k,
            "group": G.name,
            "components": self.n,
            "cases_checked": self.cases_checked,
            "violations": [
                {
                    "x": [G.names[e] for e in v.x],
                    "h_class": [G.names[e] for e in v.hclass],
                    "lhs_count": v.lhs_count,
                    "rhs_count": v.rhs_count,
                }
                for v in self.violations
            ],
            "ok": self.ok,
            "elapsed": round(self.elapsed, 6),
        }


def check_preconditions(
    beta: BraidWord, p: int, k: int, G: FiniteGroup
) -> CongruenceInstance:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise InputError("k must be at least 1")
    if G.order % p == 0:
        raise GroupOrderDivisible(
            f"p = {p} divides the group order {G.order}"
        )
    for cyc in components(beta).cycles:
        if len(cyc) % p == 0:
            raise ComponentMismatch(
                f"cycle of length {len(cyc)} is not coprime to p = {p}; the "
                "closures of the braid and its power have different component counts"
            )
    return CongruenceInstance(beta, p, k, G)


def _class_buckets(recs, G, x, n):
    """Bucket hom records by the tuple of centralizer-class representatives
    of their longitude images."""
    buckets = {}
    for r in recs:
        key = tuple(cen_class_rep(G, x[t], r.longitude[t]) for t in range(n))
        buckets[key] = buckets.get(key, 0) + 1
    return buckets


def verify(
    instance: CongruenceInstance,
    x_scope: str = "representatives",
    threads: int = 1,
) -> CongruenceReport:
    beta, p, k, G = instance.beta, instance.p, instance.k, instance.group
    q = p**k
    big = braid_power(beta, q)

    comp = components(beta)
    comp_big = components(big)
    # coprimality makes cycles (hence basepoints and ordering) coincide
    assert comp_big.basepoints == comp.basepoints
    n = comp.count

    report = CongruenceReport(instance, n)
    t0 = time.perf_counter()
    for x in x_tuples(G, n, x_scope):
        rhs = _class_buckets(
            enumerate_homs(beta, G, x_constraint=x, threads=threads), G, x, n
        )
        lhs = _class_buckets(
            enumerate_homs(big, G, x_constraint=x, threads=threads), G, x, n
        )
        # one representative h_t per class of Cen(x_t)
        rep_lists = []
        for t in range(n):
            cen = G.centralizer(x[t])
            reps = sorted(
                {cen_class_rep(G, x[t], h) for h in cen.members}
            )
            rep_lists.append(reps)
        for h in itertools.product(*rep_lists):
            report.cases_checked += 1
            rhs_count = rhs.get(
                tuple(cen_class_rep(G, x[t], h[t]) for t in range(n)), 0
            )
            hp = tuple(G.power(h[t], q) for t in range(n))
            lhs_count = lhs.get(
                tuple(cen_class_rep(G, x[t], hp[t]) for t in range(n)), 0
            )
            if (lhs_count - rhs_count) % p != 0:
                report.violations.append(
                    Violation(x, h, lhs_count, rhs_count)
                )
    report.violations.sort(key=lambda v: (v.x, v.hclass))
    report.elapsed = time.perf_counter() - t0
    return report


@dataclass
class SweepEntry:
    spec: dict
    status: str  # "ok", "violations", "precondition-failed", "error"
    detail: str = ""
    report: CongruenceReport | None = None


@dataclass
class SweepSummary:
    entries: list

    @property
    def any_violation(self) -> bool:
        return any(e.status == "violations" for e in self.entries)

    @property
    def any_failure(self) -> bool:
        return any(e.status != "ok" for e in self.entries)

    def to_json_obj(self):
        return {
            "entries": [
                {
                    "spec": e.spec,
                    "status": e.status,
                    "detail": e.detail,
                    "report": e.report.to_json_obj() if e.report else None,
                }
                for e in self.entries
            ],
            "ok": not self.any_failure,
        }


def sweep(catalog, x_scope: str = "representatives", threads: int = 1) -> SweepSummary:
    """Run verify on each catalog entry, aggregating outcomes without
    aborting on per-entry failures.

    Catalog entries are dicts {"braid": "m: letters", "p": int, "k": int,
    "group": "<group spec>"}.
    """
    from .braids import parse_braid
    from .groups import from_group_spec

    entries = []
    for spec in catalog:
        try:
            beta = parse_braid(spec["braid"])
            G = from_group_spec(spec["group"])
            instance = check_preconditions(beta, int(spec["p"]), int(spec["k"]), G)
        except (NotPrime, GroupOrderDivisible, ComponentMismatch) as exc:
            entries.append(SweepEntry(spec, "precondition-failed", str(exc)))
            continue
        except Exception as exc:  # malformed entry
            entries.append(SweepEntry(spec, "error", str(exc)))
            continue
        try:
            report = verify(instance, x_scope=x_scope, threads=threads)
        except Exception as exc:
            entries.append(SweepEntry(spec, "error", str(exc)))
            continue
        status = "ok" if report.ok else "violations"
        entries.append(SweepEntry(spec, status, report=report))
    return SweepSummary(entries)
