"""Homomorphisms from a braid closure's link group to a finite group.

Homomorphisms pi_1(beta^) -> G correspond to m-tuples of G fixed by the
braid action on G^m.  A tuple labels the meridians at the bottom of the
braid; the generator for letter +i sends (a, b) at the two crossing
positions to (a b a^-1, a), its inverse sends (a, b) to (b, b^-1 a b).
Per-component meridian and longitude images are derived from a fixed tuple.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .braids import BraidWord, ComponentData, components
from .errors import LengthMismatch, NotAFixedPoint, SearchTooLarge
from .groups import FiniteGroup

SEARCH_CAP = 10**9


def artin_action(beta: BraidWord, a, G: FiniteGroup) -> tuple[int, ...]:
    """Propagate bottom labels through the braid; returns the top labels."""
    if len(a) != beta.strands:
        raise LengthMismatch(
            f"tuple length {len(a)} != strand count {beta.strands}"
        )
    labels = list(a)
    mul, inv = G.table, G.inv
    for l in beta.letters:
        i = abs(l) - 1
        x, y = labels[i], labels[i + 1]
        if l > 0:
            labels[i] = mul[mul[x][y]][inv[x]]
            labels[i + 1] = x
        else:
            labels[i] = y
            labels[i + 1] = mul[mul[inv[y]][x]][y]
    return tuple(labels)


@dataclass(frozen=True)
class HomRecord:
    """A braid-action fixed tuple with its per-component boundary data."""

    tuple: tuple[int, ...]
    meridian: tuple[int, ...]
    longitude: tuple[int, ...]


def longitude_image(
    beta: BraidWord,
    a,
    t: int,
    G: FiniteGroup,
    comp: ComponentData | None = None,
    check: bool = True,
) -> int:
    """Image of the 0-framed longitude of closure component t.

    Traverses the component from its basepoint, accumulating the label of
    the over-strand (to the sign of the letter) at every under-pass; the
    blackboard-framed result is then corrected by the component's
    self-writhe.
    """
    a = tuple(a)
    if check and artin_action(beta, a, G) != a:
        raise NotAFixedPoint(f"{a} is not fixed by the braid action")
    if comp is None:
        comp = components(beta)
    mul, inv = G.table, G.inv

    acc = G.id
    start = comp.basepoints[t]
    pos = start
    for _ in comp.cycles[t]:
        labels = list(a)
        for l in beta.letters:
            i = abs(l) - 1
            x, y = labels[i], labels[i + 1]
            if pos == i or pos == i + 1:
                # accumulate the over-strand's label (to the letter's sign) at
                # every under-pass; with mul(a, b) meaning "b first", traversal
                # order puts new contributions on the left
                if l > 0:
                    # strand at position i passes over
                    if pos == i + 1:
                        acc = mul[x][acc]
                else:
                    # strand at position i+1 passes over
                    if pos == i:
                        acc = mul[inv[y]][acc]
                pos = i + 1 if pos == i else i
            if l > 0:
                labels[i] = mul[mul[x][y]][inv[x]]
                labels[i + 1] = x
            else:
                labels[i] = y
                labels[i + 1] = mul[mul[inv[y]][x]][y]
        # closure arc: top position p joins bottom position p
    assert pos == start

    meridian = a[start]
    return mul[acc][G.power(meridian, -comp.self_writhe[t])]


def _candidate_sets(beta, G, comp, x_constraint):
    """Per-position candidate element lists, pruned by conjugacy when
    meridian images are prescribed."""
    m = beta.strands
    cands = [list(G.elements()) for _ in range(m)]
    if x_constraint is not None:
        if len(x_constraint) != comp.count:
            raise LengthMismatch(
                f"constraint length {len(x_constraint)} != component count {comp.count}"
            )
        for t, cyc in enumerate(comp.cycles):
            x = x_constraint[t]
            cls = list(G.classes[G.class_of[x]].members)
            for p in cyc:
                cands[p] = [x] if p == comp.basepoints[t] else cls
    return cands


def _scan(beta, G, comp, cands_chunk):
    mul = G.table
    perm_letters = beta.letters
    out = []
    for a in itertools.product(*cands_chunk):
        labels = list(a)
        ok = True
        for l in perm_letters:
            i = abs(l) - 1
            x, y = labels[i], labels[i + 1]
            if l > 0:
                labels[i] = mul[mul[x][y]][G.inv[x]]
                labels[i + 1] = x
            else:
                labels[i] = y
                labels[i + 1] = mul[mul[G.inv[y]][x]][y]
        for i in range(len(a)):
            if labels[i] != a[i]:
                ok = False
                break
        if ok:
            out.append(a)
    return out


def enumerate_homs(
    beta: BraidWord,
    G: FiniteGroup,
    x_constraint=None,
    threads: int = 1,
    allow_large: bool = False,
) -> list[HomRecord]:
    """All fixed tuples of the braid action, in lexicographic order, with
    meridian and longitude data.  x_constraint optionally prescribes the
    meridian image of each closure component."""
    comp = components(beta)
    cands = _candidate_sets(beta, G, comp, x_constraint)

    size = 1
    for c in cands:
        size *= len(c)
    if size > SEARCH_CAP and not allow_large:
        raise SearchTooLarge(
            f"search space of {size} candidates exceeds cap {SEARCH_CAP}"
        )

    if threads > 1 and cands and len(cands[0]) > 1:
        chunks = [[[c0]] + [list(c) for c in cands[1:]] for c0 in cands[0]]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(lambda ch: _scan(beta, G, comp, ch), chunks)
            fixed = [a for part in results for a in part]
    else:
        fixed = _scan(beta, G, comp, cands)

    records = []
    for a in fixed:
        meridian = tuple(a[b] for b in comp.basepoints)
        longitude = tuple(
            longitude_image(beta, a, t, G, comp=comp, check=False)
            for t in range(comp.count)
        )
        records.append(HomRecord(a, meridian, longitude))
    return records


def count_homs(beta: BraidWord, G: FiniteGroup, **kw) -> int:
    return len(enumerate_homs(beta, G, **kw))
