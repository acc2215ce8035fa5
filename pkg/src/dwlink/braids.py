"""Braid words, their permutations, and closure component bookkeeping.

Positions are 0-based internally (bottom positions 0..m-1); letters keep the
usual signed-generator convention, +i for the i-th Artin generator acting on
positions i-1 and i.  Letters are read bottom to top.  Letter +i is the
positive crossing in which the strand entering at the lower position passes
over its neighbour; strands are oriented upward.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BadBraid, StrandMismatch


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise BadBraid("strand count must be at least 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for l in self.letters:
            if l == 0 or not (1 <= abs(l) <= self.strands - 1):
                raise BadBraid(
                    f"letter {l} out of range for {self.strands} strands"
                )

    def __str__(self):
        return f"{self.strands}: " + " ".join(str(l) for l in self.letters)


def parse_braid(text: str) -> BraidWord:
    """Parse '<m>: l1 l2 ... lk' (empty letter list permitted)."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise BadBraid(f"missing ':' in braid {text!r}")
    try:
        m = int(head.strip())
        letters = tuple(int(tok) for tok in tail.split())
    except ValueError:
        raise BadBraid(f"cannot parse braid {text!r}") from None
    return BraidWord(m, letters)


def permutation(beta: BraidWord) -> tuple[int, ...]:
    """perm[i] = top position of the strand entering at bottom position i."""
    pos = list(range(beta.strands))  # pos[j] = current position of bottom strand j
    for l in beta.letters:
        i = abs(l) - 1
        a = pos.index(i)
        b = pos.index(i + 1)
        pos[a], pos[b] = pos[b], pos[a]
    return tuple(pos)


def compose(beta2: BraidWord, beta1: BraidWord) -> BraidWord:
    """beta2 after beta1: letters of beta1 followed by letters of beta2."""
    if beta2.strands != beta1.strands:
        raise StrandMismatch(
            f"cannot compose braids on {beta2.strands} and {beta1.strands} strands"
        )
    return BraidWord(beta1.strands, beta1.letters + beta2.letters)


def braid_power(beta: BraidWord, n: int) -> BraidWord:
    if n < 1:
        raise BadBraid("braid power requires n >= 1")
    return BraidWord(beta.strands, beta.letters * n)


@dataclass(frozen=True)
class ComponentData:
    """Cycle decomposition of the closure with writhe/linking bookkeeping.

    cycles[t] lists the bottom positions of component t, starting at the
    minimal one; components are sorted by that basepoint.  self_writhe[t] is
    the signed count of crossings of component t with itself; linking[t][s]
    is half the signed count of crossings between components t != s.
    """

    count: int
    cycles: tuple[tuple[int, ...], ...]
    basepoints: tuple[int, ...]
    self_writhe: tuple[int, ...]
    linking: tuple[tuple[int, ...], ...]


def _cycles_of(perm: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    cycles = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        cycles.append(tuple(cyc))
    cycles.sort(key=lambda c: c[0])
    return tuple(cycles)


def components(beta: BraidWord) -> ComponentData:
    m = beta.strands
    perm = permutation(beta)
    cycles = _cycles_of(perm)
    n = len(cycles)
    comp_of = [0] * m
    for t, cyc in enumerate(cycles):
        for j in cyc:
            comp_of[j] = t

    self_writhe = [0] * n
    inter = [[0] * n for _ in range(n)]
    strand_at = list(range(m))  # strand_at[p] = bottom strand currently at position p
    for l in beta.letters:
        i = abs(l) - 1
        sign = 1 if l > 0 else -1
        ca = comp_of[strand_at[i]]
        cb = comp_of[strand_at[i + 1]]
        if ca == cb:
            self_writhe[ca] += sign
        else:
            inter[ca][cb] += sign
            inter[cb][ca] += sign
        strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]

    linking = [[0] * n for _ in range(n)]
    for t in range(n):
        for s in range(t + 1, n):
            total = inter[t][s]
            # signed inter-component crossings always pair up in a closed braid
            assert total % 2 == 0, (beta, t, s, total)
            linking[t][s] = linking[s][t] = total // 2

    return ComponentData(
        count=n,
        cycles=cycles,
        basepoints=tuple(c[0] for c in cycles),
        self_writhe=tuple(self_writhe),
        linking=tuple(tuple(row) for row in linking),
    )


def cycle_split_counts(beta: BraidWord, n: int) -> int:
    """Number of closure components of beta^n, from the cycle structure alone."""
    return sum(gcd(len(c), n) for c in components(beta).cycles)
