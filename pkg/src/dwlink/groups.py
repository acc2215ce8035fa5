"""Finite groups as fully materialized Cayley tables.

Elements are dense indices 0..order-1.  For groups built from generators the
ordering is breadth-first discovery order with index 0 the identity; for
groups built from an explicit table the table order is kept and the identity
is located.  Conjugacy classes and all centralizers are computed eagerly at
construction since the enumeration kernels query them in inner loops.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass

from .errors import (
    BadPermutation,
    BadShape,
    GroupTooLarge,
    InputError,
    NotAGroup,
    NotInSubgroup,
)

ORDER_CAP = 10000

# above this order, associativity is sampled instead of checked exhaustively
_EXHAUSTIVE_ASSOC_CAP = 64
_ASSOC_SAMPLES = 10000


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class inside an ambient set of elements (the whole group
    or a centralizer).  The representative is the smallest member index."""

    representative: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class Subgroup:
    members: tuple[int, ...]
    parent: "FiniteGroup"

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self._member_set

    @property
    def _member_set(self):
        return frozenset(self.members)


class FiniteGroup:
    """Immutable finite group backed by an order x order multiplication table."""

    def __init__(self, mul, names=None, name: str = "group", validate: bool = True):
        mul = tuple(tuple(row) for row in mul)
        n = len(mul)
        if n == 0:
            raise BadShape("empty multiplication table")
        for row in mul:
            if len(row) != n:
                raise BadShape("multiplication table is not square")
            for v in row:
                if not (0 <= v < n):
                    raise BadShape(f"table entry {v} out of range for order {n}")
        self.order = n
        self.table = mul
        self.name = name
        if names is None:
            names = tuple(str(i) for i in range(n))
        else:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise BadShape("names length does not match order")
        self.names = names

        if validate:
            self._validate()
        self.id = self._find_identity()
        self.inv = self._find_inverses()
        self.classes = self._conjugacy_classes()
        self.class_of = [0] * n
        for ci, cl in enumerate(self.classes):
            for g in cl.members:
                self.class_of[g] = ci
        self.centralizers = tuple(self._centralizer(x) for x in range(n))

    # -- construction checks -------------------------------------------------

    def _validate(self):
        n = self.order
        mul = self.table
        full = set(range(n))
        for i, row in enumerate(mul):
            if set(row) != full:
                raise NotAGroup(f"row {i} is not a permutation of the elements")
        for j in range(n):
            if {mul[i][j] for i in range(n)} != full:
                raise NotAGroup(f"column {j} is not a permutation of the elements")
        if n <= _EXHAUSTIVE_ASSOC_CAP:
            triples = (
                (a, b, c) for a in range(n) for b in range(n) for c in range(n)
            )
        else:
            rng = random.Random(0)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOC_SAMPLES)
            )
        for a, b, c in triples:
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise NotAGroup(f"associativity fails at witness ({a}, {b}, {c})")

    def _find_identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.table[e][g] == g and self.table[g][e] == g for g in range(n)):
                return e
        raise NotAGroup("no two-sided identity")

    def _find_inverses(self):
        n, e = self.order, self.id
        inv = [None] * n
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == e and self.table[h][g] == e:
                    inv[g] = h
                    break
            if inv[g] is None:
                raise NotAGroup(f"element {g} has no two-sided inverse")
        return tuple(inv)

    # -- basic arithmetic ----------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inv[g]]

    def power(self, g: int, n: int) -> int:
        """g^n by binary exponentiation; n may be zero or negative."""
        if n < 0:
            g, n = self.inv[g], -n
        acc = self.id
        while n:
            if n & 1:
                acc = self.table[acc][g]
            g = self.table[g][g]
            n >>= 1
        return acc

    def elements(self) -> range:
        return range(self.order)

    def element_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"no element named {name!r} in {self.name}") from None

    # -- conjugacy machinery -------------------------------------------------

    def _conjugacy_classes(self):
        seen = [False] * self.order
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            members = sorted({self.conj(g, x) for g in range(self.order)})
            for m in members:
                seen[m] = True
            classes.append(ConjClass(members[0], tuple(members)))
        classes.sort(key=lambda c: c.representative)
        return tuple(classes)

    def _centralizer(self, x: int) -> Subgroup:
        members = tuple(
            g for g in range(self.order) if self.table[g][x] == self.table[x][g]
        )
        return Subgroup(members, self)

    def centralizer(self, x: int) -> Subgroup:
        return self.centralizers[x]

    def class_in_subgroup(self, H: Subgroup, h: int) -> ConjClass:
        """Orbit of h under conjugation by members of H only."""
        if h not in set(H.members):
            raise NotInSubgroup(f"element {h} is not in the subgroup")
        members = sorted({self.conj(g, h) for g in H.members})
        return ConjClass(members[0], tuple(members))

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


# -- constructors -----------------------------------------------------------


def from_cayley_table(table, names=None, name: str = "table") -> FiniteGroup:
    return FiniteGroup(table, names=names, name=name)


def _cycles_to_perm(degree: int, cycles) -> tuple[int, ...]:
    """Cycles in 1-based notation -> permutation as a 0-based image tuple."""
    perm = list(range(degree))
    for cyc in cycles:
        if len(set(cyc)) != len(cyc):
            raise BadPermutation(f"repeated point in cycle {cyc}")
        for pt in cyc:
            if not (1 <= pt <= degree):
                raise BadPermutation(f"point {pt} out of range 1..{degree}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a - 1] = b - 1
    if sorted(perm) != list(range(degree)):
        raise BadPermutation(f"cycles {cycles} do not define a permutation")
    return tuple(perm)


def _perm_name(perm: tuple[int, ...]) -> str:
    """Cycle-notation display string, identity shown as 'e'."""
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) if parts else "e"


def from_permutation_generators(
    degree: int, generators, name: str = "perm", cap: int = ORDER_CAP
) -> FiniteGroup:
    """Close the generators under composition (breadth-first) and build the
    Cayley table of the generated group.  Element 0 is the identity."""
    if degree < 1:
        raise BadPermutation("degree must be positive")
    gens = [_cycles_to_perm(degree, g) for g in generators]
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in index:
                    if len(elems) >= cap:
                        raise GroupTooLarge(
                            f"generated group exceeds cap of {cap} elements"
                        )
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    n = len(elems)
    table = [
        [index[tuple(a[b[i]] for i in range(degree))] for b in elems] for a in elems
    ]
    names = [_perm_name(p) for p in elems]
    return FiniteGroup(table, names=names, name=name, validate=False)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError("cyclic group order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, name=f"cyclic:{n}", validate=False)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: rotations r^a and reflections r^a s."""
    if n < 1:
        raise InputError("dihedral parameter must be positive")
    order = 2 * n

    def idx(a, b):
        return a + n * b

    table = [[0] * order for _ in range(order)]
    for a1 in range(n):
        for b1 in range(2):
            for a2 in range(n):
                for b2 in range(2):
                    # (r^a1 s^b1)(r^a2 s^b2) = r^(a1 + (-1)^b1 a2) s^(b1+b2)
                    a = (a1 + (a2 if b1 == 0 else -a2)) % n
                    table[idx(a1, b1)][idx(a2, b2)] = idx(a, (b1 + b2) % 2)
    names = [f"r{a}" if a else "e" for a in range(n)]
    names += [f"r{a}s" if a else "s" for a in range(n)]
    return FiniteGroup(table, names=names, name=f"dihedral:{n}", validate=False)


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError("symmetric group degree must be positive")
    if n == 1:
        return from_permutation_generators(1, [], name="symmetric:1")
    gens = [[(1, 2)]]
    if n > 2:
        gens.append([tuple(range(1, n + 1))])
    return from_permutation_generators(n, gens, name=f"symmetric:{n}")


_QUAT_NAMES = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
# quaternion units as (sign, axis) with axis 0 = scalar, 1..3 = i, j, k
_QUAT_AXIS_MUL = {
    (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
    (1, 2): (1, 3), (2, 1): (-1, 3),
    (2, 3): (1, 1), (3, 2): (-1, 1),
    (3, 1): (1, 2), (1, 3): (-1, 2),
}


def quaternion8() -> FiniteGroup:
    def unpack(i):
        return (-1 if i % 2 else 1, i // 2)

    def pack(sign, axis):
        return 2 * axis + (0 if sign == 1 else 1)

    def mul(a, b):
        sa, xa = unpack(a)
        sb, xb = unpack(b)
        if xa == 0:
            return pack(sa * sb, xb)
        if xb == 0:
            return pack(sa * sb, xa)
        sc, xc = _QUAT_AXIS_MUL[(xa, xb)]
        return pack(sa * sb * sc, xc)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return FiniteGroup(table, names=_QUAT_NAMES, name="quaternion:8", validate=False)


# -- group spec strings -----------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycles(text: str):
    """Parse e.g. '(1 2)(3 4)' into [[1,2],[3,4]]; 'e' or '' is identity."""
    text = text.strip()
    if text in ("", "e", "()"):
        return []
    cycles = []
    consumed = 0
    for m in _CYCLE_RE.finditer(text):
        consumed += len(m.group(0))
        pts = [int(tok) for tok in m.group(1).replace(",", " ").split()]
        if pts:
            cycles.append(tuple(pts))
    if consumed != len(text.replace(" ", "")) and not cycles:
        raise BadPermutation(f"cannot parse cycles from {text!r}")
    return cycles


def from_group_spec(spec: str) -> FiniteGroup:
    """Build a group from a spec string: cyclic:N, dihedral:N, symmetric:N,
    quaternion:8, perm:<degree>:<cycles;cycles;...>, or file:<path>."""
    spec = spec.strip()
    kind, _, rest = spec.partition(":")
    if kind == "cyclic":
        return cyclic(_parse_positive(rest, spec))
    if kind == "dihedral":
        return dihedral(_parse_positive(rest, spec))
    if kind == "symmetric":
        return symmetric(_parse_positive(rest, spec))
    if kind == "quaternion":
        if rest != "8":
            raise InputError("only quaternion:8 is available")
        return quaternion8()
    if kind == "perm":
        deg_s, _, gens_s = rest.partition(":")
        degree = _parse_positive(deg_s, spec)
        gens = [
            _parse_cycles(part) for part in gens_s.split(";") if part.strip()
        ]
        return from_permutation_generators(degree, gens, name=spec)
    if kind == "file":
        with open(rest) as fh:
            doc = json.load(fh)
        try:
            table = doc["mul"]
        except (KeyError, TypeError):
            raise InputError(f"{rest}: expected an object with a 'mul' table")
        return from_cayley_table(table, names=doc.get("names"), name=spec)
    raise InputError(f"unknown group spec {spec!r}")


def _parse_positive(text: str, spec: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise InputError(f"bad group spec {spec!r}") from None
    if n < 1:
        raise InputError(f"bad group spec {spec!r}: parameter must be positive")
    return n
