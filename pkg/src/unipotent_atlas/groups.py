"""Small finite groups given by explicit multiplication tables.

Everything here is exhaustive enumeration; groups are capped at
``MAX_ORDER`` elements.  Elements are integer indices ``0..n-1`` into the
table, with string labels kept alongside for display and serialization.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

MAX_ORDER = 4096


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group as a Cayley table.

    ``mul[a, b]`` is the index of ``a*b``.  ``embedding`` maps our indices
    into a parent group when this table is a subgroup; ``projection`` maps
    parent indices onto ours when this table is a quotient.
    """

    mul: np.ndarray
    labels: tuple[str, ...]
    embedding: tuple[int, ...] | None = None
    projection: tuple[int, ...] | None = None
    check: bool = field(default=True, repr=False)
    identity: int = field(init=False)
    inverse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        mul = np.asarray(self.mul, dtype=np.int64)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
            raise GroupError("multiplication table must be square")
        n = mul.shape[0]
        if n < 1 or n > MAX_ORDER:
            raise GroupError(f"group order {n} outside 1..{MAX_ORDER}")
        if mul.min() < 0 or mul.max() >= n:
            raise GroupError("table entries out of range")
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise GroupError("labels must be unique, one per element")
        mul.setflags(write=False)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "labels", tuple(self.labels))

        ar = np.arange(n)
        ids = [e for e in range(n) if (mul[e] == ar).all() and (mul[:, e] == ar).all()]
        if len(ids) != 1:
            raise GroupError("no two-sided identity")
        e = ids[0]
        inv = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(mul == e)
        inv[rows] = cols
        if (inv < 0).any() or (mul[inv, ar] != e).any():
            raise GroupError("some element has no inverse")
        inv.setflags(write=False)
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", inv)
        if self.check and not self.is_associative():
            raise GroupError("multiplication is not associative")

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def __len__(self) -> int:
        return self.order

    def is_associative(self) -> bool:
        n = self.order
        mul = self.mul
        # chunk over the left factor so the n^3 check stays in memory
        step = max(1, 2_000_000 // (n * n))
        for start in range(0, n, step):
            a = np.arange(start, min(n, start + step))
            left = mul[mul[a][:, :, None], np.arange(n)[None, None, :]]
            right = mul[a[:, None, None], mul[None, :, :]]
            if not np.array_equal(left, right):
                return False
        return True

    def op(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def product(self, elems: Iterable[int]) -> int:
        out = self.identity
        for x in elems:
            out = int(self.mul[out, x])
        return out

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = int(self.mul[x, a])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def to_json(self) -> str:
        return json.dumps(
            {"order": self.order, "labels": list(self.labels), "mul": self.mul.tolist()}
        )

    @classmethod
    def from_json(cls, text: str) -> GroupTable:
        data = json.loads(text)
        table = cls(np.array(data["mul"]), tuple(data["labels"]))
        if table.order != data["order"]:
            raise GroupError("declared order does not match table")
        return table


def from_elements(
    elements: Sequence[Hashable],
    op: Callable[[Hashable, Hashable], Hashable],
    labels: Sequence[str] | None = None,
) -> GroupTable:
    """Tabulate a group from a closed list of elements and a product."""
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            try:
                mul[i, j] = index[op(a, b)]
            except KeyError:
                raise GroupError(f"product of {a!r} and {b!r} leaves the set") from None
    if labels is None:
        labels = [str(x) for x in elements]
    return GroupTable(mul, tuple(labels))


def cyclic(n: int) -> GroupTable:
    return from_elements(list(range(n)), lambda a, b: (a + b) % n)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply q first, then p
    return tuple(p[i] for i in q)


def _perm_label(p: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        cycles.append("(" + " ".join(cyc) + ")")
    return "".join(cycles) or "()"


def symmetric(n: int) -> GroupTable:
    perms = sorted(itertools.permutations(range(n)))
    return from_elements(perms, _compose, [_perm_label(p) for p in perms])


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    n, m = g.order, h.order
    mul = (g.mul[:, None, :, None] * m + h.mul[None, :, None, :]).reshape(n * m, n * m)
    labels = tuple(f"({a},{b})" for a in g.labels for b in h.labels)
    return GroupTable(mul, labels, check=False)


@dataclass(frozen=True)
class Automorphism:
    """An automorphism as a permutation of element indices."""

    perm: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.perm[x]

    def array(self) -> np.ndarray:
        return np.asarray(self.perm, dtype=np.int64)

    def is_valid_for(self, group: GroupTable) -> bool:
        if len(self.perm) != group.order or sorted(self.perm) != list(range(group.order)):
            return False
        p = self.array()
        if p[group.identity] != group.identity:
            return False
        return bool(np.array_equal(p[group.mul], group.mul[p[:, None], p[None, :]]))

    def validate(self, group: GroupTable) -> Automorphism:
        if not self.is_valid_for(group):
            raise GroupError("permutation is not an automorphism of the group")
        return self

    def compose(self, other: Automorphism) -> Automorphism:
        """``self`` after ``other``."""
        return Automorphism(tuple(self.perm[x] for x in other.perm))


def identity_automorphism(group: GroupTable) -> Automorphism:
    return Automorphism(tuple(range(group.order)))


def conjugation(group: GroupTable, g: int) -> Automorphism:
    """The inner automorphism x -> g^-1 x g."""
    gi = group.inv(g)
    return Automorphism(tuple(int(v) for v in group.mul[group.mul[gi], g]))


def generated(group: GroupTable, gens: Iterable[int]) -> set[int]:
    gens = list(gens)
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = int(group.mul[x, s])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def generating_set(group: GroupTable) -> list[int]:
    """A small generating set, chosen greedily from high-order elements."""
    order = sorted(range(group.order), key=lambda x: (-group.element_order(x), x))
    gens: list[int] = []
    span = {group.identity}
    for x in order:
        if len(span) == group.order:
            break
        if x not in span:
            gens.append(x)
            span = generated(group, gens)
    return gens


def extend_to_automorphism(group: GroupTable, gens: list[int], images: Sequence[int]) -> Automorphism | None:
    """Extend generator images to a homomorphism, or None if inconsistent."""
    img = {group.identity: group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, images):
                y = int(group.mul[x, s])
                fy = int(group.mul[img[x], t])
                if y in img:
                    if img[y] != fy:
                        return None
                else:
                    img[y] = fy
                    nxt.append(y)
        frontier = nxt
    perm = tuple(img[x] for x in range(group.order))
    if len(set(perm)) != group.order:
        return None
    cand = Automorphism(perm)
    return cand if cand.is_valid_for(group) else None


def automorphisms(group: GroupTable) -> list[Automorphism]:
    """All automorphisms, by brute force over generator images."""
    gens = generating_set(group)
    by_order: dict[int, list[int]] = {}
    for x in range(group.order):
        by_order.setdefault(group.element_order(x), []).append(x)
    pools = [by_order[group.element_order(s)] for s in gens]
    found = []
    for images in itertools.product(*pools):
        auto = extend_to_automorphism(group, gens, images)
        if auto is not None:
            found.append(auto)
    return found


def _orbits(n: int, pairs: Iterable[tuple[np.ndarray, np.ndarray]]) -> list[tuple[int, ...]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for xs, ys in pairs:
        for x, y in zip(xs.tolist(), ys.tolist()):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), []).append(x)
    return [tuple(c) for c in classes.values()]


def f_conjugacy_classes(group: GroupTable, f: Automorphism) -> list[tuple[int, ...]]:
    """Orbits of x -> g x F(g)^-1, sorted by smallest member."""
    f.validate(group)
    fa = f.array()
    xs = np.arange(group.order)

    def moves():
        for g in range(group.order):
            tail = group.inverse[fa[g]]
            yield xs, group.mul[group.mul[g, xs], tail]

    return sorted(_orbits(group.order, moves()))


def conjugacy_classes(group: GroupTable) -> list[tuple[int, ...]]:
    return f_conjugacy_classes(group, identity_automorphism(group))


def subgroup(group: GroupTable, elements: Iterable[int]) -> GroupTable:
    """The subgroup on ``elements`` (which must be closed), with embedding."""
    elems = sorted(set(int(x) for x in elements))
    pos = {x: i for i, x in enumerate(elems)}
    sub = group.mul[np.ix_(elems, elems)]
    try:
        mul = np.vectorize(pos.__getitem__)(sub) if elems else sub
    except KeyError:
        raise GroupError("element set is not closed under multiplication") from None
    return GroupTable(
        mul, tuple(group.labels[x] for x in elems), embedding=tuple(elems), check=False
    )


def fixed_subgroup(group: GroupTable, f: Automorphism) -> GroupTable:
    f.validate(group)
    return subgroup(group, [x for x in range(group.order) if f(x) == x])


def is_inner(group: GroupTable, f: Automorphism) -> int | None:
    """Some g with F(x) = g^-1 x g for every x, or None."""
    fa = f.array()
    for g in range(group.order):
        gi = group.inverse[g]
        if np.array_equal(group.mul[group.mul[gi], g], fa):
            return g
    return None


def center(group: GroupTable) -> GroupTable:
    mul = group.mul
    return subgroup(group, [x for x in range(group.order) if np.array_equal(mul[x], mul[:, x])])


def _members(group: GroupTable, z: GroupTable | Iterable[int]) -> list[int]:
    if isinstance(z, GroupTable):
        if z.embedding is None:
            raise GroupError("subgroup table carries no embedding into the group")
        return list(z.embedding)
    return sorted(set(int(x) for x in z))


def quotient_by_central(group: GroupTable, z: GroupTable | Iterable[int]) -> GroupTable:
    """G/Z for a central subgroup Z; the result carries the projection map."""
    zs = _members(group, z)
    if group.identity not in zs:
        raise GroupError("subgroup must contain the identity")
    for x in zs:
        if not np.array_equal(group.mul[x], group.mul[:, x]):
            raise GroupError(f"element {group.labels[x]} is not central")
    if generated(group, zs) != set(zs):
        raise GroupError("element set is not a subgroup")
    proj = [-1] * group.order
    reps: list[int] = []
    for x in range(group.order):
        if proj[x] >= 0:
            continue
        for y in zs:
            proj[int(group.mul[x, y])] = len(reps)
        reps.append(x)
    m = len(reps)
    mul = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            mul[i, j] = proj[int(group.mul[a, b])]
    labels = tuple(group.labels[r] + "Z" if r != group.identity else "1" for r in reps)
    if len(set(labels)) != m:
        labels = tuple(f"c{i}" for i in range(m))
    return GroupTable(mul, labels, projection=tuple(proj), check=False)


def twisted(group: GroupTable, f: Automorphism, h: int) -> Automorphism:
    """The action of F after twisting the representative by h: x -> h F(x) h^-1."""
    hi = group.inv(h)
    return Automorphism(tuple(int(group.mul[group.mul[h, f(x)], hi]) for x in range(group.order)))


def lemma22_equivalence(group: GroupTable, f: Automorphism) -> tuple[bool, bool, bool]:
    """The three equivalent conditions for an abelian component group.

    (F-class count equals |G|, F fixes G pointwise, F fixes G pointwise after
    twisting by every h).  Raises if the three disagree.
    """
    if not group.is_abelian():
        raise GroupError("equivalence only holds for abelian groups")
    f.validate(group)
    n = group.order
    counts = len(f_conjugacy_classes(group, f)) == n
    fixed = fixed_subgroup(group, f).order == n
    every = all(fixed_subgroup(group, twisted(group, f, h)).order == n for h in range(n))
    if not counts == fixed == every:
        raise AssertionError("abelian F-class equivalence violated")
    return counts, fixed, every
