"""Component groups of unipotent classes in spin groups.

The group S is generated by t (for the central kernel element of Spin -> SO)
and x_1..x_k, one per odd part a_i of the partition, subject to

    t^2 = 1,  x_i^2 = t^(a_i(a_i-1)/2),  x_i x_j = x_j x_i t (i != j),  t central.

The component group A is the subgroup of words of even length in the x_i.
Elements are kept in the normal form t^e x_1^e1 ... x_k^ek and indexed as
``e + 2 * mask`` where bit i-1 of ``mask`` is e_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .groups import (
    Automorphism,
    GroupError,
    GroupTable,
    center,
    conjugation,
    f_conjugacy_classes,
    fixed_subgroup,
    generated,
    is_inner,
    quotient_by_central,
    subgroup,
    twisted,
)

MAX_K = 11


@dataclass(frozen=True)
class OddPartSet:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(a) for a in self.parts)
        if not parts:
            raise ValueError("need at least one odd part")
        if any(a <= 0 or a % 2 == 0 for a in parts):
            raise ValueError(f"parts must be positive odd integers: {parts}")
        if any(b <= a for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be strictly increasing: {parts}")
        if len(parts) > MAX_K:
            raise ValueError(f"at most {MAX_K} odd parts supported")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> OddPartSet:
        return cls(tuple(parts))

    @classmethod
    def from_partition(cls, partition) -> OddPartSet:
        return cls(tuple(sorted(set(a for a in partition if a % 2))))

    @property
    def k(self) -> int:
        return len(self.parts)

    def square_exponents(self) -> tuple[int, ...]:
        return tuple((a * (a - 1) // 2) % 2 for a in self.parts)


@dataclass(frozen=True)
class SpinElement:
    theta: int
    xs: tuple[int, ...]

    @classmethod
    def identity(cls, k: int) -> SpinElement:
        return cls(0, (0,) * k)

    @classmethod
    def theta_elem(cls, k: int) -> SpinElement:
        return cls(1, (0,) * k)

    @classmethod
    def x(cls, i: int, k: int) -> SpinElement:
        """The generator x_i (1-based)."""
        if not 1 <= i <= k:
            raise ValueError(f"generator index {i} out of range 1..{k}")
        return cls(0, tuple(int(j == i - 1) for j in range(k)))

    @property
    def k(self) -> int:
        return len(self.xs)

    @property
    def is_even(self) -> bool:
        return sum(self.xs) % 2 == 0

    @property
    def index(self) -> int:
        return self.theta + 2 * sum(b << i for i, b in enumerate(self.xs))

    @classmethod
    def from_index(cls, idx: int, k: int) -> SpinElement:
        mask = idx >> 1
        return cls(idx & 1, tuple((mask >> i) & 1 for i in range(k)))

    def label(self) -> str:
        word = "".join(f"x{i + 1}" for i, b in enumerate(self.xs) if b)
        if self.theta:
            return "t" + word
        return word or "1"


def spin_multiply(u: SpinElement, v: SpinElement, parts: OddPartSet) -> SpinElement:
    """Normal-form product in S."""
    k = parts.k
    if u.k != k or v.k != k:
        raise ValueError("element length does not match the odd-part set")
    e = u.theta + v.theta
    # moving each x_j of v left past every x_i of u with i > j costs one t
    suffix = 0
    for i in range(k - 1, -1, -1):
        if v.xs[i]:
            e += suffix
        suffix += u.xs[i]
    for sq, a, b in zip(parts.square_exponents(), u.xs, v.xs):
        e += sq * a * b
    return SpinElement(e % 2, tuple(a ^ b for a, b in zip(u.xs, v.xs)))


def _multiply_indices(parts: OddPartSet) -> np.ndarray:
    """Vectorized product over all index pairs."""
    k = parts.k
    n = 2 ** (k + 1)
    idx = np.arange(n)
    t = idx & 1
    mask = idx >> 1
    bits = (mask[:, None] >> np.arange(k)[None, :]) & 1
    # swaps: sum over i > j of u_i v_j
    higher = np.cumsum(bits[:, ::-1], axis=1)[:, ::-1] - bits  # sum_{i>j} u_i at column j
    swaps = higher @ bits.T  # [u, v]
    sq = np.array(parts.square_exponents())
    squares = (bits * sq) @ bits.T
    e = (t[:, None] + t[None, :] + swaps + squares) % 2
    return e + 2 * (mask[:, None] ^ mask[None, :])


@dataclass(frozen=True, eq=False)
class SpinGroup:
    parts: OddPartSet
    S: GroupTable
    A: GroupTable

    @property
    def k(self) -> int:
        return self.parts.k

    def s_index(self, elem: SpinElement) -> int:
        return elem.index

    def a_index(self, elem: SpinElement) -> int:
        """Position of an even element inside the table A."""
        if not elem.is_even:
            raise ValueError(f"{elem.label()} is an odd word, not in A")
        return self.A.embedding.index(elem.index)

    def a_element(self, i: int) -> SpinElement:
        return SpinElement.from_index(self.A.embedding[i], self.k)

    @property
    def theta(self) -> SpinElement:
        return SpinElement.theta_elem(self.k)

    def x(self, i: int) -> SpinElement:
        return SpinElement.x(i, self.k)

    def y(self, i: int) -> SpinElement:
        """y_i = x_1 x_i for 2 <= i <= k."""
        if not 2 <= i <= self.k:
            raise ValueError(f"y_{i} undefined for k = {self.k}")
        return spin_multiply(self.x(1), self.x(i), self.parts)

    def mul(self, *elems: SpinElement) -> SpinElement:
        out = SpinElement.identity(self.k)
        for e in elems:
            out = spin_multiply(out, e, self.parts)
        return out

    def central_image(self, family: str) -> list[int]:
        """Image of Z(Spin) in A as A-indices: {1,t,z,zt} for D, {1,t} for B."""
        ids = [self.A.identity, self.a_index(self.theta)]
        if family == "D":
            z = central_element_z(self.parts)
            ids += [self.a_index(z), self.a_index(self.mul(z, self.theta))]
        return sorted(set(ids))


@lru_cache(maxsize=64)
def build_spin_group(parts: OddPartSet) -> SpinGroup:
    k = parts.k
    n = 2 ** (k + 1)
    labels = tuple(SpinElement.from_index(i, k).label() for i in range(n))
    S = GroupTable(_multiply_indices(parts), labels, check=k <= 7)
    even = [i for i in range(n) if bin(i >> 1).count("1") % 2 == 0]
    A = subgroup(S, even)
    group = SpinGroup(parts, S, A)
    gens = [group.a_index(group.theta)] + [group.a_index(group.y(i)) for i in range(2, k + 1)]
    if len(generated(A, gens)) != A.order:
        raise AssertionError("t, y_2..y_k do not generate A")
    return group


@lru_cache(maxsize=64)
def central_element_z(parts: OddPartSet) -> SpinElement:
    """Normal form of z = x_1 x_2 ... x_k.

    For even k this lies in A and the centre of A is {1, t, z, zt}.  For odd
    k >= 3 it is an odd word: it is central in S, and the centre of A is
    only {1, t}.
    """
    k = parts.k
    z = SpinElement.identity(k)
    for i in range(1, k + 1):
        z = spin_multiply(z, SpinElement.x(i, k), parts)
    if k >= 2 and k % 2 == 0:
        g = build_spin_group(parts)
        zc = [g.A.embedding[i] for i in center(g.A).embedding]
        expect = {0, 1, z.index, z.index ^ 1}
        if set(zc) != expect:
            raise AssertionError(f"centre of A is {sorted(zc)}, expected {sorted(expect)}")
    return z


def z_theta_exponent(parts: OddPartSet) -> int:
    """The constant c in z = y_2 y_3 ... y_k t^c (k even)."""
    g = build_spin_group(parts)
    if g.k % 2:
        raise ValueError("z is an even word only for even k")
    prod = g.mul(*[g.y(i) for i in range(2, g.k + 1)])
    z = central_element_z(parts)
    if prod.xs != z.xs:
        raise AssertionError("y-product and z differ outside t")
    return (z.theta - prod.theta) % 2


@dataclass(frozen=True)
class TwistPattern:
    """F(y_i) = y_i t^flips[i-2] for i = 2..k, and F(t) = t."""

    flips: tuple[int, ...]

    def __post_init__(self) -> None:
        flips = tuple(int(f) for f in self.flips)
        if any(f not in (0, 1) for f in flips):
            raise ValueError("flips must be bits")
        object.__setattr__(self, "flips", flips)

    @classmethod
    def from_bits(cls, bits: str) -> TwistPattern:
        if bits and set(bits) - {"0", "1"}:
            raise ValueError(f"flip string must be binary: {bits!r}")
        return cls(tuple(int(c) for c in bits))

    def bits(self) -> str:
        return "".join(map(str, self.flips))


def classify_twist(t: TwistPattern) -> str:
    return "b" if sum(t.flips) % 2 else "a"


def twist_automorphism(group: SpinGroup, t: TwistPattern) -> Automorphism:
    """The automorphism of A determined by a twist pattern.

    Modulo t, A is elementary abelian on y_2..y_k, and an even word x^S maps
    to the product of y_i over i in S minus {1}; F multiplies it by t to the
    sum of the corresponding flips.
    """
    k = group.k
    if len(t.flips) != k - 1:
        raise ValueError(f"need {k - 1} flips for k = {k}, got {len(t.flips)}")
    perm = []
    for i in range(group.A.order):
        e = group.a_element(i)
        phi = sum(f for f, b in zip(t.flips, e.xs[1:]) if b) % 2
        perm.append(group.a_index(SpinElement(e.theta ^ phi, e.xs)))
    auto = Automorphism(tuple(perm)).validate(group.A)
    th = group.a_index(group.theta)
    assert auto(th) == th
    for i, f in zip(range(2, k + 1), t.flips):
        yi = group.y(i)
        want = group.mul(yi, group.theta) if f else yi
        assert auto(group.a_index(yi)) == group.a_index(want)
    return auto


def flips_of(group: SpinGroup, f: Automorphism) -> TwistPattern:
    """Read the twist pattern back off an automorphism fixing t."""
    out = []
    for i in range(2, group.k + 1):
        yi = group.y(i)
        img = f(group.a_index(yi))
        if img == group.a_index(yi):
            out.append(0)
        elif img == group.a_index(group.mul(yi, group.theta)):
            out.append(1)
        else:
            raise ValueError("automorphism does not act by t-flips")
    return TwistPattern(tuple(out))


@dataclass(frozen=True)
class TwistReport:
    case: str
    inner: bool
    AF: int
    ZF: int
    Atilde: int
    well_chosen: bool
    family: str
    witness: str | None = None
    reduced_flips: str = ""
    f_classes: int = 0

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "inner": self.inner,
            "AF": self.AF,
            "ZF": self.ZF,
            "Atilde": self.Atilde,
            "well_chosen": self.well_chosen,
            "family": self.family,
            "witness": self.witness,
            "reduced_flips": self.reduced_flips,
            "f_classes": self.f_classes,
        }

    @classmethod
    def from_json(cls, d: dict) -> TwistReport:
        return cls(**{f: d[f] for f in cls.__dataclass_fields__})


def default_family(parts: OddPartSet) -> str:
    # sum of the partition has the parity of k (even parts come in pairs)
    return "D" if parts.k % 2 == 0 else "B"


def twist_analysis(
    parts: OddPartSet,
    t: TwistPattern,
    family: str | None = None,
    half_spin: bool = False,
) -> TwistReport:
    """Inner/outer analysis of a Frobenius twist and the well-chosen check.

    Inner twists are undone by moving to the representative twisted by the
    witness, where F acts trivially.  An outer (type D, case b) twist is
    reduced to a single flip by composing with the inner sigma_ij.  Orders
    are then read off the effective action.
    """
    family = (family or default_family(parts)).upper()
    if family not in ("B", "D"):
        raise ValueError(f"family must be B or D, got {family}")
    if (family == "D") != (parts.k % 2 == 0):
        raise ValueError(f"type {family} needs k of parity {'even' if family == 'D' else 'odd'}")
    case = classify_twist(t)
    if half_spin and case == "b":
        raise ValueError("case (b) twists cannot occur for half-spin groups")
    g = build_spin_group(parts)
    A = g.A
    f = twist_automorphism(g, t)
    n_classes = len(f_conjugacy_classes(A, f))
    w = is_inner(A, f)
    if w is not None:
        assert conjugation(A, w) == f
        eff = twisted(A, f, w)
        assert all(eff(x) == x for x in range(A.order))
    else:
        # pair off all flips but the last with the inner sigma_ij = x_i x_j
        flipped = [i + 2 for i, b in enumerate(t.flips) if b]
        h = g.mul(*[g.mul(g.x(i), g.x(j)) for i, j in zip(flipped[:-1:2], flipped[1:-1:2])])
        eff = twisted(A, f, g.a_index(h))
        if sum(flips_of(g, eff).flips) != 1:
            raise AssertionError(f"pattern {t.bits()} did not reduce to a single flip")
    zs = g.central_image(family)
    af = fixed_subgroup(A, eff).order
    zf = sum(1 for z in zs if eff(z) == z)
    atilde = quotient_by_central(A, zs).order
    return TwistReport(
        case=case,
        inner=w is not None,
        AF=af,
        ZF=zf,
        Atilde=atilde,
        well_chosen=af == zf * atilde,
        family=family,
        witness=A.labels[w] if w is not None else None,
        reduced_flips=flips_of(g, eff).bits(),
        f_classes=n_classes,
    )


def sigma_ij_witness(parts: OddPartSet, i: int, j: int) -> SpinElement:
    """x_i x_j, checked to flip exactly y_i and y_j under conjugation."""
    k = parts.k
    if not 2 <= i < j <= k:
        raise ValueError(f"need 2 <= i < j <= k, got i={i}, j={j}, k={k}")
    g = build_spin_group(parts)
    w = g.mul(g.x(i), g.x(j))
    conj = conjugation(g.A, g.a_index(w))
    flipped = {m + 2 for m, b in enumerate(flips_of(g, conj).flips) if b}
    if flipped != {i, j}:
        raise AssertionError(f"conjugation by x{i}x{j} flips {sorted(flipped)}")
    return w


def all_patterns(k: int):
    for m in range(2 ** (k - 1)):
        yield TwistPattern(tuple((m >> b) & 1 for b in range(k - 1)))


def center_claim(parts: OddPartSet) -> dict:
    """Centre data of A and S next to the set {1, t, z, zt}."""
    g = build_spin_group(parts)
    z = central_element_z(parts)
    claimed = {0, 1, z.index, z.index ^ 1}
    za = {g.A.embedding[i] for i in center(g.A).embedding}
    zs = set(center(g.S).embedding)
    return {
        "k": parts.k,
        "z": z.label(),
        "z_in_A": z.is_even,
        "center_A": len(za),
        "center_S": len(zs),
        "center_A_is_claimed": za == claimed,
        "center_S_is_claimed": zs == claimed,
    }


__all__ = [
    "GroupError",
    "OddPartSet",
    "SpinElement",
    "SpinGroup",
    "TwistPattern",
    "TwistReport",
    "all_patterns",
    "build_spin_group",
    "center_claim",
    "central_element_z",
    "classify_twist",
    "flips_of",
    "sigma_ij_witness",
    "spin_multiply",
    "twist_analysis",
    "twist_automorphism",
    "z_theta_exponent",
]
