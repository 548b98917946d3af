"""Unipotent classes of Sp_2n, SO_N and Spin_N as partitions.

Conventions: a partition labels the Jordan type of the class in the natural
representation.  For Sp every odd part has even multiplicity; for SO and
Spin every even part has even multiplicity.

``n`` means different things per family, following the usual names:
Sp_2n for ``Sp`` and SO_N (N = n) for ``SO`` and ``Spin``.  The cuspidal-pair
table is the exception: there ``n`` is half the dimension for both families.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from typing import Iterator, Sequence

FAMILIES = ("Sp", "SO", "Spin")
MAX_N = 12


def normalize_family(family: str) -> str:
    for f in FAMILIES:
        if family.lower() == f.lower():
            return f
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` as weakly decreasing tuples, in reverse lex order."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def _norm(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(sorted((int(a) for a in parts), reverse=True))
    if any(a <= 0 for a in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def transpose(parts: Sequence[int]) -> tuple[int, ...]:
    parts = _norm(parts)
    if not parts:
        return ()
    return tuple(sum(1 for a in parts if a > i) for i in range(parts[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam >= mu in dominance order (same total)."""
    lam, mu = _norm(lam), _norm(mu)
    if sum(lam) != sum(mu):
        raise ValueError("dominance compares partitions of the same number")
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam[i] if i < len(lam) else 0
        t += mu[i] if i < len(mu) else 0
        if s < t:
            return False
    return True


def validate_partition(family: str, parts: Sequence[int]) -> bool:
    family = normalize_family(family)
    try:
        parts = _norm(parts)
    except ValueError:
        return False
    mult = Counter(parts)
    if family == "Sp":
        return sum(parts) % 2 == 0 and all(m % 2 == 0 for a, m in mult.items() if a % 2)
    return all(m % 2 == 0 for a, m in mult.items() if a % 2 == 0)


def _require(family: str, parts: Sequence[int]) -> tuple[str, tuple[int, ...]]:
    family = normalize_family(family)
    if not validate_partition(family, parts):
        raise ValueError(f"{tuple(parts)} is not a valid {family} partition")
    return family, _norm(parts)


def spin_doubles(parts: Sequence[int]) -> bool:
    """At least one odd part and every odd part occurs once.

    These are exactly the classes where the centre of Spin embeds in the
    component group.
    """
    odd = [a for a in parts if a % 2]
    return bool(odd) and len(odd) == len(set(odd))


def component_group_order(family: str, parts: Sequence[int]) -> int:
    family, parts = _require(family, parts)
    if family == "Sp":
        return 2 ** len({a for a in parts if a % 2 == 0})
    so = 2 ** max(0, len({a for a in parts if a % 2}) - 1)
    if family == "Spin" and spin_doubles(parts):
        return 2 * so
    return so


def cuspidal_pair_exists(family: str, n: int) -> tuple[int, ...] | None:
    """The cuspidal class of Sp_2n or SO_2n, if there is one."""
    family = normalize_family(family)
    if n < 1:
        return None
    k = 1
    if family == "Sp":
        while k * (k + 1) // 2 < n:
            k += 1
        return tuple(range(2 * k, 0, -2)) if k * (k + 1) // 2 == n else None
    if family == "SO":
        while 2 * k * k < n:
            k += 1
        return tuple(range(4 * k - 1, 0, -2)) if 2 * k * k == n else None
    raise ValueError("cuspidal pairs are tabulated for Sp and SO only")


def cuspidal_k(family: str, n: int) -> int | None:
    """The block parameter k with n = k(k+1)/2 (Sp) or n = 2k^2 (SO)."""
    part = cuspidal_pair_exists(family, n)
    if part is None:
        return None
    return len(part) if normalize_family(family) == "Sp" else len(part) // 2


def group_dimension(family: str, total: int) -> tuple[int, int]:
    """(dim G, rank G) for the group acting on a space of dimension ``total``."""
    family = normalize_family(family)
    if family == "Sp":
        n = total // 2
        return n * (2 * n + 1), n
    return total * (total - 1) // 2, total // 2


def centralizer_dimension(family: str, parts: Sequence[int]) -> int:
    family, parts = _require(family, parts)
    sq = sum(c * c for c in transpose(parts))
    odd = sum(1 for a in parts if a % 2)
    twice = sq + odd if family == "Sp" else sq - odd
    assert twice % 2 == 0
    return twice // 2


def orbit_dimensions(family: str, parts: Sequence[int]) -> tuple[int, int]:
    """(dim of the class, dim of the Springer fibre)."""
    family, parts = _require(family, parts)
    dim_g, rank = group_dimension(family, sum(parts))
    dim_c = centralizer_dimension(family, parts)
    dim_o = dim_g - dim_c
    if dim_o % 2 or (dim_c - rank) % 2 or dim_c < rank:
        raise AssertionError(f"non-integral dimensions for {family} {parts}")
    return dim_o, (dim_c - rank) // 2


@dataclass(frozen=True)
class ClassRecord:
    family: str
    partition: tuple[int, ...]
    a_order: int
    dim_orbit: int
    dim_springer_fiber: int
    cuspidal: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["partition"] = list(self.partition)
        return d

    @classmethod
    def from_json(cls, d: dict) -> ClassRecord:
        return cls(**{**d, "partition": tuple(d["partition"])})

    def tsv_row(self) -> str:
        part = ",".join(map(str, self.partition))
        return "\t".join(
            [part, str(self.a_order), str(self.dim_orbit), str(self.dim_springer_fiber),
             str(int(self.cuspidal))]
        )


TSV_HEADER = "partition\tA\tdim_orbit\tfiber\tcuspidal"


def _total(family: str, n: int) -> int:
    return 2 * n if family == "Sp" else n


def make_record(family: str, parts: Sequence[int]) -> ClassRecord:
    family, parts = _require(family, parts)
    total = sum(parts)
    dim_o, fiber = orbit_dimensions(family, parts)
    cusp = None
    if family == "Sp":
        cusp = cuspidal_pair_exists("Sp", total // 2)
    elif total % 2 == 0:
        cusp = cuspidal_pair_exists("SO", total // 2)
    return ClassRecord(
        family=family,
        partition=parts,
        a_order=component_group_order(family, parts),
        dim_orbit=dim_o,
        dim_springer_fiber=fiber,
        cuspidal=cusp == parts,
    )


def enumerate_classes(family: str, n: int) -> list[ClassRecord]:
    """All unipotent classes, sorted by class dimension then partition."""
    family = normalize_family(family)
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n = {n} out of range for {family}")
    total = _total(family, n)
    recs = [make_record(family, p) for p in partitions(total) if validate_partition(family, p)]
    return sorted(recs, key=lambda r: (r.dim_orbit, r.partition))
