"""Partitions labelling nilpotent orbits and the arithmetic attached to them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence


class PartitionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise PartitionError("a partition needs at least one part")
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise PartitionError(f"parts must be positive integers: {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise PartitionError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def dual(self) -> "Partition":
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def is_regular(self) -> bool:
        return len(self.parts) == 1

    def is_subregular(self) -> bool:
        return self.parts == (self.total - 1, 1) if self.total > 2 else self.parts == (1, 1)

    def label(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __str__(self) -> str:
        return self.label()


def dual_partition(p: Partition) -> Partition:
    return p.dual()


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    for parts in _partitions(n, n if largest is None else largest):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def centralizer_dim_sl(p: Partition) -> int:
    """``dim (sl_N)_v`` for nilpotent ``v`` of Jordan type ``p``."""
    if p.total < 2:
        raise PartitionError("sl_N needs N >= 2")
    return sum(q * q for q in p.dual().parts) - 1


def span_dim_nilpotent_case1(p: Partition) -> int:
    """Number of nonzero even powers ``v^2, v^4, ...`` of a nilpotent of type ``p``."""
    return (p.parts[0] - 1) // 2


def _check_nonregular(p: Partition) -> None:
    if p.dual().parts[0] < 2:
        raise PartitionError(f"{p} is regular; the inequality applies to non-regular orbits only")


def inequality_case1(p: Partition) -> tuple[Fraction, bool]:
    """``1/2 sum (d_i - 1)^2 + floor((s-1)/2) - s/2`` for the dual ``d`` of a partition of ``2n``."""
    if p.total % 2:
        raise PartitionError("case 1 needs a partition of an even number")
    _check_nonregular(p)
    d = p.dual().parts
    s = len(d)
    lhs = Fraction(sum((x - 1) ** 2 for x in d), 2) + (s - 1) // 2 - Fraction(s, 2)
    return lhs, lhs >= 0


def inequality_case2(p: Partition) -> tuple[Fraction, bool]:
    """Same with ``(s + 1)/2`` in place of ``s/2``, for partitions of ``2n + 1``."""
    if p.total % 2 == 0:
        raise PartitionError("case 2 needs a partition of an odd number")
    _check_nonregular(p)
    d = p.dual().parts
    s = len(d)
    lhs = Fraction(sum((x - 1) ** 2 for x in d), 2) + (s - 1) // 2 - Fraction(s + 1, 2)
    return lhs, lhs >= 0


def pfaffian_vanishing_rule(p: Partition) -> bool:
    """Whether the Pfaffian's differential vanishes at a nilpotent of ``so_2n`` of type ``p``."""
    if p.total % 2:
        raise PartitionError("the Pfaffian rule is for so_2n")
    if not is_orthogonal_partition(p):
        raise PartitionError(f"{p} is not the type of an orthogonal nilpotent")
    return len(p.parts) >= 3


def is_orthogonal_partition(p: Partition) -> bool:
    """Even parts occur with even multiplicity."""
    return all(p.parts.count(k) % 2 == 0 for k in set(p.parts) if k % 2 == 0)


def orthogonal_partitions(n: int) -> list[Partition]:
    return [p for p in partitions(n) if is_orthogonal_partition(p)]


def pair_partition_data(p: Partition, case: str) -> dict:
    """Dimensions behind the orbit inequality for the block pairs, from ``p`` alone."""
    n2 = p.total
    cz = centralizer_dim_sl(p)
    if case == "even":
        m = n2 // 2 - 1
        g0v = Fraction(cz - 1, 2)
    elif case == "odd":
        m = n2 // 2
        g0v = Fraction(cz, 2)
    else:
        raise ValueError(f"case must be 'even' or 'odd', got {case!r}")
    span = span_dim_nilpotent_case1(p)
    return {"m": m, "g0_centralizer_dim": g0v, "span_dim": span,
            "margin": span + g0v - (2 * m + 1)}


def all_partitions_upto(n: int) -> list[Partition]:
    return [p for k in range(1, n + 1) for p in partitions(k)]


def parse_partition(text: str | Sequence[int]) -> Partition:
    if isinstance(text, str):
        body = text.strip().strip("()[]")
        try:
            parts = [int(t) for t in body.replace(" ", "").split(",") if t]
        except ValueError:
            raise PartitionError(f"cannot parse partition {text!r}") from None
        return Partition.of(*parts)
    return Partition.of(*text)
