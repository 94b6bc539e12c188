"""Pair-partitions and set partitions of {1..m}.

Ground sets are 1-indexed everywhere; any 0-indexing below is an internal
detail that never leaks through the API.  All constructors canonicalize
(pairs stored min-first and sorted by opener, blocks sorted by minimum), so
equality is structural.

Enumeration order is part of the contract: pair-partitions are generated by
recursively pairing the smallest unpaired element with each larger unpaired
element in increasing order.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Sequence, Union

from .errors import EnumerationCapError, GroundSetError

DEFAULT_ENUMERATION_CAP = 16  # ground-set size 2n

LEFT = "l"
RIGHT = "r"
SidePattern = tuple[str, ...]


def enumeration_cap(override: int | None = None) -> int:
    """Effective ground-set cap: explicit override, else MEANDER_CAP, else default."""
    if override is not None:
        return override
    env = os.environ.get("MEANDER_CAP")
    return int(env) if env else DEFAULT_ENUMERATION_CAP


def _check_cap(size: int, cap: int | None) -> None:
    limit = enumeration_cap(cap)
    if size > limit:
        raise EnumerationCapError(
            f"ground-set size {size} exceeds the enumeration cap {limit} "
            "(pass cap= or set MEANDER_CAP to raise it)"
        )


def odd_double_factorial(n: int) -> int:
    """(2n-1)!!, the number of pair-partitions of {1..2n}."""
    out = 1
    for k in range(3, 2 * n, 2):
        out *= k
    return out


def catalan(n: int) -> int:
    out = 1
    for k in range(n):
        out = out * 2 * (2 * k + 1) // (k + 2)
    return out


class PairPartition:
    """A perfect matching of {1..2n}, stored canonically.

    >>> PairPartition([(3, 4), (2, 1)]).pairs
    ((1, 2), (3, 4))
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs: Iterable[Sequence[int]]):
        canon = sorted(tuple(sorted(p)) for p in pairs)
        flat = [x for p in canon for x in p]
        m = len(flat)
        if m == 0 or m % 2:
            raise ValueError("a pair-partition needs n >= 1 pairs")
        if sorted(flat) != list(range(1, m + 1)):
            raise ValueError(f"pairs must exactly cover 1..{m}: {canon}")
        self.pairs = tuple(canon)

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def size(self) -> int:
        return 2 * len(self.pairs)

    def partner_map(self) -> tuple[int, ...]:
        """0-based lookup array: partner_map()[a-1] == partner of a."""
        out = [0] * self.size
        for a, b in self.pairs:
            out[a - 1] = b
            out[b - 1] = a
        return tuple(out)

    def partner(self, a: int) -> int:
        for x, y in self.pairs:
            if x == a:
                return y
            if y == a:
                return x
        raise ValueError(f"{a} not in ground set 1..{self.size}")

    def to_set_partition(self) -> "SetPartition":
        return SetPartition(self.pairs)

    def to_lists(self) -> list[list[int]]:
        """JSON form: array of 2-element arrays."""
        return [list(p) for p in self.pairs]

    def __eq__(self, other):
        return isinstance(other, PairPartition) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __repr__(self):
        inner = ",".join("{%d,%d}" % p for p in self.pairs)
        return "PairPartition{%s}" % inner


class SetPartition:
    """A partition of {1..m} into disjoint blocks, stored canonically."""

    __slots__ = ("m", "blocks")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        canon = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0)
        flat = [x for b in canon for x in b]
        m = len(flat)
        if m == 0:
            raise ValueError("a set partition needs a non-empty ground set")
        if sorted(flat) != list(range(1, m + 1)):
            raise ValueError(f"blocks must exactly cover 1..{m}: {canon}")
        self.m = m
        self.blocks = tuple(canon)

    def block_of(self, a: int) -> tuple[int, ...]:
        for b in self.blocks:
            if a in b:
                return b
        raise ValueError(f"{a} not in ground set 1..{self.m}")

    def to_lists(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        inner = ",".join("{%s}" % ",".join(map(str, b)) for b in self.blocks)
        return "SetPartition{%s}" % inner


PartitionLike = Union[PairPartition, SetPartition]


class Permutation:
    """A bijection of {1..m}, stored as the image tuple (images[k-1] == s(k))."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.m
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images!r}"


class IndexTuple:
    """A tuple of letters from {1..d}, i.e. a map {1..len} -> {1..d}."""

    __slots__ = ("values", "d")

    def __init__(self, values: Sequence[int], d: int):
        values = tuple(values)
        if d < 1:
            raise ValueError("alphabet size d must be positive")
        if not all(1 <= v <= d for v in values):
            raise ValueError(f"letters must lie in 1..{d}: {values}")
        self.values = values
        self.d = d

    def __len__(self):
        return len(self.values)

    def __call__(self, k: int) -> int:
        return self.values[k - 1]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, IndexTuple)
            and self.values == other.values
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.values, self.d))

    def __repr__(self):
        return f"IndexTuple({self.values!r}, d={self.d})"


def _iter_matchings_raw(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    """All matchings of the given points: smallest point paired with each
    larger one in increasing order, recursing on the rest."""
    if not points:
        yield ()
        return
    a = points[0]
    rest = points[1:]
    for j, b in enumerate(rest):
        tail = rest[:j] + rest[j + 1 :]
        for sub in _iter_matchings_raw(tail):
            yield ((a, b),) + sub


def enumerate_pair_partitions(n: int, cap: int | None = None) -> Iterator[PairPartition]:
    """All (2n-1)!! pair-partitions of {1..2n}, in the frozen recursive order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_cap(2 * n, cap)
    for pairs in _iter_matchings_raw(tuple(range(1, 2 * n + 1))):
        yield PairPartition(pairs)


def _iter_noncrossing_raw(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not points:
        yield ()
        return
    a = points[0]
    rest = points[1:]
    # a must split the remaining points into two even runs
    for j in range(0, len(rest), 2):
        b = rest[j]
        inside, outside = rest[:j], rest[j + 1 :]
        for left in _iter_noncrossing_raw(inside):
            for right in _iter_noncrossing_raw(outside):
                yield ((a, b),) + left + right


def enumerate_noncrossing(n: int, cap: int | None = None) -> Iterator[PairPartition]:
    """The Catalan(n) non-crossing pair-partitions of {1..2n}, generated
    directly (not by filtering), in a deterministic recursive order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_cap(2 * n, cap)
    for pairs in _iter_noncrossing_raw(tuple(range(1, 2 * n + 1))):
        yield PairPartition(pairs)


def crossings(pi: PairPartition) -> int:
    """Number of interleaved pair-pairs: {a,b} and {c,d} cross iff a<c<b<d."""
    ps = pi.pairs
    count = 0
    for i in range(len(ps)):
        a, b = ps[i]
        for j in range(i + 1, len(ps)):
            c, d = ps[j]
            if a < c < b < d:
                count += 1
    return count


def _as_blocks(p: PartitionLike) -> tuple[tuple[int, ...], ...]:
    if isinstance(p, PairPartition):
        return p.pairs
    if isinstance(p, SetPartition):
        return p.blocks
    raise TypeError(f"expected a partition, got {type(p).__name__}")


def _ground_size(p: PartitionLike) -> int:
    return p.size if isinstance(p, PairPartition) else p.m


class _UnionFind:
    """Array union-find with path compression; elements 0..m-1."""

    __slots__ = ("parent",)

    def __init__(self, m: int):
        self.parent = list(range(m))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def join(p: PartitionLike, q: PartitionLike) -> SetPartition:
    """Least upper bound of two partitions in reverse-refinement order."""
    m = _ground_size(p)
    if _ground_size(q) != m:
        raise GroundSetError(f"ground sets differ: {m} vs {_ground_size(q)}")
    uf = _UnionFind(m)
    for part in (p, q):
        for block in _as_blocks(part):
            first = block[0] - 1
            for x in block[1:]:
                uf.union(first, x - 1)
    groups: dict[int, list[int]] = {}
    for x in range(m):
        groups.setdefault(uf.find(x), []).append(x + 1)
    return SetPartition(groups.values())


def block_count(p: PartitionLike) -> int:
    return len(_as_blocks(p))


def rainbow(two_n: int) -> PairPartition:
    """The fully nested matching {1,2n},{2,2n-1},...,{n,n+1}."""
    if two_n < 2 or two_n % 2:
        raise ValueError(f"even ground-set size >= 2 required, got {two_n}")
    return PairPartition((k, two_n + 1 - k) for k in range(1, two_n // 2 + 1))


def interval_pairs(two_n: int) -> PairPartition:
    """The adjacent matching {1,2},{3,4},...,{2n-1,2n}."""
    if two_n < 2 or two_n % 2:
        raise ValueError(f"even ground-set size >= 2 required, got {two_n}")
    return PairPartition((k, k + 1) for k in range(1, two_n, 2))


def labels_to_heights(n: int) -> Permutation:
    """Boundary labels to vertical heights for the alternating side pattern:
    k -> 2k-1 on the left column, k -> 2(2n-k+1) on the right column.

    >>> labels_to_heights(5).images
    (1, 3, 5, 7, 9, 10, 8, 6, 4, 2)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    images = [2 * k - 1 for k in range(1, n + 1)]
    images += [2 * (2 * n - k + 1) for k in range(n + 1, 2 * n + 1)]
    return Permutation(images)


def check_side_pattern(chi: Sequence[str]) -> SidePattern:
    chi = tuple(chi)
    if len(chi) % 2 or not chi:
        raise ValueError("side pattern length must be even and positive")
    if not all(c in (LEFT, RIGHT) for c in chi):
        raise ValueError(f"side pattern entries must be '{LEFT}' or '{RIGHT}'")
    return chi


def side_pattern_permutation(chi: Sequence[str]) -> Permutation:
    """Labels-to-heights permutation of an arbitrary left/right side pattern.

    Position k <= p maps to the k-th smallest left index of chi; position
    p+j maps to the (q-j+1)-th smallest right index (right labels run
    bottom-up).  The alternating pattern reproduces ``labels_to_heights``.
    """
    chi = check_side_pattern(chi)
    lefts = [h for h, c in enumerate(chi, start=1) if c == LEFT]
    rights = [h for h, c in enumerate(chi, start=1) if c == RIGHT]
    return Permutation(lefts + rights[::-1])


def act(s: Permutation, p: PartitionLike) -> PartitionLike:
    """Natural action: relabel every block element through ``s``."""
    if s.m != _ground_size(p):
        raise GroundSetError(f"ground sets differ: {s.m} vs {_ground_size(p)}")
    blocks = [[s(x) for x in b] for b in _as_blocks(p)]
    if isinstance(p, PairPartition):
        return PairPartition(blocks)
    return SetPartition(blocks)


def kernel(index: IndexTuple) -> SetPartition:
    """Level-set partition of an index tuple: a ~ b iff I(a) == I(b)."""
    groups: dict[int, list[int]] = {}
    for pos, v in enumerate(index.values, start=1):
        groups.setdefault(v, []).append(pos)
    return SetPartition(groups.values())
