"""Truncated deformed Fock space over C^d with exact coefficients.

States are finitely supported maps from basis words over {1..d} to scalars
(the empty word is the vacuum); operators act on these sparse maps and are
never materialised as matrices.  The inner product of two length-n words is
the permutation sum weighted by q^(inversions); creation prepends/appends a
vector, annihilation is the q-weighted sum over removal positions, counted
from the left for left operators and from the right for right operators.

Inner products are linear in the first argument.  Exact modes restrict to
rational coordinates; complex coordinates are allowed in floating mode only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

from .errors import EnumerationCapError, GroundSetError, TruncationOverflowError
from .partitions import IndexTuple, crossings, enumerate_pair_partitions
from .scalars import FORMAL, Mode, conjugate

Word = tuple[int, ...]
CoordVector = tuple

CREATE = "create"
ANNIHILATE = "annihilate"
LEFT = "l"
RIGHT = "r"

DEFAULT_T_MOMENT_CAP = 7
DEFAULT_X_MOMENT_CAP = 4


def basis_vector(d: int, i: int) -> CoordVector:
    if not 1 <= i <= d:
        raise ValueError(f"basis index {i} outside 1..{d}")
    return tuple(1 if j == i else 0 for j in range(1, d + 1))


def vector_inner(v: CoordVector, w: CoordVector):
    """Coordinate inner product, linear in the first argument."""
    if len(v) != len(w):
        raise GroundSetError(f"vector dimensions differ: {len(v)} vs {len(w)}")
    return sum(a * conjugate(b) for a, b in zip(v, w))


@dataclass(frozen=True)
class OpSymbol:
    """One creation or annihilation factor: a side, a flavor and a vector."""

    side: str
    flavor: str
    vector: CoordVector

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be '{LEFT}' or '{RIGHT}'")
        if self.flavor not in (CREATE, ANNIHILATE):
            raise ValueError(f"flavor must be '{CREATE}' or '{ANNIHILATE}'")
        object.__setattr__(self, "vector", tuple(self.vector))


def creator(side: str, vector: Sequence) -> OpSymbol:
    return OpSymbol(side, CREATE, tuple(vector))


def annihilator(side: str, vector: Sequence) -> OpSymbol:
    return OpSymbol(side, ANNIHILATE, tuple(vector))


class FockVector:
    """Finitely supported word -> coefficient map under a truncation level."""

    __slots__ = ("d", "max_len", "mode", "terms")

    def __init__(self, d: int, max_len: int, mode: Mode, terms: dict[Word, object]):
        if d < 1:
            raise ValueError("alphabet size d must be positive")
        if max_len < 0:
            raise ValueError("truncation level must be non-negative")
        self.d = d
        self.max_len = max_len
        self.mode = mode
        self.terms = {w: c for w, c in terms.items() if c}
        for w in self.terms:
            if len(w) > max_len:
                raise TruncationOverflowError(
                    f"word of length {len(w)} above the truncation level {max_len}"
                )
            if not all(1 <= a <= d for a in w):
                raise ValueError(f"letters of {w} outside 1..{d}")

    @classmethod
    def vacuum(cls, d: int, max_len: int, mode: Mode = FORMAL) -> "FockVector":
        return cls(d, max_len, mode, {(): mode.one()})

    @classmethod
    def zero(cls, d: int, max_len: int, mode: Mode = FORMAL) -> "FockVector":
        return cls(d, max_len, mode, {})

    def coefficient(self, word: Word):
        return self.terms.get(tuple(word), self.mode.zero())

    def vacuum_amplitude(self):
        return self.terms.get((), self.mode.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "FockVector") -> None:
        if self.d != other.d:
            raise GroundSetError(f"alphabet sizes differ: {self.d} vs {other.d}")
        if self.mode != other.mode:
            raise ValueError("cannot mix scalar modes")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check_compatible(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return FockVector(self.d, max(self.max_len, other.max_len), self.mode, out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scaled(-1)

    def scaled(self, c) -> "FockVector":
        return FockVector(
            self.d, self.max_len, self.mode, {w: x * c for w, x in self.terms.items()}
        )

    def with_max_len(self, max_len: int) -> "FockVector":
        return FockVector(self.d, max_len, self.mode, self.terms)

    def max_abs(self) -> float:
        """Largest coefficient magnitude (floating modes only)."""
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def to_json_obj(self) -> dict:
        return {
            "".join(map(str, w)): str(c) for w, c in sorted(self.terms.items())
        }

    def __eq__(self, other):
        return (
            isinstance(other, FockVector)
            and self.d == other.d
            and self.mode == other.mode
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"FockVector(d={self.d}, terms={len(self.terms)})"


def _accumulate(out: dict, word: Word, value) -> None:
    if word in out:
        out[word] = out[word] + value
    else:
        out[word] = value


def apply(op: OpSymbol, x: FockVector) -> FockVector:
    """Linear extension of the four elementary actions to a sparse state."""
    v = op.vector
    if len(v) != x.d:
        raise GroundSetError(f"operator vector has dimension {len(v)}, state {x.d}")
    mode = x.mode
    out: dict[Word, object] = {}
    if op.flavor == CREATE:
        left = op.side == LEFT
        for word, c in x.terms.items():
            if len(word) + 1 > x.max_len:
                raise TruncationOverflowError(
                    f"creation on a length-{len(word)} word exceeds level {x.max_len}"
                )
            for i, vi in enumerate(v, start=1):
                if not vi:
                    continue
                nw = (i,) + word if left else word + (i,)
                _accumulate(out, nw, c * vi)
    else:
        left = op.side == LEFT
        for word, c in x.terms.items():
            n = len(word)
            for k in range(1, n + 1):
                pos = k - 1 if left else n - k
                f = conjugate(v[word[pos] - 1])
                if not f:
                    continue
                nw = word[:pos] + word[pos + 1 :]
                _accumulate(out, nw, c * (f * mode.q_power(k - 1)))
    return FockVector(x.d, x.max_len, mode, out)


def apply_piece(side: str, flavor: str, k: int, v: Sequence, x: FockVector) -> FockVector:
    """One term of the annihilation sum (flavor '*'), or creation (flavor '1',
    which forces k == 1)."""
    if flavor == "1":
        if k != 1:
            raise ValueError("creation pieces exist only for k == 1")
        return apply(creator(side, v), x)
    if flavor != "*":
        raise ValueError("flavor must be '1' or '*'")
    if k < 1:
        raise ValueError("piece index k must be positive")
    v = tuple(v)
    if len(v) != x.d:
        raise GroundSetError(f"operator vector has dimension {len(v)}, state {x.d}")
    mode = x.mode
    weight = mode.q_power(k - 1)
    out: dict[Word, object] = {}
    for word, c in x.terms.items():
        n = len(word)
        if n < k:
            continue
        pos = k - 1 if side == LEFT else n - k
        f = conjugate(v[word[pos] - 1])
        if not f:
            continue
        nw = word[:pos] + word[pos + 1 :]
        _accumulate(out, nw, c * (f * weight))
    return FockVector(x.d, x.max_len, mode, out)


def apply_q_scaling(x: FockVector) -> FockVector:
    """Multiply every length-n word by q^n; the vacuum is fixed."""
    mode = x.mode
    return FockVector(
        x.d,
        x.max_len,
        mode,
        {w: c * mode.q_power(len(w)) for w, c in x.terms.items()},
    )


def word_vector(
    vectors: Sequence[CoordVector],
    d: int,
    mode: Mode = FORMAL,
    max_len: int | None = None,
) -> FockVector:
    """Expansion of an elementary tensor of coordinate vectors over basis words."""
    if max_len is None:
        max_len = len(vectors)
    terms: dict[Word, object] = {(): mode.one()}
    for v in reversed(vectors):
        if len(v) != d:
            raise GroundSetError(f"vector dimension {len(v)} != {d}")
        out: dict[Word, object] = {}
        for word, c in terms.items():
            for i, vi in enumerate(v, start=1):
                if vi:
                    _accumulate(out, (i,) + word, c * vi)
        terms = out
    return FockVector(d, max_len, mode, terms)


def _word_inner(w: Word, v: Word, mode: Mode):
    """Permutation sum for two basis words: sum over bijections matching the
    letters, weighted by q^(inversion count)."""
    n = len(w)
    total = mode.zero()
    if sorted(w) != sorted(v):
        return total
    for tau in permutations(range(n)):
        if any(w[i] != v[tau[i]] for i in range(n)):
            continue
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if tau[i] > tau[j])
        total = total + mode.q_power(inv)
    return total


def q_inner_product(x: FockVector, y: FockVector):
    """Deformed inner product; words of different lengths are orthogonal."""
    x._check_compatible(y)
    mode = x.mode
    total = mode.zero()
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            if len(w1) != len(w2):
                continue
            s = _word_inner(w1, w2, mode)
            if s:
                total = total + c1 * conjugate(c2) * s
    return total


def vacuum_expectation(
    ops: Sequence[OpSymbol],
    d: int,
    mode: Mode = FORMAL,
    max_len: int | None = None,
):
    """Apply a product of factors (written left to right) to the vacuum and
    return the empty-word amplitude."""
    if max_len is None:
        max_len = max(len(ops), 1)
    x = FockVector.vacuum(d, max_len, mode)
    for op in reversed(list(ops)):
        x = apply(op, x)
    return x.vacuum_amplitude()


def _gaussian_factor(x: FockVector, i: int) -> FockVector:
    e = basis_vector(x.d, i)
    return apply(creator(LEFT, e), x) + apply(annihilator(LEFT, e), x)


def apply_semi_meander_operator(x: FockVector) -> FockVector:
    """One application of sum_i (left create + annihilate)(right create +
    annihilate) at the i-th basis vector.

    Fused single pass over the support: for every word and letter i, the two
    right-side branches are expanded and each result is fed through the two
    left-side branches, accumulating into one output map.
    """
    mode = x.mode
    max_len = x.max_len
    q_pow = mode.q_power
    out: dict[Word, object] = {}
    for word, c in x.terms.items():
        n = len(word)
        for i in range(1, x.d + 1):
            right: list[tuple[Word, object]] = []
            if n + 1 > max_len:
                raise TruncationOverflowError(
                    f"creation on a length-{n} word exceeds level {max_len}"
                )
            right.append((word + (i,), c))
            for k in range(1, n + 1):
                if word[n - k] == i:
                    right.append((word[: n - k] + word[n - k + 1 :], c * q_pow(k - 1)))
            for w2, c2 in right:
                n2 = len(w2)
                if n2 + 1 > max_len:
                    raise TruncationOverflowError(
                        f"creation on a length-{n2} word exceeds level {max_len}"
                    )
                _accumulate(out, (i,) + w2, c2)
                for k in range(1, n2 + 1):
                    if w2[k - 1] == i:
                        nw = w2[: k - 1] + w2[k:]
                        _accumulate(out, nw, c2 * q_pow(k - 1))
    return FockVector(x.d, max_len, mode, out)


def semi_meander_moment(
    d: int,
    n: int,
    mode: Mode = FORMAL,
    cap: int | None = None,
    level: int | None = None,
    prune: bool = True,
):
    """n-th vacuum moment of the semi-meander operator.  The truncation level
    2n is exact: every elementary factor moves word length by one, so no word
    above level 2n can feed back into the vacuum amplitude.  For the same
    reason, after the k-th application any word longer than 2(n-k) is dead
    weight for the final amplitude; ``prune`` drops such words (exact, and
    the difference between linear and exponential cost in n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    limit = cap if cap is not None else DEFAULT_T_MOMENT_CAP
    if n > limit:
        raise EnumerationCapError(
            f"moment order {n} exceeds the cap {limit} (pass cap= to raise it)"
        )
    x = FockVector.vacuum(d, level if level is not None else 2 * n, mode)
    for step in range(1, n + 1):
        x = apply_semi_meander_operator(x)
        reach = 2 * (n - step)
        if prune and reach < x.max_len:
            x = FockVector(
                x.d, x.max_len, mode,
                {w: c for w, c in x.terms.items() if len(w) <= reach},
            )
    return x.vacuum_amplitude()


def _gaussian_moment_pairings(index: IndexTuple, mode: Mode):
    """Combinatorial value: sum of q^cr over matchings refining the level
    sets of the index tuple."""
    two_n = len(index)
    if two_n % 2:
        return mode.zero()
    total = mode.zero()
    values = index.values
    for pi in enumerate_pair_partitions(two_n // 2, cap=two_n):
        if all(values[a - 1] == values[b - 1] for a, b in pi.pairs):
            total = total + mode.q_power(crossings(pi))
    return total


def gaussian_joint_moment(index: IndexTuple, mode: Mode = FORMAL, cross_check: bool = False):
    """Vacuum moment of the product of position operators picked by the index
    tuple (leftmost factor carries the last index).  Odd lengths give 0."""
    x = FockVector.vacuum(index.d, max(len(index), 1), mode)
    total = len(index)
    for step, i in enumerate(index.values, start=1):
        x = _gaussian_factor(x, i)
        reach = total - step
        if reach < x.max_len:
            x = FockVector(
                x.d, x.max_len, mode,
                {w: c for w, c in x.terms.items() if len(w) <= reach},
            )
    value = x.vacuum_amplitude()
    if cross_check:
        expected = _gaussian_moment_pairings(index, mode)
        if value != expected:
            raise ArithmeticError(
                f"operator/pairing cross-check failed for {index}: "
                f"{value} != {expected}"
            )
    return value


def _canonical_pattern(values: tuple[int, ...]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for v in values:
        if v not in relabel:
            relabel[v] = len(relabel) + 1
        out.append(relabel[v])
    return tuple(out)


def meander_moment(d: int, n: int, mode: Mode = FORMAL, cap: int | None = None):
    """n-th moment of the squared two-faced sum against the doubled vacuum:
    the sum over all index tuples of the squared joint moment.  Joint moments
    only depend on the level-set pattern, so patterns are memoised."""
    if n < 1:
        raise ValueError("n must be >= 1")
    limit = cap if cap is not None else (DEFAULT_X_MOMENT_CAP if d <= 2 else 3)
    if n > limit:
        raise EnumerationCapError(
            f"moment order {n} exceeds the cap {limit} (pass cap= to raise it)"
        )
    memo: dict[tuple[int, ...], object] = {}
    total = mode.zero()
    for values in product(range(1, d + 1), repeat=2 * n):
        key = _canonical_pattern(values)
        if key not in memo:
            memo[key] = gaussian_joint_moment(IndexTuple(key, d), mode)
        m = memo[key]
        total = total + m * m
    return total


def meander_moment_direct(d: int, n: int, mode: Mode = FORMAL):
    """Cross-check route on the doubled space: states are maps from pairs of
    words, and each step applies the sum over i of the i-th position operator
    on both legs.  Exponential in n; intended for n <= 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    max_len = 2 * n
    mode_one = mode.one()

    def a_action(word: Word, i: int) -> list[tuple[Word, object]]:
        out = [((i,) + word, mode_one)]
        for k in range(1, len(word) + 1):
            if word[k - 1] == i:
                out.append((word[:k - 1] + word[k:], mode.q_power(k - 1)))
        return out

    terms: dict[tuple[Word, Word], object] = {((), ()): mode.one()}
    for _ in range(2 * n):
        out: dict[tuple[Word, Word], object] = {}
        for (w1, w2), c in terms.items():
            if len(w1) >= max_len or len(w2) >= max_len:
                raise TruncationOverflowError("doubled state exceeded its level")
            for i in range(1, d + 1):
                for nw1, f1 in a_action(w1, i):
                    cf1 = c * f1
                    for nw2, f2 in a_action(w2, i):
                        key = (nw1, nw2)
                        val = cf1 * f2
                        if key in out:
                            out[key] = out[key] + val
                        else:
                            out[key] = val
        terms = {k: v for k, v in out.items() if v}
    return terms.get(((), ()), mode.zero())


def commutator_defect(v: Sequence, w: Sequence, x: FockVector) -> FockVector:
    """Commutator of the left position operator at v with the right position
    operator at w, minus its known scalar multiple of the q-scaling operator.
    Identically zero; exercised as an exactness check."""
    v, w = tuple(v), tuple(w)
    room = x.with_max_len(x.max_len + 2)

    def a(y: FockVector) -> FockVector:
        return apply(creator(LEFT, v), y) + apply(annihilator(LEFT, v), y)

    def b(y: FockVector) -> FockVector:
        return apply(creator(RIGHT, w), y) + apply(annihilator(RIGHT, w), y)

    c = vector_inner(w, v) - vector_inner(v, w)
    return a(b(room)) - b(a(room)) - apply_q_scaling(room).scaled(c)
