"""Monomial ideals represented by the antichain of their minimal generator exponents.

A monomial x^a is identified with its exponent vector a, a tuple of
non-negative integers of fixed length n.  An ideal stores the minimal
generators sorted lexicographically, so equal ideals compare and hash
equal and all derived output is deterministic.
"""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import DimensionMismatchError

ExponentVector = tuple[int, ...]

# Exponent entries are kept inside signed 64-bit range; arithmetic that
# would leave it is a hard error rather than a silent wrap or a slow
# drift into huge integers.
MAX_EXPONENT = 2**63 - 1


def as_exponent_vector(entries: Sequence[int], n: int | None = None) -> ExponentVector:
    """Validate and normalize a sequence into an exponent vector."""
    vec = tuple(entries)
    if n is not None and len(vec) != n:
        raise DimensionMismatchError(f"expected length {n}, got {len(vec)}")
    for e in vec:
        if not isinstance(e, int) or isinstance(e, bool):
            raise TypeError(f"exponent entries must be int, got {e!r}")
        if e < 0:
            raise ValueError(f"exponent entries must be >= 0, got {e}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds 64-bit range")
    return vec


def checked_mul(a: int, b: int) -> int:
    """Multiply non-negative ints, erroring out of 64-bit range."""
    r = a * b
    if r > MAX_EXPONENT:
        raise OverflowError(f"exponent product {a}*{b} exceeds 64-bit range")
    return r


def checked_add(a: int, b: int) -> int:
    r = a + b
    if r > MAX_EXPONENT:
        raise OverflowError(f"exponent sum {a}+{b} exceeds 64-bit range")
    return r


def divides(d: Sequence[int], a: Sequence[int]) -> bool:
    """True iff x^d divides x^a, i.e. d <= a componentwise."""
    if len(d) != len(a):
        raise DimensionMismatchError(f"lengths differ: {len(d)} vs {len(a)}")
    return all(di <= ai for di, ai in zip(d, a))


def vector_sum(vectors: Iterable[Sequence[int]]) -> ExponentVector:
    """Componentwise sum with 64-bit overflow checking."""
    total: list[int] | None = None
    for v in vectors:
        if total is None:
            total = list(v)
        else:
            if len(v) != len(total):
                raise DimensionMismatchError("mixed vector lengths in sum")
            total = [checked_add(t, e) for t, e in zip(total, v)]
    if total is None:
        raise ValueError("empty sum has no defined length")
    return tuple(total)


class MonomialIdeal:
    """A monomial ideal in n variables, given by its minimal generators.

    Invariants: generators are pairwise incomparable under componentwise
    <= (an antichain), sorted lexicographically.  An empty generator set
    is the zero ideal; the single zero vector is the unit ideal.
    """

    __slots__ = ("n", "generators", "_cache")

    def __init__(self, n: int, generators: Iterable[Sequence[int]]):
        if n < 0:
            raise ValueError("ambient variable count must be >= 0")
        gens = sorted(as_exponent_vector(g, n) for g in generators)
        if len(gens) != len(set(gens)):
            raise ValueError("duplicate generators")
        for i, d in enumerate(gens):
            for a in gens[i + 1:]:
                if divides(d, a) or divides(a, d):
                    raise ValueError(
                        f"generators are not an antichain: {d} vs {a}"
                    )
        if any(not any(g) for g in gens) and len(gens) > 1:
            raise ValueError("zero vector only allowed as the sole generator (unit ideal)")
        self.n = n
        self.generators = tuple(gens)
        self._cache: dict = {}

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and not any(self.generators[0])

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def exponent_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Rows indexed by variable, columns by generator."""
        return tuple(
            tuple(g[j] for g in self.generators) for j in range(self.n)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.n, self.generators))

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, generators={list(self.generators)})"


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Build the ideal generated by `gens`, keeping only minimal elements.

    The ambient dimension is inferred from the vectors; it must be given
    explicitly for an empty generating set (the zero ideal).
    """
    vecs = [tuple(g) for g in gens]
    if not vecs:
        if n is None:
            raise ValueError("ambient dimension required for the zero ideal")
        return MonomialIdeal(n, ())
    length = len(vecs[0]) if n is None else n
    vecs = [as_exponent_vector(v, length) for v in vecs]
    minimal: list[ExponentVector] = []
    for v in sorted(set(vecs)):
        if not any(divides(m, v) for m in minimal):
            minimal = [m for m in minimal if not divides(v, m)]
            minimal.append(v)
    return MonomialIdeal(length, minimal)


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generators of the k-th power, k >= 1."""
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    if ideal.is_zero:
        return ideal
    sums = (
        vector_sum(combo)
        for combo in combinations_with_replacement(ideal.generators, k)
    )
    return minimalize(sums, ideal.n)


def member(ideal: MonomialIdeal, a: Sequence[int]) -> bool:
    """True iff x^a lies in the ideal, i.e. some generator divides a."""
    vec = as_exponent_vector(a, ideal.n)
    return any(divides(g, vec) for g in ideal.generators)
