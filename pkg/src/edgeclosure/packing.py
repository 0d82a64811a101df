"""Exact membership oracles for powers of a monomial ideal.

For an ideal with exponent matrix M (columns = generators) and a query
vector a, the programs solved here maximize the total multiplicity 1.y
of generators packed under a:

    fractional: max 1.y  s.t.  M y <= a, y >= 0 rational
    integer:    same over y in Z^m, y >= 0

The fractional optimum tells whether x^a lies in the closure of I^k
(value >= k) and the integer optimum whether x^a lies in I^k itself.
Both oracles return certificates that are re-verified before release.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import ResourceCapError, UnitIdealError, ZeroIdealError
from .ideals import ExponentVector, MonomialIdeal, as_exponent_vector
from .simplex import simplex_maximize, solve_integer_system_scaled

DEFAULT_NODE_CAP = 100_000


@dataclass(frozen=True)
class MembershipCertificate:
    """An optimal packing y with its exact value sum(y).

    `integral` marks certificates whose components are all integers
    (produced by the integer oracle).
    """

    y: tuple[Fraction, ...]
    value: Fraction
    integral: bool


def require_proper(ideal: MonomialIdeal) -> None:
    """Reject the zero and unit ideals, which have no packing program."""
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no membership program")
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no membership program")


def _check_query(ideal: MonomialIdeal, bound: Sequence[int]) -> ExponentVector:
    require_proper(ideal)
    return as_exponent_vector(bound, ideal.n)


def fractional_packing(ideal: MonomialIdeal, bound: Sequence[int]) -> MembershipCertificate:
    """Exact rational optimum of the packing program for `bound`.

    The program is bounded because every generator has a positive entry,
    so each y_i is capped by some a_j / M[j][i].
    """
    a = _check_query(ideal, bound)
    rows = ideal.exponent_matrix()
    value, y = simplex_maximize([1] * ideal.num_generators, rows, a)
    cert = MembershipCertificate(y=y, value=value, integral=all(v.denominator == 1 for v in y))
    if not verify_certificate(ideal, a, cert):
        raise AssertionError("simplex produced an invalid certificate")
    return cert


def verify_certificate(
    ideal: MonomialIdeal, bound: Sequence[int], cert: MembershipCertificate
) -> bool:
    """Re-check every certificate invariant against (ideal, bound)."""
    a = _check_query(ideal, bound)
    if len(cert.y) != ideal.num_generators:
        return False
    if any(v < 0 for v in cert.y):
        return False
    if sum(cert.y, Fraction(0)) != cert.value:
        return False
    if cert.integral and any(Fraction(v).denominator != 1 for v in cert.y):
        return False
    for j in range(ideal.n):
        total = sum((g[j] * v for g, v in zip(ideal.generators, cert.y)), Fraction(0))
        if total > a[j]:
            return False
    return True


def enumeration_bounds(ideal: MonomialIdeal, bound: Sequence[int]) -> tuple[int, ...]:
    """Per-generator caps floor(a_j / b_i[j]) over the positive entries."""
    a = _check_query(ideal, bound)
    caps = []
    for g in ideal.generators:
        cap = min(a[j] // g[j] for j in range(ideal.n) if g[j] > 0)
        caps.append(cap)
    return tuple(caps)


def integer_packing_enumerated(
    ideal: MonomialIdeal, bound: Sequence[int], point_cap: int = 2_000_000
) -> MembershipCertificate:
    """Independent exhaustive oracle for the integer program.

    Walks the full product box of per-variable caps; intended for tests
    and cross-checks on small instances only.
    """
    a = _check_query(ideal, bound)
    caps = enumeration_bounds(ideal, a)
    volume = math.prod(c + 1 for c in caps)
    if volume > point_cap:
        raise ResourceCapError(f"enumeration box has {volume} points (cap {point_cap})")
    gens = ideal.generators
    n = ideal.n
    best_y = (0,) * len(gens)
    best_val = 0

    # Depth-first over y in lexicographic order keeps the result
    # deterministic: ties favor the lexicographically smallest y.
    def rec(i: int, used: list[int], prefix: list[int]) -> None:
        nonlocal best_y, best_val
        if i == len(gens):
            val = sum(prefix)
            if val > best_val:
                best_val = val
                best_y = tuple(prefix)
            return
        g = gens[i]
        for t in range(caps[i] + 1):
            nxt = [u + t * e for u, e in zip(used, g)]
            if any(x > b for x, b in zip(nxt, a)):
                break
            rec(i + 1, nxt, prefix + [t])

    rec(0, [0] * n, [])
    cert = MembershipCertificate(
        y=tuple(Fraction(v) for v in best_y), value=Fraction(best_val), integral=True
    )
    if not verify_certificate(ideal, a, cert):
        raise AssertionError("enumeration produced an invalid certificate")
    return cert


def _solve_box_lp(
    rows: Sequence[Sequence[int]],
    a: Sequence[int],
    lower: Sequence[int],
    upper: Sequence[int | None],
) -> tuple[Fraction, tuple[Fraction, ...]] | None:
    """LP over lower <= y (<= upper), M y <= a; None when infeasible.

    Substituting z = y - lower turns the box into the standard
    non-negative form; negative shifted rhs means the node is empty
    because all matrix entries are non-negative.
    """
    m = len(lower)
    shift_rhs = []
    for j, row in enumerate(rows):
        r = a[j] - sum(row[i] * lower[i] for i in range(m))
        if r < 0:
            return None
        shift_rhs.append(r)
    ext_rows = [list(row) for row in rows]
    ext_rhs = list(shift_rhs)
    for i, up in enumerate(upper):
        if up is None:
            continue
        span = up - lower[i]
        if span < 0:
            return None
        ext_rows.append([1 if t == i else 0 for t in range(m)])
        ext_rhs.append(span)
    value, z = simplex_maximize([1] * m, ext_rows, ext_rhs)
    y = tuple(Fraction(lower[i]) + z[i] for i in range(m))
    return value + sum(lower), y


def integer_packing(
    ideal: MonomialIdeal, bound: Sequence[int], node_cap: int = DEFAULT_NODE_CAP
) -> MembershipCertificate:
    """Exact integer optimum via branch and bound on the LP relaxation.

    Branches on the most fractional component (smallest index on ties),
    explores nodes in best-bound order, and seeds the incumbent with the
    rounded-down LP solution, which is always feasible here.
    """
    a = _check_query(ideal, bound)
    rows = ideal.exponent_matrix()
    m = ideal.num_generators

    root = _solve_box_lp(rows, a, [0] * m, [None] * m)
    assert root is not None  # y = 0 is always feasible
    best_y, best_val = _floor_incumbent(root[1])

    counter = 0
    heap: list[tuple[Fraction, int, tuple[int, ...], tuple[int | None, ...], tuple[Fraction, ...], Fraction]] = []
    heapq.heappush(heap, (-root[0], counter, (0,) * m, (None,) * m, root[1], root[0]))
    nodes = 0
    while heap:
        neg_bound, _, lower, upper, y, value = heapq.heappop(heap)
        if math.floor(-neg_bound) <= best_val:
            break  # best-bound order: nothing left can beat the incumbent
        nodes += 1
        if nodes > node_cap:
            raise ResourceCapError(f"branch-and-bound exceeded {node_cap} nodes")
        cand_y, cand_val = _floor_incumbent(y)
        if cand_val > best_val:
            best_y, best_val = cand_y, cand_val
        frac_idx = _most_fractional(y)
        if frac_idx is None:
            continue  # LP solution integral; floor pass above recorded it
        split = y[frac_idx]
        lo_branch = list(upper)
        lo_branch[frac_idx] = math.floor(split)
        hi_branch = list(lower)
        hi_branch[frac_idx] = math.ceil(split)
        for new_lower, new_upper in (
            (lower, tuple(lo_branch)),
            (tuple(hi_branch), upper),
        ):
            sol = _solve_box_lp(rows, a, new_lower, new_upper)
            if sol is None:
                continue
            if math.floor(sol[0]) <= best_val:
                continue
            counter += 1
            heapq.heappush(
                heap, (-sol[0], counter, new_lower, new_upper, sol[1], sol[0])
            )

    cert = MembershipCertificate(
        y=tuple(Fraction(v) for v in best_y), value=Fraction(best_val), integral=True
    )
    if not verify_certificate(ideal, a, cert):
        raise AssertionError("branch-and-bound produced an invalid certificate")
    return cert


def _floor_incumbent(y: Sequence[Fraction]) -> tuple[tuple[int, ...], int]:
    floored = tuple(math.floor(v) for v in y)
    return floored, sum(floored)


def _most_fractional(y: Sequence[Fraction]) -> int | None:
    best_idx = None
    best_dist = Fraction(0)
    for i, v in enumerate(y):
        frac = v - math.floor(v)
        dist = min(frac, 1 - frac)
        if dist > best_dist:
            best_dist = dist
            best_idx = i
    return best_idx


def dual_functionals(ideal: MonomialIdeal) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Integer-scaled vertices of the dual polyhedron, cached per ideal.

    By LP duality the fractional packing value equals
    min { a.z : z >= 0, g.z >= 1 for every generator g }, and the
    minimum is attained at a vertex of that polyhedron.  Each vertex z
    is returned as (w, s) with w = s*z integral, so the membership test
    "value >= k" becomes the all-integer check a.w >= k*s.
    """
    cached = ideal._cache.get("dual_functionals")
    if cached is not None:
        return cached
    require_proper(ideal)
    n = ideal.n
    gens = ideal.generators
    m = len(gens)
    support_mask = [
        sum(1 << j for j in range(n) if g[j]) for g in gens
    ]
    sparse = [tuple((j, g[j]) for j in range(n) if g[j]) for g in gens]

    # A vertex makes n constraints tight among z_j = 0 and g.z = 1.
    # Fixing the zero coordinates first reduces each candidate basis to
    # an r x r integer system on the free coordinates.  Everything stays
    # in integers: a basic solution is kept as (w, s) with z = w / s,
    # and feasibility (z >= 0, g.z >= 1) becomes w >= 0, g.w >= s.
    vertices: set[tuple[int, tuple[int, ...]]] = set()
    for r in range(1, min(n, m) + 1):
        for free in combinations(range(n), r):
            free_mask = sum(1 << j for j in free)
            usable = [
                i for i in range(m) if support_mask[i] & free_mask
            ]
            if len(usable) < r:
                continue
            covered = 0
            for i in usable:
                covered |= support_mask[i] & free_mask
            if covered != free_mask:
                continue  # some free coordinate appears in no row: singular
            for tight in combinations(usable, r):
                rows = [[gens[i][j] for j in free] for i in tight]
                solved = solve_integer_system_scaled(rows, [1] * r)
                if solved is None:
                    continue
                w_free, s = solved
                if any(v < 0 for v in w_free):
                    continue
                w = [0] * n
                for j, v in zip(free, w_free):
                    w[j] = v
                if any(
                    sum(coef * w[j] for j, coef in entries) < s
                    for entries in sparse
                ):
                    continue
                g0 = math.gcd(s, *w)
                vertices.add((s // g0, tuple(v // g0 for v in w)))

    # Drop dominated vertices: with a >= 0, z' <= z implies a.z' <= a.z,
    # so z never attains a strict minimum.  Comparisons cross-multiply
    # the scales to stay in integers.
    kept: list[tuple[int, tuple[int, ...]]] = []
    for s, w in sorted(vertices):
        if any(
            all(so * w[j] >= s * wo[j] for j in range(n)) for so, wo in kept
        ):
            continue
        kept = [
            (so, wo)
            for so, wo in kept
            if not all(s * wo[j] >= so * w[j] for j in range(n))
        ]
        kept.append((s, w))

    result = tuple((w, s) for s, w in sorted(kept))
    ideal._cache["dual_functionals"] = result
    return result


def fractional_value_by_duality(ideal: MonomialIdeal, bound: Sequence[int]) -> Fraction:
    """The fractional packing value computed as a dual-vertex minimum."""
    a = _check_query(ideal, bound)
    best: Fraction | None = None
    for w, s in dual_functionals(ideal):
        val = Fraction(sum(wj * aj for wj, aj in zip(w, a)), s)
        if best is None or val < best:
            best = val
    assert best is not None
    return best
