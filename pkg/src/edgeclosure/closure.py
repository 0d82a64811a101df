"""Integral closure of ideal powers: generators, closedness, normality.

The exponents of monomials in the closure of I^k form an upward-closed
set of lattice points whose minimal elements all lie in the box
a_j <= k * max_i M[j][i] (they are roundings of points in k times the
convex hull of the generators).  The engine scans that box with the
integer-scaled dual functionals of the packing LP, extracts the minimal
elements, and decides closedness by testing those against I^k.  A plain
per-point simplex scan is kept alongside as an independent oracle.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ResourceCapError
from .ideals import (
    ExponentVector,
    MonomialIdeal,
    as_exponent_vector,
    checked_mul,
    member,
    power,
)
from .packing import (
    dual_functionals,
    fractional_packing,
    integer_packing,
    require_proper,
)

DEFAULT_BOX_CAP = 10_000_000
_INT64_GUARD = 2**62


@dataclass(frozen=True)
class ClosureReport:
    """Outcome of probing whether I^k is integrally closed."""

    k: int
    closed: bool
    witness: ExponentVector | None = None
    closure_generators: tuple[ExponentVector, ...] | None = None


@dataclass(frozen=True)
class PowerIdentityCertificate:
    """Explicit identity showing (x^a)^scale lies in I^(scale*k).

    scale * a = slack + sum(multiplicities[i] * generator_i), with the
    multiplicities summing to scale * k and the slack non-negative.
    """

    scale: int
    multiplicities: tuple[int, ...]
    slack: ExponentVector


@dataclass(frozen=True)
class ScalingResult:
    """Result of the power-scaling membership search.

    When `member` is true, `s` is the least exponent with
    (x^a)^s in I^(s*k); otherwise `s` is the largest exponent tried.
    """

    member: bool
    s: int


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise ResourceCapError("wall-clock cap exceeded")


def generator_box(ideal: MonomialIdeal, k: int) -> tuple[int, ...]:
    """Componentwise bound k * max generator entry, per coordinate."""
    require_proper(ideal)
    return tuple(
        checked_mul(k, max(g[j] for g in ideal.generators))
        for j in range(ideal.n)
    )


def closure_generators(
    ideal: MonomialIdeal,
    k: int,
    *,
    box_cap: int = DEFAULT_BOX_CAP,
    deadline: float | None = None,
) -> tuple[ExponentVector, ...]:
    """Minimal generators of the integral closure of I^k, sorted lex."""
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    require_proper(ideal)
    return _lattice_minimals(ideal, k, box_cap, deadline)


def _lattice_minimals(
    ideal: MonomialIdeal, k: int, box_cap: int, deadline: float | None
) -> tuple[ExponentVector, ...]:
    box = generator_box(ideal, k)
    shape = tuple(b + 1 for b in box)
    volume = math.prod(shape)
    if volume > box_cap:
        raise ResourceCapError(
            f"lattice box has {volume} points, exceeding the cap of {box_cap}"
        )
    functionals = dual_functionals(ideal)
    return _minimals_numpy(shape, functionals, k, deadline)


def _minimals_numpy(
    shape: tuple[int, ...],
    functionals: Sequence[tuple[tuple[int, ...], int]],
    k: int,
    deadline: float | None,
) -> tuple[ExponentVector, ...]:
    n = len(shape)
    # Guard the int64 accumulators; exact fallback if weights are huge.
    for w, s in functionals:
        bound = sum(wj * (bj - 1) for wj, bj in zip(w, shape))
        if bound >= _INT64_GUARD or k * s >= _INT64_GUARD:
            return _minimals_python(shape, functionals, k, deadline)
    inside = np.ones(shape, dtype=bool)
    for w, s in functionals:
        _check_deadline(deadline)
        acc = np.zeros(shape, dtype=np.int64)
        for axis, wj in enumerate(w):
            if wj == 0:
                continue
            ramp = wj * np.arange(shape[axis], dtype=np.int64)
            acc += ramp.reshape(
                tuple(shape[axis] if t == axis else 1 for t in range(n))
            )
        inside &= acc >= k * s
    minimal = inside.copy()
    for axis in range(n):
        if shape[axis] == 1:
            continue
        src = [slice(None)] * n
        dst = [slice(None)] * n
        src[axis] = slice(0, -1)
        dst[axis] = slice(1, None)
        minimal[tuple(dst)] &= ~inside[tuple(src)]
    points = np.argwhere(minimal)
    return tuple(tuple(int(c) for c in row) for row in points)


def _minimals_python(
    shape: tuple[int, ...],
    functionals: Sequence[tuple[tuple[int, ...], int]],
    k: int,
    deadline: float | None,
) -> tuple[ExponentVector, ...]:
    thresholds = [(w, k * s) for w, s in functionals]

    def inside(point: tuple[int, ...]) -> bool:
        return all(
            sum(wj * pj for wj, pj in zip(w, point)) >= t for w, t in thresholds
        )

    _check_deadline(deadline)
    members: set[tuple[int, ...]] = set()
    minimals: list[ExponentVector] = []
    # Lexicographic sweep; a point is a minimal element iff it lies in
    # the up-set and none of its coordinate predecessors does.
    for point in itertools.product(*(range(s) for s in shape)):
        if inside(point):
            members.add(point)
            if not any(
                point[:j] + (point[j] - 1,) + point[j + 1:] in members
                for j in range(len(shape))
                if point[j] > 0
            ):
                minimals.append(point)
    return tuple(minimals)


def closure_generators_bruteforce(
    ideal: MonomialIdeal, k: int, *, box_cap: int = 200_000
) -> tuple[ExponentVector, ...]:
    """Reference oracle: per-point simplex over the full box, no duality."""
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    box = generator_box(ideal, k)
    shape = tuple(b + 1 for b in box)
    if math.prod(shape) > box_cap:
        raise ResourceCapError("brute-force box too large")
    members: set[tuple[int, ...]] = set()
    minimals: list[ExponentVector] = []
    for point in itertools.product(*(range(s) for s in shape)):
        if fractional_packing(ideal, point).value >= k:
            members.add(point)
            if not any(
                point[:j] + (point[j] - 1,) + point[j + 1:] in members
                for j in range(len(point))
                if point[j] > 0
            ):
                minimals.append(point)
    return tuple(minimals)


def is_integrally_closed(
    ideal: MonomialIdeal,
    k: int,
    *,
    include_generators: bool = False,
    box_cap: int = DEFAULT_BOX_CAP,
    deadline: float | None = None,
) -> ClosureReport:
    """Decide whether I^k equals the integral closure of I^k.

    The power is closed iff every minimal closure generator already lies
    in I^k.  On failure the witness is the lexicographically smallest
    minimal generator outside I^k.
    """
    mins = closure_generators(ideal, k, box_cap=box_cap, deadline=deadline)
    pk = power(ideal, k)
    witness = None
    for a in mins:
        _check_deadline(deadline)
        if not member(pk, a):
            witness = a
            break
    return ClosureReport(
        k=k,
        closed=witness is None,
        witness=witness,
        closure_generators=mins if include_generators else None,
    )


def is_normal_up_to(
    ideal: MonomialIdeal,
    kmax: int,
    *,
    include_generators: bool = False,
    box_cap: int = DEFAULT_BOX_CAP,
    deadline: float | None = None,
) -> list[ClosureReport]:
    """Probe closedness of I^k for k = 1..kmax, stopping at a failure."""
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    reports = []
    for k in range(1, kmax + 1):
        report = is_integrally_closed(
            ideal,
            k,
            include_generators=include_generators,
            box_cap=box_cap,
            deadline=deadline,
        )
        reports.append(report)
        if not report.closed:
            break
    return reports


def _shrink_to(y: Sequence[Fraction], target: Fraction) -> tuple[Fraction, ...]:
    """Reduce components in index order until the sum equals target.

    Decreasing any component preserves feasibility of M y <= a.
    """
    excess = sum(y, Fraction(0)) - target
    if excess < 0:
        raise ValueError("component sum is already below the target")
    out = list(y)
    for i, v in enumerate(out):
        if excess == 0:
            break
        cut = min(v, excess)
        out[i] = v - cut
        excess -= cut
    assert excess == 0
    return tuple(out)


def power_identity_certificate(
    ideal: MonomialIdeal, a: Sequence[int], k: int
) -> PowerIdentityCertificate:
    """Constructive witness that x^a lies in the closure of I^k.

    Rescales the optimal fractional packing down to total k, clears
    denominators with their lcm s, and returns the exact identity
    s*a = slack + sum of s*y_i copies of each generator.
    """
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    vec = as_exponent_vector(a, ideal.n)
    cert = fractional_packing(ideal, vec)
    if cert.value < k:
        raise ValueError(
            f"x^a is not in the closure of I^{k}: packing value {cert.value} < {k}"
        )
    y = _shrink_to(cert.y, Fraction(k))
    scale = math.lcm(*(v.denominator for v in y))
    mults = tuple(int(v * scale) for v in y)
    used = [0] * ideal.n
    for g, t in zip(ideal.generators, mults):
        for j in range(ideal.n):
            used[j] += t * g[j]
    slack = tuple(scale * vec[j] - used[j] for j in range(ideal.n))
    out = PowerIdentityCertificate(scale=scale, multiplicities=mults, slack=slack)
    if not verify_power_identity(ideal, vec, k, out):
        raise AssertionError("constructed power identity failed verification")
    return out


def verify_power_identity(
    ideal: MonomialIdeal, a: Sequence[int], k: int, cert: PowerIdentityCertificate
) -> bool:
    """Re-check the identity scale*a = slack + sum multiplicities*gens."""
    if cert.scale < 1:
        return False
    if len(cert.multiplicities) != ideal.num_generators:
        return False
    if len(cert.slack) != ideal.n or any(s < 0 for s in cert.slack):
        return False
    if any(t < 0 for t in cert.multiplicities):
        return False
    if sum(cert.multiplicities) != cert.scale * k:
        return False
    vec = as_exponent_vector(a, ideal.n)
    for j in range(ideal.n):
        total = cert.slack[j] + sum(
            t * g[j] for t, g in zip(cert.multiplicities, ideal.generators)
        )
        if total != cert.scale * vec[j]:
            return False
    return True


def scaling_membership(
    ideal: MonomialIdeal,
    a: Sequence[int],
    k: int,
    s_max: int | None = None,
) -> ScalingResult:
    """Search the least s with (x^a)^s in I^(s*k), testing s = 1..s_max.

    Each test asks the integer oracle whether s*a packs to value s*k.
    When s_max is omitted it defaults to the denominator lcm of the
    rescaled fractional certificate (which guarantees a hit whenever the
    closure membership holds), errors beyond 64, and falls back to 1
    when the fractional value is already below k.
    """
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    vec = as_exponent_vector(a, ideal.n)
    if s_max is None:
        cert = fractional_packing(ideal, vec)
        if cert.value >= k:
            y = _shrink_to(cert.y, Fraction(k))
            s_max = math.lcm(*(v.denominator for v in y))
            if s_max > 64:
                raise ResourceCapError(
                    f"default scaling bound {s_max} exceeds the cap of 64"
                )
        else:
            s_max = 1
    if s_max < 1:
        raise ValueError(f"s_max must be >= 1, got {s_max}")
    for s in range(1, s_max + 1):
        scaled = tuple(checked_mul(s, v) for v in vec)
        if integer_packing(ideal, scaled).value >= s * k:
            return ScalingResult(member=True, s=s)
    return ScalingResult(member=False, s=s_max)
