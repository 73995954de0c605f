from enum import Enum

import numpy as np

from ..config.settings import settings
from ..errors import NoJoin, StructureViolation
from .group import CoxElt, CoxeterGroup


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def weak_leq(group: CoxeterGroup, u: CoxElt, v: CoxElt, side: Side = Side.RIGHT) -> bool:
    length = group.length
    inv_u = group.inverse[u.index]
    if side == Side.RIGHT:
        quotient = group.mul_table[inv_u, v.index]
    else:
        quotient = group.mul_table[v.index, inv_u]
    return bool(length[u.index] + length[quotient] == length[v.index])


def leq_matrix(group: CoxeterGroup, side: Side = Side.RIGHT) -> np.ndarray:
    """Boolean matrix M with M[u, v] true iff u precedes v."""
    key = f"leq:{side.value}"
    cached = group.cached(key)
    if cached is not None:
        return cached
    length = group.length
    if side == Side.RIGHT:
        quotient = group.mul_table[group.inverse]
    else:
        quotient = group.mul_table[:, group.inverse].T
    matrix = length[:, None] + length[quotient] == length[None, :]
    return group.store(key, matrix)


def bound_table(
    leq: np.ndarray, length: np.ndarray, lower: bool
) -> tuple[np.ndarray, tuple[int, int] | None]:
    """Meet (lower) or join table of a finite poset given by its order matrix.

    Returns the table and the first pair without a bound, if any.
    """
    n = leq.shape[0]
    table = np.empty((n, n), dtype=np.int32)
    for u in range(n):
        if lower:
            common = leq[:, u][None, :] & leq.T
            scores = np.where(common, length[None, :], -1)
            best = np.argmax(scores, axis=1)
            universal = ~common | leq[:, best].T
        else:
            common = leq[u, :][None, :] & leq
            scores = np.where(common, length[None, :], np.iinfo(np.int32).max)
            best = np.argmin(scores, axis=1)
            universal = ~common | leq[best, :]
        valid = universal.all(axis=1) & common.any(axis=1)
        if not np.all(valid):
            return table, (u, int(np.argmin(valid)))
        table[u] = best
    return table, None


def _bound_table(group: CoxeterGroup, side: Side, lower: bool) -> np.ndarray:
    table, failure = bound_table(leq_matrix(group, side), group.length, lower)
    if failure is not None:
        u, v = failure
        if lower:
            raise StructureViolation(
                "weak order meet", f"no greatest lower bound for ({u}, {v})"
            )
        raise NoJoin(f"no least upper bound for elements {u} and {v}")
    return table


def meet_table(group: CoxeterGroup, side: Side = Side.RIGHT) -> np.ndarray:
    key = f"meet:{side.value}"
    cached = group.cached(key)
    if cached is not None:
        return cached
    return group.store(key, _bound_table(group, side, lower=True))


def join_table(group: CoxeterGroup, side: Side = Side.RIGHT) -> np.ndarray:
    key = f"join:{side.value}"
    cached = group.cached(key)
    if cached is not None:
        return cached
    return group.store(key, _bound_table(group, side, lower=False))


def weak_meet(
    group: CoxeterGroup, u: CoxElt, v: CoxElt, side: Side = Side.RIGHT
) -> CoxElt:
    leq = leq_matrix(group, side)
    common = np.flatnonzero(leq[:, u.index] & leq[:, v.index])
    best = int(common[np.argmax(group.length[common])])
    if not np.all(leq[common, best]):
        raise StructureViolation("weak order meet", f"({u.index}, {v.index})")
    return group.element(best)


def weak_join(
    group: CoxeterGroup, u: CoxElt, v: CoxElt, side: Side = Side.RIGHT
) -> CoxElt:
    leq = leq_matrix(group, side)
    common = np.flatnonzero(leq[u.index, :] & leq[v.index, :])
    if common.size == 0:
        raise NoJoin(f"no common upper bound for {u.index} and {v.index}")
    best = int(common[np.argmin(group.length[common])])
    if not np.all(leq[best, common]):
        raise NoJoin(f"no least upper bound for {u.index} and {v.index}")
    return group.element(best)


def interval(
    group: CoxeterGroup, u: CoxElt, v: CoxElt, side: Side = Side.RIGHT
) -> frozenset[int]:
    leq = leq_matrix(group, side)
    return frozenset(int(x) for x in np.flatnonzero(leq[u.index, :] & leq[:, v.index]))


def check_lattice(
    group: CoxeterGroup,
    side: Side = Side.RIGHT,
    samples: int | None = None,
    seed: int | None = None,
) -> list[str]:
    """Lattice axioms for the whole weak order; returns the violated ones."""
    violations: list[str] = []
    try:
        meet = meet_table(group, side)
        join = join_table(group, side)
    except (StructureViolation, NoJoin) as e:
        return [str(e)]
    n = group.order
    everything = np.arange(n)
    if not np.array_equal(meet[everything, everything], everything):
        violations.append("meet idempotence")
    if not np.array_equal(join[everything, everything], everything):
        violations.append("join idempotence")
    if not np.array_equal(meet, meet.T):
        violations.append("meet commutativity")
    if not np.array_equal(join, join.T):
        violations.append("join commutativity")
    if not np.all(meet[everything[:, None], join] == everything[:, None]):
        violations.append("absorption meet(a, join(a, b)) = a")
    if not np.all(join[everything[:, None], meet] == everything[:, None]):
        violations.append("absorption join(a, meet(a, b)) = a")
    if n**3 <= 2_000_000:
        a, b, c = np.meshgrid(everything, everything, everything, indexing="ij")
    else:
        rng = np.random.default_rng(seed if seed is not None else settings.seed)
        count = (samples if samples is not None else settings.associativity_samples) * 50
        a, b, c = rng.integers(0, n, size=(3, count))
    for name, table in (("meet", meet), ("join", join)):
        if not np.array_equal(table[table[a, b], c], table[a, table[b, c]]):
            violations.append(f"{name} associativity")
    leq = leq_matrix(group, side)
    top = int(np.argmax(group.length))
    if not np.all(leq[0, :]) or not np.all(leq[:, top]):
        violations.append("bounded by identity and longest element")
    return violations
