from collections.abc import Sequence

import numpy as np
from loguru import logger

from ..config.settings import settings
from ..coxeter.group import CoxeterGroup, longest_element
from ..coxeter.weak_order import bound_table
from ..errors import NotSimple, StructureViolation

IDENTITY = 0


class GarsideStructure:
    """Simples of a finite-type Garside monoid with their lattices and complements.

    Simples are indexed; index 0 is the identity. Every table is derived from the
    partial product ``product[a, b]`` (-1 when ``ab`` is not simple), so spherical
    and file-loaded structures go through the same checks.
    """

    def __init__(
        self,
        names: Sequence[str],
        atoms: Sequence[int],
        delta: int,
        product: np.ndarray,
        atom_names: Sequence[str] | None = None,
        atom_generators: Sequence[int] | None = None,
    ) -> None:
        self.names = list(names)
        self.atoms = [int(a) for a in atoms]
        self.delta = int(delta)
        self.product = np.asarray(product, dtype=np.int32)
        self.atom_names = list(atom_names) if atom_names else [self.names[a] for a in self.atoms]
        self.atom_generators = (
            list(atom_generators) if atom_generators is not None else list(range(len(self.atoms)))
        )
        self.size = len(self.names)
        if self.product.shape != (self.size, self.size):
            raise StructureViolation(
                "product table shape", f"{self.product.shape} for {self.size} simples"
            )
        self._check_identity()
        self._check_cancellative()
        self.length = self._derive_length()
        self.support = self._derive_support()
        self.left_quotient, self.prefix_leq = self._quotients(self.product)
        self.right_quotient, self.suffix_leq = self._quotients(self.product.T)
        self.meet_p = self._lattice(self.prefix_leq, lower=True, order="prefix")
        self.join_p = self._lattice(self.prefix_leq, lower=False, order="prefix")
        self.meet_s = self._lattice(self.suffix_leq, lower=True, order="suffix")
        self.join_s = self._lattice(self.suffix_leq, lower=False, order="suffix")
        self.star = self.left_quotient[:, self.delta].copy()
        self.left_star = self.right_quotient[:, self.delta].copy()
        self._check_delta()
        self.phi = self.star[self.star]
        self.phi_inverse = np.argsort(self.phi).astype(np.int32)
        self._check_phi()

    @property
    def identity(self) -> int:
        return IDENTITY

    @property
    def delta_length(self) -> int:
        return int(self.length[self.delta])

    def atom_index(self, name: str) -> int:
        return self.atom_names.index(name)

    def require_simple(self, a: int) -> int:
        if not 0 <= a < self.size:
            raise NotSimple(f"{a} is not a simple of this structure")
        return a

    def mul(self, a: int, b: int) -> int:
        return int(self.product[a, b])

    def star_of(self, a: int) -> int:
        return int(self.star[self.require_simple(a)])

    def _check_identity(self) -> None:
        everything = np.arange(self.size)
        if not (
            np.array_equal(self.product[IDENTITY], everything)
            and np.array_equal(self.product[:, IDENTITY], everything)
        ):
            raise StructureViolation("identity", "simple 0 must be the identity")

    def _check_cancellative(self) -> None:
        for axis_name, table in (("left", self.product), ("right", self.product.T)):
            for row in table:
                defined = row[row >= 0]
                if len(set(defined.tolist())) != defined.size:
                    raise StructureViolation(f"{axis_name} cancellativity")

    def _derive_length(self) -> np.ndarray:
        length = np.full(self.size, -1, dtype=np.int32)
        length[IDENTITY] = 0
        frontier = [IDENTITY]
        while frontier:
            following = []
            for x in frontier:
                for a in self.atoms:
                    xa = int(self.product[x, a])
                    if xa >= 0 and length[xa] < 0:
                        length[xa] = length[x] + 1
                        following.append(xa)
            frontier = following
        if np.any(length < 0):
            raise StructureViolation("atoms generate the simples")
        defined = np.argwhere(self.product >= 0)
        a, b = defined[:, 0], defined[:, 1]
        if not np.array_equal(length[self.product[a, b]], length[a] + length[b]):
            raise StructureViolation("additive length")
        if sorted(np.flatnonzero(length == 1).tolist()) != sorted(self.atoms):
            raise StructureViolation("atoms are the simples of length one")
        return length

    def _derive_support(self) -> list[frozenset[int]]:
        support: list[set[int]] = [set() for _ in range(self.size)]
        for x in np.argsort(self.length, kind="stable"):
            for position, a in enumerate(self.atoms):
                xa = int(self.product[x, a])
                if xa >= 0:
                    support[xa] |= support[x] | {position}
        return [frozenset(s) for s in support]

    def _quotients(self, table: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        quotient = np.full((self.size, self.size), -1, dtype=np.int32)
        for a in range(self.size):
            for c in np.flatnonzero(table[a] >= 0):
                quotient[a, table[a, c]] = c
        return quotient, quotient >= 0

    def _lattice(self, leq: np.ndarray, lower: bool, order: str) -> np.ndarray:
        table, failure = bound_table(leq, self.length, lower)
        if failure is not None:
            kind = "meet" if lower else "join"
            raise StructureViolation(f"{order} lattice on simples", f"no {kind} for {failure}")
        return table

    def _check_delta(self) -> None:
        if not (np.all(self.prefix_leq[:, self.delta]) and np.all(self.suffix_leq[:, self.delta])):
            raise StructureViolation("simples are the divisors of delta")
        if len(set(self.star.tolist())) != self.size:
            raise StructureViolation("star is a bijection")
        if self.star[IDENTITY] != self.delta or self.star[self.delta] != IDENTITY:
            raise StructureViolation("star exchanges 1 and delta")

    def _check_phi(self) -> None:
        if self.phi[IDENTITY] != IDENTITY or self.phi[self.delta] != self.delta:
            raise StructureViolation("phi fixes 1 and delta")
        if sorted(self.phi.tolist()) != list(range(self.size)):
            raise StructureViolation("phi is a permutation")
        defined = self.product >= 0
        moved = self.product[np.ix_(self.phi, self.phi)]
        expected = np.where(defined, self.phi[np.where(defined, self.product, 0)], -1)
        if not np.array_equal(moved, expected):
            raise StructureViolation("phi is a monoid automorphism of the simples")

    def check_associativity(self, samples: int | None = None, seed: int | None = None) -> None:
        rng = np.random.default_rng(seed if seed is not None else settings.seed)
        count = samples if samples is not None else settings.associativity_samples * 10
        for a, b, c in rng.integers(0, self.size, size=(count, 3)):
            ab, bc = self.product[a, b], self.product[b, c]
            left = self.product[ab, c] if ab >= 0 else -1
            right = self.product[a, bc] if bc >= 0 else -1
            if ab >= 0 and bc >= 0 and left != right:
                raise StructureViolation("associativity of the partial product", f"({a}, {b}, {c})")


def garside_from_spherical(group: CoxeterGroup) -> GarsideStructure:
    """Simples are the lifts of W; ``ab`` is simple iff lengths add in W."""
    length = group.length
    table = group.mul_table
    product = np.where(
        length[table] == length[:, None] + length[None, :], table, -1
    ).astype(np.int32)
    separator = "" if all(len(v) == 1 for v in group.graph.vertices) else "."
    names = [separator.join(group.word_names(w)) or "1" for w in range(group.order)]
    structure = GarsideStructure(
        names=names,
        atoms=group.generators,
        delta=longest_element(group).index,
        product=product,
        atom_names=list(group.graph.vertices),
    )
    logger.debug(
        f"Garside structure on {group.graph.vertices}: {structure.size} simples, "
        f"delta length {structure.delta_length}"
    )
    return structure
