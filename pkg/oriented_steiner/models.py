# oriented_steiner/models.py - Data models for triple systems, quasigroups and their extensions
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from .errors import DimensionError, NotPermutationError, RangeError

Block = Tuple[int, int, int]
Permutation = Tuple[int, ...]


def _frozen_array(values, ndim: int, what: str) -> np.ndarray:
    arr = np.array(values, dtype=np.int64)
    if arr.ndim != ndim:
        raise DimensionError(f"{what} must be a {ndim}-dimensional array, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


def as_permutation(values, size: Optional[int] = None, what: str = "map") -> Permutation:
    perm = tuple(int(v) for v in values)
    if size is not None and len(perm) != size:
        raise NotPermutationError(f"{what} has length {len(perm)}, expected {size}")
    if sorted(perm) != list(range(len(perm))):
        raise NotPermutationError(f"{what} {perm} is not a bijection on 0..{len(perm) - 1}")
    return perm


class LawId(Enum):
    IDEMPOTENT = "idempotent"
    COMMUTATIVE = "commutative"
    ASSOCIATIVE = "associative"
    FLEXIBLE = "flexible"
    LEFT_ALTERNATIVE = "left_alternative"
    RIGHT_ALTERNATIVE = "right_alternative"
    SEMI_SYMMETRIC = "semi_symmetric"
    LEFT_BOL = "left_bol"
    RIGHT_BOL = "right_bol"
    MOUFANG = "moufang"
    LEFT_NUCLEAR_SQUARE = "left_nuclear_square"
    MIDDLE_NUCLEAR_SQUARE = "middle_nuclear_square"
    RIGHT_NUCLEAR_SQUARE = "right_nuclear_square"


class InverseKind(Enum):
    LEFT_INVERSE = "left_inverse"
    RIGHT_INVERSE = "right_inverse"
    LEFT_CROSS = "left_cross"
    RIGHT_CROSS = "right_cross"


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


class ExtensionKind(Enum):
    PLUS = "plus"
    MINUS = "minus"
    CANONICAL = "canonical"
    CUSTOM = "custom"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: Tuple[str, ...] = ()

    @classmethod
    def from_violations(cls, violations: List[str]) -> "ValidationReport":
        return cls(ok=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class TripleSystem:
    """Points 0..n-1 with 3-point blocks, kept in canonical (sorted) order"""

    n: int
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        canonical = tuple(sorted(tuple(sorted(int(p) for p in block)) for block in self.blocks))
        object.__setattr__(self, "blocks", canonical)

    @property
    def block_count(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class OrientedTripleSystem:
    base: TripleSystem
    orientation: Tuple[int, ...]

    def oriented_block(self, k: int) -> Block:
        """Cyclic order of block k: bit 0 keeps (a,b,c), bit 1 gives (a,c,b)"""
        a, b, c = self.base.blocks[k]
        return (a, b, c) if self.orientation[k] == 0 else (a, c, b)

    @property
    def oriented_blocks(self) -> List[Block]:
        return [self.oriented_block(k) for k in range(self.base.block_count)]

    @cached_property
    def orientation_matrix(self) -> np.ndarray:
        n = self.base.n
        matrix = np.zeros((n, n), dtype=np.int64)
        for k in range(self.base.block_count):
            p0, p1, p2 = self.oriented_block(k)
            for x, y in ((p0, p1), (p1, p2), (p2, p0)):
                matrix[x, y] = 1
                matrix[y, x] = -1
        matrix.setflags(write=False)
        return matrix


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """A finite magma given by its multiplication table; row x lists x·0 … x·(n-1)"""

    table: np.ndarray
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        arr = _frozen_array(self.table, 2, "Cayley table")
        if arr.shape[0] != arr.shape[1]:
            raise DimensionError(f"Cayley table must be square, got shape {arr.shape}")
        object.__setattr__(self, "table", arr)
        if self.labels is not None and len(self.labels) != arr.shape[0]:
            raise DimensionError("one label per element is required")

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def product(self, x: int, y: int) -> int:
        if not (0 <= x < self.order and 0 <= y < self.order):
            raise RangeError(f"elements ({x}, {y}) out of range for order {self.order}")
        return int(self.table[x, y])

    def __eq__(self, other) -> bool:
        return isinstance(other, CayleyTable) and np.array_equal(self.table, other.table)

    __hash__ = None

    def __repr__(self) -> str:
        return f"CayleyTable(order={self.order})"


@dataclass(frozen=True)
class PrincipalIsotopism:
    phi1: Permutation
    phi2: Permutation

    def __post_init__(self):
        object.__setattr__(self, "phi1", as_permutation(self.phi1, what="phi1"))
        object.__setattr__(self, "phi2", as_permutation(self.phi2, size=len(self.phi1), what="phi2"))

    @property
    def order(self) -> int:
        return len(self.phi1)


@dataclass(frozen=True, eq=False)
class FactorSystem:
    """f : Q×Q → K as a q_order×q_order array of K-element indices"""

    values: np.ndarray
    k_order: int

    def __post_init__(self):
        arr = _frozen_array(self.values, 2, "factor system")
        if arr.shape[0] != arr.shape[1]:
            raise DimensionError(f"factor system must be square, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.k_order):
            raise RangeError(f"factor system entries must lie in [0, {self.k_order})")
        object.__setattr__(self, "values", arr)

    @property
    def q_order(self) -> int:
        return int(self.values.shape[0])

    def __call__(self, a: int, b: int) -> int:
        return int(self.values[a, b])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FactorSystem)
            and self.k_order == other.k_order
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class AutomorphismAssignment:
    """G : Q → Aut(K); row b is the permutation α ↦ α^G(b)"""

    permutations: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.permutations, 2, "automorphism assignment")
        for b, row in enumerate(arr):
            as_permutation(row, what=f"G({b})")
        object.__setattr__(self, "permutations", arr)

    @property
    def q_order(self) -> int:
        return int(self.permutations.shape[0])

    @property
    def k_order(self) -> int:
        return int(self.permutations.shape[1])

    def __getitem__(self, b: int) -> Permutation:
        return tuple(int(v) for v in self.permutations[b])

    def is_identity(self) -> bool:
        return bool((self.permutations == np.arange(self.k_order)).all())

    def __eq__(self, other) -> bool:
        return isinstance(other, AutomorphismAssignment) and np.array_equal(
            self.permutations, other.permutations
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class ExtensionTable:
    """Quasigroup on Q×K with (a, α) coded as a·|K| + α"""

    table: CayleyTable
    q_order: int
    k_order: int
    kind: ExtensionKind = ExtensionKind.CUSTOM
    provenance: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.table.order != self.q_order * self.k_order:
            raise DimensionError(
                f"extension of order {self.table.order} does not match |Q|·|K| = "
                f"{self.q_order}·{self.k_order}"
            )

    @property
    def order(self) -> int:
        return self.table.order

    def encode(self, a: int, alpha: int) -> int:
        if not (0 <= a < self.q_order and 0 <= alpha < self.k_order):
            raise RangeError(f"pair ({a}, {alpha}) out of range for Q×K of shape {self.q_order}×{self.k_order}")
        return a * self.k_order + alpha

    def decode(self, x: int) -> Tuple[int, int]:
        if not 0 <= x < self.order:
            raise RangeError(f"element {x} out of range for order {self.order}")
        return divmod(int(x), self.k_order)

    def multiply(self, x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
        return self.decode(self.table.product(self.encode(*x), self.encode(*y)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtensionTable)
            and self.q_order == other.q_order
            and self.k_order == other.k_order
            and self.table == other.table
        )

    __hash__ = None


@dataclass(frozen=True)
class HomomorphismReport:
    holds: bool
    bijective: bool
    products_checked: int
    witness: Optional[Tuple[int, int]] = None

    @property
    def is_isomorphism(self) -> bool:
        return self.holds and self.bijective


@dataclass(frozen=True)
class LawReport:
    law: LawId
    holds: bool
    witness: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class WitnessMap:
    """Outcome of an inverse-type bijection search.

    candidates holds the partner pinned for every x at the probe element;
    when total is False they are only near-witnesses and failure names the
    first (x, y) on which the defining relation breaks.
    """

    kind: InverseKind
    total: bool
    candidates: Tuple[int, ...]
    failure: Optional[Tuple[int, int]] = None

    @property
    def mapping(self) -> Optional[Dict[int, int]]:
        if not self.total:
            return None
        return {x: image for x, image in enumerate(self.candidates)}


@dataclass(frozen=True)
class RegularPermutationGroup:
    side: Side
    elements: Tuple[Permutation, ...]
    group_order: int
    cyclic: bool
    generator: Optional[Permutation] = None


@dataclass(frozen=True)
class OrbitReport:
    side: Side
    orbits: Tuple[FrozenSet[int], ...]
    classes: Tuple[FrozenSet[int], ...]
    coincide: bool
    contained: bool


@dataclass(frozen=True)
class Theorem1Report:
    variant: str
    holds: bool
    witness: Optional[Tuple[int, int]]
    isomorphism: HomomorphismReport
    source: Optional[ExtensionTable] = None
    target: Optional[ExtensionTable] = None


@dataclass(frozen=True)
class Corollary1Report:
    extensions: Dict[str, ExtensionTable]
    isomorphisms: Dict[str, HomomorphismReport]

    @property
    def verified(self) -> bool:
        return all(report.is_isomorphism for report in self.isomorphisms.values())


@dataclass(frozen=True, eq=False)
class PublicKey:
    """Broadcast part of a key: the extension table plus per-message k and c strings"""

    table: CayleyTable
    q_order: int
    k_order: int
    k_string: Tuple[int, ...] = ()
    c_string: Tuple[int, ...] = ()
    # seed the k and c strings were drawn from; not part of equality
    seed: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "k_string", tuple(int(v) for v in self.k_string))
        object.__setattr__(self, "c_string", tuple(int(v) for v in self.c_string))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PublicKey)
            and self.table == other.table
            and (self.q_order, self.k_order, self.k_string, self.c_string)
            == (other.q_order, other.k_order, other.k_string, other.c_string)
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class PrivateKey:
    q: CayleyTable
    k: CayleyTable
    factor: FactorSystem
    assignment: AutomorphismAssignment
    kind: ExtensionKind = ExtensionKind.CUSTOM
    orientation: Optional[OrientedTripleSystem] = None
    seed: Optional[int] = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrivateKey)
            and self.q == other.q
            and self.k == other.k
            and self.factor == other.factor
            and self.assignment == other.assignment
            and self.kind == other.kind
            and self.orientation == other.orientation
        )

    __hash__ = None


@dataclass(frozen=True)
class Ciphertext:
    a_string: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a_string", tuple(int(v) for v in self.a_string))

    def __len__(self) -> int:
        return len(self.a_string)
