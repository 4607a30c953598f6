# oriented_steiner/sts.py - Steiner triple systems: construction, validation and orientation
from itertools import combinations, product
from typing import Iterator, List, Sequence, Union

import numpy as np

from .errors import AdmissibilityError, DiagonalError, LengthError, RangeError
from .models import Block, OrientedTripleSystem, TripleSystem, ValidationReport


def check_admissible(n: int) -> None:
    if n < 3 or n % 6 not in (1, 3):
        raise AdmissibilityError(n)


def block_count(n: int) -> int:
    check_admissible(n)
    return n * (n - 1) // 6


def _bose(n: int) -> List[Block]:
    """n = 6k+3 over Z_v × Z_3, v = 2k+1, with the idempotent quasigroup x∘y = (x+y)/2"""
    v = n // 3
    half = (v + 1) // 2

    def point(x: int, i: int) -> int:
        return x + v * (i % 3)

    blocks = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(v)]
    for x, y in combinations(range(v), 2):
        middle = ((x + y) * half) % v
        for i in range(3):
            blocks.append((point(x, i), point(y, i), point(middle, i + 1)))
    return blocks


def _skolem(n: int) -> List[Block]:
    """n = 6k+1 over Z_2k × Z_3 plus ∞, with a half-idempotent commutative quasigroup"""
    k = (n - 1) // 6
    m = 2 * k
    infinity = n - 1

    def point(x: int, i: int) -> int:
        return x + m * (i % 3)

    def half_idempotent(x: int, y: int) -> int:
        s = (x + y) % m
        return s // 2 if s % 2 == 0 else (s - 1) // 2 + k

    blocks = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(k)]
    for x in range(k):
        for i in range(3):
            blocks.append((infinity, point(x + k, i), point(x, i + 1)))
    for x, y in combinations(range(m), 2):
        for i in range(3):
            blocks.append((point(x, i), point(y, i), point(half_idempotent(x, y), i + 1)))
    return blocks


def construct_sts(n: int) -> TripleSystem:
    """Deterministic STS(n): Bose construction for n ≡ 3, Skolem for n ≡ 1 (mod 6)"""
    check_admissible(n)
    blocks = _bose(n) if n % 6 == 3 else _skolem(n)
    return TripleSystem(n=n, blocks=tuple(blocks))


def validate_sts(ts: TripleSystem) -> ValidationReport:
    violations = []
    n = ts.n
    coverage = np.zeros((max(n, 0), max(n, 0)), dtype=np.int64)

    for k, block in enumerate(ts.blocks):
        if len(set(block)) != 3:
            violations.append(f"block {k} {block} repeats a point")
            continue
        if any(p < 0 or p >= n for p in block):
            violations.append(f"block {k} {block} has a point outside [0, {n})")
            continue
        for x, y in combinations(block, 2):
            coverage[x, y] += 1

    for x, y in combinations(range(n), 2):
        if coverage[x, y] == 0:
            violations.append(f"pair ({x},{y}) uncovered")
        elif coverage[x, y] > 1:
            violations.append(f"pair ({x},{y}) covered {'twice' if coverage[x, y] == 2 else f'{coverage[x, y]} times'}")

    expected = n * (n - 1) / 6
    if ts.block_count != expected:
        violations.append(f"block count {ts.block_count} differs from n(n-1)/6 = {expected:g}")

    return ValidationReport.from_violations(violations)


def orient(ts: TripleSystem, bits: Union[str, Sequence[int]]) -> OrientedTripleSystem:
    if isinstance(bits, str):
        if set(bits) - {"0", "1"}:
            raise ValueError(f"orientation bit string may only contain 0 and 1, got {bits!r}")
        bits = [int(ch) for ch in bits]
    bits = tuple(int(b) for b in bits)
    if len(bits) != ts.block_count:
        raise LengthError(f"orientation has {len(bits)} bits but the system has {ts.block_count} blocks")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("orientation bits must be 0 or 1")
    return OrientedTripleSystem(base=ts, orientation=bits)


def orientation_bits(ots: OrientedTripleSystem) -> str:
    return "".join(str(b) for b in ots.orientation)


def orientation_value(ots: OrientedTripleSystem, a: int, b: int) -> int:
    n = ots.base.n
    if not (0 <= a < n and 0 <= b < n):
        raise RangeError(f"points ({a}, {b}) out of range [0, {n})")
    if a == b:
        raise DiagonalError(f"the orientation function is undefined on the diagonal ({a}, {a})")
    return int(ots.orientation_matrix[a, b])


def count_orientations(ts: TripleSystem) -> int:
    return 2 ** ts.block_count


def random_orientation(ts: TripleSystem, seed: int) -> OrientedTripleSystem:
    rng = np.random.default_rng(seed)
    return orient(ts, rng.integers(0, 2, size=ts.block_count).tolist())


def all_orientations(ts: TripleSystem) -> Iterator[OrientedTripleSystem]:
    """Every orientation, in the order of the bit vector read as a binary number"""
    for bits in product((0, 1), repeat=ts.block_count):
        yield OrientedTripleSystem(base=ts, orientation=bits)
