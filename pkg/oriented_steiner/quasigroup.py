# oriented_steiner/quasigroup.py - Cayley tables, Steiner quasigroups and principal isotopes
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import NotSteinerError, RangeError, SizeMismatchError, ValidationError
from .models import CayleyTable, HomomorphismReport, PrincipalIsotopism, TripleSystem, ValidationReport
from .sts import validate_sts


def is_latin(t: CayleyTable) -> ValidationReport:
    """Both division equations are uniquely solvable iff rows and columns are permutations"""
    n = t.order
    expected = np.arange(n)
    violations = []
    rows = np.sort(t.table, axis=1)
    for x in np.flatnonzero((rows != expected).any(axis=1)):
        violations.append(f"row {x} is not a permutation of 0..{n - 1}")
    cols = np.sort(t.table, axis=0)
    for y in np.flatnonzero((cols != expected[:, None]).any(axis=0)):
        violations.append(f"column {y} is not a permutation of 0..{n - 1}")
    return ValidationReport.from_violations(violations)


def left_division(t: CayleyTable) -> np.ndarray:
    """ld[x, z] = x\\z, the unique y with x·y = z"""
    n = t.order
    ld = np.empty((n, n), dtype=np.int64)
    ld[np.arange(n)[:, None], t.table] = np.arange(n)[None, :]
    return ld


def right_division(t: CayleyTable) -> np.ndarray:
    """rd[z, y] = z/y, the unique x with x·y = z"""
    n = t.order
    rd = np.empty((n, n), dtype=np.int64)
    rd[t.table, np.arange(n)[None, :]] = np.arange(n)[:, None]
    return rd


def cyclic_group(m: int) -> CayleyTable:
    """Z_m written additively; for m = 2 this is Z_2 coded multiplicatively as {+1 ↦ 0, −1 ↦ 1}"""
    i, j = np.indices((m, m))
    return CayleyTable((i + j) % m)


def z3() -> CayleyTable:
    return cyclic_group(3)


def k3() -> CayleyTable:
    i, j = np.indices((3, 3))
    return CayleyTable((-i - j) % 3)


def q3() -> CayleyTable:
    i, j = np.indices((3, 3))
    return CayleyTable((-i - j - 1) % 3)


NAMED_TABLES = {"z3": z3, "k3": k3, "q3": q3}


def steiner_quasigroup(ts: TripleSystem) -> CayleyTable:
    report = validate_sts(ts)
    if not report.ok:
        raise ValidationError(f"invalid Steiner triple system: {report.violations[0]}", report.violations)

    n = ts.n
    table = np.zeros((n, n), dtype=np.int64)
    table[np.arange(n), np.arange(n)] = np.arange(n)
    if ts.blocks:
        blocks = np.array(ts.blocks, dtype=np.int64)
        for x, y, z in ((0, 1, 2), (1, 2, 0), (0, 2, 1)):
            table[blocks[:, x], blocks[:, y]] = blocks[:, z]
            table[blocks[:, y], blocks[:, x]] = blocks[:, z]
    return CayleyTable(table)


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def is_idempotent(t: CayleyTable) -> bool:
    return bool((np.diag(t.table) == np.arange(t.order)).all())


def is_commutative(t: CayleyTable) -> bool:
    return bool((t.table == t.table.T).all())


def sts_from_quasigroup(t: CayleyTable) -> TripleSystem:
    T = t.table
    n = t.order
    if T.size and (T.min() < 0 or T.max() >= n):
        raise RangeError(f"table entries must lie in [0, {n})")

    if not is_idempotent(t):
        x = _first(np.diag(T) != np.arange(n))[0]
        raise NotSteinerError("not idempotent", (x,), f"{x}·{x}={T[x, x]}≠{x}")

    if not is_commutative(t):
        x, y = _first(T != T.T)
        raise NotSteinerError("not commutative", (x, y), f"{x}·{y}={T[x, y]}≠{T[y, x]}={y}·{x}")

    x_idx, y_idx = np.indices((n, n))
    witness = _first(T[x_idx, T] != y_idx)
    if witness is not None:
        x, y = witness
        raise NotSteinerError("not totally symmetric", (x, y), f"{x}·({x}·{y})={T[x, T[x, y]]}≠{y}")

    blocks = {tuple(sorted((x, y, int(T[x, y])))) for x in range(n) for y in range(x + 1, n)}
    return TripleSystem(n=n, blocks=tuple(blocks))


def principal_isotope(t: CayleyTable, iso: PrincipalIsotopism) -> CayleyTable:
    """u∗v = φ₁⁻¹(u) · φ₂⁻¹(v), so that φ₁(α)∗φ₂(β) = α·β"""
    if iso.order != t.order:
        raise SizeMismatchError(f"isotopism of order {iso.order} applied to a table of order {t.order}")
    inv1 = np.argsort(np.array(iso.phi1))
    inv2 = np.argsort(np.array(iso.phi2))
    return CayleyTable(t.table[inv1[:, None], inv2[None, :]])


def verify_homomorphism(mapping: Sequence[int], source: CayleyTable, target: CayleyTable) -> HomomorphismReport:
    """Exhaustively compare h(x·y) with h(x)·h(y) over every product pair"""
    h = np.array(mapping, dtype=np.int64)
    if h.shape != (source.order,):
        raise SizeMismatchError(f"map has {h.size} entries for a source of order {source.order}")
    if h.size and (h.min() < 0 or h.max() >= target.order):
        raise RangeError(f"map values must lie in [0, {target.order})")
    bijective = source.order == target.order and len(set(h.tolist())) == h.size
    S = source.table
    mismatch = h[S] != target.table[h[:, None], h[None, :]]
    witness = _first(mismatch)
    return HomomorphismReport(
        holds=witness is None,
        bijective=bijective,
        products_checked=int(S.size),
        witness=witness,
    )
