# oriented_steiner/extension.py - f-extensions, Schreier-type extensions and oriented Steiner quasigroups
from typing import Dict, List, FrozenSet, Optional, Sequence

import numpy as np

from .errors import DimensionError, NotAutomorphismError, NotInvolutoryError, SizeMismatchError
from .log import get_logger
from .models import (
    AutomorphismAssignment,
    CayleyTable,
    Corollary1Report,
    ExtensionKind,
    ExtensionTable,
    FactorSystem,
    HomomorphismReport,
    OrientedTripleSystem,
    PrincipalIsotopism,
    Theorem1Report,
    as_permutation,
)
from .quasigroup import cyclic_group, k3, principal_isotope, q3, steiner_quasigroup, verify_homomorphism, z3

logger = get_logger(__name__)

NEGATION_Z3 = (0, 2, 1)


def identity_assignment(q_order: int, k_order: int) -> AutomorphismAssignment:
    return AutomorphismAssignment(np.tile(np.arange(k_order), (q_order, 1)))


def is_automorphism(k: CayleyTable, perm: Sequence[int]) -> bool:
    p = np.array(as_permutation(perm, size=k.order))
    K = k.table
    return bool((p[K] == K[p[:, None], p[None, :]]).all())


def is_involutory(perm: Sequence[int]) -> bool:
    p = np.array(as_permutation(perm))
    return bool((p[p] == np.arange(p.size)).all())


def _check_dimensions(q: CayleyTable, k: CayleyTable, f: FactorSystem):
    if f.q_order != q.order:
        raise DimensionError(f"factor system is {f.q_order}×{f.q_order} but Q has order {q.order}")
    if f.k_order != k.order:
        raise DimensionError(f"factor system takes values in a K of order {f.k_order}, got order {k.order}")


def _pair_grid(q_order: int, k_order: int):
    a, alpha, b, beta = np.indices((q_order, k_order, q_order, k_order))
    return a, alpha, b, beta


def _assemble(q_table: np.ndarray, second: np.ndarray, a, b, k_order: int) -> CayleyTable:
    n = q_table.shape[0] * k_order
    codes = q_table[a, b] * k_order + second
    return CayleyTable(codes.reshape(n, n))


def f_extension(
    q: CayleyTable,
    k: CayleyTable,
    f: FactorSystem,
    kind: ExtensionKind = ExtensionKind.CUSTOM,
) -> ExtensionTable:
    """(a, α)∘(b, β) = (ab, f(a,b)·(αβ))"""
    _check_dimensions(q, k, f)
    m = k.order
    a, alpha, b, beta = _pair_grid(q.order, m)
    K = k.table
    second = K[f.values[a, b], K[alpha, beta]]
    return ExtensionTable(
        table=_assemble(q.table, second, a, b, m),
        q_order=q.order,
        k_order=m,
        kind=kind,
        provenance={"construction": "f-extension", "factor": f},
    )


def schreier_extension(
    q: CayleyTable,
    k: CayleyTable,
    f: FactorSystem,
    g: AutomorphismAssignment,
    kind: ExtensionKind = ExtensionKind.CUSTOM,
) -> ExtensionTable:
    """(a, α)∘(b, β) = (ab, f(a,b)·(α^G(b)·β))"""
    _check_dimensions(q, k, f)
    if g.q_order != q.order or g.k_order != k.order:
        raise DimensionError(
            f"automorphism assignment is {g.q_order}×{g.k_order}, expected {q.order}×{k.order}"
        )
    for element in range(g.q_order):
        if not is_automorphism(k, g[element]):
            raise NotAutomorphismError(
                f"G({element}) = {g[element]} is not an automorphism of K", element=element
            )

    m = k.order
    a, alpha, b, beta = _pair_grid(q.order, m)
    K = k.table
    twisted = g.permutations[b, alpha]
    second = K[f.values[a, b], K[twisted, beta]]
    return ExtensionTable(
        table=_assemble(q.table, second, a, b, m),
        q_order=q.order,
        k_order=m,
        kind=kind,
        provenance={"construction": "schreier", "factor": f, "assignment": g},
    )


def orientation_factor(ots: OrientedTripleSystem, kind: ExtensionKind) -> FactorSystem:
    """Factor system whose off-diagonal part is the orientation function.

    plus/minus take values in Z_2 coded {+1 ↦ 0, −1 ↦ 1} with diagonal +1
    (resp. −1); canonical takes values in Z_3 with +1 ↦ 1, −1 ↦ 2 and a zero
    diagonal.
    """
    orientation = ots.orientation_matrix
    n = ots.base.n
    diagonal = np.eye(n, dtype=bool)
    if kind in (ExtensionKind.PLUS, ExtensionKind.MINUS):
        values = np.where(orientation == -1, 1, 0)
        values[diagonal] = 0 if kind == ExtensionKind.PLUS else 1
        return FactorSystem(values, k_order=2)
    if kind == ExtensionKind.CANONICAL:
        values = np.where(orientation == 1, 1, np.where(orientation == -1, 2, 0))
        values[diagonal] = 0
        return FactorSystem(values, k_order=3)
    raise ValueError(f"no orientation-derived factor system of kind {kind.value}")


def oriented_steiner_quasigroup(ots: OrientedTripleSystem, sign: int) -> ExtensionTable:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    kind = ExtensionKind.PLUS if sign == 1 else ExtensionKind.MINUS
    q = steiner_quasigroup(ots.base)
    extension = f_extension(q, cyclic_group(2), orientation_factor(ots, kind), kind=kind)
    extension.provenance["orientation"] = ots.orientation
    logger.debug(f"📊 built Q_f^{'+' if sign == 1 else '-'} of order {extension.order}")
    return extension


def canonical_oriented_steiner_quasigroup(ots: OrientedTripleSystem) -> ExtensionTable:
    q = steiner_quasigroup(ots.base)
    extension = f_extension(q, z3(), orientation_factor(ots, ExtensionKind.CANONICAL), kind=ExtensionKind.CANONICAL)
    extension.provenance["orientation"] = ots.orientation
    logger.debug(f"📊 built canonical Q_f of order {extension.order}")
    return extension


def build_oriented_extension(ots: OrientedTripleSystem, kind: ExtensionKind) -> ExtensionTable:
    if kind == ExtensionKind.CANONICAL:
        return canonical_oriented_steiner_quasigroup(ots)
    if kind == ExtensionKind.PLUS:
        return oriented_steiner_quasigroup(ots, 1)
    if kind == ExtensionKind.MINUS:
        return oriented_steiner_quasigroup(ots, -1)
    raise ValueError(f"{kind.value} extensions are not derived from an orientation")


def projection(e: ExtensionTable, x: int) -> int:
    return e.decode(x)[0]


def congruence_classes(e: ExtensionTable) -> List[FrozenSet[int]]:
    m = e.k_order
    return [frozenset(range(a * m, (a + 1) * m)) for a in range(e.q_order)]


def projection_is_homomorphism(e: ExtensionTable, q: CayleyTable) -> HomomorphismReport:
    """Check proj(x∘y) = proj(x)·proj(y) on all pairs"""
    if q.order != e.q_order:
        raise SizeMismatchError(f"Q of order {q.order} does not match the extension's {e.q_order}")
    proj = np.arange(e.order) // e.k_order
    return verify_homomorphism(proj, e.table, q)


def _pair_map(q_order: int, tau: Sequence[int]) -> np.ndarray:
    """Element codes of T = (id, τ) on Q×K"""
    tau = np.array(tau, dtype=np.int64)
    return (np.arange(q_order)[:, None] * tau.size + tau[None, :]).reshape(-1)


def check_theorem1(
    q: CayleyTable,
    k: CayleyTable,
    f: FactorSystem,
    g: FactorSystem,
    tau: Sequence[int],
    phi2: Optional[Sequence[int]] = None,
    variant: str = "i",
) -> Theorem1Report:
    """Decide whether (Q×K, +, f) and (Q×K, ∗, g) are isomorphic through T = (id, τ).

    (K, ∗) is the principal isotope of (K, +) with φ₁ = φ₂; variant i takes
    φ₁ = φ₂ = τ and requires f = g, variant ii requires φ₂(τ(f)) = g.
    """
    if variant not in ("i", "ii"):
        raise ValueError(f"variant must be 'i' or 'ii', got {variant!r}")
    tau = as_permutation(tau, size=k.order, what="tau")
    _check_dimensions(q, k, f)
    _check_dimensions(q, k, g)

    if variant == "i":
        phi = tau
    else:
        if phi2 is None:
            raise ValueError("variant ii needs phi2")
        phi = as_permutation(phi2, size=k.order, what="phi2")

    for name, perm in (("tau", tau), ("phi2", phi)):
        if not is_automorphism(k, perm):
            raise NotAutomorphismError(f"{name} = {perm} is not an automorphism of K")
        if not is_involutory(perm):
            raise NotInvolutoryError(f"{name} = {perm} is not an involution")

    if variant == "i":
        expected = f.values
    else:
        expected = np.array(phi)[np.array(tau)[f.values]]
    mismatch = np.argwhere(expected != g.values)
    witness = tuple(int(v) for v in mismatch[0]) if len(mismatch) else None

    k_star = principal_isotope(k, PrincipalIsotopism(phi, phi))
    source = f_extension(q, k, f)
    target = f_extension(q, k_star, g)
    isomorphism = verify_homomorphism(_pair_map(q.order, tau), source.table, target.table)

    return Theorem1Report(
        variant=variant,
        holds=witness is None,
        witness=witness,
        isomorphism=isomorphism,
        source=source,
        target=target,
    )


def corollary1_isomorphisms(
    ots: OrientedTripleSystem, tau: Optional[Sequence[int]] = None
) -> Corollary1Report:
    """f-extensions of Z3, K3 and Q3 by the Steiner quasigroup of ots, one factor system.

    T = (id, τ) with τ the negation of Z3 is checked as Z3-ext → K3-ext and
    Q3-ext → Z3-ext.
    """
    tau = NEGATION_Z3 if tau is None else as_permutation(tau, size=3, what="tau")
    q = steiner_quasigroup(ots.base)
    f = orientation_factor(ots, ExtensionKind.CANONICAL)
    extensions: Dict[str, ExtensionTable] = {
        name: f_extension(q, table(), f, kind=ExtensionKind.CUSTOM)
        for name, table in (("z3", z3), ("k3", k3), ("q3", q3))
    }
    T = _pair_map(q.order, tau)
    isomorphisms = {
        "z3->k3": verify_homomorphism(T, extensions["z3"].table, extensions["k3"].table),
        "q3->z3": verify_homomorphism(T, extensions["q3"].table, extensions["z3"].table),
    }
    report = Corollary1Report(extensions=extensions, isomorphisms=isomorphisms)
    status = "✅" if report.verified else "❌"
    logger.info(
        f"{status} Z3/K3/Q3 extensions over {ots.base.n} points: order {q.order * 3}, {T.size ** 2} products per map"
    )
    return report
