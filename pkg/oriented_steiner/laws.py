# oriented_steiner/laws.py - Exhaustive identity checks, inverse witnesses and regular permutations
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .config import Config
from .errors import NotLatinError, RangeError, SizeMismatchError
from .extension import congruence_classes
from .log import get_logger
from .models import (
    CayleyTable,
    ExtensionTable,
    InverseKind,
    LawId,
    LawReport,
    OrbitReport,
    Permutation,
    RegularPermutationGroup,
    Side,
    WitnessMap,
)
from .quasigroup import is_latin, left_division, right_division

logger = get_logger(__name__)

Term = Callable[..., np.ndarray]


@dataclass(frozen=True)
class _Law:
    arity: int
    equation: str
    lhs: Term
    rhs: Term


# Each side is evaluated with T the table and the variables as index arrays (or ints).
_LAWS: Dict[LawId, _Law] = {
    LawId.IDEMPOTENT: _Law(1, "x·x = x", lambda T, x: T[x, x], lambda T, x: x),
    LawId.COMMUTATIVE: _Law(2, "x·y = y·x", lambda T, x, y: T[x, y], lambda T, x, y: T[y, x]),
    LawId.ASSOCIATIVE: _Law(
        3, "(x·y)·z = x·(y·z)", lambda T, x, y, z: T[T[x, y], z], lambda T, x, y, z: T[x, T[y, z]]
    ),
    LawId.FLEXIBLE: _Law(2, "x·(y·x) = (x·y)·x", lambda T, x, y: T[x, T[y, x]], lambda T, x, y: T[T[x, y], x]),
    LawId.LEFT_ALTERNATIVE: _Law(
        2, "x·(x·y) = (x·x)·y", lambda T, x, y: T[x, T[x, y]], lambda T, x, y: T[T[x, x], y]
    ),
    LawId.RIGHT_ALTERNATIVE: _Law(
        2, "(y·x)·x = y·(x·x)", lambda T, x, y: T[T[y, x], x], lambda T, x, y: T[y, T[x, x]]
    ),
    LawId.SEMI_SYMMETRIC: _Law(2, "x·(y·x) = y", lambda T, x, y: T[x, T[y, x]], lambda T, x, y: y),
    LawId.LEFT_BOL: _Law(
        3,
        "x·(y·(x·z)) = (x·(y·x))·z",
        lambda T, x, y, z: T[x, T[y, T[x, z]]],
        lambda T, x, y, z: T[T[x, T[y, x]], z],
    ),
    LawId.RIGHT_BOL: _Law(
        3,
        "((x·y)·z)·y = x·((y·z)·y)",
        lambda T, x, y, z: T[T[T[x, y], z], y],
        lambda T, x, y, z: T[x, T[T[y, z], y]],
    ),
    LawId.LEFT_NUCLEAR_SQUARE: _Law(
        3,
        "(x·x)·(y·z) = ((x·x)·y)·z",
        lambda T, x, y, z: T[T[x, x], T[y, z]],
        lambda T, x, y, z: T[T[T[x, x], y], z],
    ),
    LawId.MIDDLE_NUCLEAR_SQUARE: _Law(
        3,
        "x·((y·y)·z) = (x·(y·y))·z",
        lambda T, x, y, z: T[x, T[T[y, y], z]],
        lambda T, x, y, z: T[T[x, T[y, y]], z],
    ),
    LawId.RIGHT_NUCLEAR_SQUARE: _Law(
        3,
        "x·(y·(z·z)) = (x·y)·(z·z)",
        lambda T, x, y, z: T[x, T[y, T[z, z]]],
        lambda T, x, y, z: T[T[x, y], T[z, z]],
    ),
}

# Moufang is the conjunction of both Bol identities.
_COMPOSITE: Dict[LawId, Tuple[LawId, ...]] = {LawId.MOUFANG: (LawId.LEFT_BOL, LawId.RIGHT_BOL)}


def law_equation(law: LawId) -> str:
    if law in _COMPOSITE:
        return " and ".join(_LAWS[part].equation for part in _COMPOSITE[law])
    return _LAWS[law].equation


def law_arity(law: LawId) -> int:
    if law in _COMPOSITE:
        return max(_LAWS[part].arity for part in _COMPOSITE[law])
    return _LAWS[law].arity


def _require_latin(t: CayleyTable):
    report = is_latin(t)
    if not report.ok:
        raise NotLatinError(f"table of order {t.order} is not a Latin square: {report.violations[0]}")


def _violations(T: np.ndarray, law: LawId) -> np.ndarray:
    n = T.shape[0]
    if law in _COMPOSITE:
        arity = law_arity(law)
        mask = np.zeros((n,) * arity, dtype=bool)
        for part in _COMPOSITE[law]:
            mask |= _violations(T, part)
        return mask
    rule = _LAWS[law]
    variables = tuple(np.indices((n,) * rule.arity))
    return rule.lhs(T, *variables) != rule.rhs(T, *variables)


def check_law(t: CayleyTable, law: LawId) -> LawReport:
    """Evaluate the law on every assignment; the witness is the lexicographically first violation"""
    _require_latin(t)
    hits = np.argwhere(_violations(t.table, law))
    if len(hits) == 0:
        return LawReport(law=law, holds=True)
    return LawReport(law=law, holds=False, witness=tuple(int(v) for v in hits[0]))


def evaluate_law(t: CayleyTable, law: LawId, assignment: Sequence[int]) -> bool:
    """True iff the law holds at this single assignment"""
    if law in _COMPOSITE:
        return all(evaluate_law(t, part, assignment[: _LAWS[part].arity]) for part in _COMPOSITE[law])
    rule = _LAWS[law]
    if len(assignment) != rule.arity:
        raise SizeMismatchError(f"{law.value} takes {rule.arity} variables, got {len(assignment)}")
    values = tuple(int(v) for v in assignment)
    return bool(rule.lhs(t.table, *values) == rule.rhs(t.table, *values))


def check_laws(
    t: CayleyTable,
    laws: Optional[Iterable[LawId]] = None,
    max_workers: Optional[int] = None,
) -> List[LawReport]:
    laws = list(LawId) if laws is None else list(laws)
    workers = Config.MAX_WORKERS if max_workers is None else max_workers
    _require_latin(t)
    if workers > 1 and len(laws) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda law: check_law(t, law), laws))
    return [check_law(t, law) for law in laws]


def _pin_candidates(t: CayleyTable, kind: InverseKind, probe: int) -> np.ndarray:
    """Partner of every x solved from the defining relation at y = probe"""
    T = t.table
    xs = np.arange(t.order)
    if kind == InverseKind.LEFT_INVERSE:  # ι(x)·(x·p) = p
        return right_division(t)[probe, T[xs, probe]]
    if kind == InverseKind.RIGHT_INVERSE:  # (p·x)·ι(x) = p
        return left_division(t)[T[probe, xs], probe]
    if kind == InverseKind.LEFT_CROSS:  # (x·p)·x' = p
        return left_division(t)[T[xs, probe], probe]
    if kind == InverseKind.RIGHT_CROSS:  # x''·(p·x) = p
        return right_division(t)[probe, T[probe, xs]]
    raise ValueError(f"unknown witness kind {kind}")


def _relation_violations(T: np.ndarray, kind: InverseKind, partner: np.ndarray) -> np.ndarray:
    n = T.shape[0]
    x, y = np.indices((n, n))
    px = partner[x]
    if kind == InverseKind.LEFT_INVERSE:
        return T[px, T[x, y]] != y
    if kind == InverseKind.RIGHT_INVERSE:
        return T[T[y, x], px] != y
    if kind == InverseKind.LEFT_CROSS:
        return T[T[x, y], px] != y
    return T[px, T[y, x]] != y


def find_inverse_witness(t: CayleyTable, kind: InverseKind, probe: Optional[int] = None) -> WitnessMap:
    _require_latin(t)
    probe = Config.PROBE_ELEMENT if probe is None else probe
    if not 0 <= probe < t.order:
        raise RangeError(f"probe element {probe} is outside [0, {t.order})")
    candidates = _pin_candidates(t, kind, probe)
    hits = np.argwhere(_relation_violations(t.table, kind, candidates))
    failure = tuple(int(v) for v in hits[0]) if len(hits) else None
    total = failure is None and len(set(candidates.tolist())) == t.order
    return WitnessMap(
        kind=kind,
        total=total,
        candidates=tuple(int(v) for v in candidates),
        failure=failure,
    )


def _compose(p: Permutation, q: Permutation) -> Permutation:
    """(p∘q)(x) = p(q(x))"""
    return tuple(p[v] for v in q)


def _element_order(p: Permutation) -> int:
    identity = tuple(range(len(p)))
    power, order = p, 1
    while power != identity:
        power = _compose(p, power)
        order += 1
    return order


def regular_permutations(t: CayleyTable, side: Side) -> RegularPermutationGroup:
    """All λ with λ(xy) = λ(x)y (left) or ρ with ρ(xy) = xρ(y) (right).

    A regular permutation is fixed by its value u at the base point 0:
    λ(z) = u·(0\\z), ρ(z) = (z/0)·u, so n candidates are each checked on n² pairs.
    """
    _require_latin(t)
    T = t.table
    n = t.order
    x, y = np.indices((n, n))
    members: List[Permutation] = []
    if side == Side.LEFT:
        base_row = left_division(t)[0]
        for u in range(n):
            lam = T[u, base_row]
            if (lam[T] == T[lam[x], y]).all():
                members.append(tuple(int(v) for v in lam))
    else:
        base_col = right_division(t)[:, 0]
        for u in range(n):
            rho = T[base_col, u]
            if (rho[T] == T[x, rho[y]]).all():
                members.append(tuple(int(v) for v in rho))

    elements = tuple(sorted(members))
    order = len(elements)
    generator = next((p for p in elements if _element_order(p) == order), None)
    logger.debug(f"🔍 {side.value} regular permutations of order-{n} table: group of order {order}")
    return RegularPermutationGroup(
        side=side,
        elements=elements,
        group_order=order,
        cyclic=generator is not None,
        generator=generator,
    )


def is_group(group: RegularPermutationGroup) -> bool:
    """Closed under composition and inverses, and contains the identity"""
    members = set(group.elements)
    if not members:
        return False
    n = len(group.elements[0])
    if tuple(range(n)) not in members:
        return False
    for p in members:
        if tuple(int(v) for v in np.argsort(p)) not in members:
            return False
        for q in members:
            if _compose(p, q) not in members:
                return False
    return True


def group_orbits(group: RegularPermutationGroup) -> List[frozenset]:
    n = len(group.elements[0]) if group.elements else 0
    seen = set()
    orbits = []
    for x in range(n):
        if x in seen:
            continue
        orbit = frozenset(p[x] for p in group.elements)
        seen |= orbit
        orbits.append(orbit)
    return orbits


def regular_orbits(e: ExtensionTable, side: Side) -> OrbitReport:
    group = regular_permutations(e.table, side)
    orbits = tuple(sorted(group_orbits(group), key=min))
    classes = tuple(congruence_classes(e))
    return OrbitReport(
        side=side,
        orbits=orbits,
        classes=classes,
        coincide=set(orbits) == set(classes),
        contained=all(any(orbit <= cls for cls in classes) for orbit in orbits),
    )


def find_isomorphism(source: CayleyTable, target: CayleyTable) -> Optional[Tuple[int, ...]]:
    """Brute-force isomorphism search by backtracking with product propagation"""
    n = source.order
    if target.order != n:
        return None
    if n > Config.MAX_SEARCH_ORDER:
        raise SizeMismatchError(f"isomorphism search is limited to order {Config.MAX_SEARCH_ORDER}, got {n}")
    S, T = source.table, target.table

    def propagate(mapping: Dict[int, int]) -> Optional[Dict[int, int]]:
        mapping = dict(mapping)
        images = set(mapping.values())
        changed = True
        while changed:
            changed = False
            for x in list(mapping):
                for y in list(mapping):
                    z, w = int(S[x, y]), int(T[mapping[x], mapping[y]])
                    if z in mapping:
                        if mapping[z] != w:
                            return None
                    elif w in images:
                        return None
                    else:
                        mapping[z] = w
                        images.add(w)
                        changed = True
        return mapping

    def search(mapping: Dict[int, int]) -> Optional[Dict[int, int]]:
        if len(mapping) == n:
            return mapping
        x = min(set(range(n)) - set(mapping))
        used = set(mapping.values())
        for image in range(n):
            if image in used:
                continue
            extended = propagate({**mapping, x: image})
            if extended is not None:
                found = search(extended)
                if found is not None:
                    return found
        return None

    found = search({})
    if found is None:
        return None
    return tuple(found[x] for x in range(n))
