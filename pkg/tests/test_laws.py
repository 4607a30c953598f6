# tests/test_laws.py - Identity checks, inverse witnesses, regular permutations and orbits
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oriented_steiner.errors import NotLatinError, RangeError, SizeMismatchError
from oriented_steiner.extension import build_oriented_extension, corollary1_isomorphisms, f_extension
from oriented_steiner.laws import (
    check_law,
    check_laws,
    evaluate_law,
    find_inverse_witness,
    find_isomorphism,
    group_orbits,
    is_group,
    law_arity,
    law_equation,
    regular_orbits,
    regular_permutations,
)
from oriented_steiner.models import CayleyTable, ExtensionKind, FactorSystem, InverseKind, LawId, Side
from oriented_steiner.quasigroup import k3, q3, verify_homomorphism, z3
from oriented_steiner.sts import construct_sts, random_orientation

NON_BOL_LAWS = [
    LawId.LEFT_BOL,
    LawId.RIGHT_BOL,
    LawId.MOUFANG,
    LawId.LEFT_NUCLEAR_SQUARE,
    LawId.MIDDLE_NUCLEAR_SQUARE,
    LawId.RIGHT_NUCLEAR_SQUARE,
]


def sides_by_hand(T, law, witness):
    """Both sides of a law at one assignment, evaluated on nested lists"""
    T = T.tolist()
    if law == LawId.IDEMPOTENT:
        (x,) = witness
        return T[x][x], x
    x, y = witness[:2]
    if law == LawId.FLEXIBLE:
        return T[x][T[y][x]], T[T[x][y]][x]
    if law == LawId.SEMI_SYMMETRIC:
        return T[x][T[y][x]], y
    if law == LawId.LEFT_ALTERNATIVE:
        return T[x][T[x][y]], T[T[x][x]][y]
    z = witness[2]
    if law == LawId.LEFT_BOL:
        return T[x][T[y][T[x][z]]], T[T[x][T[y][x]]][z]
    if law == LawId.LEFT_NUCLEAR_SQUARE:
        return T[T[x][x]][T[y][z]], T[T[T[x][x]][y]][z]
    raise AssertionError(f"no hand evaluation for {law}")


@pytest.fixture
def plus7(oriented7):
    return build_oriented_extension(oriented7, ExtensionKind.PLUS).table


@pytest.fixture
def minus7(oriented7):
    return build_oriented_extension(oriented7, ExtensionKind.MINUS).table


@pytest.fixture
def canonical7(oriented7):
    return build_oriented_extension(oriented7, ExtensionKind.CANONICAL)


def test_law_metadata():
    assert law_arity(LawId.FLEXIBLE) == 2
    assert law_arity(LawId.MOUFANG) == 3
    assert law_equation(LawId.SEMI_SYMMETRIC) == "x·(y·x) = y"
    assert " and " in law_equation(LawId.MOUFANG)


def test_group_satisfies_group_laws():
    reports = {r.law: r.holds for r in check_laws(z3())}
    assert reports[LawId.ASSOCIATIVE]
    assert reports[LawId.COMMUTATIVE]
    assert reports[LawId.FLEXIBLE]
    assert reports[LawId.MOUFANG]
    assert not reports[LawId.IDEMPOTENT]


@pytest.mark.parametrize("fixture", ["plus7", "minus7"])
def test_oriented_quasigroups_are_flexible_and_semi_symmetric(request, fixture):
    t = request.getfixturevalue(fixture)
    assert check_law(t, LawId.FLEXIBLE).holds
    assert check_law(t, LawId.SEMI_SYMMETRIC).holds


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_flexibility_holds_for_random_orientations(seed):
    ots = random_orientation(construct_sts(7), seed)
    for kind in (ExtensionKind.PLUS, ExtensionKind.MINUS):
        t = build_oriented_extension(ots, kind).table
        assert check_law(t, LawId.FLEXIBLE).holds
        assert find_inverse_witness(t, InverseKind.LEFT_CROSS).candidates == tuple(range(14))


def test_plus_quasigroup_is_not_idempotent(plus7):
    report = check_law(plus7, LawId.IDEMPOTENT)
    assert not report.holds
    # (0, −1)·(0, −1) = (0, +1)
    assert report.witness == (1,)


def test_minus_quasigroup_fails_idempotency_at_once(minus7):
    assert check_law(minus7, LawId.IDEMPOTENT).witness == (0,)


def test_canonical_quasigroup_is_not_flexible(canonical7):
    report = check_law(canonical7.table, LawId.FLEXIBLE)
    assert not report.holds
    x, y = report.witness
    assert canonical7.decode(x)[0] != canonical7.decode(y)[0]


def test_canonical_quasigroup_is_not_semi_symmetric(canonical7):
    assert not check_law(canonical7.table, LawId.SEMI_SYMMETRIC).holds


def test_fano_quasigroup_is_not_left_alternative(fano):
    report = check_law(fano, LawId.LEFT_ALTERNATIVE)
    assert not report.holds
    assert report.witness == (0, 1)
    assert not check_law(fano, LawId.RIGHT_ALTERNATIVE).holds


@pytest.mark.parametrize("law", NON_BOL_LAWS)
def test_oriented_quasigroups_are_not_bol_or_nuclear_square(plus7, minus7, canonical7, law):
    for t in (plus7, minus7, canonical7.table):
        assert not check_law(t, law).holds


@pytest.mark.parametrize(
    "law", [LawId.IDEMPOTENT, LawId.FLEXIBLE, LawId.SEMI_SYMMETRIC, LawId.LEFT_BOL, LawId.LEFT_NUCLEAR_SQUARE]
)
def test_witnesses_really_violate_the_law(canonical7, law):
    report = check_law(canonical7.table, law)
    assert not report.holds
    lhs, rhs = sides_by_hand(canonical7.table.table, law, report.witness)
    assert lhs != rhs
    assert not evaluate_law(canonical7.table, law, report.witness)


def test_moufang_is_both_bol_laws(fano, plus7):
    for t in (z3(), k3(), q3(), fano, plus7):
        both = check_law(t, LawId.LEFT_BOL).holds and check_law(t, LawId.RIGHT_BOL).holds
        assert check_law(t, LawId.MOUFANG).holds == both


def test_evaluate_law_checks_arity():
    with pytest.raises(SizeMismatchError):
        evaluate_law(z3(), LawId.FLEXIBLE, (0, 1, 2))


def test_non_latin_tables_are_refused():
    with pytest.raises(NotLatinError):
        check_law(CayleyTable(np.zeros((3, 3), dtype=np.int64)), LawId.FLEXIBLE)


def test_concurrent_law_checks_match_sequential(canonical7):
    sequential = check_laws(canonical7.table, max_workers=1)
    threaded = check_laws(canonical7.table, max_workers=4)
    assert threaded == sequential
    assert [r.law for r in threaded] == list(LawId)


def test_cross_inverse_witness_is_identity(plus7, minus7):
    for t in (plus7, minus7):
        for kind in (InverseKind.LEFT_CROSS, InverseKind.RIGHT_CROSS):
            w = find_inverse_witness(t, kind)
            assert w.total
            assert w.mapping == {x: x for x in range(14)}


def test_oriented_quasigroups_lack_the_inverse_property(plus7):
    for kind in (InverseKind.LEFT_INVERSE, InverseKind.RIGHT_INVERSE):
        w = find_inverse_witness(plus7, kind)
        assert not w.total
        assert w.mapping is None
        assert w.failure is not None
        assert len(w.candidates) == 14


def test_canonical_inverse_is_negation(canonical7):
    negation = tuple(3 * (x // 3) + (-(x % 3)) % 3 for x in range(21))
    for kind in (InverseKind.LEFT_INVERSE, InverseKind.RIGHT_INVERSE):
        w = find_inverse_witness(canonical7.table, kind)
        assert w.total
        assert w.candidates == negation
    for kind in (InverseKind.LEFT_CROSS, InverseKind.RIGHT_CROSS):
        assert not find_inverse_witness(canonical7.table, kind).total


def test_witness_does_not_depend_on_the_probe(canonical7):
    first = find_inverse_witness(canonical7.table, InverseKind.LEFT_INVERSE, probe=0)
    other = find_inverse_witness(canonical7.table, InverseKind.LEFT_INVERSE, probe=13)
    assert first == other


def test_probe_must_be_an_element(fano, mocker):
    with pytest.raises(RangeError):
        find_inverse_witness(fano, InverseKind.LEFT_INVERSE, probe=7)
    mocker.patch("oriented_steiner.laws.Config.PROBE_ELEMENT", 9)
    with pytest.raises(RangeError):
        find_inverse_witness(fano, InverseKind.LEFT_CROSS)


def test_steiner_quasigroup_is_its_own_inverse(fano):
    for kind in InverseKind:
        assert find_inverse_witness(fano, kind).candidates == tuple(range(7))


def test_fano_has_trivial_right_regular_permutations(fano):
    group = regular_permutations(fano, Side.RIGHT)
    assert group.group_order == 1
    assert group.elements == (tuple(range(7)),)


@pytest.mark.parametrize(
    "kind,order", [(ExtensionKind.PLUS, 2), (ExtensionKind.MINUS, 2), (ExtensionKind.CANONICAL, 3)]
)
@pytest.mark.parametrize("side", [Side.LEFT, Side.RIGHT])
def test_oriented_regular_permutations_are_cyclic(oriented7, kind, order, side):
    e = build_oriented_extension(oriented7, kind)
    group = regular_permutations(e.table, side)
    assert group.group_order == order
    assert group.cyclic
    assert is_group(group)
    report = regular_orbits(e, side)
    assert report.coincide and report.contained
    assert [sorted(orbit) for orbit in report.orbits] == [sorted(cls) for cls in report.classes]


def test_direct_product_has_a_single_left_orbit():
    product = f_extension(z3(), z3(), FactorSystem(np.zeros((3, 3), dtype=np.int64), k_order=3))
    group = regular_permutations(product.table, Side.LEFT)
    assert group.group_order == 9
    assert not group.cyclic
    assert group_orbits(group) == [frozenset(range(9))]
    report = regular_orbits(product, Side.LEFT)
    assert not report.coincide
    assert not report.contained


def test_regular_permutations_satisfy_their_defining_relation(canonical7):
    T = canonical7.table.table
    for lam in regular_permutations(canonical7.table, Side.LEFT).elements:
        lam = np.array(lam)
        assert (lam[T] == T[lam[:, None], np.arange(21)[None, :]]).all()
    for rho in regular_permutations(canonical7.table, Side.RIGHT).elements:
        rho = np.array(rho)
        assert (rho[T] == T[np.arange(21)[:, None], rho[None, :]]).all()


def test_brute_force_finds_a_relabelling(fano):
    sigma = np.array([3, 6, 0, 5, 1, 2, 4])
    relabelled = np.empty((7, 7), dtype=np.int64)
    relabelled[sigma[:, None], sigma[None, :]] = sigma[fano.table]
    target = CayleyTable(relabelled)
    mapping = find_isomorphism(fano, target)
    assert mapping is not None
    assert verify_homomorphism(mapping, fano, target).is_isomorphism


def test_brute_force_on_order_nine_extensions(oriented3):
    extensions = corollary1_isomorphisms(oriented3).extensions
    mapping = find_isomorphism(extensions["z3"].table, extensions["k3"].table)
    assert mapping is not None
    assert verify_homomorphism(mapping, extensions["z3"].table, extensions["k3"].table).is_isomorphism


def test_brute_force_rejects_non_isomorphic_tables(fano):
    assert find_isomorphism(z3(), fano) is None
    # k3 is idempotent, q3 has no idempotent element
    assert find_isomorphism(k3(), q3()) is None


def test_brute_force_respects_the_order_limit(mocker):
    mocker.patch("oriented_steiner.laws.Config.MAX_SEARCH_ORDER", 4)
    zeros = CayleyTable(np.zeros((5, 5), dtype=np.int64))
    with pytest.raises(SizeMismatchError):
        find_isomorphism(zeros, zeros)
