# tests/test_quasigroup.py - Latin checks, Steiner quasigroups and principal isotopes
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oriented_steiner.errors import NotSteinerError, SizeMismatchError, ValidationError
from oriented_steiner.models import CayleyTable, PrincipalIsotopism, TripleSystem
from oriented_steiner.quasigroup import (
    cyclic_group,
    is_commutative,
    is_idempotent,
    is_latin,
    k3,
    left_division,
    principal_isotope,
    q3,
    right_division,
    steiner_quasigroup,
    sts_from_quasigroup,
    verify_homomorphism,
    z3,
)
from oriented_steiner.sts import construct_sts


def test_group_table_is_latin():
    assert is_latin(z3()).ok


def test_repeated_entry_is_reported():
    report = is_latin(CayleyTable([[0, 0, 2], [1, 2, 0], [2, 1, 1]]))
    assert not report.ok
    assert report.violations[0] == "row 0 is not a permutation of 0..2"


def test_fano_quasigroup_is_latin(fano):
    assert is_latin(fano).ok


def test_steiner_quasigroup_of_sts3(sts3):
    t = steiner_quasigroup(sts3)
    assert t.product(0, 1) == 2
    assert t.product(0, 2) == 1
    assert t.product(1, 2) == 0
    assert [t.product(x, x) for x in range(3)] == [0, 1, 2]


def test_sts3_quasigroup_is_k3(sts3):
    assert steiner_quasigroup(sts3) == k3()


def test_fano_products_follow_blocks(fano):
    assert fano.product(0, 1) == 3
    assert fano.product(3, 1) == 0
    assert fano.product(6, 5) == 0
    assert fano.product(2, 4) == 0


def test_steiner_quasigroup_rejects_invalid_system():
    with pytest.raises(ValidationError) as exc:
        steiner_quasigroup(TripleSystem(n=4, blocks=((0, 1, 2),)))
    assert "pair (0,3) uncovered" in exc.value.violations


@pytest.mark.parametrize("n", [3, 7, 9, 13])
def test_quasigroup_round_trip(n):
    ts = construct_sts(n)
    assert sts_from_quasigroup(steiner_quasigroup(ts)) == ts


def test_z3_is_not_steiner():
    with pytest.raises(NotSteinerError) as exc:
        sts_from_quasigroup(z3())
    assert exc.value.condition == "not idempotent"
    assert exc.value.witness == (1,)


def test_non_commutative_table_is_not_steiner():
    table = CayleyTable([[0, 2, 3, 1], [3, 1, 0, 2], [1, 3, 2, 0], [2, 0, 1, 3]])
    with pytest.raises(NotSteinerError) as exc:
        sts_from_quasigroup(table)
    assert exc.value.condition == "not commutative"
    assert exc.value.witness == (0, 1)


def test_named_tables_have_expected_diagonals():
    assert np.diag(z3().table).tolist() == [0, 2, 1]
    assert np.diag(k3().table).tolist() == [0, 1, 2]
    assert np.diag(q3().table).tolist() == [2, 0, 1]
    for table in (z3(), k3(), q3()):
        assert np.array_equal(table.table, table.table.T)
        assert is_latin(table).ok


def test_divisions_invert_the_product(fano):
    ld, rd = left_division(fano), right_division(fano)
    T = fano.table
    for x in range(7):
        for y in range(7):
            assert T[x, ld[x, y]] == y
            assert T[rd[x, y], y] == x


def test_negation_isotope_of_z3_is_k3():
    negation = (0, 2, 1)
    assert principal_isotope(z3(), PrincipalIsotopism(negation, negation)) == k3()


def test_identity_isotope_is_unchanged():
    identity = (0, 1, 2)
    assert principal_isotope(z3(), PrincipalIsotopism(identity, identity)) == z3()


def test_shifted_negation_isotope_of_z3_is_q3():
    # α ↦ −α−2 mod 3
    phi = tuple((-a - 2) % 3 for a in range(3))
    assert principal_isotope(z3(), PrincipalIsotopism(phi, phi)) == q3()


def test_isotope_size_mismatch():
    with pytest.raises(SizeMismatchError):
        principal_isotope(cyclic_group(4), PrincipalIsotopism((0, 2, 1), (0, 2, 1)))


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=9).flatmap(
        lambda n: st.tuples(st.permutations(range(n)), st.permutations(range(n)))
    )
)
def test_isotopes_of_a_group_are_latin(perms):
    phi1, phi2 = perms
    n = len(phi1)
    isotope = principal_isotope(cyclic_group(n), PrincipalIsotopism(phi1, phi2))
    assert is_latin(isotope).ok
    T = cyclic_group(n).table
    for a in range(n):
        for b in range(n):
            assert isotope.product(phi1[a], phi2[b]) == T[a, b]


def test_verify_homomorphism_counts_every_product(fano):
    report = verify_homomorphism(list(range(7)), fano, fano)
    assert report.holds and report.bijective
    assert report.products_checked == 49


def test_verify_homomorphism_reports_first_failure():
    report = verify_homomorphism([0, 1, 2], z3(), k3())
    assert not report.holds
    assert report.witness == (0, 1)
    assert not report.is_isomorphism


def test_idempotent_and_commutative_predicates(fano):
    assert is_idempotent(fano) and is_commutative(fano)
    assert not is_idempotent(z3()) and is_commutative(z3())
    assert not is_idempotent(q3())
