# tests/test_formats.py - Text formats and their error reporting
import pytest

from oriented_steiner.cipher import issue_message_keys, keygen_general, keygen_sts
from oriented_steiner.errors import FormatError
from oriented_steiner.extension import NEGATION_Z3, build_oriented_extension
from oriented_steiner.formats import (
    dump_law_reports,
    dump_private_key,
    dump_public_key,
    dump_sequence,
    dump_sts,
    dump_table,
    dump_witness_map,
    parse_ciphertext,
    parse_private_key,
    parse_public_key,
    parse_sequence,
    parse_sts,
    parse_table,
)
from oriented_steiner.laws import check_laws, find_inverse_witness
from oriented_steiner.models import (
    AutomorphismAssignment,
    ExtensionKind,
    ExtensionTable,
    FactorSystem,
    InverseKind,
    LawId,
    OrientedTripleSystem,
    TripleSystem,
)
from oriented_steiner.quasigroup import k3, z3
from oriented_steiner.sts import orient


def test_sts_text(sts3):
    assert dump_sts(sts3) == "sts n=3 b=1 oriented=0\nblock 0 1 2\n"


def test_oriented_blocks_are_written_in_cyclic_order(sts3):
    assert dump_sts(orient(sts3, [1])) == "sts n=3 b=1 oriented=1\nblock 0 2 1\n"


def test_parse_recovers_orientation_from_any_rotation():
    parsed = parse_sts("# rotated\nsts n=3 b=1 oriented=1\n\nblock 2 1 0\n")
    assert isinstance(parsed, OrientedTripleSystem)
    assert parsed.orientation == (1,)
    assert parse_sts("sts n=3 b=1 oriented=1\nblock 2 0 1\n").orientation == (0,)


def test_oriented_system_survives_the_file(oriented9):
    assert parse_sts(dump_sts(oriented9)) == oriented9


def test_unoriented_parse(sts7):
    parsed = parse_sts(dump_sts(sts7))
    assert isinstance(parsed, TripleSystem)
    assert parsed == sts7


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("sts n=3 b=1 oriented=0\nblock 0 1\n", 2, "exactly 3 points"),
        ("# header follows\nsts n=three b=1\nblock 0 1 2\n", 2, "not an integer"),
        ("sts n=3 b=2\nblock 0 1 2\n", 2, "unexpected end of input"),
        ("sts n=3 b=1\nblock 0 1 2\nblock 0 1 2\n", 3, "trailing content"),
        ("triples n=3 b=1\n", 1, "expected 'sts' header"),
        ("sts n=3 b=1 oriented=2\nblock 0 1 2\n", 1, "oriented= must be 0 or 1"),
        ("sts n=3 b=1\nblock 0 x 2\n", 2, "expected integers"),
        ("sts n=3\nblock 0 1 2\n", 1, "missing 'b='"),
    ],
)
def test_sts_format_errors(text, line, fragment):
    with pytest.raises(FormatError) as exc:
        parse_sts(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)
    assert str(exc.value).startswith(f"line {line}: ")


def test_table_text():
    assert dump_table(z3()) == "quasigroup n=3\n0 1 2\n1 2 0\n2 0 1\n"
    assert parse_table("quasigroup n=3\n0 1 2\n1 2 0\n2 0 1\n") == z3()


def test_extension_header(oriented3):
    e = build_oriented_extension(oriented3, ExtensionKind.MINUS)
    text = dump_table(e)
    assert text.startswith("extension q=3 k=2 kind=minus\nquasigroup n=6\n")
    parsed = parse_table(text)
    assert isinstance(parsed, ExtensionTable)
    assert parsed.kind == ExtensionKind.MINUS
    assert parsed == e


def test_table_row_length_error():
    with pytest.raises(FormatError) as exc:
        parse_table("quasigroup n=2\n0 1\n1\n")
    assert exc.value.line == 3


def test_extension_dimension_error():
    with pytest.raises(FormatError) as exc:
        parse_table("extension q=2 k=2\nquasigroup n=3\n0 1 2\n1 2 0\n2 0 1\n")
    assert exc.value.line == 1


def test_unknown_extension_kind():
    with pytest.raises(FormatError):
        parse_table("extension q=1 k=3 kind=other\nquasigroup n=3\n0 1 2\n1 2 0\n2 0 1\n")


def test_law_report_lines(fano):
    text = dump_law_reports(check_laws(fano, [LawId.SEMI_SYMMETRIC, LawId.LEFT_ALTERNATIVE]))
    assert text == "law=semi_symmetric holds=true witness=-\nlaw=left_alternative holds=false witness=(0,1)\n"


def test_witness_map_lines(fano, oriented7):
    total = dump_witness_map(find_inverse_witness(fano, InverseKind.LEFT_INVERSE))
    assert total == "inverse kind=left_inverse total=true failure=-\nmap 0 1 2 3 4 5 6\n"

    plus = build_oriented_extension(oriented7, ExtensionKind.PLUS).table
    partial = find_inverse_witness(plus, InverseKind.LEFT_INVERSE)
    quiet = dump_witness_map(partial)
    assert quiet.startswith("inverse kind=left_inverse total=false failure=(")
    assert "near" not in quiet
    assert dump_witness_map(partial, diagnostics=True).splitlines()[1].startswith("near ")


def test_sequences():
    assert dump_sequence([3, 0, 12]) == "3 0 12\n"
    assert parse_sequence("3 0\n12\n") == (3, 0, 12)
    assert parse_sequence("") == ()
    assert parse_ciphertext("5 6").a_string == (5, 6)
    with pytest.raises(FormatError) as exc:
        parse_sequence("1 2\n3 four\n")
    assert exc.value.line == 2


def test_public_key_file():
    pub, _ = keygen_sts(7, seed=2)
    keyed = issue_message_keys(pub, 4, seed=1)
    text = dump_public_key(keyed)
    assert text.startswith("extension q=7 k=3 kind=custom\nquasigroup n=21\n")
    assert parse_public_key(text) == keyed
    assert parse_public_key(dump_public_key(pub)) == pub
    assert parse_public_key(text).seed == 1
    assert parse_public_key(dump_public_key(pub)).seed is None


def test_public_key_string_mismatch():
    pub, _ = keygen_sts(7, seed=2)
    lines = dump_public_key(issue_message_keys(pub, 2, seed=1)).splitlines()
    assert lines[-1] == "seed 1"
    lines[-2] = "c 0"
    with pytest.raises(FormatError) as exc:
        parse_public_key("\n".join(lines))
    assert exc.value.line == len(lines) - 1


def test_orientation_private_key_file():
    _, priv = keygen_sts(9, seed=4)
    text = dump_private_key(priv)
    assert text.splitlines()[0] == "privkey kind=canonical n=9 seed=4"
    assert parse_private_key(text) == priv


def test_custom_private_key_file():
    f = FactorSystem([[0, 2, 1], [1, 0, 0], [2, 2, 1]], k_order=3)
    g = AutomorphismAssignment([(0, 1, 2), NEGATION_Z3, (0, 1, 2)])
    _, priv = keygen_general(k3(), z3(), f, g)
    text = dump_private_key(priv)
    assert text.splitlines()[0] == "privkey kind=custom seed=-"
    assert parse_private_key(text) == priv


def test_private_key_with_bad_automorphism_row():
    text = (
        "privkey kind=custom\n"
        + dump_table(k3())
        + dump_table(z3())
        + "f 0 0 0\nf 0 0 0\nf 0 0 0\n"
        + "G 0 1 2\nG 0 1 1\nG 0 1 2\n"
    )
    with pytest.raises(FormatError):
        parse_private_key(text)


def test_private_key_with_wrong_bit_count():
    with pytest.raises(FormatError):
        parse_private_key("privkey kind=plus n=7 seed=0\norientation 101\n")
