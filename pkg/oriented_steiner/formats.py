# oriented_steiner/formats.py - Plain-text file formats for systems, tables, reports and keys
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import FormatError, OrientedSteinerError
from .models import (
    AutomorphismAssignment,
    CayleyTable,
    Ciphertext,
    ExtensionKind,
    ExtensionTable,
    FactorSystem,
    LawReport,
    OrientedTripleSystem,
    PrivateKey,
    PublicKey,
    TripleSystem,
    WitnessMap,
)
from .extension import identity_assignment, orientation_factor
from .quasigroup import cyclic_group, steiner_quasigroup
from .sts import construct_sts, orient, orientation_bits


class _Lines:
    """Cursor over significant lines (blank lines and # comments skipped), numbered from 1"""

    def __init__(self, text: str):
        self._lines: List[Tuple[int, str]] = [
            (number, line.strip())
            for number, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.strip().startswith("#")
        ]
        self._pos = 0

    def peek(self) -> Optional[Tuple[int, str]]:
        return self._lines[self._pos] if self._pos < len(self._lines) else None

    def next(self, expected: str) -> Tuple[int, str]:
        item = self.peek()
        if item is None:
            last = self._lines[-1][0] if self._lines else None
            raise FormatError(f"unexpected end of input, expected {expected}", last)
        self._pos += 1
        return item

    def done(self) -> bool:
        return self.peek() is None


def _header(lines: _Lines, keyword: str) -> Tuple[int, Dict[str, str]]:
    number, line = lines.next(f"'{keyword}' header")
    tokens = line.split()
    if tokens[0] != keyword:
        raise FormatError(f"expected '{keyword}' header, got {tokens[0]!r}", number)
    fields = {}
    for token in tokens[1:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise FormatError(f"malformed header field {token!r}", number)
        fields[key] = value
    return number, fields


def _int_field(fields: Dict[str, str], key: str, number: int) -> int:
    if key not in fields:
        raise FormatError(f"header is missing '{key}='", number)
    try:
        return int(fields[key])
    except ValueError:
        raise FormatError(f"header field {key}={fields[key]!r} is not an integer", number)


def _ints(tokens: Sequence[str], number: int) -> List[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", number)


def _tagged(lines: _Lines, tag: str) -> Tuple[int, List[str]]:
    number, line = lines.next(f"'{tag}' line")
    tokens = line.split()
    if tokens[0] != tag:
        raise FormatError(f"expected '{tag}' line, got {tokens[0]!r}", number)
    return number, tokens[1:]


def _finish(lines: _Lines):
    item = lines.peek()
    if item is not None:
        raise FormatError(f"unexpected trailing content {item[1]!r}", item[0])


# Steiner triple systems


def dump_sts(system: Union[TripleSystem, OrientedTripleSystem]) -> str:
    if isinstance(system, OrientedTripleSystem):
        ts, blocks, oriented = system.base, system.oriented_blocks, 1
    else:
        ts, blocks, oriented = system, list(system.blocks), 0
    out = [f"sts n={ts.n} b={ts.block_count} oriented={oriented}"]
    out += [f"block {a} {b} {c}" for a, b, c in blocks]
    return "\n".join(out) + "\n"


def parse_sts(text: str) -> Union[TripleSystem, OrientedTripleSystem]:
    lines = _Lines(text)
    number, fields = _header(lines, "sts")
    n = _int_field(fields, "n", number)
    b = _int_field(fields, "b", number)
    oriented = _int_field(fields, "oriented", number) if "oriented" in fields else 0
    if oriented not in (0, 1):
        raise FormatError("oriented= must be 0 or 1", number)

    listed = []
    for _ in range(b):
        line_no, tokens = _tagged(lines, "block")
        if len(tokens) != 3:
            raise FormatError(f"a block has exactly 3 points, got {len(tokens)}", line_no)
        listed.append(tuple(_ints(tokens, line_no)))
    _finish(lines)

    ts = TripleSystem(n=n, blocks=tuple(listed))
    if not oriented:
        return ts
    bits = {}
    for p0, p1, p2 in listed:
        key = tuple(sorted((p0, p1, p2)))
        a, _, _ = key
        rotation = {p0: (p0, p1, p2), p1: (p1, p2, p0), p2: (p2, p0, p1)}[a]
        bits[key] = 0 if rotation == key else 1
    return orient(ts, [bits[block] for block in ts.blocks])


# Cayley and extension tables


def dump_table(t: Union[CayleyTable, ExtensionTable]) -> str:
    out = []
    if isinstance(t, ExtensionTable):
        out.append(f"extension q={t.q_order} k={t.k_order} kind={t.kind.value}")
        t = t.table
    out.append(f"quasigroup n={t.order}")
    out += [" ".join(str(int(v)) for v in row) for row in t.table]
    return "\n".join(out) + "\n"


def _read_table(lines: _Lines) -> CayleyTable:
    number, fields = _header(lines, "quasigroup")
    n = _int_field(fields, "n", number)
    rows = []
    for _ in range(n):
        line_no, line = lines.next("table row")
        row = _ints(line.split(), line_no)
        if len(row) != n:
            raise FormatError(f"row has {len(row)} entries, expected {n}", line_no)
        rows.append(row)
    return CayleyTable(np.array(rows, dtype=np.int64).reshape(n, n))


def _read_extension(lines: _Lines) -> Union[CayleyTable, ExtensionTable]:
    item = lines.peek()
    if item is not None and item[1].split()[0] == "extension":
        number, fields = _header(lines, "extension")
        q_order = _int_field(fields, "q", number)
        k_order = _int_field(fields, "k", number)
        try:
            kind = ExtensionKind(fields.get("kind", "custom"))
        except ValueError:
            raise FormatError(f"unknown extension kind {fields.get('kind')!r}", number)
        table = _read_table(lines)
        try:
            return ExtensionTable(table=table, q_order=q_order, k_order=k_order, kind=kind)
        except OrientedSteinerError as e:
            raise FormatError(str(e), number)
    return _read_table(lines)


def parse_table(text: str) -> Union[CayleyTable, ExtensionTable]:
    lines = _Lines(text)
    table = _read_extension(lines)
    _finish(lines)
    return table


# Law reports and witness maps


def _tuple_text(values: Optional[Sequence[int]]) -> str:
    return "-" if values is None else "(" + ",".join(str(v) for v in values) + ")"


def dump_law_reports(reports: Iterable[LawReport]) -> str:
    return "".join(
        f"law={r.law.value} holds={'true' if r.holds else 'false'} witness={_tuple_text(r.witness)}\n"
        for r in reports
    )


def dump_witness_map(w: WitnessMap, diagnostics: bool = False) -> str:
    line = f"inverse kind={w.kind.value} total={'true' if w.total else 'false'} failure={_tuple_text(w.failure)}"
    out = [line]
    if w.total:
        out.append("map " + " ".join(str(v) for v in w.candidates))
    elif diagnostics:
        out.append("near " + " ".join(str(v) for v in w.candidates))
    return "\n".join(out) + "\n"


# Messages and ciphertexts


def dump_sequence(values: Iterable[int]) -> str:
    return " ".join(str(int(v)) for v in values) + "\n"


def parse_sequence(text: str) -> Tuple[int, ...]:
    values = []
    for number, line in enumerate(text.splitlines(), start=1):
        values += _ints(line.split(), number)
    return tuple(values)


def parse_ciphertext(text: str) -> Ciphertext:
    return Ciphertext(parse_sequence(text))


# Keys


def dump_public_key(pub: PublicKey) -> str:
    out = [f"extension q={pub.q_order} k={pub.k_order} kind=custom", dump_table(pub.table).rstrip("\n")]
    out.append(" ".join(["k"] + [str(v) for v in pub.k_string]))
    out.append(" ".join(["c"] + [str(v) for v in pub.c_string]))
    if pub.seed is not None:
        out.append(f"seed {pub.seed}")
    return "\n".join(out) + "\n"


def parse_public_key(text: str) -> PublicKey:
    lines = _Lines(text)
    extension = _read_extension(lines)
    if not isinstance(extension, ExtensionTable):
        raise FormatError("a public key starts with an 'extension' header", 1)
    k_no, k_tokens = _tagged(lines, "k")
    c_no, c_tokens = _tagged(lines, "c")
    seed = None
    item = lines.peek()
    if item is not None and item[1].split()[0] == "seed":
        seed_no, seed_tokens = _tagged(lines, "seed")
        if len(seed_tokens) != 1:
            raise FormatError("a seed line holds exactly one integer", seed_no)
        seed = _ints(seed_tokens, seed_no)[0]
    _finish(lines)
    k_string, c_string = _ints(k_tokens, k_no), _ints(c_tokens, c_no)
    if len(k_string) != len(c_string):
        raise FormatError(f"k has {len(k_string)} entries but c has {len(c_string)}", c_no)
    return PublicKey(
        table=extension.table,
        q_order=extension.q_order,
        k_order=extension.k_order,
        k_string=k_string,
        c_string=c_string,
        seed=seed,
    )


def dump_private_key(priv: PrivateKey) -> str:
    seed = "-" if priv.seed is None else str(priv.seed)
    if priv.orientation is not None and priv.kind != ExtensionKind.CUSTOM:
        return (
            f"privkey kind={priv.kind.value} n={priv.orientation.base.n} seed={seed}\n"
            f"orientation {orientation_bits(priv.orientation)}\n"
        )
    out = [f"privkey kind=custom seed={seed}", dump_table(priv.q).rstrip("\n"), dump_table(priv.k).rstrip("\n")]
    out += ["f " + " ".join(str(int(v)) for v in row) for row in priv.factor.values]
    out += ["G " + " ".join(str(int(v)) for v in row) for row in priv.assignment.permutations]
    return "\n".join(out) + "\n"


def _rows(lines: _Lines, tag: str, count: int) -> List[List[int]]:
    rows = []
    for _ in range(count):
        line_no, tokens = _tagged(lines, tag)
        rows.append(_ints(tokens, line_no))
    return rows


def parse_private_key(text: str) -> PrivateKey:
    lines = _Lines(text)
    number, fields = _header(lines, "privkey")
    try:
        kind = ExtensionKind(fields.get("kind", "canonical"))
    except ValueError:
        raise FormatError(f"unknown key kind {fields.get('kind')!r}", number)
    seed_text = fields.get("seed", "-")
    seed = None if seed_text == "-" else _int_field(fields, "seed", number)

    try:
        if kind != ExtensionKind.CUSTOM:
            n = _int_field(fields, "n", number)
            bits_no, tokens = _tagged(lines, "orientation")
            _finish(lines)
            if len(tokens) != 1:
                raise FormatError("orientation takes a single bit string", bits_no)
            ts = construct_sts(n)
            ots = orient(ts, tokens[0])
            factor = orientation_factor(ots, kind)
            q = steiner_quasigroup(ts)
            k = cyclic_group(factor.k_order)
            return PrivateKey(
                q=q,
                k=k,
                factor=factor,
                assignment=identity_assignment(q.order, k.order),
                kind=kind,
                orientation=ots,
                seed=seed,
            )

        q = _read_table(lines)
        k = _read_table(lines)
        f_rows = _rows(lines, "f", q.order)
        g_rows = _rows(lines, "G", q.order)
        _finish(lines)
        return PrivateKey(
            q=q,
            k=k,
            factor=FactorSystem(np.array(f_rows, dtype=np.int64), k_order=k.order),
            assignment=AutomorphismAssignment(np.array(g_rows, dtype=np.int64)),
            kind=kind,
            seed=seed,
        )
    except FormatError:
        raise
    except OrientedSteinerError as e:
        raise FormatError(str(e), number)
    except ValueError as e:
        raise FormatError(str(e), number)
