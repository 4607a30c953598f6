# oriented_steiner/cli.py - Command-line front end
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .cipher import decrypt, encrypt, issue_message_keys, keygen_sts, keyspace_size
from .config import Config
from .errors import FormatError, OrientedSteinerError
from .extension import build_oriented_extension, corollary1_isomorphisms
from .formats import (
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
from .laws import check_laws, find_inverse_witness, group_orbits, regular_orbits, regular_permutations
from .log import console
from .models import ExtensionKind, ExtensionTable, InverseKind, LawId, OrientedTripleSystem, Side
from .quasigroup import NAMED_TABLES, steiner_quasigroup
from .sts import construct_sts, orient, random_orientation
from .verification import TheoremVerifier


def _read(path: str) -> str:
    return Path(path).read_text()


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_system(path: str):
    return parse_sts(_read(path))


def _read_oriented(path: str) -> OrientedTripleSystem:
    system = _read_system(path)
    if not isinstance(system, OrientedTripleSystem):
        raise FormatError(f"{path} holds an unoriented system (oriented=0)", 1)
    return system


def _bool(value: bool) -> str:
    return "true" if value else "false"


def cmd_gen_sts(args) -> int:
    _emit(dump_sts(construct_sts(args.n)), args.out)
    return 0


def cmd_orient(args) -> int:
    system = _read_system(args.input)
    ts = system.base if isinstance(system, OrientedTripleSystem) else system
    if args.bits is not None:
        ots = orient(ts, args.bits)
    else:
        ots = random_orientation(ts, args.seed if args.seed is not None else Config.DEFAULT_SEED)
    _emit(dump_sts(ots), args.out)
    return 0


def cmd_build_quasigroup(args) -> int:
    if args.named:
        table = NAMED_TABLES[args.named]()
    else:
        system = _read_system(args.input)
        table = steiner_quasigroup(system.base if isinstance(system, OrientedTripleSystem) else system)
    _emit(dump_table(table), args.out)
    return 0


def cmd_build_extension(args) -> int:
    extension = build_oriented_extension(_read_oriented(args.input), ExtensionKind(args.kind))
    _emit(dump_table(extension), args.out)
    return 0


def _parse_laws(text: str) -> List[LawId]:
    if text == "all":
        return list(LawId)
    laws = []
    for name in text.split(","):
        try:
            laws.append(LawId(name.strip()))
        except ValueError:
            known = ", ".join(law.value for law in LawId)
            raise OrientedSteinerError(f"unknown law {name.strip()!r}; known laws: {known}")
    return laws


def _as_cayley(table):
    return table.table if isinstance(table, ExtensionTable) else table


def cmd_check(args) -> int:
    table = _as_cayley(parse_table(_read(args.input)))
    text = dump_law_reports(check_laws(table, _parse_laws(args.laws)))
    if args.witnesses or args.diagnostics:
        for kind in InverseKind:
            text += dump_witness_map(find_inverse_witness(table, kind), diagnostics=args.diagnostics)
    _emit(text, args.out)
    return 0


def cmd_regular(args) -> int:
    parsed = parse_table(_read(args.input))
    side = Side(args.side)
    group = regular_permutations(_as_cayley(parsed), side)
    lines = [f"side={side.value} order={group.group_order} cyclic={_bool(group.cyclic)}"]
    if isinstance(parsed, ExtensionTable):
        report = regular_orbits(parsed, side)
        orbits = report.orbits
        lines.append(f"coincides_with_classes={_bool(report.coincide)} contained_in_classes={_bool(report.contained)}")
    else:
        orbits = sorted(group_orbits(group), key=min)
    lines += ["orbit " + " ".join(str(x) for x in sorted(orbit)) for orbit in orbits]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_corollary1(args) -> int:
    report = corollary1_isomorphisms(_read_oriented(args.input))
    lines = []
    for name, check in report.isomorphisms.items():
        witness = "-" if check.witness is None else f"({check.witness[0]},{check.witness[1]})"
        lines.append(
            f"iso {name} holds={_bool(check.is_isomorphism)} products={check.products_checked} witness={witness}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.verified else 1


def cmd_keygen(args) -> int:
    pub, priv = keygen_sts(args.n, args.seed, ExtensionKind(args.kind))
    Path(args.pub).write_text(dump_public_key(pub))
    Path(args.priv).write_text(dump_private_key(priv))
    console.print(
        f"✅ keys written to {args.pub} and {args.priv} (keyspace {keyspace_size(args.n)})",
        markup=False,
        soft_wrap=True,
    )
    return 0


def cmd_encrypt(args) -> int:
    template = parse_public_key(_read(args.pub))
    priv = parse_private_key(_read(args.priv))
    message = parse_sequence(_read(args.input))
    pub = issue_message_keys(template, len(message), args.seed)
    ciphertext = encrypt(message, pub, priv)
    Path(args.pub_out).write_text(dump_public_key(pub))
    _emit(dump_sequence(ciphertext.a_string), args.out)
    return 0


def cmd_decrypt(args) -> int:
    pub = parse_public_key(_read(args.pub))
    priv = parse_private_key(_read(args.priv))
    ciphertext = parse_ciphertext(_read(args.input))
    _emit(dump_sequence(decrypt(ciphertext, pub, priv)), args.out)
    return 0


def cmd_keyspace(args) -> int:
    _emit(f"{keyspace_size(args.n)}\n", args.out)
    return 0


def cmd_verify(args) -> int:
    verifier = TheoremVerifier({"seed": args.seed, "sample": args.sample})
    results = verifier.run_comprehensive_verification()
    return 0 if results["summary"]["all_verified"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oriented-steiner",
        description="Oriented Steiner triple systems, their quasigroup extensions and the extension cipher",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, out: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        if out:
            p.add_argument("--out", help="output file (default: stdout)")
        return p

    p = command("gen-sts", cmd_gen_sts, "construct a Steiner triple system")
    p.add_argument("--n", type=int, required=True)

    p = command("orient", cmd_orient, "orient the blocks of a system")
    p.add_argument("--in", dest="input", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--bits", help="one 0/1 character per block, block 0 first")
    group.add_argument("--seed", type=int, help="draw the bits from a seeded generator")

    p = command("build-quasigroup", cmd_build_quasigroup, "Steiner quasigroup of a system, or a named order-3 table")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--in", dest="input")
    group.add_argument("--named", choices=sorted(NAMED_TABLES))

    p = command("build-extension", cmd_build_extension, "oriented or canonical oriented Steiner quasigroup")
    p.add_argument("--kind", choices=["plus", "minus", "canonical"], required=True)
    p.add_argument("--in", dest="input", required=True)

    p = command("check", cmd_check, "check quasigroup identities")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--laws", default="all", help="'all' or a comma-separated list of law ids")
    p.add_argument("--witnesses", action="store_true", help="also search the four inverse-type witnesses")
    p.add_argument("--diagnostics", action="store_true", help="print near-witness maps of failed searches")

    p = command("regular", cmd_regular, "regular permutation group and its orbits")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--side", choices=["left", "right"], required=True)

    p = command("corollary1", cmd_corollary1, "verify the Z3/K3/Q3 extension isomorphisms")
    p.add_argument("--in", dest="input", required=True)

    p = command("keygen", cmd_keygen, "generate an oriented-STS key pair", out=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    p.add_argument("--kind", choices=["canonical", "plus", "minus"], default=Config.DEFAULT_EXTENSION_KIND)
    p.add_argument("--pub", required=True)
    p.add_argument("--priv", required=True)

    p = command("encrypt", cmd_encrypt, "encrypt a message with fresh k and c strings")
    p.add_argument("--pub", required=True)
    p.add_argument("--priv", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--seed", type=int, help="seed for the k and c strings (default: fresh, recorded in --pub-out)")
    p.add_argument("--pub-out", required=True, help="public key carrying this message's k and c strings")

    p = command("decrypt", cmd_decrypt, "decrypt a ciphertext")
    p.add_argument("--pub", required=True)
    p.add_argument("--priv", required=True)
    p.add_argument("--in", dest="input", required=True)

    p = command("keyspace", cmd_keyspace, "number of orientations of STS(n)")
    p.add_argument("--n", type=int, required=True)

    p = command("verify", cmd_verify, "run the exhaustive verification sweeps", out=False)
    p.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    p.add_argument("--sample", type=int, help="sample this many orientations instead of all")

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (OrientedSteinerError, OSError, ValueError) as e:
        console.print(f"error: {e}", markup=False, highlight=False, soft_wrap=True)
        return 1


def main():
    sys.exit(run())
