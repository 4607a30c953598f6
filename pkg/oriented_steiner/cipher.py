# oriented_steiner/cipher.py - Encryption over Schreier-type quasigroup extensions
"""Quasigroup-extension cipher.

A message is a string of Q-elements q_i. With public strings k_i ∈ K and
c_i ∈ Q×K the ciphertext is a_i = (q_i, k_i)∘c_i, computed in the extension
(a, α)∘(b, β) = (ab, f(a,b)·(α^G(b)·β)). The factor system f and the
assignment G form the private key; the multiplication table is public.

The scheme's resistance to recovery without f and G is claimed, not
evaluated here.

Decryption solves x∘c_i = a_i by right division in the extension rebuilt
from the private key, reads q_i off the first coordinate and checks that the
second coordinate equals k_i.
"""
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import IntegrityError, LengthError, RangeError
from .extension import build_oriented_extension, identity_assignment, orientation_factor, schreier_extension
from .log import get_logger
from .models import (
    AutomorphismAssignment,
    CayleyTable,
    Ciphertext,
    ExtensionKind,
    ExtensionTable,
    FactorSystem,
    PrivateKey,
    PublicKey,
)
from .quasigroup import cyclic_group, right_division, steiner_quasigroup
from .sts import block_count, construct_sts, random_orientation

logger = get_logger(__name__)


def keyspace_size(n: int) -> int:
    return 2 ** block_count(n)


def build_private_extension(priv: PrivateKey) -> ExtensionTable:
    return schreier_extension(priv.q, priv.k, priv.factor, priv.assignment, kind=priv.kind)


def keygen_sts(
    n: int, seed: int, kind: ExtensionKind = ExtensionKind.CANONICAL
) -> Tuple[PublicKey, PrivateKey]:
    """Random orientation of STS(n); the public table is its (canonical) oriented Steiner quasigroup"""
    ts = construct_sts(n)
    ots = random_orientation(ts, seed)
    factor = orientation_factor(ots, kind)
    q = steiner_quasigroup(ts)
    k = cyclic_group(factor.k_order)
    priv = PrivateKey(
        q=q,
        k=k,
        factor=factor,
        assignment=identity_assignment(q.order, k.order),
        kind=kind,
        orientation=ots,
        seed=seed,
    )
    public_table = build_oriented_extension(ots, kind)
    pub = PublicKey(table=public_table.table, q_order=q.order, k_order=k.order)
    logger.info(f"✅ {kind.value} key over STS({n}): keyspace {keyspace_size(n)}, table order {public_table.order}")
    return pub, priv


def keygen_general(
    q: CayleyTable,
    k: CayleyTable,
    f: FactorSystem,
    g: Optional[AutomorphismAssignment] = None,
    seed: Optional[int] = None,
) -> Tuple[PublicKey, PrivateKey]:
    """Key pair for the general scheme over arbitrary Q, K, f and G"""
    g = identity_assignment(q.order, k.order) if g is None else g
    priv = PrivateKey(q=q, k=k, factor=f, assignment=g, kind=ExtensionKind.CUSTOM, seed=seed)
    extension = build_private_extension(priv)
    pub = PublicKey(table=extension.table, q_order=q.order, k_order=k.order)
    logger.info(f"✅ general key: |Q|={q.order}, |K|={k.order}")
    return pub, priv


def issue_message_keys(pub: PublicKey, length: int, seed: Optional[int] = None) -> PublicKey:
    """Fresh k and c strings for one message of the given length.

    Without a seed, one is drawn from OS entropy; either way it is recorded on
    the returned key so the strings can be regenerated.
    """
    if seed is None:
        seed = int(np.random.SeedSequence().entropy)
    rng = np.random.default_rng(seed)
    k_string = rng.integers(0, pub.k_order, size=length)
    c_string = rng.integers(0, pub.q_order * pub.k_order, size=length)
    return PublicKey(
        table=pub.table,
        q_order=pub.q_order,
        k_order=pub.k_order,
        k_string=k_string.tolist(),
        c_string=c_string.tolist(),
        seed=seed,
    )


def keys_consistent(pub: PublicKey, priv: PrivateKey) -> bool:
    return (
        pub.q_order == priv.q.order
        and pub.k_order == priv.k.order
        and build_private_extension(priv).table == pub.table
    )


def _check_strings(values: Sequence[int], pub: PublicKey, bound: int, what: str) -> np.ndarray:
    arr = np.array(values, dtype=np.int64).reshape(-1)
    if arr.size != len(pub.k_string) or len(pub.k_string) != len(pub.c_string):
        raise LengthError(
            f"{what} has length {arr.size} but the public key carries "
            f"{len(pub.k_string)} k and {len(pub.c_string)} c entries"
        )
    bad = np.flatnonzero((arr < 0) | (arr >= bound))
    if bad.size:
        raise RangeError(f"{what} entry {arr[bad[0]]} at position {bad[0]} is outside [0, {bound})")
    return arr


def _public_strings(pub: PublicKey) -> Tuple[np.ndarray, np.ndarray]:
    k_string = np.array(pub.k_string, dtype=np.int64)
    c_string = np.array(pub.c_string, dtype=np.int64)
    if k_string.size and ((k_string < 0) | (k_string >= pub.k_order)).any():
        raise RangeError(f"public k string leaves [0, {pub.k_order})")
    if c_string.size and ((c_string < 0) | (c_string >= pub.q_order * pub.k_order)).any():
        raise RangeError(f"public c string leaves [0, {pub.q_order * pub.k_order})")
    return k_string, c_string


def encrypt(q_string: Sequence[int], pub: PublicKey, priv: PrivateKey) -> Ciphertext:
    q_values = _check_strings(q_string, pub, pub.q_order, "message")
    k_string, c_string = _public_strings(pub)
    table = build_private_extension(priv).table.table
    a_string = table[q_values * pub.k_order + k_string, c_string]
    return Ciphertext(a_string.tolist())


def decrypt(a: Ciphertext, pub: PublicKey, priv: PrivateKey) -> Tuple[int, ...]:
    a_values = _check_strings(a.a_string, pub, pub.q_order * pub.k_order, "ciphertext")
    k_string, c_string = _public_strings(pub)
    extension = build_private_extension(priv)
    recovered = right_division(extension.table)[a_values, c_string]
    q_values, k_values = np.divmod(recovered, pub.k_order)
    mismatch = np.flatnonzero(k_values != k_string)
    if mismatch.size:
        i = int(mismatch[0])
        raise IntegrityError(position=i, expected=int(k_string[i]), recovered=int(k_values[i]))
    return tuple(int(v) for v in q_values)
