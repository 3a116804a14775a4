"""Unidirectional single-hop proxy re-encryption over the pairing group.

Five functions: key generation, first-level encryption under the owner's
public key, re-encryption key derivation rk = g^(b/a), the proxy transform
(which pairs the second ciphertext component against rk and never touches
key material or the plaintext), and decryption at both levels.

Bulk payloads are handled by hybrid encapsulation: the group-element
message carries a content-key integer, and the body is sealed under a
SHA-256 counter keystream derived from it.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .algebra import (
    GroupElem,
    GroupParams,
    GroupScalar,
    TargetElem,
    encode_message,
    decode_message,
    exp,
    inv_scalar,
    pair,
    random_scalar,
)

TAG_LEVEL1 = 0x01
TAG_LEVEL2 = 0x02
TAG_REKEY = 0x03
TAG_PUBKEY = 0x04


class SerializationError(ValueError):
    """Byte string does not decode as the expected tagged tuple."""


@dataclass(frozen=True)
class KeyPair:
    sk: GroupScalar
    pk: GroupElem


@dataclass(frozen=True)
class Level1Ciphertext:
    """(Z^r * m, g^(ra)) — decryptable by the key owner, transformable by a proxy."""

    c1: TargetElem
    c2: GroupElem


@dataclass(frozen=True)
class Level2Ciphertext:
    """(Z^r * m, Z^(rb)) — post-transform form, decryptable by the delegatee."""

    c1: TargetElem
    c2: TargetElem


@dataclass(frozen=True)
class ReEncryptionKey:
    """rk = g^(b/a); usable only to transform toward the delegatee, never to decrypt."""

    rk: GroupElem
    from_pk: GroupElem
    to_pk: GroupElem


def keygen(params: GroupParams, rng: random.Random) -> KeyPair:
    sk = random_scalar(params, rng)
    return KeyPair(sk=sk, pk=exp(params.generator, sk))


def encrypt(params: GroupParams, pk: GroupElem, m: TargetElem, rng: random.Random) -> Level1Ciphertext:
    r = random_scalar(params, rng)
    return Level1Ciphertext(
        c1=exp(params.target_generator, r) * m,
        c2=exp(pk, r),
    )


def rekeygen(sk_a: GroupScalar, pk_b: GroupElem) -> ReEncryptionKey:
    rk = exp(pk_b, inv_scalar(sk_a))
    return ReEncryptionKey(rk=rk, from_pk=GroupElem(sk_a.value, sk_a.q), to_pk=pk_b)


def reencrypt(c: Level1Ciphertext, rk: ReEncryptionKey) -> Level2Ciphertext:
    # Pure function of the ciphertext and rk only: the proxy holds no keys.
    return Level2Ciphertext(c1=c.c1, c2=pair(c.c2, rk.rk))


def decrypt_level2(c: Level2Ciphertext, sk_b: GroupScalar) -> TargetElem:
    return c.c1 / exp(c.c2, inv_scalar(sk_b))


def decrypt_level1(c: Level1Ciphertext, sk_a: GroupScalar, params: GroupParams) -> TargetElem:
    return c.c1 / exp(pair(c.c2, params.generator), inv_scalar(sk_a))


# --- serialization: 1-byte tag, then length-prefixed big-endian integers ---

def _pack_ints(tag: int, values: list[int]) -> bytes:
    out = bytearray([tag])
    for v in values:
        b = v.to_bytes((v.bit_length() + 7) // 8 or 1, "big")
        out += len(b).to_bytes(4, "big") + b
    return bytes(out)


def _unpack_ints(data: bytes, tag: int, count: int) -> list[int]:
    if not data or data[0] != tag:
        raise SerializationError(f"expected tag {tag:#04x}")
    values, pos = [], 1
    for _ in range(count):
        if pos + 4 > len(data):
            raise SerializationError("truncated length prefix")
        n = int.from_bytes(data[pos : pos + 4], "big")
        pos += 4
        if pos + n > len(data):
            raise SerializationError("truncated integer")
        values.append(int.from_bytes(data[pos : pos + n], "big"))
        pos += n
    if pos != len(data):
        raise SerializationError("trailing bytes")
    return values


def serialize_level1(c: Level1Ciphertext) -> bytes:
    return _pack_ints(TAG_LEVEL1, [c.c1.log, c.c2.log])


def deserialize_level1(data: bytes, params: GroupParams) -> Level1Ciphertext:
    a, b = _unpack_ints(data, TAG_LEVEL1, 2)
    return Level1Ciphertext(TargetElem(a, params.q), GroupElem(b, params.q))


def serialize_level2(c: Level2Ciphertext) -> bytes:
    return _pack_ints(TAG_LEVEL2, [c.c1.log, c.c2.log])


def deserialize_level2(data: bytes, params: GroupParams) -> Level2Ciphertext:
    a, b = _unpack_ints(data, TAG_LEVEL2, 2)
    return Level2Ciphertext(TargetElem(a, params.q), TargetElem(b, params.q))


def serialize_rekey(rk: ReEncryptionKey) -> bytes:
    return _pack_ints(TAG_REKEY, [rk.rk.log, rk.from_pk.log, rk.to_pk.log])


def deserialize_rekey(data: bytes, params: GroupParams) -> ReEncryptionKey:
    a, b, c = _unpack_ints(data, TAG_REKEY, 3)
    return ReEncryptionKey(GroupElem(a, params.q), GroupElem(b, params.q), GroupElem(c, params.q))


def serialize_pubkey(pk: GroupElem) -> bytes:
    return _pack_ints(TAG_PUBKEY, [pk.log])


def deserialize_pubkey(data: bytes, params: GroupParams) -> GroupElem:
    (a,) = _unpack_ints(data, TAG_PUBKEY, 1)
    return GroupElem(a, params.q)


# --- hybrid payload: [group-encapsulated key ciphertext][keystream body] ---

def _keystream(key: int, length: int) -> bytes:
    seed = key.to_bytes(16, "big")
    out = bytearray()
    counter = 0
    while len(out) < length:
        out += hashlib.sha256(seed + counter.to_bytes(8, "big")).digest()
        counter += 1
    return bytes(out[:length])


def seal(params: GroupParams, pk: GroupElem, body: bytes, rng: random.Random) -> bytes:
    """Encrypt body under pk: PRE-encapsulated content key + keystream cipher."""
    mu = rng.randrange(1, params.q)
    cap = encrypt(params, pk, encode_message(params, mu), rng)
    cap_bytes = serialize_level1(cap)
    stream = _keystream(mu, len(body))
    return len(cap_bytes).to_bytes(4, "big") + cap_bytes + bytes(x ^ y for x, y in zip(body, stream))


def _split_sealed(blob: bytes, params: GroupParams) -> tuple[Level1Ciphertext, bytes]:
    if len(blob) < 4:
        raise SerializationError("blob too short")
    n = int.from_bytes(blob[:4], "big")
    if len(blob) < 4 + n:
        raise SerializationError("truncated encapsulation")
    return deserialize_level1(blob[4 : 4 + n], params), blob[4 + n :]


def unseal_direct(params: GroupParams, blob: bytes, sk: GroupScalar) -> bytes:
    """Open a sealed blob with the encrypting key owner's secret."""
    cap, cipher = _split_sealed(blob, params)
    mu = decode_message(decrypt_level1(cap, sk, params))
    return bytes(x ^ y for x, y in zip(cipher, _keystream(mu, len(cipher))))


def unseal_with_rekey(
    params: GroupParams, blob: bytes, rk: ReEncryptionKey, sk_b: GroupScalar
) -> bytes:
    """Open a sealed blob as the delegatee: transform the encapsulation, then decrypt."""
    cap, cipher = _split_sealed(blob, params)
    mu = decode_message(decrypt_level2(reencrypt(cap, rk), sk_b))
    return bytes(x ^ y for x, y in zip(cipher, _keystream(mu, len(cipher))))
