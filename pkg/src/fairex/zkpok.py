"""Proof that a party knows the opening of an on-contract commitment.

The commitment is Pedersen-form, C = g^k * h^s, where k is the digest of
the delivered payload reduced into the scalar field and s is a blinding
value shipped inside the encrypted payload. Knowledge of (k, s) is proved
with a three-move sigma protocol made non-interactive by hashing the
transcript into the challenge; the context string ties each proof to one
contract instance.

The second basis generator h is derived by hashing a fixed public string,
so no dealer ever knows the relative discrete log (at toy scale the dlog
backend makes it recoverable anyway; see algebra's caveats).

`simulate` and `extract` exist for the test suite only: the simulator
witnesses the zero-knowledge property, the extractor special soundness.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .algebra import (
    GroupElem,
    GroupParams,
    GroupScalar,
    exp,
    inv_scalar,
    random_scalar,
    scalar,
)

TAG_PROOF = 0x05

_H_SEED = b"fairex second basis generator v1"


class OpeningMismatchError(ValueError):
    """Refusing to prove: the supplied opening does not open the commitment."""


class ExtractionError(ValueError):
    """Transcript pair shares a challenge; no witness can be extracted."""


@dataclass(frozen=True)
class CommitmentBasis:
    g: GroupElem
    h: GroupElem


@dataclass(frozen=True)
class Commitment:
    value: GroupElem
    basis: CommitmentBasis


@dataclass(frozen=True)
class Opening:
    k: GroupScalar
    s: GroupScalar


@dataclass(frozen=True)
class KnowledgeProof:
    t: GroupElem
    e: GroupScalar
    z1: GroupScalar
    z2: GroupScalar


def default_basis(params: GroupParams) -> CommitmentBasis:
    """Basis (g, h) with h hashed from a fixed public string; h != g, h != 1."""
    counter = 0
    while True:
        d = hashlib.sha256(_H_SEED + counter.to_bytes(4, "big")).digest()
        log = int.from_bytes(d, "big") % params.q
        if log not in (0, 1):
            return CommitmentBasis(g=params.generator, h=GroupElem(log, params.q))
        counter += 1


def digest_to_scalar(params: GroupParams, data: bytes) -> GroupScalar:
    """Payload digest reduced into the scalar field."""
    return scalar(params, int.from_bytes(hashlib.sha256(data).digest(), "big"))


def commit(k: GroupScalar, s: GroupScalar, basis: CommitmentBasis) -> Commitment:
    return Commitment(value=exp(basis.g, k) * exp(basis.h, s), basis=basis)


def challenge_hash(C: Commitment, t: GroupElem, context: bytes) -> GroupScalar:
    h = hashlib.sha256()
    for v in (C.value.log, C.basis.h.log, t.log):
        h.update(v.to_bytes(32, "big"))
    h.update(len(context).to_bytes(4, "big") + context)
    return scalar(GroupParams(t.q), int.from_bytes(h.digest(), "big"))


def prove(opening: Opening, C: Commitment, context: bytes, rng: random.Random) -> KnowledgeProof:
    if commit(opening.k, opening.s, C.basis) != C:
        raise OpeningMismatchError("opening does not match commitment")
    params = GroupParams(C.value.q)
    # Nonces range over all of Z_q so transcript coordinates are exactly
    # uniform, matching what the simulator produces.
    u = scalar(params, rng.randrange(params.q))
    w = scalar(params, rng.randrange(params.q))
    t = exp(C.basis.g, u) * exp(C.basis.h, w)
    e = challenge_hash(C, t, context)
    return KnowledgeProof(t=t, e=e, z1=u + e * opening.k, z2=w + e * opening.s)


def verify_relation(proof: KnowledgeProof, C: Commitment) -> bool:
    """The algebraic check alone: g^z1 * h^z2 == t * C^e."""
    lhs = exp(C.basis.g, proof.z1) * exp(C.basis.h, proof.z2)
    return lhs == proof.t * exp(C.value, proof.e)


def verify(proof: KnowledgeProof, C: Commitment, context: bytes) -> bool:
    if proof.t.q != C.value.q:
        return False
    if proof.e != challenge_hash(C, proof.t, context):
        return False
    return verify_relation(proof, C)


def simulate(C: Commitment, context: bytes, rng: random.Random) -> KnowledgeProof:
    """Transcript passing the algebraic relation, built without any opening."""
    params = GroupParams(C.value.q)
    e = scalar(params, rng.randrange(params.q))
    z1 = scalar(params, rng.randrange(params.q))
    z2 = scalar(params, rng.randrange(params.q))
    t = (exp(C.basis.g, z1) * exp(C.basis.h, z2)) / exp(C.value, e)
    return KnowledgeProof(t=t, e=e, z1=z1, z2=z2)


def extract(
    e1: GroupScalar,
    z_pair1: tuple[GroupScalar, GroupScalar],
    e2: GroupScalar,
    z_pair2: tuple[GroupScalar, GroupScalar],
) -> Opening:
    """Special-soundness witness from two accepting transcripts sharing t."""
    if e1 == e2:
        raise ExtractionError("challenges must differ")
    d = inv_scalar(e1 - e2)
    return Opening(k=(z_pair1[0] - z_pair2[0]) * d, s=(z_pair1[1] - z_pair2[1]) * d)


def serialize_proof(proof: KnowledgeProof) -> bytes:
    from .pre import _pack_ints

    return _pack_ints(TAG_PROOF, [proof.t.log, proof.e.value, proof.z1.value, proof.z2.value])


def deserialize_proof(data: bytes, params: GroupParams) -> KnowledgeProof:
    from .pre import _unpack_ints

    t, e, z1, z2 = _unpack_ints(data, TAG_PROOF, 4)
    return KnowledgeProof(
        t=GroupElem(t, params.q),
        e=GroupScalar(e % params.q, params.q),
        z1=GroupScalar(z1 % params.q, params.q),
        z2=GroupScalar(z2 % params.q, params.q),
    )
