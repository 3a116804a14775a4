import random

import pytest

from fairex import pre
from fairex.algebra import (
    GroupElem,
    GroupScalar,
    NoInverseError,
    TargetElem,
    encode_message,
    scalar,
)

Q = 11


def make_keys(params, sk_value):
    sk = scalar(params, sk_value)
    return pre.KeyPair(sk=sk, pk=GroupElem(sk_value, params.q))


def encrypt_with_r(params, pk, m, r):
    """Encryption with pinned randomness, for worked examples."""
    rng = _FixedScalarRng(r)
    return pre.encrypt(params, pk, m, rng)


class _FixedScalarRng:
    def __init__(self, *values):
        self._values = list(values)

    def randrange(self, lo, hi):
        return self._values.pop(0)


def test_keygen_definitional(params11):
    kp = make_keys(params11, 3)
    assert kp.pk == GroupElem(3, Q)


def test_keygen_pk_never_identity(params11):
    rng = random.Random(0)
    for _ in range(200):
        assert not pre.keygen(params11, rng).pk.is_identity


def test_keygen_reproducible(params11):
    a = pre.keygen(params11, random.Random(42))
    b = pre.keygen(params11, random.Random(42))
    assert a == b


def test_encrypt_worked_example(params11):
    # a=3, r=5, m=Z^2: C_a = (Z^(5+2), g^(15 mod 11))
    kp = make_keys(params11, 3)
    ct = encrypt_with_r(params11, kp.pk, encode_message(params11, 2), 5)
    assert ct.c1 == TargetElem(7, Q)
    assert ct.c2 == GroupElem(4, Q)


def test_encrypt_identity_message(params11):
    kp = make_keys(params11, 3)
    ct = encrypt_with_r(params11, kp.pk, params11.target_identity, 5)
    assert ct.c1 == TargetElem(5, Q)  # Z^r alone


def test_decrypt_level1_roundtrip(params11):
    kp = make_keys(params11, 3)
    m = encode_message(params11, 2)
    ct = encrypt_with_r(params11, kp.pk, m, 5)
    assert pre.decrypt_level1(ct, kp.sk, params11) == m


def test_decrypt_level1_wrong_key_fails(params11):
    kp = make_keys(params11, 3)
    m = encode_message(params11, 2)
    ct = encrypt_with_r(params11, kp.pk, m, 5)
    for wrong in range(1, Q):
        if wrong == 3:
            continue
        assert pre.decrypt_level1(ct, scalar(params11, wrong), params11) != m


def test_rekeygen_worked_example(params11):
    # a=3, b=4: rk = g^(4 * inv(3)) = g^5
    alice = make_keys(params11, 3)
    bob = make_keys(params11, 4)
    rk = pre.rekeygen(alice.sk, bob.pk)
    assert rk.rk == GroupElem(5, Q)


def test_rekeygen_same_keys_gives_generator(params11):
    kp = make_keys(params11, 7)
    assert pre.rekeygen(kp.sk, kp.pk).rk == params11.generator


def test_rekeygen_zero_secret_rejected(params11):
    with pytest.raises(NoInverseError):
        pre.rekeygen(GroupScalar(0, Q), GroupElem(4, Q))


def test_reencrypt_worked_example(params11):
    # r=5, a=3, b=4: c2' = e(g^(ra), g^(b/a)) = Z^(rb) = Z^(20 mod 11) = Z^9
    alice = make_keys(params11, 3)
    bob = make_keys(params11, 4)
    ct = encrypt_with_r(params11, alice.pk, encode_message(params11, 2), 5)
    rk = pre.rekeygen(alice.sk, bob.pk)
    ct2 = pre.reencrypt(ct, rk)
    assert ct2.c1 == ct.c1
    assert ct2.c2 == TargetElem(9, Q)


def test_reencrypt_trivial_rekey(params11):
    alice = make_keys(params11, 3)
    ct = encrypt_with_r(params11, alice.pk, encode_message(params11, 2), 5)
    rk = pre.ReEncryptionKey(rk=params11.generator, from_pk=alice.pk, to_pk=alice.pk)
    assert pre.reencrypt(ct, rk).c2 == TargetElem(ct.c2.log, Q)


def test_decrypt_level2_worked_example(params11):
    # C_b = (Z^7, Z^9), b=4: c2^(inv(4)=3) = Z^5, m = Z^(7-5) = Z^2
    ct2 = pre.Level2Ciphertext(TargetElem(7, Q), TargetElem(9, Q))
    assert pre.decrypt_level2(ct2, scalar(params11, 4)) == TargetElem(2, Q)


def test_decrypt_level2_zero_key_rejected(params11):
    ct2 = pre.Level2Ciphertext(TargetElem(7, Q), TargetElem(9, Q))
    with pytest.raises(NoInverseError):
        pre.decrypt_level2(ct2, GroupScalar(0, Q))


def test_decrypt_level2_wrong_key_fails(params11):
    alice = make_keys(params11, 3)
    bob = make_keys(params11, 4)
    m = encode_message(params11, 2)
    ct = encrypt_with_r(params11, alice.pk, m, 5)
    ct2 = pre.reencrypt(ct, pre.rekeygen(alice.sk, bob.pk))
    for wrong in range(1, Q):
        if wrong == 4:
            continue
        assert pre.decrypt_level2(ct2, scalar(params11, wrong)) != m


def test_full_roundtrip_exhaustive(params11):
    """decrypt(reencrypt(encrypt(m))) == m over all keys, randomness, and messages."""
    for a in range(1, Q):
        alice = make_keys(params11, a)
        for b in range(1, Q):
            bob = make_keys(params11, b)
            rk = pre.rekeygen(alice.sk, bob.pk)
            for r in range(1, Q):
                for mu in range(Q):
                    m = encode_message(params11, mu)
                    ct = encrypt_with_r(params11, alice.pk, m, r)
                    assert pre.decrypt_level2(pre.reencrypt(ct, rk), bob.sk) == m


def test_reencrypt_needs_no_key_material(params11):
    # Untrusted-proxy contract: callable with only ciphertext and rekey in scope.
    alice = make_keys(params11, 3)
    bob = make_keys(params11, 4)
    ct = encrypt_with_r(params11, alice.pk, encode_message(params11, 2), 5)
    rk = pre.rekeygen(alice.sk, bob.pk)

    def proxy(ciphertext, rekey):
        return pre.reencrypt(ciphertext, rekey)

    ct2 = proxy(ct, rk)
    assert pre.decrypt_level2(ct2, bob.sk) == encode_message(params11, 2)


def test_c1_unchanged_by_reencrypt(params11):
    alice = make_keys(params11, 3)
    bob = make_keys(params11, 4)
    rng = random.Random(1)
    for _ in range(50):
        ct = pre.encrypt(params11, alice.pk, encode_message(params11, rng.randrange(Q)), rng)
        assert pre.reencrypt(ct, pre.rekeygen(alice.sk, bob.pk)).c1 == ct.c1


def test_serialization_roundtrips(params11):
    alice = make_keys(params11, 3)
    bob = make_keys(params11, 4)
    ct = encrypt_with_r(params11, alice.pk, encode_message(params11, 2), 5)
    rk = pre.rekeygen(alice.sk, bob.pk)
    ct2 = pre.reencrypt(ct, rk)
    assert pre.deserialize_level1(pre.serialize_level1(ct), params11) == ct
    assert pre.deserialize_level2(pre.serialize_level2(ct2), params11) == ct2
    assert pre.deserialize_rekey(pre.serialize_rekey(rk), params11) == rk
    assert pre.deserialize_pubkey(pre.serialize_pubkey(alice.pk), params11) == alice.pk


def test_serialization_tags_distinct(params11):
    alice = make_keys(params11, 3)
    ct = encrypt_with_r(params11, alice.pk, encode_message(params11, 2), 5)
    with pytest.raises(pre.SerializationError):
        pre.deserialize_level2(pre.serialize_level1(ct), params11)


def test_seal_unseal_direct(params_big):
    rng = random.Random(9)
    kp = pre.keygen(params_big, rng)
    body = b"certified identity record " * 40
    blob = pre.seal(params_big, kp.pk, body, rng)
    assert blob != body
    assert pre.unseal_direct(params_big, blob, kp.sk) == body


def test_seal_unseal_via_rekey(params_big):
    rng = random.Random(10)
    alice = pre.keygen(params_big, rng)
    bob = pre.keygen(params_big, rng)
    body = bytes(range(256)) * 16
    blob = pre.seal(params_big, alice.pk, body, rng)
    rk = pre.rekeygen(alice.sk, bob.pk)
    assert pre.unseal_with_rekey(params_big, blob, rk, bob.sk) == body


def test_unseal_with_wrong_rekey_garbles(params_big):
    rng = random.Random(11)
    alice = pre.keygen(params_big, rng)
    bob = pre.keygen(params_big, rng)
    body = b"payload" * 100
    blob = pre.seal(params_big, alice.pk, body, rng)
    fake = pre.ReEncryptionKey(
        rk=GroupElem(rng.randrange(params_big.q), params_big.q),
        from_pk=alice.pk,
        to_pk=bob.pk,
    )
    assert pre.unseal_with_rekey(params_big, blob, fake, bob.sk) != body
