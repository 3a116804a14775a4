"""Prime-order cyclic group with a symmetric bilinear pairing.

The reference backend stores every element as its discrete logarithm with
respect to the canonical generator, so exponentiation is modular
multiplication and the pairing multiplies exponents. This is algebraically
exact at any prime order and cheap enough to test exhaustively, but it has
no cryptographic hardness whatsoever: it exists for simulation and
analysis, never for protecting real data.
"""
from __future__ import annotations

import random
from dataclasses import dataclass


class ParameterError(ValueError):
    """Group parameters are malformed (non-prime or too-small order)."""


class DomainMismatchError(ValueError):
    """Operands belong to groups with different parameters."""


class NoInverseError(ZeroDivisionError):
    """The zero scalar has no multiplicative inverse."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class GroupParams:
    """Order q, with g the source-group generator and Z = e(g, g)."""

    q: int

    @property
    def generator(self) -> "GroupElem":
        return GroupElem(1, self.q)

    @property
    def identity(self) -> "GroupElem":
        return GroupElem(0, self.q)

    @property
    def target_generator(self) -> "TargetElem":
        return TargetElem(1, self.q)

    @property
    def target_identity(self) -> "TargetElem":
        return TargetElem(0, self.q)


@dataclass(frozen=True)
class GroupScalar:
    """Residue mod q; key-role scalars must be nonzero."""

    value: int
    q: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.q:
            raise ParameterError(f"scalar {self.value} outside [0, {self.q})")

    def __add__(self, other: "GroupScalar") -> "GroupScalar":
        _same_q(self, other)
        return GroupScalar((self.value + other.value) % self.q, self.q)

    def __sub__(self, other: "GroupScalar") -> "GroupScalar":
        _same_q(self, other)
        return GroupScalar((self.value - other.value) % self.q, self.q)

    def __mul__(self, other: "GroupScalar") -> "GroupScalar":
        _same_q(self, other)
        return GroupScalar(self.value * other.value % self.q, self.q)


@dataclass(frozen=True)
class GroupElem:
    """Source-group element, stored as its discrete log base g."""

    log: int
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "log", self.log % self.q)

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        _same_q(self, other)
        return GroupElem((self.log + other.log) % self.q, self.q)

    def __truediv__(self, other: "GroupElem") -> "GroupElem":
        _same_q(self, other)
        return GroupElem((self.log - other.log) % self.q, self.q)

    @property
    def is_identity(self) -> bool:
        return self.log == 0


@dataclass(frozen=True)
class TargetElem:
    """Pairing target-group element, stored as its discrete log base Z."""

    log: int
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "log", self.log % self.q)

    def __mul__(self, other: "TargetElem") -> "TargetElem":
        _same_q(self, other)
        return TargetElem((self.log + other.log) % self.q, self.q)

    def __truediv__(self, other: "TargetElem") -> "TargetElem":
        _same_q(self, other)
        return TargetElem((self.log - other.log) % self.q, self.q)

    @property
    def is_identity(self) -> bool:
        return self.log == 0


def _same_q(a, b) -> None:
    if a.q != b.q:
        raise DomainMismatchError(f"group order mismatch: {a.q} != {b.q}")


def setup(order: int) -> GroupParams:
    """Create group parameters for a prime order >= 5."""
    if order < 5 or not is_prime(order):
        raise ParameterError(f"group order must be a prime >= 5, got {order}")
    return GroupParams(order)


def exp(base: GroupElem | TargetElem, k: GroupScalar):
    """base^k, in whichever group base lives in."""
    _same_q(base, k)
    if isinstance(base, GroupElem):
        return GroupElem(base.log * k.value % base.q, base.q)
    return TargetElem(base.log * k.value % base.q, base.q)


def pair(x: GroupElem, y: GroupElem) -> TargetElem:
    """Symmetric bilinear pairing: e(g^a, g^b) = Z^(ab mod q)."""
    _same_q(x, y)
    return TargetElem(x.log * y.log % x.q, x.q)


def inv_scalar(k: GroupScalar) -> GroupScalar:
    if k.value == 0:
        raise NoInverseError("zero scalar has no inverse")
    return GroupScalar(pow(k.value, -1, k.q), k.q)


def random_scalar(params: GroupParams, rng: random.Random) -> GroupScalar:
    """Uniform draw from Z_q^*; deterministic under a seeded rng."""
    return GroupScalar(rng.randrange(1, params.q), params.q)


def scalar(params: GroupParams, value: int) -> GroupScalar:
    """Scalar from an arbitrary integer, reduced mod q."""
    return GroupScalar(value % params.q, params.q)


def encode_message(params: GroupParams, mu: int) -> TargetElem:
    """Embed an integer payload key as Z^mu."""
    return TargetElem(mu % params.q, params.q)


def decode_message(m: TargetElem) -> int:
    """Recover the embedded integer (trivial in the dlog backend)."""
    return m.log
