"""Escrow state machine for the deposit-backed exchange.

Phases: AwaitingDeposits -> AwaitingKey -> AwaitingProof -> Settled or
Forfeited, with no back-edges and absorbing terminals. Deployment refuses
any parameterization where either deposit does not strictly exceed the
price, so the incentive condition is structural.

Settlement is gated on a verifying knowledge proof against the deployed
commitment. On forfeiture the two deposits go to the unspendable sink;
the escrowed price is returned to the buyer, since only deposits are at
stake. If the deposit window lapses, whoever paid is refunded in full.

Every transition appends one line to the event log:
    height|phase_from|phase_to|op|caller|amount
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from . import zkpok
from .cas import Digest
from .ledger import SINK, Ledger
from .pre import ReEncryptionKey
from .zkpok import Commitment, KnowledgeProof


class ContractError(ValueError):
    pass


class Phase(Enum):
    AWAITING_DEPOSITS = "AwaitingDeposits"
    AWAITING_KEY = "AwaitingKey"
    AWAITING_PROOF = "AwaitingProof"
    SETTLED = "Settled"
    FORFEITED = "Forfeited"


TERMINAL = {Phase.SETTLED, Phase.FORFEITED}

_addr_counter = itertools.count()


@dataclass(frozen=True)
class ExchangeParams:
    seller: str
    buyer: str
    price: int
    deposit_seller: int
    deposit_buyer: int
    commitment: Commitment
    ciphertext_digest: Digest
    timeout_deposit: int
    timeout_key: int
    timeout_proof: int


class ExchangeContract:
    def __init__(self, ledger: Ledger, params: ExchangeParams, nonce: int = 0):
        if params.price <= 0:
            raise ContractError("price must be positive")
        if params.deposit_seller <= params.price or params.deposit_buyer <= params.price:
            raise ContractError("each deposit must strictly exceed the price")
        if not ledger.height < params.timeout_deposit < params.timeout_key < params.timeout_proof:
            raise ContractError("timeouts must be strictly increasing from deployment height")
        self.ledger = ledger
        self.params = params
        self.nonce = nonce
        self.address = f"escrow:{next(_addr_counter)}"
        ledger.open_account(self.address)
        self.phase = Phase.AWAITING_DEPOSITS
        self.deposits_paid = {params.seller: False, params.buyer: False}
        self.rekey: ReEncryptionKey | None = None
        self.key_height: int | None = None
        self.refunded_on_lapse = False
        self.events: list[str] = []
        self._log(Phase.AWAITING_DEPOSITS, Phase.AWAITING_DEPOSITS, "deploy", params.seller, 0)

    @property
    def context(self) -> bytes:
        """Domain-separation string binding proofs to this exchange instance."""
        return self.address.encode() + self.nonce.to_bytes(8, "big")

    @property
    def escrow(self) -> int:
        return self.ledger.balance(self.address)

    def _log(self, before: Phase, after: Phase, op: str, caller: str, amount: int) -> None:
        self.events.append(
            f"{self.ledger.height}|{before.value}|{after.value}|{op}|{caller}|{amount}"
        )

    def _require_phase(self, phase: Phase, op: str) -> None:
        if self.phase != phase:
            raise ContractError(f"{op} not allowed in phase {self.phase.value}")

    def deposit(self, party: str, amount: int) -> None:
        self._require_phase(Phase.AWAITING_DEPOSITS, "deposit")
        if self.ledger.height >= self.params.timeout_deposit:
            raise ContractError("deposit window has lapsed")
        if party == self.params.seller:
            expected = self.params.deposit_seller
        elif party == self.params.buyer:
            # Buyer escrows the price with the deposit so settlement is funded.
            expected = self.params.deposit_buyer + self.params.price
        else:
            raise ContractError(f"{party} is not a party to this exchange")
        if self.deposits_paid[party]:
            raise ContractError(f"{party} already deposited")
        if amount != expected:
            raise ContractError(f"{party} must deposit exactly {expected}, got {amount}")
        self.ledger.transfer(party, self.address, amount)
        self.deposits_paid[party] = True
        before = self.phase
        if all(self.deposits_paid.values()):
            self.phase = Phase.AWAITING_KEY
        self._log(before, self.phase, "deposit", party, amount)

    def submit_rekey(self, caller: str, rk: ReEncryptionKey) -> None:
        self._require_phase(Phase.AWAITING_KEY, "submit_rekey")
        if caller != self.params.seller:
            raise ContractError("only the seller may submit the re-encryption key")
        if self.ledger.height >= self.params.timeout_key:
            raise ContractError("key window has lapsed")
        self.rekey = rk
        self.key_height = self.ledger.height
        self.phase = Phase.AWAITING_PROOF
        self._log(Phase.AWAITING_KEY, Phase.AWAITING_PROOF, "submit_rekey", caller, 0)

    def get_rekey(self, caller: str = "") -> ReEncryptionKey:
        # Publicly readable: the key is useless without the buyer's secret.
        self._require_phase(Phase.AWAITING_PROOF, "get_rekey")
        assert self.rekey is not None
        return self.rekey

    def submit_proof(self, caller: str, proof: KnowledgeProof) -> bool:
        self._require_phase(Phase.AWAITING_PROOF, "submit_proof")
        if caller != self.params.buyer:
            raise ContractError("only the buyer may submit a proof")
        if self.ledger.height >= self.params.timeout_proof:
            raise ContractError("proof window has lapsed")
        if not zkpok.verify(proof, self.params.commitment, self.context):
            # No penalty; the buyer may retry until the window closes.
            self._log(Phase.AWAITING_PROOF, Phase.AWAITING_PROOF, "reject_proof", caller, 0)
            return False
        p = self.params
        self.ledger.transfer(self.address, p.seller, p.deposit_seller + p.price)
        self.ledger.transfer(self.address, p.buyer, p.deposit_buyer)
        self.phase = Phase.SETTLED
        self._log(Phase.AWAITING_PROOF, Phase.SETTLED, "settle", caller, p.price)
        return True

    def on_timeout(self, caller: str = "keeper") -> bool:
        """Permissionless keeper hook; returns True if state changed."""
        if self.phase in TERMINAL:
            return False
        p, now = self.params, self.ledger.height
        before = self.phase
        if self.phase == Phase.AWAITING_DEPOSITS:
            if now < p.timeout_deposit:
                return False
            # No mutual obligation yet: refund whoever paid.
            if self.deposits_paid[p.seller]:
                self.ledger.transfer(self.address, p.seller, p.deposit_seller)
            if self.deposits_paid[p.buyer]:
                self.ledger.transfer(self.address, p.buyer, p.deposit_buyer + p.price)
            self.refunded_on_lapse = True
        else:
            deadline = p.timeout_key if self.phase == Phase.AWAITING_KEY else p.timeout_proof
            if now < deadline:
                return False
            # Deposits are blocked; the escrowed price was never owed to anyone
            # but the buyer, so it goes back.
            self.ledger.transfer(self.address, SINK, p.deposit_seller + p.deposit_buyer)
            self.ledger.transfer(self.address, p.buyer, p.price)
        self.phase = Phase.FORFEITED
        self._log(before, Phase.FORFEITED, "timeout", caller, 0)
        return True

    def trace(self) -> str:
        return "\n".join(self.events) + "\n"
