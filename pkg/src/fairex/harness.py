"""End-to-end scenario runner: the full exchange executed against the
simulated ledger, store, and contract, with strategy-parameterized agents.

A scenario: the seller seals a payload under their own key and stores it,
deploys the escrow contract (commitment to the payload digest, blinding
shipped inside the sealed payload), both parties deposit, the seller's
strategy decides what key lands on the contract, the buyer's strategy
decides whether to fetch/decrypt/prove, and the run ends in settlement or
timeout forfeiture.

Monetary deltas come straight from ledger balances; the information-value
terms (v_s, v_b) are applied here, outside the ledger: the buyer gains
v_b iff decryption produced the committed payload, and the seller loses
v_s on delivery or retains it otherwise.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from . import pre, zkpok
from .algebra import GroupElem, setup
from .cas import ContentStore
from .contract import ExchangeContract, ExchangeParams, Phase
from .game import ActionProfile, BuyerAction, GameParams, SellerAction, build_matrix
from .ledger import SINK, Ledger

DEFAULT_ORDER = 2**31 - 1  # Mersenne prime; large enough that fake keys never decrypt

SELLER = "seller"
BUYER = "buyer"


class ConfigError(ValueError):
    pass


class SellerStrategy(Enum):
    HONEST_KEY = "honest-key"
    CORRUPT_KEY = "corrupt-key"
    WITHHOLD_KEY = "withhold-key"


class BuyerStrategy(Enum):
    PROVE_IF_ABLE = "prove-if-able"
    NEVER_PROVE = "never-prove"


@dataclass(frozen=True)
class ScenarioConfig:
    game: GameParams
    seed: int = 0
    order: int = DEFAULT_ORDER
    payload_size: int = 64
    deposit_window: int = 4
    key_window: int = 8
    proof_window: int = 12

    def __post_init__(self) -> None:
        if not self.game.deposits_valid:
            raise ConfigError("deposits must strictly exceed the price")
        if not 0 < self.deposit_window < self.key_window < self.proof_window:
            raise ConfigError("windows must be strictly increasing")


@dataclass
class ScenarioResult:
    final_phase: Phase
    delivered: bool
    proof_accepted: bool
    money: dict = field(default_factory=dict)  # per-party ledger delta
    info: dict = field(default_factory=dict)  # per-party information value
    utility: dict = field(default_factory=dict)  # money + info
    sink_delta: int = 0
    trace: str = ""

    @property
    def profile(self) -> ActionProfile:
        """Map the realized run onto a strategic-form cell."""
        return ActionProfile(
            BuyerAction.CONFIRMATION if self.proof_accepted else BuyerAction.NO_CONFIRMATION,
            SellerAction.CORRECT_SENDING if self.delivered else SellerAction.FAILED_SENDING,
        )


def run_scenario(
    config: ScenarioConfig, ss: SellerStrategy, bs: BuyerStrategy
) -> ScenarioResult:
    g = config.game
    rng = random.Random(config.seed)
    params = setup(config.order)
    basis = zkpok.default_basis(params)
    store = ContentStore()

    seller_keys = pre.keygen(params, rng)
    buyer_keys = pre.keygen(params, rng)

    # Step 1: seal the certified payload under the seller's own key and store it.
    body = rng.randbytes(config.payload_size)
    blinding = zkpok.random_scalar(params, rng)
    k = zkpok.digest_to_scalar(params, body)
    commitment = zkpok.commit(k, blinding, basis)
    package = _pack_payload(body, blinding.value)
    blob = pre.seal(params, seller_keys.pk, package, rng)
    digest = store.put(blob)

    ledger = Ledger.genesis([(SELLER, g.d_s + g.c), (BUYER, g.d_b + g.c)])
    start = {p: ledger.balance(p) for p in (SELLER, BUYER, SINK)}

    contract = ExchangeContract(
        ledger,
        ExchangeParams(
            seller=SELLER,
            buyer=BUYER,
            price=g.c,
            deposit_seller=g.d_s,
            deposit_buyer=g.d_b,
            commitment=commitment,
            ciphertext_digest=digest,
            timeout_deposit=config.deposit_window,
            timeout_key=config.key_window,
            timeout_proof=config.proof_window,
        ),
    )

    contract.deposit(SELLER, g.d_s)
    contract.deposit(BUYER, g.d_b + g.c)
    ledger.advance_height(1)

    # Steps 3-5: key submission per seller strategy.
    if ss == SellerStrategy.HONEST_KEY:
        contract.submit_rekey(SELLER, pre.rekeygen(seller_keys.sk, buyer_keys.pk))
    elif ss == SellerStrategy.CORRUPT_KEY:
        fake = pre.ReEncryptionKey(
            rk=GroupElem(rng.randrange(params.q), params.q),
            from_pk=seller_keys.pk,
            to_pk=buyer_keys.pk,
        )
        contract.submit_rekey(SELLER, fake)
    ledger.advance_height(1)

    # Steps 6-7: fetch, decrypt, and (per strategy) prove.
    delivered = False
    proof_accepted = False
    if contract.phase == Phase.AWAITING_PROOF:
        rk = contract.get_rekey(BUYER)
        fetched = store.get(digest)
        got_body, got_blinding = _unpack_payload(pre.unseal_with_rekey(params, fetched, rk, buyer_keys.sk))
        opening = zkpok.Opening(
            k=zkpok.digest_to_scalar(params, got_body),
            s=zkpok.scalar(params, got_blinding),
        )
        delivered = zkpok.commit(opening.k, opening.s, basis) == commitment
        if bs == BuyerStrategy.PROVE_IF_ABLE and delivered:
            proof = zkpok.prove(opening, commitment, contract.context, rng)
            proof_accepted = contract.submit_proof(BUYER, proof)

    # Close out any unfinished run through the timeout path.
    if contract.phase not in (Phase.SETTLED, Phase.FORFEITED):
        while ledger.height < config.proof_window:
            ledger.advance_height(1)
        contract.on_timeout()

    money = {p: ledger.balance(p) - start[p] for p in (SELLER, BUYER)}
    info = {
        SELLER: -g.v_s if delivered else g.v_s,
        BUYER: g.v_b if delivered else 0,
    }
    return ScenarioResult(
        final_phase=contract.phase,
        delivered=delivered,
        proof_accepted=proof_accepted,
        money=money,
        info=info,
        utility={p: money[p] + info[p] for p in (SELLER, BUYER)},
        sink_delta=ledger.balance(SINK) - start[SINK],
        trace=contract.trace(),
    )


def _pack_payload(body: bytes, blinding: int) -> bytes:
    b = blinding.to_bytes(16, "big")
    return len(body).to_bytes(4, "big") + body + b


def _unpack_payload(package: bytes) -> tuple[bytes, int]:
    n = int.from_bytes(package[:4], "big")
    return package[4 : 4 + n], int.from_bytes(package[4 + n : 4 + n + 16], "big")


def sweep(config: ScenarioConfig) -> dict[tuple[SellerStrategy, BuyerStrategy], ScenarioResult]:
    """Run every strategy profile; the empirical counterpart of the payoff table."""
    return {
        (ss, bs): run_scenario(config, ss, bs)
        for ss in SellerStrategy
        for bs in BuyerStrategy
    }


def reconcile(config: ScenarioConfig) -> dict:
    """Compare each realized profile's utilities with its strategic-form cell."""
    matrix = build_matrix(config.game)
    rows = {}
    for (ss, bs), result in sweep(config).items():
        expected = matrix.cell(result.profile.buyer, result.profile.seller)
        rows[(ss, bs)] = {
            "realized": (result.utility[BUYER], result.utility[SELLER]),
            "expected": expected,
            "match": (result.utility[BUYER], result.utility[SELLER]) == expected,
            "phase": result.final_phase.value,
        }
    return rows
