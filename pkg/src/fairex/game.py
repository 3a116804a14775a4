"""Strategic-form analysis of the exchange game.

Two players: the seller chooses between sending a correct key and a
failed/withheld one; the buyer chooses between confirming delivery and
not confirming. Payoffs per cell, as (buyer, seller):

    (Confirmation,   CorrectSending) -> (v_b - c,   c - v_s)
    (Confirmation,   FailedSending)  -> (-c,        c + v_s)
    (NoConfirmation, CorrectSending) -> (v_b - d_b, -d_s - v_s)
    (NoConfirmation, FailedSending)  -> (-d_b,      -d_s + v_s)

Pure-strategy Nash equilibria are found by best-response enumeration;
ties count as (weak) equilibria. The proof-gated variant removes the
buyer's ability to confirm after a failed send, turning the game into a
two-stage tree solved by backward induction.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class SellerAction(Enum):
    CORRECT_SENDING = "CorrectSending"
    FAILED_SENDING = "FailedSending"


class BuyerAction(Enum):
    CONFIRMATION = "Confirmation"
    NO_CONFIRMATION = "NoConfirmation"


@dataclass(frozen=True)
class ActionProfile:
    buyer: BuyerAction
    seller: SellerAction


@dataclass(frozen=True)
class GameParams:
    c: int
    d_s: int
    d_b: int
    v_s: int
    v_b: int

    def __post_init__(self) -> None:
        if min(self.c, self.d_s, self.d_b, self.v_s, self.v_b) < 0:
            raise ValueError("game parameters must be non-negative")

    @property
    def deposits_valid(self) -> bool:
        return self.d_s > self.c and self.d_b > self.c


Cell = tuple[int, int]  # (buyer payoff, seller payoff)


@dataclass(frozen=True)
class PayoffMatrix:
    cells: dict

    def cell(self, buyer: BuyerAction, seller: SellerAction) -> Cell:
        return self.cells[ActionProfile(buyer, seller)]

    def __hash__(self):
        return hash(tuple(sorted((p.buyer.value, p.seller.value, v) for p, v in self.cells.items())))


def build_matrix(p: GameParams) -> PayoffMatrix:
    C, N = BuyerAction.CONFIRMATION, BuyerAction.NO_CONFIRMATION
    OK, FAIL = SellerAction.CORRECT_SENDING, SellerAction.FAILED_SENDING
    return PayoffMatrix(
        {
            ActionProfile(C, OK): (p.v_b - p.c, p.c - p.v_s),
            ActionProfile(C, FAIL): (-p.c, p.c + p.v_s),
            ActionProfile(N, OK): (p.v_b - p.d_b, -p.d_s - p.v_s),
            ActionProfile(N, FAIL): (-p.d_b, -p.d_s + p.v_s),
        }
    )


def best_response(m: PayoffMatrix, player: str, opponent_action) -> set:
    """All payoff-maximizing actions for `player` ('buyer' or 'seller')."""
    if player == "buyer":
        payoffs = {a: m.cell(a, opponent_action)[0] for a in BuyerAction}
    elif player == "seller":
        payoffs = {a: m.cell(opponent_action, a)[1] for a in SellerAction}
    else:
        raise ValueError(f"unknown player {player!r}")
    best = max(payoffs.values())
    return {a for a, v in payoffs.items() if v == best}


def pure_nash(m: PayoffMatrix) -> set[ActionProfile]:
    """All weakly stable pure profiles (ties count as equilibria)."""
    return {
        ActionProfile(b, s)
        for b in BuyerAction
        for s in SellerAction
        if b in best_response(m, "buyer", s) and s in best_response(m, "seller", b)
    }


@dataclass(frozen=True)
class RevisedOutcome:
    """Backward-induction result of the proof-gated game.

    profile is None when the seller is exactly indifferent between the two
    branches (no strict equilibrium).
    """

    profile: ActionProfile | None
    indifferent: bool
    deliver_payoff: int
    withhold_payoff: int


def revised_nash(p: GameParams) -> RevisedOutcome:
    """Solve the game where confirming requires actual delivery.

    With the proof gate, the buyer confirms iff the key was correct, so the
    seller compares c - v_s (deliver, buyer confirms) against -d_s + v_s
    (withhold, buyer cannot confirm). Delivery wins iff d_s > 2*v_s - c.
    """
    deliver = p.c - p.v_s
    withhold = -p.d_s + p.v_s
    if deliver == withhold:
        return RevisedOutcome(None, True, deliver, withhold)
    if deliver > withhold:
        profile = ActionProfile(BuyerAction.CONFIRMATION, SellerAction.CORRECT_SENDING)
    else:
        profile = ActionProfile(BuyerAction.NO_CONFIRMATION, SellerAction.FAILED_SENDING)
    return RevisedOutcome(profile, False, deliver, withhold)


@dataclass(frozen=True)
class FairnessReport:
    ds_gt_c: bool
    db_gt_c: bool
    revised_condition: bool  # d_s > 2*v_s - c
    nash: frozenset
    revised: RevisedOutcome

    @property
    def all_hold(self) -> bool:
        return self.ds_gt_c and self.db_gt_c and self.revised_condition


def fairness_condition(p: GameParams) -> FairnessReport:
    return FairnessReport(
        ds_gt_c=p.d_s > p.c,
        db_gt_c=p.d_b > p.c,
        revised_condition=p.d_s > 2 * p.v_s - p.c,
        nash=frozenset(pure_nash(build_matrix(p))),
        revised=revised_nash(p),
    )


def analyze(p: GameParams) -> dict:
    """Machine-readable bundle of matrix, equilibria, and condition flags."""
    m = build_matrix(p)
    report = fairness_condition(p)
    return {
        "params": {"c": p.c, "d_s": p.d_s, "d_b": p.d_b, "v_s": p.v_s, "v_b": p.v_b},
        "matrix": {
            f"{prof.buyer.value}/{prof.seller.value}": list(cell)
            for prof, cell in m.cells.items()
        },
        "pure_nash": sorted(
            f"{prof.buyer.value}/{prof.seller.value}" for prof in report.nash
        ),
        "revised": {
            "profile": (
                f"{report.revised.profile.buyer.value}/{report.revised.profile.seller.value}"
                if report.revised.profile is not None
                else None
            ),
            "indifferent": report.revised.indifferent,
            "deliver_payoff": report.revised.deliver_payoff,
            "withhold_payoff": report.revised.withhold_payoff,
        },
        "conditions": {
            "ds_gt_c": report.ds_gt_c,
            "db_gt_c": report.db_gt_c,
            "revised_condition": report.revised_condition,
            "all_hold": report.all_hold,
        },
    }
