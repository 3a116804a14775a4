"""Deterministic simulated ledger: accounts, balances, logical block height.

Integer currency, no fees. Forfeited deposits move to a designated sink
account rather than disappearing, so total supply is conserved across any
operation sequence. Single writer; snapshots via `dump`.
"""
from __future__ import annotations

from dataclasses import dataclass

SINK = "sink"


class LedgerError(ValueError):
    pass


class InsufficientFundsError(LedgerError):
    pass


@dataclass(frozen=True)
class Receipt:
    sender: str
    recipient: str
    amount: int
    height: int


class Ledger:
    def __init__(self) -> None:
        self._balances: dict[str, int] = {SINK: 0}
        self.height = 0

    @classmethod
    def genesis(cls, accounts: list[tuple[str, int]]) -> "Ledger":
        led = cls()
        for addr, bal in accounts:
            if bal < 0:
                raise LedgerError(f"negative genesis balance for {addr}")
            if addr in led._balances:
                raise LedgerError(f"duplicate address {addr}")
            led._balances[addr] = bal
        return led

    def open_account(self, addr: str) -> None:
        if addr in self._balances:
            raise LedgerError(f"duplicate address {addr}")
        self._balances[addr] = 0

    def balance(self, addr: str) -> int:
        return self._balances.get(addr, 0)

    @property
    def supply(self) -> int:
        return sum(self._balances.values())

    def transfer(self, sender: str, recipient: str, amount: int) -> Receipt:
        if amount <= 0:
            raise LedgerError(f"transfer amount must be positive, got {amount}")
        if self._balances.get(sender, 0) < amount:
            raise InsufficientFundsError(f"{sender} has {self.balance(sender)}, needs {amount}")
        if recipient not in self._balances:
            self._balances[recipient] = 0
        self._balances[sender] -= amount
        self._balances[recipient] += amount
        return Receipt(sender, recipient, amount, self.height)

    def advance_height(self, n: int = 1) -> int:
        if n < 1:
            raise LedgerError("height must advance by at least 1")
        self.height += n
        return self.height

    def dump(self) -> str:
        """Canonical text state: sorted addresses, then height."""
        lines = [f"{addr}={bal}" for addr, bal in sorted(self._balances.items())]
        lines.append(f"height={self.height}")
        return "\n".join(lines)
