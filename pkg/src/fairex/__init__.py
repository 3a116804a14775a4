"""Deterministic simulator for a deposit-backed fair exchange of encrypted
data: pairing-group proxy re-encryption, a proof-of-knowledge settlement
gate, an escrow state machine on a simulated ledger, and a strategic-form
analyzer for the exchange game."""

__version__ = "0.1.0"
