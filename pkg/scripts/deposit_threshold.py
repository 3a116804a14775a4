#!/usr/bin/env python3
"""Scan the seller-deposit axis and report where the proof-gated game flips
from withholding to honest delivery (the d_s > 2*v_s - c threshold), next to
the equilibria of the ungated game.

Usage: python3 scripts/deposit_threshold.py [--c N --vs N --vb N --db N --ds-max N]
"""
import argparse

from fairex.game import GameParams, build_matrix, pure_nash, revised_nash


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--c", type=int, default=10)
    ap.add_argument("--vs", type=int, default=10)
    ap.add_argument("--vb", type=int, default=10)
    ap.add_argument("--db", type=int, default=15)
    ap.add_argument("--ds-max", type=int, default=30)
    args = ap.parse_args()

    print(f"{'d_s':>4} {'ungated Nash':<40} proof-gated outcome")
    for d_s in range(0, args.ds_max + 1):
        p = GameParams(c=args.c, d_s=d_s, d_b=args.db, v_s=args.vs, v_b=args.vb)
        eq = sorted(f"({pr.buyer.value},{pr.seller.value})" for pr in pure_nash(build_matrix(p)))
        out = revised_nash(p)
        if out.indifferent:
            gated = "indifferent (boundary)"
        else:
            gated = f"({out.profile.buyer.value},{out.profile.seller.value})"
        print(f"{d_s:>4} {'; '.join(eq) or 'none':<40} {gated}")


if __name__ == "__main__":
    main()
