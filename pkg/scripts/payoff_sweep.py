#!/usr/bin/env python3
"""Empirically rebuild the strategic-form payoff table by running every
strategy profile through the full protocol, and compare each realized cell
against the closed-form matrix.

Usage: python3 scripts/payoff_sweep.py [--seed N] [--c N --ds N --db N --vs N --vb N]
"""
import argparse

from fairex.game import GameParams, build_matrix
from fairex.harness import BUYER, SELLER, ScenarioConfig, sweep


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--c", type=int, default=10)
    ap.add_argument("--ds", type=int, default=15)
    ap.add_argument("--db", type=int, default=15)
    ap.add_argument("--vs", type=int, default=10)
    ap.add_argument("--vb", type=int, default=10)
    args = ap.parse_args()

    game = GameParams(c=args.c, d_s=args.ds, d_b=args.db, v_s=args.vs, v_b=args.vb)
    matrix = build_matrix(game)
    print(f"params: c={game.c} d_s={game.d_s} d_b={game.d_b} v_s={game.v_s} v_b={game.v_b}")
    print(f"{'seller strategy':<16} {'buyer strategy':<16} {'phase':<10} "
          f"{'realized (b,s)':<16} {'table cell':<16} match")
    for (ss, bs), r in sweep(ScenarioConfig(game=game, seed=args.seed)).items():
        realized = (r.utility[BUYER], r.utility[SELLER])
        expected = matrix.cell(r.profile.buyer, r.profile.seller)
        print(f"{ss.value:<16} {bs.value:<16} {r.final_phase.value:<10} "
              f"{str(realized):<16} {str(expected):<16} {realized == expected}")


if __name__ == "__main__":
    main()
