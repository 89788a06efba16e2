"""Agreement of the four criteria on random graphs of growing size.

    python scripts/equivalence_sweep.py --sizes 3 4 5 6 7 --graphs 200
"""
import argparse
import time

from mixedsep.sweep import SweepConfig, run_sweep


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", type=int, nargs="+", default=[3, 4, 5, 6])
    parser.add_argument("--graphs", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--p-dir", type=float, default=0.3)
    parser.add_argument("--p-bi", type=float, default=0.2)
    parser.add_argument("--oracle-max-edges", type=int, default=12)
    parser.add_argument("--witnesses", action="store_true")
    args = parser.parse_args()

    print(f"{'n':>3} {'queries':>9} {'oracle':>8} {'disagree':>9} {'bad wit.':>9} {'sec':>7}")
    for n in args.sizes:
        config = SweepConfig(n=n, graphs=args.graphs, seed=args.seed, p_dir=args.p_dir,
                             p_bi=args.p_bi, oracle_max_edges=args.oracle_max_edges,
                             check_witnesses=args.witnesses)
        t0 = time.perf_counter()
        r = run_sweep(config)
        print(f"{n:>3} {r.queries_tested:>9} {r.oracle_queries:>8} {r.disagreements:>9} "
              f"{r.witness_failures:>9} {time.perf_counter() - t0:>7.1f}")


if __name__ == "__main__":
    main()
