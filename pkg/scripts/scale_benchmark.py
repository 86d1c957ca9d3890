"""Time chain simulation and the classical cross-check as the register grows.

    python scripts/scale_benchmark.py --max-qubits 22
"""
import argparse
import time

import numpy as np

from qmarkov.chain import ChainSpec, chain_to_dtmc, compile_chain
from qmarkov.classical import path_distribution
from qmarkov.statevector import init_basis, probabilities, run_circuit


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-qubits", type=int, default=4)
    ap.add_argument("--max-qubits", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    print("qubits\tsimulate_s\tclassical_s\tmax_abs_diff")
    for L in range(args.min_qubits, args.max_qubits + 1):
        spec = ChainSpec(tuple(rng.uniform(-1, 1, L)), tuple(rng.uniform(-1, 1, L - 1)))
        t0 = time.perf_counter()
        p = probabilities(run_circuit(compile_chain(spec), init_basis(L, 0)))
        t1 = time.perf_counter()
        d = chain_to_dtmc(spec)
        classic = path_distribution(d.initial, d.transitions).probs
        t2 = time.perf_counter()
        print(f"{L}\t{t1 - t0:.4f}\t{t2 - t1:.4f}\t{np.abs(p - classic).max():.3e}")


if __name__ == "__main__":
    main()
