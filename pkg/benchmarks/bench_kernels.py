"""Time the compiled kernels against the NumPy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from dcsep import kernels


def cases(rng):
    T, B, H = 200, 8, 64
    xp = rng.normal(size=(T, B, 4 * H))
    U = rng.normal(scale=0.1, size=(4 * H, H))
    h0, c0 = np.zeros((B, H)), np.zeros((B, H))
    dh = rng.normal(size=(T, B, H))
    X = rng.normal(size=(20000, 16))
    C = rng.normal(size=(2, 16))
    lab0, _ = kernels.available_backends()["python"].lloyd_assign(X, C)
    C0 = np.stack([X[lab0 == j].mean(0) for j in range(2)])
    Xs = X[:2000]
    lab_s, _ = kernels.available_backends()["python"].lloyd_assign(Xs, C0)

    def forward(m):
        return lambda: m.lstm_forward_seq(xp, U, h0, c0)

    def backward(m):
        hs, cs, acts = m.lstm_forward_seq(xp, U, h0, c0)
        return lambda: m.lstm_backward_seq(dh, U, hs, cs, acts, h0, c0)

    def assign(m):
        return lambda: m.lloyd_assign(X, C)

    def transfer(m):
        return lambda: m.hartigan_pass(Xs, C0.copy(), lab_s.copy())

    return {
        f"lstm_forward T={T} B={B} H={H}": forward,
        f"lstm_backward T={T} B={B} H={H}": backward,
        "lloyd_assign N=20000 D=16 k=2": assign,
        "hartigan_pass N=2000 D=16 k=2": transfer,
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"active backend: {kernels.BACKEND}; available: {', '.join(sorted(backends))}")
    rng = np.random.default_rng(0)
    rows = []
    for name, make in cases(rng).items():
        times = {}
        for bname, mod in sorted(backends.items()):
            fn = make(mod)
            times[bname] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        rows.append((name, times))
    header = f"{'kernel':<34}" + "".join(f"{b:>12}" for b in sorted(backends)) + f"{'speedup':>10}"
    print(header)
    for name, times in rows:
        line = f"{name:<34}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in sorted(backends))
        if "cython" in times:
            line += f"{times['python'] / times['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
