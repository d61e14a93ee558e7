"""Compare the compiled and pure-Python kernels.

Times the raw kernels on structure maps of the Drinfeld double of H4 (dim 16)
and then whole certification workloads, once per available backend, over Q
and GF(5).  Every workload is also checked to give identical results on both
backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from hopftwist import kernels
from hopftwist.algebra import certify_algebra
from hopftwist.constructions import drinfeld_double, named_r, regular_comodule, sweedler_h4, kC2
from hopftwist.field import GF, Q
from hopftwist.linmap import identity, tensor
from hopftwist.pipelines import homogenization_pipeline, sqt_double_pipeline


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads(F):
    D = drinfeld_double(sweedler_h4(F))
    m = D.mult
    i = identity(F, (D.dim,))
    left = tensor(m, i)          # 256 x 4096
    right = tensor(i, m)
    assoc_l = lambda: m @ left   # (ab)c
    assoc_r = lambda: m @ right  # a(bc)
    return {
        "kron  m⊗id (D(H4))": lambda: tensor(m, i).nnz(),
        "matmul m∘(m⊗id) (D(H4))": lambda: assoc_l().nnz() + assoc_r().nnz(),
        "certify D(H4) associative": lambda: certify_algebra(D).ok,
        "homogenization pipeline H4": lambda: homogenization_pipeline(regular_comodule(sweedler_h4(F))).ok,
        "sqt-double pipeline kC2": lambda: sqt_double_pipeline(named_r(kC2(F), "triangular")).ok,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = sorted(kernels.available())
    print(f"backends: {', '.join(backends)}")
    if "cython" not in backends:
        print("compiled kernels not built; only the pure-Python timings are shown")
    for F in (Q, GF(5)):
        print(f"\nfield {F.name}")
        print(f"{'workload':34}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
        names = list(workloads(F))
        rows = {n: {} for n in names}
        for b in backends:
            kernels.use(b)
            for n, fn in workloads(F).items():
                rows[n][b] = best_of(fn, args.repeat)
        for n in names:
            times = [rows[n][b][0] for b in backends]
            results = {rows[n][b][1] for b in backends}
            assert len(results) == 1, f"backends disagree on {n}"
            line = f"{n:34}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
            if len(backends) > 1:
                line += f"{rows[n]['python'][0] / rows[n]['cython'][0]:11.2f}x"
            print(line)


if __name__ == "__main__":
    main()
