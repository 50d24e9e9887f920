"""Compiled kernels against the pure-Python fallback.

Each backend runs in its own interpreter (the backend is fixed at import).
Workloads: dense RREF of random rational matrices, the Hopf algebroid
build and check on ``H_par`` of Z3 (sparse echelon forms of balanced tensor
kernels), and two full ``H_par`` builds (word rewriting). A digest of
every result is compared across backends.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import hashlib, json, random, sys, time
from fractions import Fraction
from whapar import kernels
from whapar.kernels import rref_dense
from whapar.constructors import cyclic_group, groupoid_algebra, klein_group
from whapar.hpar import build_hpar
from whapar.algebroid import build_algebroid, check_hopf_algebroid

repeat = int(sys.argv[1])
rng = random.Random(12345)
def rat():
    return Fraction(rng.randint(-9, 9), rng.randint(1, 6))
mats = [[[rat() for _ in range(24)] for _ in range(20)] for _ in range(30)]

def best(f):
    out, times = None, []
    for _ in range(repeat):
        t = time.perf_counter()
        out = f()
        times.append(time.perf_counter() - t)
    return min(times), out

def digest(x):
    return hashlib.sha256(repr(x).encode()).hexdigest()[:16]

res = {"backend": kernels.BACKEND}
t, out = best(lambda: [rref_dense(m, 24) for m in mats])
res["rref_dense"] = (t, digest(out))
hp3 = build_hpar(groupoid_algebra(cyclic_group(3)))
def algebroid():
    had = build_algebroid(hp3)
    rep = check_hopf_algebroid(had)
    return rep.ok, had.delta_l, had.delta_r, rep.info["triple_tensor_dims"]
t, out = best(algebroid)
res["algebroid_z3"] = (t, digest(out))
for name, g in (("hpar_z3", cyclic_group(3)), ("hpar_klein", klein_group())):
    h = groupoid_algebra(g)
    t, hp = best(lambda: build_hpar(h))
    res[name] = (t, digest((hp.words, sorted(hp.carrier.table().items()))))
print(json.dumps(res))
"""


def run(pure, repeat):
    env = dict(os.environ, WHAPAR_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env, check=True,
                         capture_output=True, text=True).stdout
    return json.loads(out)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = run(True, args.repeat)
    cy = run(False, args.repeat)
    if cy["backend"] != "cython":
        print("compiled extension not available; only the fallback was measured")
    print("%-16s %10s %10s %8s  %s" % ("workload", "python s", cy["backend"] + " s", "speedup", "same result"))
    same_all = True
    for key in ("rref_dense", "algebroid_z3", "hpar_z3", "hpar_klein"):
        tp, dp = py[key]
        tc, dc = cy[key]
        same = dp == dc
        same_all &= same
        print("%-16s %10.4f %10.4f %7.2fx  %s" % (key, tp, tc, tp / tc if tc else float("nan"), same))
    return 0 if same_all else 1


if __name__ == "__main__":
    sys.exit(main())
