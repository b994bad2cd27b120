"""Direct simulation of span-Poisson masking statistics (oracle for CPT ranges).

Goal coverage ceil(ratio * L); span lengths ~ Poisson(lambda) clamped to >= 1;
final span truncated to the remaining goal; non-overlapping uniform placement
with at most 100 rejected placements per sentence.
"""
import math
import numpy as np

rng = np.random.default_rng(7)
RATIO, LAM, N = 0.35, 3.5, 10000
fracs, sampled = [], []
for _ in range(N):
    L = int(rng.integers(20, 41))
    goal = math.ceil(RATIO * L)
    covered = [False] * L
    got, rejects = 0, 0
    while got < goal and rejects < 100:
        k = max(1, int(rng.poisson(LAM)))
        sampled.append(k)
        k = min(k, goal - got)
        while rejects < 100:
            s = int(rng.integers(0, L - k + 1))
            if not any(covered[s:s + k]):
                for x in range(s, s + k):
                    covered[x] = True
                got += k
                break
            rejects += 1
    fracs.append(got / L)
print("mean masked fraction", np.mean(fracs))
print("mean sampled span length", np.mean(sampled))
print("clamped poisson mean", LAM + math.exp(-LAM))
