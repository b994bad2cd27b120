"""Brute-force EM oracle for the diagonal-prior aligner.

Enumerates every full alignment vector a in {NULL, 1..n}^m per sentence pair,
computes the joint p(f, a | e) explicitly and normalizes over all vectors.
No per-position factorization is used. Positions are 1-based on both sides;
NULL gets fixed mass p0, real source words share (1 - p0) through
exp(-tension * |i/m - j/n|) normalized over j = 1..n.
"""
import itertools
import json
import math

TENSION = 4.0
P0 = 0.08
ITERS = 5
NULL = "<null>"
PAIRS = [("a b", "x y"), ("a c", "x z"), ("b a", "y x")]


def delta(j, i, m, n):
    z = sum(math.exp(-TENSION * abs(i / m - jj / n)) for jj in range(1, n + 1))
    if j == 0:
        return P0
    return (1 - P0) * math.exp(-TENSION * abs(i / m - j / n)) / z


def run():
    pairs = [(s.split(), t.split()) for s, t in PAIRS]
    cooc = {}
    for e, f in pairs:
        for w in [NULL] + e:
            cooc.setdefault(w, set()).update(f)
    t = {(e, f): 1.0 / len(fs) for e, fs in cooc.items() for f in fs}
    lls = []
    for _ in range(ITERS):
        counts = {}
        ll = 0.0
        for e, f in pairs:
            n, m = len(e), len(f)
            src = [NULL] + e
            joint = {}
            for a in itertools.product(range(n + 1), repeat=m):
                p = 1.0
                for i0, j in enumerate(a):
                    p *= delta(j, i0 + 1, m, n) * t.get((src[j], f[i0]), 0.0)
                joint[a] = p
            total = sum(joint.values())
            ll += math.log(total)
            for a, p in joint.items():
                for i0, j in enumerate(a):
                    key = (src[j], f[i0])
                    counts[key] = counts.get(key, 0.0) + p / total
        lls.append(ll)
        totals = {}
        for (e, f), c in counts.items():
            totals[e] = totals.get(e, 0.0) + c
        t = {(e, f): c / max(totals[e], 1e-12) for (e, f), c in counts.items()}
    return pairs, t, lls


def viterbi(t, e, f):
    n, m = len(e), len(f)
    src = [NULL] + e
    best, best_p = None, -1.0
    # full-vector argmax; tie order: lexicographic over vectors with NULL encoded last
    order = list(range(1, n + 1)) + [0]
    for a in itertools.product(order, repeat=m):
        p = 1.0
        for i0, j in enumerate(a):
            p *= delta(j, i0 + 1, m, n) * t.get((src[j], f[i0]), 0.0)
        if p > best_p:
            best, best_p = a, p
    return [(i0, (j - 1) if j > 0 else None) for i0, j in enumerate(best)]


if __name__ == "__main__":
    pairs, t, lls = run()
    links = [viterbi(t, e, f) for e, f in pairs]
    counts = {}
    for (e, f), ls in zip(pairs, links):
        for i0, j in ls:
            if j is not None:
                counts[(e[j], f[i0])] = counts.get((e[j], f[i0]), 0) + 1
    out = {
        "log_likelihoods": lls,
        "t_table": sorted([[e, f, p] for (e, f), p in t.items()]),
        "argmax": {e: max(sorted(fs), key=lambda f: t[(e, f)]) for e, fs in
                   [(e, [f for (ee, f) in t if ee == e]) for e in sorted({k[0] for k in t})]},
        "viterbi": links,
        "link_counts": sorted([[e, f, c] for (e, f), c in counts.items()]),
    }
    print(json.dumps(out, indent=1))
