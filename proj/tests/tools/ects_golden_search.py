"""Searches for a small dataset whose ECTS minimum prediction lengths
match a target table. Independent reference for the C++ ECTS module; the
dataset it prints is frozen into tests/unit/ects_test.cpp."""
import itertools
import random
import sys


def nn_table(xs):
    n, T = len(xs), len(xs[0])
    nn = [[0] * n for _ in range(T + 1)]
    for t in range(1, T + 1):
        for i in range(n):
            best, bj = None, None
            for j in range(n):
                if j == i:
                    continue
                d = sum((xs[i][s] - xs[j][s]) ** 2 for s in range(t))
                if best is None or d < best:
                    best, bj = d, j
            nn[t][i] = bj
    return nn


def rnn(nn, t, i):
    return frozenset(j for j in range(len(nn[t])) if nn[t][j] == i)


def mpl_nn(nn, T, i):
    final = rnn(nn, T, i)
    t = T
    while t > 1 and rnn(nn, t - 1, i) == final:
        t -= 1
    return t


def cluster_rnn(nn, t, members):
    # relational division: instances outside the cluster that are RNN of every member
    out = set()
    for j in range(len(nn[t])):
        if j in members:
            continue
        if all(nn[t][j] == m for m in members):
            out.add(j)
    return frozenset(out)


def cluster_ok(nn, t, members, final_rnn):
    if any(nn[t][m] not in members for m in members):
        return False
    return cluster_rnn(nn, t, members) == final_rnn


def cluster_mpl(nn, T, members):
    final = cluster_rnn(nn, T, members)
    if not cluster_ok(nn, T, members, final):
        return None
    t = T
    while t > 1 and cluster_ok(nn, t - 1, members, final):
        t -= 1
    return t


def ects_mpls(xs, labels):
    n, T = len(xs), len(xs[0])
    nn = nn_table(xs)
    own = [mpl_nn(nn, T, i) for i in range(n)]
    final = list(own)
    clusters = [[i] for i in range(n)]
    frozen = [False] * n
    active = [True] * n

    def dist(a, b):
        return sum((a[s] - b[s]) ** 2 for s in range(T))

    while True:
        live = [c for c in range(len(clusters)) if active[c] and not frozen[c]]
        if sum(active) <= 1 or len(live) < 2:
            break
        best = None
        for a, b in itertools.combinations(live, 2):
            d = min(dist(xs[p], xs[q]) for p in clusters[a] for q in clusters[b])
            if best is None or d < best[0]:
                best = (d, a, b)
        _, a, b = best
        la = {labels[m] for m in clusters[a]}
        lb = {labels[m] for m in clusters[b]}
        if la != lb:
            frozen[a] = frozen[b] = True
            continue
        merged = sorted(clusters[a] + clusters[b])
        active[a] = active[b] = False
        clusters.append(merged)
        active.append(True)
        frozen.append(False)
        m = cluster_mpl(nn, T, set(merged))
        if m is not None:
            for i in merged:
                final[i] = min(final[i], m)
    return own, final


def main():
    # Five tabulated instances plus one auxiliary instance: no five-instance
    # set can realize the table, since every nearest-neighbour switch changes
    # two RNN sets at once and so the largest MPL is always attained twice.
    target_own = [2, 7, 6, 4, 4]
    target_final = [2, 3, 4, 4, 4]
    T = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    rng = random.Random(int(sys.argv[2]) if len(sys.argv) > 2 else 1)
    labels = [0, 0, 1, 1, 1, int(sys.argv[3]) if len(sys.argv) > 3 else 2]
    n = len(labels)

    def score(xs):
        own, final = ects_mpls(xs, labels)
        return sum(abs(a - b) for a, b in zip(own[:5], target_own)) + \
            sum(abs(a - b) for a, b in zip(final[:5], target_final))

    for restart in range(5000):
        xs = [[rng.randint(0, 9) for _ in range(T)] for _ in range(n)]
        s = score(xs)
        for _ in range(400):
            if s == 0:
                break
            i, t = rng.randrange(n), rng.randrange(T)
            old = xs[i][t]
            xs[i][t] = rng.randint(0, 9)
            s2 = score(xs)
            if s2 <= s:
                s = s2
            else:
                xs[i][t] = old
        if s == 0:
            print("found after restart", restart, "labels", labels)
            for row in xs:
                print(row)
            print(ects_mpls(xs, labels))
            return
    print("not found")


if __name__ == "__main__":
    main()
