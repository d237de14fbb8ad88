"""Integer Smith normal form for sparse boundary matrices."""

from __future__ import annotations

from collections import defaultdict


def _dense_invariants(rows: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of a small dense integer matrix."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    m, n = len(A), len(A[0])
    out = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the remaining block as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                # divisibility of the remaining block by the pivot
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if A[i][j] % p), None)
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            # a smaller remainder appeared: move it to the pivot slot
            cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            _, i, j = min(cand)
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        out.append(abs(A[t][t]))
        t += 1
    return out


def smith_invariants(rows: list[dict[int, int]]) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix.

    ``rows`` maps column index to entry. Unit pivots are eliminated first
    (each contributes a factor 1 without changing the rest of the Smith
    form); whatever is left goes through the dense algorithm.
    """
    rows = [dict(r) for r in rows if r]
    cols: dict[int, set[int]] = defaultdict(set)
    for i, r in enumerate(rows):
        for c in r:
            cols[c].add(i)
    alive = set(range(len(rows)))
    ones = 0
    queue = list(range(len(rows)))
    while queue:
        i = queue.pop()
        if i not in alive:
            continue
        r = rows[i]
        c = next((c for c, v in r.items() if v in (1, -1)), None)
        if c is None:
            continue
        v = r[c]
        for k in list(cols[c]):
            if k == i:
                continue
            rk = rows[k]
            f = rk[c] * v
            for cc, vv in r.items():
                nv = rk.get(cc, 0) - f * vv
                if nv:
                    if cc not in rk:
                        cols[cc].add(k)
                    rk[cc] = nv
                else:
                    rk.pop(cc, None)
                    cols[cc].discard(k)
            queue.append(k)
        for cc in r:
            cols[cc].discard(i)
        alive.discard(i)
        ones += 1
    rest = [rows[i] for i in sorted(alive) if rows[i]]
    if not rest:
        return [1] * ones
    used = sorted({c for r in rest for c in r})
    pos = {c: j for j, c in enumerate(used)}
    dense = []
    for r in rest:
        row = [0] * len(used)
        for c, v in r.items():
            row[pos[c]] = v
        dense.append(row)
    return [1] * ones + _dense_invariants(dense)
