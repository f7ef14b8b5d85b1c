"""Canonical labeling by individualization and refinement.

Every graph flavor is reduced to a relation matrix: ``rel[i][j]`` is a small
integer describing how vertex ``i`` relates to vertex ``j``, plus an integer
label per vertex.  The canonical certificate is the lexicographically smallest
``(labels, upper triangle of rel)`` over all orderings reachable by the
search tree.  Relations must satisfy ``rel[j][i] == mirror(rel[i][j])`` for a
fixed involution ``mirror``; symmetric codes are those with
``rel[i][j] == rel[j][i]``.
"""

from __future__ import annotations

from typing import Sequence

Matrix = Sequence[Sequence[int]]


def _refine(n: int, rel: Matrix, colors: list[int]) -> list[int]:
    """Iterate neighbourhood refinement until the number of colors is stable.

    Colors are re-ranked from sorted signatures, so the result does not
    depend on vertex names.
    """
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            row = rel[v]
            sigs.append(
                (
                    colors[v],
                    tuple(sorted((row[u], colors[u]) for u in range(n) if u != v and row[u])),
                )
            )
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return new
        colors = new
        ncolors = len(ranking)


def _twins(rel: Matrix, labels: Sequence[int], n: int, u: int, w: int) -> bool:
    if labels[u] != labels[w] or rel[u][w] != rel[w][u]:
        return False
    ru, rw = rel[u], rel[w]
    for x in range(n):
        if x == u or x == w:
            continue
        if ru[x] != rw[x] or rel[x][u] != rel[x][w]:
            return False
    return True


def _certificate(n: int, rel: Matrix, labels: Sequence[int], order: list[int]) -> tuple:
    head = tuple(labels[v] for v in order)
    body = tuple(rel[order[i]][order[j]] for j in range(n) for i in range(j))
    return head + body


def canonical_order(n: int, rel: Matrix, labels: Sequence[int] | None = None) -> tuple[list[int], tuple]:
    """Return ``(order, certificate)`` where ``order[k]`` is the vertex placed at
    position ``k`` in the canonical labeling."""
    if labels is None:
        labels = [0] * n
    if n == 0:
        return [], ()
    base = sorted(set(labels))
    colors = [base.index(c) for c in labels]
    colors = _refine(n, rel, colors)

    best: list = [None, None]

    def search(colors: list[int]) -> None:
        if len(set(colors)) == n:
            order = sorted(range(n), key=colors.__getitem__)
            cert = _certificate(n, rel, labels, order)
            if best[1] is None or cert < best[1]:
                best[0], best[1] = order, cert
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        reps: list[int] = []
        for v in cell:
            if any(_twins(rel, labels, n, v, r) for r in reps):
                continue
            reps.append(v)
        for v in reps:
            split = [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]
            search(_refine(n, rel, split))

    search(colors)
    return best[0], best[1]
