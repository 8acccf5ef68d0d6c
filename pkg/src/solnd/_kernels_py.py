"""Pure-Python reference implementation of the Henkin kernels.

Models over ``{T/1, B/1, K/2}`` on ``range(n)`` are passed as masks: bit
``e`` of ``T``/``B`` is element ``e``; bit ``a*n+b`` of ``K`` is ``(a, b)``.
Functions ``D -> D`` are numbered in base ``n`` (digit ``x`` is ``f(x)``);
binary relations use the same layout as ``K``.
"""

from __future__ import annotations

import itertools

IMPLEMENTATION = "python"


def _rows(n: int, R: int) -> list[int]:
    m = (1 << n) - 1
    return [(R >> (a * n)) & m for a in range(n)]


def _members(n: int, S: int) -> list[int]:
    return [e for e in range(n) if (S >> e) & 1]


def henkin_functions(n: int, T: int, B: int, K: int) -> bool:
    """Some pair of total functions f, g with ``K(f(x), g(y))`` for all x in T, y in B."""
    krow = _rows(n, K)
    ts, bs = _members(n, T), _members(n, B)
    funcs = list(itertools.product(range(n), repeat=n))
    for f in funcs:
        cols = (1 << n) - 1
        for x in ts:
            cols &= krow[f[x]]
        for g in funcs:
            if all((cols >> g[y]) & 1 for y in bs):
                return True
    return False


def _left_total_images(n: int, S: int) -> list[int]:
    """Images of the relations left-total on ``S``, one per relation."""
    out = []
    members = _members(n, S)
    for R in range(1 << (n * n)):
        rows = _rows(n, R)
        if all(rows[x] for x in members):
            img = 0
            for x in members:
                img |= rows[x]
            out.append(img)
    return out


def henkin_relations(n: int, T: int, B: int, K: int) -> bool:
    """Some F left-total on T and G left-total on B with ``F[T] x G[B]`` inside K."""
    krow = _rows(n, K)
    g_images = set(_left_total_images(n, B))
    for img_f in _left_total_images(n, T):
        cols = (1 << n) - 1
        for xp in range(n):
            if (img_f >> xp) & 1:
                cols &= krow[xp]
        for img_g in g_images:
            if img_g & ~cols == 0:
                return True
    return False


def linear_first(n: int, T: int, B: int, K: int) -> bool:
    """forall x exists x' forall y exists y' (T(x) & B(y) -> K(x',y'))"""
    krow = _rows(n, K)
    return all(
        any(all(not ((T >> x) & 1 and (B >> y) & 1) or krow[xp] for y in range(n)) for xp in range(n))
        for x in range(n)
    )


def linear_second(n: int, T: int, B: int, K: int) -> bool:
    """forall y exists y' forall x exists x' (T(x) & B(y) -> K(x',y'))"""
    return all(
        any(
            all(not ((T >> x) & 1 and (B >> y) & 1) or any((K >> (xp * n + yp)) & 1 for xp in range(n)) for x in range(n))
            for yp in range(n)
        )
        for y in range(n)
    )


def separator_search(min_size: int, max_size: int):
    """First ``(n, T, B, K)`` where both linear readings hold and the branching one fails."""
    for n in range(min_size, max_size + 1):
        for T in range(1 << n):
            for B in range(1 << n):
                for K in range(1 << (n * n)):
                    if linear_first(n, T, B, K) and linear_second(n, T, B, K) and not henkin_functions(n, T, B, K):
                        return (n, T, B, K)
    return None


def henkin_table(n: int, mode: str) -> bytes:
    """Truth values over all ``(T, B, K)`` at size ``n``, index ``(T << n | B) << n*n | K``."""
    fn = henkin_functions if mode == "functions" else henkin_relations
    out = bytearray(1 << (2 * n + n * n))
    i = 0
    for T in range(1 << n):
        for B in range(1 << n):
            for K in range(1 << (n * n)):
                out[i] = fn(n, T, B, K)
                i += 1
    return bytes(out)
