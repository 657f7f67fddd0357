"""Hamiltonian paths in ladders and hypercubes.

Ladder vertices are ``(level, side)`` with levels ``1..n`` and sides
``"left"``/``"right"``.  Hypercube vertices are bit strings, most significant
coordinate first, so ``"01"`` and ``"00"`` differ in the last coordinate.
"""

from __future__ import annotations

LEFT, RIGHT = "left", "right"


def other_side(side: str) -> str:
    if side == LEFT:
        return RIGHT
    if side == RIGHT:
        return LEFT
    raise ValueError(f"unknown ladder side {side!r}")


def ladder_ham_path(n: int, i: int, side: str, j: int) -> list[tuple[int, str]]:
    """Hamiltonian path of the ladder with ``n`` levels from ``(i, side)`` to level ``j``.

    Walk back to level 1 and return on the other rail, zigzag up to level
    ``j``, then sweep the top part and come back down to level ``j``.  Which
    rail the path ends on is forced by the parity of ``j - i``.
    """
    other_side(side)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"levels must lie in 1..{n}")
    if i == j:
        raise ValueError("start and target levels must differ")
    mirror = j < i
    if mirror:
        i, j = n + 1 - i, n + 1 - j
    a, b = side, other_side(side)
    path = [(lvl, a) for lvl in range(i, 0, -1)] + [(lvl, b) for lvl in range(1, i + 1)]
    cur = b
    for lvl in range(i + 1, j):
        path.append((lvl, cur))
        cur = other_side(cur)
        path.append((lvl, cur))
    path += [(lvl, cur) for lvl in range(j, n + 1)]
    path += [(lvl, other_side(cur)) for lvl in range(n, j - 1, -1)]
    if mirror:
        path = [(n + 1 - lvl, s) for lvl, s in path]
    return path


def ladder_end_side(i: int, side: str, j: int) -> str:
    """Side on which :func:`ladder_ham_path` ends: same as the start iff ``j - i`` is odd."""
    return side if (j - i) % 2 else other_side(side)


def ladder_cycle_from(n: int, i: int, side: str) -> list[tuple[int, str]]:
    """Hamiltonian path from ``(i, side)`` that ends next to its start.

    For ``n >= 2`` this is the outer cycle of the ladder opened at the start;
    for ``n == 1`` it is the single rung.
    """
    if not 1 <= i <= n:
        raise ValueError(f"level {i} outside 1..{n}")
    if n == 1:
        return [(1, side), (1, other_side(side))]
    cyc = [(lvl, side) for lvl in range(1, n + 1)] + \
          [(lvl, other_side(side)) for lvl in range(n, 0, -1)]
    k = cyc.index((i, side))
    return cyc[k:] + cyc[:k]


def ladder_path_to_partner(n: int, i: int, side: str):
    """Hamiltonian path from ``(i, side)`` to ``(i, other side)``, or None.

    Exists exactly when the rung at level ``i`` lies on the outer cycle.
    """
    if n == 1 or i in (1, n):
        cyc = ladder_cycle_from(n, i, side)
        if cyc[-1] == (i, other_side(side)):
            return cyc
        return [cyc[0]] + cyc[1:][::-1]
    return None


def _reflected(d: int) -> list[int]:
    return [k ^ (k >> 1) for k in range(1 << d)]


def _to_int(bits: str, d: int) -> int:
    if len(bits) != d or any(c not in "01" for c in bits):
        raise ValueError(f"{bits!r} is not a {d}-bit string")
    return int(bits, 2) if d else 0


def _to_str(x: int, d: int) -> str:
    return format(x, f"0{d}b") if d else ""


def hypercube_ham_path_from(d: int, start: str) -> list[str]:
    """Reflected Gray code translated so that it starts at ``start``."""
    if d < 0:
        raise ValueError("dimension must be non-negative")
    s = _to_int(start, d)
    return [_to_str(g ^ s, d) for g in _reflected(d)]


def gray_path_from_int(d: int, start: int) -> list[int]:
    return [g ^ start for g in _reflected(d)]


def hypercube_ham_cycle_through_edge(d: int, u: str, v: str) -> list[str]:
    """Hamiltonian cycle of the ``d``-cube whose first edge is ``u v``.

    The reflected Gray code starts with the edge 0 -> 1 in the lowest
    coordinate; swapping that coordinate with the one where ``u`` and ``v``
    differ and translating by ``u`` maps it onto the requested edge.
    """
    if d < 2:
        raise ValueError("edge-Hamiltonicity needs dimension >= 2")
    x, y = _to_int(u, d), _to_int(v, d)
    diff = x ^ y
    if diff == 0 or diff & (diff - 1):
        raise ValueError(f"{u} and {v} are not adjacent")
    k = diff.bit_length() - 1

    def swap(z):
        b0, bk = z & 1, (z >> k) & 1
        z &= ~((1 << k) | 1)
        return z | (b0 << k) | bk

    return [_to_str(swap(g) ^ x, d) for g in _reflected(d)]
