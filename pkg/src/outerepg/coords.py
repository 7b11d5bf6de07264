"""Symbolic grid lines that can be inserted between existing ones.

The builders never pick integer coordinates directly. They ask for a new line
immediately after or before a known one, and integer positions are handed out
once the drawing is finished. Insertion is O(1) and the final numbering O(k).
"""

from __future__ import annotations


class Axis:
    def __init__(self):
        # 0 and 1 are sentinels bounding everything else
        self._next = {0: 1, 1: None}
        self._prev = {0: None, 1: 0}
        self._count = 2

    @property
    def low(self) -> int:
        return 0

    @property
    def high(self) -> int:
        return 1

    def after(self, t: int) -> int:
        if t == 1:
            raise ValueError("nothing fits after the upper sentinel")
        new = self._count
        self._count += 1
        nxt = self._next[t]
        self._next[t] = new
        self._prev[new] = t
        self._next[new] = nxt
        self._prev[nxt] = new
        return new

    def before(self, t: int) -> int:
        if t == 0:
            raise ValueError("nothing fits before the lower sentinel")
        return self.after(self._prev[t])

    def run_after(self, t: int, k: int) -> list:
        """k fresh lines in increasing order, all just after t."""
        out = []
        for _ in range(k):
            t = self.after(t)
            out.append(t)
        return out

    def ranks(self) -> dict:
        out = {}
        t, i = self._next[0], 0
        while t != 1:
            out[t] = i
            i += 1
            t = self._next[t]
        return out

    def less(self, a: int, b: int) -> bool:
        """Order test by walking; only meant for assertions in tests."""
        t = a
        while t is not None:
            if t == b:
                return a != b
            t = self._next[t]
        return False


def realize(paths: dict, xaxis: Axis, yaxis: Axis) -> dict:
    """Turn symbolic corner lists into integer point lists."""
    rx, ry = xaxis.ranks(), yaxis.ranks()
    return {v: [(rx[x], ry[y]) for x, y in pts] for v, pts in paths.items()}
