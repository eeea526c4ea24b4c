"""Stirling numbers of both kinds, used to convert between norm and star-count bases."""

from __future__ import annotations


class StirlingTable:
    """Triangular tables of Stirling numbers up to a fixed row.

    ``first_kind(p, i)`` returns the signed Stirling number of the first kind
    s(p, i), satisfying s(p, i) = s(p-1, i-1) - (p-1) * s(p-1, i).
    ``second_kind(p, i)`` returns S(p, i), satisfying
    S(p, i) = S(p-1, i-1) + i * S(p-1, i).  Both use s(0, 0) = S(0, 0) = 1.
    """

    __slots__ = ("max_p", "_first", "_second")

    def __init__(self, max_p: int) -> None:
        if max_p < 0:
            raise ValueError(f"max_p must be nonnegative, got {max_p}")
        self.max_p = max_p
        first = [[1]]
        second = [[1]]
        for p in range(1, max_p + 1):
            prev_f = first[p - 1]
            prev_s = second[p - 1]
            row_f = [0] * (p + 1)
            row_s = [0] * (p + 1)
            for i in range(1, p + 1):
                above_f = prev_f[i] if i < p else 0
                above_s = prev_s[i] if i < p else 0
                row_f[i] = prev_f[i - 1] - (p - 1) * above_f
                row_s[i] = prev_s[i - 1] + i * above_s
            first.append(row_f)
            second.append(row_s)
        self._first = first
        self._second = second

    def _check(self, p: int, i: int) -> None:
        if not 0 <= p <= self.max_p:
            raise ValueError(f"row {p} outside table (max_p={self.max_p})")
        if not 0 <= i <= p:
            raise ValueError(f"index {i} outside row {p}")

    def first_kind(self, p: int, i: int) -> int:
        self._check(p, i)
        return self._first[p][i]

    def second_kind(self, p: int, i: int) -> int:
        self._check(p, i)
        return self._second[p][i]
