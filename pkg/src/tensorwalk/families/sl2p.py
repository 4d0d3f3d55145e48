"""SL_2(p) in defining characteristic: restricted modules V(a), 0 <= a <= p-1."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .._trig import cos2pi
from .base import CharacterData, Family, Recipe


def sl2_char(a: int, k, m) -> np.ndarray:
    """Character of the a-th symmetric power at eigenvalue exp(2 pi i k/m).

    sum_{i=0}^{a} cos((a - 2i) * 2 pi k / m), with exponents reduced mod m.
    """
    k = np.asarray(k, dtype=np.int64)
    out = np.zeros(k.shape, dtype=float)
    for i in range(a + 1):
        out += cos2pi((a - 2 * i) * k, m)
    return out


class SL2p(Family):
    tag = "sl2p"

    @property
    def p(self) -> int:
        return self.param

    def states(self):
        return list(range(self.p))

    def dims(self):
        return [a + 1 for a in range(self.p)]

    def proj_dims(self):
        p = self.p
        return [p if a in (0, p - 1) else 2 * p for a in range(p)]

    def group_order(self):
        p = self.p
        return p * (p * p - 1)

    def tensor_choices(self):
        return ("natural", "steinberg", "sum", "mixed")

    def recipes(self, tensor):
        p = self.p
        nat = Recipe("V(1)", (1,), Fraction(1), self.times_natural)
        st = Recipe("V(p-1)", (p - 1,), Fraction(1), self.times_steinberg)
        if tensor == "natural":
            return [nat]
        if tensor == "steinberg":
            return [st]
        if tensor == "sum":
            return [Recipe("V(1)+V(p-1)", (1, p - 1), Fraction(1), self.times_sum)]
        half = Fraction(1, 2)
        return [
            Recipe(nat.label, nat.alpha_states, half, nat.rule),
            Recipe(st.label, st.alpha_states, half, st.rule),
        ]

    def times_natural(self, a: int) -> dict:
        p = self.p
        if a == 0:
            return {1: 1}
        if a == p - 1:
            return {p - 2: 2, 1: 1}
        return {a - 1: 1, a + 1: 1}

    def times_steinberg(self, a: int) -> dict:
        p = self.p
        out: dict = {}

        def add(t, m):
            out[t] = out.get(t, 0) + m

        if a == 0:
            add(p - 1, 1)
        elif a % 2 == 1:
            for t in range(p - 2, p - a - 2, -2):
                add(t, 2)
            add(a, 1)
            for t in range(a - 2, 0, -2):
                add(t, 2)
        else:
            add(p - 1, 1)
            for t in range(p - 3, p - a - 2, -2):
                add(t, 2)
            add(a, 1)
            for t in range(a - 2, 1, -2):
                add(t, 2)
            add(0, 1)
        return out

    def times_sum(self, a: int) -> dict:
        out = dict(self.times_natural(a))
        for t, m in self.times_steinberg(a).items():
            out[t] = out.get(t, 0) + m
        return out

    def character_data(self):
        p = self.p
        G = self.group_order()
        rs = np.arange(1, (p - 3) // 2 + 1)
        ss = np.arange(1, (p - 1) // 2 + 1)
        class_ids = ("1", "-1") + tuple(f"x^{r}" for r in rs) + tuple(f"y^{s}" for s in ss)
        cent = (G, G) + (p - 1,) * len(rs) + (p + 1,) * len(ss)
        sizes = tuple(G // c for c in cent)
        X = np.zeros((p, p), dtype=complex)
        P = np.zeros((p, p), dtype=complex)
        for a in range(p):
            X[a] = np.r_[a + 1, (-1) ** a * (a + 1), sl2_char(a, rs, p - 1), sl2_char(a, ss, p + 1)]
            if a == 0:
                P[a] = np.r_[p, p, np.ones(len(rs)), 1 - 2 * cos2pi(2 * ss, p + 1)]
            elif a == p - 1:
                P[a] = np.r_[p, p, np.ones(len(rs)), -np.ones(len(ss))]
            else:
                P[a] = np.r_[
                    2 * p,
                    (-1) ** a * 2 * p,
                    2 * cos2pi(a * rs, p - 1),
                    -2 * cos2pi((a + 2) * ss, p + 1),
                ]
        return CharacterData(class_ids, sizes, cent, X, P, G)
