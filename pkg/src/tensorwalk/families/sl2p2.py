"""SL_2(p^2): restricted modules (a, b) = V(a) (x) V(b)^{Frobenius}."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .._trig import cos2pi
from .base import CharacterData, Family, Recipe
from .sl2p import sl2_char


class SL2pSquared(Family):
    tag = "sl2p2"

    @property
    def p(self) -> int:
        return self.param

    @property
    def q(self) -> int:
        return self.param ** 2

    def states(self):
        p = self.p
        return [(a, b) for a in range(p) for b in range(p)]

    def dims(self):
        return [(a + 1) * (b + 1) for a, b in self.states()]

    def proj_dims(self):
        p, q = self.p, self.q
        out = []
        for a, b in self.states():
            if (a, b) == (p - 1, p - 1):
                out.append(q)
            elif (a, b) == (0, 0):
                out.append(3 * q)
            elif a == p - 1 or b == p - 1:
                out.append(2 * q)
            else:
                out.append(4 * q)
        return out

    def group_order(self):
        q = self.q
        return q * (q * q - 1)

    def tensor_choices(self):
        return ("natural", "v11", "mixed")

    def recipes(self, tensor):
        r10 = Recipe("(1,0)", ((1, 0),), Fraction(1), self.times_10)
        r11 = Recipe("(1,1)", ((1, 1),), Fraction(1), self.times_11)
        if tensor == "natural":
            return [r10]
        if tensor == "v11":
            return [r11]
        half = Fraction(1, 2)
        return [
            Recipe(r11.label, r11.alpha_states, half, r11.rule),
            Recipe(r10.label, r10.alpha_states, half, r10.rule),
        ]

    def times_10(self, s) -> dict:
        a, b = s
        p = self.p
        if a == 0:
            return {(1, b): 1}
        if a < p - 1:
            return {(a - 1, b): 1, (a + 1, b): 1}
        if b < p - 1:
            out = {(p - 2, b): 2, (0, b + 1): 1}
            if b > 0:
                out[(0, b - 1)] = 1
            return out
        return {(p - 2, p - 1): 2, (0, p - 2): 2, (1, 0): 1}

    def times_01(self, s) -> dict:
        a, b = s
        return {(y, x): m for (x, y), m in self.times_10((b, a)).items()}

    def times_11(self, s) -> dict:
        # (1,1) = (1,0) (x) (0,1); the two tensorings commute.
        out: dict = {}
        for t, m in self.times_10(s).items():
            for u, m2 in self.times_01(t).items():
                out[u] = out.get(u, 0) + m * m2
        return out

    def character_data(self):
        p, q = self.p, self.q
        G = self.group_order()
        rs = np.arange(1, (q - 3) // 2 + 1)
        ss = np.arange(1, (q - 1) // 2 + 1)
        class_ids = ("1", "-1") + tuple(f"x^{r}" for r in rs) + tuple(f"y^{s}" for s in ss)
        cent = (G, G) + (q - 1,) * len(rs) + (q + 1,) * len(ss)
        sizes = tuple(G // c for c in cent)
        k = len(class_ids)
        X = np.zeros((q, k), dtype=complex)
        P = np.zeros((q, k), dtype=complex)
        st_vals = np.r_[q, q, np.ones(len(rs)), -np.ones(len(ss))]
        for i, (a, b) in enumerate(self.states()):
            X[i] = np.r_[
                (a + 1) * (b + 1),
                (-1) ** (a + b) * (a + 1) * (b + 1),
                sl2_char(a, rs, q - 1) * sl2_char(b, p * rs, q - 1),
                sl2_char(a, ss, q + 1) * sl2_char(b, p * ss, q + 1),
            ]
            if (a, b) == (p - 1, p - 1):
                P[i] = st_vals
            elif a < p - 1 and b < p - 1:
                v = np.r_[
                    4 * q,
                    (-1) ** (a + b) * 4 * q,
                    4 * cos2pi((p - 1 - a) * rs, q - 1) * cos2pi((p * (b + 1) - 1) * rs, q - 1),
                    -4 * cos2pi((p - 1 - a) * ss, q + 1) * cos2pi((p * (b + 1) + 1) * ss, q + 1),
                ]
                P[i] = v - st_vals if (a, b) == (0, 0) else v
            elif a == p - 1:
                P[i] = np.r_[
                    2 * q,
                    (-1) ** b * 2 * q,
                    2 * cos2pi((p * (b + 1) - 1) * rs, q - 1),
                    -2 * cos2pi((p * (b + 1) + 1) * ss, q + 1),
                ]
            else:
                P[i] = np.r_[
                    2 * q,
                    (-1) ** a * 2 * q,
                    2 * cos2pi((p - 1 - a) * rs, q - 1),
                    -2 * cos2pi((p - 1 - a) * ss, q + 1),
                ]
        return CharacterData(class_ids, sizes, cent, X, P, G)
