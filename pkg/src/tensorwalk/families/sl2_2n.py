"""SL_2(2^n): irreducibles are indexed by subsets I of {1..n}.

A subset is stored as the bit tuple (b_1, ..., b_n) and ordered by the
integer sum b_i 2^(i-1), so coordinate 1 is the least significant bit.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from .._trig import cos2pi
from .base import CharacterData, Family, Recipe


def euler_phi(k: int) -> int:
    return sum(1 for i in range(1, k + 1) if gcd(i, k) == 1)


def necklace_count(n: int) -> int:
    """Number of rotation orbits of binary n-strings: (1/n) sum_{d|n} phi(d) 2^(n/d)."""
    total = sum(euler_phi(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


class SL2TwoN(Family):
    tag = "sl2_2n"

    @property
    def n(self) -> int:
        return self.param

    @property
    def q(self) -> int:
        return 2 ** self.param

    def to_int(self, s) -> int:
        return sum(bit << i for i, bit in enumerate(s))

    def to_bits(self, x: int) -> tuple:
        return tuple((x >> i) & 1 for i in range(self.n))

    def states(self):
        return [self.to_bits(x) for x in range(self.q)]

    def dims(self):
        return [2 ** sum(s) for s in self.states()]

    def proj_dims(self):
        q, n = self.q, self.n
        return [q * q - q if sum(s) == 0 else 2 ** (2 * n - sum(s)) for s in self.states()]

    def group_order(self):
        q = self.q
        return q * (q * q - 1)

    def tensor_choices(self):
        return ("natural",) + tuple(f"v{j}" for j in range(1, self.n + 1)) + ("uniform",)

    def recipes(self, tensor):
        n = self.n
        if tensor == "natural":
            tensor = "v1"
        if tensor == "uniform":
            w = Fraction(1, n)
            return [Recipe(f"V_{j}", (self._vj_state(j),), w, self._vj_rule(j)) for j in range(1, n + 1)]
        j = int(tensor[1:])
        return [Recipe(f"V_{j}", (self._vj_state(j),), Fraction(1), self._vj_rule(j))]

    def _vj_state(self, j: int) -> tuple:
        return self.to_bits(1 << (j - 1))

    def _rot(self, x: int, k: int) -> int:
        """Rotate the n-bit word x by k places towards higher coordinates."""
        n = self.n
        k %= n
        mask = (1 << n) - 1
        return ((x << k) | (x >> (n - k))) & mask

    def times_v1_int(self, x: int) -> dict:
        n, q = self.n, self.q
        if x == 0:
            return {1: 1}
        out: dict = {}
        if x == q - 1:
            for k in range(1, n + 1):
                out[x >> k << k] = 2
            out[1] = out.get(1, 0) + 1
            return out
        i = 0
        while (x >> i) & 1:
            i += 1
        for k in range(1, i + 1):
            out[x >> k << k] = 2
        y = (x >> i << i) | (1 << i)
        out[y] = out.get(y, 0) + 1
        return out

    def _vj_rule(self, j: int):
        # V_j is the Frobenius twist of V_1 by j-1 places.
        def rule(s) -> dict:
            x = self._rot(self.to_int(s), -(j - 1))
            return {self.to_bits(self._rot(y, j - 1)): m for y, m in self.times_v1_int(x).items()}

        return rule

    def character_data(self):
        n, q = self.n, self.q
        G = self.group_order()
        rs = np.arange(1, q // 2)
        ss = np.arange(1, q // 2 + 1)
        class_ids = ("1",) + tuple(f"x^{r}" for r in rs) + tuple(f"y^{s}" for s in ss)
        cent = (G,) + (q - 1,) * len(rs) + (q + 1,) * len(ss)
        sizes = tuple(G // c for c in cent)
        k = len(class_ids)
        # factor_i(c) = character of the i-th Frobenius twist of the natural module
        factors = np.zeros((n, k))
        for i in range(n):
            factors[i] = np.r_[2.0, 2 * cos2pi((1 << i) * rs, q - 1), 2 * cos2pi((1 << i) * ss, q + 1)]
        X = np.ones((q, k))
        for x in range(1, q):
            low = (x & -x).bit_length() - 1
            X[x] = X[x & (x - 1)] * factors[low]
        st = X[q - 1]
        P = np.zeros((q, k))
        P[0] = np.r_[q * q - q, np.zeros(len(rs)), 2 * np.ones(len(ss))]
        for x in range(1, q):
            P[x] = X[(q - 1) ^ x] * st
        return CharacterData(class_ids, sizes, cent, X.astype(complex), P.astype(complex), G)
