"""Binary dihedral groups BD_n of order 4n, tensoring with the faithful chi_1."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .._trig import cos2pi
from .base import CharacterData, Family, Recipe


class BinaryDihedral(Family):
    tag = "bdn"

    @property
    def n(self) -> int:
        return self.param

    def states(self):
        return ["lambda1", "lambda2", "lambda3", "lambda4"] + [f"chi{r}" for r in range(1, self.n)]

    def dims(self):
        return [1, 1, 1, 1] + [2] * (self.n - 1)

    def proj_dims(self):
        # Ordinary characters: the projective cover is the module itself.
        return self.dims()

    def group_order(self):
        return 4 * self.n

    def tensor_choices(self):
        return ("natural",)

    def recipes(self, tensor):
        return [Recipe("chi1", ("chi1",), Fraction(1), self.times_chi1)]

    def times_chi1(self, s) -> dict:
        n = self.n
        last = f"chi{n - 1}"
        if s in ("lambda1", "lambda2"):
            return {"chi1": 1}
        if s in ("lambda3", "lambda4"):
            return {last: 1}
        r = int(s[3:])
        if n == 2:
            # chi1 is also chi_{n-1}: both end rules apply at once.
            return {"lambda1": 1, "lambda2": 1, "lambda3": 1, "lambda4": 1}
        if r == 1:
            return {"chi2": 1, "lambda1": 1, "lambda2": 1}
        if r == n - 1:
            return {f"chi{n - 2}": 1, "lambda3": 1, "lambda4": 1}
        return {f"chi{r - 1}": 1, f"chi{r + 1}": 1}

    def character_data(self):
        n = self.n
        js = np.arange(1, n)
        class_ids = ("1", "x^2") + tuple(f"a^{j}" for j in js) + ("x", "xa")
        cent = (4 * n, 4 * n) + (2 * n,) * (n - 1) + (4, 4)
        sizes = tuple(4 * n // c for c in cent)
        k = len(class_ids)
        X = np.zeros((n + 3, k), dtype=complex)
        sign = (-1.0) ** js
        X[0] = 1
        X[1] = [1, 1] + [1] * (n - 1) + [-1, -1]
        if n % 2 == 0:
            X[2] = np.r_[1, 1, sign, 1, -1]
            X[3] = np.r_[1, 1, sign, -1, 1]
        else:
            X[2] = np.r_[1, -1, sign, 1j, -1j]
            X[3] = np.r_[1, -1, sign, -1j, 1j]
        for r in range(1, n):
            # 2 cos(pi j r / n) = 2 cos(2 pi j r / 2n)
            X[3 + r] = np.r_[2, 2 * (-1) ** r, 2 * cos2pi(js * r, 2 * n), 0, 0]
        return CharacterData(class_ids, sizes, cent, X, X.copy(), 4 * n)
