"""Restricted quantum sl_2 at a primitive n-th root of unity, n odd.

States are the simple modules V_0, ..., V_{n-1}; V_{n-1} is the Steinberg
module.  There is no finite group here; the stationary weights use the
projective covers (dimension 2n, or n for the Steinberg module) and the
total sum of dim * pdim, which is n^3.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import UnsupportedFamilyError
from .base import Family, Recipe


class QuantumSL2(Family):
    tag = "quantum"

    @property
    def n(self) -> int:
        return self.param

    def states(self):
        return list(range(self.n))

    def dims(self):
        return [a + 1 for a in range(self.n)]

    def proj_dims(self):
        n = self.n
        return [2 * n] * (n - 1) + [n]

    def group_order(self):
        return None

    def tensor_choices(self):
        return ("natural", "steinberg", "mixed")

    def recipes(self, tensor):
        n = self.n
        v1 = Recipe("V_1", (1,), Fraction(1), self.times_v1)
        st = Recipe("V_{n-1}", (n - 1,), Fraction(1), self.times_steinberg)
        if tensor == "natural":
            return [v1]
        if tensor == "steinberg":
            return [st]
        half = Fraction(1, 2)
        return [Recipe(v1.label, v1.alpha_states, half, v1.rule), Recipe(st.label, st.alpha_states, half, st.rule)]

    def times_v1(self, r: int) -> dict:
        n = self.n
        if r == 0:
            return {1: 1}
        if r == n - 1:
            # V_{n-1} (x) V_1 is the projective cover P_{n-2}: factors V_{n-2}^2, V_0^2
            return {n - 2: 2, 0: 2}
        return {r - 1: 1, r + 1: 1}

    def projective_factors(self, k: int) -> dict:
        """Composition factors of the projective cover P_k, 0 <= k <= n-2."""
        n = self.n
        out = {k: 2}
        out[n - 2 - k] = out.get(n - 2 - k, 0) + 2
        return out

    def times_steinberg(self, r: int) -> dict:
        n = self.n
        if r == 0:
            return {n - 1: 1}
        out: dict = {}
        top = n - 2 if r % 2 == 1 else n - 3
        for k in range(n - 1 - r, top + 1, 2):
            for t, m in self.projective_factors(k).items():
                out[t] = out.get(t, 0) + m
        if r % 2 == 0:
            out[n - 1] = out.get(n - 1, 0) + 1
        return out

    def character_data(self):
        raise UnsupportedFamilyError(
            "the quantum family has no Brauer character table; use tensorwalk.quantum for its spectrum"
        )
