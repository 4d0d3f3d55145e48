"""SL_3(p) for p = 2 (mod 3), tensoring with the natural module (1, 0).

Irreducible Brauer characters are assembled from orbit sums

    s(c, d) = sum over distinct permutations of the exponent vector (c+d, d, 0)

evaluated on the eigenvalue triple of each p-regular class.  Weyl module
characters are expanded in orbit sums with Kostka numbers, so every
character value is an integer combination of sums of roots of unity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import numpy as np

from .._trig import cis_extended
from .base import CharacterData, Family, Recipe


def f(x: int, y: int) -> int:
    return x * y * (x + y) // 2


def orbit_exponents(c: int, d: int) -> list[tuple[int, int, int]]:
    return sorted(set(permutations((c + d, d, 0))))


def kostka(lam: tuple[int, int, int], mu: tuple[int, int, int]) -> int:
    """Number of semistandard tableaux of shape lam and content mu (3 letters)."""
    l1, l2, l3 = lam
    count = 0
    for x1 in range(l2, l1 + 1):
        x2 = mu[0] + mu[1] - x1
        if l3 <= x2 <= l2 and x2 <= mu[0] <= x1:
            count += 1
    return count


@lru_cache(maxsize=None)
def weyl_expansion(a: int, b: int) -> dict:
    """Weyl module of highest weight (a, b) as {(c, d): multiplicity of s(c, d)}."""
    lam = (a + b, b, 0)
    size = a + 2 * b
    out = {}
    for m3 in range(size // 3 + 1):
        for m2 in range(m3, (size - m3) // 2 + 1):
            m1 = size - m2 - m3
            if m1 < m2:
                continue
            k = kostka(lam, (m1, m2, m3))
            if k:
                out[(m1 - m2, m2 - m3)] = k
    return out


def _combine(*terms: tuple[int, dict]) -> dict:
    out: dict = {}
    for sign, d in terms:
        for key, v in d.items():
            out[key] = out.get(key, 0) + sign * v
    return {k: v for k, v in out.items() if v}


class SL3p(Family):
    tag = "sl3p"

    @property
    def p(self) -> int:
        return self.param

    def states(self):
        p = self.p
        return [(a, b) for a in range(p) for b in range(p)]

    # -- characters as orbit-sum expansions ---------------------------------
    def irr_expansion(self, a: int, b: int) -> dict:
        p = self.p
        if 1 <= a <= p - 2 and 1 <= b <= p - 2 and a + b >= p - 1:
            return _combine((1, weyl_expansion(a, b)), (-1, weyl_expansion(p - b - 2, p - a - 2)))
        return dict(weyl_expansion(a, b))

    def proj_factor(self, a: int, b: int) -> dict:
        """p_(a,b) = (this orbit-sum combination) * Steinberg character."""
        p = self.p

        def s(c, d):
            return {(c, d): 1}

        if (a, b) == (p - 1, p - 1):
            return {(0, 0): 1}
        if (a, b) == (p - 1, 0):
            return _combine((1, s(p - 1, 0)), (-1, s(0, 0)))
        if (a, b) == (p - 2, 0):
            return _combine((1, s(p - 1, 1)), (-1, s(0, 1)))
        if (a, b) == (0, 0):
            return _combine(
                (1, s(p - 1, p - 1)), (1, s(1, 1)), (1, s(0, 0)), (-1, s(p - 1, 0)), (-1, s(0, p - 1))
            )
        if b == 0:
            return _combine((1, s(p - 1, p - a - 1)), (1, s(a + 1, 1)), (-1, s(0, p - a - 1)))
        if a == 0:
            # p_(0,b) is the complex conjugate (dual) of p_(b,0)
            return {(d, c): v for (c, d), v in self.proj_factor(b, 0).items()}
        if a + b >= p - 2:
            return s(p - b - 1, p - a - 1)
        return _combine((1, s(p - b - 1, p - a - 1)), (1, s(a + 1, b + 1)))

    @staticmethod
    def _at_identity(expansion: dict) -> int:
        return sum(v * len(orbit_exponents(c, d)) for (c, d), v in expansion.items())

    def dims(self):
        return [self._at_identity(self.irr_expansion(a, b)) for a, b in self.states()]

    def dims_closed_form(self):
        p = self.p
        out = []
        for a, b in self.states():
            if b == 0:
                out.append(f(a + 1, 1))
            elif a == 0:
                out.append(f(b + 1, 1))
            elif a == p - 1:
                out.append(f(b + 1, p))
            elif b == p - 1:
                out.append(f(a + 1, p))
            elif a + b <= p - 2:
                out.append(f(a + 1, b + 1))
            else:
                out.append(f(a + 1, b + 1) - f(p - a - 1, p - b - 1))
        return out

    def proj_dims(self):
        p3 = self.p ** 3
        return [self._at_identity(self.proj_factor(a, b)) * p3 for a, b in self.states()]

    def group_order(self):
        p = self.p
        return p ** 3 * (p ** 3 - 1) * (p * p - 1)

    # -- tensor rule ---------------------------------------------------------
    def tensor_choices(self):
        return ("natural",)

    def recipes(self, tensor):
        return [Recipe("(1,0)", ((1, 0),), Fraction(1), self.times_10)]

    def times_10(self, s) -> dict:
        a, b = s
        p = self.p

        def keep(*keys):
            return {k: 1 for k in keys if min(k) >= 0}

        if (a, b) == (p - 1, 0):
            return {(p - 2, 1): 2, (p - 3, 0): 1, (1, 0): 1}
        if b == 0:
            return keep((a - 1, 1), (a + 1, 0))
        if (a, b) == (0, p - 2):
            return {(1, p - 2): 1, (0, p - 3): 2}
        if (a, b) == (0, p - 1):
            return {(1, p - 1): 1, (0, p - 2): 1}
        if a == 0:
            return keep((1, b), (0, b - 1))
        if (a, b) == (1, p - 1):
            return {(1, p - 2): 2, (2, p - 1): 1, (0, p - 3): 1, (0, 1): 1}
        if (a, b) == (1, p - 2):
            return {(2, p - 2): 1, (0, p - 1): 1}
        if (a, b) == (p - 1, 1):
            return {(p - 2, 2): 2, (p - 1, 0): 1, (p - 4, 0): 1, (1, 1): 1, (0, 0): 1}
        if (a, b) == (p - 2, 1):
            return {(p - 3, 2): 1, (p - 1, 1): 1}
        if (a, b) == (p - 1, p - 2):
            return {(p - 2, p - 1): 2, (0, p - 3): 2, (p - 1, p - 3): 1, (1, p - 2): 1}
        if (a, b) == (p - 1, p - 1):
            return {(p - 1, p - 2): 3, (p - 2, 1): 2, (1, p - 1): 1, (p - 3, 0): 4, (0, p - 2): 1}
        if a == p - 1:
            return {(p - 2, b + 1): 2, (p - 1, b - 1): 1, (p - 3 - b, 0): 1, (1, b): 1, (0, b - 1): 1}
        if b == p - 1:
            return {(a, p - 2): 2, (a + 1, p - 1): 1, (a - 1, 1): 1, (a - 2, 0): 1, (0, p - a - 2): 1}
        if a + b == p - 2:
            return {(a - 1, b + 1): 1, (a + 1, b): 1, (a, b - 1): 2}
        if a + b == p - 1:
            # On this wall the (a, b-1) factor is absent.
            return {(a - 1, b + 1): 1, (a + 1, b): 1}
        return {(a - 1, b + 1): 1, (a + 1, b): 1, (a, b - 1): 1}

    # -- class data ----------------------------------------------------------
    def classes(self):
        """List of (label, modulus, exponent triple, centralizer order)."""
        return _sl3_classes(self.p)

    def character_data(self):
        return _sl3_character_data(self.p)


@lru_cache(maxsize=None)
def _sl3_classes(p: int) -> tuple:
    n1, n2, n3 = p * p + p + 1, p * p - 1, p - 1
    G = p ** 3 * (p ** 3 - 1) * (p * p - 1)
    out = [("1", 1, (0, 0, 0), G)]
    seen: set = set()
    for r in range(1, n1):
        if r in seen:
            continue
        seen |= {r, p * r % n1, p * p * r % n1}
        out.append((f"x^{r}", n1, (r, p * r % n1, p * p * r % n1), n1))
    seen = set()
    for s in range(1, n2):
        if s % (p + 1) == 0 or s in seen:
            continue
        seen |= {s, p * s % n2}
        out.append((f"y^{s}", n2, (s, p * s % n2, -(p + 1) * s % n2), n2))
    for k in range(1, p - 1):
        out.append((f"z_{k},{k}", n3, (k, k, -2 * k % n3), p * (p * p - 1) * (p - 1)))
    seen = set()
    for l in range(n3):
        for m in range(l + 1, n3):
            t = (l, m, (-l - m) % n3)
            if len(set(t)) < 3:
                continue
            key = tuple(sorted(t))
            if key in seen:
                continue
            seen.add(key)
            out.append((f"z_{key[0]},{key[1]}", n3, key, (p - 1) ** 2))
    return tuple(out)


def _orbit_table(classes, keys) -> dict:
    """Orbit sums on every class, as (real, imag) long-double arrays."""
    mods = np.array([c[1] for c in classes], dtype=np.int64)
    E = np.array([c[2] for c in classes], dtype=np.int64)
    table = {}
    for c, d in keys:
        perms = np.array(orbit_exponents(c, d), dtype=np.int64)
        re, im = cis_extended(perms @ E.T, mods[None, :])
        table[(c, d)] = (re.sum(axis=0), im.sum(axis=0))
    return table


def _expand(expansions: list[dict], table: dict, k: int) -> tuple[np.ndarray, np.ndarray]:
    re = np.zeros((len(expansions), k), dtype=np.longdouble)
    im = np.zeros((len(expansions), k), dtype=np.longdouble)
    for i, e in enumerate(expansions):
        for key, v in e.items():
            tr, ti = table[key]
            re[i] += v * tr
            im[i] += v * ti
    return re, im


@lru_cache(maxsize=None)
def _sl3_character_data(p: int) -> CharacterData:
    fam = SL3p(p)
    classes = _sl3_classes(p)
    irr = [fam.irr_expansion(a, b) for a, b in fam.states()]
    proj = [fam.proj_factor(a, b) for a, b in fam.states()]
    keys = set()
    for e in irr + proj:
        keys |= set(e)
    table = _orbit_table(classes, sorted(keys))
    k = len(classes)
    xr, xi = _expand(irr, table, k)
    i_st = fam.state_index[(p - 1, p - 1)]
    sr, si = xr[i_st], xi[i_st]
    qr, qi = _expand(proj, table, k)
    X = (xr + 1j * xi).astype(complex)
    P = (qr * sr - qi * si + 1j * (qr * si + qi * sr)).astype(complex)
    G = fam.group_order()
    cent = tuple(c[3] for c in classes)
    sizes = tuple(G // c for c in cent)
    return CharacterData(tuple(c[0] for c in classes), sizes, cent, X, P, G)
