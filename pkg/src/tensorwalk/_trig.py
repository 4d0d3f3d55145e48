"""Roots of unity with the exponent reduced before scaling.

Computing ``exp(2j*pi/m) ** k`` accumulates error in ``k``; reducing ``k``
modulo ``m`` first keeps every value within a couple of ulps.
"""

from __future__ import annotations

import numpy as np


def _angle(k, m):
    k = np.asarray(k, dtype=np.int64)
    m = np.asarray(m, dtype=np.int64)
    return 2.0 * np.pi * (np.mod(k, m) / m)


def cis(k, m):
    """exp(2 pi i k / m), elementwise."""
    t = _angle(k, m)
    return np.cos(t) + 1j * np.sin(t)


def cos2pi(k, m):
    """cos(2 pi k / m), elementwise."""
    return np.cos(_angle(k, m))


def sin2pi(k, m):
    """sin(2 pi k / m), elementwise."""
    return np.sin(_angle(k, m))


_PI_LD = np.arccos(np.longdouble(-1))


def cis_extended(k, m):
    """exp(2 pi i k / m) as a (real, imag) pair of long-double arrays."""
    k = np.asarray(k, dtype=np.int64)
    m = np.asarray(m, dtype=np.int64)
    t = 2 * _PI_LD * (np.mod(k, m).astype(np.longdouble) / m.astype(np.longdouble))
    return np.cos(t), np.sin(t)
