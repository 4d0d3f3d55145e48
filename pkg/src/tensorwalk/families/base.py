"""Core data types for the family catalog."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Hashable, Sequence

import numpy as np

from ..errors import ParameterError

FAMILY_TAGS = ("bdn", "sl2p", "sl2p2", "sl2_2n", "sl3p", "quantum")

# The parameter name each family takes.
PARAM_NAME = {
    "bdn": "n",
    "sl2p": "p",
    "sl2p2": "p",
    "sl2_2n": "n",
    "sl3p": "p",
    "quantum": "n",
}


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    f = 3
    while f * f <= k:
        if k % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FamilyId:
    """A family tag together with its single integer parameter."""

    tag: str
    param: int

    def __post_init__(self):
        tag, v = self.tag, self.param
        if tag not in FAMILY_TAGS:
            raise ParameterError(f"unknown family {tag!r}; expected one of {FAMILY_TAGS}")
        if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
            raise ParameterError(f"{PARAM_NAME[tag]} must be an integer")
        if tag in ("sl2p", "sl2p2"):
            if not (is_prime(v) and v >= 5):
                raise ParameterError(f"{tag}: p must be an odd prime >= 5 (got p={v})")
        elif tag == "sl3p":
            if not is_prime(v):
                raise ParameterError(f"sl3p: p must be prime (got p={v})")
            if v % 3 != 2:
                raise ParameterError(f"sl3p: p must be congruent to 2 mod 3 (got p={v}, p mod 3 = {v % 3})")
            if v < 5:
                raise ParameterError(f"sl3p: p must be >= 5 (got p={v})")
        elif tag == "quantum":
            if v < 3 or v % 2 == 0:
                raise ParameterError(f"quantum: n must be odd and >= 3 (got n={v})")
        elif v < 2:
            raise ParameterError(f"{tag}: n must be >= 2 (got n={v})")

    @property
    def params(self) -> dict:
        return {PARAM_NAME[self.tag]: int(self.param)}


@dataclass(frozen=True)
class Component:
    """One tensoring module of a (possibly mixed) chain.

    ``decomp[i]`` lists ``(j, mult)`` pairs: state ``j`` occurs ``mult``
    times as a composition factor of ``state_i (x) alpha``.
    """

    label: str
    alpha_states: tuple  # alpha is the sum of these irreducibles
    alpha_dim: int
    weight: Fraction
    decomp: tuple


@dataclass(frozen=True, eq=False)
class ChainSpec:
    """A family instance with a chosen tensoring (or mixture of tensorings)."""

    family: FamilyId
    tensor: str
    states: tuple
    dims: tuple
    proj_dims: tuple
    group_order: int | None
    components: tuple
    # Sum of dims * proj_dims; equals the group order for group families.
    plancherel_total: int = 0
    _index: dict = field(default_factory=dict, repr=False)

    def index(self, state: Hashable) -> int:
        try:
            return self._index[state]
        except KeyError:
            raise KeyError(f"unknown state {state!r} for {self.family.tag}") from None

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def is_mixture(self) -> bool:
        return len(self.components) > 1

    @property
    def alpha_dim(self) -> int:
        # Mixtures report their first component here; see ``components``.
        return self.components[0].alpha_dim

    @property
    def decomp(self) -> tuple:
        return self.components[0].decomp

    @property
    def alpha_states(self) -> tuple:
        return self.components[0].alpha_states


@dataclass(frozen=True, eq=False)
class CharacterData:
    """Brauer (or ordinary) character table restricted to p-regular classes."""

    class_ids: tuple
    class_sizes: tuple
    centralizer_orders: tuple
    irr_values: np.ndarray  # states x classes
    proj_values: np.ndarray  # states x classes
    group_order: int

    @property
    def n_classes(self) -> int:
        return len(self.class_ids)

    def row_orthogonality(self) -> np.ndarray:
        """(1/|G|) sum_c |c^G| p_chi(c) conj(rho(c)); should be the identity."""
        w = np.array([s / self.group_order for s in self.class_sizes])
        return (self.proj_values * w) @ np.conj(self.irr_values).T

    def column_orthogonality(self) -> np.ndarray:
        """sum_chi p_chi(g) conj(chi(c)) / |C(c)|; should be the identity."""
        c = np.array(self.centralizer_orders, dtype=float)
        return (self.proj_values.T @ np.conj(self.irr_values)) / c[:, None]

    def decompose(self, values: np.ndarray) -> np.ndarray:
        """Multiplicities of each irreducible in a Brauer character."""
        w = np.array([s / self.group_order for s in self.class_sizes])
        return (self.proj_values * w) @ np.conj(values)


Rule = Callable[[Any], dict]


@dataclass(frozen=True)
class Recipe:
    label: str
    alpha_states: tuple
    weight: Fraction
    rule: Rule


class Family:
    """Base for the six families; subclasses fill in the tables."""

    tag: str = ""
    default_tensor = "natural"

    def __init__(self, param: int):
        self.fid = FamilyId(self.tag, param)
        self.param = param

    # -- to override -------------------------------------------------------
    def states(self) -> list:
        raise NotImplementedError

    def dims(self) -> list[int]:
        raise NotImplementedError

    def proj_dims(self) -> list[int]:
        raise NotImplementedError

    def group_order(self) -> int | None:
        raise NotImplementedError

    def recipes(self, tensor: str) -> list[Recipe]:
        raise NotImplementedError

    def tensor_choices(self) -> tuple[str, ...]:
        raise NotImplementedError

    def character_data(self) -> CharacterData:
        raise NotImplementedError

    # -- shared ------------------------------------------------------------
    @cached_property
    def state_index(self) -> dict:
        return {s: i for i, s in enumerate(self.states())}

    def alpha_dim(self, alpha_states: Sequence) -> int:
        d = self.dims()
        return sum(d[self.state_index[s]] for s in alpha_states)
