"""Family catalog: state spaces, tensor rules, character tables, stationary laws."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Hashable

import numpy as np

from ..errors import ConsistencyError, ParameterError
from .base import FAMILY_TAGS, ChainSpec, CharacterData, Component, FamilyId, is_prime
from .bdn import BinaryDihedral
from .quantum import QuantumSL2
from .sl2_2n import SL2TwoN, necklace_count
from .sl2p import SL2p
from .sl2p2 import SL2pSquared
from .sl3p import SL3p

FAMILIES = {
    "bdn": BinaryDihedral,
    "sl2p": SL2p,
    "sl2p2": SL2pSquared,
    "sl2_2n": SL2TwoN,
    "sl3p": SL3p,
    "quantum": QuantumSL2,
}

TENSOR_ALIASES = {"steinberg-mixed": "mixed", "v1": "natural"}


@lru_cache(maxsize=None)
def family(tag: str, param: int):
    """The (cached) family object for ``tag`` and its parameter."""
    FamilyId(tag, param)
    return FAMILIES[tag](param)


def _family_of(spec_or_id):
    fid = spec_or_id.family if isinstance(spec_or_id, ChainSpec) else spec_or_id
    return family(fid.tag, fid.param)


def make_spec(fid: FamilyId | tuple, tensor: str = "natural") -> ChainSpec:
    """Build the chain specification for a family instance and tensoring choice."""
    if not isinstance(fid, FamilyId):
        fid = FamilyId(*fid)
    fam = family(fid.tag, fid.param)
    choices = fam.tensor_choices()
    if tensor == "steinberg-mixed" and fid.tag not in ("sl2p", "quantum"):
        raise ParameterError("--tensor steinberg-mixed applies only to sl2p and quantum")
    key = tensor
    if key not in choices:
        key = TENSOR_ALIASES.get(tensor, tensor)
    if key not in choices:
        raise ParameterError(f"{fid.tag}: unknown tensor choice {tensor!r}; expected one of {choices}")
    states = tuple(fam.states())
    dims = tuple(fam.dims())
    index = {s: i for i, s in enumerate(states)}
    comps = []
    for rec in fam.recipes(key):
        adim = fam.alpha_dim(rec.alpha_states)
        rows = []
        for i, s in enumerate(states):
            terms = rec.rule(s)
            row = tuple(sorted((index[t], m) for t, m in terms.items() if m))
            if sum(m * dims[j] for j, m in row) != adim * dims[i]:
                raise ConsistencyError(f"{fid.tag} {rec.label}: dimension not conserved at state {s!r}")
            rows.append(row)
        comps.append(Component(rec.label, tuple(rec.alpha_states), adim, rec.weight, tuple(rows)))
    pd = tuple(fam.proj_dims())
    total = sum(d * q for d, q in zip(dims, pd))
    G = fam.group_order()
    if G is not None and total != G:
        raise ConsistencyError(f"{fid.tag}: sum of dim * pdim is {total}, expected |G| = {G}")
    return ChainSpec(fid, key, states, dims, pd, G, tuple(comps), total, index)


_LAZY_DEFAULTS = {("bdn", "natural"), ("sl2p", "natural"), ("sl2p2", "natural")}


def default_hold(tag: str, tensor: str = "natural") -> Fraction:
    """Holding probability used when none is given: 1/2 where laziness is needed."""
    key = TENSOR_ALIASES.get(tensor, tensor)
    return Fraction(1, 2) if (tag, key) in _LAZY_DEFAULTS else Fraction(0)


def tensor_decompose(spec: ChainSpec, state: Hashable, component: int = 0) -> list[tuple]:
    """Composition factors of ``state (x) alpha`` as (state, multiplicity) pairs."""
    i = spec.index(state)
    return [(spec.states[j], m) for j, m in spec.components[component].decomp[i]]


def stationary(spec: ChainSpec) -> tuple[Fraction, ...]:
    """pi(chi) = pdim(chi) dim(chi) / sum(pdim * dim), as exact rationals."""
    total = spec.plancherel_total
    return tuple(Fraction(d * q, total) for d, q in zip(spec.dims, spec.proj_dims))


def character_data(spec_or_id) -> CharacterData:
    """Brauer character table (p-regular classes) of a group family."""
    return _family_of(spec_or_id).character_data()


def alpha_values(spec: ChainSpec, cd: CharacterData, component: int = 0) -> np.ndarray:
    """Character of the tensoring module of one component on the class list."""
    comp = spec.components[component]
    return sum(cd.irr_values[spec.index(s)] for s in comp.alpha_states)


def mckay_matrix(spec: ChainSpec, component: int = 0) -> np.ndarray:
    """Integer matrix M[i, j] = multiplicity of state j in state_i (x) alpha."""
    n = spec.size
    M = np.zeros((n, n), dtype=np.int64)
    for i, row in enumerate(spec.components[component].decomp):
        for j, m in row:
            M[i, j] = m
    return M


def _label_json(s):
    return list(s) if isinstance(s, tuple) else s


def spec_to_json(spec: ChainSpec) -> dict:
    """Serializable form of a spec; mixtures also list every component."""

    def comp_json(c: Component) -> dict:
        return {
            "label": c.label,
            "weight": f"{c.weight.numerator}/{c.weight.denominator}",
            "alpha_dim": c.alpha_dim,
            "alpha_states": [_label_json(s) for s in c.alpha_states],
            "decomp": [[i, [[j, m] for j, m in row]] for i, row in enumerate(c.decomp)],
        }

    first = comp_json(spec.components[0])
    return {
        "family": spec.family.tag,
        "params": spec.family.params,
        "tensor": spec.tensor,
        "states": [_label_json(s) for s in spec.states],
        "dims": list(spec.dims),
        "alpha_dim": first["alpha_dim"],
        "decomp": first["decomp"],
        "components": [comp_json(c) for c in spec.components],
    }


__all__ = [
    "FAMILY_TAGS",
    "ChainSpec",
    "CharacterData",
    "Component",
    "FamilyId",
    "alpha_values",
    "character_data",
    "default_hold",
    "family",
    "is_prime",
    "make_spec",
    "mckay_matrix",
    "necklace_count",
    "spec_to_json",
    "stationary",
    "tensor_decompose",
]
