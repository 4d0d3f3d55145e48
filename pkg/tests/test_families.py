import json
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tensorwalk.errors import ParameterError, UnsupportedFamilyError
from tensorwalk.families import (
    FamilyId,
    alpha_values,
    character_data,
    default_hold,
    family,
    make_spec,
    mckay_matrix,
    necklace_count,
    spec_to_json,
    stationary,
    tensor_decompose,
)

SMALL = [("bdn", n) for n in (2, 3, 4, 7)] + [
    ("sl2p", 5),
    ("sl2p", 7),
    ("sl2p2", 5),
    ("sl2_2n", 2),
    ("sl2_2n", 3),
    ("sl2_2n", 5),
    ("sl3p", 11),
    ("quantum", 3),
    ("quantum", 9),
]


def all_specs(cases=SMALL):
    for tag, v in cases:
        for t in family(tag, v).tensor_choices():
            yield make_spec(FamilyId(tag, v), t)


# -- parameters ---------------------------------------------------------------------


@pytest.mark.parametrize(
    "tag,v,needle",
    [
        ("sl2p", 9, "prime"),
        ("sl2p", 3, "prime >= 5"),
        ("sl2p2", 4, "prime"),
        ("sl3p", 7, "congruent to 2 mod 3"),
        ("sl3p", 2, ">= 5"),
        ("sl3p", 9, "prime"),
        ("quantum", 4, "odd"),
        ("quantum", 1, "odd"),
        ("bdn", 1, "n must be >= 2"),
        ("nope", 3, "unknown family"),
    ],
)
def test_bad_parameters_name_the_constraint(tag, v, needle):
    with pytest.raises(ParameterError, match=needle):
        make_spec((tag, v))


def test_unknown_tensor_choice():
    with pytest.raises(ParameterError):
        make_spec(("bdn", 4), "steinberg")
    with pytest.raises(ParameterError, match="steinberg-mixed"):
        make_spec(("sl2p2", 5), "steinberg-mixed")
    assert make_spec(("sl2p", 5), "steinberg-mixed").tensor == "mixed"


# -- documented examples ------------------------------------------------------------


def test_sl2p_natural_shape():
    spec = make_spec(("sl2p", 5))
    assert spec.size == 5
    assert list(spec.dims) == [1, 2, 3, 4, 5]
    assert spec.alpha_dim == 2


def test_quantum_v1_shape():
    spec = make_spec(("quantum", 3))
    assert list(spec.dims) == [1, 2, 3]
    assert tensor_decompose(spec, 0) == [(1, 1)]


def test_decomposition_examples():
    assert sorted(tensor_decompose(make_spec(("sl2p", 5)), 4)) == [(1, 1), (3, 2)]
    assert sorted(tensor_decompose(make_spec(("sl2p", 5), "steinberg"), 2)) == [(0, 1), (2, 3), (4, 1)]
    assert sorted(tensor_decompose(make_spec(("quantum", 9), "steinberg"), 1)) == [(0, 2), (7, 2)]
    got = dict(tensor_decompose(make_spec(("sl2_2n", 3)), (1, 1, 1)))
    assert got == {(0, 1, 1): 2, (0, 0, 1): 2, (0, 0, 0): 2, (1, 0, 0): 1}


def test_unknown_state_lookup():
    with pytest.raises(KeyError):
        tensor_decompose(make_spec(("sl2p", 5)), 7)


def test_stationary_examples():
    assert stationary(make_spec(("sl2p", 5))) == tuple(Fraction(k, 24) for k in (1, 4, 6, 8, 5))
    assert stationary(make_spec(("quantum", 3))) == (Fraction(2, 9), Fraction(4, 9), Fraction(1, 3))
    pi = stationary(make_spec(("sl2_2n", 3)))
    assert pi[0] == Fraction(1, 9) and all(x == Fraction(8, 63) for x in pi[1:])


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_sl2p_stationary_closed_form(p):
    pi = stationary(make_spec(("sl2p", p)))
    q = p * p - 1
    expected = [Fraction(1, q)] + [Fraction(2 * (a + 1), q) for a in range(1, p - 1)] + [Fraction(p, q)]
    assert list(pi) == expected


@pytest.mark.parametrize("n", [3, 5, 9, 15])
def test_quantum_stationary_closed_form(n):
    pi = stationary(make_spec(("quantum", n)))
    assert list(pi) == [Fraction(2 * (j + 1), n * n) for j in range(n - 1)] + [Fraction(1, n)]


def test_steinberg_mckay_displays():
    m3 = [[0, 0, 1], [2, 2, 0], [2, 2, 1]]
    m5 = [[0, 0, 0, 0, 1], [2, 0, 0, 2, 0], [0, 2, 2, 0, 1], [2, 2, 2, 2, 0], [2, 2, 2, 2, 1]]
    m7 = [
        [0, 0, 0, 0, 0, 0, 1],
        [2, 0, 0, 0, 0, 2, 0],
        [0, 2, 0, 0, 2, 0, 1],
        [2, 0, 2, 2, 0, 2, 0],
        [0, 2, 2, 2, 2, 0, 1],
        [2, 2, 2, 2, 2, 2, 0],
        [2, 2, 2, 2, 2, 2, 1],
    ]
    for n, M in ((3, m3), (5, m5), (7, m7)):
        assert mckay_matrix(make_spec(("quantum", n), "steinberg")).tolist() == M


def test_quantum_v1_mckay_is_path_with_corner():
    n = 9
    M = mckay_matrix(make_spec(("quantum", n)))
    E = np.zeros((n, n), dtype=int)
    for a in range(n - 1):
        E[a, a + 1] = 1
        if a:
            E[a, a - 1] = 1
    E[n - 1, n - 2] = 2
    E[n - 1, 0] = 2
    assert (M == E).all()


def test_quantum_has_no_character_table():
    with pytest.raises(UnsupportedFamilyError):
        character_data(FamilyId("quantum", 5))


def test_spec_json_round_trip():
    spec = make_spec(("sl2p", 5), "mixed")
    blob = json.loads(json.dumps(spec_to_json(spec)))
    assert blob["family"] == "sl2p" and blob["params"] == {"p": 5}
    assert blob["states"] == [0, 1, 2, 3, 4] and blob["dims"] == [1, 2, 3, 4, 5]
    assert len(blob["components"]) == 2
    assert {c["weight"] for c in blob["components"]} == {"1/2"}
    assert blob["decomp"] == blob["components"][0]["decomp"]
    assert blob["decomp"][0] == [0, [[1, 1]]]


def test_default_hold():
    assert default_hold("sl2p") == Fraction(1, 2)
    assert default_hold("sl2p2") == Fraction(1, 2)
    assert default_hold("bdn") == Fraction(1, 2)
    assert default_hold("sl2p", "steinberg") == 0
    assert default_hold("quantum") == 0
    assert default_hold("sl3p") == 0


# -- structural invariants ----------------------------------------------------------


@pytest.mark.parametrize("spec", list(all_specs()), ids=lambda s: f"{s.family.tag}{s.family.param}-{s.tensor}")
def test_dimension_conservation_and_plancherel(spec):
    for comp in spec.components:
        for i, row in enumerate(comp.decomp):
            assert sum(m * spec.dims[j] for j, m in row) == comp.alpha_dim * spec.dims[i]
    pi = stationary(spec)
    assert sum(pi) == 1 and all(x > 0 for x in pi)
    if spec.group_order is not None:
        assert sum(d * q for d, q in zip(spec.dims, spec.proj_dims)) == spec.group_order


GROUP_CASES = [
    ("bdn", n) for n in range(2, 13)
] + [("sl2p", p) for p in (5, 7, 11, 13)] + [("sl2p2", p) for p in (5, 7)] + [("sl2_2n", n) for n in range(2, 8)] + [
    ("sl3p", 11),
    ("sl3p", 17),
]


@pytest.mark.parametrize("tag,v", GROUP_CASES)
def test_character_orthogonality(tag, v):
    cd = character_data(FamilyId(tag, v))
    k = cd.n_classes
    assert cd.irr_values.shape == (k, k)
    assert np.abs(cd.row_orthogonality() - np.eye(k)).max() < 1e-8
    assert np.abs(cd.column_orthogonality() - np.eye(k)).max() < 1e-8
    assert sum(cd.class_sizes) < cd.group_order or tag == "bdn"


@pytest.mark.parametrize("p", [7, 11, 13, 23])
def test_projective_p1_on_y_classes_depends_on_s(p):
    # p_1(y^s) = -2cos(6 pi s/(p+1)); dropping s breaks column orthogonality
    cd = character_data(FamilyId("sl2p", p))
    ys = [i for i, c in enumerate(cd.class_ids) if c.startswith("y^")]
    assert np.allclose(cd.proj_values[1, ys], -2 * np.cos(6 * np.pi * np.arange(1, len(ys) + 1) / (p + 1)))
    P = cd.proj_values.copy()
    P[1, ys] = -2 * np.cos(6 * np.pi / (p + 1))
    bad = (P.T @ np.conj(cd.irr_values)) / np.array(cd.centralizer_orders, dtype=float)[:, None]
    assert np.abs(bad - np.eye(cd.n_classes)).max() > 1e-3


@pytest.mark.parametrize("tag,v", GROUP_CASES)
def test_tensor_rules_against_characters(tag, v):
    """Decomposing chi * alpha with the character table reproduces every rule."""
    cd = character_data(FamilyId(tag, v))
    for t in family(tag, v).tensor_choices():
        spec = make_spec(FamilyId(tag, v), t)
        for i in range(len(spec.components)):
            prod = (cd.irr_values * alpha_values(spec, cd, i)[None, :]).T
            mult = cd.decompose(prod).T
            assert np.abs(mult - mckay_matrix(spec, i)).max() < 1e-6, (t, i)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_sl2p_brauer_values_on_split_torus(p):
    # V(a) on x^r has eigenvalues z^(a-2k), z a primitive (p-1)th root of unity
    cd = character_data(FamilyId("sl2p", p))
    for col, cid in enumerate(cd.class_ids):
        if not cid.startswith("x^"):
            continue
        r = int(cid[2:])
        z = np.exp(2j * np.pi * r / (p - 1))
        for a in range(p):
            direct = sum(z ** (a - 2 * k) for k in range(a + 1))
            assert abs(cd.irr_values[a, col] - direct) < 1e-9


def test_sl3_dims_closed_form():
    for p in (11, 17, 23):
        fam = family("sl3p", p)
        assert fam.dims() == fam.dims_closed_form()
        assert fam.dims()[-1] == p ** 3


@pytest.mark.parametrize("p", [11, 17])
def test_sl3_projective_dims_on_walls(p):
    fam = family("sl3p", p)
    pd = dict(zip(fam.states(), fam.proj_dims()))
    assert pd[(p - 1, p - 1)] == p ** 3
    assert pd[(p - 1, 0)] == pd[(0, p - 1)] == 2 * p ** 3
    for b in range(1, p - 1):
        assert pd[(p - 1, b)] == 3 * p ** 3
        assert pd[(b, p - 1)] == 3 * p ** 3


def test_sl3_class_count_matches_states():
    for p in (11, 17, 23):
        assert len(family("sl3p", p).classes()) == p * p


@pytest.mark.parametrize("n", range(1, 11))
def test_necklace_count_brute_force(n):
    seen, orbits = set(), 0
    for bits in product((0, 1), repeat=n):
        if bits in seen:
            continue
        orbits += 1
        seen |= {bits[k:] + bits[:k] for k in range(n)}
    assert necklace_count(n) == orbits


@given(st.sampled_from(SMALL), st.data())
def test_decompose_is_nonnegative_and_in_range(case, data):
    tag, v = case
    t = data.draw(st.sampled_from(family(tag, v).tensor_choices()))
    spec = make_spec(FamilyId(tag, v), t)
    s = data.draw(st.sampled_from(spec.states))
    for state, m in tensor_decompose(spec, s):
        assert m > 0 and state in spec.states


@given(st.sampled_from([5, 7, 11, 13, 17, 19, 23]), st.data())
def test_sl2p_natural_rule_property(p, data):
    a = data.draw(st.integers(0, p - 1))
    got = dict(tensor_decompose(make_spec(("sl2p", p)), a))
    if a == 0:
        assert got == {1: 1}
    elif a < p - 1:
        assert got == {a - 1: 1, a + 1: 1}
    else:
        assert got == {p - 2: 2, 1: 1}
