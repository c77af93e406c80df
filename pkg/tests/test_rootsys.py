from fractions import Fraction
from itertools import product

import pytest

from bunmass.errors import SpecParseError, ValidationError
from bunmass.oracle import brute_group_order
from bunmass.rootsys import (
    CartanLabel,
    all_labels,
    build_root_datum,
    chevalley_order,
    invariants,
    reflection_group_order,
)

# Standard tables, used only as fixtures.
KNOWN_EXPONENTS = {
    "A1": (1,),
    "A2": (1, 2),
    "B2": (1, 3),
    "G2": (1, 5),
    "D4": (1, 3, 3, 5),
    "F4": (1, 5, 7, 11),
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
}


def reflection_orbit_roots(datum):
    """Independent root oracle: orbit of the simple roots under simple reflections."""
    n = datum.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                c = datum.pairing(beta, i)
                img = list(beta)
                img[i] -= c
                img = tuple(img)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return {r for r in seen if all(x >= 0 for x in r)}


def test_a1_roots():
    d = build_root_datum("A1")
    assert d.positive_roots == ((1,),)


def test_a2_roots():
    d = build_root_datum("A2")
    assert set(d.positive_roots) == {(1, 0), (0, 1), (1, 1)}


def test_g2_roots_and_heights():
    d = build_root_datum("G2")
    assert len(d.positive_roots) == 6
    assert sorted(sum(r) for r in d.positive_roots) == [1, 1, 2, 3, 4, 5]


@pytest.mark.parametrize("label", all_labels(8), ids=str)
def test_closure_matches_reflection_orbit(label):
    d = build_root_datum(label)
    assert set(d.positive_roots) == reflection_orbit_roots(d)
    assert len(set(d.positive_roots)) == len(d.positive_roots)


@pytest.mark.parametrize("label", all_labels(8), ids=str)
def test_invariant_identities(label):
    d = build_root_datum(label)
    inv = invariants(d)
    r = label.rank
    assert all(min(root) >= 0 for root in d.positive_roots)
    assert sum(inv.degrees) == inv.num_pos_roots + r
    assert inv.dim_g == 2 * inv.num_pos_roots + r
    h = inv.coxeter_number
    e = inv.exponents
    assert all(e[i] + e[r - 1 - i] == h for i in range(r))
    assert min(inv.degrees) >= 2
    assert sum(inv.exponent_module.values()) == r


@pytest.mark.parametrize("name,expected", KNOWN_EXPONENTS.items())
def test_exponent_tables(name, expected):
    assert invariants(name).exponents == expected


def test_small_invariants():
    a1 = invariants("A1")
    assert (a1.exponents, a1.degrees, a1.dim_g, a1.weyl_order) == ((1,), (2,), 3, 2)
    g2 = invariants("G2")
    assert (g2.exponents, g2.degrees, g2.dim_g, g2.weyl_order) == ((1, 5), (2, 6), 14, 12)
    e8 = invariants("E8")
    assert sum(e8.degrees) == 128 == e8.num_pos_roots + 8


@pytest.mark.parametrize("label", [l for l in all_labels(8) if l.rank <= 2], ids=str)
def test_weyl_order_by_permutation_group(label):
    d = build_root_datum(label)
    assert reflection_group_order(d) == invariants(d).weyl_order


def test_weyl_order_by_permutation_group_rank3():
    assert reflection_group_order(build_root_datum("A3")) == 24
    assert reflection_group_order(build_root_datum("B3")) == 48


@pytest.mark.parametrize("q", [2, 3, 4])
def test_chevalley_a1_matches_enumeration(q):
    assert chevalley_order(invariants("A1"), q) == brute_group_order(2, q)


def test_chevalley_examples():
    assert chevalley_order(invariants("A1"), 2) == 6
    assert chevalley_order(invariants("A1"), 3) == 24
    assert chevalley_order(invariants("A2"), 2) == 168 == brute_group_order(3, 2)


@pytest.mark.parametrize("label", all_labels(8), ids=str)
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_point_count_of_classifying_stack(label, q):
    inv = invariants(label)
    lhs = Fraction(q**inv.dim_g, chevalley_order(inv, q))
    rhs = Fraction(1)
    for d in inv.degrees:
        rhs /= 1 - Fraction(1, q**d)
    assert lhs == rhs


@pytest.mark.parametrize("q", [1, 0, 6, 12, 100])
def test_chevalley_rejects_non_prime_powers(q):
    with pytest.raises(ValidationError):
        chevalley_order(invariants("A1"), q)


def test_label_parsing():
    assert CartanLabel.parse("e8") == CartanLabel("E", 8)
    assert str(CartanLabel.parse("D4")) == "D4"
    with pytest.raises(SpecParseError) as exc:
        CartanLabel.parse("Z9")
    assert exc.value.position == 0
    with pytest.raises(SpecParseError) as exc:
        CartanLabel.parse("Ax")
    assert exc.value.position == 1


@pytest.mark.parametrize("bad", ["B1", "C2", "D3", "E5", "E9", "F3", "G3", "A0"])
def test_inadmissible_labels(bad):
    with pytest.raises(ValidationError):
        CartanLabel.parse(bad)


def test_label_count():
    # A1..A8, B2..B8, C3..C8, D4..D8, E6..E8, F4, G2
    assert len(all_labels(8)) == 8 + 7 + 6 + 5 + 3 + 1 + 1


def test_simple_roots_present():
    for label in all_labels(8):
        d = build_root_datum(label)
        for i in range(label.rank):
            assert tuple(int(i == j) for j in range(label.rank)) in d.positive_roots


def test_root_coordinates_bounded():
    # coefficients of the highest root of E8 top out at 6
    d = build_root_datum("E8")
    assert max(max(r) for r in d.positive_roots) == 6
    assert max(d.positive_roots, key=sum) == (2, 3, 4, 6, 5, 4, 3, 2)


def test_brute_group_order_is_exhaustive_count():
    # independent recount for (2, 2): list determinant-1 matrices directly
    mats = [m for m in product(range(2), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % 2 == 1]
    assert len(mats) == brute_group_order(2, 2) == 6
