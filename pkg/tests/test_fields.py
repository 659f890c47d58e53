import pickle
from itertools import product

import pytest
from hypothesis import given, strategies as st

from matpaint.errors import FormatError, MixedFields, NotAUnit
from matpaint.fields import (
    FIELDS,
    GF2,
    GF3,
    GF4,
    REGULAR,
    RINGS,
    SIXTH_ROOT,
    add,
    automorphisms_of,
    inv,
    is_unit_value,
    mul,
    neg,
    ring_by_tag,
)
from oracles import eisenstein_to_complex, gf4_mul_poly


@pytest.mark.parametrize("F", FIELDS, ids=lambda f: f.tag)
def test_field_axioms_exhaustive(F):
    els = F.elements
    zero, one = F.zero, F.one
    for a, b, c in product(els, repeat=3):
        assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a, b in product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
    for a in els:
        assert F.add(a, zero) == a
        assert F.mul(a, one) == a
        assert F.add(a, F.neg(a)) == zero
        if a != zero:
            assert F.mul(a, F.inv(a)) == one
    assert set(F.units) == set(els) - {zero}


def test_named_examples():
    assert GF2.add(1, 1) == 0
    x = GF4.X
    assert GF4.render(GF4.mul(x, x)) == "x+1"
    z = SIXTH_ROOT.Z
    assert SIXTH_ROOT.mul(z, SIXTH_ROOT.mul(z, z)) == (-1, 0)


def test_gf4_against_polynomial_product():
    for a, b in product(range(4), repeat=2):
        assert GF4.mul(a, b) == gf4_mul_poly(a, b)


def test_unit_membership():
    assert GF3.is_unit(2)
    assert not REGULAR.is_unit(2)
    assert REGULAR.is_unit(-1)
    z = SIXTH_ROOT.Z
    zeta_minus_one = SIXTH_ROOT.sub(z, SIXTH_ROOT.one)
    assert zeta_minus_one == SIXTH_ROOT.mul(z, z)
    assert SIXTH_ROOT.is_unit(zeta_minus_one)
    assert not SIXTH_ROOT.is_unit((2, 0))
    assert not SIXTH_ROOT.is_unit((1, 1))


def test_sixth_root_units_are_the_sixth_roots_of_unity():
    units = SIXTH_ROOT.units
    assert len(set(units)) == 6
    images = [eisenstein_to_complex(u) for u in units]
    for k, w in enumerate(images):
        assert abs(w ** 6 - 1) < 1e-9
        # the k-th unit is zeta^k, zeta = exp(i pi / 3)
        assert abs(w - eisenstein_to_complex((0, 1)) ** k) < 1e-9
    for a, b in product(units, repeat=2):
        assert SIXTH_ROOT.mul(a, b) in units
    # cyclic of order 6: z generates, and no smaller power is 1
    z = SIXTH_ROOT.Z
    p = SIXTH_ROOT.one
    orders = []
    for k in range(1, 7):
        p = SIXTH_ROOT.mul(p, z)
        if p == SIXTH_ROOT.one:
            orders.append(k)
    assert orders == [6]


@given(st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
       st.tuples(st.integers(-20, 20), st.integers(-20, 20)))
def test_eisenstein_product_matches_complex(a, b):
    got = eisenstein_to_complex(SIXTH_ROOT.mul(a, b))
    want = eisenstein_to_complex(a) * eisenstein_to_complex(b)
    assert abs(got - want) < 1e-6


def test_non_units_do_not_invert():
    with pytest.raises(NotAUnit):
        GF3.inv(0)
    with pytest.raises(NotAUnit):
        REGULAR.inv(2)
    with pytest.raises(NotAUnit):
        SIXTH_ROOT.inv((2, 1))
    with pytest.raises(ZeroDivisionError):
        GF4.inv(0)


def test_automorphisms():
    assert [a.name for a in automorphisms_of(GF2)] == ["identity"]
    assert [a.name for a in automorphisms_of(GF3)] == ["identity"]
    ident, frob = automorphisms_of(GF4)
    assert frob(GF4.X) == GF4.parse("x+1")
    for a in GF4.elements:
        assert frob(a) == GF4.mul(a, a)
        assert frob(frob(a)) == a
        assert ident(a) == a
    # Frobenius fixes exactly GF(2)
    assert [a for a in GF4.elements if frob(a) == a] == [0, 1]
    for a, b in product(GF4.elements, repeat=2):
        assert frob(GF4.add(a, b)) == GF4.add(frob(a), frob(b))
        assert frob(GF4.mul(a, b)) == GF4.mul(frob(a), frob(b))
    assert frob.compose(frob) == ident
    assert frob.inverse() == frob
    with pytest.raises(ValueError):
        automorphisms_of(REGULAR)


def test_field_element_wrappers():
    a, b = GF3.element(2), GF3.element(2)
    assert (a + b).value == 1
    assert (a * b).value == 1
    assert (-a).value == 1
    assert (a / b).value == 1
    assert add(a, b) == a + b and mul(a, b) == a * b
    assert neg(a) == -a and inv(a).value == 2
    assert is_unit_value(a)
    assert str(GF4.element(3)) == "x+1"
    with pytest.raises(MixedFields):
        GF3.element(1) + GF2.element(1)


@pytest.mark.parametrize("ring", list(RINGS.values()), ids=lambda r: r.tag)
def test_render_parse_round_trip(ring):
    values = ring.elements if ring.is_field else ring.units + (ring.zero,)
    if ring is SIXTH_ROOT:
        values += ((2, -3), (0, 5))
    for v in values:
        assert ring.parse(ring.render(v)) == v
    assert ring_by_tag(ring.tag) is ring
    assert pickle.loads(pickle.dumps(ring)) is ring


def test_parse_errors():
    with pytest.raises(FormatError):
        ring_by_tag("gf5")
    with pytest.raises(FormatError):
        GF4.parse("y")
    with pytest.raises(FormatError):
        SIXTH_ROOT.parse("z^q")
