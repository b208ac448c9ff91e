"""Group-descriptor parsing, validation, and rendering."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from obstructor.errors import GroupSpecError
from obstructor.groupspec import GroupSpec, parse_group_spec, render_group_spec


@pytest.mark.parametrize(
    "text,family,n,l",
    [
        ("SU(6)/Z3", "SU", 6, 3),
        ("su(6) / z(3)", "SU", 6, 3),
        ("SU(5)", "SU", 5, 1),
        ("PSU(5)", "SU", 5, 5),
        ("psu(2)", "SU", 2, 2),
        ("PSp(4)", "PSp", 4, None),
        ("Sp(3)", "Sp", 3, None),
        ("SO(11)", "SO", 11, None),
        ("Spin(9)", "Spin", 9, None),
        ("PSO(10)", "PSO", 5, None),
        ("Ss(8)", "Ss", 2, None),
        (" PE6 ", "PE6", None, None),
        ("pe7", "PE7", None, None),
        ("E8", "E8", None, None),
        ("G2", "G2", None, None),
    ],
)
def test_accepted_descriptors(text, family, n, l):
    spec = parse_group_spec(text)
    assert spec.family == family
    assert spec.n == n
    assert spec.l == l


def test_divisibility_error_message_and_position():
    with pytest.raises(GroupSpecError) as exc:
        parse_group_spec("SU(6)/Z4")
    assert "4 does not divide 6" in str(exc.value)
    assert exc.value.position == 2


@pytest.mark.parametrize(
    "text",
    [
        "",
        "XU(3)",
        "SU(1)",
        "SU(6)/Z0",
        "SU(6)Z3",
        "PSp(4)/Z2",  # quotients are only spelled for SU
        "SO(5)",
        "SO(3)",
        "PSO(9)",  # odd argument
        "PSO(4)",  # below the supported range
        "Ss(10)",  # not divisible by 4
        "Ss(4)",
        "SU(6)/Z3 extra",
        "E9",
    ],
)
def test_rejected_descriptors(text):
    with pytest.raises(GroupSpecError):
        parse_group_spec(text)


def test_render_names():
    assert GroupSpec("SU", 6, 3).render() == "SU(6)/Z3"
    assert GroupSpec("SU", 5, 5).render() == "PSU(5)"
    assert GroupSpec("SU", 5, 1).render() == "SU(5)"
    assert GroupSpec("PSO", 5).render() == "PSO(10)"
    assert GroupSpec("Ss", 2).render() == "Ss(8)"
    assert str(GroupSpec("PE6")) == "PE6"


def test_round_trip(catalog):
    specs = []
    for family in ("SU", "PSp", "SO", "PSO", "Ss", "exceptional"):
        specs.extend(catalog.sweep_specs(family))
    for spec in specs:
        assert parse_group_spec(render_group_spec(spec)) == spec


def test_simply_connected_flags():
    assert parse_group_spec("E8").simply_connected
    assert parse_group_spec("SU(5)").simply_connected
    assert parse_group_spec("Spin(10)").simply_connected
    assert not parse_group_spec("PSU(5)").simply_connected
    assert not parse_group_spec("SO(7)").simply_connected


def test_fundamental_group_exponent():
    assert parse_group_spec("SU(6)/Z3").fundamental_group_exponent() == 3
    assert parse_group_spec("PSO(10)").fundamental_group_exponent() == 4
    assert parse_group_spec("PSO(16)").fundamental_group_exponent() == 2
    assert parse_group_spec("PE6").fundamental_group_exponent() == 3
    assert parse_group_spec("E8").fundamental_group_exponent() == 1


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="SUPOsZspE678/()0123 ", max_size=16))
def test_parser_total_on_junk(text):
    # the parser either returns a validated spec or raises GroupSpecError
    try:
        spec = parse_group_spec(text)
    except GroupSpecError:
        return
    assert isinstance(spec, GroupSpec)
