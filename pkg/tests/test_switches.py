import pytest

from biquandle.knots import CrossingLabel
from biquandle.ring import CoefficientDomain, Quaternion, RingMatrix, parse_quaternion_unit
from biquandle.switches import (
    FAMILY_NAMES,
    Family,
    MissingSwitchError,
    Switch,
    SwitchError,
    UnknownFamilyError,
    alexander,
    builtin,
    check_axioms_single,
    check_mixed_ybe,
    mutants,
    p2,
    quaternionic,
    required_identities,
    rule_set,
    verify_ruleset,
    z_twist,
)
from tests.conftest import poly

I, J, K = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)


def test_alexander_switch() -> None:
    b = alexander()
    assert b.forward == RingMatrix.from_rows([[0, poly("s")], [poly("t"), poly("1 - s*t")]])
    assert b.forward @ b.inverse == RingMatrix.identity(2)
    assert not b.is_involution()


def test_p2_inverse_from_adjugate() -> None:
    switch = p2()
    assert switch.forward @ switch.inverse == RingMatrix.identity(2)
    assert switch.inverse[0, 1] == poly("t^-1")


def test_twists_are_involutions() -> None:
    for switch in (z_twist(), z_twist(2), builtin("L", pair=(2, 1)), builtin("V")):
        assert switch.is_involution()
        assert switch.forward @ switch.forward == RingMatrix.identity(2)


def test_builtin_names() -> None:
    assert builtin("B").name == "B"
    assert builtin("P1").forward == alexander().forward
    assert builtin("P3").name == "P3[z]"
    assert builtin("P3", component=2).name == "P3[z_2]"
    assert builtin("L", pair=(2, 1)).name == "L[w_1_2]"
    assert builtin("V").name == "V[alpha]"
    assert builtin("QB", units=(I, J)).name == "QB[i,j]"


@pytest.mark.parametrize(
    "kwargs",
    [
        {"name": "Q"},
        {"name": "L"},
        {"name": "L", "pair": (1, 1)},
        {"name": "QB"},
    ],
)
def test_builtin_errors(kwargs: dict) -> None:
    with pytest.raises(SwitchError):
        builtin(**kwargs)


def test_quaternion_units_are_validated() -> None:
    with pytest.raises(SwitchError):
        quaternionic(I, I)
    with pytest.raises(SwitchError):
        quaternionic(I, -I)
    with pytest.raises(SwitchError):
        quaternionic(Quaternion(1), J)
    assert check_axioms_single(quaternionic(J, -K)).passed


def test_from_forward_needs_a_unit_determinant() -> None:
    with pytest.raises(SwitchError):
        Switch.from_forward(RingMatrix.from_rows([[1, poly("s")], [poly("t"), 1]]), "bad")


def test_single_switch_checks() -> None:
    assert check_axioms_single(alexander()).passed
    assert check_axioms_single(quaternionic(I, J)).passed
    assert check_axioms_single(z_twist(), "parity").passed


def test_p2_axiom4_is_informational_for_parity() -> None:
    as_parity = check_axioms_single(p2(), "parity")
    assert not as_parity.axiom4
    assert as_parity.passed
    assert not check_axioms_single(p2(), "biquandle").passed


def test_mutants_of_b_fail() -> None:
    found = list(mutants(alexander()))
    assert [m.name for m in found] == ["B[0,0]+1", "B[0,1]+1", "B[1,0]+1", "B[1,1]+1"]
    for mutant in found:
        assert not (check_axioms_single(mutant).passed and check_mixed_ybe(mutant, mutant, mutant))


MUTATED_BUILTINS = [
    (builtin("P3"), "parity"),
    (builtin("P2"), "parity"),
    (builtin("L", pair=(1, 2)), "link"),
    (builtin("V"), "virtual"),
]


@pytest.mark.parametrize("switch, role", MUTATED_BUILTINS, ids=[s.name for s, _ in MUTATED_BUILTINS])
def test_mutants_of_builtins_fail(switch: Switch, role: str) -> None:
    b = alexander()
    for mutant in mutants(switch):
        twins = [(mutant, mutant, b), (mutant, b, mutant), (b, mutant, mutant)]
        holds = check_axioms_single(mutant, role).passed and all(check_mixed_ybe(*t) for t in twins)
        assert not holds, mutant.name


def test_mutants_of_qb_fail() -> None:
    for mutant in mutants(quaternionic(I, J)):
        assert not check_axioms_single(mutant).invertible, mutant.name


def test_perturbed_twist_breaks_the_twin_identity() -> None:
    perturbed = Switch.from_forward(RingMatrix.from_rows([[0, poly("z")], [poly("z^-1"), 1]]), "perturbed")
    assert check_axioms_single(perturbed, "parity").passed
    assert not check_mixed_ybe(perturbed, perturbed, alexander())
    assert check_mixed_ybe(z_twist(), z_twist(), alexander())


def test_braid_relation_for_b() -> None:
    b = alexander()
    assert check_mixed_ybe(b, b, b)


def test_z_twist_twins_with_b() -> None:
    b, p = alexander(), z_twist()
    assert check_mixed_ybe(p, p, b)
    assert check_mixed_ybe(p, b, p)
    assert check_mixed_ybe(b, p, p)


@pytest.mark.parametrize("family", FAMILY_NAMES)
def test_every_family_verifies(family: str) -> None:
    report = verify_ruleset(rule_set(family))
    assert report.passed, report.failures()


@pytest.mark.parametrize("family", ["sawollek", "z-parity", "link-parity", "alpha-link-parity"])
def test_families_verify_for_three_components(family: str) -> None:
    report = verify_ruleset(rule_set(family, components=3))
    assert report.passed, report.failures()
    assert report.components == 3


def test_required_identities_for_z_parity() -> None:
    triples = required_identities(rule_set("z-parity"))
    assert len(triples) == 4


def test_link_parity_rule_set() -> None:
    rules = rule_set("link-parity", components=2)
    assert rules.switch_for(CrossingLabel.odd(2)).name == "P3[z_2]"
    assert rules.switch_for(CrossingLabel.even(1)).name == "B"
    assert rules.switch_for(CrossingLabel.link(2, 1)).name == "L[w_1_2]"
    assert [str(v) for v in rules.bounded_variables] == ["z_1", "z_2", "w_1_2"]


def test_alpha_families_carry_a_virtual_map() -> None:
    rules = rule_set(Family.ALPHA_SAWOLLEK)
    assert rules.virtual_map is not None
    assert rules.switch_for(CrossingLabel.odd(1)).name == "B"
    assert [str(v) for v in rules.bounded_variables] == ["alpha"]
    assert ("virtual", rules.virtual_map) in rules.all_switches()


def test_quaternionic_rule_set() -> None:
    rules = rule_set("z-parity-quaternionic", quaternion_units=("j", "-k"))
    assert rules.domain is CoefficientDomain.QUATERNION
    assert rules.switch_for(CrossingLabel.even(1)).name == "QB[j,-k]"
    with pytest.raises(SwitchError):
        rule_set("quaternionic", quaternion_units=("i", "i"))
    with pytest.raises(SwitchError):
        rule_set("quaternionic", quaternion_units=("i",))


def test_missing_switch() -> None:
    with pytest.raises(MissingSwitchError):
        rule_set("z-parity").switch_for(CrossingLabel.link(1, 2))


def test_unknown_family() -> None:
    with pytest.raises(UnknownFamilyError):
        rule_set("jones")
    with pytest.raises(SwitchError):
        rule_set("sawollek", components=0)


def test_family_properties() -> None:
    assert Family.Z_PARITY.odd_evidence_reference is Family.SAWOLLEK
    assert Family.Z_PARITY_QUATERNIONIC.odd_evidence_reference is Family.QUATERNIONIC
    assert Family.ALPHA_LINK_PARITY.base is Family.LINK_PARITY


def test_report_serializes_passed() -> None:
    dumped = verify_ruleset(rule_set("sawollek")).model_dump()
    assert dumped["passed"] is True
    assert dumped["switches"][0]["switch"] == "B"


UNIT_NAMES = ["i", "-i", "j", "-j", "k", "-k"]
ORTHOGONAL_UNITS = [
    (u, v)
    for u in UNIT_NAMES
    for v in UNIT_NAMES
    if (parse_quaternion_unit(u) * parse_quaternion_unit(v)).a == 0
]


@pytest.mark.parametrize("family", ["quaternionic", "z-parity-quaternionic"])
@pytest.mark.parametrize("u, v", ORTHOGONAL_UNITS)
def test_quaternionic_families_verify_for_every_unit_pair(family: str, u: str, v: str) -> None:
    report = verify_ruleset(rule_set(family, quaternion_units=(u, v)))
    assert report.passed, report.failures()


def test_there_are_24_orthogonal_unit_pairs() -> None:
    assert len(ORTHOGONAL_UNITS) == 24
