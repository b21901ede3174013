from biquandle.switches.axioms import check_axioms_single, check_mixed_ybe, required_identities, verify_ruleset
from biquandle.switches.families import (
    FAMILY_NAMES,
    Family,
    MissingSwitchError,
    RuleSet,
    UnknownFamilyError,
    rule_set,
)
from biquandle.switches.switch import (
    BUILTIN_NAMES,
    Switch,
    SwitchError,
    alexander,
    builtin,
    left_embed,
    link_twist,
    manturov_twist,
    mutants,
    p2,
    quaternionic,
    right_embed,
    z_twist,
)

__all__ = [
    "BUILTIN_NAMES",
    "FAMILY_NAMES",
    "Family",
    "MissingSwitchError",
    "RuleSet",
    "Switch",
    "SwitchError",
    "UnknownFamilyError",
    "alexander",
    "builtin",
    "check_axioms_single",
    "check_mixed_ybe",
    "left_embed",
    "link_twist",
    "manturov_twist",
    "mutants",
    "p2",
    "quaternionic",
    "required_identities",
    "right_embed",
    "rule_set",
    "verify_ruleset",
    "z_twist",
]
