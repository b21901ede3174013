"""
Symbolic checks of the switch axioms and of the mixed Yang-Baxter identities a rule set needs.
"""

from __future__ import annotations

import logging
from itertools import permutations

from biquandle.models.axiom_report import AxiomReport, IdentityCheck, SwitchCheck
from biquandle.ring import LaurentPoly, RingMatrix
from biquandle.switches.families import RuleSet
from biquandle.switches.switch import Switch, left_embed, right_embed

REQUIRES_AXIOM4 = ("biquandle", "virtual")


def _off_diagonal_units(m: RingMatrix) -> bool:
    return m[0, 1].is_unit() and m[1, 0].is_unit()


def _axiom4_half(m: RingMatrix) -> bool:
    """B^-1 (1 - A) == C + D B^-1 (1 - A), multiplication order kept"""
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    if not b.is_unit():
        return False
    x = b.unit_inverse() * (LaurentPoly.one(m.domain) - a)
    return x == c + d * x


def check_axioms_single(switch: Switch, role: str = "biquandle") -> SwitchCheck:
    identity = RingMatrix.identity(2, switch.domain)
    invertible = switch.forward @ switch.inverse == identity and switch.inverse @ switch.forward == identity
    return SwitchCheck(
        switch=switch.name,
        role=role,
        invertible=invertible,
        units_off_diagonal=_off_diagonal_units(switch.forward),
        units_off_diagonal_inverse=_off_diagonal_units(switch.inverse),
        axiom4=_axiom4_half(switch.forward) and _axiom4_half(switch.inverse),
        axiom4_required=role in REQUIRES_AXIOM4,
    )


def identity_name(a: Switch, b: Switch, c: Switch) -> str:
    return f"({a}xId)(Idx{b})({c}xId) = (Idx{c})({b}xId)(Idx{a})"


def check_mixed_ybe(a: Switch, b: Switch, c: Switch) -> bool:
    """(A x Id)(Id x B)(C x Id) == (Id x C)(B x Id)(Id x A) on forward matrices"""
    lhs = left_embed(a.forward) @ right_embed(b.forward) @ left_embed(c.forward)
    rhs = right_embed(c.forward) @ left_embed(b.forward) @ right_embed(a.forward)
    return lhs == rhs


def _twin_patterns(p: Switch, q: Switch) -> list[tuple[Switch, Switch, Switch]]:
    return [(p, p, q), (p, q, p), (q, p, p)]


def required_identities(rules: RuleSet) -> list[tuple[Switch, Switch, Switch]]:
    """Every triple the rule set must satisfy, without duplicates"""
    triples: list[tuple[Switch, Switch, Switch]] = []
    for component, b in rules.even.items():
        triples.append((b, b, b))
        triples.extend(_twin_patterns(rules.odd[component], b))
    for (i, j), link in rules.link.items():
        for component in (i, j):
            triples.extend(_twin_patterns(link, rules.even[component]))
            triples.extend(_twin_patterns(link, rules.odd[component]))
        triples.append((link, link, link))
    for lam, rho, gamma in permutations(range(1, rules.components + 1), 3):
        if lam < rho < gamma:
            triples.append((rules.link[(lam, rho)], rules.link[(lam, gamma)], rules.link[(rho, gamma)]))
    if rules.virtual_map is not None:
        v = rules.virtual_map
        triples.append((v, v, v))
        for _, other in rules.all_switches():
            if other is not v:
                triples.extend(_twin_patterns(v, other))

    unique: dict[str, tuple[Switch, Switch, Switch]] = {}
    for triple in triples:
        unique.setdefault(identity_name(*triple), triple)
    return list(unique.values())


def verify_ruleset(rules: RuleSet) -> AxiomReport:
    switches = [check_axioms_single(switch, role) for role, switch in rules.all_switches()]
    identities = [
        IdentityCheck(name=identity_name(*triple), passed=check_mixed_ybe(*triple))
        for triple in required_identities(rules)
    ]
    report = AxiomReport(
        family=rules.family.value,
        components=rules.components,
        switches=switches,
        identities=identities,
    )
    if not report.passed:
        logging.warning(f"Rule set {rules.family.value} fails: {', '.join(report.failures())}")
    return report
