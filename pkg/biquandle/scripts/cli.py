"""
Command line interface.

    biquandle parse "O1-,O2-,U1-,O3+,U2-,U3+"
    biquandle parity "O1-,O2-,U1-,O3+,U2-,U3+"
    biquandle invariant "O1-,O2-,U1-,O3+,U2-,U3+" --family z-parity
    biquandle invariant "O1-,O2-,U1-,O3+,U2-,U3+" --mirror --reverse
    biquandle bounds "O1-,O2-,U1-,O3+,U2-,U3+" --family z-parity
    biquandle verify-axioms --family z-parity
    biquandle batch data/tables/worked_examples.tsv --families sawollek,z-parity --out report.csv
    biquandle compare CODE_A CODE_B --family sawollek
    biquandle families

Exit codes: 0 success, 1 input error, 2 internal failure.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence, Union

import fire
from fire.core import FireExit
from pydantic import ValidationError

from biquandle.config import get_settings
from biquandle.engine import compare_diagrams, compute_invariant
from biquandle.format.report import run_batch, write_report
from biquandle.format.table import TableLoadError, load_table
from biquandle.knots import GaussCodeError, MoveError, classify, parity_well_defined_check, parse_gauss_code, writhe
from biquandle.switches import FAMILY_NAMES, Family, SwitchError, rule_set, verify_ruleset

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

# Setup logging
logging.basicConfig(level=get_settings().log_level, format=LOG_FORMAT)


class VerificationFailed(ValueError):
    """A rule set failed one of its axiom checks"""


INPUT_ERRORS = (GaussCodeError, SwitchError, MoveError, TableLoadError, ValidationError, FileNotFoundError, ValueError)

ArgLike = Union[str, int, float, Sequence[Any], None]


def _text(value: ArgLike) -> str:
    """fire hands over tuples for comma lists and numbers for numeric-looking words"""
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    return str(value)


def _names(value: ArgLike) -> list[str]:
    return [part.strip() for part in _text(value).split(",") if part.strip()]


def _emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


class BiquandleCli:
    """Parity biquandle invariants of virtual knots and links"""

    def parse(self, code: ArgLike = "", permissive_signs: Optional[bool] = None) -> None:
        """Validate a Gauss code and echo its canonical form."""
        d = parse_gauss_code(_text(code), self._permissive(permissive_signs))
        _emit(
            {
                "gauss_code": d.serialize(),
                "components": d.component_count,
                "crossings": d.crossing_count,
                "virtual_crossings": d.virtual_count,
                "writhe": writhe(d),
                "valid": True,
            }
        )

    def parity(self, code: ArgLike = "", permissive_signs: Optional[bool] = None) -> None:
        """Even / odd / link labels of the real crossings."""
        d = parse_gauss_code(_text(code), self._permissive(permissive_signs))
        labeling = classify(d)
        _emit(
            {
                "gauss_code": d.serialize(),
                "labels": {str(i): label for i, label in labeling.as_strings().items()},
                "well_defined": parity_well_defined_check(d).passed,
            }
        )

    def invariant(
        self,
        code: ArgLike = "",
        family: str = "sawollek",
        quaternion_units: ArgLike = None,
        permissive_signs: Optional[bool] = None,
        mirror: bool = False,
        reverse: bool = False,
    ) -> None:
        """
        Invariant polynomial of a diagram as JSON.

        Args:
            code: extended Gauss code
            family: rule family name
            quaternion_units: U,V for the quaternionic families (default i,j)
            permissive_signs: real passes without a sign default to '+'
            mirror: use the mirror image (over and under swapped, signs flipped)
            reverse: use the diagram with every component reversed
        """
        d = parse_gauss_code(_text(code), self._permissive(permissive_signs))
        if mirror:
            d = d.mirror()
        if reverse:
            d = d.reverse()
        result = compute_invariant(d, family, _names(quaternion_units) or None)
        _emit(result.to_record().model_dump(mode="json"))

    def bounds(
        self,
        code: ArgLike = "",
        family: str = "z-parity",
        quaternion_units: ArgLike = None,
        permissive_signs: Optional[bool] = None,
    ) -> None:
        """Crossing-number lower bounds read off an invariant."""
        d = parse_gauss_code(_text(code), self._permissive(permissive_signs))
        result = compute_invariant(d, family, _names(quaternion_units) or None)
        payload = {"family": result.family.value, "gauss_code": d.serialize(), "polynomial": str(result.canonical)}
        payload.update(result.bounds.model_dump(mode="json"))
        _emit(payload)

    def verify_axioms(self, family: str = "sawollek", components: int = 1, quaternion_units: ArgLike = None) -> None:
        """Check the switch axioms and every mixed Yang-Baxter identity of a rule family."""
        report = verify_ruleset(rule_set(family, int(components), _names(quaternion_units) or None))
        _emit(report.model_dump(mode="json"))
        if not report.passed:
            raise VerificationFailed(f"{family} fails {len(report.failures())} check(s)")

    def batch(
        self,
        table: str,
        families: ArgLike = "sawollek,z-parity",
        out: Optional[str] = None,
        jobs: Optional[int] = None,
        strict: Optional[bool] = None,
        permissive_signs: Optional[bool] = None,
        quaternion_units: ArgLike = None,
    ) -> None:
        """
        Compute families over a knot table and write a CSV or JSON report.

        Args:
            table: table file, or a file name under data/tables
            families: comma separated family names
            out: report path ending in .csv or .json
            jobs: worker processes
            strict: any bad table line is fatal
            permissive_signs: real passes without a sign default to '+'
            quaternion_units: U,V for the quaternionic families
        """
        settings = get_settings()
        path = Path(table)
        if not path.exists() and (settings.tables_path() / table).exists():
            path = settings.tables_path() / table
        entries = load_table(
            path,
            strict=settings.strict if strict is None else strict,
            permissive_signs=self._permissive(permissive_signs),
        )
        report = run_batch(
            entries,
            _names(families),
            jobs=settings.jobs if jobs is None else int(jobs),
            quaternion_units=_names(quaternion_units) or None,
        )
        if out:
            write_report(report, out)
        _emit(
            {
                "summary": report.summary.model_dump(mode="json"),
                "conjecture_violations": [v.model_dump(mode="json") for v in report.conjecture_violations],
            }
        )

    def compare(self, code_a: ArgLike, code_b: ArgLike, family: str = "sawollek") -> None:
        """Whether a family tells two diagrams apart."""
        comparison = compare_diagrams(parse_gauss_code(_text(code_a)), parse_gauss_code(_text(code_b)), family)
        _emit(
            {
                "family": comparison.family.value,
                "first": str(comparison.first),
                "second": str(comparison.second),
                "distinguishes": comparison.distinguishes,
            }
        )

    def families(self) -> None:
        """List the rule families."""
        _emit(
            [
                {
                    "name": name,
                    "quaternionic": Family(name).is_quaternionic,
                    "virtual_map": Family(name).has_virtual_map,
                    "bounded_variables": [str(v) for v in rule_set(name, 1).bounded_variables],
                }
                for name in FAMILY_NAMES
            ]
        )

    @staticmethod
    def _permissive(flag: Optional[bool]) -> bool:
        return get_settings().permissive_signs if flag is None else bool(flag)


def _prepare(argv: list[str]) -> list[str]:
    """Map hyphenated subcommands to method names and pull out --log-level"""
    prepared: list[str] = []
    level: Optional[str] = None
    tokens = iter(argv)
    for token in tokens:
        if token == "--log-level" or token == "--log_level":
            level = next(tokens, None)
        elif token.startswith("--log-level=") or token.startswith("--log_level="):
            level = token.split("=", 1)[1]
        else:
            prepared.append(token)
    if level:
        logging.getLogger().setLevel(level.upper())
    if prepared and not prepared[0].startswith("-"):
        prepared[0] = prepared[0].replace("-", "_")
    return prepared


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _prepare(list(sys.argv[1:] if argv is None else argv))
    try:
        fire.Fire(BiquandleCli, command=args, name="biquandle")
    except FireExit as e:
        return 0 if e.code == 0 else 1
    except INPUT_ERRORS as e:
        logging.error(f"{type(e).__name__}: {e}")
        return 1
    except Exception as e:
        logging.error(f"Internal failure: {type(e).__name__}: {e}")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
