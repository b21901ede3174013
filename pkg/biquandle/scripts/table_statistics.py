"""
Sawollek vs z-parity statistics over a knot table: how many knots each family detects that the other misses, and
whether any knot breaks the span conjecture (z-span at most the number of real crossings).
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

import fire

from biquandle.config import get_settings
from biquandle.format.report import run_batch, write_report
from biquandle.format.table import load_table
from biquandle.models.batch import BatchReport

# Setup logging
logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(levelname)s - %(message)s")

FAMILIES = ("sawollek", "z-parity")


def log_statistics(report: BatchReport) -> None:
    summary = report.summary
    logging.info("=" * 60)
    logging.info(f"Entries: {summary.entries}")
    for family in FAMILIES:
        logging.info(
            f"{family}: {summary.zero.get(family, 0)} zero, {summary.nonzero.get(family, 0)} nonzero, "
            f"{summary.errors.get(family, 0)} errors"
        )
    logging.info(f"sawollek zero, z-parity nonzero: {summary.detection('sawollek', 'z-parity')}")
    logging.info(f"z-parity zero, sawollek nonzero: {summary.detection('z-parity', 'sawollek')}")
    logging.info(f"Span conjecture violations: {len(report.conjecture_violations)}")
    for violation in report.conjecture_violations:
        logging.info(f"  {violation.name}: span {violation.z_span} > {violation.crossings} crossings")
    logging.info("=" * 60)


def table_statistics(table: Optional[str] = None, jobs: Optional[int] = None, out: Optional[str] = None) -> None:
    """
    Run sawollek and z-parity over a table and log the detection counts.

    Args:
        table: table file (default: the configured four-crossing table)
        jobs: worker processes
        out: report path; default data/reports/table_statistics_<timestamp>.json
    """
    settings = get_settings()
    try:
        path = Path(table) if table else settings.resolve_four_crossing_table()
        if path is None:
            raise FileNotFoundError(f"No table given and none found under {settings.tables_path()}")
        logging.info(f"Loading table from {path}")
        entries = load_table(path, strict=settings.strict, permissive_signs=settings.permissive_signs)

        report = run_batch(entries, FAMILIES, jobs=settings.jobs if jobs is None else jobs)
        log_statistics(report)

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        output = Path(out) if out else settings.data_path / "reports" / f"table_statistics_{timestamp}.json"
        write_report(report, output)
    except Exception as e:
        logging.error(f"Error computing table statistics: {str(e)}")
        raise


if __name__ == "__main__":
    fire.Fire(table_statistics)
