import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from itertools import permutations
from pathlib import Path
from typing import Optional, Sequence, Union

import pandas as pd
from tqdm import tqdm

from biquandle.engine import compute_invariant
from biquandle.models.batch import BatchReport, BatchRow, BatchSummary, ConjectureViolation, Detection
from biquandle.models.table import TableEntry
from biquandle.switches import Family

CSV_COLUMNS = [
    "name",
    "family",
    "polynomial",
    "writhe",
    "n_o_bound",
    "n_real_bound",
    "n_v_bound",
    "nonclassical",
    "odd_evidence",
    "base_point_dependent",
    "error",
    "crossings",
    "z_span",
]


def evaluate_entry(entry: TableEntry, family: str, quaternion_units: Optional[Sequence[str]] = None) -> BatchRow:
    """One batch row; failures are recorded in the row instead of raised"""
    diagram = entry.diagram()
    try:
        result = compute_invariant(diagram, family, quaternion_units)
    except Exception as e:
        logging.warning(f"Failed to compute {family} for {entry.name}: {e}")
        return BatchRow(name=entry.name, family=family, crossings=diagram.crossing_count, error=str(e))
    bounds = result.bounds
    return BatchRow(
        name=entry.name,
        family=family,
        polynomial=str(result.canonical),
        writhe=result.writhe,
        crossings=diagram.crossing_count,
        n_o_bound=bounds.n_o_bound,
        n_real_bound=bounds.n_real_bound,
        n_v_bound=bounds.n_v_bound,
        z_span=bounds.z_span,
        nonclassical=bounds.flags.nonclassical,
        odd_evidence=bounds.flags.has_odd_crossing_evidence,
        base_point_dependent=bounds.flags.base_point_dependent,
    )


def _name_key(name: str) -> tuple[tuple[int, Union[int, str]], ...]:
    return tuple((0, int(part)) if part.isdigit() else (1, part) for part in name.split("."))


def sort_rows(rows: list[BatchRow], families: Sequence[str]) -> list[BatchRow]:
    order = {family: i for i, family in enumerate(families)}
    return sorted(rows, key=lambda r: (_name_key(r.name), r.name, order.get(r.family, len(order)), r.family))


def summarize(rows: list[BatchRow], families: Sequence[str]) -> BatchSummary:
    """Counts per family and cross-family detections, recomputed from the rows"""
    summary = BatchSummary(entries=len({row.name for row in rows}))
    by_family: dict[str, dict[str, BatchRow]] = {family: {} for family in families}
    for row in rows:
        by_family.setdefault(row.family, {})[row.name] = row
    for family, family_rows in by_family.items():
        ok = [row for row in family_rows.values() if row.error is None]
        summary.zero[family] = sum(1 for row in ok if row.is_zero)
        summary.nonzero[family] = sum(1 for row in ok if not row.is_zero)
        summary.errors[family] = len(family_rows) - len(ok)
    for zero_in, nonzero_in in permutations(by_family, 2):
        count = 0
        for name, row in by_family[zero_in].items():
            other = by_family[nonzero_in].get(name)
            if row.error is None and other is not None and other.error is None and row.is_zero and not other.is_zero:
                count += 1
        summary.detections.append(Detection(zero_in=zero_in, nonzero_in=nonzero_in, count=count))
    return summary


def conjecture_violations(rows: list[BatchRow]) -> list[ConjectureViolation]:
    """Rows whose z-span exceeds the real crossing count"""
    return [
        ConjectureViolation(name=row.name, family=row.family, z_span=row.z_span, crossings=row.crossings)
        for row in rows
        if row.z_span is not None and row.crossings is not None and row.z_span > row.crossings
    ]


def build_report(rows: list[BatchRow], families: Sequence[str]) -> BatchReport:
    ordered = sort_rows(rows, families)
    return BatchReport(
        entries=ordered,
        summary=summarize(ordered, families),
        conjecture_violations=conjecture_violations(ordered),
    )


def run_batch(
    entries: list[TableEntry],
    families: Sequence[str],
    jobs: int = 1,
    quaternion_units: Optional[Sequence[str]] = None,
) -> BatchReport:
    """
    Compute every family for every entry.

    Args:
        entries: validated table entries
        families: rule family names
        jobs: worker processes; 1 evaluates in this process
        quaternion_units: (U, V) for the quaternionic families
    """
    family_names = [Family.lookup(family).value for family in families]
    tasks = [(entry, family) for entry in entries for family in family_names]
    rows: list[BatchRow] = []
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [executor.submit(evaluate_entry, entry, family, quaternion_units) for entry, family in tasks]
            for future in tqdm(as_completed(futures), total=len(futures), desc="Invariants"):
                rows.append(future.result())
    else:
        for entry, family in tqdm(tasks, desc="Invariants"):
            rows.append(evaluate_entry(entry, family, quaternion_units))

    report = build_report(rows, family_names)
    logging.info(f"Batch finished: {report.summary.entries} entries, {len(rows)} rows")
    return report


def write_report(report: BatchReport, file_path: Union[str, Path]) -> Path:
    """Write a report as CSV (rows only) or JSON (rows, summary, conjecture violations)"""
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if path.suffix == ".json":
        path.write_text(report.model_dump_json(indent=2) + "\n")
    elif path.suffix == ".csv":
        df = pd.DataFrame([row.model_dump() for row in report.entries], columns=CSV_COLUMNS)
        df.to_csv(path, index=False)
    else:
        raise ValueError(f"Unsupported report format {path.suffix!r}; use .csv or .json")
    logging.info(f"Report saved to {path}")
    return path


def load_report(file_path: Union[str, Path]) -> BatchReport:
    """Re-read a CSV or JSON report; the summary is recomputed from its rows"""
    path = Path(file_path)
    if path.suffix == ".json":
        rows = BatchReport.model_validate_json(path.read_text()).entries
    elif path.suffix == ".csv":
        df = pd.read_csv(path, dtype=str, keep_default_na=False)
        rows = [BatchRow(**record) for record in df.to_dict(orient="records")]
    else:
        raise ValueError(f"Unsupported report format {path.suffix!r}; use .csv or .json")
    families = list(dict.fromkeys(row.family for row in rows))
    return build_report(rows, families)
