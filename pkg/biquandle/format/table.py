import logging
from pathlib import Path
from typing import Union

import pandas as pd
from pydantic import ValidationError

from biquandle.models.table import TableEntry


class TableLoadError(ValueError):
    """Problems found while loading a knot table; `problems` lists them with line numbers"""

    def __init__(self, path: Union[str, Path], problems: list[str]) -> None:
        self.path = str(path)
        self.problems = problems
        super().__init__(f"{len(problems)} problem(s) in {path}: " + "; ".join(problems[:5]))


def _describe(error: ValidationError) -> str:
    return "; ".join(str(e.get("msg", "")) for e in error.errors())


def load_table(file_path: Union[str, Path], strict: bool = False, permissive_signs: bool = False) -> list[TableEntry]:
    """
    Load and validate a knot table.

    One entry per line as `name<TAB>gauss_code`; blank lines and lines starting with '#' are skipped.

    Args:
        file_path: path to the table
        strict: any bad line makes the whole load fail with TableLoadError
        permissive_signs: real passes without a sign default to '+'
    """
    entries: list[TableEntry] = []
    problems: list[str] = []
    seen: set[str] = set()
    context = {"permissive_signs": permissive_signs}
    with open(file_path, "r") as file:
        for line_number, line in enumerate(file, start=1):
            text = line.rstrip("\n")
            if not text.strip() or text.lstrip().startswith("#"):
                continue
            name, sep, code = text.partition("\t")
            if not sep:
                problems.append(f"line {line_number}: expected name<TAB>gauss_code")
                continue
            try:
                entry = TableEntry.model_validate({"name": name, "code": code}, context=context)
            except ValidationError as e:
                problems.append(f"line {line_number} ({name.strip()}): {_describe(e)}")
                continue
            if entry.name in seen:
                problems.append(f"line {line_number}: duplicate name {entry.name}")
                continue
            seen.add(entry.name)
            entries.append(entry)

    for problem in problems:
        logging.warning(f"Skipping table line, {problem}")
    if problems and strict:
        raise TableLoadError(file_path, problems)
    logging.info(f"Loaded {len(entries)} table entries from {file_path}")
    return entries


def table_to_dataframe(entries: list[TableEntry]) -> pd.DataFrame:
    df = pd.DataFrame([entry.model_dump() for entry in entries], columns=["name", "code"])
    if not df.empty:
        df["crossings"] = [entry.diagram().crossing_count for entry in entries]
        df["virtual_crossings"] = [entry.diagram().virtual_count for entry in entries]
        df["components"] = [entry.diagram().component_count for entry in entries]
    return df
