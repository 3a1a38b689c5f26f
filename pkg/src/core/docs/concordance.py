"""
Markdown concordance rendered from the annotation registry
"""

import importlib
import re
from pathlib import Path
from typing import List, Optional

from .registry import REGISTRY, REQUIRED_RESULTS, ConcordanceEntry


ANNOTATED_MODULES = (
    "algebra.combinat",
    "lefschetz.detformula",
    "lefschetz.syzgap",
    "lefschetz.syzygies",
    "lefschetz.oracle",
    "lefschetz.classify",
    "lefschetz.conjectures",
)


def load_registry() -> None:
    """Import every annotated module so its decorators run"""
    package = __name__.rsplit(".", 2)[0]
    for module in ANNOTATED_MODULES:
        importlib.import_module(f"{package}.{module}")


def missing_results() -> List[str]:
    load_registry()
    return [result for result in REQUIRED_RESULTS if result not in REGISTRY]


def unexpected_results() -> List[str]:
    """Registered results that are not in the required list"""
    load_registry()
    return sorted(result for result in REGISTRY if result not in REQUIRED_RESULTS)


def _test_exists(root: Path, test_id: str) -> bool:
    path, _, rest = test_id.partition("::")
    source_file = root / path
    if not source_file.exists():
        return False
    source = source_file.read_text()
    for part in rest.split("::"):
        keyword = "class" if part[:1].isupper() else "def"
        if not re.search(rf"^\s*{keyword} {re.escape(part)}\b", source, re.MULTILINE):
            return False
    return True


def orphaned_tests(root: Optional[Path] = None) -> List[str]:
    """Cited tests that do not exist under `root` (the repository root)"""
    load_registry()
    root = root or Path(__file__).resolve().parents[3]
    return [
        test_id
        for entry in REGISTRY.values()
        for test_id in entry.tests
        if not _test_exists(root, test_id)
    ]


def _cell(text: str) -> str:
    return text.replace("|", "\\|")


def _row(entry: ConcordanceEntry) -> str:
    tests = "<br>".join(f"`{test}`" for test in entry.tests)
    return (
        f"| {_cell(entry.result)} | {_cell(entry.statement)} | `{entry.location}` | `{entry.operation}` "
        f"| {tests} | {entry.status} |"
    )


def generate_concordance() -> str:
    """Results in REQUIRED_RESULTS order with their operations and tests"""
    load_registry()
    lines = [
        "# Concordance",
        "",
        "Generated by `lefschetz concordance`; do not edit by hand.",
        "",
        "| Result | Statement | Location | Operation | Tests | Status |",
        "|---|---|---|---|---|---|",
    ]
    for result in REQUIRED_RESULTS:
        entry = REGISTRY.get(result)
        if entry is None:
            lines.append(f"| {_cell(result)} | | | **missing** | | |")
        else:
            lines.append(_row(entry))
    return "\n".join(lines) + "\n"
