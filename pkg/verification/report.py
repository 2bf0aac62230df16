"""Shared timing and report formatting for the verification suite."""
from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Dict, List, Sequence, TextIO, Tuple


class Timer:
    """Context manager for timing code blocks."""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *args):
        self.elapsed = time.perf_counter() - self.start


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one invariant check: worst residual against its tolerance."""
    group: str
    name: str
    worst: float
    tolerance: float
    elapsed: float = 0.0
    detail: str = ""

    @property
    def passed(self) -> bool:
        # NaN residuals never pass
        return self.worst <= self.tolerance

    def as_dict(self) -> Dict[str, object]:
        return {
            "group": self.group,
            "name": self.name,
            "worst": self.worst,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "elapsed_s": self.elapsed,
            "detail": self.detail,
        }


# =============================================================================
# Formatting
# =============================================================================

def format_time_ms(seconds: float) -> str:
    """Format time in milliseconds: '12.34ms'"""
    return f"{seconds * 1000:.2f}ms"


def format_residual(value: float) -> str:
    """Format a residual: '1.234e-13'"""
    return f"{value:.3e}"


# =============================================================================
# Report Formatting
# =============================================================================

def print_section_header(title: str, width: int = 80, stream: TextIO = sys.stdout):
    """Print section header with border."""
    print("\n" + "=" * width, file=stream)
    print(title, file=stream)
    print("=" * width, file=stream)


def print_metric(label: str, value: str, indent: int = 2, stream: TextIO = sys.stdout):
    """Print formatted metric: '  Label:             value'"""
    print(f"{' ' * indent}{label:<25} {value}", file=stream)


def print_table_header(columns: List[Tuple[str, int]], stream: TextIO = sys.stdout):
    """Print table header with column widths."""
    header = " ".join(f"{col:<{width}}" for col, width in columns)
    print(header, file=stream)
    print("-" * len(header), file=stream)


def print_table_row(values: List[str], widths: List[int], stream: TextIO = sys.stdout):
    """Print table row aligned to column widths."""
    row = " ".join(f"{val:<{width}}" for val, width in zip(values, widths))
    print(row, file=stream)


REPORT_COLUMNS: List[Tuple[str, int]] = [
    ("check", 44), ("worst", 11), ("tol", 9), ("time", 10), ("result", 6),
]


def print_report(results: Sequence[CheckResult], stream: TextIO = sys.stdout) -> None:
    """Pass/fail table grouped by module, worst residual per check."""
    widths = [width for _, width in REPORT_COLUMNS]
    current = None
    for result in results:
        if result.group != current:
            current = result.group
            print_section_header(current.upper(), stream=stream)
            print_table_header(REPORT_COLUMNS, stream=stream)
        print_table_row([
            result.name,
            format_residual(result.worst),
            f"{result.tolerance:.0e}",
            format_time_ms(result.elapsed),
            "PASS" if result.passed else "FAIL",
        ], widths, stream=stream)
    failed = [r for r in results if not r.passed]
    print_section_header("SUMMARY", stream=stream)
    print_metric("Checks:", str(len(results)), stream=stream)
    print_metric("Failed:", str(len(failed)), stream=stream)
    print_metric("Total time:", format_time_ms(sum(r.elapsed for r in results)), stream=stream)
    for result in failed:
        print_metric("FAIL", f"{result.group}/{result.name} ({result.detail})", stream=stream)
