# verification/__init__.py
"""
Verification module: the timed invariant suite behind `main.py verify`.

Provides:
- Timer, CheckResult and report printing (from report.py)
- SuiteConfig and run_suite over every module's invariants (from suite.py)
"""

from verification.report import CheckResult, Timer, print_report
from verification.suite import Suite, SuiteConfig, run_suite

__all__ = [
    "CheckResult",
    "Suite",
    "SuiteConfig",
    "Timer",
    "print_report",
    "run_suite",
]
