#!/usr/bin/env python3
"""
Pytest plugin to add emoji flair to test output, plus shared fixtures
for the multiplet engine tests
"""

import time

import pytest

from src.cli import main as cli_main
from src.multiplets import build
from src.rootsys import default_root_system


class EmojiTestReporter:
    """Custom pytest plugin for enhanced visual output with emojis"""

    def __init__(self):
        self.session_start_time = None
        self.test_results = []

    def pytest_sessionstart(self, session):
        self.session_start_time = time.time()
        print("\n🚀 G2(2) MULTIPLET ENGINE TEST SESSION STARTING")
        print("=" * 60)

    def pytest_runtest_logreport(self, report):
        """Collect call-phase outcomes for the closing summary"""
        if report.when != "call":
            return
        test_name = report.nodeid.split("::")[-1]
        if report.outcome == "passed":
            self.test_results.append(("✅", test_name, "PASSED"))
        elif report.outcome == "failed":
            self.test_results.append(("❌", test_name, "FAILED"))
        elif report.outcome == "skipped":
            self.test_results.append(("⏭️", test_name, "SKIPPED"))

    def pytest_sessionfinish(self, session, exitstatus):
        duration = time.time() - self.session_start_time if self.session_start_time else 0
        passed = len([r for r in self.test_results if r[2] == "PASSED"])
        failed = len([r for r in self.test_results if r[2] == "FAILED"])
        total = len(self.test_results)

        print("\n" + "=" * 60)
        print("🏁 TEST SESSION COMPLETE")
        print(f"📊 {total} tests, ✅ {passed} passed, ❌ {failed} failed in {duration:.2f}s")
        if failed == 0 and total > 0:
            print("🎉 ALL TESTS PASSED!")
        elif failed > 0:
            print("💥 SOME TESTS FAILED!")
        else:
            print("⚠️  NO TESTS RAN")
        print("=" * 60)


_emoji_reporter = EmojiTestReporter()


def pytest_sessionstart(session):
    _emoji_reporter.pytest_sessionstart(session)


def pytest_runtest_logreport(report):
    _emoji_reporter.pytest_runtest_logreport(report)


def pytest_sessionfinish(session, exitstatus):
    _emoji_reporter.pytest_sessionfinish(session, exitstatus)


# ----------------------------------------------------------------------
# Shared fixtures


@pytest.fixture(scope="session")
def g2():
    """The canonical G2 root system"""
    return default_root_system()


@pytest.fixture(scope="session")
def main_multiplet():
    """Main multiplet at (1, 1) induced from the minimal parabolic"""
    return build(1, 1, "P0")


@pytest.fixture
def cli_runner(capsys):
    """Run the CLI in-process; returns (exit code, stdout, stderr)"""

    def run(*argv):
        code = cli_main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
