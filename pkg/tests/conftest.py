"""Shared helpers for the test suite."""

import pytest


@pytest.fixture
def criterion(capsys):
    """Context manager printing one pass/fail line per acceptance criterion."""
    from contextlib import contextmanager
    import time

    @contextmanager
    def run(number, name, seconds):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"criterion {number} ({name}): FAIL")
            raise
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"criterion {number} ({name}): PASS in {elapsed:.2f}s (limit {seconds}s)")
        assert elapsed < seconds, f"criterion {number} took {elapsed:.2f}s, limit {seconds}s"

    return run
