"""Test configuration for the wafix test suite."""
from __future__ import annotations

from pathlib import Path

import pytest

from wafix.config.model import RunConfiguration
from wafix.ingest import char_edit_distance
from wafix.ingest.model import CodePair, PairMeta
from wafix.rules import RuleSet, load_default_rules


@pytest.fixture(scope="session")
def default_rules() -> RuleSet:
    """Shipped rule set, loaded once per session."""
    return load_default_rules()


@pytest.fixture
def config() -> RunConfiguration:
    """Default run configuration."""
    return RunConfiguration()


@pytest.fixture
def make_pair():
    """Factory of code pairs from two sources."""

    def _make_pair(
        wa: str,
        ac: str,
        pair_id: str = "s1:s2",
        user_id: str = "u1",
        problem_id: str = "P1",
    ) -> CodePair:
        return CodePair(
            pair_id=pair_id,
            user_id=user_id,
            problem_id=problem_id,
            wa=wa,
            ac=ac,
            wa_submitted_at=1,
            ac_submitted_at=2,
            char_edit_distance=char_edit_distance(wa, ac),
            meta=PairMeta(
                total_submissions_at_time=1,
                attempts_to_problem=1,
                is_first_acceptance=True,
            ),
        )

    return _make_pair


@pytest.fixture
def intro_file(tmp_path: Path) -> Path:
    """Introductory problem list naming P1 and P2."""
    path = tmp_path / "intro.txt"
    path.write_text("# introductory problems\nP1\n\nP2\n", encoding="utf-8")
    return path
