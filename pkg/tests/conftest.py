import json
from pathlib import Path

import pytest

from tracegrid import GenConfig, ThreadSpec, parse_csv

FIXTURES = Path(__file__).parent / "fixtures"


def jedit_config() -> GenConfig:
    return GenConfig(
        seed=2011,
        threads=(
            ThreadSpec("main", 5, 1),
            ThreadSpec("AWT-EventQueue-0", 4, 1),
            ThreadSpec("Thread-0", 0, 8),
        ),
        classes=(
            ("org.gjt.sp.jedit.GUIUtilities", 10),
            ("java.util.Vector", 2),
            ("java.util.LinkedList", 2),
            ("java.lang.String", 1),
            ("org.gjt.sp.jedit.EditBus", 1),
        ),
        event_count=5000,
        destroy_fraction=0.3,
        start_time=1315936080,
        time_step=1,
    )


@pytest.fixture(scope="session")
def jedit_log():
    text = (FIXTURES / "jedit_like.csv").read_text()
    return parse_csv(text, source_name="jedit_like.csv")


@pytest.fixture(scope="session")
def color_table():
    return json.loads((FIXTURES / "colors.json").read_text())
