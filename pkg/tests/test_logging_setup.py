import json
import logging

import structlog

from ddt.utils.logging_setup import configure_logging


def test_json_format_renders_stdlib_and_structlog_records(capsys):
    configure_logging("DEBUG", "json")
    logging.getLogger("ddt.tests").info("plain message")
    structlog.get_logger("ddt.tests").info("structured_event", trials=3)
    lines = [json.loads(line) for line in capsys.readouterr().err.splitlines()]
    assert lines[0]["event"] == "plain message"
    assert lines[0]["level"] == "info"
    assert lines[1]["event"] == "structured_event"
    assert lines[1]["trials"] == 3
    assert lines[1]["logger"] == "ddt.tests"


def test_level_filters_records(capsys):
    configure_logging("WARNING", "console")
    logging.getLogger("ddt.tests").info("hidden")
    logging.getLogger("ddt.tests").warning("shown")
    err = capsys.readouterr().err
    assert "hidden" not in err
    assert "shown" in err
