import json
import os
from typing import Any, Dict, List, Tuple

import pytest

from direction_space.cli import main

# NOTE: because these tests run too slow in GitHub Actions
skip_in_github_actions = pytest.mark.skipif(os.getenv("GITHUB_ACTIONS") == "true", reason="Test skipped in GitHub Actions")


def run_cli(argv: List[str], capsys) -> Tuple[int, str, str]:
    """Run the command line entry point and return its exit code, stdout and stderr."""
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_cli_json(argv: List[str], capsys) -> Tuple[int, Dict[str, Any]]:
    code, out, _ = run_cli(argv, capsys)
    return code, json.loads(out)
