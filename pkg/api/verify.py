"""`verify`: run a suite of structural checks and emit one JSON report."""
import json
import logging
from typing import TextIO

from models.run_config import RunConfig
from services.verification import run_suite

from api.common import run_header

logger = logging.getLogger(__name__)


def run(config: RunConfig, out: TextIO) -> int:
    logger.info(f"verify suite={config.suite} seed={config.seed}")
    reports = run_suite(config.suite, config.seed, config.workers)
    for r in reports:
        if not r.passed:
            logger.warning(f"check failed: {r.suite}/{r.name}: expected {r.expected}, computed {r.computed}")
    passed = all(r.passed for r in reports)
    document = {
        **run_header(config),
        "passed": passed,
        "checks": [
            {
                "check": r.name,
                "suite": r.suite,
                "parameters": r.parameters,
                "expected": r.expected,
                "computed": r.computed,
                "pass": r.passed,
            }
            for r in reports
        ],
    }
    out.write(json.dumps(document, indent=2, ensure_ascii=False) + "\n")
    return 0 if passed else 1
