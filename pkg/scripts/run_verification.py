"""Run every suite, write one JSON report per suite plus the matrix dumps.

    python scripts/run_verification.py [OUTDIR]
"""

import sys
from pathlib import Path

from ncdegen.cli import verify
from ncdegen.config import VerifyConfig
from ncdegen.report import SUITES


def main(outdir="results"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    status = verify(VerifyConfig("all", str(out / "all.json"), str(out / "matrices"), quiet=True))
    for name in SUITES:
        status |= verify(VerifyConfig(name, str(out / f"{name}.json"), quiet=True))
    return status


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
