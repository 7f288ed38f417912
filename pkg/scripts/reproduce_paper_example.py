"""Print the six worked-example values on the 0 < u < 1 chain and compare them with the golden table."""
from __future__ import annotations

import argparse
import sys

from relcat import cli


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--format", choices=("text", "json"), default="text")
    args = p.parse_args(argv)
    return cli.main(["paper-example", "--format", args.format])


if __name__ == "__main__":
    sys.exit(main())
