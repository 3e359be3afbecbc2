#!/usr/bin/env python3
"""Build the signature atlas (classification, chains, splits) as JSON."""

import sys

sys.path.insert(0, "src")

from cliffordkit.cli import main

if __name__ == "__main__":
    argv = sys.argv[1:] or ["--max-n", "8", "--out", "atlas.json"]
    raise SystemExit(main(["atlas"] + argv))
