#!/usr/bin/env python3
"""Regenerate tables 1, 3, 4 and 6 and write each diff to a directory.

    python3 scripts/regenerate_tables.py --out table_runs --max-rank 8
"""

import argparse
import contextlib
import io
import time
from pathlib import Path

from hwbound.cli import main as cli_main


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(argv)
    return code, buf.getvalue()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("table_runs"))
    ap.add_argument("--max-rank", type=int, default=12)
    ap.add_argument("--against", choices=("printed", "corrected"), default="printed")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for table in ("1", "3", "4", "6"):
        argv = ["tables", table, "--against", args.against, "--ranks", f"3..{args.max_rank}",
                "--max-rank", str(args.max_rank), "--cap", "1000"]
        t0 = time.perf_counter()
        code, out = run(argv)
        (args.out / f"table{table}.txt").write_text(out)
        status = {0: "match", 3: "mismatch"}.get(code, f"exit {code}")
        print(f"table {table}: {status:9s} {time.perf_counter() - t0:6.1f}s  -> {args.out}/table{table}.txt")


if __name__ == "__main__":
    main()
