#!/usr/bin/env python3
"""Fetch the Sampson monastery network and convert it to an edge list.

The repository does not bundle the dataset itself; it ships a synthetic
stand-in (data/sampson_standin.edges) with the same summary statistics for
CI. Run this script to replace the stand-in with the real network: it
downloads one of the known mirrors of Sampson's monastery data, symmetrizes
the directed relations into undirected acquaintance links, and writes
data/sampson.edges in the tool's edge-list format (one "i j" pair per line,
0-based dense ids, '#' comments).

If your mirror of choice is unreachable, download the UCINET file manually
and invoke this script with --convert <path-to-sampson.dat>.
"""

import argparse
import re
import sys
import urllib.request
from pathlib import Path

MIRRORS = [
    # KONECT packaging of the monastery data.
    "http://konect.cc/files/download.tsv.moreno_sampson.tar.bz2",
    # UCI / UCINET dataset page (DL format).
    "http://vlado.fmf.uni-lj.si/pub/networks/data/ucinet/sampson.dat",
]


def convert_dl_matrix(text: str, out_path: Path) -> None:
    """Extract the first relation matrix of a UCINET DL file and symmetrize."""
    lines = [ln.strip() for ln in text.splitlines()]
    n = None
    for ln in lines:
        m = re.search(r"n[ =]+(\d+)", ln, re.IGNORECASE)
        if m:
            n = int(m.group(1))
            break
    if n is None:
        raise ValueError("could not find the node count in the DL header")
    rows = []
    for ln in lines:
        fields = ln.split()
        if len(fields) == n and all(re.fullmatch(r"-?\d+", f) for f in fields):
            rows.append([int(f) for f in fields])
        if len(rows) == n:
            break
    if len(rows) != n:
        raise ValueError("could not read a full %d x %d relation matrix" % (n, n))
    edges = set()
    for i in range(n):
        for j in range(n):
            if i != j and (rows[i][j] > 0 or rows[j][i] > 0):
                edges.add((min(i, j), max(i, j)))
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w") as out:
        out.write("# Sampson monastery network, symmetrized to undirected links\n")
        for i, j in sorted(edges):
            out.write(f"{i} {j}\n")
    print(f"wrote {len(edges)} undirected links for {n} nodes to {out_path}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data/sampson.edges")
    parser.add_argument("--convert", help="convert a local UCINET DL file instead of downloading")
    args = parser.parse_args()

    if args.convert:
        convert_dl_matrix(Path(args.convert).read_text(errors="replace"), Path(args.out))
        return 0

    for url in MIRRORS:
        try:
            print(f"trying {url} ...")
            with urllib.request.urlopen(url, timeout=30) as resp:
                payload = resp.read()
        except Exception as exc:  # noqa: BLE001 - report and try the next mirror
            print(f"  failed: {exc}")
            continue
        if url.endswith(".dat"):
            convert_dl_matrix(payload.decode(errors="replace"), Path(args.out))
            return 0
        print("  downloaded an archive; unpack it and rerun with --convert <sampson.dat>")
        archive = Path(args.out).with_suffix(".tar.bz2")
        archive.write_bytes(payload)
        print(f"  saved to {archive}")
        return 0
    print("all mirrors failed; fetch the dataset manually and use --convert", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
