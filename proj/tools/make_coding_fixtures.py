#!/usr/bin/env python3
"""Generate the coding-theory MIS benchmark graphs as DIMACS files.

Vertices are the binary words of length L (vertex k+1 is the word with value
k, most significant bit first). Two words are adjacent when a single channel
error pattern can confuse them:

  1dc  one deletion        balls of single deletions intersect
  2dc  two deletions       balls of double deletions intersect
  1tc  one transposition   adjacent swap balls intersect (non-cyclic)
  1et  one end-around transposition  as 1tc, cyclic
  1zc  one Z-channel error balls of single 1->0 flips intersect

Usage: make_coding_fixtures.py OUT_DIR [--max-size N]
"""

import argparse
import itertools
import pathlib
from collections import defaultdict


def deletions(word, k):
    out = {word}
    for _ in range(k):
        out = {w[:i] + w[i + 1:] for w in out for i in range(len(w))}
    return out


def transpositions(word, cyclic):
    n = len(word)
    out = {word}
    for i in range(n if cyclic else n - 1):
        j = (i + 1) % n
        chars = list(word)
        chars[i], chars[j] = chars[j], chars[i]
        out.add("".join(chars))
    return out


def z_channel(word):
    out = {word}
    for i, c in enumerate(word):
        if c == "1":
            out.add(word[:i] + "0" + word[i + 1:])
    return out


FAMILIES = {
    "1dc": lambda w: deletions(w, 1),
    "2dc": lambda w: deletions(w, 2),
    "1tc": lambda w: transpositions(w, False),
    "1et": lambda w: transpositions(w, True),
    "1zc": z_channel,
}

SIZES = {
    "1dc": [64, 128, 256, 512, 1024, 2048, 4096],
    "2dc": [128, 256, 512, 1024, 2048],
    "1tc": [8, 16, 32, 64, 128, 256, 512, 1024, 2048],
    "1et": [64, 128, 256, 512, 1024, 2048],
    "1zc": [128, 256, 512, 1024, 2048, 4096],
}


def build_edges(family, n):
    length = n.bit_length() - 1
    ball = FAMILIES[family]
    holders = defaultdict(list)
    for v in range(n):
        for w in ball(format(v, "0%db" % length)):
            holders[w].append(v)
    edges = set()
    for vs in holders.values():
        edges.update(itertools.combinations(vs, 2))
    return sorted(edges)


def write_dimacs(path, n, edges):
    with open(path, "w") as f:
        f.write("c %s\n" % path.stem)
        f.write("p edge %d %d\n" % (n, len(edges)))
        for u, v in edges:
            f.write("e %d %d\n" % (u + 1, v + 1))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out_dir", type=pathlib.Path)
    ap.add_argument("--max-size", type=int, default=512)
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for family, sizes in SIZES.items():
        for n in sizes:
            if n > args.max_size:
                continue
            edges = build_edges(family, n)
            path = args.out_dir / ("%s.%d.dimacs" % (family, n))
            write_dimacs(path, n, edges)
            print("%s.%d: %d vertices, %d edges" % (family, n, n, len(edges)))


if __name__ == "__main__":
    main()
