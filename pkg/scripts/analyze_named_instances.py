#!/usr/bin/env python3
"""Print the invariant table for the named small instances.

Usage:
    python scripts/analyze_named_instances.py [--kmax 3]

Covers cycles, paths, complete bipartite graphs, and the Petersen graph:
vertex connectivity, matching number, extendibility number, and the
witness behind each negative extendibility verdict.
"""

from __future__ import annotations

import argparse

from kextend import (
    complete_bipartite,
    cycle_graph,
    extendibility_number,
    from_edges,
    is_k_extendible,
    matching_number,
    path_graph,
    to_graph6,
    vertex_connectivity,
)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


INSTANCES = [
    ("C4", cycle_graph(4)),
    ("P4", path_graph(4)),
    ("C6", cycle_graph(6)),
    ("C8", cycle_graph(8)),
    ("K33", complete_bipartite(3, 3)),
    ("K44", complete_bipartite(4, 4)),
    ("Petersen", petersen()),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=3)
    args = parser.parse_args()

    header = f"{'name':10} {'graph6':12} {'kappa':>5} {'alpha':>5} {'ext':>4}"
    print(header)
    print("-" * len(header))
    for name, g in INSTANCES:
        kappa, _ = vertex_connectivity(g)
        ext = extendibility_number(g)
        print(f"{name:10} {to_graph6(g):12} {kappa:>5} "
              f"{matching_number(g):>5} {str(ext):>4}")
        for k in range(args.kmax + 1):
            cert = is_k_extendible(g, k)
            if cert.verdict:
                continue
            detail = cert.reason
            if cert.witness is not None:
                detail += f", blocked matching {list(cert.witness.edges)}"
            print(f"{'':10} k={k}: no ({detail})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
