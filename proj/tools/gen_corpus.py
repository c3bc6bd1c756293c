#!/usr/bin/env python3
"""Writes every connected graph on 1..7 vertices (one per isomorphism class) as graph6.

The networkx graph atlas lists all graphs up to 7 vertices; this keeps the
connected ones. Usage: gen_corpus.py [out-file]
"""
import sys

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_upto7.g6"
    graphs = [g for g in graph_atlas_g() if g.number_of_nodes() > 0 and nx.is_connected(g)]
    with open(out, "w") as f:
        for g in graphs:
            f.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
    print(f"{len(graphs)} graphs -> {out}")


if __name__ == "__main__":
    main()
