"""Export the coset Bruhat order as a Graphviz digraph.

Writes coset_order_n4.dot next to this script; render it with
`dot -Tpdf coset_order_n4.dot -o coset_order_n4.pdf` if Graphviz is
installed.  Nodes carry the root, its height, and the length of the
longest coset element; edges are covering relations.
"""

import pathlib

from rootcosets import all_roots, hasse_covers
from rootcosets.cli import cmd_poset

N = 4

document = cmd_poset(N)
target = pathlib.Path(__file__).with_name(f"coset_order_n{N}.dot")
target.write_text(document)

covers = hasse_covers(N)
print(f"rank {N}: {len(all_roots(N))} cosets, {len(covers)} covering relations")
print(f"wrote {target}")
print()
print("covers, bottom to top:")
for a, b in covers:
    print(f"  {a} < {b}")
