"""
The crystal component of the empty partition
============================================

Builds the n = 3 component up to size 8, prints the layer census, and writes
the DOT rendering (members of the restriction-irreducible family are starred,
mirroring the usual picture of this graph).
"""

from slnbranch import build_component, format_partition

graph = build_component(3, 8)

print(f"vertices: {len(graph.vertices)}, edges: {len(graph.edges)}")
for size, count in sorted(graph.counts_by_size().items()):
    print(f"  size {size}: {count} vertices")

starred = [format_partition(p) for p in graph.vertices if graph.js[p]]
print(f"starred vertices ({len(starred)}): {', '.join(starred)}")

with open("crystal_n3.dot", "w") as handle:
    handle.write(graph.to_dot())
print("wrote crystal_n3.dot (render with: dot -Tpdf crystal_n3.dot -o crystal_n3.pdf)")
