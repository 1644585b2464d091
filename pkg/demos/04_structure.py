"""Structural analytics: components, paths, assortativity, equivalence, wedges.

Everything that describes a layer as a whole rather than one actor.
"""

from tieplex import (
    LayerParams,
    LayerSpec,
    degree_assortativity,
    generate_synthetic,
    largest_scc,
    layer_summary,
    path_stats,
    strongly_connected_components,
    structural_equivalence,
    wedge_closure,
)

g, _ = generate_synthetic(
    seed=7,
    n_nodes=50,
    layers=[
        LayerParams("strong", 0.05, 0.85),
        LayerParams("weak", 0.10, 0.10),
    ],
    aggregates=[LayerSpec.aggregate("all", "strong", "weak")],
)

view = g.view("all")

components = strongly_connected_components(view)
sizes = sorted((len(c) for c in components), reverse=True)
print(f"strongly connected components: {len(components)}, sizes {sizes[:6]}{'...' if len(sizes) > 6 else ''}")

giant = largest_scc(view)
stats = path_stats(view, giant)
print(f"largest component: {len(giant)} nodes, avg path {stats.avg_path:.3f}, diameter {stats.diameter}")
print(f"degree assortativity (undirected projection): {degree_assortativity(view):.4f}")
print()

print("summary rows, one per layer:")
for name in g.layer_names:
    s = layer_summary(g.view(name))
    print(
        f"  {s.layer:7s} |V|={s.n_nodes} |E|={s.n_edges:3d} deg={s.avg_total_degree:5.2f}"
        f" assor={s.assortativity:7.4f} scc={s.scc_nodes:2d}/{s.scc_edges:3d}"
        f" path={s.avg_path:5.3f} diam={s.diameter}"
    )
print()

print("structural equivalence on 'strong' (exact metric triples):")
classes = structural_equivalence(g.view("strong"), tolerance=0.0)
grouped = [c for c in classes if len(c.members) > 1]
print(f"  {len(classes)} classes, {len(grouped)} with more than one member")
for c in grouped[:4]:
    members = ",".join(g.node_label(m) for m in c.members)
    print(f"  members [{members}] share r={c.reciprocity:.3f}"
          f" cycle={c.cycle_closure:.3f} triplet={c.triplet_closure:.3f}")
print()

print("wedge closure: do strong two-paths close, and with what kind of tie?")
report = wedge_closure(g, "strong", ["strong", "weak"])
print(f"  {report.total} strong wedges")
for name in ("strong", "weak", "any"):
    print(f"  closed by {name:6s}: {report.closed[name]:4d} ({report.pct[name]:.2f} %)")
