"""
Half-line incidence cones
=========================

Half-lines nu + s*omega in the quarter plane are cut to s > s0*|nu| and
joined whenever two of them meet.  Colouring each lattice point by the
component of the half-line from the origin through it shows cones: rays
and wedges whose count doubles with s0.
"""

from pathlib import Path

from weylfan.experiment import emit_figure, fibonacci_vertex_set, lower_semiquadrant_vertices, run_experiment

for s0 in range(4):
    exp = run_experiment(s0, window=17, s_max=100)
    print(f"s0={s0}: {len(exp.classes)} classes, {exp.n_degenerate} rays, {exp.n_components} components in total")

for c in exp.classes:
    kind = "ray  " if c.degenerate else "wedge"
    print(f"  {c.id:2d} {kind} vertex {c.vertex} slopes {c.directions[0]} .. {c.directions[1]}")

below = lower_semiquadrant_vertices(exp.classes)
print("vertices below the diagonal:", sorted(below))

# the Fibonacci description admits one extra point at s0 = 3
extra = fibonacci_vertex_set(3) - below
print("Fibonacci pairs that are not vertices:", sorted(extra))

out = Path("cones.svg")
out.write_bytes(emit_figure(exp.classes, "svg", window=17))
print("figure written to", out)
