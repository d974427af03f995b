"""Mutating a truncated G^- quiver produces Kirillov-Reshetikhin characters."""

from qaffine import cluster

l, depth = 2, 10
q = cluster.build_gminus(l, depth)
print(f"G^- truncated at depth {depth}: {len(q.vertices)} vertices, "
      f"{len(q.arrows())} arrows, {len(q.frozen)} frozen")
print("column order of one round:", cluster.round_columns(l))

seed = cluster.initial_seed(l, depth)
v = (2, 0)
print(f"initial variable at {v}: {seed.variable(v)}")
seed = cluster.mutate(seed, v)
print(f"after mutating at {v}: {seed.variable(v)}")

rep = cluster.verify_kr_correspondence(l, depth)
print(f"\n{rep.rounds} rounds, compared against a depth-{rep.check_depth} run")
for line in rep.lines()[:6]:
    print(" ", line)
print(f"  ... {len(rep.stable)} of {len(rep.vertices)} vertices stable, all match: {rep.ok}")
print("  lowest stable r per column:", rep.boundary)
