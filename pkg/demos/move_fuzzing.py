"""
Random local-move fuzzing
=========================

Every computed value must survive planar isotopy moves: removing or
inserting a curl, cancelling or creating a clasp, sliding a strand
over a crossing.  random_perturb applies a seeded stream of such moves
and the value before and after must agree exactly.
"""

from skeinalg import evaluate, lookup, make_algebra
from skeinalg.moves import (apply_move, find_moves, parse_event,
                            random_perturb, replay_events)

gc = make_algebra("gen-conway")

d = lookup("fig8").diagram()
before = evaluate(d, gc)
print("figure-eight value:", before.text())
print()

for seed in range(5):
    perturbed, events = random_perturb(d, seed=seed, steps=12, cap=14)
    after = evaluate(perturbed, gc)
    status = "ok" if after == before else "VALUE CHANGED"
    print(f"seed {seed}: {len(events)} moves, "
          f"{perturbed.n_crossings} crossings, {status}")

print()

# Events are plain text, round-trippable, and replayable.
final, events = random_perturb(d, seed=3, steps=8)
print("seed 3 event list:")
for ev in events:
    assert parse_event(str(ev)) == ev
    print("  ", ev)
assert replay_events(d, events) == final
print("replaying the list reproduces the final diagram")
print()

# find_moves only ever offers value-preserving rewrites, so anything
# it returns can be applied blindly.
grown = apply_move(d, "R1+@e1/+o")
print("after one curl insertion:", grown.n_crossings, "crossings")
print("offered now:", ", ".join(str(e) for e in find_moves(grown)) or "(none)")
assert evaluate(grown, gc) == before
