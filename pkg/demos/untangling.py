"""Crossing switches unknot everything: untangling certificates.

Any diagram can be taken to a crossingless one using crossing switches
plus value-preserving moves.  trivialize emits the event list; replaying
it is an independently checkable certificate that the sequence works.
"""

from skeinalg import bundled_catalog, lookup
from skeinalg.moves import apply_move, replay_events, trivialize

# One certificate in detail.
tref = lookup("trefoil+").diagram()
events = trivialize(tref)
print("trefoil certificate:")
cur = tref
for ev in events:
    cur = apply_move(cur, ev)
    print(f"  {str(ev):12s} -> {cur.n_crossings} crossings")
print()

# The profile across the whole bundled corpus.  Switches (CC) and
# triangle slides (R3) keep the crossing count; R1-/R2- strictly
# shrink it; the count never goes up.
print(f"{'name':14s} {'crossings':>9s} {'events':>6s} {'switches':>8s}")
for entry in bundled_catalog():
    d = entry.diagram()
    evs = trivialize(d)
    final = replay_events(d, evs)
    assert final.n_crossings == 0
    assert final.component_count == d.component_count
    switches = sum(1 for e in evs if e.kind == "CC")
    print(f"{entry.name:14s} {entry.crossings:>9d} {len(evs):>6d} "
          f"{switches:>8d}")
