"""
The bundled diagram corpus, and tables of values over it
========================================================

The package ships a CSV of verified diagrams: torus links, twist and
rational knots through seven crossings, the standard small links.
Every row is re-validated against its parsed diagram at load time.
"""

from skeinalg import bundled_catalog, evaluate, make_algebra

corpus = bundled_catalog()
print(len(corpus), "entries")
print()

print(f"{'name':14s} {'cr':>3s} {'comps':>5s} {'writhe':>6s}  comment")
for e in corpus[:12]:
    print(f"{e.name:14s} {e.crossings:>3d} {e.components:>5d} "
          f"{e.writhe:>6d}  {e.comment}")
print("...")
print()

# A small table of values.  The command-line equivalent is
#   skeinalg table --algebra homflypt --output values.csv
# which also supports an on-disk cache of result records.
hf = make_algebra("homflypt")
memo = {}
print(f"{'name':14s} homflypt value")
for e in corpus:
    if e.crossings > 5:
        continue
    value = evaluate(e.diagram(), hf, memo=memo)
    print(f"{e.name:14s} {value.text()}")
