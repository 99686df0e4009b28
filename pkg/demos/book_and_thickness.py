"""Book thickness and thickness next to the level numbers."""

from levelgraph import book_thickness, generate, parse_family, thickness, validate_inequalities
from levelgraph.invariants import book_embedding

g = generate(parse_family("K6"))
pages, order, assignment = book_embedding(g)
print(f"K6 fits in {pages} pages with printing cycle {order.vertices}")
for p in range(pages):
    print(f"  page {p}: {[e for e, q in zip(g.edges, assignment) if q == p]}")

print("bt(K4,4) =", book_thickness(generate(parse_family("K4,4"))))
print("theta(K6) =", thickness(g))

for name in ("K5", "K6", "K3,3", "M8"):
    report = validate_inequalities(generate(parse_family(name)), name)
    print(name, dict(report.checks), "passed" if report.passed else "FAILED")
