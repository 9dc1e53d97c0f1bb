"""Audit every catalog group up to order 60 and summarize the verdicts."""
from collections import Counter

from powergraph.catalog import build, catalog
from powergraph.classify import audit_group

labels = catalog(60)
print(len(labels), "groups, from", labels[0], "to", labels[-1])

claims = Counter()
failed = []
for label in labels:
    rep = audit_group(build(label))
    for v in rep.verdicts:
        claims[v.claim.split("[")[0]] += 1
    failed += [(label, c) for c in rep.disagreements]

for claim, n in sorted(claims.items()):
    print(f"{claim:40s} {n:4d}")
print("disagreements:", failed or "none")

# One report in detail.
rep = audit_group(build("Q8"))
for v in rep.verdicts:
    print(f"  {v.claim:32s} {v.kind:15s} structural={v.structural} search={v.brute_force} {v.note}")
