"""Run the extractor on 7- and 8-chromatic instances and tally which branch
of the case analysis produced each certificate."""

import collections
import random
import sys

from threearc.extractor import extract_minor
from threearc.harness import family_bases, family_instance
from threearc.minors import verify_certificate
from threearc.three_arc import three_arc_graph

count = int(sys.argv[1]) if len(sys.argv) > 1 else 100
rng = random.Random(int(sys.argv[2]) if len(sys.argv) > 2 else 0)
labels = collections.Counter()
bad = 0
for _ in range(count):
    name, base, _ = rng.choice(family_bases())
    d = family_instance(rng, base)
    res = extract_minor(d)
    if not verify_certificate(three_arc_graph(d).graph, res.certificate):
        bad += 1
    labels[res.label] += 1

for label, n in sorted(labels.items()):
    print(f"{label:<28} {n}")
print(f"{count} instances, {bad} unverified")
