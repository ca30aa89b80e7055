"""Tour of the counting schemes on a four-researcher co-authorship example.

Three publications: P1 by R1+R2+R3, P2 by R1+R3, P3 by R2+R4. The script
builds the co-authorship network under each symmetric counting scheme and
prints the link weights side by side, showing how the denominator choice
changes both the weights and their row totals.
"""

import numpy as np

from bibnet import (
    CountingScheme,
    ProjectionConfig,
    PublicationRecord,
    UnitKind,
    derive_authorship,
    project,
    registry_from_corpus,
)

corpus = [
    PublicationRecord("P1", ("R1", "R2", "R3")),
    PublicationRecord("P2", ("R1", "R3")),
    PublicationRecord("P3", ("R2", "R4")),
]

registry = registry_from_corpus(corpus, UnitKind.AUTHOR)
matrix = derive_authorship(corpus, registry)

print("authorship matrix (rows = researchers, columns = publications):")
print(matrix.toarray())
print("authors per publication:", matrix.column_margin.tolist())
print()

schemes = [
    (CountingScheme.FULL, "full: every link weighs 1"),
    (CountingScheme.FRACTIONAL, "fractional: each action's links sum to 1"),
    (CountingScheme.FRACTIONAL_PLAIN, "denominator n instead of n-1"),
    (CountingScheme.FRACTIONAL_SQUARED, "denominator n^2"),
]

nets = {s: project(matrix, ProjectionConfig(s)) for s, _ in schemes}

print(f"{'pair':<10}" + "".join(f"{s.value:>12}" for s, _ in schemes))
pairs = sorted({key for net in nets.values() for key in
                [(a, b) for a, b, _ in net.pairs()]})
for a, b in pairs:
    row = f"{a}-{b:<7}"
    for s, _ in schemes:
        row += f"{nets[s].weight(a, b):>12.4f}"
    print(row)
print()

print("row totals per researcher:")
for s, blurb in schemes:
    totals = np.round(nets[s].row_totals(), 4)
    print(f"  {s.value:<10} {totals.tolist()}   ({blurb})")
print()

print("under the fractional scheme each researcher's total equals the number")
print("of multi-author publications they wrote; a 500-author paper and a")
print("2-author paper then pull on the network with the same force.")
