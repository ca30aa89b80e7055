"""Co-citation networks and the credit map for cited items.

Co-citation links two units when the same publication cites them both. The
citing side lives in the corpus; the cited side needs to know which unit
gets credit for each cited item. Items that are themselves corpus records
default to their own author list; anything else (or any other policy, such
as first-author credit) is supplied explicitly.
"""

from bibnet import (
    CountingScheme,
    ProjectionConfig,
    PublicationRecord,
    UnitKind,
    derive_citations_received,
    project,
    registry_from_corpus,
)

corpus = [
    # two older in-corpus papers that get cited below
    PublicationRecord("classic1", ("Ada", "Ben")),
    PublicationRecord("classic2", ("Cleo",)),
    # citing papers; extX are items outside the corpus
    PublicationRecord("s1", ("Ada",), references=("classic1", "classic2", "ext1")),
    PublicationRecord("s2", ("Ben",), references=("classic1", "classic2")),
    PublicationRecord("s3", ("Cleo",), references=("classic2", "ext1")),
]

registry = registry_from_corpus(corpus, UnitKind.AUTHOR)

print("default policy: in-corpus items credit all their authors,")
print("external items are unmapped and contribute nothing")
matrix = derive_citations_received(corpus, registry)
net = project(matrix, ProjectionConfig(CountingScheme.FULL))
for a, b, w in net.pairs():
    print(f"  {a} -- {b}: {w:g}")
print()

print("with a credit map: ext1 is credited to Dana... but Dana is not an")
print("analyzed unit (not in the registry), so it still contributes nothing")
matrix = derive_citations_received(corpus, registry, credits={"ext1": ("Dana",)})
print(f"  citation totals per citing record: {matrix.column_margin.tolist()}")
print()

print("first-author policy for classic1, expressed by overriding its credit:")
matrix = derive_citations_received(corpus, registry, credits={"classic1": ("Ada",)})
net = project(matrix, ProjectionConfig(CountingScheme.FRACTIONAL))
for a, b, w in net.pairs():
    print(f"  {a} -- {b}: {w:.4f}")
