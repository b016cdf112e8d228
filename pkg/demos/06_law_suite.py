"""
Running the law suite
=====================

Functor identities and composition, exhaustively on small finite algebras
and on random FC morphisms, reported as JSON lines.
"""

import collections

from stonedual.laws import fc_functor_laws, finite_functor_laws, tarski_laws

rep = finite_functor_laws(max_atoms=2)
rep = rep.merge(fc_functor_laws(seed=0, n=50))
rep = rep.merge(tarski_laws(seed=0, n=100))

by_law = collections.Counter(r["law"] for r in rep.records)
for law, n in sorted(by_law.items()):
    print(f"{law:<18} {n:>6}")
print("all passed:", rep.passed)

print(rep.to_jsonl().splitlines()[0])
