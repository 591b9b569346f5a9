"""
Differential testing against the definition
===========================================

Draw random coherent lists, responsive lists and dropped-member mutants and
check that the three deciders never disagree.
"""

import random
from collections import Counter

from subcheck import (
    brute_force_check,
    find_witness_fast,
    find_witness_naive,
    gen_random_coherent,
    gen_responsive,
    mutate_drop,
    verify_witness,
)

rng = random.Random(0)
instances = [gen_random_coherent(m, rng.randint(0, min(30, 1 << m)), rng.getrandbits(32))
             for m in rng.choices(range(1, 7), k=300)]
instances += [gen_responsive(5, q, seed=q) for q in range(1, 6)]
instances += [mutate_drop(gen_responsive(5, q, seed=q), seed=1) for q in range(2, 6)]

tally = Counter()
for plist in instances:
    fast, naive, brute = find_witness_fast(plist), find_witness_naive(plist), brute_force_check(plist)
    assert fast.outcome == naive.outcome == brute.outcome
    assert fast.witness == naive.witness
    if fast.witness is not None:
        assert verify_witness(plist, fast.witness)
    tally[fast.outcome.value] += 1

print(f"{len(instances)} instances, all deciders agree:", dict(tally))
