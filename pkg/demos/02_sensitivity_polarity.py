"""
Which members are sensitive to which elements
=============================================

The sensitivity table drives the fast test.  A member Y is sensitive to x
when some earlier member fits inside Y | {x}.  A witness needs Y to be
*insensitive* to an element of X - Y; the reversed reading misfires on a
substitutable list, as shown below.
"""

from subcheck import build_sensitivity, brute_force_check, find_witness_fast, gen_responsive
from subcheck.checker import printed_condition

# capacity-2 responsive choice with priority a > b > c
plist = gen_responsive(3, 2, priority=[0, 1, 2])
u = plist.universe
sens = build_sensitivity(plist)

print("member      sensitive to")
for r, s in enumerate(plist):
    print(f"{u.format(s):10s}  {u.format(sens.sensitive_to(r))}")

print("\nfast verdict :", find_witness_fast(plist).outcome.value)
print("oracle       :", brute_force_check(plist).outcome.value)

ab, bc = plist.rank_of(u.altset("ab")), plist.rank_of(u.altset("bc"))
print("reversed polarity would flag ({a,b}, {b,c}):", printed_condition(plist, sens, ab, bc))
