"""
A list that is not substitutable
================================

Build the four-alternative list from the classic example, evaluate its
choice function, and ask each decider for a certificate.
"""

from subcheck import check, eval_choice, from_names
from subcheck.report import format_report

plist = from_names("abcd", ["ab", "acd", "ac", "a", "c"])
u = plist.universe
print("list:", plist.format())          # the empty set was appended

# the choice on a set is the first member it contains
rank, chosen = eval_choice(plist, u.altset("abc"))
print("f({a,b,c}) =", u.format(chosen), "at rank", rank)

# fast and naive search return the same witness, the oracle a raw violation
for algorithm in ("fast", "naive", "brute"):
    print(format_report(plist, check(plist, algorithm)))
