"""
Containment and equivalence
===========================

One query is contained in another when every trace matching the first
also matches the second.  Over a large enough alphabet this comes down to
finding a homomorphism between the query strings.
"""

# %%

from tracequery import AlphabetTooSmall, contained_in, equivalent, find_homomorphism, parse_query
from tracequery.analysis import check_alphabet
from tracequery.oracle import brute_contained

specific = parse_query("string: a {b,c} {b,c}\nwindow: 3\ngaps: 0:0, 0:0")
general = parse_query("string: {a,b} {b,c} {b,c}\nwindow: 3\ngaps: 0:0, 0:0")

print(contained_in(specific, general, "abc"))
print(contained_in(general, specific, "abc"))
print(find_homomorphism(general, specific))

# %%
# Cross-check by enumerating traces
# ---------------------------------

print(brute_contained(specific, general, "abc"))

# %%
# Alphabet size matters
# ---------------------
#
# With only two types ``?x ?y ?z`` cannot tell ``a b c`` apart from other
# traces, so the answer is refused unless forced.

low = parse_query("string: a b c")
mgq = parse_query("string: ?x ?y ?z")
try:
    contained_in(low, mgq, "ab")
except AlphabetTooSmall as exc:
    print(exc)
print(check_alphabet(low, mgq, "abcd"))

# %%
# Equivalence is isomorphism up to renaming variables.

print(equivalent(parse_query("string: ?x a ?x ?y"), parse_query("string: ?p a ?p ?q")))
