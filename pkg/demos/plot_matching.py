"""
Matching queries against traces
===============================

A query is a string of types, typesets and variables together with a
window and gap constraints.  This script matches one against a trace and
prints the witness.
"""

# %%
# Building a query
# ----------------
#
# Variables start with ``?``, typesets are written in braces.  The gap
# tuple bounds the number of letters between neighbouring positions.

from tracequery import find_witness, make_sample, make_trace, parse_query, support

q = parse_query("""
string: ?x1 {a,b} ?x1 ?x2 c ?x3 {a,b} ?x1
window: 25
gaps: 0:1, 2:inf, 3:inf, 0:5, 0:5, 1:5, 1:2
""")
print(q)

# %%
# The witness
# -----------
#
# ``find_witness`` returns the embedding that comes first in lexicographic
# order, together with the variable assignment and typeset choices.

t = make_trace("c a b b c a b a c a b a c b c b b a c")
w = find_witness(q, t)
print("embedding:", w.embedding)
print("variables:", {str(v): x for v, x in w.assignment.items()})
print("typesets: ", w.choice)

# %%
# Support in a sample
# -------------------

sample = make_sample([t, "c a c", "a b a a b b a"])
print("support:", support(q, sample))  # an exact fraction
