"""
Satisfiability and shortest traces
==================================

Window and gap constraints can contradict each other.  Constraints are
solved as a system of difference bounds, which also yields the length of
the shortest matching trace.
"""

# %%
# Two conflicting constraint sets
# -------------------------------

from tracequery import construct_min_trace, is_satisfiable, min_match_length, parse_query

q1 = parse_query("string: a a a a a a\nwindow: 10\nconstraints: 1+3:7..7, 2+3:6..6, 5+1:0..0")
q2 = parse_query("string: a a a a a a\nwindow: 10\nconstraints: 1+5:4..4, 3+2:2..5")

for name, q in [("q1", q1), ("q2", q2)]:
    print(name, "satisfiable:", is_satisfiable(q))

# %%
# q1 fails only because of its window.  Without it the shortest trace has
# 11 letters; q2's constraints clash among themselves.

print(min_match_length(q1, ignore_window=True))
print(min_match_length(q2, ignore_window=True))

# %%
# Shortest traces
# ---------------
#
# The shortest trace is not unique.  Positions can be pushed to the left
# (the default) or to the right.

for align in ("left", "right"):
    t = construct_min_trace(q1, filler="b", var_fill="a", ignore_window=True, align=align)
    print(align.ljust(5), " ".join(t))
