"""Comparing growth rates through embeddings of Coxeter systems.

If one Coxeter matrix embeds into another entrywise, the growth rates
compare the same way.  The comparison of two rates is exact: intervals
are refined until they separate, and equality is detected by a common
factor with a root in both intervals.
"""

from coxgrowth import corpus
from coxgrowth.graph import coxeter_matrix
from coxgrowth.order import assert_growth_monotone, compare_rates, find_embedding, minimality_report, rate_of

small = coxeter_matrix(corpus.get("lanner-5333").graph)
large = coxeter_matrix(corpus.get("lanner-5334").graph)
w = find_embedding(small, large)
print("embedding [5,3,3,3] -> [5,3,3,4]:", w.as_dict())
print(assert_growth_monotone(small, large).as_dict())

a, b = rate_of(corpus.get("lambert-q").graph), rate_of(corpus.get("w1").graph)
print("tau_Q vs tau_W1:", {-1: "<", 0: "=", 1: ">"}[compare_rates(a, b)])

# the scripted chain of comparisons behind the smallest rate in dimension 4
rep = minimality_report(4, abort=False)
for step in rep.steps:
    print(("ok  " if step.passed else "FAIL"), step.name, "|", step.computed)
print("minimal:", rep.minimal)
