"""Gram matrices, signatures and compactness of hyperbolic polyhedra.

For a prism with one unknown distance between ultraparallel facets, the
distance is found from det Gr = 0; the signature is then certified with
interval elimination (falling back to exact rank when needed).
"""

from coxgrowth import corpus
from coxgrowth.lorentz import compactness_check, gram_matrix, signature, solve_prism_length

g = corpus.get("makarov").graph
sol = solve_prism_length(g)
print("cosh l =", sol.cosh)
print("        in", sol.interval)
print("det Gr after substitution in", sol.det_interval)

for name in ["lanner-5333", "makarov", "kaplinskaja", "triangle-inf-3", "simplex-53333"]:
    fx = corpus.get(name)
    h = fx.solved_graph()
    s = signature(gram_matrix(h))
    line = f"{name:16s} signature {s.positives, s.negatives, s.zeros}  certified={s.certified}"
    if fx.dim is not None and s.negatives == 1:
        line += f"  {compactness_check(h, fx.dim).verdict}"
    print(line)
