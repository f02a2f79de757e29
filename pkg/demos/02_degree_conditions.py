"""
Degree-sequence conditions for Hamiltonicity
============================================
"""

from dilink import (
    asymptotic_nash_williams,
    complete_digraph,
    directed_cycle,
    gen_random_digraph,
    nash_williams,
    oriented_semidegree,
    posa_type,
    rotational_tournament,
)

# the paired degree-sequence test: complete digraphs sail through,
# directed cycles fail at the very first index
for n in (6, 9, 12):
    print(f"K_{n}:", "satisfied" if nash_williams(complete_digraph(n)) else "failed")
C = directed_cycle(9)
r = nash_williams(C)
print(f"C_9: failed at index {r.failing_index} ({r.failing_clause} clause)")

# the asymptotic variant trades exactness for gamma*n slack on both sides
D = gen_random_digraph(60, 0.7, seed=1)
for g in ("0.05", "0.15", "0.3"):
    a = asymptotic_nash_williams(D, g)
    state = "satisfied" if a else f"failed at index {a.failing_index}"
    print(f"D(60, 0.7) with slack gamma={g}: {state}")

# the one-sided variant needs each half-sequence to clear i + gamma*n
pt = posa_type(D, "0.1")
print("one-sided check at gamma=0.1:", "satisfied" if pt else "failed")

# oriented graphs (no digons) get their own semidegree threshold; the
# rotational tournament on 9 vertices has all semidegrees equal to 4
T = rotational_tournament(9)
o = oriented_semidegree(T, "1/18")
print(f"tournament on 9: semidegree_ok={o.semidegree_ok}, "
      f"degree_sum_ok={o.degree_sum_ok} -> {'satisfied' if o.satisfied else 'failed'}")
o2 = oriented_semidegree(T, "1/2")
print("same tournament at epsilon=1/2:", "satisfied" if o2.satisfied else "failed")
