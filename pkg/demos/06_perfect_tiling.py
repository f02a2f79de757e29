"""
Tiling a digraph with subdivisions, and a tiny-scale oracle
===========================================================
"""

from dilink import (
    PipelineConfig,
    brute_force_subdivision,
    gen_random_digraph,
    path_lengths,
    perfect_tiling,
    single_arc_pattern,
    subdivision_order,
    validate_subdivision,
    validate_tiling,
)

# split all 400 vertices into two subdivisions of one arc (i.e. two long
# paths) with exactly 150 and 250 vertices
D = gen_random_digraph(400, 0.7, seed=0)
H = single_arc_pattern()
cfg = PipelineConfig(gamma="1/2", nu="3/4", tau="3/4", d=3, seed=0)

tiles = perfect_tiling(D, H, [150, 250], cfg)
print("tile orders:", [subdivision_order(t) for t in tiles])
print("disjoint, exhaustive, exact:", validate_tiling(D, tiles, [150, 250]))
print("tile vertex sets cover V:",
      len(tiles[0].vertices() | tiles[1].vertices()) == 400)

# at toy scale a brute-force search settles existence outright, which is
# what the test suite uses to cross-examine the constructive machinery
T = gen_random_digraph(7, 0.5, seed=5)
w = brute_force_subdivision(T, H, {0: 0, 1: 3}, [4])
if w is None:
    print("\nno subdivision of length 4 from 0 to 3 exists in T")
else:
    print("\nbrute force found:", w.paths[(0, 1)])
    print("valid:", validate_subdivision(T, w), "lengths:", path_lengths(w))
