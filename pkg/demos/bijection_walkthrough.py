"""Follow one map through the fractional bijection and sample a few maps.

    python demos/bijection_walkthrough.py
"""

from unimap.bijection import (ctree_to_map_outcomes, make_rng, map_to_ctree_outcomes,
                              sample_uniform_map)
from unimap.maps import RotationMap, find_trisections, genus, psi

m = RotationMap.from_involution((2, 4, 0, 5, 1, 3))   # a genus-1 map with 3 edges
print("map", m.to_json(), "genus", genus(m))
print("trisections (corners):", find_trisections(m))
for tau in find_trisections(m):
    m2, marked = psi(m, tau)
    print(f"  psi at corner {tau}: genus {genus(m2)}, {len(marked)} marked vertices")

print("\ncopy 1 is sent to these C-decorated trees:")
for o in map_to_ctree_outcomes(m, 1):
    print(f"  p={o.probability}  {o.value.tree.dyck}  {o.value.cperm}")

t = map_to_ctree_outcomes(m, 1)[0].value
print("\nand the first tree comes back to:")
for o in ctree_to_map_outcomes(t):
    mm, copy = o.value
    print(f"  p={o.probability}  copy {copy}  {mm.to_json()}")

print("\nfive uniform maps of genus 2 with 6 edges (seed 2024):")
rng = make_rng(2024)
for _ in range(5):
    print(" ", sample_uniform_map(2, 6, rng).to_json())
