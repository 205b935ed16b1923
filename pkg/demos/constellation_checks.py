"""Compare the 3-constellation formulas with exhaustive counts.

The induction and the corollary constant are shown both as stated and with
the corrections that make them hold; the quasi-constellation sum is compared
with rotation-system counts at every genus.

    python demos/constellation_checks.py
"""

from unimap import verify as V
from unimap.constellations import induction_check, qc_count
from unimap import oracle

for name, fn in [("factorizations vs ps_count_m3", lambda: V.check_factorizations(5)),
                 ("induction as stated", lambda: V.check_induction(5, False)),
                 ("induction corrected", lambda: V.check_induction(5, True)),
                 ("corollary as stated", lambda: V.check_corollary(5, False)),
                 ("corollary corrected", lambda: V.check_corollary(5, True)),
                 ("prickly closed form", lambda: V.check_prickly_stated(4)),
                 ("prickly with 2^(n-g0)", lambda: V.check_prickly_enumerated(4))]:
    ok, detail = fn()
    print(f"{name:32} {'ok  ' if ok else 'DIFF'} {detail}")

print("\nan induction instance, lengths (1, 1, 1) at n = 3:")
for corrected in (False, True):
    ok, lhs, rhs = induction_check(1, 1, 1, 3, corrected=corrected)
    print(f"  corrected={corrected}: 2g c = {lhs}, right side = {rhs}")

print("\nquasi-constellations, size 3: rotation systems vs the sum")
for key, c in sorted(oracle.enumerate_quasi_constellations(3).buckets["multitype"].items()):
    f = qc_count(*key)
    print(f"  {key}: {c:>4}  {f}{'' if f == c else '   <-'}")
