"""Print the table of eps_g(n) three ways and the planar/genus checks.

    python demos/genus_tables.py
"""

from unimap import counting as C
from unimap import oracle

N = 7

print("eps_g(n): Lehman-Walsh / Harer-Zagier recurrence / involution enumeration")
for n in range(1, N + 1):
    rep = oracle.enumerate_unicellular(n)
    row = []
    for g in range(n // 2 + 1):
        lw, hz, bf = C.epsilon_lw(g, n), C.epsilon_hz(g, n), rep.buckets["genus"][g]
        assert lw == hz == bf
        row.append(f"{lw:>7}")
    print(f"n={n}  " + " ".join(row) + f"   ({rep.total} involutions, {rep.seconds:.2f}s)")

print()
print("trees: 2^(n+1) eps_g(n) = Cat(n) c_g(n+1)")
for n, g in [(4, 2), (6, 3), (10, 4)]:
    lhs = 2 ** (n + 1) * C.epsilon_lw(g, n)
    print(f"  n={n} g={g}: {lhs} = {C.catalan(n)} * {C.cperm_count(g, n + 1)}")
