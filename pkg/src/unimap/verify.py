"""Cross-checks of formulas and bijections against exhaustive enumeration.

Each check takes the edge bound ``N`` and returns ``(ok, detail)``.  Checks
in :data:`CHECKS` must pass; :data:`STATED` compares formulas exactly as
printed where exhaustive counts are known to differ, and is reported
without affecting the exit status.
"""

import time
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from . import counting as C
from .bijection import (ctree_to_map_outcomes, ctree_to_map_traced, expand, graph_preserved,
                        map_to_ctree_outcomes, map_to_ctree_traced)
from .constellations import (_length_genus, corollary_check, feasible_lengths,
                             induction_check, multitype_genus, prickly_count,
                             prickly_count_enumerated_form, ps_count_m3, qc_count)
from .ctrees import (MINUS, PLUS, CDecoratedTree, SignedSequence, cperm_to_seq,
                     cpermutations, extended_remy, extended_remy_inverse, plane_trees,
                     remy_contract, remy_expand, seq_to_cperm)
from .maps import (canonical, find_trisections, genus, merge_vertices, psi, psi_inverse,
                   vertex_partition)
from . import oracle as O
from .stanley import stanley_F


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0


# --- counting -----------------------------------------------------------------

def check_epsilon(N, max_genus=None):
    """Lehman-Walsh, Harer-Zagier and brute force agree."""
    rows = 0
    for n in range(1, N + 1):
        rep = O.enumerate_unicellular(n)
        if rep.total != C.double_factorial_odd(n):
            return False, f"n={n}: {rep.total} involutions"
        for g in range(0, (max_genus if max_genus is not None else n) + 1):
            b = rep.buckets["genus"].get(g, 0)
            if not C.epsilon_lw(g, n) == C.epsilon_hz(g, n) == b:
                return False, f"g={g} n={n}: lw={C.epsilon_lw(g, n)} hz={C.epsilon_hz(g, n)} brute={b}"
            rows += 1
    return True, f"{rows} (g, n) pairs, n <= {N}"


def check_theorem_counts(N, G):
    for n in range(0, N + 1):
        for g in range(0, G + 1):
            if 2 ** (n + 1) * C.epsilon_lw(g, n) != C.catalan(n) * C.cperm_count(g, n + 1):
                return False, f"g={g} n={n}"
    return True, f"n <= {N}, g <= {G}"


def check_hz_series(N):
    s = C.hz_series(N + 1, N + 1)
    for n in range(1, N + 1):
        for g in range(0, n // 2 + 1):
            want = Fraction(2 * C.epsilon_lw(g, n), C.double_factorial_odd(n))
            if s.coeff(n + 1 - 2 * g, n + 1) != want:
                return False, f"g={g} n={n}"
    return True, f"y^{N + 1}"


def check_colored(N, max_colors=4):
    for n in range(1, N + 1):
        for r in range(1, max_colors + 1):
            b = O.enumerate_colored(n, r).total
            if b != C.colored_count(r, n):
                return False, f"A_{r}({n}) brute {b} formula {C.colored_count(r, n)}"
    return True, f"A_r(n), r <= {max_colors}, n <= {N}"


def check_jackson(N):
    for n in range(1, N + 1):
        for r in range(1, n + 1):
            for s in range(1, n + 1):
                if O.jackson_oracle(n, r, s) != C.jackson_count(r, s, n):
                    return False, f"B_{r},{s}({n})"
    return True, f"B_rs(n), n <= {N}"


def _formula_or_zero(fn, *args):
    try:
        return fn(*args)
    except C.DomainError:
        return 0


def check_goupil_schaeffer(N):
    k = 0
    for n in range(1, N + 1):
        comps = list(C.compositions(n))
        for I in comps:
            for J in comps:
                if O.enumerate_bipartite_labelled(n, I, J) != _formula_or_zero(C.goupil_schaeffer, I, J):
                    return False, f"BiL({I}, {J})"
                k += 1
    return True, f"{k} composition pairs, n <= {N}"


def check_morales_vassilieva(N):
    k = 0
    for n in range(1, N + 1):
        comps = list(C.compositions(n))
        for I in comps:
            for J in comps:
                if O.enumerate_bipartite_colored(n, I, J) != _formula_or_zero(C.morales_vassilieva, I, J):
                    return False, f"BiC({I}, {J})"
                k += 1
    return True, f"{k} composition pairs, n <= {N}"


def check_covered(N, G):
    for n in range(1, N + 1):
        for g in range(G + 1):
            if C.covered_total(g, n) != C.catalan(n) * C.bip_count(g, n + 1):
                return False, f"g={g} n={n}"
    return True, f"n <= {N}, g <= {G}"


def check_mullin(N):
    for n in range(1, N + 1):
        if C.covered_count(0, 0, n) != C.catalan(n) * C.catalan(n + 1):
            return False, f"n={n}"
    return True, f"n <= {N}"


def check_bip_brute(N):
    for n in range(1, N + 1):
        rep = O.enumerate_unicellular(n)
        for g, c in rep.buckets["bipartite"].items():
            if C.bip_count(g, n) != c:
                return False, f"Bip_{g}({n})"
    return True, f"n <= {N}"


# --- maps and trees -----------------------------------------------------------

def check_trisections(N):
    k = 0
    for n in range(1, N + 1):
        for m in O.unicellular_maps(n):
            if len(find_trisections(m)) != 2 * genus(m):
                return False, f"map {m.alpha}"
            k += 1
    return True, f"{k} maps"


def check_psi(N):
    """psi is injective, hits every marked map of the right kind, and
    psi_inverse undoes it; merging the marked vertices gives back the graph."""
    pairs = 0
    for n in range(1, N + 1):
        maps = list(O.unicellular_maps(n))
        by_genus = Counter(genus(m) for m in maps)
        images = defaultdict(set)
        for m in maps:
            g = genus(m)
            for tau in find_trisections(m):
                m2, marked = psi(m, tau)
                cm, rel = canonical(m2, marked)
                key = (cm.alpha, frozenset(rel))
                k = (len(marked) - 1) // 2
                if key in images[g, k]:
                    return False, f"psi not injective at {m.alpha}"
                images[g, k].add(key)
                back, tau2 = psi_inverse(m2, marked)
                if canonical(back) != m or tau2 != tau:
                    return False, f"round trip fails at {m.alpha}, tau={tau}"
                if merge_vertices(vertex_partition(m2), marked) != vertex_partition(m):
                    return False, f"vertex merge fails at {m.alpha}"
                pairs += 1
        for (g, k), imgs in images.items():
            # every map of genus g-k with any 2k+1 marked vertices is hit
            target = comb(n + 1 - 2 * (g - k), 2 * k + 1) * by_genus[g - k]
            if len(imgs) != target:
                return False, f"image size {len(imgs)} != {target} (n={n}, g={g}, k={k})"
    return True, f"{pairs} (map, trisection) pairs"


def check_seq_bijection(K):
    k = 0
    for size in range(1, K + 1):
        seen = set()
        for perm in permutations(range(1, size + 1)):
            for sign in (PLUS, MINUS):
                s = SignedSequence(sign, perm)
                c = seq_to_cperm(s)
                if cperm_to_seq(c) != s or c in seen:
                    return False, f"sequence {s}"
                seen.add(c)
                k += 1
        if len(seen) != 2 * factorial(size):
            return False, f"size {size}"
    ex = seq_to_cperm(SignedSequence(PLUS, (4, 7, 3, 1, 5, 6, 2)))
    if str(ex) != "-(1,6,2)-(3)+(4,7,5)":
        return False, f"worked example gives {ex}"
    return True, f"{k} signed sequences, size <= {K}"


def check_remy(N):
    for n in range(1, N + 1):
        seen = set()
        for t in plane_trees(n):
            for v in range(1, n + 2):
                t2, corner, side = remy_contract(t, v)
                if remy_expand(t2, corner, side) != (t, v):
                    return False, f"round trip {t.dyck} v={v}"
                seen.add((t2.dyck, corner, side))
        if len(seen) != (n + 1) * C.catalan(n):
            return False, f"n={n}"
        if (n + 1) * C.catalan(n) != 2 * (2 * n - 1) * C.catalan(n - 1):
            return False, f"count n={n}"
    return True, f"n <= {N}"


def ctrees(n, g):
    return [CDecoratedTree(t, c) for t in plane_trees(n)
            for c in cpermutations(range(1, n + 2), g)]


def check_extended_remy(N, G, count_to=12):
    for n in range(1, N + 1):
        for g in range(0, G + 1):
            seen = set()
            total = 0
            for t in ctrees(n, g):
                for v in range(1, n + 2):
                    data = extended_remy(t, v)
                    if extended_remy_inverse(data) != (t, v):
                        return False, f"round trip n={n} g={g}"
                    seen.add(data)
                    total += 1
            if len(seen) != total:
                return False, f"not injective n={n} g={g}"
            a = sum(1 for d in seen if d[0] == "A")
            b = total - a
            want_a = 4 * (2 * n - 1) * _t_count(g, n - 1)
            want_b = 4 * (n - 1) * (2 * n - 1) * (2 * n - 3) * _t_count(g - 1, n - 2)
            if (a, b) != (want_a, want_b):
                return False, f"image sizes {(a, b)} != {(want_a, want_b)} at n={n} g={g}"
    for n in range(2, count_to + 1):
        for g in range(0, n // 2 + 1):
            lhs = (n + 1) * _t_count(g, n)
            rhs = 4 * (2 * n - 1) * _t_count(g, n - 1) + \
                4 * (n - 1) * (2 * n - 1) * (2 * n - 3) * _t_count(g - 1, n - 2)
            if lhs != rhs:
                return False, f"cardinalities n={n} g={g}"
    return True, f"bijective n <= {N}, g <= {G}; counts n <= {count_to}"


def _t_count(g, n):
    if n < 0 or g < 0:
        return 0
    return C.catalan(n) * C.cperm_count(g, n + 1)


def check_fractional(N, G):
    """Exact bistochasticity and graph preservation on every branch."""
    for n in range(1, N + 1):
        for g in range(0, G + 1):
            maps = [m for m in O.unicellular_maps(n) if genus(m) == g]
            if not maps:
                continue
            trees = ctrees(n, g)
            cols = defaultdict(Fraction)
            for m in maps:
                for copy in range(1, 2 ** (n + 1) + 1):
                    outs = map_to_ctree_outcomes(m, copy)
                    if sum(o.probability for o in outs) != 1:
                        return False, f"row sum n={n} g={g}"
                    for o in outs:
                        cols[o.value] += o.probability
            if set(cols) != set(trees) or any(v != 1 for v in cols.values()):
                return False, f"column sums n={n} g={g}"
            rcols = defaultdict(Fraction)
            for t in trees:
                outs = ctree_to_map_outcomes(t)
                if sum(o.probability for o in outs) != 1:
                    return False, f"reverse row sum n={n} g={g}"
                for o in outs:
                    rcols[o.value] += o.probability
            if len(rcols) != len(maps) * 2 ** (n + 1) or any(v != 1 for v in rcols.values()):
                return False, f"reverse column sums n={n} g={g}"
            ok, why = _graph_on_all_branches(maps, trees)
            if not ok:
                return False, why
    return True, f"n <= {N}, g <= {G}"


def _graph_on_all_branches(maps, trees):
    for m in maps:
        for copy in (1, 2 ** (m.n_edges + 1)):
            for o in expand(lambda ch: graph_preserved(m, *map_to_ctree_traced(m, copy, ch))):
                if not o.value:
                    return False, f"graph not preserved from map {m.alpha}"
    for t in trees:
        def run(ch):
            m, _, corr = ctree_to_map_traced(t, ch)
            return graph_preserved(m, t, corr)
        for o in expand(run):
            if not o.value:
                return False, f"graph not preserved from tree {t.to_json()}"
    return True, ""


def check_ctree_histogram(N):
    """Underlying-graph degree histograms: trees = 2^(n+1) x maps."""
    for n in range(1, N + 1):
        for g in range(0, n // 2 + 1):
            rep = O.enumerate_ctrees(n, g)
            maps = O.map_degree_histogram(n, g)
            if rep.buckets["graph_degrees"] != Counter({k: v * 2 ** (n + 1) for k, v in maps.items()}):
                return False, f"n={n} g={g}"
    return True, f"n <= {N}"


# --- Stanley ------------------------------------------------------------------

def check_stanley(N, R):
    for n in range(1, N + 1):
        for r in range(1, R + 1):
            if O.stanley_brute(n, r) != stanley_F(n, r):
                return False, f"F_{n} with r={r}"
    return True, f"n <= {N}, r <= {R}"


def check_trivial_character(L_max):
    from .stanley import character_eval
    for n in range(1, L_max + 1):
        poly = stanley_F(n, 1)
        for L in range(n, L_max + 1):
            if character_eval(n, (1,), (L,), poly) != 1:
                return False, f"n={n} L={L}"
    return True, f"n <= L <= {L_max}"


# --- constellations -------------------------------------------------------------

def check_factorizations(N):
    k = 0
    for n in range(1, N + 1):
        rep = O.enumerate_factorizations(n)
        for key, c in rep.buckets["multitype"].items():
            if ps_count_m3(*key) != c:
                return False, f"multi-type {key}"
            k += 1
        # multi-types never reached must give 0
        parts = list(C.partitions(n))
        for a in parts:
            for b in parts:
                for c in parts:
                    if (a, b, c) in rep.buckets["multitype"]:
                        continue
                    try:
                        val = ps_count_m3(a, b, c)
                    except C.DomainError:
                        continue
                    if val:
                        return False, f"multi-type {(a, b, c)} has no factorization"
    return True, f"{k} multi-types, n <= {N}"


def check_qc_planar(N):
    k = 0
    for n in range(1, N + 1):
        parts = list(C.partitions(n))
        for a in parts:
            for b in parts:
                for c in parts:
                    if len(a) + len(b) + len(c) == 2 * n + 1:
                        if qc_count(a, b, c) != 2 ** n * ps_count_m3(a, b, c):
                            return False, f"{(a, b, c)}"
                        k += 1
    return True, f"{k} planar multi-types, n <= {N}"


def check_qc_brute_planar(N):
    for n in range(1, N + 1):
        rep = O.enumerate_quasi_constellations(n)
        for key, c in rep.buckets["multitype"].items():
            if multitype_genus(*key)[1] == 0 and qc_count(*key) != c:
                return False, f"{key}"
    return True, f"genus 0, n <= {N}"


def check_prickly_enumerated(N):
    for n in range(1, N + 1):
        for (d1, d2, d3, g0), c in O.enumerate_prickly(n).items():
            if O.prickly_labelled(n, d1, d2, d3, g0) != prickly_count_enumerated_form(d1, d2, d3, g0):
                return False, f"{(d1, d2, d3, g0)}"
    return True, f"n <= {N} with 2^(n-g0)"


def check_induction(N, corrected):
    bad = [(l, n) for n in range(1, N + 1) for l in feasible_lengths(n)
           if not induction_check(*l, n, corrected=corrected)[0]]
    total = sum(len(feasible_lengths(n)) for n in range(1, N + 1))
    if bad:
        (l, n) = bad[0]
        _, lhs, rhs = induction_check(*l, n, corrected=corrected)
        return False, f"{total - len(bad)}/{total} hold; first failure {l} n={n}: {lhs} != {rhs}"
    return True, f"{total} length triples, n <= {N}"


def check_corollary(N, corrected):
    cases = [(l, n, g0) for n in range(1, N + 1) for l in feasible_lengths(n)
             for g0 in range(_length_genus(*l, n) + 1)]
    bad = [c for c in cases if not corollary_check(*c[0], c[1], c[2], corrected=corrected)[0]]
    if bad:
        l, n, g0 = bad[0]
        _, c, rhs = corollary_check(*l, n, g0, corrected=corrected)
        return False, f"{len(cases) - len(bad)}/{len(cases)} hold; first failure {l} n={n} g0={g0}: {c} != {rhs}"
    return True, f"{len(cases)} cases, n <= {N}"


def check_qc_brute(N):
    total = bad = 0
    first = None
    for n in range(1, N + 1):
        rep = O.enumerate_quasi_constellations(n)
        for key, c in rep.buckets["multitype"].items():
            total += 1
            if qc_count(*key) != c:
                bad += 1
                first = first or (key, c, qc_count(*key))
    if bad:
        return False, f"{total - bad}/{total} agree; e.g. {first[0]}: brute {first[1]}, formula {first[2]}"
    return True, f"{total} multi-types"


def check_prickly_stated(N):
    total = 0
    bad = Counter()
    for n in range(1, N + 1):
        for (d1, d2, d3, g0), c in O.enumerate_prickly(n).items():
            total += 1
            if O.prickly_labelled(n, d1, d2, d3, g0) != prickly_count(d1, d2, d3, g0):
                bad[g0] += 1
    if bad:
        where = ", ".join(f"g0={g}: {k}" for g, k in sorted(bad.items()))
        return False, f"{total - sum(bad.values())}/{total} agree; mismatches {where}"
    return True, f"{total} cases"


# --- registry -----------------------------------------------------------------

CHECKS = {
    "epsilon": lambda N: check_epsilon(min(N, 7)),
    "theorem-counts": lambda N: check_theorem_counts(max(N, 12), 5),
    "hz-series": lambda N: check_hz_series(max(N, 7)),
    "trisections": lambda N: check_trisections(min(N, 6)),
    "psi": lambda N: check_psi(min(N, 5)),
    "seq-cperm": lambda N: check_seq_bijection(min(N + 2, 7)),
    "remy": lambda N: check_remy(min(N, 6)),
    "extended-remy": lambda N: check_extended_remy(min(N, 4), 2),
    "fractional": lambda N: check_fractional(min(N, 3), 1),
    "ctree-histogram": lambda N: check_ctree_histogram(min(N, 3)),
    "colored": lambda N: check_colored(min(N, 5)),
    "jackson": lambda N: check_jackson(min(N, 6)),
    "goupil-schaeffer": lambda N: check_goupil_schaeffer(min(N, 6)),
    "morales-vassilieva": lambda N: check_morales_vassilieva(min(N, 6)),
    "bip": lambda N: check_bip_brute(min(N, 6)),
    "covered": lambda N: check_covered(max(N, 8), 3),
    "mullin": lambda N: check_mullin(max(N, 10)),
    "stanley": lambda N: check_stanley(min(N, 5), 3),
    "trivial-character": lambda N: check_trivial_character(8),
    "factorizations": lambda N: check_factorizations(min(N, 5)),
    "qc-planar": lambda N: check_qc_planar(max(N, 7)),
    "qc-brute-planar": lambda N: check_qc_brute_planar(min(N, 3)),
    "prickly": lambda N: check_prickly_enumerated(min(N, 4)),
    "induction-corrected": lambda N: check_induction(min(N, 5), True),
    "corollary-corrected": lambda N: check_corollary(min(N, 5), True),
}

STATED = {
    "induction-stated": lambda N: check_induction(min(N, 5), False),
    "corollary-stated": lambda N: check_corollary(min(N, 5), False),
    "qc-brute": lambda N: check_qc_brute(min(N, 3)),
    "prickly-stated": lambda N: check_prickly_stated(min(N, 4)),
}


def run_checks(N, names=None):
    table = dict(CHECKS)
    if names is not None:
        table.update(STATED)
        table = {k: table[k] for k in names}
    out = []
    for name, fn in table.items():
        start = time.perf_counter()
        ok, detail = fn(N)
        out.append(CheckResult(name, ok, detail, time.perf_counter() - start))
    return out


def run_stated(N):
    out = []
    for name, fn in STATED.items():
        start = time.perf_counter()
        ok, detail = fn(N)
        out.append(CheckResult(name, ok, detail, time.perf_counter() - start))
    return out
