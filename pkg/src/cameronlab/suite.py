"""The verification suite: every closed-form statement checked over a range of sizes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import expected
from .algebra import (
    check_dk_relations,
    check_psi_identities,
    linear_characters,
    normalized_dim,
)
from .core import (
    Category,
    Morphism,
    automorphism_group,
    check_retraction_property,
    compose_images,
    factorize,
    hom_images,
)
from .mutation import OddCycleError, build_mutation_graph, hamming_one_pairs
from .report import CLOSED_FORM, DERIVED, TRIVIAL, SuiteConfig, VerificationReport, merge_reports
from .reps import (
    ba_eigensplit,
    check_fa_sgn_projectivity,
    check_filtration_identity,
    check_restriction_identity,
    classify_singular_pairs,
    coinduced_injective_dim,
    ext_consistency,
    ext_dim_fa,
    ext_dim_standard,
    hom_dim_refined,
    hom_dim_standard,
    psi_image_dim,
    singular_quiver_dims,
)

CYCLIC = (Category.CA, Category.SA)
NORMALIZED = (Category.OA, Category.CA, Category.BA, Category.SA)


# ---------------------------------------------------------------------------
# individual suites; each takes (category, config) and returns a report


def suite_core(cat: Category, cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("core", cat.value)
    n_max = cfg.max_n(cat)
    for n in range(1, n_max + 1):
        with rep.timed() as t:
            order = automorphism_group(cat, n).order
        rep.record("group_order", {"n": n}, expected.group_order(cat, n), order, CLOSED_FORM,
                   "automorphism groups of [n]", runtime_ms=t["ms"],
                   passed=None if expected.group_order(cat, n) is None else ...)
    small = min(n_max, 4)
    for m in range(1, small + 1):
        for n in range(1, small + 1):
            ok = True
            for f in hom_images(cat, m, n):
                fac = factorize(Morphism(cat, m, n, f))
                ok &= fac.recompose().images == f and fac.middle_size == len(set(f))
            rep.record("factorization", {"m": m, "n": n}, True, ok, TRIVIAL, "f = injective o surjective")
            if m <= n:
                rep.record("retraction", {"m": m, "n": n}, True, check_retraction_property(cat, m, n), DERIVED,
                           "surjective retractions of injections")
    for m in range(1, small + 1):
        for n in range(1, small + 1):
            closed = all(
                compose_images(g, f) in set(hom_images(cat, m, p))
                for p in range(1, small + 1)
                for f in hom_images(cat, m, n)
                for g in hom_images(cat, n, p)
            )
            rep.record("closure", {"m": m, "n": n}, True, closed, TRIVIAL, "composition stays in the category")
    rep.extend(check_restriction_identity(cat, n_max, cfg.effective_t_max))
    return rep


def suite_graphs(cat: Category, cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("graphs", cat.value)
    n_max = cfg.max_n(cat)
    for n in range(2, n_max + 1):
        for m in range(1, n):
            with rep.timed() as t:
                g = build_mutation_graph(cat, m, n)
            count = g.component_count
            rep.record("component_bound", {"m": m, "n": n}, True, count <= expected.component_bound(cat),
                       CLOSED_FORM, "mutation graphs have at most the stated number of components",
                       runtime_ms=t["ms"], note=f"components={count}")
            if cat in (Category.OA, Category.CA, Category.FA, Category.BA):
                exact = 1 if cat is not Category.BA or m == 1 else 2
                rep.record("component_count", {"m": m, "n": n}, exact, count, CLOSED_FORM,
                           "connected, or two orientation classes for betweenness")
        try:
            build_mutation_graph(cat, n - 1, n)
            bip = True
        except OddCycleError:
            bip = False
        rep.record("bipartite", {"n": n}, True, bip, CLOSED_FORM, "Gamma_{n-1,n} is bipartite")
    for n in range(2, min(n_max, 5) + 1):
        for m in range(1, n):
            rep.record("component_oracle", {"m": m, "n": n}, oracle_component_count(cat, m, n),
                       build_mutation_graph(cat, m, n).component_count, DERIVED,
                       "union-find over Hamming-one pairs with an explicit equaliser search")
    for (fcat, m, n), edges in expected.FIGURES.items():
        if fcat is not cat or n > n_max:
            continue
        g = build_mutation_graph(cat, m, n)
        drawn = {frozenset(e) for e in edges}
        rep.record("figure_edges", {"m": m, "n": n}, sorted(sorted(e) for e in drawn),
                   sorted(sorted(e) for e in g.edge_set()), CLOSED_FORM, "drawn mutation graph")
        built = [(g.vertices[a], g.vertices[b]) for a, b in g.edges]
        rep.record("figure_shape", {"m": m, "n": n}, list(expected.figure_shape(edges)),
                   list(expected.figure_shape(built)), CLOSED_FORM, "drawn mutation graph up to isomorphism")
    return rep


def oracle_component_count(cat: Category, m: int, n: int) -> int:
    """Components by union-find, testing every pair at Hamming distance one against
    every surjection [n] -> [n-1]."""
    vertices = list(hom_images(cat, m, n, "injective"))
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    surj = hom_images(cat, n, n - 1, "surjective")
    for f, g in hamming_one_pairs(vertices):
        if any(compose_images(h, f) == compose_images(h, g) for h in surj):
            parent[find(f)] = find(g)
    return len({find(v) for v in vertices})


def suite_homs(cat: Category, cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("homs", cat.value)
    n_max = cfg.max_n(cat)
    for m in range(1, n_max + 1):
        for n in range(1, n_max + 1):
            with rep.timed() as t:
                dim = hom_dim_standard(cat, m, n)
            exp = expected.hom_dim(cat, m, n)
            rep.record("hom_dim", {"m": m, "n": n}, exp, dim, CLOSED_FORM, "Hom between standard modules",
                       runtime_ms=t["ms"], passed=None if exp is None else ...)
    for n in range(1, n_max):
        # Hom(Delta_{n+1}, Delta_n) equals the number of components of Gamma_{n, n+1}
        rep.record("hom_equals_components", {"n": n}, build_mutation_graph(cat, n, n + 1).component_count,
                   hom_dim_standard(cat, n + 1, n), DERIVED, "alternating component sums span the Hom space")
        with rep.timed() as t:
            pairs = classify_singular_pairs(cat, n)
        computed = sorted((p.lam.name, p.mu.name) for p in pairs)
        stated = sorted((lam.name, mu.name) for lam, mu in expected.singular_pairs(cat, n))
        rep.record("singular_pairs", {"n": n}, stated, computed, CLOSED_FORM, "classification of singular pairs",
                   runtime_ms=t["ms"])
        # refined Hom: brute-force over all pairs of linear characters
        total = 0
        for lam in linear_characters(cat, n + 1):
            for mu in linear_characters(cat, n):
                total += hom_dim_refined(cat, n + 1, lam, n, mu)
        whole = hom_dim_standard(cat, n + 1, n)
        if _all_linear(cat, n) and _all_linear(cat, n + 1):
            rep.record("refined_total", {"n": n}, whole, total, DERIVED,
                       "refined Homs over all character pairs add up to the whole Hom space")
        else:
            rep.record("refined_total_bound", {"n": n}, True, total <= whole, DERIVED,
                       "refined Homs over linear characters are bounded by the whole Hom space",
                       note=f"refined={total}, whole={whole}")
    if cat in NORMALIZED:
        for m in range(1, n_max + 1):
            for n in range(max(1, m - 2), m + 1):
                exp = expected.psi_image_dim(cat, m, n)
                if exp is None:
                    continue
                rep.record("psi_image_dim", {"m": m, "n": n}, exp, psi_image_dim(cat, m, n), CLOSED_FORM,
                           "Psi_m Delta_n(m)")
    return rep


def _all_linear(cat: Category, n: int) -> bool:
    return len(linear_characters(cat, n)) == automorphism_group(cat, n).order


def suite_ext(cat: Category, cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("ext", cat.value)
    if cat not in CYCLIC:
        return rep
    n_max = cfg.max_n(cat)
    for m in range(3, n_max + 1):
        for n in range(1, n_max):
            with rep.timed() as t:
                e = ext_dim_standard(cat, m, n)
            rep.record("ext_dim", {"m": m, "n": n}, expected.ext_dim(cat, m, n), e, CLOSED_FORM,
                       "Ext^1 between standard modules", runtime_ms=t["ms"])
            rep.record("ext_consistency", {"m": m, "n": n}, 0, ext_consistency(cat, m, n), DERIVED,
                       "alternating sum of the four-term exact sequence")
    for n in range(2, min(n_max - 1, 4) + 1):
        singular = expected.singular_targets(cat, n)
        for mu in linear_characters(cat, n):
            rep.record("ext_refined", {"n": n, "mu": mu.name}, 1 if mu in singular else 0,
                       ext_dim_standard(cat, n + 1, n, mu), CLOSED_FORM,
                       "Ext^1(Delta_{n+1}, Delta_{n,mu}) detects singular mu")
    rep.extend(singular_quiver_dims(cat, min(n_max - 1, 4)))
    return rep


def suite_dk(cat: Category, cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("dk", cat.value)
    if cat not in NORMALIZED:
        return rep
    n_max = cfg.max_n(cat)
    for n in range(2, n_max + 1):
        rep.extend(check_psi_identities(cat, n))
    rep.extend(check_dk_relations(cat, min(n_max, 5)))
    for n in range(1, min(n_max, 5) + 1):
        bounds = expected.normalized_dims(cat, n)
        for key, (a, b) in {"up": (n, n + 1), "diag": (n, n), "down": (n + 1, n)}.items():
            dim = normalized_dim(cat, a, b)
            rep.record(f"normalized_dim_{key}", {"n": n}, True, dim <= bounds[key], CLOSED_FORM,
                       "spanning-set bound", note=f"dim={dim}, bound={bounds[key]}")
    if cat is Category.BA:
        for n in range(2, min(n_max, 5) + 1):
            rep.record("ba_eigensplit", {"n": n}, [1, 1], list(ba_eigensplit(n)), CLOSED_FORM,
                       "K splits into two copies of the linear Dold-Kan category")
    rep.extend(check_filtration_identity(cat, n_max, n_max))
    return rep


def suite_fa(cat: Category, cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("fa", cat.value)
    if cat is not Category.FA:
        return rep
    n_max = cfg.max_n(cat)
    for n in range(1, min(n_max, 4) + 1):
        rep.extend(check_fa_sgn_projectivity(n, cfg.effective_t_max))
    for n in range(3, min(n_max, 4) + 1):
        with rep.timed() as t:
            res = ext_dim_fa(n, cfg.fa_ext_cutoff)
        rep.record("fa_ext", {"n": n, "cutoff": res.cutoff}, expected.fa_ext_dim(n), res.dim, CLOSED_FORM,
                   "growth of Ext^1(Delta_n, Delta_{n-1})", runtime_ms=t["ms"],
                   passed=(res.dim == expected.fa_ext_dim(n)) if res.stabilized else None,
                   note=f"{res.status}; Hom(ideal) dims {list(res.hom_ideal_dims)}")
    for n in range(1, n_max + 1):
        for t_ in range(1, cfg.effective_t_max + 1):
            rep.record("coinduced_dim", {"n": n, "t": t_}, n**t_, coinduced_injective_dim(n, t_), DERIVED,
                       "Stirling sum counts all maps [t] -> [n]")
    return rep


SUITE_FUNCS: dict[str, Callable[[Category, SuiteConfig], VerificationReport]] = {
    "core": suite_core,
    "graphs": suite_graphs,
    "homs": suite_homs,
    "ext": suite_ext,
    "dk": suite_dk,
    "fa": suite_fa,
}


def _run_task(task: tuple[str, str, SuiteConfig]) -> VerificationReport:
    suite, cat, cfg = task
    return SUITE_FUNCS[suite](Category(cat), cfg)


def run_suite(cfg: SuiteConfig) -> VerificationReport:
    """Run every (suite, category) task and merge the reports in task order."""
    tasks = [(s, c.value, cfg) for s in cfg.suites for c in cfg.categories]
    workers = min(cfg.worker_count, len(tasks)) or 1
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_task, tasks))
    else:
        reports = [_run_task(t) for t in tasks]
    # pool.map preserves task order, so the merge is deterministic
    for (suite, cat, _), rep in zip(tasks, reports):
        for c in rep.checks:
            c.params = {"suite": suite, "category": cat, **c.params}
    name = "all" if len(cfg.categories) > 1 else cfg.categories[0].value
    return merge_reports("+".join(cfg.suites), name, reports)
