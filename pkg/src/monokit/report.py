"""Aggregate verification report and the closed-form agreement tables.

Everything here reduces to a plain dict (JSON-ready, schema-tagged,
seed and tolerance recorded, no timestamps) so the command line can emit
it unchanged and tests can compare it structurally.  Heavier sections
fan out across degrees through a thread pool capped by MONOKIT_THREADS;
results are always reduced in degree order, so the output bytes do not
depend on the thread count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import bohr as bohr_mod
from .basis import (BETA_VARIANTS, axial_closed_form, basis_for_degree,
                    norm_sq_sphere_closed, sc_e1_norm_sq_closed, sc_norm_sq_closed,
                    spherical_monogenic)
from .fueter import (closed_form_taylor, fueter_power, fueter_power_permutation_sum,
                     taylor_coefficients, taylor_reconstruct)
from .quadrature import QuadratureRule, gram_matrix_ball, sc_inner_product_S

SCHEMA = "monogenics-kit/1"


def thread_count() -> int:
    """Worker cap from MONOKIT_THREADS; 1 (serial) when unset or invalid."""
    raw = os.environ.get("MONOKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    """fn over items, optionally threaded, results in input order."""
    workers = thread_count()
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# -- individual check sections --------------------------------------------------


def check_monogenicity(max_degree: int) -> dict:
    """Exact kernel check: applying the Cauchy-Riemann operator gives zero."""

    def one_degree(n: int) -> list[str]:
        return [e.index.label for e in basis_for_degree(n)
                if not e.poly.dirac().is_zero()]

    failures = _map_ordered(one_degree, range(max_degree + 1))
    flat = [f"{n}:{label}" for n, labels in enumerate(failures) for label in labels]
    return {
        "max_degree": max_degree,
        "elements": sum(2 * n + 3 for n in range(max_degree + 1)),
        "passed": not flat,
        "failures": flat,
    }


def check_gram(max_degree: int, tolerance: float) -> dict:
    """Ball Gram of the normalized system vs the identity, quadrature route."""
    gram = gram_matrix_ball(max_degree)
    deviation = float(np.max(np.abs(gram - np.eye(gram.shape[0]))))
    return {
        "max_degree": max_degree,
        "size": gram.shape[0],
        "max_deviation": deviation,
        "tolerance": tolerance,
        "passed": deviation < tolerance,
    }


def check_ball_sphere_relation(max_degree: int, tolerance: float) -> dict:
    """Ball inner products equal sphere ones over (2n+3) on the diagonal blocks.

    Quaternion-valued products on both sides, the ball side integrated with
    its own radial quadrature, compared entrywise after scaling by the
    sphere-norm product so the tolerance is relative.
    """
    from .quadrature import conj_product_grid, radial_moment

    elements = [e for n in range(max_degree + 1) for e in basis_for_degree(n)]
    rule = QuadratureRule.for_degree(2 * max_degree + 2)
    grid = rule.grid()
    samples = [e.poly.eval_grid(*grid) for e in elements]
    worst = 0.0
    for i, e in enumerate(elements):
        for j in range(i, len(elements)):
            g = elements[j]
            n, k = e.index.n, g.index.n
            sphere = rule.integrate(conj_product_grid(samples[i], samples[j]))
            ball = sphere * radial_moment(n + k + 2)
            expected = sphere / (2 * n + 3) if n == k else np.zeros(4)
            scale = float(e.norm_S) * float(g.norm_S)
            worst = max(worst, float(np.max(np.abs(ball - expected))) / scale)
    return {
        "max_degree": max_degree,
        "max_relative_error": worst,
        "tolerance": tolerance,
        "passed": worst < tolerance,
    }


def check_norms(max_degree: int, max_degree_constants: int, tolerance: float) -> dict:
    """Quadrature norms against every closed form, worst relative error each.

    The scalar-part norm of the order-(n+1) elements multiplied by e1 uses
    its closed form only from degree 1 up; at degree 0 the closed form does
    not hold and the true values (1 and 0 times pi) are pinned instead.
    """
    def sphere_errs(n: int) -> float:
        rule = QuadratureRule.for_degree(2 * n + 2)
        worst = 0.0
        for e in basis_for_degree(n):
            closed = float(norm_sq_sphere_closed(n, e.index.m)) * math.pi
            quad = sc_inner_product_S(e.poly, e.poly, rule)
            worst = max(worst, abs(quad - closed) / closed)
        return worst

    def sc_errs(n: int) -> float:
        rule = QuadratureRule.for_degree(2 * n + 2)
        worst = 0.0
        for m in range(n + 1):
            closed = float(sc_norm_sq_closed(n, m)) * math.pi
            poly = spherical_monogenic(n, "X", m).poly.sc()
            quad = sc_inner_product_S(poly, poly, rule)
            worst = max(worst, abs(quad - closed) / closed)
        return worst

    def const_errs(n: int) -> float:
        from .quaternion import E1
        rule = QuadratureRule.for_degree(2 * n + 2)
        worst = 0.0
        for kind in ("X", "Y"):
            closed = float(sc_e1_norm_sq_closed(n)) * math.pi
            poly = (spherical_monogenic(n, kind, n + 1).poly * E1).sc()
            quad = sc_inner_product_S(poly, poly, rule)
            worst = max(worst, abs(quad - closed) / closed)
        return worst

    sphere_worst = max(_map_ordered(sphere_errs, range(max_degree + 1)))
    sc_worst = max(_map_ordered(sc_errs, range(max_degree + 1)))
    const_worst = max(_map_ordered(const_errs, range(1, max_degree_constants + 1)))
    return {
        "max_degree": max_degree,
        "sphere_norm_rel_error": sphere_worst,
        "scalar_norm_rel_error": sc_worst,
        "constants_scalar_norm_rel_error": const_worst,
        "constants_degree_range": [1, max_degree_constants],
        "tolerance": tolerance,
        "passed": max(sphere_worst, sc_worst, const_worst) < tolerance,
    }


def check_taylor(max_degree: int) -> dict:
    """Exact Taylor round-trip plus the permutation-sum oracle for the powers."""

    def one_degree(n: int) -> tuple[bool, bool]:
        round_trip = all(taylor_reconstruct(taylor_coefficients(e.poly)) == e.poly
                         for e in basis_for_degree(n))
        oracle = all(fueter_power(g, n - g).poly == fueter_power_permutation_sum(g, n - g)
                     for g in range(n + 1))
        return round_trip, oracle

    results = _map_ordered(one_degree, range(max_degree + 1))
    return {
        "max_degree": max_degree,
        "round_trip_exact": all(r for r, _ in results),
        "permutation_oracle_match": all(o for _, o in results),
        "passed": all(r and o for r, o in results),
    }


# -- closed-form agreement tables (golden material) ------------------------------


def axial_agreement(max_degree: int) -> dict:
    """Printed axial closed forms vs the derivative-of-harmonic route, by variant.

    Status per (n, l): agree (exact polynomial equality), disagree, or
    undefined (the reading produces a division by zero).  Nothing here is
    asserted; shifts in status are what the golden comparison guards.
    """
    variants = {}
    for variant in BETA_VARIANTS:
        entries = []
        tally = {"agree": 0, "disagree": 0, "undefined": 0}
        for n in range(max_degree + 1):
            for l in range(n + 2):
                canonical = spherical_monogenic(n, "X", l).poly
                candidate = axial_closed_form(n, l, variant)
                if candidate is None:
                    status = "undefined"
                else:
                    status = "agree" if candidate == canonical else "disagree"
                tally[status] += 1
                entries.append({"n": n, "l": l, "status": status})
        variants[variant] = {"entries": entries, "summary": tally}
    return {"family": "axial-closed-forms", "max_degree": max_degree,
            "canonical": "half-conjugate-derivative-of-solid-harmonic",
            "variants": variants}


def taylor_agreement(max_degree: int) -> dict:
    """Printed Taylor-coefficient closed forms vs exact coefficients, by variant."""
    variants = {}
    for variant in BETA_VARIANTS:
        entries = []
        tally = {"agree": 0, "disagree": 0, "undefined": 0}
        for n in range(max_degree + 1):
            for l in range(n + 2):
                exact = taylor_coefficients(spherical_monogenic(n, "X", l).poly)
                candidate = closed_form_taylor(n, l, variant)
                if candidate is None:
                    status = "undefined"
                else:
                    same = all(candidate[gamma] == c for gamma, c in exact.items())
                    status = "agree" if same else "disagree"
                tally[status] += 1
                entries.append({"n": n, "l": l, "status": status})
        variants[variant] = {"entries": entries, "summary": tally}
    return {"family": "taylor-closed-forms", "max_degree": max_degree,
            "canonical": "repeated-partials-of-basis-element",
            "variants": variants}


# -- top-level document -----------------------------------------------------------


def build_report(max_degree: int = 6, tolerance: float = 1e-10, seed: int = 0,
                 bound_samples: int = 10_000, bohr_functions: int = 100) -> dict:
    """One document covering every verification the package makes.

    Degrees beyond max_degree are used only where a specific closed form
    needs its own documented range (constants norms start at 1).
    """
    pointwise = bohr_mod.verify_pointwise_bounds(max_degree, bound_samples, seed)
    bohr_report = bohr_mod.bohr_radius()
    sections = {
        "schema": SCHEMA,
        "config": {"max_degree": max_degree, "tolerance": tolerance, "seed": seed,
                   "bound_samples": bound_samples, "bohr_functions": bohr_functions},
        "monogenicity": check_monogenicity(max_degree),
        "gram": check_gram(max_degree, tolerance),
        "ball_sphere_relation": check_ball_sphere_relation(max_degree, tolerance),
        "norms": check_norms(max_degree, min(max_degree, 6), tolerance),
        "taylor": check_taylor(max_degree),
        "bounds": {
            "corollary": bohr_mod.verify_corollary_bounds(max_degree).to_json_dict(),
            "pointwise": pointwise["polynomial"].to_json_dict(),
            "sc": pointwise["scalar-part"].to_json_dict(),
            "constants": pointwise["constants-e1"].to_json_dict(),
            "sc_ratio_lemmas": bohr_mod.verify_sc_ratio_lemmas(max_degree).to_json_dict(),
            "constants_ratio_lemma":
                bohr_mod.verify_constants_ratio_lemma(max_degree).to_json_dict(),
        },
        "bohr": {
            **bohr_report.to_json_dict(),
            "empirical": bohr_mod.empirical_bohr_sweep(bohr_functions,
                                                       seed=seed).to_json_dict(),
            "note": ("the first series reaches 1 at r1, so the usable radius is a"
                     " rounding of r1; S1 already exceeds 1 at 0.05"),
        },
        "closed_form_agreement": {
            "axial": axial_agreement(max_degree),
            "taylor": taylor_agreement(max_degree),
        },
    }
    failed = []
    for name in ("monogenicity", "gram", "ball_sphere_relation", "norms", "taylor"):
        if not sections[name]["passed"]:
            failed.append(name)
    for name, sub in sections["bounds"].items():
        if not sub["passed"]:
            failed.append(f"bounds.{name}")
    if not sections["bohr"]["empirical"]["passed"]:
        failed.append("bohr.empirical")
    sections["passed"] = not failed
    sections["failed_sections"] = failed
    return sections
