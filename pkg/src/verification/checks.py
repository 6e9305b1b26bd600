import inspect
from functools import wraps
from random import Random
from typing import Any, Callable, Dict, Tuple

from src.chevalley import get_engine
from src.cohomology import (
    GroupAutomorphism,
    build_sym4_model,
    burnside_class_count,
    conjugacy_classes,
    g_image,
    h1_classes,
    sigma_class_split,
    structure_descriptor,
    twisted_related,
)
from src.cohomology.h1 import twisted_image
from src.config import load_reference_values, settings
from src.groupelems import (
    InvolutionClassLabel,
    a7_involution_survey,
    construct_e,
    construct_f,
    construct_g,
    e_element,
    evaluate,
    f_square_element,
    g_element,
    involution_class,
    reduced_e,
    root_conjugation_map,
    torus_involution_census,
)
from src.lattices import IsogenyForm, get_lattice
from src.logger import logger
from src.verification.models import CheckResult, CheckStatus
from src.verification.theorem import (
    derived_membership,
    prop_sigma_structure,
    sigma_action_element,
    theorem_decision,
    theorem_sweep,
)
from src.rootsystem import standard_a7_base

Outcome = Tuple[Dict[str, bool], Dict[str, Any]]


def verification_check(name: str, anchor: str) -> Callable[[Callable[..., Outcome]], Callable[..., CheckResult]]:
    """Turn a function returning (assertions, details) into a CheckResult producer.

    The name may reference the function's arguments, e.g. "lemma[q={q}]".
    Exceptions never escape; they become a failing result carrying the error.
    """
    def decorator(func: Callable[..., Outcome]) -> Callable[..., CheckResult]:
        signature = inspect.signature(func)

        @wraps(func)
        def wrapper(*args, **kwargs) -> CheckResult:
            bound = signature.bind(*args, **kwargs)
            bound.apply_defaults()
            check_name = name.format(**bound.arguments)
            try:
                assertions, details = func(*args, **kwargs)
            except Exception as e:
                logger.error(f"{check_name} raised {type(e).__name__}: {e}")
                return CheckResult(
                    name=check_name,
                    status=CheckStatus.FAIL,
                    paper_anchor=anchor,
                    details={"error": f"{type(e).__name__}: {e}"},
                )

            passed = all(assertions.values())
            if passed:
                logger.info(f"{check_name}: pass")
            else:
                failed = [key for key, ok in assertions.items() if not ok]
                logger.warning(f"{check_name}: fail on {failed}")
            return CheckResult(
                name=check_name,
                status=CheckStatus.PASS if passed else CheckStatus.FAIL,
                paper_anchor=anchor,
                details={"assertions": {k: bool(v) for k, v in assertions.items()}, **details},
            )
        return wrapper
    return decorator


# Matrix engine
@verification_check("engine_self_test[p={p}]", "Chevalley basis; h_alpha(t) = w_alpha(t) w_alpha(1)^-1")
def check_engine(p: int) -> Outcome:
    engine = get_engine(p)
    basis = engine.basis
    roots = engine.rs.roots
    rng = Random(settings.sample_seed)

    def nonzero():
        return engine.field.gf(rng.randrange(1, engine.field.order))

    violations = basis.antisymmetry_violations()
    jacobi_failures = basis.jacobi_failures(settings.jacobi_samples, rng)

    h_failures = 0
    for _ in range(settings.h_agreement_samples):
        alpha, t = rng.choice(roots), nonzero()
        product = engine.w_matrix(alpha, t) @ engine.inverse(engine.w_matrix(alpha, 1))
        if not engine.equal(product, engine.h_matrix(alpha, t)):
            h_failures += 1
            logger.error(f"h_{alpha}({int(t)}) disagrees with its defining product")

    # x_a(s)^-1 x_b(t)^-1 x_a(s) x_b(t) = x_{a+b}(N(a, b) s t)
    pairs = [(a, b) for a in roots for b in roots if engine.rs.add(a, b) is not None]
    commutator_failures = 0
    for _ in range(settings.commutator_samples):
        (alpha, beta), s, t = rng.choice(pairs), nonzero(), nonzero()
        lhs = engine.x_matrix(alpha, -s) @ engine.x_matrix(beta, -t) @ engine.x_matrix(alpha, s) @ engine.x_matrix(beta, t)
        n = engine.scalar(basis.structure_constant(alpha, beta))
        if not engine.equal(lhs, engine.x_matrix(engine.rs.add(alpha, beta), n * s * t)):
            commutator_failures += 1
            logger.error(f"Commutator relation fails for ({alpha}, {beta})")

    bracket_failures = 0
    for alpha in engine.rs.simple_roots:
        m = engine.x_matrix(alpha, nonzero())
        for _ in range(10):
            if not engine.preserves_bracket(m, rng.randrange(engine.dim), rng.randrange(engine.dim)):
                bracket_failures += 1

    assertions = {
        "antisymmetry": not violations,
        "jacobi": jacobi_failures == 0,
        "h_agreement": h_failures == 0,
        "commutator_relation": commutator_failures == 0,
        "bracket_preserved": bracket_failures == 0,
    }
    details = {
        "dim": engine.dim,
        "structure_constants": len(basis.structure_constants),
        "sign_convention_id": basis.sign_convention_id,
        "jacobi_samples": settings.jacobi_samples,
        "jacobi_failures": jacobi_failures,
        "h_agreement_samples": settings.h_agreement_samples,
        "h_agreement_failures": h_failures,
        "commutator_samples": settings.commutator_samples,
        "commutator_failures": commutator_failures,
        "bracket_failures": bracket_failures,
    }
    return assertions, details


@verification_check("construction[p={p}]", "e is an involution; f centralizes e; g^2 = e")
def check_construction(p: int) -> Outcome:
    engine = get_engine(p)
    lattice = get_lattice()
    e_m = evaluate(construct_e(engine), engine)
    f_m = evaluate(construct_f(engine.rs), engine)
    g_m = evaluate(construct_g(engine), engine)
    ef_m = e_m @ f_m
    g_inverse = engine.inverse(g_m)
    f_inverse = engine.inverse(f_m)

    classes = {name: involution_class(engine, m).value for name, m in (("e", e_m), ("f", f_m), ("ef", ef_m))}
    dims = {name: engine.fixed_space_dim(m) for name, m in (("e", e_m), ("f", f_m), ("ef", ef_m))}

    zeta16 = engine.root_of_unity(16)
    inverts_torus = all(
        engine.equal(f_m @ engine.h_matrix(a, zeta16) @ f_inverse, engine.h_matrix(a, zeta16 ** -1))
        for a in engine.rs.positive_roots
    )

    sign_map = root_conjugation_map(engine, f_m)
    targets_negative = all(beta == -alpha for alpha, (beta, _) in sign_map.items())
    plus_roots = [str(alpha) for alpha, (_, s) in sign_map.items() if s == 1]
    if plus_roots:
        logger.warning(f"f x_alpha(1) f^-1 = x_-alpha(+1) for {len(plus_roots)} roots under this sign convention")

    common = engine.common_fixed_space_dim([e_m, f_m])
    assertions = {
        "e_squared_identity": engine.is_identity(e_m @ e_m),
        "e_equals_reduced_form": engine.equal(e_m, evaluate(reduced_e(engine), engine)),
        "e_matches_lattice_image": engine.equal(e_m, engine.torsion_to_matrix(e_element(lattice))),
        "f_squared_identity": engine.is_identity(f_m @ f_m),
        "e_f_commute": engine.commutes(e_m, f_m),
        "all_type_A7": set(classes.values()) == {InvolutionClassLabel.A7.value},
        "f_inverts_torus": inverts_torus,
        "f_negates_roots": targets_negative,
        "f_sign_map_covers_all_roots": len(sign_map) == len(engine.rs),
        "f_sign_map_all_minus": not plus_roots,
        "g_squared_is_e": engine.equal(g_m @ g_m, e_m),
        "g_matches_lattice_image": engine.equal(g_m, engine.torsion_to_matrix(g_element(lattice))),
        "g_f_g_inverse_is_ef": engine.equal(g_m @ f_m @ g_inverse, ef_m),
        "g_ef_g_inverse_is_f": engine.equal(g_m @ ef_m @ g_inverse, f_m),
        "g_fixes_e": engine.commutes(g_m, e_m),
        "common_fixed_dim_28": common == 28,
    }
    details = {
        "field": {"p": engine.field.p, "k": engine.field.k},
        "involution_classes": classes,
        "fixed_dims": dims,
        "common_fixed_dim": common,
        "root_sign_map": {"minus": len(sign_map) - len(plus_roots), "plus": len(plus_roots), "plus_roots": plus_roots},
    }
    return assertions, details


@verification_check("involution_census[p={p}]", "three conjugacy classes of involutions")
def check_involution_census(p: int) -> Outcome:
    constants = load_reference_values()
    report = torus_involution_census(get_engine(p), get_lattice())
    expected_lifts = {dim: [order] for dim, order in constants.census_lift_orders.items()}
    assertions = {
        "class_count_128": report.class_count == 128,
        "total_127": report.total == 127,
        "support": {int(d) for d in report.counts} == set(constants.involution_table.values()),
        "frozen_counts": report.counts == constants.census_counts,
        "lift_orders": report.lift_orders == expected_lifts,
    }
    return assertions, report.model_dump()


# Lattice engine
@verification_check("simply_connected", "generates Z(G_sc); do not commute; e_1 has order 4; y' has order 8")
def check_simply_connected() -> Outcome:
    lattice = get_lattice()
    sc, adj = IsogenyForm.SIMPLY_CONNECTED, IsogenyForm.ADJOINT
    z = lattice.central_element_sc()
    f_square = f_square_element(lattice)
    e = e_element(lattice)
    y = g_element(lattice)
    z8 = z.embed(e.modulus)
    base = standard_a7_base(lattice.rs)
    center_adj = lattice.subsystem_center(base, 8, adj)
    center_sc = lattice.subsystem_center(base, 8, sc)

    assertions = {
        "fundamental_group_Z2": lattice.fundamental_group() == [2],
        "f_square_is_central": lattice.equal_in_form(f_square, z.embed(f_square.modulus), sc),
        "f_square_adjoint_trivial": lattice.is_trivial(f_square, adj),
        "e_sc_order_4": lattice.element_order(e, sc) == 4,
        "e_adjoint_order_2": lattice.element_order(e, adj) == 2,
        "e_squared_is_z": lattice.equal_in_form(e.scale(2), z8, sc),
        # f inverts the torus, so conjugating the e-lift by f gives z times it
        "lifts_do_not_commute": lattice.equal_in_form(-e, e + z8, sc) and not lattice.equal_in_form(-e, e, sc),
        "y_sc_order_8": lattice.element_order(y, sc) == 8,
        "a7_center_orders": (center_adj.order, center_sc.order) == (2, 4),
    }
    details = {
        "fundamental_group": lattice.fundamental_group(),
        "central_element": list(z.coeffs),
        "e_orders": {"simply_connected": lattice.element_order(e, sc), "adjoint": lattice.element_order(e, adj)},
        "y_sc_order": lattice.element_order(y, sc),
        "a7_center": {"adjoint": center_adj.order, "simply_connected": center_sc.order},
    }
    return assertions, details


@verification_check("lemma_derived_membership[q={q}]", "E_sigma <= G_sigma' iff q = 1 mod 4")
def check_lemma_derived_membership(q: int) -> Outcome:
    untwisted, twisted = derived_membership(q)
    f_lift_fixed = all(token.param is None for token in construct_f())
    assertions = {
        "untwisted": untwisted == (q % 4 == 1),
        "twisted": twisted == (q % 4 == 3),
        "f_lift_sigma_fixed": f_lift_fixed,
    }
    details = {"q": q, "E_in_derived": untwisted, "E_twisted_in_derived": twisted, "f_lift_sigma_fixed": f_lift_fixed}
    return assertions, details


@verification_check("theorem_decision[q={q}]", "N_G'(E) = C.Sym3 iff q = +-1 mod 8")
def check_theorem(q: int) -> Outcome:
    decision = theorem_decision(q)
    spot = load_reference_values().theorem_spot_rows.get(str(q))
    assertions = {"routes_agree": decision.agrees}
    if spot is not None:
        assertions["spot_row"] = decision.outer_part == spot
    return assertions, decision.model_dump()


@verification_check("theorem_sweep[limit={limit}]", "y in G_sigma' iff q = epsilon mod 8")
def check_theorem_sweep(limit: int) -> Outcome:
    decisions = theorem_sweep(limit)
    disagreements = [d.q for d in decisions if not d.agrees]
    assertions = {"all_agree": not disagreements, "nonempty": bool(decisions)}
    details = {
        "limit": limit,
        "count": len(decisions),
        "sym3": sum(d.outer_part == "Sym3" for d in decisions),
        "disagreements": disagreements,
    }
    return assertions, details


@verification_check("sigma_structure[q={q}]", "sigma acts trivially on N_G(E^eps)/N_G(E^eps)°")
def check_sigma_structure(q: int) -> Outcome:
    structure = prop_sigma_structure(q)
    action = sigma_action_element(q)
    assertions = {
        "centralizer_in_derived": structure.centralizer_in_derived,
        "action_matches_residue": action == ("1" if q % 4 == 1 else "f"),
    }
    return assertions, {**structure.model_dump(), "sigma_action_element": action}


@verification_check("h1_and_table1", "structure of N_G(F)_sigma; f and ef correspond to the same sigma-class")
def check_h1_and_table1() -> Outcome:
    model = build_sym4_model()
    trivial = GroupAutomorphism.identity(model)
    classes = h1_classes(model, trivial)
    descriptors = [structure_descriptor(model, c) for c in classes]

    ordinary = {frozenset(c) for c in conjugacy_classes(model)}
    g = g_image(model)
    f, ef, e, one = (model.index(name) for name in ("f", "ef", "e", "1"))

    sigma_f = GroupAutomorphism.inner(model, f)
    twisted = h1_classes(model, sigma_f)
    translated = {frozenset(model.labels[model.mul(model.index(x), f)] for x in c.members) for c in twisted}

    splits = {}
    for name in ("1", "f"):
        sigma = GroupAutomorphism.inner(model, model.index(name))
        split = sigma_class_split(model, h1_classes(model, sigma))
        splits[name] = sorted(split, key=len)
    expected_splits = {
        name: [[name], sorted(set(["1", "e", "f", "ef"]) - {name})] for name in ("1", "f")
    }

    assertions = {
        "five_classes": len(classes) == 5,
        "partition": sum(len(c.members) for c in classes) == model.order,
        "matches_conjugacy": {frozenset(c.members) for c in classes} == ordinary,
        "burnside": burnside_class_count(model) == 5,
        "centerless": model.center() == [model.identity],
        "descriptors": all(d.recipe_agrees for d in descriptors if d.derived_in_source),
        "f_related_to_ef": twisted_related(model, trivial, "f", "ef") is not None,
        "g_witnesses_f_ef": g is not None and twisted_image(model, trivial, f, g) == ef,
        "one_related_to_e_under_f": twisted_related(model, sigma_f, "1", "e") is not None,
        "g_witnesses_one_e": g is not None and twisted_image(model, sigma_f, one, g) == e,
        "twisted_class_count": len(twisted) == 5,
        "right_translation_bijection": translated == ordinary,
        "sigma_splits": splits == expected_splits,
    }
    details = {
        "classes": [c.model_dump() for c in classes],
        "descriptors": [d.model_dump() for d in descriptors],
        "g_image": model.labels[g] if g is not None else None,
        "twisted_by_f": [c.members for c in twisted],
        "sigma_splits": splits,
    }
    return assertions, details


@verification_check("a7_involution_survey", "lifts to an involution in G_sc, but this cannot happen")
def check_survey() -> Outcome:
    report = a7_involution_survey(get_lattice())
    diag_i4 = next(c for c in report.cases if c.a == 4 and c.lam == "1")
    assertions = {
        "admissible_cases": report.admissible == 6,
        "contradiction_reproduced": report.contradiction_reproduced,
        "diag_i4_lifts_to_involution": diag_i4.sc_order_f == 2,
    }
    return assertions, report.model_dump()
