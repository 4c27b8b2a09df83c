//! End-to-end walks of the engine drivers on the worked examples.

use std::sync::Arc;

use mingb_core::engine::{
    buchberger_with_min, min_gens_of_reduced_gb, optimized_buchberger, run_buchberger,
    EngineConfig,
};
use mingb_core::grading::{MultiDegree, RingContext};
use mingb_core::oracle;
use mingb_core::pairset::KillPath;
use mingb_core::reduction::{interreduce, normal_remainder, s_vector};
use mingb_core::vector::ModuleVector;
use mingb_core::{OrderingSpec, Strategy};

fn ctx3() -> Arc<RingContext> {
    RingContext::standard(3)
}

/// The three-generator homogeneous ideal: x^3 z^2 + x^2 y^2 z, x^3 y^8,
/// y^10 z^2.
fn ex3_input() -> Vec<ModuleVector> {
    let ctx = ctx3();
    vec![
        ModuleVector::poly(ctx.clone(), &[(1, &[3, 0, 2]), (1, &[2, 2, 1])]),
        ModuleVector::poly(ctx.clone(), &[(1, &[3, 8, 0])]),
        ModuleVector::poly(ctx.clone(), &[(1, &[0, 10, 2])]),
    ]
}

#[test]
fn optimized_run_of_ex3_full_trace() {
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let out = run_buchberger(&ex3_input(), &cfg).unwrap();

    // four basis elements, the last being x^2 y^10 z
    assert_eq!(out.basis.len(), 4);
    assert_eq!(
        out.basis[3],
        ModuleVector::poly(ctx3(), &[(1, &[2, 10, 1])])
    );

    // treated pairs: (1,2), (3,4), (2,4) in one-based labels
    assert_eq!(out.treated, vec![(0, 1), (2, 3), (1, 3)]);

    // the pair (1,3) is eliminated at degree 15 without reduction work
    assert_eq!(out.eliminations.len(), 1);
    let kill = &out.eliminations[0];
    assert_eq!(kill.pair, (0, 2));
    assert_eq!(kill.degree, MultiDegree(vec![15]));
    assert_eq!(kill.path, KillPath::DirectLtMatch);

    // (2,3) entered the pool when element 4 was appended
    assert_eq!(out.pool_log.len(), 1);
    assert_eq!(out.pool_log[0].pair, (1, 2));
    assert_eq!(out.pool_log[0].parent, 3);
    assert_eq!(out.pool_log[0].degree, MultiDegree(vec![15]));

    assert_eq!(out.stats.sigma_total, 6);
    assert_eq!(out.stats.sigma2, 4);
    assert_eq!(out.stats.m23_kills, 1);
    assert_eq!(out.stats.m48_kills, 0);
    assert_eq!(out.stats.theta, 3);
    assert!(out.stats.theta_identity_holds());

    // all three inputs are minimal generators
    assert_eq!(out.vmin_indices, vec![0, 1, 2]);
    assert!(out.degree_compatible);
}

#[test]
fn ex3_cofactor_facts_behind_the_pool_entry() {
    // t_24 = y^2 z properly divides t_23 = y^2 z^2, and t_34 = x^2
    // properly divides t_32 = x^3
    use mingb_core::pairset::CriticalPair;
    use mingb_core::reduction::LeadingData;
    use mingb_core::{Coefficient, Term};
    let ctx = ctx3();
    let lead = |e: &[u32]| LeadingData {
        coeff: Coefficient::one(),
        term: Term::new(e.to_vec()),
        component: 0,
    };
    let leading = vec![
        lead(&[3, 0, 2]),
        lead(&[3, 8, 0]),
        lead(&[0, 10, 2]),
        lead(&[2, 10, 1]),
    ];
    let p24 = CriticalPair::new(1, 3, &leading, &ctx).unwrap();
    let p23 = CriticalPair::new(1, 2, &leading, &ctx).unwrap();
    let p34 = CriticalPair::new(2, 3, &leading, &ctx).unwrap();
    assert_eq!(p24.t_ij, Term::new(vec![0, 2, 1])); // y^2 z
    assert!(p24.t_ij.properly_divides(&p23.t_ij)); // divides y^2 z^2
    assert_eq!(p34.t_ij, Term::new(vec![2, 0, 0])); // x^2
    assert!(p34.t_ij.properly_divides(&p23.t_ji)); // divides x^3
    // and the pooled pair is created exactly because the two cofactors
    // against element 4 are coprime
    assert!(p24.t_ij.coprime(&p34.t_ij));
}

#[test]
fn single_monomial_is_its_own_basis() {
    let ctx = ctx3();
    let v = ModuleVector::poly(ctx, &[(1, &[1, 2, 0])]);
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let (basis, stats) = optimized_buchberger(&[v.clone()], &cfg).unwrap();
    assert_eq!(basis, vec![v]);
    assert_eq!(stats.sigma_total, 0);
    assert_eq!(stats.theta, 0);
}

#[test]
fn truncated_run_is_a_prefix_of_the_full_run() {
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let full = run_buchberger(&ex3_input(), &cfg).unwrap();
    let truncated_cfg = cfg.clone().with_truncation(MultiDegree(vec![13]));
    let truncated = run_buchberger(&ex3_input(), &truncated_cfg).unwrap();
    assert_eq!(truncated.basis.len(), 4);
    assert_eq!(truncated.basis, full.basis[..4]);
    // pairs beyond the bound were never enqueued
    assert!(truncated.stats.sigma2 < full.stats.sigma2);
}

#[test]
fn strategies_agree_on_ex3() {
    let base = EngineConfig::new(OrderingSpec::deglex());
    let o = OrderingSpec::deglex();
    let mut reduced: Vec<Vec<ModuleVector>> = Vec::new();
    let mut theta = Vec::new();
    for strategy in [Strategy::Naive, Strategy::Gm, Strategy::Ckr] {
        let cfg = base.clone().with_strategy(strategy);
        let out = run_buchberger(&ex3_input(), &cfg).unwrap();
        theta.push(out.stats.theta);
        reduced.push(interreduce(&out.basis, &o));
    }
    assert_eq!(reduced[0], reduced[1]);
    assert_eq!(reduced[1], reduced[2]);
    // naive treats all six pairs, gm four, the optimized run three
    assert_eq!(theta, vec![6, 4, 3]);
}

#[test]
fn buchberger_criterion_holds_for_ex3_output() {
    let o = OrderingSpec::deglex();
    let cfg = EngineConfig::new(o);
    let (basis, _) = optimized_buchberger(&ex3_input(), &cfg).unwrap();
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_vector(&basis[i], &basis[j], &o).unwrap();
            assert!(normal_remainder(&s, &basis, &o).is_zero());
        }
    }
}

#[test]
fn basis_degrees_are_non_decreasing() {
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let out = run_buchberger(&ex3_input(), &cfg).unwrap();
    let degrees: Vec<MultiDegree> = out
        .basis
        .iter()
        .map(|g| g.degree().unwrap().unwrap())
        .collect();
    for w in degrees.windows(2) {
        assert!(w[0] <= w[1]);
    }
}

#[test]
fn with_min_selects_minimal_generators() {
    let ctx = RingContext::standard(2);
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let x = ModuleVector::poly(ctx.clone(), &[(1, &[1, 0])]);
    let x2 = ModuleVector::poly(ctx.clone(), &[(1, &[2, 0])]);
    let y = ModuleVector::poly(ctx.clone(), &[(1, &[0, 1])]);
    let (gb, vmin) = buchberger_with_min(&[x.clone(), x2, y.clone()], &cfg).unwrap();
    assert_eq!(vmin, vec![x.clone(), y.clone()]);
    assert!(oracle::is_member(
        &ModuleVector::poly(ctx, &[(1, &[2, 0])]),
        &gb,
        &OrderingSpec::deglex()
    ));
}

#[test]
fn with_min_keeps_all_three_ex3_inputs() {
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let input = ex3_input();
    let (_, vmin) = buchberger_with_min(&input, &cfg).unwrap();
    assert_eq!(vmin, input);
    // cross-check with the brute-force count
    let report = oracle::minimalize(&input, &OrderingSpec::deglex()).unwrap();
    assert_eq!(report.mu, 3);
}

#[test]
fn duplicate_generators_are_dropped_once() {
    let ctx = RingContext::standard(2);
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let x = ModuleVector::poly(ctx.clone(), &[(1, &[1, 0])]);
    let out = run_buchberger(&[x.clone(), x.clone()], &cfg).unwrap();
    assert_eq!(out.warnings.duplicate_generators, 1);
    assert_eq!(out.vmin_indices, vec![0]);
}

#[test]
fn zero_generators_raise_a_warning_only() {
    let ctx = RingContext::standard(2);
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let x = ModuleVector::poly(ctx.clone(), &[(1, &[1, 0])]);
    let out = run_buchberger(&[ModuleVector::zero(ctx), x.clone()], &cfg).unwrap();
    assert_eq!(out.warnings.zero_generators, 1);
    assert_eq!(out.basis, vec![x]);
}

#[test]
fn non_homogeneous_input_is_rejected_by_index() {
    let ctx = RingContext::standard(2);
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let good = ModuleVector::poly(ctx.clone(), &[(1, &[1, 0])]);
    let bad = ModuleVector::poly(ctx, &[(1, &[1, 0]), (1, &[0, 2])]);
    let err = run_buchberger(&[good, bad], &cfg).unwrap_err();
    assert_eq!(
        err,
        mingb_core::EngineError::NonHomogeneousGenerator { index: 1 }
    );
}

#[test]
fn non_positive_grading_is_rejected() {
    use mingb_core::grading::{DegreeMatrix, ShiftVector};
    let w = DegreeMatrix::new(vec![vec![1, -1]]).unwrap();
    let ctx = RingContext::new(2, w, 1, ShiftVector::zeros(1, 1)).unwrap();
    let v = ModuleVector::poly(ctx, &[(1, &[1, 1])]);
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    assert_eq!(
        run_buchberger(&[v], &cfg).unwrap_err(),
        mingb_core::EngineError::NonPositiveGrading
    );
}

#[test]
fn empty_input_yields_empty_basis() {
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let out = run_buchberger(&[], &cfg).unwrap();
    assert!(out.basis.is_empty());
}

#[test]
fn min_gens_of_pair_of_variables() {
    let ctx = RingContext::standard(2);
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let x = ModuleVector::poly(ctx.clone(), &[(1, &[1, 0])]);
    let y = ModuleVector::poly(ctx, &[(1, &[0, 1])]);
    let out = min_gens_of_reduced_gb(&[x.clone(), y.clone()], &cfg).unwrap();
    assert_eq!(out.vmin, vec![x, y]);
    assert_eq!(out.swaps, 0);
}

#[test]
fn min_gens_of_degree_two_monomials() {
    let ctx = RingContext::standard(2);
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let gens = vec![
        ModuleVector::poly(ctx.clone(), &[(1, &[2, 0])]),
        ModuleVector::poly(ctx.clone(), &[(1, &[1, 1])]),
        ModuleVector::poly(ctx, &[(1, &[0, 2])]),
    ];
    let out = min_gens_of_reduced_gb(&gens, &cfg).unwrap();
    assert_eq!(out.vmin.len(), 3);
    let report = oracle::minimalize(&gens, &OrderingSpec::deglex()).unwrap();
    assert_eq!(report.mu, 3);
}

#[test]
fn min_gens_of_ex3_reduced_basis() {
    let o = OrderingSpec::deglex();
    let cfg = EngineConfig::new(o);
    let (basis, _) = optimized_buchberger(&ex3_input(), &cfg).unwrap();
    let reduced = interreduce(&basis, &o);
    assert_eq!(reduced.len(), 4);
    let out = min_gens_of_reduced_gb(&reduced, &cfg).unwrap();
    assert_eq!(out.vmin.len(), 3);
    assert_eq!(out.swaps, 1);
    assert_eq!(out.new_from_pairs, 1);
    // the swapped-out element is the one produced from the pair (1,2)
    let g4 = ModuleVector::poly(ctx3(), &[(1, &[2, 10, 1])]);
    assert!(!out.vmin.contains(&g4));
}

#[test]
fn min_gens_rejects_non_monic_input() {
    let ctx = RingContext::standard(2);
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let v = ModuleVector::poly(ctx, &[(2, &[1, 0])]);
    assert!(matches!(
        min_gens_of_reduced_gb(&[v], &cfg),
        Err(mingb_core::EngineError::NotReduced { .. })
    ));
}

#[test]
fn min_gens_rejects_reducible_tails() {
    let ctx = RingContext::standard(2);
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let x2 = ModuleVector::poly(ctx.clone(), &[(1, &[2, 0])]);
    let bad = ModuleVector::poly(ctx, &[(1, &[2, 0]), (1, &[0, 2])]);
    assert!(matches!(
        min_gens_of_reduced_gb(&[x2, bad], &cfg),
        Err(mingb_core::EngineError::NotReduced { .. })
    ));
}

#[test]
fn oracle_and_engine_agree_on_ex3() {
    let o = OrderingSpec::deglex();
    let cfg = EngineConfig::new(o);
    let (basis, _) = optimized_buchberger(&ex3_input(), &cfg).unwrap();
    let naive = oracle::naive_gb(&ex3_input(), &o).unwrap();
    assert_eq!(interreduce(&basis, &o), interreduce(&naive, &o));
}
