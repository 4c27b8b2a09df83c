//! Acceptance suite: the worked examples, the cyclic-7 scale check, and
//! the randomized cross-checking properties. Each test prints one PASS
//! line with the measured quantities.

use std::time::{Duration, Instant};

use mingb_cli::gen::{gen_cyclic, gen_random, homogenize, RandomSpec};
use mingb_cli::parse::parse_problem;
use mingb_core::engine::{run_buchberger, EngineConfig};
use mingb_core::grading::{MultiDegree, RingContext};
use mingb_core::oracle;
use mingb_core::ordering::OrderingSpec;
use mingb_core::pairset::{build_pairs, gm_rules, sigma_bam, KillPath};
use mingb_core::reduction::{
    interreduce, leading_monomial, normal_remainder, s_vector, LeadingData,
};
use mingb_core::term::Term;
use mingb_core::vector::ModuleVector;
use mingb_core::{BaseOrder, Coefficient, Strategy};

fn lead(e: &[u32]) -> LeadingData {
    LeadingData {
        coeff: Coefficient::one(),
        term: Term::new(e.to_vec()),
        component: 0,
    }
}

fn sorted_pairs(pairs: &[mingb_core::CriticalPair]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = pairs.iter().map(|p| (p.i + 1, p.j + 1)).collect();
    out.sort();
    out
}

/// Criterion 1: the four-term example. All six syzygies are formed, rules
/// 1-2 leave four, rule 3 removes nothing, and the minimalization drops
/// exactly sigma_13.
#[test]
fn acceptance_1_four_term_example_pair_pipeline() {
    let started = Instant::now();
    let ctx = RingContext::standard(3);
    let leading = vec![
        lead(&[3, 0, 2]), // x^3 z^2
        lead(&[3, 4, 0]), // x^3 y^4
        lead(&[0, 5, 2]), // y^5 z^2
        lead(&[2, 5, 1]), // x^2 y^5 z
    ];
    let pairs = build_pairs(&leading, &ctx).unwrap();
    assert_eq!(pairs.len(), 6);
    let rules = gm_rules(&pairs);
    assert_eq!(sorted_pairs(&rules.sigma2), vec![(1, 2), (1, 3), (2, 4), (3, 4)]);
    assert_eq!(sorted_pairs(&rules.sigma3), sorted_pairs(&rules.sigma2));
    assert_eq!(rules.rule3_killed, 0);
    let bam = sigma_bam(&rules.sigma2, &leading, &ctx);
    assert_eq!(sorted_pairs(&bam.theta), vec![(1, 2), (2, 4), (3, 4)]);
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1));
    println!(
        "[acceptance 1] PASS - Sigma 6, Sigma'' 4, Sigma''' 4, Theta 3 in {:?}",
        elapsed
    );
}

/// Criterion 2: the five-variable example. The redundancy of sigma_12 is
/// only found after exactly one head reduction step.
#[test]
fn acceptance_2_five_variable_example_head_reduction() {
    let started = Instant::now();
    let ctx = RingContext::standard(5);
    let leading = vec![
        lead(&[0, 2, 6, 1, 2]),
        lead(&[8, 1, 0, 1, 4]),
        lead(&[8, 2, 6, 0, 0]),
        lead(&[8, 0, 6, 0, 4]),
    ];
    let pairs = build_pairs(&leading, &ctx).unwrap();
    let rules = gm_rules(&pairs);
    assert_eq!(sorted_pairs(&rules.sigma2), vec![(1, 2), (1, 3), (2, 4), (3, 4)]);
    let bam = sigma_bam(&rules.sigma2, &leading, &ctx);
    assert_eq!(sorted_pairs(&bam.theta), vec![(1, 3), (2, 4), (3, 4)]);
    assert_eq!(bam.m23_kills, 0);
    assert_eq!(bam.m48_kills, 1);
    assert_eq!(bam.events.len(), 1);
    let kill = &bam.events[0];
    assert_eq!(kill.pair, (0, 1));
    assert_eq!(kill.path, KillPath::HeadReductionChain);
    assert_eq!(kill.head_reductions, 1, "exactly one head reduction step");
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1));
    println!(
        "[acceptance 2] PASS - sigma_12 killed after exactly 1 head reduction in {:?}",
        elapsed
    );
}

/// Criterion 3: the three-generator ideal end to end: the basis, the
/// treated pairs, the pool entry with its cofactor facts, and the
/// elimination of (1,3) in degree 15.
#[test]
fn acceptance_3_three_generator_run_trace() {
    let started = Instant::now();
    let ctx = RingContext::standard(3);
    let input = vec![
        ModuleVector::poly(ctx.clone(), &[(1, &[3, 0, 2]), (1, &[2, 2, 1])]),
        ModuleVector::poly(ctx.clone(), &[(1, &[3, 8, 0])]),
        ModuleVector::poly(ctx.clone(), &[(1, &[0, 10, 2])]),
    ];
    let cfg = EngineConfig::new(OrderingSpec::deglex());
    let out = run_buchberger(&input, &cfg).unwrap();

    assert_eq!(out.basis.len(), 4);
    assert_eq!(
        out.basis[3],
        ModuleVector::poly(ctx.clone(), &[(1, &[2, 10, 1])]),
        "g_4 = x^2 y^10 z"
    );
    let mut treated: Vec<(usize, usize)> =
        out.treated.iter().map(|(i, j)| (i + 1, j + 1)).collect();
    treated.sort();
    assert_eq!(treated, vec![(1, 2), (2, 4), (3, 4)]);

    assert_eq!(out.eliminations.len(), 1);
    let kill = &out.eliminations[0];
    assert_eq!((kill.pair.0 + 1, kill.pair.1 + 1), (1, 3));
    assert_eq!(kill.degree, MultiDegree(vec![15]));

    assert_eq!(out.pool_log.len(), 1);
    let pool = &out.pool_log[0];
    assert_eq!((pool.pair.0 + 1, pool.pair.1 + 1), (2, 3));
    assert_eq!(pool.parent + 1, 4);

    // the cofactor facts behind the pool entry
    let leads: Vec<LeadingData> = out
        .basis
        .iter()
        .map(|g| leading_monomial(g, &OrderingSpec::deglex()).unwrap())
        .collect();
    let p23 = mingb_core::CriticalPair::new(1, 2, &leads, &ctx).unwrap();
    let p24 = mingb_core::CriticalPair::new(1, 3, &leads, &ctx).unwrap();
    let p34 = mingb_core::CriticalPair::new(2, 3, &leads, &ctx).unwrap();
    assert_eq!(p24.t_ij, Term::new(vec![0, 2, 1])); // t_24 = y^2 z
    assert_eq!(p23.t_ij, Term::new(vec![0, 2, 2])); // t_23 = y^2 z^2
    assert!(p24.t_ij.properly_divides(&p23.t_ij));
    assert_eq!(p34.t_ij, Term::new(vec![2, 0, 0])); // t_34 = x^2
    assert_eq!(p23.t_ji, Term::new(vec![3, 0, 0])); // t_32 = x^3
    assert!(p34.t_ij.properly_divides(&p23.t_ji));

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1));
    println!(
        "[acceptance 3] PASS - 4-element basis, treated (1,2) (2,4) (3,4), (1,3) killed at degree 15 in {:?}",
        elapsed
    );
}

/// Criterion 4: homogenized cyclic-7 under degrevlex with the minimalizing
/// strategy reaches the expected basis and pair counts within the time
/// budget.
#[test]
fn acceptance_4_cyclic7_scale_check() {
    let started = Instant::now();
    let problem = homogenize(&gen_cyclic(7).unwrap()).unwrap();
    let (_, vectors) = problem.vectors();
    let cfg = EngineConfig::new(OrderingSpec::degrevlex()).with_strategy(Strategy::Ckr);
    let out = run_buchberger(&vectors, &cfg).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(out.basis.len(), 443, "#(G)");
    assert_eq!(out.stats.sigma_total, 97_903, "#(Sigma)");
    // the internal consistency fallback holds as well: all pairs of a
    // rank-1 module
    let g = out.basis.len() as u64;
    assert_eq!(out.stats.sigma_total, g * (g - 1) / 2);
    assert!(out.stats.theta_identity_holds());
    assert!(
        elapsed < Duration::from_secs(600),
        "cyclic-7 must finish within 10 minutes, took {elapsed:?}"
    );
    println!(
        "[acceptance 4] PASS - cyclic-7: #(G)=443, #(Sigma)=97903, #(Sigma'')={}, M23={}, M48={}, #(Theta)={} in {:?}",
        out.stats.sigma2, out.stats.m23_kills, out.stats.m48_kills, out.stats.theta, elapsed
    );
}

fn random_corpus_ideal(seed: u64) -> Vec<ModuleVector> {
    let spec = RandomSpec {
        nvars: 2 + (seed % 3) as usize, // 2..=4
        gens: 2 + (seed % 4) as usize,  // 2..=5
        max_degree: 5,
        max_terms: 3,
        max_coeff: 10,
    };
    let problem = gen_random(&spec, seed);
    let (_, vectors) = problem.vectors();
    vectors
}

/// Criterion 5: on 200 random homogeneous ideals the three strategies
/// produce identical reduced bases and the result passes the Buchberger
/// criterion.
#[test]
fn acceptance_5_strategy_equivalence() {
    let started = Instant::now();
    let o = OrderingSpec::degrevlex();
    let mut nontrivial = 0;
    for seed in 0..200u64 {
        let vectors = random_corpus_ideal(seed);
        if vectors.is_empty() {
            continue;
        }
        let mut reduced: Vec<Vec<ModuleVector>> = Vec::new();
        for strategy in [Strategy::Naive, Strategy::Gm, Strategy::Ckr] {
            let cfg = EngineConfig::new(o).with_strategy(strategy);
            let out = run_buchberger(&vectors, &cfg).unwrap();
            reduced.push(interreduce(&out.basis, &o));
        }
        assert_eq!(reduced[0], reduced[1], "naive vs gm on seed {seed}");
        assert_eq!(reduced[1], reduced[2], "gm vs ckr on seed {seed}");
        let basis = &reduced[2];
        for j in 0..basis.len() {
            for i in 0..j {
                let li = leading_monomial(&basis[i], &o).unwrap();
                let lj = leading_monomial(&basis[j], &o).unwrap();
                if li.component != lj.component {
                    continue;
                }
                let s = s_vector(&basis[i], &basis[j], &o).unwrap();
                assert!(
                    normal_remainder(&s, basis, &o).is_zero(),
                    "Buchberger criterion on seed {seed}"
                );
            }
        }
        if basis.len() > vectors.len() {
            nontrivial += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "[acceptance 5] PASS - 200 random ideals, 3 strategies agree ({nontrivial} grew), in {:?}",
        elapsed
    );
}

fn random_monomial_instance(seed: u64) -> Vec<LeadingData> {
    // deterministic small instances: s <= 8, n <= 4, exponents <= 6
    let mut state = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let n = 2 + (next() % 3) as usize; // 2..=4
    let s = 2 + (next() % 7) as usize; // 2..=8
    (0..s)
        .map(|_| {
            let exps: Vec<u32> = (0..n).map(|_| (next() % 7) as u32).collect();
            lead(&exps)
        })
        .collect()
}

/// Criterion 6: the minimalization count equals the brute-force minimal
/// number of generators of the syzygy module on 100 random monomial
/// instances.
#[test]
fn acceptance_6_minimality_oracle() {
    let started = Instant::now();
    let membership = OrderingSpec::pot(BaseOrder::DegRevLex);
    for seed in 0..100u64 {
        let leading = random_monomial_instance(seed);
        let n = leading[0].term.nvars();
        let ctx = RingContext::standard(n);
        let pairs = build_pairs(&leading, &ctx).unwrap();
        let rules = gm_rules(&pairs);
        let bam = sigma_bam(&rules.sigma2, &leading, &ctx);
        let (_, syzygies) = oracle::syzygy_module_generators(&leading, &ctx).unwrap();
        let report = oracle::minimalize(&syzygies, &membership).unwrap();
        assert_eq!(
            bam.theta.len(),
            report.mu,
            "seed {seed}: |Theta| must equal mu"
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "[acceptance 6] PASS - |Theta| = mu on 100 random monomial instances in {:?}",
        elapsed
    );
}

/// Criterion 7: dominance over rule 3 and the counter identity, on the
/// same corpus.
#[test]
fn acceptance_7_dominance_and_counter_identity() {
    let started = Instant::now();
    for seed in 0..100u64 {
        let leading = random_monomial_instance(seed);
        let n = leading[0].term.nvars();
        let ctx = RingContext::standard(n);
        let pairs = build_pairs(&leading, &ctx).unwrap();
        let rules = gm_rules(&pairs);
        let bam = sigma_bam(&rules.sigma2, &leading, &ctx);
        let sigma3: Vec<(usize, usize)> = rules.sigma3.iter().map(|p| p.indices()).collect();
        for p in &bam.theta {
            assert!(
                sigma3.contains(&p.indices()),
                "seed {seed}: pair {} outside Sigma'''",
                p
            );
        }
        assert_eq!(
            bam.theta.len() as u64,
            rules.sigma2.len() as u64 - bam.m23_kills - bam.m48_kills,
            "seed {seed}: counter identity"
        );
    }
    let elapsed = started.elapsed();
    println!(
        "[acceptance 7] PASS - Theta inside Sigma''' and #(Theta) = #(Sigma'') - M23 - M48 on 100 instances in {:?}",
        elapsed
    );
}

/// Criterion 8: the monic-normalized rule-1/2 survivors form an
/// interreduced set: no side of any syzygy is divisible by another's
/// leading term.
#[test]
fn acceptance_8_survivors_are_interreduced() {
    let started = Instant::now();
    for seed in 0..100u64 {
        let leading = random_monomial_instance(seed);
        let n = leading[0].term.nvars();
        let ctx = RingContext::standard(n);
        let pairs = build_pairs(&leading, &ctx).unwrap();
        let rules = gm_rules(&pairs);
        for p in &rules.sigma2 {
            for q in &rules.sigma2 {
                if p.indices() == q.indices() {
                    continue;
                }
                // leading term of q is t_ji eps_j; check it against both
                // sides of p
                if q.j == p.j {
                    assert!(
                        !q.t_ji.divides(&p.t_ji),
                        "seed {seed}: head of {p} reducible by {q}"
                    );
                }
                if q.j == p.i {
                    assert!(
                        !q.t_ji.divides(&p.t_ij),
                        "seed {seed}: tail of {p} reducible by {q}"
                    );
                }
            }
        }
    }
    let elapsed = started.elapsed();
    println!(
        "[acceptance 8] PASS - normalized Sigma'' interreduced on 100 instances in {:?}",
        elapsed
    );
}

/// Criterion 9: truncating at a degree reproduces the prefix of the full
/// run, on 50 random instances.
#[test]
fn acceptance_9_truncation_prefix() {
    let started = Instant::now();
    let o = OrderingSpec::degrevlex();
    let mut checked = 0;
    for seed in 0..50u64 {
        let vectors = random_corpus_ideal(seed + 1000);
        if vectors.is_empty() {
            continue;
        }
        let cfg = EngineConfig::new(o);
        let full = run_buchberger(&vectors, &cfg).unwrap();
        if full.basis.is_empty() {
            continue;
        }
        // truncate at the degree of the middle basis element
        let degrees: Vec<MultiDegree> = full
            .basis
            .iter()
            .map(|g| g.degree().unwrap().unwrap())
            .collect();
        let bound = degrees[full.basis.len() / 2].clone();
        let prefix_len = degrees.iter().filter(|d| **d <= bound).count();
        let cfg_t = EngineConfig::new(o).with_truncation(bound.clone());
        let truncated = run_buchberger(&vectors, &cfg_t).unwrap();
        assert_eq!(
            truncated.basis,
            full.basis[..prefix_len],
            "seed {seed}: truncated run at {bound} must be a prefix"
        );
        checked += 1;
    }
    let elapsed = started.elapsed();
    println!(
        "[acceptance 9] PASS - truncation = prefix on {checked} instances in {:?}",
        elapsed
    );
}

/// The minpairs command itself reports the same pipeline (criterion 1 via
/// the external interface).
#[test]
fn acceptance_cli_minpairs_on_four_term_example() {
    let text = "\
vars x, y, z
gen x^3*z^2
gen x^3*y^4
gen y^5*z^2
gen x^2*y^5*z
";
    let problem = parse_problem(text).unwrap();
    let opts = mingb_cli::run::RunOptions {
        json: true,
        ordering: Some(OrderingSpec::deglex()),
        ..Default::default()
    };
    let out = mingb_cli::run::cmd_minpairs(&problem, &opts).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed["sigma"].as_array().unwrap().len(), 6);
    let mut sigma2: Vec<(u64, u64)> = parsed["sigma2"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_u64().unwrap(), p[1].as_u64().unwrap()))
        .collect();
    sigma2.sort();
    assert_eq!(sigma2, vec![(1, 2), (1, 3), (2, 4), (3, 4)]);
    let mut theta: Vec<(u64, u64)> = parsed["theta"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_u64().unwrap(), p[1].as_u64().unwrap()))
        .collect();
    theta.sort();
    assert_eq!(theta, vec![(1, 2), (2, 4), (3, 4)]);
    println!("[acceptance cli] PASS - minpairs command reproduces the pair pipeline");
}
