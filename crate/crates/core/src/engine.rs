//! The Buchberger-family drivers: the homogeneous degree-by-degree loop,
//! its variant tracking minimal generators, the minimal-generator scan of a
//! reduced basis, and the optimized driver that treats only a minimal set
//! of critical pairs.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::EngineError;
use crate::grading::{Homogeneity, MultiDegree, RingContext};
use crate::ordering::{is_degree_compatible, OrderingSpec};
use crate::pairset::{
    EliminationEvent, PairCollections, PairStats, PoolRecord, Strategy,
};
use crate::reduction::{
    leading_monomial, normal_remainder_prepared, s_vector, LeadingData, Reducer, ReductionMode,
};
use crate::vector::ModuleVector;

/// Configuration of one engine run.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub ordering: OrderingSpec,
    pub strategy: Strategy,
    /// Stop after finishing this degree; pairs beyond it are never formed.
    pub truncation: Option<MultiDegree>,
    pub reduction: ReductionMode,
    /// Record per-pair events in the run log.
    pub log_events: bool,
    pub time_limit: Option<Duration>,
}

impl EngineConfig {
    pub fn new(ordering: OrderingSpec) -> Self {
        EngineConfig {
            ordering,
            strategy: Strategy::Ckr,
            truncation: None,
            reduction: ReductionMode::Full,
            log_events: true,
            time_limit: None,
        }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_truncation(mut self, d: MultiDegree) -> Self {
        self.truncation = Some(d);
        self
    }
}

/// Where a basis element came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisSource {
    /// Normal remainder of an input generator (original input position).
    Input { original_index: usize },
    /// Normal remainder of the S-vector of a treated pair.
    SPair { i: usize, j: usize },
}

/// Run-log entries of the engine itself; pair eliminations are logged by
/// the pair collections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineEvent {
    GeneratorAppended {
        index: usize,
        degree: MultiDegree,
        source: BasisSource,
    },
    PairTreated {
        pair: (usize, usize),
        degree: MultiDegree,
        reduced_to_zero: bool,
    },
}

/// Input vectors dropped during intake.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntakeWarnings {
    pub zero_generators: u32,
    pub duplicate_generators: u32,
}

/// Everything a run produces.
#[derive(Debug)]
pub struct GbOutcome {
    /// Basis elements in order of creation (non-decreasing degrees).
    pub basis: Vec<ModuleVector>,
    pub stats: PairStats,
    /// Pairs treated, in order.
    pub treated: Vec<(usize, usize)>,
    pub eliminations: Vec<EliminationEvent>,
    pub pool_log: Vec<PoolRecord>,
    pub events: Vec<EngineEvent>,
    /// Input positions forming a minimal generating system (with the
    /// corresponding original vectors).
    pub vmin_indices: Vec<usize>,
    pub vmin: Vec<ModuleVector>,
    pub warnings: IntakeWarnings,
    /// Whether the ordering is (structurally) compatible with the grading.
    pub degree_compatible: bool,
    pub strategy: Strategy,
}

struct BasisElem {
    vector: ModuleVector,
}

struct Intake {
    ctx: Arc<RingContext>,
    /// (original index, vector, degree), zeros and duplicates dropped.
    generators: Vec<(usize, ModuleVector, MultiDegree)>,
    warnings: IntakeWarnings,
}

fn intake(
    input: &[ModuleVector],
    require_positive: bool,
) -> Result<Option<Intake>, EngineError> {
    let Some(first) = input.first() else {
        return Ok(None);
    };
    let ctx = first.context().clone();
    if require_positive && !ctx.grading().is_positive() {
        return Err(EngineError::NonPositiveGrading);
    }
    let mut warnings = IntakeWarnings::default();
    let mut generators: Vec<(usize, ModuleVector, MultiDegree)> = Vec::new();
    for (index, v) in input.iter().enumerate() {
        if v.context() != &ctx {
            return Err(crate::error::AlgebraError::ContextMismatch.into());
        }
        match v.homogeneity()? {
            Homogeneity::AnyDegree => {
                warnings.zero_generators += 1;
            }
            Homogeneity::NotHomogeneous => {
                return Err(EngineError::NonHomogeneousGenerator { index });
            }
            Homogeneity::Homogeneous(d) => {
                if generators.iter().any(|(_, g, _)| g == v) {
                    warnings.duplicate_generators += 1;
                } else {
                    generators.push((index, v.clone(), d));
                }
            }
        }
    }
    Ok(Some(Intake {
        ctx,
        generators,
        warnings,
    }))
}

fn empty_outcome(cfg: &EngineConfig) -> GbOutcome {
    GbOutcome {
        basis: vec![],
        stats: PairStats::default(),
        treated: vec![],
        eliminations: vec![],
        pool_log: vec![],
        events: vec![],
        vmin_indices: vec![],
        vmin: vec![],
        warnings: IntakeWarnings::default(),
        degree_compatible: true,
        strategy: cfg.strategy,
    }
}

/// The degree-driven Buchberger loop shared by all strategies. Processes
/// pairs and pending input vectors degree by degree; under the `ckr`
/// strategy each degree starts with the minimalization of the pending
/// slice, so that exactly the pairs corresponding to a minimal generating
/// system of the critical syzygies are treated.
pub fn run_buchberger(
    input: &[ModuleVector],
    cfg: &EngineConfig,
) -> Result<GbOutcome, EngineError> {
    let Some(intake) = intake(input, true)? else {
        return Ok(empty_outcome(cfg));
    };
    let ctx = intake.ctx.clone();
    let deadline = cfg.time_limit.map(|limit| Instant::now() + limit);

    let mut outcome = empty_outcome(cfg);
    outcome.warnings = intake.warnings;
    outcome.degree_compatible = is_degree_compatible(&cfg.ordering, ctx.grading());

    // pending inputs, degree-sliced, stable within a degree
    let mut pending: BTreeMap<MultiDegree, Vec<(usize, ModuleVector)>> = BTreeMap::new();
    for (original, v, d) in intake.generators {
        pending.entry(d).or_default().push((original, v));
    }

    let mut basis: Vec<BasisElem> = Vec::new();
    let mut reducers: Vec<Reducer> = Vec::new();
    let mut leading: Vec<LeadingData> = Vec::new();
    let mut pairs = PairCollections::new(cfg.strategy, cfg.truncation.clone());

    // basis elements are normalized monic on insertion, so S-vectors and
    // division steps work with true-size coefficients throughout
    let append = |g: ModuleVector,
                      degree: MultiDegree,
                      source: BasisSource,
                      basis: &mut Vec<BasisElem>,
                      reducers: &mut Vec<Reducer>,
                      leading: &mut Vec<LeadingData>,
                      pairs: &mut PairCollections,
                      outcome: &mut GbOutcome|
     -> Result<(), EngineError> {
        let lead = leading_monomial(&g, &cfg.ordering)?;
        let scaled = if lead.coeff.is_one() {
            g
        } else {
            g.scale(&lead.coeff.inv())
        };
        let lead = LeadingData {
            coeff: crate::coeff::Coefficient::one(),
            term: lead.term,
            component: lead.component,
        };
        reducers.push(Reducer::new(&scaled, &cfg.ordering)?);
        leading.push(lead);
        if cfg.log_events {
            outcome.events.push(EngineEvent::GeneratorAppended {
                index: basis.len(),
                degree: degree.clone(),
                source,
            });
        }
        if std::env::var_os("MINGB_TRACE").is_some() {
            let bits = scaled
                .terms()
                .iter()
                .map(|(_, c)| c.numer().significant_bits().max(c.denom().significant_bits()))
                .max()
                .unwrap_or(0);
            eprintln!(
                "mingb:   g{} support {} maxbits {}",
                basis.len() + 1,
                scaled.support_len(),
                bits
            );
        }
        basis.push(BasisElem { vector: scaled });
        pairs.update(leading, &ctx)?;
        Ok(())
    };

    loop {
        let next_degree = match (pairs.next_degree(), pending.keys().next()) {
            (None, None) => break,
            (Some(d), None) => d.clone(),
            (None, Some(d)) => d.clone(),
            (Some(d1), Some(d2)) => d1.min(d2).clone(),
        };
        if let Some(bound) = &cfg.truncation {
            if &next_degree > bound {
                break;
            }
        }
        if let Some(deadline) = deadline {
            if Instant::now() > deadline {
                return Err(EngineError::TimeLimitExceeded);
            }
        }

        if std::env::var_os("MINGB_TRACE").is_some() {
            eprintln!(
                "mingb: degree {next_degree}, basis {}, treated {}",
                basis.len(),
                pairs.treated.len()
            );
        }
        pairs.begin_degree(&next_degree);
        pairs.min_pairs(&leading, &ctx);

        while let Some(pair) = pairs.pop_pair() {
            let s = s_vector(
                &basis[pair.i].vector,
                &basis[pair.j].vector,
                &cfg.ordering,
            )?;
            let remainder = normal_remainder_prepared(&s, &reducers, &cfg.ordering, cfg.reduction);
            let is_zero = remainder.is_zero();
            if cfg.log_events {
                outcome.events.push(EngineEvent::PairTreated {
                    pair: pair.indices(),
                    degree: pair.degree.clone(),
                    reduced_to_zero: is_zero,
                });
            }
            if !is_zero {
                debug_assert_eq!(
                    remainder.degree().ok().flatten().as_ref(),
                    Some(&pair.degree),
                    "homogeneous reduction stays in the pair degree"
                );
                append(
                    remainder,
                    pair.degree.clone(),
                    BasisSource::SPair {
                        i: pair.i,
                        j: pair.j,
                    },
                    &mut basis,
                    &mut reducers,
                    &mut leading,
                    &mut pairs,
                    &mut outcome,
                )?;
            }
            if let Some(deadline) = deadline {
                if Instant::now() > deadline {
                    return Err(EngineError::TimeLimitExceeded);
                }
            }
        }
        pairs.finish_degree();

        if let Some(vectors) = pending.remove(&next_degree) {
            for (original_index, v) in vectors {
                let remainder =
                    normal_remainder_prepared(&v, &reducers, &cfg.ordering, cfg.reduction);
                if remainder.is_zero() {
                    continue;
                }
                outcome.vmin_indices.push(original_index);
                outcome.vmin.push(v.clone());
                append(
                    remainder,
                    next_degree.clone(),
                    BasisSource::Input { original_index },
                    &mut basis,
                    &mut reducers,
                    &mut leading,
                    &mut pairs,
                    &mut outcome,
                )?;
            }
        }
    }

    outcome.basis = basis.into_iter().map(|b| b.vector).collect();
    outcome.stats = pairs.stats.clone();
    outcome.treated = pairs.treated.clone();
    outcome.eliminations = pairs.events.clone();
    outcome.pool_log = pairs.pool_log.clone();
    Ok(outcome)
}

/// A homogeneous Groebner basis of the module generated by the input,
/// built degree by degree in non-decreasing degree order.
pub fn homogeneous_buchberger(
    input: &[ModuleVector],
    cfg: &EngineConfig,
) -> Result<Vec<ModuleVector>, EngineError> {
    run_buchberger(input, cfg).map(|o| o.basis)
}

/// Groebner basis plus a minimal homogeneous generating system chosen from
/// the input generators.
pub fn buchberger_with_min(
    input: &[ModuleVector],
    cfg: &EngineConfig,
) -> Result<(Vec<ModuleVector>, Vec<ModuleVector>), EngineError> {
    run_buchberger(input, cfg).map(|o| (o.basis, o.vmin))
}

/// The optimized driver: pair handling forced to `ckr`, so that only the
/// pairs corresponding to a minimal generating system of the critical
/// syzygies are treated. Returns the basis and the pair statistics.
pub fn optimized_buchberger(
    input: &[ModuleVector],
    cfg: &EngineConfig,
) -> Result<(Vec<ModuleVector>, PairStats), EngineError> {
    let cfg = EngineConfig {
        strategy: Strategy::Ckr,
        ..cfg.clone()
    };
    run_buchberger(input, &cfg).map(|o| (o.basis, o.stats))
}

/// Outcome of the minimal-generator scan of a reduced Groebner basis.
#[derive(Debug)]
pub struct MinGensOutcome {
    pub vmin_indices: Vec<usize>,
    pub vmin: Vec<ModuleVector>,
    /// Elements produced from S-vectors and later replaced by input
    /// elements with the same leading term.
    pub swaps: u32,
    /// Non-zero S-vector reductions.
    pub new_from_pairs: u32,
}

/// Given the reduced Groebner basis of a module, extracts the subtuple that
/// minimally generates it. Non-zero S-vector remainders are recognized by
/// matching leading terms against pending input elements, which are swapped
/// in instead of being counted as minimal generators.
pub fn min_gens_of_reduced_gb(
    input: &[ModuleVector],
    cfg: &EngineConfig,
) -> Result<MinGensOutcome, EngineError> {
    let Some(data) = intake(input, true)? else {
        return Ok(MinGensOutcome {
            vmin_indices: vec![],
            vmin: vec![],
            swaps: 0,
            new_from_pairs: 0,
        });
    };
    if data.warnings.zero_generators > 0 || data.warnings.duplicate_generators > 0 {
        return Err(EngineError::NotReduced {
            reason: "zero or duplicate elements".into(),
        });
    }
    let ctx = data.ctx.clone();
    verify_reduced(input, &cfg.ordering)?;

    let mut pending: BTreeMap<MultiDegree, Vec<(usize, ModuleVector)>> = BTreeMap::new();
    for (original, v, d) in data.generators {
        pending.entry(d).or_default().push((original, v));
    }

    let mut basis: Vec<BasisElem> = Vec::new();
    let mut leading: Vec<LeadingData> = Vec::new();
    let mut pairs = PairCollections::new(Strategy::Naive, None);
    let mut out = MinGensOutcome {
        vmin_indices: vec![],
        vmin: vec![],
        swaps: 0,
        new_from_pairs: 0,
    };

    loop {
        let next_degree = match (pairs.next_degree(), pending.keys().next()) {
            (None, None) => break,
            (Some(d), None) => d.clone(),
            (None, Some(d)) => d.clone(),
            (Some(d1), Some(d2)) => d1.min(d2).clone(),
        };
        pairs.begin_degree(&next_degree);
        while let Some(pair) = pairs.pop_pair() {
            let s = s_vector(
                &basis[pair.i].vector,
                &basis[pair.j].vector,
                &cfg.ordering,
            )?;
            let current: Vec<ModuleVector> =
                basis.iter().map(|b| b.vector.clone()).collect();
            let remainder =
                crate::reduction::normal_remainder_mode(&s, &current, &cfg.ordering, cfg.reduction);
            if !remainder.is_zero() {
                out.new_from_pairs += 1;
                let lead = leading_monomial(&remainder, &cfg.ordering)?;
                let monic = remainder.scale(&lead.coeff.inv());
                leading.push(LeadingData {
                    coeff: crate::coeff::Coefficient::one(),
                    term: lead.term,
                    component: lead.component,
                });
                basis.push(BasisElem { vector: monic });
                pairs.update(&leading, &ctx)?;
            }
        }
        pairs.finish_degree();

        if let Some(vectors) = pending.remove(&next_degree) {
            for (original_index, v) in vectors {
                let lv = leading_monomial(&v, &cfg.ordering)?;
                let existing = leading
                    .iter()
                    .position(|bl| bl.term == lv.term && bl.component == lv.component);
                match existing {
                    Some(slot) => {
                        // reduced-basis element with an already-known
                        // leading term: swap it in, the module is unchanged
                        basis[slot].vector = v;
                        out.swaps += 1;
                    }
                    None => {
                        out.vmin_indices.push(original_index);
                        out.vmin.push(v.clone());
                        leading.push(LeadingData {
                            coeff: crate::coeff::Coefficient::one(),
                            term: lv.term,
                            component: lv.component,
                        });
                        basis.push(BasisElem { vector: v });
                        pairs.update(&leading, &ctx)?;
                    }
                }
            }
        }
    }
    debug_assert_eq!(out.swaps, out.new_from_pairs);
    Ok(out)
}

/// Monic and pairwise fully reduced.
fn verify_reduced(input: &[ModuleVector], o: &OrderingSpec) -> Result<(), EngineError> {
    let leads: Vec<LeadingData> = input
        .iter()
        .map(|v| leading_monomial(v, o))
        .collect::<Result<_, _>>()?;
    for (i, l) in leads.iter().enumerate() {
        if !l.coeff.is_one() {
            return Err(EngineError::NotReduced {
                reason: format!("element #{} is not monic", i + 1),
            });
        }
        for (mt, _) in input[i].terms() {
            for (j, lj) in leads.iter().enumerate() {
                if i != j && lj.component == mt.component && lj.term.divides(&mt.term) {
                    return Err(EngineError::NotReduced {
                        reason: format!(
                            "a term of element #{} is divisible by the leading term of #{}",
                            i + 1,
                            j + 1
                        ),
                    });
                }
            }
        }
    }
    Ok(())
}
