//! Brute-force ground truth, deliberately independent of the degree-driven
//! engine: a classical Buchberger loop that processes every critical pair
//! in creation order, submodule membership, and minimal-generator counting
//! by degree-ordered membership tests.

use std::collections::VecDeque;

use crate::error::EngineError;
use crate::grading::Homogeneity;
use crate::ordering::OrderingSpec;
use crate::reduction::{
    divide_with_quotients, leading_monomial, normal_remainder, s_vector,
};
use crate::vector::ModuleVector;

/// Result of the minimal-generator count.
#[derive(Debug, Clone)]
pub struct OracleReport {
    /// The well-defined number of minimal homogeneous generators.
    pub mu: usize,
    /// Positions (into the input) of a minimal generating subset.
    pub kept: Vec<usize>,
    /// For each dropped generator, quotients expressing it over the
    /// Groebner basis of the kept ones. Only filled on request.
    pub witnesses: Option<Vec<MembershipWitness>>,
}

/// A membership certificate: `input[index] = sum_k quotients[k] * gb[k]`.
#[derive(Debug, Clone)]
pub struct MembershipWitness {
    pub index: usize,
    pub gb: Vec<ModuleVector>,
    pub quotients: Vec<ModuleVector>,
}

/// Builds the critical syzygies of a tuple of leading monomials as honest
/// vectors of the free module `F' = P(-d_1) + ... + P(-d_s)`, one basis
/// vector per input monomial. Together they generate the full syzygy
/// module, so counting their minimal generators with [`minimalize`] gives
/// the reference value for the pair minimalization.
pub fn syzygy_module_generators(
    leading: &[crate::reduction::LeadingData],
    ctx: &crate::grading::RingContext,
) -> Result<(std::sync::Arc<crate::grading::RingContext>, Vec<ModuleVector>), EngineError> {
    use crate::grading::{RingContext, ShiftVector};
    use crate::term::ModuleTerm;

    let mut shifts = Vec::with_capacity(leading.len());
    for l in leading {
        let d = ctx
            .term_degree(&l.term)?
            .add(ctx.shifts().get(l.component))?;
        shifts.push(d);
    }
    let syz_ctx = RingContext::new(
        ctx.nvars(),
        ctx.grading().clone(),
        leading.len(),
        ShiftVector(shifts),
    )
    .map_err(EngineError::from)?;

    let mut generators = Vec::new();
    for j in 0..leading.len() {
        for i in 0..j {
            if leading[i].component != leading[j].component {
                continue;
            }
            let lcm = leading[i].term.lcm(&leading[j].term);
            let t_ij = lcm.quotient(&leading[i].term).map_err(EngineError::from)?;
            let t_ji = lcm.quotient(&leading[j].term).map_err(EngineError::from)?;
            let v = ModuleVector::from_terms(
                syz_ctx.clone(),
                vec![
                    (ModuleTerm::new(t_ij, i), leading[i].coeff.inv()),
                    (ModuleTerm::new(t_ji, j), -&leading[j].coeff.inv()),
                ],
            )
            .map_err(EngineError::from)?;
            generators.push(v);
        }
    }
    Ok((syz_ctx, generators))
}

/// A Groebner basis computed with no pair elimination whatsoever: every
/// critical pair is enqueued and reduced, in first-in first-out order.
pub fn naive_gb(
    input: &[ModuleVector],
    o: &OrderingSpec,
) -> Result<Vec<ModuleVector>, EngineError> {
    let mut basis: Vec<ModuleVector> = Vec::new();
    for (index, v) in input.iter().enumerate() {
        match v.homogeneity()? {
            Homogeneity::AnyDegree => continue,
            Homogeneity::NotHomogeneous => {
                return Err(EngineError::NonHomogeneousGenerator { index });
            }
            Homogeneity::Homogeneous(_) => {
                let lead = leading_monomial(v, o)?;
                basis.push(v.scale(&lead.coeff.inv()));
            }
        }
    }
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    let enqueue = |queue: &mut VecDeque<(usize, usize)>,
                       basis: &[ModuleVector],
                       j: usize|
     -> Result<(), EngineError> {
        let lj = leading_monomial(&basis[j], o)?;
        for i in 0..j {
            if leading_monomial(&basis[i], o)?.component == lj.component {
                queue.push_back((i, j));
            }
        }
        Ok(())
    };
    for j in 0..basis.len() {
        enqueue(&mut queue, &basis, j)?;
    }
    while let Some((i, j)) = queue.pop_front() {
        let s = s_vector(&basis[i], &basis[j], o)?;
        let r = normal_remainder(&s, &basis, o);
        if !r.is_zero() {
            let lead = leading_monomial(&r, o)?;
            basis.push(r.scale(&lead.coeff.inv()));
            enqueue(&mut queue, &basis, basis.len() - 1)?;
        }
    }
    Ok(basis)
}

/// Submodule membership: `v` lies in the module with Groebner basis `gb`
/// iff its normal remainder vanishes.
pub fn is_member(v: &ModuleVector, gb: &[ModuleVector], o: &OrderingSpec) -> bool {
    normal_remainder(v, gb, o).is_zero()
}

/// Counts and selects minimal homogeneous generators: sorts by
/// non-decreasing degree (stable) and keeps each element not contained in
/// the module generated by the previously kept ones.
pub fn minimalize(
    input: &[ModuleVector],
    o: &OrderingSpec,
) -> Result<OracleReport, EngineError> {
    minimalize_inner(input, o, false)
}

/// Like [`minimalize`], additionally recording membership certificates for
/// every dropped generator.
pub fn minimalize_certified(
    input: &[ModuleVector],
    o: &OrderingSpec,
) -> Result<OracleReport, EngineError> {
    minimalize_inner(input, o, true)
}

fn minimalize_inner(
    input: &[ModuleVector],
    o: &OrderingSpec,
    certify: bool,
) -> Result<OracleReport, EngineError> {
    if let Some(first) = input.first() {
        if !first.context().grading().is_positive() {
            return Err(EngineError::NonPositiveGrading);
        }
    }
    let mut order: Vec<(usize, crate::grading::MultiDegree)> = Vec::new();
    for (index, v) in input.iter().enumerate() {
        match v.homogeneity()? {
            Homogeneity::AnyDegree => continue, // zero generates nothing
            Homogeneity::NotHomogeneous => {
                return Err(EngineError::NonHomogeneousGenerator { index });
            }
            Homogeneity::Homogeneous(d) => order.push((index, d)),
        }
    }
    order.sort_by(|a, b| a.1.cmp(&b.1)); // stable: ties keep input order

    let mut kept: Vec<usize> = Vec::new();
    let mut kept_vectors: Vec<ModuleVector> = Vec::new();
    let mut witnesses: Vec<MembershipWitness> = Vec::new();
    for (index, _) in order {
        let gb = naive_gb(&kept_vectors, o)?;
        let v = &input[index];
        if kept_vectors.is_empty() || !is_member(v, &gb, o) {
            kept.push(index);
            kept_vectors.push(v.clone());
        } else if certify {
            let (quotients, remainder) = divide_with_quotients(v, &gb, o);
            debug_assert!(remainder.is_zero());
            witnesses.push(MembershipWitness {
                index,
                gb: gb.clone(),
                quotients,
            });
        }
    }
    Ok(OracleReport {
        mu: kept.len(),
        kept,
        witnesses: certify.then_some(witnesses),
    })
}
