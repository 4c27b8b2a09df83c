//! Leading terms, S-vectors, the division algorithm, reduction steps on
//! critical syzygies, and interreduction.
//!
//! The division algorithm works on integer-scaled copies of its operands
//! and tracks the accumulated rational factor separately, so the returned
//! remainder is the exact result of dividing over the rationals while the
//! inner loop runs on integer arithmetic only.

use std::cmp::Ordering;

use rug::{Integer, Rational};

use crate::coeff::Coefficient;
use crate::error::AlgebraError;
use crate::ordering::OrderingSpec;
use crate::term::{ModuleTerm, Term};
use crate::vector::ModuleVector;

/// The decomposition `LM(g) = c * t * e_gamma` of a leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingData {
    pub coeff: Coefficient,
    pub term: Term,
    pub component: usize,
}

/// How far the division algorithm reduces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionMode {
    /// Reduce every term of the remainder.
    Full,
    /// Reduce the leading term until it is irreducible, leave the tail.
    HeadOnly,
}

/// The maximal support term of a non-zero vector under the given ordering.
pub fn leading_monomial(
    v: &ModuleVector,
    o: &OrderingSpec,
) -> Result<LeadingData, AlgebraError> {
    let mut best: Option<&(ModuleTerm, Coefficient)> = None;
    for entry in v.terms() {
        match best {
            None => best = Some(entry),
            Some(b) => {
                if o.compare(&entry.0, &b.0) == Ordering::Greater {
                    best = Some(entry);
                }
            }
        }
    }
    let (mt, c) = best.ok_or(AlgebraError::ZeroVector)?;
    Ok(LeadingData {
        coeff: c.clone(),
        term: mt.term.clone(),
        component: mt.component,
    })
}

/// A basis element prepared for repeated use as a divisor: its leading
/// data plus the monic-normalized tail (every coefficient divided by the
/// leading coefficient) sorted descending under the run's ordering, so a
/// division step is one multiply-subtract per tail entry.
#[derive(Debug, Clone)]
pub struct Reducer {
    lead: LeadingData,
    /// Tail of the monic form, strictly descending, leading entry omitted.
    monic_tail: Vec<(ModuleTerm, Rational)>,
}

impl Reducer {
    pub fn new(v: &ModuleVector, o: &OrderingSpec) -> Result<Self, AlgebraError> {
        let lead = leading_monomial(v, o)?;
        let mut terms: Vec<(ModuleTerm, Coefficient)> = v.terms().to_vec();
        terms.sort_by(|a, b| o.compare(&b.0, &a.0));
        let inv = Rational::from(lead.coeff.as_rational().recip_ref());
        let monic_tail = terms
            .into_iter()
            .skip(1)
            .map(|(mt, c)| (mt, Rational::from(c.as_rational() * &inv)))
            .collect();
        Ok(Reducer { lead, monic_tail })
    }

    pub fn lead(&self) -> &LeadingData {
        &self.lead
    }
}

/// The S-vector of two vectors whose leading terms share a component:
/// `lcm/(c_i t_i) g_i - lcm/(c_j t_j) g_j`. The leading terms cancel.
pub fn s_vector(
    gi: &ModuleVector,
    gj: &ModuleVector,
    o: &OrderingSpec,
) -> Result<ModuleVector, AlgebraError> {
    let li = leading_monomial(gi, o)?;
    let lj = leading_monomial(gj, o)?;
    if li.component != lj.component {
        return Err(AlgebraError::ComponentMismatch(li.component, lj.component));
    }
    let lcm = li.term.lcm(&lj.term);
    let ci = li.coeff.inv();
    let cj = lj.coeff.inv();
    let left = gi.scale_term(&ci, &lcm.quotient(&li.term)?);
    let right = gj.scale_term(&cj, &lcm.quotient(&lj.term)?);
    left.sub(&right)
}

/// A positive-or-negative scalar multiple of the S-vector, computed with
/// the cheaper cross-multiplication `c_j u_i g_i - c_i u_j g_j`. The
/// division algorithm is scalar-equivariant, so callers that normalize
/// their results (as the engine does) can use this instead of [`s_vector`].
pub fn s_vector_scaled(
    gi: &ModuleVector,
    gj: &ModuleVector,
    o: &OrderingSpec,
) -> Result<ModuleVector, AlgebraError> {
    let li = leading_monomial(gi, o)?;
    let lj = leading_monomial(gj, o)?;
    if li.component != lj.component {
        return Err(AlgebraError::ComponentMismatch(li.component, lj.component));
    }
    let lcm = li.term.lcm(&lj.term);
    let left = gi.scale_term(&lj.coeff, &lcm.quotient(&li.term)?);
    let right = gj.scale_term(&li.coeff, &lcm.quotient(&lj.term)?);
    left.sub(&right)
}

/// A module term ordered by a fixed ordering, usable as a map key, with
/// the total degree cached to short-circuit degree-first comparisons. All
/// keys of one map must carry the same ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SigmaKey {
    spec: OrderingSpec,
    /// Totals decide directly for degree-first orderings extended
    /// term-over-position.
    shortcut: bool,
    total: u64,
    mt: ModuleTerm,
}

impl SigmaKey {
    fn new(spec: &OrderingSpec, mt: ModuleTerm) -> Self {
        SigmaKey {
            spec: *spec,
            shortcut: spec.base.is_degree_first()
                && spec.extension == crate::ordering::ModuleExtension::TermOverPosition,
            total: mt.term.total_degree(),
            mt,
        }
    }
}

impl PartialOrd for SigmaKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SigmaKey {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.spec, other.spec);
        if self.shortcut {
            match self.total.cmp(&other.total) {
                Ordering::Equal => self.spec.compare(&self.mt, &other.mt),
                decided => decided,
            }
        } else {
            self.spec.compare(&self.mt, &other.mt)
        }
    }
}

/// Normal remainder of `v` on division by the prepared reducers,
/// processed in slice order (the first divisor in list order wins). The
/// remainder lives in an ordered map under the ordering, so one reduction
/// step touches only the reducer-tail entries, with exact rational
/// arithmetic throughout.
pub fn normal_remainder_prepared(
    v: &ModuleVector,
    reducers: &[Reducer],
    o: &OrderingSpec,
    mode: ReductionMode,
) -> ModuleVector {
    if v.is_zero() {
        return v.clone();
    }
    let mut work: std::collections::BTreeMap<SigmaKey, Rational> = v
        .terms()
        .iter()
        .map(|(mt, c)| (SigmaKey::new(o, mt.clone()), c.as_rational().clone()))
        .collect();

    let mut out: Vec<(ModuleTerm, Coefficient)> = Vec::new();
    while let Some((key, coeff)) = work.pop_last() {
        let mt = &key.mt;
        let divisor = reducers
            .iter()
            .find(|r| r.lead.component == mt.component && r.lead.term.divides(&mt.term));
        match divisor {
            None => {
                out.push((key.mt, Coefficient::from_rational(coeff)));
                if mode == ReductionMode::HeadOnly {
                    while let Some((key, coeff)) = work.pop_last() {
                        out.push((key.mt, Coefficient::from_rational(coeff)));
                    }
                    break;
                }
            }
            Some(r) => {
                let u = mt
                    .term
                    .quotient(&r.lead.term)
                    .expect("divisor found by divisibility test");
                for (rt, rc) in &r.monic_tail {
                    let shifted = SigmaKey::new(o, rt.mul_term(&u));
                    let delta = Rational::from(rc * &coeff);
                    match work.entry(shifted) {
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() -= delta;
                            if e.get().cmp0() == Ordering::Equal {
                                e.remove();
                            }
                        }
                        std::collections::btree_map::Entry::Vacant(slot) => {
                            slot.insert(-delta);
                        }
                    }
                }
            }
        }
    }
    ModuleVector::from_terms(v.context().clone(), out)
        .expect("reduction preserves the ring context")
}

/// Normal remainder of `v` modulo the list `basis`, with full reduction.
/// Zero members of the list are skipped.
pub fn normal_remainder(
    v: &ModuleVector,
    basis: &[ModuleVector],
    o: &OrderingSpec,
) -> ModuleVector {
    normal_remainder_mode(v, basis, o, ReductionMode::Full)
}

pub fn normal_remainder_mode(
    v: &ModuleVector,
    basis: &[ModuleVector],
    o: &OrderingSpec,
    mode: ReductionMode,
) -> ModuleVector {
    let reducers: Vec<Reducer> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Reducer::new(g, o).expect("non-zero divisor"))
        .collect();
    normal_remainder_prepared(v, &reducers, o, mode)
}

/// The positive-scalar rescaling of `v` with integer coefficients, no
/// common content, and a positive leading coefficient under `o`.
pub fn primitive_scale(v: &ModuleVector, o: &OrderingSpec) -> ModuleVector {
    if v.is_zero() {
        return v.clone();
    }
    let mut den = Integer::from(1);
    for (_, c) in v.terms() {
        den.lcm_mut(c.denom());
    }
    let ints: Vec<Integer> = v
        .terms()
        .iter()
        .map(|(_, c)| Integer::from(c.numer() * Integer::from(&den / c.denom())))
        .collect();
    let mut content = Integer::new();
    for c in &ints {
        content.gcd_mut(c);
    }
    let lead = leading_monomial(v, o).expect("non-zero vector");
    if lead.coeff.is_negative() {
        content = -content;
    }
    let terms = v
        .terms()
        .iter()
        .zip(ints)
        .map(|((mt, _), c)| {
            (
                mt.clone(),
                Coefficient::from_bigint(Integer::from(c.div_exact_ref(&content))),
            )
        })
        .collect();
    ModuleVector::from_terms(v.context().clone(), terms).expect("same context")
}

/// Division with quotient tracking: returns ring-element quotients `q_k`
/// (vectors in a rank-1 context over the same grading) and the remainder,
/// with `v = sum_k q_k g_k + r`. Same divisor choice as
/// [`normal_remainder`], so the remainders agree.
pub fn divide_with_quotients(
    v: &ModuleVector,
    basis: &[ModuleVector],
    o: &OrderingSpec,
) -> (Vec<ModuleVector>, ModuleVector) {
    let ctx = v.context();
    let scalar_ctx = crate::grading::RingContext::new(
        ctx.nvars(),
        ctx.grading().clone(),
        1,
        crate::grading::ShiftVector::zeros(1, ctx.degree_len()),
    )
    .expect("scalar context over the same grading");
    let leads: Vec<Option<LeadingData>> = basis
        .iter()
        .map(|g| {
            if g.is_zero() {
                None
            } else {
                Some(leading_monomial(g, o).expect("non-zero"))
            }
        })
        .collect();
    let mut quotients = vec![ModuleVector::zero(scalar_ctx.clone()); basis.len()];
    let mut remainder_terms: Vec<(ModuleTerm, Coefficient)> = Vec::new();
    let mut rest = v.clone();
    while !rest.is_zero() {
        let lead = leading_monomial(&rest, o).expect("non-zero");
        let mt = ModuleTerm::new(lead.term.clone(), lead.component);
        let divisor = leads.iter().position(|l| match l {
            Some(l) => l.component == lead.component && l.term.divides(&lead.term),
            None => false,
        });
        match divisor {
            Some(k) => {
                let lk = leads[k].as_ref().expect("position found");
                let u = lead.term.quotient(&lk.term).expect("divides");
                let factor = &lead.coeff / &lk.coeff;
                rest = rest
                    .sub(&basis[k].scale_term(&factor, &u))
                    .expect("same context");
                let q_term = ModuleVector::from_terms(
                    scalar_ctx.clone(),
                    vec![(ModuleTerm::new(u, 0), factor)],
                )
                .expect("well-formed quotient term");
                quotients[k] = quotients[k].add(&q_term).expect("same context");
            }
            None => {
                remainder_terms.push((mt.clone(), lead.coeff.clone()));
                let single = ModuleVector::from_terms(
                    rest.context().clone(),
                    vec![(mt, lead.coeff.clone())],
                )
                .expect("well-formed term");
                rest = rest.sub(&single).expect("same context");
            }
        }
    }
    let remainder = ModuleVector::from_terms(v.context().clone(), remainder_terms)
        .expect("well-formed remainder");
    (quotients, remainder)
}

/// Interreduction: repeatedly replaces each element by its normal remainder
/// against the others until nothing changes, then normalizes leading
/// coefficients to one and sorts by ascending leading term. On a Groebner
/// basis input this produces the reduced Groebner basis.
pub fn interreduce(basis: &[ModuleVector], o: &OrderingSpec) -> Vec<ModuleVector> {
    let mut gs: Vec<ModuleVector> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < gs.len() {
            let others: Vec<ModuleVector> = gs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = normal_remainder(&gs[i], &others, o);
            if r.is_zero() {
                gs.remove(i);
                changed = true;
            } else {
                if r != gs[i] {
                    gs[i] = r;
                    changed = true;
                }
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    for g in &mut gs {
        let lc = leading_monomial(g, o).expect("non-zero element").coeff;
        if !lc.is_one() {
            *g = g.scale(&lc.inv());
        }
    }
    gs.sort_by(|a, b| {
        let la = leading_monomial(a, o).expect("non-zero");
        let lb = leading_monomial(b, o).expect("non-zero");
        o.compare(
            &ModuleTerm::new(la.term, la.component),
            &ModuleTerm::new(lb.term, lb.component),
        )
    });
    gs
}

/// One side of a two-term syzygy element: `coeff * term * eps_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyHalf {
    pub index: usize,
    pub coeff: Coefficient,
    pub term: Term,
}

/// A critical syzygy or the result of reduction steps on critical syzygies.
/// All such elements are supported on exactly two basis vectors of the
/// syzygy module's ambient free module, so the symbolic two-term form is
/// closed under head and tail reduction steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyElement {
    /// Side with the smaller generator index.
    pub lo: SyzygyHalf,
    /// Side with the larger generator index.
    pub hi: SyzygyHalf,
}

impl SyzygyElement {
    /// The canonical critical syzygy
    /// `sigma_ij = (1/c_i) t_ij eps_i - (1/c_j) t_ji eps_j` for `i < j`.
    pub fn critical(i: usize, j: usize, leading: &[LeadingData]) -> Self {
        assert!(i < j, "critical syzygy needs i < j");
        let (li, lj) = (&leading[i], &leading[j]);
        debug_assert_eq!(li.component, lj.component);
        let lcm = li.term.lcm(&lj.term);
        SyzygyElement {
            lo: SyzygyHalf {
                index: i,
                coeff: li.coeff.inv(),
                term: lcm.quotient(&li.term).expect("lcm is a multiple"),
            },
            hi: SyzygyHalf {
                index: j,
                coeff: -lj.coeff.inv(),
                term: lcm.quotient(&lj.term).expect("lcm is a multiple"),
            },
        }
    }

    /// Checks that the element maps to zero under
    /// `eps_k -> c_k t_k e_{gamma_k}`.
    pub fn is_syzygy_of(&self, leading: &[LeadingData]) -> bool {
        let (ll, lh) = (&leading[self.lo.index], &leading[self.hi.index]);
        if ll.component != lh.component {
            return false;
        }
        let image_lo = self.lo.term.mul(&ll.term);
        let image_hi = self.hi.term.mul(&lh.term);
        let c_lo = &self.lo.coeff * &ll.coeff;
        let c_hi = &self.hi.coeff * &lh.coeff;
        image_lo == image_hi && (&c_lo + &c_hi).is_zero()
    }
}

/// Head reduction step: cancel the `eps_j` side of `s = sigma_ij` with
/// `by = sigma_i'j` (matching second indices, `by`'s head dividing `s`'s).
/// The result is a term multiple of the critical syzygy on
/// `(k, l) = (min(i,i'), max(i,i'))`; returns the cofactor and that syzygy.
pub fn head_reduce_step(
    s: &SyzygyElement,
    by: &SyzygyElement,
    leading: &[LeadingData],
) -> Result<(Term, SyzygyElement), AlgebraError> {
    if s.hi.index != by.hi.index {
        return Err(AlgebraError::SyzygyIndexMismatch(s.hi.index, by.hi.index));
    }
    if s.lo.index == by.lo.index {
        return Err(AlgebraError::SelfReduction);
    }
    // cancel the hi sides
    let u = s.hi.term.quotient(&by.hi.term)?;
    let factor = &s.hi.coeff / &by.hi.coeff;
    let rem_a = SyzygyHalf {
        index: s.lo.index,
        coeff: s.lo.coeff.clone(),
        term: s.lo.term.clone(),
    };
    let rem_b = SyzygyHalf {
        index: by.lo.index,
        coeff: -&(&factor * &by.lo.coeff),
        term: by.lo.term.mul(&u),
    };
    let (k_half, l_half) = if rem_a.index < rem_b.index {
        (rem_a, rem_b)
    } else {
        (rem_b, rem_a)
    };
    let canonical = SyzygyElement::critical(k_half.index, l_half.index, leading);
    let cofactor = k_half.term.quotient(&canonical.lo.term)?;
    debug_assert_eq!(l_half.term, canonical.hi.term.mul(&cofactor));
    debug_assert!({
        // the remainder is the canonical syzygy scaled by one constant
        let scale = &k_half.coeff / &canonical.lo.coeff;
        l_half.coeff == &scale * &canonical.hi.coeff
    });
    Ok((cofactor, canonical))
}

/// Tail reduction step: cancel the `eps_i` side of `s = sigma_ij` with
/// `by = sigma_i'i`. The leading (`eps_j`) side is untouched.
pub fn tail_reduce_step(
    s: &SyzygyElement,
    by: &SyzygyElement,
) -> Result<SyzygyElement, AlgebraError> {
    if s.lo.index != by.hi.index {
        return Err(AlgebraError::SyzygyIndexMismatch(s.lo.index, by.hi.index));
    }
    let u = s.lo.term.quotient(&by.hi.term)?;
    let factor = &s.lo.coeff / &by.hi.coeff;
    let new_lo = SyzygyHalf {
        index: by.lo.index,
        coeff: -&(&factor * &by.lo.coeff),
        term: by.lo.term.mul(&u),
    };
    debug_assert!(new_lo.index < s.hi.index);
    Ok(SyzygyElement {
        lo: new_lo,
        hi: s.hi.clone(),
    })
}
