//! Critical pairs and their minimalization.
//!
//! Three layers of pair handling live here: the classical construction of
//! all critical pairs, the Gebauer-Moeller deletion rules, and the
//! minimalization of the critical syzygies that the optimized engine runs
//! through its `Update` / `MinPairs` procedures. Pairs killed by the
//! minimalization correspond exactly to non-minimal generators of the
//! syzygy module of the leading terms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::AlgebraError;
use crate::grading::{MultiDegree, RingContext};
use crate::reduction::LeadingData;
use crate::term::Term;

/// Pair-handling strategy of an engine run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Process every critical pair.
    Naive,
    /// Gebauer-Moeller rules 1-3.
    Gm,
    /// Rules 1-2 at pair creation plus minimalization of the critical
    /// syzygies per degree; only a minimal set of pairs is treated.
    Ckr,
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::Naive => "naive",
            Strategy::Gm => "gm",
            Strategy::Ckr => "ckr",
        }
    }
}

/// A critical pair `(i, j)` with `i < j` and matching leading-term
/// components, together with the cached lcm, the two cofactors, and the
/// pair degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub i: usize,
    pub j: usize,
    /// `lcm(t_i, t_j)`.
    pub lcm: Term,
    /// `lcm / t_i` (multiplies `g_i`).
    pub t_ij: Term,
    /// `lcm / t_j` (multiplies `g_j`).
    pub t_ji: Term,
    /// `deg_W(lcm) + delta_gamma`, the degree of the critical syzygy and of
    /// the S-vector.
    pub degree: MultiDegree,
}

impl CriticalPair {
    pub fn new(
        i: usize,
        j: usize,
        leading: &[LeadingData],
        ctx: &RingContext,
    ) -> Result<Self, AlgebraError> {
        assert!(i < j, "critical pair needs i < j");
        let (li, lj) = (&leading[i], &leading[j]);
        debug_assert_eq!(li.component, lj.component);
        let lcm = li.term.lcm(&lj.term);
        let t_ij = lcm.quotient(&li.term)?;
        let t_ji = lcm.quotient(&lj.term)?;
        let degree = ctx
            .term_degree(&lcm)?
            .add(ctx.shifts().get(li.component))?;
        Ok(CriticalPair {
            i,
            j,
            lcm,
            t_ij,
            t_ji,
            degree,
        })
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

impl fmt::Display for CriticalPair {
    /// One-based, matching the usual way pairs are written.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i + 1, self.j + 1)
    }
}

/// All critical pairs of the tuple of leading terms: `(i, j)` with `i < j`
/// and equal components, cofactors and degrees filled in.
pub fn build_pairs(
    leading: &[LeadingData],
    ctx: &RingContext,
) -> Result<Vec<CriticalPair>, AlgebraError> {
    let mut out = Vec::new();
    for j in 0..leading.len() {
        for i in 0..j {
            if leading[i].component == leading[j].component {
                out.push(CriticalPair::new(i, j, leading, ctx)?);
            }
        }
    }
    Ok(out)
}

/// Result of applying the Gebauer-Moeller rules to a full pair set.
#[derive(Debug, Clone)]
pub struct GmRulesOutcome {
    /// Survivors of rules 1 and 2: a minimal basis of the syzygy module of
    /// the leading terms.
    pub sigma2: Vec<CriticalPair>,
    /// Survivors of rule 3 as well.
    pub sigma3: Vec<CriticalPair>,
    /// Number of pairs removed by rule 3.
    pub rule3_killed: u64,
}

/// Applies the three Gebauer-Moeller rules to the set of all critical
/// pairs, a-posteriori (all leading terms known).
pub fn gm_rules(pairs: &[CriticalPair]) -> GmRulesOutcome {
    let index: BTreeMap<(usize, usize), &CriticalPair> =
        pairs.iter().map(|p| ((p.i, p.j), p)).collect();
    // cofactor t_ki for any i < k sharing a component, if the pair exists
    let cof = |i: usize, k: usize| -> Option<&Term> {
        debug_assert!(i < k);
        index.get(&(i, k)).map(|p| &p.t_ji)
    };

    // Rule 1: delete sigma_jk when some i < j has t_ki | t_kj.
    let mut sigma1: Vec<&CriticalPair> = Vec::new();
    for p in pairs {
        let (j, k) = (p.i, p.j);
        let killed = (0..j).any(|i| match cof(i, k) {
            Some(t_ki) => t_ki.divides(&p.t_ji),
            None => false,
        });
        if !killed {
            sigma1.push(p);
        }
    }

    // Rule 2: delete sigma_ik when some j in (i, k) has t_kj properly
    // dividing t_ki.
    let mut sigma2: Vec<CriticalPair> = Vec::new();
    for p in &sigma1 {
        let (i, k) = (p.i, p.j);
        let killed = (i + 1..k).any(|j| match cof(j, k) {
            Some(t_kj) => t_kj.properly_divides(&p.t_ji),
            None => false,
        });
        if !killed {
            sigma2.push((*p).clone());
        }
    }

    // Rule 3: delete sigma_ij when some k > j has t_ik properly dividing
    // t_ij and t_jk properly dividing t_ji.
    let s = pairs.iter().map(|p| p.j + 1).max().unwrap_or(0);
    let mut sigma3: Vec<CriticalPair> = Vec::new();
    let mut rule3_killed = 0;
    for p in &sigma2 {
        let (i, j) = (p.i, p.j);
        let killed = (j + 1..s).any(|k| {
            match (index.get(&(i, k)), index.get(&(j, k))) {
                (Some(pik), Some(pjk)) => {
                    pik.t_ij.properly_divides(&p.t_ij) && pjk.t_ij.properly_divides(&p.t_ji)
                }
                _ => false,
            }
        });
        if killed {
            rule3_killed += 1;
        } else {
            sigma3.push(p.clone());
        }
    }

    GmRulesOutcome {
        sigma2,
        sigma3,
        rule3_killed,
    }
}

/// The S-vector of a pair of pairs `((i,j), (i',j))` sharing the second
/// index is a term multiple `t~ * sigma_{i i'}`; returns the cofactor `t~`
/// and the canonical pair on `(min(i,i'), max(i,i'))`.
pub fn pair_of_pairs(
    p: &CriticalPair,
    q: &CriticalPair,
    leading: &[LeadingData],
    ctx: &RingContext,
) -> Result<(Term, CriticalPair), AlgebraError> {
    assert_eq!(p.j, q.j, "pair of pairs needs a shared second index");
    assert_ne!(p.i, q.i);
    let (k, l) = (p.i.min(q.i), p.i.max(q.i));
    let target = CriticalPair::new(k, l, leading, ctx)?;
    let lcm3 = p.lcm.lcm(&q.lcm);
    let cofactor = lcm3.quotient(&target.lcm)?;
    debug_assert_eq!(cofactor.is_one(), p.t_ij.coprime(&q.t_ij));
    Ok((cofactor, target))
}

/// Why a pending pair was discarded without treatment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KillPath {
    /// Leading term matched a minimalization candidate directly
    /// (column M23).
    DirectLtMatch,
    /// Leading term matched after one or more head reduction steps
    /// (column M48).
    HeadReductionChain,
    /// Removed by Gebauer-Moeller rule 3 during an update (column B).
    Rule3,
}

/// One discarded pair, with the evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationEvent {
    pub pair: (usize, usize),
    pub degree: MultiDegree,
    pub path: KillPath,
    /// Head reduction steps performed before the kill was discovered.
    pub head_reductions: u32,
}

/// Counters matching the statistics columns of a run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairStats {
    /// Total number of critical pairs formed (column `#(Sigma)`).
    pub sigma_total: u64,
    /// Pairs surviving rules 1-2, i.e. enqueued for treatment
    /// (column `#(Sigma'')`).
    pub sigma2: u64,
    /// Pairs killed by rule 3 (column `B`; `gm` strategy only).
    pub rule3_kills: u64,
    /// Pairs killed by a direct leading-term match (column `M23`).
    pub m23_kills: u64,
    /// Pairs killed after head reduction steps (column `M48`).
    pub m48_kills: u64,
    /// Pairs actually treated (column `#(Theta)` under `ckr`).
    pub theta: u64,
}

impl PairStats {
    /// `Gain = M23 + M48 - B`.
    pub fn gain(&self) -> i64 {
        self.m23_kills as i64 + self.m48_kills as i64 - self.rule3_kills as i64
    }

    /// The counter identity `#(Theta) = #(Sigma'') - M23 - M48`.
    pub fn theta_identity_holds(&self) -> bool {
        self.theta == self.sigma2 - self.m23_kills - self.m48_kills
    }
}

type AIndex = BTreeMap<usize, BTreeMap<Term, CriticalPair>>;

fn a_insert(a: &mut AIndex, p: CriticalPair) {
    let prev = a.entry(p.j).or_default().insert(p.t_ji.clone(), p);
    debug_assert!(prev.is_none(), "distinct syzygy leading terms expected");
}

fn a_contains(a: &AIndex, j: usize, t_ji: &Term) -> bool {
    a.get(&j).is_some_and(|bucket| bucket.contains_key(t_ji))
}

/// Smallest divisor of `t_ji` among the `(i', j)` entries: DegLex on the
/// cofactor, then the smaller first index.
fn a_find_divisor<'a>(a: &'a AIndex, j: usize, t_ji: &Term) -> Option<&'a CriticalPair> {
    let bucket = a.get(&j)?;
    let mut best: Option<&CriticalPair> = None;
    for (t, p) in bucket {
        if t.divides(t_ji) {
            let better = match best {
                None => true,
                Some(b) => {
                    let key_p = (t.total_degree(), t.exponents().to_vec(), p.i);
                    let key_b = (
                        b.t_ji.total_degree(),
                        b.t_ji.exponents().to_vec(),
                        b.i,
                    );
                    key_p < key_b
                }
            };
            if better {
                best = Some(p);
            }
        }
    }
    best
}

type PendingKey = (u64, Term, usize, usize);

fn pending_key(p: &CriticalPair) -> PendingKey {
    (p.lcm.total_degree(), p.lcm.clone(), p.j, p.i)
}

/// Entry of the pair-of-pairs pool: the canonical pair its S-vector
/// reduces to, plus the generator index whose update produced it.
#[derive(Debug, Clone)]
struct BStarEntry {
    pair: CriticalPair,
    parent: usize,
}

/// The pending pairs of one degree: a processing queue ordered by
/// increasing DegLex of the lcm (then `(j, i)`), with a secondary index by
/// syzygy leading term for the minimalization lookups.
#[derive(Debug, Default)]
struct DegreeSlice {
    queue: BTreeMap<PendingKey, CriticalPair>,
    by_lt: BTreeMap<(usize, Term), PendingKey>,
    bstar: Vec<BStarEntry>,
}

impl DegreeSlice {
    fn insert(&mut self, p: CriticalPair) {
        let key = pending_key(&p);
        self.by_lt.insert((p.j, p.t_ji.clone()), key.clone());
        self.queue.insert(key, p);
    }

    fn pop_min(&mut self) -> Option<CriticalPair> {
        let (key, p) = self.queue.pop_first()?;
        self.by_lt.remove(&(p.j, p.t_ji.clone()));
        debug_assert_eq!(pending_key(&p), key);
        Some(p)
    }

    fn remove_by_lt(&mut self, j: usize, t_ji: &Term) -> Option<CriticalPair> {
        let key = self.by_lt.remove(&(j, t_ji.clone()))?;
        self.queue.remove(&key)
    }

    fn pop_bstar(&mut self) -> Option<BStarEntry> {
        if self.bstar.is_empty() {
            None
        } else {
            Some(self.bstar.remove(0))
        }
    }

    fn take_bstar(&mut self, i: usize, j: usize) -> Option<BStarEntry> {
        let pos = self
            .bstar
            .iter()
            .position(|e| e.pair.i == i && e.pair.j == j)?;
        Some(self.bstar.remove(pos))
    }

    fn is_empty(&self) -> bool {
        self.queue.is_empty() && self.bstar.is_empty()
    }
}

fn sort_bstar(entries: &mut [BStarEntry]) {
    entries.sort_by(|a, b| pending_key(&a.pair).cmp(&pending_key(&b.pair)));
}

/// Minimalization of one degree slice. Walks the pair-of-pairs pool; each
/// entry either certifies a pending pair as redundant (removing it from the
/// queue into `a`) or is discarded, possibly after a chain of symbolic head
/// reduction steps performed on the cached cofactors.
fn run_minpairs(
    a: &mut AIndex,
    slice: &mut DegreeSlice,
    leading: &[LeadingData],
    ctx: &RingContext,
    m23: &mut u64,
    m48: &mut u64,
    events: &mut Vec<EliminationEvent>,
) {
    while let Some(entry) = slice.pop_bstar() {
        let mut provenance = entry;
        let mut cur = provenance.pair.clone();
        let mut chain: u32 = 0;
        loop {
            // direct leading-term match against already-known pairs
            if a_contains(a, cur.j, &cur.t_ji) {
                break;
            }
            // leading-term match against a pending pair: that pair is
            // redundant, move it out of the queue
            if let Some(victim) = slice.remove_by_lt(cur.j, &cur.t_ji) {
                let path = if chain == 0 {
                    *m23 += 1;
                    KillPath::DirectLtMatch
                } else {
                    *m48 += 1;
                    KillPath::HeadReductionChain
                };
                events.push(EliminationEvent {
                    pair: victim.indices(),
                    degree: victim.degree.clone(),
                    path,
                    head_reductions: chain,
                });
                a_insert(a, victim);
                break;
            }
            // a reduction result re-enters the chain only while it is still
            // in the pool; otherwise it was dealt with before
            if chain > 0 {
                match slice.take_bstar(cur.i, cur.j) {
                    Some(next_entry) => {
                        debug_assert_coprime_chain(&provenance, leading);
                        cur = next_entry.pair.clone();
                        provenance = next_entry;
                    }
                    None => break,
                }
            }
            // head reduction step: find a known divisor of the leading
            // cofactor; a unit result cofactor is required to continue
            let Some(red) = a_find_divisor(a, cur.j, &cur.t_ji) else {
                debug_assert!(false, "head reducer must exist for a valid pair pool");
                break;
            };
            if !cur.t_ij.coprime(&red.t_ij) {
                // the result is a proper multiple of a lower-degree syzygy
                // and reduces to zero on its own
                break;
            }
            let (k, l) = (cur.i.min(red.i), cur.i.max(red.i));
            let next = CriticalPair::new(k, l, leading, ctx)
                .expect("cofactors exist for valid leading data");
            debug_assert_eq!(next.degree, cur.degree, "unit-cofactor reduction keeps degree");
            chain += 1;
            cur = next;
        }
    }
}

/// Optional consistency check on chained reductions: when a head reduction
/// of a pooled element lands on another pooled pair of pairs, the cofactors
/// connecting the element to its parent are coprime whenever neither is a
/// unit.
fn debug_assert_coprime_chain(provenance: &BStarEntry, leading: &[LeadingData]) {
    if !cfg!(debug_assertions) {
        return;
    }
    let (i, j, m) = (provenance.pair.i, provenance.pair.j, provenance.parent);
    let lcm_im = leading[i].term.lcm(&leading[m].term);
    let lcm_jm = leading[j].term.lcm(&leading[m].term);
    if !lcm_im.divides(&provenance.pair.lcm) || !lcm_jm.divides(&provenance.pair.lcm) {
        return;
    }
    let t_prime = provenance.pair.lcm.quotient(&lcm_im).expect("checked");
    let t_second = provenance.pair.lcm.quotient(&lcm_jm).expect("checked");
    if !t_prime.is_one() && !t_second.is_one() {
        debug_assert!(
            t_prime.coprime(&t_second),
            "pair-of-pairs cofactors must be coprime"
        );
    }
}

/// Outcome of the standalone minimalization of the critical syzygies.
#[derive(Debug, Clone)]
pub struct SigmaBamOutcome {
    /// A minimal generating set of the syzygy module of the leading terms,
    /// as a subset of the rule-1/2 survivors.
    pub theta: Vec<CriticalPair>,
    pub m23_kills: u64,
    pub m48_kills: u64,
    pub events: Vec<EliminationEvent>,
}

/// Standalone minimalization of the critical syzygies: trims the rule-1/2
/// survivor set down to a minimal generating system of the syzygy module
/// of `(c_1 t_1 e_{gamma_1}, ..., c_s t_s e_{gamma_s})`, degree by degree.
pub fn sigma_bam(
    sigma2: &[CriticalPair],
    leading: &[LeadingData],
    ctx: &RingContext,
) -> SigmaBamOutcome {
    let mut a: AIndex = BTreeMap::new();
    let mut theta: Vec<CriticalPair> = Vec::new();
    let mut events: Vec<EliminationEvent> = Vec::new();
    let (mut m23, mut m48) = (0u64, 0u64);

    // pending syzygies, degree-sliced
    let mut pending: BTreeMap<MultiDegree, Vec<CriticalPair>> = BTreeMap::new();
    for p in sigma2 {
        pending.entry(p.degree.clone()).or_default().push(p.clone());
    }

    // precompute the pair-of-pairs pool: S-vectors of survivors sharing the
    // second index, kept only when the result cofactor is a unit
    let mut pool: BTreeMap<MultiDegree, Vec<BStarEntry>> = BTreeMap::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut by_j: BTreeMap<usize, Vec<&CriticalPair>> = BTreeMap::new();
    for p in sigma2 {
        by_j.entry(p.j).or_default().push(p);
    }
    for group in by_j.values() {
        for (a_idx, p) in group.iter().enumerate() {
            for q in &group[a_idx + 1..] {
                if p.t_ij.coprime(&q.t_ij) {
                    let (k, l) = (p.i.min(q.i), p.i.max(q.i));
                    if seen.insert((k, l)) {
                        let target = CriticalPair::new(k, l, leading, ctx)
                            .expect("valid leading data");
                        pool.entry(target.degree.clone()).or_default().push(BStarEntry {
                            pair: target,
                            parent: p.j,
                        });
                    }
                }
            }
        }
    }

    loop {
        let next_degree = match (pending.keys().next(), pool.keys().next()) {
            (None, None) => break,
            (Some(d), None) | (None, Some(d)) => d.clone(),
            (Some(d1), Some(d2)) => d1.min(d2).clone(),
        };
        let mut slice = DegreeSlice::default();
        if let Some(ps) = pending.remove(&next_degree) {
            for p in ps {
                slice.insert(p);
            }
        }
        if let Some(mut es) = pool.remove(&next_degree) {
            sort_bstar(&mut es);
            slice.bstar = es;
        }
        run_minpairs(&mut a, &mut slice, leading, ctx, &mut m23, &mut m48, &mut events);
        // survivors of this degree are minimal generators
        while let Some(p) = slice.pop_min() {
            theta.push(p.clone());
            a_insert(&mut a, p);
        }
        debug_assert!(slice.is_empty());
    }

    SigmaBamOutcome {
        theta,
        m23_kills: m23,
        m48_kills: m48,
        events,
    }
}

/// Record of a pair entering the pair-of-pairs pool.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolRecord {
    pub pair: (usize, usize),
    pub degree: MultiDegree,
    /// Index of the basis element whose update produced the entry.
    pub parent: usize,
}

/// The mutable pair state of one engine run: treated pairs (`A`), pending
/// pairs (`B`, degree-sliced), and the pair-of-pairs pool (`B*`), plus the
/// counters and the elimination log.
#[derive(Debug)]
pub struct PairCollections {
    strategy: Strategy,
    truncation: Option<MultiDegree>,
    a: AIndex,
    b: BTreeMap<MultiDegree, Vec<CriticalPair>>,
    bstar: BTreeMap<MultiDegree, Vec<BStarEntry>>,
    /// Every pair ever appended to the pool, pending or consumed; lookups
    /// in the update procedure never re-append.
    bstar_seen: BTreeSet<(usize, usize)>,
    active: Option<DegreeSlice>,
    pub stats: PairStats,
    pub events: Vec<EliminationEvent>,
    /// Pairs treated, in order.
    pub treated: Vec<(usize, usize)>,
    /// Pool entries, in order of creation.
    pub pool_log: Vec<PoolRecord>,
}

impl PairCollections {
    pub fn new(strategy: Strategy, truncation: Option<MultiDegree>) -> Self {
        PairCollections {
            strategy,
            truncation,
            a: BTreeMap::new(),
            b: BTreeMap::new(),
            bstar: BTreeMap::new(),
            bstar_seen: BTreeSet::new(),
            active: None,
            stats: PairStats::default(),
            events: Vec::new(),
            treated: Vec::new(),
            pool_log: Vec::new(),
        }
    }

    /// Smallest degree with a pending pair.
    pub fn next_degree(&self) -> Option<&MultiDegree> {
        self.b.keys().next()
    }

    /// Extracts the pending slice and pool slice of degree `d`. Pool
    /// entries of lower degree can linger when no pending pair of their
    /// degree existed; they have nothing left to eliminate and are dropped.
    pub fn begin_degree(&mut self, d: &MultiDegree) {
        debug_assert!(self.active.is_none(), "previous degree not finished");
        let mut slice = DegreeSlice::default();
        if let Some(ps) = self.b.remove(d) {
            for p in ps {
                slice.insert(p);
            }
        }
        let stale: Vec<MultiDegree> = self
            .bstar
            .range(..=d.clone())
            .map(|(k, _)| k.clone())
            .collect();
        for key in stale {
            let entries = self.bstar.remove(&key).expect("key listed");
            if &key == d {
                let mut entries = entries;
                sort_bstar(&mut entries);
                slice.bstar = entries;
            }
        }
        self.active = Some(slice);
    }

    /// Runs the per-degree minimalization over the active slice; pending
    /// pairs certified redundant are moved out of the queue. Returns the
    /// kill counts on the two paths.
    pub fn min_pairs(&mut self, leading: &[LeadingData], ctx: &RingContext) -> (u64, u64) {
        if self.strategy != Strategy::Ckr {
            return (0, 0);
        }
        let slice = self.active.as_mut().expect("begin_degree first");
        let (mut m23, mut m48) = (0, 0);
        run_minpairs(
            &mut self.a,
            slice,
            leading,
            ctx,
            &mut m23,
            &mut m48,
            &mut self.events,
        );
        self.stats.m23_kills += m23;
        self.stats.m48_kills += m48;
        (m23, m48)
    }

    /// Pops the next pending pair of the active degree (increasing DegLex
    /// of the lcm), recording it as treated.
    pub fn pop_pair(&mut self) -> Option<CriticalPair> {
        let slice = self.active.as_mut().expect("begin_degree first");
        let p = slice.pop_min()?;
        self.treated.push(p.indices());
        self.stats.theta += 1;
        // only the minimalizing strategy consults the treated index, and
        // only its creation-time rules guarantee distinct leading terms
        if self.strategy == Strategy::Ckr {
            a_insert(&mut self.a, p.clone());
        }
        Some(p)
    }

    pub fn finish_degree(&mut self) {
        let slice = self.active.take().expect("begin_degree first");
        debug_assert!(slice.queue.is_empty(), "pending pairs left untreated");
    }

    /// The update procedure run after appending basis element `s' =
    /// leading.len() - 1`: forms the candidate pairs `(i, s')`, filters them
    /// by the two creation-time rules, pools the coprime-cofactor pairs of
    /// pairs, and enqueues the survivors.
    pub fn update(
        &mut self,
        leading: &[LeadingData],
        ctx: &RingContext,
    ) -> Result<(), AlgebraError> {
        let s_new = leading.len() - 1;
        let gamma = leading[s_new].component;

        // candidate pairs (i, s') with matching components
        let mut candidates: Vec<CriticalPair> = Vec::new();
        for i in 0..s_new {
            if leading[i].component == gamma {
                candidates.push(CriticalPair::new(i, s_new, leading, ctx)?);
            }
        }
        self.stats.sigma_total += candidates.len() as u64;
        if candidates.is_empty() {
            return Ok(());
        }

        let survivors: Vec<CriticalPair> = match self.strategy {
            Strategy::Naive => candidates,
            Strategy::Gm | Strategy::Ckr => {
                let keep: Vec<bool> = candidates
                    .iter()
                    .map(|p| {
                        // rule 1 analogue: some earlier candidate's cofactor
                        // divides this one's
                        let rule1 = candidates
                            .iter()
                            .any(|q| q.i < p.i && q.t_ji.divides(&p.t_ji));
                        // rule 2 analogue: a later candidate's cofactor
                        // properly divides this one's
                        let rule2 = candidates
                            .iter()
                            .any(|q| q.i > p.i && q.t_ji.properly_divides(&p.t_ji));
                        !(rule1 || rule2)
                    })
                    .collect();
                candidates
                    .into_iter()
                    .zip(keep)
                    .filter_map(|(p, k)| k.then_some(p))
                    .collect()
            }
        };

        if self.strategy == Strategy::Ckr {
            // pool the pairs of pairs with coprime cofactors
            for (idx, p) in survivors.iter().enumerate() {
                for q in &survivors[idx + 1..] {
                    if p.t_ij.coprime(&q.t_ij) {
                        let (k, l) = (p.i.min(q.i), p.i.max(q.i));
                        if self.bstar_seen.insert((k, l)) {
                            let target = CriticalPair::new(k, l, leading, ctx)?;
                            self.pool_log.push(PoolRecord {
                                pair: (k, l),
                                degree: target.degree.clone(),
                                parent: s_new,
                            });
                            self.bstar
                                .entry(target.degree.clone())
                                .or_default()
                                .push(BStarEntry {
                                    pair: target,
                                    parent: s_new,
                                });
                        }
                    }
                }
            }
        }

        if self.strategy == Strategy::Gm {
            self.apply_rule3(&survivors, leading);
        }

        // enqueue the survivors, skipping pairs beyond the truncation bound
        for p in survivors {
            if let Some(bound) = &self.truncation {
                if &p.degree > bound {
                    continue;
                }
            }
            self.stats.sigma2 += 1;
            self.b.entry(p.degree.clone()).or_default().push(p);
        }
        Ok(())
    }

    /// Gebauer-Moeller rule 3 over the pending pairs: with the new element
    /// `s'`, a pending `(i, j)` is redundant when `t_{i s'}` properly
    /// divides `t_ij` and `t_{j s'}` properly divides `t_ji`.
    fn apply_rule3(&mut self, new_pairs: &[CriticalPair], leading: &[LeadingData]) {
        let s_new = leading.len() - 1;
        let gamma = leading[s_new].component;
        let cof_with_new: BTreeMap<usize, &Term> =
            new_pairs.iter().map(|p| (p.i, &p.t_ij)).collect();
        // cofactor of t_i against the new leading term, also for candidates
        // that were filtered: recompute on demand
        let t_new = &leading[s_new].term;
        let cof = |i: usize| -> Option<Term> {
            if leading[i].component != gamma {
                return None;
            }
            match cof_with_new.get(&i) {
                Some(t) => Some((*t).clone()),
                None => {
                    let lcm = leading[i].term.lcm(t_new);
                    Some(lcm.quotient(&leading[i].term).expect("lcm is a multiple"))
                }
            }
        };
        let kill = |p: &CriticalPair| -> bool {
            match (cof(p.i), cof(p.j)) {
                (Some(tik), Some(tjk)) => {
                    tik.properly_divides(&p.t_ij) && tjk.properly_divides(&p.t_ji)
                }
                _ => false,
            }
        };
        let mut killed: Vec<EliminationEvent> = Vec::new();
        for bucket in self.b.values_mut() {
            bucket.retain(|p| {
                if kill(p) {
                    killed.push(EliminationEvent {
                        pair: p.indices(),
                        degree: p.degree.clone(),
                        path: KillPath::Rule3,
                        head_reductions: 0,
                    });
                    false
                } else {
                    true
                }
            });
        }
        self.b.retain(|_, bucket| !bucket.is_empty());
        if let Some(slice) = self.active.as_mut() {
            let doomed: Vec<CriticalPair> = slice
                .queue
                .values()
                .filter(|p| kill(p))
                .cloned()
                .collect();
            for p in doomed {
                slice.remove_by_lt(p.j, &p.t_ji);
                killed.push(EliminationEvent {
                    pair: p.indices(),
                    degree: p.degree.clone(),
                    path: KillPath::Rule3,
                    head_reductions: 0,
                });
            }
        }
        self.stats.rule3_kills += killed.len() as u64;
        self.events.extend(killed);
    }

    /// True when no pending pair remains anywhere.
    pub fn pending_is_empty(&self) -> bool {
        self.b.is_empty() && self.active.as_ref().is_none_or(|s| s.queue.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Coefficient;
    use crate::grading::RingContext;

    fn lead(e: &[u32]) -> LeadingData {
        LeadingData {
            coeff: Coefficient::one(),
            term: Term::new(e.to_vec()),
            component: 0,
        }
    }

    fn fmt_pairs(pairs: &[CriticalPair]) -> String {
        pairs
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Leading terms of the four-generator example over Q[x,y,z]:
    /// x^3 z^2, x^3 y^4, y^5 z^2, x^2 y^5 z.
    fn ex1_leading() -> Vec<LeadingData> {
        vec![
            lead(&[3, 0, 2]),
            lead(&[3, 4, 0]),
            lead(&[0, 5, 2]),
            lead(&[2, 5, 1]),
        ]
    }

    /// Leading terms of the five-variable example:
    /// x2^2 x3^6 x4 x5^2, x1^8 x2 x4 x5^4, x1^8 x2^2 x3^6, x1^8 x3^6 x5^4.
    fn ex2_leading() -> Vec<LeadingData> {
        vec![
            lead(&[0, 2, 6, 1, 2]),
            lead(&[8, 1, 0, 1, 4]),
            lead(&[8, 2, 6, 0, 0]),
            lead(&[8, 0, 6, 0, 4]),
        ]
    }

    #[test]
    fn build_pairs_of_ex1() {
        let ctx = RingContext::standard(3);
        let pairs = build_pairs(&ex1_leading(), &ctx).unwrap();
        assert_eq!(pairs.len(), 6);
        let p34 = pairs.iter().find(|p| p.indices() == (2, 3)).unwrap();
        // sigma_34 = x^2 eps_3 - z eps_4
        assert_eq!(p34.t_ij, Term::new(vec![2, 0, 0]));
        assert_eq!(p34.t_ji, Term::new(vec![0, 0, 1]));
        assert_eq!(p34.degree, MultiDegree(vec![9]));
    }

    #[test]
    fn build_pairs_single_generator() {
        let ctx = RingContext::standard(2);
        let pairs = build_pairs(&[lead(&[1, 0])], &ctx).unwrap();
        assert!(pairs.is_empty());
    }

    #[test]
    fn build_pairs_skips_component_mismatch() {
        let ctx = RingContext::standard_module(2, vec![MultiDegree(vec![0]); 2]);
        let a = LeadingData {
            coeff: Coefficient::one(),
            term: Term::new(vec![1, 0]),
            component: 0,
        };
        let b = LeadingData {
            coeff: Coefficient::one(),
            term: Term::new(vec![0, 1]),
            component: 1,
        };
        assert!(build_pairs(&[a, b], &ctx).unwrap().is_empty());
    }

    #[test]
    fn gm_rules_on_ex1() {
        let ctx = RingContext::standard(3);
        let pairs = build_pairs(&ex1_leading(), &ctx).unwrap();
        let out = gm_rules(&pairs);
        let mut sigma2: Vec<(usize, usize)> = out.sigma2.iter().map(|p| p.indices()).collect();
        sigma2.sort();
        assert_eq!(sigma2, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(out.sigma3.len(), out.sigma2.len());
        assert_eq!(out.rule3_killed, 0);
    }

    #[test]
    fn gm_rules_on_ex2() {
        let ctx = RingContext::standard(5);
        let pairs = build_pairs(&ex2_leading(), &ctx).unwrap();
        let out = gm_rules(&pairs);
        let mut sigma2: Vec<(usize, usize)> = out.sigma2.iter().map(|p| p.indices()).collect();
        sigma2.sort();
        // sigma_23 and sigma_14 are discarded
        assert_eq!(sigma2, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn gm_rules_keep_coprime_triple() {
        let ctx = RingContext::standard(3);
        let leading = vec![lead(&[2, 0, 0]), lead(&[0, 3, 0]), lead(&[0, 0, 4])];
        let pairs = build_pairs(&leading, &ctx).unwrap();
        let out = gm_rules(&pairs);
        assert_eq!(out.sigma2.len(), pairs.len());
    }

    #[test]
    fn pair_of_pairs_of_ex1() {
        let ctx = RingContext::standard(3);
        let leading = ex1_leading();
        let p24 = CriticalPair::new(1, 3, &leading, &ctx).unwrap();
        let p34 = CriticalPair::new(2, 3, &leading, &ctx).unwrap();
        let (cofactor, target) = pair_of_pairs(&p24, &p34, &leading, &ctx).unwrap();
        assert!(cofactor.is_one());
        assert_eq!(target.indices(), (1, 2));
        assert_eq!(target.degree, MultiDegree(vec![10]));
    }

    #[test]
    fn fmt_pairs_is_one_based() {
        let ctx = RingContext::standard(3);
        let pairs = build_pairs(&ex1_leading(), &ctx).unwrap();
        assert_eq!(
            fmt_pairs(&pairs),
            "(1,2) (1,3) (2,3) (1,4) (2,4) (3,4)"
        );
    }

    #[test]
    fn sigma_bam_on_ex1() {
        // the pair (1,3) is the one non-minimal survivor, found at degree
        // 10 by a direct leading-term match with the pooled sigma_23
        let ctx = RingContext::standard(3);
        let leading = ex1_leading();
        let pairs = build_pairs(&leading, &ctx).unwrap();
        let out = gm_rules(&pairs);
        let result = sigma_bam(&out.sigma2, &leading, &ctx);
        let mut theta: Vec<(usize, usize)> =
            result.theta.iter().map(|p| p.indices()).collect();
        theta.sort();
        assert_eq!(theta, vec![(0, 1), (1, 3), (2, 3)]);
        assert_eq!(result.m23_kills, 1);
        assert_eq!(result.m48_kills, 0);
        assert_eq!(result.events.len(), 1);
        let e = &result.events[0];
        assert_eq!(e.pair, (0, 2));
        assert_eq!(e.degree, MultiDegree(vec![10]));
        assert_eq!(e.path, KillPath::DirectLtMatch);
        assert_eq!(e.head_reductions, 0);
    }

    #[test]
    fn sigma_bam_on_ex2() {
        // sigma_12 is recognized as redundant only after one head
        // reduction step at degree 21
        let ctx = RingContext::standard(5);
        let leading = ex2_leading();
        let pairs = build_pairs(&leading, &ctx).unwrap();
        let out = gm_rules(&pairs);
        let result = sigma_bam(&out.sigma2, &leading, &ctx);
        let mut theta: Vec<(usize, usize)> =
            result.theta.iter().map(|p| p.indices()).collect();
        theta.sort();
        assert_eq!(theta, vec![(0, 2), (1, 3), (2, 3)]);
        assert_eq!(result.m23_kills, 0);
        assert_eq!(result.m48_kills, 1);
        let e = &result.events[0];
        assert_eq!(e.pair, (0, 1));
        assert_eq!(e.degree, MultiDegree(vec![21]));
        assert_eq!(e.path, KillPath::HeadReductionChain);
        assert_eq!(e.head_reductions, 1);
    }

    #[test]
    fn sigma_bam_trivial_inputs() {
        let ctx = RingContext::standard(2);
        let leading = vec![lead(&[1, 0]), lead(&[0, 1])];
        let pairs = build_pairs(&leading, &ctx).unwrap();
        let out = gm_rules(&pairs);
        let result = sigma_bam(&out.sigma2, &leading, &ctx);
        assert_eq!(result.theta.len(), out.sigma2.len());
        let empty = sigma_bam(&[], &leading, &ctx);
        assert!(empty.theta.is_empty());
    }

    /// Leading terms appearing in the engine walk of the three-generator
    /// ideal: x^3 z^2, x^3 y^8, y^10 z^2, then the new element x^2 y^10 z.
    fn ex3_leading(upto: usize) -> Vec<LeadingData> {
        let all = [
            lead(&[3, 0, 2]),
            lead(&[3, 8, 0]),
            lead(&[0, 10, 2]),
            lead(&[2, 10, 1]),
        ];
        all[..upto].to_vec()
    }

    #[test]
    fn update_walkthrough_of_ex3() {
        let ctx = RingContext::standard(3);
        let mut pairs = PairCollections::new(Strategy::Ckr, None);

        // g_1, g_2: a single pending pair (1,2) of degree 13
        pairs.update(&ex3_leading(1), &ctx).unwrap();
        pairs.update(&ex3_leading(2), &ctx).unwrap();
        assert_eq!(pairs.next_degree(), Some(&MultiDegree(vec![13])));
        assert_eq!(pairs.stats.sigma_total, 1);
        assert_eq!(pairs.stats.sigma2, 1);

        // g_3 arrives: (2,3) is deleted at creation since t_31 = t_32
        pairs.update(&ex3_leading(3), &ctx).unwrap();
        assert_eq!(pairs.stats.sigma_total, 3);
        assert_eq!(pairs.stats.sigma2, 2); // (1,2) and (1,3)

        // degree 13: treat (1,2); g_4 arrives: (1,4) dies to the proper
        // divisibility t_42 | t_41, and (2,3) enters the pool
        pairs.begin_degree(&MultiDegree(vec![13]));
        pairs.min_pairs(&ex3_leading(3), &ctx);
        let p = pairs.pop_pair().unwrap();
        assert_eq!(p.indices(), (0, 1));
        assert!(pairs.pop_pair().is_none());
        pairs.update(&ex3_leading(4), &ctx).unwrap();
        pairs.finish_degree();
        assert_eq!(pairs.stats.sigma_total, 6);
        assert_eq!(pairs.stats.sigma2, 4); // + (2,4), (3,4)
        assert_eq!(pairs.pool_log.len(), 1);
        assert_eq!(
            pairs.pool_log[0],
            PoolRecord {
                pair: (1, 2),
                degree: MultiDegree(vec![15]),
                parent: 3,
            }
        );

        // degree 14: both pairs treated, nothing killed; the DegLex order
        // of the lcms puts (3,4) before (2,4)
        pairs.begin_degree(&MultiDegree(vec![14]));
        pairs.min_pairs(&ex3_leading(4), &ctx);
        assert_eq!(pairs.pop_pair().unwrap().indices(), (2, 3));
        assert_eq!(pairs.pop_pair().unwrap().indices(), (1, 3));
        assert!(pairs.pop_pair().is_none());
        pairs.finish_degree();

        // degree 15: the pooled (2,3) kills the pending (1,3)
        pairs.begin_degree(&MultiDegree(vec![15]));
        let (m23, m48) = pairs.min_pairs(&ex3_leading(4), &ctx);
        assert_eq!((m23, m48), (1, 0));
        assert!(pairs.pop_pair().is_none());
        pairs.finish_degree();

        assert!(pairs.pending_is_empty());
        assert_eq!(pairs.treated, vec![(0, 1), (2, 3), (1, 3)]);
        assert!(pairs.stats.theta_identity_holds());
        let kill = &pairs.events[0];
        assert_eq!(kill.pair, (0, 2));
        assert_eq!(kill.degree, MultiDegree(vec![15]));
        assert_eq!(kill.path, KillPath::DirectLtMatch);
    }

    #[test]
    fn update_with_no_prior_generators_is_noop() {
        let ctx = RingContext::standard(2);
        let mut pairs = PairCollections::new(Strategy::Ckr, None);
        pairs.update(&[lead(&[1, 0])], &ctx).unwrap();
        assert_eq!(pairs.stats.sigma_total, 0);
        assert!(pairs.next_degree().is_none());
    }

    #[test]
    fn rule3_prunes_pending_pairs_in_gm_mode() {
        // t_1 = x^2 y, t_2 = x y^2: the pair (1,2) has lcm x^2 y^2.
        // A new element t_3 = x y properly divides both cofactors' targets,
        // so rule 3 removes the pending (1,2).
        let ctx = RingContext::standard(2);
        let mut pairs = PairCollections::new(Strategy::Gm, None);
        let mut leading = vec![lead(&[2, 1])];
        pairs.update(&leading, &ctx).unwrap();
        leading.push(lead(&[1, 2]));
        pairs.update(&leading, &ctx).unwrap();
        assert_eq!(pairs.stats.sigma2, 1);
        leading.push(lead(&[1, 1]));
        pairs.update(&leading, &ctx).unwrap();
        assert_eq!(pairs.stats.rule3_kills, 1);
        let e = pairs
            .events
            .iter()
            .find(|e| e.path == KillPath::Rule3)
            .unwrap();
        assert_eq!(e.pair, (0, 1));
    }

    #[test]
    fn dominance_of_minimalization_over_rule3_on_ex_instances() {
        // every pair rule 3 would kill is also outside the minimal set
        for leading in [ex1_leading(), ex2_leading()] {
            let n = leading[0].term.nvars();
            let ctx = RingContext::standard(n);
            let pairs = build_pairs(&leading, &ctx).unwrap();
            let out = gm_rules(&pairs);
            let result = sigma_bam(&out.sigma2, &leading, &ctx);
            let sigma3: Vec<(usize, usize)> =
                out.sigma3.iter().map(|p| p.indices()).collect();
            for p in &result.theta {
                assert!(sigma3.contains(&p.indices()), "theta must lie in sigma'''");
            }
        }
    }
}
