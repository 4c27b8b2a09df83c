//! Module term orderings and the ordering induced on syzygy terms by a
//! tuple of leading terms.

use std::cmp::Ordering;

use crate::grading::DegreeMatrix;
use crate::term::{ModuleTerm, Term};

/// Base ordering on the terms of the polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Lex,
    DegLex,
    DegRevLex,
}

impl BaseOrder {
    pub fn name(&self) -> &'static str {
        match self {
            BaseOrder::Lex => "lex",
            BaseOrder::DegLex => "deglex",
            BaseOrder::DegRevLex => "degrevlex",
        }
    }

    /// True iff the ordering compares total degrees first.
    pub fn is_degree_first(&self) -> bool {
        !matches!(self, BaseOrder::Lex)
    }

    pub fn compare(&self, a: &Term, b: &Term) -> Ordering {
        match self {
            BaseOrder::Lex => lex(a, b),
            BaseOrder::DegLex => a.total_degree().cmp(&b.total_degree()).then_with(|| lex(a, b)),
            BaseOrder::DegRevLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| revlex(a, b)),
        }
    }
}

fn lex(a: &Term, b: &Term) -> Ordering {
    a.exponents().cmp(b.exponents())
}

// a > b in revlex when the last non-zero entry of a - b is negative
fn revlex(a: &Term, b: &Term) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// How the base ordering is extended to module terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleExtension {
    /// Compare terms first, break ties by component priority.
    TermOverPosition,
    /// Compare components first, break ties by the base ordering.
    PositionOverTerm,
}

/// Which component is largest when components are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentPriority {
    /// `e_1 > e_2 > ... > e_r` (the default).
    FirstLargest,
    /// `e_r > ... > e_1`.
    LastLargest,
}

/// A module term ordering: a base ordering on `T^n` together with a module
/// extension strategy and a component priority.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderingSpec {
    pub base: BaseOrder,
    pub extension: ModuleExtension,
    pub priority: ComponentPriority,
}

impl OrderingSpec {
    pub fn new(base: BaseOrder, extension: ModuleExtension) -> Self {
        OrderingSpec {
            base,
            extension,
            priority: ComponentPriority::FirstLargest,
        }
    }

    pub fn deglex() -> Self {
        OrderingSpec::new(BaseOrder::DegLex, ModuleExtension::TermOverPosition)
    }

    pub fn degrevlex() -> Self {
        OrderingSpec::new(BaseOrder::DegRevLex, ModuleExtension::TermOverPosition)
    }

    pub fn lex() -> Self {
        OrderingSpec::new(BaseOrder::Lex, ModuleExtension::TermOverPosition)
    }

    pub fn pot(base: BaseOrder) -> Self {
        OrderingSpec::new(base, ModuleExtension::PositionOverTerm)
    }

    fn component_cmp(&self, a: usize, b: usize) -> Ordering {
        match self.priority {
            // e_1 largest: smaller index compares greater
            ComponentPriority::FirstLargest => b.cmp(&a),
            ComponentPriority::LastLargest => a.cmp(&b),
        }
    }

    /// Total order on module terms.
    pub fn compare(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        match self.extension {
            ModuleExtension::TermOverPosition => self
                .base
                .compare(&a.term, &b.term)
                .then_with(|| self.component_cmp(a.component, b.component)),
            ModuleExtension::PositionOverTerm => self
                .component_cmp(a.component, b.component)
                .then_with(|| self.base.compare(&a.term, &b.term)),
        }
    }

    pub fn term_compare(&self, a: &Term, b: &Term) -> Ordering {
        self.base.compare(a, b)
    }
}

/// Decides degree compatibility of an ordering with the grading `W`.
///
/// The answer is conservative: `true` is returned only when compatibility is
/// structurally guaranteed (a degree-first base ordering under a uniform
/// single-row positive grading, with term-over-position extension so that
/// components cannot override degrees). For all other combinations a
/// randomized search looks for a refuting pair of terms and the function
/// returns `false` whether or not one is found.
pub fn is_degree_compatible(o: &OrderingSpec, w: &DegreeMatrix) -> bool {
    if structurally_compatible(o, w) {
        return true;
    }
    // Refuter only: a found counterexample confirms the `false`; absence of
    // one does not prove compatibility.
    let _found = find_counterexample(o, w);
    false
}

fn structurally_compatible(o: &OrderingSpec, w: &DegreeMatrix) -> bool {
    if !o.base.is_degree_first() {
        return false;
    }
    if o.extension != ModuleExtension::TermOverPosition {
        return false;
    }
    // uniform positive single-row grading: deg_W is a positive multiple of
    // the total degree
    w.nrows() == 1 && {
        let row = w.rows()[0].as_slice();
        row[0] > 0 && row.iter().all(|&e| e == row[0])
    }
}

/// Searches deterministically pseudo-random term pairs for a violation of
/// `deg_W(t) >_Lex deg_W(t') => t >_o t'`.
pub fn find_counterexample(o: &OrderingSpec, w: &DegreeMatrix) -> Option<(Term, Term)> {
    let n = w.ncols();
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..2000 {
        let a = Term::new((0..n).map(|_| (next() % 5) as u32).collect());
        let b = Term::new((0..n).map(|_| (next() % 5) as u32).collect());
        let (da, db) = match (w.apply(&a), w.apply(&b)) {
            (Ok(da), Ok(db)) => (da, db),
            _ => continue,
        };
        if da > db && o.term_compare(&a, &b) != Ordering::Greater {
            return Some((a, b));
        }
        if db > da && o.term_compare(&b, &a) != Ordering::Greater {
            return Some((b, a));
        }
    }
    None
}

/// A term `t * eps_i` of the syzygy module's ambient free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyTerm {
    pub term: Term,
    pub index: usize,
}

/// The ordering induced on syzygy terms by a tuple of leading module terms
/// `(t_1 e_{gamma_1}, ..., t_s e_{gamma_s})` and a module term ordering.
///
/// `t eps_i >= t' eps_j` iff `t t_i e_{gamma_i} >_o t' t_j e_{gamma_j}`, or
/// the two images are equal and `i >= j`.
#[derive(Debug, Clone)]
pub struct InducedOrdering<'a> {
    spec: OrderingSpec,
    leads: &'a [(Term, usize)],
}

impl<'a> InducedOrdering<'a> {
    pub fn new(spec: OrderingSpec, leads: &'a [(Term, usize)]) -> Self {
        InducedOrdering { spec, leads }
    }

    pub fn len(&self) -> usize {
        self.leads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leads.is_empty()
    }

    fn image(&self, st: &SyzygyTerm) -> ModuleTerm {
        let (t_i, gamma_i) = &self.leads[st.index];
        ModuleTerm::new(st.term.mul(t_i), *gamma_i)
    }

    pub fn compare(&self, a: &SyzygyTerm, b: &SyzygyTerm) -> Ordering {
        self.spec
            .compare(&self.image(a), &self.image(b))
            .then_with(|| a.index.cmp(&b.index))
    }
}

/// `tau_compare` on the spec surface.
pub fn tau_compare(tau: &InducedOrdering<'_>, a: &SyzygyTerm, b: &SyzygyTerm) -> Ordering {
    tau.compare(a, b)
}
