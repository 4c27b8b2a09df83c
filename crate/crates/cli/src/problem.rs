//! The problem-file model: a ring declaration, a grading, a free module,
//! an ordering, and a list of generators.

use std::sync::Arc;

use mingb_core::grading::{DegreeMatrix, MultiDegree, RingContext, ShiftVector};
use mingb_core::term::{ModuleTerm, Term};
use mingb_core::vector::ModuleVector;
use mingb_core::{BaseOrder, Coefficient, ModuleExtension, OrderingSpec};

/// One parsed term: coefficient and exponent vector.
pub type PolyTerms = Vec<(Coefficient, Vec<u32>)>;

/// A parsed generator: one polynomial per module component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorExpr {
    /// `components[gamma]` is the polynomial in front of `e_{gamma+1}`.
    pub components: Vec<PolyTerms>,
}

/// A fully validated problem file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub vars: Vec<String>,
    /// Rows of the degree matrix; `None` means the standard grading.
    pub grading: Option<Vec<Vec<i64>>>,
    pub rank: usize,
    /// One shift per component; `None` means all zero.
    pub shifts: Option<Vec<Vec<i64>>>,
    /// Ordering named in the file, if any.
    pub ordering: Option<OrderingSpec>,
    pub generators: Vec<GeneratorExpr>,
    /// Non-fatal findings recorded while parsing (for example a grading
    /// that fails the positivity check).
    pub warnings: Vec<String>,
}

impl ProblemFile {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn degree_len(&self) -> usize {
        self.grading.as_ref().map_or(1, |g| g.len())
    }

    pub fn degree_matrix(&self) -> DegreeMatrix {
        match &self.grading {
            None => DegreeMatrix::standard(self.nvars()),
            Some(rows) => DegreeMatrix::new(rows.clone()).expect("validated at parse time"),
        }
    }

    pub fn is_standard_graded(&self) -> bool {
        self.degree_matrix().is_standard()
            && self
                .shifts
                .as_ref()
                .is_none_or(|s| s.iter().all(|d| d.iter().all(|&e| e == 0)))
    }

    /// The ring context described by the header lines.
    pub fn context(&self) -> Arc<RingContext> {
        let w = self.degree_matrix();
        let m = w.nrows();
        let shifts = match &self.shifts {
            None => ShiftVector::zeros(self.rank, m),
            Some(list) => ShiftVector(
                list.iter().map(|d| MultiDegree(d.clone())).collect(),
            ),
        };
        RingContext::new(self.nvars(), w, self.rank, shifts)
            .expect("dimensions validated at parse time")
    }

    /// The generators as vectors over the context.
    pub fn vectors(&self) -> (Arc<RingContext>, Vec<ModuleVector>) {
        let ctx = self.context();
        let vectors = self
            .generators
            .iter()
            .map(|g| {
                let mut terms = Vec::new();
                for (component, poly) in g.components.iter().enumerate() {
                    for (c, exps) in poly {
                        terms.push((
                            ModuleTerm::new(Term::new(exps.clone()), component),
                            c.clone(),
                        ));
                    }
                }
                ModuleVector::from_terms(ctx.clone(), terms)
                    .expect("dimensions validated at parse time")
            })
            .collect();
        (ctx, vectors)
    }

    /// Ordering from the file, or the given default.
    pub fn ordering_or(&self, default: OrderingSpec) -> OrderingSpec {
        self.ordering.unwrap_or(default)
    }
}

/// Parses an ordering name: `lex`, `deglex`, `degrevlex`, with an optional
/// `:top` or `:pot` suffix.
pub fn ordering_by_name(name: &str) -> Option<OrderingSpec> {
    let (base_name, ext) = match name.split_once(':') {
        None => (name, ModuleExtension::TermOverPosition),
        Some((b, "top")) => (b, ModuleExtension::TermOverPosition),
        Some((b, "pot")) => (b, ModuleExtension::PositionOverTerm),
        Some(_) => return None,
    };
    let base = match base_name {
        "lex" => BaseOrder::Lex,
        "deglex" => BaseOrder::DegLex,
        "degrevlex" => BaseOrder::DegRevLex,
        _ => return None,
    };
    Some(OrderingSpec::new(base, ext))
}

/// The canonical name of an ordering, matching [`ordering_by_name`].
pub fn ordering_name(o: &OrderingSpec) -> String {
    let ext = match o.extension {
        ModuleExtension::TermOverPosition => "top",
        ModuleExtension::PositionOverTerm => "pot",
    };
    format!("{}:{}", o.base.name(), ext)
}
