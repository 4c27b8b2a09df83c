//! Textual rendering of terms, vectors, and whole problems. Rendered
//! output re-parses to an identical problem.

use mingb_core::reduction::leading_monomial;
use mingb_core::term::Term;
use mingb_core::vector::ModuleVector;
use mingb_core::{Coefficient, OrderingSpec};

use crate::problem::{ordering_name, ProblemFile};

/// `x^3*z^2` style rendering; the constant term renders as `1`.
pub fn render_term(t: &Term, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (name, &e) in vars.iter().zip(t.exponents()) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn render_signed_term(c: &Coefficient, t: &Term, vars: &[String], first: bool) -> String {
    let mag = if c.is_negative() { -c } else { c.clone() };
    let sign = if c.is_negative() {
        if first {
            "-".to_string()
        } else {
            " - ".to_string()
        }
    } else if first {
        String::new()
    } else {
        " + ".to_string()
    };
    let body = if t.is_one() {
        format!("{mag}")
    } else if mag.is_one() {
        render_term(t, vars)
    } else {
        format!("{}*{}", mag, render_term(t, vars))
    };
    format!("{sign}{body}")
}

/// Renders one polynomial (the terms of a fixed component), descending
/// under the ordering.
pub fn render_poly(
    terms: &[(&Term, &Coefficient)],
    vars: &[String],
    o: &OrderingSpec,
) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut sorted: Vec<(&Term, &Coefficient)> = terms.to_vec();
    sorted.sort_by(|a, b| o.term_compare(b.0, a.0));
    let mut out = String::new();
    for (i, (t, c)) in sorted.iter().enumerate() {
        out.push_str(&render_signed_term(c, t, vars, i == 0));
    }
    out
}

/// Renders a module vector: a bare polynomial for rank 1, a bracketed
/// vector otherwise.
pub fn render_vector(v: &ModuleVector, vars: &[String], o: &OrderingSpec) -> String {
    let rank = v.context().rank();
    let mut per_component: Vec<Vec<(&Term, &Coefficient)>> = vec![Vec::new(); rank];
    for (mt, c) in v.terms() {
        per_component[mt.component].push((&mt.term, c));
    }
    if rank == 1 {
        render_poly(&per_component[0], vars, o)
    } else {
        let parts: Vec<String> = per_component
            .iter()
            .map(|terms| render_poly(terms, vars, o))
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Renders a whole problem file; `parse_problem` on the output yields the
/// same problem.
pub fn render_problem(p: &ProblemFile, o: &OrderingSpec) -> String {
    let mut out = String::new();
    out.push_str(&format!("vars {}\n", p.vars.join(", ")));
    if let Some(rows) = &p.grading {
        for row in rows {
            let entries: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&format!("grading {}\n", entries.join(" ")));
        }
    }
    if p.rank != 1 {
        out.push_str(&format!("rank {}\n", p.rank));
    }
    if let Some(shifts) = &p.shifts {
        for s in shifts {
            let entries: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            out.push_str(&format!("shift {}\n", entries.join(",")));
        }
    }
    if let Some(named) = &p.ordering {
        out.push_str(&format!("ordering {}\n", ordering_name(named)));
    }
    let (_, vectors) = p.vectors();
    for v in &vectors {
        out.push_str(&format!("gen {}\n", render_vector(v, &p.vars, o)));
    }
    out
}

/// Renders a computed basis, one labelled line per element.
pub fn render_basis(basis: &[ModuleVector], vars: &[String], o: &OrderingSpec) -> String {
    let mut out = String::new();
    for (i, g) in basis.iter().enumerate() {
        out.push_str(&format!("g{} = {}\n", i + 1, render_vector(g, vars, o)));
    }
    out
}

/// Leading-term summary `t_i e_gamma` used in verbose listings.
pub fn render_leading(v: &ModuleVector, vars: &[String], o: &OrderingSpec) -> String {
    let l = leading_monomial(v, o).expect("non-zero basis element");
    if v.context().rank() == 1 {
        render_term(&l.term, vars)
    } else {
        format!("{}*e{}", render_term(&l.term, vars), l.component + 1)
    }
}
