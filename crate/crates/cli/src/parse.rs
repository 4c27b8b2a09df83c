//! Line-oriented problem-file parser with positioned diagnostics.

use std::collections::HashMap;
use std::fmt;

use mingb_core::Coefficient;

use crate::problem::{GeneratorExpr, PolyTerms, ProblemFile};

/// A parse failure with its location (1-based line and column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, col {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        message: message.into(),
    })
}

/// Parses a problem file.
///
/// Recognized lines (order free, `#` starts a comment):
/// `vars x, y, z` / `grading 1 1 1` (repeat per row) / `rank 2` /
/// `shift 0,1` (repeat per component) / `ordering deglex` /
/// `gen <poly>` or `gen [<poly>, ..., <poly>]`.
pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut vars: Option<(usize, Vec<String>)> = None;
    let mut grading_rows: Vec<(usize, Vec<i64>)> = Vec::new();
    let mut rank: Option<(usize, usize)> = None;
    let mut shifts: Vec<(usize, Vec<i64>)> = Vec::new();
    let mut ordering = None;
    let mut gen_lines: Vec<(usize, usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let indent = line.len() - trimmed.len();
        let (keyword, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (trimmed.trim_end(), ""),
        };
        let rest_col = indent + keyword.len() + 2;
        match keyword {
            "vars" => {
                if vars.is_some() {
                    return err(line_no, indent + 1, "duplicate vars line");
                }
                let names: Vec<String> = rest
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect();
                if names.is_empty() {
                    return err(line_no, rest_col, "expected at least one variable name");
                }
                for name in &names {
                    if !name.chars().next().is_some_and(char::is_alphabetic)
                        || !name.chars().all(|c| c.is_alphanumeric() || c == '_')
                    {
                        return err(line_no, rest_col, format!("bad variable name `{name}`"));
                    }
                }
                vars = Some((line_no, names));
            }
            "grading" => {
                let mut row = Vec::new();
                for tok in rest.split_whitespace() {
                    match tok.parse::<i64>() {
                        Ok(v) => row.push(v),
                        Err(_) => {
                            return err(
                                line_no,
                                rest_col,
                                format!("bad grading entry `{tok}`"),
                            )
                        }
                    }
                }
                if row.is_empty() {
                    return err(line_no, rest_col, "empty grading row");
                }
                grading_rows.push((line_no, row));
            }
            "rank" => {
                let r: usize = rest
                    .parse()
                    .map_err(|_| ParseError {
                        line: line_no,
                        col: rest_col,
                        message: format!("bad rank `{rest}`"),
                    })?;
                if r == 0 {
                    return err(line_no, rest_col, "rank must be at least 1");
                }
                rank = Some((line_no, r));
            }
            "shift" => {
                let mut entries = Vec::new();
                for tok in rest.split(',') {
                    let tok = tok.trim();
                    match tok.parse::<i64>() {
                        Ok(v) => entries.push(v),
                        Err(_) => {
                            return err(line_no, rest_col, format!("bad shift entry `{tok}`"))
                        }
                    }
                }
                shifts.push((line_no, entries));
            }
            "ordering" => match crate::problem::ordering_by_name(rest) {
                Some(o) => ordering = Some(o),
                None => return err(line_no, rest_col, format!("unknown ordering `{rest}`")),
            },
            "gen" => gen_lines.push((line_no, rest_col, rest.to_string())),
            other => {
                return err(line_no, indent + 1, format!("unknown keyword `{other}`"));
            }
        }
    }

    let (vars_line, vars) = match vars {
        Some(v) => v,
        None => return err(1, 1, "missing vars line"),
    };
    let n = vars.len();
    {
        let mut seen = HashMap::new();
        for v in &vars {
            if seen.insert(v.clone(), ()).is_some() {
                return err(vars_line, 1, format!("duplicate variable `{v}`"));
            }
        }
    }

    let grading = if grading_rows.is_empty() {
        None
    } else {
        for (line, row) in &grading_rows {
            if row.len() != n {
                return err(
                    *line,
                    1,
                    format!("grading row has {} entries, expected {}", row.len(), n),
                );
            }
        }
        Some(grading_rows.into_iter().map(|(_, r)| r).collect::<Vec<_>>())
    };
    let m = grading.as_ref().map_or(1, |g: &Vec<Vec<i64>>| g.len());

    let rank = rank.map_or(1, |(_, r)| r);
    let shifts = if shifts.is_empty() {
        None
    } else {
        if shifts.len() != rank {
            let (line, _) = shifts[0];
            return err(
                line,
                1,
                format!("{} shift lines for rank {}", shifts.len(), rank),
            );
        }
        for (line, s) in &shifts {
            if s.len() != m {
                return err(
                    *line,
                    1,
                    format!("shift has {} entries, expected {}", s.len(), m),
                );
            }
        }
        Some(shifts.into_iter().map(|(_, s)| s).collect::<Vec<_>>())
    };

    let index: HashMap<&str, usize> = vars
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let mut generators = Vec::new();
    for (line, col, body) in gen_lines {
        generators.push(parse_generator(&body, line, col, n, rank, &index)?);
    }

    let mut warnings = Vec::new();
    let problem = ProblemFile {
        vars,
        grading,
        rank,
        shifts,
        ordering,
        generators,
        warnings: vec![],
    };
    if !problem.degree_matrix().is_positive() {
        warnings.push("grading is not positive".to_string());
    }
    Ok(ProblemFile {
        warnings,
        ..problem
    })
}

fn parse_generator(
    body: &str,
    line: usize,
    col: usize,
    n: usize,
    rank: usize,
    index: &HashMap<&str, usize>,
) -> Result<GeneratorExpr, ParseError> {
    let trimmed = body.trim();
    if trimmed.starts_with('[') {
        if !trimmed.ends_with(']') {
            return err(line, col, "unterminated `[`");
        }
        let inner = &trimmed[1..trimmed.len() - 1];
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != rank {
            return err(
                line,
                col,
                format!("vector has {} components, expected {}", parts.len(), rank),
            );
        }
        let mut components = Vec::new();
        for part in parts {
            components.push(parse_poly(part, line, col, n, index)?);
        }
        Ok(GeneratorExpr { components })
    } else {
        if rank != 1 {
            return err(line, col, "rank > 1 requires bracketed vectors");
        }
        Ok(GeneratorExpr {
            components: vec![parse_poly(trimmed, line, col, n, index)?],
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Number(i64),
    Slash,
    Ident(String),
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((col, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((col, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((col, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((col, Token::Caret));
                i += 1;
            }
            '/' => {
                out.push((col, Token::Slash));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let value = text.parse::<i64>().map_err(|_| ParseError {
                    line,
                    col,
                    message: format!("number `{text}` out of range"),
                })?;
                out.push((col, Token::Number(value)));
            }
            c if c.is_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((col, Token::Ident(chars[start..i].iter().collect())));
            }
            other => {
                return err(line, col, format!("unexpected character `{other}`"));
            }
        }
    }
    Ok(out)
}

/// Polynomial grammar: `poly := [sign] term (("+"|"-") term)*`,
/// `term := factor ("*" factor)*`, `factor := rational | var ["^" nat]`.
fn parse_poly(
    text: &str,
    line: usize,
    col0: usize,
    n: usize,
    index: &HashMap<&str, usize>,
) -> Result<PolyTerms, ParseError> {
    let tokens = tokenize(text, line, col0)?;
    let mut pos = 0;
    let mut terms: PolyTerms = Vec::new();
    if tokens.is_empty() {
        return err(line, col0, "empty polynomial");
    }

    let mut sign = Coefficient::one();
    // optional leading sign
    if let Some((_, tok)) = tokens.first() {
        match tok {
            Token::Minus => {
                sign = -Coefficient::one();
                pos = 1;
            }
            Token::Plus => {
                pos = 1;
            }
            _ => {}
        }
    }

    loop {
        let (coeff, exps, next) = parse_term(&tokens, pos, line, col0, n, index)?;
        terms.push((&coeff * &sign, exps));
        pos = next;
        match tokens.get(pos) {
            None => break,
            Some((_, Token::Plus)) => {
                sign = Coefficient::one();
                pos += 1;
            }
            Some((_, Token::Minus)) => {
                sign = -Coefficient::one();
                pos += 1;
            }
            Some((col, tok)) => {
                return err(line, *col, format!("expected `+` or `-`, found {tok:?}"));
            }
        }
    }
    Ok(terms)
}

fn parse_term(
    tokens: &[(usize, Token)],
    mut pos: usize,
    line: usize,
    col0: usize,
    n: usize,
    index: &HashMap<&str, usize>,
) -> Result<(Coefficient, Vec<u32>, usize), ParseError> {
    let mut coeff = Coefficient::one();
    let mut exps = vec![0u32; n];
    let mut factors = 0;
    loop {
        let Some((col, tok)) = tokens.get(pos) else {
            if factors == 0 {
                return err(line, col0, "expected a term");
            }
            return Ok((coeff, exps, pos));
        };
        match tok {
            Token::Number(v) => {
                pos += 1;
                // optional rational a/b
                if let Some((_, Token::Slash)) = tokens.get(pos) {
                    match tokens.get(pos + 1) {
                        Some((_, Token::Number(d))) if *d != 0 => {
                            coeff = &coeff * &Coefficient::new(*v, *d);
                            pos += 2;
                        }
                        Some((c, _)) => {
                            return err(line, *c, "expected a non-zero denominator");
                        }
                        None => return err(line, *col, "expected a denominator"),
                    }
                } else {
                    coeff = &coeff * &Coefficient::from_int(*v);
                }
            }
            Token::Ident(name) => {
                let Some(&var) = index.get(name.as_str()) else {
                    return err(line, *col, format!("unknown variable `{name}`"));
                };
                pos += 1;
                let mut exp: u32 = 1;
                if let Some((_, Token::Caret)) = tokens.get(pos) {
                    match tokens.get(pos + 1) {
                        Some((_, Token::Number(e))) if *e >= 0 && *e <= u32::MAX as i64 => {
                            exp = *e as u32;
                            pos += 2;
                        }
                        Some((c, _)) => {
                            return err(line, *c, "expected a non-negative integer exponent");
                        }
                        None => return err(line, *col, "expected an exponent after `^`"),
                    }
                }
                exps[var] = exps[var]
                    .checked_add(exp)
                    .ok_or_else(|| ParseError {
                        line,
                        col: *col,
                        message: "exponent too large".to_string(),
                    })?;
            }
            other => {
                if factors == 0 {
                    return err(line, *col, format!("expected a factor, found {other:?}"));
                }
                return Ok((coeff, exps, pos));
            }
        }
        factors += 1;
        // factors are joined by `*`; anything else ends the term
        match tokens.get(pos) {
            Some((_, Token::Star)) => pos += 1,
            _ => return Ok((coeff, exps, pos)),
        }
    }
}
