//! Corpus generation: the cyclic-n systems, the homogenization helper, and
//! seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mingb_core::Coefficient;

use crate::problem::{GeneratorExpr, PolyTerms, ProblemFile};

/// The cyclic-n system: for k < n the sum of all products of k cyclically
/// consecutive variables, plus `x_1*...*x_n - 1`.
pub fn gen_cyclic(n: usize) -> Result<ProblemFile, String> {
    if n < 2 {
        return Err(format!("cyclic-{n} is not defined, need n >= 2"));
    }
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut generators = Vec::new();
    for k in 1..n {
        let mut terms: PolyTerms = Vec::new();
        for start in 0..n {
            let mut exps = vec![0u32; n];
            for offset in 0..k {
                exps[(start + offset) % n] += 1;
            }
            terms.push((Coefficient::one(), exps));
        }
        generators.push(GeneratorExpr {
            components: vec![terms],
        });
    }
    let product = vec![
        (Coefficient::one(), vec![1u32; n]),
        (-Coefficient::one(), vec![0u32; n]),
    ];
    generators.push(GeneratorExpr {
        components: vec![product],
    });
    Ok(ProblemFile {
        vars,
        grading: None,
        rank: 1,
        shifts: None,
        ordering: None,
        generators,
        warnings: vec![],
    })
}

/// Homogenizes a standard-graded problem with a new smallest indeterminate:
/// every term of a generator is padded up to the generator's top degree.
pub fn homogenize(p: &ProblemFile) -> Result<ProblemFile, String> {
    if !p.is_standard_graded() {
        return Err("homogenization supports only the standard grading".to_string());
    }
    let mut name = "h".to_string();
    let mut counter = 0;
    while p.vars.contains(&name) {
        name = format!("h{counter}");
        counter += 1;
    }
    let mut vars = p.vars.clone();
    vars.push(name);

    let generators = p
        .generators
        .iter()
        .map(|g| {
            let top = g
                .components
                .iter()
                .flatten()
                .map(|(_, e)| e.iter().map(|&x| x as u64).sum::<u64>())
                .max()
                .unwrap_or(0);
            let components = g
                .components
                .iter()
                .map(|poly| {
                    poly.iter()
                        .map(|(c, exps)| {
                            let degree: u64 = exps.iter().map(|&x| x as u64).sum();
                            let mut padded = exps.clone();
                            padded.push((top - degree) as u32);
                            (c.clone(), padded)
                        })
                        .collect()
                })
                .collect();
            GeneratorExpr { components }
        })
        .collect();

    Ok(ProblemFile {
        vars,
        grading: None,
        rank: 1,
        shifts: None,
        ordering: p.ordering,
        generators,
        warnings: vec![],
    })
}

/// Parameters for seeded random ideals.
#[derive(Debug, Clone, Copy)]
pub struct RandomSpec {
    pub nvars: usize,
    pub gens: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    pub max_coeff: i64,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec {
            nvars: 3,
            gens: 3,
            max_degree: 4,
            max_terms: 3,
            max_coeff: 10,
        }
    }
}

/// A random homogeneous ideal over the standard grading; every generator
/// sits in a single random degree, so the engine accepts it directly.
pub fn gen_random(spec: &RandomSpec, seed: u64) -> ProblemFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = spec.nvars.max(1);
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut generators = Vec::new();
    for _ in 0..spec.gens {
        let degree = rng.gen_range(1..=spec.max_degree.max(1));
        let terms = rng.gen_range(1..=spec.max_terms.max(1));
        let mut poly: PolyTerms = Vec::new();
        for _ in 0..terms {
            let mut exps = vec![0u32; n];
            for _ in 0..degree {
                exps[rng.gen_range(0..n)] += 1;
            }
            let mut num = rng.gen_range(-spec.max_coeff..=spec.max_coeff);
            if num == 0 {
                num = 1;
            }
            let den = rng.gen_range(1..=spec.max_coeff.max(1));
            poly.push((Coefficient::new(num, den), exps));
        }
        generators.push(GeneratorExpr {
            components: vec![poly],
        });
    }
    let mut p = ProblemFile {
        vars,
        grading: None,
        rank: 1,
        shifts: None,
        ordering: None,
        generators,
        warnings: vec![],
    };
    // terms may cancel; drop generators that collapse to zero
    let (_, vectors) = p.vectors();
    let keep: Vec<bool> = vectors.iter().map(|v| !v.is_zero()).collect();
    p.generators = p
        .generators
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    p
}
