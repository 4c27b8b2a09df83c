use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

use mingb_cli::gen::{gen_cyclic, gen_random, homogenize, RandomSpec};
use mingb_cli::parse::parse_problem;
use mingb_cli::problem::ordering_by_name;
use mingb_cli::render::render_problem;
use mingb_cli::run::{cmd_compare, cmd_gb, cmd_minpairs, cmd_stats, CliError, RunOptions};
use mingb_core::{OrderingSpec, Strategy};

const USAGE: &str = "\
usage: mingb <command> [options] [file]

commands:
  gb        compute a Groebner basis and print it
  stats     print one statistics row for a run
  minpairs  run the pair pipeline on the leading terms only
  compare   run the gm and ckr strategies and print both rows
  gen       generate a problem file (see below)

options:
  --ordering NAME    lex | deglex | degrevlex, with optional :top or :pot
                     (default: degrevlex, or the ordering named in the file)
  --strategy NAME    naive | gm | ckr  (default: ckr)
  --truncate D       truncation degree, comma-joined integers for multigradings
  --json             machine-readable output
  --homogenize       homogenize the input with a new smallest indeterminate
  --verbose          include the run and elimination logs
  --time-limit SECS  abort the run after this many seconds (exit code 4)

generation:
  mingb gen cyclic N [--homogenize]
  mingb gen random [--vars N] [--gens K] [--max-degree D] [--seed S]

The input file is read from stdin when absent or `-`.
Exit codes: 0 ok, 1 usage, 2 parse error, 3 domain error, 4 resource cap.
";

fn fail(e: CliError) -> ExitCode {
    eprintln!("mingb: {}", e.message);
    ExitCode::from(e.code as u8)
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match dispatch(&args) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(e),
    }
}

fn dispatch(args: &[String]) -> Result<String, CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::usage(USAGE));
    };
    match command.as_str() {
        "gb" | "stats" | "minpairs" | "compare" => run_command(command, &args[1..]),
        "gen" => gen_command(&args[1..]),
        "help" | "--help" | "-h" => Ok(USAGE.to_string()),
        other => Err(CliError::usage(format!(
            "unknown command `{other}`\n\n{USAGE}"
        ))),
    }
}

fn parse_options(args: &[String]) -> Result<(RunOptions, Option<String>), CliError> {
    let mut opts = RunOptions::default();
    let mut file: Option<String> = None;
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--ordering" => {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::usage("--ordering needs a value"))?;
                opts.ordering = Some(parse_ordering(value)?);
            }
            "--strategy" => {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::usage("--strategy needs a value"))?;
                opts.strategy = match value.as_str() {
                    "naive" => Strategy::Naive,
                    "gm" => Strategy::Gm,
                    "ckr" => Strategy::Ckr,
                    other => {
                        return Err(CliError::usage(format!("unknown strategy `{other}`")))
                    }
                };
            }
            "--truncate" => {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::usage("--truncate needs a value"))?;
                let entries: Result<Vec<i64>, _> =
                    value.split(',').map(|s| s.trim().parse()).collect();
                opts.truncate = Some(entries.map_err(|_| {
                    CliError::usage(format!("bad truncation degree `{value}`"))
                })?);
            }
            "--json" => opts.json = true,
            "--homogenize" => opts.homogenize = true,
            "--verbose" => opts.verbose = true,
            "--time-limit" => {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::usage("--time-limit needs a value"))?;
                let secs: f64 = value
                    .parse()
                    .map_err(|_| CliError::usage(format!("bad time limit `{value}`")))?;
                opts.time_limit = Some(Duration::from_secs_f64(secs));
            }
            other if other.starts_with("--") => {
                return Err(CliError::usage(format!("unknown option `{other}`")));
            }
            path => {
                if file.is_some() {
                    return Err(CliError::usage("more than one input file"));
                }
                file = Some(path.to_string());
            }
        }
    }
    if let Some(f) = &file {
        opts.name = std::path::Path::new(f)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| f.clone());
    }
    Ok((opts, file))
}

fn parse_ordering(name: &str) -> Result<OrderingSpec, CliError> {
    ordering_by_name(name)
        .ok_or_else(|| CliError::usage(format!("unknown ordering `{name}`")))
}

fn read_input(file: &Option<String>) -> Result<String, CliError> {
    match file.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::parse(format!("reading stdin: {e}")))?;
            Ok(buf)
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::parse(format!("reading {path}: {e}"))),
    }
}

fn run_command(command: &str, args: &[String]) -> Result<String, CliError> {
    let (opts, file) = parse_options(args)?;
    let text = read_input(&file)?;
    let problem = parse_problem(&text).map_err(|e| CliError::parse(e.to_string()))?;
    match command {
        "gb" => cmd_gb(&problem, &opts),
        "stats" => cmd_stats(&problem, &opts),
        "minpairs" => cmd_minpairs(&problem, &opts),
        "compare" => cmd_compare(&problem, &opts),
        _ => unreachable!("dispatched commands only"),
    }
}

fn gen_command(args: &[String]) -> Result<String, CliError> {
    let Some(kind) = args.first() else {
        return Err(CliError::usage("gen needs a kind: cyclic | random"));
    };
    match kind.as_str() {
        "cyclic" => {
            let Some(n_text) = args.get(1) else {
                return Err(CliError::usage("gen cyclic needs a size"));
            };
            let n: usize = n_text
                .parse()
                .map_err(|_| CliError::usage(format!("bad size `{n_text}`")))?;
            let mut problem = gen_cyclic(n).map_err(CliError::usage)?;
            let mut homog = false;
            for arg in &args[2..] {
                match arg.as_str() {
                    "--homogenize" => homog = true,
                    other => {
                        return Err(CliError::usage(format!("unknown option `{other}`")))
                    }
                }
            }
            if homog {
                problem = homogenize(&problem).map_err(CliError::domain)?;
            }
            Ok(render_problem(&problem, &OrderingSpec::degrevlex()))
        }
        "random" => {
            let mut spec = RandomSpec::default();
            let mut seed = 0u64;
            let mut it = args[1..].iter();
            while let Some(arg) = it.next() {
                let mut take = |name: &str| -> Result<String, CliError> {
                    it.next()
                        .cloned()
                        .ok_or_else(|| CliError::usage(format!("{name} needs a value")))
                };
                match arg.as_str() {
                    "--vars" => {
                        spec.nvars = take("--vars")?
                            .parse()
                            .map_err(|_| CliError::usage("bad --vars"))?
                    }
                    "--gens" => {
                        spec.gens = take("--gens")?
                            .parse()
                            .map_err(|_| CliError::usage("bad --gens"))?
                    }
                    "--max-degree" => {
                        spec.max_degree = take("--max-degree")?
                            .parse()
                            .map_err(|_| CliError::usage("bad --max-degree"))?
                    }
                    "--seed" => {
                        seed = take("--seed")?
                            .parse()
                            .map_err(|_| CliError::usage("bad --seed"))?
                    }
                    other => {
                        return Err(CliError::usage(format!("unknown option `{other}`")))
                    }
                }
            }
            let problem = gen_random(&spec, seed);
            Ok(render_problem(&problem, &OrderingSpec::degrevlex()))
        }
        other => Err(CliError::usage(format!("unknown gen kind `{other}`"))),
    }
}
