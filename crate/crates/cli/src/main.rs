//! `hlrc` — construct punctured simplex codes, derive their hierarchical
//! locality, evaluate bounds, and simulate repair.
//!
//! Exit codes: 0 on success, 1 when an internal cross-check fails
//! (`analyze`), 2 on usage errors (bad flags, invalid parameters,
//! unparseable locality strings).
//!
//! The only environment configuration is `HLRC_OUT_DIR`: when set, relative
//! `--out` paths are resolved under it. Everything else is pure in the
//! flags, and all randomness is seeded, so outputs are reproducible.

mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hlrc_core::bounds::{
    cm_hlrc_bound, cmg_bound, griesmer, k_opt, optimality_report, HierLocalityParams,
};
use hlrc_core::construct::{punctured_simplex, PuncturedSimplexSpec};
use hlrc_core::locality::{
    classify_hyperplanes, locality_profile, restriction_type, restriction_type_range, verify_hlrc,
    weight_enumerator_formula,
};
use hlrc_core::repair::run_experiment;
use report::{histogram, Report};

#[derive(Parser)]
#[command(
    name = "hlrc",
    version,
    about = "Punctured simplex codes: construction, locality, bounds, repair simulation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Write the generator matrix of S_q(m) - S_q(s) and report [n,k,d]
    Construct {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u32,
        /// Write the matrix to this file (relative paths resolve under
        /// HLRC_OUT_DIR when set) instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full locality report with internal cross-checks
    Analyze {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u32,
    },
    /// Parameter grid over m and s with locality edges
    Table {
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 6)]
        m_max: u32,
        #[arg(long, default_value_t = 4)]
        s_max: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
    },
    /// Evaluate dimension and distance bounds for given (n, d) and locality
    Bounds {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Hierarchy levels "r1,d1;r2,d2;..." outermost first, r counting
        /// dimensions; empty for an unconstrained code
        #[arg(long, default_value = "")]
        locality: String,
    },
    /// Seeded repair experiment over escalating failure counts
    Simulate {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u32,
        /// Largest number of simultaneous node failures to inject
        #[arg(long)]
        failures: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Failure modes mapped to exit codes: usage errors exit 2, failed
/// cross-checks exit 1.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<hlrc_core::Error> for Failure {
    fn from(e: hlrc_core::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Construct { q, m, s, out } => cmd_construct(q, m, s, out),
        Command::Analyze { q, m, s } => cmd_analyze(q, m, s),
        Command::Table {
            q,
            m_max,
            s_max,
            format,
        } => cmd_table(q, m_max, s_max, format),
        Command::Bounds { q, n, d, locality } => cmd_bounds(q, n, d, &locality),
        Command::Simulate {
            q,
            m,
            s,
            failures,
            trials,
            seed,
        } => cmd_simulate(q, m, s, failures, trials, seed),
    }
}

fn params_string(n: u128, k: u32, d: u128) -> String {
    format!("[{n},{k},{d}]")
}

fn spec_params(spec: &PuncturedSimplexSpec) -> String {
    let (n, k, d) = spec.expected_params();
    params_string(n, k, d)
}

fn cmd_construct(q: u32, m: u32, s: u32, out: Option<PathBuf>) -> Result<(), Failure> {
    let ps = punctured_simplex(q, m, s)?;
    let params = spec_params(&ps.spec());
    let text = ps.code().to_matrix_text();
    match out {
        Some(path) => {
            let path = resolve_out(path);
            std::fs::write(&path, text).map_err(|e| {
                Failure::Usage(format!("cannot write {}: {e}", path.display()))
            })?;
            println!("{params}");
        }
        None => {
            // Keep stdout machine-readable (the matrix alone); the summary
            // goes to stderr.
            print!("{text}");
            eprintln!("{params}");
        }
    }
    Ok(())
}

fn resolve_out(path: PathBuf) -> PathBuf {
    match std::env::var_os("HLRC_OUT_DIR") {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path,
    }
}

fn cmd_analyze(q: u32, m: u32, s: u32) -> Result<(), Failure> {
    let ps = punctured_simplex(q, m, s)?;
    let spec = ps.spec();
    let profile = locality_profile(q, m, s)?;
    let classes = classify_hyperplanes(q, m, s)?;

    let mut checks: Vec<(&str, bool, String)> = Vec::new();

    let (n, k, d) = spec.expected_params();
    let actual = ps.code().params()?;
    let params_ok = actual == (n as usize, k as usize, d as usize);
    checks.push((
        "parameters-match-closed-form",
        params_ok,
        format!("constructed {:?}, closed form ({n}, {k}, {d})", actual),
    ));

    let formula = weight_enumerator_formula(q, m, s)?;
    let brute = ps.code().weight_enumerator()?;
    checks.push((
        "enumerator-formula-matches-brute-force",
        formula == brute,
        format!("formula {formula}, brute force {brute}"),
    ));

    let total_hyperplanes: usize = classes.iter().map(|c| c.count()).sum();
    checks.push((
        "hyperplanes-all-classified",
        total_hyperplanes > 0,
        format!("{total_hyperplanes} hyperplanes classified"),
    ));

    let hlrc = profile.hlrc_params();
    let verification = verify_hlrc(ps.code(), profile.chains(), &hlrc)?;
    checks.push((
        "hierarchy-verified",
        verification.ok,
        verification
            .witness
            .clone()
            .unwrap_or_else(|| "all chains nested and within parameters".into()),
    ));

    let bounds = optimality_report(q, m, s)?;
    checks.push((
        "bounds-optimal",
        bounds.all_optimal,
        format!("{} bound records", bounds.records.len()),
    ));

    let mut r = Report::new();
    r.section("code", |r| {
        r.kv("spec", spec);
        r.kv("q", q);
        r.kv("m", m);
        r.kv("s", s);
        r.kv("reed_muller", spec.is_reed_muller());
    });
    r.section("params", |r| {
        r.kv("n", n);
        r.kv("k", k);
        r.kv("d", d);
    });
    r.section("weight_enumerator", |r| {
        r.kv("formula", &formula);
        r.kv("brute_force", &brute);
    });
    r.section("restriction_types", |r| {
        for t in profile.types() {
            r.entry(|r| {
                r.kv("type", t);
                r.kv("kappa", t.kappa());
                r.kv("inner", t.inner());
            });
        }
    });
    r.section("localities", |r| {
        for loc in profile.localities() {
            r.entry(|r| {
                r.kv("type", loc.rtype);
                r.kv("r_symbols", loc.r_size);
                r.kv("r_dimensions", loc.r_dim);
                r.kv("delta", loc.delta);
            });
        }
    });
    r.section("hyperplanes", |r| {
        r.kv("total", total_hyperplanes);
        r.section("classes", |r| {
            for class in &classes {
                r.entry(|r| {
                    r.kv("type", class.rtype);
                    r.kv("count", class.count());
                });
            }
        });
    });
    r.section("hierarchy", |r| {
        r.kv("levels", hlrc.len());
        r.section("chain", |r| {
            for (level, &(rr, delta)) in profile.chain_levels().iter().zip(&hlrc) {
                r.entry(|r| {
                    r.kv("kappa", level);
                    r.kv("r", rr);
                    r.kv("delta", delta);
                });
            }
        });
        r.kv("verified", verification.ok);
    });
    r.section("bounds", |r| {
        for record in &bounds.records {
            r.entry(|r| {
                r.kv("name", &record.name);
                r.kv("inputs", &record.inputs);
                r.kv("value", record.value);
                if let Some(lambda) = record.binding_lambda {
                    r.kv("binding_lambda", lambda);
                }
                r.kv("verdict", &record.verdict);
                if let Some(optimal) = record.optimal {
                    r.kv("optimal", optimal);
                }
            });
        }
        r.kv("all_optimal", bounds.all_optimal);
    });
    r.section("checks", |r| {
        for (name, ok, detail) in &checks {
            r.entry(|r| {
                r.kv("name", name);
                r.kv("ok", ok);
                r.kv("detail", detail);
            });
        }
    });
    print!("{}", r.render());

    if let Some((name, _, detail)) = checks.iter().find(|(_, ok, _)| !ok) {
        return Err(Failure::Check(format!("{name}: {detail}")));
    }
    Ok(())
}

/// One table cell: closed-form parameters plus dimension-(m-1) locality
/// targets with distance at least 2.
fn table_cell(q: u32, m: u32, s: u32) -> Result<(String, bool, Vec<String>), Failure> {
    let spec = PuncturedSimplexSpec::new(q, m, s)?;
    let mut targets = Vec::new();
    if m >= 3 {
        for i in restriction_type_range(m, s, m - 1)? {
            let t = restriction_type(q, m - 1, i)?;
            if t.distance() >= 2 {
                let (tn, tk, td) = t.params();
                targets.push(params_string(tn as u128, tk, td as u128));
            }
        }
    }
    Ok((spec_params(&spec), spec.is_reed_muller(), targets))
}

fn cmd_table(q: u32, m_max: u32, s_max: u32, format: TableFormat) -> Result<(), Failure> {
    if m_max < 2 {
        return Err(Failure::Usage(format!(
            "the table needs m_max >= 2, got {m_max}"
        )));
    }
    hlrc_core::FiniteField::new(q)?;
    match format {
        TableFormat::Markdown => {
            let mut header = String::from("| m \\ s |");
            let mut rule = String::from("| --- |");
            for s in 0..=s_max {
                header.push_str(&format!(" {s} |"));
                rule.push_str(" --- |");
            }
            println!("{header}");
            println!("{rule}");
            let mut edges = Vec::new();
            for m in 2..=m_max {
                let mut row = format!("| {m} |");
                for s in 0..=s_max {
                    if s >= m {
                        row.push_str("  |");
                        continue;
                    }
                    let (params, rm, targets) = table_cell(q, m, s)?;
                    if rm {
                        row.push_str(&format!(" {params} RM(1,{}) |", m - 1));
                    } else {
                        row.push_str(&format!(" {params} |"));
                    }
                    if !targets.is_empty() {
                        edges.push(format!("{params} -> {}", targets.join(", ")));
                    }
                }
                println!("{row}");
            }
            if !edges.is_empty() {
                println!();
                println!("locality edges:");
                for edge in edges {
                    println!("  {edge}");
                }
            }
        }
        TableFormat::Csv => {
            println!("m,s,n,k,d,reed_muller,locality");
            for m in 2..=m_max {
                for s in 0..=s_max.min(m - 1) {
                    let (_, rm, targets) = table_cell(q, m, s)?;
                    let (n, k, d) = PuncturedSimplexSpec::new(q, m, s)?.expected_params();
                    let locality = if targets.is_empty() {
                        String::new()
                    } else {
                        format!("\"{}\"", targets.join(" "))
                    };
                    println!("{m},{s},{n},{k},{d},{rm},{locality}");
                }
            }
        }
    }
    Ok(())
}

/// Parses "r1,d1;r2,d2;..." into hierarchy levels, reporting the failing
/// level and token on error. An empty or blank string is an empty hierarchy.
fn parse_locality(text: &str) -> Result<Vec<(u32, usize)>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut levels = Vec::new();
    for (idx, segment) in text.split(';').enumerate() {
        let level = idx + 1;
        let (r_text, d_text) = segment.split_once(',').ok_or_else(|| {
            Failure::Usage(format!(
                "locality level {level} ({segment:?}): expected \"r,delta\""
            ))
        })?;
        let r: u32 = r_text.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "locality level {level}: invalid r {:?}",
                r_text.trim()
            ))
        })?;
        let d: usize = d_text.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "locality level {level}: invalid delta {:?}",
                d_text.trim()
            ))
        })?;
        levels.push((r, d));
    }
    Ok(levels)
}

fn cmd_bounds(q: u32, n: usize, d: usize, locality: &str) -> Result<(), Failure> {
    let levels = parse_locality(locality)?;
    let mut r = Report::new();
    r.section("inputs", |r| {
        r.kv("q", q);
        r.kv("n", n);
        r.kv("d", d);
        r.kv(
            "locality",
            if locality.trim().is_empty() {
                "(none)"
            } else {
                locality
            },
        );
    });

    let kopt = k_opt(q, n, d)?;
    r.section("unconstrained", |r| {
        r.kv("k_opt", kopt);
        if kopt >= 1 {
            r.kv(
                "griesmer_length_at_k_opt",
                griesmer(q, kopt, d).expect("validated arguments"),
            );
        }
    });

    if !levels.is_empty() {
        let params = HierLocalityParams::new(&levels)?;
        let (value, lambda) = cm_hlrc_bound(q, n, d, &params)?;
        let singleton = if (1..=n).contains(&value) {
            Some(hlrc_core::bounds::singleton_hlrc(n, value, &params)?)
        } else {
            None
        };
        // Levels with delta = 1 tolerate no erasures and have no
        // single-level dimension bound.
        let mut per_level = Vec::new();
        for &(rr, delta) in params.levels() {
            let bound = if delta >= 2 {
                Some(cmg_bound(q, n, d, rr as usize, delta)?)
            } else {
                None
            };
            per_level.push((rr, delta, bound));
        }
        r.section("hierarchical", |r| {
            r.kv("levels", &params);
            r.kv("k_bound", value);
            r.kv("binding_lambda", lambda);
            if let Some(singleton) = singleton {
                r.kv("singleton_d_bound_at_k_bound", singleton);
            }
        });
        r.section("per_level", |r| {
            for (rr, delta, bound) in &per_level {
                r.entry(|r| {
                    r.kv("kappa", rr);
                    r.kv("delta", delta);
                    match bound {
                        Some((v, l)) => {
                            r.kv("k_bound", v);
                            r.kv("binding_lambda", l);
                        }
                        None => r.kv("k_bound", "(not applicable for delta < 2)"),
                    }
                });
            }
        });
    }
    print!("{}", r.render());
    Ok(())
}

fn cmd_simulate(
    q: u32,
    m: u32,
    s: u32,
    failures: usize,
    trials: usize,
    seed: u64,
) -> Result<(), Failure> {
    let experiment = run_experiment(q, m, s, trials, failures, seed)?;
    let mut r = Report::new();
    r.section("experiment", |r| {
        r.kv("code", experiment.spec);
        r.kv("nodes", {
            let (n, _, _) = experiment.spec.expected_params();
            n
        });
        r.kv("trials", experiment.trials);
        r.kv("max_failures", failures);
        r.kv("seed", experiment.seed);
    });
    r.section("results", |r| {
        for stats in &experiment.per_failure {
            r.entry(|r| {
                r.kv("failures", stats.failures);
                r.kv("trials", stats.trials);
                r.kv("successes", stats.successes);
                r.kv("contacted_histogram", histogram(&stats.contacted));
                let levels: BTreeMap<String, u64> = stats
                    .levels
                    .iter()
                    .map(|(l, c)| (l.to_string(), *c))
                    .collect();
                r.kv("level_histogram", histogram(&levels));
                r.kv("max_total_contacted", stats.max_total_contacted);
            });
        }
    });
    r.kv("all_succeeded", experiment.all_succeeded());
    print!("{}", r.render());
    Ok(())
}
