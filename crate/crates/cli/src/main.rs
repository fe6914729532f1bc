//! One binary wiring every module: enumeration, bijections, verification
//! checks, and the correspondence table.
//!
//! Exit codes: 0 on success, 1 when a verification fails (with the
//! counterexample printed), 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use genocchi::dellac::{enumerate_dellac, switching_graph, DellacConfig};
use genocchi::dumont::{orbit_canonical, phi, varphi};
use genocchi::histories::{
    big_phi, big_psi, enumerate_dyck, weight_exponent, weight_mu, DellacHistory, DyckPath,
};
use genocchi::permutations::{enumerate_dumont, is_normalized_dumont, DumontClass, Perm};
use genocchi::qpolys::{cbar, cfrac_coeffs, gandhi, lambda_seq, lambda_weights, QPoly};
use genocchi::sequences::{genocchi, median_genocchi, normalized_h, SeidelTriangle};
use genocchi_cli::checks::{check_info, run_check, VerificationReport, CHECKS};
use genocchi_cli::output;
use genocchi_cli::table;

#[derive(Parser)]
#[command(
    name = "genocchi",
    version,
    about = "Genocchi-family combinatorics: sequences, q-polynomials, Dellac configurations, Dumont permutations, Dellac histories, and their bijections"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Seidel triangle
    Seidel {
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print an integer sequence, one value per line
    Sequence {
        #[command(subcommand)]
        which: SequenceCmd,
    },
    /// Print a polynomial from the q-side of the theory
    Qpoly {
        #[command(subcommand)]
        which: QpolyCmd,
    },
    /// Permutation enumeration
    Perm {
        #[command(subcommand)]
        which: PermCmd,
    },
    /// Dellac configuration enumeration and the switching graph
    Dellac {
        #[command(subcommand)]
        which: DellacCmd,
    },
    /// The bijection phi between configurations and normalized Dumont permutations
    Bij {
        #[command(subcommand)]
        which: BijCmd,
    },
    /// Dellac histories and the bijection Phi
    Hist {
        #[command(subcommand)]
        which: HistCmd,
    },
    /// Run registered verification checks
    Verify {
        /// Name of a single check to run (see --list)
        #[arg(long, conflicts_with = "all")]
        check: Option<String>,
        /// Run the whole suite at its default sizes
        #[arg(long)]
        all: bool,
        /// List the registered checks with their supported ranges
        #[arg(long)]
        list: bool,
        /// Size for a single check (defaults to the check's largest default size)
        #[arg(long)]
        n: Option<usize>,
        /// Cap the sizes used by --all
        #[arg(long)]
        max_n: Option<usize>,
        /// Worker threads for --all (0 = one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Seed recorded with the run; every registered check is
        /// deterministic, the flag exists for reproducibility of output
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the correspondence table C -> (phi(C), Phi(C))
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SequenceCmd {
    /// Genocchi numbers G_2, G_4, ... (n = 1..=upto)
    Genocchi {
        #[arg(long)]
        upto: usize,
    },
    /// Median Genocchi numbers H_1, H_3, ... (n = 0..=upto)
    Median {
        #[arg(long)]
        upto: usize,
    },
    /// Normalized median Genocchi numbers h_0, h_1, ... (n = 0..=upto)
    H {
        #[arg(long)]
        upto: usize,
    },
}

#[derive(Subcommand)]
enum QpolyCmd {
    /// The bivariate q-Gandhi polynomial C_n(x, q)
    Gandhi {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The polynomial cbar_n(q)
    Cbar {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The continued-fraction weight lambda_n
    Lambda {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coefficients t^0..t^n of the lambda-weighted continued fraction
    Cfrac {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum PermCmd {
    /// All Dumont permutations of order 2n (optionally a normalized class)
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PermClass::Dumont)]
        class: PermClass,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PermClass {
    Dumont,
    Ndumont,
    Ngenocchi,
}

#[derive(Subcommand)]
enum DellacCmd {
    /// All configurations of size n, one per line
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Append the inversion count in text output
        #[arg(long)]
        stats: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The switching graph in Graphviz form
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Render one configuration as an ASCII grid with its statistics
    Show {
        #[arg(long)]
        config: String,
    },
}

#[derive(Subcommand)]
enum BijCmd {
    /// Apply phi to a configuration given as its col vector
    Phi {
        #[arg(long)]
        config: String,
    },
    /// Apply varphi to a Dumont permutation
    Varphi {
        #[arg(long)]
        perm: String,
    },
    /// Round-trip and bijectivity check at size n
    CheckDumont {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum HistCmd {
    /// Apply Phi to a configuration given as its col vector
    Phi {
        #[arg(long)]
        config: String,
    },
    /// Apply Psi to a history given as a U/D path and xi pairs
    Psi {
        #[arg(long)]
        path: String,
        /// The xi pairs as a JSON array, e.g. `[[0,0],[1,0]]`
        #[arg(long)]
        xi: String,
    },
    /// Round-trip plus weight identity at size n
    Check {
        #[arg(long)]
        n: usize,
    },
    /// Path sums against cbar for sizes 0..=n
    Moments {
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    // die quietly when the consumer of a long enumeration hangs up
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn parse_config(s: &str) -> genocchi::Result<DellacConfig> {
    let col: Vec<usize> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| genocchi::Error::InvalidConfig(format!("bad column entry {:?}", p)))
        })
        .collect::<genocchi::Result<_>>()?;
    if !col.len().is_multiple_of(2) {
        return Err(genocchi::Error::InvalidConfig(
            "the col vector must have even length 2n".into(),
        ));
    }
    DellacConfig::new(col.len() / 2, col)
}

fn qpoly_out(p: &QPoly, format: Format) -> genocchi::Result<()> {
    match format {
        Format::Text => println!("{}", p),
        Format::Json => println!(
            "{}",
            json!({ "schema": output::SCHEMA, "coeffs": output::qpoly_json(p) })
        ),
        _ => {
            return Err(genocchi::Error::InvalidArgument(
                "this command supports text or json output".into(),
            ))
        }
    }
    Ok(())
}

fn dispatch(cmd: Cmd) -> genocchi::Result<ExitCode> {
    match cmd {
        Cmd::Seidel { rows, format } => {
            let t = SeidelTriangle::new(rows);
            match format {
                Format::Text => {
                    for row in t.rows() {
                        let entries: Vec<String> = row.iter().map(BigInt::to_string).collect();
                        println!("{}", entries.join(" "));
                    }
                }
                Format::Json => println!("{}", output::triangle_json(&t)),
                _ => {
                    return Err(genocchi::Error::InvalidArgument(
                        "seidel supports text or json output".into(),
                    ))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Sequence { which } => {
            match which {
                SequenceCmd::Genocchi { upto } => {
                    for n in 1..=upto {
                        println!("{}", genocchi(n));
                    }
                }
                SequenceCmd::Median { upto } => {
                    for n in 0..=upto {
                        println!("{}", median_genocchi(n));
                    }
                }
                SequenceCmd::H { upto } => {
                    for n in 0..=upto {
                        println!("{}", normalized_h(n)?);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Qpoly { which } => {
            match which {
                QpolyCmd::Gandhi { n, format } => {
                    let p = gandhi(n.max(1));
                    match format {
                        Format::Text => println!("{}", p),
                        Format::Json => println!(
                            "{}",
                            json!({ "schema": output::SCHEMA, "gandhi": output::xqpoly_json(&p) })
                        ),
                        _ => {
                            return Err(genocchi::Error::InvalidArgument(
                                "qpoly supports text or json output".into(),
                            ))
                        }
                    }
                }
                QpolyCmd::Cbar { n, format } => qpoly_out(&cbar(n.max(1))?, format)?,
                QpolyCmd::Lambda { n, format } => qpoly_out(&lambda_seq(n.max(1))?, format)?,
                QpolyCmd::Cfrac { n, format } => {
                    let coeffs = cfrac_coeffs(&lambda_weights(n)?, n + 1)?;
                    match format {
                        Format::Text => {
                            for (m, c) in coeffs.iter().enumerate() {
                                println!("t^{}: {}", m, c);
                            }
                        }
                        Format::Json => {
                            let arr: Vec<_> = coeffs.iter().map(output::qpoly_json).collect();
                            println!("{}", json!({ "schema": output::SCHEMA, "coeffs": arr }));
                        }
                        _ => {
                            return Err(genocchi::Error::InvalidArgument(
                                "qpoly supports text or json output".into(),
                            ))
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Perm { which } => {
            let PermCmd::Enumerate { n, class } = which;
            let class = match class {
                PermClass::Dumont => DumontClass::All,
                PermClass::Ndumont => DumontClass::NormalizedDumont,
                PermClass::Ngenocchi => DumontClass::NormalizedGenocchi,
            };
            for p in enumerate_dumont(n, class) {
                println!("{}", p);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dellac { which } => {
            match which {
                DellacCmd::Enumerate { n, stats, format } => match format {
                    Format::Text => {
                        for c in enumerate_dellac(n) {
                            if stats {
                                println!("{} inv={}", c, c.inv());
                            } else {
                                println!("{}", c);
                            }
                        }
                    }
                    Format::Json => {
                        for c in enumerate_dellac(n) {
                            println!("{}", output::config_json(&c));
                        }
                    }
                    _ => {
                        return Err(genocchi::Error::InvalidArgument(
                            "dellac enumerate supports text or json output".into(),
                        ))
                    }
                },
                DellacCmd::Graph { n, format } => {
                    if format != Format::Dot {
                        return Err(genocchi::Error::InvalidArgument(
                            "dellac graph only supports dot output".into(),
                        ));
                    }
                    print!("{}", switching_graph(n).to_dot());
                }
                DellacCmd::Show { config } => {
                    let c = parse_config(&config)?;
                    print!("{}", c.ascii_grid());
                    println!("n={} col={} inv={}", c.n(), c, c.inv());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bij { which } => match which {
            BijCmd::Phi { config } => {
                let c = parse_config(&config)?;
                println!("{}", phi(&c));
                Ok(ExitCode::SUCCESS)
            }
            BijCmd::Varphi { perm } => {
                let sigma: Perm = perm.parse()?;
                let c = varphi(&sigma)?;
                println!("{}", c);
                Ok(ExitCode::SUCCESS)
            }
            BijCmd::CheckDumont { n } => bij_check_dumont(n),
        },
        Cmd::Hist { which } => match which {
            HistCmd::Phi { config } => {
                let c = parse_config(&config)?;
                let h = big_phi(&c);
                println!("{} weight=q^{}", h, weight_exponent(&h)?);
                Ok(ExitCode::SUCCESS)
            }
            HistCmd::Psi { path, xi } => {
                let path = DyckPath::parse(&path)?;
                let xi: Vec<(usize, usize)> = serde_json::from_str(&xi).map_err(|e| {
                    genocchi::Error::InvalidArgument(format!("cannot parse xi pairs: {}", e))
                })?;
                let c = big_psi(&DellacHistory { path, xi })?;
                println!("{}", c);
                Ok(ExitCode::SUCCESS)
            }
            HistCmd::Check { n } => {
                let mut reports = Vec::new();
                for name in ["history-count", "Phi-roundtrip", "Phi-weight", "fiber-sum"] {
                    reports.push(run_check(name, n)?);
                }
                print_reports_text(&reports);
                Ok(exit_for(&reports))
            }
            HistCmd::Moments { n } => {
                let mut pass = true;
                for m in 0..=n {
                    let lambda = lambda_weights(m.max(1))?;
                    let mut acc = QPoly::zero();
                    for p in enumerate_dyck(m) {
                        acc = &acc + &weight_mu(&p, &lambda)?;
                    }
                    let expected = cbar(m + 1)?;
                    let ok = acc == expected;
                    pass &= ok;
                    println!(
                        "{} n={} path-sum = {}{}",
                        if ok { "pass" } else { "FAIL" },
                        m,
                        acc,
                        if ok {
                            String::new()
                        } else {
                            format!("  (cbar gives {})", expected)
                        }
                    );
                }
                Ok(if pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                })
            }
        },
        Cmd::Verify {
            check,
            all,
            list,
            n,
            max_n,
            jobs,
            seed,
            format,
        } => verify(check, all, list, n, max_n, jobs, seed, format),
        Cmd::Table { n, format } => {
            let rows = table::emit_table(n)?;
            match format {
                Format::Text => print!("{}", table::render_text(&rows)),
                Format::Csv => print!("{}", table::render_csv(&rows)),
                Format::Json => println!("{}", table::render_json(n, &rows)),
                Format::Dot => {
                    return Err(genocchi::Error::InvalidArgument(
                        "table supports text, json or csv output".into(),
                    ))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn bij_check_dumont(n: usize) -> genocchi::Result<ExitCode> {
    let mut reports = vec![
        run_check("phi-bijection", n)?,
        run_check("phi-statistic", n)?,
        run_check("tau-agreement", n)?,
    ];

    // round trips in both directions
    let start = std::time::Instant::now();
    let configs = enumerate_dellac(n);
    let mut counterexample = None;
    for c in &configs {
        if varphi(&phi(c))? != *c {
            counterexample = Some(format!("varphi(phi(C)) != C at C = {}", c));
            break;
        }
    }
    if counterexample.is_none() {
        for sigma in enumerate_dumont(n + 1, DumontClass::All) {
            let canon = orbit_canonical(&sigma)?;
            if !is_normalized_dumont(&canon)?
                || varphi(&canon)? != varphi(&sigma)?
                || (is_normalized_dumont(&sigma)? && canon != sigma)
            {
                counterexample = Some(format!("orbit representative wrong at {}", sigma));
                break;
            }
        }
    }
    reports.push(VerificationReport {
        check_name: "varphi-roundtrip".into(),
        n,
        pass: counterexample.is_none(),
        total_objects: BigInt::from(configs.len()),
        counterexample,
        elapsed_ms: start.elapsed().as_millis(),
    });

    print_reports_text(&reports);
    Ok(exit_for(&reports))
}

#[allow(clippy::too_many_arguments)]
fn verify(
    check: Option<String>,
    all: bool,
    list: bool,
    n: Option<usize>,
    max_n: Option<usize>,
    jobs: usize,
    seed: u64,
    format: Format,
) -> genocchi::Result<ExitCode> {
    if list {
        println!("check                min-n  max-n  default sizes      verifies");
        for c in CHECKS {
            let ns: Vec<String> = c.default_ns.iter().map(|v| v.to_string()).collect();
            println!(
                "{:<20} {:>5} {:>6}  {:<18} {}",
                c.name,
                c.min_n,
                c.max_n,
                ns.join(","),
                c.about
            );
        }
        return Ok(ExitCode::SUCCESS);
    }

    let reports: Vec<VerificationReport> = if all {
        let mut plan: Vec<(&'static str, usize)> = Vec::new();
        for c in CHECKS {
            let mut sizes: Vec<usize> = c
                .default_ns
                .iter()
                .map(|&v| {
                    let capped = max_n.map_or(v, |cap| v.min(cap));
                    capped.clamp(c.min_n, c.max_n)
                })
                .collect();
            sizes.dedup();
            for s in sizes {
                plan.push((c.name, s));
            }
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| genocchi::Error::InvalidArgument(e.to_string()))?;
        let results: Vec<genocchi::Result<VerificationReport>> = pool.install(|| {
            use rayon::prelude::*;
            plan.par_iter()
                .map(|&(name, size)| run_check(name, size))
                .collect()
        });
        results.into_iter().collect::<genocchi::Result<Vec<_>>>()?
    } else {
        let name = check.ok_or_else(|| {
            genocchi::Error::InvalidArgument("pass --check NAME, --all, or --list".into())
        })?;
        let info = check_info(&name).ok_or_else(|| {
            genocchi::Error::InvalidArgument(format!("unknown check {:?}; try --list", name))
        })?;
        let size = n.unwrap_or_else(|| *info.default_ns.last().unwrap());
        vec![run_check(&name, size)?]
    };

    match format {
        Format::Text => print_reports_text(&reports),
        Format::Json => {
            let arr: Vec<_> = reports.iter().map(report_json).collect();
            println!(
                "{}",
                json!({ "schema": output::SCHEMA, "seed": seed, "reports": arr })
            );
        }
        Format::Csv => {
            println!("check,n,status,total_objects,elapsed_ms,counterexample");
            for r in &reports {
                println!(
                    "{},{},{},{},{},\"{}\"",
                    r.check_name,
                    r.n,
                    r.status(),
                    r.total_objects,
                    r.elapsed_ms,
                    r.counterexample.as_deref().unwrap_or("")
                );
            }
        }
        Format::Dot => {
            return Err(genocchi::Error::InvalidArgument(
                "verify supports text, json or csv output".into(),
            ))
        }
    }
    Ok(exit_for(&reports))
}

fn report_json(r: &VerificationReport) -> serde_json::Value {
    json!({
        "schema": output::SCHEMA,
        "check": r.check_name,
        "n": r.n,
        "status": r.status(),
        "total_objects": r.total_objects.to_string(),
        "counterexample": r.counterexample,
        "elapsed_ms": r.elapsed_ms as u64,
    })
}

fn print_reports_text(reports: &[VerificationReport]) {
    for r in reports {
        println!(
            "{:<4} {:<20} n={:<3} objects={:<10} {} ms",
            r.status(),
            r.check_name,
            r.n,
            r.total_objects,
            r.elapsed_ms
        );
        if let Some(ce) = &r.counterexample {
            println!("     counterexample: {}", ce);
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!(
        "{} check runs, {} passed, {} failed",
        reports.len(),
        reports.len() - failed,
        failed
    );
}

fn exit_for(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
