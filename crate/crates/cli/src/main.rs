use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qgrass::expr::eval_expr;
use qgrass::grassmann::Grassmannian;
use qgrass::posets::{hasse_diagram, PosetOrder};
use qgrass::qmatrix::Ambient;
use qgrass::straighten::{expand_in_standard_basis, GrassElement};
use qgrass::suites::{run_suite, Choice, OrderChoice, Suite, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "qgrass",
    version,
    about = "Quantum matrices and quantum grassmannians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression in x-generators and minors.
    Eval {
        #[arg(long, value_parser = parse_mn)]
        mn: Option<(usize, usize)>,
        expr: String,
    },
    /// Expand a product of maximal minors in standard monomials.
    Straighten {
        #[arg(long, default_value = "std")]
        order: String,
        #[arg(long, value_parser = parse_mn)]
        mn: (usize, usize),
        #[arg(long)]
        product: String,
        #[arg(long)]
        json: bool,
    },
    /// Poset utilities.
    Poset {
        #[command(subcommand)]
        action: PosetAction,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_parser = parse_mn)]
        mn: (usize, usize),
        /// std, cyclic:S or cyclic:all
        #[arg(long, default_value = "cyclic:all", value_parser = parse_order)]
        order: OrderChoice,
        /// consecutive minor start, or all
        #[arg(long, default_value = "all", value_parser = parse_choice)]
        a: Choice,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long)]
        t: Option<usize>,
        /// write the JSON report here ("-" for stdout)
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PosetAction {
    /// Hasse diagram as a JSON edge list.
    Dump {
        #[arg(long, default_value = "std")]
        order: String,
        #[arg(long, value_parser = parse_mn)]
        mn: (usize, usize),
    },
}

fn parse_mn(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s.split_once(',').ok_or("expected m,n")?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("'{x}': {e}"));
    Ok((p(m)?, p(n)?))
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: qgrass::Error| e.to_string())
}

fn parse_order(s: &str) -> Result<OrderChoice, String> {
    s.parse().map_err(|e: qgrass::Error| e.to_string())
}

fn parse_choice(s: &str) -> Result<Choice, String> {
    s.parse().map_err(|e: qgrass::Error| e.to_string())
}

fn run(cli: Cli) -> qgrass::Result<bool> {
    match cli.command {
        Command::Eval { mn, expr } => {
            let amb = mn.map(|(m, n)| Ambient::new(m, n)).transpose()?;
            println!("{}", eval_expr(&expr, amb)?);
            Ok(true)
        }
        Command::Straighten {
            order,
            mn: (m, n),
            product,
            json,
        } => {
            let g = Grassmannian::new(m, n)?;
            let ord = PosetOrder::parse(&order, m, n)?;
            let e = GrassElement::parse(&product, m, n)?;
            let exp = expand_in_standard_basis(
                &g,
                &e,
                &ord,
                e.degree()
                    .ok_or_else(|| qgrass::Error::BadShape(format!("{e} is not homogeneous")))?,
            )?;
            if json {
                let terms: Vec<_> = exp
                    .rendered()
                    .into_iter()
                    .map(|(c, mono)| serde_json::json!({ "coeff": c, "monomial": mono }))
                    .collect();
                let v = serde_json::json!({ "order": ord.to_string(), "m": m, "n": n, "input": e.to_string(), "terms": terms });
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            } else {
                println!("{exp}");
            }
            Ok(true)
        }
        Command::Poset {
            action: PosetAction::Dump { order, mn: (m, n) },
        } => {
            let ord = PosetOrder::parse(&order, m, n)?;
            let h = hasse_diagram(&ord)?;
            println!("{}", serde_json::to_string_pretty(&h).expect("json"));
            Ok(true)
        }
        Command::Verify {
            suite,
            mn: (m, n),
            order,
            a,
            degree,
            t,
            json,
        } => {
            let cfg = SuiteConfig {
                suite,
                m,
                n,
                a,
                order,
                degree,
                t,
            };
            let report = run_suite(&cfg)?;
            let to_stdout = json.as_deref().is_some_and(|p| p.as_os_str() == "-");
            if !to_stdout {
                for r in &report.records {
                    let mark = if r.passed { "PASS" } else { "FAIL" };
                    print!("{mark} {}", r.id);
                    if let Some(d) = &r.detail {
                        print!("  [{d}]");
                    }
                    if let Some(w) = &r.witness {
                        print!("  witness: {w}");
                    }
                    println!();
                }
                println!(
                    "{}: {} checks, {} passed, {} failed ({} ms)",
                    report.suite,
                    report.summary.total,
                    report.summary.passed,
                    report.summary.failed,
                    report.wall_time_ms
                );
            }
            if let Some(path) = json {
                if to_stdout {
                    println!("{}", report.to_json());
                } else {
                    std::fs::write(&path, report.to_json()).map_err(|e| {
                        qgrass::Error::Config(format!("cannot write {}: {e}", path.display()))
                    })?;
                }
            }
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
