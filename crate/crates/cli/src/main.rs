//! Command-line front end: normal forms for expressions over the generators
//! and root vectors, certification runs for the identity catalog, and the
//! root-of-unity suites.

mod parser;

use clap::{Args, Parser, Subcommand};
use qgb_core::freealg::Element;
use qgb_core::qgroup::{AlgebraInstance, Validation};
use qgb_core::registry::{records_to_lines, run_tag, RegistryParams};
use qgb_core::restricted::RestrictedInstance;
use qgb_core::rewrite::normal_form;
use qgb_core::suites::{SuiteRecord, SuiteStatus};
use qgb_core::EngineError;

const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(name = "qgb", about = "Exact engine for the two-parameter quantum group of type B", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// rank of the algebra
    #[arg(long, default_value_t = 2)]
    n: u8,
    /// odd order of the root of unity for specialized mode
    #[arg(long)]
    ell: Option<u32>,
    /// r = theta^y
    #[arg(long, default_value_t = 1)]
    y: i64,
    /// s = theta^z
    #[arg(long, default_value_t = 4)]
    z: i64,
    /// rewrite step budget (also QGB_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
    /// output format: text or records
    #[arg(long, default_value = "text")]
    format: String,
    /// parallel suite instances
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an expression to its normal form
    Nf {
        #[command(flatten)]
        common: Common,
        /// print the reduction trace
        #[arg(long)]
        trace: bool,
        /// the expression, e.g. "e2*e1" or "e1*E(1,2) - s^2*E(1,2)*e1"
        expr: String,
    },
    /// Certify one identity tag, a family, or the whole catalog
    Certify {
        #[command(flatten)]
        common: Common,
        /// identity tag like 3.6.8, a family like 3.4, or "all"
        tag: String,
        /// largest power exponent for the power families
        #[arg(long, default_value_t = 4)]
        m_max: u32,
    },
    /// Root-of-unity suites
    Rou {
        #[command(subcommand)]
        what: RouCommand,
    },
    /// Export the straightening rule catalog
    Rules {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum RouCommand {
    /// centrality of the l-th powers
    Central {
        #[command(flatten)]
        common: Common,
    },
    /// left or right integrals of the Borel subalgebra
    Integral {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "left")]
        side: String,
    },
    /// the ribbon criterion
    Ribbon {
        #[command(flatten)]
        common: Common,
    },
    /// the double determinant condition
    Double {
        #[command(flatten)]
        common: Common,
    },
    /// the dual integrals
    DualIntegral {
        #[command(flatten)]
        common: Common,
    },
}

fn budget_of(common: &Common) -> u64 {
    common
        .budget
        .or_else(|| std::env::var("QGB_BUDGET").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(qgb_core::rewrite::DEFAULT_BUDGET)
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                EngineError::BudgetExhausted { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    };
    std::process::exit(code);
}

fn print_records(records: &[SuiteRecord], format: &str) {
    if format == "records" {
        print!("{}", records_to_lines(records));
        return;
    }
    let mut by_tag: std::collections::BTreeMap<String, (usize, usize)> = Default::default();
    for r in records {
        let e = by_tag.entry(r.tag.clone()).or_default();
        e.1 += 1;
        if r.status == SuiteStatus::Pass {
            e.0 += 1;
        }
        if r.status != SuiteStatus::Pass {
            println!("FAIL {} [{}] {:?}", r.tag, r.params, r.residue);
        }
    }
    for (tag, (pass, total)) in &by_tag {
        println!("{tag}: {pass}/{total} pass");
    }
}

fn run(cli: Cli) -> Result<i32, EngineError> {
    match cli.command {
        Command::Nf { common, trace, expr } => {
            let n = common.n;
            let parsed = match parser::parse_expression(&expr, n) {
                Ok(p) => p,
                Err(EngineError::Parse { pos, msg }) => {
                    eprintln!("{}", parser::caret_report(&expr, pos, &msg));
                    return Ok(EXIT_USAGE);
                }
                Err(e) => return Err(e),
            };
            let budget = budget_of(&common);
            let inst = AlgebraInstance::build(n, Validation::Orientation)?;
            match parsed {
                parser::Parsed::Plain(e) => {
                    if let Some(ell) = common.ell {
                        let rinst = RestrictedInstance::build(n, ell, common.y, common.z)?;
                        let spec = rinst
                            .specialize_element(&e)
                            .map_err(EngineError::Coeff)?;
                        let red = rinst.nf(&spec);
                        if red.is_zero() {
                            println!("0");
                        }
                        for (w, c) in red.terms() {
                            println!("{}\t{}", c, qgb_core::freealg::word_string(w, n));
                        }
                        return Ok(0);
                    }
                    let red = match normal_form(&e, &inst.pbw_rules, budget, trace) {
                        Ok(r) => r,
                        Err(EngineError::BudgetExhausted { budget }) => {
                            eprintln!("error: step budget of {budget} exhausted");
                            return Ok(EXIT_BUDGET);
                        }
                        Err(e) => return Err(e),
                    };
                    if let Some(t) = &red.trace {
                        for step in &t.steps {
                            println!(
                                "# {} at {} in {}",
                                step.tag,
                                step.pos,
                                qgb_core::freealg::word_string(&step.word, n)
                            );
                        }
                    }
                    println!("{}", parser::print_element(&red.element, n));
                }
                parser::Parsed::Tensor(t) => {
                    let reduced = t.map_legs(|w| {
                        normal_form(
                            &Element::term(w.clone(), qgb_core::coeff::RatFun::one()),
                            &inst.pbw_rules,
                            budget,
                            false,
                        )
                        .map(|r| r.element)
                        .unwrap_or_else(|_| Element::zero())
                    });
                    for ((a, b), c) in reduced.terms() {
                        println!(
                            "{}\t{} (x) {}",
                            c,
                            qgb_core::freealg::word_string(a, n),
                            qgb_core::freealg::word_string(b, n)
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Certify { common, tag, m_max } => {
            let params = RegistryParams {
                n: common.n,
                ell: common.ell,
                y: common.y,
                z: common.z,
                m_max,
                a_max: 3,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(common.jobs.max(1))
                .build()
                .expect("thread pool");
            let records = pool.install(|| run_tag(&tag, &params))?;
            print_records(&records, &common.format);
            let pass = records
                .iter()
                .all(|r| matches!(r.status, SuiteStatus::Pass | SuiteStatus::Skipped(_)));
            Ok(if pass { 0 } else { EXIT_FAIL })
        }
        Command::Rou { what } => {
            let common = match &what {
                RouCommand::Central { common }
                | RouCommand::Ribbon { common }
                | RouCommand::Double { common }
                | RouCommand::DualIntegral { common }
                | RouCommand::Integral { common, .. } => common.clone(),
            };
            let ell = common.ell.unwrap_or(5);
            let records: Vec<SuiteRecord> = match what {
                RouCommand::Double { .. } => {
                    let d =
                        qgb_core::restricted::double_condition(common.n, ell, common.y, common.z);
                    println!(
                        "det A = {} (mod {}): gcd({}, {}) = {} -> condition {}",
                        d.det_mod_ell,
                        ell,
                        d.det_mod_ell,
                        ell,
                        d.gcd,
                        if d.holds { "holds" } else { "fails" }
                    );
                    vec![qgb_core::registry::double_condition_record(
                        common.n, ell, common.y, common.z,
                    )]
                }
                RouCommand::Ribbon { .. } => match qgb_core::restricted::ribbon_solve(common.n, ell) {
                    qgb_core::restricted::RibbonOutcome::Witness(w) => {
                        println!("witness exponents a = {:?}", w.a);
                        let rinst =
                            RestrictedInstance::build(common.n, ell, common.y, common.z)?;
                        qgb_core::restricted::ribbon_check(&rinst)
                    }
                    qgb_core::restricted::RibbonOutcome::NoWitness { unsolvable } => {
                        println!("no witness: {unsolvable}");
                        vec![]
                    }
                },
                RouCommand::Central { .. } => {
                    let rinst = RestrictedInstance::build(common.n, ell, common.y, common.z)?;
                    qgb_core::restricted::central_suite(&rinst)
                }
                RouCommand::Integral { side, .. } => {
                    let rinst = RestrictedInstance::build(common.n, ell, common.y, common.z)?;
                    let left = side != "right";
                    qgb_core::restricted::integral_check(&rinst, left)
                }
                RouCommand::DualIntegral { .. } => {
                    let rinst = RestrictedInstance::build(common.n, ell, common.y, common.z)?;
                    qgb_core::funcs::dual_integral_check(&rinst)
                }
            };
            print_records(&records, &common.format);
            let pass = records.iter().all(|r| r.status == SuiteStatus::Pass);
            Ok(if pass { 0 } else { EXIT_FAIL })
        }
        Command::Rules { common } => {
            let inst = AlgebraInstance::build(common.n, Validation::Orientation)?;
            print!("{}", inst.pbw_rules.export_catalog());
            Ok(0)
        }
    }
}
