use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use anchorvote::anchor::{
    anchor_proof_for_profile, quantifier_check, DomainFilter, Question, Verdict,
};
use anchorvote::enumerate::Budget;
use anchorvote::format::{format_orders, format_profile, parse_preference, parse_profile};
use anchorvote::planner::{search_manipulation, InfoFunction, PrefFamily};
use anchorvote::ranked::{rank_anchor_proof, tops_only_check, RankRuleId, RankWitness};
use anchorvote::reproduce::run_reproduction;
use anchorvote::simulate::{run_simulation, SimulationConfig};
use anchorvote::suites::run_suite;
use anchorvote::{Alternatives, Error, RuleId};

#[derive(Parser)]
#[command(
    name = "anchorvote",
    version,
    about = "Approval voting under an anchoring bias"
)]
struct Cli {
    /// Maximum number of enumeration steps.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT.0)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute a worked case: example1, example2, example9, table3, fig1.
    Reproduce { case: String },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
    /// Is the rule anchor-proof on the given profile?
    CheckProfile {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        profile: PathBuf,
        /// Write witness files into this directory.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Decide one quantifier question by exhaustive enumeration.
    Search {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        question: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "all")]
        domain: String,
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Look for an optimal planner strategy.
    Manipulate {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        info: String,
        #[arg(long)]
        profile: PathBuf,
        /// Planner preference file, best subset first.
        #[arg(long, conflicts_with = "pref_family")]
        pref: Option<PathBuf>,
        /// lex:<labels>, singleton-first:<label> or all.
        #[arg(long)]
        pref_family: Option<String>,
    },
    /// Ranked-ballot checks.
    Ranked {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// tops-only or anchor-proof.
        #[arg(long)]
        check: String,
    },
    /// Estimate anchor-proofness and outcome spread by sampling.
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated rules.
        #[arg(long, default_value = "sav")]
        rule: String,
        #[arg(long, default_value = "all")]
        domain: String,
        /// Enumerate the whole domain instead of sampling.
        #[arg(long)]
        exact: bool,
        /// Also report the manipulation rate under this information.
        #[arg(long)]
        info: Option<String>,
        #[arg(long, requires = "info")]
        pref_family: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))
}

fn print_verdict(v: &Verdict, alts: &Alternatives, dir: Option<&Path>) -> Result<bool, Error> {
    println!("{}", if v.holds { "holds" } else { "fails" });
    if let Some(w) = &v.witness {
        print!("{}", w.render(alts));
        if let Some(dir) = dir {
            fs::create_dir_all(dir).map_err(|e| Error::InvalidConfig(e.to_string()))?;
            if let Some(p) = &w.profile {
                write(&dir.join("profile.txt"), &format_profile(alts, p))?;
            }
            if let Some((s, t)) = &w.orders {
                write(&dir.join("sigma.txt"), &format_orders(alts, s))?;
                write(&dir.join("pi.txt"), &format_orders(alts, t))?;
            }
        }
    }
    Ok(v.holds)
}

fn run(cli: Cli) -> Result<bool, Error> {
    let budget = Budget(cli.budget);
    match cli.command {
        Command::Reproduce { case } => {
            let r = run_reproduction(&case)?;
            print!("{}", r.render());
            Ok(r.passed())
        }
        Command::Verify { suite } => {
            let reports = run_suite(&suite, budget)?;
            for r in &reports {
                print!("{}", r.render());
            }
            Ok(reports.iter().all(|r| r.passed()))
        }
        Command::CheckProfile {
            rule,
            profile,
            witness_dir,
        } => {
            let (alts, p) = parse_profile(&read(&profile)?)?;
            let rule = RuleId::parse(&rule, &alts)?;
            let v = anchor_proof_for_profile(&rule, &p, budget)?;
            print_verdict(&v, &alts, witness_dir.as_deref())
        }
        Command::Search {
            rule,
            question,
            n,
            m,
            domain,
            witness_dir,
        } => {
            let alts = Alternatives::default_labels(m)?;
            let rule = RuleId::parse(&rule, &alts)?;
            let q: Question = question.parse()?;
            let domain: DomainFilter = domain.parse()?;
            let v = quantifier_check(&rule, q, n, m, domain, budget)?;
            print!("{q} ({}) {domain}: ", q.pattern());
            print_verdict(&v, &alts, witness_dir.as_deref())
        }
        Command::Manipulate {
            rule,
            info,
            profile,
            pref,
            pref_family,
        } => {
            let (alts, p) = parse_profile(&read(&profile)?)?;
            let rule = RuleId::parse(&rule, &alts)?;
            let info: InfoFunction = info.parse()?;
            let family = match (pref, pref_family) {
                (Some(path), _) => PrefFamily::Given(parse_preference(&read(&path)?, &alts)?),
                (None, Some(text)) => PrefFamily::parse(&text, &alts)?,
                (None, None) => PrefFamily::All,
            };
            let prefs = family.preferences(alts.len())?;
            match search_manipulation(&rule, info, &p, &prefs, budget)? {
                None => {
                    println!("not manipulable");
                    Ok(false)
                }
                Some(w) => {
                    println!("manipulable");
                    println!("# planner preference");
                    print!(
                        "{}",
                        anchorvote::format::format_preference(&alts, &w.preference)
                    );
                    println!("# optimal strategy");
                    print!("{}", format_orders(&alts, &w.sigma_star));
                    println!("# strictly better than this order vector");
                    print!("{}", format_orders(&alts, &w.improvement.sigma));
                    println!("# in this possible world");
                    print!("{}", format_profile(&alts, &w.improvement.world));
                    println!(
                        "# outcomes: {} vs {}",
                        alts.format_set(w.improvement.star_outcome),
                        alts.format_set(w.improvement.other_outcome)
                    );
                    Ok(true)
                }
            }
        }
        Command::Ranked { rule, n, m, check } => {
            let alts = Alternatives::default_labels(m)?;
            let rule = RankRuleId::parse(&rule, &alts)?;
            let v = match check.as_str() {
                "tops-only" => tops_only_check(rule, n, m, budget)?,
                "anchor-proof" => rank_anchor_proof(rule, n, m, budget)?,
                other => return Err(Error::InvalidConfig(format!("unknown check '{other}'"))),
            };
            println!("{check}: {}", if v.holds { "holds" } else { "fails" });
            match &v.witness {
                Some(RankWitness::Ballots {
                    first,
                    second,
                    outcomes,
                }) => {
                    let show = |bs: &[anchorvote::ranked::TruncatedBallot]| {
                        bs.iter()
                            .map(|b| format!("({})", b.display(&alts)))
                            .collect::<Vec<_>>()
                            .join(" ")
                    };
                    println!("# {} -> {}", show(first), alts.format_set(outcomes.0));
                    println!("# {} -> {}", show(second), alts.format_set(outcomes.1));
                }
                Some(RankWitness::Orders {
                    profile,
                    sigma,
                    pi,
                    outcomes,
                }) => {
                    print!("{}", format_profile(&alts, profile));
                    print!("{}", format_orders(&alts, sigma));
                    print!("{}", format_orders(&alts, pi));
                    println!(
                        "# outcomes: {} vs {}",
                        alts.format_set(outcomes.0),
                        alts.format_set(outcomes.1)
                    );
                }
                None => {}
            }
            Ok(v.holds)
        }
        Command::Simulate {
            n,
            m,
            samples,
            seed,
            rule,
            domain,
            exact,
            info,
            pref_family,
            out,
        } => {
            let alts = Alternatives::default_labels(m)?;
            let rules = rule
                .split(',')
                .map(|r| RuleId::parse(r.trim(), &alts))
                .collect::<Result<Vec<_>, _>>()?;
            let manipulation = match info {
                None => None,
                Some(i) => {
                    let family = match pref_family {
                        Some(text) => PrefFamily::parse(&text, &alts)?,
                        None => PrefFamily::Lex((0..m as u8).collect()),
                    };
                    Some((i.parse()?, family.preferences(m)?))
                }
            };
            let config = SimulationConfig {
                n,
                m,
                samples,
                seed,
                rules,
                domain: domain.parse()?,
                exact,
                manipulation,
                budget,
            };
            let csv = run_simulation(&config)?.to_csv();
            match out {
                Some(path) => write(&path, &csv)?,
                None => print!("{csv}"),
            }
            Ok(true)
        }
    }
}
