//! Command-line front end: verification campaigns over the character
//! identities and certificate engines, plus orbit queries and exports.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nilnorm_core::bmod::nilradical_weights;
use nilnorm_core::error::Error;
use nilnorm_core::orbits::{
    hasse_dot, is_very_even, kp_reduction, minimal_degenerations, orbit_dimension,
    richardson_orbit, validate_partition, Label, LabeledPartition, Partition,
};
use nilnorm_core::prover::{
    build_scenario, check_demi1, check_demi2, stage_chain_audit, step1_certificate,
    step2_certificate, step3_certificate, verify_main_ses, verify_shift_identity_a,
    verify_shift_identity_d, Chain, TypeDContext,
};
use nilnorm_core::rootsys::{Family, ParabolicMarker, RootSystem, Weight};

#[derive(Parser)]
#[command(name = "nilnorm", version, about = "Exact verification toolkit for nilpotent-orbit character identities")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest symmetric-power degree checked by campaign commands.
    #[arg(long, global = true, default_value_t = 3)]
    n_max: usize,
    /// Random seed for sampling commands.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Sample count for the Richardson oracle.
    #[arg(long, global = true, default_value_t = 5)]
    trials: usize,
    /// Weight-multiset size cap.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    cap: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify a lemma, a proof step, or a character identity.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Orbit queries and exports.
    #[command(subcommand)]
    Orbit(OrbitCmd),
}

#[derive(Args)]
struct ChainArgs {
    /// Root-system family (a or d).
    #[arg(long)]
    family: String,
    #[arg(long)]
    rank: usize,
    /// Fundamental coordinates of the twisted weight, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weight: Vec<i64>,
    /// Simple-root indices of the chain, comma separated.
    #[arg(long, value_delimiter = ',')]
    chain: Vec<usize>,
    /// Chain position `a` of the lemma.
    #[arg(long)]
    a: usize,
    /// Chain position `b` of the lemma.
    #[arg(long)]
    b: usize,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// First repeated-reflection vanishing lemma on one weight.
    Demi1(ChainArgs),
    /// Second repeated-reflection vanishing lemma on one weight.
    Demi2(ChainArgs),
    /// Wedge vanishing for the `u*_P → V*` comparison in `D_{2l+1}`.
    Step1 {
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        r: i64,
    },
    /// Wedge vanishing for the `V* → V_1*` comparison.
    Step2 {
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        s: i64,
    },
    /// Wedge analysis with the expected lone survivor at `j = l`.
    Step3 {
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        s: i64,
    },
    /// Type-A shift identity at every degree up to --n-max.
    ShiftA {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
    },
    /// Type-D shift identity at every degree up to --n-max.
    ShiftD {
        #[arg(long)]
        l: usize,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
    },
    /// Main three-term identity, stage audit included.
    MainSes {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Subcommand)]
enum OrbitCmd {
    /// Validity, dimension, labels, and covered orbits of a partition.
    Info {
        /// Rank `n` of `so(2n)`.
        #[arg(long)]
        rank: usize,
        /// Parts, comma separated.
        #[arg(long, value_delimiter = ',')]
        partition: Vec<usize>,
    },
    /// Closure-order Hasse diagram of all orbits of `so(2n)`.
    Hasse {
        #[arg(long)]
        rank: usize,
    },
    /// Dense orbit of a nilradical by seeded sampling.
    Richardson {
        #[arg(long)]
        rank: usize,
        /// Removed simple roots, comma separated.
        #[arg(long, value_delimiter = ',')]
        marker: Vec<usize>,
    },
}

struct Report {
    command: String,
    parameters: Value,
    verdict: &'static str,
    payload: Value,
    /// Sub-checks finished before a resource cap stopped the campaign.
    completed: Vec<String>,
}

impl Report {
    fn to_json(&self) -> Value {
        let mut v = json!({
            "schema": 1,
            "command": self.command,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "payload": self.payload,
        });
        if !self.completed.is_empty() {
            v["completed"] = json!(self.completed);
        }
        v
    }

    fn to_text(&self) -> String {
        let mut s = format!("{}: {}\n", self.command, self.verdict);
        s.push_str(&format!("parameters: {}\n", self.parameters));
        s.push_str(&format!("payload: {}\n", self.payload));
        if !self.completed.is_empty() {
            s.push_str(&format!("completed before cap: {:?}\n", self.completed));
        }
        s
    }
}

fn parse_family(f: &str) -> Result<Family, String> {
    match f.to_ascii_lowercase().as_str() {
        "a" => Ok(Family::A),
        "d" => Ok(Family::D),
        other => Err(format!("unknown family '{other}' (expected a or d)")),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    match result {
        Ok(report) => {
            let rendered = match cli.format {
                Format::Json => {
                    format!("{}\n", serde_json::to_string_pretty(&report.to_json()).unwrap())
                }
                Format::Text => report.to_text(),
                Format::Dot => match report.payload.get("dot").and_then(Value::as_str) {
                    Some(dot) => dot.to_string(),
                    None => return usage_error("--format dot is only available for orbit hasse"),
                },
            };
            let written = match &cli.out {
                Some(path) => std::fs::write(path, rendered.as_bytes()).map_err(|e| e.to_string()),
                None => std::io::stdout()
                    .write_all(rendered.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if report.verdict == "PASS" {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => usage_error(&msg),
    }
}

enum CliError {
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.cmd {
        Cmd::Verify(v) => run_verify(cli, v),
        Cmd::Orbit(o) => run_orbit(cli, o),
    }
}

/// Fold one sub-check into a campaign: `Ok` results accumulate, a cap
/// violation downgrades the verdict to PARTIAL and stops the campaign.
enum Campaign {
    Done(Vec<Value>, bool),
    Capped(Vec<Value>, Vec<String>),
}

fn campaign<I, T>(
    items: I,
    mut check: impl FnMut(&T) -> Result<(Value, bool), Error>,
    label: impl Fn(&T) -> String,
) -> Result<Campaign, CliError>
where
    I: IntoIterator<Item = T>,
{
    let mut payloads = Vec::new();
    let mut completed = Vec::new();
    let mut all_ok = true;
    for item in items {
        match check(&item) {
            Ok((value, ok)) => {
                payloads.push(value);
                completed.push(label(&item));
                all_ok &= ok;
            }
            Err(Error::CapExceeded { .. }) => return Ok(Campaign::Capped(payloads, completed)),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Campaign::Done(payloads, all_ok))
}

fn campaign_report(command: &str, parameters: Value, c: Campaign) -> Report {
    match c {
        Campaign::Done(payloads, true) => Report {
            command: command.into(),
            parameters,
            verdict: "PASS",
            payload: json!({ "checks": payloads }),
            completed: Vec::new(),
        },
        Campaign::Done(payloads, false) => Report {
            command: command.into(),
            parameters,
            verdict: "FAIL",
            payload: json!({ "checks": payloads }),
            completed: Vec::new(),
        },
        Campaign::Capped(payloads, completed) => Report {
            command: command.into(),
            parameters,
            verdict: "PARTIAL",
            payload: json!({ "checks": payloads }),
            completed,
        },
    }
}

fn partial_report(command: &str, parameters: Value) -> Report {
    Report {
        command: command.into(),
        parameters,
        verdict: "PARTIAL",
        payload: json!({ "checks": [] }),
        completed: Vec::new(),
    }
}

fn run_verify(cli: &Cli, v: &VerifyCmd) -> Result<Report, CliError> {
    match v {
        VerifyCmd::Demi1(args) | VerifyCmd::Demi2(args) => {
            let which = matches!(v, VerifyCmd::Demi1(_));
            let family = parse_family(&args.family).map_err(CliError::Usage)?;
            let rs = RootSystem::build(family, args.rank)?;
            if args.weight.len() != rs.rank {
                return Err(CliError::Usage(format!(
                    "--weight has {} coordinates, rank is {}",
                    args.weight.len(),
                    rs.rank
                )));
            }
            let lam = Weight::new(args.weight.clone());
            let chain = Chain::new(&rs, args.chain.clone())?;
            let (name, outcome, certified) = if which {
                let o = check_demi1(&rs, &lam, args.a, args.b, &chain)?;
                let ok = matches!(o, nilnorm_core::prover::Demi1Outcome::Certified { .. });
                ("verify demi1", serde_json::to_value(&o).unwrap(), ok)
            } else {
                let o = check_demi2(&rs, &lam, args.a, args.b, &chain)?;
                let ok = matches!(o, nilnorm_core::prover::Demi2Outcome::Certified { .. });
                ("verify demi2", serde_json::to_value(&o).unwrap(), ok)
            };
            Ok(Report {
                command: name.into(),
                parameters: json!({
                    "family": args.family, "rank": args.rank, "weight": args.weight,
                    "chain": args.chain, "a": args.a, "b": args.b,
                }),
                verdict: if certified { "PASS" } else { "FAIL" },
                payload: json!({ "outcome": outcome }),
                completed: Vec::new(),
            })
        }
        VerifyCmd::Step1 { l, r } => {
            let params = json!({ "l": l, "r": r, "cap": cli.cap });
            let ctx = TypeDContext::new(*l)?;
            let cert = match step1_certificate(&ctx, *r, cli.cap) {
                Ok(c) => c,
                Err(Error::CapExceeded { .. }) => return Ok(partial_report("verify step1", params)),
                Err(e) => return Err(e.into()),
            };
            Ok(Report {
                command: "verify step1".into(),
                parameters: json!({ "l": l, "r": r, "cap": cli.cap }),
                verdict: if cert.accepted() { "PASS" } else { "FAIL" },
                payload: serde_json::to_value(&cert).unwrap(),
                completed: Vec::new(),
            })
        }
        VerifyCmd::Step2 { l, r, s } => {
            let ctx = TypeDContext::new(*l)?;
            let line = nilnorm_core::prover::wedge::step2_v2_certificate(&ctx, *r, *s)?;
            let cert = match step2_certificate(&ctx, *r, *s, cli.cap) {
                Ok(c) => c,
                Err(Error::CapExceeded { .. }) => {
                    return Ok(partial_report(
                        "verify step2",
                        json!({ "l": l, "r": r, "s": s, "cap": cli.cap }),
                    ))
                }
                Err(e) => return Err(e.into()),
            };
            let ok = line.accepted() && cert.accepted();
            Ok(Report {
                command: "verify step2".into(),
                parameters: json!({ "l": l, "r": r, "s": s, "cap": cli.cap }),
                verdict: if ok { "PASS" } else { "FAIL" },
                payload: json!({
                    "symmetric_line": serde_json::to_value(&line).unwrap(),
                    "wedge": serde_json::to_value(&cert).unwrap(),
                }),
                completed: Vec::new(),
            })
        }
        VerifyCmd::Step3 { l, r, s } => {
            let ctx = TypeDContext::new(*l)?;
            let cert = match step3_certificate(&ctx, *r, *s, cli.cap) {
                Ok(c) => c,
                Err(Error::CapExceeded { .. }) => {
                    return Ok(partial_report(
                        "verify step3",
                        json!({ "l": l, "r": r, "s": s, "cap": cli.cap }),
                    ))
                }
                Err(e) => return Err(e.into()),
            };
            let expected = ctx.step3_pivot_weight().add(&ctx.twist(*r, *s));
            let ok = cert.uncovered.len() == 1
                && cert.uncovered[0].j == *l
                && cert.uncovered[0].weight == expected;
            Ok(Report {
                command: "verify step3".into(),
                parameters: json!({ "l": l, "r": r, "s": s, "cap": cli.cap }),
                verdict: if ok { "PASS" } else { "FAIL" },
                payload: json!({
                    "certificate": serde_json::to_value(&cert).unwrap(),
                    "expected_survivor": serde_json::to_value(&expected).unwrap(),
                }),
                completed: Vec::new(),
            })
        }
        VerifyCmd::ShiftA { l, m, r } => {
            let c = campaign(
                0..=cli.n_max,
                |n| {
                    let rep = verify_shift_identity_a(*l, *m, *r, *n, cli.cap)?;
                    Ok((serde_json::to_value(&rep).unwrap(), rep.holds))
                },
                |n| format!("n={n}"),
            )?;
            Ok(campaign_report(
                "verify shift-a",
                json!({ "l": l, "m": m, "r": r, "n_max": cli.n_max, "cap": cli.cap }),
                c,
            ))
        }
        VerifyCmd::ShiftD { l, r } => {
            let c = campaign(
                0..=cli.n_max,
                |n| {
                    let rep = verify_shift_identity_d(*l, *r, *n, cli.cap)?;
                    Ok((serde_json::to_value(&rep).unwrap(), rep.holds))
                },
                |n| format!("n={n}"),
            )?;
            Ok(campaign_report(
                "verify shift-d",
                json!({ "l": l, "r": r, "n_max": cli.n_max, "cap": cli.cap }),
                c,
            ))
        }
        VerifyCmd::MainSes { k, a, b } => {
            let sc = build_scenario(*k, *a, *b)?;
            let c = campaign(
                0..=cli.n_max,
                |n| {
                    let ses = verify_main_ses(&sc, *n, cli.cap)?;
                    let audit = stage_chain_audit(&sc, *n, cli.cap)?;
                    let ok = ses.holds && ses.difference_nonnegative && audit.holds;
                    Ok((
                        json!({
                            "ses": serde_json::to_value(&ses).unwrap(),
                            "stage_audit": serde_json::to_value(&audit).unwrap(),
                        }),
                        ok,
                    ))
                },
                |n| format!("n={n}"),
            )?;
            let mut rep = campaign_report(
                "verify main-ses",
                json!({
                    "k": k, "a": a, "b": b, "n_max": cli.n_max, "cap": cli.cap,
                    "final_offset": sc.final_offset,
                }),
                c,
            );
            rep.payload["scenario"] = serde_json::to_value(&sc).unwrap();
            Ok(rep)
        }
    }
}

fn run_orbit(cli: &Cli, o: &OrbitCmd) -> Result<Report, CliError> {
    match o {
        OrbitCmd::Info { rank, partition } => {
            let p = Partition::new(partition.clone());
            validate_partition(&p, *rank)?;
            let dim = orbit_dimension(&p, *rank)?;
            let labels: Vec<LabeledPartition> = if is_very_even(&p) {
                vec![
                    LabeledPartition::new(p.clone(), Some(Label::I))?,
                    LabeledPartition::new(p.clone(), Some(Label::II))?,
                ]
            } else {
                vec![LabeledPartition::new(p.clone(), None)?]
            };
            let degenerations: Vec<Value> = labels
                .iter()
                .map(|o| {
                    let degs = minimal_degenerations(o, *rank)?;
                    let reduced: Vec<Value> = degs
                        .iter()
                        .map(|d| {
                            let red = kp_reduction(&o.partition, &d.partition)?;
                            Ok(json!({
                                "orbit": d.to_string(),
                                "reduction": serde_json::to_value(&red).unwrap(),
                            }))
                        })
                        .collect::<Result<_, Error>>()?;
                    Ok(json!({ "orbit": o.to_string(), "covers": reduced }))
                })
                .collect::<Result<_, Error>>()?;
            Ok(Report {
                command: "orbit info".into(),
                parameters: json!({ "rank": rank, "partition": partition }),
                verdict: "PASS",
                payload: json!({
                    "partition": p.to_string(),
                    "dimension": i64::try_from(dim.clone()).map_or_else(|_| json!(dim.to_string()), Value::from),
                    "very_even": is_very_even(&p),
                    "orbits": labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                    "minimal_degenerations": degenerations,
                }),
                completed: Vec::new(),
            })
        }
        OrbitCmd::Hasse { rank } => {
            let dot = hasse_dot(*rank)?;
            Ok(Report {
                command: "orbit hasse".into(),
                parameters: json!({ "rank": rank }),
                verdict: "PASS",
                payload: json!({ "dot": dot }),
                completed: Vec::new(),
            })
        }
        OrbitCmd::Richardson { rank, marker } => {
            let m = ParabolicMarker::new(marker.clone());
            let rep = richardson_orbit(*rank, &m, cli.seed, cli.trials)?;
            let dim = orbit_dimension(&rep.orbit.partition, *rank)?;
            let rs = RootSystem::build(Family::D, *rank)?;
            let nilradical_dim = nilradical_weights(&rs, &m)?.len();
            // a Richardson orbit is dense in its nilradical's image, so its
            // dimension must be twice dim u_P
            let consistent = dim == num::BigInt::from(2u32) * num::BigInt::from(nilradical_dim.clone());
            Ok(Report {
                command: "orbit richardson".into(),
                parameters: json!({
                    "rank": rank, "marker": marker, "seed": cli.seed, "trials": cli.trials,
                }),
                verdict: if consistent { "PASS" } else { "FAIL" },
                payload: json!({
                    "orbit": rep.orbit.to_string(),
                    "report": serde_json::to_value(&rep).unwrap(),
                    "dimension": dim.to_string(),
                    "nilradical_dimension": nilradical_dim.to_string(),
                }),
                completed: Vec::new(),
            })
        }
    }
}
