//! Command-line workbench for chord-diagram algebra: an expression language
//! for diagram sums and Feynman diagrams, an on-disk cache of quotient
//! bases, and replayable verification suites.

pub mod cache;
pub mod expr;
pub mod output;
pub mod suites;
pub mod weights;

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::json;
use vassiliev_core::feynman::tau_resolved;
use vassiliev_core::immanent::{alpha, det_weight, immanent, k_coefficients, perm_weight};
use vassiliev_core::operators::{cabling_polynomial, d_op, deframe, s_op, theta_op};
use vassiliev_core::{Cabler, ChordDiagram, DiagramSum, IntersectionMatrix, Partition, QuotientBasis, Rational};

use crate::cache::{Bases, BasisCache, DEFAULT_DIR};
use crate::expr::{parse_feynman, parse_pairing, parse_sum};
use crate::suites::{Report, Scale, Suite};
use crate::weights::WeightSpec;

#[derive(Debug, Parser)]
#[command(name = "vassiliev", version, about = "Exact chord-diagram algebra from the command line")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Directory of the quotient basis cache.
    #[arg(long, global = true, default_value = DEFAULT_DIR)]
    pub cache_dir: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of the degree-m quotient by 4T.
    Dim { m: usize },
    /// Normal form of an expression modulo 4T.
    Reduce { expr: String },
    /// Whether two expressions agree modulo 4T.
    Equal { left: String, right: String },
    /// Cabling operator psi^n.
    Cable {
        #[arg(short = 'n')]
        n: u64,
        expr: String,
    },
    /// Deframing projector.
    Deframe { expr: String },
    /// Sum over deletions of one chord.
    S { expr: String },
    /// Connect-sum with an isolated chord.
    Theta { expr: String },
    /// Chord doubling operator.
    D { expr: String },
    /// STU resolution of Feynman diagrams.
    Resolve { expr: String },
    /// Resolution of the leg symmetrisation.
    Sym { expr: String },
    /// Resolved symmetrised loop diagram of a partition.
    Tau { partition: String },
    /// Intersection matrix of a chord diagram at its written basepoint.
    Im { diagram: String },
    /// Universal immanent.
    Immanent { expr: String },
    /// Determinant weight.
    Alexander { expr: String },
    /// Permanent weight.
    Permanent { expr: String },
    /// Coefficient of a class in the immanent.
    Alpha { partition: String, expr: String },
    /// Leading-term coefficients of a weight system over even partitions.
    Kcoeffs {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        weight: String,
    },
    /// Cabling polynomial n -> W(psi^n(phi(v))).
    Cablepoly {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        weight: String,
        expr: String,
    },
    /// Run a verification suite.
    Verify { suite: String },
    /// Manage the basis cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
    /// Quick replay of every suite.
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Build the degree-m basis and write it to the cache.
    Build { m: usize },
}

/// Text printed on stdout and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// Exit code for usage, parse and input errors.
pub const USAGE_ERROR: i32 = 2;
/// Exit code for a failed verification.
pub const VERIFY_FAILED: i32 = 1;

fn sum_out(json: bool, v: &DiagramSum) -> String {
    if json {
        output::sum(v).to_string()
    } else {
        v.to_string()
    }
}

fn scalar_out(json: bool, key: &str, r: &Rational) -> String {
    if json {
        json!({ key: output::rational(r) }).to_string()
    } else {
        r.to_string()
    }
}

fn reports_out(json: bool, reports: &[Report]) -> Outcome {
    let stdout = if json {
        serde_json::Value::Array(reports.iter().map(output::report).collect()).to_string()
    } else {
        reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n")
    };
    let code = if reports.iter().all(Report::passed) { 0 } else { VERIFY_FAILED };
    Outcome { stdout, code }
}

fn linear_weight(v: &DiagramSum, f: impl Fn(&ChordDiagram) -> Rational) -> Rational {
    v.iter().fold(Rational::zero(), |acc, (d, c)| acc + c * f(d))
}

fn partition(text: &str) -> Result<Partition> {
    Partition::parse(text).with_context(|| format!("bad partition '{text}'"))
}

/// Runs one command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let json = cli.json;
    let mut bases = Bases::new(Some(BasisCache::new(&cli.cache_dir)));
    let out = match &cli.command {
        Command::Dim { m } => {
            let b = bases.get(*m)?;
            if json {
                json!({ "degree": m, "diagrams": b.diagrams().len(), "dim": b.dim() }).to_string()
            } else {
                b.dim().to_string()
            }
        }
        Command::Reduce { expr } => {
            let v = parse_sum(expr)?;
            sum_out(json, &bases.get(v.degree())?.normal_form(&v)?)
        }
        Command::Equal { left, right } => {
            let (a, b) = (parse_sum(left)?, parse_sum(right)?);
            if a.degree() != b.degree() {
                bail!("degree mismatch: {} vs {}", a.degree(), b.degree());
            }
            let eq = bases.get(a.degree())?.equal_mod_4t(&a, &b)?;
            if json {
                json!({ "equal": eq }).to_string()
            } else {
                eq.to_string()
            }
        }
        Command::Cable { n, expr } => sum_out(json, &Cabler::new().cable(&parse_sum(expr)?, *n)?),
        Command::Deframe { expr } => sum_out(json, &deframe(&parse_sum(expr)?)),
        Command::S { expr } => sum_out(json, &s_op(&parse_sum(expr)?)),
        Command::Theta { expr } => sum_out(json, &theta_op(&parse_sum(expr)?)),
        Command::D { expr } => sum_out(json, &d_op(&parse_sum(expr)?)),
        Command::Resolve { expr } | Command::Sym { expr } => {
            let terms = parse_feynman(expr)?;
            let degree = terms.first().map_or(0, |(f, _)| f.degree());
            let mut out = DiagramSum::zero(degree);
            for (f, c) in &terms {
                let r = match cli.command {
                    Command::Sym { .. } => f.sym_resolved()?,
                    _ => f.stu_resolve()?,
                };
                out.add_scaled(c, &r);
            }
            sum_out(json, &out)
        }
        Command::Tau { partition: p } => sum_out(json, &tau_resolved(&partition(p)?)?),
        Command::Im { diagram } => {
            let m = IntersectionMatrix::from_partner(&parse_pairing(diagram)?)?;
            if json {
                output::matrix(&m).to_string()
            } else {
                output::matrix_text(&m)
            }
        }
        Command::Immanent { expr } => {
            let i = immanent(&parse_sum(expr)?);
            if json {
                output::partition_vector(&i).to_string()
            } else {
                i.to_string()
            }
        }
        Command::Alexander { expr } => scalar_out(json, "value", &linear_weight(&parse_sum(expr)?, |d| Rational::from_integer(det_weight(d)))),
        Command::Permanent { expr } => scalar_out(json, "value", &linear_weight(&parse_sum(expr)?, |d| Rational::from_integer(perm_weight(d)))),
        Command::Alpha { partition: p, expr } => scalar_out(json, "value", &alpha(&partition(p)?, &parse_sum(expr)?)?),
        Command::Kcoeffs { degree, weight } => {
            let w = weight.parse::<WeightSpec>()?.build(*degree, &mut bases)?;
            let k = k_coefficients(&w)?;
            if json {
                let map: serde_json::Map<String, serde_json::Value> =
                    k.iter().map(|(p, c)| (p.to_string(), output::rational(c))).collect();
                serde_json::Value::Object(map).to_string()
            } else {
                k.iter().map(|(p, c)| format!("{p}: {c}")).collect::<Vec<_>>().join("\n")
            }
        }
        Command::Cablepoly { degree, weight, expr } => {
            let v = parse_sum(expr)?;
            if v.degree() != *degree {
                bail!("degree mismatch: --degree {degree} but the expression has degree {}", v.degree());
            }
            let w = weight.parse::<WeightSpec>()?.build(*degree, &mut bases)?;
            let p = cabling_polynomial(&w, &v, &mut Cabler::new())?;
            if json {
                output::polynomial(&p).to_string()
            } else {
                p.to_string()
            }
        }
        Command::Verify { suite } => {
            let s: Suite = suite.parse()?;
            return Ok(reports_out(json, &[suites::run(s, Scale::FULL, &mut bases)?]));
        }
        Command::Selftest => return Ok(reports_out(json, &suites::selftest(&mut bases)?)),
        Command::Cache { action: CacheAction::Build { m } } => {
            let b = QuotientBasis::build(*m);
            let path = BasisCache::new(&cli.cache_dir).store(&b)?;
            if json {
                json!({ "degree": m, "dim": b.dim(), "path": path.display().to_string() }).to_string()
            } else {
                format!("wrote {} (degree {m}, {} diagrams, dim {})", path.display(), b.diagrams().len(), b.dim())
            }
        }
    };
    Ok(Outcome::ok(out))
}
