//! Command implementations behind the `hom-nambu` binary.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hom_nambu::algebra::HomSuperAlgebra;
use hom_nambu::axioms::{check_identities, Identity};
use hom_nambu::catalog::{self, Fixture, Method, NamedOperator, OperatorKind, Params};
use hom_nambu::cochains::check_induction_conditions;
use hom_nambu::derivations::solve_derivation_space;
use hom_nambu::error::Error;
use hom_nambu::format::{emit_algebra, emit_fixture, parse_fixture};
use hom_nambu::iterated::TWIST_NOTE;
use hom_nambu::map::GradedLinearMap;
use hom_nambu::prelie3::{check_corollary_identities, rb_image_prelie, rb_induced_prelie, sub_adjacent};
use hom_nambu::report::{CheckOptions, CheckReport};
use hom_nambu::rotabaxter::{
    check_inverse_derivation_equiv, check_phi_rb_kernel_condition, check_rb_iterated_transfer, check_rb_nary,
    RotaBaxterOperator,
};
use hom_nambu::space::Parity;

#[derive(Parser, Debug)]
#[command(
    name = "hom-nambu",
    version,
    about = "Check identities of Hom-Lie and n-ary Hom-Nambu superalgebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Parameter overrides, e.g. a=2,b=1/3
    #[arg(long, global = true)]
    pub params: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
    #[arg(long, global = true, default_value_t = 16)]
    pub max_counterexamples: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check identities of an algebra
    Check {
        /// File path or catalog:NAME?k=v,...
        source: String,
        /// Comma-separated identities, `profile` (declared profile) or `all`
        #[arg(long, default_value = "profile")]
        identity: String,
        /// Replace the twists before checking
        #[arg(long, value_enum)]
        twist: Option<TwistOverride>,
        #[command(flatten)]
        common: Common,
    },
    /// Build the n-ary algebra induced by a cochain or by iteration
    Induce {
        source: String,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long)]
        n: usize,
        /// Cochain name (phi method)
        #[arg(long)]
        cochain: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Solve for a basis of alpha^k-derivations
    Derive {
        source: String,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        parity: u8,
        #[command(flatten)]
        common: Common,
    },
    /// Verify a Rota-Baxter operator
    RbVerify {
        source: String,
        /// Operator name; defaults to the first Rota-Baxter operator
        #[arg(long)]
        operator: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Build and verify the 3-Hom-pre-Lie structure of a Rota-Baxter operator
    Prelie {
        source: String,
        #[arg(long)]
        operator: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Browse the built-in catalog
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    List {
        #[command(flatten)]
        common: Common,
    },
    Show {
        name: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TwistOverride {
    Identity,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Phi,
    Iterate,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Phi => Method::Phi,
            MethodArg::Iterate => Method::Iterate,
        }
    }
}

/// What a command printed and how it ended.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

impl Outcome {
    fn from_report(r: &CheckReport, fmt: ReportFormat) -> Self {
        Outcome {
            stdout: render(r, fmt),
            stderr: String::new(),
            code: if r.passed { EXIT_PASS } else { EXIT_FAIL },
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Precondition(_) | Error::NotMultiplicative | Error::NonUniformTwists => EXIT_FAIL,
            _ => EXIT_INPUT,
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code,
        }
    }
}

fn render(r: &CheckReport, fmt: ReportFormat) -> String {
    match fmt {
        ReportFormat::Text => r.render_text(),
        ReportFormat::Structured => {
            let mut s = r.render_json();
            s.push('\n');
            s
        }
    }
}

/// Resolves `catalog:NAME?k=v` or a file path, with `--params` applied on top.
pub fn load_source(source: &str, params: Option<&str>) -> Result<Fixture, Error> {
    let overrides = match params {
        Some(p) => Params::parse(p)?,
        None => Params::new(),
    };
    match catalog::parse_reference(source) {
        Some(r) => {
            let (name, query) = r?;
            catalog::build(&name, &query.merged(&overrides))
        }
        None => {
            if params.is_some() {
                return Err(Error::Parse("--params only applies to catalog sources".into()));
            }
            let text = std::fs::read_to_string(Path::new(source))
                .map_err(|e| Error::Parse(format!("cannot read {source}: {e}")))?;
            parse_fixture(&text)
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Check {
            source,
            identity,
            twist,
            common,
        } => cmd_check(&source, &identity, twist, &common),
        Command::Induce {
            source,
            method,
            n,
            cochain,
            common,
        } => cmd_induce(&source, method.into(), n, cochain.as_deref(), &common),
        Command::Derive {
            source,
            k,
            parity,
            common,
        } => cmd_derive(&source, k, parity, &common),
        Command::RbVerify {
            source,
            operator,
            common,
        } => cmd_rb_verify(&source, operator.as_deref(), &common),
        Command::Prelie {
            source,
            operator,
            common,
        } => cmd_prelie(&source, operator.as_deref(), &common),
        Command::Catalog { command } => match command {
            CatalogCommand::List { common } => Ok(cmd_catalog_list(&common)),
            CatalogCommand::Show { name, common } => cmd_catalog_show(&name, &common),
        },
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

fn options(common: &Common) -> CheckOptions {
    CheckOptions::with_cap(common.max_counterexamples)
}

fn parse_identities(spec: &str, fixture: &Fixture) -> Result<Vec<Identity>, Error> {
    match spec {
        "profile" => Ok(fixture.profile.clone()),
        "all" => Ok(Identity::applicable(&fixture.algebra)),
        list => list.split(',').map(str::parse).collect(),
    }
}

fn cmd_check(source: &str, identity: &str, twist: Option<TwistOverride>, common: &Common) -> Result<Outcome, Error> {
    let fixture = load_source(source, common.params.as_deref())?;
    let ids = parse_identities(identity, &fixture)?;
    let mut alg = fixture.algebra.clone();
    if twist == Some(TwistOverride::Identity) {
        alg = alg.with_twists(vec![GradedLinearMap::identity(alg.dim()); alg.arity() - 1])?;
    }
    let mut report = check_identities(&alg, &ids, &options(common))?;
    for n in &fixture.notes {
        report = report.with_note(n.clone());
    }
    Ok(Outcome::from_report(&report, common.report))
}

fn cmd_induce(
    source: &str,
    method: Method,
    n: usize,
    cochain: Option<&str>,
    common: &Common,
) -> Result<Outcome, Error> {
    let fixture = load_source(source, common.params.as_deref())?;
    let opts = options(common);
    let mut sections = Vec::new();
    if method == Method::Phi {
        let phi = fixture.phi_for(n, cochain)?;
        let cond = check_induction_conditions(phi, &fixture.algebra, &opts)?;
        if !cond.passed {
            let failing: Vec<&str> = cond
                .sections
                .iter()
                .filter(|s| !s.passed)
                .map(|s| s.identity.as_str())
                .collect();
            return Ok(Outcome {
                stdout: String::new(),
                stderr: format!(
                    "error: induction condition failed: {}\n{}",
                    failing.join(", "),
                    render(&cond, common.report)
                ),
                code: EXIT_FAIL,
            });
        }
        sections.push(cond);
    }
    let alg = fixture.induced(method, n, cochain)?;
    let mut ids = Identity::applicable(&alg);
    if method == Method::Iterate {
        // iterated brackets are skew in the first two slots only
        ids.retain(|&i| i != Identity::SuperSkew);
    }
    let mut verification = check_identities(&alg, &ids, &opts)?;
    if method == Method::Iterate {
        verification = verification.with_note(TWIST_NOTE);
    }
    sections.push(verification);
    let summary = CheckReport::composite(format!("induce {}", alg.name()), sections);
    let mut out = emit_algebra(&alg);
    for line in summary.render_text().lines() {
        let _ = writeln!(out, "# {line}");
    }
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        code: if summary.passed { EXIT_PASS } else { EXIT_FAIL },
    })
}

fn cmd_derive(source: &str, k: u32, parity: u8, common: &Common) -> Result<Outcome, Error> {
    let fixture = load_source(source, common.params.as_deref())?;
    let parity =
        Parity::from_bit(parity).ok_or_else(|| Error::Parse(format!("parity must be 0 or 1, got {parity}")))?;
    let alg = &fixture.algebra;
    let basis = solve_derivation_space(alg, k, parity)?;
    let space = alg.space();
    let stdout = match common.report {
        ReportFormat::Text => {
            let mut s = format!(
                "{} alpha^{k}-derivations of parity {}: dimension {}\n",
                alg.name(),
                parity.bit(),
                basis.len()
            );
            for (i, d) in basis.iter().enumerate() {
                let _ = writeln!(s, "D{}: {}", i + 1, d.format_with(space));
            }
            s
        }
        ReportFormat::Structured => {
            let maps: Vec<_> = basis
                .iter()
                .map(|d| {
                    d.matrix()
                        .iter()
                        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
                        .collect::<Vec<_>>()
                })
                .collect();
            let v = json!({
                "algebra": alg.name(),
                "power": k,
                "parity": parity.bit(),
                "dimension": basis.len(),
                "basis": maps,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: EXIT_PASS,
    })
}

fn pick_operator<'a>(fixture: &'a Fixture, name: Option<&str>) -> Result<&'a NamedOperator, Error> {
    match name {
        Some(n) => fixture
            .operator(n)
            .ok_or_else(|| Error::Parse(format!("no operator named {n:?}"))),
        None => fixture
            .operators
            .iter()
            .find(|o| matches!(o.kind, OperatorKind::RotaBaxter { .. }))
            .ok_or_else(|| Error::Parse("source has no Rota-Baxter operator".into())),
    }
}

fn rb_operator(op: &NamedOperator) -> Result<RotaBaxterOperator, Error> {
    match &op.kind {
        OperatorKind::RotaBaxter { weight } => RotaBaxterOperator::new(op.map.clone(), weight.clone()),
        _ => Err(Error::Parse(format!(
            "operator {:?} is not a Rota-Baxter operator",
            op.name
        ))),
    }
}

fn cmd_rb_verify(source: &str, operator: Option<&str>, common: &Common) -> Result<Outcome, Error> {
    let fixture = load_source(source, common.params.as_deref())?;
    let opts = options(common);
    let named = pick_operator(&fixture, operator)?;
    let op = rb_operator(named)?;
    let target = fixture.operator_algebra(named)?;
    let mut sections = vec![check_rb_nary(&op, &target, &opts)?];
    let zero_weight = op.weight.is_zero();
    if zero_weight && named.target.is_none() && target.arity() == 2 {
        if op.map.is_invertible() {
            sections.push(check_inverse_derivation_equiv(&op.map, &target, &opts)?.into_report());
        }
        for n in [3, 4] {
            sections.push(check_rb_iterated_transfer(&op.map, &target, n, &opts)?.into_report());
        }
    }
    if zero_weight {
        if let Some((Method::Phi, n)) = named.target.as_deref().map(catalog::parse_target).transpose()? {
            let phi = fixture.phi_for(n, None)?;
            sections.push(check_phi_rb_kernel_condition(&op.map, phi, &fixture.algebra, &opts)?.into_report());
        }
    }
    let report = CheckReport::composite(format!("rota-baxter {} on {}", named.name, target.name()), sections);
    Ok(Outcome::from_report(&report, common.report))
}

fn cmd_prelie(source: &str, operator: Option<&str>, common: &Common) -> Result<Outcome, Error> {
    let fixture = load_source(source, common.params.as_deref())?;
    let opts = options(common);
    let named = pick_operator(&fixture, operator)?;
    let op = rb_operator(named)?;
    let alg: HomSuperAlgebra = fixture.operator_algebra(named)?;
    let (t, induced) = rb_induced_prelie(&alg, &op, &opts)?;
    let mut sections = vec![induced];
    let (_, adjacent) = sub_adjacent(&t, &opts)?;
    sections.push(CheckReport::composite("sub-adjacent 3-hom-lie", vec![adjacent]));
    sections.push(check_corollary_identities(&t, &opts));
    if op.map.is_invertible() {
        let (_, compat) = rb_image_prelie(&alg, &op.map, &opts)?;
        sections.push(compat);
    }
    let report = CheckReport::composite(format!("3-hom-pre-lie from {} on {}", named.name, alg.name()), sections);
    Ok(Outcome::from_report(&report, common.report))
}

fn cmd_catalog_list(common: &Common) -> Outcome {
    let stdout = match common.report {
        ReportFormat::Text => {
            let mut s = String::new();
            for e in catalog::entries() {
                let params: Vec<String> = e
                    .params
                    .iter()
                    .map(|p| format!("{}={} ({})", p.name, p.default, p.constraint.describe()))
                    .collect();
                let _ = writeln!(s, "{:<8} {}", e.name, e.summary);
                if !params.is_empty() {
                    let _ = writeln!(s, "         params: {}", params.join(", "));
                }
            }
            s
        }
        ReportFormat::Structured => {
            let v: Vec<_> = catalog::entries()
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "summary": e.summary,
                        "params": e.params.iter().map(|p| json!({
                            "name": p.name,
                            "default": p.default,
                            "constraint": p.constraint.describe(),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: EXIT_PASS,
    }
}

fn cmd_catalog_show(name: &str, common: &Common) -> Result<Outcome, Error> {
    let entry = catalog::lookup(name)?;
    let params = entry.default_params().merged(&match &common.params {
        Some(p) => Params::parse(p)?,
        None => Params::new(),
    });
    let fixture = entry.build(&params)?;
    let mut out = String::new();
    let _ = writeln!(out, "# {}: {}", entry.name, entry.summary);
    let _ = writeln!(out, "# params: {params}");
    let profile: Vec<&str> = fixture.profile.iter().map(|i| i.name()).collect();
    let _ = writeln!(out, "# profile: {}", profile.join(", "));
    for n in &fixture.notes {
        let _ = writeln!(out, "# note: {n}");
    }
    out.push_str(&emit_fixture(&fixture));
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        code: EXIT_PASS,
    })
}
