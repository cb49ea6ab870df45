use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use edgesym::invariants::{
    alpha_table, rees_decomposition_check, resurgence_search, sdefect_closed_form, waldschmidt,
    waldschmidt_estimate,
};
use edgesym::verify::{run_all, VerifyConfig, DEFAULT_SEED};
use edgesym::{parse_edge_list, Budget, EdgeIdealContext, Error, FamilyKind, MonomialIdeal};
use serde_json::json;

mod report;

use report::{Format, Report, Table};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "edgesym", version, about = "Symbolic powers of edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal vertex covers.
    Covers {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Minimal generators of the t-th symbolic power.
    Sympow {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Least degrees of symbolic powers against the closed form.
    Alpha {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        smax: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Waldschmidt constant and the estimates alpha(I^(s))/s.
    Waldschmidt {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        smax: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Containment scan of I^(s) in I^t and the resulting resurgence bound.
    Resurgence {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        smax: u32,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        tmax: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Symbolic defect, counted directly and from the closed form.
    Sdefect {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Whether I^(s) is contained in I^t.
    Containment {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        t: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compares I^(s) with its known decomposition.
    ReesCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Runs every structure check and prints a pass/fail table.
    VerifyPaper {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// cycle:K, complete:N, cliquesum:N,M or edges:PATH.
    #[arg(long, value_parser = parse_family)]
    family: FamilyKind,
    /// Maximum candidate monomials per symbolic power.
    #[arg(long, default_value_t = Budget::default().max_candidates)]
    budget: usize,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_family(spec: &str) -> Result<FamilyKind, String> {
    if let Some(path) = spec.strip_prefix("edges:") {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        return parse_edge_list(&text).map_err(|e| e.to_string());
    }
    spec.parse().map_err(|e: Error| e.to_string())
}

/// A finished command: the report and whether it is complete or correct.
struct Outcome {
    report: Report,
    exit: u8,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, exit: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let output = match &cli.command {
        Command::Covers { output, .. }
        | Command::Sympow { output, .. }
        | Command::Alpha { output, .. }
        | Command::Waldschmidt { output, .. }
        | Command::Resurgence { output, .. }
        | Command::Sdefect { output, .. }
        | Command::Containment { output, .. }
        | Command::ReesCheck { output, .. }
        | Command::VerifyPaper { output, .. } => output,
    };
    let outcome = match run(&cli.command) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded(_) => EXIT_BUDGET,
                _ => EXIT_USAGE,
            };
            return ExitCode::from(code);
        }
    };
    let rendered = outcome.report.render(output.format);
    match &output.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(outcome.exit)
}

fn context(args: &FamilyArgs) -> edgesym::Result<(EdgeIdealContext, Budget)> {
    Ok((
        EdgeIdealContext::from_kind(&args.family)?,
        Budget::new(args.budget),
    ))
}

fn run(command: &Command) -> edgesym::Result<Outcome> {
    match command {
        Command::Covers { family, .. } => covers(family).map(Outcome::from),
        Command::Sympow { family, t, .. } => sympow(family, *t).map(Outcome::from),
        Command::Alpha { family, smax, .. } => alpha(family, *smax),
        Command::Waldschmidt { family, smax, .. } => waldschmidt_cmd(family, *smax),
        Command::Resurgence {
            family, smax, tmax, ..
        } => resurgence(family, *smax, *tmax),
        Command::Sdefect { family, t, .. } => sdefect(family, *t).map(Outcome::from),
        Command::Containment { family, s, t, .. } => containment(family, *s, *t).map(Outcome::from),
        Command::ReesCheck { family, s, .. } => rees_check(family, *s),
        Command::VerifyPaper { seed, .. } => Ok(verify_paper(*seed)),
    }
}

fn join(items: &[usize]) -> String {
    items
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn covers(args: &FamilyArgs) -> edgesym::Result<Report> {
    let (ctx, _) = context(args)?;
    let covers = ctx.covers().covers();
    let mut table = Table::new(&["index", "size", "cover"]);
    for (i, c) in covers.iter().enumerate() {
        table.push(vec![i.to_string(), c.len().to_string(), join(c)]);
    }
    Ok(Report {
        json: json!({
            "family": ctx.family_id().to_string(),
            "vertices": ctx.n_vars(),
            "count": covers.len(),
            "covers": covers,
        }),
        table,
        notes: vec![format!("{} minimal vertex covers", covers.len())],
    })
}

fn ideal_table(ctx: &EdgeIdealContext, ideal: &MonomialIdeal) -> Table {
    let mut table = Table::new(&["index", "degree", "monomial"]);
    for (i, g) in ideal.gens().iter().enumerate() {
        table.push(vec![
            i.to_string(),
            g.degree().to_string(),
            ctx.format_monomial(g),
        ]);
    }
    table
}

fn sympow(args: &FamilyArgs, t: u32) -> edgesym::Result<Report> {
    let (ctx, budget) = context(args)?;
    let ideal = ctx.symbolic_power_with_budget(t, budget)?;
    let alpha = ideal.alpha()?;
    Ok(Report {
        json: json!({
            "family": ctx.family_id().to_string(),
            "t": t,
            "alpha": alpha,
            "mu": ideal.mu(),
            "labels": ctx.labels(),
            "ideal": ideal,
        }),
        table: ideal_table(&ctx, &ideal),
        notes: vec![format!("alpha {alpha}, {} minimal generators", ideal.mu())],
    })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

fn partial_exit(truncated_at: Option<u32>) -> u8 {
    if truncated_at.is_some() {
        EXIT_BUDGET
    } else {
        0
    }
}

fn truncation_note(truncated_at: Option<u32>) -> Vec<String> {
    truncated_at
        .map(|s| vec![format!("partial: budget exceeded at s = {s}")])
        .unwrap_or_default()
}

fn alpha(args: &FamilyArgs, smax: u32) -> edgesym::Result<Outcome> {
    let (ctx, budget) = context(args)?;
    let table = alpha_table(&ctx, smax, budget)?;
    let mut rows = Table::new(&["s", "computed", "closed_form", "match"]);
    for r in &table.rows {
        rows.push(vec![
            r.s.to_string(),
            r.computed.to_string(),
            opt(r.closed_form),
            opt(r.matches),
        ]);
    }
    let exit = partial_exit(table.truncated_at);
    Ok(Outcome {
        report: Report {
            json: json!({
                "family": table.family.to_string(),
                "provenance": { "computed": "computed", "closed_form": "closed_form" },
                "rows": table.rows,
                "partial": table.truncated_at.is_some(),
                "truncated_at": table.truncated_at,
            }),
            table: rows,
            notes: truncation_note(table.truncated_at),
        },
        exit,
    })
}

fn waldschmidt_cmd(args: &FamilyArgs, smax: u32) -> edgesym::Result<Outcome> {
    let (ctx, budget) = context(args)?;
    let closed = waldschmidt(ctx.family_id()).ok();
    let table = alpha_table(&ctx, smax, budget)?;
    let estimates = waldschmidt_estimate(&table);
    let mut rows = Table::new(&["s", "alpha", "ratio"]);
    for (r, e) in table.rows.iter().zip(&estimates) {
        rows.push(vec![
            r.s.to_string(),
            r.computed.to_string(),
            e.ratio.to_string(),
        ]);
    }
    let mut notes = vec![format!("closed form: {}", opt(closed))];
    notes.extend(truncation_note(table.truncated_at));
    Ok(Outcome {
        report: Report {
            json: json!({
                "family": table.family.to_string(),
                "closed_form": closed.map(|r| r.to_string()),
                "closed_form_provenance": closed.map(|_| "closed_form"),
                "estimates": estimates,
                "estimates_provenance": "computed",
                "partial": table.truncated_at.is_some(),
                "truncated_at": table.truncated_at,
            }),
            table: rows,
            notes,
        },
        exit: partial_exit(table.truncated_at),
    })
}

fn resurgence(args: &FamilyArgs, smax: u32, tmax: u32) -> edgesym::Result<Outcome> {
    let (ctx, budget) = context(args)?;
    let report = resurgence_search(&ctx, smax, tmax, budget)?;
    let mut rows = Table::new(&["s", "t", "contained", "alpha_symbolic", "alpha_criterion"]);
    for c in &report.grid {
        rows.push(vec![
            c.s.to_string(),
            c.t.to_string(),
            c.contained.to_string(),
            c.alpha_symbolic.to_string(),
            c.alpha_criterion.to_string(),
        ]);
    }
    let mut notes = vec![
        format!("lower bound (computed): {}", opt(report.lower_bound)),
        format!("closed form: {}", opt(report.closed_form)),
    ];
    if let Some(sup) = &report.formula_sup {
        notes.push(format!(
            "formula-derived sup over s <= {}: {} at {:?}",
            sup.s_limit, sup.sup, sup.attained_at
        ));
    }
    notes.extend(truncation_note(report.truncated_at));
    let exit = partial_exit(report.truncated_at);
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json["family"] = json!(report.family.to_string());
    json["partial"] = json!(report.truncated_at.is_some());
    json["lower_bound_provenance"] = json!("computed");
    if report.closed_form.is_some() {
        json["closed_form_provenance"] = json!("closed_form");
    }
    Ok(Outcome {
        report: Report {
            json,
            table: rows,
            notes,
        },
        exit,
    })
}

fn sdefect(args: &FamilyArgs, t: u32) -> edgesym::Result<Report> {
    let (ctx, budget) = context(args)?;
    ctx.symbolic_power_with_budget(t, budget)?;
    let generators = ctx.sdefect_generators(t)?;
    let direct = generators.len();
    let closed = sdefect_closed_form(ctx.family_id(), t).ok();
    let matches = closed.map(|c| c == direct as u64);
    let mut table = Table::new(&["t", "direct", "closed_form", "match"]);
    table.push(vec![
        t.to_string(),
        direct.to_string(),
        opt(closed),
        opt(matches),
    ]);
    let literals: Vec<String> = generators.iter().map(|g| ctx.format_monomial(g)).collect();
    Ok(Report {
        json: json!({
            "family": ctx.family_id().to_string(),
            "t": t,
            "sdefect": direct,
            "sdefect_provenance": "computed",
            "closed_form": closed,
            "closed_form_provenance": closed.map(|_| "closed_form"),
            "matches": matches,
            "generators": literals,
        }),
        table,
        notes: Vec::new(),
    })
}

fn containment(args: &FamilyArgs, s: u32, t: u32) -> edgesym::Result<Report> {
    let (ctx, budget) = context(args)?;
    let sym = ctx.symbolic_power_with_budget(s, budget)?;
    let witness = sym.gens().iter().find(|g| !ctx.power_member(g, t));
    let contained = witness.is_none();
    let literal = witness.map(|w| ctx.format_monomial(w));
    let mut table = Table::new(&["s", "t", "contained", "witness"]);
    table.push(vec![
        s.to_string(),
        t.to_string(),
        contained.to_string(),
        literal.clone().unwrap_or_default(),
    ]);
    Ok(Report {
        json: json!({
            "family": ctx.family_id().to_string(),
            "s": s,
            "t": t,
            "contained": contained,
            "witness": literal,
        }),
        table,
        notes: Vec::new(),
    })
}

fn rees_check(args: &FamilyArgs, s: u32) -> edgesym::Result<Outcome> {
    let (ctx, budget) = context(args)?;
    ctx.symbolic_power_with_budget(s, budget)?;
    let check = rees_decomposition_check(&ctx, s)?;
    let fmt = |gens: &[edgesym::Monomial]| -> Vec<String> {
        gens.iter().map(|g| ctx.format_monomial(g)).collect()
    };
    let only_symbolic = fmt(&check.comparison.only_left);
    let only_decomposition = fmt(&check.comparison.only_right);
    let mut table = Table::new(&[
        "s",
        "equal",
        "symbolic_generators",
        "decomposition_generators",
    ]);
    table.push(vec![
        s.to_string(),
        check.comparison.equal.to_string(),
        check.lhs_generators.to_string(),
        check.rhs_generators.to_string(),
    ]);
    let mut notes = Vec::new();
    for g in &only_symbolic {
        notes.push(format!("only in I^({s}): {g}"));
    }
    for g in &only_decomposition {
        notes.push(format!("only in decomposition: {g}"));
    }
    Ok(Outcome {
        exit: if check.comparison.equal {
            0
        } else {
            EXIT_VERIFY_FAILED
        },
        report: Report {
            json: json!({
                "family": check.family.to_string(),
                "s": s,
                "equal": check.comparison.equal,
                "symbolic_generators": check.lhs_generators,
                "decomposition_generators": check.rhs_generators,
                "only_symbolic": only_symbolic,
                "only_decomposition": only_decomposition,
            }),
            table,
            notes,
        },
    })
}

fn verify_paper(seed: u64) -> Outcome {
    let config = VerifyConfig {
        seed,
        ..VerifyConfig::default()
    };
    let outcomes = run_all(&config);
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let all = passed == outcomes.len();
    let mut table = Table::new(&["id", "status", "anchor", "detail"]);
    for o in &outcomes {
        table.push(vec![
            o.id.to_string(),
            if o.passed { "PASS" } else { "FAIL" }.to_string(),
            o.anchor.to_string(),
            o.detail.clone(),
        ]);
    }
    Outcome {
        report: Report {
            json: json!({
                "seed": seed,
                "passed": passed,
                "total": outcomes.len(),
                "all_passed": all,
                "checks": outcomes,
            }),
            table,
            notes: vec![format!("{passed}/{} checks passed", outcomes.len())],
        },
        exit: if all { 0 } else { EXIT_VERIFY_FAILED },
    }
}
