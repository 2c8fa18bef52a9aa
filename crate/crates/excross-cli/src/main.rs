//! excross: construct S(G), partial actions and their crossed products, and
//! run the exact verification suites from the command line.
//!
//! Exit codes: 0 all requested checks passed, 1 a check failed, 2 bad input.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use excross::action::{AlgebraPartialAction, SetPartialAction, SgAction};
use excross::crossed::{
    build_isomorphism, build_l_algebra, contractivity_spot_check, natural_covariant_rep,
    validate_covariant, CrossedError, GroupCrossedProduct, SgCrossedProduct,
};
use excross::io::{
    matrix_to_strings, parse_action_doc, resolve_group_spec, ActionDoc, AlgebraDoc, GroupDoc,
    SgTableDoc, REPORT_SCHEMA,
};
use excross::oracle;
use excross::report::Report;
use excross::semigroup::{self, SgTable};
use excross::GroupTable;

#[derive(Parser)]
#[command(
    name = "excross",
    version,
    about = "Exact crossed-product computations for partial group actions and S(G)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The inverse semigroup S(G): enumeration, tables, oracle certification
    Sg {
        #[command(subcommand)]
        cmd: SgCmd,
    },
    /// Partial actions: validation and induced S(G)-actions
    Action {
        #[command(subcommand)]
        cmd: ActionCmd,
    },
    /// Crossed-product builds and exports
    Cp {
        #[command(subcommand)]
        cmd: CpCmd,
    },
    /// Verification suites
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format; defaults to the --out extension (.json/.csv) or text
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if let Some(f) = self.format {
            return f;
        }
        match self
            .out
            .as_ref()
            .and_then(|p| p.extension())
            .and_then(|e| e.to_str())
        {
            Some("json") => Format::Json,
            Some("csv") => Format::Csv,
            _ => Format::Text,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Level {
    Quick,
    Exhaustive,
}

#[derive(Subcommand)]
enum SgCmd {
    /// List all elements of S(G) in standard form
    Enumerate {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Export the full multiplication table of S(G)
    Table {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Certify the normal-form multiplication table against the
    /// word-rewriting oracle
    OracleCheck {
        #[arg(long)]
        group: String,
        /// Global word-length cap; switches to direct per-pair closures and
        /// skips pairs that do not fit (reported). Without it, every pair is
        /// certified through single-generator steps.
        #[arg(long)]
        max_word_len: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum ActionCmd {
    /// Check the partial-action axioms, with witnesses on failure
    Validate {
        #[command(flatten)]
        source: ActionSource,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the induced S(G)-action and print E_s / β_s data
    Induce {
        #[command(flatten)]
        source: ActionSource,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum CpCmd {
    /// Build A⋊ᵃ_αG and export its structure constants
    Group {
        #[command(flatten)]
        source: ActionSource,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build L, N and the quotient A⋊ᵃ_βS(G)
    Semigroup {
        #[command(flatten)]
        source: ActionSource,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Verify that φ and ψ̃ are mutually inverse multiplicative *-maps
    Iso {
        #[command(flatten)]
        source: ActionSource,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustive associativity of A⋊ᵃ_αG and L, plus ideal idempotency
    Assoc {
        #[command(flatten)]
        source: ActionSource,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Covariant-representation checks for the natural representation
    Covariant {
        #[command(flatten)]
        source: ActionSource,
        /// Seed for the contractivity spot check
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Everything: axioms, monotonicity, associativity, isomorphism,
    /// quotient identities, covariance, contractivity
    All {
        #[command(flatten)]
        source: ActionSource,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// quick skips the covariant and contractivity suites
        #[arg(long, value_enum, default_value_t = Level::Exhaustive)]
        level: Level,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct ActionSource {
    /// Action document (set level or algebra level)
    #[arg(long)]
    action: Option<PathBuf>,
    /// Algebra-level action document (alias for --action)
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// Group preset or group JSON path (needed when the document has none)
    #[arg(long)]
    group: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Enumeration bound for S(G); EXCROSS_MAX_GROUP_ORDER overrides.
fn enum_bound() -> usize {
    std::env::var("EXCROSS_MAX_GROUP_ORDER")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(semigroup::DEFAULT_ENUM_BOUND)
}

#[derive(Serialize)]
struct RunReport {
    schema: String,
    command: String,
    group: Option<String>,
    dimensions: BTreeMap<String, usize>,
    stats: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
    reports: Vec<Report>,
    passed: bool,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            schema: REPORT_SCHEMA.to_string(),
            command: command.to_string(),
            group: None,
            dimensions: BTreeMap::new(),
            stats: BTreeMap::new(),
            notes: Vec::new(),
            reports: Vec::new(),
            passed: true,
        }
    }

    fn add_report(&mut self, r: Report) {
        self.passed &= r.passed();
        self.reports.push(r);
    }

    fn dim(&mut self, key: &str, value: usize) {
        self.dimensions.insert(key.to_string(), value);
    }

    fn stat(&mut self, key: &str, value: serde_json::Value) {
        self.stats.insert(key.to_string(), value);
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.command));
        if let Some(g) = &self.group {
            out.push_str(&format!("group: {g}\n"));
        }
        for (k, v) in &self.dimensions {
            out.push_str(&format!("dim {k} = {v}\n"));
        }
        for (k, v) in &self.stats {
            // scalar stats only; structured data is for the JSON output
            if !(v.is_array() || v.is_object()) {
                out.push_str(&format!("{k} = {v}\n"));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("{n}\n"));
        }
        for r in &self.reports {
            out.push_str(&format!("{r}"));
        }
        out.push_str(if self.passed {
            "RESULT: pass\n"
        } else {
            "RESULT: FAIL\n"
        });
        out
    }
}

fn emit(report: &RunReport, output: &OutputArgs) -> anyhow::Result<()> {
    let text = match output.format() {
        Format::Json => serde_json::to_string_pretty(report)? + "\n",
        Format::Text | Format::Csv => report.render_text(),
    };
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_value<T: Serialize>(value: &T, text: String, output: &OutputArgs) -> anyhow::Result<()> {
    let rendered = match output.format() {
        Format::Json => serde_json::to_string_pretty(value)? + "\n",
        Format::Text | Format::Csv => text,
    };
    match &output.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(())
}

enum LoadedAction {
    Set(SetPartialAction),
    Algebra(AlgebraPartialAction),
}

impl LoadedAction {
    fn algebra_action(&self) -> anyhow::Result<AlgebraPartialAction> {
        match self {
            LoadedAction::Set(p) => Ok(p.induce_algebra_action()?),
            LoadedAction::Algebra(a) => Ok(a.clone()),
        }
    }

    fn group(&self) -> &GroupTable {
        match self {
            LoadedAction::Set(p) => p.group(),
            LoadedAction::Algebra(a) => a.group(),
        }
    }
}

fn load_action(source: &ActionSource) -> anyhow::Result<LoadedAction> {
    let path = source
        .action
        .as_ref()
        .or(source.algebra.as_ref())
        .ok_or_else(|| anyhow::anyhow!("an --action (or --algebra) document is required"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    let doc = parse_action_doc(&path.display().to_string(), &text)?;
    let group_override = match &source.group {
        Some(spec) => Some(resolve_group_spec(spec)?),
        None => None,
    };
    Ok(match doc {
        ActionDoc::Set(d) => LoadedAction::Set(d.build(group_override)?),
        ActionDoc::Algebra(d) => LoadedAction::Algebra(d.build(group_override)?),
    })
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Sg { cmd } => run_sg(cmd),
        Command::Action { cmd } => run_action(cmd),
        Command::Cp { cmd } => run_cp(cmd),
        Command::Check { cmd } => run_check(cmd),
    }
}

fn run_sg(cmd: SgCmd) -> anyhow::Result<bool> {
    match cmd {
        SgCmd::Enumerate { group, output } => {
            let g = resolve_group_spec(&group)?;
            let elements = semigroup::enumerate_with_bound(&g, enum_bound())?;
            #[derive(Serialize)]
            struct EnumDoc {
                schema: String,
                group: GroupDoc,
                count: usize,
                elements: Vec<String>,
            }
            let doc = EnumDoc {
                schema: "excross-sg-elements/1".into(),
                group: GroupDoc::from_group(&g),
                count: elements.len(),
                elements: elements.iter().map(|e| e.render(&g)).collect(),
            };
            let mut text = format!(
                "S(G) for group of order {}: {} elements\n",
                g.order(),
                doc.count
            );
            for e in &doc.elements {
                text.push_str(&format!("  {e}\n"));
            }
            emit_value(&doc, text, &output)?;
            Ok(true)
        }
        SgCmd::Table { group, output } => {
            let g = resolve_group_spec(&group)?;
            let table = SgTable::build(&g, enum_bound())?;
            let doc = SgTableDoc::from_table(&g, &table);
            let mut text = String::new();
            if output.format() == Format::Csv {
                text.push_str("left,right,product\n");
                for (i, row) in doc.table.iter().enumerate() {
                    for (j, &k) in row.iter().enumerate() {
                        text.push_str(&format!(
                            "\"{}\",\"{}\",\"{}\"\n",
                            doc.elements[i], doc.elements[j], doc.elements[k]
                        ));
                    }
                }
            } else {
                text.push_str(&format!("{} elements\n", doc.elements.len()));
                for (i, row) in doc.table.iter().enumerate() {
                    text.push_str(&format!("{}: {:?}\n", doc.elements[i], row));
                }
            }
            emit_value(&doc, text, &output)?;
            Ok(true)
        }
        SgCmd::OracleCheck {
            group,
            max_word_len,
            output,
        } => {
            let g = resolve_group_spec(&group)?;
            let table = SgTable::build(&g, enum_bound())?;
            let cert = match max_word_len {
                Some(cap) => oracle::certify_table_direct(
                    &g,
                    &table,
                    Some(cap),
                    oracle::DEFAULT_NODE_BUDGET,
                )?,
                None => oracle::certify_table_stepwise(&g, &table, oracle::DEFAULT_NODE_BUDGET)?,
            };
            let mut run = RunReport::new("sg oracle-check");
            run.group = Some(format!("order {}", g.order()));
            run.stat("mode", serde_json::json!(cert.mode));
            run.stat("pairs", serde_json::json!(cert.pairs));
            run.stat("pairs_checked", serde_json::json!(cert.pairs_checked));
            run.stat(
                "pairs_skipped_by_bound",
                serde_json::json!(cert.pairs_skipped_by_bound),
            );
            run.stat(
                "agreement_percent",
                serde_json::json!(cert.agreement_percent()),
            );
            let mut rep = Report::new("oracle certification");
            let all_checked_agree =
                cert.pairs_checked > 0 && cert.pairs_agreed == cert.pairs_checked;
            rep.push(
                format!(
                    "agreement {}% on {} checked pairs ({} skipped by bound)",
                    cert.agreement_percent(),
                    cert.pairs_checked,
                    cert.pairs_skipped_by_bound
                ),
                all_checked_agree,
                None,
            );
            run.add_report(rep);
            emit(&run, &output)?;
            Ok(run.passed)
        }
    }
}

fn run_action(cmd: ActionCmd) -> anyhow::Result<bool> {
    match cmd {
        ActionCmd::Validate { source, output } => {
            let loaded = load_action(&source)?;
            let mut run = RunReport::new("action validate");
            run.group = Some(format!("order {}", loaded.group().order()));
            match &loaded {
                LoadedAction::Set(p) => {
                    run.dim("X", p.base_size());
                    let report = p.validate();
                    let passed = report.passed();
                    run.add_report(report);
                    if passed {
                        let alg = p.induce_algebra_action()?;
                        run.add_report(alg.validate());
                        run.add_report(alg.validate_star());
                    }
                }
                LoadedAction::Algebra(a) => {
                    run.dim("A", a.algebra().dim());
                    run.add_report(a.validate());
                }
            }
            emit(&run, &output)?;
            Ok(run.passed)
        }
        ActionCmd::Induce { source, output } => {
            let loaded = load_action(&source)?;
            let alg = loaded.algebra_action()?;
            let b = alg.to_sg_action(enum_bound())?;
            let mut run = RunReport::new("action induce");
            run.group = Some(format!("order {}", b.group().order()));
            run.dim("A", b.algebra().dim());
            run.dim("S(G)", b.elements().len());
            #[derive(Serialize)]
            struct ESpaceDoc {
                element: String,
                dim: usize,
                basis: Vec<Vec<String>>,
                beta: Vec<Vec<String>>,
            }
            let spaces: Vec<ESpaceDoc> = b
                .elements()
                .iter()
                .enumerate()
                .map(|(i, s)| ESpaceDoc {
                    element: s.render(b.group()),
                    dim: b.e_space(i).dim(),
                    basis: matrix_to_strings(b.e_space(i).basis()),
                    beta: matrix_to_strings(b.beta(i)),
                })
                .collect();
            for s in &spaces {
                run.notes.push(format!("E_{}: dim {}", s.element, s.dim));
            }
            run.stat("e_spaces", serde_json::to_value(&spaces)?);
            run.add_report(b.validate());
            emit(&run, &output)?;
            Ok(run.passed)
        }
    }
}

fn run_cp(cmd: CpCmd) -> anyhow::Result<bool> {
    match cmd {
        CpCmd::Group { source, output } => {
            let alg = load_action(&source)?.algebra_action()?;
            let cp = GroupCrossedProduct::build(alg)?;
            emit_structure("cp group", cp.algebra(), None, &output)
        }
        CpCmd::Semigroup { source, output } => {
            let alg = load_action(&source)?.algebra_action()?;
            let b = alg.to_sg_action(enum_bound())?;
            let scp = match SgCrossedProduct::build(b) {
                Ok(scp) => scp,
                Err(CrossedError::NonAssociativeL(x, y, z)) => {
                    // a failed theorem check, not a usage error
                    let mut run = RunReport::new("cp semigroup");
                    let mut rep = Report::new("L construction");
                    rep.push_fail("L is associative", format!("witness triple ({x}, {y}, {z})"));
                    run.add_report(rep);
                    emit(&run, &output)?;
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            };
            let extra = Some((scp.l_dim(), scp.n_ideal().dim()));
            emit_structure(
                "cp semigroup (quotient L/N)",
                scp.quotient(),
                extra,
                &output,
            )
        }
    }
}

fn emit_structure(
    title: &str,
    algebra: &excross::StructureAlgebra,
    l_and_n: Option<(usize, usize)>,
    output: &OutputArgs,
) -> anyhow::Result<bool> {
    #[derive(Serialize)]
    struct StructureDoc {
        schema: String,
        title: String,
        dim: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        dim_l: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        dim_n: Option<usize>,
        algebra: AlgebraDoc,
    }
    let doc = StructureDoc {
        schema: "excross-structure/1".into(),
        title: title.into(),
        dim: algebra.dim(),
        dim_l: l_and_n.map(|x| x.0),
        dim_n: l_and_n.map(|x| x.1),
        algebra: AlgebraDoc::from_algebra(algebra),
    };
    let mut text = format!("# {title}\ndim = {}\n", doc.dim);
    if let (Some(l), Some(n)) = (doc.dim_l, doc.dim_n) {
        text.push_str(&format!("dim L = {l}, dim N = {n}\n"));
    }
    if output.format() == Format::Csv {
        text = String::from("left,right,product\n");
        for i in 0..algebra.dim() {
            for j in 0..algebra.dim() {
                text.push_str(&format!(
                    "\"{}\",\"{}\",\"{}\"\n",
                    algebra.labels()[i],
                    algebra.labels()[j],
                    algebra.render_combination(&algebra.mult_basis_dense(i, j))
                ));
            }
        }
    } else {
        for i in 0..algebra.dim() {
            for j in 0..algebra.dim() {
                let v = algebra.mult_basis_dense(i, j);
                if !excross::StructureAlgebra::is_zero_vec(&v) {
                    text.push_str(&format!(
                        "{} · {} = {}\n",
                        algebra.labels()[i],
                        algebra.labels()[j],
                        algebra.render_combination(&v)
                    ));
                }
            }
        }
    }
    emit_value(&doc, text, output)?;
    Ok(true)
}

fn run_check(cmd: CheckCmd) -> anyhow::Result<bool> {
    match cmd {
        CheckCmd::Iso { source, output } => {
            let alg = load_action(&source)?.algebra_action()?;
            let mut run = RunReport::new("check iso");
            run.group = Some(format!("order {}", alg.group().order()));
            check_iso_into(&alg, &mut run)?;
            emit(&run, &output)?;
            Ok(run.passed)
        }
        CheckCmd::Assoc { source, output } => {
            let alg = load_action(&source)?.algebra_action()?;
            let mut run = RunReport::new("check assoc");
            run.group = Some(format!("order {}", alg.group().order()));
            check_assoc_into(&alg, &mut run)?;
            emit(&run, &output)?;
            Ok(run.passed)
        }
        CheckCmd::Covariant {
            source,
            seed,
            output,
        } => {
            let loaded = load_action(&source)?;
            let LoadedAction::Set(p) = &loaded else {
                anyhow::bail!("check covariant requires a set-level action document");
            };
            let mut run = RunReport::new("check covariant");
            run.group = Some(format!("order {}", p.group().order()));
            check_covariant_into(p, seed, &mut run)?;
            emit(&run, &output)?;
            Ok(run.passed)
        }
        CheckCmd::All {
            source,
            seed,
            level,
            output,
        } => {
            let loaded = load_action(&source)?;
            let mut run = RunReport::new("check all");
            run.group = Some(format!("order {}", loaded.group().order()));
            match &loaded {
                LoadedAction::Set(p) => {
                    run.add_report(p.validate());
                    let alg = p.induce_algebra_action()?;
                    run.add_report(alg.validate_star());
                    check_assoc_into(&alg, &mut run)?;
                    check_iso_into(&alg, &mut run)?;
                    if level == Level::Exhaustive {
                        check_covariant_into(p, seed, &mut run)?;
                    }
                }
                LoadedAction::Algebra(a) => {
                    run.add_report(a.validate());
                    check_assoc_into(a, &mut run)?;
                    if run.passed {
                        check_iso_into(a, &mut run)?;
                    }
                }
            }
            emit(&run, &output)?;
            Ok(run.passed)
        }
    }
}

/// Associativity of A⋊ᵃ_αG and of L, plus the ideal-idempotency condition.
fn check_assoc_into(alg: &AlgebraPartialAction, run: &mut RunReport) -> anyhow::Result<()> {
    run.add_report(alg.ideals_idempotent_report());
    let mut rep = Report::new("exhaustive basis-triple associativity");
    let cp = GroupCrossedProduct::build(alg.clone())?;
    run.dim("A⋊G", cp.dim());
    match cp.algebra().check_associativity() {
        None => rep.push_pass(format!("A⋊ᵃG associative ({} triples)", cp.dim().pow(3))),
        Some((i, j, k)) => rep.push_fail(
            "A⋊ᵃG associative",
            format!(
                "witness triple ({}, {}, {})",
                cp.algebra().labels()[i],
                cp.algebra().labels()[j],
                cp.algebra().labels()[k]
            ),
        ),
    }
    let b = alg.to_sg_action(enum_bound())?;
    let (l, _, _) = build_l_algebra(&b)?;
    run.dim("L", l.dim());
    match l.check_associativity() {
        None => rep.push_pass(format!("L associative ({} triples)", l.dim().pow(3))),
        Some((i, j, k)) => rep.push_fail(
            "L associative",
            format!(
                "witness triple ({}, {}, {})",
                l.labels()[i],
                l.labels()[j],
                l.labels()[k]
            ),
        ),
    }
    run.add_report(rep);
    Ok(())
}

/// S(G)-action checks plus the crossed-product isomorphism suite.
fn check_iso_into(alg: &AlgebraPartialAction, run: &mut RunReport) -> anyhow::Result<()> {
    let b: SgAction = alg.to_sg_action(enum_bound())?;
    run.dim("S(G)", b.elements().len());
    run.add_report(b.validate());
    if alg.algebra().involution().is_some() {
        run.add_report(b.validate_star());
    }
    run.add_report(b.check_e_monotone());
    run.add_report(b.check_bracket_intersections());

    let mut round_trip = Report::new("bijection round trips");
    let back = b.restrict_to_group()?;
    round_trip.push("restrict(induce(α)) = α", &back == alg, None);
    let again = back.to_sg_action(enum_bound())?;
    round_trip.push("induce(restrict(β)) = β", again == b, None);
    run.add_report(round_trip);

    let cp = GroupCrossedProduct::build(alg.clone())?;
    let scp = match SgCrossedProduct::build(b) {
        Ok(scp) => scp,
        Err(CrossedError::NonAssociativeL(a, b_, c)) => {
            let mut rep = Report::new("crossed-product isomorphism checks");
            rep.push_fail(
                "L is associative",
                format!("witness triple ({a}, {b_}, {c})"),
            );
            run.add_report(rep);
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    run.dim("A⋊G", cp.dim());
    run.dim("L", scp.l_dim());
    run.dim("N", scp.n_ideal().dim());
    run.dim("L/N", scp.quotient().dim());
    let mut nrep = Report::new("ideal N closure certification");
    nrep.push(
        "independent reversed-order closure agrees",
        scp.certify_n_closure()?,
        None,
    );
    run.add_report(nrep);
    run.add_report(scp.check_quotient_identities());
    let iso = build_isomorphism(&cp, &scp)?;
    run.add_report(iso.report);
    Ok(())
}

/// Natural covariant representation, π×ν, and the contractivity spot check.
fn check_covariant_into(
    p: &SetPartialAction,
    seed: u64,
    run: &mut RunReport,
) -> anyhow::Result<()> {
    let alg = p.induce_algebra_action()?;
    let b = alg.to_sg_action(enum_bound())?;
    let scp = SgCrossedProduct::build(b)?;
    let rep = natural_covariant_rep(p, scp.action())?;
    run.add_report(validate_covariant(&rep, scp.action()));
    run.add_report(scp.check_pi_times_nu(&rep));
    let outcome = contractivity_spot_check(&scp, &rep, seed, 100, 200, 1e-9)?;
    run.stat("contractivity", serde_json::to_value(&outcome)?);
    let mut crep = Report::new("contractivity spot check");
    crep.push(
        format!(
            "‖(π×ν)(x)‖ ≤ ‖x‖₁ + 1e-9 on {} seeded samples (max excess {:e})",
            outcome.samples, outcome.max_excess
        ),
        outcome.pass,
        None,
    );
    run.add_report(crep);
    Ok(())
}
