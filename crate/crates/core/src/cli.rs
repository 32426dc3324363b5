//! Command-line front end.
//!
//! Every subcommand prints one JSON document (or one JSON line per input graph
//! in batch mode) holding the resolved invocation and the result. Exit codes:
//! 0 success, 1 counterexample or explicit none, 2 usage or input error,
//! 3 search budget exhausted.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::construct::{
    canonical_iasi, contraction_labeling, corona_labeling, induced_labeling,
    line_graph_labeling, minor_labeling, rooted_labeling, strongly_uniform_iasi,
    subdivision_labeling, total_graph_labeling, two_uniform_iasi, weakly_uniform_iasi,
    ConstructionOutcome, Operation, Target, UniformOutcome,
};
use crate::graph::{parse_graph6, to_dot, write_graph6, Graph, MinorStep, ProductKind};
use crate::intset::IntegerSet;
use crate::labeling::SetLabeling;
use crate::oracle::{self, CheckId, Corpus, Verdict};
use crate::search::{self, CertificateKind, EdgeConstraint, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "iasi", version, about = "Integer additive set-labelings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a labeling of one graph, or of a graph derived from it.
    Construct(ConstructArgs),
    /// Classify a given labeling.
    Classify(ClassifyArgs),
    /// Smallest ground set admitting a set-indexer.
    Minsize(MinsizeArgs),
    /// Search for a k-uniform (or weakly/strongly k-uniform) set-indexer.
    Uniform(UniformArgs),
    /// Run oracle checks.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
    /// Label the result of a binary operation on two labeled graphs.
    Product(ProductArgs),
    /// Convert a graph (and optional labels) between formats.
    Convert(ConvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args, Debug, Serialize)]
struct GraphInput {
    /// graph6 string, or @path to a file with one graph6 string per line.
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Process batch lines one at a time.
    #[arg(long)]
    #[serde(skip)]
    serial: bool,
}

#[derive(Args, Debug, Serialize)]
struct SearchBounds {
    #[arg(long, default_value_t = 8)]
    element_bound: u64,
    #[arg(long, default_value_t = 4)]
    size_bound: usize,
    #[arg(long, default_value_t = 60_000)]
    budget_ms: u64,
}

impl SearchBounds {
    fn config(&self, serial: bool) -> SearchConfig {
        SearchConfig {
            element_bound: self.element_bound,
            size_bound: self.size_bound,
            time_budget_ms: self.budget_ms,
            parallel: !serial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Method {
    Canonical,
    TwoUniform,
    WeaklyUniform,
    StronglyUniform,
    Complement,
    LineGraph,
    TotalGraph,
    Subdivide,
    Contract,
    Minor,
}

#[derive(Args, Debug, Serialize)]
struct ConstructArgs {
    #[command(flatten)]
    #[serde(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value = "canonical")]
    method: Method,
    /// Edge label size for the uniform methods.
    #[arg(long)]
    k: Option<usize>,
    /// Source labels as a JSON array of arrays (or @path); the canonical
    /// labeling when omitted.
    #[arg(long)]
    labels: Option<String>,
    /// Edge `u,v` for subdivide and contract.
    #[arg(long)]
    edge: Option<String>,
    /// Minor script as JSON, e.g. '[{"delete_edge":[0,1]},{"contract":[0,2]}]'.
    #[arg(long)]
    script: Option<String>,
    #[arg(long, value_enum, default_value = "iasi")]
    target: TargetArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum TargetArg {
    Iasl,
    Iasi,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::Iasl => Target::Iasl,
            TargetArg::Iasi => Target::Iasi,
        }
    }
}

#[derive(Args, Debug, Serialize)]
struct ClassifyArgs {
    #[command(flatten)]
    #[serde(flatten)]
    input: GraphInput,
    /// Labels as a JSON array of arrays, or @path.
    #[arg(long)]
    labels: String,
}

#[derive(Args, Debug, Serialize)]
struct MinsizeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    input: GraphInput,
    #[command(flatten)]
    #[serde(flatten)]
    bounds: SearchBounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum UniformKind {
    Any,
    Weak,
    Strong,
}

#[derive(Args, Debug, Serialize)]
struct UniformArgs {
    #[command(flatten)]
    #[serde(flatten)]
    input: GraphInput,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "any")]
    kind: UniformKind,
    #[command(flatten)]
    #[serde(flatten)]
    bounds: SearchBounds,
}

#[derive(Subcommand, Debug)]
enum OracleAction {
    /// Run one check by id, or `all`.
    Run(OracleRunArgs),
    /// List the registered check ids.
    List,
}

#[derive(Args, Debug, Serialize)]
struct OracleRunArgs {
    id: String,
    /// Override the largest vertex count of the default corpus.
    #[arg(long)]
    max_n: Option<usize>,
    #[command(flatten)]
    #[serde(flatten)]
    bounds: SearchBounds,
    #[arg(long)]
    #[serde(skip)]
    serial: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum BinaryOp {
    Union,
    Join,
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
    Corona,
    Rooted,
}

#[derive(Args, Debug, Serialize)]
struct ProductArgs {
    #[arg(long, value_enum)]
    kind: BinaryOp,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    /// Labels of the left operand (canonical when omitted).
    #[arg(long)]
    left_labels: Option<String>,
    /// Labels of the right operand (canonical when omitted).
    #[arg(long)]
    right_labels: Option<String>,
    /// Shared vertices for union as JSON pairs, e.g. '[[1,0]]'.
    #[arg(long)]
    shared: Option<String>,
    /// Root vertex of the right operand for the rooted product.
    #[arg(long, default_value_t = 0)]
    root: usize,
    #[arg(long, value_enum, default_value = "iasl")]
    target: TargetArg,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug, Serialize)]
struct ConvertArgs {
    #[command(flatten)]
    #[serde(flatten)]
    input: GraphInput,
    #[arg(long)]
    labels: Option<String>,
}

/// Input or usage failure, reported with exit code 2.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(Value, i32), Failure>;

/// Parses `args` (program name first), runs the subcommand and writes its
/// output to `out`. Returns the exit code.
pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch<W: Write>(command: Command, out: &mut W) -> Result<i32, Failure> {
    match command {
        Command::Construct(a) => batch(out, "construct", &a, &a.input, |g| construct_one(&a, g)),
        Command::Classify(a) => batch(out, "classify", &a, &a.input, |g| classify_one(&a, g)),
        Command::Minsize(a) => batch(out, "minsize", &a, &a.input, |g| minsize_one(&a, g)),
        Command::Uniform(a) => batch(out, "uniform", &a, &a.input, |g| uniform_one(&a, g)),
        Command::Convert(a) => batch(out, "convert", &a, &a.input, |g| convert_one(&a, g)),
        Command::Product(a) => {
            let (value, code) = product(&a)?;
            emit(out, "product", &a, a.format, value, None)?;
            Ok(code)
        }
        Command::Oracle { action: OracleAction::List } => {
            let list: Vec<Value> = CheckId::ALL
                .iter()
                .map(|id| serde_json::json!({"id": id.as_str(), "statement": id.statement()}))
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&Value::Array(list))?)?;
            Ok(EXIT_OK)
        }
        Command::Oracle { action: OracleAction::Run(a) } => {
            let (value, code) = oracle_run(&a)?;
            emit(out, "oracle", &a, Format::Json, value, None)?;
            Ok(code)
        }
    }
}

/// One input graph with the line it came from.
struct Line {
    number: usize,
    graph: Graph,
}

fn read_graphs(spec: &str) -> Result<(Vec<Line>, bool), Failure> {
    let (text, from_file) = match spec.strip_prefix('@') {
        Some(path) => (
            std::fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))?,
            true,
        ),
        None => (spec.to_string(), false),
    };
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let graph = parse_graph6(raw.trim_end())
            .map_err(|e| Failure(format!("line {}, byte {}: {}", i + 1, e.offset, e.kind)))?;
        lines.push(Line { number: i + 1, graph });
    }
    if lines.is_empty() {
        return Err(Failure("no graph given".into()));
    }
    Ok((lines, from_file))
}

fn read_text(spec: &str) -> Result<String, Failure> {
    match spec.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}"))),
        None => Ok(spec.to_string()),
    }
}

fn parse_labels(spec: &str, g: &Graph) -> Result<SetLabeling, Failure> {
    let text = read_text(spec)?;
    let labels: Vec<IntegerSet> =
        serde_json::from_str(&text).map_err(|e| Failure(format!("labels, line {}, column {}: {e}", e.line(), e.column())))?;
    Ok(SetLabeling::new(g.clone(), labels)?)
}

fn labels_or_canonical(spec: Option<&str>, g: &Graph) -> Result<SetLabeling, Failure> {
    match spec {
        Some(s) => parse_labels(s, g),
        None => Ok(canonical_iasi(g)?.labeling),
    }
}

fn parse_edge(spec: Option<&str>) -> Result<(usize, usize), Failure> {
    let spec = spec.ok_or_else(|| Failure("--edge u,v is required".into()))?;
    let (u, v) = spec.split_once(',').ok_or_else(|| Failure(format!("edge {spec:?} is not u,v")))?;
    Ok((u.trim().parse()?, v.trim().parse()?))
}

/// Runs `job` on every input graph and prints the results, one JSON document
/// for a single inline graph and one line per graph for a file.
fn batch<W: Write, A: Serialize + Sync>(
    out: &mut W,
    name: &str,
    args: &A,
    input: &GraphInput,
    job: impl Fn(&Graph) -> Outcome + Sync,
) -> Result<i32, Failure> {
    let (lines, from_file) = read_graphs(&input.graph)?;
    let results: Vec<Outcome> = if input.serial {
        lines.iter().map(|l| job(&l.graph)).collect()
    } else {
        lines.par_iter().map(|l| job(&l.graph)).collect()
    };
    let mut code = EXIT_OK;
    for (line, result) in lines.iter().zip(results) {
        let (value, c) = result.map_err(|Failure(m)| Failure(format!("line {}: {m}", line.number)))?;
        code = code.max(c);
        let number = from_file.then_some(line.number);
        emit(out, name, args, input.format, value, number)?;
    }
    Ok(code)
}

fn emit<W: Write, A: Serialize>(
    out: &mut W,
    name: &str,
    args: &A,
    format: Format,
    value: Value,
    line: Option<usize>,
) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let mut doc = serde_json::json!({"command": name, "invocation": args});
            if let Some(n) = line {
                doc["line"] = n.into();
            }
            doc["result"] = value;
            if line.is_some() {
                writeln!(out, "{}", serde_json::to_string(&doc)?)?;
            } else {
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            }
        }
        Format::Text => write!(out, "{}", text_summary(name, &value))?,
        Format::Dot => match dot_of(&value) {
            Some(dot) => write!(out, "{dot}")?,
            None => return Err(Failure(format!("{name} has no graph output to render as DOT"))),
        },
    }
    Ok(())
}

fn labeling_value(f: &SetLabeling) -> Value {
    serde_json::to_value(f.to_json()).expect("labeling serializes")
}

/// DOT for any result carrying a labeling (or a bare graph6 string).
fn dot_of(value: &Value) -> Option<String> {
    let lab = find_labeling(value)?;
    let g = parse_graph6(lab.get("graph6")?.as_str()?).ok()?;
    let labels = lab.get("labels").and_then(|l| l.as_array()).map(|ls| {
        ls.iter()
            .map(|l| serde_json::from_value::<IntegerSet>(l.clone()).map(|s| s.to_string()).unwrap_or_default())
            .collect::<Vec<_>>()
    });
    Some(to_dot(&g, labels.as_deref()))
}

fn find_labeling(value: &Value) -> Option<&Value> {
    find_key(value, "labels").or_else(|| find_key(value, "graph6"))
}

fn find_key<'a>(value: &'a Value, key: &str) -> Option<&'a Value> {
    if value.get(key).is_some() && value.get("graph6").is_some() {
        return Some(value);
    }
    ["labeling", "witness", "certificate", "outcome"]
        .iter()
        .filter_map(|k| value.get(*k))
        .find_map(|v| find_key(v, key))
}

fn text_summary(name: &str, value: &Value) -> String {
    let mut s = String::new();
    let lab = find_labeling(value);
    if let Some(lab) = lab {
        s.push_str(&format!("graph {}\n", lab["graph6"].as_str().unwrap_or("?")));
        if let Some(ls) = lab.get("labels").and_then(|l| l.as_array()) {
            for (i, l) in ls.iter().enumerate() {
                s.push_str(&format!("  f({i}) = {l}\n"));
            }
        }
    }
    let report = value.get("report").or_else(|| value.get("outcome").and_then(|o| o.get("report")));
    if let Some(r) = report {
        for key in ["is_iasl", "is_iasi", "is_weak", "is_strong", "edge_uniform_k", "vertex_uniform_l"] {
            s.push_str(&format!("{key}: {}\n", r[key]));
        }
    }
    for key in ["status", "kind", "size", "lower_bound", "proven_minimum", "repaired"] {
        if let Some(v) = value.get(key) {
            s.push_str(&format!("{key}: {v}\n"));
        }
    }
    if let Some(c) = value.get("certificate") {
        s.push_str(&format!("certificate: {}\n", c["kind"]));
    }
    if s.is_empty() {
        s = format!("{name}: {value}\n");
    }
    s
}

fn outcome_value(o: &ConstructionOutcome) -> Result<Value, Failure> {
    Ok(serde_json::to_value(o)?)
}

fn uniform_value(o: UniformOutcome) -> Outcome {
    let code = if o.is_built() { EXIT_OK } else { EXIT_NONE };
    Ok((serde_json::to_value(&o)?, code))
}

fn construct_one(a: &ConstructArgs, g: &Graph) -> Outcome {
    let target = Target::from(a.target);
    let need_k = || a.k.ok_or_else(|| Failure("--k is required for this method".into()));
    let outcome = match a.method {
        Method::Canonical => canonical_iasi(g)?,
        Method::TwoUniform => return uniform_value(two_uniform_iasi(g)?),
        Method::WeaklyUniform => return uniform_value(weakly_uniform_iasi(g, need_k()?)?),
        Method::StronglyUniform => return uniform_value(strongly_uniform_iasi(g, need_k()?)?),
        Method::Complement => {
            let f = labels_or_canonical(a.labels.as_deref(), g)?;
            induced_labeling(&Operation::Complement, &f, None, target)?
        }
        Method::LineGraph => line_graph_labeling(&labels_or_canonical(a.labels.as_deref(), g)?)?,
        Method::TotalGraph => total_graph_labeling(&labels_or_canonical(a.labels.as_deref(), g)?)?,
        Method::Subdivide => {
            let (u, v) = parse_edge(a.edge.as_deref())?;
            subdivision_labeling(&labels_or_canonical(a.labels.as_deref(), g)?, u, v, target)?
        }
        Method::Contract => {
            let (u, v) = parse_edge(a.edge.as_deref())?;
            contraction_labeling(&labels_or_canonical(a.labels.as_deref(), g)?, u, v, target)?
        }
        Method::Minor => {
            let text = read_text(a.script.as_deref().ok_or_else(|| Failure("--script is required for minor".into()))?)?;
            let script: Vec<MinorStep> = serde_json::from_str(&text)?;
            minor_labeling(&labels_or_canonical(a.labels.as_deref(), g)?, &script, target)?
        }
    };
    let code = if outcome.reaches(outcome.target) { EXIT_OK } else { EXIT_NONE };
    Ok((outcome_value(&outcome)?, code))
}

fn classify_one(a: &ClassifyArgs, g: &Graph) -> Outcome {
    let f = parse_labels(&a.labels, g)?;
    let report = f.classify();
    let code = if report.is_iasl { EXIT_OK } else { EXIT_NONE };
    Ok((serde_json::json!({"labeling": labeling_value(&f), "report": report}), code))
}

fn certificate_code(kind: CertificateKind) -> i32 {
    match kind {
        CertificateKind::Witness => EXIT_OK,
        CertificateKind::Exhausted => EXIT_NONE,
        CertificateKind::BudgetExceeded => EXIT_BUDGET,
    }
}

fn minsize_one(a: &MinsizeArgs, g: &Graph) -> Outcome {
    let r = search::min_ground_set_size(g, &a.bounds.config(a.input.serial))?;
    let code = certificate_code(r.certificate.kind);
    Ok((serde_json::to_value(&r)?, code))
}

fn uniform_one(a: &UniformArgs, g: &Graph) -> Outcome {
    let constraint = match a.kind {
        UniformKind::Any => EdgeConstraint::Uniform { k: a.k },
        UniformKind::Weak => EdgeConstraint::WeaklyUniform { k: a.k },
        UniformKind::Strong => EdgeConstraint::StronglyUniform { k: a.k },
    };
    let c = search::find_constrained(g, constraint, &a.bounds.config(a.input.serial))?;
    let code = certificate_code(c.kind);
    Ok((serde_json::json!({"certificate": c}), code))
}

fn convert_one(a: &ConvertArgs, g: &Graph) -> Outcome {
    let value = match &a.labels {
        Some(l) => labeling_value(&parse_labels(l, g)?),
        None => serde_json::json!({
            "graph6": write_graph6(g),
            "vertices": g.vertex_count(),
            "edges": g.edges(),
        }),
    };
    Ok((value, EXIT_OK))
}

fn single_graph(spec: &str) -> Result<Graph, Failure> {
    let (mut lines, _) = read_graphs(spec)?;
    if lines.len() != 1 {
        return Err(Failure(format!("expected one graph, got {}", lines.len())));
    }
    Ok(lines.remove(0).graph)
}

fn product(a: &ProductArgs) -> Outcome {
    let g1 = single_graph(&a.left)?;
    let g2 = single_graph(&a.right)?;
    let f1 = labels_or_canonical(a.left_labels.as_deref(), &g1)?;
    let f2 = labels_or_canonical(a.right_labels.as_deref(), &g2)?;
    let target = Target::from(a.target);
    let op = |kind| Operation::Product { kind };
    let outcome = match a.kind {
        BinaryOp::Union => {
            let shared: Vec<(usize, usize)> = match &a.shared {
                Some(s) => serde_json::from_str(&read_text(s)?)?,
                None => Vec::new(),
            };
            induced_labeling(&Operation::Union { shared }, &f1, Some(&f2), target)?
        }
        BinaryOp::Join => induced_labeling(&Operation::Join, &f1, Some(&f2), target)?,
        BinaryOp::Cartesian => induced_labeling(&op(ProductKind::Cartesian), &f1, Some(&f2), target)?,
        BinaryOp::Direct => induced_labeling(&op(ProductKind::Direct), &f1, Some(&f2), target)?,
        BinaryOp::Strong => induced_labeling(&op(ProductKind::Strong), &f1, Some(&f2), target)?,
        BinaryOp::Lexicographic => induced_labeling(&op(ProductKind::Lexicographic), &f1, Some(&f2), target)?,
        BinaryOp::Corona => corona_labeling(&f1, &f2, target)?,
        BinaryOp::Rooted => rooted_labeling(&f1, &f2, a.root, target)?,
    };
    let code = if outcome.reaches(outcome.target) { EXIT_OK } else { EXIT_NONE };
    Ok((outcome_value(&outcome)?, code))
}

fn oracle_run(a: &OracleRunArgs) -> Outcome {
    let config = a.bounds.config(a.serial);
    let ids: Vec<CheckId> = if a.id == "all" {
        CheckId::ALL.to_vec()
    } else {
        vec![a.id.parse()?]
    };
    let corpus_for = |id: CheckId| {
        let mut c = Corpus::default_for(id);
        if let (Some(n), None) = (a.max_n, &c.explicit) {
            c.max_vertices = n;
        }
        c
    };
    let checks = ids
        .iter()
        .map(|&id| oracle::run_check(id, &corpus_for(id), &config))
        .collect::<Result<Vec<_>, _>>()?;
    let code = checks.iter().fold(EXIT_OK, |code, c| {
        code.max(match c.verdict {
            Verdict::Pass => EXIT_OK,
            Verdict::Counterexample => EXIT_NONE,
            Verdict::Inconclusive => EXIT_BUDGET,
        })
    });
    let summary: Vec<Value> = checks
        .iter()
        .map(|c| serde_json::json!({"id": c.id, "verdict": c.verdict, "cases": c.cases}))
        .collect();
    Ok((serde_json::json!({"summary": summary, "checks": checks}), code))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut argv = vec!["iasi".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        let mut out = Vec::new();
        let code = run(&argv, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn classify_singletons() {
        let (code, out) = call(&["classify", "--graph", "A_", "--labels", "[[1],[2]]"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let r = &v["result"]["report"];
        assert_eq!(r["is_iasl"], true);
        assert_eq!(r["is_iasi"], true);
        assert_eq!(r["is_weak"], true);
        assert_eq!(r["is_strong"], true);
        assert_eq!(r["edge_uniform_k"], 1);
        assert_eq!(v["invocation"]["graph"], "A_");
    }

    #[test]
    fn minsize_triangle() {
        let (code, out) = call(&["minsize", "--graph", "Bw"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["size"], 2);
        assert_eq!(v["result"]["certificate"]["kind"], "witness");
        assert_eq!(v["invocation"]["element_bound"], 8);
    }

    #[test]
    fn uniform_exit_codes() {
        let (code, _) = call(&["uniform", "--graph", "Bw", "--k", "2", "--element-bound", "6", "--size-bound", "3"]);
        assert_eq!(code, EXIT_NONE);
        let (code, _) = call(&["uniform", "--graph", "Cr", "--k", "2"]);
        assert_eq!(code, EXIT_OK);
        let (code, _) = call(&["uniform", "--graph", "F~~~w", "--k", "3", "--element-bound", "30", "--budget-ms", "1"]);
        assert_eq!(code, EXIT_BUDGET);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["classify", "--graph", "A_", "--bogus"]).0, EXIT_USAGE);
        let (code, out) = call(&["classify", "--graph", "A!", "--labels", "[[1],[2]]"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("line 1, byte 1"), "{out}");
        let (code, out) = call(&["classify", "--graph", "A_", "--labels", "[[1],"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("labels, line 1"), "{out}");
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn convert_to_dot() {
        let (code, out) = call(&["convert", "--graph", "Bw", "--format", "dot"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches(" -- ").count(), 3);
        let (_, out) = call(&["convert", "--graph", "A_", "--labels", "[[1],[2]]", "--format", "dot"]);
        assert!(out.contains("label=\"{1}\""));
    }

    #[test]
    fn construct_and_product() {
        let (code, out) = call(&["construct", "--graph", "Bw", "--method", "two-uniform"]);
        assert_eq!(code, EXIT_NONE);
        assert!(out.contains("\"impossible\""));
        let (code, out) = call(&["construct", "--graph", "A_", "--method", "subdivide", "--edge", "0,1", "--labels", "[[1],[2]]"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["labeling"]["labels"], serde_json::json!([[1], [2], [3]]));
        let (code, out) = call(&[
            "product", "--kind", "cartesian", "--left", "A_", "--right", "A_",
            "--left-labels", "[[1],[2]]", "--right-labels", "[[4],[8]]",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["labeling"]["labels"], serde_json::json!([[5], [9], [6], [10]]));
    }

    #[test]
    fn oracle_list_and_single() {
        let (code, out) = call(&["oracle", "list"]);
        assert_eq!(code, 0);
        assert!(out.contains("difference-set-disjointness"));
        let (code, _) = call(&["oracle", "run", "hereditary", "--max-n", "3"]);
        assert_eq!(code, 0);
        let (code, out) = call(&["oracle", "run", "no-such-check"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("unknown check id"));
    }
}
