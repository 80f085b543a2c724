//! Command dispatch for the `jetlink` binary.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! code with everything that would be printed, so the whole command line is
//! testable in-process. Reports are `key=value` lines, or one JSON object
//! with `--json`.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use jetlink_core::classify::{
    check_realizable, classify_cable, classify_helix, compare_helix, describe_cable, enumerate_mountain_range,
    rot_at_tb_max, tb_max, CableDescriptor, ClassResult, HeightOrder, Realizability, RotBase, Verdict,
};
use jetlink_core::format::{parse_front, serialize_front};
use jetlink_core::front::{
    cable_link_front, lambda_front, meridian_eye_front, torus_braid_front, FrontDiagram, ValidationReport,
};
use jetlink_core::moves::{stabilize, Sign};
use jetlink_core::search::{search_isotopy, SearchBudget, SearchOutcome};
use jetlink_core::slope::{tb_max_oracle, CurveClass};
use jetlink_core::svg::{render_svg, SvgOptions};
use jetlink_core::translate::{
    cable_type_to_s3, cor_noimage_gap, m_to_s3, reverse_orientation, s3_positive_torus_tb_max, tb_to_s3,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "jetlink", version, about = "Legendrian fronts, invariants and classification in J1(S1)")]
struct Cli {
    /// Print one JSON document instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classical invariants of every component.
    Invariants { file: PathBuf },
    /// Structural checks on a front file.
    Validate { file: PathBuf },
    /// Draw a front as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 40.0)]
        column_width: f64,
        #[arg(long, default_value_t = 24.0)]
        strand_gap: f64,
    },
    /// Decide the Legendrian class of a helix or cable link from invariants.
    Classify(ClassifyArgs),
    /// Maximal tb of the cable component.
    Tbmax {
        #[arg(short, allow_hyphen_values = true)]
        p: i64,
        #[arg(short, allow_hyphen_values = true)]
        q: i64,
        #[arg(short, allow_hyphen_values = true)]
        m: i64,
        /// Also evaluate the intersection-count bound.
        #[arg(long)]
        oracle: bool,
    },
    /// Realisable (tb, rot) of the cable component down to a floor.
    Enumerate {
        #[arg(short, allow_hyphen_values = true)]
        p: i64,
        #[arg(short, allow_hyphen_values = true)]
        q: i64,
        #[arg(short, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        floor: i64,
    },
    /// Cable data on the S3 side.
    Translate {
        #[arg(short, allow_hyphen_values = true)]
        p: i64,
        #[arg(short, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        tb: Option<i64>,
        #[arg(short, allow_hyphen_values = true)]
        m: Option<i64>,
    },
    /// Bounded search for a Legendrian isotopy between two fronts.
    SearchIsotopy {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        states: Option<usize>,
        #[arg(long)]
        extra_events: Option<usize>,
        #[arg(long)]
        slack: Option<usize>,
        /// Write one SVG per step of a found path into this directory.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Add a zigzag to one component.
    Stabilize {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        component: usize,
        #[arg(long, value_enum)]
        sign: SignArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write a generated front file.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// N parallel strands.
    Lambda { n: usize },
    /// Flat strand with a meridian eye.
    Eye,
    /// Closure of the (p, q) torus braid.
    Braid {
        #[arg(allow_hyphen_values = true)]
        p: i64,
        q: i64,
    },
    /// Flat core plus a (p, q) cable.
    Cable {
        #[arg(allow_hyphen_values = true)]
        p: i64,
        q: i64,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SignArg {
    #[value(name = "+", alias = "positive")]
    Positive,
    #[value(name = "-", alias = "negative")]
    Negative,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum HeightArg {
    FirstBelow,
    FirstAbove,
}

impl From<HeightArg> for HeightOrder {
    fn from(h: HeightArg) -> Self {
        match h {
            HeightArg::FirstBelow => HeightOrder::FirstBelow,
            HeightArg::FirstAbove => HeightOrder::FirstAbove,
        }
    }
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("kind").required(true).args(["helix", "cable"])))]
struct ClassifyArgs {
    #[arg(long)]
    helix: bool,
    #[arg(long)]
    cable: bool,
    #[arg(short, allow_hyphen_values = true)]
    p: Option<i64>,
    #[arg(short, allow_hyphen_values = true)]
    q: Option<i64>,
    #[arg(short, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    tb0: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    rot0: i64,
    #[arg(long, allow_hyphen_values = true)]
    tb1: i64,
    #[arg(long, allow_hyphen_values = true)]
    rot1: i64,
    #[arg(long, value_enum)]
    height: Option<HeightArg>,
    /// Second link to compare against; unset values default to the first.
    #[arg(long, allow_hyphen_values = true)]
    vs_tb0: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    vs_m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    vs_p: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    vs_q: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    vs_rot0: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    vs_tb1: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    vs_rot1: Option<i64>,
    #[arg(long, value_enum)]
    vs_height: Option<HeightArg>,
}

impl ClassifyArgs {
    fn has_other(&self) -> bool {
        self.vs_tb0.is_some()
            || self.vs_m.is_some()
            || self.vs_p.is_some()
            || self.vs_q.is_some()
            || self.vs_rot0.is_some()
            || self.vs_tb1.is_some()
            || self.vs_rot1.is_some()
            || self.vs_height.is_some()
    }
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    reason: String,
}

impl Failure {
    fn invalid(reason: impl ToString) -> Self {
        Failure { code: EXIT_INVALID, reason: reason.to_string() }
    }
}

type Res<T> = Result<T, Failure>;

/// Ordered report fields.
#[derive(Default)]
struct Report {
    fields: Vec<(String, Value)>,
    code: i32,
}

impl Report {
    fn put(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.into(), value.into()));
        self
    }

    fn render(&self, as_json: bool) -> String {
        if as_json {
            let map: Map<String, Value> = self.fields.iter().cloned().collect();
            return format!("{}\n", Value::Object(map));
        }
        let mut out = String::new();
        for (k, v) in &self.fields {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}={v}\n"));
        }
        out
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => {
                    let line = text.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
                    Outcome { code: EXIT_INVALID, stdout: String::new(), stderr: format!("error: {line}\n") }
                }
            };
        }
    };
    let json = cli.json;
    match dispatch(cli.command) {
        Ok(report) => Outcome { code: report.code, stdout: report.render(json), stderr: String::new() },
        Err(f) => {
            let stdout = if json { format!("{}\n", json!({ "error": f.reason })) } else { String::new() };
            Outcome { code: f.code, stdout, stderr: format!("error: {}\n", f.reason) }
        }
    }
}

fn read_front(path: &Path) -> Res<FrontDiagram> {
    let text = fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    parse_front(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn read_valid_front(path: &Path) -> Res<FrontDiagram> {
    let d = read_front(path)?;
    if let Some(v) = d.validate().violations().first() {
        return Err(Failure::invalid(format!("{}: {v}", path.display())));
    }
    Ok(d)
}

fn write_file(path: &Path, contents: &str) -> Res<()> {
    fs::write(path, contents).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn dispatch(command: Command) -> Res<Report> {
    match command {
        Command::Invariants { file } => invariants(&file),
        Command::Validate { file } => validate(&file),
        Command::Render { file, output, column_width, strand_gap } => {
            let d = read_valid_front(&file)?;
            let options = SvgOptions { column_width, strand_gap, ..SvgOptions::default() };
            let svg = render_svg(&d, &options).map_err(Failure::invalid)?;
            write_file(&output, &svg)?;
            let mut r = Report::default();
            r.put("written", output.display().to_string());
            Ok(r)
        }
        Command::Classify(args) => classify(&args),
        Command::Tbmax { p, q, m, oracle } => tbmax(p, q, m, oracle),
        Command::Enumerate { p, q, m, floor } => enumerate(p, q, m, floor),
        Command::Translate { p, q, tb, m } => translate(p, q, tb, m),
        Command::SearchIsotopy { file1, file2, depth, states, extra_events, slack, dump_dir } => {
            let defaults = SearchBudget::default();
            let budget = SearchBudget {
                max_depth: depth.unwrap_or(defaults.max_depth),
                max_states: states.unwrap_or(defaults.max_states),
                max_extra_events: extra_events.unwrap_or(defaults.max_extra_events),
                planar_slack: slack.unwrap_or(defaults.planar_slack),
            };
            search(&file1, &file2, budget, dump_dir.as_deref())
        }
        Command::Stabilize { file, component, sign, output } => {
            let d = read_valid_front(&file)?;
            let sign = match sign {
                SignArg::Positive => Sign::Positive,
                SignArg::Negative => Sign::Negative,
            };
            let s = stabilize(&d, component, sign).map_err(Failure::invalid)?;
            write_file(&output, &serialize_front(&s))?;
            let mut r = Report::default();
            r.put("written", output.display().to_string());
            Ok(r)
        }
        Command::Gen { family, output } => {
            let output = output.ok_or_else(|| Failure::invalid("gen needs -o FILE"))?;
            let d = match family {
                Family::Lambda { n } => lambda_front(n),
                Family::Eye => Ok(meridian_eye_front()),
                Family::Braid { p, q } => torus_braid_front(p, q),
                Family::Cable { p, q } => cable_link_front(p, q),
            }
            .map_err(Failure::invalid)?;
            write_file(&output, &serialize_front(&d))?;
            let mut r = Report::default();
            r.put("written", output.display().to_string());
            r.put("events", d.events.len());
            Ok(r)
        }
    }
}

fn invariants(file: &Path) -> Res<Report> {
    let d = read_valid_front(file)?;
    let inv = d.all_invariants().map_err(Failure::invalid)?;
    let mut r = Report::default();
    r.put("components", inv.len());
    for (c, i) in inv.iter().enumerate() {
        let k = format!("component.{c}");
        r.put(format!("{k}.label"), d.label(c));
        r.put(format!("{k}.orientation"), d.orientation(c).symbol().to_string());
        r.put(format!("{k}.tb"), i.tb);
        r.put(format!("{k}.rot"), i.rot);
        r.put(format!("{k}.winding"), i.winding);
    }
    for a in 0..inv.len() {
        for b in a + 1..inv.len() {
            let sum = d.inter_component_crossing_sum(a, b).map_err(Failure::invalid)?;
            r.put(format!("crossings.{a}.{b}"), sum);
        }
    }
    Ok(r)
}

fn validate(file: &Path) -> Res<Report> {
    let d = read_front(file)?;
    match d.validate() {
        ValidationReport::Ok => {
            let mut r = Report::default();
            r.put("valid", true);
            r.put("components", d.component_count().map_err(Failure::invalid)?);
            r.put("events", d.events.len());
            Ok(r)
        }
        ValidationReport::Violations(v) => {
            let reasons: Vec<String> = v.iter().map(|v| v.to_string()).collect();
            Err(Failure::invalid(reasons.join("; ")))
        }
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Isotopic => "Isotopic",
        Verdict::NotIsotopic => "NotIsotopic",
        Verdict::ExceptionalPair => "ExceptionalPair",
        Verdict::UnknownCase4Rot => "UnknownCase4Rot",
    }
}

fn class_report(result: ClassResult) -> Report {
    let mut r = Report::default();
    let name = verdict_name(result.verdict);
    r.put("verdict", name);
    match result.verdict {
        Verdict::ExceptionalPair => {
            r.put("classes", 2);
            r.put("summary", "ExceptionalPair: 2 classes");
            r.put("distinguished_by", "height order (first-below, first-above)");
            r.code = EXIT_UNKNOWN;
        }
        Verdict::UnknownCase4Rot => {
            r.put("summary", "UnknownCase4Rot: rotation range at maximal tb not determined");
            r.code = EXIT_UNKNOWN;
        }
        _ => {
            r.put("summary", name);
        }
    }
    if let Some((k0, l0, k1, l1)) = result.normal_form {
        r.put("normal_form", json!([k0, l0, k1, l1]));
    }
    r
}

fn classify(a: &ClassifyArgs) -> Res<Report> {
    let height = a.height.map(HeightOrder::from);
    if a.helix {
        let tb0 = a.tb0.ok_or_else(|| Failure::invalid("--helix needs --tb0"))?;
        let first = ((tb0, a.rot0), (a.tb1, a.rot1), height);
        let result = if a.has_other() {
            let second = (
                (a.vs_tb0.unwrap_or(tb0), a.vs_rot0.unwrap_or(a.rot0)),
                (a.vs_tb1.unwrap_or(a.tb1), a.vs_rot1.unwrap_or(a.rot1)),
                a.vs_height.map(HeightOrder::from),
            );
            compare_helix(first, second)
        } else {
            classify_helix(first.0, first.1, height)
        };
        return result.map(class_report).map_err(Failure::invalid);
    }
    let need = |v: Option<i64>, flag: &str| v.ok_or_else(|| Failure::invalid(format!("--cable needs {flag}")));
    let d1 = CableDescriptor {
        p: need(a.p, "-p")?,
        q: need(a.q, "-q")?,
        m: need(a.m, "-m")?,
        rot0: a.rot0,
        tb1: a.tb1,
        rot1: a.rot1,
        height_order: height,
    };
    let result = if a.has_other() {
        let d2 = CableDescriptor {
            p: a.vs_p.unwrap_or(d1.p),
            q: a.vs_q.unwrap_or(d1.q),
            m: a.vs_m.unwrap_or(d1.m),
            rot0: a.vs_rot0.unwrap_or(d1.rot0),
            tb1: a.vs_tb1.unwrap_or(d1.tb1),
            rot1: a.vs_rot1.unwrap_or(d1.rot1),
            height_order: a.vs_height.map(HeightOrder::from),
        };
        classify_cable(&d1, &d2)
    } else {
        describe_cable(&d1)
    };
    let mut r = result.map(class_report).map_err(Failure::invalid)?;
    let realizable = match check_realizable(&d1).map_err(Failure::invalid)? {
        Realizability::Realizable => "yes".to_string(),
        Realizability::Unknown => "unknown".to_string(),
        Realizability::NotRealizable(why) => format!("no: {why}"),
    };
    r.put("realizable", realizable);
    Ok(r)
}

/// Reverses the cable component if needed so that `q ≥ 0`, and `p = 1`
/// when `q = 0`.
fn normalize(p: i64, q: i64) -> (i64, i64) {
    if q < 0 || (q == 0 && p < 0) {
        let (p, q, _, _) = reverse_orientation(p, q, 0, 0);
        (p, q)
    } else {
        (p, q)
    }
}

fn tbmax(p: i64, q: i64, m: i64, oracle: bool) -> Res<Report> {
    let (p, q) = normalize(p, q);
    let closed = tb_max(p, q, m).map_err(Failure::invalid)?;
    let mut r = Report::default();
    r.put("p", p).put("q", q).put("m", m).put("tb_max", closed);
    match rot_at_tb_max(p, q, m).map_err(Failure::invalid)? {
        RotBase::Known(v) => r.put("rot_at_tb_max", v),
        RotBase::Unknown => r.put("rot_at_tb_max", "unknown"),
    };
    if oracle {
        let class = CurveClass::new(p, q).map_err(Failure::invalid)?;
        let o = tb_max_oracle(class, m).map_err(Failure::invalid)?;
        r.put("oracle", o).put("match", o == closed);
    }
    Ok(r)
}

fn enumerate(p: i64, q: i64, m: i64, floor: i64) -> Res<Report> {
    let (p, q) = normalize(p, q);
    let mut r = Report::default();
    r.put("p", p).put("q", q).put("m", m).put("floor", floor);
    match enumerate_mountain_range(p, q, m, floor) {
        Ok(pairs) => {
            r.put("count", pairs.len());
            let list: Vec<Value> = pairs.iter().map(|(tb, rot)| json!([tb, rot])).collect();
            r.put("pairs", Value::Array(list));
            Ok(r)
        }
        Err(e @ jetlink_core::classify::ClassifyError::UnknownRotation { .. }) => {
            Err(Failure { code: EXIT_UNKNOWN, reason: e.to_string() })
        }
        Err(e) => Err(Failure::invalid(e)),
    }
}

fn translate(p: i64, q: i64, tb: Option<i64>, m: Option<i64>) -> Res<Report> {
    let (p, q) = normalize(p, q);
    let (p2, q2) = cable_type_to_s3(p, q).map_err(Failure::invalid)?;
    let mut r = Report::default();
    r.put("p", p).put("q", q).put("s3_p", p2).put("s3_q", q2);
    if let Some(tb) = tb {
        r.put("tb", tb).put("s3_tb", tb_to_s3(tb, q));
    }
    if let Some(m) = m {
        r.put("m", m).put("s3_m", m_to_s3(m).map_err(Failure::invalid)?);
    }
    if let Ok(v) = s3_positive_torus_tb_max(p2, q2) {
        r.put("s3_tb_max", v);
    }
    if let Ok(gap) = cor_noimage_gap(p, q) {
        r.put("noimage_gap", gap);
    }
    Ok(r)
}

fn search(file1: &Path, file2: &Path, budget: SearchBudget, dump: Option<&Path>) -> Res<Report> {
    let a = read_valid_front(file1)?;
    let b = read_valid_front(file2)?;
    let out = search_isotopy(&a, &b, budget).map_err(Failure::invalid)?;
    let mut r = Report::default();
    match out {
        SearchOutcome::Found(path) => {
            r.put("result", "found");
            r.put("moves", path.nontrivial_len());
            r.put("steps", path.steps.len());
            let steps: Vec<Value> = path.steps.iter().map(|s| Value::String(s.to_string())).collect();
            r.put("path", Value::Array(steps));
            if let Some(dir) = dump {
                fs::create_dir_all(dir).map_err(|e| Failure::invalid(format!("{}: {e}", dir.display())))?;
                let mut d = a.clone();
                let options = SvgOptions::default();
                for i in 0..=path.steps.len() {
                    if i > 0 {
                        d = jetlink_core::moves::apply_move(&d, path.steps[i - 1]).map_err(Failure::invalid)?;
                    }
                    let svg = render_svg(&d, &options).map_err(Failure::invalid)?;
                    write_file(&dir.join(format!("step-{i:03}.svg")), &svg)?;
                }
                r.put("dumped", path.steps.len() + 1);
            }
        }
        SearchOutcome::NotIsotopic(why) => {
            r.put("result", "not-isotopic");
            r.put("reason", why);
        }
        SearchOutcome::NotFound(stats) => {
            r.put("result", "not-found");
            r.put("states", stats.states);
            r.put("depth", stats.depth);
            r.put("state_budget_hit", stats.state_budget_hit);
            r.code = EXIT_BUDGET;
        }
    }
    Ok(r)
}
