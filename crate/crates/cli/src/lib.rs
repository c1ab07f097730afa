//! Argument handling and dispatch for the `cutproj` binary.
//!
//! [`run`] takes the full argument vector and two sinks and returns the
//! process exit code, so the whole command surface is testable in-process.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cutproj::checks;
use cutproj::numfmt::{g17, serialize_g17};
use cutproj::render::{RenderConfig, SourceBox, SvgStyle, Viewport};
use cutproj::suspension::{BaseState, Suspension};
use cutproj::{
    classify_slope, closure_on_axis, enumerate_model_set, kronecker_density_check, rationality_warning,
    trace_axis_intercepts, Angle, Budget, Classification, DenseReason, Error, Scheme, Slope, Structured,
};

/// Exit code for invalid input or a failed check.
pub const EXIT_INVALID: i32 = 1;
/// Exit code when a computation would exceed the candidate budget.
pub const EXIT_BUDGET: i32 = 2;

const RATIONALITY_DENOMINATOR: u64 = 10_000;

#[derive(Debug, Parser)]
#[command(name = "cutproj", version, about = "Cut-and-project sets and the line families through them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the points of the model set with x in a range.
    Enumerate {
        #[command(flatten)]
        scheme: SchemeArgs,
        /// Physical range as lo,hi.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        range: (f64, f64),
        #[command(flatten)]
        common: Common,
    },
    /// Classify the line family as discrete, dense or striped.
    Classify {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        slope: SlopeArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Stripe intervals on the vertical axis.
    Closure {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        slope: SlopeArgs,
        /// Vertical range as lo,hi.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        range: (f64, f64),
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force axis intercepts and their containment in the stripes.
    Trace {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        slope: SlopeArgs,
        /// Vertical range as lo,hi.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        range: (f64, f64),
        /// Use lattice points with |x| up to this value.
        #[arg(long)]
        x_extent: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Dump an orbit of the interval exchange as JSON lines.
    Iet {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        slope: SlopeArgs,
        /// Starting height on the base, reduced mod 1/d.
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, default_value_t = 1000)]
        steps: u64,
        /// Recompute each state from lattice integers instead of stepping.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Probe how close a line of generic slope passes to the point set.
    Kronecker {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        slope: SlopeArgs,
        /// Point on the line as x,y.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        target: (f64, f64),
        #[arg(long, default_value_t = 0.05)]
        delta: f64,
        #[arg(long, default_value_t = 1000.0)]
        t_max: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Draw a line family as SVG.
    Render {
        /// Reference figure preset (1: stripes, 2: dense lines).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        figure: Option<u8>,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[command(flatten)]
        slope: SlopeArgs,
        /// Half width of the square viewport.
        #[arg(long, default_value_t = 2.5)]
        viewport: f64,
        /// Lattice points are taken from [-w, w] in x and height.
        #[arg(long, default_value_t = 5.0)]
        source_half_width: f64,
        /// Output size in pixels.
        #[arg(long, default_value_t = 800)]
        px: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run the acceptance criteria and print one line per criterion.
    Check,
}

#[derive(Debug, Args)]
struct SchemeArgs {
    #[arg(long, allow_hyphen_values = true)]
    theta_tan: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    theta_deg: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    theta_rad: Option<f64>,
    /// cos,sin of the angle.
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    theta_cos_sin: Option<(f64, f64)>,
    /// Window length; `iet` defaults to cos + sin.
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<f64>,
}

#[derive(Debug, Args)]
struct SlopeArgs {
    /// Structured slope (a cos - b sin)/d as a,b,d.
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    slope: Option<(i64, i64, i64)>,
    /// Generic real slope, assumed outside Q cos + Q sin.
    #[arg(long, allow_hyphen_values = true)]
    slope_real: Option<f64>,
    #[arg(long)]
    slope_horizontal: bool,
    /// Rejected: only directions (1, s) are supported.
    #[arg(long)]
    slope_vertical: bool,
}

#[derive(Debug, Args)]
struct Common {
    /// Maximum number of lattice candidates examined.
    #[arg(long, env = "CUTPROJ_BUDGET")]
    budget: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

fn parse_pair(s: &str) -> std::result::Result<(f64, f64), String> {
    let parts = split_numbers::<f64>(s, 2)?;
    Ok((parts[0], parts[1]))
}

fn parse_triple(s: &str) -> std::result::Result<(i64, i64, i64), String> {
    let parts = split_numbers::<i64>(s, 3)?;
    Ok((parts[0], parts[1], parts[2]))
}

fn split_numbers<T: std::str::FromStr>(s: &str, count: usize) -> std::result::Result<Vec<T>, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != count {
        return Err(format!("expected {count} comma-separated numbers, got '{s}'"));
    }
    parts.iter().map(|p| p.parse().map_err(|_| format!("'{p}' is not a number"))).collect()
}

/// A failure that maps to an exit code.
#[derive(Debug)]
enum Failure {
    Invalid(String),
    Budget(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

impl SchemeArgs {
    fn angle(&self) -> std::result::Result<Angle, Failure> {
        let given = [
            self.theta_tan.map(Angle::Tan),
            self.theta_deg.map(Angle::Degrees),
            self.theta_rad.map(Angle::Radians),
            self.theta_cos_sin.map(|(cos, sin)| Angle::CosSin { cos, sin }),
        ];
        let mut given = given.into_iter().flatten();
        match (given.next(), given.next()) {
            (Some(angle), None) => Ok(angle),
            (None, _) => Err(Failure::Invalid(
                "the angle is required: pass one of --theta-tan, --theta-deg, --theta-rad, --theta-cos-sin".into(),
            )),
            (Some(_), Some(_)) => Err(Failure::Invalid("give the angle only once".into())),
        }
    }

    fn scheme(&self, err: &mut dyn Write) -> std::result::Result<Scheme, Failure> {
        let epsilon = self.epsilon.ok_or_else(|| Failure::Invalid("--epsilon is required".into()))?;
        let scheme = Scheme::new(self.angle()?, epsilon)?;
        warn_rational(&scheme, err)?;
        Ok(scheme)
    }

    /// Like [`Self::scheme`] but a missing ε means the balanced window.
    fn balanced_scheme(&self, err: &mut dyn Write) -> std::result::Result<Scheme, Failure> {
        let scheme = Scheme::new(self.angle()?, self.epsilon.unwrap_or(1.0))?;
        let scheme = if self.epsilon.is_none() { scheme.balanced() } else { scheme };
        warn_rational(&scheme, err)?;
        Ok(scheme)
    }

    fn is_empty(&self) -> bool {
        self.theta_tan.is_none()
            && self.theta_deg.is_none()
            && self.theta_rad.is_none()
            && self.theta_cos_sin.is_none()
            && self.epsilon.is_none()
    }
}

fn warn_rational(scheme: &Scheme, err: &mut dyn Write) -> Outcome {
    if let Some(w) = rationality_warning(scheme, RATIONALITY_DENOMINATOR) {
        writeln!(err, "warning: {w}")?;
    }
    Ok(())
}

impl SlopeArgs {
    fn slope(&self) -> std::result::Result<Slope, Failure> {
        if self.slope_vertical {
            return Err(Failure::Invalid(
                "vertical lines are not of the form w = (1, s) and have no classification; \
                 use a structured or real slope"
                    .into(),
            ));
        }
        let count = self.slope.is_some() as u8 + self.slope_real.is_some() as u8 + self.slope_horizontal as u8;
        if count > 1 {
            return Err(Failure::Invalid("give only one of --slope, --slope-real, --slope-horizontal".into()));
        }
        if let Some((a, b, d)) = self.slope {
            return Ok(Slope::structured(a, b, d)?);
        }
        if let Some(s) = self.slope_real {
            return Ok(Slope::generic(s)?);
        }
        if self.slope_horizontal {
            return Ok(Slope::Horizontal);
        }
        Err(Failure::Invalid("a slope is required: --slope a,b,d, --slope-real s or --slope-horizontal".into()))
    }

    fn structured(&self, what: &str) -> std::result::Result<Structured, Failure> {
        match self.slope()? {
            Slope::Structured(st) => Ok(st),
            _ => Err(Failure::Invalid(format!("{what} needs a structured slope --slope a,b,d"))),
        }
    }

    fn generic(&self) -> std::result::Result<f64, Failure> {
        match self.slope()? {
            Slope::Generic { s } => Ok(s),
            _ => Err(Failure::Invalid("kronecker needs a real slope --slope-real s".into())),
        }
    }

    fn is_empty(&self) -> bool {
        self.slope.is_none() && self.slope_real.is_none() && !self.slope_horizontal && !self.slope_vertical
    }
}

impl Common {
    fn budget(&self) -> Budget {
        self.budget.map(Budget).unwrap_or_default()
    }

    fn format(&self, allowed: &[Format], default: Format) -> std::result::Result<Format, Failure> {
        let format = self.format.unwrap_or(default);
        if allowed.contains(&format) {
            Ok(format)
        } else {
            Err(Failure::Invalid(format!("format {format:?} is not available for this command").to_lowercase()))
        }
    }

    /// Sends a finished document to `--out` or stdout.
    fn emit(&self, doc: &str, out: &mut dyn Write) -> Outcome {
        match &self.out {
            Some(path) => fs::write(path, doc).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
            None => Ok(out.write_all(doc.as_bytes())?),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn to_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> std::result::Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| Failure::Io(e.to_string()))?;
    for row in rows {
        w.write_record(&row).map_err(|e| Failure::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Trims a float to at most six decimals for human-readable lines.
fn short(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_owned()
    } else {
        s.to_owned()
    }
}

#[derive(Serialize)]
struct EnumerateDoc {
    scheme: Scheme,
    #[serde(serialize_with = "serialize_g17")]
    x_min: f64,
    #[serde(serialize_with = "serialize_g17")]
    x_max: f64,
    points: Vec<cutproj::ModelSetPoint>,
}

fn enumerate(
    scheme: &SchemeArgs,
    range: (f64, f64),
    common: &Common,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let scheme = scheme.scheme(err)?;
    let format = common.format(&[Format::Json, Format::Csv], Format::Json)?;
    let points = enumerate_model_set(&scheme, range.0, range.1, common.budget())?;
    let doc = match format {
        Format::Csv => to_csv(
            &["m", "n", "x", "x_star"],
            points.iter().map(|p| vec![p.m().to_string(), p.n().to_string(), g17(p.x), g17(p.x_star)]),
        )?,
        _ => to_json(&EnumerateDoc { scheme, x_min: range.0, x_max: range.1, points }),
    };
    common.emit(&doc, out)
}

#[derive(Serialize)]
struct ClassifyDoc {
    scheme: Scheme,
    slope: Slope,
    classification: Classification,
}

fn classify(
    scheme: &SchemeArgs,
    slope: &SlopeArgs,
    common: &Common,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let scheme = scheme.scheme(err)?;
    let slope = slope.slope()?;
    let format = common.format(&[Format::Text, Format::Json], Format::Text)?;
    let classification = classify_slope(&scheme, &slope)?;
    let doc = match format {
        Format::Json => to_json(&ClassifyDoc { scheme, slope, classification }),
        _ => {
            let line = match classification {
                Classification::Discrete => "discrete (horizontal lines y = k)".to_owned(),
                Classification::Dense { reason: DenseReason::GenericSlope } => "dense (generic slope)".to_owned(),
                Classification::Dense { reason: DenseReason::WideWindow } => "dense (wide window)".to_owned(),
                Classification::Stripes(p) => {
                    format!("stripes width={} spacing={}", short(p.width()), short(p.spacing()))
                }
            };
            line + "\n"
        }
    };
    common.emit(&doc, out)
}

#[derive(Serialize)]
struct ClosureDoc {
    scheme: Scheme,
    slope: Structured,
    #[serde(serialize_with = "serialize_g17")]
    y_min: f64,
    #[serde(serialize_with = "serialize_g17")]
    y_max: f64,
    intervals: cutproj::IntervalSet,
}

fn closure(
    scheme: &SchemeArgs,
    slope: &SlopeArgs,
    range: (f64, f64),
    common: &Common,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let scheme = scheme.scheme(err)?;
    let slope = slope.structured("closure")?;
    let format = common.format(&[Format::Json, Format::Csv], Format::Json)?;
    let intervals = closure_on_axis(&scheme, &slope, range.0, range.1)?;
    let doc = match format {
        Format::Csv => to_csv(&["lo", "hi"], intervals.intervals().iter().map(|iv| vec![g17(iv.lo), g17(iv.hi)]))?,
        _ => to_json(&ClosureDoc { scheme, slope, y_min: range.0, y_max: range.1, intervals }),
    };
    common.emit(&doc, out)
}

#[derive(Serialize)]
struct TraceReport {
    intercepts: usize,
    striped: bool,
    /// Largest distance from an intercept to the stripes (striped case).
    #[serde(serialize_with = "serialize_opt_g17")]
    max_distance: Option<f64>,
    /// Radius within which every point of the range has an intercept.
    #[serde(serialize_with = "serialize_g17")]
    coverage_radius: f64,
    contained: bool,
}

#[derive(Serialize)]
struct TraceDoc {
    scheme: Scheme,
    slope: Structured,
    #[serde(serialize_with = "serialize_g17")]
    x_extent: f64,
    #[serde(serialize_with = "serialize_g17")]
    y_min: f64,
    #[serde(serialize_with = "serialize_g17")]
    y_max: f64,
    report: TraceReport,
    trace: cutproj::AxisTrace,
}

fn serialize_opt_g17<S: serde::Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => serialize_g17(v, s),
        None => s.serialize_none(),
    }
}

const CONTAINMENT_TOL: f64 = 1e-9;

fn trace(
    scheme: &SchemeArgs,
    slope: &SlopeArgs,
    range: (f64, f64),
    x_extent: f64,
    common: &Common,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let scheme = scheme.scheme(err)?;
    let slope = slope.structured("trace")?;
    let format = common.format(&[Format::Text, Format::Json, Format::Csv], Format::Text)?;
    let trace = trace_axis_intercepts(&scheme, &slope, x_extent, range.0, range.1, common.budget())?;
    let striped = matches!(classify_slope(&scheme, &Slope::Structured(slope))?, Classification::Stripes(_));
    let max_distance = if striped {
        let stripes = closure_on_axis(&scheme, &slope, range.0, range.1)?;
        Some(trace.values().map(|y| stripes.distance(y)).fold(0.0, f64::max))
    } else {
        None
    };
    let report = TraceReport {
        intercepts: trace.len(),
        striped,
        max_distance,
        coverage_radius: trace.coverage_radius(range.0, range.1),
        contained: max_distance.is_none_or(|d| d <= CONTAINMENT_TOL),
    };
    let contained = report.contained;
    let doc = match format {
        Format::Json => to_json(&TraceDoc { scheme, slope, x_extent, y_min: range.0, y_max: range.1, report, trace }),
        Format::Csv => to_csv(
            &["value", "m", "n", "k"],
            trace
                .intercepts()
                .iter()
                .map(|i| vec![g17(i.value), i.source.m.to_string(), i.source.n.to_string(), i.source.k.to_string()]),
        )?,
        _ => format!(
            "intercepts={} striped={} max_distance={} coverage_radius={} contained={}\n",
            report.intercepts,
            report.striped,
            report.max_distance.map_or("n/a".to_owned(), |d| format!("{d:e}")),
            format_args!("{:e}", report.coverage_radius),
            report.contained
        ),
    };
    common.emit(&doc, out)?;
    if contained {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("traced intercepts leave the stripes by more than {CONTAINMENT_TOL:e}")))
    }
}

#[allow(clippy::too_many_arguments)]
fn iet(
    scheme: &SchemeArgs,
    slope: &SlopeArgs,
    alpha: f64,
    steps: u64,
    exact: bool,
    common: &Common,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let scheme = scheme.balanced_scheme(err)?;
    let slope = slope.structured("iet")?;
    common.format(&[Format::Json], Format::Json)?;
    if !alpha.is_finite() {
        return Err(Failure::Invalid("--alpha must be finite".into()));
    }
    let sus = Suspension::new(scheme, slope)?;
    let alpha = cutproj::suspension::reduce_mod_inv(alpha, slope.d());
    let mut doc = String::new();
    let mut push = |rec: &cutproj::suspension::OrbitRecord| {
        doc.push_str(&serde_json::to_string(rec).expect("record serializes"));
        doc.push('\n');
    };
    if exact {
        sus.orbit(alpha).take(steps as usize + 1).for_each(|r| push(&r));
    } else {
        let mut state = BaseState::new(0.0, alpha);
        for step in 0..=steps {
            let invariant_residual = sus.invariant_residual(state, alpha);
            push(&cutproj::suspension::OrbitRecord { step, xi: state.xi, eta: state.eta, invariant_residual });
            state = sus.poincare_step(state);
        }
    }
    common.emit(&doc, out)
}

#[allow(clippy::too_many_arguments)]
fn kronecker(
    scheme: &SchemeArgs,
    slope: &SlopeArgs,
    target: (f64, f64),
    delta: f64,
    t_max: f64,
    common: &Common,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let scheme = scheme.scheme(err)?;
    let s = slope.generic()?;
    let format = common.format(&[Format::Text, Format::Json], Format::Text)?;
    let probe = kronecker_density_check(&scheme, s, target, delta, t_max, common.budget())?;
    let doc = match format {
        Format::Json => to_json(&probe),
        _ => format!("hit={} min_distance={}\n", probe.hit, g17(probe.min_distance)),
    };
    common.emit(&doc, out)
}

#[allow(clippy::too_many_arguments)]
fn render(
    figure: Option<u8>,
    scheme: &SchemeArgs,
    slope: &SlopeArgs,
    viewport: f64,
    source_half_width: f64,
    px: u32,
    common: &Common,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    common.format(&[Format::Svg], Format::Svg)?;
    let config = match figure {
        Some(n) => {
            if !scheme.is_empty() || !slope.is_empty() {
                return Err(Failure::Invalid("--figure fixes the scheme and slope; drop the other options".into()));
            }
            cutproj::render::Figure::from_number(n).expect("clap restricts the figure number").config()
        }
        None => RenderConfig {
            scheme: scheme.scheme(err)?,
            slope: slope.slope()?,
            viewport: Viewport::square(viewport, px)?,
            source: SourceBox::square(source_half_width)?,
            style: SvgStyle::default(),
        },
    };
    let (family, svg) = config.render(common.budget())?;
    match &common.out {
        Some(_) => {
            common.emit(&svg, out)?;
            writeln!(out, "lines={}", family.len())?;
        }
        None => {
            out.write_all(svg.as_bytes())?;
            writeln!(err, "lines={}", family.len())?;
        }
    }
    Ok(())
}

fn check(out: &mut dyn Write) -> Outcome {
    let mut reports = checks::run_all();
    reports.push(round_trip_check());
    let mut failed = 0;
    for r in &reports {
        writeln!(out, "{r}")?;
        failed += usize::from(!r.passed);
    }
    writeln!(out, "{} of {} criteria passed", reports.len() - failed, reports.len())?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("{failed} criteria failed")))
    }
}

/// Extra gate beyond the numeric criteria: the published JSON forms of the
/// scheme, slopes and figure configs re-parse to the same values.
fn round_trip_check() -> checks::CriterionReport {
    let start = std::time::Instant::now();
    let mut problems = Vec::new();
    for figure in [cutproj::render::Figure::One, cutproj::render::Figure::Two] {
        let config = figure.config();
        let json = serde_json::to_string(&config).expect("config serializes");
        match serde_json::from_str::<RenderConfig>(&json) {
            Ok(back) if back == config => {}
            Ok(_) => problems.push(format!("{figure:?} config changed on re-parse")),
            Err(e) => problems.push(format!("{figure:?} config: {e}")),
        }
    }
    for slope in [Slope::Horizontal, Slope::structured(3, -2, 5).expect("valid"), Slope::generic(0.1).expect("valid")] {
        let json = serde_json::to_string(&slope).expect("slope serializes");
        if serde_json::from_str::<Slope>(&json).ok() != Some(slope) {
            problems.push(format!("slope {json} does not round-trip"));
        }
    }
    let passed = problems.is_empty();
    checks::CriterionReport {
        id: 9,
        title: "JSON round trip",
        passed,
        detail: if passed { "figure configs and slopes re-parse unchanged".into() } else { problems.join("; ") },
        elapsed: start.elapsed(),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INVALID
                }
            };
        }
    };
    let outcome = match &cli.command {
        Command::Enumerate { scheme, range, common } => enumerate(scheme, *range, common, out, err),
        Command::Classify { scheme, slope, common } => classify(scheme, slope, common, out, err),
        Command::Closure { scheme, slope, range, common } => closure(scheme, slope, *range, common, out, err),
        Command::Trace { scheme, slope, range, x_extent, common } => {
            trace(scheme, slope, *range, *x_extent, common, out, err)
        }
        Command::Iet { scheme, slope, alpha, steps, exact, common } => {
            iet(scheme, slope, *alpha, *steps, *exact, common, out, err)
        }
        Command::Kronecker { scheme, slope, target, delta, t_max, common } => {
            kronecker(scheme, slope, *target, *delta, *t_max, common, out, err)
        }
        Command::Render { figure, scheme, slope, viewport, source_half_width, px, common } => {
            render(*figure, scheme, slope, *viewport, *source_half_width, *px, common, out, err)
        }
        Command::Check => check(out),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_BUDGET
        }
        Err(Failure::Invalid(msg) | Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_and_triples() {
        assert_eq!(parse_pair("-2.5, 3").unwrap(), (-2.5, 3.0));
        assert_eq!(parse_triple("1,-1,1").unwrap(), (1, -1, 1));
        assert!(parse_pair("1").is_err());
        assert!(parse_pair("1,x").is_err());
        assert!(parse_triple("1,2,3,4").is_err());
        // decimal commas are not accepted
        assert!(parse_pair("0,5,1").is_err());
    }

    #[test]
    fn short_trims() {
        assert_eq!(short(0.5), "0.5");
        assert_eq!(short(1.0), "1");
        assert_eq!(short(0.49999999999999994), "0.5");
        assert_eq!(short(-1e-9), "0");
    }
}
