//! Line families through `Λ` clipped to a viewport, and deterministic SVG.
//!
//! Lines are drawn through the points `(x, k)` of `Λ` inside a source box
//! `[x_min, x_max] × [k_min, k_max]`. A line is kept iff its segment inside
//! the closed viewport is nonempty (tangent lines count, tolerance `1e-9`),
//! and lines whose y-intercepts agree within `1e-9` are merged.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{enumerate_model_set, Budget};
use crate::numfmt::{g17, serialize_g17};
use crate::scheme::Scheme;
use crate::slope::Slope;

/// Viewport inclusion tolerance.
pub const INCLUSION_TOL: f64 = 1e-9;
/// Two lines with intercepts closer than this are the same line.
pub const DEDUP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Viewport {
    #[serde(serialize_with = "serialize_g17")]
    pub x_min: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub x_max: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub y_min: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub y_max: f64,
    pub width_px: u32,
    pub height_px: u32,
}

impl Viewport {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64, width_px: u32, height_px: u32) -> Result<Self> {
        let finite = [x_min, x_max, y_min, y_max].iter().all(|v| v.is_finite());
        if !finite || x_min >= x_max || y_min >= y_max {
            return Err(Error::InvalidArgument(format!(
                "viewport [{x_min}, {x_max}] x [{y_min}, {y_max}] is empty or not finite"
            )));
        }
        if width_px == 0 || height_px == 0 {
            return Err(Error::InvalidArgument("viewport pixel size must be positive".into()));
        }
        Ok(Self { x_min, x_max, y_min, y_max, width_px, height_px })
    }

    /// `[-h, h]²` at `px × px` pixels.
    pub fn square(half_width: f64, px: u32) -> Result<Self> {
        Self::new(-half_width, half_width, -half_width, half_width, px, px)
    }
}

/// The finite piece of `Λ` lines are drawn through.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SourceBox {
    #[serde(serialize_with = "serialize_g17")]
    pub x_min: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub x_max: f64,
    pub k_min: i64,
    pub k_max: i64,
}

impl SourceBox {
    pub fn new(x_min: f64, x_max: f64, k_min: i64, k_max: i64) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) || x_min >= x_max || k_min > k_max {
            return Err(Error::InvalidArgument(format!("source box [{x_min}, {x_max}] x [{k_min}, {k_max}] is empty")));
        }
        Ok(Self { x_min, x_max, k_min, k_max })
    }

    /// `Λ ∩ [-r, r]²`.
    pub fn square(half_width: f64) -> Result<Self> {
        Self::new(-half_width, half_width, (-half_width).ceil() as i64, half_width.floor() as i64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    #[serde(serialize_with = "serialize_g17")]
    pub intercept: f64,
    /// Number of source points on this line.
    pub multiplicity: u32,
}

/// Lines `y = intercept + slope·x`, sorted by intercept.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineFamily {
    #[serde(serialize_with = "serialize_g17")]
    pub slope: f64,
    pub lines: Vec<Line>,
}

impl LineFamily {
    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

/// The range `[lo, hi]` of intercepts whose lines meet the viewport.
fn intercept_window(slope: f64, vp: &Viewport) -> (f64, f64) {
    let (a, b) = (vp.y_min - slope * vp.x_min, vp.y_min - slope * vp.x_max);
    let (c, d) = (vp.y_max - slope * vp.x_min, vp.y_max - slope * vp.x_max);
    (a.min(b) - INCLUSION_TOL, c.max(d) + INCLUSION_TOL)
}

/// Segment of `y = intercept + slope·x` inside the closed viewport.
pub fn clip_line(slope: f64, intercept: f64, vp: &Viewport) -> Option<((f64, f64), (f64, f64))> {
    let (lo, hi) = intercept_window(slope, vp);
    if intercept < lo || intercept > hi {
        return None;
    }
    let clamp_y = |y: f64| y.clamp(vp.y_min, vp.y_max);
    if slope == 0.0 {
        let y = clamp_y(intercept);
        return Some(((vp.x_min, y), (vp.x_max, y)));
    }
    let at_bottom = ((vp.y_min - intercept) / slope, vp.y_min);
    let at_top = ((vp.y_max - intercept) / slope, vp.y_max);
    let (enter, exit) = if slope > 0.0 { (at_bottom, at_top) } else { (at_top, at_bottom) };
    // crossings of the horizontal edges keep the edge's y exactly
    let start = if enter.0 > vp.x_min { enter } else { (vp.x_min, clamp_y(intercept + slope * vp.x_min)) };
    let end = if exit.0 < vp.x_max { exit } else { (vp.x_max, clamp_y(intercept + slope * vp.x_max)) };
    if start.0 > end.0 {
        // corner tangency admitted by the tolerance
        let x = (0.5 * (start.0 + end.0)).clamp(vp.x_min, vp.x_max);
        let p = (x, clamp_y(intercept + slope * x));
        return Some((p, p));
    }
    Some((start, end))
}

/// Smallest x-interval of the source box outside which no source point's
/// line meets the viewport. `None` when no line can.
pub fn sufficient_x_range(slope: f64, vp: &Viewport, source: &SourceBox) -> Option<(f64, f64)> {
    let (w_lo, w_hi) = intercept_window(slope, vp);
    let (k_lo, k_hi) = (source.k_min as f64, source.k_max as f64);
    let (lo, hi) = if slope == 0.0 {
        if k_hi < w_lo || k_lo > w_hi {
            return None;
        }
        (source.x_min, source.x_max)
    } else {
        // intercept k − s·x ∈ [w_lo, w_hi]  ⇔  x between (k − w_hi)/s and (k − w_lo)/s
        let ends = [(k_lo - w_hi) / slope, (k_lo - w_lo) / slope, (k_hi - w_hi) / slope, (k_hi - w_lo) / slope];
        let lo = ends.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ends.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (lo.max(source.x_min), hi.min(source.x_max))
    };
    (lo <= hi).then_some((lo, hi))
}

/// Lines of the given slope through source points of `Λ` that meet the
/// viewport, with multiplicities.
pub fn collect_lines(
    scheme: &Scheme,
    slope: &Slope,
    viewport: &Viewport,
    source: &SourceBox,
    budget: Budget,
) -> Result<LineFamily> {
    let s = slope.value(scheme);
    match sufficient_x_range(s, viewport, source) {
        Some(range) => collect_lines_over(scheme, slope, viewport, source, range, budget),
        None => Ok(LineFamily { slope: s, lines: Vec::new() }),
    }
}

/// Like [`collect_lines`] but enumerates `Λ_F` over an explicit x-range
/// (still restricted to the source box).
pub fn collect_lines_over(
    scheme: &Scheme,
    slope: &Slope,
    viewport: &Viewport,
    source: &SourceBox,
    x_range: (f64, f64),
    budget: Budget,
) -> Result<LineFamily> {
    let s = slope.value(scheme);
    let (w_lo, w_hi) = intercept_window(s, viewport);
    // widen degenerate ranges so the enumerator sees a proper interval
    let (x_lo, x_hi) = if x_range.0 < x_range.1 { x_range } else { (x_range.0 - 1e-9, x_range.1 + 1e-9) };
    let points = enumerate_model_set(scheme, x_lo, x_hi, budget)?;

    let mut intercepts = Vec::new();
    for p in points.iter().filter(|p| p.x >= source.x_min && p.x <= source.x_max) {
        let shift = s * p.x;
        let k_lo = ((w_lo + shift).floor() as i64 - 1).max(source.k_min);
        let k_hi = ((w_hi + shift).ceil() as i64 + 1).min(source.k_max);
        for k in k_lo..=k_hi {
            let c = slope.intercept(scheme, p.m(), p.n(), k);
            if c >= w_lo && c <= w_hi {
                intercepts.push(c);
            }
        }
    }
    intercepts.sort_by(f64::total_cmp);

    let mut lines: Vec<Line> = Vec::new();
    for c in intercepts {
        match lines.last_mut() {
            Some(last) if c - last.intercept <= DEDUP_TOL => last.multiplicity += 1,
            _ => lines.push(Line { intercept: c, multiplicity: 1 }),
        }
    }
    Ok(LineFamily { slope: s, lines })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvgStyle {
    #[serde(serialize_with = "serialize_g17")]
    pub stroke_width: f64,
    pub stroke: String,
}

impl Default for SvgStyle {
    fn default() -> Self {
        Self { stroke_width: 0.01, stroke: "black".to_owned() }
    }
}

/// Standalone SVG 1.1 document, one `<path>` per line in intercept order.
///
/// The viewBox is the viewport with y flipped so the plane's y-axis points
/// up. `provenance` is embedded verbatim in a comment.
pub fn render_svg(family: &LineFamily, viewport: &Viewport, style: &SvgStyle, provenance: Option<&str>) -> String {
    let vp = viewport;
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        vp.width_px,
        vp.height_px,
        g17(vp.x_min),
        g17(-vp.y_max),
        g17(vp.x_max - vp.x_min),
        g17(vp.y_max - vp.y_min),
    );
    if let Some(text) = provenance {
        // "--" may not appear inside an XML comment
        let _ = writeln!(svg, "<!-- {} -->", text.replace("--", "- -"));
    }
    let _ = writeln!(svg, "<!-- lines: {} -->", family.len());
    let _ = writeln!(
        svg,
        "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\">",
        xml_escape(&style.stroke),
        g17(style.stroke_width)
    );
    for line in &family.lines {
        if let Some(((x0, y0), (x1, y1))) = clip_line(family.slope, line.intercept, vp) {
            let _ = writeln!(svg, "<path d=\"M{} {} L{} {}\"/>", g17(x0), g17(y0), g17(x1), g17(y1));
        }
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Everything needed to reproduce a rendering.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenderConfig {
    pub scheme: Scheme,
    pub slope: Slope,
    pub viewport: Viewport,
    pub source: SourceBox,
    pub style: SvgStyle,
}

impl RenderConfig {
    /// Collects the lines and renders them with this config embedded as JSON.
    pub fn render(&self, budget: Budget) -> Result<(LineFamily, String)> {
        let family = collect_lines(&self.scheme, &self.slope, &self.viewport, &self.source, budget)?;
        let json = serde_json::to_string(self).expect("render config serializes");
        let svg = render_svg(&family, &self.viewport, &self.style, Some(&format!("cutproj render config: {json}")));
        Ok((family, svg))
    }
}

/// The two reference pictures: θ = π/6, ε = (1 + √3)/2, viewport
/// `[-2.5, 2.5]²`.
///
/// Figure 1 uses the structured slope `cosθ + sinθ` (`(a, b, d) = (1, -1, 1)`)
/// through `Λ ∩ [-5, 5]²` and shows stripes (112 lines). Figure 2 uses the
/// generic slope `√2` through `Λ ∩ [-10, 10]²` (241 lines).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    One,
    Two,
}

impl Figure {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Figure::One),
            2 => Some(Figure::Two),
            _ => None,
        }
    }

    pub fn expected_lines(&self) -> usize {
        match self {
            Figure::One => 112,
            Figure::Two => 241,
        }
    }

    pub fn config(&self) -> RenderConfig {
        let scheme = Scheme::thirty_degrees((1.0 + 3f64.sqrt()) / 2.0).expect("π/6 scheme");
        let (slope, half_width) = match self {
            Figure::One => (Slope::structured(1, -1, 1).expect("valid slope"), 5.0),
            Figure::Two => (Slope::generic(2f64.sqrt()).expect("valid slope"), 10.0),
        };
        RenderConfig {
            scheme,
            slope,
            viewport: Viewport::square(2.5, 800).expect("valid viewport"),
            source: SourceBox::square(half_width).expect("valid source box"),
            style: SvgStyle::default(),
        }
    }
}
