use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::io::Write;

use crate::error::{Error, Result};
use crate::geometry::{sample_trajectory, TrajectoryPolyline};
use crate::model::{orbit_parameters, IonSpec, OrbitParameters, QuantumNumbers};

/// Upper bound for the default number of radial periods drawn.
pub const MAX_DEFAULT_REVOLUTIONS: u32 = 64;

const COORD_DECIMALS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub width_px: u32,
    pub height_px: u32,
    pub margin_fraction: f64,
    pub stroke_width_px: f64,
    pub show_focus: bool,
    /// Overlay the circular `n_r = 0` orbit of the same ion.
    pub show_ground_circle: bool,
    /// `None` picks [`default_revolutions`].
    pub revolutions: Option<u32>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width_px: 800,
            height_px: 800,
            margin_fraction: 0.05,
            stroke_width_px: 1.0,
            show_focus: true,
            show_ground_circle: false,
            revolutions: None,
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        if self.width_px < 64 || self.height_px < 64 {
            return Err(Error::Argument(format!(
                "canvas must be at least 64x64 px, got {}x{}",
                self.width_px, self.height_px
            )));
        }
        if !(0.0..0.5).contains(&self.margin_fraction) {
            return Err(Error::Argument(format!(
                "margin fraction must lie in [0, 0.5), got {}",
                self.margin_fraction
            )));
        }
        if !(self.stroke_width_px.is_finite() && self.stroke_width_px > 0.0) {
            return Err(Error::Argument(format!(
                "stroke width must be positive, got {}",
                self.stroke_width_px
            )));
        }
        if self.revolutions == Some(0) {
            return Err(Error::Argument("revolutions must be at least 1".into()));
        }
        Ok(())
    }
}

/// Radial periods needed for the perihelion to precess through a full turn.
///
/// The precession visible per period is `delta_theta` reduced modulo a turn,
/// so orbits whose advance is close to a whole number of turns still get
/// enough periods to fill the annulus.
pub fn default_revolutions(params: &OrbitParameters) -> u32 {
    let visible = remainder(params.delta_theta, TAU).abs();
    if visible < TAU / MAX_DEFAULT_REVOLUTIONS as f64 {
        return MAX_DEFAULT_REVOLUTIONS;
    }
    ((TAU / visible).ceil() as u32).clamp(1, MAX_DEFAULT_REVOLUTIONS)
}

/// IEEE remainder: `x - n y` with `n` the integer nearest `x / y`.
fn remainder(x: f64, y: f64) -> f64 {
    x - (x / y).round() * y
}

/// Maps orbit coordinates (Bohr radii, y up) to pixels (y down).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub cx: f64,
    pub cy: f64,
    /// Pixels per Bohr radius.
    pub scale: f64,
}

impl Viewport {
    /// Centers the focus and fits the square `[-extent, extent]²` inside the
    /// canvas less its margins.
    pub fn fit(extent: f64, opts: &RenderOptions) -> Self {
        let w = opts.width_px as f64;
        let h = opts.height_px as f64;
        let half = w.min(h) / 2.0 * (1.0 - 2.0 * opts.margin_fraction);
        Viewport {
            cx: w / 2.0,
            cy: h / 2.0,
            scale: half / extent,
        }
    }

    pub fn to_svg(&self, x: f64, y: f64) -> (f64, f64) {
        (self.cx + self.scale * x, self.cy - self.scale * y)
    }

    pub fn from_svg(&self, px: f64, py: f64) -> (f64, f64) {
        ((px - self.cx) / self.scale, (self.cy - py) / self.scale)
    }
}

fn escape_xml(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn num(x: f64) -> String {
    let s = format!("{x:.COORD_DECIMALS$}");
    // Avoid "-0.0000".
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn ground_radius(params: &OrbitParameters) -> f64 {
    let ground = IonSpec::new(params.z(), QuantumNumbers::GROUND)
        .expect("the ground state exists whenever an excited state does");
    orbit_parameters(ground).a_over_a0
}

/// Writes `poly` as a standalone SVG 1.1 document. The revolution count
/// in `opts` is ignored here; the polyline is drawn as sampled.
pub fn render_svg<W: Write>(
    poly: &TrajectoryPolyline,
    opts: &RenderOptions,
    mut sink: W,
) -> Result<()> {
    opts.validate()?;
    let params = poly.params();
    let ground = opts.show_ground_circle.then(|| ground_radius(params));
    let extent = params.r_max.max(ground.unwrap_or(0.0));
    let view = Viewport::fit(extent, opts);
    let (w, h) = (opts.width_px, opts.height_px);

    let title = match crate::elements::element_info(params.z()) {
        Ok(e) => format!(
            "{} rosette, n_r={}, n_theta={}",
            e.ion_label(),
            params.ion.qn().n_r(),
            params.ion.qn().n_theta()
        ),
        Err(_) => format!(
            "Z={} rosette, n_r={}, n_theta={}",
            params.z(),
            params.ion.qn().n_r(),
            params.ion.qn().n_theta()
        ),
    };

    let mut doc = String::new();
    doc.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n");
    let _ = writeln!(
        doc,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(doc, "<title>{}</title>", escape_xml(&title));
    let _ = writeln!(
        doc,
        "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>"
    );

    if let Some(radius) = ground {
        let _ = writeln!(
            doc,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"gray\" stroke-width=\"{}\" stroke-dasharray=\"4 3\"/>",
            num(view.cx),
            num(view.cy),
            num(radius * view.scale),
            num(opts.stroke_width_px)
        );
    }

    doc.push_str("<path d=\"");
    for (i, p) in poly.points().iter().enumerate() {
        let (px, py) = view.to_svg(p.x, p.y);
        doc.push_str(if i == 0 { "M" } else { " L" });
        let _ = write!(doc, "{},{}", num(px), num(py));
    }
    let _ = writeln!(
        doc,
        "\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\" stroke-linejoin=\"round\"/>",
        num(opts.stroke_width_px)
    );

    if opts.show_focus {
        let _ = writeln!(
            doc,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"red\"/>",
            num(view.cx),
            num(view.cy),
            num((3.0 * opts.stroke_width_px).max(2.0))
        );
    }
    doc.push_str("</svg>\n");

    sink.write_all(doc.as_bytes())?;
    sink.flush()?;
    Ok(())
}

/// Samples and renders in one step, honoring `opts.revolutions`.
pub fn render_orbit_svg<W: Write>(
    params: &OrbitParameters,
    opts: &RenderOptions,
    samples_per_rev: usize,
    sink: W,
) -> Result<()> {
    opts.validate()?;
    let revolutions = opts
        .revolutions
        .unwrap_or_else(|| default_revolutions(params));
    let poly = sample_trajectory(params, revolutions, samples_per_rev)?;
    render_svg(&poly, opts, sink)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(z: u32) -> OrbitParameters {
        orbit_parameters(IonSpec::excited(z).unwrap())
    }

    fn render(z: u32, opts: &RenderOptions, spr: usize) -> String {
        let mut buf = Vec::new();
        render_orbit_svg(&params(z), opts, spr, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    fn path_points(svg: &str) -> Vec<(f64, f64)> {
        let doc = roxmltree::Document::parse(svg).unwrap();
        let paths: Vec<_> = doc
            .descendants()
            .filter(|n| n.has_tag_name("path"))
            .collect();
        assert_eq!(paths.len(), 1);
        paths[0]
            .attribute("d")
            .unwrap()
            .split(['M', 'L'])
            .filter(|s| !s.trim().is_empty())
            .map(|pair| {
                let (x, y) = pair.trim().split_once(',').unwrap();
                (x.parse().unwrap(), y.parse().unwrap())
            })
            .collect()
    }

    #[test]
    fn default_revolutions_follow_visible_precession() {
        let u = params(92);
        assert_eq!(default_revolutions(&u), (TAU / u.delta_theta).ceil() as u32);
        for z in 92..=137 {
            let n = default_revolutions(&params(z));
            assert!((1..=MAX_DEFAULT_REVOLUTIONS).contains(&n), "z={z}");
        }
    }

    #[test]
    fn oganesson_fills_a_square() {
        let svg = render(118, &RenderOptions::default(), 360);
        let pts = path_points(&svg);
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for (x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let ratio = (y1 - y0) / (x1 - x0);
        assert!((ratio - 1.0).abs() < 0.01, "ratio {ratio}");
    }

    #[test]
    fn uranium_single_period_pair_count() {
        let opts = RenderOptions {
            revolutions: Some(1),
            ..RenderOptions::default()
        };
        assert_eq!(path_points(&render(92, &opts, 360)).len(), 361);
    }

    #[test]
    fn path_extent_recovers_aphelion() {
        let opts = RenderOptions::default();
        for z in [92, 118, 126, 137] {
            let p = params(z);
            let svg = render(z, &opts, 360);
            let view = Viewport::fit(p.r_max, &opts);
            let far = path_points(&svg)
                .into_iter()
                .map(|(px, py)| {
                    let (x, y) = view.from_svg(px, py);
                    x.hypot(y)
                })
                .fold(0.0, f64::max);
            assert!(
                ((far - p.r_max) / p.r_max).abs() < 1e-6,
                "z={z}: {far} vs {}",
                p.r_max
            );
        }
    }

    #[test]
    fn output_is_deterministic_and_well_formed() {
        let opts = RenderOptions {
            show_ground_circle: true,
            ..RenderOptions::default()
        };
        let a = render(120, &opts, 64);
        let b = render(120, &opts, 64);
        assert_eq!(a, b);
        let doc = roxmltree::Document::parse(&a).unwrap();
        assert_eq!(doc.root_element().attribute("viewBox"), Some("0 0 800 800"));
        assert!(!a.contains("<script") && !a.contains("<style"));
        assert_eq!(
            doc.descendants()
                .filter(|n| n.has_tag_name("circle"))
                .count(),
            2
        );
    }

    #[test]
    fn viewport_round_trip() {
        let v = Viewport::fit(2.5, &RenderOptions::default());
        let (px, py) = v.to_svg(1.25, -0.5);
        let (x, y) = v.from_svg(px, py);
        assert!((x - 1.25).abs() < 1e-12 && (y + 0.5).abs() < 1e-12);
        assert_eq!(v.to_svg(0.0, 0.0), (400.0, 400.0));
    }

    #[test]
    fn options_are_validated() {
        let small = RenderOptions {
            width_px: 32,
            ..RenderOptions::default()
        };
        assert!(small.validate().is_err());
        let margin = RenderOptions {
            margin_fraction: 0.5,
            ..RenderOptions::default()
        };
        assert!(margin.validate().is_err());
        assert!(RenderOptions::default().validate().is_ok());
    }
}
