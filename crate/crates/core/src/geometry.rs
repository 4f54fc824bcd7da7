//! Rosette trajectories and a geometric cross-check of winding numbers.
//!
//! The orbit `1/r = (1 + eps cos(omega theta)) / (a (1 - eps²))` is sampled
//! uniformly in the polar angle and the resulting polyline is scanned for
//! transversal self-intersections.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::OrbitParameters;

/// Smallest `samples_per_rev` accepted by [`sample_trajectory`].
pub const MIN_SAMPLES_PER_REV: usize = 16;

/// Smallest `samples_per_rev` accepted by [`count_self_intersections`].
pub const INTERSECTION_SAMPLE_FLOOR: usize = 512;

/// Crossings this close to a segment end are merged by nearest sample pair.
const ENDPOINT_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub theta: f64,
    pub r: f64,
    pub x: f64,
    pub y: f64,
}

/// Samples of the orbit over whole radial periods, strictly increasing in theta.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryPolyline {
    params: OrbitParameters,
    points: Vec<TrajectoryPoint>,
    revolutions: u32,
    samples_per_rev: usize,
}

impl TrajectoryPolyline {
    pub fn params(&self) -> &OrbitParameters {
        &self.params
    }

    pub fn points(&self) -> &[TrajectoryPoint] {
        &self.points
    }

    /// Number of radial periods (perihelion to perihelion) covered.
    pub fn revolutions(&self) -> u32 {
        self.revolutions
    }

    pub fn samples_per_rev(&self) -> usize {
        self.samples_per_rev
    }

    /// The points of the first radial period, both perihelia included.
    pub fn first_period(&self) -> &[TrajectoryPoint] {
        &self.points[..=self.samples_per_rev]
    }
}

/// Distance from the focus at polar angle `theta`, in Bohr radii.
pub fn radius_at(params: &OrbitParameters, theta: f64) -> f64 {
    params.semi_latus_rectum() / (1.0 + params.epsilon * (params.omega * theta).cos())
}

pub fn sample_trajectory(
    params: &OrbitParameters,
    revolutions: u32,
    samples_per_rev: usize,
) -> Result<TrajectoryPolyline> {
    if revolutions < 1 {
        return Err(Error::Argument(format!(
            "revolutions must be at least 1, got {revolutions}"
        )));
    }
    if samples_per_rev < MIN_SAMPLES_PER_REV {
        return Err(Error::Argument(format!(
            "samples per revolution must be at least {MIN_SAMPLES_PER_REV}, got {samples_per_rev}"
        )));
    }

    let step = params.radial_period() / samples_per_rev as f64;
    let n = revolutions as usize * samples_per_rev;
    let points = (0..=n)
        .map(|k| {
            let theta = k as f64 * step;
            let r = radius_at(params, theta);
            let (sin, cos) = theta.sin_cos();
            TrajectoryPoint {
                theta,
                r,
                x: r * cos,
                y: r * sin,
            }
        })
        .collect();

    Ok(TrajectoryPolyline {
        params: *params,
        points,
        revolutions,
        samples_per_rev,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodLimit {
    /// Only `theta` in `[0, 2 pi / omega]`.
    OnePeriod,
    /// The whole polyline. Quadratic in its length.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionReport {
    /// Crossings found in the requested window.
    pub count: usize,
    /// Crossings within one radial period.
    pub loops: usize,
    /// `loops + 1`.
    pub winding_from_geometry: usize,
}

pub fn count_self_intersections(
    poly: &TrajectoryPolyline,
    period_limit: PeriodLimit,
) -> Result<IntersectionReport> {
    if poly.samples_per_rev < INTERSECTION_SAMPLE_FLOOR {
        return Err(Error::Resolution {
            samples_per_rev: poly.samples_per_rev,
            floor: INTERSECTION_SAMPLE_FLOOR,
        });
    }
    if poly.params.epsilon == 0.0 {
        return Err(Error::Degenerate);
    }

    let loops = crossings(poly.first_period()).len();
    let count = match period_limit {
        PeriodLimit::OnePeriod => loops,
        PeriodLimit::Full => crossings(&poly.points).len(),
    };
    Ok(IntersectionReport {
        count,
        loops,
        winding_from_geometry: loops + 1,
    })
}

#[derive(Clone, Copy)]
struct Segment {
    ax: f64,
    ay: f64,
    bx: f64,
    by: f64,
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Segment {
    fn new(a: &TrajectoryPoint, b: &TrajectoryPoint) -> Self {
        Segment {
            ax: a.x,
            ay: a.y,
            bx: b.x,
            by: b.y,
            min_x: a.x.min(b.x),
            max_x: a.x.max(b.x),
            min_y: a.y.min(b.y),
            max_y: a.y.max(b.y),
        }
    }

    fn boxes_overlap(&self, other: &Segment) -> bool {
        self.min_x <= other.max_x
            && other.min_x <= self.max_x
            && self.min_y <= other.max_y
            && other.min_y <= self.max_y
    }

    /// Parameters `(t, u)` of the intersection point along `self` and
    /// `other`, or `None` when they do not cross or are parallel.
    fn crossing(&self, other: &Segment) -> Option<(f64, f64)> {
        let (rx, ry) = (self.bx - self.ax, self.by - self.ay);
        let (sx, sy) = (other.bx - other.ax, other.by - other.ay);
        let denom = rx * sy - ry * sx;
        if denom == 0.0 {
            // Parallel or collinear: never transversal.
            return None;
        }
        let (qx, qy) = (other.ax - self.ax, other.ay - self.ay);
        let t = (qx * sy - qy * sx) / denom;
        let u = (qx * ry - qy * rx) / denom;
        if (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u) {
            Some((t, u))
        } else {
            None
        }
    }
}

fn near_endpoint(t: f64) -> bool {
    t <= ENDPOINT_SLACK || t >= 1.0 - ENDPOINT_SLACK
}

/// Transversal crossings between non-adjacent segments, as sorted keys.
///
/// Interior crossings are keyed by their segment pair. Crossings that land
/// on (or within [`ENDPOINT_SLACK`] of) a vertex show up on two or four
/// segment pairs, so they are keyed by the nearest sample indices instead.
fn crossings(points: &[TrajectoryPoint]) -> BTreeSet<(usize, usize, bool)> {
    let segments: Vec<Segment> = points
        .windows(2)
        .map(|w| Segment::new(&w[0], &w[1]))
        .collect();
    // Sweep in x: only pairs whose x-ranges overlap reach the exact test.
    let mut order: Vec<usize> = (0..segments.len()).collect();
    order.sort_by(|&a, &b| segments[a].min_x.total_cmp(&segments[b].min_x));

    let mut found = BTreeSet::new();
    for (pos, &a) in order.iter().enumerate() {
        let sa = &segments[a];
        for &b in &order[pos + 1..] {
            let sb = &segments[b];
            if sb.min_x > sa.max_x {
                break;
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if j < i + 2 || !sa.boxes_overlap(sb) {
                continue;
            }
            let Some((t, u)) = segments[i].crossing(&segments[j]) else {
                continue;
            };
            if near_endpoint(t) || near_endpoint(u) {
                let vi = i + (t >= 0.5) as usize;
                let vj = j + (u >= 0.5) as usize;
                if vj > vi + 1 {
                    found.insert((vi, vj, true));
                }
            } else {
                found.insert((i, j, false));
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{orbit_parameters, IonSpec, QuantumNumbers};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn excited(z: u32) -> OrbitParameters {
        orbit_parameters(IonSpec::excited(z).unwrap())
    }

    #[test]
    fn radius_at_apsides() {
        let u = excited(92);
        assert_relative_eq!(radius_at(&u, 0.0), u.r_min, max_relative = 1e-12);
        assert_relative_eq!(radius_at(&u, PI / u.omega), u.r_max, max_relative = 1e-12);
        assert_relative_eq!(radius_at(&u, 0.0), 0.00335921, max_relative = 5e-6);
        assert_relative_eq!(radius_at(&u, PI / u.omega), 0.0672735, max_relative = 5e-6);
        for theta in [0.1, 1.7, 4.0, 11.0] {
            assert_eq!(radius_at(&u, theta), radius_at(&u, -theta));
        }
    }

    #[test]
    fn sample_counts_and_endpoints() {
        let u = excited(92);
        let poly = sample_trajectory(&u, 1, 360).unwrap();
        assert_eq!(poly.points().len(), 361);
        let first = poly.points()[0];
        assert_eq!((first.theta, first.y), (0.0, 0.0));
        assert_relative_eq!(first.r, u.r_min, max_relative = 1e-12);
        assert_eq!(first.x, first.r);
        let last = poly.points().last().unwrap();
        assert_relative_eq!(last.theta, 2.0 * PI / u.omega, max_relative = 1e-12);
        assert_relative_eq!(last.r, u.r_min, max_relative = 1e-12);

        assert_eq!(sample_trajectory(&u, 3, 360).unwrap().points().len(), 1081);
    }

    #[test]
    fn sampling_rejects_small_arguments() {
        let u = excited(92);
        assert!(matches!(
            sample_trajectory(&u, 0, 360),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            sample_trajectory(&u, 1, 15),
            Err(Error::Argument(_))
        ));
        assert!(sample_trajectory(&u, 1, 16).is_ok());
    }

    #[test]
    fn dense_sampling_reaches_aphelion() {
        let og = excited(118);
        let poly = sample_trajectory(&og, 1, 2048).unwrap();
        let max_r = poly.points().iter().map(|p| p.r).fold(0.0, f64::max);
        assert_relative_eq!(max_r, og.r_max, max_relative = 1e-5);
    }

    #[test]
    fn bounding_annulus_tightens_with_resolution() {
        let p = excited(125);
        let err = |n| {
            let poly = sample_trajectory(&p, 1, n).unwrap();
            let max_r = poly.points().iter().map(|q| q.r).fold(0.0, f64::max);
            (p.r_max - max_r) / p.r_max
        };
        // Odd counts so no sample lands exactly on the aphelion.
        assert!(err(4097) < err(513));
        assert!(err(4096) <= err(512));
    }

    #[test]
    fn intersection_requires_resolution_and_eccentricity() {
        let u = excited(92);
        let coarse = sample_trajectory(&u, 1, 511).unwrap();
        assert!(matches!(
            count_self_intersections(&coarse, PeriodLimit::OnePeriod),
            Err(Error::Resolution {
                samples_per_rev: 511,
                floor: 512
            })
        ));
        let ground = orbit_parameters(IonSpec::new(118, QuantumNumbers::GROUND).unwrap());
        let circle = sample_trajectory(&ground, 1, 1024).unwrap();
        assert!(matches!(
            count_self_intersections(&circle, PeriodLimit::OnePeriod),
            Err(Error::Degenerate)
        ));
    }

    #[test]
    fn oganesson_has_one_loop() {
        let poly = sample_trajectory(&excited(118), 1, 4096).unwrap();
        let report = count_self_intersections(&poly, PeriodLimit::OnePeriod).unwrap();
        assert_eq!(report.loops, 1);
        assert_eq!(report.winding_from_geometry, 2);
    }

    #[test]
    fn unbihexium_has_two_loops() {
        let poly = sample_trajectory(&excited(126), 1, 4096).unwrap();
        let report = count_self_intersections(&poly, PeriodLimit::OnePeriod).unwrap();
        assert_eq!(report.loops, 2);
        assert_eq!(report.winding_from_geometry, 3);
    }

    #[test]
    fn full_window_counts_more_than_one_period() {
        let poly = sample_trajectory(&excited(92), 2, 512).unwrap();
        let report = count_self_intersections(&poly, PeriodLimit::Full).unwrap();
        assert_eq!(report.loops, 1);
        assert!(report.count > report.loops);
    }

    #[test]
    fn crossing_through_a_vertex_counts_once() {
        let pt = |x: f64, y: f64| TrajectoryPoint {
            theta: 0.0,
            r: 0.0,
            x,
            y,
        };
        // Second pass goes straight through vertex (1, 0) of the first pass.
        let pts = [
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(2.0, 0.0),
            pt(2.0, 2.0),
            pt(1.0, 1.0),
            pt(1.0, -1.0),
        ];
        assert_eq!(crossings(&pts).len(), 1);
        // Plain interior crossing.
        let pts = [
            pt(0.0, 0.0),
            pt(2.0, 0.0),
            pt(2.0, 2.0),
            pt(1.0, 2.0),
            pt(1.0, -1.0),
        ];
        assert_eq!(crossings(&pts).len(), 1);
        // Touching adjacent segments never count.
        let pts = [pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 0.0)];
        assert_eq!(crossings(&pts).len(), 0);
    }
}
