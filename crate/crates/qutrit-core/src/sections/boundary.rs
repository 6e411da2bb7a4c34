//! Boundary point-cloud extraction for sections.
//!
//! The boundary is where the smallest eigenvalue of the embedded matrix
//! crosses zero (equivalently `det rho = 0` on the physical side). Extraction
//! is purely numerical:
//!
//! - order 1: sign-change scan along the axis,
//! - order 2: marching-squares zero crossings on the grid edges,
//! - order 3: per-grid-line sign-change bisection along all three axes,
//! - order >= 4: ray bisection from the origin along seeded uniform
//!   directions (the physical region is convex and contains the origin, so
//!   each ray crosses the boundary exactly once).
//!
//! Every crossing is refined by bisection to `|min eigenvalue| <= 1e-10` and
//! emitted in deterministic grid or ray order.

use crate::sampling::RngStream;

use super::{section_matrix, SectionId, SEARCH_DOMAIN};

/// Bisection target on the smallest eigenvalue.
pub const BISECT_TOL: f64 = 1e-10;

/// Fallback stop on the bracket width. Near a doubly degenerate zero the
/// closed-form eigenvalue carries a few 1e-9 of jitter, so the value test
/// alone may never fire; a bracket this tight pins the true crossing well
/// below `BISECT_TOL` regardless.
const BISECT_WIDTH: f64 = 1e-13;

const MAX_BISECT: usize = 200;

/// A boundary point with its membership annotations.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPoint {
    /// Section coordinates of the point.
    pub coords: Vec<f64>,
    /// `det rho` at the point.
    pub det: f64,
    /// `tr rho^2` at the point.
    pub i2_trace: f64,
    /// `3 tr rho^2 - 2 tr rho^3` at the point.
    pub i3_trace: f64,
}

/// Ordered boundary point cloud of one section.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    pub section: SectionId,
    pub points: Vec<BoundaryPoint>,
}

/// Extracts the boundary cloud of a section.
///
/// `resolution` is the per-axis grid size for orders up to 3 (at least 2);
/// `samples` is the ray count for order 4 and above; `seed` fixes the ray
/// directions.
pub fn boundary_cloud(id: &SectionId, resolution: usize, samples: usize, seed: u64) -> PointCloud {
    let points = match id.k() {
        1 => scan_line(id, resolution.max(2)),
        2 => marching_squares(id, resolution.max(2)),
        3 => grid_lines(id, resolution.max(2)),
        _ => ray_bisection(id, samples, seed),
    };
    PointCloud {
        section: id.clone(),
        points,
    }
}

fn min_eig(id: &SectionId, coords: &[f64]) -> f64 {
    section_matrix(id, coords)
        .expect("coordinate arity fixed by caller")
        .eigenvalues()[2]
}

fn annotate(id: &SectionId, coords: Vec<f64>) -> BoundaryPoint {
    let rho = section_matrix(id, &coords).expect("coordinate arity fixed by caller");
    let ti = rho.trace_invariants();
    BoundaryPoint {
        coords,
        det: rho.det(),
        i2_trace: ti.i2,
        i3_trace: ti.i3,
    }
}

fn grid_coord(i: usize, resolution: usize) -> f64 {
    let step = 2.0 * SEARCH_DOMAIN / (resolution - 1) as f64;
    -SEARCH_DOMAIN + i as f64 * step
}

/// Bisects `f` along the segment from `a` to `b`, where the sign of `f`
/// changes, until `|f| <= BISECT_TOL` or the bracket collapses below
/// `BISECT_WIDTH`. Returns the refined point, or `None` in the (never
/// observed) case neither stop is reached.
fn bisect_segment<F>(f: F, a: &[f64], b: &[f64], fa: f64) -> Option<Vec<f64>>
where
    F: Fn(&[f64]) -> f64,
{
    let mut lo: Vec<f64> = a.to_vec();
    let mut hi: Vec<f64> = b.to_vec();
    let positive_at_lo = fa > 0.0;
    let mut mid = vec![0.0; a.len()];
    for _ in 0..MAX_BISECT {
        let mut width = 0.0_f64;
        for ((m, l), h) in mid.iter_mut().zip(lo.iter()).zip(hi.iter()) {
            *m = 0.5 * (l + h);
            width = width.max((h - l).abs());
        }
        let fm = f(&mid);
        if fm.abs() <= BISECT_TOL || width <= BISECT_WIDTH {
            return Some(mid);
        }
        if (fm > 0.0) == positive_at_lo {
            lo.copy_from_slice(&mid);
        } else {
            hi.copy_from_slice(&mid);
        }
    }
    None
}

fn crossing(fa: f64, fb: f64) -> bool {
    (fa > 0.0) != (fb > 0.0)
}

fn scan_line(id: &SectionId, resolution: usize) -> Vec<BoundaryPoint> {
    let f = |c: &[f64]| min_eig(id, c);
    let mut points = Vec::new();
    let mut prev = f(&[grid_coord(0, resolution)]);
    for i in 1..resolution {
        let a = [grid_coord(i - 1, resolution)];
        let b = [grid_coord(i, resolution)];
        let fb = f(&b);
        if crossing(prev, fb) {
            if let Some(p) = bisect_segment(f, &a, &b, prev) {
                points.push(annotate(id, p));
            }
        }
        prev = fb;
    }
    points
}

fn marching_squares(id: &SectionId, resolution: usize) -> Vec<BoundaryPoint> {
    let f = |c: &[f64]| min_eig(id, c);
    let mut values = vec![0.0; resolution * resolution];
    for i in 0..resolution {
        for j in 0..resolution {
            values[i * resolution + j] = f(&[grid_coord(i, resolution), grid_coord(j, resolution)]);
        }
    }
    let mut points = Vec::new();
    for i in 0..resolution {
        for j in 0..resolution {
            let fa = values[i * resolution + j];
            let a = [grid_coord(i, resolution), grid_coord(j, resolution)];
            if j + 1 < resolution {
                let fb = values[i * resolution + j + 1];
                if crossing(fa, fb) {
                    let b = [a[0], grid_coord(j + 1, resolution)];
                    if let Some(p) = bisect_segment(f, &a, &b, fa) {
                        points.push(annotate(id, p));
                    }
                }
            }
            if i + 1 < resolution {
                let fb = values[(i + 1) * resolution + j];
                if crossing(fa, fb) {
                    let b = [grid_coord(i + 1, resolution), a[1]];
                    if let Some(p) = bisect_segment(f, &a, &b, fa) {
                        points.push(annotate(id, p));
                    }
                }
            }
        }
    }
    points
}

fn grid_lines(id: &SectionId, resolution: usize) -> Vec<BoundaryPoint> {
    let f = |c: &[f64]| min_eig(id, c);
    let r = resolution;
    let mut values = vec![0.0; r * r * r];
    for i in 0..r {
        for j in 0..r {
            for l in 0..r {
                values[(i * r + j) * r + l] = f(&[
                    grid_coord(i, r),
                    grid_coord(j, r),
                    grid_coord(l, r),
                ]);
            }
        }
    }
    let value_at = |idx: [usize; 3]| values[(idx[0] * r + idx[1]) * r + idx[2]];
    let mut points = Vec::new();
    // lines along each axis in turn, fixed indices in row-major order
    for axis in 0..3 {
        for s in 0..r {
            for t in 0..r {
                for pos in 1..r {
                    let mut ia = [s, t, 0];
                    ia.swap(axis, 2);
                    let mut ib = ia;
                    ia[axis] = pos - 1;
                    ib[axis] = pos;
                    let fa = value_at(ia);
                    let fb = value_at(ib);
                    if crossing(fa, fb) {
                        let a: Vec<f64> = ia.iter().map(|&x| grid_coord(x, r)).collect();
                        let b: Vec<f64> = ib.iter().map(|&x| grid_coord(x, r)).collect();
                        if let Some(p) = bisect_segment(f, &a, &b, fa) {
                            points.push(annotate(id, p));
                        }
                    }
                }
            }
        }
    }
    points
}

fn ray_bisection(id: &SectionId, samples: usize, seed: u64) -> Vec<BoundaryPoint> {
    let k = id.k();
    let f = |c: &[f64]| min_eig(id, c);
    let mut rng = RngStream::new(seed);
    let mut points = Vec::with_capacity(samples);
    for _ in 0..samples {
        let dir = random_direction(&mut rng, k);
        // the origin is maximally mixed (min eig 1/3); past the unit sphere
        // tr rho^2 exceeds 1, so the far end is always unphysical
        let far: Vec<f64> = dir.iter().map(|d| d * SEARCH_DOMAIN).collect();
        let origin = vec![0.0; k];
        if let Some(p) = bisect_segment(f, &origin, &far, 1.0 / 3.0) {
            points.push(annotate(id, p));
        }
    }
    points
}

fn random_direction(rng: &mut RngStream, k: usize) -> Vec<f64> {
    loop {
        let mut dir = Vec::with_capacity(k);
        while dir.len() < k {
            let g = rng.next_complex_gaussian();
            dir.push(g.re);
            if dir.len() < k {
                dir.push(g.im);
            }
        }
        let norm = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-9 {
            for d in dir.iter_mut() {
                *d /= norm;
            }
            return dir;
        }
    }
}
