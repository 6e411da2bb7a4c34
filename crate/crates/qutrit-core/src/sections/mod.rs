//! Coordinate sections of the 8-dimensional parameter space.
//!
//! A k-section is the subspace where only k of the eight SU(3) coordinates
//! are nonzero. The 28 two-parameter sections fall into four boundary-shape
//! classes (circle, triangle, parabola, ellipse) and the 56 three-parameter
//! sections into seven (cone, paraboloid, ellipsoid, obese tetrahedron,
//! RS1, RS2, sphere); the class tables are embedded verbatim. Boundary
//! geometry and pure-state locations are always computed from the embedded
//! matrices, never from per-section shape formulas.

mod boundary;
mod pure;

pub use boundary::{boundary_cloud, BoundaryPoint, PointCloud};
pub use pure::{
    cataloged_sections, expected_pure_states, find_pure_states, section_report, verify_catalog,
    CandidateCheck, CatalogReport, FamilyShape, PureSearchConfig, PureStateSolution,
    SectionReport, SolutionKind,
};

use crate::error::{Error, Result};
use crate::gellmann::GellMannVector;
use crate::matrix::DensityMatrix;

/// Half-width of the per-axis search box; slightly exceeds the unit ball so
/// boundary tangencies are not clipped.
pub const SEARCH_DOMAIN: f64 = 1.05;

/// A strictly increasing subset of the axes `1..=8`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SectionId {
    axes: Vec<u8>,
}

impl SectionId {
    /// Builds a section id, rejecting empty sets, out-of-range axes and
    /// duplicates. The axes are sorted.
    pub fn new(axes: &[u8]) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::EmptySection);
        }
        let mut sorted = axes.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateAxis { axis: pair[0] });
            }
        }
        if let Some(&axis) = sorted.iter().find(|&&a| !(1..=8).contains(&a)) {
            return Err(Error::InvalidAxis { axis });
        }
        Ok(Self { axes: sorted })
    }

    pub fn axes(&self) -> &[u8] {
        &self.axes
    }

    /// Section order (number of free coordinates).
    pub fn k(&self) -> usize {
        self.axes.len()
    }
}

impl std::fmt::Display for SectionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.axes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// Boundary-shape class of a section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SectionClass {
    Circle,
    Triangle,
    Parabola,
    Ellipse,
    Cone,
    Paraboloid,
    Ellipsoid,
    ObeseTetrahedron,
    RS1,
    RS2,
    Sphere,
    /// Orders 1 and 4..=8 carry no shape label.
    Unclassified,
}

impl std::fmt::Display for SectionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SectionClass::Circle => "Circle",
            SectionClass::Triangle => "Triangle",
            SectionClass::Parabola => "Parabola",
            SectionClass::Ellipse => "Ellipse",
            SectionClass::Cone => "Cone",
            SectionClass::Paraboloid => "Paraboloid",
            SectionClass::Ellipsoid => "Ellipsoid",
            SectionClass::ObeseTetrahedron => "ObeseTetrahedron",
            SectionClass::RS1 => "RS1",
            SectionClass::RS2 => "RS2",
            SectionClass::Sphere => "Sphere",
            SectionClass::Unclassified => "Unclassified",
        };
        f.write_str(s)
    }
}

const CIRCLE: [[u8; 2]; 17] = [
    [1, 2], [1, 3], [2, 3], [1, 4], [1, 5], [1, 6], [1, 7], [2, 4], [2, 5],
    [2, 6], [2, 7], [4, 5], [4, 6], [4, 7], [5, 6], [5, 7], [6, 7],
];
const TRIANGLE: [[u8; 2]; 3] = [[1, 8], [2, 8], [3, 8]];
const PARABOLA: [[u8; 2]; 4] = [[3, 4], [3, 5], [3, 6], [3, 7]];
const ELLIPSE: [[u8; 2]; 4] = [[4, 8], [5, 8], [6, 8], [7, 8]];

const CONE: [[u8; 3]; 7] = [
    [1, 2, 8], [1, 3, 8], [2, 3, 8], [3, 4, 8], [3, 5, 8], [3, 6, 8], [3, 7, 8],
];
const PARABOLOID: [[u8; 3]; 2] = [[3, 4, 5], [3, 6, 7]];
const ELLIPSOID: [[u8; 3]; 6] = [
    [4, 5, 8], [4, 6, 8], [4, 7, 8], [5, 6, 8], [5, 7, 8], [6, 7, 8],
];
const OBESE_TETRAHEDRON: [[u8; 3]; 8] = [
    [1, 4, 6], [1, 5, 7], [2, 4, 7], [2, 5, 6], [3, 4, 6], [3, 4, 7], [3, 5, 6], [3, 5, 7],
];
const RS1: [[u8; 3]; 8] = [
    [1, 3, 4], [1, 3, 5], [1, 3, 6], [1, 3, 7], [2, 3, 4], [2, 3, 5], [2, 3, 6], [2, 3, 7],
];
const RS2: [[u8; 3]; 8] = [
    [1, 4, 8], [1, 5, 8], [1, 6, 8], [1, 7, 8], [2, 4, 8], [2, 5, 8], [2, 6, 8], [2, 7, 8],
];
const SPHERE: [[u8; 3]; 17] = [
    [1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 6], [1, 2, 7], [1, 4, 5], [1, 4, 7], [1, 5, 6],
    [1, 6, 7], [2, 4, 5], [2, 4, 6], [2, 5, 7], [2, 6, 7], [4, 5, 6], [4, 5, 7], [4, 6, 7],
    [5, 6, 7],
];

/// All `C(8, k)` sections of order `k` in lexicographic order.
pub fn enumerate_sections(k: usize) -> Result<Vec<SectionId>> {
    if !(1..=8).contains(&k) {
        return Err(Error::InvalidOrder { k });
    }
    let mut out = Vec::new();
    let mut idx: Vec<u8> = (1..=k as u8).collect();
    loop {
        out.push(SectionId { axes: idx.clone() });
        // advance the combination
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if idx[i] < 8 - (k - 1 - i) as u8 {
                idx[i] += 1;
                for j in (i + 1)..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Shape class from the embedded tables; `Unclassified` for orders other
/// than 2 and 3.
pub fn section_class(id: &SectionId) -> SectionClass {
    match id.axes.as_slice() {
        [a, b] => {
            let pair = [*a, *b];
            if CIRCLE.contains(&pair) {
                SectionClass::Circle
            } else if TRIANGLE.contains(&pair) {
                SectionClass::Triangle
            } else if PARABOLA.contains(&pair) {
                SectionClass::Parabola
            } else {
                debug_assert!(ELLIPSE.contains(&pair));
                SectionClass::Ellipse
            }
        }
        [a, b, c] => {
            let triple = [*a, *b, *c];
            if CONE.contains(&triple) {
                SectionClass::Cone
            } else if PARABOLOID.contains(&triple) {
                SectionClass::Paraboloid
            } else if ELLIPSOID.contains(&triple) {
                SectionClass::Ellipsoid
            } else if OBESE_TETRAHEDRON.contains(&triple) {
                SectionClass::ObeseTetrahedron
            } else if RS1.contains(&triple) {
                SectionClass::RS1
            } else if RS2.contains(&triple) {
                SectionClass::RS2
            } else {
                debug_assert!(SPHERE.contains(&triple));
                SectionClass::Sphere
            }
        }
        _ => SectionClass::Unclassified,
    }
}

/// Places section coordinates at the section axes, zeros elsewhere.
pub fn embed_section_point(id: &SectionId, coords: &[f64]) -> Result<GellMannVector> {
    if coords.len() != id.k() {
        return Err(Error::ArityMismatch {
            expected: id.k(),
            got: coords.len(),
        });
    }
    let mut n = [0.0; 8];
    for (&axis, &c) in id.axes.iter().zip(coords.iter()) {
        n[axis as usize - 1] = c;
    }
    Ok(GellMannVector(n))
}

/// Density matrix at a section point.
pub(crate) fn section_matrix(id: &SectionId, coords: &[f64]) -> Result<DensityMatrix> {
    Ok(embed_section_point(id, coords)?.to_matrix())
}
