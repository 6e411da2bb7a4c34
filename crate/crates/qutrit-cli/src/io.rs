//! State documents, report documents and deterministic serialization.
//!
//! All numeric output is printed with 17 significant digits in scientific
//! notation, which round-trips 64-bit floats exactly and keeps byte-identical
//! output across runs. Matrix payloads carry separate `re`/`im` arrays since
//! JSON has no complex-number convention.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use qutrit_core::sections::{
    BoundaryPoint, CatalogReport, PointCloud, PureStateSolution, SectionReport, SolutionKind,
};
use qutrit_core::{
    mixing_volume, real_components, u_signed_squares, v_signed_squares, w_vector, DensityMatrix,
    GellMannVector, SpinOneParams,
};

use crate::CliError;

/// One qutrit state in any of the three supported parameterizations.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "lowercase", deny_unknown_fields)]
pub enum StateDocument {
    Matrix { re: [[f64; 3]; 3], im: [[f64; 3]; 3] },
    Gellmann { n: [f64; 8] },
    Spin1 { omega: [f64; 3], a: [f64; 3], q: [f64; 3] },
}

impl StateDocument {
    pub fn parse(bytes: &[u8]) -> Result<Self, CliError> {
        let doc: StateDocument = serde_json::from_slice(bytes)
            .map_err(|e| CliError::new(format!("invalid state document: {e}")))?;
        let finite = match &doc {
            StateDocument::Matrix { re, im } => re
                .iter()
                .chain(im.iter())
                .flatten()
                .all(|v| v.is_finite()),
            StateDocument::Gellmann { n } => n.iter().all(|v| v.is_finite()),
            StateDocument::Spin1 { omega, a, q } => omega
                .iter()
                .chain(a.iter())
                .chain(q.iter())
                .all(|v| v.is_finite()),
        };
        if !finite {
            return Err(CliError::new("invalid state document: non-finite number"));
        }
        Ok(doc)
    }

    pub fn to_matrix(&self, tol: f64) -> Result<DensityMatrix, CliError> {
        match self {
            StateDocument::Matrix { re, im } => {
                let mut raw = [[Complex64::new(0.0, 0.0); 3]; 3];
                for i in 0..3 {
                    for j in 0..3 {
                        raw[i][j] = Complex64::new(re[i][j], im[i][j]);
                    }
                }
                DensityMatrix::validate(raw, tol).map_err(CliError::from_core)
            }
            StateDocument::Gellmann { n } => Ok(GellMannVector(*n).to_matrix()),
            StateDocument::Spin1 { omega, a, q } => SpinOneParams::new(*omega, *a, *q)
                .to_matrix()
                .map_err(CliError::from_core),
        }
    }

    pub fn from_matrix(rho: &DensityMatrix) -> Self {
        let mut re = [[0.0; 3]; 3];
        let mut im = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let z = rho.entry(i, j);
                re[i][j] = z.re;
                im[i][j] = z.im;
            }
        }
        StateDocument::Matrix { re, im }
    }
}

#[derive(Debug, Serialize)]
pub struct InvariantsDoc {
    pub i1: f64,
    pub i2_trace: f64,
    pub i3_trace: f64,
    pub i2_param: f64,
    pub i3_param: f64,
}

#[derive(Debug, Serialize)]
pub struct VectorsDoc {
    pub w: Option<[f64; 3]>,
    pub u_sq: [f64; 3],
    pub v_sq: [f64; 3],
    pub u: Option<[f64; 3]>,
    pub v: Option<[f64; 3]>,
    pub u_real: bool,
    pub v_real: bool,
}

#[derive(Debug, Serialize)]
pub struct MixingDoc {
    pub volume: Option<f64>,
    pub alpha: Option<f64>,
}

/// Full classification report of one state.
#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub invariants: InvariantsDoc,
    pub vectors: VectorsDoc,
    pub mixing: MixingDoc,
    pub purity: String,
    pub eigenvalues: [f64; 3],
}

impl ReportDocument {
    pub fn build(rho: &DensityMatrix, tol: f64) -> Self {
        let ti = rho.trace_invariants();
        let (i2_param, i3_param) = GellMannVector::from_matrix(rho).invariants();
        let p = SpinOneParams::from_matrix(rho);
        let u_sq = u_signed_squares(&p);
        let v_sq = v_signed_squares(&p);
        // w is undefined for matrices with negative diagonal entries; the
        // squares are always reported
        let w = w_vector(p.omega).ok();
        let u = real_components(u_sq);
        let v = real_components(v_sq);
        let (volume, alpha) = match w {
            Some(w) => {
                let sv = qutrit_core::StateVectors {
                    w,
                    u_sq,
                    v_sq,
                    u,
                    v,
                    volume: None,
                    alpha: None,
                };
                mixing_volume(&sv)
            }
            None => (None, None),
        };
        ReportDocument {
            invariants: InvariantsDoc {
                i1: ti.i1,
                i2_trace: ti.i2,
                i3_trace: ti.i3,
                i2_param,
                i3_param,
            },
            vectors: VectorsDoc {
                w,
                u_sq,
                v_sq,
                u,
                v,
                u_real: u.is_some(),
                v_real: v.is_some(),
            },
            mixing: MixingDoc { volume, alpha },
            purity: rho.classify(tol).to_string(),
            eigenvalues: rho.eigenvalues(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PointDoc {
    pub coords: Vec<f64>,
    pub det: f64,
    pub i2_trace: f64,
    pub i3_trace: f64,
}

#[derive(Debug, Serialize)]
pub struct CloudDoc {
    pub section: Vec<u8>,
    pub points: Vec<PointDoc>,
}

impl CloudDoc {
    pub fn build(cloud: &PointCloud) -> Self {
        CloudDoc {
            section: cloud.section.axes().to_vec(),
            points: cloud
                .points
                .iter()
                .map(|p: &BoundaryPoint| PointDoc {
                    coords: p.coords.clone(),
                    det: p.det,
                    i2_trace: p.i2_trace,
                    i3_trace: p.i3_trace,
                })
                .collect(),
        }
    }
}

/// CSV rows: one column per axis (`n<i>`), then the membership annotations.
pub fn cloud_csv(cloud: &PointCloud) -> String {
    let mut out = String::new();
    for axis in cloud.section.axes() {
        out.push_str(&format!("n{axis},"));
    }
    out.push_str("det,i2_trace,i3_trace\n");
    for p in &cloud.points {
        for c in &p.coords {
            out.push_str(&fmt_f64(*c));
            out.push(',');
        }
        out.push_str(&fmt_f64(p.det));
        out.push(',');
        out.push_str(&fmt_f64(p.i2_trace));
        out.push(',');
        out.push_str(&fmt_f64(p.i3_trace));
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize)]
pub struct Spin1Doc {
    pub omega: [f64; 3],
    pub a: [f64; 3],
    pub q: [f64; 3],
}

#[derive(Debug, Serialize)]
pub struct SolutionDoc {
    pub coords: Vec<f64>,
    pub spin1: Spin1Doc,
    pub kind: String,
    pub residual: f64,
}

impl SolutionDoc {
    pub fn build(s: &PureStateSolution) -> Self {
        SolutionDoc {
            coords: s.coords.clone(),
            spin1: Spin1Doc {
                omega: s.spin1.omega,
                a: s.spin1.a,
                q: s.spin1.q,
            },
            kind: match s.kind {
                SolutionKind::Isolated => "Isolated".to_string(),
                SolutionKind::FamilyMember => "FamilyMember".to_string(),
            },
            residual: s.residual,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FamilyDoc {
    pub fixed_axis: u8,
    pub fixed_value: f64,
    pub radius_sq: f64,
}

#[derive(Debug, Serialize)]
pub struct CandidateDoc {
    pub coords: Vec<f64>,
    pub expected_i2_trace: f64,
    pub i2_trace: f64,
    pub min_eigenvalue: f64,
    pub purity: String,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct VerificationDoc {
    pub section: Vec<u8>,
    pub class: String,
    pub matched: bool,
    pub expected_isolated: Vec<Vec<f64>>,
    pub expected_family: Option<FamilyDoc>,
    pub candidates: Vec<CandidateDoc>,
    pub issues: Vec<String>,
    pub found: Vec<SolutionDoc>,
}

impl VerificationDoc {
    pub fn build(report: &CatalogReport) -> Self {
        VerificationDoc {
            section: report.section.axes().to_vec(),
            class: report.class.to_string(),
            matched: report.matched(),
            expected_isolated: report.expected_isolated.clone(),
            expected_family: report.expected_family.map(|f| FamilyDoc {
                fixed_axis: report.section.axes()[f.fixed_index],
                fixed_value: f.fixed_value,
                radius_sq: f.radius_sq,
            }),
            candidates: report
                .candidate_checks
                .iter()
                .map(|c| CandidateDoc {
                    coords: c.coords.clone(),
                    expected_i2_trace: c.expected_i2_trace,
                    i2_trace: c.i2_trace,
                    min_eigenvalue: c.min_eigenvalue,
                    purity: c.purity.to_string(),
                    ok: c.ok,
                })
                .collect(),
            issues: report.issues.clone(),
            found: report.found.iter().map(SolutionDoc::build).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SectionReportDoc {
    pub section: Vec<u8>,
    pub coords: Vec<f64>,
    pub i2_param: f64,
    pub i3_param: f64,
    pub i2_trace: f64,
    pub i3_trace: f64,
    pub u_sq: [f64; 3],
    pub v_sq: [f64; 3],
    pub purity: String,
}

impl SectionReportDoc {
    pub fn build(r: &SectionReport) -> Self {
        SectionReportDoc {
            section: r.section.axes().to_vec(),
            coords: r.coords.clone(),
            i2_param: r.i2_param,
            i3_param: r.i3_param,
            i2_trace: r.i2_trace,
            i3_trace: r.i3_trace,
            u_sq: r.u_sq,
            v_sq: r.v_sq,
            purity: r.purity.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExpectedPureDoc {
    pub isolated: Vec<Vec<f64>>,
    pub family: Option<FamilyDoc>,
}

#[derive(Debug, Serialize)]
pub struct AtlasEntryDoc {
    pub axes: Vec<u8>,
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_pure: Option<ExpectedPureDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found_pure: Option<VerificationDoc>,
}

/// 17 significant digits, round-trip exact for f64.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes a value as a single JSON line with full-precision floats.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("in-memory serialization cannot fail");
    String::from_utf8(buf).expect("serializer emits utf-8")
}
