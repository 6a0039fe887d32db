//! Result documents (format `"wedge-result/1"`) and their human rendering.
//!
//! Every potentially large integer is serialized as an exact decimal string;
//! floating point appears nowhere. Polynomials are ascending coefficient
//! lists.

use lefwedge::invariants::{AperSet, EulerProductCheck};
use lefwedge::matrix::Matrix;
use lefwedge::ratfunc::RationalFunction;
use lefwedge::torus::{ObstructionReport, ObstructionWitness};
use lefwedge::wedge::{StructureReport, WedgeMap};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug)]
pub struct ResultDocument {
    pub format: String,
    pub input_digest: String,
    pub structure: StructureJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lefschetz: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dold: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<ZetaJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler_exponents: Option<Vec<EulerFactorJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aper: Option<AperJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionJson>,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct StructureJson {
    pub summands: usize,
    pub permutative: bool,
    pub diagonal: bool,
    pub cyclic: bool,
    pub squared_by_blocks: bool,
    /// 1-based images of the permutation, when permutative.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    /// Cycles as 1-based index lists, when permutative.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<Vec<usize>>>,
    /// Invariant components of the wedge (1-based).
    pub components: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct ZetaJson {
    /// Ascending integer coefficients, as decimal strings.
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub display: String,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct EulerFactorJson {
    pub m: u64,
    /// Exponent of (1 - t^m) in the Euler product, a rational in lowest
    /// terms rendered as a string.
    pub exponent: String,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct AperJson {
    pub m_max: u64,
    pub members: Vec<u64>,
    /// When every assembled degree is quasi-unipotent, all trace sequences
    /// are eventually periodic with period dividing this bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_period: Option<u64>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct ObstructionJson {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    /// Induced degree-k matrices for k >= 2, keyed by degree, on pass.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induced: Option<std::collections::BTreeMap<String, Vec<Vec<String>>>>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct WitnessJson {
    pub left_summand: usize,
    pub left_index: usize,
    pub right_summand: usize,
    pub right_index: usize,
    pub fails_in_summand: usize,
}

pub fn bigint_strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| {
                    let v = m.get(r, c);
                    debug_assert!(v.is_integer());
                    v.to_integer().to_string()
                })
                .collect()
        })
        .collect()
}

pub fn structure_json(w: &WedgeMap, report: &StructureReport) -> StructureJson {
    let one_based = |v: &Vec<usize>| v.iter().map(|i| i + 1).collect::<Vec<_>>();
    StructureJson {
        summands: w.num_spaces(),
        permutative: report.is_permutative,
        diagonal: report.is_diagonal,
        cyclic: report.is_cyclic,
        squared_by_blocks: report.is_squared_by_blocks,
        permutation: report.permutation.as_ref().map(one_based),
        cycles: report
            .cycles
            .as_ref()
            .map(|cs| cs.iter().map(one_based).collect()),
        components: w.decompose().iter().map(one_based).collect(),
    }
}

pub fn zeta_json(zeta: &RationalFunction) -> ZetaJson {
    ZetaJson {
        numerator: zeta.num().coeffs().iter().map(|c| c.to_string()).collect(),
        denominator: zeta.den().coeffs().iter().map(|c| c.to_string()).collect(),
        display: zeta.to_string(),
    }
}

pub fn euler_json(check: &EulerProductCheck) -> Vec<EulerFactorJson> {
    check
        .exponents
        .iter()
        .map(|(m, e)| EulerFactorJson {
            m: *m,
            exponent: e.to_string(),
        })
        .collect()
}

pub fn euler_display(check: &EulerProductCheck) -> String {
    if check.exponents.is_empty() {
        return "1".to_string();
    }
    check
        .exponents
        .iter()
        .map(|(m, e)| {
            if *m == 1 {
                format!("(1-t)^{e}")
            } else {
                format!("(1-t^{m})^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn aper_json(aper: &AperSet, trace_period: Option<u64>) -> AperJson {
    AperJson {
        m_max: aper.m_max,
        members: aper.members.iter().copied().collect(),
        trace_period,
    }
}

pub fn witness_json(w: &ObstructionWitness) -> WitnessJson {
    WitnessJson {
        left_summand: w.left.0 + 1,
        left_index: w.left.1 + 1,
        right_summand: w.right.0 + 1,
        right_index: w.right.1 + 1,
        fails_in_summand: w.fails_in + 1,
    }
}

pub fn obstruction_json(report: &ObstructionReport) -> ObstructionJson {
    match report {
        ObstructionReport::Pass { induced } => {
            let mut map = std::collections::BTreeMap::new();
            for (idx, m) in induced.iter().enumerate().skip(1) {
                map.insert((idx + 1).to_string(), matrix_strings(m));
            }
            ObstructionJson {
                verdict: "pass".into(),
                witness: None,
                induced: Some(map),
            }
        }
        ObstructionReport::Fail { witness } => ObstructionJson {
            verdict: "fail".into(),
            witness: Some(witness_json(witness)),
            induced: None,
        },
    }
}

pub fn describe_witness(w: &ObstructionWitness) -> String {
    format!(
        "images of the degree-1 covectors (summand {}, index {}) and (summand {}, index {}) \
         have a nonvanishing wedge in summand {}",
        w.left.0 + 1,
        w.left.1 + 1,
        w.right.0 + 1,
        w.right.1 + 1,
        w.fails_in + 1
    )
}

pub fn describe_structure(j: &StructureJson) -> String {
    let mut parts = Vec::new();
    if j.permutative {
        let sigma = j
            .permutation
            .as_ref()
            .map(|p| format!("{p:?}"))
            .unwrap_or_default();
        parts.push(format!("permutative (sigma = {sigma})"));
        if j.diagonal {
            parts.push("diagonal".into());
        }
        if j.cyclic {
            parts.push("cyclic".into());
        }
        if j.squared_by_blocks {
            parts.push("squared by blocks".into());
        }
    } else {
        parts.push("not permutative".into());
    }
    parts.push(format!(
        "components {}",
        j.components
            .iter()
            .map(|c| format!("{c:?}"))
            .collect::<Vec<_>>()
            .join(" ")
    ));
    parts.join(", ")
}

/// Annotations attached when the input matches one of the shipped fixture
/// maps whose commonly cited tables contain known slips.
pub fn known_input_warnings(w: &WedgeMap) -> Vec<String> {
    let mut warnings = Vec::new();
    if w.max_degree() == 0 {
        return warnings;
    }
    let a1 = w.assembled(1);
    let fold = Matrix::from_i64_rows(&[
        vec![0, 1, 1, 0],
        vec![-1, 0, -1, -1],
        vec![0, 0, 0, 0],
        vec![0, 0, 0, 0],
    ]);
    if a1 == &fold {
        warnings.push(
            "input matches fixture ex5: Moebius inversion of its Lefschetz numbers gives \
             dold(f^4) = -4; a commonly cited table lists -2, which is inconsistent with \
             the same table's Lefschetz numbers"
                .into(),
        );
    }
    for a in 1i64..=3 {
        let ex2 = |x: i64, y: i64| {
            Matrix::from_i64_rows(&[
                vec![0, 0, y, 0],
                vec![0, 0, 0, y],
                vec![x, 0, 0, 0],
                vec![0, x, 0, 0],
            ])
        };
        if a1 == &ex2(-a, 1) || a1 == &ex2(1, -a) {
            warnings.push(format!(
                "input matches fixture ex2 with a = {a}: exact tables give \
                 L(f^4k) = 1 - 4a^2k + 2a^4k and zeta denominator (1-t)(1-a^2 t^2); \
                 commonly cited forms with exponent k+1 and denominator 1+(at)^2 \
                 do not match the matrices"
            ));
            if a == 1 {
                warnings.push(
                    "for a = 1 the algebraic periods are exactly {1, 2, 4}, not all even numbers"
                        .into(),
                );
            }
            if a == 2 {
                warnings.push(
                    "for a = 2 the Dold coefficient at m = 4 vanishes (L(f^2) = L(f^4)), so \
                     4 is not an algebraic period"
                        .into(),
                );
            }
        }
    }
    warnings
}
