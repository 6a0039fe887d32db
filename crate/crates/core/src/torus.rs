//! Wedges of tori: graded actions from first homology, the realizability
//! obstruction, quasi-unipotence, and scans over companion maps.
//!
//! The homology of an n-torus is the exterior algebra on H_1, so an integer
//! n x n matrix determines the whole graded action through its compound
//! matrices. Candidate degree-1 matrices on a wedge of tori are constrained
//! beyond shape: on cohomology (the transpose side, since cohomology is
//! contravariant) the induced map must kill products of degree-1 classes
//! coming from distinct summands, because such cup products vanish in the
//! cohomology ring of a wedge.
//!
//! That pairwise condition is the whole obstruction in every degree: any
//! product of degree-1 classes drawn from at least two summands contains a
//! mixed pair u, v, and once the image of u wedge v vanishes summand by
//! summand, the image of the full product vanishes with it, since products
//! in the wedge ring are computed componentwise. Mixed pairs are therefore
//! checked on basis covectors only (bilinearity covers the rest), and
//! passing them makes the within-summand products block-consistent, which
//! is what the induced higher-degree matrices are built from.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{KernelError, TorusError, WedgeError};
use crate::invariants;
use crate::matrix::Matrix;
use crate::numtheory::{divisors, is_prime, lcm, totient};
use crate::poly::IntPoly;
use crate::ratfunc::RationalFunction;
use crate::wedge::{assemble, GradedMap, SpaceSignature, WedgeMap};

/// Full graded action of a torus coordinate map from its H_1 matrix: the
/// degree-k block is the k-th compound matrix. Rectangular inputs describe
/// maps between tori of different dimensions (columns give the source).
pub fn torus_graded_from_h1(a: &Matrix) -> GradedMap {
    assert!(a.is_integer(), "torus actions are integer matrices");
    let (nt, ns) = (a.rows(), a.cols());
    let top = ns.max(nt);
    let blocks = (1..=top).map(|k| a.compound(k)).collect();
    GradedMap::new(SpaceSignature::torus(ns), SpaceSignature::torus(nt), blocks)
        .expect("compound matrices have binomial shapes")
}

/// A wedge of tori with optional integer H_1 coordinate matrices;
/// `coords[i][j]` describes X_i -> X_j and must be dims[j] x dims[i].
#[derive(Clone, Debug)]
pub struct ToralWedgeSpec {
    pub dims: Vec<usize>,
    pub coords: Vec<Vec<Option<Matrix>>>,
}

impl ToralWedgeSpec {
    pub fn new(dims: Vec<usize>, coords: Vec<Vec<Option<Matrix>>>) -> Result<Self, WedgeError> {
        let s = dims.len();
        if coords.len() != s || coords.iter().any(|r| r.len() != s) {
            return Err(WedgeError::BadGridShape {
                want: s,
                got: coords.len(),
                got2: coords.first().map_or(0, |r| r.len()),
            });
        }
        for (i, row) in coords.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if let Some(m) = entry {
                    if m.rows() != dims[j] || m.cols() != dims[i] {
                        return Err(WedgeError::DimensionMismatch {
                            from: i,
                            to: j,
                            degree: 1,
                            want_rows: dims[j],
                            want_cols: dims[i],
                            got_rows: m.rows(),
                            got_cols: m.cols(),
                        });
                    }
                }
            }
        }
        Ok(ToralWedgeSpec { dims, coords })
    }

    /// Permutative spec with coordinates i -> sigma(i).
    pub fn permutative(dims: Vec<usize>, sigma: &[usize], maps: Vec<Matrix>) -> Result<Self, WedgeError> {
        let s = dims.len();
        let mut coords: Vec<Vec<Option<Matrix>>> = vec![vec![None; s]; s];
        for (i, m) in maps.into_iter().enumerate() {
            coords[i][sigma[i]] = Some(m);
        }
        ToralWedgeSpec::new(dims, coords)
    }
}

/// Lifts every present H_1 coordinate through its compound matrices and
/// assembles the graded block action.
pub fn build_toral_wedge(spec: &ToralWedgeSpec) -> Result<WedgeMap, WedgeError> {
    let spaces: Vec<SpaceSignature> = spec.dims.iter().map(|&n| SpaceSignature::torus(n)).collect();
    let coords: Vec<Vec<Option<GradedMap>>> = spec
        .coords
        .iter()
        .map(|row| {
            row.iter()
                .map(|entry| entry.as_ref().map(torus_graded_from_h1))
                .collect()
        })
        .collect();
    assemble(spaces, coords)
}

/// A mixed pair of degree-1 cohomology basis covectors whose images under
/// the candidate action have a nonvanishing wedge. All indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionWitness {
    /// (summand, covector index) of the first class.
    pub left: (usize, usize),
    /// (summand, covector index) of the second class, from another summand.
    pub right: (usize, usize),
    /// Summand whose top-degree component receives the nonzero wedge.
    pub fails_in: usize,
}

/// Verdict of the realizability check on a candidate degree-1 matrix.
#[derive(Clone, Debug)]
pub enum ObstructionReport {
    /// The necessary condition holds; the induced degree-k matrices (built
    /// from within-summand products, degree k at index k-1) come along.
    Pass { induced: Vec<Matrix> },
    Fail { witness: ObstructionWitness },
}

impl ObstructionReport {
    pub fn passed(&self) -> bool {
        matches!(self, ObstructionReport::Pass { .. })
    }
}

/// Checks the necessary cohomological condition for an integer R x R matrix
/// (R = sum of dims) to arise as the degree-1 action of a continuous
/// self-map on the corresponding wedge of tori, interpreting the matrix in
/// the assembled block convention (block row j, block column i holds the
/// X_i -> X_j coordinate).
///
/// On cohomology the action is the transpose, and the component in summand
/// l of the image of the t-th basis covector of summand i is row t of the
/// (row i, column l) block. The check requires, for every pair of covectors
/// from distinct summands and every component summand, that those two rows
/// span rank at most 1. It is necessary, not sufficient: constructing an
/// actual continuous map is a different problem.
pub fn check_h1_realizability(
    m: &Matrix,
    dims: &[usize],
) -> Result<ObstructionReport, TorusError> {
    let r: usize = dims.iter().sum();
    if m.rows() != r || m.cols() != r {
        return Err(TorusError::ShapeMismatch {
            want: r,
            got_rows: m.rows(),
            got_cols: m.cols(),
        });
    }
    if !m.is_integer() {
        return Err(TorusError::NotInteger);
    }
    let s = dims.len();
    let mut offsets = Vec::with_capacity(s + 1);
    let mut acc = 0;
    for &n in dims {
        offsets.push(acc);
        acc += n;
    }
    offsets.push(acc);

    for i in 0..s {
        for j in (i + 1)..s {
            for t in 0..dims[i] {
                for u in 0..dims[j] {
                    for l in 0..s {
                        // component rows in summand l of the two images
                        let lo = offsets[l];
                        let left = |c: usize| m.get(offsets[i] + t, lo + c);
                        let right = |c: usize| m.get(offsets[j] + u, lo + c);
                        let mut vanishes = true;
                        'minor: for a in 0..dims[l] {
                            for b in (a + 1)..dims[l] {
                                let det = left(a) * right(b) - left(b) * right(a);
                                if !det.is_zero() {
                                    vanishes = false;
                                    break 'minor;
                                }
                            }
                        }
                        if !vanishes {
                            return Ok(ObstructionReport::Fail {
                                witness: ObstructionWitness {
                                    left: (i, t),
                                    right: (j, u),
                                    fails_in: l,
                                },
                            });
                        }
                    }
                }
            }
        }
    }

    // blockwise compound matrices give the induced action in every degree
    let top = dims.iter().copied().max().unwrap_or(0);
    let mut induced = Vec::with_capacity(top.saturating_sub(1));
    for k in 2..=top {
        let block_rows: Vec<usize> = dims.iter().map(|&n| crate::matrix::binomial(n, k)).collect();
        let total: usize = block_rows.iter().sum();
        let mut mat = Matrix::zero(total, total);
        let mut row_off = 0;
        for bi in 0..s {
            let mut col_off = 0;
            for bj in 0..s {
                let block = m
                    .extract_block(offsets[bi], offsets[bj], dims[bi], dims[bj])
                    .compound(k);
                mat.write_block(row_off, col_off, &block);
                col_off += block_rows[bj];
            }
            row_off += block_rows[bi];
        }
        induced.push(mat);
    }
    let mut full = vec![m.clone()];
    full.extend(induced);
    Ok(ObstructionReport::Pass { induced: full })
}

/// Zeta-function summary of a toral wedge map, with the periodic-point-free
/// verdict.
#[derive(Clone, Debug)]
pub struct LppfReport {
    /// True when every Lefschetz number vanishes, i.e. zeta is identically 1.
    pub is_lppf: bool,
    pub zeta: RationalFunction,
    /// Numerator degree minus denominator degree.
    pub zeta_degree: i64,
    /// Whether the assembled degree-1 matrix has nonzero determinant.
    pub eigen_nonzero: bool,
}

/// Computes the zeta function of a toral wedge spec and whether the map is
/// Lefschetz periodic point free. A permutative map on two or more tori
/// whose degree-1 determinant is nonzero is never periodic point free; that
/// conclusion is asserted here (for a single summand the identity map is a
/// genuine counterexample, so nothing is asserted there).
pub fn lppf_report(spec: &ToralWedgeSpec) -> Result<LppfReport, WedgeError> {
    let w = build_toral_wedge(spec)?;
    let zeta = invariants::zeta_det(&w);
    let zeta_degree = zeta.degree().expect("zeta is never the zero function");
    let is_lppf = zeta.is_one();
    let eigen_nonzero = if w.max_degree() >= 1 {
        !w.assembled(1).det().is_zero()
    } else {
        true
    };
    let report = w.classify();
    if report.is_permutative && eigen_nonzero && spec.dims.len() >= 2 {
        assert!(
            !is_lppf,
            "internal error: permutative toral map with nonzero eigenvalues reported as periodic point free"
        );
    }
    Ok(LppfReport {
        is_lppf,
        zeta,
        zeta_degree,
        eigen_nonzero,
    })
}

/// d-th cyclotomic polynomial, by dividing t^d - 1 by the lower ones.
pub fn cyclotomic(d: u64) -> IntPoly {
    let mut memo: std::collections::BTreeMap<u64, IntPoly> = Default::default();
    for e in divisors(d) {
        let mut quotient = {
            let mut c = vec![BigInt::zero(); e as usize + 1];
            c[0] = -BigInt::one();
            c[e as usize] = BigInt::one();
            IntPoly::new(c)
        };
        for f in divisors(e) {
            if f == e {
                continue;
            }
            quotient = quotient
                .exact_div(&memo[&f])
                .expect("cyclotomic polynomials divide t^e - 1");
        }
        memo.insert(e, quotient);
    }
    memo.remove(&d).unwrap()
}

/// Cyclotomic factorization certificate of a characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiUnipotence {
    pub is_quasi_unipotent: bool,
    /// Exponent of the t factor (zero eigenvalues).
    pub t_power: usize,
    /// (cyclotomic index, multiplicity) pairs, ascending.
    pub cyclotomic_indices: Vec<(u64, usize)>,
}

/// Tests whether all nonzero eigenvalues are roots of unity, i.e. whether
/// the characteristic polynomial is t^e times a product of cyclotomic
/// polynomials. Candidate indices d are bounded through phi(d) <= degree.
pub fn quasi_unipotent_matrix(m: &Matrix) -> Result<QuasiUnipotence, KernelError> {
    let chi = m.char_poly()?;
    Ok(cyclotomic_certificate(&chi))
}

fn cyclotomic_certificate(chi: &IntPoly) -> QuasiUnipotence {
    if chi.is_zero() {
        return QuasiUnipotence {
            is_quasi_unipotent: false,
            t_power: 0,
            cyclotomic_indices: Vec::new(),
        };
    }
    let t_power = chi
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .unwrap_or(0);
    let mut rest = IntPoly::new(chi.coeffs()[t_power..].to_vec());
    let deg0 = rest.degree().unwrap_or(0);
    let mut indices = Vec::new();
    if deg0 > 0 {
        let bound = 2 * (deg0 as u64) * (deg0 as u64) + 2;
        for d in 1..=bound {
            if totient(d) > deg0 as u64 {
                continue;
            }
            let phi = cyclotomic(d);
            let mut mult = 0usize;
            while let Some(q) = rest.exact_div(&phi) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                indices.push((d, mult));
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
    }
    let is_qu = rest.degree() == Some(0) && rest.leading().abs().is_one();
    QuasiUnipotence {
        is_quasi_unipotent: is_qu,
        t_power,
        cyclotomic_indices: indices,
    }
}

/// Quasi-unipotence of the assembled degree-1 action of a wedge map.
pub fn is_quasi_unipotent(w: &WedgeMap) -> Result<QuasiUnipotence, KernelError> {
    if w.max_degree() == 0 {
        return Ok(QuasiUnipotence {
            is_quasi_unipotent: true,
            t_power: 0,
            cyclotomic_indices: Vec::new(),
        });
    }
    quasi_unipotent_matrix(w.assembled(1))
}

/// When every assembled degree is quasi-unipotent, the traces of all
/// iterates are eventually periodic with period dividing the lcm of the
/// cyclotomic indices; returns that common period bound.
pub fn trace_period(w: &WedgeMap) -> Option<u64> {
    let mut period = 1u64;
    for k in 1..=w.max_degree() {
        let qu = quasi_unipotent_matrix(w.assembled(k)).ok()?;
        if !qu.is_quasi_unipotent {
            return None;
        }
        for (d, _) in qu.cyclotomic_indices {
            period = lcm(period, d);
        }
    }
    Some(period)
}

/// Companion matrix with characteristic polynomial t^n - c.
pub fn companion_gc(n: usize, c: &BigInt) -> Matrix {
    assert!(n >= 1);
    let mut m = Matrix::zero(n, n);
    for i in 1..n {
        m.set(i, i - 1, num_rational::BigRational::one());
    }
    m.set(0, n - 1, num_rational::BigRational::from_integer(c.clone()));
    m
}

/// Outcome of the Dold-coefficient scan over cyclic wedges of companion
/// maps.
#[derive(Clone, Debug)]
pub struct GcScanReport {
    pub n: usize,
    pub s: usize,
    pub m_max: u64,
    /// Whether n is an odd prime, every c exceeds 2 and s >= 1. When this
    /// fails the scan still runs, but nothing is asserted.
    pub preconditions_ok: bool,
    pub precondition_notes: Vec<String>,
    /// dold(f^m) for the wedge map, m = 1..m_max.
    pub wedge_dold: Vec<BigInt>,
    /// Per coordinate: (c, dold(g_c^m) table on a single torus).
    pub single_dold: Vec<(BigInt, Vec<BigInt>)>,
    /// All single-torus Dold coefficients strictly negative up to m_max.
    pub single_all_negative: bool,
    /// Periods m <= m_max certified nonzero when the preconditions hold:
    /// every m for s = 1; m = 1 and the multiples of s otherwise.
    pub certified: Vec<u64>,
    pub observations: Vec<String>,
}

/// Builds the cyclic permutative map on a wedge of s copies of the n-torus
/// whose nonconstant coordinates are companion maps of t^n - c_i, and scans
/// the Dold coefficients of the wedge and of each single-torus factor.
pub fn corollary_nprime_scan(
    n: usize,
    c_list: &[BigInt],
    s: usize,
    m_max: u64,
) -> Result<GcScanReport, WedgeError> {
    assert!(s >= 1 && !c_list.is_empty() && m_max >= 1);
    let cs: Vec<BigInt> = (0..s).map(|i| c_list[i % c_list.len()].clone()).collect();
    let mut notes = Vec::new();
    if !(is_prime(n as u64) && n % 2 == 1) {
        notes.push(format!("n = {n} is not an odd prime"));
    }
    let two = BigInt::from(2);
    for c in &cs {
        if *c <= two {
            notes.push(format!("c = {c} does not exceed 2"));
        }
    }
    let preconditions_ok = notes.is_empty();

    let sigma: Vec<usize> = (0..s).map(|i| (i + 1) % s).collect();
    let maps: Vec<Matrix> = cs.iter().map(|c| companion_gc(n, c)).collect();
    let spec = ToralWedgeSpec::permutative(vec![n; s], &sigma, maps.clone())?;
    let w = build_toral_wedge(&spec)?;
    let wedge_dold = invariants::dold_sequence(&w, m_max);

    let mut single_dold = Vec::new();
    let mut single_all_negative = true;
    for (c, map) in cs.iter().zip(&maps) {
        let single = ToralWedgeSpec::new(vec![n], vec![vec![Some(map.clone())]])?;
        let sw = build_toral_wedge(&single)?;
        let table = invariants::dold_sequence(&sw, m_max);
        if table.iter().any(|v| !v.is_negative()) {
            single_all_negative = false;
        }
        single_dold.push((c.clone(), table));
    }

    let mut certified = Vec::new();
    let mut observations = Vec::new();
    if preconditions_ok {
        if single_all_negative {
            observations.push(format!(
                "all single-torus Dold coefficients negative through m = {m_max}"
            ));
            if s == 1 {
                certified.extend(1..=m_max);
            } else {
                certified.push(1);
                certified.extend((1..=m_max).filter(|m| m % s as u64 == 0 && *m > 1));
            }
        } else {
            observations.push("negativity failed despite the preconditions".to_string());
        }
    } else {
        let negatives = wedge_dold.iter().filter(|v| v.is_negative()).count();
        let zeros = wedge_dold.iter().filter(|v| v.is_zero()).count();
        observations.push(format!(
            "signs through m = {m_max}: {negatives} negative, {zeros} zero, {} positive",
            m_max as usize - negatives - zeros
        ));
    }

    Ok(GcScanReport {
        n,
        s,
        m_max,
        preconditions_ok,
        precondition_notes: notes,
        wedge_dold,
        single_dold,
        single_all_negative,
        certified,
        observations,
    })
}
