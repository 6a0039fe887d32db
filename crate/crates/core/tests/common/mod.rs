//! Seeded random instance generators shared by the integration suites.
//!
//! Each suite uses its own subset of these.
#![allow(dead_code)]

use lefwedge::matrix::Matrix;
use lefwedge::torus::{build_toral_wedge, ToralWedgeSpec};
use lefwedge::wedge::WedgeMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn int_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| {
        BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))
    })
}

/// Nonzero integer matrix with entries in [-bound, bound].
pub fn nonzero_int_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> Matrix {
    loop {
        let m = int_matrix(rng, rows, cols, bound);
        if !m.is_zero() {
            return m;
        }
    }
}

pub fn random_permutation(rng: &mut StdRng, s: usize) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..s).collect();
    sigma.shuffle(rng);
    sigma
}

pub fn cycles_of(sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut out = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cyc.push(cur);
            cur = sigma[cur];
        }
        out.push(cyc);
    }
    out
}

/// Random permutative squared-by-blocks wedge of tori: a random permutation,
/// one torus dimension per cycle, nonzero coordinate matrices with entries
/// in [-bound, bound].
pub fn random_permutative(
    rng: &mut StdRng,
    s_max: usize,
    n_max: usize,
    bound: i64,
) -> (ToralWedgeSpec, Vec<usize>) {
    let s = rng.gen_range(1..=s_max);
    let sigma = random_permutation(rng, s);
    let mut dims = vec![0usize; s];
    for cyc in cycles_of(&sigma) {
        let n = rng.gen_range(1..=n_max);
        for &i in &cyc {
            dims[i] = n;
        }
    }
    let maps: Vec<Matrix> = (0..s)
        .map(|i| nonzero_int_matrix(rng, dims[sigma[i]], dims[i], bound))
        .collect();
    let spec = ToralWedgeSpec::permutative(dims, &sigma, maps).unwrap();
    (spec, sigma)
}

/// Random cyclic permutative instance with s >= 2 summands.
pub fn random_cyclic(
    rng: &mut StdRng,
    s_max: usize,
    n_max: usize,
    bound: i64,
) -> (ToralWedgeSpec, usize) {
    let s = rng.gen_range(2..=s_max.max(2));
    let n = rng.gen_range(1..=n_max);
    let mut order: Vec<usize> = (0..s).collect();
    order.shuffle(rng);
    let mut sigma = vec![0usize; s];
    for w in 0..s {
        sigma[order[w]] = order[(w + 1) % s];
    }
    let maps: Vec<Matrix> = (0..s)
        .map(|_| nonzero_int_matrix(rng, n, n, bound))
        .collect();
    let spec = ToralWedgeSpec::permutative(vec![n; s], &sigma, maps).unwrap();
    (spec, s)
}

/// Random permutative instance whose coordinate matrices are nonsingular.
pub fn random_nonsingular_permutative(
    rng: &mut StdRng,
    s_min: usize,
    s_max: usize,
    n_max: usize,
    bound: i64,
) -> ToralWedgeSpec {
    let s = rng.gen_range(s_min..=s_max);
    let sigma = random_permutation(rng, s);
    let mut dims = vec![0usize; s];
    for cyc in cycles_of(&sigma) {
        let n = rng.gen_range(1..=n_max);
        for &i in &cyc {
            dims[i] = n;
        }
    }
    let maps: Vec<Matrix> = (0..s)
        .map(|i| loop {
            let m = int_matrix(rng, dims[sigma[i]], dims[i], bound);
            if m.is_square() && !m.det().is_zero() {
                break m;
            }
        })
        .collect();
    ToralWedgeSpec::permutative(dims, &sigma, maps).unwrap()
}

/// Random wedge of tori with an arbitrary sparse coordinate grid, no
/// structural guarantees. Useful for identities that hold for every map.
pub fn random_generic(rng: &mut StdRng, s_max: usize, n_max: usize, bound: i64) -> WedgeMap {
    let s = rng.gen_range(1..=s_max);
    let dims: Vec<usize> = (0..s).map(|_| rng.gen_range(1..=n_max)).collect();
    let coords: Vec<Vec<Option<Matrix>>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    if rng.gen_bool(0.45) {
                        Some(int_matrix(rng, dims[j], dims[i], bound))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    build_toral_wedge(&ToralWedgeSpec::new(dims, coords).unwrap()).unwrap()
}
