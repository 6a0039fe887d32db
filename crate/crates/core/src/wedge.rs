//! Homology-level model of self-maps on wedge sums.
//!
//! A self-map of a wedge X_1 v ... v X_s is described by its coordinate maps
//! f_ij : X_i -> X_j. On reduced homology the wedge splits as a direct sum,
//! so the induced map in each degree k >= 1 is a block matrix whose block at
//! (row j, column i) is the degree-k action of the coordinate X_i -> X_j
//! (columns are inputs). Degree 0 is always the 1x1 identity, since the maps
//! are pointed and the summands path-connected; it is never stored.

use crate::error::WedgeError;
use crate::matrix::Matrix;

/// Rational Betti numbers of one summand, indexed by degree. `betti[0]` must
/// be 1 (path-connected summand).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpaceSignature {
    betti: Vec<usize>,
}

impl SpaceSignature {
    pub fn new(betti: Vec<usize>) -> Result<Self, WedgeError> {
        if betti.first() != Some(&1) {
            return Err(WedgeError::BadBaseDegree {
                index: 0,
                got: betti.first().copied().unwrap_or(0),
            });
        }
        Ok(SpaceSignature { betti })
    }

    /// Signature of the n-torus: betti[k] = C(n, k).
    pub fn torus(n: usize) -> Self {
        let betti = (0..=n).map(|k| crate::matrix::binomial(n, k)).collect();
        SpaceSignature { betti }
    }

    /// Highest degree carried by the signature.
    pub fn dim(&self) -> usize {
        self.betti.len() - 1
    }

    /// Betti number in degree k; zero beyond the dimension.
    pub fn betti(&self, k: usize) -> usize {
        self.betti.get(k).copied().unwrap_or(0)
    }
}

/// Per-degree matrices of a map between two summands. The degree-k block is
/// target.betti(k) x source.betti(k); degree 0 is implicit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMap {
    source: SpaceSignature,
    target: SpaceSignature,
    blocks: Vec<Matrix>, // degree k at index k-1, up to max(source.dim, target.dim)
}

impl GradedMap {
    pub fn new(
        source: SpaceSignature,
        target: SpaceSignature,
        blocks: Vec<Matrix>,
    ) -> Result<Self, WedgeError> {
        let top = source.dim().max(target.dim());
        let mut padded = blocks;
        // missing high-degree blocks are taken as the forced 0x0 / zero maps
        while padded.len() < top {
            let k = padded.len() + 1;
            padded.push(Matrix::zero(target.betti(k), source.betti(k)));
        }
        for (idx, b) in padded.iter().enumerate() {
            let k = idx + 1;
            let (wr, wc) = (target.betti(k), source.betti(k));
            if b.rows() != wr || b.cols() != wc {
                return Err(WedgeError::DimensionMismatch {
                    from: 0,
                    to: 0,
                    degree: k,
                    want_rows: wr,
                    want_cols: wc,
                    got_rows: b.rows(),
                    got_cols: b.cols(),
                });
            }
        }
        Ok(GradedMap {
            source,
            target,
            blocks: padded,
        })
    }

    pub fn zero(source: SpaceSignature, target: SpaceSignature) -> Self {
        GradedMap::new(source, target, Vec::new()).expect("zero blocks always fit")
    }

    pub fn source(&self) -> &SpaceSignature {
        &self.source
    }

    pub fn target(&self) -> &SpaceSignature {
        &self.target
    }

    /// Degree-k block, k >= 1.
    pub fn block(&self, k: usize) -> Matrix {
        self.blocks
            .get(k - 1)
            .cloned()
            .unwrap_or_else(|| Matrix::zero(self.target.betti(k), self.source.betti(k)))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }
}

/// Structural classification of a wedge self-map at the homology level.
///
/// A map is permutative when each summand is carried into at most one summand
/// and the target pattern extends to a permutation sigma; rows whose
/// coordinates are all constant leave sigma free there, and the completion
/// prefers fixed points (any completion yields the same invariants, since
/// those rows are zero on reduced homology).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureReport {
    pub is_permutative: bool,
    pub is_diagonal: bool,
    /// sigma as a vector of 0-based targets, when permutative.
    pub permutation: Option<Vec<usize>>,
    /// Cycles of sigma, each sorted ascending, ordered by smallest element.
    pub cycles: Option<Vec<Vec<usize>>>,
    pub is_squared_by_blocks: bool,
    pub is_cyclic: bool,
}

/// Assembled homology data of a wedge self-map.
#[derive(Clone, Debug)]
pub struct WedgeMap {
    spaces: Vec<SpaceSignature>,
    coords: Vec<Vec<Option<GradedMap>>>,
    assembled: Vec<Matrix>, // degree k at index k-1
}

/// Builds the per-degree assembled block matrices from a coordinate grid.
/// `coords[i][j]` is the map X_i -> X_j and lands in block (row j, column i);
/// absent coordinates contribute zero blocks.
pub fn assemble(
    spaces: Vec<SpaceSignature>,
    coords: Vec<Vec<Option<GradedMap>>>,
) -> Result<WedgeMap, WedgeError> {
    let s = spaces.len();
    if coords.len() != s || coords.iter().any(|row| row.len() != s) {
        return Err(WedgeError::BadGridShape {
            want: s,
            got: coords.len(),
            got2: coords.first().map_or(0, |r| r.len()),
        });
    }
    let top = spaces.iter().map(|sp| sp.dim()).max().unwrap_or(0);
    // validate coordinate shapes first, reporting the offending pair
    for (i, row) in coords.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if let Some(g) = entry {
                for k in 1..=spaces[i].dim().max(spaces[j].dim()) {
                    let b = g.block(k);
                    let (wr, wc) = (spaces[j].betti(k), spaces[i].betti(k));
                    if b.rows() != wr || b.cols() != wc {
                        return Err(WedgeError::DimensionMismatch {
                            from: i,
                            to: j,
                            degree: k,
                            want_rows: wr,
                            want_cols: wc,
                            got_rows: b.rows(),
                            got_cols: b.cols(),
                        });
                    }
                }
            }
        }
    }
    let mut assembled = Vec::with_capacity(top);
    for k in 1..=top {
        let offsets = degree_offsets(&spaces, k);
        let total = offsets[s];
        let mut mat = Matrix::zero(total, total);
        for (i, row) in coords.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if let Some(g) = entry {
                    mat.write_block(offsets[j], offsets[i], &g.block(k));
                }
            }
        }
        assembled.push(mat);
    }
    Ok(WedgeMap {
        spaces,
        coords,
        assembled,
    })
}

fn degree_offsets(spaces: &[SpaceSignature], k: usize) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(spaces.len() + 1);
    let mut acc = 0;
    for sp in spaces {
        offsets.push(acc);
        acc += sp.betti(k);
    }
    offsets.push(acc);
    offsets
}

impl WedgeMap {
    pub fn num_spaces(&self) -> usize {
        self.spaces.len()
    }

    pub fn spaces(&self) -> &[SpaceSignature] {
        &self.spaces
    }

    pub fn space(&self, i: usize) -> &SpaceSignature {
        &self.spaces[i]
    }

    /// Highest degree with (possibly) nontrivial homology.
    pub fn max_degree(&self) -> usize {
        self.assembled.len()
    }

    /// Wedge Betti number in degree k >= 1.
    pub fn betti(&self, k: usize) -> usize {
        self.spaces.iter().map(|sp| sp.betti(k)).sum()
    }

    /// Assembled degree-k matrix, k in 1..=max_degree().
    pub fn assembled(&self, k: usize) -> &Matrix {
        &self.assembled[k - 1]
    }

    /// All assembled matrices, degree k at index k-1.
    pub fn assembled_all(&self) -> &[Matrix] {
        &self.assembled
    }

    pub fn coordinate(&self, i: usize, j: usize) -> Option<&GradedMap> {
        self.coords[i][j].as_ref()
    }

    /// Present means a stored coordinate that is nonzero in some degree;
    /// stored all-zero coordinates act like constant ones.
    pub fn coordinate_present(&self, i: usize, j: usize) -> bool {
        self.coords[i][j].as_ref().is_some_and(|g| !g.is_zero())
    }

    /// Assembled matrices of the m-th iterate, m >= 1: the m-th powers of
    /// the assembled matrices, degree by degree.
    pub fn iterate(&self, m: u64) -> Vec<Matrix> {
        assert!(m >= 1, "iterates start at 1");
        self.assembled.iter().map(|a| a.pow(m)).collect()
    }

    /// Extracts the coordinate block (from -> to) in degree k of a stack of
    /// per-degree matrices shaped like `assembled_all()`.
    pub fn block_of(&self, mats: &[Matrix], k: usize, from: usize, to: usize) -> Matrix {
        let offsets = degree_offsets(&self.spaces, k);
        mats[k - 1].extract_block(
            offsets[to],
            offsets[from],
            self.spaces[to].betti(k),
            self.spaces[from].betti(k),
        )
    }

    /// Diagonal blocks (i, i) of a stack of per-degree matrices, restricted
    /// to the degrees carried by summand i. This is the coordinate viewed as
    /// a self-map of the single summand.
    pub fn diagonal_blocks(&self, mats: &[Matrix], i: usize) -> Vec<Matrix> {
        (1..=self.spaces[i].dim())
            .map(|k| self.block_of(mats, k, i, i))
            .collect()
    }

    /// Connected components of the graph with an edge {i, j} whenever the
    /// coordinate i->j or j->i is present, sorted by smallest member. This is
    /// the homology-level analogue of the invariant-subsum decomposition; a
    /// map that is nonconstant but zero on reduced homology does not register
    /// here, so the partition can be coarser than the topological one.
    pub fn decompose(&self) -> Vec<Vec<usize>> {
        let s = self.num_spaces();
        let mut parent: Vec<usize> = (0..s).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for i in 0..s {
            for j in 0..s {
                if self.coordinate_present(i, j) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 0..s {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }

    /// Structural classification; see `StructureReport`.
    pub fn classify(&self) -> StructureReport {
        let s = self.num_spaces();
        let mut targets: Vec<Option<usize>> = vec![None; s];
        for i in 0..s {
            let present: Vec<usize> = (0..s).filter(|&j| self.coordinate_present(i, j)).collect();
            match present.len() {
                0 => {}
                1 => targets[i] = Some(present[0]),
                _ => return StructureReport::not_permutative(),
            }
        }
        // the partial pattern must be injective to extend to a permutation
        let mut used = vec![false; s];
        for t in targets.iter().flatten() {
            if used[*t] {
                return StructureReport::not_permutative();
            }
            used[*t] = true;
        }
        // complete on all-constant rows, preferring fixed points
        let mut sigma: Vec<usize> = vec![usize::MAX; s];
        for (i, t) in targets.iter().enumerate() {
            if let Some(t) = t {
                sigma[i] = *t;
            }
        }
        let mut free_rows: Vec<usize> = (0..s).filter(|&i| targets[i].is_none()).collect();
        free_rows.retain(|&i| {
            if !used[i] {
                sigma[i] = i;
                used[i] = true;
                false
            } else {
                true
            }
        });
        let mut free_targets: Vec<usize> = (0..s).filter(|&t| !used[t]).collect();
        for (&i, t) in free_rows.iter().zip(free_targets.drain(..)) {
            sigma[i] = t;
        }
        // cycles of sigma, by smallest element
        let mut seen = vec![false; s];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for start in 0..s {
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
            cyc.sort_unstable();
            cycles.push(cyc);
        }
        cycles.sort_by_key(|c| c[0]);
        let is_diagonal = sigma.iter().enumerate().all(|(i, &t)| i == t);
        let is_squared_by_blocks = cycles
            .iter()
            .all(|c| c.iter().all(|&i| self.spaces[i] == self.spaces[c[0]]));
        let is_cyclic = cycles.len() == 1;
        StructureReport {
            is_permutative: true,
            is_diagonal,
            permutation: Some(sigma),
            cycles: Some(cycles),
            is_squared_by_blocks,
            is_cyclic,
        }
    }
}

impl StructureReport {
    fn not_permutative() -> Self {
        StructureReport {
            is_permutative: false,
            is_diagonal: false,
            permutation: None,
            cycles: None,
            is_squared_by_blocks: false,
            is_cyclic: false,
        }
    }

    /// The reduction formulas need both flags at once.
    pub fn is_reducible(&self) -> bool {
        self.is_permutative && self.is_squared_by_blocks
    }
}
