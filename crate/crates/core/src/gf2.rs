//! GF(2) linear algebra: binary matrices, vector matroids, the
//! binary-representability test, graphic matroids from multigraph incidence,
//! and binary projective geometries.

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset, MAX_EXPLICIT, MAX_LAZY};
use crate::matroid::Matroid;

/// 0/1 matrix over GF(2). Rows are stored as bit words (bit j of row i is the
/// entry in row i, column j); columns are labeled by a ground set and there
/// are at most [`MAX_LAZY`] of them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryMatrix {
    rows: usize,
    ground: GroundSet,
    row_bits: Vec<u32>,
}

impl BinaryMatrix {
    pub fn new(rows: usize, ground: GroundSet, row_bits: Vec<u32>) -> Result<Self> {
        let n = ground.len();
        if n > MAX_LAZY || rows > 32 {
            return Err(Error::GroundSetOverflow(n.max(rows), MAX_LAZY));
        }
        if row_bits.len() != rows {
            return Err(Error::PreconditionViolated("row count mismatch".into()));
        }
        let mask = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
        if row_bits.iter().any(|r| r & !mask != 0) {
            return Err(Error::PreconditionViolated(
                "matrix entries outside the column range".into(),
            ));
        }
        Ok(BinaryMatrix {
            rows,
            ground,
            row_bits,
        })
    }

    pub fn from_rows(ground: GroundSet, rows_01: &[Vec<u8>]) -> Result<Self> {
        let mut row_bits = Vec::with_capacity(rows_01.len());
        for r in rows_01 {
            if r.len() != ground.len() {
                return Err(Error::PreconditionViolated("ragged matrix rows".into()));
            }
            let mut w = 0u32;
            for (j, &x) in r.iter().enumerate() {
                if x > 1 {
                    return Err(Error::PreconditionViolated("entries must be 0/1".into()));
                }
                w |= (x as u32) << j;
            }
            row_bits.push(w);
        }
        BinaryMatrix::new(rows_01.len(), ground, row_bits)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.ground.len()
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        (self.row_bits[i] >> j & 1) as u8
    }

    pub fn row_word(&self, i: usize) -> u32 {
        self.row_bits[i]
    }

    /// Column j as a bit word over the rows (rows ≤ 32).
    pub fn column_word(&self, j: usize) -> u32 {
        let mut w = 0u32;
        for i in 0..self.rows {
            w |= ((self.row_bits[i] >> j) & 1) << i;
        }
        w
    }

    pub fn column_weight(&self, j: usize) -> usize {
        self.column_word(j).count_ones() as usize
    }

    /// GF(2) rank of the chosen columns (plain Gaussian elimination; no
    /// pivoting subtleties exist over GF(2)).
    pub fn column_rank(&self, cols: Subset) -> usize {
        let mut basis: Vec<u32> = Vec::new();
        let mut rank = 0;
        for j in cols.iter() {
            let mut v = self.column_word(j);
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
                rank += 1;
            }
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.column_rank(self.ground.full_set())
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        self.column_word(j) == 0
    }

    /// Column j lies in the span of the other columns? (j is not a coloop of
    /// the vector matroid.)
    pub fn column_in_span_of_rest(&self, j: usize) -> bool {
        let rest = self.ground.full_set().without(j);
        self.column_rank(rest) == self.rank()
    }

    /// Deletes column j, keeping the rows.
    pub fn delete_column(&self, j: usize) -> BinaryMatrix {
        let mut labels = self.ground.labels().to_vec();
        labels.remove(j);
        let ground = GroundSet::new(labels).expect("labels stay distinct");
        let row_bits = self
            .row_bits
            .iter()
            .map(|&r| Subset(r).squeeze(j).0)
            .collect();
        BinaryMatrix {
            rows: self.rows,
            ground,
            row_bits,
        }
    }

    /// Contracts column j in the vector matroid: pivot on a row with a 1 in
    /// column j, clear the column elsewhere, drop pivot row and the column.
    /// A zero column (loop) is simply deleted.
    pub fn contract_column(&self, j: usize) -> BinaryMatrix {
        if self.is_zero_column(j) {
            return self.delete_column(j);
        }
        let pivot = (0..self.rows)
            .find(|&i| self.row_bits[i] >> j & 1 == 1)
            .expect("nonzero column has a pivot");
        let mut rows = self.row_bits.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != pivot && *row >> j & 1 == 1 {
                *row ^= self.row_bits[pivot];
            }
        }
        rows.remove(pivot);
        let mut labels = self.ground.labels().to_vec();
        labels.remove(j);
        let ground = GroundSet::new(labels).expect("labels stay distinct");
        let row_bits = rows.into_iter().map(|r| Subset(r).squeeze(j).0).collect();
        BinaryMatrix {
            rows: self.rows - 1,
            ground,
            row_bits,
        }
    }

    /// Connectivity of the vector matroid, decided without materializing it:
    /// reduce to standard form [I|D] and test connectivity of the bipartite
    /// support graph of D, with loops and coloops forcing disconnection.
    pub fn vector_matroid_connected(&self) -> bool {
        let n = self.cols();
        if n <= 1 {
            return true;
        }
        // loops disconnect any matroid with >= 2 elements
        if (0..n).any(|j| self.is_zero_column(j)) {
            return false;
        }
        let r = self.rank();
        if r == 0 {
            return false; // >= 2 loops
        }
        // greedy basis of columns
        let mut basis_cols = Vec::new();
        let mut basis: Vec<(u32, usize)> = Vec::new(); // reduced word, col idx
        for j in 0..n {
            let mut v = self.column_word(j);
            for &(b, _) in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push((v, j));
                basis.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                basis_cols.push(j);
            }
        }
        // coloop = basis column not spanned by the rest
        if basis_cols.iter().any(|&j| !self.column_in_span_of_rest(j)) {
            return false;
        }
        if basis_cols.len() == n {
            // rank n with no coloops cannot happen past the checks above
            return false;
        }
        // express non-basis columns over the basis; union-find on the basis
        // positions glued by shared support
        let mut parent: Vec<usize> = (0..r).collect();
        fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for j in 0..n {
            if basis_cols.contains(&j) {
                continue;
            }
            let coeff = solve_over_basis(self, &basis_cols, j);
            let mut first: Option<usize> = None;
            for k in 0..basis_cols.len() {
                if coeff >> k & 1 == 1 {
                    match first {
                        None => first = Some(k),
                        Some(f) => {
                            let (a, b) = (find(&mut parent, f), find(&mut parent, k));
                            parent[a] = b;
                        }
                    }
                }
            }
        }
        // all basis positions must be glued together
        let root = find(&mut parent, 0);
        (1..r).all(|k| find(&mut parent, k) == root)
    }
}

/// Coefficients of column `target` over the independent columns `basis_cols`,
/// as a bit word indexed by basis position.
fn solve_over_basis(m: &BinaryMatrix, basis_cols: &[usize], target: usize) -> u32 {
    // gaussian elimination on [basis | target] over rows
    let k = basis_cols.len();
    let mut rows: Vec<(u32, u32)> = Vec::new(); // (basis part, target bit in low)
    for i in 0..m.rows {
        let mut w = 0u32;
        for (c, &j) in basis_cols.iter().enumerate() {
            w |= ((m.row_bits[i] >> j) & 1) << c;
        }
        rows.push((w, (m.row_bits[i] >> target) & 1));
    }
    let mut used = vec![false; rows.len()];
    let mut pivot_of: Vec<Option<usize>> = vec![None; k];
    for c in 0..k {
        let pivot = (0..rows.len()).find(|&i| !used[i] && rows[i].0 >> c & 1 == 1);
        if let Some(p) = pivot {
            used[p] = true;
            pivot_of[c] = Some(p);
            let (pw, pt) = rows[p];
            for i in 0..rows.len() {
                if i != p && rows[i].0 >> c & 1 == 1 {
                    rows[i].0 ^= pw;
                    rows[i].1 ^= pt;
                }
            }
        }
    }
    // pivot target bits are final only once the RREF is complete
    let mut coeff = 0u32;
    for c in 0..k {
        if let Some(p) = pivot_of[c] {
            if rows[p].1 == 1 {
                coeff |= 1 << c;
            }
        }
    }
    // verify: sum of chosen basis columns equals target (debug builds)
    debug_assert_eq!(
        {
            let mut acc = 0u32;
            for (c, &j) in basis_cols.iter().enumerate() {
                if coeff >> c & 1 == 1 {
                    acc ^= m.column_word(j);
                }
            }
            acc
        },
        m.column_word(target)
    );
    coeff
}

/// Materializes the vector matroid M[A]: bases are the column subsets of size
/// rank(A) that are linearly independent over GF(2).
pub fn vector_matroid(a: &BinaryMatrix) -> Result<Matroid> {
    let n = a.cols();
    if n > MAX_EXPLICIT {
        return Err(Error::GroundSetOverflow(n, MAX_EXPLICIT));
    }
    let r = a.rank();
    let bases: Vec<Subset> = crate::ground::k_subsets(a.ground().full_set(), r)
        .into_iter()
        .filter(|&s| a.column_rank(s) == r)
        .collect();
    Matroid::validate(a.ground().clone(), bases)
}

/// Decides binary representability. Builds the fundamental-circuit incidence
/// matrix with respect to the least basis and accepts iff its vector matroid
/// reproduces the input; a binary matroid is represented by this matrix over
/// GF(2) with respect to any basis, so the test is decisive.
pub fn is_binary(m: &Matroid) -> Option<BinaryMatrix> {
    if m.size() == 0 || m.rank() == 0 {
        // only loops: represented by the zero matrix
        let mat = BinaryMatrix::new(
            if m.rank() == 0 { 1.min(m.size()) } else { 0 },
            m.ground().clone(),
            vec![0; 1.min(m.size())],
        )
        .ok()?;
        return Some(mat);
    }
    let b = m.bases()[0]; // least word
    let b_positions: Vec<usize> = b.iter().collect();
    let r = m.rank();
    let mut row_bits = vec![0u32; r];
    for e in 0..m.size() {
        if b.contains(e) {
            let row = b_positions.iter().position(|&p| p == e).unwrap();
            row_bits[row] |= 1 << e;
        } else {
            // fundamental circuit of e with respect to b: e plus the basis
            // elements x with b - x + e again a basis
            for (row, &x) in b_positions.iter().enumerate() {
                if m.is_basis(b.without(x).with(e)) {
                    row_bits[row] |= 1 << e;
                }
            }
        }
    }
    let mat = BinaryMatrix::new(r, m.ground().clone(), row_bits).ok()?;
    let v = vector_matroid(&mat).ok()?;
    if v.bases() == m.bases() {
        Some(mat)
    } else {
        None
    }
}

/// Vector matroid of the mod-2 vertex-edge incidence matrix of a multigraph.
/// Loops become zero columns. Edges are labeled `a`, `b`, `c`, ... in input
/// order unless labels are supplied.
pub fn graphic(edges: &[(usize, usize)], labels: Option<GroundSet>) -> Result<Matroid> {
    let m = edges.len();
    if m > MAX_EXPLICIT {
        return Err(Error::GroundSetOverflow(m, MAX_EXPLICIT));
    }
    let ground = match labels {
        Some(g) => {
            if g.len() != m {
                return Err(Error::PreconditionViolated("label count mismatch".into()));
            }
            g
        }
        None => GroundSet::letters(m),
    };
    let vmax = edges
        .iter()
        .map(|&(u, v)| u.max(v))
        .max()
        .map_or(0, |x| x + 1);
    if vmax > 32 {
        return Err(Error::GroundSetOverflow(vmax, 32));
    }
    let mut row_bits = vec![0u32; vmax];
    for (j, &(u, v)) in edges.iter().enumerate() {
        if u != v {
            row_bits[u] |= 1 << j;
            row_bits[v] |= 1 << j;
        }
    }
    let mat = BinaryMatrix::new(vmax, ground, row_bits)?;
    vector_matroid(&mat)
}

/// Edge list of the rank-`r` wheel graph: hub 0, rim vertices 1..=r.
/// Spokes first, then the rim cycle.
pub fn wheel_edges(r: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..=r).map(|i| (0, i)).collect();
    edges.extend((1..=r).map(|i| (i, if i == r { 1 } else { i + 1 })));
    edges
}

/// The k × (2^k − 1) matrix of all nonzero GF(2) vectors in lexicographic
/// order (column j is the binary expansion of j, top row most significant);
/// its vector matroid is PG(k−1, 2).
pub fn projective_geometry(k: usize) -> BinaryMatrix {
    assert!((1..=5).contains(&k));
    let n = (1usize << k) - 1;
    let ground = GroundSet::numbered("p", n);
    let mut row_bits = vec![0u32; k];
    for j in 1..=n {
        for s in 0..k {
            if j >> (k - 1 - s) & 1 == 1 {
                row_bits[s] |= 1 << (j - 1);
            }
        }
    }
    BinaryMatrix::new(k, ground, row_bits).expect("within caps")
}
