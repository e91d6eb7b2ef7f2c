//! Exact integer linear algebra: Smith normal form with transformation
//! matrices, integer kernels, and cokernel invariants.
//!
//! Everything runs over arbitrary-precision integers; the inputs in this
//! crate are tiny but SNF pivots can blow up even then.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// Empty matrices are legal: a 0-column matrix is the `t = 0` case of the
/// Auslander-Reiten homomorphism.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntegerMatrix { rows, cols, entries }
    }

    /// Convenience constructor from machine integers, mostly for tests and
    /// catalog data.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&e| BigInt::from(e)))
            .collect();
        IntegerMatrix { rows: r, cols: c, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = q * self.get(src, j);
            let cur = self.get(dst, j) + add;
            self.set(dst, j, cur);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = q * self.get(i, src);
            let cur = self.get(i, dst) + add;
            self.set(i, dst, cur);
        }
    }

    fn negate_row(&mut self, row: usize) {
        for j in 0..self.cols {
            let v = -self.get(row, j);
            self.set(row, j, v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let pivot_row = (k + 1..n).find(|&i| !a.get(i, k).is_zero());
                match pivot_row {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j);
                    a.set(i, j, &num / &prev);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1).clone()
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// JSON carries entries as decimal strings so arbitrary-precision values
// survive bit-exactly.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for IntegerMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        MatrixRepr { rows: self.rows, cols: self.cols, entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntegerMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        if repr.entries.len() != repr.rows || repr.entries.iter().any(|r| r.len() != repr.cols) {
            return Err(D::Error::custom("matrix entry shape mismatch"));
        }
        let mut entries = Vec::with_capacity(repr.rows * repr.cols);
        for row in &repr.entries {
            for s in row {
                let v = s
                    .parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("bad integer literal {s:?}")))?;
                entries.push(v);
            }
        }
        Ok(IntegerMatrix { rows: repr.rows, cols: repr.cols, entries })
    }
}

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal satisfying the
/// divisibility chain `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    /// Nonzero invariant factors, in divisibility order.
    pub diagonal: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

/// Smith normal form over the integers.
///
/// Pivot strategy: smallest nonzero absolute value in the remaining
/// submatrix, ties broken by (row, col) order, so decompositions are
/// reproducible for golden tests.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let m = a.rows();
    let n = a.cols();
    let mut w = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);

    let mut k = 0;
    while k < m.min(n) {
        let Some((pi, pj)) = find_pivot(&w, k) else {
            break;
        };
        w.swap_rows(k, pi);
        u.swap_rows(k, pi);
        w.swap_cols(k, pj);
        v.swap_cols(k, pj);

        loop {
            // Clear column k below the pivot.
            let mut dirty = false;
            for i in k + 1..m {
                if !w.get(i, k).is_zero() {
                    let q = -(w.get(i, k) / w.get(k, k));
                    w.add_row_multiple(i, k, &q);
                    u.add_row_multiple(i, k, &q);
                    dirty |= !w.get(i, k).is_zero();
                }
            }
            // Clear row k right of the pivot.
            for j in k + 1..n {
                if !w.get(k, j).is_zero() {
                    let q = -(w.get(k, j) / w.get(k, k));
                    w.add_col_multiple(j, k, &q);
                    v.add_col_multiple(j, k, &q);
                    dirty |= !w.get(k, j).is_zero();
                }
            }
            if dirty {
                // A remainder survived; a strictly smaller pivot now exists.
                let (pi, pj) = find_pivot(&w, k).expect("nonzero entry must remain");
                w.swap_rows(k, pi);
                u.swap_rows(k, pi);
                w.swap_cols(k, pj);
                v.swap_cols(k, pj);
                continue;
            }
            // Row and column are clear; force the pivot to divide the rest
            // of the submatrix so the diagonal comes out chained.
            match find_nondivisible(&w, k) {
                Some(i) => {
                    w.add_row_multiple(k, i, &BigInt::one());
                    u.add_row_multiple(k, i, &BigInt::one());
                }
                None => break,
            }
        }
        k += 1;
    }

    // Normalize pivot signs.
    for i in 0..k {
        if w.get(i, i).is_negative() {
            w.negate_row(i);
            u.negate_row(i);
        }
    }

    let diagonal = (0..k).map(|i| w.get(i, i).clone()).collect();
    SmithDecomposition { u, d: w, v, diagonal }
}

fn find_pivot(w: &IntegerMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in k..w.rows() {
        for j in k..w.cols() {
            let e = w.get(i, j);
            if e.is_zero() {
                continue;
            }
            let abs = e.abs();
            match &best {
                Some((b, _, _)) if *b <= abs => {}
                _ => best = Some((abs, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Row index `i > k` holding an entry the pivot does not divide.
fn find_nondivisible(w: &IntegerMatrix, k: usize) -> Option<usize> {
    let pivot = w.get(k, k);
    for i in k + 1..w.rows() {
        for j in k + 1..w.cols() {
            if !w.get(i, j).mod_floor(pivot).is_zero() {
                return Some(i);
            }
        }
    }
    None
}

/// Rank over the integers (count of nonzero invariant factors).
pub fn rank(a: &IntegerMatrix) -> usize {
    smith_normal_form(a).rank()
}

/// Basis of the integer kernel `{v : A v = 0}`.
///
/// With `U A V = D`, the kernel is spanned by the last `cols - rank`
/// columns of `V`, which form a basis because `V` is unimodular.
pub fn kernel_basis(a: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    (snf.rank()..a.cols()).map(|j| snf.v.column(j)).collect()
}

/// Invariants of `coker(A : Z^cols -> Z^rows)` as `(free_rank, torsion)`.
///
/// Torsion entries are the invariant factors `> 1`, already in
/// divisibility order.
pub fn cokernel_invariants(a: &IntegerMatrix) -> (usize, Vec<BigInt>) {
    let snf = smith_normal_form(a);
    let torsion = snf
        .diagonal
        .iter()
        .filter(|d| !d.is_one())
        .cloned()
        .collect();
    (a.rows() - snf.rank(), torsion)
}
