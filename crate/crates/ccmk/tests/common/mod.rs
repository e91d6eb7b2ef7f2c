//! Shared oracles for the integration suites. Everything here is an
//! independent route: it reads matrices only through public getters and
//! reimplements the reductions from scratch.

use ccmk::znf::IntegerMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;

/// Cokernel invariants by alternating integer row and column Hermite
/// reductions until the matrix is diagonal, then normalizing the diagonal
/// into a divisibility chain. Row operations change basis in the target
/// and column operations change the generating set of the image, so the
/// cokernel class is preserved throughout.
pub fn cokernel_invariants_hermite(a: &IntegerMatrix) -> (usize, Vec<BigInt>) {
    let rows = a.rows();
    let cols = a.cols();
    let mut w: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| a.get(i, j).clone()).collect())
        .collect();

    let mut rounds = 0;
    while !is_diagonal(&w) {
        row_reduce(&mut w);
        col_reduce(&mut w);
        rounds += 1;
        assert!(rounds < 10_000, "hermite alternation failed to converge");
    }

    let mut diag: Vec<BigInt> = (0..rows.min(cols))
        .map(|i| w[i][i].abs())
        .filter(|d| !d.is_zero())
        .collect();
    divisibility_chain(&mut diag);
    let free_rank = rows - diag.len();
    (free_rank, diag.into_iter().filter(|d| !d.is_one()).collect())
}

fn is_diagonal(w: &[Vec<BigInt>]) -> bool {
    w.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, e)| i == j || e.is_zero())
    })
}

/// Integer row echelon: clear below each pivot with gcd-style remainder
/// steps; pivots walk down and right.
fn row_reduce(w: &mut [Vec<BigInt>]) {
    let rows = w.len();
    let cols = w.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pivot = (r..rows)
                .filter(|&i| !w[i][c].is_zero())
                .min_by_key(|&i| w[i][c].abs());
            let Some(p) = pivot else { break };
            w.swap(r, p);
            let mut any_left = false;
            let pivot_vals = w[r].clone();
            for row in w.iter_mut().skip(r + 1) {
                if !row[c].is_zero() {
                    let q = &row[c] / &pivot_vals[c];
                    for (cell, p) in row.iter_mut().zip(&pivot_vals) {
                        *cell -= &q * p;
                    }
                    any_left |= !row[c].is_zero();
                }
            }
            if !any_left {
                r += 1;
                break;
            }
        }
    }
}

fn col_reduce(w: &mut [Vec<BigInt>]) {
    let rows = w.len();
    let cols = w.first().map_or(0, Vec::len);
    let mut c = 0;
    for r in 0..rows {
        if c == cols {
            break;
        }
        loop {
            let pivot = (c..cols)
                .filter(|&j| !w[r][j].is_zero())
                .min_by_key(|&j| w[r][j].abs());
            let Some(p) = pivot else { break };
            for row in w.iter_mut() {
                row.swap(c, p);
            }
            let mut any_left = false;
            for j in c + 1..cols {
                if !w[r][j].is_zero() {
                    let q = &w[r][j] / &w[r][c];
                    for row in w.iter_mut() {
                        let sub = &q * &row[c];
                        row[j] -= sub;
                    }
                    any_left |= !w[r][j].is_zero();
                }
            }
            if !any_left {
                c += 1;
                break;
            }
        }
    }
}

/// Pairwise gcd/lcm swaps until every entry divides the next.
fn divisibility_chain(diag: &mut [BigInt]) {
    loop {
        let mut changed = false;
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                let g = diag[i].gcd(&diag[j]);
                if g != diag[i] {
                    let l = &diag[i] * &diag[j] / &g;
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    diag.sort();
}

#[allow(dead_code)]
pub fn random_matrix(rng: &mut StdRng, max_dim: usize, max_entry: i64) -> IntegerMatrix {
    let rows = rng.random_range(0..=max_dim);
    let cols = rng.random_range(0..=max_dim);
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.random_range(-max_entry..=max_entry)).collect())
        .collect();
    if rows == 0 {
        IntegerMatrix::zero(0, cols)
    } else {
        IntegerMatrix::from_rows(&data)
    }
}
