//! Brute-force invertibility for endomorphism matrices of the truncated
//! polynomial family: solve `A . B = 1` as a finite linear system over
//! the coefficient field. This route never looks at diagonal units, so it
//! is an independent check of the unit criterion.

use super::field::Field;
use super::matrix::EndoMatrix;
use super::module::{ModuleDescriptor, ModuleKind};

/// k-basis exponents of `Hom(m^src -> m^tgt)` in `k[x]/x^n`: multipliers
/// are defined mod `x^(n-src)` and must raise degree by at least
/// `tgt - src`.
fn hom_basis_exponents(n: u64, src: u64, tgt: u64) -> std::ops::Range<u64> {
    tgt.saturating_sub(src)..n - src
}

fn power_of(m: &ModuleDescriptor) -> u64 {
    match m.kind {
        ModuleKind::IdealPower { power } => u64::from(power),
        ModuleKind::Overring { .. } => {
            panic!("the linear-system oracle only covers the truncated family")
        }
    }
}

/// Is `a` invertible? Decided by consistency of the linear system
/// `a . B = identity` in the unknown matrix `B`, one coefficient equation
/// per exponent of every entry of the product.
pub fn is_unit_linear_oracle<F: Field>(a: &EndoMatrix<F>) -> bool {
    let field = a.field().clone();
    let s = a.size();
    let n = u64::from(a.summands()[0].ambient_n);
    let powers: Vec<u64> = a.summands().iter().map(power_of).collect();

    // Unknowns: coefficient e of the (m, k) entry of B.
    let mut var_index = Vec::new();
    let mut var_of = std::collections::HashMap::new();
    for m in 0..s {
        for k in 0..s {
            for e in hom_basis_exponents(n, powers[k], powers[m]) {
                var_of.insert((m, k, e), var_index.len());
                var_index.push((m, k, e));
            }
        }
    }
    let unknowns = var_index.len();

    // One equation per (i, k, d): coefficient d of sum_m a_im b_mk, taken
    // mod the annihilator x^(n - power_k) of the source.
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for i in 0..s {
        for (k, &power_k) in powers.iter().enumerate() {
            for d in 0..n - power_k {
                let mut row = vec![field.zero(); unknowns + 1];
                for m in 0..s {
                    let a_im = a.get(i, m).multiplier();
                    for (ea, ca) in a_im.terms() {
                        if ea > d {
                            break;
                        }
                        if let Some(&v) = var_of.get(&(m, k, d - ea)) {
                            row[v] = field.add(&row[v], ca);
                        }
                    }
                }
                if i == k && d == 0 {
                    row[unknowns] = field.one();
                }
                rows.push(row);
            }
        }
    }
    solve_consistent(&field, rows, unknowns)
}

/// Gaussian elimination; returns whether the augmented system is
/// consistent.
fn solve_consistent<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>, unknowns: usize) -> bool {
    let mut pivot_row = 0;
    for col in 0..unknowns {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = field
            .inv(&rows[pivot_row][col])
            .expect("pivot is nonzero");
        for cell in &mut rows[pivot_row][col..=unknowns] {
            *cell = field.mul(cell, &inv);
        }
        for r in 0..rows.len() {
            if r != pivot_row && !field.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                let (pivot_vals, target) = split_two(&mut rows, pivot_row, r);
                for (cell, p) in target[col..=unknowns]
                    .iter_mut()
                    .zip(&pivot_vals[col..=unknowns])
                {
                    let sub = field.mul(&factor, p);
                    *cell = field.sub(cell, &sub);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    // Inconsistent iff some row reads 0 = nonzero.
    !rows.iter().any(|row| {
        row[..unknowns].iter().all(|c| field.is_zero(c)) && !field.is_zero(&row[unknowns])
    })
}

/// Disjoint mutable access to two rows: `(&rows[a], &mut rows[b])`.
fn split_two<T>(rows: &mut [Vec<T>], a: usize, b: usize) -> (&Vec<T>, &mut Vec<T>) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}
