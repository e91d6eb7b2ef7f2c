//! Direct verification of the elementary-matrix commutator
//! factorizations, each display multiplied out exactly as printed and
//! compared entrywise as maps.
//!
//! The truncated-polynomial passage factors `d_i(r) d_{i+1}(r^{-1})` as a
//! product of four transvections; the cusp-curve passage prints the
//! analogous product with the roles of the indices swapped and takes its
//! inverse. The two displays are deliberately checked in their printed
//! forms rather than normalized into one another.

use super::field::Field;
use super::matrix::EndoMatrix;
use super::module::ModuleDescriptor;
use super::series::TruncatedSeries;
use super::EndoError;
use serde::Serialize;

/// One factorization instance. Indices follow the printed displays and
/// are 1-based: summand `i` is `m^(i-1)` for the truncated family and
/// `R_(i-1)` for the curve family.
#[derive(Clone, Debug)]
pub enum FactorizationCase<F: Field> {
    /// `d_i(r) d_{i+1}(r^{-1})` in `End(R + m + ... + m^(n-1))`,
    /// `1 <= i <= n-1`, `r` a unit of the form `1 + x(...)`.
    Truncated { n: u32, i: u32, r: TruncatedSeries<F> },
    /// Over `R_0, ..., R_n`: the inverted display for `delta_i`
    /// (`1 <= i <= n`) and, when `j > i`, the plain display for
    /// `gamma_j`; `f` a unit of the form `1 + m_(i-1)`-element.
    A2n { n: u32, i: u32, j: u32, f: TruncatedSeries<F> },
}

impl<F: Field> FactorizationCase<F> {
    pub fn label(&self) -> String {
        match self {
            FactorizationCase::Truncated { n, i, r } => {
                format!("truncated(n={n}, i={i}, r={})", r.render("x"))
            }
            FactorizationCase::A2n { n, i, j, f } => {
                format!("a2n(n={n}, i={i}, j={j}, f={})", f.render("t"))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    /// Which printed display failed, e.g. `delta_2` or `gamma_3`.
    pub display: String,
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Holds,
    Fails(Counterexample),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

fn compare<F: Field>(
    display: &str,
    lhs: &EndoMatrix<F>,
    rhs: &EndoMatrix<F>,
) -> Verdict {
    match lhs.first_difference(rhs) {
        None => Verdict::Holds,
        Some((row, col)) => Verdict::Fails(Counterexample {
            display: display.to_string(),
            row,
            col,
            lhs: lhs.get(row, col).multiplier().render("t"),
            rhs: rhs.get(row, col).multiplier().render("t"),
        }),
    }
}

/// Multiply out the quoted elementary product and compare it with the
/// quoted diagonal left-hand side; exact for the truncated family,
/// coefficientwise to working precision for the curve family.
pub fn verify_factorization<F: Field>(
    field: &F,
    case: &FactorizationCase<F>,
) -> Result<Verdict, EndoError> {
    match case {
        FactorizationCase::Truncated { n, i, r } => verify_truncated(field, *n, *i, r),
        FactorizationCase::A2n { n, i, j, f } => verify_a2n(field, *n, *i, *j, f),
    }
}

fn require_one_plus<F: Field>(
    field: &F,
    series: &TruncatedSeries<F>,
    what: &str,
) -> Result<(), EndoError> {
    if !field.is_one(&series.constant_term()) {
        return Err(EndoError::InvalidCase(format!(
            "{what} must have constant term 1, got {}",
            field.render(&series.constant_term())
        )));
    }
    Ok(())
}

fn verify_truncated<F: Field>(
    field: &F,
    n: u32,
    i: u32,
    r: &TruncatedSeries<F>,
) -> Result<Verdict, EndoError> {
    if n < 2 || i < 1 || i > n - 1 {
        return Err(EndoError::InvalidCase(format!(
            "truncated case needs n >= 2 and 1 <= i <= n-1, got n={n}, i={i}"
        )));
    }
    require_one_plus(field, r, "r")?;

    let summands = ModuleDescriptor::truncated_family(n);
    let lo = (i - 1) as usize; // m^(i-1)
    let hi = i as usize; // m^i
    let r_inv = r.invert()?;
    let one = TruncatedSeries::one(field.clone(), u64::from(n));

    let e = |row: usize, col: usize, beta: TruncatedSeries<F>| {
        EndoMatrix::elementary_e(field.clone(), &summands, row, col, beta)
    };
    // e_{i+1,i}((r^{-1}-1) 1) e_{i,i+1}(iota) e_{i+1,i}((r-1) 1) e_{i,i+1}(-r^{-1} iota)
    let product = EndoMatrix::product(&[
        e(hi, lo, r_inv.sub(&one))?,
        e(lo, hi, one.clone())?,
        e(hi, lo, r.sub(&one))?,
        e(lo, hi, r_inv.neg())?,
    ])?;

    let lhs = EndoMatrix::elementary_d(field.clone(), &summands, lo, r.clone())?
        .mul(&EndoMatrix::elementary_d(field.clone(), &summands, hi, r_inv)?)?;

    Ok(compare(&format!("truncated_d_{i}"), &lhs, &product))
}

fn verify_a2n<F: Field>(
    field: &F,
    n: u32,
    i: u32,
    j: u32,
    f: &TruncatedSeries<F>,
) -> Result<Verdict, EndoError> {
    if n < 1 || i < 1 || i > n || j < i || j > n {
        return Err(EndoError::InvalidCase(format!(
            "a2n case needs 1 <= i <= j <= n, got n={n}, i={i}, j={j}"
        )));
    }
    require_one_plus(field, f, "f")?;
    let precision = f.precision();
    let summands = ModuleDescriptor::a2n_family(n, precision);
    // f - 1 must lie in the maximal ideal of R_(i-1).
    let coeff_sg = summands[(i - 1) as usize].semigroup();
    if let Some(bad) = f.support().find(|&e| e > 0 && !coeff_sg.contains(e)) {
        return Err(EndoError::InvalidCase(format!(
            "f - 1 has exponent {bad} outside the maximal ideal of R_{}",
            i - 1
        )));
    }

    let f_inv = f.invert()?;
    let one = TruncatedSeries::one(field.clone(), precision);
    let e = |row: usize, col: usize, beta: TruncatedSeries<F>| {
        EndoMatrix::elementary_e(field.clone(), &summands, row, col, beta)
    };
    let d = |pos: usize, alpha: TruncatedSeries<F>| {
        EndoMatrix::elementary_d(field.clone(), &summands, pos, alpha)
    };

    // delta_i display:
    //   [e_{i,i+1}((f^{-1}-1) 1) e_{i+1,i}(iota) e_{i,i+1}((f-1) 1)
    //    e_{i+1,i}(-f^{-1} iota)]^{-1} = d_i(f) d_{i+1}(f^{-1}).
    // The inverse is taken factor by factor, transvections flipping sign.
    let (lo, hi) = ((i - 1) as usize, i as usize); // R_(i-1), R_i
    let inverted_product = EndoMatrix::product(&[
        e(hi, lo, f_inv.clone())?,
        e(lo, hi, one.sub(f))?,
        e(hi, lo, one.neg())?,
        e(lo, hi, one.sub(&f_inv))?,
    ])?;
    let delta = d(lo, f.clone())?.mul(&d(hi, f_inv.clone())?)?;
    let verdict = compare(&format!("delta_{i}"), &delta, &inverted_product);
    if !verdict.holds() {
        return Ok(verdict);
    }

    // gamma_j display (printed for j > i):
    //   e_{j,j+1}((f^{-1}-1) 1) e_{j+1,j}(iota) e_{j,j+1}((f-1) 1)
    //   e_{j+1,j}(-f^{-1} iota) = d_j(f^{-1}) d_{j+1}(f).
    if j > i {
        let (lo, hi) = ((j - 1) as usize, j as usize);
        let product = EndoMatrix::product(&[
            e(lo, hi, f_inv.sub(&one))?,
            e(hi, lo, one.clone())?,
            e(lo, hi, f.sub(&one))?,
            e(hi, lo, f_inv.neg())?,
        ])?;
        let gamma = d(lo, f_inv)?.mul(&d(hi, f.clone())?)?;
        let verdict = compare(&format!("gamma_{j}"), &gamma, &product);
        if !verdict.holds() {
            return Ok(verdict);
        }
    }
    Ok(Verdict::Holds)
}
