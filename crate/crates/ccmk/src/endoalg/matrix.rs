//! Square matrices of Hom elements over a fixed summand list, with the
//! unit and radical criteria, elementary matrices, the tilde construction
//! and the determinant-evaluation map of the cusp-curve family.

use super::field::Field;
use super::module::{HomElement, ModuleDescriptor};
use super::series::TruncatedSeries;
use super::EndoError;

/// Matrix `(a_ij)` with `a_ij : summand_j -> summand_i`; composition is
/// matrix multiplication of multipliers with membership re-checked.
#[derive(Clone, Debug)]
pub struct EndoMatrix<F: Field> {
    field: F,
    summands: Vec<ModuleDescriptor>,
    entries: Vec<HomElement<F>>,
}

impl<F: Field> EndoMatrix<F> {
    pub fn identity(field: F, summands: &[ModuleDescriptor]) -> Self {
        let entries = summands
            .iter()
            .enumerate()
            .flat_map(|(i, &target)| {
                let field = field.clone();
                summands.iter().enumerate().map(move |(j, &source)| {
                    if i == j {
                        HomElement::identity(field.clone(), source)
                    } else {
                        HomElement::zero(field.clone(), source, target)
                    }
                })
            })
            .collect();
        EndoMatrix { field, summands: summands.to_vec(), entries }
    }

    pub fn size(&self) -> usize {
        self.summands.len()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn summands(&self) -> &[ModuleDescriptor] {
        &self.summands
    }

    pub fn get(&self, row: usize, col: usize) -> &HomElement<F> {
        &self.entries[row * self.summands.len() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, hom: HomElement<F>) -> Result<(), EndoError> {
        if hom.source != self.summands[col] || hom.target != self.summands[row] {
            return Err(EndoError::IncompatibleModules(format!(
                "entry ({row}, {col}) must map {} into {}",
                self.summands[col], self.summands[row]
            )));
        }
        self.entries[row * self.summands.len() + col] = hom;
        Ok(())
    }

    /// Set entry (row, col) to multiplication by `multiplier`.
    pub fn set_multiplier(
        &mut self,
        row: usize,
        col: usize,
        multiplier: TruncatedSeries<F>,
    ) -> Result<(), EndoError> {
        let hom = HomElement::new(self.summands[col], self.summands[row], multiplier)?;
        self.set(row, col, hom)
    }

    /// Diagonal automorphism `d_j(alpha)`: identity away from `j`,
    /// multiplication by `alpha` at `j`. `alpha` must be a unit of the
    /// local endomorphism ring.
    pub fn elementary_d(
        field: F,
        summands: &[ModuleDescriptor],
        j: usize,
        alpha: TruncatedSeries<F>,
    ) -> Result<Self, EndoError> {
        if field.is_zero(&alpha.constant_term()) {
            return Err(EndoError::NotAUnit);
        }
        let mut m = Self::identity(field, summands);
        m.set_multiplier(j, j, alpha)?;
        debug_assert!(m.is_unit());
        Ok(m)
    }

    /// Transvection `e_ij(beta)`: identity diagonal plus `beta` in entry
    /// `(i, j)`, `i != j`. Always a unit, with inverse `e_ij(-beta)`.
    pub fn elementary_e(
        field: F,
        summands: &[ModuleDescriptor],
        i: usize,
        j: usize,
        beta: TruncatedSeries<F>,
    ) -> Result<Self, EndoError> {
        if i == j {
            return Err(EndoError::IncompatibleModules(
                "transvection requires i != j".to_string(),
            ));
        }
        let mut m = Self::identity(field, summands);
        m.set_multiplier(i, j, beta)?;
        debug_assert!(m.is_unit());
        Ok(m)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, EndoError> {
        if self.summands != other.summands {
            return Err(EndoError::IncompatibleModules(
                "matrix product over different summand lists".to_string(),
            ));
        }
        let s = self.size();
        let mut out = Self::identity(self.field.clone(), &self.summands);
        for i in 0..s {
            for j in 0..s {
                let mut acc =
                    HomElement::zero(self.field.clone(), self.summands[j], self.summands[i]);
                for m in 0..s {
                    let term = self.get(i, m).compose(other.get(m, j))?;
                    acc = acc.add(&term)?;
                }
                out.set(i, j, acc)?;
            }
        }
        Ok(out)
    }

    /// Product of a list of factors, left to right.
    pub fn product(factors: &[Self]) -> Result<Self, EndoError> {
        let first = factors.first().expect("empty product");
        let mut acc = first.clone();
        for f in &factors[1..] {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, EndoError> {
        if self.summands != other.summands {
            return Err(EndoError::IncompatibleModules(
                "matrix difference over different summand lists".to_string(),
            ));
        }
        let s = self.size();
        let mut out = self.clone();
        for i in 0..s {
            for j in 0..s {
                out.set(i, j, self.get(i, j).add(&other.get(i, j).neg())?)?;
            }
        }
        Ok(out)
    }

    /// Invertible iff every diagonal entry is a unit of its local
    /// endomorphism ring; off-diagonal entries are irrelevant.
    pub fn is_unit(&self) -> bool {
        (0..self.size()).all(|j| self.get(j, j).is_unit_endomorphism())
    }

    /// In the Jacobson radical iff every diagonal entry is a non-unit.
    pub fn in_radical(&self) -> bool {
        (0..self.size()).all(|j| !self.get(j, j).is_unit_endomorphism())
    }

    pub fn equal_as_maps(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// First entry, in row-major order, where the two matrices differ as
    /// maps; `None` when equal.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.summands != other.summands {
            return Some((0, 0));
        }
        let s = self.size();
        (0..s)
            .flat_map(|i| (0..s).map(move |j| (i, j)))
            .find(|&(i, j)| !self.get(i, j).equal_as_maps(other.get(i, j)))
    }

    pub fn is_diagonal(&self) -> bool {
        let s = self.size();
        (0..s).all(|i| {
            (0..s).all(|j| i == j || self.get(i, j).multiplier().is_zero())
        })
    }

    /// Matrix of multipliers evaluated at 1, with the determinant taken in
    /// the ambient power-series ring. Requires every summand to contain 1,
    /// which holds for the overring families.
    pub fn det_evaluation(&self) -> Result<TruncatedSeries<F>, EndoError> {
        if let Some(bad) = self.summands.iter().find(|m| !m.contains_one()) {
            return Err(EndoError::IncompatibleModules(format!(
                "cannot evaluate at 1: summand {bad} does not contain 1"
            )));
        }
        let s = self.size();
        let values: Vec<TruncatedSeries<F>> = self
            .entries
            .iter()
            .map(|h| h.multiplier().clone().into_natural())
            .collect();
        Ok(det_laplace(&self.field, &values, (0..s).collect(), (0..s).collect(), s))
    }

    /// The map `Phi`: diagonal residues at every summand but the last,
    /// together with the evaluated determinant.
    pub fn phi_map(&self) -> Result<(Vec<F::Elem>, TruncatedSeries<F>), EndoError> {
        if !self.is_unit() {
            return Err(EndoError::NotAUnit);
        }
        let residues = (0..self.size() - 1)
            .map(|i| self.get(i, i).multiplier().constant_term())
            .collect();
        Ok((residues, self.det_evaluation()?))
    }
}

fn det_laplace<F: Field>(
    field: &F,
    values: &[TruncatedSeries<F>],
    rows: Vec<usize>,
    cols: Vec<usize>,
    width: usize,
) -> TruncatedSeries<F> {
    let precision = values
        .iter()
        .map(TruncatedSeries::precision)
        .min()
        .unwrap_or(u64::MAX);
    if rows.is_empty() {
        return TruncatedSeries::one(field.clone(), precision);
    }
    let mut acc = TruncatedSeries::zero(field.clone(), precision);
    let row = rows[0];
    let rest: Vec<usize> = rows[1..].to_vec();
    for (pos, &col) in cols.iter().enumerate() {
        let entry = &values[row * width + col];
        if entry.is_zero() {
            continue;
        }
        let remaining: Vec<usize> =
            cols.iter().copied().filter(|&c| c != col).collect();
        let minor = det_laplace(field, values, rest.clone(), remaining, width);
        let term = entry.mul(&minor);
        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// The tilde construction: embed an automorphism of
/// `L' = sum_j universe_j^(l_j)` into a `q x q` block matrix over
/// `End(L)`, `q = max l_j`, by the coordinate shuffle that sends the
/// `L'`-copies of each summand to its first `l_j` slots and pads the rest
/// with the identity of `L''`.
pub fn tilde<F: Field>(
    field: &F,
    universe: &[ModuleDescriptor],
    multiplicities: &[u32],
    alpha: &EndoMatrix<F>,
) -> Result<EndoMatrix<F>, EndoError> {
    if multiplicities.len() != universe.len() {
        return Err(EndoError::IncompatibleModules(
            "one multiplicity per summand required".to_string(),
        ));
    }
    let q = *multiplicities.iter().max().unwrap_or(&0) as usize;
    if q == 0 {
        return Err(EndoError::IncompatibleModules(
            "L' must have at least one summand".to_string(),
        ));
    }
    let expanded = expand_multiplicities(universe, multiplicities);
    if alpha.summands() != expanded.as_slice() {
        return Err(EndoError::IncompatibleModules(
            "alpha must act on the expanded summand list of L'".to_string(),
        ));
    }

    // Position of (summand j, copy c) inside the expanded list.
    let offsets: Vec<usize> = multiplicities
        .iter()
        .scan(0usize, |acc, &l| {
            let here = *acc;
            *acc += l as usize;
            Some(here)
        })
        .collect();

    let u = universe.len();
    let big: Vec<ModuleDescriptor> = (0..q).flat_map(|_| universe.iter().copied()).collect();
    let mut out = EndoMatrix::identity(field.clone(), &big);
    for c_row in 0..q {
        for (j_row, &l_row) in multiplicities.iter().enumerate() {
            for c_col in 0..q {
                for (j_col, &l_col) in multiplicities.iter().enumerate() {
                    let row = c_row * u + j_row;
                    let col = c_col * u + j_col;
                    let hom = if c_row < l_row as usize && c_col < l_col as usize {
                        alpha.get(offsets[j_row] + c_row, offsets[j_col] + c_col).clone()
                    } else if row == col {
                        // The 1_{L''} part of alpha + 1_{L''}.
                        HomElement::identity(field.clone(), universe[j_row])
                    } else {
                        HomElement::zero(field.clone(), universe[j_col], universe[j_row])
                    };
                    out.set(row, col, hom)?;
                }
            }
        }
    }
    Ok(out)
}

/// The expanded summand list of `L'`: each summand repeated per its
/// multiplicity, in summand order.
pub fn expand_multiplicities(
    universe: &[ModuleDescriptor],
    multiplicities: &[u32],
) -> Vec<ModuleDescriptor> {
    universe
        .iter()
        .zip(multiplicities)
        .flat_map(|(&m, &l)| std::iter::repeat_n(m, l as usize))
        .collect()
}
