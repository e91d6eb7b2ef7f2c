//! Module descriptors and Hom elements. Every Hom here is multiplication
//! by a series; membership of a multiplier is decided exactly from
//! supports and conductors.

use super::field::Field;
use super::series::{SupportSemigroup, TruncatedSeries};
use super::EndoError;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// `m^power` inside `k[x]/x^n`.
    IdealPower { power: u32 },
    /// `R_index = k[[t^2, t^(2(n-index)+1)]]` over the `A_2n` curve.
    Overring { index: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleDescriptor {
    pub kind: ModuleKind,
    /// Family parameter: the `n` of `k[x]/x^n` or of the `A_2n` curve.
    pub ambient_n: u32,
    /// Working precision for multiplier series.
    pub precision: u64,
}

impl ModuleDescriptor {
    pub fn ideal_power(ambient_n: u32, power: u32) -> Self {
        assert!(ambient_n >= 1 && power < ambient_n, "need 0 <= power < n");
        ModuleDescriptor {
            kind: ModuleKind::IdealPower { power },
            ambient_n,
            precision: u64::from(ambient_n),
        }
    }

    pub fn overring(ambient_n: u32, index: u32, precision: u64) -> Self {
        assert!(index <= ambient_n, "need 0 <= index <= n");
        ModuleDescriptor { kind: ModuleKind::Overring { index }, ambient_n, precision }
    }

    /// All summands of the truncated-polynomial cluster tilting object
    /// `R + m + ... + m^(n-1)`.
    pub fn truncated_family(ambient_n: u32) -> Vec<Self> {
        (0..ambient_n).map(|i| Self::ideal_power(ambient_n, i)).collect()
    }

    /// All summands `R_0, ..., R_n` of the `A_2n` curve.
    pub fn a2n_family(ambient_n: u32, precision: u64) -> Vec<Self> {
        (0..=ambient_n).map(|i| Self::overring(ambient_n, i, precision)).collect()
    }

    pub fn semigroup(&self) -> SupportSemigroup {
        match self.kind {
            ModuleKind::IdealPower { .. } => SupportSemigroup::Natural,
            ModuleKind::Overring { index } => {
                SupportSemigroup::two_gen(2 * u64::from(self.ambient_n - index) + 1)
            }
        }
    }

    /// Elements of the ring whose support semigroup this is contain 1;
    /// ideal powers `m^i` with `i > 0` do not.
    pub fn contains_one(&self) -> bool {
        match self.kind {
            ModuleKind::IdealPower { power } => power == 0,
            ModuleKind::Overring { .. } => true,
        }
    }

    /// Precision needed to decide membership exactly when this module is
    /// the target: the conductor of its semigroup plus the largest
    /// generator degree.
    pub fn required_precision(&self) -> u64 {
        match self.kind {
            ModuleKind::IdealPower { .. } => u64::from(self.ambient_n),
            ModuleKind::Overring { .. } => {
                let sg = self.semigroup();
                sg.conductor() + sg.max_generator()
            }
        }
    }

    pub fn name(&self) -> String {
        match self.kind {
            ModuleKind::IdealPower { power: 0 } => "R".to_string(),
            ModuleKind::IdealPower { power: 1 } => "m".to_string(),
            ModuleKind::IdealPower { power } => format!("m^{power}"),
            ModuleKind::Overring { index } => format!("R_{index}"),
        }
    }

    fn same_family(&self, other: &Self) -> bool {
        self.ambient_n == other.ambient_n
            && matches!(
                (self.kind, other.kind),
                (ModuleKind::IdealPower { .. }, ModuleKind::IdealPower { .. })
                    | (ModuleKind::Overring { .. }, ModuleKind::Overring { .. })
            )
    }
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Does multiplication by `f` map `source` into `target`?
///
/// For ideal powers the check is `e + i >= j` (or the product dies in
/// `m^n`) on every stored exponent. For overrings the condition
/// `supp(f) + S_src` inside `S_tgt` reduces to finitely many checks below
/// the target conductor; the unknown tail of `f` is harmless once the
/// precision clears `conductor + max generator` of the target.
pub fn hom_membership<F: Field>(
    f: &TruncatedSeries<F>,
    source: &ModuleDescriptor,
    target: &ModuleDescriptor,
) -> Result<bool, EndoError> {
    if !source.same_family(target) {
        return Err(EndoError::IncompatibleModules(format!(
            "{source} and {target} live over different rings"
        )));
    }
    let needed = target.required_precision();
    if f.precision() < needed {
        return Err(EndoError::InsufficientPrecision {
            needed,
            actual: f.precision(),
        });
    }
    match (source.kind, target.kind) {
        (ModuleKind::IdealPower { power: i }, ModuleKind::IdealPower { power: j }) => {
            let n = u64::from(source.ambient_n);
            let (i, j) = (u64::from(i), u64::from(j));
            Ok(f.support().all(|e| e + i >= j || e + i >= n))
        }
        (ModuleKind::Overring { .. }, ModuleKind::Overring { .. }) => {
            let s_src = source.semigroup();
            let s_tgt = target.semigroup();
            let conductor = s_tgt.conductor();
            for e in f.support() {
                if e >= conductor {
                    continue;
                }
                // Shifts by s >= conductor - e land past the conductor.
                for s in s_src.elements_below(conductor - e) {
                    if !s_tgt.contains(e + s) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        _ => unreachable!("same_family rules out mixed kinds"),
    }
}

/// An R-linear map `source -> target` given by multiplication.
#[derive(Clone, Debug)]
pub struct HomElement<F: Field> {
    pub source: ModuleDescriptor,
    pub target: ModuleDescriptor,
    multiplier: TruncatedSeries<F>,
}

impl<F: Field> HomElement<F> {
    pub fn new(
        source: ModuleDescriptor,
        target: ModuleDescriptor,
        multiplier: TruncatedSeries<F>,
    ) -> Result<Self, EndoError> {
        if !hom_membership(&multiplier, &source, &target)? {
            return Err(EndoError::MembershipFailure(format!(
                "multiplier {} does not map {source} into {target}",
                multiplier.render("t")
            )));
        }
        Ok(HomElement { source, target, multiplier })
    }

    pub fn zero(field: F, source: ModuleDescriptor, target: ModuleDescriptor) -> Self {
        let precision = source.precision.min(target.precision);
        HomElement { source, target, multiplier: TruncatedSeries::zero(field, precision) }
    }

    pub fn identity(field: F, module: ModuleDescriptor) -> Self {
        HomElement {
            source: module,
            target: module,
            multiplier: TruncatedSeries::one(field, module.precision),
        }
    }

    pub fn multiplier(&self) -> &TruncatedSeries<F> {
        &self.multiplier
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    /// Unit test in the local endomorphism ring of the summand; only
    /// meaningful on diagonal entries.
    pub fn is_unit_endomorphism(&self) -> bool {
        self.is_endomorphism() && !self.multiplier.field().is_zero(&self.multiplier.constant_term())
    }

    pub fn add(&self, other: &Self) -> Result<Self, EndoError> {
        if self.source != other.source || self.target != other.target {
            return Err(EndoError::IncompatibleModules(
                "sum of homs with different endpoints".to_string(),
            ));
        }
        // Membership is closed under sums; no re-check needed.
        Ok(HomElement {
            source: self.source,
            target: self.target,
            multiplier: self.multiplier.add(&other.multiplier),
        })
    }

    pub fn neg(&self) -> Self {
        HomElement {
            source: self.source,
            target: self.target,
            multiplier: self.multiplier.neg(),
        }
    }

    /// `self . other`: apply `other` first. Membership is re-checked on
    /// the product multiplier.
    pub fn compose(&self, other: &Self) -> Result<Self, EndoError> {
        if other.target != self.source {
            return Err(EndoError::IncompatibleModules(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        HomElement::new(other.source, self.target, self.multiplier.mul(&other.multiplier))
    }

    /// Equality as maps: multipliers are compared modulo the annihilator
    /// of the source for ideal powers, and to working precision for
    /// overrings.
    pub fn equal_as_maps(&self, other: &Self) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        match self.source.kind {
            ModuleKind::IdealPower { power } => {
                // x^(n - power) annihilates the source generator.
                let bound = u64::from(self.source.ambient_n) - u64::from(power);
                self.multiplier.equal_up_to(&other.multiplier, bound)
            }
            ModuleKind::Overring { .. } => self.multiplier.equal_to_precision(&other.multiplier),
        }
    }
}
