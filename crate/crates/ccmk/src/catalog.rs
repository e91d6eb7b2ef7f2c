//! Catalog of singularity families: summands of the cluster tilting
//! object, the AR sequence multiplicities, the abelianized automorphism
//! group, and admissibility checks on parameters.
//!
//! Sequence data is stored, not derived from module theory; each family's
//! table is transcribed once here and everything downstream is computed
//! from it.

use crate::groups::{Atom, StructuredAbelianGroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// Characteristic of the symbolic ground field; `0` means characteristic
/// zero. The field is always treated as algebraically closed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub characteristic: u64,
}

/// Linear form `a x + b y` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub a: BigRational,
    pub b: BigRational,
}

impl LinearForm {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        LinearForm { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        LinearForm {
            a: BigRational::from_integer(BigInt::from(a)),
            b: BigRational::from_integer(BigInt::from(b)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a_i b_j - a_j b_i`; zero iff the forms cut out the same line.
    pub fn det_with(&self, other: &LinearForm) -> BigRational {
        &self.a * &other.b - &other.a * &self.b
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn coeff(c: &BigRational) -> String {
            if c.abs().is_one() {
                String::new()
            } else {
                c.abs().to_string()
            }
        }
        let mut out = String::new();
        if !self.a.is_zero() {
            if self.a.is_negative() {
                out.push('-');
            }
            out.push_str(&coeff(&self.a));
            out.push('x');
        }
        if !self.b.is_zero() {
            if out.is_empty() {
                if self.b.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if self.b.is_negative() { "-" } else { "+" });
            }
            out.push_str(&coeff(&self.b));
            out.push('y');
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

/// Parse `a x + b y` with integer or rational coefficients; whitespace is
/// ignored. Examples: `x-y`, `2x+y`, `-x + 3/2 y`, `y`.
pub fn parse_linear_form(input: &str) -> Result<LinearForm, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty form".to_string());
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut a = BigRational::zero();
    let mut b = BigRational::zero();
    while pos < bytes.len() {
        let mut sign = BigRational::one();
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        }
        let digit_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let mut coeff = if pos > digit_start {
            let num: BigInt = s[digit_start..pos]
                .parse()
                .map_err(|_| format!("bad coefficient in {input:?}"))?;
            BigRational::from_integer(num)
        } else {
            BigRational::one()
        };
        if pos < bytes.len() && bytes[pos] == b'/' {
            pos += 1;
            let den_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == den_start {
                return Err(format!("missing denominator in {input:?}"));
            }
            let den: BigInt = s[den_start..pos]
                .parse()
                .map_err(|_| format!("bad denominator in {input:?}"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in {input:?}"));
            }
            coeff /= BigRational::from_integer(den);
        }
        // Allow an explicit multiplication sign after a numeric coefficient.
        if pos > digit_start && pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
        }
        match bytes.get(pos) {
            Some(b'x') => a += sign * coeff,
            Some(b'y') => b += sign * coeff,
            _ => return Err(format!("expected variable x or y in {input:?} at byte {pos}")),
        }
        pos += 1;
    }
    Ok(LinearForm { a, b })
}

/// One branch of a reduced plane hypersurface: a linear form with fully
/// decidable hypotheses, or an opaque irreducible form whose hypotheses
/// the caller asserts.
#[derive(Clone, Debug, PartialEq)]
pub enum BranchForm {
    Linear(LinearForm),
    General(String),
}

impl fmt::Display for BranchForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchForm::Linear(l) => write!(f, "{l}"),
            BranchForm::General(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for BranchForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_string().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BranchForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Ok(match parse_linear_form(&s) {
            Ok(l) => BranchForm::Linear(l),
            Err(_) => BranchForm::General(s),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdeType {
    A,
    D,
    E6,
    E7,
    E8,
}

/// Singularity family together with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    /// `k[x]/x^n`, n >= 1.
    TruncatedPoly { n: u32 },
    /// `k[[t^2, t^(2n+1)]]`, n >= 0.
    A2nCurve { n: u32 },
    /// `k[[s^2, st, t^2]]`.
    A1Surface,
    /// `k[[x^2, xy, xz, y^2, yz, z^2]]`.
    InvariantDim3,
    /// `k[[x, y]]/(f_1 ... f_n)` with smooth pairwise-distinct branches.
    ReducedHypersurfaceDim1 {
        forms: Vec<BranchForm>,
        assert_hypotheses: bool,
    },
    /// `k[[x, y]]/((x - y^n)(x + y^n))`, the A_(2n-1) curve. The branch
    /// pair is not adjacent for n > 1, so only Aut(L)_ab is tabulated.
    A2nMinus1Dim1 { n: u32 },
    /// `k[[x, y, u, v]]/(f_1 ... f_n + uv)`.
    HypersurfaceDim3 { n: u32 },
    /// ADE equation from the finite-type table; metadata only.
    AdeMetadata { ade_type: AdeType, index: u32, dim: u32 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingSpec {
    pub family: Family,
    pub field: FieldConfig,
}

impl RingSpec {
    pub fn new(family: Family) -> Self {
        RingSpec { family, field: FieldConfig::default() }
    }

    pub fn with_characteristic(mut self, characteristic: u64) -> Self {
        self.field = FieldConfig { characteristic };
        self
    }

    pub fn truncated_poly(n: u32) -> Self {
        Self::new(Family::TruncatedPoly { n })
    }

    pub fn a2n_curve(n: u32) -> Self {
        Self::new(Family::A2nCurve { n })
    }

    pub fn a1_surface() -> Self {
        Self::new(Family::A1Surface)
    }

    pub fn invariant_dim3() -> Self {
        Self::new(Family::InvariantDim3)
    }

    pub fn hypersurface_dim1(forms: Vec<BranchForm>) -> Self {
        Self::new(Family::ReducedHypersurfaceDim1 { forms, assert_hypotheses: false })
    }

    pub fn a2n_minus1_dim1(n: u32) -> Self {
        Self::new(Family::A2nMinus1Dim1 { n })
    }

    pub fn hypersurface_dim3(n: u32) -> Self {
        Self::new(Family::HypersurfaceDim3 { n })
    }

    pub fn ade(ade_type: AdeType, index: u32, dim: u32) -> Self {
        Self::new(Family::AdeMetadata { ade_type, index, dim })
    }

    /// A_1 in dimension one: branches `x - y` and `x + y`.
    pub fn a1_dim1() -> Self {
        Self::hypersurface_dim1(vec![
            BranchForm::Linear(LinearForm::from_ints(1, -1)),
            BranchForm::Linear(LinearForm::from_ints(1, 1)),
        ])
    }

    /// D_2n in dimension one (n >= 2): branches `x - y^(n-1)`, `y`,
    /// `x + y^(n-1)`. Nonlinear branches for n > 2 go through the
    /// asserted-hypotheses path; adjacency of consecutive branches holds
    /// because `(x -+ y^(n-1), y) = (x, y)`.
    pub fn d2n_dim1(n: u32) -> Self {
        assert!(n >= 2, "D_2n requires n >= 2");
        if n == 2 {
            return Self::hypersurface_dim1(vec![
                BranchForm::Linear(LinearForm::from_ints(1, -1)),
                BranchForm::Linear(LinearForm::from_ints(0, 1)),
                BranchForm::Linear(LinearForm::from_ints(1, 1)),
            ]);
        }
        let e = n - 1;
        Self::new(Family::ReducedHypersurfaceDim1 {
            forms: vec![
                BranchForm::General(format!("x-y^{e}")),
                BranchForm::Linear(LinearForm::from_ints(0, 1)),
                BranchForm::General(format!("x+y^{e}")),
            ],
            assert_hypotheses: true,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
}

impl Diagnostic {
    fn error(message: impl Into<String>) -> Self {
        Diagnostic { severity: Severity::Error, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("invalid ring spec: {}", format_diagnostics(.0))]
    InvalidSpec(Vec<Diagnostic>),
    #[error("metadata-only catalog entry: {0}")]
    MetadataOnly(String),
}

fn format_diagnostics(diags: &[Diagnostic]) -> String {
    diags.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// One n-AR sequence `0 -> C^cn -> ... -> C^0 -> L_j -> 0`, recorded as
/// multiplicity vectors over the summand list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArSequence {
    /// Index of the non-free summand the sequence ends in.
    pub end_index: usize,
    /// `terms[i]` is the multiplicity vector of `C^i`, `i = 0..=cluster_n`.
    pub terms: Vec<Vec<u32>>,
}

/// Resolved data for one catalog entry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClusterTiltingData {
    pub cluster_n: u32,
    /// Summand names; the free summand sits at `free_index`.
    pub summands: Vec<String>,
    pub free_index: usize,
    /// One sequence per non-free summand, in summand order; `None` when
    /// the family has no tabulated sequences.
    pub sequences: Option<Vec<ArSequence>>,
    pub aut_ab: Option<StructuredAbelianGroup>,
    /// How many `UnitsField` atoms of canonical `aut_ab` form the
    /// distinguished residue torus `(k*)^(t+1)`; all of them, here.
    pub torus_marks: usize,
}

impl ClusterTiltingData {
    pub fn non_free_count(&self) -> usize {
        self.summands.len() - 1
    }
}

fn forbidden_characteristics(family: &Family) -> &'static [u64] {
    match family {
        Family::A2nCurve { .. } | Family::A2nMinus1Dim1 { .. } | Family::AdeMetadata { .. } => {
            &[2, 3, 5]
        }
        Family::InvariantDim3 => &[2, 3],
        _ => &[2],
    }
}

/// Admissibility diagnostics; an empty list means the ring spec is
/// admissible.
pub fn validate(spec: &RingSpec) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let forbidden = forbidden_characteristics(&spec.family);
    if forbidden.contains(&spec.field.characteristic) {
        diags.push(Diagnostic::error(format!(
            "characteristic restriction: this family requires char k not in {{{}}}",
            forbidden.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
        )));
    }
    match &spec.family {
        Family::TruncatedPoly { n } => {
            if *n < 1 {
                diags.push(Diagnostic::error("truncated polynomial ring requires n >= 1"));
            }
        }
        Family::A2nCurve { .. } | Family::A1Surface | Family::InvariantDim3 => {}
        Family::A2nMinus1Dim1 { n } => {
            if *n < 1 {
                diags.push(Diagnostic::error("A_(2n-1) requires n >= 1"));
            }
        }
        Family::HypersurfaceDim3 { n } => {
            if *n < 1 {
                diags.push(Diagnostic::error("hypersurface requires at least one branch"));
            }
        }
        Family::AdeMetadata { ade_type, index, dim } => {
            match ade_type {
                AdeType::A if *index < 1 => {
                    diags.push(Diagnostic::error("A_n requires n >= 1"));
                }
                AdeType::D if *index < 4 => {
                    diags.push(Diagnostic::error("D_n requires n >= 4"));
                }
                _ => {}
            }
            if *dim < 1 {
                diags.push(Diagnostic::error("ADE metadata requires dim >= 1"));
            }
        }
        Family::ReducedHypersurfaceDim1 { forms, assert_hypotheses } => {
            if forms.is_empty() {
                diags.push(Diagnostic::error("hypersurface requires at least one branch"));
            }
            let has_general = forms.iter().any(|f| matches!(f, BranchForm::General(_)));
            if has_general && !assert_hypotheses {
                diags.push(Diagnostic::error(
                    "non-linear branch forms are accepted only with assert_hypotheses; \
                     smoothness and adjacency cannot be decided from coefficients",
                ));
            }
            if !has_general {
                let linear: Vec<&LinearForm> = forms
                    .iter()
                    .map(|f| match f {
                        BranchForm::Linear(l) => l,
                        BranchForm::General(_) => unreachable!(),
                    })
                    .collect();
                for (i, form) in linear.iter().enumerate() {
                    if form.is_zero() {
                        diags.push(Diagnostic::error(format!(
                            "branch {} is the zero form",
                            i + 1
                        )));
                    }
                }
                // Isolated singularity: no two branches cut the same line.
                for i in 0..linear.len() {
                    for j in i + 1..linear.len() {
                        if !linear[i].is_zero()
                            && !linear[j].is_zero()
                            && linear[i].det_with(linear[j]).is_zero()
                        {
                            diags.push(Diagnostic::error(format!(
                                "not an isolated singularity: branches {} and {} are proportional",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                }
                // Adjacency (f_i, f_{i+1}) = (x, y); for linear forms this
                // is exactly a nonzero 2x2 coefficient determinant.
                for i in 0..linear.len().saturating_sub(1) {
                    if !linear[i].is_zero()
                        && !linear[i + 1].is_zero()
                        && linear[i].det_with(linear[i + 1]).is_zero()
                    {
                        diags.push(Diagnostic::error(format!(
                            "adjacency fails: (f_{}, f_{}) is not the maximal ideal (x, y)",
                            i + 1,
                            i + 2
                        )));
                    }
                }
            }
        }
    }
    diags
}

pub fn is_admissible(spec: &RingSpec) -> bool {
    validate(spec).iter().all(|d| d.severity != Severity::Error)
}

fn unit_vector(len: usize, index: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[index] = 1;
    v
}

/// Tabulated data for an admissible spec.
pub fn resolve(spec: &RingSpec) -> Result<ClusterTiltingData, CatalogError> {
    let diags = validate(spec);
    if diags.iter().any(|d| d.severity == Severity::Error) {
        return Err(CatalogError::InvalidSpec(diags));
    }
    match &spec.family {
        Family::TruncatedPoly { n } => {
            let n = *n as usize;
            let summands: Vec<String> = (0..n)
                .map(|i| match i {
                    0 => "R".to_string(),
                    1 => "m".to_string(),
                    _ => format!("m^{i}"),
                })
                .collect();
            // 0 -> m^j -> m^(j-1) + m^(j+1) -> m^j -> 0, with m^n = 0.
            let sequences = (1..n)
                .map(|j| {
                    let mut middle = unit_vector(n, j - 1);
                    if j + 1 < n {
                        middle[j + 1] = 1;
                    }
                    ArSequence { end_index: j, terms: vec![middle, unit_vector(n, j)] }
                })
                .collect();
            Ok(ClusterTiltingData {
                cluster_n: 1,
                torus_marks: n,
                free_index: 0,
                aut_ab: Some(StructuredAbelianGroup::units_field_power(n)),
                sequences: Some(sequences),
                summands,
            })
        }
        Family::A2nCurve { n } => {
            let n = *n as usize;
            let count = n + 1;
            let summands: Vec<String> = (0..count).map(|i| format!("R_{i}")).collect();
            // 0 -> R_j -> R_(j-1) + R_(j+1) -> R_j -> 0 for j < n; the last
            // sequence has middle term R_(n-1) + R_n.
            let sequences = (1..count)
                .map(|j| {
                    let mut middle = unit_vector(count, j - 1);
                    let upper = if j < n { j + 1 } else { n };
                    middle[upper] += 1;
                    ArSequence { end_index: j, terms: vec![middle, unit_vector(count, j)] }
                })
                .collect();
            let mut atoms = vec![Atom::UnitsField; n];
            atoms.push(Atom::UnitsPowerSeries("k[[t]]".to_string()));
            Ok(ClusterTiltingData {
                cluster_n: 1,
                torus_marks: count,
                free_index: 0,
                aut_ab: Some(StructuredAbelianGroup::from_atoms(atoms)),
                sequences: Some(sequences),
                summands,
            })
        }
        Family::A1Surface => Ok(ClusterTiltingData {
            cluster_n: 1,
            summands: vec!["R".to_string(), "I".to_string()],
            free_index: 0,
            // 0 -> I -> R^2 -> I -> 0
            sequences: Some(vec![ArSequence {
                end_index: 1,
                terms: vec![vec![2, 0], vec![0, 1]],
            }]),
            aut_ab: Some(StructuredAbelianGroup::from_atoms(vec![
                Atom::UnitsField,
                Atom::UnitsLocalRing("k[[s^2,st,t^2]]".to_string()),
            ])),
            torus_marks: 2,
        }),
        Family::InvariantDim3 => Ok(ClusterTiltingData {
            cluster_n: 2,
            summands: vec!["R".to_string(), "I".to_string()],
            free_index: 0,
            // No 2-AR sequence table is available for this entry.
            sequences: None,
            aut_ab: Some(StructuredAbelianGroup::from_atoms(vec![
                Atom::UnitsField,
                Atom::UnitsLocalRing("k[[x^2,xy,xz,y^2,yz,z^2]]".to_string()),
            ])),
            torus_marks: 2,
        }),
        Family::ReducedHypersurfaceDim1 { forms, .. } => {
            let n = forms.len();
            let summands: Vec<String> = (1..=n).map(|i| format!("S_{i}")).collect();
            // 0 -> S_j -> S_(j+1)+S_(j-1) -> S_(j+1)+S_(j-1) -> S_j -> 0
            // for 1 <= j < n, reading S_0 as 0. Summand S_i sits at index
            // i - 1; the free summand is S_n.
            let sequences = (1..n)
                .map(|j| {
                    let mut middle = unit_vector(n, j);
                    if j >= 2 {
                        middle[j - 2] = 1;
                    }
                    ArSequence {
                        end_index: j - 1,
                        terms: vec![middle.clone(), middle, unit_vector(n, j - 1)],
                    }
                })
                .collect();
            let branch_units =
                vec![Atom::UnitsPowerSeries("k[[X]]".to_string()); n];
            Ok(ClusterTiltingData {
                cluster_n: 2,
                torus_marks: n,
                free_index: n - 1,
                aut_ab: Some(StructuredAbelianGroup::from_atoms(branch_units)),
                sequences: Some(sequences),
                summands,
            })
        }
        Family::A2nMinus1Dim1 { .. } => Ok(ClusterTiltingData {
            cluster_n: 2,
            summands: vec!["S_1".to_string(), "S_2".to_string()],
            free_index: 1,
            // The adjacency hypothesis fails for n > 1, so no 2-AR
            // sequence table applies; only Aut(L)_ab is tabulated.
            sequences: None,
            aut_ab: Some(StructuredAbelianGroup::from_atoms(vec![
                Atom::UnitsPowerSeries(
                    "k[[X]]".to_string()
                );
                2
            ])),
            torus_marks: 2,
        }),
        Family::HypersurfaceDim3 { n } => {
            let n = *n as usize;
            let summands: Vec<String> = (1..=n).map(|i| format!("U_{i}")).collect();
            Ok(ClusterTiltingData {
                cluster_n: 2,
                summands,
                free_index: n - 1,
                sequences: None,
                aut_ab: None,
                torus_marks: 0,
            })
        }
        Family::AdeMetadata { ade_type, index, dim } => Err(CatalogError::MetadataOnly(
            ade_label(*ade_type, *index, *dim),
        )),
    }
}

fn ade_label(ade_type: AdeType, index: u32, dim: u32) -> String {
    let name = match ade_type {
        AdeType::A => format!("A_{index}"),
        AdeType::D => format!("D_{index}"),
        AdeType::E6 => "E_6".to_string(),
        AdeType::E7 => "E_7".to_string(),
        AdeType::E8 => "E_8".to_string(),
    };
    format!("{name} (dim {dim})")
}

/// Defining equation of an ADE singularity of the given dimension.
pub fn ade_equation(ade_type: AdeType, index: u32, dim: u32) -> String {
    let quadric: String = (2..=dim as usize)
        .map(|i| format!(" + z_{i}^2"))
        .collect();
    let core = match ade_type {
        AdeType::A => format!("x^2 + y^{}", index + 1),
        AdeType::D => format!("x^2 y + y^{}", index - 1),
        AdeType::E6 => "x^3 + y^4".to_string(),
        AdeType::E7 => "x^3 + x y^3".to_string(),
        AdeType::E8 => "x^3 + y^5".to_string(),
    };
    format!("{core}{quadric}")
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub id: String,
    pub description: String,
    pub parameters: String,
    pub characteristic: String,
    pub availability: String,
}

/// Supported families with parameter schemas and computation availability.
pub fn list_families() -> Vec<FamilyDescriptor> {
    vec![
        FamilyDescriptor {
            id: "truncated-poly".to_string(),
            description: "k[x]/x^n, truncated polynomial ring in one variable".to_string(),
            parameters: "--n <u32 >= 1>".to_string(),
            characteristic: "char != 2".to_string(),
            availability: "G0,G1 available".to_string(),
        },
        FamilyDescriptor {
            id: "a2n-curve".to_string(),
            description: "k[[t^2, t^(2n+1)]], A_2n curve singularity".to_string(),
            parameters: "--n <u32 >= 0>".to_string(),
            characteristic: "char != 2,3,5".to_string(),
            availability: "G0,G1 available".to_string(),
        },
        FamilyDescriptor {
            id: "a1-surface".to_string(),
            description: "k[[s^2, st, t^2]], A_1 surface singularity".to_string(),
            parameters: "(none)".to_string(),
            characteristic: "char != 2".to_string(),
            availability: "G0,G1 available".to_string(),
        },
        FamilyDescriptor {
            id: "hypersurface-dim1".to_string(),
            description: "k[[x,y]]/(f_1...f_n), reduced plane curve with smooth branches"
                .to_string(),
            parameters: "--forms \"f_1,...,f_n\" (linear forms a x + b y)".to_string(),
            characteristic: "char != 2".to_string(),
            availability: "G0,G1 available".to_string(),
        },
        FamilyDescriptor {
            id: "a1-dim1".to_string(),
            description: "k[[x,y]]/((x-y)(x+y)), A_1 curve as a 2-branch hypersurface"
                .to_string(),
            parameters: "(none)".to_string(),
            characteristic: "char != 2".to_string(),
            availability: "G0,G1 available".to_string(),
        },
        FamilyDescriptor {
            id: "d2n-dim1".to_string(),
            description: "k[[x,y]]/((x-y^(n-1)) y (x+y^(n-1))), D_2n curve".to_string(),
            parameters: "--n <u32 >= 2>".to_string(),
            characteristic: "char != 2".to_string(),
            availability: "G0,G1 available (branch hypotheses asserted for n > 2)".to_string(),
        },
        FamilyDescriptor {
            id: "a2n-minus1-dim1".to_string(),
            description: "k[[x,y]]/((x-y^n)(x+y^n)), A_(2n-1) curve".to_string(),
            parameters: "--n <u32 >= 1>".to_string(),
            characteristic: "char != 2,3,5".to_string(),
            availability:
                "Aut_ab available; G0,G1 unavailable: branch adjacency fails for n > 1 \
                 (for n = 1 use a1-dim1)"
                    .to_string(),
        },
        FamilyDescriptor {
            id: "invariant-dim3".to_string(),
            description: "k[[x^2,xy,xz,y^2,yz,z^2]], invariant subring in dimension three"
                .to_string(),
            parameters: "(none)".to_string(),
            characteristic: "char != 2,3".to_string(),
            availability: "Aut_ab available; G0,G1 unavailable: no sequence data".to_string(),
        },
        FamilyDescriptor {
            id: "hypersurface-dim3".to_string(),
            description: "k[[x,y,u,v]]/(f_1...f_n + uv), dimension-three hypersurface"
                .to_string(),
            parameters: "--n <u32 >= 1>".to_string(),
            characteristic: "char != 2".to_string(),
            availability: "summands only; sequences unavailable".to_string(),
        },
        FamilyDescriptor {
            id: "ade".to_string(),
            description: "ADE finite-type equations (metadata only)".to_string(),
            parameters: "--type <a|d|e6|e7|e8> [--index <u32>] --dim <u32>".to_string(),
            characteristic: "char != 2,3,5".to_string(),
            availability: "metadata only".to_string(),
        },
    ]
}
