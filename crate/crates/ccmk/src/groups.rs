//! Structured abelian groups: a finitely generated part (free rank plus
//! torsion in divisibility order) together with symbolic unit-group atoms
//! `k*`, `1+m`, `k[[t]]*`, `R*`.
//!
//! The field `k` is a formal algebraically closed field, so the quotient
//! rule `k*/(k*)^d = 1` for `d >= 1` is hard-coded; quotients of tori by
//! exponent lattices therefore only lose rank.

use crate::znf::{smith_normal_form, IntegerMatrix};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Symbolic unit-group atom. Labels identify rings up to the renamings the
/// results are stated with; `k[[t]]` and `k[[X]]` are the same ring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `k*`, units of the ground field.
    UnitsField,
    /// `1 + m` of the labeled complete local ring.
    OneUnits(String),
    /// Full unit group of the labeled power-series ring; expands to
    /// `UnitsField + OneUnits` in canonical form.
    UnitsPowerSeries(String),
    /// `R*` of the labeled local ring; expands like `UnitsPowerSeries`.
    UnitsLocalRing(String),
}

impl Atom {
    fn kind_name(&self) -> &'static str {
        match self {
            Atom::UnitsField => "units_field",
            Atom::OneUnits(_) => "one_units",
            Atom::UnitsPowerSeries(_) => "units_power_series",
            Atom::UnitsLocalRing(_) => "units_local_ring",
        }
    }

    fn label(&self) -> Option<&str> {
        match self {
            Atom::UnitsField => None,
            Atom::OneUnits(l) | Atom::UnitsPowerSeries(l) | Atom::UnitsLocalRing(l) => Some(l),
        }
    }
}

/// One-variable power-series labels are equal up to renaming the variable;
/// normalize `k[[t]]`, `k[[X]]`, ... to `k[[X]]`. Multi-generator labels
/// are kept verbatim.
pub fn normalize_label(label: &str) -> String {
    let compact: String = label.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(inner) = compact.strip_prefix("k[[").and_then(|s| s.strip_suffix("]]")) {
        if !inner.is_empty() && inner.chars().all(|c| c.is_ascii_alphabetic()) {
            return "k[[X]]".to_string();
        }
    }
    compact
}

#[derive(Serialize, Deserialize)]
struct AtomRepr {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        AtomRepr {
            kind: self.kind_name().to_string(),
            label: self.label().map(str::to_string),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Atom {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = AtomRepr::deserialize(deserializer)?;
        let need_label = |label: Option<String>| {
            label.ok_or_else(|| D::Error::custom("labeled atom kind without label"))
        };
        match repr.kind.as_str() {
            "units_field" => Ok(Atom::UnitsField),
            "one_units" => Ok(Atom::OneUnits(need_label(repr.label)?)),
            "units_power_series" => Ok(Atom::UnitsPowerSeries(need_label(repr.label)?)),
            "units_local_ring" => Ok(Atom::UnitsLocalRing(need_label(repr.label)?)),
            other => Err(D::Error::custom(format!("unknown atom kind {other:?}"))),
        }
    }
}

/// Formal direct sum `Z^free_rank + sum Z/torsion_i + sum atoms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredAbelianGroup {
    pub free_rank: usize,
    #[serde(
        serialize_with = "serialize_torsion",
        deserialize_with = "deserialize_torsion"
    )]
    pub torsion: Vec<BigUint>,
    pub atoms: Vec<Atom>,
}

fn serialize_torsion<S: Serializer>(t: &[BigUint], serializer: S) -> Result<S::Ok, S::Error> {
    let strings: Vec<String> = t.iter().map(BigUint::to_string).collect();
    strings.serialize(serializer)
}

fn deserialize_torsion<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
    let strings = Vec::<String>::deserialize(d)?;
    strings
        .iter()
        .map(|s| {
            s.parse::<BigUint>()
                .map_err(|_| D::Error::custom(format!("bad torsion literal {s:?}")))
        })
        .collect()
}

impl StructuredAbelianGroup {
    pub fn trivial() -> Self {
        StructuredAbelianGroup { free_rank: 0, torsion: vec![], atoms: vec![] }
    }

    pub fn free(rank: usize) -> Self {
        StructuredAbelianGroup { free_rank: rank, torsion: vec![], atoms: vec![] }
    }

    pub fn units_field_power(count: usize) -> Self {
        StructuredAbelianGroup {
            free_rank: 0,
            torsion: vec![],
            atoms: vec![Atom::UnitsField; count],
        }
    }

    pub fn from_atoms(atoms: Vec<Atom>) -> Self {
        StructuredAbelianGroup { free_rank: 0, torsion: vec![], atoms }
    }

    pub fn with_torsion(free_rank: usize, torsion: Vec<BigUint>) -> Self {
        StructuredAbelianGroup { free_rank, torsion, atoms: vec![] }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty() && self.atoms.is_empty()
    }

    pub fn count_units_field(&self) -> usize {
        self.atoms.iter().filter(|a| **a == Atom::UnitsField).count()
    }
}

/// Canonical form: expand `UnitsPowerSeries` and `UnitsLocalRing` into
/// `UnitsField + OneUnits`, normalize labels, sort atoms by (kind, label),
/// and re-chain torsion. Idempotent.
pub fn canonicalize(g: &StructuredAbelianGroup) -> StructuredAbelianGroup {
    let mut atoms = Vec::with_capacity(g.atoms.len());
    for atom in &g.atoms {
        match atom {
            Atom::UnitsField => atoms.push(Atom::UnitsField),
            Atom::OneUnits(l) => atoms.push(Atom::OneUnits(normalize_label(l))),
            Atom::UnitsPowerSeries(l) | Atom::UnitsLocalRing(l) => {
                atoms.push(Atom::UnitsField);
                atoms.push(Atom::OneUnits(normalize_label(l)));
            }
        }
    }
    atoms.sort();
    StructuredAbelianGroup {
        free_rank: g.free_rank,
        torsion: normalize_torsion(&g.torsion),
        atoms,
    }
}

/// Rewrite a torsion list into the divisibility chain `d_i | d_{i+1}`,
/// dropping trivial factors. The underlying group is unchanged because
/// `Z/a + Z/b = Z/gcd(a,b) + Z/lcm(a,b)`.
fn normalize_torsion(torsion: &[BigUint]) -> Vec<BigUint> {
    let mut t: Vec<BigUint> = torsion.iter().filter(|d| !d.is_one()).cloned().collect();
    let len = t.len();
    loop {
        let mut changed = false;
        for i in 0..len {
            for j in i + 1..len {
                let g = t[i].gcd(&t[j]);
                if g != t[i] {
                    let l = &t[i] * &t[j] / &g;
                    t[i] = g;
                    t[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    t.retain(|d| !d.is_one());
    t.sort();
    t
}

/// Componentwise concatenation followed by canonicalization.
pub fn direct_sum(a: &StructuredAbelianGroup, b: &StructuredAbelianGroup) -> StructuredAbelianGroup {
    let mut torsion = a.torsion.clone();
    torsion.extend(b.torsion.iter().cloned());
    let mut atoms = a.atoms.clone();
    atoms.extend(b.atoms.iter().cloned());
    canonicalize(&StructuredAbelianGroup {
        free_rank: a.free_rank + b.free_rank,
        torsion,
        atoms,
    })
}

/// Equality of canonical forms.
pub fn equals(a: &StructuredAbelianGroup, b: &StructuredAbelianGroup) -> bool {
    canonicalize(a) == canonicalize(b)
}

/// Sublattice of `Z^ambient_rank` acting on the torus `(k*)^ambient_rank`
/// by exponents; one generator per column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentLattice {
    pub ambient_rank: usize,
    pub generators: IntegerMatrix,
}

impl ExponentLattice {
    pub fn new(ambient_rank: usize, generators: IntegerMatrix) -> Self {
        assert_eq!(
            generators.rows(),
            ambient_rank,
            "generator rows must match ambient rank"
        );
        ExponentLattice { ambient_rank, generators }
    }

    pub fn trivial(ambient_rank: usize) -> Self {
        ExponentLattice {
            ambient_rank,
            generators: IntegerMatrix::zero(ambient_rank, 0),
        }
    }
}

/// Quotient of `(k*)^ambient` by the subgroup its exponent lattice spans.
///
/// Over an algebraically closed field every map `a -> a^d` is surjective on
/// `k*`, so each nonzero invariant factor of the generator matrix kills one
/// torus factor outright and the quotient is `(k*)^(ambient - rank)`. The
/// computation still routes through Smith normal form so a future
/// non-closed mode can read torsion off the same diagonal.
pub fn quotient_torus_by_lattice(lattice: &ExponentLattice) -> StructuredAbelianGroup {
    let snf = smith_normal_form(&lattice.generators);
    let surviving = lattice.ambient_rank - snf.rank();
    StructuredAbelianGroup::units_field_power(surviving)
}

impl fmt::Display for StructuredAbelianGroup {
    /// Diff-friendly rendering, e.g. `Z^2 + Z/2 + (k*)^3 + (1+m[k[[X]]])`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = canonicalize(self);
        let mut parts: Vec<String> = Vec::new();
        match g.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &g.torsion {
            parts.push(format!("Z/{d}"));
        }
        let mut run: Option<(String, usize)> = None;
        let flush = |run: &mut Option<(String, usize)>, parts: &mut Vec<String>| {
            if let Some((text, count)) = run.take() {
                if count > 1 {
                    parts.push(format!("({text})^{count}"));
                } else if text.contains('+') {
                    parts.push(format!("({text})"));
                } else {
                    parts.push(text);
                }
            }
        };
        for atom in &g.atoms {
            let text = match atom {
                Atom::UnitsField => "k*".to_string(),
                Atom::OneUnits(l) => format!("1+m[{l}]"),
                Atom::UnitsPowerSeries(l) => format!("{l}*"),
                Atom::UnitsLocalRing(l) => format!("{l}*"),
            };
            match &mut run {
                Some((t, count)) if *t == text => *count += 1,
                _ => {
                    flush(&mut run, &mut parts);
                    run = Some((text, 1));
                }
            }
        }
        flush(&mut run, &mut parts);
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::znf::IntegerMatrix;

    fn units_power_series(label: &str) -> StructuredAbelianGroup {
        StructuredAbelianGroup::from_atoms(vec![Atom::UnitsPowerSeries(label.to_string())])
    }

    #[test]
    fn power_series_units_expand() {
        // k[[t]]* = k* + (1 + t k[[t]])
        let canonical = canonicalize(&units_power_series("k[[t]]"));
        assert_eq!(
            canonical.atoms,
            vec![Atom::UnitsField, Atom::OneUnits("k[[X]]".to_string())]
        );
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let g = StructuredAbelianGroup {
            free_rank: 2,
            torsion: vec![BigUint::from(4u32), BigUint::from(2u32)],
            atoms: vec![
                Atom::UnitsLocalRing("R".to_string()),
                Atom::UnitsField,
                Atom::UnitsPowerSeries("k[[t]]".to_string()),
            ],
        };
        let once = canonicalize(&g);
        assert_eq!(once, canonicalize(&once));
    }

    #[test]
    fn already_canonical_input_is_unchanged() {
        let g = StructuredAbelianGroup {
            free_rank: 1,
            torsion: vec![BigUint::from(2u32), BigUint::from(4u32)],
            atoms: vec![Atom::UnitsField, Atom::OneUnits("k[[X]]".to_string())],
        };
        assert_eq!(canonicalize(&g), g);
    }

    #[test]
    fn torsion_renormalizes_to_divisibility_chain() {
        let g = StructuredAbelianGroup::with_torsion(
            0,
            vec![BigUint::from(4u32), BigUint::from(2u32)],
        );
        assert_eq!(
            canonicalize(&g).torsion,
            vec![BigUint::from(2u32), BigUint::from(4u32)]
        );
        // Z/6 + Z/4 = Z/2 + Z/12
        let h = StructuredAbelianGroup::with_torsion(
            0,
            vec![BigUint::from(6u32), BigUint::from(4u32)],
        );
        assert_eq!(
            canonicalize(&h).torsion,
            vec![BigUint::from(2u32), BigUint::from(12u32)]
        );
    }

    #[test]
    fn direct_sum_with_trivial() {
        let g = canonicalize(&StructuredAbelianGroup {
            free_rank: 1,
            torsion: vec![BigUint::from(2u32)],
            atoms: vec![Atom::UnitsField],
        });
        assert_eq!(direct_sum(&g, &StructuredAbelianGroup::trivial()), g);
    }

    #[test]
    fn direct_sum_counts_atoms() {
        let z = StructuredAbelianGroup::free(1);
        let k = StructuredAbelianGroup::units_field_power(1);
        let sum = direct_sum(&direct_sum(&z, &k), &k);
        assert_eq!(sum.free_rank, 1);
        assert_eq!(sum.count_units_field(), 2);
    }

    #[test]
    fn direct_sum_of_power_series_units() {
        // Z^(n-1) + (k[[X]]*)^n canonically has n UnitsField and n OneUnits.
        let n = 3;
        let mut g = StructuredAbelianGroup::free(n - 1);
        for _ in 0..n {
            g = direct_sum(&g, &units_power_series("k[[X]]"));
        }
        assert_eq!(g.free_rank, n - 1);
        assert_eq!(g.count_units_field(), n);
        assert_eq!(
            g.atoms.iter().filter(|a| matches!(a, Atom::OneUnits(_))).count(),
            n
        );
    }

    #[test]
    fn equals_identifies_unit_group_presentations() {
        // k* + (1+m_R) = R*
        let lhs = StructuredAbelianGroup::from_atoms(vec![
            Atom::UnitsField,
            Atom::OneUnits("R".to_string()),
        ]);
        let rhs = StructuredAbelianGroup::from_atoms(vec![Atom::UnitsLocalRing("R".to_string())]);
        assert!(equals(&lhs, &rhs));
    }

    #[test]
    fn equals_distinguishes_groups() {
        let z2 = StructuredAbelianGroup::with_torsion(0, vec![BigUint::from(2u32)]);
        let z = StructuredAbelianGroup::free(1);
        assert!(!equals(&z2, &z));

        let k1 = StructuredAbelianGroup::units_field_power(1);
        let k2 = StructuredAbelianGroup::units_field_power(2);
        assert!(!equals(&k1, &k2));
    }

    #[test]
    fn variable_renaming_is_free() {
        assert!(equals(
            &units_power_series("k[[t]]"),
            &units_power_series("k[[X]]")
        ));
        // Multi-generator labels stay distinct.
        assert!(!equals(
            &units_power_series("k[[s^2,st,t^2]]"),
            &units_power_series("k[[X]]")
        ));
    }

    #[test]
    fn torus_quotient_by_ar_columns() {
        // Truncated polynomial n = 3: T's columns span a rank-2 lattice in
        // Z^3, leaving a single k*.
        let generators =
            IntegerMatrix::from_rows(&[vec![-1, 0], vec![2, -1], vec![-1, 2]]);
        let lattice = ExponentLattice::new(3, generators);
        let q = quotient_torus_by_lattice(&lattice);
        assert!(equals(&q, &StructuredAbelianGroup::units_field_power(1)));
    }

    #[test]
    fn torus_quotient_no_generators() {
        let lattice = ExponentLattice::trivial(4);
        let q = quotient_torus_by_lattice(&lattice);
        assert_eq!(q.count_units_field(), 4);
    }

    #[test]
    fn torus_quotient_single_generator() {
        let lattice = ExponentLattice::new(2, IntegerMatrix::from_rows(&[vec![1], vec![1]]));
        let q = quotient_torus_by_lattice(&lattice);
        assert_eq!(q.count_units_field(), 1);
    }

    #[test]
    fn torus_quotient_nonprimitive_generator_still_collapses() {
        // (-2, 2): invariant factor 2, but k*^2 = k* over a closed field.
        let lattice = ExponentLattice::new(2, IntegerMatrix::from_rows(&[vec![-2], vec![2]]));
        let q = quotient_torus_by_lattice(&lattice);
        assert_eq!(q.count_units_field(), 1);
        assert!(q.torsion.is_empty());
    }

    #[test]
    fn display_rendering() {
        let g = StructuredAbelianGroup {
            free_rank: 2,
            torsion: vec![BigUint::from(2u32)],
            atoms: vec![
                Atom::UnitsField,
                Atom::UnitsField,
                Atom::UnitsField,
                Atom::OneUnits("k[[t]]".to_string()),
            ],
        };
        assert_eq!(g.to_string(), "Z^2 + Z/2 + (k*)^3 + (1+m[k[[X]]])");
        assert_eq!(StructuredAbelianGroup::trivial().to_string(), "0");
        assert_eq!(StructuredAbelianGroup::free(1).to_string(), "Z");
    }

    #[test]
    fn json_shape() {
        let g = StructuredAbelianGroup {
            free_rank: 1,
            torsion: vec![BigUint::from(2u32)],
            atoms: vec![Atom::UnitsField, Atom::OneUnits("k[[X]]".to_string())],
        };
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            r#"{"free_rank":1,"torsion":["2"],"atoms":[{"kind":"units_field"},{"kind":"one_units","label":"k[[X]]"}]}"#
        );
        let back: StructuredAbelianGroup = serde_json::from_str(&json).unwrap();
        assert_eq!(g, back);
    }
}
