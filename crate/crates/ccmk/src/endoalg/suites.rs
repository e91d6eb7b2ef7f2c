//! Named verification suites behind the `verify` command. Every suite is
//! deterministic for a fixed seed and returns one verdict entry per
//! aggregated check, with a counterexample payload on the first failure.

use super::field::Field;
use super::matrix::{expand_multiplicities, tilde, EndoMatrix};
use super::module::{hom_membership, ModuleDescriptor};
use super::oracle::is_unit_linear_oracle;
use super::series::TruncatedSeries;
use super::verify::{verify_factorization, FactorizationCase, Verdict};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Endoring,
    Factorizations,
    Tilde,
    Phi,
    All,
}

impl SuiteKind {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "endoring" => Some(SuiteKind::Endoring),
            "factorizations" => Some(SuiteKind::Factorizations),
            "tilde" => Some(SuiteKind::Tilde),
            "phi" => Some(SuiteKind::Phi),
            "all" => Some(SuiteKind::All),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub precision: u64,
    pub seed: u64,
    /// Largest truncated-polynomial `n` in the factorization suite.
    pub truncated_n_max: u32,
    /// Random unit-criterion samples per family size.
    pub unit_samples: usize,
    /// Sampled radical elements per family size, each hit with
    /// `radical_betas` random partners.
    pub radical_alphas: usize,
    pub radical_betas: usize,
    /// Random cases for the tilde and phi suites.
    pub random_cases: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            precision: 50,
            seed: 0,
            truncated_n_max: 5,
            unit_samples: 200,
            radical_alphas: 8,
            radical_betas: 50,
            random_cases: 100,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictEntry {
    pub case: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

impl VerdictEntry {
    fn holds(case: impl Into<String>) -> Self {
        VerdictEntry { case: case.into(), verdict: "holds".to_string(), counterexample: None }
    }

    fn fails(case: impl Into<String>, counterexample: serde_json::Value) -> Self {
        VerdictEntry {
            case: case.into(),
            verdict: "fails".to_string(),
            counterexample: Some(counterexample),
        }
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == "holds"
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub entries: Vec<VerdictEntry>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(VerdictEntry::is_holds)
    }
}

pub fn run_suite<F: Field>(field: &F, kind: SuiteKind, config: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::default();
    match kind {
        SuiteKind::Endoring => endoring_suite(field, config, &mut report),
        SuiteKind::Factorizations => factorization_suite(field, config, &mut report),
        SuiteKind::Tilde => tilde_suite(field, config, &mut report),
        SuiteKind::Phi => phi_suite(field, config, &mut report),
        SuiteKind::All => {
            endoring_suite(field, config, &mut report);
            factorization_suite(field, config, &mut report);
            tilde_suite(field, config, &mut report);
            phi_suite(field, config, &mut report);
        }
    }
    report
}

// ---- random generation -------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
enum DiagonalMode {
    Unit,
    Radical,
    Random,
}

fn random_coeff<F: Field>(field: &F, rng: &mut StdRng, nonzero: bool) -> F::Elem {
    loop {
        let c = field.from_i64(rng.random_range(-3..=3));
        if !nonzero || !field.is_zero(&c) {
            return c;
        }
    }
}

/// Monomial exponents admissible for a hom between two summands, capped
/// to keep random matrices small.
fn admissible_exponents<F: Field>(
    field: &F,
    source: &ModuleDescriptor,
    target: &ModuleDescriptor,
    cap: u64,
) -> Vec<u64> {
    (0..cap)
        .filter(|&e| {
            let probe =
                TruncatedSeries::monomial(field.clone(), e, field.one(), source.precision);
            hom_membership(&probe, source, target).unwrap_or(false)
        })
        .collect()
}

fn random_endo<F: Field>(
    field: &F,
    rng: &mut StdRng,
    summands: &[ModuleDescriptor],
    mode: DiagonalMode,
) -> EndoMatrix<F> {
    let s = summands.len();
    let cap = summands.iter().map(|m| m.precision).min().unwrap_or(8).min(10);
    let mut out = EndoMatrix::identity(field.clone(), summands);
    for i in 0..s {
        for j in 0..s {
            let exps = admissible_exponents(field, &summands[j], &summands[i], cap);
            let mut series = TruncatedSeries::zero(field.clone(), summands[j].precision);
            for &e in &exps {
                if i == j && e == 0 {
                    continue;
                }
                if rng.random_bool(0.5) {
                    series.add_term(e, random_coeff(field, rng, true));
                }
            }
            if i == j {
                let include_constant = match mode {
                    DiagonalMode::Unit => true,
                    DiagonalMode::Radical => false,
                    DiagonalMode::Random => rng.random_bool(0.5),
                };
                if include_constant {
                    series.add_term(0, random_coeff(field, rng, true));
                }
            }
            out.set_multiplier(i, j, series).expect("admissible support");
        }
    }
    out
}

// ---- endoring ----------------------------------------------------------

/// Unit criterion against the linear-system oracle, and the radical
/// membership behavior `alpha in J => 1 - beta alpha a unit`.
fn endoring_suite<F: Field>(field: &F, config: &SuiteConfig, report: &mut SuiteReport) {
    let mut rng = StdRng::seed_from_u64(config.seed ^ 0x656e_646f);
    for n in 2..=5u32 {
        let summands = ModuleDescriptor::truncated_family(n);
        let case = format!("endoring-unit-oracle(n={n}, samples={})", config.unit_samples);
        let mut failure = None;
        for sample in 0..config.unit_samples {
            let mode = match sample % 3 {
                0 => DiagonalMode::Unit,
                1 => DiagonalMode::Radical,
                _ => DiagonalMode::Random,
            };
            let m = random_endo(field, &mut rng, &summands, mode);
            let criterion = m.is_unit();
            let oracle = is_unit_linear_oracle(&m);
            if criterion != oracle {
                failure = Some(json!({
                    "sample": sample,
                    "criterion": criterion,
                    "oracle": oracle,
                }));
                break;
            }
        }
        report.entries.push(match failure {
            None => VerdictEntry::holds(case),
            Some(ce) => VerdictEntry::fails(case, ce),
        });

        let case = format!(
            "endoring-radical(n={n}, alphas={}, betas={})",
            config.radical_alphas, config.radical_betas
        );
        let mut failure = None;
        'outer: for alpha_idx in 0..config.radical_alphas {
            let alpha = random_endo(field, &mut rng, &summands, DiagonalMode::Radical);
            if !alpha.in_radical() {
                failure = Some(json!({ "alpha": alpha_idx, "reason": "not in radical" }));
                break;
            }
            let identity = EndoMatrix::identity(field.clone(), &summands);
            for beta_idx in 0..config.radical_betas {
                let beta = random_endo(field, &mut rng, &summands, DiagonalMode::Random);
                let one_minus = identity.sub(&beta.mul(&alpha).expect("same summands")).unwrap();
                if !one_minus.is_unit() {
                    failure = Some(json!({
                        "alpha": alpha_idx,
                        "beta": beta_idx,
                        "reason": "1 - beta*alpha is not a unit",
                    }));
                    break 'outer;
                }
            }
        }
        report.entries.push(match failure {
            None => VerdictEntry::holds(case),
            Some(ce) => VerdictEntry::fails(case, ce),
        });
    }
}

// ---- factorizations ----------------------------------------------------

fn factorization_suite<F: Field>(field: &F, config: &SuiteConfig, report: &mut SuiteReport) {
    // Truncated cases: every i, with the unit drawn from a fixed set.
    for n in 2..=config.truncated_n_max {
        let precision = u64::from(n);
        let units = [
            TruncatedSeries::from_terms(field.clone(), precision, &[(0, 1), (1, 1)]),
            TruncatedSeries::from_terms(field.clone(), precision, &[(0, 1), (1, -1)]),
            TruncatedSeries::from_terms(field.clone(), precision, &[(0, 1), (2, 2)]),
        ];
        for i in 1..n {
            for r in &units {
                let case = FactorizationCase::Truncated { n, i, r: r.clone() };
                push_factorization(field, case, report);
            }
        }
    }

    // Curve cases: all index pairs i <= j <= n; the delta display is
    // checked for every pair and the gamma display whenever j > i.
    for n in 1..=3u32.min(config.truncated_n_max) {
        let needed = 4 * u64::from(n) + 2;
        let precision = config.precision.max(needed);
        if precision > config.precision {
            report.notes.push(format!(
                "precision raised to {precision} for a2n(n={n}) membership decisions"
            ));
        }
        let units = [
            TruncatedSeries::from_terms(field.clone(), precision, &[(0, 1), (2, 1)]),
            TruncatedSeries::from_terms(field.clone(), precision, &[(0, 1), (2, 1), (4, 1)]),
        ];
        for i in 1..=n {
            for j in i..=n {
                for f in &units {
                    let case = FactorizationCase::A2n { n, i, j, f: f.clone() };
                    push_factorization(field, case, report);
                }
            }
        }
    }
}

fn push_factorization<F: Field>(
    field: &F,
    case: FactorizationCase<F>,
    report: &mut SuiteReport,
) {
    let label = case.label();
    match verify_factorization(field, &case) {
        Ok(Verdict::Holds) => report.entries.push(VerdictEntry::holds(label)),
        Ok(Verdict::Fails(ce)) => {
            let payload = serde_json::to_value(&ce).expect("counterexample serializes");
            report.entries.push(VerdictEntry::fails(label, payload));
        }
        Err(err) => {
            report
                .entries
                .push(VerdictEntry::fails(label, json!({ "error": err.to_string() })));
        }
    }
}

// ---- tilde ---------------------------------------------------------------

fn tilde_suite<F: Field>(field: &F, config: &SuiteConfig, report: &mut SuiteReport) {
    let mut rng = StdRng::seed_from_u64(config.seed ^ 0x7469_6c64);

    let case = format!("tilde-multiplicativity(cases={})", config.random_cases);
    let mut failure = None;
    for idx in 0..config.random_cases {
        let n = 2 + (idx % 3) as u32; // universes of 2, 3, 4 summands
        let universe = ModuleDescriptor::truncated_family(n);
        let mut multiplicities: Vec<u32> =
            (0..universe.len()).map(|_| rng.random_range(0..=3)).collect();
        if multiplicities.iter().all(|&l| l == 0) {
            multiplicities[0] = 1;
        }
        let expanded = expand_multiplicities(&universe, &multiplicities);
        let a = random_endo(field, &mut rng, &expanded, DiagonalMode::Unit);
        let b = random_endo(field, &mut rng, &expanded, DiagonalMode::Unit);

        let of_product = tilde(field, &universe, &multiplicities, &a.mul(&b).unwrap()).unwrap();
        let product_of = tilde(field, &universe, &multiplicities, &a)
            .unwrap()
            .mul(&tilde(field, &universe, &multiplicities, &b).unwrap())
            .unwrap();
        let identity_ok = {
            let id = EndoMatrix::identity(field.clone(), &expanded);
            let lifted = tilde(field, &universe, &multiplicities, &id).unwrap();
            lifted.equal_as_maps(&EndoMatrix::identity(field.clone(), lifted.summands()))
        };
        if !of_product.equal_as_maps(&product_of) || !identity_ok {
            failure = Some(json!({
                "case": idx,
                "multiplicities": multiplicities,
                "identity_preserved": identity_ok,
            }));
            break;
        }
    }
    report.entries.push(match failure {
        None => VerdictEntry::holds(case),
        Some(ce) => VerdictEntry::fails(case, ce),
    });

    let case = format!("tilde-diagonal-scalar(cases={})", config.random_cases);
    let mut failure = None;
    for idx in 0..config.random_cases {
        let n = 2 + (idx % 3) as u32;
        let universe = ModuleDescriptor::truncated_family(n);
        // Involved summands with one uniform multiplicity, per the
        // diagonal description of the scalar case.
        let p = rng.random_range(1..=3u32);
        let mut involved: Vec<bool> = (0..universe.len()).map(|_| rng.random_bool(0.5)).collect();
        if involved.iter().all(|&b| !b) {
            involved[0] = true;
        }
        let multiplicities: Vec<u32> =
            involved.iter().map(|&b| if b { p } else { 0 }).collect();
        let expanded = expand_multiplicities(&universe, &multiplicities);
        let a = random_coeff(field, &mut rng, true);
        let mut alpha = EndoMatrix::identity(field.clone(), &expanded);
        for (d, module) in expanded.iter().enumerate() {
            alpha
                .set_multiplier(
                    d,
                    d,
                    TruncatedSeries::monomial(field.clone(), 0, a.clone(), module.precision),
                )
                .unwrap();
        }
        let lifted = tilde(field, &universe, &multiplicities, &alpha).unwrap();

        // Expected: e 1_{L^q} with e = diag(a at involved summands).
        let big: Vec<ModuleDescriptor> =
            (0..p as usize).flat_map(|_| universe.iter().copied()).collect();
        let mut expected = EndoMatrix::identity(field.clone(), &big);
        for c in 0..p as usize {
            for (j, &inv) in involved.iter().enumerate() {
                if inv {
                    let pos = c * universe.len() + j;
                    expected
                        .set_multiplier(
                            pos,
                            pos,
                            TruncatedSeries::monomial(
                                field.clone(),
                                0,
                                a.clone(),
                                universe[j].precision,
                            ),
                        )
                        .unwrap();
                }
            }
        }
        if !lifted.is_diagonal() || !lifted.equal_as_maps(&expected) {
            failure = Some(json!({
                "case": idx,
                "multiplicities": multiplicities,
                "diagonal": lifted.is_diagonal(),
            }));
            break;
        }
    }
    report.entries.push(match failure {
        None => VerdictEntry::holds(case),
        Some(ce) => VerdictEntry::fails(case, ce),
    });
}

// ---- phi -----------------------------------------------------------------

fn phi_suite<F: Field>(field: &F, config: &SuiteConfig, report: &mut SuiteReport) {
    let mut rng = StdRng::seed_from_u64(config.seed ^ 0x7068_6900);

    let case = format!("phi-det-multiplicativity(cases={})", config.random_cases);
    let mut failure = None;
    for idx in 0..config.random_cases {
        let n = 2 + (idx % 2) as u32; // curves with 3 and 4 summands
        let needed = 4 * u64::from(n) + 2;
        let precision = config.precision.max(needed);
        let summands = ModuleDescriptor::a2n_family(n, precision);
        let a = random_endo(field, &mut rng, &summands, DiagonalMode::Unit);
        let b = random_endo(field, &mut rng, &summands, DiagonalMode::Unit);
        let ab = a.mul(&b).unwrap();

        let det_a = a.det_evaluation().unwrap();
        let det_b = b.det_evaluation().unwrap();
        let det_ab = ab.det_evaluation().unwrap();
        if !det_ab.equal_to_precision(&det_a.mul(&det_b)) {
            failure = Some(json!({ "case": idx, "check": "det multiplicativity" }));
            break;
        }
        // A unit matrix must evaluate to a unit series.
        if field.is_zero(&det_a.constant_term()) || field.is_zero(&det_b.constant_term()) {
            failure = Some(json!({ "case": idx, "check": "det of unit has unit constant" }));
            break;
        }

        let (res_a, _) = a.phi_map().unwrap();
        let (res_b, _) = b.phi_map().unwrap();
        let (res_ab, det_phi_ab) = ab.phi_map().unwrap();
        let componentwise: Vec<F::Elem> = res_a
            .iter()
            .zip(&res_b)
            .map(|(x, y)| field.mul(x, y))
            .collect();
        if res_ab != componentwise || !det_phi_ab.equal_to_precision(&det_ab) {
            failure = Some(json!({ "case": idx, "check": "phi multiplicativity" }));
            break;
        }
    }
    report.entries.push(match failure {
        None => VerdictEntry::holds(case),
        Some(ce) => VerdictEntry::fails(case, ce),
    });
}
