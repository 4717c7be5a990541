//! Stabilizer codes: the [[6k,2k,2]] family, the Gottesman [[2k+2,2k,2]]
//! baseline, and the checks that certify them.
//!
//! Qubits of the 6k code are grouped in triples, one per logical qubit. The
//! triple for logical qubit `i` (1-based) occupies flat indices
//! `3(i-1) + {0, 1, 2}` for the roles `x`, `0` and `z` respectively.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::gf2::{BitVec, Gf2Basis};
use crate::pauli::PauliString;

/// Environment variable overriding [`DEFAULT_ENUMERATION_BUDGET`].
pub const BUDGET_ENV_VAR: &str = "AQC_ENUM_BUDGET";

/// Upper bound on the number of Pauli operators a brute-force search may visit per weight.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 50_000_000;

/// Exhaustive coset scans are used up to this many independent generators.
pub const COSET_SCAN_MAX_GENERATORS: usize = 20;

pub fn enumeration_budget_from_env() -> Result<u64> {
    match std::env::var(BUDGET_ENV_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("{BUDGET_ENV_VAR}='{v}' is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_BUDGET),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "z")]
    Z,
}

impl Role {
    pub const ALL: [Role; 3] = [Role::X, Role::Zero, Role::Z];

    pub fn offset(self) -> usize {
        match self {
            Role::X => 0,
            Role::Zero => 1,
            Role::Z => 2,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::X => "x",
            Role::Zero => "0",
            Role::Z => "z",
        })
    }
}

/// Ordered-pair label `(logical, role)` of a physical qubit in the 6k code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QubitLabel {
    pub logical: usize,
    pub role: Role,
}

impl QubitLabel {
    pub fn new(logical: usize, role: Role) -> Self {
        assert!(logical >= 1, "logical indices are 1-based");
        Self { logical, role }
    }

    pub fn flat_index(self) -> usize {
        3 * (self.logical - 1) + self.role.offset()
    }

    pub fn from_flat_index(index: usize) -> Self {
        Self {
            logical: index / 3 + 1,
            role: Role::ALL[index % 3],
        }
    }
}

impl fmt::Display for QubitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.logical, self.role)
    }
}

/// Flat index of qubit `(logical, role)`.
pub fn qubit(logical: usize, role: Role) -> usize {
    QubitLabel::new(logical, role).flat_index()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCode {
    pub n: usize,
    /// Number of logical qubits.
    pub k: usize,
    pub css: bool,
    pub generators: Vec<PauliString>,
    pub logical_x: Vec<PauliString>,
    pub logical_z: Vec<PauliString>,
    pub labels: Vec<QubitLabel>,
}

#[derive(Serialize, Deserialize)]
struct CodeFile {
    n: usize,
    k: usize,
    css: bool,
    generators: Vec<String>,
    logical_x: Vec<String>,
    logical_z: Vec<String>,
    #[serde(default)]
    labels: Vec<QubitLabel>,
}

impl StabilizerCode {
    /// Assembles a code after checking that every operator acts on `n` qubits.
    /// Code-theoretic properties are left to [`verify_code`].
    pub fn new(
        n: usize,
        k: usize,
        css: bool,
        generators: Vec<PauliString>,
        logical_x: Vec<PauliString>,
        logical_z: Vec<PauliString>,
        labels: Vec<QubitLabel>,
    ) -> Result<Self> {
        for p in generators.iter().chain(&logical_x).chain(&logical_z) {
            check_dim(n, p.num_qubits())?;
        }
        if !labels.is_empty() && labels.len() != n {
            return Err(Error::Parameter(format!(
                "{} labels given for {n} qubits",
                labels.len()
            )));
        }
        Ok(Self {
            n,
            k,
            css,
            generators,
            logical_x,
            logical_z,
            labels,
        })
    }

    /// GF(2) basis of the generator span in `x ‖ z` coordinates.
    pub fn stabilizer_basis(&self) -> Gf2Basis {
        let rows: Vec<BitVec> = self
            .generators
            .iter()
            .map(PauliString::symplectic_vector)
            .collect();
        Gf2Basis::from_rows(2 * self.n, &rows)
    }

    /// Membership in the stabilizer group, ignoring signs.
    pub fn in_stabilizer_group(&self, p: &PauliString) -> Result<bool> {
        check_dim(self.n, p.num_qubits())?;
        Ok(self.stabilizer_basis().contains(&p.symplectic_vector()))
    }

    /// Indices of generators whose product equals `p` up to sign, if any.
    pub fn stabilizer_decomposition(&self, p: &PauliString) -> Result<Option<Vec<usize>>> {
        check_dim(self.n, p.num_qubits())?;
        Ok(self.stabilizer_basis().solve(&p.symplectic_vector()))
    }

    /// Generators forming a basis of the stabilizer group (first-come order).
    pub fn independent_generators(&self) -> Vec<&PauliString> {
        let mut basis = Gf2Basis::new(2 * self.n, self.generators.len());
        self.generators
            .iter()
            .filter(|g| basis.insert(&g.symplectic_vector()))
            .collect()
    }

    pub fn label(&self, flat: usize) -> Option<QubitLabel> {
        self.labels.get(flat).copied()
    }

    pub fn to_json_string(&self) -> Result<String> {
        let file = CodeFile {
            n: self.n,
            k: self.k,
            css: self.css,
            generators: self.generators.iter().map(ToString::to_string).collect(),
            logical_x: self.logical_x.iter().map(ToString::to_string).collect(),
            logical_z: self.logical_z.iter().map(ToString::to_string).collect(),
            labels: self.labels.clone(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: CodeFile = serde_json::from_str(text)?;
        let parse_all = |v: &[String]| -> Result<Vec<PauliString>> {
            v.iter()
                .map(|s| PauliString::parse_with_len(s, file.n))
                .collect()
        };
        Self::new(
            file.n,
            file.k,
            file.css,
            parse_all(&file.generators)?,
            parse_all(&file.logical_x)?,
            parse_all(&file.logical_z)?,
            file.labels,
        )
    }
}

/// The [[6k,2k,2]] code: `2k` logical qubits on `6k` physical qubits, `4k` generators.
pub fn build_6k2k2(k: usize) -> Result<StabilizerCode> {
    if k < 1 {
        return Err(Error::Parameter(format!("k must be at least 1, got {k}")));
    }
    let m = 2 * k;
    let n = 6 * k;
    let q = qubit;
    let mut generators = Vec::with_capacity(2 * m);
    for i in 1..m {
        generators.push(PauliString::x_on(n, &[q(i, Role::X), q(i + 1, Role::X)]));
    }
    let big_x: Vec<usize> = (1..=m)
        .flat_map(|i| [q(i, Role::Zero), q(i, Role::Z)])
        .collect();
    generators.push(PauliString::x_on(n, &big_x));
    for i in 1..m {
        generators.push(PauliString::z_on(n, &[q(i, Role::Z), q(i + 1, Role::Z)]));
    }
    let big_z: Vec<usize> = (1..=m)
        .flat_map(|i| [q(i, Role::X), q(i, Role::Zero)])
        .collect();
    generators.push(PauliString::z_on(n, &big_z));

    let logical_x = (1..=m)
        .map(|i| PauliString::x_on(n, &[q(i, Role::X), q(i, Role::Zero)]))
        .collect();
    let logical_z = (1..=m)
        .map(|i| PauliString::z_on(n, &[q(i, Role::Zero), q(i, Role::Z)]))
        .collect();
    let labels = (0..n).map(QubitLabel::from_flat_index).collect();
    StabilizerCode::new(n, m, true, generators, logical_x, logical_z, labels)
}

/// Gottesman's [[2k+2,2k,2]] code with generators `X^⊗n`, `Z^⊗n`.
///
/// Logical qubit `i` has `X̄ᵢ = X₁X_{i+1}` and `Z̄ᵢ = Z_{i+1}Z_{2k+2}` (1-based qubits),
/// so the first and last physical qubits are hubs touching every logical operator.
pub fn build_gottesman(k: usize) -> Result<StabilizerCode> {
    if k < 1 {
        return Err(Error::Parameter(format!("k must be at least 1, got {k}")));
    }
    let n = 2 * k + 2;
    let all: Vec<usize> = (0..n).collect();
    let generators = vec![PauliString::x_on(n, &all), PauliString::z_on(n, &all)];
    let logical_x = (1..=2 * k).map(|i| PauliString::x_on(n, &[0, i])).collect();
    let logical_z = (1..=2 * k).map(|i| PauliString::z_on(n, &[i, n - 1])).collect();
    StabilizerCode::new(n, 2 * k, true, generators, logical_x, logical_z, Vec::new())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, failure: Option<String>) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed: failure.is_none(),
            detail: failure,
        });
        self.all_passed = self.checks.iter().all(|c| c.passed);
    }
}

pub mod check_names {
    pub const QUBIT_COUNTS: &str = "qubit_counts";
    pub const GENERATORS_COMMUTE: &str = "generators_commute";
    pub const GENERATORS_INDEPENDENT: &str = "generators_independent";
    pub const LOGICALS_COMMUTE_WITH_GENERATORS: &str = "logicals_commute_with_generators";
    pub const LOGICAL_ANTICOMMUTATION: &str = "logical_anticommutation_pattern";
    pub const LOGICAL_COUNT: &str = "logical_count";
    pub const N_MINUS_RANK: &str = "n_minus_rank_equals_k";
}

fn first_anticommuting_pair(a: &[PauliString], b: &[PauliString], same: bool) -> Option<(usize, usize)> {
    for (i, p) in a.iter().enumerate() {
        let start = if same { i + 1 } else { 0 };
        for (j, q) in b.iter().enumerate().skip(start) {
            if p.anticommutes_unchecked(q) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Mechanically checks every stabilizer-code invariant; failures are report entries.
pub fn verify_code(c: &StabilizerCode) -> VerificationReport {
    use check_names::*;
    let mut report = VerificationReport {
        checks: Vec::new(),
        all_passed: true,
    };
    let bad_dim = c
        .generators
        .iter()
        .chain(&c.logical_x)
        .chain(&c.logical_z)
        .find(|p| p.num_qubits() != c.n);
    if let Some(p) = bad_dim {
        report.push(
            QUBIT_COUNTS,
            Some(format!("operator {p} does not act on {} qubits", c.n)),
        );
        return report;
    }
    report.push(QUBIT_COUNTS, None);

    report.push(
        GENERATORS_COMMUTE,
        first_anticommuting_pair(&c.generators, &c.generators, true).map(|(i, j)| {
            format!(
                "generators {i} ({}) and {j} ({}) anticommute",
                c.generators[i], c.generators[j]
            )
        }),
    );

    let rank = c.stabilizer_basis().rank();
    report.push(
        GENERATORS_INDEPENDENT,
        (rank != c.generators.len())
            .then(|| format!("rank {rank} < {} generators", c.generators.len())),
    );

    let lg = first_anticommuting_pair(&c.logical_x, &c.generators, false)
        .map(|(i, j)| format!("logical X {i} anticommutes with generator {j}"))
        .or_else(|| {
            first_anticommuting_pair(&c.logical_z, &c.generators, false)
                .map(|(i, j)| format!("logical Z {i} anticommutes with generator {j}"))
        });
    report.push(LOGICALS_COMMUTE_WITH_GENERATORS, lg);

    let mut pattern = None;
    'outer: for (i, lx) in c.logical_x.iter().enumerate() {
        for (j, lz) in c.logical_z.iter().enumerate() {
            if lx.anticommutes_unchecked(lz) != (i == j) {
                pattern = Some(format!("logical X {i} vs logical Z {j} has the wrong commutation"));
                break 'outer;
            }
        }
    }
    if pattern.is_none() {
        pattern = first_anticommuting_pair(&c.logical_x, &c.logical_x, true)
            .map(|(i, j)| format!("logical X {i} and {j} anticommute"))
            .or_else(|| {
                first_anticommuting_pair(&c.logical_z, &c.logical_z, true)
                    .map(|(i, j)| format!("logical Z {i} and {j} anticommute"))
            });
    }
    report.push(LOGICAL_ANTICOMMUTATION, pattern);

    report.push(
        LOGICAL_COUNT,
        (c.logical_x.len() != c.k || c.logical_z.len() != c.k).then(|| {
            format!(
                "expected {} logical X and Z operators, found {} and {}",
                c.k,
                c.logical_x.len(),
                c.logical_z.len()
            )
        }),
    );

    report.push(
        N_MINUS_RANK,
        (c.n.checked_sub(rank) != Some(c.k))
            .then(|| format!("n - rank = {} - {rank} but k = {}", c.n, c.k)),
    );
    report
}

/// One bit per generator; a set bit means the error anticommutes with that generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syndrome {
    pub bits: BitVec,
}

impl Syndrome {
    pub fn is_trivial(&self) -> bool {
        self.bits.is_zero()
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.bits.len() {
            f.write_str(if self.bits.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn syndrome(c: &StabilizerCode, e: &PauliString) -> Result<Syndrome> {
    check_dim(c.n, e.num_qubits())?;
    let bits = BitVec::from_indices(
        c.generators.len(),
        c.generators
            .iter()
            .enumerate()
            .filter(|(_, g)| g.anticommutes_unchecked(e))
            .map(|(i, _)| i),
    );
    Ok(Syndrome { bits })
}

fn has_trivial_syndrome(c: &StabilizerCode, e: &PauliString) -> bool {
    c.generators.iter().all(|g| !g.anticommutes_unchecked(e))
}

/// True iff each of the `3n` single-qubit Paulis has a nonzero syndrome.
pub fn detects_all_weight_one(c: &StabilizerCode) -> bool {
    (0..c.n).all(|q| {
        ['X', 'Y', 'Z'].iter().all(|&l| {
            let e = PauliString::from_sparse(c.n, &[(q, l)]).expect("qubit in range");
            !has_trivial_syndrome(c, &e)
        })
    })
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of `n`-qubit Paulis of weight exactly `w`: `3^w · C(n, w)`.
pub fn weight_class_size(n: usize, w: usize) -> u128 {
    3u128.saturating_pow(w as u32).saturating_mul(binomial(n, w))
}

fn check_budget(n: usize, w: usize, budget: u64) -> Result<()> {
    let count = weight_class_size(n, w);
    if count > budget as u128 {
        return Err(Error::Resource(format!(
            "enumerating weight {w} on {n} qubits visits {count} operators, over the budget of {budget}"
        )));
    }
    Ok(())
}

/// Every Pauli of weight `w` on the qubits of `support`, letters cycling X, Y, Z.
fn paulis_on_support(n: usize, support: &[usize]) -> impl Iterator<Item = PauliString> + '_ {
    let w = support.len();
    let total = 3usize.pow(w as u32);
    (0..total).map(move |mut code| {
        let mut letters = Vec::with_capacity(w);
        for &q in support {
            letters.push((q, ['X', 'Y', 'Z'][code % 3]));
            code /= 3;
        }
        PauliString::from_sparse(n, &letters).expect("support within range")
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Exact(usize),
    GreaterThan(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub distance: Distance,
    /// A minimum-weight undetectable logical, smallest under [`PauliString::cmp_bits`].
    pub witness: Option<PauliString>,
    pub operators_checked: u64,
}

/// Brute-force code distance: the smallest weight of an operator with trivial
/// syndrome outside the stabilizer group, searched up to `max_weight`.
pub fn distance(c: &StabilizerCode, max_weight: usize, budget: u64) -> Result<DistanceReport> {
    let basis = c.stabilizer_basis();
    let max_weight = max_weight.min(c.n);
    let mut checked = 0u64;
    for w in 1..=max_weight {
        check_budget(c.n, w, budget)?;
        let supports: Vec<Vec<usize>> = (0..c.n).combinations(w).collect();
        let found: Vec<PauliString> = supports
            .par_iter()
            .flat_map_iter(|s| {
                paulis_on_support(c.n, s)
                    .filter(|p| has_trivial_syndrome(c, p) && !basis.contains(&p.symplectic_vector()))
                    .collect::<Vec<_>>()
            })
            .collect();
        checked += weight_class_size(c.n, w) as u64;
        if let Some(witness) = found.into_iter().min_by(|a, b| a.cmp_bits(b)) {
            return Ok(DistanceReport {
                distance: Distance::Exact(w),
                witness: Some(witness),
                operators_checked: checked,
            });
        }
    }
    Ok(DistanceReport {
        distance: Distance::GreaterThan(max_weight),
        witness: None,
        operators_checked: checked,
    })
}

/// Ranking of coset representatives: weight, then how many qubits the
/// stabilizer factor touches, then [`PauliString::cmp_bits`].
fn coset_key_cmp(
    a: (&PauliString, usize),
    b: (&PauliString, usize),
) -> std::cmp::Ordering {
    a.0.weight()
        .cmp(&b.0.weight())
        .then(a.1.cmp(&b.1))
        .then_with(|| a.0.cmp_bits(b.0))
}

fn factor_weight(a: &PauliString, b: &PauliString) -> usize {
    a.x_bits().xor(b.x_bits()).or_count(&a.z_bits().xor(b.z_bits()))
}

/// Minimum-weight representative of the coset `op·S`.
///
/// Ties at equal weight go to the representative reached with the smallest
/// stabilizer factor, then to the smallest bit pattern. The result equals
/// `s·op` for a stabilizer element `s`, with the phase of that product.
pub fn reduce_logical(c: &StabilizerCode, op: &PauliString) -> Result<PauliString> {
    reduce_logical_with_budget(c, op, DEFAULT_ENUMERATION_BUDGET)
}

pub fn reduce_logical_with_budget(
    c: &StabilizerCode,
    op: &PauliString,
    budget: u64,
) -> Result<PauliString> {
    check_dim(c.n, op.num_qubits())?;
    if !has_trivial_syndrome(c, op) {
        return Err(Error::NotALogical(op.to_string()));
    }
    let gens = c.independent_generators();
    if gens.len() <= COSET_SCAN_MAX_GENERATORS {
        Ok(coset_scan(op, &gens))
    } else {
        weight_ordered_search(c, op, budget)
    }
}

fn coset_scan(op: &PauliString, gens: &[&PauliString]) -> PauliString {
    let mut current = op.clone();
    let mut best = current.clone();
    let mut best_factor = 0usize;
    // Gray code walk: step i toggles generator trailing_zeros(i).
    for step in 1u64..(1u64 << gens.len()) {
        let g = gens[step.trailing_zeros() as usize];
        current = g.multiply_unchecked(&current);
        let f = factor_weight(&current, op);
        if coset_key_cmp((&current, f), (&best, best_factor)).is_lt() {
            best = current.clone();
            best_factor = f;
        }
    }
    best
}

fn weight_ordered_search(c: &StabilizerCode, op: &PauliString, budget: u64) -> Result<PauliString> {
    let basis = c.stabilizer_basis();
    let target = op.symplectic_vector();
    for w in 0..=op.weight() {
        check_budget(c.n, w, budget)?;
        let candidates: Vec<PauliString> = if w == 0 {
            vec![PauliString::identity(c.n)]
        } else {
            (0..c.n)
                .combinations(w)
                .collect::<Vec<_>>()
                .par_iter()
                .flat_map_iter(|s| {
                    paulis_on_support(c.n, s)
                        .filter(|p| basis.contains(&p.symplectic_vector().xor(&target)))
                        .collect::<Vec<_>>()
                })
                .collect()
        };
        let best = candidates
            .iter()
            .filter(|p| basis.contains(&p.symplectic_vector().xor(&target)))
            .map(|p| (p, factor_weight(p, op)))
            .min_by(|a, b| coset_key_cmp(*a, *b));
        if let Some((rep, _)) = best {
            let combo = basis
                .solve(&rep.symplectic_vector().xor(&target))
                .expect("candidate is in the coset");
            let mut s = PauliString::identity(c.n);
            for i in combo {
                s = c.generators[i].multiply_unchecked(&s);
            }
            return Ok(s.multiply_unchecked(op));
        }
    }
    unreachable!("the operator itself lies in its coset")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn label_layout_is_a_bijection() {
        for idx in 0..30 {
            let l = QubitLabel::from_flat_index(idx);
            assert_eq!(l.flat_index(), idx);
        }
        assert_eq!(qubit(1, Role::X), 0);
        assert_eq!(qubit(1, Role::Zero), 1);
        assert_eq!(qubit(2, Role::Z), 5);
        assert_eq!(QubitLabel::from_flat_index(4).to_string(), "(2,0)");
    }

    #[test]
    fn six_k_k1_generators() {
        let c = build_6k2k2(1).unwrap();
        assert_eq!(c.n, 6);
        assert_eq!(c.k, 2);
        let gens: Vec<String> = c.generators.iter().map(ToString::to_string).collect();
        assert_eq!(gens, vec!["XIIXII", "IXXIXX", "IIZIIZ", "ZZIZZI"]);
        assert_eq!(c.logical_x[0].to_string(), "XXIIII");
        assert_eq!(c.logical_z[1].to_string(), "IIIIZZ");
    }

    #[test]
    fn six_k_rejects_zero() {
        assert!(matches!(build_6k2k2(0), Err(Error::Parameter(_))));
        assert!(matches!(build_gottesman(0), Err(Error::Parameter(_))));
    }

    #[test]
    fn gottesman_k1() {
        let c = build_gottesman(1).unwrap();
        assert_eq!(c.generators[0].to_string(), "XXXX");
        assert_eq!(c.generators[1].to_string(), "ZZZZ");
        assert_eq!(c.logical_x[0].to_string(), "XXII");
        assert_eq!(c.logical_z[0].to_string(), "IZIZ");
    }

    #[test]
    fn gottesman_hub_touches_every_logical_x() {
        let c = build_gottesman(3).unwrap();
        assert_eq!(c.logical_x.len(), 6);
        assert!(c.logical_x.iter().all(|l| l.x_bits().get(0)));
        assert!(c.logical_z.iter().all(|l| l.z_bits().get(c.n - 1)));
    }

    #[test]
    fn verify_flags_anticommuting_generators() {
        let c = StabilizerCode::new(1, 0, false, vec![p("X"), p("Z")], vec![], vec![], vec![]).unwrap();
        let r = verify_code(&c);
        assert!(!r.all_passed);
        assert!(!r.check(check_names::GENERATORS_COMMUTE).unwrap().passed);
    }

    #[test]
    fn verify_flags_dependent_generators() {
        let c = StabilizerCode::new(2, 0, true, vec![p("XX"), p("XX")], vec![], vec![], vec![]).unwrap();
        let r = verify_code(&c);
        assert!(!r.check(check_names::GENERATORS_INDEPENDENT).unwrap().passed);
        assert!(!r.check(check_names::N_MINUS_RANK).unwrap().passed);
    }

    #[test]
    fn syndrome_examples() {
        let c = build_6k2k2(1).unwrap();
        let s0 = syndrome(&c, &PauliString::identity(6)).unwrap();
        assert_eq!(s0.to_string(), "0000");
        let a = syndrome(&c, &PauliString::x_on(6, &[qubit(1, Role::Zero)])).unwrap();
        let b = syndrome(&c, &PauliString::x_on(6, &[qubit(2, Role::Zero)])).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_trivial());
        let both = PauliString::x_on(6, &[qubit(1, Role::Zero), qubit(2, Role::Zero)]);
        assert!(syndrome(&c, &both).unwrap().is_trivial());
        assert!(syndrome(&c, &p("XX")).is_err());
    }

    #[test]
    fn distance_of_single_zz_stabilizer_is_one() {
        let c = StabilizerCode::new(2, 1, true, vec![p("ZZ")], vec![p("XX")], vec![p("ZI")], vec![]).unwrap();
        let d = distance(&c, 2, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(d.distance, Distance::Exact(1));
        // Z on either qubit is undetectable; bit order puts IZ (z = 01) first.
        assert_eq!(d.witness.unwrap().to_string(), "IZ");
    }

    #[test]
    fn distance_budget_names_weight() {
        let c = build_6k2k2(1).unwrap();
        let err = distance(&c, 3, 100).unwrap_err();
        match err {
            Error::Resource(msg) => assert!(msg.contains("weight 2"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn distance_without_logicals_is_unbounded() {
        let c = StabilizerCode::new(2, 0, true, vec![p("XX"), p("ZZ")], vec![], vec![], vec![]).unwrap();
        let d = distance(&c, 2, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(d.distance, Distance::GreaterThan(2));
    }

    #[test]
    fn weight_one_detection() {
        assert!(detects_all_weight_one(&build_6k2k2(2).unwrap()));
        assert!(detects_all_weight_one(&build_gottesman(2).unwrap()));
        let trivial = StabilizerCode::new(2, 2, true, vec![], vec![], vec![], vec![]).unwrap();
        assert!(!detects_all_weight_one(&trivial));
    }

    #[test]
    fn reduce_rejects_non_logical() {
        let c = build_6k2k2(1).unwrap();
        let e = PauliString::x_on(6, &[qubit(1, Role::Zero)]);
        assert!(matches!(reduce_logical(&c, &e), Err(Error::NotALogical(_))));
    }

    #[test]
    fn reduce_identity_is_identity() {
        let c = build_6k2k2(2).unwrap();
        let r = reduce_logical(&c, &PauliString::identity(12)).unwrap();
        assert!(r.is_identity());
        assert_eq!(r.phase(), 0);
    }

    #[test]
    fn weight_ordered_search_agrees_with_scan() {
        let c = build_6k2k2(2).unwrap();
        let op = c.logical_x[0].multiply(&c.logical_x[3]).unwrap();
        let scanned = reduce_logical(&c, &op).unwrap();
        let searched = weight_ordered_search(&c, &op, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(scanned, searched);
        assert_eq!(
            scanned,
            PauliString::x_on(12, &[qubit(1, Role::Zero), qubit(4, Role::Zero)])
        );
    }

    #[test]
    fn large_codes_take_the_weight_ordered_path() {
        // 6 logical-qubit pairs: 24 generators, beyond the exhaustive scan limit.
        let c = build_6k2k2(6).unwrap();
        let op = c.logical_z[2].multiply(&c.logical_z[9]).unwrap();
        let r = reduce_logical(&c, &op).unwrap();
        assert_eq!(
            r,
            PauliString::z_on(36, &[qubit(3, Role::Zero), qubit(10, Role::Zero)])
        );
    }

    #[test]
    fn json_round_trip() {
        let c = build_6k2k2(1).unwrap();
        let text = c.to_json_string().unwrap();
        assert!(text.contains("\"role\": \"0\""));
        assert_eq!(StabilizerCode::from_json_str(&text).unwrap(), c);
        let g = build_gottesman(2).unwrap();
        assert_eq!(StabilizerCode::from_json_str(&g.to_json_string().unwrap()).unwrap(), g);
    }

    #[test]
    fn json_rejects_wrong_length_operator() {
        let text = r#"{"n":2,"k":1,"css":true,"generators":["ZZZ"],"logical_x":[],"logical_z":[],"labels":[]}"#;
        assert!(matches!(StabilizerCode::from_json_str(text), Err(Error::Parse(_))));
    }
}
