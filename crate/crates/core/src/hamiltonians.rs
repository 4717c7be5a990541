//! Real-weighted Pauli sums and the encoding pipeline through the 6k code.
//!
//! Terms are stored canonically: each operator appears once with its sign
//! folded into the coefficient, and zero coefficients are dropped. Logical
//! Hamiltonians index their qubits from 0; qubit `q` is logical qubit `q + 1`
//! of the code.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::codes::{qubit, Role, StabilizerCode};
use crate::error::{check_dim, Error, Result};
use crate::pauli::PauliString;

#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: f64,
    /// Hermitian Pauli with a `+` sign.
    pub pauli: PauliString,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PauliHamiltonian {
    n: usize,
    terms: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
struct TermFile {
    coeff: f64,
    pauli: String,
}

#[derive(Serialize, Deserialize)]
struct HamiltonianFile {
    n: usize,
    terms: Vec<TermFile>,
}

impl PauliHamiltonian {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: Vec::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (f64, PauliString)>>(n: usize, terms: I) -> Result<Self> {
        let mut h = Self::zero(n);
        for (c, p) in terms {
            h.add_term(c, p)?;
        }
        Ok(h)
    }

    /// Parses `(coeff, "pauli text")` pairs, a convenience for tests and examples.
    pub fn from_text_terms(n: usize, terms: &[(f64, &str)]) -> Result<Self> {
        let parsed: Result<Vec<(f64, PauliString)>> = terms
            .iter()
            .map(|&(c, s)| Ok((c, PauliString::parse_with_len(s, n)?)))
            .collect();
        Self::from_terms(n, parsed?)
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · pauli`, merging with an existing term on the same operator.
    pub fn add_term(&mut self, coeff: f64, pauli: PauliString) -> Result<()> {
        check_dim(self.n, pauli.num_qubits())?;
        if !coeff.is_finite() {
            return Err(Error::Parameter(format!("coefficient {coeff} is not finite")));
        }
        let sign = match pauli.display_phase() {
            0 => 1.0,
            2 => -1.0,
            _ => {
                return Err(Error::Parameter(format!(
                    "term {pauli} is anti-Hermitian; Hamiltonian terms must carry a real sign"
                )))
            }
        };
        let pauli = pauli.without_sign();
        let coeff = sign * coeff;
        if let Some(t) = self.terms.iter_mut().find(|t| t.pauli == pauli) {
            t.coeff += coeff;
        } else {
            self.terms.push(Term { coeff, pauli });
        }
        self.terms.retain(|t| t.coeff != 0.0);
        Ok(())
    }

    /// Merges duplicate operators and drops zero terms, keeping first-appearance order.
    pub fn canonical(&self) -> Self {
        let mut index: HashMap<&PauliString, usize> = HashMap::new();
        let mut merged: Vec<Term> = Vec::new();
        for t in &self.terms {
            if let Some(&i) = index.get(&t.pauli) {
                merged[i].coeff += t.coeff;
            } else {
                index.insert(&t.pauli, merged.len());
                merged.push(t.clone());
            }
        }
        merged.retain(|t| t.coeff != 0.0);
        Self {
            n: self.n,
            terms: merged,
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff * factor,
                pauli: t.pauli.clone(),
            })
            .collect::<Vec<_>>();
        Self { n: self.n, terms }.canonical()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for t in &other.terms {
            out.add_term(t.coeff, t.pauli.clone())?;
        }
        Ok(out)
    }

    /// `Σ |coeff|`, an upper bound on the operator norm.
    pub fn one_norm(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff.abs()).sum()
    }

    pub fn max_weight(&self) -> usize {
        self.terms.iter().map(|t| t.pauli.weight()).max().unwrap_or(0)
    }

    pub fn to_json_string(&self) -> Result<String> {
        let file = HamiltonianFile {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|t| TermFile {
                    coeff: t.coeff,
                    pauli: t.pauli.to_string(),
                })
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: HamiltonianFile = serde_json::from_str(text)?;
        let mut h = Self::zero(file.n);
        for t in file.terms {
            h.add_term(t.coeff, PauliString::parse_with_len(&t.pauli, file.n)?)?;
        }
        Ok(h)
    }
}

impl fmt::Display for PauliHamiltonian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}·{}", t.coeff, t.pauli)?;
        }
        Ok(())
    }
}

fn require_sixk_layout(c: &StabilizerCode, logical: usize) -> Result<()> {
    if !logical.is_multiple_of(2) {
        return Err(Error::Parameter(format!(
            "the [[6k,2k,2]] code encodes an even number of logical qubits, got {logical}"
        )));
    }
    if c.k != logical || c.n != 3 * logical || c.labels.len() != c.n {
        return Err(Error::Parameter(format!(
            "code with n={}, k={} is not the [[6k,2k,2]] code for {logical} logical qubits",
            c.n, c.k
        )));
    }
    Ok(())
}

/// Maps a logical Hamiltonian built from `I, X_i, Z_i, X_iX_j, Z_iZ_j` onto
/// the physical qubits of a 6k code:
///
/// | logical  | physical                  |
/// |----------|---------------------------|
/// | `X_i`    | `X_(i,x) X_(i,0)`         |
/// | `Z_i`    | `Z_(i,0) Z_(i,z)`         |
/// | `X_iX_j` | `X_(i,0) X_(j,0)`         |
/// | `Z_iZ_j` | `Z_(i,0) Z_(j,0)`         |
pub fn encode_hamiltonian(h: &PauliHamiltonian, c: &StabilizerCode) -> Result<PauliHamiltonian> {
    require_sixk_layout(c, h.num_qubits())?;
    let mut out = PauliHamiltonian::zero(c.n);
    for t in h.terms() {
        let support = t.pauli.support();
        let letters: Vec<char> = support.iter().map(|&q| t.pauli.letter(q)).collect();
        let l = |q: usize| q + 1;
        let physical = match (support.as_slice(), letters.as_slice()) {
            ([], []) => PauliString::identity(c.n),
            ([i], ['X']) => PauliString::x_on(c.n, &[qubit(l(*i), Role::X), qubit(l(*i), Role::Zero)]),
            ([i], ['Z']) => PauliString::z_on(c.n, &[qubit(l(*i), Role::Zero), qubit(l(*i), Role::Z)]),
            ([i, j], ['X', 'X']) => {
                PauliString::x_on(c.n, &[qubit(l(*i), Role::Zero), qubit(l(*j), Role::Zero)])
            }
            ([i, j], ['Z', 'Z']) => {
                PauliString::z_on(c.n, &[qubit(l(*i), Role::Zero), qubit(l(*j), Role::Zero)])
            }
            _ => return Err(Error::UnsupportedTerm(t.pauli.to_string())),
        };
        out.add_term(t.coeff, physical)?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutationViolation {
    pub term: String,
    pub generator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutationAudit {
    pub terms_checked: usize,
    pub generators_checked: usize,
    pub violations: Vec<CommutationViolation>,
    pub passed: bool,
}

/// Checks every term of `h` against every generator of `c`.
pub fn commutation_audit(h: &PauliHamiltonian, c: &StabilizerCode) -> Result<CommutationAudit> {
    check_dim(c.n, h.num_qubits())?;
    let violations: Vec<CommutationViolation> = h
        .terms()
        .iter()
        .flat_map(|t| {
            c.generators
                .iter()
                .filter(|g| g.anticommutes_unchecked(&t.pauli))
                .map(|g| CommutationViolation {
                    term: t.pauli.to_string(),
                    generator: g.to_string(),
                })
        })
        .collect();
    Ok(CommutationAudit {
        terms_checked: h.len(),
        generators_checked: c.generators.len(),
        passed: violations.is_empty(),
        violations,
    })
}

/// `H = −Σ_{i=1}^{k} (Z_(2i−1,0) Z_(2i,0) + X_(2i−1,0) X_(2i,0))` on `6k` qubits.
pub fn initial_hamiltonian(k: usize) -> Result<PauliHamiltonian> {
    if k < 1 {
        return Err(Error::Parameter(format!("k must be at least 1, got {k}")));
    }
    let n = 6 * k;
    let mut h = PauliHamiltonian::zero(n);
    for i in 1..=k {
        let pair = [qubit(2 * i - 1, Role::Zero), qubit(2 * i, Role::Zero)];
        h.add_term(-1.0, PauliString::z_on(n, &pair))?;
        h.add_term(-1.0, PauliString::x_on(n, &pair))?;
    }
    Ok(h)
}

/// `−strength · Σ g` over the weight-two generators of `c`; heavier generators are left to pulses.
pub fn penalty_hamiltonian(c: &StabilizerCode, strength: f64) -> Result<PauliHamiltonian> {
    if !(strength.is_finite() && strength > 0.0) {
        return Err(Error::Parameter(format!(
            "penalty strength must be positive and finite, got {strength}"
        )));
    }
    PauliHamiltonian::from_terms(
        c.n,
        c.generators
            .iter()
            .filter(|g| g.weight() == 2)
            .map(|g| (-strength, g.clone())),
    )
}

/// Basis in which the prepared cat state is a superposition of two product states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CatBasis {
    /// `(|00…⟩ + |11…⟩)/√2`, conserved operator `⊗X`.
    Z,
    /// `(|++…⟩ + |−−…⟩)/√2`, conserved operator `⊗Z`.
    X,
}

impl CatBasis {
    /// Letter of the driver field (`H0`); the Ising coupling uses the other letter.
    pub fn driver_letter(self) -> char {
        match self {
            CatBasis::Z => 'X',
            CatBasis::X => 'Z',
        }
    }

    pub fn coupling_letter(self) -> char {
        match self {
            CatBasis::Z => 'Z',
            CatBasis::X => 'X',
        }
    }

    /// The parity operator conserved along the interpolation.
    pub fn conserved_operator(self, m: usize) -> PauliString {
        let all: Vec<usize> = (0..m).collect();
        match self {
            CatBasis::Z => PauliString::x_on(m, &all),
            CatBasis::X => PauliString::z_on(m, &all),
        }
    }
}

impl std::str::FromStr for CatBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z" | "z" => Ok(CatBasis::Z),
            "X" | "x" => Ok(CatBasis::X),
            other => Err(Error::Parse(format!("cat basis must be X or Z, got '{other}'"))),
        }
    }
}

/// Driver and Ising Hamiltonians on a chain of `m` qubits.
///
/// For [`CatBasis::Z`]: `H0 = −Σ X_i`, `H1 = −Σ Z_i Z_{i+1}`; for [`CatBasis::X`]
/// the letters are exchanged.
pub fn cat_prep_hamiltonians(m: usize, basis: CatBasis) -> Result<(PauliHamiltonian, PauliHamiltonian)> {
    if m < 2 {
        return Err(Error::Parameter(format!("cat preparation needs m ≥ 2, got {m}")));
    }
    let d = basis.driver_letter();
    let c = basis.coupling_letter();
    let h0 = PauliHamiltonian::from_terms(
        m,
        (0..m).map(|i| (-1.0, PauliString::from_sparse(m, &[(i, d)]).expect("in range"))),
    )?;
    let h1 = PauliHamiltonian::from_terms(
        m,
        (0..m - 1).map(|i| {
            (
                -1.0,
                PauliString::from_sparse(m, &[(i, c), (i + 1, c)]).expect("in range"),
            )
        }),
    )?;
    Ok((h0, h1))
}

/// Shape of the interpolation `s(t/T)`.
#[derive(Clone, Copy, Debug)]
pub enum Profile {
    Linear,
    Custom(fn(f64) -> f64),
}

impl Profile {
    pub fn eval(self, u: f64) -> f64 {
        match self {
            Profile::Linear => u,
            Profile::Custom(f) => f(u),
        }
    }
}

/// `H(s) = (1 − s)·H_initial + s·H_final` with `s = profile(t / T)`.
#[derive(Clone, Debug)]
pub struct AnnealSchedule {
    pub total_time: f64,
    pub h_initial: PauliHamiltonian,
    pub h_final: PauliHamiltonian,
    pub profile: Profile,
}

impl AnnealSchedule {
    pub fn linear(total_time: f64, h_initial: PauliHamiltonian, h_final: PauliHamiltonian) -> Result<Self> {
        Self::new(total_time, h_initial, h_final, Profile::Linear)
    }

    pub fn new(
        total_time: f64,
        h_initial: PauliHamiltonian,
        h_final: PauliHamiltonian,
        profile: Profile,
    ) -> Result<Self> {
        check_dim(h_initial.num_qubits(), h_final.num_qubits())?;
        if !(total_time.is_finite() && total_time >= 0.0) {
            return Err(Error::Parameter(format!("total time must be finite and ≥ 0, got {total_time}")));
        }
        const SAMPLES: usize = 256;
        let values: Vec<f64> = (0..=SAMPLES)
            .map(|i| profile.eval(i as f64 / SAMPLES as f64))
            .collect();
        if values[0].abs() > 1e-12 || (values[SAMPLES] - 1.0).abs() > 1e-12 {
            return Err(Error::Parameter("schedule must satisfy s(0) = 0 and s(T) = 1".into()));
        }
        if values.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Parameter("schedule must be nondecreasing".into()));
        }
        Ok(Self {
            total_time,
            h_initial,
            h_final,
            profile,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.h_initial.num_qubits()
    }

    /// `s(t)`, clamped to `[0, T]`.
    pub fn s_at(&self, t: f64) -> f64 {
        if self.total_time == 0.0 {
            return 1.0;
        }
        self.profile.eval((t / self.total_time).clamp(0.0, 1.0))
    }

    pub fn hamiltonian_at(&self, s: f64) -> PauliHamiltonian {
        self.h_initial
            .scaled(1.0 - s)
            .sum(&self.h_final.scaled(s))
            .expect("dimensions checked at construction")
    }
}

/// A logical problem on a `rows × cols` grid: `ZZ` and `XX` couplings on every
/// grid edge plus `X` and `Z` fields on every site, with magnitudes in
/// `[0.25, 1]` and random signs drawn from `seed`. Site `(r, c)` is qubit `r·cols + c`.
pub fn grid_problem(rows: usize, cols: usize, seed: u64) -> Result<PauliHamiltonian> {
    if rows == 0 || cols == 0 {
        return Err(Error::Parameter("grid dimensions must be positive".into()));
    }
    let n = rows * cols;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = move || {
        let mag: f64 = rng.gen_range(0.25..=1.0);
        if rng.gen_bool(0.5) {
            mag
        } else {
            -mag
        }
    };
    let mut h = PauliHamiltonian::zero(n);
    for q in 0..n {
        h.add_term(draw(), PauliString::x_on(n, &[q]))?;
        h.add_term(draw(), PauliString::z_on(n, &[q]))?;
    }
    for r in 0..rows {
        for c in 0..cols {
            let q = r * cols + c;
            let mut nbrs = Vec::new();
            if c + 1 < cols {
                nbrs.push(q + 1);
            }
            if r + 1 < rows {
                nbrs.push(q + cols);
            }
            for p in nbrs {
                h.add_term(draw(), PauliString::z_on(n, &[q, p]))?;
                h.add_term(draw(), PauliString::x_on(n, &[q, p]))?;
            }
        }
    }
    Ok(h)
}
