//! Dense statevector simulation.
//!
//! Basis state `|b⟩` has qubit 0 as the most significant bit of `b`, so the
//! amplitude vector of `|q₀ q₁ … q_{n−1}⟩` is the Kronecker product in qubit order.
//! States are limited to [`MAX_STATE_QUBITS`] qubits and dense matrices to
//! [`MAX_DENSE_QUBITS`].

pub mod anneal;
pub mod dd;
pub mod states;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{check_dim, Error, Result};
use crate::hamiltonians::PauliHamiltonian;
use crate::pauli::PauliString;

pub use anneal::{anneal, anneal_observed, prepare_cat, prepare_cat_converged, AnnealTrace, CatPreparation, SliceRecord};
pub use dd::{
    dd_scaling_experiment, dd_step, first_order_decoupling, loglog_fit, universal_decoupling_group, DDPulse,
    DdExperiment, DecouplingCheck, FidelityRecord, Fit, PulseMethod,
};
pub use states::{
    build_initial_state, cat_state, codespace_spectrum, joint_eigenspace, CodespaceSpectrum,
};

pub type C64 = Complex64;

pub const MAX_STATE_QUBITS: usize = 14;
pub const MAX_DENSE_QUBITS: usize = 12;
/// Above this size [`evolve`] switches from eigendecomposition to Taylor propagation.
pub const EIGEN_MAX_QUBITS: usize = 10;

const NORM_TOLERANCE: f64 = 1e-9;

fn guard_state(n: usize) -> Result<()> {
    if n > MAX_STATE_QUBITS {
        return Err(Error::Resource(format!(
            "state vectors are limited to {MAX_STATE_QUBITS} qubits, got {n}"
        )));
    }
    Ok(())
}

fn guard_dense(n: usize) -> Result<()> {
    if n > MAX_DENSE_QUBITS {
        return Err(Error::Resource(format!(
            "dense matrices are limited to {MAX_DENSE_QUBITS} qubits, got {n}"
        )));
    }
    Ok(())
}

fn i_pow(p: u8) -> C64 {
    match p % 4 {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    }
}

/// `(x_mask, z_mask)` with qubit `q` on bit `n − 1 − q`.
fn masks(p: &PauliString) -> (usize, usize) {
    let n = p.num_qubits();
    let to_mask = |bits: &crate::gf2::BitVec| bits.iter_ones().fold(0usize, |m, q| m | 1 << (n - 1 - q));
    (to_mask(p.x_bits()), to_mask(p.z_bits()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<C64>,
}

impl StateVector {
    pub fn basis_state(n: usize, index: usize) -> Result<Self> {
        guard_state(n)?;
        if index >> n != 0 {
            return Err(Error::Parameter(format!("basis index {index} out of range for {n} qubits")));
        }
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        amps[index] = C64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    pub fn zero_state(n: usize) -> Result<Self> {
        Self::basis_state(n, 0)
    }

    /// `|+⟩^⊗n`.
    pub fn plus_state(n: usize) -> Result<Self> {
        guard_state(n)?;
        let a = (1.0 / (1u64 << n) as f64).sqrt();
        Ok(Self {
            n,
            amps: vec![C64::new(a, 0.0); 1 << n],
        })
    }

    pub fn from_amplitudes(n: usize, amps: Vec<C64>) -> Result<Self> {
        guard_state(n)?;
        if amps.len() != 1 << n {
            return Err(Error::Parameter(format!(
                "expected {} amplitudes for {n} qubits, got {}",
                1usize << n,
                amps.len()
            )));
        }
        Ok(Self { n, amps })
    }

    /// Places each factor state on its listed qubits (in the listed order); the
    /// qubit sets must partition `0..n`.
    pub fn from_factors(n: usize, factors: &[(Vec<usize>, StateVector)]) -> Result<Self> {
        guard_state(n)?;
        let mut seen = vec![false; n];
        for (qs, st) in factors {
            check_dim(qs.len(), st.n)?;
            for &q in qs {
                if q >= n || std::mem::replace(&mut seen[q], true) {
                    return Err(Error::Parameter(format!("factor qubit {q} repeated or out of range")));
                }
            }
        }
        if let Some(q) = seen.iter().position(|s| !s) {
            return Err(Error::Parameter(format!("qubit {q} is not covered by any factor")));
        }
        let amps = (0..1usize << n)
            .map(|b| {
                factors.iter().fold(C64::new(1.0, 0.0), |acc, (qs, st)| {
                    let local = qs
                        .iter()
                        .fold(0usize, |idx, &q| (idx << 1) | ((b >> (n - 1 - q)) & 1));
                    acc * st.amps[local]
                })
            })
            .collect();
        Ok(Self { n, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(mut self) -> Result<Self> {
        let nrm = self.norm();
        if nrm == 0.0 {
            return Err(Error::Numerical("cannot normalize the zero vector".into()));
        }
        for a in &mut self.amps {
            *a /= nrm;
        }
        Ok(self)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        check_dim(self.n, other.n)?;
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }

    /// `|⟨self|other⟩|²`.
    pub fn overlap(&self, other: &Self) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    pub fn apply_pauli(&self, p: &PauliString) -> Result<Self> {
        check_dim(self.n, p.num_qubits())?;
        let (x, z) = masks(p);
        let ph = i_pow(p.phase());
        let mut out = vec![C64::new(0.0, 0.0); self.amps.len()];
        for (b, &a) in self.amps.iter().enumerate() {
            let sign = if (z & b).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
            out[b ^ x] = ph * a * sign;
        }
        Ok(Self { n: self.n, amps: out })
    }

    /// `⟨ψ|P|ψ⟩`, complex for non-Hermitian `P`.
    pub fn expectation_pauli(&self, p: &PauliString) -> Result<C64> {
        self.inner(&self.apply_pauli(p)?)
    }

    pub fn apply_hamiltonian(&self, h: &PauliHamiltonian) -> Result<Self> {
        check_dim(self.n, h.num_qubits())?;
        let mut out = vec![C64::new(0.0, 0.0); self.amps.len()];
        for t in h.terms() {
            let (x, z) = masks(&t.pauli);
            let ph = i_pow(t.pauli.phase()) * t.coeff;
            for (b, &a) in self.amps.iter().enumerate() {
                let sign = if (z & b).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
                out[b ^ x] += ph * a * sign;
            }
        }
        Ok(Self { n: self.n, amps: out })
    }

    pub fn energy(&self, h: &PauliHamiltonian) -> Result<f64> {
        Ok(self.inner(&self.apply_hamiltonian(h)?)?.re)
    }

    /// `‖a − b‖₂`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        check_dim(self.n, other.n)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    pub(crate) fn to_dvector(&self) -> DVector<C64> {
        DVector::from_column_slice(&self.amps)
    }

    pub(crate) fn from_dvector(n: usize, v: DVector<C64>) -> Self {
        Self {
            n,
            amps: v.as_slice().to_vec(),
        }
    }

    pub fn apply_matrix(&self, m: &DMatrix<C64>) -> Result<Self> {
        check_dim(1 << self.n, m.ncols())?;
        Ok(Self::from_dvector(self.n, m * self.to_dvector()))
    }

    fn check_unit_norm(&self, context: &str) -> Result<()> {
        let nrm = self.norm();
        if (nrm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Numerical(format!("{context}: norm drifted to {nrm}")));
        }
        Ok(())
    }
}

/// Matrix of a single Pauli string.
pub fn pauli_matrix(p: &PauliString) -> Result<DMatrix<C64>> {
    let n = p.num_qubits();
    guard_dense(n)?;
    let mut m = DMatrix::<C64>::zeros(1 << n, 1 << n);
    let (x, z) = masks(p);
    let ph = i_pow(p.phase());
    for b in 0..m.ncols() {
        let sign = if (z & b).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
        m[(b ^ x, b)] = ph * sign;
    }
    Ok(m)
}

/// `Σ coeff · P` as a dense `2ⁿ × 2ⁿ` matrix.
pub fn dense_matrix(h: &PauliHamiltonian) -> Result<DMatrix<C64>> {
    let n = h.num_qubits();
    guard_dense(n)?;
    let dim = 1usize << n;
    let mut m = DMatrix::<C64>::zeros(dim, dim);
    for t in h.terms() {
        let (x, z) = masks(&t.pauli);
        let ph = i_pow(t.pauli.phase()) * t.coeff;
        for b in 0..dim {
            let sign = if (z & b).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
            m[(b ^ x, b)] += ph * sign;
        }
    }
    Ok(m)
}

/// Largest `|M_ij − conj(M_ji)|`.
pub fn hermiticity_defect(m: &DMatrix<C64>) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Eigendecomposition of a Hermitian operator, eigenvalues ascending.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// Column `j` is the eigenvector of `values[j]`.
    pub vectors: DMatrix<C64>,
}

/// Eigenvalues closer than this to the minimum count as ground states.
pub const DEGENERACY_TOLERANCE: f64 = 1e-8;

impl Spectrum {
    pub fn of_hamiltonian(h: &PauliHamiltonian) -> Result<Self> {
        Ok(Self::of_matrix(dense_matrix(h)?))
    }

    pub fn of_matrix(m: DMatrix<C64>) -> Self {
        let eig = m.symmetric_eigen();
        let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let values = order.iter().map(|&j| eig.eigenvalues[j]).collect();
        let vectors = DMatrix::from_fn(eig.eigenvectors.nrows(), order.len(), |i, j| {
            eig.eigenvectors[(i, order[j])]
        });
        Self { values, vectors }
    }

    pub fn ground_energy(&self) -> f64 {
        self.values[0]
    }

    pub fn ground_multiplicity(&self) -> usize {
        let e0 = self.values[0];
        self.values
            .iter()
            .take_while(|&&e| e - e0 < DEGENERACY_TOLERANCE)
            .count()
    }

    /// Gap between the ground level and the next distinct level, if any.
    pub fn gap(&self) -> Option<f64> {
        self.values
            .get(self.ground_multiplicity())
            .map(|e| e - self.values[0])
    }

    pub fn spectral_norm(&self) -> f64 {
        self.values
            .iter()
            .map(|e| e.abs())
            .fold(0.0, f64::max)
    }

    /// Weight of `psi` in the (possibly degenerate) ground space.
    pub fn ground_overlap(&self, psi: &StateVector) -> f64 {
        let v = psi.to_dvector();
        (0..self.ground_multiplicity())
            .map(|j| self.vectors.column(j).dotc(&v).norm_sqr())
            .sum()
    }

    pub fn ground_state(&self) -> DVector<C64> {
        self.vectors.column(0).into_owned()
    }

    /// `exp(−iHt)` as a dense matrix.
    pub fn propagator(&self, t: f64) -> DMatrix<C64> {
        let phases: Vec<C64> = self.values.iter().map(|e| C64::new(0.0, -e * t).exp()).collect();
        let mut scaled = self.vectors.clone();
        for (j, ph) in phases.iter().enumerate() {
            let mut col = scaled.column_mut(j);
            col *= *ph;
        }
        scaled * self.vectors.adjoint()
    }

    pub fn evolve(&self, psi: &StateVector, t: f64) -> StateVector {
        let mut coeffs = self.vectors.adjoint() * psi.to_dvector();
        for (c, e) in coeffs.iter_mut().zip(&self.values) {
            *c *= C64::new(0.0, -e * t).exp();
        }
        StateVector::from_dvector(psi.n, &self.vectors * coeffs)
    }
}

/// Spectral norm `‖H‖` (largest singular value, equal to the largest |eigenvalue|).
pub fn operator_norm(h: &PauliHamiltonian) -> Result<f64> {
    Ok(Spectrum::of_hamiltonian(h)?.spectral_norm())
}

/// `exp(−iHt)·ψ`: exact eigendecomposition up to [`EIGEN_MAX_QUBITS`] qubits,
/// matrix-free Taylor series beyond.
pub fn evolve(psi: &StateVector, h: &PauliHamiltonian, t: f64) -> Result<StateVector> {
    check_dim(psi.n, h.num_qubits())?;
    if !t.is_finite() {
        return Err(Error::Parameter(format!("evolution time must be finite, got {t}")));
    }
    if t == 0.0 || h.is_empty() {
        return Ok(psi.clone());
    }
    let out = if psi.n <= EIGEN_MAX_QUBITS {
        Spectrum::of_hamiltonian(h)?.evolve(psi, t)
    } else {
        taylor_evolve(psi, h, t)?
    };
    out.check_unit_norm("evolve")?;
    Ok(out)
}

/// Sub-steps of length `dt` with `‖H‖₁·dt ≤ 1/2`, each summed to machine precision.
fn taylor_evolve(psi: &StateVector, h: &PauliHamiltonian, t: f64) -> Result<StateVector> {
    let bound = h.one_norm();
    let steps = ((bound * t.abs()) / 0.5).ceil().max(1.0) as usize;
    let dt = t / steps as f64;
    let mut state = psi.clone();
    for _ in 0..steps {
        let mut term = state.clone();
        let mut acc = state.clone();
        for k in 1..=60 {
            let mut next = term.apply_hamiltonian(h)?;
            let factor = C64::new(0.0, -dt / k as f64);
            for a in &mut next.amps {
                *a *= factor;
            }
            for (s, a) in acc.amps.iter_mut().zip(&next.amps) {
                *s += a;
            }
            term = next;
            if term.norm() < 1e-16 {
                break;
            }
        }
        state = acc;
    }
    Ok(state)
}
