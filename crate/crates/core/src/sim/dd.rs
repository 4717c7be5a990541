//! Dynamical-decoupling pulses built from `X_all`/`Z_all`, their error scaling,
//! and the first-order decoupling condition.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{states::build_initial_state, Spectrum, StateVector, C64, MAX_DENSE_QUBITS};
use crate::codes::StabilizerCode;
use crate::error::{check_dim, Error, Result};
use crate::hamiltonians::PauliHamiltonian;
use crate::pauli::PauliString;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PulseMethod {
    /// Free evolution for `tau` followed by the ideal pulse `exp(−iπ/2·target)`.
    Exact,
    /// `exp(−iτ(H + αH_C))`, the single-qubit control field acting alongside `H`.
    Local,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DDPulse {
    pub target: PauliString,
    pub method: PulseMethod,
    pub tau: f64,
    /// Control amplitude, `α·τ = π/2`.
    pub alpha: f64,
}

impl DDPulse {
    pub fn new(target: PauliString, method: PulseMethod, tau: f64) -> Result<Self> {
        if !(tau.is_finite() && tau > 0.0) {
            return Err(Error::InvalidPulse(format!("pulse duration must be positive, got {tau}")));
        }
        if target.is_identity() || target.display_phase() != 0 {
            return Err(Error::InvalidPulse(format!(
                "target must be a non-identity Pauli with + sign, got {target}"
            )));
        }
        Ok(Self {
            target,
            method,
            tau,
            alpha: FRAC_PI_2 / tau,
        })
    }

    /// `H_C`: the sum of the single-qubit factors of the target.
    pub fn control_hamiltonian(&self) -> PauliHamiltonian {
        let n = self.target.num_qubits();
        PauliHamiltonian::from_terms(
            n,
            self.target.support().into_iter().map(|q| {
                let letter = self.target.letter(q);
                (1.0, PauliString::from_sparse(n, &[(q, letter)]).expect("in range"))
            }),
        )
        .expect("single-qubit Paulis are Hermitian")
    }

    fn check_commutes(&self, h: &PauliHamiltonian) -> Result<()> {
        check_dim(h.num_qubits(), self.target.num_qubits())?;
        if let Some(t) = h.terms().iter().find(|t| !t.pauli.commutes(&self.target).unwrap_or(false)) {
            return Err(Error::InvalidPulse(format!(
                "target {} does not commute with term {}",
                self.target, t.pauli
            )));
        }
        Ok(())
    }

    /// Dense step propagator for `h`.
    fn propagator(&self, h: &PauliHamiltonian) -> Result<DMatrix<C64>> {
        match self.method {
            PulseMethod::Exact => {
                let free = Spectrum::of_hamiltonian(h)?.propagator(self.tau);
                // exp(−iπ/2·P) = −i·P for a Pauli P
                let pulse = super::pauli_matrix(&self.target)? * C64::new(0.0, -1.0);
                Ok(pulse * free)
            }
            PulseMethod::Local => {
                let total = h.sum(&self.control_hamiltonian().scaled(self.alpha))?;
                Ok(Spectrum::of_hamiltonian(&total)?.propagator(self.tau))
            }
        }
    }
}

/// One decoupling step on `psi` under `h_aqc`.
pub fn dd_step(psi: &StateVector, h_aqc: &PauliHamiltonian, pulse: &DDPulse) -> Result<StateVector> {
    check_dim(h_aqc.num_qubits(), psi.num_qubits())?;
    pulse.check_commutes(h_aqc)?;
    let out = psi.apply_matrix(&pulse.propagator(h_aqc)?)?;
    out.check_unit_norm("dd_step")?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FidelityRecord {
    pub tau: f64,
    pub n_d: usize,
    /// `1 − |⟨ψ_exact|ψ_local⟩|²`, clamped to `[0, 1]`.
    pub infidelity: f64,
    /// `N_D·‖H‖·τ·π/4`.
    pub bound: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

/// Least-squares line through `(ln x, ln y)`.
pub fn loglog_fit(points: &[(f64, f64)]) -> Result<Fit> {
    if points.len() < 2 {
        return Err(Error::Parameter("a fit needs at least two points".into()));
    }
    if points.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::Parameter("log-log fit needs positive data".into()));
    }
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::Parameter("fit abscissae are all equal".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = pts.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    let r2 = if syy == 0.0 { 1.0 } else { 1.0 - sse / syy };
    Ok(Fit { slope, intercept, r2 })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DdExperiment {
    pub norm: f64,
    pub records: Vec<FidelityRecord>,
    /// Largest `infidelity / bound²` over records with a nonzero bound.
    pub max_bound_ratio: f64,
    /// Fit of infidelity against `tau` for each `N_D` (two or more positive points).
    pub tau_fits: Vec<(usize, Fit)>,
    /// Fit of infidelity against `N_D` for each `tau`.
    pub nd_fits: Vec<(f64, Fit)>,
}

impl DdExperiment {
    pub fn tau_fit(&self, n_d: usize) -> Option<Fit> {
        self.tau_fits.iter().find(|(d, _)| *d == n_d).map(|(_, f)| *f)
    }

    pub fn nd_fit(&self, tau: f64) -> Option<Fit> {
        self.nd_fits.iter().find(|(t, _)| *t == tau).map(|(_, f)| *f)
    }
}

/// Target of pulse `j`: `X_all` for even `j`, `Z_all` for odd.
pub fn pulse_target(n: usize, j: usize) -> PauliString {
    let all: Vec<usize> = (0..n).collect();
    if j.is_multiple_of(2) {
        PauliString::x_on(n, &all)
    } else {
        PauliString::z_on(n, &all)
    }
}

/// Runs `N_D` alternating pulses with both methods from the initial state of
/// the `6k`-qubit code, for every `(tau, N_D)` pair.
pub fn dd_scaling_experiment(h_aqc: &PauliHamiltonian, taus: &[f64], nds: &[usize]) -> Result<DdExperiment> {
    let n = h_aqc.num_qubits();
    if !n.is_multiple_of(6) || n == 0 {
        return Err(Error::Parameter(format!("expected 6k physical qubits, got {n}")));
    }
    if n > MAX_DENSE_QUBITS {
        return Err(Error::Resource(format!("decoupling experiment limited to {MAX_DENSE_QUBITS} qubits, got {n}")));
    }
    let psi0 = build_initial_state(n / 6)?;
    let norm = super::operator_norm(h_aqc)?;
    let max_nd = nds.iter().copied().max().unwrap_or(0);
    let mut records = Vec::new();
    for &tau in taus {
        let mut steps = Vec::new();
        for parity in 0..2 {
            let target = pulse_target(n, parity);
            let exact = DDPulse::new(target.clone(), PulseMethod::Exact, tau)?;
            let local = DDPulse::new(target, PulseMethod::Local, tau)?;
            exact.check_commutes(h_aqc)?;
            steps.push((exact.propagator(h_aqc)?, local.propagator(h_aqc)?));
        }
        let mut exact = psi0.clone();
        let mut local = psi0.clone();
        let mut at = vec![0.0; max_nd + 1];
        for (j, slot) in at.iter_mut().enumerate().skip(1) {
            let (ue, ul) = &steps[(j - 1) % 2];
            exact = exact.apply_matrix(ue)?;
            local = local.apply_matrix(ul)?;
            *slot = (1.0 - exact.overlap(&local)?).clamp(0.0, 1.0);
        }
        exact.check_unit_norm("dd exact trajectory")?;
        local.check_unit_norm("dd local trajectory")?;
        for &n_d in nds {
            records.push(FidelityRecord {
                tau,
                n_d,
                infidelity: at[n_d],
                bound: n_d as f64 * norm * tau * FRAC_PI_4,
            });
        }
    }
    let max_bound_ratio = records
        .iter()
        .filter(|r| r.bound > 0.0)
        .map(|r| r.infidelity / (r.bound * r.bound))
        .fold(0.0, f64::max);
    let positive = |r: &&FidelityRecord| r.infidelity > 0.0 && r.n_d > 0;
    let mut tau_fits = Vec::new();
    for &n_d in nds {
        let pts: Vec<(f64, f64)> = records
            .iter()
            .filter(|r| r.n_d == n_d)
            .filter(positive)
            .map(|r| (r.tau, r.infidelity))
            .collect();
        if let Ok(fit) = loglog_fit(&pts) {
            tau_fits.push((n_d, fit));
        }
    }
    let mut nd_fits = Vec::new();
    for &tau in taus {
        let pts: Vec<(f64, f64)> = records
            .iter()
            .filter(|r| r.tau == tau)
            .filter(positive)
            .map(|r| (r.n_d as f64, r.infidelity))
            .collect();
        if let Ok(fit) = loglog_fit(&pts) {
            nd_fits.push((tau, fit));
        }
    }
    Ok(DdExperiment {
        norm,
        records,
        max_bound_ratio,
        tau_fits,
        nd_fits,
    })
}

/// `[X_all, Z_all]`, after checking that both lie in the stabilizer group and
/// that they decouple every weight-one error to first order.
pub fn universal_decoupling_group(c: &StabilizerCode) -> Result<Vec<PauliString>> {
    let group = vec![pulse_target(c.n, 0), pulse_target(c.n, 1)];
    for g in &group {
        if !c.in_stabilizer_group(g)? {
            return Err(Error::CodeInconsistency(format!("{g} is not in the stabilizer group")));
        }
    }
    let check = first_order_decoupling(c.n, &group)?;
    if !check.all_cancel {
        return Err(Error::CodeInconsistency(format!(
            "weight-one errors {:?} are not decoupled",
            check.surviving
        )));
    }
    Ok(group)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecouplingCheck {
    pub errors_checked: usize,
    pub all_cancel: bool,
    /// Weight-one errors whose orbit sum is nonzero.
    pub surviving: Vec<String>,
}

/// For every weight-one Pauli `E`, the orbit sum `Σ_g gEg†` over the group generated
/// by `pair` is `(1 + s₁)(1 + s₂)·E`, where `sᵢ = ±1` is the commutation sign with
/// `pair[i]`; it vanishes iff `E` anticommutes with at least one of them.
pub fn first_order_decoupling(n: usize, pair: &[PauliString]) -> Result<DecouplingCheck> {
    if pair.len() != 2 {
        return Err(Error::Parameter("decoupling check expects two group generators".into()));
    }
    let mut surviving = Vec::new();
    let mut checked = 0;
    for q in 0..n {
        for letter in ['X', 'Y', 'Z'] {
            let e = PauliString::from_sparse(n, &[(q, letter)])?;
            checked += 1;
            let s1 = if pair[0].commutes(&e)? { 1 } else { -1 };
            let s2 = if pair[1].commutes(&e)? { 1 } else { -1 };
            if (1 + s1) * (1 + s2) != 0 {
                surviving.push(e.to_string());
            }
        }
    }
    Ok(DecouplingCheck {
        errors_checked: checked,
        all_cancel: surviving.is_empty(),
        surviving,
    })
}

/// Largest entry of `Σ_{g ∈ {I, A, B, AB}} g E g†` computed with dense matrices.
pub fn orbit_sum_max_entry(e: &PauliString, a: &PauliString, b: &PauliString) -> Result<f64> {
    let em = super::pauli_matrix(e)?;
    let am = super::pauli_matrix(a)?;
    let bm = super::pauli_matrix(b)?;
    let abm = &am * &bm;
    let mut sum = em.clone();
    for g in [&am, &bm, &abm] {
        sum += g * &em * g.adjoint();
    }
    Ok(sum.iter().map(|z| z.norm()).fold(0.0, f64::max))
}
