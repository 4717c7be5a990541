//! Piecewise-constant adiabatic evolution and cat-state preparation.

use serde::{Deserialize, Serialize};

use super::{evolve, states::cat_state, Spectrum, StateVector, EIGEN_MAX_QUBITS};
use crate::error::{check_dim, Error, Result};
use crate::hamiltonians::{cat_prep_hamiltonians, AnnealSchedule, CatBasis};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceRecord {
    /// End time of the slice.
    pub t: f64,
    /// Interpolation parameter at the slice midpoint, where the slice Hamiltonian is frozen.
    pub s: f64,
    pub energy: f64,
    /// Weight in the ground space of the slice Hamiltonian; absent above the eigensolver size.
    pub ground_overlap: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct AnnealTrace {
    pub state: StateVector,
    pub slices: Vec<SliceRecord>,
}

pub fn anneal(psi0: &StateVector, schedule: &AnnealSchedule, steps: usize) -> Result<AnnealTrace> {
    anneal_observed(psi0, schedule, steps, |_, _| Ok(()))
}

/// Splits `[0, T]` into `steps` slices and evolves each one under `H(s)` frozen at
/// its midpoint. `observer` sees the state after every slice (index from 0).
pub fn anneal_observed<F>(
    psi0: &StateVector,
    schedule: &AnnealSchedule,
    steps: usize,
    mut observer: F,
) -> Result<AnnealTrace>
where
    F: FnMut(usize, &StateVector) -> Result<()>,
{
    if steps < 1 {
        return Err(Error::Parameter("anneal needs at least one step".into()));
    }
    check_dim(schedule.num_qubits(), psi0.num_qubits())?;
    let dt = schedule.total_time / steps as f64;
    let small = psi0.num_qubits() <= EIGEN_MAX_QUBITS;
    let mut state = psi0.clone();
    let mut slices = Vec::with_capacity(steps);
    for j in 0..steps {
        let s = schedule.s_at((j as f64 + 0.5) * dt);
        let h = schedule.hamiltonian_at(s);
        let ground_overlap = if small {
            let spectrum = Spectrum::of_hamiltonian(&h)?;
            state = spectrum.evolve(&state, dt);
            Some(spectrum.ground_overlap(&state))
        } else {
            state = evolve(&state, &h, dt)?;
            None
        };
        state.check_unit_norm("anneal")?;
        observer(j, &state)?;
        slices.push(SliceRecord {
            t: (j + 1) as f64 * dt,
            s,
            energy: state.energy(&h)?,
            ground_overlap,
        });
    }
    Ok(AnnealTrace { state, slices })
}

/// Largest tolerated `|⟨conserved⟩ − 1|` along a cat preparation.
pub const CONSERVATION_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct CatPreparation {
    pub m: usize,
    pub basis: CatBasis,
    pub total_time: f64,
    pub steps: usize,
    pub state: StateVector,
    /// `|⟨ψ_target|ψ⟩|²` with the symmetric cat state.
    pub target_overlap: f64,
    /// Largest `|⟨conserved⟩ − 1|` over the initial state and every slice.
    pub max_drift: f64,
    pub trace: AnnealTrace,
}

/// Anneals from the driver ground state to the Ising chain; fails if the
/// conserved parity drifts by more than [`CONSERVATION_TOLERANCE`].
pub fn prepare_cat(m: usize, basis: CatBasis, total_time: f64, steps: usize) -> Result<CatPreparation> {
    if !(2..=12).contains(&m) {
        return Err(Error::Parameter(format!("cat preparation supports 2 ≤ m ≤ 12, got {m}")));
    }
    let (h0, h1) = cat_prep_hamiltonians(m, basis)?;
    let schedule = AnnealSchedule::linear(total_time, h0, h1)?;
    let psi0 = match basis {
        CatBasis::Z => StateVector::plus_state(m)?,
        CatBasis::X => StateVector::zero_state(m)?,
    };
    let conserved = basis.conserved_operator(m);
    let drift = |psi: &StateVector| -> Result<f64> { Ok((psi.expectation_pauli(&conserved)? - 1.0).norm()) };
    let mut max_drift = drift(&psi0)?;
    let trace = anneal_observed(&psi0, &schedule, steps, |j, psi| {
        let d = drift(psi)?;
        max_drift = max_drift.max(d);
        if d > CONSERVATION_TOLERANCE {
            return Err(Error::Numerical(format!(
                "conserved parity drifted by {d:e} at slice {j}"
            )));
        }
        Ok(())
    })?;
    let target_overlap = cat_state(m, basis)?.overlap(&trace.state)?;
    Ok(CatPreparation {
        m,
        basis,
        total_time,
        steps,
        state: trace.state.clone(),
        target_overlap,
        max_drift,
        trace,
    })
}

/// Doubles the anneal time from `t_start` until the target overlap exceeds
/// `threshold`, using `steps_per_time` slices per unit time (at least 16).
/// Returns every attempt; the last one is the converged run.
pub fn prepare_cat_converged(
    m: usize,
    basis: CatBasis,
    t_start: f64,
    steps_per_time: f64,
    threshold: f64,
    max_doublings: usize,
) -> Result<Vec<CatPreparation>> {
    if !(t_start > 0.0 && steps_per_time > 0.0) {
        return Err(Error::Parameter("start time and step density must be positive".into()));
    }
    let mut runs: Vec<CatPreparation> = Vec::new();
    let mut t = t_start;
    for _ in 0..=max_doublings {
        let steps = ((t * steps_per_time).ceil() as usize).max(16);
        let run = prepare_cat(m, basis, t, steps)?;
        let done = run.target_overlap > threshold;
        runs.push(run);
        if done {
            return Ok(runs);
        }
        t *= 2.0;
    }
    let best = runs.last().map(|r| r.target_overlap).unwrap_or(0.0);
    Err(Error::Numerical(format!(
        "cat preparation did not reach overlap {threshold} after {max_doublings} doublings (last {best})"
    )))
}
