//! Analytic cat and Bell states, the code's initial state, and codespace restriction.

use nalgebra::DMatrix;

use super::{StateVector, C64, DEGENERACY_TOLERANCE};
use crate::codes::{build_6k2k2, qubit, Role, StabilizerCode};
use crate::error::{check_dim, Error, Result};
use crate::gf2;
use crate::hamiltonians::{CatBasis, PauliHamiltonian};
use crate::pauli::PauliString;

/// `(|0…0⟩ + |1…1⟩)/√2` for [`CatBasis::Z`], `(|+…+⟩ + |−…−⟩)/√2` for [`CatBasis::X`].
pub fn cat_state(m: usize, basis: CatBasis) -> Result<StateVector> {
    if m == 0 {
        return Err(Error::Parameter("cat state needs at least one qubit".into()));
    }
    let dim = 1usize << m;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let amps = match basis {
        CatBasis::Z => (0..dim)
            .map(|b| if b == 0 || b == dim - 1 { C64::new(r, 0.0) } else { C64::new(0.0, 0.0) })
            .collect(),
        // |+…+⟩ + |−…−⟩ keeps exactly the even-weight basis states
        CatBasis::X => {
            let a = r * 2.0 / (dim as f64).sqrt();
            (0..dim)
                .map(|b: usize| if b.count_ones().is_multiple_of(2) { C64::new(a, 0.0) } else { C64::new(0.0, 0.0) })
                .collect()
        }
    };
    StateVector::from_amplitudes(m, amps)
}

/// Qubit groups of the initial state of the `k` code: the `(i,x)` qubits, the
/// `(i,0)` Bell pairs and the `(i,z)` qubits, in flat-index order.
pub fn initial_state_layout(k: usize) -> (Vec<usize>, Vec<[usize; 2]>, Vec<usize>) {
    let m = 2 * k;
    let xs = (1..=m).map(|i| qubit(i, Role::X)).collect();
    let pairs = (1..=k)
        .map(|i| [qubit(2 * i - 1, Role::Zero), qubit(2 * i, Role::Zero)])
        .collect();
    let zs = (1..=m).map(|i| qubit(i, Role::Z)).collect();
    (xs, pairs, zs)
}

/// Assembles the initial state from its factors: an X-basis cat on the `(i,x)`
/// qubits, one Bell pair per `(2i−1,0),(2i,0)`, a Z-basis cat on the `(i,z)` qubits.
pub fn assemble_initial_state(
    k: usize,
    x_cat: StateVector,
    bell: StateVector,
    z_cat: StateVector,
) -> Result<StateVector> {
    let (xs, pairs, zs) = initial_state_layout(k);
    check_dim(xs.len(), x_cat.num_qubits())?;
    check_dim(2, bell.num_qubits())?;
    check_dim(zs.len(), z_cat.num_qubits())?;
    let mut factors = vec![(xs, x_cat)];
    factors.extend(pairs.into_iter().map(|p| (p.to_vec(), bell.clone())));
    factors.push((zs, z_cat));
    StateVector::from_factors(6 * k, &factors)
}

/// The exact initial state on `6k` qubits.
pub fn build_initial_state(k: usize) -> Result<StateVector> {
    if k < 1 {
        return Err(Error::Parameter(format!("k must be at least 1, got {k}")));
    }
    if 6 * k > super::MAX_STATE_QUBITS {
        return Err(Error::Resource(format!(
            "initial state for k={k} needs {} qubits, limit is {}",
            6 * k,
            super::MAX_STATE_QUBITS
        )));
    }
    let m = 2 * k;
    assemble_initial_state(
        k,
        cat_state(m, CatBasis::X)?,
        cat_state(2, CatBasis::Z)?,
        cat_state(m, CatBasis::Z)?,
    )
}

/// The operators whose joint +1 eigenspace is spanned by the initial state:
/// all generators plus `X̄_{2i−1}X̄_{2i}` and `Z̄_{2i−1}Z̄_{2i}` in their weight-two form.
pub fn initial_state_stabilizers(k: usize) -> Result<Vec<PauliString>> {
    let c = build_6k2k2(k)?;
    let mut ops = c.generators.clone();
    for i in 1..=k {
        let pair = [qubit(2 * i - 1, Role::Zero), qubit(2 * i, Role::Zero)];
        ops.push(PauliString::x_on(c.n, &pair));
        ops.push(PauliString::z_on(c.n, &pair));
    }
    Ok(ops)
}

/// `‖Pψ − ψ‖`.
pub fn stabilizer_deviation(psi: &StateVector, p: &PauliString) -> Result<f64> {
    psi.apply_pauli(p)?.distance(psi)
}

/// Orthonormal basis of the joint +1 eigenspace of commuting Hermitian Paulis,
/// found by projecting computational basis states and orthogonalizing.
pub fn joint_eigenspace(n: usize, ops: &[PauliString]) -> Result<Vec<StateVector>> {
    for p in ops {
        check_dim(n, p.num_qubits())?;
        if p.display_phase() % 2 == 1 {
            return Err(Error::Parameter(format!("{p} is not Hermitian")));
        }
    }
    for (i, a) in ops.iter().enumerate() {
        for b in &ops[i + 1..] {
            if !a.commutes(b)? {
                return Err(Error::Parameter(format!("{a} and {b} do not commute")));
            }
        }
    }
    let rank = if ops.is_empty() {
        0
    } else {
        gf2::rank(&ops.iter().map(|p| p.symplectic_vector()).collect::<Vec<_>>())
    };
    let expected = 1usize << (n - rank);
    let mut basis: Vec<StateVector> = Vec::new();
    for b in 0..1usize << n {
        if basis.len() == expected {
            break;
        }
        let mut v = StateVector::basis_state(n, b)?;
        for p in ops {
            let pv = v.apply_pauli(p)?;
            v = StateVector {
                n,
                amps: v.amps.iter().zip(&pv.amps).map(|(a, c)| (a + c) * 0.5).collect(),
            };
        }
        for u in &basis {
            let proj = u.inner(&v)?;
            for (x, y) in v.amps.iter_mut().zip(&u.amps) {
                *x -= proj * y;
            }
        }
        if v.norm() > 1e-8 {
            basis.push(v.normalized()?);
        }
    }
    Ok(basis)
}

/// Spectrum of a Hamiltonian restricted to a code's codespace.
#[derive(Clone, Debug)]
pub struct CodespaceSpectrum {
    pub energies: Vec<f64>,
    pub ground_multiplicity: usize,
    pub gap: Option<f64>,
    pub ground_state: StateVector,
}

pub fn codespace_spectrum(h: &PauliHamiltonian, c: &StabilizerCode) -> Result<CodespaceSpectrum> {
    check_dim(c.n, h.num_qubits())?;
    let basis = joint_eigenspace(c.n, &c.generators)?;
    let dim = basis.len();
    let images: Vec<StateVector> = basis
        .iter()
        .map(|v| v.apply_hamiltonian(h))
        .collect::<Result<_>>()?;
    let mut restricted = DMatrix::<C64>::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            restricted[(i, j)] = basis[i].inner(&images[j])?;
        }
    }
    let spectrum = super::Spectrum::of_matrix(restricted);
    let coeffs = spectrum.ground_state();
    let mut amps = vec![C64::new(0.0, 0.0); 1 << c.n];
    for (j, v) in basis.iter().enumerate() {
        for (a, b) in amps.iter_mut().zip(&v.amps) {
            *a += coeffs[j] * b;
        }
    }
    let e0 = spectrum.values[0];
    Ok(CodespaceSpectrum {
        ground_multiplicity: spectrum.values.iter().filter(|&&e| e - e0 < DEGENERACY_TOLERANCE).count(),
        gap: spectrum.gap(),
        energies: spectrum.values,
        ground_state: StateVector::from_amplitudes(c.n, amps)?,
    })
}
