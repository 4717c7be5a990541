//! Independent oracles for integration tests: letter-level Pauli arithmetic,
//! brute-force stabilizer groups and Kronecker-product matrices.
#![allow(dead_code)]

use std::collections::HashSet;

use aqc_codes::PauliString;
use nalgebra::DMatrix;
use num_complex::Complex64 as C;

/// Pauli letters without phase.
pub type Letters = Vec<char>;

pub fn letters(p: &PauliString) -> Letters {
    (0..p.num_qubits()).map(|q| p.letter(q)).collect()
}

pub fn weight(a: &[char]) -> usize {
    a.iter().filter(|&&c| c != 'I').count()
}

/// Letterwise product, phase dropped.
pub fn mul(a: &[char], b: &[char]) -> Letters {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| match (x, y) {
            ('I', o) | (o, 'I') => o,
            (u, v) if u == v => 'I',
            ('X', 'Y') | ('Y', 'X') => 'Z',
            ('Y', 'Z') | ('Z', 'Y') => 'X',
            _ => 'Y',
        })
        .collect()
}

pub fn commute(a: &[char], b: &[char]) -> bool {
    a.iter()
        .zip(b)
        .filter(|(&x, &y)| x != 'I' && y != 'I' && x != y)
        .count()
        % 2
        == 0
}

/// Every product of a subset of `gens`, phases dropped.
pub fn group(gens: &[Letters]) -> HashSet<Letters> {
    let n = gens.first().map_or(0, |g| g.len());
    let mut out = HashSet::from([vec!['I'; n]]);
    for g in gens {
        let extra: Vec<Letters> = out.iter().map(|e| mul(e, g)).collect();
        out.extend(extra);
    }
    out
}

/// Rank over GF(2) of the symplectic rows `(x | z)`.
pub fn gf2_rank(rows: &[Letters]) -> usize {
    let mut m: Vec<Vec<bool>> = rows
        .iter()
        .map(|r| {
            let x = r.iter().map(|&c| c == 'X' || c == 'Y');
            let z = r.iter().map(|&c| c == 'Z' || c == 'Y');
            x.chain(z).collect()
        })
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c]) else { continue };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] {
                let pivot = m[rank].clone();
                for (a, b) in m[i].iter_mut().zip(pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// All weight-`w` Paulis on `n` qubits.
pub fn all_of_weight(n: usize, w: usize) -> Vec<Letters> {
    fn rec(n: usize, w: usize, start: usize, cur: &mut Letters, out: &mut Vec<Letters>) {
        if w == 0 {
            out.push(cur.clone());
            return;
        }
        for q in start..n {
            for l in ['X', 'Y', 'Z'] {
                cur[q] = l;
                rec(n, w - 1, q + 1, cur, out);
                cur[q] = 'I';
            }
        }
    }
    let mut out = Vec::new();
    rec(n, w, 0, &mut vec!['I'; n], &mut out);
    out
}

/// Smallest weight ≤ `max_w` of an operator commuting with `gens` but outside their group.
pub fn brute_distance(gens: &[Letters], max_w: usize) -> Option<usize> {
    let n = gens[0].len();
    let g = group(gens);
    (1..=max_w).find(|&w| {
        all_of_weight(n, w)
            .iter()
            .any(|e| gens.iter().all(|s| commute(s, e)) && !g.contains(e))
    })
}

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn single(l: char) -> DMatrix<C> {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    match l {
        'I' => DMatrix::from_row_slice(2, 2, &[o, z, z, o]),
        'X' => DMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        'Y' => DMatrix::from_row_slice(2, 2, &[z, c(0.0, -1.0), c(0.0, 1.0), z]),
        'Z' => DMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
        _ => panic!("bad letter {l}"),
    }
}

/// Kronecker product in qubit order (qubit 0 leftmost).
pub fn kron_letters(a: &[char]) -> DMatrix<C> {
    a.iter()
        .fold(DMatrix::from_element(1, 1, c(1.0, 0.0)), |acc, &l| acc.kronecker(&single(l)))
}

/// Dense matrix of `p` including its phase, built from Kronecker products.
pub fn kron_pauli(p: &PauliString) -> DMatrix<C> {
    let sign = match p.display_phase() {
        0 => c(1.0, 0.0),
        1 => c(0.0, 1.0),
        2 => c(-1.0, 0.0),
        _ => c(0.0, -1.0),
    };
    kron_letters(&letters(p)) * sign
}

pub fn kron_hamiltonian(h: &aqc_codes::PauliHamiltonian) -> DMatrix<C> {
    let d = 1usize << h.num_qubits();
    h.terms()
        .iter()
        .fold(DMatrix::zeros(d, d), |acc, t| acc + kron_pauli(&t.pauli) * c(t.coeff, 0.0))
}

/// `Π (I + P)/2`.
pub fn projector(ops: &[DMatrix<C>]) -> DMatrix<C> {
    let d = ops[0].nrows();
    let id = DMatrix::<C>::identity(d, d);
    ops.iter()
        .fold(id.clone(), |acc, p| acc * (&id + p) * c(0.5, 0.0))
}

pub fn max_abs(m: &DMatrix<C>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `exp(−iHt)` for Hermitian `H` by eigendecomposition.
pub fn expm_hermitian(h: &DMatrix<C>, t: f64) -> DMatrix<C> {
    let eig = h.clone().symmetric_eigen();
    let d = DMatrix::from_diagonal(&eig.eigenvalues.map(|e| c(0.0, -e * t).exp()));
    &eig.eigenvectors * d * eig.eigenvectors.adjoint()
}
