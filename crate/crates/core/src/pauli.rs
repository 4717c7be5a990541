//! Pauli operators in binary symplectic form.
//!
//! A [`PauliString`] on `n` qubits is `i^phase · ⊗_q X_q^{x_q} Z_q^{z_q}`,
//! with the X factor written before the Z factor on every qubit. Under this
//! convention `Y = i·XZ`, so a `Y` letter is stored as `x = z = 1` together
//! with one unit of phase.
//!
//! The text form is an optional sign prefix (`+`, `-`, `+i`, `-i`) followed by
//! one letter from `IXYZ` per qubit, qubit 0 first. The sign is the overall
//! coefficient of the letter string, so `-iY` is `-i` times the Pauli `Y`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_dim, Error, Result};
use crate::gf2::BitVec;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: BitVec,
    z: BitVec,
    phase: u8,
}

/// Commutation parity of two Pauli operators (`true` = anticommute).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticProduct(pub bool);

impl SymplecticProduct {
    pub fn commutes(self) -> bool {
        !self.0
    }
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            phase: 0,
        }
    }

    /// Builds `i^phase · X^x Z^z` directly from its symplectic components.
    pub fn from_parts(x: BitVec, z: BitVec, phase: u8) -> Result<Self> {
        check_dim(x.len(), z.len())?;
        Ok(Self {
            n: x.len(),
            x,
            z,
            phase: phase % 4,
        })
    }

    /// Hermitian Pauli with the given letters on the given qubits and identity elsewhere.
    pub fn from_sparse(n: usize, letters: &[(usize, char)]) -> Result<Self> {
        let mut p = Self::identity(n);
        for &(q, c) in letters {
            if q >= n {
                return Err(Error::Parameter(format!("qubit {q} out of range for {n} qubits")));
            }
            p.set_letter(q, c)?;
        }
        Ok(p)
    }

    /// `X` on every listed qubit.
    pub fn x_on(n: usize, qubits: &[usize]) -> Self {
        Self::uniform(n, qubits, 'X')
    }

    /// `Z` on every listed qubit.
    pub fn z_on(n: usize, qubits: &[usize]) -> Self {
        Self::uniform(n, qubits, 'Z')
    }

    fn uniform(n: usize, qubits: &[usize], c: char) -> Self {
        let letters: Vec<(usize, char)> = qubits.iter().map(|&q| (q, c)).collect();
        Self::from_sparse(n, &letters).expect("qubit index out of range")
    }

    /// Overwrites qubit `q` with a Hermitian letter, keeping the displayed sign.
    fn set_letter(&mut self, q: usize, c: char) -> Result<()> {
        let had_y = self.x.get(q) && self.z.get(q);
        let (xb, zb) = match c {
            'I' => (false, false),
            'X' => (true, false),
            'Y' => (true, true),
            'Z' => (false, true),
            other => return Err(Error::Parse(format!("invalid Pauli letter '{other}'"))),
        };
        self.x.set(q, xb);
        self.z.set(q, zb);
        let delta = (xb && zb) as i32 - had_y as i32;
        self.phase = (self.phase as i32 + delta).rem_euclid(4) as u8;
        Ok(())
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    #[inline]
    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    /// Exponent of `i` in the X-before-Z product form.
    #[inline]
    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// Exponent of `i` multiplying the Hermitian letter string (the sign shown in text form).
    pub fn display_phase(&self) -> u8 {
        let ys = self.x.and_count(&self.z) % 4;
        ((self.phase as usize + 4 - ys) % 4) as u8
    }

    /// Same operator with the displayed sign forced to `+1`.
    pub fn without_sign(&self) -> Self {
        let mut p = self.clone();
        p.phase = (self.x.and_count(&self.z) % 4) as u8;
        p
    }

    pub fn letter(&self, q: usize) -> char {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        }
    }

    pub fn weight(&self) -> usize {
        self.x.or_count(&self.z)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&q| self.x.get(q) || self.z.get(q))
            .collect()
    }

    /// True when every tensor factor is the identity (the phase is ignored).
    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn eq_up_to_phase(&self, other: &Self) -> bool {
        self.x == other.x && self.z == other.z
    }

    /// `x ‖ z`, the binary symplectic vector of length `2n`.
    pub fn symplectic_vector(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    pub fn symplectic_product(&self, other: &Self) -> Result<SymplecticProduct> {
        check_dim(self.n, other.n)?;
        Ok(SymplecticProduct(self.anticommutes_unchecked(other)))
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        Ok(self.symplectic_product(other)?.commutes())
    }

    #[inline]
    pub(crate) fn anticommutes_unchecked(&self, other: &Self) -> bool {
        (self.x.and_count(&other.z) + self.z.and_count(&other.x)) % 2 == 1
    }

    /// Operator product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        Ok(self.multiply_unchecked(other))
    }

    pub(crate) fn multiply_unchecked(&self, other: &Self) -> Self {
        // X^a Z^b X^c Z^d = (-1)^{b·c} X^{a+c} Z^{b+d}
        let swaps = self.z.and_count(&other.x);
        let phase = (self.phase as usize + other.phase as usize + 2 * swaps) % 4;
        Self {
            n: self.n,
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: phase as u8,
        }
    }

    pub fn inverse(&self) -> Self {
        // (i^p X^x Z^z)^{-1} = i^{-p} Z^z X^x = i^{-p} (-1)^{x·z} X^x Z^z
        let ys = self.x.and_count(&self.z);
        let phase = (4 - self.phase as usize + 2 * ys) % 4;
        Self {
            n: self.n,
            x: self.x.clone(),
            z: self.z.clone(),
            phase: phase as u8,
        }
    }

    /// Conjugation by Hadamard on each listed qubit: X ↔ Z there, and Y → −Y.
    pub fn hadamard_conjugate<I: IntoIterator<Item = usize>>(&self, qubits: I) -> Self {
        let mut out = self.clone();
        let mut extra = 0usize;
        for q in qubits {
            let (xb, zb) = (self.x.get(q), self.z.get(q));
            if xb && zb {
                extra += 2;
            }
            out.x.set(q, zb);
            out.z.set(q, xb);
        }
        out.phase = ((out.phase as usize + extra) % 4) as u8;
        out
    }

    /// Parses the text form and checks that it describes exactly `n` qubits.
    pub fn parse_with_len(text: &str, n: usize) -> Result<Self> {
        let p: Self = text.parse()?;
        if p.n != n {
            return Err(Error::Parse(format!(
                "Pauli string '{text}' has {} qubits, expected {n}",
                p.n
            )));
        }
        Ok(p)
    }

    /// Ordering used to break ties between operators of equal weight:
    /// x bits first, then z bits, each read from qubit 0 upward.
    pub fn cmp_bits(&self, other: &Self) -> std::cmp::Ordering {
        self.x
            .cmp_lex(&other.x)
            .then_with(|| self.z.cmp_lex(&other.z))
    }
}

/// Free-function form of [`PauliString::parse_with_len`].
pub fn parse_pauli(text: &str, n: usize) -> Result<PauliString> {
    PauliString::parse_with_len(text, n)
}

pub fn format_pauli(p: &PauliString) -> String {
    p.to_string()
}

impl Mul for &PauliString {
    type Output = PauliString;

    /// Panics on a qubit-count mismatch; use [`PauliString::multiply`] for a checked product.
    fn mul(self, rhs: &PauliString) -> PauliString {
        self.multiply(rhs).expect("Pauli qubit counts differ")
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (sign, body) = if let Some(rest) = s.strip_prefix("+i") {
            (1u8, rest)
        } else if let Some(rest) = s.strip_prefix("-i") {
            (3, rest)
        } else if let Some(rest) = s.strip_prefix('+') {
            (0, rest)
        } else if let Some(rest) = s.strip_prefix('-') {
            (2, rest)
        } else if let Some(rest) = s.strip_prefix('i') {
            (1, rest)
        } else {
            (0, s)
        };
        let n = body.chars().count();
        let mut p = PauliString::identity(n);
        for (q, c) in body.chars().enumerate() {
            p.set_letter(q, c)
                .map_err(|_| Error::Parse(format!("invalid character '{c}' in Pauli string '{s}'")))?;
        }
        p.phase = (p.phase + sign) % 4;
        Ok(p)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.display_phase() {
            0 => "",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        f.write_str(prefix)?;
        for q in 0..self.n {
            write!(f, "{}", self.letter(q))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl Serialize for PauliString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
