use alloc::vec::Vec;

use super::{Cell, Partition};
use crate::error::{Error, Result};

/// A corner coordinate: finite, or one of the two artificial infinities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coord {
    /// Ordinary coordinate (may be `-1` for the artificial corners).
    Finite(i64),
    /// The artificial `∞`.
    Inf,
}

impl Coord {
    /// The finite value.
    ///
    /// # Panics
    /// On `Inf`: the artificial infinities never enter a formula, so reaching
    /// one is an indexing bug.
    pub fn finite(self) -> i64 {
        match self {
            Coord::Finite(x) => x,
            Coord::Inf => panic!("arithmetic on an artificial infinite corner coordinate"),
        }
    }
}

/// Inside corners of a partition listed bottom-left to top-right as
/// `(ρ_0, γ_0), …, (ρ_{m+1}, γ_{m+1})`, with artificial corners
/// `(∞, -1)` at index `0` and `(-1, ∞)` at index `m + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CornerData {
    rho: Vec<Coord>,
    gamma: Vec<Coord>,
}

impl CornerData {
    pub(crate) fn of(lambda: &Partition) -> Self {
        let parts = lambda.parts();
        let mut rho = Vec::with_capacity(parts.len() + 2);
        let mut gamma = Vec::with_capacity(parts.len() + 2);
        rho.push(Coord::Inf);
        gamma.push(Coord::Finite(-1));
        // a row ends in an inside corner when the next row is strictly shorter
        for i in (0..parts.len()).rev() {
            if i + 1 == parts.len() || parts[i] > parts[i + 1] {
                rho.push(Coord::Finite(i as i64));
                gamma.push(Coord::Finite(parts[i] as i64 - 1));
            }
        }
        rho.push(Coord::Finite(-1));
        gamma.push(Coord::Inf);
        CornerData { rho, gamma }
    }

    /// Number of true inside corners.
    pub fn m(&self) -> usize {
        self.rho.len() - 2
    }

    /// `ρ_k` for `0 ≤ k ≤ m + 1`, including the sentinel.
    pub fn rho_entry(&self, k: usize) -> Coord {
        self.rho[k]
    }

    /// `γ_k` for `0 ≤ k ≤ m + 1`, including the sentinel.
    pub fn gamma_entry(&self, k: usize) -> Coord {
        self.gamma[k]
    }

    /// Finite `ρ_k`; panics on `ρ_0 = ∞`.
    pub fn rho(&self, k: usize) -> i64 {
        self.rho[k].finite()
    }

    /// Finite `γ_k`; panics on `γ_{m+1} = ∞`.
    pub fn gamma(&self, k: usize) -> i64 {
        self.gamma[k].finite()
    }

    /// All `ρ` entries.
    pub fn rhos(&self) -> &[Coord] {
        &self.rho
    }

    /// All `γ` entries.
    pub fn gammas(&self) -> &[Coord] {
        &self.gamma
    }

    /// True inside corner `k` for `1 ≤ k ≤ m`.
    pub fn corner(&self, k: usize) -> Result<Cell> {
        if k == 0 || k > self.m() {
            return Err(Error::BadCornerIndex { index: k, m: self.m() });
        }
        Ok(Cell::new(self.rho(k) as usize, self.gamma(k) as usize))
    }

    /// The true inside corners in label order.
    pub fn inside_corners(&self) -> Vec<Cell> {
        (1..=self.m()).map(|k| self.corner(k).expect("index in range")).collect()
    }

    /// Outside corners `(ρ_k + 1, γ_{k-1} + 1)` for `1 ≤ k ≤ m + 1`.
    pub fn outside_corners(&self) -> Vec<Cell> {
        (1..=self.m() + 1)
            .map(|k| Cell::new((self.rho(k) + 1) as usize, (self.gamma(k - 1) + 1) as usize))
            .collect()
    }
}
