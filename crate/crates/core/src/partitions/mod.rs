//! Young diagram combinatorics: partitions, conjugation, arm/leg and the
//! deformed hooks, inside/outside corners, plane partitions and exhaustive
//! enumeration.

mod corners;
mod enumerate;
mod plane;

use alloc::vec::Vec;
use core::fmt;

pub use corners::{Coord, CornerData};
pub use enumerate::{
    enumerate_partitions, enumerate_plane_partitions, partition_count, plane_partitions_by_size,
};
pub use plane::PlanePartition;

use crate::arith::{lf_canonicalize, ScaledForm};
use crate::error::{Error, Result};

/// Zero-indexed `(row, column)` cell of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    /// Row, counted from the top.
    pub row: usize,
    /// Column, counted from the left.
    pub col: usize,
}

impl Cell {
    /// `(row, col)`.
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates the parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Whether the cell lies in the diagram.
    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.col < self.part(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| Cell::new(i, j)))
    }

    /// Reflection in the main diagonal.
    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.part(0))
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains_cell(cell) {
            Ok(())
        } else {
            Err(Error::CellNotInPartition(cell.row, cell.col))
        }
    }

    /// Cells strictly to the right of `cell` in its row.
    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.part(cell.row) - cell.col - 1)
    }

    /// Cells strictly below `cell` in its column.
    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        let column_height = self.parts.iter().take_while(|&&p| p > cell.col).count();
        Ok(column_height - cell.row - 1)
    }

    /// Classical hook `a + ℓ + 1`.
    pub fn hook(&self, cell: Cell) -> Result<usize> {
        Ok(self.arm(cell)? + self.leg(cell)? + 1)
    }

    /// Upper hook `u·ℓ + v·(a + 1)`.
    pub fn hook_upper(&self, cell: Cell) -> Result<ScaledForm> {
        let (a, l) = (self.arm(cell)?, self.leg(cell)?);
        Ok(uv_form(l, a + 1))
    }

    /// Lower hook `u·(ℓ + 1) + v·a`.
    pub fn hook_lower(&self, cell: Cell) -> Result<ScaledForm> {
        let (a, l) = (self.arm(cell)?, self.leg(cell)?);
        Ok(uv_form(l + 1, a))
    }

    /// Inside-corner labeling.
    pub fn corner_data(&self) -> CornerData {
        CornerData::of(self)
    }

    /// Indices `1..=m` of the removable (true inside) corners.
    pub fn removable_corners(&self) -> Vec<usize> {
        (1..=self.corner_data().m()).collect()
    }

    /// Removes inside corner `index` (1-based, bottom-left first).
    pub fn remove_corner(&self, index: usize) -> Result<Partition> {
        let corners = self.corner_data();
        let cell = corners.corner(index)?;
        let mut parts = self.parts.clone();
        parts[cell.row] -= 1;
        if parts[cell.row] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Adds a cell, provided the result is still a partition.
    pub fn add_cell(&self, cell: Cell) -> Result<Partition> {
        let mut parts = self.parts.clone();
        if cell.row == parts.len() {
            parts.push(0);
        }
        match parts.get_mut(cell.row) {
            Some(p) if *p == cell.col => *p += 1,
            _ => return Err(Error::InvalidPartition),
        }
        Partition::new(parts)
    }
}

/// `μ ⊆ λ`.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.is_contained_in(lambda)
}

fn uv_form(u: usize, v: usize) -> ScaledForm {
    let c = |x: usize| i64::try_from(x).expect("hook coefficient fits i64").into();
    lf_canonicalize([c(u), c(v), 0.into()])
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition renders as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl core::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPartition))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
