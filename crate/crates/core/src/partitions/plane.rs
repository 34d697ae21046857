use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A plane partition stored as its 3D Young diagram: a finite set of boxes
/// `(i, j, k)` closed under decreasing any coordinate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    boxes: BTreeSet<[usize; 3]>,
}

fn predecessors(b: [usize; 3]) -> impl Iterator<Item = [usize; 3]> {
    (0..3).filter(move |&a| b[a] > 0).map(move |a| {
        let mut p = b;
        p[a] -= 1;
        p
    })
}

impl PlanePartition {
    /// The empty plane partition.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates downward closure.
    pub fn from_boxes<I: IntoIterator<Item = [usize; 3]>>(boxes: I) -> Result<Self> {
        let boxes: BTreeSet<_> = boxes.into_iter().collect();
        if boxes.iter().all(|&b| predecessors(b).all(|p| boxes.contains(&p))) {
            Ok(PlanePartition { boxes })
        } else {
            Err(Error::InvalidPlanePartition)
        }
    }

    /// From the height array of the projection to the first two axes: rows
    /// and columns must be weakly decreasing. Zero entries are allowed.
    pub fn from_heights(rows: &[Vec<usize>]) -> Result<Self> {
        let at = |i: usize, j: usize| rows.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0);
        let mut boxes = BTreeSet::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                let left = if j > 0 { at(i, j - 1) } else { usize::MAX };
                let up = if i > 0 { at(i - 1, j) } else { usize::MAX };
                if h > left || h > up {
                    return Err(Error::InvalidPlanePartition);
                }
                boxes.extend((0..h).map(|k| [i, j, k]));
            }
        }
        Ok(PlanePartition { boxes })
    }

    /// Height array with trailing zeros and empty rows removed.
    pub fn heights(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for &[i, j, _] in &self.boxes {
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            if rows[i].len() <= j {
                rows[i].resize(j + 1, 0);
            }
            rows[i][j] += 1;
        }
        rows
    }

    /// Boxes in lexicographic order.
    pub fn boxes(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        self.boxes.iter().copied()
    }

    /// `|π|`.
    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    /// Whether `π = ∅`.
    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Box positions that can be added keeping downward closure.
    pub fn addable_boxes(&self) -> Vec<[usize; 3]> {
        if self.boxes.is_empty() {
            return vec![[0, 0, 0]];
        }
        let mut out = BTreeSet::new();
        for &b in &self.boxes {
            for a in 0..3 {
                let mut c = b;
                c[a] += 1;
                if !self.boxes.contains(&c) && predecessors(c).all(|p| self.boxes.contains(&p)) {
                    out.insert(c);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Adds a box; fails if the result is not downward closed.
    pub fn with_box(&self, b: [usize; 3]) -> Result<Self> {
        if self.boxes.contains(&b) || !predecessors(b).all(|p| self.boxes.contains(&p)) {
            return Err(Error::InvalidPlanePartition);
        }
        let mut boxes = self.boxes.clone();
        boxes.insert(b);
        Ok(PlanePartition { boxes })
    }

    /// Relabels axes: the new coordinate `i` of each box is its old coordinate
    /// `perm[i]`.
    pub fn permute_axes(&self, perm: [usize; 3]) -> Self {
        PlanePartition {
            boxes: self.boxes.iter().map(|b| perm.map(|i| b[i])).collect(),
        }
    }
}

impl fmt::Display for PlanePartition {
    /// Rows of the height array separated by `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.heights().iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, h) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{h}")?;
            }
        }
        Ok(())
    }
}

impl core::str::FromStr for PlanePartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|h| h.trim().parse::<usize>().map_err(|_| Error::InvalidPlanePartition))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_heights(&rows)
    }
}
