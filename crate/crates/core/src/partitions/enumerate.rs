use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{Partition, PlanePartition};

/// All partitions of `n`, each once, in reverse-lexicographic order
/// (`(n)` first, `(1, …, 1)` last).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// `p(n)` by the standard coin-change recurrence over part sizes.
pub fn partition_count(n: usize) -> u64 {
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

/// Plane partitions grouped by size, for sizes `0..=max_size`. Each level is
/// grown from the previous one by adding one addable box; duplicates collapse
/// in an ordered set, so every level is in a fixed deterministic order.
pub fn plane_partitions_by_size(max_size: usize) -> Vec<Vec<PlanePartition>> {
    let mut levels = vec![vec![PlanePartition::empty()]];
    for _ in 0..max_size {
        let next: BTreeSet<PlanePartition> = levels
            .last()
            .expect("level 0 present")
            .iter()
            .flat_map(|pi| {
                pi.addable_boxes()
                    .into_iter()
                    .map(move |b| pi.with_box(b).expect("addable box"))
            })
            .collect();
        levels.push(next.into_iter().collect());
    }
    levels
}

/// All plane partitions of size `n`, each once, in a fixed order.
pub fn enumerate_plane_partitions(n: usize) -> Vec<PlanePartition> {
    plane_partitions_by_size(n).pop().expect("at least one level")
}
