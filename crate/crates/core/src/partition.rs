//! Partition refinement over dense column codes. Shared by the brute-force
//! search and the entropy heuristic.

use std::collections::HashMap;

use crate::resolving::Table;

/// A table with every column re-coded to `0..ncodes[c]`, first-seen order.
#[derive(Debug, Clone)]
pub(crate) struct Coded {
    pub rows: usize,
    pub codes: Vec<Vec<u32>>,
    pub ncodes: Vec<u32>,
}

impl Coded {
    pub fn from_table<T: Table + ?Sized>(table: &T) -> Coded {
        let rows = table.rows();
        let columns = (0..table.cols())
            .map(|c| (0..rows).map(|r| table.entry(r, c)).collect::<Vec<_>>())
            .collect();
        Coded::from_columns(rows, columns)
    }

    pub fn from_columns<V: Copy + Eq + std::hash::Hash>(rows: usize, columns: Vec<Vec<V>>) -> Coded {
        let mut codes = Vec::with_capacity(columns.len());
        let mut ncodes = Vec::with_capacity(columns.len());
        for col in columns {
            debug_assert_eq!(col.len(), rows);
            let mut seen: HashMap<V, u32> = HashMap::new();
            let coded = col
                .iter()
                .map(|v| {
                    let next = seen.len() as u32;
                    *seen.entry(*v).or_insert(next)
                })
                .collect();
            ncodes.push(seen.len() as u32);
            codes.push(coded);
        }
        Coded { rows, codes, ncodes }
    }

    pub fn cols(&self) -> usize {
        self.codes.len()
    }
}

/// Scratch space for [`Refiner::refine`]. Reusing one avoids clearing a
/// `classes x codes` table on every call.
#[derive(Debug, Default)]
pub(crate) struct Refiner {
    stamp: Vec<u32>,
    id: Vec<u32>,
    epoch: u32,
    fallback: HashMap<u64, u32>,
}

const DENSE_LIMIT: usize = 1 << 22;

impl Refiner {
    pub fn new() -> Self {
        Refiner::default()
    }

    /// Split every class of `classes` by `column`. Writes the refined class of
    /// each row into `out` (numbered in first-seen row order) and returns the
    /// new class count.
    pub fn refine(&mut self, classes: &[u32], nclasses: u32, column: &[u32], ncodes: u32, out: &mut Vec<u32>) -> u32 {
        out.clear();
        let width = nclasses as usize * ncodes as usize;
        let mut next = 0u32;
        if width <= DENSE_LIMIT {
            if self.stamp.len() < width {
                self.stamp.resize(width, 0);
                self.id.resize(width, 0);
            }
            self.epoch = self.epoch.wrapping_add(1);
            if self.epoch == 0 {
                self.stamp.iter_mut().for_each(|s| *s = 0);
                self.epoch = 1;
            }
            for (&c, &code) in classes.iter().zip(column) {
                let key = c as usize * ncodes as usize + code as usize;
                if self.stamp[key] != self.epoch {
                    self.stamp[key] = self.epoch;
                    self.id[key] = next;
                    next += 1;
                }
                out.push(self.id[key]);
            }
        } else {
            self.fallback.clear();
            for (&c, &code) in classes.iter().zip(column) {
                let key = ((c as u64) << 32) | code as u64;
                let id = *self.fallback.entry(key).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
                out.push(id);
            }
        }
        next
    }
}

/// Class sizes of a labelling with `nclasses` classes.
pub(crate) fn class_sizes(classes: &[u32], nclasses: u32) -> Vec<u32> {
    let mut sizes = vec![0u32; nclasses as usize];
    for &c in classes {
        sizes[c as usize] += 1;
    }
    sizes
}

/// The lexicographically smallest pair `(u, v)` (by `v`, then `u`) sharing a
/// class, if any.
pub(crate) fn first_collision(classes: &[u32], nclasses: u32) -> Option<(usize, usize)> {
    let mut first = vec![usize::MAX; nclasses as usize];
    for (v, &c) in classes.iter().enumerate() {
        let slot = &mut first[c as usize];
        if *slot == usize::MAX {
            *slot = v;
        } else {
            return Some((*slot, v));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refine_splits_by_pairs() {
        let mut r = Refiner::new();
        let mut out = Vec::new();
        let n = r.refine(&[0, 0, 1, 1], 2, &[0, 1, 0, 0], 2, &mut out);
        assert_eq!(n, 3);
        assert_eq!(out, vec![0, 1, 2, 2]);
        assert_eq!(first_collision(&out, n), Some((2, 3)));
        assert_eq!(class_sizes(&out, n), vec![1, 1, 2]);
    }

    #[test]
    fn repeated_calls_do_not_leak_state() {
        let mut r = Refiner::new();
        let mut out = Vec::new();
        for _ in 0..3 {
            let n = r.refine(&[0, 0, 0], 1, &[2, 2, 0], 3, &mut out);
            assert_eq!(n, 2);
            assert_eq!(out, vec![0, 0, 1]);
        }
    }
}
