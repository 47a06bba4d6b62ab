//! Degree-weighted node pools.

use rand::Rng;

use crate::error::{Error, Result};

/// Set of nodes, each carrying a remaining degree that doubles as its
/// sampling weight.
///
/// Weights live in a Fenwick tree over the full label range, so a draw costs
/// `O(log n)`. Labels outside the pool have weight zero.
#[derive(Debug, Clone)]
pub struct NodePool {
    tree: Vec<u64>,
    remaining: Vec<Option<usize>>,
    total: u64,
    members: usize,
}

impl NodePool {
    /// Empty pool over labels `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        Self {
            tree: vec![0; capacity + 1],
            remaining: vec![None; capacity],
            total: 0,
            members: 0,
        }
    }

    /// Pool containing every label with the given remaining degrees.
    pub fn from_degrees(degrees: &[usize]) -> Self {
        let mut pool = Self::new(degrees.len());
        for (v, &d) in degrees.iter().enumerate() {
            pool.insert(v, d);
        }
        pool
    }

    pub fn len(&self) -> usize {
        self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.remaining.get(v).is_some_and(Option::is_some)
    }

    /// Remaining degree of a member.
    pub fn remaining(&self, v: usize) -> Option<usize> {
        self.remaining.get(v).copied().flatten()
    }

    /// Sum of remaining degrees over all members.
    pub fn total(&self) -> usize {
        self.total as usize
    }

    /// Adds `v`, or replaces its remaining degree if it is already present.
    pub fn insert(&mut self, v: usize, remaining: usize) {
        if let Some(old) = self.remaining[v] {
            self.adjust(v, -(old as i64));
        } else {
            self.members += 1;
        }
        self.remaining[v] = Some(remaining);
        self.adjust(v, remaining as i64);
    }

    /// Drops `v` from the pool and returns its remaining degree.
    pub fn remove(&mut self, v: usize) -> Option<usize> {
        let d = self.remaining.get_mut(v)?.take()?;
        self.members -= 1;
        self.adjust(v, -(d as i64));
        Some(d)
    }

    /// Draws a member with probability proportional to its remaining degree
    /// and decrements it. Members at zero are never drawn.
    pub fn sample<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Result<usize> {
        if self.total == 0 {
            return Err(Error::PoolExhausted);
        }
        let target = rng.gen_range(0..self.total);
        let v = self.find(target);
        let d = self.remaining[v].as_mut().expect("sampled label is a member");
        *d -= 1;
        self.adjust(v, -1);
        Ok(v)
    }

    fn adjust(&mut self, v: usize, delta: i64) {
        self.total = (self.total as i64 + delta) as u64;
        let mut i = v + 1;
        while i < self.tree.len() {
            self.tree[i] = (self.tree[i] as i64 + delta) as u64;
            i += i & i.wrapping_neg();
        }
    }

    /// Smallest label whose prefix weight exceeds `target`.
    fn find(&self, mut target: u64) -> usize {
        let n = self.tree.len() - 1;
        let mut pos = 0;
        let mut step = n.next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] <= target {
                pos = next;
                target -= self.tree[next];
            }
            step >>= 1;
        }
        pos
    }
}
