//! Shared helpers for the integration suites: a small deterministic RNG
//! (splitmix64) and random-set generators, so every run checks the same
//! cases.

// Each test binary compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use coprime_counts::IntSet;

pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `[0, n)`.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// Inclusive range.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }
}

/// Random nonempty set with at most `max_size` elements drawn from
/// `[1, max_val]`.
pub fn random_set(rng: &mut Rng, max_size: usize, max_val: u64) -> IntSet {
    let target = rng.range(1, max_size as u64) as usize;
    let mut values = Vec::with_capacity(target);
    for _ in 0..target {
        values.push(rng.range(1, max_val));
    }
    IntSet::new(values).expect("values are positive and nonempty")
}

/// Random nonempty subset of `set`.
pub fn random_subset(rng: &mut Rng, set: &IntSet) -> IntSet {
    loop {
        let picked: Vec<u64> = set
            .iter()
            .filter(|_| rng.below(2) == 1)
            .collect();
        if !picked.is_empty() {
            return IntSet::new(picked).expect("nonempty");
        }
    }
}

/// Fisher-Yates permutation of `0..len`.
pub fn random_perm(rng: &mut Rng, len: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..len).collect();
    for i in (1..len).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        perm.swap(i, j);
    }
    perm
}

/// All permutations of `0..len` (Heap's algorithm); only for tiny `len`.
pub fn all_perms(len: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let mut items: Vec<usize> = (0..len).collect();
    let mut out = Vec::new();
    heap(len, &mut items, &mut out);
    out
}
