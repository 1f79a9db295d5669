//! Ground truth from the definition: enumerate commuting tuples and count
//! orbits directly. Nothing here depends on the count formula.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::out_of_range;
use crate::{Error, ExactInt, Result, Runner};

/// Largest `n` for which [`centralizer`] will enumerate the symmetric group.
pub const CENTRALIZER_MAX_N: usize = 8;

/// A permutation of `{0, .., n-1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "{images:?} is not a permutation"
                    )))
                }
            }
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation of `n` points from disjoint zero-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u8]]) -> Result<Self> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a as usize >= n || b as usize >= n {
                    return Err(Error::InvalidArgument(format!(
                        "cycle {cycle:?} exceeds n = {n}"
                    )));
                }
                images[a as usize] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self` after `other`: `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.0.len() == other.0.len()
            && other
                .0
                .iter()
                .zip(&self.0)
                .all(|(&o, &s)| self.0[o as usize] == other.0[s as usize])
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, one-based, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// All `n!` permutations in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![Permutation(current.clone())];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Permutation(current.clone()));
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    components: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }
}

/// Number of orbits of the group generated by `perms`: the connected
/// components of the graph with edges `{i, perm(i)}`.
///
/// An empty slice has no points and therefore no orbits.
pub fn count_orbits(perms: &[Permutation]) -> Result<usize> {
    let Some(first) = perms.first() else {
        return Ok(0);
    };
    let n = first.len();
    if let Some(bad) = perms.iter().find(|s| s.len() != n) {
        return Err(Error::InvalidArgument(format!(
            "permutations act on {n} and {} points",
            bad.len()
        )));
    }
    let mut sets = DisjointSets::new(n);
    for perm in perms {
        for i in 0..n {
            sets.union(i, perm.apply(i));
        }
    }
    Ok(sets.components)
}

/// Every `tau` in `S_n` commuting with `perm`, by filtering `S_n`.
pub fn centralizer(perm: &Permutation) -> Result<Vec<Permutation>> {
    let n = perm.len();
    if n > CENTRALIZER_MAX_N {
        return Err(Error::Guard(format!(
            "centralizer over S_{n} (limit n <= {CENTRALIZER_MAX_N})"
        )));
    }
    Ok(all_permutations(n)
        .into_iter()
        .filter(|tau| tau.commutes_with(perm))
        .collect())
}

/// Whether [`brute_counts`] accepts `(p, n)`.
pub fn in_guard(p: u32, n: usize) -> bool {
    (1..=3).contains(&p) && (1..=6).contains(&n) && !(p == 3 && n > 5)
}

/// Tally of commuting `p`-tuples in `S_n` by orbit count; `result[k]` for
/// `k` in `1..=n` (absent keys are zero).
///
/// Tuples are grown one entry at a time, each new entry drawn from the
/// common centralizer of the entries so far. Work is split on the first
/// entry.
pub fn brute_counts(p: u32, n: usize, runner: &Runner) -> Result<BTreeMap<usize, ExactInt>> {
    if p == 0 {
        return Err(out_of_range("p", 0, "p >= 1"));
    }
    if n == 0 {
        return Err(out_of_range("n", 0, "n >= 1"));
    }
    if !in_guard(p, n) {
        return Err(Error::Guard(format!(
            "p = {p}, n = {n} (supported: p <= 3, n <= 6, and n <= 5 when p = 3)"
        )));
    }
    let group = all_permutations(n);

    fn extend(
        chosen: &mut Vec<Permutation>,
        candidates: &[Permutation],
        remaining: u32,
        tally: &mut [u64],
    ) {
        if remaining == 0 {
            let k = count_orbits(chosen).expect("tuple entries share n");
            tally[k] += 1;
            return;
        }
        for sigma in candidates {
            let next: Vec<Permutation> = candidates
                .iter()
                .filter(|tau| tau.commutes_with(sigma))
                .cloned()
                .collect();
            chosen.push(sigma.clone());
            extend(chosen, &next, remaining - 1, tally);
            chosen.pop();
        }
    }

    let partials = runner.map(&group, |first| {
        let mut tally = vec![0u64; n + 1];
        let candidates: Vec<Permutation> = group
            .iter()
            .filter(|tau| tau.commutes_with(first))
            .cloned()
            .collect();
        let mut chosen = vec![first.clone()];
        extend(&mut chosen, &candidates, p - 1, &mut tally);
        tally
    });

    let mut totals = vec![0u64; n + 1];
    for part in partials {
        for (t, v) in totals.iter_mut().zip(part) {
            *t += v;
        }
    }
    Ok(totals
        .into_iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, v)| v > 0)
        .map(|(k, v)| (k, BigInt::from(v)))
        .collect())
}
