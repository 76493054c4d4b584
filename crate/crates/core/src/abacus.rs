//! Beta-numbers, James abacus displays, p-cores, p-weights and blocks.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::prime::Prime;

/// A strictly decreasing sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSequence(Vec<usize>);

impl BetaSequence {
    pub fn new(betas: Vec<usize>) -> Result<Self> {
        if betas.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidBeta(betas));
        }
        Ok(BetaSequence(betas))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `beta_i = lambda_i + s - i` for `i = 1..=s`.
pub fn beta_numbers(lambda: &Partition, s: usize) -> Result<BetaSequence> {
    if s < lambda.len() {
        return Err(Error::InvalidBeadCount {
            beads: s,
            length: lambda.len(),
        });
    }
    Ok(BetaSequence(
        (0..s).map(|i| lambda.part(i) + s - 1 - i).collect(),
    ))
}

pub fn partition_from_beta(beta: &BetaSequence) -> Partition {
    let s = beta.len();
    let mut parts: Vec<usize> = beta
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (s - 1 - i))
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::from_parts_unchecked(parts)
}

/// The least `s >= max(l(lambda), 1)` divisible by `p`.
pub fn default_beads(lambda: &Partition, p: Prime) -> usize {
    let p = p.get();
    lambda.len().max(1).div_ceil(p) * p
}

/// A p-abacus display: bead positions read left to right, top down from 0.
///
/// Positions below zero are treated as occupied, so the display is a finite
/// window onto the infinite one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbacusDisplay {
    p: Prime,
    occupied: BTreeSet<usize>,
}

impl AbacusDisplay {
    pub fn new(lambda: &Partition, p: Prime, s: usize) -> Result<Self> {
        let beta = beta_numbers(lambda, s)?;
        Ok(AbacusDisplay {
            p,
            occupied: beta.as_slice().iter().copied().collect(),
        })
    }

    pub fn with_default_beads(lambda: &Partition, p: Prime) -> Self {
        Self::new(lambda, p, default_beads(lambda, p)).expect("default bead count covers the length")
    }

    pub fn from_positions(p: Prime, positions: impl IntoIterator<Item = usize>) -> Self {
        AbacusDisplay {
            p,
            occupied: positions.into_iter().collect(),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn beads(&self) -> usize {
        self.occupied.len()
    }

    pub fn positions(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.occupied.iter().copied()
    }

    pub fn is_occupied(&self, pos: isize) -> bool {
        pos < 0 || self.occupied.contains(&(pos as usize))
    }

    pub fn runner(&self, pos: usize) -> usize {
        pos % self.p.get()
    }

    pub fn runner_counts(&self) -> Vec<usize> {
        let p = self.p.get();
        let mut counts = vec![0; p];
        for &pos in &self.occupied {
            counts[pos % p] += 1;
        }
        counts
    }

    pub fn partition(&self) -> Partition {
        let betas: Vec<usize> = self.occupied.iter().rev().copied().collect();
        partition_from_beta(&BetaSequence(betas))
    }

    /// Moves a bead up to a vacant earlier position, removing a rim hook of
    /// length `from - to`.
    pub fn move_bead(&self, from: usize, to: usize) -> Result<AbacusDisplay> {
        if from <= to || !self.occupied.contains(&from) || self.occupied.contains(&to) {
            return Err(Error::IllegalMove { from, to });
        }
        let mut next = self.clone();
        next.occupied.remove(&from);
        next.occupied.insert(to);
        Ok(next)
    }

    /// The display obtained by sliding every bead as far up its runner as it goes.
    pub fn core_display(&self) -> AbacusDisplay {
        let p = self.p.get();
        let occupied = self
            .runner_counts()
            .into_iter()
            .enumerate()
            .flat_map(|(r, c)| (0..c).map(move |j| r + p * j))
            .collect();
        AbacusDisplay { p: self.p, occupied }
    }

    /// Total number of single-row slides needed to reach the core.
    pub fn slides_to_core(&self) -> usize {
        let p = self.p.get();
        let mut seen = vec![0; p];
        let mut total = 0;
        for &pos in &self.occupied {
            let r = pos % p;
            total += pos / p - seen[r];
            seen[r] += 1;
        }
        total
    }
}

impl fmt::Display for AbacusDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p.get();
        let last = self.occupied.iter().next_back().copied().unwrap_or(0);
        for row in 0..=last / p {
            let line: String = (0..p)
                .map(|r| if self.occupied.contains(&(row * p + r)) { 'o' } else { '-' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

pub fn p_core(lambda: &Partition, p: Prime) -> Partition {
    AbacusDisplay::with_default_beads(lambda, p).core_display().partition()
}

pub fn p_weight(lambda: &Partition, p: Prime) -> usize {
    AbacusDisplay::with_default_beads(lambda, p).slides_to_core()
}

/// The identity of a block: its p-core and p-weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockId {
    pub p: Prime,
    pub core: Partition,
    pub weight: usize,
}

impl BlockId {
    pub fn new(p: Prime, core: Partition, weight: usize) -> Result<Self> {
        if p_weight(&core, p) != 0 {
            return Err(Error::Domain(format!("{core} is not a {p}-core")));
        }
        Ok(BlockId { p, core, weight })
    }

    /// The principal block of the symmetric group of degree `weight * p`.
    pub fn principal(p: Prime, weight: usize) -> Self {
        BlockId {
            p,
            core: Partition::empty(),
            weight,
        }
    }

    /// Degree of the symmetric group the block belongs to.
    pub fn degree(&self) -> usize {
        self.core.size() + self.weight * self.p.get()
    }

    /// Every partition in the block, enumerated through the p-quotient.
    pub fn partitions(&self) -> Vec<Partition> {
        let p = self.p.get();
        let w = self.weight;
        let s = (self.core.len() + p * w).max(1).div_ceil(p) * p;
        let counts = AbacusDisplay::new(&self.core, self.p, s)
            .expect("bead count covers the core")
            .runner_counts();
        let mut out = Vec::new();
        let mut quotient: Vec<Partition> = Vec::with_capacity(p);
        place_runners(&counts, w, p, &mut quotient, &mut out);
        out
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        block_of(lambda, self.p) == *self
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B(p={}, core={}, w={})", self.p, self.core, self.weight)
    }
}

fn place_runners(
    counts: &[usize],
    remaining: usize,
    p: usize,
    quotient: &mut Vec<Partition>,
    out: &mut Vec<Partition>,
) {
    let runner = quotient.len();
    if runner == p {
        if remaining == 0 {
            let mut betas = Vec::new();
            for (j, nu) in quotient.iter().enumerate() {
                let c = counts[j];
                betas.extend((0..c).map(|t| j + p * (nu.part(t) + c - 1 - t)));
            }
            betas.sort_unstable_by(|a, b| b.cmp(a));
            out.push(partition_from_beta(&BetaSequence(betas)));
        }
        return;
    }
    let range: Vec<usize> = if runner == p - 1 {
        vec![remaining]
    } else {
        (0..=remaining).collect()
    };
    for size in range {
        for nu in partitions_of(size) {
            quotient.push(nu);
            place_runners(counts, remaining - size, p, quotient, out);
            quotient.pop();
        }
    }
}

pub fn block_of(lambda: &Partition, p: Prime) -> BlockId {
    let d = AbacusDisplay::with_default_beads(lambda, p);
    BlockId {
        p,
        core: d.core_display().partition(),
        weight: d.slides_to_core(),
    }
}
