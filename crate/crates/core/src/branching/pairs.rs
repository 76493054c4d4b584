//! `[w:k]`-pairs of blocks, Rouquier blocks and Scopes equivalence.
//!
//! Cores are handled through their [`Charges`]: for each residue `r`, the
//! first vacant position on the runner of residue `r`, measured relative to
//! the bead count. This is independent of the display, and a `[w:k]`-pair is
//! an exchange of the charges of two adjacent residues.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{conormal_count, normal_count};
use crate::abacus::{default_beads, AbacusDisplay, BetaSequence, BlockId};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::prime::Prime;

/// Display-free coordinates of a p-core, indexed by residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Charges {
    p: Prime,
    values: Vec<i64>,
}

impl Charges {
    pub fn of_core(core: &Partition, p: Prime) -> Self {
        let s = default_beads(core, p);
        let counts = AbacusDisplay::new(core, p, s)
            .expect("default bead count")
            .runner_counts();
        Self::from_counts(p, &counts, s)
    }

    pub fn from_counts(p: Prime, counts: &[usize], s: usize) -> Self {
        let q = p.get();
        let mut values = vec![0; q];
        for (j, &c) in counts.iter().enumerate() {
            let r = (j + q - s % q) % q;
            values[r] = (q * c + j) as i64 - s as i64;
        }
        Charges { p, values }
    }

    /// Builds charges from arbitrary values with distinct residues whose sum
    /// is `p(p-1)/2`.
    pub fn from_points(p: Prime, points: &[i64]) -> Result<Self> {
        let q = p.get();
        let mut values = vec![None; q];
        for &x in points {
            let r = x.rem_euclid(q as i64) as usize;
            if values[r].replace(x).is_some() {
                return Err(Error::Domain(format!("charges {points:?} repeat a residue")));
            }
        }
        let values: Vec<i64> = values
            .into_iter()
            .map(|v| v.ok_or_else(|| Error::Domain(format!("charges {points:?} miss a residue"))))
            .collect::<Result<_>>()?;
        if values.iter().sum::<i64>() != (q * (q - 1) / 2) as i64 {
            return Err(Error::Domain(format!("charges {points:?} have the wrong sum")));
        }
        Ok(Charges { p, values })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, r: usize) -> i64 {
        self.values[r % self.values.len()]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Sorted charge values, lowest first.
    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.values.clone();
        v.sort_unstable();
        v
    }

    /// Runner counts of the display with `s` beads, if every runner is non-negative.
    pub fn counts(&self, s: usize) -> Option<Vec<usize>> {
        let q = self.p.get();
        (0..q)
            .map(|j| {
                let r = (j + q - s % q) % q;
                let num = self.values[r] + s as i64 - j as i64;
                (num >= 0).then(|| (num / q as i64) as usize)
            })
            .collect()
    }

    pub fn core(&self) -> Partition {
        let q = self.p.get() as i64;
        let lo = self.values.iter().copied().min().unwrap_or(0);
        let s = ((-lo).max(0) + q).div_euclid(q) * q;
        let counts = self.counts(s as usize).expect("bead count chosen large enough");
        let mut betas: Vec<usize> = counts
            .iter()
            .enumerate()
            .flat_map(|(j, &c)| (0..c).map(move |t| j + self.p.get() * t))
            .collect();
        betas.sort_unstable_by(|a, b| b.cmp(a));
        crate::abacus::partition_from_beta(&BetaSequence::new(betas).expect("distinct positions"))
    }

    /// Rouquier condition in charge form: all charges at pairwise distance
    /// more than `p(w - 1)`.
    pub fn is_rouquier(&self, weight: usize) -> bool {
        let gap = (self.p.get() * weight.saturating_sub(1)) as i64;
        self.sorted().windows(2).all(|w| w[1] - w[0] > gap)
    }

    fn exchanged(&self, r: usize, hi: i64, lo: i64) -> Charges {
        let q = self.values.len();
        let mut values = self.values.clone();
        values[r] = hi;
        values[(r + q - 1) % q] = lo;
        Charges { p: self.p, values }
    }
}

impl fmt::Display for Charges {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

/// A `[w:k]`-pair `(upper, lower)`: the core of `lower` is that of `upper`
/// with runners `runner - 1` and `runner` exchanged, in the display of the
/// upper core with `beads` beads, where runner `runner` carries `k` more beads.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WkPair {
    pub upper: BlockId,
    pub lower: BlockId,
    pub k: usize,
    pub runner: usize,
    pub residue: usize,
    pub beads: usize,
}

impl WkPair {
    pub fn weight(&self) -> usize {
        self.upper.weight
    }

    fn from_charges(upper: &Charges, lower: &Charges, weight: usize, k: usize, r: usize) -> Self {
        let p = upper.prime();
        let up = upper.core();
        let low = lower.core();
        let q = p.get();
        let mut beads = up.len().max(low.len()).max(1).div_ceil(q) * q;
        if r == 0 {
            beads += 1;
        }
        WkPair {
            upper: BlockId { p, core: up, weight },
            lower: BlockId { p, core: low, weight },
            k,
            runner: (r + beads) % q,
            residue: r,
            beads,
        }
    }
}

impl fmt::Display for WkPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}:{}] {} -> {} (residue {})",
            self.weight(),
            self.k,
            self.upper,
            self.lower,
            self.residue
        )
    }
}

/// All `[w:k]`-pairs `(B, block)`, i.e. blocks one can induce to.
pub fn upper_neighbours(block: &BlockId) -> Vec<WkPair> {
    let c = Charges::of_core(&block.core, block.p);
    let q = block.p.get();
    let mut out = Vec::new();
    for r in 0..q {
        let x = c.get(r + q - 1);
        let y = c.get(r);
        if x > y {
            let k = ((x - y + 1) / q as i64) as usize;
            let up = c.exchanged(r, x + 1, y - 1);
            out.push(WkPair::from_charges(&up, &c, block.weight, k, r));
        }
    }
    out
}

/// All `[w:k]`-pairs `(block, C)`, i.e. blocks one can restrict to.
pub fn lower_neighbours(block: &BlockId) -> Vec<WkPair> {
    let c = Charges::of_core(&block.core, block.p);
    let q = block.p.get() as i64;
    let mut out = Vec::new();
    for r in 0..block.p.get() {
        let a = c.get(r);
        let b = c.get(r + q as usize - 1);
        if a - b > q {
            let k = ((a - b - 1) / q) as usize;
            let low = c.exchanged(r, b + 1, a - 1);
            out.push(WkPair::from_charges(&c, &low, block.weight, k, r));
        }
    }
    out
}

/// Decides whether `(b, c)` is a `[w:k]`-pair by comparing runner counts over
/// one full residue system of bead counts.
pub fn detect_wk_pair(b: &BlockId, c: &BlockId) -> Option<WkPair> {
    if b.p != c.p || b.weight != c.weight {
        return None;
    }
    let p = b.p;
    let q = p.get();
    let start = b.core.len().max(c.core.len()) + b.weight * q;
    for s in start..start + q {
        let cb = AbacusDisplay::new(&b.core, p, s).ok()?.runner_counts();
        let cc = AbacusDisplay::new(&c.core, p, s).ok()?.runner_counts();
        for i in 1..q {
            if cb[i] <= cb[i - 1] {
                continue;
            }
            let k = cb[i] - cb[i - 1];
            let swapped = cc[i - 1] == cb[i] && cc[i] == cb[i - 1];
            let rest = (0..q).all(|j| j == i || j == i - 1 || cb[j] == cc[j]);
            if swapped && rest && b.degree() == c.degree() + k {
                return Some(WkPair {
                    upper: b.clone(),
                    lower: c.clone(),
                    k,
                    runner: i,
                    residue: (i + q - s % q) % q,
                    beads: s,
                });
            }
        }
    }
    None
}

/// Partitions of the upper block with more than `k` normal beads of the pair's residue.
pub fn exceptional_partitions(pair: &WkPair) -> Vec<Partition> {
    let p = pair.upper.p;
    pair.upper
        .partitions()
        .into_iter()
        .filter(|l| normal_count(l, p, pair.residue) > pair.k)
        .collect()
}

/// Partitions of the lower block with more than `k` conormal beads of the pair's residue.
pub fn exceptional_partitions_lower(pair: &WkPair) -> Vec<Partition> {
    let p = pair.lower.p;
    pair.lower
        .partitions()
        .into_iter()
        .filter(|m| conormal_count(m, p, pair.residue) > pair.k)
        .collect()
}

/// Rouquier test on a concrete display of the core.
pub fn is_rouquier_display(counts: &[usize], weight: usize) -> bool {
    let w = weight as i64;
    for i in 0..counts.len() {
        for j in i + 1..counts.len() {
            let (ci, cj) = (counts[i] as i64, counts[j] as i64);
            if !(cj - ci >= w - 1 || ci - cj >= w) {
                return false;
            }
        }
    }
    true
}

pub fn is_rouquier(block: &BlockId) -> bool {
    let d = AbacusDisplay::with_default_beads(&block.core, block.p);
    is_rouquier_display(&d.runner_counts(), block.weight)
}

/// Representative of the Scopes class: apply size-reducing `[w:k]`-pairs with
/// `k >= w` (lowest residue first) until none is left.
pub fn scopes_normal_form(block: &BlockId, depth_cap: usize) -> Result<BlockId> {
    let mut cur = block.clone();
    for _ in 0..=depth_cap {
        let next = lower_neighbours(&cur)
            .into_iter()
            .find(|pair| pair.k >= cur.weight);
        match next {
            Some(pair) => cur = pair.lower,
            None => return Ok(cur),
        }
    }
    Err(Error::Undecided { cap: depth_cap })
}

pub fn is_scopes_equivalent(b: &BlockId, c: &BlockId, depth_cap: usize) -> Result<bool> {
    if b.p != c.p || b.weight != c.weight {
        return Ok(false);
    }
    Ok(scopes_normal_form(b, depth_cap)? == scopes_normal_form(c, depth_cap)?)
}
