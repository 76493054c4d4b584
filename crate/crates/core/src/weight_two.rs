//! The `[a,b]` labelling of weight-two partitions and the `ε` invariant.
//!
//! A weight-two partition is read off its abacus in one of three shapes: two
//! beads stacked on one runner above a single gap, one bead with two gaps
//! above it, or two beads on different runners each with one gap above.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abacus::{block_of, AbacusDisplay, BlockId};
use crate::branching::{is_rouquier, phi_map, WkPair};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::prime::Prime;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightTwoLabel {
    pub a: usize,
    pub b: usize,
    pub eps: u8,
    pub block: BlockId,
}

impl WeightTwoLabel {
    pub fn pair(&self) -> (usize, usize) {
        (self.a, self.b)
    }
}

impl fmt::Display for WeightTwoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] (eps={})", self.a, self.b, self.eps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    ToRouquier,
    ToPrincipal,
    Both,
}

fn check_prime(p: Prime) -> Result<()> {
    if p.is_odd() {
        Ok(())
    } else {
        Err(Error::Domain("weight-two labels need an odd prime".into()))
    }
}

/// Vacant positions strictly between `lo` and `hi`.
fn vacant_between(d: &AbacusDisplay, lo: isize, hi: isize) -> usize {
    (lo + 1..hi).filter(|&pos| !d.is_occupied(pos)).count()
}

/// Reads `(a, b, eps)` from any display of a weight-two partition.
pub fn label_from_display(d: &AbacusDisplay) -> Option<(usize, usize, u8)> {
    let p = d.prime().get() as isize;
    let movable: Vec<isize> = d
        .positions()
        .map(|pos| pos as isize)
        .filter(|&pos| !d.is_occupied(pos - p))
        .collect();
    match movable[..] {
        [y, x] => {
            let a = vacant_between(d, x - p, x);
            let b = vacant_between(d, y - p, y);
            let eps = u8::from(x - p < y && y < x);
            Some((a, b, eps))
        }
        [z] if !d.is_occupied(z - 2 * p) => {
            let a = vacant_between(d, z - p, z);
            // the gap at x - p counts towards b
            let b = vacant_between(d, z - 2 * p, z - p + 1);
            Some((a, b, 1))
        }
        [z] => {
            let x = z + p;
            if !d.is_occupied(x) {
                return None;
            }
            let a = vacant_between(d, x - p, x);
            let b = vacant_between(d, x - 2 * p, x - p);
            Some((a, b, 0))
        }
        _ => None,
    }
}

pub fn label_of(lambda: &Partition, p: Prime) -> Result<WeightTwoLabel> {
    check_prime(p)?;
    let block = block_of(lambda, p);
    if block.weight != 2 {
        return Err(Error::Domain(format!("{lambda} has {p}-weight {}, not 2", block.weight)));
    }
    let d = AbacusDisplay::with_default_beads(lambda, p);
    let (a, b, eps) = label_from_display(&d).expect("every weight-two display has one of the three shapes");
    Ok(WeightTwoLabel { a, b, eps, block })
}

/// The partition of `block` carrying the label `(a, b)`.
pub fn partition_of_label(block: &BlockId, a: usize, b: usize) -> Result<Partition> {
    check_prime(block.p)?;
    if block.weight != 2 {
        return Err(Error::Domain(format!("{block} does not have weight 2")));
    }
    block
        .partitions()
        .into_iter()
        .find(|lam| label_of(lam, block.p).map(|l| l.pair()) == Ok((a, b)))
        .ok_or_else(|| Error::NotFound(format!("label [{a},{b}] in {block}")))
}

/// Labels of the `p`-singular partitions of a weight-two Rouquier block.
pub fn rouquier_singular_labels(block: &BlockId) -> Result<Vec<WeightTwoLabel>> {
    check_prime(block.p)?;
    if block.weight != 2 || !is_rouquier(block) {
        return Err(Error::Domain(format!("{block} is not a weight-two Rouquier block")));
    }
    let p = block.p.get();
    let mut out: Vec<WeightTwoLabel> = (0..p)
        .map(|a| WeightTwoLabel { a, b: 0, eps: 0, block: block.clone() })
        .collect();
    out.push(WeightTwoLabel { a: 0, b: 1, eps: 1, block: block.clone() });
    out.sort();
    Ok(out)
}

/// The label of `D ⊗ sgn` in the principal block of `Σ_{2p}`, for `a ≥ b`.
pub fn sgn_twist_label(p: Prime, a: usize, b: usize) -> Result<(usize, usize)> {
    check_prime(p)?;
    let q = p.get();
    if a < b || a >= q || b == 0 {
        return Err(Error::Domain(format!("no sign twist for [{a},{b}] at p={q}")));
    }
    Ok((q - b, q - a))
}

pub fn route_of(lambda: &Partition, p: Prime) -> Result<Route> {
    if !lambda.is_p_regular(p) {
        return Err(Error::Domain(format!("{lambda} is not {p}-regular")));
    }
    let l = label_of(lambda, p)?;
    Ok(if l.b == l.a + 1 {
        Route::Both
    } else if l.eps == 0 {
        Route::ToRouquier
    } else {
        Route::ToPrincipal
    })
}

/// Where `ε` changes between `λ` and `Φ(λ)` across one weight-two pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonFlipReport {
    pub k: usize,
    /// `(λ, Φ(λ))` with differing `ε`.
    pub flips: Vec<(Partition, Partition)>,
    /// Partitions whose `(a, b)` changed under `Φ`; empty when labels are invariant.
    pub relabelled: Vec<Partition>,
    pub exceptional_regular: Vec<Partition>,
    pub consistent: bool,
}

pub fn epsilon_flip_check(pair: &WkPair) -> Result<EpsilonFlipReport> {
    let p = pair.upper.p;
    check_prime(p)?;
    if pair.weight() != 2 {
        return Err(Error::Domain(format!("{pair} does not have weight 2")));
    }
    let mut flips = Vec::new();
    let mut relabelled = Vec::new();
    let mut sign_ok = true;
    for lam in pair.upper.partitions() {
        let image = phi_map(&lam, pair)?;
        let (from, to) = (label_of(&lam, p)?, label_of(&image, p)?);
        if from.pair() != to.pair() {
            relabelled.push(lam.clone());
        }
        if from.eps != to.eps {
            sign_ok &= from.eps == 0 && lam.is_p_regular(p);
            flips.push((lam, image));
        }
    }
    let exceptional_regular: Vec<Partition> = crate::branching::exceptional_partitions(pair)
        .into_iter()
        .filter(|l| l.is_p_regular(p))
        .collect();
    let flipped: Vec<Partition> = flips.iter().map(|(l, _)| l.clone()).collect();
    let consistent = relabelled.is_empty()
        && sign_ok
        && if pair.k == 1 {
            flipped.len() == 1 && flipped == exceptional_regular
        } else {
            flipped.is_empty()
        };
    Ok(EpsilonFlipReport { k: pair.k, flips, relabelled, exceptional_regular, consistent })
}
