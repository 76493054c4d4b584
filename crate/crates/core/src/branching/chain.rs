//! Semisimple induction and restriction through sequences of `[w:k]`-pairs.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::pairs::{lower_neighbours, Charges, WkPair};
use super::{add_conormal, conormal_count, normal_count, remove_normal};
use crate::abacus::{block_of, BlockId};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::prime::Prime;

pub const DEFAULT_DEPTH_CAP: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainDirection {
    Induce,
    Restrict,
}

/// One step of a chain, as reported to callers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub n: usize,
    pub core: Partition,
    pub k: usize,
    pub residue: usize,
    pub image_partition: Partition,
    pub exceptional: bool,
}

/// `blocks[j]` contains `images[j]`; `pairs[j]` joins `blocks[j]` and `blocks[j + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemisimpleChain {
    pub direction: ChainDirection,
    pub blocks: Vec<BlockId>,
    pub pairs: Vec<WkPair>,
    pub images: Vec<Partition>,
}

impl SemisimpleChain {
    fn trivial(direction: ChainDirection, lambda: &Partition, block: BlockId) -> Self {
        SemisimpleChain {
            direction,
            blocks: vec![block],
            pairs: Vec::new(),
            images: vec![lambda.clone()],
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn start(&self) -> &Partition {
        &self.images[0]
    }

    pub fn end(&self) -> (&BlockId, &Partition) {
        (self.blocks.last().unwrap(), self.images.last().unwrap())
    }

    pub fn steps(&self) -> Vec<ChainStep> {
        self.pairs
            .iter()
            .enumerate()
            .map(|(j, pair)| {
                let block = &self.blocks[j + 1];
                let image = &self.images[j + 1];
                ChainStep {
                    n: block.degree(),
                    core: block.core.clone(),
                    k: pair.k,
                    residue: pair.residue,
                    image_partition: image.clone(),
                    exceptional: !step_is_semisimple(pair, &self.images[j], image, self.direction),
                }
            })
            .collect()
    }

    /// Re-checks every step: consecutive blocks form the recorded pairs, the
    /// images are related by the branching maps, and the upper image has
    /// exactly `k` normal beads while the lower has exactly `k` conormal ones.
    pub fn verify(&self) -> bool {
        if self.blocks.len() != self.pairs.len() + 1 || self.images.len() != self.blocks.len() {
            return false;
        }
        self.pairs.iter().enumerate().all(|(j, pair)| {
            let (from, to) = (&self.images[j], &self.images[j + 1]);
            let (upper, lower, up_img, low_img) = match self.direction {
                ChainDirection::Induce => (&self.blocks[j + 1], &self.blocks[j], to, from),
                ChainDirection::Restrict => (&self.blocks[j], &self.blocks[j + 1], from, to),
            };
            let p = upper.p;
            pair.upper == *upper
                && pair.lower == *lower
                && upper.contains(up_img)
                && lower.contains(low_img)
                && remove_normal(up_img, p, pair.k, pair.residue).ok().as_ref() == Some(low_img)
                && step_is_semisimple(pair, from, to, self.direction)
        })
    }
}

fn step_is_semisimple(pair: &WkPair, from: &Partition, to: &Partition, dir: ChainDirection) -> bool {
    let p = pair.upper.p;
    let (up, low) = match dir {
        ChainDirection::Induce => (to, from),
        ChainDirection::Restrict => (from, to),
    };
    normal_count(up, p, pair.residue) == pair.k && conormal_count(low, p, pair.residue) == pair.k
}

pub fn induce_chain_to_rouquier(lambda: &Partition, p: Prime) -> Result<Option<SemisimpleChain>> {
    induce_chain_to_rouquier_with(lambda, p, DEFAULT_DEPTH_CAP)
}

/// Induces upward through `[w:k]`-pairs until a Rouquier block is reached.
///
/// Charges are split at the lowest gap that is still at most `p(w - 1)`.
/// The charges above the cut are then pushed once around the abacus past
/// every charge below it; each such exchange is one `[w:k]`-pair, and a full
/// round widens that gap by `p` while leaving every other gap unchanged.
/// Exchange orders are searched depth first, skipping exceptional steps;
/// `Ok(None)` means no order avoids them.
pub fn induce_chain_to_rouquier_with(
    lambda: &Partition,
    p: Prime,
    depth_cap: usize,
) -> Result<Option<SemisimpleChain>> {
    if !lambda.is_p_regular(p) {
        return Err(Error::Domain(format!("{lambda} is not {p}-regular")));
    }
    let start = block_of(lambda, p);
    let mut search = Search {
        p,
        weight: start.weight,
        depth_cap,
        dead: HashSet::new(),
        chain: SemisimpleChain::trivial(ChainDirection::Induce, lambda, start.clone()),
    };
    let charges = Charges::of_core(&start.core, p);
    if search.phase(&charges)? {
        Ok(Some(search.chain))
    } else {
        Ok(None)
    }
}

type Lap = (Vec<(i64, usize)>, Vec<i64>);

struct Search {
    p: Prime,
    weight: usize,
    depth_cap: usize,
    dead: HashSet<(Lap, Partition)>,
    chain: SemisimpleChain,
}

impl Search {
    fn phase(&mut self, charges: &Charges) -> Result<bool> {
        if charges.is_rouquier(self.weight) {
            return Ok(true);
        }
        let gap = self.p.get() as i64 * self.weight.saturating_sub(1) as i64;
        let sorted = charges.sorted();
        let cut = sorted
            .windows(2)
            .position(|w| w[1] - w[0] <= gap)
            .expect("a non-Rouquier block has a narrow gap");
        let upper = sorted[cut + 1..].iter().map(|&x| (x, 0)).collect();
        let lower = sorted[..=cut].to_vec();
        self.lap((upper, lower), charges)
    }

    fn lap(&mut self, state: Lap, charges: &Charges) -> Result<bool> {
        let (upper, lower) = &state;
        let laps = lower.len();
        if upper.iter().all(|&(_, done)| done == laps) {
            return self.phase(charges);
        }
        if self.chain.len() >= self.depth_cap {
            return Err(Error::Undecided { cap: self.depth_cap });
        }
        let current = self.chain.images.last().unwrap().clone();
        let key = (state.clone(), current.clone());
        if self.dead.contains(&key) {
            return Ok(false);
        }
        let p = self.p;
        let q = p.get() as i64;
        let below = self.chain.blocks.last().unwrap().clone();
        let mut candidates: Vec<(usize, usize)> = upper
            .iter()
            .enumerate()
            .filter(|(_, &(_, done))| done < laps)
            .filter_map(|(u, &(x, _))| {
                lower
                    .iter()
                    .position(|&y| (y - x - 1).rem_euclid(q) == 0)
                    .map(|l| (u, l))
            })
            .collect();
        candidates.sort_by_key(|&(u, _)| (upper[u].1, upper[u].0));

        for (u, l) in candidates {
            let (x, done) = upper[u];
            let y = lower[l];
            let r = (x + 1).rem_euclid(q) as usize;
            let k = ((x - y + 1) / q) as usize;
            if conormal_count(&current, p, r) != k {
                continue;
            }
            let image = add_conormal(&current, p, k, r)?;
            if normal_count(&image, p, r) != k {
                continue;
            }
            let mut next_upper = upper.clone();
            let mut next_lower = lower.clone();
            next_upper[u] = (x + 1, done + 1);
            next_lower[l] = y - 1;
            let points: Vec<i64> = next_upper.iter().map(|&(v, _)| v).chain(next_lower.iter().copied()).collect();
            let next = Charges::from_points(p, &points)?;
            let above = BlockId { p, core: next.core(), weight: self.weight };
            let pair = super::upper_neighbours(&below)
                .into_iter()
                .find(|pr| pr.upper == above)
                .expect("exchange of adjacent residues is a [w:k]-pair");
            debug_assert_eq!((pair.k, pair.residue), (k, r));
            self.chain.pairs.push(pair);
            self.chain.blocks.push(above);
            self.chain.images.push(image);
            if self.lap((next_upper, next_lower), &next)? {
                return Ok(true);
            }
            self.chain.pairs.pop();
            self.chain.blocks.pop();
            self.chain.images.pop();
        }
        self.dead.insert(key);
        Ok(false)
    }
}

/// Restricts downward through `[w:k]`-pairs to the principal block of the
/// symmetric group of degree `wp`, lowest residue first.
///
/// Every step strictly lowers the degree and every non-empty core has a pair
/// below it, so this always terminates; `Ok(None)` means every available step
/// at some point was exceptional.
pub fn restrict_chain_to_principal(lambda: &Partition, p: Prime) -> Result<Option<SemisimpleChain>> {
    if !lambda.is_p_regular(p) {
        return Err(Error::Domain(format!("{lambda} is not {p}-regular")));
    }
    let start = block_of(lambda, p);
    let mut chain = SemisimpleChain::trivial(ChainDirection::Restrict, lambda, start);
    while !chain.blocks.last().unwrap().core.is_empty() {
        let cur = chain.blocks.last().unwrap().clone();
        let image = chain.images.last().unwrap().clone();
        let step = lower_neighbours(&cur)
            .into_iter()
            .find(|pair| normal_count(&image, p, pair.residue) == pair.k);
        let Some(pair) = step else {
            return Ok(None);
        };
        let next = remove_normal(&image, p, pair.k, pair.residue)?;
        chain.blocks.push(pair.lower.clone());
        chain.images.push(next);
        chain.pairs.push(pair);
    }
    Ok(Some(chain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::is_rouquier;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_chains() {
        let q = p(5);
        // weight 1 blocks are Rouquier
        let lam = part(&[5, 1]);
        let c = induce_chain_to_rouquier(&lam, q).unwrap().unwrap();
        assert!(c.is_empty());
        let hook = Partition::hook(q.get(), q.get() - 1);
        let c = restrict_chain_to_principal(&hook, q).unwrap().unwrap();
        assert!(c.is_empty());
        assert_eq!(c.end().0, &BlockId::principal(q, 2));
    }

    #[test]
    fn induce_reaches_rouquier_and_verifies() {
        let q = p(3);
        let mut found = 0;
        for n in 6..=12 {
            for lam in crate::partition::partitions_of(n) {
                if !lam.is_p_regular(q) || crate::abacus::p_weight(&lam, q) != 2 {
                    continue;
                }
                if let Some(chain) = induce_chain_to_rouquier(&lam, q).unwrap() {
                    assert!(chain.verify(), "{lam}");
                    assert!(is_rouquier(chain.end().0));
                    assert!(chain.steps().iter().all(|s| !s.exceptional));
                    found += 1;
                }
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn restrict_reaches_principal_for_every_weight_one() {
        let q = p(5);
        for n in 5..=14 {
            for lam in crate::partition::partitions_of(n) {
                if !lam.is_p_regular(q) || crate::abacus::p_weight(&lam, q) != 1 {
                    continue;
                }
                // weight-1 blocks have no exceptional modules for k >= 1
                let chain = restrict_chain_to_principal(&lam, q).unwrap().unwrap();
                assert!(chain.verify());
                assert_eq!(chain.end().0, &BlockId::principal(q, 1));
            }
        }
    }

    #[test]
    fn depth_cap_is_reported() {
        let q = p(5);
        let long = crate::abacus::BlockId::principal(q, 2)
            .partitions()
            .into_iter()
            .filter(|l| l.is_p_regular(q))
            .find(|l| matches!(induce_chain_to_rouquier(l, q), Ok(Some(c)) if c.len() >= 2))
            .expect("some principal-block label needs a long chain");
        assert_eq!(
            induce_chain_to_rouquier_with(&long, q, 1),
            Err(Error::Undecided { cap: 1 })
        );
    }

    #[test]
    fn singular_input_rejected() {
        assert!(matches!(
            induce_chain_to_rouquier(&part(&[1, 1, 1]), p(3)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            restrict_chain_to_principal(&part(&[1, 1]), p(2)),
            Err(Error::Domain(_))
        ));
    }
}
