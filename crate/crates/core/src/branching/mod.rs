//! Kleshchev branching on the abacus: residues, normal and conormal beads,
//! the maps between blocks of adjacent symmetric groups and the socles of
//! restricted and induced simple modules.

mod chain;
mod pairs;

pub use chain::{
    induce_chain_to_rouquier, induce_chain_to_rouquier_with, restrict_chain_to_principal,
    ChainDirection, ChainStep, SemisimpleChain, DEFAULT_DEPTH_CAP,
};
pub use pairs::{
    detect_wk_pair, exceptional_partitions, exceptional_partitions_lower, is_rouquier,
    is_rouquier_display, is_scopes_equivalent, lower_neighbours, scopes_normal_form,
    upper_neighbours, Charges, WkPair,
};

use serde::{Deserialize, Serialize};

use crate::abacus::{block_of, default_beads, AbacusDisplay, BlockId};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::prime::Prime;

/// A bead with a vacant neighbour, together with its residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bead {
    pub position: usize,
    pub residue: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeadClassification {
    pub display: AbacusDisplay,
    /// Beads whose succeeding position is vacant, in increasing position order.
    pub addable: Vec<Bead>,
    /// Beads whose preceding position is vacant, in increasing position order.
    pub removable: Vec<Bead>,
}

pub fn classify_beads(d: &AbacusDisplay) -> BeadClassification {
    let p = d.prime().get();
    let s = d.beads();
    let shift = p - s % p;
    let mut addable = Vec::new();
    let mut removable = Vec::new();
    for pos in d.positions() {
        let i = pos % p;
        if !d.is_occupied(pos as isize + 1) {
            addable.push(Bead {
                position: pos,
                residue: (i + shift + 1) % p,
            });
        }
        if !d.is_occupied(pos as isize - 1) {
            removable.push(Bead {
                position: pos,
                residue: (i + shift) % p,
            });
        }
    }
    BeadClassification {
        display: d.clone(),
        addable,
        removable,
    }
}

/// Removable beads of residue `r` passing the lattice condition, topmost
/// (smallest position) first.
pub fn normal_beads(d: &AbacusDisplay, r: usize) -> Vec<usize> {
    let cls = classify_beads(d);
    let mut events: Vec<(usize, i32)> = cls
        .removable
        .iter()
        .filter(|b| b.residue == r)
        .map(|b| (b.position, 1))
        .chain(
            cls.addable
                .iter()
                .filter(|b| b.residue == r)
                .map(|b| (b.position, -1)),
        )
        .collect();
    events.sort_unstable();
    let mut out = Vec::new();
    for (idx, &(t, kind)) in events.iter().enumerate() {
        if kind != 1 {
            continue;
        }
        let mut running = 0;
        let ok = events[idx + 1..].iter().all(|&(_, e)| {
            running += e;
            running >= 0
        });
        if ok {
            out.push(t);
        }
    }
    out
}

/// Addable beads of residue `r` passing the dual lattice condition,
/// bottommost (largest position) first.
pub fn conormal_beads(d: &AbacusDisplay, r: usize) -> Vec<usize> {
    let cls = classify_beads(d);
    let mut events: Vec<(usize, i32)> = cls
        .addable
        .iter()
        .filter(|b| b.residue == r)
        .map(|b| (b.position, 1))
        .chain(
            cls.removable
                .iter()
                .filter(|b| b.residue == r)
                .map(|b| (b.position, -1)),
        )
        .collect();
    events.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    for (idx, &(t, kind)) in events.iter().enumerate() {
        if kind != 1 {
            continue;
        }
        let mut running = 0;
        let ok = events[idx + 1..].iter().all(|&(_, e)| {
            running += e;
            running >= 0
        });
        if ok {
            out.push(t);
        }
    }
    out
}

// One extra row of beads, so no bead hidden below position zero is addable.
fn working_display(lambda: &Partition, p: Prime) -> AbacusDisplay {
    AbacusDisplay::new(lambda, p, default_beads(lambda, p) + p.get()).expect("bead count covers the length")
}

pub fn normal_count(lambda: &Partition, p: Prime, r: usize) -> usize {
    normal_beads(&working_display(lambda, p), r).len()
}

pub fn conormal_count(lambda: &Partition, p: Prime, r: usize) -> usize {
    conormal_beads(&working_display(lambda, p), r).len()
}

/// Moves the `k` topmost `r`-normal beads one position up.
pub fn remove_normal(lambda: &Partition, p: Prime, k: usize, r: usize) -> Result<Partition> {
    let d = working_display(lambda, p);
    let normal = normal_beads(&d, r);
    if normal.len() < k {
        return Err(Error::NotDefined(format!(
            "{lambda} has {} {r}-normal beads, fewer than {k}",
            normal.len()
        )));
    }
    let positions = d
        .positions()
        .map(|pos| if normal[..k].contains(&pos) { pos - 1 } else { pos });
    Ok(AbacusDisplay::from_positions(p, positions).partition())
}

/// Moves the `k` bottommost `r`-conormal beads one position down.
pub fn add_conormal(mu: &Partition, p: Prime, k: usize, r: usize) -> Result<Partition> {
    let d = working_display(mu, p);
    let conormal = conormal_beads(&d, r);
    if conormal.len() < k {
        return Err(Error::NotDefined(format!(
            "{mu} has {} {r}-conormal beads, fewer than {k}",
            conormal.len()
        )));
    }
    let positions = d
        .positions()
        .map(|pos| if conormal[..k].contains(&pos) { pos + 1 } else { pos });
    Ok(AbacusDisplay::from_positions(p, positions).partition())
}

pub fn phi_map(lambda: &Partition, pair: &WkPair) -> Result<Partition> {
    let p = pair.upper.p;
    if !pair.upper.contains(lambda) {
        return Err(Error::Domain(format!("{lambda} does not lie in {}", pair.upper)));
    }
    remove_normal(lambda, p, pair.k, pair.residue)
}

pub fn psi_map(mu: &Partition, pair: &WkPair) -> Result<Partition> {
    let p = pair.lower.p;
    if !pair.lower.contains(mu) {
        return Err(Error::Domain(format!("{mu} does not lie in {}", pair.lower)));
    }
    add_conormal(mu, p, pair.k, pair.residue)
}

/// Label and multiplicity of the socle of a restricted or induced simple module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleLabel {
    pub partition: Partition,
    pub multiplicity: u64,
    /// Whether the whole module (not just its socle) is this direct sum.
    pub full: bool,
}

/// How block `to` arises from block `from` by removing `k` nodes of residue `r`.
fn removal_step(from: &BlockId, to: &BlockId) -> Option<(usize, usize)> {
    if from.p != to.p {
        return None;
    }
    let p = from.p.get() as i64;
    let a = Charges::of_core(&from.core, from.p);
    let b = Charges::of_core(&to.core, to.p);
    let diff: Vec<i64> = (0..a.len()).map(|r| b.get(r) - a.get(r)).collect();
    let neg: Vec<usize> = (0..diff.len()).filter(|&r| diff[r] < 0).collect();
    if neg.len() != 1 {
        return None;
    }
    let r = neg[0];
    let prev = (r + diff.len() - 1) % diff.len();
    let shift = -diff[r];
    if shift % p != 0 || diff[prev] != shift {
        return None;
    }
    if diff.iter().enumerate().any(|(i, &x)| i != r && i != prev && x != 0) {
        return None;
    }
    let k = (shift / p) as usize;
    if from.degree() < k || to.degree() + k != from.degree() {
        return None;
    }
    Some((k, r))
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Socle of `D^lambda` restricted to block `lower`; `None` when it is zero.
pub fn socle_restrict_label(lambda: &Partition, lower: &BlockId) -> Result<Option<SocleLabel>> {
    let p = lower.p;
    if !lambda.is_p_regular(p) {
        return Err(Error::Domain(format!("{lambda} is not {p}-regular")));
    }
    let upper = block_of(lambda, p);
    let (k, r) = removal_step(&upper, lower).ok_or_else(|| {
        Error::Domain(format!("{lower} is not obtained from {upper} by removing nodes of one residue"))
    })?;
    let count = normal_count(lambda, p, r);
    if count < k {
        return Ok(None);
    }
    Ok(Some(SocleLabel {
        partition: remove_normal(lambda, p, k, r)?,
        multiplicity: factorial(k),
        full: count == k,
    }))
}

/// Socle of `D^mu` induced to block `upper`; `None` when it is zero.
pub fn socle_induce_label(mu: &Partition, upper: &BlockId) -> Result<Option<SocleLabel>> {
    let p = upper.p;
    if !mu.is_p_regular(p) {
        return Err(Error::Domain(format!("{mu} is not {p}-regular")));
    }
    let lower = block_of(mu, p);
    let (k, r) = removal_step(upper, &lower).ok_or_else(|| {
        Error::Domain(format!("{lower} is not obtained from {upper} by removing nodes of one residue"))
    })?;
    let count = conormal_count(mu, p, r);
    if count < k {
        return Ok(None);
    }
    Ok(Some(SocleLabel {
        partition: add_conormal(mu, p, k, r)?,
        multiplicity: factorial(k),
        full: count == k,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn classification_examples() {
        let d = AbacusDisplay::new(&Partition::empty(), p(3), 3).unwrap();
        let c = classify_beads(&d);
        assert!(c.removable.is_empty());
        assert_eq!(c.addable, vec![Bead { position: 2, residue: 0 }]);

        let d = AbacusDisplay::new(&Partition::empty(), p(5), 10).unwrap();
        let c = classify_beads(&d);
        assert!(c.removable.is_empty());
        assert_eq!(c.addable.len(), 1);
        assert_eq!(c.addable[0].position, 9);

        let d = AbacusDisplay::new(&part(&[4, 1]), p(3), 2).unwrap();
        let c = classify_beads(&d);
        assert_eq!(
            c.removable,
            vec![Bead { position: 1, residue: 2 }, Bead { position: 5, residue: 0 }]
        );
        assert_eq!(
            c.addable,
            vec![Bead { position: 1, residue: 0 }, Bead { position: 5, residue: 1 }]
        );
    }

    #[test]
    fn residues_match_node_contents() {
        // a removable bead removes the node (row, col) of content col - row
        for lam in crate::partition::partitions_of(9) {
            for q in [2, 3, 5] {
                let d = AbacusDisplay::new(&lam, p(q), lam.len() + 3).unwrap();
                let s = d.beads();
                for b in classify_beads(&d).removable {
                    let row = d.positions().rev().position(|x| x == b.position).unwrap();
                    let col = lam.part(row) - 1;
                    let content = (col as i64 - row as i64).rem_euclid(q as i64) as usize;
                    assert_eq!(content, b.residue, "{lam} s={s}");
                }
            }
        }
    }

    #[test]
    fn normal_and_conormal_examples() {
        let bare = AbacusDisplay::new(&Partition::empty(), p(3), 3).unwrap();
        for r in 0..3 {
            assert!(normal_beads(&bare, r).is_empty());
        }
        let d = AbacusDisplay::new(&part(&[4, 1]), p(3), 2).unwrap();
        assert_eq!(normal_beads(&d, 0), vec![5]);
        assert_eq!(conormal_beads(&d, 1), vec![5]);
        assert!(conormal_beads(&d, 2).is_empty());

        let empty = AbacusDisplay::new(&Partition::empty(), p(5), 5).unwrap();
        assert_eq!(conormal_beads(&empty, 0), vec![4]);
    }

    #[test]
    fn single_removable_bead_is_normal() {
        // (3): one removable node of residue 2, addable ones are of other residues
        let d = AbacusDisplay::new(&part(&[3]), p(5), 5).unwrap();
        let r = classify_beads(&d).removable[0].residue;
        assert_eq!(r, 2);
        assert_eq!(normal_beads(&d, r).len(), 1);
    }

    #[test]
    fn socle_restriction_of_hook() {
        let lam = part(&[6, 1, 1, 1, 1]);
        let c = BlockId::new(p(5), part(&[5, 1, 1, 1, 1]), 0).unwrap();
        let s = socle_restrict_label(&lam, &c).unwrap().unwrap();
        assert_eq!(s.partition, part(&[5, 1, 1, 1, 1]));
        assert_eq!(s.multiplicity, 1);
        assert!(s.full);
        assert_eq!(crate::abacus::p_weight(&s.partition, p(5)), 0);
    }

    #[test]
    fn socle_of_core_moves_its_normal_bead() {
        // (2) is a 3-core; removing its 1-node lands in the block of (1)
        let lam = part(&[2]);
        let c = block_of(&part(&[1]), p(3));
        let s = socle_restrict_label(&lam, &c).unwrap().unwrap();
        assert_eq!(s.partition, part(&[1]));
        assert!(s.full);
        let back = socle_induce_label(&part(&[1]), &block_of(&lam, p(3))).unwrap().unwrap();
        assert_eq!(back.partition, lam);
    }

    #[test]
    fn socle_is_zero_exactly_without_enough_normal_beads() {
        let q = p(3);
        let mut zero_cases = 0;
        for n in 2..=9 {
            let lowers: std::collections::BTreeSet<BlockId> = crate::partition::partitions_of(n - 1)
                .iter()
                .map(|m| block_of(m, q))
                .collect();
            for lam in crate::partition::partitions_of(n).into_iter().filter(|l| l.is_p_regular(q)) {
                let upper = block_of(&lam, q);
                for lower in &lowers {
                    let Some((k, r)) = removal_step(&upper, lower) else { continue };
                    let socle = socle_restrict_label(&lam, lower).unwrap();
                    let count = normal_count(&lam, q, r);
                    match socle {
                        None => {
                            assert!(count < k);
                            zero_cases += 1;
                        }
                        Some(s) => {
                            assert!(count >= k);
                            assert!(lower.contains(&s.partition));
                            assert!(s.partition.is_p_regular(q));
                        }
                    }
                }
            }
        }
        assert!(zero_cases > 0);
        // (4,1) at p = 3 has no 1-normal beads at all
        assert_eq!(normal_count(&part(&[4, 1]), q, 1), 0);
    }

    #[test]
    fn socle_rejects_singular_and_unrelated() {
        let c = block_of(&part(&[1, 1]), p(2));
        assert!(matches!(socle_restrict_label(&part(&[1, 1, 1]), &c), Err(Error::Domain(_))));
        let far = block_of(&part(&[5]), p(3));
        assert!(matches!(socle_restrict_label(&part(&[2]), &far), Err(Error::Domain(_))));
    }
}
