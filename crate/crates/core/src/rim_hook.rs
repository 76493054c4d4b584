//! Rim-hook stripping on Young diagrams.
//!
//! This works purely with rows, columns and hook lengths and never touches an
//! abacus, so it serves as an independent check on [`crate::abacus`].

use crate::partition::Partition;
use crate::prime::Prime;

/// Removes the rim hook attached to cell `(row, col)` (zero-based).
pub fn remove_rim_hook(lambda: &Partition, row: usize, col: usize) -> Partition {
    let parts = lambda.parts();
    let foot = lambda.conjugate().part(col) - 1;
    let mut next = parts.to_vec();
    for r in row..foot {
        next[r] = parts[r + 1] - 1;
    }
    next[foot] = col;
    Partition::new(next).expect("rim hook removal leaves a partition")
}

pub fn hook_length(lambda: &Partition, conj: &Partition, row: usize, col: usize) -> usize {
    (lambda.part(row) - col - 1) + (conj.part(col) - row - 1) + 1
}

/// Every partition reachable by removing one rim hook of length `len`.
pub fn rim_hook_removals(lambda: &Partition, len: usize) -> Vec<Partition> {
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for row in 0..lambda.len() {
        for col in 0..lambda.part(row) {
            if hook_length(lambda, &conj, row, col) == len {
                out.push(remove_rim_hook(lambda, row, col));
            }
        }
    }
    out
}

/// Strips rim p-hooks (always the first one found) until none is left;
/// returns the remaining core and how many hooks came off.
pub fn core_by_rim_hooks_oracle(lambda: &Partition, p: Prime) -> (Partition, usize) {
    let mut cur = lambda.clone();
    let mut count = 0;
    while let Some(next) = rim_hook_removals(&cur, p.get()).into_iter().next() {
        cur = next;
        count += 1;
    }
    (cur, count)
}

/// Every `(core, removals)` outcome over all stripping orders.
pub fn all_strippings(lambda: &Partition, p: Prime) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    let mut stack = vec![(lambda.clone(), 0usize)];
    let mut seen = std::collections::HashSet::new();
    while let Some((cur, depth)) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        let next = rim_hook_removals(&cur, p.get());
        if next.is_empty() {
            out.push((cur, depth));
        }
        stack.extend(next.into_iter().map(|n| (n, depth + 1)));
    }
    out.sort();
    out.dedup();
    out
}
