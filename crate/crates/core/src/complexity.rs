//! Complexity of simple modules of symmetric groups.
//!
//! [`complexity_of`] runs a fixed cascade of rules and stops at the first one
//! that applies. Every rule that was tried is recorded in the trace, and the
//! deciding rule is returned together with its evidence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abacus::block_of;
use crate::branching::{induce_chain_to_rouquier_with, is_rouquier, SemisimpleChain, DEFAULT_DEPTH_CAP};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::prime::Prime;
use crate::weight_two::{label_of, WeightTwoLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ComplexityValue {
    Exact { value: usize },
    Interval { lo: usize, hi: usize },
}

impl ComplexityValue {
    pub fn bounds(&self) -> (usize, usize) {
        match *self {
            ComplexityValue::Exact { value } => (value, value),
            ComplexityValue::Interval { lo, hi } => (lo, hi),
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            ComplexityValue::Exact { value } => Some(value),
            ComplexityValue::Interval { .. } => None,
        }
    }
}

impl fmt::Display for ComplexityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexityValue::Exact { value } => write!(f, "{value}"),
            ComplexityValue::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum Justification {
    /// Values known case by case rather than from a general rule.
    KnownValue { source: String },
    /// Weight 0: the module is projective.
    Projective,
    /// Weight 1: cyclic defect group of order `p`, and the module is not projective.
    WeightOne,
    WeightTwoHookException,
    WeightTwoGeneric { label: WeightTwoLabel },
    Rouquier,
    InducesToRouquier { chain: SemisimpleChain },
    HookUpperBound,
    /// Bounded by the weight and by the largest elementary abelian `p`-rank of `Σ_n`.
    GenericBounds { max_rank: usize },
}

impl Justification {
    pub fn name(&self) -> &'static str {
        match self {
            Justification::KnownValue { .. } => "KnownValue",
            Justification::Projective => "Projective",
            Justification::WeightOne => "WeightOne",
            Justification::WeightTwoHookException => "WeightTwoHookException",
            Justification::WeightTwoGeneric { .. } => "WeightTwoGeneric",
            Justification::Rouquier => "Rouquier",
            Justification::InducesToRouquier { .. } => "InducesToRouquier",
            Justification::HookUpperBound => "HookUpperBound",
            Justification::GenericBounds { .. } => "GenericBounds",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub rule: String,
    pub applied: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityResult {
    pub partition: Partition,
    pub p: Prime,
    pub weight: usize,
    pub value: ComplexityValue,
    pub justification: Justification,
    pub trace: Vec<TraceEntry>,
}

const KNOWN: &[(u64, &[usize], usize, &str)] =
    &[(2, &[3, 1], 2, "D^(3,1) restricted to a Klein four-group is trivial of dimension 2")];

fn note(trace: &mut Vec<TraceEntry>, rule: &str, applied: bool, note: String) -> bool {
    trace.push(TraceEntry { rule: rule.into(), applied, note });
    applied
}

/// `((w-1)p + 1, 1^{p-1})`.
pub fn upper_hook(w: usize, p: Prime) -> Partition {
    let q = p.get();
    Partition::hook((w - 1) * q, q - 1)
}

pub fn complexity_of(lambda: &Partition, p: Prime) -> Result<ComplexityResult> {
    complexity_of_with(lambda, p, DEFAULT_DEPTH_CAP)
}

pub fn complexity_of_with(lambda: &Partition, p: Prime, depth_cap: usize) -> Result<ComplexityResult> {
    if !lambda.is_p_regular(p) {
        return Err(Error::Domain(format!("{lambda} is not {p}-regular, so labels no simple module")));
    }
    let block = block_of(lambda, p);
    let w = block.weight;
    let q = p.get();
    let mut trace = Vec::new();
    let done = |value, justification, trace| {
        Ok(ComplexityResult { partition: lambda.clone(), p, weight: w, value, justification, trace })
    };
    let exact = |value| ComplexityValue::Exact { value };

    if let Some(&(_, _, value, source)) =
        KNOWN.iter().find(|(kp, parts, _, _)| *kp == q as u64 && lambda.parts() == *parts)
    {
        note(&mut trace, "table", true, format!("listed value {value}"));
        return done(exact(value), Justification::KnownValue { source: source.into() }, trace);
    }
    note(&mut trace, "table", false, "not listed".into());

    if note(&mut trace, "weight-0", w == 0, format!("weight {w}")) {
        return done(exact(0), Justification::Projective, trace);
    }
    if note(&mut trace, "weight-1", w == 1, format!("weight {w}")) {
        return done(exact(1), Justification::WeightOne, trace);
    }
    if note(&mut trace, "weight-2", p.is_odd() && w == 2, format!("weight {w}, p={q}")) {
        if *lambda == upper_hook(2, p) {
            return done(exact(1), Justification::WeightTwoHookException, trace);
        }
        let label = label_of(lambda, p)?;
        return done(exact(2), Justification::WeightTwoGeneric { label }, trace);
    }
    if w < q {
        if note(&mut trace, "rouquier", is_rouquier(&block), format!("{block}")) {
            return done(exact(w), Justification::Rouquier, trace);
        }
        let chain = induce_chain_to_rouquier_with(lambda, p, depth_cap)?;
        let found = chain.as_ref().map(|c| format!("chain of length {}", c.len()));
        if note(&mut trace, "induce-to-rouquier", chain.is_some(), found.unwrap_or_else(|| "no chain".into())) {
            let chain = chain.unwrap();
            return done(exact(w), Justification::InducesToRouquier { chain }, trace);
        }
    } else {
        note(&mut trace, "rouquier", false, format!("weight {w} is not below p"));
        note(&mut trace, "induce-to-rouquier", false, format!("weight {w} is not below p"));
    }
    let hook = p.is_odd() && *lambda == upper_hook(w, p);
    if note(&mut trace, "upper-hook", hook, format!("p={q}")) {
        return done(ComplexityValue::Interval { lo: 1, hi: w - 1 }, Justification::HookUpperBound, trace);
    }
    let max_rank = lambda.size() / q;
    note(&mut trace, "generic", true, format!("weight {w}, elementary abelian rank at most {max_rank}"));
    done(
        ComplexityValue::Interval { lo: 1, hi: w.min(max_rank) },
        Justification::GenericBounds { max_rank },
        trace,
    )
}

/// Complexity of the simple module of the principal block of `Σ_p ≀ Σ_w`
/// attached to a composition `(a_1, ..., a_k)` of `w`: each factor
/// contributes `a_i` copies of a cyclic-defect module of complexity 1.
pub fn wreath_block_complexity(parts: &[usize], p: Prime) -> Result<usize> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::Domain(format!("{parts:?} is not a composition")));
    }
    let w: usize = parts.iter().sum();
    if w >= p.get() {
        return Err(Error::Domain(format!("weight {w} is not below p={p}")));
    }
    Ok(w)
}

/// Upper bound on the complexity of `((w-1)p + 1, 1^{p-1})`.
pub fn hook_upper_bound(w: usize, p: Prime) -> Result<usize> {
    if !p.is_odd() {
        return Err(Error::Domain("the bound fails for p = 2".into()));
    }
    if w < 2 {
        return Err(Error::Domain(format!("need w >= 2, got {w}")));
    }
    Ok(w - 1)
}
