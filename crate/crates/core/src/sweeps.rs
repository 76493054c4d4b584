//! Exhaustive checks of the Jordan-block closed forms against the matrix oracle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::jordan::{
    freeness_obstruction, hook_dim, jordan_tensor, jordan_tensor_oracle, lem1_count, lem1_oracle, lem2_dim,
    lem2_oracle, nabla_restriction, nabla_restriction_oracle, FreenessVerdict,
};
use crate::prime::Prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    JordanTensor,
    NablaRestriction,
    SummandCount,
    LayerDimension,
    Obstruction,
    HookDimension,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::JordanTensor,
        Check::NablaRestriction,
        Check::SummandCount,
        Check::LayerDimension,
        Check::Obstruction,
        Check::HookDimension,
    ];
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Check::JordanTensor => "jordan_tensor",
            Check::NablaRestriction => "nabla_restriction",
            Check::SummandCount => "summand_count",
            Check::LayerDimension => "layer_dimension",
            Check::Obstruction => "obstruction",
            Check::HookDimension => "hook_dimension",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub check: Check,
    pub p: Prime,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn pair_range(q: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..q.saturating_sub(1)).flat_map(move |a| (2..=a.min(q - a)).map(move |b| (a, b)))
}

pub fn run(check: Check, p: Prime) -> SweepReport {
    let q = p.get();
    let mut cases = 0;
    let mut failures = Vec::new();
    let mut record = |ok: bool, what: String| {
        cases += 1;
        if !ok {
            failures.push(what);
        }
    };
    match check {
        Check::JordanTensor => {
            for x in 1..q {
                for y in 1..q {
                    let closed = jordan_tensor(x, y, p).ok();
                    let oracle = jordan_tensor_oracle(x, y, p).ok();
                    let ok = closed.is_some() && closed == oracle && closed.as_ref().map(|c| c.dim()) == Some(x * y);
                    record(ok, format!("J{x} x J{y}"));
                }
            }
        }
        Check::NablaRestriction => {
            for i in 1..q {
                for j in 1..=i {
                    let closed = nabla_restriction(i, j, p).ok();
                    let ok = closed.is_some() && closed == nabla_restriction_oracle(i, j, p).ok();
                    record(ok, format!("nabla({i},{j})"));
                }
            }
        }
        Check::SummandCount => {
            for (a, b) in pair_range(q) {
                let ok = lem1_count(a, b, p).ok().is_some_and(|n| Some(n) == lem1_oracle(a, b, p).ok());
                record(ok, format!("count({a},{b})"));
            }
        }
        Check::LayerDimension => {
            for (a, b) in pair_range(q) {
                let ok = lem2_dim(a, b, p).ok().is_some_and(|d| Some(d) == lem2_oracle(a, b, p).ok());
                record(ok, format!("dim({a},{b})"));
            }
        }
        Check::Obstruction => {
            for (a, b) in pair_range(q) {
                let ok = matches!(
                    freeness_obstruction(a, b, p),
                    Ok(FreenessVerdict::NotFreeByCount { n, dim }) if n * q > dim
                );
                record(ok, format!("obstruction({a},{b})"));
            }
        }
        Check::HookDimension => {
            for b in 2..q {
                let ok = hook_dim(p, b).is_ok_and(|d| d % q as u128 != 0);
                record(ok, format!("hook_dim({b})"));
            }
        }
    }
    SweepReport { check, p, cases, failures }
}
