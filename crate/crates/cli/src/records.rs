//! Line-delimited output records.

use modsym::branching::{ChainStep, SemisimpleChain};
use modsym::complexity::{ComplexityResult, TraceEntry};
use modsym::sweeps::SweepReport;
use modsym::{BlockId, ComplexityValue, Error};
use serde::{Deserialize, Serialize};

pub const CORE: &str = "modsym.core/1";
pub const LABEL: &str = "modsym.label/1";
pub const CHAIN: &str = "modsym.chain/1";
pub const COMPLEXITY: &str = "modsym.complexity/1";
pub const RANKVAR: &str = "modsym.rankvar/1";
pub const VERIFY: &str = "modsym.verify/1";
pub const ERROR: &str = "modsym.error/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreRecord {
    pub schema: String,
    pub partition: String,
    pub p: u64,
    pub core: String,
    pub weight: usize,
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRecord {
    pub schema: String,
    pub partition: String,
    pub p: u64,
    pub block_core: String,
    pub a: usize,
    pub b: usize,
    pub eps: u8,
    pub p_regular: bool,
    /// Absent for `p`-singular partitions, which label no simple module.
    pub route: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRecord {
    pub core: String,
    pub weight: usize,
    pub n: usize,
}

impl From<&BlockId> for BlockRecord {
    fn from(b: &BlockId) -> Self {
        BlockRecord { core: b.core.to_string(), weight: b.weight, n: b.degree() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub n: usize,
    pub core: String,
    pub k: usize,
    pub residue: usize,
    pub image_partition: String,
    pub exceptional: bool,
}

impl From<&ChainStep> for StepRecord {
    fn from(s: &ChainStep) -> Self {
        StepRecord {
            n: s.n,
            core: s.core.to_string(),
            k: s.k,
            residue: s.residue,
            image_partition: s.image_partition.to_string(),
            exceptional: s.exceptional,
        }
    }
}

pub fn steps(chain: &SemisimpleChain) -> Vec<StepRecord> {
    chain.steps().iter().map(StepRecord::from).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub schema: String,
    pub partition: String,
    pub p: u64,
    pub direction: String,
    pub found: bool,
    pub start: BlockRecord,
    pub end: Option<BlockRecord>,
    pub steps: Vec<StepRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityRecord {
    pub schema: String,
    pub partition: String,
    pub p: u64,
    pub weight: usize,
    pub value: ComplexityValue,
    pub justification: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<StepRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
}

impl ComplexityRecord {
    pub fn new(r: &ComplexityResult, with_trace: bool) -> Self {
        let chain = match &r.justification {
            modsym::Justification::InducesToRouquier { chain } => Some(steps(chain)),
            _ => None,
        };
        ComplexityRecord {
            schema: COMPLEXITY.into(),
            partition: r.partition.to_string(),
            p: r.p.get() as u64,
            weight: r.weight,
            value: r.value,
            justification: r.justification.name().into(),
            chain,
            trace: with_trace.then(|| r.trace.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankvarRecord {
    pub schema: String,
    pub p: u64,
    pub rank: usize,
    pub dim: usize,
    pub points: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub schema: String,
    pub check: String,
    pub p: u64,
    pub cases: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

impl From<&SweepReport> for VerifyRecord {
    fn from(r: &SweepReport) -> Self {
        VerifyRecord {
            schema: VERIFY.into(),
            check: r.check.to_string(),
            p: r.p.get() as u64,
            cases: r.cases,
            failures: r.failures.clone(),
            pass: r.passed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub schema: String,
    pub kind: String,
    pub message: String,
}

impl ErrorRecord {
    pub fn new(e: &Error) -> Self {
        let kind = match e {
            Error::Undecided { .. } => "undecided",
            Error::Parse(_) => "parse",
            _ => "domain",
        };
        ErrorRecord { schema: ERROR.into(), kind: kind.into(), message: e.to_string() }
    }
}
