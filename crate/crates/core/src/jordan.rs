//! Jordan types of modules for a cyclic group of order `p`.
//!
//! A module for `C_p` over a field of characteristic `p` is a direct sum of
//! Jordan blocks `J_1, ..., J_p`; `J_p` is the free module. Tensor products of
//! blocks have a closed form, and everything here is also computable directly
//! from matrices by [`jordan_type_of_nilpotent`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::FpMatrix;
use crate::prime::Prime;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanMultiset {
    p: Prime,
    mult: BTreeMap<usize, usize>,
}

impl JordanMultiset {
    pub fn empty(p: Prime) -> Self {
        JordanMultiset { p, mult: BTreeMap::new() }
    }

    pub fn from_blocks(p: Prime, sizes: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut m = Self::empty(p);
        for size in sizes {
            m.add(size, 1)?;
        }
        Ok(m)
    }

    pub fn add(&mut self, size: usize, count: usize) -> Result<()> {
        if size == 0 || size > self.p.get() {
            return Err(Error::Domain(format!("no Jordan block J_{size} for p={}", self.p)));
        }
        if count > 0 {
            *self.mult.entry(size).or_default() += count;
        }
        Ok(())
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn multiplicity(&self, size: usize) -> usize {
        self.mult.get(&size).copied().unwrap_or(0)
    }

    /// `(size, multiplicity)` in increasing size.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mult.iter().map(|(&s, &m)| (s, m))
    }

    pub fn dim(&self) -> usize {
        self.iter().map(|(s, m)| s * m).sum()
    }

    /// Number of indecomposable summands.
    pub fn summands(&self) -> usize {
        self.mult.values().sum()
    }

    pub fn is_free(&self) -> bool {
        self.mult.keys().all(|&s| s == self.p.get())
    }

    pub fn merge(&self, other: &JordanMultiset) -> Result<JordanMultiset> {
        if self.p != other.p {
            return Err(Error::Domain(format!("cannot mix p={} with p={}", self.p, other.p)));
        }
        let mut out = self.clone();
        for (s, m) in other.iter() {
            out.add(s, m)?;
        }
        Ok(out)
    }
}

impl fmt::Display for JordanMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .iter()
            .map(|(s, m)| if m == 1 { format!("J{s}") } else { format!("{m}J{s}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// The projective-free part.
pub fn omega0(m: &JordanMultiset) -> JordanMultiset {
    let mut out = m.clone();
    out.mult.remove(&m.p.get());
    out
}

fn check_size(x: usize, p: Prime) -> Result<()> {
    if x == 0 || x >= p.get() {
        return Err(Error::Domain(format!("size {x} outside 1..{}", p.get() - 1)));
    }
    Ok(())
}

/// `J_x ⊗ J_y` for `1 ≤ x, y < p`.
pub fn jordan_tensor(x: usize, y: usize, p: Prime) -> Result<JordanMultiset> {
    check_size(x, p)?;
    check_size(y, p)?;
    let q = p.get();
    let mut out = JordanMultiset::empty(p);
    if x + y <= q {
        for k in 1..=x.min(y) {
            out.add(x.abs_diff(y) + 2 * k - 1, 1)?;
        }
        return Ok(out);
    }
    let mut out = jordan_tensor(q - x, q - y, p)?;
    let rest = x * y - out.dim();
    out.add(q, rest / q)?;
    Ok(out)
}

/// A nilpotent matrix with `N^p = 0`, standing for `u - 1` for a unit `u` of order `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentMatrix(FpMatrix);

impl NilpotentMatrix {
    pub fn new(m: FpMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Domain("nilpotent matrix must be square".into()));
        }
        if !m.pow(m.prime().get()).is_zero() {
            return Err(Error::Domain("matrix is not nilpotent of index at most p".into()));
        }
        Ok(NilpotentMatrix(m))
    }

    /// `u - 1` for a unipotent `u`.
    pub fn from_unipotent(u: &FpMatrix) -> Result<Self> {
        let id = FpMatrix::identity(u.prime(), u.rows());
        Self::new(u.sub(&id))
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.0
    }
}

/// Block sizes from the rank sequence: there are `rank(N^{t-1}) - rank(N^t)`
/// blocks of size at least `t`.
pub fn jordan_type_of_nilpotent(n: &NilpotentMatrix) -> JordanMultiset {
    let m = n.matrix();
    let p = m.prime();
    let mut ranks = vec![m.rows()];
    let mut power = FpMatrix::identity(p, m.rows());
    for _ in 0..=p.get() {
        power = power.mul(m);
        ranks.push(power.rank());
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut out = JordanMultiset::empty(p);
    for t in 1..=p.get() {
        let exact = at_least[t - 1] - at_least.get(t).copied().unwrap_or(0);
        out.add(t, exact).expect("block sizes are at most p");
    }
    out
}

/// The nilpotent `u⊗u - 1` for `u = 1 + J` acting on `J_x ⊗ J_y`.
pub fn tensor_nilpotent(x: usize, y: usize, p: Prime) -> NilpotentMatrix {
    let unipotent = |n| FpMatrix::identity(p, n).add(&FpMatrix::jordan_block(p, n));
    NilpotentMatrix::from_unipotent(&unipotent(x).kron(&unipotent(y)))
        .expect("a tensor of unipotents of p-power order is unipotent")
}

/// `J_x ⊗ J_y` computed from its matrix.
pub fn jordan_tensor_oracle(x: usize, y: usize, p: Prime) -> Result<JordanMultiset> {
    check_size(x, p)?;
    check_size(y, p)?;
    Ok(jordan_type_of_nilpotent(&tensor_nilpotent(x, y, p)))
}

/// Non-projective part of the restriction of the hook simple `D_i` of `Σ_p` to `C_p`.
pub fn hook_restriction(i: usize, p: Prime) -> Result<JordanMultiset> {
    check_size(i, p)?;
    let size = if i % 2 == 1 { i } else { p.get() - i };
    JordanMultiset::from_blocks(p, [size])
}

fn check_nabla(i: usize, j: usize, p: Prime) -> Result<()> {
    if j == 0 || j > i || i >= p.get() {
        return Err(Error::Domain(format!("need 1 <= j <= i < p, got i={i} j={j} p={p}")));
    }
    Ok(())
}

/// Non-projective part of `∇(i,j) = ⊕_{k=j..i} D_k ⊠ D_{i+j-k}` restricted to the diagonal `C_p`.
pub fn nabla_restriction(i: usize, j: usize, p: Prime) -> Result<JordanMultiset> {
    check_nabla(i, j, p)?;
    let q = p.get();
    let (s, width) = (i + j, i - j + 1);
    let mut out = JordanMultiset::empty(p);
    if s % 2 == 0 {
        for k in 1..=(s / 2).min(q - s / 2) {
            out.add(2 * k - 1, (2 * k - 1).min(width))?;
        }
    } else {
        let top = ((s - 1) / 2).min(q.saturating_sub(s.div_ceil(2)));
        for k in 1..=top {
            out.add(q - 2 * k, (2 * k).min(width))?;
        }
    }
    Ok(out)
}

/// The same restriction summed term by term, each tensor read off its matrix.
pub fn nabla_restriction_oracle(i: usize, j: usize, p: Prime) -> Result<JordanMultiset> {
    check_nabla(i, j, p)?;
    let size = |m: JordanMultiset| m.iter().next().map(|(s, _)| s).expect("one block");
    let mut out = JordanMultiset::empty(p);
    for k in j..=i {
        let x = size(hook_restriction(k, p)?);
        let y = size(hook_restriction(i + j - k, p)?);
        out = out.merge(&omega0(&jordan_tensor_oracle(x, y, p)?))?;
    }
    Ok(out)
}

fn check_pair_range(a: usize, b: usize, p: Prime) -> Result<()> {
    let q = p.get();
    if !(2 <= b && b <= a && a + 2 <= q && a + b <= q) {
        return Err(Error::Domain(format!("need 2 <= b <= a <= p-2 and a+b <= p, got a={a} b={b} p={q}")));
    }
    Ok(())
}

/// Number of summands of the middle layer `∇(a+1,b) ⊕ ∇(a,b-1)` on the diagonal.
pub fn lem1_count(a: usize, b: usize, p: Prime) -> Result<usize> {
    check_pair_range(a, b, p)?;
    let (a, b, q) = (a as i64, b as i64, p.get() as i64);
    let n = if (a + b) % 2 == 0 {
        (a + 3 * b - 2) * (a - b + 2) / 2
    } else if a + b < q {
        (a + 3 * b - 1) * (a - b + 1) / 2 + 2 * b - 1
    } else {
        (a + 3 * b - 1) * (a - b + 1) / 2 + (2 * b - 1) - (a - b + 2)
    };
    Ok(n as usize)
}

/// Dimension of the non-projective three-layer summand on the diagonal.
pub fn lem2_dim(a: usize, b: usize, p: Prime) -> Result<usize> {
    check_pair_range(a, b, p)?;
    let (a, b, q) = (a as i64, b as i64, p.get() as i64);
    let d = if (a + b) % 2 == 0 {
        q * (a + 3 * b - 2) * (a - b + 2) / 2 + a * (1 - 2 * b) - b
    } else if a + b < q {
        q * (a + 3 * b - 1) * (a - b + 1) / 2 + a * (2 * b - 1) + b
    } else {
        q * (a + 3 * b - 1) * (a - b + 1) / 2 + a * (2 * b - 1) + b - q * (a - b + 2)
    };
    Ok(d as usize)
}

/// Summand count of the middle layer, computed from the matrices.
pub fn lem1_oracle(a: usize, b: usize, p: Prime) -> Result<usize> {
    check_pair_range(a, b, p)?;
    Ok(nabla_restriction_oracle(a + 1, b, p)?.summands() + nabla_restriction_oracle(a, b - 1, p)?.summands())
}

/// Dimension of the three layers, computed from the matrices.
pub fn lem2_oracle(a: usize, b: usize, p: Prime) -> Result<usize> {
    check_pair_range(a, b, p)?;
    Ok(2 * nabla_restriction_oracle(a, b, p)?.dim()
        + nabla_restriction_oracle(a + 1, b, p)?.dim()
        + nabla_restriction_oracle(a, b - 1, p)?.dim())
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Dimension of the simple module of the hook `(p+b, 1^{p-b})`.
pub fn hook_dim(p: Prime, b: usize) -> Result<u128> {
    let q = p.get();
    if b < 2 || b >= q {
        return Err(Error::Domain(format!("need 2 <= b < p, got b={b}")));
    }
    Ok(binomial(2 * q - 2, q - b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FreenessVerdict {
    NotFreeByDimension,
    /// More summands in a semisimple subquotient than `dim / p`.
    NotFreeByCount { n: usize, dim: usize },
    ReducedBySignTwist(usize, usize),
}

/// Why the restriction of `D^{[a,b]}` (principal block of `Σ_{2p}`) to the
/// diagonal `C_p` is not free.
pub fn freeness_obstruction(a: usize, b: usize, p: Prime) -> Result<FreenessVerdict> {
    let q = p.get();
    if !p.is_odd() || b == 0 || b > a || a >= q {
        return Err(Error::Domain(format!("need 1 <= b <= a <= p-1, got a={a} b={b} p={q}")));
    }
    if (a, b) == (q - 1, 1) {
        return Err(Error::Excluded(format!("[{a},1] is the hook (p+1,1^(p-1))")));
    }
    if a == q - 1 || b == 1 {
        return Ok(FreenessVerdict::NotFreeByDimension);
    }
    if a + b > q {
        return Ok(FreenessVerdict::ReducedBySignTwist(q - b, q - a));
    }
    let n = lem1_count(a, b, p)?;
    let dim = lem2_dim(a, b, p)?;
    if n * q <= dim {
        return Err(Error::Domain(format!("count {n} does not exceed {dim}/{q}")));
    }
    Ok(FreenessVerdict::NotFreeByCount { n, dim })
}
