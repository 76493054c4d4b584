//! Rational points of rank varieties for modules of elementary abelian
//! `p`-groups given by explicit matrices.
//!
//! A module for `E = ⟨g_1, ..., g_k⟩ ≅ (C_p)^k` is non-free along the direction
//! `α` when it is not free over the cyclic shifted subgroup generated by
//! `u_α = 1 + Σ α_i (g_i - 1)`. At prime-field points the same answer comes from
//! the group element `Π g_i^{α_i}`; both are computed and compared.
//!
//! Text format:
//!
//! ```text
//! p 3
//! gen
//! 1 1
//! 0 1
//! gen
//! 1 0
//! 0 1
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fp::FpMatrix;
use crate::prime::Prime;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemAbelianModule {
    p: Prime,
    generators: Vec<FpMatrix>,
    dim: usize,
}

impl ElemAbelianModule {
    pub fn new(p: Prime, generators: Vec<FpMatrix>) -> Result<Self> {
        let dim = generators.first().map_or(0, FpMatrix::rows);
        let id = FpMatrix::identity(p, dim);
        for (i, g) in generators.iter().enumerate() {
            if g.prime() != p || !g.is_square() || g.rows() != dim {
                return Err(Error::Domain(format!("generator {i} is not a {dim}x{dim} matrix mod {p}")));
            }
            if g.pow(p.get()) != id {
                return Err(Error::Domain(format!("generator {i} does not have order dividing {p}")));
            }
            if let Some(j) = (0..i).find(|&j| !g.commutes_with(&generators[j])) {
                return Err(Error::Domain(format!("generators {j} and {i} do not commute")));
            }
        }
        if generators.is_empty() {
            return Err(Error::Domain("at least one generator is needed".into()));
        }
        Ok(ElemAbelianModule { p, generators, dim })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[FpMatrix] {
        &self.generators
    }

    fn check_alpha(&self, alpha: &[u32]) -> Result<()> {
        if alpha.len() != self.rank() {
            return Err(Error::Domain(format!("expected {} coordinates, got {}", self.rank(), alpha.len())));
        }
        if alpha.iter().all(|&a| a % self.p.get() as u32 == 0) {
            return Err(Error::Domain("the zero vector is not a direction".into()));
        }
        Ok(())
    }

    /// `u_α = 1 + Σ α_i (g_i - 1)`.
    pub fn shifted_unit(&self, alpha: &[u32]) -> Result<FpMatrix> {
        self.check_alpha(alpha)?;
        let id = FpMatrix::identity(self.p, self.dim);
        Ok(self
            .generators
            .iter()
            .zip(alpha)
            .fold(id.clone(), |acc, (g, &a)| acc.add(&g.sub(&id).scale(a))))
    }

    /// `Π g_i^{α_i}`.
    pub fn group_element(&self, alpha: &[u32]) -> Result<FpMatrix> {
        self.check_alpha(alpha)?;
        let id = FpMatrix::identity(self.p, self.dim);
        Ok(self
            .generators
            .iter()
            .zip(alpha)
            .fold(id, |acc, (g, &a)| acc.mul(&g.pow(a as usize))))
    }

    /// Conjugates every generator by `s`.
    pub fn change_basis(&self, s: &FpMatrix) -> Result<Self> {
        let inv = s.inverse().ok_or_else(|| Error::Domain("change of basis is singular".into()))?;
        let gens = self.generators.iter().map(|g| s.mul(g).mul(&inv)).collect();
        Self::new(self.p, gens)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.p != other.p || self.rank() != other.rank() {
            return Err(Error::Domain("summands must share p and rank".into()));
        }
        let gens = self.generators.iter().zip(&other.generators).map(|(a, b)| a.direct_sum(b)).collect();
        Self::new(self.p, gens)
    }

    /// Whether the module is free over the cyclic group generated by `u`.
    pub fn is_free_over(&self, u: &FpMatrix) -> Result<bool> {
        is_free_over(u)
    }

    /// Prime-field directions, normalised so the first non-zero entry is 1,
    /// along which the module is not free.
    pub fn rational_points(&self) -> Result<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        for alpha in projective_points(self.p, self.rank()) {
            let by_unit = is_free_over(&self.shifted_unit(&alpha)?)?;
            let by_element = is_free_over(&self.group_element(&alpha)?)?;
            if by_unit != by_element {
                return Err(Error::ProbeDisagreement(alpha.iter().map(|&a| a as u64).collect()));
            }
            if !by_unit {
                out.push(alpha);
            }
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("p {}\n", self.p);
        for g in &self.generators {
            s.push_str("gen\n");
            s.push_str(&g.to_string());
        }
        s
    }
}

/// Free over `⟨u⟩` iff `(u - 1)^{p-1}` has rank `dim / p`.
pub fn is_free_over(u: &FpMatrix) -> Result<bool> {
    let p = u.prime();
    let q = p.get();
    let n = u.rows();
    let id = FpMatrix::identity(p, n);
    if !u.is_square() || u.pow(q) != id {
        return Err(Error::Domain("unit must be square with order dividing p".into()));
    }
    if !n.is_multiple_of(q) {
        return Ok(false);
    }
    Ok(u.sub(&id).pow(q - 1).rank() == n / q)
}

/// One representative of each line of `F_p^k`, first non-zero entry 1.
pub fn projective_points(p: Prime, k: usize) -> Vec<Vec<u32>> {
    let q = p.get() as u32;
    let mut out = Vec::new();
    for lead in 0..k {
        let tail = k - lead - 1;
        for code in 0..(q as usize).pow(tail as u32) {
            let mut v = vec![0; k];
            v[lead] = 1;
            let mut c = code;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = (c % q as usize) as u32;
                c /= q as usize;
            }
            out.push(v);
        }
    }
    out
}

impl FromStr for ElemAbelianModule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty module description".into()))?;
        let p = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["p", v] => v.parse::<u64>().map_err(|e| Error::Parse(format!("prime: {e}")))?,
            _ => return Err(Error::Parse(format!("expected `p <prime>`, got `{header}`"))),
        };
        let p = Prime::new(p)?;
        let mut blocks: Vec<Vec<Vec<i64>>> = Vec::new();
        for line in lines {
            if line == "gen" {
                blocks.push(Vec::new());
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|e| Error::Parse(format!("entry `{t}`: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            blocks
                .last_mut()
                .ok_or_else(|| Error::Parse("matrix row before the first `gen`".into()))?
                .push(row);
        }
        let gens = blocks
            .iter()
            .map(|rows| FpMatrix::from_rows(p, rows))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, gens)
    }
}

impl fmt::Display for ElemAbelianModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Standard modules used in tests and examples.
pub mod fixtures {
    use super::*;

    /// The two directions `(1,0)` and `(1,1)` of `(C_p)^2`, whose cyclic
    /// subgroups are not conjugate in `Σ_{2p}`.
    pub const LINE_FIRST: [u32; 2] = [1, 0];
    pub const LINE_DIAGONAL: [u32; 2] = [1, 1];

    /// `k` generators acting as the identity on `F_p^dim`.
    pub fn trivial(p: Prime, k: usize, dim: usize) -> ElemAbelianModule {
        ElemAbelianModule::new(p, vec![FpMatrix::identity(p, dim); k]).expect("identity generators")
    }

    /// The restriction of `D^{(3,1)}` to the Klein four-group at `p = 2`, which is `F ⊕ F`.
    pub fn klein_two_dim() -> ElemAbelianModule {
        trivial(Prime::new(2).unwrap(), 2, 2)
    }

    /// Cyclic shift on `F_p^p`.
    pub fn cycle(p: Prime) -> FpMatrix {
        let q = p.get();
        let mut m = FpMatrix::zeros(p, q, q);
        for i in 0..q {
            m.set((i + 1) % q, i, 1);
        }
        m
    }

    /// The regular module of `(C_p)^k`.
    pub fn regular(p: Prime, k: usize) -> ElemAbelianModule {
        let id = FpMatrix::identity(p, p.get());
        let shift = cycle(p);
        let gens = (0..k)
            .map(|i| {
                (0..k).fold(FpMatrix::identity(p, 1), |acc, j| acc.kron(if i == j { &shift } else { &id }))
            })
            .collect();
        ElemAbelianModule::new(p, gens).expect("regular representation")
    }

    /// Regular for the first generator, trivial for the second: `F_p[g_1]` with `g_2 = 1`.
    pub fn free_over_first(p: Prime) -> ElemAbelianModule {
        ElemAbelianModule::new(p, vec![cycle(p), FpMatrix::identity(p, p.get())]).expect("commuting")
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn shifted_units() {
        let q = p(3);
        let m = regular(q, 2);
        assert_eq!(m.shifted_unit(&[1, 0]).unwrap(), m.generators()[0]);
        let u = m.shifted_unit(&[2, 1]).unwrap();
        assert_eq!(u.pow(3), FpMatrix::identity(q, 9));
        assert!(m.shifted_unit(&[0, 0]).is_err());
        let t = trivial(q, 2, 2);
        assert_eq!(t.shifted_unit(&[1, 2]).unwrap(), FpMatrix::identity(q, 2));
    }

    #[test]
    fn freeness_examples() {
        let q = p(5);
        assert!(is_free_over(&cycle(q)).unwrap());
        assert!(!is_free_over(&FpMatrix::identity(q, 1)).unwrap());
        let k = klein_two_dim();
        for a in projective_points(k.prime(), 2) {
            assert!(!k.is_free_over(&k.shifted_unit(&a).unwrap()).unwrap());
        }
        assert!(is_free_over(&FpMatrix::identity(q, 2).scale(2)).is_err());
    }

    #[test]
    fn point_sets() {
        for q in [2, 3, 5] {
            assert!(regular(p(q), 2).rational_points().unwrap().is_empty());
        }
        let k = klein_two_dim();
        assert_eq!(k.rational_points().unwrap().len(), 3);
        let m = free_over_first(p(3));
        let pts = m.rational_points().unwrap();
        assert!(pts.contains(&vec![0, 1]));
        assert!(!pts.contains(&LINE_FIRST.to_vec()));
        let t = trivial(p(5), 2, 1);
        let pts = t.rational_points().unwrap();
        assert!(pts.contains(&LINE_FIRST.to_vec()) && pts.contains(&LINE_DIAGONAL.to_vec()));
        assert_eq!(projective_points(p(5), 2).len(), 6);
        assert_eq!(projective_points(p(2), 3).len(), 7);
    }

    #[test]
    fn direct_sums_unite_points() {
        let q = p(3);
        let a = free_over_first(q);
        let b = ElemAbelianModule::new(q, vec![FpMatrix::identity(q, 3), cycle(q)]).unwrap();
        let mut union = a.rational_points().unwrap();
        for x in b.rational_points().unwrap() {
            if !union.contains(&x) {
                union.push(x);
            }
        }
        union.sort();
        let mut sum = a.direct_sum(&b).unwrap().rational_points().unwrap();
        sum.sort();
        assert_eq!(sum, union);
    }

    #[test]
    fn basis_change_keeps_points() {
        let q = p(3);
        let m = free_over_first(q);
        let s = FpMatrix::from_rows(q, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        assert_eq!(m.change_basis(&s).unwrap().rational_points().unwrap(), m.rational_points().unwrap());
    }

    #[test]
    fn validation() {
        let q = p(3);
        let a = FpMatrix::from_rows(q, &[vec![1, 1], vec![0, 1]]).unwrap();
        let b = FpMatrix::from_rows(q, &[vec![1, 0], vec![1, 1]]).unwrap();
        assert!(ElemAbelianModule::new(q, vec![a.clone(), b]).is_err());
        assert!(ElemAbelianModule::new(q, vec![FpMatrix::identity(q, 2).scale(2)]).is_err());
        assert!(ElemAbelianModule::new(q, vec![a]).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let text = "# regular module of C_3\np 3\ngen\n0 0 1\n1 0 0\n0 1 0\n";
        let m: ElemAbelianModule = text.parse().unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.to_text().parse::<ElemAbelianModule>().unwrap(), m);
        assert!("p 4\ngen\n1\n".parse::<ElemAbelianModule>().is_err());
        assert!("p 3\n1 0\n".parse::<ElemAbelianModule>().is_err());
        assert!("q 3".parse::<ElemAbelianModule>().is_err());
    }
}
