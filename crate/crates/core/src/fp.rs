//! Dense matrices over a prime field.

use std::fmt;

use crate::error::{Error, Result};
use crate::prime::Prime;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of integers, reducing each entry mod `p`.
    pub fn from_rows(p: Prime, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("rows of unequal length".into()));
        }
        let q = p.get() as i64;
        let data = rows.iter().flatten().map(|&x| x.rem_euclid(q) as u32).collect();
        Ok(FpMatrix { p, rows: rows.len(), cols, data })
    }

    /// The nilpotent Jordan block of size `n`: ones on the superdiagonal.
    pub fn jordan_block(p: Prime, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 1..n {
            m.set(i - 1, i, 1);
        }
        m
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p.get() as u32;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn q(&self) -> u64 {
        self.p.get() as u64
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let q = self.q();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| ((a as u64 + b as u64) % q) as u32)
            .collect();
        FpMatrix { data, ..*self }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        self.add(&other.scale(self.q() as u32 - 1))
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let q = self.q();
        let c = c as u64 % q;
        let data = self.data.iter().map(|&a| ((a as u64 * c) % q) as u32).collect();
        FpMatrix { data, ..*self }
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let q = self.q();
        let mut out = FpMatrix::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d = ((*d as u64 + a * b as u64) % q) as u32;
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> FpMatrix {
        assert!(self.is_square());
        let mut result = FpMatrix::identity(self.p, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Kronecker product.
    pub fn kron(&self, other: &FpMatrix) -> FpMatrix {
        let q = self.q();
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = FpMatrix::zeros(self.p, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j) as u64;
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = (a * other.get(k, l) as u64) % q;
                        out.data[(i * other.rows + k) * c + j * other.cols + l] = v as u32;
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let q = self.q();
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            for j in 0..cols {
                m.swap(pivot * cols + j, rank * cols + j);
            }
            let inv = inverse(m[rank * cols + col] as u64, q);
            for j in col..cols {
                m[rank * cols + j] = ((m[rank * cols + j] as u64 * inv) % q) as u32;
            }
            for r in 0..rows {
                let f = m[r * cols + col] as u64;
                if r == rank || f == 0 {
                    continue;
                }
                for j in col..cols {
                    let sub = (f * m[rank * cols + j] as u64) % q;
                    m[r * cols + j] = ((m[r * cols + j] as u64 + q - sub) % q) as u32;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<FpMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let q = self.q();
        let mut a = self.clone();
        let mut inv = FpMatrix::identity(self.p, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != 0)?;
            for j in 0..n {
                a.data.swap(pivot * n + j, col * n + j);
                inv.data.swap(pivot * n + j, col * n + j);
            }
            let f = inverse(a.get(col, col) as u64, q);
            for j in 0..n {
                a.data[col * n + j] = ((a.data[col * n + j] as u64 * f) % q) as u32;
                inv.data[col * n + j] = ((inv.data[col * n + j] as u64 * f) % q) as u32;
            }
            for r in 0..n {
                let g = a.get(r, col) as u64;
                if r == col || g == 0 {
                    continue;
                }
                for j in 0..n {
                    let sa = (g * a.data[col * n + j] as u64) % q;
                    a.data[r * n + j] = ((a.data[r * n + j] as u64 + q - sa) % q) as u32;
                    let si = (g * inv.data[col * n + j] as u64) % q;
                    inv.data[r * n + j] = ((inv.data[r * n + j] as u64 + q - si) % q) as u32;
                }
            }
        }
        Some(inv)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &FpMatrix) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &FpMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }
}

fn inverse(a: u64, q: u64) -> u64 {
    // q is prime, so a^(q-2) is the inverse
    let (mut base, mut e, mut acc) = (a % q, q - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    acc
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
