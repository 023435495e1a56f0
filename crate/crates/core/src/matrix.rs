//! Dense square matrices over the rationals, with companion matrices and
//! polynomial evaluation at a companion matrix.
//!
//! For monic `g` of degree `s`, `R(C_g)` for `deg R < s` has columns
//! `[R], C_g[R], ..., C_g^(s-1)[R]`. Everything here is built from repeated
//! matrix-vector products; powers of a matrix are never materialized.

use std::fmt;

use crate::error::{Error, Result};
use crate::number::Rational;
use crate::polynomial::{CoordinateVector, Polynomial};

/// An `s x s` matrix, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        RationalMatrix {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix { dim, entries })
    }

    /// Square matrix from `s` columns of length `s`.
    pub fn from_columns(columns: &[CoordinateVector]) -> Result<Self> {
        let dim = columns.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut m = Self::zeros(dim);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: col.len(),
                });
            }
            for (i, x) in col.entries().iter().enumerate() {
                m.entries[i * dim + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn column(&self, j: usize) -> CoordinateVector {
        CoordinateVector::new((0..self.dim).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn mul_vec(&self, v: &CoordinateVector) -> Result<CoordinateVector> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let out = (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.entries())
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + &(a * b))
            })
            .collect();
        Ok(CoordinateVector::new(out))
    }

    pub fn mul_mat(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn add_scalar_identity(&mut self, c: &Rational) {
        for i in 0..self.dim {
            self.entries[i * self.dim + i] += c;
        }
    }
}

impl fmt::Display for RationalMatrix {
    /// One row per line, entries separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(Rational::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn degree_at_least_one_monic(g: &Polynomial) -> Result<usize> {
    match g.degree() {
        None | Some(0) => Err(Error::ConstantPolynomial(g.to_string())),
        Some(_) if !g.is_monic() => Err(Error::NotMonic(g.to_string())),
        Some(s) => Ok(s),
    }
}

/// Companion matrix: ones on the subdiagonal, last column `-g_0, ..., -g_(s-1)`.
pub fn companion(g: &Polynomial) -> Result<RationalMatrix> {
    let s = degree_at_least_one_monic(g)?;
    let mut m = RationalMatrix::zeros(s);
    for i in 1..s {
        m.entries[i * s + (i - 1)] = Rational::one();
    }
    for i in 0..s {
        m.entries[i * s + (s - 1)] = -g.coeff(i);
    }
    Ok(m)
}

pub fn mat_vec(a: &RationalMatrix, v: &CoordinateVector) -> Result<CoordinateVector> {
    a.mul_vec(v)
}

/// `R(C_g)` for `deg R < deg g`, built column by column as `C_g^i [R]`.
pub fn eval_at_companion(r: &Polynomial, g: &Polynomial) -> Result<RationalMatrix> {
    let s = degree_at_least_one_monic(g)?;
    let c = companion(g)?;
    let mut columns = Vec::with_capacity(s);
    columns.push(r.coords(s)?);
    for i in 1..s {
        let next = c.mul_vec(&columns[i - 1])?;
        columns.push(next);
    }
    RationalMatrix::from_columns(&columns)
}

/// `P(C_g) v` by Horner's rule on the vector, without forming `P(C_g)`.
///
/// `p` is not reduced modulo `g` first, so `apply_to_vector(g, g, v)` exercises
/// the identity `g(C_g) = 0` rather than short-circuiting it.
pub fn apply_to_vector(p: &Polynomial, g: &Polynomial, v: &CoordinateVector) -> Result<CoordinateVector> {
    let s = degree_at_least_one_monic(g)?;
    if v.len() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            found: v.len(),
        });
    }
    let c = companion(g)?;
    let mut acc = CoordinateVector::zeros(s);
    for coeff in p.coeffs().iter().rev() {
        let shifted = c.mul_vec(&acc)?;
        acc = CoordinateVector::new(
            shifted
                .into_entries()
                .into_iter()
                .zip(v.entries())
                .map(|(x, vi)| if coeff.is_zero() { x } else { x + &(coeff * vi) })
                .collect(),
        );
    }
    Ok(acc)
}

/// Monic characteristic polynomial `det(X I - A)` by the Faddeev-LeVerrier recurrence:
/// `M_1 = I`, `c_(n-k) = -tr(A M_k) / k`, `M_(k+1) = A M_k + c_(n-k) I`.
pub fn char_poly(a: &RationalMatrix) -> Polynomial {
    let n = a.dim;
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = RationalMatrix::identity(n);
    for k in 1..=n {
        let am = a.mul_mat(&m).expect("same dimension");
        let c = -(am.trace() * &Rational::frac(1, k as i64));
        coeffs[n - k] = c.clone();
        m = am;
        m.add_scalar_identity(&c);
    }
    Polynomial::from_coeffs(coeffs)
}
