//! Exact linear algebra over the integers and rationals.
//!
//! Nothing that decides conduction goes through floating point. The only
//! floating-point routine is [`float_spectrum`], kept for spectrum-shaped
//! cross-checks.

mod poly;
pub(crate) mod ring;

pub use poly::IntPolynomial;

use std::fmt;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use ring::with_fallback;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Dense row-major matrix of machine integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).map(<[i64]>::to_vec).take(self.rows).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows);
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    out.data[i * o.cols + j] += a * o.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    /// Principal submatrix on the indices whose bit is set in `keep`.
    pub fn principal_submatrix(&self, keep: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(keep.len(), keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    /// Copy with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> IntMatrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != i) {
            for c in (0..self.cols).filter(|&c| c != j) {
                data.push(self.get(r, c));
            }
        }
        IntMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| Rational::from_integer(x.into())).collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    fn from_bigints(rows: usize, cols: usize, data: Vec<BigInt>, denom: &BigInt) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: data.into_iter().map(|x| Rational::new(x, denom.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, o: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, o.rows);
        let mut data = vec![Rational::zero(); self.rows * o.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    data[i * o.cols + j] += a * o.get(k, j);
                }
            }
        }
        RationalMatrix {
            rows: self.rows,
            cols: o.cols,
            data,
        }
    }

    pub fn scale(&self, k: &Rational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Rank by rational Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
            for i in r + 1..rows {
                let f = &a[i * cols + c] / &a[r * cols + c];
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let d = &f * &a[r * cols + j];
                    a[i * cols + j] -= d;
                }
            }
            r += 1;
            if r == rows {
                break;
            }
        }
        r
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Linearly independent rational vectors spanning a kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    pub vectors: Vec<Vec<Rational>>,
}

impl KernelBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

fn require_square(a: &IntMatrix) {
    assert!(a.is_square(), "square matrix required, got {}x{}", a.rows, a.cols);
}

pub fn rank(a: &IntMatrix) -> usize {
    let (r, c) = (a.rows, a.cols);
    with_fallback(
        || ring::rank::<i128>(&a.data, r, c),
        || ring::rank::<BigInt>(&a.data, r, c),
    )
}

/// Multiplicity of the eigenvalue 0, i.e. `n - rank`. The 0x0 matrix has
/// nullity 0.
pub fn nullity(a: &IntMatrix) -> usize {
    require_square(a);
    a.rows - rank(a)
}

pub fn determinant(a: &IntMatrix) -> BigInt {
    require_square(a);
    let n = a.rows;
    with_fallback(
        || ring::determinant::<i128>(&a.data, n),
        || ring::determinant::<BigInt>(&a.data, n),
    )
}

/// Exact kernel basis; one primitive integer vector per free column of the
/// reduced echelon form.
pub fn kernel_basis(a: &IntMatrix) -> KernelBasis {
    require_square(a);
    let (r, c) = (a.rows, a.cols);
    let ints = with_fallback(
        || ring::kernel::<i128>(&a.data, r, c),
        || ring::kernel::<BigInt>(&a.data, r, c),
    );
    KernelBasis {
        vectors: ints
            .into_iter()
            .map(|v| v.into_iter().map(Rational::from_integer).collect())
            .collect(),
    }
}

/// Integer kernel basis (primitive vectors).
pub fn integer_kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    require_square(a);
    let (r, c) = (a.rows, a.cols);
    with_fallback(
        || ring::kernel::<i128>(&a.data, r, c),
        || ring::kernel::<BigInt>(&a.data, r, c),
    )
}

/// `(det A, adj A)` for nonsingular `A`, or `None` when `A` is singular.
pub fn scaled_inverse(a: &IntMatrix) -> Option<(BigInt, Vec<BigInt>)> {
    require_square(a);
    let n = a.rows;
    with_fallback(
        || {
            ring::adjugate_nonsingular::<i128>(&a.data, n).map(|o| {
                o.map(|(d, adj)| (BigInt::from(d), adj.into_iter().map(BigInt::from).collect()))
            })
        },
        || ring::adjugate_nonsingular::<BigInt>(&a.data, n),
    )
}

/// Nonzero pattern of `A^-1` as one bit mask per row, or `None` if `A` is
/// singular. Requires `n <= 64`.
pub fn inverse_support(a: &IntMatrix) -> Option<Vec<u64>> {
    require_square(a);
    let n = a.rows;
    assert!(n <= 64);
    fn masks<R: ring::Ring>(adj: &[R], n: usize) -> Vec<u64> {
        (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| !adj[i * n + j].is_zero())
                    .fold(0u64, |m, j| m | (1u64 << j))
            })
            .collect()
    }
    with_fallback(
        || ring::adjugate_nonsingular::<i128>(&a.data, n).map(|o| o.map(|(_, adj)| masks(&adj, n))),
        || ring::adjugate_nonsingular::<BigInt>(&a.data, n).map(|o| o.map(|(_, adj)| masks(&adj, n))),
    )
}

/// Exact inverse; fails with the nullity when `A` is singular.
pub fn inverse(a: &IntMatrix) -> Result<RationalMatrix> {
    match scaled_inverse(a) {
        Some((det, adj)) => Ok(RationalMatrix::from_bigints(a.rows, a.cols, adj, &det)),
        None => Err(Error::Singular { nullity: nullity(a) }),
    }
}

/// Transpose of the cofactor matrix. Satisfies `A adj(A) = det(A) I`.
pub fn adjugate(a: &IntMatrix) -> RationalMatrix {
    require_square(a);
    let n = a.rows;
    let one = BigInt::one();
    if n == 0 {
        return RationalMatrix::from_bigints(0, 0, Vec::new(), &one);
    }
    if let Some((_, adj)) = scaled_inverse(a) {
        return RationalMatrix::from_bigints(n, n, adj, &one);
    }
    if rank(a) < n - 1 {
        return RationalMatrix::from_bigints(n, n, vec![BigInt::zero(); n * n], &one);
    }
    // Rank n-1: build the cofactors directly.
    let mut data = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let c = determinant(&a.minor(i, j));
            // adj[j][i] = (-1)^(i+j) M_ij
            data[j * n + i] = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    RationalMatrix::from_bigints(n, n, data, &one)
}

/// `det(E I - A)` as an integer polynomial in `E`.
pub fn char_poly(a: &IntMatrix) -> IntPolynomial {
    require_square(a);
    let n = a.rows;
    IntPolynomial::new(with_fallback(
        || ring::char_poly::<i128>(&a.data, n),
        || ring::char_poly::<BigInt>(&a.data, n),
    ))
}

/// Number of zero roots of `p`; an error for the zero polynomial.
pub fn zero_root_multiplicity(p: &IntPolynomial) -> Result<usize> {
    p.zero_root_multiplicity()
}

/// Tolerance used when comparing [`float_spectrum`] output.
pub const SPECTRUM_TOLERANCE: f64 = 1e-9;

/// Eigenvalues of a symmetric matrix in descending order, by a standard
/// symmetric eigensolver.
pub fn float_spectrum(a: &IntMatrix) -> Vec<f64> {
    require_square(a);
    let n = a.rows;
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_fn(n, n, |i, j| a.get(i, j) as f64);
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}
