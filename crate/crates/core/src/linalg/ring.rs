//! Fraction-free elimination over exact integer rings.
//!
//! Every routine runs first over checked `i128` and is re-run over `BigInt`
//! if any intermediate overflows. Bareiss' update keeps every intermediate
//! entry equal to a minor of the input, so the `i128` pass almost always
//! succeeds for adjacency matrices.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub(crate) trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Exact quotient. Panics if `o` does not divide `self`.
    fn div_exact(&self, o: &Self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;

    /// `(a*b - c*d) / p`, exact.
    #[inline]
    fn mul_sub_div(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self> {
        a.mul(b)?.sub(&c.mul(d)?)?.div_exact(p)
    }
}

impl Ring for i128 {
    #[inline]
    fn zero() -> Self {
        0
    }
    #[inline]
    fn one() -> Self {
        1
    }
    #[inline]
    fn from_i64(x: i64) -> Self {
        x as i128
    }
    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    #[inline]
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    #[inline]
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    #[inline]
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    #[inline]
    fn div_exact(&self, o: &Self) -> Option<Self> {
        assert!(self % o == 0, "inexact division {self} / {o}");
        self.checked_div(*o)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        let (q, r) = num_integer::Integer::div_rem(self, o);
        assert!(Zero::is_zero(&r), "inexact division {self} / {o}");
        Some(q)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Run `f` over `i128`, falling back to `BigInt` on overflow.
pub(crate) fn with_fallback<T>(
    small: impl FnOnce() -> Option<T>,
    big: impl FnOnce() -> Option<T>,
) -> T {
    small()
        .or_else(big)
        .expect("BigInt arithmetic cannot overflow")
}

/// Result of fraction-free elimination on a row-major matrix.
#[derive(Debug, Clone)]
pub(crate) struct Echelon<R> {
    pub data: Vec<R>,
    pub cols: usize,
    /// Pivot column of row `k`, for `k < rank`.
    pub pivot_cols: Vec<usize>,
    /// Parity of the row swaps performed.
    pub odd_swaps: bool,
}

impl<R: Ring> Echelon<R> {
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    /// The last pivot. After a full elimination of a nonsingular square
    /// matrix this is `det` up to the sign given by `odd_swaps`.
    pub fn last_pivot(&self) -> R {
        match self.pivot_cols.last() {
            Some(&c) => self.at(self.rank() - 1, c).clone(),
            None => R::one(),
        }
    }
}

/// Bareiss elimination, pivoting on the first `pivot_limit` columns.
///
/// With `jordan` set, rows above each pivot are cleared too, and on return
/// every pivot entry equals the last pivot.
pub(crate) fn eliminate<R: Ring>(
    mut a: Vec<R>,
    rows: usize,
    cols: usize,
    pivot_limit: usize,
    jordan: bool,
) -> Option<Echelon<R>> {
    debug_assert_eq!(a.len(), rows * cols);
    let mut prev = R::one();
    let mut r = 0usize;
    let mut pivot_cols = Vec::new();
    let mut odd_swaps = false;
    for c in 0..pivot_limit.min(cols) {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
            odd_swaps = !odd_swaps;
        }
        let piv = a[r * cols + c].clone();
        let first_row = if jordan { 0 } else { r + 1 };
        for i in first_row..rows {
            if i == r {
                continue;
            }
            let factor = a[i * cols + c].clone();
            let (lo, hi) = if jordan { (0, cols) } else { (c + 1, cols) };
            for j in lo..hi {
                if j == c {
                    continue;
                }
                let v = R::mul_sub_div(&piv, &a[i * cols + j], &factor, &a[r * cols + j], &prev)?;
                a[i * cols + j] = v;
            }
            a[i * cols + c] = R::zero();
        }
        pivot_cols.push(c);
        prev = piv;
        r += 1;
    }
    Some(Echelon {
        data: a,
        cols,
        pivot_cols,
        odd_swaps,
    })
}

pub(crate) fn convert<R: Ring>(entries: &[i64]) -> Vec<R> {
    entries.iter().map(|&x| R::from_i64(x)).collect()
}

/// Determinant of a square matrix.
pub(crate) fn determinant<R: Ring>(entries: &[i64], n: usize) -> Option<BigInt> {
    if n == 0 {
        return Some(<BigInt as One>::one());
    }
    let e = eliminate(convert::<R>(entries), n, n, n, false)?;
    if e.rank() < n {
        return Some(<BigInt as Zero>::zero());
    }
    let d = e.last_pivot().to_bigint();
    Some(if e.odd_swaps { -d } else { d })
}

pub(crate) fn rank<R: Ring>(entries: &[i64], rows: usize, cols: usize) -> Option<usize> {
    Some(eliminate(convert::<R>(entries), rows, cols, cols, false)?.rank())
}

/// For nonsingular `A`, returns `(det A, adj A)` with `adj A = det A * A^-1`.
/// Returns `Some(None)` when `A` is singular.
pub(crate) fn adjugate_nonsingular<R: Ring>(
    entries: &[i64],
    n: usize,
) -> Option<Option<(R, Vec<R>)>> {
    let w = 2 * n;
    let mut aug = Vec::with_capacity(n * w);
    for i in 0..n {
        aug.extend(entries[i * n..(i + 1) * n].iter().map(|&x| R::from_i64(x)));
        aug.extend((0..n).map(|j| if i == j { R::one() } else { R::zero() }));
    }
    let e = eliminate(aug, n, w, n, true)?;
    if e.rank() < n {
        return Some(None);
    }
    let d = e.last_pivot();
    let (det, flip) = if e.odd_swaps { (d.neg()?, true) } else { (d, false) };
    let mut adj = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let x = e.at(i, n + j);
            adj.push(if flip { x.neg()? } else { x.clone() });
        }
    }
    Some(Some((det, adj)))
}

/// Integer basis of the right kernel, one primitive vector per free column.
pub(crate) fn kernel<R: Ring>(entries: &[i64], rows: usize, cols: usize) -> Option<Vec<Vec<BigInt>>> {
    let e = eliminate(convert::<R>(entries), rows, cols, cols, true)?;
    let d = e.last_pivot().to_bigint();
    let mut is_pivot = vec![false; cols];
    for &c in &e.pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![<BigInt as Zero>::zero(); cols];
        x[f] = d.clone();
        for (k, &c) in e.pivot_cols.iter().enumerate() {
            x[c] = -e.at(k, f).to_bigint();
        }
        basis.push(primitive(x));
    }
    Some(basis)
}

/// Divide out the content and make the first nonzero entry positive.
fn primitive(mut x: Vec<BigInt>) -> Vec<BigInt> {
    let g = x
        .iter()
        .fold(<BigInt as Zero>::zero(), |g, v| num_integer::Integer::gcd(&g, v));
    if !Zero::is_zero(&g) {
        for v in &mut x {
            *v = &*v / &g;
        }
    }
    if let Some(first) = x.iter().find(|v| !Zero::is_zero(*v)) {
        if first.is_negative() {
            for v in &mut x {
                *v = -&*v;
            }
        }
    }
    x
}

/// Coefficients of `det(xI - A)`, ascending, by Faddeev-LeVerrier.
pub(crate) fn char_poly<R: Ring>(entries: &[i64], n: usize) -> Option<Vec<BigInt>> {
    let a = convert::<R>(entries);
    let mut coeffs = vec![R::zero(); n + 1];
    coeffs[n] = R::one();
    // m holds M_k; start from M_0 = 0.
    let mut m = vec![R::zero(); n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(&a, &m, n)?;
        for i in 0..n {
            next[i * n + i] = next[i * n + i].add(&coeffs[n - k + 1])?;
        }
        // c_{n-k} = -tr(A M_k) / k
        let mut tr = R::zero();
        for i in 0..n {
            for j in 0..n {
                tr = tr.add(&a[i * n + j].mul(&next[j * n + i])?)?;
            }
        }
        coeffs[n - k] = tr.neg()?.div_exact(&R::from_i64(k as i64))?;
        m = next;
    }
    Some(coeffs.iter().map(Ring::to_bigint).collect())
}

fn matmul<R: Ring>(a: &[R], b: &[R], n: usize) -> Option<Vec<R>> {
    let mut out = vec![R::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[k * n + j];
                if y.is_zero() {
                    continue;
                }
                out[i * n + j] = out[i * n + j].add(&x.mul(y)?)?;
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i128_overflow_is_detected() {
        let big = i128::MAX / 2;
        assert_eq!(Ring::mul(&big, &4), None);
        assert_eq!(i128::mul_sub_div(&3, &4, &2, &3, &2), Some(3));
    }

    #[test]
    fn bigint_and_i128_agree_on_rank() {
        let m = [1, 2, 3, 2, 4, 6, 1, 0, 1];
        assert_eq!(rank::<i128>(&m, 3, 3), Some(2));
        assert_eq!(rank::<BigInt>(&m, 3, 3), Some(2));
    }

    #[test]
    fn large_entries_fall_back() {
        // Entries near 2^62 make i128 products overflow during elimination.
        let x = 1i64 << 62;
        let m = [x, 1, 1, 1, x, 1, 1, 1, x];
        assert!(determinant::<i128>(&m, 3).is_none());
        let d = with_fallback(|| determinant::<i128>(&m, 3), || determinant::<BigInt>(&m, 3));
        let xb = BigInt::from(x);
        let expected = &xb * &xb * &xb - BigInt::from(3) * &xb + BigInt::from(2);
        assert_eq!(d, expected);
    }
}
