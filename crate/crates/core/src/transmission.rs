//! Transmission through a device `(G, l, r)` in the source-and-sink-potential
//! model, with the four characteristic polynomials
//! `s = φ(G)`, `t = φ(G-l)`, `u = φ(G-r)`, `v = φ(G-l-r)` and
//!
//! ```text
//! T(E) = 4 (ut - sv) β² / ((s - vβ²)² + (t + u)² β²)
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::linalg::{char_poly, IntPolynomial, Rational};

/// Denominators below this are treated as vanishing.
pub const DENOMINATOR_FLOOR: f64 = 1e-300;
/// Slack allowed above `T = 1` before a sample is reported.
pub const UPPER_BOUND_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DevicePolynomials {
    pub s: IntPolynomial,
    pub t: IntPolynomial,
    pub u: IntPolynomial,
    pub v: IntPolynomial,
    /// `u t - s v`, a perfect square.
    pub jsq: IntPolynomial,
}

fn phi_without(g: &Graph, remove: u64) -> IntPolynomial {
    char_poly(&g.delete_vertices(remove).adjacency_matrix())
}

pub fn device_polynomials(g: &Graph, l: usize, r: usize) -> Result<DevicePolynomials> {
    let n = g.order();
    if l >= n || r >= n {
        return Err(Error::Domain(format!("device ({l}, {r}) outside a graph on {n} vertices")));
    }
    if l == r {
        return Err(Error::Domain("transmission needs distinct contacts".into()));
    }
    if !g.is_simple() || !g.is_connected() {
        return Err(Error::Domain("transmission needs a connected simple graph".into()));
    }
    let s = phi_without(g, 0);
    let t = phi_without(g, bit(l));
    let u = phi_without(g, bit(r));
    let v = phi_without(g, bit(l) | bit(r));
    let jsq = &(&u * &t) - &(&s * &v);
    if jsq.sqrt().is_none() {
        return Err(Error::Internal(format!("u t - s v = {jsq} is not a square")));
    }
    Ok(DevicePolynomials { s, t, u, v, jsq })
}

/// One evaluation of `T`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Sample {
    Value(f64),
    /// The denominator vanishes at this energy.
    Excluded,
}

/// Exact value of `T` as `E -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroLimit {
    Value(Rational),
    /// The denominator is the zero polynomial.
    Excluded,
}

impl ZeroLimit {
    pub fn conducts(&self) -> Option<bool> {
        match self {
            ZeroLimit::Value(v) => Some(!v.is_zero()),
            ZeroLimit::Excluded => None,
        }
    }
}

type RatPoly = Vec<Rational>;

fn rat(p: &IntPolynomial) -> RatPoly {
    p.coefficients().iter().map(|c| Rational::from_integer(c.clone())).collect()
}

fn rat_add(a: &RatPoly, b: &RatPoly) -> RatPoly {
    (0..a.len().max(b.len()))
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            x + b.get(i).cloned().unwrap_or_default()
        })
        .collect()
}

fn rat_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn rat_scale(a: &RatPoly, k: &Rational) -> RatPoly {
    a.iter().map(|x| x * k).collect()
}

/// Index and value of the lowest nonzero coefficient.
fn lowest(a: &RatPoly) -> Option<(usize, &Rational)> {
    a.iter().enumerate().find(|(_, c)| !c.is_zero())
}

impl DevicePolynomials {
    /// `T` at energy `e`. At `e = 0` the exact limit is used.
    pub fn evaluate(&self, beta_sq: f64, e: f64) -> Result<Sample> {
        if !(beta_sq > 0.0 && beta_sq.is_finite()) {
            return Err(Error::Domain(format!("beta^2 must be positive, got {beta_sq}")));
        }
        if e == 0.0 {
            return Ok(match self.zero_limit(beta_sq)? {
                ZeroLimit::Value(v) => Sample::Value(v.to_f64().unwrap_or(f64::NAN)),
                ZeroLimit::Excluded => Sample::Excluded,
            });
        }
        let (s, t, u, v) = (
            self.s.eval_f64(e),
            self.t.eval_f64(e),
            self.u.eval_f64(e),
            self.v.eval_f64(e),
        );
        let a = s - v * beta_sq;
        let b = t + u;
        let den = a * a + b * b * beta_sq;
        if den.abs() < DENOMINATOR_FLOOR {
            return Ok(Sample::Excluded);
        }
        let num = 4.0 * self.jsq.eval_f64(e) * beta_sq;
        Ok(Sample::Value(num / den))
    }

    /// Exact `lim_{E->0} T(E)`: common powers of `E` are cancelled before
    /// evaluating, with `β²` taken as the exact rational value of the float.
    pub fn zero_limit(&self, beta_sq: f64) -> Result<ZeroLimit> {
        let b2 = Rational::from_float(beta_sq)
            .filter(|b| b.is_positive())
            .ok_or_else(|| Error::Domain(format!("beta^2 must be positive, got {beta_sq}")))?;
        let a = rat_add(&rat(&self.s), &rat_scale(&rat(&self.v), &-b2.clone()));
        let b = rat_add(&rat(&self.t), &rat(&self.u));
        let den = rat_add(&rat_mul(&a, &a), &rat_scale(&rat_mul(&b, &b), &b2));
        let num = rat_scale(&rat(&self.jsq), &(Rational::from_integer(BigInt::from(4)) * &b2));
        let Some((dk, dc)) = lowest(&den) else {
            return Ok(ZeroLimit::Excluded);
        };
        match lowest(&num) {
            None => Ok(ZeroLimit::Value(Rational::zero())),
            Some((nk, _)) if nk > dk => Ok(ZeroLimit::Value(Rational::zero())),
            Some((nk, nc)) if nk == dk => Ok(ZeroLimit::Value(nc / dc)),
            Some(_) => Err(Error::Internal("transmission diverges as E -> 0".into())),
        }
    }
}

pub fn evaluate_t(dp: &DevicePolynomials, beta_sq: f64, e: f64) -> Result<Sample> {
    dp.evaluate(beta_sq, e)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransmissionCurve {
    pub beta_sq: f64,
    /// `(E, T)` in increasing `E`.
    pub samples: Vec<(f64, f64)>,
    pub excluded: Vec<f64>,
    /// Samples outside `[0, 1]` beyond [`UPPER_BOUND_SLACK`].
    pub warnings: Vec<String>,
}

impl TransmissionCurve {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("E,T\n");
        for (e, t) in &self.samples {
            let _ = writeln!(out, "{e},{t}");
        }
        if !self.excluded.is_empty() {
            let list: Vec<String> = self.excluded.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "# excluded: {}", list.join(","));
        }
        out
    }
}

/// `T` on a uniform grid of `steps` energies from `e_min` to `e_max`.
pub fn sweep(dp: &DevicePolynomials, beta_sq: f64, e_min: f64, e_max: f64, steps: usize) -> Result<TransmissionCurve> {
    if e_min.partial_cmp(&e_max) != Some(std::cmp::Ordering::Less) || steps < 2 {
        return Err(Error::Domain("sweep needs e_min < e_max and at least 2 steps".into()));
    }
    let mut curve = TransmissionCurve { beta_sq, samples: Vec::new(), excluded: Vec::new(), warnings: Vec::new() };
    let h = (e_max - e_min) / (steps - 1) as f64;
    for i in 0..steps {
        let e = if i == steps - 1 { e_max } else { e_min + i as f64 * h };
        match dp.evaluate(beta_sq, e)? {
            Sample::Value(t) => {
                if !(-UPPER_BOUND_SLACK..=1.0 + UPPER_BOUND_SLACK).contains(&t) {
                    curve.warnings.push(format!("T({e}) = {t} outside [0, 1]"));
                }
                curve.samples.push((e, t));
            }
            Sample::Excluded => curve.excluded.push(e),
        }
    }
    Ok(curve)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixture;
    use crate::graph::named::{cycle, path};
    use rand::{Rng, SeedableRng};

    #[test]
    fn k2_polynomials() {
        let dp = device_polynomials(&path(2), 0, 1).unwrap();
        assert_eq!(dp.s, IntPolynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(dp.t, IntPolynomial::from_i64s(&[0, 1]));
        assert_eq!(dp.u, dp.t);
        assert_eq!(dp.v, IntPolynomial::one());
        assert_eq!(dp.jsq, IntPolynomial::one());
        assert_eq!(dp.evaluate(1.0, 0.0).unwrap(), Sample::Value(1.0));
        assert_eq!(dp.zero_limit(1.0).unwrap(), ZeroLimit::Value(Rational::from_integer(1.into())));
    }

    #[test]
    fn p3_end_to_end() {
        // (E^2 - 1)^2 - E (E^3 - 2E) = 1: a decided row, not the equal-nullity test.
        let dp = device_polynomials(&path(3), 0, 2).unwrap();
        assert_eq!(dp.jsq, IntPolynomial::one());
        assert_eq!(dp.zero_limit(1.0).unwrap().conducts(), Some(true));
        let mid = device_polynomials(&path(3), 0, 1).unwrap();
        assert_eq!(mid.zero_limit(1.0).unwrap().conducts(), Some(false));
    }

    #[test]
    fn rejects_bad_devices() {
        assert!(device_polynomials(&path(3), 1, 1).is_err());
        assert!(device_polynomials(&path(3), 0, 5).is_err());
        assert!(device_polynomials(&Graph::new(2), 0, 1).is_err());
        let dp = device_polynomials(&path(2), 0, 1).unwrap();
        assert!(dp.evaluate(0.0, 1.0).is_err());
        assert!(sweep(&dp, 1.0, 1.0, 1.0, 5).is_err());
        assert!(sweep(&dp, 1.0, 0.0, 1.0, 1).is_err());
    }

    #[test]
    fn sweep_grid() {
        let dp = device_polynomials(&path(2), 0, 1).unwrap();
        let c = sweep(&dp, 1.0, -2.0, 2.0, 5).unwrap();
        assert_eq!(c.samples.len(), 5);
        assert_eq!(c.samples[2], (0.0, 1.0));
        assert!(c.warnings.is_empty());
        let ends = sweep(&dp, 1.0, -1.5, 2.5, 2).unwrap();
        let es: Vec<f64> = ends.samples.iter().map(|s| s.0).collect();
        assert_eq!(es, vec![-1.5, 2.5]);
        assert!(c.to_csv().starts_with("E,T\n-2,"));
    }

    #[test]
    fn bipartite_symmetry() {
        let dp = device_polynomials(&path(4), 0, 3).unwrap();
        let c = sweep(&dp, 0.7, -2.5, 2.5, 101).unwrap();
        let n = c.samples.len();
        for i in 0..n {
            let (e1, t1) = c.samples[i];
            let (e2, t2) = c.samples[n - 1 - i];
            assert!((e1 + e2).abs() < 1e-12 && (t1 - t2).abs() < 1e-9);
        }
    }

    #[test]
    fn physical_bounds_on_random_devices() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let pool: Vec<Graph> = ["p4", "c4", "k4", "diamond", "paw", "radialene3", "comb3", "e8"]
            .iter()
            .map(|f| fixture(f).unwrap())
            .chain([cycle(5), cycle(7), path(8)])
            .collect();
        for _ in 0..10_000 {
            let g = &pool[rng.gen_range(0..pool.len())];
            let l = rng.gen_range(0..g.order());
            let r = (l + rng.gen_range(1..g.order())) % g.order();
            let dp = device_polynomials(g, l, r).unwrap();
            let b2 = rng.gen_range(0.1..10.0);
            let e = rng.gen_range(-3.0..3.0);
            if let Sample::Value(t) = dp.evaluate(b2, e).unwrap() {
                assert!((-1e-9..=1.0 + 1e-9).contains(&t), "T = {t}");
            }
        }
    }
}
