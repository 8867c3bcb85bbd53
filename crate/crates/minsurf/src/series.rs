//! Truncated complex power series (polynomials in `z`) with exact
//! coefficient arithmetic. All holomorphic data in the crate lives here:
//! `p`, `q`, `h'`, `g'`, the `phi_k` and their antiderivatives.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial `sum_k c_k z^k`, coefficient index = power of `z`.
///
/// The coefficient vector is never empty; the zero series is `[0]`.
/// Trailing zeros are not normalized away; equality checks tolerate them.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Wraps a coefficient vector. An empty vector becomes the zero series.
    ///
    /// Panics on non-finite coefficients; NaN/Inf never enter the arithmetic.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite()),
            "power series coefficients must be finite"
        );
        if coeffs.is_empty() {
            Self::zero()
        } else {
            Self { coeffs }
        }
    }

    pub fn zero() -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0)],
        }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation of `sum c_k z^k`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Termwise derivative; the derivative of a constant is the zero series.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Self { coeffs }
    }

    /// Termwise primitive with value 0 at the origin.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / (k + 1) as f64);
        }
        Self { coeffs }
    }

    /// Full Cauchy product; degree `deg(self) + deg(other)`, no truncation.
    ///
    /// Each output coefficient accumulates the diagonal `a_i b_{k-i}` from
    /// both ends inward, pairing `i` with its mirror index. The pairing makes
    /// the product bit-for-bit commutative.
    pub fn multiply(&self, other: &Self) -> Self {
        let a = &self.coeffs;
        let b = &other.coeffs;
        let n = a.len() + b.len() - 1;
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let lo = k.saturating_sub(b.len() - 1);
            let hi = k.min(a.len() - 1);
            let mut i = lo;
            let mut j = hi;
            let mut acc = Complex64::new(0.0, 0.0);
            while i < j {
                acc += a[i] * b[k - i] + a[j] * b[k - j];
                i += 1;
                j -= 1;
            }
            if i == j {
                acc += a[i] * b[k - i];
            }
            out.push(acc);
        }
        Self { coeffs: out }
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k) + other.coeff(k))
            .collect();
        Self { coeffs }
    }

    /// Coefficient-wise difference.
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k) - other.coeff(k))
            .collect();
        Self { coeffs }
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Coefficient of `z^k`, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs
            .get(k)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Largest coefficient magnitude at indices `>= start`.
    pub fn max_coeff_from(&self, start: usize) -> f64 {
        self.coeffs
            .iter()
            .skip(start)
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// True when every coefficient magnitude is at most `tol`.
    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_coeff_from(0) <= tol
    }

    /// Coefficient-wise comparison up to trailing zeros.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| (self.coeff(k) - other.coeff(k)).norm() <= tol)
    }
}

// JSON form: array of [re, im] pairs, index = power of z.
impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.coeffs.iter().map(|c| [c.re, c.im]).collect();
        pairs.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(de)?;
        if pairs.iter().any(|[re, im]| !re.is_finite() || !im.is_finite()) {
            return Err(D::Error::custom("non-finite power series coefficient"));
        }
        Ok(Self::new(
            pairs
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect(),
        ))
    }
}
