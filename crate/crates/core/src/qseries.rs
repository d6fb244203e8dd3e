//! Exact Laurent polynomials and truncated Laurent series in `q`, plus a thin
//! bivariate layer (polynomials in `x` with q-series coefficients).
//!
//! A [`LaurentPoly`] carries its own precision: `precision = Some(N)` means
//! the value is only known modulo `O(q^N)`, while `None` marks an exact
//! polynomial. Arithmetic propagates precision so that no unknown
//! coefficient is ever reported as known.

use std::cmp::{max, min};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "LaurentPolyRepr", try_from = "LaurentPolyRepr")]
pub struct LaurentPoly {
    /// Exponent of `coeffs[0]`. Zero whenever `coeffs` is empty.
    offset: i64,
    /// Trimmed: neither the first nor the last entry is zero.
    coeffs: Vec<BigInt>,
    /// First unknown exponent, or `None` for an exact polynomial.
    precision: Option<i64>,
}

/// `min` over precisions where `None` is +infinity.
fn min_precision(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(min(x, y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

fn add_precision(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            offset: 0,
            coeffs: Vec::new(),
            precision: None,
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `O(q^precision)`: the zero series known only below `precision`.
    pub fn zero_to(precision: i64) -> Self {
        LaurentPoly {
            offset: 0,
            coeffs: Vec::new(),
            precision: Some(precision),
        }
    }

    pub fn monomial(c: impl Into<BigInt>, exponent: i64) -> Self {
        Self::new(exponent, vec![c.into()], None)
    }

    /// Builds and normalizes a value. Coefficients at exponents
    /// `>= precision` are discarded.
    pub fn new(offset: i64, coeffs: Vec<BigInt>, precision: Option<i64>) -> Self {
        let mut p = LaurentPoly {
            offset,
            coeffs,
            precision,
        };
        p.normalize();
        p
    }

    /// Exact polynomial from small integer coefficients starting at `offset`.
    pub fn from_i64s(offset: i64, coeffs: &[i64]) -> Self {
        Self::new(
            offset,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            None,
        )
    }

    /// Series `sum counts[k] q^k` known through `q^(counts.len()-1)`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(
            0,
            counts.iter().map(|&c| BigInt::from(c)).collect(),
            Some(counts.len() as i64),
        )
    }

    fn normalize(&mut self) {
        if let Some(prec) = self.precision {
            let keep = (prec - self.offset).clamp(0, self.coeffs.len() as i64) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// First unknown exponent; `None` when exact.
    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    /// True when every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.offset)
    }

    /// One past the highest stored exponent.
    pub fn end(&self) -> i64 {
        self.offset + self.coeffs.len() as i64
    }

    /// Lowest exponent whose coefficient is not known to vanish: the
    /// valuation, or the precision for a truncated zero.
    fn lower_bound(&self) -> Option<i64> {
        self.valuation().or(self.precision)
    }

    /// Coefficient of `q^k`.
    pub fn coeff(&self, k: i64) -> Result<BigInt> {
        if let Some(prec) = self.precision {
            if k >= prec {
                return Err(Error::Truncated {
                    exponent: k,
                    order: prec,
                });
            }
        }
        Ok(self.coeff_unchecked(k))
    }

    fn coeff_unchecked(&self, k: i64) -> BigInt {
        let i = k - self.offset;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Forgets everything at exponents `>= precision` (never raises the
    /// existing precision).
    pub fn truncate(&self, precision: i64) -> Self {
        Self::new(
            self.offset,
            self.coeffs.clone(),
            min_precision(self.precision, Some(precision)),
        )
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            offset: if self.coeffs.is_empty() {
                0
            } else {
                self.offset + k
            },
            coeffs: self.coeffs.clone(),
            precision: self.precision.map(|p| p + k),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(
            self.offset,
            self.coeffs.iter().map(|x| x * c).collect(),
            self.precision,
        )
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let precision = min_precision(self.precision, other.precision);
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return LaurentPoly {
                offset: 0,
                coeffs: Vec::new(),
                precision,
            };
        }
        let lo = match (self.valuation(), other.valuation()) {
            (Some(a), Some(b)) => min(a, b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!(),
        };
        let hi = max(self.end(), other.end());
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.offset - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.offset - lo) as usize + i];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::new(lo, coeffs, precision)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        // A coefficient of the product is known only if every contributing
        // pair of factors is known.
        let precision = min_precision(
            add_precision(self.precision, other.lower_bound()),
            add_precision(other.precision, self.lower_bound()),
        );
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return LaurentPoly {
                offset: 0,
                coeffs: Vec::new(),
                precision,
            };
        }
        let offset = self.offset + other.offset;
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(prec) = precision {
            len = min(len as i64, max(prec - offset, 0)) as usize;
        }
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(offset, coeffs, precision)
    }

    /// Iterates `(exponent, coefficient)` over stored nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_impl(rhs, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_impl(&rhs, false)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_impl(rhs, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_impl(&rhs, true)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_impl(rhs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.mul_impl(&rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            precision: self.precision,
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        match self.precision {
            Some(p) if first => write!(f, "O(q^{p})"),
            Some(p) => write!(f, " + O(q^{p})"),
            None if first => f.write_str("0"),
            None => Ok(()),
        }
    }
}

/// JSON wire form: coefficients as decimal strings, `order` is the
/// precision (`null` for exact).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LaurentPolyRepr {
    offset: i64,
    coeffs: Vec<String>,
    order: Option<i64>,
}

impl From<LaurentPoly> for LaurentPolyRepr {
    fn from(p: LaurentPoly) -> Self {
        LaurentPolyRepr {
            offset: p.offset,
            coeffs: p.coeffs.iter().map(BigInt::to_string).collect(),
            order: p.precision,
        }
    }
}

impl TryFrom<LaurentPolyRepr> for LaurentPoly {
    type Error = Error;
    fn try_from(r: LaurentPolyRepr) -> Result<Self> {
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| Error::InvalidArgument(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(order) = r.order {
            if !coeffs.is_empty() && r.offset + coeffs.len() as i64 > order {
                return Err(Error::InvalidArgument(format!(
                    "coefficients extend past order {order}"
                )));
            }
        }
        Ok(LaurentPoly::new(r.offset, coeffs, r.order))
    }
}

/// `1 + q^a + q^(2a) + ...` known through `q^max_exp`.
pub fn geom_expand(a: u64, max_exp: i64) -> Result<LaurentPoly> {
    if a == 0 {
        return Err(Error::InvalidArgument(
            "1/(1 - q^0) has no power series expansion".into(),
        ));
    }
    if max_exp < 0 {
        return Err(Error::InvalidArgument(format!("negative order {max_exp}")));
    }
    let len = max_exp as usize + 1;
    let mut coeffs = vec![BigInt::zero(); len];
    for slot in coeffs.iter_mut().step_by(a as usize) {
        *slot = BigInt::one();
    }
    Ok(LaurentPoly::new(0, coeffs, Some(max_exp + 1)))
}

/// True iff the coefficients of `p` are constant on `[from, precision)`,
/// i.e. `(1 - q) p` is a polynomial as far as `p` is known.
///
/// For an exact polynomial the tail is infinite, so the constant must be 0.
pub fn stabilization_check(p: &LaurentPoly, from: i64) -> Result<bool> {
    match p.precision() {
        Some(prec) => {
            if from >= prec {
                return Err(Error::Truncated {
                    exponent: from,
                    order: prec,
                });
            }
            let head = p.coeff_unchecked(from);
            Ok((from + 1..prec).all(|k| p.coeff_unchecked(k) == head))
        }
        None => Ok((from..max(from + 1, p.end())).all(|k| p.coeff_unchecked(k).is_zero())),
    }
}

/// Polynomial in `x` whose coefficients are q-series sharing one precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly {
    x_coeffs: Vec<LaurentPoly>,
    precision: Option<i64>,
}

impl BivariatePoly {
    /// Rejects coefficients with negative q-powers. Entries are truncated to
    /// the smallest precision among them.
    pub fn new(x_coeffs: Vec<LaurentPoly>) -> Result<Self> {
        let precision = x_coeffs
            .iter()
            .fold(None, |acc, c| min_precision(acc, c.precision()));
        Self::with_precision(x_coeffs, precision)
    }

    pub fn with_precision(x_coeffs: Vec<LaurentPoly>, precision: Option<i64>) -> Result<Self> {
        if let Some(bad) = x_coeffs.iter().find(|c| c.offset() < 0) {
            return Err(Error::InvalidArgument(format!(
                "negative q-power in bivariate coefficient {bad}"
            )));
        }
        let mut x_coeffs: Vec<LaurentPoly> = x_coeffs
            .into_iter()
            .map(|c| match precision {
                Some(p) => c.truncate(p),
                None => c,
            })
            .collect();
        while x_coeffs.last().is_some_and(LaurentPoly::is_zero) {
            x_coeffs.pop();
        }
        let x_coeffs = x_coeffs
            .into_iter()
            .map(|c| LaurentPoly { precision, ..c })
            .collect();
        Ok(BivariatePoly {
            x_coeffs,
            precision,
        })
    }

    pub fn one(precision: Option<i64>) -> Self {
        Self::with_precision(vec![LaurentPoly::one()], precision).expect("1 has no negative powers")
    }

    pub fn zero(precision: Option<i64>) -> Self {
        BivariatePoly {
            x_coeffs: Vec::new(),
            precision,
        }
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    /// Degree in `x`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.x_coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`.
    pub fn x_coeff(&self, k: usize) -> LaurentPoly {
        self.x_coeffs.get(k).cloned().unwrap_or(LaurentPoly {
            offset: 0,
            coeffs: Vec::new(),
            precision: self.precision,
        })
    }

    pub fn x_coeffs(&self) -> &[LaurentPoly] {
        &self.x_coeffs
    }

    /// Sum of all known coefficients (value at `q = x = 1` when the
    /// truncation is inert).
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.x_coeffs.iter().flat_map(|c| c.coeffs().iter()).sum()
    }
}

impl Mul<&BivariatePoly> for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let precision = min_precision(self.precision, rhs.precision);
        if self.x_coeffs.is_empty() || rhs.x_coeffs.is_empty() {
            return BivariatePoly::zero(precision);
        }
        let mut out = vec![LaurentPoly::zero(); self.x_coeffs.len() + rhs.x_coeffs.len() - 1];
        for (i, a) in self.x_coeffs.iter().enumerate() {
            for (j, b) in rhs.x_coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BivariatePoly::with_precision(out, precision)
            .expect("products of nonnegative series stay nonnegative")
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.x_coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "x({c})")?,
                _ => write!(f, "x^{k}({c})")?,
            }
        }
        if first {
            match self.precision {
                Some(p) => write!(f, "O(q^{p})")?,
                None => f.write_str("0")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(offset: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(offset, c)
    }

    #[test]
    fn add_cancels_and_trims() {
        let sum = &exact(0, &[1, 1]) + &exact(0, &[-1, 1]);
        assert_eq!(sum, exact(1, &[2]));
        assert_eq!(sum.offset(), 1);
    }

    #[test]
    fn add_identity_and_disjoint_supports() {
        let p = exact(-3, &[2, 0, 5]);
        assert_eq!(&LaurentPoly::zero() + &p, p);
        let s = &exact(-2, &[1]) + &exact(2, &[1]);
        assert_eq!(s.offset(), -2);
        assert_eq!(s, exact(-2, &[1, 0, 0, 0, 1]));
        assert!(s.is_exact());
    }

    #[test]
    fn add_takes_min_precision() {
        let a = exact(0, &[1, 2, 3]).truncate(2);
        let b = exact(0, &[1]).truncate(5);
        let s = &a + &b;
        assert_eq!(s.precision(), Some(2));
        assert_eq!(s.coeffs(), &[BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            &exact(0, &[1, 1]) * &exact(0, &[1, -1]),
            exact(0, &[1, 0, -1])
        );
        assert_eq!(&exact(-1, &[1]) * &exact(1, &[1]), LaurentPoly::one());
        let geo = LaurentPoly::new(0, vec![BigInt::one(); 5], Some(5));
        let prod = &geo * &exact(0, &[1, -1]);
        assert_eq!(prod, LaurentPoly::one().truncate(5));
        assert_eq!(prod.precision(), Some(5));
    }

    #[test]
    fn mul_precision_uses_valuation() {
        // (q^2 + O(q^4)) * (q^3 + O(q^6)) = q^5 + O(q^7)
        let a = exact(2, &[1]).truncate(4);
        let b = exact(3, &[1]).truncate(6);
        assert_eq!((&a * &b).precision(), Some(7));
        // an exact zero annihilates truncation
        assert!((&LaurentPoly::zero() * &a).is_exact());
        // O(q^3) * (1 + q) = O(q^3)
        let z = LaurentPoly::zero_to(3);
        let prod = &z * &exact(0, &[1, 1]);
        assert_eq!(prod, LaurentPoly::zero_to(3));
    }

    #[test]
    fn geom_expand_examples() {
        assert_eq!(
            geom_expand(1, 3).unwrap(),
            exact(0, &[1, 1, 1, 1]).truncate(4)
        );
        assert_eq!(
            geom_expand(4, 9).unwrap(),
            exact(0, &[1, 0, 0, 0, 1, 0, 0, 0, 1]).truncate(10)
        );
        assert_eq!(geom_expand(2, 0).unwrap(), LaurentPoly::one().truncate(1));
        assert!(matches!(geom_expand(0, 5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(exact(0, &[1, 0, 3]).coeff(2).unwrap(), BigInt::from(3));
        assert_eq!(exact(-2, &[1]).coeff(0).unwrap(), BigInt::zero());
        let s = exact(0, &[1, 1]).truncate(5);
        assert_eq!(
            s.coeff(7),
            Err(Error::Truncated {
                exponent: 7,
                order: 5
            })
        );
        assert_eq!(s.coeff(4).unwrap(), BigInt::zero());
    }

    #[test]
    fn stabilization_examples() {
        let stable = exact(0, &[1, 1, 2, 2, 2]).truncate(5);
        assert!(stabilization_check(&stable, 2).unwrap());
        let growing = exact(0, &[1, 1, 2, 3]).truncate(4);
        assert!(!stabilization_check(&growing, 2).unwrap());
        assert!(stabilization_check(&geom_expand(1, 6).unwrap(), 0).unwrap());
        assert!(stabilization_check(&stable, 5).is_err());
        assert!(stabilization_check(&exact(0, &[1, 1]), 2).unwrap());
        assert!(!stabilization_check(&exact(0, &[1, 1]), 1).unwrap());
    }

    #[test]
    fn bivariate_examples() {
        let q = |e| exact(e, &[1]);
        let a = BivariatePoly::new(vec![LaurentPoly::one(), q(1)]).unwrap();
        let b = BivariatePoly::new(vec![LaurentPoly::one(), q(2)]).unwrap();
        let prod = &a * &b;
        assert_eq!(prod.x_coeff(0), LaurentPoly::one());
        assert_eq!(prod.x_coeff(1), exact(1, &[1, 1]));
        assert_eq!(prod.x_coeff(2), q(3));
        assert_eq!(prod.degree(), Some(2));
        assert_eq!(&a * &BivariatePoly::one(None), a);
        assert_eq!((&a * &BivariatePoly::zero(None)).degree(), None);
        assert!(BivariatePoly::new(vec![q(-1)]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(exact(0, &[1, 1, 3]).to_string(), "1 + q + 3q^2");
        assert_eq!(
            exact(-2, &[-1, 0, 2]).truncate(3).to_string(),
            "-q^-2 + 2 + O(q^3)"
        );
        assert_eq!(LaurentPoly::zero_to(4).to_string(), "O(q^4)");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let p = exact(-1, &[3, 0, -2]).truncate(4);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"offset": -1, "coeffs": ["3", "0", "-2"], "order": 4})
        );
        let back: LaurentPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
        let exact_json = serde_json::to_string(&exact(0, &[1])).unwrap();
        assert_eq!(exact_json, r#"{"offset":0,"coeffs":["1"],"order":null}"#);
        let bad = serde_json::json!({"offset": 0, "coeffs": ["1", "2"], "order": 1});
        assert!(serde_json::from_value::<LaurentPoly>(bad).is_err());
    }

    #[test]
    fn big_coefficients_do_not_wrap() {
        let big = LaurentPoly::monomial(BigInt::from(u64::MAX), 0);
        let sq = &big * &big;
        assert_eq!(
            sq.coeff(0).unwrap(),
            BigInt::from(u64::MAX) * BigInt::from(u64::MAX)
        );
    }
}
