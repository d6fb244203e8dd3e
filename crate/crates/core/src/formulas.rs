//! Closed-form generating functions.
//!
//! * `Z_{t,m}(q,x) = prod_{i=1..t} (1 + x q^i + ... + (x q^i)^m)`, the
//!   length/size generating function of `P(t,m)`;
//! * `Z_{r,s,n}(q) = 1/(1-q^s) * sum_{m=0}^{n-1} sum_{k=s-n}^{s-m-1}
//!   q^{m r} Z^{(k)}_{r-1,n}(q)`, split into its `m = 0` slice
//!   ([`z_le_part`]) and its `m >= 1` slices ([`z_r_part`]);
//! * the Hilbert series of the space curve `xv = w^n, x^{r-t} = v^t`,
//!   `q^{-n t (t-1)/2} Z_{r,tn,n}(q)`.
//!
//! All series are truncated: an `order` argument means "known through
//! `q^order`".

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::RsnParams;
use crate::qseries::{geom_expand, BivariatePoly, LaurentPoly};

/// `(r, t, n)` for the space curve `C_{r,t,n}: xv = w^n, x^{r-t} = v^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LciParams {
    pub r: u32,
    pub t: u32,
    pub n: u32,
}

impl LciParams {
    /// Requires `r > t >= 2` and `n >= 2`; without `r > t` the curve has no
    /// monomial parametrization. Coprimality is only flagged.
    pub fn new(r: u32, t: u32, n: u32) -> Result<Self> {
        if t < 2 || n < 2 || r <= t {
            return Err(Error::InvalidArgument(format!(
                "(r,t,n) = ({r},{t},{n}) needs r > t >= 2 and n >= 2"
            )));
        }
        Ok(LciParams { r, t, n })
    }

    pub fn satisfies_hypotheses(&self) -> bool {
        self.hypothesis_violation().is_none()
    }

    pub fn hypothesis_violation(&self) -> Option<String> {
        let LciParams { r, t, n } = *self;
        if !(r > t && t >= 2 && n >= 2) {
            return Some(format!(
                "(r,t,n) = ({r},{t},{n}) needs r > t >= 2 and n >= 2"
            ));
        }
        let g = r.gcd(&(n * t));
        (g != 1).then(|| format!("gcd(r, n t) = gcd({r}, {}) = {g} != 1", n * t))
    }

    /// The plane-curve triple `(r, t n, n)` on the other side of the flop.
    pub fn plane_params(&self) -> RsnParams {
        RsnParams {
            r: self.r,
            s: self.t * self.n,
            n: self.n,
        }
    }

    /// Exponent shift `n t (t-1) / 2` between the two sides.
    pub fn offset_shift(&self) -> u32 {
        self.n * self.t * (self.t - 1) / 2
    }

    /// The same curve with `x` and `v` exchanged: `(r, r - t, n)`.
    pub fn swapped(&self) -> Result<Self> {
        Self::new(self.r, self.r - self.t, self.n)
    }
}

impl fmt::Display for LciParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.t, self.n)
    }
}

/// `Z_{t,m}(q,x)` with `q` known through `q^order`, exact in `x`.
pub fn z_tm(t: u32, m: u32, order: u32) -> BivariatePoly {
    let precision = Some(i64::from(order) + 1);
    let mut acc = BivariatePoly::one(precision);
    for i in 1..=t {
        let factor: Vec<LaurentPoly> = (0..=m)
            .map(|j| LaurentPoly::monomial(1, i64::from(i) * i64::from(j)))
            .collect();
        let factor = BivariatePoly::with_precision(factor, precision)
            .expect("factor has nonnegative powers");
        acc = &acc * &factor;
    }
    acc
}

/// `Z^{(k)}_{t,m}(q)`, the coefficient of `x^k` in `Z_{t,m}(q,x)`. Zero
/// for `k > t m`.
pub fn z_tm_coeff(t: u32, m: u32, k: u32, order: u32) -> LaurentPoly {
    z_tm(t, m, order).x_coeff(k as usize)
}

fn check_closed_form_domain(p: &RsnParams) -> Result<()> {
    if p.s <= p.n {
        return Err(Error::InvalidArgument(format!(
            "closed form needs s > n, got {p}"
        )));
    }
    Ok(())
}

/// `sum_{k=s-n}^{s-m-1} q^{m r} Z^{(k)}_{r-1,n}` for each `m` in `ms`,
/// without the `1/(1-q^s)` prefactor.
fn inner_sum(p: &RsnParams, ms: std::ops::Range<u32>, order: u32) -> LaurentPoly {
    let residuals = z_tm(p.r - 1, p.n, order);
    let precision = i64::from(order) + 1;
    let mut acc = LaurentPoly::zero_to(precision);
    let k_lo = p.s.saturating_sub(p.n);
    for m in ms {
        let shift = i64::from(m) * i64::from(p.r);
        for k in k_lo..p.s - m {
            acc = &acc + &residuals.x_coeff(k as usize).shift(shift);
        }
    }
    acc.truncate(precision)
}

fn with_prefactor(p: &RsnParams, sum: LaurentPoly, order: u32) -> Result<LaurentPoly> {
    let pre = geom_expand(u64::from(p.s), i64::from(order))?;
    Ok(&pre * &sum)
}

/// Closed form of `Z_{r,s,n}(q)` through `q^order`.
pub fn z_rsn_closed(p: &RsnParams, order: u32) -> Result<LaurentPoly> {
    check_closed_form_domain(p)?;
    with_prefactor(p, inner_sum(p, 0..p.n, order), order)
}

/// The `m = 0` slice: members with `mu_1 - mu_s <= r - 1`.
pub fn z_le_part(p: &RsnParams, order: u32) -> Result<LaurentPoly> {
    check_closed_form_domain(p)?;
    with_prefactor(p, inner_sum(p, 0..1, order), order)
}

/// The `m >= 1` slices: members with `mu_1 - mu_s = r`.
pub fn z_r_part(p: &RsnParams, order: u32) -> Result<LaurentPoly> {
    check_closed_form_domain(p)?;
    with_prefactor(p, inner_sum(p, 1..p.n, order), order)
}

/// Predicted `sum_l chi(Hilb^l_o(C_{r,t,n})) q^l` through `q^order`.
pub fn hilb_series_lci(p: &LciParams, order: u32) -> Result<LaurentPoly> {
    let shift = p.offset_shift();
    let z = z_rsn_closed(&p.plane_params(), order + shift)?;
    Ok(z.shift(-i64::from(shift)))
}

/// `n k (k+1) / 2`, the minimal size of a member of `P(r, n k, n)`.
pub fn minimal_size_formula(n: u32, k: u32) -> u64 {
    u64::from(n) * u64::from(k) * (u64::from(k) + 1) / 2
}

/// `Z_{t,m}` evaluated at `q = x = 1` from the product form: `(m+1)^t`.
pub fn z_tm_total(t: u32, m: u32) -> BigInt {
    (0..t).fold(BigInt::one(), |acc, _| acc * BigInt::from(m + 1))
}
