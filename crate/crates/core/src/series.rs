//! Exact truncated power-series arithmetic and the generating functions
//! `J_{K,i}(z;q)`, `G_{K,i}(z;q)`, and the associated product forms.
//!
//! Series use the Pochhammer notation `(a)_n = (a;q)_n = prod_{l=0}^{n-1}
//! (1 - a q^l)`; infinite products truncate once a factor exceeds the
//! truncation order, which is exact in the formal-power-series sense.
//!
//! The two multiple sums implemented here are
//!
//! ```text
//! J_{K,i}(z;q) = sum over m_1..m_{kappa-1} of
//!     (-z q^{1 + eps*m_{kappa-1}})_inf
//!       * q^{N_1^2 + ... + N_{kappa-1}^2 + L_i} * z^{2N}
//!       / ((q)_{m_1} ... (q)_{m_{kappa-1}})
//!   with N_j = m_j + ... + m_{kappa-1},  L_j = N_j + ... + N_{kappa-1},
//!        N = L_1,  K = 2*kappa - eps
//!
//! G_{K,i}(z;q) = sum over m_1..m_{K-1} of
//!     q^{(N~_1^2 + ... + N~_{K-1}^2 + M~)/2 + L~_{2i}} * z^{N~}
//!       / ((q)_{m_1} ... (q)_{m_{K-1}})
//!   with N~_j = m_j + ... + m_{K-1},  M~ = m_1 + m_3 + ... + m_{K-1-eps},
//!        L~_{2i} = m_{2i} + m_{2i+1} + 2(m_{2i+2} + m_{2i+3}) + ...,
//!        N~ = m_1 + 2 m_2 + ... + (K-1) m_{K-1}
//! ```
//!
//! and at `z = 1` the G sum equals the overpartition products
//!
//! ```text
//! prod (1+q^n) * prod_{n != 0, +-i mod (K+1)} 1/(1-q^n)     (2i < K+1)
//! prod_{n != 0 mod kappa} (1+q^n)/(1-q^n)                   (eps=1, i=kappa)
//! ```
//!
//! Coefficients are `i64`; every profile builds with overflow checks, so an
//! overflow aborts loudly instead of wrapping. Summation over mode vectors
//! prunes a branch as soon as the minimal achievable exponent (remaining
//! modes zero) exceeds the truncation order.

use crate::error::{Error, Result};
use crate::jagged::Restriction;

pub type Coeff = i64;

/// Univariate truncated power series in q with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeff: Vec<Coeff>, // index n = exponent of q, up to q_max inclusive
}

impl PowerSeries {
    pub fn zero(q_max: usize) -> Self {
        Self {
            coeff: vec![0; q_max + 1],
        }
    }

    pub fn one(q_max: usize) -> Self {
        let mut s = Self::zero(q_max);
        s.coeff[0] = 1;
        s
    }

    pub fn monomial(q_max: usize, n: usize, c: Coeff) -> Self {
        let mut s = Self::zero(q_max);
        if n <= q_max {
            s.coeff[n] = c;
        }
        s
    }

    pub fn from_coeffs(coeff: Vec<Coeff>) -> Self {
        assert!(!coeff.is_empty());
        Self { coeff }
    }

    pub fn q_max(&self) -> usize {
        self.coeff.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Coeff {
        self.coeff.get(n).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeff
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.q_max() != other.q_max() {
            return Err(Error::OrderMismatch(self.q_max(), 0, other.q_max(), 0));
        }
        let coeff = self
            .coeff
            .iter()
            .zip(&other.coeff)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeff })
    }

    /// Cauchy product, exact below the truncation order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.q_max() != other.q_max() {
            return Err(Error::OrderMismatch(self.q_max(), 0, other.q_max(), 0));
        }
        let q_max = self.q_max();
        let mut coeff = vec![0; q_max + 1];
        for (i, &a) in self.coeff.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeff.iter().take(q_max + 1 - i).enumerate() {
                coeff[i + j] += a * b;
            }
        }
        Ok(Self { coeff })
    }

    /// In-place `*= (1 + q^e)`.
    pub fn mul_one_plus_q(&mut self, e: usize) {
        if e == 0 {
            for c in &mut self.coeff {
                *c *= 2;
            }
            return;
        }
        for n in (e..self.coeff.len()).rev() {
            self.coeff[n] += self.coeff[n - e];
        }
    }

    /// In-place `*= (1 - q^e)`.
    pub fn mul_one_minus_q(&mut self, e: usize) {
        assert!(e > 0, "(1 - q^0) = 0");
        for n in (e..self.coeff.len()).rev() {
            self.coeff[n] -= self.coeff[n - e];
        }
    }

    /// In-place `*= 1/(1 - q^e)`, the geometric series with stride e.
    pub fn div_one_minus_q(&mut self, e: usize) {
        assert!(e > 0);
        for n in e..self.coeff.len() {
            self.coeff[n] += self.coeff[n - e];
        }
    }

    /// `(q; q)_n` truncated.
    pub fn poch_q(n: usize, q_max: usize) -> Self {
        let mut s = Self::one(q_max);
        for l in 1..=n {
            s.mul_one_minus_q(l);
        }
        s
    }

    /// `1/(q; q)_n` truncated: partitions into parts of size at most n.
    pub fn inv_poch_q(n: usize, q_max: usize) -> Self {
        let mut s = Self::one(q_max);
        for l in 1..=n {
            s.div_one_minus_q(l);
        }
        s
    }

    /// `(q^2; q^2)_n` truncated.
    pub fn poch_q2(n: usize, q_max: usize) -> Self {
        let mut s = Self::one(q_max);
        for l in 1..=n {
            s.mul_one_minus_q(2 * l);
        }
        s
    }

    /// `1/(q^2; q^2)_n` truncated.
    pub fn inv_poch_q2(n: usize, q_max: usize) -> Self {
        let mut s = Self::one(q_max);
        for l in 1..=n {
            s.div_one_minus_q(2 * l);
        }
        s
    }

    /// `1/(q; q)_inf`: the partition generating function.
    pub fn partition_gf(q_max: usize) -> Self {
        let mut s = Self::one(q_max);
        for l in 1..=q_max {
            s.div_one_minus_q(l);
        }
        s
    }

    /// `prod_{n >= 1} (1 + q^n)`: the distinct-part generating function.
    pub fn prod_one_plus_q(q_max: usize) -> Self {
        let mut s = Self::one(q_max);
        for l in 1..=q_max {
            s.mul_one_plus_q(l);
        }
        s
    }

    /// Substitute `q -> q^s`, widening the truncation accordingly.
    pub fn stretch(&self, s: usize) -> Self {
        assert!(s >= 1);
        let mut out = Self::zero(self.q_max() * s);
        for (n, &c) in self.coeff.iter().enumerate() {
            out.coeff[n * s] = c;
        }
        out
    }

    /// First exponent where the two series differ, with both values.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, Coeff, Coeff)> {
        let hi = self.q_max().min(other.q_max());
        (0..=hi).find_map(|n| {
            (self.coeff(n) != other.coeff(n)).then_some((n, self.coeff(n), other.coeff(n)))
        })
    }
}

/// Bivariate truncated power series: `coeff[m][n]` is the coefficient of
/// `z^m q^n`, exact for all `m <= z_max`, `n <= q_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    q_max: usize,
    z_max: usize,
    coeff: Vec<Vec<Coeff>>, // coeff[m][n]
}

impl BivariateSeries {
    pub fn zero(q_max: usize, z_max: usize) -> Self {
        Self {
            q_max,
            z_max,
            coeff: vec![vec![0; q_max + 1]; z_max + 1],
        }
    }

    pub fn one(q_max: usize, z_max: usize) -> Self {
        let mut s = Self::zero(q_max, z_max);
        s.coeff[0][0] = 1;
        s
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }

    pub fn z_max(&self) -> usize {
        self.z_max
    }

    pub fn coeff(&self, m: usize, n: usize) -> Coeff {
        self.coeff
            .get(m)
            .and_then(|row| row.get(n))
            .copied()
            .unwrap_or(0)
    }

    pub fn rows(&self) -> &[Vec<Coeff>] {
        &self.coeff
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.q_max, self.z_max) != (other.q_max, other.z_max) {
            return Err(Error::OrderMismatch(
                self.q_max,
                self.z_max,
                other.q_max,
                other.z_max,
            ));
        }
        let mut out = self.clone();
        for (m, row) in other.coeff.iter().enumerate() {
            for (n, &c) in row.iter().enumerate() {
                out.coeff[m][n] += c;
            }
        }
        Ok(out)
    }

    /// Cauchy product in both variables.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if (self.q_max, self.z_max) != (other.q_max, other.z_max) {
            return Err(Error::OrderMismatch(
                self.q_max,
                self.z_max,
                other.q_max,
                other.z_max,
            ));
        }
        let mut out = Self::zero(self.q_max, self.z_max);
        for (ma, row_a) in self.coeff.iter().enumerate() {
            for (na, &a) in row_a.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for mb in 0..=self.z_max - ma {
                    let row_b = &other.coeff[mb];
                    for (nb, &b) in row_b.iter().take(self.q_max + 1 - na).enumerate() {
                        if b != 0 {
                            out.coeff[ma + mb][na + nb] += a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// In-place `*= (1 + z q^e)`.
    pub fn mul_one_plus_zq(&mut self, e: usize) {
        for m in (1..=self.z_max).rev() {
            for n in e..=self.q_max {
                let add = self.coeff[m - 1][n - e];
                self.coeff[m][n] += add;
            }
        }
    }

    /// In-place `*= 1/(1 - q^e)` (acts on q only).
    pub fn div_one_minus_q(&mut self, e: usize) {
        assert!(e > 0);
        for row in &mut self.coeff {
            for n in e..=self.q_max {
                row[n] += row[n - e];
            }
        }
    }

    /// `(-z q^c)_inf = prod_{l >= 0} (1 + z q^{c+l})` truncated. Requires
    /// `c >= 1` so the product converges formally.
    pub fn poch_neg_zq_inf(c: usize, q_max: usize, z_max: usize) -> Self {
        assert!(c >= 1);
        let mut s = Self::one(q_max, z_max);
        for e in c..=q_max {
            s.mul_one_plus_zq(e);
        }
        s
    }

    /// Add `c * z^dm q^dn * other` into `self`; coefficients of `other`
    /// beyond the shifted truncation are ignored (they lie above it).
    pub fn add_shifted(&mut self, other: &Self, dn: usize, dm: usize, c: Coeff) {
        for (m, row) in other.coeff.iter().enumerate() {
            if m + dm > self.z_max {
                break;
            }
            for (n, &v) in row.iter().enumerate() {
                if n + dn > self.q_max {
                    break;
                }
                if v != 0 {
                    self.coeff[m + dm][n + dn] += c * v;
                }
            }
        }
    }

    /// Substitute `q -> q^s`, widening the q-truncation accordingly.
    pub fn stretch_q(&self, s: usize) -> Self {
        assert!(s >= 1);
        let mut out = Self::zero(self.q_max * s, self.z_max);
        for (m, row) in self.coeff.iter().enumerate() {
            for (n, &c) in row.iter().enumerate() {
                out.coeff[m][n * s] = c;
            }
        }
        out
    }

    /// Evaluate at `z = 1` by summing rows. Only exact if `z_max` is large
    /// enough that every omitted row vanishes below `q_max`; the generating
    /// functions in this module guarantee that bound themselves.
    pub fn eval_z1(&self) -> PowerSeries {
        let mut out = PowerSeries::zero(self.q_max);
        for row in &self.coeff {
            for (n, &c) in row.iter().enumerate() {
                out.coeff[n] += c;
            }
        }
        out
    }

    /// First (z-degree, q-degree) where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, usize, Coeff, Coeff)> {
        let mh = self.z_max.min(other.z_max);
        let nh = self.q_max.min(other.q_max);
        for m in 0..=mh {
            for n in 0..=nh {
                if self.coeff(m, n) != other.coeff(m, n) {
                    return Some((m, n, self.coeff(m, n), other.coeff(m, n)));
                }
            }
        }
        None
    }
}

/// Gaussian polynomial `[n choose k]_q`, built from the Pascal recurrence
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`, so the coefficients are non-negative
/// integers by construction. Out-of-range `k` gives the zero polynomial
/// (matching the `1/(q)_n = 0` for `n < 0` convention).
pub fn q_binomial(n: usize, k: usize, q_max: usize) -> PowerSeries {
    if k > n {
        return PowerSeries::zero(q_max);
    }
    // row-by-row Pascal construction
    let mut row: Vec<PowerSeries> = vec![PowerSeries::one(q_max)];
    for nn in 1..=n {
        let mut next = Vec::with_capacity(nn + 1);
        next.push(PowerSeries::one(q_max));
        for kk in 1..nn {
            // [nn, kk] = [nn-1, kk-1] + q^kk [nn-1, kk]
            let mut shifted = PowerSeries::zero(q_max);
            if kk <= q_max {
                for idx in 0..=q_max - kk {
                    shifted.coeff[idx + kk] = row[kk].coeff(idx);
                }
            }
            next.push(row[kk - 1].add(&shifted).expect("same order"));
        }
        next.push(PowerSeries::one(q_max));
        row = next;
    }
    row[k].clone()
}

/// The J multiple sum, truncated at `(q_max, z_max)`. Requires `K > 2`.
pub fn j_series(r: &Restriction, q_max: usize, z_max: usize) -> Result<BivariateSeries> {
    if r.k() <= 2 {
        return Err(Error::JaggedKTooSmall(r.k()));
    }
    let kappa = r.kappa() as usize;
    let eps = r.epsilon() as usize;
    let i = r.i() as usize;
    let mut acc = BivariateSeries::zero(q_max, z_max);
    // modes[1..=kappa-1]; chosen from the top level down
    let mut modes = vec![0usize; kappa];
    choose_j_modes(&mut modes, kappa - 1, q_max, z_max, &mut |modes| {
        // suffix sums N_j and the linear term L_i
        let n_suffix = |j: usize| -> usize { (j..kappa).map(|l| modes[l]).sum() };
        let sq: usize = (1..kappa).map(|j| n_suffix(j) * n_suffix(j)).sum();
        // L_i = N_i + ... + N_{kappa-1}, i.e. m_l weighted by (l - i + 1)
        let l_i: usize = (i..kappa).map(|l| (l - i + 1) * modes[l]).sum();
        let base_q = sq + l_i;
        let base_z = 2 * (1..kappa).map(|l| l * modes[l]).sum::<usize>();
        if base_q > q_max || base_z > z_max {
            return;
        }
        // (-z q^{1 + eps*m_{kappa-1}})_inf at the reduced truncation
        let c = 1 + eps * modes[kappa - 1];
        let mut term = if c <= q_max - base_q {
            BivariateSeries::poch_neg_zq_inf(c, q_max - base_q, z_max - base_z)
        } else {
            BivariateSeries::one(q_max - base_q, z_max - base_z)
        };
        for &m in &modes[1..kappa] {
            for l in 1..=m {
                term.div_one_minus_q(l);
            }
        }
        acc.add_shifted(&term, base_q, base_z, 1);
    });
    Ok(acc)
}

/// Enumerate J mode vectors with pruning: with levels `j..kappa-1` fixed and
/// the rest zero, the exponent is at least `sum_{l>=j} N_l^2 + (j-1) N_j^2`.
fn choose_j_modes(
    modes: &mut Vec<usize>,
    level: usize,
    q_max: usize,
    z_max: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if level == 0 {
        f(modes);
        return;
    }
    let kappa = modes.len();
    for m in 0.. {
        modes[level] = m;
        let n_suffix = |j: usize| -> usize { (j..kappa).map(|l| modes[l]).sum() };
        let min_sq: usize = (level..kappa).map(|j| n_suffix(j) * n_suffix(j)).sum::<usize>()
            + (level - 1) * n_suffix(level) * n_suffix(level);
        let min_z = 2 * (1..kappa).map(|l| l * modes[l]).sum::<usize>();
        if min_sq > q_max || min_z > z_max {
            modes[level] = 0;
            break;
        }
        choose_j_modes(modes, level - 1, q_max, z_max, f);
    }
    modes[level] = 0;
}

/// The G multiple sum, truncated at `(q_max, z_max)`. Accepts `K >= 2`.
/// The exponent `(sum N~_j^2 + M~)/2 + L~_{2i}` is always an integer; the
/// parity invariant is asserted for every mode vector.
pub fn g_series(r: &Restriction, q_max: usize, z_max: usize) -> Result<BivariateSeries> {
    let k = r.k() as usize;
    let eps = r.epsilon() as usize;
    let i = r.i() as usize;
    let mut acc = BivariateSeries::zero(q_max, z_max);
    let mut modes = vec![0usize; k];
    choose_g_modes(&mut modes, k - 1, q_max, z_max, &mut |modes| {
        let n_suffix = |j: usize| -> usize { (j..k).map(|l| modes[l]).sum() };
        let sq: usize = (1..k).map(|j| n_suffix(j) * n_suffix(j)).sum();
        // M~ = m_1 + m_3 + ... + m_{K-1-eps}
        let m_tilde: usize = (1..k)
            .filter(|&l| l % 2 == 1 && l <= k - 1 - eps)
            .map(|l| modes[l])
            .sum();
        assert!(
            (sq + m_tilde).is_multiple_of(2),
            "parity invariant violated for modes {:?}",
            modes
        );
        // L~_{2i} = m_{2i} + m_{2i+1} + 2(m_{2i+2} + m_{2i+3}) + ...
        let l_tilde: usize = (1..k)
            .filter(|&l| l >= 2 * i)
            .map(|l| ((l - 2 * i) / 2 + 1) * modes[l])
            .sum();
        let base_q = (sq + m_tilde) / 2 + l_tilde;
        let base_z: usize = (1..k).map(|l| l * modes[l]).sum();
        if base_q > q_max || base_z > z_max {
            return;
        }
        let mut term = PowerSeries::one(q_max - base_q);
        for &m in &modes[1..k] {
            for l in 1..=m {
                term.div_one_minus_q(l);
            }
        }
        let wrapped = BivariateSeries {
            q_max: q_max - base_q,
            z_max: 0,
            coeff: vec![term.coeff],
        };
        acc.add_shifted(&wrapped, base_q, base_z, 1);
    });
    Ok(acc)
}

fn choose_g_modes(
    modes: &mut Vec<usize>,
    level: usize,
    q_max: usize,
    z_max: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if level == 0 {
        f(modes);
        return;
    }
    let k = modes.len();
    for m in 0.. {
        modes[level] = m;
        let n_suffix = |j: usize| -> usize { (j..k).map(|l| modes[l]).sum() };
        let min_sq: usize = (level..k).map(|j| n_suffix(j) * n_suffix(j)).sum::<usize>()
            + (level - 1) * n_suffix(level) * n_suffix(level);
        let min_z: usize = (1..k).map(|l| l * modes[l]).sum();
        if min_sq / 2 > q_max || min_z > z_max {
            modes[level] = 0;
            break;
        }
        choose_g_modes(modes, level - 1, q_max, z_max, f);
    }
    modes[level] = 0;
}

/// `G_{K,i}(z; q^2)`: the path generating function. Exact for all weights
/// `<= 2*q_max` and charges `<= z_max`.
pub fn g_series_q2(r: &Restriction, q2_max: usize, z_max: usize) -> Result<BivariateSeries> {
    Ok(g_series(r, q2_max / 2, z_max)?.stretch_q(2))
}

/// `G_{K,i}(1; q)`, summed with a z-truncation wide enough to be exact:
/// every mode vector satisfies `N~ <= 2 * exponent`, so rows above
/// `2*q_max` vanish below the q-truncation.
pub fn g_series_z1(r: &Restriction, q_max: usize) -> Result<PowerSeries> {
    Ok(g_series(r, q_max, 2 * q_max)?.eval_z1())
}

/// Product side of the sum-product identities:
/// for `2i < K+1`, `prod (1+q^n) prod_{n != 0,+-i mod (K+1)} (1-q^n)^{-1}`;
/// for `eps = 1, i = kappa`, `prod_{n != 0 mod kappa} (1+q^n)/(1-q^n)`.
pub fn product_series(r: &Restriction, q_max: usize) -> Result<PowerSeries> {
    let k = r.k();
    let i = r.i();
    if 2 * i < k + 1 {
        let modulus = k + 1;
        let mut s = PowerSeries::prod_one_plus_q(q_max);
        for n in 1..=q_max {
            let rem = (n as u32) % modulus;
            let excluded = rem == 0 || rem == i || rem == modulus - i;
            if !excluded {
                s.div_one_minus_q(n);
            }
        }
        Ok(s)
    } else if r.epsilon() == 1 && i == r.kappa() {
        let kappa = r.kappa();
        let mut s = PowerSeries::one(q_max);
        for n in 1..=q_max {
            if !(n as u32).is_multiple_of(kappa) {
                s.mul_one_plus_q(n);
                s.div_one_minus_q(n);
            }
        }
        Ok(s)
    } else {
        Err(Error::ProductCase { k, i })
    }
}

/// Coefficientwise check of the q-binomial theorem
/// `sum_k q^{k(k+1)/2} x^k [m choose k]_q = (-xq)_m` for all `m <= m_max`.
/// Returns the first failing `(m, x-degree, q-degree, lhs, rhs)` if any.
pub fn q_binomial_theorem_check(
    m_max: usize,
    q_max: usize,
) -> Option<(usize, usize, usize, Coeff, Coeff)> {
    for m in 0..=m_max {
        let mut lhs = BivariateSeries::zero(q_max, m);
        for k in 0..=m {
            let tri = k * (k + 1) / 2;
            if tri > q_max {
                break;
            }
            let gauss = q_binomial(m, k, q_max - tri);
            let wrapped = BivariateSeries {
                q_max: q_max - tri,
                z_max: 0,
                coeff: vec![gauss.coeff],
            };
            lhs.add_shifted(&wrapped, tri, k, 1);
        }
        let mut rhs = BivariateSeries::one(q_max, m);
        for l in 1..=m.min(q_max) {
            rhs.mul_one_plus_zq(l);
        }
        if let Some((zm, qn, a, b)) = lhs.first_mismatch(&rhs) {
            return Some((m, zm, qn, a, b));
        }
    }
    None
}

/// Coefficientwise check of the Euler relation
/// `sum_n q^{n(n-1)/2} x^n / (q)_n = (-x)_inf`.
pub fn euler_check(q_max: usize, x_max: usize) -> Option<(usize, usize, Coeff, Coeff)> {
    let mut lhs = BivariateSeries::zero(q_max, x_max);
    for n in 0..=x_max {
        let tri = n * (n - n.min(1)) / 2; // n(n-1)/2 without underflow
        if tri > q_max {
            break;
        }
        let inv = PowerSeries::inv_poch_q(n, q_max - tri);
        let wrapped = BivariateSeries {
            q_max: q_max - tri,
            z_max: 0,
            coeff: vec![inv.coeff],
        };
        lhs.add_shifted(&wrapped, tri, n, 1);
    }
    // (-x)_inf = (1 + x) * prod_{l >= 1} (1 + x q^l)
    let mut rhs = BivariateSeries::one(q_max, x_max);
    for m in (1..=x_max).rev() {
        for n in 0..=q_max {
            let add = rhs.coeff(m - 1, n);
            rhs.coeff[m][n] += add; // the (1 + x q^0) factor
        }
    }
    for l in 1..=q_max {
        rhs.mul_one_plus_zq(l);
    }
    lhs.first_mismatch(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::for_each_partition;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_small_expansions() {
        assert_eq!(PowerSeries::poch_q(1, 4).coeffs(), &[1, -1, 0, 0, 0]);
        assert_eq!(PowerSeries::poch_q(2, 4).coeffs(), &[1, -1, -1, 1, 0]);
    }

    #[test]
    fn one_is_multiplicative_identity_and_difference_of_squares() {
        let one = PowerSeries::one(6);
        let mut s = PowerSeries::zero(6);
        s.coeff = vec![3, -1, 4, 0, 2, 0, -5];
        assert_eq!(one.mul(&s).unwrap(), s);
        let mut a = PowerSeries::one(6);
        a.mul_one_plus_q(1);
        a.mul_one_minus_q(1);
        let mut expect = PowerSeries::one(6);
        expect.mul_one_minus_q(2);
        assert_eq!(a, expect, "(1+q)(1-q) = 1-q^2");
    }

    #[test]
    fn partition_gf_matches_enumeration() {
        let gf = PowerSeries::partition_gf(20);
        for n in 0..=20u64 {
            let mut count = 0i64;
            for_each_partition(n, |_| count += 1);
            assert_eq!(gf.coeff(n as usize), count, "p({n})");
        }
    }

    #[test]
    fn q_binomial_base_cases() {
        assert_eq!(q_binomial(5, 0, 8), PowerSeries::one(8));
        assert_eq!(q_binomial(2, 1, 8).coeffs()[..3], [1, 1, 0]);
        assert_eq!(q_binomial(1, 2, 8), PowerSeries::zero(8));
        // [4,2]_q = 1 + q + 2q^2 + q^3 + q^4
        assert_eq!(q_binomial(4, 2, 6).coeffs(), &[1, 1, 2, 1, 1, 0, 0]);
    }

    #[test]
    fn q_binomial_equals_pochhammer_quotient() {
        // (q)_n / ((q)_k (q)_{n-k}) via multiplying back: gauss * (q)_k *
        // (q)_{n-k} == (q)_n
        for n in 0..=8usize {
            for k in 0..=n {
                let q_max = 40;
                let gauss = q_binomial(n, k, q_max);
                let lhs = gauss
                    .mul(&PowerSeries::poch_q(k, q_max))
                    .unwrap()
                    .mul(&PowerSeries::poch_q(n - k, q_max))
                    .unwrap();
                assert_eq!(lhs, PowerSeries::poch_q(n, q_max), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_binomial_theorem_holds() {
        assert_eq!(q_binomial_theorem_check(8, 30), None);
    }

    #[test]
    fn euler_relation_holds() {
        assert_eq!(euler_check(30, 10), None);
    }

    #[test]
    fn j_series_constant_term_and_small_coefficients() {
        let r = Restriction::new(3, 2).unwrap();
        let j = j_series(&r, 10, 10).unwrap();
        assert_eq!(j.coeff(0, 0), 1, "constant term");
        // frozen from the exhaustive jagged oracle:
        // J_{3,2}(1): (1) at m=1, (0,1) at m=2
        assert_eq!(j.coeff(1, 1), 1);
        assert_eq!(j.coeff(2, 1), 1);
        // J_{3,2}(3,m): (3); (2,1),(1,2); (2,0,1)
        assert_eq!(j.coeff(1, 3), 1);
        assert_eq!(j.coeff(2, 3), 2);
        assert_eq!(j.coeff(3, 3), 1);

        let r31 = Restriction::new(3, 1).unwrap();
        let j31 = j_series(&r31, 10, 10).unwrap();
        assert_eq!(j31.coeff(0, 0), 1);
        assert_eq!(j31.coeff(1, 1), 1);
        assert_eq!(j31.coeff(2, 1), 0, "no (0,1) when i = 1");
    }

    #[test]
    fn j_series_matches_exhaustive_jagged_counts_for_k6() {
        use crate::jagged::jagged_counts;
        for i in 1..=3u32 {
            let r = Restriction::new(6, i).unwrap();
            let j = j_series(&r, 14, 18).unwrap();
            let counts = jagged_counts(&r, 14).unwrap();
            for n in 0..=14usize {
                for m in 0..=18usize {
                    assert_eq!(
                        j.coeff(m, n),
                        counts.get(n as u64, m as u64) as i64,
                        "K=6 i={i} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn g_series_constant_term_is_one() {
        for (k, i) in [(2u32, 1u32), (3, 1), (3, 2), (4, 2), (5, 3), (6, 3)] {
            let r = Restriction::new(k, i).unwrap();
            let g = g_series(&r, 8, 8).unwrap();
            assert_eq!(g.coeff(0, 0), 1, "K={k} i={i}");
        }
    }

    #[test]
    fn g_matches_j_at_moderate_truncation() {
        for (k, i) in [(3u32, 1u32), (3, 2), (4, 1), (4, 2), (5, 2)] {
            let r = Restriction::new(k, i).unwrap();
            let j = j_series(&r, 12, 8).unwrap();
            let g = g_series(&r, 12, 8).unwrap();
            assert_eq!(j.first_mismatch(&g), None, "K={k} i={i}");
        }
    }

    #[test]
    fn k2_series_is_the_closed_form_sum() {
        // G_{2,1}(z;q^2) = sum_m q^{m(m+1)} z^m / (q^2;q^2)_m
        let r = Restriction::new(2, 1).unwrap();
        let g2 = g_series_q2(&r, 24, 10).unwrap();
        let mut expect = BivariateSeries::zero(24, 10);
        for m in 0..=4usize {
            let base = m * (m + 1);
            if base > 24 {
                break;
            }
            let inv = PowerSeries::inv_poch_q2(m, 24 - base);
            let wrapped = BivariateSeries {
                q_max: 24 - base,
                z_max: 0,
                coeff: vec![inv.coeff],
            };
            expect.add_shifted(&wrapped, base, m, 1);
        }
        assert_eq!(g2.first_mismatch(&expect), None);
    }

    #[test]
    fn product_series_cases_and_rejection() {
        let r = Restriction::new(3, 2).unwrap(); // eps=1, i=kappa
        let p = product_series(&r, 6).unwrap();
        assert_eq!(p.coeffs()[..7], [1, 2, 2, 4, 6, 8, 12]);
        let r = Restriction::new(4, 1).unwrap(); // 2i < K+1
        let p = product_series(&r, 4).unwrap();
        assert_eq!(p.coeff(0), 1);
        // K=4, i=2: 2i = 4 < 5, still the general case; no rejection among
        // admissible parameters with eps=0. The error path needs eps=0 and
        // 2i >= K+1, which Restriction::new already excludes, so exercise
        // the guard through the overpartition counter instead.
        assert!(product_series(&Restriction::new(4, 2).unwrap(), 4).is_ok());
    }

    #[test]
    fn classical_series_have_non_negative_coefficients() {
        assert!(PowerSeries::partition_gf(30).coeffs().iter().all(|&c| c >= 0));
        for n in 0..=8usize {
            for k in 0..=n {
                assert!(q_binomial(n, k, 20).coeffs().iter().all(|&c| c >= 0));
            }
        }
        for (k, i) in [(3u32, 1u32), (3, 2), (5, 3), (6, 2)] {
            let r = Restriction::new(k, i).unwrap();
            let p = product_series(&r, 30).unwrap();
            assert!(p.coeffs().iter().all(|&c| c >= 0), "K={k} i={i}");
        }
    }

    #[test]
    fn g_z1_matches_products_small() {
        for (k, i) in [(3u32, 1u32), (3, 2), (4, 1), (4, 2)] {
            let r = Restriction::new(k, i).unwrap();
            let sum = g_series_z1(&r, 16).unwrap();
            let prod = product_series(&r, 16).unwrap();
            assert_eq!(sum.first_mismatch(&prod), None, "K={k} i={i}");
        }
    }

    proptest! {
        /// Associativity and commutativity of truncated multiplication on
        /// random small series.
        #[test]
        fn mul_is_associative_and_commutative(
            a in proptest::collection::vec(-4i64..=4, 9),
            b in proptest::collection::vec(-4i64..=4, 9),
            c in proptest::collection::vec(-4i64..=4, 9),
        ) {
            let a = PowerSeries::from_coeffs(a);
            let b = PowerSeries::from_coeffs(b);
            let c = PowerSeries::from_coeffs(c);
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }

        /// Multiplying by (1 - q^e) and then by its geometric inverse is the
        /// identity below the truncation order.
        #[test]
        fn mul_div_one_minus_q_roundtrip(
            a in proptest::collection::vec(-4i64..=4, 12),
            e in 1usize..=5,
        ) {
            let orig = PowerSeries::from_coeffs(a);
            let mut s = orig.clone();
            s.mul_one_minus_q(e);
            s.div_one_minus_q(e);
            prop_assert_eq!(s, orig);
        }
    }
}
