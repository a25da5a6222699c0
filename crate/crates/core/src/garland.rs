//! The imaginary root vectors `P_s` of the integral form, as polynomials in
//! commuting variables `Λ_k = h ⊗ t^k`, and a matrix check of the
//! divided-power straightening identity on `sl2`-modules.
//!
//! `P(u) = Σ_s P_s u^s = exp(−Σ_{k≥1} Λ_k u^k / k)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Limits;

/// A polynomial in `Λ_1, Λ_2, …` with rational coefficients. Monomials are
/// multisets of indices stored in ascending order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PowerSumPoly {
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl PowerSumPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), BigRational::one())
    }

    /// `Λ_k`.
    pub fn var(k: u32) -> Self {
        Self::monomial(vec![k], BigRational::one())
    }

    pub fn monomial(mut indices: Vec<u32>, c: BigRational) -> Self {
        indices.sort_unstable();
        let mut p = Self::zero();
        p.add_term(indices, c);
        p
    }

    fn add_term(&mut self, key: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, monomial: &[u32]) -> BigRational {
        let mut key = monomial.to_vec();
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut key = a.clone();
                key.extend_from_slice(b);
                key.sort_unstable();
                out.add_term(key, ca * cb);
            }
        }
        out
    }

    /// Every monomial has index sum `s`.
    pub fn is_homogeneous(&self, s: u32) -> bool {
        self.terms.keys().all(|k| k.iter().sum::<u32>() == s)
    }
}

/// `c * L1^a L2^b …`, one monomial per line in key order; `0` when empty.
impl fmt::Display for PowerSumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", format_monomial(key, c))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PowerSumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format_monomial(k, c)).collect();
        write!(f, "{{{}}}", parts.join(" + "))
    }
}

/// `c * L1^a L2^b`, or just `c` for the constant monomial.
pub fn format_monomial(key: &[u32], c: &BigRational) -> String {
    let mut powers: BTreeMap<u32, u32> = BTreeMap::new();
    for &k in key {
        *powers.entry(k).or_insert(0) += 1;
    }
    if powers.is_empty() {
        return c.to_string();
    }
    let vars: Vec<String> = powers
        .iter()
        .map(|(k, e)| if *e == 1 { format!("L{k}") } else { format!("L{k}^{e}") })
        .collect();
    format!("{} * {}", c, vars.join(" "))
}

fn check_order(s: usize, limits: &Limits) -> Result<()> {
    if s > limits.max_garland_order {
        Err(Error::OrderCap { order: s, cap: limits.max_garland_order })
    } else {
        Ok(())
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `P_s`: the coefficient of `u^s` in `exp(−Σ Λ_k u^k / k)`, expanded over
/// partitions of `s` as `Π_k (−1)^{m_k} Λ_k^{m_k} / (k^{m_k} m_k!)`.
pub fn garland_series(s: usize, limits: &Limits) -> Result<PowerSumPoly> {
    check_order(s, limits)?;
    let mut out = PowerSumPoly::zero();
    for part in partitions(s as u32) {
        let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
        for &k in &part {
            *mult.entry(k).or_insert(0) += 1;
        }
        let mut den = BigInt::one();
        let mut odd = false;
        for (&k, &m) in &mult {
            den *= BigInt::from(k).pow(m) * factorial(m);
            odd ^= m % 2 == 1;
        }
        let sign = if odd { -BigInt::one() } else { BigInt::one() };
        out.add_term(part, BigRational::new(sign, den));
    }
    Ok(out)
}

/// Whether `s P_s = −Σ_{k=1}^{s} Λ_k P_{s−k}` holds exactly.
pub fn newton_check(s: usize, limits: &Limits) -> Result<bool> {
    check_order(s, limits)?;
    let lhs = garland_series(s, limits)?.scaled(&BigRational::from_integer(BigInt::from(s)));
    let mut rhs = PowerSumPoly::zero();
    for k in 1..=s {
        let term = PowerSumPoly::var(k as u32).times(&garland_series(s - k, limits)?);
        rhs = rhs.plus(&term.scaled(&-BigRational::one()));
    }
    Ok(lhs == rhs)
}

/// Partitions of `n`, each in ascending order.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            let mut p = cur.clone();
            p.reverse();
            out.push(p);
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dense exact square matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix(Vec<Vec<BigRational>>);

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix(vec![vec![BigRational::zero(); n]; n])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.0[i][i] = BigRational::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.0[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                if self.0[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !other.0[k][j].is_zero() {
                        out.0[i][j] += &self.0[i][k] * &other.0[k][j];
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Matrix(self.0.iter().zip(&other.0).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Matrix(self.0.iter().map(|r| r.iter().map(|x| x * c).collect()).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.size()), |acc, _| acc.mul(self))
    }

    /// `M^k / k!`.
    pub fn divided_power(&self, k: usize) -> Self {
        self.pow(k).scale(&BigRational::new(BigInt::one(), factorial(k as u32)))
    }

    /// `M(M−1)⋯(M−m+1) / m!`.
    pub fn binomial(&self, m: usize) -> Self {
        let n = self.size();
        let id = Self::identity(n);
        let mut acc = id.clone();
        for j in 0..m {
            acc = acc.mul(&self.sub(&id.scale(&BigRational::from_integer(BigInt::from(j)))));
        }
        acc.scale(&BigRational::new(BigInt::one(), factorial(m as u32)))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn max_abs(&self) -> BigRational {
        self.0.iter().flatten().map(|x| x.abs()).max().unwrap_or_else(BigRational::zero)
    }
}

/// `E`, `F`, `H` on `V(N)` in the basis `v_0, …, v_N` with
/// `H v_k = (N − 2k) v_k`, `F v_k = v_{k+1}`, `E v_k = k(N − k + 1) v_{k−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2RepMatrices {
    pub n: usize,
    pub e: Matrix,
    pub f: Matrix,
    pub h: Matrix,
}

impl Sl2RepMatrices {
    pub fn new(n: usize) -> Self {
        let dim = n + 1;
        let mut e = Matrix::zeros(dim);
        let mut f = Matrix::zeros(dim);
        let mut h = Matrix::zeros(dim);
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        for k in 0..dim {
            h.0[k][k] = q(n as i64 - 2 * k as i64);
            if k + 1 < dim {
                f.0[k + 1][k] = BigRational::one();
            }
            if k > 0 {
                e.0[k - 1][k] = q((k * (n - k + 1)) as i64);
            }
        }
        Sl2RepMatrices { n, e, f, h }
    }

    /// `[H, E] = 2E`, `[H, F] = −2F`, `[E, F] = H`.
    pub fn relations_hold(&self) -> bool {
        let two = BigRational::from_integer(BigInt::from(2));
        self.h.commutator(&self.e) == self.e.scale(&two)
            && self.h.commutator(&self.f) == self.f.scale(&-two)
            && self.e.commutator(&self.f) == self.h
    }
}

/// Both sides of
/// `E^{(s)} F^{(r)} = Σ_m F^{(r−m)} binom(H − (r+s−2m), m) E^{(s−m)}`
/// on `V(N)`.
pub fn zform_sides(r: usize, s: usize, n: usize, limits: &Limits) -> Result<(Matrix, Matrix)> {
    let cap = limits.max_zform;
    if r > cap || s > cap || n > 4 * cap {
        return Err(Error::OrderCap { order: r.max(s).max(n.div_ceil(4)), cap });
    }
    if n < r + s {
        return Err(Error::ZformTooSmall { r, s, n });
    }
    let m = Sl2RepMatrices::new(n);
    let lhs = m.e.divided_power(s).mul(&m.f.divided_power(r));
    let id = Matrix::identity(n + 1);
    let mut rhs = Matrix::zeros(n + 1);
    for k in 0..=r.min(s) {
        let shift = BigRational::from_integer(BigInt::from((r + s - 2 * k) as i64));
        let middle = m.h.sub(&id.scale(&shift)).binomial(k);
        rhs = rhs.add(&m.f.divided_power(r - k).mul(&middle).mul(&m.e.divided_power(s - k)));
    }
    Ok((lhs, rhs))
}

/// Whether the two sides of the divided-power identity agree on `V(N)`.
pub fn zform_check(r: usize, s: usize, n: usize, limits: &Limits) -> Result<bool> {
    let (lhs, rhs) = zform_sides(r, s, n, limits)?;
    Ok(lhs == rhs)
}
