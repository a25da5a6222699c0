//! The character ring of a simple Lie algebra.
//!
//! Irreducible characters come from Freudenthal's recursion over the
//! dominant weights below the highest weight; the alternating Weyl numerator
//! is available separately so that the two can be checked against each
//! other. Tensor products with an irreducible use the Brauer–Klimyk rule, and
//! arbitrary module characters are split into irreducibles by repeatedly
//! peeling off the character of a maximal dominant weight.

use std::cell::OnceCell;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::Limits;

/// A finitely supported map from weights to nonzero integers.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FormalCharacter {
    terms: HashMap<Weight, i128>,
}

impl FormalCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    /// `e(0)`, the character of the trivial module.
    pub fn trivial(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), 1)
    }

    pub fn monomial(w: Weight, c: i128) -> Self {
        let mut ch = Self::new();
        ch.add_term(w, c);
        ch
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i128)>) -> Self {
        let mut ch = Self::new();
        for (w, c) in terms {
            ch.add_term(w, c);
        }
        ch
    }

    pub fn add_term(&mut self, w: Weight, c: i128) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn get(&self, w: &Weight) -> i128 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i128)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// Terms sorted by weight.
    pub fn sorted(&self) -> Vec<(Weight, i128)> {
        let mut v: Vec<(Weight, i128)> = self.terms.iter().map(|(w, &c)| (w.clone(), c)).collect();
        v.sort();
        v
    }

    /// Sum of all coefficients; the dimension for module characters.
    pub fn mass(&self) -> i128 {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn scaled(&self, k: i128) -> Self {
        if k == 0 {
            return Self::new();
        }
        FormalCharacter { terms: self.terms.iter().map(|(w, &c)| (w.clone(), c * k)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, &c) in &other.terms {
            *self.terms.entry(w.clone()).or_insert(0) += c;
        }
        self.terms.retain(|_, c| *c != 0);
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(-1))
    }

    /// Product in the group ring: `e(μ)·e(ν) = e(μ+ν)`.
    pub fn mul(&self, other: &Self) -> Self {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut terms: HashMap<Weight, i128> = HashMap::with_capacity(big.len() * 2);
        for (a, &ca) in &small.terms {
            for (b, &cb) in &big.terms {
                *terms.entry(a + b).or_insert(0) += ca * cb;
            }
        }
        terms.retain(|_, c| *c != 0);
        FormalCharacter { terms }
    }

    fn divide_exact(&self, k: i128) -> Result<Self> {
        let mut terms = HashMap::with_capacity(self.len());
        for (w, &c) in &self.terms {
            if c % k != 0 {
                return Err(Error::Internal(format!("coefficient {c} at {w} not divisible by {k}")));
            }
            terms.insert(w.clone(), c / k);
        }
        Ok(FormalCharacter { terms })
    }
}

impl fmt::Debug for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.sorted()).finish()
    }
}

impl Serialize for FormalCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let sorted = self.sorted();
        let mut map = s.serialize_map(Some(sorted.len()))?;
        for (w, c) in sorted {
            map.serialize_entry(&w.to_string(), &i128_json(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for FormalCharacter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, serde_json::Number> = BTreeMap::deserialize(d)?;
        let mut ch = FormalCharacter::new();
        for (k, v) in raw {
            let w: Weight = serde_json::from_str(&k).map_err(D::Error::custom)?;
            let c: i128 = v.to_string().parse().map_err(D::Error::custom)?;
            ch.add_term(w, c);
        }
        Ok(ch)
    }
}

/// JSON numbers are emitted as integers whenever they fit in 64 bits.
fn i128_json(c: i128) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(x) => serde_json::Value::from(x),
        Err(_) => serde_json::Value::String(c.to_string()),
    }
}

/// Multiplicities of irreducible summands, keyed by dominant highest weight.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct DominantDecomposition {
    mults: BTreeMap<Weight, u64>,
}

impl DominantDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: Weight, m: u64) {
        debug_assert!(w.is_dominant());
        if m > 0 {
            *self.mults.entry(w).or_insert(0) += m;
        }
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.mults.iter().map(|(w, &m)| (w, m))
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Total number of irreducible summands.
    pub fn summands(&self) -> u64 {
        self.mults.values().sum()
    }
}

impl fmt::Debug for DominantDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.mults.iter()).finish()
    }
}

impl<const N: usize> From<[(Weight, u64); N]> for DominantDecomposition {
    fn from(v: [(Weight, u64); N]) -> Self {
        let mut d = Self::new();
        for (w, m) in v {
            d.add(w, m);
        }
        d
    }
}

impl Serialize for DominantDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.mults.len()))?;
        for (w, m) in &self.mults {
            map.serialize_entry(&w.to_string(), m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for DominantDecomposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, u64> = BTreeMap::deserialize(d)?;
        let mut out = DominantDecomposition::new();
        for (k, m) in raw {
            let w: Weight = serde_json::from_str(&k).map_err(D::Error::custom)?;
            if !w.is_dominant() {
                return Err(D::Error::custom(format!("{w} is not dominant")));
            }
            out.add(w, m);
        }
        Ok(out)
    }
}

/// Character computations for one root system.
pub struct CharRing<'a> {
    rs: &'a RootSystem,
    limits: Limits,
    adjoint: OnceCell<FormalCharacter>,
}

impl<'a> CharRing<'a> {
    pub fn new(rs: &'a RootSystem, limits: Limits) -> Self {
        CharRing { rs, limits, adjoint: OnceCell::new() }
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Weyl's dimension formula `∏ (λ+ρ, α)/(ρ, α)` over positive roots.
    pub fn dim_irreducible(&self, lam: &Weight) -> Result<BigUint> {
        self.rs.check_dominant(lam)?;
        let shifted = lam + self.rs.rho();
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for beta in self.rs.positive_roots() {
            num *= self.rs.weight_root_scaled(&shifted, beta);
            den *= self.rs.weight_root_scaled(self.rs.rho(), beta);
        }
        let q = &num / &den;
        debug_assert!((&q * &den) == num);
        Ok(q.to_biguint().expect("dimension is positive"))
    }

    fn dim_checked(&self, lam: &Weight) -> Result<u64> {
        let d = self.dim_irreducible(lam)?;
        match d.to_u64() {
            Some(x) if x <= self.limits.max_dim => Ok(x),
            _ => Err(Error::DimensionCap { dim: d.to_string(), cap: self.limits.max_dim }),
        }
    }

    /// Multiplicities of the dominant weights of `V(λ)` by Freudenthal's
    /// formula, sorted by weight.
    pub fn dominant_multiplicities(&self, lam: &Weight) -> Result<Vec<(Weight, i128)>> {
        self.dim_checked(lam)?;
        let rs = self.rs;
        let roots = rs.positive_roots();
        let root_wts = rs.positive_root_weights();

        // dominant weights below λ, reached by subtracting positive roots
        let mut depth: HashMap<Weight, i64> = HashMap::new();
        let mut queue = VecDeque::new();
        depth.insert(lam.clone(), 0);
        queue.push_back(lam.clone());
        while let Some(mu) = queue.pop_front() {
            let d = depth[&mu];
            for (beta, bw) in roots.iter().zip(root_wts) {
                let nu = &mu - bw;
                if nu.is_dominant() && !depth.contains_key(&nu) {
                    depth.insert(nu.clone(), d + beta.iter().sum::<i64>());
                    queue.push_back(nu);
                }
            }
        }
        let mut order: Vec<(i64, Weight)> = depth.into_iter().map(|(w, d)| (d, w)).collect();
        order.sort();

        let rho = rs.rho();
        let top = lam + rho;
        let top_norm = rs.weight_inner_scaled(&top, &top);
        let mut mult: HashMap<Weight, i128> = HashMap::new();
        mult.insert(lam.clone(), 1);
        // tail[(ν, β)] = Σ_{k≥1} m(ν+kβ)(ν+kβ, β); strings are unbroken, so
        // tail(ν) = m(ν+β)(ν+β, β) + tail(ν+β) and each entry is built once
        let mut tail: HashMap<(Weight, usize), i128> = HashMap::new();
        for (_, mu) in order.iter().skip(1) {
            let shifted = mu + rho;
            let denom = (top_norm - rs.weight_inner_scaled(&shifted, &shifted)) as i128;
            let mut sum: i128 = 0;
            for (b, (beta, bw)) in roots.iter().zip(root_wts).enumerate() {
                let mut string = Vec::new();
                let mut nu = mu + bw;
                let mut acc = loop {
                    if let Some(&t) = tail.get(&(&nu - bw, b)) {
                        break t;
                    }
                    let (dom, _) = rs.dominant_representative(&nu);
                    let m = mult.get(&dom).copied().unwrap_or(0);
                    if m == 0 {
                        break 0;
                    }
                    let term = m * rs.weight_root_scaled(&nu, beta) as i128;
                    let next = &nu + bw;
                    string.push((std::mem::replace(&mut nu, next), term));
                };
                for (nu, term) in string.into_iter().rev() {
                    acc += term;
                    tail.insert((&nu - bw, b), acc);
                }
                sum += acc;
            }
            if denom <= 0 || (2 * sum) % denom != 0 {
                return Err(Error::Internal(format!("Freudenthal step failed at {mu}")));
            }
            let m = 2 * sum / denom;
            if m > 0 {
                mult.insert(mu.clone(), m);
            }
        }
        let mut out: Vec<(Weight, i128)> = mult.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// The full character of `V(λ)`.
    pub fn char_irreducible(&self, lam: &Weight) -> Result<FormalCharacter> {
        let dominant = self.dominant_multiplicities(lam)?;
        let mut ch = FormalCharacter::new();
        for (mu, m) in dominant {
            for nu in self.rs.weyl_orbit(&mu, self.limits.max_orbit)? {
                ch.terms.insert(nu, m);
            }
        }
        Ok(ch)
    }

    /// The adjoint character, cached.
    pub fn adjoint_character(&self) -> &FormalCharacter {
        self.adjoint.get_or_init(|| {
            let mut ch = FormalCharacter::new();
            for w in self.rs.all_root_weights() {
                ch.add_term(w, 1);
            }
            ch.add_term(Weight::zero(self.rs.rank()), self.rs.rank() as i128);
            ch
        })
    }

    /// `Σ_{w∈W} (−1)^ℓ(w) e(w(λ+ρ))`.
    pub fn weyl_numerator(&self, lam: &Weight) -> Result<FormalCharacter> {
        self.rs.check_dominant(lam)?;
        let orbit = self.rs.signed_regular_orbit(&(lam + self.rs.rho()), self.limits.max_weyl_order)?;
        Ok(FormalCharacter::from_terms(orbit.into_iter().map(|(w, s)| (w, i128::from(s)))))
    }

    /// Brauer–Klimyk: decompose `X ⊗ V(λ)` for a module character `X`.
    pub fn tensor_with_irreducible(&self, x: &FormalCharacter, lam: &Weight) -> Result<DominantDecomposition> {
        self.rs.check_dominant(lam)?;
        let rho = self.rs.rho();
        let mut signed: HashMap<Weight, i128> = HashMap::new();
        for (nu, c) in x.iter() {
            let shifted = &(lam + nu) + rho;
            let (dom, len) = self.rs.dominant_representative(&shifted);
            if !dom.is_regular_dominant() {
                continue;
            }
            let sign = if len % 2 == 0 { 1 } else { -1 };
            *signed.entry(&dom - rho).or_insert(0) += sign * c;
        }
        let mut out = DominantDecomposition::new();
        for (w, m) in signed {
            if m < 0 {
                return Err(Error::NotModuleCharacter { weight: w, mult: m });
            }
            out.add(w, m as u64);
        }
        Ok(out)
    }

    /// `V(λ) ⊗ V(μ)` as a sum of irreducibles.
    pub fn tensor_decompose(&self, lam: &Weight, mu: &Weight) -> Result<DominantDecomposition> {
        let dl = self.dim_irreducible(lam)?;
        let dm = self.dim_irreducible(mu)?;
        let prod = &dl * &dm;
        if prod > BigUint::from(self.limits.max_dim) {
            return Err(Error::DimensionCap { dim: prod.to_string(), cap: self.limits.max_dim });
        }
        // expand the smaller factor, keep the other as a highest weight
        let (small, big) = if dl <= dm { (lam, mu) } else { (mu, lam) };
        let ch = self.char_irreducible(small)?;
        self.tensor_with_irreducible(&ch, big)
    }

    /// Split a module character into irreducibles by iterated extraction of
    /// a maximal dominant weight.
    pub fn decompose_character(&self, ch: &FormalCharacter) -> Result<DominantDecomposition> {
        let rs = self.rs;
        let rho = rs.rho();
        let mut rest = ch.clone();
        let mut out = DominantDecomposition::new();
        while !rest.is_empty() {
            // maximal pairing with ρ is maximal for dominance; ties by coordinates
            let top = rest
                .iter()
                .filter(|(w, _)| w.is_dominant())
                .max_by(|(a, _), (b, _)| {
                    rs.weight_inner_scaled(a, rho).cmp(&rs.weight_inner_scaled(b, rho)).then_with(|| a.cmp(b))
                })
                .map(|(w, c)| (w.clone(), c));
            let Some((w, c)) = top else {
                let (w, c) = rest.sorted().into_iter().next().expect("nonempty");
                return Err(Error::NotModuleCharacter { weight: w, mult: c });
            };
            if c < 0 {
                return Err(Error::NotModuleCharacter { weight: w, mult: c });
            }
            let irr = self.char_irreducible(&w)?;
            rest = rest.sub(&irr.scaled(c));
            out.add(w, c as u64);
        }
        Ok(out)
    }

    /// `e(μ) ↦ e(kμ)`.
    pub fn adams_operation(&self, k: usize, ch: &FormalCharacter) -> Result<FormalCharacter> {
        if k == 0 {
            return Err(Error::ZeroAdams);
        }
        Ok(adams(k as i64, ch))
    }

    /// Symmetric power by the Newton recursion `k S^k = Σ ψ_j S^{k−j}`.
    pub fn sym_power(&self, k: usize, ch: &FormalCharacter) -> Result<FormalCharacter> {
        Ok(self.sym_powers(k, ch)?.pop().expect("k+1 entries"))
    }

    /// `S^0, …, S^k` of `ch`.
    pub fn sym_powers(&self, k: usize, ch: &FormalCharacter) -> Result<Vec<FormalCharacter>> {
        self.check_power(k)?;
        Ok(newton_powers(k, ch, self.rs.rank(), false))
    }

    /// Exterior power by `k ⋀^k = Σ (−1)^{j−1} ψ_j ⋀^{k−j}`. For a module
    /// character of dimension `d`, every power above `d` is zero and is
    /// returned without running the recursion.
    pub fn ext_power(&self, k: usize, ch: &FormalCharacter) -> Result<FormalCharacter> {
        if ch.is_nonnegative() && (k as i128) > ch.mass() {
            return Ok(FormalCharacter::new());
        }
        self.check_power(k)?;
        Ok(newton_powers(k, ch, self.rs.rank(), true).pop().expect("k+1 entries"))
    }

    fn check_power(&self, k: usize) -> Result<()> {
        if k > self.limits.max_power {
            Err(Error::PowerCap { k, cap: self.limits.max_power })
        } else {
            Ok(())
        }
    }

    /// `(λ, λ + 2ρ)` in the form with `(θ, θ) = 2`.
    pub fn casimir_eigenvalue(&self, lam: &Weight) -> Result<Rational64> {
        self.rs.check_dominant(lam)?;
        let shifted = lam + &(self.rs.rho() * 2);
        Ok(self.rs.weight_inner(lam, &shifted))
    }
}

pub(crate) fn adams(k: i64, ch: &FormalCharacter) -> FormalCharacter {
    FormalCharacter { terms: ch.terms.iter().map(|(w, &c)| (w * k, c)).collect() }
}

/// Newton recursion for symmetric (`alternating == false`) or exterior
/// powers; returns all powers `0..=k`.
pub(crate) fn newton_powers(k: usize, ch: &FormalCharacter, rank: usize, alternating: bool) -> Vec<FormalCharacter> {
    let psi: Vec<FormalCharacter> = (0..=k).map(|j| if j == 0 { FormalCharacter::new() } else { adams(j as i64, ch) }).collect();
    let mut powers = vec![FormalCharacter::trivial(rank)];
    for m in 1..=k {
        let mut acc = FormalCharacter::new();
        for j in 1..=m {
            let term = psi[j].mul(&powers[m - j]);
            if alternating && j % 2 == 0 {
                acc = acc.sub(&term);
            } else {
                acc.add_assign(&term);
            }
        }
        powers.push(acc.divide_exact(m as i128).expect("Newton recursion divides exactly"));
    }
    powers
}
