//! Untwisted affine root data and truncated characters of integrable
//! highest weight modules.
//!
//! A weight of the affine algebra is `λ̄ + kΛ₀ + mδ` with `λ̄` a finite weight
//! in fundamental coordinates, `k` the level and `m` the `δ`-coefficient. The
//! affine simple roots are `α₁, …, α_n` and `α₀ = δ − θ`.
//!
//! Series are truncated by depth: the height, in affine simple-root
//! coordinates, of `top − μ`. Internally every series is keyed by that
//! difference (its *deficit*), a vector in `ℕ^{n+1}` indexed `0..=n`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::Limits;

/// `λ̄ + kΛ₀ + mδ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineWeight {
    #[serde(with = "crate::json::rational_vec")]
    pub finite: Vec<Rational64>,
    pub level: i64,
    #[serde(with = "crate::json::rational_str")]
    pub delta: Rational64,
}

impl AffineWeight {
    pub fn new(finite: &Weight, level: i64, delta: Rational64) -> Self {
        AffineWeight { finite: finite.coords().iter().map(|&c| Rational64::from_integer(c)).collect(), level, delta }
    }

    /// `kΛ₀`.
    pub fn level_only(rank: usize, level: i64) -> Self {
        AffineWeight { finite: vec![Rational64::zero(); rank], level, delta: Rational64::zero() }
    }

    /// `δ`.
    pub fn delta(rank: usize) -> Self {
        AffineWeight { finite: vec![Rational64::zero(); rank], level: 0, delta: Rational64::one() }
    }

    /// The finite part when it is integral.
    pub fn finite_weight(&self) -> Option<Weight> {
        self.finite.iter().map(|q| q.is_integer().then(|| *q.numer())).collect::<Option<Vec<_>>>().map(Weight::from)
    }

    fn combine(&self, other: &Self, k: i64) -> Self {
        AffineWeight {
            finite: self.finite.iter().zip(&other.finite).map(|(a, b)| a + b * k).collect(),
            level: self.level + other.level * k,
            delta: self.delta + other.delta * k,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let finite: Vec<String> = self.finite.iter().map(|q| q.to_string()).collect();
        write!(f, "[{}] + {}Λ₀ + ({})δ", finite.join(","), self.level, self.delta)
    }
}

impl fmt::Debug for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The level `λ(c)`, stored directly as the `Λ₀` coefficient.
pub fn level_of(lam: &AffineWeight) -> i64 {
    lam.level
}

/// A series `Σ_d c_d e(top − d)` with every deficit `d` of height at most
/// `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedAffineSeries {
    top: AffineWeight,
    depth: usize,
    terms: BTreeMap<Vec<i64>, i128>,
}

impl TruncatedAffineSeries {
    pub fn top(&self) -> &AffineWeight {
        &self.top
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Coefficients keyed by deficit in affine simple-root coordinates.
    pub fn deficits(&self) -> &BTreeMap<Vec<i64>, i128> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `Σ_{i≥0} d_i`.
pub fn height(d: &[i64]) -> i64 {
    d.iter().sum()
}

#[derive(Serialize)]
struct SeriesTerm<'a> {
    weight: AffineWeight,
    deficit: &'a [i64],
    coefficient: i128,
}

/// Affine data attached to a finite root system.
pub struct AffineRootSystem<'a> {
    rs: &'a RootSystem,
    limits: Limits,
    comarks: Vec<i64>,
    /// `labels[j][i] = α_j(h_i)`, indices `0..=n`.
    labels: Vec<Vec<i64>>,
    simple: Vec<AffineWeight>,
}

impl<'a> AffineRootSystem<'a> {
    pub fn new(rs: &'a RootSystem, limits: Limits) -> Self {
        let n = rs.rank();
        let theta = rs.highest_root();
        let theta_w = rs.highest_root_weight();
        // θ = Σ θ_j α_j = Σ θ_j d_j h_j with d_j = (α_j, α_j)/2
        let comarks: Vec<i64> = (0..n)
            .map(|j| {
                let c = Rational64::from_integer(theta[j]) * rs.form_matrix()[j][j] / 2;
                debug_assert!(c.is_integer());
                *c.numer()
            })
            .collect();
        let cartan = rs.cartan_matrix();
        let mut labels = vec![vec![0i64; n + 1]; n + 1];
        labels[0][0] = 2;
        for i in 0..n {
            labels[0][i + 1] = -theta_w[i];
        }
        for j in 0..n {
            labels[j + 1][0] = -(0..n).map(|m| comarks[m] * cartan[j][m]).sum::<i64>();
            for i in 0..n {
                labels[j + 1][i + 1] = cartan[j][i];
            }
        }
        let mut simple = Vec::with_capacity(n + 1);
        simple.push(AffineWeight::new(&-theta_w, 0, Rational64::one()));
        for j in 0..n {
            simple.push(AffineWeight::new(&rs.simple_root_weight(j), 0, Rational64::zero()));
        }
        AffineRootSystem { rs, limits, comarks, labels, simple }
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    /// `c∨_j` with `θ∨ = Σ c∨_j h_j`.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// `α_j(h_i)` for `0 ≤ i, j ≤ n`: the affine Cartan matrix.
    pub fn affine_cartan(&self) -> &[Vec<i64>] {
        &self.labels
    }

    /// `α₀, α₁, …, α_n`.
    pub fn affine_simple_roots(&self) -> &[AffineWeight] {
        &self.simple
    }

    /// `ρ̂` with `ρ̂(h_i) = 1` for `0 ≤ i ≤ n` and no `δ` part; its level is
    /// the dual Coxeter number.
    pub fn rho_hat(&self) -> AffineWeight {
        let level = 1 + self.comarks.iter().sum::<i64>();
        AffineWeight::new(self.rs.rho(), level, Rational64::zero())
    }

    /// `(λ(h_0), …, λ(h_n))`.
    pub fn labels(&self, lam: &AffineWeight) -> Vec<Rational64> {
        let mut out = Vec::with_capacity(lam.finite.len() + 1);
        let tail: Rational64 = lam.finite.iter().zip(&self.comarks).map(|(a, &c)| a * c).sum();
        out.push(Rational64::from_integer(lam.level) - tail);
        out.extend(lam.finite.iter().copied());
        out
    }

    /// `s_i(μ) = μ − μ(h_i) α_i`, `0 ≤ i ≤ n`.
    pub fn reflect(&self, mu: &AffineWeight, i: usize) -> AffineWeight {
        let c = self.labels(mu)[i];
        let a = &self.simple[i];
        AffineWeight {
            finite: mu.finite.iter().zip(&a.finite).map(|(x, y)| x - c * y).collect(),
            level: mu.level,
            delta: mu.delta - c * a.delta,
        }
    }

    fn check_weight(&self, lam: &AffineWeight) -> Result<()> {
        if lam.finite.len() != self.rs.rank() {
            return Err(Error::RankMismatch { expected: self.rs.rank(), got: Weight::zero(lam.finite.len()) });
        }
        Ok(())
    }

    /// Integral labels of a dominant integral weight.
    fn dominant_labels(&self, lam: &AffineWeight) -> Result<Vec<i64>> {
        self.check_weight(lam)?;
        let labels = self.labels(lam);
        if labels.iter().any(|q| !q.is_integer() || *q.numer() < 0) {
            return Err(Error::NotAffineDominant(lam.to_string()));
        }
        Ok(labels.iter().map(|q| *q.numer()).collect())
    }

    fn check_depth(&self, depth: usize) -> Result<()> {
        if depth > self.limits.max_depth {
            Err(Error::DepthCap { depth, cap: self.limits.max_depth })
        } else {
            Ok(())
        }
    }

    /// `top − Σ d_i α_i`.
    pub fn weight_at(&self, top: &AffineWeight, d: &[i64]) -> AffineWeight {
        let mut out = top.clone();
        for (i, &k) in d.iter().enumerate() {
            if k != 0 {
                out = out.combine(&self.simple[i], -k);
            }
        }
        out
    }

    /// Signed Weyl-group images of the regular dominant weight with labels
    /// `start`, as deficits of height at most `depth`.
    fn signed_ball(&self, start: Vec<i64>, depth: usize) -> BTreeMap<Vec<i64>, i128> {
        let n1 = start.len();
        let mut out = BTreeMap::new();
        let origin = vec![0i64; n1];
        let mut seen = HashSet::from([origin.clone()]);
        out.insert(origin.clone(), 1);
        let mut queue = VecDeque::from([(origin, start, 1i128)]);
        while let Some((d, v, sign)) = queue.pop_front() {
            let h = height(&d);
            for i in 0..n1 {
                // only steps that lengthen the word move down
                if v[i] <= 0 || h + v[i] > depth as i64 {
                    continue;
                }
                let mut d2 = d.clone();
                d2[i] += v[i];
                if !seen.insert(d2.clone()) {
                    continue;
                }
                let v2: Vec<i64> = v.iter().zip(&self.labels[i]).map(|(x, a)| x - v[i] * a).collect();
                out.insert(d2.clone(), -sign);
                queue.push_back((d2, v2, -sign));
            }
        }
        out
    }

    /// `(w(ρ̂) − ρ̂, (−1)^ℓ(w))` for every `w` with `ht(ρ̂ − wρ̂) ≤ depth`.
    pub fn affine_weyl_ball(&self, depth: usize) -> Result<Vec<(AffineWeight, i8)>> {
        self.check_depth(depth)?;
        let zero = AffineWeight::level_only(self.rs.rank(), 0);
        let ball = self.signed_ball(vec![1; self.rs.rank() + 1], depth);
        let mut out: Vec<(Vec<i64>, AffineWeight, i8)> =
            ball.into_iter().map(|(d, s)| (d.clone(), self.weight_at(&zero, &d), s as i8)).collect();
        out.sort_by(|a, b| height(&a.0).cmp(&height(&b.0)).then_with(|| a.0.cmp(&b.0)));
        Ok(out.into_iter().map(|(_, w, s)| (w, s)).collect())
    }

    /// `Σ_w (−1)^ℓ(w) e(w(λ+ρ̂))`, truncated below `λ+ρ̂` at `depth`.
    pub fn truncated_numerator(&self, lam: &AffineWeight, depth: usize) -> Result<TruncatedAffineSeries> {
        self.check_depth(depth)?;
        let labels = self.dominant_labels(lam)?;
        let start = labels.iter().map(|x| x + 1).collect();
        Ok(TruncatedAffineSeries {
            top: lam.add(&self.rho_hat()),
            depth,
            terms: self.signed_ball(start, depth),
        })
    }

    /// The character of `V̂(λ)` down to `depth`, by dividing the numerator of
    /// `λ` by the numerator of `0`.
    pub fn truncated_character(&self, lam: &AffineWeight, depth: usize) -> Result<TruncatedAffineSeries> {
        let num = self.truncated_numerator(lam, depth)?;
        let den = self.truncated_numerator(&AffineWeight::level_only(self.rs.rank(), 0), depth)?;
        let den_terms: Vec<(&Vec<i64>, i128)> = den.terms.iter().filter(|(d, _)| height(d) > 0).map(|(d, &c)| (d, c)).collect();
        if den.terms.get(&vec![0; self.rs.rank() + 1]) != Some(&1) {
            return Err(Error::Internal("denominator does not start with 1".into()));
        }
        let mut x: HashMap<Vec<i64>, i128> = HashMap::new();
        let mut terms = BTreeMap::new();
        for d in deficits_up_to(self.rs.rank() + 1, depth) {
            let mut c = num.terms.get(&d).copied().unwrap_or(0);
            for &(e, de) in &den_terms {
                if e.iter().zip(&d).all(|(a, b)| a <= b) {
                    let rest: Vec<i64> = d.iter().zip(e).map(|(a, b)| a - b).collect();
                    if let Some(xr) = x.get(&rest) {
                        c -= de * xr;
                    }
                }
            }
            if c != 0 {
                x.insert(d.clone(), c);
                terms.insert(d, c);
            }
        }
        Ok(TruncatedAffineSeries { top: lam.clone(), depth, terms })
    }

    /// Series terms as `(weight, coefficient)`, by depth and then deficit.
    pub fn terms(&self, s: &TruncatedAffineSeries) -> Vec<(AffineWeight, i128)> {
        sorted_deficits(s).into_iter().map(|(d, c)| (self.weight_at(&s.top, d), c)).collect()
    }

    /// Coefficient of `e(μ)`; zero outside the stored range.
    pub fn coefficient(&self, s: &TruncatedAffineSeries, mu: &AffineWeight) -> Result<i128> {
        Ok(match self.deficit_of(&s.top, mu)? {
            Some(d) => s.terms.get(&d).copied().unwrap_or(0),
            None => 0,
        })
    }

    /// `d` with `top − μ = Σ d_i α_i`, when it is integral.
    pub fn deficit_of(&self, top: &AffineWeight, mu: &AffineWeight) -> Result<Option<Vec<i64>>> {
        self.check_weight(mu)?;
        if top.level != mu.level {
            return Ok(None);
        }
        let d0 = top.delta - mu.delta;
        if !d0.is_integer() {
            return Ok(None);
        }
        // finite part: λ̄ − μ̄ = Σ_{i≥1} d_i α_i − d_0 θ
        let n = self.rs.rank();
        let theta = self.rs.highest_root();
        let f2r = self.rs.fund_to_root();
        let mut d = vec![*d0.numer()];
        for j in 0..n {
            let mut c = Rational64::from_integer(d0.numer() * theta[j]);
            for i in 0..n {
                c += (top.finite[i] - mu.finite[i]) * f2r[i][j];
            }
            if !c.is_integer() {
                return Ok(None);
            }
            d.push(*c.numer());
        }
        Ok(Some(d))
    }

    /// JSON value for a series: `{"top", "depth", "terms": [...]}` with terms
    /// sorted by depth.
    pub fn series_json(&self, s: &TruncatedAffineSeries) -> serde_json::Value {
        let terms: Vec<SeriesTerm> = sorted_deficits(s)
            .into_iter()
            .map(|(d, c)| SeriesTerm { weight: self.weight_at(&s.top, d), deficit: d, coefficient: c })
            .collect();
        serde_json::json!({
            "top": s.top,
            "depth": s.depth,
            "terms": terms,
        })
    }
}

fn sorted_deficits(s: &TruncatedAffineSeries) -> Vec<(&Vec<i64>, i128)> {
    let mut v: Vec<(&Vec<i64>, i128)> = s.terms.iter().map(|(d, &c)| (d, c)).collect();
    v.sort_by(|a, b| height(a.0).cmp(&height(b.0)).then_with(|| a.0.cmp(b.0)));
    v
}

/// Every `d ∈ ℕ^len` with `Σ d ≤ depth`, in order of height.
pub fn deficits_up_to(len: usize, depth: usize) -> Vec<Vec<i64>> {
    fn fill(pos: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=left {
            cur[pos] = k;
            fill(pos + 1, left - k, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    for h in 0..=depth as i64 {
        fill(0, h, &mut vec![0; len], &mut out);
    }
    out
}

/// Product of two deficit series, keeping heights up to `depth`.
pub fn convolve(a: &BTreeMap<Vec<i64>, i128>, b: &BTreeMap<Vec<i64>, i128>, depth: usize) -> BTreeMap<Vec<i64>, i128> {
    let mut out: BTreeMap<Vec<i64>, i128> = BTreeMap::new();
    for (x, cx) in a {
        for (y, cy) in b {
            let z: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            if height(&z) <= depth as i64 {
                *out.entry(z).or_insert(0) += cx * cy;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn lambda0(rank: usize) -> AffineWeight {
        AffineWeight::level_only(rank, 1)
    }

    /// Brute-force partition count, independent of any series code.
    fn partitions(n: i64) -> i128 {
        fn count(n: i64, max: i64) -> i128 {
            if n == 0 {
                return 1;
            }
            (1..=n.min(max)).map(|k| count(n - k, k)).sum()
        }
        if n < 0 {
            0
        } else {
            count(n, n)
        }
    }

    #[test]
    fn levels() {
        assert_eq!(level_of(&lambda0(1)), 1);
        assert_eq!(level_of(&AffineWeight::new(&Weight::from(vec![3]), 0, Rational64::from(5))), 0);
        assert_eq!(level_of(&AffineWeight::level_only(2, 4)), 4);
    }

    #[test]
    fn simple_roots() {
        let r = rs("A1");
        let a = AffineRootSystem::new(&r, Limits::default());
        let s = a.affine_simple_roots();
        assert_eq!(s[0].finite, vec![Rational64::from(-2)]);
        assert_eq!(s[0].delta, Rational64::one());
        assert!(s.iter().all(|x| x.level == 0));
        let theta = AffineWeight::new(r.highest_root_weight(), 0, Rational64::zero());
        assert_eq!(s[0].add(&theta), AffineWeight::delta(1));
        assert_eq!(a.affine_cartan(), &[vec![2, -2], vec![-2, 2]]);
    }

    #[test]
    fn affine_cartan_matrices() {
        // dual Coxeter numbers
        for (t, h) in [("A3", 4), ("B3", 5), ("C3", 4), ("D4", 6), ("G2", 4), ("F4", 9), ("E6", 12)] {
            let r = rs(t);
            let a = AffineRootSystem::new(&r, Limits::default());
            assert_eq!(a.rho_hat().level, h, "{t}");
            // δ = α₀ + θ pairs to zero with every h_i
            let d = AffineWeight::delta(r.rank());
            assert!(a.labels(&d).iter().all(|x| x.is_zero()), "{t}");
            for (j, root) in a.affine_simple_roots().iter().enumerate() {
                let lab: Vec<i64> = a.labels(root).iter().map(|q| *q.numer()).collect();
                assert_eq!(lab, a.affine_cartan()[j], "{t}");
            }
        }
    }

    #[test]
    fn ball_basics() {
        let r = rs("A1");
        let a = AffineRootSystem::new(&r, Limits::default());
        assert_eq!(a.affine_weyl_ball(0).unwrap(), vec![(AffineWeight::level_only(1, 0), 1)]);
        let ball = a.affine_weyl_ball(3).unwrap();
        let zero = AffineWeight::level_only(1, 0);
        for s in a.affine_simple_roots() {
            assert!(ball.contains(&(zero.sub(s), -1)));
        }
        assert!(matches!(a.affine_weyl_ball(13), Err(Error::DepthCap { .. })));
    }

    #[test]
    fn ball_agrees_with_reflection_closure() {
        // independent route: apply reflections to ρ̂ + mδ as affine weights
        for t in ["A1", "A2", "B2", "G2"] {
            let r = rs(t);
            let a = AffineRootSystem::new(&r, Limits::default());
            let depth = 6;
            let shift = Rational64::new(7, 3);
            let rho = a.rho_hat();
            let base = rho.add(&AffineWeight { delta: shift, ..AffineWeight::level_only(r.rank(), 0) });
            let mut seen = HashMap::from([(base.clone(), 1i8)]);
            let mut frontier = vec![base.clone()];
            for len in 1.. {
                let mut next = Vec::new();
                for w in &frontier {
                    for i in 0..=r.rank() {
                        let v = a.reflect(w, i);
                        let d = a.deficit_of(&base, &v).unwrap().unwrap();
                        if d.iter().all(|&x| x >= 0) && height(&d) <= depth && !seen.contains_key(&v) {
                            seen.insert(v.clone(), if len % 2 == 0 { 1 } else { -1 });
                            next.push(v);
                        }
                    }
                }
                if next.is_empty() {
                    break;
                }
                frontier = next;
            }
            let mut brute: Vec<(AffineWeight, i8)> = seen.into_iter().map(|(w, s)| (w.sub(&base), s)).collect();
            let mut ball = a.affine_weyl_ball(depth as usize).unwrap();
            brute.sort();
            ball.sort();
            assert_eq!(brute, ball, "{t}");
        }
    }

    #[test]
    fn numerator_examples() {
        let r = rs("A1");
        let a = AffineRootSystem::new(&r, Limits::default());
        let n0 = a.truncated_numerator(&lambda0(1), 0).unwrap();
        assert_eq!(n0.deficits(), &BTreeMap::from([(vec![0, 0], 1)]));
        // λ+ρ̂ has labels (2, 1): s₀ moves by 2α₀, s₁ by α₁
        let n1 = a.truncated_numerator(&lambda0(1), 2).unwrap();
        assert_eq!(n1.deficits(), &BTreeMap::from([(vec![0, 0], 1), (vec![2, 0], -1), (vec![0, 1], -1)]));
        let bad = AffineWeight::new(&Weight::from(vec![2]), 1, Rational64::zero());
        assert!(matches!(a.truncated_numerator(&bad, 2), Err(Error::NotAffineDominant(_))));
    }

    #[test]
    fn basic_representation_of_a1() {
        let r = rs("A1");
        let a = AffineRootSystem::new(&r, Limits::default());
        let ch = a.truncated_character(&lambda0(1), 8).unwrap();
        for d in deficits_up_to(2, 8) {
            // weight Λ₀ + (d₀ − d₁)α₁ − d₀δ
            let m = d[0] - d[1];
            let want = partitions(d[0] - m * m);
            assert_eq!(ch.deficits().get(&d).copied().unwrap_or(0), want, "{d:?}");
        }
        let l0 = lambda0(1);
        let delta = AffineWeight::delta(1);
        assert_eq!(a.coefficient(&ch, &l0.sub(&delta)).unwrap(), 1);
        assert_eq!(a.coefficient(&ch, &l0.sub(&delta).sub(&delta)).unwrap(), 2);
        let alpha1 = &a.affine_simple_roots()[1];
        assert_eq!(a.coefficient(&ch, &l0.sub(alpha1)).unwrap(), 0);
        assert_eq!(a.coefficient(&ch, &l0.add(alpha1).sub(&delta)).unwrap(), 1);
    }

    #[test]
    fn division_is_consistent() {
        for t in ["A1", "A2"] {
            let r = rs(t);
            let a = AffineRootSystem::new(&r, Limits::default());
            let n = r.rank();
            let mut tops = vec![lambda0(n), AffineWeight::level_only(n, 2)];
            for i in 0..n {
                tops.push(AffineWeight::new(&Weight::fundamental(n, i), 1, Rational64::zero()));
            }
            let den = a.truncated_numerator(&AffineWeight::level_only(n, 0), 6).unwrap();
            for lam in tops {
                let ch = a.truncated_character(&lam, 6).unwrap();
                let num = a.truncated_numerator(&lam, 6).unwrap();
                assert_eq!(convolve(den.deficits(), ch.deficits(), 6), *num.deficits(), "{t} {lam}");
                assert!(ch.deficits().values().all(|&c| c > 0));
                assert_eq!(ch.deficits()[&vec![0; n + 1]], 1);
                for (mu, c) in a.terms(&ch) {
                    assert_eq!(mu.level, lam.level);
                    for i in 1..=n {
                        let v = a.reflect(&mu, i);
                        let d = a.deficit_of(&lam, &v).unwrap().unwrap();
                        if d.iter().all(|&x| x >= 0) && height(&d) <= 6 {
                            assert_eq!(a.coefficient(&ch, &v).unwrap(), c, "{t} {mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let w = AffineWeight { finite: vec![Rational64::new(1, 2), Rational64::from(3)], level: 2, delta: Rational64::new(-1, 3) };
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(text, r#"{"finite":["1/2",3],"level":2,"delta":"-1/3"}"#);
        assert_eq!(serde_json::from_str::<AffineWeight>(&text).unwrap(), w);
    }
}
