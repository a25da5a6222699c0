//! Finite-dimensional irreducible modules of the loop algebra `g ⊗ ℂ[t, t⁻¹]`.
//!
//! An irreducible module is a tensor product of evaluation modules
//! `ev_a V(λ)` at pairwise distinct nonzero points, so it is recorded as a
//! finitely supported map from points to nonzero dominant weights. Points are
//! exact nonzero rationals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::charring::{CharRing, DominantDecomposition};
use crate::error::{Error, Result};
use crate::linalg::smith_normal_form;
use crate::rootsys::{RootSystem, Weight};

/// A nonzero rational evaluation point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(BigRational);

impl Point {
    pub fn new(value: BigRational) -> Result<Self> {
        if value.is_zero() {
            Err(Error::ZeroPoint)
        } else {
            Ok(Point(value))
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        Self::new(BigRational::new(num.into(), den.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Point {
    /// Panics on zero; use [`Point::new`] for untrusted input.
    fn from(v: i64) -> Self {
        Point::new(BigRational::from_integer(v.into())).expect("nonzero point")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad point {s:?}"));
        let s = s.trim();
        let value = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
        };
        Point::new(value)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        let s = match Raw::deserialize(d)? {
            Raw::Int(i) => i.to_string(),
            Raw::Str(s) => s,
        };
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `⊗_a ev_a V(λ_a)`, stored as `a ↦ λ_a` with every `λ_a ≠ 0`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LoopIrrep {
    support: BTreeMap<Point, Weight>,
}

impl LoopIrrep {
    /// The trivial module.
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Build from `(point, weight)` pairs. Zero weights are dropped; repeated
    /// points and non-dominant weights are rejected.
    pub fn new(rs: &RootSystem, parts: impl IntoIterator<Item = (Point, Weight)>) -> Result<Self> {
        let mut support = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (a, lam) in parts {
            rs.check_dominant(&lam)?;
            if !seen.insert(a.clone()) {
                return Err(Error::RepeatedPoint(a.to_string()));
            }
            if !lam.is_zero() {
                support.insert(a, lam);
            }
        }
        Ok(LoopIrrep { support })
    }

    /// `ev_a V(λ)`.
    pub fn evaluation(rs: &RootSystem, a: Point, lam: Weight) -> Result<Self> {
        Self::new(rs, [(a, lam)])
    }

    pub fn support(&self) -> &BTreeMap<Point, Weight> {
        &self.support
    }

    pub fn weight_at(&self, a: &Point) -> Option<&Weight> {
        self.support.get(a)
    }

    /// `Σ_a λ_a`, or zero of the given rank for the trivial module.
    pub fn total_weight(&self, rank: usize) -> Weight {
        let mut s = Weight::zero(rank);
        for w in self.support.values() {
            s += w;
        }
        s
    }
}

/// One entry of the JSON form `[{"point": "p/q", "weight": [...]}]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopPart {
    pub point: Point,
    pub weight: Weight,
}

impl LoopIrrep {
    /// Entries in point order.
    pub fn parts(&self) -> Vec<LoopPart> {
        self.support.iter().map(|(a, w)| LoopPart { point: a.clone(), weight: w.clone() }).collect()
    }

    pub fn from_parts(rs: &RootSystem, parts: Vec<LoopPart>) -> Result<Self> {
        Self::new(rs, parts.into_iter().map(|p| (p.point, p.weight)))
    }
}

impl fmt::Debug for LoopIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.support.iter()).finish()
    }
}

/// `P/Q` in the canonical coordinates given by the Smith normal form of the
/// transposed Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalGroup {
    moduli: Vec<i64>,
    rows: Vec<Vec<i64>>,
}

/// A coset in `P/Q`, as residues modulo the nontrivial invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FundamentalGroupElement(pub Vec<i64>);

impl FundamentalGroupElement {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl FundamentalGroup {
    pub fn new(rs: &RootSystem) -> Self {
        let c = rs.cartan_matrix();
        let n = rs.rank();
        // columns of the transpose are the simple roots in fundamental weights
        let transposed: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| c[j][i]).collect()).collect();
        let snf = smith_normal_form(&transposed);
        let mut moduli = Vec::new();
        let mut rows = Vec::new();
        for (i, &d) in snf.diagonal.iter().enumerate() {
            if d != 1 {
                moduli.push(d);
                rows.push(snf.left[i].clone());
            }
        }
        FundamentalGroup { moduli, rows }
    }

    /// Invariant factors larger than one.
    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().map(|&d| d as u64).product()
    }

    pub fn class(&self, w: &Weight) -> FundamentalGroupElement {
        FundamentalGroupElement(
            self.rows
                .iter()
                .zip(&self.moduli)
                .map(|(row, &d)| row.iter().zip(w.coords()).map(|(a, b)| a * b).sum::<i64>().rem_euclid(d))
                .collect(),
        )
    }

    pub fn add(&self, a: &FundamentalGroupElement, b: &FundamentalGroupElement) -> FundamentalGroupElement {
        FundamentalGroupElement(
            a.0.iter().zip(&b.0).zip(&self.moduli).map(|((x, y), &d)| (x + y).rem_euclid(d)).collect(),
        )
    }

    pub fn zero(&self) -> FundamentalGroupElement {
        FundamentalGroupElement(vec![0; self.moduli.len()])
    }
}

/// `χ_V`: point ↦ nonzero class in `P/Q`.
pub type SpectralCharacter = BTreeMap<Point, FundamentalGroupElement>;

/// Loop-algebra computations over one character ring.
pub struct LoopCategory<'r, 'a> {
    ring: &'r CharRing<'a>,
    pq: FundamentalGroup,
}

impl<'r, 'a> LoopCategory<'r, 'a> {
    pub fn new(ring: &'r CharRing<'a>) -> Self {
        LoopCategory { ring, pq: FundamentalGroup::new(ring.root_system()) }
    }

    pub fn fundamental_group(&self) -> &FundamentalGroup {
        &self.pq
    }

    pub fn spectral_character(&self, v: &LoopIrrep) -> SpectralCharacter {
        v.support
            .iter()
            .map(|(a, w)| (a.clone(), self.pq.class(w)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn same_block(&self, v: &LoopIrrep, w: &LoopIrrep) -> bool {
        self.spectral_character(v) == self.spectral_character(w)
    }

    /// Group modules into blocks; each block lists input indices in order.
    pub fn blocks(&self, modules: &[LoopIrrep]) -> Vec<(SpectralCharacter, Vec<usize>)> {
        let mut by_char: Vec<(SpectralCharacter, Vec<usize>)> = Vec::new();
        for (i, v) in modules.iter().enumerate() {
            let chi = self.spectral_character(v);
            match by_char.iter_mut().find(|(c, _)| *c == chi) {
                Some((_, idx)) => idx.push(i),
                None => by_char.push((chi, vec![i])),
            }
        }
        by_char
    }

    /// `dim Hom_g(g ⊗ V(λ), V(μ))`.
    pub fn hom_adjoint_mult(&self, lam: &Weight, mu: &Weight) -> Result<u64> {
        let rs = self.ring.root_system();
        rs.check_dominant(mu)?;
        let d = self.ring.tensor_with_irreducible(self.ring.adjoint_character(), lam)?;
        Ok(d.get(mu))
    }

    /// `dim Ext¹(V, V')`: the two modules may differ at one point `a` only,
    /// and each such point contributes `dim Hom_g(g ⊗ V(λ_a), V(μ_a))`.
    pub fn ext1_dim(&self, v: &LoopIrrep, w: &LoopIrrep) -> Result<u64> {
        let rank = self.ring.root_system().rank();
        let zero = Weight::zero(rank);
        let points: BTreeSet<&Point> = v.support.keys().chain(w.support.keys()).collect();
        let differing: Vec<&Point> =
            points.iter().copied().filter(|a| v.support.get(*a) != w.support.get(*a)).collect();
        let at = |m: &LoopIrrep, a: &Point| m.support.get(a).cloned().unwrap_or_else(|| zero.clone());
        match differing.len() {
            0 => points.iter().try_fold(0, |acc, a| Ok(acc + self.hom_adjoint_mult(&at(v, a), &at(w, a))?)),
            1 => self.hom_adjoint_mult(&at(v, differing[0]), &at(w, differing[0])),
            _ => Ok(0),
        }
    }

    /// Same-point tensor product `ev_a V(λ) ⊗ ev_a V(μ)`; it splits exactly
    /// as the `g`-module tensor product does.
    pub fn tensor_at_point(&self, lam: &Weight, mu: &Weight) -> Result<DominantDecomposition> {
        self.ring.tensor_decompose(lam, mu)
    }

    /// `dim Hom(W(λ), V)` for the global Weyl module: one when the weights of
    /// `V` add up to `λ`, zero otherwise.
    pub fn weyl_quotient_count(&self, lam: &Weight, v: &LoopIrrep) -> Result<u64> {
        let rs = self.ring.root_system();
        rs.check_dominant(lam)?;
        Ok(u64::from(v.total_weight(rs.rank()) == *lam))
    }
}

/// The largest `r ≥ 1` with `Σ_s λ_s a_s^j = 0` for every `1 ≤ j < r`.
pub fn loop_splitting_order(parts: &[(Weight, Point)]) -> Result<usize> {
    let mut seen = BTreeSet::new();
    for (_, a) in parts {
        if !seen.insert(a) {
            return Err(Error::RepeatedPoint(a.to_string()));
        }
    }
    for (w, _) in parts {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
    }
    let live: Vec<&(Weight, Point)> = parts.iter().filter(|(w, _)| !w.is_zero()).collect();
    if live.is_empty() {
        return Err(Error::UnboundedSplitting);
    }
    let rank = live[0].0.len();
    let mut powers: Vec<BigRational> = live.iter().map(|_| BigRational::one()).collect();
    // a nonzero Vandermonde minor forces a nonvanishing sum by j = #live
    for j in 1..=live.len() {
        for (p, (_, a)) in powers.iter_mut().zip(&live) {
            *p *= a.value();
        }
        let vanishes = (0..rank).all(|i| {
            let s: BigRational =
                live.iter().zip(&powers).map(|((w, _), p)| p * BigRational::from_integer(w[i].into())).sum();
            s.is_zero()
        });
        if !vanishes {
            return Ok(j);
        }
    }
    Err(Error::Internal("power sums vanished past the Vandermonde bound".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Limits;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn w(v: &[i64]) -> Weight {
        Weight::from(v)
    }

    fn ev(r: &RootSystem, a: i64, lam: &[i64]) -> LoopIrrep {
        LoopIrrep::evaluation(r, Point::from(a), w(lam)).unwrap()
    }

    #[test]
    fn points_parse() {
        assert_eq!("3/6".parse::<Point>().unwrap().to_string(), "1/2");
        assert_eq!("-4".parse::<Point>().unwrap().to_string(), "-4");
        assert!(matches!("0".parse::<Point>(), Err(Error::ZeroPoint)));
        assert!("1/0".parse::<Point>().is_err());
        assert!("x".parse::<Point>().is_err());
    }

    #[test]
    fn spectral_characters_in_a1() {
        let r = rs("A1");
        let ring = CharRing::new(&r, Limits::default());
        let cat = LoopCategory::new(&ring);
        assert!(cat.spectral_character(&ev(&r, 3, &[2])).is_empty());
        let chi = cat.spectral_character(&ev(&r, 3, &[1]));
        assert_eq!(chi.len(), 1);
        assert_eq!(chi[&Point::from(3)], FundamentalGroupElement(vec![1]));
    }

    #[test]
    fn e8_is_one_block() {
        let r = rs("E8");
        let ring = CharRing::new(&r, Limits::default());
        let cat = LoopCategory::new(&ring);
        assert_eq!(cat.fundamental_group().order(), 1);
        assert!(cat.spectral_character(&ev(&r, 2, &[1, 0, 0, 0, 0, 0, 0, 3])).is_empty());
    }

    #[test]
    fn blocks_in_a1() {
        let r = rs("A1");
        let ring = CharRing::new(&r, Limits::default());
        let cat = LoopCategory::new(&ring);
        let v = ev(&r, 1, &[1]);
        assert!(cat.same_block(&v, &v));
        assert!(cat.same_block(&ev(&r, 1, &[2]), &ev(&r, 5, &[4])));
        assert!(!cat.same_block(&ev(&r, 1, &[1]), &ev(&r, 2, &[1])));
        let mods = vec![ev(&r, 1, &[2]), ev(&r, 1, &[1]), LoopIrrep::trivial(), ev(&r, 1, &[3])];
        let blocks = cat.blocks(&mods);
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].1, vec![0, 2]);
        assert_eq!(blocks[1].1, vec![1, 3]);
    }

    #[test]
    fn hom_adjoint_examples() {
        let r = rs("A1");
        let ring = CharRing::new(&r, Limits::default());
        let cat = LoopCategory::new(&ring);
        assert_eq!(cat.hom_adjoint_mult(&w(&[0]), &w(&[2])).unwrap(), 1);
        assert_eq!(cat.hom_adjoint_mult(&w(&[0]), &w(&[0])).unwrap(), 0);
        assert_eq!(cat.hom_adjoint_mult(&w(&[2]), &w(&[2])).unwrap(), 1);
        assert_eq!(cat.hom_adjoint_mult(&w(&[1]), &w(&[1])).unwrap(), 1);
        assert_eq!(cat.hom_adjoint_mult(&w(&[1]), &w(&[5])).unwrap(), 0);
    }

    #[test]
    fn ext1_examples() {
        let r = rs("A1");
        let ring = CharRing::new(&r, Limits::default());
        let cat = LoopCategory::new(&ring);
        assert_eq!(cat.ext1_dim(&LoopIrrep::trivial(), &ev(&r, 1, &[2])).unwrap(), 1);
        assert_eq!(cat.ext1_dim(&ev(&r, 1, &[1]), &ev(&r, 2, &[1])).unwrap(), 0);
        assert_eq!(cat.ext1_dim(&ev(&r, 1, &[2]), &ev(&r, 1, &[2])).unwrap(), 1);
        assert_eq!(cat.ext1_dim(&LoopIrrep::trivial(), &LoopIrrep::trivial()).unwrap(), 0);
        // differing only at the point 2; the common factor at 1 is carried along
        let v = LoopIrrep::new(&r, [(Point::from(1), w(&[1])), (Point::from(2), w(&[1]))]).unwrap();
        let u = LoopIrrep::new(&r, [(Point::from(1), w(&[1])), (Point::from(2), w(&[3]))]).unwrap();
        assert_eq!(cat.ext1_dim(&v, &u).unwrap(), 1);
        // equal two-point modules pick up a contribution from each point
        assert_eq!(cat.ext1_dim(&v, &v).unwrap(), 2);
    }

    #[test]
    fn same_point_tensor() {
        let r = rs("A1");
        let ring = CharRing::new(&r, Limits::default());
        let cat = LoopCategory::new(&ring);
        assert_eq!(cat.tensor_at_point(&w(&[1]), &w(&[1])).unwrap(), [(w(&[2]), 1), (w(&[0]), 1)].into());
        assert_eq!(cat.tensor_at_point(&w(&[3]), &w(&[0])).unwrap(), [(w(&[3]), 1)].into());
    }

    #[test]
    fn splitting_orders() {
        let lam = w(&[1, 0]);
        assert_eq!(loop_splitting_order(&[(lam.clone(), Point::from(3))]).unwrap(), 1);
        assert_eq!(loop_splitting_order(&[(lam.clone(), Point::from(3)), (lam.clone(), Point::from(-3))]).unwrap(), 2);
        assert_eq!(loop_splitting_order(&[(lam.clone(), Point::from(-2)), (&lam * 2, Point::from(1))]).unwrap(), 2);
        assert!(matches!(
            loop_splitting_order(&[(lam.clone(), Point::from(1)), (lam.clone(), Point::from(1))]),
            Err(Error::RepeatedPoint(_))
        ));
        assert!(matches!(loop_splitting_order(&[(w(&[0, 0]), Point::from(1))]), Err(Error::UnboundedSplitting)));
        // zero weights do not count as parts
        assert_eq!(loop_splitting_order(&[(lam.clone(), Point::from(2)), (w(&[0, 0]), Point::from(5))]).unwrap(), 1);
    }

    #[test]
    fn splitting_order_three_cube_roots_style() {
        // a, b, c with a+b+c = 0 and a²+b²+c² = 0 is impossible over ℚ, but
        // weights can cancel: λ at 1, λ at -1, and 2λ... check j=1 only
        let lam = w(&[1]);
        let parts = [(lam.clone(), Point::from(1)), (lam.clone(), Point::from(2)), (&lam * 3, Point::from(-1))];
        assert_eq!(loop_splitting_order(&parts).unwrap(), 2);
    }

    #[test]
    fn weyl_quotients() {
        let r = rs("A1");
        let ring = CharRing::new(&r, Limits::default());
        let cat = LoopCategory::new(&ring);
        assert_eq!(cat.weyl_quotient_count(&w(&[3]), &ev(&r, 4, &[3])).unwrap(), 1);
        let v = LoopIrrep::new(&r, [(Point::from(1), w(&[1])), (Point::from(2), w(&[1]))]).unwrap();
        assert_eq!(cat.weyl_quotient_count(&w(&[2]), &v).unwrap(), 1);
        assert_eq!(cat.weyl_quotient_count(&w(&[1]), &ev(&r, 1, &[2])).unwrap(), 0);
    }

    #[test]
    fn json_round_trip() {
        let r = rs("A2");
        let v = LoopIrrep::new(&r, [(Point::from_ratio(-1, 2).unwrap(), w(&[1, 0])), (Point::from(3), w(&[0, 2]))]).unwrap();
        let text = serde_json::to_string(&v.parts()).unwrap();
        assert_eq!(text, r#"[{"point":"-1/2","weight":[1,0]},{"point":"3","weight":[0,2]}]"#);
        let back: Vec<LoopPart> = serde_json::from_str(&text).unwrap();
        assert_eq!(LoopIrrep::from_parts(&r, back).unwrap(), v);
        let ints: Vec<LoopPart> = serde_json::from_str(r#"[{"point":2,"weight":[1,1]}]"#).unwrap();
        assert_eq!(ints[0].point, Point::from(2));
    }

    #[test]
    fn loop_irrep_validation() {
        let r = rs("A2");
        assert!(matches!(
            LoopIrrep::new(&r, [(Point::from(1), w(&[1, 0])), (Point::from(1), w(&[0, 1]))]),
            Err(Error::RepeatedPoint(_))
        ));
        assert!(matches!(LoopIrrep::evaluation(&r, Point::from(1), w(&[-1, 0])), Err(Error::NotDominant(_))));
        assert!(matches!(LoopIrrep::evaluation(&r, Point::from(1), w(&[1])), Err(Error::RankMismatch { .. })));
        assert_eq!(LoopIrrep::evaluation(&r, Point::from(1), w(&[0, 0])).unwrap(), LoopIrrep::trivial());
    }
}
