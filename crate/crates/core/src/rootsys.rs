//! Finite root systems of types A–G.
//!
//! Everything here is exact. Weights are integer vectors in the basis of
//! fundamental weights, roots are integer (or, for [`RootVector`], rational)
//! vectors in the basis of simple roots. Simple roots are numbered as in
//! Bourbaki, except that in type G2 the first simple root is the long one.
//!
//! The invariant form is normalized so that long roots have squared length 2.
//! The Cartan matrix is stored row-wise as `cartan[i][j] = α_i(h_j) =
//! 2(α_i, α_j)/(α_j, α_j)`, so row `i` is `α_i` written in fundamental
//! weights.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::linalg;

pub(crate) type Coords = SmallVec<[i64; 8]>;

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(Coords);

impl Weight {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Weight(coords.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(smallvec::smallvec![0; rank])
    }

    /// The fundamental weight `ω_i` (zero based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Membership in P⁺.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Dominant with every coordinate strictly positive.
    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight::new(v)
    }
}

impl From<&[i64]> for Weight {
    fn from(v: &[i64]) -> Self {
        Weight::new(v.iter().copied())
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        debug_assert_eq!(self.len(), rhs.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        debug_assert_eq!(self.len(), rhs.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        let mut w = self.clone();
        w += rhs;
        w
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        let mut w = self.clone();
        w -= rhs;
        w
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self += &rhs;
        self
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        self -= &rhs;
        self
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<i64>::deserialize(d).map(Weight::from)
    }
}

/// A rational vector in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootVector(pub Vec<Rational64>);

impl RootVector {
    pub fn from_ints(v: &[i64]) -> Self {
        RootVector(v.iter().map(|&x| Rational64::from(x)).collect())
    }

    /// Integer coordinates, if all coordinates are integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InadmissibleType { family: family.letter(), rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// Dynkin data: squared root lengths (long = 2) and bonds `(i, j, m)`.
fn dynkin(ty: CartanType) -> (Vec<Rational64>, Vec<(usize, usize, i64)>) {
    let n = ty.rank;
    let two = Rational64::from(2);
    let chain = |n: usize, m_last: i64| -> Vec<(usize, usize, i64)> {
        (0..n - 1).map(|i| (i, i + 1, if i + 2 == n { m_last } else { 1 })).collect()
    };
    match ty.family {
        Family::A => (vec![two; n], chain(n, 1)),
        Family::B => {
            let mut len = vec![two; n];
            len[n - 1] = Rational64::one();
            (len, chain(n, 2))
        }
        Family::C => {
            let mut len = vec![Rational64::one(); n];
            len[n - 1] = two;
            (len, chain(n, 2))
        }
        Family::D => {
            let mut bonds = chain(n - 1, 1);
            bonds.push((n - 3, n - 1, 1));
            (vec![two; n], bonds)
        }
        Family::E => {
            // Bourbaki: 1-3-4-5-..., with 2 attached to 4
            let mut bonds = vec![(0, 2, 1), (1, 3, 1)];
            bonds.extend((2..n - 1).map(|i| (i, i + 1, 1)));
            (vec![two; n], bonds)
        }
        Family::F => (
            vec![two, two, Rational64::one(), Rational64::one()],
            vec![(0, 1, 1), (1, 2, 2), (2, 3, 1)],
        ),
        Family::G => (vec![two, Rational64::new(2, 3)], vec![(0, 1, 3)]),
    }
}

/// Immutable tables for one simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<Rational64>>,
    positive_roots: Vec<Vec<i64>>,
    positive_root_weights: Vec<Weight>,
    root_index: HashMap<Weight, isize>,
    highest_root: usize,
    rho: Weight,
    fund_to_root: Vec<Vec<Rational64>>,
    // (ω_i, ω_j) and (α_i, α_i)/2, both multiplied by `scale`
    scale: i64,
    gram_scaled: Vec<Vec<i64>>,
    half_len_scaled: Vec<i64>,
}

impl RootSystem {
    pub fn build(ty: CartanType) -> Self {
        let n = ty.rank;
        let (lengths, bonds) = dynkin(ty);
        let mut form = vec![vec![Rational64::zero(); n]; n];
        for i in 0..n {
            form[i][i] = lengths[i];
        }
        for &(i, j, m) in &bonds {
            let v = -Rational64::from(m) * lengths[i].min(lengths[j]) / 2;
            form[i][j] = v;
            form[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = form[i][j] * 2 / form[j][j];
                        debug_assert!(a.is_integer());
                        a.to_integer()
                    })
                    .collect()
            })
            .collect();

        let positive_roots = reflection_closure(&cartan);
        let simple_weights: Vec<Weight> = cartan.iter().map(|r| Weight::new(r.iter().copied())).collect();
        let to_weight = |b: &[i64]| -> Weight {
            let mut w = Weight::zero(n);
            for (i, &c) in b.iter().enumerate() {
                if c != 0 {
                    w += &(&simple_weights[i] * c);
                }
            }
            w
        };
        let positive_root_weights: Vec<Weight> = positive_roots.iter().map(|b| to_weight(b)).collect();
        let mut root_index = HashMap::new();
        for (k, w) in positive_root_weights.iter().enumerate() {
            root_index.insert(w.clone(), k as isize + 1);
            root_index.insert(-w, -(k as isize) - 1);
        }
        let highest_root = (0..positive_roots.len())
            .max_by_key(|&k| positive_roots[k].iter().sum::<i64>())
            .expect("nonempty root system");

        let cartan_rat: Vec<Vec<Rational64>> =
            cartan.iter().map(|r| r.iter().map(|&x| Rational64::from(x)).collect()).collect();
        let fund_to_root = linalg::invert(&cartan_rat).expect("Cartan matrix is invertible");

        let half_len: Vec<Rational64> = (0..n).map(|i| form[i][i] / 2).collect();
        let gram: Vec<Vec<Rational64>> =
            (0..n).map(|i| (0..n).map(|k| fund_to_root[k][i] * half_len[i]).collect()).collect();
        let scale = gram
            .iter()
            .flatten()
            .chain(half_len.iter())
            .fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
        let to_scaled = |x: &Rational64| (x * scale).to_integer();
        let gram_scaled = gram.iter().map(|r| r.iter().map(to_scaled).collect()).collect();
        let half_len_scaled = half_len.iter().map(to_scaled).collect();

        RootSystem {
            ty,
            rho: Weight::new(std::iter::repeat(1).take(n)),
            cartan,
            form,
            positive_roots,
            positive_root_weights,
            root_index,
            highest_root,
            fund_to_root,
            scale,
            gram_scaled,
            half_len_scaled,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(α_i, α_j)` with long roots of squared length 2.
    pub fn form_matrix(&self) -> &[Vec<Rational64>] {
        &self.form
    }

    /// Row `k` expresses `ω_k` in simple roots.
    pub fn fund_to_root(&self) -> &[Vec<Rational64>] {
        &self.fund_to_root
    }

    /// Positive roots in simple-root coordinates, ordered by height; within a
    /// height, larger leading coordinates come first.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates, same order as
    /// [`positive_roots`](Self::positive_roots).
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_root_weights
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.positive_roots[self.highest_root]
    }

    pub fn highest_root_weight(&self) -> &Weight {
        &self.positive_root_weights[self.highest_root]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// `dim g = rank + 2|Φ⁺|`.
    pub fn dim_algebra(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight::new(self.cartan[i].iter().copied())
    }

    pub fn root_to_weight(&self, b: &[i64]) -> Weight {
        let n = self.rank();
        let mut w = Weight::zero(n);
        for (i, &c) in b.iter().enumerate() {
            if c != 0 {
                for j in 0..n {
                    w.0[j] += c * self.cartan[i][j];
                }
            }
        }
        w
    }

    pub fn weight_to_root(&self, w: &Weight) -> RootVector {
        let n = self.rank();
        RootVector(
            (0..n)
                .map(|j| (0..n).map(|k| self.fund_to_root[k][j] * w.0[k]).sum())
                .collect(),
        )
    }

    /// Integer simple-root coordinates of `w`, if `w ∈ Q`.
    pub fn root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        self.weight_to_root(w).to_ints()
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank(), got: w.clone() })
        }
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if w.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(w.clone()))
        }
    }

    pub fn inner_product(&self, x: &RootVector, y: &RootVector) -> Rational64 {
        let n = self.rank();
        let mut acc = Rational64::zero();
        for i in 0..n {
            if x.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += x.0[i] * self.form[i][j] * y.0[j];
            }
        }
        acc
    }

    /// `(λ, μ)` for weights in fundamental coordinates.
    pub fn weight_inner(&self, a: &Weight, b: &Weight) -> Rational64 {
        Rational64::new(self.weight_inner_scaled(a, b), self.scale)
    }

    pub(crate) fn weight_inner_scaled(&self, a: &Weight, b: &Weight) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += a.0[i] * self.gram_scaled[i][j] * b.0[j];
            }
        }
        acc
    }

    /// `scale · (ν, β)` for a weight `ν` and a root `β` in simple-root
    /// coordinates, using `(ω_i, α_j) = δ_ij (α_j, α_j)/2`.
    pub(crate) fn weight_root_scaled(&self, nu: &Weight, beta: &[i64]) -> i64 {
        beta.iter().zip(&self.half_len_scaled).zip(nu.coords()).map(|((c, d), x)| c * d * x).sum()
    }

    /// Simple reflection `s_i(λ) = λ − λ(h_i) α_i`.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let mut out = w.clone();
        self.reflect_in_place(&mut out, i);
        out
    }

    fn reflect_in_place(&self, w: &mut Weight, i: usize) {
        let c = w.0[i];
        if c != 0 {
            for (x, a) in w.0.iter_mut().zip(&self.cartan[i]) {
                *x -= c * a;
            }
        }
    }

    /// Straighten `w` into the dominant chamber, counting the reflections.
    pub fn dominant_representative(&self, w: &Weight) -> (Weight, usize) {
        let mut cur = w.clone();
        let mut length = 0;
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            self.reflect_in_place(&mut cur, i);
            length += 1;
        }
        (cur, length)
    }

    /// The full Weyl orbit of `w`, sorted. Errors with the partial orbit if
    /// more than `cap` elements are found.
    pub fn weyl_orbit(&self, w: &Weight, cap: usize) -> Result<Vec<Weight>> {
        let (dom, _) = self.dominant_representative(w);
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(dom.clone());
        queue.push_back(dom);
        while let Some(cur) = queue.pop_front() {
            for i in 0..self.rank() {
                // walking down from the dominant element reaches every
                // orbit element through positive coordinates only
                if cur.0[i] > 0 {
                    let next = self.reflect(&cur, i);
                    if seen.insert(next.clone()) {
                        if seen.len() > cap {
                            let mut partial: Vec<Weight> = seen.into_iter().collect();
                            partial.sort();
                            return Err(Error::OrbitCap { cap, partial });
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// The orbit of a regular dominant weight with the sign `(−1)^ℓ(w)` of
    /// each element; this is one entry per Weyl group element.
    pub fn signed_regular_orbit(&self, nu: &Weight, cap: u64) -> Result<Vec<(Weight, i8)>> {
        debug_assert!(nu.is_regular_dominant());
        let mut seen: HashMap<Weight, i8> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(nu.clone(), 1);
        queue.push_back(nu.clone());
        while let Some(cur) = queue.pop_front() {
            let sign = seen[&cur];
            for i in 0..self.rank() {
                if cur.0[i] > 0 {
                    let next = self.reflect(&cur, i);
                    if !seen.contains_key(&next) {
                        seen.insert(next.clone(), -sign);
                        if seen.len() as u64 > cap {
                            return Err(Error::WeylOrderCap { order: format!(">{cap}"), cap });
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut out: Vec<(Weight, i8)> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// `|W|`, counted as the orbit size of ρ.
    pub fn weyl_group_order(&self, cap: u64) -> Result<u64> {
        Ok(self.signed_regular_orbit(&self.rho, cap)?.len() as u64)
    }

    /// `−w₀λ`, the highest weight of the dual of `V(λ)`.
    pub fn longest_element_dual(&self, lam: &Weight) -> Result<Weight> {
        self.check_dominant(lam)?;
        Ok(self.dominant_representative(&-lam).0)
    }

    /// `λ ≥ μ` in the dominance order (`λ − μ ∈ Q⁺`).
    pub fn dominates(&self, lam: &Weight, mu: &Weight) -> bool {
        match self.root_coords(&(lam - mu)) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.root_coords(w).is_some()
    }

    /// Is `w` a root (of either sign)?
    pub fn is_root(&self, w: &Weight) -> bool {
        self.root_index.contains_key(w)
    }

    /// Is `w` a positive root?
    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.root_index.get(w).is_some_and(|&k| k > 0)
    }

    /// All roots, positive first, in fundamental-weight coordinates.
    pub fn all_root_weights(&self) -> Vec<Weight> {
        let mut out = self.positive_root_weights.clone();
        out.extend(self.positive_root_weights.iter().map(|w| -w));
        out
    }
}

/// Positive roots generated from the simple roots by applying simple
/// reflections until nothing new appears.
fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    // β(h_i) = Σ_j β_j α_j(h_i)
    let pairing = |b: &[i64], i: usize| -> i64 { b.iter().enumerate().map(|(j, c)| c * cartan[j][i]).sum() };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let p = pairing(&b, i);
            if p == 0 {
                continue;
            }
            let mut r = b.clone();
            r[i] -= p;
            // s_i permutes Φ⁺ \ {α_i}; -α_i is the only negative image
            if r.iter().all(|&x| x >= 0) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then_with(|| b.cmp(a)));
    roots
}
