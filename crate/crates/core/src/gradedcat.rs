//! Graded modules for the current algebra `g[t] = g ⊗ ℂ[t]`.
//!
//! Simples are `V(λ, r)`: the `g`-module `V(λ)` placed in grade `r` with
//! `g ⊗ tℂ[t]` acting by zero. Everything here is numerical: multiplicities
//! of simples in graded projectives, Ext groups between simples, the partial
//! orders on `P⁺ × ℕ` and the Ext-quiver of an interval-closed subset.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::charring::{CharRing, DominantDecomposition, FormalCharacter};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// `V(λ, r)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedSimple {
    pub weight: Weight,
    pub grade: u32,
}

impl GradedSimple {
    pub fn new(weight: impl Into<Weight>, grade: u32) -> Self {
        GradedSimple { weight: weight.into(), grade }
    }
}

/// Higher grades first, then weights in coordinate order.
impl Ord for GradedSimple {
    fn cmp(&self, other: &Self) -> Ordering {
        other.grade.cmp(&self.grade).then_with(|| self.weight.cmp(&other.weight))
    }
}

impl PartialOrd for GradedSimple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GradedSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.weight, self.grade)
    }
}

impl fmt::Debug for GradedSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Φ⁺_ψ` together with `ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiOrder {
    psi: Weight,
    roots: Vec<Vec<i64>>,
    weights: Vec<Weight>,
}

impl PsiOrder {
    /// Positive roots `α` with `(ψ, α) ≥ (ψ, β)` for every root `β`.
    pub fn new(rs: &RootSystem, psi: &Weight) -> Result<Self> {
        rs.check_weight(psi)?;
        let pairings: Vec<i64> = rs.positive_roots().iter().map(|b| rs.weight_root_scaled(psi, b)).collect();
        // negative roots pair to the negatives, so the maximum over Φ is max |·|
        let best = pairings.iter().map(|p| p.abs()).max().unwrap_or(0);
        let mut roots = Vec::new();
        let mut weights = Vec::new();
        for (i, &p) in pairings.iter().enumerate() {
            if p == best {
                roots.push(rs.positive_roots()[i].clone());
                weights.push(rs.positive_root_weights()[i].clone());
            }
        }
        Ok(PsiOrder { psi: psi.clone(), roots, weights })
    }

    pub fn psi(&self) -> &Weight {
        &self.psi
    }

    /// `Φ⁺_ψ` in simple-root coordinates.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// `Φ⁺_ψ` in fundamental-weight coordinates.
    pub fn root_weights(&self) -> &[Weight] {
        &self.weights
    }

    /// All sums of exactly `t` elements of `Φ⁺_ψ`, for `t = 0..=depth`.
    fn sum_levels(&self, rank: usize, depth: u32, cap: usize) -> Result<Vec<HashSet<Weight>>> {
        let mut levels = vec![HashSet::from([Weight::zero(rank)])];
        let mut total = 1;
        for _ in 0..depth {
            let prev = levels.last().expect("nonempty");
            let next: HashSet<Weight> =
                prev.iter().flat_map(|s| self.weights.iter().map(move |a| s + a)).collect();
            total += next.len();
            if total > cap {
                return Err(Error::ReachCap { cap });
            }
            levels.push(next);
        }
        Ok(levels)
    }
}

/// The order a [`GammaSet`] is closed under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaOrder {
    /// `⪯`, generated by `(λ, r) ≺ (μ, r+1)` for `λ − μ ∈ Φ ∪ {0}`.
    Full,
    /// `≤_ψ`, generated by `λ − μ ∈ Φ⁺_ψ`.
    Psi(Weight),
}

/// A finite subset of `P⁺ × ℕ` tagged with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSet {
    pub elements: BTreeSet<GradedSimple>,
    pub order: GammaOrder,
}

impl GammaSet {
    pub fn new(elements: impl IntoIterator<Item = GradedSimple>, order: GammaOrder) -> Self {
        GammaSet { elements: elements.into_iter().collect(), order }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &GradedSimple) -> bool {
        self.elements.contains(x)
    }
}

/// An arrow `(μ, s) → (λ, s−1)`, one per dimension of
/// `Ext¹(V(λ, s−1), V(μ, s))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub source: GradedSimple,
    pub target: GradedSimple,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<GradedSimple>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    /// Graphviz source. Vertices are labelled `(λ, r)`, edges carry their
    /// multiplicity as an integer label.
    pub fn to_dot(&self) -> String {
        let index: HashMap<&GradedSimple, usize> = self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut out = String::from("digraph quiver {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{v}\"];");
        }
        for a in &self.arrows {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", index[&a.source], index[&a.target], a.multiplicity);
        }
        out.push_str("}\n");
        out
    }

    pub fn arrow_count(&self) -> u64 {
        self.arrows.iter().map(|a| a.multiplicity).sum()
    }

    /// Number of paths of the given length, arrows counted with
    /// multiplicity.
    pub fn path_count(&self, length: usize) -> u64 {
        let n = self.vertices.len();
        let index: HashMap<&GradedSimple, usize> = self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut ends = vec![1u64; n];
        for _ in 0..length {
            let mut next = vec![0u64; n];
            for a in &self.arrows {
                next[index[&a.source]] += a.multiplicity * ends[index[&a.target]];
            }
            ends = next;
        }
        ends.iter().sum()
    }
}

/// Numerical invariants of the graded category over one character ring.
pub struct GradedCategory<'r, 'a> {
    ring: &'r CharRing<'a>,
    uplus: RefCell<HashMap<usize, FormalCharacter>>,
    wedge: RefCell<HashMap<usize, FormalCharacter>>,
    adjoint_tensor: RefCell<HashMap<Weight, DominantDecomposition>>,
}

impl<'r, 'a> GradedCategory<'r, 'a> {
    pub fn new(ring: &'r CharRing<'a>) -> Self {
        GradedCategory {
            ring,
            uplus: RefCell::default(),
            wedge: RefCell::default(),
            adjoint_tensor: RefCell::default(),
        }
    }

    fn rs(&self) -> &'a RootSystem {
        self.ring.root_system()
    }

    /// Character of `U(g[t]₊)[k] ≅ ⊕_{Σ r m_r = k} ⊗_r S^{m_r}(g)`.
    pub fn u_plus_character(&self, k: usize) -> Result<FormalCharacter> {
        if let Some(ch) = self.uplus.borrow().get(&k) {
            return Ok(ch.clone());
        }
        let cap = self.ring.limits().max_uplus_degree;
        if k > cap {
            return Err(Error::DepthCap { depth: k, cap });
        }
        let d = self.rs().dim_algebra() as u64;
        let parts = partitions(k);
        let dim: BigUint = parts.iter().map(|p| multiplicities(p).iter().map(|&m| multichoose(d, m)).product::<BigUint>()).sum();
        if dim > BigUint::from(self.ring.limits().max_dim) {
            return Err(Error::DimensionCap { dim: dim.to_string(), cap: self.ring.limits().max_dim });
        }
        let sym = self.ring.sym_powers(k, self.ring.adjoint_character())?;
        let mut total = FormalCharacter::new();
        for p in &parts {
            let mut prod = FormalCharacter::trivial(self.rs().rank());
            for &m in &multiplicities(p) {
                if m > 0 {
                    prod = prod.mul(&sym[m]);
                }
            }
            total.add_assign(&prod);
        }
        self.uplus.borrow_mut().insert(k, total.clone());
        Ok(total)
    }

    /// `U(g[t]₊)[k]` as a `g`-module.
    pub fn u_plus_graded_char(&self, k: usize) -> Result<DominantDecomposition> {
        let ch = self.u_plus_character(k)?;
        self.ring.decompose_character(&ch)
    }

    /// `[P(λ, r) : V(μ, s)] = dim Hom_g(U(g[t]₊)[s−r] ⊗ V(λ), V(μ))`.
    pub fn projective_mult(&self, p: &GradedSimple, s: &GradedSimple) -> Result<u64> {
        self.rs().check_dominant(&p.weight)?;
        self.rs().check_dominant(&s.weight)?;
        if s.grade < p.grade {
            return Ok(0);
        }
        let ch = self.u_plus_character((s.grade - p.grade) as usize)?;
        Ok(self.ring.tensor_with_irreducible(&ch, &p.weight)?.get(&s.weight))
    }

    fn hom_adjoint(&self, lam: &Weight, mu: &Weight) -> Result<u64> {
        if let Some(d) = self.adjoint_tensor.borrow().get(lam) {
            return Ok(d.get(mu));
        }
        let d = self.ring.tensor_with_irreducible(self.ring.adjoint_character(), lam)?;
        let m = d.get(mu);
        self.adjoint_tensor.borrow_mut().insert(lam.clone(), d);
        Ok(m)
    }

    /// `dim Ext¹(V(λ, r), V(μ, s))`: zero unless `s = r + 1`, and then
    /// `dim Hom_g(g ⊗ V(λ), V(μ))`.
    pub fn ext1_graded(&self, a: &GradedSimple, b: &GradedSimple) -> Result<u64> {
        self.rs().check_dominant(&a.weight)?;
        self.rs().check_dominant(&b.weight)?;
        if b.grade != a.grade + 1 {
            return Ok(0);
        }
        self.hom_adjoint(&a.weight, &b.weight)
    }

    /// `dim Ext^j` in the truncation to grades `r..=s`: zero unless
    /// `j = s − r`, and then `dim Hom_g(⋀^j g ⊗ V(λ), V(μ))`.
    pub fn ext_j_truncated(&self, a: &GradedSimple, b: &GradedSimple, j: usize) -> Result<u64> {
        self.rs().check_dominant(&a.weight)?;
        self.rs().check_dominant(&b.weight)?;
        if b.grade < a.grade || (b.grade - a.grade) as usize != j || j > self.rs().dim_algebra() {
            return Ok(0);
        }
        let cached = self.wedge.borrow().get(&j).cloned();
        let wedge = match cached {
            Some(w) => w,
            None => {
                let w = self.ring.ext_power(j, self.ring.adjoint_character())?;
                self.wedge.borrow_mut().insert(j, w.clone());
                w
            }
        };
        Ok(self.ring.tensor_with_irreducible(&wedge, &a.weight)?.get(&b.weight))
    }

    /// `a ≺ b` in the full order: `b` one grade up and `a.λ − b.λ ∈ Φ ∪ {0}`.
    pub fn covers_full(&self, a: &GradedSimple, b: &GradedSimple) -> bool {
        if b.grade != a.grade + 1 {
            return false;
        }
        let diff = &a.weight - &b.weight;
        diff.is_zero() || self.rs().is_root(&diff)
    }

    pub fn phi_psi(&self, psi: &Weight) -> Result<PsiOrder> {
        PsiOrder::new(self.rs(), psi)
    }

    /// `a ≤_ψ b`: `a.λ − b.λ` is a sum of exactly `b.r − a.r` elements of
    /// `Φ⁺_ψ`.
    pub fn leq_psi(&self, psi: &Weight, a: &GradedSimple, b: &GradedSimple) -> Result<bool> {
        let order = self.phi_psi(psi)?;
        self.leq_in(&order, a, b)
    }

    fn leq_in(&self, order: &PsiOrder, a: &GradedSimple, b: &GradedSimple) -> Result<bool> {
        if b.grade < a.grade {
            return Ok(false);
        }
        let gap = b.grade - a.grade;
        let diff = &a.weight - &b.weight;
        if gap == 0 {
            return Ok(diff.is_zero());
        }
        if order.weights.is_empty() {
            return Ok(false);
        }
        let levels = order.sum_levels(self.rs().rank(), gap, self.ring.limits().max_reach)?;
        Ok(levels[gap as usize].contains(&diff))
    }

    /// Everything `≤_ψ top` with a dominant weight.
    pub fn lower_set_psi(&self, psi: &Weight, top: &GradedSimple) -> Result<GammaSet> {
        self.rs().check_dominant(&top.weight)?;
        let order = self.phi_psi(psi)?;
        let levels = order.sum_levels(self.rs().rank(), top.grade, self.ring.limits().max_reach)?;
        let mut elements = BTreeSet::new();
        for (t, level) in levels.iter().enumerate() {
            for s in level {
                let w = &top.weight + s;
                if w.is_dominant() {
                    elements.insert(GradedSimple { weight: w, grade: top.grade - t as u32 });
                }
            }
        }
        Ok(GammaSet { elements, order: GammaOrder::Psi(psi.clone()) })
    }

    /// Full-order neighbours one grade up (`up`) or down, dominant only.
    fn full_steps(&self, x: &GradedSimple, up: bool) -> Vec<GradedSimple> {
        let rs = self.rs();
        let mut out = Vec::new();
        if !up && x.grade == 0 {
            return out;
        }
        let grade = if up { x.grade + 1 } else { x.grade - 1 };
        let zero = Weight::zero(rs.rank());
        for beta in std::iter::once(&zero).chain(rs.positive_root_weights()) {
            for w in [&x.weight + beta, &x.weight - beta] {
                if w.is_dominant() {
                    out.push(GradedSimple { weight: w, grade });
                }
            }
            if beta.is_zero() {
                out.pop();
            }
        }
        out
    }

    /// Breadth-first closure of `start` in one direction, restricted to
    /// grades in `lo..=hi` and to `within` when given.
    fn full_reach(
        &self,
        start: &GradedSimple,
        up: bool,
        lo: u32,
        hi: u32,
        within: Option<&HashSet<GradedSimple>>,
    ) -> Result<HashSet<GradedSimple>> {
        let cap = self.ring.limits().max_reach;
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(x) = queue.pop_front() {
            if (up && x.grade >= hi) || (!up && x.grade <= lo) {
                continue;
            }
            for y in self.full_steps(&x, up) {
                if within.is_some_and(|s| !s.contains(&y)) || seen.contains(&y) {
                    continue;
                }
                seen.insert(y.clone());
                if seen.len() > cap {
                    return Err(Error::ReachCap { cap });
                }
                queue.push_back(y);
            }
        }
        Ok(seen)
    }

    /// Elements strictly between `x` and `z`; `None` when `x` is not below `z`.
    pub fn interval(&self, order: &GammaOrder, x: &GradedSimple, z: &GradedSimple) -> Result<Option<Vec<GradedSimple>>> {
        if z.grade <= x.grade {
            return Ok(None);
        }
        match order {
            GammaOrder::Full => {
                let up = self.full_reach(x, true, x.grade, z.grade, None)?;
                if !up.contains(z) {
                    return Ok(None);
                }
                let between = self.full_reach(z, false, x.grade, z.grade, Some(&up))?;
                let mut mid: Vec<GradedSimple> = between.into_iter().filter(|y| y != x && y != z).collect();
                mid.sort();
                Ok(Some(mid))
            }
            GammaOrder::Psi(psi) => {
                let ord = self.phi_psi(psi)?;
                if !self.leq_in(&ord, x, z)? {
                    return Ok(None);
                }
                let gap = z.grade - x.grade;
                let levels = ord.sum_levels(self.rs().rank(), gap, self.ring.limits().max_reach)?;
                let mut mid = Vec::new();
                for t in 1..gap {
                    for s in &levels[t as usize] {
                        let y = GradedSimple { weight: &z.weight + s, grade: z.grade - t };
                        // x.λ − y.λ must use the remaining gap − t steps
                        if y.weight.is_dominant() && levels[(gap - t) as usize].contains(&(&x.weight - &y.weight)) {
                            mid.push(y);
                        }
                    }
                }
                mid.sort();
                Ok(Some(mid))
            }
        }
    }

    /// Whether every element between two members of `g` is in `g`.
    pub fn interval_closed_check(&self, g: &GammaSet) -> Result<bool> {
        Ok(self.interval_violation(g)?.is_none())
    }

    /// A witness `(x, y, z)` with `x < y < z`, `x, z ∈ g` and `y ∉ g`.
    pub fn interval_violation(&self, g: &GammaSet) -> Result<Option<(GradedSimple, GradedSimple, GradedSimple)>> {
        for x in &g.elements {
            self.rs().check_dominant(&x.weight)?;
        }
        for x in &g.elements {
            for z in &g.elements {
                if z.grade <= x.grade + 1 {
                    continue;
                }
                if let Some(mid) = self.interval(&g.order, x, z)? {
                    if let Some(y) = mid.into_iter().find(|y| !g.contains(y)) {
                        return Ok(Some((x.clone(), y, z.clone())));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Ext-quiver of `𝒢[Γ]`: an arrow `(μ, s) → (λ, s−1)` of multiplicity
    /// `dim Ext¹(V(λ, s−1), V(μ, s))` for every such pair in `Γ`.
    pub fn build_quiver(&self, g: &GammaSet) -> Result<Quiver> {
        if let Some((x, y, z)) = self.interval_violation(g)? {
            return Err(Error::NotIntervalClosed(format!("{y} lies between {x} and {z}")));
        }
        let vertices: Vec<GradedSimple> = g.elements.iter().cloned().collect();
        let mut by_grade: BTreeMap<u32, Vec<&GradedSimple>> = BTreeMap::new();
        for v in &vertices {
            by_grade.entry(v.grade).or_default().push(v);
        }
        let mut arrows = Vec::new();
        for source in &vertices {
            if source.grade == 0 {
                continue;
            }
            for target in by_grade.get(&(source.grade - 1)).into_iter().flatten() {
                let m = self.ext1_graded(target, source)?;
                if m > 0 {
                    arrows.push(Arrow { source: source.clone(), target: (*target).clone(), multiplicity: m });
                }
            }
        }
        Ok(Quiver { vertices, arrows })
    }
}

/// Partitions of `k` as weakly decreasing part lists.
fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// `m_r` = number of parts equal to `r`, indexed from 1 (slot 0 unused).
fn multiplicities(p: &[usize]) -> Vec<usize> {
    let mut m = vec![0; p.first().copied().unwrap_or(0) + 1];
    for &x in p {
        m[x] += 1;
    }
    m.remove(0);
    m
}

/// `dim S^m(ℂ^d) = C(d + m − 1, m)`.
fn multichoose(d: u64, m: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..m as u64 {
        acc = acc * BigUint::from(d + i) / BigUint::from(i + 1);
    }
    acc
}

/// Dimension of `U(g[t]₊)[k]` as a number, for callers that want to size a
/// computation before running it.
pub fn u_plus_dimension(dim_g: u64, k: usize) -> u64 {
    partitions(k)
        .iter()
        .map(|p| multiplicities(p).iter().map(|&m| multichoose(dim_g, m)).product::<BigUint>())
        .sum::<BigUint>()
        .to_u64()
        .unwrap_or(u64::MAX)
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

    fn gs(v: &[i64], r: u32) -> GradedSimple {
        GradedSimple::new(w(v), r)
    }

    fn d6_gamma() -> Vec<GradedSimple> {
        vec![
            gs(&[0, 0, 0, 2, 0, 0], 0),
            gs(&[0, 1, 0, 1, 0, 0], 1),
            gs(&[0, 2, 0, 0, 0, 0], 2),
            gs(&[0, 0, 0, 1, 0, 0], 2),
            gs(&[1, 0, 1, 0, 0, 0], 2),
            gs(&[0, 1, 0, 0, 0, 0], 3),
            gs(&[0, 0, 0, 0, 0, 0], 4),
        ]
    }

    #[test]
    fn partition_helpers() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(multiplicities(&[2, 1, 1]), vec![2, 1]);
        assert_eq!(multichoose(3, 2), BigUint::from(6u32));
        // sl2: dims of U(g[t]_+)[k] are 3, 9, 22
        assert_eq!(u_plus_dimension(3, 1), 3);
        assert_eq!(u_plus_dimension(3, 2), 6 + 3);
        assert_eq!(u_plus_dimension(3, 3), 10 + 9 + 3);
    }

    #[test]
    fn u_plus_low_degrees() {
        let r = rs("A1");
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        assert_eq!(cat.u_plus_graded_char(0).unwrap(), [(w(&[0]), 1)].into());
        assert_eq!(cat.u_plus_graded_char(1).unwrap(), [(w(&[2]), 1)].into());
        assert_eq!(cat.u_plus_graded_char(2).unwrap(), [(w(&[4]), 1), (w(&[2]), 1), (w(&[0]), 1)].into());
        assert!(matches!(cat.u_plus_graded_char(7), Err(Error::DepthCap { .. })));
    }

    #[test]
    fn projective_examples() {
        let r = rs("B2");
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        let theta = r.highest_root_weight().clone();
        assert_eq!(cat.projective_mult(&gs(&[1, 1], 2), &gs(&[1, 1], 2)).unwrap(), 1);
        assert_eq!(cat.projective_mult(&gs(&[0, 0], 0), &GradedSimple::new(theta, 1)).unwrap(), 1);
        assert_eq!(cat.projective_mult(&gs(&[0, 0], 3), &gs(&[0, 0], 1)).unwrap(), 0);
    }

    #[test]
    fn ext1_examples() {
        let r = rs("D6");
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        assert_eq!(cat.ext1_graded(&gs(&[0, 1, 0, 0, 0, 0], 3), &gs(&[0; 6], 4)).unwrap(), 1);
        assert_eq!(cat.ext1_graded(&gs(&[0; 6], 3), &gs(&[0, 1, 0, 0, 0, 0], 4)).unwrap(), 1);
        assert_eq!(cat.ext1_graded(&gs(&[0; 6], 3), &gs(&[0, 1, 0, 0, 0, 0], 3)).unwrap(), 0);
    }

    #[test]
    fn ext_j_examples() {
        let r = rs("A1");
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        assert_eq!(cat.ext_j_truncated(&gs(&[3], 1), &gs(&[3], 1), 0).unwrap(), 1);
        assert_eq!(cat.ext_j_truncated(&gs(&[0], 0), &gs(&[2], 2), 2).unwrap(), 1);
        assert_eq!(cat.ext_j_truncated(&gs(&[0], 0), &gs(&[0], 3), 3).unwrap(), 1);
        assert_eq!(cat.ext_j_truncated(&gs(&[0], 0), &gs(&[0], 4), 4).unwrap(), 0);
        assert_eq!(cat.ext_j_truncated(&gs(&[0], 0), &gs(&[2], 2), 1).unwrap(), 0);
        assert_eq!(
            cat.ext_j_truncated(&gs(&[1], 0), &gs(&[3], 1), 1).unwrap(),
            cat.ext1_graded(&gs(&[1], 0), &gs(&[3], 1)).unwrap()
        );
    }

    #[test]
    fn full_covers() {
        let r = rs("A2");
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        assert!(cat.covers_full(&gs(&[1, 0], 0), &gs(&[1, 0], 1)));
        assert!(cat.covers_full(&gs(&[0, 0], 2), &gs(&[1, 1], 3)));
        assert!(!cat.covers_full(&gs(&[0, 0], 2), &gs(&[1, 1], 4)));
        assert!(!cat.covers_full(&gs(&[3, 0], 2), &gs(&[0, 0], 3)));
    }

    #[test]
    fn phi_psi_cases() {
        let d6 = rs("D6");
        let p = PsiOrder::new(&d6, &Weight::fundamental(6, 1)).unwrap();
        // θ is the only root with α₂-coefficient 2
        assert_eq!(p.roots(), &[d6.highest_root().to_vec()]);

        let c3 = rs("C3");
        let p = PsiOrder::new(&c3, &Weight::fundamental(3, 1)).unwrap();
        let got: BTreeSet<Vec<i64>> = p.roots().iter().cloned().collect();
        assert_eq!(got, BTreeSet::from([vec![2, 2, 1], vec![1, 2, 1], vec![0, 2, 1]]));

        let g2 = rs("G2");
        let p = PsiOrder::new(&g2, &w(&[1, -1])).unwrap();
        let got: BTreeSet<Vec<i64>> = p.roots().iter().cloned().collect();
        assert_eq!(got, BTreeSet::from([vec![1, 0], vec![2, 3]]));

        // zero pairs equally with everything
        assert_eq!(PsiOrder::new(&g2, &w(&[0, 0])).unwrap().roots().len(), 6);
    }

    #[test]
    fn leq_psi_examples() {
        let r = rs("D6");
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        let psi = Weight::fundamental(6, 1);
        let a = gs(&[0, 1, 0, 0, 0, 0], 3);
        assert!(cat.leq_psi(&psi, &a, &a).unwrap());
        assert!(cat.leq_psi(&psi, &a, &gs(&[0; 6], 4)).unwrap());
        assert!(!cat.leq_psi(&psi, &gs(&[0; 6], 4), &a).unwrap());
        assert!(cat.leq_psi(&psi, &gs(&[0, 2, 0, 0, 0, 0], 2), &gs(&[0; 6], 4)).unwrap());
    }

    #[test]
    fn lower_sets() {
        let r = rs("A1");
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        let g = cat.lower_set_psi(&w(&[1]), &gs(&[0], 1)).unwrap();
        assert_eq!(g.elements, BTreeSet::from([gs(&[0], 1), gs(&[2], 0)]));
        let g = cat.lower_set_psi(&w(&[1]), &gs(&[3], 0)).unwrap();
        assert_eq!(g.elements, BTreeSet::from([gs(&[3], 0)]));
        // antidominant ψ picks no positive roots
        let g = cat.lower_set_psi(&w(&[-1]), &gs(&[0], 2)).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn lower_set_matches_pairwise_order() {
        let r = rs("B2");
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        let psi = w(&[1, 0]);
        let top = gs(&[0, 1], 3);
        let g = cat.lower_set_psi(&psi, &top).unwrap();
        for x in &g.elements {
            assert!(cat.leq_psi(&psi, x, &top).unwrap());
        }
        assert!(cat.interval_closed_check(&g).unwrap());
    }

    #[test]
    fn d6_gamma_is_interval_closed_and_has_the_expected_quiver() {
        let r = rs("D6");
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        let g = GammaSet::new(d6_gamma(), GammaOrder::Full);
        assert!(cat.interval_closed_check(&g).unwrap());
        let q = cat.build_quiver(&g).unwrap();
        assert_eq!(q.vertices.len(), 7);
        assert_eq!(q.arrows.len(), 8);
        assert!(q.arrows.iter().all(|a| a.multiplicity == 1));
        assert_eq!(q.path_count(4), 3);

        let mut broken = d6_gamma();
        broken.retain(|x| *x != gs(&[0, 0, 0, 1, 0, 0], 2));
        let g = GammaSet::new(broken, GammaOrder::Full);
        assert!(!cat.interval_closed_check(&g).unwrap());
        assert!(matches!(cat.build_quiver(&g), Err(Error::NotIntervalClosed(_))));
    }

    #[test]
    fn small_quivers() {
        let r = rs("A2");
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        let q = cat.build_quiver(&GammaSet::new([gs(&[0, 0], 0)], GammaOrder::Full)).unwrap();
        assert!(q.arrows.is_empty());
        let q = cat.build_quiver(&GammaSet::new([gs(&[0, 0], 2), gs(&[1, 1], 3)], GammaOrder::Full)).unwrap();
        assert_eq!(q.arrows, vec![Arrow { source: gs(&[1, 1], 3), target: gs(&[0, 0], 2), multiplicity: 1 }]);
        let dot = q.to_dot();
        assert!(dot.contains("n0 -> n1 [label=\"1\"]"));
    }
}
