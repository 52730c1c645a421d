//! Finitely generated `A(G)`-modules and their completions at ideals of `A(G)`.
//!
//! A module is a free abelian group with a labeled basis and, for each
//! subgroup class `K`, the integer matrix by which `[G/K]` acts. Completion
//! is computed two ways:
//!
//! * [`quotient_tower`] builds `M/JⁿM` exactly and [`classify_completion`]
//!   reads the inverse limit off the last few levels;
//! * [`closed_form_completion`] counts basis labels by isotropy: trivial
//!   isotropy gives `Z`, a nontrivial `p`-group gives `Z_p` and anything
//!   else vanishes.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::burnside::{BurnsideElement, BurnsideIdeal, BurnsideRing};
use crate::error::{Error, Result};
use crate::lattice::{Family, FamilyKind};
use crate::primes;
use crate::stablemaps::PairClassification;
use crate::zlattice::{AbelianGroup, Lattice};

/// Default tower depth.
pub const DEFAULT_DEPTH: usize = 12;
/// Number of trailing steps the classifier inspects.
pub const STABLE_WINDOW: usize = 3;
const TRIAL_DIVISION_LIMIT: u64 = 1 << 16;

pub type Matrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisLabel {
    pub name: String,
    /// Subgroup class of `G` carrying the isotropy of this basis element.
    pub isotropy: Option<usize>,
    /// Pair class index, for bundle modules.
    pub pair: Option<usize>,
}

#[derive(Clone)]
pub struct GModule {
    ring: Arc<BurnsideRing>,
    labels: Vec<BasisLabel>,
    /// `actions[k][i][j]`: coefficient of basis `i` in `[G/K]·e_j`.
    actions: Vec<Matrix>,
}

impl fmt::Debug for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GModule")
            .field("group", &self.ring.group().name())
            .field("rank", &self.rank())
            .finish_non_exhaustive()
    }
}

impl GModule {
    /// Validates shapes, the unit action, commutativity and compatibility
    /// with Burnside products on every pair of basis ring elements.
    pub fn new(ring: Arc<BurnsideRing>, labels: Vec<BasisLabel>, actions: Vec<Matrix>) -> Result<Self> {
        let r = labels.len();
        let c = ring.rank();
        if actions.len() != c {
            return Err(Error::InvalidModule(format!("expected {c} action matrices, got {}", actions.len())));
        }
        if actions.iter().any(|a| a.len() != r || a.iter().any(|row| row.len() != r)) {
            return Err(Error::InvalidModule("action matrix has the wrong shape".into()));
        }
        if labels.iter().any(|l| l.isotropy.is_some_and(|i| i >= c)) {
            return Err(Error::InvalidModule("isotropy label out of range".into()));
        }
        let m = GModule { ring, labels, actions };
        if m.actions[c - 1] != identity(r) {
            return Err(Error::InvalidModule("[G/G] does not act as the identity".into()));
        }
        for h in 0..c {
            for k in h + 1..c {
                if mat_mul(&m.actions[h], &m.actions[k]) != mat_mul(&m.actions[k], &m.actions[h]) {
                    return Err(Error::InvalidModule(format!("actions of classes {h} and {k} do not commute")));
                }
            }
        }
        for h in 0..c {
            for k in h..c {
                if !m.compatible(h, k) {
                    return Err(Error::InvalidModule(format!(
                        "action of [G/H{h}]·[G/H{k}] differs from the product of the actions"
                    )));
                }
            }
        }
        Ok(m)
    }

    /// `action([G/H]·[G/K]) = action([G/H])·action([G/K])`.
    pub fn compatible(&self, h: usize, k: usize) -> bool {
        let product = self.ring.basis_product(h, k);
        let lhs = self.combination(product);
        lhs == mat_mul(&self.actions[h], &self.actions[k])
    }

    fn combination(&self, coefficients: &[i64]) -> Matrix {
        let r = self.rank();
        let mut out = vec![vec![0i64; r]; r];
        for (k, &a) in coefficients.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (o, row) in out.iter_mut().zip(&self.actions[k]) {
                for (x, y) in o.iter_mut().zip(row) {
                    *x += a * y;
                }
            }
        }
        out
    }

    pub fn ring(&self) -> &Arc<BurnsideRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn basis_action(&self, k: usize) -> &Matrix {
        &self.actions[k]
    }

    pub fn action(&self, x: &BurnsideElement) -> Result<Matrix> {
        if !Arc::ptr_eq(x.ring(), &self.ring) {
            return Err(Error::MismatchedRing);
        }
        Ok(self.combination(x.coefficients()))
    }

    fn isotropy_labels(&self) -> Result<Vec<usize>> {
        self.labels.iter().map(|l| l.isotropy.ok_or(Error::Unlabeled)).collect()
    }

    fn same_family_parent(&self, f: &Family) -> Result<()> {
        if Arc::ptr_eq(f.classification(), self.ring.classification()) {
            Ok(())
        } else {
            Err(Error::InvalidArgument("family belongs to a different subgroup classification".into()))
        }
    }
}

fn identity(r: usize) -> Matrix {
    (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0i64; m]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, &x) in row.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (o, &y) in out[i].iter_mut().zip(&b[k]) {
                *o += x * y;
            }
        }
    }
    out
}

/// `A(G)` acting on itself.
pub fn regular_module(ring: &Arc<BurnsideRing>) -> GModule {
    let c = ring.rank();
    let classification = ring.classification();
    let labels = (0..c)
        .map(|i| BasisLabel {
            name: format!("[G/{}]", classification.label(i)),
            isotropy: Some(i),
            pair: None,
        })
        .collect();
    let actions = (0..c)
        .map(|k| {
            let mut a = vec![vec![0i64; c]; c];
            for j in 0..c {
                for (i, &coef) in ring.basis_product(k, j).iter().enumerate() {
                    a[i][j] = coef;
                }
            }
            a
        })
        .collect();
    GModule::new(ring.clone(), labels, actions).expect("the regular representation is a module")
}

/// The module spanned by pair classes `[H, φ]`.
///
/// `[G/K]` sends `(H, φ)` to the sum over `g ∈ H\G/K` of
/// `(H ∩ gKg⁻¹, φ restricted)`, which is the orbit decomposition of
/// `G/K × (G×K')/Δ(H,φ)`.
pub fn bundle_module(ring: &Arc<BurnsideRing>, pairs: &PairClassification) -> Result<GModule> {
    if !Arc::ptr_eq(ring.classification(), pairs.source()) {
        return Err(Error::InvalidArgument("pair classes were built over a different classification".into()));
    }
    let g = ring.group();
    let c = ring.rank();
    let r = pairs.len();
    let classification = ring.classification();
    let mut actions = vec![vec![vec![0i64; r]; r]; c];
    for (j, pair) in pairs.classes().iter().enumerate() {
        let h = &pair.h;
        for (k, action) in actions.iter_mut().enumerate() {
            let rep_k = classification.representative(k);
            let mut seen = vec![false; g.order()];
            for x in g.elements() {
                if seen[x] {
                    continue;
                }
                for &a in h.members() {
                    for &b in rep_k.members() {
                        seen[g.mul(g.mul(a, x), b)] = true;
                    }
                }
                let sub = h.intersection(&g.conjugate_subgroup(x, rep_k));
                let i = pairs.class_of_restriction(pair, &sub)?;
                action[i][j] += 1;
            }
        }
    }
    let labels = pairs
        .classes()
        .iter()
        .enumerate()
        .map(|(i, p)| BasisLabel {
            name: pairs.label(i),
            isotropy: Some(p.h_class),
            pair: Some(i),
        })
        .collect();
    GModule::new(ring.clone(), labels, actions)
}

#[derive(Clone, Debug)]
pub struct FamilyRestriction {
    pub module: GModule,
    /// `inclusion[i]` is the index in the parent basis of sub-basis element `i`.
    pub inclusion: Vec<usize>,
}

/// The submodule spanned by basis labels whose isotropy lies in `family`;
/// raises [`Error::ClosureViolation`] if that span is not `A(G)`-stable.
pub fn restrict_to_family(m: &GModule, family: &Family) -> Result<FamilyRestriction> {
    m.same_family_parent(family)?;
    let isotropy = m.isotropy_labels()?;
    let inclusion: Vec<usize> = (0..m.rank()).filter(|&i| family.contains(isotropy[i])).collect();
    let inside: Vec<bool> = (0..m.rank()).map(|i| family.contains(isotropy[i])).collect();
    for (k, a) in m.actions.iter().enumerate() {
        for &j in &inclusion {
            if let Some(i) = (0..m.rank()).find(|&i| !inside[i] && a[i][j] != 0) {
                return Err(Error::ClosureViolation {
                    ring_class: k,
                    from: j,
                    to: i,
                });
            }
        }
    }
    let module = submatrix_module(m, &inclusion)?;
    Ok(FamilyRestriction { module, inclusion })
}

fn submatrix_module(m: &GModule, keep: &[usize]) -> Result<GModule> {
    let labels = keep.iter().map(|&i| m.labels[i].clone()).collect();
    let actions = m
        .actions
        .iter()
        .map(|a| keep.iter().map(|&i| keep.iter().map(|&j| a[i][j]).collect()).collect())
        .collect();
    GModule::new(m.ring.clone(), labels, actions)
}

/// The cofibre of `M[F_a] → M[F_b]`: basis labels in `F_b \ F_a` with the
/// induced action.
pub fn family_quotient(m: &GModule, outer: &Family, inner: &Family) -> Result<GModule> {
    if !inner.is_subfamily_of(outer) {
        return Err(Error::FamilyNotContained {
            inner: inner.kind().to_string(),
            outer: outer.kind().to_string(),
        });
    }
    let big = restrict_to_family(m, outer)?;
    restrict_to_family(m, inner)?;
    let keep: Vec<usize> = big
        .module
        .labels
        .iter()
        .enumerate()
        .filter(|(_, l)| !inner.contains(l.isotropy.expect("restriction succeeded")))
        .map(|(i, _)| i)
        .collect();
    submatrix_module(&big.module, &keep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerLevel {
    pub n: usize,
    pub structure: AbelianGroup,
}

/// The finite stages `M/JⁿM`, `n = 1..=depth`.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientTower {
    pub depth: usize,
    pub levels: Vec<TowerLevel>,
}

/// `JⁿM = J·(Jⁿ⁻¹M)`, each stage kept in Hermite normal form, with the
/// inclusion `Jⁿ⁺¹M ⊆ JⁿM` (the surjection `M/Jⁿ⁺¹M → M/JⁿM`) checked.
pub fn quotient_tower(m: &GModule, ideal: &BurnsideIdeal, depth: usize) -> Result<QuotientTower> {
    if depth == 0 {
        return Err(Error::InvalidArgument("tower depth must be at least 1".into()));
    }
    let gens: Vec<Matrix> = ideal.generators.iter().map(|x| m.action(x)).collect::<Result<_>>()?;
    let r = m.rank();
    let mut current = Lattice::full(r);
    let mut levels = Vec::with_capacity(depth);
    for n in 1..=depth {
        let mut images = Vec::with_capacity(gens.len() * current.rank());
        for a in &gens {
            for v in current.basis() {
                images.push(apply(a, v));
            }
        }
        let next = Lattice::from_generators(r, images);
        if !current.contains_lattice(&next) {
            return Err(Error::InvalidModule(format!("J^{n}M is not contained in J^{}M", n - 1)));
        }
        levels.push(TowerLevel {
            n,
            structure: next.quotient(),
        });
        current = next;
    }
    Ok(QuotientTower { depth, levels })
}

fn apply(a: &Matrix, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(&x, _)| x != 0)
                .fold(BigInt::zero(), |acc, (&x, y)| acc + BigInt::from(x) * y)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Confidence {
    ProvedStable,
    Heuristic,
    Unresolved,
}

/// Isomorphism type `Z^free ⊕ ⊕_p Z_p^{b_p} ⊕ torsion` of a completion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfiniteAbelianDescriptor {
    pub free: usize,
    /// Only primes with a positive rank appear.
    pub padic: BTreeMap<u64, usize>,
    pub torsion: Vec<u64>,
    pub confidence: Confidence,
    /// Tower depth at which classification failed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unresolved_at: Option<usize>,
}

impl ProfiniteAbelianDescriptor {
    pub fn zero(confidence: Confidence) -> Self {
        ProfiniteAbelianDescriptor {
            free: 0,
            padic: BTreeMap::new(),
            torsion: Vec::new(),
            confidence,
            unresolved_at: None,
        }
    }

    fn unresolved(depth: usize) -> Self {
        ProfiniteAbelianDescriptor {
            unresolved_at: Some(depth),
            ..Self::zero(Confidence::Unresolved)
        }
    }

    pub fn is_unresolved(&self) -> bool {
        self.confidence == Confidence::Unresolved
    }

    pub fn padic_rank(&self, p: u64) -> usize {
        self.padic.get(&p).copied().unwrap_or(0)
    }

    pub fn add_padic(&mut self, p: u64, count: usize) {
        if count > 0 {
            *self.padic.entry(p).or_insert(0) += count;
        }
    }

    /// Same free rank and p-adic ranks; confidence and torsion are ignored.
    pub fn same_ranks(&self, other: &Self) -> bool {
        !self.is_unresolved() && !other.is_unresolved() && self.free == other.free && self.padic == other.padic
    }

    /// Same free rank, p-adic ranks and torsion.
    pub fn same_shape(&self, other: &Self) -> bool {
        self.same_ranks(other) && self.torsion == other.torsion
    }

    pub fn describe(&self) -> String {
        if self.is_unresolved() {
            return format!("unresolved at depth {}", self.unresolved_at.unwrap_or(0));
        }
        let mut parts = Vec::new();
        match self.free {
            0 => {}
            1 => parts.push("Z".to_string()),
            a => parts.push(format!("Z^{a}")),
        }
        for (p, b) in &self.padic {
            parts.push(if *b == 1 { format!("Z_{p}") } else { format!("Z_{p}^{b}") });
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for ProfiniteAbelianDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Reads the inverse limit off the last [`STABLE_WINDOW`] steps of a tower.
///
/// The free rank must be constant over the window. Torsion is split into
/// `p`-primary parts and each prime's exponents are aligned largest first;
/// an exponent that strictly grows at every step of the window is a `Z_p`
/// summand, one that stays put is finite torsion, and anything else leaves
/// the descriptor unresolved.
pub fn classify_completion(tower: &QuotientTower) -> Result<ProfiniteAbelianDescriptor> {
    if tower.levels.len() < 5 {
        return Err(Error::InvalidArgument(format!(
            "classification needs a tower of depth at least 5, got {}",
            tower.levels.len()
        )));
    }
    let window = &tower.levels[tower.levels.len() - STABLE_WINDOW - 1..];
    let depth = tower.depth;
    let free = window[0].structure.free_rank;
    if window.iter().any(|l| l.structure.free_rank != free) {
        return Ok(ProfiniteAbelianDescriptor::unresolved(depth));
    }
    let mut primary: Vec<BTreeMap<u64, Vec<u32>>> = Vec::new();
    for level in window {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for d in &level.structure.invariant_factors {
            let Some(factors) = primes::factor_biguint(d, TRIAL_DIVISION_LIMIT) else {
                return Ok(ProfiniteAbelianDescriptor::unresolved(depth));
            };
            for (p, e) in factors {
                by_prime.entry(p).or_default().push(e);
            }
        }
        for exps in by_prime.values_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        primary.push(by_prime);
    }
    let all_primes: std::collections::BTreeSet<u64> = primary.iter().flat_map(|m| m.keys().copied()).collect();
    let mut out = ProfiniteAbelianDescriptor::zero(Confidence::Heuristic);
    out.free = free;
    let mut elementary: Vec<(u64, u32)> = Vec::new();
    for p in all_primes {
        let width = primary.iter().map(|m| m.get(&p).map_or(0, Vec::len)).max().unwrap_or(0);
        let exponent = |level: usize, pos: usize| primary[level].get(&p).and_then(|v| v.get(pos)).copied().unwrap_or(0);
        for pos in 0..width {
            let trajectory: Vec<u32> = (0..window.len()).map(|l| exponent(l, pos)).collect();
            let growing = trajectory.windows(2).all(|w| w[1] > w[0]);
            let constant = trajectory.windows(2).all(|w| w[1] == w[0]);
            if growing {
                out.add_padic(p, 1);
            } else if constant {
                elementary.push((p, trajectory[0]));
            } else {
                return Ok(ProfiniteAbelianDescriptor::unresolved(depth));
            }
        }
    }
    match combine_elementary(&elementary) {
        Some(t) => out.torsion = t,
        None => return Ok(ProfiniteAbelianDescriptor::unresolved(depth)),
    }
    Ok(out)
}

/// Elementary divisors `p^e` to invariant factors.
fn combine_elementary(elementary: &[(u64, u32)]) -> Option<Vec<u64>> {
    let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &(p, e) in elementary {
        by_prime.entry(p).or_default().push(e);
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for (p, mut exps) in by_prime {
        exps.sort_unstable();
        let offset = len - exps.len();
        for (i, e) in exps.into_iter().enumerate() {
            factors[offset + i] = factors[offset + i].checked_mul(p.checked_pow(e)?)?;
        }
    }
    factors.retain(|&d| d > 1);
    Some(factors)
}

/// Counts basis labels: trivial isotropy contributes `Z`, a nontrivial
/// `p`-group `Z_p`, and labels of non-prime-power isotropy contribute nothing.
///
/// This is the completion predicted by replacing `M` with its prime-power
/// isotropy part and completing each one-prime layer at its prime.
pub fn closed_form_completion(m: &GModule) -> Result<ProfiniteAbelianDescriptor> {
    let isotropy = m.isotropy_labels()?;
    let classification = m.ring.classification();
    let mut out = ProfiniteAbelianDescriptor::zero(Confidence::ProvedStable);
    for h in isotropy {
        let order = classification.class(h).order() as u64;
        if order == 1 {
            out.free += 1;
        } else if let Some((p, _)) = primes::prime_power(order) {
            out.add_padic(p, 1);
        }
    }
    Ok(out)
}

/// Assembles the completion from the one-prime layers: the free part of
/// `M[F1]` plus, for each prime `p`, the `p`-adic part of `M[Fp, F1]`.
pub fn layered_completion(m: &GModule) -> Result<ProfiniteAbelianDescriptor> {
    let classification = m.ring.classification();
    let bottom = classification.family(FamilyKind::Trivial)?;
    let mut out = ProfiniteAbelianDescriptor::zero(Confidence::ProvedStable);
    out.free = closed_form_completion(&restrict_to_family(m, &bottom)?.module)?.free;
    for p in primes::prime_divisors(m.ring.group().order() as u64) {
        let layer = family_quotient(m, &classification.family(FamilyKind::Prime(p))?, &bottom)?;
        out.add_padic(p, closed_form_completion(&layer)?.padic_rank(p));
    }
    Ok(out)
}

/// Classifies the `I(G)`-adic tower of `m` at `depth`.
pub fn tower_completion(m: &GModule, depth: usize) -> Result<ProfiniteAbelianDescriptor> {
    let ideal = m.ring.augmentation_ideal();
    classify_completion(&quotient_tower(m, &ideal, depth)?)
}

/// Greatest common divisor of all matrix entries; handy in tests.
pub fn content(a: &Matrix) -> u64 {
    a.iter().flatten().fold(0u64, |g, x| g.gcd(&x.unsigned_abs()))
}
