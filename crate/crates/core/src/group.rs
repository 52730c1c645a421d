//! Finite groups stored as Cayley tables.
//!
//! Elements are indices `0..order`. Every constructor validates the table
//! (Latin square, identity, inverses, associativity) before handing out a
//! [`FiniteGroup`], so downstream code can index freely.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::primes;

/// Largest group order accepted unless a caller asks for more.
pub const DEFAULT_ORDER_BOUND: usize = 512;

/// Groups up to this order get an exhaustive associativity check.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;

/// A faithful permutation action: `generators[i][x]` is the image of point `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermRealization {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    perm: Option<PermRealization>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table, `table[a * n + b] = a * b`.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        check_latin_square(order, &table)?;

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] as usize == x && table[x * order + e] as usize == x))
            .ok_or_else(|| Error::InvalidTable("no two-sided identity".into()))?;
        let mut inverse = vec![0u32; order];
        for (a, inv) in inverse.iter_mut().enumerate() {
            // Latin square: exactly one b with a*b = e.
            let b = (0..order)
                .find(|&b| table[a * order + b] as usize == identity)
                .expect("latin square row contains the identity");
            if table[b * order + a] as usize != identity {
                return Err(Error::InvalidTable(format!("element {a} has no two-sided inverse")));
            }
            *inv = b as u32;
        }

        let group = FiniteGroup {
            name: name.into(),
            order,
            table,
            identity,
            inverse,
            perm: None,
        };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::InvalidTable(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..(10 * n).max(1000) {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Builds the group whose elements are the given permutations of `0..degree`.
    /// The product `a * b` applies `a` first, then `b`.
    pub fn from_permutations(
        name: impl Into<String>,
        elements: &[Vec<usize>],
        generators: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let degree = elements.first().map_or(0, Vec::len);
        let index: HashMap<&[usize], u32> =
            elements.iter().enumerate().map(|(i, p)| (p.as_slice(), i as u32)).collect();
        if index.len() != elements.len() {
            return Err(Error::InvalidTable("duplicate permutation".into()));
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        let mut buf = vec![0usize; degree];
        for a in elements {
            for b in elements {
                for (x, slot) in buf.iter_mut().enumerate() {
                    *slot = b[a[x]];
                }
                let prod = index
                    .get(buf.as_slice())
                    .ok_or_else(|| Error::InvalidTable("permutations not closed under composition".into()))?;
                table.push(*prod);
            }
        }
        let mut group = FiniteGroup::from_table(name, n, table)?;
        group.perm = Some(PermRealization { degree, generators });
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn permutation_realization(&self) -> Option<&PermRealization> {
        self.perm.as_ref()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { members: vec![self.identity] }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup { members: self.elements().collect() }
    }

    /// Subgroup generated by `gens`, by closure under right multiplication.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order];
        let mut members = vec![self.identity];
        seen[self.identity] = true;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { members }
    }

    /// `g H g⁻¹` as a sorted member set.
    pub fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        let mut members: Vec<usize> = h.members.iter().map(|&x| self.conj(g, x)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    /// Re-indexes a subgroup as a standalone group; element `i` of the result
    /// is `h.members()[i]`. Also returns the inclusion homomorphism.
    pub fn subgroup_as_group(self: &Arc<Self>, h: &Subgroup, name: impl Into<String>) -> Result<(Arc<FiniteGroup>, GroupHom)> {
        let local: HashMap<usize, u32> = h.members.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
        let n = h.order();
        let mut table = Vec::with_capacity(n * n);
        for &a in &h.members {
            for &b in &h.members {
                let p = local
                    .get(&self.mul(a, b))
                    .ok_or_else(|| Error::NotSubgroup("member set not closed".into()))?;
                table.push(*p);
            }
        }
        let sub = Arc::new(FiniteGroup::from_table(name, n, table)?);
        let inclusion = GroupHom::new(sub.clone(), self.clone(), h.members.clone())?;
        Ok((sub, inclusion))
    }
}

fn check_latin_square(n: usize, table: &[u32]) -> Result<()> {
    let mut seen = vec![0usize; n];
    for r in 0..n {
        for c in 0..n {
            let x = table[r * n + c] as usize;
            if seen[x] == r + 1 {
                return Err(Error::InvalidTable(format!("row {r} repeats element {x}")));
            }
            seen[x] = r + 1;
        }
    }
    seen.iter_mut().for_each(|s| *s = 0);
    for c in 0..n {
        for r in 0..n {
            let x = table[r * n + c] as usize;
            if seen[x] == c + 1 {
                return Err(Error::InvalidTable(format!("column {c} repeats element {x}")));
            }
            seen[x] = c + 1;
        }
    }
    Ok(())
}

/// A subgroup given by its sorted member indices. The parent group is
/// supplied by the caller wherever it matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Validates that `members` is a subgroup of `group`.
    pub fn new(group: &FiniteGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x >= group.order()) {
            return Err(Error::NotSubgroup("element index out of range".into()));
        }
        if members.binary_search(&group.identity()).is_err() {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        let mask = membership(group.order(), &members);
        for &a in &members {
            if !mask[group.inv(a)] {
                return Err(Error::NotSubgroup(format!("not closed under inversion at {a}")));
            }
            for &b in &members {
                if !mask[group.mul(a, b)] {
                    return Err(Error::NotSubgroup(format!("not closed: {a}*{b}")));
                }
            }
        }
        debug_assert_eq!(group.order() % members.len(), 0);
        Ok(Subgroup { members })
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        Subgroup { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn mask(&self, parent_order: usize) -> Vec<bool> {
        membership(parent_order, &self.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup { members }
    }

    /// A short generating sequence, chosen greedily in index order.
    pub fn generators(&self, group: &FiniteGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = group.trivial_subgroup();
        for &x in &self.members {
            if !span.contains(x) {
                gens.push(x);
                span = group.generate(&gens);
                if span.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }
}

pub(crate) fn membership(order: usize, members: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; order];
    for &x in members {
        mask[x] = true;
    }
    mask
}

/// A homomorphism between two finite groups, stored as an image table.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl GroupHom {
    /// Validates multiplicativity: exhaustively for sources of order ≤ 64,
    /// on all (element, generator) pairs above that.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::InvalidHom("image table has the wrong length".into()));
        }
        if images.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvalidHom("image out of range".into()));
        }
        if images[source.identity()] != target.identity() {
            return Err(Error::InvalidHom("identity not preserved".into()));
        }
        let hom = GroupHom { source, target, images };
        if hom.source.order() <= EXHAUSTIVE_ASSOCIATIVITY {
            hom.check_pairs(hom.source.elements())?;
        } else {
            let gens = hom.source.full_subgroup().generators(&hom.source);
            hom.check_pairs(gens.into_iter())?;
        }
        Ok(hom)
    }

    fn check_pairs(&self, right: impl Iterator<Item = usize> + Clone) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        for y in right {
            for x in s.elements() {
                if self.images[s.mul(x, y)] != t.mul(self.images[x], self.images[y]) {
                    return Err(Error::InvalidHom(format!("not multiplicative at ({x}, {y})")));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn kernel(&self) -> Subgroup {
        let e = self.target.identity();
        Subgroup {
            members: self.source.elements().filter(|&x| self.images[x] == e).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &y in &self.images {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// `G × K` together with its coordinate embeddings and projections.
/// Element `(g, k)` has index `g * |K| + k`.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: Arc<FiniteGroup>,
    pub embed_left: GroupHom,
    pub embed_right: GroupHom,
    pub project_left: GroupHom,
    pub project_right: GroupHom,
}

impl DirectProduct {
    #[inline]
    pub fn pair(&self, g: usize, k: usize) -> usize {
        g * self.embed_right.source().order() + k
    }

    #[inline]
    pub fn split(&self, x: usize) -> (usize, usize) {
        let k = self.embed_right.source().order();
        (x / k, x % k)
    }
}

pub fn direct_product(g: &Arc<FiniteGroup>, k: &Arc<FiniteGroup>, bound: usize) -> Result<DirectProduct> {
    let (m, n) = (g.order(), k.order());
    let order = m * n;
    if order > bound {
        return Err(Error::OrderBound { order: order as u128, bound });
    }
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (a1, a2) = (a / n, a % n);
        for b in 0..order {
            let (b1, b2) = (b / n, b % n);
            table.push((g.mul(a1, b1) * n + k.mul(a2, b2)) as u32);
        }
    }
    let name = format!("{}x{}", g.name(), k.name());
    let product = Arc::new(FiniteGroup::from_table(name, order, table)?);
    let embed_left = GroupHom::new(g.clone(), product.clone(), (0..m).map(|x| x * n + k.identity()).collect())?;
    let embed_right = GroupHom::new(k.clone(), product.clone(), (0..n).map(|y| g.identity() * n + y).collect())?;
    let project_left = GroupHom::new(product.clone(), g.clone(), (0..order).map(|x| x / n).collect())?;
    let project_right = GroupHom::new(product.clone(), k.clone(), (0..order).map(|x| x % n).collect())?;
    Ok(DirectProduct {
        group: product,
        embed_left,
        embed_right,
        project_left,
        project_right,
    })
}

/// `{g ∈ G : gHg⁻¹ = H}`.
pub fn normalizer(group: &FiniteGroup, h: &Subgroup) -> Result<Subgroup> {
    // Re-validate: callers may hand in arbitrary member sets.
    let h = Subgroup::new(group, h.members.clone())?;
    let mask = h.mask(group.order());
    let members = group
        .elements()
        .filter(|&g| h.members.iter().all(|&x| mask[group.conj(g, x)]))
        .collect();
    Ok(Subgroup { members })
}

/// `{g ∈ G : gHg⁻¹ ≤ K}`.
pub fn transporter(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Vec<usize> {
    let mask = k.mask(group.order());
    group
        .elements()
        .filter(|&g| h.members.iter().all(|&x| mask[group.conj(g, x)]))
        .collect()
}

/// The quotient `G/N` and its projection. Coset `i` is represented by the
/// `i`-th smallest coset minimum, so the identity coset is element 0.
pub fn quotient_group(group: &Arc<FiniteGroup>, n: &Subgroup) -> Result<(Arc<FiniteGroup>, GroupHom)> {
    let n = Subgroup::new(group, n.members.clone())?;
    let mask = n.mask(group.order());
    if let Some(witness) = group
        .elements()
        .find(|&g| n.members.iter().any(|&x| !mask[group.conj(g, x)]))
    {
        return Err(Error::NotNormal { witness });
    }
    let mut coset = vec![usize::MAX; group.order()];
    let mut reps = Vec::new();
    for g in group.elements() {
        if coset[g] == usize::MAX {
            let id = reps.len();
            reps.push(g);
            for &x in &n.members {
                coset[group.mul(g, x)] = id;
            }
        }
    }
    let q = reps.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            table.push(coset[group.mul(a, b)] as u32);
        }
    }
    let name = format!("{}/{}", group.name(), n.order());
    let quotient = Arc::new(FiniteGroup::from_table(name, q, table)?);
    let projection = GroupHom::new(group.clone(), quotient.clone(), coset)?;
    Ok((quotient, projection))
}

pub fn commutator_subgroup(group: &FiniteGroup) -> Subgroup {
    let commutators: Vec<usize> = group
        .elements()
        .cartesian_product(group.elements())
        .map(|(a, b)| group.mul(group.mul(a, b), group.mul(group.inv(a), group.inv(b))))
        .sorted_unstable()
        .dedup()
        .collect();
    group.generate(&commutators)
}

/// Invariant factors `d₁ | d₂ | …` of `G/[G,G]`, each greater than 1.
pub fn abelianization(group: &Arc<FiniteGroup>) -> Vec<u64> {
    let derived = commutator_subgroup(group);
    let (ab, _) = quotient_group(group, &derived).expect("commutator subgroup is normal");
    abelian_invariants(&ab)
}

/// Invariant factors of an abelian group, read off from the sizes of its
/// `p^k`-torsion subgroups.
pub fn abelian_invariants(group: &FiniteGroup) -> Vec<u64> {
    let n = group.order() as u64;
    let mut factors: Vec<u64> = Vec::new();
    for (p, e) in primes::factor_u64(n) {
        // rank_k = log_p |{x : x^(p^k) = 1}|
        let mut ranks = vec![0u32];
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            let count = group
                .elements()
                .filter(|&x| (pk as usize).is_multiple_of(group.element_order(x)))
                .count() as u64;
            ranks.push(count.ilog(p));
        }
        // Number of cyclic p-factors of exponent ≥ k is rank_k − rank_{k−1}.
        let at_least: Vec<u32> = ranks.windows(2).map(|w| w[1] - w[0]).collect();
        let parts = at_least.first().copied().unwrap_or(0) as usize;
        let mut exps = vec![0u32; parts];
        for (k, &cnt) in at_least.iter().enumerate() {
            for slot in exps.iter_mut().take(cnt as usize) {
                *slot = k as u32 + 1;
            }
        }
        // exps is descending; align with the largest invariant factors.
        if factors.len() < parts {
            let pad = parts - factors.len();
            factors.splice(0..0, std::iter::repeat_n(1, pad));
        }
        let len = factors.len();
        for (i, &x) in exps.iter().enumerate() {
            factors[len - 1 - i] *= p.pow(x);
        }
    }
    factors.retain(|&d| d > 1);
    factors
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    let table = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
    FiniteGroup::from_table(format!("C{n}"), n, table)
}

/// Dihedral group of order `2n`; element `i + n*j` is `r^i s^j` with `s r s = r⁻¹`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("dihedral group D0".into()));
    }
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (ra, sa) = (a % n, a / n);
        for b in 0..order {
            let (rb, sb) = (b % n, b / n);
            let r = if sa == 0 { (ra + rb) % n } else { (ra + n - rb) % n };
            table.push((r + n * ((sa + sb) % 2)) as u32);
        }
    }
    FiniteGroup::from_table(format!("D{n}"), order, table)
}

/// Symmetric group on `n` points, elements in lexicographic order of image tuples.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    let elements: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    FiniteGroup::from_permutations(format!("S{n}"), &elements, symmetric_generators(n))
}

/// Even permutations on `n` points, lexicographic order.
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    let elements: Vec<Vec<usize>> = (0..n).permutations(n).filter(|p| is_even(p)).collect();
    let mut gens = Vec::new();
    for i in 2..n {
        let mut p: Vec<usize> = (0..n).collect();
        // 3-cycle (0 1 i)
        p[0] = 1;
        p[1] = i;
        p[i] = 0;
        gens.push(p);
    }
    FiniteGroup::from_permutations(format!("A{n}"), &elements, gens)
}

fn symmetric_generators(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return Vec::new();
    }
    let mut t: Vec<usize> = (0..n).collect();
    t.swap(0, 1);
    let c: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    vec![t, c]
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// Quaternion group; element `2b + s` is `(−1)^s · u_b` with `u = (1, i, j, k)`.
pub fn quaternion8() -> Result<FiniteGroup> {
    // (sign, unit) for u_a * u_b
    const UNIT: [[(u8, u8); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (s, u) = UNIT[a / 2][b / 2];
            let sign = (s as usize + a % 2 + b % 2) % 2;
            table.push((2 * u as usize + sign) as u32);
        }
    }
    FiniteGroup::from_table("Q8", 8, table)
}

/// Closure of permutation generators on `degree` points, breadth first in
/// generator order; the identity is element 0.
pub fn permutation_group(degree: usize, generators: Vec<Vec<usize>>, bound: usize) -> Result<FiniteGroup> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut elements = vec![identity];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in &generators {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if !index.contains_key(&y) {
                if elements.len() == bound {
                    return Err(Error::OrderBound {
                        order: elements.len() as u128 + 1,
                        bound,
                    });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    FiniteGroup::from_permutations(format!("perm({degree})"), &elements, generators)
}
