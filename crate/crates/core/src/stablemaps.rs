//! Pairs `(H, φ: H → K)`, their Weyl groups, and the wedge decompositions of
//! `F(BG₊, Σ∞BK₊)` and the stable duals of `BG₊`.
//!
//! Pairs are handled through their graph subgroups
//! `Δ(H,φ) = {(h, φ(h))} ≤ G × K`; two pairs are conjugate exactly when
//! their graphs are conjugate in `G × K`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::burnside::BurnsideRing;
use crate::error::{Error, Result};
use crate::group::{self, DirectProduct, FiniteGroup, Subgroup};
use crate::lattice::{Family, SubgroupClassification};
use crate::modules::{self, ProfiniteAbelianDescriptor};
use crate::primes;

/// Note attached to decompositions whose summands are p-completed.
pub const COMPLETION_NOTE: &str =
    "p-completion of a summand is read as p-completion of the suspension spectrum; each p-completed summand contributes Z_p to pi_0";

/// All homomorphisms `H → K` as image tables indexed by elements of `H`.
///
/// Backtracks over images of a greedy generating sequence of `H`; an image
/// must have order dividing the generator's, and each partial assignment is
/// extended over the subgroup it generates and dropped on the first clash.
pub fn homomorphisms(h: &FiniteGroup, k: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = h.full_subgroup().generators(h);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let ord = h.element_order(g);
            k.elements().filter(|&y| ord.is_multiple_of(k.element_order(y))).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    backtrack(h, k, &gens, &candidates, &mut images, &mut out);
    out
}

fn backtrack(
    h: &FiniteGroup,
    k: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let depth = images.len();
    if depth == gens.len() {
        if let Some(map) = extend(h, k, gens, images) {
            if is_homomorphism(h, k, &map) {
                out.push(map);
            }
        }
        return;
    }
    for &y in &candidates[depth] {
        images.push(y);
        if extend(h, k, &gens[..=depth], images).is_some() {
            backtrack(h, k, gens, candidates, images, out);
        }
        images.pop();
    }
}

/// Extends `gens[i] ↦ images[i]` over `<gens>` by `f(xg) = f(x)f(g)`;
/// `None` on an inconsistency. Elements outside `<gens>` map to `usize::MAX`.
fn extend(h: &FiniteGroup, k: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; h.order()];
    map[h.identity()] = k.identity();
    let mut queue = vec![h.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &y) in gens.iter().zip(images) {
            let xg = h.mul(x, g);
            let fxg = k.mul(map[x], y);
            if map[xg] == usize::MAX {
                map[xg] = fxg;
                queue.push(xg);
            } else if map[xg] != fxg {
                return None;
            }
        }
    }
    Some(map)
}

fn is_homomorphism(h: &FiniteGroup, k: &FiniteGroup, map: &[usize]) -> bool {
    h.elements()
        .all(|a| h.elements().all(|b| map[h.mul(a, b)] == k.mul(map[a], map[b])))
}

#[derive(Clone, Debug, Serialize)]
pub struct BundlePairClass {
    /// Subgroup class of `H` in `G`.
    pub h_class: usize,
    /// Representative `H`, equal to the class representative of `h_class`.
    pub h: Subgroup,
    /// `phi[i]` is the image of `h.members()[i]` in `K`.
    pub phi: Vec<usize>,
    /// `Δ(H, φ)` inside `G × K`.
    pub graph: Subgroup,
    /// 0 for `H = 1`, the prime dividing `|H|` for a nontrivial prime-power `H`,
    /// and 0 with `prime_power = false` otherwise.
    pub prime: u64,
    pub prime_power: bool,
    /// Number of graph subgroups conjugate to `graph`.
    pub orbit_size: usize,
}

impl BundlePairClass {
    pub fn is_trivial_hom(&self, target: &FiniteGroup) -> bool {
        self.phi.iter().all(|&y| y == target.identity())
    }

    /// `p(H)`, or `None` when `|H|` is divisible by two primes.
    pub fn completion_prime(&self) -> Option<u64> {
        self.prime_power.then_some(self.prime)
    }

    pub fn phi_pairs(&self) -> Vec<(usize, usize)> {
        self.h.members().iter().copied().zip(self.phi.iter().copied()).collect()
    }
}

/// Conjugacy classes of pairs `(H, φ)` for `H ≤ G`, `φ: H → K`.
#[derive(Clone)]
pub struct PairClassification {
    source: Arc<SubgroupClassification>,
    target: Arc<FiniteGroup>,
    product: DirectProduct,
    classes: Vec<BundlePairClass>,
    lookup: HashMap<Subgroup, usize>,
}

impl fmt::Debug for PairClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PairClassification")
            .field("source", &self.source.group().name())
            .field("target", &self.target.name())
            .field("classes", &self.classes.len())
            .finish_non_exhaustive()
    }
}

/// Classes are ordered by the subgroup class of `H`, then by `φ`'s image
/// tuple, so the trivial homomorphism comes first for each `H`.
pub fn pair_classes(
    source: &Arc<SubgroupClassification>,
    target: &Arc<FiniteGroup>,
    bound: usize,
) -> Result<PairClassification> {
    let g = source.group();
    let product = group::direct_product(g, target, bound)?;
    let gk = product.group.clone();
    let mut lookup: HashMap<Subgroup, usize> = HashMap::new();
    let mut classes = Vec::new();
    for hc in 0..source.len() {
        let h = source.representative(hc).clone();
        let (h_group, _) = g.subgroup_as_group(&h, source.label(hc))?;
        let mut found: Vec<(BundlePairClass, Vec<Subgroup>)> = Vec::new();
        let mut local: HashMap<Subgroup, ()> = HashMap::new();
        for images in homomorphisms(&h_group, target) {
            let graph = graph_subgroup(&product, h.members(), &images);
            if local.contains_key(&graph) {
                continue;
            }
            let mut orbit: Vec<Subgroup> = gk.elements().map(|x| gk.conjugate_subgroup(x, &graph)).collect();
            orbit.sort();
            orbit.dedup();
            for o in &orbit {
                local.insert(o.clone(), ());
            }
            let order = h.order() as u64;
            let (prime, prime_power) = match primes::prime_power(order) {
                Some((p, _)) => (p, true),
                None => (0, order == 1),
            };
            found.push((
                BundlePairClass {
                    h_class: hc,
                    h: h.clone(),
                    phi: images,
                    graph,
                    prime,
                    prime_power,
                    orbit_size: orbit.len(),
                },
                orbit,
            ));
        }
        found.sort_by(|a, b| a.0.phi.cmp(&b.0.phi));
        for (class, orbit) in found {
            let idx = classes.len();
            for o in orbit {
                lookup.insert(o, idx);
            }
            classes.push(class);
        }
    }
    Ok(PairClassification {
        source: source.clone(),
        target: target.clone(),
        product,
        classes,
        lookup,
    })
}

fn graph_subgroup(product: &DirectProduct, h: &[usize], images: &[usize]) -> Subgroup {
    let mut members: Vec<usize> = h.iter().zip(images).map(|(&x, &y)| product.pair(x, y)).collect();
    members.sort_unstable();
    Subgroup::from_sorted_unchecked(members)
}

impl PairClassification {
    pub fn source(&self) -> &Arc<SubgroupClassification> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn product(&self) -> &DirectProduct {
        &self.product
    }

    pub fn classes(&self) -> &[BundlePairClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Pair class of an arbitrary graph subgroup of `G × K`.
    pub fn class_of_graph(&self, graph: &Subgroup) -> Option<usize> {
        self.lookup.get(graph).copied()
    }

    /// Class of `(L, φ|_L)` for a subgroup `L` of `pair.h`.
    pub fn class_of_restriction(&self, pair: &BundlePairClass, sub: &Subgroup) -> Result<usize> {
        let mut images = Vec::with_capacity(sub.order());
        for &x in sub.members() {
            let pos = pair
                .h
                .members()
                .binary_search(&x)
                .map_err(|_| Error::NotSubgroup("restriction target is not inside H".into()))?;
            images.push(pair.phi[pos]);
        }
        let graph = graph_subgroup(&self.product, sub.members(), &images);
        self.class_of_graph(&graph)
            .ok_or_else(|| Error::InvalidArgument("restricted graph subgroup is not a known pair class".into()))
    }

    /// Labels such as `(H2.1, triv)` or `(H2.1, phi1)`.
    pub fn label(&self, i: usize) -> String {
        let c = &self.classes[i];
        let h = self.source.label(c.h_class);
        if c.is_trivial_hom(&self.target) {
            return format!("({h}, triv)");
        }
        let nth = self.classes[..i]
            .iter()
            .filter(|d| d.h_class == c.h_class && !d.is_trivial_hom(&self.target))
            .count();
        format!("({h}, phi{})", nth + 1)
    }

    /// `W(H,φ) = N_{G×K}(Δ) / Δ`, with `|N_{G×K}(Δ)|`.
    pub fn weyl_group(&self, i: usize) -> Result<(Arc<FiniteGroup>, usize)> {
        let gk = &self.product.group;
        let graph = &self.classes[i].graph;
        let normalizer = group::normalizer(gk, graph)?;
        let (n_group, _) = gk.subgroup_as_group(&normalizer, "N")?;
        let local: Vec<usize> = graph
            .members()
            .iter()
            .map(|x| normalizer.members().binary_search(x).expect("Δ lies in its normalizer"))
            .collect();
        let delta = Subgroup::new(&n_group, local)?;
        let (w, _) = group::quotient_group(&n_group, &delta)?;
        let name = format!("W{}", self.label(i));
        let w = Arc::new((*w).clone().with_name(name));
        Ok((w, normalizer.order()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    Full,
    PLocal,
    Dual,
    FixedPointSplitting,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylReport {
    pub order: usize,
    pub abelianization: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupReport {
    pub class: usize,
    pub label: String,
    pub order: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WedgeSummand {
    pub pair: usize,
    pub label: String,
    #[serde(rename = "H")]
    pub h: SubgroupReport,
    /// `[h, φ(h)]` for every `h ∈ H`.
    pub phi: Vec<(usize, usize)>,
    pub weyl: WeylReport,
    /// Completion prime: `Some(0)` for none, `None` when no prime applies.
    pub prime: Option<u64>,
    #[serde(skip)]
    pub weyl_group: Arc<FiniteGroup>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WedgeDecomposition {
    pub kind: DecompositionKind,
    pub source: String,
    pub target: String,
    /// Prime of a p-local or p-completed dual decomposition.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at_prime: Option<u64>,
    /// Symbolic leading term of a p-local decomposition.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leading: Option<String>,
    pub summands: Vec<WedgeSummand>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn summand(pairs: &PairClassification, i: usize, prime: Option<u64>) -> Result<WedgeSummand> {
    let c = &pairs.classes[i];
    let (w, _) = pairs.weyl_group(i)?;
    Ok(WedgeSummand {
        pair: i,
        label: pairs.label(i),
        h: SubgroupReport {
            class: c.h_class,
            label: pairs.source.label(c.h_class),
            order: c.h.order(),
            members: c.h.members().to_vec(),
        },
        phi: c.phi_pairs(),
        weyl: WeylReport {
            order: w.order(),
            abelianization: group::abelianization(&w),
        },
        prime,
        weyl_group: w,
    })
}

fn names(pairs: &PairClassification) -> (String, String) {
    (pairs.source.group().name().to_string(), pairs.target.name().to_string())
}

/// One summand `Σ∞BW(H,φ)₊` for every pair class with `H` in `family`.
pub fn fixed_point_splitting(pairs: &PairClassification, family: &Family) -> Result<WedgeDecomposition> {
    if !Arc::ptr_eq(family.classification(), &pairs.source) {
        return Err(Error::InvalidArgument("family belongs to a different classification".into()));
    }
    let summands = (0..pairs.len())
        .filter(|&i| family.contains(pairs.classes[i].h_class))
        .map(|i| summand(pairs, i, None))
        .collect::<Result<_>>()?;
    let (source, target) = names(pairs);
    Ok(WedgeDecomposition {
        kind: DecompositionKind::FixedPointSplitting,
        source,
        target,
        at_prime: None,
        leading: None,
        summands,
        note: None,
    })
}

/// `F(BG₊, Σ∞BK₊) ≃ ⋁ Σ∞(BW(H,φ)^∧_{p(H)})₊` over pairs with `H` of prime-power order.
pub fn function_decomposition(pairs: &PairClassification) -> Result<WedgeDecomposition> {
    let summands = (0..pairs.len())
        .filter(|&i| pairs.classes[i].prime_power)
        .map(|i| summand(pairs, i, Some(pairs.classes[i].prime)))
        .collect::<Result<_>>()?;
    let (source, target) = names(pairs);
    Ok(WedgeDecomposition {
        kind: DecompositionKind::Full,
        source,
        target,
        at_prime: None,
        leading: None,
        summands,
        note: Some(COMPLETION_NOTE.into()),
    })
}

/// `F(BG^∧_p₊, BK₊)`: a symbolic smash term plus one p-completed summand
/// per pair class with `H` a nontrivial `p`-group.
pub fn p_local_decomposition(pairs: &PairClassification, p: u64) -> Result<WedgeDecomposition> {
    if !primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let summands = (0..pairs.len())
        .filter(|&i| {
            let c = &pairs.classes[i];
            c.prime_power && c.prime == p
        })
        .map(|i| summand(pairs, i, Some(p)))
        .collect::<Result<_>>()?;
    let (source, target) = names(pairs);
    Ok(WedgeDecomposition {
        kind: DecompositionKind::PLocal,
        leading: Some(format!("S^inf(B{source}^_{p})_+ ^ S^inf(B{target})_+")),
        source,
        target,
        at_prime: Some(p),
        summands,
        note: Some(COMPLETION_NOTE.into()),
    })
}

/// Stable dual of `BG₊` (or of `BG^∧_p₊` when `p` is given), indexed by
/// prime-power (or `p`-) subgroup classes with Weyl groups `N_G(H)/H`.
pub fn dual_decomposition(source: &Arc<SubgroupClassification>, p: Option<u64>) -> Result<WedgeDecomposition> {
    if let Some(p) = p {
        if !primes::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    let trivial = Arc::new(group::cyclic(1)?);
    let pairs = pair_classes(source, &trivial, usize::MAX)?;
    let summands = (0..pairs.len())
        .filter_map(|i| {
            let c = &pairs.classes[i];
            match p {
                None if c.prime_power => Some(summand(&pairs, i, Some(c.prime))),
                Some(p) if c.prime_power && (c.prime == p || c.h.order() == 1) => Some(summand(&pairs, i, Some(p))),
                _ => None,
            }
        })
        .collect::<Result<_>>()?;
    Ok(WedgeDecomposition {
        kind: DecompositionKind::Dual,
        source: source.group().name().to_string(),
        target: trivial.name().to_string(),
        at_prime: p,
        leading: None,
        summands,
        note: Some(COMPLETION_NOTE.into()),
    })
}

/// `π₀`: each uncompleted summand gives `Z`, each `p`-completed one `Z_p`.
pub fn pi0_descriptor(d: &WedgeDecomposition) -> Result<ProfiniteAbelianDescriptor> {
    match d.kind {
        DecompositionKind::PLocal => return Err(Error::PLocalPi0),
        DecompositionKind::FixedPointSplitting => {
            return Err(Error::InvalidArgument("fixed-point splittings carry no completion data".into()))
        }
        _ => {}
    }
    let mut out = ProfiniteAbelianDescriptor::zero(modules::Confidence::ProvedStable);
    for s in &d.summands {
        match s.prime {
            Some(0) => out.free += 1,
            Some(p) => out.add_padic(p, 1),
            None => return Err(Error::InvalidArgument(format!("summand {} has no completion prime", s.label))),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrosscheckStatus {
    Pass,
    Mismatch,
    Unresolved,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub source: String,
    pub target: String,
    pub depth: usize,
    pub decomposition: ProfiniteAbelianDescriptor,
    pub closed_form: ProfiniteAbelianDescriptor,
    pub tower: ProfiniteAbelianDescriptor,
    pub status: CrosscheckStatus,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.status == CrosscheckStatus::Pass
    }
}

/// Compares `π₀` of the wedge decomposition with the closed-form and the
/// tower completion of the bundle module `A(G, K)` at `I(G)`.
pub fn crosscheck(ring: &Arc<BurnsideRing>, pairs: &PairClassification, depth: usize) -> Result<CrosscheckReport> {
    let decomposition = pi0_descriptor(&function_decomposition(pairs)?)?;
    let module = modules::bundle_module(ring, pairs)?;
    let closed_form = modules::closed_form_completion(&module)?;
    let tower = modules::tower_completion(&module, depth)?;
    let status = if tower.is_unresolved() {
        CrosscheckStatus::Unresolved
    } else if decomposition.same_shape(&closed_form) && closed_form.same_shape(&tower) {
        CrosscheckStatus::Pass
    } else {
        CrosscheckStatus::Mismatch
    };
    let (source, target) = names(pairs);
    Ok(CrosscheckReport {
        source,
        target,
        depth,
        decomposition,
        closed_form,
        tower,
        status,
    })
}

/// [`crosscheck`] at `depth`, retried once at `retry_depth` if the tower
/// could not be classified.
pub fn crosscheck_escalating(
    ring: &Arc<BurnsideRing>,
    pairs: &PairClassification,
    depth: usize,
    retry_depth: usize,
) -> Result<CrosscheckReport> {
    let first = crosscheck(ring, pairs, depth)?;
    if first.status == CrosscheckStatus::Unresolved && retry_depth > depth {
        crosscheck(ring, pairs, retry_depth)
    } else {
        Ok(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_BOUND;
    use crate::lattice::{subgroup_classes, FamilyKind};
    use crate::parse::parse_group;

    fn group(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(parse_group(spec).unwrap())
    }

    fn pairs(g: &str, k: &str) -> PairClassification {
        pair_classes(&subgroup_classes(&group(g)), &group(k), DEFAULT_ORDER_BOUND).unwrap()
    }

    #[test]
    fn hom_counts() {
        // |Hom(C_m, C_n)| = gcd(m, n)
        for (m, n) in [(4, 6), (6, 4), (5, 3), (12, 8)] {
            let homs = homomorphisms(&group(&format!("C{m}")), &group(&format!("C{n}")));
            assert_eq!(homs.len() as u64, primes::gcd(m, n));
        }
        // Hom(S3, C2): trivial and sign; Hom(C2, S3): trivial plus three involutions.
        assert_eq!(homomorphisms(&group("S3"), &group("C2")).len(), 2);
        assert_eq!(homomorphisms(&group("C2"), &group("S3")).len(), 4);
        // Hom(V4, S3) = 1 + 3·(3 nonidentity maps onto a C2) = 10
        assert_eq!(homomorphisms(&group("V4"), &group("S3")).len(), 10);
        assert_eq!(homomorphisms(&group("Q8"), &group("Q8")).len(), 4 + 24);
    }

    #[test]
    fn pair_class_examples() {
        let p = pairs("C2", "C2");
        assert_eq!(p.len(), 3);
        assert_eq!(p.label(0), "(1, triv)");
        assert_eq!(p.label(1), "(C2, triv)");
        assert_eq!(p.label(2), "(C2, phi1)");
        assert_eq!(pairs("C3", "C2").len(), 2);
        assert_eq!(pairs("C2", "C3").len(), 2);
        assert_eq!(pairs("S4", "C1").len(), 11);
        assert_eq!(pairs("S3", "C2").len(), 6);
    }

    #[test]
    fn graph_subgroups_meet_k_trivially() {
        let p = pairs("S3", "C2");
        let gk = &p.product().group;
        let k_image: Vec<usize> = p.product().embed_right.images().to_vec();
        for c in p.classes() {
            assert_eq!(c.graph.order(), c.h.order());
            assert!(Subgroup::new(gk, c.graph.members().to_vec()).is_ok());
            let meet = c.graph.members().iter().filter(|x| k_image.contains(x)).count();
            assert_eq!(meet, 1);
        }
    }

    #[test]
    fn weyl_groups() {
        let p = pairs("C2", "C2");
        let orders: Vec<usize> = (0..3).map(|i| p.weyl_group(i).unwrap().0.order()).collect();
        assert_eq!(orders, vec![4, 2, 2]);
        let p = pairs("S3", "C2");
        let i = (0..p.len())
            .find(|&i| p.classes()[i].h.order() == 2 && p.classes()[i].is_trivial_hom(p.target()))
            .unwrap();
        let (w, n) = p.weyl_group(i).unwrap();
        assert_eq!((w.order(), n), (2, 4));
        for i in 0..p.len() {
            let (w, n) = p.weyl_group(i).unwrap();
            assert_eq!(w.order() * p.classes()[i].graph.order(), n);
        }
    }

    #[test]
    fn trivial_pair_weyl_is_the_product() {
        let p = pairs("S3", "C2");
        let (w, _) = p.weyl_group(0).unwrap();
        let gk = &p.product().group;
        assert_eq!(w.order(), gk.order());
        for a in gk.elements() {
            for b in gk.elements() {
                assert_eq!(w.mul(a, b), gk.mul(a, b));
            }
        }
    }

    #[test]
    fn splittings() {
        let s3 = subgroup_classes(&group("S3"));
        let p = pair_classes(&s3, &group("C1"), DEFAULT_ORDER_BOUND).unwrap();
        let d = fixed_point_splitting(&p, &s3.family(FamilyKind::All).unwrap()).unwrap();
        let w: Vec<usize> = d.summands.iter().map(|s| s.weyl.order).collect();
        assert_eq!(w, vec![6, 1, 2, 1]);
        let d = fixed_point_splitting(&p, &s3.family(FamilyKind::Trivial).unwrap()).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].weyl.order, 6);
        assert!(pi0_descriptor(&d).is_err());
        let c2 = subgroup_classes(&group("C2"));
        let p = pair_classes(&c2, &group("C2"), DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(fixed_point_splitting(&p, &c2.family(FamilyKind::Prime(2)).unwrap()).unwrap().summands.len(), 3);
    }

    #[test]
    fn function_decompositions() {
        let d = function_decomposition(&pairs("C2", "C2")).unwrap();
        let shape: Vec<(usize, Option<u64>)> = d.summands.iter().map(|s| (s.weyl.order, s.prime)).collect();
        assert_eq!(shape, vec![(4, Some(0)), (2, Some(2)), (2, Some(2))]);
        assert_eq!(pi0_descriptor(&d).unwrap().describe(), "Z + Z_2^2");
        let d = function_decomposition(&pairs("C6", "C2")).unwrap();
        assert!(d.summands.iter().all(|s| s.h.order != 6));
        let orders: std::collections::BTreeSet<usize> = d.summands.iter().map(|s| s.h.order).collect();
        assert_eq!(orders.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn p_local() {
        let p = pairs("C2", "C2");
        let d = p_local_decomposition(&p, 2).unwrap();
        assert!(d.leading.is_some());
        assert_eq!(d.summands.len(), 2);
        assert!(d.summands.iter().all(|s| s.weyl.order == 2));
        assert_eq!(p_local_decomposition(&p, 3).unwrap().summands.len(), 0);
        assert!(matches!(pi0_descriptor(&p_local_decomposition(&p, 2).unwrap()), Err(Error::PLocalPi0)));
        assert!(matches!(p_local_decomposition(&p, 4), Err(Error::NotPrime(4))));
        let s4 = pairs("S4", "C1");
        assert_eq!(p_local_decomposition(&s4, 3).unwrap().summands.len(), 1);
    }

    #[test]
    fn duals() {
        let d = dual_decomposition(&subgroup_classes(&group("C1")), None).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!((d.summands[0].weyl.order, d.summands[0].prime), (1, Some(0)));
        assert_eq!(pi0_descriptor(&d).unwrap().describe(), "Z");
        let d = dual_decomposition(&subgroup_classes(&group("S3")), None).unwrap();
        let shape: Vec<(usize, usize, Option<u64>)> =
            d.summands.iter().map(|s| (s.h.order, s.weyl.order, s.prime)).collect();
        assert_eq!(shape, vec![(1, 6, Some(0)), (2, 1, Some(2)), (3, 2, Some(3))]);
        assert_eq!(pi0_descriptor(&d).unwrap().describe(), "Z + Z_2 + Z_3");
        let d = dual_decomposition(&subgroup_classes(&group("Q8")), Some(2)).unwrap();
        assert_eq!(d.summands.len(), 6);
    }

    #[test]
    fn crosschecks() {
        for (g, k, expect) in [("C2", "C2", "Z + Z_2^2"), ("S3", "C1", "Z + Z_2 + Z_3"), ("C1", "C1", "Z")] {
            let ring = BurnsideRing::new(subgroup_classes(&group(g)));
            let p = pair_classes(ring.classification(), &group(k), DEFAULT_ORDER_BOUND).unwrap();
            let r = crosscheck(&ring, &p, 12).unwrap();
            assert!(r.passed(), "{g} {k}: {r:?}");
            assert_eq!(r.tower.describe(), expect);
        }
    }
}
