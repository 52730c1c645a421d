//! Subgroup enumeration, conjugacy classes and families of subgroups.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{self, FiniteGroup, Subgroup};
use crate::primes;

/// All subgroups of `group`, sorted by order and then by member set.
///
/// Starts from the cyclic subgroups and repeatedly adjoins one element to
/// every newly found subgroup until nothing new appears.
pub fn enumerate_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut all: HashSet<Subgroup> = HashSet::new();
    let mut frontier: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    for x in group.elements() {
        let h = group.generate(&[x]);
        if all.insert(h.clone()) {
            frontier.push((h, vec![x]));
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (h, gens) in &frontier {
            // <H, g> depends only on the coset Hg.
            let mut covered = h.mask(group.order());
            for g in group.elements() {
                if covered[g] {
                    continue;
                }
                for &x in h.members() {
                    covered[group.mul(x, g)] = true;
                }
                let mut ext_gens = gens.clone();
                ext_gens.push(g);
                let ext = group.generate(&ext_gens);
                if all.insert(ext.clone()) {
                    next.push((ext, ext_gens));
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = all.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    out
}

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Lexicographically smallest member set in the orbit.
    pub representative: Subgroup,
    /// The full conjugation orbit, sorted.
    pub orbit: Vec<Subgroup>,
    pub normalizer_order: usize,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

/// The conjugacy classes of subgroups of a group together with the
/// subconjugacy relation between them.
///
/// Classes are ordered by subgroup order, ties broken by the representative's
/// member set, so the trivial class is first and the whole group last.
#[derive(Clone)]
pub struct SubgroupClassification {
    group: Arc<FiniteGroup>,
    classes: Vec<SubgroupClass>,
    below: Vec<Vec<bool>>,
    lookup: HashMap<Subgroup, usize>,
}

impl fmt::Debug for SubgroupClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupClassification")
            .field("group", &self.group.name())
            .field("classes", &self.classes.len())
            .finish_non_exhaustive()
    }
}

impl SubgroupClassification {
    pub fn new(group: Arc<FiniteGroup>) -> Self {
        let subgroups = enumerate_subgroups(&group);
        let mut assigned: HashSet<&Subgroup> = HashSet::new();
        let mut classes = Vec::new();
        for h in &subgroups {
            if assigned.contains(h) {
                continue;
            }
            let mut orbit: Vec<Subgroup> = group.elements().map(|g| group.conjugate_subgroup(g, h)).collect();
            orbit.sort();
            orbit.dedup();
            for c in &orbit {
                let found = subgroups.binary_search_by(|s| s.order().cmp(&c.order()).then_with(|| s.members().cmp(c.members())));
                assigned.insert(&subgroups[found.expect("conjugate of a subgroup is a subgroup")]);
            }
            classes.push(SubgroupClass {
                representative: orbit[0].clone(),
                normalizer_order: group.order() / orbit.len(),
                orbit,
            });
        }
        classes.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.representative.members().cmp(b.representative.members()))
        });
        let below = subconjugacy_matrix(&group, &classes);
        Self::assemble(group, classes, below)
    }

    fn assemble(group: Arc<FiniteGroup>, classes: Vec<SubgroupClass>, below: Vec<Vec<bool>>) -> Self {
        let lookup = classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.orbit.iter().map(move |h| (h.clone(), i)))
            .collect();
        SubgroupClassification {
            group,
            classes,
            below,
            lookup,
        }
    }

    /// Rebuilds a classification from stored parts (for instance a cache file),
    /// checking that the parts are consistent with `group`.
    pub fn from_parts(group: Arc<FiniteGroup>, classes: Vec<SubgroupClass>, below: Vec<Vec<bool>>) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidArgument(format!("inconsistent classification: {msg}"));
        let n = classes.len();
        if below.len() != n || below.iter().any(|row| row.len() != n) {
            return Err(bad("subconjugacy matrix has the wrong shape"));
        }
        if n == 0 || classes[0].order() != 1 || classes[n - 1].order() != group.order() {
            return Err(bad("trivial class must be first and the whole group last"));
        }
        let mut total = 0;
        for c in &classes {
            if c.orbit.first() != Some(&c.representative) {
                return Err(bad("representative is not the orbit minimum"));
            }
            if c.normalizer_order * c.orbit.len() != group.order() {
                return Err(bad("orbit-stabilizer mismatch"));
            }
            for h in &c.orbit {
                Subgroup::new(&group, h.members().to_vec())?;
            }
            let conj: HashSet<Subgroup> = group
                .elements()
                .map(|g| group.conjugate_subgroup(g, &c.representative))
                .collect();
            if conj.len() != c.orbit.len() || c.orbit.iter().any(|h| !conj.contains(h)) {
                return Err(bad("orbit is not a conjugacy class"));
            }
            total += c.orbit.len();
        }
        let out = Self::assemble(group, classes, below);
        if out.lookup.len() != total {
            return Err(bad("classes overlap"));
        }
        Ok(out)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    pub fn representative(&self, i: usize) -> &Subgroup {
        &self.classes[i].representative
    }

    pub fn trivial_class(&self) -> usize {
        0
    }

    pub fn full_class(&self) -> usize {
        self.classes.len() - 1
    }

    /// Class index of an arbitrary subgroup of the parent group.
    pub fn class_of(&self, h: &Subgroup) -> Option<usize> {
        self.lookup.get(h).copied()
    }

    pub fn subgroup_count(&self) -> usize {
        self.lookup.len()
    }

    /// Whether some conjugate of class `h` lies inside class `k`.
    pub fn is_subconjugate(&self, h: usize, k: usize) -> bool {
        self.below[h][k]
    }

    pub fn subconjugacy_matrix(&self) -> &[Vec<bool>] {
        &self.below
    }

    /// Short label such as `C2#1` (order, index among classes of that order).
    pub fn label(&self, i: usize) -> String {
        let order = self.classes[i].order();
        let same: Vec<usize> = (0..self.len()).filter(|&j| self.classes[j].order() == order).collect();
        if i == 0 {
            "1".to_string()
        } else if i == self.full_class() {
            self.group.name().to_string()
        } else if same.len() == 1 {
            format!("H{order}")
        } else {
            let pos = same.iter().position(|&j| j == i).unwrap();
            format!("H{order}.{}", pos + 1)
        }
    }

    /// Builds a family from its kind, checking downward closure.
    pub fn family(self: &Arc<Self>, kind: FamilyKind) -> Result<Family> {
        let members: Vec<usize> = match &kind {
            FamilyKind::Trivial => vec![0],
            FamilyKind::Prime(p) => {
                if !primes::is_prime(*p) {
                    return Err(Error::NotPrime(*p));
                }
                (0..self.len())
                    .filter(|&i| primes::factor_u64(self.classes[i].order() as u64).iter().all(|&(q, _)| q == *p))
                    .collect()
            }
            FamilyKind::PrimePower => (0..self.len())
                .filter(|&i| primes::factor_u64(self.classes[i].order() as u64).len() <= 1)
                .collect(),
            FamilyKind::All => (0..self.len()).collect(),
            FamilyKind::Custom(m) => {
                let mut m = m.clone();
                m.sort_unstable();
                m.dedup();
                if m.iter().any(|&i| i >= self.len()) {
                    return Err(Error::InvalidArgument("class index out of range".into()));
                }
                m
            }
        };
        let family = Family {
            classification: self.clone(),
            kind,
            members,
        };
        family.check_closed()?;
        Ok(family)
    }
}

fn subconjugacy_matrix(group: &FiniteGroup, classes: &[SubgroupClass]) -> Vec<Vec<bool>> {
    let n = classes.len();
    let masks: Vec<Vec<bool>> = classes.iter().map(|c| c.representative.mask(group.order())).collect();
    let mut below = vec![vec![false; n]; n];
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate() {
            if cj.order() % ci.order() != 0 {
                continue;
            }
            below[i][j] = ci
                .orbit
                .iter()
                .any(|h| h.members().iter().all(|&x| masks[j][x]));
        }
    }
    below
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Only the trivial subgroup.
    Trivial,
    /// `p`-subgroups, including the trivial one.
    Prime(u64),
    /// Subgroups of prime-power order, including the trivial one.
    PrimePower,
    All,
    Custom(Vec<usize>),
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Trivial => write!(f, "F1"),
            FamilyKind::Prime(p) => write!(f, "F{p}"),
            FamilyKind::PrimePower => write!(f, "FP"),
            FamilyKind::All => write!(f, "Fall"),
            FamilyKind::Custom(m) => write!(f, "custom{m:?}"),
        }
    }
}

/// A set of subgroup classes closed under conjugation and passage to subgroups.
#[derive(Clone, Debug)]
pub struct Family {
    classification: Arc<SubgroupClassification>,
    kind: FamilyKind,
    members: Vec<usize>,
}

impl Family {
    fn check_closed(&self) -> Result<()> {
        let c = &self.classification;
        for &member in &self.members {
            for missing in 0..c.len() {
                if c.is_subconjugate(missing, member) && !self.contains(missing) {
                    return Err(Error::NotDownwardClosed { member, missing });
                }
            }
        }
        Ok(())
    }

    pub fn classification(&self) -> &Arc<SubgroupClassification> {
        &self.classification
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, class: usize) -> bool {
        self.members.binary_search(&class).is_ok()
    }

    pub fn is_subfamily_of(&self, other: &Family) -> bool {
        Arc::ptr_eq(&self.classification, &other.classification) && self.members.iter().all(|&m| other.contains(m))
    }
}

/// Convenience: classify a group held in an `Arc`.
pub fn subgroup_classes(group: &Arc<FiniteGroup>) -> Arc<SubgroupClassification> {
    Arc::new(SubgroupClassification::new(group.clone()))
}

/// `|orbit| · |N_G(H)| = |G|`, recomputing the normalizer directly.
pub fn orbit_stabilizer_holds(classification: &SubgroupClassification, i: usize) -> bool {
    let g = classification.group();
    let c = classification.class(i);
    let n = group::normalizer(g, &c.representative).expect("representative is a subgroup");
    n.order() == c.normalizer_order && c.orbit.len() * n.order() == g.order()
}
