//! The Burnside ring `A(G)`.
//!
//! Elements are integer vectors over subgroup classes, the basis vector at
//! class `K` standing for the transitive `G`-set `G/K`. Products come from
//! the double-coset decomposition of `G/H × G/K`; the table of marks is kept
//! as an independent check on them.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{self, FiniteGroup, Subgroup};
use crate::lattice::SubgroupClassification;
use crate::primes;

/// `m[K][H] = |(G/K)^H|`: rows are orbit types, columns fixed-point subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableOfMarks {
    pub labels: Vec<String>,
    pub marks: Vec<Vec<i64>>,
}

impl TableOfMarks {
    /// Row `K`, column `H` is `|N_G(H, K)| / |K|` for representatives `H`, `K`.
    pub fn new(classification: &SubgroupClassification) -> Self {
        let g = classification.group();
        let n = classification.len();
        let mut marks = vec![vec![0i64; n]; n];
        for (k, row) in marks.iter_mut().enumerate() {
            let rep_k = classification.representative(k);
            for (h, entry) in row.iter_mut().enumerate() {
                if !classification.is_subconjugate(h, k) {
                    continue;
                }
                let t = group::transporter(g, classification.representative(h), rep_k);
                *entry = (t.len() / rep_k.order()) as i64;
            }
        }
        let labels = (0..n).map(|i| classification.label(i)).collect();
        TableOfMarks { labels, marks }
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn mark(&self, orbit_type: usize, fixed: usize) -> i64 {
        self.marks[orbit_type][fixed]
    }

    /// The matrix is lower triangular, so this is the product of the diagonal.
    pub fn determinant(&self) -> i128 {
        (0..self.len()).map(|i| self.marks[i][i] as i128).product()
    }

    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let width = self
            .labels
            .iter()
            .map(String::len)
            .chain(self.marks.iter().flatten().map(|m| m.to_string().len()))
            .max()
            .unwrap_or(1)
            + 1;
        let mut out = format!("{:>width$} |", "G/K");
        for l in &self.labels {
            out.push_str(&format!("{l:>width$}"));
        }
        out.push('\n');
        out.push_str(&"-".repeat(width + 2 + width * self.labels.len()));
        out.push('\n');
        for (l, row) in self.labels.iter().zip(&self.marks) {
            out.push_str(&format!("{l:>width$} |"));
            for m in row {
                out.push_str(&format!("{m:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// `A(G)` with its structure constants.
#[derive(Clone)]
pub struct BurnsideRing {
    classification: Arc<SubgroupClassification>,
    marks: TableOfMarks,
    /// `products[h][k]` = coefficients of `[G/H]·[G/K]`.
    products: Vec<Vec<Vec<i64>>>,
}

impl fmt::Debug for BurnsideRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BurnsideRing")
            .field("group", &self.classification.group().name())
            .field("rank", &self.rank())
            .finish_non_exhaustive()
    }
}

impl BurnsideRing {
    pub fn new(classification: Arc<SubgroupClassification>) -> Arc<Self> {
        let marks = TableOfMarks::new(&classification);
        let n = classification.len();
        let mut products = vec![vec![Vec::new(); n]; n];
        for h in 0..n {
            for k in h..n {
                let p = basis_product(&classification, h, k);
                products[k][h] = p.clone();
                products[h][k] = p;
            }
        }
        Arc::new(BurnsideRing {
            classification,
            marks,
            products,
        })
    }

    pub fn classification(&self) -> &Arc<SubgroupClassification> {
        &self.classification
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.classification.group()
    }

    pub fn table_of_marks(&self) -> &TableOfMarks {
        &self.marks
    }

    pub fn rank(&self) -> usize {
        self.classification.len()
    }

    pub fn basis_product(&self, h: usize, k: usize) -> &[i64] {
        &self.products[h][k]
    }

    pub fn zero(self: &Arc<Self>) -> BurnsideElement {
        BurnsideElement {
            ring: self.clone(),
            coefficients: vec![0; self.rank()],
        }
    }

    /// `[G/K]` for class `k`.
    pub fn basis(self: &Arc<Self>, k: usize) -> BurnsideElement {
        let mut x = self.zero();
        x.coefficients[k] = 1;
        x
    }

    /// `[G/G]`, the multiplicative unit.
    pub fn one(self: &Arc<Self>) -> BurnsideElement {
        self.basis(self.classification.full_class())
    }

    pub fn element(self: &Arc<Self>, coefficients: Vec<i64>) -> Result<BurnsideElement> {
        if coefficients.len() != self.rank() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                self.rank(),
                coefficients.len()
            )));
        }
        Ok(BurnsideElement {
            ring: self.clone(),
            coefficients,
        })
    }

    fn check_same(&self, x: &BurnsideElement) -> Result<()> {
        if std::ptr::eq(self, Arc::as_ptr(&x.ring)) {
            Ok(())
        } else {
            Err(Error::MismatchedRing)
        }
    }

    pub fn multiply(&self, x: &BurnsideElement, y: &BurnsideElement) -> Result<BurnsideElement> {
        self.check_same(x)?;
        self.check_same(y)?;
        let n = self.rank();
        let mut out = vec![0i64; n];
        for (h, &a) in x.coefficients.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (k, &b) in y.coefficients.iter().enumerate().filter(|(_, b)| **b != 0) {
                for (o, &c) in out.iter_mut().zip(&self.products[h][k]) {
                    *o += a * b * c;
                }
            }
        }
        Ok(BurnsideElement {
            ring: x.ring.clone(),
            coefficients: out,
        })
    }

    /// `φ^H(x)`, the number of `H`-fixed points.
    pub fn mark(&self, h: usize, x: &BurnsideElement) -> Result<i64> {
        self.check_same(x)?;
        Ok(x.coefficients
            .iter()
            .enumerate()
            .map(|(k, &c)| c * self.marks.mark(k, h))
            .sum())
    }

    /// The vector `(φ^H(x))_H`.
    pub fn mark_vector(&self, x: &BurnsideElement) -> Result<Vec<i64>> {
        (0..self.rank()).map(|h| self.mark(h, x)).collect()
    }

    /// `ε(x)`, the cardinality.
    pub fn augmentation(&self, x: &BurnsideElement) -> Result<i64> {
        self.mark(self.classification.trivial_class(), x)
    }

    /// `I(G)`: generated by `[G/K] − |G:K|·[G/G]` for every proper class `K`.
    pub fn augmentation_ideal(self: &Arc<Self>) -> BurnsideIdeal {
        let g = self.group().order() as i64;
        let top = self.classification.full_class();
        let generators = (0..top)
            .map(|k| {
                let mut x = self.basis(k);
                x.coefficients[top] = -(g / self.classification.class(k).order() as i64);
                x
            })
            .collect();
        BurnsideIdeal { generators }
    }

    /// `φ^H(J)` as an ideal of `Z`: the gcd of the marks of the generators.
    ///
    /// The marks of an ideal's generators generate its image because
    /// `φ^H(a·x) = φ^H(a)·φ^H(x)`.
    pub fn phi_ideal(&self, h: usize, ideal: &BurnsideIdeal) -> Result<IntegerIdeal> {
        let mut d = 0u64;
        for x in &ideal.generators {
            d = d.gcd(&self.mark(h, x)?.unsigned_abs());
        }
        Ok(IntegerIdeal(d))
    }

    /// Checks, class by class, that `φ^H(I(G))` is `(0)` for trivial `H`, a
    /// proper power of `p` for a nontrivial `p`-group and `Z` otherwise.
    pub fn verify_trichotomy(self: &Arc<Self>) -> TrichotomyReport {
        let ideal = self.augmentation_ideal();
        let rows = (0..self.rank())
            .map(|h| {
                let order = self.classification.class(h).order() as u64;
                let ideal = self.phi_ideal(h, &ideal).expect("same ring");
                let expected = match primes::prime_power(order) {
                    None if order == 1 => ExpectedIdeal::Zero,
                    None => ExpectedIdeal::Unit,
                    Some((p, _)) => ExpectedIdeal::PrimePower(p),
                };
                let holds = match expected {
                    ExpectedIdeal::Zero => ideal.is_zero(),
                    ExpectedIdeal::Unit => ideal.is_unit(),
                    ExpectedIdeal::PrimePower(p) => matches!(ideal.prime_power(), Some((q, k)) if q == p && k >= 1),
                };
                TrichotomyRow {
                    class: h,
                    label: self.classification.label(h),
                    order,
                    ideal,
                    expected,
                    holds,
                }
            })
            .collect();
        TrichotomyReport {
            group: self.group().name().to_string(),
            rows,
        }
    }
}

/// `[G/H]·[G/K] = Σ [G/(H ∩ gKg⁻¹)]` over double-coset representatives `g ∈ H\G/K`.
fn basis_product(classification: &SubgroupClassification, h: usize, k: usize) -> Vec<i64> {
    let g = classification.group();
    let rep_h = classification.representative(h);
    let rep_k = classification.representative(k);
    let mut out = vec![0i64; classification.len()];
    let mut seen = vec![false; g.order()];
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        for &a in rep_h.members() {
            for &b in rep_k.members() {
                seen[g.mul(g.mul(a, x), b)] = true;
            }
        }
        let stab = rep_h.intersection(&g.conjugate_subgroup(x, rep_k));
        let c = classification.class_of(&stab).expect("intersection of subgroups is a subgroup");
        out[c] += 1;
    }
    out
}

#[derive(Clone)]
pub struct BurnsideElement {
    ring: Arc<BurnsideRing>,
    coefficients: Vec<i64>,
}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BurnsideElement({:?})", self.coefficients)
    }
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.coefficients == other.coefficients
    }
}

impl Eq for BurnsideElement {}

impl BurnsideElement {
    pub fn ring(&self) -> &Arc<BurnsideRing> {
        &self.ring
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, c: i64) -> Self {
        BurnsideElement {
            ring: self.ring.clone(),
            coefficients: self.coefficients.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.multiply(self, other)
    }

    fn combine(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Result<Self> {
        if !Arc::ptr_eq(&self.ring, &other.ring) {
            return Err(Error::MismatchedRing);
        }
        Ok(BurnsideElement {
            ring: self.ring.clone(),
            coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(&a, &b)| f(a, b)).collect(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct BurnsideIdeal {
    pub generators: Vec<BurnsideElement>,
}

/// An ideal `(d)` of `Z`; `d = 0` is the zero ideal, `d = 1` all of `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntegerIdeal(pub u64);

impl IntegerIdeal {
    pub fn generator(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_unit(self) -> bool {
        self.0 == 1
    }

    pub fn prime_power(self) -> Option<(u64, u32)> {
        primes::prime_power(self.0)
    }
}

impl fmt::Display for IntegerIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "(0)"),
            1 => write!(f, "Z"),
            d => match primes::prime_power(d) {
                Some((p, k)) if k > 1 => write!(f, "({p}^{k})"),
                _ => write!(f, "({d})"),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExpectedIdeal {
    Zero,
    PrimePower(u64),
    Unit,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrichotomyRow {
    pub class: usize,
    pub label: String,
    pub order: u64,
    pub ideal: IntegerIdeal,
    pub expected: ExpectedIdeal,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrichotomyReport {
    pub group: String,
    pub rows: Vec<TrichotomyRow>,
}

impl TrichotomyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }

    pub fn failures(&self) -> Vec<&TrichotomyRow> {
        self.rows.iter().filter(|r| !r.holds).collect()
    }
}

/// Counts `H`-fixed cosets of `G/K` directly; used to cross-check marks.
pub fn fixed_cosets(g: &FiniteGroup, k: &Subgroup, h: &Subgroup) -> usize {
    let mut seen = vec![false; g.order()];
    let mut fixed = 0;
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        let coset: Vec<usize> = k.members().iter().map(|&y| g.mul(x, y)).collect();
        for &c in &coset {
            seen[c] = true;
        }
        // h·xK = xK  iff  h·x ∈ xK
        let mut mask = vec![false; g.order()];
        for &c in &coset {
            mask[c] = true;
        }
        if h.members().iter().all(|&a| mask[g.mul(a, x)]) {
            fixed += 1;
        }
    }
    fixed
}
