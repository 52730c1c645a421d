//! Sublattices of `Z^n` with exact arithmetic.
//!
//! A [`Lattice`] keeps a row-style Hermite normal form basis: pivots strictly
//! increase, pivot entries are positive and entries above a pivot are reduced
//! into `[0, pivot)`. Quotients `Z^n / L` are read off a Smith normal form.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn zero(dim: usize) -> Self {
        Lattice {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        let mut l = Lattice::zero(dim);
        for i in 0..dim {
            let mut v = vec![BigInt::zero(); dim];
            v[i] = BigInt::one();
            l.rows.push(v);
            l.pivots.push(i);
        }
        l
    }

    pub fn from_generators<I>(dim: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        let mut l = Lattice::zero(dim);
        l.add_generators(gens);
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    fn insert(&mut self, mut v: Vec<BigInt>) {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        let mut r = 0;
        for col in 0..self.dim {
            if v[col].is_zero() {
                continue;
            }
            while r < self.pivots.len() && self.pivots[r] < col {
                r += 1;
            }
            if r < self.pivots.len() && self.pivots[r] == col {
                // Replace (row, v) by (g-row, v with zero at col).
                let row = &self.rows[r];
                let a = row[col].clone();
                // Cheap division step first; mixing rows only when needed
                // keeps entries from blowing up.
                let q = v[col].div_floor(&a);
                if !q.is_zero() {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x -= &q * y;
                    }
                }
                if v[col].is_zero() {
                    continue;
                }
                let b = v[col].clone();
                let e = a.extended_gcd(&b);
                let (g, s, t) = (e.gcd, e.x, e.y);
                let (a_g, b_g) = (&a / &g, &b / &g);
                let new_row: Vec<BigInt> = row.iter().zip(&v).map(|(x, y)| &s * x + &t * y).collect();
                let new_v: Vec<BigInt> = row.iter().zip(&v).map(|(x, y)| &b_g * x - &a_g * y).collect();
                self.rows[r] = new_row;
                v = new_v;
                debug_assert!(v[col].is_zero());
            } else {
                self.rows.insert(r, v);
                self.pivots.insert(r, col);
                return;
            }
        }
    }

    /// Makes pivots positive and reduces entries above each pivot.
    fn reduce(&mut self) {
        for i in 0..self.rows.len() {
            let c = self.pivots[i];
            if self.rows[i][c].is_negative() {
                for x in self.rows[i].iter_mut() {
                    *x = -&*x;
                }
            }
        }
        for i in (0..self.rows.len()).rev() {
            let c = self.pivots[i];
            let (above, rest) = self.rows.split_at_mut(i);
            let pivot_row = &rest[0];
            let p = &pivot_row[c];
            for row in above.iter_mut() {
                let q = row[c].div_floor(p);
                if !q.is_zero() {
                    for (x, y) in row.iter_mut().zip(pivot_row) {
                        *x -= &q * y;
                    }
                }
            }
        }
    }

    pub fn add_generators<I>(&mut self, gens: I)
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        for v in gens {
            if !v.iter().all(Zero::is_zero) {
                self.insert(v);
                self.reduce();
            }
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[..c].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = v[c].div_rem(&row[c]);
            if !r.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &q * y;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Structure of `Z^dim / self`.
    pub fn quotient(&self) -> AbelianGroup {
        let factors = smith_diagonal(self.rows.clone());
        AbelianGroup {
            free_rank: self.dim - factors.len(),
            invariant_factors: factors.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }
}

/// `Z^free_rank ⊕ ⊕ Z/d_i` with `d_1 | d_2 | …`, all `d_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_biguints")]
    pub invariant_factors: Vec<BigUint>,
}

fn serialize_biguints<S: serde::Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for d in v {
        match u64::try_from(d) {
            Ok(small) => seq.serialize_element(&small)?,
            Err(_) => seq.serialize_element(&d.to_string())?,
        }
    }
    seq.end()
}

impl AbelianGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Compact form such as `Z ⊕ Z/2 ⊕ Z/6`, or `0`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Nonzero diagonal of the Smith normal form, positive and ascending by
/// divisibility.
pub fn smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigUint> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry in the trailing block becomes the pivot
        let Some((pi, pj)) = min_entry(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (top, bottom) = a.split_at_mut(i);
                for (x, y) in bottom[0].iter_mut().zip(&top[t]).skip(t) {
                    *x -= &q * y;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                let (pi, pj) = min_in_cross(&a, t);
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            // Divisibility: pull an offending row into the pivot row.
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offending {
                Some(i) => {
                    let (top, bottom) = a.split_at_mut(i);
                    for (x, y) in top[t].iter_mut().zip(&bottom[0]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].magnitude().clone());
        t += 1;
    }
    diag
}

fn min_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.magnitude() < a[bi][bj].magnitude()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` (from `t` on).
fn min_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_mag: Option<BigUint> = None;
    let mut consider = |i: usize, j: usize, x: &BigInt| {
        if x.sign() != Sign::NoSign && best_mag.as_ref().is_none_or(|b| x.magnitude() < b) {
            best = (i, j);
            best_mag = Some(x.magnitude().clone());
        }
    };
    for (i, row) in a.iter().enumerate().skip(t) {
        consider(i, t, &row[t]);
    }
    for (j, x) in a[t].iter().enumerate().skip(t) {
        consider(t, j, x);
    }
    best
}

pub fn to_bigint_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
