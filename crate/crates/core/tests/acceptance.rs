//! The eight acceptance criteria, each checked against an oracle written
//! here from group multiplication alone. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use burnside_core::burnside::ExpectedIdeal;
use burnside_core::modules::{self, DEFAULT_DEPTH};
use burnside_core::stablemaps::{self, CrosscheckStatus};
use burnside_core::{
    pair_classes, parse_group, subgroup_classes, BurnsideRing, FamilyKind, FiniteGroup, Subgroup,
    DEFAULT_ORDER_BOUND,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PROPERTY_SEED: u64 = 0x5eed_b02e;
const RANDOM_ELEMENTS_PER_GROUP: usize = 24;
const COEFFICIENT_RANGE: i64 = 3;
const RANDOM_FAMILIES_PER_GROUP: usize = 8;
const MAX_PRODUCT_ORDER: usize = 48;
const CROSSCHECK_RETRY_DEPTH: usize = 18;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(parse_group(spec).unwrap_or_else(|e| panic!("{spec}: {e}")))
}

fn ring(spec: &str) -> Arc<BurnsideRing> {
    BurnsideRing::new(subgroup_classes(&group(spec)))
}

// ---------------------------------------------------------------------------
// Oracles. These use only `mul`, `inv` and subgroup member lists.

/// `|(G/K)^H|` by testing each coset `gK` for `g⁻¹Hg ⊆ K`.
fn oracle_mark(g: &FiniteGroup, k: &Subgroup, h: &Subgroup) -> i64 {
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for x in g.elements() {
        let coset: BTreeSet<usize> = k.members().iter().map(|&y| g.mul(x, y)).collect();
        let rep = *coset.iter().next().unwrap();
        if !seen.insert(rep) {
            continue;
        }
        let xi = g.inv(x);
        if h.members().iter().all(|&y| k.contains(g.mul(g.mul(xi, y), x))) {
            count += 1;
        }
    }
    count
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn oracle_normalizer_order(g: &FiniteGroup, h: &Subgroup) -> usize {
    g.elements()
        .filter(|&x| h.members().iter().all(|&y| h.contains(g.mul(g.mul(x, y), g.inv(x)))))
        .count()
}

fn is_prime_power(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Closure of a set under multiplication.
fn close(g: &FiniteGroup, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut out = seed.clone();
    out.insert(g.identity());
    loop {
        let new: Vec<usize> = out
            .iter()
            .flat_map(|&a| out.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(a, b))
            .filter(|x| !out.contains(x))
            .collect();
        if new.is_empty() {
            return out;
        }
        out.extend(new);
    }
}

/// Every subgroup, found by adjoining one element at a time from `{1}`.
fn oracle_all_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let start: BTreeSet<usize> = [g.identity()].into();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack = vec![start.clone()];
    found.insert(start.into_iter().collect());
    while let Some(s) = stack.pop() {
        for x in g.elements().filter(|x| !s.contains(x)) {
            let mut t = s.clone();
            t.insert(x);
            let c = close(g, &t);
            let v: Vec<usize> = c.iter().copied().collect();
            if found.insert(v) {
                stack.push(c);
            }
        }
    }
    found
}

fn canonical_conjugate(g: &FiniteGroup, s: &[usize]) -> Vec<usize> {
    g.elements()
        .map(|x| {
            let mut c: Vec<usize> = s.iter().map(|&y| g.mul(g.mul(x, y), g.inv(x))).collect();
            c.sort_unstable();
            c
        })
        .min()
        .unwrap()
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    let r = ring("S3");
    let tom = r.table_of_marks();
    let expected = [[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]];
    for (k, row) in expected.iter().enumerate() {
        for (h, &m) in row.iter().enumerate() {
            ensure!(tom.mark(k, h) == m, "S3 mark ({k},{h}) = {} != {m}", tom.mark(k, h));
        }
    }
    let groups = ["C2", "C6", "S3", "D4", "Q8", "A4", "S4"];
    for spec in groups {
        let r = ring(spec);
        let c = r.classification();
        let g = c.group();
        let tom = r.table_of_marks();
        for k in 0..c.len() {
            let kk = c.representative(k);
            for h in 0..c.len() {
                let hh = c.representative(h);
                let oracle = oracle_mark(g, kk, hh);
                ensure!(tom.mark(k, h) == oracle, "{spec}: mark({k},{h}) = {} but counted {oracle}", tom.mark(k, h));
                ensure!(oracle == 0 || c.is_subconjugate(h, k), "{spec}: nonzero mark off the subconjugacy support");
                ensure!(h <= k || oracle == 0, "{spec}: table not lower triangular at ({k},{h})");
            }
            let weyl = oracle_normalizer_order(g, kk) / kk.order();
            ensure!(tom.mark(k, k) as usize == weyl, "{spec}: diagonal {} != |W| = {weyl}", tom.mark(k, k));
            ensure!(tom.mark(k, 0) as usize == g.order() / kk.order(), "{spec}: first column is not the index");
        }
    }
    Ok(format!("S3 table exact; marks of {} groups agree with coset counting", groups.len()))
}

fn criterion_2() -> Outcome {
    let groups = ["C6", "S3", "D4", "Q8", "A4", "C12", "S4"];
    for spec in groups {
        let r = ring(spec);
        let report = r.verify_trichotomy();
        ensure!(report.passed(), "{spec}: trichotomy failed at {:?}", report.failures());
        let c = r.classification();
        let g = c.group();
        let ideal = r.augmentation_ideal();
        let full = g.full_subgroup();
        for h in 0..c.len() {
            let hh = c.representative(h);
            // gcd over the marks of [G/K] - |G:K|[G/G], computed from scratch.
            let oracle = (0..c.len()).fold(0u64, |acc, k| {
                let kk = c.representative(k);
                let m = oracle_mark(g, kk, hh) - (g.order() / kk.order()) as i64 * oracle_mark(g, &full, hh);
                gcd(acc, m.unsigned_abs())
            });
            let got = r.phi_ideal(h, &ideal).map_err(|e| e.to_string())?;
            ensure!(got.0 == oracle, "{spec}: phi ideal at class {h} is {got} but gcd oracle gives {oracle}");
            let order = hh.order() as u64;
            let expected = match (order, is_prime_power(order)) {
                (1, _) => ExpectedIdeal::Zero,
                (_, Some(p)) => ExpectedIdeal::PrimePower(p),
                _ => ExpectedIdeal::Unit,
            };
            let row = &report.rows[h];
            ensure!(row.expected == expected, "{spec}: expected kind differs at class {h}");
            match expected {
                ExpectedIdeal::Zero => ensure!(oracle == 0, "{spec}: phi^1 nonzero"),
                ExpectedIdeal::PrimePower(p) => ensure!(
                    oracle > 1 && is_prime_power(oracle) == Some(p),
                    "{spec}: phi at class {h} is ({oracle}), not a power of {p}"
                ),
                ExpectedIdeal::Unit => ensure!(oracle == 1, "{spec}: phi at class {h} is ({oracle}), not Z"),
            }
        }
    }
    let r = ring("S3");
    let c2 = (0..r.rank()).find(|&h| r.classification().class(h).order() == 2).unwrap();
    let phi = r.phi_ideal(c2, &r.augmentation_ideal()).map_err(|e| e.to_string())?;
    ensure!(phi.0 == 2, "phi^C2(I(S3)) = {phi}");
    Ok(format!("trichotomy holds for {} groups; phi^C2(I(S3)) = (2)", groups.len()))
}

fn criterion_3() -> Outcome {
    for (spec, p, top) in [("C2", 2u64, 10usize), ("C3", 3, 8)] {
        let r = ring(spec);
        let m = modules::regular_module(&r);
        let tower = modules::quotient_tower(&m, &r.augmentation_ideal(), top).map_err(|e| e.to_string())?;
        for n in 2..=top {
            let level = &tower.levels[n - 1];
            ensure!(level.n == n, "{spec}: level index {} at position {n}", level.n);
            let factors: Vec<String> = level.structure.invariant_factors.iter().map(|d| d.to_string()).collect();
            let want = p.pow(n as u32 - 1).to_string();
            ensure!(
                level.structure.free_rank == 1 && factors == [want.clone()],
                "{spec}: M/I^{n}M = {} but expected Z + Z/{want}",
                level.structure.describe()
            );
        }
    }
    Ok("A(C2)/I^n = Z + Z/2^(n-1) for n <= 10; A(C3)/I^n = Z + Z/3^(n-1) for n <= 8".into())
}

fn criterion_4() -> Outcome {
    let groups = ["S3", "D4", "A4", "C12", "S4"];
    let mut shown = Vec::new();
    for spec in groups {
        let r = ring(spec);
        let m = modules::regular_module(&r);
        let fp = r.classification().family(FamilyKind::PrimePower).map_err(|e| e.to_string())?;
        let sub = modules::restrict_to_family(&m, &fp).map_err(|e| e.to_string())?;
        let full = modules::tower_completion(&m, DEFAULT_DEPTH).map_err(|e| e.to_string())?;
        let restricted = modules::tower_completion(&sub.module, DEFAULT_DEPTH).map_err(|e| e.to_string())?;
        ensure!(!full.is_unresolved(), "{spec}: regular tower unresolved");
        ensure!(!restricted.is_unresolved(), "{spec}: FP tower unresolved");
        ensure!(full.same_shape(&restricted), "{spec}: regular {full} but FP-restriction {restricted}");
        shown.push(format!("{spec}: {full}"));
    }
    Ok(shown.join("; "))
}

const TEST_GROUPS: &[&str] = &["C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C8", "D4", "Q8", "D6", "A4", "C12", "S4"];

fn criterion_5() -> Outcome {
    for spec in TEST_GROUPS {
        let r = ring(spec);
        let m = modules::regular_module(&r);
        let closed = modules::closed_form_completion(&m).map_err(|e| e.to_string())?;
        let tower = modules::tower_completion(&m, DEFAULT_DEPTH).map_err(|e| e.to_string())?;
        ensure!(!tower.is_unresolved(), "{spec}: tower unresolved");
        ensure!(closed.same_shape(&tower), "{spec}: closed form {closed} but tower {tower}");
    }
    let r = ring("S3");
    let d = modules::tower_completion(&modules::regular_module(&r), DEFAULT_DEPTH).map_err(|e| e.to_string())?;
    ensure!(d.describe() == "Z + Z_2 + Z_3", "A(S3) completes to {d}");
    Ok(format!("closed form = tower for {} groups; A(S3) completes to {d}", TEST_GROUPS.len()))
}

fn criterion_6() -> Outcome {
    let cases = [("C2", "C2"), ("C3", "C2"), ("C2", "C3"), ("S3", "C2"), ("C2", "C1"), ("S3", "C1")];
    let mut shown = Vec::new();
    for (g, k) in cases {
        let r = ring(g);
        let target = group(k);
        let pairs = pair_classes(r.classification(), &target, DEFAULT_ORDER_BOUND).map_err(|e| e.to_string())?;
        let count = oracle_pair_count(r.classification().group(), &target);
        ensure!(pairs.len() == count, "({g},{k}): {} pair classes but oracle finds {count}", pairs.len());
        let report = stablemaps::crosscheck_escalating(&r, &pairs, DEFAULT_DEPTH, CROSSCHECK_RETRY_DEPTH)
            .map_err(|e| e.to_string())?;
        ensure!(
            report.status == CrosscheckStatus::Pass,
            "({g},{k}): {:?}: decomposition {}, closed form {}, tower {}",
            report.status,
            report.decomposition,
            report.closed_form,
            report.tower
        );
        let want = match (g, k) {
            ("C2", "C2") => Some("Z + Z_2^2"),
            ("S3", "C1") => Some("Z + Z_2 + Z_3"),
            _ => None,
        };
        if let Some(w) = want {
            for d in [&report.decomposition, &report.closed_form, &report.tower] {
                ensure!(d.describe() == w, "({g},{k}): got {d}, expected {w}");
            }
        }
        shown.push(format!("({g},{k}): {}", report.tower));
    }
    Ok(shown.join("; "))
}

/// Graph subgroups of `G × K` (trivial meet with `1 × K`), up to conjugacy.
fn oracle_graph_classes(g: &FiniteGroup, k: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let product = burnside_core::group::direct_product(&Arc::new(g.clone()), &Arc::new(k.clone()), usize::MAX)
        .expect("product");
    let gk = &product.group;
    let nk = k.order();
    oracle_all_subgroups(gk)
        .into_iter()
        .filter(|s| {
            // Index convention: (g, k) ↦ g·|K| + k; identity of G is 0.
            s.iter().filter(|&&x| x / nk == g.identity()).count() == 1
        })
        .map(|s| canonical_conjugate(gk, &s))
        .collect()
}

fn oracle_pair_count(g: &FiniteGroup, k: &FiniteGroup) -> usize {
    oracle_graph_classes(g, k).len()
}

fn criterion_7() -> Outcome {
    let c = subgroup_classes(&group("S3"));
    let d = stablemaps::dual_decomposition(&c, None).map_err(|e| e.to_string())?;
    let g = c.group();
    let got: Vec<(usize, usize, Option<u64>)> = d.summands.iter().map(|s| (s.h.order, s.weyl.order, s.prime)).collect();
    let oracle: Vec<(usize, usize, Option<u64>)> = [(1usize, Some(0u64)), (2, Some(2)), (3, Some(3))]
        .into_iter()
        .map(|(order, p)| {
            let h = c.representative((0..c.len()).find(|&i| c.class(i).order() == order).unwrap());
            (order, oracle_normalizer_order(g, h) / order, p)
        })
        .collect();
    ensure!(oracle == vec![(1, 6, Some(0)), (2, 1, Some(2)), (3, 2, Some(3))], "normalizer oracle disagrees: {oracle:?}");
    ensure!(got == oracle, "dual(S3) summands {got:?}");
    for s in &d.summands {
        ensure!(s.weyl_group.order() == s.weyl.order, "Weyl group report inconsistent");
    }
    let pi0 = stablemaps::pi0_descriptor(&d).map_err(|e| e.to_string())?;
    ensure!(pi0.describe() == "Z + Z_2 + Z_3", "pi0 of dual(S3) is {pi0}");
    let q8 = subgroup_classes(&group("Q8"));
    let dq = stablemaps::dual_decomposition(&q8, Some(2)).map_err(|e| e.to_string())?;
    ensure!(dq.summands.len() == 6, "dual(Q8, 2) has {} summands", dq.summands.len());
    ensure!(dq.summands.iter().all(|s| s.prime == Some(2)), "dual(Q8, 2) has an uncompleted summand");
    Ok("dual(S3) = (1,S3,0) + (C2,1,2) + (C3,C2,3); dual(Q8, 2) has 6 summands".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    for spec in TEST_GROUPS {
        let r = ring(spec);
        let n = r.rank();
        let random = |rng: &mut ChaCha8Rng| {
            let coeffs = (0..n).map(|_| rng.gen_range(-COEFFICIENT_RANGE..=COEFFICIENT_RANGE)).collect();
            r.element(coeffs).unwrap()
        };
        let one = r.one();
        let regular = modules::regular_module(&r);
        for _ in 0..RANDOM_ELEMENTS_PER_GROUP {
            let (x, y, z) = (random(&mut rng), random(&mut rng), random(&mut rng));
            let mul = |a: &_, b: &_| r.multiply(a, b).unwrap();
            ensure!(mul(&x, &y) == mul(&y, &x), "{spec}: product not commutative");
            ensure!(mul(&mul(&x, &y), &z) == mul(&x, &mul(&y, &z)), "{spec}: product not associative");
            ensure!(
                mul(&x, &y.add(&z).unwrap()) == mul(&x, &y).add(&mul(&x, &z)).unwrap(),
                "{spec}: product not distributive"
            );
            ensure!(mul(&x, &one) == x, "{spec}: [G/G] is not the unit");
            let mx = r.mark_vector(&x).unwrap();
            let my = r.mark_vector(&y).unwrap();
            let mxy = r.mark_vector(&mul(&x, &y)).unwrap();
            ensure!(
                mxy.iter().zip(mx.iter().zip(&my)).all(|(a, (b, c))| *a == b * c),
                "{spec}: marks not multiplicative"
            );
            let ax = regular.action(&x).unwrap();
            let ay = regular.action(&y).unwrap();
            let axy = regular.action(&mul(&x, &y)).unwrap();
            ensure!(modules::mat_mul(&ax, &ay) == axy, "{spec}: regular action is not a ring map");
        }
        let c = r.classification();
        for _ in 0..RANDOM_FAMILIES_PER_GROUP {
            // Downward closure of a random set of classes.
            let picks: Vec<usize> = (0..c.len()).filter(|_| rng.gen_bool(0.3)).collect();
            let members: Vec<usize> =
                (0..c.len()).filter(|&h| h == 0 || picks.iter().any(|&k| c.is_subconjugate(h, k))).collect();
            let family = c.family(FamilyKind::Custom(members.clone())).map_err(|e| format!("{spec}: {e}"))?;
            let sub = modules::restrict_to_family(&regular, &family).map_err(|e| format!("{spec}: {e}"))?;
            ensure!(sub.inclusion == members, "{spec}: restriction basis differs from the family");
            for k in 0..c.len() {
                let a = regular.basis_action(k);
                for j in &members {
                    for (i, row) in a.iter().enumerate() {
                        ensure!(row[*j] == 0 || members.contains(&i), "{spec}: family span not stable");
                    }
                }
                for (si, &i) in sub.inclusion.iter().enumerate() {
                    for (sj, &j) in sub.inclusion.iter().enumerate() {
                        ensure!(sub.module.basis_action(k)[si][sj] == a[i][j], "{spec}: restricted action differs");
                    }
                }
            }
        }
    }
    let mut pairs_checked = 0;
    let mut bundle_checked = 0;
    for g_spec in TEST_GROUPS {
        for k_spec in TEST_GROUPS {
            let g = group(g_spec);
            let k = group(k_spec);
            if g.order() * k.order() > MAX_PRODUCT_ORDER {
                continue;
            }
            let classification = subgroup_classes(&g);
            let pairs = pair_classes(&classification, &k, DEFAULT_ORDER_BOUND).map_err(|e| e.to_string())?;
            let oracle = oracle_graph_classes(&g, &k);
            ensure!(pairs.len() == oracle.len(), "({g_spec},{k_spec}): {} classes, oracle {}", pairs.len(), oracle.len());
            let hit: BTreeSet<usize> = oracle
                .iter()
                .map(|s| pairs.class_of_graph(&Subgroup::new(&pairs.product().group, s.clone()).unwrap()))
                .collect::<Option<_>>()
                .ok_or_else(|| format!("({g_spec},{k_spec}): an oracle graph subgroup has no class"))?;
            ensure!(hit.len() == pairs.len(), "({g_spec},{k_spec}): classes are not distinct");
            for i in 0..pairs.len() {
                let (w, n) = pairs.weyl_group(i).map_err(|e| e.to_string())?;
                ensure!(w.order() * pairs.classes()[i].graph.order() == n, "({g_spec},{k_spec}): |W||Δ| != |N|");
            }
            if k.order() == 1 {
                ensure!(pairs.len() == classification.len(), "{g_spec}: pairs with trivial K differ from classes");
            }
            pairs_checked += 1;
            // The bundle module must also be a module.
            if g.order() * k.order() <= 24 {
                let r = BurnsideRing::new(classification.clone());
                let m = modules::bundle_module(&r, &pairs).map_err(|e| e.to_string())?;
                for _ in 0..4 {
                    let coeffs: Vec<i64> = (0..r.rank()).map(|_| rng.gen_range(-2..=2)).collect();
                    let coeffs2: Vec<i64> = (0..r.rank()).map(|_| rng.gen_range(-2..=2)).collect();
                    let x = r.element(coeffs).unwrap();
                    let y = r.element(coeffs2).unwrap();
                    let lhs = m.action(&r.multiply(&x, &y).unwrap()).unwrap();
                    let rhs = modules::mat_mul(&m.action(&x).unwrap(), &m.action(&y).unwrap());
                    ensure!(lhs == rhs, "({g_spec},{k_spec}): bundle action is not a ring map");
                }
                bundle_checked += 1;
            }
        }
    }
    Ok(format!(
        "ring, mark, module and family properties over {} groups; pair completeness for {pairs_checked} products; {bundle_checked} bundle modules",
        TEST_GROUPS.len()
    ))
}

fn panic_message(e: &(dyn std::any::Any + Send)) -> String {
    match (e.downcast_ref::<String>(), e.downcast_ref::<&str>()) {
        (Some(s), _) => format!("panicked: {s}"),
        (_, Some(s)) => format!("panicked: {s}"),
        _ => "panicked".into(),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("table of marks", criterion_1, Duration::from_secs(1)),
        ("phi-ideal trichotomy", criterion_2, Duration::from_secs(5)),
        ("exact quotient towers", criterion_3, Duration::from_secs(5)),
        ("prime-power restriction", criterion_4, Duration::from_secs(30)),
        ("closed form vs tower", criterion_5, Duration::from_secs(30)),
        ("stable-map crosscheck", criterion_6, Duration::from_secs(60)),
        ("stable duals", criterion_7, Duration::from_secs(5)),
        ("property suite", criterion_8, Duration::from_secs(60)),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(panic_message(e.as_ref())));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > budget => Err(format!("{msg} (took {elapsed:.2?}, budget {budget:?})")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {} [{name}] {elapsed:.2?}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {} [{name}] {elapsed:.2?}: {msg}", i + 1)
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria failed");
        ExitCode::FAILURE
    }
}
