//! On-disk cache of subgroup classifications.
//!
//! Entries are keyed by the literal group spec; anything unreadable, stale
//! or inconsistent is ignored and recomputed.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use burnside_core::{FiniteGroup, Subgroup, SubgroupClass, SubgroupClassification};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CachedClass {
    order: usize,
    representative: Vec<usize>,
    orbit: Vec<Vec<usize>>,
    normalizer_order: usize,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    format_version: u32,
    spec: String,
    order: usize,
    classes: Vec<CachedClass>,
    subconjugate: Vec<Vec<bool>>,
}

/// FNV-1a, so distinct specs that sanitize alike get distinct files.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub fn entry_path(dir: &Path, spec: &str) -> PathBuf {
    let safe: String = spec.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).take(48).collect();
    dir.join(format!("{safe}-{:016x}.json", fnv1a(spec)))
}

pub fn load_or_compute(dir: &Path, spec: &str, group: Arc<FiniteGroup>) -> SubgroupClassification {
    let path = entry_path(dir, spec);
    if let Some(c) = load(&path, spec, &group) {
        return c;
    }
    let c = SubgroupClassification::new(group);
    // A failed write only costs a recomputation next time.
    let _ = store(dir, &path, spec, &c);
    c
}

fn load(path: &Path, spec: &str, group: &Arc<FiniteGroup>) -> Option<SubgroupClassification> {
    let entry: CacheEntry = serde_json::from_slice(&fs::read(path).ok()?).ok()?;
    if entry.format_version != FORMAT_VERSION || entry.spec != spec || entry.order != group.order() {
        return None;
    }
    let classes = entry
        .classes
        .into_iter()
        .map(|c| {
            let representative = Subgroup::new(group, c.representative).ok()?;
            if representative.order() != c.order {
                return None;
            }
            let orbit = c.orbit.into_iter().map(|m| Subgroup::new(group, m).ok()).collect::<Option<_>>()?;
            Some(SubgroupClass {
                representative,
                orbit,
                normalizer_order: c.normalizer_order,
            })
        })
        .collect::<Option<Vec<_>>>()?;
    SubgroupClassification::from_parts(group.clone(), classes, entry.subconjugate).ok()
}

fn store(dir: &Path, path: &Path, spec: &str, c: &SubgroupClassification) -> std::io::Result<()> {
    let entry = CacheEntry {
        format_version: FORMAT_VERSION,
        spec: spec.to_string(),
        order: c.group().order(),
        classes: c
            .classes()
            .iter()
            .map(|k| CachedClass {
                order: k.order(),
                representative: k.representative.members().to_vec(),
                orbit: k.orbit.iter().map(|s| s.members().to_vec()).collect(),
                normalizer_order: k.normalizer_order,
            })
            .collect(),
        subconjugate: c.subconjugacy_matrix().to_vec(),
    };
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec(&entry)?)?;
    fs::rename(tmp, path)
}
