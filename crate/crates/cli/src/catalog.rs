//! Builtin groups, bundled ramification contexts and bound datasets.

use std::path::Path;

use rootcond_core::conductor::{BoundDataset, ContextFile, GaloisContext, GroupRef};
use rootcond_core::group::{build_from_permutations, direct_product, io::parse_group, FiniteGroup, DEFAULT_ORDER_CAP};
use rootcond_core::{Error, Result};

/// Largest order reachable through on-demand products.
pub const PRODUCT_CAP: usize = 216;

const CONTEXTS: &[(&str, &str)] = &[
    ("quintic11", include_str!("../data/quintic11.json")),
    ("gauss", include_str!("../data/gauss.json")),
    ("quad-m23", include_str!("../data/quad-m23.json")),
    ("s3-m23", include_str!("../data/s3-m23.json")),
];

const BOUND_DATASETS: &[(&str, &str)] = &[("martinet-constants", include_str!("../data/martinet-constants.json"))];

fn cyclic(n: usize) -> FiniteGroup {
    let gen: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    build_from_permutations(n, &[gen], DEFAULT_ORDER_CAP).expect("cyclic group")
}

fn dihedral(n: usize) -> FiniteGroup {
    if n == 2 {
        return direct_product(&cyclic(2), &cyclic(2), DEFAULT_ORDER_CAP).expect("Klein four");
    }
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    build_from_permutations(n, &[rot, refl], DEFAULT_ORDER_CAP).expect("dihedral group")
}

fn symmetric(n: usize) -> FiniteGroup {
    if n == 1 {
        return build_from_permutations(1, &[], DEFAULT_ORDER_CAP).expect("trivial group");
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    build_from_permutations(n, &[swap, cycle], DEFAULT_ORDER_CAP).expect("symmetric group")
}

/// Quaternion units `1, -1, i, -i, j, -j, k, -k` in that order.
fn quaternion() -> FiniteGroup {
    // unit as (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k
    let unit = |x: usize| (if x % 2 == 0 { 1i8 } else { -1 }, x / 2);
    let index = |s: i8, a: usize| 2 * a + usize::from(s < 0);
    let times = |a: usize, b: usize| -> (i8, usize) {
        match (a, b) {
            (0, b) => (1, b),
            (a, 0) => (1, a),
            (a, b) if a == b => (-1, 0),
            (1, 2) => (1, 3),
            (2, 3) => (1, 1),
            (3, 1) => (1, 2),
            (2, 1) => (-1, 3),
            (3, 2) => (-1, 1),
            (1, 3) => (-1, 2),
            _ => unreachable!(),
        }
    };
    let table: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let ((sx, ax), (sy, ay)) = (unit(x), unit(y));
                    let (s, a) = times(ax, ay);
                    index(sx * sy * s, a)
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    FiniteGroup::from_table(&table).expect("quaternion table").with_labels(labels)
}

fn base_group(name: &str) -> Option<FiniteGroup> {
    let num = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    let g = if name == "Q8" {
        quaternion()
    } else if let Some(n) = num("C").filter(|n| (1..=24).contains(n)) {
        cyclic(n)
    } else if let Some(n) = num("D").filter(|n| (2..=12).contains(n)) {
        dihedral(n)
    } else if let Some(n) = num("S").filter(|n| (1..=4).contains(n)) {
        symmetric(n)
    } else {
        return None;
    };
    Some(g.named(name))
}

/// Names of the builtin (non-product) groups.
pub fn base_names() -> Vec<String> {
    let mut out: Vec<String> = (1..=24).map(|n| format!("C{n}")).collect();
    out.extend((2..=12).map(|n| format!("D{n}")));
    out.extend((1..=4).map(|n| format!("S{n}")));
    out.push("Q8".into());
    out
}

/// Resolves a builtin name, an `AxB[xC...]` product of builtins, or a group
/// file path.
pub fn resolve_group(reference: &str, max_order: usize) -> Result<FiniteGroup> {
    if let Some(g) = builtin(reference, max_order)? {
        return Ok(g);
    }
    let path = Path::new(reference);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{reference}: {e}")))?;
        let g = parse_group(&text, max_order.max(DEFAULT_ORDER_CAP))?;
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(reference);
        return Ok(g.named(stem));
    }
    Err(Error::Parse(format!("{reference:?} is neither a catalog group nor a readable group file")))
}

fn builtin(reference: &str, max_order: usize) -> Result<Option<FiniteGroup>> {
    let parts: Vec<&str> = reference.split('x').collect();
    let mut factors = Vec::with_capacity(parts.len());
    for p in &parts {
        match base_group(p) {
            Some(g) => factors.push(g),
            None => return Ok(None),
        }
    }
    let cap = max_order.max(PRODUCT_CAP);
    let mut g = factors[0].clone();
    for f in &factors[1..] {
        g = direct_product(&g, f, cap)?;
    }
    Ok(Some(g.named(reference)))
}

/// Every catalog group of order at most `max_order` used by the sweeps:
/// the builtins plus products of two nontrivial builtin factors and a few
/// triple products.
pub fn sweep_groups(max_order: usize) -> Vec<FiniteGroup> {
    let mut names: Vec<String> = base_names();
    let factors: Vec<String> =
        base_names().into_iter().filter(|n| !matches!(n.as_str(), "C1" | "S1" | "S2")).collect();
    let order_of = |n: &str| base_group(n).map_or(usize::MAX, |g| g.order());
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            if order_of(a) * order_of(b) <= max_order {
                names.push(format!("{a}x{b}"));
            }
        }
    }
    for t in ["C2xC2xC2", "C2xC2xC3", "C2xC2xS3", "C2xC2xC4", "C3xC3xC2"] {
        names.push(t.into());
    }
    names
        .into_iter()
        .filter_map(|n| builtin(&n, max_order).ok().flatten())
        .filter(|g| g.order() <= max_order)
        .collect()
}

pub fn context_names() -> Vec<&'static str> {
    CONTEXTS.iter().map(|(n, _)| *n).collect()
}

pub fn bound_dataset_names() -> Vec<&'static str> {
    BOUND_DATASETS.iter().map(|(n, _)| *n).collect()
}

/// Resolves a bundled context name or a ramification data file path.
pub fn resolve_context(reference: &str, max_order: usize) -> Result<GaloisContext> {
    let (text, fallback) = match CONTEXTS.iter().find(|(n, _)| *n == reference) {
        Some((name, text)) => (text.to_string(), name.to_string()),
        None => {
            let text = std::fs::read_to_string(reference)
                .map_err(|e| Error::Parse(format!("{reference:?} is neither a bundled context nor readable: {e}")))?;
            (text, reference.to_string())
        }
    };
    let file = ContextFile::parse(&text)?;
    let group = match &file.group {
        GroupRef::Name(n) => resolve_group(n, max_order)?,
        GroupRef::Table { table } => FiniteGroup::from_table(table)?,
    };
    let ctx = file.build(&group)?;
    Ok(if file.name.is_none() { ctx.named(fallback) } else { ctx })
}

pub fn bound_dataset(reference: &str) -> Result<BoundDataset> {
    let text = match BOUND_DATASETS.iter().find(|(n, _)| *n == reference) {
        Some((_, text)) => text.to_string(),
        None => std::fs::read_to_string(reference)
            .map_err(|e| Error::Parse(format!("{reference:?} is neither a bundled dataset nor readable: {e}")))?,
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bound dataset: {e}")))
}
