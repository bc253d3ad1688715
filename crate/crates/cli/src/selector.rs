//! Subgroup selectors: `elements:..`, `gens:..`, `derived`, `index:q`,
//! `trivial`, `whole`.

use rootcond_core::group::{is_normal, normal_subgroups, FiniteGroup, Subgroup};
use rootcond_core::{Error, Result};

fn indices(list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::Parse(format!("bad element index {s:?}"))))
        .collect()
}

/// Subgroup generated by all commutators.
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let mut comms: Vec<usize> = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            comms.push(c);
        }
    }
    comms.sort_unstable();
    comms.dedup();
    Subgroup::generated(g, &comms).expect("commutators lie in the group")
}

pub fn select_subgroup(g: &FiniteGroup, selector: &str) -> Result<Subgroup> {
    let check = |xs: &[usize]| -> Result<()> {
        match xs.iter().find(|&&x| x >= g.order()) {
            Some(x) => Err(Error::InvalidInput(format!("element {x} outside a group of order {}", g.order()))),
            None => Ok(()),
        }
    };
    let (kind, arg) = selector.split_once(':').unwrap_or((selector, ""));
    match kind.trim() {
        "elements" => {
            let xs = indices(arg)?;
            check(&xs)?;
            Subgroup::new(g, xs)
        }
        "gens" => {
            let xs = indices(arg)?;
            check(&xs)?;
            Subgroup::generated(g, &xs)
        }
        "derived" => Ok(derived_subgroup(g)),
        "trivial" => Ok(Subgroup::trivial(g)),
        "whole" => Ok(Subgroup::whole(g)),
        "index" => {
            let q: usize = arg.trim().parse().map_err(|_| Error::Parse(format!("bad index {arg:?}")))?;
            let found: Vec<Subgroup> = normal_subgroups(g).into_iter().filter(|h| h.index() == q).collect();
            match found.len() {
                1 => Ok(found.into_iter().next().expect("one match")),
                0 => Err(Error::InvalidInput(format!("no normal subgroup of index {q}"))),
                n => Err(Error::InvalidInput(format!(
                    "{n} normal subgroups of index {q}; pick one with elements: ({})",
                    found.iter().map(|h| format!("{:?}", h.elements())).collect::<Vec<_>>().join(", ")
                ))),
            }
        }
        other => Err(Error::Parse(format!(
            "unknown subgroup selector {other:?}; use elements:, gens:, derived, index:, trivial or whole"
        ))),
    }
}

pub fn select_normal(g: &FiniteGroup, selector: &str) -> Result<Subgroup> {
    let h = select_subgroup(g, selector)?;
    if is_normal(g, &h) {
        Ok(h)
    } else {
        Err(Error::NotNormal)
    }
}
