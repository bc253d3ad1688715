use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{dixon, inner_product, Character, ClassFunction};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::scalar::Cyclotomic;

/// The irreducible characters of a group in canonical order: degree
/// ascending, then values compared lexicographically (over `Q(zeta_e)`
/// coordinates, `e` the group exponent) in descending order, which puts the
/// trivial character first.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: FiniteGroup,
    rows: Vec<Character>,
}

/// Computes the exact character table.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    if g.order() > DEFAULT_ORDER_CAP {
        return Err(Error::TooLarge { cap: DEFAULT_ORDER_CAP });
    }
    let e = g.exponent() as u32;
    let mut rows = dixon::irreducible_values(g)?;
    rows.sort_by(|a, b| {
        let da = a[0].to_integer();
        let db = b[0].to_integer();
        da.cmp(&db).then_with(|| {
            for (x, y) in a.iter().zip(b) {
                match y.cmp_lifted(x, e) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
    });

    let mut characters = Vec::with_capacity(rows.len());
    for values in rows {
        let ch = Character::new(ClassFunction::new(g, values)?)?;
        if !ch.is_irreducible() {
            return Err(Error::InternalContradiction("lifted row fails <chi, chi> = 1".into()));
        }
        characters.push(ch);
    }
    let sum_sq: BigInt = characters.iter().map(|c| BigInt::from(c.degree()).pow(2)).sum();
    if sum_sq != BigInt::from(g.order()) {
        return Err(Error::InternalContradiction(format!(
            "sum of squared degrees is {sum_sq}, group order {}",
            g.order()
        )));
    }
    Ok(CharacterTable { group: g.clone(), rows: characters })
}

impl CharacterTable {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn rows(&self) -> &[Character] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(Character::degree).collect()
    }

    pub fn max_degree(&self) -> u64 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Row index of an irreducible class function.
    pub fn index_of(&self, f: &ClassFunction) -> Option<usize> {
        self.rows.iter().position(|r| r.class_function() == f)
    }

    /// `<chi_i, chi_j> = delta_ij` for every pair of rows.
    pub fn rows_orthonormal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, a)| {
            self.rows.iter().enumerate().all(|(j, b)| {
                let ip = inner_product(a.class_function(), b.class_function()).expect("same group");
                ip == Cyclotomic::from_int(i64::from(i == j))
            })
        })
    }

    /// `sum_chi chi(g_a) conj(chi(g_b)) = delta_ab |C_G(g_a)|`.
    pub fn columns_orthogonal(&self) -> bool {
        let classes = self.group.classes();
        let k = classes.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let s: Cyclotomic = self.rows.iter().map(|r| &r.values()[a] * &r.values()[b].conj()).sum();
                let expected = if a == b { (self.group.order() / classes.classes[a].len()) as i64 } else { 0 };
                s == Cyclotomic::from_int(expected)
            })
        })
    }

    /// Aligned text grid, values as polynomials in `z<e>`.
    pub fn render_text(&self) -> String {
        let g = &self.group;
        let classes = g.classes();
        let mut grid: Vec<Vec<String>> = Vec::new();
        grid.push(std::iter::once("class".to_string()).chain((0..classes.len()).map(|i| i.to_string())).collect());
        grid.push(std::iter::once("size".to_string()).chain(classes.sizes().iter().map(|s| s.to_string())).collect());
        grid.push(
            std::iter::once("order".to_string())
                .chain(classes.representatives().iter().map(|&r| g.element_order(r).to_string()))
                .collect(),
        );
        for (i, row) in self.rows.iter().enumerate() {
            grid.push(std::iter::once(format!("X.{i}")).chain(row.values().iter().map(|v| v.to_string())).collect());
        }
        let ncols = grid[0].len();
        let widths: Vec<usize> = (0..ncols).map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();

        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} (order {}, {} classes)",
            g.name().unwrap_or("group"),
            g.order(),
            classes.len()
        );
        for row in &grid {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(c, (s, w))| if c == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") })
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        out
    }

    pub fn to_json(&self) -> TableJson {
        let g = &self.group;
        let classes = g.classes();
        let e = g.exponent() as u32;
        TableJson {
            group: g.name().unwrap_or("group").to_string(),
            order: g.order(),
            exponent: e,
            class_sizes: classes.sizes(),
            class_representatives: classes.representatives(),
            rows: self
                .rows
                .iter()
                .map(|r| r.values().iter().map(|v| v.lift(e).iter().map(ToString::to_string).collect()).collect())
                .collect(),
        }
    }
}

/// Structured form of a character table. Each value is its coordinate vector
/// in the power basis of `Q(zeta_exponent)`, coefficients as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub group: String,
    pub order: usize,
    pub exponent: u32,
    pub class_sizes: Vec<usize>,
    pub class_representatives: Vec<usize>,
    pub rows: Vec<Vec<Vec<String>>>,
}
