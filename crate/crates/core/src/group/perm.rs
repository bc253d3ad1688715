use std::collections::HashMap;
use std::fmt;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// A permutation of `0..degree`, stored as its image list.
///
/// Products compose left to right: `(p * q)(x) = q(p(x))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &i in &images {
            if i >= n || hit[i] {
                return Err(Error::InvalidInput(format!("{images:?} is not a bijection on {n} points")));
            }
            hit[i] = true;
        }
        Ok(Permutation(images.into_iter().map(|i| i as u32).collect()))
    }

    pub fn identity(degree: usize) -> Permutation {
        Permutation((0..degree as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }
}

/// Cycle notation on 0-based points, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Closes a set of permutations under composition.
///
/// Elements are numbered in breadth-first discovery order from the identity,
/// extending words on the right by generators in the given order, so element
/// `i` is reached by the shortest, then lexicographically least, word.
pub fn build_from_permutations(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<FiniteGroup> {
    let gens: Vec<Permutation> = generators
        .iter()
        .map(|g| {
            if g.len() != degree {
                return Err(Error::InvalidInput(format!(
                    "generator {g:?} does not act on {degree} points"
                )));
            }
            Permutation::new(g.clone())
        })
        .collect::<Result<_>>()?;

    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(elements[0].clone(), 0)]);
    // parent[i] = (j, k) with element i = element j * generator k
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut right: Vec<Vec<u32>> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (k, s) in gens.iter().enumerate() {
            let p = elements[head].then(s);
            let idx = match index.get(&p) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::TooLarge { cap });
                    }
                    let i = elements.len();
                    index.insert(p.clone(), i);
                    elements.push(p);
                    parent.push(Some((head, k)));
                    i
                }
            };
            row.push(idx as u32);
        }
        right.push(row);
        head += 1;
    }

    // Fill the table column by column along the discovery tree:
    // a * b = (a * parent(b)) * gen.
    let n = elements.len();
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        mul[a * n] = a as u32;
    }
    for b in 1..n {
        let (pb, k) = parent[b].expect("non-root element has a parent");
        for a in 0..n {
            let ap = mul[a * n + pb] as usize;
            mul[a * n + b] = right[ap][k];
        }
    }
    let mut inv = vec![0u32; n];
    for a in 0..n {
        for b in 0..n {
            if mul[a * n + b] == 0 {
                inv[a] = b as u32;
                break;
            }
        }
    }
    let labels = elements.iter().map(|p| p.to_string()).collect();
    Ok(FiniteGroup::from_parts(n, mul, inv, 0, Some(labels)))
}
