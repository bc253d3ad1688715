//! Clifford theory over a normal subgroup: inertia groups, the decomposition
//! of restrictions into conjugate orbits, the restricted/induced dichotomy for
//! prime index, extensions of invariant characters, and the step-by-step
//! construction of a large-degree irreducible character along a chain of
//! normal subgroups with non-abelian factors.

use serde::{Deserialize, Serialize};

use crate::character::{
    character_table, conjugate_unchecked, decompose, induce, inflate, inner_product, pointwise_product, restrict,
    Character, CharacterTable, ClassFunction,
};
use crate::error::{Error, Result};
use crate::group::{is_normal, quotient, FiniteGroup, Subgroup};
use crate::scalar::Cyclotomic;

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// A normal subgroup together with the character tables of both groups.
#[derive(Clone, Debug)]
pub struct NormalPair {
    sub: Subgroup,
    table: CharacterTable,
    sub_table: CharacterTable,
}

impl NormalPair {
    pub fn new(sub: &Subgroup) -> Result<NormalPair> {
        let g = sub.parent();
        if !is_normal(g, sub) {
            return Err(Error::NotNormal);
        }
        Ok(NormalPair {
            sub: sub.clone(),
            table: character_table(g)?,
            sub_table: character_table(sub.group())?,
        })
    }

    /// Reuses an already computed table of the parent group.
    pub fn with_table(sub: &Subgroup, table: CharacterTable) -> Result<NormalPair> {
        if !table.group().same(sub.parent()) {
            return Err(Error::GroupMismatch);
        }
        if !is_normal(sub.parent(), sub) {
            return Err(Error::NotNormal);
        }
        Ok(NormalPair { sub: sub.clone(), sub_table: character_table(sub.group())?, table })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.sub.parent()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn sub_table(&self) -> &CharacterTable {
        &self.sub_table
    }

    pub fn index(&self) -> usize {
        self.sub.index()
    }

    fn prime_index(&self) -> Result<usize> {
        let q = self.index();
        if is_prime(q) {
            Ok(q)
        } else {
            Err(Error::IndexNotPrime(q))
        }
    }

    fn sub_irreducible(&self, theta: &ClassFunction) -> Result<usize> {
        if !theta.group().same(self.sub.group()) {
            return Err(Error::GroupMismatch);
        }
        self.sub_table.index_of(theta).ok_or(Error::NotIrreducible)
    }

    fn irreducible(&self, chi: &ClassFunction) -> Result<usize> {
        if !chi.group().same(self.group()) {
            return Err(Error::GroupMismatch);
        }
        self.table.index_of(chi).ok_or(Error::NotIrreducible)
    }

    /// `theta^g`.
    pub fn conjugate(&self, theta: &ClassFunction, g: usize) -> ClassFunction {
        conjugate_unchecked(theta, &self.sub, g)
    }

    /// `I_G(theta) = { g : theta^g = theta }`.
    pub fn inertia_group(&self, theta: &ClassFunction) -> Result<Subgroup> {
        self.sub_irreducible(theta)?;
        let g = self.group();
        let stab: Vec<usize> = g.elements().filter(|&x| self.conjugate(theta, x) == *theta).collect();
        Subgroup::new(g, stab)
    }

    /// Distinct conjugates of `theta`, as sub-table row indices in ascending order.
    pub fn orbit(&self, theta: &ClassFunction) -> Result<Vec<usize>> {
        self.sub_irreducible(theta)?;
        let mut idx: Vec<usize> = self
            .group()
            .elements()
            .map(|x| self.sub_table.index_of(&self.conjugate(theta, x)).expect("conjugates stay irreducible"))
            .collect();
        idx.sort_unstable();
        idx.dedup();
        Ok(idx)
    }

    /// Under prime index the inertia group is all of `G` or exactly `H`.
    pub fn inertia_dichotomy(&self, theta: &ClassFunction) -> Result<InertiaKind> {
        self.prime_index()?;
        let inertia = self.inertia_group(theta)?;
        if inertia.order() == self.group().order() {
            Ok(InertiaKind::WholeGroup)
        } else if inertia == self.sub {
            Ok(InertiaKind::Subgroup)
        } else {
            Err(Error::InternalContradiction(format!(
                "inertia group of order {} strictly between H and G",
                inertia.order()
            )))
        }
    }

    /// `Res chi = e * (sum of the G-conjugates of theta)` for the first
    /// constituent `theta` of the restriction.
    pub fn decomposition(&self, chi: &ClassFunction) -> Result<CliffordDecomposition> {
        self.irreducible(chi)?;
        let res = restrict(chi, &self.sub)?;
        let parts = decompose(&res, &self.sub_table)?;
        let &(theta_index, e) = parts
            .first()
            .ok_or_else(|| Error::InternalContradiction("restriction has no constituent".into()))?;
        let theta = self.sub_table.rows()[theta_index].class_function().clone();
        let orbit = self.orbit(&theta)?;
        let inertia = self.inertia_group(&theta)?;

        let orbit_sum = orbit
            .iter()
            .map(|&i| self.sub_table.rows()[i].class_function().clone())
            .reduce(|a, b| &a + &b)
            .expect("orbit is nonempty");
        let restriction_matches = res == orbit_sum.scale(e as i64);

        Ok(CliffordDecomposition {
            theta_index,
            theta,
            e,
            orbit,
            inertia_order: inertia.order(),
            restriction_matches,
        })
    }

    /// Restricted case (`Res chi = theta`) or induced case (`chi = Ind theta`).
    pub fn classify(&self, chi: &ClassFunction) -> Result<Classification> {
        self.prime_index()?;
        let d = self.decomposition(chi)?;
        let res = restrict(chi, &self.sub)?;
        let restricted_holds = res == d.theta;
        let induced_holds = induce(&d.theta, &self.sub)? == *chi;
        let t = d.t();
        let q = self.index();
        let kind = match (restricted_holds, induced_holds) {
            (true, false) if d.e == 1 && t == 1 => CaseKind::Restricted,
            (false, true) if d.e == 1 && t == q => CaseKind::Induced,
            _ => {
                return Err(Error::InternalContradiction(format!(
                    "classification failed: restricted={restricted_holds}, induced={induced_holds}, e={}, t={t}",
                    d.e
                )))
            }
        };
        let extension = (kind == CaseKind::Restricted).then(|| chi.clone());
        Ok(Classification {
            kind,
            theta_index: d.theta_index,
            theta: d.theta,
            extension,
            orbit: d.orbit,
            e: d.e,
            t,
            restricted_holds,
            induced_holds,
        })
    }

    /// Irreducible characters of `G` restricting to an invariant `theta`.
    ///
    /// For prime index an invariant character always extends, so an empty
    /// scan is reported as an internal contradiction.
    pub fn find_extension(&self, theta: &ClassFunction) -> Result<Extension> {
        self.prime_index()?;
        let inertia = self.inertia_group(theta)?;
        if inertia.order() != self.group().order() {
            return Err(Error::NotInvariant);
        }
        let mut all = Vec::new();
        for (i, chi) in self.table.rows().iter().enumerate() {
            if restrict(chi.class_function(), &self.sub)? == *theta {
                all.push(i);
            }
        }
        let first = *all
            .first()
            .ok_or_else(|| Error::InternalContradiction("invariant character has no extension".into()))?;
        Ok(Extension { character: self.table.rows()[first].clone(), index: first, all })
    }

    /// An irreducible constituent of `Ind theta` of maximal degree (ties go to
    /// the first in table order); its degree is at least `theta(1)`.
    pub fn promote_degree(&self, theta: &ClassFunction) -> Result<Character> {
        if !theta.group().same(self.sub.group()) {
            return Err(Error::GroupMismatch);
        }
        let ind = induce(theta, &self.sub)?;
        let (i, _) = max_degree_constituent(&ind, &self.table)?;
        Ok(self.table.rows()[i].clone())
    }
}

fn max_degree_constituent(f: &ClassFunction, table: &CharacterTable) -> Result<(usize, u64)> {
    let parts = decompose(f, table)?;
    let mut best: Option<(usize, u64)> = None;
    for (i, m) in parts {
        let d = table.rows()[i].degree();
        if best.is_none_or(|(bi, _)| d > table.rows()[bi].degree()) {
            best = Some((i, m));
        }
    }
    best.ok_or_else(|| Error::NotACharacter("zero class function has no constituents".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InertiaKind {
    WholeGroup,
    Subgroup,
}

#[derive(Clone, Debug)]
pub struct CliffordDecomposition {
    pub theta_index: usize,
    pub theta: ClassFunction,
    pub e: u64,
    /// Sub-table indices of the distinct conjugates of `theta`.
    pub orbit: Vec<usize>,
    pub inertia_order: usize,
    /// Whether `Res chi = e * sum(orbit)` held exactly.
    pub restriction_matches: bool,
}

impl CliffordDecomposition {
    pub fn t(&self) -> usize {
        self.orbit.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseKind {
    /// `Res chi` is irreducible.
    Restricted,
    /// `chi` is induced from the subgroup.
    Induced,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub kind: CaseKind,
    pub theta_index: usize,
    pub theta: ClassFunction,
    /// `chi` itself in the restricted case.
    pub extension: Option<ClassFunction>,
    pub orbit: Vec<usize>,
    pub e: u64,
    pub t: usize,
    pub restricted_holds: bool,
    pub induced_holds: bool,
}

#[derive(Clone, Debug)]
pub struct Extension {
    /// The canonical (first in table order) extension.
    pub character: Character,
    pub index: usize,
    /// Table indices of every extension.
    pub all: Vec<usize>,
}

/// `1 = N_0 <= N_1 <= ... <= N_n = G`, each `N_i` normal in `G` and each
/// factor `N_i / N_{i-1}` non-abelian.
#[derive(Clone, Debug)]
pub struct NormalChain {
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
}

impl NormalChain {
    pub fn new(group: &FiniteGroup, subgroups: Vec<Subgroup>) -> Result<NormalChain> {
        let (first, last) = match (subgroups.first(), subgroups.last()) {
            (Some(f), Some(l)) if subgroups.len() >= 2 => (f, l),
            _ => return Err(Error::BadChain("need at least the trivial subgroup and the whole group".into())),
        };
        if !first.is_trivial() {
            return Err(Error::BadChain("chain must start at the trivial subgroup".into()));
        }
        if last.order() != group.order() {
            return Err(Error::BadChain("chain must end at the whole group".into()));
        }
        for (i, s) in subgroups.iter().enumerate() {
            if !s.parent().same(group) {
                return Err(Error::BadChain(format!("N_{i} is not a subgroup of the chain's group")));
            }
            if !is_normal(group, s) {
                return Err(Error::BadChain(format!("N_{i} is not normal in G")));
            }
        }
        for (i, w) in subgroups.windows(2).enumerate() {
            if !w[0].is_subset_of(&w[1]) {
                return Err(Error::BadChain(format!("N_{i} is not contained in N_{}", i + 1)));
            }
            let inner = w[0].inside(&w[1])?;
            let (factor, _) = quotient(w[1].group(), &inner)?;
            if factor.is_abelian() {
                return Err(Error::BadChain(format!("N_{} / N_{i} is abelian", i + 1)));
            }
        }
        Ok(NormalChain { group: group.clone(), subgroups })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    /// Number of non-abelian steps.
    pub fn length(&self) -> usize {
        self.subgroups.len() - 1
    }
}

/// What happened at one step of [`construct_large_degree`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    /// Degree of the character carried up from the previous subgroup.
    pub previous_degree: u64,
    /// Orbit length of that character under the next subgroup.
    pub t: usize,
    /// Its multiplicity in the chosen constituent.
    pub e: u64,
    /// Degree of the multiplied quotient character, if one was used.
    pub beta_degree: Option<u64>,
    pub degree: u64,
}

#[derive(Clone, Debug)]
pub struct LargeDegree {
    pub character: Character,
    pub steps: Vec<ChainStep>,
}

impl LargeDegree {
    pub fn degree(&self) -> u64 {
        self.character.degree()
    }
}

/// Builds an irreducible character of degree at least `2^n` along a chain of
/// `n` non-abelian steps.
///
/// At each step the current character `psi` of `N_{m-1}` is induced to `N_m`
/// and a constituent of maximal degree is kept. When `psi` is `N_m`-invariant
/// and that constituent restricts to exactly `psi`, it is multiplied by the
/// inflation of the smallest quotient character of degree at least 2.
pub fn construct_large_degree(chain: &NormalChain) -> Result<LargeDegree> {
    let subs = chain.subgroups();
    let mut psi = ClassFunction::trivial(subs[0].group());
    let mut steps = Vec::with_capacity(chain.length());
    for w in subs.windows(2) {
        let (lower, upper) = (&w[0], &w[1]);
        let inner = lower.inside(upper)?;
        // same element numbering, different group handle
        psi = relabel(&psi, inner.group());
        let pair = NormalPair::new(&inner)?;
        let previous_degree = psi.degree_u64();

        let t = pair.orbit(&psi)?.len();
        let ind = induce(&psi, &inner)?;
        let (best, e) = max_degree_constituent(&ind, pair.table())?;
        let chosen = pair.table().rows()[best].class_function().clone();

        let (next, beta_degree) = if t == 1 && e == 1 {
            let (factor, projection) = quotient(upper.group(), &inner)?;
            let factor_table = character_table(&factor)?;
            let beta = factor_table
                .rows()
                .iter()
                .filter(|b| b.degree() >= 2)
                .min_by_key(|b| b.degree())
                .ok_or_else(|| Error::BadChain("non-abelian factor without a character of degree >= 2".into()))?;
            let lifted = inflate(beta.class_function(), upper.group(), &projection)?;
            (pointwise_product(&chosen, &lifted)?, Some(beta.degree()))
        } else {
            (chosen, None)
        };

        if inner_product(&next, &next)? != Cyclotomic::one() {
            return Err(Error::InternalContradiction("chain step produced a reducible character".into()));
        }
        let degree = next.degree_u64();
        if degree < 2 * previous_degree {
            return Err(Error::InternalContradiction(format!(
                "chain step grew degree only from {previous_degree} to {degree}"
            )));
        }
        steps.push(ChainStep { previous_degree, t, e, beta_degree, degree });
        psi = next;
    }

    // The last subgroup is all of G with identical element numbering.
    let g = chain.group();
    let top = subs.last().expect("nonempty chain");
    let on_g = ClassFunction::from_fn(g, |x| psi.at(top.position(x).expect("whole group")).clone());
    let character = Character::new(on_g)?;
    let n = chain.length() as u32;
    if character.degree() < 1u64 << n {
        return Err(Error::InternalContradiction(format!(
            "constructed degree {} is below 2^{n}",
            character.degree()
        )));
    }
    Ok(LargeDegree { character, steps })
}

fn relabel(f: &ClassFunction, target: &FiniteGroup) -> ClassFunction {
    debug_assert_eq!(f.group().order(), target.order());
    ClassFunction::from_fn(target, |x| f.at(x).clone())
}

pub fn inertia_group(h: &Subgroup, theta: &ClassFunction) -> Result<Subgroup> {
    NormalPair::new(h)?.inertia_group(theta)
}

pub fn inertia_dichotomy(h: &Subgroup, theta: &ClassFunction) -> Result<InertiaKind> {
    NormalPair::new(h)?.inertia_dichotomy(theta)
}

pub fn clifford_decomposition(chi: &ClassFunction, h: &Subgroup) -> Result<CliffordDecomposition> {
    NormalPair::new(h)?.decomposition(chi)
}

pub fn classify_irreducible(chi: &ClassFunction, h: &Subgroup) -> Result<Classification> {
    NormalPair::new(h)?.classify(chi)
}

pub fn find_extension(theta: &ClassFunction, h: &Subgroup) -> Result<Extension> {
    NormalPair::new(h)?.find_extension(theta)
}

pub fn promote_degree(theta: &ClassFunction, h: &Subgroup) -> Result<Character> {
    NormalPair::new(h)?.promote_degree(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_from_permutations, direct_product, left_factor, DEFAULT_ORDER_CAP};

    fn s3() -> FiniteGroup {
        build_from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_CAP).unwrap()
    }

    fn d4() -> FiniteGroup {
        // symmetries of the square on points 0..4: rotation and a reflection
        build_from_permutations(4, &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]], DEFAULT_ORDER_CAP).unwrap()
    }

    fn s3_a3() -> NormalPair {
        let g = s3();
        NormalPair::new(&Subgroup::generated(&g, &[2]).unwrap()).unwrap()
    }

    #[test]
    fn inertia_in_s3() {
        let p = s3_a3();
        let one = p.sub_table().rows()[0].class_function();
        assert_eq!(p.inertia_group(one).unwrap().order(), 6);
        assert_eq!(p.inertia_dichotomy(one).unwrap(), InertiaKind::WholeGroup);
        for i in 1..3 {
            let l = p.sub_table().rows()[i].class_function();
            assert_eq!(p.inertia_group(l).unwrap(), *p.subgroup());
            assert_eq!(p.inertia_dichotomy(l).unwrap(), InertiaKind::Subgroup);
        }
        // H = G
        let g = s3();
        let whole = NormalPair::new(&Subgroup::whole(&g)).unwrap();
        for chi in whole.sub_table().rows() {
            assert_eq!(whole.inertia_group(chi.class_function()).unwrap().order(), 6);
        }
        assert!(matches!(
            inertia_group(&Subgroup::generated(&g, &[1]).unwrap(), &ClassFunction::trivial(&g)),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn dichotomy_over_c4_in_d4() {
        let g = d4();
        let c4 = Subgroup::generated(&g, &[1]).unwrap();
        assert_eq!(c4.order(), 4);
        let p = NormalPair::new(&c4).unwrap();
        let mut kinds = Vec::new();
        for theta in p.sub_table().rows() {
            let inertia = p.inertia_group(theta.class_function()).unwrap();
            // brute force
            assert!(inertia.order() == 8 || inertia.order() == 4);
            kinds.push(p.inertia_dichotomy(theta.class_function()).unwrap());
        }
        // the two real characters of C4 are invariant, the two complex ones swap
        assert_eq!(kinds.iter().filter(|k| **k == InertiaKind::WholeGroup).count(), 2);
    }

    #[test]
    fn index_must_be_prime() {
        let g = s3();
        let p = NormalPair::new(&Subgroup::trivial(&g)).unwrap();
        let one = p.sub_table().rows()[0].class_function();
        assert!(matches!(p.inertia_dichotomy(one), Err(Error::IndexNotPrime(6))));
    }

    #[test]
    fn decompositions_in_s3() {
        let p = s3_a3();
        let rows = p.table().rows();
        let d = p.decomposition(rows[0].class_function()).unwrap();
        assert_eq!((d.e, d.orbit.clone()), (1, vec![0]));
        let d = p.decomposition(rows[2].class_function()).unwrap();
        assert_eq!((d.e, d.t()), (1, 2));
        assert_eq!(d.orbit, vec![1, 2]);
        assert!(d.restriction_matches);
        let d = p.decomposition(rows[1].class_function()).unwrap();
        assert_eq!((d.e, d.orbit.clone()), (1, vec![0]));
        let reg = ClassFunction::regular(p.group());
        assert!(matches!(p.decomposition(&reg), Err(Error::NotIrreducible)));
    }

    #[test]
    fn classification_in_s3() {
        let p = s3_a3();
        let rows = p.table().rows();
        let c0 = p.classify(rows[0].class_function()).unwrap();
        assert_eq!(c0.kind, CaseKind::Restricted);
        assert_eq!(c0.theta_index, 0);
        let c1 = p.classify(rows[1].class_function()).unwrap();
        assert_eq!(c1.kind, CaseKind::Restricted);
        assert_eq!(c1.theta_index, 0);
        let c2 = p.classify(rows[2].class_function()).unwrap();
        assert_eq!(c2.kind, CaseKind::Induced);
        assert_eq!(c2.t, 2);
        assert!(c2.theta_index == 1 || c2.theta_index == 2);
    }

    #[test]
    fn extensions() {
        let p = s3_a3();
        let ext = p.find_extension(p.sub_table().rows()[0].class_function()).unwrap();
        assert_eq!(ext.index, 0);
        assert_eq!(ext.all, vec![0, 1]);
        assert!(matches!(
            p.find_extension(p.sub_table().rows()[1].class_function()),
            Err(Error::NotInvariant)
        ));

        let g = d4();
        let c4 = Subgroup::generated(&g, &[1]).unwrap();
        let p = NormalPair::new(&c4).unwrap();
        for theta in p.sub_table().rows() {
            if p.inertia_group(theta.class_function()).unwrap().order() == 8 {
                let ext = p.find_extension(theta.class_function()).unwrap();
                assert_eq!(ext.character.degree(), 1);
                assert_eq!(ext.all.len(), 2);
            }
        }
    }

    #[test]
    fn large_degree_chains() {
        let g = s3();
        let chain = NormalChain::new(&g, vec![Subgroup::trivial(&g), Subgroup::whole(&g)]).unwrap();
        let out = construct_large_degree(&chain).unwrap();
        assert_eq!(out.degree(), 2);

        let gg = direct_product(&g, &g, DEFAULT_ORDER_CAP).unwrap();
        let left = left_factor(&gg, &g, &g);
        let chain = NormalChain::new(&gg, vec![Subgroup::trivial(&gg), left, Subgroup::whole(&gg)]).unwrap();
        let out = construct_large_degree(&chain).unwrap();
        assert!(out.degree() >= 4);
        assert!(out.character.is_irreducible());

        // abelian factor
        let a3 = Subgroup::generated(&g, &[2]).unwrap();
        assert!(matches!(
            NormalChain::new(&g, vec![Subgroup::trivial(&g), a3, Subgroup::whole(&g)]),
            Err(Error::BadChain(_))
        ));
    }

    #[test]
    fn promotion() {
        let g = s3();
        let gg = direct_product(&g, &g, DEFAULT_ORDER_CAP).unwrap();
        let left = left_factor(&gg, &g, &g);
        let p = NormalPair::new(&left).unwrap();
        let theta = p.sub_table().rows()[2].class_function();
        assert_eq!(theta.degree_u64(), 2);
        assert!(p.promote_degree(theta).unwrap().degree() >= 2);
        let one = p.sub_table().rows()[0].class_function();
        assert!(p.promote_degree(one).unwrap().degree() >= 1);
        let whole = NormalPair::new(&Subgroup::whole(&g)).unwrap();
        let chi = whole.sub_table().rows()[2].class_function();
        assert_eq!(whole.promote_degree(chi).unwrap().values(), chi.values());
    }
}
