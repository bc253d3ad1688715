//! Class functions with exact cyclotomic values and the operations between
//! groups that Clifford theory needs: restriction, induction, conjugation by
//! an overgroup element, inflation from a quotient and pointwise products.

mod dixon;
mod table;

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use dixon::choose_prime;
pub use table::{character_table, CharacterTable, TableJson};

use crate::error::{Error, Result};
use crate::group::{is_normal, FiniteGroup, Subgroup};
use crate::scalar::{Cyclotomic, Rational};

/// A function on a group, constant on conjugacy classes.
///
/// Values are stored one per class in the group's canonical class order.
#[derive(Clone)]
pub struct ClassFunction {
    group: FiniteGroup,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: &FiniteGroup, values: Vec<Cyclotomic>) -> Result<ClassFunction> {
        if values.len() != group.classes().len() {
            return Err(Error::InvalidInput(format!(
                "{} values for {} classes",
                values.len(),
                group.classes().len()
            )));
        }
        Ok(ClassFunction { group: group.clone(), values })
    }

    /// Evaluates `f` at each class representative.
    pub fn from_fn(group: &FiniteGroup, f: impl Fn(usize) -> Cyclotomic) -> ClassFunction {
        let values = group.classes().representatives().into_iter().map(f).collect();
        ClassFunction { group: group.clone(), values }
    }

    pub fn trivial(group: &FiniteGroup) -> ClassFunction {
        Self::from_fn(group, |_| Cyclotomic::one())
    }

    /// The character of the regular representation.
    pub fn regular(group: &FiniteGroup) -> ClassFunction {
        let n = group.order() as i64;
        let e = group.identity();
        Self::from_fn(group, |g| if g == e { Cyclotomic::from_int(n) } else { Cyclotomic::zero() })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// One value per class, canonical class order.
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn at(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.classes().class_of[g]]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    /// The degree as an integer, when it is one.
    pub fn integer_degree(&self) -> Option<BigInt> {
        self.degree().to_integer()
    }

    pub fn degree_u64(&self) -> u64 {
        self.integer_degree()
            .and_then(|d| u64::try_from(d).ok())
            .expect("character degree is a nonnegative integer")
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        let q = Rational::from_integer(k.into());
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(&q)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    pub fn checked_add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if !self.group.same(&other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    /// Complex conjugate class function.
    pub fn conj(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    /// `sum_{g in S} f(g)` over a set of elements.
    pub fn sum_over(&self, elements: &[usize]) -> Cyclotomic {
        let mut counts = vec![0i64; self.values.len()];
        for &g in elements {
            counts[self.group.classes().class_of[g]] += 1;
        }
        counts
            .iter()
            .zip(&self.values)
            .filter(|(c, _)| **c != 0)
            .map(|(&c, v)| v.scale(&Rational::from_integer(c.into())))
            .sum()
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group.same(&other.group) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl Add for &ClassFunction {
    type Output = ClassFunction;
    /// Panics on functions over different groups; see `checked_add`.
    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        self.checked_add(rhs).expect("adding class functions of different groups")
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "ClassFunction[{}]", vals.join(", "))
    }
}

/// A class function known to be a character, with its irreducibility
/// checked exactly (`<chi, chi> = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    base: ClassFunction,
    irreducible: bool,
}

impl Character {
    /// Wraps a class function whose degree is a positive integer.
    pub fn new(base: ClassFunction) -> Result<Character> {
        match base.integer_degree() {
            Some(d) if d.is_positive() => {}
            _ => return Err(Error::NotACharacter(format!("degree {} is not a positive integer", base.degree()))),
        }
        let norm = inner_product(&base, &base)?;
        let irreducible = norm.is_rational() && norm.to_rational().is_some_and(One::is_one);
        Ok(Character { base, irreducible })
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn class_function(&self) -> &ClassFunction {
        &self.base
    }

    pub fn into_class_function(self) -> ClassFunction {
        self.base
    }

    pub fn degree(&self) -> u64 {
        self.base.degree_u64()
    }

    pub fn group(&self) -> &FiniteGroup {
        self.base.group()
    }

    pub fn values(&self) -> &[Cyclotomic] {
        self.base.values()
    }
}

impl AsRef<ClassFunction> for Character {
    fn as_ref(&self) -> &ClassFunction {
        &self.base
    }
}

impl AsRef<ClassFunction> for ClassFunction {
    fn as_ref(&self) -> &ClassFunction {
        self
    }
}

/// `(1/|G|) sum_g phi(g) conj(psi(g))`, computed classwise.
pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<Cyclotomic> {
    if !phi.group.same(&psi.group) {
        return Err(Error::GroupMismatch);
    }
    let sizes = phi.group.classes().sizes();
    let mut total = Cyclotomic::zero();
    for ((a, b), &h) in phi.values.iter().zip(&psi.values).zip(&sizes) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let term = a * &b.conj();
        total += term.scale(&Rational::from_integer(h.into()));
    }
    Ok(total.scale(&Rational::new(BigInt::one(), BigInt::from(phi.group.order()))))
}

/// `Res^G_H chi` as a class function on `h.group()`.
pub fn restrict(chi: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    if !chi.group.same(h.parent()) {
        return Err(Error::GroupMismatch);
    }
    Ok(ClassFunction::from_fn(h.group(), |i| chi.at(h.embed(i)).clone()))
}

/// `Ind_H^G theta(g) = (1/|H|) sum_{x in G, x^-1 g x in H} theta(x^-1 g x)`.
pub fn induce(theta: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    if !theta.group.same(h.group()) {
        return Err(Error::GroupMismatch);
    }
    let g = h.parent();
    let hclasses = h.group().classes();
    let scale = Rational::new(BigInt::one(), BigInt::from(h.order()));
    let values = g
        .classes()
        .representatives()
        .into_iter()
        .map(|rep| {
            let mut counts = vec![0i64; hclasses.len()];
            for x in g.elements() {
                let y = g.mul(g.mul(g.inv(x), rep), x);
                if let Some(pos) = h.position(y) {
                    counts[hclasses.class_of[pos]] += 1;
                }
            }
            counts
                .iter()
                .zip(&theta.values)
                .filter(|(c, _)| **c != 0)
                .map(|(&c, v)| v.scale(&Rational::from_integer(c.into())))
                .sum::<Cyclotomic>()
                .scale(&scale)
        })
        .collect();
    Ok(ClassFunction { group: g.clone(), values })
}

/// `theta^g(h) = theta(g h g^-1)` for `H` normal in `G`.
pub fn conjugate_character(theta: &ClassFunction, h: &Subgroup, g: usize) -> Result<ClassFunction> {
    if !theta.group.same(h.group()) {
        return Err(Error::GroupMismatch);
    }
    if !is_normal(h.parent(), h) {
        return Err(Error::NotNormal);
    }
    Ok(conjugate_unchecked(theta, h, g))
}

/// As [`conjugate_character`] with normality already established.
pub(crate) fn conjugate_unchecked(theta: &ClassFunction, h: &Subgroup, g: usize) -> ClassFunction {
    let parent = h.parent();
    ClassFunction::from_fn(h.group(), |i| {
        let x = parent.conjugate(g, h.embed(i));
        theta.at(h.position(x).expect("normal subgroup is conjugation-stable")).clone()
    })
}

/// `beta o projection`, lifting a class function of `G/N` to `G`.
pub fn inflate(beta: &ClassFunction, g: &FiniteGroup, projection: &[usize]) -> Result<ClassFunction> {
    if projection.len() != g.order() {
        return Err(Error::InvalidInput("projection does not cover the group".into()));
    }
    Ok(ClassFunction::from_fn(g, |x| beta.at(projection[x]).clone()))
}

pub fn pointwise_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<ClassFunction> {
    if !phi.group.same(&psi.group) {
        return Err(Error::GroupMismatch);
    }
    Ok(ClassFunction {
        group: phi.group.clone(),
        values: phi.values.iter().zip(&psi.values).map(|(a, b)| a * b).collect(),
    })
}

/// Multiplicities of the irreducible constituents, in table order, omitting
/// zeros. Rejects anything that is not a nonnegative integer combination.
pub fn decompose(phi: &ClassFunction, table: &CharacterTable) -> Result<Vec<(usize, u64)>> {
    if !phi.group.same(table.group()) {
        return Err(Error::GroupMismatch);
    }
    let mut out = Vec::new();
    let mut rebuilt: Option<ClassFunction> = None;
    for (i, chi) in table.rows().iter().enumerate() {
        let m = inner_product(phi, chi.class_function())?;
        let m = m
            .to_integer()
            .filter(|m| !m.is_negative())
            .ok_or_else(|| Error::NotACharacter(format!("multiplicity of row {i} is {m}")))?;
        let m = u64::try_from(m).map_err(|_| Error::NotACharacter("multiplicity overflow".into()))?;
        if m > 0 {
            let part = chi.class_function().scale(m as i64);
            rebuilt = Some(match rebuilt {
                None => part,
                Some(acc) => &acc + &part,
            });
            out.push((i, m));
        }
    }
    let rebuilt = rebuilt.unwrap_or_else(|| ClassFunction::from_fn(phi.group(), |_| Cyclotomic::zero()));
    if rebuilt != *phi {
        return Err(Error::NotACharacter("not in the span of the irreducible characters".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_from_permutations, quotient, DEFAULT_ORDER_CAP};

    fn s3() -> FiniteGroup {
        build_from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_CAP).unwrap()
    }

    fn ints(f: &ClassFunction) -> Vec<i64> {
        f.values().iter().map(|v| i64::try_from(v.to_integer().unwrap()).unwrap()).collect()
    }

    #[test]
    fn inner_products_on_s3() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let one = ClassFunction::trivial(&g);
        assert_eq!(inner_product(&one, &one).unwrap(), Cyclotomic::one());
        let chi2 = t.rows()[2].class_function();
        // (1/6)(4 + 2*1 + 3*0) = 1
        assert_eq!(ints(chi2), vec![2, -1, 0]);
        assert_eq!(inner_product(chi2, chi2).unwrap(), Cyclotomic::one());
        let reg = ClassFunction::regular(&g);
        for chi in t.rows() {
            assert_eq!(inner_product(&reg, chi.class_function()).unwrap(), Cyclotomic::from_int(chi.degree() as i64));
        }
    }

    #[test]
    fn restriction_and_induction_between_s3_and_a3() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let a3 = Subgroup::generated(&g, &[2]).unwrap();
        let ta3 = character_table(a3.group()).unwrap();
        let chi2 = t.rows()[2].class_function();

        let res = restrict(chi2, &a3).unwrap();
        let expected = ta3.rows()[1].class_function() + ta3.rows()[2].class_function();
        assert_eq!(res, expected);
        assert_eq!(restrict(chi2, &Subgroup::whole(&g)).unwrap().values(), chi2.values());

        let ind = induce(ta3.rows()[1].class_function(), &a3).unwrap();
        assert_eq!(&ind, chi2);
        let ind1 = induce(&ClassFunction::trivial(a3.group()), &a3).unwrap();
        assert_eq!(decompose(&ind1, &t).unwrap(), vec![(0, 1), (1, 1)]);
    }

    #[test]
    fn conjugation_swaps_the_nontrivial_linear_characters_of_a3() {
        let g = s3();
        let a3 = Subgroup::generated(&g, &[2]).unwrap();
        let ta3 = character_table(a3.group()).unwrap();
        let (l1, l2) = (ta3.rows()[1].class_function(), ta3.rows()[2].class_function());
        assert_eq!(&conjugate_character(l1, &a3, 1).unwrap(), l2);
        assert_eq!(&conjugate_character(l1, &a3, 2).unwrap(), l1);
        let one = ClassFunction::trivial(a3.group());
        assert_eq!(conjugate_character(&one, &a3, 1).unwrap(), one);
        let t = Subgroup::generated(&g, &[1]).unwrap();
        let tt = ClassFunction::trivial(t.group());
        assert!(matches!(conjugate_character(&tt, &t, 2), Err(Error::NotNormal)));
    }

    #[test]
    fn inflation_of_sign() {
        let g = s3();
        let a3 = Subgroup::generated(&g, &[2]).unwrap();
        let (q, proj) = quotient(&g, &a3).unwrap();
        let tq = character_table(&q).unwrap();
        let sign = inflate(tq.rows()[1].class_function(), &g, &proj).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(&sign, t.rows()[1].class_function());
        let one = inflate(&ClassFunction::trivial(&q), &g, &proj).unwrap();
        assert_eq!(one, ClassFunction::trivial(&g));
    }

    #[test]
    fn products() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let sign = t.rows()[1].class_function();
        let chi2 = t.rows()[2].class_function();
        assert_eq!(pointwise_product(sign, sign).unwrap(), ClassFunction::trivial(&g));
        assert_eq!(&pointwise_product(chi2, sign).unwrap(), chi2);
        assert_eq!(&pointwise_product(chi2, &ClassFunction::trivial(&g)).unwrap(), chi2);
        let other = s3();
        assert!(matches!(
            pointwise_product(chi2, &ClassFunction::trivial(&other)),
            Err(Error::GroupMismatch)
        ));
    }

    #[test]
    fn decomposition() {
        let g = s3();
        let t = character_table(&g).unwrap();
        assert_eq!(decompose(t.rows()[2].class_function(), &t).unwrap(), vec![(2, 1)]);
        assert_eq!(
            decompose(&ClassFunction::regular(&g), &t).unwrap(),
            vec![(0, 1), (1, 1), (2, 2)]
        );
        // sign - trivial is a virtual character
        let virt = t.rows()[1].class_function() + &t.rows()[0].class_function().scale(-1);
        assert!(matches!(decompose(&virt, &t), Err(Error::NotACharacter(_))));
        // half the regular character is not integral
        let half = ClassFunction::new(
            &g,
            vec![Cyclotomic::from_int(3), Cyclotomic::zero(), Cyclotomic::zero()],
        )
        .unwrap();
        assert!(matches!(decompose(&half, &t), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn character_wrapper_flags_irreducibility() {
        let g = s3();
        let t = character_table(&g).unwrap();
        assert!(t.rows().iter().all(Character::is_irreducible));
        let reg = Character::new(ClassFunction::regular(&g)).unwrap();
        assert!(!reg.is_irreducible());
        assert_eq!(reg.degree(), 6);
        let neg = ClassFunction::trivial(&g).scale(-1);
        assert!(Character::new(neg).is_err());
    }
}
