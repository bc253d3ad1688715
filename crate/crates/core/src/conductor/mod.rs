//! Artin conductors from lower-numbered ramification filtrations, the
//! conductor-discriminant check, and the root-conductor bound arithmetic.

mod bounds;
mod data;
mod radical;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::character::{character_table, inflate, CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::group::{quotient, FiniteGroup, Subgroup};
use crate::scalar::{poly::prime_divisors, Cyclotomic, Rational};

pub use bounds::{
    bound_induced_case, bound_restricted_case, global_constant, induced_conductor_norm, BoundDataset, BoundInputs,
    RestrictedBound,
};
pub use data::{ContextFile, GroupRef, PrimeEntry};
pub use radical::{factor, factorization_string, Radical};

/// Lower-numbered ramification groups `G_0 >= G_1 >= ...` at one prime.
/// An empty list means the prime is unramified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationFiltration {
    prime: u64,
    residue_norm: BigUint,
    groups: Vec<Subgroup>,
}

impl RamificationFiltration {
    pub fn new(prime: u64, residue_norm: BigUint, groups: Vec<Subgroup>) -> Result<RamificationFiltration> {
        if prime_divisors(prime) != [prime] {
            return Err(Error::InvalidFiltration(format!("{prime} is not prime")));
        }
        let mut n = residue_norm.clone();
        let p = BigUint::from(prime);
        while n > BigUint::one() && (&n % &p).is_zero() {
            n /= &p;
        }
        if !n.is_one() || residue_norm.is_one() {
            return Err(Error::InvalidFiltration(format!(
                "residue norm {residue_norm} is not a power of {prime}"
            )));
        }
        if let Some(g0) = groups.first() {
            if g0.is_trivial() {
                return Err(Error::InvalidFiltration(format!("G_0 at {prime} is trivial; use an empty list")));
            }
            for (j, w) in groups.windows(2).enumerate() {
                if !w[0].parent().same(w[1].parent()) {
                    return Err(Error::InvalidFiltration(format!("G_{} lives in a different group", j + 1)));
                }
                if !w[1].is_subset_of(&w[0]) {
                    return Err(Error::InvalidFiltration(format!("G_{} is not contained in G_{j}", j + 1)));
                }
            }
        }
        Ok(RamificationFiltration { prime, residue_norm, groups })
    }

    /// An unramified prime.
    pub fn unramified(prime: u64) -> Result<RamificationFiltration> {
        RamificationFiltration::new(prime, BigUint::from(prime), Vec::new())
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn residue_norm(&self) -> &BigUint {
        &self.residue_norm
    }

    pub fn groups(&self) -> &[Subgroup] {
        &self.groups
    }

    pub fn is_ramified(&self) -> bool {
        !self.groups.is_empty()
    }

    pub fn is_tame(&self) -> bool {
        self.groups.get(1).is_none_or(Subgroup::is_trivial)
    }

    /// The same filtration with `extra` explicit trivial groups appended.
    pub fn padded(&self, extra: usize) -> RamificationFiltration {
        let mut groups = self.groups.clone();
        if let Some(g0) = groups.first() {
            let one = Subgroup::trivial(g0.parent());
            groups.extend(std::iter::repeat_n(one, extra));
        }
        RamificationFiltration { groups, ..self.clone() }
    }

    /// Every group replaced by its conjugate `g G_j g^-1`.
    pub fn conjugate_by(&self, g: usize) -> RamificationFiltration {
        RamificationFiltration { groups: self.groups.iter().map(|s| s.conjugate_by(g)).collect(), ..self.clone() }
    }
}

/// `f(chi) = (1/|G_0|) sum_j (|G_j| chi(1) - chi(G_j))`, where `chi(G_j)` is
/// the sum of the values over `G_j`.
pub fn conductor_exponent(chi: &ClassFunction, filtration: &RamificationFiltration) -> Result<u64> {
    let Some(g0) = filtration.groups.first() else {
        return Ok(0);
    };
    if !g0.parent().same(chi.group()) {
        return Err(Error::GroupMismatch);
    }
    let degree = chi.degree().clone();
    let mut total = Cyclotomic::zero();
    for gj in filtration.groups.iter().take_while(|s| !s.is_trivial()) {
        let size = Cyclotomic::from_int(gj.order() as i64);
        total += &(&size * &degree) - &chi.sum_over(gj.elements());
    }
    let non_integral = |value: String| Error::NonIntegralExponent { prime: filtration.prime, value };
    let total = total.to_rational().ok_or_else(|| non_integral(total.to_string()))?.clone();
    let f = total / Rational::from_integer(BigInt::from(g0.order()));
    if !f.is_integer() || f.is_negative() {
        return Err(non_integral(f.to_string()));
    }
    f.to_integer().to_u64().ok_or_else(|| non_integral(f.to_string()))
}

/// The Galois group of `L/M` with ramification data at finitely many primes.
#[derive(Clone, Debug)]
pub struct GaloisContext {
    group: FiniteGroup,
    filtrations: Vec<RamificationFiltration>,
    disc: Option<BigUint>,
    name: String,
    labels: BTreeMap<String, String>,
}

impl GaloisContext {
    pub fn new(group: &FiniteGroup, mut filtrations: Vec<RamificationFiltration>) -> Result<GaloisContext> {
        filtrations.sort_by_key(|f| f.prime);
        for w in filtrations.windows(2) {
            if w[0].prime == w[1].prime {
                return Err(Error::InvalidFiltration(format!("prime {} listed twice", w[0].prime)));
            }
        }
        for f in &filtrations {
            if f.groups.first().is_some_and(|s| !s.parent().same(group)) {
                return Err(Error::InvalidFiltration(format!(
                    "filtration at {} is not in the context group",
                    f.prime
                )));
            }
        }
        Ok(GaloisContext {
            group: group.clone(),
            filtrations,
            disc: None,
            name: group.name().unwrap_or("context").to_string(),
            labels: BTreeMap::new(),
        })
    }

    pub fn with_disc(mut self, disc: BigUint) -> GaloisContext {
        self.disc = Some(disc);
        self
    }

    pub fn named(mut self, name: impl Into<String>) -> GaloisContext {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: BTreeMap<String, String>) -> GaloisContext {
        self.labels = labels;
        self
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn filtrations(&self) -> &[RamificationFiltration] {
        &self.filtrations
    }

    pub fn disc(&self) -> Option<&BigUint> {
        self.disc.as_ref()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &BTreeMap<String, String> {
        &self.labels
    }

    /// Every filtration padded with `extra` trivial groups.
    pub fn padded(&self, extra: usize) -> GaloisContext {
        GaloisContext { filtrations: self.filtrations.iter().map(|f| f.padded(extra)).collect(), ..self.clone() }
    }

    /// The context of `L` over the fixed field of a subgroup `h`, with
    /// filtrations `G_j ∩ H`.
    ///
    /// Only supported when each ramified prime is totally ramified in the
    /// fixed field of a prime-index `h` (equivalently `G_0` is not inside
    /// `h`), so there is a single prime above `p` with residue norm `p`.
    pub fn restrict_to(&self, h: &Subgroup) -> Result<GaloisContext> {
        if !h.parent().same(&self.group) {
            return Err(Error::GroupMismatch);
        }
        let q = h.index();
        if prime_divisors(q as u64) != [q as u64] {
            return Err(Error::IndexNotPrime(q));
        }
        let sub = h.group();
        let mut out = Vec::new();
        for f in &self.filtrations {
            let Some(g0) = f.groups.first() else {
                out.push(RamificationFiltration::unramified(f.prime)?);
                continue;
            };
            if g0.is_subset_of(h) {
                return Err(Error::InvalidInput(format!(
                    "inertia at {} lies in the subgroup; the prime may split in the fixed field",
                    f.prime
                )));
            }
            let groups: Vec<Subgroup> = f
                .groups
                .iter()
                .map(|gj| {
                    Subgroup::new(sub, gj.elements().iter().filter_map(|&x| h.position(x)))
                        .expect("intersection of subgroups")
                })
                .take_while(|s| !s.is_trivial())
                .collect();
            out.push(RamificationFiltration::new(f.prime, f.residue_norm.clone(), groups)?);
        }
        let name = format!("{} over the fixed field of a subgroup of order {}", self.name, h.order());
        Ok(GaloisContext::new(sub, out)?.named(name))
    }

    /// Absolute discriminant of the fixed field of a normal subgroup, from
    /// the conductors of the quotient characters inflated to `G`.
    pub fn fixed_field_discriminant(&self, h: &Subgroup) -> Result<BigUint> {
        let (factor, projection) = quotient(&self.group, h)?;
        let table = character_table(&factor)?;
        let mut disc = BigUint::one();
        for beta in table.rows() {
            let lifted = inflate(beta.class_function(), &self.group, &projection)?;
            let f = artin_conductor(&lifted, self)?;
            disc *= f.norm.pow(beta.degree() as u32);
        }
        Ok(disc)
    }
}

/// `prod_p p^(f_p)` with exact norm `prod N(p)^(f_p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredConductor {
    pub exponents: BTreeMap<u64, u64>,
    pub residue_norms: BTreeMap<u64, BigUint>,
    pub norm: BigUint,
}

impl FactoredConductor {
    pub fn trivial() -> FactoredConductor {
        FactoredConductor { exponents: BTreeMap::new(), residue_norms: BTreeMap::new(), norm: BigUint::one() }
    }

    /// The norm as an exact radical with prime bases.
    pub fn norm_radical(&self) -> Radical {
        self.exponents.iter().fold(Radical::one(), |acc, (p, &f)| {
            acc.mul(&Radical::from_integer(&self.residue_norms[p]).pow(&Rational::from_integer(f.into())))
        })
    }
}

pub fn artin_conductor(chi: &ClassFunction, ctx: &GaloisContext) -> Result<FactoredConductor> {
    if !chi.group().same(&ctx.group) {
        return Err(Error::GroupMismatch);
    }
    let mut out = FactoredConductor::trivial();
    for filt in &ctx.filtrations {
        let f = conductor_exponent(chi, filt)?;
        if f > 0 {
            out.exponents.insert(filt.prime, f);
            out.residue_norms.insert(filt.prime, filt.residue_norm.clone());
            out.norm *= filt.residue_norm.pow(f as u32);
        }
    }
    Ok(out)
}

/// True iff no prime of the context ramifies; every conductor is then trivial.
pub fn unramified_triviality(ctx: &GaloisContext) -> bool {
    let unramified = ctx.filtrations.iter().all(|f| !f.is_ramified());
    if unramified {
        debug_assert!(character_table(&ctx.group).is_ok_and(|t| t
            .rows()
            .iter()
            .all(|c| artin_conductor(c.class_function(), ctx).is_ok_and(|f| f.norm.is_one()))));
    }
    unramified
}

/// `norm^(1/degree)`.
pub fn root_conductor(f: &FactoredConductor, degree: u64) -> Radical {
    assert!(degree >= 1);
    f.norm_radical().pow(&Rational::new(BigInt::one(), BigInt::from(degree)))
}

/// `prod_chi N(f_chi)^chi(1) == disc`.
pub fn verify_conductor_discriminant(ctx: &GaloisContext, table: &CharacterTable, disc: &BigUint) -> Result<bool> {
    Ok(&conductor_discriminant_product(ctx, table)? == disc)
}

pub fn conductor_discriminant_product(ctx: &GaloisContext, table: &CharacterTable) -> Result<BigUint> {
    if !table.group().same(&ctx.group) {
        return Err(Error::GroupMismatch);
    }
    let mut prod = BigUint::one();
    for chi in table.rows() {
        prod *= artin_conductor(chi.class_function(), ctx)?.norm.pow(chi.degree() as u32);
    }
    Ok(prod)
}
