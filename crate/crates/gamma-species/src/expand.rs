//! Expansion of a cycle index series into k color variables.
//!
//! The map eta_k sends each power sum p_i to x_1^i + ... + x_k^i. By Polya's
//! theorem for species, the coefficient of x^pi in eta_k(Z_F) counts the
//! partially-labeled F-structures of profile pi; the coefficient depends
//! only on the multiset of pi, so results are collected by sorted exponent
//! profile (a [`Partition`] with at most k parts).

use std::collections::BTreeMap;
use std::collections::HashMap;

use num::{BigInt, One, Zero};

use crate::algebra::{factorial, Partition, Rational};
use crate::error::Result;
use crate::series::CycleIndexSeries;

/// Graded table of eta_k(F): per degree n, sorted exponent profile -> exact
/// rational coefficient. For genuine species the coefficients are counts.
#[derive(Clone, Debug)]
pub struct SymmetricExpansion {
    variable_count: u32,
    max_degree: u32,
    strata: BTreeMap<u32, BTreeMap<Partition, Rational>>,
}

impl SymmetricExpansion {
    pub fn variable_count(&self) -> u32 {
        self.variable_count
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Coefficient at a sorted profile (degree inferred from the profile).
    /// Profiles beyond the built degree range are a programming error.
    pub fn coefficient(&self, profile: &Partition) -> Rational {
        let n = profile.degree();
        assert!(
            n <= self.max_degree,
            "profile degree {n} beyond expansion range"
        );
        self.strata
            .get(&n)
            .and_then(|t| t.get(profile))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Profiles of one degree with coefficients, in reverse-lexicographic
    /// profile order.
    pub fn profiles(&self, n: u32) -> Vec<(Partition, Rational)> {
        self.strata
            .get(&n)
            .map(|t| {
                t.iter()
                    .rev()
                    .map(|(p, c)| (p.clone(), c.clone()))
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Sum over all *monomials* of degree n, i.e. the number of colored
    /// structures using at most k colors: each sorted profile is weighted by
    /// the number of ordered exponent vectors realizing it.
    pub fn monomial_total(&self, n: u32) -> Rational {
        assert!(n <= self.max_degree);
        let mut acc = Rational::zero();
        if let Some(table) = self.strata.get(&n) {
            for (profile, c) in table {
                let ways = Rational::from_integer(arrangements(profile, self.variable_count));
                acc += c * ways;
            }
        }
        acc
    }

    /// Plain sum of the stored (sorted-profile) coefficients of degree n.
    pub fn profile_sum(&self, n: u32) -> Rational {
        assert!(n <= self.max_degree);
        let mut acc = Rational::zero();
        if let Some(table) = self.strata.get(&n) {
            for c in table.values() {
                acc += c;
            }
        }
        acc
    }
}

/// Number of distinct ordered k-vectors of nonnegative exponents whose
/// nonzero entries, sorted, give `profile`: k! / ((k - len)! * prod m_v!).
fn arrangements(profile: &Partition, k: u32) -> BigInt {
    let len = profile.len() as u32;
    debug_assert!(len <= k);
    let mut denom = factorial(k - len);
    for (_, count) in profile.multiplicities() {
        denom *= factorial(count);
    }
    factorial(k) / denom
}

/// Expand eta_k(p_lambda) = prod over parts c of (x_1^c + ... + x_k^c) and
/// read off the coefficient of one representative monomial per profile (the
/// weakly decreasing exponent vector); by symmetry every monomial in the
/// orbit carries the same coefficient. Coefficients are integers.
fn expand_power_product(lambda: &Partition, k: u32) -> Vec<(Partition, BigInt)> {
    // Multiply full (unsorted) monomials; x_1^2 x_2 and x_1 x_2^2 are
    // distinct during multiplication and collapse only at the end.
    let kk = k as usize;
    let mut poly: HashMap<Vec<u32>, BigInt> = HashMap::new();
    poly.insert(vec![0; kk], BigInt::one());
    for &c in lambda.parts() {
        let mut next: HashMap<Vec<u32>, BigInt> = HashMap::with_capacity(poly.len() * kk);
        for (mono, coef) in &poly {
            for j in 0..kk {
                let mut m = mono.clone();
                m[j] += c;
                *next.entry(m).or_insert_with(BigInt::zero) += coef;
            }
        }
        poly = next;
    }
    poly.into_iter()
        .filter(|(mono, _)| mono.windows(2).all(|w| w[0] >= w[1]))
        .map(|(mono, coef)| {
            let parts: Vec<u32> = mono.into_iter().filter(|&e| e > 0).collect();
            (Partition::new(parts), coef)
        })
        .collect()
}

/// Expand a cycle index series in k color variables up to `max_degree`.
/// The coefficient at profile pi is the number of partially-labeled
/// F-structures of profile pi.
pub fn expand_symmetric(
    series: &CycleIndexSeries,
    k: u32,
    max_degree: u32,
) -> Result<SymmetricExpansion> {
    assert!(k >= 1, "expansion needs at least one variable");
    let mut strata = BTreeMap::new();
    for n in 0..=max_degree {
        let stratum = series.stratum(n)?;
        let mut table: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (lam, c) in stratum.iter() {
            for (profile, mult) in expand_power_product(lam, k) {
                let term = c * Rational::from_integer(mult);
                let entry = table.entry(profile).or_insert_with(Rational::zero);
                *entry += term;
            }
        }
        table.retain(|_, v| !v.is_zero());
        strata.insert(n, table);
    }
    Ok(SymmetricExpansion {
        variable_count: k,
        max_degree,
        strata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    #[test]
    fn power_product_expansion_basics() {
        // eta_2(p_1^2) = (x1+x2)^2 = x1^2 + 2 x1 x2 + x2^2; coefficients are
        // read at the representative monomials x1^2 and x1 x2.
        let terms = expand_power_product(&Partition::new(vec![1, 1]), 2);
        let get = |p: &[u32]| {
            terms
                .iter()
                .find(|(q, _)| q.parts() == p)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(BigInt::zero)
        };
        assert_eq!(get(&[2]), BigInt::from(1));
        assert_eq!(get(&[1, 1]), BigInt::from(2));
        // eta_2(p_2) = x1^2 + x2^2
        let terms = expand_power_product(&Partition::single(2), 2);
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].0, Partition::single(2));
        assert_eq!(terms[0].1, BigInt::from(1));
    }

    #[test]
    fn arrangement_counts() {
        // profile (3,1) over 4 slots: choose slot for 3, slot for 1: 12
        assert_eq!(
            arrangements(&Partition::new(vec![3, 1]), 4),
            BigInt::from(12)
        );
        // profile (1,1) over 2 slots: both slots filled, equal values: 1
        assert_eq!(
            arrangements(&Partition::new(vec![1, 1]), 2),
            BigInt::from(1)
        );
        assert_eq!(arrangements(&Partition::empty(), 3), BigInt::from(1));
    }

    #[test]
    fn extreme_profiles_recover_labeled_and_isotype_counts() {
        // profile (1,...,1) with k = n counts labeled structures; profile
        // (n) with k = 1 counts isotypes
        let series = crate::library::linear().add(&crate::library::cyclic());
        for n in 1..=6u32 {
            let exp = expand_symmetric(&series, n, n).unwrap();
            assert_eq!(
                exp.coefficient(&Partition::ones(n)),
                series.labeled_count(n).unwrap(),
                "labeled at n = {n}"
            );
            let exp1 = expand_symmetric(&series, 1, n).unwrap();
            assert_eq!(
                exp1.coefficient(&Partition::single(n)),
                series.isotype_count(n).unwrap(),
                "isotype at n = {n}"
            );
        }
    }

    #[test]
    fn monomial_total_matches_all_ones_substitution() {
        // Sum of all degree-n monomial coefficients equals
        // sum over lambda of coeff(lambda) * k^{#parts}.
        let series = CycleIndexSeries::from_fix_fn("E", None, |_| rational(1));
        let k = 3;
        let exp = expand_symmetric(&series, k, 6).unwrap();
        for n in 0..=6u32 {
            let direct = exp.monomial_total(n);
            let mut by_subst = Rational::zero();
            for (lam, c) in series.stratum(n).unwrap().iter() {
                let pow = Rational::from_integer(BigInt::from(k as u64).pow(lam.len() as u32));
                by_subst += c * pow;
            }
            assert_eq!(direct, by_subst, "n = {n}");
        }
    }
}
