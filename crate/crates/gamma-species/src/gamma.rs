//! Group cycle index series: a family of cycle index series indexed by the
//! elements of a finite group acting structurally on a species.
//!
//! The component at gamma records, per cycle type lambda, how many structures
//! are fixed by gamma composed with a relabeling permutation of type lambda.
//! The identity component is the ordinary cycle index of the underlying
//! species. Provided operations:
//!
//! - [`GroupCycleIndexSeries::quotient`]: Burnside average over the group,
//!   the classical cycle index of the quotient species
//! - componentwise sum, difference, product, restriction
//! - [`GroupCycleIndexSeries::plethysm`]: equivariant composition, where p_i
//!   receives the inner component at the i-th power of gamma
//! - [`GroupCycleIndexSeries::functorial`]: equivariant functorial
//!   composition, computed from the cycle type of the permutation induced on
//!   the set of inner structures (Moebius inversion over fixed counts)
//! - per-element labeled/isotype generating series
//! - recursive definitions via [`GroupCycleIndexSeries::placeholder`]

use std::sync::Arc;

use num::{BigInt, ToPrimitive, Zero};

use crate::algebra::{divisors, lcm, mobius, power_cycle_type, rational, Partition, Rational};
use crate::error::{Error, Result};
use crate::perm::{FiniteGroup, GroupElement};
use crate::series::{nonnegative_count, CycleIndexSeries, OneVariableSeries};

/// A group-element-indexed family of cycle index series. Cloning is cheap;
/// components are shared.
#[derive(Clone)]
pub struct GroupCycleIndexSeries {
    group: Arc<FiniteGroup>,
    components: Vec<CycleIndexSeries>, // parallel to group.elements()
}

impl GroupCycleIndexSeries {
    /// Build from a rule assigning a component to every group element.
    pub fn new<F>(group: Arc<FiniteGroup>, component: F) -> Self
    where
        F: Fn(&GroupElement) -> CycleIndexSeries,
    {
        let components = group.elements().iter().map(component).collect();
        GroupCycleIndexSeries { group, components }
    }

    /// Equip a species with the trivial action: every component equals F.
    pub fn trivial_lift(series: &CycleIndexSeries, group: Arc<FiniteGroup>) -> Self {
        let components = vec![series.clone(); group.order()];
        GroupCycleIndexSeries { group, components }
    }

    /// An empty placeholder for a recursive definition.
    pub fn placeholder(group: Arc<FiniteGroup>, name: &str) -> Self {
        Self::new(group, |g| {
            CycleIndexSeries::placeholder(&format!("{name}({g})"))
        })
    }

    /// Install the body of a recursive definition, componentwise.
    pub fn define(&self, body: &GroupCycleIndexSeries) -> Result<()> {
        self.check_same_group(body, "define")?;
        for (mine, theirs) in self.components.iter().zip(&body.components) {
            mine.define(theirs)?;
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// The component series at a group element.
    pub fn component(&self, gamma: &GroupElement) -> Result<&CycleIndexSeries> {
        let idx = self
            .group
            .index_of(gamma)
            .ok_or_else(|| Error::ElementNotInGroup {
                element: gamma.to_string(),
                context: format!("group of degree {}", self.group.degree()),
            })?;
        Ok(&self.components[idx])
    }

    /// The component at the group identity: the ordinary cycle index of the
    /// underlying species.
    pub fn identity_component(&self) -> &CycleIndexSeries {
        self.component(&self.group.identity())
            .expect("identity is always present")
    }

    fn check_same_group(&self, other: &GroupCycleIndexSeries, op: &str) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group.same_group(&other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                context: format!(
                    "{op} needs matching groups (degrees {} and {})",
                    self.group.degree(),
                    other.group.degree()
                ),
            })
        }
    }

    fn zip_components<F>(&self, other: &GroupCycleIndexSeries, op: &str, f: F) -> Result<Self>
    where
        F: Fn(&CycleIndexSeries, &CycleIndexSeries) -> CycleIndexSeries,
    {
        self.check_same_group(other, op)?;
        Ok(GroupCycleIndexSeries {
            group: self.group.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &GroupCycleIndexSeries) -> Result<Self> {
        self.zip_components(other, "add", |a, b| a.add(b))
    }

    pub fn subtract(&self, other: &GroupCycleIndexSeries) -> Result<Self> {
        self.zip_components(other, "subtract", |a, b| a.subtract(b))
    }

    pub fn multiply(&self, other: &GroupCycleIndexSeries) -> Result<Self> {
        self.zip_components(other, "multiply", |a, b| a.multiply(b))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GroupCycleIndexSeries {
            group: self.group.clone(),
            components: self.components.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Componentwise degree-window restriction.
    pub fn restrict(&self, lo: u32, hi: Option<u32>) -> Self {
        GroupCycleIndexSeries {
            group: self.group.clone(),
            components: self.components.iter().map(|a| a.restrict(lo, hi)).collect(),
        }
    }

    /// The classical cycle index of the quotient species: the average
    /// (1/|Gamma|) sum over gamma of the components.
    pub fn quotient(&self) -> CycleIndexSeries {
        let mut acc = self.components[0].clone();
        for c in &self.components[1..] {
            acc = acc.add(c);
        }
        let weight = Rational::new(BigInt::from(1), BigInt::from(self.group.order() as u64));
        acc.scale(&weight).named("quotient")
    }

    /// Equivariant plethysm. The component at gamma substitutes, for each
    /// p_i, the series stretch_i of the *inner component at gamma^i*: a
    /// descendant structure sitting on an i-cycle of the parent returns to
    /// itself only after gamma has acted i times.
    pub fn plethysm(&self, inner: &GroupCycleIndexSeries) -> Result<Self> {
        self.check_same_group(inner, "plethysm")?;
        let group = self.group.clone();
        let components = group
            .elements()
            .iter()
            .zip(&self.components)
            .map(|(gamma, outer)| {
                let order = gamma.order();
                let rotation: Vec<CycleIndexSeries> = (0..order)
                    .map(|j| {
                        let gj = gamma.power(j);
                        inner.component(&gj).expect("group closure").clone()
                    })
                    .collect();
                CycleIndexSeries::plethysm_multi(outer, rotation)
                    .named(&format!("plethysm@{gamma}"))
            })
            .collect();
        Ok(GroupCycleIndexSeries { group, components })
    }

    /// Number of k-cycles of the permutation gamma . G[sigma] acting on the
    /// set of G-structures on n points, for sigma of cycle type lambda:
    /// (1/k) sum over d | k of mu(k/d) fix(gamma^d . G[sigma^d]).
    /// Errors on negative or non-integral results, which signal an
    /// inconsistent group cycle index input.
    pub fn induced_cycle_count(
        &self,
        gamma: &GroupElement,
        lambda: &Partition,
        k: u32,
    ) -> Result<BigInt> {
        assert!(k >= 1, "cycle length must be >= 1");
        let mut sum = Rational::zero();
        for d in divisors(k as u64) {
            let mu = mobius(k as u64 / d);
            if mu == 0 {
                continue;
            }
            let fix = self.fixed_by_power(gamma, lambda, d)?;
            sum += fix * rational(mu as i64);
        }
        sum /= rational(k as i64);
        nonnegative_count(
            &sum,
            &format!("induced {k}-cycle count at gamma = {gamma}, lambda = {lambda}"),
        )
    }

    /// fix((gamma . G[sigma])^d) = fix(gamma^d . G[sigma^d]).
    fn fixed_by_power(&self, gamma: &GroupElement, lambda: &Partition, d: u64) -> Result<Rational> {
        let gd = gamma.power(d);
        let ld = power_cycle_type(
            lambda,
            u32::try_from(d).expect("power exponents stay small"),
        );
        self.component(&gd)?.fix_count(&ld)
    }

    /// Cycle type of the permutation gamma . G[sigma] on the set of inner
    /// structures, assembled from the induced cycle counts for every k
    /// dividing N = lcm(order(gamma), lcm of the parts of lambda); the N-th
    /// power of the induced permutation is the identity by functorality.
    pub fn induced_cycle_type(
        &self,
        gamma: &GroupElement,
        lambda: &Partition,
    ) -> Result<Partition> {
        let big_n = lcm(gamma.order(), lambda.parts_lcm());
        let mut parts: Vec<u32> = Vec::new();
        let mut moved = BigInt::zero();
        for k in divisors(big_n) {
            let count = self.induced_cycle_count(gamma, lambda, k as u32)?;
            if count.is_zero() {
                continue;
            }
            let reps = count
                .to_usize()
                .ok_or_else(|| Error::InconsistentInducedCount {
                    context: format!("induced cycle count {count} too large to materialize"),
                })?;
            parts.extend(std::iter::repeat_n(k as u32, reps));
            moved += BigInt::from(k) * count;
        }
        // Cycles partition the structure set: sum k * c_k must equal the
        // total number of G-structures on n points.
        let total = self.fixed_by_power(gamma, lambda, big_n)?;
        if Rational::from_integer(moved.clone()) != total {
            return Err(Error::InconsistentInducedCount {
                context: format!(
                    "induced cycles cover {moved} structures but the total is {total} (gamma = {gamma}, lambda = {lambda})"
                ),
            });
        }
        Ok(Partition::new(parts))
    }

    /// Equivariant functorial composition F square G: an outer structure on
    /// the set of all inner structures. The fix count of the component at
    /// gamma, at cycle type lambda, is the fix count of the outer component
    /// at the cycle type induced on the inner structures. The outer operand
    /// must answer fix-count point queries at the induced degrees (fix
    /// oracle, or degrees within the dense limit).
    pub fn functorial(&self, inner: &GroupCycleIndexSeries) -> Result<Self> {
        self.check_same_group(inner, "functorial composition")?;
        let group = self.group.clone();
        let components = group
            .elements()
            .iter()
            .zip(&self.components)
            .map(|(gamma, outer)| {
                let outer = outer.clone();
                let inner = inner.clone();
                let gamma = gamma.clone();
                let name = format!("functorial@{gamma}");
                CycleIndexSeries::from_fallible_fix_fn(&name, None, move |lambda| {
                    let pi = inner.induced_cycle_type(&gamma, lambda)?;
                    outer.fix_count(&pi)
                })
            })
            .collect();
        Ok(GroupCycleIndexSeries { group, components })
    }

    /// EGF of labeled structures fixed by gamma (as labeled structures).
    pub fn labeled_egf(&self, gamma: &GroupElement) -> Result<OneVariableSeries> {
        Ok(self.component(gamma)?.labeled_egf())
    }

    /// OGF of unlabeled structures fixed by gamma (as unlabeled structures).
    pub fn isotype_ogf(&self, gamma: &GroupElement) -> Result<OneVariableSeries> {
        Ok(self.component(gamma)?.isotype_ogf())
    }

    /// Componentwise agreement to a degree.
    pub fn agrees_to_degree(&self, other: &GroupCycleIndexSeries, max_degree: u32) -> Result<bool> {
        self.check_same_group(other, "comparison")?;
        for (a, b) in self.components.iter().zip(&other.components) {
            if !a.agrees_to_degree(b, max_degree)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Print form: one block per group element (cycle-notation header), then
    /// the component series in its per-degree print form.
    pub fn pretty_to_degree(&self, max_degree: u32) -> Result<String> {
        let mut out = String::new();
        for (gamma, comp) in self.group.elements().iter().zip(&self.components) {
            out.push_str(&format!("{gamma}:\n"));
            for line in comp.pretty_to_degree(max_degree)?.lines() {
                out.push_str("  ");
                out.push_str(line);
                out.push('\n');
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for GroupCycleIndexSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupCycleIndexSeries(degree {}, order {})",
            self.group.degree(),
            self.group.order()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, rational};
    use crate::library::{
        binary_trees_with_reversal, cyclic_with_reversal, digraph_gcis, graph_gcis,
        kary_trees_with_interchange, linear, linear_k_with_interchange, linear_with_reversal, one,
        set_of_size, set_species, singleton,
    };

    fn tau() -> GroupElement {
        GroupElement::from_cycles(2, &[&[1, 2]]).unwrap()
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn trivial_lift_laws() {
        let s2 = FiniteGroup::symmetric(2);
        let lifted = GroupCycleIndexSeries::trivial_lift(&set_species(), s2.clone());
        assert!(lifted
            .component(&tau())
            .unwrap()
            .agrees_to_degree(&set_species(), 8)
            .unwrap());
        assert!(lifted
            .quotient()
            .agrees_to_degree(&set_species(), 8)
            .unwrap());
        let x_lift = GroupCycleIndexSeries::trivial_lift(&singleton(), s2);
        assert!(x_lift
            .component(&tau())
            .unwrap()
            .agrees_to_degree(&singleton(), 4)
            .unwrap());
        // quotient of a trivially lifted L over S_3 keeps the labeled counts
        let s3 = FiniteGroup::symmetric(3);
        let l_lift = GroupCycleIndexSeries::trivial_lift(&linear(), s3);
        for n in 0..=5u32 {
            assert_eq!(
                l_lift.quotient().labeled_count(n).unwrap(),
                Rational::from_integer(crate::algebra::factorial(n))
            );
        }
    }

    #[test]
    fn component_membership_and_group_checks() {
        let l_rev = linear_with_reversal();
        let bad = GroupElement::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert!(matches!(
            l_rev.component(&bad),
            Err(Error::ElementNotInGroup { .. })
        ));
        let s3_lift =
            GroupCycleIndexSeries::trivial_lift(&set_species(), FiniteGroup::symmetric(3));
        assert!(matches!(
            l_rev.add(&s3_lift),
            Err(Error::GroupMismatch { .. })
        ));
    }

    #[test]
    fn componentwise_arithmetic() {
        let l_rev = linear_with_reversal();
        let zero_diff = l_rev.subtract(&l_rev).unwrap();
        for gamma in zero_diff.group().elements() {
            for n in 0..=5 {
                assert!(zero_diff
                    .component(gamma)
                    .unwrap()
                    .stratum(n)
                    .unwrap()
                    .is_zero());
            }
        }
        // tau-component of L_2^rev * lift(E) is p_2 * Z_E
        let s2 = FiniteGroup::symmetric(2);
        let l2 = linear_k_with_interchange(s2.clone());
        let e_lift = GroupCycleIndexSeries::trivial_lift(&set_species(), s2.clone());
        let prod = l2.multiply(&e_lift).unwrap();
        let p2_series = singleton().stretch(2).multiply(&set_species());
        assert!(prod
            .component(&tau())
            .unwrap()
            .agrees_to_degree(&p2_series, 7)
            .unwrap());
        // quotient is additive
        let a = linear_with_reversal();
        let b = cyclic_with_reversal();
        let sum_quotient = a.add(&b).unwrap().quotient();
        let quotient_sum = a.quotient().add(&b.quotient());
        assert!(sum_quotient.agrees_to_degree(&quotient_sum, 8).unwrap());
    }

    #[test]
    fn plethysm_over_trivial_group_is_ordinary() {
        let triv = FiniteGroup::trivial();
        let e2 = GroupCycleIndexSeries::trivial_lift(&set_of_size(2), triv.clone());
        let x = GroupCycleIndexSeries::trivial_lift(&singleton(), triv.clone());
        let gamma_side = e2.plethysm(&x).unwrap();
        let ordinary = set_of_size(2).plethysm(&singleton());
        assert!(gamma_side
            .identity_component()
            .agrees_to_degree(&ordinary, 6)
            .unwrap());
    }

    #[test]
    fn binary_tree_reversal_counts() {
        let bt = binary_trees_with_reversal().unwrap();
        let q = bt.quotient();
        // brute-verified: orbits of labeled trees under global reversal
        let labeled = [1i64, 1, 0, 3, 0, 120];
        for (n, &e) in labeled.iter().enumerate() {
            assert_eq!(q.labeled_count(n as u32).unwrap(), rational(e), "n = {n}");
        }
        // the table of reversal classes sits at odd degrees 2m+1
        let classes = [1i64, 1, 1, 3, 7, 22, 66, 217, 715, 2438];
        for (m, &e) in classes.iter().enumerate().take(5) {
            let degree = 2 * m as u32 + 1;
            assert_eq!(q.isotype_count(degree).unwrap(), rational(e), "m = {m}");
        }
    }

    #[test]
    fn ternary_tree_interchange_counts() {
        let k3 = kary_trees_with_interchange(FiniteGroup::symmetric(3)).unwrap();
        let q = k3.quotient();
        // brute-verified global S_3 quotient (per-node unordered trees give
        // a different, smaller sequence)
        let expected = [1i64, 1, 1, 3, 11, 49];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(q.isotype_count(n as u32).unwrap(), rational(e), "n = {n}");
        }
    }

    #[test]
    fn inconsistent_inputs_are_diagnosed() {
        // A "gamma-cycle index" whose tau component doubles every fix count
        // is not the cycle index of any action: the induced 2-cycle count
        // at lambda = [] comes out negative and must be reported, not
        // silently materialized.
        let s2 = FiniteGroup::symmetric(2);
        let fake = GroupCycleIndexSeries::new(s2, |gamma| {
            if gamma.is_identity() {
                set_species()
            } else {
                set_species().scale(&rational(2))
            }
        });
        let err = fake.induced_cycle_count(&tau(), &Partition::empty(), 2);
        assert!(matches!(err, Err(Error::InconsistentInducedCount { .. })));
        let err = fake.induced_cycle_type(&tau(), &Partition::empty());
        assert!(matches!(err, Err(Error::InconsistentInducedCount { .. })));
    }

    #[test]
    fn gamma_placeholder_errors() {
        let s2 = FiniteGroup::symmetric(2);
        let p = GroupCycleIndexSeries::placeholder(s2, "P");
        assert!(matches!(
            p.identity_component().stratum(0),
            Err(Error::UndefinedPlaceholder { .. })
        ));
    }

    #[test]
    fn induced_cycle_counts() {
        // G = E with the trivial action: the induced permutation on the
        // single set structure has one 1-cycle
        let triv = FiniteGroup::trivial();
        let e_lift = GroupCycleIndexSeries::trivial_lift(&set_species(), triv.clone());
        let e = triv.identity();
        assert_eq!(
            e_lift.induced_cycle_count(&e, &part(&[2, 1]), 1).unwrap(),
            BigInt::from(1)
        );
        // G = E_2 * E (2-subsets): a transposition fixes exactly one
        // 2-subset of {1,2,3}
        let pairs = GroupCycleIndexSeries::trivial_lift(
            &set_of_size(2).multiply(&set_species()),
            triv.clone(),
        );
        assert_eq!(
            pairs.induced_cycle_count(&e, &part(&[2, 1]), 1).unwrap(),
            BigInt::from(1)
        );
        // cycles partition the structure set: sum k * c_k = total
        let lam = part(&[2, 1]);
        let pi = pairs.induced_cycle_type(&e, &lam).unwrap();
        assert_eq!(pi.degree(), 3); // C(3,2) two-subsets
        let total: u32 = pi.parts().iter().sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn functorial_set_of_sets_fixes_everything() {
        let triv = FiniteGroup::trivial();
        let e_lift = GroupCycleIndexSeries::trivial_lift(&set_species(), triv);
        let composed = e_lift.functorial(&e_lift).unwrap();
        for n in 0..=6u32 {
            for lam in crate::algebra::partitions_of(n) {
                assert_eq!(
                    composed.identity_component().fix_count(&lam).unwrap(),
                    rational(1),
                    "lambda = {lam}"
                );
            }
        }
    }

    #[test]
    fn digraph_conversity_small_counts() {
        let d = digraph_gcis();
        let q = d.quotient();
        let expected = [1i64, 1, 3, 13, 144];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(q.isotype_count(n as u32).unwrap(), rational(e), "n = {n}");
        }
    }

    #[test]
    fn graph_complementation_counts() {
        let g = graph_gcis();
        // unlabeled simple graphs on the identity component
        let unlabeled = [1i64, 1, 2, 4, 11];
        for (n, &e) in unlabeled.iter().enumerate() {
            assert_eq!(
                g.identity_component().isotype_count(n as u32).unwrap(),
                rational(e),
                "n = {n}"
            );
        }
        // self-complementary unlabeled graphs on the tau component
        let tau_ogf = g.isotype_ogf(&tau()).unwrap();
        let self_comp = [1i64, 0, 0, 1, 2];
        for (i, &e) in self_comp.iter().enumerate() {
            let n = i as u32 + 1;
            assert_eq!(tau_ogf.coefficient(n).unwrap(), rational(e), "n = {n}");
        }
    }

    #[test]
    fn per_element_series_of_trivial_lift() {
        let s2 = FiniteGroup::symmetric(2);
        let lifted = GroupCycleIndexSeries::trivial_lift(&linear(), s2);
        let via_gamma = lifted.labeled_egf(&tau()).unwrap();
        let direct = linear().labeled_egf();
        for n in 0..=6 {
            assert_eq!(
                via_gamma.coefficient(n).unwrap(),
                direct.coefficient(n).unwrap()
            );
        }
    }

    #[test]
    fn quotient_coefficients_average_components() {
        let l_rev = linear_with_reversal();
        let q = l_rev.quotient();
        // degree 2: (p_1^2 + p_2)/2 averaged with Z_L's p_1^2
        assert_eq!(q.coefficient(&part(&[1, 1])).unwrap(), ratio(1, 2));
        assert_eq!(q.coefficient(&part(&[2])).unwrap(), ratio(1, 2));
        // labeled count of paths on 4 points: 4!/2
        assert_eq!(q.labeled_count(4).unwrap(), rational(12));
    }

    #[test]
    fn pretty_print_blocks() {
        let s2 = FiniteGroup::symmetric(2);
        let lifted = GroupCycleIndexSeries::trivial_lift(&one(), s2);
        let text = lifted.pretty_to_degree(0).unwrap();
        assert_eq!(text, "():\n  0: 1\n(1 2):\n  0: 1\n");
    }
}
