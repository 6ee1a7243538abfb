//! Ready-made cycle index series and group cycle index series for the
//! elementary species.
//!
//! Plain species: [`zero`], [`one`], [`singleton`], [`set_species`],
//! [`set_of_size`], [`linear`], [`linear_of_length`], [`cyclic`],
//! [`subsets`].
//!
//! Equivariant species: [`linear_with_reversal`], [`cyclic_with_reversal`],
//! [`linear_k_with_interchange`], plus the assembled [`graph_gcis`] (S_2 by
//! complementation), [`digraph_gcis`] (S_2 by edge reversal) and the
//! recursive tree species [`binary_trees_with_reversal`] and
//! [`kary_trees_with_interchange`].
//!
//! Every built-in carries a closed-form fix oracle, so point queries stay
//! available at the large degrees demanded by functorial composition.

use std::sync::Arc;

use num::BigInt;

use crate::algebra::{euler_phi, factorial, rational, Rational};
use crate::error::Result;
use crate::gamma::GroupCycleIndexSeries;
use crate::perm::FiniteGroup;
use crate::series::CycleIndexSeries;

/// The zero series.
pub fn zero() -> CycleIndexSeries {
    CycleIndexSeries::zero()
}

/// The species 1: one structure on the empty set, none elsewhere.
pub fn one() -> CycleIndexSeries {
    CycleIndexSeries::one()
}

/// The singleton species X: Z_X = p_1.
pub fn singleton() -> CycleIndexSeries {
    CycleIndexSeries::from_fix_fn("X", Some(1), |lam| {
        if lam.parts() == [1] {
            rational(1)
        } else {
            rational(0)
        }
    })
}

/// The species E of sets: every permutation fixes the unique set structure,
/// so fix is identically 1.
pub fn set_species() -> CycleIndexSeries {
    CycleIndexSeries::from_fix_fn("E", None, |_| rational(1))
}

/// Sets of size exactly k: Z_{E_k} = sum over lambda |- k of p_lambda / z.
pub fn set_of_size(k: u32) -> CycleIndexSeries {
    CycleIndexSeries::from_fix_fn(&format!("E_{k}"), Some(k), move |lam| {
        if lam.degree() == k {
            rational(1)
        } else {
            rational(0)
        }
    })
}

/// Linear orders: only the identity fixes an order, so fix(1^n) = n!.
pub fn linear() -> CycleIndexSeries {
    CycleIndexSeries::from_fix_fn("L", None, |lam| {
        if lam.parts().iter().all(|&p| p == 1) {
            Rational::from_integer(factorial(lam.degree()))
        } else {
            rational(0)
        }
    })
}

/// Linear orders of length exactly k: Z_{L_k} = p_1^k.
pub fn linear_of_length(k: u32) -> CycleIndexSeries {
    CycleIndexSeries::from_fix_fn(&format!("L_{k}"), Some(k), move |lam| {
        if lam.degree() == k && lam.parts().iter().all(|&p| p == 1) {
            Rational::from_integer(factorial(k))
        } else {
            rational(0)
        }
    })
}

/// Cyclic orders: Z_C = sum_{n>=1} (1/n) sum_{d|n} phi(d) p_d^{n/d}, the
/// logarithmic formula with the Euler totient. A cycle type fixes some
/// cyclic order only when all its parts are equal.
pub fn cyclic() -> CycleIndexSeries {
    CycleIndexSeries::from_fix_fn("C", None, |lam| {
        if lam.is_empty() {
            return rational(0); // no cyclic order on the empty set
        }
        let d = lam.parts()[0];
        if lam.parts().iter().any(|&p| p != d) {
            return rational(0);
        }
        let m = lam.len() as u32;
        let n = lam.degree();
        // fix = z_lambda * phi(d) / n = phi(d) d^m m! / n
        let num = BigInt::from(euler_phi(d as u64)) * BigInt::from(d as u64).pow(m) * factorial(m);
        Rational::new(num, BigInt::from(n as u64))
    })
}

/// The species P = E*E of subsets. Fix oracle: a sigma-cycle must lie
/// wholly inside the subset or its complement, so fix = 2^{#parts}.
pub fn subsets() -> CycleIndexSeries {
    CycleIndexSeries::from_fix_fn("P", None, |lam| {
        Rational::from_integer(BigInt::from(1u8) << lam.len())
    })
}

/// Linear orders with the order-reversing S_2 action. The identity
/// component is Z_L; the reversal component is
/// 1 + p_1 + sum_{k>=1} (p_2^k + p_2^k p_1): a permutation reverses some
/// order exactly when its type is all 2's with at most one fixed point, and
/// then z_lambda orders are reversed.
pub fn linear_with_reversal() -> GroupCycleIndexSeries {
    let group = FiniteGroup::symmetric(2);
    GroupCycleIndexSeries::new(group, |gamma| {
        if gamma.is_identity() {
            linear()
        } else {
            CycleIndexSeries::from_fix_fn("L(tau)", None, |lam| {
                let ones = lam.multiplicity(1);
                let twos = lam.multiplicity(2);
                if ones <= 1 && ones + twos == lam.len() as u32 {
                    Rational::from_integer(crate::algebra::z_of(lam))
                } else {
                    rational(0)
                }
            })
        }
    })
}

/// Cyclic orders with the order-reversing S_2 action. The identity
/// component is Z_C; the reversal component is
/// p_1 + sum_{k>=1} ( (p_2^k + p_2^{k-1} p_1^2)/2 + p_2^k p_1 ).
pub fn cyclic_with_reversal() -> GroupCycleIndexSeries {
    let group = FiniteGroup::symmetric(2);
    GroupCycleIndexSeries::new(group, |gamma| {
        if gamma.is_identity() {
            cyclic()
        } else {
            CycleIndexSeries::from_fix_fn("C(tau)", None, |lam| {
                let ones = lam.multiplicity(1);
                let twos = lam.multiplicity(2);
                if ones + twos != lam.len() as u32 {
                    return rational(0);
                }
                let z = Rational::from_integer(crate::algebra::z_of(lam));
                match (ones, twos) {
                    (1, 0) => rational(1), // the singleton cycle
                    (0, t) if t >= 1 => z / rational(2),
                    (1, t) if t >= 1 => z,
                    (2, _) => z / rational(2),
                    _ => rational(0),
                }
            })
        }
    })
}

/// Linear k-orders with an interchange group acting on the k slots. The
/// component at gamma is the single monomial p_{cycle type of gamma},
/// concentrated in degree k.
pub fn linear_k_with_interchange(group: Arc<FiniteGroup>) -> GroupCycleIndexSeries {
    let k = group.degree() as u32;
    GroupCycleIndexSeries::new(group, |gamma| {
        let target = gamma.cycle_type();
        let name = format!("L_{k}({gamma})");
        CycleIndexSeries::from_fix_fn(&name, Some(k), move |lam| {
            if *lam == target {
                Rational::from_integer(crate::algebra::z_of(lam))
            } else {
                rational(0)
            }
        })
    })
}

/// Simple graphs with the complementation action of S_2, assembled as
/// L_2(E) square (E_2 * E): an outer "subset of the 2-subsets" structure on
/// the set of vertex pairs.
///
/// The outer L_2(E)-with-reversal components carry closed-form oracles:
/// - identity: an ordered pair of sets, fixed when each sigma-cycle stays in
///   its block: 2^{#parts} (this is the subsets species);
/// - reversal: the blocks swap, so every sigma-cycle must alternate between
///   them and hence be even, with 2 alternating assignments per cycle:
///   stretch(E, 2), whose derived oracle is 0 on any odd part and
///   2^{#parts} otherwise.
pub fn graph_gcis() -> GroupCycleIndexSeries {
    let group = FiniteGroup::symmetric(2);
    let outer = GroupCycleIndexSeries::new(group.clone(), |gamma| {
        if gamma.is_identity() {
            subsets()
        } else {
            set_species().stretch(2).named("L_2(E)(tau)")
        }
    });
    let inner = GroupCycleIndexSeries::trivial_lift(
        &set_of_size(2).multiply(&set_species()).named("E_2*E"),
        group,
    );
    outer
        .functorial(&inner)
        .expect("groups match by construction")
}

/// Directed graphs with the edge-reversal (conversion) action of S_2,
/// assembled as P square (L_2 * E): a subset of the ordered vertex pairs,
/// where reversal flips each pair.
pub fn digraph_gcis() -> GroupCycleIndexSeries {
    let group = FiniteGroup::symmetric(2);
    let outer = GroupCycleIndexSeries::trivial_lift(&subsets(), group.clone());
    let pairs = linear_k_with_interchange(group.clone());
    let inner = pairs
        .multiply(&GroupCycleIndexSeries::trivial_lift(&set_species(), group))
        .expect("groups match by construction");
    outer
        .functorial(&inner)
        .expect("groups match by construction")
}

/// Rooted binary trees with the left-right reversal action of S_2, by the
/// recursion BT = 1 + X + X * L_2(BT - 1) with L_2 the degree-2 slice of
/// linear orders with reversal. Structures are counted by total vertices;
/// a tree with n internal vertices has 2n + 1 vertices in all.
pub fn binary_trees_with_reversal() -> Result<GroupCycleIndexSeries> {
    let group = FiniteGroup::symmetric(2);
    let l2 = linear_with_reversal().restrict(2, Some(3));
    let one_l = GroupCycleIndexSeries::trivial_lift(&one(), group.clone());
    let x_l = GroupCycleIndexSeries::trivial_lift(&singleton(), group.clone());
    let bt = GroupCycleIndexSeries::placeholder(group, "BT");
    let children = l2.plethysm(&bt.subtract(&one_l)?)?;
    let body = one_l.add(&x_l)?.add(&x_l.multiply(&children)?)?;
    bt.define(&body)?;
    Ok(bt)
}

/// Rooted k-ary trees (each node has k child slots, possibly empty) with an
/// interchange group permuting the slots at every node simultaneously:
/// K = 1 + X * L_k(K). The composition is legal despite K's nonzero
/// constant term because L_k is concentrated in degree k. (Writing the
/// recursion as 1 + X + X*L_k(K) would count the lone root twice, once as X
/// and once as a root with three empty subtrees.)
pub fn kary_trees_with_interchange(group: Arc<FiniteGroup>) -> Result<GroupCycleIndexSeries> {
    let lk = linear_k_with_interchange(group.clone());
    let one_l = GroupCycleIndexSeries::trivial_lift(&one(), group.clone());
    let x_l = GroupCycleIndexSeries::trivial_lift(&singleton(), group.clone());
    let kt = GroupCycleIndexSeries::placeholder(group, "K");
    let body = one_l.add(&x_l.multiply(&lk.plethysm(&kt)?)?)?;
    kt.define(&body)?;
    Ok(kt)
}

/// Resolve a built-in by its stable CLI name. Plain species come back
/// trivially lifted over the one-element group.
///
/// Names: "0", "1", "X", "E", "L", "C", "P", "E_<k>", "L_<k>",
/// "L_rev", "C_rev", "graph", "digraph", "L_k_interchange:S<k>".
pub fn by_name(name: &str) -> Option<GroupCycleIndexSeries> {
    let lift = |s: CycleIndexSeries| {
        Some(GroupCycleIndexSeries::trivial_lift(
            &s,
            FiniteGroup::trivial(),
        ))
    };
    match name {
        "0" | "zero" => lift(zero()),
        "1" | "one" => lift(one()),
        "X" => lift(singleton()),
        "E" => lift(set_species()),
        "L" => lift(linear()),
        "C" => lift(cyclic()),
        "P" => lift(subsets()),
        "L_rev" => Some(linear_with_reversal()),
        "C_rev" => Some(cyclic_with_reversal()),
        "graph" => Some(graph_gcis()),
        "digraph" => Some(digraph_gcis()),
        _ => {
            if let Some(k) = name.strip_prefix("E_").and_then(|t| t.parse::<u32>().ok()) {
                return lift(set_of_size(k));
            }
            if let Some(k) = name.strip_prefix("L_").and_then(|t| t.parse::<u32>().ok()) {
                return lift(linear_of_length(k));
            }
            if let Some(k) = name
                .strip_prefix("L_k_interchange:S")
                .and_then(|t| t.parse::<usize>().ok())
                .filter(|&k| (1..=6).contains(&k))
            {
                return Some(linear_k_with_interchange(FiniteGroup::symmetric(k)));
            }
            None
        }
    }
}

/// Quotient of linear orders with reversal: the species of paths.
pub fn paths() -> CycleIndexSeries {
    linear_with_reversal().quotient().named("paths")
}

/// Quotient of cyclic orders with reversal: the species of polygons.
pub fn polygons() -> CycleIndexSeries {
    cyclic_with_reversal().quotient().named("polygons")
}
