//! Brute-force ground truth: explicit enumeration of small labeled
//! structures, the (S_n x Gamma)-action on them, fixed-point and orbit
//! counting, and cross-checks of every cycle-index computation.
//!
//! The enumerators are intentionally naive; their whole value is
//! independence from the series algebra. Shipped families: sets, subsets,
//! linear and cyclic orders (with reversal), simple graphs (with
//! complementation), digraphs (with conversion), rooted binary trees (with
//! reversal), ternary trees (with S_3 slot interchange), and leaf-labeled
//! binary trees with unordered children.

use std::collections::BTreeSet;
use std::sync::Arc;

use num::{BigInt, Zero};

use crate::algebra::{partitions_of, rational, z_of, Partition, Rational};
use crate::error::{Error, Result};
use crate::expand::SymmetricExpansion;
use crate::gamma::GroupCycleIndexSeries;
use crate::perm::{FiniteGroup, GroupElement};

type Action<S> = Box<dyn Fn(&GroupElement, &S) -> S + Send + Sync>;

/// A family of labeled structures with a relabeling action of S_n and a
/// commuting structural action of a finite group.
pub struct StructureFamily<S> {
    name: &'static str,
    group: Arc<FiniteGroup>,
    limit: u32,
    enumerate: Box<dyn Fn(u32) -> Vec<S> + Send + Sync>,
    relabel: Action<S>,
    gamma_act: Action<S>,
}

impl<S: Ord + Clone> StructureFamily<S> {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Largest label count this family will enumerate.
    pub fn limit(&self) -> u32 {
        self.limit
    }

    /// All labeled structures on {1..n}.
    pub fn enumerate(&self, n: u32) -> Result<Vec<S>> {
        if n > self.limit {
            return Err(Error::DegreeLimit {
                degree: n,
                limit: self.limit,
            });
        }
        Ok((self.enumerate)(n))
    }

    pub fn relabel(&self, sigma: &GroupElement, s: &S) -> S {
        (self.relabel)(sigma, s)
    }

    pub fn gamma_act(&self, gamma: &GroupElement, s: &S) -> S {
        (self.gamma_act)(gamma, s)
    }

    /// Number of structures s with gamma . (sigma . s) = s.
    pub fn brute_fix_count(&self, gamma: &GroupElement, sigma: &GroupElement) -> Result<u64> {
        let n = sigma.degree() as u32;
        let structures = self.enumerate(n)?;
        let mut fixed = 0u64;
        for s in &structures {
            if self.gamma_act(gamma, &self.relabel(sigma, s)) == *s {
                fixed += 1;
            }
        }
        Ok(fixed)
    }

    /// Number of isomorphism classes on n labels: orbits under S_n, or
    /// under S_n x Gamma when `quotient_by_gamma` is set. Burnside average
    /// of brute fix counts over cycle-type class representatives.
    pub fn brute_orbit_count(&self, n: u32, quotient_by_gamma: bool) -> Result<u64> {
        let gammas: Vec<GroupElement> = if quotient_by_gamma {
            self.group.elements().to_vec()
        } else {
            vec![self.group.identity()]
        };
        let mut total = Rational::zero();
        for lam in partitions_of(n) {
            let sigma = representative_permutation(&lam);
            let z = Rational::from_integer(z_of(&lam));
            for gamma in &gammas {
                let fixed = self.brute_fix_count(gamma, &sigma)?;
                total += rational(fixed as i64) / z.clone();
            }
        }
        total /= rational(gammas.len() as i64);
        let count = crate::series::integral_count(
            &total,
            &format!("orbit count of `{}` at n = {n}", self.name),
        )?;
        Ok(big_to_u64(&count))
    }

    /// Number of partially-labeled structures of the given profile fixed by
    /// gamma: S_n-orbits of (structure, coloring) pairs, constructed
    /// directly over the enumerated set.
    pub fn brute_partial_label_count(
        &self,
        n: u32,
        profile: &Partition,
        gamma: &GroupElement,
    ) -> Result<u64> {
        assert_eq!(profile.degree(), n, "profile must sum to the label count");
        let structures = self.enumerate(n)?;
        let colorings = colorings_with_profile(n, profile);
        let sn: Vec<GroupElement> = all_permutations(n);

        let canonical = |s: &S, c: &Vec<u8>| -> (S, Vec<u8>) {
            let mut best: Option<(S, Vec<u8>)> = None;
            for sigma in &sn {
                let rs = self.relabel(sigma, s);
                let rc = recolor(sigma, c);
                let cand = (rs, rc);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
            best.expect("S_n is nonempty")
        };

        let mut orbits: BTreeSet<(S, Vec<u8>)> = BTreeSet::new();
        for s in &structures {
            for c in &colorings {
                orbits.insert(canonical(s, c));
            }
        }
        let mut fixed = 0u64;
        for (s, c) in &orbits {
            let moved = canonical(&self.gamma_act(gamma, s), c);
            if moved == (s.clone(), c.clone()) {
                fixed += 1;
            }
        }
        Ok(fixed)
    }

    /// Compare brute fix counts against a group cycle index series for all
    /// cycle types of degree <= max_n (clamped to the family limit) and all
    /// group elements, including orbit-count consistency. Returns mismatch
    /// descriptions (empty = clean) and the number of checks run.
    pub fn check_against_series(
        &self,
        series: &GroupCycleIndexSeries,
        max_n: u32,
    ) -> Result<(usize, Vec<String>)> {
        let mut checks = 0usize;
        let mut mismatches = Vec::new();
        let top = max_n.min(self.limit);
        for n in 0..=top {
            for lam in partitions_of(n) {
                let sigma = representative_permutation(&lam);
                let conj = conjugated_representative(&lam);
                for gamma in self.group.elements() {
                    let brute = self.brute_fix_count(gamma, &sigma)?;
                    let brute_conj = self.brute_fix_count(gamma, &conj)?;
                    checks += 1;
                    if brute != brute_conj {
                        mismatches.push(format!(
                            "{}: fix count depends on the representative at gamma={gamma}, lambda={lam}: {brute} vs {brute_conj}",
                            self.name
                        ));
                    }
                    let from_series = series.component(gamma)?.fix_count(&lam)?;
                    if from_series != rational(brute as i64) {
                        mismatches.push(format!(
                            "{}: fix mismatch at gamma={gamma}, lambda={lam}: series {from_series}, brute {brute}",
                            self.name
                        ));
                    }
                }
            }
            for quotient in [false, true] {
                let brute = self.brute_orbit_count(n, quotient)?;
                let from_series = if quotient {
                    series.quotient().isotype_count(n)?
                } else {
                    series.identity_component().isotype_count(n)?
                };
                checks += 1;
                if from_series != rational(brute as i64) {
                    let kind = if quotient {
                        "quotient isotype"
                    } else {
                        "isotype"
                    };
                    mismatches.push(format!(
                        "{}: {kind} mismatch at n={n}: series {from_series}, brute {brute}",
                        self.name
                    ));
                }
            }
        }
        Ok((checks, mismatches))
    }

    /// Compare partial-label counts against the Polya expansion of one
    /// component, over all profiles of degree <= max_n with at most
    /// max_colors parts.
    pub fn check_partial_labels(
        &self,
        expansion_of: &GroupCycleIndexSeries,
        gamma: &GroupElement,
        max_n: u32,
        max_colors: u32,
    ) -> Result<(usize, Vec<String>)> {
        let mut checks = 0usize;
        let mut mismatches = Vec::new();
        let component = expansion_of.component(gamma)?;
        let top = max_n.min(self.limit);
        let expansion: SymmetricExpansion =
            crate::expand::expand_symmetric(component, max_colors, top)?;
        for n in 1..=top {
            for profile in partitions_of(n) {
                if profile.len() as u32 > max_colors {
                    continue;
                }
                let brute = self.brute_partial_label_count(n, &profile, gamma)?;
                let from_series = expansion.coefficient(&profile);
                checks += 1;
                if from_series != rational(brute as i64) {
                    mismatches.push(format!(
                        "{}: partial-label mismatch at gamma={gamma}, profile={profile}: series {from_series}, brute {brute}",
                        self.name
                    ));
                }
            }
        }
        Ok((checks, mismatches))
    }
}

fn big_to_u64(n: &BigInt) -> u64 {
    use num::ToPrimitive;
    n.to_u64().expect("brute-force counts fit in u64")
}

/// A permutation of cycle type lambda built from consecutive blocks:
/// (1 .. l1)(l1+1 .. l1+l2)...
pub fn representative_permutation(lambda: &Partition) -> GroupElement {
    let n = lambda.degree() as usize;
    let mut images: Vec<u32> = (1..=n as u32).collect();
    let mut start = 1u32;
    for &c in lambda.parts() {
        for offset in 0..c {
            let from = start + offset;
            let to = if offset + 1 == c { start } else { from + 1 };
            images[from as usize - 1] = to;
        }
        start += c;
    }
    GroupElement::from_images(images).expect("blocks form a permutation")
}

/// A second representative of the same cycle type: the block representative
/// conjugated by the order-reversing permutation.
fn conjugated_representative(lambda: &Partition) -> GroupElement {
    let n = lambda.degree() as usize;
    let sigma = representative_permutation(lambda);
    let rev =
        GroupElement::from_images((1..=n as u32).rev().collect()).expect("reversal is a bijection");
    rev.compose(&sigma).compose(&rev.inverse())
}

/// All n! permutations of {1..n} (n = 0 gives the empty identity).
fn all_permutations(n: u32) -> Vec<GroupElement> {
    if n == 0 {
        return vec![GroupElement::identity(0)];
    }
    FiniteGroup::symmetric(n as usize).elements().to_vec()
}

/// Colorings of {1..n} (as color-by-position vectors, colors 1-based) whose
/// fiber sizes realize the profile.
fn colorings_with_profile(n: u32, profile: &Partition) -> Vec<Vec<u8>> {
    let mut remaining: Vec<u32> = profile.parts().to_vec();
    let mut out = Vec::new();
    let mut current = vec![0u8; n as usize];
    fn fill(
        pos: usize,
        n: usize,
        remaining: &mut Vec<u32>,
        current: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if pos == n {
            out.push(current.clone());
            return;
        }
        for color in 0..remaining.len() {
            if remaining[color] == 0 {
                continue;
            }
            remaining[color] -= 1;
            current[pos] = color as u8 + 1;
            fill(pos + 1, n, remaining, current, out);
            remaining[color] += 1;
        }
    }
    fill(0, n as usize, &mut remaining, &mut current, &mut out);
    out
}

/// Transport of a coloring along sigma: (sigma . c)(i) = c(sigma^{-1}(i)).
fn recolor(sigma: &GroupElement, c: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; c.len()];
    for (idx, &color) in c.iter().enumerate() {
        let target = sigma.apply(idx as u32 + 1);
        out[target as usize - 1] = color;
    }
    out
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

fn identity_action<S: Clone>() -> Action<S> {
    Box::new(|_, s| s.clone())
}

/// The species of sets: one structure per label set.
pub fn sets_family() -> StructureFamily<u8> {
    StructureFamily {
        name: "sets",
        group: FiniteGroup::trivial(),
        limit: 16,
        enumerate: Box::new(|_| vec![0u8]),
        relabel: Box::new(|_, s| *s),
        gamma_act: identity_action(),
    }
}

/// Subsets of the label set, as sorted element lists.
pub fn subsets_family() -> StructureFamily<Vec<u32>> {
    StructureFamily {
        name: "subsets",
        group: FiniteGroup::trivial(),
        limit: 10,
        enumerate: Box::new(|n| {
            let mut out = Vec::with_capacity(1 << n);
            for mask in 0u32..(1 << n) {
                let subset: Vec<u32> = (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
                out.push(subset);
            }
            out.sort();
            out
        }),
        relabel: Box::new(|sigma, s| {
            let mut t: Vec<u32> = s.iter().map(|&x| sigma.apply(x)).collect();
            t.sort_unstable();
            t
        }),
        gamma_act: identity_action(),
    }
}

fn enumerate_sequences(n: u32) -> Vec<Vec<u32>> {
    // all orderings of {1..n}; n = 0 gives the empty list
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; n as usize];
    fn rec(n: u32, used: &mut Vec<bool>, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == n as usize {
            out.push(current.clone());
            return;
        }
        for x in 1..=n {
            if !used[x as usize - 1] {
                used[x as usize - 1] = true;
                current.push(x);
                rec(n, used, current, out);
                current.pop();
                used[x as usize - 1] = false;
            }
        }
    }
    rec(n, &mut used, &mut current, &mut out);
    out
}

/// Linear orders with the order-reversing action of S_2.
pub fn linear_orders_family() -> StructureFamily<Vec<u32>> {
    StructureFamily {
        name: "linear orders with reversal",
        group: FiniteGroup::symmetric(2),
        limit: 7,
        enumerate: Box::new(enumerate_sequences),
        relabel: Box::new(|sigma, s| s.iter().map(|&x| sigma.apply(x)).collect()),
        gamma_act: Box::new(|gamma, s| {
            if gamma.is_identity() {
                s.clone()
            } else {
                s.iter().rev().copied().collect()
            }
        }),
    }
}

fn canonical_rotation(seq: &[u32]) -> Vec<u32> {
    if seq.is_empty() {
        return Vec::new();
    }
    let pos = seq
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
        .expect("nonempty");
    let mut out = Vec::with_capacity(seq.len());
    out.extend_from_slice(&seq[pos..]);
    out.extend_from_slice(&seq[..pos]);
    out
}

/// Cyclic orders with the direction-reversing action of S_2. Structures are
/// stored rotated so the least label comes first; there is no cyclic order
/// on the empty set.
pub fn cyclic_orders_family() -> StructureFamily<Vec<u32>> {
    StructureFamily {
        name: "cyclic orders with reversal",
        group: FiniteGroup::symmetric(2),
        limit: 7,
        enumerate: Box::new(|n| {
            if n == 0 {
                return Vec::new();
            }
            // fix label 1 in front; order the rest freely
            enumerate_sequences(n - 1)
                .into_iter()
                .map(|rest| {
                    let mut seq = vec![1u32];
                    seq.extend(rest.into_iter().map(|x| x + 1));
                    seq
                })
                .collect()
        }),
        relabel: Box::new(|sigma, s| {
            let mapped: Vec<u32> = s.iter().map(|&x| sigma.apply(x)).collect();
            canonical_rotation(&mapped)
        }),
        gamma_act: Box::new(|gamma, s| {
            if gamma.is_identity() {
                s.clone()
            } else {
                let reversed: Vec<u32> = s.iter().rev().copied().collect();
                canonical_rotation(&reversed)
            }
        }),
    }
}

type EdgeList = Vec<(u32, u32)>;

fn all_vertex_pairs(n: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// A simple graph: vertex count plus sorted edge list over unordered pairs.
/// The vertex count travels with the structure so complementation is
/// well-defined on edgeless graphs.
pub type Graph = (u32, EdgeList);

/// Simple graphs with the complementation action of S_2.
pub fn graphs_family() -> StructureFamily<Graph> {
    StructureFamily {
        name: "graphs with complementation",
        group: FiniteGroup::symmetric(2),
        limit: 5,
        enumerate: Box::new(|n| {
            let pairs = all_vertex_pairs(n);
            let mut out = Vec::with_capacity(1 << pairs.len());
            for mask in 0u64..(1 << pairs.len()) {
                let edges: EdgeList = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                out.push((n, edges));
            }
            out
        }),
        relabel: Box::new(|sigma, (n, edges)| {
            let mut out: EdgeList = edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (sigma.apply(u), sigma.apply(v));
                    (a.min(b), a.max(b))
                })
                .collect();
            out.sort_unstable();
            (*n, out)
        }),
        gamma_act: Box::new(|gamma, (n, edges)| {
            if gamma.is_identity() {
                (*n, edges.clone())
            } else {
                let complement: EdgeList = all_vertex_pairs(*n)
                    .into_iter()
                    .filter(|e| !edges.contains(e))
                    .collect();
                (*n, complement)
            }
        }),
    }
}

/// Digraphs (loopless, over ordered vertex pairs) with the edge-reversal
/// action of S_2.
pub fn digraphs_family() -> StructureFamily<EdgeList> {
    StructureFamily {
        name: "digraphs with conversion",
        group: FiniteGroup::symmetric(2),
        limit: 4,
        enumerate: Box::new(|n| {
            let mut pairs = Vec::new();
            for u in 1..=n {
                for v in 1..=n {
                    if u != v {
                        pairs.push((u, v));
                    }
                }
            }
            let mut out = Vec::with_capacity(1 << pairs.len());
            for mask in 0u64..(1 << pairs.len()) {
                let edges: EdgeList = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                out.push(edges);
            }
            out
        }),
        relabel: Box::new(|sigma, edges| {
            let mut out: EdgeList = edges
                .iter()
                .map(|&(u, v)| (sigma.apply(u), sigma.apply(v)))
                .collect();
            out.sort_unstable();
            out
        }),
        gamma_act: Box::new(|gamma, edges| {
            if gamma.is_identity() {
                edges.clone()
            } else {
                let mut out: EdgeList = edges.iter().map(|&(u, v)| (v, u)).collect();
                out.sort_unstable();
                out
            }
        }),
    }
}

/// Rooted binary tree on a label set: empty, a single labeled node, or a
/// labeled root with an ordered pair of nonempty subtrees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum BinaryTree {
    Empty,
    Tip(u32),
    Branch(u32, Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    fn relabel(&self, sigma: &GroupElement) -> BinaryTree {
        match self {
            BinaryTree::Empty => BinaryTree::Empty,
            BinaryTree::Tip(x) => BinaryTree::Tip(sigma.apply(*x)),
            BinaryTree::Branch(x, l, r) => BinaryTree::Branch(
                sigma.apply(*x),
                Box::new(l.relabel(sigma)),
                Box::new(r.relabel(sigma)),
            ),
        }
    }

    fn mirror(&self) -> BinaryTree {
        match self {
            BinaryTree::Empty => BinaryTree::Empty,
            BinaryTree::Tip(x) => BinaryTree::Tip(*x),
            BinaryTree::Branch(x, l, r) => {
                BinaryTree::Branch(*x, Box::new(r.mirror()), Box::new(l.mirror()))
            }
        }
    }
}

fn nonempty_binary_trees(labels: &[u32]) -> Vec<BinaryTree> {
    match labels.len() {
        0 => Vec::new(),
        1 => vec![BinaryTree::Tip(labels[0])],
        _ => {
            let mut out = Vec::new();
            for (root_idx, &root) in labels.iter().enumerate() {
                let rest: Vec<u32> = labels
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != root_idx)
                    .map(|(_, &x)| x)
                    .collect();
                // ordered split of rest into two nonempty blocks
                for mask in 1u64..(1 << rest.len()) - 1 {
                    let left: Vec<u32> = rest
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &x)| x)
                        .collect();
                    let right: Vec<u32> = rest
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) == 0)
                        .map(|(_, &x)| x)
                        .collect();
                    for l in nonempty_binary_trees(&left) {
                        for r in nonempty_binary_trees(&right) {
                            out.push(BinaryTree::Branch(root, Box::new(l.clone()), Box::new(r)));
                        }
                    }
                }
            }
            out
        }
    }
}

/// Rooted binary trees (every node has zero or two children, all nodes
/// labeled) with the global left-right reversal action of S_2.
pub fn binary_trees_family() -> StructureFamily<BinaryTree> {
    StructureFamily {
        name: "binary trees with reversal",
        group: FiniteGroup::symmetric(2),
        limit: 7,
        enumerate: Box::new(|n| {
            if n == 0 {
                vec![BinaryTree::Empty]
            } else {
                let labels: Vec<u32> = (1..=n).collect();
                nonempty_binary_trees(&labels)
            }
        }),
        relabel: Box::new(|sigma, t| t.relabel(sigma)),
        gamma_act: Box::new(|gamma, t| {
            if gamma.is_identity() {
                t.clone()
            } else {
                t.mirror()
            }
        }),
    }
}

/// Ternary tree on a label set: every node carries three child slots, each
/// possibly empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum TernaryTree {
    Empty,
    Node(u32, Box<TernaryTree>, Box<TernaryTree>, Box<TernaryTree>),
}

impl TernaryTree {
    fn relabel(&self, sigma: &GroupElement) -> TernaryTree {
        match self {
            TernaryTree::Empty => TernaryTree::Empty,
            TernaryTree::Node(x, a, b, c) => TernaryTree::Node(
                sigma.apply(*x),
                Box::new(a.relabel(sigma)),
                Box::new(b.relabel(sigma)),
                Box::new(c.relabel(sigma)),
            ),
        }
    }

    /// Apply a slot permutation at every node: the child in slot i moves to
    /// slot gamma(i).
    fn interchange(&self, gamma: &GroupElement) -> TernaryTree {
        match self {
            TernaryTree::Empty => TernaryTree::Empty,
            TernaryTree::Node(x, a, b, c) => {
                let old = [a, b, c];
                let moved: Vec<TernaryTree> = (1..=3u32)
                    .map(|slot| old[gamma.inverse().apply(slot) as usize - 1].interchange(gamma))
                    .collect();
                let mut it = moved.into_iter();
                TernaryTree::Node(
                    *x,
                    Box::new(it.next().unwrap()),
                    Box::new(it.next().unwrap()),
                    Box::new(it.next().unwrap()),
                )
            }
        }
    }
}

fn ternary_trees(labels: &[u32]) -> Vec<TernaryTree> {
    if labels.is_empty() {
        return vec![TernaryTree::Empty];
    }
    let mut out = Vec::new();
    for (root_idx, &root) in labels.iter().enumerate() {
        let rest: Vec<u32> = labels
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != root_idx)
            .map(|(_, &x)| x)
            .collect();
        // distribute rest over three ordered (possibly empty) blocks
        let assignments = 3u32.pow(rest.len() as u32);
        for code in 0..assignments {
            let mut blocks: [Vec<u32>; 3] = [Vec::new(), Vec::new(), Vec::new()];
            let mut c = code;
            for &x in &rest {
                blocks[(c % 3) as usize].push(x);
                c /= 3;
            }
            for a in ternary_trees(&blocks[0]) {
                for b in ternary_trees(&blocks[1]) {
                    for ch in ternary_trees(&blocks[2]) {
                        out.push(TernaryTree::Node(
                            root,
                            Box::new(a.clone()),
                            Box::new(b.clone()),
                            Box::new(ch),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Ternary trees with the S_3 slot-interchange action applied at every node
/// simultaneously.
pub fn ternary_trees_family() -> StructureFamily<TernaryTree> {
    StructureFamily {
        name: "ternary trees with interchange",
        group: FiniteGroup::symmetric(3),
        limit: 5,
        enumerate: Box::new(|n| {
            let labels: Vec<u32> = (1..=n).collect();
            ternary_trees(&labels)
        }),
        relabel: Box::new(|sigma, t| t.relabel(sigma)),
        gamma_act: Box::new(|gamma, t| t.interchange(gamma)),
    }
}

/// Leaf-labeled rooted binary tree with unordered children; children are
/// kept sorted so values are canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum LeafTree {
    Leaf(u32),
    Node(Box<LeafTree>, Box<LeafTree>),
}

impl LeafTree {
    fn node(a: LeafTree, b: LeafTree) -> LeafTree {
        if a <= b {
            LeafTree::Node(Box::new(a), Box::new(b))
        } else {
            LeafTree::Node(Box::new(b), Box::new(a))
        }
    }

    fn relabel(&self, sigma: &GroupElement) -> LeafTree {
        match self {
            LeafTree::Leaf(x) => LeafTree::Leaf(sigma.apply(*x)),
            LeafTree::Node(a, b) => LeafTree::node(a.relabel(sigma), b.relabel(sigma)),
        }
    }
}

fn leaf_trees(labels: &[u32]) -> Vec<LeafTree> {
    match labels.len() {
        0 => Vec::new(),
        1 => vec![LeafTree::Leaf(labels[0])],
        _ => {
            let mut out = Vec::new();
            // unordered split: pin the first label to one side
            let first = labels[0];
            let rest = &labels[1..];
            for mask in 0u64..(1 << rest.len()) {
                let mut left = vec![first];
                let mut right = Vec::new();
                for (i, &x) in rest.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        left.push(x);
                    } else {
                        right.push(x);
                    }
                }
                if right.is_empty() {
                    continue;
                }
                for a in leaf_trees(&left) {
                    for b in leaf_trees(&right) {
                        out.push(LeafTree::node(a.clone(), b));
                    }
                }
            }
            out
        }
    }
}

/// Rooted binary leaf-labeled trees with unordered children (the species
/// R = X + E_2(R), labels on leaves only).
pub fn leaf_trees_family() -> StructureFamily<LeafTree> {
    StructureFamily {
        name: "leaf-labeled binary trees",
        group: FiniteGroup::trivial(),
        limit: 7,
        enumerate: Box::new(|n| {
            let labels: Vec<u32> = (1..=n).collect();
            leaf_trees(&labels)
        }),
        relabel: Box::new(|sigma, t| t.relabel(sigma)),
        gamma_act: identity_action(),
    }
}

/// Outcome of running one family's cross-checks.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub family: String,
    pub max_n: u32,
    pub checks: usize,
    pub mismatches: Vec<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Run the full oracle equivalence suite: for every built-in family, every
/// group element gamma and every cycle type lambda of degree <= max_n
/// (clamped per family), check z_lambda * coefficient = brute fix count,
/// plus Burnside orbit-count consistency.
pub fn run_equivalence_suite(max_n: u32) -> Result<Vec<FamilyReport>> {
    let mut reports = Vec::new();

    fn run<S: Ord + Clone>(
        reports: &mut Vec<FamilyReport>,
        family: &StructureFamily<S>,
        series: &GroupCycleIndexSeries,
        max_n: u32,
    ) -> Result<()> {
        let top = max_n.min(family.limit());
        let (checks, mismatches) = family.check_against_series(series, top)?;
        reports.push(FamilyReport {
            family: family.name().to_string(),
            max_n: top,
            checks,
            mismatches,
        });
        Ok(())
    }

    let trivial = FiniteGroup::trivial();

    run(
        &mut reports,
        &sets_family(),
        &GroupCycleIndexSeries::trivial_lift(&crate::library::set_species(), trivial.clone()),
        max_n,
    )?;
    run(
        &mut reports,
        &subsets_family(),
        &GroupCycleIndexSeries::trivial_lift(&crate::library::subsets(), trivial.clone()),
        max_n,
    )?;
    run(
        &mut reports,
        &linear_orders_family(),
        &crate::library::linear_with_reversal(),
        max_n,
    )?;
    run(
        &mut reports,
        &cyclic_orders_family(),
        &crate::library::cyclic_with_reversal(),
        max_n,
    )?;
    run(
        &mut reports,
        &graphs_family(),
        &crate::library::graph_gcis(),
        max_n,
    )?;
    run(
        &mut reports,
        &digraphs_family(),
        &crate::library::digraph_gcis(),
        max_n,
    )?;
    run(
        &mut reports,
        &binary_trees_family(),
        &crate::library::binary_trees_with_reversal()?,
        max_n,
    )?;
    run(
        &mut reports,
        &ternary_trees_family(),
        &crate::library::kary_trees_with_interchange(FiniteGroup::symmetric(3))?,
        max_n.min(4),
    )?;

    // R = X + E_2(R), trivially lifted.
    {
        let r = CycleIndexSeriesRecursion::leaf_trees()?;
        run(
            &mut reports,
            &leaf_trees_family(),
            &GroupCycleIndexSeries::trivial_lift(&r, trivial),
            max_n,
        )?;
    }

    Ok(reports)
}

/// Helper namespace for the recursions the oracle suite needs.
struct CycleIndexSeriesRecursion;

impl CycleIndexSeriesRecursion {
    /// R = X + E_2(R): leaf-labeled binary trees with unordered children.
    fn leaf_trees() -> Result<crate::series::CycleIndexSeries> {
        let r = crate::series::CycleIndexSeries::placeholder("R");
        let body = crate::library::singleton().add(&crate::library::set_of_size(2).plethysm(&r));
        r.define(&body)?;
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s_of(cycles: &[&[u32]], degree: usize) -> GroupElement {
        GroupElement::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn fix_count_examples() {
        let lin = linear_orders_family();
        let tau = s_of(&[&[1, 2]], 2);
        // everything fixed by the identity pair
        assert_eq!(
            lin.brute_fix_count(&GroupElement::identity(2), &GroupElement::identity(3))
                .unwrap(),
            6
        );
        // reversal composed with (1 2) fixes 2 of the 6 orders of {1,2,3}
        assert_eq!(lin.brute_fix_count(&tau, &s_of(&[&[1, 2]], 3)).unwrap(), 2);
        // 4 digraphs on 2 vertices, all fixed by the identity
        let dig = digraphs_family();
        assert_eq!(
            dig.brute_fix_count(&GroupElement::identity(2), &GroupElement::identity(2))
                .unwrap(),
            4
        );
    }

    #[test]
    fn orbit_count_examples() {
        let dig = digraphs_family();
        assert_eq!(dig.brute_orbit_count(3, true).unwrap(), 13);
        assert_eq!(dig.brute_orbit_count(2, true).unwrap(), 3);
        let bt = binary_trees_family();
        // 3 reversal classes of binary trees with 3 internal nodes (7 labels)
        assert_eq!(bt.brute_orbit_count(7, true).unwrap(), 3);
        // one empty structure
        assert_eq!(bt.brute_orbit_count(0, true).unwrap(), 1);
        assert_eq!(sets_family().brute_orbit_count(0, false).unwrap(), 1);
    }

    #[test]
    fn partial_label_examples() {
        let sets = sets_family();
        let e = GroupElement::identity(1);
        assert_eq!(
            sets.brute_partial_label_count(4, &Partition::new(vec![3, 1]), &e)
                .unwrap(),
            1
        );
        let lin = linear_orders_family();
        let e2 = GroupElement::identity(2);
        let tau = s_of(&[&[1, 2]], 2);
        // words with two of one color and one of another
        assert_eq!(
            lin.brute_partial_label_count(3, &Partition::new(vec![2, 1]), &e2)
                .unwrap(),
            3
        );
        // Profile (1,1) structures are labeled structures; no 2-element
        // list is fixed by reversal *as a labeled structure*, matching the
        // vanishing x1 x2 coefficient of eta(p_2).
        assert_eq!(
            lin.brute_partial_label_count(2, &Partition::ones(2), &tau)
                .unwrap(),
            0
        );
        // With a single color the two lists form one unlabeled structure,
        // and that one *is* reversal-fixed.
        assert_eq!(
            lin.brute_partial_label_count(2, &Partition::single(2), &tau)
                .unwrap(),
            1
        );
    }

    #[test]
    fn actions_commute_and_compose() {
        // relabel is an action and gamma commutes with it (spot check n = 3)
        let lin = linear_orders_family();
        let s3 = FiniteGroup::symmetric(3);
        let tau = s_of(&[&[1, 2]], 2);
        for s in lin.enumerate(3).unwrap() {
            for a in s3.elements() {
                for b in s3.elements() {
                    assert_eq!(
                        lin.relabel(&a.compose(b), &s),
                        lin.relabel(a, &lin.relabel(b, &s))
                    );
                }
                assert_eq!(
                    lin.gamma_act(&tau, &lin.relabel(a, &s)),
                    lin.relabel(a, &lin.gamma_act(&tau, &s))
                );
            }
        }
    }

    #[test]
    fn ternary_interchange_is_an_action() {
        let fam = ternary_trees_family();
        let s3 = FiniteGroup::symmetric(3);
        for t in fam.enumerate(3).unwrap().into_iter().step_by(7) {
            for a in s3.elements() {
                for b in s3.elements() {
                    assert_eq!(
                        fam.gamma_act(&a.compose(b), &t),
                        fam.gamma_act(a, &fam.gamma_act(b, &t))
                    );
                }
            }
        }
    }

    #[test]
    fn leaf_tree_counts_are_double_factorials() {
        let fam = leaf_trees_family();
        // (2n-3)!! leaf-labeled trees: 1, 1, 3, 15, 105
        let expected = [1usize, 1, 3, 15, 105];
        for (i, &e) in expected.iter().enumerate() {
            let n = i as u32 + 1;
            assert_eq!(fam.enumerate(n).unwrap().len(), e, "n = {n}");
        }
        // Wedderburn-Etherington orbit counts
        let we = [1u64, 1, 1, 2, 3, 6, 11];
        for (i, &e) in we.iter().enumerate() {
            let n = i as u32 + 1;
            assert_eq!(fam.brute_orbit_count(n, false).unwrap(), e, "n = {n}");
        }
    }
}
