//! Finite permutation groups supplying the structural action: element
//! enumeration, products, powers, orders, and cycle types.
//!
//! Elements act on {1..k} and are stored by their image sequence; groups are
//! concrete element sets closed under composition and inverse. Text form is
//! cycle notation: "(1 2)(3 4 5)", identity "()".

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{factorial, lcm, Partition};
use crate::error::{Error, Result};

/// A permutation of {1..k}, stored as the image sequence: `images[i]` is the
/// image of i+1 (values are 1-based).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    images: Vec<u32>,
}

impl GroupElement {
    /// The identity permutation on {1..k}.
    pub fn identity(k: usize) -> Self {
        GroupElement {
            images: (1..=k as u32).collect(),
        }
    }

    /// Build from a 1-based image sequence; checks it is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &v in &images {
            if v == 0 || v as usize > k || seen[v as usize - 1] {
                return Err(Error::GeneratorDegreeMismatch {
                    expected: k,
                    found: k,
                });
            }
            seen[v as usize - 1] = true;
        }
        Ok(GroupElement { images })
    }

    /// Build from disjoint cycles over {1..degree}, e.g. `&[&[1,2],&[3,4,5]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (1..=degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for w in 0..cycle.len() {
                let a = cycle[w];
                let b = cycle[(w + 1) % cycle.len()];
                if a == 0 || a as usize > degree || touched[a as usize - 1] {
                    return Err(Error::GeneratorDegreeMismatch {
                        expected: degree,
                        found: a as usize,
                    });
                }
                touched[a as usize - 1] = true;
                images[a as usize - 1] = b;
            }
        }
        GroupElement::from_images(images)
    }

    /// Parse cycle notation "(1 2)(3 4 5)"; "()" is the identity. The target
    /// degree must be supplied since fixed points are omitted from the text.
    pub fn parse(s: &str, degree: usize) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "e" {
            return Ok(GroupElement::identity(degree));
        }
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| format!("expected '(' in permutation `{s}`"))?;
            if !rest[..open].trim().is_empty() {
                return Err(format!(
                    "unexpected text `{}` in permutation",
                    &rest[..open]
                ));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| format!("unbalanced '(' in permutation `{s}`"))?;
            let body = &rest[open + 1..close];
            let cycle: Vec<u32> = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| format!("invalid point `{t}`")))
                .collect::<std::result::Result<_, _>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        GroupElement::from_cycles(degree, &refs)
            .map_err(|_| format!("`{s}` is not a permutation of {{1..{degree}}}"))
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    /// Composition: `self.compose(h)` maps x to self(h(x)), i.e. h acts first.
    pub fn compose(&self, h: &GroupElement) -> GroupElement {
        debug_assert_eq!(self.degree(), h.degree());
        GroupElement {
            images: (1..=self.degree() as u32)
                .map(|x| self.apply(h.apply(x)))
                .collect(),
        }
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> GroupElement {
        let mut images = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u32 + 1;
        }
        GroupElement { images }
    }

    /// `self` composed with itself `i` times; power 0 is the identity.
    pub fn power(&self, i: u64) -> GroupElement {
        let mut acc = GroupElement::identity(self.degree());
        let mut base = self.clone();
        let mut e = i;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycles of the permutation, each starting at its least point, ordered
    /// by least point. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 1..=k as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// Multiplicative order (lcm of the cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as u32 + 1)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<u32>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cycle in nontrivial {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite permutation group: a set of permutations of {1..degree} closed
/// under composition and inverse, with the identity present. Elements are
/// kept sorted by image sequence, giving every group a canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<GroupElement>,
}

impl FiniteGroup {
    /// The trivial group acting on a single point.
    pub fn trivial() -> Arc<Self> {
        Arc::new(FiniteGroup {
            degree: 1,
            elements: vec![GroupElement::identity(1)],
        })
    }

    /// The full symmetric group S_k (k >= 1), all k! permutations.
    pub fn symmetric(k: usize) -> Arc<Self> {
        assert!(k >= 1, "symmetric group degree must be >= 1");
        let mut elements = Vec::new();
        let mut images: Vec<u32> = (1..=k as u32).collect();
        // Heap's algorithm, collecting every arrangement.
        fn heap(a: &mut Vec<u32>, n: usize, out: &mut Vec<GroupElement>) {
            if n <= 1 {
                out.push(GroupElement { images: a.clone() });
                return;
            }
            for i in 0..n {
                heap(a, n - 1, out);
                if n.is_multiple_of(2) {
                    a.swap(i, n - 1);
                } else {
                    a.swap(0, n - 1);
                }
            }
        }
        heap(&mut images, k, &mut elements);
        elements.sort();
        elements.dedup();
        debug_assert_eq!(elements.len(), (1..=k).product::<usize>());
        Arc::new(FiniteGroup {
            degree: k,
            elements,
        })
    }

    /// The cyclic group generated by the k-cycle (1 2 ... k).
    pub fn cyclic(k: usize) -> Arc<Self> {
        assert!(k >= 1);
        let gen = GroupElement {
            images: (1..=k as u32)
                .map(|i| if i == k as u32 { 1 } else { i + 1 })
                .collect(),
        };
        Self::from_generators(k, &[gen]).expect("cyclic generator is valid")
    }

    /// The group generated by `gens` inside S_degree, computed as the orbit
    /// of the identity under left multiplication by the generators.
    pub fn from_generators(degree: usize, gens: &[GroupElement]) -> Result<Arc<Self>> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::GeneratorDegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = GroupElement::identity(degree);
        let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut frontier = vec![identity];
        while let Some(g) = frontier.pop() {
            for gen in gens {
                let h = gen.compose(&g);
                if seen.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        Ok(Arc::new(FiniteGroup {
            degree,
            elements: seen.into_iter().collect(),
        }))
    }

    /// Degree of the ambient symmetric group.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in canonical (sorted) order; the identity is present.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.degree)
    }

    /// Index of an element in the canonical order, or None if absent.
    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index_of(g).is_some()
    }

    /// True if the two groups have the same degree and element set.
    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup(degree {}, order {})",
            self.degree,
            self.order()
        )
    }
}

/// Check |group| divides degree!, by exact big-integer arithmetic.
pub fn order_divides_degree_factorial(group: &FiniteGroup) -> bool {
    use num::Zero;
    let df = factorial(group.degree() as u32);
    (df % num::BigInt::from(group.order())).is_zero()
}
