//! Exact rational arithmetic, integer partitions, cycle-type combinatorics,
//! and the number-theoretic helpers underpinning all series computation.
//!
//! - [`Rational`]: arbitrary-precision rational, always in lowest terms
//! - [`Partition`]: weakly decreasing sequence of positive parts (a cycle type)
//! - [`partitions_of`]: all partitions of n in reverse-lexicographic order
//! - [`z_of`]: centralizer order z_lambda = prod_i i^{m_i} m_i!
//! - [`power_cycle_type`]: cycle type of sigma^d from the cycle type of sigma
//! - [`mobius`], [`euler_phi`], [`divisors`]: classical arithmetic functions
//! - [`factorial`], [`binomial`]: exact big-integer combinatorics

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{BigRational, One, Zero};

/// Exact rational coefficient type. Backed by `num::BigRational`, which
/// stores values in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse the text form "a" or "a/b".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k) as a big integer; 0 when k > n.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Number-theoretic Moebius function mu(n). Requires n >= 1.
pub fn mobius(n: u64) -> i32 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut m = n;
    let mut prime_count = 0u32;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0; // squared prime factor
            }
            prime_count += 1;
        }
        p += 1;
    }
    if m > 1 {
        prime_count += 1;
    }
    if prime_count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler totient phi(n). Requires n >= 1.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    let mut m = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// All positive divisors of n in increasing order. Requires n >= 1.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors is defined for n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Least common multiple of two u64 values (0 when either is 0).
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    num::integer::lcm(a, b)
}

/// An integer partition: a weakly decreasing sequence of positive integers.
///
/// Partitions index every series coefficient in this crate, playing the role
/// of a permutation cycle type. The empty partition (degree 0) is permitted.
/// The derived `Ord` compares part vectors lexicographically, so iterating a
/// sorted container in *descending* key order visits partitions of equal
/// degree in reverse-lexicographic order ([n] first, all-ones last).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build a partition from parts in any order. Panics on zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The partition [1, 1, ..., 1] of n.
    pub fn ones(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    /// The partition with a single part [n]; empty when n = 0.
    pub fn single(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Parts in weakly decreasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// (part size, multiplicity) pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((size, count)) if *size == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiplicity of a given part size.
    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// Multiset union with another partition (exponents add).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut merged = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                merged.push(self.parts[i]);
                i += 1;
            } else {
                merged.push(other.parts[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&self.parts[i..]);
        merged.extend_from_slice(&other.parts[j..]);
        Partition { parts: merged }
    }

    /// Multiply every part by `i` (i >= 1). Used by the stretch operator.
    pub fn scale(&self, i: u32) -> Partition {
        assert!(i >= 1);
        Partition {
            parts: self.parts.iter().map(|&p| p * i).collect(),
        }
    }

    /// Divide every part by `i`, or `None` if some part is not divisible.
    pub fn unscale(&self, i: u32) -> Option<Partition> {
        assert!(i >= 1);
        if self.parts.iter().all(|&p| p % i == 0) {
            Some(Partition {
                parts: self.parts.iter().map(|&p| p / i).collect(),
            })
        } else {
            None
        }
    }

    /// Least common multiple of the parts (1 for the empty partition).
    pub fn parts_lcm(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| lcm(acc, p as u64))
    }

    /// Enumerate all sub-multisets of this partition together with the
    /// complementary multiset and the product of per-part binomial weights
    /// prod_i C(lambda_i, mu_i). Used by the fix-count product convolution.
    pub fn sub_multisets(&self) -> Vec<(Partition, Partition, BigInt)> {
        let mult = self.multiplicities();
        let mut out = vec![(Vec::new(), Vec::new(), BigInt::one())];
        for &(size, count) in &mult {
            let mut next = Vec::with_capacity(out.len() * (count as usize + 1));
            for (taken, rest, weight) in &out {
                for j in 0..=count {
                    let mut t = taken.clone();
                    t.extend(std::iter::repeat_n(size, j as usize));
                    let mut r = rest.clone();
                    r.extend(std::iter::repeat_n(size, (count - j) as usize));
                    next.push((t, r, weight * binomial(count, j)));
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|(t, r, w)| (Partition { parts: t }, Partition { parts: r }, w))
            .collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Text form: comma-separated parts in brackets, e.g. "[3,1,1]"; empty "[]".
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| format!("partition `{s}` must be bracketed, e.g. [3,1,1]"))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| format!("invalid partition part `{}`", tok.trim()))?;
            if p == 0 {
                return Err("partition parts must be positive".into());
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

/// z_lambda = prod_i i^{m_i} m_i!, the order of the centralizer of a
/// permutation of cycle type lambda; n!/z_of(lambda) is the size of the
/// conjugacy class.
pub fn z_of(lambda: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    for (size, count) in lambda.multiplicities() {
        acc *= BigInt::from(size as u64).pow(count);
        acc *= factorial(count);
    }
    acc
}

/// Cycle type of sigma^d for any sigma of cycle type `lambda`: each part c
/// contributes gcd(c, d) parts of size c / gcd(c, d).
pub fn power_cycle_type(lambda: &Partition, d: u32) -> Partition {
    assert!(d >= 1, "power_cycle_type requires d >= 1");
    let mut parts = Vec::new();
    for &c in lambda.parts() {
        let g = num::integer::gcd(c, d);
        for _ in 0..g {
            parts.push(c / g);
        }
    }
    Partition::new(parts)
}

/// All partitions of n, each exactly once, in reverse-lexicographic order:
/// [n] first, then descending lexicographically, ending with [1,...,1].
/// partitions_of(0) yields the single empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    let mut current = vec![n];
    loop {
        out.push(Partition {
            parts: current.clone(),
        });
        // Find the rightmost part exceeding 1; if none, we are done.
        let Some(k) = current.iter().rposition(|&p| p > 1) else {
            break;
        };
        // Decrement it and redistribute the remainder greedily.
        let new_part = current[k] - 1;
        let mut remainder: u32 = current[k..].iter().sum::<u32>() - new_part;
        current.truncate(k);
        current.push(new_part);
        while remainder > 0 {
            let take = remainder.min(new_part);
            current.push(take);
            remainder -= take;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_of_examples() {
        assert_eq!(z_of(&Partition::empty()), BigInt::from(1));
        assert_eq!(z_of(&Partition::new(vec![1, 1, 1])), BigInt::from(6));
        // |conjugacy class of [2,1] in S_3| = 3!/z = 3, so z = 2.
        assert_eq!(z_of(&Partition::new(vec![2, 1])), BigInt::from(2));
        assert_eq!(z_of(&Partition::new(vec![2, 2, 1])), BigInt::from(8));
    }

    #[test]
    fn conjugacy_classes_partition_the_symmetric_group() {
        // sum over lambda |- n of n!/z_lambda = n! for n <= 10
        for n in 0..=10u32 {
            let nf = factorial(n);
            let total: BigInt = partitions_of(n).iter().map(|lam| &nf / z_of(lam)).sum();
            assert_eq!(total, nf, "n = {n}");
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn partitions_are_reverse_lexicographic_and_unique() {
        for n in 0..=12u32 {
            let ps = partitions_of(n);
            for w in ps.windows(2) {
                assert!(w[0].parts > w[1].parts, "order violated at n = {n}");
            }
            for p in &ps {
                assert_eq!(p.degree(), n);
            }
        }
        let four: Vec<String> = partitions_of(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(four, vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
    }

    #[test]
    fn power_cycle_type_examples() {
        assert_eq!(
            power_cycle_type(&Partition::single(6), 2),
            Partition::new(vec![3, 3])
        );
        assert_eq!(
            power_cycle_type(&Partition::single(5), 5),
            Partition::ones(5)
        );
        assert_eq!(
            power_cycle_type(&Partition::new(vec![4, 2, 1]), 2),
            Partition::new(vec![2, 2, 1, 1, 1])
        );
        assert_eq!(power_cycle_type(&Partition::empty(), 3), Partition::empty());
    }

    #[test]
    fn mobius_against_sieve_oracle() {
        // Independent sieve: mu via smallest-prime-factor factorization.
        let max = 200usize;
        let mut spf = vec![0usize; max + 1];
        for i in 2..=max {
            if spf[i] == 0 {
                for j in (i..=max).step_by(i) {
                    if spf[j] == 0 {
                        spf[j] = i;
                    }
                }
            }
        }
        let sieve_mu = |mut n: usize| -> i32 {
            let mut count = 0;
            while n > 1 {
                let p = spf[n];
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                count += 1;
            }
            if count % 2 == 0 {
                1
            } else {
                -1
            }
        };
        for n in 1..=max {
            assert_eq!(mobius(n as u64), sieve_mu(n), "n = {n}");
        }
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
    }

    #[test]
    fn mobius_sums_over_divisors() {
        assert_eq!(divisors(1).iter().map(|&d| mobius(d)).sum::<i32>(), 1);
        for n in 2..=100u64 {
            let s: i32 = divisors(n).iter().map(|&d| mobius(d)).sum();
            assert_eq!(s, 0, "n = {n}");
        }
    }

    #[test]
    fn phi_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        for n in 1..=60u64 {
            let s: u64 = divisors(n).iter().map(|&d| euler_phi(d)).sum();
            assert_eq!(s, n);
        }
    }

    #[test]
    fn partition_text_round_trip() {
        for s in ["[]", "[1]", "[3,1,1]", "[2,2]"] {
            let p: Partition = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[3,0]".parse::<Partition>().is_err());
        // Non-canonical input is sorted.
        assert_eq!(
            "[1,3,1]".parse::<Partition>().unwrap().to_string(),
            "[3,1,1]"
        );
    }

    #[test]
    fn sub_multisets_weights() {
        // For [1,1]: submultiset weights C(2,j) sum to 2^2.
        let subs = Partition::new(vec![1, 1]).sub_multisets();
        let total: BigInt = subs.iter().map(|(_, _, w)| w.clone()).sum();
        assert_eq!(total, BigInt::from(4));
        // Split degrees are complementary.
        for (a, b, _) in &subs {
            assert_eq!(a.degree() + b.degree(), 2);
        }
    }

    #[test]
    fn rational_text_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rational(-4));
        assert_eq!(ratio(1, 2).to_string(), "1/2");
        assert_eq!(rational(7).to_string(), "7");
        assert_eq!(ratio(2, -4).to_string(), "-1/2"); // denominator kept positive
        assert!(parse_rational("1/0").is_none());
    }
}
