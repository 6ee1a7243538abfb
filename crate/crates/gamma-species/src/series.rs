//! Cycle index series as lazily evaluated, partition-indexed graded series.
//!
//! A [`CycleIndexSeries`] is a node in an operator graph. Each node memoizes
//! its degree-n strata (maps from partitions of n to exact rationals) and
//! knows how to compute a stratum from its operands:
//!
//! - sums, differences, scalar multiples: coefficient-wise
//! - products: polynomial multiplication in the power-sum indeterminates
//! - [`CycleIndexSeries::stretch`]: substitute p_j -> p_{ij}
//! - [`CycleIndexSeries::restrict`]: zero outside a degree window
//! - [`CycleIndexSeries::plethysm`]: substitution of a series for each p_i
//! - recursion: a placeholder node whose body is installed by `define`
//!
//! Alongside the dense path, a node may carry a *fix oracle*: a closed-form
//! rule lambda -> fix count answering point queries at arbitrary degree.
//! Built-ins supply oracles directly; sums, differences, scalar multiples,
//! products, restrictions and stretches of oracle-bearing series derive
//! oracles automatically. Plethysm results carry none.
//!
//! Recursion is demand-driven with per-(node, degree) in-progress marks: a
//! degree-n computation that re-enters itself at degree n fails with a
//! cycle-detection error instead of looping.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::atomic::{AtomicBool, AtomicU32, Ordering};
use std::sync::{Arc, Mutex};

use num::{BigInt, One, Signed, Zero};

use crate::algebra::{factorial, partitions_of, z_of, Partition, Rational};
use crate::error::{Error, Result};

/// Closed-form fix-count rule: lambda -> z_lambda * [p_lambda] F.
pub type FixFn = Arc<dyn Fn(&Partition) -> Result<Rational> + Send + Sync>;

static MAX_DENSE_DEGREE: AtomicU32 = AtomicU32::new(0);

/// Cap on dense stratum computation. Initialized from the environment
/// variable `GSPEC_MAX_DEGREE` on first use (default 30). Point queries that
/// go through a fix oracle are not subject to the cap.
pub fn max_dense_degree() -> u32 {
    let v = MAX_DENSE_DEGREE.load(Ordering::Relaxed);
    if v != 0 {
        return v;
    }
    let limit = std::env::var("GSPEC_MAX_DEGREE")
        .ok()
        .and_then(|s| s.trim().parse::<u32>().ok())
        .filter(|&x| x > 0)
        .unwrap_or(30);
    MAX_DENSE_DEGREE.store(limit, Ordering::Relaxed);
    limit
}

/// Override the dense-computation cap for this process.
pub fn set_max_dense_degree(limit: u32) {
    MAX_DENSE_DEGREE.store(limit.max(1), Ordering::Relaxed);
}

/// One graded piece of a series: partition -> coefficient, zeros omitted.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Stratum {
    coeffs: BTreeMap<Partition, Rational>,
}

impl Stratum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, lambda: Partition, c: Rational) {
        if !c.is_zero() {
            self.coeffs.insert(lambda, c);
        }
    }

    pub fn add_assign_coeff(&mut self, lambda: &Partition, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(lambda) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.coeffs.remove(lambda);
                }
            }
            None => {
                self.coeffs.insert(lambda.clone(), c.clone());
            }
        }
    }

    /// self += scale * other
    pub fn add_scaled(&mut self, other: &Stratum, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (lam, c) in &other.coeffs {
            let scaled = c * scale;
            self.add_assign_coeff(lam, &scaled);
        }
    }

    /// self += a * b as polynomials in the p-indeterminates
    /// (p_lambda * p_mu = p_{lambda union mu}).
    pub fn add_product(&mut self, a: &Stratum, b: &Stratum) {
        for (lam, x) in &a.coeffs {
            for (mu, y) in &b.coeffs {
                let prod = x * y;
                self.add_assign_coeff(&lam.union(mu), &prod);
            }
        }
    }

    /// Coefficients in ascending lexicographic partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    /// Coefficients in reverse-lexicographic partition order ([n] first).
    pub fn iter_revlex(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter().rev()
    }

    /// Sum of all coefficients (the isotype contribution of this degree).
    pub fn coefficient_sum(&self) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.values() {
            acc += c;
        }
        acc
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Plethysm node state: outer series plus the inner series substituted for
/// each p_i. `inners[j]` is substituted (stretched by i) for p_i whenever
/// i = j mod inners.len(); ordinary plethysm has a single inner, the
/// group-equivariant form passes the components at the powers of gamma.
struct PlethysmNode {
    outer: CycleIndexSeries,
    inners: Vec<CycleIndexSeries>,
    /// Set when a constant-term probe hit an in-progress recursion and the
    /// zero-constant-term convention was assumed; verified on later strata.
    assumed_zero_constant: AtomicBool,
    /// Memoized term graphs: lambda -> product of stretched inner powers.
    terms: Mutex<HashMap<Partition, CycleIndexSeries>>,
    /// Memoized power graphs: (part size i, exponent m) -> stretch_i(G_i)^m.
    powers: Mutex<HashMap<(u32, u32), CycleIndexSeries>>,
}

impl PlethysmNode {
    fn inner_for(&self, i: u32) -> &CycleIndexSeries {
        &self.inners[(i as usize) % self.inners.len()]
    }

    fn power(&self, i: u32, m: u32) -> CycleIndexSeries {
        if let Some(p) = self.powers.lock().unwrap().get(&(i, m)) {
            return p.clone();
        }
        let base = self.inner_for(i).stretch(i);
        let result = if m == 1 {
            base
        } else {
            self.power(i, m - 1).multiply(&self.power(i, 1))
        };
        self.powers.lock().unwrap().insert((i, m), result.clone());
        result
    }

    fn term(&self, lambda: &Partition) -> CycleIndexSeries {
        if let Some(t) = self.terms.lock().unwrap().get(lambda) {
            return t.clone();
        }
        let mut factors = lambda
            .multiplicities()
            .into_iter()
            .map(|(i, m)| self.power(i, m));
        let head = factors.next();
        let result = match head {
            None => CycleIndexSeries::one(),
            Some(first) => factors.fold(first, |acc, f| acc.multiply(&f)),
        };
        self.terms
            .lock()
            .unwrap()
            .insert(lambda.clone(), result.clone());
        result
    }
}

/// How a node computes its strata.
#[derive(Clone)]
enum Source {
    /// Created empty; queries error until `define` installs a body.
    Placeholder,
    /// Installed by `define`: delegate to the body.
    Defer(CycleIndexSeries),
    /// Closed-form fix counts; stratum n is assembled over partitions of n.
    Fix(FixFn),
    Add(CycleIndexSeries, CycleIndexSeries),
    Sub(CycleIndexSeries, CycleIndexSeries),
    Scale(Rational, CycleIndexSeries),
    Mul(CycleIndexSeries, CycleIndexSeries),
    Stretch(u32, CycleIndexSeries),
    Restrict {
        lo: u32,
        hi: Option<u32>,
        inner: CycleIndexSeries,
    },
    Plethysm(Arc<PlethysmNode>),
}

struct Node {
    name: Mutex<Option<String>>,
    source: Mutex<Source>,
    memo: Mutex<BTreeMap<u32, Arc<Stratum>>>,
    /// Optional closed-form point-query rule; immutable after construction.
    fix: Option<FixFn>,
    /// Inclusive degree bound: strata above it are known zero.
    max_degree: Option<u32>,
}

thread_local! {
    static IN_PROGRESS: RefCell<HashSet<(usize, u32)>> = RefCell::new(HashSet::new());
}

struct ProgressGuard {
    key: (usize, u32),
}

impl ProgressGuard {
    fn enter(key: (usize, u32), name: impl FnOnce() -> String, degree: u32) -> Result<Self> {
        let fresh = IN_PROGRESS.with(|s| s.borrow_mut().insert(key));
        if !fresh {
            return Err(Error::NonProductiveRecursion {
                series: name(),
                degree,
            });
        }
        Ok(ProgressGuard { key })
    }
}

impl Drop for ProgressGuard {
    fn drop(&mut self) {
        IN_PROGRESS.with(|s| {
            s.borrow_mut().remove(&self.key);
        });
    }
}

/// A lazily evaluated cycle index series. Cloning is cheap (shared node);
/// coefficients are memoized per degree and stable across repeated queries.
#[derive(Clone)]
pub struct CycleIndexSeries(Arc<Node>);

fn empty_stratum() -> Arc<Stratum> {
    static EMPTY: std::sync::OnceLock<Arc<Stratum>> = std::sync::OnceLock::new();
    EMPTY.get_or_init(|| Arc::new(Stratum::new())).clone()
}

impl CycleIndexSeries {
    fn build(source: Source, fix: Option<FixFn>, max_degree: Option<u32>) -> Self {
        CycleIndexSeries(Arc::new(Node {
            name: Mutex::new(None),
            source: Mutex::new(source),
            memo: Mutex::new(BTreeMap::new()),
            fix,
            max_degree,
        }))
    }

    /// The zero series.
    pub fn zero() -> Self {
        Self::from_fix_fn("0", Some(0), |_| Rational::zero())
    }

    /// The series of the species 1: a single structure on the empty set.
    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// Constant series c * p_[].
    pub fn constant(c: Rational) -> Self {
        let name = c.to_string();
        Self::from_fix_fn(&name, Some(0), move |lam| {
            if lam.is_empty() {
                c.clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Series defined by a closed-form fix-count rule. The rule doubles as
    /// the node's fix oracle; the dense stratum at degree n is assembled by
    /// evaluating it over all partitions of n.
    pub fn from_fix_fn<F>(name: &str, max_degree: Option<u32>, fix: F) -> Self
    where
        F: Fn(&Partition) -> Rational + Send + Sync + 'static,
    {
        let f: FixFn = Arc::new(move |lam| Ok(fix(lam)));
        let s = Self::build(Source::Fix(f.clone()), Some(f), max_degree);
        s.set_name(name);
        s
    }

    /// Like [`from_fix_fn`](Self::from_fix_fn) but the rule may fail.
    pub fn from_fallible_fix_fn<F>(name: &str, max_degree: Option<u32>, fix: F) -> Self
    where
        F: Fn(&Partition) -> Result<Rational> + Send + Sync + 'static,
    {
        let f: FixFn = Arc::new(fix);
        let s = Self::build(Source::Fix(f.clone()), Some(f), max_degree);
        s.set_name(name);
        s
    }

    /// An empty placeholder for a recursive definition; querying it before
    /// `define` is an error.
    pub fn placeholder(name: &str) -> Self {
        let s = Self::build(Source::Placeholder, None, None);
        s.set_name(name);
        s
    }

    /// Install the body of a recursive definition. The body may reference
    /// the placeholder, but only through operations whose degree-n output
    /// depends on strictly lower degrees of it; violations are detected at
    /// query time as cycle errors.
    pub fn define(&self, body: &CycleIndexSeries) -> Result<()> {
        let mut src = self.0.source.lock().unwrap();
        match &*src {
            Source::Placeholder => {
                *src = Source::Defer(body.clone());
                Ok(())
            }
            _ => Err(Error::AlreadyDefined {
                series: self.name(),
            }),
        }
    }

    pub fn name(&self) -> String {
        self.0
            .name
            .lock()
            .unwrap()
            .clone()
            .unwrap_or_else(|| "<series>".to_string())
    }

    pub fn set_name(&self, name: &str) {
        *self.0.name.lock().unwrap() = Some(name.to_string());
    }

    /// Rename in place and return self (builder style).
    pub fn named(self, name: &str) -> Self {
        self.set_name(name);
        self
    }

    /// Inclusive degree bound, if one is known; strata above it are zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.0.max_degree
    }

    /// The node's fix oracle, if it carries one.
    pub fn fix_fn(&self) -> Option<FixFn> {
        self.0.fix.clone()
    }

    pub fn has_fix_oracle(&self) -> bool {
        self.0.fix.is_some()
    }

    /// The degree-n stratum, memoized. Dense computation is capped by
    /// [`max_dense_degree`]; degrees above a known max-degree bound return
    /// the empty stratum without computation.
    pub fn stratum(&self, n: u32) -> Result<Arc<Stratum>> {
        if let Some(bound) = self.0.max_degree {
            if n > bound {
                return Ok(empty_stratum());
            }
        }
        if let Some(s) = self.0.memo.lock().unwrap().get(&n) {
            return Ok(s.clone());
        }
        let limit = max_dense_degree();
        if n > limit {
            return Err(Error::DegreeLimit { degree: n, limit });
        }
        let key = (Arc::as_ptr(&self.0) as usize, n);
        let _guard = ProgressGuard::enter(key, || self.name(), n)?;
        let source = self.0.source.lock().unwrap().clone();
        let computed = self.compute_stratum(&source, n)?;
        drop(_guard);
        let mut memo = self.0.memo.lock().unwrap();
        Ok(memo.entry(n).or_insert(computed).clone())
    }

    fn compute_stratum(&self, source: &Source, n: u32) -> Result<Arc<Stratum>> {
        match source {
            Source::Placeholder => Err(Error::UndefinedPlaceholder {
                series: self.name(),
            }),
            Source::Defer(body) => body.stratum(n),
            Source::Fix(f) => {
                let mut s = Stratum::new();
                for lam in partitions_of(n) {
                    let fix = f(&lam)?;
                    if !fix.is_zero() {
                        let z = Rational::from_integer(z_of(&lam));
                        s.set(lam, fix / z);
                    }
                }
                Ok(Arc::new(s))
            }
            Source::Add(a, b) => {
                let mut s = (*a.stratum(n)?).clone();
                s.add_scaled(&*b.stratum(n)?, &Rational::one());
                Ok(Arc::new(s))
            }
            Source::Sub(a, b) => {
                let mut s = (*a.stratum(n)?).clone();
                s.add_scaled(&*b.stratum(n)?, &-Rational::one());
                Ok(Arc::new(s))
            }
            Source::Scale(c, a) => {
                let mut s = Stratum::new();
                s.add_scaled(&*a.stratum(n)?, c);
                Ok(Arc::new(s))
            }
            Source::Mul(f, g) => {
                let mut acc = Stratum::new();
                for d in 0..=n {
                    let e = n - d;
                    // Evaluate the lower-degree factor first and skip the
                    // other when it vanishes; this is what lets recursive
                    // operands appear on either side of a product.
                    let (fs, gs) = if d <= e {
                        let a = f.stratum(d)?;
                        if a.is_zero() {
                            continue;
                        }
                        let b = g.stratum(e)?;
                        (a, b)
                    } else {
                        let b = g.stratum(e)?;
                        if b.is_zero() {
                            continue;
                        }
                        let a = f.stratum(d)?;
                        (a, b)
                    };
                    if gs.is_zero() || fs.is_zero() {
                        continue;
                    }
                    acc.add_product(&fs, &gs);
                }
                Ok(Arc::new(acc))
            }
            Source::Stretch(i, a) => {
                if !n.is_multiple_of(*i) {
                    return Ok(empty_stratum());
                }
                let inner = a.stratum(n / i)?;
                let mut s = Stratum::new();
                for (lam, c) in inner.iter() {
                    s.set(lam.scale(*i), c.clone());
                }
                Ok(Arc::new(s))
            }
            Source::Restrict { lo, hi, inner } => {
                let inside = n >= *lo && hi.is_none_or(|h| n < h);
                if inside {
                    inner.stratum(n)
                } else {
                    Ok(empty_stratum())
                }
            }
            Source::Plethysm(node) => self.plethysm_stratum(node, n),
        }
    }

    fn plethysm_stratum(&self, node: &Arc<PlethysmNode>, n: u32) -> Result<Arc<Stratum>> {
        // Probe the constant term of every inner series. A probe that hits
        // an in-progress recursion adopts the zero-constant-term convention
        // of species composition; the assumption is re-verified on every
        // later stratum once the constant term is available.
        let mut inner_constant_zero = true;
        for inner in &node.inners {
            match inner.stratum(0) {
                Ok(s) => {
                    if !s.is_zero() {
                        inner_constant_zero = false;
                    }
                }
                Err(Error::NonProductiveRecursion { .. }) => {
                    node.assumed_zero_constant.store(true, Ordering::SeqCst);
                }
                Err(e) => return Err(e),
            }
        }
        if !inner_constant_zero {
            if node.assumed_zero_constant.load(Ordering::SeqCst) {
                return Err(Error::CompositionUndefined {
                    reason: format!(
                        "recursive composition in `{}` assumed a zero constant term for the inner series, but it is nonzero",
                        self.name()
                    ),
                });
            }
            if node.outer.max_degree().is_none() {
                return Err(Error::CompositionUndefined {
                    reason: format!(
                        "inner series of `{}` has a nonzero constant term and the outer series `{}` is not degree-bounded",
                        self.name(),
                        node.outer.name()
                    ),
                });
            }
        }
        let scan_max = match (inner_constant_zero, node.outer.max_degree()) {
            (true, Some(d)) => n.min(d),
            (true, None) => n,
            (false, Some(d)) => d,
            (false, None) => unreachable!("rejected above"),
        };
        let mut acc = Stratum::new();
        for m in 0..=scan_max {
            let outer_stratum = node.outer.stratum(m)?;
            for (lam, c) in outer_stratum.iter() {
                let term = node.term(lam);
                let ts = term.stratum(n)?;
                acc.add_scaled(&ts, c);
            }
        }
        Ok(Arc::new(acc))
    }

    /// Coefficient of p_lambda. Within the dense cap this reads the
    /// memoized stratum; beyond it, a fix oracle answers fix/z directly, so
    /// the resource-limit error fires only when no oracle exists.
    pub fn coefficient(&self, lambda: &Partition) -> Result<Rational> {
        let n = lambda.degree();
        if n > max_dense_degree() && self.0.max_degree.is_none_or(|b| n <= b) {
            if let Some(f) = &self.0.fix {
                let z = Rational::from_integer(z_of(lambda));
                return Ok(f(lambda)? / z);
            }
        }
        Ok(self.stratum(n)?.coefficient(lambda))
    }

    /// z_lambda * coefficient(lambda): the number of structures fixed by the
    /// pair (group action, permutation of type lambda). Uses the fix oracle
    /// when available, bypassing dense computation.
    pub fn fix_count(&self, lambda: &Partition) -> Result<Rational> {
        if let Some(f) = &self.0.fix {
            return f(lambda);
        }
        let z = Rational::from_integer(z_of(lambda));
        Ok(self.coefficient(lambda)? * z)
    }

    pub fn add(&self, other: &CycleIndexSeries) -> CycleIndexSeries {
        let fix = match (self.fix_fn(), other.fix_fn()) {
            (Some(a), Some(b)) => {
                Some(Arc::new(move |lam: &Partition| Ok(a(lam)? + b(lam)?)) as FixFn)
            }
            _ => None,
        };
        let max = match (self.max_degree(), other.max_degree()) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        Self::build(Source::Add(self.clone(), other.clone()), fix, max)
    }

    pub fn subtract(&self, other: &CycleIndexSeries) -> CycleIndexSeries {
        let fix = match (self.fix_fn(), other.fix_fn()) {
            (Some(a), Some(b)) => {
                Some(Arc::new(move |lam: &Partition| Ok(a(lam)? - b(lam)?)) as FixFn)
            }
            _ => None,
        };
        let max = match (self.max_degree(), other.max_degree()) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        Self::build(Source::Sub(self.clone(), other.clone()), fix, max)
    }

    pub fn negate(&self) -> CycleIndexSeries {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> CycleIndexSeries {
        let fix = self.fix_fn().map(|f| {
            let c = c.clone();
            Arc::new(move |lam: &Partition| Ok(f(lam)? * c.clone())) as FixFn
        });
        Self::build(
            Source::Scale(c.clone(), self.clone()),
            fix,
            self.max_degree(),
        )
    }

    /// Species product. Dense strata multiply as polynomials; the derived
    /// fix oracle is the cycle-splitting convolution
    /// fix_{FG}(lambda) = sum over sub-multisets mu of lambda of
    /// prod_i C(lambda_i, mu_i) fix_F(mu) fix_G(lambda minus mu).
    pub fn multiply(&self, other: &CycleIndexSeries) -> CycleIndexSeries {
        let fix = match (self.fix_fn(), other.fix_fn()) {
            (Some(a), Some(b)) => Some(Arc::new(move |lam: &Partition| {
                let mut total = Rational::zero();
                for (mu, rest, weight) in lam.sub_multisets() {
                    let x = a(&mu)?;
                    if x.is_zero() {
                        continue;
                    }
                    let y = b(&rest)?;
                    if y.is_zero() {
                        continue;
                    }
                    total += x * y * Rational::from_integer(weight);
                }
                Ok(total)
            }) as FixFn),
            _ => None,
        };
        let max = match (self.max_degree(), other.max_degree()) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Self::build(Source::Mul(self.clone(), other.clone()), fix, max)
    }

    /// Replace every p_j by p_{ij}: the coefficient of p_{i*lambda} equals
    /// the coefficient of p_lambda; all other coefficients vanish.
    pub fn stretch(&self, i: u32) -> CycleIndexSeries {
        assert!(i >= 1, "stretch factor must be >= 1");
        if i == 1 {
            return self.clone();
        }
        let fix = self.fix_fn().map(|f| {
            Arc::new(move |lam: &Partition| match lam.unscale(i) {
                None => Ok(Rational::zero()),
                // z_{i*mu} / z_mu = i^{#parts}, so fix scales by i^{#parts}.
                Some(mu) => {
                    let scale = BigInt::from(i as u64).pow(mu.len() as u32);
                    Ok(f(&mu)? * Rational::from_integer(scale))
                }
            }) as FixFn
        });
        let max = self.max_degree().map(|m| m.saturating_mul(i));
        Self::build(Source::Stretch(i, self.clone()), fix, max)
    }

    /// Zero the coefficients outside the degree window [lo, hi); `hi = None`
    /// leaves the series unbounded above.
    pub fn restrict(&self, lo: u32, hi: Option<u32>) -> CycleIndexSeries {
        if let Some(h) = hi {
            assert!(lo <= h, "restrict window is empty the wrong way around");
        }
        let fix = self.fix_fn().map(|f| {
            Arc::new(move |lam: &Partition| {
                let n = lam.degree();
                if n >= lo && hi.is_none_or(|h| n < h) {
                    f(lam)
                } else {
                    Ok(Rational::zero())
                }
            }) as FixFn
        });
        let own_bound = hi.map(|h| h.saturating_sub(1));
        let max = match (self.max_degree(), own_bound) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
            (None, b) => b,
        };
        Self::build(
            Source::Restrict {
                lo,
                hi,
                inner: self.clone(),
            },
            fix,
            max,
        )
    }

    /// Plethysm F o G: substitute stretch_i(G) for each p_i in F. Requires
    /// either a zero constant term on G or a degree-bounded F; violations
    /// surface as composition-undefined errors at query time.
    pub fn plethysm(&self, inner: &CycleIndexSeries) -> CycleIndexSeries {
        Self::plethysm_multi(self, vec![inner.clone()])
    }

    /// Plethysm with a rotation of inner series: `inners[i mod len]` is
    /// substituted (stretched by i) for p_i. This is the engine behind the
    /// group-equivariant plethysm, where p_i receives the component at the
    /// i-th power of the group element.
    pub fn plethysm_multi(
        outer: &CycleIndexSeries,
        inners: Vec<CycleIndexSeries>,
    ) -> CycleIndexSeries {
        assert!(!inners.is_empty());
        let node = PlethysmNode {
            outer: outer.clone(),
            inners,
            assumed_zero_constant: AtomicBool::new(false),
            terms: Mutex::new(HashMap::new()),
            powers: Mutex::new(HashMap::new()),
        };
        Self::build(Source::Plethysm(Arc::new(node)), None, None)
    }

    /// EGF of labeled structures: coefficient of x^n is
    /// fix(lambda = 1^n) / n! = [p_1^n] F.
    pub fn labeled_egf(&self) -> OneVariableSeries {
        let f = self.clone();
        OneVariableSeries::new(move |n| {
            let fix = f.fix_count(&Partition::ones(n))?;
            Ok(fix / Rational::from_integer(factorial(n)))
        })
    }

    /// OGF of unlabeled structures (isomorphism types): coefficient of x^n
    /// is the sum of all degree-n coefficients (the substitution p_i -> x^i).
    pub fn isotype_ogf(&self) -> OneVariableSeries {
        let f = self.clone();
        OneVariableSeries::new(move |n| Ok(f.stratum(n)?.coefficient_sum()))
    }

    /// Number of labeled structures on n points: n! times the EGF
    /// coefficient, i.e. fix_count at [1,...,1].
    pub fn labeled_count(&self, n: u32) -> Result<Rational> {
        self.fix_count(&Partition::ones(n))
    }

    /// Number of isomorphism types on n points.
    pub fn isotype_count(&self, n: u32) -> Result<Rational> {
        Ok(self.stratum(n)?.coefficient_sum())
    }

    /// True when the two series agree coefficient-wise to the given degree.
    pub fn agrees_to_degree(&self, other: &CycleIndexSeries, max_degree: u32) -> Result<bool> {
        for n in 0..=max_degree {
            if *self.stratum(n)? != *other.stratum(n)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Print form, one line per degree: "n: c*p[lambda] + ...", partitions
    /// in reverse-lexicographic order, rationals as "a" or "a/b".
    pub fn pretty_to_degree(&self, max_degree: u32) -> Result<String> {
        let mut out = String::new();
        for n in 0..=max_degree {
            let s = self.stratum(n)?;
            let _ = write!(out, "{n}:");
            if s.is_zero() {
                out.push_str(" 0");
            } else {
                for (i, (lam, c)) in s.iter_revlex().enumerate() {
                    out.push_str(if i == 0 { " " } else { " + " });
                    if lam.is_empty() {
                        let _ = write!(out, "{c}");
                    } else {
                        let _ = write!(out, "{c}*p{lam}");
                    }
                }
            }
            out.push('\n');
        }
        Ok(out)
    }
}

impl std::fmt::Debug for CycleIndexSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CycleIndexSeries({})", self.name())
    }
}

/// A one-variable formal power series with lazily computed, memoized
/// rational coefficients.
pub struct OneVariableSeries {
    coeff_fn: Arc<dyn Fn(u32) -> Result<Rational> + Send + Sync>,
    memo: Mutex<BTreeMap<u32, Rational>>,
}

impl OneVariableSeries {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(u32) -> Result<Rational> + Send + Sync + 'static,
    {
        OneVariableSeries {
            coeff_fn: Arc::new(f),
            memo: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn coefficient(&self, n: u32) -> Result<Rational> {
        if let Some(c) = self.memo.lock().unwrap().get(&n) {
            return Ok(c.clone());
        }
        let c = (self.coeff_fn)(n)?;
        Ok(self.memo.lock().unwrap().entry(n).or_insert(c).clone())
    }

    /// Coefficients for degrees 0..=max.
    pub fn coefficients(&self, max: u32) -> Result<Vec<Rational>> {
        (0..=max).map(|n| self.coefficient(n)).collect()
    }
}

/// Interpret a rational as an exact nonnegative-or-any integer count,
/// erroring when it has a denominator.
pub fn integral_count(value: &Rational, context: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegerCount {
            context: context.to_string(),
            value: value.to_string(),
        })
    }
}

/// Validate an induced cycle count: non-integer or negative values signal
/// an inconsistent group cycle index input.
pub fn nonnegative_count(value: &Rational, context: &str) -> Result<BigInt> {
    if !value.is_integer() {
        return Err(Error::InconsistentInducedCount {
            context: format!("{context} evaluated to non-integer {value}"),
        });
    }
    let n = value.to_integer();
    if n.is_negative() {
        return Err(Error::InconsistentInducedCount {
            context: format!("{context} evaluated to negative count {n}"),
        });
    }
    Ok(n)
}
