//! Exact big-integer arithmetic: factorials, the comparison `a^n` vs `n!`,
//! and the ground-truth oracle for the least `n` with `a^n <= n!`.
//!
//! Nothing in this module rounds. All comparisons are performed on integers
//! (`a = p/q` turns `a^n <= n!` into `p^n <= q^n * n!`), which makes the
//! module the trust anchor the interval routes are checked against.

use std::cmp::Ordering;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default ceiling on factorial arguments (number of cache entries).
pub const DEFAULT_FACTORIAL_GUARD: u64 = 1_000_000;

/// A positive rational number, always stored reduced.
///
/// Construction reduces by the gcd, so equality and ordering are canonical.
/// Zero or negative values are rejected; the type only ever carries
/// quantities that are positive in this crate (bases `a`, endpoint samples,
/// exact ratios like `(n+1)^n / n!`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigUint,
    den: BigUint,
}

impl Rational {
    pub fn new(num: BigUint, den: BigUint) -> Result<Self> {
        if num.is_zero() || den.is_zero() {
            return Err(Error::Usage(
                "rational must be positive with nonzero denominator".into(),
            ));
        }
        let g = num.gcd(&den);
        Ok(Rational {
            num: &num / &g,
            den: &den / &g,
        })
    }

    pub fn from_u64s(num: u64, den: u64) -> Result<Self> {
        Self::new(BigUint::from(num), BigUint::from(den))
    }

    pub fn from_u64(n: u64) -> Self {
        Rational {
            num: BigUint::from(n.max(1)),
            den: BigUint::one(),
        }
    }

    /// Parses `"p/q"`, an integer literal, or a decimal literal.
    ///
    /// Decimal literals are converted exactly: `"2.5"` becomes `5/2`, never a
    /// float.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |m: &str| Error::Usage(format!("cannot parse {s:?} as a rational: {m}"));
        if let Some((p, q)) = s.split_once('/') {
            let num: BigUint = p.trim().parse().map_err(|_| bad("bad numerator"))?;
            let den: BigUint = q.trim().parse().map_err(|_| bad("bad denominator"))?;
            return Rational::new(num, den);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("bad fractional part"));
            }
            let int: BigUint = if int.is_empty() {
                BigUint::zero()
            } else {
                int.parse().map_err(|_| bad("bad integer part"))?
            };
            let frac_num: BigUint = frac.parse().map_err(|_| bad("bad fractional part"))?;
            let scale = BigUint::from(10u32).pow(frac.len() as u32);
            return Rational::new(int * &scale + frac_num, scale);
        }
        let num: BigUint = s.parse().map_err(|_| bad("not an integer"))?;
        Rational::new(num, BigUint::one())
    }

    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    /// True when the value exceeds 1.
    pub fn gt_one(&self) -> bool {
        self.num > self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Largest integer `<=` the value.
    pub fn floor(&self) -> BigUint {
        &self.num / &self.den
    }

    /// Exact comparison by cross-multiplication.
    pub fn cmp_rational(&self, other: &Rational) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_rational(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_rational(other)
    }
}

/// Monotone cache of factorials: entry `k` holds `k!`.
#[derive(Debug)]
pub struct FactorialCache {
    entries: Vec<BigUint>,
}

impl FactorialCache {
    pub fn new() -> Self {
        FactorialCache {
            entries: vec![BigUint::one()],
        }
    }

    /// Largest `k` whose factorial is currently cached.
    pub fn high_water(&self) -> u64 {
        (self.entries.len() - 1) as u64
    }

    /// Returns `n!`, extending the cache incrementally. `guard` caps `n`.
    pub fn factorial(&mut self, n: u64, guard: u64) -> Result<&BigUint> {
        if n > guard {
            return Err(Error::Resource(format!(
                "factorial({n}) exceeds the configured guard of {guard} entries"
            )));
        }
        while self.high_water() < n {
            let k = self.high_water() + 1;
            let next = self.entries.last().unwrap() * BigUint::from(k);
            self.entries.push(next);
        }
        Ok(&self.entries[n as usize])
    }
}

impl Default for FactorialCache {
    fn default() -> Self {
        Self::new()
    }
}

static GLOBAL_FACTORIALS: RwLock<Option<FactorialCache>> = RwLock::new(None);

fn with_factorial_cache<T>(f: impl FnOnce(&mut FactorialCache) -> T) -> T {
    let mut guard = GLOBAL_FACTORIALS.write().unwrap();
    f(guard.get_or_insert_with(FactorialCache::new))
}

/// `n!` from the shared cache under the default guard.
pub fn factorial(n: u64) -> Result<BigUint> {
    factorial_guarded(n, DEFAULT_FACTORIAL_GUARD)
}

/// `n!` from the shared cache under an explicit guard.
pub fn factorial_guarded(n: u64, guard: u64) -> Result<BigUint> {
    {
        let cache = GLOBAL_FACTORIALS.read().unwrap();
        if let Some(c) = cache.as_ref() {
            if n <= c.high_water() && n <= guard {
                return Ok(c.entries[n as usize].clone());
            }
        }
    }
    with_factorial_cache(|c| c.factorial(n, guard).cloned())
}

/// Exact ordering of `a^n` versus `n!` for `a = p/q > 1`.
///
/// Computed as `p^n` versus `q^n * n!` with binary exponentiation; no
/// logarithm shortcut anywhere in this module.
pub fn cmp_pow_factorial(a: &Rational, n: u64) -> Result<Ordering> {
    cmp_pow_factorial_guarded(a, n, DEFAULT_FACTORIAL_GUARD)
}

pub fn cmp_pow_factorial_guarded(a: &Rational, n: u64, guard: u64) -> Result<Ordering> {
    if !a.gt_one() {
        return Err(Error::Domain(format!("base a = {a} must exceed 1")));
    }
    if n == 0 {
        return Err(Error::Domain("exponent n must be positive".into()));
    }
    let fact = factorial_guarded(n, guard)?;
    let exp = u32::try_from(n)
        .map_err(|_| Error::Resource(format!("exponent {n} too large for exact powering")))?;
    let lhs = a.num().pow(exp);
    let rhs = a.den().pow(exp) * fact;
    Ok(lhs.cmp(&rhs))
}

/// Least `n` with `a^n <= n!`, by exact upward scan from `n = 2`.
///
/// The result always satisfies `a^(n-1) > (n-1)!` and `a^n <= n!`. The scan
/// maintains `p^n` and `q^n * n!` incrementally, so each step costs one short
/// multiplication per side. EQ (`a^n = n!`) is honoured as satisfying the
/// threshold; it cannot occur for rational `a > 1` unless `n!` is a perfect
/// `n`-th power, but nothing here assumes that.
pub fn exact_na(a: &Rational) -> Result<u64> {
    exact_na_guarded(a, DEFAULT_FACTORIAL_GUARD)
}

pub fn exact_na_guarded(a: &Rational, guard: u64) -> Result<u64> {
    if !a.gt_one() {
        return Err(Error::Domain(format!("base a = {a} must exceed 1")));
    }
    // n! >= a^n forces n >= a, so a beyond the guard cannot terminate in range.
    if let Some(fl) = a.floor().to_u64() {
        if fl > guard {
            return Err(Error::Resource(format!(
                "threshold for a = {a} exceeds the factorial guard of {guard}"
            )));
        }
    } else {
        return Err(Error::Resource(format!(
            "threshold for a = {a} exceeds the factorial guard of {guard}"
        )));
    }

    let p = a.num();
    let q = a.den();
    // State at n = 2: lhs = p^2, rhs = q^2 * 2!.
    let mut lhs = p * p;
    let mut rhs = q * q * 2u32;
    let mut n = 2u64;
    loop {
        if lhs <= rhs {
            return Ok(n);
        }
        n += 1;
        if n > guard {
            return Err(Error::Resource(format!(
                "threshold for a = {a} not reached within the factorial guard of {guard}"
            )));
        }
        lhs *= p;
        rhs *= q * BigUint::from(n);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: u64, q: u64) -> Rational {
        Rational::from_u64s(p, q).unwrap()
    }

    /// Independent oracle: repeated multiplication, no cache, no shortcuts.
    fn slow_factorial(n: u64) -> BigUint {
        let mut acc = BigUint::one();
        for k in 2..=n {
            acc *= BigUint::from(k);
        }
        acc
    }

    /// Independent oracle: scan with fresh powers at every step.
    fn slow_na(a: &Rational) -> u64 {
        for n in 1..u32::MAX {
            let lhs = a.num().pow(n);
            let rhs = a.den().pow(n) * slow_factorial(n as u64);
            if lhs <= rhs {
                return n as u64;
            }
        }
        unreachable!()
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0).unwrap(), BigUint::one());
        assert_eq!(factorial(5).unwrap(), BigUint::from(120u32));
        // frozen from the repeated-multiplication oracle
        assert_eq!(
            factorial(25).unwrap().to_string(),
            "15511210043330985984000000"
        );
        assert_eq!(factorial(25).unwrap(), slow_factorial(25));
    }

    #[test]
    fn factorial_guard_is_enforced() {
        let mut cache = FactorialCache::new();
        let err = cache.factorial(11, 10).unwrap_err();
        match err {
            Error::Resource(msg) => assert!(msg.contains("10")),
            other => panic!("expected resource error, got {other:?}"),
        }
        assert!(cache.factorial(10, 10).is_ok());
        assert_eq!(cache.high_water(), 10);
    }

    #[test]
    fn cache_entries_are_consistent() {
        let mut cache = FactorialCache::new();
        cache.factorial(30, 100).unwrap();
        for k in 1..=30u64 {
            let prev = cache.entries[(k - 1) as usize].clone();
            assert_eq!(cache.entries[k as usize], prev * BigUint::from(k));
        }
    }

    #[test]
    fn cmp_pow_examples() {
        assert_eq!(cmp_pow_factorial(&rat(2, 1), 3).unwrap(), Ordering::Greater); // 8 > 6
        assert_eq!(cmp_pow_factorial(&rat(2, 1), 4).unwrap(), Ordering::Less); // 16 < 24
        assert_eq!(cmp_pow_factorial(&rat(3, 2), 2).unwrap(), Ordering::Greater); // 9/4 > 2
    }

    #[test]
    fn exact_na_examples() {
        assert_eq!(exact_na(&rat(2, 1)).unwrap(), 4);
        assert_eq!(exact_na(&rat(3, 1)).unwrap(), 7);
        assert_eq!(exact_na(&rat(10, 1)).unwrap(), 25);
        assert_eq!(exact_na(&rat(11, 10)).unwrap(), 2);
        for a in [rat(2, 1), rat(3, 1), rat(7, 2), rat(11, 10), rat(99, 7)] {
            assert_eq!(exact_na(&a).unwrap(), slow_na(&a), "a = {a}");
        }
    }

    #[test]
    fn exact_na_satisfies_the_two_sided_condition() {
        for a in [rat(2, 1), rat(5, 2), rat(17, 3), rat(101, 100), rat(30, 1)] {
            let n = exact_na(&a).unwrap();
            assert!(n >= 2);
            assert_ne!(cmp_pow_factorial(&a, n).unwrap(), Ordering::Greater);
            assert_eq!(cmp_pow_factorial(&a, n - 1).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn na_is_monotone_in_a() {
        let mut samples: Vec<Rational> = Vec::new();
        for p in 2..40u64 {
            for q in 1..6u64 {
                if p > q {
                    samples.push(rat(p, q));
                }
            }
        }
        samples.sort();
        let thresholds: Vec<u64> = samples.iter().map(|a| exact_na(a).unwrap()).collect();
        for w in thresholds.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn uniqueness_on_root_intervals() {
        // For rational a with (n-1)! < a^(n-1) and a^n <= n! — membership
        // checked exactly via cmp — the scan must return exactly n.
        for n in 2..=40u64 {
            for num in 2..200u64 {
                let a = rat(num, 13);
                let above_left = cmp_pow_factorial(&a, n - 1).unwrap() == Ordering::Greater;
                let within_right = cmp_pow_factorial(&a, n).unwrap() != Ordering::Greater;
                if above_left && within_right {
                    assert_eq!(exact_na(&a).unwrap(), n, "a = {a}");
                }
            }
        }
    }

    #[test]
    fn small_n_below_a_means_factorial_below_power() {
        for (p, q) in [(7u64, 2u64), (5, 1), (19, 3), (12, 1)] {
            let a = rat(p, q);
            let mut n = 1u64;
            while Rational::from_u64(n) < a {
                assert_eq!(cmp_pow_factorial(&a, n).unwrap(), Ordering::Greater);
                n += 1;
            }
        }
    }

    #[test]
    fn rational_reduction_and_parse() {
        assert_eq!(rat(10, 4), rat(5, 2));
        assert_eq!(Rational::parse("2.5").unwrap(), rat(5, 2));
        assert_eq!(Rational::parse("11/10").unwrap(), rat(11, 10));
        assert_eq!(Rational::parse("3").unwrap(), rat(3, 1));
        assert_eq!(Rational::parse(".25").unwrap(), rat(1, 4));
        assert!(Rational::parse("0").is_err());
        assert!(Rational::parse("x/y").is_err());
        assert!(!Rational::parse("1.0").unwrap().gt_one());
    }

    #[test]
    fn oracle_guard_trips_for_huge_bases() {
        let huge = Rational::from_u64s(u64::MAX, 1).unwrap();
        assert!(matches!(
            exact_na_guarded(&huge, 1000),
            Err(Error::Resource(_))
        ));
    }
}
