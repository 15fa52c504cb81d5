//! Residue arithmetic over `Z/mZ` and the modulus context.
//!
//! Residues and labels are `u128`, but moduli are capped at `u64::MAX` so that
//! a product of two residues always fits.

use crate::error::{Error, Result};

/// Default trial-division bound. Any cofactor left below `bound^2` is prime.
pub const DEFAULT_FACTOR_BOUND: u128 = 1 << 22;

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple; `lcm(0, x) = 0`.
pub fn lcm(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// The modulus `m` together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModulusContext {
    modulus: u128,
    factors: Vec<(u128, u32)>,
}

impl ModulusContext {
    pub fn new(m: u128) -> Result<Self> {
        factorize_with_bound(m, DEFAULT_FACTOR_BOUND)
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    /// Prime factorization as `(p, e)` pairs with increasing `p`.
    pub fn factorization(&self) -> &[(u128, u32)] {
        &self.factors
    }

    /// `Some((p, t))` when `m = p^t`.
    pub fn prime_power(&self) -> Option<(u128, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    /// `Some((p, q))` with `p < q` when `m` is a product of two distinct primes.
    pub fn distinct_prime_pair(&self) -> Option<(u128, u128)> {
        match self.factors.as_slice() {
            [(p, 1), (q, 1)] => Some((*p, *q)),
            _ => None,
        }
    }

    /// Least nonnegative residue of `x`.
    pub fn reduce(&self, x: u128) -> u128 {
        x % self.modulus
    }

    /// Least nonnegative residue of a signed integer.
    pub fn reduce_signed(&self, x: i128) -> u128 {
        let m = self.modulus as i128;
        x.rem_euclid(m) as u128
    }

    /// `(a - b) mod m` for residues in `[0, m)`.
    pub fn sub(&self, a: u128, b: u128) -> u128 {
        if a >= b {
            a - b
        } else {
            self.modulus - (b - a)
        }
    }

    pub fn add(&self, a: u128, b: u128) -> u128 {
        (a + b) % self.modulus
    }

    pub fn mul(&self, a: u128, b: u128) -> u128 {
        (a % self.modulus) * (b % self.modulus) % self.modulus
    }

    /// Canonical generator of the ideal generated by `l` in `Z/mZ`:
    /// `gcd(l, m)`, with `0` mapping to `m` (the zero ideal).
    pub fn canonical_label(&self, l: u128) -> u128 {
        if l == 0 {
            self.modulus
        } else {
            gcd(l, self.modulus)
        }
    }

    /// Whether residue `x` lies in the cyclic subgroup generated by `d`.
    pub fn is_multiple(&self, x: u128, d: u128) -> bool {
        self.reduce(x).is_multiple_of(self.canonical_label(d))
    }

    /// Exact lcm of a nonempty set of divisors of `m`, and whether it vanishes mod `m`.
    pub fn lcm_reduced(&self, values: &[u128]) -> Result<(u128, bool)> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("lcm of an empty set".into()));
        }
        let mut acc = 1u128;
        for &v in values {
            if v == 0 || !self.modulus.is_multiple_of(v) {
                return Err(Error::InvalidArgument(format!(
                    "{v} does not divide the modulus {}",
                    self.modulus
                )));
            }
            acc = lcm(acc, v);
        }
        Ok((acc, acc.is_multiple_of(self.modulus)))
    }

    /// All positive divisors of `m` in increasing order.
    pub fn divisors(&self) -> Vec<u128> {
        let mut divs = vec![1u128];
        for &(p, e) in &self.factors {
            let current = divs.clone();
            let mut pk = 1u128;
            for _ in 0..e {
                pk *= p;
                divs.extend(current.iter().map(|d| d * pk));
            }
        }
        divs.sort_unstable();
        divs
    }

    /// Additive order of a residue: `m / gcd(x, m)`.
    pub fn additive_order(&self, x: u128) -> u128 {
        self.modulus / self.canonical_label(x)
    }
}

/// Full prime factorization of `m` by trial division.
pub fn factorize(m: u128) -> Result<ModulusContext> {
    factorize_with_bound(m, DEFAULT_FACTOR_BOUND)
}

/// Trial division up to `bound`; a leftover cofactor is accepted as prime only
/// when it is provably so (below `bound^2`).
pub fn factorize_with_bound(m: u128, bound: u128) -> Result<ModulusContext> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if m > u64::MAX as u128 {
        return Err(Error::ModulusTooLarge(m));
    }
    let mut rest = m;
    let mut factors = Vec::new();
    let mut p = 2u128;
    while p <= bound && p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        if p * p <= rest {
            return Err(Error::FactorizationBound { value: m, cofactor: rest, bound });
        }
        factors.push((rest, 1));
    }
    Ok(ModulusContext { modulus: m, factors })
}

pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(15).unwrap().factorization(), &[(3, 1), (5, 1)]);
        let big = 2u128.pow(8) * 3u128.pow(10) * 5u128.pow(7);
        assert_eq!(factorize(big).unwrap().factorization(), &[(2, 8), (3, 10), (5, 7)]);
        assert_eq!(factorize(7).unwrap().factorization(), &[(7, 1)]);
        assert_eq!(factorize(1), Err(Error::InvalidModulus(1)));
        assert_eq!(factorize(0), Err(Error::InvalidModulus(0)));
    }

    #[test]
    fn factorize_respects_bound() {
        // 101 * 103 with a bound of 10 leaves a cofactor that cannot be certified.
        let err = factorize_with_bound(101 * 103, 10).unwrap_err();
        assert!(matches!(err, Error::FactorizationBound { .. }));
        // A large prime just above the bound is fine once bound^2 exceeds it.
        assert_eq!(factorize_with_bound(97, 10).unwrap().factorization(), &[(97, 1)]);
        assert!(matches!(factorize(u64::MAX as u128 + 1), Err(Error::ModulusTooLarge(_))));
    }

    #[test]
    fn canonical_label_examples() {
        let ctx = factorize(15).unwrap();
        assert_eq!(ctx.canonical_label(10), 5);
        assert_eq!(ctx.canonical_label(3), 3);
        assert_eq!(ctx.canonical_label(0), 15);
    }

    #[test]
    fn lcm_reduced_examples() {
        let ctx = factorize(15).unwrap();
        assert_eq!(ctx.lcm_reduced(&[3, 5]).unwrap(), (15, true));
        assert_eq!(ctx.lcm_reduced(&[3, 3]).unwrap(), (3, false));
        let ctx16 = factorize(16).unwrap();
        assert_eq!(ctx16.lcm_reduced(&[2, 4, 8]).unwrap(), (8, false));
        assert!(ctx.lcm_reduced(&[]).is_err());
        assert!(ctx.lcm_reduced(&[4]).is_err());
    }

    #[test]
    fn divisors_and_shape() {
        let ctx = factorize(12).unwrap();
        assert_eq!(ctx.divisors(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(factorize(6).unwrap().distinct_prime_pair(), Some((2, 3)));
        assert_eq!(factorize(12).unwrap().distinct_prime_pair(), None);
        assert_eq!(factorize(125).unwrap().prime_power(), Some((5, 3)));
    }

    fn subgroup(m: u128, g: u128) -> Vec<u128> {
        let mut s: Vec<u128> = (0..m).map(|k| (k * g) % m).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    proptest! {
        #[test]
        fn canonical_label_generates_same_subgroup(m in 2u128..=100, l in 0u128..500) {
            let ctx = factorize(m).unwrap();
            let c = ctx.canonical_label(l);
            prop_assert_eq!(m % c, 0);
            prop_assert_eq!(subgroup(m, l % m), subgroup(m, c % m));
        }

        #[test]
        fn factorization_multiplies_back(m in 2u128..1_000_000) {
            let ctx = factorize(m).unwrap();
            let prod: u128 = ctx.factorization().iter().map(|&(p, e)| p.pow(e)).product();
            prop_assert_eq!(prod, m);
            prop_assert!(ctx.factorization().windows(2).all(|w| w[0].0 < w[1].0));
            prop_assert!(ctx.factorization().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
        }
    }
}
