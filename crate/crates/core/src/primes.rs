//! Deterministic primality and factoring for the sizes this crate needs.

/// Below this bound primality is decided by trial division.
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Strong-pseudoprime bases that are a deterministic test for all `n < 2^64`.
const MILLER_RABIN_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < TRIAL_DIVISION_LIMIT {
        return trial_division(n);
    }
    if n % 2 == 0 {
        return false;
    }
    strong_pseudoprime_battery(n)
}

fn trial_division(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_pseudoprime_battery(n: u64) -> bool {
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &MILLER_RABIN_BASES {
        if a % n == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primes `p ≤ limit` with `p ≡ 3 (mod 4)`, ascending.
pub fn primes_4l_minus_1(limit: u64) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let n = usize::try_from(limit).expect("limit exceeds usize");
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        if i % 4 == 3 {
            out.push(i as u64);
        }
        let mut m = i.saturating_mul(i);
        while m <= n {
            composite[m] = true;
            m += i;
        }
    }
    out
}

/// Iterator over all primes `≡ 3 (mod 4)` in ascending order.
pub fn family_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(4).filter(|&p| is_prime(p))
}

/// Prime factorisation as `(prime, exponent)` pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let ps: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
    }

    #[test]
    fn large_primes_and_pseudoprimes() {
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001)); // 101 * 9901
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
        assert!(is_prime(18_446_744_073_709_551_557)); // largest prime below 2^64
        assert!(!is_prime(18_446_744_073_709_551_615));
    }

    #[test]
    fn trial_division_and_battery_agree() {
        for n in ((TRIAL_DIVISION_LIMIT - 2001)..(TRIAL_DIVISION_LIMIT + 2001)).step_by(2) {
            assert_eq!(trial_division(n), strong_pseudoprime_battery(n), "{n}");
        }
    }

    #[test]
    fn family_prime_listing() {
        assert_eq!(primes_4l_minus_1(25), vec![3, 7, 11, 19, 23]);
        assert_eq!(primes_4l_minus_1(3), vec![3]);
        assert_eq!(primes_4l_minus_1(2), Vec::<u64>::new());
        let first: Vec<u64> = family_primes().take(5).collect();
        assert_eq!(first, vec![3, 7, 11, 19, 23]);
    }

    #[test]
    fn factoring() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(72), vec![(2, 3), (3, 2)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert!(is_squarefree(30));
        assert!(!is_squarefree(12));
        assert!(is_squarefree(1));
    }
}
