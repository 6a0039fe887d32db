//! Small number-theoretic helpers: Moebius function, divisors, totient.

/// Classical Moebius function.
pub fn mobius(m: u64) -> i64 {
    assert!(m >= 1, "mobius is defined for m >= 1");
    let mut n = m;
    let mut result = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// All divisors of m in ascending order.
pub fn divisors(m: u64) -> Vec<u64> {
    assert!(m >= 1, "divisors is defined for m >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Euler totient.
pub fn totient(m: u64) -> u64 {
    assert!(m >= 1);
    let mut n = m;
    let mut result = m;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_small_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
    }

    #[test]
    fn mobius_sums_vanish_above_one() {
        // sum_{r|m} mu(r) = [m == 1]
        for m in 1..=64u64 {
            let s: i64 = divisors(m).iter().map(|&r| mobius(r)).sum();
            assert_eq!(s, if m == 1 { 1 } else { 0 }, "m = {m}");
        }
    }

    #[test]
    fn divisors_are_ascending_and_complete() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(13), vec![1, 13]);
    }

    #[test]
    fn totient_small_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(2), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(13), 12);
    }

    #[test]
    fn prime_detection() {
        assert!(is_prime(2));
        assert!(is_prime(7));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
    }
}
