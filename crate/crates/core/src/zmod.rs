//! Small number-theory helpers for arithmetic modulo n.

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b).
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), if a >= 0 { 1 } else { -1 }, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub fn is_unit(a: u64, n: u64) -> bool {
    gcd(a % n.max(1), n) == 1
}

/// Multiplicative inverse of `a` modulo `n`, when gcd(a, n) = 1.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (g, x, _) = egcd((a % n) as i128, n as i128);
    if g != 1 {
        None
    } else {
        Some(x.rem_euclid(n as i128) as u64)
    }
}

/// Multiplicative order of a unit `a` modulo `n`.
pub fn mult_order(a: u64, n: u64) -> Option<u64> {
    if n == 0 || !is_unit(a, n) {
        return None;
    }
    if n == 1 {
        return Some(1);
    }
    let a = a % n;
    let mut pow = a;
    let mut k = 1u64;
    while pow != 1 {
        pow = pow * a % n;
        k += 1;
    }
    Some(k)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Units of Z_n in ascending order.
pub fn units(n: u64) -> Vec<u64> {
    (0..n).filter(|&a| is_unit(a, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_lcm() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(lcm(1, 1), 1);
    }

    #[test]
    fn inverses() {
        assert_eq!(inv_mod(6, 11), Some(2));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(inv_mod(3, 4), Some(3));
        assert_eq!(inv_mod(0, 1), Some(0));
        for n in 1..=20u64 {
            for a in units(n) {
                let inv = inv_mod(a, n).unwrap();
                assert_eq!(a * inv % n, 1 % n);
            }
        }
    }

    #[test]
    fn orders() {
        // 5 mod 4 = 1, order 1; 3 mod 4 has order 2
        assert_eq!(mult_order(5 % 4, 4), Some(1));
        assert_eq!(mult_order(3, 4), Some(2));
        assert_eq!(mult_order(23 % 11, 11), Some(1));
        assert_eq!(mult_order(2, 11), Some(10));
        assert_eq!(mult_order(0, 1), Some(1));
        assert_eq!(mult_order(2, 8), None);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn unit_lists() {
        assert_eq!(units(4), vec![1, 3]);
        assert_eq!(units(1), vec![0]);
        assert_eq!(units(12), vec![1, 5, 7, 11]);
    }
}
