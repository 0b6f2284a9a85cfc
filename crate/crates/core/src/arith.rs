//! Integer helpers: gcds, residues, small factorizations.

/// Least nonnegative residue of `x` modulo `n`.
pub fn mod_floor(x: i128, n: u64) -> u64 {
    x.rem_euclid(n as i128) as u64
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)`.
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q` into `(p, s)` with `q = p^s`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let ps = prime_factors(q);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let (mut s, mut r) = (0, q);
    while r > 1 {
        r /= p;
        s += 1;
    }
    Some((p, s))
}

/// Smallest `r > 0` with `q^r = 1 mod m`. Requires `gcd(q, m) = 1`.
pub fn multiplicative_order(q: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let q = q % m;
    let (mut x, mut r) = (q, 1);
    while x != 1 {
        x = ((x as u128 * q as u128) % m as u128) as u64;
        r += 1;
    }
    r
}

/// Given `y = a*ell mod m*ell`, returns `a mod m`; `ell` always divides such a `y`.
///
/// Returns `None` when `y` is not of that form (i.e. `ell` does not divide the residue).
pub fn split_residue(y: i128, ell: u64, m: u64) -> Option<u64> {
    let r = mod_floor(y, ell * m);
    if !r.is_multiple_of(ell) {
        return None;
    }
    Some((r / ell) % m)
}
