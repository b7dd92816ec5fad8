//! Dense polynomial helpers over GF(p) used during field construction and for
//! the table-free arithmetic path. Coefficients are ascending-degree `u64`
//! digits already reduced mod p.

/// Trims trailing zero coefficients in place.
pub(crate) fn normalize(coeffs: &mut Vec<u64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

pub(crate) fn degree(coeffs: &[u64]) -> Option<usize> {
    coeffs.iter().rposition(|&c| c != 0)
}

pub(crate) fn add(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + y) % p;
    }
    normalize(&mut out);
    out
}

pub(crate) fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    normalize(&mut out);
    out
}

/// Remainder of `a` by a monic divisor `m`.
pub(crate) fn rem_monic(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let md = degree(m).expect("divisor must be nonzero");
    debug_assert_eq!(m[md], 1, "divisor must be monic");
    let mut r: Vec<u64> = a.to_vec();
    normalize(&mut r);
    while let Some(rd) = degree(&r) {
        if rd < md {
            break;
        }
        let lead = r[rd];
        let shift = rd - md;
        for (k, &mc) in m.iter().enumerate().take(md + 1) {
            let idx = shift + k;
            let sub = (lead * mc) % p;
            r[idx] = (r[idx] + p * p - sub) % p; // p*p > sub keeps this non-negative
        }
        normalize(&mut r);
    }
    r
}

/// True when `f` (monic, degree >= 1) has no monic divisor of degree
/// 1..=deg(f)/2. Exhaustive trial division; fields here are capped at
/// q <= 2^22 so the candidate count never exceeds sqrt(q).
pub(crate) fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let d = match degree(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    for cd in 1..=d / 2 {
        let count = p.pow(cd as u32);
        for v in 0..count {
            // candidate = x^cd + (digits of v), monic by construction
            let mut cand = digits_le(p, v, cd);
            cand.push(1);
            if rem_monic(p, f, &cand).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The base-p digits of `v`, little-endian, padded to `len`.
pub(crate) fn digits_le(p: u64, mut v: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for o in out.iter_mut() {
        *o = v % p;
        v /= p;
    }
    out
}

/// Smallest monic irreducible of degree n over GF(p), where "smallest" means
/// smallest base-p integer encoding of the non-leading coefficients. For
/// p = 2, n = 3 this picks x^3 + x + 1.
pub(crate) fn smallest_irreducible(p: u64, n: usize) -> Vec<u64> {
    let count = p.pow(n as u32);
    for v in 0..count {
        let mut cand = digits_le(p, v, n);
        cand.push(1);
        if is_irreducible(p, &cand) {
            return cand;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

pub(crate) fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x % 2 == 0 {
        return x == 2;
    }
    let mut d = 3;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division; ample for q - 1 < 2^22.
pub(crate) fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x % d == 0 {
            out.push(d);
            while x % d == 0 {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rem_by_monic_divisor() {
        // (x^3 + 1) mod (x + 1) over GF(2) = 0
        assert!(rem_monic(2, &[1, 0, 0, 1], &[1, 1]).is_empty());
        // x^3 + x + 1 has no root in GF(2)
        assert_eq!(rem_monic(2, &[1, 1, 0, 1], &[0, 1]), vec![1]);
        assert_eq!(rem_monic(2, &[1, 1, 0, 1], &[1, 1]), vec![1]);
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(is_irreducible(2, &[1, 1, 0, 1])); // x^3 + x + 1
        assert!(is_irreducible(2, &[1, 0, 1, 1])); // x^3 + x^2 + 1
        assert!(!is_irreducible(2, &[1, 0, 0, 1])); // x^3 + 1 = (x+1)(x^2+x+1)
        assert!(is_irreducible(3, &[1, 0, 1])); // x^2 + 1, -1 non-square mod 3
        assert!(!is_irreducible(5, &[1, 0, 1])); // 2^2 = -1 mod 5
    }

    #[test]
    fn smallest_irreducible_matches_classic_tables() {
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]); // x^3 + x + 1
        assert_eq!(smallest_irreducible(2, 4), vec![1, 1, 0, 0, 1]); // x^4 + x + 1
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]); // x^2 + 1
    }

    #[test]
    fn primality_and_factoring() {
        assert!(is_prime(2) && is_prime(3) && is_prime(127) && is_prime(4194301));
        assert!(!is_prime(1) && !is_prime(4) && !is_prime(2047));
        assert_eq!(prime_factors(126), vec![2, 3, 7]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
    }
}
