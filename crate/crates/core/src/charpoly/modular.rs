use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Primes `p ≡ 1 (mod 12)` just below `2^62`, each with an element of
/// multiplicative order exactly 12.
const PRIMES: [(u64, u64); 8] = [
    (4611686018427387817, 3957490443050210331),
    (4611686018427387733, 4323614181204999790),
    (4611686018427387709, 3144011615910092798),
    (4611686018427387421, 4448369033762642070),
    (4611686018427387409, 1449410653791893137),
    (4611686018427387301, 2429538188217563659),
    (4611686018427387241, 2347780624564482379),
    (4611686018427387073, 1030385827295191708),
];

/// Each prime exceeds `2^61.99`.
const BITS_PER_PRIME: f64 = 61.99;

/// `det(λI - M)` for an integer matrix, constant term first.
///
/// Returns `None` only when the coefficient bound needs more primes than are
/// available (far beyond the sizes used here).
pub fn integer_charpoly(n: usize, m: &[i64]) -> Option<Vec<BigInt>> {
    assert_eq!(m.len(), n * n);
    let bits = bound_bits(n, |i, j| (m[i * n + j] as f64).abs());
    multimodular(n, bits, |p, _| m.iter().map(|&x| reduce(x, p)).collect())
}

/// `det(λI - M)` for a matrix over `Z[ζ_k]`, `k ∈ {1, 2, 3, 4, 6}`, whose
/// characteristic polynomial has rational coefficients (for instance a
/// Hermitian one: `Z[ζ_k] ∩ R = Z` for these `k`).
///
/// Entry `(i, j)` is `Σ_e c[(i·n + j)·k + e] ζ_k^e`.
pub fn cyclotomic_integer_charpoly(n: usize, k: u32, c: &[i64]) -> Option<Vec<BigInt>> {
    if !matches!(k, 1 | 2 | 3 | 4 | 6) {
        return None;
    }
    let k = k as usize;
    assert_eq!(c.len(), n * n * k);
    let bits = bound_bits(n, |i, j| c[(i * n + j) * k..(i * n + j + 1) * k].iter().map(|&x| (x as f64).abs()).sum());
    multimodular(n, bits, |p, r12| {
        let zeta = pow_mod(r12, 12 / k as u64, p);
        let powers: Vec<u64> = (0..k).scan(1u64, |acc, _| {
            let cur = *acc;
            *acc = mul_mod(*acc, zeta, p);
            Some(cur)
        }).collect();
        (0..n * n)
            .map(|e| {
                c[e * k..(e + 1) * k]
                    .iter()
                    .zip(&powers)
                    .fold(0, |acc, (&x, &z)| add_mod(acc, mul_mod(reduce(x, p), z, p), p))
            })
            .collect()
    })
}

/// `log2` of `Π (1 + ‖row_i‖₂)`, which bounds every coefficient: each is a
/// signed sum of principal minors and Hadamard's inequality bounds a minor by
/// the product of its row norms.
fn bound_bits(n: usize, abs: impl Fn(usize, usize) -> f64) -> f64 {
    (0..n)
        .map(|i| libm::log2(1.0 + libm::sqrt((0..n).map(|j| abs(i, j) * abs(i, j)).sum::<f64>())))
        .sum()
}

fn multimodular(n: usize, bound_bits: f64, image: impl Fn(u64, u64) -> Vec<u64>) -> Option<Vec<BigInt>> {
    // Need Π p > 2·bound so the symmetric residue is the integer itself; one spare bit for rounding.
    let count = libm::ceil((bound_bits + 2.0) / BITS_PER_PRIME) as usize;
    let count = count.max(1);
    if count > PRIMES.len() {
        return None;
    }
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    let mut modulus = BigInt::one();
    for &(p, r12) in &PRIMES[..count] {
        let res = charpoly_mod(n, image(p, r12), p);
        let bp = BigInt::from(p);
        let inv = BigInt::from(inv_mod(big_mod(&modulus, p), p));
        for (a, &r) in acc.iter_mut().zip(&res) {
            // Garner: a + M·((r - a)·M⁻¹ mod p)
            let diff = (BigInt::from(r) - &*a).mod_floor(&bp);
            let t = (diff * &inv).mod_floor(&bp);
            *a += &modulus * t;
        }
        modulus *= bp;
    }
    let half = &modulus >> 1;
    for a in &mut acc {
        if *a > half {
            *a -= &modulus;
        }
    }
    Some(acc)
}

/// Characteristic polynomial over `F_p` via reduction to upper Hessenberg form.
fn charpoly_mod(n: usize, mut a: Vec<u64>, p: u64) -> Vec<u64> {
    let at = |i: usize, j: usize| i * n + j;
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| a[at(i, j)] != 0) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                a.swap(at(piv, c), at(j + 1, c));
            }
            for r in 0..n {
                a.swap(at(r, piv), at(r, j + 1));
            }
        }
        let inv = inv_mod(a[at(j + 1, j)], p);
        for r in j + 2..n {
            let u = mul_mod(a[at(r, j)], inv, p);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let v = mul_mod(u, a[at(j + 1, c)], p);
                a[at(r, c)] = sub_mod(a[at(r, c)], v, p);
            }
            for r2 in 0..n {
                let v = mul_mod(u, a[at(r2, r)], p);
                a[at(r2, j + 1)] = add_mod(a[at(r2, j + 1)], v, p);
            }
        }
    }
    // polys[k] is the characteristic polynomial of the leading k×k block, constant first.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = add_mod(next[d + 1], c, p);
            next[d] = sub_mod(next[d], mul_mod(a[at(m, m)], c, p), p);
        }
        let mut t = 1u64;
        for i in (1..=m).rev() {
            t = mul_mod(t, a[at(i, i - 1)], p);
            let coef = mul_mod(t, a[at(i - 1, m)], p);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                next[d] = sub_mod(next[d], mul_mod(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn reduce(x: i64, p: u64) -> u64 {
    (x as i128).rem_euclid(p as i128) as u64
}

fn big_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.iter_u64_digits().next().unwrap_or(0)
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::berkowitz;

    fn is_prime(n: u64) -> bool {
        // Deterministic Miller-Rabin for 64-bit inputs.
        if n < 2 {
            return false;
        }
        let small = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        if small.iter().any(|&q| n % q == 0) {
            return small.contains(&n);
        }
        let (mut d, mut s) = (n - 1, 0);
        while d % 2 == 0 {
            d /= 2;
            s += 1;
        }
        'witness: for &a in &small {
            let mut x = pow_mod(a, d, n);
            if x == 1 || x == n - 1 {
                continue;
            }
            for _ in 1..s {
                x = mul_mod(x, x, n);
                if x == n - 1 {
                    continue 'witness;
                }
            }
            return false;
        }
        true
    }

    #[test]
    fn prime_table() {
        for &(p, r) in &PRIMES {
            assert!(is_prime(p));
            assert_eq!(p % 12, 1);
            assert!(libm::log2(p as f64) > BITS_PER_PRIME);
            assert_eq!(pow_mod(r, 12, p), 1);
            assert_ne!(pow_mod(r, 6, p), 1);
            assert_ne!(pow_mod(r, 4, p), 1);
        }
    }

    #[test]
    fn agrees_with_berkowitz() {
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for n in 0..14 {
            for scale in [2i64, 7, 1000, 1 << 20] {
                let m: Vec<i64> = (0..n * n).map(|_| (next() % (2 * scale as u64 + 1)) as i64 - scale).collect();
                let big: Vec<BigInt> = m.iter().map(|&x| BigInt::from(x)).collect();
                assert_eq!(integer_charpoly(n, &m).unwrap(), berkowitz(n, &big, &BigInt::one()), "n={} scale={}", n, scale);
            }
        }
    }

    #[test]
    fn refuses_beyond_prime_budget() {
        let m = vec![i64::MAX; 16 * 16];
        assert_eq!(integer_charpoly(16, &m), None);
    }

    #[test]
    fn hermitian_cyclotomic() {
        // [[0, ζ₄], [ζ₄³, 0]] = [[0, i], [-i, 0]] has λ² - 1.
        let c = [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0];
        assert_eq!(
            cyclotomic_integer_charpoly(2, 4, &c).unwrap(),
            vec![BigInt::from(-1), BigInt::zero(), BigInt::one()]
        );
        assert_eq!(cyclotomic_integer_charpoly(1, 5, &[0; 5]), None);
    }
}
