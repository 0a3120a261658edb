use crate::error::{Error, Result};
use crate::linalg::charpoly;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::{all_integral, Q};
use num_traits::Zero;
use std::collections::HashMap;

/// Euler totient by trial division.
pub fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
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

/// n-th cyclotomic polynomial over Q, by recursive division of x^n - 1 by
/// the cyclotomic polynomials of the proper divisors.
pub fn cyclotomic(n: u64, cache: &mut HashMap<u64, Poly<Q>>) -> Poly<Q> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut num = Poly::monomial(n as usize).sub(&Poly::one());
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic(d, cache);
            num = num.div_rem(&phi_d).0;
        }
    }
    cache.insert(n, num.clone());
    num
}

/// Strips every cyclotomic factor from a monic integer polynomial; returns
/// the cofactor. The index of any cyclotomic factor Phi_n with phi(n) <= d
/// satisfies n <= 2 d^2, so the enumeration is complete.
fn strip_cyclotomic_factors(p: &Poly<Q>) -> Poly<Q> {
    let mut q = p.monic();
    if q.degree() == 0 {
        return q;
    }
    let bound = 2 * (q.degree() as u64) * (q.degree() as u64);
    let mut cache = HashMap::new();
    for n in 1..=bound {
        if q.degree() == 0 {
            break;
        }
        if totient(n) > q.degree() as u64 {
            continue;
        }
        let phi = cyclotomic(n, &mut cache);
        while phi.degree() <= q.degree() && phi.divides(&q) {
            q = q.div_rem(&phi).0;
            if q.degree() == 0 {
                break;
            }
        }
    }
    q
}

/// Kronecker test: an integer matrix has all complex eigenvalues of
/// modulus one iff its characteristic polynomial is a product of
/// cyclotomic polynomials.
pub fn all_eigenvalues_on_unit_circle(m: &Matrix<Q>) -> Result<bool> {
    m.require_square()?;
    if !all_integral(m.entries().iter()) {
        return Err(Error::NonIntegralEntries);
    }
    let cp = charpoly(m)?;
    if cp.coeff(0).is_zero() {
        // zero eigenvalue is off the circle
        return Ok(false);
    }
    Ok(strip_cyclotomic_factors(&cp).degree() == 0)
}
