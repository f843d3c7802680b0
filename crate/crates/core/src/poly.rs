//! Minimal polynomials of small matrices and their roots in the base field.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::field::{lcm_big, rational_parts, Field, Scalar};
use crate::matrix::Matrix;

/// Monic minimal polynomial, coefficients from the constant term up.
pub fn minimal_polynomial(m: &Matrix) -> Vec<Scalar> {
    let f = m.field();
    let n = m.rows();
    let flat = |x: &Matrix| x.entries().to_vec();
    let mut powers = vec![flat(&Matrix::identity(f, n))];
    let mut cur = Matrix::identity(f, n);
    loop {
        cur = cur.mul(m);
        let target = flat(&cur);
        // solve Σ c_i M^i = M^k
        let k = powers.len();
        let mut sys = Matrix::zeros(f, n * n, k);
        for (i, p) in powers.iter().enumerate() {
            for (r, v) in p.iter().enumerate() {
                sys.set(r, i, v.clone());
            }
        }
        if let Ok(Some(c)) = sys.solve(&target) {
            let mut out: Vec<Scalar> = c.iter().map(|x| -x).collect();
            out.push(f.one());
            return out;
        }
        powers.push(target);
    }
}

pub fn evaluate(poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in poly.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Distinct roots in the base field, in increasing order of representation.
/// Over Q candidates come from the rational root theorem; over F_p the field
/// is searched when p ≤ 65536, otherwise small representatives are tried.
pub fn roots(poly: &[Scalar]) -> Vec<Scalar> {
    let Some(first) = poly.first() else {
        return Vec::new();
    };
    let f = first.field();
    let mut out = Vec::new();
    match f {
        Field::Prime { p } => {
            let bound = p.min(65536);
            for v in 0..bound {
                let x = f.from_i64(v as i64);
                if evaluate(poly, &x).is_zero() {
                    out.push(x);
                }
            }
        }
        Field::Rational => {
            let mut coeffs: Vec<&Scalar> = poly.iter().collect();
            while coeffs.len() > 1 && coeffs[0].is_zero() {
                coeffs.remove(0);
                if !out.contains(&f.zero()) {
                    out.push(f.zero());
                }
            }
            if coeffs.len() < 2 {
                return out;
            }
            let mut den = BigInt::one();
            for c in &coeffs {
                let (_, d) = rational_parts(c.as_rational().expect("rational"));
                den = lcm_big(&den, &d);
            }
            let ints: Vec<BigInt> = coeffs
                .iter()
                .map(|c| {
                    let r = c.as_rational().unwrap();
                    let (n, d) = rational_parts(r);
                    n * (&den / d)
                })
                .collect();
            let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
                return out;
            };
            for pn in &ps {
                for qd in &qs {
                    for sign in [1i64, -1] {
                        let num = BigInt::from(*pn) * sign;
                        let x = Scalar::Rational(num_rational::BigRational::new(num, BigInt::from(*qd)));
                        if !out.contains(&x) && evaluate(poly, &x).is_zero() {
                            out.push(x);
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial_of_diagonal() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, -3]]);
        let mp = minimal_polynomial(&m);
        // (t-2)(t+3) = t² + t - 6
        assert_eq!(mp, vec![q.from_i64(-6), q.from_i64(1), q.from_i64(1)]);
        let mut r = roots(&mp);
        r.sort_by_key(|s| s.to_i64());
        assert_eq!(r, vec![q.from_i64(-3), q.from_i64(2)]);
    }

    #[test]
    fn rational_and_modular_roots() {
        let q = Field::Rational;
        // 2t² - 3t + 1 = (2t-1)(t-1)
        let r = roots(&[q.from_i64(1), q.from_i64(-3), q.from_i64(2)]);
        assert_eq!(r.len(), 2);
        assert!(r.contains(&q.from_ratio(1, 2).unwrap()));
        // t² + 1 has no rational roots, two roots mod 5
        assert!(roots(&[q.from_i64(1), q.zero(), q.from_i64(1)]).is_empty());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(roots(&[f5.from_i64(1), f5.zero(), f5.from_i64(1)]).len(), 2);
    }
}
