//! Jacobson radical of a finite-dimensional algebra given by structure constants.
//!
//! Characteristic 0 uses the trace form of the regular representation. In
//! characteristic p the trace form only cuts out the radical when p exceeds
//! the dimension, so the power-trace functionals `g_i(z) = Tr(L_z^{p^i}) / p^i`
//! (computed on integer lifts modulo p^{i+1}) refine the kernel step by step.

use crate::field::{Field, Scalar};
use crate::matrix::{Coordinates, Matrix};

/// Product oracle: `mul(s, t)` returns the dense coordinates of `b_s·b_t`.
pub trait StructureConstants {
    fn field(&self) -> Field;
    fn dim(&self) -> usize;
    fn product(&self, s: usize, t: usize) -> Vec<Scalar>;
}

fn combine(field: Field, dim: usize, x: &[Scalar], alg: &dyn StructureConstants) -> Matrix {
    // matrix of left multiplication by x, row c holding x·b_c
    let mut m = Matrix::zeros(field, dim, dim);
    for (s, xs) in x.iter().enumerate() {
        if xs.is_zero() {
            continue;
        }
        for c in 0..dim {
            let p = alg.product(s, c);
            for (k, v) in p.iter().enumerate() {
                if !v.is_zero() {
                    let cur = m.get(c, k).clone();
                    m.set(c, k, &cur + &(xs * v));
                }
            }
        }
    }
    m
}

fn mul_vec(alg: &dyn StructureConstants, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let f = alg.field();
    let n = alg.dim();
    let mut out = vec![f.zero(); n];
    for (s, xs) in x.iter().enumerate() {
        if xs.is_zero() {
            continue;
        }
        for (t, yt) in y.iter().enumerate() {
            if yt.is_zero() {
                continue;
            }
            let c = xs * yt;
            for (k, v) in alg.product(s, t).iter().enumerate() {
                if !v.is_zero() {
                    out[k] = &out[k] + &(&c * v);
                }
            }
        }
    }
    out
}

/// Dense basis of the radical.
pub fn radical_basis(alg: &dyn StructureConstants) -> Vec<Vec<Scalar>> {
    let field = alg.field();
    let n = alg.dim();
    if n == 0 {
        return Vec::new();
    }
    match field {
        Field::Rational => {
            let traces: Vec<Scalar> = (0..n)
                .map(|m| {
                    let mut acc = field.zero();
                    for k in 0..n {
                        acc = &acc + &alg.product(m, k)[k];
                    }
                    acc
                })
                .collect();
            let mut form = Matrix::zeros(field, n, n);
            for s in 0..n {
                for t in 0..n {
                    let p = alg.product(s, t);
                    let mut acc = field.zero();
                    for (m, v) in p.iter().enumerate() {
                        if !v.is_zero() && !traces[m].is_zero() {
                            acc = &acc + &(v * &traces[m]);
                        }
                    }
                    form.set(s, t, acc);
                }
            }
            form.left_kernel_basis()
        }
        Field::Prime { p } => {
            let mut current: Vec<Vec<Scalar>> = (0..n)
                .map(|i| {
                    let mut v = vec![field.zero(); n];
                    v[i] = field.one();
                    v
                })
                .collect();
            let mut i = 0u32;
            loop {
                let pi = (p as u128).checked_pow(i);
                match pi {
                    Some(pi) if pi <= n as u128 => {}
                    _ => break,
                }
                if current.is_empty() {
                    break;
                }
                let coords = Coordinates::new(field, n, &current).expect("independent basis");
                let g: Vec<Scalar> = current
                    .iter()
                    .map(|a| power_trace(field, p, i, &combine(field, n, a, alg)))
                    .collect();
                // G[s][t] = g_i(a_s · b_t)
                let k = current.len();
                let mut gm = Matrix::zeros(field, k, n);
                for (s, a) in current.iter().enumerate() {
                    for t in 0..n {
                        let mut b = vec![field.zero(); n];
                        b[t] = field.one();
                        let prod = mul_vec(alg, a, &b);
                        let c = coords.coords(&prod).expect("ideal closed under products");
                        let mut acc = field.zero();
                        for (u, cu) in c.iter().enumerate() {
                            if !cu.is_zero() {
                                acc = &acc + &(cu * &g[u]);
                            }
                        }
                        gm.set(s, t, acc);
                    }
                }
                let kernel = gm.left_kernel_basis();
                current = kernel
                    .iter()
                    .map(|alpha| {
                        let mut v = vec![field.zero(); n];
                        for (s, a) in alpha.iter().enumerate() {
                            if a.is_zero() {
                                continue;
                            }
                            for (j, x) in current[s].iter().enumerate() {
                                if !x.is_zero() {
                                    v[j] = &v[j] + &(a * x);
                                }
                            }
                        }
                        v
                    })
                    .collect();
                i += 1;
            }
            current
        }
    }
}

/// `Tr(L^{p^i}) / p^i` reduced mod p, computed on the lift with entries in `0..p`.
fn power_trace(field: Field, p: u64, i: u32, m: &Matrix) -> Scalar {
    let n = m.rows();
    let modulus = (p as u128).pow(i + 1);
    let lift: Vec<Vec<u128>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| m.get(r, c).prime_value().unwrap() as u128)
                .collect()
        })
        .collect();
    let mul = |a: &Vec<Vec<u128>>, b: &Vec<Vec<u128>>| -> Vec<Vec<u128>> {
        let mut out = vec![vec![0u128; n]; n];
        for r in 0..n {
            for k in 0..n {
                let x = a[r][k];
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    out[r][c] = (out[r][c] + x * b[k][c]) % modulus;
                }
            }
        }
        out
    };
    let mut e = (p as u128).pow(i);
    let mut base = lift;
    let mut acc: Option<Vec<Vec<u128>>> = None;
    while e > 0 {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => mul(&a, &base),
            });
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    let acc = acc.expect("positive exponent");
    let tr = (0..n).fold(0u128, |t, r| (t + acc[r][r]) % modulus);
    let pi = (p as u128).pow(i);
    debug_assert_eq!(tr % pi, 0);
    field.from_i64(((tr / pi) % p as u128) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// K[x]/(x^n) in the monomial basis.
    struct Truncated {
        field: Field,
        n: usize,
    }

    impl StructureConstants for Truncated {
        fn field(&self) -> Field {
            self.field
        }
        fn dim(&self) -> usize {
            self.n
        }
        fn product(&self, s: usize, t: usize) -> Vec<Scalar> {
            let mut v = vec![self.field.zero(); self.n];
            if s + t < self.n {
                v[s + t] = self.field.one();
            }
            v
        }
    }

    /// Full 2x2 matrices, basis E11, E12, E21, E22.
    struct Mat2(Field);

    impl StructureConstants for Mat2 {
        fn field(&self) -> Field {
            self.0
        }
        fn dim(&self) -> usize {
            4
        }
        fn product(&self, s: usize, t: usize) -> Vec<Scalar> {
            let (a, b) = (s / 2, s % 2);
            let (c, d) = (t / 2, t % 2);
            let mut v = vec![self.0.zero(); 4];
            if b == c {
                v[a * 2 + d] = self.0.one();
            }
            v
        }
    }

    #[test]
    fn truncated_polynomial_radicals() {
        for field in [
            Field::Rational,
            Field::prime(2).unwrap(),
            Field::prime(3).unwrap(),
            Field::prime(5).unwrap(),
        ] {
            for n in 1..6 {
                let r = radical_basis(&Truncated { field, n });
                assert_eq!(r.len(), n - 1, "K[x]/(x^{n}) over {field}");
                assert!(r.iter().all(|v| v[0].is_zero()));
            }
        }
    }

    #[test]
    fn matrix_algebra_is_semisimple() {
        for field in [Field::Rational, Field::prime(2).unwrap()] {
            assert!(radical_basis(&Mat2(field)).is_empty());
        }
    }
}
