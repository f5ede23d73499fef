//! Univariate polynomials over [`Scalar`], characteristic polynomials and
//! root finding restricted to rationals and roots of unity of a given order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::matrix::Matrix;
use super::rational::Rational;
use super::scalar::Scalar;

/// Coefficients, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Scalar>);

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::ZERO;
        for c in self.0.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Synthetic division by `x - r`; returns quotient and remainder.
    pub fn divide_linear(&self, r: &Scalar) -> (Poly, Scalar) {
        let n = self.0.len();
        if n == 0 {
            return (Poly(vec![]), Scalar::ZERO);
        }
        let mut q = vec![Scalar::ZERO; n - 1];
        let mut carry = Scalar::ZERO;
        for k in (0..n).rev() {
            let v = &self.0[k] + &(&carry * r);
            if k == 0 {
                return (Poly::new(q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }
}

/// Characteristic polynomial `det(xI - A)`: similarity reduction to upper
/// Hessenberg form, then the standard three-term-style recurrence. `O(n^3)`.
pub fn charpoly(a: &Matrix) -> Poly {
    let n = a.rows();
    assert_eq!(n, a.cols(), "charpoly of a non-square matrix");
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
            continue;
        };
        if i != m {
            for c in 0..n {
                let t = h[(i, c)].clone();
                h[(i, c)] = std::mem::replace(&mut h[(m, c)], t);
            }
            for r in 0..n {
                let t = h[(r, i)].clone();
                h[(r, i)] = std::mem::replace(&mut h[(r, m)], t);
            }
        }
        let t_inv = h[(m, m - 1)].inv().unwrap();
        for i in m + 1..n {
            let u = &h[(i, m - 1)] * &t_inv;
            if u.is_zero() {
                continue;
            }
            for c in 0..n {
                if !h[(m, c)].is_zero() {
                    h[(i, c)] = &h[(i, c)] - &(&u * &h[(m, c)]);
                }
            }
            for r in 0..n {
                if !h[(r, i)].is_zero() {
                    h[(r, m)] = &h[(r, m)] + &(&u * &h[(r, i)]);
                }
            }
        }
    }
    // p[k] = charpoly of the leading k×k block
    let mut p: Vec<Vec<Scalar>> = vec![vec![Scalar::ONE]];
    for m in 0..n {
        let prev = &p[m];
        let mut next = vec![Scalar::ZERO; m + 2];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] = &next[d + 1] + c;
            next[d] = &next[d] - &(&h[(m, m)] * c);
        }
        let mut t = Scalar::ONE;
        for i in 1..=m {
            t = &t * &h[(m - i + 1, m - i)];
            if t.is_zero() {
                break;
            }
            let f = &t * &h[(m - i, m)];
            if f.is_zero() {
                continue;
            }
            for (d, c) in p[m - i].iter().enumerate() {
                next[d] = &next[d] - &(&f * c);
            }
        }
        p.push(next);
    }
    Poly::new(p.pop().unwrap())
}

/// Roots found among the candidates, with multiplicity, and whether the
/// polynomial splits completely over them.
#[derive(Clone, Debug)]
pub struct RootSearch {
    pub roots: Vec<(Scalar, usize)>,
    pub split: bool,
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: u64) -> Option<Vec<u64>> {
    if n > DIVISOR_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Rational root candidates via the rational root theorem; `None` when the
/// polynomial has irrational coefficients or the search is out of range.
fn rational_candidates(p: &Poly) -> Option<Vec<Rational>> {
    let coeffs: Vec<&Rational> = p.0.iter().map(Scalar::as_rational).collect::<Option<_>>()?;
    let mut lcm = BigInt::one();
    for c in &coeffs {
        lcm = lcm.lcm(&c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    // strip the factor x^k so the constant term is nonzero
    let shift = ints.iter().position(|c| !c.is_zero())?;
    let a0 = ints[shift].abs().to_u64()?;
    let an = ints.last()?.abs().to_u64()?;
    let mut out = vec![Rational::ZERO];
    let (ps, qs) = (divisors(a0)?, divisors(an)?);
    for &num in &ps {
        for &den in &qs {
            let (Ok(num), Ok(den)) = (i64::try_from(num), i64::try_from(den)) else {
                return None;
            };
            let r = Rational::new(num, den);
            if !out.contains(&r) {
                out.push(-&r);
                out.push(r);
            }
        }
    }
    Some(out)
}

/// Candidate roots: every rational root, plus `±ζ_n^k` when `conductor > 1`.
pub fn find_roots(p: &Poly, conductor: u32) -> RootSearch {
    let Some(deg) = p.degree() else {
        return RootSearch {
            roots: vec![],
            split: false,
        };
    };
    let mut candidates: Vec<Scalar> = match rational_candidates(p) {
        Some(c) => c.into_iter().map(Scalar::Rat).collect(),
        None => vec![Scalar::ZERO, Scalar::ONE, Scalar::from_int(-1)],
    };
    if conductor > 1 {
        let f = CyclotomicField::new(conductor);
        for k in 0..conductor {
            let z = Scalar::from_cyclotomic(Cyclotomic::root_of_unity(f.clone(), k));
            for c in [z.clone(), -z] {
                if !candidates.contains(&c) {
                    candidates.push(c);
                }
            }
        }
    }
    let mut rest = p.clone();
    let mut roots = Vec::new();
    let mut found = 0;
    for r in candidates {
        let mut mult = 0;
        loop {
            let (q, rem) = rest.divide_linear(&r);
            if rem.is_zero() && rest.degree().unwrap_or(0) > 0 {
                rest = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            roots.push((r, mult));
            found += mult;
        }
    }
    RootSearch {
        roots,
        split: found == deg,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use proptest::prelude::*;

    /// Faddeev–LeVerrier, as an independent oracle.
    fn charpoly_oracle(a: &Matrix) -> Poly {
        let n = a.rows();
        let mut c = vec![Scalar::ZERO; n + 1];
        c[n] = Scalar::ONE;
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = a.mul(&m);
            for i in 0..n {
                next[(i, i)] = &next[(i, i)] + &c[n - k + 1];
            }
            m = next;
            let am = a.mul(&m);
            let mut tr = Scalar::ZERO;
            for i in 0..n {
                tr = &tr + &am[(i, i)];
            }
            c[n - k] = -(&tr / &Scalar::from_int(k as i64));
        }
        Poly::new(c)
    }

    proptest! {
        #[test]
        fn hessenberg_matches_oracle(n in 1usize..6, seed in prop::collection::vec(-3i64..4, 36)) {
            let rows: Vec<Vec<Scalar>> = (0..n).map(|i| (0..n).map(|j| Scalar::from_int(seed[i * 6 + j])).collect()).collect();
            let a = Matrix::from_rows(n, rows);
            prop_assert_eq!(charpoly(&a), charpoly_oracle(&a));
        }
    }

    fn ints(v: &[i64]) -> Poly {
        Poly::new(v.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    #[test]
    fn charpoly_of_swap() {
        let p = charpoly(&Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(p, ints(&[-1, 0, 1]));
    }

    #[test]
    fn charpoly_of_triangular() {
        let p = charpoly(&Matrix::from_ints(&[&[2, 5, 1], &[0, 3, 7], &[0, 0, -1]]));
        // (x-2)(x-3)(x+1) = x^3 - 4x^2 + x + 6
        assert_eq!(p, ints(&[6, 1, -4, 1]));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (2x - 1)^2 (x + 3)
        let p = ints(&[3, -11, 8, 4]);
        let r = find_roots(&p, 1);
        assert!(r.split);
        assert!(r.roots.contains(&(Scalar::ratio(1, 2), 2)));
        assert!(r.roots.contains(&(Scalar::from_int(-3), 1)));
    }

    #[test]
    fn irreducible_quadratic_does_not_split_over_q() {
        let p = ints(&[1, 1, 1]);
        assert!(!find_roots(&p, 1).split);
        assert!(find_roots(&p, 3).split);
    }
}
