//! Elements of cyclotomic fields `Q(ζ_n)`.
//!
//! An element is a polynomial in `ζ_n` of degree `< φ(n)` with rational
//! coefficients, always reduced modulo the `n`-th cyclotomic polynomial.
//! Elements of different conductors are combined in `Q(ζ_lcm)`.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use super::rational::Rational;

/// The field `Q(ζ_n)` with its reduction modulus.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicField {
    conductor: u32,
    /// Monic `Φ_n`, constant term first.
    modulus: Vec<i64>,
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        Arc::new(CyclotomicField {
            conductor,
            modulus: cyclotomic_polynomial(conductor),
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `φ(n)`, the degree of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }
}

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // both monic integer polynomials, den | num
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut q = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Integer coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut result = num;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            result = poly_divide_exact(&result, &phi_d);
        }
    }
    result
}

/// An element of `Q(ζ_n)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    /// Exactly `φ(n)` coefficients.
    coeffs: Vec<Rational>,
}

fn reduce(field: &CyclotomicField, mut poly: Vec<Rational>) -> Vec<Rational> {
    let deg = field.degree();
    let m = &field.modulus;
    while poly.len() > deg {
        let top = poly.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = poly.len() - deg;
        for (i, &c) in m[..deg].iter().enumerate() {
            if c != 0 {
                let t = &top * &Rational::from_int(c);
                poly[shift + i] = &poly[shift + i] - &t;
            }
        }
    }
    poly.resize(deg, Rational::ZERO);
    poly
}

impl Cyclotomic {
    pub fn from_coeffs(field: Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Self {
        let coeffs = reduce(&field, coeffs);
        Cyclotomic { field, coeffs }
    }

    pub fn from_rational(field: Arc<CyclotomicField>, r: Rational) -> Self {
        Self::from_coeffs(field, vec![r])
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(field: Arc<CyclotomicField>, k: u32) -> Self {
        let k = (k % field.conductor) as usize;
        let mut c = vec![Rational::ZERO; k + 1];
        c[k] = Rational::ONE;
        Self::from_coeffs(field, c)
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The value as a rational, when it has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Rational::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or(Rational::ZERO))
        } else {
            None
        }
    }

    /// Re-expresses the element in `Q(ζ_N)` for a multiple `N` of its conductor.
    pub fn lift(&self, target: &Arc<CyclotomicField>) -> Self {
        let n = self.field.conductor;
        assert!(
            target.conductor.is_multiple_of(n),
            "lift target must be a multiple of the conductor"
        );
        if target.conductor == n {
            return Cyclotomic {
                field: target.clone(),
                coeffs: self.coeffs.clone(),
            };
        }
        let step = (target.conductor / n) as usize;
        let mut poly = vec![Rational::ZERO; (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Self::from_coeffs(target.clone(), poly)
    }

    /// Brings two elements into a common field.
    pub fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.field == b.field {
            return (a.clone(), b.clone());
        }
        let l = a.conductor().lcm(&b.conductor());
        let field = if l == a.conductor() {
            a.field.clone()
        } else if l == b.conductor() {
            b.field.clone()
        } else {
            CyclotomicField::new(l)
        };
        (a.lift(&field), b.lift(&field))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::unify(self, other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclotomic {
            field: a.field,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::unify(self, other);
        let mut prod = vec![Rational::ZERO; a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] = &prod[i + j] + &(x * y);
                }
            }
        }
        Self::from_coeffs(a.field, prod)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Inverse via the extended Euclidean algorithm against `Φ_n`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<Rational> = self
            .field
            .modulus
            .iter()
            .map(|&c| Rational::from_int(c))
            .collect();
        // invariant: s_i * self ≡ r_i (mod Φ_n)
        let mut r0 = trim(modulus);
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::ONE];
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Φ_n is irreducible
        let c = r1[0].inv()?;
        let coeffs = s1.iter().map(|x| x * &c).collect();
        Some(Self::from_coeffs(self.field.clone(), coeffs))
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or(Rational::ZERO);
            let y = b.get(i).cloned().unwrap_or(Rational::ZERO);
            &x - &y
        })
        .collect();
    trim(out)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero divisor");
    if rem.len() < b.len() {
        return (vec![], trim(rem));
    }
    let mut q = vec![Rational::ZERO; rem.len() - db];
    for k in (0..q.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if !c.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * bi);
            }
        }
        q[k] = c;
    }
    rem.truncate(db);
    (trim(q), trim(rem))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z{}", self.conductor())?,
                _ => write!(f, "({c})z{}^{i}", self.conductor())?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cube_root_of_unity() {
        let f = CyclotomicField::new(3);
        let z = Cyclotomic::root_of_unity(f.clone(), 1);
        let z3 = z.mul(&z).mul(&z);
        assert_eq!(z3.as_rational(), Some(Rational::ONE));
        // 1 + z + z^2 = 0
        let s = Cyclotomic::from_rational(f, Rational::ONE)
            .add(&z)
            .add(&z.mul(&z));
        assert!(s.is_zero());
    }

    #[test]
    fn inverse() {
        let f = CyclotomicField::new(5);
        let x = Cyclotomic::from_coeffs(
            f.clone(),
            vec![Rational::new(2, 1), Rational::ONE, Rational::new(-3, 2)],
        );
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y).as_rational(), Some(Rational::ONE));
    }

    #[test]
    fn mixed_conductors() {
        let f3 = CyclotomicField::new(3);
        let f4 = CyclotomicField::new(4);
        let w = Cyclotomic::root_of_unity(f3, 1);
        let i = Cyclotomic::root_of_unity(f4, 1);
        let p = w.mul(&i);
        assert_eq!(p.conductor(), 12);
        // (ζ3·i)^12 = 1
        let mut acc = p.clone();
        for _ in 0..11 {
            acc = acc.mul(&p);
        }
        assert_eq!(acc.as_rational(), Some(Rational::ONE));
        // ζ3 lifted into Q(ζ6) equals ζ6^2
        let f6 = CyclotomicField::new(6);
        assert_eq!(w.lift(&f6), Cyclotomic::root_of_unity(f6, 2));
    }
}
