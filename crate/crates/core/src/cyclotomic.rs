//! Exact cyclotomic numbers: elements of Q(zeta_n) stored canonically as
//! polynomials in zeta_n of degree < phi(n), reduced modulo the n-th
//! cyclotomic polynomial. Rationals are the order-1 case, Gaussian
//! rationals the order-4 case. Mixed-order arithmetic promotes to the lcm.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::num::{rat_string, Rat};

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Monic integer coefficients of the n-th cyclotomic polynomial, low degree
/// first, computed by exact division of x^n - 1 by the proper-divisor factors.
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::one()];
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = int_poly_exact_div(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials, panics on nonzero remainder
/// (never happens for cyclotomic factorizations).
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            let t = dj * &c;
            rem[i - dd + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "nonexact polynomial division");
    quot
}

struct Table {
    phi: usize,
    /// rows[j] = coefficients of x^{phi + j} reduced mod Phi_n, j = 0..phi-1
    high_rows: Vec<Vec<Rat>>,
}

fn table(n: u32) -> Arc<Table> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Table>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| {
            let poly = cyclotomic_poly(n);
            let phi = poly.len() - 1;
            // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
            let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(phi);
            let base: Vec<Rat> = poly[..phi]
                .iter()
                .map(|c| -Rat::from_integer(c.clone()))
                .collect();
            rows.push(base);
            for j in 1..phi {
                // x^{phi+j} = x * x^{phi+j-1}
                let prev = rows[j - 1].clone();
                let mut next = vec![Rat::zero(); phi];
                for (i, c) in prev.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if i + 1 < phi {
                        next[i + 1] += c;
                    } else {
                        for (t, r) in rows[0].iter().enumerate() {
                            next[t] += r * c;
                        }
                    }
                }
                rows.push(next);
            }
            Arc::new(Table { phi, high_rows: rows })
        })
        .clone()
}

/// An element of Q(zeta_order). Canonical: coeffs.len() == phi(order).
#[derive(Clone)]
pub struct Cyc {
    order: u32,
    coeffs: Vec<Rat>,
}

impl Cyc {
    pub fn zero() -> Self {
        Cyc { order: 1, coeffs: vec![Rat::zero()] }
    }

    pub fn one() -> Self {
        Cyc { order: 1, coeffs: vec![Rat::one()] }
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyc { order: 1, coeffs: vec![r] }
    }

    pub fn from_i64(n: i64) -> Self {
        Cyc::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// zeta_n^j.
    pub fn root_of_unity(n: u32, j: i64) -> Self {
        assert!(n >= 1);
        let jm = j.rem_euclid(n as i64) as usize;
        let t = table(n);
        let mut raw = vec![Rat::zero(); jm + 1];
        raw[jm] = Rat::one();
        let coeffs = reduce(&raw, &t);
        Cyc { order: n, coeffs }.normalized()
    }

    /// i = zeta_4.
    pub fn i() -> Self {
        Cyc::root_of_unity(4, 1)
    }

    pub fn gaussian(re: Rat, im: Rat) -> Self {
        Cyc::from_rat(re) + Cyc::i() * Cyc::from_rat(im)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coordinates over the power basis zeta^0..zeta^{phi-1} of Q(zeta_order).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Drop to order 1 when all non-constant coordinates vanish.
    fn normalized(mut self) -> Self {
        if self.order != 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            self.coeffs.truncate(1);
            self.order = 1;
        }
        self
    }

    /// Reinterpret in Q(zeta_m) for order | m.
    fn promote(&self, m: u32) -> Cyc {
        if self.order == m {
            return self.clone();
        }
        debug_assert!(m % self.order == 0);
        let step = (m / self.order) as usize;
        let t = table(m);
        let mut raw = vec![Rat::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] += c;
        }
        let coeffs = reduce(&raw, &t);
        Cyc { order: m, coeffs }
    }

    fn common(a: &Cyc, b: &Cyc) -> (Cyc, Cyc, u32) {
        let m = (a.order as u64).lcm(&(b.order as u64)) as u32;
        (a.promote(m), b.promote(m), m)
    }

    /// Exact rational value when the element lies in Q.
    pub fn try_rat(&self) -> Option<Rat> {
        if self.order == 1 {
            Some(self.coeffs[0].clone())
        } else if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.try_rat().is_some()
    }

    /// Complex conjugate: zeta -> zeta^{-1}.
    pub fn conj(&self) -> Cyc {
        if self.order == 1 {
            return self.clone();
        }
        let n = self.order;
        let t = table(n);
        let mut raw = vec![Rat::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = ((n as usize) - i) % n as usize;
            raw[j] += c;
        }
        let coeffs = reduce(&raw, &t);
        Cyc { order: n, coeffs }.normalized()
    }

    pub fn re(&self) -> Cyc {
        (self.clone() + self.conj()) * Cyc::from_rat(crate::num::rat_frac(1, 2))
    }

    pub fn is_real(&self) -> bool {
        (self.clone() - self.conj()).is_zero()
    }

    pub fn inv(&self) -> Cyc {
        assert!(!self.is_zero(), "division by zero cyclotomic");
        if self.order == 1 {
            return Cyc::from_rat(self.coeffs[0].recip());
        }
        // extended euclid in Q[x]: u * self + v * Phi_n = 1
        let phi = cyclotomic_poly(self.order)
            .into_iter()
            .map(Rat::from_integer)
            .collect::<Vec<_>>();
        let u = poly_modular_inverse(&self.coeffs, &phi);
        let t = table(self.order);
        let coeffs = reduce(&u, &t);
        Cyc { order: self.order, coeffs }.normalized()
    }

    pub fn to_c64(&self) -> (f64, f64) {
        let n = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let v = crate::num::rat_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * (j as f64) / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    pub fn to_f64_real(&self) -> f64 {
        self.to_c64().0
    }

    pub fn scale(&self, r: &Rat) -> Cyc {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
        .normalized()
    }
}

fn reduce(raw: &[Rat], t: &Table) -> Vec<Rat> {
    let phi = t.phi;
    let mut out = vec![Rat::zero(); phi];
    let mut pending: Vec<(usize, Rat)> = Vec::new();
    for (i, c) in raw.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if i < phi {
            out[i] += c;
        } else {
            pending.push((i, c.clone()));
        }
    }
    // degrees up to 2*phi-2 arise from products; fold through the table,
    // highest degree first so each folding lands below 2*phi-1 again
    pending.sort_by(|a, b| b.0.cmp(&a.0));
    let mut queue = pending;
    while let Some((deg, c)) = queue.pop() {
        if c.is_zero() {
            continue;
        }
        if deg < phi {
            out[deg] += c;
            continue;
        }
        let j = deg - phi;
        if j < t.high_rows.len() {
            for (i, r) in t.high_rows[j].iter().enumerate() {
                if !r.is_zero() {
                    out[i] += r * &c;
                }
            }
        } else {
            // fold one step: x^deg = x^{deg-phi} * x^phi
            for (i, r) in t.high_rows[0].iter().enumerate() {
                if !r.is_zero() {
                    queue.push((deg - phi + i, r * &c));
                }
            }
        }

    }
    out
}

/// Inverse of `a` modulo the monic polynomial `m` over Q, via extended euclid.
fn poly_modular_inverse(a: &[Rat], m: &[Rat]) -> Vec<Rat> {
    let trim = |p: &[Rat]| -> Vec<Rat> {
        let mut v = p.to_vec();
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
        v
    };
    let mut r0 = trim(m);
    let mut r1 = trim(a);
    let mut s0: Vec<Rat> = vec![Rat::zero()];
    let mut s1: Vec<Rat> = vec![Rat::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = trim(&r);
        s0 = s1;
        s1 = trim(&s);
    }
    // r0 = gcd, a unit since Phi_n is irreducible and a != 0 mod Phi_n
    assert_eq!(r0.len(), 1, "cyclotomic inverse: gcd not constant");
    let c = r0[0].recip();
    s0.iter().map(|x| x * &c).collect()
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    if a.len() <= db {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); a.len() - db];
    for i in (db..rem.len()).rev() {
        let c = &rem[i] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[i - db] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            let t = bj * &c;
            rem[i - db + j] -= t;
        }
    }
    (quot, rem)
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Cyc::common(self, other);
        a.coeffs == b.coeffs
    }
}
impl Eq for Cyc {}

impl Add for Cyc {
    type Output = Cyc;
    fn add(self, rhs: Cyc) -> Cyc {
        let (mut a, b, m) = Cyc::common(&self, &rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        let _ = m;
        a.normalized()
    }
}

impl Sub for Cyc {
    type Output = Cyc;
    fn sub(self, rhs: Cyc) -> Cyc {
        self + (-rhs)
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Cyc {
    type Output = Cyc;
    fn mul(self, rhs: Cyc) -> Cyc {
        // fast paths keep the common rational case cheap
        if self.order == 1 {
            if self.coeffs[0].is_zero() {
                return Cyc::zero();
            }
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.order == 1 {
            if rhs.coeffs[0].is_zero() {
                return Cyc::zero();
            }
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, b, m) = Cyc::common(&self, &rhs);
        let raw = poly_mul(&a.coeffs, &b.coeffs);
        let t = table(m);
        let coeffs = reduce(&raw, &t);
        Cyc { order: m, coeffs }.normalized()
    }
}

impl Div for Cyc {
    type Output = Cyc;
    fn div(self, rhs: Cyc) -> Cyc {
        self * rhs.inv()
    }
}

impl AddAssign for Cyc {
    fn add_assign(&mut self, rhs: Cyc) {
        *self = self.clone() + rhs;
    }
}

impl SubAssign for Cyc {
    fn sub_assign(&mut self, rhs: Cyc) {
        *self = self.clone() - rhs;
    }
}

impl MulAssign for Cyc {
    fn mul_assign(&mut self, rhs: Cyc) {
        *self = self.clone() * rhs;
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{}", rat_string(c))?;
            } else {
                write!(f, "{}*z{}^{}", rat_string(c), self.order, j)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat_frac, rat_i64};

    #[test]
    fn phi_and_cyclotomic_polys() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(20), 8);
        // Phi_4 = x^2 + 1
        let p4 = cyclotomic_poly(4);
        assert_eq!(p4, vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
        // Phi_6 = x^2 - x + 1
        let p6 = cyclotomic_poly(6);
        assert_eq!(p6, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        // Phi_12 = x^4 - x^2 + 1
        let p12 = cyclotomic_poly(12);
        assert_eq!(
            p12,
            [1, 0, -1, 0, 1].iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn arithmetic_in_gaussian_field() {
        let i = Cyc::i();
        assert_eq!(i.clone() * i.clone(), Cyc::from_i64(-1));
        let z = Cyc::gaussian(rat_i64(3), rat_i64(4));
        let w = z.clone() * z.conj();
        assert_eq!(w.try_rat().unwrap(), rat_i64(25));
        assert_eq!((z.clone() / z).try_rat().unwrap(), rat_i64(1));
    }

    #[test]
    fn roots_of_unity_relations() {
        let z3 = Cyc::root_of_unity(3, 1);
        let s = z3.clone() + z3.clone() * z3.clone() + Cyc::one();
        assert!(s.is_zero());
        // promotion consistency: zeta_6^2 = zeta_3
        let z6 = Cyc::root_of_unity(6, 1);
        assert_eq!(z6.clone() * z6.clone(), Cyc::root_of_unity(3, 1));
        // conj(zeta_5) = zeta_5^4
        let z5 = Cyc::root_of_unity(5, 1);
        assert_eq!(z5.conj(), Cyc::root_of_unity(5, 4));
    }

    #[test]
    fn inverse_in_degree_four_field() {
        let z = Cyc::root_of_unity(5, 2) + Cyc::from_i64(2);
        let w = z.clone().inv();
        assert_eq!(z * w, Cyc::one());
    }

    #[test]
    fn real_parts_of_rotations() {
        // 2 cos(2pi/3) = zeta_3 + zeta_3^2 = -1
        let c = Cyc::root_of_unity(3, 1) + Cyc::root_of_unity(3, 2);
        assert_eq!(c.try_rat().unwrap(), rat_i64(-1));
        // cos(2pi/5) + cos(4pi/5) = -1/2
        let z5 = |j| Cyc::root_of_unity(5, j);
        let s = (z5(1) + z5(4) + z5(2) + z5(3)).scale(&rat_frac(1, 2));
        assert_eq!(s.try_rat().unwrap(), rat_frac(-1, 2));
    }

    #[test]
    fn float_embedding() {
        let (re, im) = Cyc::root_of_unity(8, 1).to_c64();
        let s = (2.0f64).sqrt() / 2.0;
        assert!((re - s).abs() < 1e-12 && (im - s).abs() < 1e-12);
    }
}
