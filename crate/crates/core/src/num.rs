//! Exact rational scalars and the small number-theoretic kit used
//! throughout: binomials, factorials, Bernoulli numbers and polynomials,
//! decimal rendering of rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rat = BigRational;

pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse "p/q" or "p" with optional sign; used by the rational file formats.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| Error::Io(format!("bad rational numerator {num:?}")))?;
    let q: BigInt = den
        .parse()
        .map_err(|_| Error::Io(format!("bad rational denominator {den:?}")))?;
    if q.is_zero() {
        return Err(Error::Io(format!("zero denominator in rational {s:?}")));
    }
    Ok(Rat::new(p, q))
}

/// Render a rational as "p/q" ("p" when the denominator is one).
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering with `digits` digits after the point, exact division
/// with truncation toward zero.
pub fn rat_decimal(r: &Rat, digits: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (a.numer() * &scale) / a.denom();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let mut frac = frac_part.to_string();
    while frac.len() < digits {
        frac.insert(0, '0');
    }
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Bernoulli numbers B_0..B_n (convention B_1 = -1/2), by the defining
/// recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
pub fn bernoulli_numbers(n: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(Rat::one());
            continue;
        }
        let mut acc = Rat::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Rat::from_integer(binomial(m as i64 + 1, j as i64)) * bj;
        }
        b.push(-acc / Rat::from_integer(BigInt::from(m as i64 + 1)));
    }
    b
}

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}, exact.
pub fn bernoulli_poly(n: usize, x: &Rat) -> Rat {
    let b = bernoulli_numbers(n);
    let mut acc = Rat::zero();
    let mut xpow = Rat::one();
    // accumulate from k = n downward so xpow tracks x^{n-k}
    for k in (0..=n).rev() {
        acc += Rat::from_integer(binomial(n as i64, k as i64)) * &b[k] * &xpow;
        xpow *= x;
    }
    acc
}

/// Hurwitz zeta at the nonpositive integer s = -i: zeta(-i, a) = -B_{i+1}(a)/(i+1).
pub fn hurwitz_zeta_neg_int(i: usize, a: &Rat) -> Rat {
    -bernoulli_poly(i + 1, a) / rat_i64(i as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_renders_rationals() {
        assert_eq!(parse_rat("3/4").unwrap(), rat_frac(3, 4));
        assert_eq!(parse_rat("-5").unwrap(), rat_i64(-5));
        assert_eq!(rat_string(&rat_frac(-4, 9)), "-4/9");
        assert_eq!(rat_decimal(&rat_frac(-4, 9), 6), "-0.444444");
        assert_eq!(rat_decimal(&rat_i64(12), 2), "12.00");
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[1], rat_frac(-1, 2));
        assert_eq!(b[2], rat_frac(1, 6));
        assert_eq!(b[3], Rat::zero());
        assert_eq!(b[4], rat_frac(-1, 30));
        assert_eq!(b[8], rat_frac(-1, 30));
    }

    #[test]
    fn bernoulli_poly_and_hurwitz() {
        // B_2(x) = x^2 - x + 1/6
        assert_eq!(bernoulli_poly(2, &rat_i64(2)), rat_frac(13, 6));
        // zeta(0, a) = 1/2 - a
        assert_eq!(hurwitz_zeta_neg_int(0, &rat_i64(1)), rat_frac(-1, 2));
        assert_eq!(hurwitz_zeta_neg_int(0, &rat_frac(1, 3)), rat_frac(1, 6));
        // zeta(-1, 1) = -1/12
        assert_eq!(hurwitz_zeta_neg_int(1, &rat_i64(1)), rat_frac(-1, 12));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
