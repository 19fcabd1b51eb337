//! Eta invariants of the spherical operator restricted to an isotypic
//! component, evaluated at s = 0 two independent ways:
//!
//! * `eta_invariant` sums a finite prefix exactly and continues the
//!   quasi-polynomial tail through Hurwitz zeta values at nonpositive
//!   integers, zeta(-i, a) = -B_{i+1}(a)/(i+1), all in exact rationals;
//! * `numeric_eta_oracle` evaluates the same Dirichlet series at small
//!   s > 0 with Euler-Maclaurin-accelerated Hurwitz sums and Richardson
//!   extrapolates to s = 0 in floating point.
//!
//! The codimension-one conventions (the spherical operator vanishes and
//! eta/h degenerate to isotypic dimensions of the fiber) and the paired
//! spectrum of the spherical de Rham operator are provided alongside.

use serde::Serialize;

use crate::action::GroupAction;
use crate::chartable::CharacterTable;
use crate::error::{Error, Result};
use crate::num::{bernoulli_numbers, hurwitz_zeta_neg_int, rat_i64, rat_to_f64, Rat};
use crate::rep;
use crate::spectral::{quasi_polynomial_onset, SpectrumTable};
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EtaMethod {
    HurwitzExact,
    NumericOracle,
    DeRhamPaired,
    CodimOne,
}

/// Eta invariant and kernel dimension of one isotypic component.
#[derive(Clone, Debug, Serialize)]
pub struct EtaReport {
    pub alpha: String,
    /// exact value when the computation stayed in exact arithmetic
    pub eta_exact: Option<String>,
    pub eta: f64,
    pub err: f64,
    pub h: i64,
    pub method: EtaMethod,
    pub spectral_window_used: usize,
}

// ---------------------------------------------------------------------------
// quasi-polynomial fitting

/// Per-residue-class polynomials representing an eventually quasi-polynomial
/// integer sequence: seq[j] = poly[j mod period](j) for j >= onset.
struct QuasiPolynomial {
    period: usize,
    polys: Vec<Vec<Rat>>,
}

fn poly_eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Lagrange interpolation through (x_t, y_t), exact.
fn lagrange(points: &[(Rat, Rat)]) -> Vec<Rat> {
    let n = points.len();
    let mut acc = vec![Rat::zero(); n];
    for (t, (xt, yt)) in points.iter().enumerate() {
        // basis polynomial prod_{s != t} (x - x_s) / (x_t - x_s)
        let mut basis = vec![Rat::one()];
        let mut denom = Rat::one();
        for (s, (xs, _)) in points.iter().enumerate() {
            if s == t {
                continue;
            }
            let mut next = vec![Rat::zero(); basis.len() + 1];
            for (i, c) in basis.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * xs;
            }
            basis = next;
            denom *= xt - xs;
        }
        let scale = yt / denom;
        for (i, c) in basis.iter().enumerate() {
            acc[i] += c * &scale;
        }
    }
    acc
}

fn fit_quasi_polynomial(
    seq: &[i64],
    period: usize,
    degree_bound: usize,
    onset: usize,
) -> Result<QuasiPolynomial> {
    let samples = degree_bound + 1;
    let needed = onset + samples * period;
    if seq.len() < needed {
        return Err(Error::Structural(format!(
            "sequence window {} too short for fitting (need {needed})",
            seq.len()
        )));
    }
    let mut polys = Vec::with_capacity(period);
    for c in 0..period {
        let mut j = onset;
        while j % period != c {
            j += 1;
        }
        let points: Vec<(Rat, Rat)> = (0..samples)
            .map(|t| {
                let jj = j + t * period;
                (rat_i64(jj as i64), rat_i64(seq[jj]))
            })
            .collect();
        polys.push(lagrange(&points));
    }
    let qp = QuasiPolynomial { period, polys };
    // verification window: every supplied term beyond the onset must match
    for j in onset..seq.len() {
        let p = &qp.polys[j % period];
        if poly_eval(p, &rat_i64(j as i64)) != rat_i64(seq[j]) {
            return Err(Error::Validation(format!(
                "multiplicity sequence fails the quasi-polynomial recurrence at j = {j}"
            )));
        }
    }
    Ok(qp)
}

/// P(y + t): Taylor shift, exact.
fn poly_shift(p: &[Rat], t: &Rat) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); p.len()];
    for (i, c) in p.iter().enumerate() {
        // c * (y + t)^i
        let mut term = vec![Rat::one()];
        for _ in 0..i {
            let mut next = vec![Rat::zero(); term.len() + 1];
            for (a, tc) in term.iter().enumerate() {
                next[a + 1] += tc;
                next[a] += tc * t;
            }
            term = next;
        }
        for (a, tc) in term.iter().enumerate() {
            out[a] += c * tc;
        }
    }
    out
}

/// Tail data for one residue class of sum_{j >= start, j = c mod L}
/// P(j) (j + a)^{-s}: with j = Lq + c, q >= q0, this is
/// L^{-s} sum_i b_i zeta(s - i, q0 + x), x = (c + a)/L.
struct TailTerm {
    /// coefficients b_i of (q + x)^i
    b: Vec<Rat>,
    /// Hurwitz offset q0 + x
    offset: Rat,
}

fn tail_terms(qp: &QuasiPolynomial, shift_a: i64, start: usize) -> Vec<TailTerm> {
    let period_l = qp.period as i64;
    let mut terms = Vec::new();
    for c in 0..qp.period {
        let mut j = start;
        while j % qp.period != c {
            j += 1;
        }
        let q0 = (j as i64 - c as i64) / period_l;
        let x = Rat::new((c as i64 + shift_a).into(), period_l.into());
        // P(Lq + c) as a polynomial in q
        let p = &qp.polys[c];
        let mut in_q = vec![Rat::zero(); p.len()];
        // substitute j = L q + c: expand powers iteratively
        let mut pow = vec![Rat::one()]; // (Lq + c)^i
        for (i, coeff) in p.iter().enumerate() {
            for (a, pc) in pow.iter().enumerate() {
                in_q[a] += coeff * pc;
            }
            if i + 1 < p.len() {
                // multiply pow by (Lq + c)
                let mut next = vec![Rat::zero(); pow.len() + 1];
                for (a, pc) in pow.iter().enumerate() {
                    next[a + 1] += pc * rat_i64(period_l);
                    next[a] += pc * rat_i64(c as i64);
                }
                pow = next;
            }
        }
        // re-expand in powers of u = q + x: coefficients of P(u - x)
        let b = poly_shift(&in_q, &(-x.clone()));
        terms.push(TailTerm { b, offset: rat_i64(q0) + x });
    }
    terms
}

fn tail_at_zero(terms: &[TailTerm]) -> Rat {
    let mut acc = Rat::zero();
    for t in &terms.iter().collect::<Vec<_>>() {
        for (i, b) in t.b.iter().enumerate() {
            if !b.is_zero() {
                acc += b * hurwitz_zeta_neg_int(i, &t.offset);
            }
        }
    }
    acc
}

/// Exact eta invariant at s = 0 from a closed-form spectrum table.
///
/// eta(s) = sum_{j>=0} mu_{j+k-1} (j+k-1)^{-s} - sum_{j>=1} mu_{-j} j^{-s};
/// the two multiplicity sequences are eventually quasi-polynomial of period
/// dividing the group exponent and degree < k, which reduces the tail to
/// Bernoulli-polynomial values.
pub fn eta_invariant(spec: &SpectrumTable) -> Result<EtaReport> {
    let k = spec.k;
    let h = spec.kernel_multiplicity();
    if k == 1 {
        // the spherical operator vanishes; no nonzero eigenvalues
        return Ok(EtaReport {
            alpha: spec.alpha.clone(),
            eta_exact: Some("0".into()),
            eta: 0.0,
            err: 0.0,
            h,
            method: EtaMethod::HurwitzExact,
            spectral_window_used: 0,
        });
    }
    let (eta, window) = eta_exact_value(spec)?;
    Ok(EtaReport {
        alpha: spec.alpha.clone(),
        eta_exact: Some(crate::num::rat_string(&eta)),
        eta: rat_to_f64(&eta),
        err: 0.0,
        h,
        method: EtaMethod::HurwitzExact,
        spectral_window_used: window,
    })
}

fn eta_sequences(spec: &SpectrumTable) -> Result<(Vec<i64>, Vec<i64>, usize, usize)> {
    let k = spec.k;
    let period = spec.period.max(1);
    let onset = quasi_polynomial_onset(k, period);
    let hi = onset + quasi_polynomial_onset(k, period) + (k + 1) * period;
    let (neg, pos) = spec.materialize(hi)?;
    Ok((neg, pos, onset, hi))
}

fn eta_exact_value(spec: &SpectrumTable) -> Result<(Rat, usize)> {
    let k = spec.k;
    let period = spec.period.max(1);
    let (neg, pos, onset, hi) = eta_sequences(spec)?;
    let qp_pos = fit_quasi_polynomial(&pos, period, k - 1, onset)?;
    let qp_neg = fit_quasi_polynomial(&neg, period, k - 1, onset)?;
    // prefix: every term of an entire Dirichlet polynomial is 1 at s = 0
    let mut acc = Rat::zero();
    for j in 0..onset {
        acc += rat_i64(pos[j]);
    }
    for j in 1..onset {
        acc -= rat_i64(neg[j]);
    }
    acc += tail_at_zero(&tail_terms(&qp_pos, k as i64 - 1, onset));
    acc -= tail_at_zero(&tail_terms(&qp_neg, 0, onset));
    Ok((acc, hi))
}

// ---------------------------------------------------------------------------
// numeric oracle

/// Hurwitz zeta by Euler-Maclaurin, valid on the real line away from s = 1.
pub fn hurwitz_zeta_f64(s: f64, a: f64) -> f64 {
    let n = 24usize;
    let r = 8usize;
    let mut sum = 0.0;
    for i in 0..n {
        sum += (a + i as f64).powf(-s);
    }
    let na = a + n as f64;
    sum += na.powf(1.0 - s) / (s - 1.0);
    sum += 0.5 * na.powf(-s);
    let bern: Vec<f64> = bernoulli_numbers(2 * r).iter().map(rat_to_f64).collect();
    for rr in 1..=r {
        let mut poch = 1.0; // s (s+1) ... (s + 2rr - 2)
        for t in 0..(2 * rr - 1) {
            poch *= s + t as f64;
        }
        let mut fact = 1.0;
        for t in 1..=(2 * rr) {
            fact *= t as f64;
        }
        sum += bern[2 * rr] / fact * poch * na.powf(-s - (2 * rr) as f64 + 1.0);
    }
    sum
}

/// Dirichlet-series value of eta at real s > 0 using the quasi-polynomial
/// tail and numeric Hurwitz zetas.
fn eta_at_s(
    s: f64,
    k: usize,
    period: usize,
    neg: &[i64],
    pos: &[i64],
    onset: usize,
    qp_neg: &QuasiPolynomial,
    qp_pos: &QuasiPolynomial,
) -> f64 {
    let mut acc = 0.0;
    for j in 0..onset {
        acc += pos[j] as f64 * ((j + k - 1) as f64).powf(-s);
    }
    for j in 1..onset {
        acc -= neg[j] as f64 * (j as f64).powf(-s);
    }
    let lscale = (period as f64).powf(-s);
    for (qp, shift, sign) in [(qp_pos, k as i64 - 1, 1.0), (qp_neg, 0i64, -1.0)] {
        for t in tail_terms(qp, shift, onset) {
            let a = rat_to_f64(&t.offset);
            for (i, b) in t.b.iter().enumerate() {
                if !b.is_zero() {
                    acc += sign * lscale * rat_to_f64(b) * hurwitz_zeta_f64(s - i as f64, a);
                }
            }
        }
    }
    acc
}

/// Independent numeric evaluation: eta(s) on a dyadic grid in (0, 1/2],
/// Richardson-extrapolated to s = 0. Returns the value and an error
/// estimate from the last extrapolation step.
pub fn numeric_eta_oracle(spec: &SpectrumTable, target: f64) -> Result<EtaReport> {
    let k = spec.k;
    if k == 1 {
        return Ok(EtaReport {
            alpha: spec.alpha.clone(),
            eta_exact: None,
            eta: 0.0,
            err: 0.0,
            h: spec.kernel_multiplicity(),
            method: EtaMethod::NumericOracle,
            spectral_window_used: 0,
        });
    }
    let period = spec.period.max(1);
    let (neg, pos, onset, hi) = eta_sequences(spec)?;
    let qp_pos = fit_quasi_polynomial(&pos, period, k - 1, onset)?;
    let qp_neg = fit_quasi_polynomial(&neg, period, k - 1, onset)?;
    let grid: Vec<f64> = (1..=7).map(|r| 0.5f64.powi(r)).collect();
    let vals: Vec<f64> = grid
        .iter()
        .map(|&s| eta_at_s(s, k, period, &neg, &pos, onset, &qp_neg, &qp_pos))
        .collect();
    // Neville extrapolation to s = 0
    let mut table = vals.clone();
    let nn = table.len();
    let mut prev_corner = table[nn - 1];
    let mut err = f64::INFINITY;
    for col in 1..nn {
        for row in (col..nn).rev() {
            let x_hi = grid[row];
            let x_lo = grid[row - col];
            table[row] = (x_lo * table[row] - x_hi * table[row - 1]) / (x_lo - x_hi);
        }
        err = (table[nn - 1] - prev_corner).abs();
        prev_corner = table[nn - 1];
    }
    let value = table[nn - 1];
    let achieved = err.max(f64::EPSILON);
    if achieved > target {
        return Ok(EtaReport {
            alpha: spec.alpha.clone(),
            eta_exact: None,
            eta: value,
            err: achieved,
            h: spec.kernel_multiplicity(),
            method: EtaMethod::NumericOracle,
            spectral_window_used: hi,
        });
    }
    Ok(EtaReport {
        alpha: spec.alpha.clone(),
        eta_exact: None,
        eta: value,
        err: achieved,
        h: spec.kernel_multiplicity(),
        method: EtaMethod::NumericOracle,
        spectral_window_used: hi,
    })
}

/// Kernel dimension of the restricted spherical operator: the multiplicity
/// of the zero eigenvalue, which equals the alpha-multiplicity of C^{d+}.
pub fn kernel_dim(spec: &SpectrumTable) -> i64 {
    spec.kernel_multiplicity()
}

// ---------------------------------------------------------------------------
// codimension one

/// Eta and h of the zero operator on C^{d+} under an action on R^1 through
/// +-1: h = dim of the beta-isotypic part, eta = dim of the conjugate
/// (coset-negated) isotypic part.
pub fn codim1_eta_h(
    action: &GroupAction,
    table: &CharacterTable,
    beta: usize,
) -> Result<(i64, i64)> {
    let g = action.group();
    if action.symbol().k() != 1 {
        return Err(Error::Structural("codimension-one eta needs an action on R^1".into()));
    }
    let signs = action.orientation_character();
    if !signs.iter().any(|&s| s == -1) {
        return Err(Error::Structural(
            "no orientation-reversing element: H/H0 is not of index two".into(),
        ));
    }
    // conjugate character: negate on the orientation-reversing coset
    let conj_values: Vec<crate::cyclotomic::Cyc> = (0..g.order())
        .map(|x| {
            let v = table.value(beta, x).clone();
            if signs[x] == -1 {
                -v
            } else {
                v
            }
        })
        .collect();
    let beta_bar = table.match_character(&conj_values).ok_or_else(|| {
        Error::Validation("coset-negated character is not an irreducible of the table".into())
    })?;
    let fiber: Vec<crate::linalg::CycMat> =
        (0..g.order()).map(|x| action.fiber_plus(x).clone()).collect();
    let p_beta = rep::isotypic_projector_unchecked(table, beta, &fiber);
    let p_bar = rep::isotypic_projector_unchecked(table, beta_bar, &fiber);
    let tr = |m: &crate::linalg::CycMat| -> Result<i64> {
        m.trace()
            .try_rat()
            .filter(|r| r.is_integer())
            .and_then(|r| r.numer().to_i64())
            .ok_or_else(|| Error::Oracle("projector trace is not an integer".into()))
    };
    Ok((tr(&p_bar)?, tr(&p_beta)?))
}

// ---------------------------------------------------------------------------
// de Rham paired spectrum

/// Eta/h of the spherical de Rham operator. Its spectrum pairs lambda with
/// -lambda inside the even half (the involution negating the radial
/// component of a form), so the eta invariant vanishes identically; the
/// kernel is spanned by the constant and the volume class, which transform
/// by the trivial and the normal-orientation character respectively.
pub fn de_rham_eta_h(
    action: &GroupAction,
    table: &CharacterTable,
    alpha: usize,
) -> Result<EtaReport> {
    if !action.symbol().is_de_rham() {
        return Err(Error::Structural(
            "paired de Rham eta applies to the exterior-algebra symbol only".into(),
        ));
    }
    let g = action.group();
    let signs = action.orientation_character();
    let xi_values: Vec<crate::cyclotomic::Cyc> =
        (0..g.order()).map(|x| crate::cyclotomic::Cyc::from_i64(signs[x])).collect();
    let xi = table.match_character(&xi_values).ok_or_else(|| {
        Error::Validation("orientation character is not in the supplied table".into())
    })?;
    let triv_values: Vec<crate::cyclotomic::Cyc> =
        (0..g.order()).map(|_| crate::cyclotomic::Cyc::one()).collect();
    let triv = table
        .match_character(&triv_values)
        .ok_or_else(|| Error::Validation("table has no trivial character".into()))?;
    let mut h = 0i64;
    if alpha == triv {
        h += 1;
    }
    if alpha == xi {
        h += 1;
    }
    Ok(EtaReport {
        alpha: table.name(alpha).to_string(),
        eta_exact: Some("0".into()),
        eta: 0.0,
        err: 0.0,
        h,
        method: EtaMethod::DeRhamPaired,
        spectral_window_used: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::{cyclic_table, rotation_matrix};
    use crate::cyclotomic::Cyc;
    use crate::linalg::CycMat;
    use crate::num::rat_frac;
    use crate::operator::CliffordSymbol;
    use crate::spectral::{equivariant_spectrum, full_spectrum};

    fn cauchy_riemann() -> CliffordSymbol {
        let a1 = CycMat::from_rows(vec![vec![Cyc::one()]]);
        let a2 = CycMat::from_rows(vec![vec![Cyc::i()]]);
        CliffordSymbol::new_exact(vec![a1, a2]).unwrap()
    }

    fn cr_rotation_action(p: usize, c: i64) -> GroupAction {
        let group = crate::group::cyclic(p);
        let sym = cauchy_riemann();
        let r: Vec<CycMat> = (0..p).map(|a| rotation_matrix(p, a as i64)).collect();
        let u = |cc: i64| -> Vec<CycMat> {
            (0..p)
                .map(|a| CycMat::from_rows(vec![vec![Cyc::root_of_unity(p as u32, cc * a as i64)]]))
                .collect()
        };
        GroupAction::new(group, sym, r, u(c), u(c + 1)).unwrap()
    }

    #[test]
    fn hurwitz_f64_sanity() {
        // zeta(2) = pi^2/6
        let z2 = hurwitz_zeta_f64(2.0, 1.0);
        assert!((z2 - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
        // zeta(0, a) = 1/2 - a
        assert!((hurwitz_zeta_f64(0.0, 0.25) - 0.25).abs() < 1e-12);
        // zeta(-1) = -1/12
        assert!((hurwitz_zeta_f64(-1.0, 1.0) + 1.0 / 12.0).abs() < 1e-10);
    }

    #[test]
    fn k2_trivial_eta_vanishes() {
        let t = full_spectrum(&cauchy_riemann(), 8).unwrap();
        let r = eta_invariant(&t).unwrap();
        assert_eq!(r.eta_exact.as_deref(), Some("0"));
        assert_eq!(r.h, 1);
    }

    #[test]
    fn k3_trivial_eta_equals_rank() {
        let i = Cyc::i();
        let s1 = CycMat::from_rows(vec![
            vec![Cyc::zero(), Cyc::one()],
            vec![Cyc::one(), Cyc::zero()],
        ]);
        let s2 = CycMat::from_rows(vec![
            vec![Cyc::zero(), -i.clone()],
            vec![i, Cyc::zero()],
        ]);
        let s3 = CycMat::from_rows(vec![
            vec![Cyc::one(), Cyc::zero()],
            vec![Cyc::zero(), Cyc::from_i64(-1)],
        ]);
        let pauli = CliffordSymbol::new_exact(vec![s1, s2, s3]).unwrap();
        let t = full_spectrum(&pauli, 8).unwrap();
        let r = eta_invariant(&t).unwrap();
        assert_eq!(r.eta_exact.as_deref(), Some("2"));
        assert_eq!(r.h, 2);
    }

    #[test]
    fn z3_fiber0_chi1_eta_is_one_third() {
        let action = cr_rotation_action(3, 0);
        let table = cyclic_table(3);
        let t = equivariant_spectrum(&action, &table, 1, 8).unwrap();
        let r = eta_invariant(&t).unwrap();
        assert_eq!(r.eta_exact.as_deref(), Some("1/3"));
    }

    #[test]
    fn numeric_oracle_agrees_with_exact() {
        let cases: Vec<(GroupAction, usize)> = vec![
            (cr_rotation_action(3, 0), 3),
            (cr_rotation_action(3, 1), 3),
            (cr_rotation_action(5, 2), 5),
        ];
        for (action, p) in cases {
            let table = cyclic_table(p);
            for alpha in 0..p {
                let t = equivariant_spectrum(&action, &table, alpha, 8).unwrap();
                let exact = eta_invariant(&t).unwrap();
                let numeric = numeric_eta_oracle(&t, 1e-6).unwrap();
                assert!(
                    (exact.eta - numeric.eta).abs() < 1e-6,
                    "p={p} alpha={alpha}: exact {} vs numeric {}",
                    exact.eta,
                    numeric.eta
                );
            }
        }
    }

    #[test]
    fn completeness_of_eta_over_irreducibles() {
        // sum_alpha dim(alpha) eta^alpha = full eta
        let action = cr_rotation_action(4, 1);
        let table = cyclic_table(4);
        let mut total = Rat::zero();
        for alpha in 0..4 {
            let t = equivariant_spectrum(&action, &table, alpha, 8).unwrap();
            let r = eta_invariant(&t).unwrap();
            total += crate::num::parse_rat(r.eta_exact.as_deref().unwrap()).unwrap();
        }
        let full = eta_invariant(&full_spectrum(&cauchy_riemann(), 8).unwrap()).unwrap();
        assert_eq!(
            total,
            crate::num::parse_rat(full.eta_exact.as_deref().unwrap()).unwrap()
        );
    }

    #[test]
    fn codim1_conventions() {
        // H = Z2 acting by reflection on R^1, trivial fiber: h = d, eta = 0
        let sym = crate::operator::de_rham_symbol(1).unwrap();
        let group = crate::group::cyclic(2);
        let mk = |v: i64| CycMat::from_rows(vec![vec![Cyc::from_i64(v)]]);
        let action = GroupAction::new(
            group.clone(),
            sym.clone(),
            vec![mk(1), mk(-1)],
            vec![mk(1), mk(1)],
            vec![mk(1), mk(-1)],
        )
        .unwrap();
        let table = cyclic_table(2);
        let (eta, h) = codim1_eta_h(&action, &table, 0).unwrap();
        assert_eq!((eta, h), (0, 1));
        // fiber = sign: h = 0, eta = d for beta = trivial
        let action = GroupAction::new(
            group,
            sym,
            vec![mk(1), mk(-1)],
            vec![mk(1), mk(-1)],
            vec![mk(1), mk(1)],
        )
        .unwrap();
        let (eta, h) = codim1_eta_h(&action, &table, 0).unwrap();
        assert_eq!((eta, h), (1, 0));
    }

    #[test]
    fn de_rham_paired_eta_and_h() {
        for k in [2usize, 3, 4] {
            let sym = crate::operator::de_rham_symbol(k).unwrap();
            // trivial group
            let action = GroupAction::trivial(sym.clone());
            let table = cyclic_table(1);
            let r = de_rham_eta_h(&action, &table, 0).unwrap();
            assert_eq!(r.eta_exact.as_deref(), Some("0"));
            assert_eq!(r.h, 2);
            // antipodal Z2
            let d = sym.d();
            let group = crate::group::cyclic(2);
            let rm = vec![
                CycMat::identity(k),
                CycMat::identity(k).scale(&Cyc::from_i64(-1)),
            ];
            let up = vec![CycMat::identity(d), CycMat::identity(d)];
            let um = vec![
                CycMat::identity(d),
                CycMat::identity(d).scale(&Cyc::from_i64(-1)),
            ];
            let action = GroupAction::new(group, sym, rm, up, um).unwrap();
            let table = cyclic_table(2);
            let r0 = de_rham_eta_h(&action, &table, 0).unwrap();
            let r1 = de_rham_eta_h(&action, &table, 1).unwrap();
            assert_eq!(r0.eta, 0.0);
            assert_eq!(r1.eta, 0.0);
            if k % 2 == 0 {
                assert_eq!((r0.h, r1.h), (2, 0));
            } else {
                assert_eq!((r0.h, r1.h), (1, 1));
            }
        }
    }

    #[test]
    fn de_rham_raw_table_values_for_reference() {
        // the raw spherical-operator tables are asymmetric for k >= 3: the
        // universal eta is d at k = 3 and d/4 at k = 4
        let t3 = full_spectrum(&crate::operator::de_rham_symbol(3).unwrap(), 8).unwrap();
        assert_eq!(eta_invariant(&t3).unwrap().eta_exact.as_deref(), Some("4"));
        let t4 = full_spectrum(&crate::operator::de_rham_symbol(4).unwrap(), 8).unwrap();
        let r4 = eta_invariant(&t4).unwrap();
        assert_eq!(
            crate::num::parse_rat(r4.eta_exact.as_deref().unwrap()).unwrap(),
            rat_frac(8, 4)
        );
    }
}
