//! Brute-force ground truth on homogeneous polynomial spaces: the Fischer
//! inner product, the Laplacian of the symbol as an exact matrix, harmonic
//! subspaces, and independent eigen-decompositions of the spherical
//! operator, with or without a finite group in the picture.
//!
//! Everything here is certified: kernel dimensions come from exact
//! elimination and a computed spectrum is accepted only when the candidate
//! eigenspaces exhaust the space.

use std::collections::HashMap;

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;

use crate::action::GroupAction;
use crate::chartable::CharacterTable;
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::linalg::{eigen_multiplicities, float_nullity, CycMat};
use crate::num::{binomial, factorial};
use crate::operator::{
    eigenvalue_window, spherical_matrix, spherical_matrix_float, CliffordSymbol,
};
use crate::rep;

/// Exponent vectors of total degree m in k variables, graded-lexicographic:
/// within fixed degree, descending lexicographic order (x1^m first).
pub fn monomials(k: usize, m: usize) -> Vec<Vec<u32>> {
    fn rec(k: usize, m: u32, out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>) {
        if k == 1 {
            prefix.push(m);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=m).rev() {
            prefix.push(first);
            rec(k - 1, m - first, out, prefix);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, m as u32, &mut out, &mut Vec::new());
    out
}

pub fn mono_index(monos: &[Vec<u32>]) -> HashMap<Vec<u32>, usize> {
    monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()
}

/// The space P_m of C^d-valued homogeneous polynomials with its monomial
/// basis and the diagonal Fischer Gram matrix (entry alpha! per monomial).
#[derive(Clone, Debug)]
pub struct PolySpace {
    pub k: usize,
    pub d: usize,
    pub m: usize,
    pub monos: Vec<Vec<u32>>,
}

impl PolySpace {
    pub fn new(k: usize, d: usize, m: usize) -> Self {
        let monos = monomials(k, m);
        let dim_expected = BigInt::from(d) * binomial((m + k - 1) as i64, m as i64);
        assert_eq!(BigInt::from(monos.len() * d), dim_expected);
        PolySpace { k, d, m, monos }
    }

    pub fn dim(&self) -> usize {
        self.monos.len() * self.d
    }

    /// Fischer Gram matrix: diagonal with alpha! per monomial, repeated per
    /// fiber coordinate.
    pub fn gram(&self) -> CycMat {
        let n = self.dim();
        let mut g = CycMat::zeros(n, n);
        for (a, alpha) in self.monos.iter().enumerate() {
            let mut f = BigInt::from(1u32);
            for &e in alpha {
                f *= factorial(e as u64);
            }
            for t in 0..self.d {
                g.set(a * self.d + t, a * self.d + t, Cyc::from_rat(f.clone().into()));
            }
        }
        g
    }
}

/// Multiplication by |x|^2 as an exact matrix P_m -> P_{m+2} (identity on
/// the fiber).
pub fn mult_by_r2(k: usize, d: usize, m: usize) -> CycMat {
    let src = monomials(k, m);
    let dst = monomials(k, m + 2);
    let dst_idx = mono_index(&dst);
    let mut e = CycMat::zeros(dst.len() * d, src.len() * d);
    for (a, alpha) in src.iter().enumerate() {
        for j in 0..k {
            let mut beta = alpha.clone();
            beta[j] += 2;
            let b = dst_idx[&beta];
            for t in 0..d {
                e.add_to(b * d + t, a * d + t, Cyc::one());
            }
        }
    }
    e
}

/// Exact matrix of the Laplacian Delta = Q^* Q = sum -A_i^* A_j d_i d_j
/// from P_m onto P_{m-2}; the zero map to the trivial space for m < 2.
pub fn laplacian_matrix(sym: &CliffordSymbol, m: usize) -> Result<CycMat> {
    let (k, d) = (sym.k(), sym.d());
    let src = monomials(k, m);
    if m < 2 {
        return Ok(CycMat::zeros(0, src.len() * d));
    }
    let dst = monomials(k, m - 2);
    let dst_idx = mono_index(&dst);
    let mut mat = CycMat::zeros(dst.len() * d, src.len() * d);
    for i in 0..k {
        for j in 0..k {
            let block = sym.gram_block(i, j)?;
            for (a, alpha) in src.iter().enumerate() {
                // d_i d_j x^alpha = alpha_j (alpha_i - delta_ij) x^{alpha-e_i-e_j}
                let aj = alpha[j] as i64;
                let ai = alpha[i] as i64 - if i == j { 1 } else { 0 };
                let c = aj * ai;
                if c == 0 || alpha[j] == 0 {
                    continue;
                }
                let mut beta = alpha.clone();
                beta[j] -= 1;
                if beta[i] == 0 {
                    continue;
                }
                beta[i] -= 1;
                let b = dst_idx[&beta];
                let coeff = Cyc::from_i64(-c);
                for s in 0..d {
                    for t in 0..d {
                        let v = block.get(s, t);
                        if !v.is_zero() {
                            mat.add_to(b * d + s, a * d + t, coeff.clone() * v.clone());
                        }
                    }
                }
            }
        }
    }
    Ok(mat)
}

/// ker Delta inside P_m with an exact spanning basis.
#[derive(Clone, Debug)]
pub struct HarmonicSpace {
    pub m: usize,
    /// columns span the kernel
    pub basis: CycMat,
    pub h: usize,
}

pub fn harmonic_space(sym: &CliffordSymbol, m: usize) -> Result<HarmonicSpace> {
    let lap = laplacian_matrix(sym, m)?;
    let cols = lap.ncols();
    if lap.nrows() == 0 {
        return Ok(HarmonicSpace {
            m,
            basis: CycMat::identity(cols),
            h: cols,
        });
    }
    let kb = lap.kernel_basis();
    let h = kb.len();
    let mut basis = CycMat::zeros(cols, h);
    for (j, v) in kb.iter().enumerate() {
        for (i, c) in v.iter().enumerate() {
            basis.set(i, j, c.clone());
        }
    }
    Ok(HarmonicSpace { m, basis, h })
}

/// Eigenvalue/multiplicity pairs of the spherical operator on P_m, exact and
/// certified: candidate integer eigenspaces must exhaust the space.
pub fn brute_spectrum(sym: &CliffordSymbol, m: usize) -> Result<Vec<(i64, usize)>> {
    let spec = spherical_matrix(sym, m)?;
    let window = eigenvalue_window(sym.k(), m);
    let mult = eigen_multiplicities(&spec.matrix, &window);
    let total: usize = mult.iter().sum();
    if total != spec.matrix.nrows() {
        return Err(Error::Oracle(format!(
            "spherical operator on P_{m}: integer eigenspaces span {total} of {} dimensions",
            spec.matrix.nrows()
        )));
    }
    Ok(window
        .into_iter()
        .zip(mult)
        .filter(|(_, c)| *c > 0)
        .collect())
}

/// Float-path spectrum via SVD nullities; not certified.
pub fn brute_spectrum_float(sym: &CliffordSymbol, m: usize, tol: f64) -> Result<Vec<(i64, usize)>> {
    let mat = spherical_matrix_float(sym, m);
    let window = eigenvalue_window(sym.k(), m);
    let n = mat.nrows();
    let mut out = Vec::new();
    let mut total = 0;
    for &lam in &window {
        let shifted = &mat - DMatrix::<Complex<f64>>::identity(n, n) * Complex::new(lam as f64, 0.0);
        let dim = float_nullity(&shifted, tol);
        if dim > 0 {
            out.push((lam, dim));
            total += dim;
        }
    }
    if total != n {
        return Err(Error::Oracle(format!(
            "float spectrum on P_{m} accounts for {total} of {n} dimensions (tol {tol})"
        )));
    }
    Ok(out)
}

/// Spectrum of the spherical operator restricted to the alpha-isotypic part
/// of P_m, via the group-averaged projector. Exact and certified.
pub fn equivariant_brute_spectrum(
    action: &GroupAction,
    table: &CharacterTable,
    alpha: usize,
    m: usize,
) -> Result<Vec<(i64, usize)>> {
    let sym = action.symbol();
    if alpha >= table.num_irreducibles() {
        return Err(Error::Structural(format!(
            "irreducible index {alpha} out of range ({} irreducibles)",
            table.num_irreducibles()
        )));
    }
    let rho_m = action.rep_on_poly_plus(m)?;
    let proj = rep::isotypic_projector_for(table, alpha, &rho_m)?;
    let basis = proj.image_basis();
    if basis.ncols() == 0 {
        return Ok(Vec::new());
    }
    let spec = spherical_matrix(sym, m)?;
    // the isotypic subspace is invariant, so M B = B M' for a unique M'
    let restricted = basis.solve(&spec.matrix.mul(&basis)).map_err(|_| {
        Error::Oracle("isotypic subspace is not invariant under the spherical operator".into())
    })?;
    let window = eigenvalue_window(sym.k(), m);
    let mult = eigen_multiplicities(&restricted, &window);
    let total: usize = mult.iter().sum();
    if total != restricted.nrows() {
        return Err(Error::Oracle(format!(
            "equivariant spectrum on P_{m}^alpha spans {total} of {} dimensions",
            restricted.nrows()
        )));
    }
    Ok(window
        .into_iter()
        .zip(mult)
        .filter(|(_, c)| *c > 0)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_i64;

    fn cauchy_riemann() -> CliffordSymbol {
        let a1 = CycMat::from_rows(vec![vec![Cyc::one()]]);
        let a2 = CycMat::from_rows(vec![vec![Cyc::i()]]);
        CliffordSymbol::new_exact(vec![a1, a2]).unwrap()
    }

    fn pauli() -> CliffordSymbol {
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
        CliffordSymbol::new_exact(vec![s1, s2, s3]).unwrap()
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        assert_eq!(
            monomials(2, 2),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(monomials(3, 1), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(monomials(1, 4), vec![vec![4]]);
    }

    #[test]
    fn gram_entries_are_factorials() {
        let p = PolySpace::new(2, 1, 3);
        // monomial (2,1) has alpha! = 2
        let idx = mono_index(&p.monos)[&vec![2, 1]];
        assert_eq!(p.gram().get(idx, idx).try_rat().unwrap(), rat_i64(2));
    }

    #[test]
    fn cauchy_riemann_laplacian_rank() {
        let sym = cauchy_riemann();
        let lap = laplacian_matrix(&sym, 2).unwrap();
        assert_eq!((lap.nrows(), lap.ncols()), (1, 3));
        assert_eq!(lap.rank(), 1);
        let h = harmonic_space(&sym, 2).unwrap();
        assert_eq!(h.h, 2);
    }

    #[test]
    fn laplacian_onto_for_every_symbol() {
        for sym in [cauchy_riemann(), pauli(), crate::operator::de_rham_symbol(3).unwrap()] {
            let lap = laplacian_matrix(&sym, 2).unwrap();
            assert_eq!(lap.rank(), sym.d());
        }
    }

    #[test]
    fn pauli_harmonic_dimension_m3() {
        let h = harmonic_space(&pauli(), 3).unwrap();
        assert_eq!(h.h, 14); // 2*C(5,3) - 2*C(3,1)
        let lap = laplacian_matrix(&pauli(), 3).unwrap();
        assert!(lap.mul(&h.basis).is_zero());
    }

    #[test]
    fn fischer_adjointness_of_laplacian() {
        // <Q, Delta P> = <B Q, P> with B = multiplication by the symbol of
        // -Delta; under the Clifford normalization B = -|x|^2
        for sym in [cauchy_riemann(), pauli()] {
            for m in 2..5usize {
                let (k, d) = (sym.k(), sym.d());
                let lap = laplacian_matrix(&sym, m).unwrap();
                let b = mult_by_r2(k, d, m - 2).scale(&Cyc::from_i64(-1));
                let g_low = PolySpace::new(k, d, m - 2).gram();
                let g_high = PolySpace::new(k, d, m).gram();
                assert_eq!(g_low.mul(&lap), b.dagger().mul(&g_high));
            }
        }
    }

    #[test]
    fn orthogonal_decomposition_dimension_count() {
        for sym in [cauchy_riemann(), pauli()] {
            for m in 0..7usize {
                let mut total = 0;
                let mut j = 0;
                while 2 * j <= m {
                    total += harmonic_space(&sym, m - 2 * j).unwrap().h;
                    j += 1;
                }
                assert_eq!(total, PolySpace::new(sym.k(), sym.d(), m).dim());
            }
        }
    }

    #[test]
    fn cauchy_riemann_m2_brute_spectrum() {
        let got = brute_spectrum(&cauchy_riemann(), 2).unwrap();
        assert_eq!(got, vec![(-2, 1), (0, 1), (2, 1)]);
    }

    #[test]
    fn degree_zero_kernel_is_full_fiber() {
        for sym in [cauchy_riemann(), pauli()] {
            assert_eq!(brute_spectrum(&sym, 0).unwrap(), vec![(0, sym.d())]);
        }
    }

    #[test]
    fn de_rham_k2_m1_brute_spectrum() {
        let sym = crate::operator::de_rham_symbol(2).unwrap();
        let got = brute_spectrum(&sym, 1).unwrap();
        let total: usize = got.iter().map(|(_, c)| c).sum();
        assert_eq!(total, 4);
        assert!(got.iter().all(|(l, _)| *l == -1 || *l == 1));
    }

    #[test]
    fn float_spectrum_matches_exact() {
        let sym = pauli();
        for m in 0..4usize {
            let exact = brute_spectrum(&sym, m).unwrap();
            let float = brute_spectrum_float(&sym, m, 1e-8).unwrap();
            assert_eq!(exact, float);
        }
    }
}
