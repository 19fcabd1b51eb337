//! Dense exact matrices over the cyclotomic rationals, with the elimination
//! kit the oracles need: rank, kernel bases, pivot-column image bases,
//! determinants, restriction of an operator to an invariant subspace, and
//! splitting a sparse square matrix into its connectivity blocks so that
//! per-eigenvalue kernel computations stay small.
//!
//! A float mirror (`nalgebra`-backed) covers the non-certified path.

use nalgebra::{Complex, DMatrix};

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::num::Rat;

/// Row-major dense matrix over Q(zeta).
#[derive(Clone, PartialEq)]
pub struct CycMat {
    rows: usize,
    cols: usize,
    data: Vec<Cyc>,
}

impl CycMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CycMat {
            rows,
            cols,
            data: vec![Cyc::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CycMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Cyc::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyc) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CycMat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Cyc>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c));
        CycMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyc {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyc) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: Cyc) {
        let idx = i * self.cols + j;
        let old = std::mem::replace(&mut self.data[idx], Cyc::zero());
        self.data[idx] = old + v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Cyc) -> CycMat {
        CycMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &CycMat) -> CycMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CycMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &CycMat) -> CycMat {
        self.add(&other.scale(&Cyc::from_i64(-1)))
    }

    pub fn mul(&self, other: &CycMat) -> CycMat {
        assert_eq!(self.cols, other.rows);
        let mut out = CycMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.add_to(i, j, a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> CycMat {
        CycMat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CycMat {
        CycMat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Cyc {
        assert_eq!(self.rows, self.cols);
        let mut t = Cyc::zero();
        for i in 0..self.rows {
            t += self.get(i, i).clone();
        }
        t
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (CycMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // any nonzero pivot works; prefer rational entries to keep
            // intermediate field orders small
            let mut piv = None;
            for r in row..m.rows {
                if !m.get(r, col).is_zero() {
                    if m.get(r, col).is_rational() {
                        piv = Some(r);
                        break;
                    }
                    if piv.is_none() {
                        piv = Some(r);
                    }
                }
            }
            let Some(p) = piv else { continue };
            m.swap_rows(row, p);
            let inv = m.get(row, col).clone().inv();
            for j in col..m.cols {
                let v = m.get(row, j).clone() * inv.clone();
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j).clone() - f.clone() * m.get(row, j).clone();
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free variable.
    pub fn kernel_basis(&self) -> Vec<Vec<Cyc>> {
        let (r, pivots) = self.rref();
        let mut pivot_of_col = vec![None; self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            pivot_of_col[pcol] = Some(prow);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![Cyc::zero(); self.cols];
            vec[free] = Cyc::one();
            for (col, p) in pivot_of_col.iter().enumerate() {
                if let Some(prow) = p {
                    vec[col] = -r.get(*prow, free).clone();
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Columns of `self` forming a basis of the column space.
    pub fn image_basis(&self) -> CycMat {
        let (_, pivots) = self.rref();
        CycMat::from_fn(self.rows, pivots.len(), |i, j| self.get(i, pivots[j]).clone())
    }

    pub fn det(&self) -> Cyc {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = Cyc::one();
        for col in 0..m.cols {
            let mut piv = None;
            for r in col..m.rows {
                if !m.get(r, col).is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let Some(p) = piv else { return Cyc::zero() };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let d = m.get(col, col).clone();
            det *= d.clone();
            let inv = d.inv();
            for r in col + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone() * inv.clone();
                for j in col..m.cols {
                    let v = m.get(r, j).clone() - f.clone() * m.get(col, j).clone();
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Solve self * X = rhs where self has full column rank; errors when the
    /// system is inconsistent.
    pub fn solve(&self, rhs: &CycMat) -> Result<CycMat> {
        assert_eq!(self.rows, rhs.rows);
        let n = self.cols;
        let aug = CycMat::from_fn(self.rows, n + rhs.cols, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - n).clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Err(Error::Structural("solve: inconsistent system".into()));
        }
        if pivots.len() < n {
            return Err(Error::Structural("solve: matrix not of full column rank".into()));
        }
        Ok(CycMat::from_fn(n, rhs.cols, |i, j| r.get(i, n + j).clone()))
    }

    /// Connected components of the symmetric nonzero-support graph of a
    /// square matrix (off-diagonal entries only). Kernels of self - t*I
    /// split along these blocks.
    pub fn support_components(&self) -> Vec<Vec<usize>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            let mut i = i;
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && !self.get(i, j).is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut comps: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 0..n {
            let r = find(&mut parent, i);
            comps.entry(r).or_default().push(i);
        }
        comps.into_values().collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> CycMat {
        CycMat::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn to_float(&self) -> DMatrix<Complex<f64>> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| {
            let (re, im) = self.get(i, j).to_c64();
            Complex::new(re, im)
        })
    }
}

impl std::fmt::Debug for CycMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CycMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Kernel dimension of (M - lambda I) for each candidate lambda, computed
/// blockwise on the support components.
pub fn eigen_multiplicities(m: &CycMat, candidates: &[i64]) -> Vec<usize> {
    let comps = m.support_components();
    let mut mult = vec![0usize; candidates.len()];
    for comp in &comps {
        let sub = m.submatrix(comp, comp);
        for (ci, &lam) in candidates.iter().enumerate() {
            let shifted = sub.sub(&CycMat::identity(comp.len()).scale(&Cyc::from_i64(lam)));
            mult[ci] += comp.len() - shifted.rank();
        }
    }
    mult
}

/// Float-path nullity via singular values below `tol`.
pub fn float_nullity(m: &DMatrix<Complex<f64>>, tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return m.ncols();
    }
    let svd = m.clone().svd(false, false);
    let small = svd.singular_values.iter().filter(|s| **s < tol).count();
    small + m.ncols().saturating_sub(m.nrows().min(m.ncols()))
}

/// Entry-wise maximum modulus of (A - B).
pub fn float_residual(a: &DMatrix<Complex<f64>>, b: &DMatrix<Complex<f64>>) -> f64 {
    let mut r: f64 = 0.0;
    for (x, y) in a.iter().zip(b.iter()) {
        r = r.max((x - y).norm());
    }
    r
}

pub fn rat_mat(entries: &[&[(i64, i64)]]) -> CycMat {
    CycMat::from_fn(entries.len(), entries[0].len(), |i, j| {
        let (p, q) = entries[i][j];
        Cyc::from_rat(Rat::new(p.into(), q.into()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_i64;

    fn int_mat(rows: &[&[i64]]) -> CycMat {
        CycMat::from_fn(rows.len(), rows[0].len(), |i, j| Cyc::from_i64(rows[i][j]))
    }

    #[test]
    fn rank_kernel_det() {
        let m = int_mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        let kv = CycMat::from_fn(3, 1, |i, _| k[0][i].clone());
        assert!(m.mul(&kv).is_zero());
        assert!(m.det().is_zero());

        let inv = int_mat(&[&[2, 1], &[1, 1]]);
        assert_eq!(inv.det().try_rat().unwrap(), rat_i64(1));
        assert_eq!(inv.rank(), 2);
    }

    #[test]
    fn solve_restriction() {
        let swap = int_mat(&[&[0, 1], &[1, 0]]);
        let b = int_mat(&[&[1], &[1]]);
        let x = swap.mul(&b);
        let r = b.solve(&x).unwrap();
        assert_eq!(r.get(0, 0).try_rat().unwrap(), rat_i64(1));
    }

    #[test]
    fn component_split_and_multiplicities() {
        let m = int_mat(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 3]]);
        let comps = m.support_components();
        assert_eq!(comps.len(), 2);
        let mult = eigen_multiplicities(&m, &[-1, 1, 3]);
        assert_eq!(mult, vec![1, 1, 1]);
    }

    #[test]
    fn complex_entries() {
        let i = Cyc::i();
        // [[0, -i],[i, 0]] has eigenvalues +-1
        let m = CycMat::from_rows(vec![
            vec![Cyc::zero(), -i.clone()],
            vec![i.clone(), Cyc::zero()],
        ]);
        let mult = eigen_multiplicities(&m, &[-1, 0, 1]);
        assert_eq!(mult, vec![1, 0, 1]);
        assert_eq!(m.dagger(), m);
    }

    #[test]
    fn float_nullity_matches() {
        let m = int_mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(float_nullity(&m.to_float(), 1e-8), 1);
    }
}
