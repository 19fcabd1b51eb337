//! Constant-coefficient Clifford-type symbols A_1..A_k on C^d, their
//! algebraic validation, the standard exterior-algebra realization used for
//! the Euler-characteristic examples, and the matrix of the induced
//! spherical operator on homogeneous polynomial spaces.
//!
//! The spherical operator acting on C^d-valued polynomials is
//! `sum_{j,l} x_l A_l^* A_j d_j - sum_j x_j d_j`,
//! which fixes each space P_m of homogeneous degree-m polynomials. Matrices
//! are taken in the graded-lexicographic monomial basis tensor the standard
//! fiber basis (monomial index major, fiber index minor), so they are
//! reproducible entry for entry.

use nalgebra::{Complex, DMatrix};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::linalg::{float_residual, CycMat};
use crate::num::{parse_rat, rat_string, rat_to_f64, Rat};
use crate::polyspace::{mono_index, monomials};

/// How symbol entries were supplied; float entries taint all downstream
/// exactness claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Rational,
    Float,
}

#[derive(Clone, Debug)]
pub enum SymbolEntries {
    Exact(Vec<CycMat>),
    Float(Vec<DMatrix<Complex<f64>>>),
}

/// A validated Clifford-type symbol: k matrices A_j in GL(d, C) with
/// A_l^* A_j + A_j^* A_l = 2 delta_{lj} I, so that sum theta_j A_j is
/// unitary for every unit theta.
#[derive(Clone, Debug)]
pub struct CliffordSymbol {
    k: usize,
    d: usize,
    entries: SymbolEntries,
    tol: f64,
    /// Marks the exterior-algebra construction; the eta engine treats the
    /// spherical de Rham operator through its paired spectrum.
    de_rham: bool,
}

/// One violated relation found by `validate_symbol`.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub l: usize,
    pub j: usize,
    pub residual: f64,
}

/// Outcome of validating anticommutation relations and invertibility.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub singular: Vec<usize>,
}

/// Check A_l^* A_j + A_j^* A_l = 2 delta_{lj} I entrywise (exact when tol = 0)
/// and invertibility of each A_j. Lists every violated (l, j) pair.
pub fn validate_symbol_exact(a: &[CycMat]) -> Result<ValidationReport> {
    let k = a.len();
    if k == 0 {
        return Err(Error::Structural("symbol needs k >= 1 matrices".into()));
    }
    let d = a[0].nrows();
    for (j, m) in a.iter().enumerate() {
        if m.nrows() != d || m.ncols() != d {
            return Err(Error::Structural(format!(
                "matrix A_{} is {}x{}, expected {}x{}",
                j + 1,
                m.nrows(),
                m.ncols(),
                d,
                d
            )));
        }
    }
    let mut violations = Vec::new();
    for l in 0..k {
        for j in l..k {
            let s = a[l].dagger().mul(&a[j]).add(&a[j].dagger().mul(&a[l]));
            let target = if l == j {
                CycMat::identity(d).scale(&Cyc::from_i64(2))
            } else {
                CycMat::zeros(d, d)
            };
            let diff = s.sub(&target);
            if !diff.is_zero() {
                let residual = float_residual(&diff.to_float(), &DMatrix::zeros(d, d));
                violations.push(Violation { l: l + 1, j: j + 1, residual });
            }
        }
    }
    let mut singular = Vec::new();
    for (j, m) in a.iter().enumerate() {
        if m.det().is_zero() {
            singular.push(j + 1);
        }
    }
    Ok(ValidationReport {
        ok: violations.is_empty() && singular.is_empty(),
        violations,
        singular,
    })
}

/// Float-path validation within `tol`.
pub fn validate_symbol_float(a: &[DMatrix<Complex<f64>>], tol: f64) -> Result<ValidationReport> {
    let k = a.len();
    if k == 0 {
        return Err(Error::Structural("symbol needs k >= 1 matrices".into()));
    }
    let d = a[0].nrows();
    for (j, m) in a.iter().enumerate() {
        if m.nrows() != d || m.ncols() != d {
            return Err(Error::Structural(format!("matrix A_{} has wrong shape", j + 1)));
        }
    }
    let mut violations = Vec::new();
    for l in 0..k {
        for j in l..k {
            let s = a[l].adjoint() * &a[j] + a[j].adjoint() * &a[l];
            let target = if l == j {
                DMatrix::identity(d, d) * Complex::new(2.0, 0.0)
            } else {
                DMatrix::zeros(d, d)
            };
            let residual = float_residual(&s, &target);
            if residual > tol {
                violations.push(Violation { l: l + 1, j: j + 1, residual });
            }
        }
    }
    let mut singular = Vec::new();
    for (j, m) in a.iter().enumerate() {
        if m.clone().determinant().norm() <= tol {
            singular.push(j + 1);
        }
    }
    Ok(ValidationReport {
        ok: violations.is_empty() && singular.is_empty(),
        violations,
        singular,
    })
}

impl CliffordSymbol {
    /// Build and validate an exact symbol.
    pub fn new_exact(a: Vec<CycMat>) -> Result<Self> {
        let report = validate_symbol_exact(&a)?;
        if !report.ok {
            return Err(Error::Validation(format!(
                "symbol fails Clifford relations: {} violated pair(s), {} singular matrix(es)",
                report.violations.len(),
                report.singular.len()
            )));
        }
        let d = a[0].nrows();
        Ok(CliffordSymbol {
            k: a.len(),
            d,
            entries: SymbolEntries::Exact(a),
            tol: 0.0,
            de_rham: false,
        })
    }

    /// Build and validate a float symbol with the declared tolerance.
    pub fn new_float(a: Vec<DMatrix<Complex<f64>>>, tol: f64) -> Result<Self> {
        let report = validate_symbol_float(&a, tol)?;
        if !report.ok {
            return Err(Error::Validation(format!(
                "symbol fails Clifford relations within tol {}: {} violated pair(s)",
                tol,
                report.violations.len()
            )));
        }
        let d = a[0].nrows();
        Ok(CliffordSymbol {
            k: a.len(),
            d,
            entries: SymbolEntries::Float(a),
            tol,
            de_rham: false,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.entries, SymbolEntries::Exact(_))
    }

    pub fn is_de_rham(&self) -> bool {
        self.de_rham
    }

    pub fn exact_matrices(&self) -> Result<&[CycMat]> {
        match &self.entries {
            SymbolEntries::Exact(a) => Ok(a),
            SymbolEntries::Float(_) => Err(Error::Validation(
                "operation requires exact (rational/cyclotomic) symbol entries".into(),
            )),
        }
    }

    pub fn float_matrices(&self) -> Vec<DMatrix<Complex<f64>>> {
        match &self.entries {
            SymbolEntries::Exact(a) => a.iter().map(CycMat::to_float).collect(),
            SymbolEntries::Float(a) => a.clone(),
        }
    }

    /// A_l^* A_j, exact.
    pub fn gram_block(&self, l: usize, j: usize) -> Result<CycMat> {
        let a = self.exact_matrices()?;
        Ok(a[l].dagger().mul(&a[j]))
    }
}

/// The exterior-derivative-plus-codifferential symbol from even to odd
/// forms: A_j = e_j wedge - e_j contraction on Lambda^even R^k, d = 2^{k-1}.
/// Basis: subsets of {1..k} in lexicographic order of their sorted index
/// tuples, even subsets for the source, odd for the target.
pub fn de_rham_symbol(k: usize) -> Result<CliffordSymbol> {
    if k == 0 {
        return Err(Error::Structural("de Rham symbol needs k >= 1".into()));
    }
    let even = form_basis(k, false);
    let odd = form_basis(k, true);
    let d = even.len();
    let odd_index: std::collections::HashMap<u32, usize> =
        odd.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut mats = Vec::with_capacity(k);
    for j in 0..k {
        let bit = 1u32 << j;
        let mut m = CycMat::zeros(d, d);
        for (col, &s) in even.iter().enumerate() {
            let below = (s & (bit - 1)).count_ones();
            let sign = if below % 2 == 0 { 1 } else { -1 };
            if s & bit == 0 {
                // e_j wedge
                let t = s | bit;
                m.set(odd_index[&t], col, Cyc::from_i64(sign));
            } else {
                // - e_j contraction
                let t = s & !bit;
                m.set(odd_index[&t], col, Cyc::from_i64(-sign));
            }
        }
        mats.push(m);
    }
    let mut sym = CliffordSymbol::new_exact(mats)?;
    sym.de_rham = true;
    Ok(sym)
}

/// Subsets of {1..k} of the requested parity, as bitmasks, in lexicographic
/// order of the sorted index tuples.
pub fn form_basis(k: usize, odd: bool) -> Vec<u32> {
    let mut subsets: Vec<Vec<u32>> = (0u32..(1 << k))
        .filter(|s| (s.count_ones() % 2 == 1) == odd)
        .map(|s| (0..k as u32).filter(|b| s & (1 << b) != 0).collect())
        .collect();
    subsets.sort();
    subsets
        .into_iter()
        .map(|t| t.into_iter().fold(0u32, |acc, b| acc | (1 << b)))
        .collect()
}

/// The spherical operator matrix on P_m together with its basis bookkeeping.
#[derive(Clone, Debug)]
pub struct SphericalOperatorSpec {
    pub k: usize,
    pub d: usize,
    pub m: usize,
    pub matrix: CycMat,
}

/// Exact matrix of the spherical operator on homogeneous degree-m
/// polynomials; entries are integer combinations of the entries of A_l^* A_j.
pub fn spherical_matrix(sym: &CliffordSymbol, m: usize) -> Result<SphericalOperatorSpec> {
    let (k, d) = (sym.k(), sym.d());
    let monos = monomials(k, m);
    let idx = mono_index(&monos);
    let n = monos.len() * d;
    let mut mat = CycMat::zeros(n, n);
    let mut blocks = Vec::with_capacity(k * k);
    for l in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            row.push(sym.gram_block(l, j)?);
        }
        blocks.push(row);
    }
    for (a, alpha) in monos.iter().enumerate() {
        for j in 0..k {
            if alpha[j] == 0 {
                continue;
            }
            let coeff = Cyc::from_i64(alpha[j] as i64);
            for l in 0..k {
                let mut beta = alpha.clone();
                beta[j] -= 1;
                beta[l] += 1;
                let b = idx[&beta];
                let block = &blocks[l][j];
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
        // Euler operator contributes -m on the diagonal block
        for t in 0..d {
            mat.add_to(a * d + t, a * d + t, Cyc::from_i64(-(m as i64)));
        }
    }
    Ok(SphericalOperatorSpec { k, d, m, matrix: mat })
}

/// Float mirror of `spherical_matrix`.
pub fn spherical_matrix_float(sym: &CliffordSymbol, m: usize) -> DMatrix<Complex<f64>> {
    let (k, d) = (sym.k(), sym.d());
    let a = sym.float_matrices();
    let monos = monomials(k, m);
    let idx = mono_index(&monos);
    let n = monos.len() * d;
    let mut mat = DMatrix::<Complex<f64>>::zeros(n, n);
    for (ai, alpha) in monos.iter().enumerate() {
        for j in 0..k {
            if alpha[j] == 0 {
                continue;
            }
            for l in 0..k {
                let mut beta = alpha.clone();
                beta[j] -= 1;
                beta[l] += 1;
                let b = idx[&beta];
                let block = a[l].adjoint() * &a[j];
                for s in 0..d {
                    for t in 0..d {
                        mat[(b * d + s, ai * d + t)] +=
                            block[(s, t)] * Complex::new(alpha[j] as f64, 0.0);
                    }
                }
            }
        }
        for t in 0..d {
            mat[(ai * d + t, ai * d + t)] -= Complex::new(m as f64, 0.0);
        }
    }
    mat
}

/// Allowed integer eigenvalues of the spherical operator on P_m:
/// {-m..0} and {k-1..m+k-2}.
pub fn eigenvalue_window(k: usize, m: usize) -> Vec<i64> {
    let mut w = std::collections::BTreeSet::new();
    for j in 0..=m as i64 {
        w.insert(-j);
    }
    for j in 0..=m as i64 {
        let lam = j + k as i64 - 2;
        if lam >= k as i64 - 1 || (k == 1 && lam >= 0) {
            w.insert(lam);
        }
    }
    // k = 1 collapses the positive window onto {0..m-1}
    if k == 1 {
        for j in 0..m as i64 {
            w.insert(j);
        }
    }
    w.into_iter().collect()
}

// ---------------------------------------------------------------------------
// symbol file format

/// On-disk symbol format: k, d, the k matrices row-major, the entry kind and
/// the float tolerance.
#[derive(Serialize, Deserialize)]
pub struct SymbolFile {
    pub k: usize,
    pub d: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<EntryJsonPub>>,
    pub entry_kind: EntryKind,
    #[serde(default)]
    pub tol: f64,
}

pub type EntryJsonPub = serde_json::Map<String, serde_json::Value>;

fn entry_value(v: &serde_json::Value, kind: EntryKind) -> Result<(Option<Rat>, f64)> {
    match kind {
        EntryKind::Rational => {
            let r = match v {
                serde_json::Value::String(s) => parse_rat(s)?,
                serde_json::Value::Number(n) => {
                    if let Some(i) = n.as_i64() {
                        Rat::from_integer(i.into())
                    } else {
                        return Err(Error::Io(
                            "rational symbol entries must be integers or 'p/q' strings".into(),
                        ));
                    }
                }
                _ => return Err(Error::Io("bad symbol entry".into())),
            };
            let f = rat_to_f64(&r);
            Ok((Some(r), f))
        }
        EntryKind::Float => {
            let f = v
                .as_f64()
                .ok_or_else(|| Error::Io("float symbol entries must be numbers".into()))?;
            Ok((None, f))
        }
    }
}

pub fn symbol_from_json(text: &str) -> Result<CliffordSymbol> {
    let file: SymbolFile =
        serde_json::from_str(text).map_err(|e| Error::Io(format!("symbol parse: {e}")))?;
    if file.a.len() != file.k {
        return Err(Error::Structural(format!(
            "symbol file declares k={} but supplies {} matrices",
            file.k,
            file.a.len()
        )));
    }
    let d = file.d;
    match file.entry_kind {
        EntryKind::Rational => {
            let mut mats = Vec::with_capacity(file.k);
            for m in &file.a {
                if m.len() != d * d {
                    return Err(Error::Structural("matrix entry count != d*d".into()));
                }
                let mut mat = CycMat::zeros(d, d);
                for (i, e) in m.iter().enumerate() {
                    let re = entry_value(e.get("re").unwrap_or(&serde_json::Value::Null), file.entry_kind)?
                        .0
                        .unwrap();
                    let im = entry_value(e.get("im").unwrap_or(&serde_json::Value::Null), file.entry_kind)?
                        .0
                        .unwrap();
                    mat.set(i / d, i % d, Cyc::gaussian(re, im));
                }
                mats.push(mat);
            }
            CliffordSymbol::new_exact(mats)
        }
        EntryKind::Float => {
            let mut mats = Vec::with_capacity(file.k);
            for m in &file.a {
                if m.len() != d * d {
                    return Err(Error::Structural("matrix entry count != d*d".into()));
                }
                let mut mat = DMatrix::<Complex<f64>>::zeros(d, d);
                for (i, e) in m.iter().enumerate() {
                    let re = entry_value(e.get("re").unwrap_or(&serde_json::Value::Null), file.entry_kind)?.1;
                    let im = entry_value(e.get("im").unwrap_or(&serde_json::Value::Null), file.entry_kind)?.1;
                    mat[(i / d, i % d)] = Complex::new(re, im);
                }
                mats.push(mat);
            }
            CliffordSymbol::new_float(mats, if file.tol > 0.0 { file.tol } else { 1e-9 })
        }
    }
}

/// Serialize an exact symbol; Gaussian-rational entries only (general
/// cyclotomic entries have no file representation and are rejected).
pub fn symbol_to_json(sym: &CliffordSymbol) -> Result<String> {
    let a = sym.exact_matrices()?;
    let d = sym.d();
    let mut mats = Vec::new();
    for m in a {
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let z = m.get(i, j);
                let re = z.re().try_rat();
                let im_rat = ((z.clone() - z.re()) * Cyc::i().inv()).try_rat();
                let (Some(re), Some(im)) = (re, im_rat) else {
                    return Err(Error::Validation(
                        "symbol entries outside Q(i) cannot be serialized".into(),
                    ));
                };
                let mut map = serde_json::Map::new();
                map.insert("re".into(), serde_json::Value::String(rat_string(&re)));
                map.insert("im".into(), serde_json::Value::String(rat_string(&im)));
                entries.push(map);
            }
        }
        mats.push(entries);
    }
    let file = SymbolFile {
        k: sym.k(),
        d,
        a: mats,
        entry_kind: EntryKind::Rational,
        tol: 0.0,
    };
    serde_json::to_string_pretty(&file).map_err(|e| Error::Io(e.to_string()))
}
