//! Finite-group actions compatible with a Clifford symbol: an orthogonal
//! action on R^k and unitary actions on the two fiber copies of C^d making
//! the operator equivariant, i.e. U^-_g A_i = sum_j R_g[j][i] A_j U^+_g.
//!
//! The induced representation on C^{d+}-valued homogeneous polynomials,
//! (g.f)(x) = U^+_g f(R_g^{-1} x), is materialized as exact matrices for the
//! brute-force oracle; the closed forms only consume traces and the
//! characteristic polynomials det(I - t R_g).

use std::collections::HashMap;

use serde::Deserialize;

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::CycMat;
use crate::operator::CliffordSymbol;
use crate::polyspace::{mono_index, monomials};

#[derive(Clone, Debug)]
pub struct GroupAction {
    group: FiniteGroup,
    symbol: CliffordSymbol,
    r: Vec<CycMat>,
    u_plus: Vec<CycMat>,
    u_minus: Vec<CycMat>,
}

impl GroupAction {
    /// Validate homomorphism, orthogonality/unitarity and equivariance with
    /// the symbol.
    pub fn new(
        group: FiniteGroup,
        symbol: CliffordSymbol,
        r: Vec<CycMat>,
        u_plus: Vec<CycMat>,
        u_minus: Vec<CycMat>,
    ) -> Result<Self> {
        let n = group.order();
        let (k, d) = (symbol.k(), symbol.d());
        if r.len() != n || u_plus.len() != n || u_minus.len() != n {
            return Err(Error::Structural("action must supply one matrix per element".into()));
        }
        for g in 0..n {
            if r[g].nrows() != k || r[g].ncols() != k {
                return Err(Error::Structural(format!("R_{g} is not {k}x{k}")));
            }
            if u_plus[g].nrows() != d || u_minus[g].nrows() != d {
                return Err(Error::Structural(format!("fiber matrices of element {g} are not {d}x{d}")));
            }
        }
        for fam in [&r, &u_plus, &u_minus] {
            if !fam[0].sub(&CycMat::identity(fam[0].nrows())).is_zero() {
                return Err(Error::Validation("identity element must act as the identity".into()));
            }
        }
        for g in 0..n {
            if r[g].transpose().mul(&r[g]) != CycMat::identity(k) {
                return Err(Error::Validation(format!("R_{g} is not orthogonal")));
            }
            if u_plus[g].dagger().mul(&u_plus[g]) != CycMat::identity(d) {
                return Err(Error::Validation(format!("U+_{g} is not unitary")));
            }
            if u_minus[g].dagger().mul(&u_minus[g]) != CycMat::identity(d) {
                return Err(Error::Validation(format!("U-_{g} is not unitary")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = group.mul(a, b);
                if r[a].mul(&r[b]) != r[ab]
                    || u_plus[a].mul(&u_plus[b]) != u_plus[ab]
                    || u_minus[a].mul(&u_minus[b]) != u_minus[ab]
                {
                    return Err(Error::Validation(format!(
                        "action is not a homomorphism at ({a},{b})"
                    )));
                }
            }
        }
        let amats = symbol.exact_matrices()?;
        for g in 0..n {
            for i in 0..k {
                let lhs = u_minus[g].mul(&amats[i]);
                let mut rhs = CycMat::zeros(d, d);
                for j in 0..k {
                    let c = r[g].get(j, i).clone();
                    if !c.is_zero() {
                        rhs = rhs.add(&amats[j].mul(&u_plus[g]).scale(&c));
                    }
                }
                if lhs != rhs {
                    return Err(Error::Validation(format!(
                        "equivariance fails for element {g}, direction {}",
                        i + 1
                    )));
                }
            }
        }
        Ok(GroupAction { group, symbol, r, u_plus, u_minus })
    }

    /// Trivial action of the one-element group; the symbol's own spectra.
    pub fn trivial(symbol: CliffordSymbol) -> Self {
        let group = crate::group::cyclic(1);
        let (k, d) = (symbol.k(), symbol.d());
        GroupAction {
            group,
            symbol,
            r: vec![CycMat::identity(k)],
            u_plus: vec![CycMat::identity(d)],
            u_minus: vec![CycMat::identity(d)],
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn symbol(&self) -> &CliffordSymbol {
        &self.symbol
    }

    pub fn rotation(&self, g: usize) -> &CycMat {
        &self.r[g]
    }

    pub fn fiber_plus(&self, g: usize) -> &CycMat {
        &self.u_plus[g]
    }

    pub fn fiber_minus(&self, g: usize) -> &CycMat {
        &self.u_minus[g]
    }

    /// +-1 per element: determinant of R_g (orientation character of the
    /// action on R^k).
    pub fn orientation_character(&self) -> Vec<i64> {
        (0..self.group.order())
            .map(|g| {
                let det = self.r[g].det().try_rat().expect("orthogonal determinant is rational");
                if det == crate::num::rat_i64(1) {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    /// Matrices of (g.f)(x) = U^+_g f(R_g^{-1} x) on P_m tensor C^{d+}.
    pub fn rep_on_poly_plus(&self, m: usize) -> Result<Vec<CycMat>> {
        self.rep_on_poly(m, &self.u_plus)
    }

    fn rep_on_poly(&self, m: usize, fiber: &[CycMat]) -> Result<Vec<CycMat>> {
        let k = self.symbol.k();
        let d = fiber[0].nrows();
        let monos = monomials(k, m);
        let idx = mono_index(&monos);
        let nm = monos.len();
        let mut out = Vec::with_capacity(self.group.order());
        for g in 0..self.group.order() {
            // rows of R^T = columns of R give the substitution x_j -> sum_i R^{-1}[j][i] x_i
            let rinv = self.r[g].transpose();
            let mut mat = CycMat::zeros(nm * d, nm * d);
            for (a, alpha) in monos.iter().enumerate() {
                let expanded = substitute_monomial(alpha, &rinv, k);
                for (beta, coeff) in expanded {
                    let b = idx[&beta];
                    for s in 0..d {
                        for t in 0..d {
                            let u = fiber[g].get(s, t);
                            if !u.is_zero() {
                                mat.add_to(b * d + s, a * d + t, coeff.clone() * u.clone());
                            }
                        }
                    }
                }
            }
            out.push(mat);
        }
        Ok(out)
    }

    /// det(I - t R_g) as exact polynomial coefficients, degree k.
    pub fn char_poly_one_minus_t(&self, g: usize) -> Vec<Cyc> {
        let k = self.symbol.k();
        // interpolate? smaller: direct expansion of det over permutations is
        // fine for k <= 4; build via minors instead for generality
        det_poly(&self.r[g], k)
    }
}

/// Expand x^alpha(M x) = prod_j (sum_i M[j][i] x_i)^{alpha_j}.
fn substitute_monomial(alpha: &[u32], m: &CycMat, k: usize) -> HashMap<Vec<u32>, Cyc> {
    let mut acc: HashMap<Vec<u32>, Cyc> = HashMap::new();
    acc.insert(vec![0; k], Cyc::one());
    for (j, &e) in alpha.iter().enumerate() {
        for _ in 0..e {
            let mut next: HashMap<Vec<u32>, Cyc> = HashMap::new();
            for (mono, c) in &acc {
                for i in 0..k {
                    let f = m.get(j, i);
                    if f.is_zero() {
                        continue;
                    }
                    let mut mo = mono.clone();
                    mo[i] += 1;
                    let v = c.clone() * f.clone();
                    next.entry(mo)
                        .and_modify(|x| *x += v.clone())
                        .or_insert(v);
                }
            }
            acc = next;
        }
    }
    acc
}

/// Coefficients of det(I - t M), low degree first, via leading principal
/// minor expansion over all subsets (k is small).
fn det_poly(m: &CycMat, k: usize) -> Vec<Cyc> {
    // det(I - tM) = sum_{S} (-t)^{|S|} det(M_S)
    let mut coeffs = vec![Cyc::zero(); k + 1];
    for mask in 0u32..(1 << k) {
        let rows: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let size = rows.len();
        let minor = m.submatrix(&rows, &rows);
        let det = if size == 0 { Cyc::one() } else { minor.det() };
        let sign = if size % 2 == 0 { 1 } else { -1 };
        coeffs[size] += det * Cyc::from_i64(sign);
    }
    coeffs
}

// ---------------------------------------------------------------------------
// file format

/// Action file: group table, generator indices and per-generator matrices;
/// the full maps are expanded along a Cayley breadth-first search and then
/// revalidated as homomorphisms. The symbol is referenced by path or
/// inlined; a character table may be bundled for isotypic computations.
#[derive(Deserialize)]
pub struct ActionFile {
    #[serde(default)]
    pub symbol_file: Option<String>,
    #[serde(default)]
    pub symbol: Option<serde_json::Value>,
    pub group: crate::group::GroupFile,
    #[serde(default)]
    pub chartable: Option<crate::chartable::CharTableFile>,
    pub generators: Vec<usize>,
    #[serde(rename = "R")]
    pub r: Vec<Vec<serde_json::Value>>,
    #[serde(rename = "Uplus")]
    pub u_plus: Vec<Vec<serde_json::Value>>,
    #[serde(rename = "Uminus")]
    pub u_minus: Vec<Vec<serde_json::Value>>,
}

fn parse_matrix(entries: &[serde_json::Value], dim: usize) -> Result<CycMat> {
    if entries.len() != dim * dim {
        return Err(Error::Structural(format!(
            "matrix must have {} row-major entries",
            dim * dim
        )));
    }
    let mut m = CycMat::zeros(dim, dim);
    for (i, e) in entries.iter().enumerate() {
        m.set(i / dim, i % dim, crate::chartable::parse_value(e)?);
    }
    Ok(m)
}

/// Expand generator images to the whole group along products; fails when the
/// generators do not generate.
pub fn expand_generators(
    group: &FiniteGroup,
    generators: &[usize],
    images: &[CycMat],
    dim: usize,
) -> Result<Vec<CycMat>> {
    let n = group.order();
    let mut out: Vec<Option<CycMat>> = vec![None; n];
    out[0] = Some(CycMat::identity(dim));
    let mut frontier = vec![0usize];
    while let Some(g) = frontier.pop() {
        for (gi, &gen) in generators.iter().enumerate() {
            let h = group.mul(gen, g);
            if out[h].is_none() {
                let m = images[gi].mul(out[g].as_ref().unwrap());
                out[h] = Some(m);
                frontier.push(h);
            }
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(g, m)| m.ok_or_else(|| Error::Structural(format!("generators do not reach element {g}"))))
        .collect()
}

pub fn action_from_json(text: &str, symbol: CliffordSymbol) -> Result<GroupAction> {
    let file: ActionFile =
        serde_json::from_str(text).map_err(|e| Error::Io(format!("action parse: {e}")))?;
    build_action(file, symbol).map(|(a, _)| a)
}

/// Parse an action file resolving its symbol reference through `read_file`
/// (relative paths are the caller's concern). Returns the bundled character
/// table too, when present.
pub fn action_from_json_resolved(
    text: &str,
    read_file: &dyn Fn(&str) -> Result<String>,
) -> Result<(GroupAction, Option<crate::chartable::CharacterTable>)> {
    let file: ActionFile =
        serde_json::from_str(text).map_err(|e| Error::Io(format!("action parse: {e}")))?;
    let symbol = if let Some(v) = &file.symbol {
        crate::operator::symbol_from_json(&v.to_string())?
    } else if let Some(path) = &file.symbol_file {
        crate::operator::symbol_from_json(&read_file(path)?)?
    } else {
        return Err(Error::Structural(
            "action file must carry 'symbol' inline or a 'symbol_file' path".into(),
        ));
    };
    build_action(file, symbol)
}

fn build_action(
    file: ActionFile,
    symbol: CliffordSymbol,
) -> Result<(GroupAction, Option<crate::chartable::CharacterTable>)> {
    let group = FiniteGroup::new(file.group.mul)?;
    let (k, d) = (symbol.k(), symbol.d());
    if file.r.len() != file.generators.len()
        || file.u_plus.len() != file.generators.len()
        || file.u_minus.len() != file.generators.len()
    {
        return Err(Error::Structural("one matrix per generator required".into()));
    }
    let rg = file.r.iter().map(|m| parse_matrix(m, k)).collect::<Result<Vec<_>>>()?;
    let upg = file.u_plus.iter().map(|m| parse_matrix(m, d)).collect::<Result<Vec<_>>>()?;
    let umg = file.u_minus.iter().map(|m| parse_matrix(m, d)).collect::<Result<Vec<_>>>()?;
    let r = expand_generators(&group, &file.generators, &rg, k)?;
    let up = expand_generators(&group, &file.generators, &upg, d)?;
    let um = expand_generators(&group, &file.generators, &umg, d)?;
    let table = file
        .chartable
        .map(|ct| crate::chartable::chartable_from_file(group.clone(), ct))
        .transpose()?;
    Ok((GroupAction::new(group, symbol, r, up, um)?, table))
}

/// Serialize an action with an inline symbol and its character table, using
/// a greedily chosen generating set.
pub fn action_to_json(action: &GroupAction, table: &crate::chartable::CharacterTable) -> Result<String> {
    let g = action.group();
    let n = g.order();
    // greedy generating set
    let mut generated = vec![false; n];
    generated[0] = true;
    let mut generators: Vec<usize> = Vec::new();
    loop {
        let missing = (0..n).find(|&x| !generated[x]);
        let Some(x) = missing else { break };
        generators.push(x);
        // close under products
        let mut changed = true;
        while changed {
            changed = false;
            let known: Vec<usize> = (0..n).filter(|&y| generated[y]).collect();
            for &a in generators.iter() {
                for &b in &known {
                    let c = g.mul(a, b);
                    if !generated[c] {
                        generated[c] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    let mat_json = |m: &CycMat| -> Vec<serde_json::Value> {
        let mut out = Vec::new();
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                out.push(crate::report::cyc_to_json(m.get(i, j)));
            }
        }
        out
    };
    let chartable = crate::chartable::CharTableFile {
        irreducibles: table
            .irreps()
            .iter()
            .map(|irr| crate::chartable::IrrepFile {
                name: irr.name.clone(),
                degree: irr.degree,
                values: irr.values.iter().map(crate::report::cyc_to_json).collect(),
            })
            .collect(),
        order_of_enumeration: table.irreps().iter().map(|i| i.name.clone()).collect(),
    };
    let symbol_json: serde_json::Value =
        serde_json::from_str(&crate::operator::symbol_to_json(action.symbol())?)
            .map_err(|e| Error::Io(e.to_string()))?;
    let value = serde_json::json!({
        "symbol": symbol_json,
        "group": serde_json::from_str::<serde_json::Value>(&crate::group::group_to_json(g))
            .map_err(|e| Error::Io(e.to_string()))?,
        "chartable": chartable,
        "generators": generators,
        "R": generators.iter().map(|&x| mat_json(action.rotation(x))).collect::<Vec<_>>(),
        "Uplus": generators.iter().map(|&x| mat_json(action.fiber_plus(x))).collect::<Vec<_>>(),
        "Uminus": generators.iter().map(|&x| mat_json(action.fiber_minus(x))).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&value).map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::rotation_matrix;
    use crate::num::rat_i64;

    fn cauchy_riemann() -> CliffordSymbol {
        let a1 = CycMat::from_rows(vec![vec![Cyc::one()]]);
        let a2 = CycMat::from_rows(vec![vec![Cyc::i()]]);
        CliffordSymbol::new_exact(vec![a1, a2]).unwrap()
    }

    /// Rotation action of Z_p on the Cauchy-Riemann symbol with fiber
    /// character chi_c; the minus fiber is forced to chi_{c+1}.
    pub fn cr_rotation_action(p: usize, c: i64) -> GroupAction {
        let group = crate::group::cyclic(p);
        let sym = cauchy_riemann();
        let r: Vec<CycMat> = (0..p).map(|a| rotation_matrix(p, a as i64)).collect();
        let u_plus: Vec<CycMat> = (0..p)
            .map(|a| {
                CycMat::from_rows(vec![vec![Cyc::root_of_unity(p as u32, c * a as i64)]])
            })
            .collect();
        let u_minus: Vec<CycMat> = (0..p)
            .map(|a| {
                CycMat::from_rows(vec![vec![Cyc::root_of_unity(p as u32, (c + 1) * a as i64)]])
            })
            .collect();
        GroupAction::new(group, sym, r, u_plus, u_minus).unwrap()
    }

    #[test]
    fn rotation_actions_validate() {
        for p in [2usize, 3, 4, 5] {
            let act = cr_rotation_action(p, 0);
            assert_eq!(act.group().order(), p);
            assert!(act.orientation_character().iter().all(|&s| s == 1));
        }
    }

    #[test]
    fn wrong_fiber_fails_equivariance() {
        let group = crate::group::cyclic(3);
        let sym = cauchy_riemann();
        let r: Vec<CycMat> = (0..3).map(|a| rotation_matrix(3, a as i64)).collect();
        let triv: Vec<CycMat> = (0..3).map(|_| CycMat::identity(1)).collect();
        let res = GroupAction::new(group, sym, r, triv.clone(), triv);
        assert!(res.is_err());
    }

    #[test]
    fn poly_rep_is_homomorphism() {
        let act = cr_rotation_action(3, 1);
        let rep = act.rep_on_poly_plus(2).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(rep[a].mul(&rep[b]), rep[act.group().mul(a, b)]);
            }
        }
    }

    #[test]
    fn char_poly_of_rotations() {
        let act = cr_rotation_action(3, 0);
        // det(I - t R_1) = 1 + t + t^2 for a 2 pi/3 rotation
        let cp = act.char_poly_one_minus_t(1);
        let vals: Vec<_> = cp.iter().map(|c| c.try_rat().unwrap()).collect();
        assert_eq!(vals, vec![rat_i64(1), rat_i64(1), rat_i64(1)]);
    }

    #[test]
    fn antipodal_action_on_de_rham() {
        let sym = crate::operator::de_rham_symbol(3).unwrap();
        let d = sym.d();
        let group = crate::group::cyclic(2);
        let r = vec![CycMat::identity(3), CycMat::identity(3).scale(&Cyc::from_i64(-1))];
        let up = vec![CycMat::identity(d), CycMat::identity(d)];
        let um = vec![CycMat::identity(d), CycMat::identity(d).scale(&Cyc::from_i64(-1))];
        let act = GroupAction::new(group, sym, r, up, um).unwrap();
        assert_eq!(act.orientation_character(), vec![1, -1]);
    }
}
