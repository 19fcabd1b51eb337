//! Index-theorem assembly: equivariant Euler characteristics of stratified
//! actions from user-supplied quotient Euler numbers, homogeneous-space
//! multiplicities for finite groups, single-orbit stratum correction terms,
//! the dual-presence filter for invariant-index contributions, and the
//! lens-space cotangent sum.
//!
//! The topological inputs (relative Euler numbers of quotients) are plain
//! integers supplied by the model; everything representation-theoretic is
//! computed exactly.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chartable::{self, CharacterTable};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::num::{rat_i64, Rat};
use crate::rep;

// ---------------------------------------------------------------------------
// homogeneous-space multiplicities and the Euler theorem

/// Multiplicity of rho in the sections of the line bundle induced by the
/// character xi on G/H: by Frobenius reciprocity this is <Res_H rho, xi>.
/// `xi = None` means the trivial character (orientation preserved).
pub fn chi_rho_homogeneous(
    table_g: &CharacterTable,
    table_h: &CharacterTable,
    embedding: &[usize],
    xi: Option<usize>,
    rho: usize,
) -> Result<i64> {
    let xi = match xi {
        Some(x) => x,
        None => trivial_index(table_h)?,
    };
    // xi must be a degree-1 real character
    if table_h.degree(xi) != 1 {
        return Err(Error::Validation("orientation character must be one-dimensional".into()));
    }
    for g in 0..table_h.group().order() {
        let v = table_h.value(xi, g);
        if !(v.clone() - Cyc::one()).is_zero() && !(v.clone() + Cyc::one()).is_zero() {
            return Err(Error::Validation(
                "orientation character must take values +-1".into(),
            ));
        }
    }
    let mults = rep::restriction_multiplicities(table_g, table_h, embedding, rho)?;
    Ok(mults[xi] as i64)
}

fn trivial_index(table: &CharacterTable) -> Result<usize> {
    let per: Vec<Cyc> = (0..table.group().order()).map(|_| Cyc::one()).collect();
    table
        .match_character(&per)
        .ok_or_else(|| Error::Validation("table has no trivial character".into()))
}

/// Finite-mode isotropy data of a stratum or of the principal orbit type.
#[derive(Clone, Debug)]
pub struct IsotropyData {
    pub table: CharacterTable,
    pub embedding: Vec<usize>,
    /// None = orientation preserved; Some(xi) = index of the +-1 character
    /// of the isotropy group on the normal orientation line
    pub orientation: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Stratum {
    pub id: String,
    /// finite mode
    pub isotropy: Option<IsotropyData>,
    /// compact-opaque mode: chi^rho(G/G_j, L_j) per irreducible label
    pub chi_table: Option<BTreeMap<String, i64>>,
    /// chi(G \ closure, G \ lower strata)
    pub chi_quotient_rel: i64,
}

/// Combinatorial model of a stratified action: either a finite group with
/// computable homogeneous-space data, or an opaque compact group where every
/// needed chi^rho value is supplied per stratum.
#[derive(Clone, Debug)]
pub struct StrataModel {
    /// finite mode: full character table of G
    pub table: Option<CharacterTable>,
    /// compact-opaque mode: the enumeration of irreducible labels
    pub opaque_irreps: Option<Vec<String>>,
    pub principal_isotropy: Option<IsotropyData>,
    pub principal_chi: Option<BTreeMap<String, i64>>,
    /// chi(G \ M, G \ singular strata)
    pub chi_principal_rel: i64,
    pub strata: Vec<Stratum>,
}

impl StrataModel {
    pub fn irrep_names(&self) -> Vec<String> {
        if let Some(t) = &self.table {
            t.irreps().iter().map(|i| i.name.clone()).collect()
        } else {
            self.opaque_irreps.clone().unwrap_or_default()
        }
    }
}

/// The equivariant Euler characteristic of the model for one irreducible:
/// chi^rho(G/H_pr) chi(G\M, sing) + sum_j chi^rho(G/G_j, L_j) chi_rel_j.
pub fn equivariant_euler(model: &StrataModel, rho_name: &str) -> Result<i64> {
    let lookup_opaque = |tbl: &Option<BTreeMap<String, i64>>, what: &str| -> Result<i64> {
        tbl.as_ref()
            .and_then(|t| t.get(rho_name).copied())
            .ok_or_else(|| {
                Error::Structural(format!("missing chi table entry for ({what}, {rho_name})"))
            })
    };
    let principal = match (&model.table, &model.principal_isotropy) {
        (Some(tg), Some(iso)) => {
            let rho = tg.index_of(rho_name)?;
            chi_rho_homogeneous(tg, &iso.table, &iso.embedding, iso.orientation, rho)?
        }
        _ => lookup_opaque(&model.principal_chi, "principal")?,
    };
    let mut total = principal * model.chi_principal_rel;
    for s in &model.strata {
        let contrib = match (&model.table, &s.isotropy) {
            (Some(tg), Some(iso)) => {
                let rho = tg.index_of(rho_name)?;
                chi_rho_homogeneous(tg, &iso.table, &iso.embedding, iso.orientation, rho)?
            }
            _ => lookup_opaque(&s.chi_table, &s.id)?,
        };
        total += contrib * s.chi_quotient_rel;
    }
    Ok(total)
}

/// All equivariant Euler characteristics, keyed by irreducible name.
pub fn equivariant_euler_all(model: &StrataModel) -> Result<BTreeMap<String, i64>> {
    model
        .irrep_names()
        .iter()
        .map(|name| equivariant_euler(model, name).map(|v| (name.clone(), v)))
        .collect()
}

// ---------------------------------------------------------------------------
// stratum beta terms

/// Per-sigma eta/h data feeding a single-orbit stratum contribution.
#[derive(Clone, Debug)]
pub struct StratumBetaInput {
    pub rho: usize,
    /// sigma index -> (eta, h) of the induced spherical operator on that
    /// isotropy type
    pub eta_h: BTreeMap<usize, (Rat, Rat)>,
}

/// beta(Sigma) = 1/(2 dim V_rho) sum_sigma (n_sigma^rho / dim W_sigma)
/// (-eta(sigma) + h(sigma)) for a single-orbit stratum with isotropy H.
pub fn stratum_beta(
    table_g: &CharacterTable,
    table_h: &CharacterTable,
    embedding: &[usize],
    input: &StratumBetaInput,
) -> Result<Rat> {
    let mults = rep::restriction_multiplicities(table_g, table_h, embedding, input.rho)?;
    let mut acc = Rat::zero();
    for (sigma, &n) in mults.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let (eta, h) = input.eta_h.get(&sigma).ok_or_else(|| {
            Error::Structural(format!(
                "missing (eta, h) for isotropy type {}",
                table_h.name(sigma)
            ))
        })?;
        let w = rat_i64(table_h.degree(sigma) as i64);
        acc += rat_i64(n as i64) / w * (h - eta);
    }
    Ok(acc / rat_i64(2 * table_g.degree(input.rho) as i64))
}

/// The general-stratum coefficient of Theorem-level assembly: the factor
/// multiplying a user-supplied integral for one fine component, namely
/// (1/(2 dim V_rho)) (1/(n_b rank W^b)) (-eta + h).
pub fn beta_coefficient(
    dim_rho: usize,
    n_b: usize,
    rank_wb: usize,
    eta: &Rat,
    h: &Rat,
) -> Rat {
    (h - eta) / rat_i64(2 * dim_rho as i64) / rat_i64((n_b * rank_wb) as i64)
}

/// One decision of the dual-presence filter.
#[derive(Clone, Debug, Serialize)]
pub struct BetaFilterDecision {
    pub block: Vec<String>,
    pub retained: bool,
    pub reason: String,
}

/// Keep only the fine blocks containing an irreducible whose dual is present
/// in the operator's bundle over the stratum.
pub fn invariant_index_beta_filter(
    table_h: &CharacterTable,
    blocks: &[Vec<usize>],
    present: &[usize],
) -> Vec<BetaFilterDecision> {
    let duals: std::collections::BTreeSet<usize> =
        present.iter().map(|&s| table_h.dual(s)).collect();
    blocks
        .iter()
        .map(|block| {
            let hit = block.iter().find(|s| duals.contains(s));
            let names: Vec<String> =
                block.iter().map(|&s| table_h.name(s).to_string()).collect();
            match hit {
                Some(&s) => BetaFilterDecision {
                    block: names,
                    retained: true,
                    reason: format!(
                        "{} is dual to a representation present in the bundle",
                        table_h.name(s)
                    ),
                },
                None => BetaFilterDecision {
                    block: names,
                    retained: false,
                    reason: "no dual of a present representation meets this block".into(),
                },
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// lens-space cotangent sum

/// cot(pi a / b) as an exact cyclotomic number (requires sin != 0).
pub fn cot_exact(a: i64, b: i64) -> Cyc {
    // cot(theta) = i (e^{i theta} + e^{-i theta}) / (e^{i theta} - e^{-i theta})
    let z = Cyc::root_of_unity((2 * b) as u32, a);
    let zb = z.conj();
    Cyc::i() * (z.clone() + zb.clone()) / (z - zb)
}

/// Outcome of the lens-space eta sum with its cross-checked evaluations.
#[derive(Clone, Debug, Serialize)]
pub struct LensEtaReport {
    pub p: u64,
    pub m: i64,
    pub n: i64,
    /// exact rational value of -(2/p) sum cot(q m pi / p) cot(q n pi / p)
    pub exact: String,
    pub value: f64,
    pub direct_sum: f64,
    pub paired_sum: f64,
}

/// The boundary-signature eta invariant of the lens space:
/// -(2/p) sum_{q=1}^{p-1} cot(q m pi / p) cot(q n pi / p), computed exactly
/// in Q(zeta_{2p}) (where the full sum is Galois-stable, hence rational) and
/// by two floating summation strategies.
pub fn lens_eta(p: u64, m: i64, n: i64) -> Result<LensEtaReport> {
    if p < 2 {
        return Err(Error::Domain("lens sum needs p >= 2".into()));
    }
    let pi64 = p as i64;
    if num_integer::gcd(m.rem_euclid(pi64), pi64) != 1 || num_integer::gcd(n.rem_euclid(pi64), pi64) != 1 {
        return Err(Error::Domain(format!(
            "m = {m} and n = {n} must be coprime to p = {p}"
        )));
    }
    // exact sum in the cyclotomic field
    let mut acc = Cyc::zero();
    for q in 1..pi64 {
        acc += cot_exact(q * m, pi64) * cot_exact(q * n, pi64);
    }
    let acc = acc.scale(&Rat::new((-2i64).into(), pi64.into()));
    let exact = acc.try_rat().ok_or_else(|| {
        Error::Oracle("lens cotangent sum did not reduce to a rational".into())
    })?;
    // direct float sum
    let cot = |x: f64| x.cos() / x.sin();
    let pi = std::f64::consts::PI;
    let mut direct = 0.0;
    for q in 1..pi64 {
        direct += cot(q as f64 * m as f64 * pi / p as f64) * cot(q as f64 * n as f64 * pi / p as f64);
    }
    direct *= -2.0 / p as f64;
    // paired q <-> p - q: the two terms are equal, halving the summation
    let mut paired = 0.0;
    let mut q = 1;
    while 2 * q < pi64 {
        paired += 2.0 * cot(q as f64 * m as f64 * pi / p as f64)
            * cot(q as f64 * n as f64 * pi / p as f64);
        q += 1;
    }
    if pi64 % 2 == 0 {
        let q = pi64 / 2;
        paired += cot(q as f64 * m as f64 * pi / p as f64) * cot(q as f64 * n as f64 * pi / p as f64);
    }
    paired *= -2.0 / p as f64;
    let value = crate::num::rat_to_f64(&exact);
    if (direct - paired).abs() > 1e-10 || (direct - value).abs() > 1e-8 {
        return Err(Error::Oracle(format!(
            "lens sum evaluations disagree: exact {value}, direct {direct}, paired {paired}"
        )));
    }
    Ok(LensEtaReport {
        p,
        m,
        n,
        exact: crate::num::rat_string(&exact),
        value,
        direct_sum: direct,
        paired_sum: paired,
    })
}

// ---------------------------------------------------------------------------
// model file format

/// Table builders usable in model files.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "builder", rename_all = "kebab-case")]
pub enum TableSpec {
    Trivial,
    Cyclic { n: usize },
    Dihedral { n: usize },
    Symmetric { n: usize },
}

pub fn build_table(spec: &TableSpec) -> CharacterTable {
    match spec {
        TableSpec::Trivial => chartable::cyclic_table(1),
        TableSpec::Cyclic { n } => chartable::cyclic_table(*n),
        TableSpec::Dihedral { n } => chartable::dihedral_table(*n),
        TableSpec::Symmetric { n } => chartable::symmetric_table(*n),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IsotropyFile {
    pub subgroup: TableSpec,
    pub embedding: Vec<usize>,
    /// "preserved" or the name of a +-1 character of the subgroup
    #[serde(default)]
    pub orientation: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StratumFile {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isotropy: Option<IsotropyFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<BTreeMap<String, i64>>,
    pub chi_quotient_rel: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StrataModelFile {
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreps: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principal_isotropy: Option<IsotropyFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principal_chi: Option<BTreeMap<String, i64>>,
    pub chi_principal_rel: i64,
    pub strata: Vec<StratumFile>,
}

fn isotropy_from_file(f: &IsotropyFile) -> Result<IsotropyData> {
    let table = build_table(&f.subgroup);
    let orientation = match f.orientation.as_deref() {
        None | Some("preserved") => None,
        Some(name) => Some(table.index_of(name)?),
    };
    Ok(IsotropyData { table, embedding: f.embedding.clone(), orientation })
}

pub fn model_from_json(text: &str) -> Result<StrataModel> {
    let file: StrataModelFile =
        serde_json::from_str(text).map_err(|e| Error::Io(format!("strata model parse: {e}")))?;
    model_from_file(&file)
}

pub fn model_from_file(file: &StrataModelFile) -> Result<StrataModel> {
    match file.mode.as_str() {
        "finite" => {
            let table = build_table(
                file.table
                    .as_ref()
                    .ok_or_else(|| Error::Structural("finite mode requires a table".into()))?,
            );
            let principal = isotropy_from_file(file.principal_isotropy.as_ref().ok_or_else(
                || Error::Structural("finite mode requires principal isotropy".into()),
            )?)?;
            table
                .group()
                .validate_embedding(principal.table.group(), &principal.embedding)?;
            let strata = file
                .strata
                .iter()
                .map(|s| {
                    let iso = isotropy_from_file(s.isotropy.as_ref().ok_or_else(|| {
                        Error::Structural(format!("stratum {} lacks isotropy data", s.id))
                    })?)?;
                    table.group().validate_embedding(iso.table.group(), &iso.embedding)?;
                    Ok(Stratum {
                        id: s.id.clone(),
                        isotropy: Some(iso),
                        chi_table: None,
                        chi_quotient_rel: s.chi_quotient_rel,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(StrataModel {
                table: Some(table),
                opaque_irreps: None,
                principal_isotropy: Some(principal),
                principal_chi: None,
                chi_principal_rel: file.chi_principal_rel,
                strata,
            })
        }
        "compact-opaque" => {
            let irreps = file
                .irreps
                .clone()
                .ok_or_else(|| Error::Structural("compact-opaque mode requires irrep labels".into()))?;
            let strata = file
                .strata
                .iter()
                .map(|s| {
                    Ok(Stratum {
                        id: s.id.clone(),
                        isotropy: None,
                        chi_table: Some(s.chi.clone().ok_or_else(|| {
                            Error::Structural(format!("stratum {} lacks a chi table", s.id))
                        })?),
                        chi_quotient_rel: s.chi_quotient_rel,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(StrataModel {
                table: None,
                opaque_irreps: Some(irreps),
                principal_isotropy: None,
                principal_chi: Some(file.principal_chi.clone().ok_or_else(|| {
                    Error::Structural("compact-opaque mode requires principal chi".into())
                })?),
                chi_principal_rel: file.chi_principal_rel,
                strata,
            })
        }
        other => Err(Error::Structural(format!("unknown strata mode {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::cyclic_table;
    use crate::num::rat_frac;

    #[test]
    fn chi_rho_values_for_torus_strata() {
        let z4 = cyclic_table(4);
        // H = Z4: 1 iff rho = rho0
        let full: Vec<usize> = (0..4).collect();
        for rho in 0..4 {
            let v = chi_rho_homogeneous(&z4, &z4, &full, None, rho).unwrap();
            assert_eq!(v, if rho == 0 { 1 } else { 0 });
        }
        // H = Z2 inside Z4: 1 iff rho in {rho0, rho2}
        let z2 = cyclic_table(2);
        for rho in 0..4 {
            let v = chi_rho_homogeneous(&z4, &z2, &[0, 2], None, rho).unwrap();
            assert_eq!(v, if rho % 2 == 0 { 1 } else { 0 });
        }
        // trivial subgroup: dim V_rho
        let triv = cyclic_table(1);
        for rho in 0..4 {
            let v = chi_rho_homogeneous(&z4, &triv, &[0], None, rho).unwrap();
            assert_eq!(v, 1);
        }
    }

    fn torus_model() -> StrataModel {
        let text = r#"{
            "mode": "finite",
            "table": {"builder": "cyclic", "n": 4},
            "principal_isotropy": {"subgroup": {"builder": "trivial"}, "embedding": [0]},
            "chi_principal_rel": -1,
            "strata": [
                {"id": "a1", "isotropy": {"subgroup": {"builder": "cyclic", "n": 4}, "embedding": [0, 1, 2, 3]}, "chi_quotient_rel": 1},
                {"id": "a2", "isotropy": {"subgroup": {"builder": "cyclic", "n": 2}, "embedding": [0, 2]}, "chi_quotient_rel": 1},
                {"id": "a3", "isotropy": {"subgroup": {"builder": "cyclic", "n": 4}, "embedding": [0, 1, 2, 3]}, "chi_quotient_rel": 1}
            ]
        }"#;
        model_from_json(text).unwrap()
    }

    #[test]
    fn torus_euler_characteristics() {
        let model = torus_model();
        let chi = equivariant_euler_all(&model).unwrap();
        assert_eq!(chi["chi0"], 2);
        assert_eq!(chi["chi1"], -1);
        assert_eq!(chi["chi2"], 0);
        assert_eq!(chi["chi3"], -1);
    }

    #[test]
    fn sphere_compact_opaque_model() {
        for n in 2..=5usize {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let prev_sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            let text = format!(
                r#"{{
                "mode": "compact-opaque",
                "irreps": ["rho0", "xi"],
                "principal_chi": {{"rho0": 1, "xi": {prev_sign}}},
                "chi_principal_rel": -1,
                "strata": [
                    {{"id": "north", "chi": {{"rho0": 1, "xi": 0}}, "chi_quotient_rel": 1}},
                    {{"id": "south", "chi": {{"rho0": 1, "xi": 0}}, "chi_quotient_rel": 1}}
                ]
            }}"#
            );
            let model = model_from_json(&text).unwrap();
            let chi = equivariant_euler_all(&model).unwrap();
            assert_eq!(chi["rho0"], 1, "n = {n}");
            assert_eq!(chi["xi"], sign, "n = {n}");
        }
    }

    #[test]
    fn antipodal_model_parity() {
        for n in 2..=5usize {
            let chi_rpn = if n % 2 == 0 { 1 } else { 0 };
            let text = format!(
                r#"{{
                "mode": "finite",
                "table": {{"builder": "cyclic", "n": 2}},
                "principal_isotropy": {{"subgroup": {{"builder": "trivial"}}, "embedding": [0]}},
                "chi_principal_rel": {chi_rpn},
                "strata": []
            }}"#
            );
            let model = model_from_json(&text).unwrap();
            let chi = equivariant_euler_all(&model).unwrap();
            let expect = if n % 2 == 0 { 1 } else { 0 };
            assert_eq!(chi["chi0"], expect);
            assert_eq!(chi["chi1"], expect);
        }
    }

    #[test]
    fn beta_reduces_to_arithmetic() {
        // Z2 isotropy inside Z2 (H = G), rho0; eta(triv) = -1, h(triv) = 1
        let z2 = cyclic_table(2);
        let emb = vec![0usize, 1];
        let mut eta_h = BTreeMap::new();
        eta_h.insert(0usize, (rat_i64(-1), rat_i64(1)));
        eta_h.insert(1usize, (rat_i64(0), rat_i64(0)));
        let input = StratumBetaInput { rho: 0, eta_h };
        let beta = stratum_beta(&z2, &z2, &emb, &input).unwrap();
        assert_eq!(beta, rat_i64(1));
    }

    #[test]
    fn beta_algebraic_identity() {
        // all eta = 0, h(sigma) = dim W_sigma * c: beta = c (sum n) / (2 dim V_rho)
        let s3 = crate::chartable::symmetric_table(3);
        let z3 = cyclic_table(3);
        let s3g = crate::group::symmetric(3);
        let three_cycles: Vec<usize> = (0..6).filter(|&g| s3g.element_order(g) == 3).collect();
        let c0 = three_cycles[0];
        let emb = vec![0, c0, s3g.mul(c0, c0)];
        let c = rat_i64(5);
        let mut eta_h = BTreeMap::new();
        for sigma in 0..3 {
            eta_h.insert(sigma, (rat_i64(0), c.clone() * rat_i64(z3.degree(sigma) as i64)));
        }
        // rho = std (2-dim): restriction is omega + omega-bar, n = (0,1,1)
        let input = StratumBetaInput { rho: 2, eta_h };
        let beta = stratum_beta(&s3, &z3, &emb, &input).unwrap();
        assert_eq!(beta, c * rat_i64(2) / rat_i64(2 * 2));
    }

    #[test]
    fn de_rham_beta_is_one_for_preserved_orientation() {
        // h(triv) = 2, eta = 0, single trivial sigma: beta = 1
        let triv = cyclic_table(1);
        let z4 = cyclic_table(4);
        let emb: Vec<usize> = (0..4).collect();
        let mut eta_h = BTreeMap::new();
        eta_h.insert(0usize, (rat_i64(0), rat_i64(2)));
        for s in 1..4 {
            eta_h.insert(s, (rat_i64(0), rat_i64(0)));
        }
        let input = StratumBetaInput { rho: 0, eta_h };
        let beta = stratum_beta(&z4, &z4, &emb, &input).unwrap();
        assert_eq!(beta, rat_i64(1));
        let _ = triv;
    }

    #[test]
    fn beta_filter_dual_presence() {
        let z4 = cyclic_table(4);
        let blocks: Vec<Vec<usize>> = vec![vec![0], vec![1], vec![2], vec![3]];
        // bundle contains chi1; its dual is chi3
        let decisions = invariant_index_beta_filter(&z4, &blocks, &[1]);
        let retained: Vec<bool> = decisions.iter().map(|d| d.retained).collect();
        assert_eq!(retained, vec![false, false, false, true]);
        // trivial-only bundle keeps only the trivial block
        let decisions = invariant_index_beta_filter(&z4, &blocks, &[0]);
        assert!(decisions[0].retained);
        assert!(!decisions[1].retained);
        // empty presence list: nothing retained
        let decisions = invariant_index_beta_filter(&z4, &blocks, &[]);
        assert!(decisions.iter().all(|d| !d.retained));
    }

    #[test]
    fn lens_eta_small_values() {
        let r = lens_eta(3, 1, 1).unwrap();
        assert_eq!(r.exact, "-4/9");
        assert!((r.value + 4.0 / 9.0).abs() < 1e-12);
        // p = 2: the single cotangent term vanishes
        let r = lens_eta(2, 1, 1).unwrap();
        assert_eq!(r.exact, "0");
    }

    #[test]
    fn lens_eta_symmetries() {
        for p in [3u64, 5, 7, 12, 25, 50] {
            let coprime: Vec<i64> = (1..p as i64)
                .filter(|&m| num_integer::gcd(m, p as i64) == 1)
                .collect();
            let m = coprime[0];
            let n = *coprime.last().unwrap();
            let a = lens_eta(p, m, n).unwrap();
            let b = lens_eta(p, n, m).unwrap();
            assert_eq!(a.exact, b.exact, "p = {p}");
            // m -> m + p
            let c = lens_eta(p, m + p as i64, n).unwrap();
            assert_eq!(a.exact, c.exact);
            // (m, n) -> (-m, -n)
            let d = lens_eta(p, -m, -n).unwrap();
            assert_eq!(a.exact, d.exact);
        }
    }

    #[test]
    fn lens_eta_rejects_non_coprime() {
        assert!(lens_eta(6, 2, 1).is_err());
        assert!(lens_eta(1, 1, 1).is_err());
    }

    #[test]
    fn cot_exact_values() {
        // cot(pi/4) = 1
        assert_eq!(cot_exact(1, 4).try_rat().unwrap(), rat_i64(1));
        // cot(pi/3)^2 = 1/3
        let c = cot_exact(1, 3);
        assert_eq!((c.clone() * c).try_rat().unwrap(), rat_frac(1, 3));
        // cot(pi/2) = 0
        assert!(cot_exact(1, 2).is_zero());
    }

    use crate::num::rat_i64;
}
