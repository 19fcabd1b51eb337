//! The bundled fixture corpus: the symbols, rotation actions, strata models
//! and fine-decomposition data used by the verification suite and exposed
//! through the CLI under `fixture:<name>` paths.

use crate::action::GroupAction;
use crate::assembly::{model_from_json, StrataModel};
use crate::chartable::{self, CharacterTable};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group;
use crate::linalg::CycMat;
use crate::num::Rat;
use crate::operator::{de_rham_symbol, CliffordSymbol};

/// The Cauchy-Riemann symbol on R^2: A = (1, i), d = 1.
pub fn cauchy_riemann() -> CliffordSymbol {
    let a1 = CycMat::from_rows(vec![vec![Cyc::one()]]);
    let a2 = CycMat::from_rows(vec![vec![Cyc::i()]]);
    CliffordSymbol::new_exact(vec![a1, a2]).expect("Cauchy-Riemann symbol")
}

/// The Pauli symbol on R^3: A = (sigma_1, sigma_2, sigma_3), d = 2.
pub fn pauli() -> CliffordSymbol {
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
    CliffordSymbol::new_exact(vec![s1, s2, s3]).expect("Pauli symbol")
}

/// Z_p acting on the Cauchy-Riemann symbol by rotations, with fiber
/// character chi_c on C^{d+}; equivariance forces chi_{c+1} on C^{d-}.
pub fn cr_rotation_action(p: usize, c: i64) -> GroupAction {
    let group = group::cyclic(p);
    let sym = cauchy_riemann();
    let r: Vec<CycMat> = (0..p)
        .map(|a| chartable::rotation_matrix(p, a as i64))
        .collect();
    let u = |cc: i64| -> Vec<CycMat> {
        (0..p)
            .map(|a| CycMat::from_rows(vec![vec![Cyc::root_of_unity(p as u32, cc * a as i64)]]))
            .collect()
    };
    GroupAction::new(group, sym, r, u(c), u(c + 1)).expect("rotation action")
}

/// The same rotation action on a rotated copy of the symbol: A_j(t) =
/// sum_l O(t)_{lj} A_l with O(t) the rational rotation with tangent
/// parameter t. Exercises homotopy stability of the spectral data.
pub fn cr_rotation_action_rotated(p: usize, c: i64, t: &Rat) -> GroupAction {
    let group = group::cyclic(p);
    let base = cauchy_riemann();
    let amats = base.exact_matrices().expect("exact").to_vec();
    let one = Rat::new(1.into(), 1.into());
    let denom = &one + t * t;
    let cos = Cyc::from_rat((&one - t * t) / &denom);
    let sin = Cyc::from_rat((t + t) / denom);
    // columns of O: A_1' = cos A_1 + sin A_2, A_2' = -sin A_1 + cos A_2
    let a1 = amats[0].scale(&cos).add(&amats[1].scale(&sin));
    let a2 = amats[0].scale(&(-sin.clone())).add(&amats[1].scale(&cos));
    let sym = CliffordSymbol::new_exact(vec![a1, a2]).expect("rotated symbol");
    let r: Vec<CycMat> = (0..p)
        .map(|a| chartable::rotation_matrix(p, a as i64))
        .collect();
    let u = |cc: i64| -> Vec<CycMat> {
        (0..p)
            .map(|a| CycMat::from_rows(vec![vec![Cyc::root_of_unity(p as u32, cc * a as i64)]]))
            .collect()
    };
    GroupAction::new(group, sym, r, u(c), u(c + 1)).expect("rotated action")
}

/// Z_2 acting antipodally on R^k over the de Rham symbol: +1 on even forms,
/// -1 on odd forms.
pub fn de_rham_antipodal(k: usize) -> GroupAction {
    let sym = de_rham_symbol(k).expect("de Rham symbol");
    let d = sym.d();
    let group = group::cyclic(2);
    let r = vec![
        CycMat::identity(k),
        CycMat::identity(k).scale(&Cyc::from_i64(-1)),
    ];
    let up = vec![CycMat::identity(d), CycMat::identity(d)];
    let um = vec![
        CycMat::identity(d),
        CycMat::identity(d).scale(&Cyc::from_i64(-1)),
    ];
    GroupAction::new(group, sym, r, up, um).expect("antipodal action")
}

/// The quarter-turn action on the flat torus: three singular points with
/// isotropy Z4, Z2, Z4 over the sphere quotient.
pub fn torus_z4_model() -> StrataModel {
    model_from_json(TORUS_Z4_JSON).expect("torus model")
}

pub const TORUS_Z4_JSON: &str = r#"{
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

/// Latitude-sphere action on S^n in compact-opaque mode: two polar strata,
/// chi tables as in the worked example.
pub fn sphere_on_model(n: usize) -> StrataModel {
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
    model_from_json(&text).expect("sphere model")
}

/// Free antipodal action on S^n: no singular strata; the relative Euler
/// number of the quotient is chi(RP^n).
pub fn antipodal_sphere_model(n: usize) -> StrataModel {
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
    model_from_json(&text).expect("antipodal model")
}

/// S3 with its rotation subgroup Z3: the fine decomposition pairs the two
/// nontrivial characters under normalizer conjugation.
pub fn s3_z3_fine() -> (CharacterTable, CharacterTable, Vec<usize>) {
    let s3 = chartable::symmetric_table(3);
    let z3 = chartable::cyclic_table(3);
    let g = group::symmetric(3);
    let three_cycle = (0..6).find(|&x| g.element_order(x) == 3).expect("3-cycle");
    let emb = vec![0, three_cycle, g.mul(three_cycle, three_cycle)];
    (s3, z3, emb)
}

/// What a fixture is, for dispatching CLI jobs.
pub enum FixtureData {
    Symbol(CliffordSymbol),
    Action { action: GroupAction, table: CharacterTable },
    Strata(StrataModel),
    FineDecomposition {
        table_g: CharacterTable,
        table_h: CharacterTable,
        embedding: Vec<usize>,
    },
}

pub struct FixtureInfo {
    pub name: &'static str,
    pub kind: &'static str,
    pub description: &'static str,
}

pub const FIXTURES: &[FixtureInfo] = &[
    FixtureInfo { name: "cauchy-riemann", kind: "symbol", description: "d_x + i d_y on R^2, d = 1" },
    FixtureInfo { name: "pauli", kind: "symbol", description: "Pauli matrices on R^3, d = 2" },
    FixtureInfo { name: "de-rham-k1", kind: "symbol", description: "exterior symbol on R^1 (codimension-one convention)" },
    FixtureInfo { name: "de-rham-k2", kind: "symbol", description: "exterior symbol on R^2, d = 2" },
    FixtureInfo { name: "de-rham-k3", kind: "symbol", description: "exterior symbol on R^3, d = 4" },
    FixtureInfo { name: "de-rham-k4", kind: "symbol", description: "exterior symbol on R^4, d = 8" },
    FixtureInfo { name: "cr-z2-rot", kind: "action", description: "Z2 rotation (antipodal) on Cauchy-Riemann, trivial fiber" },
    FixtureInfo { name: "cr-z3-rot-f0", kind: "action", description: "Z3 rotations on Cauchy-Riemann, fiber chi0" },
    FixtureInfo { name: "cr-z3-rot-f1", kind: "action", description: "Z3 rotations on Cauchy-Riemann, fiber chi1" },
    FixtureInfo { name: "cr-z4-rot-f1", kind: "action", description: "Z4 rotations on Cauchy-Riemann, fiber chi1" },
    FixtureInfo { name: "cr-z5-rot-f2", kind: "action", description: "Z5 rotations on Cauchy-Riemann, fiber chi2" },
    FixtureInfo { name: "derham-k2-antipodal", kind: "action", description: "antipodal Z2 on the k=2 exterior symbol" },
    FixtureInfo { name: "derham-k3-antipodal", kind: "action", description: "antipodal Z2 on the k=3 exterior symbol" },
    FixtureInfo { name: "derham-k4-antipodal", kind: "action", description: "antipodal Z2 on the k=4 exterior symbol" },
    FixtureInfo { name: "torus-z4", kind: "strata", description: "quarter-turn on the flat torus, three singular points" },
    FixtureInfo { name: "sphere-on-n2", kind: "strata", description: "latitude spheres on S^2, compact-opaque tables" },
    FixtureInfo { name: "sphere-on-n3", kind: "strata", description: "latitude spheres on S^3, compact-opaque tables" },
    FixtureInfo { name: "sphere-on-n4", kind: "strata", description: "latitude spheres on S^4, compact-opaque tables" },
    FixtureInfo { name: "sphere-on-n5", kind: "strata", description: "latitude spheres on S^5, compact-opaque tables" },
    FixtureInfo { name: "antipodal-s2", kind: "strata", description: "free antipodal action on S^2" },
    FixtureInfo { name: "antipodal-s3", kind: "strata", description: "free antipodal action on S^3" },
    FixtureInfo { name: "s3-z3-fine", kind: "fine", description: "S3 over Z3: fine partition {triv}, {omega, omega-bar}" },
];

pub fn load(name: &str) -> Result<FixtureData> {
    let data = match name {
        "cauchy-riemann" => FixtureData::Symbol(cauchy_riemann()),
        "pauli" => FixtureData::Symbol(pauli()),
        "de-rham-k1" => FixtureData::Symbol(de_rham_symbol(1)?),
        "de-rham-k2" => FixtureData::Symbol(de_rham_symbol(2)?),
        "de-rham-k3" => FixtureData::Symbol(de_rham_symbol(3)?),
        "de-rham-k4" => FixtureData::Symbol(de_rham_symbol(4)?),
        "cr-z2-rot" => FixtureData::Action {
            action: cr_rotation_action(2, 0),
            table: chartable::cyclic_table(2),
        },
        "cr-z3-rot-f0" => FixtureData::Action {
            action: cr_rotation_action(3, 0),
            table: chartable::cyclic_table(3),
        },
        "cr-z3-rot-f1" => FixtureData::Action {
            action: cr_rotation_action(3, 1),
            table: chartable::cyclic_table(3),
        },
        "cr-z4-rot-f1" => FixtureData::Action {
            action: cr_rotation_action(4, 1),
            table: chartable::cyclic_table(4),
        },
        "cr-z5-rot-f2" => FixtureData::Action {
            action: cr_rotation_action(5, 2),
            table: chartable::cyclic_table(5),
        },
        "derham-k2-antipodal" => FixtureData::Action {
            action: de_rham_antipodal(2),
            table: chartable::cyclic_table(2),
        },
        "derham-k3-antipodal" => FixtureData::Action {
            action: de_rham_antipodal(3),
            table: chartable::cyclic_table(2),
        },
        "derham-k4-antipodal" => FixtureData::Action {
            action: de_rham_antipodal(4),
            table: chartable::cyclic_table(2),
        },
        "torus-z4" => FixtureData::Strata(torus_z4_model()),
        "sphere-on-n2" => FixtureData::Strata(sphere_on_model(2)),
        "sphere-on-n3" => FixtureData::Strata(sphere_on_model(3)),
        "sphere-on-n4" => FixtureData::Strata(sphere_on_model(4)),
        "sphere-on-n5" => FixtureData::Strata(sphere_on_model(5)),
        "antipodal-s2" => FixtureData::Strata(antipodal_sphere_model(2)),
        "antipodal-s3" => FixtureData::Strata(antipodal_sphere_model(3)),
        "s3-z3-fine" => {
            let (table_g, table_h, embedding) = s3_z3_fine();
            FixtureData::FineDecomposition { table_g, table_h, embedding }
        }
        _ => return Err(Error::Structural(format!("unknown fixture {name:?}"))),
    };
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_loads() {
        assert!(FIXTURES.len() >= 9);
        for f in FIXTURES {
            assert!(load(f.name).is_ok(), "fixture {} fails to load", f.name);
        }
    }

    #[test]
    fn rotated_family_is_equivariant_for_each_parameter() {
        use crate::num::rat_frac;
        for t in [rat_frac(0, 1), rat_frac(1, 2), rat_frac(1, 1), rat_frac(2, 1), rat_frac(1, 3)] {
            let act = cr_rotation_action_rotated(4, 1, &t);
            assert_eq!(act.group().order(), 4);
        }
    }
}
