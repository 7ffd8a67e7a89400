//! Infinitesimal actions of rotors on `(x, φ, ψ)`, compared against the
//! tabulated coefficients.
//!
//! A generator is the 8×8 matrix `G` with `d(v_a)/dθ |₀ = Σ_b G[a][b] v_b`,
//! estimated by central differences of the closed-form rotors.

use serde::Serialize;

use crate::clifford::{rotate_vector, Metric, Rotor, Vector8};
use crate::report::{IdentityCheck, VerificationReport};

pub type Block = [[f64; 8]; 8];

pub const FD_STEP: f64 = 1e-6;
pub const FD_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Generators {
    pub vector: Block,
    pub phi: Block,
    pub psi: Block,
}

/// Central-difference generators of the one-parameter family `r(θ)`.
pub fn generators(r: impl Fn(f64) -> Rotor, h: f64) -> Generators {
    let (plus, minus) = (r(h), r(-h));
    let mut vector = [[0.0; 8]; 8];
    for b in 0..8 {
        let e = Vector8::basis(b);
        let (vp, vm) = (rotate_vector(&e, &plus), rotate_vector(&e, &minus));
        for a in 0..8 {
            vector[a][b] = (vp.x[a] - vm.x[a]) / (2.0 * h);
        }
    }
    let block = |off: usize| -> Block {
        let (sp, sm) = (plus.spinor_matrix(), minus.spinor_matrix());
        std::array::from_fn(|a| {
            std::array::from_fn(|b| (sp[(a + off, b + off)].re - sm[(a + off, b + off)].re) / (2.0 * h))
        })
    };
    Generators { vector, phi: block(0), psi: block(8) }
}

/// `L₁₀(θ/2)L₂₃(θ/2)L₅₄(θ/2)L₆₇(θ/2)`.
pub fn triality_rotor(theta: f64) -> Rotor {
    let h = 0.5 * theta;
    Rotor::word(&[(1, 0, h), (2, 3, h), (5, 4, h), (6, 7, h)]).expect("fixed planes are valid")
}

/// Sparse coefficient table: `(row, column, coefficient)`; unlisted entries are zero.
pub type Coefficients = &'static [(usize, usize, f64)];

/// Tabulated infinitesimal action of one rotor family on `(x, φ, ψ)`.
#[derive(Clone, Copy, Debug)]
pub struct GeneratorTable {
    pub name: &'static str,
    pub vector: Coefficients,
    pub phi: Coefficients,
    pub psi: Coefficients,
}

const ROT_01: Coefficients = &[(0, 1, -1.0), (1, 0, 1.0)];
const HALF_PHI_01: Coefficients = &[
    (0, 1, 0.5), (1, 0, -0.5), (2, 3, -0.5), (3, 2, 0.5),
    (4, 5, -0.5), (5, 4, 0.5), (6, 7, 0.5), (7, 6, -0.5),
];
const HALF_PSI_01: Coefficients = &[
    (0, 1, 0.5), (1, 0, -0.5), (2, 3, 0.5), (3, 2, -0.5),
    (4, 5, 0.5), (5, 4, -0.5), (6, 7, -0.5), (7, 6, 0.5),
];

/// `L₀₁(θ)`.
pub const L01_TABLE: GeneratorTable = GeneratorTable {
    name: "L01",
    vector: ROT_01,
    phi: HALF_PHI_01,
    psi: HALF_PSI_01,
};

/// `L₀₄(θ)`.
pub const L04_TABLE: GeneratorTable = GeneratorTable {
    name: "L04",
    vector: &[(0, 4, 1.0), (4, 0, 1.0)],
    phi: &[
        (0, 4, -0.5), (1, 5, -0.5), (2, 6, -0.5), (3, 7, -0.5),
        (4, 0, -0.5), (5, 1, -0.5), (6, 2, -0.5), (7, 3, -0.5),
    ],
    psi: &[
        (0, 4, -0.5), (1, 5, 0.5), (2, 6, 0.5), (3, 7, 0.5),
        (4, 0, -0.5), (5, 1, 0.5), (6, 2, 0.5), (7, 3, 0.5),
    ],
};

/// The composite triality rotor: `x` moves like `φ` under `L₀₁`, `φ` like
/// `ψ` under `L₀₁`, and `ψ` rotates at full angle in its (0,1) plane.
pub const TRIALITY_TABLE: GeneratorTable = GeneratorTable {
    name: "L10·L23·L54·L67 (half angles)",
    vector: HALF_PHI_01,
    phi: HALF_PSI_01,
    psi: ROT_01,
};

pub fn dense(c: Coefficients) -> Block {
    let mut m = [[0.0; 8]; 8];
    for &(r, col, v) in c {
        m[r][col] = v;
    }
    m
}

fn symbol(part: &str) -> &'static str {
    match part {
        "x" => "x",
        "phi" => "φ",
        _ => "ψ",
    }
}

/// One case per table row (8 per object, 24 total), each compared across all
/// eight columns.
fn compare_rows(check: &mut IdentityCheck, part: &str, got: &Block, want: &Block, tol: f64) {
    for a in 0..8 {
        let residual = (0..8).map(|b| (got[a][b] - want[a][b]).abs()).fold(0.0, f64::max);
        check.record(residual <= tol, residual, || {
            format!("{}{a}': computed {:?}, tabulated {:?}", symbol(part), got[a], want[a])
        });
    }
}

/// Compares a rotor family's finite-difference generators against a table.
pub fn table_check(table: &GeneratorTable, r: impl Fn(f64) -> Rotor, tol: f64) -> IdentityCheck {
    let g = generators(r, FD_STEP);
    let mut check = IdentityCheck::new(format!("{} infinitesimal table", table.name));
    compare_rows(&mut check, "x", &g.vector, &dense(table.vector), tol);
    compare_rows(&mut check, "phi", &g.phi, &dense(table.phi), tol);
    compare_rows(&mut check, "psi", &g.psi, &dense(table.psi), tol);
    check
}

/// Unordered index pairs `(a, b)` with a nonzero generator entry.
pub fn coupled_planes(g: &Block) -> Vec<(usize, usize)> {
    let mut planes = Vec::new();
    for a in 0..8 {
        for b in a + 1..8 {
            if g[a][b].abs() > 1e-6 || g[b][a].abs() > 1e-6 {
                planes.push((a, b));
            }
        }
    }
    planes
}

fn fmt_planes(p: &[(usize, usize)]) -> String {
    p.iter().map(|(a, b)| format!("Γ{a}Γ{b}")).collect::<Vec<_>>().join(", ")
}

/// The `L₀₁` table against finite differences.
pub fn rotation_table_check() -> VerificationReport {
    let mut report = VerificationReport::new("rotation table", false);
    report.push(table_check(&L01_TABLE, |t| Rotor::plane(0, 1, t).unwrap(), FD_TOLERANCE));
    report
}

/// The `L₀₄` boost: infinitesimal table, the planes its spinor generators
/// couple, and the finite transformation at rapidity `theta`.
pub fn boost_table_check(theta: f64) -> VerificationReport {
    let boost = |t: f64| Rotor::plane(0, 4, t).expect("valid plane");
    let mut report = VerificationReport::new("boost table", false);
    report.push(table_check(&L04_TABLE, boost, FD_TOLERANCE));

    let g = generators(boost, FD_STEP);
    let mut planes = IdentityCheck::new("spinor generators couple exactly four isotropic planes");
    for (name, block) in [("φ", &g.phi), ("ψ", &g.psi)] {
        let p = coupled_planes(block);
        let isotropic = p.iter().all(|&(a, b)| !Metric::SPLIT.is_compact(a, b));
        let disjoint = {
            let mut idx: Vec<_> = p.iter().flat_map(|&(a, b)| [a, b]).collect();
            idx.sort_unstable();
            idx.dedup();
            idx.len() == 2 * p.len()
        };
        planes.record(p.len() == 4 && isotropic && disjoint, 0.0, || {
            format!("{name}: {}", fmt_planes(&p))
        });
        report.note(format!("{name} boost planes: {}", fmt_planes(&p)));
    }
    report.push(planes);

    // Finite boost: vectors by the hyperbolic display, spinors by exp of the
    // tabulated generator, exp(θG) = cosh(θ/2) + 2 sinh(θ/2) G since (2G)² = 1.
    let r = boost(theta);
    let (ch, sh) = (theta.cosh(), theta.sinh());
    let mut finite = IdentityCheck::new(format!("finite L04({theta}) action"));
    for b in 0..8 {
        let got = rotate_vector(&Vector8::basis(b), &r);
        let mut want = Vector8::basis(b);
        if b == 0 || b == 4 {
            let other = 4 - b;
            want.x[b] = ch;
            want.x[other] = sh;
        }
        let res = got.max_abs_diff(&want) / ch;
        finite.record(res <= 1e-12, res, || format!("x = e{b}: {:?}", got.x));
    }
    let (ch2, sh2) = ((0.5 * theta).cosh(), (0.5 * theta).sinh());
    for (off, table) in [(0, L04_TABLE.phi), (8, L04_TABLE.psi)] {
        let g = dense(table);
        for a in 0..8 {
            let residual = (0..8)
                .map(|b| {
                    let want = if a == b { ch2 } else { 0.0 } + 2.0 * sh2 * g[a][b];
                    (r.spinor_matrix()[(a + off, b + off)].re - want).abs()
                })
                .fold(0.0, f64::max)
                / ch2;
            finite.record(residual <= 1e-12, residual, || {
                format!("{}{a}' at finite rapidity", if off == 0 { "φ" } else { "ψ" })
            });
        }
    }
    report.push(finite);
    report
}

/// The composite rotor swaps roles: its generators on `(x, φ, ψ)` are the
/// `L₀₁` generators on `(φ, ψ, —)` and a full-angle (0,1) rotation on ψ.
pub fn role_swap_check() -> VerificationReport {
    let mut report = VerificationReport::new("role swap", false);
    report.push(table_check(&TRIALITY_TABLE, triality_rotor, FD_TOLERANCE));

    let tri = generators(triality_rotor, FD_STEP);
    let l01 = generators(|t| Rotor::plane(0, 1, t).unwrap(), FD_STEP);
    let mut swap = IdentityCheck::new("triality generator on x equals L01 generator on φ");
    compare_rows(&mut swap, "x", &tri.vector, &l01.phi, FD_TOLERANCE);
    report.push(swap);
    let mut swap2 = IdentityCheck::new("triality generator on φ equals L01 generator on ψ");
    compare_rows(&mut swap2, "phi", &tri.phi, &l01.psi, FD_TOLERANCE);
    report.push(swap2);
    let mut full = IdentityCheck::new("triality generator on ψ is a full-angle (0,1) rotation");
    compare_rows(&mut full, "psi", &tri.psi, &dense(ROT_01), FD_TOLERANCE);
    report.push(full);
    report
}

/// Every compact plane at `2π`: vectors fixed, spinors negated; at `4π` both fixed.
pub fn double_cover_check(tol: f64) -> VerificationReport {
    use std::f64::consts::PI;
    let mut check = IdentityCheck::new("compact rotors: 2π negates spinors and fixes vectors, 4π fixes both");
    for mu in 0..8 {
        for nu in 0..8 {
            if mu == nu || !Metric::SPLIT.is_compact(mu, nu) {
                continue;
            }
            for (turns, sign) in [(2.0, -1.0), (4.0, 1.0)] {
                let r = Rotor::plane(mu, nu, turns * PI).unwrap();
                let mut res = 0.0f64;
                for b in 0..8 {
                    let e = Vector8::basis(b);
                    res = res.max(rotate_vector(&e, &r).max_abs_diff(&e));
                }
                let s = r.spinor_matrix();
                for i in 0..16 {
                    for j in 0..16 {
                        let want = if i == j { sign } else { 0.0 };
                        res = res.max((s[(i, j)].re - want).abs()).max(s[(i, j)].im.abs());
                    }
                }
                check.record(res <= tol, res, || format!("L{mu}{nu}({turns}π)"));
            }
        }
    }
    let mut report = VerificationReport::new("double cover", false);
    report.push(check);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l01_table_matches() {
        let r = rotation_table_check();
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.cases, 24);
    }

    #[test]
    fn l04_table_and_planes() {
        let r = boost_table_check(0.7);
        assert!(r.passed(), "{r:#?}");
        assert!(r.notes.iter().all(|n| n.ends_with("Γ0Γ4, Γ1Γ5, Γ2Γ6, Γ3Γ7")), "{:?}", r.notes);
    }

    #[test]
    fn boost_at_zero_rapidity() {
        assert!(boost_table_check(0.0).passed());
    }

    #[test]
    fn role_swap() {
        let r = role_swap_check();
        assert!(r.passed(), "{r:#?}");
    }

    #[test]
    fn triality_rotor_at_zero_is_identity() {
        let r = triality_rotor(0.0);
        assert!((r.matrix() - &crate::clifford::Matrix16::identity()).is_negligible(0.0));
    }

    #[test]
    fn double_cover() {
        let r = double_cover_check(1e-12);
        assert!(r.passed(), "{r:#?}");
        // 24 ordered compact planes at two angles
        assert_eq!(r.cases, 48);
    }

    #[test]
    fn mistyped_table_is_caught() {
        // Printed "Γ3Γ6" instead of Γ3Γ7 would put the φ₃ coupling in column 6.
        const WRONG: GeneratorTable = GeneratorTable {
            name: "L04 with Γ3Γ6",
            vector: L04_TABLE.vector,
            phi: &[
                (0, 4, -0.5), (1, 5, -0.5), (2, 6, -0.5), (3, 6, -0.5),
                (4, 0, -0.5), (5, 1, -0.5), (6, 2, -0.5), (6, 3, -0.5),
            ],
            psi: L04_TABLE.psi,
        };
        let c = table_check(&WRONG, |t| Rotor::plane(0, 4, t).unwrap(), FD_TOLERANCE);
        assert_eq!(c.failures, 3);
    }
}
