//! Octonionic picture of `(x, φ, ψ)`: norms, the trilinear form
//! `−Φ̄·(XΨ)`, and the dictionary tying it to `φᵀB𝒳ψ`.

use std::sync::OnceLock;

use num_traits::Zero;
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::clifford::vector::square;
use crate::clifford::{
    rotate_spinor, rotate_vector, spinor_invariant, trilinear_matrix, Matrix16, Rotor, Spinor16,
    Vector8,
};
use crate::error::AlgebraError;
use crate::octonion::{inner, SplitOctonion, Unit};
use crate::report::{IdentityCheck, VerificationReport};
use crate::sample;
use crate::scalar::{Rational, Scalar};

/// Coefficient `k` of the octonion is component `k` of the 8-vector, in the
/// order `(1, j₁, j₂, j₃, I, J₁, J₂, J₃)`.
pub fn oct_from_components<T: Scalar>(c: &[T; 8]) -> SplitOctonion<T> {
    SplitOctonion::new(c.clone())
}

/// Vector and both chiral spinors as octonions.
#[derive(Clone, Debug, PartialEq)]
pub struct OctTriple<T> {
    pub x: SplitOctonion<T>,
    pub phi: SplitOctonion<T>,
    pub psi: SplitOctonion<T>,
}

impl<T: Scalar> OctTriple<T> {
    pub fn new(phi: &[T; 8], x: &[T; 8], psi: &[T; 8]) -> Self {
        Self {
            x: oct_from_components(x),
            phi: oct_from_components(phi),
            psi: oct_from_components(psi),
        }
    }
}

/// `ℱ(Φ, X, Ψ) = −Φ̄·(XΨ)`, with `·` the octonion inner product.
pub fn trilinear_oct<T: Scalar>(
    phi: &SplitOctonion<T>,
    x: &SplitOctonion<T>,
    psi: &SplitOctonion<T>,
) -> T {
    -inner(&phi.conj(), &(x * psi))
}

/// Scalar part of `X̄X`.
fn oct_norm<T: Scalar>(s: &SplitOctonion<T>) -> (T, bool) {
    let p = &s.conj() * s;
    let pure = p.coeffs()[1..].iter().all(|c| c.is_zero());
    (p.w().clone(), pure)
}

/// Quadratic invariants in both pictures on random integer inputs:
/// `X̄X = 𝒳²`, `Φ̄Φ = φᵀBφ`, `Ψ̄Ψ = ψᵀBψ`. Exact.
pub fn correspondence_check(n_samples: usize, seed: u64) -> VerificationReport {
    let mut rng = sample::rng(seed);
    let mut xc = IdentityCheck::new("conj(X) X = X² (vector)");
    let mut pc = IdentityCheck::new("conj(Φ) Φ = φᵀBφ");
    let mut sc = IdentityCheck::new("conj(Ψ) Ψ = ψᵀBψ");
    let one = Matrix16::<Rational>::identity();
    for _ in 0..n_samples {
        let (xi, fi, si) = (
            sample::int_components(&mut rng),
            sample::int_components(&mut rng),
            sample::int_components(&mut rng),
        );
        let (x, f, s) = (xi.map(Rational::from_int), fi.map(Rational::from_int), si.map(Rational::from_int));

        let (on, pure) = oct_norm(&oct_from_components(&x));
        let sq = square(&Vector8::new(x));
        let q = sq.trace().re * Rational::ratio(1, 16);
        let ok = pure && sq == one.scale_real(&q) && on == q;
        xc.record(ok, (on.clone() - q.clone()).abs_f64(), || format!("x = {xi:?}: {on} vs {q}"));

        let (on, pure) = oct_norm(&oct_from_components(&f));
        let m = spinor_invariant(&Spinor16::from_phi(f));
        pc.record(pure && on == m, (on.clone() - m.clone()).abs_f64(), || {
            format!("φ = {fi:?}: {on} vs {m}")
        });

        let (on, pure) = oct_norm(&oct_from_components(&s));
        let m = spinor_invariant(&Spinor16::from_psi(s));
        sc.record(pure && on == m, (on.clone() - m.clone()).abs_f64(), || {
            format!("ψ = {si:?}: {on} vs {m}")
        });
    }
    let mut report = VerificationReport::new("correspondence", true).with_seed(seed);
    for c in [xc, pc, sc] {
        report.push(c);
    }
    report
}

/// Where matrix-side component `a` lands on the octonion side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SlotEntry {
    pub index: usize,
    pub sign: i8,
}

fn serialize_exact<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.exact_string())
}

/// Signed-permutation dictionary on each slot plus a global scale:
/// `φᵀB𝒳ψ = scale · ℱ(Φ, X, Ψ)` with `Φ[phi[a].index] = phi[a].sign · φ_a`
/// (likewise for `x` and `ψ`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorrespondenceMap {
    pub phi: [SlotEntry; 8],
    pub x: [SlotEntry; 8],
    pub psi: [SlotEntry; 8],
    #[serde(serialize_with = "serialize_exact")]
    pub scale: Rational,
    /// Largest `|matrix − scale·octonion|` over the 512 basis triples.
    pub max_residual: f64,
}

impl CorrespondenceMap {
    fn apply<T: Scalar>(slot: &[SlotEntry; 8], c: &[T; 8]) -> SplitOctonion<T> {
        let mut out: [T; 8] = std::array::from_fn(|_| T::zero());
        for (a, e) in slot.iter().enumerate() {
            out[e.index] = c[a].clone() * T::from_int(e.sign.into());
        }
        SplitOctonion::new(out)
    }

    /// Octonion arguments matching matrix-side components.
    pub fn to_octonions<T: Scalar>(&self, phi: &[T; 8], x: &[T; 8], psi: &[T; 8]) -> OctTriple<T> {
        OctTriple {
            x: Self::apply(&self.x, x),
            phi: Self::apply(&self.phi, phi),
            psi: Self::apply(&self.psi, psi),
        }
    }

    /// `scale · ℱ(Φ, X, Ψ)` for matrix-side components.
    pub fn octonion_side(&self, phi: &[Rational; 8], x: &[Rational; 8], psi: &[Rational; 8]) -> Rational {
        let t = self.to_octonions(phi, x, psi);
        self.scale.clone() * trilinear_oct(&t.phi, &t.x, &t.psi)
    }

    pub fn is_identity(&self) -> bool {
        [&self.phi, &self.x, &self.psi]
            .iter()
            .all(|s| s.iter().enumerate().all(|(a, e)| e.index == a && e.sign == 1))
    }
}

/// Rank-3 tensor `T[a][b][c]` over 8×8×8 basis triples.
pub type Tensor = Vec<Rational>;

fn idx(a: usize, b: usize, c: usize) -> usize {
    64 * a + 8 * b + c
}

fn basis(a: usize) -> [Rational; 8] {
    std::array::from_fn(|k| Rational::from_int(i64::from(k == a)))
}

/// `φᵀB𝒳ψ` on all basis triples `(e_a, e_b, e_c)`.
pub fn matrix_tensor() -> Tensor {
    let mut t = vec![Rational::from_int(0); 512];
    for a in 0..8 {
        let phi = Spinor16::from_phi(basis(a));
        for b in 0..8 {
            let x = Vector8::new(basis(b));
            for c in 0..8 {
                let psi = Spinor16::from_psi(basis(c));
                t[idx(a, b, c)] = trilinear_matrix(&phi, &x, &psi).expect("chiral basis spinors");
            }
        }
    }
    t
}

/// `−Φ̄·(XΨ)` on all unit triples.
pub fn octonion_tensor() -> Tensor {
    let u = |k: usize| SplitOctonion::<Rational>::unit(Unit::ALL[k]);
    let mut t = vec![Rational::from_int(0); 512];
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                t[idx(a, b, c)] = trilinear_oct(&u(a), &u(b), &u(c));
            }
        }
    }
    t
}

/// Backtracking search for signed permutations `(π_s, σ_s)` on each slot and
/// a scale `λ` with `m[a][b][c] = λ σ₁(a)σ₂(b)σ₃(c) · o[π₁(a)][π₂(b)][π₃(c)]`.
///
/// Variables are assigned in the order `φ₀, x₀, ψ₀, φ₁, …`, and every
/// triple whose three indices are assigned is checked immediately. The
/// identity assignment is tried first in every slot.
struct Search<'a> {
    m: &'a Tensor,
    o: &'a Tensor,
    perm: [[Option<SlotEntry>; 8]; 3],
    used: [[bool; 8]; 3],
    scale: Option<Rational>,
}

impl Search<'_> {
    fn entry(&self, slot: usize, k: usize) -> Option<SlotEntry> {
        self.perm[slot][k]
    }

    /// Checks every fully assigned triple that involves `(slot, k)`.
    fn consistent(&mut self, slot: usize, k: usize) -> bool {
        let ranges: [Vec<usize>; 3] = std::array::from_fn(|s| {
            if s == slot {
                vec![k]
            } else {
                (0..8).filter(|&i| self.perm[s][i].is_some()).collect()
            }
        });
        let mut fixed_scale = None;
        for &a in &ranges[0] {
            let ea = self.entry(0, a).unwrap();
            for &b in &ranges[1] {
                let eb = self.entry(1, b).unwrap();
                for &c in &ranges[2] {
                    let ec = self.entry(2, c).unwrap();
                    let mv = &self.m[idx(a, b, c)];
                    let sign = i64::from(ea.sign * eb.sign * ec.sign);
                    let ov = self.o[idx(ea.index, eb.index, ec.index)].clone() * Rational::from_int(sign);
                    let scale = self.scale.as_ref().or(fixed_scale.as_ref());
                    match scale {
                        Some(l) => {
                            if *mv != l.clone() * ov {
                                return false;
                            }
                        }
                        None => {
                            if ov.is_zero() != mv.is_zero() {
                                return false;
                            }
                            if !ov.is_zero() {
                                fixed_scale = Some(mv.clone() / ov);
                            }
                        }
                    }
                }
            }
        }
        if fixed_scale.is_some() {
            self.scale = fixed_scale;
        }
        true
    }

    fn solve(&mut self, var: usize) -> bool {
        if var == 24 {
            return true;
        }
        let (k, slot) = (var / 3, var % 3);
        let candidates = std::iter::once(k).chain((0..8).filter(move |&i| i != k));
        for target in candidates {
            if self.used[slot][target] {
                continue;
            }
            for sign in [1i8, -1] {
                let saved_scale = self.scale.clone();
                self.perm[slot][k] = Some(SlotEntry { index: target, sign });
                self.used[slot][target] = true;
                if self.consistent(slot, k) && self.solve(var + 1) {
                    return true;
                }
                self.perm[slot][k] = None;
                self.used[slot][target] = false;
                self.scale = saved_scale;
            }
        }
        false
    }
}

/// Finds the dictionary between two trilinear tensors, if one exists in the
/// signed-permutation family.
pub fn find_dictionary(m: &Tensor, o: &Tensor) -> Result<CorrespondenceMap, AlgebraError> {
    let mut s = Search { m, o, perm: [[None; 8]; 3], used: [[false; 8]; 3], scale: None };
    if !s.solve(0) {
        let zero_o = o.iter().filter(|v| v.is_zero()).count();
        let zero_m = m.iter().filter(|v| v.is_zero()).count();
        return Err(AlgebraError::Dictionary(format!(
            "no signed permutation dictionary; zero entries: matrix {zero_m}, octonion {zero_o}"
        )));
    }
    let slot = |k: usize| -> [SlotEntry; 8] { std::array::from_fn(|a| s.perm[k][a].unwrap()) };
    let scale = s.scale.clone().ok_or_else(|| AlgebraError::Dictionary("both forms vanish".into()))?;
    let map = CorrespondenceMap { phi: slot(0), x: slot(1), psi: slot(2), scale, max_residual: 0.0 };
    let mut max_residual = 0.0f64;
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                let r = m[idx(a, b, c)].clone() - map.octonion_side(&basis(a), &basis(b), &basis(c));
                max_residual = max_residual.max(r.abs_f64());
            }
        }
    }
    Ok(CorrespondenceMap { max_residual, ..map })
}

/// The matrix ↔ octonion dictionary, computed once from the 512 basis triples.
pub fn trilinear_equivalence_oracle() -> Result<&'static CorrespondenceMap, AlgebraError> {
    static MAP: OnceLock<Result<CorrespondenceMap, AlgebraError>> = OnceLock::new();
    MAP.get_or_init(|| find_dictionary(&matrix_tensor(), &octonion_tensor()))
        .as_ref()
        .map_err(Clone::clone)
}

/// Oracle result plus exact agreement on random integer triples.
pub fn trilinear_agreement_check(n_samples: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new("trilinear", true).with_seed(seed);
    let mut oracle = IdentityCheck::new("signed-permutation dictionary exists (512 basis triples)");
    let map = trilinear_equivalence_oracle();
    match &map {
        Ok(m) => {
            oracle.record(m.max_residual == 0.0, m.max_residual, String::new);
            report.note(format!(
                "dictionary: {}, scale {}",
                if m.is_identity() { "identity on all slots" } else { "non-trivial signed permutation" },
                m.scale
            ));
        }
        Err(e) => oracle.record(false, f64::NAN, || e.to_string()),
    }
    report.push(oracle);

    let mut agree = IdentityCheck::new("φᵀB𝒳ψ = scale · (−Φ̄·(XΨ)) on random integer triples");
    if let Ok(m) = map {
        let mut rng = sample::rng(seed);
        for _ in 0..n_samples {
            let (fi, xi, si) = (
                sample::int_components(&mut rng),
                sample::int_components(&mut rng),
                sample::int_components(&mut rng),
            );
            let (f, x, s) = (fi.map(Rational::from_int), xi.map(Rational::from_int), si.map(Rational::from_int));
            let lhs = trilinear_matrix(&Spinor16::from_phi(f.clone()), &Vector8::new(x.clone()), &Spinor16::from_psi(s.clone()))
                .expect("chiral by construction");
            let rhs = m.octonion_side(&f, &x, &s);
            agree.record(lhs == rhs, (lhs.clone() - rhs.clone()).abs_f64(), || {
                format!("φ={fi:?} x={xi:?} ψ={si:?}: {lhs} vs {rhs}")
            });
        }
    }
    report.push(agree);
    report
}

fn random_real(rng: &mut impl Rng) -> [f64; 8] {
    sample::int_components(rng).map(|v| v as f64)
}

/// Relative residual `|a − b| / max(1, scale)`.
fn relative(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / scale.max(1.0)
}

fn norm_sq(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum()
}

/// Random plane rotors, alternating compact and boost planes, `|θ| ≤ bound`.
///
/// Residuals are relative to the Euclidean size of the transformed input
/// (`Σ|x'_μ|²`), the scale of the cancellation in a split-signature form.
pub fn rotor_invariance_check(n_samples: usize, seed: u64, bound: f64, tol: f64) -> VerificationReport {
    let mut rng = sample::rng(seed);
    let mut vc = IdentityCheck::new("Q(Lx L⁻¹) = Q(x)");
    let mut sc = IdentityCheck::new("(Lη)ᵀB(Lη) = ηᵀBη");
    let mut chir = IdentityCheck::new("rotor spinor action keeps chiral blocks separate");
    for i in 0..n_samples {
        let compact = i % 2 == 0;
        let (mu, nu) = sample::plane(&mut rng, compact);
        let theta = sample::angle(&mut rng, bound);
        let r = Rotor::plane(mu, nu, theta).expect("sampled plane is valid");

        let x = Vector8::new(random_real(&mut rng));
        let x2 = rotate_vector(&x, &r);
        let res = relative(x.quadratic_form(), x2.quadratic_form(), norm_sq(&x2.x));
        vc.record(res <= tol, res, || format!("L{mu}{nu}({theta}) on {:?}", x.x));

        let eta = Spinor16::new(random_real(&mut rng), random_real(&mut rng));
        let eta2 = rotate_spinor(&eta, &r);
        let res = relative(spinor_invariant(&eta), spinor_invariant(&eta2), norm_sq(&eta2.column()));
        sc.record(res <= tol, res, || format!("L{mu}{nu}({theta}) on {:?}", eta.column()));

        let p = rotate_spinor(&eta.phi_part(), &r);
        let q = rotate_spinor(&eta.psi_part(), &r);
        chir.record(p.is_phi_chiral() && q.is_psi_chiral(), 0.0, || format!("L{mu}{nu}({theta})"));
    }
    let mut report = VerificationReport::new("rotor invariance", false).with_seed(seed);
    for c in [vc, sc, chir] {
        report.push(c);
    }
    report
}

/// A random word of `1..=max_len` plane rotors with `|θ| ≤ bound`.
pub fn random_word(rng: &mut impl Rng, max_len: usize, bound: f64) -> Rotor {
    let len = rng.random_range(1..=max_len);
    let planes: Vec<_> = (0..len)
        .map(|_| {
            let compact = rng.random_bool(0.5);
            let (mu, nu) = sample::plane(rng, compact);
            (mu, nu, sample::angle(rng, bound))
        })
        .collect();
    Rotor::word(&planes).expect("sampled planes are valid")
}

/// `φᵀB𝒳ψ` under simultaneous action of random rotor words of length ≤ 8,
/// `|θ| ≤ 2`. Residuals are relative to `|φ'||x'||ψ'|`.
pub fn trilinear_invariance_check(n_samples: usize, seed: u64, tol: f64) -> VerificationReport {
    let mut rng = sample::rng(seed);
    let mut check = IdentityCheck::new("ℱ(Lφ, L𝒳L⁻¹, Lψ) = ℱ(φ, 𝒳, ψ)");
    for _ in 0..n_samples {
        let r = random_word(&mut rng, 8, 2.0);
        let phi = Spinor16::from_phi(random_real(&mut rng));
        let x = Vector8::new(random_real(&mut rng));
        let psi = Spinor16::from_psi(random_real(&mut rng));
        let before = trilinear_matrix(&phi, &x, &psi).expect("chiral");
        let (p2, x2, s2) = (rotate_spinor(&phi, &r), rotate_vector(&x, &r), rotate_spinor(&psi, &r));
        let after = trilinear_matrix(&p2, &x2, &s2).expect("rotors preserve chirality");
        let scale = (norm_sq(&p2.phi) * norm_sq(&x2.x) * norm_sq(&s2.psi)).sqrt();
        let res = relative(before, after, scale);
        check.record(res <= tol, res, || {
            format!("word {:?}: {before} vs {after}", r.planes().iter().map(|p| (p.mu, p.nu)).collect::<Vec<_>>())
        });
    }
    let mut report = VerificationReport::new("trilinear invariance", false).with_seed(seed);
    report.push(check);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Rational;

    #[test]
    fn components_load_in_canonical_order() {
        let mut c = [0i64; 8];
        c[4] = 1;
        assert_eq!(oct_from_components(&c.map(Q::from_int)), SplitOctonion::unit(Unit::I));
        assert_eq!(oct_from_components(&basis(0)), SplitOctonion::one());
    }

    #[test]
    fn norms_match_for_basis_vectors() {
        for (k, want) in [(0, 1), (4, -1), (1, 1), (5, -1)] {
            let (n, pure) = oct_norm(&oct_from_components(&basis(k)));
            assert!(pure);
            assert_eq!(n, Q::from_int(want));
            assert_eq!(Vector8::new(basis(k)).quadratic_form(), Q::from_int(want));
        }
    }

    #[test]
    fn scalar_trilinear() {
        let x = SplitOctonion::<Q>::from_ints([3, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(trilinear_oct(&SplitOctonion::one(), &x, &SplitOctonion::one()), Q::from_int(-3));
        assert_eq!(trilinear_oct(&SplitOctonion::zero(), &x, &SplitOctonion::one()), Q::from_int(0));
    }

    #[test]
    fn oracle_finds_identity_with_unit_scale() {
        let m = trilinear_equivalence_oracle().unwrap();
        assert!(m.is_identity());
        assert_eq!(m.scale, Q::from_int(1));
        assert_eq!(m.max_residual, 0.0);
    }

    #[test]
    fn search_recovers_a_planted_dictionary() {
        // Permute and re-sign the octonion tensor, then ask the search to undo it.
        let o = octonion_tensor();
        let p = [3usize, 0, 6, 1, 7, 2, 5, 4];
        let sg = [1i64, -1, 1, 1, -1, 1, -1, 1];
        let mut m = vec![Q::from_int(0); 512];
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    let s = sg[a] * sg[c] * 2;
                    m[idx(a, b, c)] = o[idx(p[a], b, p[c])].clone() * Q::from_int(s);
                }
            }
        }
        let d = find_dictionary(&m, &o).unwrap();
        assert_eq!(d.max_residual, 0.0);
        for a in 0..8 {
            let v = d.octonion_side(&basis(a), &basis(0), &basis(a));
            assert_eq!(v, m[idx(a, 0, a)]);
        }
    }

    #[test]
    fn search_rejects_non_permutation_forms() {
        let o = octonion_tensor();
        let mut m = o.clone();
        m[idx(0, 0, 0)] = Q::from_int(5);
        assert!(matches!(find_dictionary(&m, &o), Err(AlgebraError::Dictionary(_))));
    }

    #[test]
    fn correspondence_small_sample() {
        let r = correspondence_check(50, 1);
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.cases, 150);
    }

    #[test]
    fn agreement_small_sample() {
        assert!(trilinear_agreement_check(50, 2).passed());
    }

    #[test]
    fn invariance_small_sample() {
        assert!(rotor_invariance_check(100, 3, 3.0, 1e-12).passed());
        assert!(trilinear_invariance_check(50, 4, 1e-12).passed());
    }
}
