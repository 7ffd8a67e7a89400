use serde::Serialize;
use sot_core::clifford::{chiral_invariants, rotate_spinor, rotate_vector, Metric, Rotor, Spinor16, Vector8};

use crate::args::{RotateArgs, RunConfig, Target};
use crate::emit::{to_json, CsvWriter, Emission};
use crate::Failure;

#[derive(Serialize)]
pub struct RotateOutput {
    pub plane: [usize; 2],
    /// "compact" (cos/sin) or "boost" (cosh/sinh), from the plane's signature.
    pub kind: &'static str,
    pub theta: f64,
    pub target: &'static str,
    pub before: Vec<f64>,
    pub after: Vec<f64>,
    /// `Q(x)` for vectors, `ηᵀBη` for spinors.
    pub invariant_before: f64,
    pub invariant_after: f64,
    /// `(φᵀBφ, ψᵀBψ)`, spinors only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chiral_invariants_before: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chiral_invariants_after: Option<[f64; 2]>,
}

pub fn run(a: &RotateArgs, c: &RunConfig) -> Result<RotateOutput, Failure> {
    if c.exact() {
        return Err(Failure::Usage("rotate works in float mode only (θ is continuous)".into()));
    }
    let [mu, nu] = <[usize; 2]>::try_from(a.plane.as_slice())
        .map_err(|_| Failure::Usage("--plane takes two indices mu,nu".into()))?;
    let r = Rotor::plane(mu, nu, a.theta)?;
    let kind = if Metric::SPLIT.is_compact(mu, nu) { "compact" } else { "boost" };
    let want = match a.target {
        Target::Vector => 8,
        Target::Spinor => 16,
    };
    if a.components.len() != want {
        return Err(Failure::Usage(format!(
            "expected {want} components for a {}, got {}",
            target_name(a.target),
            a.components.len()
        )));
    }
    if let Some(v) = a.components.iter().find(|v| !v.is_finite()) {
        return Err(Failure::Usage(format!("component {v} is not finite")));
    }
    if !a.theta.is_finite() {
        return Err(Failure::Usage("--theta must be finite".into()));
    }

    let base = RotateOutput {
        plane: [mu, nu],
        kind,
        theta: a.theta,
        target: target_name(a.target),
        before: a.components.clone(),
        after: Vec::new(),
        invariant_before: 0.0,
        invariant_after: 0.0,
        chiral_invariants_before: None,
        chiral_invariants_after: None,
    };
    Ok(match a.target {
        Target::Vector => {
            let x = Vector8::new(std::array::from_fn(|i| a.components[i]));
            let y = rotate_vector(&x, &r);
            RotateOutput {
                after: y.x.iter().map(|v| v + 0.0).collect(),
                invariant_before: x.quadratic_form(),
                invariant_after: y.quadratic_form(),
                ..base
            }
        }
        Target::Spinor => {
            let eta = Spinor16::from_column(&a.components);
            let out = rotate_spinor(&eta, &r);
            let (b0, b1) = chiral_invariants(&eta);
            let (a0, a1) = chiral_invariants(&out);
            RotateOutput {
                after: out.column().into_iter().map(|v| v + 0.0).collect(),
                invariant_before: b0 + b1,
                invariant_after: a0 + a1,
                chiral_invariants_before: Some([b0, b1]),
                chiral_invariants_after: Some([a0, a1]),
                ..base
            }
        }
    })
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Vector => "vector",
        Target::Spinor => "spinor",
    }
}

impl Emission for RotateOutput {
    fn json(&self) -> serde_json::Result<String> {
        to_json(self)
    }

    fn csv(&self, w: &mut CsvWriter<'_>) -> csv::Result<()> {
        w.write_record(["index", "before", "after"])?;
        for (i, (b, a)) in self.before.iter().zip(&self.after).enumerate() {
            w.write_record([i.to_string(), b.to_string(), a.to_string()])?;
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        let mut s = format!(
            "L{}{}({}) [{}] on {}\n",
            self.plane[0], self.plane[1], self.theta, self.kind, self.target
        );
        for (i, (b, a)) in self.before.iter().zip(&self.after).enumerate() {
            s += &format!("  {i:>2}: {b:>14.9} -> {a:>14.9}\n");
        }
        s += &format!("invariant: {} -> {}\n", self.invariant_before, self.invariant_after);
        s
    }
}
