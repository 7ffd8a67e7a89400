use std::str::FromStr;

use serde::Serialize;
use sot_core::clifford::{trilinear_matrix, Spinor16, Vector8};
use sot_core::triality::{oct_from_components, trilinear_equivalence_oracle, trilinear_oct, CorrespondenceMap};
use sot_core::{Rational, Scalar};

use crate::args::{Representation, RunConfig, TrilinearArgs};
use crate::emit::{to_json, CsvWriter, Emission, Value};
use crate::Failure;

#[derive(Serialize)]
pub struct TrilinearOutput {
    pub representation: &'static str,
    pub mode: &'static str,
    /// `φᵀB𝒳ψ`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Value>,
    /// `−Φ̄·(XΨ)`; in `both` mode on the dictionary image of the inputs, times the oracle scale.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub octonion: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dictionary: Option<CorrespondenceMap>,
}

fn parse<T: Scalar>(name: &str, raw: &[String], parse_one: impl Fn(&str) -> Option<T>) -> Result<[T; 8], Failure> {
    if raw.len() != 8 {
        return Err(Failure::Usage(format!("--{name} takes 8 components, got {}", raw.len())));
    }
    let v = raw
        .iter()
        .map(|s| parse_one(s.trim()).ok_or_else(|| Failure::Usage(format!("--{name}: cannot parse {s:?}"))))
        .collect::<Result<Vec<T>, _>>()?;
    Ok(v.try_into().unwrap_or_else(|_| unreachable!("length checked")))
}

fn value<T: Scalar>(v: &T) -> Value {
    if T::EXACT {
        Value::Exact(v.exact_string())
    } else {
        Value::Float(v.to_f64())
    }
}

fn evaluate<T: Scalar>(a: &TrilinearArgs, parse_one: impl Fn(&str) -> Option<T> + Copy) -> Result<TrilinearOutput, Failure> {
    let phi = parse("phi", &a.phi, parse_one)?;
    let x = parse("x", &a.x, parse_one)?;
    let psi = parse("psi", &a.psi, parse_one)?;

    let matrix = || -> T {
        trilinear_matrix(&Spinor16::from_phi(phi.clone()), &Vector8::new(x.clone()), &Spinor16::from_psi(psi.clone()))
            .expect("chiral by construction")
    };
    let mut out = TrilinearOutput {
        representation: "",
        mode: if T::EXACT { "exact" } else { "float" },
        matrix: None,
        octonion: None,
        residual: None,
        dictionary: None,
    };
    match a.representation {
        Representation::Matrix => {
            out.representation = "matrix";
            out.matrix = Some(value(&matrix()));
        }
        Representation::Octonion => {
            out.representation = "octonion";
            let v = trilinear_oct(&oct_from_components(&phi), &oct_from_components(&x), &oct_from_components(&psi));
            out.octonion = Some(value(&v));
        }
        Representation::Both => {
            out.representation = "both";
            let map = trilinear_equivalence_oracle()
                .map_err(|e| Failure::Runtime(format!("trilinear dictionary unavailable: {e}")))?;
            let t = map.to_octonions(&phi, &x, &psi);
            let o = T::from_rational(&map.scale) * trilinear_oct(&t.phi, &t.x, &t.psi);
            let m = matrix();
            out.residual = Some((m.clone() - o.clone()).abs_f64());
            out.matrix = Some(value(&m));
            out.octonion = Some(value(&o));
            out.dictionary = Some(map.clone());
        }
    }
    Ok(out)
}

pub fn run(a: &TrilinearArgs, c: &RunConfig) -> Result<Box<TrilinearOutput>, Failure> {
    let out = if c.exact() {
        evaluate::<Rational>(a, |s| Rational::from_str(s).ok())?
    } else {
        evaluate::<f64>(a, |s| f64::from_str(s).ok().filter(|v| v.is_finite()))?
    };
    Ok(Box::new(out))
}

impl Emission for TrilinearOutput {
    fn json(&self) -> serde_json::Result<String> {
        to_json(self)
    }

    fn csv(&self, w: &mut CsvWriter<'_>) -> csv::Result<()> {
        w.write_record(["quantity", "value"])?;
        if let Some(v) = &self.matrix {
            w.write_record(["matrix", &v.to_string()])?;
        }
        if let Some(v) = &self.octonion {
            w.write_record(["octonion", &v.to_string()])?;
        }
        if let Some(r) = self.residual {
            w.write_record(["residual", &r.to_string()])?;
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        let mut s = String::new();
        if let Some(v) = &self.matrix {
            s += &format!("φᵀB𝒳ψ      = {v}\n");
        }
        if let Some(v) = &self.octonion {
            s += &format!("−Φ̄·(XΨ)    = {v}\n");
        }
        if let Some(r) = self.residual {
            s += &format!("residual   = {r:e}\n");
        }
        s
    }
}
