use serde::Serialize;
use sot_core::clifford::{alpha, b_matrix, frame_matrix, gamma, Matrix};
use sot_core::triality::xi_convention_oracle;
use sot_core::{Rational, Scalar};

use crate::args::{RunConfig, Which};
use crate::emit::{to_json, CsvWriter, Emission};

/// One labelled matrix: `rows[r][c] = {re, im}`, strings in exact mode.
#[derive(Serialize)]
#[serde(bound = "")]
pub struct Labelled<T: Scalar, const N: usize> {
    pub label: String,
    pub dim: usize,
    pub rows: Matrix<T, N>,
}

#[derive(Serialize)]
#[serde(bound = "")]
pub struct MatricesOutput<T: Scalar, const N: usize> {
    pub which: &'static str,
    pub mode: &'static str,
    /// Common factor multiplying every listed matrix.
    pub scale: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
    pub matrices: Vec<Labelled<T, N>>,
}

fn labelled<T: Scalar, const N: usize>(label: String, rows: Matrix<T, N>) -> Labelled<T, N> {
    Labelled { label, dim: N, rows }
}

fn build<T: Scalar>(which: Which) -> Box<dyn Emission> {
    let mode = if T::EXACT { "exact" } else { "float" };
    match which {
        Which::Alpha => Box::new(MatricesOutput::<T, 8> {
            which: "alpha",
            mode,
            scale: "1",
            convention: None,
            matrices: (0..8).map(|mu| labelled(format!("alpha{mu}"), alpha::<T>(mu).expect("index in range"))).collect(),
        }),
        Which::Gamma => Box::new(MatricesOutput::<T, 16> {
            which: "gamma",
            mode,
            scale: "1",
            convention: None,
            matrices: (0..8).map(|mu| labelled(format!("gamma{mu}"), gamma::<T>(mu).expect("index in range"))).collect(),
        }),
        Which::B => Box::new(MatricesOutput::<T, 16> {
            which: "B",
            mode,
            scale: "1",
            convention: None,
            matrices: vec![labelled("B".into(), b_matrix::<T>())],
        }),
        Which::Xi => Box::new(MatricesOutput::<T, 16> {
            which: "xi",
            mode,
            scale: "1/sqrt(2)",
            convention: xi_convention_oracle().ok().and_then(|c| serde_json::to_value(c).ok()?.as_str().map(String::from)),
            matrices: vec![labelled("M".into(), frame_matrix::<T>())],
        }),
    }
}

pub fn run(which: Which, c: &RunConfig) -> Box<dyn Emission> {
    if c.exact() {
        build::<Rational>(which)
    } else {
        build::<f64>(which)
    }
}

impl<T: Scalar, const N: usize> Emission for MatricesOutput<T, N> {
    fn json(&self) -> serde_json::Result<String> {
        to_json(self)
    }

    fn csv(&self, w: &mut CsvWriter<'_>) -> csv::Result<()> {
        w.write_record(["label", "row", "col", "re", "im"])?;
        for m in &self.matrices {
            for r in 0..N {
                for c in 0..N {
                    let z = &m.rows[(r, c)];
                    w.write_record([m.label.clone(), r.to_string(), c.to_string(), z.re.exact_string(), z.im.exact_string()])?;
                }
            }
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        let mut s = String::new();
        if self.scale != "1" {
            s += &format!("(each matrix times {})\n", self.scale);
        }
        for m in &self.matrices {
            s += &format!("{}:\n", m.label);
            for r in 0..N {
                let row: Vec<String> = (0..N).map(|c| entry(&m.rows[(r, c)].re, &m.rows[(r, c)].im)).collect();
                s += &format!("  {}\n", row.join(" "));
            }
        }
        s
    }
}

/// Compact Gaussian-integer rendering: `1`, `-i`, `1+i`, `.` for zero.
fn entry<T: Scalar>(re: &T, im: &T) -> String {
    let (r, i) = (re.exact_string(), im.exact_string());
    let s = match (r.as_str(), i.as_str()) {
        ("0", "0") => ".".to_string(),
        (_, "0") => r,
        ("0", "1") => "i".into(),
        ("0", "-1") => "-i".into(),
        ("0", _) => format!("{i}i"),
        _ => format!("{r}{}{i}i", if i.starts_with('-') { "" } else { "+" }),
    };
    format!("{s:>4}")
}
