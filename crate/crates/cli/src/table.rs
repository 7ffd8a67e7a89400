use serde::Serialize;
use sot_core::octonion::{associator, SplitOctonion, StructureConstants, Unit};
use sot_core::{Rational, Scalar};

use crate::emit::{to_json, CsvWriter, Emission};

#[derive(Serialize)]
pub struct Product {
    pub left: &'static str,
    pub right: &'static str,
    pub result_unit: &'static str,
    pub sign: i8,
}

#[derive(Serialize)]
pub struct Term {
    pub unit: &'static str,
    pub coeff: i64,
}

#[derive(Serialize)]
pub struct AssociatorValue {
    pub args: [&'static str; 3],
    pub value: Vec<Term>,
}

#[derive(Serialize)]
pub struct Family {
    pub family: &'static str,
    pub formula: &'static str,
    pub values: Vec<AssociatorValue>,
}

#[derive(Serialize)]
pub struct TableOutput {
    pub products: Vec<Product>,
    pub associator_families: Vec<Family>,
}

#[derive(Clone, Copy)]
enum Slot {
    Small,
    Big,
    I,
}

const FAMILIES: [([Slot; 3], &str, &str); 6] = {
    use Slot::*;
    [
        ([Small, Small, Big], "A(j_n, j_m, J_k)", "-ε_nmk I - δ_nk J_m + δ_mk J_n"),
        ([Small, Small, I], "A(j_n, j_m, I)", "ε_nmk J_k"),
        ([Small, Big, Big], "A(j_n, J_m, J_k)", "δ_nm j_k - δ_nk j_m"),
        ([Small, Big, I], "A(j_n, J_m, I)", "-ε_nmk j_k"),
        ([Big, Big, Big], "A(J_n, J_m, J_k)", "-ε_nmk I"),
        ([Big, Big, I], "A(J_n, J_m, I)", "ε_nmk J_k"),
    ]
};

fn slot_unit(s: Slot, n: usize) -> Unit {
    match s {
        Slot::Small => Unit::small(n),
        Slot::Big => Unit::big(n),
        Slot::I => Unit::I,
    }
}

fn terms(v: &SplitOctonion<Rational>) -> Vec<Term> {
    let zero = Rational::from_int(0);
    Unit::ALL
        .iter()
        .filter(|u| *v.coeff(**u) != zero)
        .map(|&u| Term { unit: u.name(), coeff: v.coeff(u).to_f64() as i64 })
        .collect()
}

fn family_values(slots: [Slot; 3]) -> Vec<AssociatorValue> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for m in 1..=3 {
            for k in 1..=3 {
                if matches!(slots[2], Slot::I) && k > 1 {
                    continue;
                }
                let args = [slot_unit(slots[0], n), slot_unit(slots[1], m), slot_unit(slots[2], k)];
                let [a, b, c] = args.map(SplitOctonion::<Rational>::unit);
                let v = associator(&a, &b, &c);
                if !v.is_zero() {
                    out.push(AssociatorValue { args: args.map(Unit::name), value: terms(&v) });
                }
            }
        }
    }
    out
}

pub fn run() -> TableOutput {
    let products = StructureConstants::canonical()
        .entries()
        .map(|(a, b, r)| Product { left: a.name(), right: b.name(), result_unit: r.unit.name(), sign: r.sign })
        .collect();
    let associator_families = FAMILIES
        .iter()
        .map(|&(slots, family, formula)| Family { family, formula, values: family_values(slots) })
        .collect();
    TableOutput { products, associator_families }
}

fn signed(sign: i8, unit: &str) -> String {
    format!("{}{unit}", if sign < 0 { "-" } else { "" })
}

impl Emission for TableOutput {
    fn json(&self) -> serde_json::Result<String> {
        to_json(self)
    }

    fn csv(&self, w: &mut CsvWriter<'_>) -> csv::Result<()> {
        w.write_record(["left", "right", "result_unit", "sign"])?;
        for p in &self.products {
            w.write_record([p.left, p.right, p.result_unit, &p.sign.to_string()])?;
        }
        Ok(())
    }

    fn pretty(&self) -> String {
        let mut s = format!("{:>4} |", "");
        for u in Unit::ALL {
            s += &format!("{:>4}", u.name());
        }
        s += "\n-----+";
        s += &"-".repeat(32);
        s.push('\n');
        for row in self.products.chunks(8) {
            s += &format!("{:>4} |", row[0].left);
            for p in row {
                s += &format!("{:>4}", signed(p.sign, p.result_unit));
            }
            s.push('\n');
        }
        s += "\nNon-vanishing associators:\n";
        for f in &self.associator_families {
            s += &format!("  {} = {}  ({} triples)\n", f.family, f.formula, f.values.len());
        }
        s
    }
}
