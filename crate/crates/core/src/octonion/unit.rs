//! Basis units and the multiplication table.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::AlgebraError;

/// The eight basis units in canonical coefficient order
/// `(1, j1, j2, j3, I, J1, J2, J3)`.
///
/// Slot `k` of an octonion lines up with component `x_k` of a (4+4)-vector,
/// so the octonionic and matrix pictures share indices.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    One,
    j1,
    j2,
    j3,
    I,
    J1,
    J2,
    J3,
}

impl Unit {
    pub const ALL: [Unit; 8] = [
        Unit::One,
        Unit::j1,
        Unit::j2,
        Unit::j3,
        Unit::I,
        Unit::J1,
        Unit::J2,
        Unit::J3,
    ];

    /// The seven hyper-complex units.
    pub const IMAGINARY: [Unit; 7] = [
        Unit::j1,
        Unit::j2,
        Unit::j3,
        Unit::I,
        Unit::J1,
        Unit::J2,
        Unit::J3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Unit> {
        Self::ALL.get(i).copied()
    }

    /// Pseudo-vector unit `j_n`, `n` in 1..=3.
    pub fn small(n: usize) -> Unit {
        [Unit::j1, Unit::j2, Unit::j3][n - 1]
    }

    /// Vector-like unit `J_n`, `n` in 1..=3.
    pub fn big(n: usize) -> Unit {
        [Unit::J1, Unit::J2, Unit::J3][n - 1]
    }

    /// Square of the unit: `J_n² = I² = 1 = 1²`, `j_n² = -1`.
    pub fn square_sign(self) -> i8 {
        match self {
            Unit::j1 | Unit::j2 | Unit::j3 => -1,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Unit::One => "1",
            Unit::j1 => "j1",
            Unit::j2 => "j2",
            Unit::j3 => "j3",
            Unit::I => "I",
            Unit::J1 => "J1",
            Unit::J2 => "J2",
            Unit::J3 => "J3",
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Unit {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Unit::ALL
            .iter()
            .copied()
            .find(|u| u.name() == s)
            .ok_or_else(|| AlgebraError::UnknownUnit(s.to_string()))
    }
}

/// `±unit`, the value of a product of two basis units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedUnit {
    pub unit: Unit,
    pub sign: i8,
}

impl SignedUnit {
    pub fn new(unit: Unit, sign: i8) -> Self {
        Self { unit, sign }
    }

    pub fn neg(self) -> Self {
        Self::new(self.unit, -self.sign)
    }
}

impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "+" };
        write!(f, "{s}{}", self.unit)
    }
}

impl Serialize for SignedUnit {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SignedUnit", 2)?;
        st.serialize_field("unit", self.unit.name())?;
        st.serialize_field("sign", &self.sign)?;
        st.end()
    }
}

/// Totally antisymmetric symbol on `{1,2,3}` with `ε₁₂₃ = +1`.
pub fn epsilon(n: usize, m: usize, k: usize) -> i8 {
    match (n, m, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

pub fn delta(n: usize, m: usize) -> i8 {
    i8::from(n == m)
}

/// The 8×8 product table of the basis units: `table[a][b] = e_a · e_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    table: [[SignedUnit; 8]; 8],
}

impl StructureConstants {
    /// Builds the table from the defining relations:
    ///
    /// ```text
    /// J_m J_n =  ε_mnk j_k + δ_mn        J_n I = -I J_n = j_n
    /// j_m j_n =  ε_mnk j_k - δ_mn        j_n I = -I j_n = J_n
    /// j_m J_n = -ε_mnk J_k - δ_mn I      I² = 1
    /// ```
    ///
    /// `J_n j_m` follows from anticommutation of distinct imaginary units.
    /// Every slot must be written exactly once with a single signed unit.
    pub fn from_relations() -> Result<Self, AlgebraError> {
        let mut slots: [[Option<SignedUnit>; 8]; 8] = [[None; 8]; 8];
        let mut put = |a: Unit, b: Unit, v: SignedUnit| -> Result<(), AlgebraError> {
            let slot = &mut slots[a.index()][b.index()];
            if slot.is_some() {
                return Err(AlgebraError::TableConflict(a, b));
            }
            *slot = Some(v);
            Ok(())
        };

        for u in Unit::ALL {
            put(Unit::One, u, SignedUnit::new(u, 1))?;
            if u != Unit::One {
                put(u, Unit::One, SignedUnit::new(u, 1))?;
            }
        }

        for m in 1..=3 {
            for n in 1..=3 {
                let single = |terms: &[(i8, Unit)]| -> Result<SignedUnit, AlgebraError> {
                    let nonzero: Vec<_> = terms.iter().filter(|(c, _)| *c != 0).collect();
                    match nonzero.as_slice() {
                        [(c, u)] => Ok(SignedUnit::new(*u, *c)),
                        _ => Err(AlgebraError::NotSingleUnit),
                    }
                };
                let eps_terms = |sign: i8, unit: fn(usize) -> Unit| -> Vec<(i8, Unit)> {
                    (1..=3).map(|k| (sign * epsilon(m, n, k), unit(k))).collect()
                };

                let mut t = eps_terms(1, Unit::small);
                t.push((delta(m, n), Unit::One));
                put(Unit::big(m), Unit::big(n), single(&t)?)?;

                let mut t = eps_terms(1, Unit::small);
                t.push((-delta(m, n), Unit::One));
                put(Unit::small(m), Unit::small(n), single(&t)?)?;

                let mut t = eps_terms(-1, Unit::big);
                t.push((-delta(m, n), Unit::I));
                let jm_jn = single(&t)?;
                put(Unit::small(m), Unit::big(n), jm_jn)?;
                put(Unit::big(n), Unit::small(m), jm_jn.neg())?;
            }
        }

        for n in 1..=3 {
            put(Unit::big(n), Unit::I, SignedUnit::new(Unit::small(n), 1))?;
            put(Unit::I, Unit::big(n), SignedUnit::new(Unit::small(n), -1))?;
            put(Unit::small(n), Unit::I, SignedUnit::new(Unit::big(n), 1))?;
            put(Unit::I, Unit::small(n), SignedUnit::new(Unit::big(n), -1))?;
        }
        put(Unit::I, Unit::I, SignedUnit::new(Unit::One, 1))?;

        let mut table = [[SignedUnit::new(Unit::One, 1); 8]; 8];
        for a in 0..8 {
            for b in 0..8 {
                let ua = Unit::ALL[a];
                let ub = Unit::ALL[b];
                table[a][b] = slots[a][b].ok_or(AlgebraError::TableHole(ua, ub))?;
            }
        }
        Ok(Self { table })
    }

    pub(crate) fn from_table(table: [[SignedUnit; 8]; 8]) -> Self {
        Self { table }
    }

    /// Shared canonical table, built once.
    pub fn canonical() -> &'static StructureConstants {
        static TABLE: OnceLock<StructureConstants> = OnceLock::new();
        TABLE.get_or_init(|| {
            StructureConstants::from_relations().expect("defining relations fill the table")
        })
    }

    pub fn product(&self, a: Unit, b: Unit) -> SignedUnit {
        self.table[a.index()][b.index()]
    }

    pub fn rows(&self) -> &[[SignedUnit; 8]; 8] {
        &self.table
    }

    /// Flat list of `(left, right, result)` entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Unit, Unit, SignedUnit)> + '_ {
        Unit::ALL.into_iter().flat_map(move |a| {
            Unit::ALL
                .into_iter()
                .map(move |b| (a, b, self.product(a, b)))
        })
    }
}

impl Serialize for StructureConstants {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(8))?;
        for row in &self.table {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_is_antisymmetric() {
        for n in 1..=3 {
            for m in 1..=3 {
                for k in 1..=3 {
                    assert_eq!(epsilon(n, m, k), -epsilon(m, n, k));
                    assert_eq!(epsilon(n, m, k), -epsilon(n, k, m));
                }
            }
        }
        assert_eq!(epsilon(1, 2, 3), 1);
        assert_eq!(epsilon(1, 1, 2), 0);
    }

    #[test]
    fn scalar_row_and_column_are_identity() {
        let t = StructureConstants::canonical();
        for u in Unit::ALL {
            assert_eq!(t.product(Unit::One, u), SignedUnit::new(u, 1));
            assert_eq!(t.product(u, Unit::One), SignedUnit::new(u, 1));
        }
    }

    #[test]
    fn unit_names_round_trip() {
        for u in Unit::ALL {
            assert_eq!(u.name().parse::<Unit>().unwrap(), u);
        }
        assert!("K".parse::<Unit>().is_err());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(StructureConstants::canonical()).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 8));
        assert_eq!(rows[5][6], serde_json::json!({"unit": "j3", "sign": 1}));
    }
}
