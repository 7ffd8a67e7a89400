//! Rebuilding the full multiplication table from the three vector-like units.
//!
//! Products of `J1, J2, J3` are modelled as signed words (subsets of the
//! generators, written in increasing order). Rewriting uses only:
//!
//! * `J_n² = 1`;
//! * distinct generators anticommute;
//! * `(xy)z = x(yz)` when `x, y, z` lie in a common associative subalgebra —
//!   for words that is exactly when their generator sets are linearly
//!   dependent over Z₂ — and `(xy)z = -x(yz)` otherwise.
//!
//! From the words one derives `j_n = ½ εₙₘₖ JᵐJᵏ` and `I = J_n j_n`, then
//! closes the table by repeated products. The result is compared against the
//! table built directly from the defining relations.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::unit::{epsilon, SignedUnit, StructureConstants, Unit};
use crate::error::AlgebraError;

/// Subset of `{J1, J2, J3}` as a bitmask; bit `n-1` stands for `J_n`.
pub type Word = u8;

/// `±word`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedWord {
    pub sign: i8,
    pub word: Word,
}

impl SignedWord {
    pub fn new(sign: i8, word: Word) -> Self {
        Self { sign, word }
    }

    pub fn generator(n: usize) -> Self {
        Self::new(1, 1 << (n - 1))
    }

    pub fn neg(self) -> Self {
        Self::new(-self.sign, self.word)
    }

    pub fn mul(self, rhs: SignedWord) -> SignedWord {
        let (s, w) = word_product(self.word, rhs.word);
        SignedWord::new(s * self.sign * rhs.sign, w)
    }
}

fn top_bit(w: Word) -> u8 {
    7 - w.leading_zeros() as u8
}

/// Whether three words generate an associative subalgebra.
fn dependent(a: Word, b: Word, c: Word) -> bool {
    a == 0 || b == 0 || c == 0 || a == b || b == c || a == c || a ^ b ^ c == 0
}

fn assoc_sign(a: Word, b: Word, c: Word) -> i8 {
    if dependent(a, b, c) {
        1
    } else {
        -1
    }
}

/// `e_s · e_t` for words `s`, `t`, returned as `(sign, word)`.
pub fn word_product(s: Word, t: Word) -> (i8, Word) {
    if t == 0 {
        return (1, s);
    }
    if s == 0 {
        return (1, t);
    }
    // e_t = e_{t'} J_g with g the highest generator of t, so
    // e_s (e_{t'} J_g) = ± (e_s e_{t'}) J_g.
    let g = top_bit(t);
    let rest = t & !(1 << g);
    let s3 = assoc_sign(s, rest, 1 << g);
    let (s1, u) = word_product(s, rest);
    let (s2, v) = times_generator(u, g);
    (s3 * s1 * s2, v)
}

/// `e_u · J_g`.
fn times_generator(u: Word, g: u8) -> (i8, Word) {
    if u == 0 {
        return (1, 1 << g);
    }
    let h = top_bit(u);
    let rest = u & !(1 << h);
    if h < g {
        return (1, u | (1 << g));
    }
    if h == g {
        return (1, rest);
    }
    // (e_rest J_h) J_g = ± e_rest (J_h J_g) = ∓ e_rest (J_g J_h) = ∓ ± (e_rest J_g) J_h
    let sa = assoc_sign(rest, 1 << h, 1 << g);
    let sb = assoc_sign(rest, 1 << g, 1 << h);
    let (s, w) = times_generator(rest, g);
    let (s2, x) = times_generator(w, h);
    (-sa * sb * s * s2, x)
}

/// Linear combination of words with integer coefficients (scaled by `1/denominator`).
fn single_word(terms: &[(i64, SignedWord)], denominator: i64) -> Result<SignedWord, AlgebraError> {
    let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
    for (c, sw) in terms {
        *acc.entry(sw.word).or_default() += c * i64::from(sw.sign);
    }
    acc.retain(|_, c| *c != 0);
    match acc.into_iter().collect::<Vec<_>>().as_slice() {
        [(w, c)] if c.abs() == denominator => Ok(SignedWord::new(c.signum() as i8, *w)),
        other => Err(AlgebraError::Generation(format!(
            "expected a single signed word, got {other:?} / {denominator}"
        ))),
    }
}

/// The eight basis units as signed words, in canonical order.
pub fn unit_words() -> Result<[SignedWord; 8], AlgebraError> {
    let big = |n| SignedWord::generator(n);
    let mut small = [SignedWord::new(1, 0); 3];
    for (n, slot) in small.iter_mut().enumerate() {
        let n = n + 1;
        let mut terms = Vec::new();
        for m in 1..=3 {
            for k in 1..=3 {
                let e = i64::from(epsilon(n, m, k));
                if e != 0 {
                    terms.push((e, big(m).mul(big(k))));
                }
            }
        }
        *slot = single_word(&terms, 2)?;
    }

    let i = big(1).mul(small[0]);
    for n in 2..=3 {
        if big(n).mul(small[n - 1]) != i {
            return Err(AlgebraError::Generation(format!("J{n} j{n} differs from J1 j1")));
        }
    }
    // I is also -𝒥(J1,J2,J3) = -⅓((J1J2)J3 + (J2J3)J1 + (J3J1)J2).
    let jac: Vec<_> = [(1, 2, 3), (2, 3, 1), (3, 1, 2)]
        .iter()
        .map(|&(a, b, c)| (-1, big(a).mul(big(b)).mul(big(c))))
        .collect();
    if single_word(&jac, 3)? != i {
        return Err(AlgebraError::Generation("I differs from -J(J1,J2,J3)".into()));
    }

    Ok([
        SignedWord::new(1, 0),
        small[0],
        small[1],
        small[2],
        i,
        big(1),
        big(2),
        big(3),
    ])
}

/// Breadth-first closure of the generators under the word product.
pub fn closure() -> BTreeSet<Word> {
    let mut seen: BTreeSet<Word> = [0, 1, 2, 4].into_iter().collect();
    let mut queue: VecDeque<Word> = seen.iter().copied().collect();
    while let Some(w) = queue.pop_front() {
        let known: Vec<Word> = seen.iter().copied().collect();
        for v in known {
            for p in [word_product(w, v).1, word_product(v, w).1] {
                if seen.insert(p) {
                    queue.push_back(p);
                }
            }
        }
    }
    seen
}

/// Multiplication table generated from `J1, J2, J3` alone.
pub fn generate_basis_from_j() -> Result<StructureConstants, AlgebraError> {
    let reached = closure();
    if reached.len() != 8 {
        return Err(AlgebraError::Generation(format!(
            "closure has {} elements, expected 8",
            reached.len()
        )));
    }
    let words = unit_words()?;
    let lookup: BTreeMap<Word, SignedUnit> = words
        .iter()
        .zip(Unit::ALL)
        .map(|(sw, u)| (sw.word, SignedUnit::new(u, sw.sign)))
        .collect();
    if lookup.len() != 8 {
        return Err(AlgebraError::Generation("derived units are not distinct".into()));
    }

    let mut table = [[SignedUnit::new(Unit::One, 1); 8]; 8];
    for (a, wa) in words.iter().enumerate() {
        for (b, wb) in words.iter().enumerate() {
            let p = wa.mul(*wb);
            let hit = lookup.get(&p.word).ok_or_else(|| {
                AlgebraError::Generation(format!("product word {:#05b} outside the basis", p.word))
            })?;
            // word = sign_u · unit, so ±word = (±sign_u) unit.
            table[a][b] = SignedUnit::new(hit.unit, hit.sign * p.sign);
        }
    }
    Ok(StructureConstants::from_table(table))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_square_to_one_and_anticommute() {
        for a in 0..3u8 {
            assert_eq!(word_product(1 << a, 1 << a), (1, 0));
            for b in 0..3u8 {
                if a != b {
                    let (s1, w1) = word_product(1 << a, 1 << b);
                    let (s2, w2) = word_product(1 << b, 1 << a);
                    assert_eq!(w1, w2);
                    assert_eq!(s1, -s2);
                }
            }
        }
    }

    #[test]
    fn triple_product_squares_to_one() {
        // (J1J2)J3 squares to +1, so I is split-like rather than complex-like.
        assert_eq!(word_product(0b111, 0b111), (1, 0));
        assert_eq!(word_product(0b011, 0b011), (-1, 0));
    }

    #[test]
    fn derived_units() {
        let w = unit_words().unwrap();
        assert_eq!(w[1], SignedWord::new(1, 0b110)); // j1 = J2J3
        assert_eq!(w[2], SignedWord::new(-1, 0b101)); // j2 = J3J1 = -J1J3
        assert_eq!(w[3], SignedWord::new(1, 0b011)); // j3 = J1J2
    }

    #[test]
    fn closure_has_eight_words() {
        assert_eq!(closure().len(), 8);
    }

    #[test]
    fn generated_table_matches_relations() {
        assert_eq!(&generate_basis_from_j().unwrap(), StructureConstants::canonical());
    }
}
