//! Dense square complex matrices over a [`Scalar`] field.

use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::scalar::{cx_abs_max, cx_is_negligible, cx_one, cx_zero, Cx, Scalar};

/// Row-major `N×N` complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T, const N: usize> {
    data: Vec<Cx<T>>,
}

pub type Matrix8<T> = Matrix<T, 8>;
pub type Matrix16<T> = Matrix<T, 16>;

impl<T: Scalar, const N: usize> Matrix<T, N> {
    pub fn zeros() -> Self {
        Self { data: vec![cx_zero(); N * N] }
    }

    pub fn identity() -> Self {
        Self::diagonal(&vec![cx_one(); N])
    }

    pub fn diagonal(d: &[Cx<T>]) -> Self {
        let mut m = Self::zeros();
        for (i, v) in d.iter().enumerate().take(N) {
            m[(i, i)] = v.clone();
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triples; unlisted entries are zero.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, usize, Cx<T>)>) -> Self {
        let mut m = Self::zeros();
        for (r, c, v) in entries {
            m[(r, c)] = v;
        }
        m
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Cx<T>) -> Self {
        Self { data: (0..N * N).map(|k| f(k / N, k % N)).collect() }
    }

    pub fn dim(&self) -> usize {
        N
    }

    pub fn row(&self, r: usize) -> &[Cx<T>] {
        &self.data[r * N..(r + 1) * N]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Cx<T>]> {
        self.data.chunks(N)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        Self { data: self.data.iter().map(|z| z.conj()).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self[(c, r)].conj())
    }

    pub fn scale(&self, k: &Cx<T>) -> Self {
        Self { data: self.data.iter().map(|z| z * k).collect() }
    }

    pub fn scale_real(&self, k: &T) -> Self {
        Self { data: self.data.iter().map(|z| z.scale(k.clone())).collect() }
    }

    pub fn trace(&self) -> Cx<T> {
        (0..N).fold(cx_zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.re.is_zero() && z.im.is_zero())
    }

    pub fn is_negligible(&self, tol: f64) -> bool {
        self.data.iter().all(|z| cx_is_negligible(z, tol))
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.data.iter().all(|z| z.im.is_negligible(tol))
    }

    /// Largest absolute real or imaginary part of any entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(cx_abs_max).fold(0.0, f64::max)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|z| !(z.re.is_zero() && z.im.is_zero())).count()
    }

    /// Entries with both indices inside `rows` / `cols` ranges taken from `self`,
    /// zero elsewhere.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(|r, c| {
            if rows.contains(&r) && cols.contains(&c) {
                self[(r, c)].clone()
            } else {
                cx_zero()
            }
        })
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U, N> {
        Matrix { data: self.data.iter().map(|z| Cx::new(f(&z.re), f(&z.im))).collect() }
    }

    pub fn to_f64(&self) -> Matrix<f64, N> {
        self.map(|v| v.to_f64())
    }

    /// `self += k·other`, touching only the nonzero entries of `other`.
    pub fn add_scaled(&mut self, other: &Self, k: &T) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !(b.re.is_zero() && b.im.is_zero()) {
                *a = &*a + b.scale(k.clone());
            }
        }
    }

    /// `self · v` for a column vector.
    pub fn apply(&self, v: &[Cx<T>]) -> Vec<Cx<T>> {
        assert_eq!(v.len(), N);
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, _)| !(a.re.is_zero() && a.im.is_zero()))
                    .fold(cx_zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Real part as nested arrays (for real-valued matrices).
    pub fn real_part(&self) -> Vec<Vec<T>> {
        self.rows().map(|r| r.iter().map(|z| z.re.clone()).collect()).collect()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        // The Γ-algebra matrices are sparse; skip zero terms on the left.
        let mut out = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = &self[(i, k)];
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                for j in 0..N {
                    let b = &rhs[(k, j)];
                    if b.re.is_zero() && b.im.is_zero() {
                        continue;
                    }
                    let sum = &out.data[i * N + j] + a * b;
                    out.data[i * N + j] = sum;
                }
            }
        }
        out
    }
}

impl<T, const N: usize> std::ops::Index<(usize, usize)> for Matrix<T, N> {
    type Output = Cx<T>;
    fn index(&self, (r, c): (usize, usize)) -> &Cx<T> {
        &self.data[r * N + c]
    }
}

impl<T, const N: usize> std::ops::IndexMut<(usize, usize)> for Matrix<T, N> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Cx<T> {
        &mut self.data[r * N + c]
    }
}

impl<T: Scalar, const N: usize> Mul for &Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn mul(self, rhs: Self) -> Matrix<T, N> {
        self.mul_ref(rhs)
    }
}

impl<T: Scalar, const N: usize> Mul for Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn mul(self, rhs: Self) -> Matrix<T, N> {
        self.mul_ref(&rhs)
    }
}

impl<T: Scalar, const N: usize> Add for &Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn add(self, rhs: Self) -> Matrix<T, N> {
        Matrix {
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| if b.re.is_zero() && b.im.is_zero() { a.clone() } else { a + b })
                .collect(),
        }
    }
}

impl<T: Scalar, const N: usize> Add for Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn add(self, rhs: Self) -> Matrix<T, N> {
        &self + &rhs
    }
}

impl<T: Scalar, const N: usize> Sub for &Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn sub(self, rhs: Self) -> Matrix<T, N> {
        Matrix {
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| if b.re.is_zero() && b.im.is_zero() { a.clone() } else { a - b })
                .collect(),
        }
    }
}

impl<T: Scalar, const N: usize> Sub for Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn sub(self, rhs: Self) -> Matrix<T, N> {
        &self - &rhs
    }
}

impl<T: Scalar, const N: usize> Neg for &Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn neg(self) -> Matrix<T, N> {
        Matrix { data: self.data.iter().map(|z| -z).collect() }
    }
}

impl<T: Scalar, const N: usize> Neg for Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn neg(self) -> Matrix<T, N> {
        -&self
    }
}

/// Real number emitted as an exact string in rational mode, a JSON number otherwise.
struct Num<'a, T>(&'a T);

impl<T: Scalar> Serialize for Num<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if T::EXACT {
            s.serialize_str(&self.0.exact_string())
        } else {
            s.serialize_f64(self.0.to_f64())
        }
    }
}

struct Entry<'a, T>(&'a Cx<T>);

impl<T: Scalar> Serialize for Entry<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Entry", 2)?;
        st.serialize_field("re", &Num(&self.0.re))?;
        st.serialize_field("im", &Num(&self.0.im))?;
        st.end()
    }
}

struct Row<'a, T>(&'a [Cx<T>]);

impl<T: Scalar> Serialize for Row<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for z in self.0 {
            seq.serialize_element(&Entry(z))?;
        }
        seq.end()
    }
}

/// `N` rows of `N` entries `{re, im}`.
impl<T: Scalar, const N: usize> Serialize for Matrix<T, N> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(N))?;
        for row in self.rows() {
            seq.serialize_element(&Row(row))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cx, Rational};

    #[test]
    fn identity_is_neutral() {
        let m = Matrix8::<Rational>::from_fn(|r, c| cx(r as i64, c as i64 - 3));
        let id = Matrix8::identity();
        assert_eq!(&m * &id, m);
        assert_eq!(&id * &m, m);
    }

    #[test]
    fn adjoint_reverses_products() {
        let a = Matrix8::<Rational>::from_fn(|r, c| cx((r * c) as i64 % 3 - 1, (r + c) as i64 % 2));
        let b = Matrix8::<Rational>::from_fn(|r, c| cx(r as i64 - c as i64, 1));
        assert_eq!((&a * &b).adjoint(), &b.adjoint() * &a.adjoint());
        assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
    }

    #[test]
    fn trace_and_counts() {
        let m = Matrix8::<Rational>::diagonal(&[cx(1, 0), cx(0, 2), cx(-1, 0)]);
        assert_eq!(m.trace(), cx(0, 2));
        assert_eq!(m.nonzero_count(), 3);
    }

    #[test]
    fn json_entries_are_exact_strings_or_numbers() {
        let m = Matrix8::<Rational>::from_entries([(0, 1, cx(-1, 0)), (2, 2, cx(0, 1))]);
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v[0][1], serde_json::json!({"re": "-1", "im": "0"}));
        assert_eq!(v[2][2], serde_json::json!({"re": "0", "im": "1"}));
        let f = serde_json::to_value(m.to_f64()).unwrap();
        assert_eq!(f[0][1], serde_json::json!({"re": -1.0, "im": 0.0}));
    }
}
