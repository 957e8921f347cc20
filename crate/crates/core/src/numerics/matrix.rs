use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

/// Complex scalar used throughout the library.
pub type ComplexScalar = Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A dense 4×4 complex matrix, indexed `(row, col)` from zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4 {
    entries: [[Complex64; 4]; 4],
}

impl Default for Matrix4 {
    fn default() -> Self {
        Self::zero()
    }
}

impl Matrix4 {
    pub const fn zero() -> Self {
        Self { entries: [[ZERO; 4]; 4] }
    }

    pub fn identity() -> Self {
        Self::diagonal([1.0; 4])
    }

    pub const fn from_rows(entries: [[Complex64; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        let mut m = Self::zero();
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.entries[i][j] = Complex64::new(v, 0.0);
            }
        }
        m
    }

    pub fn diagonal(d: [f64; 4]) -> Self {
        let mut m = Self::zero();
        for (i, &v) in d.iter().enumerate() {
            m.entries[i][i] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn rows(&self) -> &[[Complex64; 4]; 4] {
        &self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.entries[j][i] = self.entries[i][j].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.entries[j][i] = self.entries[i][j];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn scale(&self, k: Complex64) -> Self {
        self.map(|z| z * k)
    }

    fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let mut out = *self;
        out.entries.iter_mut().flatten().for_each(|z| *z = f(*z));
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|i| self.entries[i][i]).sum()
    }

    /// Sum of the moduli of all entries.
    pub fn entrywise_l1(&self) -> f64 {
        self.entries.iter().flatten().map(|z| z.norm()).sum()
    }

    pub fn frobenius(&self) -> f64 {
        self.entries.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest `|m(i,j) - conj(m(j,i))|` over all index pairs.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..4 {
            for j in i..4 {
                worst = worst.max((self.entries[i][j] - self.entries[j][i].conj()).norm());
            }
        }
        worst
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Complex64 {
        let mut a = self.entries;
        let mut det = ONE;
        for col in 0..4 {
            let pivot = (col..4).max_by(|&r, &s| a[r][col].norm().total_cmp(&a[s][col].norm())).unwrap_or(col);
            if a[pivot][col] == ZERO {
                return ZERO;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col];
            det *= p;
            let pivot_row = a[col];
            for row in a.iter_mut().skip(col + 1) {
                let factor = row[col] / p;
                for (x, &v) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= factor * v;
                }
            }
        }
        det
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i][j]
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;

    fn mul(self, rhs: Matrix4) -> Matrix4 {
        let mut out = Matrix4::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.entries[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..4 {
                    out.entries[i][j] += a * rhs.entries[k][j];
                }
            }
        }
        out
    }
}

impl Add for Matrix4 {
    type Output = Matrix4;

    fn add(mut self, rhs: Matrix4) -> Matrix4 {
        for i in 0..4 {
            for j in 0..4 {
                self.entries[i][j] += rhs.entries[i][j];
            }
        }
        self
    }
}

impl Sub for Matrix4 {
    type Output = Matrix4;

    fn sub(mut self, rhs: Matrix4) -> Matrix4 {
        for i in 0..4 {
            for j in 0..4 {
                self.entries[i][j] -= rhs.entries[i][j];
            }
        }
        self
    }
}
