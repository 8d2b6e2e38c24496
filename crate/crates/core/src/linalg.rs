//! Small exact integer matrices: products, fraction-free determinants,
//! unimodular inverses and Smith normal form. Everything here is sized for
//! desk-scale ranks (r below a few dozen), so cubic and quartic algorithms
//! with i128 intermediates are fine.

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)] as i128;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out[(i, j)] as i128 + a * other[(k, j)] as i128;
                    out[(i, j)] = i64::try_from(v).expect("matrix product overflow");
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.checked_add(*b).expect("matrix sum overflow");
        }
        out
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.checked_sub(*b).expect("matrix difference overflow");
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == -self[(j, i)]))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> i64 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> =
            (0..n).map(|i| self.row(i).iter().map(|&x| x as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                    return 0;
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j]
                        .checked_mul(a[k][k])
                        .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j]).unwrap()))
                        .expect("determinant overflow");
                    debug_assert_eq!(num % prev, 0);
                    a[i][j] = num / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        i64::try_from(sign * a[n - 1][n - 1]).expect("determinant overflow")
    }

    /// Inverse of a matrix with determinant +/-1, via the adjugate.
    pub fn unimodular_inverse(&self) -> Option<IntMat> {
        assert!(self.is_square());
        let d = self.det();
        if d != 1 && d != -1 {
            return None;
        }
        let n = self.rows;
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i).det();
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                inv[(i, j)] = sign * c * d;
            }
        }
        debug_assert_eq!(self.mul(&inv), Self::identity(n));
        Some(inv)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMat {
        let rows: Vec<Vec<i64>> = (0..self.rows)
            .filter(|&i| i != skip_row)
            .map(|i| {
                (0..self.cols).filter(|&j| j != skip_col).map(|j| self[(i, j)]).collect()
            })
            .collect();
        if rows.is_empty() {
            IntMat::zeros(0, 0)
        } else {
            IntMat::from_rows(rows)
        }
    }

    /// Diagonal of the Smith normal form: elementary divisors d_1 | d_2 | ...,
    /// all nonnegative, including any trailing zeros.
    pub fn smith_divisors(&self) -> Vec<i64> {
        let mut a: Vec<Vec<i128>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let (m, n) = (self.rows, self.cols);
        let mut divisors = Vec::new();
        let mut top = 0usize;
        while top < m.min(n) {
            // find a nonzero pivot in the remaining block
            let pivot = (top..m)
                .flat_map(|i| (top..n).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].unsigned_abs());
            let Some((pi, pj)) = pivot else {
                break;
            };
            a.swap(top, pi);
            for row in a.iter_mut() {
                row.swap(top, pj);
            }
            // clear row and column; restart if a remainder pops up
            let mut again = true;
            while again {
                again = false;
                for i in top + 1..m {
                    let q = a[i][top].div_euclid(a[top][top]);
                    if q != 0 {
                        for j in top..n {
                            a[i][j] -= q * a[top][j];
                        }
                    }
                    if a[i][top] != 0 {
                        a.swap(top, i);
                        again = true;
                    }
                }
                for j in top + 1..n {
                    let q = a[top][j].div_euclid(a[top][top]);
                    if q != 0 {
                        for row in a.iter_mut().take(m).skip(top) {
                            row[j] -= q * row[top];
                        }
                    }
                    if a[top][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(top, j);
                        }
                        again = true;
                    }
                }
            }
            divisors.push(i64::try_from(a[top][top].abs()).expect("divisor overflow"));
            top += 1;
        }
        while divisors.len() < m.min(n) {
            divisors.push(0);
        }
        // enforce the divisibility chain d_k | d_{k+1}
        let k = divisors.len();
        for i in 0..k {
            for j in i + 1..k {
                let (x, y) = (divisors[i], divisors[j]);
                if x == 0 && y == 0 {
                    continue;
                }
                let g = gcd(x, y);
                let l = if g == 0 { 0 } else { x / g * y };
                divisors[i] = g;
                divisors[j] = l.abs();
            }
        }
        divisors
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}
