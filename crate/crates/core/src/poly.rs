//! Exact integer polynomials in one variable, plus the characteristic
//! polynomial of an integer matrix computed fraction-free.

use crate::linalg::IntMat;

/// Integer polynomial; `coeffs[k]` is the coefficient of t^k. The zero
/// polynomial is the empty vector; otherwise the leading coefficient is
/// nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c as i128])
    }

    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// c * t^k
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c as i128;
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn eval(&self, t: i64) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * t as i128 + c)
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(a.checked_mul(b).expect("polynomial overflow"))
                    .expect("polynomial overflow");
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact division; panics if `other` does not divide `self` exactly.
    /// Bareiss elimination over the polynomial ring only ever divides
    /// exactly, which is the sole caller.
    pub fn exact_div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let mut rem = self.coeffs.clone();
        let d = other.coeffs.len();
        assert!(rem.len() >= d, "exact_div: degree too small");
        let lead = *other.coeffs.last().unwrap();
        let mut quot = vec![0i128; rem.len() - d + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d - 1];
            assert_eq!(c % lead, 0, "exact_div: inexact leading division");
            let q = c / lead;
            quot[k] = q;
            if q != 0 {
                for (j, &b) in other.coeffs.iter().enumerate() {
                    rem[k + j] -= q * b;
                }
            }
        }
        assert!(rem.iter().all(|&c| c == 0), "exact_div: nonzero remainder");
        Self::from_coeffs(quot)
    }

    /// Normal form used for all "equal up to units" comparisons: divide out
    /// t^k so the constant term is nonzero, then make the lowest coefficient
    /// positive. The zero polynomial normalizes to itself.
    pub fn normalize_units(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let shift = self.coeffs.iter().position(|&c| c != 0).unwrap();
        let mut coeffs: Vec<i128> = self.coeffs[shift..].to_vec();
        if coeffs[0] < 0 {
            for c in coeffs.iter_mut() {
                *c = -*c;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Equality up to multiplication by +/- t^k.
    pub fn eq_up_to_units(&self, other: &Self) -> bool {
        self.normalize_units() == other.normalize_units()
    }

    /// Coefficient list from degree 0 upward, for reports.
    pub fn coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// det(tI - M), exact, by Bareiss elimination over Z[t].
pub fn char_poly(m: &IntMat) -> IntPoly {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return IntPoly::constant(1);
    }
    // entries of tI - M
    let mut a: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -m[(i, j)];
                    if i == j {
                        IntPoly::from_coeffs(vec![c as i128, 1])
                    } else {
                        IntPoly::constant(c)
                    }
                })
                .collect()
        })
        .collect();
    poly_det_in_place(&mut a)
}

/// det(V^T - t V), exact. This is the raw (un-normalized) Alexander form.
pub fn alexander_det(v: &IntMat) -> IntPoly {
    assert!(v.is_square());
    let n = v.rows();
    if n == 0 {
        return IntPoly::constant(1);
    }
    let mut a: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| IntPoly::from_coeffs(vec![v[(j, i)] as i128, -v[(i, j)] as i128]))
                .collect()
        })
        .collect();
    poly_det_in_place(&mut a)
}

fn poly_det_in_place(a: &mut Vec<Vec<IntPoly>>) -> IntPoly {
    let n = a.len();
    let mut sign = 1i64;
    let mut prev = IntPoly::constant(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return IntPoly::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev);
            }
            a[i][k] = IntPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        d.neg()
    } else {
        d
    }
}
