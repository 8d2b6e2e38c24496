//! Independent cross-check of both Seifert pipelines against the reduced
//! Burau representation. The oracle never touches surfaces, homology or
//! Seifert matrices: it multiplies generator matrices over Z[t] and uses
//! det(t^k I - P) * (t - 1) = Delta * (t^n - 1) up to units.

use obook_core::braid::{parse_braid, stallings_open_book, BraidWord};
use obook_core::embedded::{alexander, seifert_matrix_bennequin};
use obook_core::poly::IntPoly;
use obook_core::sample::Sampler;

// reduced Burau matrix of one generator over Z[t]; negative letters are
// returned as t * (inverse) so everything stays polynomial.
fn burau_letter(n: usize, l: i64) -> Vec<Vec<IntPoly>> {
    let m = n - 1;
    let i = l.unsigned_abs() as usize; // 1-based generator index
    let t = IntPoly::monomial(1, 1);
    let one = IntPoly::constant(1);
    let mut a: Vec<Vec<IntPoly>> =
        (0..m).map(|r| (0..m).map(|c| IntPoly::constant((r == c) as i64)).collect()).collect();
    if l > 0 {
        a[i - 1][i - 1] = t.neg();
        if i >= 2 {
            a[i - 1][i - 2] = t.clone();
        }
        if i <= m - 1 {
            a[i - 1][i] = one;
        }
        a
    } else {
        // t * sigma_i^{-1}: diagonal t except row i: [.., t, -1, 1, ..]
        for (r, row) in a.iter_mut().enumerate() {
            row[r] = t.clone();
        }
        a[i - 1][i - 1] = IntPoly::constant(-1);
        if i >= 2 {
            a[i - 1][i - 2] = t.clone();
        }
        if i <= m - 1 {
            a[i - 1][i] = one;
        }
        a
    }
}

fn mat_mul(a: &[Vec<IntPoly>], b: &[Vec<IntPoly>]) -> Vec<Vec<IntPoly>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(IntPoly::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

fn det(a: &[Vec<IntPoly>]) -> IntPoly {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut d = IntPoly::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPoly>> = (1..n)
            .map(|r| (0..n).filter(|&c| c != j).map(|c| a[r][c].clone()).collect())
            .collect();
        let term = a[0][j].mul(&det(&minor));
        d = if j % 2 == 0 { d.add(&term) } else { d.sub(&term) };
    }
    d
}

/// Alexander polynomial of the closure via reduced Burau.
fn burau_alexander(beta: &BraidWord) -> IntPoly {
    let n = beta.strands;
    let m = n - 1;
    let mut p: Vec<Vec<IntPoly>> =
        (0..m).map(|r| (0..m).map(|c| IntPoly::constant((r == c) as i64)).collect()).collect();
    let mut neg = 0usize;
    for &l in &beta.letters {
        p = mat_mul(&p, &burau_letter(n, l));
        if l < 0 {
            neg += 1;
        }
    }
    // B = t^-neg * P; det(t^neg I - P) = t^(neg*m) det(I - B)
    let tk = IntPoly::monomial(1, neg);
    let mut a = p;
    for (r, row) in a.iter_mut().enumerate() {
        for (c, e) in row.iter_mut().enumerate() {
            *e = if r == c { tk.sub(e) } else { e.neg() };
        }
    }
    let d = det(&a);
    let tm1 = IntPoly::from_coeffs(vec![-1, 1]);
    let tn1 = IntPoly::monomial(1, n).sub(&IntPoly::constant(1));
    let num = d.mul(&tm1).normalize_units();
    if num.is_zero() {
        return IntPoly::zero();
    }
    num.exact_div(&tn1.normalize_units()).normalize_units()
}

#[test]
fn oracle_matches_known_closures() {
    let cases: [(usize, &str, &str, &[i128]); 10] = [
        (2, "1 1 1", "trefoil", &[1, -1, 1]),
        (3, "-1 2 -1 2", "figure-eight", &[1, -3, 1]),
        (2, "1 1 1 1 1", "cinquefoil", &[1, -1, 1, -1, 1]),
        (2, "1 1", "positive hopf link", &[1, -1]),
        (2, "1 1 1 1", "(2,4) torus link", &[1, -1, 1, -1]),
        (3, "1 2 1 2", "trefoil on 3 strands", &[1, -1, 1]),
        (3, "1 2 1 2 1 2", "(3,3) torus link", &[1, -1, 0, -1, 1]),
        (3, "1 2 1 2 1", "(2,4) torus link, destabilized form", &[1, -1, 1, -1]),
        (2, "-1 -1 -1", "mirror trefoil", &[1, -1, 1]),
        (3, "1 1 2 2", "connected sum of two hopf links", &[1, -2, 1]),
    ];
    for (n, w, name, coeffs) in cases {
        let beta = parse_braid(n, w).unwrap();
        let truth = burau_alexander(&beta);
        assert!(
            truth.eq_up_to_units(&IntPoly::from_coeffs(coeffs.to_vec())),
            "{name}: oracle gave {}",
            truth.coeff_string()
        );
    }
}

#[test]
fn bennequin_and_stallings_match_oracle_on_homogeneous_braids() {
    for seed in 0..200u64 {
        let beta = Sampler::new(seed).homogeneous_braid();
        let truth = burau_alexander(&beta);
        let ben = alexander(&seifert_matrix_bennequin(&beta).unwrap());
        let cp = stallings_open_book(&beta).unwrap().char_poly();
        assert!(
            ben.eq_up_to_units(&truth),
            "seifert: n={} w={:?}: {} vs {}",
            beta.strands,
            beta.letters,
            ben.coeff_string(),
            truth.coeff_string()
        );
        assert!(
            cp.eq_up_to_units(&truth),
            "monodromy: n={} w={:?}: {} vs {}",
            beta.strands,
            beta.letters,
            cp.coeff_string(),
            truth.coeff_string()
        );
    }
}

#[test]
fn bennequin_matches_oracle_on_mixed_sign_braids() {
    // non-homogeneous closures: the Seifert pipeline still applies even
    // though the open-book one does not
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut rng = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as usize
    };
    let mut checked = 0;
    while checked < 120 {
        let n = 2 + rng() % 4;
        let len = n + rng() % 8;
        let letters: Vec<i64> = (0..len)
            .map(|_| {
                let g = 1 + (rng() % (n - 1)) as i64;
                if rng() % 2 == 0 { g } else { -g }
            })
            .collect();
        if (1..n as i64).any(|g| !letters.iter().any(|&l| l.abs() == g)) {
            continue;
        }
        let beta = BraidWord::new(n, letters).unwrap();
        let truth = burau_alexander(&beta);
        let ben = alexander(&seifert_matrix_bennequin(&beta).unwrap());
        assert!(
            ben.eq_up_to_units(&truth),
            "n={} w={:?}: {} vs {}",
            beta.strands,
            beta.letters,
            ben.coeff_string(),
            truth.coeff_string()
        );
        checked += 1;
    }
}
