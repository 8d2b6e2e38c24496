//! Randomized verification suites behind `obook verify`. Every instance is
//! seeded independently so the suites parallelize without changing results.

use num_rational::Ratio;
use obook_core::braid::stallings_open_book;
use obook_core::cobordism::{
    circle_collapsed_mapping_torus, split_seifert, stiffen, verify_samedef,
    CylindricalCobordism,
};
use obook_core::embedded::{
    alexander, chord_diagram_for_sum, embedded_sum, fiberedness_necessary, homological_monodromy,
    seifert_matrix_bennequin, SumOrder,
};
use obook_core::openbook::{morse_numbers, morse_sum, open_book_sum, primitive_open_book};
use obook_core::patching::abstract_sum;
use obook_core::poly::char_poly;
use obook_core::sample::Sampler;
use obook_core::surface::{boundary_count, euler_characteristic};
use rayon::prelude::*;

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

fn run_suite(
    name: &'static str,
    seed: u64,
    count: usize,
    check: impl Fn(u64) -> Result<(), String> + Sync,
) -> SuiteResult {
    let outcomes: Vec<Result<(), String>> = (0..count)
        .into_par_iter()
        .map(|i| check(seed.wrapping_add(i as u64).wrapping_mul(0x9e3779b97f4a7c15)))
        .collect();
    let failures: Vec<String> = outcomes
        .iter()
        .enumerate()
        .filter_map(|(i, r)| r.as_ref().err().map(|e| format!("instance {i}: {e}")))
        .collect();
    SuiteResult { name, passed: count - failures.len(), total: count, failures }
}

/// Splitting a collapsed cobordism recovers it exactly.
pub fn roundtrip(seed: u64, count: usize) -> SuiteResult {
    run_suite("roundtrip", seed, count, |s| {
        let w = Sampler::new(s).cobordism();
        let p = circle_collapsed_mapping_torus(&w).map_err(|e| e.to_string())?;
        if split_seifert(&p) != w {
            return Err("split(collapse(W)) != W".into());
        }
        let p2 = circle_collapsed_mapping_torus(&split_seifert(&p)).map_err(|e| e.to_string())?;
        if p2 != p {
            return Err("collapse(split(P)) != P".into());
        }
        Ok(())
    })
}

/// The embedded-sum and open-book-sum pipelines agree on every invariant.
pub fn samedef(seed: u64, count: usize) -> SuiteResult {
    run_suite("samedef", seed, count, |s| {
        let pair = Sampler::new(s).primitive_pair();
        let (d1, d2, spec) = pair.seifert_spec();
        let chords =
            chord_diagram_for_sum(&spec, d1.basis(), d2.basis()).map_err(|e| e.to_string())?;
        let emb = embedded_sum(&d1, &d2, &spec, &chords, SumOrder::LeftFirst)
            .map_err(|e| e.to_string())?;
        let ob1 = primitive_open_book(pair.n1, pair.e1);
        let ob2 = primitive_open_book(pair.n2, pair.e2);
        let cspec = pair.spec_for(ob1.page(), ob2.page());
        let w1 = CylindricalCobordism::from_monodromy(ob1.monodromy().clone());
        let w2 = CylindricalCobordism::from_monodromy(ob2.monodromy().clone());
        let s1 = stiffen(&w1, Ratio::new(2, 3), Ratio::new(3, 4)).map_err(|e| e.to_string())?;
        let s2 = stiffen(&w2, Ratio::new(1, 4), Ratio::new(1, 3)).map_err(|e| e.to_string())?;
        verify_samedef(&s1, &s2, &cspec, &emb).map_err(|e| e.to_string())?;
        // the open-book sum gives the same characteristic polynomial
        let book = open_book_sum(&ob1, &ob2, &cspec).map_err(|e| e.to_string())?;
        if !book.char_poly().eq_up_to_units(&alexander(&emb)) {
            return Err("open-book char poly disagrees with embedded alexander".into());
        }
        Ok(())
    })
}

/// Stallings fiberedness certificates for homogeneous braids.
pub fn stallings(seed: u64, count: usize) -> SuiteResult {
    run_suite("stallings", seed, count, |s| {
        let beta = Sampler::new(s).homogeneous_braid();
        let book = stallings_open_book(&beta).map_err(|e| e.to_string())?;
        let chi = euler_characteristic(book.page());
        if chi != beta.strands as i64 - beta.length() as i64 {
            return Err(format!("page chi {chi} != n - c"));
        }
        if boundary_count(book.page()) != beta.closure_components() {
            return Err("page boundary count differs from the closure's components".into());
        }
        let d = seifert_matrix_bennequin(&beta).map_err(|e| e.to_string())?;
        if !fiberedness_necessary(&d) {
            return Err("fiberedness certificate failed".into());
        }
        if !book.char_poly().eq_up_to_units(&alexander(&d)) {
            return Err("char poly disagrees with alexander".into());
        }
        Ok(())
    })
}

/// Euler additivity of sums and exact additivity of Morse count vectors.
pub fn morse(seed: u64, count: usize) -> SuiteResult {
    run_suite("morse", seed, count, |s| {
        let (m1, m2, spec) = Sampler::new(s).morse_pair();
        let chi1 = euler_characteristic(m1.book.page());
        let chi2 = euler_characteristic(m2.book.page());
        let (page, _) = abstract_sum(&spec).map_err(|e| e.to_string())?;
        if euler_characteristic(&page) != chi1 + chi2 - 1 {
            return Err("chi not additive".into());
        }
        let sum = morse_sum(&m1, &m2, &spec).map_err(|e| e.to_string())?;
        let (n1, n2, ns) = (morse_numbers(&m1), morse_numbers(&m2), morse_numbers(&sum));
        for k in 0..ns.counts.len() {
            if ns.counts[k] != n1.counts[k] + n2.counts[k] {
                return Err("morse counts not additive".into());
            }
        }
        Ok(())
    })
}

/// Skew identity, monodromy consistency, and determinant multiplicativity.
pub fn algebraic(seed: u64, count: usize) -> SuiteResult {
    run_suite("algebraic", seed, count, |s| {
        let mut sampler = Sampler::new(s);
        let pair = sampler.primitive_pair();
        let (d1, d2, spec) = pair.seifert_spec();
        let chords =
            chord_diagram_for_sum(&spec, d1.basis(), d2.basis()).map_err(|e| e.to_string())?;
        for order in [SumOrder::LeftFirst, SumOrder::RightFirst] {
            let emb =
                embedded_sum(&d1, &d2, &spec, &chords, order).map_err(|e| e.to_string())?;
            let v = emb.matrix();
            if &v.sub(&v.transpose()) != emb.basis().intersection() {
                return Err("V - V^T != J".into());
            }
            if v.det() != d1.matrix().det() * d2.matrix().det() {
                return Err("determinant not multiplicative".into());
            }
            if v.det().abs() == 1 {
                let m = homological_monodromy(&emb).map_err(|e| e.to_string())?;
                if !char_poly(&m).eq_up_to_units(&alexander(&emb)) {
                    return Err("monodromy char poly disagrees with alexander".into());
                }
            }
        }
        // a braid-derived Seifert matrix obeys the same identities
        let beta = sampler.homogeneous_braid();
        let d = seifert_matrix_bennequin(&beta).map_err(|e| e.to_string())?;
        if &d.matrix().sub(&d.matrix().transpose()) != d.basis().intersection() {
            return Err("bennequin V - V^T != J".into());
        }
        let m = homological_monodromy(&d).map_err(|e| e.to_string())?;
        if !char_poly(&m).eq_up_to_units(&alexander(&d)) {
            return Err("bennequin monodromy char poly disagrees".into());
        }
        Ok(())
    })
}

pub fn all_suites(seed: u64, counts: &SuiteCounts) -> Vec<SuiteResult> {
    vec![
        roundtrip(seed, counts.roundtrip),
        samedef(seed, counts.samedef),
        stallings(seed, counts.stallings),
        morse(seed, counts.morse),
        algebraic(seed, counts.algebraic),
    ]
}

pub struct SuiteCounts {
    pub roundtrip: usize,
    pub samedef: usize,
    pub stallings: usize,
    pub morse: usize,
    pub algebraic: usize,
}

impl Default for SuiteCounts {
    fn default() -> Self {
        SuiteCounts { roundtrip: 120, samedef: 60, stallings: 60, morse: 60, algebraic: 60 }
    }
}
