//! Seeded generators for the randomized verification suites. All
//! randomness flows through one ChaCha stream so every suite is exactly
//! reproducible from a single seed.

use std::sync::Arc;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::cobordism::CylindricalCobordism;
use crate::embedded::{seifert_matrix_primitive, SeifertData};
use crate::mapclass::{from_word, homology_basis, SumSide, TwistLetter};
use crate::openbook::{morse_open_book, primitive_open_book, MorseOpenBook};
use crate::patching::{make_patch, SumSpec};
use crate::surface::primitive_s_surface;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Homogeneous braid on 2..=5 strands with at most 10 letters and every
    /// generator present.
    pub fn homogeneous_braid(&mut self) -> BraidWord {
        let n = self.rng.gen_range(2..=5usize);
        let signs: Vec<i64> = (0..n - 1).map(|_| if self.rng.gen() { 1 } else { -1 }).collect();
        let extra = self.rng.gen_range(0..=(10 - (n - 1)));
        let mut letters: Vec<i64> = (1..n).map(|g| g as i64 * signs[g - 1]).collect();
        for _ in 0..extra {
            let g = self.rng.gen_range(1..n);
            letters.push(g as i64 * signs[g - 1]);
        }
        letters.shuffle(&mut self.rng);
        BraidWord::new(n, letters).expect("sampled braid")
    }

    /// Random cylindrical cobordism: a primitive or Bennequin base with a
    /// twist word over its spanning-forest basis.
    pub fn cobordism(&mut self) -> CylindricalCobordism {
        let base = if self.rng.gen() {
            let n = self.rng.gen_range(2..=6usize);
            let e = if self.rng.gen() { 1 } else { -1 };
            Arc::new(primitive_s_surface(n, e))
        } else {
            Arc::new(crate::braid::bennequin_surface(&self.homogeneous_braid()))
        };
        let h = Arc::new(homology_basis(&base).expect("orientable base"));
        let r = h.rank();
        let len = self.rng.gen_range(0..=6usize);
        let word = (0..len)
            .filter_map(|_| {
                if r == 0 {
                    return None;
                }
                let mut coords = vec![0i64; r];
                coords[self.rng.gen_range(0..r)] = 1;
                if r > 1 && self.rng.gen_ratio(1, 3) {
                    coords[self.rng.gen_range(0..r)] += 1;
                }
                Some(TwistLetter { coords, sign: if self.rng.gen() { 1 } else { -1 } })
            })
            .collect();
        CylindricalCobordism::from_monodromy(from_word(&h, word))
    }

    /// Two primitive types with a random interleaving and random patch
    /// disks; everything needed to drive both sum pipelines.
    pub fn primitive_pair(&mut self) -> PrimitivePair {
        let pick = |rng: &mut ChaCha8Rng| {
            (rng.gen_range(2..=6usize), if rng.gen() { 1i64 } else { -1 })
        };
        let (n1, e1) = pick(&mut self.rng);
        let (n2, e2) = pick(&mut self.rng);
        let mut word: Vec<SumSide> = std::iter::repeat(SumSide::Left)
            .take(n1)
            .chain(std::iter::repeat(SumSide::Right).take(n2))
            .collect();
        word.shuffle(&mut self.rng);
        let left_disk = if self.rng.gen() { "D1" } else { "D2" };
        let right_disk = if self.rng.gen() { "D1" } else { "D2" };
        PrimitivePair { n1, e1, n2, e2, word, left_disk, right_disk }
    }

    /// Two Morse open books with a random summable spec over their pages.
    pub fn morse_pair(&mut self) -> (MorseOpenBook, MorseOpenBook, SumSpec) {
        let m1 = self.morse_instance();
        let m2 = self.morse_instance();
        let full = |page: &Arc<crate::surface::RibbonSurface>| {
            let di = page.disk_index("D1").unwrap();
            let arcs: Vec<usize> = (0..page.disks()[di].slots.len()).map(|i| 2 * i).collect();
            make_patch(page, "D1", &arcs).unwrap()
        };
        let left = full(m1.book.page());
        let right = full(m2.book.page());
        let mut word: Vec<SumSide> = std::iter::repeat(SumSide::Left)
            .take(left.attaching_arcs().len())
            .chain(std::iter::repeat(SumSide::Right).take(right.attaching_arcs().len()))
            .collect();
        word.shuffle(&mut self.rng);
        (m1, m2, SumSpec { left, right, interleaving: word })
    }

    /// A Morse open book over a primitive page with a few critical points.
    pub fn morse_instance(&mut self) -> MorseOpenBook {
        let n = self.rng.gen_range(2..=5usize);
        let e = if self.rng.gen() { 1 } else { -1 };
        let book = primitive_open_book(n, e);
        let count = self.rng.gen_range(0..=4usize);
        let mut numerators: Vec<i64> = Vec::new();
        while numerators.len() < count {
            let x = self.rng.gen_range(1..1000i64);
            if !numerators.contains(&x) {
                numerators.push(x);
            }
        }
        let critical = numerators
            .into_iter()
            .map(|num| (self.rng.gen_range(1..=2usize), Ratio::new(num, 1000)))
            .collect();
        morse_open_book(book, 3, critical).expect("sampled morse book")
    }
}

/// Descriptor of a random summable pair of primitive s-surfaces.
#[derive(Debug, Clone)]
pub struct PrimitivePair {
    pub n1: usize,
    pub e1: i64,
    pub n2: usize,
    pub e2: i64,
    pub word: Vec<SumSide>,
    pub left_disk: &'static str,
    pub right_disk: &'static str,
}

impl PrimitivePair {
    /// Seifert data of both summands plus the sum spec over their surfaces.
    pub fn seifert_spec(&self) -> (SeifertData, SeifertData, SumSpec) {
        let d1 = seifert_matrix_primitive(self.n1, self.e1);
        let d2 = seifert_matrix_primitive(self.n2, self.e2);
        let spec = self.spec_for(d1.surface(), d2.surface());
        (d1, d2, spec)
    }

    /// Sum spec over any two realizations of the pair's surfaces.
    pub fn spec_for(
        &self,
        left: &Arc<crate::surface::RibbonSurface>,
        right: &Arc<crate::surface::RibbonSurface>,
    ) -> SumSpec {
        let full = |s: &Arc<crate::surface::RibbonSurface>, id: &str| {
            let di = s.disk_index(id).unwrap();
            let arcs: Vec<usize> = (0..s.disks()[di].slots.len()).map(|i| 2 * i).collect();
            make_patch(s, id, &arcs).unwrap()
        };
        SumSpec {
            left: full(left, self.left_disk),
            right: full(right, self.right_disk),
            interleaving: self.word.clone(),
        }
    }
}
