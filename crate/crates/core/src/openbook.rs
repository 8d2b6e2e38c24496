//! Abstract and Morse open books, and their sums: page sum by patching,
//! monodromy composition (second factor first), and Morse critical-point
//! bookkeeping under disjoint union.

use std::sync::Arc;

use num_rational::Ratio;

use crate::embedded::primitive_basis;
use crate::error::{Error, Result};
use crate::mapclass::{
    compose, extend_by_identity, from_word, homology_basis, HomologyData, MappingClass, SumSide,
    TwistLetter,
};
use crate::patching::{abstract_sum, sum_homology, SumSpec};
use crate::poly::IntPoly;
use crate::surface::{boundary_walk, primitive_s_surface, BoundaryArc, RibbonSurface};

/// An open book given by its page and monodromy.
#[derive(Debug, Clone)]
pub struct AbstractOpenBook {
    monodromy: MappingClass,
}

impl AbstractOpenBook {
    pub fn page(&self) -> &Arc<RibbonSurface> {
        self.monodromy.homology().surface()
    }

    pub fn homology(&self) -> &Arc<HomologyData> {
        self.monodromy.homology()
    }

    pub fn monodromy(&self) -> &MappingClass {
        &self.monodromy
    }

    pub fn char_poly(&self) -> IntPoly {
        self.monodromy.char_poly()
    }
}

/// Every component of a page must have boundary. Disk-band surfaces always
/// do; the check guards future page models.
pub(crate) fn check_page_boundary(page: &Arc<RibbonSurface>) -> Result<()> {
    let circuits = boundary_walk(page);
    let mut touched = vec![false; page.disks().len()];
    for c in &circuits {
        for arc in &c.arcs {
            match arc {
                BoundaryArc::DiskArc { disk, .. } | BoundaryArc::FullDisk { disk } => {
                    touched[*disk] = true
                }
                BoundaryArc::BandSide { band, .. } => {
                    touched[page.bands()[*band].ends[0].0] = true;
                    touched[page.bands()[*band].ends[1].0] = true;
                }
            }
        }
    }
    // a component whose disks never appear on any boundary circuit is closed
    let comp = crate::surface::disk_components(page);
    let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..ncomp {
        if !(0..page.disks().len()).any(|d| comp[d] == c && touched[d]) {
            return Err(Error::ClosedComponent);
        }
    }
    Ok(())
}

/// Build an open book from a page homology and a twist word.
pub fn open_book(h: &Arc<HomologyData>, word: Vec<TwistLetter>) -> Result<AbstractOpenBook> {
    check_page_boundary(h.surface())?;
    Ok(AbstractOpenBook { monodromy: from_word(h, word) })
}

pub fn open_book_from_monodromy(monodromy: MappingClass) -> Result<AbstractOpenBook> {
    check_page_boundary(monodromy.homology().surface())?;
    Ok(AbstractOpenBook { monodromy })
}

/// The primitive open book of type (n, e): page the primitive s-surface,
/// monodromy the product of e-twists along the consecutive-band cycles.
/// The mirror (e = -1) is the inverse mapping class, so its twists apply
/// in the reversed cycle order.
pub fn primitive_open_book(n: usize, sign: i64) -> AbstractOpenBook {
    assert!(n >= 1 && (sign == 1 || sign == -1));
    let s = Arc::new(primitive_s_surface(n, sign));
    let h = primitive_basis(&s, n).expect("primitive basis");
    let mut word: Vec<TwistLetter> = (0..n - 1)
        .map(|i| {
            let mut coords = vec![0i64; n - 1];
            coords[i] = 1;
            TwistLetter { coords, sign }
        })
        .collect();
    if sign == -1 {
        word.reverse();
    }
    AbstractOpenBook { monodromy: from_word(&h, word) }
}

/// Sum of open books: sum of pages, composition of the extended
/// monodromies with the right factor acting first.
pub fn open_book_sum(
    ob1: &AbstractOpenBook,
    ob2: &AbstractOpenBook,
    spec: &SumSpec,
) -> Result<AbstractOpenBook> {
    let (sum, _) = abstract_sum(spec)?;
    let h = sum_homology(&sum, ob1.homology(), ob2.homology())?;
    let r1 = ob1.homology().rank();
    let phi1 = extend_by_identity(ob1.monodromy(), &h, SumSide::Left, r1)?;
    let phi2 = extend_by_identity(ob2.monodromy(), &h, SumSide::Right, r1)?;
    let monodromy = compose(&phi1, &phi2)?;
    Ok(AbstractOpenBook { monodromy })
}

/// The trivial open book: a bare disk page with identity monodromy.
pub fn trivial_open_book() -> AbstractOpenBook {
    let s = Arc::new(
        crate::surface::build_surface(
            vec![crate::surface::DiskSpec { id: "D".into(), slots: vec![] }],
            vec![],
        )
        .unwrap(),
    );
    let h = Arc::new(homology_basis(&s).unwrap());
    AbstractOpenBook { monodromy: MappingClass::identity(&h) }
}

/// Rational angle on the circle, strictly between 0 and 1.
pub type Angle = Ratio<i64>;

/// An open book whose fibration map is allowed Morse critical points,
/// recorded as (index, critical value angle) pairs.
#[derive(Debug, Clone)]
pub struct MorseOpenBook {
    pub book: AbstractOpenBook,
    pub ambient_dim: usize,
    pub critical_points: Vec<(usize, Angle)>,
}

pub fn morse_open_book(
    book: AbstractOpenBook,
    ambient_dim: usize,
    critical_points: Vec<(usize, Angle)>,
) -> Result<MorseOpenBook> {
    for &(k, a) in &critical_points {
        if k == 0 || k > ambient_dim - 1 {
            return Err(Error::IndexOutOfRange(k as i64, ambient_dim));
        }
        if a <= Ratio::new(0, 1) || a >= Ratio::new(1, 1) {
            return Err(Error::AngleCollision);
        }
    }
    Ok(MorseOpenBook { book, ambient_dim, critical_points })
}

/// Sum of Morse open books: the page/monodromy sum plus the disjoint union
/// of critical points, with the second book's angles squeezed into (0,1/2)
/// and the first book's into (1/2,1).
pub fn morse_sum(m1: &MorseOpenBook, m2: &MorseOpenBook, spec: &SumSpec) -> Result<MorseOpenBook> {
    if m1.ambient_dim != m2.ambient_dim {
        return Err(Error::NotSummable("ambient dimensions differ".into()));
    }
    let book = open_book_sum(&m1.book, &m2.book, spec)?;
    let half = Ratio::new(1i64, 2);
    let mut critical_points: Vec<(usize, Angle)> =
        m2.critical_points.iter().map(|&(k, a)| (k, a * half)).collect();
    critical_points.extend(m1.critical_points.iter().map(|&(k, a)| (k, half + a * half)));
    let mut angles: Vec<Angle> = critical_points.iter().map(|&(_, a)| a).collect();
    angles.sort();
    if angles.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::AngleCollision);
    }
    Ok(MorseOpenBook { book, ambient_dim: m1.ambient_dim, critical_points })
}

/// Upper-bound witnesses for the Morse numbers: counts per index 1..w-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseNumbers {
    pub counts: Vec<u64>,
}

impl MorseNumbers {
    pub fn is_honest(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }
}

pub fn morse_numbers(m: &MorseOpenBook) -> MorseNumbers {
    let mut counts = vec![0u64; m.ambient_dim.saturating_sub(1)];
    for &(k, _) in &m.critical_points {
        counts[k - 1] += 1;
    }
    MorseNumbers { counts }
}
