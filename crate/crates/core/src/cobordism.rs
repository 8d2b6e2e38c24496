//! Cylindrical cobordisms, Seifert pairs, stiffenings, and the sum of
//! stiffened cylindrical cobordisms.
//!
//! Cobordisms are kept intensionally as (base, monodromy): every
//! cylindrical cobordism in scope is the splitting of a Seifert pair, so
//! collapsing and splitting are exact inverses of the representation. The
//! directing segment is symbolic; only the rational core interval of a
//! stiffening is tracked, because the sum's order constraint lives there.

use std::sync::Arc;

use num_rational::Ratio;

use crate::embedded::{alexander, SeifertData};
use crate::error::{Error, Result};
use crate::mapclass::{
    compose, extend_by_identity, homology_basis, HomologyData, MappingClass, SumSide,
};
use crate::patching::{abstract_sum, sum_homology, SumSpec};
use crate::poly::IntPoly;
use crate::surface::{boundary_count, euler_characteristic, genus_and_boundary, RibbonSurface};

/// An endobordism of its base, directed by a symbolic unit segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylindricalCobordism {
    monodromy: MappingClass,
}

impl CylindricalCobordism {
    pub fn from_monodromy(monodromy: MappingClass) -> CylindricalCobordism {
        CylindricalCobordism { monodromy }
    }

    pub fn base(&self) -> &Arc<RibbonSurface> {
        self.monodromy.homology().surface()
    }

    pub fn homology(&self) -> &Arc<HomologyData> {
        self.monodromy.homology()
    }

    pub fn monodromy(&self) -> &MappingClass {
        &self.monodromy
    }
}

/// The trivial cobordism over a base.
pub fn cylinder(base: &Arc<RibbonSurface>) -> Result<CylindricalCobordism> {
    let h = Arc::new(homology_basis(base)?);
    Ok(CylindricalCobordism { monodromy: MappingClass::identity(&h) })
}

/// W2 after W1: traverse `w1`'s segment first, then `w2`'s.
pub fn compose_cobordisms(
    w1: &CylindricalCobordism,
    w2: &CylindricalCobordism,
) -> Result<CylindricalCobordism> {
    let monodromy =
        compose(&w2.monodromy, &w1.monodromy).map_err(|_| Error::BaseMismatch)?;
    Ok(CylindricalCobordism { monodromy })
}

/// A Seifert hypersurface with its monodromy, tagged with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertPair {
    monodromy: MappingClass,
    pub tag: &'static str,
}

impl SeifertPair {
    pub fn hypersurface(&self) -> &Arc<RibbonSurface> {
        self.monodromy.homology().surface()
    }

    pub fn monodromy(&self) -> &MappingClass {
        &self.monodromy
    }
}

pub const COLLAPSED_TAG: &str = "circle-collapsed mapping torus";

/// Collapse the cylindrical boundary circles of the mapping torus of W.
pub fn circle_collapsed_mapping_torus(w: &CylindricalCobordism) -> Result<SeifertPair> {
    crate::openbook::check_page_boundary(w.base())?;
    Ok(SeifertPair { monodromy: w.monodromy.clone(), tag: COLLAPSED_TAG })
}

/// Split a Seifert pair along its hypersurface, undoing the collapse. The
/// intermediate radial blow-up is invisible at this symbolic level.
pub fn split_seifert(p: &SeifertPair) -> CylindricalCobordism {
    CylindricalCobordism { monodromy: p.monodromy.clone() }
}

/// A cobordism with a chosen stiffening, recorded by the rational core
/// interval of its directing segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stiffening {
    pub host: CylindricalCobordism,
    pub core: (Ratio<i64>, Ratio<i64>),
}

pub fn stiffen(w: &CylindricalCobordism, lo: Ratio<i64>, hi: Ratio<i64>) -> Result<Stiffening> {
    let zero = Ratio::new(0, 1);
    let one = Ratio::new(1, 1);
    if !(zero < lo && lo < hi && hi < one) {
        return Err(Error::DegenerateCore);
    }
    Ok(Stiffening { host: w.clone(), core: (lo, hi) })
}

/// Sum of stiffened cylindrical cobordisms: the first core must lie
/// strictly after the second. Base = abstract sum, monodromy = extension
/// of the first composed after the second, core = convex hull.
pub fn sum_stiffened(s1: &Stiffening, s2: &Stiffening, spec: &SumSpec) -> Result<Stiffening> {
    if s2.core.1 >= s1.core.0 {
        return Err(Error::CoreOrderViolation);
    }
    let (sum, _) = abstract_sum(spec)?;
    let h = sum_homology(&sum, s1.host.homology(), s2.host.homology())?;
    let r1 = s1.host.homology().rank();
    let phi1 = extend_by_identity(s1.host.monodromy(), &h, SumSide::Left, r1)?;
    let phi2 = extend_by_identity(s2.host.monodromy(), &h, SumSide::Right, r1)?;
    let monodromy = compose(&phi1, &phi2)?;
    Ok(Stiffening {
        host: CylindricalCobordism { monodromy },
        core: (s2.core.0, s1.core.1),
    })
}

/// Invariant-level comparison of the cobordism sum against an embedded sum
/// of the same summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamedefReport {
    pub chi: i64,
    pub boundary: usize,
    pub genus: u64,
    pub alexander: IntPoly,
    pub monodromy_char_poly: IntPoly,
}

/// Check that the two pipelines agree on chi, boundary count, genus, and
/// the Alexander polynomial vs the monodromy's characteristic polynomial.
pub fn verify_samedef(
    s1: &Stiffening,
    s2: &Stiffening,
    spec: &SumSpec,
    embedded_result: &SeifertData,
) -> Result<SamedefReport> {
    let summed = sum_stiffened(s1, s2, spec)?;
    let base = summed.host.base();
    let emb = embedded_result.surface();
    let chi = euler_characteristic(base);
    if chi != euler_characteristic(emb) {
        return Err(Error::InvariantMismatch(format!(
            "chi {chi} vs {}",
            euler_characteristic(emb)
        )));
    }
    let boundary = boundary_count(base);
    if boundary != boundary_count(emb) {
        return Err(Error::InvariantMismatch(format!(
            "boundary {boundary} vs {}",
            boundary_count(emb)
        )));
    }
    let (genus, _) = genus_and_boundary(base)?;
    let (genus_e, _) = genus_and_boundary(emb)?;
    if genus != genus_e {
        return Err(Error::InvariantMismatch(format!("genus {genus} vs {genus_e}")));
    }
    let delta = alexander(embedded_result);
    let charpoly = summed.host.monodromy().char_poly();
    if !delta.eq_up_to_units(&charpoly) {
        return Err(Error::InvariantMismatch(format!(
            "alexander [{}] vs char poly [{}]",
            delta.coeff_string(),
            charpoly.coeff_string()
        )));
    }
    Ok(SamedefReport {
        chi,
        boundary,
        genus,
        alexander: delta,
        monodromy_char_poly: charpoly.normalize_units(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::full_disk_patch;
    use crate::embedded::{chord_diagram_for_sum, embedded_sum, SumOrder};
    use crate::mapclass::{from_word, TwistLetter};
    use crate::openbook::primitive_open_book;
    use crate::patching::parse_interleaving;
    use crate::surface::primitive_s_surface;

    fn ratio(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    fn hopf_cobordism(sign: i64) -> CylindricalCobordism {
        let ob = primitive_open_book(2, sign);
        CylindricalCobordism::from_monodromy(ob.monodromy().clone())
    }

    #[test]
    fn cylinder_is_identity() {
        let s = Arc::new(primitive_s_surface(3, 1));
        let cyl = cylinder(&s).unwrap();
        assert!(cyl.monodromy().is_identity());
        let w = hopf_cobordism(1);
        // identity cobordism over the same basis
        let c = CylindricalCobordism::from_monodromy(MappingClass::identity(w.homology()));
        assert_eq!(compose_cobordisms(&w, &c).unwrap().monodromy(), w.monodromy());
        assert_eq!(compose_cobordisms(&c, &w).unwrap().monodromy(), w.monodromy());
        assert_eq!(
            compose_cobordisms(&cyl, &cyl).unwrap().monodromy().matrix(),
            cyl.monodromy().matrix()
        );
    }

    #[test]
    fn composition_concatenates_words_and_is_associative() {
        let s = Arc::new(primitive_s_surface(3, 1));
        let h = crate::embedded::primitive_basis(&s, 3).unwrap();
        let t = |i: usize, sign: i64| {
            let mut coords = vec![0i64; 2];
            coords[i] = 1;
            CylindricalCobordism::from_monodromy(from_word(
                &h,
                vec![TwistLetter { coords, sign }],
            ))
        };
        let (a, b, c) = (t(0, 1), t(1, -1), t(0, -1));
        let ab = compose_cobordisms(&a, &b).unwrap();
        assert_eq!(ab.monodromy().word().len(), 2);
        let left = compose_cobordisms(&ab, &c).unwrap();
        let right = compose_cobordisms(&a, &compose_cobordisms(&b, &c).unwrap()).unwrap();
        assert_eq!(left.monodromy().matrix(), right.monodromy().matrix());
        // mismatched bases are rejected
        let other = hopf_cobordism(1);
        assert_eq!(compose_cobordisms(&a, &other).unwrap_err(), Error::BaseMismatch);
    }

    #[test]
    fn collapse_split_round_trip() {
        for w in [
            hopf_cobordism(1),
            hopf_cobordism(-1),
            cylinder(&Arc::new(primitive_s_surface(4, -1))).unwrap(),
            CylindricalCobordism::from_monodromy(
                primitive_open_book(5, 1).monodromy().clone(),
            ),
        ] {
            let p = circle_collapsed_mapping_torus(&w).unwrap();
            assert_eq!(p.tag, COLLAPSED_TAG);
            assert_eq!(split_seifert(&p), w);
            assert_eq!(circle_collapsed_mapping_torus(&split_seifert(&p)).unwrap(), p);
            assert_eq!(
                euler_characteristic(p.hypersurface()),
                euler_characteristic(w.base())
            );
            assert_eq!(boundary_count(p.hypersurface()), boundary_count(w.base()));
        }
    }

    #[test]
    fn stiffening_validation() {
        let w = hopf_cobordism(1);
        assert!(stiffen(&w, ratio(1, 3), ratio(2, 3)).is_ok());
        assert_eq!(stiffen(&w, ratio(0, 1), ratio(1, 2)).unwrap_err(), Error::DegenerateCore);
        assert_eq!(stiffen(&w, ratio(1, 2), ratio(1, 2)).unwrap_err(), Error::DegenerateCore);
        assert_eq!(stiffen(&w, ratio(1, 2), ratio(3, 2)).unwrap_err(), Error::DegenerateCore);
    }

    fn hopf_spec(w1: &CylindricalCobordism, w2: &CylindricalCobordism) -> SumSpec {
        SumSpec {
            left: full_disk_patch(w1.base(), "D1").unwrap(),
            right: full_disk_patch(w2.base(), "D1").unwrap(),
            interleaving: parse_interleaving("LRLR").unwrap(),
        }
    }

    #[test]
    fn stiffened_sum_trefoil() {
        let w1 = hopf_cobordism(1);
        let w2 = hopf_cobordism(1);
        let spec = hopf_spec(&w1, &w2);
        let s1 = stiffen(&w1, ratio(2, 3), ratio(3, 4)).unwrap();
        let s2 = stiffen(&w2, ratio(1, 4), ratio(1, 3)).unwrap();
        let sum = sum_stiffened(&s1, &s2, &spec).unwrap();
        assert!(sum
            .host
            .monodromy()
            .char_poly()
            .eq_up_to_units(&IntPoly::from_coeffs(vec![1, -1, 1])));
        assert_eq!(sum.core, (ratio(1, 4), ratio(3, 4)));
        // core order violated the other way around
        assert_eq!(sum_stiffened(&s2, &s1, &spec).unwrap_err(), Error::CoreOrderViolation);
        // result independent of the core choice
        let s1b = stiffen(&w1, ratio(9, 10), ratio(99, 100)).unwrap();
        let s2b = stiffen(&w2, ratio(1, 100), ratio(1, 10)).unwrap();
        let sum_b = sum_stiffened(&s1b, &s2b, &spec).unwrap();
        assert_eq!(sum_b.host.monodromy().matrix(), sum.host.monodromy().matrix());
    }

    #[test]
    fn samedef_anchors() {
        for (e1, e2, expect) in [(1, 1, vec![1, -1, 1]), (1, -1, vec![1, -3, 1])] {
            let d1 = crate::embedded::seifert_matrix_primitive(2, e1);
            let d2 = crate::embedded::seifert_matrix_primitive(2, e2);
            let spec = SumSpec {
                left: full_disk_patch(d1.surface(), "D1").unwrap(),
                right: full_disk_patch(d2.surface(), "D1").unwrap(),
                interleaving: parse_interleaving("LRLR").unwrap(),
            };
            let chords = chord_diagram_for_sum(&spec, d1.basis(), d2.basis()).unwrap();
            let emb = embedded_sum(&d1, &d2, &spec, &chords, SumOrder::LeftFirst).unwrap();
            // cobordism side over the same bases
            let ob1 = primitive_open_book(2, e1);
            let ob2 = primitive_open_book(2, e2);
            let w1 = CylindricalCobordism::from_monodromy(ob1.monodromy().clone());
            let w2 = CylindricalCobordism::from_monodromy(ob2.monodromy().clone());
            let cspec = SumSpec {
                left: full_disk_patch(w1.base(), "D1").unwrap(),
                right: full_disk_patch(w2.base(), "D1").unwrap(),
                interleaving: parse_interleaving("LRLR").unwrap(),
            };
            let s1 = stiffen(&w1, ratio(2, 3), ratio(3, 4)).unwrap();
            let s2 = stiffen(&w2, ratio(1, 4), ratio(1, 3)).unwrap();
            let report = verify_samedef(&s1, &s2, &cspec, &emb).unwrap();
            assert_eq!(report.chi, -1);
            assert_eq!(report.boundary, 1);
            assert_eq!(report.genus, 1);
            assert!(report.alexander.eq_up_to_units(&IntPoly::from_coeffs(expect.clone())));
            assert!(report.monodromy_char_poly.eq_up_to_units(&report.alexander));
        }
    }
}
