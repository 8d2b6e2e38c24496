//! Braid words and their Bennequin surfaces: one disk per strand, one band
//! per letter, bands attached along each strand disk in letter order.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::mapclass::SumSide;
use crate::patching::{abstract_sum, make_patch, SumSpec};
use crate::surface::{build_surface, primitive_s_surface, BandSpec, DiskSpec, RibbonSurface};

/// A braid word on `strands` strands; letter i (nonzero, |i| < strands)
/// stands for the generator sigma_|i| with the sign of i as exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::ParseError("a braid needs at least 2 strands".into()));
        }
        if letters.is_empty() {
            return Err(Error::ParseError("empty braid word".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::ParseError("braid letters must be nonzero".into()));
            }
            if l.unsigned_abs() as usize > strands - 1 {
                return Err(Error::IndexOutOfRange(l, strands));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn length(&self) -> usize {
        self.letters.len()
    }

    /// Number of components of the closure: cycles of the underlying
    /// permutation.
    pub fn closure_components(&self) -> usize {
        let n = self.strands;
        let mut perm: Vec<usize> = (0..n).collect();
        for &l in &self.letters {
            let g = l.unsigned_abs() as usize - 1;
            perm.swap(g, g + 1);
        }
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
        cycles
    }
}

/// Parse whitespace-separated nonzero generator indices.
pub fn parse_braid(strands: usize, text: &str) -> Result<BraidWord> {
    let letters = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| Error::ParseError(format!("invalid braid letter `{tok}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(strands, letters)
}

/// True iff every generator index occurs with a single exponent sign.
pub fn is_homogeneous(beta: &BraidWord) -> bool {
    let mut sign = vec![0i64; beta.strands]; // per generator, first seen sign
    for &l in &beta.letters {
        let g = l.unsigned_abs() as usize;
        let s = l.signum();
        if sign[g] == 0 {
            sign[g] = s;
        } else if sign[g] != s {
            return false;
        }
    }
    true
}

/// Sign of each generator occurrence count, and the occurrence count, for
/// generators 1..strands-1. A generator that never occurs has count 0.
fn generator_stats(beta: &BraidWord) -> Vec<(usize, i64)> {
    let mut stats = vec![(0usize, 0i64); beta.strands - 1];
    for &l in &beta.letters {
        let g = l.unsigned_abs() as usize - 1;
        stats[g].0 += 1;
        stats[g].1 = l.signum();
    }
    stats
}

/// The Bennequin surface of a braid word: strand disks s1..sn, one band tp
/// per letter position p (1-based) joining the two strands it braids, with
/// a full twist of the letter's sign. Band arcs follow letter order along
/// every strand disk.
pub fn bennequin_surface(beta: &BraidWord) -> RibbonSurface {
    let n = beta.strands;
    let mut slots: Vec<Vec<(String, u8)>> = vec![Vec::new(); n];
    let mut bands = Vec::new();
    for (p, &l) in beta.letters.iter().enumerate() {
        let g = l.unsigned_abs() as usize; // joins strands g and g+1
        let id = format!("t{}", p + 1);
        slots[g - 1].push((id.clone(), 0));
        slots[g].push((id.clone(), 1));
        bands.push(BandSpec { id, half_twists: 2 * l.signum() });
    }
    let disks = (0..n)
        .map(|j| DiskSpec { id: format!("s{}", j + 1), slots: std::mem::take(&mut slots[j]) })
        .collect();
    build_surface(disks, bands).expect("bennequin surface construction")
}

/// Decomposition of a homogeneous braid's Bennequin surface into primitive
/// pieces: one piece of type (c_j, e_j) per generator, chained along the
/// shared strand disks with interleavings read from the letter order.
#[derive(Debug, Clone)]
pub struct SDecomposition {
    /// (occurrences, sign) per generator 1..n-1
    pub pieces: Vec<(usize, i64)>,
    /// interleaving between piece j and piece j+1 along strand j+2's disk:
    /// L letters are generator-j bands, R letters generator-(j+1) bands
    pub interleavings: Vec<Vec<SumSide>>,
}

pub fn s_decomposition(beta: &BraidWord) -> Result<SDecomposition> {
    if !is_homogeneous(beta) {
        return Err(Error::NotHomogeneous);
    }
    let stats = generator_stats(beta);
    for (g, &(count, _)) in stats.iter().enumerate() {
        if count == 0 {
            return Err(Error::MissingGenerator(g + 1));
        }
    }
    let interleavings = (0..stats.len().saturating_sub(1))
        .map(|j| {
            // bands of generators j+1 and j+2 (1-based) along strand j+2
            beta.letters
                .iter()
                .filter_map(|&l| {
                    let g = l.unsigned_abs() as usize;
                    if g == j + 1 {
                        Some(SumSide::Left)
                    } else if g == j + 2 {
                        Some(SumSide::Right)
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    Ok(SDecomposition { pieces: stats, interleavings })
}

impl SDecomposition {
    pub fn piece_surface(&self, j: usize) -> RibbonSurface {
        let (c, e) = self.pieces[j];
        primitive_s_surface(c, e)
    }

    /// Left fold of abstract sums over the chain. The running sum is always
    /// patched at the second disk of its most recently attached piece.
    pub fn fold_surface(&self) -> Result<Arc<RibbonSurface>> {
        let mut acc = Arc::new(self.piece_surface(0));
        let mut acc_disk = "D2".to_string();
        for (j, word) in self.interleavings.iter().enumerate() {
            let piece = Arc::new(self.piece_surface(j + 1));
            let left = full_disk_patch(&acc, &acc_disk)?;
            let right = full_disk_patch(&piece, "D1")?;
            let spec = SumSpec { left, right, interleaving: word.clone() };
            acc = abstract_sum(&spec)?.0;
            acc_disk = "r.D2".to_string();
        }
        Ok(acc)
    }
}

/// Fiberedness certificate for a homogeneous braid closure: the left fold
/// of open-book sums over the s-decomposition. The page has the invariants
/// of the Bennequin surface; the monodromy is the ordered composition of
/// the primitive monodromies.
pub fn stallings_open_book(beta: &BraidWord) -> Result<crate::openbook::AbstractOpenBook> {
    use crate::openbook::{open_book_sum, primitive_open_book};
    let decomp = s_decomposition(beta)?;
    let mut acc = primitive_open_book(decomp.pieces[0].0, decomp.pieces[0].1);
    let mut acc_disk = "D2".to_string();
    for (j, word) in decomp.interleavings.iter().enumerate() {
        let piece = primitive_open_book(decomp.pieces[j + 1].0, decomp.pieces[j + 1].1);
        let spec = SumSpec {
            left: full_disk_patch(acc.page(), &acc_disk)?,
            right: full_disk_patch(piece.page(), "D1")?,
            interleaving: word.clone(),
        };
        acc = open_book_sum(&acc, &piece, &spec)?;
        acc_disk = "r.D2".to_string();
    }
    Ok(acc)
}

/// Patch a disk with every band arc attaching.
pub fn full_disk_patch(s: &Arc<RibbonSurface>, disk_id: &str) -> Result<crate::patching::Patch> {
    let di = s
        .disk_index(disk_id)
        .ok_or_else(|| Error::UnknownDisk(disk_id.to_string()))?;
    let arcs: Vec<usize> = (0..s.disks()[di].slots.len()).map(|i| 2 * i).collect();
    make_patch(s, disk_id, &arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{
        boundary_count, euler_characteristic, genus_and_boundary, orientability,
    };

    #[test]
    fn parsing() {
        let beta = parse_braid(3, "-1 2 -1 2").unwrap();
        assert_eq!(beta.letters, vec![-1, 2, -1, 2]);
        assert!(parse_braid(2, "0").is_err());
        assert!(parse_braid(2, "x").is_err());
        assert_eq!(parse_braid(2, "2").unwrap_err(), Error::IndexOutOfRange(2, 2));
        assert!(parse_braid(2, "").is_err());
    }

    #[test]
    fn homogeneity() {
        assert!(is_homogeneous(&parse_braid(3, "-1 2 -1 2").unwrap()));
        assert!(is_homogeneous(&parse_braid(2, "1 1 1").unwrap()));
        assert!(!is_homogeneous(&parse_braid(2, "1 -1").unwrap()));
    }

    #[test]
    fn bennequin_invariants() {
        let trefoil = bennequin_surface(&parse_braid(2, "1 1 1").unwrap());
        assert_eq!(euler_characteristic(&trefoil), -1);
        assert_eq!(boundary_count(&trefoil), 1);
        assert_eq!(genus_and_boundary(&trefoil).unwrap(), (1, 1));

        let fig8 = bennequin_surface(&parse_braid(3, "-1 2 -1 2").unwrap());
        assert_eq!(euler_characteristic(&fig8), -1);
        assert_eq!(boundary_count(&fig8), 1);
        assert_eq!(genus_and_boundary(&fig8).unwrap(), (1, 1));
        assert!(orientability(&fig8).0);

        let disk = bennequin_surface(&parse_braid(2, "1").unwrap());
        assert_eq!(euler_characteristic(&disk), 1);
        assert_eq!(boundary_count(&disk), 1);
    }

    #[test]
    fn closure_component_counts() {
        assert_eq!(parse_braid(2, "1 1 1").unwrap().closure_components(), 1);
        assert_eq!(parse_braid(2, "1 1").unwrap().closure_components(), 2);
        assert_eq!(parse_braid(3, "-1 2 -1 2").unwrap().closure_components(), 1);
        // boundary circuits of the page match closure components
        for (n, w) in [(2, "1 1 1"), (2, "1 1"), (3, "-1 2 -1 2"), (4, "1 2 3 1 2 3")] {
            let beta = parse_braid(n, w).unwrap();
            assert_eq!(
                boundary_count(&bennequin_surface(&beta)),
                beta.closure_components()
            );
        }
    }

    #[test]
    fn decomposition_types() {
        let d = s_decomposition(&parse_braid(3, "-1 2 -1 2").unwrap()).unwrap();
        assert_eq!(d.pieces, vec![(2, -1), (2, 1)]);
        assert_eq!(d.interleavings.len(), 1);
        let d = s_decomposition(&parse_braid(2, "1 1 1").unwrap()).unwrap();
        assert_eq!(d.pieces, vec![(3, 1)]);
        let d = s_decomposition(&parse_braid(3, "1 1 2 2 2").unwrap()).unwrap();
        assert_eq!(d.pieces, vec![(2, 1), (3, 1)]);
        assert_eq!(
            s_decomposition(&parse_braid(2, "1 -1").unwrap()).unwrap_err(),
            Error::NotHomogeneous
        );
        assert_eq!(
            s_decomposition(&parse_braid(3, "1 1").unwrap()).unwrap_err(),
            Error::MissingGenerator(2)
        );
    }

    #[test]
    fn stallings_certificate_cross_pipeline() {
        use crate::embedded::{alexander, fiberedness_necessary, seifert_matrix_bennequin};
        for (n, w) in [
            (2, "1 1 1"),
            (3, "-1 2 -1 2"),
            (3, "1 1 2 2 2"),
            (4, "1 2 3 1 2 3"),
            (4, "-1 -1 2 -3 2 -3 -1"),
            (5, "1 2 -3 4 1 2 -3 4"),
        ] {
            let beta = parse_braid(n, w).unwrap();
            let book = stallings_open_book(&beta).unwrap();
            let d = seifert_matrix_bennequin(&beta).unwrap();
            assert!(
                book.char_poly().eq_up_to_units(&alexander(&d)),
                "braid {w}: {:?} vs {:?}",
                book.char_poly(),
                alexander(&d)
            );
            assert!(fiberedness_necessary(&d), "braid {w}");
            assert_eq!(
                crate::surface::euler_characteristic(book.page()),
                n as i64 - beta.length() as i64
            );
        }
        let tref = stallings_open_book(&parse_braid(2, "1 1 1").unwrap()).unwrap();
        assert!(tref.char_poly().eq_up_to_units(&crate::poly::IntPoly::from_coeffs(vec![
            1, -1, 1
        ])));
        assert_eq!(
            stallings_open_book(&parse_braid(2, "1 -1").unwrap()).unwrap_err(),
            Error::NotHomogeneous
        );
    }

    #[test]
    fn fold_matches_bennequin_invariants() {
        for (n, w) in [
            (3, "-1 2 -1 2"),
            (2, "1 1 1"),
            (3, "1 1 2 2 2"),
            (4, "1 2 3 1 2 3"),
            (4, "-1 -1 2 -3 2 -3 -1"),
        ] {
            let beta = parse_braid(n, w).unwrap();
            let page = s_decomposition(&beta).unwrap().fold_surface().unwrap();
            let direct = bennequin_surface(&beta);
            assert_eq!(euler_characteristic(&page), euler_characteristic(&direct));
            assert_eq!(boundary_count(&page), boundary_count(&direct));
            assert_eq!(
                genus_and_boundary(&page).unwrap(),
                genus_and_boundary(&direct).unwrap()
            );
            assert_eq!(
                euler_characteristic(&page),
                n as i64 - beta.length() as i64
            );
        }
    }
}
