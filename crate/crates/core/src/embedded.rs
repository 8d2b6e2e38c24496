//! Embedded Seifert data: Seifert matrices for the library's surface
//! families, block-assembled matrices for sums with a combinatorial
//! coupling block, Alexander polynomials and homological monodromies.
//!
//! All matrix conventions are pinned by two anchors: plumbing two positive
//! Hopf bands must give t^2 - t + 1 and the mixed plumbing t^2 - 3t + 1.
//! With the skew identity V - V^T = J this fixes every remaining sign.

use std::sync::Arc;

use crate::braid::{bennequin_surface, BraidWord};
use crate::error::{Error, Result};
use crate::linalg::IntMat;
use crate::mapclass::{homology_with_basis, HomologyData, SumSide, Walk};
use crate::patching::{abstract_sum, sum_homology, SumSpec};
use crate::poly::{alexander_det, char_poly, IntPoly};
use crate::surface::{primitive_s_surface, RibbonSurface};

/// A Seifert matrix over a homology basis, with V - V^T = J enforced.
#[derive(Debug, Clone)]
pub struct SeifertData {
    basis: Arc<HomologyData>,
    v: IntMat,
}

impl SeifertData {
    pub fn new(basis: Arc<HomologyData>, v: IntMat) -> Result<SeifertData> {
        if &v.sub(&v.transpose()) != basis.intersection() {
            return Err(Error::SkewMismatch);
        }
        Ok(SeifertData { basis, v })
    }

    pub fn surface(&self) -> &Arc<RibbonSurface> {
        self.basis.surface()
    }

    pub fn basis(&self) -> &Arc<HomologyData> {
        &self.basis
    }

    pub fn matrix(&self) -> &IntMat {
        &self.v
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }
}

/// Assemble a Seifert matrix from the intersection form: for each coupled
/// pair i < k the pairing survives on exactly one side of the diagonal,
/// chosen by `up`. Positive bands push the pairing above the diagonal,
/// negative bands below (mirroring transposes the matrix).
fn seifert_from_form(diag: &[i64], j: &IntMat, up: impl Fn(usize, usize) -> bool) -> IntMat {
    let r = diag.len();
    let mut v = IntMat::zeros(r, r);
    for i in 0..r {
        v[(i, i)] = diag[i];
        for k in i + 1..r {
            if j[(i, k)] == 0 {
                continue;
            }
            if up(i, k) {
                v[(i, k)] = j[(i, k)];
            } else {
                v[(k, i)] = j[(k, i)];
            }
        }
    }
    v
}

/// Consecutive-band cycle basis of a primitive s-surface: cycle i runs out
/// through band i+1 and back through band i+2.
pub fn primitive_basis(s: &Arc<RibbonSurface>, n: usize) -> Result<Arc<HomologyData>> {
    let basis = (0..n - 1)
        .map(|i| {
            Walk::from_band_ids(s, &[(&format!("b{}", i + 1), true), (&format!("b{}", i + 2), false)])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Arc::new(homology_with_basis(s, basis)?))
}

/// Seifert matrix of the primitive s-surface of type (n, e) over the
/// consecutive-band basis: each cycle bounds an annulus of e full twists.
pub fn seifert_matrix_primitive(n: usize, sign: i64) -> SeifertData {
    assert!(n >= 1 && (sign == 1 || sign == -1));
    let s = Arc::new(primitive_s_surface(n, sign));
    let basis = primitive_basis(&s, n).expect("primitive basis");
    let diag = vec![-sign; n - 1];
    let v = seifert_from_form(&diag, basis.intersection(), |_, _| sign == 1);
    SeifertData::new(basis, v).expect("primitive seifert matrix")
}

/// Basis of a Bennequin surface: for each generator, cycles through
/// consecutive occurrences of that generator.
pub fn bennequin_basis(beta: &BraidWord, s: &Arc<RibbonSurface>) -> Result<Arc<HomologyData>> {
    let mut basis = Vec::new();
    for g in 1..beta.strands {
        let occ: Vec<usize> = (0..beta.letters.len())
            .filter(|&p| beta.letters[p].unsigned_abs() as usize == g)
            .collect();
        for w in occ.windows(2) {
            basis.push(Walk::from_band_ids(
                s,
                &[(&format!("t{}", w[0] + 1), true), (&format!("t{}", w[1] + 1), false)],
            )?);
        }
    }
    Ok(Arc::new(homology_with_basis(s, basis)?))
}

/// Seifert matrix of the Bennequin surface over the consecutive-occurrence
/// basis. Each cycle's self-pairing is minus the mean of its two letter
/// signs (an annulus of that many full twists). Two consecutive cycles of
/// the same generator share a band; their pairing sits above the diagonal
/// when that band is positive, below when negative. Cycles of adjacent
/// generators pair above the diagonal (lower generator row).
pub fn seifert_matrix_bennequin(beta: &BraidWord) -> Result<SeifertData> {
    for g in 1..beta.strands {
        if !beta.letters.iter().any(|l| l.unsigned_abs() as usize == g) {
            return Err(Error::DisconnectedSurface);
        }
    }
    let s = Arc::new(bennequin_surface(beta));
    let basis = bennequin_basis(beta, &s)?;
    let mut diag = Vec::new();
    let mut generator = Vec::new();
    // sign of the band a cycle shares with the previous cycle of its
    // generator (the cycle's first letter); meaningless for first cycles
    let mut shared_positive = Vec::new();
    for g in 1..beta.strands {
        let occ: Vec<usize> = (0..beta.letters.len())
            .filter(|&p| beta.letters[p].unsigned_abs() as usize == g)
            .collect();
        for w in occ.windows(2) {
            diag.push(-(beta.letters[w[0]].signum() + beta.letters[w[1]].signum()) / 2);
            generator.push(g);
            shared_positive.push(beta.letters[w[0]] > 0);
        }
    }
    let v = seifert_from_form(&diag, basis.intersection(), |i, k| {
        if generator[i] == generator[k] && k == i + 1 {
            shared_positive[k]
        } else {
            true
        }
    });
    SeifertData::new(basis, v)
}

/// Chords traced by the basis cycles of the two summands across the patch
/// disk, as directed pairs of positions in the interleaving word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    pub left: Vec<Vec<(usize, usize)>>,
    pub right: Vec<Vec<(usize, usize)>>,
}

/// Derive the chord diagram of a sum from the cycle walks themselves: each
/// visit of a basis cycle to its patch disk becomes one directed chord from
/// the entry arc's word position to the exit arc's word position.
pub fn chord_diagram_for_sum(
    spec: &SumSpec,
    left: &HomologyData,
    right: &HomologyData,
) -> Result<ChordDiagram> {
    let sides = [
        (&spec.left, left, SumSide::Left),
        (&spec.right, right, SumSide::Right),
    ];
    let mut out = [Vec::new(), Vec::new()];
    for (which, (patch, h, side)) in sides.into_iter().enumerate() {
        if !Arc::ptr_eq(patch.host(), h.surface()) {
            return Err(Error::SurfaceMismatch);
        }
        // word position of each attaching arc of this side
        let mut arc_pos = Vec::new();
        for (p, s) in spec.interleaving.iter().enumerate() {
            if *s == side {
                arc_pos.push(p);
            }
        }
        if arc_pos.len() != patch.attaching_arcs().len() {
            return Err(Error::InvalidChord(
                "interleaving does not match the attaching region".into(),
            ));
        }
        // word position per slot of the patch disk (slot s lives on arc 2s)
        let slot_pos = |slot: usize| -> Result<usize> {
            let idx = patch
                .attaching_arcs()
                .binary_search(&(2 * slot))
                .map_err(|_| Error::InvalidChord(format!("slot {slot} not attaching")))?;
            Ok(arc_pos[idx])
        };
        let surf = patch.host();
        let pd = patch.patch_disk();
        for w in h.basis() {
            let mut chords = Vec::new();
            let len = w.steps.len();
            for i in 0..len {
                let k = (i + 1) % len;
                let (b_in, fwd_in) = w.steps[i];
                let end_in = if fwd_in { 1 } else { 0 };
                let (disk, slot_in) = surf.bands()[b_in].ends[end_in];
                if disk != pd {
                    continue;
                }
                let (b_out, fwd_out) = w.steps[k];
                let end_out = if fwd_out { 0 } else { 1 };
                let (_, slot_out) = surf.bands()[b_out].ends[end_out];
                chords.push((slot_pos(slot_in)?, slot_pos(slot_out)?));
            }
            out[which].push(chords);
        }
    }
    let [l, r] = out;
    Ok(ChordDiagram { left: l, right: r })
}

fn in_open_arc(x: usize, p: usize, q: usize) -> bool {
    if p < q {
        p < x && x < q
    } else {
        x > p || x < q
    }
}

fn chord_crossing(a: (usize, usize), b: (usize, usize)) -> i64 {
    let s_in = in_open_arc(b.0, a.0, a.1);
    let e_in = in_open_arc(b.1, a.0, a.1);
    if s_in == e_in {
        0
    } else if s_in {
        1
    } else {
        -1
    }
}

/// C[i][j] = signed interleaved crossings between the chords of left cycle
/// i and right cycle j around the merged disk.
pub fn coupling_block(spec: &SumSpec, chords: &ChordDiagram) -> Result<IntMat> {
    let m = spec.interleaving.len();
    for (list, side) in [(&chords.left, SumSide::Left), (&chords.right, SumSide::Right)] {
        for cs in list.iter() {
            for &(a, b) in cs {
                if a >= m || b >= m {
                    return Err(Error::InvalidChord(format!(
                        "chord endpoint out of range for word of length {m}"
                    )));
                }
                if a == b {
                    return Err(Error::InvalidChord("degenerate chord".into()));
                }
                if spec.interleaving[a] != side || spec.interleaving[b] != side {
                    return Err(Error::InvalidChord(
                        "chord endpoint on the wrong side of the interleaving".into(),
                    ));
                }
            }
        }
    }
    let mut c = IntMat::zeros(chords.left.len(), chords.right.len());
    for (i, ls) in chords.left.iter().enumerate() {
        for (j, rs) in chords.right.iter().enumerate() {
            let mut acc = 0;
            for &a in ls {
                for &b in rs {
                    acc += chord_crossing(a, b);
                }
            }
            c[(i, j)] = acc;
        }
    }
    Ok(c)
}

/// Which summand gets thickened on the positive side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumOrder {
    LeftFirst,
    RightFirst,
}

/// The embedded sum: the abstract sum surface with the block Seifert
/// matrix. LeftFirst puts the coupling block in the upper right, RightFirst
/// its negative transpose in the lower left; both satisfy V - V^T = J.
pub fn embedded_sum(
    d1: &SeifertData,
    d2: &SeifertData,
    spec: &SumSpec,
    chords: &ChordDiagram,
    order: SumOrder,
) -> Result<SeifertData> {
    let (sum, _) = abstract_sum(spec)?;
    let h = sum_homology(&sum, d1.basis(), d2.basis())?;
    let c = coupling_block(spec, chords)?;
    let (r1, r2) = (d1.rank(), d2.rank());
    let mut v = IntMat::zeros(r1 + r2, r1 + r2);
    for i in 0..r1 {
        for j in 0..r1 {
            v[(i, j)] = d1.matrix()[(i, j)];
        }
    }
    for i in 0..r2 {
        for j in 0..r2 {
            v[(r1 + i, r1 + j)] = d2.matrix()[(i, j)];
        }
    }
    match order {
        SumOrder::LeftFirst => {
            for i in 0..r1 {
                for j in 0..r2 {
                    v[(i, r1 + j)] = c[(i, j)];
                }
            }
        }
        SumOrder::RightFirst => {
            for i in 0..r1 {
                for j in 0..r2 {
                    v[(r1 + j, i)] = -c[(i, j)];
                }
            }
        }
    }
    SeifertData::new(h, v)
}

/// det(V^T - tV), normalized to positive lowest coefficient and nonzero
/// constant term.
pub fn alexander(d: &SeifertData) -> IntPoly {
    alexander_det(d.matrix()).normalize_units()
}

/// V^{-1} V^T; its characteristic polynomial agrees with the Alexander
/// polynomial up to units.
pub fn homological_monodromy(d: &SeifertData) -> Result<IntMat> {
    let inv = d.matrix().unimodular_inverse().ok_or(Error::NotUnimodular)?;
    Ok(inv.mul(&d.matrix().transpose()))
}

/// The mod-2 linking of the pushed-off left core with the right core: reads
/// the coupling entry's block position off the assembled matrix. Requires a
/// unique core cycle (exactly one chord) on each side, crossing once.
pub fn order_invariant(
    d1: &SeifertData,
    d2: &SeifertData,
    spec: &SumSpec,
    chords: &ChordDiagram,
    order: SumOrder,
) -> Result<u8> {
    let core = |list: &[Vec<(usize, usize)>]| -> Result<usize> {
        let mut found = None;
        for (i, cs) in list.iter().enumerate() {
            if cs.len() == 1 {
                if found.is_some() {
                    return Err(Error::NoCoreCycle);
                }
                found = Some(i);
            }
        }
        found.ok_or(Error::NoCoreCycle)
    };
    let i = core(&chords.left)?;
    let j = core(&chords.right)?;
    let c = coupling_block(spec, chords)?;
    if c[(i, j)].abs() != 1 {
        return Err(Error::NoCoreCycle);
    }
    let sum = embedded_sum(d1, d2, spec, chords, order)?;
    let bit = sum.matrix()[(i, d1.rank() + j)].rem_euclid(2);
    Ok(bit as u8)
}

/// Necessary fiberedness certificate: unimodular Seifert matrix and an
/// Alexander polynomial of full degree.
pub fn fiberedness_necessary(d: &SeifertData) -> bool {
    let det = d.matrix().det();
    if det != 1 && det != -1 {
        return false;
    }
    alexander(d).degree() == Some(d.rank())
}

/// Characteristic polynomial of the homological monodromy; equal to the
/// Alexander polynomial up to units whenever defined.
pub fn monodromy_char_poly(d: &SeifertData) -> Result<IntPoly> {
    Ok(char_poly(&homological_monodromy(d)?))
}
