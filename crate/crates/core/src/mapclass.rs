//! First homology of a disk-band surface, its intersection form, and
//! mapping classes tracked through their homology action.
//!
//! Basis cycles are closed band-walks. The intersection form is computed by
//! perturbing each cycle into disjoint parallel strands inside every band
//! (strands never cross inside a band; an odd twist preserves the
//! transverse order from pre-corner to pre-corner, an even twist reverses
//! it) and counting signed chord crossings inside each disk.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::IntMat;
use crate::surface::RibbonSurface;

/// A closed walk through bands: each step traverses one band, `forward`
/// meaning end 0 to end 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub steps: Vec<(usize, bool)>,
}

impl Walk {
    pub fn new(steps: Vec<(usize, bool)>) -> Self {
        Walk { steps }
    }

    /// Build a walk from band ids.
    pub fn from_band_ids(s: &RibbonSurface, steps: &[(&str, bool)]) -> Result<Walk> {
        let steps = steps
            .iter()
            .map(|(id, fwd)| {
                s.band_index(id)
                    .map(|b| (b, *fwd))
                    .ok_or_else(|| Error::ParseError(format!("unknown band `{id}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Walk { steps })
    }

    pub fn reversed(&self) -> Walk {
        Walk { steps: self.steps.iter().rev().map(|&(b, f)| (b, !f)).collect() }
    }

    /// The disk the walk sits on after the given step.
    fn disk_after(&self, s: &RibbonSurface, i: usize) -> usize {
        let (b, fwd) = self.steps[i];
        s.bands()[b].ends[if fwd { 1 } else { 0 }].0
    }

    fn disk_before(&self, s: &RibbonSurface, i: usize) -> usize {
        let (b, fwd) = self.steps[i];
        s.bands()[b].ends[if fwd { 0 } else { 1 }].0
    }

    pub fn validate(&self, s: &RibbonSurface) -> Result<()> {
        if self.steps.is_empty() {
            return Err(Error::CycleNotInSpan);
        }
        for (b, _) in &self.steps {
            if *b >= s.bands().len() {
                return Err(Error::CycleNotInSpan);
            }
        }
        for i in 0..self.steps.len() {
            let j = (i + 1) % self.steps.len();
            if self.disk_after(s, i) != self.disk_before(s, j) {
                return Err(Error::CycleNotInSpan);
            }
        }
        Ok(())
    }

    /// Rebuild this walk on another surface through an id prefix.
    pub fn relabeled(&self, from: &RibbonSurface, prefix: &str, to: &RibbonSurface) -> Result<Walk> {
        let steps = self
            .steps
            .iter()
            .map(|&(b, fwd)| {
                let id = format!("{prefix}{}", from.bands()[b].id);
                to.band_index(&id)
                    .map(|nb| (nb, fwd))
                    .ok_or(Error::BasisEmbeddingMissing)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Walk { steps })
    }
}

/// Homology basis of a ribbon surface with its intersection form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyData {
    surface: Arc<RibbonSurface>,
    basis: Vec<Walk>,
    intersection: IntMat,
    /// non-tree bands of the spanning forest, defining auto coordinates
    non_tree: Vec<usize>,
    /// rows: auto coordinates of each basis cycle (unimodular)
    basis_auto: IntMat,
    basis_auto_inv: IntMat,
}

impl HomologyData {
    pub fn surface(&self) -> &Arc<RibbonSurface> {
        &self.surface
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Walk] {
        &self.basis
    }

    pub fn intersection(&self) -> &IntMat {
        &self.intersection
    }

    /// Auto coordinates of a walk: signed traversal counts of the non-tree
    /// bands of the spanning forest.
    fn auto_coords(&self, w: &Walk) -> Vec<i64> {
        auto_coords(&self.non_tree, w)
    }

    /// Coordinates of a cycle in this basis.
    pub fn coords(&self, w: &Walk) -> Result<Vec<i64>> {
        w.validate(&self.surface)?;
        let a = self.auto_coords(w);
        let r = self.rank();
        let mut out = vec![0i64; r];
        for (j, o) in out.iter_mut().enumerate() {
            let mut acc = 0i128;
            for (k, &ak) in a.iter().enumerate() {
                acc += ak as i128 * self.basis_auto_inv[(k, j)] as i128;
            }
            *o = i64::try_from(acc).map_err(|_| Error::CycleNotInSpan)?;
        }
        Ok(out)
    }
}

fn auto_coords(non_tree: &[usize], w: &Walk) -> Vec<i64> {
    let mut a = vec![0i64; non_tree.len()];
    for &(b, fwd) in &w.steps {
        if let Ok(k) = non_tree.binary_search(&b) {
            a[k] += if fwd { 1 } else { -1 };
        }
    }
    a
}

/// Spanning-forest homology basis with the intersection form.
pub fn homology_basis(s: &Arc<RibbonSurface>) -> Result<HomologyData> {
    let (orient, _) = crate::surface::orientability(s);
    if !orient {
        return Err(Error::NotOrientable);
    }
    let walks = forest_basis(s);
    homology_with_basis(s, walks)
}

/// Homology data over a caller-chosen basis of cycles. The basis must be
/// unimodular over the spanning-forest coordinates.
pub fn homology_with_basis(s: &Arc<RibbonSurface>, basis: Vec<Walk>) -> Result<HomologyData> {
    let (orient, signs) = crate::surface::orientability(s);
    if !orient {
        return Err(Error::NotOrientable);
    }
    let signs = signs.unwrap();
    let non_tree = non_tree_bands(s);
    let r = non_tree.len();
    if basis.len() != r {
        return Err(Error::CycleNotInSpan);
    }
    for w in &basis {
        w.validate(s)?;
    }
    let basis_auto = IntMat::from_rows(
        basis.iter().map(|w| auto_coords(&non_tree, w)).collect::<Vec<_>>(),
    );
    let basis_auto = if r == 0 { IntMat::zeros(0, 0) } else { basis_auto };
    let basis_auto_inv = basis_auto.unimodular_inverse().ok_or(Error::CycleNotInSpan)?;
    let intersection = intersection_matrix(s, &signs, &basis);
    Ok(HomologyData {
        surface: Arc::clone(s),
        basis,
        intersection,
        non_tree,
        basis_auto,
        basis_auto_inv,
    })
}

fn adjacency(s: &RibbonSurface) -> Vec<Vec<(usize, usize)>> {
    // disk -> (band, other disk)
    let mut adj = vec![Vec::new(); s.disks().len()];
    for (bi, band) in s.bands().iter().enumerate() {
        let (d0, d1) = (band.ends[0].0, band.ends[1].0);
        adj[d0].push((bi, d1));
        if d1 != d0 {
            adj[d1].push((bi, d0));
        }
    }
    adj
}

/// Deterministic BFS spanning forest; returns (parent step to reach disk,
/// depth) per disk. The parent step is (band, forward-into-this-disk).
fn spanning_forest(s: &RibbonSurface) -> (Vec<Option<(usize, bool)>>, Vec<usize>, Vec<bool>) {
    let n = s.disks().len();
    let adj = adjacency(s);
    let mut parent: Vec<Option<(usize, bool)>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut tree_band = vec![false; s.bands().len()];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(d) = queue.pop_front() {
            for &(bi, other) in &adj[d] {
                if seen[other] {
                    continue;
                }
                seen[other] = true;
                tree_band[bi] = true;
                // forward if the band goes end0@d -> end1@other
                let fwd = s.bands()[bi].ends[0].0 == d;
                parent[other] = Some((bi, fwd));
                depth[other] = depth[d] + 1;
                queue.push_back(other);
            }
        }
    }
    (parent, depth, tree_band)
}

fn non_tree_bands(s: &RibbonSurface) -> Vec<usize> {
    let (_, _, tree_band) = spanning_forest(s);
    (0..s.bands().len()).filter(|&b| !tree_band[b]).collect()
}

/// Basis cycles: one per non-tree band, closed up through the forest.
fn forest_basis(s: &RibbonSurface) -> Vec<Walk> {
    let (parent, depth, tree_band) = spanning_forest(s);
    let mut walks = Vec::new();
    for (bi, band) in s.bands().iter().enumerate() {
        if tree_band[bi] {
            continue;
        }
        // walk: traverse band forward (end0 -> end1), then tree path from
        // end1's disk back to end0's disk
        let mut steps = vec![(bi, true)];
        let (mut x, mut y) = (band.ends[1].0, band.ends[0].0);
        let mut up = Vec::new(); // steps from x toward the root
        let mut down = Vec::new(); // steps from y toward the root (reversed later)
        while depth[x] > depth[y] {
            let (b, fwd) = parent[x].unwrap();
            up.push((b, !fwd));
            x = other_disk(s, b, x);
        }
        while depth[y] > depth[x] {
            let (b, fwd) = parent[y].unwrap();
            down.push((b, fwd));
            y = other_disk(s, b, y);
        }
        while x != y {
            let (bx, fx) = parent[x].unwrap();
            up.push((bx, !fx));
            x = other_disk(s, bx, x);
            let (by, fy) = parent[y].unwrap();
            down.push((by, fy));
            y = other_disk(s, by, y);
        }
        steps.extend(up);
        steps.extend(down.into_iter().rev());
        walks.push(Walk { steps });
    }
    walks
}

fn other_disk(s: &RibbonSurface, band: usize, disk: usize) -> usize {
    let ends = s.bands()[band].ends;
    if ends[0].0 == disk {
        ends[1].0
    } else {
        ends[0].0
    }
}

/// Boundary position of a strand endpoint on a disk: slot position first,
/// then the transverse coordinate inside the band end, ordered pre to post.
type BoundaryPos = (usize, usize);

#[derive(Debug, Clone, Copy)]
struct Chord {
    walk: usize,
    start: BoundaryPos,
    end: BoundaryPos,
}

/// Signed chord crossings inside every disk, summed per walk pair.
pub(crate) fn intersection_matrix(s: &RibbonSurface, disk_signs: &[i8], walks: &[Walk]) -> IntMat {
    let r = walks.len();
    let mut j = IntMat::zeros(r, r);
    if r == 0 {
        return j;
    }
    // passages per band, in (walk, step) order; the per-band index is the
    // transverse coordinate at end 0
    let mut passages: Vec<Vec<(usize, usize)>> = vec![Vec::new(); s.bands().len()];
    for (wi, w) in walks.iter().enumerate() {
        for (si, &(b, _)) in w.steps.iter().enumerate() {
            passages[b].push((wi, si));
        }
    }
    let coord = |b: usize, end: u8, wi: usize, si: usize| -> usize {
        let idx = passages[b].iter().position(|&p| p == (wi, si)).unwrap();
        let m = passages[b].len();
        let even = s.bands()[b].half_twists.rem_euclid(2) == 0;
        if end == 0 || !even {
            idx
        } else {
            m - 1 - idx
        }
    };
    // chords per disk
    let mut chords: Vec<Vec<Chord>> = vec![Vec::new(); s.disks().len()];
    for (wi, w) in walks.iter().enumerate() {
        let len = w.steps.len();
        for i in 0..len {
            let k = (i + 1) % len;
            let (b_in, fwd_in) = w.steps[i];
            let (b_out, fwd_out) = w.steps[k];
            let end_in: u8 = if fwd_in { 1 } else { 0 };
            let end_out: u8 = if fwd_out { 0 } else { 1 };
            let (disk, slot_in) = s.bands()[b_in].ends[end_in as usize];
            let (disk_out, slot_out) = s.bands()[b_out].ends[end_out as usize];
            debug_assert_eq!(disk, disk_out);
            let start = (slot_in, coord(b_in, end_in, wi, i));
            let end = (slot_out, coord(b_out, end_out, wi, k));
            chords[disk].push(Chord { walk: wi, start, end });
        }
    }
    for (d, list) in chords.iter().enumerate() {
        let sigma = disk_signs[d] as i64;
        for a in list {
            for b in list {
                if a.walk == b.walk {
                    continue;
                }
                j[(a.walk, b.walk)] += sigma * crossing_sign(a, b);
            }
        }
    }
    debug_assert!(j.is_antisymmetric());
    j
}

/// +1, -1 or 0 for directed chords in a counterclockwise-oriented disk.
fn crossing_sign(a: &Chord, b: &Chord) -> i64 {
    let s_in = in_open_arc(b.start, a.start, a.end);
    let e_in = in_open_arc(b.end, a.start, a.end);
    if s_in == e_in {
        0
    } else if s_in {
        1
    } else {
        -1
    }
}

/// Is x strictly inside the counterclockwise arc from p to q?
fn in_open_arc(x: BoundaryPos, p: BoundaryPos, q: BoundaryPos) -> bool {
    debug_assert!(x != p && x != q && p != q);
    if p < q {
        p < x && x < q
    } else {
        x > p || x < q
    }
}

// ---------------------------------------------------------------------------
// mapping classes

/// One Dehn-twist letter: homology coordinates of the twisting cycle in the
/// ambient basis, plus the twist sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistLetter {
    pub coords: Vec<i64>,
    pub sign: i64,
}

/// A mapping class tracked through its action on first homology. The matrix
/// is always the ordered product of the word's transvections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingClass {
    homology: Arc<HomologyData>,
    /// letters in application order: `word[0]` acts first
    word: Vec<TwistLetter>,
    matrix: IntMat,
}

impl MappingClass {
    pub fn identity(h: &Arc<HomologyData>) -> MappingClass {
        MappingClass {
            homology: Arc::clone(h),
            word: Vec::new(),
            matrix: IntMat::identity(h.rank()),
        }
    }

    pub fn homology(&self) -> &Arc<HomologyData> {
        &self.homology
    }

    pub fn word(&self) -> &[TwistLetter] {
        &self.word
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IntMat::identity(self.homology.rank())
    }

    pub fn inverse(&self) -> MappingClass {
        let word: Vec<TwistLetter> = self
            .word
            .iter()
            .rev()
            .map(|l| TwistLetter { coords: l.coords.clone(), sign: -l.sign })
            .collect();
        from_word(&self.homology, word)
    }

    /// det(tI - matrix).
    pub fn char_poly(&self) -> crate::poly::IntPoly {
        crate::poly::char_poly(&self.matrix)
    }
}

/// The transvection x -> x + sign * <x, c> c for a cycle with coordinates
/// `gamma` in a basis with intersection matrix `j`.
pub fn transvection(j: &IntMat, gamma: &[i64], sign: i64) -> IntMat {
    let r = gamma.len();
    let mut m = IntMat::identity(r);
    // m = I - sign * gamma gamma^T J
    for row in 0..r {
        for col in 0..r {
            let mut acc: i128 = 0;
            for k in 0..r {
                acc += gamma[k] as i128 * j[(k, col)] as i128;
            }
            let v = m[(row, col)] as i128 - sign as i128 * gamma[row] as i128 * acc;
            m[(row, col)] = i64::try_from(v).expect("transvection overflow");
        }
    }
    m
}

pub fn from_word(h: &Arc<HomologyData>, word: Vec<TwistLetter>) -> MappingClass {
    let mut matrix = IntMat::identity(h.rank());
    // application order: word[0] first, so multiply on the left
    for letter in &word {
        let t = transvection(h.intersection(), &letter.coords, letter.sign);
        matrix = t.mul(&matrix);
    }
    debug_assert!(matches!(matrix.det(), 1 | -1));
    MappingClass { homology: Arc::clone(h), word, matrix }
}

/// Dehn twist about a cycle, expressed through its homology class.
pub fn dehn_twist(h: &Arc<HomologyData>, cycle: &Walk, sign: i64) -> Result<MappingClass> {
    assert!(sign == 1 || sign == -1);
    let coords = h.coords(cycle)?;
    Ok(from_word(h, vec![TwistLetter { coords, sign }]))
}

/// Composition in the convention of the sum theorems: `first . second`
/// applies `second` first.
pub fn compose(first: &MappingClass, second: &MappingClass) -> Result<MappingClass> {
    if first.homology != second.homology {
        return Err(Error::SurfaceMismatch);
    }
    let mut word = second.word.clone();
    word.extend(first.word.iter().cloned());
    Ok(from_word(&first.homology, word))
}

/// Which summand a mapping class comes from when extending onto a sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumSide {
    Left,
    Right,
}

/// Extend a mapping class of one summand onto the sum by the identity: every
/// twist letter keeps its cycle (embedded into the sum basis) and the
/// transvections are rebuilt in the intersection form of the sum.
pub fn extend_by_identity(
    phi: &MappingClass,
    sum: &Arc<HomologyData>,
    side: SumSide,
    left_rank: usize,
) -> Result<MappingClass> {
    let r = sum.rank();
    let r_small = phi.homology.rank();
    let offset = match side {
        SumSide::Left => {
            if left_rank != r_small || left_rank > r {
                return Err(Error::BasisEmbeddingMissing);
            }
            0
        }
        SumSide::Right => {
            if left_rank + r_small != r {
                return Err(Error::BasisEmbeddingMissing);
            }
            left_rank
        }
    };
    let word = phi
        .word
        .iter()
        .map(|l| {
            let mut coords = vec![0i64; r];
            coords[offset..offset + r_small].copy_from_slice(&l.coords);
            TwistLetter { coords, sign: l.sign }
        })
        .collect();
    Ok(from_word(sum, word))
}

/// Twist-word text format: `twist <cycle-index> <+|->` per line, `#`
/// comments, applied bottom-up. Returns (index, sign) letters in
/// application order.
pub fn parse_twist_word(text: &str) -> Result<Vec<(usize, i64)>> {
    let mut lines = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tok: Vec<&str> = line.split_whitespace().collect();
        if tok.len() != 3 || tok[0] != "twist" {
            return Err(Error::ParseError(format!("unrecognized twist line `{line}`")));
        }
        let index: usize = tok[1]
            .parse()
            .map_err(|_| Error::ParseError(format!("bad cycle index `{}`", tok[1])))?;
        let sign = match tok[2] {
            "+" => 1,
            "-" => -1,
            other => return Err(Error::ParseError(format!("bad twist sign `{other}`"))),
        };
        lines.push((index, sign));
    }
    lines.reverse();
    Ok(lines)
}

/// Build a mapping class from (cycle index, sign) letters over a homology
/// basis, letters in application order.
pub fn word_from_indices(h: &Arc<HomologyData>, letters: &[(usize, i64)]) -> Result<MappingClass> {
    let r = h.rank();
    let word = letters
        .iter()
        .map(|&(i, sign)| {
            if i >= r {
                return Err(Error::CycleNotInSpan);
            }
            let mut coords = vec![0i64; r];
            coords[i] = 1;
            Ok(TwistLetter { coords, sign })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(from_word(h, word))
}
