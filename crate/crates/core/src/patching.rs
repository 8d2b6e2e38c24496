//! Disk patches, summability, and the abstract sum: two surfaces glued
//! along one disk of each, the cyclic slot orders spliced according to an
//! explicit interleaving word.
//!
//! The boundary of a patch disk with k slots is divided into 2k arcs: arc
//! 2i is the attaching interval of slot i, arc 2i+1 the gap after it. A
//! slotless disk has the single arc 0. The attaching region is a marked
//! arc subset that must cover every band arc.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::mapclass::{homology_with_basis, HomologyData, SumSide, Walk};
use crate::surface::{build_surface, BandSpec, DiskSpec, RibbonSurface};

#[derive(Debug, Clone)]
pub struct Patch {
    host: Arc<RibbonSurface>,
    patch_disk: usize,
    /// sorted arc indices forming the attaching region
    attaching: Vec<usize>,
}

impl Patch {
    pub fn host(&self) -> &Arc<RibbonSurface> {
        &self.host
    }

    pub fn patch_disk(&self) -> usize {
        self.patch_disk
    }

    pub fn patch_disk_id(&self) -> &str {
        &self.host.disks()[self.patch_disk].id
    }

    pub fn attaching_arcs(&self) -> &[usize] {
        &self.attaching
    }

    pub fn arc_count(&self) -> usize {
        let k = self.host.disks()[self.patch_disk].slots.len();
        if k == 0 {
            1
        } else {
            2 * k
        }
    }

    pub fn free_arcs(&self) -> Vec<usize> {
        (0..self.arc_count()).filter(|a| !self.attaching.contains(a)).collect()
    }
}

/// Validate a disk patch: the marking must stay in range and cover every
/// band attaching arc (the even indices).
pub fn make_patch(host: &Arc<RibbonSurface>, disk_id: &str, marked: &[usize]) -> Result<Patch> {
    let patch_disk = host
        .disk_index(disk_id)
        .ok_or_else(|| Error::UnknownDisk(disk_id.to_string()))?;
    let k = host.disks()[patch_disk].slots.len();
    let total = if k == 0 { 1 } else { 2 * k };
    let mut attaching: Vec<usize> = marked.to_vec();
    attaching.sort_unstable();
    attaching.dedup();
    if let Some(&a) = attaching.iter().find(|&&a| a >= total) {
        return Err(Error::IndexOutOfRange(a as i64, total));
    }
    for slot in 0..k {
        if attaching.binary_search(&(2 * slot)).is_err() {
            let end = host.disks()[patch_disk].slots[slot];
            let band = &host.bands()[end.band];
            return Err(Error::BandOutsideAttachingRegion(format!(
                "{}.{}",
                band.id, end.end
            )));
        }
    }
    Ok(Patch { host: Arc::clone(host), patch_disk, attaching })
}

/// A sum specification: two patches plus the cyclic interleaving of their
/// attaching arcs around the identified disk.
#[derive(Debug, Clone)]
pub struct SumSpec {
    pub left: Patch,
    pub right: Patch,
    pub interleaving: Vec<SumSide>,
}

/// True iff the interleaving letter counts match the attaching arcs of the
/// two patches. Patches on the same host value are rejected outright.
pub fn check_summable(spec: &SumSpec) -> Result<bool> {
    if Arc::ptr_eq(&spec.left.host, &spec.right.host) {
        return Err(Error::SameHost);
    }
    let l = spec.interleaving.iter().filter(|s| **s == SumSide::Left).count();
    let r = spec.interleaving.len() - l;
    Ok(l == spec.left.attaching.len() && r == spec.right.attaching.len())
}

/// Prefixes used for the two summands in the result of `abstract_sum`.
pub const LEFT_PREFIX: &str = "l.";
pub const RIGHT_PREFIX: &str = "r.";
/// Identifier of the merged patch disk, always listed first.
pub const MERGED_DISK: &str = "p";

/// Glue the two hosts along their patch disks. The merged disk `p` comes
/// first; its slots are spliced by consuming each side's attaching arcs in
/// cyclic order from the lowest marked index, following the interleaving
/// word. Gap arcs contribute no slot. Returns the sum together with its
/// associated patch (all band arcs of `p` attaching).
pub fn abstract_sum(spec: &SumSpec) -> Result<(Arc<RibbonSurface>, Patch)> {
    if !check_summable(spec)? {
        return Err(Error::NotSummable(
            "interleaving letter counts do not match the attaching regions".into(),
        ));
    }
    let mut merged_slots: Vec<(String, u8)> = Vec::new();
    let mut next_l = 0usize;
    let mut next_r = 0usize;
    for side in &spec.interleaving {
        let (patch, cursor, prefix) = match side {
            SumSide::Left => (&spec.left, &mut next_l, LEFT_PREFIX),
            SumSide::Right => (&spec.right, &mut next_r, RIGHT_PREFIX),
        };
        let arc = patch.attaching[*cursor];
        *cursor += 1;
        if arc % 2 == 0 && !patch.host.disks()[patch.patch_disk].slots.is_empty() {
            let end = patch.host.disks()[patch.patch_disk].slots[arc / 2];
            let band = &patch.host.bands()[end.band];
            merged_slots.push((format!("{prefix}{}", band.id), end.end));
        }
    }
    let mut disks = vec![DiskSpec { id: MERGED_DISK.into(), slots: merged_slots }];
    let mut bands = Vec::new();
    for (patch, prefix) in [(&spec.left, LEFT_PREFIX), (&spec.right, RIGHT_PREFIX)] {
        for (di, d) in patch.host.disks().iter().enumerate() {
            if di == patch.patch_disk {
                continue;
            }
            disks.push(DiskSpec {
                id: format!("{prefix}{}", d.id),
                slots: d
                    .slots
                    .iter()
                    .map(|e| {
                        let band = &patch.host.bands()[e.band];
                        (format!("{prefix}{}", band.id), e.end)
                    })
                    .collect(),
            });
        }
        for b in patch.host.bands() {
            bands.push(BandSpec {
                id: format!("{prefix}{}", b.id),
                half_twists: b.half_twists,
            });
        }
    }
    let sum = Arc::new(build_surface(disks, bands)?);
    let band_arcs: Vec<usize> =
        (0..sum.disks()[0].slots.len()).map(|i| 2 * i).collect();
    let patch = make_patch(&sum, MERGED_DISK, &band_arcs)?;
    Ok((sum, patch))
}

/// Homology of a sum over the concatenated bases of the summands: left
/// basis cycles first (relabeled `l.`), then right (`r.`). Rank is
/// additive; the diagonal blocks of the intersection form agree with the
/// summands, only cross pairings through the merged disk are new.
pub fn sum_homology(
    sum: &Arc<RibbonSurface>,
    left: &HomologyData,
    right: &HomologyData,
) -> Result<Arc<HomologyData>> {
    let mut basis: Vec<Walk> = Vec::with_capacity(left.rank() + right.rank());
    for w in left.basis() {
        basis.push(w.relabeled(left.surface(), LEFT_PREFIX, sum)?);
    }
    for w in right.basis() {
        basis.push(w.relabeled(right.surface(), RIGHT_PREFIX, sum)?);
    }
    Ok(Arc::new(homology_with_basis(sum, basis)?))
}

/// Parse an interleaving word like "LRLR" (whitespace ignored).
pub fn parse_interleaving(word: &str) -> Result<Vec<SumSide>> {
    word.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c.to_ascii_uppercase() {
            'L' => Ok(SumSide::Left),
            'R' => Ok(SumSide::Right),
            other => Err(Error::ParseError(format!("invalid interleaving letter `{other}`"))),
        })
        .collect()
}
