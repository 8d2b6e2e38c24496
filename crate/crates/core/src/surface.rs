//! Disk-band presentations of compact surfaces-with-boundary.
//!
//! A surface is a set of disks, each carrying a cyclic sequence of slots as
//! seen from the front of the disk (counterclockwise), and a set of bands,
//! each joining two slots with an integer number of half-twists. Twist
//! parity is what the combinatorics sees: even bands preserve the two band
//! sides along a boundary walk, odd bands exchange them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// One end of a band: end 0 or end 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndRef {
    pub band: usize,
    pub end: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disk {
    pub id: String,
    /// Band ends in counterclockwise cyclic order.
    pub slots: Vec<EndRef>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Band {
    pub id: String,
    pub half_twists: i64,
    /// (disk index, slot position) for end 0 and end 1.
    pub ends: [(usize, usize); 2],
}

/// Builder input: a disk with slot references by band id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskSpec {
    pub id: String,
    pub slots: Vec<(String, u8)>,
}

/// Builder input: a band with its twist count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandSpec {
    pub id: String,
    pub half_twists: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonSurface {
    disks: Vec<Disk>,
    bands: Vec<Band>,
}

/// A boundary arc of the surface, in the corner model of the boundary walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryArc {
    /// Disk boundary between slot `from_slot` and the next slot ccw.
    DiskArc { disk: usize, from_slot: usize },
    /// One lateral side of a band; side 0 is the side touching the
    /// pre-corner of end 0.
    BandSide { band: usize, side: u8 },
    /// The whole boundary circle of a slotless disk.
    FullDisk { disk: usize },
}

/// One boundary circuit: a cyclically ordered list of arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCircuit {
    pub arcs: Vec<BoundaryArc>,
}

impl RibbonSurface {
    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn disk_index(&self, id: &str) -> Option<usize> {
        self.disks.iter().position(|d| d.id == id)
    }

    pub fn band_index(&self, id: &str) -> Option<usize> {
        self.bands.iter().position(|b| b.id == id)
    }

    /// Disk index holding the given band end.
    pub fn end_disk(&self, e: EndRef) -> usize {
        self.bands[e.band].ends[e.end as usize].0
    }

    /// Copy with every disk and band id prefixed; used by disjoint unions.
    pub fn relabeled(&self, prefix: &str) -> RibbonSurface {
        let disks = self
            .disks
            .iter()
            .map(|d| Disk { id: format!("{prefix}{}", d.id), slots: d.slots.clone() })
            .collect();
        let bands = self
            .bands
            .iter()
            .map(|b| Band { id: format!("{prefix}{}", b.id), ..b.clone() })
            .collect();
        RibbonSurface { disks, bands }
    }
}

pub fn build_surface(disk_specs: Vec<DiskSpec>, band_specs: Vec<BandSpec>) -> Result<RibbonSurface> {
    if disk_specs.is_empty() {
        return Err(Error::EmptyPresentation);
    }
    let mut band_index: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, b) in band_specs.iter().enumerate() {
        if band_index.insert(&b.id, i).is_some() {
            return Err(Error::DuplicateId(b.id.clone()));
        }
    }
    let mut disk_ids: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, d) in disk_specs.iter().enumerate() {
        if disk_ids.insert(&d.id, i).is_some() {
            return Err(Error::DuplicateId(d.id.clone()));
        }
        if band_index.contains_key(d.id.as_str()) {
            return Err(Error::DuplicateId(d.id.clone()));
        }
    }
    let mut seen: BTreeMap<(usize, u8), (usize, usize)> = BTreeMap::new();
    let mut disks = Vec::with_capacity(disk_specs.len());
    for (di, spec) in disk_specs.iter().enumerate() {
        let mut slots = Vec::with_capacity(spec.slots.len());
        for (pos, (band_id, end)) in spec.slots.iter().enumerate() {
            let Some(&bi) = band_index.get(band_id.as_str()) else {
                return Err(Error::DanglingSlot(format!("{band_id}.{end}"), 0));
            };
            if *end > 1 {
                return Err(Error::DanglingSlot(format!("{band_id}.{end}"), 0));
            }
            if seen.insert((bi, *end), (di, pos)).is_some() {
                return Err(Error::DanglingSlot(format!("{band_id}.{end}"), 2));
            }
            slots.push(EndRef { band: bi, end: *end });
        }
        disks.push(Disk { id: spec.id.clone(), slots });
    }
    let mut bands = Vec::with_capacity(band_specs.len());
    for (bi, spec) in band_specs.iter().enumerate() {
        let e0 = seen
            .get(&(bi, 0))
            .copied()
            .ok_or_else(|| Error::DanglingSlot(format!("{}.0", spec.id), 0))?;
        let e1 = seen
            .get(&(bi, 1))
            .copied()
            .ok_or_else(|| Error::DanglingSlot(format!("{}.1", spec.id), 0))?;
        bands.push(Band { id: spec.id.clone(), half_twists: spec.half_twists, ends: [e0, e1] });
    }
    Ok(RibbonSurface { disks, bands })
}

pub fn euler_characteristic(s: &RibbonSurface) -> i64 {
    s.disks.len() as i64 - s.bands.len() as i64
}

/// Corner of a band end in the boundary walk: `pre` is reached first when
/// walking the disk boundary counterclockwise, `post` just after the end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Corner {
    band: usize,
    end: u8,
    post: bool,
}

impl Corner {
    fn index(self) -> usize {
        self.band * 4 + self.end as usize * 2 + self.post as usize
    }

    fn from_index(i: usize) -> Corner {
        Corner { band: i / 4, end: ((i / 2) % 2) as u8, post: i % 2 == 1 }
    }
}

/// Deterministic boundary walk. Each corner lies on exactly one disk arc and
/// one band side, so circuits are the cycles of the resulting 2-regular
/// graph. Slotless disks each contribute one circuit of a single closed arc.
pub fn boundary_walk(s: &RibbonSurface) -> Vec<BoundaryCircuit> {
    let nb = s.bands.len();
    // disk-arc neighbor and band-side neighbor of every corner
    let mut disk_next = vec![usize::MAX; nb * 4];
    let mut side_next = vec![usize::MAX; nb * 4];
    for disk in &s.disks {
        let k = disk.slots.len();
        for (i, e) in disk.slots.iter().enumerate() {
            let nxt = &disk.slots[(i + 1) % k];
            let a = Corner { band: e.band, end: e.end, post: true }.index();
            let b = Corner { band: nxt.band, end: nxt.end, post: false }.index();
            disk_next[a] = b;
            disk_next[b] = a;
        }
    }
    for (bi, band) in s.bands.iter().enumerate() {
        let even = band.half_twists.rem_euclid(2) == 0;
        let (p0, q0) = (
            Corner { band: bi, end: 0, post: false }.index(),
            Corner { band: bi, end: 0, post: true }.index(),
        );
        let (p1, q1) = (
            Corner { band: bi, end: 1, post: false }.index(),
            Corner { band: bi, end: 1, post: true }.index(),
        );
        if even {
            side_next[p0] = q1;
            side_next[q1] = p0;
            side_next[q0] = p1;
            side_next[p1] = q0;
        } else {
            side_next[p0] = p1;
            side_next[p1] = p0;
            side_next[q0] = q1;
            side_next[q1] = q0;
        }
    }

    let mut circuits = Vec::new();
    let mut visited = vec![false; nb * 4];
    for start in 0..nb * 4 {
        if visited[start] {
            continue;
        }
        // Walk: leave the start corner along its disk arc, then alternate.
        let mut arcs = Vec::new();
        let mut cur = start;
        let mut via_disk = true;
        loop {
            visited[cur] = true;
            let nxt = if via_disk { disk_next[cur] } else { side_next[cur] };
            if via_disk {
                // record the disk arc by its post-corner endpoint (a disk
                // arc always joins a post corner to the next pre corner)
                let c = Corner::from_index(cur);
                let n = Corner::from_index(nxt);
                let canon = if c.post { c } else { n };
                debug_assert!(canon.post);
                let (disk, slot) = s.bands[canon.band].ends[canon.end as usize];
                arcs.push(BoundaryArc::DiskArc { disk, from_slot: slot });
            } else {
                let c = Corner::from_index(cur);
                let side = if !c.post { 0 } else { 1 };
                // canonical side label from the end-0 corners
                let side = if c.end == 0 {
                    side
                } else {
                    // look up which end-0 corner this side joins
                    let even = s.bands[c.band].half_twists.rem_euclid(2) == 0;
                    match (even, c.post) {
                        (true, true) => 0,  // q1 <-> p0
                        (true, false) => 1, // p1 <-> q0
                        (false, false) => 0,
                        (false, true) => 1,
                    }
                };
                arcs.push(BoundaryArc::BandSide { band: c.band, side: side as u8 });
            }
            cur = nxt;
            via_disk = !via_disk;
            if cur == start && via_disk {
                break;
            }
        }
        circuits.push(BoundaryCircuit { arcs });
    }
    for (di, disk) in s.disks.iter().enumerate() {
        if disk.slots.is_empty() {
            circuits.push(BoundaryCircuit { arcs: vec![BoundaryArc::FullDisk { disk: di }] });
        }
    }
    circuits
}

pub fn boundary_count(s: &RibbonSurface) -> usize {
    boundary_walk(s).len()
}

/// Decide orientability and produce a witness assignment of disk signs.
/// Each band forces equal signs on its two disks when its twist count is
/// even and opposite signs when odd.
pub fn orientability(s: &RibbonSurface) -> (bool, Option<Vec<i8>>) {
    let n = s.disks.len();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut parity: Vec<u8> = vec![0; n]; // parity relative to parent
    fn find(parent: &mut Vec<usize>, parity: &mut Vec<u8>, x: usize) -> (usize, u8) {
        if parent[x] == x {
            return (x, 0);
        }
        let (root, p) = find(parent, parity, parent[x]);
        parent[x] = root;
        parity[x] ^= p;
        (root, parity[x])
    }
    for band in &s.bands {
        let rel = (band.half_twists.rem_euclid(2)) as u8;
        let (d0, d1) = (band.ends[0].0, band.ends[1].0);
        let (r0, p0) = find(&mut parent, &mut parity, d0);
        let (r1, p1) = find(&mut parent, &mut parity, d1);
        if r0 == r1 {
            if p0 ^ p1 != rel {
                return (false, None);
            }
        } else {
            parent[r1] = r0;
            parity[r1] = p0 ^ p1 ^ rel;
        }
    }
    let mut signs = vec![0i8; n];
    for d in 0..n {
        let (_, p) = find(&mut parent, &mut parity, d);
        signs[d] = if p == 0 { 1 } else { -1 };
    }
    (true, Some(signs))
}

pub fn is_connected(s: &RibbonSurface) -> bool {
    component_count(s) == 1
}

pub fn component_count(s: &RibbonSurface) -> usize {
    disk_components(s).iter().copied().max().map_or(0, |m| m + 1)
}

/// Connected-component index of every disk, numbered by first appearance.
pub fn disk_components(s: &RibbonSurface) -> Vec<usize> {
    let n = s.disks.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] == x {
            x
        } else {
            let r = find(parent, parent[x]);
            parent[x] = r;
            r
        }
    }
    for band in &s.bands {
        let (a, b) = (band.ends[0].0, band.ends[1].0);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut out = vec![0; n];
    for d in 0..n {
        let r = find(&mut parent, d);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        out[d] = label[r];
    }
    out
}

/// Genus and boundary count of a connected orientable surface, from
/// chi = 2 - 2g - b.
pub fn genus_and_boundary(s: &RibbonSurface) -> Result<(u64, usize)> {
    if !is_connected(s) {
        return Err(Error::NotConnected);
    }
    if !orientability(s).0 {
        return Err(Error::NotOrientable);
    }
    let b = boundary_count(s);
    let chi = euler_characteristic(s);
    let twice_genus = 2 - chi - b as i64;
    debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
    Ok(((twice_genus / 2) as u64, b))
}

/// Murasugi's primitive s-surface of type (n, sign): two disks joined by n
/// parallel bands, each carrying one full twist (2 * sign half-twists).
/// Both disks list the bands in the same cyclic order.
pub fn primitive_s_surface(n: usize, sign: i64) -> RibbonSurface {
    assert!(n >= 1, "primitive s-surface needs at least one band");
    assert!(sign == 1 || sign == -1, "sign must be +/-1");
    let band_ids: Vec<String> = (1..=n).map(|i| format!("b{i}")).collect();
    let disks = vec![
        DiskSpec {
            id: "D1".into(),
            slots: band_ids.iter().map(|b| (b.clone(), 0)).collect(),
        },
        DiskSpec {
            id: "D2".into(),
            slots: band_ids.iter().map(|b| (b.clone(), 1)).collect(),
        },
    ];
    let bands = band_ids
        .into_iter()
        .map(|id| BandSpec { id, half_twists: 2 * sign })
        .collect();
    build_surface(disks, bands).expect("primitive s-surface is always valid")
}

// ---------------------------------------------------------------------------
// text format

/// Parse the line-oriented surface format:
/// `disk <id>: <bandid>.<0|1> ...` and `band <id>: twist <integer>`.
/// Blank lines and `#` comments are ignored.
pub fn parse_surface(text: &str) -> Result<RibbonSurface> {
    let mut disks = Vec::new();
    let mut bands = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::ParseError(format!("line {}: {msg}", lineno + 1));
        let (kind, rest) = line.split_once(char::is_whitespace).ok_or_else(|| err("expected `disk` or `band` line"))?;
        let (id, body) = rest.split_once(':').ok_or_else(|| err("missing `:`"))?;
        let id = id.trim();
        if id.is_empty() {
            return Err(err("empty identifier"));
        }
        match kind {
            "disk" => {
                let mut slots = Vec::new();
                for tok in body.split_whitespace() {
                    let (band, end) = tok
                        .rsplit_once('.')
                        .ok_or_else(|| err(&format!("bad slot reference `{tok}`")))?;
                    let end: u8 = end
                        .parse()
                        .map_err(|_| err(&format!("bad slot reference `{tok}`")))?;
                    slots.push((band.to_string(), end));
                }
                disks.push(DiskSpec { id: id.to_string(), slots });
            }
            "band" => {
                let body = body.trim();
                let twist = body
                    .strip_prefix("twist")
                    .ok_or_else(|| err("band line needs `twist <integer>`"))?
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| err("band line needs `twist <integer>`"))?;
                bands.push(BandSpec { id: id.to_string(), half_twists: twist });
            }
            other => return Err(err(&format!("unknown record `{other}`"))),
        }
    }
    build_surface(disks, bands)
}

/// Serialize back into the text format.
pub fn surface_to_text(s: &RibbonSurface) -> String {
    let mut out = String::new();
    for d in &s.disks {
        let slots: Vec<String> = d
            .slots
            .iter()
            .map(|e| format!("{}.{}", s.bands[e.band].id, e.end))
            .collect();
        out.push_str(&format!("disk {}: {}\n", d.id, slots.join(" ")));
    }
    for b in &s.bands {
        out.push_str(&format!("band {}: twist {}\n", b.id, b.half_twists));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk(id: &str, slots: &[(&str, u8)]) -> DiskSpec {
        DiskSpec {
            id: id.into(),
            slots: slots.iter().map(|(b, e)| (b.to_string(), *e)).collect(),
        }
    }

    fn band(id: &str, twists: i64) -> BandSpec {
        BandSpec { id: id.into(), half_twists: twists }
    }

    #[test]
    fn single_disk_is_valid() {
        let s = build_surface(vec![disk("D", &[])], vec![]).unwrap();
        assert_eq!(euler_characteristic(&s), 1);
        assert_eq!(boundary_count(&s), 1);
        assert_eq!(genus_and_boundary(&s).unwrap(), (0, 1));
    }

    #[test]
    fn two_disks_one_band_is_a_disk() {
        let s = build_surface(
            vec![disk("D1", &[("b", 0)]), disk("D2", &[("b", 1)])],
            vec![band("b", 0)],
        )
        .unwrap();
        assert_eq!(euler_characteristic(&s), 1);
        assert_eq!(boundary_count(&s), 1);
    }

    #[test]
    fn double_reference_is_dangling() {
        let r = build_surface(
            vec![disk("D1", &[("b", 0), ("b", 0)]), disk("D2", &[("b", 1)])],
            vec![band("b", 0)],
        );
        assert!(matches!(r, Err(Error::DanglingSlot(_, 2))));
    }

    #[test]
    fn missing_end_is_dangling() {
        let r = build_surface(vec![disk("D1", &[("b", 0)])], vec![band("b", 0)]);
        assert!(matches!(r, Err(Error::DanglingSlot(_, 0))));
    }

    #[test]
    fn empty_presentation_rejected() {
        assert_eq!(build_surface(vec![], vec![]), Err(Error::EmptyPresentation));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let r = build_surface(vec![disk("D", &[]), disk("D", &[])], vec![]);
        assert_eq!(r, Err(Error::DuplicateId("D".into())));
    }

    #[test]
    fn annulus_and_moebius() {
        // one disk, band to itself, even twists: annulus
        let annulus = build_surface(
            vec![disk("D", &[("b", 0), ("b", 1)])],
            vec![band("b", 0)],
        )
        .unwrap();
        assert_eq!(boundary_count(&annulus), 2);
        assert!(orientability(&annulus).0);
        // odd twists: Moebius band
        let moebius = build_surface(
            vec![disk("D", &[("b", 0), ("b", 1)])],
            vec![band("b", 1)],
        )
        .unwrap();
        assert_eq!(boundary_count(&moebius), 1);
        assert!(!orientability(&moebius).0);
        assert_eq!(genus_and_boundary(&moebius), Err(Error::NotOrientable));
    }

    #[test]
    fn primitive_s_surface_counts() {
        for n in 1..=12 {
            for sign in [1, -1] {
                let s = primitive_s_surface(n, sign);
                assert_eq!(euler_characteristic(&s), 2 - n as i64);
                assert_eq!(boundary_count(&s), gcd(2, n), "n={n}");
                assert!(orientability(&s).0);
            }
        }
        // Hopf band is an annulus
        assert_eq!(genus_and_boundary(&primitive_s_surface(2, 1)).unwrap(), (0, 2));
        // (1, -1) is a disk
        assert_eq!(genus_and_boundary(&primitive_s_surface(1, -1)).unwrap(), (0, 1));
        // (3, 1) is the trefoil fiber: genus 1, one boundary circuit
        assert_eq!(genus_and_boundary(&primitive_s_surface(3, 1)).unwrap(), (1, 1));
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn boundary_arcs_partition() {
        let s = primitive_s_surface(4, -1);
        let circuits = boundary_walk(&s);
        let total: usize = circuits.iter().map(|c| c.arcs.len()).sum();
        // every slot gives one disk arc, every band two sides
        let expected: usize =
            s.disks().iter().map(|d| d.slots.len()).sum::<usize>() + 2 * s.bands().len();
        assert_eq!(total, expected);
    }

    #[test]
    fn text_roundtrip() {
        let s = primitive_s_surface(3, -1);
        let text = surface_to_text(&s);
        let back = parse_surface(&text).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_surface("disk D1 b1.0").is_err());
        assert!(parse_surface("disk D1: b1.2\nband b1: twist 0").is_err());
        assert!(parse_surface("frob x: 1").is_err());
    }

    #[test]
    fn disconnected_union_allowed() {
        let s = build_surface(vec![disk("A", &[]), disk("B", &[])], vec![]).unwrap();
        assert_eq!(component_count(&s), 2);
        assert_eq!(genus_and_boundary(&s), Err(Error::NotConnected));
        assert_eq!(boundary_count(&s), 2);
    }
}
