//! Loaders for the text file formats: surfaces, patches, sum specs, twist
//! words, plumbing graphs. Paths inside a file resolve relative to the
//! file's own directory.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use obook_core::mapclass::SumSide;
use obook_core::patching::{make_patch, parse_interleaving, Patch, SumSpec};
use obook_core::surface::{parse_surface, RibbonSurface};

pub struct LoadedFile {
    pub path: PathBuf,
    pub bytes: Vec<u8>,
}

pub fn read(path: &Path) -> Result<LoadedFile> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(LoadedFile { path: path.to_path_buf(), bytes })
}

pub fn load_surface(path: &Path) -> Result<(Arc<RibbonSurface>, LoadedFile)> {
    let f = read(path)?;
    let text = std::str::from_utf8(&f.bytes).context("surface file is not UTF-8")?;
    let s = parse_surface(text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((Arc::new(s), f))
}

/// `patch <surface-file> disk <id> attach <arc indices>`
pub fn load_patch(path: &Path) -> Result<(Patch, Vec<LoadedFile>)> {
    let f = read(path)?;
    let text = std::str::from_utf8(&f.bytes).context("patch file is not UTF-8")?;
    let line = content_line(text)
        .ok_or_else(|| anyhow!("{}: empty patch file", path.display()))?;
    let tok: Vec<&str> = line.split_whitespace().collect();
    if tok.len() < 4 || tok[0] != "patch" || tok[2] != "disk" {
        bail!("{}: expected `patch <surface-file> disk <id> attach <arcs>`", path.display());
    }
    let surface_path = resolve(path, tok[1]);
    let (surface, sf) = load_surface(&surface_path)?;
    let disk = tok[3];
    let arcs: Vec<usize> = if tok.len() > 4 {
        if tok[4] != "attach" {
            bail!("{}: expected `attach` before arc indices", path.display());
        }
        tok[5..]
            .iter()
            .map(|t| t.parse().map_err(|_| anyhow!("bad arc index `{t}`")))
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    let patch = make_patch(&surface, disk, &arcs)?;
    Ok((patch, vec![f, sf]))
}

/// `sumspec left <patchfile> right <patchfile> interleave <word>`
pub fn load_sumspec(path: &Path) -> Result<(SumSpec, Vec<LoadedFile>)> {
    let f = read(path)?;
    let text = std::str::from_utf8(&f.bytes).context("sumspec file is not UTF-8")?;
    let line = content_line(text)
        .ok_or_else(|| anyhow!("{}: empty sumspec file", path.display()))?;
    let tok: Vec<&str> = line.split_whitespace().collect();
    if tok.len() != 7 || tok[0] != "sumspec" || tok[1] != "left" || tok[3] != "right" || tok[5] != "interleave"
    {
        bail!(
            "{}: expected `sumspec left <patchfile> right <patchfile> interleave <word>`",
            path.display()
        );
    }
    let (left, mut files) = load_patch(&resolve(path, tok[2]))?;
    let (right, rfiles) = load_patch(&resolve(path, tok[4]))?;
    files.extend(rfiles);
    let interleaving: Vec<SumSide> = parse_interleaving(tok[6])?;
    files.insert(0, f);
    Ok((SumSpec { left, right, interleaving }, files))
}

fn content_line(text: &str) -> Option<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
}

fn resolve(base_file: &Path, rel: &str) -> PathBuf {
    let rel = Path::new(rel);
    if rel.is_absolute() {
        rel.to_path_buf()
    } else {
        base_file.parent().unwrap_or(Path::new(".")).join(rel)
    }
}
