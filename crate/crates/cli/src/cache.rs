//! Opt-in disk cache of group data, one JSON file per generator set.
//!
//! A file is only trusted after its header matches the generator set, its
//! body checksum matches, and the stored chain and element list pass the
//! same structural checks used for freshly built data. Anything else is
//! recomputed and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use qgf_core::{Enumeration, GeneratorSet, GroupError, GroupHandle, Permutation, StabilizerChain};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    degree: usize,
    generators: Vec<StoredGenerator>,
    body_sha256: String,
    body: Body,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
struct StoredGenerator {
    name: String,
    images: Vec<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Body {
    chain: Vec<StoredLevel>,
    elements: Option<Vec<Vec<u32>>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct StoredLevel {
    base: usize,
    generators: Vec<Vec<u32>>,
}

fn header(gens: &GeneratorSet) -> Vec<StoredGenerator> {
    gens.iter()
        .map(|(name, p)| StoredGenerator {
            name: name.to_string(),
            images: p.images_raw().to_vec(),
        })
        .collect()
}

/// Digest of the degree, names and image tables, in generator order.
pub fn key(gens: &GeneratorSet) -> String {
    let mut h = Sha256::new();
    h.update(format!("qgf-group-v{FORMAT_VERSION}\n{}\n", gens.degree()));
    for (name, p) in gens.iter() {
        h.update(name.as_bytes());
        h.update(b":");
        for &x in p.images_raw() {
            h.update(x.to_le_bytes());
        }
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

pub fn path_for(dir: &Path, gens: &GeneratorSet) -> PathBuf {
    dir.join(format!("{}.json", key(gens)))
}

fn body_digest(body: &Body) -> String {
    let bytes = serde_json::to_vec(body).expect("body serializes");
    hex::encode(Sha256::digest(bytes))
}

fn perm(images: Vec<u32>) -> Result<Permutation, String> {
    Permutation::from_images(images.into_iter().map(|x| x as usize).collect())
        .map_err(|e| e.to_string())
}

fn decode(gens: &GeneratorSet, text: &str) -> Result<GroupHandle, String> {
    let file: CacheFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if file.format_version != FORMAT_VERSION {
        return Err(format!("format version {}", file.format_version));
    }
    if file.degree != gens.degree() || file.generators != header(gens) {
        return Err("generator header does not match".into());
    }
    if body_digest(&file.body) != file.body_sha256 {
        return Err("body checksum mismatch".into());
    }
    let levels = file
        .body
        .chain
        .into_iter()
        .map(|l| {
            let level_gens = l
                .generators
                .into_iter()
                .map(perm)
                .collect::<Result<_, _>>()?;
            Ok((l.base, level_gens))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let chain = StabilizerChain::from_levels(gens, levels).map_err(|e| e.to_string())?;
    let elements = match file.body.elements {
        Some(list) => {
            let list = list.into_iter().map(perm).collect::<Result<Vec<_>, _>>()?;
            let e = Enumeration::from_elements(gens, list).map_err(|e| e.to_string())?;
            if qgf_core::BigUint::from(e.order()) != chain.order() {
                return Err("element count disagrees with chain order".into());
            }
            Some(e)
        }
        None => None,
    };
    Ok(GroupHandle::from_parts(chain, elements))
}

fn encode(gens: &GeneratorSet, handle: &GroupHandle) -> String {
    let body = Body {
        chain: handle
            .chain()
            .levels()
            .map(|(base, level)| StoredLevel {
                base,
                generators: level.iter().map(|p| p.images_raw().to_vec()).collect(),
            })
            .collect(),
        elements: handle.elements().map(|e| {
            e.elements()
                .iter()
                .map(|p| p.images_raw().to_vec())
                .collect()
        }),
    };
    let file = CacheFile {
        format_version: FORMAT_VERSION,
        degree: gens.degree(),
        generators: header(gens),
        body_sha256: body_digest(&body),
        body,
    };
    serde_json::to_string(&file).expect("cache serializes")
}

/// What the caller needs from the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Want {
    /// Elements when the order is within the cap, otherwise the chain.
    Auto,
    /// Elements, failing past the cap.
    Elements,
    /// The chain only.
    Chain,
}

/// Group data for `gens`, read from and written to `dir` when given.
pub fn obtain(
    dir: Option<&Path>,
    gens: &GeneratorSet,
    cap: usize,
    want: Want,
) -> Result<GroupHandle, CliError> {
    if cap == 0 {
        return Err(GroupError::ZeroCap.into());
    }
    let path = dir.map(|d| path_for(d, gens));
    let cached = path.as_deref().and_then(|p| {
        let text = fs::read_to_string(p).ok()?;
        match decode(gens, &text) {
            Ok(handle) => {
                eprintln!("cache: loaded {}", p.display());
                Some(handle)
            }
            Err(why) => {
                eprintln!("cache: ignoring {} ({why})", p.display());
                None
            }
        }
    });
    let loaded = cached.is_some();
    let had_elements = cached.as_ref().is_some_and(|h| h.elements().is_some());
    let chain = match &cached {
        Some(h) => h.chain().clone(),
        None => StabilizerChain::new(gens),
    };
    let fits = chain.order() <= qgf_core::BigUint::from(cap);
    let enumerate = match want {
        Want::Auto => fits,
        Want::Elements => true,
        Want::Chain => false,
    };
    let elements = if !enumerate {
        None
    } else if !fits {
        return Err(GroupError::CapExceeded { reached: cap }.into());
    } else {
        match cached.and_then(|h| h.elements().cloned()) {
            Some(e) => Some(e),
            None => Some(qgf_core::enumerate(gens, cap)?),
        }
    };
    let handle = GroupHandle::from_parts(chain, elements);
    if let Some(p) = &path {
        if !loaded || (!had_elements && handle.elements().is_some()) {
            store(p, &encode(gens, &handle))?;
        }
    }
    Ok(handle)
}

fn store(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::io(format!("cannot create {}", dir.display()), e))?;
    }
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, text)
        .map_err(|e| CliError::io(format!("cannot write {}", tmp.display()), e))?;
    fs::rename(&tmp, path)
        .map_err(|e| CliError::io(format!("cannot write {}", path.display()), e))?;
    Ok(())
}
