use std::sync::RwLock;

use crate::error::{Error, Result};

/// Size ceilings for the exponential searches.
///
/// The process-wide values start at [`Limits::default`] and can be replaced
/// with [`set`], typically from [`Limits::from_env`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub permanent_side: usize,
    pub rank_side: usize,
    pub lattice_elements: usize,
    pub max_chains: usize,
    pub lattice_iso_elements: usize,
    pub minor_vertices: usize,
    pub partition_vertices: usize,
    pub cm_vertices: usize,
    pub wildcard_side: usize,
    pub resolution_stars: usize,
    pub chromatic_vertices: usize,
    pub independents_vertices: usize,
    pub complement_vertices: usize,
    pub canonical_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            permanent_side: 10,
            rank_side: 20,
            lattice_elements: 4096,
            max_chains: 1_000_000,
            lattice_iso_elements: 256,
            minor_vertices: 10,
            partition_vertices: 10,
            cm_vertices: 9,
            wildcard_side: 12,
            resolution_stars: 10,
            chromatic_vertices: 16,
            independents_vertices: 20,
            complement_vertices: 16,
            canonical_vertices: 64,
        }
    }
}

pub const ENV_VAR: &str = "SUPERFLATS_LIMITS";

impl Limits {
    /// Parses `key=value` pairs separated by commas, starting from the defaults.
    pub fn parse(text: &str) -> Result<Limits> {
        let mut l = Limits::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("limit `{item}` is not key=value")))?;
            let v: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("limit `{item}` has a non-numeric value")))?;
            let slot = match key.trim() {
                "permanent" => &mut l.permanent_side,
                "rank" => &mut l.rank_side,
                "lattice" => &mut l.lattice_elements,
                "chains" => &mut l.max_chains,
                "lattice_iso" => &mut l.lattice_iso_elements,
                "minor" => &mut l.minor_vertices,
                "partitions" => &mut l.partition_vertices,
                "cm" => &mut l.cm_vertices,
                "wildcard" => &mut l.wildcard_side,
                "resolutions" => &mut l.resolution_stars,
                "chromatic" => &mut l.chromatic_vertices,
                "independents" => &mut l.independents_vertices,
                "complement" => &mut l.complement_vertices,
                "canonical" => &mut l.canonical_vertices,
                other => return Err(Error::Parse(format!("unknown limit `{other}`"))),
            };
            *slot = v;
        }
        Ok(l)
    }

    pub fn from_env() -> Result<Limits> {
        match std::env::var(ENV_VAR) {
            Ok(s) => Limits::parse(&s),
            Err(_) => Ok(Limits::default()),
        }
    }
}

static CURRENT: RwLock<Option<Limits>> = RwLock::new(None);

pub fn get() -> Limits {
    CURRENT
        .read()
        .map(|g| g.unwrap_or_default())
        .unwrap_or_default()
}

pub fn set(limits: Limits) {
    if let Ok(mut g) = CURRENT.write() {
        *g = Some(limits);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides_only_named_keys() {
        let l = Limits::parse("permanent=12, rank=8").unwrap();
        assert_eq!(l.permanent_side, 12);
        assert_eq!(l.rank_side, 8);
        assert_eq!(l.lattice_elements, 4096);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Limits::parse("permanent").is_err());
        assert!(Limits::parse("bogus=3").is_err());
        assert!(Limits::parse("rank=x").is_err());
    }
}
