//! Text dump of a fusion system.
//!
//! ```text
//! fusion p=2 carrier=9
//! hom 1 -> 1 : 3
//! hom 1 -> 9 : 3
//! ```
//!
//! Subgroups are lattice ids; each `hom` line lists the images of the
//! canonical generators of the domain as element indices.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use super::{FusionSystem, IsoTable, Provenance};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, SubgroupId, SubgroupLattice};

impl FusionSystem {
    pub fn dump(&self) -> String {
        let group = self.group();
        let mut out = format!("fusion p={} carrier={}\n", self.prime(), self.carrier().0);
        for &p in self.objects() {
            let ps = self.subgroup(p);
            let gens = ps.canonical_generators(group);
            for &q in self.objects() {
                for (_, m) in self.hom_maps(p, q) {
                    let imgs: Vec<String> = gens
                        .iter()
                        .map(|&x| m[ps.position(x).expect("generator in P")].to_string())
                        .collect();
                    let _ = writeln!(out, "hom {} -> {} : {}", p.0, q.0, imgs.join(","));
                }
            }
        }
        out
    }
}

/// Extends generator images to a full element map, checking that the
/// result is a well-defined injective homomorphism into `codomain`.
fn extend_from_generators(
    group: &FiniteGroup,
    domain: &Subgroup,
    gens: &[u32],
    images: &[u32],
) -> std::result::Result<Vec<u32>, String> {
    let mut map: HashMap<u32, u32> = HashMap::new();
    map.insert(group.identity(), group.identity());
    let mut frontier = vec![group.identity()];
    while let Some(x) = frontier.pop() {
        let fx = map[&x];
        for (&g, &h) in gens.iter().zip(images) {
            let (y, fy) = (group.mul(x, g), group.mul(fx, h));
            match map.get(&y) {
                Some(&existing) if existing != fy => return Err("generator images do not define a homomorphism".into()),
                Some(_) => {}
                None => {
                    map.insert(y, fy);
                    frontier.push(y);
                }
            }
        }
    }
    if map.len() != domain.order() {
        return Err("generators do not generate the domain".into());
    }
    Ok(domain.members().iter().map(|x| map[x]).collect())
}

/// Reads a dump against the lattice it was written from.
pub fn parse_dump(text: &str, lattice: &Arc<SubgroupLattice>) -> Result<FusionSystem> {
    let group = lattice.group();
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| err(1, "empty dump".into()))?;
    let mut prime = None;
    let mut carrier = None;
    let mut words = header.split_whitespace();
    if words.next() != Some("fusion") {
        return Err(err(hline, "expected `fusion p=<p> carrier=<id>`".into()));
    }
    for w in words {
        match w.split_once('=') {
            Some(("p", v)) => prime = v.parse::<u32>().ok(),
            Some(("carrier", v)) => carrier = v.parse::<usize>().ok(),
            _ => return Err(err(hline, format!("unexpected header field {w:?}"))),
        }
    }
    let (prime, carrier) = match (prime, carrier) {
        (Some(p), Some(c)) if c < lattice.len() => (p, SubgroupId(c)),
        _ => return Err(err(hline, "header needs p and a valid carrier id".into())),
    };
    if prime != lattice.prime() {
        return Err(err(hline, "prime does not match the lattice".into()));
    }
    let mut isos = IsoTable::new();
    let mut count = 0usize;
    for (n, line) in lines {
        let rest = line
            .strip_prefix("hom ")
            .ok_or_else(|| err(n, "expected a `hom` line".into()))?;
        let (ids, imgs) = rest.split_once(':').ok_or_else(|| err(n, "missing ':'".into()))?;
        let (p, q) = ids.split_once("->").ok_or_else(|| err(n, "missing '->'".into()))?;
        let parse_id = |s: &str| {
            s.trim()
                .parse::<usize>()
                .ok()
                .filter(|&i| i < lattice.len() && lattice.is_le(SubgroupId(i), carrier))
                .map(SubgroupId)
                .ok_or_else(|| err(n, format!("bad subgroup id {s:?}")))
        };
        let (p, q) = (parse_id(p)?, parse_id(q)?);
        let images = imgs
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .ok()
                    .filter(|&x| (x as usize) < group.order())
                    .ok_or_else(|| err(n, format!("bad element {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let ps = lattice.get(p);
        let gens = ps.canonical_generators(group);
        if gens.len() != images.len() {
            return Err(err(n, "wrong number of generator images".into()));
        }
        let map = extend_from_generators(group, ps, &gens, &images).map_err(|m| err(n, m))?;
        let qs = lattice.get(q);
        if map.iter().any(|&y| !qs.contains(y)) {
            return Err(err(n, "image leaves the codomain".into()));
        }
        let mut image = map.clone();
        image.sort_unstable();
        image.dedup();
        if image.len() != map.len() {
            return Err(err(n, "map is not injective".into()));
        }
        let r = lattice.id_of_members(&image).expect("image of a subgroup");
        isos.entry((p, r)).or_default().insert(map);
        count += 1;
    }
    let system = FusionSystem::from_isos(lattice.clone(), carrier, Provenance::Parsed, isos);
    if system.morphism_count() != count {
        return Err(err(0, "hom lines do not form a complete table".into()));
    }
    system.validate()?;
    Ok(system)
}
