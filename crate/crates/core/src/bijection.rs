//! The codes between maps and fish, computed directly (code of the rightmost
//! depth-first search tree) and recursively (through the decompositions).

use thiserror::Error;

use crate::gff::{
    check_gff, down_bridges, fish_augment, fish_decompose, fish_odot, gff_augment, gff_decompose, gff_oplus,
    up_bridges, FightingFish, FishDecomposition, Gff, GffDecomposition, GffError,
};
use crate::map::{MapError, RootEdgeDecomposition, RootedMap, SeriesDecomposition};
use crate::mullin::{mullin_decode, mullin_encode};
use crate::spanning::rightmost_dfs_tree;
use crate::word::{ell_unchecked, jaw, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("map is not nonseparable")]
    NotNonseparable,
    #[error(transparent)]
    Word(#[from] GffError),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Code of the map with its rightmost depth-first search tree.
pub fn xi(m: &RootedMap) -> Gff {
    Gff::new_unchecked(mullin_encode(&rightmost_dfs_tree(m)))
}

/// Same code, computed through root-edge deletion.
pub fn xi_rec(m: &RootedMap) -> Gff {
    match m.root_edge_decompose() {
        Err(_) => Gff::empty(),
        Ok(RootEdgeDecomposition::Disconnecting(a, b)) => gff_oplus(&xi_rec(&a), &xi_rec(&b)),
        Ok(RootEdgeDecomposition::Augmented(a, i)) => {
            gff_augment(&xi_rec(&a), i).expect("augment index matches the latitude-0 visits")
        }
    }
}

/// Map of a Gff, in linear time: the word codes its map with the rightmost
/// depth-first search tree, and only then. Other words are rejected with
/// the first failing decomposition step.
pub fn xi_inv(w: &[Step]) -> Result<RootedMap, GffError> {
    match decode_rdfs(w) {
        Some(m) => Ok(m),
        None => {
            check_gff(w)?;
            Ok(xi_inv_unchecked(w))
        }
    }
}

/// The decoded map, if the decoded tree is its rightmost depth-first one.
fn decode_rdfs(w: &[Step]) -> Option<RootedMap> {
    let t = mullin_decode(w).ok()?;
    (rightmost_dfs_tree(t.map()).tree_edges() == t.tree_edges()).then(|| t.into_map())
}

/// Same map, built by the map constructors along the decomposition.
pub fn xi_inv_rec(w: &[Step]) -> Result<RootedMap, GffError> {
    check_gff(w)?;
    Ok(xi_inv_unchecked(w))
}

fn xi_inv_unchecked(w: &[Step]) -> RootedMap {
    match gff_decompose(w).expect("checked Gff") {
        GffDecomposition::Empty => RootedMap::vertex(),
        GffDecomposition::CaseI(a, b) => xi_inv_unchecked(a.word()).oplus(&xi_inv_unchecked(b.word())),
        GffDecomposition::CaseII(a, i) => {
            xi_inv_unchecked(a.word()).augment(i).expect("visit index matches the root face")
        }
    }
}

/// Code of a nonseparable map: a fighting fish.
pub fn phi(m: &RootedMap) -> Result<FightingFish, BijectionError> {
    if !m.is_nonseparable() {
        return Err(BijectionError::NotNonseparable);
    }
    Ok(FightingFish::new_unchecked(xi(m).into_word()))
}

/// Same code, computed through the series decomposition.
pub fn phi_rec(m: &RootedMap) -> Result<FightingFish, BijectionError> {
    if !m.is_nonseparable() {
        return Err(BijectionError::NotNonseparable);
    }
    Ok(phi_rec_unchecked(m))
}

fn phi_rec_unchecked(m: &RootedMap) -> FightingFish {
    let aug = |f: &FightingFish, i| fish_augment(f, i).expect("outer degree matches the jaw");
    match m.series_decompose().expect("nonseparable") {
        SeriesDecomposition::DoubleEdge => FightingFish::head(),
        SeriesDecomposition::Augmented(a, i) => aug(&phi_rec_unchecked(&a), i),
        SeriesDecomposition::HeadChain(b) => fish_odot(&FightingFish::head(), &phi_rec_unchecked(&b)),
        SeriesDecomposition::AugmentedChain(a, i, b) => {
            fish_odot(&aug(&phi_rec_unchecked(&a), i), &phi_rec_unchecked(&b))
        }
    }
}

/// Nonseparable map of a fighting fish, in linear time.
pub fn phi_inv(w: &[Step]) -> Result<RootedMap, BijectionError> {
    match decode_rdfs(w) {
        Some(m) if m.is_nonseparable() => Ok(m),
        _ => phi_inv_rec(w),
    }
}

/// Same map, built by the series constructors along the decomposition.
pub fn phi_inv_rec(w: &[Step]) -> Result<RootedMap, BijectionError> {
    let d = fish_decompose(w)?;
    Ok(match d {
        FishDecomposition::Head => RootedMap::double_edge(),
        FishDecomposition::CaseII(f1, i) => phi_inv_rec(f1.word())?.ns_augment(i)?,
        FishDecomposition::CaseIII(f2) => RootedMap::double_edge().ns_odot(&phi_inv_rec(f2.word())?)?,
        FishDecomposition::CaseIV(f1, i, f2) => {
            phi_inv_rec(f1.word())?.ns_augment(i)?.ns_odot(&phi_inv_rec(f2.word())?)?
        }
    })
}

/// One statistic read on both sides of the bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatPair {
    pub name: &'static str,
    pub map_side: usize,
    pub word_side: usize,
}

impl StatPair {
    pub fn holds(&self) -> bool {
        self.map_side == self.word_side
    }
}

/// Map statistics paired with the word statistics they should equal.
pub fn statistics_check(m: &RootedMap) -> Vec<StatPair> {
    let w = xi(m);
    let s = m.stats();
    let pair = |name, map_side, word_side| StatPair { name, map_side, word_side };
    let mut out = vec![
        pair("vertices-1 / E", s.vertices - 1, w.word().count(Step::E)),
        pair("faces-1 / N", s.faces - 1, w.word().count(Step::N)),
        pair("root face corners / latitude-0 visits", m.augment_bound(), ell_unchecked(w.word())),
        pair("bridges / down bridges", s.bridges, down_bridges(w.word()).expect("Gff")),
        pair("loops / up bridges", s.loops, up_bridges(w.word()).expect("Gff")),
    ];
    if m.is_nonseparable() {
        out.push(pair("out / jaw", s.out, jaw(w.word())));
    }
    out
}
