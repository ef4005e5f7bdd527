//! Breadth-first word-metric engine over Cayley graphs.
//!
//! [`enumerate_ball`] grows the ball `B̄(R)` about the identity level by level
//! (right multiplication by generators), keeping a canonical-encoding-keyed
//! table of exact word lengths. Queries on a built table — [`BallTable::word_length`],
//! [`BallTable::restricted_distance`], [`BallTable::depth`] — are read-only and
//! freely concurrent.
//!
//! Determinism: neighbor expansion iterates letters in the generating set's
//! stored order, and each level's discoveries are merged in frontier order
//! before the next level starts, so the table (and every file derived from it)
//! is independent of the worker count.

use std::collections::HashMap;
use std::io::{Read, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::group::{DecodeError, GroupElement, Mat2, ModuleAction, ShiftVector};
use crate::valuations::b_functional;

/// File format version for persisted ball tables.
const BALL_FILE_VERSION: u32 = 1;
const BALL_FILE_MAGIC: &[u8; 4] = b"SGBL";

/// Estimated bookkeeping bytes per stored element beyond its key bytes.
const PER_ENTRY_OVERHEAD: u64 = 60;

/// A finite symmetric generating set with its drift bound
/// `z = max |B(m)|` over letters (computed with `b = (1, …, 1)`).
#[derive(Debug, Clone)]
pub struct GenSet {
    letters: Vec<GroupElement>,
    z: f64,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GenSetError {
    #[error("the identity is not a valid letter")]
    IdentityLetter,
    #[error("letter family does not match the action")]
    FamilyMismatch,
    #[error("a generating set needs at least one letter")]
    Empty,
}

impl GenSet {
    /// Builds a generating set; with `symmetric_close` the inverses of all
    /// letters are appended (in letter order) when missing. Duplicates are
    /// dropped, the identity is rejected.
    pub fn new(
        action: &ModuleAction,
        letters: Vec<GroupElement>,
        symmetric_close: bool,
    ) -> Result<GenSet, GenSetError> {
        if letters.is_empty() {
            return Err(GenSetError::Empty);
        }
        let mut out: Vec<GroupElement> = Vec::new();
        let mut push = |g: GroupElement| -> Result<(), GenSetError> {
            if g.base.family() != action.family() {
                return Err(GenSetError::FamilyMismatch);
            }
            if g.is_identity() {
                return Err(GenSetError::IdentityLetter);
            }
            if !out.contains(&g) {
                out.push(g);
            }
            Ok(())
        };
        for l in &letters {
            push(l.clone())?;
        }
        if symmetric_close {
            for l in &letters {
                push(action.inverse(l))?;
            }
        }
        let b = vec![1.0; action.rank()];
        let z = out
            .iter()
            .map(|l| b_functional(&b, &l.shift).abs())
            .fold(0.0f64, f64::max);
        Ok(GenSet { letters: out, z })
    }

    /// The standard generating set of each family:
    /// lamplighter `{t, ta}` closed, `Z[1/6]` `{t, (0,1)}` closed,
    /// Sol `{t, (0,e1), (0,e2)}` closed.
    pub fn standard(action: &ModuleAction) -> GenSet {
        use crate::group::{LatticeVec, LaurentPoly, ModuleElement};
        let t = action.t(0);
        let letters = match action {
            ModuleAction::Laurent { q } => {
                let ta = GroupElement::new(
                    ShiftVector::one(1),
                    ModuleElement::Laurent(LaurentPoly::monomial(*q, 0, 1)),
                );
                vec![t, ta]
            }
            ModuleAction::Sixth => {
                let a = action.embed(ModuleElement::Sixth(
                    crate::group::SixthRational::from_integer(1),
                ));
                vec![t, a]
            }
            ModuleAction::Lattice { .. } => {
                let e1 = action.embed(ModuleElement::Lattice(LatticeVec::from_i64(1, 0)));
                let e2 = action.embed(ModuleElement::Lattice(LatticeVec::from_i64(0, 1)));
                vec![t, e1, e2]
            }
        };
        GenSet::new(action, letters, true).expect("standard set is valid")
    }

    pub fn letters(&self) -> &[GroupElement] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `max |B(m)|` over the letters, with unit drift constants.
    pub fn z(&self) -> f64 {
        self.z
    }
}

/// Exact word lengths for every element of `B̄(R)`, keyed by canonical
/// encoding. `parent_letter[i]` is the index of the letter whose right
/// multiplication first discovered element `i` (absent after loading from a
/// file; geodesic reconstruction then walks down by length).
#[derive(Debug)]
pub struct BallTable {
    action: ModuleAction,
    genset: GenSet,
    radius: u32,
    complete: bool,
    index: HashMap<Box<[u8]>, u32>,
    lens: Vec<u32>,
    parent_letter: Vec<u8>,
    spheres: Vec<u64>,
}

/// Result of a depth query. With a complete ball table the answer is always
/// certifiable, so `Exact` is what callers will see; `LowerBound` is kept for
/// interface completeness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Exact(u32),
    LowerBound(u32),
}

impl Depth {
    pub fn value(self) -> u32 {
        match self {
            Depth::Exact(v) | Depth::LowerBound(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Depth::Exact(_))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BallError {
    #[error("memory budget exceeded; completed radius {achieved}")]
    BudgetExceeded { achieved: u32, partial: Box<BallTable> },
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("element is outside the enumerated ball")]
    OutsideBall,
    #[error("restriction radius {r} exceeds the table radius {radius}")]
    RadiusTooLarge { r: u32, radius: u32 },
}

#[derive(Debug, thiserror::Error)]
pub enum BallFileError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("not a ball table file")]
    BadMagic,
    #[error("unsupported file version {0}")]
    BadVersion(u32),
    #[error("malformed file: {0}")]
    Malformed(&'static str),
    #[error("element decode failed: {0}")]
    Element(#[from] DecodeError),
}

/// Enumerates the closed ball of radius `r`, spending at most roughly
/// `budget_bytes` on the table. On budget exhaustion the completed levels are
/// returned inside the error, so callers can persist the partial result.
pub fn enumerate_ball(
    action: &ModuleAction,
    genset: &GenSet,
    r: u32,
    budget_bytes: u64,
) -> Result<BallTable, BallError> {
    let id = action.identity();
    let id_enc = id.encode();
    let mut bytes_used = id_enc.len() as u64 + PER_ENTRY_OVERHEAD;
    let mut table = BallTable {
        action: action.clone(),
        genset: genset.clone(),
        radius: 0,
        complete: true,
        index: HashMap::new(),
        lens: vec![0],
        parent_letter: vec![u8::MAX],
        spheres: vec![1],
    };
    table.index.insert(id_enc.into_boxed_slice(), 0);
    let mut frontier: Vec<GroupElement> = vec![id];

    for level in 1..=r {
        let candidates = expand_frontier(action, genset, &frontier);
        let mut next: Vec<GroupElement> = Vec::new();
        let mut added_keys: Vec<Box<[u8]>> = Vec::new();
        let mut exhausted = false;
        for (enc, elem, letter_idx) in candidates {
            if table.index.contains_key(enc.as_slice()) {
                continue;
            }
            bytes_used += enc.len() as u64 + PER_ENTRY_OVERHEAD;
            if bytes_used > budget_bytes {
                exhausted = true;
                break;
            }
            let key: Box<[u8]> = enc.into_boxed_slice();
            let idx = table.lens.len() as u32;
            table.index.insert(key.clone(), idx);
            added_keys.push(key);
            table.lens.push(level);
            table.parent_letter.push(letter_idx);
            next.push(elem);
        }
        if exhausted {
            // Roll the partial level back so the table is exactly B(level-1).
            for key in &added_keys {
                table.index.remove(key);
            }
            let keep = table.lens.len() - added_keys.len();
            table.lens.truncate(keep);
            table.parent_letter.truncate(keep);
            let achieved = level - 1;
            table.radius = achieved;
            table.complete = false;
            return Err(BallError::BudgetExceeded {
                achieved,
                partial: Box::new(table),
            });
        }
        table.spheres.push(next.len() as u64);
        table.radius = level;
        if next.is_empty() {
            break; // finite group exhausted
        }
        frontier = next;
    }
    table.radius = r;
    Ok(table)
}

/// Expands one BFS level. Parallel over frontier chunks; the concatenation
/// order equals the sequential frontier × letters order.
fn expand_frontier(
    action: &ModuleAction,
    genset: &GenSet,
    frontier: &[GroupElement],
) -> Vec<(Vec<u8>, GroupElement, u8)> {
    let expand_one = |g: &GroupElement, out: &mut Vec<(Vec<u8>, GroupElement, u8)>| {
        for (li, s) in genset.letters().iter().enumerate() {
            let n = action.multiply(g, s);
            out.push((n.encode(), n, li as u8));
        }
    };
    if frontier.len() < 512 {
        let mut out = Vec::with_capacity(frontier.len() * genset.len());
        for g in frontier {
            expand_one(g, &mut out);
        }
        out
    } else {
        frontier
            .par_chunks(512)
            .map(|chunk| {
                let mut out = Vec::with_capacity(chunk.len() * genset.len());
                for g in chunk {
                    expand_one(g, &mut out);
                }
                out
            })
            .collect::<Vec<_>>()
            .concat()
    }
}

impl BallTable {
    pub fn action(&self) -> &ModuleAction {
        &self.action
    }

    pub fn genset(&self) -> &GenSet {
        &self.genset
    }

    /// Achieved radius (equals the requested radius unless the budget ran out
    /// or the group was exhausted earlier).
    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    /// Number of stored elements, `|B̄(R)|`.
    pub fn len(&self) -> usize {
        self.lens.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sphere cardinalities `|S(0)|, …, |S(R)|`.
    pub fn sphere_sizes(&self) -> &[u64] {
        &self.spheres
    }

    /// First radius whose sphere is smaller than its predecessor, if any.
    /// A shrinking sphere is normal for finite quotients, suspicious for the
    /// shipped infinite families; callers may warn but should not assert.
    pub fn sphere_monotone_violation(&self) -> Option<u32> {
        self.spheres
            .windows(2)
            .position(|w| w[1] < w[0])
            .map(|i| i as u32 + 1)
    }

    /// Exact word length if `|g| ≤ R`, `None` (absent) otherwise.
    pub fn word_length(&self, g: &GroupElement) -> Option<u32> {
        self.index
            .get(g.encode().as_slice())
            .map(|&idx| self.lens[idx as usize])
    }

    fn idx_of(&self, g: &GroupElement) -> Option<u32> {
        self.index.get(g.encode().as_slice()).copied()
    }

    /// Iterates all stored elements with their lengths (unspecified order).
    pub fn iter(&self) -> impl Iterator<Item = (GroupElement, u32)> + '_ {
        self.index.iter().map(move |(key, &idx)| {
            let g = GroupElement::decode(&self.action, key).expect("stored key decodes");
            (g, self.lens[idx as usize])
        })
    }

    /// Shortest path length from `g` to `h` through elements of word length
    /// ≤ `r` only. `Ok(None)` means unreachable inside `B̄(r)`.
    pub fn restricted_distance(
        &self,
        g: &GroupElement,
        h: &GroupElement,
        r: u32,
    ) -> Result<Option<u32>, QueryError> {
        if r > self.radius {
            return Err(QueryError::RadiusTooLarge { r, radius: self.radius });
        }
        let g_idx = self.idx_of(g).ok_or(QueryError::OutsideBall)?;
        let h_idx = self.idx_of(h).ok_or(QueryError::OutsideBall)?;
        if self.lens[g_idx as usize] > r || self.lens[h_idx as usize] > r {
            return Err(QueryError::OutsideBall);
        }
        if g_idx == h_idx {
            return Ok(Some(0));
        }
        let mut visited = vec![false; self.lens.len()];
        visited[g_idx as usize] = true;
        let mut frontier = vec![g.clone()];
        let mut dist = 0u32;
        while !frontier.is_empty() {
            dist += 1;
            let mut next = Vec::new();
            for f in &frontier {
                for s in self.genset.letters() {
                    let n = self.action.multiply(f, s);
                    let Some(idx) = self.idx_of(&n) else { continue };
                    if self.lens[idx as usize] > r || visited[idx as usize] {
                        continue;
                    }
                    if idx == h_idx {
                        return Ok(Some(dist));
                    }
                    visited[idx as usize] = true;
                    next.push(n);
                }
            }
            frontier = next;
        }
        Ok(None)
    }

    /// Distance from `g` to the nearest element strictly longer than `g`
    /// (the dead-end depth). Exact whenever `|g| ≤ R`, which the complete
    /// table certifies: any escape path can be assumed to stay in `B̄(|g|)`
    /// until its final step, and out-of-table neighbors are certified longer.
    pub fn depth(&self, g: &GroupElement) -> Result<Depth, QueryError> {
        let g_idx = self.idx_of(g).ok_or(QueryError::OutsideBall)?;
        let g_len = self.lens[g_idx as usize];
        let mut visited = vec![false; self.lens.len()];
        visited[g_idx as usize] = true;
        let mut frontier = vec![g.clone()];
        let mut dist = 0u32;
        while !frontier.is_empty() {
            dist += 1;
            let mut next = Vec::new();
            for f in &frontier {
                for s in self.genset.letters() {
                    let n = self.action.multiply(f, s);
                    match self.idx_of(&n) {
                        None => return Ok(Depth::Exact(dist)), // |n| > R ≥ |g|
                        Some(idx) => {
                            if self.lens[idx as usize] > g_len {
                                return Ok(Depth::Exact(dist));
                            }
                            if !visited[idx as usize] {
                                visited[idx as usize] = true;
                                next.push(n);
                            }
                        }
                    }
                }
            }
            frontier = next;
        }
        // Unreachable for infinite groups; a finite group fully enumerated
        // has maximal elements with no longer neighbor at all.
        Ok(Depth::LowerBound(dist))
    }

    /// Letter indices of a geodesic word for `g` (identity gives the empty
    /// word). Uses recorded parent letters when available, otherwise walks
    /// down by word length in letter order.
    pub fn geodesic(&self, g: &GroupElement) -> Option<Vec<u8>> {
        let mut idx = self.idx_of(g)?;
        let mut cur = g.clone();
        let mut word = Vec::with_capacity(self.lens[idx as usize] as usize);
        while self.lens[idx as usize] > 0 {
            let li = match self.parent_letter.get(idx as usize) {
                Some(&li) if li != u8::MAX => li,
                _ => {
                    let target = self.lens[idx as usize] - 1;
                    let mut found = None;
                    for (li, s) in self.genset.letters().iter().enumerate() {
                        let p = self.action.multiply(&cur, &self.action.inverse(s));
                        if self.word_length(&p) == Some(target) {
                            found = Some(li as u8);
                            break;
                        }
                    }
                    found?
                }
            };
            word.push(li);
            let s = &self.genset.letters()[li as usize];
            cur = self.action.multiply(&cur, &self.action.inverse(s));
            idx = self.idx_of(&cur)?;
        }
        word.reverse();
        Some(word)
    }

    /// Writes the versioned binary file (header: family + parameters,
    /// generating set, radius; body: encoding/length pairs sorted by key).
    pub fn save(&self, path: &Path) -> Result<(), BallFileError> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        f.write_all(BALL_FILE_MAGIC)?;
        f.write_all(&BALL_FILE_VERSION.to_le_bytes())?;
        match &self.action {
            ModuleAction::Laurent { q } => {
                f.write_all(&[0u8])?;
                f.write_all(&q.to_le_bytes())?;
            }
            ModuleAction::Sixth => f.write_all(&[1u8])?,
            ModuleAction::Lattice { m } => {
                f.write_all(&[2u8])?;
                for v in [m.a, m.b, m.c, m.d] {
                    f.write_all(&v.to_le_bytes())?;
                }
            }
        }
        f.write_all(&(self.genset.len() as u32).to_le_bytes())?;
        for l in self.genset.letters() {
            let enc = l.encode();
            f.write_all(&(enc.len() as u32).to_le_bytes())?;
            f.write_all(&enc)?;
        }
        f.write_all(&self.radius.to_le_bytes())?;
        f.write_all(&[u8::from(self.complete)])?;
        let mut pairs: Vec<(&Box<[u8]>, u32)> = self
            .index
            .iter()
            .map(|(k, &i)| (k, self.lens[i as usize]))
            .collect();
        pairs.sort_by(|a, b| a.0.cmp(b.0));
        f.write_all(&(pairs.len() as u64).to_le_bytes())?;
        for (key, len) in pairs {
            f.write_all(&(key.len() as u32).to_le_bytes())?;
            f.write_all(key)?;
            f.write_all(&len.to_le_bytes())?;
        }
        f.flush()?;
        Ok(())
    }

    /// Reads a file written by [`BallTable::save`]. Parent letters are not
    /// persisted; geodesic queries fall back to walking down by length.
    pub fn load(path: &Path) -> Result<BallTable, BallFileError> {
        let mut f = std::io::BufReader::new(std::fs::File::open(path)?);
        let mut magic = [0u8; 4];
        f.read_exact(&mut magic)?;
        if &magic != BALL_FILE_MAGIC {
            return Err(BallFileError::BadMagic);
        }
        let version = read_u32(&mut f)?;
        if version != BALL_FILE_VERSION {
            return Err(BallFileError::BadVersion(version));
        }
        let mut tag = [0u8; 1];
        f.read_exact(&mut tag)?;
        let action = match tag[0] {
            0 => ModuleAction::Laurent { q: read_u32(&mut f)? },
            1 => ModuleAction::Sixth,
            2 => {
                let a = read_i64(&mut f)?;
                let b = read_i64(&mut f)?;
                let c = read_i64(&mut f)?;
                let d = read_i64(&mut f)?;
                ModuleAction::Lattice { m: Mat2::new(a, b, c, d) }
            }
            _ => return Err(BallFileError::Malformed("family tag")),
        };
        let n_letters = read_u32(&mut f)? as usize;
        let mut letters = Vec::with_capacity(n_letters);
        for _ in 0..n_letters {
            let len = read_u32(&mut f)? as usize;
            let mut buf = vec![0u8; len];
            f.read_exact(&mut buf)?;
            letters.push(GroupElement::decode(&action, &buf)?);
        }
        let genset = GenSet::new(&action, letters, false)
            .map_err(|_| BallFileError::Malformed("generating set"))?;
        let radius = read_u32(&mut f)?;
        let mut flag = [0u8; 1];
        f.read_exact(&mut flag)?;
        let complete = flag[0] != 0;
        let count = read_u64(&mut f)? as usize;
        let mut index = HashMap::with_capacity(count);
        let mut lens = Vec::with_capacity(count);
        let mut spheres = vec![0u64; radius as usize + 1];
        for i in 0..count {
            let klen = read_u32(&mut f)? as usize;
            let mut key = vec![0u8; klen];
            f.read_exact(&mut key)?;
            let len = read_u32(&mut f)?;
            if len > radius {
                return Err(BallFileError::Malformed("length exceeds radius"));
            }
            spheres[len as usize] += 1;
            index.insert(key.into_boxed_slice(), i as u32);
            lens.push(len);
        }
        if spheres.first() != Some(&1) {
            return Err(BallFileError::Malformed("missing identity"));
        }
        Ok(BallTable {
            action,
            genset,
            radius,
            complete,
            index,
            lens,
            parent_letter: Vec::new(),
            spheres,
        })
    }
}

fn read_u32<R: Read>(r: &mut R) -> std::io::Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64<R: Read>(r: &mut R) -> std::io::Result<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(u64::from_le_bytes(b))
}

fn read_i64<R: Read>(r: &mut R) -> std::io::Result<i64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(i64::from_le_bytes(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ModuleElement;

    const BUDGET: u64 = 1 << 30;

    #[test]
    fn radius_zero_is_identity_only() {
        let action = ModuleAction::sixth();
        let gs = GenSet::standard(&action);
        let t = enumerate_ball(&action, &gs, 0, BUDGET).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.sphere_sizes(), &[1]);
        assert_eq!(t.word_length(&action.identity()), Some(0));
    }

    #[test]
    fn radius_one_is_letters() {
        for action in [
            ModuleAction::laurent(2).unwrap(),
            ModuleAction::sixth(),
            ModuleAction::lattice_default(),
        ] {
            let gs = GenSet::standard(&action);
            let t = enumerate_ball(&action, &gs, 1, BUDGET).unwrap();
            assert_eq!(t.len(), 1 + gs.len());
            for s in gs.letters() {
                assert_eq!(t.word_length(s), Some(1));
            }
        }
    }

    #[test]
    fn lengths_are_symmetric_and_triangle_holds() {
        let action = ModuleAction::laurent(2).unwrap();
        let gs = GenSet::standard(&action);
        let t = enumerate_ball(&action, &gs, 6, BUDGET).unwrap();
        let elems: Vec<(GroupElement, u32)> = t.iter().collect();
        for (g, len) in &elems {
            assert_eq!(t.word_length(&action.inverse(g)), Some(*len));
        }
        // spot-check the triangle inequality on a slice of pairs
        for (g, lg) in elems.iter().take(40) {
            for (h, lh) in elems.iter().take(40) {
                let p = action.multiply(g, h);
                if let Some(lp) = t.word_length(&p) {
                    assert!(lp <= lg + lh);
                }
            }
        }
    }

    #[test]
    fn product_of_two_distinct_letters_is_at_most_two() {
        let action = ModuleAction::sixth();
        let gs = GenSet::standard(&action);
        let t = enumerate_ball(&action, &gs, 2, BUDGET).unwrap();
        let s0 = &gs.letters()[0];
        let s1 = &gs.letters()[1];
        let p = action.multiply(s0, s1);
        let len = t.word_length(&p).unwrap();
        assert!(len >= 1 && len <= 2);
    }

    #[test]
    fn restricted_distance_basics() {
        let action = ModuleAction::sixth();
        let gs = GenSet::standard(&action);
        let t = enumerate_ball(&action, &gs, 5, BUDGET).unwrap();
        let g = &gs.letters()[0];
        assert_eq!(t.restricted_distance(g, g, 3), Ok(Some(0)));
        // with a slack restriction the distance equals the word length of g^{-1}h
        for h in gs.letters().iter() {
            let d = t.restricted_distance(g, h, 5).unwrap().unwrap();
            let direct = t
                .word_length(&action.multiply(&action.inverse(g), h))
                .unwrap();
            assert_eq!(d, direct);
        }
        // monotone non-increasing in r
        let h = &gs.letters()[2];
        let d3 = t.restricted_distance(g, h, 3).unwrap();
        let d5 = t.restricted_distance(g, h, 5).unwrap();
        if let (Some(a), Some(b)) = (d3, d5) {
            assert!(b <= a);
        }
        assert_eq!(
            t.restricted_distance(g, h, 9),
            Err(QueryError::RadiusTooLarge { r: 9, radius: 5 })
        );
    }

    #[test]
    fn depth_of_identity_and_letters() {
        let action = ModuleAction::laurent(2).unwrap();
        let gs = GenSet::standard(&action);
        let t = enumerate_ball(&action, &gs, 5, BUDGET).unwrap();
        assert_eq!(t.depth(&action.identity()), Ok(Depth::Exact(1)));
        for s in gs.letters() {
            let d = t.depth(s).unwrap();
            assert!(d.is_exact());
            assert!(d.value() >= 1);
        }
    }

    #[test]
    fn budget_exhaustion_returns_partial() {
        let action = ModuleAction::laurent(2).unwrap();
        let gs = GenSet::standard(&action);
        let err = enumerate_ball(&action, &gs, 8, 600).unwrap_err();
        match err {
            BallError::BudgetExceeded { achieved, partial } => {
                assert!(achieved < 8);
                assert_eq!(partial.radius(), achieved);
                assert!(!partial.complete());
                // the partial table is still an exact smaller ball
                let full = enumerate_ball(&action, &gs, achieved, BUDGET).unwrap();
                assert_eq!(partial.len(), full.len());
                assert_eq!(partial.sphere_sizes(), full.sphere_sizes());
            }
        }
    }

    #[test]
    fn save_load_roundtrip() {
        let action = ModuleAction::lattice_default();
        let gs = GenSet::standard(&action);
        let t = enumerate_ball(&action, &gs, 4, BUDGET).unwrap();
        let dir = std::env::temp_dir().join("solgeo_test_ball");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("roundtrip.sgb");
        t.save(&path).unwrap();
        let back = BallTable::load(&path).unwrap();
        assert_eq!(back.radius(), t.radius());
        assert_eq!(back.len(), t.len());
        assert_eq!(back.sphere_sizes(), t.sphere_sizes());
        for (g, len) in t.iter().take(100) {
            assert_eq!(back.word_length(&g), Some(len));
        }
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn geodesic_reconstruction() {
        let action = ModuleAction::sixth();
        let gs = GenSet::standard(&action);
        let t = enumerate_ball(&action, &gs, 5, BUDGET).unwrap();
        for (g, len) in t.iter() {
            let word = t.geodesic(&g).expect("in ball");
            assert_eq!(word.len() as u32, len);
            let letters: Vec<GroupElement> = word
                .iter()
                .map(|&li| gs.letters()[li as usize].clone())
                .collect();
            assert_eq!(action.word_evaluate(&letters), g);
        }
    }

    #[test]
    fn identity_letter_rejected() {
        let action = ModuleAction::sixth();
        let err = GenSet::new(&action, vec![action.identity()], true);
        assert_eq!(err.unwrap_err(), GenSetError::IdentityLetter);
    }

    #[test]
    fn word_length_outside_ball_is_absent() {
        let action = ModuleAction::sixth();
        let gs = GenSet::standard(&action);
        let t = enumerate_ball(&action, &gs, 2, BUDGET).unwrap();
        let far = action.power(&gs.letters()[0], 9);
        assert_eq!(t.word_length(&far), None);
        let k = ModuleElement::Sixth(crate::group::SixthRational::from_fraction(1, 64).unwrap());
        assert_eq!(t.word_length(&action.embed(k)), None);
    }
}
