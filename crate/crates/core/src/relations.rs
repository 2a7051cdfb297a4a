//! Defining relations of VSB_n and of its reduced presentation, and single-step rewriting.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{BraidWord, Letter, LetterKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("unknown relation family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters {params:?} for {family}: {reason}")]
    BadParams { family: String, params: Vec<i32>, reason: String },
    #[error("{rel} needs index {index}, beyond n-1 for n={n}")]
    IndexOutOfRange { rel: String, index: usize, n: usize },
    #[error("position {pos} is out of range for a word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("{rel} {dir} does not match at position {pos}")]
    NoMatch { rel: String, dir: Dir, pos: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
}

/// Families of the full presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// σᵢσᵢ⁻¹ = 1 = σᵢ⁻¹σᵢ
    InvCancel,
    /// vᵢ² = 1
    VirtInvol,
    /// σᵢσⱼσᵢ = σⱼσᵢσⱼ
    R3,
    /// vᵢvⱼvᵢ = vⱼvᵢvⱼ
    V3,
    /// vᵢσⱼvᵢ = vⱼσᵢvⱼ
    VR3,
    /// vᵢτⱼvᵢ = vⱼτᵢvⱼ
    VS3,
    /// σᵢσⱼτᵢ = τⱼσᵢσⱼ
    RS3,
    /// σᵢτᵢ = τᵢσᵢ
    RS1,
    /// gᵢhⱼ = hⱼgᵢ for |i-j| > 1
    FarComm,
}

/// Families of the reduced presentation on σ₁^±, τ₁ and v₁..v_{n-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReducedFamily {
    V3r,
    VFarComm,
    VInvol,
    Base20a,
    Base23,
    BaseR3,
    BaseRS3,
    BaseFarRR,
    BaseFarRT,
    BaseFarTT,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::InvCancel,
        Family::VirtInvol,
        Family::R3,
        Family::V3,
        Family::VR3,
        Family::VS3,
        Family::RS3,
        Family::RS1,
        Family::FarComm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::InvCancel => "InvCancel",
            Family::VirtInvol => "VirtInvol",
            Family::R3 => "R3",
            Family::V3 => "V3",
            Family::VR3 => "VR3",
            Family::VS3 => "VS3",
            Family::RS3 => "RS3",
            Family::RS1 => "RS1",
            Family::FarComm => "FarComm",
        }
    }
}

impl ReducedFamily {
    pub const ALL: [ReducedFamily; 10] = [
        ReducedFamily::V3r,
        ReducedFamily::VFarComm,
        ReducedFamily::VInvol,
        ReducedFamily::Base20a,
        ReducedFamily::Base23,
        ReducedFamily::BaseR3,
        ReducedFamily::BaseRS3,
        ReducedFamily::BaseFarRR,
        ReducedFamily::BaseFarRT,
        ReducedFamily::BaseFarTT,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReducedFamily::V3r => "V3r",
            ReducedFamily::VFarComm => "VFarComm",
            ReducedFamily::VInvol => "VInvol",
            ReducedFamily::Base20a => "Base20a",
            ReducedFamily::Base23 => "Base23",
            ReducedFamily::BaseR3 => "BaseR3",
            ReducedFamily::BaseRS3 => "BaseRS3",
            ReducedFamily::BaseFarRR => "BaseFarRR",
            ReducedFamily::BaseFarRT => "BaseFarRT",
            ReducedFamily::BaseFarTT => "BaseFarTT",
        }
    }
}

/// A concrete relation of the full presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationId {
    pub family: Family,
    pub params: Vec<i32>,
}

/// A concrete relation of the reduced presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedRelationId {
    pub family: ReducedFamily,
    pub params: Vec<i32>,
}

/// Either kind of relation, as carried by rewrite steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelRef {
    Original(RelationId),
    Reduced(ReducedRelationId),
    /// A name that matches no family; kept so replay can report it at the right step.
    Unknown(String, Vec<i32>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    L2R,
    R2L,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::L2R => Dir::R2L,
            Dir::R2L => Dir::L2R,
        }
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dir::L2R => "L2R",
            Dir::R2L => "R2L",
        })
    }
}

type Sides = (Vec<Letter>, Vec<Letter>);

fn bad(family: &str, params: &[i32], reason: &str) -> RelationError {
    RelationError::BadParams {
        family: family.to_string(),
        params: params.to_vec(),
        reason: reason.to_string(),
    }
}

/// Checks the parameter count and that the first `indices` parameters are valid indices.
fn arity(family: &str, params: &[i32], k: usize, indices: usize) -> Result<(), RelationError> {
    if params.len() != k {
        return Err(bad(family, params, &format!("expected {k} parameters")));
    }
    if params.iter().take(indices).any(|&p| p < 1 || p as usize > crate::word::MAX_INDEX) {
        return Err(bad(family, params, "indices must lie in 1..=63"));
    }
    Ok(())
}

fn adjacent_pair(family: &str, params: &[i32]) -> Result<(usize, usize), RelationError> {
    arity(family, params, 2, 2)?;
    if params[0].abs_diff(params[1]) != 1 {
        return Err(bad(family, params, "indices must differ by 1"));
    }
    Ok((params[0] as usize, params[1] as usize))
}

fn far_pair(family: &str, params: &[i32]) -> Result<(usize, usize), RelationError> {
    if params.len() < 2 {
        return Err(bad(family, params, "expected two indices"));
    }
    arity(family, &params[..2], 2, 2)?;
    if params[0].abs_diff(params[1]) <= 1 {
        return Err(bad(family, params, "indices must differ by more than 1"));
    }
    Ok((params[0] as usize, params[1] as usize))
}

fn kind_param(family: &str, params: &[i32], code: i32) -> Result<LetterKind, RelationError> {
    u8::try_from(code)
        .ok()
        .and_then(LetterKind::from_code)
        .ok_or_else(|| bad(family, params, "kind codes are 0..=3"))
}

use Letter as L;

fn three(a: Letter, b: Letter, c: Letter) -> Vec<Letter> {
    vec![a, b, c]
}

/// `v1 v2 x1 v2 v1`, the image of x₂ under the reduction map.
pub(crate) fn conj2(x: Letter) -> Vec<Letter> {
    vec![L::virt(1), L::virt(2), x, L::virt(2), L::virt(1)]
}

/// `v2 v3 v1 v2 x1 v2 v1 v3 v2`, the image of x₃ under the shift of `conj2`.
pub(crate) fn conj3(x: Letter) -> Vec<Letter> {
    vec![
        L::virt(2),
        L::virt(3),
        L::virt(1),
        L::virt(2),
        x,
        L::virt(2),
        L::virt(1),
        L::virt(3),
        L::virt(2),
    ]
}

fn cat(parts: &[&[Letter]]) -> Vec<Letter> {
    parts.concat()
}

impl RelationId {
    pub fn new(family: Family, params: Vec<i32>) -> RelationId {
        RelationId { family, params }
    }

    /// Left and right sides, validated against the parameter rules (not against n).
    pub fn sides(&self) -> Result<Sides, RelationError> {
        let name = self.family.name();
        let p = &self.params;
        Ok(match self.family {
            Family::InvCancel => {
                arity(name, p, 2, 1)?;
                let i = p[0] as usize;
                match p[1] {
                    1 => (vec![L::sigma(i), L::sigma_inv(i)], vec![]),
                    -1 => (vec![L::sigma_inv(i), L::sigma(i)], vec![]),
                    _ => return Err(bad(name, p, "sign must be 1 or -1")),
                }
            }
            Family::VirtInvol => {
                arity(name, p, 1, 1)?;
                let i = p[0] as usize;
                (vec![L::virt(i), L::virt(i)], vec![])
            }
            Family::R3 => {
                let (i, j) = adjacent_pair(name, p)?;
                (three(L::sigma(i), L::sigma(j), L::sigma(i)), three(L::sigma(j), L::sigma(i), L::sigma(j)))
            }
            Family::V3 => {
                let (i, j) = adjacent_pair(name, p)?;
                (three(L::virt(i), L::virt(j), L::virt(i)), three(L::virt(j), L::virt(i), L::virt(j)))
            }
            Family::VR3 => {
                let (i, j) = adjacent_pair(name, p)?;
                (three(L::virt(i), L::sigma(j), L::virt(i)), three(L::virt(j), L::sigma(i), L::virt(j)))
            }
            Family::VS3 => {
                let (i, j) = adjacent_pair(name, p)?;
                (three(L::virt(i), L::tau(j), L::virt(i)), three(L::virt(j), L::tau(i), L::virt(j)))
            }
            Family::RS3 => {
                let (i, j) = adjacent_pair(name, p)?;
                (three(L::sigma(i), L::sigma(j), L::tau(i)), three(L::tau(j), L::sigma(i), L::sigma(j)))
            }
            Family::RS1 => {
                arity(name, p, 1, 1)?;
                let i = p[0] as usize;
                (vec![L::sigma(i), L::tau(i)], vec![L::tau(i), L::sigma(i)])
            }
            Family::FarComm => {
                if p.len() != 4 {
                    return Err(bad(name, p, "expected 4 parameters"));
                }
                let (i, j) = far_pair(name, p)?;
                let g = Letter::new(kind_param(name, p, p[2])?, i);
                let h = Letter::new(kind_param(name, p, p[3])?, j);
                (vec![g, h], vec![h, g])
            }
        })
    }
}

impl ReducedRelationId {
    pub fn new(family: ReducedFamily, params: Vec<i32>) -> ReducedRelationId {
        ReducedRelationId { family, params }
    }

    pub fn sides(&self) -> Result<Sides, RelationError> {
        let name = self.family.name();
        let p = &self.params;
        let (s1, t1) = (L::sigma(1), L::tau(1));
        Ok(match self.family {
            ReducedFamily::V3r => {
                let (i, j) = adjacent_pair(name, p)?;
                (three(L::virt(i), L::virt(j), L::virt(i)), three(L::virt(j), L::virt(i), L::virt(j)))
            }
            ReducedFamily::VFarComm => {
                arity(name, p, 2, 2)?;
                let (i, j) = far_pair(name, p)?;
                (vec![L::virt(i), L::virt(j)], vec![L::virt(j), L::virt(i)])
            }
            ReducedFamily::VInvol => {
                arity(name, p, 1, 1)?;
                let i = p[0] as usize;
                (vec![L::virt(i), L::virt(i)], vec![])
            }
            ReducedFamily::Base20a => {
                arity(name, p, 1, 0)?;
                match p[0] {
                    0 => (vec![s1, t1], vec![t1, s1]),
                    1 => (vec![s1, L::sigma_inv(1)], vec![]),
                    -1 => (vec![L::sigma_inv(1), s1], vec![]),
                    _ => return Err(bad(name, p, "variant must be -1, 0 or 1")),
                }
            }
            ReducedFamily::Base23 => {
                arity(name, p, 2, 1)?;
                let i = p[0] as usize;
                if i < 3 {
                    return Err(bad(name, p, "virtual index must be at least 3"));
                }
                let x = match p[1] {
                    0 => s1,
                    2 => t1,
                    _ => return Err(bad(name, p, "kind must be 0 (sigma) or 2 (tau)")),
                };
                (vec![x, L::virt(i)], vec![L::virt(i), x])
            }
            ReducedFamily::BaseR3 | ReducedFamily::BaseRS3 => {
                arity(name, p, 0, 0)?;
                let x = conj2(s1);
                if self.family == ReducedFamily::BaseR3 {
                    (cat(&[&[s1], &x, &[s1]]), cat(&[&x, &[s1], &x]))
                } else {
                    (cat(&[&[t1], &x, &[s1]]), cat(&[&x, &[s1], &conj2(t1)]))
                }
            }
            ReducedFamily::BaseFarRR | ReducedFamily::BaseFarRT | ReducedFamily::BaseFarTT => {
                arity(name, p, 0, 0)?;
                let (head, inner) = match self.family {
                    ReducedFamily::BaseFarRR => (s1, s1),
                    ReducedFamily::BaseFarRT => (t1, s1),
                    _ => (t1, t1),
                };
                let z = conj3(inner);
                (cat(&[&[head], &z]), cat(&[&z, &[head]]))
            }
        })
    }
}

impl RelRef {
    pub fn family_name(&self) -> &str {
        match self {
            RelRef::Original(r) => r.family.name(),
            RelRef::Reduced(r) => r.family.name(),
            RelRef::Unknown(name, _) => name,
        }
    }

    pub fn params(&self) -> &[i32] {
        match self {
            RelRef::Original(r) => &r.params,
            RelRef::Reduced(r) => &r.params,
            RelRef::Unknown(_, p) => p,
        }
    }

    pub fn sides(&self) -> Result<Sides, RelationError> {
        match self {
            RelRef::Original(r) => r.sides(),
            RelRef::Reduced(r) => r.sides(),
            RelRef::Unknown(name, _) => Err(RelationError::UnknownFamily(name.clone())),
        }
    }

    /// Looks a family up by name in both presentations.
    pub fn from_parts(name: &str, params: Vec<i32>) -> Result<RelRef, RelationError> {
        if let Some(f) = Family::ALL.iter().find(|f| f.name() == name) {
            return Ok(RelRef::Original(RelationId::new(*f, params)));
        }
        if let Some(f) = ReducedFamily::ALL.iter().find(|f| f.name() == name) {
            return Ok(RelRef::Reduced(ReducedRelationId::new(*f, params)));
        }
        Err(RelationError::UnknownFamily(name.to_string()))
    }

    /// Sides checked against the strand count.
    pub fn sides_for(&self, n: usize) -> Result<Sides, RelationError> {
        let sides = self.sides()?;
        let max = sides.0.iter().chain(&sides.1).map(|l| l.index).max().unwrap_or(0);
        if max + 1 > n {
            return Err(RelationError::IndexOutOfRange { rel: self.to_string(), index: max, n });
        }
        Ok(sides)
    }
}

impl From<RelationId> for RelRef {
    fn from(r: RelationId) -> RelRef {
        RelRef::Original(r)
    }
}

impl From<ReducedRelationId> for RelRef {
    fn from(r: ReducedRelationId) -> RelRef {
        RelRef::Reduced(r)
    }
}

impl fmt::Display for RelRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.family_name(), self.params())
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.family.name(), self.params)
    }
}

impl fmt::Display for ReducedRelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.family.name(), self.params)
    }
}

fn adjacent_pairs(n: usize) -> Vec<[i32; 2]> {
    let mut out = Vec::new();
    for i in 1..n as i32 {
        for j in [i - 1, i + 1] {
            if j >= 1 && j < n as i32 {
                out.push([i, j]);
            }
        }
    }
    out
}

fn far_pairs(n: usize) -> Vec<[i32; 2]> {
    let mut out = Vec::new();
    for i in 1..n as i32 {
        for j in i + 2..n as i32 {
            out.push([i, j]);
        }
    }
    out
}

/// Every relation of the full presentation of VSB_n, by family and then ascending parameters.
pub fn relation_set(n: usize) -> Vec<RelationId> {
    let mut out = Vec::new();
    let singles: Vec<i32> = (1..n as i32).collect();
    for family in Family::ALL {
        match family {
            Family::InvCancel => {
                for &i in &singles {
                    out.push(RelationId::new(family, vec![i, -1]));
                    out.push(RelationId::new(family, vec![i, 1]));
                }
            }
            Family::VirtInvol | Family::RS1 => {
                out.extend(singles.iter().map(|&i| RelationId::new(family, vec![i])));
            }
            Family::FarComm => {
                for [i, j] in far_pairs(n) {
                    for g in 0..4 {
                        for h in 0..4 {
                            out.push(RelationId::new(family, vec![i, j, g, h]));
                        }
                    }
                }
            }
            _ => {
                out.extend(adjacent_pairs(n).iter().map(|p| RelationId::new(family, p.to_vec())));
            }
        }
    }
    out
}

/// Every relation of the reduced presentation of VSB_n.
pub fn reduced_relation_set(n: usize) -> Vec<ReducedRelationId> {
    let mut out = Vec::new();
    for family in ReducedFamily::ALL {
        let mut push = |params: Vec<i32>| out.push(ReducedRelationId::new(family, params));
        match family {
            ReducedFamily::V3r => adjacent_pairs(n).iter().for_each(|p| push(p.to_vec())),
            ReducedFamily::VFarComm => far_pairs(n).iter().for_each(|p| push(p.to_vec())),
            ReducedFamily::VInvol => (1..n as i32).for_each(|i| push(vec![i])),
            ReducedFamily::Base20a if n >= 2 => [-1, 0, 1].into_iter().for_each(|k| push(vec![k])),
            ReducedFamily::Base23 => {
                for i in 3..n as i32 {
                    push(vec![i, 0]);
                    push(vec![i, 2]);
                }
            }
            ReducedFamily::BaseR3 | ReducedFamily::BaseRS3 if n >= 3 => push(vec![]),
            ReducedFamily::BaseFarRR | ReducedFamily::BaseFarRT | ReducedFamily::BaseFarTT
                if n >= 4 =>
            {
                push(vec![])
            }
            _ => {}
        }
    }
    out
}

/// A relation compiled to letter codes.
#[derive(Clone, Debug)]
pub struct Rule {
    pub id: RelRef,
    pub lhs: Vec<u8>,
    pub rhs: Vec<u8>,
}

impl Rule {
    pub fn side(&self, dir: Dir) -> (&[u8], &[u8]) {
        match dir {
            Dir::L2R => (&self.lhs, &self.rhs),
            Dir::R2L => (&self.rhs, &self.lhs),
        }
    }
}

/// A compiled relation set for a fixed strand count, indexed for fast matching.
#[derive(Clone, Debug)]
pub struct RelationSet {
    n: usize,
    rules: Vec<Rule>,
    lookup: HashMap<RelRef, usize>,
    /// (rule, dir) pairs keyed by the first letter of their source side
    by_first: HashMap<u8, Vec<(usize, Dir)>>,
    /// (rule, dir) pairs with an empty source side
    inserts: Vec<(usize, Dir)>,
}

impl RelationSet {
    pub fn from_refs<I>(n: usize, refs: I) -> Result<RelationSet, RelationError>
    where
        I: IntoIterator<Item = RelRef>,
    {
        let mut rules = Vec::new();
        let mut lookup = HashMap::new();
        for id in refs {
            if lookup.contains_key(&id) {
                continue;
            }
            let (lhs, rhs) = id.sides_for(n)?;
            lookup.insert(id.clone(), rules.len());
            rules.push(Rule {
                id,
                lhs: lhs.iter().map(|l| l.code()).collect(),
                rhs: rhs.iter().map(|l| l.code()).collect(),
            });
        }
        let mut by_first: HashMap<u8, Vec<(usize, Dir)>> = HashMap::new();
        let mut inserts = Vec::new();
        for (k, rule) in rules.iter().enumerate() {
            for dir in [Dir::L2R, Dir::R2L] {
                match rule.side(dir).0.first() {
                    Some(&c) => by_first.entry(c).or_default().push((k, dir)),
                    None => inserts.push((k, dir)),
                }
            }
        }
        Ok(RelationSet { n, rules, lookup, by_first, inserts })
    }

    /// The full presentation of VSB_n.
    pub fn original(n: usize) -> RelationSet {
        RelationSet::from_refs(n, relation_set(n).into_iter().map(RelRef::from))
            .expect("generated relations are in range")
    }

    /// The reduced presentation of VSB_n.
    pub fn reduced(n: usize) -> RelationSet {
        RelationSet::from_refs(n, reduced_relation_set(n).into_iter().map(RelRef::from))
            .expect("generated relations are in range")
    }

    /// Only the virtual (Coxeter) relations of the reduced presentation.
    pub fn reduced_virtual(n: usize) -> RelationSet {
        let refs = reduced_relation_set(n).into_iter().filter(|r| {
            matches!(r.family, ReducedFamily::V3r | ReducedFamily::VFarComm | ReducedFamily::VInvol)
        });
        RelationSet::from_refs(n, refs.map(RelRef::from)).expect("generated relations are in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn index_of(&self, id: &RelRef) -> Option<usize> {
        self.lookup.get(id).copied()
    }

    /// Applies rule `k` in direction `dir` at `pos`, or `None` if the source does not match.
    pub(crate) fn apply_codes(&self, word: &[u8], k: usize, dir: Dir, pos: usize) -> Option<Vec<u8>> {
        let (src, tgt) = self.rules[k].side(dir);
        if pos + src.len() > word.len() || &word[pos..pos + src.len()] != src {
            return None;
        }
        let mut out = Vec::with_capacity(word.len() - src.len() + tgt.len());
        out.extend_from_slice(&word[..pos]);
        out.extend_from_slice(tgt);
        out.extend_from_slice(&word[pos + src.len()..]);
        Some(out)
    }

    /// Every single rewrite of `word` whose result has at most `max_len` letters.
    pub(crate) fn successors(&self, word: &[u8], max_len: usize) -> Vec<(Vec<u8>, usize, Dir, usize)> {
        let mut out = Vec::new();
        for pos in 0..word.len() {
            let Some(cands) = self.by_first.get(&word[pos]) else { continue };
            for &(k, dir) in cands {
                let (src, tgt) = self.rules[k].side(dir);
                if word.len() - src.len().min(word.len()) + tgt.len() > max_len {
                    continue;
                }
                if let Some(next) = self.apply_codes(word, k, dir, pos) {
                    out.push((next, k, dir, pos));
                }
            }
        }
        for &(k, dir) in &self.inserts {
            let grow = self.rules[k].side(dir).1.len();
            if word.len() + grow > max_len {
                continue;
            }
            for pos in 0..=word.len() {
                out.push((self.apply_codes(word, k, dir, pos).unwrap(), k, dir, pos));
            }
        }
        out
    }

    /// True when the set contains every Coxeter relation among v₁..v_{n-1}, so that words
    /// can be searched modulo the virtual permutation group.
    pub(crate) fn has_virtual_coxeter(&self) -> bool {
        let v = |i: usize| Letter::virt(i).code();
        let mut found = std::collections::HashSet::new();
        for rule in &self.rules {
            found.insert((rule.lhs.clone(), rule.rhs.clone()));
            found.insert((rule.rhs.clone(), rule.lhs.clone()));
        }
        let n = self.n;
        (1..n).all(|i| found.contains(&(vec![v(i), v(i)], vec![])))
            && (1..n).all(|i| {
                (1..n).filter(|j| j.abs_diff(i) == 1).all(|j| {
                    found.contains(&(vec![v(i), v(j), v(i)], vec![v(j), v(i), v(j)]))
                })
            })
            && (1..n).all(|i| {
                (1..n).filter(|j| j.abs_diff(i) > 1).all(|j| {
                    found.contains(&(vec![v(i), v(j)], vec![v(j), v(i)]))
                })
            })
    }
}

/// One rewrite: replace one side of `rel` by the other at letter offset `pos`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RewriteStep {
    pub rel: RelRef,
    pub pos: usize,
    pub dir: Dir,
}

impl RewriteStep {
    pub fn inverse(&self) -> RewriteStep {
        RewriteStep { rel: self.rel.clone(), pos: self.pos, dir: self.dir.flip() }
    }

    /// Applies this step to a word, checking indices against the word's strand count.
    pub fn apply(&self, word: &BraidWord) -> Result<BraidWord, RelationError> {
        let (lhs, rhs) = self.rel.sides_for(word.n())?;
        let (src, tgt) = match self.dir {
            Dir::L2R => (lhs, rhs),
            Dir::R2L => (rhs, lhs),
        };
        let letters = word.letters();
        if self.pos > letters.len() {
            return Err(RelationError::PositionOutOfRange { pos: self.pos, len: letters.len() });
        }
        if self.pos + src.len() > letters.len() || letters[self.pos..self.pos + src.len()] != src[..] {
            return Err(RelationError::NoMatch { rel: self.rel.to_string(), dir: self.dir, pos: self.pos });
        }
        let mut out = letters[..self.pos].to_vec();
        out.extend(tgt);
        out.extend_from_slice(&letters[self.pos + src.len()..]);
        Ok(BraidWord::new(word.n(), out).expect("indices were range checked"))
    }
}

/// Rewrites `w` by one relation of the full presentation.
pub fn apply_relation(
    w: &BraidWord,
    rel: &RelationId,
    pos: usize,
    dir: Dir,
) -> Result<BraidWord, RelationError> {
    RewriteStep { rel: RelRef::Original(rel.clone()), pos, dir }.apply(w)
}

/// Every word one rewrite away from `w` under `rels`, at most `max_len` letters long,
/// paired with the step producing it. Results are distinct and sorted.
pub fn neighbors(w: &BraidWord, rels: &RelationSet, max_len: usize) -> Vec<(BraidWord, RewriteStep)> {
    let mut out: Vec<(Vec<u8>, RewriteStep)> = rels
        .successors(&w.codes(), max_len)
        .into_iter()
        .map(|(next, k, dir, pos)| (next, RewriteStep { rel: rels.rules[k].id.clone(), pos, dir }))
        .collect();
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    out.dedup_by(|a, b| a.0 == b.0);
    out.into_iter().map(|(c, s)| (BraidWord::from_codes(w.n(), &c), s)).collect()
}
