//! Finite ground sets and the sequences of subsets built on them:
//! decompositions, compositions, colorings and set partitions.
//!
//! Subsets are bitmasks ([`VertexSet`]) over a shared, sorted label table
//! (the *universe*). A [`GroundSet`] is a universe together with the mask of
//! labels that belong to it, so every restriction or contraction of an object
//! keeps pointing at the same table and subsets stay directly comparable.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_VERTICES: usize = 64;

/// A subset of a universe, as a bitmask of label indices.
///
/// The ordering is lexicographic on the ascending index sequence, so with a
/// sorted universe it agrees with the lexicographic order of label lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        debug_assert!(index < MAX_VERTICES);
        VertexSet(1u64 << index)
    }

    /// `{0, .., count-1}`
    pub fn prefix(count: usize) -> Self {
        if count >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << count) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(VertexSet::EMPTY, |acc, i| acc | VertexSet::singleton(i))
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_VERTICES && self.0 >> index & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min_index(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Indices in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Nonempty subsets in increasing bitmask order.
    pub fn nonempty_subsets(self) -> SubsetIter {
        SubsetIter {
            mask: self.0,
            current: 0,
            done: self.0 == 0,
        }
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

#[derive(Clone, Debug)]
pub struct SubsetIter {
    mask: u64,
    current: u64,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        self.current = self.current.wrapping_sub(self.mask) & self.mask;
        if self.current == self.mask {
            self.done = true;
        }
        Some(VertexSet(self.current))
    }
}

/// A finite set of string labels with canonical (lexicographic) iteration order.
#[derive(Clone)]
pub struct GroundSet {
    universe: Arc<[String]>,
    mask: VertexSet,
}

impl GroundSet {
    /// Builds a ground set from labels in any order; duplicates are rejected.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::validation(format!("duplicate vertex label `{}`", w[0])));
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::validation(format!(
                "{} vertices given, at most {MAX_VERTICES} are supported",
                labels.len()
            )));
        }
        let mask = VertexSet::prefix(labels.len());
        Ok(GroundSet {
            universe: labels.into(),
            mask,
        })
    }

    /// Ground set `{"1", .., "k"}` (labels sorted as strings).
    pub fn numbered(k: usize) -> Self {
        GroundSet::new((1..=k).map(|i| i.to_string())).expect("distinct labels")
    }

    pub fn empty() -> Self {
        GroundSet::new(Vec::<String>::new()).expect("empty ground set")
    }

    pub(crate) fn from_parts(universe: Arc<[String]>, mask: VertexSet) -> Self {
        GroundSet { universe, mask }
    }

    pub fn universe(&self) -> &Arc<[String]> {
        &self.universe
    }

    pub fn mask(&self) -> VertexSet {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }

    /// The ground set on the given subset of this one's elements.
    pub fn sub(&self, subset: VertexSet) -> Result<GroundSet> {
        if !subset.is_subset(self.mask) {
            return Err(Error::validation("subset is not contained in the ground set"));
        }
        Ok(GroundSet {
            universe: self.universe.clone(),
            mask: subset,
        })
    }

    pub fn label(&self, index: usize) -> &str {
        &self.universe[index]
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.mask.iter().map(move |i| self.universe[i].as_str())
    }

    pub fn labels_of(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|i| self.universe[i].as_str()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.universe
            .binary_search_by(|l| l.as_str().cmp(label))
            .ok()
            .filter(|&i| self.mask.contains(i))
    }

    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels.iter().try_fold(VertexSet::EMPTY, |acc, l| {
            let l = l.as_ref();
            self.index_of(l)
                .map(|i| acc | VertexSet::singleton(i))
                .ok_or_else(|| Error::validation(format!("`{l}` is not a vertex")))
        })
    }

    /// Position of a universe index within the canonical order of this set.
    pub fn position(&self, index: usize) -> usize {
        (self.mask.bits() & ((1u64 << index) - 1)).count_ones() as usize
    }

    /// Universe indices of the elements in canonical order.
    pub fn indices(&self) -> Vec<usize> {
        self.mask.iter().collect()
    }

    pub fn shares_universe(&self, other: &GroundSet) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe
    }

    /// Equal as ground sets and over the same label table, so masks are interchangeable.
    pub fn is_identical(&self, other: &GroundSet) -> bool {
        self.mask == other.mask && self.shares_universe(other)
    }

    pub fn format_set(&self, set: VertexSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        if self.shares_universe(other) {
            self.mask == other.mask
        } else {
            self.labels().eq(other.labels())
        }
    }
}

impl Eq for GroundSet {}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

fn check_disjoint_cover(ground: &GroundSet, parts: &[VertexSet], allow_empty: bool) -> Result<()> {
    let mut seen = VertexSet::EMPTY;
    for &p in parts {
        if p.is_empty() && !allow_empty {
            return Err(Error::validation("composition parts must be nonempty"));
        }
        if seen.intersects(p) {
            return Err(Error::validation("parts are not pairwise disjoint"));
        }
        seen = seen | p;
    }
    if seen != ground.mask() {
        return Err(Error::validation("parts do not cover the ground set"));
    }
    Ok(())
}

/// A sequence of pairwise-disjoint subsets covering the ground set; empty parts allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    ground: GroundSet,
    parts: Vec<VertexSet>,
}

impl Decomposition {
    pub fn new(ground: GroundSet, parts: Vec<VertexSet>) -> Result<Self> {
        check_disjoint_cover(&ground, &parts, true)?;
        Ok(Decomposition { ground, parts })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Drops the empty parts.
    pub fn to_composition(&self) -> Composition {
        Composition {
            ground: self.ground.clone(),
            parts: self.parts.iter().copied().filter(|p| !p.is_empty()).collect(),
        }
    }

    /// Inverse of [`coloring_to_decomposition`].
    pub fn to_coloring(&self) -> Coloring {
        let mut colors = vec![0u32; self.ground.len()];
        for (i, part) in self.parts.iter().enumerate() {
            for v in part.iter() {
                colors[self.ground.position(v)] = i as u32 + 1;
            }
        }
        Coloring {
            ground: self.ground.clone(),
            colors,
            palette: self.parts.len() as u32,
        }
    }
}

/// A decomposition without empty parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    ground: GroundSet,
    parts: Vec<VertexSet>,
}

impl Composition {
    pub fn new(ground: GroundSet, parts: Vec<VertexSet>) -> Result<Self> {
        check_disjoint_cover(&ground, &parts, false)?;
        Ok(Composition { ground, parts })
    }

    pub fn from_labels<S: AsRef<str>>(ground: &GroundSet, parts: &[&[S]]) -> Result<Self> {
        let parts = parts
            .iter()
            .map(|p| ground.subset(p))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(ground.clone(), parts)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn as_decomposition(&self) -> Decomposition {
        Decomposition {
            ground: self.ground.clone(),
            parts: self.parts.clone(),
        }
    }

    /// Index of the part containing universe index `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }

    /// All refinements of this composition: each part replaced by a composition of itself.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &part in &self.parts {
            let pieces = compositions_of(part);
            let mut next = Vec::with_capacity(out.len() * pieces.len());
            for prefix in &out {
                for piece in &pieces {
                    let mut q: Vec<VertexSet> = prefix.clone();
                    q.extend_from_slice(piece);
                    next.push(q);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|parts| Composition {
                ground: self.ground.clone(),
                parts,
            })
            .collect()
    }
}

/// A map from the ground set to `[n]`.
///
/// `colors` is aligned with the canonical order of the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    ground: GroundSet,
    colors: Vec<u32>,
    palette: u32,
}

impl Coloring {
    pub fn new(ground: GroundSet, colors: Vec<u32>, palette: u32) -> Result<Self> {
        if colors.len() != ground.len() {
            return Err(Error::validation("coloring length does not match the ground set"));
        }
        if palette == 0 && !colors.is_empty() {
            return Err(Error::validation("palette must be positive"));
        }
        if let Some(c) = colors.iter().find(|&&c| c == 0 || c > palette) {
            return Err(Error::validation(format!("color {c} is outside 1..={palette}")));
        }
        Ok(Coloring {
            ground,
            colors,
            palette,
        })
    }

    pub fn from_labels(ground: &GroundSet, assignment: &[(&str, u32)], palette: u32) -> Result<Self> {
        let mut colors = vec![0u32; ground.len()];
        for &(label, c) in assignment {
            let i = ground
                .index_of(label)
                .ok_or_else(|| Error::validation(format!("`{label}` is not a vertex")))?;
            colors[ground.position(i)] = c;
        }
        Coloring::new(ground.clone(), colors, palette)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Color of universe index `v`.
    pub fn color(&self, v: usize) -> u32 {
        self.colors[self.ground.position(v)]
    }

    /// Largest color appearing on `set`, `None` on the empty set.
    pub fn max_color(&self, set: VertexSet) -> Option<u32> {
        set.iter().map(|v| self.color(v)).max()
    }

    /// The vertices of `set` carrying its maximal color.
    pub fn maximal_vertices(&self, set: VertexSet) -> VertexSet {
        match self.max_color(set) {
            None => VertexSet::EMPTY,
            Some(m) => VertexSet::from_indices(set.iter().filter(|&v| self.color(v) == m)),
        }
    }

    /// Preimages of the colors `1..=palette`.
    pub fn color_classes(&self) -> Vec<VertexSet> {
        let mut parts = vec![VertexSet::EMPTY; self.palette as usize];
        for (pos, v) in self.ground.mask().iter().enumerate() {
            let c = self.colors[pos] as usize - 1;
            parts[c] = parts[c] | VertexSet::singleton(v);
        }
        parts
    }
}

/// `c ↦ (c⁻¹(1), …, c⁻¹(n))`
pub fn coloring_to_decomposition(c: &Coloring) -> Decomposition {
    Decomposition {
        ground: c.ground.clone(),
        parts: c.color_classes(),
    }
}

/// All colorings of `ground` with `[n]`, lexicographically (first vertex varies slowest).
///
/// The iterator is `Clone`, so a stream can be restarted for multi-pass use.
pub fn enumerate_colorings(ground: &GroundSet, n: u32) -> Colorings {
    let start = if n == 0 && !ground.is_empty() {
        None
    } else {
        Some(vec![1u32; ground.len()])
    };
    Colorings {
        ground: ground.clone(),
        palette: n,
        next: start,
    }
}

#[derive(Clone, Debug)]
pub struct Colorings {
    ground: GroundSet,
    palette: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for Colorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if succ[i] < self.palette {
                succ[i] += 1;
                advanced = true;
                break;
            }
            succ[i] = 1;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(Coloring {
            ground: self.ground.clone(),
            colors: current,
            palette: self.palette,
        })
    }
}

/// Whether `q` refines `p`: every part of `p` is the union of a consecutive run of
/// `q`-parts, runs taken in order. Parts inside a run may come in any order.
pub fn refines(q: &Composition, p: &Composition) -> Result<bool> {
    if !q.ground.is_identical(&p.ground) {
        return Err(Error::validation("refinement compares compositions of different sets"));
    }
    let mut idx = 0;
    for &target in &p.parts {
        let mut acc = VertexSet::EMPTY;
        while acc != target {
            let Some(&piece) = q.parts.get(idx) else {
                return Ok(false);
            };
            if !piece.is_subset(target) {
                return Ok(false);
            }
            acc = acc | piece;
            idx += 1;
        }
    }
    Ok(idx == q.parts.len())
}

/// All sequences obtained from `p` by summing consecutive runs; `2^(t-1)` of them.
///
/// Bit `i` of the enumeration index merges entries `i` and `i+1`, so the first
/// result is `p` itself.
pub fn integer_composition_coarsenings(p: &[u32]) -> Result<Vec<Vec<u32>>> {
    if p.is_empty() {
        return Err(Error::validation("cannot coarsen an empty sequence"));
    }
    let t = p.len();
    if t > 32 {
        return Err(Error::validation("sequence too long to enumerate coarsenings"));
    }
    let mut out = Vec::with_capacity(1 << (t - 1));
    for merges in 0u64..(1u64 << (t - 1)) {
        let mut q = vec![p[0]];
        for (i, &part) in p.iter().enumerate().skip(1) {
            if merges >> (i - 1) & 1 == 1 {
                *q.last_mut().expect("nonempty") += part;
            } else {
                q.push(part);
            }
        }
        out.push(q);
    }
    Ok(out)
}

/// Ordered set partitions of `mask`, first part chosen as increasing submasks.
pub fn compositions_of(mask: VertexSet) -> Vec<Vec<VertexSet>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for_each_composition(mask, &mut stack, &mut |parts| {
        out.push(parts.to_vec());
        Ok(())
    })
    .expect("infallible visitor");
    out
}

/// Visits every ordered set partition of `mask` without materializing them all.
pub fn for_each_composition<F>(mask: VertexSet, stack: &mut Vec<VertexSet>, visit: &mut F) -> Result<()>
where
    F: FnMut(&[VertexSet]) -> Result<()>,
{
    if mask.is_empty() {
        return visit(stack);
    }
    for first in mask.nonempty_subsets() {
        stack.push(first);
        let r = for_each_composition(mask - first, stack, visit);
        stack.pop();
        r?;
    }
    Ok(())
}

/// All compositions of a ground set, in the order of [`for_each_composition`].
pub fn enumerate_compositions(ground: &GroundSet) -> Vec<Composition> {
    compositions_of(ground.mask())
        .into_iter()
        .map(|parts| Composition {
            ground: ground.clone(),
            parts,
        })
        .collect()
}

/// Ordered Bell (Fubini) number: the number of compositions of a `k`-set.
pub fn fubini(k: usize) -> u128 {
    let mut a = vec![0u128; k + 1];
    a[0] = 1;
    for n in 1..=k {
        let mut binom: u128 = 1;
        let mut total: u128 = 0;
        for j in 1..=n {
            binom = binom * (n - j + 1) as u128 / j as u128;
            total = total.saturating_add(binom.saturating_mul(a[n - j]));
        }
        a[n] = total;
    }
    a[k]
}

/// Set partitions of `mask`; the block holding the lowest element is chosen first.
pub fn set_partitions_of(mask: VertexSet) -> Vec<Vec<VertexSet>> {
    fn rec(mask: VertexSet, acc: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        let Some(low) = mask.min_index() else {
            out.push(acc.clone());
            return;
        };
        let low = VertexSet::singleton(low);
        let rest = mask - low;
        let mut extras: Vec<VertexSet> = vec![VertexSet::EMPTY];
        extras.extend(rest.nonempty_subsets());
        for extra in extras {
            acc.push(low | extra);
            rec(rest - extra, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(mask, &mut Vec::new(), &mut out);
    out
}

/// Σ over refinements `Q` of `p` with `Q(v) < Q(v')` for every arc `(v, v')` of `(-1)^ℓ(Q)`.
///
/// The elements of `p`'s ground set play the role of the blocks the arcs connect.
pub fn constrained_sign_sum<S: AsRef<str>>(p: &Composition, arcs: &[(S, S)]) -> Result<i64> {
    let ground = p.ground();
    let arcs = arcs
        .iter()
        .map(|(a, b)| {
            let a = ground.subset(&[a.as_ref()])?.min_index().expect("nonempty");
            let b = ground.subset(&[b.as_ref()])?.min_index().expect("nonempty");
            Ok((a, b))
        })
        .collect::<Result<Vec<_>>>()?;
    if has_directed_cycle(&arcs) {
        return Err(Error::validation("constraint relation contains a directed cycle"));
    }
    let mut total = 0i64;
    for q in p.refinements() {
        let ok = arcs
            .iter()
            .all(|&(a, b)| q.part_of(a).expect("covered") < q.part_of(b).expect("covered"));
        if ok {
            total += if q.len() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(total)
}

fn has_directed_cycle(arcs: &[(usize, usize)]) -> bool {
    let n = arcs.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in arcs {
        adj[a].push(b);
    }
    // 0 unvisited, 1 on stack, 2 done
    let mut state = vec![0u8; n];
    fn dfs(v: usize, adj: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in &adj[v] {
            if state[w] == 1 || (state[w] == 0 && dfs(w, adj, state)) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    (0..n).any(|v| state[v] == 0 && dfs(v, &adj, &mut state))
}

/// A set of disjoint nonempty blocks covering the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    ground: GroundSet,
    blocks: Vec<VertexSet>,
}

impl SetPartition {
    pub fn new(ground: GroundSet, mut blocks: Vec<VertexSet>) -> Result<Self> {
        check_disjoint_cover(&ground, &blocks, false)?;
        blocks.sort();
        Ok(SetPartition { ground, blocks })
    }

    pub fn from_labels<S: AsRef<str>>(ground: &GroundSet, blocks: &[Vec<S>]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| ground.subset(b))
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(ground.clone(), blocks)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Blocks intersected with `subset`, empty intersections dropped.
    pub fn restrict(&self, subset: VertexSet) -> Result<SetPartition> {
        let ground = self.ground.sub(subset)?;
        let blocks = self
            .blocks
            .iter()
            .map(|&b| b & subset)
            .filter(|b| !b.is_empty())
            .collect();
        SetPartition::new(ground, blocks)
    }

    /// Common refinement with the parts of a decomposition.
    pub fn meet(&self, d: &Decomposition) -> Result<SetPartition> {
        if !d.ground().is_identical(&self.ground) {
            return Err(Error::validation("decomposition is over a different ground set"));
        }
        let mut blocks = Vec::new();
        for &b in &self.blocks {
            for &p in d.parts() {
                let x = b & p;
                if !x.is_empty() {
                    blocks.push(x);
                }
            }
        }
        SetPartition::new(self.ground.clone(), blocks)
    }

    /// All partitions whose blocks refine the blocks of this one.
    pub fn refinements(&self) -> Vec<SetPartition> {
        let mut out: Vec<Vec<VertexSet>> = vec![Vec::new()];
        for &b in &self.blocks {
            let choices = set_partitions_of(b);
            let mut next = Vec::new();
            for prefix in &out {
                for c in &choices {
                    let mut v = prefix.clone();
                    v.extend_from_slice(c);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|blocks| SetPartition::new(self.ground.clone(), blocks).expect("refinement is a partition"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(labels: &[&str]) -> GroundSet {
        GroundSet::new(labels.iter().copied()).unwrap()
    }

    /// Shuffle product of two compositions over disjoint sets: all compositions of
    /// the union whose restrictions (as part orderings) are the two inputs.
    fn shuffle(p: &Composition, q: &Composition, union: &GroundSet) -> Vec<Composition> {
        enumerate_compositions(union)
            .into_iter()
            .filter(|r| {
                let restricted = |mask: VertexSet| -> Vec<VertexSet> {
                    r.parts()
                        .iter()
                        .map(|&x| x & mask)
                        .filter(|x| !x.is_empty())
                        .collect()
                };
                restricted(p.ground().mask()) == p.parts() && restricted(q.ground().mask()) == q.parts()
            })
            .collect()
    }

    #[test]
    fn coloring_to_decomposition_takes_preimages() {
        let v = g(&["a", "b"]);
        let c = Coloring::from_labels(&v, &[("a", 1), ("b", 1)], 2).unwrap();
        let d = coloring_to_decomposition(&c);
        assert_eq!(d.parts(), &[v.subset(&["a", "b"]).unwrap(), VertexSet::EMPTY]);

        let c = Coloring::from_labels(&v, &[("a", 2), ("b", 1)], 2).unwrap();
        let d = coloring_to_decomposition(&c);
        assert_eq!(d.parts(), &[v.subset(&["b"]).unwrap(), v.subset(&["a"]).unwrap()]);
        assert_eq!(d.to_coloring(), c);

        let e = GroundSet::empty();
        let c = Coloring::new(e, vec![], 1).unwrap();
        assert_eq!(coloring_to_decomposition(&c).parts(), &[VertexSet::EMPTY]);
    }

    #[test]
    fn coloring_counts() {
        assert_eq!(enumerate_colorings(&g(&["a", "b"]), 3).count(), 9);
        assert_eq!(enumerate_colorings(&GroundSet::empty(), 5).count(), 1);
        assert_eq!(enumerate_colorings(&g(&["a", "b", "c"]), 2).count(), 8);
        assert_eq!(enumerate_colorings(&g(&["a"]), 0).count(), 0);
    }

    #[test]
    fn colorings_are_lexicographic_and_restartable() {
        let it = enumerate_colorings(&g(&["a", "b"]), 2);
        let first: Vec<Vec<u32>> = it.clone().map(|c| c.colors().to_vec()).collect();
        assert_eq!(first, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        let second: Vec<Vec<u32>> = it.map(|c| c.colors().to_vec()).collect();
        assert_eq!(first, second);
    }

    #[test]
    fn refinement_examples() {
        let v = g(&["a", "b", "c"]);
        let p = Composition::from_labels(&v, &[&["a", "b"], &["c"]]).unwrap();
        let q = Composition::from_labels(&v, &[&["a"], &["b"], &["c"]]).unwrap();
        assert!(refines(&q, &p).unwrap());
        let q = Composition::from_labels(&v, &[&["b"], &["a"], &["c"]]).unwrap();
        assert!(refines(&q, &p).unwrap());
        assert!(refines(&p, &p).unwrap());
        let q = Composition::from_labels(&v, &[&["a"], &["c"], &["b"]]).unwrap();
        assert!(!refines(&q, &p).unwrap());
        assert!(!refines(&p, &q).unwrap());
        let other = Composition::from_labels(&g(&["x"]), &[&["x"]]).unwrap();
        assert!(refines(&other, &p).is_err());
    }

    #[test]
    fn refinements_agree_with_refines() {
        let v = g(&["a", "b", "c", "d"]);
        for p in enumerate_compositions(&v) {
            let listed = p.refinements();
            let filtered: Vec<Composition> = enumerate_compositions(&v)
                .into_iter()
                .filter(|q| refines(q, &p).unwrap())
                .collect();
            assert_eq!(listed.len(), filtered.len());
            for q in &listed {
                assert!(refines(q, &p).unwrap());
            }
        }
    }

    #[test]
    fn coarsenings() {
        assert_eq!(integer_composition_coarsenings(&[1, 1]).unwrap(), vec![vec![1, 1], vec![2]]);
        assert_eq!(
            integer_composition_coarsenings(&[2, 3, 1]).unwrap(),
            vec![vec![2, 3, 1], vec![5, 1], vec![2, 4], vec![6]]
        );
        assert_eq!(integer_composition_coarsenings(&[7]).unwrap(), vec![vec![7]]);
        assert!(integer_composition_coarsenings(&[]).is_err());
    }

    #[test]
    fn sign_sum_examples() {
        let v = g(&["x", "y"]);
        let p = Composition::from_labels(&v, &[&["x"], &["y"]]).unwrap();
        assert_eq!(constrained_sign_sum::<&str>(&p, &[]).unwrap(), 1);
        let one = Composition::from_labels(&v, &[&["x", "y"]]).unwrap();
        assert_eq!(constrained_sign_sum(&one, &[("x", "y")]).unwrap(), 1);
        assert_eq!(constrained_sign_sum(&p, &[("y", "x")]).unwrap(), 0);
        assert!(constrained_sign_sum(&one, &[("x", "y"), ("y", "x")]).is_err());
    }

    #[test]
    fn sign_sum_closed_form_on_four_blocks() {
        let v = g(&["a", "b", "c", "d"]);
        let labels = ["a", "b", "c", "d"];
        let mut all_arcs = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                if i < j {
                    all_arcs.push((labels[i], labels[j]));
                }
            }
        }
        // every subset of the forward arcs is acyclic
        for arc_mask in 0u32..(1 << all_arcs.len()) {
            let arcs: Vec<(&str, &str)> = (0..all_arcs.len())
                .filter(|i| arc_mask >> i & 1 == 1)
                .map(|i| all_arcs[i])
                .collect();
            for p in enumerate_compositions(&v) {
                let violated = arcs.iter().any(|(a, b)| {
                    let ia = v.index_of(a).unwrap();
                    let ib = v.index_of(b).unwrap();
                    p.part_of(ib) < p.part_of(ia)
                });
                let expected = if violated { 0 } else { 1 };
                assert_eq!(constrained_sign_sum(&p, &arcs).unwrap(), expected);
            }
        }
    }

    #[test]
    fn fubini_matches_enumeration() {
        for k in 0..6 {
            assert_eq!(fubini(k), compositions_of(VertexSet::prefix(k)).len() as u128);
        }
        assert_eq!(fubini(3), 13);
    }

    #[test]
    fn set_partitions_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52];
        for (k, b) in bell.iter().enumerate() {
            assert_eq!(set_partitions_of(VertexSet::prefix(k)).len(), *b);
        }
    }

    #[test]
    fn empty_ground_set_conventions() {
        let e = GroundSet::empty();
        assert_eq!(enumerate_compositions(&e).len(), 1);
        assert!(enumerate_compositions(&e)[0].is_empty());
        let d = Decomposition::new(e, vec![VertexSet::EMPTY; 3]).unwrap();
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn invalid_structures_are_rejected() {
        let v = g(&["a", "b"]);
        let a = v.subset(&["a"]).unwrap();
        assert!(Decomposition::new(v.clone(), vec![a]).is_err());
        assert!(Decomposition::new(v.clone(), vec![a, a | v.subset(&["b"]).unwrap()]).is_err());
        assert!(Composition::new(v.clone(), vec![v.mask(), VertexSet::EMPTY]).is_err());
        assert!(GroundSet::new(["a", "a"]).is_err());
        assert!(Coloring::new(v, vec![1, 3], 2).is_err());
    }

    #[test]
    fn shuffle_product_counts() {
        let u = g(&["a", "b", "c"]);
        let p = Composition::new(u.sub(u.subset(&["a", "b"]).unwrap()).unwrap(), vec![
            u.subset(&["a"]).unwrap(),
            u.subset(&["b"]).unwrap(),
        ])
        .unwrap();
        let q = Composition::new(u.sub(u.subset(&["c"]).unwrap()).unwrap(), vec![u.subset(&["c"]).unwrap()]).unwrap();
        // c inserted before, between, after, or merged with either part
        assert_eq!(shuffle(&p, &q, &u).len(), 5);
    }

    #[test]
    fn vertex_set_order_is_lexicographic() {
        let a = VertexSet::from_indices([0, 1, 2]);
        let b = VertexSet::from_indices([1, 2, 3]);
        let c = VertexSet::from_indices([0]);
        assert!(c < a && a < b);
        assert_eq!(VertexSet::from_indices([0, 2]).nonempty_subsets().count(), 3);
    }

    #[test]
    fn set_partition_meet_and_restrict() {
        let v = g(&["1", "2", "3", "4"]);
        let pi = SetPartition::from_labels(&v, &[vec!["1", "2"], vec!["3", "4"]]).unwrap();
        let d = Decomposition::new(v.clone(), vec![v.subset(&["1", "3"]).unwrap(), v.subset(&["2", "4"]).unwrap()]).unwrap();
        assert_eq!(pi.meet(&d).unwrap().blocks().len(), 4);
        let r = pi.restrict(v.subset(&["1", "2", "3"]).unwrap()).unwrap();
        assert_eq!(r.blocks().len(), 2);
        assert_eq!(pi.refinements().len(), 4);
    }
}
