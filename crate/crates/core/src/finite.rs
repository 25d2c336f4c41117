//! Carrier types. Every carrier is `0..n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn check_range(values: &[usize], n: usize, what: &str) -> Result<()> {
    match values.iter().position(|&v| v >= n) {
        Some(i) => Err(Error::invalid(format!(
            "{what}: entry {i} is {} but the carrier has {n} elements",
            values[i]
        ))),
        None => Ok(()),
    }
}

/// A self-map of `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct FiniteFunction {
    images: Vec<usize>,
}

impl fmt::Debug for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl TryFrom<Vec<usize>> for FiniteFunction {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        FiniteFunction::new(images)
    }
}

impl From<FiniteFunction> for Vec<usize> {
    fn from(f: FiniteFunction) -> Self {
        f.images
    }
}

impl FiniteFunction {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::invalid("a function needs a non-empty carrier"));
        }
        check_range(&images, images.len(), "function")?;
        Ok(FiniteFunction { images })
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(images.iter().all(|&v| v < images.len()));
        FiniteFunction { images }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        FiniteFunction::new((0..n).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        FiniteFunction {
            images: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, c: usize) -> Self {
        assert!(c < n, "constant {c} outside carrier of size {n}");
        FiniteFunction { images: vec![c; n] }
    }

    /// The cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Self {
        FiniteFunction {
            images: (0..n).map(|x| (x + 1) % n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &FiniteFunction) -> FiniteFunction {
        assert_eq!(self.n(), inner.n(), "composing maps on different carriers");
        FiniteFunction {
            images: inner.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn power(&self, k: usize) -> FiniteFunction {
        let mut out = FiniteFunction::identity(self.n());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    pub fn commutes_with(&self, other: &FiniteFunction) -> bool {
        self.n() == other.n()
            && (0..self.n()).all(|x| self.images[other.images[x]] == other.images[self.images[x]])
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n()];
        for &v in &self.images {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Image set, sorted.
    pub fn image_set(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `σ ∘ self ∘ σ⁻¹`: the same map read through the relabeling `σ`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> FiniteFunction {
        let mut images = vec![0; self.n()];
        for x in 0..self.n() {
            images[sigma.apply(x)] = sigma.apply(self.images[x]);
        }
        FiniteFunction { images }
    }

    /// Restriction to `block` (sorted), re-indexed by position in `block`.
    /// Fails if `block` is not invariant.
    pub fn restrict(&self, block: &[usize]) -> Option<FiniteFunction> {
        let images = block
            .iter()
            .map(|&x| block.binary_search(&self.images[x]).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(FiniteFunction { images })
    }
}

/// A bijective [`FiniteFunction`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(FiniteFunction);

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0.images
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        Permutation::from_function(FiniteFunction::new(images)?)
    }

    pub fn from_function(f: FiniteFunction) -> Result<Self> {
        if f.is_bijective() {
            Ok(Permutation(f))
        } else {
            Err(Error::invalid("function is not a bijection"))
        }
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        Permutation(FiniteFunction::from_vec_unchecked(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation(FiniteFunction::identity(n))
    }

    /// The transposition of `a` and `b` on `0..n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation(FiniteFunction { images })
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0.apply(x)
    }

    pub fn images(&self) -> &[usize] {
        self.0.images()
    }

    pub fn as_function(&self) -> &FiniteFunction {
        &self.0
    }

    pub fn into_function(self) -> FiniteFunction {
        self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (x, &y) in self.0.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation(FiniteFunction { images })
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        Permutation(self.0.compose(&inner.0))
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// All permutations of `0..n` in lexicographic order of their image lists.
    pub fn all(n: usize) -> Permutations {
        Permutations {
            current: Some((0..n).collect()),
        }
    }
}

/// Lexicographic iterator over `S_n`; see [`Permutation::all`].
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let mut nxt = cur.clone();
        if next_permutation(&mut nxt) {
            self.current = Some(nxt);
        }
        Some(Permutation::from_vec_unchecked(cur))
    }
}

/// Advances `v` to the next permutation in lexicographic order; returns
/// `false` (leaving `v` untouched) when `v` is the last one.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A binary operation on `0..n`, stored row-major: `get(x, y) = x·y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct CayleyTable {
    n: usize,
    cells: Vec<usize>,
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl TryFrom<Vec<Vec<usize>>> for CayleyTable {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        CayleyTable::from_rows(rows)
    }
}

impl From<CayleyTable> for Vec<Vec<usize>> {
    fn from(t: CayleyTable) -> Self {
        t.rows().map(|r| r.to_vec()).collect()
    }
}

impl CayleyTable {
    pub fn new(n: usize, cells: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a table needs a non-empty carrier"));
        }
        if cells.len() != n * n {
            return Err(Error::invalid(format!(
                "expected {} cells, got {}",
                n * n,
                cells.len()
            )));
        }
        check_range(&cells, n, "table")?;
        Ok(CayleyTable { n, cells })
    }

    pub(crate) fn from_cells_unchecked(n: usize, cells: Vec<usize>) -> Self {
        debug_assert!(cells.len() == n * n && cells.iter().all(|&v| v < n));
        CayleyTable { n, cells }
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::invalid(format!(
                "row {i} has {} entries, expected {n}",
                r.len()
            )));
        }
        CayleyTable::new(n, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let cells = (0..n * n).map(|i| f(i / n, i % n)).collect();
        CayleyTable::new(n, cells)
    }

    /// `x·y = x`.
    pub fn left_zero(n: usize) -> Self {
        CayleyTable {
            n,
            cells: (0..n * n).map(|i| i / n).collect(),
        }
    }

    /// `x·y = y`.
    pub fn right_zero(n: usize) -> Self {
        CayleyTable {
            n,
            cells: (0..n * n).map(|i| i % n).collect(),
        }
    }

    /// `x·y = f(x)`.
    pub fn from_function(f: &FiniteFunction) -> Self {
        let n = f.n();
        CayleyTable {
            n,
            cells: (0..n * n).map(|i| f.apply(i / n)).collect(),
        }
    }

    /// `x + y mod n`.
    pub fn cyclic_group(n: usize) -> Self {
        CayleyTable {
            n,
            cells: (0..n * n).map(|i| (i / n + i % n) % n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    /// Overwrites one cell.
    pub fn set(&mut self, x: usize, y: usize, v: usize) {
        assert!(v < self.n, "value {v} outside carrier of size {}", self.n);
        self.cells[x * self.n + y] = v;
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> std::slice::Chunks<'_, usize> {
        self.cells.chunks(self.n)
    }

    /// Left translation `y ↦ x·y`.
    pub fn left_translation(&self, x: usize) -> FiniteFunction {
        FiniteFunction {
            images: self.cells[x * self.n..(x + 1) * self.n].to_vec(),
        }
    }

    /// Right translation `x ↦ x·y`.
    pub fn right_translation(&self, y: usize) -> FiniteFunction {
        FiniteFunction {
            images: (0..self.n).map(|x| self.get(x, y)).collect(),
        }
    }

    /// `x ·ᵒᵖ y = y·x`.
    pub fn opposite(&self) -> CayleyTable {
        let n = self.n;
        CayleyTable {
            n,
            cells: (0..n * n).map(|i| self.get(i % n, i / n)).collect(),
        }
    }

    /// The table transported along `σ`, so that `σ` becomes an isomorphism onto it.
    pub fn relabel(&self, sigma: &Permutation) -> CayleyTable {
        let n = self.n;
        let mut cells = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[sigma.apply(x) * n + sigma.apply(y)] = sigma.apply(self.get(x, y));
            }
        }
        CayleyTable { n, cells }
    }
}

/// Two binary operations `·` (dot) and `∗` (star) on one carrier.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiMagma {
    dot: CayleyTable,
    star: CayleyTable,
}

impl fmt::Debug for BiMagma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BiMagma")
            .field("dot", &self.dot)
            .field("star", &self.star)
            .finish()
    }
}

impl BiMagma {
    pub fn new(dot: CayleyTable, star: CayleyTable) -> Result<Self> {
        if dot.n() != star.n() {
            return Err(Error::invalid(format!(
                "dot has {} elements but star has {}",
                dot.n(),
                star.n()
            )));
        }
        Ok(BiMagma { dot, star })
    }

    pub fn n(&self) -> usize {
        self.dot.n()
    }

    pub fn dot(&self) -> &CayleyTable {
        &self.dot
    }

    pub fn star(&self) -> &CayleyTable {
        &self.star
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.dot.get(x, y)
    }

    #[inline]
    pub fn act(&self, x: usize, y: usize) -> usize {
        self.star.get(x, y)
    }

    pub fn set(&mut self, x: usize, y: usize, dot: usize, star: usize) {
        self.dot.set(x, y, dot);
        self.star.set(x, y, star);
    }

    pub fn into_parts(self) -> (CayleyTable, CayleyTable) {
        (self.dot, self.star)
    }

    pub fn relabel(&self, sigma: &Permutation) -> BiMagma {
        BiMagma {
            dot: self.dot.relabel(sigma),
            star: self.star.relabel(sigma),
        }
    }
}

/// A map `R: X×X → X×X`, stored as output pairs in row-major `(x, y)` order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RMap {
    n: usize,
    out: Vec<(usize, usize)>,
}

impl fmt::Debug for RMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RMap")
            .field("n", &self.n)
            .field("out", &self.out)
            .finish()
    }
}

impl RMap {
    pub fn new(n: usize, out: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("an R-map needs a non-empty carrier"));
        }
        if out.len() != n * n {
            return Err(Error::invalid(format!(
                "expected {} pairs, got {}",
                n * n,
                out.len()
            )));
        }
        if let Some(i) = out.iter().position(|&(u, v)| u >= n || v >= n) {
            return Err(Error::invalid(format!("pair {i} leaves the carrier")));
        }
        Ok(RMap { n, out })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        RMap::new(n, (0..n * n).map(|i| f(i / n, i % n)).collect())
    }

    pub fn identity(n: usize) -> Self {
        RMap {
            n,
            out: (0..n * n).map(|i| (i / n, i % n)).collect(),
        }
    }

    /// `τ(x, y) = (y, x)`.
    pub fn flip(n: usize) -> Self {
        RMap {
            n,
            out: (0..n * n).map(|i| (i % n, i / n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.out[x * self.n + y]
    }

    pub fn set(&mut self, x: usize, y: usize, value: (usize, usize)) {
        assert!(
            value.0 < self.n && value.1 < self.n,
            "pair leaves the carrier"
        );
        self.out[x * self.n + y] = value;
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.out
    }

    /// `R²¹ = τ R τ`.
    pub fn r21(&self) -> RMap {
        let n = self.n;
        RMap::from_fn(n, |x, y| {
            let (u, v) = self.apply(y, x);
            (v, u)
        })
        .expect("in range by construction")
    }

    /// `τ ∘ R`.
    pub fn flip_composed(&self) -> RMap {
        RMap {
            n: self.n,
            out: self.out.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// `R ∘ S`.
    pub fn compose(&self, inner: &RMap) -> RMap {
        assert_eq!(self.n, inner.n, "composing R-maps on different carriers");
        RMap {
            n: self.n,
            out: inner.out.iter().map(|&(x, y)| self.apply(x, y)).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n * self.n];
        self.out
            .iter()
            .all(|&(u, v)| !std::mem::replace(&mut seen[u * self.n + v], true))
    }

    pub fn relabel(&self, sigma: &Permutation) -> RMap {
        let n = self.n;
        let mut out = vec![(0, 0); n * n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.apply(x, y);
                out[sigma.apply(x) * n + sigma.apply(y)] = (sigma.apply(u), sigma.apply(v));
            }
        }
        RMap { n, out }
    }

    pub fn to_bimagma(&self) -> BiMagma {
        let n = self.n;
        BiMagma {
            dot: CayleyTable {
                n,
                cells: self.out.iter().map(|p| p.0).collect(),
            },
            star: CayleyTable {
                n,
                cells: self.out.iter().map(|p| p.1).collect(),
            },
        }
    }

    pub fn from_bimagma(b: &BiMagma) -> RMap {
        RMap {
            n: b.n(),
            out: b
                .dot
                .cells
                .iter()
                .zip(&b.star.cells)
                .map(|(&u, &v)| (u, v))
                .collect(),
        }
    }
}

impl From<&BiMagma> for RMap {
    fn from(b: &BiMagma) -> Self {
        RMap::from_bimagma(b)
    }
}

impl From<&RMap> for BiMagma {
    fn from(r: &RMap) -> Self {
        r.to_bimagma()
    }
}

/// Either side of the canonical correspondence `R(x, y) = (x·y, x∗y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    RMap(RMap),
    BiMagma(BiMagma),
}

/// Converts between an R-map and its bi-magma.
pub fn canonical_correspondence(input: &Solution) -> Solution {
    match input {
        Solution::RMap(r) => Solution::BiMagma(r.to_bimagma()),
        Solution::BiMagma(b) => Solution::RMap(RMap::from_bimagma(b)),
    }
}

/// A partition of `0..n` into non-empty blocks. Blocks are sorted and
/// ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for SetPartition {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        SetPartition::new(blocks)
    }
}

impl From<SetPartition> for Vec<Vec<usize>> {
    fn from(p: SetPartition) -> Self {
        p.blocks
    }
}

impl SetPartition {
    /// Validates and normalizes the block order.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::invalid("empty block"));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::invalid(format!(
                        "element {x} repeated or out of range"
                    )));
                }
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    /// Partition from a block label per element; labels need not be contiguous.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index = std::collections::HashMap::new();
        for (x, &l) in labels.iter().enumerate() {
            let i = *index.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[i].push(x);
        }
        SetPartition { blocks }
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition {
            blocks: (0..n).map(|x| vec![x]).collect(),
        }
    }

    pub fn whole(n: usize) -> Self {
        SetPartition {
            blocks: vec![(0..n).collect()],
        }
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of each element.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x] = i;
            }
        }
        out
    }

    /// True if every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        let owner = coarser.block_of();
        self.n() == coarser.n()
            && self
                .blocks
                .iter()
                .all(|b| b.iter().all(|&x| owner[x] == owner[b[0]]))
    }
}

/// Limits on brute-force searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest `n` for sweeps over `S_n`.
    pub max_perm_n: usize,
    /// Largest `n_B^{n_A}` for homomorphism sweeps.
    pub max_hom_space: u128,
    /// Largest `n` for listing all subsets.
    pub max_subset_n: usize,
    /// Largest number of blocks for the two-part decomposability search.
    pub max_split_blocks: usize,
    /// Largest carrier for built tables.
    pub max_table_n: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_perm_n: 8,
            max_hom_space: 10_000_000,
            max_subset_n: 16,
            max_split_blocks: 16,
            max_table_n: 4096,
        }
    }
}
