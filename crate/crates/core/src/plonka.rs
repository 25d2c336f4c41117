//! Płonka partitions of right Płonka magmas and bi-Płonka partitions of
//! Płonka bi-magmas, their inverses, structured isomorphism and
//! bijectivization of a single self-map.
//!
//! Block maps are stored block-locally: `maps[i][j]` acts on block `i`
//! re-indexed by position, so element `blocks[i][p]` is local point `p`.

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_family;
use crate::error::{Error, Result};
use crate::families::{family_bijection, FunctionFamily};
use crate::finite::{BiMagma, CayleyTable, FiniteFunction, Permutation, SetPartition};
use crate::laws::{check_bimagma_law, check_magma_law, BiMagmaLaw, MagmaLaw};
use crate::morphisms::Morphism;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Extremity {
    Coarsest,
    Finest,
}

impl std::str::FromStr for Extremity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coarsest" => Ok(Extremity::Coarsest),
            "finest" => Ok(Extremity::Finest),
            _ => Err(Error::invalid(format!("unknown extremity {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlonkaPartition {
    pub blocks: SetPartition,
    /// `maps[i][j]` is `f_i^j` on block `i`.
    pub maps: Vec<Vec<FiniteFunction>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiPlonkaPartition {
    pub blocks: SetPartition,
    /// `f[i][j]` is `f_i^j` on block `i`.
    pub f: Vec<Vec<FiniteFunction>>,
    /// `g[i][j]` is `g_i^j` on block `i`.
    pub g: Vec<Vec<FiniteFunction>>,
}

fn check_shape(blocks: &SetPartition, maps: &[Vec<FiniteFunction>], name: &str) -> Result<()> {
    let k = blocks.len();
    if maps.len() != k || maps.iter().any(|row| row.len() != k) {
        return Err(Error::invalid(format!(
            "{name} must be a {k}×{k} array of block maps"
        )));
    }
    for (i, row) in maps.iter().enumerate() {
        if row.iter().any(|f| f.n() != blocks.blocks()[i].len()) {
            return Err(Error::invalid(format!(
                "{name} maps on block {i} have the wrong size"
            )));
        }
    }
    Ok(())
}

fn pairwise_commute(maps: &[&FiniteFunction]) -> Option<(usize, usize)> {
    (0..maps.len()).find_map(|a| {
        (a + 1..maps.len())
            .find(|&b| !maps[a].commutes_with(maps[b]))
            .map(|b| (a, b))
    })
}

impl PlonkaPartition {
    pub fn validate(&self) -> Result<()> {
        check_shape(&self.blocks, &self.maps, "f")?;
        for (i, row) in self.maps.iter().enumerate() {
            let refs: Vec<&FiniteFunction> = row.iter().collect();
            if let Some((a, b)) = pairwise_commute(&refs) {
                return Err(Error::invalid(format!(
                    "f_{i}^{a} and f_{i}^{b} do not commute"
                )));
            }
        }
        Ok(())
    }

    /// The magma `x_i · x_j = f_i^j(x_i)`.
    pub fn rebuild(&self) -> Result<CayleyTable> {
        self.validate()?;
        let (owner, pos) = locate(&self.blocks);
        let b = self.blocks.blocks();
        CayleyTable::from_fn(self.blocks.n(), |x, y| {
            let (i, j) = (owner[x], owner[y]);
            b[i][self.maps[i][j].apply(pos[x])]
        })
    }

    /// Every block is covered by the images of its maps.
    pub fn jointly_onto(&self) -> bool {
        self.maps.iter().all(|row| {
            let mut hit = vec![false; row[0].n()];
            for f in row {
                for &v in f.images() {
                    hit[v] = true;
                }
            }
            hit.into_iter().all(|h| h)
        })
    }
}

impl BiPlonkaPartition {
    pub fn validate(&self) -> Result<()> {
        check_shape(&self.blocks, &self.f, "f")?;
        check_shape(&self.blocks, &self.g, "g")?;
        for i in 0..self.blocks.len() {
            let refs: Vec<&FiniteFunction> = self.f[i].iter().chain(&self.g[i]).collect();
            if let Some((a, b)) = pairwise_commute(&refs) {
                let k = self.blocks.len();
                let name = |m: usize| {
                    if m < k {
                        format!("f_{i}^{m}")
                    } else {
                        format!("g_{i}^{}", m - k)
                    }
                };
                return Err(Error::invalid(format!(
                    "{} and {} do not commute",
                    name(a),
                    name(b)
                )));
            }
        }
        Ok(())
    }

    /// The bi-magma `x_i · x_j = f_i^j(x_i)`, `x_i ∗ x_j = g_j^i(x_j)`.
    pub fn rebuild(&self) -> Result<BiMagma> {
        self.validate()?;
        let (owner, pos) = locate(&self.blocks);
        let b = self.blocks.blocks();
        let n = self.blocks.n();
        let dot = CayleyTable::from_fn(n, |x, y| {
            let (i, j) = (owner[x], owner[y]);
            b[i][self.f[i][j].apply(pos[x])]
        })?;
        let star = CayleyTable::from_fn(n, |x, y| {
            let (i, j) = (owner[x], owner[y]);
            b[j][self.g[j][i].apply(pos[y])]
        })?;
        BiMagma::new(dot, star)
    }

    /// `f_j^i ∘ g_j^i = id` for all blocks.
    pub fn is_unitary(&self) -> bool {
        self.f
            .iter()
            .zip(&self.g)
            .all(|(fr, gr)| fr.iter().zip(gr).all(|(f, g)| f.compose(g).is_identity()))
    }
}

/// Block index and position within the block of every element.
fn locate(p: &SetPartition) -> (Vec<usize>, Vec<usize>) {
    let mut owner = vec![0; p.n()];
    let mut pos = vec![0; p.n()];
    for (i, b) in p.blocks().iter().enumerate() {
        for (k, &x) in b.iter().enumerate() {
            owner[x] = i;
            pos[x] = k;
        }
    }
    (owner, pos)
}

/// `x ↦ op(x)` on block `i`, which must land in block `i`.
fn block_map(block: &[usize], op: impl Fn(usize) -> usize) -> Result<FiniteFunction> {
    block
        .iter()
        .map(|&x| {
            block
                .binary_search(&op(x))
                .map_err(|_| Error::invalid("a block is not invariant"))
        })
        .collect::<Result<Vec<_>>>()
        .map(FiniteFunction::from_vec_unchecked)
}

/// Connected components of a family: the finest partition with every block invariant.
pub fn connected_components(family: &FunctionFamily) -> SetPartition {
    let n = family.n();
    let mut uf: UnionFind<usize> = UnionFind::new(n);
    for f in family.members() {
        for x in 0..n {
            uf.union(x, f.apply(x));
        }
    }
    SetPartition::from_labels(&uf.into_labeling())
}

/// Refines each block of `coarse` into the connected components of its family.
fn refine(coarse: &SetPartition, families: &[Vec<&FiniteFunction>]) -> SetPartition {
    let n = coarse.n();
    let mut labels = vec![0; n];
    for (i, block) in coarse.blocks().iter().enumerate() {
        let members = families[i].iter().map(|&f| f.clone()).collect();
        let fam = FunctionFamily::new(members).expect("non-empty family on one block");
        for sub in connected_components(&fam).blocks() {
            for &p in sub {
                labels[block[p]] = block[sub[0]];
            }
        }
    }
    SetPartition::from_labels(&labels)
}

/// Congruence classes of `a ~ b` iff `key(a) == key(b)`.
fn classes_by_key<K: Eq + std::hash::Hash>(n: usize, key: impl Fn(usize) -> K) -> SetPartition {
    let mut index = std::collections::HashMap::new();
    let labels: Vec<usize> = (0..n)
        .map(|a| {
            let next = index.len();
            *index.entry(key(a)).or_insert(next)
        })
        .collect();
    SetPartition::from_labels(&labels)
}

pub fn plonka_partition(m: &CayleyTable, extremity: Extremity) -> Result<PlonkaPartition> {
    check_magma_law(m, MagmaLaw::RightPlonka).into_result("right_plonka")?;
    let n = m.n();
    let blocks = classes_by_key(n, |a| (0..n).map(|x| m.get(x, a)).collect::<Vec<_>>());
    let blocks = match extremity {
        Extremity::Coarsest => blocks,
        Extremity::Finest => {
            let maps = partition_maps(m, &blocks)?;
            refine(
                &blocks,
                &maps
                    .iter()
                    .map(|row| row.iter().collect())
                    .collect::<Vec<_>>(),
            )
        }
    };
    let maps = partition_maps(m, &blocks)?;
    Ok(PlonkaPartition { blocks, maps })
}

fn partition_maps(m: &CayleyTable, blocks: &SetPartition) -> Result<Vec<Vec<FiniteFunction>>> {
    let b = blocks.blocks();
    b.iter()
        .map(|bi| {
            b.iter()
                .map(|bj| block_map(bi, |x| m.get(x, bj[0])))
                .collect()
        })
        .collect()
}

pub fn bi_plonka_partition(bm: &BiMagma, extremity: Extremity) -> Result<BiPlonkaPartition> {
    check_bimagma_law(bm, BiMagmaLaw::PlonkaBimagma).into_result("plonka_bimagma")?;
    let n = bm.n();
    let blocks = classes_by_key(n, |a| {
        (0..n)
            .map(|x| (bm.mul(x, a), bm.act(a, x)))
            .collect::<Vec<_>>()
    });
    let blocks = match extremity {
        Extremity::Coarsest => blocks,
        Extremity::Finest => {
            let (f, g) = bi_partition_maps(bm, &blocks)?;
            let fams: Vec<Vec<&FiniteFunction>> = f
                .iter()
                .zip(&g)
                .map(|(fr, gr)| fr.iter().chain(gr).collect())
                .collect();
            refine(&blocks, &fams)
        }
    };
    let (f, g) = bi_partition_maps(bm, &blocks)?;
    Ok(BiPlonkaPartition { blocks, f, g })
}

type MapGrid = Vec<Vec<FiniteFunction>>;

fn bi_partition_maps(bm: &BiMagma, blocks: &SetPartition) -> Result<(MapGrid, MapGrid)> {
    let b = blocks.blocks();
    let f = b
        .iter()
        .map(|bi| {
            b.iter()
                .map(|bj| block_map(bi, |x| bm.mul(x, bj[0])))
                .collect()
        })
        .collect::<Result<_>>()?;
    let g = b
        .iter()
        .map(|bi| {
            b.iter()
                .map(|bj| block_map(bi, |x| bm.act(bj[0], x)))
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok((f, g))
}

/// Isomorphism of right Płonka magmas through their coarsest partitions.
pub fn structured_iso(a: &CayleyTable, b: &CayleyTable) -> Result<Option<Permutation>> {
    let pa = plonka_partition(a, Extremity::Coarsest)?;
    let pb = plonka_partition(b, Extremity::Coarsest)?;
    if a.n() != b.n() {
        return Ok(None);
    }
    let grids_a = [&pa.maps];
    let grids_b = [&pb.maps];
    Ok(match_partitions(&pa.blocks, &grids_a, &pb.blocks, &grids_b))
}

/// Isomorphism of Płonka bi-magmas through their coarsest bi-Płonka partitions.
pub fn structured_iso_bimagma(a: &BiMagma, b: &BiMagma) -> Result<Option<Permutation>> {
    let pa = bi_plonka_partition(a, Extremity::Coarsest)?;
    let pb = bi_plonka_partition(b, Extremity::Coarsest)?;
    if a.n() != b.n() {
        return Ok(None);
    }
    Ok(match_partitions(
        &pa.blocks,
        &[&pa.f, &pa.g],
        &pb.blocks,
        &[&pb.f, &pb.g],
    ))
}

/// Diagonal tuple code and the sorted codes of every `(op_i^j)` tuple.
type BlockKey = (Vec<u8>, Vec<Vec<u8>>);

/// An order-independent summary of block `i`.
fn block_key(i: usize, grids: &[&MapGrid]) -> BlockKey {
    let k = grids[0].len();
    let tuple =
        |j: usize| -> Vec<FiniteFunction> { grids.iter().map(|g| g[i][j].clone()).collect() };
    let diag = canonical_family(&tuple(i)).code;
    let mut codes: Vec<Vec<u8>> = (0..k).map(|j| canonical_family(&tuple(j)).code).collect();
    codes.sort();
    (diag, codes)
}

fn match_partitions(
    pa: &SetPartition,
    ga: &[&MapGrid],
    pb: &SetPartition,
    gb: &[&MapGrid],
) -> Option<Permutation> {
    let k = pa.len();
    if k != pb.len() {
        return None;
    }
    let keys_a: Vec<_> = (0..k)
        .map(|i| (pa.blocks()[i].len(), block_key(i, ga)))
        .collect();
    let keys_b: Vec<_> = (0..k)
        .map(|i| (pb.blocks()[i].len(), block_key(i, gb)))
        .collect();

    struct Ctx<'a> {
        k: usize,
        keys_a: &'a [(usize, BlockKey)],
        keys_b: &'a [(usize, BlockKey)],
        ga: &'a [&'a MapGrid],
        gb: &'a [&'a MapGrid],
        theta: Vec<usize>,
        used: Vec<bool>,
    }

    // Pair codes must match for every pair of assigned blocks.
    fn pair_ok(c: &Ctx<'_>, i: usize, j: usize) -> bool {
        let ta: Vec<FiniteFunction> = c.ga.iter().map(|g| g[i][j].clone()).collect();
        let tb: Vec<FiniteFunction> =
            c.gb.iter()
                .map(|g| g[c.theta[i]][c.theta[j]].clone())
                .collect();
        canonical_family(&ta).code == canonical_family(&tb).code
    }

    fn go(c: &mut Ctx<'_>, i: usize) -> Option<Vec<Vec<usize>>> {
        if i == c.k {
            let mut phis = Vec::with_capacity(c.k);
            for a in 0..c.k {
                let theta = &c.theta;
                let pairs: Vec<(&[usize], &[usize])> = (0..c.k)
                    .flat_map(|j| {
                        c.ga.iter().zip(c.gb).map(move |(ga, gb)| {
                            (ga[a][j].images(), gb[theta[a]][theta[j]].images())
                        })
                    })
                    .collect();
                phis.push(family_bijection(c.keys_a[a].0, &pairs)?);
            }
            return Some(phis);
        }
        for t in 0..c.k {
            if c.used[t] || c.keys_a[i] != c.keys_b[t] {
                continue;
            }
            c.theta[i] = t;
            if !(0..=i).all(|j| pair_ok(c, i, j) && pair_ok(c, j, i)) {
                continue;
            }
            c.used[t] = true;
            if let Some(r) = go(c, i + 1) {
                return Some(r);
            }
            c.used[t] = false;
        }
        None
    }

    let mut c = Ctx {
        k,
        keys_a: &keys_a,
        keys_b: &keys_b,
        ga,
        gb,
        theta: vec![0; k],
        used: vec![false; k],
    };
    let phis = go(&mut c, 0)?;
    let mut images = vec![0; pa.n()];
    for (i, block) in pa.blocks().iter().enumerate() {
        let target = &pb.blocks()[c.theta[i]];
        for (p, &x) in block.iter().enumerate() {
            images[x] = target[phis[i][p]];
        }
    }
    Some(Permutation::from_vec_unchecked(images))
}

/// The reflection of a self-map into bijective self-maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectivizationResult {
    pub target: FiniteFunction,
    pub unit: Morphism,
}

/// Quotients by level sets until the induced map is bijective.
pub fn bijectivize(f: &FiniteFunction) -> BijectivizationResult {
    let mut unit: Vec<usize> = (0..f.n()).collect();
    let mut g = f.clone();
    while !g.is_bijective() {
        let classes = classes_by_key(g.n(), |x| g.apply(x));
        let label = classes.block_of();
        let induced = classes
            .blocks()
            .iter()
            .map(|b| label[g.apply(b[0])])
            .collect();
        for u in unit.iter_mut() {
            *u = label[*u];
        }
        g = FiniteFunction::from_vec_unchecked(induced);
    }
    BijectivizationResult {
        unit: Morphism {
            codomain: g.n(),
            images: unit,
        },
        target: g,
    }
}
