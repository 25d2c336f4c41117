//! Self-maps up to conjugacy, commuting pairs, and the censuses built on them.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{
    bimagma_passes, guard, run_branches, CensusQuery, Constraint, Predicate, Result, Tally,
};
use crate::builders::{build_solution, lyubashenko, SolutionSpec};
use crate::canon::{canonical_bimagma, canonical_family};
use crate::families::{sigma, FunctionFamily, OdometerTriple};
use crate::finite::{FiniteFunction, Permutation, SetPartition};
use crate::ideals::is_simple;
use crate::laws::{check_rmap_law, BiMagmaLaw, RMapLaw};
use crate::plonka::BiPlonkaPartition;

const MAX_CONJUGACY_N: usize = 8;
const MAX_SIMPLE_BLS_ROUTE_B: usize = 10;
const MAX_STRUCTURAL_N: usize = 4;

// ---- functional graphs -------------------------------------------------

/// Unlabeled rooted trees, connected functional graphs and their multisets,
/// each generated once in a canonical form.
struct GraphCatalog {
    /// Children of each tree, as tree ids in non-increasing order.
    children: Vec<Vec<usize>>,
    tree_size: Vec<usize>,
    trees_of_size: Vec<Vec<usize>>,
    /// Each component is a cycle of trees, stored as its least rotation.
    components: Vec<Vec<usize>>,
    component_size: Vec<usize>,
    components_of_size: Vec<Vec<usize>>,
}

impl GraphCatalog {
    fn new(n: usize) -> Self {
        let mut c = GraphCatalog {
            children: Vec::new(),
            tree_size: Vec::new(),
            trees_of_size: vec![Vec::new(); n + 1],
            components: Vec::new(),
            component_size: Vec::new(),
            components_of_size: vec![Vec::new(); n + 1],
        };
        for k in 1..=n {
            let mut forests = Vec::new();
            c.multisets(
                k - 1,
                usize::MAX,
                &mut Vec::new(),
                &mut forests,
                &|cat: &GraphCatalog| (cat.tree_size.len(), &cat.tree_size),
            );
            for forest in forests {
                c.children.push(forest);
                c.tree_size.push(k);
                c.trees_of_size[k].push(c.tree_size.len() - 1);
            }
        }
        for s in 1..=n {
            let mut seqs = Vec::new();
            c.sequences(s, &mut Vec::new(), &mut seqs);
            for seq in seqs.into_iter().filter(|q| is_least_rotation(q)) {
                c.components.push(seq);
                c.component_size.push(s);
                c.components_of_size[s].push(c.components.len() - 1);
            }
        }
        c
    }

    /// Non-increasing id sequences with sizes summing to `total`.
    fn multisets(
        &self,
        total: usize,
        max_id: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        items: &dyn Fn(&GraphCatalog) -> (usize, &Vec<usize>),
    ) {
        if total == 0 {
            out.push(cur.clone());
            return;
        }
        let (count, sizes) = items(self);
        for id in (0..count.min(max_id.saturating_add(1))).rev() {
            if sizes[id] <= total {
                cur.push(id);
                self.multisets(total - sizes[id], id, cur, out, items);
                cur.pop();
            }
        }
    }

    /// All tree-id sequences with sizes summing to `total`.
    fn sequences(&self, total: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        for id in 0..self.tree_size.len() {
            if self.tree_size[id] <= total {
                cur.push(id);
                self.sequences(total - self.tree_size[id], cur, out);
                cur.pop();
            }
        }
    }

    /// Component multisets of total size `n`.
    fn graphs(&self, n: usize, connected_only: bool) -> Vec<Vec<usize>> {
        if connected_only {
            return self.components_of_size[n]
                .iter()
                .map(|&c| vec![c])
                .collect();
        }
        let mut out = Vec::new();
        self.multisets(
            n,
            usize::MAX,
            &mut Vec::new(),
            &mut out,
            &|cat: &GraphCatalog| (cat.components.len(), &cat.component_size),
        );
        out
    }

    /// Labels a tree depth first; children map to their parent.
    fn place_tree(&self, tree: usize, parent: Option<usize>, images: &mut Vec<usize>) -> usize {
        let me = images.len();
        images.push(parent.unwrap_or(usize::MAX));
        for &ch in &self.children[tree] {
            self.place_tree(ch, Some(me), images);
        }
        me
    }

    fn realize(&self, graph: &[usize]) -> FiniteFunction {
        let mut images = Vec::new();
        for &comp in graph {
            let roots: Vec<usize> = self.components[comp]
                .iter()
                .map(|&t| self.place_tree(t, None, &mut images))
                .collect();
            for (i, &r) in roots.iter().enumerate() {
                images[r] = roots[(i + 1) % roots.len()];
            }
        }
        FiniteFunction::from_vec_unchecked(images)
    }
}

fn is_least_rotation(seq: &[usize]) -> bool {
    (1..seq.len()).all(|r| {
        let rotated = seq[r..].iter().chain(&seq[..r]);
        seq.iter().cmp(rotated) != std::cmp::Ordering::Greater
    })
}

/// One self-map per conjugacy class on `n` points, optionally only the
/// connected ones, built from canonical functional graphs.
pub fn functional_graph_representatives(n: usize, connected_only: bool) -> Vec<FiniteFunction> {
    if n == 0 {
        return Vec::new();
    }
    let cat = GraphCatalog::new(n);
    cat.graphs(n, connected_only)
        .iter()
        .map(|g| cat.realize(g))
        .collect()
}

// ---- orbit counting ----------------------------------------------------

fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for k in (1..=n.min(max)).rev() {
        cur.push(k);
        partitions(n - k, k, cur, out);
        cur.pop();
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of conjugacy classes of self-maps on `n` points, averaging the
/// fixed points of conjugation by each permutation over `S_n`.
fn burnside_total(n: usize) -> u128 {
    let mut all = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut all);
    let mut sum = 0u128;
    for part in all {
        let mut c = vec![0usize; n + 1];
        for &k in &part {
            c[k] += 1;
        }
        // A map commutes with σ iff it sends each k-cycle onto a d-cycle with d | k.
        let fix: u128 = (1..=n)
            .filter(|&k| c[k] > 0)
            .map(|k| {
                let choices: u128 = (1..=k)
                    .filter(|d| k % d == 0)
                    .map(|d| (d * c[d]) as u128)
                    .sum();
                choices.pow(c[k] as u32)
            })
            .product();
        let z: u128 = (1..=n)
            .map(|k| (k as u128).pow(c[k] as u32) * factorial(c[k]))
            .product();
        sum += fix * (factorial(n) / z);
    }
    sum / factorial(n)
}

fn mobius(n: usize) -> i128 {
    let (mut m, mut res, mut p) = (n, 1i128, 2);
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            res = -res;
        }
        p += 1;
    }
    if m > 1 {
        res = -res;
    }
    res
}

/// Connected counts from totals by inverting the Euler transform.
fn connected_from_totals(a: &[u128]) -> Vec<u128> {
    let n = a.len() - 1;
    let a: Vec<i128> = a.iter().map(|&v| v as i128).collect();
    let mut b = vec![0i128; n + 1];
    for m in 1..=n {
        b[m] = m as i128 * a[m] - (1..m).map(|k| b[k] * a[m - k]).sum::<i128>();
    }
    (0..=n)
        .map(|m| {
            if m == 0 {
                return 0;
            }
            let s: i128 = (1..=m)
                .filter(|d| m % d == 0)
                .map(|d| mobius(m / d) * b[d])
                .sum();
            (s / m as i128) as u128
        })
        .collect()
}

/// Both counts of a conjugacy census.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyCensus {
    pub n: usize,
    pub connected_only: bool,
    /// By orbit counting under `S_n`.
    pub orbit_count: u128,
    /// By generating canonical functional graphs.
    pub graph_count: u128,
}

impl ConjugacyCensus {
    pub fn agree(&self) -> bool {
        self.orbit_count == self.graph_count
    }

    /// The count, when the two methods agree.
    pub fn count(&self) -> Option<u128> {
        self.agree().then_some(self.orbit_count)
    }
}

pub fn function_conjugacy_census(n: usize, connected_only: bool) -> Result<ConjugacyCensus> {
    guard("conjugacy census carrier", n, MAX_CONJUGACY_N)?;
    if n == 0 {
        return Err(crate::error::Error::invalid(
            "conjugacy census needs n >= 1",
        ));
    }
    let totals: Vec<u128> = (0..=n)
        .map(|m| if m == 0 { 1 } else { burnside_total(m) })
        .collect();
    let orbit_count = if connected_only {
        connected_from_totals(&totals)[n]
    } else {
        totals[n]
    };
    let graph_count = functional_graph_representatives(n, connected_only).len() as u128;
    Ok(ConjugacyCensus {
        n,
        connected_only,
        orbit_count,
        graph_count,
    })
}

// ---- commuting partners --------------------------------------------------

const UNSET: usize = usize::MAX;

struct Partners<'a> {
    f: &'a [usize],
    n: usize,
    g: Vec<usize>,
    trail: Vec<usize>,
    prune_compressible: bool,
}

impl Partners<'_> {
    /// Sets `g(x) = v` and closes under `g(f(x)) = f(g(x))`.
    fn assign(&mut self, x: usize, v: usize) -> bool {
        let mut stack = vec![(x, v)];
        while let Some((x, v)) = stack.pop() {
            if self.g[x] != UNSET {
                if self.g[x] != v {
                    return false;
                }
                continue;
            }
            self.g[x] = v;
            self.trail.push(x);
            stack.push((self.f[x], self.f[v]));
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.g[x] = UNSET;
        }
    }

    /// Some closure under `f` and the assigned part of `g` is complete and proper.
    fn surely_compressible(&self) -> bool {
        let mut seen = vec![false; self.n];
        'seed: for s in 0..self.n {
            seen.iter_mut().for_each(|b| *b = false);
            let mut stack = vec![s];
            seen[s] = true;
            let mut size = 1;
            while let Some(a) = stack.pop() {
                if self.g[a] == UNSET {
                    continue 'seed;
                }
                for b in [self.f[a], self.g[a]] {
                    if !std::mem::replace(&mut seen[b], true) {
                        size += 1;
                        stack.push(b);
                    }
                }
            }
            if size < self.n {
                return true;
            }
        }
        false
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize])) {
        if self.prune_compressible && self.surely_compressible() {
            return;
        }
        let Some(x) = self.g.iter().position(|&v| v == UNSET) else {
            visit(&self.g);
            return;
        };
        for v in 0..self.n {
            let mark = self.trail.len();
            if self.assign(x, v) {
                self.run(visit);
            }
            self.undo(mark);
        }
    }
}

/// Every `g` commuting with `f`, in lexicographic order. With pruning, maps
/// making `{f, g}` compressible are skipped.
fn for_each_commuting(
    f: &FiniteFunction,
    prune_compressible: bool,
    visit: &mut dyn FnMut(&[usize]),
) {
    let n = f.n();
    let mut p = Partners {
        f: f.images(),
        n,
        g: vec![UNSET; n],
        trail: Vec::new(),
        prune_compressible,
    };
    p.run(visit);
}

fn centralizer_size(f: &FiniteFunction) -> u128 {
    Permutation::all(f.n())
        .filter(|s| f.conjugate_by(s) == *f)
        .count() as u128
}

// ---- Lyubashenko route ---------------------------------------------------

/// Simple or bi-connected BLS solutions are Lyubashenko solutions: one
/// Płonka block means `R(x, y) = (f(x), g(y))`.
pub(super) fn lyubashenko_route_applies(q: &CensusQuery) -> bool {
    let bls = q.constraints.iter().any(|c| {
        matches!(
            c,
            Constraint::RMap(RMapLaw::Bls)
                | Constraint::BiMagma(BiMagmaLaw::PlonkaBimagma)
                | Constraint::BiMagma(BiMagmaLaw::UnitaryPlonkaBimagma)
        )
    });
    let connected = q.constraints.iter().any(|c| {
        matches!(
            c,
            Constraint::Predicate(Predicate::Simple)
                | Constraint::Predicate(Predicate::Biconnected)
        )
    });
    bls && connected
}

fn unitary_query(q: &CensusQuery) -> bool {
    q.constraints.iter().any(|c| {
        matches!(
            c,
            Constraint::RMap(RMapLaw::Unitary)
                | Constraint::BiMagma(BiMagmaLaw::UnitaryPlonkaBimagma)
        )
    })
}

pub(super) fn lyubashenko_search(q: &CensusQuery, keep: bool) -> Result<Tally> {
    let n = q.n;
    let unitary = unitary_query(q);
    let simple = q
        .constraints
        .contains(&Constraint::Predicate(Predicate::Simple));
    if unitary {
        guard(
            "unitary Lyubashenko search carrier",
            n,
            q.guards.unitary_lyubashenko_n,
        )?;
    } else {
        guard("Lyubashenko search carrier", n, q.guards.lyubashenko_n)?;
    }
    // Unitarity forces g = f⁻¹ with f bijective.
    let reps: Vec<FiniteFunction> = functional_graph_representatives(n, false)
        .into_iter()
        .filter(|f| !unitary || f.is_bijective())
        .collect();
    let n_fact = factorial(n);
    let tallies = run_branches(reps, q.parallelism, |f| {
        let weight = (n_fact / centralizer_size(&f)) as u64;
        let mut tally = Tally::default();
        let mut test = |g: &FiniteFunction| -> Result<()> {
            let b = lyubashenko(&f, g)?.to_bimagma();
            if bimagma_passes(&b, &q.constraints) {
                tally.add_bimagma_weighted(&b, weight, keep);
            }
            Ok(())
        };
        if unitary {
            let inv = Permutation::from_function(f.clone())?
                .inverse()
                .into_function();
            test(&inv)?;
        } else {
            let mut gs = Vec::new();
            for_each_commuting(&f, simple, &mut |g| gs.push(g.to_vec()));
            for g in gs {
                test(&FiniteFunction::from_vec_unchecked(g))?;
            }
        }
        Ok(tally)
    })?;
    Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
}

// ---- simple BLS census ---------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleBlsCensus {
    pub t: usize,
    /// Distinct classes from odometer triples.
    pub route_a: usize,
    /// Distinct classes from the exhaustive pair search; `None` above its guard.
    pub route_b: Option<usize>,
    /// Whether the two routes produced the same set of classes.
    pub routes_agree: Option<bool>,
    /// Triples whose solution failed the BLS or simplicity check.
    pub failed_triples: Vec<OdometerTriple>,
    /// One `(triple, f, g)` per odometer class.
    pub representatives: Vec<(OdometerTriple, FiniteFunction, FiniteFunction)>,
}

impl SimpleBlsCensus {
    pub fn single_route(&self) -> bool {
        self.route_b.is_none()
    }

    pub fn expected(&self) -> u64 {
        sigma(self.t as u64)
    }
}

pub fn census_simple_bls(t: usize) -> Result<SimpleBlsCensus> {
    census_simple_bls_with(t, MAX_SIMPLE_BLS_ROUTE_B)
}

pub fn census_simple_bls_with(t: usize, route_b_limit: usize) -> Result<SimpleBlsCensus> {
    if t == 0 {
        return Err(crate::error::Error::invalid(
            "simple BLS census needs t >= 1",
        ));
    }
    let mut codes_a = BTreeSet::new();
    let mut failed_triples = Vec::new();
    let mut representatives = Vec::new();
    for triple in OdometerTriple::all_of_size(t) {
        let r = build_solution(&SolutionSpec::OdometerSolution { triple })?;
        if !check_rmap_law(&r, RMapLaw::Bls).holds() || !is_simple(&r).holds() {
            failed_triples.push(triple);
            continue;
        }
        let f = FiniteFunction::from_fn(t, |x| r.apply(x, 0).0)?;
        let g = FiniteFunction::from_fn(t, |y| r.apply(0, y).1)?;
        if codes_a.insert(canonical_family(&[f.clone(), g.clone()]).code) {
            representatives.push((triple, f, g));
        }
    }
    let codes_b = (t <= route_b_limit).then(|| {
        let mut codes = BTreeSet::new();
        for f in functional_graph_representatives(t, false) {
            for_each_commuting(&f, true, &mut |g| {
                let g = FiniteFunction::from_vec_unchecked(g.to_vec());
                let fam = FunctionFamily::new(vec![f.clone(), g]).expect("same carrier");
                if fam.is_commuting() && fam.is_incompressible() {
                    codes.insert(canonical_family(fam.members()).code);
                }
            });
        }
        codes
    });
    Ok(SimpleBlsCensus {
        t,
        route_a: codes_a.len(),
        route_b: codes_b.as_ref().map(|c| c.len()),
        routes_agree: codes_b.as_ref().map(|c| *c == codes_a),
        failed_triples,
        representatives,
    })
}

// ---- BLS solutions from partition data -----------------------------------

fn set_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(labels: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<SetPartition>) {
        if labels.len() == n {
            out.push(SetPartition::from_labels(labels));
            return;
        }
        for l in 0..=max + 1 {
            labels.push(l);
            rec(labels, n, max.max(l), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(&mut vec![0], n, 0, &mut out);
    }
    out
}

/// Every `k`-tuple of pairwise commuting maps on `s` points.
fn commuting_tuples(s: usize, k: usize) -> Vec<Vec<FiniteFunction>> {
    let all: Vec<FiniteFunction> = (0..s.pow(s as u32))
        .map(|mut idx| {
            FiniteFunction::from_vec_unchecked(
                (0..s)
                    .map(|_| {
                        let v = idx % s;
                        idx /= s;
                        v
                    })
                    .collect(),
            )
        })
        .collect();
    let mut out = Vec::new();
    fn rec(
        all: &[FiniteFunction],
        k: usize,
        cur: &mut Vec<FiniteFunction>,
        out: &mut Vec<Vec<FiniteFunction>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for f in all {
            if cur.iter().all(|c| c.commutes_with(f)) {
                cur.push(f.clone());
                rec(all, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(&all, k, &mut Vec::new(), &mut out);
    out
}

/// Canonical codes of all Płonka bi-magmas on `n` points, built from every
/// set partition and every family of commuting block maps.
pub fn bls_structural_classes(n: usize) -> Result<BTreeSet<Vec<u8>>> {
    guard("structural BLS census carrier", n, MAX_STRUCTURAL_N)?;
    let mut codes = BTreeSet::new();
    for blocks in set_partitions(n) {
        let k = blocks.len();
        let per_block: Vec<Vec<Vec<FiniteFunction>>> = blocks
            .blocks()
            .iter()
            .map(|b| commuting_tuples(b.len(), 2 * k))
            .collect();
        let mut choice = vec![0usize; k];
        'outer: loop {
            let mut f = Vec::with_capacity(k);
            let mut g = Vec::with_capacity(k);
            for (i, &c) in choice.iter().enumerate() {
                let tuple = &per_block[i][c];
                f.push(tuple[..k].to_vec());
                g.push(tuple[k..].to_vec());
            }
            let b = BiPlonkaPartition {
                blocks: blocks.clone(),
                f,
                g,
            }
            .rebuild()?;
            codes.insert(canonical_bimagma(&b).code);
            for i in 0..k {
                choice[i] += 1;
                if choice[i] < per_block[i].len() {
                    continue 'outer;
                }
                choice[i] = 0;
            }
            break;
        }
    }
    Ok(codes)
}
