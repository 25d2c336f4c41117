//! Cell-by-cell search over one or two tables, pruned by partial law evaluation.

use std::sync::atomic::{AtomicU64, Ordering};

use super::partial::{LawRef, PartialTables, Pruner, EMPTY};
use super::{bimagma_passes, magma_passes, run_branches, CensusQuery, Constraint, Result, Tally};
use crate::error::Error;
use crate::finite::{BiMagma, CayleyTable};

/// Cells in shell order: `(a, k), (k, a)` for `a < k`, then `(k, k)`.
pub(crate) fn shell_order(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        for a in 0..k {
            out.push((a, k));
            out.push((k, a));
        }
        out.push((k, k));
    }
    out
}

const SPLIT_CELLS: usize = 3;

struct CellSearch<'a> {
    q: &'a CensusQuery,
    width: usize,
    order: Vec<(usize, usize)>,
    pruner: Pruner,
    nodes: AtomicU64,
}

impl CellSearch<'_> {
    fn values(&self) -> usize {
        self.q.n.pow(self.width as u32)
    }

    fn set(&self, p: &mut PartialTables, depth: usize, v: usize) {
        let n = self.q.n;
        let (x, y) = self.order[depth];
        if self.width == 1 {
            p.dot[x * n + y] = v as u16;
        } else {
            p.dot[x * n + y] = (v / n) as u16;
            p.star[x * n + y] = (v % n) as u16;
        }
    }

    fn clear(&self, p: &mut PartialTables, depth: usize) {
        let n = self.q.n;
        let (x, y) = self.order[depth];
        p.dot[x * n + y] = EMPTY;
        if self.width == 2 {
            p.star[x * n + y] = EMPTY;
        }
    }

    fn tick(&self) -> Result<()> {
        let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let limit = self.q.guards.max_nodes;
        if seen > limit {
            return Err(Error::GuardExceeded {
                what: "cell search nodes",
                size: seen as u128,
                limit: limit as u128,
            });
        }
        Ok(())
    }

    fn complete(&self, p: &PartialTables, keep: bool, tally: &mut Tally) -> Result<()> {
        let n = self.q.n;
        let dot = CayleyTable::from_cells_unchecked(n, p.dot.iter().map(|&v| v as usize).collect());
        if self.width == 1 {
            if magma_passes(&dot, &self.q.constraints) {
                tally.add_magma(&dot, keep);
            }
        } else {
            let star =
                CayleyTable::from_cells_unchecked(n, p.star.iter().map(|&v| v as usize).collect());
            let b = BiMagma::new(dot, star)?;
            if bimagma_passes(&b, &self.q.constraints) {
                tally.add_bimagma(&b, keep);
            }
        }
        Ok(())
    }

    fn rec(
        &self,
        p: &mut PartialTables,
        depth: usize,
        keep: bool,
        tally: &mut Tally,
    ) -> Result<()> {
        if depth == self.order.len() {
            return self.complete(p, keep, tally);
        }
        for v in 0..self.values() {
            self.tick()?;
            self.set(p, depth, v);
            if self.pruner.consistent(p) {
                self.rec(p, depth + 1, keep, tally)?;
            }
        }
        self.clear(p, depth);
        Ok(())
    }

    /// Consistent assignments of the first `SPLIT_CELLS` cells.
    fn roots(&self) -> Vec<Vec<usize>> {
        let depth = SPLIT_CELLS.min(self.order.len());
        let mut out = Vec::new();
        let mut p = PartialTables::new(self.q.n, self.width);
        let mut prefix = Vec::new();
        self.collect_roots(&mut p, &mut prefix, depth, &mut out);
        out
    }

    fn collect_roots(
        &self,
        p: &mut PartialTables,
        prefix: &mut Vec<usize>,
        depth: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let d = prefix.len();
        if d == depth {
            out.push(prefix.clone());
            return;
        }
        for v in 0..self.values() {
            self.set(p, d, v);
            if self.pruner.consistent(p) {
                prefix.push(v);
                self.collect_roots(p, prefix, depth, out);
                prefix.pop();
            }
        }
        self.clear(p, d);
    }
}

pub(super) fn search(q: &CensusQuery, width: usize, keep: bool) -> Result<Tally> {
    let laws: Vec<LawRef> = q
        .constraints
        .iter()
        .filter_map(|c| match *c {
            Constraint::Magma(l) => Some(LawRef::Magma(l)),
            Constraint::BiMagma(l) => Some(LawRef::BiMagma(l)),
            Constraint::RMap(l) => Some(LawRef::RMap(l)),
            Constraint::Predicate(_) => None,
        })
        .collect();
    let s = CellSearch {
        q,
        width,
        order: shell_order(q.n),
        pruner: Pruner::new(&laws),
        nodes: AtomicU64::new(0),
    };
    let roots = s.roots();
    let depth = SPLIT_CELLS.min(s.order.len());
    let tallies = run_branches(roots, q.parallelism, |prefix| {
        let mut p = PartialTables::new(q.n, width);
        for (d, &v) in prefix.iter().enumerate() {
            s.set(&mut p, d, v);
        }
        let mut tally = Tally::default();
        s.rec(&mut p, depth, keep, &mut tally)?;
        Ok(tally)
    })?;
    Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{Constraint, Predicate};
    use crate::laws::{BiMagmaLaw, MagmaLaw, RMapLaw};

    fn brute_magmas(n: usize, laws: &[MagmaLaw]) -> (u64, usize) {
        let total = n.pow((n * n) as u32);
        let mut codes = std::collections::BTreeSet::new();
        let mut raw = 0;
        for mut idx in 0..total {
            let cells: Vec<usize> = (0..n * n)
                .map(|_| {
                    let v = idx % n;
                    idx /= n;
                    v
                })
                .collect();
            let t = CayleyTable::new(n, cells).unwrap();
            if laws
                .iter()
                .all(|&l| crate::laws::check_magma_law(&t, l).holds())
            {
                raw += 1;
                codes.insert(crate::canon::canonical_table(&t).code);
            }
        }
        (raw, codes.len())
    }

    #[test]
    fn shell_order_covers_every_cell_once() {
        let mut o = shell_order(4);
        assert_eq!(o[..4], [(0, 0), (0, 1), (1, 0), (1, 1)]);
        o.sort();
        o.dedup();
        assert_eq!(o.len(), 16);
    }

    #[test]
    fn agrees_with_brute_force_on_small_magmas() {
        for laws in [
            vec![MagmaLaw::Associative],
            vec![MagmaLaw::RightPlonka],
            vec![MagmaLaw::Commutative, MagmaLaw::Band],
            vec![MagmaLaw::LeftQuasigroup],
            vec![MagmaLaw::Total],
        ] {
            for n in 1..=3 {
                let q = CensusQuery::new(n, laws.iter().map(|&l| Constraint::Magma(l)).collect())
                    .unwrap();
                let t = search(&q, 1, false).unwrap();
                assert_eq!(
                    (t.raw, t.classes.len()),
                    brute_magmas(n, &laws),
                    "{laws:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn bls_bimagmas_at_two_points() {
        let q = CensusQuery::new(2, vec![Constraint::RMap(RMapLaw::Bls)]).unwrap();
        let a = search(&q, 2, false).unwrap();
        let q = CensusQuery::new(2, vec![Constraint::BiMagma(BiMagmaLaw::PlonkaBimagma)]).unwrap();
        let b = search(&q, 2, false).unwrap();
        assert_eq!(a.raw, b.raw);
        assert_eq!(
            a.classes.keys().collect::<Vec<_>>(),
            b.classes.keys().collect::<Vec<_>>()
        );
        let q = CensusQuery::new(
            2,
            vec![
                Constraint::RMap(RMapLaw::Bls),
                Constraint::Predicate(Predicate::Simple),
            ],
        )
        .unwrap();
        assert_eq!(search(&q, 2, false).unwrap().classes.len(), 3);
    }

    #[test]
    fn node_budget_is_enforced() {
        let mut q = CensusQuery::new(3, vec![Constraint::Magma(MagmaLaw::Total)]).unwrap();
        q.guards.max_nodes = 1000;
        assert!(matches!(
            search(&q, 1, false),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
