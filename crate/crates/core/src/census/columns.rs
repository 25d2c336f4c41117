//! Right Płonka magmas as families of columns.
//!
//! Writing `x·y = c_y(x)`, the right Płonka laws say the columns pairwise
//! commute and `c_{c_z(y)} = c_y`. The search assigns `c_0, c_1, …` in turn,
//! so the second law either forces a column or is checked as soon as all
//! three indices are assigned.

use super::{magma_passes, run_branches, CensusQuery, Constraint, Predicate, Result, Tally};
use crate::finite::CayleyTable;
use crate::laws::MagmaLaw;

const BITSET_LIMIT: usize = 4096;

struct Space {
    n: usize,
    cands: Vec<Vec<u8>>,
    /// Candidates allowed as column `y`.
    allowed: Vec<Vec<u32>>,
    allowed_mask: Vec<Vec<bool>>,
    commute: Option<Vec<Vec<u64>>>,
    all_equal: bool,
}

fn compose_power_is_id(c: &[u8], k: usize) -> bool {
    (0..c.len()).all(|x| {
        let mut v = x;
        for _ in 0..k {
            v = c[v] as usize;
        }
        v == x
    })
}

fn column_filter(q: &CensusQuery, c: &[u8]) -> bool {
    q.constraints.iter().all(|con| match con {
        Constraint::Magma(MagmaLaw::RightInvolutory) | Constraint::Magma(MagmaLaw::TwoCyclic) => {
            compose_power_is_id(c, 2)
        }
        Constraint::Magma(MagmaLaw::KCyclic(k)) => compose_power_is_id(c, *k),
        Constraint::Magma(MagmaLaw::RightQuasigroup)
        | Constraint::Magma(MagmaLaw::RightCancellative) => {
            let mut seen = vec![false; c.len()];
            c.iter()
                .all(|&v| !std::mem::replace(&mut seen[v as usize], true))
        }
        _ => true,
    })
}

fn commutes(a: &[u8], b: &[u8]) -> bool {
    (0..a.len()).all(|x| a[b[x] as usize] == b[a[x] as usize])
}

impl Space {
    fn new(q: &CensusQuery) -> Space {
        let n = q.n;
        let total = n.pow(n as u32);
        let cands: Vec<Vec<u8>> = (0..total)
            .map(|mut idx| {
                let mut c = vec![0u8; n];
                for x in (0..n).rev() {
                    c[x] = (idx % n) as u8;
                    idx /= n;
                }
                c
            })
            .filter(|c| column_filter(q, c))
            .collect();
        let band = q.constraints.iter().any(|c| {
            matches!(
                c,
                Constraint::Magma(MagmaLaw::Band) | Constraint::Magma(MagmaLaw::TwoCyclic)
            )
        });
        let allowed_mask: Vec<Vec<bool>> = (0..n)
            .map(|y| cands.iter().map(|c| !band || c[y] as usize == y).collect())
            .collect();
        let allowed = allowed_mask
            .iter()
            .map(|m| (0..cands.len() as u32).filter(|&i| m[i as usize]).collect())
            .collect();
        let commute = (cands.len() <= BITSET_LIMIT).then(|| {
            let words = cands.len().div_ceil(64);
            cands
                .iter()
                .map(|a| {
                    let mut bits = vec![0u64; words];
                    for (j, b) in cands.iter().enumerate() {
                        if commutes(a, b) {
                            bits[j / 64] |= 1 << (j % 64);
                        }
                    }
                    bits
                })
                .collect()
        });
        // Every right ideal is closed under all columns, and the forcing law
        // makes `c` constant on each closure; right simplicity then leaves
        // one column.
        let all_equal = q.use_lemmas
            && q.constraints
                .contains(&Constraint::Predicate(Predicate::RightSimple));
        Space {
            n,
            cands,
            allowed,
            allowed_mask,
            commute,
            all_equal,
        }
    }

    fn commute_idx(&self, a: u32, b: u32) -> bool {
        match &self.commute {
            Some(bits) => bits[a as usize][b as usize / 64] >> (b % 64) & 1 == 1,
            None => commutes(&self.cands[a as usize], &self.cands[b as usize]),
        }
    }

    fn col(&self, cols: &[u32], y: usize, x: usize) -> usize {
        self.cands[cols[y] as usize][x] as usize
    }

    /// The column forced at level `j` by `c_{c_z(y)} = c_y` with `y, z < j`.
    /// `Err` if two forcings disagree.
    fn forced(&self, cols: &[u32], j: usize) -> std::result::Result<Option<u32>, ()> {
        if self.all_equal && j > 0 {
            return Ok(Some(cols[0]));
        }
        let mut out: Option<u32> = None;
        for z in 0..j {
            for y in 0..j {
                if self.col(cols, z, y) == j {
                    match out {
                        None => out = Some(cols[y]),
                        Some(c) if c != cols[y] => return Err(()),
                        _ => {}
                    }
                }
            }
        }
        Ok(out)
    }

    /// All constraints whose indices are at most `j` and involve `j`.
    fn level_ok(&self, cols: &[u32], j: usize) -> bool {
        let cj = cols[j];
        if !(0..j).all(|i| self.commute_idx(cols[i], cj)) {
            return false;
        }
        for z in 0..=j {
            for y in 0..=j {
                let w = self.col(cols, z, y);
                if w <= j && (y == j || z == j || w == j) && cols[w] != cols[y] {
                    return false;
                }
            }
        }
        true
    }

    fn table(&self, cols: &[u32]) -> CayleyTable {
        let n = self.n;
        CayleyTable::from_cells_unchecked(
            n,
            (0..n * n).map(|i| self.col(cols, i % n, i / n)).collect(),
        )
    }

    fn extend(&self, q: &CensusQuery, cols: &mut Vec<u32>, keep: bool, tally: &mut Tally) {
        let j = cols.len();
        if j == self.n {
            let t = self.table(cols);
            if magma_passes(&t, &q.constraints) {
                tally.add_magma(&t, keep);
            }
            return;
        }
        match self.forced(cols, j) {
            Err(()) => {}
            Ok(Some(c)) => {
                if self.allowed_mask[j][c as usize] {
                    self.try_column(q, cols, c, keep, tally);
                }
            }
            Ok(None) => {
                for &c in &self.allowed[j] {
                    self.try_column(q, cols, c, keep, tally);
                }
            }
        }
    }

    fn try_column(
        &self,
        q: &CensusQuery,
        cols: &mut Vec<u32>,
        c: u32,
        keep: bool,
        tally: &mut Tally,
    ) {
        cols.push(c);
        if self.level_ok(cols, cols.len() - 1) {
            self.extend(q, cols, keep, tally);
        }
        cols.pop();
    }
}

pub(super) fn search(q: &CensusQuery, keep: bool) -> Result<Tally> {
    let space = Space::new(q);
    let roots = space.allowed[0].clone();
    let tallies = run_branches(roots, q.parallelism, |c0| {
        let mut tally = Tally::default();
        let mut cols = vec![c0];
        if space.level_ok(&cols, 0) {
            space.extend(q, &mut cols, keep, &mut tally);
        }
        Ok(tally)
    })?;
    Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
}
