//! Exact canonical forms under relabeling, by branch-and-bound minimal image.
//!
//! Cells are read in shell order: shell `k` holds every cell whose largest
//! argument label is `k`. For a binary operation that is `(a, k), (k, a)` for
//! `a < k` followed by `(k, k)`; for a unary one it is the single value at `k`.
//! When several operations are present their values are interleaved per cell.
//! The canonical code is the least such sequence over all labelings.

use crate::finite::{BiMagma, CayleyTable, FiniteFunction, Permutation};

/// An operation on `0..n` read through the canonical labeling.
#[derive(Clone, Copy)]
pub enum Op<'a> {
    Unary(&'a [usize]),
    Binary(&'a [usize]),
}

/// Canonical code plus a labeling (element to label) that realizes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: Vec<u8>,
    pub labeling: Permutation,
}

const NONE: u8 = u8::MAX;

struct Canon<'a> {
    n: usize,
    ops: &'a [Op<'a>],
    invariant: Vec<u64>,
    lab: Vec<u8>,
    elem: Vec<u8>,
    next: usize,
    seq: Vec<u8>,
    best: Option<(Vec<u8>, Vec<u8>)>,
}

impl Canon<'_> {
    #[inline]
    fn label_of(&mut self, v: usize) -> u8 {
        if self.lab[v] == NONE {
            self.lab[v] = self.next as u8;
            self.elem[self.next] = v as u8;
            self.next += 1;
        }
        self.lab[v]
    }

    /// Appends `label`; returns `None` to prune, otherwise the updated "already smaller" flag.
    #[inline]
    fn push(&mut self, label: u8, less: bool) -> Option<bool> {
        let pos = self.seq.len();
        self.seq.push(label);
        if less {
            return Some(true);
        }
        match &self.best {
            None => Some(true),
            Some((b, _)) => match label.cmp(&b[pos]) {
                std::cmp::Ordering::Less => Some(true),
                std::cmp::Ordering::Equal => Some(false),
                std::cmp::Ordering::Greater => None,
            },
        }
    }

    fn emit_cell(&mut self, a: usize, b: usize, mut less: bool) -> Option<bool> {
        for i in 0..self.ops.len() {
            let v = match self.ops[i] {
                Op::Binary(t) => t[a * self.n + b],
                Op::Unary(_) => continue,
            };
            let l = self.label_of(v);
            less = self.push(l, less)?;
        }
        Some(less)
    }

    fn shell(&mut self, k: usize, less: bool) {
        if k == self.n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => self.seq < *b,
            };
            if better {
                self.best = Some((self.seq.clone(), self.lab.clone()));
            }
            return;
        }
        if self.next == k {
            let free: Vec<usize> = (0..self.n).filter(|&e| self.lab[e] == NONE).collect();
            let min_inv = free
                .iter()
                .map(|&e| self.invariant[e])
                .min()
                .expect("unassigned element exists");
            for e in free {
                if self.invariant[e] != min_inv {
                    continue;
                }
                self.lab[e] = k as u8;
                self.elem[k] = e as u8;
                self.next = k + 1;
                self.process(k, less);
                self.lab[e] = NONE;
                self.next = k;
            }
        } else {
            self.process(k, less);
        }
    }

    fn process(&mut self, k: usize, less: bool) {
        let saved_next = self.next;
        let saved_len = self.seq.len();
        if let Some(less) = self.emit_shell(k, less) {
            self.shell(k + 1, less);
        }
        for l in saved_next..self.next {
            let e = self.elem[l] as usize;
            self.lab[e] = NONE;
        }
        self.next = saved_next;
        self.seq.truncate(saved_len);
    }

    fn emit_shell(&mut self, k: usize, mut less: bool) -> Option<bool> {
        let pk = self.elem[k] as usize;
        for i in 0..self.ops.len() {
            if let Op::Unary(f) = self.ops[i] {
                let l = self.label_of(f[pk]);
                less = self.push(l, less)?;
            }
        }
        for a in 0..k {
            let pa = self.elem[a] as usize;
            less = self.emit_cell(pa, pk, less)?;
            less = self.emit_cell(pk, pa, less)?;
        }
        self.emit_cell(pk, pk, less)
    }
}

/// An isomorphism-invariant summary of each element, used to restrict branching.
fn invariants(n: usize, ops: &[Op<'_>]) -> Vec<u64> {
    let mut inv = vec![0u64; n];
    for op in ops {
        match *op {
            Op::Unary(f) => {
                let mut indeg = vec![0u64; n];
                for &v in f {
                    indeg[v] += 1;
                }
                for x in 0..n {
                    inv[x] = inv[x].wrapping_mul(1_000_003) ^ ((f[x] == x) as u64 | indeg[x] << 1);
                }
            }
            Op::Binary(t) => {
                let mut seen = vec![0u32; n];
                let mut stamp = 0u32;
                for x in 0..n {
                    let mut hits = 0u64;
                    let mut row = 0u64;
                    let mut col = 0u64;
                    for y in 0..n {
                        hits += (t[y * n + y] == x) as u64 + (t[x * n + y] == x) as u64 * 16;
                    }
                    stamp += 1;
                    for y in 0..n {
                        let v = t[x * n + y];
                        if seen[v] != stamp {
                            seen[v] = stamp;
                            row += 1;
                        }
                    }
                    stamp += 1;
                    for y in 0..n {
                        let v = t[y * n + x];
                        if seen[v] != stamp {
                            seen[v] = stamp;
                            col += 1;
                        }
                    }
                    let idem = (t[x * n + x] == x) as u64;
                    inv[x] = inv[x].wrapping_mul(1_000_003)
                        ^ (idem | row << 1 | col << 9 | hits.min(255) << 17);
                }
            }
        }
    }
    inv
}

/// Canonical form of a list of operations on a common carrier of at most 254 elements.
pub fn canonical_form(n: usize, ops: &[Op<'_>]) -> CanonicalForm {
    assert!(
        n >= 1 && n < NONE as usize,
        "canonical forms need 1 <= n < 255"
    );
    let mut c = Canon {
        n,
        ops,
        invariant: invariants(n, ops),
        lab: vec![NONE; n],
        elem: vec![NONE; n],
        next: 0,
        seq: Vec::new(),
        best: None,
    };
    c.shell(0, false);
    let (code, lab) = c.best.expect("at least one labeling is explored");
    CanonicalForm {
        code,
        labeling: Permutation::from_vec_unchecked(lab.into_iter().map(usize::from).collect()),
    }
}

pub fn canonical_table(t: &CayleyTable) -> CanonicalForm {
    canonical_form(t.n(), &[Op::Binary(t.cells())])
}

pub fn canonical_bimagma(b: &BiMagma) -> CanonicalForm {
    canonical_form(
        b.n(),
        &[Op::Binary(b.dot().cells()), Op::Binary(b.star().cells())],
    )
}

/// Canonical form of an ordered family under simultaneous conjugation.
pub fn canonical_family(members: &[FiniteFunction]) -> CanonicalForm {
    let n = members[0].n();
    let ops: Vec<Op<'_>> = members.iter().map(|f| Op::Unary(f.images())).collect();
    canonical_form(n, &ops)
}
