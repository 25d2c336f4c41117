//! Ideals, simplicity, Rees quotients and decomposability, all by closure.

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{BiMagma, CayleyTable, Guards, RMap, SetPartition};
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    RmapIdeal,
    MagmaRight,
    MagmaLeft,
    MagmaTwoSided,
    BimagmaRightLeft,
}

impl IdealKind {
    pub const ALL: [IdealKind; 5] = [
        IdealKind::RmapIdeal,
        IdealKind::MagmaRight,
        IdealKind::MagmaLeft,
        IdealKind::MagmaTwoSided,
        IdealKind::BimagmaRightLeft,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::RmapIdeal => "rmap_ideal",
            IdealKind::MagmaRight => "magma_right",
            IdealKind::MagmaLeft => "magma_left",
            IdealKind::MagmaTwoSided => "magma_two_sided",
            IdealKind::BimagmaRightLeft => "bimagma_right_left",
        }
    }
}

impl std::str::FromStr for IdealKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdealKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown ideal kind {s:?}")))
    }
}

/// The structure an ideal lives in.
#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    RMap(&'a RMap),
    Magma(&'a CayleyTable),
    BiMagma(&'a BiMagma),
}

impl Target<'_> {
    fn n(&self) -> usize {
        match self {
            Target::RMap(r) => r.n(),
            Target::Magma(t) => t.n(),
            Target::BiMagma(b) => b.n(),
        }
    }
}

/// For each `a`, the elements any ideal containing `a` must also contain.
fn successors(target: Target<'_>, kind: IdealKind) -> Result<Vec<Vec<usize>>> {
    let n = target.n();
    let build = |f: &dyn Fn(usize, usize) -> [Option<usize>; 2]| -> Vec<Vec<usize>> {
        (0..n)
            .map(|a| {
                let mut out: Vec<usize> = (0..n).flat_map(|x| f(a, x)).flatten().collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect()
    };
    Ok(match (target, kind) {
        (Target::RMap(r), IdealKind::RmapIdeal) => {
            build(&|a, x| [Some(r.apply(a, x).0), Some(r.apply(x, a).1)])
        }
        (Target::Magma(t), IdealKind::MagmaRight) => build(&|a, x| [Some(t.get(a, x)), None]),
        (Target::Magma(t), IdealKind::MagmaLeft) => build(&|a, x| [Some(t.get(x, a)), None]),
        (Target::Magma(t), IdealKind::MagmaTwoSided) => {
            build(&|a, x| [Some(t.get(a, x)), Some(t.get(x, a))])
        }
        (Target::BiMagma(b), IdealKind::BimagmaRightLeft) => {
            build(&|a, x| [Some(b.mul(a, x)), Some(b.act(x, a))])
        }
        (_, kind) => {
            return Err(Error::invalid(format!(
                "ideal kind {} does not apply to this structure",
                kind.name()
            )))
        }
    })
}

fn closure(succ: &[Vec<usize>], seeds: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; succ.len()];
    let mut stack = Vec::new();
    for &s in seeds {
        if !std::mem::replace(&mut seen[s], true) {
            stack.push(s);
        }
    }
    while let Some(a) = stack.pop() {
        for &b in &succ[a] {
            if !std::mem::replace(&mut seen[b], true) {
                stack.push(b);
            }
        }
    }
    seen
}

/// Every ideal of the given kind, sorted by size then lexicographically.
pub fn ideals(target: Target<'_>, kind: IdealKind) -> Result<Vec<Vec<usize>>> {
    ideals_with(target, kind, &Guards::default())
}

pub fn ideals_with(
    target: Target<'_>,
    kind: IdealKind,
    guards: &Guards,
) -> Result<Vec<Vec<usize>>> {
    let n = target.n();
    if n > guards.max_subset_n {
        return Err(Error::GuardExceeded {
            what: "subset enumeration",
            size: n as u128,
            limit: guards.max_subset_n as u128,
        });
    }
    let succ = successors(target, kind)?;
    let masks: Vec<u32> = succ
        .iter()
        .map(|s| s.iter().fold(0u32, |m, &b| m | 1 << b))
        .collect();
    let mut out: Vec<Vec<usize>> = (1u32..1 << n)
        .filter(|&set| (0..n).all(|a| set & 1 << a == 0 || masks[a] & !set == 0))
        .map(|set| (0..n).filter(|&a| set & 1 << a != 0).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Simplicity of an R-map: every principal ideal is the whole carrier.
pub fn is_simple(r: &RMap) -> Verdict {
    is_simple_as(Target::RMap(r), IdealKind::RmapIdeal).expect("rmap_ideal applies to R-maps")
}

/// Simplicity for any compatible structure and ideal kind. The witness is
/// the principal ideal of the least element that generates a proper one.
pub fn is_simple_as(target: Target<'_>, kind: IdealKind) -> Result<Verdict> {
    let succ = successors(target, kind)?;
    let n = target.n();
    for x in 0..n {
        let c = closure(&succ, &[x]);
        if !c.iter().all(|&b| b) {
            return Ok(Verdict::fail(Witness::Subset {
                condition: kind.name().to_string(),
                elements: (0..n).filter(|&y| c[y]).collect(),
            }));
        }
    }
    Ok(Verdict::pass())
}

/// Rees quotient by a two-sided ideal: `I` collapses to one class, the
/// other elements stay singletons, and classes are numbered by least member.
pub fn rees_quotient(m: &CayleyTable, ideal: &[usize]) -> Result<CayleyTable> {
    let n = m.n();
    let mut inside = vec![false; n];
    for &a in ideal {
        if a >= n {
            return Err(Error::invalid(format!("element {a} out of range")));
        }
        inside[a] = true;
    }
    if ideal.is_empty() {
        return Err(Error::invalid("an ideal is non-empty"));
    }
    for a in (0..n).filter(|&a| inside[a]) {
        for x in 0..n {
            if !inside[m.get(a, x)] || !inside[m.get(x, a)] {
                return Err(Error::invalid(format!(
                    "{ideal:?} is not a two-sided ideal"
                )));
            }
        }
    }
    let rep = (0..n).find(|&a| inside[a]).expect("non-empty ideal");
    let labels: Vec<usize> = (0..n).map(|x| if inside[x] { rep } else { x }).collect();
    let classes = SetPartition::from_labels(&labels);
    let class = classes.block_of();
    let reps: Vec<usize> = classes.blocks().iter().map(|b| b[0]).collect();
    CayleyTable::from_fn(reps.len(), |i, j| class[m.get(reps[i], reps[j])])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub finest_valid_partition: SetPartition,
    pub biconnected: bool,
    /// `None` when the two-part search exceeds its guard.
    pub ess_indecomposable: Option<bool>,
}

/// Closes `block` under `a, b ∈ B ⇒ both components of R(a, b) ∈ B`.
fn sub_closure(r: &RMap, member: &mut [bool]) {
    let n = r.n();
    loop {
        let elems: Vec<usize> = (0..n).filter(|&x| member[x]).collect();
        let mut grew = false;
        for &a in &elems {
            for &b in &elems {
                let (u, v) = r.apply(a, b);
                for w in [u, v] {
                    if !member[w] {
                        member[w] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return;
        }
    }
}

fn is_closed(r: &RMap, member: &[bool]) -> bool {
    let n = r.n();
    (0..n).filter(|&a| member[a]).all(|a| {
        (0..n).filter(|&b| member[b]).all(|b| {
            let (u, v) = r.apply(a, b);
            member[u] && member[v]
        })
    })
}

/// The least partition into sub-structures `R(B×B) ⊆ B×B`.
pub fn finest_valid_partition(r: &RMap) -> SetPartition {
    let n = r.n();
    let mut uf: UnionFind<usize> = UnionFind::new(n);
    loop {
        let current = SetPartition::from_labels(&uf.clone().into_labeling());
        let mut changed = false;
        for block in current.blocks() {
            let mut member = vec![false; n];
            for &x in block {
                member[x] = true;
            }
            sub_closure(r, &mut member);
            for y in (0..n).filter(|&y| member[y]) {
                changed |= uf.union(block[0], y);
            }
        }
        if !changed {
            return current;
        }
    }
}

pub fn decomposition_report(r: &RMap) -> DecompositionReport {
    decomposition_report_with(r, &Guards::default())
}

pub fn decomposition_report_with(r: &RMap, guards: &Guards) -> DecompositionReport {
    let finest = finest_valid_partition(r);
    let biconnected = finest.len() == 1;
    // Every closed two-part split is a union of finest blocks.
    let k = finest.len();
    let ess_indecomposable = if biconnected {
        Some(true)
    } else if k > guards.max_split_blocks {
        None
    } else {
        let n = r.n();
        let split = (1u32..1 << (k - 1)).any(|mask| {
            // Block k-1 always stays on the complement side.
            let mut member = vec![false; n];
            for (i, b) in finest.blocks().iter().enumerate() {
                if mask & 1 << i != 0 {
                    for &x in b {
                        member[x] = true;
                    }
                }
            }
            let complement: Vec<bool> = member.iter().map(|&m| !m).collect();
            is_closed(r, &member) && is_closed(r, &complement)
        });
        Some(!split)
    };
    DecompositionReport {
        finest_valid_partition: finest,
        biconnected,
        ess_indecomposable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteFunction;

    #[test]
    fn ideal_examples() {
        let id = RMap::identity(2);
        assert_eq!(
            ideals(Target::RMap(&id), IdealKind::RmapIdeal).unwrap(),
            vec![vec![0], vec![1], vec![0, 1]]
        );
        let flip = RMap::flip(3);
        assert_eq!(
            ideals(Target::RMap(&flip), IdealKind::RmapIdeal).unwrap(),
            vec![vec![0, 1, 2]]
        );
        let f = FiniteFunction::new(vec![1, 0, 2]).unwrap();
        let t = CayleyTable::from_function(&f);
        assert_eq!(
            ideals(Target::Magma(&t), IdealKind::MagmaRight).unwrap(),
            vec![vec![2], vec![0, 1], vec![0, 1, 2]]
        );
        assert!(ideals(Target::Magma(&t), IdealKind::RmapIdeal).is_err());
    }

    #[test]
    fn simplicity_examples() {
        let w = is_simple(&RMap::identity(2));
        assert_eq!(
            w.witness(),
            Some(&Witness::Subset {
                condition: "rmap_ideal".into(),
                elements: vec![0]
            })
        );
        let c = FiniteFunction::cycle(4);
        let rf = RMap::from_fn(4, |x, y| (c.apply(x), c.apply(y))).unwrap();
        assert!(is_simple(&rf).holds());
        assert!(is_simple(&RMap::flip(3)).holds());
    }

    #[test]
    fn rees_examples() {
        assert!(rees_quotient(&CayleyTable::left_zero(3), &[0, 1]).is_err());
        let zero = CayleyTable::from_fn(3, |_, _| 0).unwrap();
        assert_eq!(rees_quotient(&zero, &[0, 1]).unwrap().n(), 2);
        assert_eq!(rees_quotient(&zero, &[0, 1, 2]).unwrap().n(), 1);
        let c0 = CayleyTable::from_function(&FiniteFunction::constant(3, 0));
        let q = rees_quotient(&c0, &[0]).unwrap();
        assert_eq!(q, c0);
    }

    #[test]
    fn decomposition_examples() {
        let d = decomposition_report(&RMap::flip(2));
        assert_eq!(d.finest_valid_partition, SetPartition::singletons(2));
        assert!(!d.biconnected);
        assert_eq!(d.ess_indecomposable, Some(false));
        let ess = RMap::from_fn(2, |x, y| ((y + 1) % 2, (x + 1) % 2)).unwrap();
        let d = decomposition_report(&ess);
        assert!(d.biconnected);
        assert_eq!(d.ess_indecomposable, Some(true));
        assert!(decomposition_report(&RMap::identity(1)).biconnected);
    }
}
