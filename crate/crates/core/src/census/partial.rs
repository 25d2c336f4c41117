//! Law evaluation on partially filled tables, for pruning the cell search.
//!
//! This is an independent encoding of the equational laws: terms over `·`
//! and `∗`, and words in `R12`, `R13`, `R23`, `R21`. An instance whose
//! evaluation touches an empty cell is undecided and never prunes.

use crate::laws::{BiMagmaLaw, MagmaLaw, RMapLaw};

pub(crate) const EMPTY: u16 = u16::MAX;

/// A table under construction; `star` is empty for single-operation searches.
pub(crate) struct PartialTables {
    pub n: usize,
    pub dot: Vec<u16>,
    pub star: Vec<u16>,
}

impl PartialTables {
    pub fn new(n: usize, width: usize) -> Self {
        PartialTables {
            n,
            dot: vec![EMPTY; n * n],
            star: if width == 2 {
                vec![EMPTY; n * n]
            } else {
                Vec::new()
            },
        }
    }

    #[inline]
    fn dot(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.dot[x * self.n + y];
        (v != EMPTY).then_some(v as usize)
    }

    #[inline]
    fn star(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.star[x * self.n + y];
        (v != EMPTY).then_some(v as usize)
    }
}

#[derive(Clone, Copy, Debug)]
enum Node {
    Var(u8),
    Const(u8),
    Dot(u8, u8),
    Star(u8, u8),
}

/// `lhs = rhs` where both sides index into `nodes`, evaluated in order.
#[derive(Clone, Debug)]
struct TermEq {
    arity: u8,
    nodes: Vec<Node>,
    lhs: u8,
    rhs: u8,
}

struct TermBuilder {
    nodes: Vec<Node>,
}

impl TermBuilder {
    fn new(arity: u8) -> (Self, Vec<u8>) {
        let nodes: Vec<Node> = (0..arity).map(Node::Var).collect();
        (TermBuilder { nodes }, (0..arity).collect())
    }
    fn push(&mut self, n: Node) -> u8 {
        self.nodes.push(n);
        (self.nodes.len() - 1) as u8
    }
    fn d(&mut self, a: u8, b: u8) -> u8 {
        self.push(Node::Dot(a, b))
    }
    fn s(&mut self, a: u8, b: u8) -> u8 {
        self.push(Node::Star(a, b))
    }
    fn c(&mut self, v: u8) -> u8 {
        self.push(Node::Const(v))
    }
    fn eq(self, arity: u8, lhs: u8, rhs: u8) -> TermEq {
        TermEq {
            arity,
            nodes: self.nodes,
            lhs,
            rhs,
        }
    }
}

fn term(arity: u8, build: impl FnOnce(&mut TermBuilder, &[u8]) -> (u8, u8)) -> TermEq {
    let (mut b, v) = TermBuilder::new(arity);
    let (l, r) = build(&mut b, &v);
    b.eq(arity, l, r)
}

/// `R` applied to slots `(i, j)` of a tuple: `(t_i, t_j) ← R(t_i, t_j)`.
type Step = (u8, u8);

const R12: Step = (0, 1);
const R13: Step = (0, 2);
const R23: Step = (1, 2);
const R21: Step = (1, 0);

/// Steps listed in application order; `slots` maps tuple positions to variables.
#[derive(Clone, Debug)]
struct WordEq {
    arity: u8,
    slots: Vec<u8>,
    lhs: Vec<Step>,
    rhs: Vec<Step>,
}

#[derive(Clone, Copy, Debug)]
enum Translation {
    DotLeft,
    DotRight,
    StarLeft,
    StarRight,
}

/// A necessary condition checkable on partial tables.
#[derive(Clone, Debug)]
enum Condition {
    Term(TermEq),
    Word(WordEq),
    /// The given translations are injective on their filled cells.
    Injective(Translation),
}

pub(crate) struct Pruner {
    conditions: Vec<Condition>,
}

fn right_plonka_terms(star: bool) -> Vec<TermEq> {
    // Written for `·`; the star version is the mirror for left Płonka on `∗`.
    if !star {
        vec![
            term(3, |b, v| {
                let (xy, xz) = (b.d(v[0], v[1]), b.d(v[0], v[2]));
                (b.d(xy, v[2]), b.d(xz, v[1]))
            }),
            term(3, |b, v| {
                let yz = b.d(v[1], v[2]);
                (b.d(v[0], yz), b.d(v[0], v[1]))
            }),
        ]
    } else {
        vec![
            term(3, |b, v| {
                let (yz, xz) = (b.s(v[1], v[2]), b.s(v[0], v[2]));
                (b.s(v[0], yz), b.s(v[1], xz))
            }),
            term(3, |b, v| {
                let xy = b.s(v[0], v[1]);
                (b.s(xy, v[2]), b.s(v[1], v[2]))
            }),
        ]
    }
}

fn magma_conditions(law: MagmaLaw) -> Vec<Condition> {
    let t = |e: TermEq| Condition::Term(e);
    match law {
        MagmaLaw::RightPlonka => right_plonka_terms(false).into_iter().map(t).collect(),
        MagmaLaw::LeftPlonka => vec![
            t(term(3, |b, v| {
                let (yz, xz) = (b.d(v[1], v[2]), b.d(v[0], v[2]));
                (b.d(v[0], yz), b.d(v[1], xz))
            })),
            t(term(3, |b, v| {
                let xy = b.d(v[0], v[1]);
                (b.d(xy, v[2]), b.d(v[1], v[2]))
            })),
        ],
        MagmaLaw::TwoCyclic => {
            let mut out = magma_conditions(MagmaLaw::RightPlonka);
            out.extend(magma_conditions(MagmaLaw::Band));
            out.extend(magma_conditions(MagmaLaw::RightInvolutory));
            out
        }
        MagmaLaw::KCyclic(k) => vec![t(term(2, |b, v| {
            let mut cur = v[0];
            for _ in 0..k {
                cur = b.d(cur, v[1]);
            }
            (cur, v[0])
        }))],
        MagmaLaw::Band => vec![t(term(1, |b, v| (b.d(v[0], v[0]), v[0])))],
        MagmaLaw::RightInvolutory => vec![t(term(2, |b, v| {
            let xy = b.d(v[0], v[1]);
            (b.d(xy, v[1]), v[0])
        }))],
        MagmaLaw::LeftInvolutory => vec![t(term(2, |b, v| {
            let xy = b.d(v[0], v[1]);
            (b.d(v[0], xy), v[1])
        }))],
        MagmaLaw::Associative => vec![t(term(3, |b, v| {
            let (xy, yz) = (b.d(v[0], v[1]), b.d(v[1], v[2]));
            (b.d(xy, v[2]), b.d(v[0], yz))
        }))],
        MagmaLaw::Commutative => vec![t(term(2, |b, v| (b.d(v[0], v[1]), b.d(v[1], v[0]))))],
        MagmaLaw::LeftCancellative | MagmaLaw::LeftQuasigroup => {
            vec![Condition::Injective(Translation::DotLeft)]
        }
        MagmaLaw::RightCancellative | MagmaLaw::RightQuasigroup => {
            vec![Condition::Injective(Translation::DotRight)]
        }
        MagmaLaw::Total => Vec::new(),
    }
}

fn bimagma_conditions(law: BiMagmaLaw) -> Vec<Condition> {
    let t = |e: TermEq| Condition::Term(e);
    let plonka = || {
        let mut out: Vec<Condition> = right_plonka_terms(false)
            .into_iter()
            .chain(right_plonka_terms(true))
            .map(t)
            .collect();
        out.push(t(term(3, |b, v| {
            let (yz, xy) = (b.d(v[1], v[2]), b.s(v[0], v[1]));
            (b.s(v[0], yz), b.d(xy, v[2]))
        })));
        out.push(t(term(3, |b, v| {
            let xz = b.d(v[0], v[2]);
            (b.s(xz, v[1]), b.s(v[0], v[1]))
        })));
        out.push(t(term(3, |b, v| {
            let yz = b.s(v[1], v[2]);
            (b.d(v[0], yz), b.d(v[0], v[2]))
        })));
        out
    };
    match law {
        BiMagmaLaw::PlonkaBimagma => plonka(),
        BiMagmaLaw::UnitaryPlonkaBimagma => {
            let mut out = plonka();
            out.push(t(term(2, |b, v| {
                let xy = b.s(v[0], v[1]);
                (b.d(xy, v[0]), v[1])
            })));
            out
        }
        BiMagmaLaw::YangBaxterBimagma => vec![
            t(term(3, |b, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                let xy = b.d(x, y);
                let l = b.d(xy, z);
                let ysz = b.s(y, z);
                let x_ysz = b.d(x, ysz);
                let yz = b.d(y, z);
                (l, b.d(x_ysz, yz))
            })),
            t(term(3, |b, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                let ysz = b.s(y, z);
                let x_ysz = b.d(x, ysz);
                let yz = b.d(y, z);
                let l = b.s(x_ysz, yz);
                let xsy = b.s(x, y);
                let xy = b.d(x, y);
                let xy_sz = b.s(xy, z);
                (l, b.d(xsy, xy_sz))
            })),
            t(term(3, |b, v| {
                let (x, y, z) = (v[0], v[1], v[2]);
                let ysz = b.s(y, z);
                let l = b.s(x, ysz);
                let xsy = b.s(x, y);
                let xy = b.d(x, y);
                let xy_sz = b.s(xy, z);
                (l, b.s(xsy, xy_sz))
            })),
        ],
        // Both operations must be groups; only the cancellation part is local.
        BiMagmaLaw::SkewLeftBrace => [
            Translation::DotLeft,
            Translation::DotRight,
            Translation::StarLeft,
            Translation::StarRight,
        ]
        .into_iter()
        .map(Condition::Injective)
        .collect(),
        BiMagmaLaw::LyubashenkoForm => vec![
            t(term(2, |b, v| {
                let zero = b.c(0);
                (b.d(v[0], v[1]), b.d(v[0], zero))
            })),
            t(term(2, |b, v| {
                let zero = b.c(0);
                (b.s(v[0], v[1]), b.s(zero, v[1]))
            })),
            t(term(1, |b, v| {
                let zero = b.c(0);
                let g = b.s(zero, v[0]);
                let fg = b.d(g, zero);
                let f = b.d(v[0], zero);
                (fg, b.s(zero, f))
            })),
        ],
    }
}

fn word(arity: u8, slots: &[u8], lhs: &[Step], rhs: &[Step]) -> Condition {
    Condition::Word(WordEq {
        arity,
        slots: slots.to_vec(),
        lhs: lhs.to_vec(),
        rhs: rhs.to_vec(),
    })
}

fn rmap_conditions(law: RMapLaw) -> Vec<Condition> {
    let t3 = [0, 1, 2];
    match law {
        RMapLaw::YangBaxter => vec![word(3, &t3, &[R23, R13, R12], &[R12, R13, R23])],
        RMapLaw::Braid => vec![word(3, &t3, &[R12, R23, R12], &[R23, R12, R23])],
        RMapLaw::Long => vec![word(3, &t3, &[R23, R12], &[R12, R23])],
        RMapLaw::Commutative => vec![word(3, &t3, &[R13, R12], &[R12, R13])],
        RMapLaw::Cocommutative => vec![word(3, &t3, &[R23, R13], &[R13, R23])],
        RMapLaw::Bls => [RMapLaw::Commutative, RMapLaw::Cocommutative, RMapLaw::Long]
            .into_iter()
            .flat_map(rmap_conditions)
            .collect(),
        RMapLaw::Unitary => vec![word(2, &[0, 1], &[R12, R21], &[])],
        RMapLaw::Involutive => vec![word(2, &[0, 1], &[R12, R12], &[])],
        RMapLaw::Diagonal => vec![word(1, &[0, 0], &[R12], &[])],
        RMapLaw::LeftRightNondegenerate => {
            vec![
                Condition::Injective(Translation::DotLeft),
                Condition::Injective(Translation::StarRight),
            ]
        }
        RMapLaw::RightLeftNondegenerate => {
            vec![
                Condition::Injective(Translation::DotRight),
                Condition::Injective(Translation::StarLeft),
            ]
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum LawRef {
    Magma(MagmaLaw),
    BiMagma(BiMagmaLaw),
    RMap(RMapLaw),
}

impl Pruner {
    pub fn new(laws: &[LawRef]) -> Self {
        let conditions = laws
            .iter()
            .flat_map(|l| match *l {
                LawRef::Magma(m) => magma_conditions(m),
                LawRef::BiMagma(b) => bimagma_conditions(b),
                LawRef::RMap(r) => rmap_conditions(r),
            })
            .collect();
        Pruner { conditions }
    }

    /// False if some fully evaluable instance already fails.
    pub fn consistent(&self, p: &PartialTables) -> bool {
        self.conditions.iter().all(|c| match c {
            Condition::Term(e) => term_consistent(e, p),
            Condition::Word(w) => word_consistent(w, p),
            Condition::Injective(t) => injective_consistent(*t, p),
        })
    }
}

fn for_tuples(n: usize, arity: u8, mut f: impl FnMut(&[usize; 3]) -> bool) -> bool {
    let ny = if arity >= 2 { n } else { 1 };
    let nz = if arity >= 3 { n } else { 1 };
    for x in 0..n {
        for y in 0..ny {
            for z in 0..nz {
                if !f(&[x, y, z]) {
                    return false;
                }
            }
        }
    }
    true
}

fn term_consistent(e: &TermEq, p: &PartialTables) -> bool {
    let mut vals = [0usize; 32];
    for_tuples(p.n, e.arity, |v| {
        for (i, node) in e.nodes.iter().enumerate() {
            let val = match *node {
                Node::Var(k) => Some(v[k as usize]),
                Node::Const(c) => Some(c as usize),
                Node::Dot(a, b) => p.dot(vals[a as usize], vals[b as usize]),
                Node::Star(a, b) => p.star(vals[a as usize], vals[b as usize]),
            };
            match val {
                Some(x) => vals[i] = x,
                None => return true,
            }
        }
        vals[e.lhs as usize] == vals[e.rhs as usize]
    })
}

fn run_word(steps: &[Step], mut t: [usize; 3], p: &PartialTables) -> Option<[usize; 3]> {
    for &(i, j) in steps {
        let (a, b) = (t[i as usize], t[j as usize]);
        t[i as usize] = p.dot(a, b)?;
        t[j as usize] = p.star(a, b)?;
    }
    Some(t)
}

fn word_consistent(w: &WordEq, p: &PartialTables) -> bool {
    for_tuples(p.n, w.arity, |v| {
        let mut t = [0usize; 3];
        for (pos, &var) in w.slots.iter().enumerate() {
            t[pos] = v[var as usize];
        }
        match (run_word(&w.lhs, t, p), run_word(&w.rhs, t, p)) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        }
    })
}

fn injective_consistent(tr: Translation, p: &PartialTables) -> bool {
    let n = p.n;
    let (cells, by_row) = match tr {
        Translation::DotLeft => (&p.dot, true),
        Translation::DotRight => (&p.dot, false),
        Translation::StarLeft => (&p.star, true),
        Translation::StarRight => (&p.star, false),
    };
    let mut seen = [false; 64];
    for a in 0..n {
        seen[..n].iter_mut().for_each(|s| *s = false);
        for b in 0..n {
            let v = if by_row {
                cells[a * n + b]
            } else {
                cells[b * n + a]
            };
            if v == EMPTY {
                continue;
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return false;
            }
        }
    }
    true
}
