//! Decidable law checkers. Each returns a [`Verdict`] whose witness is the
//! lexicographically least failing input, ties broken by the order in which a
//! law's equations are listed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::finite::{BiMagma, CayleyTable, RMap};
use crate::verdict::{Verdict, Witness};

/// Laws of an R-map `R: X×X → X×X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RMapLaw {
    YangBaxter,
    Braid,
    Long,
    Commutative,
    Cocommutative,
    Bls,
    Unitary,
    Involutive,
    Diagonal,
    LeftRightNondegenerate,
    RightLeftNondegenerate,
}

/// Laws of a single binary operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MagmaLaw {
    RightPlonka,
    LeftPlonka,
    TwoCyclic,
    KCyclic(usize),
    Band,
    RightInvolutory,
    LeftInvolutory,
    Associative,
    Commutative,
    LeftCancellative,
    RightCancellative,
    LeftQuasigroup,
    RightQuasigroup,
    Total,
}

/// Laws linking the two operations of a bi-magma.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BiMagmaLaw {
    PlonkaBimagma,
    UnitaryPlonkaBimagma,
    YangBaxterBimagma,
    SkewLeftBrace,
    LyubashenkoForm,
}

impl RMapLaw {
    pub const ALL: [RMapLaw; 11] = [
        RMapLaw::YangBaxter,
        RMapLaw::Braid,
        RMapLaw::Long,
        RMapLaw::Commutative,
        RMapLaw::Cocommutative,
        RMapLaw::Bls,
        RMapLaw::Unitary,
        RMapLaw::Involutive,
        RMapLaw::Diagonal,
        RMapLaw::LeftRightNondegenerate,
        RMapLaw::RightLeftNondegenerate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RMapLaw::YangBaxter => "yang_baxter",
            RMapLaw::Braid => "braid",
            RMapLaw::Long => "long",
            RMapLaw::Commutative => "commutative",
            RMapLaw::Cocommutative => "cocommutative",
            RMapLaw::Bls => "bls",
            RMapLaw::Unitary => "unitary",
            RMapLaw::Involutive => "involutive",
            RMapLaw::Diagonal => "diagonal",
            RMapLaw::LeftRightNondegenerate => "left_right_nondegenerate",
            RMapLaw::RightLeftNondegenerate => "right_left_nondegenerate",
        }
    }
}

impl MagmaLaw {
    /// Every law, with `k_cyclic` instantiated at `k`.
    pub fn all(k: usize) -> [MagmaLaw; 14] {
        [
            MagmaLaw::RightPlonka,
            MagmaLaw::LeftPlonka,
            MagmaLaw::TwoCyclic,
            MagmaLaw::KCyclic(k),
            MagmaLaw::Band,
            MagmaLaw::RightInvolutory,
            MagmaLaw::LeftInvolutory,
            MagmaLaw::Associative,
            MagmaLaw::Commutative,
            MagmaLaw::LeftCancellative,
            MagmaLaw::RightCancellative,
            MagmaLaw::LeftQuasigroup,
            MagmaLaw::RightQuasigroup,
            MagmaLaw::Total,
        ]
    }

    pub fn name(self) -> String {
        match self {
            MagmaLaw::RightPlonka => "right_plonka".into(),
            MagmaLaw::LeftPlonka => "left_plonka".into(),
            MagmaLaw::TwoCyclic => "two_cyclic".into(),
            MagmaLaw::KCyclic(k) => format!("k_cyclic({k})"),
            MagmaLaw::Band => "band".into(),
            MagmaLaw::RightInvolutory => "right_involutory".into(),
            MagmaLaw::LeftInvolutory => "left_involutory".into(),
            MagmaLaw::Associative => "associative".into(),
            MagmaLaw::Commutative => "commutative".into(),
            MagmaLaw::LeftCancellative => "left_cancellative".into(),
            MagmaLaw::RightCancellative => "right_cancellative".into(),
            MagmaLaw::LeftQuasigroup => "left_quasigroup".into(),
            MagmaLaw::RightQuasigroup => "right_quasigroup".into(),
            MagmaLaw::Total => "total".into(),
        }
    }
}

impl BiMagmaLaw {
    pub const ALL: [BiMagmaLaw; 5] = [
        BiMagmaLaw::PlonkaBimagma,
        BiMagmaLaw::UnitaryPlonkaBimagma,
        BiMagmaLaw::YangBaxterBimagma,
        BiMagmaLaw::SkewLeftBrace,
        BiMagmaLaw::LyubashenkoForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BiMagmaLaw::PlonkaBimagma => "plonka_bimagma",
            BiMagmaLaw::UnitaryPlonkaBimagma => "unitary_plonka_bimagma",
            BiMagmaLaw::YangBaxterBimagma => "yang_baxter_bimagma",
            BiMagmaLaw::SkewLeftBrace => "skew_left_brace",
            BiMagmaLaw::LyubashenkoForm => "lyubashenko_form",
        }
    }
}

impl fmt::Display for RMapLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for MagmaLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for BiMagmaLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn unknown(s: &str) -> Error {
    Error::invalid(format!("unknown law '{s}'"))
}

impl FromStr for RMapLaw {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        RMapLaw::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| unknown(s))
    }
}

impl FromStr for BiMagmaLaw {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        BiMagmaLaw::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| unknown(s))
    }
}

impl FromStr for MagmaLaw {
    type Err = Error;

    /// Accepts the snake_case names; `k_cyclic` is written `k_cyclic(k)`.
    fn from_str(s: &str) -> Result<Self, Error> {
        if let Some(rest) = s
            .strip_prefix("k_cyclic(")
            .and_then(|r| r.strip_suffix(')'))
        {
            let k: usize = rest.parse().map_err(|_| unknown(s))?;
            if k == 0 {
                return Err(Error::invalid("k_cyclic needs k >= 1"));
            }
            return Ok(MagmaLaw::KCyclic(k));
        }
        MagmaLaw::all(1)
            .into_iter()
            .filter(|l| !matches!(l, MagmaLaw::KCyclic(_)))
            .find(|l| l.name() == s)
            .ok_or_else(|| unknown(s))
    }
}

/// Values compared by an equation: scalars, pairs or triples.
trait Side: PartialEq + Copy {
    fn to_vec(self) -> Vec<usize>;
}

impl Side for usize {
    fn to_vec(self) -> Vec<usize> {
        vec![self]
    }
}

impl Side for (usize, usize) {
    fn to_vec(self) -> Vec<usize> {
        vec![self.0, self.1]
    }
}

impl Side for (usize, usize, usize) {
    fn to_vec(self) -> Vec<usize> {
        vec![self.0, self.1, self.2]
    }
}

/// An equation in up to three variables. `eval` receives the structure, the
/// variables and a numeric parameter (used by `k_cyclic`).
struct Equation<S: ?Sized, T> {
    name: &'static str,
    arity: usize,
    eval: fn(&S, usize, usize, usize, usize) -> (T, T),
}

/// Scans `(x, y, z)` lexicographically; an equation of arity `a` is only
/// evaluated where the unused trailing variables are 0.
fn check_equations<S: ?Sized, T: Side>(
    s: &S,
    n: usize,
    param: usize,
    eqs: &[Equation<S, T>],
) -> Verdict {
    let max_arity = eqs.iter().map(|e| e.arity).max().unwrap_or(1);
    let ny = if max_arity >= 2 { n } else { 1 };
    let nz = if max_arity >= 3 { n } else { 1 };
    for x in 0..n {
        for y in 0..ny {
            for z in 0..nz {
                for eq in eqs {
                    if (eq.arity < 3 && z != 0) || (eq.arity < 2 && y != 0) {
                        continue;
                    }
                    let (l, r) = (eq.eval)(s, x, y, z, param);
                    if l != r {
                        return Verdict::fail(Witness::Equation {
                            equation: eq.name.to_string(),
                            inputs: [x, y, z][..eq.arity].to_vec(),
                            lhs: l.to_vec(),
                            rhs: r.to_vec(),
                        });
                    }
                }
            }
        }
    }
    Verdict::pass()
}

type Triple = (usize, usize, usize);

#[inline]
fn r12(r: &RMap, (a, b, c): Triple) -> Triple {
    let (u, v) = r.apply(a, b);
    (u, v, c)
}

#[inline]
fn r23(r: &RMap, (a, b, c): Triple) -> Triple {
    let (u, v) = r.apply(b, c);
    (a, u, v)
}

#[inline]
fn r13(r: &RMap, (a, b, c): Triple) -> Triple {
    let (u, v) = r.apply(a, c);
    (u, b, v)
}

const QYBE: Equation<RMap, Triple> = Equation {
    name: "R12 R13 R23 = R23 R13 R12",
    arity: 3,
    eval: |r, x, y, z, _| {
        let t = (x, y, z);
        (r12(r, r13(r, r23(r, t))), r23(r, r13(r, r12(r, t))))
    },
};

const BRAID: Equation<RMap, Triple> = Equation {
    name: "R12 R23 R12 = R23 R12 R23",
    arity: 3,
    eval: |r, x, y, z, _| {
        let t = (x, y, z);
        (r12(r, r23(r, r12(r, t))), r23(r, r12(r, r23(r, t))))
    },
};

const LONG: Equation<RMap, Triple> = Equation {
    name: "R12 R23 = R23 R12",
    arity: 3,
    eval: |r, x, y, z, _| {
        let t = (x, y, z);
        (r12(r, r23(r, t)), r23(r, r12(r, t)))
    },
};

const COMMUTATIVE: Equation<RMap, Triple> = Equation {
    name: "R12 R13 = R13 R12",
    arity: 3,
    eval: |r, x, y, z, _| {
        let t = (x, y, z);
        (r12(r, r13(r, t)), r13(r, r12(r, t)))
    },
};

const COCOMMUTATIVE: Equation<RMap, Triple> = Equation {
    name: "R13 R23 = R23 R13",
    arity: 3,
    eval: |r, x, y, z, _| {
        let t = (x, y, z);
        (r13(r, r23(r, t)), r23(r, r13(r, t)))
    },
};

const INVOLUTIVE: Equation<RMap, (usize, usize)> = Equation {
    name: "R R = id",
    arity: 2,
    eval: |r, x, y, _, _| {
        let (u, v) = r.apply(x, y);
        (r.apply(u, v), (x, y))
    },
};

const DIAGONAL: Equation<RMap, (usize, usize)> = Equation {
    name: "R(x, x) = (x, x)",
    arity: 1,
    eval: |r, x, _, _, _| (r.apply(x, x), (x, x)),
};

const R21_INVERTS: Equation<RMap, (usize, usize)> = Equation {
    name: "R21 R = id",
    arity: 2,
    eval: |r, x, y, _, _| {
        let (u, v) = r.apply(x, y);
        let (p, q) = r.apply(v, u);
        ((q, p), (x, y))
    },
};

/// First collision of `R`, scanning inputs in row-major order.
fn rmap_collision(r: &RMap) -> Option<Witness> {
    let n = r.n();
    let mut first: Vec<Option<(usize, usize)>> = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            let (u, v) = r.apply(x, y);
            match first[u * n + v] {
                Some((a, b)) => {
                    return Some(Witness::Collision {
                        map: "R".into(),
                        first: vec![a, b],
                        second: vec![x, y],
                        image: vec![u, v],
                    })
                }
                None => first[u * n + v] = Some((x, y)),
            }
        }
    }
    None
}

/// Which translations to test for injectivity.
#[derive(Clone, Copy)]
enum Side2 {
    Left,
    Right,
}

/// First non-injective translation of `t` on the given side. Witness inputs
/// are `(fixed, a)` and `(fixed, b)` with `a < b`.
fn translation_collision(t: &CayleyTable, side: Side2, op: &str) -> Option<Witness> {
    let n = t.n();
    for fixed in 0..n {
        let mut seen: Vec<Option<usize>> = vec![None; n];
        for a in 0..n {
            let v = match side {
                Side2::Left => t.get(fixed, a),
                Side2::Right => t.get(a, fixed),
            };
            if let Some(prev) = seen[v] {
                let (map, first, second) = match side {
                    Side2::Left => (
                        format!("left translation of {op} by {fixed}"),
                        vec![fixed, prev],
                        vec![fixed, a],
                    ),
                    Side2::Right => (
                        format!("right translation of {op} by {fixed}"),
                        vec![prev, fixed],
                        vec![a, fixed],
                    ),
                };
                return Some(Witness::Collision {
                    map,
                    first,
                    second,
                    image: vec![v],
                });
            }
            seen[v] = Some(a);
        }
    }
    None
}

pub fn check_rmap_law(r: &RMap, law: RMapLaw) -> Verdict {
    let n = r.n();
    match law {
        RMapLaw::YangBaxter => check_equations(r, n, 0, &[QYBE]),
        RMapLaw::Braid => check_equations(r, n, 0, &[BRAID]),
        RMapLaw::Long => check_equations(r, n, 0, &[LONG]),
        RMapLaw::Commutative => check_equations(r, n, 0, &[COMMUTATIVE]),
        RMapLaw::Cocommutative => check_equations(r, n, 0, &[COCOMMUTATIVE]),
        RMapLaw::Bls => check_equations(r, n, 0, &[COMMUTATIVE, COCOMMUTATIVE, LONG]),
        RMapLaw::Involutive => check_equations(r, n, 0, &[INVOLUTIVE]),
        RMapLaw::Diagonal => check_equations(r, n, 0, &[DIAGONAL]),
        RMapLaw::Unitary => match rmap_collision(r) {
            Some(w) => Verdict::fail(w),
            None => check_equations(r, n, 0, &[R21_INVERTS]),
        },
        RMapLaw::LeftRightNondegenerate => {
            let b = r.to_bimagma();
            translation_collision(b.dot(), Side2::Left, "dot")
                .or_else(|| translation_collision(b.star(), Side2::Right, "star"))
                .into()
        }
        RMapLaw::RightLeftNondegenerate => {
            let b = r.to_bimagma();
            translation_collision(b.dot(), Side2::Right, "dot")
                .or_else(|| translation_collision(b.star(), Side2::Left, "star"))
                .into()
        }
    }
}

macro_rules! magma_eq {
    ($name:expr, $arity:expr, |$t:ident, $x:ident, $y:ident, $z:ident, $k:ident| $body:expr) => {
        Equation::<CayleyTable, usize> {
            name: $name,
            arity: $arity,
            eval: |$t, $x, $y, $z, $k| {
                let _ = ($y, $z, $k);
                $body
            },
        }
    };
}

const RP_COMMUTE: Equation<CayleyTable, usize> = magma_eq!(
    "(x·y)·z = (x·z)·y",
    3,
    |t, x, y, z, _k| (t.get(t.get(x, y), z), t.get(t.get(x, z), y))
);
const RP_REDUCE: Equation<CayleyTable, usize> = magma_eq!(
    "x·(y·z) = x·y",
    3,
    |t, x, y, z, _k| (t.get(x, t.get(y, z)), t.get(x, y))
);
const LP_COMMUTE: Equation<CayleyTable, usize> = magma_eq!(
    "x·(y·z) = y·(x·z)",
    3,
    |t, x, y, z, _k| (t.get(x, t.get(y, z)), t.get(y, t.get(x, z)))
);
const LP_REDUCE: Equation<CayleyTable, usize> = magma_eq!(
    "(x·y)·z = y·z",
    3,
    |t, x, y, z, _k| (t.get(t.get(x, y), z), t.get(y, z))
);
const BAND: Equation<CayleyTable, usize> =
    magma_eq!("x·x = x", 1, |t, x, y, z, _k| (t.get(x, x), x));
const RIGHT_INVOLUTORY: Equation<CayleyTable, usize> = magma_eq!(
    "(x·y)·y = x",
    2,
    |t, x, y, z, _k| (t.get(t.get(x, y), y), x)
);
const LEFT_INVOLUTORY: Equation<CayleyTable, usize> = magma_eq!(
    "x·(x·y) = y",
    2,
    |t, x, y, z, _k| (t.get(x, t.get(x, y)), y)
);
const ASSOCIATIVE: Equation<CayleyTable, usize> = magma_eq!(
    "(x·y)·z = x·(y·z)",
    3,
    |t, x, y, z, _k| (t.get(t.get(x, y), z), t.get(x, t.get(y, z)))
);
const COMMUTATIVE_M: Equation<CayleyTable, usize> = magma_eq!(
    "x·y = y·x",
    2,
    |t, x, y, z, _k| (t.get(x, y), t.get(y, x))
);
const K_CYCLIC: Equation<CayleyTable, usize> = magma_eq!("x·y^k = x", 2, |t, x, y, z, k| {
    let mut v = x;
    for _ in 0..k {
        v = t.get(v, y);
    }
    (v, x)
});

pub fn check_magma_law(t: &CayleyTable, law: MagmaLaw) -> Verdict {
    let n = t.n();
    match law {
        MagmaLaw::RightPlonka => check_equations(t, n, 0, &[RP_COMMUTE, RP_REDUCE]),
        MagmaLaw::LeftPlonka => check_equations(t, n, 0, &[LP_COMMUTE, LP_REDUCE]),
        MagmaLaw::TwoCyclic => {
            check_equations(t, n, 0, &[RP_COMMUTE, RP_REDUCE, BAND, RIGHT_INVOLUTORY])
        }
        MagmaLaw::KCyclic(k) => check_equations(t, n, k, &[K_CYCLIC]),
        MagmaLaw::Band => check_equations(t, n, 0, &[BAND]),
        MagmaLaw::RightInvolutory => check_equations(t, n, 0, &[RIGHT_INVOLUTORY]),
        MagmaLaw::LeftInvolutory => check_equations(t, n, 0, &[LEFT_INVOLUTORY]),
        MagmaLaw::Associative => check_equations(t, n, 0, &[ASSOCIATIVE]),
        MagmaLaw::Commutative => check_equations(t, n, 0, &[COMMUTATIVE_M]),
        // On a finite carrier injective translations are bijective, so the
        // cancellative and quasigroup laws coincide.
        MagmaLaw::LeftCancellative | MagmaLaw::LeftQuasigroup => {
            translation_collision(t, Side2::Left, "the operation").into()
        }
        MagmaLaw::RightCancellative | MagmaLaw::RightQuasigroup => {
            translation_collision(t, Side2::Right, "the operation").into()
        }
        MagmaLaw::Total => {
            let mut hit = vec![false; n];
            for &v in t.cells() {
                hit[v] = true;
            }
            match hit.iter().position(|h| !h) {
                Some(v) => Verdict::fail(Witness::Uncovered {
                    map: "multiplication".into(),
                    value: vec![v],
                }),
                None => Verdict::pass(),
            }
        }
    }
}

macro_rules! bi_eq {
    ($name:expr, |$b:ident, $x:ident, $y:ident, $z:ident| $body:expr) => {
        Equation::<BiMagma, usize> {
            name: $name,
            arity: 3,
            eval: |$b, $x, $y, $z, _| {
                let _ = ($y, $z);
                $body
            },
        }
    };
}

const PM1_COMMUTE: Equation<BiMagma, usize> = bi_eq!("(x·y)·z = (x·z)·y", |b, x, y, z| (
    b.mul(b.mul(x, y), z),
    b.mul(b.mul(x, z), y)
));
const PM1_REDUCE: Equation<BiMagma, usize> = bi_eq!("x·(y·z) = x·y", |b, x, y, z| (
    b.mul(x, b.mul(y, z)),
    b.mul(x, y)
));
const PM2_COMMUTE: Equation<BiMagma, usize> = bi_eq!("x∗(y∗z) = y∗(x∗z)", |b, x, y, z| (
    b.act(x, b.act(y, z)),
    b.act(y, b.act(x, z))
));
const PM2_REDUCE: Equation<BiMagma, usize> = bi_eq!("(x∗y)∗z = y∗z", |b, x, y, z| (
    b.act(b.act(x, y), z),
    b.act(y, z)
));
const KM3A: Equation<BiMagma, usize> = bi_eq!("x∗(y·z) = (x∗y)·z", |b, x, y, z| (
    b.act(x, b.mul(y, z)),
    b.mul(b.act(x, y), z)
));
const KM3B: Equation<BiMagma, usize> = bi_eq!("(x·z)∗y = x∗y", |b, x, y, z| (
    b.act(b.mul(x, z), y),
    b.act(x, y)
));
const KM3C: Equation<BiMagma, usize> = bi_eq!("x·(y∗z) = x·z", |b, x, y, z| (
    b.mul(x, b.act(y, z)),
    b.mul(x, z)
));
const UNITARY_BI: Equation<BiMagma, usize> = Equation {
    name: "(x∗y)·x = y",
    arity: 2,
    eval: |b, x, y, _, _| (b.mul(b.act(x, y), x), y),
};
const YB1: Equation<BiMagma, usize> = bi_eq!("(x·y)·z = (x·(y∗z))·(y·z)", |b, x, y, z| {
    (
        b.mul(b.mul(x, y), z),
        b.mul(b.mul(x, b.act(y, z)), b.mul(y, z)),
    )
});
const YB2: Equation<BiMagma, usize> = bi_eq!(
    "(x·(y∗z))∗(y·z) = (x∗y)·((x·y)∗z)",
    |b, x, y, z| {
        (
            b.act(b.mul(x, b.act(y, z)), b.mul(y, z)),
            b.mul(b.act(x, y), b.act(b.mul(x, y), z)),
        )
    }
);
const YB3: Equation<BiMagma, usize> =
    bi_eq!("x∗(y∗z) = (x∗y)∗((x·y)∗z)", |b, x, y, z| {
        (
            b.act(x, b.act(y, z)),
            b.act(b.act(x, y), b.act(b.mul(x, y), z)),
        )
    });

const PLONKA_BI: [Equation<BiMagma, usize>; 7] = [
    PM1_COMMUTE,
    PM1_REDUCE,
    PM2_COMMUTE,
    PM2_REDUCE,
    KM3A,
    KM3B,
    KM3C,
];

/// Identity and inverses of a group table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    pub identity: usize,
    pub inverse: Vec<usize>,
}

/// Checks that `t` is a group table (associative, two-sided identity, two-sided inverses).
pub fn group_data(t: &CayleyTable, op: &str) -> Result<GroupData, Witness> {
    let n = t.n();
    if let Some(w) = check_magma_law(t, MagmaLaw::Associative).into_witness() {
        return Err(w);
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| t.get(e, x) == x && t.get(x, e) == x))
        .ok_or_else(|| Witness::Missing {
            what: format!("identity for {op}"),
        })?;
    let inverse = (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| t.get(x, y) == identity && t.get(y, x) == identity)
                .ok_or_else(|| Witness::Missing {
                    what: format!("{op} inverse of {x}"),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupData { identity, inverse })
}

fn check_brace(b: &BiMagma) -> Verdict {
    let dot = match group_data(b.dot(), "dot") {
        Ok(g) => g,
        Err(w) => return Verdict::fail(w),
    };
    if let Err(w) = group_data(b.star(), "star") {
        return Verdict::fail(w);
    }
    let n = b.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = b.act(x, b.mul(y, z));
                let rhs = b.mul(b.mul(b.act(x, y), dot.inverse[x]), b.act(x, z));
                if lhs != rhs {
                    return Verdict::fail(Witness::Equation {
                        equation: "x∗(y·z) = (x∗y)·x⁻¹·(x∗z)".into(),
                        inputs: vec![x, y, z],
                        lhs: vec![lhs],
                        rhs: vec![rhs],
                    });
                }
            }
        }
    }
    Verdict::pass()
}

fn check_lyubashenko_form(b: &BiMagma) -> Verdict {
    let n = b.n();
    for x in 0..n {
        for y in 0..n {
            if b.mul(x, y) != b.mul(x, 0) {
                return Verdict::fail(Witness::Equation {
                    equation: "x·y = x·0".into(),
                    inputs: vec![x, y],
                    lhs: vec![b.mul(x, y)],
                    rhs: vec![b.mul(x, 0)],
                });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if b.act(x, y) != b.act(0, y) {
                return Verdict::fail(Witness::Equation {
                    equation: "x∗y = 0∗y".into(),
                    inputs: vec![x, y],
                    lhs: vec![b.act(x, y)],
                    rhs: vec![b.act(0, y)],
                });
            }
        }
    }
    let f = |x| b.mul(x, 0);
    let g = |y| b.act(0, y);
    match (0..n).find(|&x| f(g(x)) != g(f(x))) {
        Some(x) => Verdict::fail(Witness::Equation {
            equation: "f(g(x)) = g(f(x))".into(),
            inputs: vec![x],
            lhs: vec![f(g(x))],
            rhs: vec![g(f(x))],
        }),
        None => Verdict::pass(),
    }
}

pub fn check_bimagma_law(b: &BiMagma, law: BiMagmaLaw) -> Verdict {
    let n = b.n();
    match law {
        BiMagmaLaw::PlonkaBimagma => check_equations(b, n, 0, &PLONKA_BI),
        BiMagmaLaw::UnitaryPlonkaBimagma => check_equations(b, n, 0, &PLONKA_BI)
            .and_then(|| check_equations(b, n, 0, &[UNITARY_BI])),
        BiMagmaLaw::YangBaxterBimagma => check_equations(b, n, 0, &[YB1, YB2, YB3]),
        BiMagmaLaw::SkewLeftBrace => check_brace(b),
        BiMagmaLaw::LyubashenkoForm => check_lyubashenko_form(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteFunction;

    fn ess(p: usize, h1: usize, h2: usize) -> RMap {
        RMap::from_fn(p, |x, y| ((y + h2) % p, (x + h1) % p)).unwrap()
    }

    fn lyub(f: &FiniteFunction, g: &FiniteFunction) -> BiMagma {
        let n = f.n();
        BiMagma::new(
            CayleyTable::from_fn(n, |x, _| f.apply(x)).unwrap(),
            CayleyTable::from_fn(n, |_, y| g.apply(y)).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn rmap_examples() {
        assert!(check_rmap_law(&RMap::flip(3), RMapLaw::YangBaxter).holds());
        let v = check_rmap_law(&RMap::flip(2), RMapLaw::Long);
        assert!(!v.holds());
        // Lexicographically first failure of R12R23 = R23R12 for the flip.
        assert_eq!(
            v.witness(),
            Some(&Witness::Equation {
                equation: "R12 R23 = R23 R12".into(),
                inputs: vec![0, 0, 1],
                lhs: vec![1, 0, 0],
                rhs: vec![0, 1, 0],
            })
        );
        assert!(check_rmap_law(&RMap::identity(4), RMapLaw::Bls).holds());
        // The ESS map solves the braid equation; its QYBE sides differ already at (0, 0, 0).
        assert!(check_rmap_law(&ess(3, 1, 0), RMapLaw::Braid).holds());
        let v = check_rmap_law(&ess(3, 1, 0), RMapLaw::YangBaxter);
        assert_eq!(
            v.witness().map(|w| w.machine_line()),
            Some("WITNESS 0 0 0 0,2,1 0,1,2".to_string())
        );
    }

    #[test]
    fn magma_examples() {
        assert!(check_magma_law(&CayleyTable::left_zero(3), MagmaLaw::RightPlonka).holds());
        let swap = FiniteFunction::new(vec![1, 0]).unwrap();
        assert!(check_magma_law(
            &CayleyTable::from_function(&swap),
            MagmaLaw::RightInvolutory
        )
        .holds());
        let v = check_magma_law(&CayleyTable::cyclic_group(2), MagmaLaw::RightPlonka);
        // (0·0)·1 = (0·1)·0 holds in an abelian group; the reduction law fails first at (0, 0, 1).
        assert_eq!(
            v.witness(),
            Some(&Witness::Equation {
                equation: "x·(y·z) = x·y".into(),
                inputs: vec![0, 0, 1],
                lhs: vec![1],
                rhs: vec![0],
            })
        );
    }

    #[test]
    fn bimagma_examples() {
        let trivial = BiMagma::new(CayleyTable::left_zero(3), CayleyTable::right_zero(3)).unwrap();
        assert!(check_bimagma_law(&trivial, BiMagmaLaw::UnitaryPlonkaBimagma).holds());
        let z3 = BiMagma::new(CayleyTable::cyclic_group(3), CayleyTable::cyclic_group(3)).unwrap();
        assert!(check_bimagma_law(&z3, BiMagmaLaw::SkewLeftBrace).holds());
        let swap = FiniteFunction::new(vec![1, 0]).unwrap();
        let b = lyub(&swap, &FiniteFunction::identity(2));
        assert!(check_bimagma_law(&b, BiMagmaLaw::PlonkaBimagma).holds());
        assert!(check_bimagma_law(&b, BiMagmaLaw::LyubashenkoForm).holds());
    }

    #[test]
    fn unitary_reports_non_bijectivity_separately() {
        let r = RMap::from_fn(2, |_, _| (0, 0)).unwrap();
        assert!(matches!(
            check_rmap_law(&r, RMapLaw::Unitary).witness(),
            Some(Witness::Collision { .. })
        ));
        assert!(check_rmap_law(&RMap::flip(3), RMapLaw::Unitary).holds());
        assert!(check_rmap_law(&RMap::identity(3), RMapLaw::Unitary).holds());
        let cyc = RMap::from_fn(3, |x, y| ((x + 1) % 3, y)).unwrap();
        assert!(matches!(
            check_rmap_law(&cyc, RMapLaw::Unitary).witness(),
            Some(Witness::Equation { .. })
        ));
    }

    #[test]
    fn law_names_round_trip() {
        for l in RMapLaw::ALL {
            assert_eq!(l.name().parse::<RMapLaw>().unwrap(), l);
        }
        for l in BiMagmaLaw::ALL {
            assert_eq!(l.name().parse::<BiMagmaLaw>().unwrap(), l);
        }
        for l in MagmaLaw::all(3) {
            assert_eq!(l.name().parse::<MagmaLaw>().unwrap(), l);
        }
        assert!("k_cyclic(0)".parse::<MagmaLaw>().is_err());
        assert!("nonsense".parse::<RMapLaw>().is_err());
    }

    #[test]
    fn group_data_detects_non_groups() {
        assert!(group_data(&CayleyTable::cyclic_group(4), "dot").is_ok());
        assert!(matches!(
            group_data(&CayleyTable::left_zero(2), "dot"),
            Err(Witness::Missing { .. })
        ));
    }
}
