//! Constructors for named solutions and structures.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{build_odometer, OdometerTriple};
use crate::finite::{BiMagma, CayleyTable, FiniteFunction, Guards, RMap};
use crate::laws::{check_bimagma_law, check_magma_law, group_data, BiMagmaLaw, MagmaLaw};
use crate::plonka::BiPlonkaPartition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "variant")]
pub enum SolutionSpec {
    Identity {
        n: usize,
    },
    Flip {
        n: usize,
    },
    Lyubashenko {
        f: FiniteFunction,
        g: FiniteFunction,
    },
    FromRightPlonkaOpposite {
        magma: CayleyTable,
    },
    Ess {
        p: usize,
        h1: usize,
        h2: usize,
    },
    BlsFromPartition {
        partition: BiPlonkaPartition,
    },
    OdometerSolution {
        triple: OdometerTriple,
    },
    SkewBraceSolution {
        brace: BiMagma,
    },
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

pub fn lyubashenko(f: &FiniteFunction, g: &FiniteFunction) -> Result<RMap> {
    if f.n() != g.n() {
        return Err(Error::invalid("f and g act on different carriers"));
    }
    RMap::from_fn(f.n(), |x, y| (f.apply(x), g.apply(y)))
}

pub fn build_solution(spec: &SolutionSpec) -> Result<RMap> {
    match spec {
        SolutionSpec::Identity { n } => Ok(RMap::identity(*n)),
        SolutionSpec::Flip { n } => Ok(RMap::flip(*n)),
        SolutionSpec::Lyubashenko { f, g } => lyubashenko(f, g),
        SolutionSpec::FromRightPlonkaOpposite { magma } => {
            check_magma_law(magma, MagmaLaw::RightPlonka).into_result("right_plonka")?;
            RMap::from_fn(magma.n(), |x, y| (magma.get(x, y), magma.get(y, x)))
        }
        &SolutionSpec::Ess { p, h1, h2 } => {
            if !is_prime(p) {
                return Err(Error::invalid(format!("{p} is not prime")));
            }
            if h1 >= p || h2 >= p {
                return Err(Error::invalid("h1 and h2 must lie in 0..p"));
            }
            if (h1, h2) == (0, 0) {
                return Err(Error::invalid("(h1, h2) must be non-zero"));
            }
            RMap::from_fn(p, |x, y| ((y + h2) % p, (x + h1) % p))
        }
        SolutionSpec::BlsFromPartition { partition } => {
            Ok(RMap::from_bimagma(&partition.rebuild()?))
        }
        SolutionSpec::OdometerSolution { triple } => {
            let (f, g) = build_odometer(*triple);
            lyubashenko(&f, &g)
        }
        SolutionSpec::SkewBraceSolution { brace } => skew_brace_solution(brace),
    }
}

/// `R(x, y) = (x⁻¹·(x∗y), ū∗x∗y)` with `u = x⁻¹·(x∗y)` and `ū` its `∗`-inverse.
pub fn skew_brace_solution(brace: &BiMagma) -> Result<RMap> {
    check_bimagma_law(brace, BiMagmaLaw::SkewLeftBrace).into_result("skew_left_brace")?;
    let dot = group_data(brace.dot(), "dot").expect("validated brace");
    let star = group_data(brace.star(), "star").expect("validated brace");
    RMap::from_fn(brace.n(), |x, y| {
        let u = brace.mul(dot.inverse[x], brace.act(x, y));
        (u, brace.act(brace.act(star.inverse[u], x), y))
    })
}

/// An element `(base, bag)` of a free k-cyclic magma; `bag[g]` is the multiplicity of generator `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeKCyclicElement {
    pub base: usize,
    pub bag: Vec<usize>,
}

impl std::fmt::Display for FreeKCyclicElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let items: Vec<String> = self
            .bag
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(g, m)| format!("{g}^{m}"))
            .collect();
        write!(f, "({}, {{{}}})", self.base, items.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeKCyclic {
    pub table: CayleyTable,
    pub elements: Vec<FreeKCyclicElement>,
}

impl FreeKCyclic {
    /// Lines `index: (base, {gen^mult, …})`.
    pub fn legend(&self) -> Vec<String> {
        self.elements
            .iter()
            .enumerate()
            .map(|(i, e)| format!("{i}: {e}"))
            .collect()
    }
}

pub fn free_k_cyclic(generators: usize, k: usize, idempotent: bool) -> Result<FreeKCyclic> {
    free_k_cyclic_with(generators, k, idempotent, &Guards::default())
}

pub fn free_k_cyclic_with(
    generators: usize,
    k: usize,
    idempotent: bool,
    guards: &Guards,
) -> Result<FreeKCyclic> {
    if generators == 0 || k == 0 {
        return Err(Error::invalid(
            "free_k_cyclic needs at least one generator and k >= 1",
        ));
    }
    let free_slots = if idempotent {
        generators - 1
    } else {
        generators
    };
    let size = (k as u128)
        .checked_pow(free_slots as u32)
        .and_then(|p| p.checked_mul(generators as u128))
        .unwrap_or(u128::MAX);
    if size > guards.max_table_n as u128 {
        return Err(Error::GuardExceeded {
            what: "free magma size",
            size,
            limit: guards.max_table_n as u128,
        });
    }
    let mut elements = Vec::with_capacity(size as usize);
    for base in 0..generators {
        let slots: Vec<usize> = (0..generators)
            .filter(|&g| !idempotent || g != base)
            .collect();
        let mut digits = vec![0usize; slots.len()];
        loop {
            let mut bag = vec![0; generators];
            for (s, &d) in slots.iter().zip(&digits) {
                bag[*s] = d;
            }
            elements.push(FreeKCyclicElement { base, bag });
            let mut i = digits.len();
            let more = loop {
                if i == 0 {
                    break false;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < k {
                    break true;
                }
                digits[i] = 0;
            };
            if !more {
                break;
            }
        }
    }
    let index: HashMap<&FreeKCyclicElement, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = elements.len();
    let table = CayleyTable::from_fn(n, |a, b| {
        let (x, y) = (&elements[a], &elements[b]);
        if idempotent && x.base == y.base {
            return a;
        }
        let mut bag = x.bag.clone();
        bag[y.base] = (bag[y.base] + 1) % k;
        index[&FreeKCyclicElement { base: x.base, bag }]
    })?;
    Ok(FreeKCyclic { table, elements })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "variant")]
pub enum StructureSpec {
    MagmaFromFunction { f: FiniteFunction },
    TrivialBrace { group: CayleyTable },
    TrivialBimagma { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Built {
    Magma(CayleyTable),
    BiMagma(BiMagma),
}

pub fn build_structure(spec: &StructureSpec) -> Result<Built> {
    match spec {
        StructureSpec::MagmaFromFunction { f } => Ok(Built::Magma(CayleyTable::from_function(f))),
        StructureSpec::TrivialBrace { group } => {
            group_data(group, "group").map_err(|w| Error::law("group", w))?;
            Ok(Built::BiMagma(BiMagma::new(group.clone(), group.clone())?))
        }
        StructureSpec::TrivialBimagma { n } => Ok(Built::BiMagma(BiMagma::new(
            CayleyTable::left_zero(*n),
            CayleyTable::right_zero(*n),
        )?)),
    }
}
