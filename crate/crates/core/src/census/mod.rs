//! Exhaustive enumeration of constrained structures up to isomorphism.
//!
//! Three search strategies are used, chosen by [`enumerate_structures`]:
//! a column search for right Płonka magmas, a Lyubashenko-pair search for
//! simple or bi-connected BLS queries, and a generic cell-by-cell search.
//! Every candidate passes the full law checkers before it is counted.

mod cells;
mod columns;
mod functions;
pub(crate) mod partial;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_bimagma, canonical_table};
use crate::error::{Error, Result};
use crate::finite::{BiMagma, CayleyTable, RMap};
use crate::ideals::{finest_valid_partition, is_simple, is_simple_as, IdealKind, Target};
use crate::laws::{
    check_bimagma_law, check_magma_law, check_rmap_law, BiMagmaLaw, MagmaLaw, RMapLaw,
};

pub use functions::{
    bls_structural_classes, census_simple_bls, census_simple_bls_with, function_conjugacy_census,
    functional_graph_representatives, ConjugacyCensus, SimpleBlsCensus,
};

/// Isomorphism-invariant conditions that are not equational laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    /// The R-map of a bi-magma has no proper ideal.
    Simple,
    /// The finest valid partition of the R-map has one block.
    Biconnected,
    RightSimple,
    LeftSimple,
    TwoSidedSimple,
}

impl Predicate {
    pub const ALL: [Predicate; 5] = [
        Predicate::Simple,
        Predicate::Biconnected,
        Predicate::RightSimple,
        Predicate::LeftSimple,
        Predicate::TwoSidedSimple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Simple => "simple",
            Predicate::Biconnected => "biconnected",
            Predicate::RightSimple => "right_simple",
            Predicate::LeftSimple => "left_simple",
            Predicate::TwoSidedSimple => "two_sided_simple",
        }
    }

    fn on_magma(self) -> bool {
        matches!(
            self,
            Predicate::RightSimple | Predicate::LeftSimple | Predicate::TwoSidedSimple
        )
    }
}

/// One conjunct of a census query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    Magma(MagmaLaw),
    BiMagma(BiMagmaLaw),
    RMap(RMapLaw),
    Predicate(Predicate),
}

impl Constraint {
    fn bare_name(&self) -> String {
        match self {
            Constraint::Magma(l) => l.name(),
            Constraint::BiMagma(l) => l.name().to_string(),
            Constraint::RMap(l) => l.name().to_string(),
            Constraint::Predicate(p) => p.name().to_string(),
        }
    }

    fn prefix(&self) -> &'static str {
        match self {
            Constraint::Magma(_) => "magma",
            Constraint::BiMagma(_) => "bimagma",
            Constraint::RMap(_) => "rmap",
            Constraint::Predicate(_) => "pred",
        }
    }

    fn is_magma(&self) -> bool {
        match self {
            Constraint::Magma(_) => true,
            Constraint::Predicate(p) => p.on_magma(),
            _ => false,
        }
    }
}

fn parse_candidates(name: &str) -> Vec<Constraint> {
    let mut out = Vec::new();
    if let Ok(l) = name.parse::<MagmaLaw>() {
        out.push(Constraint::Magma(l));
    }
    if let Ok(l) = name.parse::<BiMagmaLaw>() {
        out.push(Constraint::BiMagma(l));
    }
    if let Ok(l) = name.parse::<RMapLaw>() {
        out.push(Constraint::RMap(l));
    }
    if let Some(p) = Predicate::ALL.into_iter().find(|p| p.name() == name) {
        out.push(Constraint::Predicate(p));
    }
    out
}

impl fmt::Display for Constraint {
    /// The bare name, prefixed only when another kind shares it.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bare = self.bare_name();
        if parse_candidates(&bare).len() > 1 {
            write!(f, "{}:{bare}", self.prefix())
        } else {
            f.write_str(&bare)
        }
    }
}

impl FromStr for Constraint {
    type Err = Error;

    /// Accepts `name` or `kind:name` with kind one of magma, bimagma, rmap, pred.
    fn from_str(s: &str) -> Result<Self> {
        if let Some((kind, name)) = s.split_once(':') {
            let found = parse_candidates(name)
                .into_iter()
                .find(|c| c.prefix() == kind);
            return found.ok_or_else(|| Error::invalid(format!("unknown constraint {s:?}")));
        }
        match parse_candidates(s).as_slice() {
            [] => Err(Error::invalid(format!("unknown constraint {s:?}"))),
            [c] => Ok(*c),
            many => {
                let options: Vec<String> =
                    many.iter().map(|c| format!("{}:{s}", c.prefix())).collect();
                Err(Error::invalid(format!(
                    "ambiguous constraint {s:?}; write one of {}",
                    options.join(", ")
                )))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Count,
    Representatives,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parallelism {
    #[default]
    Sequential,
    /// A worker pool of the given size; 0 picks the machine default.
    Workers(usize),
}

/// Size limits for each search strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusGuards {
    pub generic_magma_n: usize,
    pub generic_bimagma_n: usize,
    pub column_n: usize,
    pub lyubashenko_n: usize,
    pub unitary_lyubashenko_n: usize,
    /// Search nodes visited by the generic cell search before giving up.
    pub max_nodes: u64,
}

impl Default for CensusGuards {
    fn default() -> Self {
        CensusGuards {
            generic_magma_n: 4,
            generic_bimagma_n: 3,
            column_n: 7,
            lyubashenko_n: 6,
            unitary_lyubashenko_n: 8,
            max_nodes: 500_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusQuery {
    pub n: usize,
    pub constraints: Vec<Constraint>,
    pub mode: Mode,
    pub parallelism: Parallelism,
    /// Use structure theorems to shrink the search space.
    pub use_lemmas: bool,
    pub guards: CensusGuards,
}

impl CensusQuery {
    pub fn new(n: usize, constraints: Vec<Constraint>) -> Result<Self> {
        if constraints.is_empty() {
            return Err(Error::invalid(
                "a census query needs at least one constraint",
            ));
        }
        if n == 0 {
            return Err(Error::invalid("census carriers must be nonempty"));
        }
        Ok(CensusQuery {
            n,
            constraints,
            mode: Mode::Count,
            parallelism: Parallelism::Sequential,
            use_lemmas: true,
            guards: CensusGuards::default(),
        })
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_parallelism(mut self, p: Parallelism) -> Self {
        self.parallelism = p;
        self
    }

    pub fn without_lemmas(mut self) -> Self {
        self.use_lemmas = false;
        self
    }

    /// Constraint names sorted and joined with `+`.
    pub fn label(&self) -> String {
        let mut names: Vec<String> = self.constraints.iter().map(|c| c.to_string()).collect();
        names.sort();
        names.dedup();
        names.join("+")
    }

    fn is_magma_query(&self) -> Result<bool> {
        let magma = self.constraints.iter().filter(|c| c.is_magma()).count();
        match magma {
            0 => Ok(false),
            m if m == self.constraints.len() => Ok(true),
            _ => Err(Error::invalid(
                "a census query cannot mix magma and bi-magma constraints",
            )),
        }
    }

    fn has(&self, c: Constraint) -> bool {
        self.constraints.contains(&c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub label: String,
    pub class_count: u64,
    pub raw_count: u64,
    pub elapsed_ms: u128,
}

impl CensusRow {
    pub const TSV_HEADER: &'static str = "n\tconstraint\tclass_count\traw_count\telapsed_ms";

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.n, self.label, self.class_count, self.raw_count, self.elapsed_ms
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Representative {
    Magma { table: CayleyTable },
    Bimagma { bimagma: BiMagma },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusResult {
    pub row: CensusRow,
    /// Which search produced the result.
    pub strategy: String,
    /// Canonical relabelings sorted by canonical code; empty in count mode.
    pub representatives: Vec<Representative>,
}

/// Literature values for queries whose counts are known.
fn literature_value(q: &CensusQuery) -> Option<u64> {
    use Constraint as C;
    let mut key: Vec<Constraint> = q.constraints.clone();
    key.sort_by_key(|c| c.to_string());
    key.dedup();
    let n = q.n;
    let is = |cs: &[Constraint]| {
        let mut want = cs.to_vec();
        want.sort_by_key(|c| c.to_string());
        want == key
    };
    let rp = C::Magma(MagmaLaw::RightPlonka);
    if is(&[rp]) {
        return [1, 3, 11].get(n - 1).copied();
    }
    if is(&[rp, C::Magma(MagmaLaw::RightInvolutory)]) {
        return [1, 2, 4, 12, 37, 164, 849, 6081, 56164, 698921]
            .get(n - 1)
            .copied();
    }
    if is(&[rp, C::Magma(MagmaLaw::Associative)]) {
        return Some(partition_number(n));
    }
    if is(&[rp, C::Predicate(Predicate::RightSimple)]) {
        return Some(1);
    }
    let simple = C::Predicate(Predicate::Simple);
    if is(&[C::RMap(RMapLaw::Bls), simple]) || is(&[C::BiMagma(BiMagmaLaw::PlonkaBimagma), simple])
    {
        return Some(crate::families::sigma(n as u64));
    }
    let bi = C::Predicate(Predicate::Biconnected);
    if is(&[C::RMap(RMapLaw::Bls), C::RMap(RMapLaw::Unitary), bi])
        || is(&[C::BiMagma(BiMagmaLaw::UnitaryPlonkaBimagma), bi])
    {
        return Some(1);
    }
    None
}

/// Number of integer partitions of `n`.
pub fn partition_number(n: usize) -> u64 {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            p[total] += p[total - part];
        }
    }
    p[n]
}

fn decorate_label(q: &CensusQuery, class_count: u64) -> String {
    let base = q.label();
    match literature_value(q) {
        Some(v) if v == class_count => base,
        Some(v) => format!("{base} [differs from literature value {v}]"),
        None => format!("{base} [unverified against literature]"),
    }
}

/// Full check of every magma constraint.
pub(crate) fn magma_passes(t: &CayleyTable, constraints: &[Constraint]) -> bool {
    constraints.iter().all(|c| match *c {
        Constraint::Magma(l) => check_magma_law(t, l).holds(),
        Constraint::Predicate(Predicate::RightSimple) => {
            simple_as(Target::Magma(t), IdealKind::MagmaRight)
        }
        Constraint::Predicate(Predicate::LeftSimple) => {
            simple_as(Target::Magma(t), IdealKind::MagmaLeft)
        }
        Constraint::Predicate(Predicate::TwoSidedSimple) => {
            simple_as(Target::Magma(t), IdealKind::MagmaTwoSided)
        }
        _ => false,
    })
}

fn simple_as(t: Target<'_>, kind: IdealKind) -> bool {
    is_simple_as(t, kind).map(|v| v.holds()).unwrap_or(false)
}

/// Full check of every bi-magma constraint.
pub(crate) fn bimagma_passes(b: &BiMagma, constraints: &[Constraint]) -> bool {
    let r = RMap::from_bimagma(b);
    constraints.iter().all(|c| match *c {
        Constraint::BiMagma(l) => check_bimagma_law(b, l).holds(),
        Constraint::RMap(l) => check_rmap_law(&r, l).holds(),
        Constraint::Predicate(Predicate::Simple) => is_simple(&r).holds(),
        Constraint::Predicate(Predicate::Biconnected) => finest_valid_partition(&r).len() == 1,
        _ => false,
    })
}

/// Classes keyed by canonical code, with the labeled count behind them.
#[derive(Default)]
pub(crate) struct Tally {
    pub raw: u64,
    pub classes: BTreeMap<Vec<u8>, Option<Representative>>,
}

impl Tally {
    pub fn add_magma(&mut self, t: &CayleyTable, keep: bool) {
        self.raw += 1;
        let cf = canonical_table(t);
        self.classes.entry(cf.code).or_insert_with(|| {
            keep.then(|| Representative::Magma {
                table: t.relabel(&cf.labeling),
            })
        });
    }

    pub fn add_bimagma(&mut self, b: &BiMagma, keep: bool) {
        self.add_bimagma_weighted(b, 1, keep);
    }

    pub fn add_bimagma_weighted(&mut self, b: &BiMagma, weight: u64, keep: bool) {
        self.raw += weight;
        let cf = canonical_bimagma(b);
        self.classes.entry(cf.code).or_insert_with(|| {
            keep.then(|| Representative::Bimagma {
                bimagma: b.relabel(&cf.labeling),
            })
        });
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.raw += other.raw;
        for (code, rep) in other.classes {
            self.classes.entry(code).or_insert(rep);
        }
        self
    }
}

/// Maps `work` over `items`, on a worker pool when requested and available.
/// Results come back in input order.
pub(crate) fn run_branches<I, T, F>(items: Vec<I>, par: Parallelism, work: F) -> Result<Vec<T>>
where
    I: Send,
    T: Send,
    F: Fn(I) -> Result<T> + Sync + Send,
{
    match par {
        Parallelism::Sequential => items.into_iter().map(work).collect(),
        #[cfg(feature = "parallel")]
        Parallelism::Workers(w) => {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::invalid(format!("cannot start worker pool: {e}")))?;
            pool.install(|| items.into_par_iter().map(work).collect())
        }
        #[cfg(not(feature = "parallel"))]
        Parallelism::Workers(_) => items.into_iter().map(work).collect(),
    }
}

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::GuardExceeded {
            what,
            size: size as u128,
            limit: limit as u128,
        });
    }
    Ok(())
}

/// Runs a census query; see the module docs for the strategies.
pub fn enumerate_structures(q: &CensusQuery) -> Result<CensusResult> {
    if q.constraints.is_empty() {
        return Err(Error::invalid(
            "a census query needs at least one constraint",
        ));
    }
    if q.n == 0 {
        return Err(Error::invalid("census carriers must be nonempty"));
    }
    let start = Instant::now();
    let keep = q.mode == Mode::Representatives;
    let (strategy, tally) = if q.is_magma_query()? {
        let plonka = q.has(Constraint::Magma(MagmaLaw::RightPlonka))
            || q.has(Constraint::Magma(MagmaLaw::TwoCyclic));
        if plonka {
            guard("column search carrier", q.n, q.guards.column_n)?;
            ("right Płonka column search", columns::search(q, keep)?)
        } else {
            guard(
                "generic magma search carrier",
                q.n,
                q.guards.generic_magma_n,
            )?;
            ("generic cell search", cells::search(q, 1, keep)?)
        }
    } else if q.use_lemmas && functions::lyubashenko_route_applies(q) {
        (
            "Lyubashenko pair search",
            functions::lyubashenko_search(q, keep)?,
        )
    } else {
        guard(
            "generic bi-magma search carrier",
            q.n,
            q.guards.generic_bimagma_n,
        )?;
        ("generic cell search", cells::search(q, 2, keep)?)
    };
    let class_count = tally.classes.len() as u64;
    let representatives = if keep {
        tally.classes.into_values().flatten().collect()
    } else {
        Vec::new()
    };
    Ok(CensusResult {
        row: CensusRow {
            n: q.n,
            label: decorate_label(q, class_count),
            class_count,
            raw_count: tally.raw,
            elapsed_ms: start.elapsed().as_millis(),
        },
        strategy: strategy.to_string(),
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_table;
    use crate::morphisms::are_isomorphic;

    fn magma_query(n: usize, laws: &[MagmaLaw]) -> CensusQuery {
        CensusQuery::new(n, laws.iter().map(|&l| Constraint::Magma(l)).collect()).unwrap()
    }

    fn count(q: &CensusQuery) -> u64 {
        enumerate_structures(q).unwrap().row.class_count
    }

    #[test]
    fn constraint_names() {
        assert!("commutative".parse::<Constraint>().is_err());
        assert_eq!(
            "magma:commutative".parse::<Constraint>().unwrap(),
            Constraint::Magma(MagmaLaw::Commutative)
        );
        assert_eq!(
            "rmap:commutative".parse::<Constraint>().unwrap(),
            Constraint::RMap(RMapLaw::Commutative)
        );
        assert_eq!(
            "bls".parse::<Constraint>().unwrap(),
            Constraint::RMap(RMapLaw::Bls)
        );
        assert_eq!(
            "k_cyclic(3)".parse::<Constraint>().unwrap(),
            Constraint::Magma(MagmaLaw::KCyclic(3))
        );
        for c in [
            Constraint::Magma(MagmaLaw::Commutative),
            Constraint::RMap(RMapLaw::Commutative),
            Constraint::Predicate(Predicate::Biconnected),
            Constraint::BiMagma(BiMagmaLaw::PlonkaBimagma),
        ] {
            assert_eq!(c.to_string().parse::<Constraint>().unwrap(), c);
        }
        assert!(CensusQuery::new(2, vec![]).is_err());
    }

    #[test]
    fn right_plonka_counts() {
        for (n, want) in [(1, 1), (2, 3), (3, 11)] {
            let r = enumerate_structures(&magma_query(n, &[MagmaLaw::RightPlonka])).unwrap();
            assert_eq!(r.row.class_count, want);
            assert!(!r.row.label.contains("unverified"));
        }
        let r = enumerate_structures(&magma_query(4, &[MagmaLaw::RightPlonka])).unwrap();
        assert!(r.row.label.ends_with("[unverified against literature]"));
    }

    #[test]
    fn involutory_counts() {
        for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 12), (5, 37)] {
            assert_eq!(
                count(&magma_query(
                    n,
                    &[MagmaLaw::RightPlonka, MagmaLaw::RightInvolutory]
                )),
                want
            );
        }
    }

    #[test]
    fn associative_counts_are_partition_numbers() {
        for n in 1..=5 {
            assert_eq!(
                count(&magma_query(
                    n,
                    &[MagmaLaw::RightPlonka, MagmaLaw::Associative]
                )),
                partition_number(n)
            );
        }
        assert_eq!(
            (1..=5).map(partition_number).collect::<Vec<_>>(),
            vec![1, 2, 3, 5, 7]
        );
    }

    #[test]
    fn column_search_matches_cell_search() {
        for n in 1..=3 {
            for extra in [
                None,
                Some(MagmaLaw::Band),
                Some(MagmaLaw::RightInvolutory),
                Some(MagmaLaw::Associative),
            ] {
                let mut laws = vec![MagmaLaw::RightPlonka];
                laws.extend(extra);
                let q = magma_query(n, &laws).with_mode(Mode::Representatives);
                let a = enumerate_structures(&q).unwrap();
                assert_eq!(a.strategy, "right Płonka column search");
                let c = cells::search(&q, 1, true).unwrap();
                assert_eq!(a.row.raw_count, c.raw);
                let rep_c: Vec<_> = c.classes.into_values().flatten().collect();
                assert_eq!(a.representatives, rep_c, "n={n} {extra:?}");
            }
        }
    }

    #[test]
    fn right_simple_lemma_agrees_with_unpruned_search() {
        for n in 1..=4 {
            let q = magma_query(n, &[MagmaLaw::RightPlonka]);
            let mut q = q.with_mode(Mode::Representatives);
            q.constraints
                .push(Constraint::Predicate(Predicate::RightSimple));
            let with = enumerate_structures(&q).unwrap();
            let without = enumerate_structures(&q.clone().without_lemmas()).unwrap();
            assert_eq!(with.representatives, without.representatives);
            assert_eq!(with.row.raw_count, without.row.raw_count);
            assert_eq!(with.row.class_count, 1);
        }
    }

    #[test]
    fn class_counts_agree_with_pairwise_oracle() {
        for n in 1..=3 {
            let q = magma_query(n, &[MagmaLaw::RightPlonka]).with_mode(Mode::Representatives);
            let reps: Vec<CayleyTable> = enumerate_structures(&q)
                .unwrap()
                .representatives
                .into_iter()
                .map(|r| match r {
                    Representative::Magma { table } => table,
                    _ => unreachable!(),
                })
                .collect();
            for (i, a) in reps.iter().enumerate() {
                assert_eq!(&a.relabel(&canonical_table(a).labeling), a);
                for b in &reps[i + 1..] {
                    assert!(are_isomorphic(a, b).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let q = magma_query(4, &[MagmaLaw::RightPlonka, MagmaLaw::RightInvolutory])
            .with_mode(Mode::Representatives);
        let a = enumerate_structures(&q).unwrap();
        let b = enumerate_structures(&q.clone().with_parallelism(Parallelism::Workers(3))).unwrap();
        assert_eq!(a.representatives, b.representatives);
        assert_eq!(a.row.raw_count, b.row.raw_count);
    }

    #[test]
    fn guards_and_mixing() {
        let q = magma_query(9, &[MagmaLaw::RightPlonka]);
        assert!(matches!(
            enumerate_structures(&q),
            Err(Error::GuardExceeded { .. })
        ));
        let q = CensusQuery::new(
            2,
            vec![
                Constraint::Magma(MagmaLaw::Band),
                Constraint::RMap(RMapLaw::Bls),
            ],
        )
        .unwrap();
        assert!(enumerate_structures(&q).is_err());
    }

    #[test]
    fn tsv_row() {
        let r = enumerate_structures(&magma_query(2, &[MagmaLaw::RightPlonka]))
            .unwrap()
            .row;
        let line = r.to_tsv();
        assert!(line.starts_with("2\tright_plonka\t3\t"));
        assert_eq!(
            line.split('\t').count(),
            CensusRow::TSV_HEADER.split('\t').count()
        );
    }
}
