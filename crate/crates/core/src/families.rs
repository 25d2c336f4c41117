//! Families of commuting self-maps: incompressibility, group recovery,
//! odometer normal forms and the divisor-chain count.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{CayleyTable, FiniteFunction, Permutation};
use crate::plonka::connected_components;

/// An ordered, non-empty list of self-maps of one carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<FiniteFunction>", into = "Vec<FiniteFunction>")]
pub struct FunctionFamily {
    members: Vec<FiniteFunction>,
}

impl TryFrom<Vec<FiniteFunction>> for FunctionFamily {
    type Error = Error;
    fn try_from(members: Vec<FiniteFunction>) -> Result<Self> {
        FunctionFamily::new(members)
    }
}

impl From<FunctionFamily> for Vec<FiniteFunction> {
    fn from(f: FunctionFamily) -> Self {
        f.members
    }
}

impl FunctionFamily {
    pub fn new(members: Vec<FiniteFunction>) -> Result<Self> {
        let first = members
            .first()
            .ok_or_else(|| Error::invalid("a family needs at least one member"))?;
        if members.iter().any(|f| f.n() != first.n()) {
            return Err(Error::invalid("family members act on different carriers"));
        }
        Ok(FunctionFamily { members })
    }

    pub fn n(&self) -> usize {
        self.members[0].n()
    }

    pub fn members(&self) -> &[FiniteFunction] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_commuting(&self) -> bool {
        let m = &self.members;
        (0..m.len()).all(|i| (i + 1..m.len()).all(|j| m[i].commutes_with(&m[j])))
    }

    /// Forward orbit of `x`: everything reachable by applying members.
    pub fn closure(&self, seeds: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut stack: Vec<usize> = Vec::new();
        for &s in seeds {
            if !std::mem::replace(&mut seen[s], true) {
                stack.push(s);
            }
        }
        while let Some(x) = stack.pop() {
            for f in &self.members {
                let y = f.apply(x);
                if !std::mem::replace(&mut seen[y], true) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// A proper non-empty invariant subset, if one exists.
    pub fn compressing_subset(&self) -> Option<Vec<usize>> {
        (0..self.n()).find_map(|x| {
            let c = self.closure(&[x]);
            (!c.iter().all(|&b| b)).then(|| (0..self.n()).filter(|&y| c[y]).collect())
        })
    }

    pub fn is_incompressible(&self) -> bool {
        self.compressing_subset().is_none()
    }

    /// Simultaneous conjugation `f ↦ σ f σ⁻¹`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> FunctionFamily {
        FunctionFamily {
            members: self.members.iter().map(|f| f.conjugate_by(sigma)).collect(),
        }
    }
}

/// Flags computed by [`analyze_family`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyAnalysis {
    pub commuting: bool,
    pub bijective_members: bool,
    pub incompressible: bool,
    pub connected: bool,
}

pub fn analyze_family(family: &FunctionFamily) -> FamilyAnalysis {
    FamilyAnalysis {
        commuting: family.is_commuting(),
        bijective_members: family.members().iter().all(FiniteFunction::is_bijective),
        incompressible: family.is_incompressible(),
        connected: connected_components(family).len() == 1,
    }
}

/// An isomorphism of ordered families: a bijection conjugating each member
/// onto the corresponding member. Returns the lexicographically least one.
pub fn family_iso(a: &FunctionFamily, b: &FunctionFamily) -> Option<Permutation> {
    if a.n() != b.n() || a.len() != b.len() {
        return None;
    }
    let pairs: Vec<(&[usize], &[usize])> = a
        .members()
        .iter()
        .zip(b.members())
        .map(|(f, g)| (f.images(), g.images()))
        .collect();
    family_bijection(a.n(), &pairs).map(Permutation::from_vec_unchecked)
}

/// Lexicographically least bijection `φ` with `φ ∘ f = g ∘ φ` for every pair.
pub(crate) fn family_bijection(n: usize, pairs: &[(&[usize], &[usize])]) -> Option<Vec<usize>> {
    fn go(
        k: usize,
        n: usize,
        pairs: &[(&[usize], &[usize])],
        phi: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        if k == n {
            return true;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            phi[k] = v;
            let ok = pairs.iter().all(|(f, g)| {
                (0..=k).all(|x| {
                    let fx = f[x];
                    fx > k || x.max(fx) != k || phi[fx] == g[phi[x]]
                })
            });
            if ok {
                used[v] = true;
                if go(k + 1, n, pairs, phi, used) {
                    return true;
                }
                used[v] = false;
            }
        }
        false
    }
    let mut phi = vec![0; n];
    let mut used = vec![false; n];
    go(0, n, pairs, &mut phi, &mut used).then_some(phi)
}

/// An abelian group structure on a carrier, recovered from a commuting incompressible family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroupStructure {
    pub order: usize,
    /// `d_1 | d_2 | … | d_r`, all greater than 1 (empty for the trivial group).
    pub invariant_factors: Vec<usize>,
    /// Group operation on the carrier; the base point 0 is the identity.
    pub table: CayleyTable,
    /// Coordinates of each carrier element in `Z/d_1 × … × Z/d_r`.
    pub coordinates: Vec<Vec<usize>>,
    /// Each family member as a group element (its image of the base point).
    pub generators: Vec<usize>,
}

/// Recovers the group generated by a commuting incompressible family, using 0 as identity.
pub fn recover_group(family: &FunctionFamily) -> Result<AbelianGroupStructure> {
    if !family.is_commuting() {
        return Err(Error::invalid("family is not commuting"));
    }
    if let Some(s) = family.compressing_subset() {
        return Err(Error::invalid(format!(
            "family is compressible: {s:?} is invariant"
        )));
    }
    let n = family.n();
    // γ_y is the unique element of the generated monoid sending 0 to y.
    let mut gamma: Vec<Option<FiniteFunction>> = vec![None; n];
    let id = FiniteFunction::identity(n);
    gamma[0] = Some(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for f in family.members() {
            let next = f.compose(&w);
            let y = next.apply(0);
            match &gamma[y] {
                None => {
                    gamma[y] = Some(next.clone());
                    queue.push_back(next);
                }
                Some(existing) if *existing != next => {
                    return Err(Error::invalid("generated monoid does not act freely"));
                }
                Some(_) => {}
            }
        }
    }
    let gamma: Vec<FiniteFunction> = gamma
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::invalid("generated monoid does not act transitively"))?;
    let table = CayleyTable::from_fn(n, |x, y| gamma[x].apply(y))?;
    let invariant_factors = invariant_factors_of(&table);
    let coordinates = find_basis(&table, &invariant_factors)?;
    Ok(AbelianGroupStructure {
        order: n,
        invariant_factors,
        table,
        coordinates,
        generators: family.members().iter().map(|f| f.apply(0)).collect(),
    })
}

fn element_order(t: &CayleyTable, x: usize, identity: usize) -> usize {
    let mut k = 1;
    let mut p = x;
    while p != identity {
        p = t.get(p, x);
        k += 1;
    }
    k
}

fn prime_factors(mut t: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= t {
        let mut e = 0;
        while t.is_multiple_of(p) {
            t /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if t > 1 {
        out.push((t, 1));
    }
    out
}

/// Invariant factors of a finite abelian group table with identity 0, from
/// counts of elements whose order divides each prime power.
fn invariant_factors_of(t: &CayleyTable) -> Vec<usize> {
    let n = t.n();
    let orders: Vec<usize> = (0..n).map(|x| element_order(t, x, 0)).collect();
    // For each prime, the partition of exponents (largest first).
    let mut parts_by_prime: Vec<(usize, Vec<u32>)> = Vec::new();
    for (p, e) in prime_factors(n) {
        let mut s = vec![0u32];
        for k in 1..=e {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count();
            s.push(count.ilog(p));
        }
        // Number of parts >= k is s_k - s_{k-1}.
        let at_least: Vec<u32> = (1..=e as usize).map(|k| s[k] - s[k - 1]).collect();
        let num_parts = at_least[0] as usize;
        let parts: Vec<u32> = (0..num_parts)
            .map(|i| at_least.iter().filter(|&&c| c as usize > i).count() as u32)
            .collect();
        parts_by_prime.push((p, parts));
    }
    let r = parts_by_prime
        .iter()
        .map(|(_, v)| v.len())
        .max()
        .unwrap_or(0);
    // The largest factor collects the largest part of every prime.
    let mut factors: Vec<usize> = (0..r)
        .map(|i| {
            parts_by_prime
                .iter()
                .map(|(p, v)| v.get(i).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

/// Coordinates with respect to some basis of orders `factors`.
fn find_basis(t: &CayleyTable, factors: &[usize]) -> Result<Vec<Vec<usize>>> {
    let n = t.n();
    let orders: Vec<usize> = (0..n).map(|x| element_order(t, x, 0)).collect();
    let r = factors.len();
    let mut basis = vec![0usize; r];

    fn span(t: &CayleyTable, basis: &[usize], factors: &[usize]) -> Option<Vec<Vec<usize>>> {
        // Coordinates for each element reached; None if two coefficient vectors collide.
        let n = t.n();
        let mut coords: Vec<Option<Vec<usize>>> = vec![None; n];
        let total: usize = factors.iter().product();
        for idx in 0..total {
            let mut c = Vec::with_capacity(factors.len());
            let mut rest = idx;
            for &d in factors.iter().rev() {
                c.push(rest % d);
                rest /= d;
            }
            c.reverse();
            let mut x = 0;
            for (i, &ci) in c.iter().enumerate() {
                for _ in 0..ci {
                    x = t.get(x, basis[i]);
                }
            }
            if coords[x].is_some() {
                return None;
            }
            coords[x] = Some(c);
        }
        Some(coords.into_iter().map(|c| c.unwrap_or_default()).collect())
    }

    fn go(
        i: usize,
        t: &CayleyTable,
        factors: &[usize],
        orders: &[usize],
        basis: &mut Vec<usize>,
    ) -> Option<Vec<Vec<usize>>> {
        if i == factors.len() {
            return span(t, basis, factors);
        }
        for x in 0..t.n() {
            if orders[x] != factors[i] {
                continue;
            }
            basis[i] = x;
            if span(t, &basis[..=i], &factors[..=i]).is_none() {
                continue;
            }
            if let Some(c) = go(i + 1, t, factors, orders, basis) {
                return Some(c);
            }
        }
        None
    }

    if r == 0 {
        return Ok(vec![Vec::new(); n]);
    }
    go(0, t, factors, &orders, &mut basis)
        .ok_or_else(|| Error::invalid("no basis realizes the invariant factors"))
}

/// `(m, n, d)` with `1 <= d <= m`, describing `f` and the odometer `g` on `Z/m × Z/n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OdometerTriple {
    pub m: usize,
    pub n: usize,
    pub d: usize,
}

impl OdometerTriple {
    pub fn new(m: usize, n: usize, d: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Unsupported(
                "m = 0 describes an infinite carrier".into(),
            ));
        }
        if n == 0 || d == 0 || d > m {
            return Err(Error::invalid(format!(
                "invalid odometer triple ({m}, {n}, {d})"
            )));
        }
        Ok(OdometerTriple { m, n, d })
    }

    pub fn size(&self) -> usize {
        self.m * self.n
    }

    /// Every valid triple with `m·n = t`, ordered by `m` then `d`.
    pub fn all_of_size(t: usize) -> Vec<OdometerTriple> {
        let mut out = Vec::new();
        for m in (1..=t).filter(|m| t.is_multiple_of(*m)) {
            for d in 1..=m {
                out.push(OdometerTriple { m, n: t / m, d });
            }
        }
        out
    }
}

/// `f` and `g` on `Z/m × Z/n`, element `(a, b)` stored at index `a·n + b`.
pub fn build_odometer(t: OdometerTriple) -> (FiniteFunction, FiniteFunction) {
    let OdometerTriple { m, n, d } = t;
    let idx = |a: usize, b: usize| a * n + b;
    let f = (0..m * n).map(|i| idx((i / n + 1) % m, i % n)).collect();
    let g = (0..m * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            if b + 1 < n {
                idx(a, b + 1)
            } else {
                idx((a + m - d % m) % m, 0)
            }
        })
        .collect();
    (
        FiniteFunction::from_vec_unchecked(f),
        FiniteFunction::from_vec_unchecked(g),
    )
}

fn map_order(f: &FiniteFunction) -> usize {
    let mut k = 1;
    let mut p = f.clone();
    while !p.is_identity() {
        p = f.compose(&p);
        k += 1;
    }
    k
}

/// The triple of a commuting incompressible pair.
pub fn odometer_canonicalize(f: &FiniteFunction, g: &FiniteFunction) -> Result<OdometerTriple> {
    let family = FunctionFamily::new(vec![f.clone(), g.clone()])?;
    if !family.is_commuting() {
        return Err(Error::invalid("f and g do not commute"));
    }
    if !family.is_incompressible() {
        return Err(Error::invalid("{f, g} is compressible"));
    }
    let t = f.n();
    let m = map_order(f);
    let n = t / m;
    let gn = g.power(n);
    let mut fd = f.clone();
    for d in 1..=m {
        if fd.compose(&gn).is_identity() {
            return OdometerTriple::new(m, n, d);
        }
        fd = f.compose(&fd);
    }
    Err(Error::invalid("g^n is not a power of f"))
}

/// Sum over chains `d_1 | d_2 | … | d_{k-1} | t` of `d_1·…·d_{k-1}`, by direct chain enumeration.
pub fn count_incompressible(t: u64, k: usize) -> u128 {
    assert!(t >= 1 && k >= 1, "count_incompressible needs t, k >= 1");
    fn chains(top: u64, remaining: usize, acc: u128) -> u128 {
        // Chooses the next-largest link below `top`.
        if remaining == 0 {
            return acc;
        }
        (1..=top)
            .filter(|d| top.is_multiple_of(*d))
            .map(|d| chains(d, remaining - 1, acc * d as u128))
            .sum()
    }
    chains(t, k - 1, 1)
}

/// One representative per isomorphism class of commuting incompressible
/// `k`-tuples on `t` points, as translations of an abelian group.
pub fn enumerate_incompressible(t: usize, k: usize) -> Result<Vec<FunctionFamily>> {
    if t == 0 || k == 0 {
        return Err(Error::invalid("enumerate_incompressible needs t, k >= 1"));
    }
    let space = (t as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if space > 1_000_000 {
        return Err(Error::GuardExceeded {
            what: "generator tuples",
            size: space,
            limit: 1_000_000,
        });
    }
    let mut out = Vec::new();
    for factors in abelian_groups(t) {
        let g = ProductGroup::new(factors);
        let auts = g.automorphisms();
        let mut reps: Vec<Vec<usize>> = Vec::new();
        let mut tuple = vec![0usize; k];
        loop {
            if g.generates(&tuple) {
                let least = auts
                    .iter()
                    .map(|a| tuple.iter().map(|&x| a[x]).collect::<Vec<_>>())
                    .min()
                    .expect("identity automorphism");
                if least == tuple {
                    reps.push(tuple.clone());
                }
            }
            if !advance(&mut tuple, t) {
                break;
            }
        }
        for r in reps {
            let members = r.iter().map(|&gen| g.translation(gen)).collect();
            out.push(FunctionFamily { members });
        }
    }
    Ok(out)
}

/// Odometer-style increment of a tuple over `0..base`; false after the last tuple.
fn advance(tuple: &mut [usize], base: usize) -> bool {
    for i in (0..tuple.len()).rev() {
        tuple[i] += 1;
        if tuple[i] < base {
            return true;
        }
        tuple[i] = 0;
    }
    false
}

/// Invariant-factor lists `d_1 | … | d_r` (each > 1) of the abelian groups of order `t`.
pub fn abelian_groups(t: usize) -> Vec<Vec<usize>> {
    fn partitions(e: u32, max: u32) -> Vec<Vec<u32>> {
        if e == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (1..=e.min(max)).rev() {
            for mut rest in partitions(e - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in prime_factors(t) {
        let mut next = Vec::new();
        for g in &groups {
            for part in partitions(e, e) {
                // part is descending; align largest parts with largest factors.
                let r = g.len().max(part.len());
                let mut merged = vec![1usize; r];
                for (i, &f) in g.iter().rev().enumerate() {
                    merged[r - 1 - i] *= f;
                }
                for (i, &x) in part.iter().enumerate() {
                    merged[r - 1 - i] *= p.pow(x);
                }
                next.push(merged);
            }
        }
        groups = next;
    }
    groups.sort();
    groups
}

/// `Z/d_1 × … × Z/d_r` with elements in mixed radix.
struct ProductGroup {
    factors: Vec<usize>,
    order: usize,
}

impl ProductGroup {
    fn new(factors: Vec<usize>) -> Self {
        let order = factors.iter().product();
        ProductGroup { factors, order }
    }

    fn coords(&self, mut x: usize) -> Vec<usize> {
        let mut c = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            c[i] = x % self.factors[i];
            x /= self.factors[i];
        }
        c
    }

    fn index(&self, c: &[usize]) -> usize {
        c.iter()
            .zip(&self.factors)
            .fold(0, |acc, (&ci, &d)| acc * d + ci % d)
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.coords(x), self.coords(y));
        let s: Vec<usize> = a.iter().zip(&b).map(|(p, q)| p + q).collect();
        self.index(&s)
    }

    fn translation(&self, g: usize) -> FiniteFunction {
        FiniteFunction::from_vec_unchecked((0..self.order).map(|x| self.add(x, g)).collect())
    }

    fn generates(&self, gens: &[usize]) -> bool {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if !std::mem::replace(&mut seen[y], true) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != 0 {
            p = self.add(p, x);
            k += 1;
        }
        k
    }

    /// Automorphisms as element maps, from every choice of basis images.
    fn automorphisms(&self) -> Vec<Vec<usize>> {
        let r = self.factors.len();
        let candidates: Vec<Vec<usize>> = (0..r)
            .map(|i| {
                (0..self.order)
                    .filter(|&x| self.factors[i].is_multiple_of(self.element_order(x)))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; r];
        fn rec(
            g: &ProductGroup,
            i: usize,
            cands: &[Vec<usize>],
            choice: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if i == cands.len() {
                let map: Vec<usize> = (0..g.order)
                    .map(|x| {
                        let c = g.coords(x);
                        let mut y = 0;
                        for (j, &cj) in c.iter().enumerate() {
                            for _ in 0..cj {
                                y = g.add(y, choice[j]);
                            }
                        }
                        y
                    })
                    .collect();
                if FiniteFunction::from_vec_unchecked(map.clone()).is_bijective() {
                    out.push(map);
                }
                return;
            }
            for &c in &cands[i] {
                choice[i] = c;
                rec(g, i + 1, cands, choice, out);
            }
        }
        rec(self, 0, &candidates, &mut choice, &mut out);
        out
    }
}

/// Sum of divisors.
pub fn sigma(t: u64) -> u64 {
    (1..=t).filter(|d| t.is_multiple_of(*d)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ff(v: &[usize]) -> FiniteFunction {
        FiniteFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn analysis_examples() {
        let a = analyze_family(&FunctionFamily::new(vec![FiniteFunction::cycle(3)]).unwrap());
        assert!(a.incompressible);
        let a = analyze_family(&FunctionFamily::new(vec![FiniteFunction::constant(2, 0)]).unwrap());
        assert!(!a.incompressible);
        let a = analyze_family(&FunctionFamily::new(vec![ff(&[1, 0]), ff(&[0, 1])]).unwrap());
        assert!(a.commuting && a.incompressible && a.connected && a.bijective_members);
    }

    #[test]
    fn recover_group_examples() {
        let g = recover_group(&FunctionFamily::new(vec![ff(&[1, 0])]).unwrap()).unwrap();
        assert_eq!(g.invariant_factors, vec![2]);
        assert_eq!(g.generators, vec![1]);
        let g = recover_group(&FunctionFamily::new(vec![ff(&[1, 2, 0])]).unwrap()).unwrap();
        assert_eq!(g.invariant_factors, vec![3]);
        assert_eq!(g.generators, vec![1]);
        let (f, h) = build_odometer(OdometerTriple::new(2, 2, 1).unwrap());
        let g = recover_group(&FunctionFamily::new(vec![f, h]).unwrap()).unwrap();
        // g^2 = f^{-1} has order 2, so g has order 4.
        assert_eq!(g.invariant_factors, vec![4]);
        let (f, h) = build_odometer(OdometerTriple::new(2, 2, 2).unwrap());
        let g = recover_group(&FunctionFamily::new(vec![f, h]).unwrap()).unwrap();
        assert_eq!(g.invariant_factors, vec![2, 2]);
        assert!(
            recover_group(&FunctionFamily::new(vec![FiniteFunction::constant(2, 0)]).unwrap())
                .is_err()
        );
    }

    #[test]
    fn odometer_examples() {
        let swap = ff(&[1, 0]);
        let id = FiniteFunction::identity(2);
        assert_eq!(
            odometer_canonicalize(&swap, &swap).unwrap(),
            OdometerTriple { m: 2, n: 1, d: 1 }
        );
        assert_eq!(
            odometer_canonicalize(&swap, &id).unwrap(),
            OdometerTriple { m: 2, n: 1, d: 2 }
        );
        assert_eq!(
            odometer_canonicalize(&id, &swap).unwrap(),
            OdometerTriple { m: 1, n: 2, d: 1 }
        );
        assert_eq!(
            build_odometer(OdometerTriple::new(2, 1, 1).unwrap()),
            (swap.clone(), swap.clone())
        );
        assert_eq!(
            build_odometer(OdometerTriple::new(1, 2, 1).unwrap()),
            (id.clone(), swap.clone())
        );
        let (f, g) = build_odometer(OdometerTriple::new(2, 2, 2).unwrap());
        assert!(g.power(2).is_identity());
        assert_eq!(map_order(&f), 2);
        assert!(matches!(
            OdometerTriple::new(0, 1, 1),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_incompressible(7, 1), 1);
        assert_eq!(count_incompressible(2, 2), 3);
        assert_eq!(count_incompressible(4, 3), 35);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_incompressible(2, 2).unwrap().len(), 3);
        let one = enumerate_incompressible(3, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].members()[0], FiniteFunction::cycle(3));
        let point = enumerate_incompressible(1, 3).unwrap();
        assert_eq!(
            point,
            vec![FunctionFamily::new(vec![FiniteFunction::identity(1); 3]).unwrap()]
        );
    }

    #[test]
    fn abelian_group_lists() {
        assert_eq!(abelian_groups(1), vec![Vec::<usize>::new()]);
        assert_eq!(abelian_groups(8), vec![vec![2, 2, 2], vec![2, 4], vec![8]]);
        assert_eq!(
            abelian_groups(12),
            vec![vec![12], vec![2, 6]]
                .into_iter()
                .rev()
                .collect::<Vec<_>>()
        );
    }
}
