//! Brute-force homomorphism and isomorphism search. These are the reference
//! oracles for the structured algorithms elsewhere in the crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{BiMagma, CayleyTable, FiniteFunction, Guards, Permutation, RMap};

/// A finite carrier with one or two binary operations.
pub trait Structure {
    fn n(&self) -> usize;
    /// Number of operations (1 or 2).
    fn width(&self) -> usize;
    /// The operation values at `(x, y)`; only the first `width()` are meaningful.
    fn eval(&self, x: usize, y: usize) -> [usize; 2];
}

impl Structure for CayleyTable {
    fn n(&self) -> usize {
        CayleyTable::n(self)
    }
    fn width(&self) -> usize {
        1
    }
    #[inline]
    fn eval(&self, x: usize, y: usize) -> [usize; 2] {
        let v = self.get(x, y);
        [v, v]
    }
}

impl Structure for BiMagma {
    fn n(&self) -> usize {
        BiMagma::n(self)
    }
    fn width(&self) -> usize {
        2
    }
    #[inline]
    fn eval(&self, x: usize, y: usize) -> [usize; 2] {
        [self.mul(x, y), self.act(x, y)]
    }
}

impl Structure for RMap {
    fn n(&self) -> usize {
        RMap::n(self)
    }
    fn width(&self) -> usize {
        2
    }
    #[inline]
    fn eval(&self, x: usize, y: usize) -> [usize; 2] {
        let (u, v) = self.apply(x, y);
        [u, v]
    }
}

/// Checks `σ(a(x,y)) = b(σx, σy)` for all pairs with `max(x, y, outputs) == k`,
/// given `σ` defined on `0..=k`.
fn consistent_at<S: Structure>(a: &S, b: &S, sigma: &[usize], k: usize) -> bool {
    let w = a.width();
    for x in 0..=k {
        for y in 0..=k {
            let out = a.eval(x, y);
            if out[..w].iter().any(|&o| o > k) {
                continue;
            }
            if x.max(y).max(out[0]).max(out[w - 1]) != k {
                continue;
            }
            let img = b.eval(sigma[x], sigma[y]);
            if (0..w).any(|i| sigma[out[i]] != img[i]) {
                return false;
            }
        }
    }
    true
}

struct Search<'a, S> {
    a: &'a S,
    b: &'a S,
    injective: bool,
    sigma: Vec<usize>,
    used: Vec<bool>,
}

impl<S: Structure> Search<'_, S> {
    /// Depth-first in lexicographic order; `visit` returns `false` to stop.
    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == self.a.n() {
            return visit(&self.sigma);
        }
        for v in 0..self.b.n() {
            if self.injective && self.used[v] {
                continue;
            }
            self.sigma[k] = v;
            if !consistent_at(self.a, self.b, &self.sigma, k) {
                continue;
            }
            if self.injective {
                self.used[v] = true;
            }
            let go_on = self.run(k + 1, visit);
            if self.injective {
                self.used[v] = false;
            }
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn search<S: Structure>(a: &S, b: &S, injective: bool, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let mut s = Search {
        a,
        b,
        injective,
        sigma: vec![0; a.n()],
        used: vec![false; b.n()],
    };
    s.run(0, visit);
}

fn hom_space(a: usize, b: usize) -> u128 {
    (0..a)
        .try_fold(1u128, |acc, _| acc.checked_mul(b as u128))
        .unwrap_or(u128::MAX)
}

/// A map `0..images.len() → 0..codomain`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Morphism {
    pub codomain: usize,
    pub images: Vec<usize>,
}

impl Morphism {
    pub fn is_constant(&self) -> bool {
        self.images.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_bijective(&self) -> bool {
        self.images.len() == self.codomain
            && FiniteFunction::new(self.images.clone()).is_ok_and(|f| f.is_bijective())
    }
}

/// All `σ` with `(σ×σ)∘R_A = R_B∘(σ×σ)`, in lexicographic order.
pub fn find_homomorphisms(a: &RMap, b: &RMap) -> Result<Vec<Morphism>> {
    find_homomorphisms_with(a, b, &Guards::default())
}

pub fn find_homomorphisms_with(a: &RMap, b: &RMap, guards: &Guards) -> Result<Vec<Morphism>> {
    Ok(homomorphisms(a, b, guards)?
        .into_iter()
        .map(|images| Morphism {
            codomain: b.n(),
            images,
        })
        .collect())
}

/// Homomorphisms between any two structures of the same shape, as image lists.
/// Homomorphisms into a different carrier are allowed, so the images are
/// plain vectors rather than self-maps.
pub fn homomorphisms<S: Structure>(a: &S, b: &S, guards: &Guards) -> Result<Vec<Vec<usize>>> {
    let size = hom_space(a.n(), b.n());
    if size > guards.max_hom_space {
        return Err(Error::GuardExceeded {
            what: "homomorphism search",
            size,
            limit: guards.max_hom_space,
        });
    }
    let mut out = Vec::new();
    search(a, b, false, &mut |s| {
        out.push(s.to_vec());
        true
    });
    Ok(out)
}

fn perm_guard(n: usize, guards: &Guards) -> Result<()> {
    if n > guards.max_perm_n {
        return Err(Error::GuardExceeded {
            what: "permutation sweep",
            size: n as u128,
            limit: guards.max_perm_n as u128,
        });
    }
    Ok(())
}

/// The lexicographically least isomorphism `A → B`, if any.
pub fn are_isomorphic<S: Structure>(a: &S, b: &S) -> Result<Option<Permutation>> {
    are_isomorphic_with(a, b, &Guards::default())
}

pub fn are_isomorphic_with<S: Structure>(
    a: &S,
    b: &S,
    guards: &Guards,
) -> Result<Option<Permutation>> {
    if a.n() != b.n() {
        return Ok(None);
    }
    perm_guard(a.n(), guards)?;
    let mut found = None;
    search(a, b, true, &mut |s| {
        found = Some(Permutation::from_vec_unchecked(s.to_vec()));
        false
    });
    Ok(found)
}

/// The automorphism group, in lexicographic order.
pub fn automorphisms<S: Structure>(a: &S) -> Result<Vec<Permutation>> {
    automorphisms_with(a, &Guards::default())
}

pub fn automorphisms_with<S: Structure>(a: &S, guards: &Guards) -> Result<Vec<Permutation>> {
    perm_guard(a.n(), guards)?;
    let mut out = Vec::new();
    search(a, a, true, &mut |s| {
        out.push(Permutation::from_vec_unchecked(s.to_vec()));
        true
    });
    Ok(out)
}

/// True if `sigma` maps `a` homomorphically into `b`.
pub fn is_homomorphism<S: Structure>(a: &S, b: &S, sigma: &[usize]) -> bool {
    let w = a.width();
    sigma.len() == a.n()
        && sigma.iter().all(|&v| v < b.n())
        && (0..a.n()).all(|x| {
            (0..a.n()).all(|y| {
                let out = a.eval(x, y);
                let img = b.eval(sigma[x], sigma[y]);
                (0..w).all(|i| sigma[out[i]] == img[i])
            })
        })
}
