//! Canon descent polynomials and the classical polynomials they relate to.

use rayon::prelude::*;

use crate::canon::{DescentCounter, RectTableau};
use crate::counting::binomial;
use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::perm::{next_permutation, Permutation};
use crate::poly::{Coefficient, Polynomial};

pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 9;

pub(crate) fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::BruteForceBoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

/// Visit every permutation of `S_n`, split into blocks by first entry that
/// are processed in parallel and merged in block order.
pub(crate) fn sweep_permutations<T, V, M>(n: usize, init: impl Fn() -> T + Sync, visit: V, merge: M) -> T
where
    T: Send,
    V: Fn(&mut T, &[u8]) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    if n == 0 {
        return init();
    }
    let blocks: Vec<T> = (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut sigma: Vec<u8> = std::iter::once(first).chain((1..=n as u8).filter(|&v| v != first)).collect();
            loop {
                visit(&mut acc, &sigma);
                if !next_permutation(&mut sigma[1..]) {
                    break;
                }
            }
            acc
        })
        .collect();
    blocks.into_iter().reduce(merge).expect("n >= 1 gives at least one block")
}

fn add_histograms(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Descent-count histogram of `can(d, sigma)` over all `sigma` accepted by `keep`.
fn path_histogram(d: &DyckPath, keep: impl Fn(&[u8]) -> bool + Sync) -> Vec<u64> {
    let counter = DescentCounter::new(d);
    let len = d.len().max(1);
    sweep_permutations(
        d.semilength(),
        || vec![0u64; len],
        |h, sigma| {
            if keep(sigma) {
                h[counter.count(sigma)] += 1;
            }
        },
        add_histograms,
    )
}

/// `C_d(t)`, by enumerating all `n!` labelings.
pub fn canon_descent_poly<C: Coefficient>(d: &DyckPath, bound: usize) -> Result<Polynomial<C>> {
    check_bound(d.semilength(), bound)?;
    Ok(Polynomial::from_counts(&path_histogram(d, |_| true)))
}

/// The restriction of `C_d(t)` to labelings whose first entry is 1 or n.
pub fn tilde_poly<C: Coefficient>(d: &DyckPath, bound: usize) -> Result<Polynomial<C>> {
    let n = d.semilength();
    check_bound(n, bound)?;
    Ok(Polynomial::from_counts(&path_histogram(d, |s| s[0] == 1 || s[0] as usize == n)))
}

/// `sum_d C_d(t)` over all paths of semilength `n`.
pub fn canon_poly_all<C: Coefficient>(n: usize, bound: usize) -> Result<Polynomial<C>> {
    check_bound(n, bound)?;
    let total =
        DyckPath::enumerate(n).map(|d| path_histogram(&d, |_| true)).fold(vec![0u64; 2 * n.max(1)], add_histograms);
    Ok(Polynomial::from_counts(&total))
}

/// `sum_d t^des(d, sigma)` over all paths of semilength `|sigma|`.
pub fn fixed_sigma_poly<C: Coefficient>(sigma: &Permutation, bound: usize) -> Result<Polynomial<C>> {
    let n = sigma.len();
    check_bound(n, bound)?;
    let mut counts = vec![0u64; 2 * n.max(1)];
    for d in DyckPath::enumerate(n) {
        counts[DescentCounter::new(&d).count(sigma.entries())] += 1;
    }
    Ok(Polynomial::from_counts(&counts))
}

/// `C_T(t)` for a rectangular tableau.
pub fn tableau_descent_poly<C: Coefficient>(t: &RectTableau, bound: usize) -> Result<Polynomial<C>> {
    let n = t.num_rows();
    check_bound(n, bound)?;
    let slots = t.slot_indices();
    let pairs: Vec<(u8, u8)> = slots.windows(2).filter(|w| w[0] != w[1]).map(|w| (w[0], w[1])).collect();
    let len = slots.len();
    let counts = sweep_permutations(
        n,
        || vec![0u64; len],
        |h, sigma| {
            let des = pairs.iter().filter(|&&(a, b)| sigma[a as usize] > sigma[b as usize]).count();
            h[des] += 1;
        },
        add_histograms,
    );
    Ok(Polynomial::from_counts(&counts))
}

/// Eulerian polynomial `A_n(t)` from `A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1)`.
pub fn eulerian<C: Coefficient>(n: usize) -> Polynomial<C> {
    assert!(n >= 1, "Eulerian polynomials start at n = 1");
    let mut row = vec![C::one()];
    for m in 2..=n {
        let mut next = vec![C::zero(); m];
        for (k, slot) in next.iter_mut().enumerate() {
            let stay = if k < row.len() { C::from(k as u32 + 1) * row[k].clone() } else { C::zero() };
            let bump = if k >= 1 { C::from((m - k) as u32) * row[k - 1].clone() } else { C::zero() };
            *slot = stay + bump;
        }
        row = next;
    }
    Polynomial::from_coeffs(row)
}

/// Narayana polynomial `N_n(t) = sum_r C(n,r) C(n,r+1) / n * t^r`.
pub fn narayana<C: Coefficient>(n: usize) -> Polynomial<C> {
    assert!(n >= 1, "Narayana polynomials start at n = 1");
    let n32 = n as u32;
    Polynomial::from_coeffs(
        (0..n32).map(|r| binomial::<C>(n32, r) * binomial::<C>(n32, r + 1) / C::from(n32)).collect(),
    )
}

/// The refined Eulerian polynomial `~A_n(t, u)`, split by powers of `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedEulerian<C: Coefficient> {
    /// Coefficient of `u^0`: permutations ending below their first entry.
    pub without_u: Polynomial<C>,
    /// Coefficient of `u^1`: permutations ending above their first entry.
    pub with_u: Polynomial<C>,
}

impl<C: Coefficient> RefinedEulerian<C> {
    /// `~A_n(t^2, t)`.
    pub fn at_square_and_t(&self) -> Polynomial<C> {
        &self.without_u.substitute_power(2) + &self.with_u.substitute_power(2).shift(1)
    }
}

/// `~A_n(t, u) = t^(n-1) f(1/t) + u f(t)` with `f = (t A_{n-1}(t))'`.
pub fn eulerian_tilde<C: Coefficient>(n: usize) -> RefinedEulerian<C> {
    assert!(n >= 2, "the refined Eulerian polynomial needs n >= 2");
    let f = eulerian::<C>(n - 1).shift(1).derivative();
    RefinedEulerian { without_u: f.reflect(n - 1), with_u: f }
}
