//! Closed-form counts of Dyck paths by bounce composition.

use crate::dyck::Composition;
use crate::poly::Coefficient;

/// `C(n, k)`, computed by the exact multiplicative recurrence.
pub fn binomial<C: Coefficient>(n: u32, k: u32) -> C {
    if k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    let mut acc = C::one();
    for i in 0..k {
        acc = acc * C::from(n - i) / C::from(i + 1);
    }
    acc
}

pub fn factorial<C: Coefficient>(n: u32) -> C {
    (1..=n).fold(C::one(), |acc, i| acc * C::from(i))
}

pub fn catalan<C: Coefficient>(n: u32) -> C {
    binomial::<C>(2 * n, n) / C::from(n + 1)
}

fn adjacent_product<C: Coefficient>(c: &Composition, term: impl Fn(u32, u32) -> C) -> C {
    c.parts().windows(2).fold(C::one(), |acc, w| acc * term(w[0], w[1]))
}

/// Paths whose bounce composition is `c`: `prod C(c_i + c_{i+1} - 1, c_{i+1})`.
pub fn count_by_bcomp<C: Coefficient>(c: &Composition) -> C {
    adjacent_product(c, |a, b| binomial(a + b - 1, b))
}

/// Paths with bounce composition `c` and as many peaks as their bounce
/// path: `c_1 c_2 ... c_{k-1}`.
pub fn count_pk_eq_bpk_by_bcomp<C: Coefficient>(c: &Composition) -> C {
    let parts = c.parts();
    parts[..parts.len() - 1].iter().fold(C::one(), |acc, &p| acc * C::from(p))
}

/// Paths with bounce composition `c` whose every bounce peak is a peak of
/// the path: `prod C(c_i + c_{i+1} - 2, c_{i+1} - 1)`.
pub fn count_peakmatch_by_bcomp<C: Coefficient>(c: &Composition) -> C {
    adjacent_product(c, |a, b| binomial(a + b - 2, b - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::DyckPath;
    use num_bigint::BigUint;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn binomials_and_catalan() {
        assert_eq!(binomial::<u64>(10, 3), 120);
        assert_eq!(binomial::<u64>(3, 5), 0);
        assert_eq!((0..8).map(catalan::<u64>).collect::<Vec<_>>(), [1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(factorial::<u64>(9), 362_880);
        assert_eq!(binomial::<BigUint>(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn formula_values() {
        assert_eq!(count_pk_eq_bpk_by_bcomp::<u64>(&comp(&[2, 3, 3])), 6);
        assert_eq!(count_by_bcomp::<u64>(&comp(&[2, 1])), 2);
        for f in [count_by_bcomp::<u64>, count_pk_eq_bpk_by_bcomp::<u64>, count_peakmatch_by_bcomp::<u64>] {
            assert_eq!(f(&comp(&[5])), 1);
        }
    }

    #[test]
    fn bcomp_21_paths_by_enumeration() {
        let hits: Vec<String> =
            DyckPath::enumerate(3).filter(|d| d.bcomp() == comp(&[2, 1])).map(|d| d.to_string()).collect();
        assert_eq!(hits, ["UUDUDD", "UUDDUD"]);
    }
}
