//! Derived ordered semigroups.

use crate::classify::Classifier;
use crate::error::{Error, Result};
use crate::semigroup::{default_names, validate_named, OrderedSemigroup};
use crate::set::ElementSet;
use crate::verdict::Verdict;

/// A plain semigroup viewed as an ordered one under the discrete order.
pub fn from_plain(table: &[Vec<usize>]) -> Result<OrderedSemigroup> {
    Ok(OrderedSemigroup::discrete(
        default_names(table.len()),
        table,
    )?)
}

/// The semigroup of nonempty subsets of `f` under `AB = {ab}`, ordered by inclusion.
///
/// `f` must carry the discrete order. Subsets are numbered by their bitmask
/// (the subset with bitmask `k` is element `k - 1`) and named `{x,y,...}`.
pub fn power_semigroup(f: &OrderedSemigroup, max_n: usize) -> Result<OrderedSemigroup> {
    if !f.is_discrete() {
        return Err(Error::NotDiscrete);
    }
    let m = f.n();
    let size = if m >= 127 {
        usize::MAX
    } else {
        (1usize << m) - 1
    };
    if size > max_n {
        return Err(Error::SizeBound {
            what: "the power semigroup",
            n: size,
            max: max_n,
        });
    }
    let subsets: Vec<ElementSet> = (1..=size as u128).map(ElementSet::from_bits).collect();
    let index = |a: ElementSet| a.bits() as usize - 1;
    let table: Vec<Vec<usize>> = subsets
        .iter()
        .map(|&a| {
            subsets
                .iter()
                .map(|&b| index(f.set_product(a, b)))
                .collect()
        })
        .collect();
    let leq: Vec<Vec<bool>> = subsets
        .iter()
        .map(|&a| subsets.iter().map(|&b| a.is_subset(b)).collect())
        .collect();
    let names = subsets.iter().map(|&a| f.format_set(a)).collect();
    Ok(validate_named(names, &table, &leq)?)
}

/// The classical right inverse property, decided through the discrete order.
pub fn is_right_inverse_plain(f: &OrderedSemigroup) -> Result<Verdict> {
    if !f.is_discrete() {
        return Err(Error::NotDiscrete);
    }
    Ok(Classifier::new(f).is_right_inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{principal_ideal, Side};

    fn right_zero() -> OrderedSemigroup {
        from_plain(&[vec![0, 1], vec![0, 1]]).unwrap()
    }

    fn left_zero() -> OrderedSemigroup {
        from_plain(&[vec![0, 0], vec![1, 1]]).unwrap()
    }

    #[test]
    fn from_plain_examples() {
        assert!(is_right_inverse_plain(&right_zero()).unwrap().holds());
        assert!(!is_right_inverse_plain(&left_zero()).unwrap().holds());
        let t = from_plain(&[vec![0]]).unwrap();
        assert_eq!(t.n(), 1);
        assert!(from_plain(&[vec![1, 0], vec![0, 0]]).is_err());
    }

    #[test]
    fn power_of_trivial_is_trivial() {
        let p = power_semigroup(&from_plain(&[vec![0]]).unwrap(), 12).unwrap();
        assert_eq!(p.n(), 1);
        assert_eq!(p.name(0), "{a}");
    }

    #[test]
    fn power_of_right_zero() {
        let p = power_semigroup(&right_zero(), 12).unwrap();
        assert_eq!(p.names(), &["{a}", "{b}", "{a,b}"]);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(p.mul(x, y), y);
            }
        }
        assert!(p.leq(0, 2) && p.leq(1, 2) && !p.leq(0, 1));
        assert!(Classifier::new(&p).is_right_inverse().holds());
    }

    #[test]
    fn power_of_left_zero() {
        let p = power_semigroup(&left_zero(), 12).unwrap();
        let (e, f) = (0, 1);
        assert_eq!(principal_ideal(&p, e, Side::Left), p.carrier());
        assert_eq!(principal_ideal(&p, f, Side::Left), p.carrier());
        assert_eq!(
            principal_ideal(&p, e, Side::Right),
            ElementSet::singleton(e)
        );
        assert_ne!(
            principal_ideal(&p, f, Side::Right),
            principal_ideal(&p, e, Side::Right)
        );
        assert!(!Classifier::new(&p).is_right_inverse().holds());
    }

    #[test]
    fn power_size_bound_and_discreteness() {
        let four = from_plain(&vec![vec![0, 0, 0, 0]; 4]).unwrap();
        assert!(matches!(
            power_semigroup(&four, 12),
            Err(Error::SizeBound { .. })
        ));
        assert!(power_semigroup(&four, 15).is_ok());
        let chain =
            crate::format::parse("osg v1\nelements: a b\ntable:\na a\na a\norder:\na <= b\n")
                .unwrap();
        assert!(matches!(
            power_semigroup(&chain, 12),
            Err(Error::NotDiscrete)
        ));
    }
}
