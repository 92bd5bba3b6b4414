//! P-tableaux, special rim hook tabloids, their pairing, the sign-reversing
//! involution on non-hook shapes, and the hook-tableau/orientation
//! correspondence.

mod hook_orientation;
mod ptableau;
mod rimhook;
mod srhpt;

pub use hook_orientation::{hook_tableaux_inducing, orientation_from_hook_tableau};
pub use ptableau::{enumerate_p_tableaux, PTableau};
pub use rimhook::{enumerate_srht, RimHook, SpecialRimHookTabloid};
pub use srhpt::{enumerate_srhpt, sigma, sigma_tabloid, SpecialRimHookPTableau};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{partitions_of, Cell, Partition};
    use std::collections::HashSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn vertical_domino() {
        let t = enumerate_srht(&p("1,1"), Some(&p("2")));
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].sign(), -1);
    }

    #[test]
    fn square() {
        let all = enumerate_srht(&p("2,2"), None);
        assert_eq!(all.len(), 2);
        let by_type = |ty: &str| enumerate_srht(&p("2,2"), Some(&p(ty)));
        let rows = by_type("2,2");
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].sign(), 1);
        assert_eq!(rows[0].hooks()[0].cells(), &[Cell::new(1, 1), Cell::new(1, 2)]);
        let bent = by_type("3,1");
        assert_eq!(bent.len(), 1);
        assert_eq!(bent[0].sign(), -1);
        assert!(by_type("4").is_empty());
        assert!(by_type("1,1,1,1").is_empty());
        assert!(enumerate_srht(&p("2,2"), Some(&p("3"))).is_empty());
    }

    #[test]
    fn every_tabloid_is_valid_and_distinct() {
        for d in 0..=8 {
            for mu in partitions_of(d) {
                let all = enumerate_srht(&mu, None);
                let set: HashSet<&SpecialRimHookTabloid> = all.iter().collect();
                assert_eq!(set.len(), all.len(), "{mu}");
                for t in &all {
                    t.check().unwrap();
                    assert!(t.hooks().iter().all(RimHook::is_special));
                    assert_eq!(t.hooks().iter().map(RimHook::size).sum::<usize>(), d);
                }
            }
        }
    }

    #[test]
    fn hook_shapes_count_compositions_with_fixed_sign() {
        for d in 1..=7 {
            for k in 1..=d {
                let mu = Partition::hook(d, k).unwrap();
                let all = enumerate_srht(&mu, None);
                for l in 1..=k {
                    let with_l: Vec<_> = all.iter().filter(|t| t.hook_count() == l).collect();
                    assert_eq!(with_l.len(), binomial(k - 1, l - 1), "{mu}, {l} hooks");
                    let sign = if (k - l) % 2 == 0 { 1 } else { -1 };
                    assert!(with_l.iter().all(|t| t.sign() == sign));
                }
                for lambda in partitions_of(d) {
                    let sign = if (k + lambda.len()) % 2 == 0 { 1 } else { -1 };
                    assert!(enumerate_srht(&mu, Some(&lambda)).iter().all(|t| t.sign() == sign));
                }
            }
        }
    }

    #[test]
    fn invalid_tabloids_are_rejected() {
        let cells = |v: &[(usize, usize)]| v.iter().map(|&(r, c)| Cell::new(r, c)).collect::<Vec<_>>();
        // hook missing column 1
        let bad = SpecialRimHookTabloid::new(
            p("2"),
            vec![RimHook::new(cells(&[(1, 1)])).unwrap(), RimHook::new(cells(&[(1, 2)])).unwrap()],
        );
        assert!(bad.is_err());
        // not peelable: top row taken first would strand row 2
        let bad = SpecialRimHookTabloid::new(
            p("2,1"),
            vec![RimHook::new(cells(&[(1, 1), (1, 2)])).unwrap(), RimHook::new(cells(&[(2, 1)])).unwrap()],
        );
        assert!(bad.is_ok(), "row 2 then row 1 is a valid peel");
        let bad = SpecialRimHookTabloid::new(
            p("3,1"),
            vec![
                RimHook::new(cells(&[(1, 1), (1, 2)])).unwrap(),
                RimHook::new(cells(&[(2, 1)])).unwrap(),
                RimHook::new(cells(&[(1, 3)])).unwrap(),
            ],
        );
        assert!(bad.is_err());
        assert!(RimHook::new(cells(&[(1, 1), (1, 2), (2, 1), (2, 2)])).is_err());
        assert!(RimHook::new(cells(&[(1, 1), (1, 3)])).is_err());
    }

    #[test]
    fn rendering() {
        let t = enumerate_srht(&p("2,2"), Some(&p("3,1"))).remove(0);
        assert_eq!(t.to_string(), "1 2\n2 2\ntype=3,1 sign=-1\n");
    }
}
