use crate::error::{Error, Result};
use crate::orderstruct::Poset;
use crate::partitions::{partitions_of, Cell, Partition};

use super::{enumerate_p_tableaux, enumerate_srht, PTableau, RimHook, SpecialRimHookTabloid};

/// A P-tableau together with a special rim hook tabloid of the same shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecialRimHookPTableau {
    tableau: PTableau,
    tabloid: SpecialRimHookTabloid,
}

impl SpecialRimHookPTableau {
    pub fn new(tableau: PTableau, tabloid: SpecialRimHookTabloid) -> Result<Self> {
        if tableau.shape() != tabloid.shape() {
            return Err(Error::InvalidTabloid(format!(
                "tableau shape {} differs from tabloid shape {}",
                tableau.shape(),
                tabloid.shape()
            )));
        }
        Ok(SpecialRimHookPTableau { tableau, tabloid })
    }

    pub fn tableau(&self) -> &PTableau {
        &self.tableau
    }

    pub fn tabloid(&self) -> &SpecialRimHookTabloid {
        &self.tabloid
    }

    pub fn shape(&self) -> &Partition {
        self.tableau.shape()
    }

    pub fn sign(&self) -> i64 {
        self.tabloid.sign()
    }
}

/// Every special rim hook P-tableau of type `lambda`, shapes in canonical order.
pub fn enumerate_srhpt(poset: &Poset, lambda: &Partition) -> Result<Vec<SpecialRimHookPTableau>> {
    if lambda.size() != poset.len() {
        return Err(Error::SizeMismatch {
            expected: poset.len(),
            found: lambda.size(),
        });
    }
    let mut out = Vec::new();
    for mu in partitions_of(poset.len()) {
        let tabloids = enumerate_srht(&mu, Some(lambda));
        if tabloids.is_empty() {
            continue;
        }
        for t in enumerate_p_tableaux(poset, &mu)? {
            for r in &tabloids {
                out.push(SpecialRimHookPTableau {
                    tableau: t.clone(),
                    tabloid: r.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The sign-reversing involution on special rim hook P-tableaux of non-hook
/// shape. With `H1` the hook through (1,1) and `H2` the hook through (2,2):
/// if `H2` reaches row 1, its row-1 cells move to `H1`; otherwise, with
/// `(2,m)` the rightmost cell of `H2`, the row-1 cells of `H1` in columns
/// `≥ m` move to `H2`. The P-tableau and all other hooks are untouched.
pub fn sigma(t: &SpecialRimHookPTableau) -> Result<SpecialRimHookPTableau> {
    Ok(SpecialRimHookPTableau {
        tableau: t.tableau.clone(),
        tabloid: sigma_tabloid(&t.tabloid)?,
    })
}

pub fn sigma_tabloid(tabloid: &SpecialRimHookTabloid) -> Result<SpecialRimHookTabloid> {
    let shape = tabloid.shape();
    if shape.is_hook()? {
        return Err(Error::IsAHook(shape.to_string()));
    }
    let i1 = tabloid.hook_index_at(Cell::new(1, 1)).expect("tabloid covers (1,1)");
    let i2 = tabloid.hook_index_at(Cell::new(2, 2)).expect("tabloid covers (2,2)");
    if i1 == i2 {
        return Err(Error::InvalidTabloid("(1,1) and (2,2) lie in the same hook".into()));
    }
    let h1 = tabloid.hooks()[i1].cells();
    let h2 = tabloid.hooks()[i2].cells();
    let (new1, new2): (Vec<Cell>, Vec<Cell>) = if h2.iter().any(|c| c.row == 1) {
        let moved = h2.iter().filter(|c| c.row == 1);
        (
            h1.iter().chain(moved).copied().collect(),
            h2.iter().filter(|c| c.row != 1).copied().collect(),
        )
    } else {
        let m = h2
            .iter()
            .filter(|c| c.row == 2)
            .map(|c| c.col)
            .max()
            .expect("H2 contains (2,2)");
        let moves = |c: &&Cell| c.row == 1 && c.col >= m;
        (
            h1.iter().filter(|c| !moves(c)).copied().collect(),
            h2.iter().chain(h1.iter().filter(moves)).copied().collect(),
        )
    };
    let mut hooks: Vec<RimHook> = tabloid.hooks().to_vec();
    hooks[i1] = RimHook::new(new1)?;
    hooks[i2] = RimHook::new(new2)?;
    let out = SpecialRimHookTabloid::from_hooks_unchecked(shape.clone(), hooks);
    debug_assert!(out.check().is_ok(), "sigma produced an invalid tabloid");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p3() -> Poset {
        Poset::from_relations(3, &[(0, 2)]).unwrap()
    }

    fn signed(ts: &[SpecialRimHookPTableau]) -> i64 {
        ts.iter().map(SpecialRimHookPTableau::sign).sum()
    }

    #[test]
    fn path_poset_objects() {
        let all = enumerate_srhpt(&p3(), &p("3")).unwrap();
        assert_eq!(all.len(), 5);
        assert_eq!(all.iter().filter(|t| t.shape() == &p("3") && t.sign() == 1).count(), 4);
        assert_eq!(all.iter().filter(|t| t.shape() == &p("2,1") && t.sign() == -1).count(), 1);
        assert_eq!(signed(&all), 3);

        let all = enumerate_srhpt(&p3(), &p("2,1")).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].shape(), &p("2,1"));
        assert_eq!(all[0].sign(), 1);

        assert_eq!(signed(&enumerate_srhpt(&p3(), &p("1,1,1")).unwrap()), 0);
        assert_eq!(signed(&enumerate_srhpt(&Poset::antichain(1), &p("1")).unwrap()), 1);
        assert!(enumerate_srhpt(&p3(), &p("2")).is_err());
    }

    #[test]
    fn sigma_on_two_rows() {
        let cells = |v: &[(usize, usize)]| v.iter().map(|&(r, c)| Cell::new(r, c)).collect::<Vec<_>>();
        let rows = SpecialRimHookTabloid::new(
            p("2,2"),
            vec![
                RimHook::new(cells(&[(1, 1), (1, 2)])).unwrap(),
                RimHook::new(cells(&[(2, 1), (2, 2)])).unwrap(),
            ],
        )
        .unwrap();
        let image = sigma_tabloid(&rows).unwrap();
        let expected = SpecialRimHookTabloid::new(
            p("2,2"),
            vec![
                RimHook::new(cells(&[(1, 1)])).unwrap(),
                RimHook::new(cells(&[(2, 1), (2, 2), (1, 2)])).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(image, expected);
        assert_eq!(rows.sign(), 1);
        assert_eq!(image.sign(), -1);
        assert_eq!(sigma_tabloid(&image).unwrap(), rows);
    }

    #[test]
    fn sigma_is_a_sign_reversing_involution_on_tabloids() {
        for d in 4..=8 {
            for mu in partitions_of(d) {
                if mu.is_hook().unwrap() {
                    continue;
                }
                let all = enumerate_srht(&mu, None);
                for t in &all {
                    let s = sigma_tabloid(t).unwrap();
                    s.check().unwrap();
                    assert_eq!(s.sign(), -t.sign());
                    assert_eq!(s.hook_count(), t.hook_count());
                    assert_eq!(&sigma_tabloid(&s).unwrap(), t);
                    assert!(all.contains(&s));
                }
            }
        }
    }

    #[test]
    fn sigma_refuses_hooks() {
        let t = enumerate_srht(&p("3,1"), None).remove(0);
        assert!(matches!(sigma_tabloid(&t), Err(Error::IsAHook(_))));
    }
}
