//! A curated catalog of transvectant chains per form degree: named
//! covariants and at least one invariant in every low degree where the
//! invariant ring has one.
//!
//! Entries are validated by their behavior (declared order and degree,
//! SL(2)-invariance, generic nonvanishing), not by asserted closed forms:
//! the classical literature names most of these invariants without ever
//! writing them down.

use super::{FormsError, InvariantChain};

/// One named chain with its declared coefficient degree and order.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub n: u32,
    pub degree: u64,
    pub order: u32,
    pub chain: InvariantChain,
}

fn f() -> InvariantChain {
    InvariantChain::form()
}

fn t(lhs: InvariantChain, rhs: InvariantChain, k: u32) -> InvariantChain {
    InvariantChain::transvect(lhs, rhs, k)
}

fn prod(lhs: InvariantChain, rhs: InvariantChain) -> InvariantChain {
    InvariantChain::product(lhs, rhs)
}

fn pw(base: InvariantChain, e: u32) -> InvariantChain {
    InvariantChain::power(base, e)
}

fn entry(
    name: &'static str,
    n: u32,
    degree: u64,
    order: u32,
    chain: InvariantChain,
) -> CatalogEntry {
    CatalogEntry {
        name,
        n,
        degree,
        order,
        chain,
    }
}

/// All catalog entries for forms of degree `n` (2 through 8).
pub fn catalog(n: u32) -> Vec<CatalogEntry> {
    match n {
        2 => {
            let i2 = t(f(), f(), 2);
            vec![
                entry("n2.i2", 2, 2, 0, i2.clone()),
                entry("n2.i4", 2, 4, 0, pw(i2.clone(), 2)),
                entry("n2.i6", 2, 6, 0, pw(i2, 3)),
            ]
        }
        3 => {
            let hess = t(f(), f(), 2);
            vec![
                entry("n3.hessian", 3, 2, 2, hess.clone()),
                entry("n3.i4", 3, 4, 0, t(hess.clone(), hess, 2)),
            ]
        }
        4 => {
            let hess = t(f(), f(), 2);
            let i2 = t(f(), f(), 4);
            let i3 = t(hess.clone(), f(), 4);
            vec![
                entry("n4.hessian", 4, 2, 4, hess),
                entry("n4.i2", 4, 2, 0, i2.clone()),
                entry("n4.i3", 4, 3, 0, i3.clone()),
                entry("n4.i4", 4, 4, 0, pw(i2.clone(), 2)),
                entry("n4.i5", 4, 5, 0, prod(i2.clone(), i3.clone())),
                entry("n4.i6", 4, 6, 0, pw(i3.clone(), 2)),
                entry("n4.i7", 4, 7, 0, prod(pw(i2, 2), i3)),
            ]
        }
        5 => {
            let j = t(f(), f(), 4); // order 2, degree 2
            let hess = t(f(), f(), 2); // order 6, degree 2
            let tcov = t(f(), hess.clone(), 1); // order 9, degree 3
            let alpha = t(pw(j.clone(), 2), f(), 4); // linear, degree 5
            let l13 = t(tcov, pw(j.clone(), 5), 9); // linear, degree 13
            vec![
                entry("n5.j", 5, 2, 2, j.clone()),
                entry("n5.hessian", 5, 2, 6, hess.clone()),
                entry("n5.alpha", 5, 5, 1, alpha.clone()),
                entry("n5.i4", 5, 4, 0, t(j.clone(), j.clone(), 2)),
                entry("n5.i8", 5, 8, 0, t(hess, pw(j.clone(), 3), 6)),
                entry("n5.i12", 5, 12, 0, t(pw(f(), 2), pw(j, 5), 10)),
                // the unique (skew) degree-18 invariant: the wedge of the
                // two independent linear covariants of degrees 5 and 13
                entry("n5.i18", 5, 18, 0, t(alpha, l13, 1)),
            ]
        }
        6 => {
            let m4 = t(f(), f(), 4); // order 4, degree 2
            let ell = t(f(), m4.clone(), 4); // order 2, degree 3
            let m44 = t(m4.clone(), m4.clone(), 2); // order 4, degree 4
            vec![
                entry("n6.m4", 6, 2, 4, m4.clone()),
                entry("n6.ell", 6, 3, 2, ell.clone()),
                entry("n6.i2", 6, 2, 0, t(f(), f(), 6)),
                entry("n6.i4", 6, 4, 0, t(m4.clone(), m4.clone(), 4)),
                entry("n6.i6", 6, 6, 0, t(m44.clone(), m4, 4)),
                entry("n6.i10", 6, 10, 0, t(pw(ell, 2), m44, 4)),
            ]
        }
        7 => {
            let psi = t(f(), f(), 6); // order 2, degree 2
            let psi1 = t(f(), f(), 2); // order 10, degree 2
            let psi2 = t(f(), f(), 4); // order 6, degree 2
            let psi3 = t(psi2.clone(), psi2.clone(), 4); // order 4, degree 4
            let fpsi2_5 = t(f(), psi2.clone(), 5); // order 3, degree 3
            vec![
                entry("n7.psi", 7, 2, 2, psi.clone()),
                entry("n7.psi1", 7, 2, 10, psi1.clone()),
                entry("n7.psi2", 7, 2, 6, psi2.clone()),
                entry("n7.psi3", 7, 4, 4, psi3.clone()),
                entry("n7.i4", 7, 4, 0, t(psi.clone(), psi.clone(), 2)),
                entry(
                    "n7.i8_psi2",
                    7,
                    8,
                    0,
                    t(psi2.clone(), pw(psi.clone(), 3), 6),
                ),
                entry(
                    "n7.i8_psi3",
                    7,
                    8,
                    0,
                    t(psi3.clone(), pw(psi.clone(), 2), 4),
                ),
                entry("n7.i12", 7, 12, 0, t(psi1.clone(), pw(psi.clone(), 5), 10)),
                entry(
                    "n7.i14_chain",
                    7,
                    14,
                    0,
                    t(t(psi2.clone(), psi3.clone(), 1), pw(psi.clone(), 4), 8),
                ),
                entry(
                    "n7.i14_product",
                    7,
                    14,
                    0,
                    t(prod(f(), fpsi2_5.clone()), pw(psi.clone(), 5), 10),
                ),
                entry(
                    "n7.i18_chain",
                    7,
                    18,
                    0,
                    t(t(psi1, psi2.clone(), 1), pw(psi.clone(), 7), 14),
                ),
                entry(
                    "n7.i18_product",
                    7,
                    18,
                    0,
                    t(prod(f(), t(fpsi2_5, psi2, 2)), pw(psi, 6), 12),
                ),
            ]
        }
        8 => {
            let g = t(f(), f(), 6); // order 4, degree 2
            let p = t(f(), f(), 4); // order 8, degree 2
            let u = t(f(), g.clone(), 4); // order 4, degree 3
            let v = t(g.clone(), g.clone(), 2); // order 4, degree 4
            vec![
                entry("n8.g", 8, 2, 4, g.clone()),
                entry("n8.p", 8, 2, 8, p.clone()),
                entry("n8.u", 8, 3, 4, u.clone()),
                entry("n8.i2", 8, 2, 0, t(f(), f(), 8)),
                entry("n8.i3", 8, 3, 0, t(p, f(), 8)),
                entry("n8.i4", 8, 4, 0, t(g.clone(), g.clone(), 4)),
                entry("n8.i5", 8, 5, 0, t(u.clone(), g, 4)),
                entry("n8.i6", 8, 6, 0, t(u.clone(), u.clone(), 4)),
                entry("n8.i7", 8, 7, 0, t(u, v, 4)),
            ]
        }
        _ => Vec::new(),
    }
}

/// The invariant (order-0) entries for `n`.
pub fn invariants(n: u32) -> Vec<CatalogEntry> {
    catalog(n).into_iter().filter(|e| e.order == 0).collect()
}

/// Looks up a catalog entry by its name.
pub fn find(name: &str) -> Option<CatalogEntry> {
    (2..=8u32).flat_map(catalog).find(|e| e.name == name)
}

/// Name + shape listing for the CLI.
pub fn describe(n: u32) -> Vec<(String, u64, u32)> {
    catalog(n)
        .into_iter()
        .map(|e| (e.name.to_string(), e.degree, e.order))
        .collect()
}

/// Declared bookkeeping must match the structural computation; this is a
/// constructor-time sanity check used by tests.
pub fn validate_bookkeeping(entry: &CatalogEntry) -> Result<(), FormsError> {
    let order = entry.chain.order(entry.n)?;
    assert_eq!(
        order, entry.order,
        "{}: declared order {} but chain computes {}",
        entry.name, entry.order, order
    );
    let degree = entry.chain.coefficient_degree();
    assert_eq!(
        degree, entry.degree,
        "{}: declared degree {} but chain computes {}",
        entry.name, entry.degree, degree
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::invariant_dim;
    use num_traits::Zero;

    #[test]
    fn bookkeeping_is_consistent() {
        for n in 2..=8u32 {
            for e in catalog(n) {
                validate_bookkeeping(&e).unwrap();
            }
        }
    }

    #[test]
    fn catalog_covers_required_degrees() {
        // every even n: one invariant per degree 2..=7 with a nonzero space;
        // the quintic: degrees 4, 8, 12, 18
        for n in [2u32, 4, 6, 8] {
            for d in 2..=7u64 {
                if invariant_dim(n, d as u32).is_zero() {
                    continue;
                }
                assert!(
                    invariants(n).iter().any(|e| e.degree == d),
                    "missing degree-{d} invariant for n={n}"
                );
            }
        }
        for d in [4u64, 8, 12, 18] {
            assert!(
                invariants(5).iter().any(|e| e.degree == d),
                "missing degree-{d} invariant for n=5"
            );
        }
    }

    #[test]
    fn find_by_name() {
        assert!(find("n7.psi").is_some());
        assert!(find("n7.i18_chain").is_some());
        assert!(find("nope").is_none());
    }
}
