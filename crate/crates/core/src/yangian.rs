//! Yangian data of the multiplicity space: the highest weight series
//! lambda_{m+p}(u), the Drinfeld polynomials P_k(u), and the exact
//! identities tying them together.

use num_traits::One;

use crate::error::Result;
use crate::poly::Poly;
use crate::ratio::Ratio;
use crate::shape::{drinfeld_row_contents, SkewShapeParams};
use crate::weight::CovariantWeight;

/// A reduced ratio of polynomials in u; the denominator is monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_zero() || g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        if let Some(lead) = den.leading() {
            if !lead.is_one() {
                let inv = Ratio::one() / lead.clone();
                num = num.scale(&inv);
                den = den.scale(&inv);
            }
        }
        RationalFunction { num, den }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Exact equality of `self` and `a/b` by cross multiplication.
    pub fn equals_fraction(&self, a: &Poly, b: &Poly) -> bool {
        self.num.mul(b) == self.den.mul(a)
    }
}

/// Monic Drinfeld polynomials P_1 .. P_{n-1}, stored with their integer
/// roots (the contents of the leftmost boxes of the skew rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrinfeldSet {
    polys: Vec<Poly>,
    roots: Vec<Vec<i64>>,
}

impl DrinfeldSet {
    /// P_k(u), 1-based k.
    pub fn poly(&self, k: usize) -> &Poly {
        &self.polys[k - 1]
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    /// Integer roots of P_k, 1-based k.
    pub fn roots(&self, k: usize) -> &[i64] {
        &self.roots[k - 1]
    }

    pub fn all_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }
}

/// The eigenvalue series lambda_{m+p}(u) of the Yangian diagonal generator
/// t_pp(u) on the highest vector of the multiplicity space:
///
///   (u + lambda_{m+p} + m)/(u + m) * prod over { i : lambda_i - mu_i >= p }
///   of (u - mu_i + i)/(u - mu_i + i - 1).
pub fn highest_weight_series(
    lambda: &CovariantWeight,
    mu: &[i64],
    p: usize,
) -> Result<RationalFunction> {
    SkewShapeParams::new(lambda, mu)?;
    let m = lambda.dims().m() as i64;
    let mut num = Poly::u_plus(lambda.component(lambda.dims().m() + p) + m);
    let mut den = Poly::u_plus(m);
    for i in 1..=lambda.dims().m() {
        if lambda.even()[i - 1] - mu[i - 1] >= p as i64 {
            num = num.mul(&Poly::u_plus(-mu[i - 1] + i as i64));
            den = den.mul(&Poly::u_plus(-mu[i - 1] + i as i64 - 1));
        }
    }
    Ok(RationalFunction::new(num, den))
}

/// P_k(u) = prod (u - c(box)) over the leftmost boxes of the rows of length
/// k in Gamma_lambda/mu, for k = 1..n-1.
pub fn drinfeld_polynomials(lambda: &CovariantWeight, mu: &[i64]) -> Result<DrinfeldSet> {
    let n = lambda.dims().n();
    let mut polys = Vec::new();
    let mut roots = Vec::new();
    for k in 1..n {
        let contents = drinfeld_row_contents(lambda, mu, k as i64)?;
        let mut p = Poly::one();
        for &c in &contents {
            p = p.mul(&Poly::u_plus(-c));
        }
        polys.push(p);
        roots.push(contents);
    }
    Ok(DrinfeldSet { polys, roots })
}

/// Per-k outcome of the Drinfeld relation
/// lambda_{m+k}(u)/lambda_{m+k+1}(u) = P_k(u+1)/P_k(u).
#[derive(Debug, Clone)]
pub struct DrinfeldReport {
    pub passed: Vec<usize>,
    pub failed: Vec<usize>,
}

impl DrinfeldReport {
    pub fn all_passed(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Checks the Drinfeld relation for every k as an exact polynomial identity
/// after cross multiplication.
pub fn check_drinfeld_relation(lambda: &CovariantWeight, mu: &[i64]) -> Result<DrinfeldReport> {
    let n = lambda.dims().n();
    let polys = drinfeld_polynomials(lambda, mu)?;
    let mut report = DrinfeldReport {
        passed: vec![],
        failed: vec![],
    };
    for k in 1..n {
        let lhs = {
            let a = highest_weight_series(lambda, mu, k)?;
            let b = highest_weight_series(lambda, mu, k + 1)?;
            // a / b as a cross-multiplied pair.
            (a.num().mul(b.den()), a.den().mul(b.num()))
        };
        let pk = polys.poly(k);
        let ok = lhs.0.mul(pk) == lhs.1.mul(&pk.shift_up());
        if ok {
            report.passed.push(k);
        } else {
            report.failed.push(k);
        }
    }
    Ok(report)
}

/// The identity satisfied by the column counts of the initial filling: for
/// each p = 1..n,
///
///   prod_j (u + l^0_{r+p,j} + p - 1) / prod_j (u + l^0_{r+p-1,j} + p - 1)
///     = (u + lambda_{m+p} + m)(u - r)/(u + m)
///       * prod over { j : lambda_j - mu_j >= p } of (u - sigma_j + 1)/(u - sigma_j),
///
/// verified by exact polynomial cross multiplication.
pub fn check_initial_tableau_identity(
    lambda: &CovariantWeight,
    mu: &[i64],
    p: usize,
) -> Result<bool> {
    let sp = SkewShapeParams::new(lambda, mu)?;
    let m = lambda.dims().m() as i64;
    let r = sp.r() as i64;
    let shift = p as i64 - 1;
    let mut lhs_num = Poly::one();
    for j in 1..=sp.r() + p {
        lhs_num = lhs_num.mul(&Poly::u_plus(sp.l0(p, j) + shift));
    }
    let mut lhs_den = Poly::one();
    for j in 1..=sp.r() + p - 1 {
        lhs_den = lhs_den.mul(&Poly::u_plus(sp.l0(p - 1, j) + shift));
    }
    let mut rhs_num =
        Poly::u_plus(lambda.component(lambda.dims().m() + p) + m).mul(&Poly::u_plus(-r));
    let mut rhs_den = Poly::u_plus(m);
    for j in 1..=lambda.dims().m() {
        if lambda.even()[j - 1] - mu[j - 1] >= p as i64 {
            rhs_num = rhs_num.mul(&Poly::u_plus(-sp.sigma()[j - 1] + 1));
            rhs_den = rhs_den.mul(&Poly::u_plus(-sp.sigma()[j - 1]));
        }
    }
    Ok(lhs_num.mul(&rhs_den) == rhs_num.mul(&lhs_den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::admissible_mus;
    use crate::weight::{enumerate_covariant_weights, SuperDims};

    fn weight(m: usize, n: usize, even: &[i64], odd: &[i64]) -> CovariantWeight {
        CovariantWeight::new(SuperDims::new(m, n).unwrap(), even.to_vec(), odd.to_vec()).unwrap()
    }

    #[test]
    fn gl12_series() {
        let lam = weight(1, 2, &[2], &[1, 0]);
        let f = highest_weight_series(&lam, &[1], 1).unwrap();
        // u(u+2) / ((u+1)(u-1))
        let num = Poly::u_plus(0).mul(&Poly::u_plus(2));
        let den = Poly::u_plus(1).mul(&Poly::u_plus(-1));
        assert!(f.equals_fraction(&num, &den));
        let f2 = highest_weight_series(&lam, &[1], 2).unwrap();
        assert!(f2.equals_fraction(&Poly::one(), &Poly::one()));
    }

    #[test]
    fn full_even_mu_series() {
        let lam = weight(2, 2, &[2, 1], &[1, 0]);
        let m = 2;
        for p in 1..=2usize {
            let f = highest_weight_series(&lam, &[2, 1], p).unwrap();
            let num = Poly::u_plus(lam.component(m + p) + m as i64);
            let den = Poly::u_plus(m as i64);
            assert!(f.equals_fraction(&num, &den), "p = {p}");
        }
    }

    #[test]
    fn gl12_drinfeld_polynomials() {
        let lam = weight(1, 2, &[2], &[1, 0]);
        let d = drinfeld_polynomials(&lam, &[1]).unwrap();
        assert_eq!(d.roots(1), &[1, -1]);
        assert_eq!(d.poly(1), &Poly::u_plus(-1).mul(&Poly::u_plus(1)));
        let d2 = drinfeld_polynomials(&lam, &[2]).unwrap();
        assert_eq!(d2.poly(1), &Poly::u_plus(1));
        // Empty skew: all P_k = 1.
        let empty = weight(1, 2, &[2], &[0, 0]);
        let d3 = drinfeld_polynomials(&empty, &[2]).unwrap();
        assert!(d3.polys().iter().all(|p| p == &Poly::one()));
    }

    #[test]
    fn drinfeld_polynomials_are_monic_with_correct_degree() {
        let lam = weight(2, 2, &[3, 1], &[1, 0]);
        for mu in admissible_mus(&lam) {
            let d = drinfeld_polynomials(&lam, &mu).unwrap();
            for k in 1..lam.dims().n() {
                let p = d.poly(k);
                assert!(p.is_monic());
                let gamma = lam.gamma_diagram();
                let rows_of_len_k = (1..=gamma.rows().len())
                    .filter(|&i| {
                        let inner = if i <= mu.len() { mu[i - 1] } else { 0 };
                        gamma.row(i) - inner == k as i64
                    })
                    .count();
                assert_eq!(p.degree().unwrap_or(0), rows_of_len_k);
            }
        }
    }

    #[test]
    fn gl12_drinfeld_relation() {
        let lam = weight(1, 2, &[2], &[1, 0]);
        let rep = check_drinfeld_relation(&lam, &[1]).unwrap();
        assert!(rep.all_passed());
        let empty = weight(1, 2, &[2], &[0, 0]);
        assert!(check_drinfeld_relation(&empty, &[2]).unwrap().all_passed());
    }

    #[test]
    fn drinfeld_relation_sweep_small() {
        for dims in [(1, 2), (2, 2)] {
            let d = SuperDims::new(dims.0, dims.1).unwrap();
            for lam in enumerate_covariant_weights(d, 6) {
                for mu in admissible_mus(&lam) {
                    let rep = check_drinfeld_relation(&lam, &mu).unwrap();
                    assert!(rep.all_passed(), "lambda = {lam}, mu = {mu:?}");
                }
            }
        }
    }

    #[test]
    fn initial_tableau_identity_sweep_small() {
        for dims in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let d = SuperDims::new(dims.0, dims.1).unwrap();
            for lam in enumerate_covariant_weights(d, 5) {
                for mu in admissible_mus(&lam) {
                    for p in 1..=lam.dims().n() {
                        assert!(
                            check_initial_tableau_identity(&lam, &mu, p).unwrap(),
                            "lambda = {lam}, mu = {mu:?}, p = {p}"
                        );
                    }
                }
            }
        }
    }
}
