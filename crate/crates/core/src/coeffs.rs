//! Matrix-element coefficients of the Chevalley generators in the
//! supertableau basis.
//!
//! All coefficients are read off the source tableau. For s != m they are
//! the classical Gelfand-Tsetlin expressions in the shifted row counts
//! l_{si} (even side) or shifted column counts l'_{r+p,j} (odd side). For
//! the odd pair E_{m,m+1}, E_{m+1,m} the expressions also involve the
//! shifted column counts l^0 of the initial filling of Gamma_lambda/mu.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratio::{neg_one_pow, rat, rat_pow, Ratio};
use crate::shape::SkewShapeParams;
use crate::tableau::Supertableau;
use crate::weight::CovariantWeight;

/// Whether an entry s+1 becomes s (raise, generator E_{s,s+1}) or an entry
/// s becomes s+1 (lower, generator E_{s+1,s}).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

fn nonzero(v: Ratio, what: &str) -> Result<Ratio> {
    if v.is_zero() {
        Err(Error::ZeroDenominator(what.to_string()))
    } else {
        Ok(v)
    }
}

/// Coefficient of the move changing an entry in row `i` between `s` and
/// `s+1`, for `1 <= s <= m-1`. The caller must have checked that the move
/// yields a valid supertableau.
pub fn coeff_gl_m(t: &Supertableau, s: usize, i: usize, dir: Direction) -> Result<Ratio> {
    let m = t.dims().m();
    debug_assert!((1..m).contains(&s) && (1..=s).contains(&i));
    let l = |s: usize, i: usize| t.count_row_leq(i, s as u16) - i as i64 + 1;
    let lsi = l(s, i);
    let mut den = Ratio::one();
    for j in 1..=s {
        if j != i {
            den *= rat(lsi - l(s, j));
        }
    }
    let den = nonzero(den, "gl_m denominator")?;
    match dir {
        Direction::Raise => {
            let mut num = Ratio::one();
            for j in 1..=s + 1 {
                num *= rat(lsi - l(s + 1, j));
            }
            Ok(-num / den)
        }
        Direction::Lower => {
            let mut num = Ratio::one();
            for j in 1..s {
                num *= rat(lsi - l(s - 1, j));
            }
            Ok(num / den)
        }
    }
}

/// Coefficient of the move changing an entry in column `j` between `m+p`
/// and `m+p+1`, for `1 <= p <= n-1`. Same Gelfand-Tsetlin shape as
/// `coeff_gl_m`, on the trapezium pattern.
pub fn coeff_gl_n(t: &Supertableau, p: usize, j: usize, dir: Direction) -> Result<Ratio> {
    let m = t.dims().m();
    let n = t.dims().n();
    debug_assert!((1..n).contains(&p));
    let r = t.count_row_leq(1, m as u16) as usize;
    debug_assert!(j >= 1 && j <= r + p);
    let lc = |p: usize, j: usize| t.count_col_leq(j, (m + p) as u16) - j as i64 + 1;
    let lj = lc(p, j);
    let mut den = Ratio::one();
    for jp in 1..=r + p {
        if jp != j {
            den *= rat(lj - lc(p, jp));
        }
    }
    let den = nonzero(den, "gl_n denominator")?;
    match dir {
        Direction::Raise => {
            let mut num = Ratio::one();
            for jp in 1..=r + p + 1 {
                num *= rat(lj - lc(p + 1, jp));
            }
            Ok(-num / den)
        }
        Direction::Lower => {
            let mut num = Ratio::one();
            for jp in 1..r + p {
                num *= rat(lj - lc(p - 1, jp));
            }
            Ok(num / den)
        }
    }
}

/// Shared parameters for the odd moves, all read off the source tableau.
struct OddContext {
    m: usize,
    n: usize,
    /// lambda_{mi} of the source.
    mu: Vec<i64>,
    r: usize,
    params: SkewShapeParams,
}

impl OddContext {
    fn new(t: &Supertableau, lambda: &CovariantWeight) -> Result<Self> {
        let mu = t.mu();
        let params = SkewShapeParams::new(lambda, &mu)?;
        Ok(OddContext {
            m: t.dims().m(),
            n: t.dims().n(),
            r: mu[0] as usize,
            mu,
            params,
        })
    }

    /// l_{mi} = lambda_{mi} - i + 1 (equals sigma_i of mu).
    fn lm(&self, i: usize) -> i64 {
        self.mu[i - 1] - i as i64 + 1
    }

    /// k_j = lambda_j - lambda_{mj}.
    fn k(&self, lambda: &CovariantWeight, j: usize) -> i64 {
        lambda.even()[j - 1] - self.mu[j - 1]
    }
}

/// Coefficient c of E_{m,m+1} removing the entry m+1 at box
/// `(i, lambda_{mi}+1)` of the source tableau, i.e. replacing it by m.
/// The caller must have checked that the replacement yields a valid
/// supertableau.
pub fn coeff_odd_raise(t: &Supertableau, lambda: &CovariantWeight, i: usize) -> Result<Ratio> {
    let ctx = OddContext::new(t, lambda)?;
    let (m, n, r) = (ctx.m, ctx.n, ctx.r);
    let lmi = ctx.lm(i);
    let k = ctx.k(lambda, i);
    debug_assert!(k >= 1, "a raise target requires an entry m+1 in row {i}");
    let lcol = |p: usize, j: usize| t.count_col_leq(j, (m + p) as u16) - j as i64 + 1;

    // Common blocks: column ratio at level r+1 over the skipped l^0 row,
    // and the product of 1/(l_mi + lambda_{m+p} + m) for p < k.
    let mut col_num = Ratio::one();
    for j in 1..=r + 1 {
        col_num *= rat(lmi + lcol(1, j));
    }
    let mut inv_block = Ratio::one();
    for p in 1..k {
        inv_block *= nonzero(
            rat(lmi + lambda.component(m + p as usize) + m as i64),
            "odd raise lambda block",
        )?;
    }

    if i >= 2 {
        let skip = (ctx.mu[i - 1] + 1) as usize;
        assert!(
            skip <= r,
            "skip marker {skip} exceeds r = {r}; target should have been rejected"
        );
        let mut col_den = Ratio::one();
        for j in 1..=r {
            if j != skip {
                col_den *= rat(lmi + ctx.params.l0(0, j));
            }
        }
        let col_den = nonzero(col_den, "odd raise l0 denominator")?;
        let power =
            rat(lmi + m as i64) / nonzero(rat(lmi - ctx.lm(1)), "odd raise power denominator")?;
        let mut signed = Ratio::one();
        for j in 1..i {
            signed *= neg_one_pow(ctx.k(lambda, j)) * rat(lmi - lambda.l_shift(j))
                / nonzero(rat(lmi - ctx.lm(j)), "odd raise signed denominator")?;
        }
        let mut shifted = Ratio::one();
        for j in 1..i {
            if ctx.k(lambda, j) >= k {
                shifted *= rat(lmi - ctx.lm(j))
                    / nonzero(rat(lmi - ctx.lm(j) + 1), "odd raise shift denominator")?;
            }
        }
        let mut tail = Ratio::one();
        for j in 1..=m {
            if j != i {
                let e = ctx.k(lambda, j).min(k - 1);
                debug_assert!(e >= 0);
                let base = rat(lmi - ctx.lm(j))
                    / nonzero(rat(lmi - ctx.lm(j) + 1), "odd raise tail denominator")?;
                tail *= rat_pow(&base, e as u32);
            }
        }
        Ok(col_num / col_den * rat_pow(&power, k as u32) / inv_block * signed * shifted * tail)
    } else {
        let mut col_den = Ratio::one();
        for j in 1..=r {
            col_den *= rat(lmi + ctx.params.l0(0, j));
        }
        let col_den = nonzero(col_den, "odd raise l0 denominator")?;
        let mut vee = Ratio::one();
        for p in 1..n {
            for j in 1..=r + p {
                vee *= rat(lmi + lcol(p, j) + p as i64)
                    / nonzero(
                        rat(lmi + ctx.params.l0(p, j) + p as i64),
                        "odd raise initial-column denominator",
                    )?;
            }
        }
        let mut tail = Ratio::one();
        for j in 2..=m {
            let e = ctx.k(lambda, j).min(k - 1);
            debug_assert!(e >= 0);
            let base = rat(lmi - ctx.lm(j))
                / nonzero(rat(lmi - ctx.lm(j) + 1), "odd raise tail denominator")?;
            tail *= rat_pow(&base, e as u32);
        }
        Ok(
            neg_one_pow(k - 1) * rat_pow(&rat(lmi + m as i64), k as u32) * col_num
                / col_den
                / inv_block
                * vee
                * tail,
        )
    }
}

/// Coefficient d of E_{m+1,m} replacing the entry m at box
/// `(i, lambda_{mi})` of the source tableau by m+1. The caller must have
/// checked that the replacement yields a valid supertableau.
pub fn coeff_odd_lower(t: &Supertableau, lambda: &CovariantWeight, i: usize) -> Result<Ratio> {
    let ctx = OddContext::new(t, lambda)?;
    let (m, n, r) = (ctx.m, ctx.n, ctx.r);
    let lmi = ctx.lm(i);
    let k = ctx.k(lambda, i);
    debug_assert!(k < n as i64, "a lower target requires lambda_i - mu_i < n");
    let l_row = |s: usize, j: usize| t.count_row_leq(j, s as u16) - j as i64 + 1;
    let lcol = |p: usize, j: usize| t.count_col_leq(j, (m + p) as u16) - j as i64 + 1;

    // Gelfand-Tsetlin block over row m-1 of U.
    let mut gt_num = Ratio::one();
    for j in 1..m {
        gt_num *= rat(lmi - l_row(m - 1, j));
    }
    let mut lam_block = Ratio::one();
    for p in 1..=k {
        lam_block *= rat(lmi + lambda.component(m + p as usize) + m as i64 - 1);
    }

    if i >= 2 {
        let mut gt_den = Ratio::one();
        for j in 1..=m {
            if j != i {
                gt_den *= rat(lmi - ctx.lm(j));
            }
        }
        let gt_den = nonzero(gt_den, "odd lower GT denominator")?;
        let power = rat(lmi - ctx.lm(1) - 1)
            / nonzero(rat(lmi + m as i64 - 1), "odd lower power denominator")?;
        let mut signed = Ratio::one();
        for j in 1..i {
            signed *= neg_one_pow(ctx.k(lambda, j)) * rat(lmi - ctx.lm(j) - 1)
                / nonzero(
                    rat(lmi - lambda.l_shift(j) - 1),
                    "odd lower signed denominator",
                )?;
        }
        let mut shifted = Ratio::one();
        for j in 1..i {
            if ctx.k(lambda, j) > k {
                shifted *= rat(lmi - ctx.lm(j))
                    / nonzero(rat(lmi - ctx.lm(j) - 1), "odd lower shift denominator")?;
            }
        }
        let mut tail = Ratio::one();
        for j in 1..=m {
            if j != i {
                let e = ctx.k(lambda, j).min(k);
                debug_assert!(e >= 0);
                let base = rat(lmi - ctx.lm(j))
                    / nonzero(rat(lmi - ctx.lm(j) - 1), "odd lower tail denominator")?;
                tail *= rat_pow(&base, e as u32);
            }
        }
        Ok(gt_num / gt_den * rat_pow(&power, k as u32) * lam_block * signed * shifted * tail)
    } else {
        let mut gt_den = Ratio::one();
        for j in 2..=m {
            gt_den *= rat(lmi - ctx.lm(j));
        }
        let gt_den = nonzero(gt_den, "odd lower GT denominator")?;
        let power = nonzero(rat(lmi + m as i64 - 1), "odd lower power denominator")?;
        let mut tail = Ratio::one();
        for j in 2..=m {
            let e = ctx.k(lambda, j).min(k);
            debug_assert!(e >= 0);
            let base = rat(lmi - ctx.lm(j))
                / nonzero(rat(lmi - ctx.lm(j) - 1), "odd lower tail denominator")?;
            tail *= rat_pow(&base, e as u32);
        }
        let mut vee = Ratio::one();
        for p in 1..n {
            for j in 1..r + p {
                vee *= rat(lmi + ctx.params.l0(p, j) + p as i64 - 1)
                    / nonzero(
                        rat(lmi + lcol(p, j) + p as i64 - 1),
                        "odd lower column denominator",
                    )?;
            }
        }
        Ok(neg_one_pow(k) / rat_pow(&power, k as u32) * gt_num / gt_den * lam_block * tail * vee)
    }
}
