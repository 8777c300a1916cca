//! The generating function `h(z) = sum omega(N)/N z^N`, its exponentials
//! `e^{-h} = 1 - sum d_+(i) z^i` and `e^{h} = 1 + sum d_-(i) z^i`, and three
//! independent ways of getting the coefficients `d_±`:
//!
//! * exponentiating `h` as a power series,
//! * summing over integer partitions (Faà di Bruno),
//! * the alternating product of `det(1 - z T)` over all edge-deleted
//!   subgraphs, which equals `e^{-h}` without ever computing `omega`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{Polynomial, PowerSeries};
use crate::census::{Census, CensusTable};
use crate::error::{Error, Result};
use crate::graph::EdgeSubset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    /// `e^{-h} = 1 - sum d_+(i) z^i`
    Plus,
    /// `e^{h} = 1 + sum d_-(i) z^i`
    Minus,
}

impl Sign {
    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }

    pub fn name(self) -> &'static str {
        match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        }
    }
}

/// Truncation order used when none is given: `2|E| + 4`.
pub fn default_order(edge_count: usize) -> usize {
    2 * edge_count + 4
}

/// `d(1), ..., d(order)`. Index 0 is unused and always zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCoefficients(Vec<BigInt>);

impl DCoefficients {
    fn from_series_tail(series: &[BigInt], negate: bool) -> Self {
        let mut values = vec![BigInt::zero()];
        values.extend(
            series
                .iter()
                .skip(1)
                .map(|c| if negate { -c } else { c.clone() }),
        );
        DCoefficients(values)
    }

    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    /// `d(i)` for `1 <= i <= order`.
    pub fn get(&self, i: usize) -> &BigInt {
        assert!(i >= 1, "d is indexed from 1");
        &self.0[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.0.iter().enumerate().skip(1)
    }
}

/// `h(z)` through `order`; needs `omega(1..=order)` in the table.
pub fn h_series(table: &CensusTable, order: usize) -> Result<PowerSeries> {
    let mut coeffs = vec![BigRational::zero()];
    for n in 1..=order {
        coeffs.push(BigRational::new(table.omega(n)?.clone(), BigInt::from(n)));
    }
    Ok(PowerSeries::new(coeffs, order))
}

/// Reads `d_±` off `exp(∓h)`.
pub fn d_from_exp(h: &PowerSeries, sign: Sign) -> Result<DCoefficients> {
    if !h.coeff(0).is_zero() {
        return Err(Error::Series("h must have a zero constant term"));
    }
    let e = match sign {
        Sign::Plus => (-h).exp()?,
        Sign::Minus => h.exp()?,
    };
    let ints = e.integer_coeffs()?;
    Ok(DCoefficients::from_series_tail(&ints, sign == Sign::Plus))
}

/// One multiplicity vector `a_1..a_i` with `sum k a_k = i`; `parts` is
/// `m = sum a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTerm {
    pub target: usize,
    pub parts: usize,
    /// `multiplicities[k - 1] = a_k`.
    pub multiplicities: Vec<usize>,
}

impl PartitionTerm {
    /// `lambda_+(m) = (-1)^{m+1}`, `lambda_-(m) = 1`.
    pub fn weight(&self, sign: Sign) -> i32 {
        match sign {
            Sign::Plus if self.parts % 2 == 0 => -1,
            _ => 1,
        }
    }

    /// `prod_k omega(k)^{a_k} / (a_k! k^{a_k})`.
    pub fn value(&self, omega: impl Fn(usize) -> BigInt) -> BigRational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (idx, &a) in self.multiplicities.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let k = idx + 1;
            let w = omega(k);
            if w.is_zero() {
                return BigRational::zero();
            }
            num *= num_traits::pow(w, a);
            den *= num_traits::pow(BigInt::from(k), a) * factorial(a);
        }
        BigRational::new(num, den)
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// All multiplicity vectors for `target`, generated by decreasing largest
/// part.
pub fn partition_terms(target: usize) -> Vec<PartitionTerm> {
    fn recurse(
        remaining: usize,
        max_part: usize,
        multiplicities: &mut Vec<usize>,
        parts: usize,
        target: usize,
        out: &mut Vec<PartitionTerm>,
    ) {
        if remaining == 0 {
            out.push(PartitionTerm {
                target,
                parts,
                multiplicities: multiplicities.clone(),
            });
            return;
        }
        for k in (1..=max_part.min(remaining)).rev() {
            for a in (1..=remaining / k).rev() {
                multiplicities[k - 1] = a;
                recurse(
                    remaining - a * k,
                    k - 1,
                    multiplicities,
                    parts + a,
                    target,
                    out,
                );
            }
            multiplicities[k - 1] = 0;
        }
    }
    let mut out = Vec::new();
    if target == 0 {
        return out;
    }
    let mut multiplicities = vec![0; target];
    recurse(target, target, &mut multiplicities, 0, target, &mut out);
    out
}

/// `d_±(i)` from the partition double sum; exact rational, expected integral.
pub fn d_from_partitions(table: &CensusTable, i: usize, sign: Sign) -> Result<BigRational> {
    let omega: Vec<BigInt> = (1..=i)
        .map(|k| table.omega(k).cloned())
        .collect::<Result<_>>()?;
    let lookup = |k: usize| omega[k - 1].clone();
    let mut total = BigRational::zero();
    for term in partition_terms(i) {
        let v = term.value(lookup);
        if v.is_zero() {
            continue;
        }
        if term.weight(sign) < 0 {
            total -= v;
        } else {
            total += v;
        }
    }
    Ok(total)
}

pub fn d_sequence_from_partitions(
    table: &CensusTable,
    order: usize,
    sign: Sign,
) -> Result<DCoefficients> {
    let mut values = vec![BigInt::zero()];
    for i in 1..=order {
        let d = d_from_partitions(table, i, sign)?;
        if !d.is_integer() {
            return Err(Error::NonIntegral(format!(
                "partition route d_{}({i}) = {d}",
                sign.name()
            )));
        }
        values.push(d.to_integer());
    }
    Ok(DCoefficients(values))
}

/// `prod_k prod_{G_k} det(1 - z T_{G_k})^{(-1)^k}` as numerator (even `k`)
/// over denominator (odd `k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantProduct {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
}

impl DeterminantProduct {
    /// True when `numerator / denominator == p / q` as rational functions.
    pub fn equals_ratio(&self, p: &Polynomial, q: &Polynomial) -> bool {
        &self.numerator * q == p * &self.denominator
    }

    /// `Some(n)` when the product is exactly `(1 - z^n)^2`.
    pub fn cycle_graph_form(&self) -> Option<usize> {
        let degree = self.numerator.degree()?;
        let deg_den = self.denominator.degree()?;
        if degree < deg_den || (degree - deg_den) % 2 != 0 {
            return None;
        }
        let n = (degree - deg_den) / 2;
        if n == 0 {
            return None;
        }
        let target = Polynomial::one_minus_z_pow(n).pow(2);
        self.equals_ratio(&target, &Polynomial::one()).then_some(n)
    }

    /// The product as a power series through `order`.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        PowerSeries::from_polynomial(&self.numerator, order)
            .div(&PowerSeries::from_polynomial(&self.denominator, order))
    }
}

impl fmt::Display for DeterminantProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.cycle_graph_form() {
            return write!(f, "(1 - z^{n})^2");
        }
        if self.denominator == Polynomial::one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

/// Alternating determinant product, with every factor truncated at
/// `truncate` when given.
fn fold_determinants(census: &Census, truncate: Option<usize>) -> DeterminantProduct {
    let full = EdgeSubset::full(census.edge_count()).mask();
    let multiply = |a: &Polynomial, b: &Polynomial| match truncate {
        Some(order) => a.mul_truncated(b, order),
        None => a * b,
    };
    let one = || (Polynomial::one(), Polynomial::one());
    let (numerator, denominator) = (0..full)
        .into_par_iter()
        .map(|mask| {
            let deleted = EdgeSubset::from_mask(mask);
            let det = census.subgraph(deleted).cycle_matrix().det_one_minus_z();
            if deleted.is_even() {
                (det, Polynomial::one())
            } else {
                (Polynomial::one(), det)
            }
        })
        .reduce(one, |a, b| (multiply(&a.0, &b.0), multiply(&a.1, &b.1)));
    DeterminantProduct {
        numerator,
        denominator,
    }
}

/// The exact, untruncated determinant product. Degree grows like
/// `|E| 2^|E|`; meant for small graphs.
pub fn determinant_product(census: &Census) -> DeterminantProduct {
    fold_determinants(census, None)
}

/// `d_±` from the determinant product alone, through `order`.
pub fn d_from_determinants(census: &Census, order: usize, sign: Sign) -> Result<DCoefficients> {
    let product = fold_determinants(census, Some(order));
    let series = match sign {
        Sign::Plus => product.series(order)?,
        Sign::Minus => DeterminantProduct {
            numerator: product.denominator,
            denominator: product.numerator,
        }
        .series(order)?,
    };
    let ints = series.integer_coeffs()?;
    Ok(DCoefficients::from_series_tail(&ints, sign == Sign::Plus))
}

/// `prod_{N=1}^{order} (1 - z^N)^{Theta(N)}` through `order`, by binomial
/// expansion of each factor.
pub fn theta_product(table: &CensusTable, order: usize) -> Result<Polynomial> {
    let mut acc = Polynomial::one();
    for n in 1..=order {
        let t = table.theta(n).ok_or(Error::MissingOmega(n))?;
        if t.is_zero() {
            continue;
        }
        // (1 - z^n)^t = sum_j C(t, j) (-1)^j z^{nj}
        let mut coeffs = vec![BigInt::zero(); order + 1];
        let mut binom = BigInt::one();
        for j in 0..=order / n {
            if j > 0 {
                binom = binom * (t - BigInt::from(j - 1));
                binom = binom.div_floor(&BigInt::from(j));
            }
            coeffs[n * j] = if j % 2 == 0 { binom.clone() } else { -&binom };
        }
        acc = acc.mul_truncated(&Polynomial::new(coeffs), order);
    }
    Ok(acc)
}

/// Outcome of checking one item of the coefficient identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemCheck {
    pub item: char,
    pub statement: &'static str,
    /// Inclusive range of `n` checked; empty when `first > last`.
    pub first: usize,
    pub last: usize,
    pub passed: bool,
    pub first_failure: Option<usize>,
    /// For a) and b): whether the identity also holds for `1 <= n < n0`.
    pub below_threshold: Option<bool>,
}

fn check_range(
    item: char,
    statement: &'static str,
    first: usize,
    last: usize,
    pred: impl Fn(usize) -> bool,
) -> ItemCheck {
    let first = first.max(1);
    let first_failure = (first..=last).find(|&n| !pred(n));
    ItemCheck {
        item,
        statement,
        first,
        last,
        passed: first_failure.is_none(),
        first_failure,
        below_threshold: None,
    }
}

/// Checks items a)–g) through the common order of the inputs.
///
/// `omega[n]` is `omega(n)` (index 0 unused), `n0 = |E|`.
pub fn check_items(
    omega: &[BigInt],
    d_plus: &DCoefficients,
    d_minus: &DCoefficients,
    n0: usize,
) -> Vec<ItemCheck> {
    let order = d_plus.order().min(d_minus.order()).min(omega.len() - 1);
    let dp = |n: usize| d_plus.get(n);
    let dm = |n: usize| d_minus.get(n);
    let w = |n: usize| &omega[n];
    let big = |n: usize| BigInt::from(n);

    let recurrence = |sign: Sign, n: usize| {
        let d = |k| if sign == Sign::Plus { dp(k) } else { dm(k) };
        let conv: BigInt = (1..n).map(|k| w(n - k) * d(k)).sum();
        let rhs = match sign {
            Sign::Plus => w(n) - conv,
            Sign::Minus => w(n) + conv,
        };
        big(n) * d(n) == rhs
    };
    let item_a = |n: usize| recurrence(Sign::Plus, n) && recurrence(Sign::Minus, n);
    let item_b = |n: usize| {
        let conv: BigInt = (1..n).map(|i| dp(i) * dm(n - i)).sum();
        *dm(n) == dp(n) + conv
    };

    let mut a = check_range(
        'a',
        "n d(n) = omega(n) -/+ sum omega(n-k) d(k)",
        n0,
        order,
        item_a,
    );
    a.below_threshold = Some((1..n0.min(order + 1)).all(item_a));
    let mut b = check_range(
        'b',
        "d_-(n) = d_+(n) + sum d_+(i) d_-(n-i)",
        n0,
        order,
        item_b,
    );
    b.below_threshold = Some((1..n0.min(order + 1)).all(item_b));

    let c = check_range(
        'c',
        "d_±(n) = 0 for n < n0",
        1,
        n0.saturating_sub(1).min(order),
        |n| dp(n).is_zero() && dm(n).is_zero(),
    );
    let d = check_range(
        'd',
        "d_±(n) = omega(n)/n on [n0, 2n0)",
        n0,
        (2 * n0).saturating_sub(1).min(order),
        |n| &(big(n) * dp(n)) == w(n) && &(big(n) * dm(n)) == w(n),
    );
    let e = check_range(
        'e',
        "d_+(n) <= omega(n)/n on [2n0, 3n0)",
        2 * n0,
        (3 * n0).saturating_sub(1).min(order),
        |n| &(big(n) * dp(n)) <= w(n),
    );
    let f = check_range(
        'f',
        "d_-(n) >= omega(n)/n for n >= 2n0",
        2 * n0,
        order,
        |n| &(big(n) * dm(n)) >= w(n),
    );
    let g = check_range('g', "|d_+(n)| <= d_-(n)", 1, order, |n| {
        &dp(n).abs() <= dm(n)
    });
    vec![a, b, c, d, e, f, g]
}

/// `d_±` through the same order from each of the three routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteCoefficients {
    pub exp: DCoefficients,
    pub partition: DCoefficients,
    pub determinant: DCoefficients,
}

impl RouteCoefficients {
    pub fn agree(&self) -> bool {
        self.exp == self.partition && self.exp == self.determinant
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub order: usize,
    pub edge_count: usize,
    pub table: CensusTable,
    pub plus: RouteCoefficients,
    pub minus: RouteCoefficients,
    pub items: Vec<ItemCheck>,
    /// `prod (1 - z^N)^{Theta(N)} == e^{-h}` through `order`.
    pub theta_product_matches: bool,
    /// `d_+(|E|) / 2`, when `|E|` is within the order.
    pub euler_from_d: Option<BigRational>,
    /// Census Euler count, for undirected graphs.
    pub euler_count: Option<BigInt>,
}

impl IdentityReport {
    pub fn routes_agree(&self) -> bool {
        self.plus.agree() && self.minus.agree()
    }

    pub fn euler_agrees(&self) -> bool {
        match (&self.euler_from_d, &self.euler_count) {
            (Some(d), Some(c)) => *d == BigRational::from_integer(c.clone()),
            _ => true,
        }
    }

    pub fn passed(&self) -> bool {
        self.routes_agree()
            && self.theta_product_matches
            && self.euler_agrees()
            && self.items.iter().all(|i| i.passed)
    }

    pub fn route(&self, sign: Sign) -> &RouteCoefficients {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }
}

/// Computes every route through `order` and checks items a)–g).
pub fn verify(census: &Census, order: usize) -> Result<IdentityReport> {
    let n0 = census.edge_count();
    if order < n0 || order == 0 {
        return Err(Error::OrderTooSmall { order, edges: n0 });
    }
    let table = census.table(order)?;
    let h = h_series(&table, order)?;
    let route = |sign| -> Result<RouteCoefficients> {
        Ok(RouteCoefficients {
            exp: d_from_exp(&h, sign)?,
            partition: d_sequence_from_partitions(&table, order, sign)?,
            determinant: d_from_determinants(census, order, sign)?,
        })
    };
    let plus = route(Sign::Plus)?;
    let minus = route(Sign::Minus)?;

    let mut omega = vec![BigInt::zero()];
    omega.extend((1..=order).map(|n| table.omega[&n].clone()));
    let items = check_items(&omega, &plus.exp, &minus.exp, n0);

    let e_minus_h = (-&h).exp()?.integer_coeffs()?;
    let theta_product_matches = theta_product(&table, order)? == Polynomial::new(e_minus_h);

    let euler_from_d =
        (n0 >= 1).then(|| BigRational::new(plus.exp.get(n0).clone(), BigInt::from(2)));
    let euler_count = if census.is_directed() {
        None
    } else {
        Some(census.euler_count()?)
    };
    Ok(IdentityReport {
        order,
        edge_count: n0,
        table,
        plus,
        minus,
        items,
        theta_product_matches,
        euler_from_d,
        euler_count,
    })
}
