//! `tau(z) = sum A_{l,m,n} (g2/2)^l (6 lambda)^m (2 g3)^n z^s / s!`, `s = 4l + 5m + 6n + 1`.
//!
//! Multiplying the bilinear recursion for `A` through by `(s+1)!` gives
//!
//! ```text
//! (s+1)s(s-1)(s-2)(s-7) A = -1/2 sum' b_{s1,s2} binom(s+1, s1) A1 A2
//!     + (s+1)s(s-1)(s-2)(s-3) sum_{m-1} binom(s-4, s1) A1 A2
//!     + (s+1)s(s-1)(s-2) sum_{l-1} binom(s-3, s1) A1 A2
//! ```
//!
//! where every coefficient is an integer. Sums are accumulated in `Integer`
//! while the inputs are integral, so a non-integral `A` shows up as an
//! inexact final division.

use rug::{Integer, Rational};

use super::{hirota_b, TauExpansion, TauMethod};
use crate::error::{Error, Result};
use crate::exact::{ParameterTriple, Scalar};

/// `s = 4l + 5m + 6n + 1`.
pub fn weight_s(l: usize, m: usize, n: usize) -> u32 {
    (4 * l + 5 * m + 6 * n + 1) as u32
}

/// Dense table of `A_{l,m,n}` for `s <= s_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleSumTable {
    s_max: u32,
    dims: [usize; 3],
    values: Vec<Option<Rational>>,
}

impl TripleSumTable {
    fn empty(s_max: u32) -> Self {
        let top = s_max.saturating_sub(1) as usize;
        let dims = [top / 4 + 1, top / 5 + 1, top / 6 + 1];
        TripleSumTable { s_max, dims, values: vec![None; dims[0] * dims[1] * dims[2]] }
    }

    fn slot(&self, l: usize, m: usize, n: usize) -> Option<usize> {
        (l < self.dims[0] && m < self.dims[1] && n < self.dims[2])
            .then(|| (l * self.dims[1] + m) * self.dims[2] + n)
    }

    pub fn s_max(&self) -> u32 {
        self.s_max
    }

    pub fn get(&self, l: usize, m: usize, n: usize) -> Option<&Rational> {
        self.slot(l, m, n).and_then(|i| self.values[i].as_ref())
    }

    /// Weierstrass' sigma coefficients `a_{m,n} = A_{m,0,n}`.
    pub fn sigma_coefficient(&self, m: usize, n: usize) -> Option<&Rational> {
        self.get(m, 0, n)
    }

    /// Index triples with `s <= s_max`, ordered by `s` then lexicographically.
    pub fn keys(&self) -> Vec<(usize, usize, usize)> {
        triples_up_to(self.s_max)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), &Rational)> + '_ {
        self.keys().into_iter().map(move |(l, m, n)| ((l, m, n), self.get(l, m, n).unwrap()))
    }

    pub fn len(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn triples_up_to(s_max: u32) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let top = s_max as usize;
    for l in 0..=top / 4 {
        for m in 0..=top / 5 {
            for n in 0..=top / 6 {
                if weight_s(l, m, n) <= s_max {
                    out.push((l, m, n));
                }
            }
        }
    }
    out.sort_by_key(|&(l, m, n)| (weight_s(l, m, n), l, m, n));
    out
}

/// Binomial rows `binom(r, 0..=r)`, built lazily.
struct Binomials {
    rows: Vec<Vec<Integer>>,
}

impl Binomials {
    fn row(&mut self, r: usize) -> &[Integer] {
        while self.rows.len() <= r {
            let prev = self.rows.last();
            let next = match prev {
                None => vec![Integer::from(1)],
                Some(p) => {
                    let mut row = Vec::with_capacity(p.len() + 1);
                    row.push(Integer::from(1));
                    for w in p.windows(2) {
                        row.push(Integer::from(&w[0] + &w[1]));
                    }
                    row.push(Integer::from(1));
                    row
                }
            };
            self.rows.push(next);
        }
        &self.rows[r]
    }
}

/// Integer and rational parts of a running sum.
struct Accumulator {
    int: Integer,
    rat: Rational,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator { int: Integer::new(), rat: Rational::new() }
    }

    fn add(&mut self, coeff: &Integer, a: &Rational, b: &Rational) {
        if *a.denom() == 1 && *b.denom() == 1 {
            let mut p = Integer::from(a.numer() * b.numer());
            p *= coeff;
            self.int += p;
        } else {
            let p = Rational::from(a * b);
            self.rat += p * coeff;
        }
    }

    fn total(self) -> Rational {
        self.rat + self.int
    }
}

/// All `A_{l,m,n}` with `s <= s_max`, seeded by `A_{0,0,0} = 1`, `A_{0,0,1} = -3`.
pub fn triple_sum_coeffs(s_max: u32) -> TripleSumTable {
    let mut table = TripleSumTable::empty(s_max.max(1));
    let mut binomials = Binomials { rows: Vec::new() };
    for (l, m, n) in triples_up_to(table.s_max) {
        let value = match (l, m, n) {
            (0, 0, 0) => Rational::from(1),
            (0, 0, 1) => Rational::from(-3),
            _ => triple_step(&table, &mut binomials, l, m, n),
        };
        let i = table.slot(l, m, n).unwrap();
        table.values[i] = Some(value);
    }
    table
}

fn triple_step(table: &TripleSumTable, binomials: &mut Binomials, l: usize, m: usize, n: usize) -> Rational {
    let s = weight_s(l, m, n) as i64;
    let mut bilinear = Accumulator::new();
    let mut shifted_m = Accumulator::new();
    let mut shifted_l = Accumulator::new();
    let get = |a: usize, b: usize, c: usize| table.get(a, b, c).expect("dependency computed earlier");

    // sum' over (l1,m1,n1) + (l2,m2,n2) = (l,m,n), symmetric: each unordered pair once.
    let row = binomials.row(s as usize + 1).to_vec();
    for l1 in 0..=l {
        for m1 in 0..=m {
            for n1 in 0..=n {
                let (l2, m2, n2) = (l - l1, m - m1, n - n1);
                let first = (l1, m1, n1);
                let second = (l2, m2, n2);
                if first > second || first == (0, 0, 0) || second == (0, 0, 0) {
                    continue;
                }
                let s1 = weight_s(l1, m1, n1) as u64;
                let s2 = weight_s(l2, m2, n2) as u64;
                let half_b = hirota_b(s1, s2) / 2;
                if half_b == 0 {
                    continue;
                }
                let mut coeff = Integer::from(&row[s1 as usize] * half_b);
                if first != second {
                    coeff *= 2;
                }
                bilinear.add(&coeff, get(l1, m1, n1), get(l2, m2, n2));
            }
        }
    }
    if m >= 1 {
        let row = binomials.row(s as usize - 4).to_vec();
        symmetric_split(table, (l, m - 1, n), &row, &mut shifted_m);
    }
    if l >= 1 {
        let row = binomials.row(s as usize - 3).to_vec();
        symmetric_split(table, (l - 1, m, n), &row, &mut shifted_l);
    }
    let mut total = -bilinear.total();
    total += shifted_m.total() * Integer::from((s + 1) * s * (s - 1) * (s - 2) * (s - 3));
    total += shifted_l.total() * Integer::from((s + 1) * s * (s - 1) * (s - 2));
    let lhs = Integer::from((s + 1) * s * (s - 1) * (s - 2) * (s - 7));
    total / lhs
}

/// `sum_{t1 + t2 = target} binom(r, s1) A_{t1} A_{t2}` over ordered splits, using symmetry.
fn symmetric_split(table: &TripleSumTable, target: (usize, usize, usize), row: &[Integer], acc: &mut Accumulator) {
    let (l, m, n) = target;
    for l1 in 0..=l {
        for m1 in 0..=m {
            for n1 in 0..=n {
                let first = (l1, m1, n1);
                let second = (l - l1, m - m1, n - n1);
                if first > second {
                    continue;
                }
                let s1 = weight_s(l1, m1, n1) as usize;
                let mut coeff = row[s1].clone();
                if first != second {
                    coeff *= 2;
                }
                acc.add(&coeff, table.get(l1, m1, n1).unwrap(), table.get(second.0, second.1, second.2).unwrap());
            }
        }
    }
}

/// Index triples whose `A` is not an integer.
pub fn integrality_report(table: &TripleSumTable) -> Vec<(usize, usize, usize)> {
    table.entries().filter(|(_, a)| *a.denom() != 1).map(|(k, _)| k).collect()
}

/// `C_0..=C_N` assembled from the `A` table:
/// `C_k = sum_{4l+5m+6n=k} A (g2/2)^l (6 lambda)^m (2 g3)^n / (k+1)!`.
pub fn tau_from_triple_sum<S: Scalar>(
    table: &TripleSumTable,
    params: &ParameterTriple<S>,
    order: usize,
) -> Result<TauExpansion<S>> {
    let needed = order as u32 + 1;
    if table.s_max() < needed {
        return Err(Error::Coverage { needed, available: table.s_max() });
    }
    let g2 = powers(&params.g2.scale(&Rational::from((1, 2))), order / 4);
    let lambda = powers(&params.lambda.scale_int(6), order / 5);
    let g3 = powers(&params.g3.scale_int(2), order / 6);
    let mut c = vec![S::zero(); order + 1];
    let mut factorial = Integer::from(1);
    for (k, slot) in c.iter_mut().enumerate() {
        factorial *= k as u64 + 1;
        let mut total = S::zero();
        #[allow(clippy::needless_range_loop)]
        for l in 0..=k / 4 {
            for m in 0..=(k - 4 * l) / 5 {
                let rest = k - 4 * l - 5 * m;
                if rest % 6 != 0 {
                    continue;
                }
                let n = rest / 6;
                let a = table.get(l, m, n).unwrap();
                let term = g2[l].mul_ref(&lambda[m]).mul_ref(&g3[n]).scale(a);
                total.add_assign_ref(&term);
            }
        }
        *slot = total.scale(&Rational::from((1, factorial.clone())));
    }
    Ok(TauExpansion::new(params.clone(), TauMethod::TripleSum, c))
}

fn powers<S: Scalar>(x: &S, top: usize) -> Vec<S> {
    let mut out = vec![S::one()];
    for _ in 0..top {
        let next = out.last().unwrap().mul_ref(x);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, Params};

    #[test]
    fn low_order_matrices() {
        let t = triple_sum_coeffs(31);
        let m0 = [[1i64, -3, -54], [-1, -18, 4968], [-9, 513, 257580]];
        let m1 = [[-6i64, -216, 89424], [-84, 18720, 5786640], [1650, 1358640, 1168920720]];
        let m2 = [[-294i64, 144144, 47585880], [18774, 15053040, 22914336240], [1112436, 3160803600, -2734614623160]];
        for (m, mat) in [m0, m1, m2].iter().enumerate() {
            for (l, row) in mat.iter().enumerate() {
                for (n, &v) in row.iter().enumerate() {
                    assert_eq!(t.get(l, m, n), Some(&Rational::from(v)), "A_{l},{m},{n}");
                }
            }
        }
        assert!(integrality_report(&t).is_empty());
    }

    #[test]
    fn low_tau_coefficients() {
        let t = triple_sum_coeffs(8);
        let lam = tau_from_triple_sum(&t, &Params::from_ints(0, 1, 0), 6).unwrap();
        assert_eq!(lam.c(5), &ratio(-1, 20));
        let g3 = tau_from_triple_sum(&t, &Params::from_ints(0, 0, 1), 6).unwrap();
        assert_eq!(g3.c(6), &ratio(-1, 840));
        assert!(matches!(
            tau_from_triple_sum(&t, &Params::pentagonal(), 10),
            Err(Error::Coverage { needed: 11, available: 8 })
        ));
    }
}
