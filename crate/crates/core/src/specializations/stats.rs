//! Coefficient interpretations checked against brute-force enumeration.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{diagonal, small, x_one, TrinomialRow};
use crate::enumerator::{self, Overpartition, PartConfig};
use crate::error::{ensure, Result};
use crate::polyring::UniPoly;
use crate::sequences;

fn binary() -> PartConfig {
    PartConfig::restricted(2).expect("valid")
}

/// Number of overpartitions of `n` by the value of `key`.
pub fn histogram<F>(cfg: &PartConfig, n: u64, key: F) -> Vec<u64>
where
    F: Fn(&Overpartition) -> usize,
{
    let mut h: Vec<u64> = Vec::new();
    for p in enumerator::enumerate(cfg, n) {
        let k = key(&p);
        if h.len() <= k {
            h.resize(k + 1, 0);
        }
        h[k] += 1;
    }
    h
}

fn coeff_vector(p: &UniPoly) -> Vec<u64> {
    p.coeffs()
        .iter()
        .map(|c| {
            small(c)
                .and_then(|v| v.to_u64())
                .expect("small nonnegative integer")
        })
        .collect()
}

fn index_u64(i: BigUint) -> u64 {
    i.to_u64().expect("index fits in u64")
}

/// `weight_poly = p_n` for n ≤ `n_max` in base `b` (λ = b), and the
/// enumerated counts match the truncated product for the same range.
pub fn check_oracle(b: u32, n_max: u64) -> Result<()> {
    let cfg = PartConfig::restricted(b)?;
    let cache = sequences::PCache::new(b)?;
    for n in 0..=n_max {
        let oracle = enumerator::weight_poly(&cfg, n);
        let rec = cache.get(&BigUint::from(n));
        ensure(
            oracle == *rec,
            "p_n equals the enumerated weight polynomial",
            n,
            || format!("base {b}"),
        )?;
    }
    let counts = enumerator::count_series(&cfg, n_max);
    let product = enumerator::product_series(&cfg, n_max);
    ensure(
        counts == product,
        "enumerated counts equal the product series",
        n_max,
        || format!("base {b}: {counts:?} vs {product:?}"),
    )
}

/// Overpartitions of `2^n − 1` (resp. `2^n − 2`) by number of overlined
/// parts follow the even (resp. odd) entries of trinomial row n.
pub fn check_overline_histogram(n_max: u32) -> Result<()> {
    let cfg = binary();
    for n in 1..=n_max {
        let row = TrinomialRow::new(n);
        let even: Vec<u64> = (0..=n as usize)
            .map(|j| row.entry(2 * j).to_u64().unwrap())
            .collect();
        let odd: Vec<u64> = (0..n as usize)
            .map(|j| row.entry(2 * j + 1).to_u64().unwrap())
            .collect();
        let h_r = histogram(&cfg, (1 << n) - 1, |p| p.overlined_count() as usize);
        let h_q = histogram(&cfg, (1 << n) - 2, |p| p.overlined_count() as usize);
        ensure(
            h_r == even,
            "overlined-part counts of 2^n-1 are even trinomial entries",
            n as u64,
            || format!("{h_r:?} vs {even:?}"),
        )?;
        ensure(
            h_q == odd,
            "overlined-part counts of 2^n-2 are odd trinomial entries",
            n as u64,
            || format!("{h_q:?} vs {odd:?}"),
        )?;
    }
    Ok(())
}

/// `c_n(j, k)` counts overpartitions of `2^{n+1} − 2` with `j` single and
/// `k` paired plain parts; also the two derived univariate counts and the
/// symmetry of the plain-part total.
pub fn check_plain_part_counts(n_max: u32) -> Result<()> {
    let cfg = binary();
    for n in 0..=n_max {
        let target = index_u64(sequences::q_index(2, n));
        let nn = n as u64;
        let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for p in enumerator::enumerate(&cfg, target) {
            let st = enumerator::stats(&p, &cfg);
            *counts.entry((st.j(1), st.j(2))).or_default() += 1;
        }
        let poly = x_one::Q1_general(n);
        let from_poly: BTreeMap<(u32, u32), u64> = poly
            .terms()
            .map(|(e, c)| ((e[1], e[2]), small(c).unwrap() as u64))
            .collect();
        ensure(
            counts == from_poly,
            "c_n(j,k) counts single and paired plain parts",
            nn,
            || format!("{counts:?} vs {from_poly:?}"),
        )?;

        let distinct = histogram(&cfg, target, |p| {
            let st = enumerator::stats(p, &cfg);
            (st.j(1) + st.j(2)) as usize
        });
        let q11 = coeff_vector(&x_one::Q1(n, 1, 1)?);
        ensure(
            distinct == q11,
            "Q_n(1,z,z) counts distinct plain parts",
            nn,
            || format!("{distinct:?} vs {q11:?}"),
        )?;

        let total = histogram(&cfg, target, |p| p.plain_total() as usize);
        let q12 = coeff_vector(&x_one::Q1(n, 1, 2)?);
        ensure(
            total == q12,
            "Q_n(1,z,z^2) counts plain parts with multiplicity",
            nn,
            || format!("{total:?} vs {q12:?}"),
        )?;
        let mut rev = total.clone();
        rev.reverse();
        ensure(
            n == 0 || (total.len() == 2 * n as usize + 1 && rev == total),
            "plain-part totals symmetric about n",
            nn,
            || format!("{total:?}"),
        )?;
    }
    Ok(())
}

fn s_histogram(cfg: &PartConfig, target: u64, offset: usize) -> Result<Vec<u64>> {
    let h = histogram(cfg, target, |p| enumerator::s_statistic(p, cfg) as usize);
    ensure(
        h.iter().take(offset).all(|&c| c == 0),
        "S is at least n",
        offset as u64,
        || format!("histogram {h:?}"),
    )?;
    Ok(h.into_iter().skip(offset).collect())
}

/// Coefficients of `Q̃_n` count overpartitions of `q(n)` with `S = n + j`,
/// in base `b`; for `b = 2` also those of `R̃_n` at `r(n)`.
pub fn check_s_statistic(b: u32, n_max: u32) -> Result<()> {
    let cfg = PartConfig::restricted(b)?;
    let qt = diagonal::Qtilde_sequence(n_max)?;
    let rt = diagonal::Rtilde_sequence(n_max)?;
    for n in 1..=n_max {
        let nn = n as u64;
        let h = s_histogram(&cfg, index_u64(sequences::q_index(b, n)), n as usize)?;
        let want = coeff_vector(&qt[n as usize]);
        ensure(
            h == want,
            "coefficients of Q~_n count S = n + j",
            nn,
            || format!("base {b}: {h:?} vs {want:?}"),
        )?;
        if b == 2 {
            let h = s_histogram(&cfg, index_u64(sequences::r_index(b, n)), n as usize)?;
            let want = coeff_vector(&rt[n as usize]);
            ensure(
                h == want,
                "coefficients of R~_n count S = n + j",
                nn,
                || format!("{h:?} vs {want:?}"),
            )?;
        }
    }
    Ok(())
}

/// The thirteen 5-ary overpartitions of 30 split 8, 4, 1 by `S = 2, 3, 4`.
pub fn check_five_ary_split() -> Result<()> {
    let cfg = PartConfig::restricted(5)?;
    let h = histogram(&cfg, 30, |p| enumerator::s_statistic(p, &cfg) as usize);
    ensure(
        h == vec![0, 0, 8, 4, 1],
        "S distribution 8, 4, 1 for base 5 at 30",
        30,
        || format!("{h:?}"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges() {
        check_oracle(2, 12).unwrap();
        check_oracle(3, 10).unwrap();
        check_overline_histogram(4).unwrap();
        check_plain_part_counts(3).unwrap();
        check_s_statistic(2, 3).unwrap();
        check_s_statistic(5, 2).unwrap();
        check_five_ary_split().unwrap();
    }

    #[test]
    fn example_counts_for_six() {
        let h = histogram(&binary(), 6, |p| p.overlined_count() as usize);
        assert_eq!(h, vec![3, 7, 3]);
        let h = histogram(&binary(), 7, |p| p.overlined_count() as usize);
        assert_eq!(h, vec![1, 6, 6, 1]);
    }
}
