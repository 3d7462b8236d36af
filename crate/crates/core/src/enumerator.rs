//! Brute-force enumeration of λ-restricted b-ary overpartitions.
//!
//! An overpartition of `n` is stored per power of `b`: whether that power
//! occurs overlined (at most once) and how many plain copies occur (at most
//! λ). Everything in [`crate::sequences`] is checked against the statistics
//! collected here.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{MultiPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartConfig {
    b: u32,
    lambda: u32,
}

impl PartConfig {
    pub fn new(b: u32, lambda: u32) -> Result<Self> {
        if b < 2 {
            return Err(Error::InvalidArgument(format!(
                "base must be >= 2, got {b}"
            )));
        }
        if lambda < 1 {
            return Err(Error::InvalidArgument("lambda must be >= 1".into()));
        }
        Ok(PartConfig { b, lambda })
    }

    /// The main case of interest, λ = b.
    pub fn restricted(b: u32) -> Result<Self> {
        Self::new(b, b)
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// Powers b^0, b^1, ... not exceeding `n`.
    fn powers_up_to(&self, n: u64) -> Vec<u64> {
        let mut v = vec![1u64];
        loop {
            let next = match v.last().unwrap().checked_mul(self.b as u64) {
                Some(p) if p <= n => p,
                _ => break,
            };
            v.push(next);
        }
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartEntry {
    pub power_exp: u32,
    pub overlined: bool,
    pub plain_count: u32,
}

/// One overpartition, entries sorted by descending power.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Overpartition {
    entries: Vec<PartEntry>,
}

/// Exponent tuple `(i, j_1, .., j_λ)`: `i` overlined parts, `j_k` powers
/// occurring exactly `k` times without overline.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StatVector {
    pub i: u32,
    pub j: Vec<u32>,
}

impl StatVector {
    /// `j_k` for 1 ≤ k; zero beyond λ.
    pub fn j(&self, k: usize) -> u32 {
        if k == 0 {
            return 0;
        }
        self.j.get(k - 1).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> Vec<u32> {
        std::iter::once(self.i)
            .chain(self.j.iter().copied())
            .collect()
    }
}

impl Overpartition {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[PartEntry] {
        &self.entries
    }

    pub fn value(&self, cfg: &PartConfig) -> u64 {
        self.entries
            .iter()
            .map(|e| (e.overlined as u64 + e.plain_count as u64) * (cfg.b as u64).pow(e.power_exp))
            .sum()
    }

    pub fn overlined_count(&self) -> u32 {
        self.entries.iter().filter(|e| e.overlined).count() as u32
    }

    /// Total number of non-overlined parts (with repetition).
    pub fn plain_total(&self) -> u32 {
        self.entries.iter().map(|e| e.plain_count).sum()
    }

    /// Renders in part-list notation, overlined parts as `~v`. With
    /// `compact`, repeated plain parts are written `v^k`.
    pub fn render(&self, cfg: &PartConfig, compact: bool) -> String {
        let mut parts: Vec<String> = Vec::new();
        for e in &self.entries {
            let v = (cfg.b as u64).pow(e.power_exp);
            if e.overlined {
                parts.push(format!("~{v}"));
            }
            if compact && e.plain_count > 1 {
                parts.push(format!("{v}^{}", e.plain_count));
            } else {
                parts.extend((0..e.plain_count).map(|_| v.to_string()));
            }
        }
        format!("({})", parts.join(","))
    }

    /// Parses the notation produced by [`Overpartition::render`]. Parts may
    /// come in any order; each must be a power of `b`, an overlined power may
    /// occur once, and a plain power at most λ times.
    pub fn parse(text: &str, cfg: &PartConfig) -> Result<Self> {
        let perr = |msg: String| Error::Parse { pos: 0, msg };
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| perr("expected parenthesized part list".into()))?;
        let mut map: std::collections::BTreeMap<u32, (bool, u32)> = Default::default();
        if !inner.trim().is_empty() {
            for raw in inner.split(',') {
                let raw = raw.trim();
                let (over, body) = match raw.strip_prefix('~') {
                    Some(rest) => (true, rest),
                    None => (false, raw),
                };
                let (val_s, rep_s) = match body.split_once('^') {
                    Some((v, r)) => (v, Some(r)),
                    None => (body, None),
                };
                let val: u64 = val_s
                    .parse()
                    .map_err(|_| perr(format!("bad part {raw:?}")))?;
                let rep: u32 = match rep_s {
                    Some(r) => r
                        .parse()
                        .map_err(|_| perr(format!("bad repetition in {raw:?}")))?,
                    None => 1,
                };
                if rep == 0 {
                    return Err(perr(format!("zero repetition in {raw:?}")));
                }
                let exp = power_exponent(val, cfg.b)
                    .ok_or_else(|| perr(format!("{val} is not a power of {}", cfg.b)))?;
                let slot = map.entry(exp).or_insert((false, 0));
                if over {
                    if slot.0 || rep > 1 {
                        return Err(perr(format!("~{val} overlined more than once")));
                    }
                    slot.0 = true;
                } else {
                    slot.1 = slot
                        .1
                        .checked_add(rep)
                        .filter(|&c| c <= cfg.lambda)
                        .ok_or_else(|| {
                            perr(format!("{val} occurs more than {} times", cfg.lambda))
                        })?;
                }
            }
        }
        let entries = map
            .into_iter()
            .rev()
            .map(|(power_exp, (overlined, plain_count))| PartEntry {
                power_exp,
                overlined,
                plain_count,
            })
            .collect();
        let p = Overpartition { entries };
        let mut total: u64 = 0;
        for e in &p.entries {
            let v = (cfg.b as u64)
                .checked_pow(e.power_exp)
                .and_then(|v| v.checked_mul(e.overlined as u64 + e.plain_count as u64))
                .and_then(|v| total.checked_add(v));
            total = v.ok_or_else(|| perr("value overflows".into()))?;
        }
        Ok(p)
    }
}

fn power_exponent(v: u64, b: u32) -> Option<u32> {
    if v == 0 {
        return None;
    }
    let mut v = v;
    let mut k = 0;
    while v.is_multiple_of(b as u64) {
        v /= b as u64;
        k += 1;
    }
    (v == 1).then_some(k)
}

impl fmt::Display for StatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i={}", self.i)?;
        for (k, j) in self.j.iter().enumerate() {
            write!(f, " j{}={}", k + 1, j)?;
        }
        Ok(())
    }
}

/// All λ-restricted b-ary overpartitions of `n`, powers descending, the
/// overline choice varying slower than the plain multiplicity.
pub fn enumerate(cfg: &PartConfig, n: u64) -> Vec<Overpartition> {
    let powers = cfg.powers_up_to(n.max(1));
    // cap[j]: the largest total reachable using only b^0..b^j
    let mut cap = Vec::with_capacity(powers.len());
    let mut acc: u64 = 0;
    for &p in &powers {
        acc = acc.saturating_add(p.saturating_mul(1 + cfg.lambda as u64));
        cap.push(acc);
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(
        cfg,
        &powers,
        &cap,
        powers.len() - 1,
        n,
        &mut current,
        &mut out,
    );
    out
}

fn descend(
    cfg: &PartConfig,
    powers: &[u64],
    cap: &[u64],
    j: usize,
    remaining: u64,
    current: &mut Vec<PartEntry>,
    out: &mut Vec<Overpartition>,
) {
    if remaining > cap[j] {
        return;
    }
    let p = powers[j];
    for overlined in [false, true] {
        for plain_count in 0..=cfg.lambda {
            let used = (overlined as u64 + plain_count as u64) * p;
            if used > remaining {
                break;
            }
            let pushed = used > 0;
            if pushed {
                current.push(PartEntry {
                    power_exp: j as u32,
                    overlined,
                    plain_count,
                });
            }
            let rest = remaining - used;
            if j == 0 {
                if rest == 0 {
                    out.push(Overpartition {
                        entries: current.clone(),
                    });
                }
            } else {
                descend(cfg, powers, cap, j - 1, rest, current, out);
            }
            if pushed {
                current.pop();
            }
        }
    }
}

/// Number of overpartitions of each n in 0..=max_n, by enumeration.
pub fn count_series(cfg: &PartConfig, max_n: u64) -> Vec<u64> {
    (0..=max_n)
        .map(|n| enumerate(cfg, n).len() as u64)
        .collect()
}

/// Coefficients of q^0..q^max_n of the truncated infinite product
/// `prod_j (1 + q^{b^j}) (1 + q^{b^j} + ... + q^{λ b^j})`.
pub fn product_series(cfg: &PartConfig, max_n: u64) -> Vec<u64> {
    let len = max_n as usize + 1;
    let mut series = vec![0u64; len];
    series[0] = 1;
    for p in cfg.powers_up_to(max_n.max(1)) {
        let p = p as usize;
        if p >= len {
            continue;
        }
        // multiply by (1 + q^p)
        for k in (p..len).rev() {
            series[k] += series[k - p];
        }
        // multiply by (1 + q^p + ... + q^{λp})
        let prev = series.clone();
        for k in 0..len {
            let mut s = 0u64;
            for m in 1..=cfg.lambda as usize {
                if m * p > k {
                    break;
                }
                s += prev[k - m * p];
            }
            series[k] += s;
        }
    }
    series
}

pub fn stats(p: &Overpartition, cfg: &PartConfig) -> StatVector {
    let mut j = vec![0u32; cfg.lambda as usize];
    for e in &p.entries {
        if e.plain_count > 0 {
            j[e.plain_count as usize - 1] += 1;
        }
    }
    StatVector {
        i: p.overlined_count(),
        j,
    }
}

/// Sum of `x^i y_1^{j_1} ... y_λ^{j_λ}` over all overpartitions of `n`.
/// With λ = b this is the oracle for `p_n`.
pub fn weight_poly(cfg: &PartConfig, n: u64) -> MultiPoly {
    let arity = 1 + cfg.lambda as usize;
    let one = Rational::from_integer(BigInt::from(1));
    MultiPoly::from_terms(
        arity,
        enumerate(cfg, n)
            .iter()
            .map(|p| (stats(p, cfg).exponents(), one.clone())),
    )
    .expect("exponent vectors have the right length")
}

/// The statistic `S`: overlined parts plus powers occurring plainly once,
/// b−1 times or b times (each category counted once when they coincide, as
/// for b = 2).
pub fn s_statistic(p: &Overpartition, cfg: &PartConfig) -> u32 {
    let st = stats(p, cfg);
    let b = cfg.b as usize;
    let mut ks = vec![1, b - 1, b];
    ks.sort_unstable();
    ks.dedup();
    st.i + ks
        .into_iter()
        .filter(|&k| k >= 1)
        .map(|k| st.j(k))
        .sum::<u32>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary() -> PartConfig {
        PartConfig::new(2, 2).unwrap()
    }

    #[test]
    fn eight_overpartitions_of_four() {
        let all = enumerate(&binary(), 4);
        assert_eq!(all.len(), 8);
        for p in &all {
            assert_eq!(p.value(&binary()), 4);
        }
        let rendered: Vec<String> = all.iter().map(|p| p.render(&binary(), false)).collect();
        for expected in [
            "(4)",
            "(~4)",
            "(2,2)",
            "(~2,2)",
            "(2,1,1)",
            "(2,~1,1)",
            "(~2,1,1)",
            "(~2,~1,1)",
        ] {
            assert!(
                rendered.contains(&expected.to_string()),
                "{expected} missing from {rendered:?}"
            );
        }
    }

    #[test]
    fn zero_has_only_the_empty_overpartition() {
        let all = enumerate(&binary(), 0);
        assert_eq!(all, vec![Overpartition::empty()]);
        assert_eq!(all[0].render(&binary(), true), "()");
    }

    #[test]
    fn first_eleven_counts() {
        let expected = vec![1, 2, 4, 5, 8, 10, 13, 14, 18, 21, 26];
        assert_eq!(count_series(&binary(), 10), expected);
        assert_eq!(product_series(&binary(), 10), expected);
    }

    #[test]
    fn base_five_thirty_has_thirteen() {
        let cfg = PartConfig::restricted(5).unwrap();
        let all = enumerate(&cfg, 30);
        assert_eq!(all.len(), 13);
        let rendered: Vec<String> = all.iter().map(|p| p.render(&cfg, true)).collect();
        assert!(rendered.contains(&"(25,5)".to_string()));
        assert!(rendered.contains(&"(~25,5)".to_string()));
        assert!(rendered.contains(&"(~5,5^4,~1,1^4)".to_string()));
    }

    #[test]
    fn stats_of_example_partitions() {
        let cfg = binary();
        let p = Overpartition::parse("(2,2,1,1)", &cfg).unwrap();
        assert_eq!(
            stats(&p, &cfg),
            StatVector {
                i: 0,
                j: vec![0, 2]
            }
        );
        let p = Overpartition::parse("(~2,2,1,1)", &cfg).unwrap();
        assert_eq!(
            stats(&p, &cfg),
            StatVector {
                i: 1,
                j: vec![1, 1]
            }
        );
    }

    #[test]
    fn s_statistic_examples() {
        let five = PartConfig::restricted(5).unwrap();
        let p = Overpartition::parse("(5^5,1^5)", &five).unwrap();
        assert_eq!(s_statistic(&p, &five), 2);
        let p = Overpartition::parse("(5^5,~1,1^4)", &five).unwrap();
        assert_eq!(s_statistic(&p, &five), 3);
        let p = Overpartition::parse("(~5,5^4,~1,1^4)", &five).unwrap();
        assert_eq!(s_statistic(&p, &five), 4);
        let p = Overpartition::parse("(~2,2,~1,1)", &binary()).unwrap();
        assert_eq!(s_statistic(&p, &binary()), 4);
        assert_eq!(s_statistic(&Overpartition::empty(), &binary()), 0);
    }

    #[test]
    fn parse_rejects_invalid_parts() {
        let cfg = binary();
        for bad in [
            "2,1", "(3)", "(~2,~2)", "(1,1,1)", "(~2^2)", "(0)", "(2^0)", "(x)",
        ] {
            assert!(Overpartition::parse(bad, &cfg).is_err(), "{bad}");
        }
        let p = Overpartition::parse("(1, ~4 ,1)", &cfg).unwrap();
        assert_eq!(p.render(&cfg, false), "(~4,1,1)");
    }

    #[test]
    fn config_validation() {
        assert!(PartConfig::new(1, 2).is_err());
        assert!(PartConfig::new(2, 0).is_err());
    }
}
