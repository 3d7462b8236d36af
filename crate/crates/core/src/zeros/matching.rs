//! Bottleneck bipartite matching between two point multisets.

use num_complex::Complex64;

fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if owner[v].is_none() || augment(owner[v].unwrap(), adj, seen, owner) {
            owner[v] = Some(u);
            return true;
        }
    }
    false
}

fn perfect_within(a: &[Complex64], b: &[Complex64], limit: f64) -> bool {
    let adj: Vec<Vec<usize>> = a
        .iter()
        .map(|p| {
            (0..b.len())
                .filter(|&j| (p - b[j]).norm() <= limit)
                .collect()
        })
        .collect();
    let mut owner = vec![None; b.len()];
    (0..a.len()).all(|u| augment(u, &adj, &mut vec![false; b.len()], &mut owner))
}

/// Smallest `d` such that the two multisets can be paired one-to-one with
/// every pair at distance ≤ `d`. `None` when the sizes differ.
pub fn bottleneck_distance(a: &[Complex64], b: &[Complex64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    if a.is_empty() {
        return Some(0.0);
    }
    let mut cands: Vec<f64> = a
        .iter()
        .flat_map(|p| b.iter().map(move |q| (p - q).norm()))
        .collect();
    cands.sort_by(f64::total_cmp);
    cands.dedup();
    let (mut lo, mut hi) = (0, cands.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if perfect_within(a, b, cands[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Some(cands[lo])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_the_optimal_pairing() {
        let a = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        let b = [Complex64::new(1.1, 0.0), Complex64::new(0.05, 0.0)];
        assert!((bottleneck_distance(&a, &b).unwrap() - 0.1).abs() < 1e-12);
        assert_eq!(bottleneck_distance(&a, &b[..1]), None);
    }

    #[test]
    fn multiplicities_count() {
        let a = [Complex64::new(-1.0, 0.0); 2];
        let b = [Complex64::new(-1.0, 0.0), Complex64::new(3.0, 0.0)];
        assert!(bottleneck_distance(&a, &b).unwrap() > 3.9);
    }
}
