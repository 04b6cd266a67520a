//! Exact minimum-cost perfect assignment (Hungarian algorithm with
//! potentials, shortest augmenting paths, O(n^3)).

/// Solve the assignment problem on a square cost matrix. Returns the
/// column assigned to each row and the total cost of the optimum.
pub fn min_cost_assignment(cost: &[Vec<f64>]) -> (Vec<usize>, f64) {
    let n = cost.len();
    if n == 0 {
        return (Vec::new(), 0.0);
    }
    debug_assert!(cost.iter().all(|row| row.len() == n));
    let inf = f64::INFINITY;
    // 1-based arrays; p[j] is the row matched to column j, 0 if free.
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![usize::MAX; n];
    let mut total = 0.0;
    for j in 1..=n {
        let i = p[j];
        if i != 0 {
            assignment[i - 1] = j - 1;
            total += cost[i - 1][j - 1];
        }
    }
    (assignment, total)
}

/// Does a perfect matching exist in the bipartite graph on `n` left and `n`
/// right nodes with edges given by `allowed`? Kuhn's augmenting-path search.
pub fn has_perfect_matching(n: usize, allowed: impl Fn(usize, usize) -> bool) -> bool {
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    fn augment(
        l: usize,
        n: usize,
        allowed: &impl Fn(usize, usize) -> bool,
        seen: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for r in 0..n {
            if seen[r] || !allowed(l, r) {
                continue;
            }
            seen[r] = true;
            if match_right[r].is_none()
                || augment(match_right[r].unwrap(), n, allowed, seen, match_right)
            {
                match_right[r] = Some(l);
                return true;
            }
        }
        false
    }
    for l in 0..n {
        let mut seen = vec![false; n];
        if !augment(l, n, &allowed, &mut seen, &mut match_right) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all permutations, for cross-checking.
    fn brute_force(cost: &[Vec<f64>]) -> f64 {
        let n = cost.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = f64::INFINITY;
        permute(&mut perm, 0, &mut |p| {
            let c: f64 = (0..n).map(|i| cost[i][p[i]]).sum();
            if c < best {
                best = c;
            }
        });
        best
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn matches_brute_force_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(1..=6);
            let cost: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.random_range(0.0..10.0)).collect())
                .collect();
            let (assign, total) = min_cost_assignment(&cost);
            let mut sorted = assign.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..n).collect::<Vec<_>>());
            let want = brute_force(&cost);
            assert!((total - want).abs() < 1e-9, "total={total} want={want}");
        }
    }

    #[test]
    fn perfect_matching_feasibility() {
        // 2x2, only diagonal edges allowed.
        assert!(has_perfect_matching(2, |l, r| l == r));
        // Both left nodes point at the same right node.
        assert!(!has_perfect_matching(2, |_, r| r == 0));
    }
}
