//! Permutation test on the distance between group mean landscapes.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::landscape::PersistenceLandscape;
use crate::metrics::{landscape_distance, lp_norm, PNorm};

/// Lambda_p between the mean of `subset` and the mean of its complement.
fn split_statistic(
    all: &[&PersistenceLandscape],
    subset: &[usize],
    p: PNorm,
) -> f64 {
    let in_subset: Vec<bool> = {
        let mut v = vec![false; all.len()];
        for &i in subset {
            v[i] = true;
        }
        v
    };
    let wa = 1.0 / subset.len() as f64;
    let wb = 1.0 / (all.len() - subset.len()) as f64;
    let terms: Vec<(f64, &PersistenceLandscape)> = all
        .iter()
        .enumerate()
        .map(|(i, &l)| (if in_subset[i] { wa } else { -wb }, l))
        .collect();
    let diff = PersistenceLandscape::linear_combination(&terms);
    lp_norm(&diff, p)
}

/// Deterministic total order on landscape data, used to make relabelings
/// independent of which group came first.
fn canonical_cmp(a: &PersistenceLandscape, b: &PersistenceLandscape) -> Ordering {
    let (la, lb) = (a.levels(), b.levels());
    la.len().cmp(&lb.len()).then_with(|| {
        for (fa, fb) in la.iter().zip(lb.iter()) {
            let (pa, pb) = (fa.critical_points(), fb.critical_points());
            match pa.len().cmp(&pb.len()) {
                Ordering::Equal => {}
                o => return o,
            }
            for (&(ta, va), &(tb, vb)) in pa.iter().zip(pb.iter()) {
                match ta.total_cmp(&tb).then(va.total_cmp(&vb)) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
        }
        Ordering::Equal
    })
}

/// Permutation test on T = Lambda_p(mean(A), mean(B)) with uniformly random
/// relabelings. The p-value uses the add-one convention
/// (1 + #{T* >= T}) / (1 + reps), so it never reaches zero. Deterministic
/// given the seed: each replicate's randomness is derived from
/// seed + replicate index, so aggregation order (and any parallel schedule)
/// cannot change the result, and the value is invariant under exchanging
/// the two groups.
pub fn permutation_test(
    group_a: &[PersistenceLandscape],
    group_b: &[PersistenceLandscape],
    p: PNorm,
    reps: usize,
    seed: u64,
) -> Result<f64> {
    if group_a.is_empty() || group_b.is_empty() || reps == 0 {
        return Err(Error::InvalidParameter(
            "permutation test needs two nonempty groups and reps >= 1".into(),
        ));
    }
    let mean_a = PersistenceLandscape::mean(group_a)?;
    let mean_b = PersistenceLandscape::mean(group_b)?;
    let observed = landscape_distance(&mean_a, &mean_b, p);

    // Group order must not matter, so relabelings are drawn against a
    // canonically sorted pool, always selecting the smaller group size
    // (the statistic is symmetric in subset/complement).
    let mut all: Vec<&PersistenceLandscape> = group_a.iter().chain(group_b.iter()).collect();
    all.sort_by(|a, b| canonical_cmp(a, b));
    let pick = group_a.len().min(group_b.len());

    let mut exceed = 0usize;
    let mut indices: Vec<usize> = (0..all.len()).collect();
    for rep in 0..reps {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(rep as u64 + 1));
        indices.shuffle(&mut rng);
        if split_statistic(&all, &indices[..pick], p) >= observed {
            exceed += 1;
        }
    }
    Ok((1 + exceed) as f64 / (1 + reps) as f64)
}

/// Exhaustive variant over all label splits; practical for small total
/// group sizes (used by tests as the oracle for the randomized version).
pub fn permutation_test_exhaustive(
    group_a: &[PersistenceLandscape],
    group_b: &[PersistenceLandscape],
    p: PNorm,
) -> Result<f64> {
    if group_a.is_empty() || group_b.is_empty() {
        return Err(Error::InvalidParameter(
            "permutation test needs two nonempty groups".into(),
        ));
    }
    let mean_a = PersistenceLandscape::mean(group_a)?;
    let mean_b = PersistenceLandscape::mean(group_b)?;
    let observed = landscape_distance(&mean_a, &mean_b, p);

    let all: Vec<&PersistenceLandscape> = group_a.iter().chain(group_b.iter()).collect();
    let n = all.len();
    let n_a = group_a.len();
    let mut exceed = 0usize;
    let mut total = 0usize;
    let mut chosen: Vec<usize> = Vec::with_capacity(n_a);
    enumerate_subsets(n, n_a, 0, &mut chosen, &mut |subset| {
        total += 1;
        if split_statistic(&all, subset, p) >= observed - 1e-12 {
            exceed += 1;
        }
    });
    Ok(exceed as f64 / total as f64)
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in start..n {
        chosen.push(i);
        enumerate_subsets(n, k, i + 1, chosen, f);
        chosen.pop();
    }
}
