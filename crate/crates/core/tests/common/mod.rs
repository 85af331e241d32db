#![allow(dead_code)]

use golayzcp::{GcpRecipe, KernelId};

/// Every distinct ordering of the given multiset of step kernels.
fn orderings(counts: [usize; 3]) -> Vec<Vec<KernelId>> {
    let total: usize = counts.iter().sum();
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (slot, &k) in KernelId::ALL.iter().enumerate() {
        if counts[slot] == 0 {
            continue;
        }
        let mut rest = counts;
        rest[slot] -= 1;
        for mut tail in orderings(rest) {
            tail.insert(0, k);
            out.push(tail);
        }
    }
    out
}

/// All recipes with the given seed and length at most `max_len`, over every
/// step order.
pub fn recipes_seeded(seed: KernelId, max_len: usize) -> Vec<GcpRecipe> {
    let mut out = Vec::new();
    let mut counts = [0usize; 3];
    let lens = [2usize, 10, 26];
    for a in 0..=20 {
        for b in 0..=6 {
            for c in 0..=4 {
                let len = seed.len() * lens[0].pow(a) * lens[1].pow(b) * lens[2].pow(c);
                if len > max_len {
                    continue;
                }
                counts[0] = a as usize;
                counts[1] = b as usize;
                counts[2] = c as usize;
                for steps in orderings(counts) {
                    out.push(GcpRecipe::new(seed, steps));
                }
            }
        }
    }
    out.sort_by_key(|r| (r.len(), r.to_string()));
    out
}

pub fn binary_seeded_recipes(max_len: usize) -> Vec<GcpRecipe> {
    recipes_seeded(KernelId::K2, max_len)
}

pub fn runs(parts: &[(u64, usize)]) -> Vec<u64> {
    parts
        .iter()
        .flat_map(|&(m, k)| std::iter::repeat_n(m, k))
        .collect()
}
