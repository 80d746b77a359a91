use std::cmp::Reverse;

use fixedbitset::FixedBitSet;

/// Maximum independent set of a conflict graph given as adjacency bit rows.
///
/// Branch and bound: vertices without remaining conflicts are taken outright,
/// otherwise branch on the remaining vertex of highest degree (take it, or drop
/// it). A branch is cut when even taking every remaining vertex cannot beat the
/// incumbent. Returns the members in ascending order; among optima, the first
/// one found wins.
pub(crate) fn maximum_independent_set(conflicts: &[FixedBitSet]) -> Vec<usize> {
    let n = conflicts.len();
    let mut remaining = FixedBitSet::with_capacity(n);
    remaining.insert_range(..);
    let mut best = Vec::new();
    let mut current = Vec::new();
    branch(conflicts, remaining, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn branch(
    conflicts: &[FixedBitSet],
    mut remaining: FixedBitSet,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    let depth = current.len();
    loop {
        // vertices with no conflict left belong to some optimum
        let isolated: Vec<usize> = remaining
            .ones()
            .filter(|&v| conflicts[v].is_disjoint(&remaining))
            .collect();
        for v in isolated {
            remaining.set(v, false);
            current.push(v);
        }
        if current.len() + remaining.count_ones(..) <= best.len() {
            break;
        }
        let pick = remaining
            .ones()
            .max_by_key(|&v| (conflicts[v].intersection(&remaining).count(), Reverse(v)));
        let Some(v) = pick else {
            *best = current.clone();
            break;
        };
        let mut taken = remaining.clone();
        taken.set(v, false);
        taken.difference_with(&conflicts[v]);
        current.push(v);
        branch(conflicts, taken, current, best);
        current.pop();
        remaining.set(v, false);
    }
    current.truncate(depth);
}
