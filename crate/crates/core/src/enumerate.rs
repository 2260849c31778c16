//! Exhaustive enumeration of k-ary trees with a fixed vertex count.
//!
//! The stream order is deterministic: a tree is a root plus a
//! composition of n-1 into k ordered nonnegative subtree sizes;
//! compositions advance in lexicographic order and child subtrees
//! recurse in the same order, with later subtrees varying fastest.
//! Fixing the root composition yields a disjoint sub-stream, which is
//! the partitioning hook for parallel sweeps.

use num::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::guard::WorkGuard;
use crate::tree::KAryTree;
use crate::tree::Node;

/// Number of k-ary trees with n vertices, by the convolution
/// recurrence: c(0) = 1 and c(n) = sum over ordered k-tuples of
/// subtree sizes adding to n-1 of the product of their counts.
pub fn count_trees(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidArity(0));
    }
    if n == 0 {
        return Ok(BigInt::from(1u32));
    }
    let zero = BigInt::from(0u32);
    // c[v] = trees with v vertices; forests[j][v] = ordered forests of
    // j subtrees with v vertices total. Filled by ascending v, since
    // c[v] = forests[k][v-1] only involves smaller sizes.
    let mut c: Vec<BigInt> = Vec::with_capacity(n);
    let mut forests: Vec<Vec<BigInt>> = vec![vec![zero.clone(); n]; k + 1];
    for v in 0..n {
        let cv = if v == 0 {
            BigInt::from(1u32)
        } else {
            forests[k][v - 1].clone()
        };
        c.push(cv);
        forests[0][v] = if v == 0 {
            BigInt::from(1u32)
        } else {
            zero.clone()
        };
        for j in 1..=k {
            let mut sum = zero.clone();
            for last in 0..=v {
                if forests[j - 1][v - last] != zero {
                    sum += &c[last] * &forests[j - 1][v - last];
                }
            }
            forests[j][v] = sum;
        }
    }
    Ok(forests[k][n - 1].clone())
}

/// Tree count admitted through the guard. For vertex counts too large
/// to bother counting exactly, refuses with a lower-bound estimate.
pub(crate) fn guarded_tree_count(n: usize, k: usize, guard: &WorkGuard) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidArity(0));
    }
    if k >= 2 && n > 512 {
        // count >= Catalan(n) >= 2^(n-1): refuse without computing.
        return Err(guard.refuse(
            &format!("enumeration of {k}-ary trees with {n} vertices"),
            format!("at least 2^{}", n - 1),
        ));
    }
    let count = count_trees(n, k)?;
    guard.admit(
        &format!("enumeration of {k}-ary trees with {n} vertices"),
        &count,
    )
}

/// All compositions of `total` into `parts` ordered nonnegative parts,
/// in lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; parts];
    fn rec(total: usize, idx: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if idx + 1 == current.len() {
            current[idx] = total;
            out.push(current.clone());
            return;
        }
        for v in 0..=total {
            current[idx] = v;
            rec(total - v, idx + 1, current, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, 0, &mut current, &mut out);
    out
}

/// Resumable decision stack: replays a sequence of bounded choices,
/// advancing the last incrementable choice between replays. Bounds may
/// depend on earlier choices but must not depend on later ones.
struct ChoiceGen {
    started: bool,
    stack: Vec<(usize, usize)>,
    pos: usize,
}

impl ChoiceGen {
    fn new() -> Self {
        ChoiceGen {
            started: false,
            stack: Vec::new(),
            pos: 0,
        }
    }

    /// Prepares the next replay; false when the space is exhausted.
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        for i in (0..self.stack.len()).rev() {
            if self.stack[i].0 < self.stack[i].1 {
                self.stack[i].0 += 1;
                self.stack.truncate(i + 1);
                self.pos = 0;
                return true;
            }
        }
        false
    }

    /// Next choice in 0..=bound for the current replay.
    fn choose(&mut self, bound: usize) -> usize {
        if self.pos == self.stack.len() {
            self.stack.push((0, 0));
        }
        self.stack[self.pos].1 = bound;
        let v = self.stack[self.pos].0;
        self.pos += 1;
        v
    }
}

/// Iterator over all k-ary trees with n vertices, or over the
/// sub-stream with a fixed root composition.
pub struct TreeIter {
    n: usize,
    k: usize,
    root_sizes: Option<Vec<usize>>,
    gen: ChoiceGen,
    done: bool,
}

impl TreeIter {
    /// The full stream for (n, k).
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArity(0));
        }
        Ok(TreeIter {
            n,
            k,
            root_sizes: None,
            gen: ChoiceGen::new(),
            done: false,
        })
    }

    /// The sub-stream of trees whose root subtree sizes are exactly
    /// `sizes` (k entries summing to n-1). Disjoint sub-streams over
    /// all compositions partition the full stream.
    pub fn with_root_sizes(n: usize, k: usize, sizes: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArity(0));
        }
        if n == 0 {
            return Err(Error::InvalidArgument(
                "root composition requires at least one vertex".to_string(),
            ));
        }
        if sizes.len() != k || sizes.iter().sum::<usize>() != n - 1 {
            return Err(Error::InvalidArgument(format!(
                "root composition must have {k} parts summing to {}",
                n - 1
            )));
        }
        Ok(TreeIter {
            n,
            k,
            root_sizes: Some(sizes),
            gen: ChoiceGen::new(),
            done: false,
        })
    }

    fn build(&mut self) -> KAryTree {
        fn subtree(gen: &mut ChoiceGen, size: usize, k: usize) -> Option<Box<Node>> {
            if size == 0 {
                return None;
            }
            let mut rest = size - 1;
            let mut slots = Vec::with_capacity(k);
            for slot in 0..k {
                let take = if slot + 1 == k {
                    rest
                } else {
                    gen.choose(rest)
                };
                slots.push(subtree(gen, take, k));
                rest -= take;
            }
            Some(Box::new(Node { slots }))
        }

        let root = match &self.root_sizes {
            None => subtree(&mut self.gen, self.n, self.k),
            Some(sizes) => {
                let sizes = sizes.clone();
                let mut slots = Vec::with_capacity(self.k);
                for &s in &sizes {
                    slots.push(subtree(&mut self.gen, s, self.k));
                }
                Some(Box::new(Node { slots }))
            }
        };
        KAryTree::from_root(self.k, root)
    }
}

impl Iterator for TreeIter {
    type Item = KAryTree;

    fn next(&mut self) -> Option<KAryTree> {
        if self.done || !self.gen.advance() {
            self.done = true;
            return None;
        }
        Some(self.build())
    }
}

/// Guarded exhaustive enumeration. The returned iterator yields each
/// k-ary tree with n vertices exactly once, in the deterministic order
/// described at module level.
pub fn enumerate_trees(n: usize, k: usize, guard: &WorkGuard) -> Result<TreeIter> {
    guarded_tree_count(n, k, guard)?;
    TreeIter::new(n, k)
}

/// Parallel exact reduction over the tree stream: the stream is split
/// by root composition, each partition folds sequentially, and partial
/// accumulators merge. `merge` must be commutative and associative for
/// the result to be independent of the parallelism degree; all uses in
/// this crate are exact sums, so it is.
pub(crate) fn parallel_tree_fold<A, In, St, Mg>(
    n: usize,
    k: usize,
    init: In,
    step: St,
    merge: Mg,
) -> A
where
    A: Send,
    In: Fn() -> A + Sync + Send,
    St: Fn(&mut A, &KAryTree) + Sync + Send,
    Mg: Fn(A, A) -> A + Sync + Send,
{
    if n == 0 {
        let mut acc = init();
        step(&mut acc, &KAryTree::from_root(k, None));
        return acc;
    }
    let comps = compositions(n - 1, k);
    comps
        .into_par_iter()
        .map(|sizes| {
            let mut acc = init();
            let iter = TreeIter::with_root_sizes(n, k, sizes).expect("valid partition");
            for t in iter {
                step(&mut acc, &t);
            }
            acc
        })
        .reduce(init, merge)
}
