//! Staircase arrays, staircase labelings of k-ary trees, and the
//! mutually inverse maps between them.
//!
//! A staircase array of size n over arity k is a sequence
//! (C_0, ..., C_{n-1}) where C_i is a vector of length i with entries
//! in 1..=k. A staircase labeling assigns these vectors to the n
//! vertices of a k-ary tree so that label lengths strictly increase
//! away from the root and, for every ancestor u with label length i,
//! the (i+1)-st component of every label below u records which child
//! slot of u the path descends through.
//!
//! [`StaircaseArray::to_labeled_tree`] inserts vertices one at a time,
//! walking from the root and reading the child slot to take at a
//! vertex with label length i from component i+1 of the label being
//! placed; the walk ends at the first empty slot. Labels make the walk
//! deterministic, so the map is a bijection and
//! [`StaircaseLabeledTree::to_array`] inverts it by sorting the labels
//! by length.

use std::fmt;

use num::BigInt;

use crate::arith::{exact_div, factorial, pow_big, PowerTable};
use crate::error::{Error, Result};
use crate::tree::{KAryTree, Node};

/// A sequence (C_0, ..., C_{n-1}) with C_i of length i over 1..=k.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StaircaseArray {
    k: usize,
    entries: Vec<Vec<u32>>,
}

impl StaircaseArray {
    pub fn new(k: usize, entries: Vec<Vec<u32>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArity(0));
        }
        if entries.is_empty() {
            return Err(Error::MalformedArray(
                "an array has at least the empty vector C_0".to_string(),
            ));
        }
        for (i, entry) in entries.iter().enumerate() {
            if entry.len() != i {
                return Err(Error::MalformedArray(format!(
                    "entry {i} must have length {i}, found {}",
                    entry.len()
                )));
            }
            for &c in entry {
                if c < 1 || c as usize > k {
                    return Err(Error::MalformedArray(format!(
                        "entry {i} has component {c} outside 1..={k}"
                    )));
                }
            }
        }
        Ok(StaircaseArray { k, entries })
    }

    /// The all-ones array, lexicographically first in S(n, k).
    pub fn first(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedArray(
                "an array has at least the empty vector C_0".to_string(),
            ));
        }
        let entries = (0..n).map(|i| vec![1u32; i]).collect();
        StaircaseArray::new(k, entries)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &[u32] {
        &self.entries[i]
    }

    /// Builds the staircase-labeled tree this array corresponds to.
    /// Total on well-formed arrays; the constructor enforces
    /// well-formedness, so this cannot fail.
    pub fn to_labeled_tree(&self) -> StaircaseLabeledTree {
        let n = self.entries.len();
        let k = self.k;
        // Vertex m carries label C_m; slots hold vertex indices.
        let mut slots: Vec<Vec<Option<usize>>> = (0..n).map(|_| vec![None; k]).collect();
        for m in 1..n {
            let label = &self.entries[m];
            let mut current = 0usize;
            loop {
                // The current vertex has label length `current`, so the
                // slot to take is component current+1 of the new label.
                let slot = (label[current] - 1) as usize;
                match slots[current][slot] {
                    None => {
                        slots[current][slot] = Some(m);
                        break;
                    }
                    Some(next) => {
                        // Label lengths strictly increase along the walk
                        // and stay below m, which bounds it; a violation
                        // here would mean the partial tree was not
                        // staircase-labeled.
                        assert!(
                            next > current && next < m,
                            "internal invariant violation: staircase walk left label order"
                        );
                        current = next;
                    }
                }
            }
        }

        // Convert the insertion arena to a preorder tree plus labels.
        fn build(
            arena: &[Vec<Option<usize>>],
            entries: &[Vec<u32>],
            idx: usize,
            labels: &mut Vec<Vec<u32>>,
        ) -> Box<Node> {
            labels.push(entries[idx].clone());
            let slots = arena[idx]
                .iter()
                .map(|slot| slot.map(|child| build(arena, entries, child, labels)))
                .collect();
            Box::new(Node { slots })
        }
        let mut labels = Vec::with_capacity(n);
        let root = build(&slots, &self.entries, 0, &mut labels);
        StaircaseLabeledTree {
            tree: KAryTree::from_root(k, Some(root)),
            labels,
        }
    }

    pub(crate) fn first_components(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().skip(1).map(|e| e[0])
    }
}

/// Which staircase labeling rule a labeled tree violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelingViolation {
    /// Label lengths are not exactly 0..n-1 with each length once.
    LengthMultiset,
    /// A child's label is not longer than its parent's label.
    PathLength { parent: usize, child: usize },
    /// A label component does not record the child slot its ancestor
    /// path descends through.
    AncestorConsistency {
        ancestor: usize,
        descendant: usize,
        component: usize,
    },
}

impl fmt::Display for LabelingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelingViolation::LengthMultiset => write!(
                f,
                "label-multiset violation: label lengths must be exactly 0..n-1, each once"
            ),
            LabelingViolation::PathLength { parent, child } => write!(
                f,
                "path-length violation: label of vertex {child} is not longer than the label of its parent {parent}"
            ),
            LabelingViolation::AncestorConsistency {
                ancestor,
                descendant,
                component,
            } => write!(
                f,
                "ancestor-consistency violation: component {component} of the label of vertex {descendant} does not record its slot under vertex {ancestor}"
            ),
        }
    }
}

/// A k-ary tree whose vertices carry the labels of a staircase array,
/// keyed by preorder vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseLabeledTree {
    tree: KAryTree,
    labels: Vec<Vec<u32>>,
}

impl StaircaseLabeledTree {
    /// Attaches labels to a tree. Checks structure only (one label per
    /// vertex, components in range); use [`Self::validate`] for the
    /// labeling rules themselves.
    pub fn new(tree: KAryTree, labels: Vec<Vec<u32>>) -> Result<Self> {
        if tree.is_empty() {
            return Err(Error::EmptyTree);
        }
        let n = tree.vertex_count();
        if labels.len() != n {
            return Err(Error::LabelCountMismatch {
                vertices: n,
                labels: labels.len(),
            });
        }
        let k = tree.arity();
        for label in &labels {
            for &c in label {
                if c < 1 || c as usize > k {
                    return Err(Error::InvalidArgument(format!(
                        "label component {c} outside 1..={k}"
                    )));
                }
            }
        }
        Ok(StaircaseLabeledTree { tree, labels })
    }

    pub fn tree(&self) -> &KAryTree {
        &self.tree
    }

    pub fn k(&self) -> usize {
        self.tree.arity()
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Labels by preorder vertex id.
    pub fn labels(&self) -> &[Vec<u32>] {
        &self.labels
    }

    pub fn label_of(&self, vertex: usize) -> &[u32] {
        &self.labels[vertex]
    }

    /// Checks the three staircase labeling rules in order: the label
    /// lengths form 0..n-1, lengths strictly increase along every
    /// root-to-leaf path, and ancestor slots are recorded in the
    /// components they determine.
    pub fn validate(&self) -> std::result::Result<(), LabelingViolation> {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        for label in &self.labels {
            if label.len() >= n || seen[label.len()] {
                return Err(LabelingViolation::LengthMultiset);
            }
            seen[label.len()] = true;
        }

        let view = self.tree.view().expect("nonempty by construction");
        for v in 0..n {
            if let Some(p) = view.parent[v] {
                if self.labels[v].len() <= self.labels[p].len() {
                    return Err(LabelingViolation::PathLength {
                        parent: p,
                        child: v,
                    });
                }
            }
        }

        // DFS carrying (ancestor id, ancestor label length, slot taken).
        let mut stack: Vec<(usize, Vec<(usize, usize, usize)>)> = vec![(0, Vec::new())];
        while let Some((v, path)) = stack.pop() {
            for &(ancestor, len, slot) in &path {
                // len < label length of v after the path-length check.
                if self.labels[v][len] as usize != slot + 1 {
                    return Err(LabelingViolation::AncestorConsistency {
                        ancestor,
                        descendant: v,
                        component: len + 1,
                    });
                }
            }
            for (slot, child) in view.children[v].iter().enumerate() {
                if let Some(c) = *child {
                    let mut next = path.clone();
                    next.push((v, self.labels[v].len(), slot));
                    stack.push((c, next));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Reads the staircase array back off a valid labeling by sorting
    /// the labels by length.
    pub fn to_array(&self) -> Result<StaircaseArray> {
        self.validate()?;
        let mut sorted = self.labels.clone();
        sorted.sort_by_key(|l| l.len());
        StaircaseArray::new(self.k(), sorted)
    }

    /// Replaces every label by its length, giving an increasing tree.
    pub fn increasing_tree(&self) -> IncreasingTree {
        IncreasingTree {
            tree: self.tree.clone(),
            labels: self.labels.iter().map(|l| l.len()).collect(),
        }
    }
}

/// A k-ary tree with distinct labels 0..n-1 on its vertices, keyed by
/// preorder id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncreasingTree {
    tree: KAryTree,
    labels: Vec<usize>,
}

impl IncreasingTree {
    pub fn new(tree: KAryTree, labels: Vec<usize>) -> Result<Self> {
        let n = tree.vertex_count();
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        if labels.len() != n {
            return Err(Error::LabelCountMismatch {
                vertices: n,
                labels: labels.len(),
            });
        }
        let mut seen = vec![false; n];
        for &l in &labels {
            if l >= n || seen[l] {
                return Err(Error::InvalidArgument(format!(
                    "labels must be 0..{} with no repeats",
                    n - 1
                )));
            }
            seen[l] = true;
        }
        Ok(IncreasingTree { tree, labels })
    }

    pub fn tree(&self) -> &KAryTree {
        &self.tree
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// True iff the root is labeled 0 and every child's label exceeds
    /// its parent's.
    pub fn is_increasing(&self) -> bool {
        let view = match self.tree.view() {
            Some(v) => v,
            None => return false,
        };
        if self.labels[0] != 0 {
            return false;
        }
        (0..view.vertex_count()).all(|v| match view.parent[v] {
            Some(p) => self.labels[p] < self.labels[v],
            None => true,
        })
    }
}

/// Number of staircase arrays of size n over arity k: k^(n(n-1)/2).
pub fn count_arrays(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidArity(0));
    }
    if n == 0 {
        return Err(Error::InvalidArgument(
            "staircase arrays have size at least 1".to_string(),
        ));
    }
    let free = (n * (n - 1) / 2) as u64;
    Ok(pow_big(k, free))
}

/// Number of staircase labelings the given tree shape admits:
/// (n! / prod of hooks) * k^((1+...+n) - sum of depths). The first
/// factor counts increasing labelings; for each of those, every label
/// component not determined by an ancestor is a free choice in 1..=k.
pub fn count_staircase_labelings(tree: &KAryTree) -> Result<BigInt> {
    let hooks = tree.hook_lengths()?;
    let depths = tree.depths()?;
    let n = hooks.len();
    let k = tree.arity();

    let mut hook_product = BigInt::from(1u32);
    for &h in hooks.iter() {
        hook_product *= BigInt::from(h);
    }
    let increasing = exact_div(&factorial(n), &hook_product);
    let exponent = n * (n + 1) / 2 - depths.sum();
    Ok(increasing * pow_big(k, exponent as u64))
}

pub(crate) fn guarded_array_count(
    n: usize,
    k: usize,
    guard: &crate::guard::WorkGuard,
) -> Result<u64> {
    let task = format!("sweep of staircase arrays of size {n} over arity {k}");
    match count_arrays_bounded(n, k)? {
        Some(c) => guard.admit(&task, &c),
        None => Err(guard.refuse(&task, format!("{k}^{}", n * (n - 1) / 2))),
    }
}

/// Exact count when it can possibly pass a u64 guard, None otherwise.
fn count_arrays_bounded(n: usize, k: usize) -> Result<Option<BigInt>> {
    if k == 0 {
        return Err(Error::InvalidArity(0));
    }
    if n == 0 {
        return Err(Error::InvalidArgument(
            "staircase arrays have size at least 1".to_string(),
        ));
    }
    let free = n * (n - 1) / 2;
    if k >= 2 && free >= 64 {
        return Ok(None);
    }
    Ok(Some(count_arrays(n, k)?))
}

/// Iterator over staircase arrays in lexicographic order of their free
/// components read in (C_1, C_2, ...) order, optionally restricted to
/// an index subrange. Subranges over a partition of 0..count are the
/// hook for parallel sweeps.
pub struct ArrayIter {
    n: usize,
    k: u32,
    digits: Vec<u32>,
    remaining: u64,
}

impl ArrayIter {
    /// The full stream for S(n, k). Refuses when the stream cannot be
    /// counted in a machine word; such sweeps are beyond desk scale.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let total = Self::checked_total(n, k)?.ok_or_else(|| {
            Error::InvalidArgument(format!(
                "S({n},{k}) has more arrays than a u64 can count; iterate a subrange"
            ))
        })?;
        Self::range(n, k, 0, total)
    }

    /// The sub-stream of arrays with lexicographic index in start..end.
    pub fn range(n: usize, k: usize, start: u64, end: u64) -> Result<Self> {
        if let Some(total) = Self::checked_total(n, k)? {
            if end > total {
                return Err(Error::InvalidArgument(format!(
                    "range end {end} exceeds the {total} arrays in S({n},{k})"
                )));
            }
        }
        if start > end {
            return Err(Error::InvalidArgument(format!(
                "range start {start} exceeds end {end}"
            )));
        }
        let free = n * (n - 1) / 2;
        // Decode `start` into mixed-radix digits, most significant first.
        let mut digits = vec![1u32; free];
        let mut rem = start;
        for p in (0..free).rev() {
            digits[p] = (rem % k as u64) as u32 + 1;
            rem /= k as u64;
        }
        Ok(ArrayIter {
            n,
            k: k as u32,
            digits,
            remaining: end - start,
        })
    }

    /// k^(n(n-1)/2) when it fits a u64.
    pub fn checked_total(n: usize, k: usize) -> Result<Option<u64>> {
        if k == 0 {
            return Err(Error::InvalidArity(0));
        }
        if n == 0 {
            return Err(Error::InvalidArgument(
                "staircase arrays have size at least 1".to_string(),
            ));
        }
        let free = n * (n - 1) / 2;
        let mut total: u64 = 1;
        for _ in 0..free {
            total = match total.checked_mul(k as u64) {
                Some(t) => t,
                None => return Ok(None),
            };
        }
        Ok(Some(total))
    }

    fn snapshot(&self) -> StaircaseArray {
        let mut entries = Vec::with_capacity(self.n);
        let mut offset = 0usize;
        for i in 0..self.n {
            entries.push(self.digits[offset..offset + i].to_vec());
            offset += i;
        }
        StaircaseArray {
            k: self.k as usize,
            entries,
        }
    }

    fn increment(&mut self) {
        for p in (0..self.digits.len()).rev() {
            if self.digits[p] < self.k {
                self.digits[p] += 1;
                for d in &mut self.digits[p + 1..] {
                    *d = 1;
                }
                return;
            }
        }
        // Wrapped past the last array; `remaining` has already hit 0.
    }
}

impl Iterator for ArrayIter {
    type Item = StaircaseArray;

    fn next(&mut self) -> Option<StaircaseArray> {
        if self.remaining == 0 {
            return None;
        }
        let item = self.snapshot();
        self.remaining -= 1;
        if self.remaining > 0 {
            self.increment();
        }
        Some(item)
    }
}

/// Parallel exact reduction over all of S(n, k); `total` must be the
/// guarded array count. Merge must be commutative and associative.
pub(crate) fn parallel_array_fold<A, In, St, Mg>(
    n: usize,
    k: usize,
    total: u64,
    init: In,
    step: St,
    merge: Mg,
) -> A
where
    A: Send,
    In: Fn() -> A + Sync + Send,
    St: Fn(&mut A, &StaircaseArray) + Sync + Send,
    Mg: Fn(A, A) -> A + Sync + Send,
{
    use rayon::prelude::*;

    if total == 0 {
        return init();
    }
    let chunks = (rayon::current_num_threads() as u64 * 8).clamp(1, total);
    let chunk = total.div_ceil(chunks);
    let ranges: Vec<(u64, u64)> = (0..chunks)
        .map(|i| (i * chunk, ((i + 1) * chunk).min(total)))
        .filter(|(s, e)| s < e)
        .collect();
    ranges
        .into_par_iter()
        .map(|(s, e)| {
            let mut acc = init();
            for a in ArrayIter::range(n, k, s, e).expect("valid partition") {
                step(&mut acc, &a);
            }
            acc
        })
        .reduce(init, merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The staircase-labeled ternary tree with eight vertices used as a
    /// fixture throughout: root with three children, whose labels spell
    /// out the ancestor-determined components.
    pub(crate) fn fixture_ternary() -> StaircaseLabeledTree {
        let tree = KAryTree::decode("(((---)(---)-)(-(---)-)(--(---)))", 3).unwrap();
        let labels: Vec<Vec<u32>> = vec![
            vec![],
            vec![1],
            vec![1, 1],
            vec![1, 2, 1, 2, 2, 1, 3],
            vec![2, 1, 2],
            vec![2, 1, 1, 2, 2],
            vec![3, 1, 2, 1],
            vec![3, 2, 1, 2, 3, 2],
        ];
        StaircaseLabeledTree::new(tree, labels).unwrap()
    }

    /// The size-6 binary array whose insertion walk is traced in the
    /// module docs, together with its image.
    pub(crate) fn fixture_binary_array() -> StaircaseArray {
        StaircaseArray::new(
            2,
            vec![
                vec![],
                vec![2],
                vec![2, 1],
                vec![1, 2, 2],
                vec![1, 2, 2, 1],
                vec![2, 2, 1, 1, 2],
            ],
        )
        .unwrap()
    }

    #[test]
    fn array_validation() {
        assert!(StaircaseArray::new(2, vec![vec![]]).is_ok());
        assert!(matches!(
            StaircaseArray::new(2, vec![]),
            Err(Error::MalformedArray(_))
        ));
        assert!(matches!(
            StaircaseArray::new(2, vec![vec![], vec![1, 1]]),
            Err(Error::MalformedArray(_))
        ));
        assert!(matches!(
            StaircaseArray::new(2, vec![vec![], vec![3]]),
            Err(Error::MalformedArray(_))
        ));
        assert!(matches!(
            StaircaseArray::new(2, vec![vec![], vec![0]]),
            Err(Error::MalformedArray(_))
        ));
        assert!(matches!(
            StaircaseArray::new(0, vec![vec![]]),
            Err(Error::InvalidArity(0))
        ));
    }

    #[test]
    fn fixture_labeling_is_valid() {
        assert!(fixture_ternary().is_valid());
    }

    #[test]
    fn single_vertex_labeling_is_valid() {
        let lt =
            StaircaseLabeledTree::new(KAryTree::leaf(2).unwrap(), vec![vec![]]).unwrap();
        assert!(lt.is_valid());
        assert_eq!(lt.to_array().unwrap(), StaircaseArray::first(1, 2).unwrap());
    }

    #[test]
    fn altered_component_breaks_ancestor_consistency() {
        let good = fixture_ternary();
        let mut labels = good.labels().to_vec();
        // Vertex 7 carries (3,2,1,2,3,2); its 5th component is the slot
        // recorded for its grandparent path and must stay 3.
        assert_eq!(labels[7], vec![3, 2, 1, 2, 3, 2]);
        labels[7][4] = 1;
        let bad = StaircaseLabeledTree::new(good.tree().clone(), labels).unwrap();
        assert!(matches!(
            bad.validate(),
            Err(LabelingViolation::AncestorConsistency {
                descendant: 7,
                component: 5,
                ..
            })
        ));
    }

    #[test]
    fn short_child_label_is_path_length_violation() {
        let tree = KAryTree::decode("((--)-)", 2).unwrap();
        let bad =
            StaircaseLabeledTree::new(tree, vec![vec![1], vec![]]).unwrap();
        assert!(matches!(
            bad.validate(),
            Err(LabelingViolation::PathLength { parent: 0, child: 1 })
        ));
        assert!(format!("{}", bad.validate().unwrap_err()).contains("path-length violation"));
    }

    #[test]
    fn repeated_length_is_multiset_violation() {
        let tree = KAryTree::decode("((--)(--))", 2).unwrap();
        let bad = StaircaseLabeledTree::new(tree, vec![vec![], vec![1], vec![2]]).unwrap();
        // lengths 0,1,1
        assert!(matches!(
            bad.validate(),
            Err(LabelingViolation::LengthMultiset)
        ));
    }

    #[test]
    fn label_count_mismatch() {
        let tree = KAryTree::decode("((--)-)", 2).unwrap();
        assert!(matches!(
            StaircaseLabeledTree::new(tree, vec![vec![]]),
            Err(Error::LabelCountMismatch {
                vertices: 2,
                labels: 1
            })
        ));
    }

    #[test]
    fn insertion_walk_matches_traced_example() {
        let lt = fixture_binary_array().to_labeled_tree();
        assert!(lt.is_valid());
        assert_eq!(lt.tree().encode().as_str(), "(((--)-)((--)(--)))");
        // Preorder: root, left subtree ((1,2,2) then (1,2,2,1)), right
        // subtree ((2) then (2,1) then (2,2,1,1,2)).
        assert_eq!(
            lt.labels(),
            &[
                vec![],
                vec![1, 2, 2],
                vec![1, 2, 2, 1],
                vec![2],
                vec![2, 1],
                vec![2, 2, 1, 1, 2],
            ]
        );
    }

    #[test]
    fn array_roundtrip_through_labeled_tree() {
        let a = fixture_binary_array();
        assert_eq!(a.to_labeled_tree().to_array().unwrap(), a);
    }

    #[test]
    fn ternary_fixture_roundtrip() {
        let lt = fixture_ternary();
        let a = lt.to_array().unwrap();
        assert_eq!(
            a.entries(),
            &[
                vec![],
                vec![1],
                vec![1, 1],
                vec![2, 1, 2],
                vec![3, 1, 2, 1],
                vec![2, 1, 1, 2, 2],
                vec![3, 2, 1, 2, 3, 2],
                vec![1, 2, 1, 2, 2, 1, 3],
            ]
        );
        assert_eq!(a.to_labeled_tree(), lt);
    }

    #[test]
    fn exhaustive_roundtrip_small() {
        for (n, k) in [(4usize, 2usize), (3, 3), (5, 1)] {
            let mut images = std::collections::HashSet::new();
            let mut count = 0u64;
            for a in ArrayIter::new(n, k).unwrap() {
                let lt = a.to_labeled_tree();
                assert!(lt.is_valid(), "invalid image of {a:?}");
                assert_eq!(lt.to_array().unwrap(), a, "roundtrip failed");
                images.insert(format!("{:?}", lt));
                count += 1;
            }
            assert_eq!(count, ArrayIter::checked_total(n, k).unwrap().unwrap());
            assert_eq!(images.len() as u64, count, "map not injective");
        }
    }

    #[test]
    fn increasing_tree_of_fixture() {
        let inc = fixture_ternary().increasing_tree();
        assert!(inc.is_increasing());
        // Preorder labels: root 0; first child 1 with children 2 and 7;
        // second child 3 with child 5; third child 4 with child 6.
        assert_eq!(inc.labels(), &[0, 1, 2, 7, 3, 5, 4, 6]);
    }

    #[test]
    fn increasing_tree_validation() {
        let tree = KAryTree::decode("((--)-)", 2).unwrap();
        assert!(IncreasingTree::new(tree.clone(), vec![0, 1]).unwrap().is_increasing());
        assert!(!IncreasingTree::new(tree.clone(), vec![1, 0]).unwrap().is_increasing());
        assert!(IncreasingTree::new(tree.clone(), vec![0, 0]).is_err());
        assert!(IncreasingTree::new(tree, vec![0, 2]).is_err());
    }

    #[test]
    fn labeling_count_basics() {
        assert_eq!(
            count_staircase_labelings(&KAryTree::leaf(5).unwrap()).unwrap(),
            BigInt::from(1u32)
        );
        // Both two-vertex binary shapes admit exactly one labeling.
        for code in ["((--)-)", "(-(--))"] {
            let t = KAryTree::decode(code, 2).unwrap();
            assert_eq!(count_staircase_labelings(&t).unwrap(), BigInt::from(1u32));
        }
    }

    #[test]
    fn labeling_count_of_six_vertex_fixture() {
        // 6!/(1*1*1*2*3*6) = 20 increasing labelings; 21 - 14 = 7 free
        // components; 20 * 2^7 = 2560.
        let t = KAryTree::decode("(((--)-)((--)(--)))", 2).unwrap();
        assert_eq!(count_staircase_labelings(&t).unwrap(), BigInt::from(2560u32));
    }

    #[test]
    fn array_counts() {
        assert_eq!(count_arrays(1, 7).unwrap(), BigInt::from(1u32));
        assert_eq!(count_arrays(3, 2).unwrap(), BigInt::from(8u32));
        assert_eq!(count_arrays(5, 3).unwrap(), BigInt::from(59049u32));
        assert!(count_arrays(0, 2).is_err());
    }

    #[test]
    fn array_iter_order_and_ranges() {
        let all: Vec<_> = ArrayIter::new(3, 2).unwrap().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], StaircaseArray::first(3, 2).unwrap());
        assert_eq!(
            all[7],
            StaircaseArray::new(2, vec![vec![], vec![2], vec![2, 2]]).unwrap()
        );
        // Lexicographic: C_1 most significant.
        assert_eq!(
            all[1],
            StaircaseArray::new(2, vec![vec![], vec![1], vec![1, 2]]).unwrap()
        );
        assert_eq!(
            all[4],
            StaircaseArray::new(2, vec![vec![], vec![2], vec![1, 1]]).unwrap()
        );

        let left: Vec<_> = ArrayIter::range(3, 2, 0, 5).unwrap().collect();
        let right: Vec<_> = ArrayIter::range(3, 2, 5, 8).unwrap().collect();
        let glued: Vec<_> = left.into_iter().chain(right).collect();
        assert_eq!(glued, all);

        assert!(ArrayIter::range(3, 2, 0, 9).is_err());
        assert!(ArrayIter::range(3, 2, 5, 4).is_err());
    }

    #[test]
    fn single_array_for_unary() {
        let all: Vec<_> = ArrayIter::new(4, 1).unwrap().collect();
        assert_eq!(all.len(), 1);
        let lt = all[0].to_labeled_tree();
        // The only unary tree is the path.
        assert_eq!(lt.tree().encode().as_str(), "((((-))))");
    }

    #[test]
    fn parallel_fold_matches_sequential() {
        let total = ArrayIter::checked_total(4, 2).unwrap().unwrap();
        let seq: u64 = ArrayIter::new(4, 2)
            .unwrap()
            .map(|a| a.entries().iter().flatten().map(|&c| c as u64).sum::<u64>())
            .sum();
        let par = parallel_array_fold(
            4,
            2,
            total,
            || 0u64,
            |acc, a| *acc += a.entries().iter().flatten().map(|&c| c as u64).sum::<u64>(),
            |a, b| a + b,
        );
        assert_eq!(seq, par);
    }
}
