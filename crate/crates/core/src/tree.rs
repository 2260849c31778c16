//! The k-ary tree model: every vertex has exactly `k` ordered child
//! slots, each possibly empty. Trees are immutable values; vertex
//! identity is the preorder index (visit the node, then its slots in
//! order), which is total and deterministic.

use std::fmt;

use crate::error::{Error, Result};

/// A rooted unlabeled k-ary tree. The empty tree is a value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KAryTree {
    arity: usize,
    root: Option<Box<Node>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Node {
    /// Exactly `arity` slots, in order.
    pub(crate) slots: Vec<Option<Box<Node>>>,
}

impl Node {
    pub(crate) fn leaf(arity: usize) -> Node {
        Node {
            slots: vec![None; arity],
        }
    }
}

/// Multiset of hook lengths (subtree sizes), stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookMultiset(Vec<usize>);

impl HookMultiset {
    pub(crate) fn from_unsorted(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        HookMultiset(v)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }
}

impl fmt::Display for HookMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, "}}")
    }
}

/// Per-vertex depth statistic: the number of vertices on the path from
/// the root to the vertex, root included (so the root has depth 1).
/// Indexed by preorder vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthMap(Vec<usize>);

impl DepthMap {
    pub fn get(&self, vertex: usize) -> Option<usize> {
        self.0.get(vertex).copied()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Canonical text encoding of a tree: `-` for an empty slot, and
/// `(` followed by the codes of the k child slots followed by `)` for
/// a node. The arity is carried out of band; a code alone does not
/// determine k when a node has no children.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCode(String);

impl TreeCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Flat preorder view of a nonempty tree, used internally by the
/// labeling, verification, and filtration code.
#[derive(Debug, Clone)]
pub(crate) struct TreeView {
    /// Preorder parent of each vertex; `None` for the root.
    pub(crate) parent: Vec<Option<usize>>,
    /// 0-based slot this vertex occupies in its parent; 0 for the root.
    pub(crate) slot_in_parent: Vec<usize>,
    /// Per vertex, the k child slots as preorder ids.
    pub(crate) children: Vec<Vec<Option<usize>>>,
    /// Subtree size (= hook length) per vertex.
    pub(crate) size: Vec<usize>,
    /// Depth statistic per vertex (root = 1).
    pub(crate) depth: Vec<usize>,
}

impl TreeView {
    pub(crate) fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// Preorder ids of the nonempty children of `v`, in slot order.
    pub(crate) fn child_ids(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.children[v].iter().filter_map(|c| *c)
    }
}

impl KAryTree {
    /// The empty tree of the given arity.
    pub fn empty(arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidArity(arity));
        }
        Ok(KAryTree { arity, root: None })
    }

    /// The one-vertex tree of the given arity.
    pub fn leaf(arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidArity(arity));
        }
        Ok(KAryTree {
            arity,
            root: Some(Box::new(Node::leaf(arity))),
        })
    }

    pub(crate) fn from_root(arity: usize, root: Option<Box<Node>>) -> Self {
        debug_assert!(arity >= 1);
        KAryTree { arity, root }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub(crate) fn root(&self) -> Option<&Node> {
        self.root.as_deref()
    }

    /// Number of vertices; 0 for the empty tree.
    pub fn vertex_count(&self) -> usize {
        fn count(node: &Node) -> usize {
            1 + node
                .slots
                .iter()
                .filter_map(|s| s.as_deref())
                .map(count)
                .sum::<usize>()
        }
        self.root.as_deref().map_or(0, count)
    }

    /// Multiset of hook lengths over all vertices. The hook length of a
    /// vertex is the size of the subtree rooted there, so the root
    /// contributes the whole vertex count.
    pub fn hook_lengths(&self) -> Result<HookMultiset> {
        let view = self.view().ok_or(Error::EmptyTree)?;
        Ok(HookMultiset::from_unsorted(view.size))
    }

    /// Per-vertex depth statistic, root = 1, keyed by preorder id.
    pub fn depths(&self) -> Result<DepthMap> {
        let view = self.view().ok_or(Error::EmptyTree)?;
        Ok(DepthMap(view.depth))
    }

    /// True iff every vertex has either 0 or k nonempty children.
    /// The empty tree is vacuously complete.
    pub fn is_complete(&self) -> bool {
        fn check(node: &Node) -> bool {
            let nonempty = node.slots.iter().filter(|s| s.is_some()).count();
            if nonempty != 0 && nonempty != node.slots.len() {
                return false;
            }
            node.slots.iter().filter_map(|s| s.as_deref()).all(check)
        }
        self.root.as_deref().map_or(true, check)
    }

    /// Replaces every empty slot of a nonempty binary tree with a leaf,
    /// producing the complete binary tree with 2n+1 vertices. A vertex
    /// with hook length h becomes an internal vertex with hook length
    /// 2h+1 in the result.
    pub fn to_complete(&self) -> Result<Self> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: self.arity,
            });
        }
        let root = self.root.as_deref().ok_or(Error::EmptyTree)?;
        fn fill(node: &Node, arity: usize) -> Box<Node> {
            let slots = node
                .slots
                .iter()
                .map(|s| match s {
                    Some(child) => Some(fill(child, arity)),
                    None => Some(Box::new(Node::leaf(arity))),
                })
                .collect();
            Box::new(Node { slots })
        }
        Ok(KAryTree {
            arity: self.arity,
            root: Some(fill(root, self.arity)),
        })
    }

    /// Canonical text encoding.
    pub fn encode(&self) -> TreeCode {
        fn emit(node: &Node, out: &mut String) {
            out.push('(');
            for slot in &node.slots {
                match slot {
                    Some(child) => emit(child, out),
                    None => out.push('-'),
                }
            }
            out.push(')');
        }
        let mut out = String::new();
        match self.root.as_deref() {
            Some(node) => emit(node, &mut out),
            None => out.push('-'),
        }
        TreeCode(out)
    }

    /// Parses a canonical code back into a tree of the given arity.
    pub fn decode(code: &str, arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidArity(arity));
        }
        let bytes = code.as_bytes();
        let mut pos = 0usize;

        fn parse_slot(bytes: &[u8], pos: &mut usize, arity: usize) -> Result<Option<Box<Node>>> {
            match bytes.get(*pos) {
                Some(b'-') => {
                    *pos += 1;
                    Ok(None)
                }
                Some(b'(') => {
                    *pos += 1;
                    let mut slots = Vec::with_capacity(arity);
                    for _ in 0..arity {
                        slots.push(parse_slot(bytes, pos, arity)?);
                    }
                    match bytes.get(*pos) {
                        Some(b')') => {
                            *pos += 1;
                            Ok(Some(Box::new(Node { slots })))
                        }
                        Some(&c) => Err(Error::Parse {
                            position: *pos,
                            message: format!(
                                "expected ')' after {arity} child slots, found '{}'",
                                c as char
                            ),
                        }),
                        None => Err(Error::Parse {
                            position: *pos,
                            message: "unexpected end of input, expected ')'".to_string(),
                        }),
                    }
                }
                Some(&c) => Err(Error::Parse {
                    position: *pos,
                    message: format!("expected '(' or '-', found '{}'", c as char),
                }),
                None => Err(Error::Parse {
                    position: *pos,
                    message: "unexpected end of input, expected '(' or '-'".to_string(),
                }),
            }
        }

        let root = parse_slot(bytes, &mut pos, arity)?;
        if pos != bytes.len() {
            return Err(Error::Parse {
                position: pos,
                message: "trailing input after tree code".to_string(),
            });
        }
        Ok(KAryTree { arity, root })
    }

    /// Flat preorder view; `None` for the empty tree.
    pub(crate) fn view(&self) -> Option<TreeView> {
        let root = self.root.as_deref()?;
        let n = self.vertex_count();
        let mut view = TreeView {
            parent: Vec::with_capacity(n),
            slot_in_parent: Vec::with_capacity(n),
            children: Vec::with_capacity(n),
            size: Vec::with_capacity(n),
            depth: Vec::with_capacity(n),
        };

        fn walk(
            node: &Node,
            parent: Option<usize>,
            slot: usize,
            depth: usize,
            view: &mut TreeView,
        ) -> usize {
            let id = view.parent.len();
            view.parent.push(parent);
            view.slot_in_parent.push(slot);
            view.children.push(vec![None; node.slots.len()]);
            view.size.push(0);
            view.depth.push(depth);
            let mut size = 1;
            for (s, child) in node.slots.iter().enumerate() {
                if let Some(child) = child {
                    let child_id = view.parent.len();
                    view.children[id][s] = Some(child_id);
                    size += walk(child, Some(id), s, depth + 1, view);
                }
            }
            view.size[id] = size;
            size
        }

        walk(root, None, 0, 1, &mut view);
        Some(view)
    }
}
