//! Finite posets stored as their Hasse diagram.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    UnknownElement(String),
    DuplicateElement(String),
    /// The relation has a directed cycle, listed in order.
    Cycle(Vec<String>),
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::UnknownElement(id) => write!(f, "unknown element {id}"),
            PosetError::DuplicateElement(id) => write!(f, "duplicate element {id}"),
            PosetError::Cycle(ids) => write!(f, "relation has a cycle: {}", ids.join(" < ")),
        }
    }
}

impl core::error::Error for PosetError {}

/// A finite poset. `covers` holds the pairs `(x, y)` with `y` covering `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    covers: Vec<(usize, usize)>,
    /// `less[x][y]` iff `x < y`.
    less: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the poset generated by `relations`, each `(x, y)` meaning
    /// `x < y`, and keeps only the covers. Redundant pairs are dropped.
    pub fn new<E, R, S, T>(elements: E, relations: R) -> Result<Poset, PosetError>
    where
        E: IntoIterator<Item = S>,
        S: Into<String>,
        R: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.as_str(), i).is_some() {
                return Err(PosetError::DuplicateElement(e.clone()));
            }
        }
        let n = elements.len();
        let mut succ = vec![Vec::new(); n];
        for (x, y) in relations {
            let lookup = |id: &str| index.get(id).copied().ok_or_else(|| PosetError::UnknownElement(id.to_string()));
            let (x, y) = (lookup(x.as_ref())?, lookup(y.as_ref())?);
            if !succ[x].contains(&y) {
                succ[x].push(y);
            }
        }
        if let Some(cycle) = find_cycle(&succ) {
            return Err(PosetError::Cycle(cycle.into_iter().map(|i| elements[i].clone()).collect()));
        }
        let less = closure(&succ);
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if less[x][y] && !(0..n).any(|z| less[x][z] && less[z][y]) {
                    covers.push((x, y));
                }
            }
        }
        Ok(Poset { elements, covers, less })
    }

    /// `x_0 < x_1 < ... < x_{n-1}` with ids `{prefix}{i}`, `i` from 1.
    pub fn chain(prefix: &str, n: usize) -> Poset {
        let ids: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        let rel: Vec<(String, String)> = ids.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        Poset::new(ids, rel).expect("a chain is acyclic")
    }

    pub fn antichain(prefix: &str, n: usize) -> Poset {
        Poset::new((1..=n).map(|i| format!("{prefix}{i}")), Vec::<(String, String)>::new())
            .expect("an antichain has no relations")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == id)
    }

    /// Cover pairs `(x, y)`, `x ⋖ y`, as indices.
    pub fn cover_indices(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn covers(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.covers.iter().map(|&(x, y)| (self.elements[x].as_str(), self.elements[y].as_str()))
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.less[x][y]
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| !self.less[x].iter().any(|&b| b)).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&y| !(0..self.len()).any(|x| self.less[x][y])).collect()
    }

    /// Every strictly comparable pair `(x, y)`, `x < y`.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |x| (0..n).filter(move |&y| self.less[x][y]).map(move |y| (x, y)))
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let order = topological_order(&self.covers, self.len());
        let mut longest = vec![1usize; self.len()];
        for &x in order.iter().rev() {
            for &(a, b) in &self.covers {
                if a == x {
                    longest[x] = longest[x].max(longest[b] + 1);
                }
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Elements of `self` followed by those of `other`; ids of `other` that
    /// clash with ids already present get a `'` appended until unique.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let mut elements = self.elements.clone();
        let offset = elements.len();
        for id in &other.elements {
            let mut fresh = id.clone();
            while elements.contains(&fresh) || (fresh != *id && other.elements.contains(&fresh)) {
                fresh.push('\'');
            }
            elements.push(fresh);
        }
        let mut covers = self.covers.clone();
        covers.extend(other.covers.iter().map(|&(x, y)| (x + offset, y + offset)));
        let n = elements.len();
        let mut less = vec![vec![false; n]; n];
        for (row, src) in less.iter_mut().zip(&self.less) {
            row[..offset].copy_from_slice(src);
        }
        for (row, src) in less[offset..].iter_mut().zip(&other.less) {
            row[offset..].copy_from_slice(src);
        }
        Poset { elements, covers, less }
    }
}

fn find_cycle(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    fn visit(v: usize, succ: &[Vec<usize>], mark: &mut [Mark], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
        mark[v] = Mark::Open;
        stack.push(v);
        for &w in &succ[v] {
            match mark[w] {
                Mark::Open => {
                    let start = stack.iter().position(|&s| s == w).unwrap();
                    let mut cycle = stack[start..].to_vec();
                    cycle.push(w);
                    return Some(cycle);
                }
                Mark::New => {
                    if let Some(c) = visit(w, succ, mark, stack) {
                        return Some(c);
                    }
                }
                Mark::Done => {}
            }
        }
        stack.pop();
        mark[v] = Mark::Done;
        None
    }
    let mut mark = vec![Mark::New; succ.len()];
    let mut stack = Vec::new();
    (0..succ.len()).find_map(|v| if mark[v] == Mark::New { visit(v, succ, &mut mark, &mut stack) } else { None })
}

fn closure(succ: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let n = succ.len();
    let mut less = vec![vec![false; n]; n];
    for s in 0..n {
        let mut stack = succ[s].clone();
        while let Some(v) = stack.pop() {
            if !less[s][v] {
                less[s][v] = true;
                stack.extend(succ[v].iter().copied());
            }
        }
    }
    less
}

/// Kahn order of an acyclic edge list (sources first).
pub(crate) fn topological_order(edges: &[(usize, usize)], n: usize) -> Vec<usize> {
    let mut indeg = vec![0usize; n];
    for &(_, y) in edges {
        indeg[y] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).rev().collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for &(x, y) in edges {
            if x == v {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.push(y);
                }
            }
        }
    }
    order
}
