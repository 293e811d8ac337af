//! Union-find over the generator symbols of a presentation: the pairs of
//! `X×X` together with one adjoined identity symbol.
//!
//! The identity symbol has index 0 and its class root compares least, so the
//! representative rule "least element of the class" always elects it.

/// Disjoint sets over `0..size` with the class minimum tracked per root.
#[derive(Debug, Clone)]
pub struct Partition {
    parent: Vec<usize>,
    rank: Vec<u8>,
    min: Vec<usize>,
}

impl Partition {
    pub fn new(size: usize) -> Partition {
        Partition {
            parent: (0..size).collect(),
            rank: vec![0; size],
            min: (0..size).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let p = self.parent[x];
        if p != x {
            let root = self.find(p);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Representative of `x`'s class: the least member.
    pub fn rep(&mut self, x: usize) -> usize {
        let root = self.find(x);
        self.min[root]
    }

    /// Merge the classes of `x` and `y`. Returns true if they were distinct.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let m = self.min[rx].min(self.min[ry]);
        let root = if self.rank[rx] < self.rank[ry] {
            self.parent[rx] = ry;
            ry
        } else if self.rank[rx] > self.rank[ry] {
            self.parent[ry] = rx;
            rx
        } else {
            self.parent[ry] = rx;
            self.rank[rx] += 1;
            rx
        };
        self.min[root] = m;
        true
    }

    pub fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }

    /// All classes as sorted member lists, ordered by their least element.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
        out.sort_by_key(|c| c[0]);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitive_merge_collapses_to_one_class() {
        let mut p = Partition::new(5);
        p.union(1, 2);
        p.union(2, 3);
        assert!(p.same(1, 3));
        assert_eq!(p.rep(3), 1);
        assert!(!p.same(0, 4));
    }

    #[test]
    fn union_is_idempotent() {
        let mut p = Partition::new(4);
        assert!(p.union(0, 2));
        assert!(!p.union(2, 0));
        let snapshot = p.classes();
        p.union(0, 2);
        assert_eq!(snapshot, p.classes());
    }

    #[test]
    fn identity_symbol_stays_least() {
        let mut p = Partition::new(10);
        p.union(7, 0);
        p.union(7, 9);
        assert_eq!(p.rep(9), 0);
    }
}
