/// Union-find with size tracking, member lists and rollback.
///
/// No path compression, so every union can be undone in LIFO order. Each
/// component also keeps a circular linked list of its members; merging two
/// lists is a swap of two `next` pointers and undoing it is the same swap.
#[derive(Debug, Clone)]
pub(crate) struct RollbackDsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    next: Vec<u32>,
    history: Vec<u32>,
}

impl RollbackDsu {
    pub fn new(n: usize) -> Self {
        let ids: Vec<u32> = (0..n as u32).collect();
        RollbackDsu {
            parent: ids.clone(),
            size: vec![1; n],
            next: ids,
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    /// Size of the component whose root is `root`.
    pub fn size_of_root(&self, root: usize) -> usize {
        self.size[root] as usize
    }

    pub fn time(&self) -> usize {
        self.history.len()
    }

    /// Merges the components of two distinct roots and returns the new root.
    pub fn union_roots(&mut self, a: usize, b: usize) -> usize {
        debug_assert!(a != b && self.parent[a] as usize == a && self.parent[b] as usize == b);
        let (root, child) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
        self.parent[child] = root as u32;
        self.size[root] += self.size[child];
        self.next.swap(root, child);
        self.history.push(child as u32);
        root
    }

    pub fn rollback(&mut self, t: usize) {
        while self.history.len() > t {
            let child = self.history.pop().unwrap() as usize;
            let root = self.parent[child] as usize;
            self.size[root] -= self.size[child];
            self.next.swap(root, child);
            self.parent[child] = child as u32;
        }
    }

    /// Members of the component containing `x`, starting at `x`.
    pub fn members(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let mut cur = Some(x);
        std::iter::from_fn(move || {
            let v = cur?;
            let nxt = self.next[v] as usize;
            cur = (nxt != x).then_some(nxt);
            Some(v)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_members(d: &RollbackDsu, x: usize) -> Vec<usize> {
        let mut m: Vec<_> = d.members(x).collect();
        m.sort();
        m
    }

    #[test]
    fn union_and_rollback() {
        let mut d = RollbackDsu::new(6);
        let t0 = d.time();
        let r = d.union_roots(0, 1);
        let r = d.union_roots(r, 2);
        assert_eq!(d.size_of_root(r), 3);
        let t1 = d.time();
        let s = d.union_roots(3, 4);
        let big = d.union_roots(r, s);
        assert_eq!(d.size_of_root(big), 5);
        assert_eq!(sorted_members(&d, 4), vec![0, 1, 2, 3, 4]);
        d.rollback(t1);
        assert_eq!(sorted_members(&d, 0), vec![0, 1, 2]);
        assert_eq!(sorted_members(&d, 3), vec![3]);
        assert_eq!(d.find(4), 4);
        d.rollback(t0);
        for v in 0..6 {
            assert_eq!(d.find(v), v);
            assert_eq!(sorted_members(&d, v), vec![v]);
        }
    }
}
