//! Simple undirected graphs with bit-packed adjacency rows.
//!
//! Rows are `u64` words, so common-neighbor counts are AND + popcount over
//! `v/64` words. That is what keeps full scheme verification affordable at
//! v around a thousand.

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    v: usize,
    stride: usize,
    words: Vec<u64>,
}

impl Graph {
    pub fn new(v: usize) -> Graph {
        assert!(v > 0);
        let stride = v.div_ceil(64);
        Graph { v, stride, words: vec![0; v * stride] }
    }

    pub fn vertex_count(&self) -> usize {
        self.v
    }

    pub fn row(&self, x: usize) -> &[u64] {
        &self.words[x * self.stride..(x + 1) * self.stride]
    }

    pub fn set_edge(&mut self, x: usize, y: usize, present: bool) {
        assert!(x != y, "no loops");
        let (wx, bx) = (x * self.stride + y / 64, y % 64);
        let (wy, by) = (y * self.stride + x / 64, x % 64);
        if present {
            self.words[wx] |= 1 << bx;
            self.words[wy] |= 1 << by;
        } else {
            self.words[wx] &= !(1 << bx);
            self.words[wy] &= !(1 << by);
        }
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.words[x * self.stride + y / 64] >> (y % 64) & 1 == 1
    }

    pub fn degree(&self, x: usize) -> u64 {
        self.row(x).iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn edge_count(&self) -> u64 {
        (0..self.v).map(|x| self.degree(x)).sum::<u64>() / 2
    }

    /// Common degree, or None if irregular.
    pub fn regular_degree(&self) -> Option<u64> {
        let d = self.degree(0);
        (1..self.v).all(|x| self.degree(x) == d).then_some(d)
    }

    pub fn neighbors(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(x) as usize);
        for (w, &bits) in self.row(x).iter().enumerate() {
            let mut bits = bits;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(w * 64 + b);
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.v {
            for y in self.neighbors(x) {
                if y > x {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn common_neighbors(&self, x: usize, y: usize) -> u64 {
        and_popcount(self.row(x), self.row(y))
    }

    pub fn complement(&self) -> Graph {
        let mut out = Graph::new(self.v);
        for x in 0..self.v {
            let (a, b) = (x * self.stride, (x + 1) * self.stride);
            for (i, w) in self.words[a..b].iter().enumerate() {
                out.words[a + i] = !w;
            }
        }
        out.clear_diagonal_and_tail();
        out
    }

    pub fn union(&self, other: &Graph) -> Graph {
        assert_eq!(self.v, other.v);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        out
    }

    /// Edges of self that are not in other.
    pub fn difference(&self, other: &Graph) -> Graph {
        assert_eq!(self.v, other.v);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        out
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        assert_eq!(self.v, other.v);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn overlaps(&self, other: &Graph) -> Option<(usize, usize)> {
        assert_eq!(self.v, other.v);
        for x in 0..self.v {
            for (i, (a, b)) in self.row(x).iter().zip(other.row(x)).enumerate() {
                let both = a & b;
                if both != 0 {
                    return Some((x, i * 64 + both.trailing_zeros() as usize));
                }
            }
        }
        None
    }

    fn clear_diagonal_and_tail(&mut self) {
        let tail_bits = self.v % 64;
        for x in 0..self.v {
            let row = &mut self.words[x * self.stride..(x + 1) * self.stride];
            if tail_bits != 0 {
                row[self.stride - 1] &= (1u64 << tail_bits) - 1;
            }
            row[x / 64] &= !(1 << (x % 64));
        }
    }

    /// BFS distances from src; None for unreachable vertices.
    pub fn distances(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.v];
        dist[src] = Some(0);
        let mut frontier: Vec<u64> = vec![0; self.stride];
        frontier[src / 64] |= 1 << (src % 64);
        let mut visited = frontier.clone();
        let mut d = 0;
        loop {
            let mut next = vec![0u64; self.stride];
            let mut any = false;
            for x in bits_of(&frontier) {
                for (i, w) in self.row(x).iter().enumerate() {
                    next[i] |= w;
                }
            }
            for i in 0..self.stride {
                next[i] &= !visited[i];
            }
            d += 1;
            for x in bits_of(&next) {
                dist[x] = Some(d);
                any = true;
            }
            if !any {
                return dist;
            }
            for i in 0..self.stride {
                visited[i] |= next[i];
            }
            frontier = next;
        }
    }

    pub fn is_connected(&self) -> Result<(), Error> {
        let dist = self.distances(0);
        match dist.iter().position(|d| d.is_none()) {
            None => Ok(()),
            Some(u) => Err(Error::Disconnected { start: 0, unreached: u }),
        }
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.v];
        let mut out = Vec::new();
        for s in 0..self.v {
            if seen[s] {
                continue;
            }
            let dist = self.distances(s);
            let comp: Vec<usize> =
                (0..self.v).filter(|&x| dist[x].is_some()).collect();
            for &x in &comp {
                seen[x] = true;
            }
            out.push(comp);
        }
        out
    }

    /// True if the induced subgraph on `verts` is complete.
    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(i, &x)| verts[i + 1..].iter().all(|&y| self.has_edge(x, y)))
    }

    /// Pointwise product check: AB = BA for 01 adjacency matrices, verified
    /// entrywise via common-neighbor counts.
    pub fn commutes_with(&self, other: &Graph) -> Result<(), (usize, usize)> {
        assert_eq!(self.v, other.v);
        for x in 0..self.v {
            for y in 0..self.v {
                let ab = and_popcount(self.row(x), other.row(y));
                let ba = and_popcount(other.row(x), self.row(y));
                if ab != ba {
                    return Err((x, y));
                }
            }
        }
        Ok(())
    }
}

pub fn and_popcount(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as u64).sum()
}

pub fn bits_of(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        std::iter::successors(Some(w), |&w| Some(w & w.wrapping_sub(1)))
            .take_while(|&w| w != 0)
            .map(move |w| i * 64 + w.trailing_zeros() as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.set_edge(i, (i + 1) % n, true);
        }
        g
    }

    #[test]
    fn basic_edges_and_degrees() {
        let g = cycle(5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.has_edge(0, 4));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.neighbors(0), vec![1, 4]);
    }

    #[test]
    fn complement_has_no_diagonal() {
        let g = cycle(5).complement();
        assert_eq!(g.regular_degree(), Some(2));
        for x in 0..5 {
            assert_eq!(g.row(x)[0] >> x & 1, 0);
        }
    }

    #[test]
    fn complement_respects_tail_words() {
        // 70 vertices spans two words; complement must not set ghost bits
        let g = Graph::new(70);
        let c = g.complement();
        assert_eq!(c.regular_degree(), Some(69));
        assert_eq!(c.complement().edge_count(), 0);
    }

    #[test]
    fn distances_on_a_cycle() {
        let g = cycle(6);
        let d = g.distances(0);
        let vals: Vec<u32> = d.iter().map(|x| x.unwrap()).collect();
        assert_eq!(vals, vec![0, 1, 2, 3, 2, 1]);
        assert!(g.is_connected().is_ok());
    }

    #[test]
    fn disconnected_components() {
        let mut g = Graph::new(6);
        g.set_edge(0, 1, true);
        g.set_edge(2, 3, true);
        g.set_edge(4, 5, true);
        assert!(matches!(g.is_connected(), Err(Error::Disconnected { .. })));
        assert_eq!(g.components().len(), 3);
    }

    #[test]
    fn commuting_check() {
        // a graph always commutes with itself and with its complement
        let g = cycle(7);
        assert!(g.commutes_with(&g).is_ok());
        assert!(g.commutes_with(&g.complement()).is_ok());
    }
}
