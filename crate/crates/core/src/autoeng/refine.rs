//! Ordered partitions of the vertex set and equitable refinement.

use std::collections::VecDeque;

use super::graph::ColoredGraph;

/// An ordered partition: `lab` lists the vertices cell by cell, and
/// `cell_end[i]` marks position `i` as the last position of its cell.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    pub lab: Vec<u32>,
    cell_end: Vec<bool>,
}

impl Partition {
    /// The unit partition split by vertex color, colors ascending and ties
    /// broken by vertex index.
    pub fn initial(g: &ColoredGraph) -> Partition {
        let n = g.order();
        let mut lab: Vec<u32> = (0..n as u32).collect();
        lab.sort_by_key(|&v| (g.color(v as usize), v));
        let mut cell_end = vec![false; n];
        for i in 0..n {
            if i + 1 == n || g.color(lab[i + 1] as usize) != g.color(lab[i] as usize) {
                cell_end[i] = true;
            }
        }
        Partition { lab, cell_end }
    }

    fn cell_end_of(&self, start: usize) -> usize {
        let mut i = start;
        while !self.cell_end[i] {
            i += 1;
        }
        i
    }

    pub fn cell_starts(&self) -> Vec<usize> {
        let mut starts = Vec::new();
        let mut i = 0;
        while i < self.lab.len() {
            starts.push(i);
            i = self.cell_end_of(i) + 1;
        }
        starts
    }

    #[cfg(test)]
    pub fn is_discrete(&self) -> bool {
        self.cell_end.iter().all(|&e| e)
    }

    /// The earliest cell of minimum size at least 2, as `(start, end)`.
    pub fn first_smallest_nonsingleton(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut i = 0;
        while i < self.lab.len() {
            let end = self.cell_end_of(i);
            let size = end - i + 1;
            if size >= 2 {
                let better = match best {
                    None => true,
                    Some((bs, be)) => size < be - bs + 1,
                };
                if better {
                    best = Some((i, end));
                }
            }
            i = end + 1;
        }
        best
    }

    /// Splits `{w}` off the front of its cell; returns the position of the
    /// new singleton (the cell start).
    pub fn individualize(&mut self, w: u32) -> usize {
        let pos = self.lab.iter().position(|&v| v == w).expect("vertex in partition");
        let mut start = pos;
        while start > 0 && !self.cell_end[start - 1] {
            start -= 1;
        }
        self.lab.swap(pos, start);
        self.cell_end[start] = true;
        start
    }

    /// Worklist equitable refinement. Each seed must be a cell start; cells
    /// are split by neighbor counts into the splitter cell, fragments keep
    /// their relative order (counts ascending), and every fragment of a split
    /// cell joins the worklist.
    pub fn refine(&mut self, g: &ColoredGraph, seeds: Vec<usize>) {
        let n = self.lab.len();
        let mut queued = vec![false; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for s in seeds {
            if !queued[s] {
                queued[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(ws) = queue.pop_front() {
            queued[ws] = false;
            let we = self.cell_end_of(ws);
            let mut splitter: u128 = 0;
            for &v in &self.lab[ws..=we] {
                splitter |= 1u128 << v;
            }
            let mut pos = 0;
            while pos < n {
                let end = self.cell_end_of(pos);
                if end > pos {
                    let segment: Vec<(u32, u32)> = self.lab[pos..=end]
                        .iter()
                        .map(|&v| ((g.row(v as usize) & splitter).count_ones(), v))
                        .collect();
                    let first = segment[0].0;
                    if segment.iter().any(|&(c, _)| c != first) {
                        let mut sorted = segment;
                        sorted.sort_by_key(|&(c, _)| c);
                        for (offset, &(_, v)) in sorted.iter().enumerate() {
                            self.lab[pos + offset] = v;
                        }
                        for offset in 0..sorted.len() - 1 {
                            if sorted[offset].0 != sorted[offset + 1].0 {
                                self.cell_end[pos + offset] = true;
                            }
                        }
                        let mut fragment = pos;
                        while fragment <= end {
                            if !queued[fragment] {
                                queued[fragment] = true;
                                queue.push_back(fragment);
                            }
                            fragment = self.cell_end_of(fragment) + 1;
                        }
                    }
                }
                pos = end + 1;
            }
        }
    }
}
