//! Dancing-links exact cover with a node budget. Returns the first solution
//! under a deterministic branching order, or certifies that none exists when
//! the space was exhausted within budget.

pub enum DlxResult {
    Solution(Vec<usize>),
    Infeasible,
    BudgetExhausted,
}

struct Node {
    left: usize,
    right: usize,
    up: usize,
    down: usize,
    col: usize,
    row: usize,
}

pub struct Dlx {
    nodes: Vec<Node>,
    col_size: Vec<usize>,
}

impl Dlx {
    /// `rows[r]` lists the columns that option r covers.
    pub fn new(num_cols: usize, rows: &[Vec<usize>]) -> Self {
        // node 0..=num_cols are column headers (0 is the root)
        let mut nodes: Vec<Node> = (0..=num_cols)
            .map(|i| Node {
                left: if i == 0 { num_cols } else { i - 1 },
                right: if i == num_cols { 0 } else { i + 1 },
                up: i,
                down: i,
                col: i,
                row: usize::MAX,
            })
            .collect();
        let mut col_size = vec![0usize; num_cols + 1];
        for (r, cols) in rows.iter().enumerate() {
            let first = nodes.len();
            for (k, &c) in cols.iter().enumerate() {
                let header = c + 1;
                let idx = nodes.len();
                let up = nodes[header].up;
                nodes.push(Node {
                    left: if k == 0 { idx } else { idx - 1 },
                    right: if k == 0 { idx } else { first },
                    up,
                    down: header,
                    col: header,
                    row: r,
                });
                nodes[up].down = idx;
                nodes[header].up = idx;
                if k > 0 {
                    nodes[idx - 1].right = idx;
                }
                col_size[header] += 1;
            }
            if !cols.is_empty() {
                let last = nodes.len() - 1;
                nodes[last].right = first;
                nodes[first].left = last;
            }
        }
        Dlx {
            nodes,
            col_size,
        }
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.nodes[c].left, self.nodes[c].right);
        self.nodes[l].right = r;
        self.nodes[r].left = l;
        let mut i = self.nodes[c].down;
        while i != c {
            let mut j = self.nodes[i].right;
            while j != i {
                let (u, d) = (self.nodes[j].up, self.nodes[j].down);
                self.nodes[u].down = d;
                self.nodes[d].up = u;
                self.col_size[self.nodes[j].col] -= 1;
                j = self.nodes[j].right;
            }
            i = self.nodes[i].down;
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.nodes[c].up;
        while i != c {
            let mut j = self.nodes[i].left;
            while j != i {
                let (u, d) = (self.nodes[j].up, self.nodes[j].down);
                self.nodes[u].down = j;
                self.nodes[d].up = j;
                self.col_size[self.nodes[j].col] += 1;
                j = self.nodes[j].left;
            }
            i = self.nodes[i].up;
        }
        let (l, r) = (self.nodes[c].left, self.nodes[c].right);
        self.nodes[l].right = c;
        self.nodes[r].left = c;
    }

    pub fn solve(&mut self, node_budget: u64) -> DlxResult {
        let mut partial = Vec::new();
        let mut nodes_left = node_budget;
        match self.search(&mut partial, &mut nodes_left) {
            Some(true) => DlxResult::Solution(partial),
            Some(false) => DlxResult::Infeasible,
            None => DlxResult::BudgetExhausted,
        }
    }

    /// Some(true) = found (partial holds rows), Some(false) = exhausted with
    /// no solution, None = budget ran out.
    fn search(&mut self, partial: &mut Vec<usize>, nodes_left: &mut u64) -> Option<bool> {
        if self.nodes[0].right == 0 {
            return Some(true);
        }
        if *nodes_left == 0 {
            return None;
        }
        *nodes_left -= 1;
        // smallest column
        let mut c = self.nodes[0].right;
        let mut best = c;
        while c != 0 {
            if self.col_size[c] < self.col_size[best] {
                best = c;
            }
            c = self.nodes[c].right;
        }
        if self.col_size[best] == 0 {
            return Some(false);
        }
        self.cover(best);
        let mut i = self.nodes[best].down;
        let mut exhausted = true;
        while i != best {
            partial.push(self.nodes[i].row);
            let mut j = self.nodes[i].right;
            while j != i {
                self.cover(self.nodes[j].col);
                j = self.nodes[j].right;
            }
            let sub = self.search(partial, nodes_left);
            let mut j = self.nodes[i].left;
            while j != i {
                self.uncover(self.nodes[j].col);
                j = self.nodes[j].left;
            }
            match sub {
                Some(true) => return Some(true),
                Some(false) => {
                    partial.pop();
                }
                None => {
                    partial.pop();
                    exhausted = false;
                    self.uncover(best);
                    return if exhausted { Some(false) } else { None };
                }
            }
            i = self.nodes[i].down;
        }
        self.uncover(best);
        if exhausted {
            Some(false)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knuth_example() {
        // classic 7-column example
        let rows = vec![
            vec![2, 4, 5],
            vec![0, 3, 6],
            vec![1, 2, 5],
            vec![0, 3],
            vec![1, 6],
            vec![3, 4, 6],
        ];
        let mut d = Dlx::new(7, &rows);
        match d.solve(1_000_000) {
            DlxResult::Solution(mut s) => {
                s.sort_unstable();
                assert_eq!(s, vec![0, 3, 4]);
            }
            _ => panic!("expected a solution"),
        }
    }

    #[test]
    fn infeasible_cover() {
        let rows = vec![vec![0, 1], vec![1, 2]];
        let mut d = Dlx::new(3, &rows);
        assert!(matches!(d.solve(1_000_000), DlxResult::Infeasible));
    }
}
