//! Strongly connected components of implicit graphs.

const UNVISITED: usize = usize::MAX;

/// Component id per node plus, per component, whether it contains a cycle
/// (more than one node, or a self-loop).
pub(crate) struct Components {
    pub component: Vec<usize>,
    pub cyclic: Vec<bool>,
}

/// Iterative Tarjan over a graph whose node `v` has successors `succ(v)`.
pub(crate) fn strongly_connected<'a, F>(node_count: usize, succ: F) -> Components
where
    F: Fn(usize) -> &'a [usize],
{
    let mut index = vec![UNVISITED; node_count];
    let mut low = vec![0usize; node_count];
    let mut on_stack = vec![false; node_count];
    let mut stack: Vec<usize> = Vec::new();
    let mut component = vec![UNVISITED; node_count];
    let mut cyclic: Vec<bool> = Vec::new();
    let mut counter = 0usize;

    for root in 0..node_count {
        if index[root] != UNVISITED {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            let edges = succ(v);
            if frame.1 < edges.len() {
                let w = edges[frame.1];
                frame.1 += 1;
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(parent) = frames.last() {
                low[parent.0] = low[parent.0].min(low[v]);
            }
            if low[v] == index[v] {
                let id = cyclic.len();
                let mut size = 0;
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component[w] = id;
                    size += 1;
                    if w == v {
                        break;
                    }
                }
                cyclic.push(size > 1 || succ(v).contains(&v));
            }
        }
    }
    Components { component, cyclic }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_cycles_and_self_loops() {
        // 0 -> 1 -> 2 -> 1, 3 -> 3, 4 isolated
        let adj: Vec<Vec<usize>> = vec![vec![1], vec![2], vec![1], vec![3], vec![]];
        let c = strongly_connected(adj.len(), |v| &adj[v]);
        assert_eq!(c.component[1], c.component[2]);
        assert_ne!(c.component[0], c.component[1]);
        assert!(c.cyclic[c.component[1]]);
        assert!(!c.cyclic[c.component[0]]);
        assert!(c.cyclic[c.component[3]]);
        assert!(!c.cyclic[c.component[4]]);
    }
}
