use super::Graph;

/// Shell index of every node (k-core decomposition).
///
/// Bucket-based peeling in O(n + m): nodes are kept ordered by remaining
/// degree and removed lowest first; removing a node lowers the remaining
/// degree of each neighbor that is still above the current shell.
pub fn k_shell(graph: &Graph) -> Vec<usize> {
    let n = graph.node_count();
    let mut degree: Vec<usize> = graph.degrees().collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // bin_start[d] = first position in `order` holding a node of degree d
    let mut bin_start = vec![0usize; max_degree + 2];
    for &d in &degree {
        bin_start[d + 1] += 1;
    }
    for d in 1..bin_start.len() {
        bin_start[d] += bin_start[d - 1];
    }
    let mut order = vec![0usize; n];
    let mut position = vec![0usize; n];
    let mut fill = bin_start.clone();
    for v in 0..n {
        position[v] = fill[degree[v]];
        order[position[v]] = v;
        fill[degree[v]] += 1;
    }

    for i in 0..n {
        let v = order[i];
        for &u in graph.neighbors(v) {
            if degree[u] > degree[v] {
                // swap u with the first node of its bin, then shrink the bin
                let du = degree[u];
                let first_pos = bin_start[du];
                let first = order[first_pos];
                if first != u {
                    order.swap(first_pos, position[u]);
                    position[first] = position[u];
                    position[u] = first_pos;
                }
                bin_start[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    degree
}
