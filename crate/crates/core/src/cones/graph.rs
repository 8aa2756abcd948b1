//! Breadth-first eccentricities over an implicit graph.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diameter {
    /// Maximum eccentricity over the sources.
    pub value: usize,
    /// A pair `(source, vertex)` at distance `value`.
    pub witness: (usize, usize),
    /// Eccentricity of each source, in the order given.
    pub eccentricities: Vec<usize>,
}

/// Distances from `source` to every vertex of `0..vertex_count`; `None` for
/// unreached vertices.
pub fn bfs_distances<F, I>(vertex_count: usize, neighbors: &F, source: usize) -> Vec<Option<usize>>
where
    F: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let mut dist = vec![None; vertex_count];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for v in neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Maximum BFS eccentricity over `sources`. Equals the diameter when the
/// sources meet every orbit of an automorphism group acting transitively on
/// each orbit.
pub fn bfs_diameter<F, I>(vertex_count: usize, neighbors: F, sources: &[usize]) -> Result<Diameter>
where
    F: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let mut best = Diameter {
        value: 0,
        witness: (sources.first().copied().unwrap_or(0), sources.first().copied().unwrap_or(0)),
        eccentricities: Vec::with_capacity(sources.len()),
    };
    for &s in sources {
        let dist = bfs_distances(vertex_count, &neighbors, s);
        let mut ecc = 0;
        let mut far = s;
        for (v, d) in dist.iter().enumerate() {
            match d {
                None => return Err(Error::Disconnected),
                Some(d) if *d > ecc => {
                    ecc = *d;
                    far = v;
                }
                _ => {}
            }
        }
        best.eccentricities.push(ecc);
        if ecc > best.value {
            best.value = ecc;
            best.witness = (s, far);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph() {
        let n = 63;
        let d = bfs_diameter(n, |u| (0..n).filter(move |&v| v != u), &[0]).unwrap();
        assert_eq!(d.value, 1);
    }

    #[test]
    fn path_graph() {
        let n = 5;
        let nb = |u: usize| {
            let mut v = Vec::new();
            if u > 0 {
                v.push(u - 1);
            }
            if u + 1 < n {
                v.push(u + 1);
            }
            v
        };
        let d = bfs_diameter(n, nb, &[2, 0]).unwrap();
        assert_eq!(d.value, 4);
        assert_eq!(d.witness, (0, 4));
        assert_eq!(d.eccentricities, vec![2, 4]);
    }

    #[test]
    fn disconnected() {
        let d = bfs_diameter(3, |u| if u < 2 { vec![1 - u] } else { vec![] }, &[0]);
        assert!(matches!(d, Err(Error::Disconnected)));
    }
}
