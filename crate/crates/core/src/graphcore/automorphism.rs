//! Full automorphism group by backtracking.
//!
//! A base `v_0, .., v_{k-1}` is chosen so that distance vectors to the base
//! separate all vertices (together with a degree/layer-size colour); an
//! automorphism fixing the base is then the identity, so an automorphism is
//! determined by the images of the base. Generators are found level by level from the deepest stabiliser
//! upwards: at level `i` we look for an automorphism fixing `v_0..v_{i-1}` and
//! sending `v_i` to each candidate not yet in the known orbit.

use std::collections::HashMap;

use crate::permgroup::{PermGroup, Permutation};

use super::{Graph, GraphError};

pub const DEFAULT_AUT_BOUND: usize = 64;

pub fn automorphism_group(graph: &Graph, bound: usize) -> Result<PermGroup, GraphError> {
    let n = graph.n();
    if n > bound {
        return Err(GraphError::BoundExceeded { n, bound });
    }
    let search = Search::new(graph);
    let base = search.base();
    let mut gens: Vec<Permutation> = Vec::new();
    for level in (0..base.len()).rev() {
        let prefix = &base[..level];
        let target = base[level];
        let mut orbit = orbit_of(target, &gens, n);
        let mut failed = vec![false; n];
        let candidates: Vec<usize> = (0..n)
            .filter(|&w| {
                search.invariant[w] == search.invariant[target]
                    && prefix
                        .iter()
                        .all(|&p| graph.distance(p, w) == graph.distance(p, target))
            })
            .collect();
        for w in candidates {
            if orbit[w] || failed[w] {
                continue;
            }
            let mut images: Vec<usize> = prefix.to_vec();
            images.push(w);
            match search.extend(&base, &mut images) {
                Some(perm) => {
                    gens.push(perm);
                    orbit = orbit_of(target, &gens, n);
                }
                None => {
                    for (x, &inside) in orbit_of(w, &gens, n).iter().enumerate() {
                        failed[x] |= inside;
                    }
                }
            }
        }
    }
    Ok(PermGroup::new(gens, n).expect("automorphisms have the graph's degree"))
}

fn orbit_of(point: usize, gens: &[Permutation], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

struct Search<'a> {
    graph: &'a Graph,
    /// An automorphism-invariant colour per vertex: degree plus layer sizes.
    invariant: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph) -> Self {
        let mut colours: HashMap<Vec<usize>, u32> = HashMap::new();
        let invariant = (0..graph.n())
            .map(|v| {
                let profile = graph.distance_profile(v);
                let next = colours.len() as u32;
                *colours.entry(profile).or_insert(next)
            })
            .collect();
        Search { graph, invariant }
    }

    /// Greedy base: repeatedly add the vertex that splits the current
    /// distance-vector classes the most.
    fn base(&self) -> Vec<usize> {
        let n = self.graph.n();
        let mut keys: Vec<Vec<u32>> = (0..n).map(|v| vec![self.invariant[v]]).collect();
        let mut base = Vec::new();
        loop {
            let classes = count_classes(&keys);
            if classes == n {
                return base;
            }
            let best = (0..n)
                .filter(|v| !base.contains(v))
                .max_by_key(|&b| {
                    let trial: Vec<Vec<u32>> = keys
                        .iter()
                        .enumerate()
                        .map(|(x, k)| {
                            let mut k = k.clone();
                            k.push(self.graph.distance(b, x) as u32);
                            k
                        })
                        .collect();
                    // Prefer more classes, then the smallest label.
                    (count_classes(&trial), std::cmp::Reverse(b))
                })
                .expect("an unseparated pair leaves a vertex outside the base");
            for (x, k) in keys.iter_mut().enumerate() {
                k.push(self.graph.distance(best, x) as u32);
            }
            base.push(best);
        }
    }

    /// Extends the partial base image `images` to a full automorphism.
    fn extend(&self, base: &[usize], images: &mut Vec<usize>) -> Option<Permutation> {
        let depth = images.len();
        if depth == base.len() {
            return self.complete(base, images);
        }
        let v = base[depth];
        for y in 0..self.graph.n() {
            if self.invariant[y] != self.invariant[v] {
                continue;
            }
            let consistent = base[..depth]
                .iter()
                .zip(images.iter())
                .all(|(&b, &img)| self.graph.distance(img, y) == self.graph.distance(b, v));
            if !consistent {
                continue;
            }
            images.push(y);
            if let Some(p) = self.extend(base, images) {
                return Some(p);
            }
            images.pop();
        }
        None
    }

    fn complete(&self, base: &[usize], images: &[usize]) -> Option<Permutation> {
        let n = self.graph.n();
        // The invariant is part of the key because the base only separates
        // vertices together with it.
        let vector = |x: usize, points: &[usize]| -> Vec<usize> {
            let mut key = vec![self.invariant[x] as usize];
            key.extend(points.iter().map(|&p| self.graph.distance(p, x)));
            key
        };
        let lookup: HashMap<Vec<usize>, usize> = (0..n).map(|y| (vector(y, images), y)).collect();
        if lookup.len() != n {
            return None;
        }
        let mut map = Vec::with_capacity(n);
        for x in 0..n {
            map.push(*lookup.get(&vector(x, base))?);
        }
        for (u, v) in self.graph.edges() {
            if !self.graph.is_adjacent(map[u], map[v]) {
                return None;
            }
        }
        Permutation::from_images(map).ok()
    }
}

fn count_classes(keys: &[Vec<u32>]) -> usize {
    let mut sorted: Vec<&Vec<u32>> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    sorted.len()
}
