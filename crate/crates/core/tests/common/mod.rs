//! Fixture graphs and groups plus brute-force oracles shared by the
//! integration tests. The oracles only use group generators and adjacency,
//! never the stabiliser chain or the BFS layers of the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use ldt_core::graphcore::{
    automorphism_group, heawood, hypercube, make_family, petersen, petersen_labels, recognize_family, FamilyTag, Graph,
};
use ldt_core::permgroup::{PermGroup, Permutation};
use ldt_core::symmetry::{g_plus, AnalysisConfig};

pub fn config() -> AnalysisConfig {
    AnalysisConfig::default()
}

pub fn cycle(t: usize) -> Graph {
    make_family(FamilyTag::Cycle { t }).unwrap()
}

pub fn complete(n: usize) -> Graph {
    make_family(FamilyTag::Complete { n }).unwrap()
}

pub fn kmn(m: usize, n: usize) -> Graph {
    make_family(FamilyTag::CompleteBipartite { m, n }).unwrap()
}

pub fn octahedron() -> Graph {
    make_family(FamilyTag::CompleteMultipartite { m: 3, b: 2 }).unwrap()
}

pub fn star(r: usize) -> Graph {
    make_family(FamilyTag::Star { r }).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn q3() -> Graph {
    hypercube(3).unwrap()
}

pub fn pet() -> Graph {
    petersen()
}

pub fn hea() -> Graph {
    heawood()
}

pub fn aut(g: &Graph) -> PermGroup {
    automorphism_group(g, 64).unwrap()
}

pub fn aut_plus(g: &Graph) -> PermGroup {
    g_plus(g, &aut(g)).unwrap().group
}

pub fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).unwrap()
}

pub fn cycles(n: usize, cs: &[&[usize]]) -> Permutation {
    let cs: Vec<Vec<usize>> = cs.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(n, &cs).unwrap()
}

/// The rotation subgroup of a cycle.
pub fn rotations(t: usize) -> PermGroup {
    PermGroup::new(vec![perm((0..t).map(|i| (i + 1) % t).collect())], t).unwrap()
}

/// `S_n` on `0..n`.
pub fn symmetric(n: usize) -> PermGroup {
    PermGroup::symmetric(n)
}

/// `S_m × S_n` on the canonical `K_{m,n}` (sides `0..m` and `m..m+n`).
pub fn sym_product(m: usize, n: usize) -> PermGroup {
    let total = m + n;
    let mut gens = Vec::new();
    for (start, len) in [(0, m), (m, n)] {
        if len >= 2 {
            let cyc: Vec<usize> = (start..start + len).collect();
            gens.push(cycles(total, &[&cyc]));
            gens.push(cycles(total, &[&[start, start + 1]]));
        }
    }
    PermGroup::new(gens, total).unwrap()
}

/// `S_m × S_n` extended by the swap `i ↔ i + n` of the two sides (`m = n`).
pub fn sym_wreath_two(n: usize) -> PermGroup {
    let mut gens = sym_product(n, n).generators().to_vec();
    gens.push(perm((0..2 * n).map(|i| (i + n) % (2 * n)).collect()));
    PermGroup::new(gens, 2 * n).unwrap()
}

/// `S_r` on the leaves `1..=r` of a star.
pub fn star_group(r: usize) -> PermGroup {
    let leaves: Vec<usize> = (1..=r).collect();
    PermGroup::new(vec![cycles(r + 1, &[&leaves]), cycles(r + 1, &[&[1, 2]])], r + 1).unwrap()
}

/// `AGL(1,5)` on `Z_5`: `x ↦ x + 1` and `x ↦ 2x`.
pub fn agl15() -> PermGroup {
    PermGroup::new(
        vec![
            perm((0..5).map(|x| (x + 1) % 5).collect()),
            perm((0..5).map(|x| (2 * x) % 5).collect()),
        ],
        5,
    )
    .unwrap()
}

/// `S_5` acting on the 2-subsets labelling the Petersen vertices.
pub fn petersen_s5() -> PermGroup {
    let labels = petersen_labels();
    let induced = |images: [usize; 5]| {
        let map: Vec<usize> = labels
            .iter()
            .map(|&[a, b]| {
                let (x, y) = (images[a].min(images[b]), images[a].max(images[b]));
                labels.iter().position(|&l| l == [x, y]).unwrap()
            })
            .collect();
        perm(map)
    };
    PermGroup::new(vec![induced([1, 2, 3, 4, 0]), induced([1, 0, 2, 3, 4])], 10).unwrap()
}

/// All elements, by closing the generators under multiplication.
pub fn closure(group: &PermGroup) -> Vec<Permutation> {
    let n = group.degree();
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in group.generators() {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Orbits of a set of elements, by union over the elements themselves.
pub fn orbits_of_elements(elements: &[Permutation], n: usize) -> Vec<BTreeSet<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in elements {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, e.apply(x)));
            parent[a] = b;
        }
    }
    let mut groups: std::collections::BTreeMap<usize, BTreeSet<usize>> = Default::default();
    for x in 0..n {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().insert(x);
    }
    groups.into_values().collect()
}

/// Distances by repeated relaxation over the edge list.
pub fn oracle_distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

/// Local `(G, s)`-distance transitivity straight from the definition: for
/// every vertex, every layer `i ≤ s` is a single orbit of the elements fixing
/// that vertex.
pub fn oracle_ldt(g: &Graph, group: &PermGroup, s: usize) -> bool {
    let d = oracle_distances(g);
    let diam = d.iter().flatten().copied().max().unwrap();
    if s > diam {
        return false;
    }
    let elements = closure(group);
    for (v, row) in d.iter().enumerate() {
        let stab: Vec<Permutation> = elements.iter().filter(|e| e.apply(v) == v).cloned().collect();
        for i in 1..=s {
            let layer: Vec<usize> = (0..g.n()).filter(|&w| row[w] == i).collect();
            if let Some(&first) = layer.first() {
                let reach: HashSet<usize> = stab.iter().map(|e| e.apply(first)).collect();
                if layer.iter().any(|w| !reach.contains(w)) {
                    return false;
                }
            }
        }
    }
    true
}

/// The isomorphism type of a family graph, as its recogniser output.
pub fn type_key(g: &Graph) -> Vec<FamilyTag> {
    recognize_family(g)
}

pub fn type_of(tag: FamilyTag) -> Vec<FamilyTag> {
    recognize_family(&make_family(tag).unwrap())
}

/// Every subgroup, as element sets: joins of cyclic subgroups, closed until
/// stable.
pub fn all_subgroups(group: &PermGroup) -> Vec<BTreeSet<Permutation>> {
    let n = group.degree();
    let elements = closure(group);
    let generate = |gens: &[Permutation]| -> BTreeSet<Permutation> {
        let id = Permutation::identity(n);
        let mut seen = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    };
    // Each subgroup is carried with a small generating set so joins stay cheap.
    let mut cyclic: Vec<(Permutation, BTreeSet<Permutation>)> = Vec::new();
    for e in &elements {
        let c = generate(std::slice::from_ref(e));
        if !cyclic.iter().any(|(_, d)| *d == c) {
            cyclic.push((e.clone(), c));
        }
    }
    let mut subgroups: BTreeSet<BTreeSet<Permutation>> = cyclic.iter().map(|(_, c)| c.clone()).collect();
    let mut frontier: Vec<(Vec<Permutation>, BTreeSet<Permutation>)> =
        cyclic.iter().map(|(g, c)| (vec![g.clone()], c.clone())).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (gens, h) in &frontier {
            for (g, c) in &cyclic {
                if c.is_subset(h) {
                    continue;
                }
                let mut joined_gens = gens.clone();
                joined_gens.push(g.clone());
                let joined = generate(&joined_gens);
                if subgroups.insert(joined.clone()) {
                    next.push((joined_gens, joined));
                }
            }
        }
        frontier = next;
    }
    subgroups.into_iter().collect()
}

/// Brute-force quasiprimitivity verdict: 0 quasiprimitive, 1
/// biquasiprimitive, 2 neither; plus the largest orbit count of a normal
/// subgroup.
pub fn oracle_qp(group: &PermGroup) -> (u8, usize) {
    let n = group.degree();
    let elements = closure(group);
    let mut worst = 1;
    for h in all_subgroups(group) {
        if h.len() == 1 {
            continue;
        }
        let normal = elements
            .iter()
            .all(|g| h.iter().all(|x| h.contains(&x.conjugate_by(g))));
        if normal {
            let members: Vec<Permutation> = h.into_iter().collect();
            worst = worst.max(orbits_of_elements(&members, n).len());
        }
    }
    let kind = match worst {
        1 => 0,
        2 => 1,
        _ => 2,
    };
    (kind, worst)
}
