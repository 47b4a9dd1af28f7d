//! The normal-subgroup lattice via conjugacy classes.
//!
//! Every normal subgroup is a union of conjugacy classes and is the join of
//! the normal closures of the classes it contains. We enumerate the elements,
//! split them into classes, take the normal closure of each class and close
//! that set under joins. Subgroups are keyed by the set of classes they
//! contain, which makes deduplication exact.

use std::collections::HashMap;

use super::{Caps, PermError, PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct NormalSubgroup {
    pub group: PermGroup,
    pub order: u128,
    /// `classes[k]` is true iff conjugacy class `k` lies in the subgroup.
    pub classes: Vec<bool>,
    pub minimal: bool,
}

impl NormalSubgroup {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &NormalSubgroup) -> bool {
        self.classes.iter().zip(&other.classes).all(|(&a, &b)| !a || b)
    }
}

/// All normal subgroups, ordered by order then by class membership.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    pub subgroups: Vec<NormalSubgroup>,
    pub class_sizes: Vec<usize>,
    pub class_representatives: Vec<Permutation>,
}

impl NormalLattice {
    pub fn nontrivial(&self) -> impl Iterator<Item = &NormalSubgroup> {
        self.subgroups.iter().filter(|n| !n.is_trivial())
    }

    pub fn minimal(&self) -> impl Iterator<Item = &NormalSubgroup> {
        self.subgroups.iter().filter(|n| n.minimal)
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }
}

pub(crate) fn conjugacy_classes(group: &PermGroup, elements: &[Permutation]) -> Vec<Vec<usize>> {
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    // Identity first so that class 0 is always {1}.
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by_key(|&i| !elements[i].is_identity());
    for start in order {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = vec![start];
        class_of[start] = id;
        let mut head = 0;
        while head < class.len() {
            let x = &elements[class[head]];
            head += 1;
            for g in group.generators() {
                let c = x.conjugate_by(g);
                let ci = index[&c];
                if class_of[ci] == usize::MAX {
                    class_of[ci] = id;
                    class.push(ci);
                }
            }
        }
        classes.push(class);
    }
    classes
}

/// Enumerates every normal subgroup of `group`, including `1` and `group`.
pub fn all_normal_subgroups(group: &PermGroup, caps: &Caps) -> Result<NormalLattice, PermError> {
    let order = group.order();
    if order > caps.max_order {
        return Err(PermError::CapExceeded {
            what: "group order",
            limit: caps.max_order,
            actual: order,
        });
    }
    let elements = group.elements(caps.max_elements)?;
    let classes = conjugacy_classes(group, &elements);
    let reps: Vec<Permutation> = classes.iter().map(|c| elements[c[0]].clone()).collect();
    let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    let k = classes.len();

    let membership = |h: &PermGroup| -> Vec<bool> { reps.iter().map(|r| h.contains(r)).collect() };

    let mut found: Vec<(Vec<bool>, PermGroup)> = Vec::new();
    let mut index: HashMap<Vec<bool>, usize> = HashMap::new();
    let trivial_key: Vec<bool> = (0..k).map(|i| i == 0).collect();
    index.insert(trivial_key.clone(), 0);
    found.push((trivial_key, PermGroup::trivial(group.degree())));

    let mut closures: Vec<(Vec<bool>, PermGroup)> = Vec::new();
    for rep in reps.iter().skip(1) {
        let closure = group.normal_closure(std::slice::from_ref(rep))?;
        let key = membership(&closure);
        if !closures.iter().any(|(c, _)| *c == key) {
            closures.push((key, closure));
        }
    }

    for (ckey, cgroup) in &closures {
        let snapshot = found.len();
        for x in 0..snapshot {
            let (xkey, xgroup) = &found[x];
            if subset(ckey, xkey) {
                continue;
            }
            let (key, joined) = if subset(xkey, ckey) {
                (ckey.clone(), cgroup.clone())
            } else {
                let joined = xgroup.join(cgroup);
                (membership(&joined), joined)
            };
            if !index.contains_key(&key) {
                index.insert(key.clone(), found.len());
                found.push((key, joined));
            }
        }
    }

    let mut subgroups: Vec<NormalSubgroup> = found
        .into_iter()
        .map(|(classes, group)| {
            let order = group.order();
            debug_assert_eq!(
                order,
                classes
                    .iter()
                    .zip(&sizes)
                    .filter(|(&m, _)| m)
                    .map(|(_, &s)| s as u128)
                    .sum::<u128>()
            );
            NormalSubgroup {
                group,
                order,
                classes,
                minimal: false,
            }
        })
        .collect();
    subgroups.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| b.classes.cmp(&a.classes)));
    let minimal: Vec<bool> = subgroups
        .iter()
        .map(|n| {
            !n.is_trivial()
                && !subgroups
                    .iter()
                    .any(|m| !m.is_trivial() && m.order < n.order && m.is_subgroup_of(n))
        })
        .collect();
    for (n, is_min) in subgroups.iter_mut().zip(minimal) {
        n.minimal = is_min;
    }
    Ok(NormalLattice {
        subgroups,
        class_sizes: sizes,
        class_representatives: reps,
    })
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QpKind {
    Quasiprimitive,
    Biquasiprimitive,
    Neither,
}

#[derive(Clone, Debug)]
pub struct QpVerdict {
    pub kind: QpKind,
    /// An intransitive minimal normal subgroup; present iff not quasiprimitive.
    pub witness: Option<PermGroup>,
}

/// Quasiprimitive / biquasiprimitive test for a transitive group.
///
/// Orbits of a normal subgroup refine the orbits of every normal subgroup
/// containing it, so looking at minimal normal subgroups is enough.
pub fn qp_classification(group: &PermGroup, caps: &Caps) -> Result<QpVerdict, PermError> {
    if !group.is_transitive() {
        return Err(PermError::NotTransitive);
    }
    let lattice = all_normal_subgroups(group, caps)?;
    Ok(qp_from_lattice(&lattice))
}

pub(crate) fn qp_from_lattice(lattice: &NormalLattice) -> QpVerdict {
    let mut worst: Option<(usize, &NormalSubgroup)> = None;
    for n in lattice.minimal() {
        let count = n.group.orbits().len();
        if count > 1 && worst.is_none_or(|(c, _)| count > c) {
            worst = Some((count, n));
        }
    }
    match worst {
        None => QpVerdict {
            kind: QpKind::Quasiprimitive,
            witness: None,
        },
        Some((count, n)) => QpVerdict {
            kind: if count <= 2 {
                QpKind::Biquasiprimitive
            } else {
                QpKind::Neither
            },
            witness: Some(n.group.clone()),
        },
    }
}
