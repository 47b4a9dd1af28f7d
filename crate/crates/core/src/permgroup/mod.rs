//! Permutation groups at desk scale: stabiliser chains, orbits, normal
//! closures, the normal-subgroup lattice and quasiprimitivity.

mod blocks;
mod chain;
mod normal;
mod parse;
mod perm;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

pub use blocks::BlockSystem;
pub use normal::{all_normal_subgroups, qp_classification, NormalLattice, NormalSubgroup, QpKind, QpVerdict};
pub use parse::{parse_group, write_group};
pub use perm::Permutation;

use chain::StabChain;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} is out of range for degree {degree}")]
    VertexOutOfRange { point: usize, degree: usize },
    #[error("group is not transitive on its domain")]
    NotTransitive,
    #[error("permutation {0} is not a member of the group")]
    NotAMember(String),
    #[error("{what} {actual} exceeds the configured cap {limit}")]
    CapExceeded {
        what: &'static str,
        limit: u128,
        actual: u128,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not invariant: generator {generator} splits block {block}")]
    NotInvariant { generator: usize, block: usize },
    #[error("set is not invariant: generator {generator} maps {point} outside it")]
    NotInvariantSet { generator: usize, point: usize },
    #[error("group file line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// Enumeration limits for algorithms that list group elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_order: u128,
    pub max_elements: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 1_000_000,
            max_elements: 100_000,
        }
    }
}

/// A permutation group given by generators. The stabiliser chain is built on
/// first use and cached.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field(
                "generators",
                &self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Builds a group from generators of the stated degree. Identity generators
/// are dropped.
pub fn group_from_generators(gens: Vec<Permutation>, degree: usize) -> Result<PermGroup, PermError> {
    PermGroup::new(gens, degree)
}

impl PermGroup {
    pub fn new(gens: Vec<Permutation>, degree: usize) -> Result<Self, PermError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(Self::from_trusted(gens, degree))
    }

    /// Builds from raw image lists, validating each one.
    pub fn from_image_lists(lists: Vec<Vec<usize>>, degree: usize) -> Result<Self, PermError> {
        let gens = lists
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(gens, degree)
    }

    pub(crate) fn from_trusted(gens: Vec<Permutation>, degree: usize) -> Self {
        let mut generators: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        generators.dedup();
        PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_trusted(Vec::new(), degree)
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[cycle]).unwrap());
            gens.push(Permutation::from_cycles(degree, &[vec![0, 1]]).unwrap());
        }
        Self::from_trusted(gens, degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub(crate) fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &[]))
    }

    /// Forces construction of the stabiliser chain.
    pub fn complete(&self) -> &Self {
        self.chain();
        self
    }

    /// Group order, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// Subgroup test by generators.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.contains_group(other)
    }

    /// Lists every element; fails if the order exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>, PermError> {
        let order = self.order();
        if order > cap as u128 {
            return Err(PermError::CapExceeded {
                what: "element count",
                limit: cap as u128,
                actual: order,
            });
        }
        Ok(self.chain().elements())
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// The orbit partition of `{0..degree-1}`.
    pub fn orbits(&self) -> BlockSystem {
        let mut block_of = vec![usize::MAX; self.degree];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for p in 0..self.degree {
            if block_of[p] != usize::MAX {
                continue;
            }
            let orbit = self.orbit(p);
            for &x in &orbit {
                block_of[x] = blocks.len();
            }
            blocks.push(orbit);
        }
        BlockSystem::from_blocks_trusted(blocks, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn point_stabilizer(&self, v: usize) -> Result<PermGroup, PermError> {
        if v >= self.degree {
            return Err(PermError::VertexOutOfRange {
                point: v,
                degree: self.degree,
            });
        }
        Ok(self.pointwise_stabilizer(&[v]))
    }

    /// Elements fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let chain = StabChain::build(self.degree, &self.generators, points);
        let gens = chain.stabilizer_gens(points.len());
        let group = PermGroup::from_trusted(gens, self.degree);
        // The stabiliser chain of the subgroup is the tail of this one.
        let tail = StabChain {
            degree: self.degree,
            levels: chain.levels[points.len().min(chain.levels.len())..].to_vec(),
        };
        let _ = group.chain.set(tail);
        group
    }

    /// Rank and suborbit sizes (ascending) of a transitive group.
    pub fn rank_and_suborbits(&self) -> Result<(usize, Vec<usize>), PermError> {
        if !self.is_transitive() {
            return Err(PermError::NotTransitive);
        }
        if self.degree == 0 {
            return Ok((0, Vec::new()));
        }
        let stab = self.pointwise_stabilizer(&[0]);
        let mut sizes: Vec<usize> = stab.orbits().blocks().iter().map(|b| b.len()).collect();
        sizes.sort_unstable();
        Ok((sizes.len(), sizes))
    }

    /// Smallest normal subgroup of `self` containing `elements`.
    pub fn normal_closure(&self, elements: &[Permutation]) -> Result<PermGroup, PermError> {
        for s in elements {
            if !self.contains(s) {
                return Err(PermError::NotAMember(s.to_string()));
            }
        }
        let mut gens: Vec<Permutation> = elements.iter().filter(|s| !s.is_identity()).cloned().collect();
        gens.sort();
        gens.dedup();
        let mut closure = PermGroup::from_trusted(gens.clone(), self.degree);
        let mut k = 0;
        while k < gens.len() {
            let h = gens[k].clone();
            k += 1;
            for g in &self.generators {
                let c = h.conjugate_by(g);
                if !closure.contains(&c) {
                    gens.push(c);
                    closure = PermGroup::from_trusted(gens.clone(), self.degree);
                }
            }
        }
        Ok(closure)
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut gens = self.generators.clone();
        for g in &other.generators {
            if !self.contains(g) {
                gens.push(g.clone());
            }
        }
        if gens.len() == self.generators.len() {
            return self.clone();
        }
        PermGroup::from_trusted(gens, self.degree)
    }

    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().blocks().iter().all(|b| b.len() as u128 == order)
    }

    /// Induced action on the blocks of `partition` and its kernel.
    pub fn action_on_partition(&self, partition: &BlockSystem) -> Result<(PermGroup, PermGroup), PermError> {
        if partition.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                expected: self.degree,
                found: partition.degree(),
            });
        }
        let k = partition.len();
        let mut induced_gens = Vec::with_capacity(self.generators.len());
        let mut combined_gens = Vec::with_capacity(self.generators.len());
        for (gi, g) in self.generators.iter().enumerate() {
            let mut images = vec![0u32; k];
            for (bi, block) in partition.blocks().iter().enumerate() {
                let target = partition.block_of(g.apply(block[0]));
                if block.iter().any(|&x| partition.block_of(g.apply(x)) != target) {
                    return Err(PermError::NotInvariant {
                        generator: gi,
                        block: bi,
                    });
                }
                images[bi] = target as u32;
            }
            let mut combined: Vec<u32> = g.raw_images().to_vec();
            combined.extend(images.iter().map(|&b| b + self.degree as u32));
            induced_gens.push(Permutation::from_images_unchecked(images));
            combined_gens.push(Permutation::from_images_unchecked(combined));
        }
        let induced = PermGroup::from_trusted(induced_gens, k);
        let kernel = combined_kernel(self.degree, k, combined_gens);
        Ok((induced, kernel))
    }

    /// Pointwise stabiliser of an invariant subset.
    pub fn kernel_on_subset(&self, subset: &[usize]) -> Result<PermGroup, PermError> {
        let mut inside = vec![false; self.degree];
        for &p in subset {
            if p >= self.degree {
                return Err(PermError::VertexOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
            inside[p] = true;
        }
        for (gi, g) in self.generators.iter().enumerate() {
            if let Some(&p) = subset.iter().find(|&&p| !inside[g.apply(p)]) {
                return Err(PermError::NotInvariantSet {
                    generator: gi,
                    point: p,
                });
            }
        }
        let mut points = subset.to_vec();
        points.sort_unstable();
        points.dedup();
        Ok(self.pointwise_stabilizer(&points))
    }

    /// The action on an invariant subset, relabelled to `0..subset.len()` in
    /// the given order.
    pub fn restrict_to(&self, subset: &[usize]) -> Result<PermGroup, PermError> {
        let mut local = vec![usize::MAX; self.degree];
        for (i, &p) in subset.iter().enumerate() {
            if p >= self.degree {
                return Err(PermError::VertexOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
            local[p] = i;
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for (gi, g) in self.generators.iter().enumerate() {
            let mut images = Vec::with_capacity(subset.len());
            for &p in subset {
                let q = local[g.apply(p)];
                if q == usize::MAX {
                    return Err(PermError::NotInvariantSet {
                        generator: gi,
                        point: p,
                    });
                }
                images.push(q as u32);
            }
            gens.push(Permutation::from_images_unchecked(images));
        }
        Ok(PermGroup::from_trusted(gens, subset.len()))
    }

    /// Subgroup generated by all point stabilisers.
    pub fn generated_by_point_stabilizers(&self) -> PermGroup {
        let mut acc = PermGroup::trivial(self.degree);
        for v in 0..self.degree {
            let stab = self.pointwise_stabilizer(&[v]);
            acc = acc.join(&stab);
        }
        acc
    }
}

/// Kernel of the block action, read off a faithful combined action on
/// `points + blocks` letters.
fn combined_kernel(points: usize, blocks: usize, combined_gens: Vec<Permutation>) -> PermGroup {
    let combined = PermGroup::from_trusted(combined_gens, points + blocks);
    let block_letters: Vec<usize> = (points..points + blocks).collect();
    let stab = combined.pointwise_stabilizer(&block_letters);
    let gens = stab
        .generators()
        .iter()
        .map(|g| Permutation::from_images_unchecked(g.raw_images()[..points].to_vec()))
        .collect();
    PermGroup::from_trusted(gens, points)
}
