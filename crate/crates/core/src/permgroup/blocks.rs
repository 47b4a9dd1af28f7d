use super::PermError;

/// A partition of `{0..n-1}` into blocks.
///
/// Blocks are kept sorted internally and ordered by their least element, so
/// two equal partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl BlockSystem {
    pub fn new(blocks: Vec<Vec<usize>>, degree: usize) -> Result<Self, PermError> {
        let mut block_of = vec![usize::MAX; degree];
        for block in &blocks {
            if block.is_empty() {
                return Err(PermError::InvalidPartition("empty block".into()));
            }
            for &p in block {
                if p >= degree {
                    return Err(PermError::VertexOutOfRange { point: p, degree });
                }
                if block_of[p] != usize::MAX {
                    return Err(PermError::InvalidPartition(format!("point {p} lies in two blocks")));
                }
                block_of[p] = 0;
            }
        }
        if let Some(p) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(PermError::InvalidPartition(format!("point {p} lies in no block")));
        }
        Ok(Self::normalize(blocks, degree))
    }

    pub(crate) fn from_blocks_trusted(blocks: Vec<Vec<usize>>, degree: usize) -> Self {
        Self::normalize(blocks, degree)
    }

    fn normalize(mut blocks: Vec<Vec<usize>>, degree: usize) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let mut block_of = vec![0; degree];
        for (i, b) in blocks.iter().enumerate() {
            for &p in b {
                block_of[p] = i;
            }
        }
        BlockSystem { blocks, block_of }
    }

    pub fn singletons(degree: usize) -> Self {
        Self::normalize((0..degree).map(|p| vec![p]).collect(), degree)
    }

    pub fn one_block(degree: usize) -> Self {
        Self::normalize(vec![(0..degree).collect()], degree)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.block_of[point]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    /// True if every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &BlockSystem) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&p| coarser.block_of(p) == coarser.block_of(b[0])))
    }
}
