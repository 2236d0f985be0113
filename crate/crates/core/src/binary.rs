//! Packed binary form: two bits per node behind a 14-byte header.
//!
//! ```text
//! offset  size  field
//! 0       4     magic "STRT"
//! 4       1     version (1)
//! 5       1     traversal (0 = BFS, 1 = DFS)
//! 6       8     node count n, little-endian u64
//! 14      ..    ceil(2n / 8) payload bytes
//! ```
//!
//! Letter `i` sits in payload bits `2i..2i+2`, least significant bits of each
//! byte first, using the [`NodeLetter`] codes `x=00 y=01 X=10 Y=11`. Unused
//! bits of the final byte are zero.

use thiserror::Error;

use crate::codec::{InvalidString, NodeLetter, Traversal, TreeString};

pub const MAGIC: [u8; 4] = *b"STRT";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnpackError {
    #[error("bad magic {0:02x?}, expected \"STRT\"")]
    BadMagic([u8; 4]),
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u8),
    #[error("unknown traversal tag {0}")]
    BadTraversal(u8),
    #[error("payload is {actual} bytes, header implies {expected}")]
    LengthMismatch { expected: u64, actual: u64 },
    #[error("nonzero padding bits in final payload byte")]
    NonZeroPadding,
    #[error(transparent)]
    InvalidString(#[from] InvalidString),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedTree {
    pub traversal: Traversal,
    pub node_count: u64,
    pub payload: Vec<u8>,
}

/// Payload bytes needed for `n` letters.
pub fn payload_len(n: u64) -> Option<u64> {
    n.checked_mul(2).map(|bits| bits.div_ceil(8))
}

impl PackedTree {
    /// Serialized size in bytes.
    pub fn byte_len(&self) -> usize {
        HEADER_LEN + self.payload.len()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.byte_len());
        out.extend_from_slice(&MAGIC);
        out.push(VERSION);
        out.push(traversal_tag(self.traversal));
        out.extend_from_slice(&self.node_count.to_le_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    /// Parses the header. The payload is taken as-is; [`unpack`] checks it.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, UnpackError> {
        if bytes.len() < HEADER_LEN {
            if bytes.len() >= 4 && bytes[..4] != MAGIC {
                return Err(UnpackError::BadMagic(bytes[..4].try_into().unwrap()));
            }
            return Err(UnpackError::LengthMismatch {
                expected: HEADER_LEN as u64,
                actual: bytes.len() as u64,
            });
        }
        let magic: [u8; 4] = bytes[..4].try_into().unwrap();
        if magic != MAGIC {
            return Err(UnpackError::BadMagic(magic));
        }
        if bytes[4] != VERSION {
            return Err(UnpackError::UnsupportedVersion(bytes[4]));
        }
        let traversal = match bytes[5] {
            0 => Traversal::Bfs,
            1 => Traversal::Dfs,
            other => return Err(UnpackError::BadTraversal(other)),
        };
        let node_count = u64::from_le_bytes(bytes[6..14].try_into().unwrap());
        Ok(PackedTree {
            traversal,
            node_count,
            payload: bytes[HEADER_LEN..].to_vec(),
        })
    }
}

fn traversal_tag(t: Traversal) -> u8 {
    match t {
        Traversal::Bfs => 0,
        Traversal::Dfs => 1,
    }
}

pub fn pack(s: &TreeString) -> PackedTree {
    let letters = s.letters();
    let mut payload = vec![0u8; letters.len().div_ceil(4)];
    for (i, letter) in letters.iter().enumerate() {
        payload[i / 4] |= letter.code() << (2 * (i % 4));
    }
    PackedTree {
        traversal: s.traversal(),
        node_count: letters.len() as u64,
        payload,
    }
}

pub fn unpack(p: &PackedTree) -> Result<TreeString, UnpackError> {
    let expected = payload_len(p.node_count).ok_or(UnpackError::LengthMismatch {
        expected: u64::MAX,
        actual: p.payload.len() as u64,
    })?;
    if expected != p.payload.len() as u64 {
        return Err(UnpackError::LengthMismatch {
            expected,
            actual: p.payload.len() as u64,
        });
    }
    let n = p.node_count as usize;
    let used_in_last = n % 4;
    if used_in_last != 0 {
        let last = *p.payload.last().expect("n > 0 here");
        if last >> (2 * used_in_last) != 0 {
            return Err(UnpackError::NonZeroPadding);
        }
    }
    let letters: Vec<NodeLetter> = (0..n)
        .map(|i| NodeLetter::from_code(p.payload[i / 4] >> (2 * (i % 4))))
        .collect();
    Ok(TreeString::from_letters(letters, p.traversal)?)
}

pub fn unpack_bytes(bytes: &[u8]) -> Result<TreeString, UnpackError> {
    unpack(&PackedTree::from_bytes(bytes)?)
}
