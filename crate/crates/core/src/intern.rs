//! Arena-backed interning of `u32` slices.
//!
//! Every distinct slice is stored once in a flat arena; the hash table only
//! holds node indices, so a node costs its payload plus two words.

use std::hash::BuildHasher;

use hashbrown::HashTable;
use rustc_hash::FxBuildHasher;

#[derive(Clone, Default)]
pub(crate) struct SliceInterner {
    arena: Vec<u32>,
    offsets: Vec<u32>,
    table: HashTable<u32>,
    hasher: FxBuildHasher,
}

impl SliceInterner {
    pub fn new() -> Self {
        SliceInterner {
            arena: Vec::new(),
            offsets: vec![0],
            table: HashTable::new(),
            hasher: FxBuildHasher,
        }
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn get(&self, index: u32) -> &[u32] {
        let i = index as usize;
        &self.arena[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }

    pub fn find(&self, key: &[u32]) -> Option<u32> {
        let hash = self.hasher.hash_one(key);
        self.table.find(hash, |&idx| self.get(idx) == key).copied()
    }

    /// Returns the index of `key`, inserting it when new. Fails with `None`
    /// only when a new node would push the count past `cap`.
    pub fn intern(&mut self, key: &[u32], cap: usize) -> Option<u32> {
        let hash = self.hasher.hash_one(key);
        let Self {
            arena,
            offsets,
            table,
            hasher,
        } = self;
        let slice_of = |idx: u32| {
            let i = idx as usize;
            &arena[offsets[i] as usize..offsets[i + 1] as usize]
        };
        if let Some(&idx) = table.find(hash, |&idx| slice_of(idx) == key) {
            return Some(idx);
        }
        let idx = offsets.len() - 1;
        if idx >= cap {
            return None;
        }
        let idx = idx as u32;
        arena.extend_from_slice(key);
        offsets.push(arena.len() as u32);
        let (arena, offsets) = (&*arena, &*offsets);
        table.insert_unique(hash, idx, |&other| {
            let i = other as usize;
            hasher.hash_one(&arena[offsets[i] as usize..offsets[i + 1] as usize])
        });
        Some(idx)
    }
}
