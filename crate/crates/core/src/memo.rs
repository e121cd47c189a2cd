//! A read-mostly memo table usable without `std`.
//!
//! Readers share a lock; a missing value is computed outside the lock and the
//! first finished insertion wins, so each key is inserted at most once and
//! every caller observes the same `Arc`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;

use spin::RwLock;

pub struct Memo<K, V> {
    table: RwLock<BTreeMap<K, Arc<V>>>,
}

impl<K: Ord + Clone, V> Memo<K, V> {
    pub const fn new() -> Self {
        Self {
            table: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn get(&self, key: &K) -> Option<Arc<V>> {
        self.table.read().get(key).cloned()
    }

    pub fn get_or_try_insert_with<E>(
        &self,
        key: &K,
        make: impl FnOnce() -> Result<V, E>,
    ) -> Result<Arc<V>, E> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let fresh = Arc::new(make()?);
        let mut table = self.table.write();
        Ok(table.entry(key.clone()).or_insert(fresh).clone())
    }

    /// Inserts `value` unless `key` is already present; returns the stored value.
    pub fn insert(&self, key: K, value: V) -> Arc<V> {
        let mut table = self.table.write();
        table.entry(key).or_insert_with(|| Arc::new(value)).clone()
    }

    pub fn len(&self) -> usize {
        self.table.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<K: Ord + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_insertion_wins() {
        let memo: Memo<u32, u32> = Memo::new();
        let a = memo.get_or_try_insert_with::<()>(&1, || Ok(10)).unwrap();
        let b = memo.get_or_try_insert_with::<()>(&1, || Ok(20)).unwrap();
        assert_eq!((*a, *b), (10, 10));
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(memo.len(), 1);
    }

    #[test]
    fn failures_are_not_cached() {
        let memo: Memo<u32, u32> = Memo::new();
        assert!(memo.get_or_try_insert_with(&1, || Err("boom")).is_err());
        assert!(memo.is_empty());
    }
}
