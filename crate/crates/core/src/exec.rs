//! Candidate scans are embarrassingly parallel. The core stays
//! single-threaded and lets the caller supply the map.

use alloc::vec::Vec;

/// Order-preserving map over a slice.
pub trait Executor {
    fn map<I, T, F>(&self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send;
}

/// Plain iterator map.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<I, T, F>(&self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        items.iter().map(f).collect()
    }
}
