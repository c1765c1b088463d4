//! Order-preserving parallel map with a thread cap from `HYPERF_THREADS`.
//!
//! Work items are pure, so results depend only on the inputs; the output is
//! collected in input order, keeping reports byte-identical regardless of
//! the thread count.

/// Worker thread cap: `HYPERF_THREADS` when set to a positive integer,
/// otherwise the available parallelism.
pub fn thread_cap() -> usize {
    if let Ok(raw) = std::env::var("HYPERF_THREADS") {
        if let Ok(n) = raw.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Applies `f` to every item, in parallel across at most [`thread_cap`]
/// threads, returning results in input order.
pub fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let threads = thread_cap().min(items.len().max(1));
    if threads <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let mut slots: Vec<Option<R>> = Vec::with_capacity(items.len());
    slots.resize_with(items.len(), || None);
    let chunk = items.len().div_ceil(threads);
    std::thread::scope(|scope| {
        for (item_chunk, slot_chunk) in items.chunks(chunk).zip(slots.chunks_mut(chunk)) {
            let f = &f;
            scope.spawn(move || {
                for (item, slot) in item_chunk.iter().zip(slot_chunk.iter_mut()) {
                    *slot = Some(f(item));
                }
            });
        }
    });
    slots.into_iter().map(|r| r.expect("worker filled every slot")).collect()
}
