//! Bucket sorts used by the incremental engine.

/// Largest bucket array allocated for one counting pass.
const MAX_BUCKETS: usize = 1 << 16;

/// Stable counting sort of `items` by `key`, with every key `< radix`.
pub(crate) fn counting_sort<T: Copy>(
    items: &[T],
    radix: usize,
    key: impl Fn(&T) -> usize,
) -> Vec<T> {
    let mut start = vec![0usize; radix + 1];
    for it in items {
        start[key(it) + 1] += 1;
    }
    for b in 0..radix {
        start[b + 1] += start[b];
    }
    // every slot is overwritten below
    let mut out = items.to_vec();
    for it in items {
        let slot = &mut start[key(it)];
        out[*slot] = *it;
        *slot += 1;
    }
    out
}

/// Stable LSD radix sort by `key < max_key`, splitting keys into digits of at
/// most `MAX_BUCKETS` buckets.
pub(crate) fn radix_sort<T: Copy>(
    items: Vec<T>,
    max_key: usize,
    key: impl Fn(&T) -> usize,
) -> Vec<T> {
    if max_key <= MAX_BUCKETS {
        return counting_sort(&items, max_key.max(1), key);
    }
    let mut sorted = items;
    let mut divisor = 1usize;
    while divisor < max_key {
        sorted = counting_sort(&sorted, MAX_BUCKETS, |t| (key(t) / divisor) % MAX_BUCKETS);
        divisor = divisor.saturating_mul(MAX_BUCKETS);
    }
    sorted
}

/// Variable-length strings stored back to back: string `s` is
/// `symbols[offsets[s]..offsets[s + 1]]`.
pub(crate) struct Strings<'a> {
    pub offsets: &'a [usize],
    pub symbols: &'a [u32],
}

impl Strings<'_> {
    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn get(&self, s: usize) -> &[u32] {
        &self.symbols[self.offsets[s]..self.offsets[s + 1]]
    }
}

/// Lexicographic order of `strings` over the alphabet `0..alphabet`, in time
/// linear in the total length plus the alphabet size.
///
/// Strings are processed from the last position to the first; at each
/// position the strings of exactly that length go to the front of the queue
/// and the queue is redistributed by the symbol at that position. Only the
/// buckets known to be nonempty at a position are visited.
pub(crate) fn sort_strings(strings: &Strings<'_>, alphabet: usize) -> Vec<usize> {
    let count = strings.len();
    let max_len = (0..count).map(|s| strings.get(s).len()).max().unwrap_or(0);

    // (position, symbol) pairs ordered by position then symbol, deduplicated
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(strings.symbols.len());
    for s in 0..count {
        pairs.extend(
            strings
                .get(s)
                .iter()
                .enumerate()
                .map(|(p, &a)| (p as u32, a)),
        );
    }
    let pairs = counting_sort(&pairs, alphabet.max(1), |p| p.1 as usize);
    let pairs = counting_sort(&pairs, max_len.max(1), |p| p.0 as usize);
    let mut nonempty: Vec<Vec<u32>> = vec![Vec::new(); max_len];
    for (p, a) in pairs {
        let list = &mut nonempty[p as usize];
        if list.last() != Some(&a) {
            list.push(a);
        }
    }

    let by_length = counting_sort(&(0..count).collect::<Vec<_>>(), max_len + 1, |&s| {
        strings.get(s).len()
    });
    let mut length_start = vec![0usize; max_len + 2];
    for &s in &by_length {
        length_start[strings.get(s).len() + 1] += 1;
    }
    for l in 0..=max_len {
        length_start[l + 1] += length_start[l];
    }

    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); alphabet];
    let mut queue: Vec<usize> = Vec::with_capacity(count);
    for pos in (0..max_len).rev() {
        let exact = &by_length[length_start[pos + 1]..length_start[pos + 2]];
        for &s in exact.iter().chain(queue.iter()) {
            buckets[strings.get(s)[pos] as usize].push(s);
        }
        queue.clear();
        for &a in &nonempty[pos] {
            queue.append(&mut buckets[a as usize]);
        }
    }
    let empty = &by_length[length_start[0]..length_start[1]];
    let mut order = empty.to_vec();
    order.extend(queue);
    order
}
