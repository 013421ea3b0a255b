/// Smallest `g >= 0` with `base^g >= n`, i.e. `ceil(log_base n)` for `n >= 1`.
///
/// Exact integer arithmetic; `base` must be at least 2.
pub fn ceil_log(base: usize, n: usize) -> u32 {
    debug_assert!(base >= 2);
    let mut g = 0;
    let mut power: usize = 1;
    while power < n {
        power = power.saturating_mul(base);
        g += 1;
    }
    g
}

/// FNV-1a, used for short content fingerprints in transcript headers.
pub(crate) fn fnv1a64(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_log_matches_powers() {
        assert_eq!(ceil_log(2, 1), 0);
        assert_eq!(ceil_log(2, 4), 2);
        assert_eq!(ceil_log(2, 5), 3);
        assert_eq!(ceil_log(2, 10), 4);
        assert_eq!(ceil_log(2, 50), 6);
        assert_eq!(ceil_log(3, 8000), 9);
        assert_eq!(ceil_log(2, 8000), 13);
    }
}
