//! Word-level helpers for the reachable-value and length bitsets.

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

#[cfg(test)]
pub(crate) fn get(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

/// `dst |= src << shift`, truncated to the length of `dst`.
pub(crate) fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (wshift, bshift) = (shift / 64, shift % 64);
    let n = dst.len();
    for i in (wshift..n).rev() {
        let j = i - wshift;
        let mut w = if j < src.len() { src[j] << bshift } else { 0 };
        if bshift != 0 && j >= 1 && j - 1 < src.len() {
            w |= src[j - 1] >> (64 - bshift);
        }
        dst[i] |= w;
    }
}

/// `dst |= src >> shift`.
pub(crate) fn or_shifted_right(dst: &mut [u64], src: &[u64], shift: usize) {
    let (wshift, bshift) = (shift / 64, shift % 64);
    for (i, d) in dst.iter_mut().enumerate() {
        let j = i + wshift;
        if j >= src.len() {
            break;
        }
        let mut w = src[j] >> bshift;
        if bshift != 0 && j + 1 < src.len() {
            w |= src[j + 1] << (64 - bshift);
        }
        *d |= w;
    }
}

/// Clears every bit at position `>= bits`.
pub(crate) fn truncate(row: &mut [u64], bits: usize) {
    let full = bits / 64;
    if full >= row.len() {
        return;
    }
    let rem = bits % 64;
    row[full] &= if rem == 0 { 0 } else { (1u64 << rem) - 1 };
    for w in &mut row[full + 1..] {
        *w = 0;
    }
}

pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}
