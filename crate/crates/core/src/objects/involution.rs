//! Fixed-point-free involutions with paired excedances.

use crate::error::{capacity, Result};

/// Largest `n` accepted by [`count_paired_excedance_involutions`].
pub const PAIRED_EXCEDANCE_MAX_N: u32 = 4;

/// Counts fixed-point-free involutions of `[4n]` in which positions `2i-1`
/// and `2i` are both excedances or both anti-excedances, for every `i`.
///
/// In a product of 2-cycles the smaller element of each cycle is an
/// excedance and the larger an anti-excedance, which lets the search prune
/// as soon as a pair of positions disagrees.
pub fn count_paired_excedance_involutions(n: u32) -> Result<u64> {
    if n > PAIRED_EXCEDANCE_MAX_N {
        return Err(capacity(
            "paired-excedance search n",
            PAIRED_EXCEDANCE_MAX_N as u64,
            n as u64,
        ));
    }
    let size = 4 * n as usize;
    // 0 unassigned, 1 excedance, 2 anti-excedance
    let mut kind = vec![0u8; size];
    Ok(search(&mut kind))
}

fn buddy(i: usize) -> usize {
    i ^ 1
}

fn search(kind: &mut [u8]) -> u64 {
    let Some(i) = kind.iter().position(|&k| k == 0) else {
        return 1;
    };
    let b = buddy(i);
    if kind[b] == 2 {
        return 0;
    }
    kind[i] = 1;
    let mut total = 0;
    for j in i + 1..kind.len() {
        if kind[j] != 0 {
            continue;
        }
        let bj = buddy(j);
        if kind[bj] == 1 {
            continue;
        }
        kind[j] = 2;
        total += search(kind);
        kind[j] = 0;
    }
    kind[i] = 0;
    total
}
