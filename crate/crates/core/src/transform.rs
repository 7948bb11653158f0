//! In-place Walsh–Hadamard transform over subset-parity characters:
//! `out[s] = Σ_c in[c] · (-1)^{|c ∩ s|}`.

use std::ops::{Add, Sub};

use rayon::prelude::*;

/// Unnormalized transform; `data.len()` must be a power of two.
pub fn walsh_hadamard<T>(data: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let len = data.len();
    assert!(len.is_power_of_two(), "length {len} is not a power of two");
    let mut h = 1;
    while h < len {
        for block in data.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                *a = u + v;
                *b = u - v;
            }
        }
        h <<= 1;
    }
}

/// Same transform with the butterfly stages split across the rayon pool;
/// used for the `4^n`-entry tables.
pub fn walsh_hadamard_par<T>(data: &mut [T])
where
    T: Copy + Send + Sync + Add<Output = T> + Sub<Output = T>,
{
    const SERIAL: usize = 1 << 14;
    let len = data.len();
    assert!(len.is_power_of_two(), "length {len} is not a power of two");
    if len <= SERIAL {
        return walsh_hadamard(data);
    }
    // low stages entirely inside independent chunks
    data.par_chunks_mut(SERIAL).for_each(walsh_hadamard);
    let mut h = SERIAL;
    while h < len {
        data.par_chunks_mut(2 * h).for_each(|block| {
            let (lo, hi) = block.split_at_mut(h);
            lo.par_chunks_mut(SERIAL)
                .zip(hi.par_chunks_mut(SERIAL))
                .for_each(|(l, r)| {
                    for (a, b) in l.iter_mut().zip(r.iter_mut()) {
                        let (u, v) = (*a, *b);
                        *a = u + v;
                        *b = u - v;
                    }
                });
        });
        h <<= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(input: &[i64]) -> Vec<i64> {
        (0..input.len())
            .map(|s| {
                input
                    .iter()
                    .enumerate()
                    .map(|(c, &v)| if (c & s).count_ones() % 2 == 1 { -v } else { v })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn matches_character_sums() {
        let input: Vec<i64> = (0..64).map(|i| (i * 37 % 11) as i64 - 5).collect();
        let mut fast = input.clone();
        walsh_hadamard(&mut fast);
        assert_eq!(fast, naive(&input));
    }

    #[test]
    fn parallel_matches_serial() {
        let input: Vec<i32> = (0..1 << 17).map(|i| ((i * 7919) % 13) - 6).collect();
        let mut a = input.clone();
        let mut b = input;
        walsh_hadamard(&mut a);
        walsh_hadamard_par(&mut b);
        assert_eq!(a, b);
    }

    #[test]
    fn involution_up_to_scale() {
        let input: Vec<i64> = (0..16).map(|i| i * i - 3).collect();
        let mut x = input.clone();
        walsh_hadamard(&mut x);
        walsh_hadamard(&mut x);
        let scaled: Vec<i64> = input.iter().map(|v| v * 16).collect();
        assert_eq!(x, scaled);
    }
}
