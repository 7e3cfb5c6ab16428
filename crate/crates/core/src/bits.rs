//! Big-endian bit strings: `"a1a2…aN"`, qubit 1 first and most significant.

use crate::error::{Error, Result};

pub fn parse_bits(text: &str) -> Result<Vec<bool>> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::InvalidArgument(format!("`{text}` is not a bit string"))),
        })
        .collect()
}

pub fn format_bits(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Bits of `index` as an `n`-bit big-endian string.
pub fn index_to_bits(index: usize, n: usize) -> Vec<bool> {
    (0..n).map(|i| (index >> (n - 1 - i)) & 1 == 1).collect()
}

pub fn bits_to_index(bits: &[bool]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
}

pub(crate) fn check_len(bits: &[bool], expected: usize) -> Result<()> {
    if bits.len() != expected {
        return Err(Error::BitLength {
            expected,
            actual: bits.len(),
        });
    }
    Ok(())
}
