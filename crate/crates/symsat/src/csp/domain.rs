//! Bitset domains with an undo trail.
//!
//! All variable domains live in one flat word array. Propagators only ever
//! remove values; every removal is recorded on the trail so search can
//! rewind to a decision point in O(removals).

/// Flat storage of all current domains plus the backtracking trail.
#[derive(Debug)]
pub struct DomainStore {
    words: Vec<u64>,
    sizes: Vec<u32>,
    // per-variable layout, fixed for the lifetime of the store
    offsets: Vec<u32>,
    widths: Vec<u32>,
    bases: Vec<i32>,
    trail: Vec<TrailEntry>,
}

#[derive(Debug, Clone, Copy)]
struct TrailEntry {
    var: u32,
    word: u32,
    mask: u64,
}

/// Marker returned by `mark`, consumed by `undo_to`.
#[derive(Debug, Clone, Copy)]
pub struct Mark(usize);

/// A domain wipe-out during propagation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conflict;

impl DomainStore {
    pub fn new(domains: &[Vec<i32>]) -> DomainStore {
        let mut words = Vec::new();
        let mut sizes = Vec::with_capacity(domains.len());
        let mut offsets = Vec::with_capacity(domains.len());
        let mut widths = Vec::with_capacity(domains.len());
        let mut bases = Vec::with_capacity(domains.len());
        for dom in domains {
            let base = dom.iter().copied().min().unwrap_or(0);
            let span = dom.iter().copied().max().unwrap_or(0) - base + 1;
            let width = (span as u32).div_ceil(64).max(1);
            offsets.push(words.len() as u32);
            widths.push(width);
            bases.push(base);
            let start = words.len();
            words.resize(start + width as usize, 0);
            for &v in dom {
                let bit = (v - base) as usize;
                words[start + bit / 64] |= 1u64 << (bit % 64);
            }
            sizes.push(dom.len() as u32);
        }
        DomainStore {
            words,
            sizes,
            offsets,
            widths,
            bases,
            trail: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.sizes.len()
    }

    pub fn size(&self, var: usize) -> u32 {
        self.sizes[var]
    }

    pub fn is_assigned(&self, var: usize) -> bool {
        self.sizes[var] == 1
    }

    pub fn contains(&self, var: usize, val: i32) -> bool {
        let base = self.bases[var];
        if val < base {
            return false;
        }
        let bit = (val - base) as u32;
        if bit >= self.widths[var] * 64 {
            return false;
        }
        let w = self.words[(self.offsets[var] + bit / 64) as usize];
        w >> (bit % 64) & 1 == 1
    }

    /// The single remaining value, if the variable is assigned.
    pub fn value(&self, var: usize) -> Option<i32> {
        if self.sizes[var] != 1 {
            return None;
        }
        Some(self.min(var))
    }

    /// Smallest value still in the domain. Panics on an empty domain.
    pub fn min(&self, var: usize) -> i32 {
        let off = self.offsets[var] as usize;
        for w in 0..self.widths[var] as usize {
            let word = self.words[off + w];
            if word != 0 {
                return self.bases[var] + (w * 64 + word.trailing_zeros() as usize) as i32;
            }
        }
        panic!("min of empty domain");
    }

    pub fn max(&self, var: usize) -> i32 {
        let off = self.offsets[var] as usize;
        for w in (0..self.widths[var] as usize).rev() {
            let word = self.words[off + w];
            if word != 0 {
                return self.bases[var] + (w * 64 + 63 - word.leading_zeros() as usize) as i32;
            }
        }
        panic!("max of empty domain");
    }

    pub fn iter(&self, var: usize) -> DomainIter<'_> {
        DomainIter {
            store: self,
            var,
            word: 0,
            bits: self.words[self.offsets[var] as usize],
        }
    }

    pub fn to_vec(&self, var: usize) -> Vec<i32> {
        self.iter(var).collect()
    }

    /// Remove one value. Returns whether the domain changed; `Err` on wipe-out.
    pub fn remove(&mut self, var: usize, val: i32) -> Result<bool, Conflict> {
        let base = self.bases[var];
        if val < base {
            return Ok(false);
        }
        let bit = (val - base) as u32;
        if bit >= self.widths[var] * 64 {
            return Ok(false);
        }
        let idx = (self.offsets[var] + bit / 64) as usize;
        let mask = 1u64 << (bit % 64);
        if self.words[idx] & mask == 0 {
            return Ok(false);
        }
        self.words[idx] &= !mask;
        self.sizes[var] -= 1;
        self.trail.push(TrailEntry {
            var: var as u32,
            word: bit / 64,
            mask,
        });
        if self.sizes[var] == 0 {
            Err(Conflict)
        } else {
            Ok(true)
        }
    }

    /// Reduce the domain to a single value. `Err` if that value is absent.
    pub fn assign(&mut self, var: usize, val: i32) -> Result<bool, Conflict> {
        if !self.contains(var, val) {
            // wipe the domain is wrong here; just fail
            return Err(Conflict);
        }
        if self.sizes[var] == 1 {
            return Ok(false);
        }
        let base = self.bases[var];
        let keep_bit = (val - base) as u32;
        let off = self.offsets[var];
        for w in 0..self.widths[var] {
            let idx = (off + w) as usize;
            let mut clear = self.words[idx];
            if w == keep_bit / 64 {
                clear &= !(1u64 << (keep_bit % 64));
            }
            if clear != 0 {
                self.words[idx] &= !clear;
                self.sizes[var] -= clear.count_ones();
                self.trail.push(TrailEntry {
                    var: var as u32,
                    word: w,
                    mask: clear,
                });
            }
        }
        Ok(true)
    }

    /// Remove every value strictly above `bound`.
    pub fn remove_above(&mut self, var: usize, bound: i32) -> Result<bool, Conflict> {
        self.remove_outside(var, i32::MIN, bound)
    }

    /// Remove every value strictly below `bound`.
    pub fn remove_below(&mut self, var: usize, bound: i32) -> Result<bool, Conflict> {
        self.remove_outside(var, bound, i32::MAX)
    }

    /// Keep only values in `[lo, hi]`.
    pub fn remove_outside(&mut self, var: usize, lo: i32, hi: i32) -> Result<bool, Conflict> {
        let base = self.bases[var];
        let width = self.widths[var];
        let off = self.offsets[var];
        let span = width * 64;
        let lo_bit = (lo.max(base) - base).clamp(0, span as i32) as u32;
        let hi_bit = if hi == i32::MAX {
            span as i64 - 1
        } else {
            (hi - base) as i64
        };
        let mut changed = false;
        for w in 0..width {
            let word_lo = w as i64 * 64;
            // bits to clear: below lo_bit or above hi_bit
            let mut clear = 0u64;
            if (lo_bit as i64) > word_lo {
                let k = (lo_bit as i64 - word_lo).min(64) as u32;
                clear |= if k >= 64 { !0 } else { (1u64 << k) - 1 };
            }
            if hi_bit < word_lo + 63 {
                // number of low bits of this word to keep
                let keep = (hi_bit - word_lo + 1).clamp(0, 64);
                clear |= if keep == 0 {
                    !0
                } else if keep == 64 {
                    0
                } else {
                    !((1u64 << keep) - 1)
                };
            }
            let idx = (off + w) as usize;
            let removing = self.words[idx] & clear;
            if removing != 0 {
                self.words[idx] &= !removing;
                self.sizes[var] -= removing.count_ones();
                self.trail.push(TrailEntry {
                    var: var as u32,
                    word: w,
                    mask: removing,
                });
                changed = true;
            }
        }
        if self.sizes[var] == 0 {
            Err(Conflict)
        } else {
            Ok(changed)
        }
    }

    pub fn mark(&self) -> Mark {
        Mark(self.trail.len())
    }

    pub fn undo_to(&mut self, mark: Mark) {
        while self.trail.len() > mark.0 {
            let e = self.trail.pop().unwrap();
            let idx = (self.offsets[e.var as usize] + e.word) as usize;
            self.words[idx] |= e.mask;
            self.sizes[e.var as usize] += e.mask.count_ones();
        }
    }
}

pub struct DomainIter<'a> {
    store: &'a DomainStore,
    var: usize,
    word: u32,
    bits: u64,
}

impl Iterator for DomainIter<'_> {
    type Item = i32;

    fn next(&mut self) -> Option<i32> {
        loop {
            if self.bits != 0 {
                let bit = self.bits.trailing_zeros();
                self.bits &= self.bits - 1;
                let pos = self.word * 64 + bit;
                return Some(self.store.bases[self.var] + pos as i32);
            }
            self.word += 1;
            if self.word >= self.store.widths[self.var] {
                return None;
            }
            self.bits = self.store.words[(self.store.offsets[self.var] + self.word) as usize];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership_and_removal() {
        let mut s = DomainStore::new(&[vec![1, 2, 3, 4], vec![0, 100]]);
        assert_eq!(s.size(0), 4);
        assert!(s.contains(1, 100));
        assert!(!s.contains(1, 50));
        assert!(s.remove(0, 2).unwrap());
        assert!(!s.remove(0, 2).unwrap());
        assert_eq!(s.to_vec(0), vec![1, 3, 4]);
        assert_eq!(s.min(0), 1);
        assert_eq!(s.max(0), 4);
    }

    #[test]
    fn assign_and_undo() {
        let mut s = DomainStore::new(&[vec![1, 2, 3, 4]]);
        let m = s.mark();
        s.assign(0, 3).unwrap();
        assert_eq!(s.value(0), Some(3));
        s.undo_to(m);
        assert_eq!(s.to_vec(0), vec![1, 2, 3, 4]);
    }

    #[test]
    fn wipe_out_is_a_conflict() {
        let mut s = DomainStore::new(&[vec![5]]);
        assert_eq!(s.remove(0, 5), Err(Conflict));
    }

    #[test]
    fn range_removal() {
        let mut s = DomainStore::new(&[(0..130).collect::<Vec<i32>>()]);
        s.remove_outside(0, 10, 120).unwrap();
        assert_eq!(s.min(0), 10);
        assert_eq!(s.max(0), 120);
        assert_eq!(s.size(0), 111);
        s.remove_above(0, 64).unwrap();
        assert_eq!(s.max(0), 64);
        s.remove_below(0, 63).unwrap();
        assert_eq!(s.to_vec(0), vec![63, 64]);
    }

    #[test]
    fn assign_missing_value_fails() {
        let mut s = DomainStore::new(&[vec![1, 2]]);
        assert_eq!(s.assign(0, 9), Err(Conflict));
    }
}
