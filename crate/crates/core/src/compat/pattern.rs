use crate::order::Permutation;

/// Whether some subsequence of `w` is order-isomorphic to `pattern`.
/// Brute force over index tuples; fine for the sizes used here.
pub fn contains_pattern(w: &Permutation, pattern: &[u8]) -> bool {
    let e = w.entries();
    let k = pattern.len();
    if k > e.len() {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let matches = (0..k)
            .all(|a| (a + 1..k).all(|b| (e[idx[a]] < e[idx[b]]) == (pattern[a] < pattern[b])));
        if matches {
            return true;
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < e.len() - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn is_312_avoiding(w: &Permutation) -> bool {
    !contains_pattern(w, &[3, 1, 2])
}

pub fn is_213_avoiding(v: &Permutation) -> bool {
    !contains_pattern(v, &[2, 1, 3])
}
