//! Structural predicates on members of avoidance classes with cycle pattern 213.
//!
//! Each predicate returns `true` for words it says nothing about, so it can
//! be checked against every member of a class.

use crate::perm::CycleWord;

fn strictly_increasing(xs: &[usize]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

fn is_range(xs: &[usize], lo: usize, hi: usize) -> bool {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.into_iter().eq(lo..=hi)
}

/// With 2 at position r: the letters between 1 and 2 are `{n-r+3, …, n}`
/// and the letters after 2 are `{3, …, n-r+2}`.
pub fn splits_around_two(w: &CycleWord) -> bool {
    let c = w.word();
    let n = c.len();
    let Some(r) = w.position_of(2) else {
        return true;
    };
    is_range(&c[1..r - 1], n + 3 - r, n) && is_range(&c[r..], 3, n + 2 - r)
}

/// The letters after 2 are strictly increasing.
pub fn increasing_after_two(w: &CycleWord) -> bool {
    match w.position_of(2) {
        Some(r) => strictly_increasing(&w.word()[r..]),
        None => true,
    }
}

/// Shape of members of `A_n(1324,1423; 213)`, `n > 5`, by the position r of 2:
///
/// * `2 < r < n`: either `c_2 < … < c_{r-1} = n`, or
///   `c_{r+1} < … < c_n` with `c_{r-1} = c_n + 1`; the second form needs `r > 3`.
/// * `r = n`: `c_{n-1}` is `n` or `3`.
/// * `r = 3`: `c_2 = n`.
pub fn plus_minus_shape(w: &CycleWord) -> bool {
    let c = w.word();
    let n = c.len();
    let Some(r) = w.position_of(2) else {
        return true;
    };
    if r == 2 {
        return true;
    }
    if r == n {
        return c[n - 2] == n || c[n - 2] == 3;
    }
    if r == 3 {
        return c[1] == n;
    }
    let plus = c[r - 2] == n && strictly_increasing(&c[1..r - 1]);
    let minus = strictly_increasing(&c[r..]) && c[r - 2] == c[n - 1] + 1;
    plus || minus
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CycleWord {
        s.parse().unwrap()
    }

    #[test]
    fn split_sets() {
        assert!(splits_around_two(&w("15234")));
        assert!(splits_around_two(&w("145632")));
        assert!(!splits_around_two(&w("13245")));
        assert!(splits_around_two(&w("1")));
    }

    #[test]
    fn after_two() {
        assert!(increasing_after_two(&w("15234")));
        assert!(!increasing_after_two(&w("15243")));
        assert!(increasing_after_two(&w("1342")));
    }

    #[test]
    fn plus_minus() {
        // plus form: prefix increasing up to n
        assert!(plus_minus_shape(&w("145623")));
        // minus form: tail increasing, c_{r-1} = c_n + 1
        assert!(plus_minus_shape(&w("165234")));
        assert!(plus_minus_shape(&w("156234")));
        assert!(!plus_minus_shape(&w("164235")));
        assert!(plus_minus_shape(&w("162345")));
        assert!(!plus_minus_shape(&w("152346")));
        assert!(!plus_minus_shape(&w("134652")));
        assert!(plus_minus_shape(&w("1456732")));
    }
}
