//! Closed-form Nim outcomes.

use crate::error::Result;
use crate::game::PlayerCount;
use crate::nim::position::{NimPosition, NimProfile};
use crate::outcome::Outcome;

/// Three-player outcomes of `k·* + G` by `k mod 3`, for the five `G` that
/// are not undetermined: `0`, `*2`, `*m`, `*2+*2`, `*2+*m` (`m >= 3`).
const SMALL_NIM: [(NimProfile, [&str; 3]); 5] = [
    (
        NimProfile {
            n1: 0,
            n2: 0,
            n3: 0,
        },
        ["OP", "PN", "NO"],
    ),
    (
        NimProfile {
            n1: 0,
            n2: 1,
            n3: 0,
        },
        ["N", "NO", "PN"],
    ),
    (
        NimProfile {
            n1: 0,
            n2: 0,
            n3: 1,
        },
        ["N", "NO", "N"],
    ),
    (
        NimProfile {
            n1: 0,
            n2: 2,
            n3: 0,
        },
        ["O", "N", "NO"],
    ),
    (
        NimProfile {
            n1: 0,
            n2: 1,
            n3: 1,
        },
        ["-", "N", "NO"],
    ),
];

pub fn closed3_profile(p: NimProfile) -> Outcome {
    let n = PlayerCount::THREE;
    let key = NimProfile::new(0, p.n2, p.n3);
    SMALL_NIM
        .iter()
        .find(|(g, _)| *g == key)
        .map(|(_, row)| Outcome::parse(row[p.n1 % 3], n).expect("valid table entry"))
        .unwrap_or_else(|| Outcome::empty(n))
}

/// Three-player outcome of a Nim position from its heap profile.
pub fn nim_outcome_closed3(p: &NimPosition) -> Outcome {
    closed3_profile(p.profile())
}

/// `o(*i)`: everyone except `O_1..O_min(i,N-1)`, or all but Next for `i = 0`.
pub fn one_heap_outcome(i: usize, n: PlayerCount) -> Outcome {
    if i == 0 {
        return Outcome::full(n).without(0).expect("seat 0 exists");
    }
    let top = i.min(n.get() - 1);
    let seats: Vec<usize> = (1..=top).collect();
    Outcome::all_but(&seats, n).expect("seats in range")
}

/// `o(*i + *j)` for `N > 2`.
pub fn two_heap_outcome(i: usize, j: usize, n: PlayerCount) -> Result<Outcome> {
    n.require_more_than_two("two_heap_outcome")?;
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    let nn = n.get();
    Ok(if i == 0 {
        one_heap_outcome(j, n)
    } else if i <= nn - 2 {
        let top = (i + j).min(nn - 1);
        let seats: Vec<usize> = (2..=top).collect();
        Outcome::all_but(&seats, n)?
    } else if i == nn - 1 && j == nn - 1 {
        Outcome::from_seats(&[1], n)?
    } else {
        Outcome::empty(n)
    })
}

/// `o(k·*)`: everyone except `O_{k mod N}`.
pub fn ones_outcome(k: usize, n: PlayerCount) -> Outcome {
    Outcome::all_but(&[k % n.get()], n).expect("seat in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(t: &str, n: usize) -> Outcome {
        Outcome::parse(t, PlayerCount::new(n).unwrap()).unwrap()
    }

    #[test]
    fn closed3_examples() {
        assert_eq!(
            nim_outcome_closed3(&NimPosition::new([1, 1, 1, 1])),
            o("PN", 3)
        );
        assert_eq!(
            nim_outcome_closed3(&NimPosition::new([1, 1, 2])),
            o("PN", 3)
        );
        assert_eq!(nim_outcome_closed3(&NimPosition::new([2, 5])), o("-", 3));
        assert_eq!(nim_outcome_closed3(&NimPosition::new([])), o("OP", 3));
        assert_eq!(nim_outcome_closed3(&NimPosition::new([1, 2, 3])), o("N", 3));
    }

    #[test]
    fn one_heap_examples() {
        let five = PlayerCount::new(5).unwrap();
        assert_eq!(
            one_heap_outcome(1, five),
            Outcome::all_but(&[1], five).unwrap()
        );
        assert_eq!(
            one_heap_outcome(3, five),
            Outcome::all_but(&[1, 2, 3], five).unwrap()
        );
        assert_eq!(one_heap_outcome(9, PlayerCount::new(4).unwrap()), o("N", 4));
        assert_eq!(
            one_heap_outcome(0, five),
            Outcome::all_but(&[0], five).unwrap()
        );
    }

    #[test]
    fn two_heap_examples() {
        let four = PlayerCount::new(4).unwrap();
        assert_eq!(
            two_heap_outcome(0, 0, four).unwrap(),
            Outcome::all_but(&[0], four).unwrap()
        );
        assert_eq!(
            two_heap_outcome(2, 3, four).unwrap(),
            Outcome::all_but(&[2, 3], four).unwrap()
        );
        assert_eq!(
            two_heap_outcome(3, 3, four).unwrap(),
            Outcome::from_seats(&[1], four).unwrap()
        );
        assert_eq!(
            two_heap_outcome(3, 2, four).unwrap(),
            two_heap_outcome(2, 3, four).unwrap()
        );
        assert!(two_heap_outcome(3, 4, four).unwrap().is_empty());
        assert!(two_heap_outcome(1, 1, PlayerCount::TWO).is_err());
    }
}
