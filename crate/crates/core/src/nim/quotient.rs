//! The three-player Nim quotient, rebuilt by separating profiles with
//! Nim contexts.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::nim::closed::closed3_profile;
use crate::nim::position::{NimPosition, NimProfile};
use crate::outcome::Outcome;

/// Normal form `a^x b^y c^z` with `x < 3`, `z < 2`, `y + z < 3`, or the
/// absorbing class `c^2`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum QuotientElement {
    Word { x: u8, y: u8, z: u8 },
    Absorbing,
}

/// Profile caps for context separation: `n1 <= 5`, `n2 <= 4`, `n3 <= 3`.
pub const PROFILE_CAPS: NimProfile = NimProfile {
    n1: 5,
    n2: 4,
    n3: 3,
};

impl QuotientElement {
    pub const ONE: QuotientElement = QuotientElement::Word { x: 0, y: 0, z: 0 };
    pub const A: QuotientElement = QuotientElement::Word { x: 1, y: 0, z: 0 };
    pub const B: QuotientElement = QuotientElement::Word { x: 0, y: 1, z: 0 };
    pub const C: QuotientElement = QuotientElement::Word { x: 0, y: 0, z: 1 };

    /// Reduces arbitrary exponents.
    pub fn from_exponents(x: usize, y: usize, z: usize) -> Self {
        if z >= 2 || y + z >= 3 {
            QuotientElement::Absorbing
        } else {
            QuotientElement::Word {
                x: (x % 3) as u8,
                y: y as u8,
                z: z as u8,
            }
        }
    }

    /// The 16 elements in the usual table order.
    pub fn all() -> Vec<QuotientElement> {
        let mut out = Vec::with_capacity(16);
        for (y, z) in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)] {
            for x in 0..3 {
                out.push(QuotientElement::Word { x, y, z });
            }
        }
        out.push(QuotientElement::Absorbing);
        out
    }

    pub fn pow(self, k: usize) -> QuotientElement {
        (0..k).fold(Self::ONE, |acc, _| acc * self)
    }

    /// A Nim position in this class.
    pub fn representative(self) -> NimPosition {
        match self {
            QuotientElement::Word { x, y, z } => {
                NimProfile::new(x as usize, y as usize, z as usize).position()
            }
            QuotientElement::Absorbing => NimProfile::new(0, 0, 2).position(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        QuotientElement::all()
            .into_iter()
            .find(|e| e.to_string() == text.trim())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown quotient element {text:?}")))
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y, z) = match *self {
            QuotientElement::Word { x, y, z } => (x, y, z),
            QuotientElement::Absorbing => (0, 0, 2),
        };
        if x + y + z == 0 {
            return f.write_str("1");
        }
        for (letter, e) in [('a', x), ('b', y), ('c', z)] {
            match e {
                0 => {}
                1 => write!(f, "{letter}")?,
                _ => write!(f, "{letter}^{e}")?,
            }
        }
        Ok(())
    }
}

impl std::ops::Mul for QuotientElement {
    type Output = QuotientElement;

    fn mul(self, other: QuotientElement) -> QuotientElement {
        match (self, other) {
            (
                QuotientElement::Word { x, y, z },
                QuotientElement::Word {
                    x: x2,
                    y: y2,
                    z: z2,
                },
            ) => Self::from_exponents((x + x2) as usize, (y + y2) as usize, (z + z2) as usize),
            _ => QuotientElement::Absorbing,
        }
    }
}

/// Class of a Nim position: heaps of size at least 3 count as `c`.
pub fn phi(p: &NimPosition) -> QuotientElement {
    let pr = p.profile();
    QuotientElement::from_exponents(pr.n1, pr.n2, pr.n3)
}

/// Outcome of a class, read off its representative.
pub fn pi(q: QuotientElement) -> Outcome {
    closed3_profile(q.representative().profile())
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub elements: Vec<QuotientElement>,
    /// `mult[i][j]` indexes into `elements`.
    pub mult: Vec<Vec<usize>>,
    pub pi: Vec<Outcome>,
}

impl Quotient {
    pub fn index(&self, e: QuotientElement) -> usize {
        self.elements
            .iter()
            .position(|&x| x == e)
            .expect("all elements listed")
    }

    pub fn product(&self, a: QuotientElement, b: QuotientElement) -> QuotientElement {
        self.elements[self.mult[self.index(a)][self.index(b)]]
    }

    pub fn power(&self, a: QuotientElement, k: usize) -> QuotientElement {
        (0..k).fold(QuotientElement::ONE, |acc, _| self.product(acc, a))
    }
}

fn profiles_within(caps: NimProfile) -> Vec<NimProfile> {
    let mut out = Vec::new();
    for n1 in 0..=caps.n1 {
        for n2 in 0..=caps.n2 {
            for n3 in 0..=caps.n3 {
                out.push(NimProfile::new(n1, n2, n3));
            }
        }
    }
    out
}

/// Rebuilds the quotient: profiles are grouped by their outcomes in every
/// capped context, and the grouping must agree with [`phi`] exactly.
pub fn quotient_build() -> Result<Quotient> {
    let space = profiles_within(PROFILE_CAPS);
    let signature = |p: NimProfile| -> Vec<u64> {
        space
            .iter()
            .map(|&x| closed3_profile(p + x).mask())
            .collect()
    };
    let mut classes: FxHashMap<Vec<u64>, QuotientElement> = FxHashMap::default();
    let mut seen: FxHashMap<QuotientElement, NimProfile> = FxHashMap::default();
    for &p in &space {
        let e = phi(&p.position());
        let sig = signature(p);
        match (classes.get(&sig), seen.get(&e)) {
            (Some(&prev), _) if prev != e => {
                return Err(Error::Quotient(format!(
                    "profile {p:?} is inseparable from {prev} but reduces to {e}"
                )))
            }
            (None, Some(q)) => {
                return Err(Error::Quotient(format!(
                    "contexts separate {p:?} from {q:?} though both reduce to {e}"
                )))
            }
            (None, None) => {
                classes.insert(sig, e);
                seen.insert(e, p);
            }
            _ => {}
        }
    }
    let elements = QuotientElement::all();
    if classes.len() != elements.len() {
        return Err(Error::Quotient(format!(
            "found {} classes, expected {}",
            classes.len(),
            elements.len()
        )));
    }
    let mut mult = vec![vec![0; elements.len()]; elements.len()];
    for (i, &a) in elements.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate() {
            let sum = a.representative().profile() + b.representative().profile();
            let class = *classes
                .get(&signature(sum))
                .ok_or_else(|| Error::Quotient(format!("{a}·{b} lands outside every class")))?;
            if class != a * b {
                return Err(Error::Quotient(format!(
                    "{a}·{b} behaves as {class}, normal form says {}",
                    a * b
                )));
            }
            mult[i][j] = elements.iter().position(|&e| e == class).expect("listed");
        }
    }
    let pi = elements.iter().map(|&e| pi(e)).collect();
    Ok(Quotient { elements, mult, pi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::PlayerCount;

    fn o(t: &str) -> Outcome {
        Outcome::parse(t, PlayerCount::THREE).unwrap()
    }

    #[test]
    fn names_round_trip() {
        let names: Vec<String> = QuotientElement::all()
            .iter()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(names[..6], ["1", "a", "a^2", "b", "ab", "a^2b"]);
        assert_eq!(names[15], "c^2");
        for e in QuotientElement::all() {
            assert_eq!(QuotientElement::parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn examples() {
        use QuotientElement as Q;
        assert_eq!(pi(Q::ONE), o("OP"));
        assert_eq!(Q::B.pow(3), Q::Absorbing);
        assert_eq!(pi(Q::B.pow(3)), o("-"));
        assert_eq!(pi(Q::A.pow(2) * Q::B), o("PN"));
        assert_eq!(phi(&NimPosition::new([1, 2])), Q::A * Q::B);
        assert_eq!(phi(&NimPosition::new([3, 4])), Q::Absorbing);
        assert_eq!(phi(&NimPosition::new([])), Q::ONE);
        assert_eq!(pi(Q::B.pow(2)), o("O"));
        assert_eq!(pi(Q::B * Q::C), o("-"));
        assert_eq!(pi(Q::A), o("PN"));
    }

    #[test]
    fn build_has_sixteen_and_relations() {
        use QuotientElement as Q;
        let q = quotient_build().unwrap();
        assert_eq!(q.elements.len(), 16);
        assert_eq!(q.power(Q::A, 3), Q::ONE);
        let c2 = q.power(Q::C, 2);
        let rel = [
            q.power(Q::B, 4),
            q.power(Q::B, 3),
            q.product(q.power(Q::B, 2), Q::C),
            q.product(Q::B, c2),
            q.power(Q::C, 3),
            q.product(Q::A, c2),
            q.product(q.power(Q::A, 2), c2),
        ];
        assert!(rel.iter().all(|&r| r == c2));
    }
}
