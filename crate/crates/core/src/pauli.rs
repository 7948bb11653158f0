//! Phase-tracked Pauli strings and graph-state stabilizer elements.
//!
//! A [`PauliString`] with supports `(x, z)` and phase `p` denotes
//! `i^p · σ_0 ⊗ σ_1 ⊗ …` where the letter on qubit `v` is `Y` when `v` is in
//! both supports, `X` or `Z` when it is in one, and `I` otherwise. With this
//! letter normal form every Hermitian string has `p ∈ {0, 2}`. Products use
//! `ZX = iY` (equivalently `XZ = -iY`).

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalLetter {
    I,
    X,
    Y,
    Z,
}

impl LocalLetter {
    pub fn as_char(self) -> char {
        match self {
            LocalLetter::I => 'I',
            LocalLetter::X => 'X',
            LocalLetter::Y => 'Y',
            LocalLetter::Z => 'Z',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PauliString {
    n: u8,
    x: VertexSet,
    z: VertexSet,
    phase: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        PauliString {
            n: n as u8,
            x: VertexSet::EMPTY,
            z: VertexSet::EMPTY,
            phase: 0,
        }
    }

    /// `i^phase` times the letter string with the given supports.
    pub fn new(n: usize, x: VertexSet, z: VertexSet, phase: u8) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::VertexCount { n, max: MAX_VERTICES });
        }
        let range = VertexSet::full(n);
        if let Some(v) = ((x | z) - range).iter().next() {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(PauliString {
            n: n as u8,
            x,
            z,
            phase: phase & 3,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn x(&self) -> VertexSet {
        self.x
    }

    pub fn z(&self) -> VertexSet {
        self.z
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// `+1` or `-1` for Hermitian strings; `None` for `±i`.
    pub fn sign(&self) -> Option<i32> {
        match self.phase {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn letter(&self, v: usize) -> LocalLetter {
        match (self.x.contains(v), self.z.contains(v)) {
            (false, false) => LocalLetter::I,
            (true, false) => LocalLetter::X,
            (true, true) => LocalLetter::Y,
            (false, true) => LocalLetter::Z,
        }
    }

    pub fn letters(&self) -> Vec<LocalLetter> {
        (0..self.n()).map(|v| self.letter(v)).collect()
    }

    /// Qubits carrying `X`, `Y` and `Z` letters respectively.
    pub fn letter_sets(&self) -> (VertexSet, VertexSet, VertexSet) {
        let y = self.x & self.z;
        (self.x - y, y, self.z - y)
    }

    pub fn weight(&self) -> usize {
        (self.x | self.z).len()
    }

    /// Exact operator product `self · rhs`.
    pub fn multiply(&self, rhs: &PauliString) -> Result<PauliString> {
        if self.n != rhs.n {
            return Err(Error::LengthMismatch {
                left: self.n(),
                right: rhs.n(),
            });
        }
        // letter σ(x,z) = i^{x·z} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{z1·x2}
        let x = self.x ^ rhs.x;
        let z = self.z ^ rhs.z;
        let phase = self.phase as u32
            + rhs.phase as u32
            + (self.x & self.z).len() as u32
            + (rhs.x & rhs.z).len() as u32
            + 2 * (self.z & rhs.x).len() as u32
            + 4 * MAX_VERTICES as u32
            - (x & z).len() as u32;
        Ok(PauliString {
            n: self.n,
            x,
            z,
            phase: (phase & 3) as u8,
        })
    }

    /// Renders as e.g. `-X1 Y2 Y3` (1-based qubits, identity letters omitted).
    /// The identity string renders as `+I`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Parses the [`render`](Self::render) format for an `n`-qubit string.
    pub fn parse(input: &str, n: usize) -> Result<PauliString> {
        let bad = |reason: &str| Error::PauliParse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim();
        let (phase, rest) = if let Some(r) = s.strip_prefix("+i") {
            (1, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else {
            return Err(bad("missing sign prefix"));
        };
        let rest = rest.trim();
        let mut x = VertexSet::EMPTY;
        let mut z = VertexSet::EMPTY;
        if rest != "I" {
            for tok in rest.split_whitespace() {
                let mut chars = tok.chars();
                let letter = chars.next().ok_or_else(|| bad("empty token"))?;
                let idx: usize = chars
                    .as_str()
                    .parse()
                    .map_err(|_| bad("qubit index is not a number"))?;
                if idx == 0 || idx > n {
                    return Err(bad("qubit index out of range"));
                }
                let v = idx - 1;
                if (x | z).contains(v) {
                    return Err(bad("repeated qubit"));
                }
                match letter {
                    'X' => x.insert(v),
                    'Z' => z.insert(v),
                    'Y' => {
                        x.insert(v);
                        z.insert(v);
                    }
                    _ => return Err(bad("unknown letter")),
                }
            }
        }
        PauliString::new(n, x, z, phase)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["+", "+i", "-", "-i"][self.phase as usize])?;
        if (self.x | self.z).is_empty() {
            return f.write_str("I");
        }
        let mut first = true;
        for v in (self.x | self.z).iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}{}", self.letter(v).as_char(), v + 1)?;
        }
        Ok(())
    }
}

/// `G_a = X_a Z_{N_a}`.
pub fn vertex_stabilizer(g: &Graph, a: usize) -> PauliString {
    assert!(a < g.n(), "vertex {a} out of range");
    PauliString {
        n: g.n() as u8,
        x: VertexSet::singleton(a),
        z: g.neighbors(a),
        phase: 0,
    }
}

/// `G_S`: product of vertex stabilizers over `s` in ascending vertex order.
pub fn stabilizer_element(g: &Graph, s: VertexSet) -> PauliString {
    s.iter().fold(PauliString::identity(g.n()), |acc, a| {
        acc.multiply(&vertex_stabilizer(g, a))
            .expect("same qubit count")
    })
}

/// Sign of `G_S` for every `S ⊆ V`, indexed by `S.bits()`.
///
/// Built incrementally: `G_S = G_{S \ {max S}} · G_{max S}`.
pub fn stabilizer_signs(g: &Graph) -> Vec<i8> {
    let n = g.n();
    let mut elems = vec![PauliString::identity(n); 1 << n];
    let mut signs = vec![1i8; 1 << n];
    for s in 1usize..(1 << n) {
        let top = usize::BITS as usize - 1 - s.leading_zeros() as usize;
        let prev = elems[s & !(1 << top)];
        let e = prev
            .multiply(&vertex_stabilizer(g, top))
            .expect("same qubit count");
        signs[s] = e.sign().expect("stabilizer elements are Hermitian") as i8;
        elems[s] = e;
    }
    signs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> PauliString {
        PauliString::parse(s, n).unwrap()
    }

    #[test]
    fn zx_is_iy() {
        let z = p("+Z1", 1);
        let x = p("+X1", 1);
        let prod = z.multiply(&x).unwrap();
        assert_eq!(prod, p("+iY1", 1));
        assert_eq!(x.multiply(&z).unwrap(), p("-iY1", 1));
        assert_eq!(prod.letter(0), LocalLetter::Y);
    }

    #[test]
    fn hermitian_squares_to_identity() {
        for s in ["+X1 Y2 Z3", "-Y1 Y2", "+I", "-Z2"] {
            let q = p(s, 3);
            assert_eq!(q.multiply(&q).unwrap(), PauliString::identity(3));
        }
    }

    #[test]
    fn ghz_term_product() {
        let a = p("+X1 Z2 Z3", 3);
        let b = p("+X2 X3", 3);
        assert_eq!(a.multiply(&b).unwrap(), p("-X1 Y2 Y3", 3));
    }

    #[test]
    fn star_stabilizers() {
        let g = Graph::star(3).unwrap();
        assert_eq!(vertex_stabilizer(&g, 0), p("+X1 Z2 Z3", 3));
        assert_eq!(vertex_stabilizer(&g, 1), p("+Z1 X2", 3));
        assert_eq!(stabilizer_element(&g, VertexSet::full(3)), p("-X1 Y2 Y3", 3));
        assert_eq!(stabilizer_element(&g, VertexSet::EMPTY), PauliString::identity(3));
        assert_eq!(
            stabilizer_element(&g, VertexSet::from_iter([1, 2])),
            p("+X2 X3", 3)
        );
        let e = Graph::empty(4).unwrap();
        assert_eq!(vertex_stabilizer(&e, 2), p("+X3", 4));
    }

    #[test]
    fn render_round_trip() {
        for s in ["+I", "-X1 Y2 Z3", "+iY4", "-iZ1 X4"] {
            assert_eq!(p(s, 4).render(), s);
        }
        assert!(PauliString::parse("X1", 2).is_err());
        assert!(PauliString::parse("+X3", 2).is_err());
        assert!(PauliString::parse("+X1 Z1", 2).is_err());
        assert!(PauliString::parse("+Q1", 2).is_err());
    }

    #[test]
    fn mismatched_lengths() {
        assert!(matches!(
            p("+X1", 1).multiply(&p("+X1", 2)),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn cached_signs_match_direct_products() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let signs = stabilizer_signs(&g);
        for s in VertexSet::full(5).subsets() {
            let e = stabilizer_element(&g, s);
            assert_eq!(e.sign().unwrap() as i8, signs[s.bits() as usize]);
        }
    }
}
