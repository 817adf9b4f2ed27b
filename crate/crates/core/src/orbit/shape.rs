use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Block sizes `p`, `q` of `K = GL_p x GL_q` and the Grassmannian
/// dimension `r`, with `0 <= r <= p + q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawShape")]
pub struct Shape {
    p: usize,
    q: usize,
    r: usize,
}

#[derive(Deserialize)]
struct RawShape {
    p: usize,
    q: usize,
    r: usize,
}

impl TryFrom<RawShape> for Shape {
    type Error = Error;
    fn try_from(raw: RawShape) -> Result<Self> {
        Shape::new(raw.p, raw.q, raw.r)
    }
}

impl Shape {
    pub fn new(p: usize, q: usize, r: usize) -> Result<Self> {
        if p == 0 || q == 0 || r > p + q {
            return Err(Error::InvalidShape { p, q, r });
        }
        Ok(Shape { p, q, r })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Ambient dimension `n = p + q`.
    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// `dim K/B_K = p(p-1)/2 + q(q-1)/2`, the dimension of the flag part.
    pub fn flag_dim(&self) -> usize {
        self.p * (self.p - 1) / 2 + self.q * (self.q - 1) / 2
    }

    /// Dimension of the whole double flag variety.
    pub fn ambient_dim(&self) -> usize {
        self.flag_dim() + self.r * (self.n() - self.r)
    }

    /// Every valid shape with `p + q <= max_n`, ordered by `(p, q, r)`.
    pub fn all_up_to(max_n: usize) -> Vec<Shape> {
        let mut out = Vec::new();
        for p in 1..max_n {
            for q in 1..=(max_n - p) {
                for r in 0..=(p + q) {
                    out.push(Shape { p, q, r });
                }
            }
        }
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, q={}, r={})", self.p, self.q, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_shapes() {
        assert!(Shape::new(0, 2, 1).is_err());
        assert!(Shape::new(2, 0, 1).is_err());
        assert!(Shape::new(2, 2, 5).is_err());
        assert!(Shape::new(2, 2, 4).is_ok());
        assert!(Shape::new(1, 1, 0).is_ok());
    }

    #[test]
    fn dimensions() {
        let s = Shape::new(5, 3, 4).unwrap();
        assert_eq!(s.flag_dim(), 13);
        assert_eq!(s.ambient_dim(), 13 + 16);
    }

    #[test]
    fn shape_list_is_complete() {
        // p + q = 2: (1,1) with r in 0..=2
        assert_eq!(Shape::all_up_to(2).len(), 3);
        // p + q = 3 adds (1,2), (2,1) with 4 values of r each
        assert_eq!(Shape::all_up_to(3).len(), 11);
    }

    #[test]
    fn json_validates() {
        assert!(serde_json::from_str::<Shape>(r#"{"p":2,"q":1,"r":1}"#).is_ok());
        assert!(serde_json::from_str::<Shape>(r#"{"p":0,"q":1,"r":1}"#).is_err());
    }
}
