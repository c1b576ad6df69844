use std::fmt;

use crate::error::{Error, Result};

/// Ordered partition `S_L ∪ S_R = {0, .., d-1}` of the torus variables into
/// those whose Fourier exponential multiplies from the left and those whose
/// exponential multiplies from the right. Indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KernelPartition {
    d: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl KernelPartition {
    pub fn new(d: usize, left: &[usize], right: &[usize]) -> Result<Self> {
        let mut seen = vec![false; d];
        for &l in left.iter().chain(right) {
            if l >= d {
                return Err(Error::InvalidPartition(format!(
                    "index {} out of range for d = {d}",
                    l + 1
                )));
            }
            if seen[l] {
                return Err(Error::InvalidPartition(format!(
                    "index {} appears twice",
                    l + 1
                )));
            }
            seen[l] = true;
        }
        if let Some(miss) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!(
                "index {} is not assigned",
                miss + 1
            )));
        }
        let mut left = left.to_vec();
        let mut right = right.to_vec();
        left.sort_unstable();
        right.sort_unstable();
        Ok(KernelPartition { d, left, right })
    }

    /// All variables on the left.
    pub fn left(d: usize) -> Self {
        KernelPartition {
            d,
            left: (0..d).collect(),
            right: Vec::new(),
        }
    }

    /// All variables on the right.
    pub fn right(d: usize) -> Self {
        KernelPartition {
            d,
            left: Vec::new(),
            right: (0..d).collect(),
        }
    }

    /// `left` on the left, the complement on the right.
    pub fn sandwich(d: usize, left: &[usize]) -> Result<Self> {
        let right: Vec<usize> = (0..d).filter(|l| !left.contains(l)).collect();
        KernelPartition::new(d, left, &right)
    }

    /// Parses `L`, `R`, `S12`-style labels (one digit per variable, left set
    /// first; only for `d = 2`) or `S<left digits>_<right digits>` (1-based).
    pub fn parse(label: &str, d: usize) -> Result<Self> {
        match label {
            "L" => return Ok(KernelPartition::left(d)),
            "R" => return Ok(KernelPartition::right(d)),
            _ => {}
        }
        let body = label.strip_prefix('S').ok_or_else(|| {
            Error::InvalidPartition(format!("unrecognised kernel label `{label}`"))
        })?;
        let digits = |s: &str| -> Result<Vec<usize>> {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&v| v >= 1)
                        .map(|v| v as usize - 1)
                        .ok_or_else(|| {
                            Error::InvalidPartition(format!("bad digit `{c}` in `{label}`"))
                        })
                })
                .collect()
        };
        let (left, right) = match body.split_once('_') {
            Some((l, r)) => (digits(l)?, digits(r)?),
            None if d == 2 && body.len() == 2 => {
                let all = digits(body)?;
                (vec![all[0]], vec![all[1]])
            }
            None => {
                return Err(Error::InvalidPartition(format!(
                    "ambiguous kernel label `{label}`"
                )))
            }
        };
        KernelPartition::new(d, &left, &right)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn left_set(&self) -> &[usize] {
        &self.left
    }

    pub fn right_set(&self) -> &[usize] {
        &self.right
    }

    pub fn is_right(&self) -> bool {
        self.left.is_empty()
    }

    pub fn is_left(&self) -> bool {
        self.right.is_empty()
    }

    /// Mask with `true` at left variables.
    pub fn left_mask(&self) -> Vec<bool> {
        (0..self.d).map(|l| self.left.contains(&l)).collect()
    }

    pub fn right_mask(&self) -> Vec<bool> {
        (0..self.d).map(|l| self.right.contains(&l)).collect()
    }

    /// Exchanges the roles of the two sets.
    pub fn swapped(&self) -> Self {
        KernelPartition {
            d: self.d,
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    /// Sign flip of a multi-index: keeps left coordinates, negates right ones.
    pub fn flip_index(&self, m: &[i64]) -> Vec<i64> {
        m.iter()
            .enumerate()
            .map(|(l, &v)| if self.left.contains(&l) { v } else { -v })
            .collect()
    }

    /// Reflection negating the left coordinates of a point.
    pub fn reflect(&self, theta: &[f64]) -> Vec<f64> {
        theta
            .iter()
            .enumerate()
            .map(|(l, &v)| if self.left.contains(&l) { -v } else { v })
            .collect()
    }

    /// The same reflection on a multi-index.
    pub fn reflect_index(&self, m: &[i64]) -> Vec<i64> {
        m.iter()
            .enumerate()
            .map(|(l, &v)| if self.left.contains(&l) { -v } else { v })
            .collect()
    }

    /// Short label: `L`, `R`, `S12` for two variables, otherwise `S<left>_<right>`.
    pub fn label(&self) -> String {
        if self.d > 0 && self.is_left() {
            return "L".into();
        }
        if self.is_right() {
            return "R".into();
        }
        let join = |v: &[usize]| v.iter().map(|l| (l + 1).to_string()).collect::<String>();
        if self.d == 2 {
            format!("S{}{}", join(&self.left), join(&self.right))
        } else {
            format!("S{}_{}", join(&self.left), join(&self.right))
        }
    }

    /// The four classes used in the two-level experiments: L, S12, S21, R
    /// (for `d = 1` only L and R).
    pub fn standard_classes(d: usize) -> Vec<Self> {
        let mut out = vec![KernelPartition::left(d)];
        if d == 2 {
            out.push(KernelPartition::new(2, &[0], &[1]).expect("valid"));
            out.push(KernelPartition::new(2, &[1], &[0]).expect("valid"));
        }
        out.push(KernelPartition::right(d));
        out
    }
}

impl fmt::Display for KernelPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(KernelPartition::new(2, &[0], &[0]).is_err());
        assert!(KernelPartition::new(2, &[0], &[]).is_err());
        assert!(KernelPartition::new(2, &[2], &[0]).is_err());
        assert!(KernelPartition::new(2, &[1], &[0]).is_ok());
    }

    #[test]
    fn labels_round_trip() {
        for k in KernelPartition::standard_classes(2) {
            assert_eq!(KernelPartition::parse(&k.label(), 2).unwrap(), k);
        }
        let k = KernelPartition::new(3, &[0, 2], &[1]).unwrap();
        assert_eq!(k.label(), "S13_2");
        assert_eq!(KernelPartition::parse("S13_2", 3).unwrap(), k);
        assert!(KernelPartition::parse("X", 2).is_err());
    }

    #[test]
    fn flips_and_reflections() {
        let k = KernelPartition::new(2, &[0], &[1]).unwrap();
        assert_eq!(k.flip_index(&[3, 4]), vec![3, -4]);
        assert_eq!(k.reflect_index(&[3, 4]), vec![-3, 4]);
        assert_eq!(k.reflect(&[0.5, 0.25]), vec![-0.5, 0.25]);
        assert_eq!(KernelPartition::right(2).flip_index(&[1, -2]), vec![-1, 2]);
        assert_eq!(KernelPartition::left(2).flip_index(&[1, -2]), vec![1, -2]);
    }
}
