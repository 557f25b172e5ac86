use crate::error::{Error, Result};
use crate::ideals::{Certainty, Ideal, IdealTags};
use crate::polyring::{GradedRing, Polynomial};

fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let k = m.len();
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(m[0][0].ring());
    for j in 0..k {
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = m[0][j].mul(&determinant(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Ideal of `size`-minors of the `rows x cols` matrix whose entry `(i, j)` is
/// variable `i * cols + j`.
pub fn generic_matrix_minors(ring: &GradedRing, rows: usize, cols: usize, size: usize) -> Result<Ideal> {
    if ring.nvars() != rows * cols {
        return Err(Error::InvalidArgument(format!(
            "a {rows}x{cols} generic matrix needs {} variables, ring has {}",
            rows * cols,
            ring.nvars()
        )));
    }
    if size == 0 || size > rows.min(cols) {
        return Err(Error::InvalidArgument(format!("no {size}-minors of a {rows}x{cols} matrix")));
    }
    let mut gens = Vec::new();
    for rs in choose(rows, size) {
        for cs in choose(cols, size) {
            let m: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| Polynomial::var(ring, i * cols + j)).collect())
                .collect();
            gens.push(determinant(&m));
        }
    }
    let mut ideal = Ideal::new(ring, gens)?;
    ideal.tags_mut().provenance = format!("{size}-minors of a generic {rows}x{cols} matrix");
    Ok(ideal)
}

/// The Segre scroll P^1 x P^n in P^{2n+1}: 2-minors of a generic `2 x (n+1)`
/// matrix. Smooth, so the LCI tag is asserted.
pub fn scroll_ideal(n: usize) -> Result<Ideal> {
    if n == 0 {
        return Err(Error::InvalidArgument("scroll needs n >= 1".into()));
    }
    let ring = GradedRing::projective(2 * (n + 1));
    let ideal = generic_matrix_minors(&ring, 2, n + 1, 2)?;
    Ok(ideal.with_tags(IdealTags {
        radical: Certainty::Asserted,
        lci: Certainty::Asserted,
        unmixed: Certainty::Asserted,
        complete_intersection: n == 1,
        provenance: format!("scroll P1 x P{n}"),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scroll_one_is_a_quadric() {
        let s = scroll_ideal(1).unwrap();
        assert_eq!(s.generators().len(), 1);
        let q = Ideal::parse(s.ring(), "x0*x3 - x1*x2").unwrap();
        assert!(s.equals(&q).unwrap());
    }

    #[test]
    fn scroll_two() {
        let s = scroll_ideal(2).unwrap();
        assert_eq!(s.mu().unwrap(), 3);
        assert_eq!(s.codimension().unwrap(), 2);
    }

    #[test]
    fn size_checks() {
        let r = GradedRing::projective(6);
        assert!(generic_matrix_minors(&r, 2, 2, 2).is_err());
        assert!(generic_matrix_minors(&r, 2, 3, 3).is_err());
        let all = generic_matrix_minors(&r, 2, 3, 1).unwrap();
        assert_eq!(all.mu().unwrap(), 6);
    }
}
