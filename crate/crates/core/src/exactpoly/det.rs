use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{PolyError, Polynomial};

/// Matrices up to this size are expanded by cofactors; larger ones go through
/// fraction-free elimination.
const COFACTOR_LIMIT: usize = 4;

fn check_square<T>(matrix: &[Vec<T>]) -> Result<usize, PolyError> {
    let n = matrix.len();
    for (row, r) in matrix.iter().enumerate() {
        if r.len() != n {
            return Err(PolyError::NonSquare { row, len: r.len(), expected: n });
        }
    }
    Ok(n)
}

/// Exact determinant over `Q[t]`. The empty matrix has determinant 1.
pub fn poly_det(matrix: &[Vec<Polynomial>]) -> Result<Polynomial, PolyError> {
    let n = check_square(matrix)?;
    if n <= COFACTOR_LIMIT {
        let cols: Vec<usize> = (0..n).collect();
        Ok(cofactor(matrix, 0, &cols))
    } else {
        bareiss(matrix.to_vec())
    }
}

pub fn cofactor_det(matrix: &[Vec<Polynomial>]) -> Result<Polynomial, PolyError> {
    let n = check_square(matrix)?;
    let cols: Vec<usize> = (0..n).collect();
    Ok(cofactor(matrix, 0, &cols))
}

pub fn bareiss_det(matrix: &[Vec<Polynomial>]) -> Result<Polynomial, PolyError> {
    check_square(matrix)?;
    bareiss(matrix.to_vec())
}

fn cofactor(m: &[Vec<Polynomial>], row: usize, cols: &[usize]) -> Polynomial {
    if cols.is_empty() {
        return Polynomial::one();
    }
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = Polynomial::zero();
    let mut rest = Vec::with_capacity(cols.len() - 1);
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(cols.iter().copied().filter(|&x| x != c));
        let term = &m[row][c] * &cofactor(m, row + 1, &rest);
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn bareiss(mut m: Vec<Vec<Polynomial>>) -> Result<Polynomial, PolyError> {
    let n = m.len();
    let mut sign_flip = false;
    let mut prev = Polynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(Polynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { Polynomial::one() } else { m[n - 1][n - 1].clone() };
    Ok(if sign_flip { -det } else { det })
}

/// Exact integer determinant by Bareiss elimination.
pub fn int_det(matrix: &[Vec<BigInt>]) -> Result<BigInt, PolyError> {
    let n = check_square(matrix)?;
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { m[n - 1][n - 1].clone() };
    Ok(if negate { -det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{binomial_poly, rat};

    fn t() -> Polynomial {
        Polynomial::t()
    }

    #[test]
    fn identity_and_empty() {
        let id: Vec<Vec<Polynomial>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { Polynomial::one() } else { Polynomial::zero() }).collect())
            .collect();
        assert_eq!(poly_det(&id).unwrap(), Polynomial::one());
        assert_eq!(poly_det(&[]).unwrap(), Polynomial::one());
    }

    #[test]
    fn two_by_two() {
        let m = vec![vec![t(), Polynomial::one()], vec![Polynomial::one(), t()]];
        assert_eq!(poly_det(&m).unwrap(), Polynomial::from_integers([-1, 0, 1]));
    }

    #[test]
    fn kreweras_matrix_of_four_cell_zigzag() {
        let m = vec![vec![binomial_poly(1, 2), binomial_poly(2, 4)], vec![Polynomial::one(), binomial_poly(1, 2)]];
        let expected = Polynomial::new(vec![rat(0, 1), rat(2, 24), rat(7, 24), rat(10, 24), rat(5, 24)]);
        assert_eq!(poly_det(&m).unwrap(), expected);
    }

    #[test]
    fn non_square_rejected() {
        let m = vec![vec![t(), t()], vec![t()]];
        assert!(matches!(poly_det(&m), Err(PolyError::NonSquare { row: 1, .. })));
    }

    #[test]
    fn bareiss_agrees_with_cofactors_with_zero_pivot() {
        let m = vec![
            vec![Polynomial::zero(), t(), Polynomial::one()],
            vec![Polynomial::linear(2), Polynomial::zero(), t()],
            vec![Polynomial::one(), Polynomial::linear(-1), binomial_poly(0, 2)],
        ];
        assert_eq!(bareiss_det(&m).unwrap(), cofactor_det(&m).unwrap());
    }

    #[test]
    fn integer_determinant() {
        let m = vec![
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(3), BigInt::from(1), BigInt::from(4)],
            vec![BigInt::from(1), BigInt::from(5), BigInt::from(9)],
        ];
        // 0*(9-20) - 2*(27-4) + 1*(15-1)
        assert_eq!(int_det(&m).unwrap(), BigInt::from(-32));
    }
}
