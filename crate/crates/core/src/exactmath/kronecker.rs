use super::ExactError;

fn squarefree(mut n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

/// True for 1 and for discriminants of quadratic fields.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 1 {
        return true;
    }
    if d == 0 {
        return false;
    }
    let r = d.rem_euclid(4);
    if r == 1 {
        return squarefree(d.unsigned_abs());
    }
    if r == 0 {
        let m = d / 4;
        let mr = m.rem_euclid(4);
        return (mr == 2 || mr == 3) && squarefree(m.unsigned_abs());
    }
    false
}

/// Kronecker symbol (D|m) for m >= 1.
pub fn kronecker_symbol(d: i64, m: i64) -> Result<i8, ExactError> {
    let r = d.rem_euclid(4);
    if r == 2 || r == 3 {
        return Err(ExactError::NotFundamental(d));
    }
    if m < 1 {
        return Err(ExactError::Domain(format!("kronecker symbol needs m >= 1, got {m}")));
    }
    Ok(kron(d, m))
}

pub(crate) fn kron(d: i64, mut m: i64) -> i8 {
    let mut result: i8 = 1;
    while m % 2 == 0 {
        m /= 2;
        result *= match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => return 0,
        };
    }
    result * jacobi(d.rem_euclid(m), m)
}

/// Jacobi symbol (a|n) for odd n >= 1.
fn jacobi(mut a: i64, mut n: i64) -> i8 {
    let mut t: i8 = 1;
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(kronecker_symbol(1, 7).unwrap(), 1);
        assert_eq!(kronecker_symbol(-4, 2).unwrap(), 0);
        assert_eq!(kronecker_symbol(12, 11).unwrap(), 1);
        assert_eq!(kronecker_symbol(-3, 2).unwrap(), -1);
        assert_eq!(kronecker_symbol(5, 2).unwrap(), -1);
        assert_eq!(kronecker_symbol(-4, 13).unwrap(), 1);
        assert!(kronecker_symbol(3, 5).is_err());
    }

    #[test]
    fn fundamental() {
        let fund: Vec<i64> = (-20..=20).filter(|&d| is_fundamental_discriminant(d)).collect();
        assert_eq!(fund, vec![-20, -19, -15, -11, -8, -7, -4, -3, 1, 5, 8, 12, 13, 17]);
    }
}
