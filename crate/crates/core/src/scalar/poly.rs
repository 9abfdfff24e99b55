//! Dense univariate polynomials (coefficients low degree first).

use num_integer::Integer;

use super::Rational;

/// Integer polynomial, `coeffs[k]` is the coefficient of `x^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    pub coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        IntPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Rational::from_int(*c);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c as f64)
    }

    fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Exact division by a monic divisor; `None` if the remainder is nonzero.
    fn div_exact_monic(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree();
        assert_eq!(*divisor.coeffs.last().unwrap(), 1, "divisor must be monic");
        if self.degree() < dd {
            return if self.coeffs.iter().all(|&c| c == 0) {
                Some(IntPoly::new(vec![0]))
            } else {
                None
            };
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            quot[k] = c;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
        if rem.iter().all(|&c| c == 0) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Rendering such as `x^2 - x - 1`.
    pub fn render(&self, var: &str) -> String {
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match (k, mag) {
                (0, m) => m.to_string(),
                (1, 1) => var.to_string(),
                (1, m) => format!("{m}{var}"),
                (k, 1) => format!("{var}^{k}"),
                (k, m) => format!("{m}{var}^{k}"),
            };
            let sign = if c < 0 { "-" } else { "+" };
            if terms.is_empty() {
                terms.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                terms.push(format!("{sign} {body}"));
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" ")
        }
    }
}

/// The cyclotomic polynomial of order `n >= 1`.
pub fn cyclotomic(n: u32) -> IntPoly {
    assert!(n >= 1);
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut p = IntPoly::new(num);
    for d in 1..n {
        if n % d == 0 {
            p = p
                .div_exact_monic(&cyclotomic(d))
                .expect("cyclotomic factors divide x^n - 1");
        }
    }
    p
}

/// `C_k` with `C_k(z + 1/z) = z^k + z^-k`: `C_0 = 2`, `C_1 = x`,
/// `C_{k+1} = x C_k - C_{k-1}`.
pub fn chebyshev_c(k: u32) -> IntPoly {
    let mut prev = IntPoly::new(vec![2]);
    if k == 0 {
        return prev;
    }
    let mut cur = IntPoly::new(vec![0, 1]);
    let x = IntPoly::new(vec![0, 1]);
    for _ in 1..k {
        let next = x.mul(&cur);
        let mut coeffs = next.coeffs.clone();
        for (i, c) in prev.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        prev = cur;
        cur = IntPoly::new(coeffs);
    }
    cur
}

/// Monic minimal polynomial of `2cos(pi/m)` over the rationals, for `m >= 2`.
///
/// `2cos(pi/m) = z + 1/z` for a primitive `2m`-th root of unity `z`; the
/// palindromic cyclotomic polynomial of order `2m` is rewritten in `x = z + 1/z`.
pub fn minimal_polynomial_of_2cos(m: u32) -> IntPoly {
    assert!(m >= 2, "m must be at least 2");
    let phi = cyclotomic(2 * m);
    let half = phi.degree() / 2;
    // z^-half * phi(z) = c_half + sum_{j>=1} c_{half+j} (z^j + z^-j)
    let mut out = vec![0i64; half + 1];
    out[0] += phi.coeffs[half];
    for j in 1..=half {
        let c = phi.coeffs[half + j];
        if c == 0 {
            continue;
        }
        for (k, t) in chebyshev_c(j as u32).coeffs.iter().enumerate() {
            out[k] += c * t;
        }
    }
    IntPoly::new(out)
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

// Rational polynomial helpers used by number-field inversion.

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Polynomial division with remainder; `b` must be nonzero and trimmed.
pub(crate) fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].recip().expect("nonzero leading coefficient");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * bj);
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    (quot, rem)
}

pub(crate) fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    let mut out: Vec<Rational> = (0..n)
        .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
        .collect();
    trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small_orders() {
        assert_eq!(cyclotomic(1).coeffs, vec![-1, 1]);
        assert_eq!(cyclotomic(4).coeffs, vec![1, 0, 1]);
        assert_eq!(cyclotomic(6).coeffs, vec![1, -1, 1]);
        assert_eq!(cyclotomic(10).coeffs, vec![1, -1, 1, -1, 1]);
    }

    #[test]
    fn chebyshev_identity_numerically() {
        let t = 0.37f64;
        for k in 0..8 {
            let lhs = chebyshev_c(k).eval_f64(2.0 * t.cos());
            assert!((lhs - 2.0 * (k as f64 * t).cos()).abs() < 1e-9);
        }
    }

    #[test]
    fn render_poly() {
        assert_eq!(IntPoly::new(vec![-1, -1, 1]).render("x"), "x^2 - x - 1");
        assert_eq!(IntPoly::new(vec![0, 1]).render("x"), "x");
    }
}
