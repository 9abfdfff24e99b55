use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::poly::{self, chebyshev_c, minimal_polynomial_of_2cos, IntPoly};
use super::{Field, FieldDescriptor, FieldKind, Rational};

/// Element of `Q(theta)`: coefficients of `1, theta, ..., theta^(n-1)`,
/// always of length `n` (the degree of the field).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub coeffs: Vec<Rational>,
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_coeffs(&self.coeffs))
    }
}

/// The real field `Q(2cos(pi/L))`.
#[derive(Clone)]
pub struct NumberField {
    inner: Arc<Inner>,
}

struct Inner {
    /// `theta = 2cos(pi/conductor)`.
    conductor: u32,
    min_poly: IntPoly,
    embedding: f64,
    /// Rational interval isolating theta among the real roots of `min_poly`.
    isolating: (Rational, Rational),
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Q(2cos(pi/{})) [{}]",
            self.inner.conductor,
            self.inner.min_poly.render("θ")
        )
    }
}

impl NumberField {
    /// The field generated by `2cos(pi/conductor)`, `conductor >= 2`.
    pub fn real_cyclotomic(conductor: u32) -> Self {
        let min_poly = minimal_polynomial_of_2cos(conductor);
        let embedding = 2.0 * (std::f64::consts::PI / conductor as f64).cos();
        let isolating = isolate_top_root(conductor, &min_poly, embedding);
        NumberField {
            inner: Arc::new(Inner {
                conductor,
                min_poly,
                embedding,
                isolating,
            }),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.inner.conductor
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.inner.min_poly
    }

    pub fn degree(&self) -> usize {
        self.inner.min_poly.degree()
    }

    /// The generator `theta`.
    pub fn generator(&self) -> Scalar {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        if self.degree() == 1 {
            coeffs[0] = -Rational::from_int(self.inner.min_poly.coeffs[0]);
        } else {
            coeffs[1] = Rational::one();
        }
        Scalar { coeffs }
    }

    /// Reduce an arbitrary-length coefficient list modulo the minimal polynomial.
    pub fn reduce(&self, mut c: Vec<Rational>) -> Scalar {
        let n = self.degree();
        let mp = &self.inner.min_poly.coeffs;
        while c.len() > n {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - n;
            for (j, &m) in mp.iter().take(n).enumerate() {
                if m != 0 {
                    c[shift + j] = &c[shift + j] - &(&top * &Rational::from_int(m));
                }
            }
        }
        c.resize(n, Rational::zero());
        Scalar { coeffs: c }
    }

    fn eval_int_poly(&self, p: &IntPoly) -> Scalar {
        let theta = self.generator();
        let mut acc = self.zero();
        for &c in p.coeffs.iter().rev() {
            acc = self.mul(&acc, &theta);
            acc = self.add(&acc, &self.from_rational(&Rational::from_int(c)));
        }
        acc
    }

    fn interval_eval(&self, a: &Scalar, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        // theta > 0 on the isolating interval, so powers are monotone.
        let mut low = Rational::zero();
        let mut high = Rational::zero();
        let mut plo = Rational::one();
        let mut phi = Rational::one();
        for c in &a.coeffs {
            if !c.is_zero() {
                let x = c * &plo;
                let y = c * &phi;
                let (mn, mx) = if x <= y { (x, y) } else { (y, x) };
                low = &low + &mn;
                high = &high + &mx;
            }
            plo = &plo * lo;
            phi = &phi * hi;
        }
        (low, high)
    }
}

fn isolate_top_root(conductor: u32, min_poly: &IntPoly, embedding: f64) -> (Rational, Rational) {
    if min_poly.degree() == 1 {
        let r = -Rational::from_int(min_poly.coeffs[0]);
        return (r.clone(), r);
    }
    // Conjugates are 2cos(k*pi/L) with gcd(k, 2L) = 1; theta (k = 1) is the largest.
    let l = conductor as f64;
    let next = (2..conductor)
        .filter(|k| num_integer::Integer::gcd(k, &(2 * conductor)) == 1)
        .map(|k| 2.0 * (k as f64 * std::f64::consts::PI / l).cos())
        .fold(f64::NEG_INFINITY, f64::max);
    let lo = Rational::from_f64((embedding + next) / 2.0).expect("finite");
    let hi = Rational::from_int(2);
    let slo = min_poly.eval_rational(&lo).signum();
    let shi = min_poly.eval_rational(&hi).signum();
    assert!(
        slo != Ordering::Equal && shi != Ordering::Equal && slo != shi,
        "failed to isolate 2cos(pi/{conductor})"
    );
    (lo, hi)
}

fn render_coeffs(coeffs: &[Rational]) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = match k {
            0 => c.to_string(),
            _ => {
                let var = if k == 1 {
                    "θ".to_string()
                } else {
                    format!("θ^{k}")
                };
                if c.is_one() {
                    var
                } else if *c == Rational::from_int(-1) {
                    format!("-{var}")
                } else {
                    format!("{c}{var}")
                }
            }
        };
        parts.push(term);
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

impl Field for NumberField {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        Scalar {
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    fn one(&self) -> Scalar {
        self.from_rational(&Rational::one())
    }

    fn from_rational(&self, q: &Rational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = q.clone();
        s
    }

    fn is_zero(&self, a: &Scalar) -> bool {
        a.coeffs.iter().all(Rational::is_zero)
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Scalar {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Scalar {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    fn neg(&self, a: &Scalar) -> Scalar {
        Scalar {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let n = self.degree();
        if n == 1 {
            return Scalar {
                coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] = &prod[i + j] + &(x * y);
                }
            }
        }
        self.reduce(prod)
    }

    fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        // Extended Euclid: find s with s*a = 1 mod min_poly.
        let modulus: Vec<Rational> = self
            .inner
            .min_poly
            .coeffs
            .iter()
            .map(|&c| Rational::from_int(c))
            .collect();
        let mut r0 = modulus;
        let mut r1 = a.coeffs.clone();
        poly::trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly::divrem(&r0, &r1);
            let s2 = poly::poly_sub(&s0, &poly::poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since the modulus is irreducible.
        assert_eq!(r0.len(), 1, "minimal polynomial is not irreducible");
        let c = r0[0].recip()?;
        let s: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        Some(self.reduce(s))
    }

    fn as_rational(&self, a: &Scalar) -> Option<Rational> {
        if a.coeffs[1..].iter().all(Rational::is_zero) {
            Some(a.coeffs[0].clone())
        } else {
            None
        }
    }

    fn two_cos_pi_over(&self, m: u32) -> Option<Scalar> {
        match m {
            0 => None,
            1 => Some(self.from_rational(&Rational::from_int(-2))),
            2 => Some(self.zero()),
            3 => Some(self.one()),
            m if self.inner.conductor % m == 0 => {
                Some(self.eval_int_poly(&chebyshev_c(self.inner.conductor / m)))
            }
            _ => None,
        }
    }

    fn sign(&self, a: &Scalar) -> Ordering {
        if let Some(q) = self.as_rational(a) {
            return q.signum();
        }
        let (mut lo, mut hi) = self.inner.isolating.clone();
        let two = Rational::from_int(2);
        let mp = &self.inner.min_poly;
        let slo = mp.eval_rational(&lo).signum();
        loop {
            let (l, h) = self.interval_eval(a, &lo, &hi);
            if l.signum() == Ordering::Greater {
                return Ordering::Greater;
            }
            if h.signum() == Ordering::Less {
                return Ordering::Less;
            }
            let mid = &(&lo + &hi) / &two;
            let smid = mp.eval_rational(&mid).signum();
            if smid == Ordering::Equal {
                // theta is irrational here, so this cannot happen.
                unreachable!("rational root of an irreducible polynomial of degree > 1");
            }
            if smid == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    fn approx(&self, a: &Scalar) -> f64 {
        a.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * self.inner.embedding + c.to_f64())
    }

    fn render(&self, a: &Scalar) -> String {
        render_coeffs(&a.coeffs)
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            kind: FieldKind::NumberField,
            min_poly: self.inner.min_poly.coeffs.clone(),
            generator: format!("2cos(pi/{})", self.inner.conductor),
            embedding: Some(self.inner.embedding),
            rendered_min_poly: self.inner.min_poly.render("θ"),
        }
    }
}
