use super::{Field, FieldElement, GfError};

/// A dense univariate polynomial over a [`Field`].
///
/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial has an empty coefficient vector and its degree is
/// `None` (the -infinity sentinel, kept distinct from degree 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, FieldElement::ONE)
    }

    pub fn constant(field: &Field, c: FieldElement) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    /// x^j
    pub fn monomial(field: &Field, j: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; j + 1];
        coeffs[j] = FieldElement::ONE;
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds a polynomial from coefficients (lowest degree first),
    /// trimming trailing zeros into normalized form.
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn add(&self, other: &Poly) -> Result<Poly, GfError> {
        if self.field != other.field {
            return Err(GfError::FieldMismatch);
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::from_coeffs(&self.field, coeffs))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, GfError> {
        if self.field != other.field {
            return Err(GfError::FieldMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::from_coeffs(f, out))
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| self.field.mul(a, c))
            .collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// (x - a)^e, the building block of Riemann-Roch bases on the line.
    pub fn linear_power(field: &Field, a: FieldElement, e: u32) -> Poly {
        let linear = Poly::from_coeffs(field, vec![field.neg(a), FieldElement::ONE]);
        let mut out = Poly::one(field);
        for _ in 0..e {
            out = out.mul(&linear).expect("same field");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_x_plus_one_in_characteristic_two() {
        let f = Field::new(2, 1).unwrap();
        let xp1 = Poly::from_coeffs(&f, vec![f.one(), f.one()]);
        let sq = xp1.mul(&xp1).unwrap();
        // (x+1)^2 = x^2 + 1 over GF(2)
        assert_eq!(sq.coeffs(), &[f.one(), f.zero(), f.one()]);
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn multiplication_by_zero_annihilates() {
        let f = Field::new(3, 1).unwrap();
        let p = Poly::from_coeffs(&f, vec![f.element(2), f.one()]);
        let z = p.mul(&Poly::zero(&f)).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn product_of_distinct_linear_factors_mod_five() {
        let f = Field::new(5, 1).unwrap();
        let a = Poly::from_coeffs(&f, vec![f.neg(f.element(1)), f.one()]); // x - 1
        let b = Poly::from_coeffs(&f, vec![f.neg(f.element(2)), f.one()]); // x - 2
        let prod = a.mul(&b).unwrap();
        // x^2 - 3x + 2 = x^2 + 2x + 2 mod 5
        assert_eq!(prod.coeffs(), &[f.element(2), f.element(2), f.one()]);
    }

    #[test]
    fn degrees_add_for_nonzero_factors() {
        let f = Field::new(2, 2).unwrap();
        let a = Poly::linear_power(&f, f.element(2), 3);
        let b = Poly::linear_power(&f, f.element(3), 2);
        assert_eq!(
            a.mul(&b).unwrap().degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn field_mismatch_is_detected() {
        let f2 = Field::new(2, 1).unwrap();
        let f3 = Field::new(3, 1).unwrap();
        let a = Poly::one(&f2);
        let b = Poly::one(&f3);
        assert_eq!(a.mul(&b).unwrap_err(), GfError::FieldMismatch);
        assert_eq!(a.add(&b).unwrap_err(), GfError::FieldMismatch);
    }

    #[test]
    fn linear_power_examples() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(
            Poly::linear_power(&f2, f2.element(1), 0),
            Poly::one(&f2)
        );
        // (x - 0)^3 = x^3
        assert_eq!(
            Poly::linear_power(&f2, f2.zero(), 3),
            Poly::monomial(&f2, 3)
        );
        // (x - 1)^2 = x^2 + x + 1 over GF(3)
        let f3 = Field::new(3, 1).unwrap();
        let p = Poly::linear_power(&f3, f3.one(), 2);
        assert_eq!(p.coeffs(), &[f3.one(), f3.one(), f3.one()]);
        assert_eq!(p.eval(f3.one()), f3.zero());
    }

    #[test]
    fn linear_power_vanishes_at_its_root() {
        let f = Field::new(2, 3).unwrap();
        for a in f.elements() {
            for e in 1..4 {
                assert_eq!(Poly::linear_power(&f, a, e).eval(a), f.zero());
            }
        }
    }
}
