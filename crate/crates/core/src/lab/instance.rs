use crate::element::SElement;
use crate::scalar::{Backend, Modulus, ScalarValue};

use super::LabError;

/// GF(p) x GF(p) with precomputed operation tables.
///
/// Elements are enumerated row-major over `(x, y)` with both residues
/// ascending, so `(x, y)` sits at index `x * p + y`. Every table entry is
/// produced by the pair-model operations themselves and looked up back into
/// the enumeration, which verifies closure during construction.
#[derive(Debug, Clone)]
pub struct FiniteInstance {
    modulus: Modulus,
    elements: Vec<SElement>,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
}

/// The indices `α` for which the class `{s : 0*s = s*0 = α}` is nonempty,
/// in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSet {
    pub indices: Vec<SElement>,
}

impl LambdaSet {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// The indices as coefficients, if they are all scalars.
    pub fn scalars(&self) -> Option<Vec<ScalarValue>> {
        self.indices
            .iter()
            .map(|s| s.extract_scalar().ok())
            .collect()
    }
}

impl FiniteInstance {
    pub fn new(p: u64) -> Result<Self, LabError> {
        let modulus = Modulus::new(p).map_err(|e| LabError::Construction(e.to_string()))?;
        let backend = Backend::PrimeField(modulus);
        let residues = backend.elements().expect("prime fields are finite");
        let elements: Vec<SElement> = residues
            .iter()
            .flat_map(|x| residues.iter().map(move |y| (x.clone(), y.clone())))
            .map(|(x, y)| SElement::new(x, y))
            .collect::<Result<_, _>>()?;

        let mut inst = FiniteInstance {
            modulus,
            elements,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
        };
        let n = inst.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for s in &inst.elements {
            for t in &inst.elements {
                add.push(inst.locate(&s.checked_add(t)?)?);
                mul.push(inst.locate(&s.checked_mul(t)?)?);
            }
        }
        let neg = inst
            .elements
            .iter()
            .map(|s| inst.locate(&-s))
            .collect::<Result<_, _>>()?;
        inst.add = add;
        inst.mul = mul;
        inst.neg = neg;
        Ok(inst)
    }

    fn locate(&self, s: &SElement) -> Result<usize, LabError> {
        self.index_of(s)
            .ok_or_else(|| LabError::Construction(format!("{s} falls outside the instance")))
    }

    pub fn modulus(&self) -> u32 {
        self.modulus.get()
    }

    pub fn backend(&self) -> Backend {
        Backend::PrimeField(self.modulus)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SElement {
        &self.elements[i]
    }

    pub fn index_of(&self, s: &SElement) -> Option<usize> {
        if s.backend() != self.backend() {
            return None;
        }
        let x = s.x().as_residue()?.value() as usize;
        let y = s.y().as_residue()?.value() as usize;
        Some(x * self.modulus() as usize + y)
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add[i * self.len() + j]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.len() + j]
    }

    pub fn neg(&self, i: usize) -> usize {
        self.neg[i]
    }

    pub fn sub(&self, i: usize, j: usize) -> usize {
        self.add(i, self.neg(j))
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.modulus() as usize
    }

    /// Index of the embedded scalar `(k, 0)`.
    pub fn scalar(&self, k: u32) -> usize {
        k as usize * self.modulus() as usize
    }

    /// Index of the class of `s`, if `0*s` and `s*0` agree.
    pub fn class_of(&self, s: usize) -> Option<usize> {
        let left = self.mul(self.zero(), s);
        (left == self.mul(s, self.zero())).then_some(left)
    }

    pub fn in_class(&self, s: usize, alpha: usize) -> bool {
        self.class_of(s) == Some(alpha)
    }

    /// Scalars by their defining property `0*s = s*0 = 0`.
    pub fn scalars(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&s| self.in_class(s, self.zero()))
            .collect()
    }

    pub fn is_scalar(&self, s: usize) -> bool {
        self.in_class(s, self.zero())
    }

    pub fn lambda(&self) -> LambdaSet {
        let mut seen = vec![false; self.len()];
        for s in 0..self.len() {
            if let Some(alpha) = self.class_of(s) {
                seen[alpha] = true;
            }
        }
        LambdaSet {
            indices: seen
                .iter()
                .enumerate()
                .filter(|(_, &hit)| hit)
                .map(|(i, _)| self.elements[i].clone())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_row_major() {
        let inst = FiniteInstance::new(3).unwrap();
        assert_eq!(inst.len(), 9);
        let rendered: Vec<String> = inst.elements().iter().map(|s| s.to_string()).collect();
        assert_eq!(rendered[..4], ["(0, 0)", "(0, 1)", "(0, 2)", "(1, 0)"]);
        for (i, s) in inst.elements().iter().enumerate() {
            assert_eq!(inst.index_of(s), Some(i));
        }
        assert_eq!(inst.element(inst.one()), &SElement::one(inst.backend()));
    }

    #[test]
    fn tables_agree_with_operations() {
        let inst = FiniteInstance::new(5).unwrap();
        for i in 0..inst.len() {
            for j in 0..inst.len() {
                let (s, t) = (inst.element(i), inst.element(j));
                assert_eq!(inst.element(inst.mul(i, j)), &s.checked_mul(t).unwrap());
                assert_eq!(inst.element(inst.sub(i, j)), &s.checked_sub(t).unwrap());
            }
        }
    }

    #[test]
    fn lambda_is_every_scalar() {
        let inst = FiniteInstance::new(5).unwrap();
        let lambda = inst.lambda();
        assert_eq!(lambda.len(), 5);
        let b = inst.backend();
        assert_eq!(lambda.scalars().unwrap(), b.elements().unwrap());
        assert_eq!(
            inst.scalars(),
            (0..5).map(|k| inst.scalar(k)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn rejects_composite() {
        assert!(matches!(
            FiniteInstance::new(4),
            Err(LabError::Construction(_))
        ));
        assert!(matches!(
            FiniteInstance::new(1),
            Err(LabError::Construction(_))
        ));
    }
}
