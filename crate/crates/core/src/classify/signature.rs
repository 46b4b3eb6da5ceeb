use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::Sign;

use super::ClassifyError;

/// One entry of a signature sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignatureEntry {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
    /// Every examined minor of this order vanished.
    #[serde(rename = "indeterminate")]
    Indeterminate,
}

impl SignatureEntry {
    pub fn from_sign(sign: Sign) -> Self {
        match sign {
            Sign::Positive => SignatureEntry::Plus,
            Sign::Negative => SignatureEntry::Minus,
            Sign::Zero => SignatureEntry::Indeterminate,
        }
    }

    pub fn as_i8(self) -> Option<i8> {
        match self {
            SignatureEntry::Plus => Some(1),
            SignatureEntry::Minus => Some(-1),
            SignatureEntry::Indeterminate => None,
        }
    }

    fn from_i8(v: i8) -> Self {
        if v > 0 {
            SignatureEntry::Plus
        } else {
            SignatureEntry::Minus
        }
    }
}

/// Per-order minor signs `(eps_1, ..., eps_n)`. `eps_0 = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(Vec<SignatureEntry>);

impl Signature {
    pub fn new(entries: Vec<SignatureEntry>) -> Self {
        Signature(entries)
    }

    /// Builds a total signature from `+1` / `-1` values. Panics on any other
    /// value.
    pub fn from_signs(signs: &[i8]) -> Self {
        assert!(signs.iter().all(|s| *s == 1 || *s == -1), "signature entries must be +1 or -1");
        Signature(signs.iter().map(|&s| SignatureEntry::from_i8(s)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[SignatureEntry] {
        &self.0
    }

    /// `eps_m`, 1-based; `eps_0` is `+1`.
    pub fn get(&self, m: usize) -> SignatureEntry {
        if m == 0 {
            SignatureEntry::Plus
        } else {
            self.0[m - 1]
        }
    }

    pub fn is_total(&self) -> bool {
        !self.0.contains(&SignatureEntry::Indeterminate)
    }

    fn total_values(&self) -> Result<Vec<i8>, ClassifyError> {
        self.0
            .iter()
            .map(|e| e.as_i8().ok_or(ClassifyError::IndeterminateSignature))
            .collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            f.write_str(match e {
                SignatureEntry::Plus => "+1",
                SignatureEntry::Minus => "-1",
                SignatureEntry::Indeterminate => "?",
            })?;
        }
        write!(f, ")")
    }
}

/// Signature of `P_n A` from that of `A`: `eps'_m = (-1)^(m(m-1)/2) eps_m`.
pub fn signature_of_pna(sig: &Signature) -> Result<Signature, ClassifyError> {
    let values = sig.total_values()?;
    let out = values
        .iter()
        .enumerate()
        .map(|(k, &e)| {
            let m = k + 1;
            let factor = if (m * (m - 1) / 2) % 2 == 0 { 1 } else { -1 };
            SignatureEntry::from_i8(factor * e)
        })
        .collect();
    Ok(Signature(out))
}

/// Signature of `S_n A^{-1} S_n` for nonsingular sign-regular `A`:
/// `eps_i = eps_n * eps_{n-i}` with `eps_0 = 1`.
pub fn signature_of_conjugated_inverse(sig: &Signature) -> Result<Signature, ClassifyError> {
    let values = sig.total_values()?;
    let n = values.len();
    let eps = |m: usize| if m == 0 { 1 } else { values[m - 1] };
    Ok(Signature((1..=n).map(|i| SignatureEntry::from_i8(eps(n) * eps(n - i))).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pna_factors() {
        let f = |s: &[i8]| signature_of_pna(&Signature::from_signs(s)).unwrap();
        assert_eq!(f(&[-1, 1, -1]), Signature::from_signs(&[-1, -1, 1]));
        assert_eq!(f(&[-1, 1, -1, 1, -1, -1]), Signature::from_signs(&[-1, -1, 1, 1, -1, 1]));
        assert_eq!(f(&[1, 1]), Signature::from_signs(&[1, -1]));
    }

    #[test]
    fn conjugated_inverse_formula() {
        let f = |s: &[i8]| signature_of_conjugated_inverse(&Signature::from_signs(s)).unwrap();
        assert_eq!(f(&[-1, 1, -1]), Signature::from_signs(&[-1, 1, -1]));
        assert_eq!(f(&[1, 1, 1, 1]), Signature::from_signs(&[1, 1, 1, 1]));
        assert_eq!(f(&[-1, -1, 1]), Signature::from_signs(&[-1, -1, 1]));
    }

    #[test]
    fn indeterminate_entries_are_rejected() {
        let sig = Signature::new(vec![SignatureEntry::Plus, SignatureEntry::Indeterminate]);
        assert!(!sig.is_total());
        assert_eq!(signature_of_pna(&sig), Err(ClassifyError::IndeterminateSignature));
        assert_eq!(signature_of_conjugated_inverse(&sig), Err(ClassifyError::IndeterminateSignature));
    }

    #[test]
    fn display_and_json() {
        let sig = Signature::from_signs(&[-1, 1]);
        assert_eq!(sig.to_string(), "(-1,+1)");
        assert_eq!(serde_json::to_string(&sig).unwrap(), r#"["-1","+1"]"#);
    }
}
