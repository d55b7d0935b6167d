//! The genus catalog.
//!
//! A Hirzebruch genus is determined by a power series Q(x) with constant
//! term 1, or equivalently by R(x) = x/Q(x). The catalog hands out the
//! normalization S(z) = R(z)/z, which has constant term exactly 1; R always
//! has a simple zero at 0, so S removes that singularity from the data model.
//! Q = 1/S and R = z*S whenever a consumer needs them.

use std::fmt;
use std::fs;
use std::path::Path;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{parse_rational, rat, Rational};
use crate::series::Series;

type QSeries = Series<Rational>;

/// A named genus that can produce its S-series to any requested order.
#[derive(Clone, Debug, PartialEq)]
pub enum Genus {
    /// Todd genus, S(z) = (1 - e^{-z})/z.
    Todd,
    /// A-hat genus, S(z) = 2 sinh(z/2)/z.
    Ahat,
    /// Signature, S(z) = tanh(z)/z.
    Signature,
    /// Euler characteristic, S(z) = 1/(1+z).
    Euler,
    /// Generalized Todd genus T_y at a rational evaluation point y.
    /// y = -1 never occurs here: construction normalizes it to `Euler`.
    Ty(Rational),
    /// Krichever's A_k family, S(z) = (e^{kz} - 1)/(k z e^z), k >= 1.
    Ak(u32),
    /// User-supplied genus: the coefficients q_1, q_2, ... of
    /// Q(x) = 1 + q_1 x + q_2 x^2 + ...
    Custom { name: String, q: Vec<Rational> },
}

impl Genus {
    /// T_y genus at a rational y. The y = -1 limit of the defining series is
    /// x/(1+x), so that case is canonically the Euler characteristic.
    pub fn ty(y: Rational) -> Genus {
        if y == rat(-1) {
            Genus::Euler
        } else {
            Genus::Ty(y)
        }
    }

    /// A_k genus, k >= 1.
    pub fn ak(k: u32) -> Genus {
        assert!(k >= 1, "A_k needs k >= 1");
        Genus::Ak(k)
    }

    /// Custom genus from explicit Q-coefficients (q_1 first).
    pub fn custom(name: impl Into<String>, q: Vec<Rational>) -> Genus {
        Genus::Custom {
            name: name.into(),
            q,
        }
    }

    /// Load a custom genus from a file.
    ///
    /// Line-oriented format: `#` starts a comment, blank lines are skipped,
    /// the first content line must be `name: <string>`, and every following
    /// line holds one rational Q-coefficient (q_1 first).
    pub fn from_file(path: impl AsRef<Path>) -> Result<Genus, Error> {
        let text = fs::read_to_string(path.as_ref()).map_err(|e| Error::GenusFile {
            line: 0,
            message: e.to_string(),
        })?;
        Self::from_str_contents(&text)
    }

    /// Parse the custom genus file format from a string.
    pub fn from_str_contents(text: &str) -> Result<Genus, Error> {
        let mut name: Option<String> = None;
        let mut q = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if name.is_none() {
                let value = line.strip_prefix("name:").ok_or(Error::MissingGenusName)?;
                let value = value.trim();
                if value.is_empty() {
                    return Err(Error::MissingGenusName);
                }
                name = Some(value.to_string());
                continue;
            }
            let coeff = parse_rational(line).map_err(|e| Error::GenusFile {
                line: idx + 1,
                message: e.to_string(),
            })?;
            q.push(coeff);
        }
        let name = name.ok_or(Error::MissingGenusName)?;
        Ok(Genus::Custom { name, q })
    }

    /// The S-series S(z) = R(z)/z of this genus, expanded exactly to the
    /// requested truncation order. The constant term is always 1.
    pub fn s_series(&self, order: usize) -> Result<QSeries, Error> {
        match self {
            // (1 - e^{-z})/z: coefficient of z^i is (-1)^i/(i+1)!
            Genus::Todd => {
                let mut coeffs = Vec::with_capacity(order + 1);
                let mut c = Rational::one();
                for i in 0..=order {
                    c /= rat(i as i64 + 1);
                    coeffs.push(if i % 2 == 0 { c.clone() } else { -c.clone() });
                }
                Ok(QSeries::from_coeffs(coeffs))
            }
            // 2 sinh(z/2)/z: coefficient of z^{2k} is 1/(4^k (2k+1)!)
            Genus::Ahat => {
                let mut coeffs = vec![Rational::zero(); order + 1];
                let mut c = Rational::one();
                coeffs[0] = c.clone();
                let mut k = 1;
                while 2 * k <= order {
                    let two_k = 2 * k as i64;
                    c /= rat(4) * rat(two_k) * rat(two_k + 1);
                    coeffs[2 * k] = c.clone();
                    k += 1;
                }
                Ok(QSeries::from_coeffs(coeffs))
            }
            // tanh(z)/z = (sinh(z)/z) / cosh(z)
            Genus::Signature => {
                let mut sinh_over_z = vec![Rational::zero(); order + 1];
                let mut cosh = vec![Rational::zero(); order + 1];
                let mut fact = Rational::one();
                for i in 0..=order {
                    if i > 0 {
                        fact /= rat(i as i64);
                    }
                    if i % 2 == 0 {
                        cosh[i] = fact.clone();
                        // z^i / (i+1)! term of sinh(z)/z
                        sinh_over_z[i] = &fact / rat(i as i64 + 1);
                    }
                }
                let num = QSeries::from_coeffs(sinh_over_z);
                let den = QSeries::from_coeffs(cosh);
                Ok(num.mul(&den.recip()?))
            }
            // 1/(1+z)
            Genus::Euler => {
                let coeffs = (0..=order)
                    .map(|i| if i % 2 == 0 { rat(1) } else { rat(-1) })
                    .collect();
                Ok(QSeries::from_coeffs(coeffs))
            }
            // (e^{uz} - 1)/(z (e^{uz} + y)) with u = y + 1 != 0
            Genus::Ty(y) => {
                let u = y + rat(1);
                let num = exp_minus_one_over_z(&u, order);
                let mut den = exp_u_series(&u, order);
                den[0] = &den[0] + y; // e^{uz} + y, constant term u
                let den = QSeries::from_coeffs(den);
                Ok(num.mul(&den.recip()?))
            }
            // (e^{kz} - 1)/(k z e^z) = ((e^{kz}-1)/(kz)) * e^{-z}
            Genus::Ak(k) => {
                let kq = rat(*k as i64);
                let num = exp_minus_one_over_z(&kq, order).scale(&(Rational::one() / &kq));
                let exp_neg = QSeries::from_coeffs(exp_u_series(&rat(-1), order));
                Ok(num.mul(&exp_neg))
            }
            // S = 1/Q; the supplied prefix of Q must cover the order
            Genus::Custom { name, q } => {
                if q.len() < order {
                    return Err(Error::CustomOrderTooShort {
                        name: name.clone(),
                        supplied: q.len(),
                        requested: order,
                    });
                }
                let mut coeffs = Vec::with_capacity(order + 1);
                coeffs.push(Rational::one());
                coeffs.extend(q.iter().take(order).cloned());
                QSeries::from_coeffs(coeffs).recip()
            }
        }
    }

    /// Display name including parameters, e.g. `ty(1/2)` or `custom:witten`.
    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Genus::Todd => write!(f, "todd"),
            Genus::Ahat => write!(f, "ahat"),
            Genus::Signature => write!(f, "signature"),
            Genus::Euler => write!(f, "euler"),
            Genus::Ty(y) => write!(f, "ty({})", crate::rational::format_rational(y)),
            Genus::Ak(k) => write!(f, "ak({k})"),
            Genus::Custom { name, .. } => write!(f, "custom:{name}"),
        }
    }
}

/// Coefficients of e^{uz}: u^i/i! at z^i.
fn exp_u_series(u: &Rational, order: usize) -> Vec<Rational> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = Rational::one();
    coeffs.push(c.clone());
    for i in 1..=order {
        c = c * u / rat(i as i64);
        coeffs.push(c.clone());
    }
    coeffs
}

/// (e^{uz} - 1)/z: coefficient of z^i is u^{i+1}/(i+1)!.
fn exp_minus_one_over_z(u: &Rational, order: usize) -> QSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = u.clone();
    coeffs.push(c.clone());
    for i in 1..=order {
        c = c * u / rat(i as i64 + 1);
        coeffs.push(c.clone());
    }
    QSeries::from_coeffs(coeffs)
}

/// R(z) = 2 sinh(z/2) as a series (zero constant term); the carrier of the
/// addition identity checked by the verification harness.
pub fn sinh_r_series(order: usize) -> QSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut c = Rational::one();
    let mut k = 0;
    while 2 * k < order {
        if k > 0 {
            let two_k = 2 * k as i64;
            c /= rat(4) * rat(two_k) * rat(two_k + 1);
        }
        coeffs[2 * k + 1] = c.clone();
        k += 1;
    }
    QSeries::from_coeffs(coeffs)
}
