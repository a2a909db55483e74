use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

type ProfileFn = dyn Fn(f64) -> f64 + Send + Sync;

/// A function on the fractal, carried by its staircase-coordinate profile
/// `g` so that `f(x) = g(S(x))`.
///
/// Profiles are cheap to clone and may be evaluated from several threads.
/// Points where `g` is known to blow up are listed in `singularities`;
/// differentiation stencils refuse to touch them.
#[derive(Clone)]
pub struct Profile {
    g: Arc<ProfileFn>,
    description: String,
    singularities: Vec<f64>,
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Profile")
            .field("description", &self.description)
            .field("singularities", &self.singularities)
            .finish()
    }
}

impl Profile {
    pub fn new(description: impl Into<String>, g: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Profile {
            g: Arc::new(g),
            description: description.into(),
            singularities: Vec::new(),
        }
    }

    pub fn with_singularity(mut self, u: f64) -> Self {
        if !self.singularities.contains(&u) {
            self.singularities.push(u);
        }
        self
    }

    pub fn constant(c: f64) -> Self {
        Profile::new(format!("{c}"), move |_| c)
    }

    /// The characteristic function of the Cantor set: constant one on `F`.
    pub fn characteristic() -> Self {
        Profile::new("chi_F", |_| 1.0)
    }

    pub fn identity() -> Self {
        Profile::new("u", |u| u)
    }

    /// `u^eta`; negative exponents are declared singular at zero.
    pub fn power(eta: f64) -> Self {
        let p = Profile::new(
            format!("u^{eta}"),
            move |u: f64| {
                if eta == 0.0 {
                    1.0
                } else {
                    u.powf(eta)
                }
            },
        );
        if eta < 0.0 {
            p.with_singularity(0.0)
        } else {
            p
        }
    }

    /// `exp(k u)`.
    pub fn exp(k: f64) -> Self {
        Profile::new(format!("exp({k} u)"), move |u: f64| (k * u).exp())
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn singularities(&self) -> &[f64] {
        &self.singularities
    }

    #[inline]
    pub fn eval(&self, u: f64) -> f64 {
        (self.g)(u)
    }

    /// Evaluates `g(u)`, turning a non-finite value into [`Error::Singular`].
    pub fn try_eval(&self, u: f64) -> Result<f64> {
        let v = (self.g)(u);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Singular { at: u })
        }
    }

    /// Fails if a declared singular point lies in `[lo, hi]`.
    pub(crate) fn check_clear_of_singularities(&self, lo: f64, hi: f64) -> Result<()> {
        match self.singularities.iter().find(|&&p| p >= lo && p <= hi) {
            Some(&at) => Err(Error::Singular { at }),
            None => Ok(()),
        }
    }

    pub fn scale(&self, c: f64) -> Profile {
        let g = self.g.clone();
        Profile {
            g: Arc::new(move |u| c * g(u)),
            description: format!("{c}*({})", self.description),
            singularities: self.singularities.clone(),
        }
    }

    pub fn add(&self, other: &Profile) -> Profile {
        let (g, h) = (self.g.clone(), other.g.clone());
        let mut singularities = self.singularities.clone();
        for &p in &other.singularities {
            if !singularities.contains(&p) {
                singularities.push(p);
            }
        }
        Profile {
            g: Arc::new(move |u| g(u) + h(u)),
            description: format!("({}) + ({})", self.description, other.description),
            singularities,
        }
    }

    pub fn mul(&self, other: &Profile) -> Profile {
        let (g, h) = (self.g.clone(), other.g.clone());
        let mut singularities = self.singularities.clone();
        for &p in &other.singularities {
            if !singularities.contains(&p) {
                singularities.push(p);
            }
        }
        Profile {
            g: Arc::new(move |u| g(u) * h(u)),
            description: format!("({}) * ({})", self.description, other.description),
            singularities,
        }
    }

    /// `u -> g(c u)`: the profile of `f(λx)` when `S(λx) = c S(x)`.
    pub fn dilate(&self, c: f64) -> Profile {
        let g = self.g.clone();
        Profile {
            g: Arc::new(move |u| g(c * u)),
            description: format!("({})({c} u)", self.description),
            singularities: self.singularities.iter().map(|p| p / c).collect(),
        }
    }
}
