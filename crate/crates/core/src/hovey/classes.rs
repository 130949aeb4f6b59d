use std::fmt;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;

type Predicate<O> = Arc<dyn Fn(&O) -> bool + Send + Sync>;
type Sampler<O> = Arc<dyn Fn(&mut ChaCha8Rng) -> O + Send + Sync>;

/// A class of objects: a membership predicate, optionally with a sampler
/// biased towards members. Without one, members are found by rejection
/// sampling from the instance.
pub struct Class<O> {
    pub name: String,
    contains: Predicate<O>,
    sampler: Option<Sampler<O>>,
}

impl<O: 'static> Class<O> {
    pub fn all() -> Self {
        Class { name: "all".into(), contains: Arc::new(|_| true), sampler: None }
    }

    pub fn predicate(name: &str, contains: impl Fn(&O) -> bool + Send + Sync + 'static) -> Self {
        Class { name: name.into(), contains: Arc::new(contains), sampler: None }
    }

    pub fn with_sampler(
        name: &str,
        contains: impl Fn(&O) -> bool + Send + Sync + 'static,
        sampler: impl Fn(&mut ChaCha8Rng) -> O + Send + Sync + 'static,
    ) -> Self {
        Class { name: name.into(), contains: Arc::new(contains), sampler: Some(Arc::new(sampler)) }
    }

    pub fn contains(&self, x: &O) -> bool {
        (self.contains)(x)
    }

    pub(crate) fn sampler(&self) -> Option<&Sampler<O>> {
        self.sampler.as_ref()
    }

    /// Pointwise intersection; keeps the first available sampler.
    pub fn and(&self, other: &Class<O>) -> Self {
        let (a, b) = (self.contains.clone(), other.contains.clone());
        let name = match (self.name.as_str(), other.name.as_str()) {
            ("all", n) | (n, "all") => n.to_string(),
            (x, y) if x == y => x.to_string(),
            (x, y) => format!("{x} ∩ {y}"),
        };
        Class {
            name,
            contains: Arc::new(move |x| a(x) && b(x)),
            sampler: self.sampler.clone().or_else(|| other.sampler.clone()),
        }
    }
}

impl<O: PartialEq + Clone + Send + Sync + 'static> Class<O> {
    /// A finite class given by its members.
    pub fn finite(name: &str, members: Vec<O>) -> Self {
        let m = members.clone();
        let sampler: Option<Sampler<O>> = if members.is_empty() {
            None
        } else {
            Some(Arc::new(move |rng: &mut ChaCha8Rng| {
                use rand::seq::SliceRandom;
                members.choose(rng).expect("nonempty").clone()
            }))
        };
        Class { name: name.into(), contains: Arc::new(move |x| m.contains(x)), sampler }
    }
}

impl<O> Clone for Class<O> {
    fn clone(&self) -> Self {
        Class { name: self.name.clone(), contains: self.contains.clone(), sampler: self.sampler.clone() }
    }
}

impl<O> fmt::Debug for Class<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Class({})", self.name)
    }
}

/// The classes `(Q, R, W)` of cofibrant, fibrant and trivial objects.
#[derive(Clone, Debug)]
pub struct ClassSpec<O> {
    pub q: Class<O>,
    pub r: Class<O>,
    pub w: Class<O>,
}

/// A full subcategory with the restricted classes.
#[derive(Clone, Debug)]
pub struct SubModel<O> {
    pub objects: Class<O>,
    pub spec: ClassSpec<O>,
}

/// The restrictions to the fibrant, cofibrant and bifibrant objects.
#[derive(Clone, Debug)]
pub struct SubClasses<O> {
    pub fibrant: SubModel<O>,
    pub cofibrant: SubModel<O>,
    pub bifibrant: SubModel<O>,
}

/// `Q_f = Q∩R, R_f = R, W_f = W∩R`; `Q_c = Q, R_c = R∩Q, W_c = W∩Q`;
/// `Q_cf = R_cf = Q∩R, W_cf = W∩Q∩R`.
pub fn sub_classes<O: 'static>(spec: &ClassSpec<O>) -> SubClasses<O> {
    let (q, r, w) = (&spec.q, &spec.r, &spec.w);
    let qr = q.and(r);
    SubClasses {
        fibrant: SubModel { objects: r.clone(), spec: ClassSpec { q: qr.clone(), r: r.clone(), w: w.and(r) } },
        cofibrant: SubModel { objects: q.clone(), spec: ClassSpec { q: q.clone(), r: r.and(q), w: w.and(q) } },
        bifibrant: SubModel { objects: qr.clone(), spec: ClassSpec { q: qr.clone(), r: qr.clone(), w: w.and(q).and(r) } },
    }
}
