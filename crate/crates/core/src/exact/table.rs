use std::fmt;

/// Which recursion produced a [`CoefficientTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Recursion {
    /// Laurent coefficients `c_n` of `u`.
    Laurent,
    /// Pentagonal coefficients `v_n = c_{5n}` at `g2 = g3 = 0`, `lambda = 1`.
    Pentagonal,
    /// Hurwitz numbers `H_n`.
    Hurwitz,
    /// Tau coefficients `C_n` from the Hirota bilinear equation.
    TauBilinear,
    /// Tau coefficients `C_n` from the degree-four equation.
    TauQuartic,
    /// Tau coefficients `C_n` assembled from the `A_{l,m,n}` triple sum.
    TauTripleSum,
    /// Laurent coefficients recovered as `-(log tau)''`.
    UFromTau,
}

impl Recursion {
    pub const ALL: [Recursion; 7] = [
        Recursion::Laurent,
        Recursion::Pentagonal,
        Recursion::Hurwitz,
        Recursion::TauBilinear,
        Recursion::TauQuartic,
        Recursion::TauTripleSum,
        Recursion::UFromTau,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Recursion::Laurent => "laurent",
            Recursion::Pentagonal => "pentagonal",
            Recursion::Hurwitz => "hurwitz",
            Recursion::TauBilinear => "tau-bilinear",
            Recursion::TauQuartic => "tau-quartic",
            Recursion::TauTripleSum => "tau-triple-sum",
            Recursion::UFromTau => "u-from-tau",
        }
    }

    pub fn from_name(name: &str) -> Option<Recursion> {
        Recursion::ALL.into_iter().find(|r| r.name() == name)
    }
}

impl fmt::Display for Recursion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense run of coefficients `a_start, a_{start+1}, ..., a_order` together
/// with the recursion that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable<S> {
    recursion: Recursion,
    start: usize,
    coeffs: Vec<S>,
}

impl<S> CoefficientTable<S> {
    pub fn new(recursion: Recursion, start: usize, coeffs: Vec<S>) -> Self {
        CoefficientTable { recursion, start, coeffs }
    }

    pub fn recursion(&self) -> Recursion {
        self.recursion
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Largest index present; `start - 1` for an empty table.
    pub fn order(&self) -> usize {
        (self.start + self.coeffs.len()).saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&S> {
        index.checked_sub(self.start).and_then(|i| self.coeffs.get(i))
    }

    pub fn values(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_values(self) -> Vec<S> {
        self.coeffs
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coeffs.iter().enumerate().map(move |(i, c)| (i + self.start, c))
    }

    /// Keeps indices `<= order`.
    pub fn truncated(&self, order: usize) -> Self
    where
        S: Clone,
    {
        let keep = (order + 1).saturating_sub(self.start).min(self.coeffs.len());
        CoefficientTable::new(self.recursion, self.start, self.coeffs[..keep].to_vec())
    }
}

impl<S> std::ops::Index<usize> for CoefficientTable<S> {
    type Output = S;

    fn index(&self, index: usize) -> &S {
        self.get(index)
            .unwrap_or_else(|| panic!("coefficient index {index} outside table {}..={}", self.start, self.order()))
    }
}
