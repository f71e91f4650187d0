use crate::error::{Error, Result};

/// Environment variable consulted by [`Limits::from_env`].
pub const SIZE_GUARD_ENV: &str = "TURANCOVER_SIZE_GUARD";

/// Resource guards shared by the exact solver, the brute-force oracles and the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum `n * m` for an exact-mode LP solve.
    pub lp_exact_product: usize,
    /// Maximum number of search nodes for a branch-and-bound oracle.
    pub search_nodes: u64,
    /// Maximum number of objects a generator or scan may enumerate.
    pub enumeration: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            lp_exact_product: 50_000,
            search_nodes: 20_000_000,
            enumeration: 5_000_000,
        }
    }
}

impl Limits {
    /// Defaults overridden by `TURANCOVER_SIZE_GUARD`.
    ///
    /// The variable holds either a bare integer (the exact-LP product guard) or a
    /// comma-separated list of `lp=N`, `nodes=N`, `enum=N` pairs.
    pub fn from_env() -> Result<Self> {
        match std::env::var(SIZE_GUARD_ENV) {
            Ok(spec) => Limits::default().with_overrides(&spec),
            Err(_) => Ok(Limits::default()),
        }
    }

    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Ok(self);
        }
        if let Ok(n) = spec.parse::<usize>() {
            self.lp_exact_product = n;
            return Ok(self);
        }
        for part in spec.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::param(format!("bad size guard entry '{part}'")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::param(format!("bad size guard value '{value}'")))?;
            match key.trim() {
                "lp" => self.lp_exact_product = value as usize,
                "nodes" => self.search_nodes = value,
                "enum" => self.enumeration = value,
                other => return Err(Error::param(format!("unknown size guard key '{other}'"))),
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        let l = Limits::default().with_overrides("1234").unwrap();
        assert_eq!(l.lp_exact_product, 1234);
        let l = Limits::default().with_overrides("nodes=10, enum=20").unwrap();
        assert_eq!(l.search_nodes, 10);
        assert_eq!(l.enumeration, 20);
        assert!(Limits::default().with_overrides("bogus=1").is_err());
    }
}
