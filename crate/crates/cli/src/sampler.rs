use gkzrank::semigroup::Parameter;
use gkzrank::{IVec3, PointedConfig};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Deterministic stream of random pointed full-lattice configurations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerSpec {
    #[serde(with = "seed_string")]
    pub seed: u64,
    pub count: usize,
    pub ncols_min: usize,
    pub ncols_max: usize,
    /// Entries are drawn from `[0, entry_max]`, or `[-entry_max, entry_max]`
    /// when `signed`.
    pub entry_max: i64,
    pub signed: bool,
    pub vol_cap: u64,
}

impl SamplerSpec {
    pub fn new(seed: u64, count: usize, ncols_max: usize, entry_max: i64, vol_cap: u64) -> Self {
        SamplerSpec {
            seed,
            count,
            ncols_min: 3,
            ncols_max,
            entry_max,
            signed: false,
            vol_cap,
        }
    }

    /// Draws `count` accepted configurations, or fails after too many
    /// rejections.
    pub fn sample(&self) -> Result<Vec<PointedConfig>, String> {
        if self.ncols_max < self.ncols_min || self.ncols_min < 3 {
            return Err(format!(
                "column range {}..={} must start at 3 or more",
                self.ncols_min, self.ncols_max
            ));
        }
        if self.entry_max < 1 {
            return Err("entry bound must be at least 1".into());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let lo = if self.signed { -self.entry_max } else { 0 };
        let mut out = Vec::with_capacity(self.count);
        let budget = 10_000 + 1_000 * self.count;
        let mut attempts = 0;
        while out.len() < self.count {
            attempts += 1;
            if attempts > budget {
                return Err(format!(
                    "accepted only {} of {} configurations after {budget} draws",
                    out.len(),
                    self.count
                ));
            }
            let n = rng.gen_range(self.ncols_min..=self.ncols_max);
            let cols: Vec<IVec3> = (0..n)
                .map(|_| {
                    [
                        rng.gen_range(lo..=self.entry_max),
                        rng.gen_range(lo..=self.entry_max),
                        rng.gen_range(lo..=self.entry_max),
                    ]
                })
                .collect();
            let Ok(cfg) = PointedConfig::from_columns(&cols) else {
                continue;
            };
            match cfg.hull_with_origin().normalized_volume() {
                Ok(v) if v <= self.vol_cap => out.push(cfg),
                _ => continue,
            }
        }
        Ok(out)
    }
}

/// Random rational point with small numerators and denominators.
pub fn random_parameter(rng: &mut impl Rng) -> Parameter {
    let den = rng.gen_range(1..=12);
    let num = [
        rng.gen_range(-24..=24),
        rng.gen_range(-24..=24),
        rng.gen_range(-24..=24),
    ];
    Parameter::new(num, den)
}

pub fn parameter_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seeds are written as decimal strings: TOML integers stop at `i64::MAX`.
pub(crate) mod seed_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(seed: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&seed.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}
