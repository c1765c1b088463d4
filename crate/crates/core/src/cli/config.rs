//! Experiment configuration: a structured text file of `key = value` lines
//! plus command-line overrides.
//!
//! Unknown keys are rejected. Exponent grid values are parsed as exact
//! rationals (`4/3`, `1.25`, `2`), keeping exponent-identity checks exact
//! while the numeric suites use their float values.

use std::path::PathBuf;

use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::dunkl_ramirez::HaParameter;
use crate::inequalities::FamilyKind;
use crate::{Error, Result};

/// A positive exponent kept in both exact-rational and float form.
#[derive(Debug, Clone, PartialEq)]
pub struct PValue {
    pub text: String,
    pub rational: Rational64,
    pub float: f64,
}

impl PValue {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = |_| Error::Config(format!("bad exponent {text:?}"));
        let rational = if let Some((num, den)) = text.split_once('/') {
            let num: i64 = num.trim().parse().map_err(bad)?;
            let den: i64 = den.trim().parse().map_err(bad)?;
            if den == 0 {
                return Err(Error::Config(format!("bad exponent {text:?}")));
            }
            Rational64::new(num, den)
        } else if let Some((whole, frac)) = text.split_once('.') {
            let digits = frac.len() as u32;
            if digits > 15 || frac.chars().any(|c| !c.is_ascii_digit()) {
                return Err(Error::Config(format!("bad exponent {text:?}")));
            }
            let whole: i64 = whole.parse().map_err(bad)?;
            let frac: i64 = frac.parse().map_err(bad)?;
            let scale = 10i64.pow(digits);
            Rational64::new(whole * scale + frac, scale)
        } else {
            Rational64::from_integer(text.parse().map_err(bad)?)
        };
        let float = rational.to_f64().ok_or_else(|| Error::Config(format!("bad exponent {text:?}")))?;
        if !(float > 0.0) {
            return Err(Error::Config(format!("exponent {text:?} must be positive")));
        }
        Ok(Self { text: text.to_string(), rational, float })
    }

    pub fn parse_list(text: &str) -> Result<Vec<Self>> {
        text.split(',').filter(|t| !t.trim().is_empty()).map(Self::parse).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum InstanceChoice {
    ConjSu2,
    DunklRamirez(HaParameter),
}

impl InstanceChoice {
    pub fn name(&self) -> &'static str {
        match self {
            InstanceChoice::ConjSu2 => "conj_su2",
            InstanceChoice::DunklRamirez(_) => "dunkl_ramirez",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Algebra,
    Hy,
    Paley,
    Hl,
    Hyp,
    Duality,
    Multiplier,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Hy => "hy",
            Suite::Paley => "paley",
            Suite::Hl => "hl",
            Suite::Hyp => "hyp",
            Suite::Duality => "duality",
            Suite::Multiplier => "multiplier",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "algebra" => Ok(Suite::Algebra),
            "hy" => Ok(Suite::Hy),
            "paley" => Ok(Suite::Paley),
            "hl" => Ok(Suite::Hl),
            "hyp" => Ok(Suite::Hyp),
            "duality" => Ok(Suite::Duality),
            "multiplier" => Ok(Suite::Multiplier),
            other => Err(Error::Config(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
}

impl OutputFormat {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Config(format!("unknown format {other:?}"))),
        }
    }
}

/// Full description of one batch run.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub instance: InstanceChoice,
    pub suites: Vec<Suite>,
    pub p_grid: Vec<PValue>,
    /// Interpolation exponents for the Hausdorff-Young-Paley suite; when
    /// empty, each p uses the endpoints and midpoint of `[p, p']`.
    pub b_grid: Vec<PValue>,
    /// Target exponents (≥ 2) for the multiplier and duality suites.
    pub q_grid: Vec<PValue>,
    pub level: u32,
    pub seed: u64,
    pub family: FamilyKind,
    pub count: u32,
    pub decay: f64,
    pub trials: u32,
    pub beta: f64,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        let p_grid = ["1.25", "4/3", "1.5", "1.75", "2"]
            .iter()
            .map(|t| PValue::parse(t).expect("default grid parses"))
            .collect();
        let q_grid = ["2", "5/2", "4"]
            .iter()
            .map(|t| PValue::parse(t).expect("default grid parses"))
            .collect();
        Self {
            instance: InstanceChoice::ConjSu2,
            suites: Vec::new(),
            p_grid,
            b_grid: Vec::new(),
            q_grid,
            level: 40,
            seed: 42,
            family: FamilyKind::RandomDecay,
            count: 200,
            decay: 2.0,
            trials: 4,
            beta: 3.0,
            out: None,
            format: OutputFormat::Text,
        }
    }
}

impl ExperimentConfig {
    /// Parses the `key = value` config text on top of the defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut config = Self::default();
        let mut a_param: Option<String> = None;
        let mut instance_name: Option<String> = None;
        let mut suites_given = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected key = value, got {line:?}", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "instance" => instance_name = Some(value.to_string()),
                "a" => a_param = Some(value.to_string()),
                "suites" | "suite" => {
                    suites_given = true;
                    config.suites = value
                        .split(',')
                        .filter(|t| !t.trim().is_empty())
                        .map(Suite::parse)
                        .collect::<Result<_>>()?;
                }
                "p" => config.p_grid = PValue::parse_list(value)?,
                "b" => config.b_grid = PValue::parse_list(value)?,
                "q" => config.q_grid = PValue::parse_list(value)?,
                "level" => {
                    config.level = value
                        .parse()
                        .map_err(|_| Error::Config(format!("bad level {value:?}")))?
                }
                "seed" => {
                    config.seed =
                        value.parse().map_err(|_| Error::Config(format!("bad seed {value:?}")))?
                }
                "family" => {
                    config.family = FamilyKind::parse(value)?;
                }
                "count" => {
                    config.count =
                        value.parse().map_err(|_| Error::Config(format!("bad count {value:?}")))?
                }
                "decay" => {
                    config.decay =
                        value.parse().map_err(|_| Error::Config(format!("bad decay {value:?}")))?
                }
                "trials" => {
                    config.trials = value
                        .parse()
                        .map_err(|_| Error::Config(format!("bad trials {value:?}")))?
                }
                "beta" => {
                    config.beta =
                        value.parse().map_err(|_| Error::Config(format!("bad beta {value:?}")))?
                }
                "out" => config.out = Some(PathBuf::from(value)),
                "format" => config.format = OutputFormat::parse(value)?,
                other => return Err(Error::Config(format!("unknown key {other:?}"))),
            }
        }
        config.apply_instance(instance_name.as_deref(), a_param.as_deref())?;
        if !suites_given {
            config.suites = config.default_suites();
        }
        Ok(config)
    }

    /// Resolves the instance choice from its name and the `a` parameter.
    pub fn apply_instance(&mut self, name: Option<&str>, a: Option<&str>) -> Result<()> {
        match name.unwrap_or(self.instance.name()) {
            "conj_su2" => {
                if a.is_some() {
                    return Err(Error::Config(
                        "parameter a applies only to dunkl_ramirez".into(),
                    ));
                }
                self.instance = InstanceChoice::ConjSu2;
            }
            "dunkl_ramirez" => {
                let text = a.unwrap_or("1/3");
                let param = HaParameter::parse(text).map_err(|e| Error::Config(e.to_string()))?;
                self.instance = InstanceChoice::DunklRamirez(param);
            }
            other => return Err(Error::Config(format!("unknown instance {other:?}"))),
        }
        Ok(())
    }

    /// Suites applicable to the configured instance (the duality bound is
    /// specific to the conjugacy-class instance).
    pub fn default_suites(&self) -> Vec<Suite> {
        let mut suites = vec![
            Suite::Algebra,
            Suite::Hy,
            Suite::Paley,
            Suite::Hl,
            Suite::Hyp,
            Suite::Multiplier,
        ];
        if matches!(self.instance, InstanceChoice::ConjSu2) {
            suites.insert(5, Suite::Duality);
        }
        suites
    }

    /// Full validation before execution.
    pub fn validate(&self) -> Result<()> {
        if self.suites.is_empty() {
            return Err(Error::Config("empty suite list".into()));
        }
        if self.count == 0 {
            return Err(Error::Config("count must be at least 1".into()));
        }
        if !(self.decay > 0.0) {
            return Err(Error::Config("decay must be positive".into()));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.p_grid.is_empty() {
            return Err(Error::Config("empty p grid".into()));
        }
        // Exponent ranges per suite.
        for p in &self.p_grid {
            if self.suites.contains(&Suite::Hy) && !(p.float >= 1.0 && p.float <= 2.0) {
                return Err(Error::Config(format!("hy needs p in [1, 2], got {}", p.text)));
            }
            let open_range = p.float > 1.0 && p.float <= 2.0;
            for suite in [Suite::Paley, Suite::Hl, Suite::Hyp, Suite::Multiplier] {
                if self.suites.contains(&suite) && !open_range {
                    return Err(Error::Config(format!(
                        "{} needs p in (1, 2], got {}",
                        suite.name(),
                        p.text
                    )));
                }
            }
            // Explicit b values must lie in [p, p'] for every p in the grid.
            if self.suites.contains(&Suite::Hyp) && open_range {
                let p_conj = p.float / (p.float - 1.0);
                for b in &self.b_grid {
                    if !(b.float >= p.float && b.float <= p_conj) {
                        return Err(Error::Config(format!(
                            "hyp needs b in [p, p']; b = {} escapes [{}, {p_conj}]",
                            b.text, p.text
                        )));
                    }
                }
            }
        }
        if self.suites.contains(&Suite::Duality) {
            if !matches!(self.instance, InstanceChoice::ConjSu2) {
                return Err(Error::Config(
                    "the duality suite is defined on conj_su2 only".into(),
                ));
            }
            for q in &self.q_grid {
                if !(q.float >= 2.0) {
                    return Err(Error::Config(format!(
                        "duality needs exponents ≥ 2, got {}",
                        q.text
                    )));
                }
            }
        }
        if self.suites.contains(&Suite::Multiplier) {
            for q in &self.q_grid {
                if !(q.float >= 2.0 && q.float.is_finite()) {
                    return Err(Error::Config(format!(
                        "multiplier needs q in [2, ∞), got {}",
                        q.text
                    )));
                }
            }
        }
        // Plancherel weights must stay inside f64 range at this truncation.
        if let InstanceChoice::DunklRamirez(a) = &self.instance {
            let log_k = -(self.level as f64) * a.value().ln() + (1.0 - a.value()).ln();
            let budget = 700.0;
            if 2.0 * log_k > budget {
                let cap = (budget / 2.0 - (1.0 - a.value()).ln()) / -a.value().ln();
                return Err(Error::Config(format!(
                    "squared Plancherel weights overflow f64 at level {} for a = {}; \
                     cap the level at {}",
                    self.level,
                    a,
                    cap.floor() as u32
                )));
            }
        }
        Ok(())
    }

    /// Config echo for the report header, in fixed key order.
    pub fn echo(&self) -> Vec<(String, String)> {
        let mut echo = vec![("instance".to_string(), self.instance.name().to_string())];
        if let InstanceChoice::DunklRamirez(a) = &self.instance {
            echo.push(("a".to_string(), a.to_string()));
        }
        let suites: Vec<&str> = self.suites.iter().map(|s| s.name()).collect();
        echo.push(("suites".to_string(), suites.join(",")));
        let grid = |values: &[PValue]| {
            values.iter().map(|p| p.text.clone()).collect::<Vec<_>>().join(",")
        };
        echo.push(("p".to_string(), grid(&self.p_grid)));
        if !self.b_grid.is_empty() {
            echo.push(("b".to_string(), grid(&self.b_grid)));
        }
        echo.push(("q".to_string(), grid(&self.q_grid)));
        echo.push(("level".to_string(), self.level.to_string()));
        echo.push(("seed".to_string(), self.seed.to_string()));
        echo.push(("family".to_string(), self.family.name().to_string()));
        echo.push(("count".to_string(), self.count.to_string()));
        echo.push(("decay".to_string(), format!("{}", self.decay)));
        echo.push(("trials".to_string(), self.trials.to_string()));
        echo.push(("beta".to_string(), format!("{}", self.beta)));
        echo.push((
            "format".to_string(),
            match self.format {
                OutputFormat::Text => "text".to_string(),
                OutputFormat::Csv => "csv".to_string(),
            },
        ));
        echo
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rational_and_decimal_exponents() {
        let p = PValue::parse("4/3").unwrap();
        assert_eq!(p.rational, Rational64::new(4, 3));
        let p = PValue::parse("1.25").unwrap();
        assert_eq!(p.rational, Rational64::new(5, 4));
        assert_eq!(p.float, 1.25);
        let p = PValue::parse("2").unwrap();
        assert_eq!(p.rational, Rational64::from_integer(2));
        assert!(PValue::parse("0").is_err());
        assert!(PValue::parse("x/3").is_err());
        assert!(PValue::parse("1/0").is_err());
    }

    #[test]
    fn parses_config_text_and_rejects_unknown_keys() {
        let text = "
            # comment
            instance = dunkl_ramirez
            a = 1/4
            suites = algebra, hy
            p = 1.25, 2
            level = 20
            seed = 7
        ";
        let config = ExperimentConfig::parse(text).unwrap();
        assert_eq!(config.instance.name(), "dunkl_ramirez");
        assert_eq!(config.suites, vec![Suite::Algebra, Suite::Hy]);
        assert_eq!(config.level, 20);
        assert_eq!(config.seed, 7);
        assert!(config.validate().is_ok());

        assert!(ExperimentConfig::parse("bogus = 1").is_err());
        assert!(ExperimentConfig::parse("instance = torus").is_err());
    }

    #[test]
    fn validation_catches_bad_combinations() {
        let mut config = ExperimentConfig::parse("suites = hy").unwrap();
        assert!(config.validate().is_ok());
        config.suites = vec![];
        assert!(matches!(config.validate(), Err(Error::Config(_))));

        // p = 1 is fine for hy but not for paley.
        let config =
            ExperimentConfig::parse("suites = paley\np = 1, 2").unwrap();
        assert!(config.validate().is_err());

        // Duality needs the conjugacy-class instance.
        let config = ExperimentConfig::parse(
            "instance = dunkl_ramirez\nsuites = duality",
        )
        .unwrap();
        assert!(config.validate().is_err());

        // Excessive truncation for H_a weights is rejected with a cap hint.
        let config = ExperimentConfig::parse(
            "instance = dunkl_ramirez\na = 1/4\nsuites = hy\nlevel = 400",
        )
        .unwrap();
        let err = config.validate().unwrap_err();
        let message = err.to_string();
        assert!(message.contains("cap the level"), "{message}");
    }

    #[test]
    fn default_suites_depend_on_instance() {
        let config = ExperimentConfig::default();
        assert!(config.default_suites().contains(&Suite::Duality));
        let config =
            ExperimentConfig::parse("instance = dunkl_ramirez").unwrap();
        assert!(!config.default_suites().contains(&Suite::Duality));
    }
}
