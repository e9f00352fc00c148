use clap::{Parser, ValueEnum};

use crate::cli::spec::{parse_h_spec, parse_jordan_spec};
use crate::combinatorics::{BlockOrder, HessenbergFunction, JordanData};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// List every nonempty cell with its dimension.
    Cells,
    /// Betti numbers, Poincaré polynomial and related invariants.
    Betti,
    /// Cross-check every cell against all dimension formulas and oracles.
    Verify,
    /// Euler characteristic only.
    Euler,
    /// Base filling and permuted Jordan form.
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Vertical order of the tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    /// Smallest tableau at the bottom, ties in input order.
    Ascending,
    /// Input order from the bottom.
    Input,
}

impl From<OrderArg> for BlockOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Ascending => BlockOrder::AscendingSize,
            OrderArg::Input => BlockOrder::Input,
        }
    }
}

/// Pavings of Hessenberg varieties.
#[derive(Parser, Clone, Debug, PartialEq, Eq)]
#[command(name = "hessenberg", version)]
pub struct JobSpec {
    #[arg(value_enum)]
    pub command: Command,

    /// Dimension of the ambient space; defaults to the size of --jordan.
    #[arg(long)]
    pub n: Option<usize>,

    /// Hessenberg function: `2,3,3`, `full`, `id` or `banded:b`.
    #[arg(long = "h", value_name = "SPEC", default_value = "full")]
    pub h_spec: String,

    /// Jordan type: `a:3,1;b:2,1`, `nilpotent:3,1`, `regss:n` or `3,1`.
    #[arg(long = "jordan", value_name = "SPEC")]
    pub jordan_spec: String,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Seed for the sample points drawn by the rank oracle.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Primes used by the point-count oracle in `verify`.
    #[arg(
        long = "q",
        value_name = "PRIMES",
        value_delimiter = ',',
        default_value = "2,3"
    )]
    pub q_list: Vec<u64>,

    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,

    /// Lift the size guards on enumeration and point counting.
    #[arg(long)]
    pub force: bool,

    #[arg(long, value_enum, default_value_t = OrderArg::Ascending)]
    pub order: OrderArg,
}

/// A [`JobSpec`] with its specs parsed and checked against each other.
#[derive(Clone, Debug)]
pub struct Job {
    pub spec: JobSpec,
    pub jordan: JordanData,
    pub h: HessenbergFunction,
    pub order: BlockOrder,
}

impl JobSpec {
    /// Parses command-line arguments, without the program name.
    pub fn parse_args<I, S>(args: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<std::ffi::OsString> + Clone,
    {
        let argv = std::iter::once(std::ffi::OsString::from("hessenberg"))
            .chain(args.into_iter().map(Into::into));
        JobSpec::try_parse_from(argv).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The canonical argument list that parses back to `self`.
    pub fn to_args(&self) -> Vec<String> {
        let value = |v: &dyn ValueEnumName| v.name();
        let mut args = vec![value(&self.command)];
        if let Some(n) = self.n {
            args.extend(["--n".into(), n.to_string()]);
        }
        args.extend([
            "--h".into(),
            self.h_spec.clone(),
            "--jordan".into(),
            self.jordan_spec.clone(),
            "--format".into(),
            value(&self.format),
            "--seed".into(),
            self.seed.to_string(),
            "--q".into(),
            self.q_list
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(","),
            "--jobs".into(),
            self.jobs.to_string(),
            "--order".into(),
            value(&self.order),
        ]);
        if self.force {
            args.push("--force".into());
        }
        args
    }

    pub fn resolve(&self) -> Result<Job> {
        let jordan = parse_jordan_spec(&self.jordan_spec)?;
        let n = jordan.n();
        if let Some(expected) = self.n {
            if expected != n {
                return Err(Error::SizeMismatch {
                    expected,
                    actual: n,
                });
            }
        }
        let h = parse_h_spec(&self.h_spec, n)?;
        if self.q_list.is_empty() {
            return Err(Error::Parse("--q needs at least one prime".into()));
        }
        Ok(Job {
            spec: self.clone(),
            jordan,
            h,
            order: self.order.into(),
        })
    }
}

trait ValueEnumName {
    fn name(&self) -> String;
}

impl<T: ValueEnum> ValueEnumName for T {
    fn name(&self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_invocation() {
        let spec = JobSpec::parse_args([
            "verify",
            "--n",
            "7",
            "--h",
            "full",
            "--jordan",
            "a:3,1;b:2,1",
            "--format",
            "json",
            "--seed",
            "9",
            "--q",
            "2,3,5",
            "--jobs",
            "2",
            "--force",
        ])
        .unwrap();
        assert_eq!(spec.command, Command::Verify);
        assert_eq!(spec.q_list, vec![2, 3, 5]);
        assert!(spec.force);
        let job = spec.resolve().unwrap();
        assert_eq!(job.h.one_based(), vec![7; 7]);
    }

    #[test]
    fn n_must_match_jordan() {
        let spec = JobSpec::parse_args(["cells", "--n", "4", "--jordan", "2,1"]).unwrap();
        assert!(matches!(spec.resolve(), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn canonical_args_round_trip() {
        let spec = JobSpec::parse_args(["betti", "--jordan", "regss:3", "--h", "2,3,3"]).unwrap();
        assert_eq!(JobSpec::parse_args(spec.to_args()).unwrap(), spec);
    }

    #[test]
    fn unknown_command_is_parse_error() {
        let err = JobSpec::parse_args(["frobnicate", "--jordan", "1"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
