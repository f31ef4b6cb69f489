use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Exact tables, chain expansions and positivity scans for the coefficient
/// family b(i, j, k).
#[derive(Debug, Parser)]
#[command(name = "fano-chern", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. Table commands default to csv; expand and invariants
    /// default to plain text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the rendered output to this path instead of standard output.
    /// For verify, the path receives the JSON certificate.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Tex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Bernoulli numbers B_0 .. B_max as exact rationals.
    Bernoulli {
        /// Largest index to print.
        #[arg(long, default_value_t = 10)]
        max_m: u32,
    },

    /// Print the coefficient rows b(i, j, 0..=i+j) for a fixed degree j,
    /// or the alternating binomial sums c(m, p).
    Table {
        /// Degree j of the table rows.
        #[arg(long, required_unless_present = "c_coeffs", conflicts_with = "c_coeffs")]
        j: Option<u32>,

        /// Largest depth i to print.
        #[arg(long, required_unless_present = "c_coeffs", conflicts_with = "c_coeffs")]
        i_max: Option<u32>,

        /// Print the c(m, p) table instead of coefficient rows.
        #[arg(long)]
        c_coeffs: bool,

        /// Largest m for the c(m, p) table.
        #[arg(long, default_value_t = 6, requires = "c_coeffs")]
        m_max: u32,

        /// Largest p for the c(m, p) table.
        #[arg(long, default_value_t = 6, requires = "c_coeffs")]
        p_max: u32,
    },

    /// Scan b(i, j, k) for k >= 1 over a depth range and report every entry
    /// that fails positivity.
    Verify {
        /// Largest depth i to scan.
        #[arg(long)]
        i_max: u32,

        /// Smallest depth i to scan.
        #[arg(long, default_value_t = 1)]
        i_lo: u32,

        /// Degrees j to scan, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        j: Vec<u32>,

        /// Only flag strictly negative entries; zeros pass.
        #[arg(long)]
        non_strict: bool,
    },

    /// Expand the degree-j Chern character of the last family in a chain
    /// over the standard basis terms.
    Expand {
        /// Step degrees a_2, .., a_i, comma separated. Omitted: a single
        /// family over the ambient space.
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<u64>>,

        /// Degree of the expanded class.
        #[arg(long)]
        j: u32,
    },

    /// Chain-length invariants and the polarized minimal family of a model
    /// space given as P:n, Q:n, Bl:n,m or QxP:m.
    Invariants {
        /// Model spec, e.g. "P:7" or "Bl:6,2".
        model: String,
    },
}
