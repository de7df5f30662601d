use std::io::{self, Write};

use cgfib_core::decomposition::{CgDecomposition, ZeckDecomposition};
use cgfib_core::golden::{GoldenLetter, GoldenPrefix};
use cgfib_core::oracle::VerificationReport;
use cgfib_core::sets::{write_set, RowTable, SetFamily, SetFormat};
use cgfib_core::{cg_decompose, Natural};
use clap::ValueEnum;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Lines,
}

pub struct Renderer {
    format: OutputFormat,
}

impl Renderer {
    pub fn new(format: OutputFormat) -> Self {
        Renderer { format }
    }

    pub fn cg(&self, out: &mut dyn Write, n: &Natural, d: &CgDecomposition) -> io::Result<()> {
        match self.format {
            OutputFormat::Text => writeln!(out, "{n} = {d}"),
            OutputFormat::Json => json_line(out, d),
            OutputFormat::Csv => {
                writeln!(out, "index,coefficient")?;
                for (index, c) in d.terms() {
                    writeln!(out, "{index},{c}")?;
                }
                Ok(())
            }
            OutputFormat::Lines => {
                for (index, c) in d.terms() {
                    if c == 2 {
                        writeln!(out, "2·F{index}")?;
                    } else {
                        writeln!(out, "F{index}")?;
                    }
                }
                Ok(())
            }
        }
    }

    pub fn zeck(&self, out: &mut dyn Write, n: &Natural, z: &ZeckDecomposition) -> io::Result<()> {
        match self.format {
            OutputFormat::Text => writeln!(out, "{n} = {z}"),
            OutputFormat::Json => json_line(out, z),
            OutputFormat::Csv => {
                writeln!(out, "index")?;
                for i in z.indices() {
                    writeln!(out, "{i}")?;
                }
                Ok(())
            }
            OutputFormat::Lines => {
                for i in z.indices() {
                    writeln!(out, "F{i}")?;
                }
                Ok(())
            }
        }
    }

    pub fn set(&self, out: &mut dyn Write, set: &SetFamily, values: &[Natural]) -> io::Result<()> {
        let format = match self.format {
            OutputFormat::Text => {
                let joined: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                return writeln!(out, "{set} = {{{}}}", joined.join(", "));
            }
            OutputFormat::Json => SetFormat::Json,
            OutputFormat::Csv => SetFormat::Csv,
            OutputFormat::Lines => SetFormat::Lines,
        };
        write_set(out, values, format)
    }

    pub fn prefix(&self, out: &mut dyn Write, prefix: &GoldenPrefix) -> io::Result<()> {
        match self.format {
            OutputFormat::Text | OutputFormat::Lines => writeln!(out, "{prefix}"),
            OutputFormat::Json => json_line(out, &prefix.to_string()),
            OutputFormat::Csv => {
                writeln!(out, "position,letter")?;
                for (i, l) in prefix.letters().iter().enumerate() {
                    writeln!(out, "{},{l}", i + 1)?;
                }
                Ok(())
            }
        }
    }

    pub fn letter(&self, out: &mut dyn Write, j: &Natural, letter: GoldenLetter) -> io::Result<()> {
        match self.format {
            OutputFormat::Text | OutputFormat::Lines => writeln!(out, "{letter}"),
            OutputFormat::Json => json_line(
                out,
                &json!({"position": j.to_string(), "letter": letter.to_string()}),
            ),
            OutputFormat::Csv => writeln!(out, "position,letter\n{j},{letter}"),
        }
    }

    pub fn count(&self, out: &mut dyn Write, n: &Natural, count: &Natural) -> io::Result<()> {
        match self.format {
            OutputFormat::Text | OutputFormat::Lines => writeln!(out, "{count}"),
            OutputFormat::Json => json_line(
                out,
                &json!({"n": n.to_string(), "count_b": count.to_string()}),
            ),
            OutputFormat::Csv => writeln!(out, "n,count_b\n{n},{count}"),
        }
    }

    pub fn table(&self, out: &mut dyn Write, table: &RowTable) -> io::Result<()> {
        match self.format {
            OutputFormat::Text => {
                for (j, q) in table.rows().iter().enumerate() {
                    writeln!(out, "q({}) = {q} = {}", j + 1, cg_decompose(q))?;
                }
                Ok(())
            }
            OutputFormat::Lines => write_set(out, table.rows(), SetFormat::Lines),
            OutputFormat::Csv => {
                writeln!(out, "j,value")?;
                for (j, q) in table.rows().iter().enumerate() {
                    writeln!(out, "{},{q}", j + 1)?;
                }
                Ok(())
            }
            OutputFormat::Json => {
                let rows: Vec<_> = table
                    .rows()
                    .iter()
                    .enumerate()
                    .map(|(j, q)| json!({"j": j + 1, "value": q.to_string()}))
                    .collect();
                json_line(out, &json!({"k": table.k(), "rows": rows}))
            }
        }
    }

    pub fn report(&self, out: &mut dyn Write, report: &VerificationReport) -> io::Result<()> {
        match self.format {
            OutputFormat::Text | OutputFormat::Lines => writeln!(out, "{report}"),
            OutputFormat::Json => json_line(out, report),
            OutputFormat::Csv => {
                let counterexample = report
                    .first_counterexample()
                    .map(|c| c.to_string())
                    .unwrap_or_default();
                writeln!(out, "check,range,passed,counterexample")?;
                writeln!(
                    out,
                    "{},\"{}\",{},{counterexample}",
                    report.check_name(),
                    report.range_tested(),
                    report.passed()
                )
            }
        }
    }
}

fn json_line<T: serde::Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}
