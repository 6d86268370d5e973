//! LaTeX longtable generation for a range of polynomials.
//!
//! Output is plain text written to any sink; nothing here touches the
//! filesystem. A generated table always carries five columns (index, degree,
//! frequency, normalization, polynomial) unless the caller overrides the
//! header, and repeats its header on every page through the longtable
//! first-head/head machinery.

use std::io::Write;

use crate::error::{Error, Result};
use crate::indexing::{j_to_nm, NollIndex};
use crate::symbolic::{emit_normalization, emit_unnormalized_zernike};

/// Caption, column layout and index range of one table.
///
/// Fields are public so callers can override any of the defaults before
/// generating; [`gen_long_table`] re-validates the combination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub caption: String,
    pub caption_continue: String,
    pub attrib_names: Vec<String>,
    pub align_ctrl: String,
    pub j_min: NollIndex,
    pub j_max: NollIndex,
}

impl TableSpec {
    /// Default five-column table over an inclusive index range.
    pub fn for_range(j_min: NollIndex, j_max: NollIndex) -> Result<Self> {
        let spec = TableSpec {
            caption: "Zernike Circular Polynomials $Z_j(\\rho,\\theta)=\
                      N^m_n R_n^m(\\rho)\\Theta_m(\\theta)$"
                .to_string(),
            caption_continue: "Zernike Circular Polynomials (continued)".to_string(),
            attrib_names: [
                "$j$",
                "$n$",
                "$m$",
                "$N^m_n$",
                "$R_n^m(\\rho)\\Theta_m(\\theta)$",
            ]
            .map(String::from)
            .to_vec(),
            align_ctrl: "ccrcp{0.55\\textwidth}".to_string(),
            j_min,
            j_max,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn n_cols(&self) -> usize {
        self.attrib_names.len()
    }

    fn validate(&self) -> Result<()> {
        if self.j_min > self.j_max {
            return Err(Error::TableSpec {
                reason: format!(
                    "empty index range: j_min = {} exceeds j_max = {}",
                    self.j_min, self.j_max
                ),
            });
        }
        if self.attrib_names.is_empty() {
            return Err(Error::TableSpec {
                reason: "no columns".to_string(),
            });
        }
        if self.attrib_names.iter().any(|name| name.is_empty()) {
            return Err(Error::TableSpec {
                reason: "empty column name".to_string(),
            });
        }
        Ok(())
    }

    fn header_row<W: Write>(&self, sink: &mut W) -> Result<()> {
        writeln!(sink, "{} \\\\", self.attrib_names.join(" & "))?;
        Ok(())
    }
}

/// Writes one data row: index, degree, frequency, normalization and the
/// unnormalized polynomial, every cell in math mode.
pub fn gen_table_line<W: Write>(sink: &mut W, j: NollIndex) -> Result<()> {
    let idx = j_to_nm(j);
    write!(sink, "${}$ & ${}$ & ${}$ & $", j.get(), idx.n(), idx.m())?;
    emit_normalization(sink, idx)?;
    write!(sink, "$ & $")?;
    emit_unnormalized_zernike(sink, idx)?;
    writeln!(sink, "$ \\\\")?;
    Ok(())
}

/// Writes the complete longtable environment for the spec's index range.
pub fn gen_long_table<W: Write>(sink: &mut W, spec: &TableSpec) -> Result<()> {
    spec.validate()?;
    writeln!(sink, "\\begin{{center}}")?;
    writeln!(sink, "\\begin{{longtable}}{{{}}}", spec.align_ctrl)?;
    writeln!(sink, "\\caption{{{}}}\\\\", spec.caption)?;
    writeln!(sink, "\\hline")?;
    spec.header_row(sink)?;
    writeln!(sink, "\\hline")?;
    writeln!(sink, "\\endfirsthead")?;
    writeln!(sink, "\\caption[]{{{}}}\\\\", spec.caption_continue)?;
    writeln!(sink, "\\hline")?;
    spec.header_row(sink)?;
    writeln!(sink, "\\hline")?;
    writeln!(sink, "\\endhead")?;
    writeln!(sink, "\\hline")?;
    writeln!(sink, "\\endfoot")?;
    writeln!(sink, "\\hline")?;
    writeln!(sink, "\\endlastfoot")?;
    for j in spec.j_min.get()..=spec.j_max.get() {
        gen_table_line(
            sink,
            NollIndex::new(j).expect("range starts at a valid index"),
        )?;
    }
    writeln!(sink, "\\hline")?;
    writeln!(sink, "\\end{{longtable}}")?;
    writeln!(sink, "\\end{{center}}")?;
    Ok(())
}

/// Writes the document preamble for a standalone table document.
pub fn gen_preamble<W: Write>(sink: &mut W) -> Result<()> {
    writeln!(sink, "\\documentclass[11pt,a4paper]{{article}}")?;
    writeln!(sink, "\\usepackage{{longtable}}")?;
    writeln!(
        sink,
        "\\title{{A Long Table of Zernike Circular Polynomials}}"
    )?;
    writeln!(sink, "\\author{{}}")?;
    writeln!(sink, "\\date{{}}")?;
    writeln!(sink)?;
    Ok(())
}

/// Writes the document body: title, the table, and nothing else.
pub fn gen_main_body<W: Write>(sink: &mut W, spec: &TableSpec) -> Result<()> {
    spec.validate()?;
    writeln!(sink, "\\begin{{document}}")?;
    writeln!(sink)?;
    writeln!(sink, "\\maketitle")?;
    writeln!(sink)?;
    gen_long_table(sink, spec)?;
    writeln!(sink)?;
    writeln!(sink, "\\end{{document}}")?;
    Ok(())
}

/// Writes a complete compilable document around the spec's table.
pub fn gen_standalone<W: Write>(sink: &mut W, spec: &TableSpec) -> Result<()> {
    gen_preamble(sink)?;
    gen_main_body(sink, spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn noll(j: u64) -> NollIndex {
        NollIndex::new(j).unwrap()
    }

    fn render(f: impl Fn(&mut Vec<u8>)) -> String {
        let mut buf = Vec::new();
        f(&mut buf);
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn table_line_examples() {
        let line = |j| render(|b| gen_table_line(b, noll(j)).unwrap());
        assert_eq!(
            line(4),
            "$4$ & $2$ & $0$ & $\\sqrt{3}$ & $2\\rho^{2} -1 $ \\\\\n"
        );
        assert_eq!(
            line(5),
            "$5$ & $2$ & $-2$ & $\\sqrt{6}$ & $\\rho^{2} \\sin(2\\theta)$ \\\\\n"
        );
    }

    #[test]
    fn long_table_structure() {
        let spec = TableSpec::for_range(noll(1), noll(10)).unwrap();
        let text = render(|b| gen_long_table(b, &spec).unwrap());
        assert!(text.starts_with("\\begin{center}\n\\begin{longtable}{ccrcp{0.55\\textwidth}}\n"));
        assert!(text.ends_with("\\hline\n\\end{longtable}\n\\end{center}\n"));
        for marker in ["\\endfirsthead", "\\endhead", "\\endfoot", "\\endlastfoot"] {
            assert_eq!(text.matches(marker).count(), 1, "{marker}");
        }
        let data_rows = text
            .lines()
            .filter(|l| l.ends_with("\\\\") && l.starts_with('$') && !l.contains("$j$"))
            .count();
        assert_eq!(data_rows, 10);
    }

    #[test]
    fn empty_range_is_rejected_before_writing() {
        let err = TableSpec::for_range(noll(5), noll(4));
        assert!(matches!(err, Err(Error::TableSpec { .. })));
    }

    #[test]
    fn standalone_document_is_balanced() {
        let spec = TableSpec::for_range(noll(1), noll(15)).unwrap();
        let text = render(|b| gen_standalone(b, &spec).unwrap());
        assert!(text.starts_with("\\documentclass[11pt,a4paper]{article}\n"));
        assert_eq!(text.matches("\\begin{document}").count(), 1);
        assert_eq!(text.matches("\\end{document}").count(), 1);
        assert_eq!(text.matches("\\usepackage{longtable}").count(), 1);
        for line in text.lines() {
            assert_eq!(line.matches('$').count() % 2, 0, "unbalanced $ in {line:?}");
        }
    }
}
