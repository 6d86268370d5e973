//! Fixed expected table rows. Any change detected here is a breaking change
//! of the output format, not a refactoring detail.

use zcp_core::indexing::NollIndex;
use zcp_core::tablegen::gen_table_line;

/// (j, n, m, normalization, polynomial); compared whitespace-insensitively.
#[rustfmt::skip]
const GOLDEN_ROWS: &[(u64, &str, &str, &str, &str)] = &[
    (1, "0", "0", "\\sqrt{1}", "1"),
    (2, "1", "-1", "\\sqrt{4}", "\\rho \\cos(\\theta)"),
    (3, "1", "1", "\\sqrt{4}", "\\rho \\sin(\\theta)"),
    (4, "2", "0", "\\sqrt{3}", "2\\rho^{2} -1"),
    (5, "2", "-2", "\\sqrt{6}", "\\rho^{2} \\sin(2\\theta)"),
    (6, "2", "2", "\\sqrt{6}", "\\rho^{2} \\cos(2\\theta)"),
    (7, "3", "-1", "\\sqrt{8}", "(3\\rho^{3} -2\\rho )\\sin(\\theta)"),
    (8, "3", "1", "\\sqrt{8}", "(3\\rho^{3} -2\\rho )\\cos(\\theta)"),
    (9, "3", "-3", "\\sqrt{8}", "\\rho^{3} \\sin(3\\theta)"),
    (10, "3", "3", "\\sqrt{8}", "\\rho^{3} \\cos(3\\theta)"),
    (11, "4", "0", "\\sqrt{5}", "6\\rho^{4} -6\\rho^{2} +1"),
    (12, "4", "-2", "\\sqrt{10}", "(4\\rho^{4} -3\\rho^{2} )\\cos(2\\theta)"),
    (13, "4", "2", "\\sqrt{10}", "(4\\rho^{4} -3\\rho^{2} )\\sin(2\\theta)"),
    (14, "4", "-4", "\\sqrt{10}", "\\rho^{4} \\cos(4\\theta)"),
    (15, "4", "4", "\\sqrt{10}", "\\rho^{4} \\sin(4\\theta)"),
    (
        46,
        "9",
        "-1",
        "\\sqrt{20}",
        "(126\\rho^{9} -280\\rho^{7} +210\\rho^{5} -60\\rho^{3} +5\\rho )\\cos(\\theta)",
    ),
    (
        47,
        "9",
        "1",
        "\\sqrt{20}",
        "(126\\rho^{9} -280\\rho^{7} +210\\rho^{5} -60\\rho^{3} +5\\rho )\\sin(\\theta)",
    ),
    (464, "29", "-29", "\\sqrt{60}", "\\rho^{29} \\cos(29\\theta)"),
    (465, "29", "29", "\\sqrt{60}", "\\rho^{29} \\sin(29\\theta)"),
];

fn strip_whitespace(text: &str) -> String {
    text.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Splits a generated row into its five cell payloads, dropping math-mode
/// delimiters, the row terminator and all whitespace.
fn cells(line: &str) -> Vec<String> {
    line.trim_end()
        .trim_end_matches("\\\\")
        .split('&')
        .map(|cell| strip_whitespace(cell.trim().trim_matches('$')))
        .collect()
}

#[test]
fn generated_rows_match_golden_cells() {
    for &(j, n, m, norm, poly) in GOLDEN_ROWS {
        let mut buf = Vec::new();
        gen_table_line(&mut buf, NollIndex::new(j).unwrap()).unwrap();
        let line = String::from_utf8(buf).unwrap();
        let actual = cells(&line);
        let expected = vec![
            j.to_string(),
            n.to_string(),
            m.to_string(),
            strip_whitespace(norm),
            strip_whitespace(poly),
        ];
        assert_eq!(actual, expected, "row j={j}: {line:?}");
    }
}
