#pragma once

// Human-readable rendering: labelled linear combinations, multiplication
// and comultiplication tables, verification reports.

#include <string>
#include <vector>

#include "ncfrob/finalg.hpp"

namespace ncfrob::fmt {

enum class Format { Json, Markdown, Csv };

/// "json", "markdown" (or "md"), "csv"; throws InputError otherwise.
Format parse_format(const std::string& text);

/// "2*X[0,0]^(0,0) - X[1,1]^(0,0)"; "0" for the zero vector.
std::string combination(const Vector& v, const std::vector<std::string>& labels);
/// Pure tensors joined with " ⊗ ", over labels^arity.
std::string tensor_combination(const Vector& v, const std::vector<std::string>& labels, std::size_t arity);

/// A table: header row plus body rows.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Markdown or CSV text (Json is rejected; use the JSON exporters).
std::string render(const Table& t, Format f);

/// Row x column: cell (i, j) is e_i e_j.
Table multiplication_table(const AlgebraData& a);
/// One row per basis element: element, Delta(element).
Table delta_table(const ComultData& c);
/// One row per basis element: element, eps(element).
Table functional_table(const Vector& eps, const std::vector<std::string>& labels, const std::string& name);
/// One row per check: name, PASS/FAIL, indices, lhs, rhs.
Table report_table(const VerificationReport& r, const std::vector<std::string>& labels);

}  // namespace ncfrob::fmt
