#include "ncfrob/format.hpp"

#include <cmath>

namespace ncfrob::fmt {

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string join_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, name] : terms) {
        const bool negative = sgn(c) < 0;
        const Scalar mag = negative ? Scalar(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += name;
        first = false;
    }
    return out;
}

std::string tensor_name(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += " ⊗ ";
        out += parts[k];
    }
    return out;
}

}  // namespace

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "markdown" || text == "md") return Format::Markdown;
    if (text == "csv") return Format::Csv;
    throw InputError("unknown format '" + text + "'; expected json, markdown or csv");
}

std::string combination(const Vector& v, const std::vector<std::string>& labels) {
    std::vector<std::pair<Scalar, std::string>> terms;
    for (const auto& [k, c] : v) terms.emplace_back(c, labels.at(k));
    return join_terms(terms);
}

std::string tensor_combination(const Vector& v, const std::vector<std::string>& labels, std::size_t arity) {
    TensorIndex index(std::vector<std::size_t>(arity, labels.size()));
    std::vector<std::pair<Scalar, std::string>> terms;
    for (const auto& [k, c] : v) {
        std::vector<std::string> parts;
        for (auto i : index.unflatten(k)) parts.push_back(labels.at(i));
        std::string name = tensor_name(parts);
        if (c != 1 && c != -1) name = "(" + name + ")";
        terms.emplace_back(c, std::move(name));
    }
    return join_terms(terms);
}

std::string render(const Table& t, Format f) {
    std::string out;
    if (f == Format::Markdown) {
        auto line = [&](const std::vector<std::string>& cells) {
            out += "|";
            for (const auto& c : cells) out += " " + md_cell(c) + " |";
            out += "\n";
        };
        line(t.header);
        out += "|";
        for (std::size_t i = 0; i < t.header.size(); ++i) out += "---|";
        out += "\n";
        for (const auto& r : t.rows) line(r);
        return out;
    }
    if (f == Format::Csv) {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out += ",";
                out += csv_cell(cells[i]);
            }
            out += "\n";
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        return out;
    }
    throw InputError("tables render as markdown or csv only");
}

Table multiplication_table(const AlgebraData& a) {
    Table t;
    t.header.push_back("*");
    for (const auto& l : a.labels()) t.header.push_back(l);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::vector<std::string> row{a.label(i)};
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(combination(a.product(i, j), a.labels()));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table delta_table(const ComultData& c) {
    Table t{{"x", "Delta(x)"}, {}};
    for (std::size_t i = 0; i < c.dim(); ++i) {
        t.rows.push_back({c.algebra->label(i), tensor_combination(c.delta.column(i), c.algebra->labels(), 2)});
    }
    return t;
}

Table functional_table(const Vector& eps, const std::vector<std::string>& labels, const std::string& name) {
    Table t{{"x", name + "(x)"}, {}};
    for (std::size_t i = 0; i < labels.size(); ++i) t.rows.push_back({labels[i], to_string(eps[i])});
    return t;
}

Table report_table(const VerificationReport& r, const std::vector<std::string>& labels) {
    Table t{{"check", "result", "at", "lhs", "rhs"}, {}};
    const std::size_t d = labels.size();
    auto render_side = [&](const Vector& v) {
        if (v.dim() == d) return combination(v, labels);
        for (std::size_t arity = 2; arity <= 3; ++arity) {
            if (v.dim() == static_cast<std::size_t>(std::llround(std::pow(d, arity)))) {
                return tensor_combination(v, labels, arity);
            }
        }
        // Scalars and other shapes: raw coordinates.
        std::string out;
        for (const auto& [k, c] : v) out += (out.empty() ? "" : " ") + std::to_string(k) + ":" + to_string(c);
        return out.empty() ? std::string("0") : out;
    };
    for (const auto& c : r.checks()) {
        if (c.passed) {
            t.rows.push_back({c.name, "PASS", "", "", ""});
            continue;
        }
        std::string at;
        for (auto i : c.witness->indices) {
            if (!at.empty()) at += ", ";
            at += i < d ? labels[i] : std::to_string(i);
        }
        t.rows.push_back({c.name, "FAIL", at, render_side(c.witness->lhs), render_side(c.witness->rhs)});
    }
    return t;
}

}  // namespace ncfrob::fmt
