#include "ncfrob/nsy.hpp"

#include <charconv>
#include <sstream>

namespace ncfrob::nsy {

namespace {

std::size_t parse_count(const std::string& key, std::string_view text) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw InputError("invalid value for '" + key + "': '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::size_t Params::vertex(long long v) const {
    const auto nn = static_cast<long long>(n);
    return static_cast<std::size_t>(((v % nn) + nn) % nn);
}

std::size_t Params::mult(long long v) const { return mults.at(vertex(v)); }

void validate(const Params& p) {
    if (p.n < 1) throw InputError("n must be at least 1");
    if (p.ell < 1) throw InputError("ell must be at least 1");
    if (p.mults.size() != p.n) {
        throw InputError("expected " + std::to_string(p.n) + " multiplicities, got " +
                         std::to_string(p.mults.size()));
    }
    for (auto m : p.mults) {
        if (m < 1) throw InputError("every multiplicity must be at least 1");
    }
}

Params parse_params(const std::vector<std::string>& tokens) {
    Params p;
    bool have_n = false;
    bool have_ell = false;
    bool have_m = false;
    for (const auto& tok : tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw InputError("expected key=value, got '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (key == "n") {
            p.n = parse_count(key, value);
            have_n = true;
        } else if (key == "ell" || key == "l") {
            p.ell = parse_count(key, value);
            have_ell = true;
        } else if (key == "m") {
            p.mults.clear();
            std::stringstream ss(value);
            std::string part;
            while (std::getline(ss, part, ',')) p.mults.push_back(parse_count(key, part));
            have_m = true;
        } else {
            throw InputError("unknown parameter '" + key + "'");
        }
    }
    if (!have_n || !have_ell || !have_m) throw InputError("parameters n, ell and m are all required");
    validate(p);
    return p;
}

std::string format_params(const Params& p) {
    std::string out = "n=" + std::to_string(p.n) + " ell=" + std::to_string(p.ell) + " m=";
    for (std::size_t i = 0; i < p.mults.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.mults[i]);
    }
    return out;
}

std::string label(const BasisIndex& x) {
    return "X[" + std::to_string(x.i) + "," + std::to_string(x.j) + "]^(" + std::to_string(x.r) + "," +
           std::to_string(x.s) + ")";
}

Basis::Basis(const Params& p) : n_(p.n) {
    validate(p);
    for (std::size_t i = 0; i < p.n; ++i) {
        for (std::size_t j = 0; j < p.ell; ++j) {
            const std::size_t target = p.mult(static_cast<long long>(i + j));
            for (std::size_t r = 0; r < p.mults[i]; ++r) {
                for (std::size_t s = 0; s < target; ++s) {
                    BasisIndex x{i, j, r, s};
                    positions_.emplace(x, elements_.size());
                    elements_.push_back(x);
                }
            }
        }
    }
}

std::optional<std::size_t> Basis::find(const BasisIndex& x) const {
    auto it = positions_.find({x.i % n_, x.j, x.r, x.s});
    if (it == positions_.end()) return std::nullopt;
    return it->second;
}

std::size_t Basis::at(std::size_t i, std::size_t j, std::size_t r, std::size_t s) const {
    auto pos = find({i, j, r, s});
    if (!pos) throw InternalError("no basis element " + label({i, j, r, s}));
    return *pos;
}

std::size_t dimension(const Params& p) {
    validate(p);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < p.n; ++i) {
        for (std::size_t j = 0; j < p.ell; ++j) sum += p.mults[i] * p.mult(static_cast<long long>(i + j));
    }
    return sum;
}

std::vector<std::size_t> nakayama_permutation(const Params& p) {
    validate(p);
    std::vector<std::size_t> nu(p.n);
    for (std::size_t i = 0; i < p.n; ++i) nu[i] = p.vertex(static_cast<long long>(i + p.ell - 1));
    return nu;
}

bool is_frobenius(const Params& p) {
    const auto nu = nakayama_permutation(p);
    for (std::size_t i = 0; i < p.n; ++i) {
        if (p.mults[i] != p.mults[nu[i]]) return false;
    }
    return true;
}

Algebra build(const Params& p) {
    Basis basis(p);
    const std::size_t d = basis.size();
    std::vector<std::string> labels;
    labels.reserve(d);
    for (const auto& x : basis.elements()) labels.push_back(label(x));

    std::vector<Vector> products(d * d, Vector(d));
    for (std::size_t u = 0; u < d; ++u) {
        const auto& x = basis[u];
        for (std::size_t v = 0; v < d; ++v) {
            const auto& y = basis[v];
            if (y.i == p.vertex(static_cast<long long>(x.i + x.j)) && y.r == x.s && x.j + y.j < p.ell) {
                products[u * d + v].set(basis.at(x.i, x.j + y.j, x.r, y.s), 1);
            }
        }
    }
    Vector unit(d);
    for (std::size_t i = 0; i < p.n; ++i) {
        for (std::size_t r = 0; r < p.mults[i]; ++r) unit.set(basis.at(i, 0, r, r), 1);
    }
    auto data = std::make_shared<const AlgebraData>(std::move(labels), std::move(products), std::move(unit));
    return Algebra{p, std::move(basis), std::move(data)};
}

std::vector<PathIndex> path_basis(const Params& p) {
    validate(p);
    std::vector<PathIndex> out;
    for (std::size_t i = 0; i < p.n; ++i) {
        for (std::size_t k = 0; k < p.ell; ++k) {
            for (std::size_t r = 0; r < p.mults[i]; ++r) out.push_back({i, k, r});
        }
    }
    return out;
}

Matrix path_endomorphism(const Params& p, const BasisIndex& x) {
    const auto paths = path_basis(p);
    std::map<PathIndex, std::size_t> pos;
    for (std::size_t k = 0; k < paths.size(); ++k) pos.emplace(paths[k], k);

    Matrix m(paths.size(), paths.size());
    const std::size_t source = p.vertex(static_cast<long long>(x.i + x.j));
    for (std::size_t k = 0; k + x.j < p.ell; ++k) {
        m.set(pos.at({x.i, x.j + k, x.r}), pos.at({source, k, x.s}), 1);
    }
    return m;
}

AlgebraData build_oracle(const Params& p) {
    Basis basis(p);
    const std::size_t d = basis.size();
    const auto paths = path_basis(p);
    std::map<PathIndex, std::size_t> pos;
    for (std::size_t k = 0; k < paths.size(); ++k) pos.emplace(paths[k], k);

    std::vector<Matrix> endo;
    endo.reserve(d);
    for (const auto& x : basis.elements()) endo.push_back(path_endomorphism(p, x));

    // X[i,j]^(r,s) is the only basis map with a nonzero entry at
    // (alpha_{i,j}^r, alpha_{i+j,0}^s), so those entries are coordinates.
    auto to_x_basis = [&](const Matrix& m) {
        Vector coords(d);
        Matrix rebuilt(paths.size(), paths.size());
        for (std::size_t u = 0; u < d; ++u) {
            const auto& x = basis[u];
            const std::size_t source = p.vertex(static_cast<long long>(x.i + x.j));
            const Scalar c = m(pos.at({x.i, x.j, x.r}), pos.at({source, 0, x.s}));
            if (c != 0) {
                coords.set(u, c);
                for (std::size_t col = 0; col < endo[u].cols(); ++col) {
                    for (const auto& [row, v] : endo[u].column(col)) rebuilt.add(row, col, c * v);
                }
            }
        }
        if (rebuilt != m) throw InternalError("path-space endomorphism is not in the span of the X-basis");
        return coords;
    };

    std::vector<std::string> labels;
    for (const auto& x : basis.elements()) labels.push_back(label(x));
    std::vector<Vector> products;
    products.reserve(d * d);
    for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t v = 0; v < d; ++v) products.push_back(to_x_basis(endo[u] * endo[v]));
    }
    return AlgebraData(std::move(labels), std::move(products), to_x_basis(Matrix::identity(paths.size())));
}

ComultData delta(const Algebra& a) {
    const Params& p = a.params;
    const std::size_t d = a.basis.size();
    const auto ell = static_cast<long long>(p.ell);
    Matrix out(d * d, d);
    for (std::size_t u = 0; u < d; ++u) {
        const auto& x = a.basis[u];
        Vector column(d * d);
        for (std::size_t k = 0; x.j + k < p.ell; ++k) {
            const auto mid = static_cast<long long>(x.i + x.j + k);
            const std::size_t left_vertex = p.vertex(mid);
            const std::size_t right_vertex = p.vertex(mid - ell + 1);
            const std::size_t m_left = p.mults[left_vertex];
            const std::size_t m_right = p.mults[right_vertex];
            for (std::size_t t = 0; t < m_left; ++t) {
                for (std::size_t tp = 0; tp < m_right; ++tp) {
                    // Equal multiplicities keep only the diagonal t == t'.
                    if (m_left == m_right && t != tp) continue;
                    const std::size_t first = a.basis.at(x.i, x.j + k, x.r, t);
                    const std::size_t second = a.basis.at(right_vertex, p.ell - 1 - k, tp, x.s);
                    column.add(first * d + second, 1);
                }
            }
        }
        out.set_column(u, std::move(column));
    }
    return ComultData(a.data, std::move(out));
}

Vector formula_counit(const Algebra& a) {
    Vector eps(a.basis.size());
    for (std::size_t u = 0; u < a.basis.size(); ++u) {
        const auto& x = a.basis[u];
        if (x.j + 1 == a.params.ell && x.r == x.s) eps.set(u, 1);
    }
    return eps;
}

std::optional<Vector> epsilon(const Algebra& a) {
    if (!is_frobenius(a.params)) return std::nullopt;
    return formula_counit(a);
}

CasimirElement casimir(const Algebra& a) {
    return CasimirElement{a.data, delta(a).apply(a.data->unit())};
}

}  // namespace ncfrob::nsy
