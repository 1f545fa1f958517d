#include "support.hpp"

#include <regex>
#include <stdexcept>

namespace testsupport {

namespace {

std::vector<std::string> split(const std::string& text, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(sep, pos);
        out.push_back(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + sep.size();
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(' ');
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

}  // namespace

std::string expand_label(const std::string& compact) {
    static const std::regex re(R"(X(\d)(\d)\^(\d)(\d))");
    std::smatch m;
    const std::string t = trim(compact);
    if (std::regex_match(t, m, re)) {
        return "X[" + m[1].str() + "," + m[2].str() + "]^(" + m[3].str() + "," + m[4].str() + ")";
    }
    return t;
}

Vector parse_combination(const std::string& text, const AlgebraData& a, std::size_t arity) {
    const std::size_t d = a.dim();
    std::size_t size = 1;
    for (std::size_t k = 0; k < arity; ++k) size *= d;
    Vector out(size);
    if (trim(text) == "0") return out;
    for (const auto& term : split(text, " + ")) {
        const auto factors = split(term, "⊗");
        if (factors.size() != arity) throw std::runtime_error("bad term arity in '" + term + "'");
        std::size_t flat = 0;
        for (const auto& f : factors) {
            const std::string label = expand_label(f);
            std::size_t idx = d;
            for (std::size_t i = 0; i < d; ++i) {
                if (a.label(i) == label) idx = i;
            }
            if (idx == d) throw std::runtime_error("unknown label '" + label + "'");
            flat = flat * d + idx;
        }
        out.add(flat, 1);
    }
    return out;
}

std::vector<ReferenceDelta> reference_deltas() {
    const nsy::Params b11{2, 2, {1, 1}};
    const nsy::Params b21{2, 2, {2, 1}};
    const nsy::Params c1212{4, 3, {1, 2, 1, 2}};
    const nsy::Params c1122{4, 3, {1, 1, 2, 2}};
    return {
        {b11, "X00^00", "X00^00 ⊗ X11^00 + X01^00 ⊗ X00^00"},
        {b11, "X01^00", "X01^00 ⊗ X01^00"},
        {b11, "X10^00", "X10^00 ⊗ X01^00 + X11^00 ⊗ X10^00"},
        {b11, "X11^00", "X11^00 ⊗ X11^00"},
        {b21, "X00^00", "X00^00 ⊗ X11^00 + X00^01 ⊗ X11^00 + X01^00 ⊗ X00^00 + X01^00 ⊗ X00^10"},
        {b21, "X00^01", "X00^00 ⊗ X11^01 + X00^01 ⊗ X11^01 + X01^00 ⊗ X00^01 + X01^00 ⊗ X00^11"},
        {b21, "X00^10", "X00^10 ⊗ X11^00 + X00^11 ⊗ X11^00 + X01^10 ⊗ X00^00 + X01^10 ⊗ X00^10"},
        {b21, "X00^11", "X00^10 ⊗ X11^01 + X00^11 ⊗ X11^01 + X01^10 ⊗ X00^01 + X01^10 ⊗ X00^11"},
        {b21, "X01^00", "X01^00 ⊗ X01^00 + X01^00 ⊗ X01^10"},
        {b21, "X01^10", "X01^10 ⊗ X01^00 + X01^10 ⊗ X01^10"},
        {b21, "X10^00", "X10^00 ⊗ X01^00 + X10^00 ⊗ X01^10 + X11^00 ⊗ X10^00 + X11^01 ⊗ X10^00"},
        {b21, "X11^00", "X11^00 ⊗ X11^00 + X11^01 ⊗ X11^00"},
        {b21, "X11^01", "X11^00 ⊗ X11^01 + X11^01 ⊗ X11^01"},
        {c1212, "X00^00", "X00^00 ⊗ X22^00 + X01^00 ⊗ X31^00 + X01^01 ⊗ X31^10 + X02^00 ⊗ X00^00"},
        {c1212, "X21^01", "X21^00 ⊗ X12^01 + X21^01 ⊗ X12^11 + X22^00 ⊗ X21^01"},
        {c1122, "X21^01", "X21^00 ⊗ X12^01 + X21^01 ⊗ X12^01 + X22^00 ⊗ X21^01 + X22^00 ⊗ X21^11"},
    };
}

std::vector<std::vector<std::string>> reference_table_b22_11() {
    return {
        {"X00^00", "X01^00", "0", "0"},
        {"0", "0", "X01^00", "0"},
        {"0", "0", "X10^00", "X11^00"},
        {"X11^00", "0", "0", "0"},
    };
}

std::vector<std::vector<std::string>> reference_table_b22_21() {
    return {
        {"X00^00", "X00^01", "0", "0", "X01^00", "0", "0", "0", "0"},
        {"0", "0", "X00^00", "X00^01", "0", "X01^00", "0", "0", "0"},
        {"X00^10", "X00^11", "0", "0", "X01^10", "0", "0", "0", "0"},
        {"0", "0", "X00^10", "X00^11", "0", "X01^10", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "X01^00", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "X01^10", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "X10^00", "X11^00", "X11^01"},
        {"X11^00", "X11^01", "0", "0", "0", "0", "0", "0", "0"},
        {"0", "0", "X11^00", "X11^01", "0", "0", "0", "0", "0"},
    };
}

std::vector<nsy::Params> sweep_grid(std::size_t nmax, std::size_t lmax, std::size_t mmax) {
    std::vector<nsy::Params> out;
    for (std::size_t n = 1; n <= nmax; ++n) {
        for (std::size_t ell = 1; ell <= lmax; ++ell) {
            std::vector<std::size_t> m(n, 1);
            while (true) {
                out.push_back({n, ell, m});
                std::size_t k = 0;
                while (k < n && m[k] == mmax) m[k++] = 1;
                if (k == n) break;
                ++m[k];
            }
        }
    }
    return out;
}

std::vector<NamedHopf> groupoid_fixtures() {
    std::vector<NamedHopf> out;
    for (const auto& spec : small_groupoid_fixtures(3)) {
        std::string name = "groupoid";
        for (const auto& c : spec) name += " " + std::to_string(c.objects) + ":" + std::to_string(c.group_order);
        out.push_back({name, groupoid_algebra(groupoid_from_components(spec))});
    }
    return out;
}

std::vector<NamedHopf> group_fixtures() {
    std::vector<NamedHopf> out;
    for (std::size_t n = 1; n <= 4; ++n) out.push_back({"k[Z/" + std::to_string(n) + "]", hopf_group_algebra(cyclic_group(n))});
    return out;
}

std::vector<NamedQTG> qtg_fixtures() {
    return {
        {"qtg L=k B=M2", qtg::named_instance("trivial", "matrix:2")},
        {"qtg L=k B=k[Z/2]", qtg::named_instance("trivial", "group:2")},
        {"qtg L=k[Z/2] B=k[Z/2]", qtg::named_instance("cyclic:2", "group:2")},
        {"qtg L=k[Z/2] B=k[Z/3] inversion", qtg::named_instance("cyclic:2", "group:3", "inversion")},
    };
}

std::vector<NamedHopf> all_weak_hopf_fixtures() {
    auto out = groupoid_fixtures();
    for (auto& g : group_fixtures()) out.push_back(std::move(g));
    for (const auto& q : qtg_fixtures()) out.push_back({q.name, qtg::build(q.input)});
    return out;
}

Scalar determinant(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Scalar det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        const Scalar entry = m(0, c);
        if (entry == 0) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                const Scalar v = m(r, k);
                if (v != 0) minor.set(r - 1, cc, v);
                ++cc;
            }
        }
        const Scalar sub = determinant(minor);
        det += (c % 2 == 0 ? entry : Scalar(-entry)) * sub;
    }
    return det;
}

}  // namespace testsupport
