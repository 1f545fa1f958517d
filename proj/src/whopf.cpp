#include "ncfrob/whopf.hpp"

#include <random>
#include <utility>

namespace ncfrob::whopf {

namespace {

struct Term2 {
    Scalar coeff;
    std::size_t first;
    std::size_t second;
};

std::vector<Term2> split(const Vector& t, std::size_t d) {
    std::vector<Term2> out;
    out.reserve(t.nnz());
    for (const auto& [idx, v] : t) out.push_back({v, idx / d, idx % d});
    return out;
}

Vector one_dim(const Scalar& s) { return Vector::unit_vector(1, 0, s); }

}  // namespace

WeakHopfData::WeakHopfData(AlgebraPtr alg, Matrix delta, Vector eps, Matrix s)
    : algebra(std::move(alg)), delta_wk(std::move(delta)), epsilon_wk(std::move(eps)), antipode(std::move(s)) {
    if (!algebra) throw InputError("weak Hopf data requires an algebra");
    const std::size_t d = algebra->dim();
    if (delta_wk.rows() != d * d || delta_wk.cols() != d) throw InputError("delta_wk must be dim^2 x dim");
    if (epsilon_wk.dim() != d) throw InputError("epsilon_wk has wrong dimension");
    if (antipode.rows() != d || antipode.cols() != d) throw InputError("antipode must be dim x dim");
}

Vector tensor_multiply(const AlgebraData& a, const Vector& u, const Vector& v, std::size_t arity) {
    const std::size_t d = a.dim();
    TensorIndex idx(std::vector<std::size_t>(arity, d));
    Vector out(idx.size());
    for (const auto& [i, x] : u) {
        const auto mi = idx.unflatten(i);
        for (const auto& [j, y] : v) {
            const auto mj = idx.unflatten(j);
            Vector prod = a.product(mi[0], mj[0]);
            for (std::size_t k = 1; k < arity; ++k) prod = tensor(prod, a.product(mi[k], mj[k]));
            out.add_scaled(prod, x * y);
        }
    }
    return out;
}

Vector epsilon_s(const WeakHopfData& h, const Vector& x) {
    const AlgebraData& a = *h.algebra;
    Vector out(a.dim());
    for (const auto& t : split(h.delta_wk * a.unit(), a.dim())) {
        out.add(t.first, t.coeff * dot(h.epsilon_wk, a.multiply(x, a.basis(t.second))));
    }
    return out;
}

Vector epsilon_t(const WeakHopfData& h, const Vector& x) {
    const AlgebraData& a = *h.algebra;
    Vector out(a.dim());
    for (const auto& t : split(h.delta_wk * a.unit(), a.dim())) {
        out.add(t.second, t.coeff * dot(h.epsilon_wk, a.multiply(a.basis(t.first), x)));
    }
    return out;
}

Matrix epsilon_s_matrix(const WeakHopfData& h) {
    Matrix m(h.dim(), h.dim());
    for (std::size_t x = 0; x < h.dim(); ++x) m.set_column(x, epsilon_s(h, h.algebra->basis(x)));
    return m;
}

Matrix epsilon_t_matrix(const WeakHopfData& h) {
    Matrix m(h.dim(), h.dim());
    for (std::size_t x = 0; x < h.dim(); ++x) m.set_column(x, epsilon_t(h, h.algebra->basis(x)));
    return m;
}

VerificationReport check_weak_hopf(const WeakHopfData& h) {
    const AlgebraData& a = *h.algebra;
    const std::size_t d = a.dim();
    VerificationReport report = check_algebra(a);

    const ComultData co = h.coalgebra();
    report.append(check_coassoc(co));
    report.append(check_counit(co, h.epsilon_wk));

    // Delta(ab) = Delta(a) Delta(b)
    {
        std::optional<Witness> fail;
        for (std::size_t x = 0; x < d && !fail; ++x) {
            for (std::size_t y = 0; y < d; ++y) {
                Vector lhs = h.delta_wk * a.product(x, y);
                Vector rhs = tensor_multiply(a, h.delta_wk.column(x), h.delta_wk.column(y), 2);
                if (lhs != rhs) {
                    fail = Witness{{x, y}, std::move(lhs), std::move(rhs)};
                    break;
                }
            }
        }
        report.record("multiplicativity", std::move(fail));
    }

    // eps(abc) = eps(a b_1) eps(b_2 c) = eps(a b_2) eps(b_1 c)
    {
        std::vector<Vector> left(d, Vector(d));   // left[a][x] = eps(a x)
        std::vector<Vector> right(d, Vector(d));  // right[c][x] = eps(x c)
        for (std::size_t x = 0; x < d; ++x) {
            for (std::size_t y = 0; y < d; ++y) {
                const Scalar v = dot(h.epsilon_wk, a.product(x, y));
                left[x].set(y, v);
                right[y].set(x, v);
            }
        }
        std::optional<Witness> fail1;
        std::optional<Witness> fail2;
        for (std::size_t x = 0; x < d; ++x) {
            for (std::size_t y = 0; y < d; ++y) {
                const auto terms = split(h.delta_wk.column(y), d);
                const Vector& xy = a.product(x, y);
                for (std::size_t z = 0; z < d; ++z) {
                    if (fail1 && fail2) break;
                    const Scalar whole = dot(xy, right[z]);
                    Scalar s1 = 0;
                    Scalar s2 = 0;
                    for (const auto& t : terms) {
                        s1 += t.coeff * left[x][t.first] * right[z][t.second];
                        s2 += t.coeff * left[x][t.second] * right[z][t.first];
                    }
                    if (!fail1 && whole != s1) fail1 = Witness{{x, y, z}, one_dim(whole), one_dim(s1)};
                    if (!fail2 && whole != s2) fail2 = Witness{{x, y, z}, one_dim(whole), one_dim(s2)};
                }
            }
        }
        report.record("weak_counit_1", std::move(fail1));
        report.record("weak_counit_2", std::move(fail2));
    }

    // Delta^2(1) = (Delta(1) (x) 1)(1 (x) Delta(1)) = (1 (x) Delta(1))(Delta(1) (x) 1)
    {
        const Vector d1 = h.delta_wk * a.unit();
        const std::array<std::size_t, 2> dims{d, d};
        const Vector d2 = apply_to_factor(d1, dims, 0, h.delta_wk);
        const Vector d1_1 = tensor(d1, a.unit());
        const Vector one_d1 = tensor(a.unit(), d1);
        Vector r1 = tensor_multiply(a, d1_1, one_d1, 3);
        Vector r2 = tensor_multiply(a, one_d1, d1_1, 3);
        report.record("weak_unit_1", d2 == r1 ? std::nullopt : std::optional(Witness{{}, d2, r1}));
        report.record("weak_unit_2", d2 == r2 ? std::nullopt : std::optional(Witness{{}, d2, r2}));
    }

    // Antipode axioms.
    {
        const Matrix& s = h.antipode;
        std::optional<Witness> src;
        std::optional<Witness> tgt;
        std::optional<Witness> sandwich;
        const std::array<std::size_t, 2> dims{d, d};
        for (std::size_t x = 0; x < d; ++x) {
            const Vector ex = a.basis(x);
            const auto terms = split(h.delta_wk.column(x), d);
            if (!src) {
                Vector lhs(d);
                for (const auto& t : terms) lhs.add_scaled(a.multiply(s.column(t.first), a.basis(t.second)), t.coeff);
                Vector rhs = epsilon_s(h, ex);
                if (lhs != rhs) src = Witness{{x}, std::move(lhs), std::move(rhs)};
            }
            if (!tgt) {
                Vector lhs(d);
                for (const auto& t : terms) lhs.add_scaled(a.multiply(a.basis(t.first), s.column(t.second)), t.coeff);
                Vector rhs = epsilon_t(h, ex);
                if (lhs != rhs) tgt = Witness{{x}, std::move(lhs), std::move(rhs)};
            }
            if (!sandwich) {
                const Vector d2 = apply_to_factor(h.delta_wk.column(x), dims, 0, h.delta_wk);
                Vector lhs(d);
                for (const auto& [idx, c] : d2) {
                    const std::size_t p = idx / (d * d);
                    const std::size_t q = (idx / d) % d;
                    const std::size_t r = idx % d;
                    lhs.add_scaled(a.multiply(a.multiply(s.column(p), a.basis(q)), s.column(r)), c);
                }
                if (lhs != s.column(x)) sandwich = Witness{{x}, std::move(lhs), s.column(x)};
            }
        }
        report.record("antipode_source", std::move(src));
        report.record("antipode_target", std::move(tgt));
        report.record("antipode_sandwich", std::move(sandwich));
    }
    return report;
}

std::array<bool, 4> hopf_conditions(const WeakHopfData& h) {
    const AlgebraData& a = *h.algebra;
    const std::size_t d = a.dim();
    std::array<bool, 4> c{};
    c[0] = (h.delta_wk * a.unit()) == tensor(a.unit(), a.unit());

    c[1] = true;
    for (std::size_t x = 0; x < d && c[1]; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            if (dot(h.epsilon_wk, a.product(x, y)) != h.epsilon_wk[x] * h.epsilon_wk[y]) {
                c[1] = false;
                break;
            }
        }
    }

    c[2] = true;
    c[3] = true;
    for (std::size_t x = 0; x < d; ++x) {
        const Vector expected = h.epsilon_wk[x] * a.unit();
        Vector s_left(d);
        Vector s_right(d);
        for (const auto& t : split(h.delta_wk.column(x), d)) {
            s_left.add_scaled(a.multiply(h.antipode.column(t.first), a.basis(t.second)), t.coeff);
            s_right.add_scaled(a.multiply(a.basis(t.first), h.antipode.column(t.second)), t.coeff);
        }
        if (s_left != expected) c[2] = false;
        if (s_right != expected) c[3] = false;
    }
    return c;
}

bool is_hopf(const WeakHopfData& h) {
    const auto c = hopf_conditions(h);
    if (c[1] != c[0] || c[2] != c[0] || c[3] != c[0]) {
        throw InternalError("Hopf conditions disagree on a weak Hopf algebra");
    }
    return c[0];
}

IntegralSpace integral_space(const WeakHopfData& h, Side side) {
    const AlgebraData& a = *h.algebra;
    const std::size_t d = a.dim();
    RowReducer reducer(d);
    for (std::size_t x = 0; x < d; ++x) {
        const Vector ex = a.basis(x);
        Matrix m = side == Side::Left
                       ? a.left_multiplication(ex) - a.left_multiplication(epsilon_t(h, ex))
                       : a.right_multiplication(ex) - a.right_multiplication(epsilon_s(h, ex));
        for (const auto& row : m.row_vectors()) {
            if (!row.is_zero()) reducer.add_equation(row);
        }
    }
    IntegralSpace space{side, reducer.kernel()};
    if (space.basis.empty()) throw InternalError("integral space is zero; the input is not a weak Hopf algebra");
    return space;
}

bool is_left_integral(const WeakHopfData& h, const Vector& lambda) {
    const AlgebraData& a = *h.algebra;
    for (std::size_t x = 0; x < a.dim(); ++x) {
        const Vector ex = a.basis(x);
        if (a.multiply(ex, lambda) != a.multiply(epsilon_t(h, ex), lambda)) return false;
    }
    return true;
}

Matrix psi_map(const WeakHopfData& h, const Vector& lambda) {
    const std::size_t d = h.dim();
    Matrix m(d, d);
    for (const auto& t : split(h.delta_wk * lambda, d)) m.add(t.first, t.second, t.coeff);
    return m;
}

Matrix phi_map(const WeakHopfData& h, const Vector& lambda) {
    const std::size_t d = h.dim();
    Matrix m(d, d);
    std::vector<Vector> cols(d, Vector(d));
    for (const auto& t : split(h.delta_wk * lambda, d)) {
        cols[t.first].add_scaled(h.antipode.column(t.second), t.coeff);
    }
    for (std::size_t k = 0; k < d; ++k) m.set_column(k, std::move(cols[k]));
    return m;
}

Matrix phi_prime_map(const WeakHopfData& h, const Vector& lambda) {
    const std::size_t d = h.dim();
    Matrix m(d, d);
    for (const auto& t : split(h.delta_wk * lambda, d)) {
        for (const auto& [k, s] : h.antipode.column(t.second)) m.add(t.first, k, t.coeff * s);
    }
    return m;
}

IntegralSearch find_nondegenerate_integral(const WeakHopfData& h, std::uint64_t seed, std::size_t attempts) {
    IntegralSearch search;
    search.seed = seed;
    const auto space = integral_space(h, Side::Left);
    const Vector one = h.algebra->unit();

    auto try_candidate = [&](const Vector& lambda) {
        ++search.candidates_tried;
        if (lambda.is_zero()) return false;
        const Matrix psi = psi_map(h, lambda);
        if (!is_invertible(psi)) return false;
        auto dual = solve_linear(psi, one);
        if (!dual) throw InternalError("invertible Psi has no preimage of 1");
        search.found = NondegenerateIntegral{lambda, std::move(*dual)};
        return true;
    };

    Vector sum(h.dim());
    for (const auto& v : space.basis) {
        if (try_candidate(v)) return search;
        sum += v;
    }
    if (space.basis.size() > 1 && try_candidate(sum)) return search;
    // Raw engine output mapped by modulo so results do not depend on the
    // standard library's distribution implementation.
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        Vector combo(h.dim());
        for (const auto& v : space.basis) {
            const auto coeff = static_cast<long>(rng() % 7) - 3;
            combo.add_scaled(v, coeff);
        }
        if (try_candidate(combo)) return search;
    }
    return search;
}

ComultData frobenius_from_integral(const WeakHopfData& h, const Vector& lambda) {
    const AlgebraData& a = *h.algebra;
    const std::size_t d = a.dim();
    const std::array<std::size_t, 2> dims{d, d};
    // Lambda_1 (x) S(Lambda_2)
    const Vector twisted = apply_to_factor(h.delta_wk * lambda, dims, 1, h.antipode);
    Matrix delta(d * d, d);
    for (std::size_t x = 0; x < d; ++x) {
        const Vector ex = a.basis(x);
        Vector lhs = apply_to_factor(twisted, dims, 1, a.right_multiplication(ex));
        Vector rhs = apply_to_factor(twisted, dims, 0, a.left_multiplication(ex));
        if (lhs != rhs) {
            throw PreconditionError("Lambda_1 (x) S(Lambda_2) h != h Lambda_1 (x) S(Lambda_2) at h = " +
                                    a.label(x) + "; not a left integral");
        }
        delta.set_column(x, std::move(lhs));
    }
    ComultData out(h.algebra, std::move(delta));
    out.counit = solve_counit(out).counit;
    return out;
}

}  // namespace ncfrob::whopf
