#include "ncfrob/finalg.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace ncfrob {

namespace {

/// d x d^2 matrix of the multiplication map m: A (x) A -> A.
Matrix multiplication_matrix(const AlgebraData& a) {
    const std::size_t d = a.dim();
    Matrix m(d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m.set_column(i * d + j, a.product(i, j));
    }
    return m;
}

Matrix functional_matrix(const Vector& eps) {
    Matrix m(1, eps.dim());
    for (const auto& [k, v] : eps) m.set(0, k, v);
    return m;
}

}  // namespace

// ----------------------------------------------------------- AlgebraData

AlgebraData::AlgebraData(std::vector<std::string> labels, std::vector<Vector> products, Vector unit)
    : labels_(std::move(labels)), products_(std::move(products)), unit_(std::move(unit)) {
    const std::size_t d = labels_.size();
    if (d == 0) throw InputError("algebra must have dimension at least 1");
    if (products_.size() != d * d) throw InputError("structure constant table must have dim^2 entries");
    for (const auto& p : products_) {
        if (p.dim() != d) throw InputError("structure constant vector has wrong dimension");
    }
    if (unit_.dim() != d) throw InputError("unit vector has wrong dimension");
}

Vector AlgebraData::multiply(const Vector& x, const Vector& y) const {
    if (x.dim() != dim() || y.dim() != dim()) throw InputError("multiply: dimension mismatch");
    Vector out(dim());
    for (const auto& [i, a] : x) {
        for (const auto& [j, b] : y) out.add_scaled(product(i, j), a * b);
    }
    return out;
}

Matrix AlgebraData::left_multiplication(const Vector& x) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(x, basis(j)));
    return m;
}

Matrix AlgebraData::right_multiplication(const Vector& x) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(basis(j), x));
    return m;
}

AlgebraData AlgebraData::with_product(std::size_t i, std::size_t j, Vector value) const {
    AlgebraData copy = *this;
    if (i >= dim() || j >= dim()) throw InputError("with_product: index out of range");
    if (value.dim() != dim()) throw InputError("with_product: wrong dimension");
    copy.products_[i * dim() + j] = std::move(value);
    return copy;
}

Vector tensor(const Vector& x, const Vector& y) {
    Vector out(x.dim() * y.dim());
    for (const auto& [i, a] : x) {
        for (const auto& [j, b] : y) out.set(i * y.dim() + j, a * b);
    }
    return out;
}

Vector tensor(const Vector& x, const Vector& y, const Vector& z) { return tensor(tensor(x, y), z); }

ComultData::ComultData(AlgebraPtr alg, Matrix d, std::optional<Vector> eps)
    : algebra(std::move(alg)), delta(std::move(d)), counit(std::move(eps)) {
    if (!algebra) throw InputError("comultiplication requires an algebra");
    const std::size_t n = algebra->dim();
    if (delta.cols() != n || delta.rows() != n * n) {
        throw InputError("comultiplication matrix must be dim^2 x dim");
    }
    if (counit && counit->dim() != n) throw InputError("counit has wrong dimension");
}

// ---------------------------------------------------- VerificationReport

void VerificationReport::record(std::string name, std::optional<Witness> failure) {
    CheckResult r;
    r.name = std::move(name);
    r.passed = !failure.has_value();
    r.witness = std::move(failure);
    checks_.push_back(std::move(r));
}

void VerificationReport::append(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

bool VerificationReport::passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
    for (const auto& c : checks_) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

const CheckResult* VerificationReport::first_failure() const {
    for (const auto& c : checks_) {
        if (!c.passed) return &c;
    }
    return nullptr;
}

// -------------------------------------------------------------- checkers

VerificationReport check_algebra(const AlgebraData& a) {
    VerificationReport report;
    const std::size_t d = a.dim();

    std::optional<Witness> assoc;
    for (std::size_t i = 0; i < d && !assoc; ++i) {
        for (std::size_t j = 0; j < d && !assoc; ++j) {
            const Vector& ij = a.product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                Vector lhs(d);
                for (const auto& [m, c] : ij) lhs.add_scaled(a.product(m, k), c);
                Vector rhs(d);
                for (const auto& [m, c] : a.product(j, k)) rhs.add_scaled(a.product(i, m), c);
                if (lhs != rhs) {
                    assoc = Witness{{i, j, k}, std::move(lhs), std::move(rhs)};
                    break;
                }
            }
        }
    }
    report.record("associativity", std::move(assoc));

    std::optional<Witness> left;
    std::optional<Witness> right;
    for (std::size_t x = 0; x < d; ++x) {
        const Vector ex = a.basis(x);
        if (!left) {
            Vector ux = a.multiply(a.unit(), ex);
            if (ux != ex) left = Witness{{x}, std::move(ux), ex};
        }
        if (!right) {
            Vector xu = a.multiply(ex, a.unit());
            if (xu != ex) right = Witness{{x}, std::move(xu), ex};
        }
    }
    report.record("left_unit", std::move(left));
    report.record("right_unit", std::move(right));
    return report;
}

VerificationReport check_coassoc(const ComultData& c) {
    VerificationReport report;
    const std::size_t d = c.dim();
    const std::array<std::size_t, 2> dims{d, d};
    std::optional<Witness> failure;
    for (std::size_t x = 0; x < d; ++x) {
        const Vector& dx = c.delta.column(x);
        Vector lhs = apply_to_factor(dx, dims, 0, c.delta);
        Vector rhs = apply_to_factor(dx, dims, 1, c.delta);
        if (lhs != rhs) {
            failure = Witness{{x}, std::move(lhs), std::move(rhs)};
            break;
        }
    }
    report.record("coassociativity", std::move(failure));
    return report;
}

VerificationReport check_bimodule(const ComultData& c) {
    VerificationReport report;
    const AlgebraData& a = *c.algebra;
    const std::size_t d = a.dim();
    const Matrix m = multiplication_matrix(a);
    const std::array<std::size_t, 2> right_dims{d, d * d};
    const std::array<std::size_t, 2> left_dims{d * d, d};

    std::optional<Witness> right_fail;
    std::optional<Witness> left_fail;
    for (std::size_t y = 0; y < d; ++y) {
        for (std::size_t z = 0; z < d; ++z) {
            if (right_fail && left_fail) break;
            const Vector delta_yz = c.delta * a.product(y, z);
            if (!right_fail) {
                // (id (x) m)(Delta(y) (x) z)
                Vector lhs = apply_to_factor(tensor(c.delta.column(y), a.basis(z)), right_dims, 1, m);
                if (lhs != delta_yz) right_fail = Witness{{y, z}, std::move(lhs), delta_yz};
            }
            if (!left_fail) {
                // (m (x) id)(y (x) Delta(z))
                Vector rhs = apply_to_factor(tensor(a.basis(y), c.delta.column(z)), left_dims, 0, m);
                if (rhs != delta_yz) left_fail = Witness{{y, z}, delta_yz, std::move(rhs)};
            }
        }
    }
    report.record("bimodule_right", std::move(right_fail));
    report.record("bimodule_left", std::move(left_fail));
    return report;
}

VerificationReport check_casimir(const CasimirElement& cas) {
    VerificationReport report;
    const AlgebraData& a = *cas.algebra;
    const std::size_t d = a.dim();
    if (cas.element.dim() != d * d) throw InputError("Casimir element must live in A (x) A");
    const std::array<std::size_t, 2> dims{d, d};
    std::optional<Witness> failure;
    for (std::size_t x = 0; x < d; ++x) {
        const Vector ex = a.basis(x);
        Vector lhs = apply_to_factor(cas.element, dims, 1, a.right_multiplication(ex));
        Vector rhs = apply_to_factor(cas.element, dims, 0, a.left_multiplication(ex));
        if (lhs != rhs) {
            failure = Witness{{x}, std::move(lhs), std::move(rhs)};
            break;
        }
    }
    report.record("casimir", std::move(failure));
    return report;
}

Vector counit_left(const ComultData& c, const Vector& eps, const Vector& x) {
    const std::array<std::size_t, 2> dims{c.dim(), c.dim()};
    return apply_to_factor(c.apply(x), dims, 0, functional_matrix(eps));
}

Vector counit_right(const ComultData& c, const Vector& eps, const Vector& x) {
    const std::array<std::size_t, 2> dims{c.dim(), c.dim()};
    return apply_to_factor(c.apply(x), dims, 1, functional_matrix(eps));
}

VerificationReport check_counit(const ComultData& c, const Vector& eps) {
    VerificationReport report;
    if (eps.dim() != c.dim()) throw InputError("counit has wrong dimension");
    std::optional<Witness> left;
    std::optional<Witness> right;
    for (std::size_t x = 0; x < c.dim(); ++x) {
        const Vector ex = c.algebra->basis(x);
        if (!left) {
            Vector l = counit_left(c, eps, ex);
            if (l != ex) left = Witness{{x}, std::move(l), ex};
        }
        if (!right) {
            Vector r = counit_right(c, eps, ex);
            if (r != ex) right = Witness{{x}, std::move(r), ex};
        }
    }
    report.record("counit_left", std::move(left));
    report.record("counit_right", std::move(right));
    return report;
}

ComultData casimir_comult(const CasimirElement& cas) {
    auto report = check_casimir(cas);
    if (!report.passed()) {
        const auto& w = *report.first_failure()->witness;
        throw PreconditionError("Casimir identity fails at basis element " +
                                cas.algebra->label(w.indices.at(0)));
    }
    const AlgebraData& a = *cas.algebra;
    const std::size_t d = a.dim();
    const std::array<std::size_t, 2> dims{d, d};
    Matrix delta(d * d, d);
    for (std::size_t x = 0; x < d; ++x) {
        delta.set_column(x, apply_to_factor(cas.element, dims, 1, a.right_multiplication(a.basis(x))));
    }
    return ComultData(cas.algebra, std::move(delta));
}

CounitSolution solve_counit(const ComultData& c) {
    const std::size_t d = c.dim();
    RowReducer reducer(d);
    for (std::size_t x = 0; x < d && reducer.consistent(); ++x) {
        // Delta(x) = sum c_pq e_p (x) e_q. Left identity, component q:
        // sum_p c_pq eps_p = delta_xq. Right identity, component p:
        // sum_q c_pq eps_q = delta_xp.
        std::vector<Vector> by_q(d, Vector(d));
        std::vector<Vector> by_p(d, Vector(d));
        for (const auto& [t, v] : c.delta.column(x)) {
            const std::size_t p = t / d;
            const std::size_t q = t % d;
            by_q[q].set(p, v);
            by_p[p].set(q, v);
        }
        for (std::size_t k = 0; k < d; ++k) {
            const Scalar rhs = (k == x) ? 1 : 0;
            if (!by_q[k].is_zero() || rhs != 0) reducer.add_equation(by_q[k], rhs);
            if (!by_p[k].is_zero() || rhs != 0) reducer.add_equation(by_p[k], rhs);
        }
    }
    CounitSolution out;
    out.counit = reducer.particular_solution();
    out.unique = reducer.rank() == d;
    return out;
}

std::string to_string(FrobeniusClass c) {
    switch (c) {
        case FrobeniusClass::Frobenius: return "Frobenius";
        case FrobeniusClass::NonCounitalOnly: return "NonCounitalOnly";
        case FrobeniusClass::NotFrobeniusStructure: return "NotFrobeniusStructure";
    }
    return "unknown";
}

Classification analyze(const ComultData& c) {
    Classification out;
    out.report.append(check_coassoc(c));
    out.report.append(check_bimodule(c));
    const bool structure_ok = out.report.passed();
    if (c.counit) {
        auto provided = check_counit(c, *c.counit);
        for (const auto& r : provided.checks()) {
            out.report.record("provided_" + r.name, r.witness);
        }
    }
    out.counit = solve_counit(c);
    if (out.counit.counit && !out.counit.unique) {
        out.report.note("counit system is underdetermined; reported solution has free values set to 0");
    }
    if (!structure_ok) {
        out.kind = FrobeniusClass::NotFrobeniusStructure;
    } else if (out.counit.counit) {
        out.kind = FrobeniusClass::Frobenius;
    } else {
        out.kind = FrobeniusClass::NonCounitalOnly;
    }
    return out;
}

FrobeniusClass classify(const ComultData& c) { return analyze(c).kind; }

// ----------------------------------------------------------- permutation

Vector permute_vector(const Vector& v, std::size_t dim, std::size_t arity,
                      std::span<const std::size_t> perm) {
    if (perm.size() != dim) throw InputError("permutation has wrong length");
    std::vector<std::size_t> dims(arity, dim);
    TensorIndex idx(dims);
    if (v.dim() != idx.size()) throw InputError("permute_vector: dimension mismatch");
    Vector out(v.dim());
    for (const auto& [flat, value] : v) {
        auto multi = idx.unflatten(flat);
        for (auto& m : multi) m = perm[m];
        out.set(idx.flatten(multi), value);
    }
    return out;
}

AlgebraData permute_basis(const AlgebraData& a, std::span<const std::size_t> perm) {
    const std::size_t d = a.dim();
    if (perm.size() != d) throw InputError("permutation has wrong length");
    std::vector<bool> seen(d, false);
    for (auto p : perm) {
        if (p >= d || seen[p]) throw InputError("not a permutation");
        seen[p] = true;
    }
    std::vector<std::string> labels(d);
    std::vector<Vector> products(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        labels[perm[i]] = a.label(i);
        for (std::size_t j = 0; j < d; ++j) {
            products[perm[i] * d + perm[j]] = permute_vector(a.product(i, j), d, 1, perm);
        }
    }
    return AlgebraData(std::move(labels), std::move(products), permute_vector(a.unit(), d, 1, perm));
}

ComultData permute_basis(const ComultData& c, AlgebraPtr permuted, std::span<const std::size_t> perm) {
    const std::size_t d = c.dim();
    Matrix delta(d * d, d);
    for (std::size_t x = 0; x < d; ++x) {
        delta.set_column(perm[x], permute_vector(c.delta.column(x), d, 2, perm));
    }
    std::optional<Vector> eps;
    if (c.counit) eps = permute_vector(*c.counit, d, 1, perm);
    return ComultData(std::move(permuted), std::move(delta), std::move(eps));
}

}  // namespace ncfrob
