#include "ncfrob/qtg.hpp"

#include <array>
#include <charconv>

namespace ncfrob::qtg {

namespace {

using whopf::WeakHopfData;

/// Coefficient and factor indices of one pure tensor.
template <std::size_t N>
struct Term {
    Scalar coeff;
    std::array<std::size_t, N> idx;
};

template <std::size_t N>
std::vector<Term<N>> terms(const Vector& t, std::size_t d) {
    std::vector<Term<N>> out;
    for (const auto& [flat, c] : t) {
        Term<N> term{c, {}};
        std::size_t rest = flat;
        for (std::size_t k = N; k-- > 0;) {
            term.idx[k] = rest % d;
            rest /= d;
        }
        out.push_back(std::move(term));
    }
    return out;
}

/// Cached views of a validated input.
struct Context {
    explicit Context(const QTGInput& input)
        : q(input),
          L(*input.hopf.algebra),
          B(*input.base.algebra),
          dl(L.dim()),
          db(B.dim()),
          s(input.hopf.antipode),
          e(terms<2>(input.base.idempotent, B.dim())) {
        auto inv = inverse(s);
        if (!inv) throw InputError("antipode of L is not invertible");
        s_inv = std::move(*inv);
    }

    Vector act(const Vector& b, const Vector& l) const { return q.action * tensor(b, l); }
    Vector act(std::size_t b, const Vector& l) const { return act(B.basis(b), l); }
    Vector delta_l(const Vector& l) const { return q.hopf.delta_wk * l; }
    Vector delta2_l(const Vector& l) const {
        const std::array<std::size_t, 2> dims{dl, dl};
        return apply_to_factor(delta_l(l), dims, 0, q.hopf.delta_wk);
    }
    Vector delta3_l(const Vector& l) const {
        const std::array<std::size_t, 3> dims{dl, dl, dl};
        return apply_to_factor(delta2_l(l), dims, 0, q.hopf.delta_wk);
    }
    Vector sl(std::size_t l) const { return s.column(l); }

    const QTGInput& q;
    const AlgebraData& L;
    const AlgebraData& B;
    std::size_t dl;
    std::size_t db;
    const Matrix& s;
    Matrix s_inv;
    std::vector<Term<2>> e;
};

std::optional<Witness> compare(std::vector<std::size_t> idx, Vector lhs, Vector rhs) {
    if (lhs == rhs) return std::nullopt;
    return Witness{std::move(idx), std::move(lhs), std::move(rhs)};
}

void keep_first(std::optional<Witness>& slot, std::optional<Witness> candidate) {
    if (!slot && candidate) slot = std::move(candidate);
}

}  // namespace

SeparableAlgebra separable_group_algebra(const FiniteGroup& g) {
    const auto h = hopf_group_algebra(g);
    const std::size_t n = g.order();
    Vector e(n * n);
    Vector omega(n);
    for (std::size_t x = 0; x < n; ++x) e.set(x * n + g.inverse(x), Scalar(1, n));
    omega.set(g.identity(), Scalar(static_cast<long>(n)));
    SeparableAlgebra out{h.algebra, std::move(e), std::move(omega)};
    if (auto report = check_separable(out); !report.passed()) {
        throw InternalError("group algebra separability check failed: " + report.first_failure()->name);
    }
    return out;
}

SeparableAlgebra separable_matrix_algebra(std::size_t d) {
    if (d == 0) throw InputError("matrix size must be positive");
    const std::size_t n = d * d;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
    }
    // E_ij E_kl = [j == k] E_il
    std::vector<Vector> products(n * n, Vector(n));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) products[(i * d + j) * n + (j * d + l)].set(i * d + l, 1);
        }
    }
    Vector unit(n);
    Vector omega(n);
    Vector e(n * n);
    for (std::size_t i = 0; i < d; ++i) {
        unit.set(i * d + i, 1);
        omega.set(i * d + i, Scalar(static_cast<long>(d)));
        for (std::size_t j = 0; j < d; ++j) e.set((i * d + j) * n + (j * d + i), Scalar(1, d));
    }
    auto algebra = std::make_shared<const AlgebraData>(std::move(labels), std::move(products), std::move(unit));
    SeparableAlgebra out{std::move(algebra), std::move(e), std::move(omega)};
    if (auto report = check_separable(out); !report.passed()) {
        throw InternalError("matrix algebra separability check failed: " + report.first_failure()->name);
    }
    return out;
}

VerificationReport check_separable(const SeparableAlgebra& sep) {
    const AlgebraData& b = *sep.algebra;
    const std::size_t d = b.dim();
    if (sep.idempotent.dim() != d * d) throw InputError("separability idempotent must live in B (x) B");
    if (sep.trace.dim() != d) throw InputError("trace form has wrong dimension");
    VerificationReport report = check_algebra(b);
    const auto e = terms<2>(sep.idempotent, d);

    std::optional<Witness> central;
    for (std::size_t x = 0; x < d && !central; ++x) {
        Vector lhs(d * d);
        Vector rhs(d * d);
        for (const auto& t : e) {
            lhs.add_scaled(tensor(b.product(x, t.idx[0]), b.basis(t.idx[1])), t.coeff);
            rhs.add_scaled(tensor(b.basis(t.idx[0]), b.product(t.idx[1], x)), t.coeff);
        }
        central = compare({x}, std::move(lhs), std::move(rhs));
    }
    report.record("idempotent1", std::move(central));

    Vector prod(d);
    for (const auto& t : e) prod.add_scaled(b.product(t.idx[0], t.idx[1]), t.coeff);
    report.record("idempotent2", compare({}, prod, b.unit()));

    Vector flipped(d * d);
    for (const auto& t : e) flipped.add(t.idx[1] * d + t.idx[0], t.coeff);
    report.record("idempotent3", compare({}, sep.idempotent, flipped));

    Vector left(d);
    Vector right(d);
    for (const auto& t : e) {
        left.add(t.idx[1], t.coeff * sep.trace[t.idx[0]]);
        right.add(t.idx[0], t.coeff * sep.trace[t.idx[1]]);
    }
    std::optional<Witness> trace = compare({0}, left, b.unit());
    if (!trace) trace = compare({1}, right, b.unit());
    report.record("trace", std::move(trace));
    return report;
}

WeakHopfData trivial_hopf_algebra() { return hopf_group_algebra(cyclic_group(1)); }

Matrix trivial_action(const SeparableAlgebra& b, const WeakHopfData& l) {
    const std::size_t db = b.algebra->dim();
    const std::size_t dl = l.dim();
    Matrix m(db, db * dl);
    for (std::size_t x = 0; x < db; ++x) {
        for (std::size_t y = 0; y < dl; ++y) {
            if (l.epsilon_wk[y] != 0) m.set(x, x * dl + y, l.epsilon_wk[y]);
        }
    }
    return m;
}

Matrix automorphism_action(const FiniteGroup& acting, const FiniteGroup& base,
                           const std::vector<std::vector<std::size_t>>& alpha) {
    const std::size_t ng = acting.order();
    const std::size_t nb = base.order();
    if (alpha.size() != ng) throw InputError("need one automorphism per acting group element");
    for (std::size_t g = 0; g < ng; ++g) {
        const auto& a = alpha[g];
        if (a.size() != nb) throw InputError("automorphism has wrong size");
        std::vector<bool> hit(nb, false);
        for (auto v : a) {
            if (v >= nb || hit[v]) throw InputError("automorphism is not a bijection");
            hit[v] = true;
        }
        for (std::size_t x = 0; x < nb; ++x) {
            for (std::size_t y = 0; y < nb; ++y) {
                if (a[base.multiply(x, y)] != base.multiply(a[x], a[y])) {
                    throw InputError("automorphism is not multiplicative");
                }
            }
        }
        for (std::size_t h = 0; h < ng; ++h) {
            for (std::size_t x = 0; x < nb; ++x) {
                if (alpha[acting.multiply(g, h)][x] != a[alpha[h][x]]) {
                    throw InputError("automorphisms do not define a group action");
                }
            }
        }
    }
    Matrix m(nb, nb * ng);
    for (std::size_t x = 0; x < nb; ++x) {
        for (std::size_t g = 0; g < ng; ++g) m.set(alpha[acting.inverse(g)][x], x * ng + g, 1);
    }
    return m;
}

std::vector<std::vector<std::size_t>> inversion_automorphisms(const FiniteGroup& base) {
    std::vector<std::size_t> id(base.order());
    std::vector<std::size_t> inv(base.order());
    for (std::size_t x = 0; x < base.order(); ++x) {
        id[x] = x;
        inv[x] = base.inverse(x);
    }
    return {id, inv};
}

VerificationReport check_input(const QTGInput& q) {
    const std::size_t dl = q.hopf.dim();
    const std::size_t db = q.base.algebra->dim();
    if (q.action.rows() != db || q.action.cols() != db * dl) throw InputError("action must be dim(B) x dim(B)*dim(L)");

    VerificationReport report;
    const VerificationReport hopf_report = whopf::check_weak_hopf(q.hopf);
    for (const auto& c : hopf_report.checks()) report.record("L." + c.name, c.witness);
    {
        const auto cond = whopf::hopf_conditions(q.hopf);
        const bool hopf = cond[0] && cond[1] && cond[2] && cond[3];
        const Vector one = q.hopf.algebra->unit();
        report.record("L.hopf", hopf ? std::nullopt
                                     : std::optional(Witness{{}, q.hopf.delta_wk * one, tensor(one, one)}));
    }
    report.record("L.antipode_invertible",
                  is_invertible(q.hopf.antipode) ? std::nullopt : std::optional(Witness{{}, Vector(1), Vector(1)}));
    report.append(check_separable(q.base));
    if (!report.passed()) return report;

    const Context ctx(q);
    const AlgebraData& L = ctx.L;
    const AlgebraData& B = ctx.B;

    std::optional<Witness> unit_fail;
    std::optional<Witness> assoc_fail;
    std::optional<Witness> mult_fail;
    std::optional<Witness> one_fail;
    std::optional<Witness> ea_fail;
    for (std::size_t b = 0; b < db; ++b) {
        keep_first(unit_fail, compare({b}, ctx.act(b, L.unit()), B.basis(b)));
        for (std::size_t l = 0; l < dl; ++l) {
            const Vector bl = ctx.act(b, L.basis(l));
            for (std::size_t l2 = 0; l2 < dl && !assoc_fail; ++l2) {
                keep_first(assoc_fail,
                             compare({b, l, l2}, ctx.act(bl, L.basis(l2)), ctx.act(b, L.product(l, l2))));
            }
            const auto dterms = terms<2>(ctx.delta_l(L.basis(l)), dl);
            for (std::size_t b2 = 0; b2 < db && !mult_fail; ++b2) {
                Vector rhs(db);
                for (const auto& t : dterms) {
                    rhs.add_scaled(B.multiply(ctx.act(b, L.basis(t.idx[0])), ctx.act(b2, L.basis(t.idx[1]))), t.coeff);
                }
                keep_first(mult_fail,
                             compare({b, b2, l}, ctx.act(B.product(b, b2), L.basis(l)), std::move(rhs)));
            }
        }
    }
    for (std::size_t l = 0; l < dl; ++l) {
        keep_first(one_fail,
                     compare({l}, ctx.act(B.unit(), L.basis(l)), q.hopf.epsilon_wk[l] * B.unit()));
        Vector lhs(db * db);
        Vector rhs(db * db);
        for (const auto& t : ctx.e) {
            lhs.add_scaled(tensor(ctx.act(t.idx[0], L.basis(l)), B.basis(t.idx[1])), t.coeff);
            rhs.add_scaled(tensor(B.basis(t.idx[0]), ctx.act(t.idx[1], ctx.sl(l))), t.coeff);
        }
        keep_first(ea_fail, compare({l}, std::move(lhs), std::move(rhs)));
    }
    report.record("action_unit", std::move(unit_fail));
    report.record("action_associative", std::move(assoc_fail));
    report.record("action_multiplicative", std::move(mult_fail));
    report.record("action_unit_preserved", std::move(one_fail));
    report.record("idempotent_action", std::move(ea_fail));
    return report;
}

WeakHopfData build(const QTGInput& q) {
    const auto report = check_input(q);
    if (const auto* fail = report.first_failure()) {
        throw InputError("quantum transformation groupoid input violates " + fail->name);
    }
    const Context ctx(q);
    const AlgebraData& L = ctx.L;
    const AlgebraData& B = ctx.B;
    const std::size_t dl = ctx.dl;
    const std::size_t db = ctx.db;
    const TensorIndex index({db, dl, db});
    const std::size_t d = index.size();

    std::vector<std::string> labels;
    for (std::size_t k = 0; k < d; ++k) {
        const auto m = index.unflatten(k);
        labels.push_back("(" + B.label(m[0]) + "," + L.label(m[1]) + "," + B.label(m[2]) + ")");
    }

    std::vector<std::vector<Term<2>>> dl_terms(dl);
    std::vector<std::vector<Term<3>>> dl2_terms(dl);
    for (std::size_t l = 0; l < dl; ++l) {
        dl_terms[l] = terms<2>(ctx.delta_l(L.basis(l)), dl);
        dl2_terms[l] = terms<3>(ctx.delta2_l(L.basis(l)), dl);
    }

    // (a l b)(a' l' b') = (a' <| S(l_1)) a (x) l_2 l'_1 (x) (b <| l'_2) b'
    std::vector<Vector> products(d * d, Vector(d));
    for (std::size_t x = 0; x < d; ++x) {
        const auto mx = index.unflatten(x);
        const std::size_t a = mx[0];
        const std::size_t l = mx[1];
        const std::size_t b = mx[2];
        for (std::size_t y = 0; y < d; ++y) {
            const auto my = index.unflatten(y);
            const std::size_t a2 = my[0];
            const std::size_t l2 = my[1];
            const std::size_t b2 = my[2];
            Vector& out = products[x * d + y];
            for (const auto& t1 : dl_terms[l]) {
                const Vector first = B.multiply(ctx.act(a2, ctx.sl(t1.idx[0])), B.basis(a));
                if (first.is_zero()) continue;
                for (const auto& t2 : dl_terms[l2]) {
                    const Vector& middle = L.product(t1.idx[1], t2.idx[0]);
                    if (middle.is_zero()) continue;
                    const Vector last = B.multiply(ctx.act(b, L.basis(t2.idx[1])), B.basis(b2));
                    out.add_scaled(tensor(first, middle, last), t1.coeff * t2.coeff);
                }
            }
        }
    }
    auto algebra = std::make_shared<const AlgebraData>(std::move(labels), std::move(products),
                                                       tensor(B.unit(), L.unit(), B.unit()));

    Matrix delta(d * d, d);
    Vector eps(d);
    Matrix antipode(d, d);
    for (std::size_t x = 0; x < d; ++x) {
        const auto m = index.unflatten(x);
        const std::size_t a = m[0];
        const std::size_t l = m[1];
        const std::size_t b = m[2];
        // (a (x) l_1 (x) e^1) (x) ((e^2 <| S(l_2)) (x) l_3 (x) b)
        Vector column(d * d);
        for (const auto& t : dl2_terms[l]) {
            for (const auto& et : ctx.e) {
                const Vector left = tensor(B.basis(a), L.basis(t.idx[0]), B.basis(et.idx[0]));
                const Vector right = tensor(ctx.act(et.idx[1], ctx.sl(t.idx[1])), L.basis(t.idx[2]), B.basis(b));
                column.add_scaled(tensor(left, right), t.coeff * et.coeff);
            }
        }
        delta.set_column(x, std::move(column));
        // omega(a (b <| S^{-1}(l)))
        eps.set(x, dot(q.base.trace, B.multiply(B.basis(a), ctx.act(b, ctx.s_inv.column(l)))));
        antipode.set_column(x, tensor(B.basis(b), ctx.sl(l), B.basis(a)));
    }
    return WeakHopfData(std::move(algebra), std::move(delta), std::move(eps), std::move(antipode));
}

Integral integral(const QTGInput& q, const WeakHopfData& built) {
    const Context ctx(q);
    const AlgebraData& L = ctx.L;
    const std::size_t dl = ctx.dl;

    Integral out;
    out.hopf_integral = whopf::integral_space(q.hopf, whopf::Side::Right).basis.front();
    const auto lam_terms = terms<2>(ctx.delta_l(out.hopf_integral), dl);

    // lambda(S(Lambda_1)) S(Lambda_2) = 1_L, linear in lambda.
    Matrix system(dl, dl);
    for (const auto& t : lam_terms) {
        const Vector s2 = ctx.sl(t.idx[1]);
        for (const auto& [k, c] : ctx.sl(t.idx[0])) {
            for (const auto& [row, v] : s2) system.add(row, k, t.coeff * c * v);
        }
    }
    auto lambda = solve_linear(system, L.unit());
    if (!lambda) throw InternalError("no functional on L satisfies lambda(S(Lambda_1)) S(Lambda_2) = 1");
    out.hopf_dual = std::move(*lambda);

    out.integral = Vector(built.dim());
    for (const auto& t : lam_terms) {
        for (const auto& et : ctx.e) {
            out.integral.add_scaled(tensor(ctx.act(et.idx[0], L.basis(t.idx[0])), ctx.sl(t.idx[1]),
                                           ctx.B.basis(et.idx[1])),
                                    t.coeff * et.coeff);
        }
    }
    out.dual = tensor(q.base.trace, out.hopf_dual, q.base.trace);

    if (!whopf::is_left_integral(built, out.integral)) {
        throw InternalError("Lambda-bar is not a left integral of the quantum transformation groupoid");
    }
    if (whopf::psi_map(built, out.integral) * out.dual != built.algebra->unit()) {
        throw InternalError("Psi(lambda-bar) != 1 for the quantum transformation groupoid");
    }
    return out;
}

Integral integral(const QTGInput& q) { return integral(q, build(q)); }

ComultData closed_form_frobenius(const QTGInput& q, const WeakHopfData& built, const Integral& in) {
    const Context ctx(q);
    const AlgebraData& L = ctx.L;
    const AlgebraData& B = ctx.B;
    const std::size_t dl = ctx.dl;
    const std::size_t db = ctx.db;
    const TensorIndex index({db, dl, db});
    const std::size_t d = index.size();
    const Matrix s2 = ctx.s * ctx.s;
    const auto lam4 = terms<4>(ctx.delta3_l(in.hopf_integral), dl);

    // [(e^1 <| Lambda_1 S(l_1)) a (x) l_2 S(Lambda_4) (x) (b e'^1 <| S(Lambda_3))]
    //   (x) [e^2 (x) S^2(Lambda_2) (x) e'^2]
    Matrix delta(d * d, d);
    for (std::size_t x = 0; x < d; ++x) {
        const auto m = index.unflatten(x);
        const std::size_t a = m[0];
        const std::size_t l = m[1];
        const std::size_t b = m[2];
        Vector column(d * d);
        for (const auto& lt : terms<2>(ctx.delta_l(L.basis(l)), dl)) {
            for (const auto& t : lam4) {
                const Vector acting = L.multiply(L.basis(t.idx[0]), ctx.sl(lt.idx[0]));
                const Vector middle = L.multiply(L.basis(lt.idx[1]), ctx.sl(t.idx[3]));
                const Vector s2l = s2.column(t.idx[1]);
                for (const auto& e1 : ctx.e) {
                    const Vector first = B.multiply(ctx.act(e1.idx[0], acting), B.basis(a));
                    if (first.is_zero()) continue;
                    for (const auto& e2 : ctx.e) {
                        const Vector last = ctx.act(B.product(b, e2.idx[0]), ctx.sl(t.idx[2]));
                        const Vector left = tensor(first, middle, last);
                        const Vector right = tensor(B.basis(e1.idx[1]), s2l, B.basis(e2.idx[1]));
                        column.add_scaled(tensor(left, right), lt.coeff * t.coeff * e1.coeff * e2.coeff);
                    }
                }
            }
        }
        delta.set_column(x, std::move(column));
    }
    return ComultData(built.algebra, std::move(delta), in.dual);
}

ComultData frobenius(const QTGInput& q) {
    const WeakHopfData built = build(q);
    const Integral in = integral(q, built);
    ComultData closed = closed_form_frobenius(q, built, in);
    const ComultData generic = whopf::frobenius_from_integral(built, in.integral);
    if (closed.delta != generic.delta) {
        throw InternalError("closed-form Frobenius comultiplication differs from the integral-derived one");
    }
    if (!generic.counit || *generic.counit != in.dual) {
        throw InternalError("closed-form Frobenius counit differs from the solved counit");
    }
    return closed;
}

QTGInput named_instance(const std::string& l, const std::string& b, const std::string& action) {
    auto order_after = [](const std::string& text, const std::string& prefix) -> std::optional<std::size_t> {
        if (text.rfind(prefix, 0) != 0) return std::nullopt;
        std::size_t v = 0;
        const char* first = text.data() + prefix.size();
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || first == last || v == 0) {
            throw InputError("invalid size in '" + text + "'");
        }
        return v;
    };

    std::optional<FiniteGroup> acting;
    if (l == "trivial") {
        acting = cyclic_group(1);
    } else if (auto n = order_after(l, "cyclic:")) {
        acting = cyclic_group(*n);
    } else {
        throw InputError("unknown L '" + l + "'; expected trivial or cyclic:N");
    }
    WeakHopfData hopf = hopf_group_algebra(*acting);

    std::optional<FiniteGroup> base_group;
    SeparableAlgebra base;
    if (auto d = order_after(b, "matrix:")) {
        base = separable_matrix_algebra(*d);
    } else if (auto n = order_after(b, "group:")) {
        base_group = cyclic_group(*n);
        base = separable_group_algebra(*base_group);
    } else {
        throw InputError("unknown B '" + b + "'; expected matrix:D or group:N");
    }

    Matrix act(0, 0);
    if (action == "trivial") {
        act = trivial_action(base, hopf);
    } else if (action == "inversion") {
        if (!base_group || acting->order() != 2) throw InputError("inversion action needs L = cyclic:2 and B = group:N");
        act = automorphism_action(*acting, *base_group, inversion_automorphisms(*base_group));
    } else {
        throw InputError("unknown action '" + action + "'; expected trivial or inversion");
    }
    return QTGInput{std::move(hopf), std::move(base), std::move(act)};
}

}  // namespace ncfrob::qtg
