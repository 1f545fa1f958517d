#pragma once

// Quantum transformation groupoids H(L, B) = B^op (x) L (x) B built from a
// Hopf algebra L acting from the right on a strongly separable algebra B,
// together with their non-degenerate integral and Frobenius structure.
//
// Basis of H: (a, l, b) flattened row-major over dims (dim B, dim L, dim B).

#include <cstddef>
#include <string>
#include <vector>

#include "ncfrob/groupoid.hpp"
#include "ncfrob/whopf.hpp"

namespace ncfrob::qtg {

/// B with symmetric separability idempotent e = e^1 (x) e^2 and trace form
/// omega.
struct SeparableAlgebra {
    AlgebraPtr algebra;
    Vector idempotent;  ///< over dim(B)^2
    Vector trace;       ///< functional on B
};

/// e = (1/|G|) sum g (x) g^{-1}, omega(g) = |G| [g == 1].
SeparableAlgebra separable_group_algebra(const FiniteGroup& g);
/// Matrix units E_ij (labels "E<i><j>"), e = (1/d) sum E_ij (x) E_ji,
/// omega = d * trace.
SeparableAlgebra separable_matrix_algebra(std::size_t d);

/// be^1 (x) e^2 = e^1 (x) e^2 b, e^1 e^2 = 1, e symmetric,
/// omega(e^1) e^2 = 1 = e^1 omega(e^2).
VerificationReport check_separable(const SeparableAlgebra& b);

/// The one-dimensional Hopf algebra k.
whopf::WeakHopfData trivial_hopf_algebra();

struct QTGInput {
    whopf::WeakHopfData hopf;  ///< L
    SeparableAlgebra base;     ///< B
    /// Right action: column b * dim(L) + l holds b <| l.
    Matrix action;
};

/// b <| l = eps(l) b.
Matrix trivial_action(const SeparableAlgebra& b, const whopf::WeakHopfData& l);

/// b <| g = alpha(g^{-1})(b) on k[base], where `alpha[g][x]` is the image of
/// x under the automorphism attached to g. Throws InputError unless alpha is
/// a homomorphism into Aut(base).
Matrix automorphism_action(const FiniteGroup& acting, const FiniteGroup& base,
                           const std::vector<std::vector<std::size_t>>& alpha);
/// Z/2 acting on a group by inversion (the group must be abelian).
std::vector<std::vector<std::size_t>> inversion_automorphisms(const FiniteGroup& base);

/// Checks L (weak Hopf axioms and Hopf), B (check_separable), the module
/// algebra axioms and (e^1 <| l) (x) e^2 = e^1 (x) (e^2 <| S_L(l)).
VerificationReport check_input(const QTGInput& q);

/// Throws InputError naming the first failed equation.
whopf::WeakHopfData build(const QTGInput& q);

struct Integral {
    Vector hopf_integral;  ///< right integral Lambda of L
    Vector hopf_dual;      ///< lambda with lambda(S_L(Lambda_1)) S_L(Lambda_2) = 1_L
    Vector integral;       ///< Lambda-bar in H
    Vector dual;           ///< lambda-bar = omega (x) lambda (x) omega
};

/// Throws InternalError if Lambda-bar is not a left integral or
/// Psi(lambda-bar) != 1.
Integral integral(const QTGInput& q, const whopf::WeakHopfData& built);
Integral integral(const QTGInput& q);

/// Closed-form Delta and eps from Lambda-bar and lambda-bar.
ComultData closed_form_frobenius(const QTGInput& q, const whopf::WeakHopfData& built, const Integral& in);

/// closed_form_frobenius, after checking it equals
/// frobenius_from_integral(build(q), Lambda-bar) and that its counit equals
/// the solved one. Throws InternalError on mismatch.
ComultData frobenius(const QTGInput& q);

/// Built-in instances by name: L in {"trivial", "cyclic:N"}, B in
/// {"matrix:D", "group:N"}, action in {"trivial", "inversion"}.
QTGInput named_instance(const std::string& l, const std::string& b, const std::string& action = "trivial");

}  // namespace ncfrob::qtg
