#pragma once

// Weak Hopf algebras given by structure constants: axiom verification,
// counital maps, integrals, non-degeneracy, and the non-counital Frobenius
// comultiplication Delta(h) = Lambda_1 (x) S(Lambda_2) h built from a left
// integral Lambda.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ncfrob/finalg.hpp"

namespace ncfrob::whopf {

struct WeakHopfData {
    WeakHopfData(AlgebraPtr algebra, Matrix delta_wk, Vector epsilon_wk, Matrix antipode);

    AlgebraPtr algebra;
    Matrix delta_wk;    ///< dim^2 x dim
    Vector epsilon_wk;  ///< functional
    Matrix antipode;    ///< dim x dim

    std::size_t dim() const { return algebra->dim(); }
    ComultData coalgebra() const { return ComultData(algebra, delta_wk, epsilon_wk); }
};

/// 1_1 eps(x 1_2)
Vector epsilon_s(const WeakHopfData& h, const Vector& x);
/// eps(1_1 x) 1_2
Vector epsilon_t(const WeakHopfData& h, const Vector& x);
Matrix epsilon_s_matrix(const WeakHopfData& h);
Matrix epsilon_t_matrix(const WeakHopfData& h);

/// Algebra, coalgebra, weak bialgebra and antipode axioms on all basis tuples.
VerificationReport check_weak_hopf(const WeakHopfData& h);

/// The four equivalent Hopf conditions: Delta(1) = 1 (x) 1; eps
/// multiplicative; S(x_1) x_2 = eps(x) 1; x_1 S(x_2) = eps(x) 1.
std::array<bool, 4> hopf_conditions(const WeakHopfData& h);
/// Delta(1) = 1 (x) 1. Throws InternalError if the four conditions disagree.
bool is_hopf(const WeakHopfData& h);

enum class Side { Left, Right };

struct IntegralSpace {
    Side side = Side::Left;
    std::vector<Vector> basis;
};

/// Left: h L = eps_t(h) L for all h. Right: L h = L eps_s(h) for all h.
IntegralSpace integral_space(const WeakHopfData& h, Side side);
bool is_left_integral(const WeakHopfData& h, const Vector& lambda);

/// phi -> Lambda_1 phi(Lambda_2); column k is the image of the k-th dual
/// basis functional.
Matrix psi_map(const WeakHopfData& h, const Vector& lambda);
/// phi -> phi(Lambda_1) S(Lambda_2)
Matrix phi_map(const WeakHopfData& h, const Vector& lambda);
/// phi -> Lambda_1 phi(S(Lambda_2))
Matrix phi_prime_map(const WeakHopfData& h, const Vector& lambda);

struct NondegenerateIntegral {
    Vector integral;  ///< Lambda
    Vector dual;      ///< lambda with Psi_Lambda(lambda) = 1
};

struct IntegralSearch {
    std::optional<NondegenerateIntegral> found;
    std::uint64_t seed = 0;
    std::size_t candidates_tried = 0;
    /// True when nothing was found: the search is not a proof of
    /// degeneracy.
    bool inconclusive() const { return !found.has_value(); }
};

inline constexpr std::uint64_t kDefaultIntegralSeed = 20240601;
inline constexpr std::size_t kDefaultIntegralAttempts = 64;

/// Tries each left-integral basis vector, then their sum, then seeded
/// pseudorandom integer combinations with coefficients in [-3, 3].
IntegralSearch find_nondegenerate_integral(const WeakHopfData& h,
                                           std::uint64_t seed = kDefaultIntegralSeed,
                                           std::size_t attempts = kDefaultIntegralAttempts);

/// Delta(h) = Lambda_1 (x) S(Lambda_2) h, with the counit filled in when
/// one exists. Throws PreconditionError if
/// Lambda_1 (x) S(Lambda_2) h = h Lambda_1 (x) S(Lambda_2) fails.
ComultData frobenius_from_integral(const WeakHopfData& h, const Vector& lambda);

/// Componentwise product in A^{(x) arity}.
Vector tensor_multiply(const AlgebraData& a, const Vector& u, const Vector& v, std::size_t arity);

}  // namespace ncfrob::whopf
