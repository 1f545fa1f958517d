#pragma once

// Finite-dimensional algebras given by structure constants, candidate
// comultiplications on them, and the axiom checkers that decide whether a
// comultiplication is (non-counital) Frobenius.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncfrob/exactlin.hpp"

namespace ncfrob {

/// Unital algebra with basis e_0..e_{d-1}. Associativity and unitality are
/// not assumed; see check_algebra.
class AlgebraData {
public:
    /// `products[i * dim + j]` is e_i * e_j. Throws InputError on dim == 0
    /// or any shape mismatch.
    AlgebraData(std::vector<std::string> labels, std::vector<Vector> products, Vector unit);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const Vector& product(std::size_t i, std::size_t j) const { return products_.at(i * dim() + j); }
    const Vector& unit() const { return unit_; }
    Vector basis(std::size_t i) const { return Vector::unit_vector(dim(), i); }

    Vector multiply(const Vector& x, const Vector& y) const;
    /// Matrix of z -> x z.
    Matrix left_multiplication(const Vector& x) const;
    /// Matrix of z -> z x.
    Matrix right_multiplication(const Vector& x) const;

    AlgebraData with_product(std::size_t i, std::size_t j, Vector value) const;

private:
    std::vector<std::string> labels_;
    std::vector<Vector> products_;
    Vector unit_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraData>;

/// x (x) y, row-major (x's index most significant).
Vector tensor(const Vector& x, const Vector& y);
Vector tensor(const Vector& x, const Vector& y, const Vector& z);

/// A linear map Delta: A -> A (x) A and an optional functional epsilon.
struct ComultData {
    ComultData(AlgebraPtr algebra, Matrix delta, std::optional<Vector> counit = std::nullopt);

    AlgebraPtr algebra;
    Matrix delta;  ///< rows = dim^2, cols = dim
    std::optional<Vector> counit;

    std::size_t dim() const { return algebra->dim(); }
    Vector apply(const Vector& x) const { return delta * x; }
};

/// Intended Delta(1) = sum a_i (x) b_i.
struct CasimirElement {
    AlgebraPtr algebra;
    Vector element;  ///< over dim^2
};

struct Witness {
    std::vector<std::size_t> indices;  ///< basis multi-index that exposed the failure
    Vector lhs;
    Vector rhs;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::optional<Witness> witness;  ///< present exactly when !passed
};

class VerificationReport {
public:
    /// A check fails exactly when a witness is supplied.
    void record(std::string name, std::optional<Witness> failure);
    void note(std::string text) { notes_.push_back(std::move(text)); }
    void append(const VerificationReport& other);

    bool passed() const;
    const std::vector<CheckResult>& checks() const { return checks_; }
    const std::vector<std::string>& notes() const { return notes_; }
    const CheckResult* find(std::string_view name) const;
    /// First failing check, if any.
    const CheckResult* first_failure() const;

private:
    std::vector<CheckResult> checks_;
    std::vector<std::string> notes_;
};

VerificationReport check_algebra(const AlgebraData& algebra);
VerificationReport check_coassoc(const ComultData& comult);
/// (id (x) m)(Delta (x) id) = Delta m = (m (x) id)(id (x) Delta) on all basis pairs.
VerificationReport check_bimodule(const ComultData& comult);
/// sum a_i (x) b_i x = sum x a_i (x) b_i for all basis x.
VerificationReport check_casimir(const CasimirElement& casimir);
/// Counit identities for a given functional.
VerificationReport check_counit(const ComultData& comult, const Vector& counit);

/// Delta(x) = sum a_i (x) b_i x. Throws PreconditionError if the Casimir
/// identity fails.
ComultData casimir_comult(const CasimirElement& casimir);

/// (eps (x) id) Delta(x) and (id (x) eps) Delta(x).
Vector counit_left(const ComultData& comult, const Vector& eps, const Vector& x);
Vector counit_right(const ComultData& comult, const Vector& eps, const Vector& x);

struct CounitSolution {
    std::optional<Vector> counit;
    bool unique = true;  ///< false when the counit system is underdetermined
};

/// Solves both counit identities as one exact linear system in the values
/// eps(e_k).
CounitSolution solve_counit(const ComultData& comult);

enum class FrobeniusClass { Frobenius, NonCounitalOnly, NotFrobeniusStructure };

std::string to_string(FrobeniusClass c);

struct Classification {
    FrobeniusClass kind = FrobeniusClass::NotFrobeniusStructure;
    VerificationReport report;
    CounitSolution counit;
};

Classification analyze(const ComultData& comult);
FrobeniusClass classify(const ComultData& comult);

/// Relabel so that old basis element i becomes new basis element perm[i].
AlgebraData permute_basis(const AlgebraData& algebra, std::span<const std::size_t> perm);
ComultData permute_basis(const ComultData& comult, AlgebraPtr permuted_algebra,
                         std::span<const std::size_t> perm);
Vector permute_vector(const Vector& v, std::size_t dim, std::size_t arity,
                      std::span<const std::size_t> perm);

}  // namespace ncfrob
