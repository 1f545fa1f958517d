#pragma once

// Endomorphism algebras B_{n,l}(m_0, ..., m_{n-1}) of multiplicity-weighted
// sums of indecomposable projectives over the cyclic Nakayama algebra
// kQ_(n)/R^l, with their non-counital Frobenius comultiplication.
//
// Basis element X[i,j]^(r,s) is pre-composition by the length-j path
// starting at vertex i, mapping copy s of P_{i+j} to copy r of P_i.
// Vertex indices are always reduced mod n into [0, n).

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncfrob/finalg.hpp"

namespace ncfrob::nsy {

struct Params {
    std::size_t n = 1;
    std::size_t ell = 1;
    std::vector<std::size_t> mults{1};

    /// Multiplicity at a vertex given by any integer, reduced mod n.
    std::size_t mult(long long vertex) const;
    std::size_t vertex(long long v) const;
};

/// Throws InputError unless n >= 1, ell >= 1, mults.size() == n, all m_i >= 1.
void validate(const Params& p);

/// Parses "n=2 ell=2 m=1,1" style tokens.
Params parse_params(const std::vector<std::string>& tokens);
std::string format_params(const Params& p);

struct BasisIndex {
    std::size_t i = 0;  ///< start vertex
    std::size_t j = 0;  ///< path length
    std::size_t r = 0;  ///< copy of P_i
    std::size_t s = 0;  ///< copy of P_{i+j}
    auto operator<=>(const BasisIndex&) const = default;
};

/// Basis vector alpha_{i,k}^r of the direct sum of the P_i^r.
struct PathIndex {
    std::size_t i = 0;
    std::size_t k = 0;
    std::size_t r = 0;
    auto operator<=>(const PathIndex&) const = default;
};

/// Rendered as X[i,j]^(r,s).
std::string label(const BasisIndex& x);

/// Canonical (lexicographic i, j, r, s) enumeration of the X-basis.
class Basis {
public:
    explicit Basis(const Params& p);

    std::size_t size() const { return elements_.size(); }
    const BasisIndex& operator[](std::size_t k) const { return elements_.at(k); }
    const std::vector<BasisIndex>& elements() const { return elements_; }
    /// Position of X[i,j]^(r,s); vertex i is taken mod n.
    std::optional<std::size_t> find(const BasisIndex& x) const;
    std::size_t at(std::size_t i, std::size_t j, std::size_t r, std::size_t s) const;

private:
    std::size_t n_ = 1;
    std::vector<BasisIndex> elements_;
    std::map<BasisIndex, std::size_t> positions_;
};

struct Algebra {
    Params params;
    Basis basis;
    AlgebraPtr data;
};

/// sum_i sum_j m_i m_{i+j}
std::size_t dimension(const Params& p);
/// i -> i + l - 1 mod n
std::vector<std::size_t> nakayama_permutation(const Params& p);
/// m_i == m_{i+l-1} for all i
bool is_frobenius(const Params& p);

/// Structure constants from the closed-form product rule.
Algebra build(const Params& p);

/// Independent construction: each X acts as an explicit endomorphism of the
/// path space, products are matrix compositions, and results are read back
/// into the X-basis. Throws InternalError if a product leaves the X-span.
AlgebraData build_oracle(const Params& p);

/// Path-space endomorphism of a basis element (rows/cols indexed by the
/// canonical PathIndex order).
Matrix path_endomorphism(const Params& p, const BasisIndex& x);
std::vector<PathIndex> path_basis(const Params& p);

/// The closed-form non-counital Frobenius comultiplication; counit empty.
ComultData delta(const Algebra& a);

/// eps(X[i,j]^(r,s)) = [j == l-1][r == s], regardless of whether it is a counit.
Vector formula_counit(const Algebra& a);
/// formula_counit when is_frobenius, otherwise nullopt.
std::optional<Vector> epsilon(const Algebra& a);

/// Delta(1) as a Casimir element.
CasimirElement casimir(const Algebra& a);

}  // namespace ncfrob::nsy
