#pragma once

// Shared test fixtures and hand-transcribed reference data.

#include <string>
#include <vector>

#include "ncfrob/finalg.hpp"
#include "ncfrob/groupoid.hpp"
#include "ncfrob/nsy.hpp"
#include "ncfrob/qtg.hpp"
#include "ncfrob/whopf.hpp"

namespace testsupport {

using namespace ncfrob;

/// "X01^10" -> "X[0,1]^(1,0)"; other labels pass through.
std::string expand_label(const std::string& compact);

/// Parses "X00^00 ⊗ X11^00 + X01^00 ⊗ X00^00" (or "0") into a vector over
/// labels^arity. Coefficients are always 1 in the reference data.
Vector parse_combination(const std::string& text, const AlgebraData& a, std::size_t arity);

struct ReferenceDelta {
    nsy::Params params;
    std::string element;   ///< compact label
    std::string expected;  ///< compact tensor combination
};

/// Every comultiplication value printed in the worked examples.
std::vector<ReferenceDelta> reference_deltas();

/// Multiplication tables printed for B_{2,2}(1,1) and B_{2,2}(2,1), in compact
/// labels, row-major with "0" for zero.
std::vector<std::vector<std::string>> reference_table_b22_11();
std::vector<std::vector<std::string>> reference_table_b22_21();

/// The grid {1 <= n <= nmax, 1 <= l <= lmax, 1 <= m_i <= mmax}.
std::vector<nsy::Params> sweep_grid(std::size_t nmax, std::size_t lmax, std::size_t mmax);

struct NamedHopf {
    std::string name;
    whopf::WeakHopfData hopf;
};

/// Groupoid algebras of every small groupoid fixture.
std::vector<NamedHopf> groupoid_fixtures();
/// k[Z/n] for 1 <= n <= 4.
std::vector<NamedHopf> group_fixtures();

struct NamedQTG {
    std::string name;
    qtg::QTGInput input;
};

/// (k, M2), (k, k[Z/2]), (k[Z/2], k[Z/2]) with trivial action, and
/// k[Z/2] acting on k[Z/3] by inversion.
std::vector<NamedQTG> qtg_fixtures();

/// All of the above, with QTGs built.
std::vector<NamedHopf> all_weak_hopf_fixtures();

/// Determinant by cofactor expansion; independent of the row reducer.
Scalar determinant(const Matrix& m);

}  // namespace testsupport
