#pragma once

// JSON exchange format. Rationals are written as strings ("p/q" or "p");
// integer JSON numbers are accepted on input. Sparse arrays:
//   mult    [[i, j, k, c]]  e_i e_j has coefficient c at e_k
//   unit    [[k, c]]
//   delta   [[i, t, c]]     t = p * dim + q indexes e_p (x) e_q
//   counit  [[k, c]]
//   antipode [[i, j, c]]    S(e_i) has coefficient c at e_j
// Entries are written in canonical (sorted) order so export is
// deterministic.

#include <string>

#include <json.hpp>

#include "ncfrob/finalg.hpp"
#include "ncfrob/groupoid.hpp"
#include "ncfrob/whopf.hpp"

namespace ncfrob::io {

using Json = nlohmann::ordered_json;

/// Schema violation; the message starts with a JSON pointer to the
/// offending value.
class SchemaError : public InputError {
public:
    SchemaError(const std::string& where, const std::string& what) : InputError(where + ": " + what) {}
};

Json to_json(const AlgebraData& a);
Json to_json(const ComultData& c);
Json to_json(const whopf::WeakHopfData& h);
Json to_json(const Groupoid& g);

AlgebraPtr algebra_from_json(const Json& j);
ComultData comult_from_json(const Json& j);
whopf::WeakHopfData weak_hopf_from_json(const Json& j);
Groupoid groupoid_from_json(const Json& j);

/// Throws InputError with line and column on malformed text.
Json parse(const std::string& text);
/// Two-space indented, trailing newline.
std::string dump(const Json& j);

/// Reads a file, or standard input for "-".
std::string read_input(const std::string& path);

}  // namespace ncfrob::io
