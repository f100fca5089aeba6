#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "rgra/basis.hpp"
#include "rgra/complex.hpp"
#include "rgra/def.hpp"
#include "rgra/formal_sum.hpp"
#include "rgra/gc.hpp"
#include "rgra/qlb.hpp"
#include "rgra/reduce.hpp"
#include "rgra/sparse.hpp"

namespace rgra {

using json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

json to_json(const Signature& s);
Signature signature_from_json(const json& j);

json to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const json& j);

json to_json(const Basis& b);
Basis basis_from_json(const json& j);

// Triplet text: a header "rows cols nnz" and one "row col value" line per
// entry, column-major.
std::string to_triplets(const SparseMatrix& m);
SparseMatrix matrix_from_triplets(const std::string& text);

// A cohomology table with the scalar domains used.
struct CohomologyTable {
    std::vector<CohomologyEntry> entries;
    std::vector<std::uint32_t> primes;
    // Degrees that could not be computed within caps.
    std::vector<int> gaps;
};

json to_json(const CohomologyTable& t);
CohomologyTable table_from_json(const json& j);
// Columns d,m,n,g,degree,dimension,verified.
std::string to_csv(const CohomologyTable& t, bool header = true);

json to_json(const std::vector<Q>& v);
std::vector<Q> rationals_from_json(const json& j);

json to_json(const GraphReduction& r);
json to_json(const RelationReport& r);
json to_json(const OrdinaryGraph& g);
OrdinaryGraph ordinary_graph_from_json(const json& j);
json to_json(const DecoratedGraph& g);
json to_json(const DefElement& x);
json to_json(const TheoremCReport& r);

}  // namespace rgra
