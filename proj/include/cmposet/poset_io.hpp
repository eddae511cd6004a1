#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cmposet/connectivity.hpp"
#include "cmposet/order_complex.hpp"
#include "cmposet/poset.hpp"

namespace cmposet {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text form:
///   poset <n>
///   <label>\t<height or ->      (n lines)
///   hasse <m>
///   <a> <b>                     (m lines, a covered by b)
/// Labels must not contain tabs or newlines.
std::string write_text(const FinitePoset& p);
/// Parses write_text output; the order is rebuilt from the Hasse edges.
FinitePoset read_text(const std::string& text);

nlohmann::json to_json(const FinitePoset& p);
FinitePoset poset_from_json(const nlohmann::json& j);

inline constexpr std::size_t default_dot_limit = 400;

/// Hasse diagram for graphviz, bottom to top. Throws FormatError above
/// `max_elements`.
std::string write_dot(const FinitePoset& p, std::size_t max_elements = default_dot_limit);

/// "<rows> <cols> <nonzeros>" then one "<row> <col> <value>" line per entry,
/// column-major.
std::string write_triplets(const SparseIntMatrix& m);
SparseIntMatrix read_triplets(const std::string& text);

/// Every boundary matrix of the augmented chain complex, each preceded by
/// "# boundary <k>".
std::string write_complex(const OrderComplex& k);

nlohmann::json to_json(const HomologyProfile& h);
nlohmann::json to_json(const ConnectivityVerdict& v);
nlohmann::json to_json(const CohenMacaulayReport& r);

}  // namespace cmposet
