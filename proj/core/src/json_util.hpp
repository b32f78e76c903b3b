#ifndef ALGDIAG_SRC_JSON_UTIL_HPP
#define ALGDIAG_SRC_JSON_UTIL_HPP

#include <string>

#include "json.hpp"

#include "algdiag/field.hpp"

namespace algdiag::detail {

nlohmann::ordered_json field_to_json(const Field& f);
const Field& field_from_json(const nlohmann::ordered_json& j, const std::string& path);

}  // namespace algdiag::detail

#endif
