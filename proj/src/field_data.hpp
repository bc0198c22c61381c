#pragma once

#include <optional>
#include <string_view>

namespace cagekit::detail {

// Raw JSON of a shipped number-field descriptor (file stem of data/fields/*.json).
std::optional<std::string_view> embedded_field_data(std::string_view name);

}  // namespace cagekit::detail
