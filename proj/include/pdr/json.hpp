#pragma once

#include <json.hpp>

namespace pdr {

/// Insertion-ordered JSON so emitted objects keep a stable field order.
using Json = nlohmann::ordered_json;

}  // namespace pdr
