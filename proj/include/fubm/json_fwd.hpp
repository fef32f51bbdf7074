#pragma once

#include <json.hpp>

namespace fubm {

/// Insertion-ordered JSON so emitted key order is fixed.
using Json = nlohmann::ordered_json;

}  // namespace fubm
