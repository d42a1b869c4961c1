#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cdgmf/io.hpp"

namespace cdgmf::fixtures {

// Named library outputs whose serialization is frozen under tests/golden/serialize.
std::vector<std::pair<std::string, Json>> serialize_fixtures();

}  // namespace cdgmf::fixtures
