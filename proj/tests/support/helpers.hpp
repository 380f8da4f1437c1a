#pragma once

#include "oracles.hpp"

#include "ultrafree/bitset.hpp"
#include "ultrafree/graph.hpp"
#include "ultrafree/rational.hpp"

#include <string>
#include <vector>

namespace testing_support {

inline ultrafree::Rational q(const std::string& s) { return ultrafree::parse_rational(s); }

inline oracle::Mask to_mask(const std::vector<std::size_t>& members)
{
    oracle::Mask m = 0;
    for (auto v : members)
        m |= oracle::Mask{1} << v;
    return m;
}

inline oracle::Mask to_mask(const ultrafree::Bitset& b) { return to_mask(b.members()); }

inline ultrafree::Graph triangle_plus_isolated()
{
    return ultrafree::Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace testing_support
