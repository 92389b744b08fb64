#pragma once

#include <cstdint>
#include <vector>

namespace ics {

/// Bin Packing decision instance: can the items be partitioned into `bins`
/// parts each summing to at most `volume`? Requires 1 <= bins <= items.
struct BinPackingInstance {
    std::int64_t volume = 1;
    std::vector<std::int64_t> items;
    int bins = 1;

    friend bool operator==(const BinPackingInstance&, const BinPackingInstance&) = default;
};

/// A witness partition: bin k holds item indices partition[k] (0-based into
/// `items`); some bins may be empty.
using BinPartition = std::vector<std::vector<std::size_t>>;

}  // namespace ics
