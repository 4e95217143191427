#pragma once

#include "locdel/bits.hpp"

namespace locdel {

/// True iff sub can be obtained from sup by deleting bits (greedy scan).
inline bool is_subsequence(BitView sub, BitView sup) noexcept
{
    std::size_t i = 0;
    for (std::size_t j = 0; i < sub.size() && j < sup.size(); ++j)
        if (sub[i] == sup[j])
            ++i;
    return i == sub.size();
}

} // namespace locdel
