#pragma once

// The printed tables of g_n(1,1) and g_n(1,-1), 0 <= n <= 21, exactly as
// published. The published g_n(1,1) row has two cells that disagree with
// the recurrence (n = 20 and n = 21); they are kept verbatim here so a
// comparison reports them rather than hiding them.

#include <array>
#include <cstdint>

namespace involution_lab::golden {

inline constexpr std::array<std::int64_t, 22> table1_g_plus{
    1,     1,      1,      2,      2,       6,       8,        26,        41,       145,       253,
    978,   1858,   7726,   15796,  69878,   152219,  711243,   1638323,   8039510,  99862594,  252998224,
};

inline constexpr std::array<std::int64_t, 22> table2_g_minus{
    1,  1,   0,    -1,   -1,  1,    2,     -1,     -6,    -2,     28,
    38, -140, -368, 732, 3308, -3934, -30398, 19232, 292814, -44946, -2973086,
};

}  // namespace involution_lab::golden
