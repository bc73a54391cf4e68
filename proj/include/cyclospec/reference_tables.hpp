#pragma once

// Published coefficient tables of L_1..L_9 and A_3..A_11, ascending from the
// constant term. Embedded so that `tables --check` runs offline.

#include <array>

namespace cyclospec::reference {

inline constexpr long kPathFirst = 1;
inline constexpr std::array<std::array<long, 10>, 9> kPathTable{{
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, -2, 0, 1, 0, 0, 0, 0, 0, 0},
    {1, 0, -3, 0, 1, 0, 0, 0, 0, 0},
    {0, 3, 0, -4, 0, 1, 0, 0, 0, 0},
    {-1, 0, 6, 0, -5, 0, 1, 0, 0, 0},
    {0, -4, 0, 10, 0, -6, 0, 1, 0, 0},
    {1, 0, -10, 0, 15, 0, -7, 0, 1, 0},
    {0, 5, 0, -20, 0, 21, 0, -8, 0, 1},
}};

inline constexpr long kCycleFirst = 3;
inline constexpr std::array<std::array<long, 12>, 9> kCycleTable{{
    {-2, -3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, -4, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {-2, 5, 0, -5, 0, 1, 0, 0, 0, 0, 0, 0},
    {-4, 0, 9, 0, -6, 0, 1, 0, 0, 0, 0, 0},
    {-2, -7, 0, 14, 0, -7, 0, 1, 0, 0, 0, 0},
    {0, 0, -16, 0, 20, 0, -8, 0, 1, 0, 0, 0},
    {-2, 9, 0, -30, 0, 27, 0, -9, 0, 1, 0, 0},
    {-4, 0, 25, 0, -50, 0, 35, 0, -10, 0, 1, 0},
    {-2, -11, 0, 55, 0, -77, 0, 44, 0, -11, 0, 1},
}};

}  // namespace cyclospec::reference
