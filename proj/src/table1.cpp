#include "gpd/table1.hpp"

#include <array>

namespace gpd {

namespace {

// year, B, sB, x_t, alpha, s_alpha, beta, s_beta, Gini, u, Gini*, s_Gini*, u*, s_u*
constexpr std::array<Table1Row, 24> kRows{{
    {1981, 0.342, 0.016, 7.533, 2.839, 0.109, 438, 98, 0.574, 87.7, 0.613, 0.088, 82.5, 5.1},
    {1982, 0.342, 0.015, 7.473, 2.677, 0.057, 312, 38, 0.581, 87.1, 0.615, 0.049, 82.0, 3.2},
    {1983, 0.330, 0.010, 6.910, 2.636, 0.047, 261, 25, 0.584, 85.5, 0.611, 0.039, 81.6, 2.8},
    {1984, 0.332, 0.013, 7.388, 2.839, 0.109, 434, 96, 0.576, 87.2, 0.611, 0.087, 82.4, 5.1},
    {1985, 0.329, 0.010, 7.490, 2.656, 0.052, 311, 34, 0.589, 85.8, 0.614, 0.044, 81.9, 3.0},
    {1986, 0.344, 0.013, 7.112, 2.567, 0.034, 229, 17, 0.580, 85.2, 0.615, 0.031, 81.6, 2.5},
    {1987, 0.343, 0.016, 7.626, 2.724, 0.070, 354, 52, 0.592, 85.9, 0.615, 0.059, 82.2, 3.7},
    {1988, 0.324, 0.015, 8.140, 2.874, 0.122, 576, 149, 0.609, 85.4, 0.614, 0.102, 82.6, 5.8},
    {1989, 0.317, 0.010, 7.856, 2.777, 0.086, 448, 81, 0.628, 82.5, 0.612, 0.072, 82.3, 4.3},
    {1990, 0.335, 0.016, 8.074, 2.636, 0.047, 335, 36, 0.605, 85.9, 0.618, 0.044, 81.8, 3.0},
    {1992, 0.364, 0.019, 7.635, 2.636, 0.047, 283, 30, 0.578, 87.0, 0.619, 0.044, 81.8, 2.9},
    {1993, 0.330, 0.008, 7.674, 2.567, 0.034, 270, 19, 0.599, 84.1, 0.616, 0.030, 81.6, 2.4},
    {1995, 0.333, 0.012, 7.887, 2.777, 0.086, 432, 78, 0.596, 85.9, 0.615, 0.072, 82.3, 4.3},
    {1996, 0.347, 0.020, 8.163, 2.749, 0.077, 421, 71, 0.598, 86.7, 0.619, 0.068, 82.1, 4.1},
    {1997, 0.338, 0.016, 7.935, 2.617, 0.043, 310, 30, 0.598, 86.1, 0.618, 0.040, 81.8, 2.8},
    {1998, 0.326, 0.009, 7.628, 2.677, 0.057, 338, 40, 0.597, 84.5, 0.614, 0.048, 81.9, 3.2},
    {1999, 0.331, 0.013, 7.811, 2.777, 0.086, 426, 77, 0.590, 86.0, 0.614, 0.072, 82.3, 4.3},
    {2001, 0.335, 0.011, 7.774, 2.724, 0.070, 375, 55, 0.592, 85.2, 0.615, 0.059, 82.1, 3.7},
    {2002, 0.339, 0.015, 7.878, 2.777, 0.086, 424, 77, 0.586, 86.4, 0.615, 0.073, 82.3, 4.3},
    {2003, 0.333, 0.009, 7.374, 2.777, 0.086, 381, 67, 0.579, 85.4, 0.612, 0.070, 82.3, 4.2},
    {2004, 0.342, 0.015, 7.653, 3.104, 0.226, 775, 358, 0.582, 87.2, 0.611, 0.175, 83.1, 9.7},
    {2005, 0.326, 0.009, 7.403, 2.839, 0.109, 444, 97, 0.580, 86.2, 0.610, 0.087, 82.4, 5.0},
    {2006, 0.327, 0.014, 7.910, 3.749, 0.561, 3295, 3824, 0.581, 87.9, 0.605, 0.408, 84.2, 22.4},
    {2007, 0.334, 0.009, 6.934, 2.839, 0.109, 385, 82, 0.572, 85.7, 0.608, 0.084, 82.3, 4.9},
}};

}  // namespace

std::span<const Table1Row> table1_rows() noexcept { return kRows; }

}  // namespace gpd
