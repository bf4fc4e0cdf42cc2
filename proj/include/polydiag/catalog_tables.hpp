#pragma once
// Raw catalog data, transcribed as text and parsed by catalog.hpp.
// Affine entries use the parameter t, e.g. "1/3-2t", "-1/6+4t".

#include <array>
#include <string_view>

namespace polydiag::catalog::tables {

struct FamilyRow {
  std::array<std::string_view, 6> uvwxyz;
  std::string_view t_min;
  std::string_view t_max;
};

// One-parameter families of three concurrent diagonals, columns U V W X Y Z.
inline constexpr std::array<FamilyRow, 4> kFamilies{{
    {{"1/6", "t", "1/3-2t", "1/3+t", "t", "1/6-t"}, "0", "1/6"},
    {{"1/6", "1/2-3t", "t", "1/6-t", "2t", "1/6+t"}, "0", "1/6"},
    {{"1/6", "1/6-2t", "2t", "1/6-2t", "t", "1/2+t"}, "0", "1/12"},
    {{"1/3-4t", "t", "1/3+t", "1/6-2t", "3t", "1/6+t"}, "0", "1/12"},
}};

struct SporadicRow {
  int denominator;
  std::array<std::string_view, 6> uvwxyz;
  std::string_view relation_type;
};

// The isolated solutions, grouped by least common denominator.
inline constexpr std::array<SporadicRow, 65> kSporadics{{
    // denominator 30
    {30, {"1/10", "2/15", "3/10", "2/15", "1/6", "1/6"}, "2(R_5:R_3)"},
    {30, {"1/15", "1/15", "7/15", "1/15", "1/10", "7/30"}, "2(R_5:R_3)"},
    {30, {"1/30", "7/30", "4/15", "1/15", "1/10", "3/10"}, "2(R_5:R_3)"},
    {30, {"1/30", "1/10", "7/15", "1/15", "1/15", "4/15"}, "2(R_5:R_3)"},
    {30, {"1/30", "1/15", "19/30", "1/15", "1/10", "1/10"}, "2(R_5:R_3)"},
    {30, {"1/15", "1/6", "4/15", "1/10", "1/10", "3/10"}, "(R_5:R_3)+2R_3"},
    {30, {"1/15", "2/15", "11/30", "1/10", "1/6", "1/6"}, "(R_5:R_3)+2R_3"},
    {30, {"1/30", "1/6", "13/30", "1/10", "2/15", "2/15"}, "(R_5:R_3)+2R_3"},
    {30, {"1/30", "1/30", "7/10", "1/30", "1/15", "2/15"}, "(R_5:R_3)+2R_3"},
    {30, {"1/30", "7/30", "3/10", "1/15", "2/15", "7/30"}, "R_5+R_3+2R_2"},
    {30, {"1/30", "1/6", "11/30", "1/15", "1/10", "4/15"}, "R_5+R_3+2R_2"},
    {30, {"1/30", "1/10", "13/30", "1/30", "2/15", "4/15"}, "R_5+R_3+2R_2"},
    {30, {"1/30", "1/15", "8/15", "1/30", "1/10", "7/30"}, "R_5+R_3+2R_2"},
    // denominator 42
    {42, {"1/14", "5/42", "5/14", "2/21", "5/42", "5/21"}, "(R_7:5R_3)"},
    {42, {"1/21", "4/21", "13/42", "1/14", "1/6", "3/14"}, "(R_7:5R_3)"},
    {42, {"1/42", "3/14", "5/14", "1/21", "1/6", "4/21"}, "(R_7:5R_3)"},
    {42, {"1/42", "1/6", "19/42", "1/14", "2/21", "4/21"}, "(R_7:5R_3)"},
    {42, {"1/42", "1/6", "13/42", "1/21", "1/14", "8/21"}, "(R_7:5R_3)"},
    {42, {"1/42", "1/21", "13/21", "1/42", "1/14", "3/14"}, "(R_7:5R_3)"},
    // denominator 60
    {60, {"1/20", "1/12", "29/60", "1/15", "1/10", "13/60"}, "2(R_5:R_3)"},
    {60, {"1/20", "1/12", "9/20", "1/15", "1/12", "4/15"}, "2(R_5:R_3)"},
    {60, {"1/20", "1/12", "5/12", "1/20", "1/10", "3/10"}, "2(R_5:R_3)"},
    {60, {"1/60", "4/15", "3/10", "1/20", "1/12", "17/60"}, "2(R_5:R_3)"},
    {60, {"1/60", "13/60", "9/20", "1/12", "1/10", "2/15"}, "2(R_5:R_3)"},
    {60, {"1/60", "13/60", "5/12", "1/20", "2/15", "1/6"}, "2(R_5:R_3)"},
    {60, {"1/12", "1/6", "17/60", "2/15", "3/20", "11/60"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/12", "2/15", "19/60", "1/10", "3/20", "13/60"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/15", "11/60", "13/60", "1/12", "1/10", "7/20"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/20", "11/60", "3/10", "1/12", "7/60", "4/15"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/20", "1/10", "23/60", "1/15", "1/12", "19/60"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/30", "7/60", "19/60", "1/20", "1/15", "5/12"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/30", "1/12", "7/12", "1/15", "1/10", "2/15"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/30", "1/20", "11/20", "1/30", "1/15", "4/15"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/60", "3/10", "7/20", "1/12", "7/60", "2/15"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/60", "4/15", "23/60", "1/12", "1/10", "3/20"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/60", "7/30", "5/12", "1/15", "7/60", "3/20"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/60", "13/60", "11/30", "1/20", "1/12", "4/15"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/60", "1/6", "31/60", "1/15", "1/10", "2/15"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/60", "1/6", "5/12", "1/20", "1/15", "17/60"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/60", "2/15", "9/20", "1/30", "1/12", "17/60"}, "(R_5:3R_3)+2R_2"},
    {60, {"1/60", "1/10", "31/60", "1/30", "1/15", "4/15"}, "(R_5:3R_3)+2R_2"},
    // denominator 84
    {84, {"1/12", "3/14", "19/84", "11/84", "13/84", "4/21"}, "(R_7:R_3)+2R_2"},
    {84, {"1/14", "11/84", "23/84", "1/12", "2/21", "29/84"}, "(R_7:R_3)+2R_2"},
    {84, {"1/21", "13/84", "23/84", "1/14", "1/12", "31/84"}, "(R_7:R_3)+2R_2"},
    {84, {"1/42", "1/12", "7/12", "1/21", "1/14", "4/21"}, "(R_7:R_3)+2R_2"},
    {84, {"1/84", "25/84", "5/14", "5/84", "1/12", "4/21"}, "(R_7:R_3)+2R_2"},
    {84, {"1/84", "5/21", "5/12", "5/84", "1/14", "17/84"}, "(R_7:R_3)+2R_2"},
    {84, {"1/84", "3/14", "37/84", "1/21", "1/12", "17/84"}, "(R_7:R_3)+2R_2"},
    {84, {"1/84", "1/6", "43/84", "1/21", "1/14", "4/21"}, "(R_7:R_3)+2R_2"},
    // denominator 90
    {90, {"1/18", "13/90", "7/18", "11/90", "2/15", "7/45"}, "(R_5:R_3)+2R_3"},
    {90, {"1/45", "19/90", "16/45", "1/18", "1/10", "23/90"}, "(R_5:R_3)+2R_3"},
    {90, {"1/90", "23/90", "31/90", "2/45", "1/15", "5/18"}, "(R_5:R_3)+2R_3"},
    {90, {"1/90", "17/90", "47/90", "1/18", "4/45", "2/15"}, "(R_5:R_3)+2R_3"},
    // denominator 120
    {120, {"13/120", "3/20", "31/120", "2/15", "19/120", "23/120"}, "(R_5:R_3)+3R_2"},
    {120, {"1/12", "19/120", "29/120", "1/10", "13/120", "37/120"}, "(R_5:R_3)+3R_2"},
    {120, {"1/20", "23/120", "29/120", "1/15", "13/120", "41/120"}, "(R_5:R_3)+3R_2"},
    {120, {"1/60", "13/120", "73/120", "1/20", "1/12", "2/15"}, "(R_5:R_3)+3R_2"},
    {120, {"1/120", "7/20", "43/120", "7/120", "11/120", "2/15"}, "(R_5:R_3)+3R_2"},
    {120, {"1/120", "3/10", "49/120", "7/120", "1/12", "17/120"}, "(R_5:R_3)+3R_2"},
    {120, {"1/120", "4/15", "53/120", "1/20", "11/120", "17/120"}, "(R_5:R_3)+3R_2"},
    {120, {"1/120", "13/60", "61/120", "1/20", "1/12", "2/15"}, "(R_5:R_3)+3R_2"},
    // denominator 210
    {210, {"1/15", "41/210", "8/35", "1/14", "31/210", "61/210"}, "(R_7:(R_5:2R_3))"},
    {210, {"13/210", "1/10", "83/210", "1/14", "4/35", "9/35"}, "(R_7:(R_5:2R_3))"},
    {210, {"1/35", "2/15", "97/210", "1/14", "17/210", "47/210"}, "(R_7:(R_5:2R_3))"},
    {210, {"1/210", "3/14", "121/210", "11/210", "1/15", "3/35"}, "(R_7:(R_5:2R_3))"},
}};

// Four diagonals through one point: eight arcs in counterclockwise order.
struct EightRow {
  std::array<std::string_view, 8> arcs;
  std::string_view t_min;
  std::string_view t_max;
};

inline constexpr std::array<EightRow, 12> kFourDiagonalFamilies{{
    {{"t", "t", "t", "1/6-2t", "1/6", "1/3+t", "1/6", "1/6-2t"}, "0", "1/12"},
    {{"t", "1/6-t", "1/6-t", "1/6-t", "t", "1/6", "1/6+t", "1/6"}, "0", "1/6"},
    {{"1/6-4t", "2t", "t", "3t", "1/6-4t", "1/6", "1/6+t", "1/3+t"}, "0", "1/24"},
    {{"2t", "1/2-t", "2t", "1/6-2t", "t", "1/6-t", "t", "1/6-2t"}, "0", "1/12"},
    {{"1/3-4t", "1/6+t", "1/2-3t", "-1/6+4t", "1/6-2t", "t", "1/6-t", "-1/6+4t"}, "1/24", "1/12"},
    {{"2t", "t", "3t", "1/6-2t", "1/6", "1/6-t", "1/3-t", "1/6-2t"}, "0", "1/12"},
    {{"t", "t", "2t", "1/3-t", "1/6", "1/6-t", "1/6-t", "1/6-t"}, "0", "1/6"},
    {{"1/3-4t", "1/6", "t", "t", "1/6-2t", "1/3-2t", "3t", "3t"}, "0", "1/12"},
    {{"2t", "1/3-2t", "1/6-t", "1/6-t", "1/6", "1/6", "t", "t"}, "0", "1/6"},
    {{"1/3-4t", "2t", "t", "t", "1/6-2t", "1/6", "1/6+t", "1/6+t"}, "0", "1/12"},
    {{"1/3-4t", "2t", "1/6-t", "t", "1/6-2t", "2t", "1/3-t", "3t"}, "0", "1/12"},
    {{"2t", "1/6-t", "t", "1/6-t", "t", "1/6-t", "2t", "1/2-3t"}, "0", "1/6"},
}};

// Five diagonals through one point: ten arcs in counterclockwise order.
struct TenRow {
  std::array<std::string_view, 10> arcs;
  std::string_view t_min;
  std::string_view t_max;
};

inline constexpr std::array<TenRow, 4> kFiveDiagonalFamilies{{
    {{"t", "2t", "1/6-2t", "1/6", "1/6-t", "1/6-t", "1/6", "1/6-2t", "2t", "t"}, "0", "1/12"},
    {{"t", "2t", "1/6-4t", "1/6", "1/6+t", "1/6+t", "1/6", "1/6-4t", "2t", "t"}, "0", "1/24"},
    {{"t", "1/6-2t", "-1/6+4t", "1/3-4t", "1/6+t", "1/6+t", "1/3-4t", "-1/6+4t", "1/6-2t", "t"},
     "1/24", "1/12"},
    {{"t", "1/6-2t", "2t", "1/3-4t", "3t", "3t", "1/3-4t", "2t", "1/6-2t", "t"}, "0", "1/12"},
}};

// Denominators allowed for configurations of four or more diagonals that lie
// outside the one-parameter families.
inline constexpr std::array<int, 18> kExceptionalDenominators{
    12, 18, 24, 30, 36, 42, 48, 60, 72, 84, 90, 96, 120, 168, 180, 210, 240, 420};

}  // namespace polydiag::catalog::tables
