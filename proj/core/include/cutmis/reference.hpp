#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace cutmis::reference {

// Limiting normalized SK ground-state energy E / n^{3/2}.
inline constexpr double kParisi = -0.763166;
// Naive greedy limit, −(2/3)√(2/π).
inline constexpr double kPiSg = -0.5319230405352436;
// Rough SDP estimate, −2/π.
inline constexpr double kPiSdp = -0.6366197723675814;

struct RsbEntry {
  int degree;
  double density;
};

// 1RSB independence densities of random d-regular graphs.
inline constexpr std::array<RsbEntry, 9> kRsbTable{{
    {20, 0.1948},
    {30, 0.1529},
    {40, 0.1273},
    {50, 0.1098},
    {60, 0.0970},
    {70, 0.0871},
    {80, 0.0792},
    {90, 0.0728},
    {100, 0.0674},
}};

std::optional<double> rsb_density(int degree);

struct CodingInstance {
  std::string_view name;
  int vertices;
  int edges;  // as published; the 1zc rows count every edge twice
  int alpha_lower;
  int alpha_upper;  // equal to alpha_lower when α is known
  int best_min;     // best of 50 MIN runs, published
  int best_circut;  // best of 50 rank-2 runs, published
  int best_sa;      // best of 50 SA runs, published
};

inline constexpr std::array<CodingInstance, 33> kCodingTable{{
    {"1dc.64", 64, 543, 10, 10, 10, 10, 10},
    {"1dc.128", 128, 1471, 16, 16, 15, 16, 16},
    {"1dc.256", 256, 3839, 30, 30, 26, 30, 30},
    {"1dc.512", 512, 9727, 52, 52, 43, 52, 52},
    {"1dc.1024", 1024, 24063, 94, 94, 77, 93, 94},
    {"1dc.2048", 2048, 58367, 172, 172, 131, 171, 172},
    {"1dc.4096", 4096, 139263, 316, 320, 236, 315, 316},
    {"2dc.128", 128, 5173, 5, 5, 5, 5, 5},
    {"2dc.256", 256, 17183, 7, 7, 7, 7, 7},
    {"2dc.512", 512, 54895, 11, 11, 10, 10, 11},
    {"2dc.1024", 1024, 169162, 16, 16, 15, 14, 16},
    {"2dc.2048", 2048, 504451, 24, 24, 21, 21, 24},
    {"1tc.8", 8, 6, 4, 4, 4, 4, 4},
    {"1tc.16", 16, 22, 8, 8, 8, 8, 8},
    {"1tc.32", 32, 68, 12, 12, 12, 12, 12},
    {"1tc.64", 64, 192, 20, 20, 20, 20, 20},
    {"1tc.128", 128, 512, 38, 38, 38, 38, 38},
    {"1tc.256", 256, 1312, 63, 63, 61, 62, 63},
    {"1tc.512", 512, 3264, 110, 110, 106, 110, 110},
    {"1tc.1024", 1024, 7936, 196, 196, 189, 187, 196},
    {"1tc.2048", 2048, 18944, 352, 352, 331, 331, 352},
    {"1et.64", 64, 264, 18, 18, 18, 18, 18},
    {"1et.128", 128, 672, 28, 28, 28, 28, 28},
    {"1et.256", 256, 1664, 50, 50, 50, 50, 50},
    {"1et.512", 512, 4032, 100, 100, 96, 98, 100},
    {"1et.1024", 1024, 9600, 171, 171, 155, 167, 171},
    {"1et.2048", 2048, 22528, 316, 316, 293, 296, 316},
    {"1zc.128", 128, 2240, 18, 18, 16, 18, 18},
    {"1zc.256", 256, 5632, 36, 36, 36, 36, 36},
    {"1zc.512", 512, 13824, 62, 62, 58, 62, 62},
    {"1zc.1024", 1024, 33280, 112, 117, 103, 108, 112},
    {"1zc.2048", 2048, 78848, 198, 210, 181, 178, 198},
    {"1zc.4096", 4096, 184320, 379, 410, 329, 322, 379},
}};

const CodingInstance* find_coding_instance(std::string_view name);

// Number of distinct edges in the simple graph behind a published row.
int simple_edge_count(const CodingInstance& inst);

// R(n) = 2 log2 n − 2 log2 log2 n + 2 log2 e − 1, for n ≥ 3.
double formula_r(double n);

// ρ(d̄) = (2/d̄)(ln d̄ − ln ln d̄ − ln 2 + 1), for d̄ > e.
double formula_sparse_density(double dbar);

}  // namespace cutmis::reference
